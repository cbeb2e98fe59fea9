//! Conversion between any two schemes through the token stream.
//!
//! Input is processed one line at a time, so memory is bounded by the
//! longest line. Newlines always pass through unchanged.

use std::fmt;
use std::io::{self, BufRead, Write};
use std::str::FromStr;

use thiserror::Error;

use crate::devanagari::{lex_devanagari_with, render_devanagari_into};
use crate::error::{ConversionError, ConvertErrors, Diagnostic, Reason};
use crate::iast::{lex_iast_with, lex_items, render_iast_into};
use crate::io_codec::{encode_uast_io_with, scan_ascii};
use crate::token::{Lexed, Mode};
use crate::uast::{lex_uast_with, render_uast_into, UastStyle};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Scheme {
    Uast,
    UastIo,
    Iast,
    Devanagari,
}

impl Scheme {
    pub const ALL: [Scheme; 4] = [Scheme::Uast, Scheme::UastIo, Scheme::Iast, Scheme::Devanagari];

    pub fn name(self) -> &'static str {
        match self {
            Scheme::Uast => "uast",
            Scheme::UastIo => "uast-io",
            Scheme::Iast => "iast",
            Scheme::Devanagari => "devanagari",
        }
    }
}

impl fmt::Display for Scheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown scheme {0:?} (expected uast, uast-io, iast or devanagari)")]
pub struct UnknownScheme(pub String);

impl FromStr for Scheme {
    type Err = UnknownScheme;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Scheme::ALL
            .into_iter()
            .find(|scheme| scheme.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| UnknownScheme(s.to_owned()))
    }
}

/// Tokens of one line of text in `scheme`.
///
/// UAST-IO is read as IAST: its groups are resolved and the letters go
/// through the IAST lexer, with offsets kept in the original text.
pub fn lex(text: &str, scheme: Scheme, mode: Mode) -> Result<Lexed, Diagnostic> {
    match scheme {
        Scheme::Uast => lex_uast_with(text, mode),
        Scheme::Iast => lex_iast_with(text, mode),
        Scheme::Devanagari => lex_devanagari_with(text, mode),
        Scheme::UastIo => {
            let mut lexed = Lexed::default();
            let items = scan_ascii(text, mode, &mut lexed.diagnostics)?;
            lex_items(text, &items, mode, &mut lexed)?;
            Ok(lexed)
        }
    }
}

/// Result of converting a whole text.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Conversion {
    pub output: String,
    /// Strict mode: one per failed line, whose output was dropped.
    /// Lenient mode: every recovered problem.
    pub errors: Vec<ConversionError>,
}

#[derive(Debug, Error)]
pub enum StreamError {
    #[error("I/O error: {0}")]
    Io(#[from] io::Error),
    #[error("invalid UTF-8 at byte {offset} (line {line})")]
    InvalidUtf8 { line: usize, offset: u64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct StreamSummary {
    pub lines: usize,
    pub failed_lines: usize,
}

/// A configured `from -> to` conversion.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Converter {
    pub from: Scheme,
    pub to: Scheme,
    pub mode: Mode,
    pub uast_style: UastStyle,
}

impl Converter {
    pub fn new(from: Scheme, to: Scheme) -> Self {
        Converter {
            from,
            to,
            mode: Mode::Strict,
            uast_style: UastStyle::Explicit,
        }
    }

    pub fn mode(mut self, mode: Mode) -> Self {
        self.mode = mode;
        self
    }

    pub fn uast_style(mut self, style: UastStyle) -> Self {
        self.uast_style = style;
        self
    }

    /// Converts one line (without its newline), appending to `out`.
    ///
    /// In strict mode an error leaves `out` untouched. In lenient mode the
    /// recovered problems are returned.
    pub fn convert_line(&self, line: &str, out: &mut String) -> Result<Vec<Diagnostic>, Diagnostic> {
        let Lexed {
            tokens,
            mut diagnostics,
        } = lex(line, self.from, self.mode)?;
        match self.to {
            Scheme::Uast => render_uast_into(&tokens, self.uast_style, out),
            Scheme::Iast => render_iast_into(&tokens, out),
            Scheme::Devanagari => {
                let mark = out.len();
                if let Err(e) = render_devanagari_into(&tokens, out) {
                    out.truncate(mark);
                    return Err(Diagnostic::new(
                        0,
                        format!("token {}", e.index),
                        Reason::DependentVowelWithoutConsonant,
                    ));
                }
            }
            Scheme::UastIo => {
                let mut iast = String::with_capacity(line.len() * 2);
                render_iast_into(&tokens, &mut iast);
                let (encoded, more) = encode_uast_io_with(&iast, self.mode)?;
                out.push_str(&encoded);
                diagnostics.extend(more);
            }
        }
        Ok(diagnostics)
    }

    pub fn convert_str(&self, text: &str) -> Conversion {
        let mut conversion = Conversion {
            output: String::with_capacity(text.len() * 2),
            errors: Vec::new(),
        };
        for (index, chunk) in text.split_inclusive('\n').enumerate() {
            let (line, newline) = match chunk.strip_suffix('\n') {
                Some(line) => (line, true),
                None => (chunk, false),
            };
            match self.convert_line(line, &mut conversion.output) {
                Ok(diags) => {
                    conversion
                        .errors
                        .extend(diags.into_iter().map(|d| ConversionError::at_line(index + 1, d)));
                    if newline {
                        conversion.output.push('\n');
                    }
                }
                Err(diag) => conversion
                    .errors
                    .push(ConversionError::at_line(index + 1, diag)),
            }
        }
        conversion
    }

    /// Streams `input` to `output` line by line.
    ///
    /// Lines that fail in strict mode are reported through `on_error` and
    /// left out of the output; processing continues with the next line.
    /// Invalid UTF-8 stops the stream.
    pub fn convert_stream<R, W, F>(
        &self,
        mut input: R,
        mut output: W,
        mut on_error: F,
    ) -> Result<StreamSummary, StreamError>
    where
        R: BufRead,
        W: Write,
        F: FnMut(ConversionError),
    {
        let mut summary = StreamSummary::default();
        let mut raw = Vec::new();
        let mut converted = String::new();
        let mut position = 0u64;
        loop {
            raw.clear();
            let read = input.read_until(b'\n', &mut raw)?;
            if read == 0 {
                break;
            }
            summary.lines += 1;
            let text = std::str::from_utf8(&raw).map_err(|e| StreamError::InvalidUtf8 {
                line: summary.lines,
                offset: position + e.valid_up_to() as u64,
            })?;
            position += read as u64;
            let (line, newline) = match text.strip_suffix('\n') {
                Some(line) => (line, true),
                None => (text, false),
            };
            converted.clear();
            match self.convert_line(line, &mut converted) {
                Ok(diags) => {
                    for d in diags {
                        on_error(ConversionError::at_line(summary.lines, d));
                    }
                    if newline {
                        converted.push('\n');
                    }
                    output.write_all(converted.as_bytes())?;
                }
                Err(d) => {
                    summary.failed_lines += 1;
                    on_error(ConversionError::at_line(summary.lines, d));
                }
            }
        }
        output.flush()?;
        Ok(summary)
    }
}

/// Converts `text` from one scheme to another.
///
/// Converting within one scheme canonicalizes: decomposed IAST is
/// composed, compact UAST gains its explicit vowels. In strict mode any
/// failed line makes the whole call fail with every error in input order.
pub fn convert(text: &str, from: Scheme, to: Scheme, mode: Mode) -> Result<String, ConvertErrors> {
    let conversion = Converter::new(from, to).mode(mode).convert_str(text);
    if mode == Mode::Strict && !conversion.errors.is_empty() {
        return Err(ConvertErrors(conversion.errors));
    }
    Ok(conversion.output)
}
