//! ASCII <-> IAST codec for `/key/` replacement groups.
//!
//! Besides the two string operations this module owns the scanners that
//! turn raw input into case-folded [`Item`]s, which the lexers consume.

use unicode_normalization::char::canonical_combining_class;
use unicode_normalization::UnicodeNormalization;

use crate::error::{Diagnostic, Reason};
use crate::tables::{ascii_key_of, ascii_to_codepoint};
use crate::token::Mode;

/// One scalar of folded input together with the span it came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct Item {
    pub ch: char,
    pub offset: usize,
    pub len: usize,
    /// Lenient mode only: the span failed to resolve and must be copied out.
    pub verbatim: bool,
}

impl Item {
    fn plain(ch: char, offset: usize, len: usize) -> Self {
        Item {
            ch,
            offset,
            len,
            verbatim: false,
        }
    }

    pub fn slice<'a>(&self, text: &'a str) -> &'a str {
        &text[self.offset..self.offset + self.len]
    }
}

/// Scans ASCII text, resolving `/key/` groups and folding ASCII case.
///
/// Groups pair strictly left to right and never extend past a newline.
/// In lenient mode non-ASCII scalars pass through unchanged and bad groups
/// become verbatim items.
pub(crate) fn scan_ascii(
    text: &str,
    mode: Mode,
    diagnostics: &mut Vec<Diagnostic>,
) -> Result<Vec<Item>, Diagnostic> {
    let bytes = text.as_bytes();
    let mut items = Vec::with_capacity(text.len());
    let mut pos = 0;
    while pos < bytes.len() {
        let b = bytes[pos];
        if b == b'/' {
            let close = bytes[pos + 1..]
                .iter()
                .position(|&c| c == b'/' || c == b'\n')
                .map(|i| pos + 1 + i)
                .filter(|&i| bytes[i] == b'/');
            let Some(close) = close else {
                let end = bytes[pos..]
                    .iter()
                    .position(|&c| c == b'\n')
                    .map_or(bytes.len(), |i| pos + i);
                let diag = Diagnostic::new(pos, &text[pos..end], Reason::UnterminatedGroup);
                if mode == Mode::Strict {
                    return Err(diag);
                }
                diagnostics.push(diag);
                items.push(Item {
                    ch: '/',
                    offset: pos,
                    len: 1,
                    verbatim: true,
                });
                pos += 1;
                continue;
            };
            let key = text[pos + 1..close].to_ascii_lowercase();
            match ascii_to_codepoint(&key) {
                Ok(cp) => items.push(Item::plain(cp, pos, close + 1 - pos)),
                Err(_) => {
                    let diag = Diagnostic::new(pos, &text[pos..=close], Reason::UnknownKey);
                    if mode == Mode::Strict {
                        return Err(diag);
                    }
                    diagnostics.push(diag);
                    items.push(Item {
                        ch: '/',
                        offset: pos,
                        len: close + 1 - pos,
                        verbatim: true,
                    });
                }
            }
            pos = close + 1;
        } else if b.is_ascii() {
            items.push(Item::plain(char::from(b.to_ascii_lowercase()), pos, 1));
            pos += 1;
        } else {
            let ch = text[pos..].chars().next().expect("char boundary");
            let len = ch.len_utf8();
            if mode == Mode::Strict {
                return Err(Diagnostic::new(pos, &text[pos..pos + len], Reason::NonAsciiInput));
            }
            items.push(Item::plain(ch, pos, len));
            pos += len;
        }
    }
    Ok(items)
}

/// Canonically composes and lowercases Unicode text, keeping the original
/// span of every produced scalar.
///
/// Composition runs per segment (a starter plus the combining marks after
/// it), which is exact NFC for Latin text.
pub(crate) fn scan_unicode(text: &str) -> Vec<Item> {
    let mut items = Vec::with_capacity(text.len());
    let mut chars = text.char_indices().peekable();
    while let Some((start, first)) = chars.next() {
        let mut end = start + first.len_utf8();
        while let Some(&(i, c)) = chars.peek() {
            if canonical_combining_class(c) == 0 {
                break;
            }
            end = i + c.len_utf8();
            chars.next();
        }
        let segment = &text[start..end];
        let len = end - start;
        if segment.len() == first.len_utf8() {
            push_lowercase(&mut items, first, start, len);
        } else {
            for c in segment.nfc() {
                push_lowercase(&mut items, c, start, len);
            }
        }
    }
    items
}

fn push_lowercase(items: &mut Vec<Item>, c: char, offset: usize, len: usize) {
    if c.is_ascii() {
        items.push(Item::plain(c.to_ascii_lowercase(), offset, len));
    } else {
        items.extend(c.to_lowercase().map(|l| Item::plain(l, offset, len)));
    }
}

/// Replaces every `/key/` group with its IAST letter; everything else is
/// copied after ASCII case folding.
pub fn decode_uast_io(text: &str) -> Result<String, Diagnostic> {
    decode_uast_io_with(text, Mode::Strict).map(|(s, _)| s)
}

pub fn decode_uast_io_with(
    text: &str,
    mode: Mode,
) -> Result<(String, Vec<Diagnostic>), Diagnostic> {
    let mut diagnostics = Vec::new();
    let items = scan_ascii(text, mode, &mut diagnostics)?;
    let mut out = String::with_capacity(text.len());
    for item in &items {
        if item.verbatim {
            out.push_str(item.slice(text));
        } else {
            out.push(item.ch);
        }
    }
    Ok((out, diagnostics))
}

/// Writes IAST text in ASCII, replacing each diacritic letter with `/key/`.
///
/// Input is composed and lowercased first, so `a` + U+0304 encodes like `ā`.
/// A literal `/` has no encoding and is rejected like any other unencodable
/// scalar.
pub fn encode_uast_io(text: &str) -> Result<String, Diagnostic> {
    encode_uast_io_with(text, Mode::Strict).map(|(s, _)| s)
}

pub fn encode_uast_io_with(
    text: &str,
    mode: Mode,
) -> Result<(String, Vec<Diagnostic>), Diagnostic> {
    let mut out = String::with_capacity(text.len() + text.len() / 2);
    let mut diagnostics = Vec::new();
    for item in scan_unicode(text) {
        if item.ch.is_ascii() && item.ch != '/' {
            out.push(item.ch);
        } else if let Some(key) = ascii_key_of(item.ch) {
            out.push('/');
            out.push_str(key);
            out.push('/');
        } else {
            let diag = Diagnostic::new(item.offset, item.slice(text), Reason::UnencodableScalar);
            if mode == Mode::Strict {
                return Err(diag);
            }
            // a decomposed segment yields several items sharing one span
            if diagnostics.last().map(|d: &Diagnostic| d.offset) != Some(item.offset) {
                out.push_str(item.slice(text));
                diagnostics.push(diag);
            }
        }
    }
    Ok((out, diagnostics))
}
