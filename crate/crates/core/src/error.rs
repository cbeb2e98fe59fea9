use std::fmt;

use thiserror::Error;

/// Why a slice of input was rejected.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Reason {
    UnknownKey,
    UnterminatedGroup,
    NonAsciiInput,
    UnencodableScalar,
    DanglingHyphen,
    DanglingBackslash,
    UnknownLetter,
    UnknownScalar,
    OrphanVowelSign,
    OrphanVirama,
    OrphanCandrabindu,
    UnsupportedNasalization,
    DependentVowelWithoutConsonant,
    InvalidUtf8,
}

impl Reason {
    pub fn as_str(self) -> &'static str {
        match self {
            Reason::UnknownKey => "unknown-key",
            Reason::UnterminatedGroup => "unterminated-group",
            Reason::NonAsciiInput => "non-ascii-input",
            Reason::UnencodableScalar => "unencodable-scalar",
            Reason::DanglingHyphen => "dangling-hyphen",
            Reason::DanglingBackslash => "dangling-backslash",
            Reason::UnknownLetter => "unknown-letter",
            Reason::UnknownScalar => "unknown-scalar",
            Reason::OrphanVowelSign => "orphan-vowel-sign",
            Reason::OrphanVirama => "orphan-virama",
            Reason::OrphanCandrabindu => "orphan-candrabindu",
            Reason::UnsupportedNasalization => "unsupported-nasalization",
            Reason::DependentVowelWithoutConsonant => "dependent-vowel-without-consonant",
            Reason::InvalidUtf8 => "invalid-utf8",
        }
    }
}

impl fmt::Display for Reason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A positioned problem within one line of input. `offset` is a byte index
/// into the original text, before case folding or normalization.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{offset}: {reason}: {slice}")]
pub struct Diagnostic {
    pub offset: usize,
    pub slice: String,
    pub reason: Reason,
}

impl Diagnostic {
    pub(crate) fn new(offset: usize, slice: impl Into<String>, reason: Reason) -> Self {
        Diagnostic {
            offset,
            slice: slice.into(),
            reason,
        }
    }
}

/// A [`Diagnostic`] placed within a multi-line input. `line` is 1-based,
/// `offset` is the byte index within that line.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{line}:{}: {reason}: {slice}", .offset + 1)]
pub struct ConversionError {
    pub line: usize,
    pub offset: usize,
    pub slice: String,
    pub reason: Reason,
}

impl ConversionError {
    pub(crate) fn at_line(line: usize, diag: Diagnostic) -> Self {
        ConversionError {
            line,
            offset: diag.offset,
            slice: diag.slice,
            reason: diag.reason,
        }
    }
}

/// All errors of a strict conversion, in input order.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{} conversion error(s), first: {}", .0.len(), .0[0])]
pub struct ConvertErrors(pub Vec<ConversionError>);
