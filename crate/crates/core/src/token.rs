//! The pivot representation shared by every scheme.
//!
//! Tokens follow the phonology rather than the Unicode encoding: a consonant
//! token never carries a vowel, and every vowel (including the inherent `a`)
//! is its own token. A consonant with no vowel token after it is bare.

use std::fmt;

use crate::tables::{Consonant, Vowel};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Token {
    Consonant(Consonant),
    Vowel {
        vowel: Vowel,
        /// Renders as a full letter rather than a vowel sign.
        independent: bool,
        /// Only ever set on [`Vowel::A`] by the lexers.
        nasalized: bool,
    },
    Anusvara,
    Visarga,
    Danda,
    DoubleDanda,
    Digit(u8),
    /// Whitespace or permitted punctuation.
    Passthrough(char),
    /// Text that failed to lex in lenient mode; every renderer copies it out as-is.
    Verbatim(String),
}

impl Token {
    pub fn dependent(vowel: Vowel) -> Token {
        Token::Vowel {
            vowel,
            independent: false,
            nasalized: false,
        }
    }

    pub fn independent(vowel: Vowel) -> Token {
        Token::Vowel {
            vowel,
            independent: true,
            nasalized: false,
        }
    }

    pub fn is_consonant(&self) -> bool {
        matches!(self, Token::Consonant(_))
    }

    pub fn is_vowel(&self) -> bool {
        matches!(self, Token::Vowel { .. })
    }

    pub fn is_dependent_vowel(&self) -> bool {
        matches!(
            self,
            Token::Vowel {
                independent: false,
                ..
            }
        )
    }

    pub fn is_independent_vowel(&self) -> bool {
        matches!(
            self,
            Token::Vowel {
                independent: true,
                ..
            }
        )
    }
}

impl fmt::Display for Token {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Token::Consonant(c) => write!(f, "C({})", c.iast()),
            Token::Vowel {
                vowel,
                independent,
                nasalized,
            } => {
                write!(f, "V({}", vowel.iast())?;
                if *independent {
                    f.write_str(", independent")?;
                }
                if *nasalized {
                    f.write_str(", nasalized")?;
                }
                f.write_str(")")
            }
            Token::Anusvara => f.write_str("Anusvara"),
            Token::Visarga => f.write_str("Visarga"),
            Token::Danda => f.write_str("Danda"),
            Token::DoubleDanda => f.write_str("DoubleDanda"),
            Token::Digit(d) => write!(f, "Digit({d})"),
            Token::Passthrough(c) => write!(f, "Passthrough({c:?})"),
            Token::Verbatim(s) => write!(f, "Verbatim({s:?})"),
        }
    }
}

/// Whitespace and ASCII punctuation that every scheme carries through
/// unchanged. `/ \ - .` are reserved by the ASCII schemes and excluded.
pub fn is_passthrough(c: char) -> bool {
    matches!(c, ' ' | '\t' | '\r' | '\n' | '\x0b' | '\x0c')
        || (c.is_ascii_punctuation() && !matches!(c, '/' | '\\' | '-' | '.'))
}

/// Lexer strictness.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Mode {
    /// The first error aborts.
    #[default]
    Strict,
    /// Offending slices become [`Token::Verbatim`] and lexing continues.
    Lenient,
}

/// Lexer output in lenient mode: tokens plus every recovered problem.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Lexed {
    pub tokens: Vec<Token>,
    pub diagnostics: Vec<crate::error::Diagnostic>,
}
