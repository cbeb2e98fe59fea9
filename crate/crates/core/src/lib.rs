//! Lossless transliteration between UAST, UAST-IO, IAST and Devanagari.
//!
//! Every conversion lexes its input into a stream of phoneme [`Token`]s and
//! renders that stream in the target scheme:
//!
//! ```
//! use uast::{convert, Mode, Scheme};
//!
//! let iast = convert("k/r//sl//nl/a/h/", Scheme::UastIo, Scheme::Iast, Mode::Strict).unwrap();
//! assert_eq!(iast, "kṛṣṇaḥ");
//!
//! let devanagari = convert("kml", Scheme::Uast, Scheme::Devanagari, Mode::Strict).unwrap();
//! assert_eq!(devanagari, "कमल");
//! ```
//!
//! The schemes:
//!
//! * **IAST**, the diacritic romanisation;
//! * **UAST-IO**, IAST in plain ASCII with `/key/` groups for the 18
//!   diacritic letters (`/a/` is `ā`, `/sl/` is `ṣ`);
//! * **UAST**, UAST-IO plus an implicit `a` after consonants, `-` for
//!   halanta and `\` for explicit vowels and unit boundaries;
//! * **Devanagari**.

pub mod cli;
pub mod devanagari;
pub mod error;
pub mod iast;
pub mod io_codec;
mod letters;
pub mod pipeline;
pub mod tables;
pub mod token;
pub mod uast;

pub use devanagari::{lex_devanagari, lex_devanagari_with, render_devanagari, RenderError};
pub use error::{ConversionError, ConvertErrors, Diagnostic, Reason};
pub use iast::{lex_iast, lex_iast_with, render_iast};
pub use io_codec::{decode_uast_io, decode_uast_io_with, encode_uast_io, encode_uast_io_with};
pub use pipeline::{convert, lex, Conversion, Converter, Scheme, StreamError, StreamSummary};
pub use tables::{
    ascii_to_codepoint, codepoint_to_ascii, lookup_phoneme_by_iast, Consonant, DiacriticMapping,
    Phoneme, PhonemeClass, PhonemeId, TableError, Vowel, DIACRITICS,
};
pub use token::{Lexed, Mode, Token};
pub use uast::{lex_uast, lex_uast_with, render_uast, render_uast_with, UastStyle};
