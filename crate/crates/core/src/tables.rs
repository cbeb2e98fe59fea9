//! Compiled-in scheme tables.
//!
//! Two tables live here. [`DIACRITICS`] is the 18-row mapping between the
//! precomposed IAST letters and their ASCII replacement keys used inside
//! `/key/` groups. [`inventory`] is the Sanskrit sound inventory with the
//! IAST spelling and Devanagari scalars of every phoneme.
//!
//! Devanagari assignments follow the Unicode Devanagari block (U+0900..U+097F).

use std::fmt;

use thiserror::Error;

/// Sanskrit vowels, in traditional order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Vowel {
    A,
    AA,
    I,
    II,
    U,
    UU,
    VocalicR,
    VocalicRR,
    VocalicL,
    VocalicLL,
    E,
    Ai,
    O,
    Au,
}

/// Sanskrit consonants. Aspirates are single phonemes even though IAST
/// spells them with two letters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Consonant {
    K,
    Kh,
    G,
    Gh,
    Nga,
    C,
    Ch,
    J,
    Jh,
    Nya,
    Tta,
    Ttha,
    Dda,
    Ddha,
    Nna,
    T,
    Th,
    D,
    Dh,
    N,
    P,
    Ph,
    B,
    Bh,
    M,
    Y,
    R,
    L,
    V,
    Sha,
    Ssa,
    S,
    H,
    Lla,
}

struct VowelRow {
    iast: &'static str,
    letter: char,
    sign: Option<char>,
}

struct ConsonantRow {
    iast: &'static str,
    letter: char,
}

const VOWEL_ROWS: [VowelRow; 14] = [
    VowelRow { iast: "a", letter: '\u{0905}', sign: None },
    VowelRow { iast: "ā", letter: '\u{0906}', sign: Some('\u{093E}') },
    VowelRow { iast: "i", letter: '\u{0907}', sign: Some('\u{093F}') },
    VowelRow { iast: "ī", letter: '\u{0908}', sign: Some('\u{0940}') },
    VowelRow { iast: "u", letter: '\u{0909}', sign: Some('\u{0941}') },
    VowelRow { iast: "ū", letter: '\u{090A}', sign: Some('\u{0942}') },
    VowelRow { iast: "ṛ", letter: '\u{090B}', sign: Some('\u{0943}') },
    VowelRow { iast: "ṝ", letter: '\u{0960}', sign: Some('\u{0944}') },
    VowelRow { iast: "ḷ", letter: '\u{090C}', sign: Some('\u{0962}') },
    VowelRow { iast: "ḹ", letter: '\u{0961}', sign: Some('\u{0963}') },
    VowelRow { iast: "e", letter: '\u{090F}', sign: Some('\u{0947}') },
    VowelRow { iast: "ai", letter: '\u{0910}', sign: Some('\u{0948}') },
    VowelRow { iast: "o", letter: '\u{0913}', sign: Some('\u{094B}') },
    VowelRow { iast: "au", letter: '\u{0914}', sign: Some('\u{094C}') },
];

const CONSONANT_ROWS: [ConsonantRow; 34] = [
    ConsonantRow { iast: "k", letter: '\u{0915}' },
    ConsonantRow { iast: "kh", letter: '\u{0916}' },
    ConsonantRow { iast: "g", letter: '\u{0917}' },
    ConsonantRow { iast: "gh", letter: '\u{0918}' },
    ConsonantRow { iast: "ṅ", letter: '\u{0919}' },
    ConsonantRow { iast: "c", letter: '\u{091A}' },
    ConsonantRow { iast: "ch", letter: '\u{091B}' },
    ConsonantRow { iast: "j", letter: '\u{091C}' },
    ConsonantRow { iast: "jh", letter: '\u{091D}' },
    ConsonantRow { iast: "ñ", letter: '\u{091E}' },
    ConsonantRow { iast: "ṭ", letter: '\u{091F}' },
    ConsonantRow { iast: "ṭh", letter: '\u{0920}' },
    ConsonantRow { iast: "ḍ", letter: '\u{0921}' },
    ConsonantRow { iast: "ḍh", letter: '\u{0922}' },
    ConsonantRow { iast: "ṇ", letter: '\u{0923}' },
    ConsonantRow { iast: "t", letter: '\u{0924}' },
    ConsonantRow { iast: "th", letter: '\u{0925}' },
    ConsonantRow { iast: "d", letter: '\u{0926}' },
    ConsonantRow { iast: "dh", letter: '\u{0927}' },
    ConsonantRow { iast: "n", letter: '\u{0928}' },
    ConsonantRow { iast: "p", letter: '\u{092A}' },
    ConsonantRow { iast: "ph", letter: '\u{092B}' },
    ConsonantRow { iast: "b", letter: '\u{092C}' },
    ConsonantRow { iast: "bh", letter: '\u{092D}' },
    ConsonantRow { iast: "m", letter: '\u{092E}' },
    ConsonantRow { iast: "y", letter: '\u{092F}' },
    ConsonantRow { iast: "r", letter: '\u{0930}' },
    ConsonantRow { iast: "l", letter: '\u{0932}' },
    ConsonantRow { iast: "v", letter: '\u{0935}' },
    ConsonantRow { iast: "ś", letter: '\u{0936}' },
    ConsonantRow { iast: "ṣ", letter: '\u{0937}' },
    ConsonantRow { iast: "s", letter: '\u{0938}' },
    ConsonantRow { iast: "h", letter: '\u{0939}' },
    ConsonantRow { iast: "ḻ", letter: '\u{0933}' },
];

impl Vowel {
    pub const ALL: [Vowel; 14] = [
        Vowel::A,
        Vowel::AA,
        Vowel::I,
        Vowel::II,
        Vowel::U,
        Vowel::UU,
        Vowel::VocalicR,
        Vowel::VocalicRR,
        Vowel::VocalicL,
        Vowel::VocalicLL,
        Vowel::E,
        Vowel::Ai,
        Vowel::O,
        Vowel::Au,
    ];

    fn row(self) -> &'static VowelRow {
        &VOWEL_ROWS[self as usize]
    }

    pub fn iast(self) -> &'static str {
        self.row().iast
    }

    /// The independent (full) letter.
    pub fn letter(self) -> char {
        self.row().letter
    }

    /// The dependent vowel sign. `a` has none: it is the inherent vowel.
    pub fn sign(self) -> Option<char> {
        self.row().sign
    }
}

impl Consonant {
    pub const ALL: [Consonant; 34] = [
        Consonant::K,
        Consonant::Kh,
        Consonant::G,
        Consonant::Gh,
        Consonant::Nga,
        Consonant::C,
        Consonant::Ch,
        Consonant::J,
        Consonant::Jh,
        Consonant::Nya,
        Consonant::Tta,
        Consonant::Ttha,
        Consonant::Dda,
        Consonant::Ddha,
        Consonant::Nna,
        Consonant::T,
        Consonant::Th,
        Consonant::D,
        Consonant::Dh,
        Consonant::N,
        Consonant::P,
        Consonant::Ph,
        Consonant::B,
        Consonant::Bh,
        Consonant::M,
        Consonant::Y,
        Consonant::R,
        Consonant::L,
        Consonant::V,
        Consonant::Sha,
        Consonant::Ssa,
        Consonant::S,
        Consonant::H,
        Consonant::Lla,
    ];

    fn row(self) -> &'static ConsonantRow {
        &CONSONANT_ROWS[self as usize]
    }

    pub fn iast(self) -> &'static str {
        self.row().iast
    }

    /// The base letter, which carries the inherent `a` in Devanagari.
    pub fn letter(self) -> char {
        self.row().letter
    }

    /// The aspirated partner spelled by appending `h`, if any.
    pub fn aspirated(self) -> Option<Consonant> {
        use Consonant::*;
        Some(match self {
            K => Kh,
            G => Gh,
            C => Ch,
            J => Jh,
            Tta => Ttha,
            Dda => Ddha,
            T => Th,
            D => Dh,
            P => Ph,
            B => Bh,
            _ => return None,
        })
    }
}

/// Identifies one entry of the phoneme inventory.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PhonemeId {
    Vowel(Vowel),
    Consonant(Consonant),
    Anusvara,
    Visarga,
    Candrabindu,
    Danda,
    DoubleDanda,
    Digit(u8),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PhonemeClass {
    Vowel,
    Consonant,
    Anusvara,
    Visarga,
    Candrabindu,
    Punctuation,
    Digit,
}

/// One inventory record.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Phoneme {
    pub id: PhonemeId,
    pub class: PhonemeClass,
    pub iast: &'static str,
    /// Full letter for vowels, base letter for consonants, the sign itself
    /// for marks.
    pub devanagari: char,
    /// Vowel sign (matra); `None` for everything except the non-inherent vowels.
    pub devanagari_sign: Option<char>,
}

const DIGITS_IAST: [&str; 10] = ["0", "1", "2", "3", "4", "5", "6", "7", "8", "9"];

pub const ANUSVARA: char = '\u{0902}';
pub const VISARGA: char = '\u{0903}';
pub const CANDRABINDU: char = '\u{0901}';
pub const VIRAMA: char = '\u{094D}';
pub const DANDA: char = '\u{0964}';
pub const DOUBLE_DANDA: char = '\u{0965}';
pub const DIGIT_ZERO: char = '\u{0966}';

impl PhonemeId {
    pub fn class(self) -> PhonemeClass {
        match self {
            PhonemeId::Vowel(_) => PhonemeClass::Vowel,
            PhonemeId::Consonant(_) => PhonemeClass::Consonant,
            PhonemeId::Anusvara => PhonemeClass::Anusvara,
            PhonemeId::Visarga => PhonemeClass::Visarga,
            PhonemeId::Candrabindu => PhonemeClass::Candrabindu,
            PhonemeId::Danda | PhonemeId::DoubleDanda => PhonemeClass::Punctuation,
            PhonemeId::Digit(_) => PhonemeClass::Digit,
        }
    }

    pub fn iast(self) -> &'static str {
        match self {
            PhonemeId::Vowel(v) => v.iast(),
            PhonemeId::Consonant(c) => c.iast(),
            PhonemeId::Anusvara => "ṃ",
            PhonemeId::Visarga => "ḥ",
            PhonemeId::Candrabindu => "ã",
            PhonemeId::Danda => ".",
            PhonemeId::DoubleDanda => "..",
            PhonemeId::Digit(d) => DIGITS_IAST[usize::from(d)],
        }
    }

    pub fn phoneme(self) -> Phoneme {
        let (devanagari, devanagari_sign) = match self {
            PhonemeId::Vowel(v) => (v.letter(), v.sign()),
            PhonemeId::Consonant(c) => (c.letter(), None),
            PhonemeId::Anusvara => (ANUSVARA, None),
            PhonemeId::Visarga => (VISARGA, None),
            PhonemeId::Candrabindu => (CANDRABINDU, None),
            PhonemeId::Danda => (DANDA, None),
            PhonemeId::DoubleDanda => (DOUBLE_DANDA, None),
            PhonemeId::Digit(d) => (devanagari_digit(d), None),
        };
        Phoneme {
            id: self,
            class: self.class(),
            iast: self.iast(),
            devanagari,
            devanagari_sign,
        }
    }
}

pub(crate) fn devanagari_digit(d: u8) -> char {
    debug_assert!(d < 10);
    char::from_u32(DIGIT_ZERO as u32 + u32::from(d)).expect("digit in range")
}

/// The full phoneme inventory: vowels, consonants, marks, daṇḍas and digits.
pub fn inventory() -> impl Iterator<Item = Phoneme> {
    Vowel::ALL
        .into_iter()
        .map(PhonemeId::Vowel)
        .chain(Consonant::ALL.into_iter().map(PhonemeId::Consonant))
        .chain([
            PhonemeId::Anusvara,
            PhonemeId::Visarga,
            PhonemeId::Candrabindu,
            PhonemeId::Danda,
            PhonemeId::DoubleDanda,
        ])
        .chain((0..10).map(PhonemeId::Digit))
        .map(PhonemeId::phoneme)
}

/// One row of the diacritic table.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DiacriticMapping {
    pub name: &'static str,
    pub codepoint: char,
    pub ascii_key: &'static str,
    pub phoneme: PhonemeId,
}

macro_rules! row {
    ($name:literal, $cp:literal, $key:literal, $ph:expr) => {
        DiacriticMapping {
            name: $name,
            codepoint: $cp,
            ascii_key: $key,
            phoneme: $ph,
        }
    };
}

/// The diacritic table, in its published row order.
pub const DIACRITICS: [DiacriticMapping; 18] = [
    row!("LATIN SMALL LETTER A WITH MACRON", '\u{0101}', "a", PhonemeId::Vowel(Vowel::AA)),
    row!("LATIN SMALL LETTER A WITH TILDE", '\u{00E3}', "au", PhonemeId::Candrabindu),
    row!("LATIN SMALL LETTER I WITH MACRON", '\u{012B}', "i", PhonemeId::Vowel(Vowel::II)),
    row!("LATIN SMALL LETTER U WITH MACRON", '\u{016B}', "u", PhonemeId::Vowel(Vowel::UU)),
    row!("LATIN SMALL LETTER R WITH DOT BELOW", '\u{1E5B}', "r", PhonemeId::Vowel(Vowel::VocalicR)),
    row!(
        "LATIN SMALL LETTER R WITH DOT BELOW AND MACRON",
        '\u{1E5D}',
        "ru",
        PhonemeId::Vowel(Vowel::VocalicRR)
    ),
    row!("LATIN SMALL LETTER L WITH DOT BELOW", '\u{1E37}', "l", PhonemeId::Vowel(Vowel::VocalicL)),
    row!(
        "LATIN SMALL LETTER L WITH DOT BELOW AND MACRON",
        '\u{1E39}',
        "lu",
        PhonemeId::Vowel(Vowel::VocalicLL)
    ),
    row!("LATIN SMALL LETTER L WITH LINE BELOW", '\u{1E3B}', "ll", PhonemeId::Consonant(Consonant::Lla)),
    row!("LATIN SMALL LETTER T WITH DOT BELOW", '\u{1E6D}', "t", PhonemeId::Consonant(Consonant::Tta)),
    row!("LATIN SMALL LETTER D WITH DOT BELOW", '\u{1E0D}', "d", PhonemeId::Consonant(Consonant::Dda)),
    row!("LATIN SMALL LETTER N WITH TILDE", '\u{00F1}', "n", PhonemeId::Consonant(Consonant::Nya)),
    row!("LATIN SMALL LETTER N WITH DOT ABOVE", '\u{1E45}', "nu", PhonemeId::Consonant(Consonant::Nga)),
    row!("LATIN SMALL LETTER N WITH DOT BELOW", '\u{1E47}', "nl", PhonemeId::Consonant(Consonant::Nna)),
    row!("LATIN SMALL LETTER S WITH ACUTE", '\u{015B}', "su", PhonemeId::Consonant(Consonant::Sha)),
    row!("LATIN SMALL LETTER S WITH DOT BELOW", '\u{1E63}', "sl", PhonemeId::Consonant(Consonant::Ssa)),
    row!("LATIN SMALL LETTER M WITH DOT BELOW", '\u{1E43}', "m", PhonemeId::Anusvara),
    row!("LATIN SMALL LETTER H WITH DOT BELOW", '\u{1E25}', "h", PhonemeId::Visarga),
];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TableError {
    #[error("unknown-key: {0:?}")]
    UnknownKey(String),
    #[error("unmapped-codepoint: U+{:04X}", *.0 as u32)]
    UnmappedCodepoint(char),
    #[error("not-found: {0:?}")]
    NotFound(String),
}

/// Resolves an ASCII replacement key. Keys are matched exactly, never by prefix.
pub fn ascii_to_codepoint(key: &str) -> Result<char, TableError> {
    DIACRITICS
        .iter()
        .find(|row| row.ascii_key == key)
        .map(|row| row.codepoint)
        .ok_or_else(|| TableError::UnknownKey(key.to_owned()))
}

pub fn codepoint_to_ascii(cp: char) -> Result<&'static str, TableError> {
    ascii_key_of(cp).ok_or(TableError::UnmappedCodepoint(cp))
}

pub(crate) fn ascii_key_of(cp: char) -> Option<&'static str> {
    Some(match cp {
        '\u{0101}' => "a",
        '\u{00E3}' => "au",
        '\u{012B}' => "i",
        '\u{016B}' => "u",
        '\u{1E5B}' => "r",
        '\u{1E5D}' => "ru",
        '\u{1E37}' => "l",
        '\u{1E39}' => "lu",
        '\u{1E3B}' => "ll",
        '\u{1E6D}' => "t",
        '\u{1E0D}' => "d",
        '\u{00F1}' => "n",
        '\u{1E45}' => "nu",
        '\u{1E47}' => "nl",
        '\u{015B}' => "su",
        '\u{1E63}' => "sl",
        '\u{1E43}' => "m",
        '\u{1E25}' => "h",
        _ => return None,
    })
}

pub fn lookup_phoneme_by_iast(spelling: &str) -> Result<Phoneme, TableError> {
    inventory()
        .find(|p| p.iast == spelling)
        .ok_or_else(|| TableError::NotFound(spelling.to_owned()))
}

/// Writes the diacritic table as TSV: `ascii_key`, `codepoint` (uppercase
/// hex), `iast`, `devanagari`.
pub fn write_tsv(out: &mut impl fmt::Write) -> fmt::Result {
    writeln!(out, "ascii_key\tcodepoint\tiast\tdevanagari")?;
    for row in &DIACRITICS {
        let devanagari = match row.phoneme {
            PhonemeId::Candrabindu => format!("{}{}", Vowel::A.letter(), CANDRABINDU),
            other => other.phoneme().devanagari.to_string(),
        };
        writeln!(
            out,
            "{}\t{:04X}\t{}\t{}",
            row.ascii_key, row.codepoint as u32, row.codepoint, devanagari
        )?;
    }
    Ok(())
}

pub fn tables_tsv() -> String {
    let mut s = String::new();
    write_tsv(&mut s).expect("writing to a String cannot fail");
    s
}
