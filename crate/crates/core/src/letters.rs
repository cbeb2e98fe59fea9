//! Scalar-level classification of lowercase IAST letters, shared by the
//! IAST, UAST-IO and UAST lexers.

use crate::tables::{Consonant, Vowel};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Letter {
    Vowel(Vowel),
    /// `ã`: the vowel a with nasalization.
    NasalA,
    Consonant(Consonant),
    Anusvara,
    Visarga,
}

pub(crate) fn letter(c: char) -> Option<Letter> {
    use Consonant as C;
    use Letter::{Consonant as Con, Vowel as Vow};
    Some(match c {
        'a' => Vow(Vowel::A),
        'ā' => Vow(Vowel::AA),
        'i' => Vow(Vowel::I),
        'ī' => Vow(Vowel::II),
        'u' => Vow(Vowel::U),
        'ū' => Vow(Vowel::UU),
        'ṛ' => Vow(Vowel::VocalicR),
        'ṝ' => Vow(Vowel::VocalicRR),
        'ḷ' => Vow(Vowel::VocalicL),
        'ḹ' => Vow(Vowel::VocalicLL),
        'e' => Vow(Vowel::E),
        'o' => Vow(Vowel::O),
        'ã' => Letter::NasalA,
        'k' => Con(C::K),
        'g' => Con(C::G),
        'ṅ' => Con(C::Nga),
        'c' => Con(C::C),
        'j' => Con(C::J),
        'ñ' => Con(C::Nya),
        'ṭ' => Con(C::Tta),
        'ḍ' => Con(C::Dda),
        'ṇ' => Con(C::Nna),
        't' => Con(C::T),
        'd' => Con(C::D),
        'n' => Con(C::N),
        'p' => Con(C::P),
        'b' => Con(C::B),
        'm' => Con(C::M),
        'y' => Con(C::Y),
        'r' => Con(C::R),
        'l' => Con(C::L),
        'v' => Con(C::V),
        'ś' => Con(C::Sha),
        'ṣ' => Con(C::Ssa),
        's' => Con(C::S),
        'h' => Con(C::H),
        'ḻ' => Con(C::Lla),
        'ṃ' => Letter::Anusvara,
        'ḥ' => Letter::Visarga,
        _ => return None,
    })
}

/// The two-letter unit formed by `first` followed by `next`, if any.
pub(crate) fn digraph(first: Letter, next: char) -> Option<Letter> {
    match (first, next) {
        (Letter::Consonant(c), 'h') => c.aspirated().map(Letter::Consonant),
        (Letter::Vowel(Vowel::A), 'i') => Some(Letter::Vowel(Vowel::Ai)),
        (Letter::Vowel(Vowel::A), 'u') => Some(Letter::Vowel(Vowel::Au)),
        _ => None,
    }
}
