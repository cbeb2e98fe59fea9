//! Golden texts and the Unicode Devanagari chart, checked independently of
//! the compiled tables.

use uast::{
    convert, decode_uast_io, lex, lex_iast, lex_uast, Consonant, Mode, Scheme, Vowel,
};

/// Consonant letters as they appear in the Unicode chart, in `Consonant::ALL` order.
const CHART_CONSONANTS: &str = "कखगघङचछजझञटठडढणतथदधनपफबभमयरलवशषसहळ";
const CHART_VOWELS: &str = "अआइईउऊऋॠऌॡएऐओऔ";
/// Vowel signs for every vowel but `a`.
const CHART_SIGNS: &str = "ािीुूृॄॢॣेैोौ";

const VERSE: [(&str, &str); 4] = [
    ("sarvasya cāhaṃ hṛdi saṃniviṣṭo", "sarvasya c/a/ha/m/ h/r/di sa/m/nivi/sl//t/o"),
    ("mattaḥ smṛtirjñānamapohanaṃ ca", "matta/h/ sm/r/tirj/n//a/namapohana/m/ ca"),
    ("vedaiśca sarvairaham eva vedyo", "vedai/su/ca sarvairaham eva vedyo"),
    ("vedāntakṛdvedavideva cāham", "ved/a/ntak/r/dvedavideva c/a/ham"),
];

/// The verse lines respelled by hand in UAST, halantas written out.
const VERSE_UAST: [&str; 4] = [
    "sar-vas-ya c/a/ha/m/ h/r/di sa/m/nivi/sl/-/t/o",
    "mat-ta/h/ s-m/r/tir-j-/n//a/namapohana/m/ ca",
    "vedai/su/-ca sar-vairaham- eva ved-yo",
    "ved/a/n-tak/r/d-vedavideva c/a/ham-",
];

#[test]
fn consonant_letters_match_chart() {
    let chart: Vec<char> = CHART_CONSONANTS.chars().collect();
    assert_eq!(chart.len(), Consonant::ALL.len());
    for (c, expected) in Consonant::ALL.iter().zip(chart) {
        assert_eq!(c.letter(), expected, "{}", c.iast());
    }
}

#[test]
fn vowel_letters_and_signs_match_chart() {
    let letters: Vec<char> = CHART_VOWELS.chars().collect();
    let signs: Vec<char> = CHART_SIGNS.chars().collect();
    for (i, v) in Vowel::ALL.iter().enumerate() {
        assert_eq!(v.letter(), letters[i], "{}", v.iast());
        let expected_sign = i.checked_sub(1).map(|j| signs[j]);
        assert_eq!(v.sign(), expected_sign, "{}", v.iast());
    }
}

#[test]
fn golden_words() {
    for (ascii, iast) in [
        ("r/a/ma/h/", "rāmaḥ"),
        ("k/r//sl//nl/a/h/", "kṛṣṇaḥ"),
        ("praj/n//a/", "prajñā"),
    ] {
        assert_eq!(convert(ascii, Scheme::UastIo, Scheme::Iast, Mode::Strict).unwrap(), iast);
        assert_eq!(convert(iast, Scheme::Iast, Scheme::UastIo, Mode::Strict).unwrap(), ascii);
    }
}

#[test]
fn verse_lines() {
    for (iast, ascii) in VERSE {
        assert_eq!(convert(ascii, Scheme::UastIo, Scheme::Iast, Mode::Strict).unwrap(), iast);
        assert_eq!(convert(iast, Scheme::Iast, Scheme::UastIo, Mode::Strict).unwrap(), ascii);
    }
}

#[test]
fn verse_uast_respelling_lexes_like_iast() {
    for ((_, ascii), respelled) in VERSE.iter().zip(VERSE_UAST) {
        let from_io = lex_iast(&decode_uast_io(ascii).unwrap()).unwrap();
        assert_eq!(lex_uast(respelled).unwrap(), from_io, "{respelled}");
        assert_eq!(
            convert(ascii, Scheme::UastIo, Scheme::Uast, Mode::Strict).unwrap(),
            respelled
        );
    }
}

#[test]
fn verse_line1_devanagari() {
    // chart: स र ् व स ् य   च ा ह ं   ह ृ द ि   स ं न ि व ि ष ् ट ो
    let expected = "सर्वस्य चाहं हृदि संनिविष्टो";
    let out = convert(VERSE[0].1, Scheme::UastIo, Scheme::Devanagari, Mode::Strict).unwrap();
    assert_eq!(out, expected);
    assert_eq!(convert(expected, Scheme::Devanagari, Scheme::Iast, Mode::Strict).unwrap(), VERSE[0].0);
}

#[test]
fn lexer_examples() {
    // group-resolved ḍ still munches the following h
    assert_eq!(lex_uast("/d/ha").unwrap(), lex_iast("ḍha").unwrap());
    assert_eq!(
        lex(VERSE[1].1, Scheme::UastIo, Mode::Strict).unwrap().tokens,
        lex_iast(VERSE[1].0).unwrap()
    );
}

#[test]
fn chart_derived_devanagari() {
    let dev = |t| convert(t, Scheme::Uast, Scheme::Devanagari, Mode::Strict).unwrap();
    assert_eq!(dev("kamala"), "कमल");
    assert_eq!(dev("kml"), "कमल");
    assert_eq!(dev("k-"), "क्");
    assert_eq!(dev("r/a/ma/h/"), "रामः");
    assert_eq!(dev("p/u/r-v/i/"), "पूर्वी");
    assert_eq!(dev("a/au/ k/au/ 108."), "अअँ कँ १०८।");
}
