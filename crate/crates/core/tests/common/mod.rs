#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use uast::{Consonant, Token, Vowel};

pub const MAX_TOKENS: usize = 64;

/// Which token streams to build.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Domain {
    /// Streams every scheme, IAST included, can spell unambiguously.
    Iast,
    /// Adds vowel hiatus (`a` + `i`), a bare aspirable consonant before `h`
    /// and a bare consonant before an independent vowel. IAST cannot tell
    /// these apart from digraphs, UAST and Devanagari can.
    Wide,
}

fn pick<T: Copy>(items: &[T], n: u32) -> T {
    items[n as usize % items.len()]
}

fn is_danda(t: &Token) -> bool {
    matches!(t, Token::Danda | Token::DoubleDanda)
}

/// Deterministically builds a token stream of at most [`MAX_TOKENS`] from
/// `choices`, three words per step.
pub fn build_stream(choices: &[u32], domain: Domain) -> Vec<Token> {
    let mut out: Vec<Token> = Vec::new();
    for step in choices.chunks_exact(3) {
        if out.len() + 2 > MAX_TOKENS {
            break;
        }
        let (kind, a, b) = (step[0] % 100, step[1], step[2]);
        let last = out.last().cloned();
        let bare = match &last {
            Some(Token::Consonant(c)) => Some(*c),
            _ => None,
        };
        match kind {
            0..=44 => {
                let c = pick(&Consonant::ALL, a);
                let blocked = domain == Domain::Iast
                    && c == Consonant::H
                    && bare.is_some_and(|p| p.aspirated().is_some());
                if blocked {
                    continue;
                }
                out.push(Token::Consonant(c));
                if b % 10 < 7 {
                    let vowel = if b % 3 == 0 { Vowel::A } else { pick(&Vowel::ALL, b / 10) };
                    out.push(Token::Vowel {
                        vowel,
                        independent: false,
                        nasalized: vowel == Vowel::A && b % 17 == 0,
                    });
                }
            }
            45..=59 => {
                let vowel = pick(&Vowel::ALL, a);
                if domain == Domain::Iast {
                    if bare.is_some() {
                        continue;
                    }
                    let after_plain_a = matches!(
                        last,
                        Some(Token::Vowel {
                            vowel: Vowel::A,
                            nasalized: false,
                            ..
                        })
                    );
                    if after_plain_a && matches!(vowel, Vowel::I | Vowel::U) {
                        continue;
                    }
                }
                out.push(Token::Vowel {
                    vowel,
                    independent: true,
                    nasalized: vowel == Vowel::A && b % 5 == 0,
                });
            }
            60..=69 => out.push(if a % 2 == 0 { Token::Anusvara } else { Token::Visarga }),
            70..=74 => {
                if last.as_ref().is_some_and(is_danda) {
                    continue;
                }
                out.push(if a % 3 == 0 { Token::DoubleDanda } else { Token::Danda });
            }
            75..=81 => out.push(Token::Digit((a % 10) as u8)),
            _ => out.push(Token::Passthrough(pick(&[' ', ' ', ' ', ',', '?'], a))),
        }
    }
    out
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_stream(rng: &mut impl Rng, domain: Domain) -> Vec<Token> {
    let steps = rng.gen_range(0..=MAX_TOKENS);
    let choices: Vec<u32> = (0..steps * 3).map(|_| rng.gen()).collect();
    build_stream(&choices, domain)
}

/// Text spelled in UAST's explicit-vowel form for `(consonant, vowel)`
/// syllables; `drop_a[i]` leaves out the `a` of syllable `i` where the
/// reading is unaffected.
pub fn uast_word(syllables: &[(Consonant, Vowel)], drop_a: &[bool]) -> (String, usize) {
    let mut s = String::new();
    let mut dropped = 0;
    for (i, &(c, v)) in syllables.iter().enumerate() {
        s.push_str(&ascii_spelling(c.iast()));
        let next_is_h = syllables.get(i + 1).is_some_and(|&(n, _)| n == Consonant::H);
        let droppable = v == Vowel::A && !(next_is_h && c.aspirated().is_some());
        if droppable && drop_a.get(i).copied().unwrap_or(false) {
            dropped += 1;
        } else {
            s.push_str(&ascii_spelling(v.iast()));
        }
    }
    (s, dropped)
}

pub fn ascii_spelling(iast: &str) -> String {
    iast.chars()
        .map(|c| match uast::codepoint_to_ascii(c) {
            Ok(key) => format!("/{key}/"),
            Err(_) => c.to_string(),
        })
        .collect()
}
