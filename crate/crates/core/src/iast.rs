//! IAST: lexing into tokens and rendering back.
//!
//! IAST has no inherent vowel. A vowel right after a consonant is its
//! dependent vowel; any other vowel is independent. A consonant with no
//! vowel after it stays bare.

use crate::error::{Diagnostic, Reason};
use crate::io_codec::{scan_unicode, Item};
use crate::letters::{digraph, letter, Letter};
use crate::tables::{ascii_key_of, Vowel};
use crate::token::{is_passthrough, Lexed, Mode, Token};

pub fn lex_iast(text: &str) -> Result<Vec<Token>, Diagnostic> {
    lex_iast_with(text, Mode::Strict).map(|l| l.tokens)
}

/// Lexes IAST after composing and lowercasing it.
pub fn lex_iast_with(text: &str, mode: Mode) -> Result<Lexed, Diagnostic> {
    let items = scan_unicode(text);
    let mut lexed = Lexed::default();
    lex_items(text, &items, mode, &mut lexed)?;
    Ok(lexed)
}

pub(crate) fn lex_items(
    text: &str,
    items: &[Item],
    mode: Mode,
    lexed: &mut Lexed,
) -> Result<(), Diagnostic> {
    let out = &mut lexed.tokens;
    let mut after_consonant = false;
    let mut last_bad_offset = None;
    let mut i = 0;
    while i < items.len() {
        let item = items[i];
        let next = items.get(i + 1).filter(|n| !n.verbatim);
        i += 1;
        if item.verbatim {
            out.push(Token::Verbatim(item.slice(text).to_owned()));
            after_consonant = false;
            continue;
        }
        if let Some(first) = letter(item.ch) {
            let unit = match next.and_then(|n| digraph(first, n.ch)) {
                Some(joined) => {
                    i += 1;
                    joined
                }
                None => first,
            };
            let independent = !after_consonant;
            after_consonant = false;
            out.push(match unit {
                Letter::Consonant(c) => {
                    after_consonant = true;
                    Token::Consonant(c)
                }
                Letter::Vowel(vowel) => Token::Vowel {
                    vowel,
                    independent,
                    nasalized: false,
                },
                Letter::NasalA => Token::Vowel {
                    vowel: Vowel::A,
                    independent,
                    nasalized: true,
                },
                Letter::Anusvara => Token::Anusvara,
                Letter::Visarga => Token::Visarga,
            });
            continue;
        }
        after_consonant = false;
        let token = match item.ch {
            '.' if next.is_some_and(|n| n.ch == '.') => {
                i += 1;
                Token::DoubleDanda
            }
            '.' | '\u{0964}' => Token::Danda,
            '\u{0965}' => Token::DoubleDanda,
            c @ '0'..='9' => Token::Digit(c as u8 - b'0'),
            c if is_passthrough(c) => Token::Passthrough(c),
            _ => {
                let diag = Diagnostic::new(item.offset, item.slice(text), Reason::UnknownScalar);
                if mode == Mode::Strict {
                    return Err(diag);
                }
                // scalars of one decomposed segment share a span
                if last_bad_offset != Some(item.offset) {
                    last_bad_offset = Some(item.offset);
                    lexed.diagnostics.push(diag);
                    out.push(Token::Verbatim(item.slice(text).to_owned()));
                }
                continue;
            }
        };
        out.push(token);
    }
    Ok(())
}

pub fn render_iast(tokens: &[Token]) -> String {
    let mut out = String::with_capacity(tokens.len() * 2);
    render_iast_into(tokens, &mut out);
    out
}

pub fn render_iast_into(tokens: &[Token], out: &mut String) {
    for token in tokens {
        match token {
            Token::Consonant(c) => out.push_str(c.iast()),
            Token::Vowel {
                vowel, nasalized, ..
            } => match (vowel, nasalized) {
                (Vowel::A, true) => out.push('ã'),
                (v, true) => {
                    out.push_str(v.iast());
                    out.push('\u{0303}');
                }
                (v, false) => out.push_str(v.iast()),
            },
            Token::Anusvara => out.push('ṃ'),
            Token::Visarga => out.push('ḥ'),
            Token::Danda => out.push('.'),
            Token::DoubleDanda => out.push_str(".."),
            Token::Digit(d) => out.push(char::from(b'0' + d)),
            Token::Passthrough(c) => out.push(*c),
            Token::Verbatim(s) => out.push_str(s),
        }
    }
}

/// Writes an IAST spelling in ASCII with `/key/` groups.
pub(crate) fn push_ascii_spelling(spelling: &str, out: &mut String) {
    for c in spelling.chars() {
        match ascii_key_of(c) {
            Some(key) => {
                out.push('/');
                out.push_str(key);
                out.push('/');
            }
            None => out.push(c),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tables::Consonant as C;
    use crate::tables::Vowel as V;

    fn dep(v: V) -> Token {
        Token::dependent(v)
    }

    #[test]
    fn lexes_golden_words() {
        assert_eq!(
            lex_iast("rāmaḥ").unwrap(),
            [
                Token::Consonant(C::R),
                dep(V::AA),
                Token::Consonant(C::M),
                dep(V::A),
                Token::Visarga
            ]
        );
        assert_eq!(
            lex_iast("kṛṣṇaḥ").unwrap(),
            [
                Token::Consonant(C::K),
                dep(V::VocalicR),
                Token::Consonant(C::Ssa),
                Token::Consonant(C::Nna),
                dep(V::A),
                Token::Visarga
            ]
        );
        assert_eq!(lex_iast("a").unwrap(), [Token::independent(V::A)]);
    }

    #[test]
    fn digraphs_munch() {
        assert_eq!(
            lex_iast("ḍha").unwrap(),
            [Token::Consonant(C::Ddha), dep(V::A)]
        );
        assert_eq!(
            lex_iast("kai").unwrap(),
            [Token::Consonant(C::K), dep(V::Ai)]
        );
        assert_eq!(
            lex_iast("au").unwrap(),
            [Token::independent(V::Au)]
        );
        // ḥ is never the h of an aspirate
        assert_eq!(
            lex_iast("dḥ").unwrap(),
            [Token::Consonant(C::D), Token::Visarga]
        );
    }

    #[test]
    fn vowel_independence() {
        let toks = lex_iast("ai i kaī").unwrap();
        assert_eq!(
            toks,
            [
                Token::independent(V::Ai),
                Token::Passthrough(' '),
                Token::independent(V::I),
                Token::Passthrough(' '),
                Token::Consonant(C::K),
                dep(V::A),
                Token::independent(V::II),
            ]
        );
    }

    #[test]
    fn nasal_a_and_marks() {
        assert_eq!(
            lex_iast("kãṃ").unwrap(),
            [
                Token::Consonant(C::K),
                Token::Vowel {
                    vowel: V::A,
                    independent: false,
                    nasalized: true
                },
                Token::Anusvara
            ]
        );
    }

    #[test]
    fn punctuation_and_digits() {
        assert_eq!(
            lex_iast("ka. 15..।").unwrap(),
            [
                Token::Consonant(C::K),
                dep(V::A),
                Token::Danda,
                Token::Passthrough(' '),
                Token::Digit(1),
                Token::Digit(5),
                Token::DoubleDanda,
                Token::Danda,
            ]
        );
    }

    #[test]
    fn decomposed_and_uppercase_input() {
        assert_eq!(lex_iast("RA\u{0304}MAH\u{0323}").unwrap(), lex_iast("rāmaḥ").unwrap());
    }

    #[test]
    fn unknown_scalar() {
        let err = lex_iast("kaf").unwrap_err();
        assert_eq!(err, Diagnostic::new(2, "f", Reason::UnknownScalar));
        let err = lex_iast("ka-ma").unwrap_err();
        assert_eq!(err.reason, Reason::UnknownScalar);

        let lexed = lex_iast_with("kaxa", Mode::Lenient).unwrap();
        assert_eq!(lexed.diagnostics.len(), 1);
        assert_eq!(render_iast(&lexed.tokens), "kaxa");
    }

    #[test]
    fn renders() {
        assert_eq!(render_iast(&[]), "");
        let toks = lex_iast("sarvasya cāhaṃ hṛdi saṃniviṣṭo").unwrap();
        assert_eq!(render_iast(&toks), "sarvasya cāhaṃ hṛdi saṃniviṣṭo");
    }
}
