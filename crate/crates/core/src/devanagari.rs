//! Devanagari: lexing into tokens and rendering back.
//!
//! Unicode gives every consonant letter an inherent `a` and removes it with
//! a virama. Tokens have no inherent vowel, so the lexer materialises the
//! implicit `a` and the renderer emits a virama after every consonant that
//! has no vowel token following it.

use thiserror::Error;

use crate::error::{Diagnostic, Reason};
use crate::tables::{
    devanagari_digit, Consonant, Vowel, ANUSVARA, CANDRABINDU, DANDA, DIGIT_ZERO, DOUBLE_DANDA,
    VIRAMA, VISARGA,
};
use crate::token::{is_passthrough, Lexed, Mode, Token};

fn consonant_of(c: char) -> Option<Consonant> {
    Consonant::ALL.iter().copied().find(|k| k.letter() == c)
}

fn vowel_of_letter(c: char) -> Option<Vowel> {
    Vowel::ALL.iter().copied().find(|v| v.letter() == c)
}

fn vowel_of_sign(c: char) -> Option<Vowel> {
    Vowel::ALL.iter().copied().find(|v| v.sign() == Some(c))
}

pub fn lex_devanagari(text: &str) -> Result<Vec<Token>, Diagnostic> {
    lex_devanagari_with(text, Mode::Strict).map(|l| l.tokens)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum State {
    Other,
    /// A consonant letter still carrying its inherent vowel.
    Inherent,
    /// The last token is the vowel at this index.
    Vowel(usize),
}

pub fn lex_devanagari_with(text: &str, mode: Mode) -> Result<Lexed, Diagnostic> {
    let mut lexed = Lexed::default();
    let out = &mut lexed.tokens;
    let mut state = State::Other;

    fn settle(out: &mut Vec<Token>, state: &mut State) {
        if *state == State::Inherent {
            out.push(Token::dependent(Vowel::A));
        }
        *state = State::Other;
    }

    for (offset, ch) in text.char_indices() {
        let reason = if let Some(c) = consonant_of(ch) {
            settle(out, &mut state);
            out.push(Token::Consonant(c));
            state = State::Inherent;
            None
        } else if let Some(v) = vowel_of_letter(ch) {
            settle(out, &mut state);
            out.push(Token::independent(v));
            state = State::Vowel(out.len() - 1);
            None
        } else if let Some(v) = vowel_of_sign(ch) {
            if state == State::Inherent {
                out.push(Token::dependent(v));
                state = State::Vowel(out.len() - 1);
                None
            } else {
                Some(Reason::OrphanVowelSign)
            }
        } else if ch == VIRAMA {
            if state == State::Inherent {
                state = State::Other;
                None
            } else {
                Some(Reason::OrphanVirama)
            }
        } else if ch == CANDRABINDU {
            match state {
                State::Inherent => {
                    out.push(Token::Vowel {
                        vowel: Vowel::A,
                        independent: false,
                        nasalized: true,
                    });
                    state = State::Other;
                    None
                }
                State::Vowel(idx) => match &mut out[idx] {
                    Token::Vowel {
                        vowel: Vowel::A,
                        nasalized: nasalized @ false,
                        ..
                    } => {
                        *nasalized = true;
                        state = State::Other;
                        None
                    }
                    _ => Some(Reason::UnsupportedNasalization),
                },
                State::Other => Some(Reason::OrphanCandrabindu),
            }
        } else {
            let token = match ch {
                ANUSVARA => Some(Token::Anusvara),
                VISARGA => Some(Token::Visarga),
                DANDA => Some(Token::Danda),
                DOUBLE_DANDA => Some(Token::DoubleDanda),
                '\u{0966}'..='\u{096F}' => Some(Token::Digit((ch as u32 - DIGIT_ZERO as u32) as u8)),
                '0'..='9' => Some(Token::Digit(ch as u8 - b'0')),
                c if is_passthrough(c) => Some(Token::Passthrough(c)),
                _ => None,
            };
            match token {
                Some(token) => {
                    settle(out, &mut state);
                    out.push(token);
                    None
                }
                None => Some(Reason::UnknownScalar),
            }
        };
        if let Some(reason) = reason {
            let slice = &text[offset..offset + ch.len_utf8()];
            let diag = Diagnostic::new(offset, slice, reason);
            if mode == Mode::Strict {
                return Err(diag);
            }
            lexed.diagnostics.push(diag);
            settle(out, &mut state);
            out.push(Token::Verbatim(slice.to_owned()));
        }
    }
    settle(out, &mut state);
    Ok(lexed)
}

/// A token stream that has no Devanagari spelling.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("dependent-vowel-without-consonant at token {index}")]
pub struct RenderError {
    pub index: usize,
}

pub fn render_devanagari(tokens: &[Token]) -> Result<String, RenderError> {
    let mut out = String::with_capacity(tokens.len() * 3);
    render_devanagari_into(tokens, &mut out)?;
    Ok(out)
}

pub fn render_devanagari_into(tokens: &[Token], out: &mut String) -> Result<(), RenderError> {
    for (index, token) in tokens.iter().enumerate() {
        match token {
            Token::Consonant(c) => {
                out.push(c.letter());
                if !tokens.get(index + 1).is_some_and(Token::is_dependent_vowel) {
                    out.push(VIRAMA);
                }
            }
            Token::Vowel {
                vowel,
                independent,
                nasalized,
            } => {
                if *independent {
                    out.push(vowel.letter());
                } else if index > 0 && tokens[index - 1].is_consonant() {
                    out.extend(vowel.sign());
                } else {
                    return Err(RenderError { index });
                }
                if *nasalized {
                    out.push(CANDRABINDU);
                }
            }
            Token::Anusvara => out.push(ANUSVARA),
            Token::Visarga => out.push(VISARGA),
            Token::Danda => out.push(DANDA),
            Token::DoubleDanda => out.push(DOUBLE_DANDA),
            Token::Digit(d) => out.push(devanagari_digit(*d)),
            Token::Passthrough(c) => out.push(*c),
            Token::Verbatim(s) => out.push_str(s),
        }
    }
    Ok(())
}
