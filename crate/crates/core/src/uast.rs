//! UAST: the ASCII typesetting scheme.
//!
//! UAST extends the `/key/` syntax with three rules:
//!
//! * a consonant carries an implicit `a` unless a vowel follows it, so
//!   `kamala` and `kml` lex to the same tokens;
//! * `-` after a consonant removes that implicit vowel (halanta);
//! * `\` after a vowel makes it an independent letter; anywhere else it
//!   only ends the current unit, which stops `d\h` from reading as `dh`.
//!
//! Scanning is a single left-to-right pass with at most two scalars of
//! lookahead.

use crate::error::{Diagnostic, Reason};
use crate::iast::push_ascii_spelling;
use crate::io_codec::{scan_ascii, Item};
use crate::letters::{digraph, letter, Letter};
use crate::tables::{Consonant, Vowel};
use crate::token::{is_passthrough, Lexed, Mode, Token};

pub fn lex_uast(text: &str) -> Result<Vec<Token>, Diagnostic> {
    lex_uast_with(text, Mode::Strict).map(|l| l.tokens)
}

pub fn lex_uast_with(text: &str, mode: Mode) -> Result<Lexed, Diagnostic> {
    let mut lexed = Lexed::default();
    let items = scan_ascii(text, mode, &mut lexed.diagnostics)?;
    UastLexer::new(text, mode, &mut lexed).run(&items)?;
    Ok(lexed)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Prev {
    Start,
    /// Whitespace, punctuation, digits and verbatim text.
    Boundary,
    Consonant,
    Vowel,
    Mark,
    Hyphen,
}

struct UastLexer<'a> {
    text: &'a str,
    mode: Mode,
    lexed: &'a mut Lexed,
    /// The last token is a consonant whose vowel is still undecided.
    pending: bool,
    prev: Prev,
}

impl<'a> UastLexer<'a> {
    fn new(text: &'a str, mode: Mode, lexed: &'a mut Lexed) -> Self {
        UastLexer {
            text,
            mode,
            lexed,
            pending: false,
            prev: Prev::Start,
        }
    }

    fn settle(&mut self) {
        if self.pending {
            self.lexed.tokens.push(Token::dependent(Vowel::A));
            self.pending = false;
        }
    }

    fn push_boundary(&mut self, token: Token) {
        self.settle();
        self.lexed.tokens.push(token);
        self.prev = Prev::Boundary;
    }

    fn reject(&mut self, item: &Item, reason: Reason) -> Result<(), Diagnostic> {
        let slice = item.slice(self.text);
        let diag = Diagnostic::new(item.offset, slice, reason);
        if self.mode == Mode::Strict {
            return Err(diag);
        }
        self.lexed.diagnostics.push(diag);
        self.push_boundary(Token::Verbatim(slice.to_owned()));
        Ok(())
    }

    fn run(mut self, items: &[Item]) -> Result<(), Diagnostic> {
        let mut i = 0;
        while i < items.len() {
            let item = items[i];
            let next = items.get(i + 1).filter(|n| !n.verbatim);
            i += 1;
            if item.verbatim {
                self.push_boundary(Token::Verbatim(item.slice(self.text).to_owned()));
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
                let backslash = items
                    .get(i)
                    .is_some_and(|n| !n.verbatim && n.ch == '\\');
                match unit {
                    Letter::Consonant(c) => self.consonant(c),
                    Letter::Vowel(v) => self.vowel(v, false, backslash),
                    Letter::NasalA => self.vowel(Vowel::A, true, backslash),
                    Letter::Anusvara => self.mark(Token::Anusvara),
                    Letter::Visarga => self.mark(Token::Visarga),
                }
                if backslash && matches!(unit, Letter::Vowel(_) | Letter::NasalA) {
                    i += 1;
                }
                continue;
            }
            match item.ch {
                '-' => {
                    if self.pending {
                        self.pending = false;
                        self.prev = Prev::Hyphen;
                    } else {
                        self.reject(&item, Reason::DanglingHyphen)?;
                    }
                }
                '\\' => {
                    if matches!(self.prev, Prev::Start | Prev::Boundary) {
                        self.reject(&item, Reason::DanglingBackslash)?;
                    }
                }
                '.' if next.is_some_and(|n| n.ch == '.') => {
                    i += 1;
                    self.push_boundary(Token::DoubleDanda);
                }
                '.' => self.push_boundary(Token::Danda),
                c @ '0'..='9' => self.push_boundary(Token::Digit(c as u8 - b'0')),
                c if is_passthrough(c) => self.push_boundary(Token::Passthrough(c)),
                c if c.is_ascii_alphabetic() => self.reject(&item, Reason::UnknownLetter)?,
                _ => self.reject(&item, Reason::UnknownScalar)?,
            }
        }
        self.settle();
        Ok(())
    }

    fn consonant(&mut self, c: Consonant) {
        self.settle();
        self.lexed.tokens.push(Token::Consonant(c));
        self.pending = true;
        self.prev = Prev::Consonant;
    }

    fn vowel(&mut self, vowel: Vowel, nasalized: bool, explicit: bool) {
        // An explicit (independent) vowel cannot attach, so a pending
        // consonant keeps its implicit a.
        let independent = explicit || !self.pending;
        if explicit {
            self.settle();
        }
        self.pending = false;
        self.lexed.tokens.push(Token::Vowel {
            vowel,
            independent,
            nasalized,
        });
        self.prev = Prev::Vowel;
    }

    fn mark(&mut self, token: Token) {
        self.settle();
        self.lexed.tokens.push(token);
        self.prev = Prev::Mark;
    }
}

/// How [`render_uast_with`] spells the vowel `a` after a consonant.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum UastStyle {
    /// Every vowel written out: `kamala`.
    #[default]
    Explicit,
    /// The implicit `a` omitted wherever that reads back the same: `kml`.
    Compact,
}

/// Renders canonical UAST. `lex_uast` of the result gives back `tokens`.
pub fn render_uast(tokens: &[Token]) -> String {
    render_uast_with(tokens, UastStyle::Explicit)
}

pub fn render_uast_with(tokens: &[Token], style: UastStyle) -> String {
    let mut out = String::with_capacity(tokens.len() * 2);
    render_uast_into(tokens, style, &mut out);
    out
}

pub fn render_uast_into(tokens: &[Token], style: UastStyle, out: &mut String) {
    for (i, token) in tokens.iter().enumerate() {
        let prev = i.checked_sub(1).map(|j| &tokens[j]);
        let next = tokens.get(i + 1);
        match token {
            Token::Consonant(c) => {
                push_ascii_spelling(c.iast(), out);
                if !next.is_some_and(Token::is_dependent_vowel) {
                    out.push('-');
                }
            }
            Token::Vowel {
                vowel,
                independent: false,
                nasalized,
            } => {
                if *vowel == Vowel::A && !nasalized && implied_a(prev, next, style) {
                    continue;
                }
                push_vowel(*vowel, *nasalized, out);
            }
            Token::Vowel {
                vowel,
                independent: true,
                nasalized,
            } => {
                push_vowel(*vowel, *nasalized, out);
                let word_initial = matches!(
                    prev,
                    None | Some(
                        Token::Passthrough(_)
                            | Token::Danda
                            | Token::DoubleDanda
                            | Token::Digit(_)
                    )
                );
                if !word_initial || next.is_some_and(Token::is_vowel) {
                    out.push('\\');
                }
            }
            Token::Anusvara => out.push_str("/m/"),
            Token::Visarga => out.push_str("/h/"),
            Token::Danda => out.push('.'),
            Token::DoubleDanda => out.push_str(".."),
            Token::Digit(d) => out.push(char::from(b'0' + d)),
            Token::Passthrough(c) => out.push(*c),
            Token::Verbatim(s) => out.push_str(s),
        }
    }
}

fn push_vowel(vowel: Vowel, nasalized: bool, out: &mut String) {
    if nasalized && vowel == Vowel::A {
        out.push_str("/au/");
    } else {
        push_ascii_spelling(vowel.iast(), out);
    }
}

/// Whether a dependent `a` may be left unwritten.
fn implied_a(prev: Option<&Token>, next: Option<&Token>, style: UastStyle) -> bool {
    // Before an independent vowel the a is implied in either style, and
    // writing it would risk munching `a` + `i` into `ai`.
    if next.is_some_and(Token::is_independent_vowel) {
        return true;
    }
    if style == UastStyle::Explicit {
        return false;
    }
    let Some(Token::Consonant(c)) = prev else {
        return false;
    };
    match next {
        None => true,
        Some(Token::Consonant(Consonant::H)) => c.aspirated().is_none(),
        Some(
            Token::Consonant(_)
            | Token::Anusvara
            | Token::Visarga
            | Token::Danda
            | Token::DoubleDanda
            | Token::Digit(_)
            | Token::Passthrough(_),
        ) => true,
        Some(Token::Vowel { .. } | Token::Verbatim(_)) => false,
    }
}
