//! Show the script-neutral token stream behind a piece of text.
//!
//! cargo run --example token_stream -- devanagari "सर्वस्य"

use uast::{lex, Mode, Scheme, Token};

fn main() {
    let mut args = std::env::args().skip(1);
    let scheme: Scheme = args
        .next()
        .unwrap_or_else(|| "uast".into())
        .parse()
        .unwrap_or_else(|e| {
            eprintln!("{e}");
            std::process::exit(2);
        });
    let text = args.next().unwrap_or_else(|| "kr-ta d\\hi".into());

    let lexed = match lex(&text, scheme, Mode::Strict) {
        Ok(lexed) => lexed,
        Err(d) => {
            eprintln!("{}: {}", d.reason.as_str(), d.slice);
            std::process::exit(1);
        }
    };
    for token in &lexed.tokens {
        let note = match token {
            Token::Consonant(_) => "consonant",
            Token::Vowel { independent: true, .. } => "independent vowel",
            Token::Vowel { .. } => "dependent vowel",
            _ => "",
        };
        println!("{:<8} {note}", token.to_string());
    }
}
