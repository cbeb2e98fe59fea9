//! Rewrite UAST in canonical (every vowel written) and compact form.

use uast::{lex_uast, render_uast_with, UastStyle};

fn main() {
    let inputs: Vec<String> = match std::env::args().skip(1).collect::<Vec<_>>() {
        args if !args.is_empty() => args,
        _ => ["kml", "KAMALA", "sar-vas-ya", "d\\h /a/\\"].map(String::from).to_vec(),
    };
    for input in inputs {
        match lex_uast(&input) {
            Ok(tokens) => println!(
                "{input:<12} explicit {:<14} compact {}",
                render_uast_with(&tokens, UastStyle::Explicit),
                render_uast_with(&tokens, UastStyle::Compact)
            ),
            Err(e) => println!("{input:<12} error: {e}"),
        }
    }
}
