//! Typeset UAST input as Devanagari. Redundant `a`s may be left out.
//!
//! cargo run --example typeset_devanagari -- kml "p/u/r-v/i/" "r/a/ma/h/"

use uast::{convert, Mode, Scheme};

fn main() {
    let mut words: Vec<String> = std::env::args().skip(1).collect();
    if words.is_empty() {
        words = ["kamala", "kml", "p/u/r-v/i/", "r/a/ma/h/ 108."]
            .map(String::from)
            .to_vec();
    }
    for word in &words {
        match convert(word, Scheme::Uast, Scheme::Devanagari, Mode::Strict) {
            Ok(dev) => println!("{word:<16} {dev}"),
            Err(e) => println!("{word:<16} error: {e}"),
        }
    }
}
