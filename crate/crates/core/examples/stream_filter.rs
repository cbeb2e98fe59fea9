//! A line filter over stdin, reporting bad lines on stderr.
//!
//! printf 'r/a/ma/h/\n/zz/\n' | cargo run --example stream_filter

use std::io;

use uast::{Converter, Mode, Scheme};

fn main() {
    let converter = Converter::new(Scheme::UastIo, Scheme::Devanagari).mode(Mode::Strict);
    let stdin = io::stdin().lock();
    let stdout = io::stdout().lock();
    let summary = converter
        .convert_stream(stdin, stdout, |e| eprintln!("skipped {e}"))
        .unwrap_or_else(|e| {
            eprintln!("{e}");
            std::process::exit(1);
        });
    eprintln!("{} lines, {} failed", summary.lines, summary.failed_lines);
}
