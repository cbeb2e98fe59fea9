//! Convert one text into every scheme, then check each result converts back.

use uast::{convert, Mode, Scheme};

fn main() {
    let source = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "vedāntakṛdvedavideva cāham".to_string());

    println!("{:<12}{source}", Scheme::Iast.name());
    for to in Scheme::ALL {
        let there = convert(&source, Scheme::Iast, to, Mode::Strict).unwrap_or_else(|e| {
            eprintln!("{e}");
            std::process::exit(1);
        });
        let back = convert(&there, to, Scheme::Iast, Mode::Strict).expect("output reads back");
        let mark = if back == source { "ok" } else { "MISMATCH" };
        println!("{:<12}{there}  [{mark}]", to.name());
    }
}
