//! Encode IAST into 7-bit UAST-IO and decode it back.
//!
//! cargo run --example uast_io_roundtrip -- "kṛṣṇaḥ prajñā"

use uast::{decode_uast_io, encode_uast_io};

fn main() {
    let text = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "sarvasya cāhaṃ hṛdi saṃniviṣṭo".to_string());
    let ascii = match encode_uast_io(&text) {
        Ok(ascii) => ascii,
        Err(e) => {
            eprintln!("cannot encode: {e}");
            std::process::exit(1);
        }
    };
    let back = decode_uast_io(&ascii).expect("encoder output always decodes");
    println!("iast     {text}");
    println!("uast-io  {ascii}");
    println!("decoded  {back}");
    assert_eq!(back, text);
}
