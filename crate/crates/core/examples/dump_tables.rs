//! Print the diacritic key table and the phoneme inventory.

use uast::tables::{inventory, DIACRITICS};

fn main() {
    println!("key  char  U+");
    for row in &DIACRITICS {
        println!("{:<4} {:<5} {:04X}", row.ascii_key, row.codepoint, row.codepoint as u32);
    }
    println!();
    for phoneme in inventory() {
        println!("{:<4} {:?}", phoneme.iast, phoneme.class);
    }
}
