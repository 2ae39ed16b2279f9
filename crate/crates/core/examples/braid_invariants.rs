//! f-polynomial and arrow polynomial of braid closures.
//!
//! Run with a word, e.g. `cargo run --example braid_invariants -- -n 3 s1 t2 s1'`.

use vtl::invariants::InvariantReport;
use vtl::{arrow_polynomial, f_polynomial, normalized, BraidWord};

fn main() {
    let arg: Vec<String> = std::env::args().skip(1).collect();
    let words: Vec<String> = if arg.is_empty() {
        [
            "-n 1",
            "-n 2 s1",
            "-n 2 t1",
            "-n 2 s1 s1 s1",
            "-n 2 s1 s1 t1",
            "-n 3 s1 s2' s1 s2'",
        ]
        .map(String::from)
        .to_vec()
    } else {
        vec![arg.join(" ")]
    };
    for text in words {
        let w: BraidWord = match text.parse() {
            Ok(w) => w,
            Err(e) => {
                eprintln!("{text}: {e}");
                std::process::exit(2);
            }
        };
        let f = f_polynomial(&w);
        let a = arrow_polynomial(&w);
        println!("{w}  (writhe {})", w.writhe());
        println!("  f          = {f}");
        println!("  arrow      = {a}");
        println!("  f / d      = {}", normalized(&f).unwrap());
        match normalized(&a) {
            Ok(q) => println!("  arrow / d  = {q}"),
            Err(e) => println!("  arrow / d  : {e}"),
        }
        let report = InvariantReport::compute(&w, true, true, false).unwrap();
        println!("  json       = {}", serde_json::to_string(&report).unwrap());
    }
}
