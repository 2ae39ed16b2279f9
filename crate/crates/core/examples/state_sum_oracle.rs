//! Brute-force state sums against the algebra pipeline.

use std::time::Instant;

use vtl::oracle::{arrow_state_sum, f_state_sum, Mode};
use vtl::{arrow_polynomial, f_polynomial, BraidWord};

fn main() {
    for text in [
        "-n 2 s1 t1",
        "-n 3 s1 s2' t1 t2",
        "-n 2 s1 s1 t1",
        "-n 3 s1 s2' s1 s2' t1 s2 t2 s1",
    ] {
        let w: BraidWord = text.parse().unwrap();
        let f = f_state_sum(&w, Mode::Sequential).unwrap();
        let a = arrow_state_sum(&w, Mode::Sequential).unwrap();
        println!("{w}: {} states", f.states);
        println!("  oracle f     = {}", f.value);
        println!("  oracle arrow = {}", a.value);
        println!(
            "  agree        = {}",
            f.value == f_polynomial(&w) && a.value == arrow_polynomial(&w)
        );
    }

    let w = BraidWord::from_letters(3, &"s1 t2 s2' ".repeat(6)).unwrap();
    for mode in [Mode::Sequential, Mode::Parallel] {
        let t = Instant::now();
        let s = arrow_state_sum(&w, mode).unwrap();
        println!("{mode:?}: {} states in {:?}", s.states, t.elapsed());
    }
}
