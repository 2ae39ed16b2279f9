//! Relations and Markov moves leave both invariants unchanged.

use vtl::braid::{random_equivalent, replay};
use vtl::{arrow_polynomial, f_polynomial, BraidWord, Direction, MarkovMove, Relation};

fn main() {
    let w: BraidWord = "-n 3 s1 t2 s1'".parse().unwrap();

    let moved = w
        .markov_move(&MarkovMove::MoveC, Direction::Up)
        .unwrap()
        .markov_move(&MarkovMove::StabTau, Direction::Up)
        .unwrap();
    println!("{w}  ->  {moved}");
    println!("  same f:     {}", f_polynomial(&w) == f_polynomial(&moved));
    println!(
        "  same arrow: {}",
        arrow_polynomial(&w) == arrow_polynomial(&moved)
    );

    let mixed: BraidWord = "-n 3 t1 t2 s1".parse().unwrap();
    let other = mixed.apply_relation(0, Relation::Mixed).unwrap();
    println!("{mixed}  ->  {other}");

    for seed in 0..3 {
        let (v, log) = random_equivalent(&w, seed, 6);
        println!("seed {seed}: {v}");
        for step in &log {
            println!("    {step}");
        }
        assert_eq!(replay(&w, &log).unwrap(), v);
        assert_eq!(arrow_polynomial(&v), arrow_polynomial(&w));
    }
}
