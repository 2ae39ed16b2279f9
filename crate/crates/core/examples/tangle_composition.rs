//! Flat virtual tangles: composition, closures and predicates.

use vtl::{FlatGenerator, FlatTangle};

fn main() {
    let e: FlatTangle = "[(0,1)-(0,2),(0,3)-(1,2),(1,1)-(1,3)]".parse().unwrap();
    println!("E                 = {e}");
    println!("closure loops     = {}", e.closure_loops());
    println!("non-crossing      = {}", e.is_non_crossing());
    println!("parity tangle     = {}", e.is_parity_tangle());
    println!("included          = {}", e.include());

    let e1 = FlatTangle::generator(FlatGenerator::E(1), 3).unwrap();
    let v2 = FlatTangle::generator(FlatGenerator::V(2), 3).unwrap();
    let (sq, trace) = e1.multiply(&e1).unwrap();
    println!("E_1 E_1           = z^{} {sq}", trace.cycle_count);

    let (a, t1) = e1.multiply(&v2).unwrap();
    let (b, t2) = a.multiply(&e1).unwrap();
    println!(
        "E_1 v_2 E_1       = z^{} {b}",
        t1.cycle_count + t2.cycle_count
    );

    let (p, t) = e.multiply(&e).unwrap();
    println!("E E               = z^{} {p}", t.cycle_count);

    for n in 1..=4 {
        let all = FlatTangle::enumerate(n).unwrap();
        let planar = all.iter().filter(|t| t.is_non_crossing()).count();
        println!("n={n}: {} tangles, {planar} non-crossing", all.len());
    }
}
