//! Labelled tangles: cusp sums of closures and labelled composition.

use vtl::{ArrowGenerator, ArrowTangle, FlatTangle};

fn main() {
    let f: ArrowTangle = "[(0,1)-(0,2):1,(0,3)-(1,2):-6,(1,1)-(1,3):3]"
        .parse()
        .unwrap();
    println!("F                  = {f}");
    println!("closure cusp sums  = {:?}", f.closure_cusp_sums());
    println!("closure zigzags    = {:?}", f.closure_zigzags().unwrap());

    let n = 2;
    let g = |k| ArrowTangle::generator(k, n).unwrap();
    let (ft, _) = g(ArrowGenerator::F(1))
        .multiply(&g(ArrowGenerator::T(1)))
        .unwrap();
    let (ftt, _) = ft.multiply(&g(ArrowGenerator::T(1))).unwrap();
    let (res, trace) = ftt.multiply(&g(ArrowGenerator::F(1))).unwrap();
    println!("F_1 t_1^2 F_1      = z_{:?} {res}", trace.cycle_zigzags);

    let (wt, _) = g(ArrowGenerator::W(1))
        .multiply(&g(ArrowGenerator::T(1)))
        .unwrap();
    let (tw, _) = g(ArrowGenerator::T(2))
        .multiply(&g(ArrowGenerator::W(1)))
        .unwrap();
    println!("w_1 t_1 = t_2 w_1  : {}", wt == tw);

    let e1 = FlatTangle::cup_cap(1, 3).unwrap();
    println!(
        "iota(E_1)          = {}",
        ArrowTangle::iota_nu(&e1).unwrap()
    );
    println!(
        "iota(v_1)          = {:?}",
        ArrowTangle::iota_nu(&FlatTangle::crossing(1, 2).unwrap())
    );
}
