//! Exact arithmetic in Z[A, A^-1] and in the arrow ring.

use vtl::{ArrowPoly, LaurentPoly};

fn main() {
    let d = LaurentPoly::d();
    println!("d          = {d}");
    println!("d^2        = {}", LaurentPoly::d_power(2));

    // -A^-2 * d - A^-4 = 1: the scalar identity behind S_i S_i^-1 = 1
    let one = &LaurentPoly::monomial(-1, -2) * &d + LaurentPoly::monomial(-1, -4);
    println!("-A^-2 d - A^-4 = {one}");

    let p = LaurentPoly::d_power(3);
    println!("d^3 / d    = {}", p.exact_div_by_d().unwrap());
    println!("A / d      = {:?}", LaurentPoly::a_pow(1).exact_div_by_d());

    // z_0 is never stored; it is replaced by d on construction.
    let z0 = ArrowPoly::zigzag_factor(0);
    let x = ArrowPoly::zigzag_factor(1) * ArrowPoly::zigzag_factor(2) + z0;
    println!("z1 z2 + z0 = {x}");
    println!("z_k -> d   = {}", x.forget_zigzags());
    println!("json       = {}", serde_json::to_string(&x).unwrap());

    // coefficients are big integers
    let big = LaurentPoly::d_power(60);
    println!("max coeff of d^60 = {}", big.coeff(0));
}
