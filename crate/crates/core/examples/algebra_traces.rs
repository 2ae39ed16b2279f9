//! Linear combinations of diagrams, closure traces and the forgetful map.

use vtl::{ArrowPoly, AtlElement, LaurentPoly, VtlElement};

fn main() {
    let n = 3;
    let s1 = VtlElement::crossing_pos(1, n).unwrap();
    let s1_inv = VtlElement::crossing_neg(1, n).unwrap();
    println!("S_1                = {s1}");
    println!("S_1 S_1^-1         = {}", s1.mul(&s1_inv).unwrap());

    let e1 = VtlElement::cup_cap(1, n).unwrap();
    let e2 = VtlElement::cup_cap(2, n).unwrap();
    let x = e1.mul(&e2).unwrap().add(&s1).unwrap();
    println!("x = E_1 E_2 + S_1  = {x}");
    println!("T(x)               = {}", x.trace_f());
    println!("T(embed x)         = {}", x.embed().trace_f());
    println!("d T(x)             = {}", &x.trace_f() * &LaurentPoly::d());

    let f1 = AtlElement::cup_cap(1, 2).unwrap();
    let y = f1.scale(&ArrowPoly::zigzag_factor(1));
    println!("F_1 (z1 F_1)       = {}", f1.mul(&y).unwrap());
    println!("forget(z1 F_1)     = {}", y.forget());
    println!(
        "T(w_1)             = {}",
        AtlElement::virtual_crossing(1, 2)
            .unwrap()
            .trace_a()
            .unwrap()
    );
    println!(
        "json               = {}",
        serde_json::to_string(&e1).unwrap()
    );
}
