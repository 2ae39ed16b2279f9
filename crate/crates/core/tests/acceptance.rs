//! Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any
//! failure.

use std::panic::{self, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::Instant;

use vtl::checks::{passing_conventions, run, CheckConfig, Report, Suite};
use vtl::cli;
use vtl::oracle::{arrow_state_sum, f_state_sum, Mode};
use vtl::{
    arrow_polynomial, f_polynomial, normalized, ArrowPoly, ArrowTangle, BraidWord, CuspConvention,
    FlatTangle, LaurentPoly, VtlElement,
};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

const SEED: u64 = 2024;

fn suite(s: Suite, max_n: usize, samples: usize) -> Report {
    let cfg = CheckConfig {
        samples,
        ..CheckConfig::new(max_n, SEED)
    };
    run(s, &cfg)
}

fn suites(reports: &[Report]) -> Outcome {
    let summary: Vec<String> = reports
        .iter()
        .map(|r| format!("{} {}/{}", r.suite, r.checked - r.failed, r.checked))
        .collect();
    match reports.iter().find(|r| !r.passed()) {
        None => Ok(summary.join(", ")),
        Some(r) => Err(r.to_string().trim_end().to_string()),
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn word(s: &str) -> BraidWord {
    s.parse().unwrap()
}

fn presentation_vtl() -> Outcome {
    suites(&[suite(Suite::PresentationVtl, 6, 200)])
}

fn presentation_atl() -> Outcome {
    let detail = suites(&[suite(Suite::PresentationAtl, 5, 200)])?;
    let passing = passing_conventions(3, SEED);
    ensure(passing == [CuspConvention::STANDARD], || {
        format!("conventions passing the relations: {passing:?}")
    })?;
    Ok(format!("{detail}; unique cusp convention {:?}", passing[0]))
}

fn derived() -> Outcome {
    suites(&[suite(Suite::Derived, 5, 200)])
}

fn markov_traces() -> Outcome {
    suites(&[suite(Suite::MarkovF, 4, 200), suite(Suite::MarkovA, 4, 200)])
}

fn representation() -> Outcome {
    let detail = suites(&[suite(Suite::Representation, 5, 200)])?;
    for n in 2..=5 {
        for i in 1..n {
            let s = VtlElement::crossing_pos(i, n).unwrap();
            let si = VtlElement::crossing_neg(i, n).unwrap();
            let one = VtlElement::one(n);
            ensure(
                s.mul(&si).unwrap() == one && si.mul(&s).unwrap() == one,
                || format!("S_{i} S_{i}^-1 != 1 for n={n}"),
            )?;
        }
    }
    Ok(detail)
}

fn invariance() -> Outcome {
    let cfg = CheckConfig {
        samples: 200,
        moves: 6,
        ..CheckConfig::new(4, SEED)
    };
    suites(&[run(Suite::Invariance, &cfg)])
}

fn oracle_equivalence() -> Outcome {
    suites(&[suite(Suite::Oracle, 4, 200)])
}

fn classical_restriction() -> Outcome {
    suites(&[
        suite(Suite::TlRestriction, 5, 200),
        suite(Suite::Parity, 4, 200),
    ])
}

fn micro_examples() -> Outcome {
    let e: FlatTangle = "[(0,1)-(0,2),(0,3)-(1,2),(1,3)-(1,1)]".parse().unwrap();
    ensure(e.closure_loops() == 1, || {
        format!("t_n(E) = {}", e.closure_loops())
    })?;
    let tf = VtlElement::basis(e.clone()).trace_f();
    ensure(tf == LaurentPoly::d(), || format!("T'(E) = {tf}"))?;

    let f: ArrowTangle = "[(0,1)-(0,2):1,(0,3)-(1,2):-6,(1,1)-(1,3):3]"
        .parse()
        .unwrap();
    let h = f.closure_cusp_sums();
    ensure(h == [4], || format!("h = {h:?}"))?;
    let z = f.closure_zigzags().unwrap();
    ensure(z == [2], || format!("zeta = {z:?}"))?;
    let ta = vtl::AtlElement::basis(f).trace_a().unwrap();
    ensure(ta == ArrowPoly::zigzag_factor(2), || {
        format!("T'(F) = {ta}")
    })?;

    let left: FlatTangle = "[(0,1)-(1,3),(0,2)-(0,4),(0,3)-(1,1),(1,2)-(1,4)]"
        .parse()
        .unwrap();
    let right: FlatTangle = "[(0,1)-(1,2),(0,2)-(0,4),(0,3)-(1,4),(1,1)-(1,3)]"
        .parse()
        .unwrap();
    let (prod, trace) = left.multiply(&right).unwrap();
    ensure(trace.cycle_count == 1, || {
        format!("m = {}", trace.cycle_count)
    })?;
    let (sq, t2) = FlatTangle::cup_cap(1, 2)
        .unwrap()
        .multiply(&FlatTangle::cup_cap(1, 2).unwrap())
        .unwrap();
    ensure(
        t2.cycle_count == 1 && sq == FlatTangle::cup_cap(1, 2).unwrap(),
        || "E_1^2 != z E_1".into(),
    )?;
    Ok(format!(
        "t_n(E)=1, T'(E)={tf}, h=4, zeta=2, T'(F)={ta}, m=1 for {left} * {right} = {prod}"
    ))
}

fn unknots() -> Outcome {
    let d = LaurentPoly::d();
    for text in ["-n 1", "-n 2 s1", "-n 2 s1'", "-n 2 t1"] {
        let w = word(text);
        let (f, a) = (f_polynomial(&w), arrow_polynomial(&w));
        ensure(f == d && a == ArrowPoly::from(d.clone()), || {
            format!("{w}: f={f}, arrow={a}")
        })?;
        ensure(
            normalized(&f).unwrap().is_one() && normalized(&a).unwrap() == ArrowPoly::one(),
            || format!("{w}: normalized values are not 1"),
        )?;
    }
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = cli::run(
        ["invariant", "-n", "1", "", "--both", "--normalized"],
        &mut out,
        &mut err,
    );
    let out = String::from_utf8(out).unwrap();
    ensure(code == 0 && out == "f: 1\narrow: 1\n", || {
        format!("cli printed {out:?}")
    })?;
    Ok(format!(
        "f = arrow = {d}, normalized 1, for the empty 1-braid, s1 and t1"
    ))
}

const TREFOIL_F: &str = "A^-18 - A^-10 - A^-6 - A^-2";
const TREFOIL_ARROW: &str = "A^-18 - A^-10 - A^-6 - A^-2";
const VIRTUAL_TREFOIL_F: &str = "A^-12 - A^-6 - A^-4 - A^-2";
const VIRTUAL_TREFOIL_ARROW: &str = "(-A^-6 - A^-2) + (-A^-10 + A^-6)*z1";

fn goldens() -> Outcome {
    for (text, gf, ga) in [
        ("-n 2 s1 s1 s1", TREFOIL_F, TREFOIL_ARROW),
        ("-n 2 s1 s1 t1", VIRTUAL_TREFOIL_F, VIRTUAL_TREFOIL_ARROW),
    ] {
        let w = word(text);
        let of = f_state_sum(&w, Mode::Sequential).unwrap().value;
        let oa = arrow_state_sum(&w, Mode::Sequential).unwrap().value;
        ensure(of.to_string() == gf && oa.to_string() == ga, || {
            format!("{w}: oracle gives f={of}, arrow={oa}")
        })?;
        ensure(f_polynomial(&w) == of && arrow_polynomial(&w) == oa, || {
            format!("{w}: algebra disagrees with the goldens")
        })?;
    }
    let virt = arrow_polynomial(&word("-n 2 s1 s1 t1"));
    ensure(virt.has_zigzag_variables(), || {
        "virtual trefoil arrow has no z_k".into()
    })?;
    Ok(format!(
        "trefoil f={TREFOIL_F}; virtual trefoil arrow={VIRTUAL_TREFOIL_ARROW}"
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        ("presentation VTL, n=2..6", presentation_vtl),
        (
            "presentation ATL, n=2..5, cusp convention",
            presentation_atl,
        ),
        ("derived relations, n<=5", derived),
        ("Markov trace axioms, n<=4", markov_traces),
        ("representation well-defined, n<=5", representation),
        ("Markov-move invariance, 200 words x 6 moves", invariance),
        ("oracle equivalence, 200 words", oracle_equivalence),
        (
            "classical restriction and parity tangles",
            classical_restriction,
        ),
        ("micro-examples", micro_examples),
        ("unknot conventions", unknots),
        ("golden link values", goldens),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (k, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = panic::catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS {:>2}. {name} [{secs:.2}s]: {detail}", k + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2}. {name} [{secs:.2}s]: {why}", k + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
