//! One line per acceptance criterion. Any failing criterion makes the
//! process exit nonzero, after all lines are printed.

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::Duration;

use superflag::build::{all_diagrams, build_full, build_symbol, cross_check_symbol};
use superflag::cases::{run_many, verify_all, CaseReport, CaseRequest, ReductionMode};
use superflag::geometry::{atlas, max_integral_rows, integral_witness, null_span, special_cases_check};
use superflag::prolong::Status;
use superflag::roots::{identification_classes, Algebra, ParabolicId};
use superflag::superfields::realize::{
    cubic_annihilator, degree_zero_comparison, euler_field, f4_fields, g3_contact_functions, grading_matches,
};
use superflag::superfields::{closure_check, function_closure, ContactForm};
use superflag::SuperDim;

type Check = Result<(), String>;

fn ensure(ok: bool, why: impl FnOnce() -> String) -> Check {
    if ok {
        Ok(())
    } else {
        Err(why())
    }
}

fn sd(e: usize, o: usize) -> SuperDim {
    SuperDim::new(e, o)
}

fn prolongation(reports: &[CaseReport], total: SuperDim, per_case: Duration, all: Duration) -> Check {
    for r in reports {
        ensure(r.status == Status::Finite, || format!("{} is {}", r.case, r.status))?;
        ensure(r.superdim == total, || format!("{} has {}", r.case, r.superdim))?;
        ensure(r.oracle == Some(true), || format!("{} differs from the full algebra", r.case))?;
        ensure(r.elapsed < per_case, || format!("{} took {:?}", r.case, r.elapsed))?;
    }
    let sum: Duration = reports.iter().map(|r| r.elapsed).sum();
    ensure(sum < all, || format!("total {sum:?}"))
}

fn dark_dichotomy() -> Check {
    let expected: BTreeMap<(Algebra, &str, &str), SuperDim> = [
        ((Algebra::G3, "I", "1"), sd(22, 0)),
        ((Algebra::G3, "III", "1"), sd(17, 16)),
        ((Algebra::F4, "I", "1"), sd(29, 0)),
        ((Algebra::F4, "I", "4"), sd(52, 48)),
        ((Algebra::F4, "III", "3"), sd(28, 24)),
    ]
    .into_iter()
    .collect();
    let expected: BTreeMap<ParabolicId, SuperDim> =
        expected.into_iter().map(|((a, d, c), v)| (ParabolicId::parse(a, d, c).unwrap(), v)).collect();
    let mut reqs = Vec::new();
    let mut classes = Vec::new();
    for a in Algebra::ALL {
        for class in identification_classes(a) {
            for p in &class {
                reqs.push(CaseRequest { parabolic: p.clone(), reduce: ReductionMode::None, threshold: None });
                classes.push(class.clone());
            }
        }
    }
    let reports = run_many(&reqs, None).map_err(|e| e.to_string())?;
    let mut dark_classes = 0;
    for ((req, class), r) in reqs.iter().zip(&classes).zip(&reports) {
        let want = class.iter().find_map(|q| expected.get(q));
        let full = build_full(req.parabolic.diagram).map_err(|e| e.to_string())?;
        let g0 = full.graded_dims_for(&req.parabolic)[&0];
        match want {
            Some(&d) => {
                ensure(r.status == Status::ThresholdExceeded, || format!("{} is {}", r.case, r.status))?;
                ensure(r.level_dims[0] == d, || format!("{} has der_0 {}", r.case, r.level_dims[0]))?;
                ensure(d != g0, || format!("{} has der_0 = g_0", r.case))?;
                if class[0] == req.parabolic {
                    dark_classes += 1;
                }
            }
            None => {
                ensure(r.status == Status::Finite, || format!("{} is {}", r.case, r.status))?;
                ensure(r.level_dims[0] == g0, || format!("{} has der_0 {} != g_0", r.case, r.level_dims[0]))?;
            }
        }
    }
    ensure(dark_classes == 5, || format!("{dark_classes} dark classes"))
}

fn golden_atlas() -> Check {
    for (a, want) in [
        (Algebra::G3, include_str!("data/growth_g3.txt")),
        (Algebra::F4, include_str!("data/growth_f4.txt")),
    ] {
        let got = atlas(a).map_err(|e| e.to_string())?;
        ensure(got == want, || format!("{a} atlas differs from the golden file"))?;
        ensure(got.lines().count() == identification_classes(a).len(), || format!("{a} row count"))?;
    }
    Ok(())
}

fn jacobi_gate(reports: &[CaseReport]) -> Check {
    let mut n = [0usize; 4];
    for a in Algebra::ALL {
        for class in identification_classes(a) {
            let s = build_symbol(&class[0]).map_err(|e| e.to_string())?;
            s.check_jacobi().map_err(|e| format!("symbol {}: {e:?}", class[0]))?;
            n[0] += 1;
        }
    }
    for d in all_diagrams() {
        let f = build_full(d).map_err(|e| e.to_string())?;
        f.check_jacobi().map_err(|e| format!("full {d}: {e:?}"))?;
        n[1] += 1;
    }
    for r in reports {
        ensure(r.jacobi == Some(true), || format!("prolongation of {}", r.case))?;
        n[2] += 1;
    }
    let form = ContactForm::odd_seven();
    let funcs = g3_contact_functions(&form).map_err(|e| e.to_string())?;
    let c = function_closure(&form, "G(3)", &funcs).map_err(|e| e.to_string())?;
    c.algebra.check_jacobi().map_err(|e| format!("contact closure: {e:?}"))?;
    let (_, fields) = f4_fields().map_err(|e| e.to_string())?;
    let g = closure_check("F(4)", &fields).map_err(|e| e.to_string())?;
    g.check_jacobi().map_err(|e| format!("field closure: {e:?}"))?;
    n[3] += 2;
    ensure(n == [74, 10, 74, 2], || format!("counts {n:?}"))
}

fn null_spans() -> Check {
    let g3 = [("II_1", sd(2, 1)), ("III_13", sd(2, 1)), ("IV_23", sd(0, 2)), ("IV_123", sd(1, 1))];
    ensure(special_cases_check(Algebra::G3, &g3).map_err(|e| e.to_string())?, || "G3 specials".into())?;
    ensure(special_cases_check(Algebra::F4, &[]).map_err(|e| e.to_string())?, || "F4 specials".into())?;
    let ambient = |a, d, c| -> Result<SuperDim, String> {
        let s = build_symbol(&ParabolicId::parse(a, d, c).unwrap()).map_err(|e| e.to_string())?;
        Ok(null_span(&s).ambient)
    };
    let want = [
        (("II", "1"), sd(2, 2)),
        (("III", "13"), sd(2, 2)),
        (("IV", "23"), sd(0, 3)),
        (("IV", "123"), sd(1, 2)),
    ];
    for ((d, c), w) in want {
        let got = ambient(Algebra::G3, d, c)?;
        ensure(got == w, || format!("G3 {d}_{c} ambient {got}"))?;
    }
    let full = identification_classes(Algebra::G3)
        .iter()
        .filter(|c| build_symbol(&c[0]).map(|s| null_span(&s).full).unwrap_or(false))
        .count();
    ensure(full == 15, || format!("{full} full G3 spans"))
}

fn witnesses() -> Check {
    let rows = max_integral_rows().map_err(|e| e.to_string())?;
    ensure(rows.len() == 15, || format!("{} rows", rows.len()))?;
    for r in &rows {
        for (t, ok) in &r.found {
            ensure(*ok, || format!("no witness {t} for {}", r.case))?;
        }
    }
    let s = build_symbol(&ParabolicId::parse(Algebra::G3, "I", "2").unwrap()).map_err(|e| e.to_string())?;
    ensure(integral_witness(&s, sd(1, 2)).is_none(), || "a (1|2) witness for G3 I_2".into())
}

fn contact_realization() -> Check {
    let form = ContactForm::odd_seven();
    let funcs = g3_contact_functions(&form).map_err(|e| e.to_string())?;
    ensure(funcs.len() == 31, || format!("{} functions", funcs.len()))?;
    let c = function_closure(&form, "G(3)", &funcs).map_err(|e| e.to_string())?;
    ensure(c.algebra.superdim() == sd(17, 14), || format!("closure {}", c.algebra.superdim()))?;
    ensure(c.homomorphism, || "f -> X_f is not a homomorphism".into())?;
    ensure(c.contact, || "a field leaves the distribution".into())?;
    let (r, _) = cubic_annihilator(&form).map_err(|e| e.to_string())?;
    ensure(r.der0 == sd(22, 0), || format!("der_0 {}", r.der0))?;
    ensure(r.annihilator == sd(15, 0) && r.derived == sd(14, 0), || format!("{r:?}"))
}

fn field_realization() -> Check {
    let (coords, fields) = f4_fields().map_err(|e| e.to_string())?;
    let g = closure_check("F(4)", &fields).map_err(|e| e.to_string())?;
    ensure(g.superdim() == sd(24, 16), || format!("closure {}", g.superdim()))?;
    let dims: Vec<(i32, SuperDim)> = g.graded_dims().into_iter().collect();
    ensure(dims == [(-1, sd(6, 4)), (0, sd(12, 8)), (1, sd(6, 4))], || format!("{dims:?}"))?;
    ensure(grading_matches(&euler_field(&coords), &fields), || "grading eigenvalues".into())?;
    let d = degree_zero_comparison().map_err(|e| e.to_string())?;
    ensure(d.agree(), || format!("{d:?}"))?;
    ensure(d.matrix.dim == sd(12, 8) && d.matrix.derived == sd(11, 8), || format!("{:?}", d.matrix))
}

fn oracle_cross_checks() -> Check {
    for a in Algebra::ALL {
        for class in identification_classes(a) {
            let p = &class[0];
            let f = build_full(p.diagram).map_err(|e| e.to_string())?;
            let s = build_symbol(p).map_err(|e| e.to_string())?;
            let cc = cross_check_symbol(&f, &s, p).map_err(|e| e.to_string())?;
            ensure(cc.passed(), || format!("{p}: {cc:?}"))?;
        }
    }
    let mut pairs = 0;
    for d in all_diagrams() {
        let ps = d.parabolics();
        for big in &ps {
            let s = build_symbol(big).map_err(|e| e.to_string())?;
            for small in ps.iter().filter(|q| q.crossing().iter().all(|&k| big.crosses(k))) {
                let direct = build_symbol(small).map_err(|e| e.to_string())?;
                let via = s.regrade(small).map_err(|e| e.to_string())?;
                ensure(
                    via.graded_dims() == direct.graded_dims() && via.bracket_ranks() == direct.bracket_ranks(),
                    || format!("{small} via {big}"),
                )?;
                pairs += 1;
            }
        }
    }
    ensure(pairs > 0, || "no pairs".into())
}

fn main() -> ExitCode {
    let summary = verify_all(&Algebra::ALL, None).expect("batch run");
    let (g3, f4): (Vec<CaseReport>, Vec<CaseReport>) =
        summary.reports.iter().cloned().partition(|r| r.case.starts_with("G3"));
    let criteria: Vec<(&str, Check)> = vec![
        (
            "G(3): 19 cases finite at (17|14) with graded dims of the full algebra",
            ensure(g3.len() == 19, || format!("{} cases", g3.len())).and_then(|_| {
                prolongation(&g3, sd(17, 14), Duration::from_secs(1), Duration::from_secs(30))
            }),
        ),
        (
            "F(4): 55 cases finite at (24|16) with graded dims of the full algebra",
            ensure(f4.len() == 55, || format!("{} cases", f4.len())).and_then(|_| {
                prolongation(&f4, sd(24, 16), Duration::from_secs(5), Duration::from_secs(300))
            }),
        ),
        ("dark cases: unbounded without reduction, level 0 is der_0", dark_dichotomy()),
        ("growth vector atlas matches the golden files", golden_atlas()),
        ("super-Jacobi on symbols, full algebras, prolongations and closures", jacobi_gate(&summary.reports)),
        ("null spans: four G(3) special cases, all others full", null_spans()),
        ("maximal integral witnesses, none of (1|2) for G3 I_2", witnesses()),
        ("G(3) contact realization and the cubic annihilator", contact_realization()),
        ("F(4) vector field realization and its degree 0 block", field_realization()),
        ("symbol vs full algebra and regrading consistency", oracle_cross_checks()),
    ];
    let mut failed = 0;
    for (i, (name, res)) in criteria.iter().enumerate() {
        match res {
            Ok(()) => println!("criterion {:>2} PASS  {name}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {why}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
