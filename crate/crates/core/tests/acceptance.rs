//! The twelve acceptance criteria, each evaluated at exact equality.
//!
//! Every criterion is run in full and reported on its own line. The test
//! then requires the set of failing criteria to equal `KNOWN_FAILING`:
//! criterion 9 asks the GF(2) search on T(k) with C = k{x} to return a
//! single table, but a second table with σ(x⊗x) = 0 also satisfies every
//! condition, so it cannot hold.

use std::collections::BTreeSet;
use std::sync::Arc;
use std::time::Instant;

use rayon::prelude::*;

use hopfeq::catalog::{example, fk_operator, fk_sigma, fk_table, Params, Variant};
use hopfeq::freeword::NCPoly;
use hopfeq::frt::{canonical_comodule, chi_relations};
use hopfeq::hopfcore::{Bialgebra, SubcoalgebraView, TableBialgebra};
use hopfeq::hopfelement::{check_identity_101, check_quasitriangular, hopf_element_report, integral_t, TensorElement};
use hopfeq::pairing::{
    integral_round_trip, r_sigma, right_integral_space, search_hopf_functions, sigma_from_r, sigma_inverse_from_rinv,
    InverseOutcome, Mode, Pairing,
};
use hopfeq::tensorlab::{
    component_check_hopf, endo_from_index, invert_endo, leg_embed, search_endos, EndoTensor, Legs,
};
use hopfeq::{check_equation, Equation, Field, Matrix, Scalar, Status};

const KNOWN_FAILING: [usize; 1] = [9];

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn gf2() -> Field {
    Field::prime(2)
}

fn hopf(r: &EndoTensor) -> bool {
    check_equation(Equation::Hopf, r, None).unwrap().is_pass()
}

fn gf2_hopf_solutions() -> Vec<EndoTensor> {
    search_endos(gf2(), 2, Equation::Hopf).unwrap()
}

fn criterion_1() -> Outcome {
    ensure(hopf(&fk_operator(gf2())), || "F(k) R fails over GF(2)".into())?;
    ensure(!hopf(&fk_operator(Field::rationals())), || "F(k) R passes over Q".into())?;
    for n in 1..=3 {
        ensure(hopf(&EndoTensor::identity(Field::rationals(), n)), || format!("identity fails for n={n}"))?;
    }
    let tau = EndoTensor::switch(Field::rationals(), 2);
    ensure(!hopf(&tau), || "τ passes hopf".into())?;
    ensure(check_equation(Equation::Qybe, &tau, None).unwrap().is_pass(), || "τ fails qybe".into())?;
    Ok("F(k) GF(2) pass, Q fail; identity n=1..3; τ hopf fail, qybe pass".into())
}

fn criterion_2() -> Outcome {
    let r = fk_operator(gf2());
    let (r12, r13) = (leg_embed(&r, Legs::L12), leg_embed(&r, Legs::L13));
    let printed = Matrix::from_i64_rows(
        gf2(),
        &[
            &[1, 0, 0, 0, 0, 0, 0, 0],
            &[0, 1, 0, 0, 1, 0, 0, 0],
            &[0, 0, 1, 0, 1, 0, 0, 0],
            &[0, 0, 0, 1, 0, 1, 1, 0],
            &[0, 0, 0, 0, 1, 0, 0, 0],
            &[0, 0, 0, 0, 0, 1, 0, 0],
            &[0, 0, 0, 0, 0, 0, 1, 0],
            &[0, 0, 0, 0, 0, 0, 0, 1],
        ],
    );
    ensure(r12.then_after(&r13).matrix() == &printed, || "R¹²R¹³ differs".into())?;
    ensure(r13.then_after(&r12).matrix() == &printed, || "R¹³R¹² differs".into())?;
    Ok("8×8 matrix reproduced entry for entry".into())
}

fn criterion_3() -> Outcome {
    let start = Instant::now();
    let f = gf2();
    let disagreements: Vec<u64> = (0u64..1 << 16)
        .into_par_iter()
        .filter(|&i| {
            let r = endo_from_index(f, 2, i);
            component_check_hopf(&r).is_pass() != hopf(&r)
        })
        .collect();
    let elapsed = start.elapsed();
    ensure(disagreements.is_empty(), || format!("{} disagreements, first at {}", disagreements.len(), disagreements[0]))?;
    let census = gf2_hopf_solutions();
    ensure(census.contains(&EndoTensor::identity(f, 2)), || "census lacks the identity".into())?;
    ensure(census.contains(&fk_operator(f)), || "census lacks F(k)".into())?;
    ensure(elapsed.as_secs() < 60, || format!("took {elapsed:?}"))?;
    Ok(format!("65536 candidates agree, {} solutions, {:.1?}", census.len(), elapsed))
}

fn criterion_4() -> Outcome {
    let sols = gf2_hopf_solutions();
    let bad: Vec<String> = sols
        .par_iter()
        .filter_map(|r| {
            let check = || -> Result<(), String> {
                let sigma = sigma_from_r(r, 4).map_err(|e| format!("sigma_from_r: {e}"))?;
                let chi = chi_relations(r);
                let mut zeros = 0;
                for c in 0..sigma.coalgebra().len() {
                    for p in chi.polys() {
                        ensure(sigma.value(c, p).is_zero(), || "σ nonzero on a χ".into())?;
                        zeros += 1;
                    }
                }
                ensure(zeros == 64, || format!("{zeros} evaluations"))?;
                for v in [sigma.check_h1(Mode::Generators), sigma.check_h2(), sigma.check_h3(Mode::Generators)] {
                    ensure(v.is_pass(), || v.to_string())?;
                }
                let comodule = canonical_comodule(sigma.host(), 2).map_err(|e| e.to_string())?;
                let back = r_sigma(&sigma, &comodule).map_err(|e| e.to_string())?;
                ensure(&back == r, || "R_σ differs from R".into())
            };
            check().err().map(|e| format!("{}: {e}", r.matrix()))
        })
        .collect();
    ensure(bad.is_empty(), || format!("{} solutions fail, first {}", bad.len(), bad[0]))?;
    Ok(format!("{} solutions: 64 zero evaluations, (H1)-(H3), R_σ = R", sols.len()))
}

fn criterion_5() -> Outcome {
    let f = gf2();
    let r = fk_operator(f);
    let chi = chi_relations(&r);
    let table = fk_table(f).unwrap();
    // Substitution into the free algebra on x, y, z, t, then evaluation in F(k).
    let free = table.alphabet().clone();
    let images: Vec<NCPoly> = ["x", "y", "z", "t"].iter().map(|g| NCPoly::generator(free.clone(), f, g).unwrap()).collect();
    let subst = |p: &NCPoly| {
        p.evaluate(
            &NCPoly::one(free.clone(), f),
            &NCPoly::zero(free.clone(), f),
            &images,
            |a, b| a.mul(b),
            |acc, v, c| acc.add(&v.scale(c)),
        )
        .unwrap()
    };
    let poly = |terms: &[(&[&str], i64)]| {
        NCPoly::from_terms(free.clone(), f, terms.iter().map(|(w, c)| (free.word(w).unwrap(), f.from_i64(*c))))
    };
    let expected = [
        ((0, 0, 0, 0), poly(&[(&["x", "x"], 1), (&["x"], -1)])),
        ((1, 1, 0, 0), poly(&[(&["z", "z"], 1)])),
        ((0, 1, 0, 1), poly(&[(&["z", "y"], 1), (&["x", "t"], 1), (&["x"], -1)])),
    ];
    for ((i, j, k, l), want) in &expected {
        let got = subst(chi.get(*i, *j, *k, *l));
        ensure(&got == want, || format!("χ({},{},{},{}) ↦ {got}, expected {want}", i + 1, j + 1, k + 1, l + 1))?;
    }
    for (label, p) in chi.labelled() {
        let v = table.vector(&subst(&p));
        ensure(v.iter().all(Scalar::is_zero), || format!("{label} ↦ {} ≠ 0", table.render_vector(&v)))?;
    }
    Ok("16 χ relations vanish in F(k); three named images match".into())
}

fn criterion_6() -> Outcome {
    let q = Field::rationals();
    let mut runs: Vec<(String, Params)> = vec![("tk".into(), Params::default())];
    for a in ["0", "1", "2"] {
        for qq in ["1", "2"] {
            runs.push((
                "quantum_plane".into(),
                Params { field: Some(q), q: Some(qq.into()), a: Some(a.into()), ..Params::default() },
            ));
        }
    }
    for name in ["bq2", "dq2", "eq2"] {
        for qq in ["0", "1", "2", "-1"] {
            runs.push((name.into(), Params { field: Some(q), q: Some(qq.into()), ..Params::default() }));
        }
    }
    for (name, p) in &runs {
        let report = hopfeq::catalog::verify_example(name, p).map_err(|e| format!("{name}: {e}"))?;
        let sigma_lines: Vec<_> = report.lines.iter().filter(|l| l.check.starts_with('σ')).collect();
        ensure(!sigma_lines.is_empty(), || format!("{name}: no σ lines"))?;
        for l in report.lines.iter() {
            ensure(l.matches(), || format!("{name} q={:?} a={:?}: {} {}", p.q, p.a, l.check, l.verdict))?;
        }
        if name.ends_with("q2") {
            ensure(
                report.lines.iter().any(|l| l.check.ends_with("R_σ equals the operator") && l.verdict.is_pass()),
                || format!("{name}: R_σ line missing"),
            )?;
        }
    }
    Ok(format!("{} σ tables pass every generator check and the degree 2 identity", runs.len()))
}

fn criterion_7() -> Outcome {
    let f = gf2();
    let host = Arc::new(Bialgebra::from(fk_table(f).unwrap()));
    let c = SubcoalgebraView::from_names(host, &["x", "y", "z", "t"]).unwrap();
    let verbatim = fk_sigma(c.clone(), Variant::Verbatim).unwrap();
    let h1 = verbatim.check_h1(Mode::Generators);
    let w = h1.witnesses().iter().find(|w| w.location == "(H1) c=z h=z");
    ensure(matches!(w, Some(w) if w.expected == "x" && w.actual == "t"), || format!("verbatim (H1): {h1}"))?;
    let p = Params { variant: Some(Variant::Corrected), ..Params::default() };
    let report = hopfeq::catalog::verify_example("fk", &p).map_err(|e| e.to_string())?;
    for needed in ["σ∗σ = ε⊗ε", "Hopf module"] {
        ensure(report.lines.iter().any(|l| l.check.ends_with(needed)), || format!("no `{needed}` line"))?;
    }
    for l in &report.lines {
        ensure(l.verdict.is_pass(), || format!("corrected: {} {}", l.check, l.verdict))?;
    }
    Ok("verbatim fails (H1) at c=z h=z (lhs x, rhs t); corrected passes all".into())
}

fn integral_space(h: &TableBialgebra) -> Vec<hopfeq::pairing::IntegralFunctional> {
    right_integral_space(h)
}

fn criterion_8() -> Outcome {
    let tk = example("tk", &Params::default()).unwrap();
    let h = tk.bialgebra.as_table().unwrap();
    let space = integral_space(h);
    ensure(space.len() == 2, || format!("T(k) dimension {}", space.len()))?;
    let x = h.index_of("x").unwrap();
    ensure(space.iter().all(|t| t.values[x].is_zero()), || "an integral has T(x) ≠ 0".into())?;
    let kz2 = example("group_algebra", &Params { field: Some(Field::rationals()), ..Params::default() }).unwrap();
    let kh = kz2.bialgebra.as_table().unwrap();
    let kspace = integral_space(kh);
    ensure(kspace.len() == 1, || format!("k[Z2] dimension {}", kspace.len()))?;
    for (b, t) in space.iter().map(|t| (h, t)).chain(kspace.iter().map(|t| (kh, t))) {
        let rt = integral_round_trip(b, t).map_err(|e| e.to_string())?;
        ensure(rt.matches && rt.recovered == *t, || format!("round trip of {}", t.render(b)))?;
    }
    Ok("T(k): dim 2 with T(x)=0; k[Z2]: dim 1; round trips exact".into())
}

fn criterion_9() -> Outcome {
    for p in [2, 3] {
        let b = example("group_algebra", &Params { field: Some(Field::prime(p)), ..Params::default() }).unwrap();
        ensure(b.searches.len() == 3, || "expected three subsets".into())?;
        for s in &b.searches {
            let hits = search_hopf_functions(&s.coalgebra).map_err(|e| e.to_string())?;
            ensure(hits.is_empty(), || format!("GF({p}) {}: {} tables", s.label, hits.len()))?;
        }
    }
    let tk = example("tk", &Params { field: Some(gf2()), ..Params::default() }).unwrap();
    let c = SubcoalgebraView::from_names(tk.bialgebra.clone(), &["x"]).unwrap();
    let hits = search_hopf_functions(&c).map_err(|e| e.to_string())?;
    let f = gf2();
    let paper = Pairing::new(c, vec![vec![f.one(), f.one(), f.zero()]], hopfeq::pairing::Extension::Multiplicative).unwrap();
    let render = |s: &Pairing| format!("{:?}", s.table().iter().map(|r| r.iter().map(|v| v.to_string()).collect::<Vec<_>>()).collect::<Vec<_>>());
    ensure(hits.len() == 1 && hits[0] == paper, || {
        format!(
            "k[Z2] searches empty; T(k) C=k{{x}} GF(2) returned {} tables {:?}, expected only {}",
            hits.len(),
            hits.iter().map(render).collect::<Vec<_>>(),
            render(&paper)
        )
    })?;
    Ok("k[Z2] searches empty; T(k) search unique".into())
}

fn criterion_10() -> Outcome {
    let tk = example("tk", &Params::default()).unwrap();
    let host = tk.bialgebra.clone();
    let h = host.as_table().unwrap();
    let x1 = &tk.hopf_elements[0].element;
    for (ax, v) in hopf_element_report(x1, 2).map_err(|e| e.to_string())? {
        ensure(v.is_pass(), || format!("x⊗1 {ax}: {v}"))?;
    }
    ensure(check_identity_101(x1).unwrap().is_pass(), || "x⊗1 fails R²³R¹³R¹² = R¹²R²³".into())?;
    let (t, tv) = integral_t(x1).map_err(|e| e.to_string())?;
    ensure(tv.is_pass() && t == host.element("x").unwrap(), || format!("t = {}", host.render(&t)))?;
    // Oracle for t: a·t = ε(a)t for every basis a, and t² = t, in the table.
    let tvec = h.vector(&t);
    ensure(h.mul_vec(&tvec, &tvec) == tvec, || "t² ≠ t".into())?;
    for a in 0..h.dim() {
        let e = h.basis_element(a);
        let lhs = h.mul_vec(&h.vector(&e), &tvec);
        let rhs: Vec<Scalar> = tvec.iter().map(|v| v * h.eps_of(a)).collect();
        ensure(lhs == rhs, || format!("a·t ≠ ε(a)t at a={}", h.basis()[a]))?;
    }
    let f = host.field();
    let unit = TensorElement::from_names(host.clone(), &["x", "z"], &[(&[], "1", f.one())]).unwrap();
    let he3 = &hopf_element_report(&unit, 1).unwrap()[2].1;
    ensure(
        he3.is_fail() && he3.first_witness().map(|w| w.location.as_str()) == Some("(HE3) a=x"),
        || format!("1⊗1 (HE3): {he3}"),
    )?;
    for (name, label) in [("dq2", "⟨x,y⟩"), ("eq2", "⟨x⟩")] {
        let b = example(name, &Params { q: Some("2".into()), bound: Some(4), ..Params::default() }).unwrap();
        let e = &b.hopf_elements[0].element;
        for (ax, v) in hopf_element_report(e, 2).map_err(|e| e.to_string())? {
            ensure(v.is_pass(), || format!("{name} {label} {ax}: {v}"))?;
        }
    }
    let qt = check_quasitriangular(x1).map_err(|e| e.to_string())?;
    let failing: Vec<&str> = qt.iter().filter(|(_, v)| !v.is_pass()).map(|(n, _)| n.as_str()).collect();
    ensure(failing == ["QT4"], || format!("QT failures {failing:?}"))?;
    Ok("x⊗1 passes with t = x; 1⊗1 fails (HE3) at a=x; D, E at q=2 pass; only QT4 fails".into())
}

fn criterion_11() -> Outcome {
    let f = gf2();
    let sols = gf2_hopf_solutions();
    let invertible: Vec<(EndoTensor, EndoTensor)> =
        sols.iter().filter_map(|r| invert_endo(r).ok().map(|s| (r.clone(), s))).collect();
    for (r, s) in &invertible {
        ensure(check_equation(Equation::InverseEq, s, None).unwrap().is_pass(), || format!("inverse-eq fails for\n{r}"))?;
        let commutes = check_equation(Equation::Commute13, r, None).unwrap().is_pass();
        let outcome = sigma_inverse_from_rinv(r, 4).map_err(|e| e.to_string())?;
        let succeeded = matches!(outcome, InverseOutcome::Inverse(_));
        ensure(succeeded == commutes, || format!("σ' construction {succeeded} vs commute13 {commutes} for\n{r}"))?;
    }
    let fk = fk_operator(f);
    let sigma = sigma_from_r(&fk, 4).map_err(|e| e.to_string())?;
    match sigma_inverse_from_rinv(&fk, 4).map_err(|e| e.to_string())? {
        InverseOutcome::Inverse(prime) => ensure(prime == sigma, || "σ' ≠ σ for F(k)".into())?,
        InverseOutcome::Obstruction { .. } => return Err("F(k) σ' obstructed".into()),
    }
    let commuting = invertible.iter().filter(|(r, _)| check_equation(Equation::Commute13, r, None).unwrap().is_pass()).count();
    Ok(format!("{} invertible solutions, {commuting} with σ'; F(k) σ' = σ", invertible.len()))
}

fn criterion_12() -> Outcome {
    let mut checked = 0;
    let mut bundles = Vec::new();
    for name in hopfeq::catalog::EXAMPLE_NAMES {
        bundles.push(example(name, &Params::default()).unwrap());
    }
    for name in ["bq2", "dq2", "eq2"] {
        for q in ["0", "1", "-1"] {
            bundles.push(example(name, &Params { q: Some(q.into()), ..Params::default() }).unwrap());
        }
    }
    for b in &bundles {
        for s in &b.sigmas {
            if s.sigma.check_h1(Mode::Generators).is_pass() {
                let v = s.sigma.check_h1(Mode::Words(3));
                ensure(v.status() == Status::Pass, || format!("{} {}: {v}", b.name, s.label))?;
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} tables: generator (H1) implies word (H1) to degree 3"))
}

#[test]
fn acceptance() {
    let criteria: [(usize, fn() -> Outcome); 12] = [
        (1, criterion_1),
        (2, criterion_2),
        (3, criterion_3),
        (4, criterion_4),
        (5, criterion_5),
        (6, criterion_6),
        (7, criterion_7),
        (8, criterion_8),
        (9, criterion_9),
        (10, criterion_10),
        (11, criterion_11),
        (12, criterion_12),
    ];
    let mut failing = BTreeSet::new();
    for (k, run) in criteria {
        let start = Instant::now();
        match run() {
            Ok(msg) => println!("criterion {k:>2}: PASS  {msg} ({:.1?})", start.elapsed()),
            Err(msg) => {
                println!("criterion {k:>2}: FAIL  {msg} ({:.1?})", start.elapsed());
                failing.insert(k);
            }
        }
    }
    assert_eq!(failing, BTreeSet::from(KNOWN_FAILING), "failing criteria differ from the documented set");
}
