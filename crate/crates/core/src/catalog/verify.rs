use serde::{Deserialize, Serialize};

use super::{example, ElementEntry, ExampleBundle, Params, SigmaEntry};
use crate::error::{Error, Result};
use crate::freeword::DEFAULT_BOUND;
use crate::frt::build_br;
use crate::hopfcore::{check_bialgebra_map, check_hopf_module, r_from_hopf_module, Bialgebra};
use crate::hopfelement::{TensorElement, check_identity_101, check_quasitriangular, hopf_element_report, integral_t};
use crate::kernel::{Status, Verdict, Witness};
use crate::pairing::{
    check_convolution_inverse, check_dec_identity, integral_round_trip, module_from_sigma, r_sigma, right_integral_space,
    search_hopf_functions, Mode, Pairing,
};
use crate::tensorlab::{check_equation, invert_endo, EndoTensor, Equation};

/// One check of an example and what it was expected to give.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportLine {
    pub check: String,
    pub expected: Status,
    pub verdict: Verdict,
}

impl ReportLine {
    pub fn matches(&self) -> bool {
        self.verdict.status() == self.expected
    }
}

/// Every check run for one example.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub name: String,
    pub lines: Vec<ReportLine>,
}

impl Report {
    /// True when every line came out as expected.
    pub fn matches(&self) -> bool {
        self.lines.iter().all(ReportLine::matches)
    }

    /// `Pass` when every line matches its expectation. Otherwise `Fail` if
    /// some mismatch is definite, else `Inconclusive`.
    pub fn status(&self) -> Status {
        let mut out = Status::Pass;
        for l in self.lines.iter().filter(|l| !l.matches()) {
            if l.verdict.status() == Status::Inconclusive {
                out = Status::Inconclusive;
            } else {
                return Status::Fail;
            }
        }
        out
    }

    fn push(&mut self, check: impl Into<String>, expected: Status, verdict: Verdict) {
        self.lines.push(ReportLine { check: check.into(), expected, verdict });
    }
}

/// Builds the named example and verifies it.
pub fn verify_example(name: &str, params: &Params) -> Result<Report> {
    let bundle = example(name, params)?;
    verify_bundle(&bundle)
}

/// Runs every check the bundle supports.
pub fn verify_bundle(b: &ExampleBundle) -> Result<Report> {
    let mut report = Report { name: b.name.clone(), lines: Vec::new() };
    for (axiom, v) in b.bialgebra.axiom_report() {
        report.push(format!("bialgebra {axiom}"), Status::Pass, v);
    }
    for entry in &b.sigmas {
        verify_sigma(&mut report, &b.bialgebra, entry)?;
    }
    if let Some(r) = &b.operator {
        report.push("operator solves the Hopf equation", Status::Pass, check_equation(Equation::Hopf, r, None)?);
    }
    if !b.br_map.is_empty() {
        verify_br(&mut report, b)?;
    }
    for e in &b.hopf_elements {
        verify_element(&mut report, e)?;
    }
    if let (Some(dim), Some(h)) = (b.integral_dim, b.bialgebra.as_table()) {
        let space = right_integral_space(h);
        let v = if space.len() == dim {
            Verdict::pass(format!("dim = {dim}"))
        } else {
            Verdict::fail(Witness::new("dim of right integrals", dim, space.len()), "integral space")
        };
        report.push("right integral dimension", Status::Pass, v);
        for (k, t) in space.iter().enumerate() {
            let rt = integral_round_trip(h, t)?;
            let v = if rt.matches {
                Verdict::pass("T ↦ σ_T ↦ T")
            } else {
                Verdict::fail(Witness::new("round trip", t.render(h), rt.recovered.render(h)), "T ↦ σ_T ↦ T")
            };
            report.push(format!("integral {} round trip", k + 1), Status::Pass, v);
        }
    }
    for s in &b.searches {
        let hits = search_hopf_functions(&s.coalgebra)?;
        let v = if hits.len() == s.expect_count {
            Verdict::pass(format!("{} tables", hits.len()))
        } else {
            Verdict::fail(Witness::new("table count", s.expect_count, hits.len()), "σ search")
        };
        report.push(format!("σ search on {}", s.label), Status::Pass, v);
    }
    Ok(report)
}

/// The σ checks of [`verify_example`] for a single pairing, all expected to pass.
pub fn sigma_report(name: &str, sigma: &Pairing) -> Result<Report> {
    let mut report = Report { name: name.to_string(), lines: Vec::new() };
    let entry = SigmaEntry {
        label: "σ".into(),
        sigma: sigma.clone(),
        expect: Status::Pass,
        comodule: None,
        self_inverse: false,
    };
    verify_sigma(&mut report, sigma.host(), &entry)?;
    Ok(report)
}

/// Per-axiom Hopf element checks, plus (QT1)-(QT5) when asked.
pub fn element_report(name: &str, element: &TensorElement, quasitriangular: bool) -> Result<Report> {
    let mut report = Report { name: name.to_string(), lines: Vec::new() };
    for (axiom, v) in hopf_element_report(element, 2)? {
        report.push(axiom, Status::Pass, v);
    }
    report.push("R²³R¹³R¹² = R¹²R²³", Status::Pass, check_identity_101(element)?);
    let (t, tv) = integral_t(element)?;
    report.push(format!("t = {} is an idempotent integral", element.host().render(&t)), Status::Pass, tv);
    if quasitriangular {
        for (axiom, v) in check_quasitriangular(element)? {
            report.push(axiom, Status::Pass, v);
        }
    }
    Ok(report)
}

/// Axiom errors carry their own failing verdict.
fn or_verdict(r: Result<Verdict>) -> Result<Verdict> {
    match r {
        Err(Error::Axiom { verdict, .. }) => Ok(*verdict),
        other => other,
    }
}

fn compare_endo(lhs: &EndoTensor, rhs: &EndoTensor, detail: &str) -> Verdict {
    match lhs.matrix().first_difference(rhs.matrix()) {
        None => Verdict::pass(detail),
        Some((r, c)) => Verdict::fail(
            Witness::new(format!("entry ({},{})", r + 1, c + 1), &lhs.matrix()[(r, c)], &rhs.matrix()[(r, c)]),
            detail,
        ),
    }
}

fn verify_sigma(report: &mut Report, host: &Bialgebra, e: &SigmaEntry) -> Result<()> {
    let s = &e.sigma;
    let tag = &e.label;
    if e.expect != Status::Pass {
        let v = Verdict::all(
            "Hopf function",
            [s.check_well_defined_on_host(), s.check_h2(), s.check_h3(Mode::Generators), s.check_h1(Mode::Generators)],
        );
        report.push(format!("{tag}: Hopf function"), e.expect, v);
        return Ok(());
    }
    report.push(format!("{tag}: well-defined"), Status::Pass, s.check_well_defined_on_host());
    report.push(format!("{tag}: (H1) on generators"), Status::Pass, s.check_h1(Mode::Generators));
    report.push(format!("{tag}: (H2)"), Status::Pass, s.check_h2());
    report.push(format!("{tag}: (H3) on generators"), Status::Pass, s.check_h3(Mode::Generators));
    report.push(format!("{tag}: (H1) on words of degree ≤ 3"), Status::Pass, s.check_h1(Mode::Words(3)));
    report.push(format!("{tag}: σ¹²σ¹³σ²³ = σ²³σ¹²"), Status::Pass, check_dec_identity(s, 2));
    if let Some((comodule, operator, expect)) = &e.comodule {
        let cv = comodule.check(host)?;
        let ok = cv.is_pass();
        report.push(format!("{tag}: comodule"), *expect, cv);
        if ok {
            let rs = r_sigma(s, comodule)?;
            report.push(format!("{tag}: R_σ equals the operator"), Status::Pass, compare_endo(&rs, operator, "R_σ"));
            report.push(format!("{tag}: R_σ solves the Hopf equation"), Status::Pass, check_equation(Equation::Hopf, &rs, None)?);
            let action = module_from_sigma(s, comodule)?;
            report.push(format!("{tag}: Hopf module"), Status::Pass, or_verdict(check_hopf_module(host, &action, comodule))?);
            let back = r_from_hopf_module(&action, comodule)?;
            report.push(format!("{tag}: R from the Hopf module"), Status::Pass, compare_endo(&back, &rs, "R(M)"));
        }
    }
    if e.self_inverse {
        report.push(format!("{tag}: σ∗σ = ε⊗ε"), Status::Pass, check_convolution_inverse(s, s, 2));
    }
    Ok(())
}

fn verify_br(report: &mut Report, b: &ExampleBundle) -> Result<()> {
    let r = b.operator.as_ref().ok_or_else(|| Error::InvalidInput("no operator for B(R)".into()))?;
    let target = b.bialgebra.as_table().ok_or_else(|| Error::InvalidInput("B(R) map needs a table target".into()))?;
    report.push("R¹²R¹³ = R¹³R¹²", Status::Pass, check_equation(Equation::Commute13, r, None)?);
    let inv = invert_endo(r)?;
    report.push("R⁻¹ = R", Status::Pass, compare_endo(&inv, r, "R⁻¹"));
    let br = Bialgebra::from(build_br(r, DEFAULT_BOUND)?);
    let assignment = b
        .br_map
        .iter()
        .map(|(g, h)| Ok((g.clone(), b.bialgebra.element(h)?)))
        .collect::<Result<Vec<_>>>()?;
    report.push("B(R) → H is a bialgebra map", Status::Pass, check_bialgebra_map(&br, target, &assignment)?);
    Ok(())
}

fn verify_element(report: &mut Report, e: &ElementEntry) -> Result<()> {
    let tag = &e.label;
    let parts = hopf_element_report(&e.element, 2)?;
    let v = Verdict::all("Hopf element", parts.into_iter().map(|(_, v)| v));
    report.push(format!("{tag}: (HE1)-(HE3)"), e.expect, v);
    if e.expect == Status::Pass {
        report.push(format!("{tag}: R²³R¹³R¹² = R¹²R²³"), Status::Pass, check_identity_101(&e.element)?);
        let (_, tv) = integral_t(&e.element)?;
        report.push(format!("{tag}: t = ΣR¹ε(R²) is an idempotent integral"), Status::Pass, tv);
    }
    if let Some(qt) = e.expect_qt {
        for ((name, v), ok) in check_quasitriangular(&e.element)?.into_iter().zip(qt) {
            report.push(format!("{tag}: {name}"), if ok { Status::Pass } else { Status::Fail }, v);
        }
    }
    Ok(())
}
