//! Constructors for the worked examples, bundled with their expected
//! verdicts, and a verifier that runs every applicable check.

mod verify;

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

pub use verify::{element_report, sigma_report, verify_bundle, verify_example, Report, ReportLine};

use crate::error::{Error, Result};
use crate::formats::{BialgebraFile, ElementFile, MatrixFile, SigmaFile};
use crate::hopfcore::{Bialgebra, Comodule, PresentedBialgebra, PresentedSpec, SubcoalgebraView, TableBialgebra, TableSpec};
use crate::hopfelement::TensorElement;
use crate::kernel::{Field, Scalar, Status};
use crate::pairing::{Extension, Pairing};
use crate::tensorlab::EndoTensor;

/// Every example name accepted by [`example`].
pub const EXAMPLE_NAMES: [&str; 8] = ["quantum_plane", "tk", "bq2", "dq2", "eq2", "fk", "group_algebra", "monoid"];

/// Which printed σ table of the five-dimensional example to use.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    /// As printed: `σ(z⊗z)=1`, `σ(t⊗t)=0`.
    Verbatim,
    /// Forced by the construction from `R`: `σ(z⊗z)=0`, `σ(t⊗t)=1`.
    Corrected,
}

impl FromStr for Variant {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "verbatim" => Ok(Variant::Verbatim),
            "corrected" => Ok(Variant::Corrected),
            other => Err(Error::Parse(format!("unknown variant `{other}`"))),
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Variant::Verbatim => "verbatim",
            Variant::Corrected => "corrected",
        })
    }
}

/// Example parameters; unset fields take per-example defaults.
#[derive(Clone, Debug, Default)]
pub struct Params {
    pub field: Option<Field>,
    pub q: Option<String>,
    pub a: Option<String>,
    /// Group order for `group_algebra`.
    pub order: Option<usize>,
    /// Number of points for `monoid`.
    pub points: Option<usize>,
    /// `None` keeps both tables of `fk`.
    pub variant: Option<Variant>,
    /// Use the coaction matrix `((x,0),(z,y))` for the q-family.
    pub alt_coaction: bool,
    /// Truncation degree for presented hosts; 4 when unset.
    pub bound: Option<usize>,
}

impl Params {
    fn field_or(&self, default: Field) -> Field {
        self.field.unwrap_or(default)
    }

    fn bound(&self) -> usize {
        self.bound.unwrap_or(crate::freeword::DEFAULT_BOUND)
    }

    fn scalar(field: Field, text: &Option<String>, default: i64) -> Result<Scalar> {
        match text {
            Some(t) => field.parse_scalar(t),
            None => Ok(field.from_i64(default)),
        }
    }
}

/// A σ table with what it should do.
#[derive(Clone, Debug)]
pub struct SigmaEntry {
    pub label: String,
    pub sigma: Pairing,
    pub expect: Status,
    /// A comodule over `C` together with the operator `R_σ` should equal.
    pub comodule: Option<(Comodule, EndoTensor, Status)>,
    /// Whether `σ∗σ = ε⊗ε` should hold.
    pub self_inverse: bool,
}

/// A tensor element with its expected verdicts.
#[derive(Clone, Debug)]
pub struct ElementEntry {
    pub label: String,
    pub element: TensorElement,
    pub expect: Status,
    /// Expected (QT1)–(QT5) outcomes, when the contrast is part of the example.
    pub expect_qt: Option<[bool; 5]>,
}

/// An exhaustive σ search and the number of tables it should return.
#[derive(Clone, Debug)]
pub struct SearchEntry {
    pub label: String,
    pub coalgebra: SubcoalgebraView,
    pub expect_count: usize,
}

/// Everything one worked example provides.
#[derive(Clone, Debug)]
pub struct ExampleBundle {
    pub name: String,
    pub field: Field,
    pub bialgebra: Arc<Bialgebra>,
    pub subcoalgebra: Option<SubcoalgebraView>,
    pub sigmas: Vec<SigmaEntry>,
    /// The defining solution, when the example comes from one.
    pub operator: Option<EndoTensor>,
    /// Images of the comatrix generators for a map `B(R) → H`.
    pub br_map: Vec<(String, String)>,
    pub hopf_elements: Vec<ElementEntry>,
    pub searches: Vec<SearchEntry>,
    pub integral_dim: Option<usize>,
}

/// The bundle in the JSON file formats.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BundleExport {
    pub name: String,
    pub bialgebra: BialgebraFile,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub matrix: Option<MatrixFile>,
    #[serde(default)]
    pub sigmas: Vec<(String, SigmaFile)>,
    #[serde(default)]
    pub elements: Vec<(String, ElementFile)>,
}

impl ExampleBundle {
    pub fn export(&self) -> BundleExport {
        BundleExport {
            name: self.name.clone(),
            bialgebra: BialgebraFile::from_bialgebra(&self.bialgebra),
            matrix: self.operator.as_ref().map(MatrixFile::from_endo),
            sigmas: self.sigmas.iter().map(|s| (s.label.clone(), SigmaFile::from_pairing(&s.sigma))).collect(),
            elements: self.hopf_elements.iter().map(|e| (e.label.clone(), ElementFile::from_element(&e.element))).collect(),
        }
    }

    fn new(name: &str, bialgebra: Arc<Bialgebra>) -> Self {
        ExampleBundle {
            name: name.to_string(),
            field: bialgebra.field(),
            bialgebra,
            subcoalgebra: None,
            sigmas: Vec::new(),
            operator: None,
            br_map: Vec::new(),
            hopf_elements: Vec::new(),
            searches: Vec::new(),
            integral_dim: None,
        }
    }
}

/// Builds the named example.
pub fn example(name: &str, params: &Params) -> Result<ExampleBundle> {
    match name.to_ascii_lowercase().replace('-', "_").as_str() {
        "quantum_plane" => quantum_plane(params),
        "tk" => tk(params),
        "bq2" => q_family(QFamily::B, params),
        "dq2" => q_family(QFamily::D, params),
        "eq2" => q_family(QFamily::E, params),
        "fk" => fk(params),
        "group_algebra" => group_algebra(params),
        "monoid" => monoid(params),
        other => Err(Error::UnknownExample(other.to_string())),
    }
}

fn pair_names(names: &[(&str, &str)], f: Field) -> Vec<(String, String, Scalar)> {
    names.iter().map(|(l, r)| (l.to_string(), r.to_string(), f.one())).collect()
}

/// A pairing from rows `(c, [value on 1, value on each generator])`.
fn pairing_rows(c: SubcoalgebraView, rows: &[Vec<Scalar>], ext: Extension) -> Result<Pairing> {
    Pairing::new(c, rows.to_vec(), ext)
}

/// Matrix of `A⊗B` for 2×2 matrices acting on column coordinates.
fn kron(f: Field, a: [[Scalar; 2]; 2], b: [[Scalar; 2]; 2]) -> EndoTensor {
    EndoTensor::from_coefficients(f, 2, |u, v, j, i| &a[i][v] * &b[j][u])
}

fn quantum_plane(p: &Params) -> Result<ExampleBundle> {
    let f = p.field_or(Field::rationals());
    let q = Params::scalar(f, &p.q, 2)?;
    let a = Params::scalar(f, &p.a, 1)?;
    let spec = PresentedSpec {
        field: f,
        generators: vec!["x".into(), "y".into()],
        relations: vec![("xy - q·yx".into(), vec![(f.one(), vec!["x".into(), "y".into()]), (-q, vec!["y".into(), "x".into()])])],
        delta_gen: vec![
            ("x".into(), pair_names(&[("x", "x")], f)),
            ("y".into(), pair_names(&[("y", "1"), ("x", "y")], f)),
        ],
        eps_gen: vec![("x".into(), f.one()), ("y".into(), f.zero())],
    };
    let host = Arc::new(Bialgebra::from(PresentedBialgebra::new(spec, p.bound())?));
    let c = SubcoalgebraView::from_names(host.clone(), &["x"])?;
    let sigma = pairing_rows(c.clone(), &[vec![f.one(), f.zero(), a.clone()]], Extension::Multiplicative)?;
    let comodule = Comodule::from_names(&host, &[&["x"]])?;
    let mut b = ExampleBundle::new("quantum_plane", host);
    b.subcoalgebra = Some(c);
    b.sigmas.push(SigmaEntry {
        label: format!("σ_a, a={a}"),
        sigma,
        expect: Status::Pass,
        comodule: Some((comodule, EndoTensor::zero(f, 1), Status::Pass)),
        self_inverse: false,
    });
    Ok(b)
}

fn tk_spec(f: Field) -> TableSpec {
    TableSpec {
        field: f,
        basis: vec!["1".into(), "x".into(), "z".into()],
        unit: "1".into(),
        mult: vec![("x".into(), "x".into(), vec![("x".into(), f.one())])],
        delta: vec![
            ("1".into(), pair_names(&[("1", "1")], f)),
            ("x".into(), pair_names(&[("x", "x")], f)),
            ("z".into(), pair_names(&[("x", "z"), ("z", "1")], f)),
        ],
        eps: vec![("1".into(), f.one()), ("x".into(), f.one()), ("z".into(), f.zero())],
    }
}

fn tk(p: &Params) -> Result<ExampleBundle> {
    let f = p.field_or(Field::rationals());
    let host = Arc::new(Bialgebra::from(TableBialgebra::new(tk_spec(f))?));
    let c = SubcoalgebraView::from_names(host.clone(), &["x"])?;
    let sigma = pairing_rows(c.clone(), &[vec![f.one(), f.one(), f.zero()]], Extension::Multiplicative)?;
    let comodule = Comodule::from_names(&host, &[&["x"]])?;
    let one = f.one();
    let x1 = TensorElement::from_names(host.clone(), &["x"], &[(&["x"], "1", one.clone())])?;
    let unit = TensorElement::from_names(host.clone(), &["x", "z"], &[(&[], "1", one)])?;
    let mut b = ExampleBundle::new("tk", host);
    b.subcoalgebra = Some(c);
    b.sigmas.push(SigmaEntry {
        label: "σ".into(),
        sigma,
        expect: Status::Pass,
        comodule: Some((comodule, EndoTensor::identity(f, 1), Status::Pass)),
        self_inverse: false,
    });
    b.hopf_elements.push(ElementEntry {
        label: "x⊗1, A=⟨x⟩".into(),
        element: x1,
        expect: Status::Pass,
        expect_qt: Some([true, true, true, false, true]),
    });
    b.hopf_elements.push(ElementEntry {
        label: "1⊗1, A=T(k)".into(),
        element: unit,
        expect: Status::Fail,
        expect_qt: None,
    });
    b.integral_dim = Some(2);
    Ok(b)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum QFamily {
    B,
    D,
    E,
}

fn word_terms(terms: &[(Scalar, &str)]) -> Vec<(Scalar, Vec<String>)> {
    terms.iter().map(|(c, w)| (c.clone(), w.chars().map(|ch| ch.to_string()).collect())).collect()
}

fn q_family(kind: QFamily, p: &Params) -> Result<ExampleBundle> {
    let f = p.field_or(Field::rationals());
    let q = Params::scalar(f, &p.q, 2)?;
    let one = f.one();
    let q2 = &q * &q;
    let m = |c: &Scalar| -c.clone();
    let rel = |label: &str, terms: &[(Scalar, &str)]| (label.to_string(), word_terms(terms));
    let relations = match kind {
        QFamily::B => vec![
            rel("yx = x", &[(one.clone(), "yx"), (m(&one), "x")]),
            rel("yz + qy² = qx", &[(one.clone(), "yz"), (q.clone(), "yy"), (m(&q), "x")]),
        ],
        QFamily::D => vec![
            rel("x² = x", &[(one.clone(), "xx"), (m(&one), "x")]),
            rel("yx = x", &[(one.clone(), "yx"), (m(&one), "x")]),
            rel("zx = 0", &[(one.clone(), "zx")]),
            rel("z² + qzy = 0", &[(one.clone(), "zz"), (q.clone(), "zy")]),
            rel("xz + qxy = qx", &[(one.clone(), "xz"), (q.clone(), "xy"), (m(&q), "x")]),
            rel("yz + qy² = qx", &[(one.clone(), "yz"), (q.clone(), "yy"), (m(&q), "x")]),
        ],
        QFamily::E => vec![
            rel("x² = x", &[(one.clone(), "xx"), (m(&one), "x")]),
            rel("xz + qxy = qx", &[(one.clone(), "xz"), (q.clone(), "xy"), (m(&q), "x")]),
            rel("zx + qyx = qx", &[(one.clone(), "zx"), (q.clone(), "yx"), (m(&q), "x")]),
            rel(
                "z² + qyz + qzy + q²y² = q²x",
                &[(one.clone(), "zz"), (q.clone(), "yz"), (q.clone(), "zy"), (q2.clone(), "yy"), (m(&q2), "x")],
            ),
        ],
    };
    let spec = PresentedSpec {
        field: f,
        generators: vec!["x".into(), "y".into(), "z".into()],
        relations,
        delta_gen: vec![
            ("x".into(), pair_names(&[("x", "x")], f)),
            ("y".into(), pair_names(&[("y", "y")], f)),
            ("z".into(), pair_names(&[("x", "z"), ("z", "y")], f)),
        ],
        eps_gen: vec![("x".into(), one.clone()), ("y".into(), one.clone()), ("z".into(), f.zero())],
    };
    let host = Arc::new(Bialgebra::from(PresentedBialgebra::new(spec, p.bound())?));
    let c = SubcoalgebraView::from_names(host.clone(), &["x", "y", "z"])?;
    let z = f.zero();
    // Columns: 1, x, y, z.
    let rows = match kind {
        QFamily::B => vec![
            vec![one.clone(), z.clone(), one.clone(), m(&q)],
            vec![one.clone(), z.clone(), z.clone(), z.clone()],
            vec![z.clone(), z.clone(), q.clone(), m(&q2)],
        ],
        QFamily::D => vec![
            vec![one.clone(), one.clone(), one.clone(), z.clone()],
            vec![one.clone(), z.clone(), z.clone(), z.clone()],
            vec![z.clone(), q.clone(), q.clone(), z.clone()],
        ],
        QFamily::E => vec![
            vec![one.clone(), one.clone(), z.clone(), q.clone()],
            vec![one.clone(), z.clone(), z.clone(), z.clone()],
            vec![z.clone(), q.clone(), z.clone(), q2.clone()],
        ],
    };
    let sigma = pairing_rows(c.clone(), &rows, Extension::Multiplicative)?;
    let fq = [[one.clone(), q.clone()], [z.clone(), z.clone()]];
    let id = [[one.clone(), z.clone()], [z.clone(), one.clone()]];
    let id_minus_fq = [[z.clone(), m(&q)], [z.clone(), one.clone()]];
    let operator = match kind {
        QFamily::B => kron(f, fq, id_minus_fq),
        QFamily::D => kron(f, fq, id),
        QFamily::E => kron(f, fq.clone(), fq),
    };
    let (coaction, expect) = if p.alt_coaction {
        (Comodule::from_names(&host, &[&["x", "0"], &["z", "y"]])?, Status::Fail)
    } else {
        (Comodule::from_names(&host, &[&["x", "z"], &["0", "y"]])?, Status::Pass)
    };
    let name = match kind {
        QFamily::B => "bq2",
        QFamily::D => "dq2",
        QFamily::E => "eq2",
    };
    let mut b = ExampleBundle::new(name, host.clone());
    b.subcoalgebra = Some(c);
    b.sigmas.push(SigmaEntry {
        label: format!("σ, q={q}"),
        sigma,
        expect: Status::Pass,
        comodule: Some((coaction, operator.clone(), expect)),
        self_inverse: false,
    });
    b.operator = Some(operator);
    let one_s = f.one();
    match kind {
        QFamily::D => b.hopf_elements.push(ElementEntry {
            label: "x⊗1, A=⟨x,y⟩".into(),
            element: TensorElement::from_names(host, &["x", "y"], &[(&["x"], "1", one_s)])?,
            expect: Status::Pass,
            expect_qt: None,
        }),
        QFamily::E => b.hopf_elements.push(ElementEntry {
            label: "x⊗1, A=⟨x⟩".into(),
            element: TensorElement::from_names(host, &["x"], &[(&["x"], "1", one_s)])?,
            expect: Status::Pass,
            expect_qt: None,
        }),
        QFamily::B => {}
    }
    Ok(b)
}

/// The five-dimensional example's structure tables (characteristic two).
pub fn fk_table(f: Field) -> Result<TableBialgebra> {
    if f.characteristic() != 2 {
        return Err(Error::InvalidInput(format!("fk needs characteristic two, got {f}")));
    }
    let mul = |a: &str, b: &str, r: &[&str]| (a.to_string(), b.to_string(), r.iter().map(|n| (n.to_string(), f.one())).collect());
    TableBialgebra::new(TableSpec {
        field: f,
        basis: ["1", "x", "y", "z", "t"].map(String::from).to_vec(),
        unit: "1".into(),
        mult: vec![
            mul("x", "x", &["x"]),
            mul("x", "y", &["y"]),
            mul("x", "z", &["z"]),
            mul("x", "t", &["t"]),
            mul("z", "x", &["z"]),
            mul("z", "y", &["x", "t"]),
            mul("z", "t", &["z"]),
            mul("t", "x", &["x"]),
            mul("t", "y", &["y"]),
            mul("t", "z", &["z"]),
            mul("t", "t", &["t"]),
        ],
        delta: vec![
            ("1".into(), pair_names(&[("1", "1")], f)),
            ("x".into(), pair_names(&[("x", "x"), ("y", "z")], f)),
            ("y".into(), pair_names(&[("x", "y"), ("y", "t")], f)),
            ("z".into(), pair_names(&[("z", "x"), ("t", "z")], f)),
            ("t".into(), pair_names(&[("z", "y"), ("t", "t")], f)),
        ],
        eps: vec![
            ("1".into(), f.one()),
            ("x".into(), f.one()),
            ("y".into(), f.zero()),
            ("z".into(), f.zero()),
            ("t".into(), f.one()),
        ],
    })
}

/// The 4×4 matrix of the five-dimensional example.
pub fn fk_operator(f: Field) -> EndoTensor {
    let m = crate::kernel::Matrix::from_i64_rows(f, &[&[1, 0, 0, 0], &[0, 1, 1, 0], &[0, 0, 1, 0], &[0, 0, 0, 1]]);
    EndoTensor::from_matrix(2, m).expect("4×4")
}

/// The printed σ table for `fk` (all nonzero entries are 1).
pub fn fk_sigma(c: SubcoalgebraView, variant: Variant) -> Result<Pairing> {
    let f = c.host().field();
    let mut ones = vec![("x", "1"), ("t", "1"), ("x", "x"), ("x", "t"), ("y", "z"), ("t", "x")];
    ones.push(match variant {
        Variant::Verbatim => ("z", "z"),
        Variant::Corrected => ("t", "t"),
    });
    let entries: Vec<(&str, &str, Scalar)> = ones.into_iter().map(|(a, b)| (a, b, f.one())).collect();
    Pairing::from_entries(c, &entries, Extension::Multiplicative)
}

fn fk(p: &Params) -> Result<ExampleBundle> {
    let f = p.field_or(Field::prime(2));
    let host = Arc::new(Bialgebra::from(fk_table(f)?));
    let c = SubcoalgebraView::from_names(host.clone(), &["x", "y", "z", "t"])?;
    let r = fk_operator(f);
    let comodule = Comodule::from_names(&host, &[&["x", "y"], &["z", "t"]])?;
    let mut b = ExampleBundle::new("fk", host);
    let variants = match p.variant {
        Some(v) => vec![v],
        None => vec![Variant::Corrected, Variant::Verbatim],
    };
    for v in variants {
        let sigma = fk_sigma(c.clone(), v)?;
        let pass = v == Variant::Corrected;
        // Asking for the printed table alone asserts it; alongside the
        // corrected one it is the known failure.
        let expect = if pass || p.variant.is_some() { Status::Pass } else { Status::Fail };
        b.sigmas.push(SigmaEntry {
            label: format!("σ {v}"),
            sigma,
            expect,
            comodule: pass.then(|| (comodule.clone(), r.clone(), Status::Pass)),
            self_inverse: pass,
        });
    }
    b.subcoalgebra = Some(c);
    b.operator = Some(r);
    b.br_map = [("c11", "x"), ("c12", "y"), ("c21", "z"), ("c22", "t")]
        .iter()
        .map(|(a, b)| (a.to_string(), b.to_string()))
        .collect();
    Ok(b)
}

fn group_name(k: usize) -> String {
    match k {
        0 => "e".into(),
        1 => "g".into(),
        _ => format!("g{k}"),
    }
}

/// `k[ℤ_n]` on the basis `e, g, g2, …`.
pub fn group_algebra_table(f: Field, n: usize) -> Result<TableBialgebra> {
    if n == 0 {
        return Err(Error::InvalidInput("group order must be positive".into()));
    }
    let names: Vec<String> = (0..n).map(group_name).collect();
    let mut mult = Vec::new();
    for a in 0..n {
        for b in 0..n {
            mult.push((names[a].clone(), names[b].clone(), vec![(names[(a + b) % n].clone(), f.one())]));
        }
    }
    TableBialgebra::new(TableSpec {
        field: f,
        basis: names.clone(),
        unit: names[0].clone(),
        mult,
        delta: names.iter().map(|g| (g.clone(), vec![(g.clone(), g.clone(), f.one())])).collect(),
        eps: names.iter().map(|g| (g.clone(), f.one())).collect(),
    })
}

fn group_algebra(p: &Params) -> Result<ExampleBundle> {
    let f = p.field_or(Field::prime(2));
    let n = p.order.unwrap_or(2);
    let host = Arc::new(Bialgebra::from(group_algebra_table(f, n)?));
    let mut b = ExampleBundle::new("group_algebra", host.clone());
    if f.modulus().is_some() {
        for mask in 1u32..(1 << n) {
            let subset: Vec<String> = (0..n).filter(|k| mask & (1 << k) != 0).map(group_name).collect();
            let refs: Vec<&str> = subset.iter().map(String::as_str).collect();
            b.searches.push(SearchEntry {
                label: format!("k[{{{}}}]", subset.join(",")),
                coalgebra: SubcoalgebraView::from_names(host.clone(), &refs)?,
                expect_count: 0,
            });
        }
    }
    b.integral_dim = Some(1);
    Ok(b)
}

/// Maps `u` on `{1..m}` with `u(1) = 1`, as image lists (0-based).
fn fixing_maps(m: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![0usize; m]];
    for k in 1..m {
        out = out
            .into_iter()
            .flat_map(|u| {
                (0..m).map(move |v| {
                    let mut w = u.clone();
                    w[k] = v;
                    w
                })
            })
            .collect();
    }
    out
}

fn map_name(u: &[usize]) -> String {
    if u.iter().enumerate().all(|(i, &v)| i == v) {
        "id".into()
    } else if u.iter().all(|&v| v == 0) {
        "const1".into()
    } else {
        format!("u{}", u.iter().map(|v| (v + 1).to_string()).collect::<String>())
    }
}

fn monoid(p: &Params) -> Result<ExampleBundle> {
    let f = p.field_or(Field::rationals());
    let m = p.points.unwrap_or(2);
    if !(2..=4).contains(&m) {
        return Err(Error::InvalidInput(format!("monoid example needs 2 to 4 points, got {m}")));
    }
    let maps = fixing_maps(m);
    let names: Vec<String> = maps.iter().map(|u| map_name(u)).collect();
    let index = |u: &[usize]| maps.iter().position(|w| w == u).expect("closed under composition");
    let mut mult = Vec::new();
    for (a, u) in maps.iter().enumerate() {
        for (b, v) in maps.iter().enumerate() {
            let uv: Vec<usize> = (0..m).map(|i| u[v[i]]).collect();
            mult.push((names[a].clone(), names[b].clone(), vec![(names[index(&uv)].clone(), f.one())]));
        }
    }
    let table = TableBialgebra::new(TableSpec {
        field: f,
        basis: names.clone(),
        unit: "id".into(),
        mult,
        delta: names.iter().map(|g| (g.clone(), vec![(g.clone(), g.clone(), f.one())])).collect(),
        eps: names.iter().map(|g| (g.clone(), f.one())).collect(),
    })?;
    let host = Arc::new(Bialgebra::from(table));
    let c = SubcoalgebraView::from_names(host.clone(), &["const1"])?;
    let row = vec![f.one(); host.generators().len() + 1];
    let sigma = pairing_rows(c.clone(), &[row], Extension::Multiplicative)?;
    let mut b = ExampleBundle::new("monoid", host);
    b.subcoalgebra = Some(c);
    b.sigmas.push(SigmaEntry { label: "σ ≡ 1".into(), sigma, expect: Status::Pass, comodule: None, self_inverse: false });
    Ok(b)
}
