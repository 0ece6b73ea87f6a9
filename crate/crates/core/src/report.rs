//! Tables and verification reports shared by the command-line tool and the
//! Python bindings. Everything here is deterministic and serializable, and the
//! text renderings are functions of the serialized data alone.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::bimodule::{
    compare_with_simples, multiplicity, verify_complex, verify_exactness, verify_minimality, verify_multiplicities, BoundaryReading, DegreeCheck,
    DifferentialOptions, ExplicitResolution, HomComplex,
};
use crate::error::Result;
use crate::expected;
use crate::linalg::{Field, FieldSpec, FieldVisitor};
use crate::one_sided::{gsz_sets, verify_gsz, ExtTable};
use crate::oracle::{EnvelopingAlgebra, OracleResolution};
use crate::path_algebra::{AlgebraTable, QuiverPresentation};

/// Outcome of comparing a computed value with a closed form.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Status {
    #[serde(rename = "match")]
    Match,
    #[serde(rename = "MISMATCH")]
    Mismatch,
    #[serde(rename = "unstated")]
    Unstated,
}

impl Status {
    pub fn compare(value: usize, expected: Option<usize>) -> Self {
        match expected {
            None => Status::Unstated,
            Some(e) if e == value => Status::Match,
            Some(_) => Status::Mismatch,
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            Status::Match => "match",
            Status::Mismatch => "MISMATCH",
            Status::Unstated => "unstated",
        }
    }
}

/// How dimensions are computed.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    /// The explicit resolution of the Hecke algebra.
    #[default]
    Explicit,
    /// The generic resolution over the enveloping algebra.
    Oracle,
    /// Both, cross-checked.
    Both,
}

impl Method {
    fn explicit(&self) -> bool {
        matches!(self, Method::Explicit | Method::Both)
    }

    fn oracle(&self) -> bool {
        matches!(self, Method::Oracle | Method::Both)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Row {
    pub quantity: String,
    pub n: usize,
    pub value: usize,
    pub expected: Option<usize>,
    pub status: Status,
}

impl Row {
    fn new(quantity: &str, n: usize, value: usize, expected: Option<usize>) -> Self {
        Row {
            quantity: quantity.to_string(),
            n,
            value,
            expected,
            status: Status::compare(value, expected),
        }
    }
}

/// A per-degree comparison table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Table {
    pub title: String,
    pub field: String,
    pub rows: Vec<Row>,
}

fn fmt_expected(e: Option<usize>) -> String {
    e.map_or_else(|| "-".to_string(), |v| v.to_string())
}

impl Table {
    pub fn has_mismatch(&self) -> bool {
        self.rows.iter().any(|r| r.status == Status::Mismatch)
    }

    fn single_quantity(&self) -> bool {
        self.rows.windows(2).all(|w| w[0].quantity == w[1].quantity)
    }

    pub fn render_text(&self) -> String {
        let mut out = format!("{} over {}\n", self.title, self.field);
        let single = self.single_quantity();
        let width = self.rows.iter().map(|r| r.quantity.len()).max().unwrap_or(0).max(8);
        if single {
            let _ = writeln!(out, "{:>4}  {:>6}  {:>8}  status", "n", "value", "expected");
        } else {
            let _ = writeln!(out, "{:<width$}  {:>4}  {:>6}  {:>8}  status", "quantity", "n", "value", "expected");
        }
        for r in &self.rows {
            if !single {
                let _ = write!(out, "{:<width$}  ", r.quantity);
            }
            let _ = writeln!(out, "{:>4}  {:>6}  {:>8}  {}", r.n, r.value, fmt_expected(r.expected), r.status.as_str());
        }
        out
    }

    /// Columns `n,value,expected,status`, preceded by `quantity` when the
    /// table mixes several quantities.
    pub fn render_csv(&self) -> String {
        let single = self.single_quantity();
        let mut out = String::from(if single { "n,value,expected,status\n" } else { "quantity,n,value,expected,status\n" });
        for r in &self.rows {
            if !single {
                let _ = write!(out, "{},", r.quantity);
            }
            let expected = r.expected.map(|v| v.to_string()).unwrap_or_default();
            let _ = writeln!(out, "{},{},{},{}", r.n, r.value, expected, r.status.as_str());
        }
        out
    }
}

/// Whether the closed forms apply, i.e. the algebra is the bundled preset.
fn closed_forms_apply(p: &QuiverPresentation) -> bool {
    *p == QuiverPresentation::hecke()
}

fn char_two<F: Field>(algebra: &AlgebraTable<F>) -> bool {
    algebra.field().characteristic() == 2
}

/// `dim HH^n` for `0 <= n <= max_degree`.
pub fn hh_table<F: Field>(algebra: AlgebraTable<F>, max_degree: usize, method: Method, oracle_degree: usize) -> Result<Table> {
    let field = algebra.field().spec().to_string();
    let known = closed_forms_apply(algebra.presentation());
    let two = char_two(&algebra);
    let expect = |n: usize| if known { expected::hh_dim(n, two) } else { None };
    let mut rows = Vec::new();
    let explicit: Option<Vec<usize>> = if method.explicit() {
        let hom = HomComplex::new(&ExplicitResolution::new(algebra.clone(), max_degree + 1)?);
        Some((0..=max_degree).map(|n| hom.hh_dim(n)).collect::<Result<_>>()?)
    } else {
        None
    };
    if let Some(values) = &explicit {
        rows.extend(values.iter().enumerate().map(|(n, &v)| Row::new("HH", n, v, expect(n))));
    }
    if method.oracle() {
        let top = max_degree.min(oracle_degree);
        let res = OracleResolution::compute(EnvelopingAlgebra::new(&algebra), top + 1)?;
        let hom = res.hom_complex();
        for n in 0..=top {
            let v = hom.hh_dim(n)?;
            // With both methods the oracle is compared against the explicit value.
            let reference = match &explicit {
                Some(values) => Some(values[n]),
                None => expect(n),
            };
            rows.push(Row::new("HH oracle", n, v, reference));
        }
    }
    Ok(Table {
        title: "dim HH^n(A)".into(),
        field,
        rows,
    })
}

/// `dim Hom_{A^e}(R_n, A)` and `dim Hom_{A^e}(Omega^n(A), A)`.
pub fn homdims_table<F: Field>(algebra: AlgebraTable<F>, max_degree: usize) -> Result<Table> {
    let field = algebra.field().spec().to_string();
    let known = closed_forms_apply(algebra.presentation());
    let two = char_two(&algebra);
    let hom = HomComplex::new(&ExplicitResolution::new(algebra, max_degree + 1)?);
    let mut rows: Vec<Row> = (0..=max_degree)
        .map(|n| Row::new("Hom(R_n,A)", n, hom.dims[n], known.then(|| expected::hom_dim(n))))
        .collect();
    for n in 0..=max_degree {
        rows.push(Row::new("Hom(Omega^n,A)", n, hom.hom_omega_dim(n)?, if known { expected::hom_omega_dim(n, two) } else { None }));
    }
    Ok(Table {
        title: "Hom dimensions".into(),
        field,
        rows,
    })
}

/// `dim Ext^n(S_i, S_j)` for every pair of vertices.
pub fn ext_table<F: Field>(algebra: AlgebraTable<F>, max_degree: usize) -> Result<Table> {
    let field = algebra.field().spec().to_string();
    let known = closed_forms_apply(algebra.presentation());
    let ext = ExtTable::compute(&algebra, max_degree)?;
    let names: Vec<String> = algebra.quiver().vertices.clone();
    let mut rows = Vec::new();
    for (&(i, j), dims) in &ext.dims {
        let quantity = format!("Ext(S{},S{})", names[i], names[j]);
        for (n, &v) in dims.iter().enumerate() {
            rows.push(Row::new(&quantity, n, v, known.then(|| expected::ext_dim(i + 1, j + 1, n))));
        }
    }
    Ok(Table {
        title: "dim Ext^n(S_i, S_j)".into(),
        field,
        rows,
    })
}

/// A basis of the center in path notation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CenterReport {
    pub field: String,
    pub basis: Vec<String>,
}

impl CenterReport {
    pub fn compute<F: Field>(algebra: &AlgebraTable<F>) -> Self {
        CenterReport {
            field: algebra.field().spec().to_string(),
            basis: algebra.center().iter().map(|z| algebra.format_element(z)).collect(),
        }
    }

    pub fn render_text(&self) -> String {
        let mut out = format!("center over {} (dimension {})\n", self.field, self.basis.len());
        for z in &self.basis {
            let _ = writeln!(out, "  {z}");
        }
        out
    }

    pub fn render_csv(&self) -> String {
        let mut out = String::from("index,element\n");
        for (k, z) in self.basis.iter().enumerate() {
            let _ = writeln!(out, "{k},{z}");
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GszEntry {
    pub label: String,
    pub element: String,
}

/// The generator set in one degree, expanded in the free path algebra.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GszListing {
    pub degree: usize,
    pub elements: Vec<GszEntry>,
}

impl GszListing {
    pub fn compute(presentation: &QuiverPresentation, degree: usize) -> Result<Self> {
        let sets = gsz_sets(&presentation.quiver, degree)?;
        let elements = sets[degree]
            .elements
            .iter()
            .map(|x| GszEntry {
                label: format!("{}_{degree}", x.label),
                element: x.expanded.format(&presentation.quiver),
            })
            .collect();
        Ok(GszListing { degree, elements })
    }

    pub fn render_text(&self) -> String {
        let mut out = format!("generator set in degree {}\n", self.degree);
        for e in &self.elements {
            let _ = writeln!(out, "  {} = {}", e.label, e.element);
        }
        out
    }

    pub fn render_csv(&self) -> String {
        let mut out = String::from("label,element\n");
        for e in &self.elements {
            let _ = writeln!(out, "{},{}", e.label, e.element);
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Betti {
    pub i: usize,
    pub j: usize,
    pub mult: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyDegree {
    pub n: usize,
    pub complex_ok: bool,
    pub exact_ok: bool,
    pub minimal_ok: bool,
    pub betti: Vec<Betti>,
    pub hom_dim: usize,
    pub hh_dim: usize,
    pub expected: Option<usize>,
    pub status: Status,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckSummary {
    pub name: String,
    pub ok: bool,
    pub degrees_checked: usize,
    pub failures: Vec<DegreeCheck>,
}

impl CheckSummary {
    fn from_checks(name: &str, checks: Vec<DegreeCheck>) -> Self {
        let degrees_checked = checks.len();
        let failures: Vec<DegreeCheck> = checks.into_iter().filter(|c| !c.ok).collect();
        CheckSummary {
            name: name.to_string(),
            ok: failures.is_empty(),
            degrees_checked,
            failures,
        }
    }
}

/// Settings for [`verify_report`].
#[derive(Clone, Debug)]
pub struct VerifyConfig {
    pub max_degree: usize,
    pub method: Method,
    pub oracle_degree: usize,
    /// Top degree for the generator-set checks, whose path expansions grow quickly.
    pub gsz_degree: usize,
    pub options: DifferentialOptions,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            max_degree: 24,
            method: Method::Explicit,
            oracle_degree: crate::oracle::DEFAULT_ORACLE_DEGREE,
            gsz_degree: 12,
            options: DifferentialOptions::default(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub field: String,
    pub max_degree: usize,
    pub method: Method,
    /// Readings chosen where the defining formulas leave a cell open.
    pub readings: Vec<String>,
    pub degrees: Vec<VerifyDegree>,
    pub checks: Vec<CheckSummary>,
    pub passed: bool,
}

impl VerifyReport {
    pub fn render_text(&self) -> String {
        let mut out = format!("verification over {} to degree {} ({:?})\n", self.field, self.max_degree, self.method);
        for r in &self.readings {
            let _ = writeln!(out, "reading: {r}");
        }
        let _ = writeln!(out, "{:>4}  {:>7}  {:>5}  {:>7}  {:<24}  {:>3}  {:>3}  {:>8}  status", "n", "complex", "exact", "minimal", "betti", "hom", "hh", "expected");
        let yes = |b: bool| if b { "ok" } else { "FAIL" };
        for d in &self.degrees {
            let betti = d.betti.iter().map(|b| format!("P{}{}^{}", b.i, b.j, b.mult)).collect::<Vec<_>>().join(" ");
            let _ = writeln!(
                out,
                "{:>4}  {:>7}  {:>5}  {:>7}  {:<24}  {:>3}  {:>3}  {:>8}  {}",
                d.n,
                yes(d.complex_ok),
                yes(d.exact_ok),
                yes(d.minimal_ok),
                betti,
                d.hom_dim,
                d.hh_dim,
                fmt_expected(d.expected),
                d.status.as_str()
            );
        }
        for c in &self.checks {
            let _ = writeln!(out, "{:<5} {} ({} degrees)", if c.ok { "PASS" } else { "FAIL" }, c.name, c.degrees_checked);
            for f in &c.failures {
                let _ = writeln!(out, "      n = {}: {}", f.n, f.detail);
            }
        }
        let _ = writeln!(out, "{}", if self.passed { "all checks passed" } else { "some checks FAILED" });
        out
    }

    /// One row per degree: `n,value,expected,status` with the HH dimension as value.
    pub fn render_csv(&self) -> String {
        let mut out = String::from("n,value,expected,status\n");
        for d in &self.degrees {
            let expected = d.expected.map(|v| v.to_string()).unwrap_or_default();
            let _ = writeln!(out, "{},{},{},{}", d.n, d.hh_dim, expected, d.status.as_str());
        }
        out
    }

    /// Degrees at which some structural check failed, in increasing order.
    pub fn failing_degrees(&self) -> Vec<usize> {
        let mut out: Vec<usize> = self.checks.iter().flat_map(|c| c.failures.iter().map(|f| f.n)).collect();
        out.sort_unstable();
        out.dedup();
        out
    }
}

fn pair_label(i: usize, j: usize) -> (usize, usize) {
    (i + 1, j + 1)
}

/// Runs every structural check for the selected method and collects the
/// per-degree data. The closed-form comparison is informational and does not
/// affect `passed`.
pub fn verify_report<F: Field>(algebra: AlgebraTable<F>, config: &VerifyConfig) -> Result<VerifyReport> {
    let field = algebra.field().spec().to_string();
    let max = config.max_degree;
    let known = closed_forms_apply(algebra.presentation());
    let two = char_two(&algebra);
    let expect = |n: usize| if known { expected::hh_dim(n, two) } else { None };
    let mut readings = Vec::new();
    let mut checks = Vec::new();
    let mut degrees = Vec::new();
    let oracle_top = max.min(config.oracle_degree);
    let oracle = if config.method.oracle() {
        Some(OracleResolution::compute(EnvelopingAlgebra::new(&algebra), oracle_top + 1)?)
    } else {
        None
    };

    if config.method.explicit() {
        let res = ExplicitResolution::with_options(algebra.clone(), max + 1, config.options.clone())?;
        let roles = *res.roles();
        readings.push(match config.options.boundary {
            BoundaryReading::FirstCopy => "a^0_0 in the image of c_1 read as a^1_0".to_string(),
            BoundaryReading::Zero => "a^0_0 in the image of c_1 read as zero".to_string(),
        });
        let hom = HomComplex::new(&res);
        let within = |c: &DegreeCheck| c.n <= max;
        let complex: Vec<DegreeCheck> = verify_complex(&res).into_iter().filter(within).collect();
        let exact: Vec<DegreeCheck> = verify_exactness(&res).into_iter().filter(within).collect();
        let minimal: Vec<DegreeCheck> = verify_minimality(&res).into_iter().filter(within).collect();
        for n in 0..=max {
            let summands = &res.slices()[n].term.summands;
            let betti = [(1, 1), (1, 2), (2, 1), (2, 2)]
                .iter()
                .map(|&(i, j)| Betti {
                    i,
                    j,
                    mult: multiplicity(summands, i, j),
                })
                .filter(|b| b.mult > 0)
                .collect();
            let hh = hom.hh_dim(n)?;
            degrees.push(VerifyDegree {
                n,
                complex_ok: n == 0 || complex[n - 1].ok,
                exact_ok: exact[n].ok,
                minimal_ok: n == 0 || minimal[n - 1].ok,
                betti,
                hom_dim: hom.dims[n],
                hh_dim: hh,
                expected: expect(n),
                status: Status::compare(hh, expect(n)),
            });
        }
        let gsz_top = max.min(config.gsz_degree);
        let ext = ExtTable::compute(&algebra, max)?;
        checks.push(CheckSummary::from_checks("complex", complex));
        checks.push(CheckSummary::from_checks("exactness", exact));
        checks.push(CheckSummary::from_checks("minimality", minimal));
        checks.push(CheckSummary::from_checks(
            "multiplicities_vs_ext",
            verify_multiplicities(&res, &ext).into_iter().filter(|c| c.n <= max).collect(),
        ));
        checks.push(CheckSummary::from_checks("compare_with_simples", compare_with_simples(&res, gsz_top)));
        let gsz = verify_gsz(&algebra, gsz_top)?;
        for r in &gsz {
            readings.extend(r.extended.iter().cloned());
        }
        checks.push(CheckSummary::from_checks(
            "generator_sets",
            gsz.iter()
                .map(|r| DegreeCheck {
                    n: r.n,
                    ok: r.passed(),
                    detail: format!(
                        "uniform {} complex {} exact {} minimal {} multiplicities {}",
                        r.uniform, r.complex_ok, r.exact_ok, r.minimal_ok, r.multiplicities_ok
                    ),
                })
                .collect(),
        ));
        if let Some(o) = &oracle {
            let ohom = o.hom_complex();
            let mut mult_checks = Vec::new();
            let mut hh_checks = Vec::new();
            for n in 0..=oracle_top {
                let om = o.multiplicities(n);
                let summands = &res.slices()[n].term.summands;
                let mut mismatches = Vec::new();
                for (&(vi, vj), &m) in &om {
                    let (i, j) = if vi == roles.v1 { (1, if vj == roles.v1 { 1 } else { 2 }) } else { (2, if vj == roles.v1 { 1 } else { 2 }) };
                    if multiplicity(summands, i, j) != m {
                        mismatches.push(format!("P_{i}{j}: oracle {m}, explicit {}", multiplicity(summands, i, j)));
                    }
                }
                let total: usize = om.values().sum();
                if total != summands.len() {
                    mismatches.push(format!("oracle has {total} summands, explicit {}", summands.len()));
                }
                mult_checks.push(DegreeCheck {
                    n,
                    ok: mismatches.is_empty(),
                    detail: mismatches.join("; "),
                });
                let (ov, ev) = (ohom.hh_dim(n)?, hom.hh_dim(n)?);
                hh_checks.push(DegreeCheck {
                    n,
                    ok: ov == ev,
                    detail: format!("oracle {ov}, explicit {ev}"),
                });
            }
            checks.push(CheckSummary::from_checks("oracle_multiplicities", mult_checks));
            checks.push(CheckSummary::from_checks("oracle_hh", hh_checks));
        }
    } else if let Some(o) = &oracle {
        let ohom = o.hom_complex();
        let mut complex = Vec::new();
        let mut exact = Vec::new();
        let mut minimal = Vec::new();
        for n in 0..=oracle_top {
            let d = &o.degrees[n];
            let c_ok = n == 0 || o.degrees[n - 1].map.compose(&d.map).map(|m| m.is_zero()).unwrap_or(false);
            let e_ok = if n == 0 {
                d.map.rank() == algebra.dim()
            } else {
                o.degrees[n - 1].map.kernel_dim() == d.map.rank()
            };
            complex.push(DegreeCheck {
                n,
                ok: c_ok,
                detail: String::new(),
            });
            exact.push(DegreeCheck {
                n,
                ok: e_ok,
                detail: String::new(),
            });
            minimal.push(DegreeCheck {
                n,
                ok: d.kernel_in_radical,
                detail: String::new(),
            });
            let betti = o
                .multiplicities(n)
                .into_iter()
                .map(|((i, j), mult)| {
                    let (i, j) = pair_label(i, j);
                    Betti { i, j, mult }
                })
                .collect();
            let hh = ohom.hh_dim(n)?;
            degrees.push(VerifyDegree {
                n,
                complex_ok: c_ok,
                exact_ok: e_ok,
                minimal_ok: d.kernel_in_radical,
                betti,
                hom_dim: ohom.dims[n],
                hh_dim: hh,
                expected: expect(n),
                status: Status::compare(hh, expect(n)),
            });
        }
        checks.push(CheckSummary::from_checks("oracle_complex", complex));
        checks.push(CheckSummary::from_checks("oracle_exactness", exact));
        checks.push(CheckSummary::from_checks("oracle_minimality", minimal));
    }
    let passed = checks.iter().all(|c| c.ok);
    Ok(VerifyReport {
        field,
        max_degree: max,
        method: config.method,
        readings,
        degrees,
        checks,
        passed,
    })
}

/// Builds the algebra for `spec` and runs `job` on it.
pub fn with_algebra<J: AlgebraJob>(presentation: &QuiverPresentation, spec: FieldSpec, job: J) -> Result<J::Output> {
    struct Visit<'a, J> {
        presentation: &'a QuiverPresentation,
        job: J,
    }
    impl<J: AlgebraJob> FieldVisitor for Visit<'_, J> {
        type Output = Result<J::Output>;
        fn visit<F: Field>(self, field: F) -> Self::Output {
            let algebra = AlgebraTable::build(self.presentation, field)?;
            self.job.run(algebra)
        }
    }
    spec.visit(Visit { presentation, job })
}

/// A computation that is generic over the coefficient field.
pub trait AlgebraJob {
    type Output;
    fn run<F: Field>(self, algebra: AlgebraTable<F>) -> Result<Self::Output>;
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Rationals;

    #[test]
    fn statuses_and_csv() {
        let a = AlgebraTable::build(&QuiverPresentation::hecke(), Rationals).unwrap();
        let t = hh_table(a, 7, Method::Explicit, 10).unwrap();
        assert!(!t.has_mismatch());
        let csv = t.render_csv();
        assert!(csv.starts_with("n,value,expected,status\n0,5,5,match\n"));
        assert_eq!(Status::compare(3, None), Status::Unstated);
    }

    #[test]
    fn verify_round_trips_through_json() {
        let a = AlgebraTable::build(&QuiverPresentation::hecke(), Rationals).unwrap();
        let config = VerifyConfig {
            max_degree: 6,
            method: Method::Both,
            ..Default::default()
        };
        let report = verify_report(a, &config).unwrap();
        assert!(report.passed, "{}", report.render_text());
        let back: VerifyReport = serde_json::from_str(&serde_json::to_string(&report).unwrap()).unwrap();
        assert_eq!(back.render_text(), report.render_text());
    }
}
