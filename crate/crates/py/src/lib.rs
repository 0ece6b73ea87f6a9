//! Python bindings. Structured results come back as JSON strings with the same
//! schema as the command-line `--format json` output.

use hochschild::linalg::{Field, FieldSpec};
use hochschild::path_algebra::{parse_presentation, AlgebraTable, QuiverPresentation};
use hochschild::report::{self, with_algebra, AlgebraJob, CenterReport, GszListing, Method, VerifyConfig};
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

fn value_error(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn presentation(source: Option<&str>) -> hochschild::Result<QuiverPresentation> {
    match source {
        Some(text) => parse_presentation(text),
        None => Ok(QuiverPresentation::hecke()),
    }
}

fn method(name: &str) -> PyResult<Method> {
    match name {
        "explicit" => Ok(Method::Explicit),
        "oracle" => Ok(Method::Oracle),
        "both" => Ok(Method::Both),
        other => Err(value_error(format!("unknown method '{other}'"))),
    }
}

fn field(name: &str) -> PyResult<FieldSpec> {
    name.parse().map_err(value_error)
}

enum Job {
    Hh(usize, Method),
    Verify(VerifyConfig),
    Center,
    Ext(usize),
    Homdims(usize),
}

impl AlgebraJob for Job {
    type Output = String;

    fn run<F: Field>(self, algebra: AlgebraTable<F>) -> hochschild::Result<String> {
        let json = match self {
            Job::Hh(max, m) => serde_json::to_string(&report::hh_table(algebra, max, m, max)?),
            Job::Verify(config) => serde_json::to_string(&report::verify_report(algebra, &config)?),
            Job::Center => serde_json::to_string(&CenterReport::compute(&algebra)),
            Job::Ext(max) => serde_json::to_string(&report::ext_table(algebra, max)?),
            Job::Homdims(max) => serde_json::to_string(&report::homdims_table(algebra, max)?),
        };
        Ok(json.expect("report types serialize"))
    }
}

fn run(job: Job, field_name: &str, source: Option<&str>) -> PyResult<String> {
    let p = presentation(source).map_err(value_error)?;
    with_algebra(&p, field(field_name)?, job).map_err(value_error)
}

/// `dim HH^n` with closed-form status per degree, as a JSON table.
#[pyfunction]
#[pyo3(signature = (field = "q", max_degree = 24, method = "explicit", presentation = None))]
fn hh_table(field: &str, max_degree: usize, method: &str, presentation: Option<&str>) -> PyResult<String> {
    run(Job::Hh(max_degree, self::method(method)?), field, presentation)
}

/// `[dim HH^0, ..., dim HH^max_degree]`.
#[pyfunction]
#[pyo3(signature = (field = "q", max_degree = 24, method = "explicit", presentation = None))]
fn hh_dims(field: &str, max_degree: usize, method: &str, presentation: Option<&str>) -> PyResult<Vec<usize>> {
    let m = self::method(method)?;
    if m == Method::Both {
        return Err(value_error("hh_dims takes a single method"));
    }
    let json = run(Job::Hh(max_degree, m), field, presentation)?;
    let table: report::Table = serde_json::from_str(&json).map_err(value_error)?;
    Ok(table.rows.iter().map(|r| r.value).collect())
}

/// Full verification report as JSON; `passed` tells whether every check held.
#[pyfunction]
#[pyo3(signature = (field = "q", max_degree = 24, method = "explicit", presentation = None))]
fn verify(field: &str, max_degree: usize, method: &str, presentation: Option<&str>) -> PyResult<String> {
    let config = VerifyConfig {
        max_degree,
        method: self::method(method)?,
        ..Default::default()
    };
    run(Job::Verify(config), field, presentation)
}

#[pyfunction]
#[pyo3(signature = (field = "q", presentation = None))]
fn center(field: &str, presentation: Option<&str>) -> PyResult<Vec<String>> {
    let json = run(Job::Center, field, presentation)?;
    let c: CenterReport = serde_json::from_str(&json).map_err(value_error)?;
    Ok(c.basis)
}

#[pyfunction]
#[pyo3(signature = (field = "q", max_degree = 24, presentation = None))]
fn ext_table(field: &str, max_degree: usize, presentation: Option<&str>) -> PyResult<String> {
    run(Job::Ext(max_degree), field, presentation)
}

#[pyfunction]
#[pyo3(signature = (field = "q", max_degree = 24, presentation = None))]
fn homdims_table(field: &str, max_degree: usize, presentation: Option<&str>) -> PyResult<String> {
    run(Job::Homdims(max_degree), field, presentation)
}

/// `(label, element)` pairs of the generator set in `degree`.
#[pyfunction]
fn gsz(degree: usize) -> PyResult<Vec<(String, String)>> {
    let listing = GszListing::compute(&QuiverPresentation::hecke(), degree).map_err(value_error)?;
    Ok(listing.elements.into_iter().map(|e| (e.label, e.element)).collect())
}

#[pymodule]
fn hochschild_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_function(wrap_pyfunction!(hh_table, m)?)?;
    m.add_function(wrap_pyfunction!(hh_dims, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add_function(wrap_pyfunction!(center, m)?)?;
    m.add_function(wrap_pyfunction!(ext_table, m)?)?;
    m.add_function(wrap_pyfunction!(homdims_table, m)?)?;
    m.add_function(wrap_pyfunction!(gsz, m)?)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn jobs_produce_json() {
        let json = run(Job::Hh(3, Method::Explicit), "f3", None).unwrap();
        let table: report::Table = serde_json::from_str(&json).unwrap();
        assert_eq!(table.rows.iter().map(|r| r.value).collect::<Vec<_>>(), [5, 3, 3, 4]);
        assert_eq!(gsz(1).unwrap().len(), 3);
    }
}
