//! Python bindings: `Algebra` and `Subspace` wrappers over the exact
//! cohomology library. Dimension lists come back as plain lists,
//! classifications as dicts, and the larger reports as JSON strings.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

use lie_coh::bigraded::{bigraded_cohomology, relative_complex};
use lie_coh::cochain::ce_complex;
use lie_coh::files::{resolve_representation, AlgebraFile};
use lie_coh::report::pq_key;
use lie_coh::roots::{chevalley, preset, HermitianForm, SemisimpleAlgebra};
use lie_coh::scalar::Scalar;
use lie_coh::spectral::{hs_e2_check, hs_filtration, limit_page};
use lie_coh::subspace::Subspace;
use lie_coh::theorem::{full_report, theorem1_crosscheck};
use lie_coh::LieAlgebra;

fn to_py(e: lie_coh::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn json_out(value: &serde_json::Value) -> PyResult<String> {
    serde_json::to_string_pretty(value)
        .map(|s| s + "\n")
        .map_err(|e| PyValueError::new_err(e.to_string()))
}

#[pyclass(name = "Subspace", skip_from_py_object)]
#[derive(Clone)]
struct PySubspace {
    inner: Subspace,
}

#[pymethods]
impl PySubspace {
    #[getter]
    fn dim(&self) -> usize {
        self.inner.dim()
    }

    #[getter]
    fn ambient(&self) -> usize {
        self.inner.ambient()
    }

    /// Echelon basis rows as scalar strings.
    fn basis(&self) -> Vec<Vec<String>> {
        (0..self.inner.dim())
            .map(|r| {
                self.inner
                    .basis_row(r)
                    .iter()
                    .map(Scalar::to_string)
                    .collect()
            })
            .collect()
    }

    fn __repr__(&self) -> String {
        format!(
            "Subspace(dim={}, ambient={})",
            self.inner.dim(),
            self.inner.ambient()
        )
    }
}

#[pyclass(name = "Algebra")]
struct PyAlgebra {
    g: LieAlgebra,
    ss: Option<SemisimpleAlgebra>,
}

impl PyAlgebra {
    fn require_preset(&self) -> PyResult<&SemisimpleAlgebra> {
        self.ss.as_ref().ok_or_else(|| {
            PyValueError::new_err("this constructor needs a preset algebra with root data")
        })
    }
}

#[pymethods]
impl PyAlgebra {
    /// Chevalley construction for A1, A2, B2, or G2 with the compact
    /// real structure attached.
    #[staticmethod]
    fn preset(name: &str) -> PyResult<Self> {
        let ss = chevalley(&preset(name).map_err(to_py)?).map_err(to_py)?;
        Ok(PyAlgebra {
            g: ss.algebra.clone(),
            ss: Some(ss),
        })
    }

    /// Reads the same JSON document the CLI accepts for --algebra.
    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        let file: AlgebraFile =
            serde_json::from_str(text).map_err(|e| PyValueError::new_err(e.to_string()))?;
        Ok(PyAlgebra {
            g: file.into_algebra().map_err(to_py)?,
            ss: None,
        })
    }

    #[getter]
    fn dim(&self) -> usize {
        self.g.dim()
    }

    #[getter]
    fn names(&self) -> Vec<String> {
        self.g.names().to_vec()
    }

    /// Raises when antisymmetry, the Jacobi identity, or an attached
    /// real structure fails; returns None otherwise.
    fn validate(&self) -> PyResult<()> {
        if let Some((i, j)) = self.g.check_antisymmetry() {
            return Err(PyValueError::new_err(format!(
                "antisymmetry fails at ({}, {})",
                self.g.names()[i],
                self.g.names()[j]
            )));
        }
        if let Some((i, j, k)) = self.g.check_jacobi() {
            return Err(PyValueError::new_err(format!(
                "Jacobi identity fails at ({}, {}, {})",
                self.g.names()[i],
                self.g.names()[j],
                self.g.names()[k]
            )));
        }
        if self.g.real_structure().is_some() {
            self.g.check_real_structure().map_err(to_py)?;
        }
        Ok(())
    }

    fn borel(&self) -> PyResult<PySubspace> {
        Ok(PySubspace {
            inner: self.require_preset()?.borel(),
        })
    }

    /// 1-based simple root indices, as in the CLI's --parabolic.
    fn parabolic(&self, simple: Vec<usize>) -> PyResult<PySubspace> {
        Ok(PySubspace {
            inner: self.require_preset()?.parabolic(&simple).map_err(to_py)?,
        })
    }

    fn full(&self) -> PySubspace {
        PySubspace {
            inner: Subspace::full(self.g.dim()),
        }
    }

    fn span(&self, names: Vec<String>) -> PyResult<PySubspace> {
        let mut rows = Vec::new();
        for name in &names {
            let idx = self
                .g
                .name_index(name)
                .ok_or_else(|| PyValueError::new_err(format!("unknown basis name {name:?}")))?;
            let mut row = vec![Scalar::zero(); self.g.dim()];
            row[idx] = Scalar::one();
            rows.push(row);
        }
        Ok(PySubspace {
            inner: Subspace::from_rows(self.g.dim(), rows),
        })
    }

    /// Span of explicit rows of scalar strings like "1/2+3i".
    fn subspace(&self, rows: Vec<Vec<String>>) -> PyResult<PySubspace> {
        let n = self.g.dim();
        let mut parsed = Vec::with_capacity(rows.len());
        for row in &rows {
            if row.len() != n {
                return Err(PyValueError::new_err(format!(
                    "rows must have {n} entries"
                )));
            }
            let mut out = Vec::with_capacity(n);
            for cell in row {
                out.push(cell.parse::<Scalar>().map_err(to_py)?);
            }
            parsed.push(out);
        }
        Ok(PySubspace {
            inner: Subspace::from_rows(n, parsed),
        })
    }

    fn classify<'py>(
        &self,
        py: Python<'py>,
        v: PyRef<'_, PySubspace>,
    ) -> PyResult<Bound<'py, PyDict>> {
        self.g.require_subalgebra(&v.inner).map_err(to_py)?;
        let c = self.g.classify(&v.inner).map_err(to_py)?;
        let d = PyDict::new(py);
        d.set_item("elliptic", c.elliptic)?;
        d.set_item("complex", c.complex)?;
        d.set_item("essentially_real", c.essentially_real)?;
        d.set_item("corank_real_part", c.corank_real_part)?;
        Ok(d)
    }

    /// Cohomology dimensions of the full complex; rep specs match the
    /// CLI (trivial, adjoint, quotient:g/v, dual:..., forms:p:...).
    #[pyo3(signature = (rep = "trivial"))]
    fn betti(&self, rep: &str) -> PyResult<Vec<usize>> {
        let r = resolve_representation(&self.g, None, rep).map_err(to_py)?;
        r.require_homomorphism(&self.g).map_err(to_py)?;
        Ok(ce_complex(&self.g, &r).map_err(to_py)?.cohomology_dims())
    }

    /// Column p of the bigraded cohomology attached to v.
    #[pyo3(signature = (v, p, rep = "trivial"))]
    fn bigraded(&self, v: PyRef<'_, PySubspace>, p: usize, rep: &str) -> PyResult<Vec<usize>> {
        let r = resolve_representation(&self.g, Some(&v.inner), rep).map_err(to_py)?;
        bigraded_cohomology(&self.g, &r, &v.inner, p).map_err(to_py)
    }

    /// Relative (basic) cohomology of the pair (g, v).
    #[pyo3(signature = (v, rep = "trivial"))]
    fn relative(&self, v: PyRef<'_, PySubspace>, rep: &str) -> PyResult<Vec<usize>> {
        let r = resolve_representation(&self.g, Some(&v.inner), rep).map_err(to_py)?;
        Ok(relative_complex(&self.g, &r, &v.inner)
            .map_err(to_py)?
            .complex
            .cohomology_dims())
    }

    /// Filtration spectral sequence report as a JSON string.
    #[pyo3(signature = (v, max_page = None))]
    fn spectral(&self, v: PyRef<'_, PySubspace>, max_page: Option<usize>) -> PyResult<String> {
        let rep = lie_coh::rep::Representation::trivial(self.g.dim(), 1);
        let fc = hs_filtration(&self.g, &rep, &v.inner).map_err(to_py)?;
        let lim = limit_page(&fc, max_page).map_err(to_py)?;
        let pages: Vec<serde_json::Value> = lim
            .pages
            .iter()
            .map(|pg| {
                let dims: serde_json::Map<String, serde_json::Value> = pg
                    .dims()
                    .iter()
                    .map(|(&(p, q), &d)| (pq_key(p, q), d.into()))
                    .collect();
                serde_json::json!({"r": pg.r, "dims": dims})
            })
            .collect();
        let einf: serde_json::Map<String, serde_json::Value> = lim
            .einf_vs_h
            .iter()
            .map(|&(n, total, h)| (n.to_string(), serde_json::json!([total, h])))
            .collect();
        json_out(&serde_json::json!({
            "kind": "spectral",
            "pages": pages,
            "stable_at": lim.stable_at,
            "einf_vs_H": einf,
            "converges": lim.converges,
        }))
    }

    /// Page-two identification for coefficients C^p(g/v), as JSON.
    fn e2_check(&self, v: PyRef<'_, PySubspace>, p: usize) -> PyResult<String> {
        let cmp = hs_e2_check(&self.g, &v.inner, p).map_err(to_py)?;
        let table = |m: &std::collections::BTreeMap<(usize, usize), usize>| {
            m.iter()
                .map(|(&(j, t), &d)| (pq_key(j, t), d.into()))
                .collect::<serde_json::Map<String, serde_json::Value>>()
        };
        let reconstruction: serde_json::Map<String, serde_json::Value> = cmp
            .reconstruction
            .iter()
            .map(|&(n, conv, h)| (n.to_string(), serde_json::json!([conv, h])))
            .collect();
        json_out(&serde_json::json!({
            "kind": "e2_check",
            "p": p,
            "computed": table(&cmp.computed),
            "tensor_reading": table(&cmp.tensor_prediction),
            "summand_reading": table(&cmp.summand_prediction),
            "relative_dims": cmp.relative_dims,
            "fiber_dims": cmp.fiber_dims,
            "reconstruction": reconstruction,
            "pass": cmp.pass,
        }))
    }

    /// Product-formula crosscheck, as JSON with per-slot verdicts.
    #[pyo3(signature = (v, p_max = 2, q_max = None))]
    fn theorem(
        &self,
        v: PyRef<'_, PySubspace>,
        p_max: usize,
        q_max: Option<usize>,
    ) -> PyResult<String> {
        let report = theorem1_crosscheck(&self.g, &v.inner, p_max, q_max).map_err(to_py)?;
        let slots: Vec<serde_json::Value> = report
            .entries
            .iter()
            .map(|e| {
                serde_json::json!({
                    "p": e.p, "q": e.q, "lhs": e.lhs, "rhs": e.rhs, "pass": e.pass,
                })
            })
            .collect();
        json_out(&serde_json::json!({
            "kind": "theorem1",
            "slots": slots,
            "hypotheses": {"semisimple": report.semisimple, "closed_exp_v": "asserted"},
            "classification": {
                "elliptic": report.classification.elliptic,
                "complex": report.classification.complex,
                "essentially_real": report.classification.essentially_real,
                "corank_real_part": report.classification.corank_real_part,
            },
            "pass": report.pass,
        }))
    }

    /// One aggregate JSON document: classification, bigraded table,
    /// spectral pages, page-two identification, and the crosscheck,
    /// with skipped stages and stage errors recorded in place.
    #[pyo3(signature = (v, p_max = 2, q_max = None, max_page = None))]
    fn full_report(
        &self,
        v: PyRef<'_, PySubspace>,
        p_max: usize,
        q_max: Option<usize>,
        max_page: Option<usize>,
    ) -> PyResult<String> {
        let report =
            full_report(&self.g, &v.inner, p_max, q_max, max_page).map_err(to_py)?;
        let value = serde_json::to_value(&report)
            .map_err(|e| PyValueError::new_err(e.to_string()))?;
        json_out(&value)
    }

    /// Whether the compact-structure Hermitian form is positive definite.
    fn hermitian_positive_definite(&self) -> PyResult<bool> {
        Ok(HermitianForm::new(&self.g)
            .map_err(to_py)?
            .is_positive_definite())
    }

    fn __repr__(&self) -> String {
        match &self.ss {
            Some(ss) => format!("Algebra(preset={}, dim={})", ss.name, self.g.dim()),
            None => format!("Algebra(dim={})", self.g.dim()),
        }
    }
}

#[pymodule]
fn lie_coh_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyAlgebra>()?;
    m.add_class::<PySubspace>()?;
    m.add("__version__", env!("CARGO_PKG_VERSION"))?;
    Ok(())
}
