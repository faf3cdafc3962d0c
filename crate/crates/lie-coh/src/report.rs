//! Report documents: one serde type per subcommand, all maps ordered so
//! identical inputs serialize to identical bytes, plus plain-text table
//! rendering carrying the same numbers.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::Result;
use crate::lie::StructureClass;
use crate::sampling::SuiteResult;
use crate::spectral::{Page, PageTwoComparison};

pub type Provenance = BTreeMap<String, String>;

pub fn pq_key(p: usize, q: usize) -> String {
    format!("({p},{q})")
}

pub fn string_dims(raw: &BTreeMap<(usize, usize), usize>) -> BTreeMap<String, usize> {
    raw.iter().map(|(&(p, q), &d)| (pq_key(p, q), d)).collect()
}

/// Per total degree: (sum over the diagonal, comparison dimension).
pub fn degree_pairs(raw: &[(usize, usize, usize)]) -> BTreeMap<String, [usize; 2]> {
    raw.iter().map(|&(n, a, b)| (n.to_string(), [a, b])).collect()
}

pub fn to_json<T: Serialize>(value: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    Ok(s)
}

fn aligned(rows: &[Vec<String>]) -> String {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let mut widths = vec![0usize; cols];
    for row in rows {
        for (c, cell) in row.iter().enumerate() {
            widths[c] = widths[c].max(cell.len());
        }
    }
    let mut out = String::new();
    for row in rows {
        let mut line = String::new();
        for (c, cell) in row.iter().enumerate() {
            if c > 0 {
                line.push_str("  ");
            }
            line.push_str(&format!("{cell:>width$}", width = widths[c]));
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

/// Renders a {(p,q) -> dim} map as a grid with p across and q down.
fn grid(dims: &BTreeMap<String, usize>) -> String {
    let mut parsed: Vec<(usize, usize, usize)> = Vec::new();
    for (key, &d) in dims {
        let inner = key.trim_start_matches('(').trim_end_matches(')');
        if let Some((a, b)) = inner.split_once(',') {
            if let (Ok(p), Ok(q)) = (a.trim().parse(), b.trim().parse()) {
                parsed.push((p, q, d));
                continue;
            }
        }
        return aligned(
            &dims
                .iter()
                .map(|(k, v)| vec![k.clone(), v.to_string()])
                .collect::<Vec<_>>(),
        );
    }
    if parsed.is_empty() {
        return "  (all zero)\n".into();
    }
    let maxp = parsed.iter().map(|t| t.0).max().unwrap();
    let maxq = parsed.iter().map(|t| t.1).max().unwrap();
    let mut rows = Vec::new();
    let mut header = vec!["q\\p".to_string()];
    header.extend((0..=maxp).map(|p| p.to_string()));
    rows.push(header);
    for q in 0..=maxq {
        let mut row = vec![q.to_string()];
        for p in 0..=maxp {
            let d = parsed
                .iter()
                .find(|t| t.0 == p && t.1 == q)
                .map_or(0, |t| t.2);
            row.push(d.to_string());
        }
        rows.push(row);
    }
    aligned(&rows)
}

#[derive(Serialize)]
pub struct CohomologyReport {
    pub kind: String,
    pub grading: String,
    pub dims: BTreeMap<String, usize>,
    pub complex_dims: Vec<usize>,
    pub provenance: Provenance,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub matrices: Option<BTreeMap<String, Vec<Vec<String>>>>,
}

impl CohomologyReport {
    pub fn to_text(&self) -> String {
        let mut out = format!("cohomology ({})\n", self.grading);
        if self.grading == "bigraded" {
            out.push_str(&grid(&self.dims));
        } else {
            let mut rows = vec![vec!["n".to_string()], vec!["dim".to_string()]];
            for (k, v) in &self.dims {
                rows[0].push(k.clone());
                rows[1].push(v.to_string());
            }
            out.push_str(&aligned(&rows));
        }
        out.push_str(&format!(
            "complex dims: {:?}\n",
            self.complex_dims
        ));
        out
    }
}

#[derive(Serialize)]
pub struct PageDims {
    pub r: usize,
    pub dims: BTreeMap<String, usize>,
}

impl PageDims {
    pub fn from_page(page: &Page) -> Self {
        PageDims {
            r: page.r,
            dims: string_dims(&page.dims()),
        }
    }
}

#[derive(Serialize)]
pub struct E2Check {
    pub p: usize,
    pub computed: BTreeMap<String, usize>,
    pub tensor_reading: BTreeMap<String, usize>,
    pub summand_reading: BTreeMap<String, usize>,
    pub relative_dims: Vec<usize>,
    pub fiber_dims: Vec<usize>,
    /// total degree -> [convolution, dim H^n]
    pub reconstruction: BTreeMap<String, [usize; 2]>,
    pub pass: bool,
}

impl E2Check {
    pub fn from_comparison(cmp: &PageTwoComparison) -> Self {
        E2Check {
            p: cmp.p,
            computed: string_dims(&cmp.computed),
            tensor_reading: string_dims(&cmp.tensor_prediction),
            summand_reading: string_dims(&cmp.summand_prediction),
            relative_dims: cmp.relative_dims.clone(),
            fiber_dims: cmp.fiber_dims.clone(),
            reconstruction: degree_pairs(&cmp.reconstruction),
            pass: cmp.pass,
        }
    }
}

#[derive(Serialize)]
pub struct SpectralReport {
    pub kind: String,
    pub mode: String,
    pub pages: Vec<PageDims>,
    pub stable_at: usize,
    #[serde(rename = "einf_vs_H")]
    pub einf_vs_h: BTreeMap<String, [usize; 2]>,
    pub converges: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub e2_check: Option<E2Check>,
    pub provenance: Provenance,
}

impl SpectralReport {
    pub fn to_text(&self) -> String {
        let mut out = format!("spectral sequence ({})\n", self.mode);
        for page in &self.pages {
            out.push_str(&format!("E_{}\n", page.r));
            out.push_str(&grid(&page.dims));
        }
        out.push_str(&format!("stable at r = {}\n", self.stable_at));
        let mut rows = vec![vec![
            "n".to_string(),
            "sum E_inf".to_string(),
            "dim H^n".to_string(),
        ]];
        for (n, pair) in &self.einf_vs_h {
            rows.push(vec![n.clone(), pair[0].to_string(), pair[1].to_string()]);
        }
        out.push_str(&aligned(&rows));
        out.push_str(&format!("converges: {}\n", self.converges));
        if let Some(e2) = &self.e2_check {
            out.push_str(&format!("E_2 identification at p = {}\n", e2.p));
            out.push_str("computed:\n");
            out.push_str(&grid(&e2.computed));
            out.push_str("tensor reading:\n");
            out.push_str(&grid(&e2.tensor_reading));
            out.push_str("summand reading (printed for comparison):\n");
            out.push_str(&grid(&e2.summand_reading));
            out.push_str(&format!("verdict: {}\n", verdict(e2.pass)));
        }
        out
    }
}

#[derive(Serialize)]
pub struct TheoremSlot {
    pub p: usize,
    pub q: usize,
    pub lhs: usize,
    pub rhs: usize,
    pub pass: bool,
}

#[derive(Serialize)]
pub struct Hypotheses {
    pub semisimple: bool,
    pub closed_exp_v: String,
}

fn slot_table(slots: &[TheoremSlot]) -> String {
    let mut rows = vec![vec![
        "p".to_string(),
        "q".to_string(),
        "lhs".to_string(),
        "rhs".to_string(),
        "verdict".to_string(),
    ]];
    for s in slots {
        rows.push(vec![
            s.p.to_string(),
            s.q.to_string(),
            s.lhs.to_string(),
            s.rhs.to_string(),
            verdict(s.pass).to_string(),
        ]);
    }
    aligned(&rows)
}

fn hypothesis_line(h: &Hypotheses) -> String {
    format!(
        "hypotheses: semisimple = {}, closed_exp_v = {}\n",
        h.semisimple, h.closed_exp_v
    )
}

#[derive(Serialize)]
pub struct TheoremDocument {
    pub kind: String,
    pub slots: Vec<TheoremSlot>,
    pub hypotheses: Hypotheses,
    pub classification: StructureClass,
    pub pass: bool,
    pub provenance: Provenance,
}

impl TheoremDocument {
    pub fn to_text(&self) -> String {
        let mut out = String::from("theorem crosscheck\n");
        out.push_str(&slot_table(&self.slots));
        out.push_str(&hypothesis_line(&self.hypotheses));
        out.push_str(&format!("overall: {}\n", verdict(self.pass)));
        out
    }
}

#[derive(Serialize)]
pub struct SpectralStage {
    pub pages: Vec<PageDims>,
    pub stable_at: usize,
    #[serde(rename = "einf_vs_H")]
    pub einf_vs_h: BTreeMap<String, [usize; 2]>,
    pub converges: bool,
}

#[derive(Serialize)]
pub struct TheoremStage {
    pub slots: Vec<TheoremSlot>,
    pub hypotheses: Hypotheses,
    pub pass: bool,
}

/// End-to-end pipeline document: every stage that could run, the ones
/// that were skipped with the reason, and any stage errors keyed by
/// stage label. A missing stage always has an entry in `skipped` or
/// `errors`.
#[derive(Serialize)]
pub struct FullReport {
    pub kind: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub classification: Option<StructureClass>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cohomology: Option<BTreeMap<String, usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub spectral: Option<SpectralStage>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub e2_checks: Option<Vec<E2Check>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub theorem: Option<TheoremStage>,
    pub skipped: BTreeMap<String, String>,
    pub errors: BTreeMap<String, String>,
    pub pass: bool,
    pub provenance: Provenance,
}

impl FullReport {
    pub fn to_text(&self) -> String {
        let mut out = String::from("full report\n");
        if let Some(c) = &self.classification {
            out.push_str(&format!(
                "classification: elliptic = {}, complex = {}, essentially real = {}, corank of real part = {}\n",
                c.elliptic, c.complex, c.essentially_real, c.corank_real_part
            ));
        }
        if let Some(dims) = &self.cohomology {
            out.push_str("bigraded cohomology\n");
            out.push_str(&grid(dims));
        }
        if let Some(sp) = &self.spectral {
            out.push_str(&format!(
                "spectral pages E_0..E_{}, stable at r = {}, converges: {}\n",
                sp.pages.last().map_or(0, |p| p.r),
                sp.stable_at,
                sp.converges
            ));
        }
        if let Some(checks) = &self.e2_checks {
            for e2 in checks {
                out.push_str(&format!(
                    "page-two identification at p = {}: {}\n",
                    e2.p,
                    verdict(e2.pass)
                ));
            }
        }
        if let Some(th) = &self.theorem {
            out.push_str("theorem crosscheck\n");
            out.push_str(&slot_table(&th.slots));
            out.push_str(&hypothesis_line(&th.hypotheses));
        }
        for (stage, reason) in &self.skipped {
            out.push_str(&format!("skipped {stage}: {reason}\n"));
        }
        for (stage, err) in &self.errors {
            out.push_str(&format!("error in {stage}: {err}\n"));
        }
        out.push_str(&format!("overall: {}\n", verdict(self.pass)));
        out
    }
}

#[derive(Serialize)]
pub struct CheckReport {
    pub kind: String,
    pub antisymmetry: String,
    pub jacobi: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub real_structure: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub subalgebra: Option<String>,
    pub pass: bool,
    pub provenance: Provenance,
}

impl CheckReport {
    pub fn to_text(&self) -> String {
        let mut out = String::from("structure checks\n");
        out.push_str(&format!("antisymmetry: {}\n", self.antisymmetry));
        out.push_str(&format!("jacobi: {}\n", self.jacobi));
        if let Some(r) = &self.real_structure {
            out.push_str(&format!("real structure: {r}\n"));
        }
        if let Some(s) = &self.subalgebra {
            out.push_str(&format!("subalgebra closure: {s}\n"));
        }
        out.push_str(&format!("overall: {}\n", verdict(self.pass)));
        out
    }
}

#[derive(Serialize)]
pub struct ClassifyReport {
    pub kind: String,
    #[serde(flatten)]
    pub classification: StructureClass,
    pub provenance: Provenance,
}

impl ClassifyReport {
    pub fn to_text(&self) -> String {
        let c = &self.classification;
        format!(
            "classification\nelliptic: {}\ncomplex: {}\nessentially real: {}\ncorank of real part: {}\n",
            c.elliptic, c.complex, c.essentially_real, c.corank_real_part
        )
    }
}

#[derive(Serialize)]
pub struct ProptestReport {
    pub kind: String,
    pub seed: u64,
    pub cases_per_suite: usize,
    pub suites: Vec<SuiteResult>,
    pub pass: bool,
}

impl ProptestReport {
    pub fn to_text(&self) -> String {
        let mut rows = vec![vec![
            "suite".to_string(),
            "cases".to_string(),
            "failures".to_string(),
        ]];
        for s in &self.suites {
            rows.push(vec![s.name.clone(), s.cases.to_string(), s.failures.to_string()]);
        }
        let mut out = format!("property suites (seed {})\n", self.seed);
        out.push_str(&aligned(&rows));
        out.push_str(&format!("overall: {}\n", verdict(self.pass)));
        out
    }
}

pub fn verdict(pass: bool) -> &'static str {
    if pass {
        "pass"
    } else {
        "FAIL"
    }
}
