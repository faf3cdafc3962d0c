//! Command line front end.
//!
//! Exit codes: 0 when every requested check passes, 1 when a
//! computation reaches a verdict and the verdict is a failure (broken
//! Jacobi identity, a refused non-elliptic subalgebra, a mismatched
//! identity), 2 for input problems (unreadable files, malformed
//! scalars, bad flag combinations, dimension caps).

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use lie_coh::bigraded::{induced_complex, relative_complex};
use lie_coh::cochain::ce_complex;
use lie_coh::config::{check_cap, effective_max_dim, Format, OutputSink};
use lie_coh::error::Error;
use lie_coh::files::{load_algebra, load_subspace, resolve_representation};
use lie_coh::matrix::Matrix;
use lie_coh::rep::{forms_module, quotient_module, Representation};
use lie_coh::report::{
    degree_pairs, pq_key, to_json, verdict, CheckReport, ClassifyReport, CohomologyReport,
    E2Check, Hypotheses, PageDims, ProptestReport, Provenance, SpectralReport, TheoremDocument,
    TheoremSlot,
};
use lie_coh::roots::{chevalley, preset, SemisimpleAlgebra};
use lie_coh::sampling::run_all;
use lie_coh::scalar::Scalar;
use lie_coh::spectral::{hs_e2_check, hs_filtration, limit_page};
use lie_coh::subspace::Subspace;
use lie_coh::theorem::{full_report, theorem1_crosscheck};
use lie_coh::{LieAlgebra, Result};

#[derive(Parser)]
#[command(name = "lie-coh", version, about = "Exact Lie algebra cohomology relative to subalgebras")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,

    /// Hard cap on the algebra dimension (env LIE_COH_MAX_DIM, default 12)
    #[arg(long, global = true)]
    max_dim: Option<usize>,

    /// Output format: json, text, or both
    #[arg(long, global = true, default_value = "both")]
    format: String,

    /// Write the report to a file instead of stdout
    #[arg(long, global = true)]
    output: Option<PathBuf>,

    /// Include differential matrices in the report
    #[arg(long, global = true)]
    dump_matrices: bool,
}

#[derive(Args)]
struct AlgebraArgs {
    /// Built-in semisimple algebra: A1, A2, B2, or G2
    #[arg(long)]
    preset: Option<String>,

    /// Algebra description file (JSON)
    #[arg(long)]
    algebra: Option<PathBuf>,
}

#[derive(Args)]
struct SubArgs {
    /// Subalgebra span file (JSON)
    #[arg(long)]
    sub: Option<PathBuf>,

    /// Span of named basis vectors, comma separated (e.g. "h1,e1")
    #[arg(long)]
    span: Option<String>,

    /// Standard Borel subalgebra of a preset
    #[arg(long)]
    borel: bool,

    /// Standard parabolic of a preset from 1-based simple root indices ("1,3")
    #[arg(long)]
    parabolic: Option<String>,

    /// Take v = g itself
    #[arg(long)]
    full_v: bool,
}

#[derive(Subcommand)]
enum Cmd {
    /// Validate antisymmetry, Jacobi, the real structure, and subalgebra closure
    Check {
        #[command(flatten)]
        alg: AlgebraArgs,
        #[command(flatten)]
        sub: SubArgs,
    },
    /// Classify a subalgebra: elliptic / complex / essentially real
    Classify {
        #[command(flatten)]
        alg: AlgebraArgs,
        #[command(flatten)]
        sub: SubArgs,
    },
    /// Cohomology dimensions, bigraded when a subalgebra is given
    Cohomology {
        #[command(flatten)]
        alg: AlgebraArgs,
        #[command(flatten)]
        sub: SubArgs,
        /// Coefficients: trivial, adjoint, quotient:g/v, dual:<spec>,
        /// forms:<p>:<spec>, or a representation file path
        #[arg(long, default_value = "trivial")]
        rep: String,
        /// Largest filtration degree p to report (default: codim of v)
        #[arg(long)]
        p_max: Option<usize>,
    },
    /// Relative (basic) cohomology of the pair (g, v)
    Relative {
        #[command(flatten)]
        alg: AlgebraArgs,
        #[command(flatten)]
        sub: SubArgs,
        #[arg(long, default_value = "trivial")]
        rep: String,
    },
    /// Filtration spectral sequence of a subalgebra
    Spectral {
        #[command(flatten)]
        alg: AlgebraArgs,
        #[command(flatten)]
        sub: SubArgs,
        #[arg(long, default_value = "trivial")]
        rep: String,
        /// Run the induced sequence for C^p(g/v) coefficients, filtered
        /// by k = v meet conj(v), with the page-two identification
        #[arg(long)]
        p: Option<usize>,
        /// Stop after this page instead of running to the limit
        #[arg(long)]
        max_page: Option<usize>,
    },
    /// Cross-check the product formula for bigraded cohomology
    Theorem {
        #[command(flatten)]
        alg: AlgebraArgs,
        #[command(flatten)]
        sub: SubArgs,
        #[arg(long, default_value_t = 2)]
        p_max: usize,
        /// Largest q to report (default: dim v)
        #[arg(long)]
        q_max: Option<usize>,
        /// Emit one aggregate document: classification, bigraded table,
        /// spectral pages, page-two identification, and the crosscheck,
        /// skipping the elliptic-only stages with a reason instead of
        /// refusing
        #[arg(long)]
        full: bool,
        /// Stop the aggregate's spectral pages after this page
        #[arg(long, requires = "full")]
        max_page: Option<usize>,
    },
    /// Randomized property suites with a reproducible seed
    Proptest {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 120)]
        cases: usize,
    },
}

/// A loaded algebra plus the preset handle when one was used, so the
/// Borel and parabolic shortcuts know the root data.
struct Loaded {
    g: LieAlgebra,
    semisimple: Option<SemisimpleAlgebra>,
    source: String,
}

fn load(alg: &AlgebraArgs, cap: usize) -> Result<Loaded> {
    let loaded = match (&alg.preset, &alg.algebra) {
        (Some(_), Some(_)) => {
            return Err(Error::Invalid(
                "give either --preset or --algebra, not both".into(),
            ))
        }
        (None, None) => {
            return Err(Error::Invalid(
                "an algebra is required: --preset NAME or --algebra FILE".into(),
            ))
        }
        (Some(name), None) => {
            let ss = chevalley(&preset(name)?)?;
            Loaded {
                g: ss.algebra.clone(),
                source: format!("preset:{}", ss.name),
                semisimple: Some(ss),
            }
        }
        (None, Some(path)) => Loaded {
            g: load_algebra(path)?,
            semisimple: None,
            source: format!("file:{}", path.display()),
        },
    };
    check_cap(loaded.g.dim(), cap)?;
    Ok(loaded)
}

fn parse_indices(raw: &str) -> Result<Vec<usize>> {
    raw.split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| Error::Invalid(format!("bad simple root index {:?}", t.trim())))
        })
        .collect()
}

fn span_from_names(g: &LieAlgebra, raw: &str) -> Result<Subspace> {
    let mut rows = Vec::new();
    for name in raw.split(',') {
        let name = name.trim();
        let idx = g
            .name_index(name)
            .ok_or_else(|| Error::Invalid(format!("unknown basis name {name:?}")))?;
        let mut row = vec![Scalar::zero(); g.dim()];
        row[idx] = Scalar::one();
        rows.push(row);
    }
    Ok(Subspace::from_rows(g.dim(), rows))
}

/// Resolves the subalgebra flags to a span; `None` when no flag was
/// given. The textual descriptor feeds the provenance block.
fn resolve_sub(loaded: &Loaded, sub: &SubArgs) -> Result<Option<(Subspace, String)>> {
    let mut picks = 0;
    for present in [
        sub.sub.is_some(),
        sub.span.is_some(),
        sub.borel,
        sub.parabolic.is_some(),
        sub.full_v,
    ] {
        picks += usize::from(present);
    }
    if picks > 1 {
        return Err(Error::Invalid(
            "give at most one of --sub, --span, --borel, --parabolic, --full-v".into(),
        ));
    }
    if let Some(path) = &sub.sub {
        let v = load_subspace(path, loaded.g.dim())?;
        return Ok(Some((v, format!("file:{}", path.display()))));
    }
    if let Some(names) = &sub.span {
        let v = span_from_names(&loaded.g, names)?;
        return Ok(Some((v, format!("span:{names}"))));
    }
    if sub.borel {
        let ss = loaded.semisimple.as_ref().ok_or_else(|| {
            Error::Invalid("--borel needs a --preset algebra".into())
        })?;
        return Ok(Some((ss.borel(), "borel".into())));
    }
    if let Some(raw) = &sub.parabolic {
        let ss = loaded.semisimple.as_ref().ok_or_else(|| {
            Error::Invalid("--parabolic needs a --preset algebra".into())
        })?;
        let v = ss.parabolic(&parse_indices(raw)?)?;
        return Ok(Some((v, format!("parabolic:{raw}"))));
    }
    if sub.full_v {
        return Ok(Some((Subspace::full(loaded.g.dim()), "full".into())));
    }
    Ok(None)
}

fn require_sub(loaded: &Loaded, sub: &SubArgs) -> Result<(Subspace, String)> {
    resolve_sub(loaded, sub)?.ok_or_else(|| {
        Error::Invalid(
            "a subalgebra is required: --sub, --span, --borel, --parabolic, or --full-v".into(),
        )
    })
}

fn matrix_strings(m: &Matrix) -> Vec<Vec<String>> {
    (0..m.nrows())
        .map(|i| (0..m.ncols()).map(|j| m[(i, j)].to_string()).collect())
        .collect()
}

fn base_provenance(loaded: &Loaded, cap: usize) -> Provenance {
    let mut p = Provenance::new();
    p.insert("input".into(), loaded.source.clone());
    p.insert("max_dim".into(), cap.to_string());
    p
}

struct Emitter {
    format: Format,
    sink: OutputSink,
}

impl Emitter {
    fn new(cli: &Cli) -> Result<Self> {
        Ok(Emitter {
            format: cli.format.parse()?,
            sink: OutputSink::new(cli.output.clone()),
        })
    }

    fn emit<T: serde::Serialize>(&self, report: &T, text: String) -> Result<()> {
        let content = match self.format {
            Format::Json => to_json(report)?,
            Format::Text => text,
            Format::Both => format!("{}{}", to_json(report)?, text),
        };
        self.sink.emit(&content)
    }
}

fn names3(g: &LieAlgebra, i: usize, j: usize, k: usize) -> String {
    format!(
        "({}, {}, {})",
        g.names()[i],
        g.names()[j],
        g.names()[k]
    )
}

fn cmd_check(cli: &Cli, alg: &AlgebraArgs, sub: &SubArgs) -> Result<bool> {
    let cap = effective_max_dim(cli.max_dim)?;
    let loaded = load(alg, cap)?;
    let g = &loaded.g;
    let mut pass = true;

    let antisymmetry = match g.check_antisymmetry() {
        None => "pass".to_string(),
        Some((i, j)) => {
            pass = false;
            format!("FAIL at ({}, {})", g.names()[i], g.names()[j])
        }
    };
    let jacobi = match g.check_jacobi() {
        None => "pass".to_string(),
        Some((i, j, k)) => {
            pass = false;
            format!("FAIL at {}", names3(g, i, j, k))
        }
    };
    let real_structure = match g.real_structure() {
        None => None,
        Some(_) => Some(match g.check_real_structure() {
            Ok(()) => "pass".to_string(),
            Err(e) => {
                pass = false;
                format!("FAIL: {e}")
            }
        }),
    };

    let mut provenance = base_provenance(&loaded, cap);
    let subalgebra = match resolve_sub(&loaded, sub)? {
        None => None,
        Some((v, desc)) => {
            provenance.insert("subalgebra".into(), desc);
            Some(match g.subalgebra_witness(&v) {
                None => format!("pass (dim {})", v.dim()),
                Some((a, b)) => {
                    pass = false;
                    format!("FAIL: bracket of span rows {a} and {b} leaves the span")
                }
            })
        }
    };

    let report = CheckReport {
        kind: "check".into(),
        antisymmetry,
        jacobi,
        real_structure,
        subalgebra,
        pass,
        provenance,
    };
    let text = report.to_text();
    Emitter::new(cli)?.emit(&report, text)?;
    Ok(pass)
}

fn cmd_classify(cli: &Cli, alg: &AlgebraArgs, sub: &SubArgs) -> Result<bool> {
    let cap = effective_max_dim(cli.max_dim)?;
    let loaded = load(alg, cap)?;
    let (v, desc) = require_sub(&loaded, sub)?;
    loaded.g.require_subalgebra(&v)?;
    let classification = loaded.g.classify(&v)?;
    let mut provenance = base_provenance(&loaded, cap);
    provenance.insert("subalgebra".into(), desc);
    let report = ClassifyReport {
        kind: "classify".into(),
        classification,
        provenance,
    };
    let text = report.to_text();
    Emitter::new(cli)?.emit(&report, text)?;
    Ok(true)
}

fn cmd_cohomology(
    cli: &Cli,
    alg: &AlgebraArgs,
    sub: &SubArgs,
    rep_spec: &str,
    p_max: Option<usize>,
) -> Result<bool> {
    let cap = effective_max_dim(cli.max_dim)?;
    let loaded = load(alg, cap)?;
    let g = &loaded.g;
    let resolved = resolve_sub(&loaded, sub)?;
    let v_ref = resolved.as_ref().map(|(v, _)| v);
    let rep = resolve_representation(g, v_ref, rep_spec)?;
    rep.require_homomorphism(g)?;

    let mut provenance = base_provenance(&loaded, cap);
    provenance.insert("representation".into(), rep_spec.to_string());

    let report = match &resolved {
        None => {
            let complex = ce_complex(g, &rep)?;
            let betti = complex.cohomology_dims();
            let mut dims = BTreeMap::new();
            for (n, d) in betti.iter().enumerate() {
                dims.insert(n.to_string(), *d);
            }
            let matrices = cli.dump_matrices.then(|| {
                complex
                    .d
                    .iter()
                    .enumerate()
                    .map(|(q, m)| (format!("d{q}"), matrix_strings(m)))
                    .collect()
            });
            CohomologyReport {
                kind: "cohomology".into(),
                grading: "simple".into(),
                dims,
                complex_dims: complex.dims.clone(),
                provenance,
                matrices,
            }
        }
        Some((v, desc)) => {
            g.require_subalgebra(v)?;
            provenance.insert("subalgebra".into(), desc.clone());
            let p_top = p_max.unwrap_or_else(|| g.dim() - v.dim());
            provenance.insert("p_max".into(), p_top.to_string());
            let mut dims = BTreeMap::new();
            let mut matrices = cli.dump_matrices.then(BTreeMap::new);
            for p in 0..=p_top {
                let induced = induced_complex(g, &rep, v, p)?;
                for (q, d) in induced.complex.cohomology_dims().iter().enumerate() {
                    dims.insert(pq_key(p, q), *d);
                }
                if let Some(store) = matrices.as_mut() {
                    for (q, m) in induced.complex.d.iter().enumerate() {
                        store.insert(format!("p{p}.d{q}"), matrix_strings(m));
                    }
                }
            }
            CohomologyReport {
                kind: "cohomology".into(),
                grading: "bigraded".into(),
                dims,
                complex_dims: ce_complex(g, &rep)?.dims,
                provenance,
                matrices,
            }
        }
    };
    let text = report.to_text();
    Emitter::new(cli)?.emit(&report, text)?;
    Ok(true)
}

fn cmd_relative(cli: &Cli, alg: &AlgebraArgs, sub: &SubArgs, rep_spec: &str) -> Result<bool> {
    let cap = effective_max_dim(cli.max_dim)?;
    let loaded = load(alg, cap)?;
    let g = &loaded.g;
    let (v, desc) = require_sub(&loaded, sub)?;
    g.require_subalgebra(&v)?;
    let rep = resolve_representation(g, Some(&v), rep_spec)?;
    rep.require_homomorphism(g)?;
    let relative = relative_complex(g, &rep, &v)?;
    let betti = relative.complex.cohomology_dims();

    let mut provenance = base_provenance(&loaded, cap);
    provenance.insert("subalgebra".into(), desc);
    provenance.insert("representation".into(), rep_spec.to_string());
    provenance.insert(
        "definition".into(),
        "basic subcomplex: forms annihilated by insertions and Lie derivatives along v; \
         the bigraded slice N^(0,q) coincides with all of C^q and is not a substitute"
            .into(),
    );
    let mut dims = BTreeMap::new();
    for (n, d) in betti.iter().enumerate() {
        dims.insert(n.to_string(), *d);
    }
    let matrices = cli.dump_matrices.then(|| {
        relative
            .complex
            .d
            .iter()
            .enumerate()
            .map(|(q, m)| (format!("d{q}"), matrix_strings(m)))
            .collect()
    });
    let report = CohomologyReport {
        kind: "cohomology".into(),
        grading: "relative".into(),
        dims,
        complex_dims: relative.complex.dims.clone(),
        provenance,
        matrices,
    };
    let text = report.to_text();
    Emitter::new(cli)?.emit(&report, text)?;
    Ok(true)
}

fn cmd_spectral(
    cli: &Cli,
    alg: &AlgebraArgs,
    sub: &SubArgs,
    rep_spec: &str,
    p: Option<usize>,
    max_page: Option<usize>,
) -> Result<bool> {
    let cap = effective_max_dim(cli.max_dim)?;
    let loaded = load(alg, cap)?;
    let g = &loaded.g;
    let (v, desc) = require_sub(&loaded, sub)?;
    g.require_subalgebra(&v)?;

    let mut provenance = base_provenance(&loaded, cap);
    provenance.insert("subalgebra".into(), desc);
    if let Some(m) = max_page {
        provenance.insert("max_page".into(), m.to_string());
    }

    let (mode, lim, e2_check) = match p {
        None => {
            let rep = resolve_representation(g, Some(&v), rep_spec)?;
            rep.require_homomorphism(g)?;
            provenance.insert("representation".into(), rep_spec.to_string());
            let fc = hs_filtration(g, &rep, &v)?;
            ("full", limit_page(&fc, max_page)?, None)
        }
        Some(p) => {
            if rep_spec != "trivial" {
                return Err(Error::Invalid(
                    "--p fixes the coefficients to forms on g/v; drop --rep".into(),
                ));
            }
            provenance.insert("p".into(), p.to_string());
            let v_alg = g.restrict(&v)?;
            let qm = quotient_module(g, &v)?;
            let module = forms_module(&qm.rep, p, &Representation::trivial(v.dim(), 1));
            let vbar = g.conjugate_subspace(&v)?;
            let k_amb = v.intersect(&vbar);
            let k_in_v = g.subspace_in_restricted(&v, &k_amb)?;
            let fc = hs_filtration(&v_alg, &module, &k_in_v)?;
            let lim = limit_page(&fc, max_page)?;
            let e2 = E2Check::from_comparison(&hs_e2_check(g, &v, p)?);
            ("induced", lim, Some(e2))
        }
    };

    let pages = lim.pages.iter().map(PageDims::from_page).collect();
    let einf_vs_h = degree_pairs(&lim.einf_vs_h);
    let pass = lim.converges && e2_check.as_ref().map_or(true, |e| e.pass);
    let report = SpectralReport {
        kind: "spectral".into(),
        mode: mode.into(),
        pages,
        stable_at: lim.stable_at,
        einf_vs_h,
        converges: lim.converges,
        e2_check,
        provenance,
    };
    let mut text = report.to_text();
    if cli.dump_matrices {
        for pg in &lim.pages {
            for (&(pp, qq), m) in &pg.maps {
                if m.nrows() > 0 && m.ncols() > 0 && !m.is_zero() {
                    text.push_str(&format!(
                        "d_{} at {}: {:?}\n",
                        pg.r,
                        pq_key(pp, qq),
                        matrix_strings(m)
                    ));
                }
            }
        }
    }
    Emitter::new(cli)?.emit(&report, text)?;
    Ok(pass)
}

fn cmd_theorem(
    cli: &Cli,
    alg: &AlgebraArgs,
    sub: &SubArgs,
    p_max: usize,
    q_max: Option<usize>,
    full: bool,
    max_page: Option<usize>,
) -> Result<bool> {
    let cap = effective_max_dim(cli.max_dim)?;
    let loaded = load(alg, cap)?;
    let (v, desc) = require_sub(&loaded, sub)?;

    if full {
        let mut report = full_report(&loaded.g, &v, p_max, q_max, max_page)?;
        report.provenance = base_provenance(&loaded, cap);
        report.provenance.insert("subalgebra".into(), desc);
        report.provenance.insert("p_max".into(), p_max.to_string());
        let text = report.to_text();
        Emitter::new(cli)?.emit(&report, text)?;
        return Ok(report.pass);
    }

    let outcome = theorem1_crosscheck(&loaded.g, &v, p_max, q_max)?;

    let mut provenance = base_provenance(&loaded, cap);
    provenance.insert("subalgebra".into(), desc);
    provenance.insert("p_max".into(), p_max.to_string());
    provenance.insert("dim_v".into(), outcome.dim_v.to_string());
    provenance.insert("dim_k".into(), outcome.dim_k.to_string());
    let slots = outcome
        .entries
        .iter()
        .map(|e| TheoremSlot {
            p: e.p,
            q: e.q,
            lhs: e.lhs,
            rhs: e.rhs,
            pass: e.pass,
        })
        .collect();
    let report = TheoremDocument {
        kind: "theorem1".into(),
        slots,
        hypotheses: Hypotheses {
            semisimple: outcome.semisimple,
            closed_exp_v: "asserted".into(),
        },
        classification: outcome.classification.clone(),
        pass: outcome.pass,
        provenance,
    };
    let text = report.to_text();
    Emitter::new(cli)?.emit(&report, text)?;
    Ok(outcome.pass)
}

fn cmd_proptest(cli: &Cli, seed: u64, cases: usize) -> Result<bool> {
    if cases == 0 {
        return Err(Error::Invalid("--cases must be positive".into()));
    }
    let suites = run_all(seed, cases);
    let pass = suites.iter().all(|s| s.pass());
    let report = ProptestReport {
        kind: "proptest".into(),
        seed,
        cases_per_suite: cases,
        suites,
        pass,
    };
    let text = report.to_text();
    Emitter::new(cli)?.emit(&report, text)?;
    Ok(pass)
}

fn run(cli: &Cli) -> Result<bool> {
    match &cli.cmd {
        Cmd::Check { alg, sub } => cmd_check(cli, alg, sub),
        Cmd::Classify { alg, sub } => cmd_classify(cli, alg, sub),
        Cmd::Cohomology { alg, sub, rep, p_max } => cmd_cohomology(cli, alg, sub, rep, *p_max),
        Cmd::Relative { alg, sub, rep } => cmd_relative(cli, alg, sub, rep),
        Cmd::Spectral { alg, sub, rep, p, max_page } => {
            cmd_spectral(cli, alg, sub, rep, *p, *max_page)
        }
        Cmd::Theorem { alg, sub, p_max, q_max, full, max_page } => {
            cmd_theorem(cli, alg, sub, *p_max, *q_max, *full, *max_page)
        }
        Cmd::Proptest { seed, cases } => cmd_proptest(cli, *seed, *cases),
    }
}

/// Verdict-style failures exit 1, malformed input exits 2.
fn failure_code(e: &Error) -> u8 {
    match e {
        Error::Jacobi(..)
        | Error::DSquare(..)
        | Error::NotElliptic(_)
        | Error::NotHomomorphism(..)
        | Error::RealStructure(_) => 1,
        _ => 2,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => {
            eprintln!("verdict: {}", verdict(false));
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(failure_code(&e))
        }
    }
}
