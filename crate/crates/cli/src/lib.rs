//! Command-line front end for `jordan-core`.
//!
//! [`run`] parses an argument vector and returns the exit status together
//! with the report text, so the binary and the tests share one code path.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use jordan_core::algebra::jalg::{parse_algebra, parse_poly_matrix, write_algebra};
use jordan_core::algebra::{is_jordan, multiplication_table, Algebra, JordanVerdict};
use jordan_core::catalog::{
    self, fingerprint, format_niltype, pairwise_distinct_audit, verify_iso, IsoWitness,
};
use jordan_core::cohomology::cohomology_dims;
use jordan_core::deformation::{
    build_closure_graph, build_jor2_graph, derive_witness_search, necessary_conditions_audit,
    rigid_coverage_check, verify_arrow, verify_limit, ArrowStatus, ArrowVerdict, PolyMatrix,
    Provenance, SearchSpace, Witness,
};
use jordan_core::exactla::fmt_fraction;
use jordan_core::{Error, RatMatrix, Rational};

/// Process exit status.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Ok,
    VerificationFailed,
    Usage,
    Internal,
}

impl Status {
    pub fn code(self) -> u8 {
        match self {
            Status::Ok => 0,
            Status::VerificationFailed => 1,
            Status::Usage => 2,
            Status::Internal => 3,
        }
    }

    fn from_check(passed: bool) -> Self {
        if passed {
            Status::Ok
        } else {
            Status::VerificationFailed
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub status: Status,
    pub text: String,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    JsonLines,
}

#[derive(Debug, Parser)]
#[command(
    name = "jordan",
    version,
    about = "Exact checks on the catalog of real Jordan algebras of dimension at most three"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the multiplication table of a catalog entry.
    Show { id: String },
    /// Print every fingerprint field of a catalog entry or .jalg file.
    Invariants { algebra: String },
    /// Validate a .jalg file and check the Jordan identity.
    CheckJordan { file: PathBuf },
    /// Identify an algebra by its fingerprint.
    Fingerprint { algebra: String },
    /// Check that a rational matrix carries one algebra onto another.
    IsoVerify {
        source: String,
        target: String,
        /// Matrix file (`dim n` then rows); columns are the new basis.
        #[arg(long)]
        matrix: PathBuf,
    },
    /// Check that a polynomial curve g(t) degenerates source to target.
    DeformVerify {
        source: String,
        target: String,
        /// Polynomial matrix file (`dim n` then rows of entries in t).
        #[arg(long)]
        witness: PathBuf,
    },
    /// Run the necessary-conditions audit for a degeneration.
    Audit { source: String, target: String },
    /// Build the closure graph, report coverage and optionally write Graphviz.
    Graph {
        #[arg(long)]
        dot: Option<PathBuf>,
        /// Use the two-dimensional algebras instead.
        #[arg(long)]
        dim2: bool,
    },
    /// Recompute every catalog invariant and check fingerprints are distinct.
    CatalogAudit,
    /// Dimensions of cocycles, coboundaries and second cohomology.
    Cocycle { algebra: String },
    /// Search for a curve g(t) = M·diag(t^k) realizing a degeneration.
    Search {
        source: String,
        target: String,
        #[arg(long, default_value_t = 2)]
        degree: usize,
    },
    /// Classify N1² = αN3, N2² = βN3, N1N2 = γN3 up to isomorphism.
    Classify {
        alpha: String,
        beta: String,
        gamma: String,
    },
    /// Write every catalog entry as a .jalg file plus a manifest.
    Export { dir: PathBuf },
}

/// Failure of a command, mapped to an exit status.
#[derive(Debug)]
enum Failure {
    Core(Error),
    Usage(String),
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

impl Failure {
    fn status(&self) -> Status {
        match self {
            Failure::Usage(_) => Status::Usage,
            Failure::Internal(_) => Status::Internal,
            Failure::Core(e) => match e {
                Error::Parse { .. }
                | Error::UnknownId(_)
                | Error::ZeroDimension
                | Error::DimensionMismatch { .. }
                | Error::NotCommutative { .. }
                | Error::AllZero => Status::Usage,
                Error::Internal(_) | Error::NotJordanAtLimit => Status::Internal,
                _ => Status::VerificationFailed,
            },
        }
    }

    fn message(&self) -> String {
        match self {
            Failure::Core(e) => e.to_string(),
            Failure::Usage(m) | Failure::Internal(m) => m.clone(),
        }
    }
}

type CmdResult = Result<(Status, Output), Failure>;

/// Collected output: text lines and the matching JSON records.
#[derive(Default)]
struct Output {
    text: String,
    records: Vec<Value>,
}

impl Output {
    fn line(&mut self, text: impl AsRef<str>, record: Value) {
        self.text.push_str(text.as_ref());
        if !text.as_ref().ends_with('\n') {
            self.text.push('\n');
        }
        self.records.push(record);
    }

    fn render(self, format: Format) -> String {
        match format {
            Format::Text => self.text,
            Format::JsonLines => self.records.iter().fold(String::new(), |mut s, r| {
                let _ = writeln!(s, "{r}");
                s
            }),
        }
    }
}

pub fn run<I, T>(args: I) -> Report
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let status = if e.use_stderr() {
                Status::Usage
            } else {
                Status::Ok
            };
            return Report {
                status,
                text: e.render().to_string(),
            };
        }
    };
    let format = cli.format;
    match dispatch(cli.command) {
        Ok((status, out)) => Report {
            status,
            text: out.render(format),
        },
        Err(f) => {
            let text = match format {
                Format::Text => format!("error: {}\n", f.message()),
                Format::JsonLines => format!("{}\n", json!({"error": f.message()})),
            };
            Report {
                status: f.status(),
                text,
            }
        }
    }
}

fn dispatch(cmd: Command) -> CmdResult {
    match cmd {
        Command::Show { id } => show(&id),
        Command::Invariants { algebra } => invariants(&algebra),
        Command::CheckJordan { file } => check_jordan(&file),
        Command::Fingerprint { algebra } => identify(&algebra),
        Command::IsoVerify {
            source,
            target,
            matrix,
        } => iso_verify(&source, &target, &matrix),
        Command::DeformVerify {
            source,
            target,
            witness,
        } => deform_verify(&source, &target, &witness),
        Command::Audit { source, target } => audit(&source, &target),
        Command::Graph { dot, dim2 } => graph(dot.as_deref(), dim2),
        Command::CatalogAudit => catalog_audit(),
        Command::Cocycle { algebra } => cocycle(&algebra),
        Command::Search {
            source,
            target,
            degree,
        } => search(&source, &target, degree),
        Command::Classify { alpha, beta, gamma } => classify(&alpha, &beta, &gamma),
        Command::Export { dir } => export(&dir),
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))
}

/// A catalog id, or else a path to a .jalg file.
fn load(arg: &str) -> Result<(String, Algebra), Failure> {
    if let Ok(e) = catalog::get(arg) {
        return Ok((e.id.to_string(), e.algebra.clone()));
    }
    let path = Path::new(arg);
    if !path.exists() {
        return Err(Error::UnknownId(arg.to_string()).into());
    }
    Ok((arg.to_string(), parse_algebra(&read(path)?)?))
}

fn show(id: &str) -> CmdResult {
    let e = catalog::get(id)?;
    let mut out = Output::default();
    let table = e.table();
    let text = format!(
        "{} ({}) basis {}\n{}",
        e.id,
        e.description,
        e.basis.join(" "),
        table
    );
    out.line(
        text,
        json!({"id": e.id, "description": e.description, "basis": e.basis, "table": table.lines().collect::<Vec<_>>()}),
    );
    Ok((Status::Ok, out))
}

fn fingerprint_json(name: &str, f: &catalog::Fingerprint) -> Value {
    json!({
        "algebra": name,
        "dim": f.dim,
        "dim_rad": f.dim_rad,
        "dim_ann": f.dim_ann,
        "dim_der": f.dim_der,
        "niltype_of_radical": f.niltype_of_radical,
        "associative": f.associative,
        "unital": f.unital,
        "power_dims": f.power_dims,
        "lcs_dims": f.lcs_dims,
        "trace_form_signature": [f.trace_form_signature.positive, f.trace_form_signature.negative, f.trace_form_signature.zero],
        "square_form_invariant": f.square_form_invariant,
    })
}

fn invariants(arg: &str) -> CmdResult {
    let (name, a) = load(arg)?;
    let f = fingerprint(&a)?;
    let sq = f
        .square_form_invariant
        .map_or("-".to_string(), |(r, d)| format!("({r},{d})"));
    let text = format!(
        "algebra: {name}\ndim: {}\ndim_rad: {}\ndim_ann: {}\ndim_der: {}\nniltype_of_radical: {}\nassociative: {}\nunital: {}\npower_dims: {:?}\nlcs_dims: {:?}\ntrace_form_signature: {}\nsquare_form_invariant: {sq}\n",
        f.dim,
        f.dim_rad,
        f.dim_ann,
        f.dim_der,
        format_niltype(f.niltype_of_radical.as_deref()),
        f.associative,
        f.unital,
        f.power_dims,
        f.lcs_dims,
        f.trace_form_signature,
    );
    let mut out = Output::default();
    out.line(text, fingerprint_json(&name, &f));
    Ok((Status::Ok, out))
}

fn check_jordan(file: &Path) -> CmdResult {
    let a = parse_algebra(&read(file)?)?;
    let v = is_jordan(&a);
    let mut out = Output::default();
    let record = match &v {
        JordanVerdict::Holds => json!({"file": file.display().to_string(), "jordan": true}),
        JordanVerdict::Violated {
            i,
            j,
            k,
            l,
            p,
            residual,
        } => json!({
            "file": file.display().to_string(),
            "jordan": false,
            "tuple": [i + 1, j + 1, k + 1, l + 1, p + 1],
            "residual": fmt_fraction(residual),
        }),
    };
    out.line(format!("{}: {v}", file.display()), record);
    Ok((Status::from_check(v.holds()), out))
}

fn identify(arg: &str) -> CmdResult {
    let (name, a) = load(arg)?;
    let f = fingerprint(&a)?;
    let matches: Vec<&str> = catalog::classification_ids()
        .into_iter()
        .filter(|id| catalog::get(id).is_ok_and(|e| e.dim() == a.dim()))
        .filter(|id| {
            fingerprint(&catalog::get(id).expect("listed id").algebra).is_ok_and(|g| g == f)
        })
        .collect();
    let mut out = Output::default();
    let mut record = fingerprint_json(&name, &f);
    record["matches"] = json!(matches);
    let verdict = if matches.is_empty() {
        "no catalog match".to_string()
    } else {
        format!("matches {}", matches.join(","))
    };
    out.line(format!("{name}: {f}\n{name}: {verdict}"), record);
    Ok((Status::from_check(!matches.is_empty()), out))
}

fn constant_matrix(rows: Vec<Vec<jordan_core::UniPoly>>) -> Result<RatMatrix, Failure> {
    let n = rows.len();
    let mut vals = Vec::with_capacity(n);
    for row in rows {
        let mut r = Vec::with_capacity(n);
        for p in row {
            if p.degree().is_some_and(|d| d > 0) {
                return Err(Failure::Usage(format!("entry `{p}` is not a constant")));
            }
            r.push(p.coeff(0));
        }
        vals.push(r);
    }
    Ok(RatMatrix::from_rows(n, vals))
}

fn iso_verify(source: &str, target: &str, matrix: &Path) -> CmdResult {
    let (sn, sa) = load(source)?;
    let (tn, ta) = load(target)?;
    let m = constant_matrix(parse_poly_matrix(&read(matrix)?)?)?;
    let w = IsoWitness {
        source: sa.with_label(sn.clone()),
        target: ta.with_label(tn.clone()),
        matrix: m,
    };
    let ok = match verify_iso(&w) {
        Ok(ok) => ok,
        Err(Error::SingularMatrix) => false,
        Err(e) => return Err(e.into()),
    };
    let mut out = Output::default();
    let verdict = if ok {
        "isomorphism verified"
    } else {
        "not an isomorphism"
    };
    out.line(
        format!("{sn} -> {tn}: {verdict}"),
        json!({"source": sn, "target": tn, "verified": ok}),
    );
    Ok((Status::from_check(ok), out))
}

fn deform_verify(source: &str, target: &str, witness: &Path) -> CmdResult {
    let g = PolyMatrix::new(parse_poly_matrix(&read(witness)?)?)?;
    let verdict = match (catalog::get(source), catalog::get(target)) {
        (Ok(s), Ok(t)) => verify_arrow(&Witness {
            source: s.id.to_string(),
            target: t.id.to_string(),
            g,
            provenance: Provenance::Derived,
        })?,
        _ => {
            let (_, sa) = load(source)?;
            let (_, ta) = load(target)?;
            verify_limit(&sa, &ta, &g)?
        }
    };
    let mut out = Output::default();
    let reason = match &verdict {
        ArrowVerdict::Verified => Value::Null,
        ArrowVerdict::Failed(r) => json!(r),
    };
    out.line(
        format!("{source} -> {target}: {verdict}"),
        json!({"source": source, "target": target, "verified": verdict.holds(), "reason": reason}),
    );
    Ok((Status::from_check(verdict.holds()), out))
}

fn audit(source: &str, target: &str) -> CmdResult {
    let r = necessary_conditions_audit(source, target)?;
    let mut out = Output::default();
    out.line(
        format!("audit {source} -> {target}"),
        json!({"source": source, "target": target}),
    );
    for c in &r.checks {
        out.line(
            c.to_string(),
            json!({
                "item": c.item,
                "quantity": c.quantity,
                "source": c.source_value,
                "target": c.target_value,
                "relation": c.relation,
                "passed": c.passed,
            }),
        );
    }
    let verdict = if r.passed() { "pass" } else { "FAIL" };
    out.line(
        format!("verdict: {verdict}"),
        json!({"verdict": r.passed()}),
    );
    Ok((Status::from_check(r.passed()), out))
}

fn graph(dot: Option<&Path>, dim2: bool) -> CmdResult {
    let g = if dim2 {
        build_jor2_graph()?
    } else {
        build_closure_graph()?
    };
    let cov = rigid_coverage_check(&g)?;
    let mut out = Output::default();
    let count = |s: ArrowStatus| g.edges.iter().filter(|e| e.status == s).count();
    out.line(
        format!(
            "nodes {} edges {} (verified {}, by-reference {}, audit-only {})",
            g.nodes.len(),
            g.edges.len(),
            count(ArrowStatus::VerifiedWitness),
            count(ArrowStatus::ClaimedByReference),
            count(ArrowStatus::AuditOnly)
        ),
        json!({
            "nodes": g.nodes.len(),
            "edges": g.edges.len(),
            "verified": count(ArrowStatus::VerifiedWitness),
            "by_reference": count(ArrowStatus::ClaimedByReference),
            "audit_only": count(ArrowStatus::AuditOnly),
        }),
    );
    for e in &g.edges {
        let prov = e.witness.as_ref().map(|w| w.provenance.to_string());
        out.line(
            format!("edge {} -> {} {}{}", e.source, e.target, e.status, prov.as_ref().map_or(String::new(), |p| format!(" ({p})"))),
            json!({"source": e.source, "target": e.target, "status": e.status.to_string(), "provenance": prov}),
        );
    }
    for (node, path) in &cov.paths {
        out.line(
            format!("covered {node}: {}", path.join(" -> ")),
            json!({"node": node, "path": path}),
        );
    }
    for r in &cov.rigidity {
        let state = if r.survivors.is_empty() {
            "rigid".to_string()
        } else {
            format!("admits {}", r.survivors.join(","))
        };
        out.line(
            format!(
                "maximal {}: {} candidates audited, {state}",
                r.node, r.candidates
            ),
            json!({"maximal": r.node, "candidates": r.candidates, "survivors": r.survivors}),
        );
    }
    if let Some(path) = dot {
        fs::write(path, g.to_dot()?)
            .map_err(|e| Failure::Internal(format!("cannot write {}: {e}", path.display())))?;
        out.line(
            format!("wrote {}", path.display()),
            json!({"dot": path.display().to_string()}),
        );
    }
    Ok((Status::from_check(cov.rigidity_consistent()), out))
}

fn catalog_audit() -> CmdResult {
    let mut out = Output::default();
    let mut all = true;
    out.line(
        format!("{:<4} {:>3} {:>3} {:>3} {:>3} {:<7} {:<5} {:<6} {}", "id", "dim", "der", "ann", "rad", "niltype", "assoc", "unital", "status"),
        json!({"columns": ["id", "dim", "der", "ann", "rad", "niltype", "assoc", "unital", "status"]}),
    );
    for id in catalog::classification_ids() {
        let e = catalog::get(id)?;
        let c = catalog::check_entry(e)?;
        let r = &c.computed;
        all &= c.passed();
        let status = if c.passed() {
            "ok".to_string()
        } else {
            format!("MISMATCH expected {}", c.expected)
        };
        out.line(
            format!(
                "{:<4} {:>3} {:>3} {:>3} {:>3} {:<7} {:<5} {:<6} {}",
                id,
                e.dim(),
                r.dim_der,
                r.dim_ann,
                r.dim_rad,
                format_niltype(r.niltype.as_deref()),
                r.associative,
                r.unital,
                status
            ),
            json!({
                "id": id,
                "dim": e.dim(),
                "der": r.dim_der,
                "ann": r.dim_ann,
                "rad": r.dim_rad,
                "niltype": r.niltype,
                "associative": r.associative,
                "unital": r.unital,
                "passed": c.passed(),
            }),
        );
    }
    let list: Vec<(String, Algebra)> = catalog::jordan3_ids()
        .into_iter()
        .map(|id| {
            (
                id.to_string(),
                catalog::get(id).expect("listed id").algebra.clone(),
            )
        })
        .collect();
    let d = pairwise_distinct_audit(&list)?;
    all &= d.all_distinct();
    let collisions: Vec<String> = d
        .collisions
        .iter()
        .map(|(a, b)| format!("{a}={b}"))
        .collect();
    out.line(
        format!(
            "distinct fingerprints: {}/{}{}",
            d.fingerprints.len() - d.collisions.len(),
            d.fingerprints.len(),
            if collisions.is_empty() {
                String::new()
            } else {
                format!(" collisions {}", collisions.join(" "))
            }
        ),
        json!({"fingerprints": d.fingerprints.len(), "collisions": collisions}),
    );
    Ok((Status::from_check(all), out))
}

fn cocycle(arg: &str) -> CmdResult {
    let (name, a) = load(arg)?;
    let d = cohomology_dims(&a)?;
    let mut out = Output::default();
    out.line(
        format!("{name}: z2={} b2={} h2={}", d.z2, d.b2, d.h2),
        json!({"algebra": name, "z2": d.z2, "b2": d.b2, "h2": d.h2}),
    );
    Ok((Status::Ok, out))
}

fn search(source: &str, target: &str, degree: usize) -> CmdResult {
    let space = SearchSpace {
        degree_bound: degree,
        ..SearchSpace::default()
    };
    let found = derive_witness_search(source, target, &space)?;
    let mut out = Output::default();
    match &found {
        Some(w) => {
            let rows = w.g.rows();
            let text = jordan_core::algebra::jalg::write_poly_matrix(&rows);
            out.line(
                format!("{source} -> {target}: found\n{text}"),
                json!({"source": source, "target": target, "found": true,
                       "g": rows.iter().map(|r| r.iter().map(ToString::to_string).collect::<Vec<_>>()).collect::<Vec<_>>()}),
            );
        }
        None => out.line(
            format!("{source} -> {target}: no witness in the search space"),
            json!({"source": source, "target": target, "found": false}),
        ),
    }
    Ok((Status::from_check(found.is_some()), out))
}

fn parse_rational(s: &str) -> Result<Rational, Failure> {
    jordan_core::exactla::parse_rational(s)
        .ok_or_else(|| Failure::Usage(format!("bad rational `{s}`")))
}

fn classify(alpha: &str, beta: &str, gamma: &str) -> CmdResult {
    let (a, b, c) = (
        parse_rational(alpha)?,
        parse_rational(beta)?,
        parse_rational(gamma)?,
    );
    let r = catalog::classify_nilpotent_21(&a, &b, &c)?;
    let mut out = Output::default();
    let mut text = format!("N({alpha},{beta},{gamma}) ~ {}", r.id);
    let mut record = json!({"alpha": alpha, "beta": beta, "gamma": gamma, "class": r.id});
    let mut verified = true;
    match &r.witness {
        Some(w) => {
            verified = verify_iso(w)?;
            let names: Vec<String> = (1..=3).map(|i| format!("N{i}")).collect();
            let cols: Vec<String> = (0..3)
                .map(|j| jordan_core::algebra::format_vector(&w.matrix.col(j), &names))
                .collect();
            let _ = write!(text, "\nbasis: {}\nverified: {verified}", cols.join(", "));
            record["basis"] = json!(cols);
            record["verified"] = json!(verified);
        }
        None => {
            text.push_str("\nbasis: requires an irrational square root");
            record["basis"] = Value::Null;
        }
    }
    out.line(text, record);
    Ok((Status::from_check(verified), out))
}

fn export(dir: &Path) -> CmdResult {
    let io =
        |e: std::io::Error| Failure::Internal(format!("cannot write to {}: {e}", dir.display()));
    fs::create_dir_all(dir).map_err(io)?;
    let mut out = Output::default();
    for (name, text) in catalog::export_files() {
        fs::write(dir.join(&name), text).map_err(io)?;
        out.line(format!("wrote {name}"), json!({"file": name}));
    }
    fs::write(dir.join("MANIFEST"), catalog::manifest()).map_err(io)?;
    out.line("wrote MANIFEST", json!({"file": "MANIFEST"}));
    Ok((Status::Ok, out))
}

/// Rendering of an algebra in the catalog's file format, for callers that
/// want to echo inputs.
pub fn algebra_text(a: &Algebra) -> String {
    write_algebra(a)
}

/// The multiplication table with default basis names.
pub fn table_text(a: &Algebra) -> String {
    let names: Vec<String> = (1..=a.dim()).map(|i| format!("e{i}")).collect();
    multiplication_table(a, &names)
}
