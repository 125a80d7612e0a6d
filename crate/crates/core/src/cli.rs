//! Command-line front end: `certify`, `enumerate` and `expcheck`.
//!
//! Exit codes: 0 when every check passes, 1 when a check fails, 2 for usage,
//! parse and precondition errors.

use crate::algebra::{Algebra, Axiom, Element};
use crate::algebra_file::resolve_algebra;
use crate::autos::{
    find_idempotents, hurwitz_d, hurwitz_sigma, lemma_identities, nilpotent_derivations, order3_auto,
    sphere_candidates, standard_derivation, constant_p_space, unipotent_bridge, BridgeDirection,
};
use crate::constructors::{conjugate, split_zorn};
use crate::error::{Error, Result};
use crate::expmap::{exp_bridge, exp_bridge_pair, DEFAULT_TERMS, DEFAULT_TOLERANCE};
use crate::fields::Field;
use crate::groups::{auto_dim2, enumerate_sigma, enumerate_trig_small, DEFAULT_MAX_P};
use crate::linalg::Matrix;
use crate::report::Report;
use crate::symcomp::{
    conjugation_law, cubic_delta, cubic_identity, is_symmetric_composition, lambda_report, lambda_space,
    local_d_report, sigma_from_pair, theorem25_triples, verify_sigma, SigmaTriple,
};
use crate::triality::{
    derivation_pair, isometry_report, operator_identities, regularity_report, s4_relations_report, verify_local,
    verify_prop13, D3Rule, LocalTriple, Regularity, TrialityTriple,
};
use crate::zorn::{block_dim, zorn_operator_factorization, zorn_pi, zorn_rho, zorn_rho_group, zorn_s_triple, rho_laws};
use clap::{Parser, Subcommand, ValueEnum};
use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::sync::Arc;

#[derive(Parser, Debug)]
#[command(name = "trialkit", version, about = "Exact certification of triality identities")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Core,
    Symcomp,
    Triality,
    Autos,
    Zorn,
    All,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Target {
    Trig,
    Auto,
    Sigma,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Run a certification suite on a named algebra or an algebra file.
    Certify {
        algebra: String,
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
        /// Field for named algebras (Q, Q(sqrt3), F7, ...); pseudo-octonion defaults to Q(sqrt3).
        #[arg(long)]
        field: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// List Trig(A) for small algebras, Auto of the dim-2 algebra, or Σ-triples.
    Enumerate {
        #[arg(value_enum)]
        target: Target,
        algebra: String,
        field: String,
        #[arg(long, default_value_t = DEFAULT_MAX_P)]
        max_p: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Float check of the exponential of a local triple. TRIPLE is `zero`,
    /// `rot:a,b,c` (dim 2: λ_j times the rotation generator) or `d:i,j`
    /// (the pair d(e_i, e_j), 1-based, with the closed form compared).
    Expcheck {
        algebra: String,
        triple: String,
        #[arg(long)]
        field: Option<String>,
        #[arg(long, default_value_t = DEFAULT_TERMS)]
        terms: usize,
        #[arg(long, default_value_t = DEFAULT_TOLERANCE)]
        tol: f64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn field_for(algebra: &str, field: Option<&str>) -> Result<Field> {
    match field {
        Some(s) => Field::parse(s),
        None if algebra.starts_with("pseudo-octonion") => Field::quadratic(3),
        None => Ok(Field::Rationals),
    }
}

fn unit_kind(alg: &Algebra) -> Option<bool> {
    let e = alg.unit().ok()?;
    let unital = (0..alg.dim()).all(|i| {
        let x = alg.basis(i);
        alg.mul(e, &x) == x && alg.mul(&x, e) == x
    });
    Some(unital)
}

/// Axioms the algebra declares: involution, form, unit or para-unit.
pub fn core_report(alg: &Algebra) -> Report {
    let mut rep = Report::new(alg.name());
    if alg.has_involution() {
        rep.merge(alg.check_axioms(&[Axiom::Involutive]));
        let w = match conjugate(alg).and_then(|c| conjugate(&c)) {
            Ok(cc) => (cc != *alg).then(|| "structure constants differ".to_string()),
            Err(e) => Some(e.to_string()),
        };
        rep.record("axiom.conjugate-twice", w);
    }
    if alg.has_form() {
        rep.merge(alg.check_axioms(&[Axiom::Nondegenerate]));
        if alg.has_involution() {
            let j = alg.involution().expect("checked");
            let b = alg.form().expect("checked");
            rep.check("axiom.involution-isometric", &(&j.transpose() * b) * j == *b, || "JᵀBJ ≠ B".into());
        }
    }
    if let Ok(e) = alg.unit() {
        let e = e.clone();
        match unit_kind(alg) {
            Some(true) => rep.record("axiom.unit", None),
            _ => {
                let w = alg.has_involution().then(|| {
                    alg.find_pair(|i, _| {
                        let x = alg.basis(i);
                        let xb = alg.bar(&x);
                        alg.mul(&e, &x) == xb && alg.mul(&x, &e) == xb
                    })
                    .map(|(i, _)| format!("x = {}", alg.label(i)))
                });
                rep.record("axiom.para-unit", w.unwrap_or(Some("no involution".into())));
            }
        }
    }
    let b = alg.condition_b();
    let c = alg.condition_c();
    rep.note(format!("condition (B): {}, condition (C): {}", if b { "yes" } else { "no" }, if c { "yes" } else { "no" }));
    rep
}

/// Unital, alternative, and x conj(x) = ⟨x|x⟩e on basis vectors.
fn is_hurwitz(alg: &Algebra) -> bool {
    if unit_kind(alg) != Some(true) || !alg.has_form() || !alg.has_involution() || alg.alternative_witness().is_some() {
        return false;
    }
    let e = alg.unit().expect("unital");
    (0..alg.dim()).all(|i| {
        let x = alg.basis(i);
        alg.mul(&x, &alg.bar(&x)) == e.scale(&alg.norm(&x))
    })
}

fn is_anticommutative(alg: &Algebra) -> bool {
    alg.find_pair(|i, j| alg.mul_basis(i, j) == -&alg.mul_basis(j, i)).is_none()
}

/// Whether `all` runs the symcomp and triality suites: algebras with a form
/// that are not unital in dimension > 1, or anticommutative algebras without one.
fn symmetric_family(alg: &Algebra) -> bool {
    if alg.has_form() {
        alg.dim() == 1 || unit_kind(alg) != Some(true)
    } else {
        is_anticommutative(alg)
    }
}

fn find_sigma_triple(alg: &Arc<Algebra>) -> Option<SigmaTriple> {
    if let Ok(e) = alg.unit() {
        if let Ok(s) = verify_sigma(alg, e.clone(), e.clone(), e.clone()) {
            return Some(s);
        }
    }
    let n = alg.dim();
    (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).find_map(|(i, j)| sigma_from_pair(alg, &alg.basis(i), &alg.basis(j)).ok())
}

fn inapplicable(suite: &str, alg: &Algebra) -> Error {
    Error::SuiteInapplicable { suite: suite.into(), algebra: alg.name().into() }
}

pub fn symcomp_report(alg: &Arc<Algebra>) -> Result<Report> {
    if !alg.has_form() {
        return Err(inapplicable("symcomp", alg));
    }
    let mut rep = is_symmetric_composition(alg)?;
    if !rep.all_pass() {
        return Ok(rep);
    }
    match find_sigma_triple(alg) {
        Some(s) => {
            rep.note(format!(
                "Σ-triple: ({}, {}, {})",
                alg.show(s.a(1)),
                alg.show(s.a(2)),
                alg.show(s.a(3))
            ));
            let pair = theorem25_triples(&s)?;
            rep.merge(pair.report.clone());
            rep.merge(conjugation_law(&pair.sigma, &s)?);
            if let Some(v) = lambda_space(&s)?.into_iter().next() {
                rep.merge(lambda_report(&v)?);
                rep.merge(local_d_report(&v)?);
            }
        }
        None => rep.note("no Σ-triple among basis pairs"),
    }
    if alg.dim() >= 2 {
        rep.merge(cubic_identity(alg, &alg.basis(0), &alg.basis(1))?);
    }
    Ok(rep)
}

fn default_rule(alg: &Algebra) -> D3Rule {
    if alg.has_form() { D3Rule::SymmetricComposition } else { D3Rule::LieBracket }
}

pub fn triality_report(alg: &Arc<Algebra>) -> Result<Report> {
    let rule = default_rule(alg);
    let mut rep = regularity_report(alg, &rule)?;
    let klein = TrialityTriple::klein(alg, 1);
    rep.merge(s4_relations_report(&klein)?);
    if alg.has_form() {
        rep.merge(isometry_report(&klein)?);
    }
    let level = crate::triality::classify_regularity(alg, &rule)?;
    if level >= Regularity::Regular && alg.dim() >= 2 {
        let (x, y) = (alg.basis(0), alg.basis(1));
        let dp = derivation_pair(alg, &x, &y, &rule)?;
        let [d1, d2, d3] = dp.d.clone();
        let t: LocalTriple = verify_local(alg, d1, d2, d3)?;
        let xs: Vec<Element> = (0..alg.dim()).map(|i| alg.basis(i)).collect();
        rep.merge(operator_identities(alg, Some(&klein), Some(&t), &xs)?);
        if alg.condition_b() || alg.condition_c() {
            let pairs = [(x, y)];
            rep.merge(verify_prop13(alg, &rule, &klein, &t, Some(&pairs))?);
        }
    }
    Ok(rep)
}

pub fn autos_report(alg: &Arc<Algebra>) -> Result<Report> {
    let mut rep = Report::new(alg.name());
    let mut ran = false;
    if is_hurwitz(alg) {
        if let Some(a) = sphere_candidates(alg)?.into_iter().next() {
            rep.merge(hurwitz_sigma(alg, &a)?.report);
            if let Some(p) = constant_p_space(alg, &a)?.into_iter().next() {
                rep.merge(hurwitz_d(alg, &a, &p)?.report);
            }
        }
        if alg.dim() >= 4 && alg.field().characteristic() != 3 {
            rep.merge(standard_derivation(alg, &alg.basis(1), &alg.basis(2))?.report);
        }
        if alg.dim() >= 2 {
            rep.merge(lemma_identities(alg)?);
        }
        ran = true;
    } else if alg.unit().is_ok() && alg.has_form() && is_symmetric_composition(alg)?.all_pass() {
        match find_idempotents(alg, 1) {
            Ok(found) => {
                for idem in found {
                    rep.merge(order3_auto(&idem)?.report);
                }
            }
            Err(Error::NoSolutionInField(w)) => rep.note(format!("no idempotent found: {w}")),
            Err(e) => return Err(e),
        }
        ran = true;
    }
    if alg.dim() == 8 && split_zorn(alg.field()).is_ok_and(|z| z == **alg) {
        if let Some(d) = nilpotent_derivations(alg).into_iter().next() {
            rep.merge(unipotent_bridge(alg, &d, BridgeDirection::DerToAuto)?.report);
        }
        ran = true;
    }
    if !ran {
        return Err(inapplicable("autos", alg));
    }
    Ok(rep)
}

pub fn zorn_report(alg: &Arc<Algebra>) -> Result<Report> {
    block_dim(alg).map_err(|_| inapplicable("zorn", alg))?;
    let f = alg.field();
    let lambda = if f.characteristic() == 2 { f.one() } else { f.int(2) };
    let (_, mut rep) = zorn_rho(alg, &lambda)?;
    if f.characteristic() != 2 && f.characteristic() != 3 {
        rep.merge(rho_laws(alg, &lambda, &f.int(3))?);
    }
    rep.merge(zorn_operator_factorization(alg, &lambda)?);
    rep.merge(zorn_pi(alg, &lambda)?.1);
    rep.merge(zorn_s_triple(alg)?.1);
    if f.is_finite() {
        rep.merge(zorn_rho_group(alg)?);
    }
    Ok(rep)
}

/// Runs one suite; `all` runs every suite that applies and notes the rest.
pub fn certify(alg: &Arc<Algebra>, suite: Suite) -> Result<Report> {
    let run = |s: Suite| -> Result<Report> {
        match s {
            Suite::Core => Ok(core_report(alg)),
            Suite::Symcomp => symcomp_report(alg),
            Suite::Triality => triality_report(alg),
            Suite::Autos => autos_report(alg),
            Suite::Zorn => zorn_report(alg),
            Suite::All => unreachable!(),
        }
    };
    if suite != Suite::All {
        return run(suite);
    }
    let mut rep = Report::new(alg.name());
    for s in [Suite::Core, Suite::Symcomp, Suite::Triality, Suite::Autos, Suite::Zorn] {
        if matches!(s, Suite::Symcomp | Suite::Triality) && !symmetric_family(alg) {
            rep.note(format!("suite {} skipped: not applicable", format!("{s:?}").to_lowercase()));
            continue;
        }
        match run(s) {
            Ok(r) => rep.merge(r),
            Err(Error::SuiteInapplicable { suite, .. }) => rep.note(format!("suite {suite} skipped: not applicable")),
            Err(e) => return Err(e),
        }
    }
    Ok(rep)
}

fn render(rep: &Report, format: Format) -> String {
    match format {
        Format::Text => rep.to_text(),
        Format::Json => rep.to_json(),
    }
}

fn emit(text: &str, out: Option<&PathBuf>, stdout: &mut dyn Write) -> Result<()> {
    let mut text = text.to_string();
    if !text.ends_with('\n') {
        text.push('\n');
    }
    match out {
        Some(p) => std::fs::write(p, text)?,
        None => stdout.write_all(text.as_bytes())?,
    }
    Ok(())
}

fn parse_list(s: &str) -> Result<Vec<i64>> {
    s.split(',').map(|t| t.trim().parse::<i64>().map_err(|_| Error::Parse(format!("bad integer '{t}'")))).collect()
}

fn expcheck(alg: &Arc<Algebra>, triple: &str, terms: usize, tol: f64) -> Result<Report> {
    let f = alg.field();
    let exp = if triple == "zero" {
        exp_bridge(&LocalTriple::zero(alg), terms, tol)?
    } else if let Some(rest) = triple.strip_prefix("rot:") {
        let l = parse_list(rest)?;
        if l.len() != 3 || alg.dim() != 2 {
            return Err(Error::Parse("rot:a,b,c needs three integers and a 2-dimensional algebra".into()));
        }
        let rot = |c: i64| Matrix::from_ints(f, &[&[0, -c], &[c, 0]]);
        exp_bridge(&verify_local(alg, rot(l[0]), rot(l[1]), rot(l[2]))?, terms, tol)?
    } else if let Some(rest) = triple.strip_prefix("d:") {
        let ij = parse_list(rest)?;
        let n = alg.dim() as i64;
        if ij.len() != 2 || ij.iter().any(|&i| i < 1 || i > n) {
            return Err(Error::Parse(format!("d:i,j needs two basis indices in 1..={n}")));
        }
        let (x, y) = (alg.basis(ij[0] as usize - 1), alg.basis(ij[1] as usize - 1));
        let dp = derivation_pair(alg, &x, &y, &D3Rule::SymmetricComposition)?;
        let delta = cubic_delta(alg, &x, &y)?.to_f64().ok_or(Error::FieldNotEmbeddable(f))?;
        exp_bridge_pair(alg, &dp, delta, terms, tol)?
    } else {
        return Err(Error::Parse(format!("unknown triple '{triple}'")));
    };
    Ok(exp.to_report())
}

fn threads_from_env() {
    if let Some(n) = std::env::var("TRIALKIT_THREADS").ok().and_then(|s| s.trim().parse::<usize>().ok()) {
        if n > 0 {
            // fails harmlessly if the pool already exists
            let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
        }
    }
}

fn execute(cli: Cli, stdout: &mut dyn Write) -> Result<bool> {
    match cli.command {
        Command::Certify { algebra, suite, field, format, out } => {
            let f = field_for(&algebra, field.as_deref())?;
            let alg = Arc::new(resolve_algebra(&algebra, f)?);
            let mut rep = certify(&alg, suite)?;
            rep.demote_printed();
            emit(&render(&rep, format), out.as_ref(), stdout)?;
            Ok(rep.all_pass())
        }
        Command::Enumerate { target, algebra, field, max_p, format, out } => {
            let f = Field::parse(&field)?;
            let (text, ok) = match target {
                Target::Trig | Target::Auto => {
                    let g = if target == Target::Trig {
                        enumerate_trig_small(&Arc::new(resolve_algebra(&algebra, f)?), max_p)?
                    } else {
                        let alg = resolve_algebra(&algebra, f)?;
                        if alg.fingerprint() != crate::constructors::para2(f).fingerprint() {
                            return Err(inapplicable("auto", &alg));
                        }
                        auto_dim2(f)?
                    };
                    let ok = g.closed && g.report.all_pass();
                    (if format == Format::Json { g.to_json() } else { g.to_text() }, ok)
                }
                Target::Sigma => {
                    let alg = Arc::new(resolve_algebra(&algebra, f)?);
                    let found = enumerate_sigma(&alg, max_p)?;
                    let rows: Vec<Vec<String>> =
                        found.iter().map(|s| s.elements().iter().map(|a| alg.show(a)).collect()).collect();
                    let text = if format == Format::Json {
                        serde_json::to_string_pretty(&serde_json::json!({
                            "algebra": alg.name(),
                            "field": f.to_string(),
                            "count": rows.len(),
                            "triples": rows,
                        }))?
                    } else {
                        let mut s = format!("Σ-triples of {} over {f}: {}\n", alg.name(), rows.len());
                        for r in &rows {
                            s.push_str(&format!("  ({})\n", r.join(", ")));
                        }
                        s
                    };
                    (text, true)
                }
            };
            emit(&text, out.as_ref(), stdout)?;
            Ok(ok)
        }
        Command::Expcheck { algebra, triple, field, terms, tol, format, out } => {
            let f = field_for(&algebra, field.as_deref())?;
            let alg = Arc::new(resolve_algebra(&algebra, f)?);
            let rep = expcheck(&alg, &triple, terms, tol)?;
            emit(&render(&rep, format), out.as_ref(), stdout)?;
            Ok(rep.all_pass())
        }
    }
}

/// Parses `args` (including the program name), runs the command and returns
/// the exit code. Output goes to `stdout` unless `--out` is given.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    threads_from_env();
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(stderr, "{}", e.render());
                return 2;
            }
            let _ = write!(stdout, "{}", e.render());
            return 0;
        }
    };
    match execute(cli, stdout) {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            2
        }
    }
}
