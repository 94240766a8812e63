//! The `superlie` command-line front end.
//!
//! Every subcommand runs exact checks and reports them either as text or as
//! line-delimited JSON records with the fields `entry`, `check`,
//! `residual_nonzero_count` and `status`.  The exit status is 0 iff every
//! requested check passed, 1 if some check failed and 2 for usage or input
//! errors.
//!
//! Algebras are named by catalog id (`B`, `C1_p`, `I(1,2)`, ...) or by the
//! path of a definition file.  Duals (`--dual`, `--d1`, ...) are given as a
//! catalog entry id or dual label, a catalog algebra id, a definition file,
//! or inline bracket statements over the primal's generator names, e.g.
//! `--dual "{X2,X2} = i*X1;"`.  Parameters are fixed with `--param p=1/2`.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::bialgebra::{build_double, cocycle_residual, matrix_identity_crosscheck, pair_residuals, DualStructure};
use crate::catalog::example::reproduce_worked_example;
use crate::catalog::verify::{verify_automorphisms, verify_catalog, verify_loci, CheckOutcome};
use crate::catalog::Catalog;
use crate::error::{Error, Result};
use crate::grading::GradedDims;
use crate::morphism::{bialgebra_equivalent, search_isomorphism, verify_automorphism, verify_isomorphism, AutFamily, SearchMask};
use crate::params::{check_assignment, to_point, Assignment};
use crate::parser::{eval_matrix, format_algebra, parse_algebras, parse_expr_matrix, parse_signed_rational};
use crate::poly::MultiPoly;
use crate::scalar::GScalar;
use crate::solver::{degenerations, solve_duals};
use crate::superalgebra::LieSuperAlgebra;
use crate::supermatrix::SuperMatrix;

/// Output format.
#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    /// Human-readable text.
    Text,
    /// One JSON record per check.
    Records,
}

/// Exact computations with Lie superalgebras and Lie super-bialgebras.
#[derive(Debug, Parser)]
#[command(name = "superlie", version, about)]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    /// Directory with `algebras.alg` and `manifest.toml` replacing the
    /// built-in catalog.
    #[arg(long, global = true, value_name = "DIR")]
    pub catalog_dir: Option<PathBuf>,
    /// Subcommand.
    #[command(subcommand)]
    pub command: Command,
}

/// Parameter values shared by several subcommands.
#[derive(Debug, Args, Clone, Default)]
pub struct ParamArgs {
    /// Fix a parameter, e.g. `--param p=1/2` (repeatable).
    #[arg(long = "param", value_name = "NAME=VALUE")]
    pub params: Vec<String>,
}

/// Subcommands.
#[derive(Debug, Subcommand)]
pub enum Command {
    /// Validate an algebra and check its super Jacobi identity.
    Check {
        /// Catalog id or definition file (every algebra in it is checked).
        algebra: String,
        #[command(flatten)]
        params: ParamArgs,
    },
    /// Solve for every compatible dual structure.
    Duals {
        /// Catalog id or definition file.
        algebra: String,
        #[command(flatten)]
        params: ParamArgs,
    },
    /// Check a pair (g, g̃): both Jacobi identities, the mixed identity, the
    /// double and the pairing.
    Pair {
        /// The primal algebra.
        algebra: String,
        /// The dual structure.
        #[arg(long)]
        dual: String,
        #[command(flatten)]
        params: ParamArgs,
    },
    /// Build the Drinfel'd double of a pair.
    Double {
        /// The primal algebra.
        algebra: String,
        /// The dual structure.
        #[arg(long)]
        dual: String,
        /// Print the double in the definition language.
        #[arg(long)]
        emit: bool,
        #[command(flatten)]
        params: ParamArgs,
    },
    /// Verify an automorphism, or the catalog family of automorphisms.
    Aut {
        /// The algebra.
        algebra: String,
        /// Matrix literal `[a, b; c, d]`.
        #[arg(long, conflicts_with = "family_verify", required_unless_present = "family_verify")]
        matrix: Option<String>,
        /// Verify the catalog family symbolically in its parameters.
        #[arg(long)]
        family_verify: bool,
        #[command(flatten)]
        params: ParamArgs,
    },
    /// Verify an isomorphism `T(src, C) = dst`, or search for one.
    Iso {
        /// Source algebra.
        src: String,
        /// Target algebra.
        dst: String,
        /// Matrix literal.
        #[arg(long, conflicts_with = "search", required_unless_present = "search")]
        matrix: Option<String>,
        /// Bounded search over integer entries (heuristic).
        #[arg(long)]
        search: bool,
        /// Entry bound for `--search`.
        #[arg(long, default_value_t = 2)]
        bound: u32,
        /// Let `--search` vary the odd blocks too.
        #[arg(long)]
        full: bool,
        /// Also require `C^{-st}` to be a transformation matrix.
        #[arg(long)]
        dual_side: bool,
        #[command(flatten)]
        params: ParamArgs,
    },
    /// Decide whether two bialgebra structures on one algebra are equivalent.
    Equiv {
        /// The primal algebra.
        algebra: String,
        /// Reference algebra the witnesses start from.
        #[arg(long)]
        reference: String,
        /// First dual.
        #[arg(long)]
        d1: String,
        /// Second dual.
        #[arg(long)]
        d2: String,
        /// Witness carrying the reference onto `d1`.
        #[arg(long)]
        b1: String,
        /// Witness carrying the reference onto `d2`.
        #[arg(long)]
        b2: String,
        /// Automorphism family (default: the catalog family of the algebra).
        #[arg(long)]
        family: Option<String>,
        /// Non-vanishing conditions of `--family` (repeatable).
        #[arg(long)]
        nonzero: Vec<String>,
        #[command(flatten)]
        params: ParamArgs,
    },
    /// Catalog operations.
    Catalog {
        /// Catalog subcommand.
        #[command(subcommand)]
        action: CatalogCommand,
    },
    /// Superdeterminant of a matrix.
    Sdet {
        /// Matrix literal.
        matrix: String,
        /// Graded dimensions `m,n` (default: `1,1` for 2×2 matrices).
        #[arg(long)]
        dims: Option<String>,
    },
}

/// Catalog subcommands.
#[derive(Debug, Subcommand)]
pub enum CatalogCommand {
    /// Certify the bialgebra entries (and optionally loci, automorphism
    /// families and the worked example).
    Verify {
        /// Restrict to groups: 4 = dimension (1|1), 5 = (2|1), 6 = (1|2).
        #[arg(long = "table", value_parser = clap::value_parser!(u8).range(4..=6))]
        tables: Vec<u8>,
        /// TOML file with a `[sampling]` table overriding sampling sets.
        #[arg(long)]
        samples: Option<PathBuf>,
        /// Also verify the automorphism families.
        #[arg(long)]
        automorphisms: bool,
        /// Also verify solution loci and their isomorphism witnesses.
        #[arg(long)]
        loci: bool,
        /// Also replay the worked classification of the duals of C4.
        #[arg(long)]
        example: bool,
        /// Shorthand for `--automorphisms --loci --example`.
        #[arg(long)]
        all: bool,
    },
    /// List algebras and entries.
    List,
}

/// Outcome of a command: exit status and captured output.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CommandOutput {
    /// Exit status.
    pub status: i32,
    /// Standard output.
    pub stdout: String,
    /// Standard error.
    pub stderr: String,
}

#[derive(Serialize)]
struct Record<'a> {
    entry: &'a str,
    check: &'a str,
    residual_nonzero_count: usize,
    status: &'static str,
}

/// Collects check outcomes in either output format.
struct Reporter {
    format: Format,
    out: String,
    failed: bool,
}

impl Reporter {
    fn new(format: Format) -> Self {
        Reporter { format, out: String::new(), failed: false }
    }

    fn check(&mut self, entry: &str, check: &str, count: usize, ok: bool, detail: Option<&str>) {
        self.failed |= !ok;
        let status = if ok { "pass" } else { "fail" };
        match self.format {
            Format::Records => {
                let rec = Record { entry, check, residual_nonzero_count: count, status };
                self.out.push_str(&serde_json::to_string(&rec).expect("plain record"));
                self.out.push('\n');
            }
            Format::Text => {
                let _ = write!(self.out, "{entry}: {check} {status}");
                if !ok {
                    let _ = write!(self.out, " ({count} nonzero)");
                }
                if let Some(d) = detail {
                    let _ = write!(self.out, " — {d}");
                }
                self.out.push('\n');
            }
        }
    }

    fn outcome(&mut self, entry: &str, c: &CheckOutcome) {
        self.check(entry, &c.check, c.residual_nonzero_count, c.ok, c.detail.as_deref());
    }

    /// Free text, shown only in text mode.
    fn text(&mut self, s: &str) {
        if self.format == Format::Text {
            self.out.push_str(s);
            if !s.ends_with('\n') {
                self.out.push('\n');
            }
        }
    }
}

/// Parses arguments and runs the command, capturing output.
pub fn run_command<I, T>(argv: I) -> CommandOutput
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let status = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if status == 0 {
                CommandOutput { status, stdout: text, stderr: String::new() }
            } else {
                CommandOutput { status, stdout: String::new(), stderr: text }
            };
        }
    };
    run(&cli)
}

/// Runs a parsed command.
pub fn run(cli: &Cli) -> CommandOutput {
    let mut rep = Reporter::new(cli.format);
    match dispatch(cli, &mut rep) {
        Ok(()) => CommandOutput { status: i32::from(rep.failed), stdout: rep.out, stderr: String::new() },
        Err(e) => CommandOutput { status: 2, stdout: rep.out, stderr: format!("error: {e}\n") },
    }
}

fn load_catalog(cli: &Cli) -> Result<Catalog> {
    match &cli.catalog_dir {
        Some(d) => Catalog::from_dir(d),
        None => Catalog::builtin(),
    }
}

fn parse_params(p: &ParamArgs) -> Result<Assignment> {
    p.params
        .iter()
        .map(|kv| {
            let (k, v) = kv
                .split_once('=')
                .ok_or_else(|| Error::Catalog(format!("`--param {kv}`: expected NAME=VALUE")))?;
            Ok((k.trim().to_string(), parse_signed_rational(v.trim())?))
        })
        .collect()
}

/// Substitutes the given parameter values (checking their ranges) and
/// keeps the remaining parameters symbolic.
fn apply_params(g: LieSuperAlgebra<MultiPoly>, a: &Assignment) -> Result<LieSuperAlgebra<MultiPoly>> {
    let given: Vec<_> = g.params().iter().filter(|p| a.contains_key(&p.name)).cloned().collect();
    check_assignment(&given, a)?;
    let point = to_point(a);
    let rest: Vec<_> = g.params().iter().filter(|p| !a.contains_key(&p.name)).cloned().collect();
    Ok(g.map(|c| Ok(c.substitute(&point)))?.with_params(rest))
}

fn read_algebras(cat: &Catalog, spec: &str) -> Result<Vec<LieSuperAlgebra<MultiPoly>>> {
    let path = Path::new(spec);
    if path.is_file() {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Catalog(format!("{spec}: {e}")))?;
        return parse_algebras(&text);
    }
    Ok(vec![cat.algebra(spec)?])
}

fn read_algebra(cat: &Catalog, spec: &str) -> Result<LieSuperAlgebra<MultiPoly>> {
    let mut v = read_algebras(cat, spec)?;
    if v.len() != 1 {
        return Err(Error::Catalog(format!("{spec}: expected exactly one algebra, found {}", v.len())));
    }
    Ok(v.remove(0))
}

/// Resolves a dual spec against the primal `g` (see the module docs).
fn read_dual(cat: &Catalog, g: &LieSuperAlgebra<MultiPoly>, spec: &str) -> Result<DualStructure<MultiPoly>> {
    let entry = cat
        .entries()
        .iter()
        .find(|e| e.id == spec || (e.primal == g.name() && e.dual_label == spec))
        .or_else(|| cat.entries().iter().find(|e| e.dual_label == spec));
    let alg = if let Some(e) = entry {
        cat.dual_of(e)?.into_algebra()
    } else if let Ok(a) = read_algebra(cat, spec) {
        a
    } else {
        let d = g.dims();
        let gens = g.generators();
        let text =
            format!("algebra dual {{ bosons: {}; fermions: {}; {spec} }}", gens[..d.m].join(" "), gens[d.m..].join(" "));
        crate::parser::parse_algebra(&text)?
    };
    if alg.dims() != g.dims() {
        return Err(Error::DimensionMismatch(format!("dual `{spec}` has dimension {}, algebra has {}", alg.dims(), g.dims())));
    }
    Ok(DualStructure::from_algebra(alg))
}

fn apply_dual_params(d: DualStructure<MultiPoly>, a: &Assignment) -> Result<DualStructure<MultiPoly>> {
    Ok(DualStructure::from_algebra(apply_params(d.into_algebra(), a)?))
}

fn concrete(g: &LieSuperAlgebra<MultiPoly>) -> Result<LieSuperAlgebra<GScalar>> {
    g.to_concrete().ok_or_else(|| {
        let names: Vec<&str> = g.params().iter().map(|p| p.name.as_str()).collect();
        Error::MissingParameter(format!("{} (fix with --param)", names.join(", ")))
    })
}

fn read_matrix(spec: &str, dims: GradedDims, a: &Assignment) -> Result<SuperMatrix<GScalar>> {
    let rows = eval_matrix(&parse_expr_matrix(spec)?, &to_point(a))?;
    SuperMatrix::new(dims, rows)
}

fn parse_dims(spec: Option<&str>, n: usize) -> Result<GradedDims> {
    match spec {
        Some(s) => {
            let (m, k) = s
                .split_once(',')
                .ok_or_else(|| Error::DimensionMismatch(format!("`--dims {s}`: expected m,n")))?;
            let parse = |t: &str| t.trim().parse::<usize>().map_err(|_| Error::DimensionMismatch(format!("`--dims {s}`")));
            GradedDims::new(parse(m)?, parse(k)?)
        }
        None if n == 2 => GradedDims::new(1, 1),
        None => Err(Error::DimensionMismatch(format!("a {n}×{n} matrix needs --dims m,n"))),
    }
}

fn dispatch(cli: &Cli, rep: &mut Reporter) -> Result<()> {
    let cat = load_catalog(cli)?;
    match &cli.command {
        Command::Check { algebra, params } => {
            let a = parse_params(params)?;
            for g in read_algebras(&cat, algebra)? {
                let g = apply_params(g, &a)?;
                let id = g.name().to_string();
                let v = g.validate_structure();
                let detail: Vec<String> = v.violations.iter().map(ToString::to_string).collect();
                rep.check(&id, "structure", v.violations.len(), v.is_valid(), (!v.is_valid()).then(|| detail.join("; ")).as_deref());
                let r = g.super_jacobi_residual();
                let text = r.to_string().trim().replace('\n', "; ");
                rep.check(&id, "super_jacobi", r.nonzero_count(), r.is_zero(), (!r.is_zero()).then_some(text.as_str()));
            }
        }
        Command::Duals { algebra, params } => {
            let g = apply_params(read_algebra(&cat, algebra)?, &parse_params(params)?)?;
            let fam = solve_duals(&g)?;
            rep.text(&fam.to_string());
            for (name, v) in degenerations(&fam) {
                rep.text(&format!("  primal degeneration at {name} = {}", crate::scalar::format_rational(&v)));
            }
            // Self-check: the general family element satisfies the mixed
            // identity identically.
            let r = crate::bialgebra::mixed_jacobi_residual(&g, &fam.general()?)?;
            rep.check(g.name(), "family_mixed_jacobi", r.nonzero_count(), r.is_zero(), None);
        }
        Command::Pair { algebra, dual, params } => {
            let a = parse_params(params)?;
            let g = apply_params(read_algebra(&cat, algebra)?, &a)?;
            let d = apply_dual_params(read_dual(&cat, &g, dual)?, &a)?;
            let id = format!("{}:{}", g.name(), d.name());
            for (name, r) in pair_residuals(&g, &d)?.named() {
                let text = r.to_string().trim().replace('\n', "; ");
                rep.check(&id, name, r.nonzero_count(), r.is_zero(), (!r.is_zero()).then_some(text.as_str()));
            }
            let c = cocycle_residual(&g, &d)?;
            rep.check(&id, "cocycle", c.nonzero_count(), c.is_zero(), None);
            let x = matrix_identity_crosscheck(&g, &d)?;
            rep.check(&id, "matrix_form_agrees", usize::from(!x.agrees()), x.agrees(), None);
        }
        Command::Double { algebra, dual, emit, params } => {
            let a = parse_params(params)?;
            let g = apply_params(read_algebra(&cat, algebra)?, &a)?;
            let d = apply_dual_params(read_dual(&cat, &g, dual)?, &a)?;
            let dbl = build_double(&g, &d)?;
            let id = format!("D({}, {})", g.name(), d.name());
            if *emit {
                let gens = g.generators();
                let n = g.dims().total();
                let mut names = vec![String::new(); 2 * n];
                for (i, gen) in gens.iter().enumerate() {
                    names[dbl.x_position(i)] = gen.clone();
                    names[dbl.xt_position(i)] = match gen.strip_prefix('X') {
                        Some(rest) => format!("Xt{rest}"),
                        None => format!("t{gen}"),
                    };
                }
                let alg = dbl.algebra().clone().with_generators(names)?.with_name(&id);
                rep.text(&format!("# pairing: <Xt^i, X_j> = delta^i_j; both halves isotropic\n{}", format_algebra(&alg)));
            }
            let r = dbl.algebra().super_jacobi_residual();
            rep.check(&id, "double_jacobi", r.nonzero_count(), r.is_zero(), None);
            let p = crate::bialgebra::pairing_ad_invariance(&dbl);
            rep.check(&id, "pairing_ad_invariance", p.nonzero_count(), p.is_zero(), None);
            rep.check(&id, "pairing_canonical", usize::from(!dbl.pairing_is_canonical()), dbl.pairing_is_canonical(), None);
        }
        Command::Aut { algebra, matrix, family_verify, params } => {
            let a = parse_params(params)?;
            let g = apply_params(read_algebra(&cat, algebra)?, &a)?;
            if *family_verify {
                let fam = cat.automorphisms(g.name()).ok_or_else(|| Error::UnknownId(format!("automorphisms of {}", g.name())))?;
                rep.text(&format!("{}: {fam}", g.name()));
                if g.params().is_empty() {
                    let r = fam.verify_symbolic(&concrete(&g)?)?;
                    rep.check(g.name(), "automorphism_family", r.nonzero_count(), r.is_zero(), None);
                } else {
                    let all = verify_automorphisms(&cat)?;
                    let key = format!("automorphisms of {}", g.name());
                    for c in all.iter().filter(|c| c.check == key) {
                        rep.outcome(g.name(), c);
                    }
                }
            } else {
                let gc = concrete(&g)?;
                let m = read_matrix(matrix.as_deref().unwrap_or_default(), g.dims(), &a)?;
                let r = verify_automorphism(&gc, &m)?;
                report_morphism(rep, g.name(), "automorphism", &r);
            }
        }
        Command::Iso { src, dst, matrix, search, bound, full, dual_side, params } => {
            let a = parse_params(params)?;
            let s = concrete(&apply_params(read_algebra(&cat, src)?, &a)?)?;
            let t = concrete(&apply_params(read_algebra(&cat, dst)?, &a)?)?;
            let id = format!("{} -> {}", s.name(), t.name());
            if *search {
                let mask = if *full { SearchMask::full(s.dims()) } else { SearchMask::even(s.dims()) };
                match search_isomorphism(&s, &t, *bound, &mask, *dual_side)? {
                    Some(m) => {
                        rep.text(&format!("found (heuristic search): {m}"));
                        rep.check(&id, "isomorphism_search", 0, true, None);
                    }
                    None => rep.check(&id, "isomorphism_search", 1, false, Some("no witness within the bound")),
                }
            } else {
                let m = read_matrix(matrix.as_deref().unwrap_or_default(), s.dims(), &a)?;
                let r = verify_isomorphism(&s, &t, &m, *dual_side)?;
                report_morphism(rep, &id, "isomorphism", &r);
            }
        }
        Command::Equiv { algebra, reference, d1, d2, b1, b2, family, nonzero, params } => {
            let a = parse_params(params)?;
            let g = apply_params(read_algebra(&cat, algebra)?, &a)?;
            let dims = g.dims();
            let conc = |d: DualStructure<MultiPoly>| -> Result<DualStructure<GScalar>> {
                Ok(DualStructure::from_algebra(concrete(&apply_params(d.into_algebra(), &a)?)?))
            };
            let r = conc(read_dual(&cat, &g, reference)?)?;
            let x1 = conc(read_dual(&cat, &g, d1)?)?;
            let x2 = conc(read_dual(&cat, &g, d2)?)?;
            let m1 = read_matrix(b1, dims, &a)?;
            let m2 = read_matrix(b2, dims, &a)?;
            let fam = match family {
                Some(f) => {
                    let nz: Vec<&str> = nonzero.iter().map(String::as_str).collect();
                    AutFamily::parse(dims, f, &nz)?
                }
                None => cat
                    .automorphisms(g.name())
                    .cloned()
                    .ok_or_else(|| Error::UnknownId(format!("automorphisms of {} (give --family)", g.name())))?,
            };
            let rep_e = bialgebra_equivalent(&r, &x1, &x2, &m1, &m2, &fam)?;
            let id = format!("{}: {} ~ {}", g.name(), d1, d2);
            rep.check(&id, "witness_b1", usize::from(!rep_e.witness1_ok), rep_e.witness1_ok, None);
            rep.check(&id, "witness_b2", usize::from(!rep_e.witness2_ok), rep_e.witness2_ok, None);
            rep.text(&format!("candidate automorphism: {}", rep_e.candidate));
            let eq = rep_e.equivalent();
            rep.check(&id, "equivalent", usize::from(!eq), eq, Some(if eq { "equivalent" } else { "not equivalent" }));
        }
        Command::Catalog { action: CatalogCommand::List } => {
            for g in cat.algebras() {
                rep.text(&format!("algebra {:<14} {} {}", g.name(), g.dims(), crate::parser::format_statements(g)));
            }
            for e in cat.entries() {
                rep.text(&format!("entry   [{}] {}", e.group, e.id));
            }
            for l in cat.loci() {
                rep.text(&format!("locus   {:<16} {}", l.id, l.status));
            }
        }
        Command::Catalog { action: CatalogCommand::Verify { tables, samples, automorphisms, loci, example, all } } => {
            let cat = match samples {
                Some(p) => {
                    let text = std::fs::read_to_string(p).map_err(|e| Error::Catalog(format!("{}: {e}", p.display())))?;
                    cat.with_sampling_overrides(&text)?
                }
                None => cat,
            };
            let groups = (!tables.is_empty()).then_some(tables.as_slice());
            let report = verify_catalog(&cat, groups)?;
            if rep.format == Format::Records {
                for e in &report.entries {
                    for c in &e.checks {
                        rep.outcome(&e.id, c);
                    }
                }
            } else {
                rep.failed |= !report.all_passed();
                rep.text(&report.to_string());
            }
            if *automorphisms || *all {
                for c in verify_automorphisms(&cat)? {
                    rep.outcome("automorphisms", &c);
                }
            }
            if *loci || *all {
                for l in verify_loci(&cat)? {
                    for c in &l.checks {
                        rep.outcome(&format!("locus {}", l.id), c);
                    }
                }
            }
            if *example || *all {
                let r = reproduce_worked_example(&cat)?;
                rep.text(&r.to_string());
                rep.check("worked example C4", "reproduced", usize::from(!r.ok()), r.ok(), None);
            }
        }
        Command::Sdet { matrix, dims } => {
            let rows = eval_matrix(&parse_expr_matrix(matrix)?, &BTreeMap::new())?;
            let d = parse_dims(dims.as_deref(), rows.len())?;
            let m = SuperMatrix::new(d, rows)?;
            match m.sdet() {
                Ok(v) => {
                    rep.text(&format!("sdet = {v}"));
                    rep.check("sdet", "defined", 0, true, None);
                }
                Err(e) => rep.check("sdet", "defined", 1, false, Some(&e.to_string())),
            }
        }
    }
    Ok(())
}

fn report_morphism(rep: &mut Reporter, id: &str, what: &str, r: &crate::morphism::MorphismReport) {
    let adm = r.admissible.ok && r.dual_admissible.as_ref().is_none_or(|c| c.ok);
    let fails = r.failures().join("; ");
    let adm_detail = (!adm).then_some(fails.as_str());
    rep.check(id, "transformation_matrix", usize::from(!adm), adm, adm_detail);
    rep.check(id, what, r.residual.nonzero_count(), r.residual.is_zero(), None);
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(args: &[&str]) -> CommandOutput {
        run_command(std::iter::once("superlie").chain(args.iter().copied()))
    }

    #[test]
    fn check_abelian_passes() {
        let o = run(&["check", "I(1,1)"]);
        assert_eq!(o.status, 0, "{o:?}");
        assert!(o.stdout.contains("super_jacobi pass"));
    }

    #[test]
    fn records_are_json_lines() {
        let o = run(&["--format", "records", "pair", "B", "--dual", "(A11+A)"]);
        assert_eq!(o.status, 0, "{o:?}");
        for line in o.stdout.lines() {
            let v: serde_json::Value = serde_json::from_str(line).unwrap();
            assert_eq!(v["status"], "pass");
            assert!(v.get("residual_nonzero_count").is_some());
        }
    }

    #[test]
    fn failing_check_exits_one_and_bad_input_two() {
        let o = run(&["pair", "B", "--dual", "{X2,X2} = i*X1; [X1,X2] = X2;"]);
        assert_eq!(o.status, 1, "{o:?}");
        assert_eq!(run(&["check", "NoSuchAlgebra"]).status, 2);
        assert_eq!(run(&["frobnicate"]).status, 2);
    }

    #[test]
    fn sdet_of_a_matrix() {
        let o = run(&["sdet", "[2, 0; 0, 4]"]);
        assert_eq!(o.status, 0);
        assert!(o.stdout.contains("sdet = 1/2"), "{}", o.stdout);
    }

    #[test]
    fn parameters_are_range_checked() {
        assert_eq!(run(&["check", "C1_p", "--param", "p=1/2"]).status, 0);
        assert_eq!(run(&["check", "C1_p", "--param", "p=0"]).status, 2);
    }
}
