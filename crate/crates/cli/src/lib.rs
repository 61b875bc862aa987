//! Command implementations for the `jjalg` binary.

pub mod report;

use std::fs;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use jjalg::algebra::Algebra;
use jjalg::catalog;
use jjalg::error::{Error, Result};
use jjalg::field::Scalar;
use jjalg::fileformat::{export_algebra, export_matrix, parse_algebra, parse_matrix, render_combination};
use jjalg::fingerprint::{fingerprint, Fingerprint};
use jjalg::groebner::{buchberger, maximal_ideal_algebra, parse_ideal, quotient_algebra, standard_monomials, VarList};
use jjalg::identity::{is_jordan, is_power_associative, jacobi_witness};
use jjalg::morphism::{check_isomorphism, LinearMap};
use jjalg::normalize5::normalize_dim5_seeded;
use jjalg::powers::{is_nilpotent, is_solvable, nilindex_seeded, DEFAULT_SEED};

use report::{Report, EXIT_CHECK_FAILED, EXIT_OK};

#[derive(Debug, Parser)]
#[command(
    name = "jjalg",
    about = "Exact-arithmetic checks for structure-constant algebras",
    version
)]
pub struct Cli {
    /// Report format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Seed for the witness searches (fixed default keeps reports
    /// deterministic).
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    pub seed: u64,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Machine,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run the identity and nilpotency checks on an algebra file.
    Check {
        file: PathBuf,
        /// Reinterpret the algebra over this field: q or fp:<p>.
        #[arg(long)]
        field: Option<String>,
    },
    /// Print the extension-stable invariant fingerprint.
    Invariants {
        file: PathBuf,
        #[arg(long)]
        field: Option<String>,
    },
    /// Compare two algebras by fingerprint.
    Compare {
        file_a: PathBuf,
        file_b: PathBuf,
        #[arg(long)]
        field: Option<String>,
    },
    /// Groebner basis, standard monomials and unit-stripped quotient algebra
    /// of a polynomial ideal.
    Quotient {
        ideal: String,
        /// Comma-separated variables in precedence order; inferred if
        /// omitted.
        #[arg(long)]
        vars: Option<String>,
        /// Monomial order (only lex is supported).
        #[arg(long, default_value = "lex")]
        order: String,
        /// Write the resulting algebra file here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Registry of the classification tables.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
    /// Check a matrix file as an isomorphism between two algebra files.
    IsoVerify {
        matrix: PathBuf,
        file_a: PathBuf,
        file_b: PathBuf,
    },
    /// Normalize a non-associative 5-dimensional input to the normal form.
    Normalize5 {
        file: PathBuf,
        /// Write the normalized algebra file here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Subcommand)]
pub enum CatalogAction {
    /// List entries.
    List {
        #[arg(long)]
        dim: Option<usize>,
    },
    /// Recompute every asserted property and report mismatches.
    Verify {
        #[arg(long)]
        dim: Option<usize>,
    },
    /// Emit one entry in the algebra file format.
    Export {
        name: String,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        field: Option<String>,
    },
}

fn parse_field_flag(flag: &Option<String>) -> Result<Option<u64>> {
    match flag.as_deref() {
        None | Some("q") => Ok(None),
        Some(s) => {
            let p = s
                .strip_prefix("fp:")
                .and_then(|p| p.parse::<u64>().ok())
                .ok_or_else(|| Error::Invalid(format!("--field must be q or fp:<p>, got '{s}'")))?;
            Ok(Some(p))
        }
    }
}

fn load_algebra(path: &Path, field_flag: &Option<String>) -> Result<Algebra> {
    let text = fs::read_to_string(path)
        .map_err(|e| Error::Invalid(format!("cannot read {}: {e}", path.display())))?;
    let a = parse_algebra(&text)?;
    match parse_field_flag(field_flag)? {
        None => Ok(a),
        Some(p) => a.reduce_mod(p),
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn triple(w: (usize, usize, usize)) -> String {
    format!("(e{}, e{}, e{})", w.0 + 1, w.1 + 1, w.2 + 1)
}

fn substitution(names: &[&str], w: &[(usize, Vec<usize>)]) -> String {
    w.iter()
        .map(|(var, basis)| {
            let vals: Vec<String> = basis.iter().map(|b| format!("e{}", b + 1)).collect();
            format!("{} <- ({})", names.get(*var).unwrap_or(&"?"), vals.join(", "))
        })
        .collect::<Vec<_>>()
        .join("; ")
}

fn cmd_check(file: &Path, field: &Option<String>, seed: u64) -> Result<Report> {
    let a = load_algebra(file, field)?;
    let mut r = Report::new("check", seed);
    r.push("dimension", a.dim().to_string());
    r.push("characteristic", a.field().characteristic().to_string());

    let comm = a.commutativity_witness();
    match comm {
        None => r.push("commutative", "yes"),
        Some((i, j)) => r.push_with_witness(
            "commutative",
            "no",
            format!("(e{}, e{})", i + 1, j + 1),
        ),
    }
    let jac = jacobi_witness(&a);
    match jac {
        None => r.push("jacobi", "yes"),
        Some(w) => r.push_with_witness("jacobi", "no", triple(w)),
    }
    match is_jordan(&a) {
        Ok(res) if res.holds => r.push("jordan", "yes"),
        Ok(res) => r.push_with_witness(
            "jordan",
            "no",
            substitution(&["x", "y"], &res.witness.unwrap_or_default()),
        ),
        Err(Error::CharacteristicTooSmall { p, degree }) => r.push(
            "jordan",
            format!("not checkable (characteristic {p} < degree {degree})"),
        ),
        Err(e) => return Err(e),
    }
    match a.associator_witness() {
        None => r.push("associative", "yes"),
        Some(w) => r.push_with_witness("associative", "no", triple(w)),
    }
    match is_power_associative(&a) {
        Ok(res) if res.holds => r.push(
            "power-associative",
            format!("yes (verified for degrees <= {})", res.degree_bound),
        ),
        Ok(res) => {
            let (i, j, w) = res.failure.unwrap();
            r.push_with_witness(
                "power-associative",
                format!("no (x^{i}*x^{j} != x^{})", i + j),
                substitution(&["x"], &w),
            );
        }
        Err(Error::CharacteristicTooSmall { p, degree }) => r.push(
            "power-associative",
            format!("not checkable (characteristic {p} < degree {degree})"),
        ),
        Err(e) => return Err(e),
    }
    let (nilp, class) = is_nilpotent(&a);
    match class {
        Some(k) => r.push("nilpotent", format!("yes (A^{k} = 0)")),
        None => r.push("nilpotent", "no"),
    }
    r.push("solvable", yes_no(is_solvable(&a)));
    match nilindex_seeded(&a, seed) {
        Ok((nu, w)) => {
            r.push_with_witness(
                "nilindex",
                nu.to_string(),
                format!("x = {}, x^{} != 0", render_combination(&w), nu - 1),
            );
        }
        Err(Error::NoNilindex { bound }) => {
            r.push("nilindex", format!("none (not a nilalgebra up to x^{bound})"));
        }
        Err(Error::CharacteristicTooSmall { p, degree }) => r.push(
            "nilindex",
            format!("not determined (characteristic {p} < degree {degree})"),
        ),
        Err(e) => return Err(e),
    }

    let is_jj = comm.is_none() && jac.is_none();
    let _ = nilp;
    if is_jj {
        r.finish("Jacobi-Jordan algebra", EXIT_OK);
    } else {
        r.finish("not a Jacobi-Jordan algebra", EXIT_CHECK_FAILED);
    }
    Ok(r)
}

fn push_fingerprint(r: &mut Report, prefix: &str, fp: &Fingerprint) {
    let chain: Vec<String> = fp.power_chain_dims.iter().map(|d| d.to_string()).collect();
    r.push(&format!("{prefix}dim"), fp.dim.to_string());
    r.push(&format!("{prefix}power-chain"), format!("({})", chain.join(", ")));
    r.push(
        &format!("{prefix}nilpotency-class"),
        fp.nilpotency_class.map_or("none".to_string(), |c| c.to_string()),
    );
    r.push(
        &format!("{prefix}nilindex"),
        fp.nilindex.map_or("none".to_string(), |c| c.to_string()),
    );
    r.push(&format!("{prefix}annihilator-dim"), fp.annihilator_dim.to_string());
    r.push(&format!("{prefix}derivation-dim"), fp.derivation_dim.to_string());
    r.push(&format!("{prefix}associative"), yes_no(fp.associative));
}

fn cmd_invariants(file: &Path, field: &Option<String>, seed: u64) -> Result<Report> {
    let a = load_algebra(file, field)?;
    let fp = fingerprint(&a)?;
    let mut r = Report::new("invariants", seed);
    push_fingerprint(&mut r, "", &fp);
    r.finish(fp.to_string(), EXIT_OK);
    Ok(r)
}

fn cmd_compare(
    file_a: &Path,
    file_b: &Path,
    field: &Option<String>,
    seed: u64,
) -> Result<Report> {
    let a = load_algebra(file_a, field)?;
    let b = load_algebra(file_b, field)?;
    let fa = fingerprint(&a)?;
    let fb = fingerprint(&b)?;
    let mut r = Report::new("compare", seed);
    push_fingerprint(&mut r, "a.", &fa);
    push_fingerprint(&mut r, "b.", &fb);
    if fa == fb {
        r.finish("undetermined by invariants", EXIT_CHECK_FAILED);
    } else {
        r.finish("distinct over any extension field", EXIT_OK);
    }
    Ok(r)
}

fn cmd_quotient(
    ideal: &str,
    vars: &Option<String>,
    order: &str,
    out: &Option<PathBuf>,
    seed: u64,
) -> Result<Report> {
    if order != "lex" {
        return Err(Error::Invalid(format!(
            "only the lex order is supported, got '{order}'"
        )));
    }
    let varlist = match vars {
        None => None,
        Some(spec) => {
            let names: Vec<String> = spec.split(',').map(|s| s.trim().to_string()).collect();
            Some(std::sync::Arc::new(VarList::new(names)?))
        }
    };
    let (gens, vars) = parse_ideal(ideal, varlist)?;
    let gb = buchberger(&gens)?;
    let mut r = Report::new("quotient", seed);
    r.push("ideal", ideal);
    r.push("variables", vars.to_string());
    r.push("order", "lex");
    let basis_strs: Vec<String> = gb.polys().iter().map(|g| g.to_string()).collect();
    r.push("groebner-basis", format!("{{{}}}", basis_strs.join(", ")));
    let sm = standard_monomials(&vars, &gb)?;
    let sm_strs: Vec<String> = sm.iter().map(|m| m.display(&vars)).collect();
    r.push("standard-monomials", format!("{{{}}}", sm_strs.join(", ")));
    r.push("quotient-dim", sm.len().to_string());
    let q = quotient_algebra(&vars, &gb)?;
    let alg = maximal_ideal_algebra(&q)?;
    r.push("algebra-dim", alg.dim().to_string());
    r.push("basis-labels", alg.labels().join(", "));
    let text = export_algebra(&alg);
    emit_artifact(&mut r, text, out)?;
    r.finish("quotient algebra constructed", EXIT_OK);
    Ok(r)
}

fn emit_artifact(r: &mut Report, text: String, out: &Option<PathBuf>) -> Result<()> {
    match out {
        Some(path) => {
            fs::write(path, &text)
                .map_err(|e| Error::Invalid(format!("cannot write {}: {e}", path.display())))?;
            r.push("written", path.display().to_string());
        }
        None => r.artifact = Some(text),
    }
    Ok(())
}

fn cmd_catalog(action: &CatalogAction, seed: u64) -> Result<Report> {
    match action {
        CatalogAction::List { dim } => {
            let mut r = Report::new("catalog list", seed);
            for e in catalog::list(*dim) {
                r.push_with_witness(
                    &e.name,
                    format!("dim {}", e.dimension),
                    e.source.clone(),
                );
            }
            r.finish(format!("{} entries", catalog::list(*dim).len()), EXIT_OK);
            Ok(r)
        }
        CatalogAction::Verify { dim } => {
            let mut r = Report::new("catalog verify", seed);
            let mut bad = 0;
            for e in catalog::list(*dim) {
                let failures = catalog::verify_entry(e)?;
                if failures.is_empty() {
                    r.push(&e.name, "ok");
                } else {
                    bad += 1;
                    r.push(&e.name, format!("MISMATCH: {}", failures.join("; ")));
                }
            }
            // Fingerprint collision groups per dimension, recorded for
            // information (equal fingerprints decide nothing).
            let dims: Vec<usize> = match dim {
                Some(d) => vec![*d],
                None => (1..=6).collect(),
            };
            for d in dims {
                let entries = catalog::list(Some(d));
                let mut fps: Vec<(String, Fingerprint)> = Vec::new();
                for e in &entries {
                    fps.push((e.name.clone(), fingerprint(&e.algebra)?));
                }
                for i in 0..fps.len() {
                    for j in i + 1..fps.len() {
                        if fps[i].1 == fps[j].1 {
                            r.push(
                                &format!("fingerprint-collision(dim {d})"),
                                format!("{} vs {}", fps[i].0, fps[j].0),
                            );
                        }
                    }
                }
            }
            if bad == 0 {
                r.finish("all entries match their asserted properties", EXIT_OK);
            } else {
                r.finish(format!("{bad} entries mismatch"), EXIT_CHECK_FAILED);
            }
            Ok(r)
        }
        CatalogAction::Export { name, out, field } => {
            let entry = catalog::get(name)?;
            let mut a = entry.algebra.clone();
            if let Some(p) = parse_field_flag(field)? {
                a = a.reduce_mod(p)?;
            }
            let mut r = Report::new("catalog export", seed);
            r.push("name", name.clone());
            r.push("source", entry.source.clone());
            emit_artifact(&mut r, export_algebra(&a), out)?;
            r.finish("exported", EXIT_OK);
            Ok(r)
        }
    }
}

fn cmd_iso_verify(matrix: &Path, file_a: &Path, file_b: &Path, seed: u64) -> Result<Report> {
    let text = fs::read_to_string(matrix)
        .map_err(|e| Error::Invalid(format!("cannot read {}: {e}", matrix.display())))?;
    let m = parse_matrix(&text)?;
    let a = load_algebra(file_a, &None)?;
    let b = load_algebra(file_b, &None)?;
    let map = LinearMap::new(m);
    let iso = check_isomorphism(&map, &a, &b)?;
    let mut r = Report::new("iso-verify", seed);
    match iso.witness {
        None => r.push("homomorphism", "yes"),
        Some((i, j)) => r.push_with_witness(
            "homomorphism",
            "no",
            format!("f(e{0}*e{1}) != f(e{0})*f(e{1})", i + 1, j + 1),
        ),
    }
    r.push("determinant", iso.determinant.to_string());
    r.push("invertible", yes_no(iso.invertible));
    if iso.is_isomorphism() {
        r.finish("isomorphism verified", EXIT_OK);
    } else if iso.homomorphism {
        r.finish("homomorphism but not invertible", EXIT_CHECK_FAILED);
    } else {
        r.finish("not a homomorphism", EXIT_CHECK_FAILED);
    }
    Ok(r)
}

fn cmd_normalize5(file: &Path, out: &Option<PathBuf>, seed: u64) -> Result<Report> {
    let a = load_algebra(file, &None)?;
    let mut r = Report::new("normalize5", seed);
    match normalize_dim5_seeded(&a, seed) {
        Ok(n) => {
            r.push("x", render_combination(&n.x));
            r.push("y", render_combination(&n.y));
            r.push("alpha", n.alpha.to_string());
            r.push("beta", n.beta.to_string());
            r.push("gamma", n.gamma.to_string());
            r.push("relation", "4*beta = -gamma^2 holds exactly");
            r.push_with_witness(
                "new-basis",
                "columns are images",
                export_matrix(n.new_basis.matrix()),
            );
            emit_artifact(&mut r, export_algebra(&n.normalized), out)?;
            r.finish("normal form reached", EXIT_OK);
            Ok(r)
        }
        Err(Error::CubeZero) => {
            r.push("A^3", "0");
            r.finish(
                "A^3 = 0: the algebra is associative, nothing to normalize",
                EXIT_CHECK_FAILED,
            );
            Ok(r)
        }
        Err(Error::NotJacobiJordan(msg)) => {
            r.push("failure", msg);
            r.finish("input is not of the expected shape", EXIT_CHECK_FAILED);
            Ok(r)
        }
        Err(e) => Err(e),
    }
}

pub fn run(cli: &Cli) -> Result<Report> {
    match &cli.command {
        Command::Check { file, field } => cmd_check(file, field, cli.seed),
        Command::Invariants { file, field } => cmd_invariants(file, field, cli.seed),
        Command::Compare { file_a, file_b, field } => cmd_compare(file_a, file_b, field, cli.seed),
        Command::Quotient { ideal, vars, order, out } => {
            cmd_quotient(ideal, vars, order, out, cli.seed)
        }
        Command::Catalog { action } => cmd_catalog(action, cli.seed),
        Command::IsoVerify { matrix, file_a, file_b } => {
            cmd_iso_verify(matrix, file_a, file_b, cli.seed)
        }
        Command::Normalize5 { file, out } => cmd_normalize5(file, out, cli.seed),
    }
}

/// Witness rendering helper shared with tests.
pub fn scalar_vec_to_string(v: &[Scalar]) -> String {
    render_combination(v)
}
