//! Command-line front end. `execute` returns the text to print and the exit code,
//! so the binary is a thin wrapper and the commands are testable in-process.

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value as Json};

use crate::error::{Error, Result};
use crate::expr::{eval, Value};
use crate::hecke::{HeckeAlgebra, HeckeElt};
use crate::polyrep::act;
use crate::rings::{FracMatrix, LaurentPoly, Profile};
use crate::springer::{flag_table_strings, SpringerModule};
use crate::theta::{enumerate_orbits, orbit_representative, DictionaryReport, ThetaModule};
use crate::verify::{run_suite, Suite, VerifyConfig, MAX_RANK};
use crate::weyl::AffineWeylElt;

#[derive(Parser, Debug)]
#[command(name = "theta-hecke", version, about = "Exact computations in the affine Hecke algebra of GL_m")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Run a verification suite; exits 0 iff no check fails.
    Verify {
        /// hecke, polyrep, springer, theta, main-theorem or orbits.
        suite: String,
        /// Rank range `A..B` or a single rank.
        #[arg(long, value_parser = parse_range)]
        m: (usize, usize),
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Write the JSON report to PATH (`-` for stdout instead of the text report).
        #[arg(long)]
        json: Option<PathBuf>,
        /// Record elapsed time per check.
        #[arg(long)]
        timings: bool,
        /// Orbits: only this `n`.
        #[arg(long)]
        n: Option<usize>,
        /// Orbits: only these bounds `N,r`.
        #[arg(long, value_parser = parse_bounds)]
        bounds: Option<(i32, i32)>,
    },
    /// Evaluate an expression over scalars, Hecke elements and polynomials.
    Eval {
        #[arg(long)]
        m: usize,
        /// Apply a Hecke result to the polynomial 1.
        #[arg(long)]
        act: bool,
        expr: String,
    },
    /// Length and reduced word of an extended affine Weyl group element.
    Weyl {
        #[arg(long)]
        m: usize,
        /// Read `W1` as `t^{ω₁}σ₁` instead of `t^{−ω₁}σ₁`.
        #[arg(long)]
        positive_omega: bool,
        expr: String,
    },
    /// Fixed-point data, theorem basis and action matrices of the Springer module.
    Springer {
        #[arg(long)]
        m: usize,
        #[arg(long, value_enum)]
        show: Show,
        /// Hecke element for `--show matrix`; defaults to the affine generator.
        #[arg(long)]
        generator: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Generator matrices on the IC basis and the dictionary report.
    Theta {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        matrices: bool,
        #[arg(long)]
        dictionary: bool,
        #[arg(long)]
        json: bool,
    },
    /// Orbit labels and representatives.
    Orbits {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long, value_parser = parse_bounds)]
        bounds: (i32, i32),
        #[arg(long)]
        count_only: bool,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Show {
    Flags,
    Bases,
    Matrix,
}

pub struct Output {
    pub stdout: String,
    pub code: i32,
}

impl Output {
    fn ok(stdout: String) -> Self {
        Output { stdout, code: 0 }
    }
}

fn parse_range(s: &str) -> std::result::Result<(usize, usize), String> {
    let bad = || format!("expected A..B or A, got {s:?}");
    match s.split_once("..") {
        Some((a, b)) => Ok((a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?)),
        None => {
            let a = s.trim().parse().map_err(|_| bad())?;
            Ok((a, a))
        }
    }
}

fn parse_bounds(s: &str) -> std::result::Result<(i32, i32), String> {
    let bad = || format!("expected N,r, got {s:?}");
    let (a, b) = s.split_once(',').ok_or_else(bad)?;
    Ok((a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?))
}

fn check_rank(m: usize) -> Result<()> {
    if m == 0 || m > MAX_RANK {
        return Err(Error::Invalid(format!("m = {m} must lie in 1..={MAX_RANK}")));
    }
    Ok(())
}

fn pretty(j: &Json) -> String {
    serde_json::to_string_pretty(j).expect("json") + "\n"
}

/// Numerators as strings plus the common denominator when it is not 1.
pub fn matrix_json(mat: &FracMatrix) -> Json {
    let mut mat = mat.clone();
    mat.normalize();
    let rows: Vec<Vec<String>> = mat.num.iter().map(|r| r.iter().map(|x| x.to_string()).collect()).collect();
    let mut out = json!({ "matrix": rows });
    if !mat.den.is_one() {
        out["denominator"] = json!(mat.den.to_string());
    }
    out
}

fn matrix_text(mat: &FracMatrix) -> String {
    let j = matrix_json(mat);
    let mut out = String::new();
    for row in j["matrix"].as_array().expect("rows") {
        let cells: Vec<&str> = row.as_array().expect("row").iter().map(|x| x.as_str().expect("cell")).collect();
        out.push_str(&format!("  [{}]\n", cells.join(", ")));
    }
    if let Some(d) = j.get("denominator") {
        out.push_str(&format!("  / {}\n", d.as_str().expect("den")));
    }
    out
}

/// Matrix of a generator on the theorem basis, in the JSON layout of `springer --show matrix`.
pub fn springer_matrix_json(m: usize, generator: Option<&str>) -> Result<Json> {
    check_rank(m)?;
    let sp = SpringerModule::new(m)?;
    let (name, h) = match generator {
        Some(src) => (src.to_string(), sp.algebra().parse(src)?),
        None if m >= 2 => ("T_sm".to_string(), sp.algebra().t(m)),
        None => return Err(Error::Invalid("m = 1 has no affine generator; pass --generator".into())),
    };
    let mut out = json!({ "m": m, "basis": "theorem", "generator": name });
    let mat = matrix_json(&sp.action_matrix(&h)?);
    for (k, v) in mat.as_object().expect("object") {
        out[k] = v.clone();
    }
    Ok(out)
}

pub fn execute(cli: Cli) -> Result<Output> {
    match cli.command {
        Command::Verify { suite, m, seed, json, timings, n, bounds } => {
            let cfg = VerifyConfig { suite: suite.parse::<Suite>()?, m_range: m, seed, timings, n, bounds };
            let report = run_suite(&cfg)?;
            let code = if report.passed { 0 } else { 1 };
            let stdout = match json {
                Some(p) if p.as_os_str() == "-" => report.to_json(),
                Some(p) => {
                    std::fs::write(&p, report.to_json())
                        .map_err(|e| Error::Invalid(format!("cannot write {}: {e}", p.display())))?;
                    report.render_text()
                }
                None => report.render_text(),
            };
            Ok(Output { stdout, code })
        }
        Command::Eval { m, act: apply, expr } => {
            check_rank(m)?;
            let alg = HeckeAlgebra::new(m);
            let value = eval(&alg, &expr)?;
            let value = match (apply, value) {
                (true, Value::Hecke(h)) => Value::Vector(act(&h, &LaurentPoly::one(Profile::X(m as u8)))?),
                (true, Value::Scalar(c)) => {
                    Value::Vector(act(&HeckeElt::scalar(m, c), &LaurentPoly::one(Profile::X(m as u8)))?)
                }
                (_, v) => v,
            };
            Ok(Output::ok(format!("{value}\n")))
        }
        Command::Weyl { m, positive_omega, expr } => {
            check_rank(m)?;
            let mut w = AffineWeylElt::parse(m, &expr)?;
            if positive_omega {
                w = w.negate_translation();
            }
            let (k, word) = w.reduced_word();
            let letters: Vec<String> = word.iter().map(|i| format!("s{i}")).collect();
            Ok(Output::ok(format!(
                "element: {w}\nlength: {}\nreduced word: W1^{k}{}{}\n",
                w.length(),
                if letters.is_empty() { "" } else { " " },
                letters.join(" ")
            )))
        }
        Command::Springer { m, show, generator, json } => {
            check_rank(m)?;
            springer_command(m, show, generator.as_deref(), json)
        }
        Command::Theta { m, matrices, dictionary, json } => {
            check_rank(m)?;
            theta_command(m, matrices, dictionary, json)
        }
        Command::Orbits { n, m, bounds, count_only, json } => {
            check_rank(m)?;
            let labels = enumerate_orbits(n, m, bounds.0, bounds.1)?;
            if count_only {
                return Ok(Output::ok(if json {
                    pretty(&json!({ "n": n, "m": m, "bounds": [bounds.0, bounds.1], "count": labels.len() }))
                } else {
                    format!("{}\n", labels.len())
                }));
            }
            let mut rows = Vec::new();
            let mut text = format!("{} orbits\n", labels.len());
            for label in &labels {
                let rep = orbit_representative(label)?.with_columns(m);
                text.push_str(&format!(
                    "lambda={:?} subset={:?} bijection={:?}\n{}\n",
                    label.lambda, label.subset, label.bijection, indent(&rep.to_string())
                ));
                rows.push(json!({
                    "lambda": label.lambda,
                    "subset": label.subset,
                    "bijection": label.bijection,
                    "representative": rep.to_string().lines().collect::<Vec<_>>(),
                }));
            }
            Ok(Output::ok(if json {
                pretty(&json!({ "n": n, "m": m, "bounds": [bounds.0, bounds.1], "count": labels.len(), "orbits": rows }))
            } else {
                text
            }))
        }
    }
}

fn indent(s: &str) -> String {
    s.lines().map(|l| format!("  {l}")).collect::<Vec<_>>().join("\n")
}

fn springer_command(m: usize, show: Show, generator: Option<&str>, json: bool) -> Result<Output> {
    match show {
        Show::Flags => {
            let table = flag_table_strings(&crate::springer::build_fixed_flags(m));
            if json {
                return Ok(Output::ok(pretty(&json!({ "m": m, "weights": table }))));
            }
            let mut out = String::new();
            for (p, ws) in &table {
                out.push_str(&format!("{p}: {}\n", ws.join(", ")));
            }
            Ok(Output::ok(out))
        }
        Show::Bases => {
            let sp = SpringerModule::new(m)?;
            let elements: Vec<Json> = (0..m)
                .map(|j| {
                    json!({
                        "index": j,
                        "preimage": sp.preimages()[j].to_string(),
                        "tuple": sp.basis_tuple(j).num.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
                    })
                })
                .collect();
            let det = sp.basis_determinant().to_string();
            if json {
                return Ok(Output::ok(pretty(&json!({ "m": m, "basis": "theorem", "elements": elements, "determinant": det }))));
            }
            let mut out = String::new();
            for j in 0..m {
                out.push_str(&format!("B{j}: preimage {}, tuple {}\n", sp.preimages()[j], sp.basis_tuple(j)));
            }
            out.push_str(&format!("determinant: {det}\n"));
            Ok(Output::ok(out))
        }
        Show::Matrix => {
            let j = springer_matrix_json(m, generator)?;
            if json {
                return Ok(Output::ok(pretty(&j)));
            }
            let sp = SpringerModule::new(m)?;
            let h = match generator {
                Some(src) => sp.algebra().parse(src)?,
                None => sp.algebra().t(m),
            };
            Ok(Output::ok(format!("{} on the theorem basis:\n{}", j["generator"].as_str().expect("name"), matrix_text(&sp.action_matrix(&h)?))))
        }
    }
}

fn theta_command(m: usize, matrices: bool, dictionary: bool, json: bool) -> Result<Output> {
    if !matrices && !dictionary {
        return Err(Error::Invalid("pass --matrices and/or --dictionary".into()));
    }
    let theta = ThetaModule::new(m)?;
    let mut out = json!({ "m": m, "basis": "IC" });
    let mut text = String::new();
    if matrices {
        let mut list = Vec::new();
        for (name, mat) in theta.generator_matrices()? {
            text.push_str(&format!("{name}:\n{}", matrix_text(&mat)));
            let mut entry = json!({ "generator": name });
            for (k, v) in matrix_json(&mat).as_object().expect("object") {
                entry[k] = v.clone();
            }
            list.push(entry);
        }
        out["matrices"] = Json::Array(list);
    }
    if dictionary {
        if m < 2 {
            return Err(Error::Invalid("the dictionary needs m ≥ 2".into()));
        }
        let report = DictionaryReport::build(&theta)?;
        text.push_str(&report.render());
        out["dictionary"] = serde_json::to_value(&report).expect("report serializes");
    }
    Ok(Output::ok(if json { pretty(&out) } else { text }))
}
