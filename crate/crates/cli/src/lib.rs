//! Command-line front end over JSON spinor files.
//!
//! Exit codes: 0 success, 1 verification failure (or a winding path that is
//! rejected), 2 usage or schema error.

use std::collections::BTreeMap;
use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use spinrep::classmap::{
    build_M, constraint_residuals, hermitian_constrain, map_to_class4, no_inverse_witness,
    MappingParams,
};
use spinrep::fierz::{
    aggregate, boomerang_residual, default_test_spinor, fpk_report, generalized_fpk_residuals,
    reconstruct,
};
use spinrep::lounesto::{classify, generate, LounestoClass};
use spinrep::topology::{winding_number, PlanePath};
use spinrep::{covariants, BilinearSet, ClassicalSpinor, Complex64, Error, Rep, Signature};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "spinrep",
    version,
    about = "Spinor classification and Fierz identity checks"
)]
pub struct Cli {
    /// Relative zero / identity tolerance.
    #[arg(long, global = true, default_value_t = spinrep::DEFAULT_TOL)]
    pub tol: f64,

    /// Seed for commands that draw random numbers.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,

    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    /// Representation of spinors written by the command.
    #[arg(long, global = true, value_enum, default_value_t = RepArg::Weyl)]
    pub rep: RepArg,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum RepArg {
    Weyl,
    Dirac,
}

impl From<RepArg> for Rep {
    fn from(r: RepArg) -> Rep {
        match r {
            RepArg::Weyl => Rep::Weyl,
            RepArg::Dirac => Rep::Dirac,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Fpk,
    Aggregate,
    Boomerang,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Lounesto class of every spinor in a file.
    Classify { input: String },
    /// Write a file of spinors of one class.
    Generate {
        #[arg(long)]
        class: String,
        #[arg(long, default_value_t = 1)]
        count: usize,
    },
    /// Check Fierz identities, aggregate identities or the boomerang property.
    Verify {
        input: String,
        #[arg(long, value_enum, default_value_t = Mode::Fpk)]
        mode: Mode,
    },
    /// Map regular spinors through the class-4 matrix built from `--params`.
    Map4 {
        #[arg(long)]
        params: String,
        input: String,
    },
    /// Winding number of a closed (σ, ω) path around the origin.
    Winding {
        path: String,
        /// Print the full report instead of the bare integer.
        #[arg(long)]
        json: bool,
    },
    /// Rebuild each spinor from its Fierz aggregate.
    Reconstruct { input: String },
}

/// A command failure with its exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Self {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }

    fn fail(message: impl Into<String>) -> Self {
        Self {
            code: EXIT_FAIL,
            message: message.into(),
        }
    }
}

/// `{version: 1, entries: [...]}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpinorFile {
    pub version: u32,
    pub entries: Vec<Entry>,
}

/// A spinor entry, or (for `verify`) a bare bilinear set.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Entry {
    pub id: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rep: Option<Rep>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub components: Option<[Complex64; 4]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bilinears: Option<BilinearInput>,
}

/// Minkowski covariants as written in input files.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BilinearInput {
    pub sigma: f64,
    pub omega: f64,
    #[serde(rename = "J")]
    pub j: [f64; 4],
    #[serde(rename = "K")]
    pub k: [f64; 4],
    #[serde(rename = "S")]
    pub s: [f64; 6],
}

impl From<BilinearInput> for BilinearSet {
    fn from(b: BilinearInput) -> Self {
        BilinearSet {
            sigma: b.sigma,
            omega: b.omega,
            j: b.j,
            k: b.k,
            s: b.s,
            signature: Signature::Minkowski,
        }
    }
}

impl Entry {
    pub fn spinor(id: String, psi: &ClassicalSpinor) -> Self {
        Self {
            id,
            rep: Some(psi.rep),
            components: Some(psi.components),
            bilinears: None,
        }
    }
}

enum Subject {
    Spinor(ClassicalSpinor),
    Bilinears(BilinearSet),
}

fn validate(file: &SpinorFile, allow_bilinears: bool) -> Result<Vec<Subject>, Failure> {
    if file.version != 1 {
        return Err(Failure::usage(format!(
            "unsupported version {} (expected 1)",
            file.version
        )));
    }
    file.entries
        .iter()
        .enumerate()
        .map(|(i, e)| {
            let at = |msg: &str| Failure::usage(format!("entries[{i}] (id {:?}): {msg}", e.id));
            match (&e.components, &e.bilinears) {
                (Some(c), None) => {
                    let rep = e.rep.ok_or_else(|| at("missing field `rep`"))?;
                    let psi = ClassicalSpinor::new(*c, rep);
                    if !psi.is_finite() {
                        return Err(at("non-finite component"));
                    }
                    Ok(Subject::Spinor(psi))
                }
                (None, Some(b)) if allow_bilinears => {
                    let set = BilinearSet::from(*b);
                    let finite = [set.sigma, set.omega]
                        .iter()
                        .chain(&set.j)
                        .chain(&set.k)
                        .chain(&set.s)
                        .all(|x| x.is_finite());
                    if !finite {
                        return Err(at("non-finite bilinear"));
                    }
                    Ok(Subject::Bilinears(set))
                }
                (None, Some(_)) => Err(at("bilinear entries are only accepted by `verify`")),
                (Some(_), Some(_)) => Err(at("give either `components` or `bilinears`, not both")),
                (None, None) => Err(at("missing field `components`")),
            }
        })
        .collect()
}

fn read_input(path: &str) -> Result<String, Failure> {
    if path == "-" {
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Failure::usage(format!("stdin: {e}")))?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(|e| Failure::usage(format!("{path}: {e}")))
    }
}

fn parse_json<T: for<'de> Deserialize<'de>>(path: &str) -> Result<T, Failure> {
    let text = read_input(path)?;
    serde_json::from_str(&text).map_err(|e| {
        Failure::usage(format!(
            "{path}: line {} column {}: {e}",
            e.line(),
            e.column()
        ))
    })
}

fn error_value(e: &Error) -> Value {
    json!({ "error": e.to_string() })
}

struct Context<'a> {
    tol: f64,
    seed: u64,
    rep: Rep,
    args: &'a [String],
}

impl Context<'_> {
    fn report(&self, command: &str, body: Value) -> Value {
        let mut obj = json!({
            "version": 1,
            "command": command,
            "args": self.args,
            "tol": self.tol,
            "seed": self.seed,
        });
        let map = obj.as_object_mut().expect("object literal");
        if let Value::Object(extra) = body {
            map.extend(extra);
        }
        obj
    }
}

/// Output of a command: the document to print and its exit code.
pub struct Outcome {
    pub text: String,
    pub code: i32,
}

fn pretty(v: &impl Serialize) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

/// Run a parsed command. `args` (the raw argument list, program name
/// excluded) is echoed into reports.
pub fn run(cli: &Cli, args: &[String]) -> Result<Outcome, Failure> {
    if !(cli.tol.is_finite() && cli.tol > 0.0) {
        return Err(Failure::usage("--tol must be a positive number"));
    }
    let ctx = Context {
        tol: cli.tol,
        seed: cli.seed,
        rep: cli.rep.into(),
        args,
    };
    match &cli.command {
        Command::Classify { input } => cmd_classify(&ctx, input),
        Command::Generate { class, count } => cmd_generate(&ctx, class, *count),
        Command::Verify { input, mode } => cmd_verify(&ctx, input, *mode),
        Command::Map4 { params, input } => cmd_map4(&ctx, params, input),
        Command::Winding { path, json } => cmd_winding(path, *json),
        Command::Reconstruct { input } => cmd_reconstruct(&ctx, input),
    }
}

fn cmd_classify(ctx: &Context, input: &str) -> Result<Outcome, Failure> {
    let file: SpinorFile = parse_json(input)?;
    let subjects = validate(&file, false)?;
    let results: Vec<Value> = file
        .entries
        .iter()
        .zip(&subjects)
        .map(|(e, s)| {
            let Subject::Spinor(psi) = s else {
                unreachable!()
            };
            let body = match classify(psi, ctx.tol) {
                Ok(r) => serde_json::to_value(r).expect("serializable"),
                Err(err) => error_value(&err),
            };
            with_id(&e.id, body)
        })
        .collect();
    Ok(Outcome {
        text: pretty(&ctx.report("classify", json!({ "results": results }))),
        code: EXIT_OK,
    })
}

fn with_id(id: &str, body: Value) -> Value {
    let mut obj = json!({ "id": id });
    if let (Some(map), Value::Object(extra)) = (obj.as_object_mut(), body) {
        map.extend(extra);
    }
    obj
}

fn cmd_generate(ctx: &Context, class: &str, count: usize) -> Result<Outcome, Failure> {
    let class: LounestoClass = class
        .parse()
        .map_err(|_| Failure::usage(format!("--class must be 1..6, got {class:?}")))?;
    if !class.is_regular() && !class.is_singular() {
        return Err(Failure::usage(format!("class {class} cannot be generated")));
    }
    if count == 0 {
        return Err(Failure::usage("--count must be at least 1"));
    }
    let spinors = generate(class, ctx.seed, count).map_err(|e| Failure::fail(e.to_string()))?;
    let entries = spinors
        .iter()
        .enumerate()
        .map(|(i, psi)| Entry::spinor(format!("{class}-{i}"), &psi.to_rep(ctx.rep)))
        .collect();
    Ok(Outcome {
        text: pretty(&SpinorFile {
            version: 1,
            entries,
        }),
        code: EXIT_OK,
    })
}

fn cmd_verify(ctx: &Context, input: &str, mode: Mode) -> Result<Outcome, Failure> {
    let file: SpinorFile = parse_json(input)?;
    let subjects = validate(&file, true)?;
    let mut all_pass = true;
    let mut results = Vec::with_capacity(subjects.len());
    for (e, s) in file.entries.iter().zip(&subjects) {
        let b = match s {
            Subject::Spinor(psi) => match covariants(psi) {
                Ok(b) => b,
                Err(err) => {
                    all_pass = false;
                    results.push(with_id(&e.id, error_value(&err)));
                    continue;
                }
            },
            Subject::Bilinears(b) => *b,
        };
        let (pass, body) = verify_one(&b, mode, ctx.tol);
        all_pass &= pass;
        results.push(with_id(&e.id, body));
    }
    let report = ctx.report(
        "verify",
        json!({ "mode": mode, "pass": all_pass, "results": results }),
    );
    Ok(Outcome {
        text: pretty(&report),
        code: if all_pass { EXIT_OK } else { EXIT_FAIL },
    })
}

fn verify_one(b: &BilinearSet, mode: Mode, tol: f64) -> (bool, Value) {
    match mode {
        Mode::Fpk => {
            let r = fpk_report(b, tol);
            (r.all_pass(), json!({ "pass": r.all_pass(), "fpk": r }))
        }
        Mode::Aggregate => {
            let z = aggregate(b);
            let limit = tol * z.max_norm().powi(2);
            let res = generalized_fpk_residuals(&z, b);
            let pass_each = res.map(|r| r <= limit);
            let pass = pass_each.iter().all(|&p| p);
            (
                pass,
                json!({
                    "pass": pass,
                    "residuals": {
                        "sigma": res[0], "J": res[1], "S": res[2], "K": res[3], "omega": res[4],
                    },
                    "limit": limit,
                }),
            )
        }
        Mode::Boomerang => {
            let z = aggregate(b);
            let limit = tol * z.max_norm().powi(2);
            let residual = boomerang_residual(&z, b.sigma);
            let pass = residual <= limit;
            (
                pass,
                json!({ "pass": pass, "residual": residual, "limit": limit }),
            )
        }
    }
}

fn params_hash(p: &MappingParams) -> String {
    let canonical = serde_json::to_string(p).expect("serializable");
    Sha256::digest(canonical.as_bytes())
        .iter()
        .map(|b| format!("{b:02x}"))
        .collect()
}

fn cmd_map4(ctx: &Context, params: &str, input: &str) -> Result<Outcome, Failure> {
    let p: MappingParams = parse_json(params)?;
    let m = build_M(&p).map_err(|e| Failure::usage(format!("{params}: {e}")))?;
    let file: SpinorFile = parse_json(input)?;
    let subjects = validate(&file, false)?;
    let (r0, r123) = constraint_residuals(&m.matrix);
    let hermitian = hermitian_constrain(&p).is_ok();
    let mut histogram: BTreeMap<String, usize> = BTreeMap::new();
    let results: Vec<Value> = file
        .entries
        .iter()
        .zip(&subjects)
        .map(|(e, s)| {
            let Subject::Spinor(phi) = s else {
                unreachable!()
            };
            let body = match map_to_class4(&m, phi, ctx.tol) {
                Ok(img) => {
                    *histogram.entry(img.report.class.to_string()).or_default() += 1;
                    json!({
                        "image": { "rep": img.spinor.rep, "components": img.spinor.components },
                        "classification": img.report,
                        "degenerate": img.degenerate,
                    })
                }
                Err(err) => error_value(&err),
            };
            with_id(&e.id, body)
        })
        .collect();
    let report = ctx.report(
        "map4",
        json!({
            "params_sha256": params_hash(&p),
            "det_abs": no_inverse_witness(&m),
            "constraint_residuals": { "g0": r0, "g123": r123 },
            "hermitian": hermitian,
            "class_histogram": histogram,
            "results": results,
        }),
    );
    Ok(Outcome {
        text: pretty(&report),
        code: EXIT_OK,
    })
}

fn cmd_winding(path: &str, as_json: bool) -> Result<Outcome, Failure> {
    let p: PlanePath = parse_json(path)?;
    let report = winding_number(&p).map_err(|e| Failure::fail(e.to_string()))?;
    let text = if as_json {
        pretty(&report)
    } else {
        format!("{}\n", report.winding)
    };
    Ok(Outcome {
        text,
        code: EXIT_OK,
    })
}

fn cmd_reconstruct(ctx: &Context, input: &str) -> Result<Outcome, Failure> {
    let file: SpinorFile = parse_json(input)?;
    let subjects = validate(&file, false)?;
    let results: Vec<Value> = file
        .entries
        .iter()
        .zip(&subjects)
        .map(|(e, s)| {
            let Subject::Spinor(psi) = s else {
                unreachable!()
            };
            let body = (|| -> spinrep::Result<Value> {
                if psi.is_zero() {
                    return Err(Error::ZeroSpinor);
                }
                let z = aggregate(&covariants(psi)?);
                let xi = default_test_spinor(&z, ctx.rep)?;
                let out = reconstruct(&z, &xi, None)?;
                let sine = psi.to_rep(ctx.rep).ray_sine(&out);
                Ok(json!({
                    "xi": xi.components,
                    "reconstructed": { "rep": out.rep, "components": out.components },
                    "ray_sine": sine,
                }))
            })()
            .unwrap_or_else(|err| error_value(&err));
            with_id(&e.id, body)
        })
        .collect();
    Ok(Outcome {
        text: pretty(&ctx.report("reconstruct", json!({ "results": results }))),
        code: EXIT_OK,
    })
}

/// Write `text` to `out` or stdout.
pub fn emit(out: Option<&Path>, text: &str) -> io::Result<()> {
    match out {
        Some(p) => fs::write(p, text),
        None => {
            let mut stdout = io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            stdout.flush()
        }
    }
}
