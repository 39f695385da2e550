//! Command-line surface and dispatch.

use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use leibniz_forge::courant::{
    courant_bracket, courant_suite, d_two_form, dorfman_product, graph_closure_check, jacobiator_of_bivector, pairing,
    suite_samples, GraphKind, OneForm, VectorField,
};
use leibniz_forge::envelope::{canonical_envelope_with, EnvelopeTriple, IdealChoice};
use leibniz_forge::lie_yamaguti::{
    inner_derivations, ly_axiom_failures, ly_envelope_default, ly_from_leibniz, ly_from_leibniz_bracket_form,
    LieYamaguti, LyFailure, DEFAULT_DIM_CAP,
};
use leibniz_forge::linalg::{format_rational, parse_rational, Rational};
use leibniz_forge::loops::{loop_property_check, LoopContext, LoopValue, DEFAULT_LOOP_TOL};
use leibniz_forge::products::omni_algebras;
use leibniz_forge::{IdentityWitness, StructureAlgebra};
use serde_json::{json, Value};

use crate::error::CliError;
use crate::formats::{
    algebra_json, ly_json, matrix_json, parse_algebra, parse_graph, parse_ly, parse_section, parse_subspace,
    parse_vector, poly_json, section_json, vector_json, GraphInput,
};
use crate::report::{Check, Report};

#[derive(Parser, Debug)]
#[command(
    name = "leibniz-forge",
    version,
    about = "Exact computations with Leibniz algebras, their envelopes, loops and Courant brackets"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,

    /// Report wall-clock time in `timing_ms`.
    #[arg(long, global = true)]
    pub timing: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Structure-constant algebras.
    #[command(subcommand)]
    Algebra(AlgebraCmd),
    /// Enveloping Lie algebras.
    #[command(subcommand)]
    Envelope(EnvelopeCmd),
    /// Lie–Yamaguti algebras.
    #[command(subcommand)]
    Ly(LyCmd),
    /// Left loops x ⋄ₛ y = x + exp(sλ(x))y.
    #[command(subcommand)]
    Loop(LoopCmd),
    /// The omni-Leibniz and omni-Lie algebras gl(d) ⋉ ℝ^d.
    Omni {
        #[arg(long)]
        dim: usize,
    },
    /// The Courant bracket on ℝⁿ with polynomial coefficients.
    #[command(subcommand)]
    Courant(CourantCmd),
}

#[derive(Subcommand, Debug)]
pub enum AlgebraCmd {
    /// Leibniz, skew-symmetry and Lie checks.
    Check { file: PathBuf },
}

#[derive(Args, Debug)]
pub struct IdealArg {
    /// `squares`, `kernel`, or a subspace file {"basis": [[...], ...]}.
    #[arg(long, default_value = "squares")]
    pub ideal: String,
}

#[derive(Subcommand, Debug)]
pub enum EnvelopeCmd {
    /// Build the canonical triple (g, h, f).
    Build {
        file: PathBuf,
        #[command(flatten)]
        ideal: IdealArg,
    },
    /// Build the canonical triple and run every invariant check.
    Verify {
        file: PathBuf,
        #[command(flatten)]
        ideal: IdealArg,
        /// Section parameter; defaults to 1, 1/2, -2 and 3/7.
        #[arg(long, value_parser = rational_arg)]
        s: Option<Rational>,
    },
}

#[derive(Subcommand, Debug)]
pub enum LyCmd {
    /// Check LY1–LY6 on a tensor file.
    Check { file: PathBuf },
    /// Lie–Yamaguti structure of a Leibniz algebra.
    Derive { file: PathBuf },
}

#[derive(Args, Debug)]
pub struct ModeArgs {
    /// Floating-point exponentials for non-nilpotent λ.
    #[arg(long)]
    pub float: bool,
    /// Absolute tolerance in float mode.
    #[arg(long, requires = "float")]
    pub tol: Option<f64>,
}

#[derive(Subcommand, Debug)]
pub enum LoopCmd {
    /// x ⋄ₛ y, the left inverse of x and x \ y.
    Eval {
        #[arg(long)]
        algebra: PathBuf,
        #[arg(long, value_parser = rational_arg)]
        s: Rational,
        #[arg(long)]
        x: String,
        #[arg(long)]
        y: String,
        #[command(flatten)]
        mode: ModeArgs,
    },
    /// Identity, left division, left inverse property and Aₗ on samples.
    Verify {
        #[arg(long)]
        algebra: PathBuf,
        #[arg(long, value_parser = rational_arg)]
        s: Rational,
        #[arg(long, default_value_t = 200)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        mode: ModeArgs,
    },
}

#[derive(Subcommand, Debug)]
pub enum CourantCmd {
    /// Courant bracket, Dorfman product and pairing of two sections.
    Bracket { x: PathBuf, y: PathBuf },
    /// Axioms 1–5 and the Dorfman identities on given and sampled sections.
    Axioms {
        /// Number of variables; taken from the sections when omitted.
        #[arg(long)]
        vars: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        samples: usize,
        /// Section files included as cyclic triples.
        #[arg(long = "section")]
        sections: Vec<PathBuf>,
    },
    /// Closure of the graph of a bivector or 2-form under the bracket.
    Graph {
        file: PathBuf,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 20)]
        samples: usize,
    },
}

fn rational_arg(s: &str) -> Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.display().to_string(), source })
}

fn load_algebra(path: &Path) -> Result<StructureAlgebra, CliError> {
    parse_algebra(&read(path)?)
}

fn identity_witness(w: &IdentityWitness) -> Value {
    json!({"identity": w.identity, "tuple": w.tuple, "lhs": vector_json(&w.lhs), "rhs": vector_json(&w.rhs)})
}

fn ly_witness(f: &LyFailure) -> Value {
    json!({"axiom": format!("LY{}", f.axiom), "tuple": f.tuple, "lhs": vector_json(&f.lhs), "rhs": vector_json(&f.rhs)})
}

fn algebra_check(a: &StructureAlgebra) -> Report {
    let leib = a.check_leibniz();
    let skew = a.check_skew();
    let lie = a.check_lie();
    let mut checks = vec![
        Check::from_witness("leibniz", leib.witness.as_ref().map(identity_witness)).with_value(json!(leib.holds)),
        property("skew", skew.holds, skew.witness.as_ref().map(identity_witness)),
        property("lie", lie.holds, lie.witness.as_ref().map(identity_witness)),
    ];
    if leib.holds {
        checks.push(Check::pass("squares_ideal_dim").with_value(json!(a.squares_ideal().dim())));
        checks.push(Check::pass("kernel_of_lambda_dim").with_value(json!(a.kernel_of_lambda().dim())));
    }
    Report::new(checks)
}

/// An informational yes/no property: always passes, records the answer
/// and, when false, the reason.
fn property(name: &str, holds: bool, reason: Option<Value>) -> Check {
    let mut c = Check::pass(name).with_value(json!(holds));
    if !holds {
        c.witness = reason;
    }
    c
}

fn ideal_choice(arg: &IdealArg, dim: usize) -> Result<IdealChoice, CliError> {
    Ok(match arg.ideal.as_str() {
        "squares" => IdealChoice::Squares,
        "kernel" => IdealChoice::Kernel,
        path => IdealChoice::Custom(parse_subspace(&read(Path::new(path))?, dim)?),
    })
}

fn triple_json(t: &EnvelopeTriple) -> Value {
    json!({
        "g": algebra_json(t.g()),
        "h": algebra_json(t.h()),
        "f": matrix_json(t.f()),
        "action": t.action().matrices().iter().map(matrix_json).collect::<Vec<_>>(),
    })
}

fn envelope_build(a: &StructureAlgebra, ideal: &IdealArg) -> Result<Report, CliError> {
    let choice = ideal_choice(ideal, a.dim())?;
    Ok(match canonical_envelope_with(a, &choice) {
        Ok(t) => Report::new(vec![
            Check::pass("envelope").with_value(triple_json(&t)),
            Check::pass("f_surjective").with_value(json!(t.f_is_surjective())),
        ]),
        Err(e) => Report::new(vec![Check::fail("envelope", json!(e.to_string()))]),
    })
}

fn envelope_verify(a: &StructureAlgebra, ideal: &IdealArg, s: Option<Rational>) -> Result<Report, CliError> {
    let choice = ideal_choice(ideal, a.dim())?;
    let t = match canonical_envelope_with(a, &choice) {
        Ok(t) => t,
        Err(e) => return Ok(Report::new(vec![Check::fail("envelope", json!(e.to_string()))])),
    };
    let flag = |name: String, ok: bool, why: &str| Check::from_witness(name, (!ok).then(|| json!(why)));
    let mut checks = vec![
        Check::from_witness("validate", t.validate().err().map(|e| json!(e.to_string()))),
        flag(
            "recovery".into(),
            t.recovery_check(),
            "projected bracket at s = 1/2 differs from the skew-symmetrization",
        ),
        flag("sigma_one_embedding".into(), t.sigma_one_embed_check(), "sigma_1 is not an injective homomorphism"),
        flag("f_skew_consistency".into(), t.f_skew_consistency(), "f([x,y]) differs from [f(x), f(y)]"),
    ];
    let values = match s {
        Some(s) => vec![s],
        None => leibniz_forge::corpus::scaling_values(),
    };
    for s in &values {
        let tag = format_rational(s);
        checks.push(flag(format!("reductive s={tag}"), t.reductivity_check(s), "[h, m_s] is not contained in m_s"));
        checks.push(flag(
            format!("projected_formulas s={tag}"),
            t.projected_formula_check(s),
            "bracket or delta scaling law fails",
        ));
    }
    checks.push(Check::pass("f_surjective").with_value(json!(t.f_is_surjective())));
    Ok(Report::new(checks))
}

fn ly_axiom_checks(l: &LieYamaguti) -> Vec<Check> {
    ly_axiom_failures(l)
        .iter()
        .enumerate()
        .map(|(i, f)| Check::from_witness(format!("LY{}", i + 1), f.as_ref().map(ly_witness)))
        .collect()
}

fn ly_check(l: &LieYamaguti) -> Report {
    let mut checks = ly_axiom_checks(l);
    checks.push(Check::pass("inner_derivations_dim").with_value(json!(inner_derivations(l).span.dim())));
    Report::new(checks)
}

fn ly_derive(a: &StructureAlgebra) -> Report {
    let l = match ly_from_leibniz(a) {
        Ok(l) => l,
        Err(e) => return Report::new(vec![Check::fail("ly_from_leibniz", json!(e.to_string()))]),
    };
    let mut checks = vec![Check::pass("ly_from_leibniz").with_value(ly_json(&l))];
    checks.extend(ly_axiom_checks(&l));
    let bracket_form = ly_from_leibniz_bracket_form(a).map(|b| b == l).unwrap_or(false);
    checks.push(Check::from_witness(
        "bracket_form_agrees",
        (!bracket_form).then(|| json!("-1/4 [x,y].z differs from -1/4 (x.y).z")),
    ));
    let round = ly_envelope_default(&l, DEFAULT_DIM_CAP).and_then(|env| env.induced());
    checks.push(match round {
        Ok(r) if r == l => Check::pass("envelope_round_trip"),
        Ok(r) => Check::fail("envelope_round_trip", json!({"induced": ly_json(&r)})),
        Err(e) => Check::fail("envelope_round_trip", json!(e.to_string())),
    });
    Report::new(checks)
}

fn loop_context(a: StructureAlgebra, s: Rational, mode: &ModeArgs) -> Result<LoopContext, CliError> {
    if mode.float {
        Ok(LoopContext::float(a, s, mode.tol.unwrap_or(DEFAULT_LOOP_TOL)))
    } else {
        Ok(LoopContext::exact(a, s)?)
    }
}

fn loop_value(v: &LoopValue) -> Value {
    json!(v.to_strings())
}

fn loop_eval(a: StructureAlgebra, s: Rational, x: &str, y: &str, mode: &ModeArgs) -> Result<Report, CliError> {
    let (x, y) = (parse_vector(x)?, parse_vector(y)?);
    for v in [&x, &y] {
        if v.len() != a.dim() {
            return Err(leibniz_forge::Error::DimensionMismatch { expected: a.dim(), found: v.len() }.into());
        }
    }
    let ctx = loop_context(a, s, mode)?;
    Ok(Report::new(vec![
        Check::pass("product").with_value(loop_value(&ctx.product(&x, &y)?)),
        Check::pass("left_inverse").with_value(loop_value(&ctx.left_inverse(&x)?)),
        Check::pass("left_divide").with_value(loop_value(&ctx.left_divide(&x, &y)?)),
    ]))
}

fn loop_verify(
    a: StructureAlgebra,
    s: Rational,
    samples: usize,
    seed: u64,
    mode: &ModeArgs,
) -> Result<Report, CliError> {
    let ctx = loop_context(a, s, mode)?;
    let r = loop_property_check(&ctx, samples, seed);
    let witness =
        |p: &str| r.witnesses.iter().find(|w| w.property == p).map(|w| json!({"sample": w.sample, "detail": w.detail}));
    let mut checks: Vec<Check> = ["identity", "left_loop", "left_inverse_property", "al"]
        .iter()
        .map(|p| Check::from_witness(*p, witness(p)))
        .collect();
    checks.push(Check::pass("samples").with_value(json!(r.samples)));
    Ok(Report::new(checks))
}

fn omni(d: usize) -> Result<Report, CliError> {
    if d == 0 {
        return Err(CliError::Semantic("--dim must be positive".into()));
    }
    let (hemi, demi) = omni_algebras(d)?;
    let consistent = hemi.skew_symmetrize().constants() == demi.constants();
    Ok(Report::new(vec![
        Check::pass("omni_leibniz").with_value(algebra_json(&hemi)),
        Check::pass("omni_lie").with_value(algebra_json(&demi)),
        Check::from_witness(
            "skew_symmetrization",
            (!consistent).then(|| json!("omni-Lie is not the skew part of omni-Leibniz")),
        ),
    ]))
}

fn courant_bracket_cmd(x: &Path, y: &Path) -> Result<Report, CliError> {
    let (vx, sx) = parse_section(&read(x)?)?;
    let (vy, sy) = parse_section(&read(y)?)?;
    if vx != vy {
        return Err(CliError::Semantic("sections use different variables".into()));
    }
    Ok(Report::new(vec![
        Check::pass("courant_bracket").with_value(section_json(&courant_bracket(&sx, &sy), &vx)),
        Check::pass("dorfman_product").with_value(section_json(&dorfman_product(&sx, &sy), &vx)),
        Check::pass("pairing").with_value(poly_json(&pairing(&sx, &sy), &vx)),
    ]))
}

fn courant_axioms(vars: Option<usize>, seed: u64, samples: usize, files: &[PathBuf]) -> Result<Report, CliError> {
    let mut names: Option<Vec<String>> = None;
    let mut sections = Vec::new();
    for f in files {
        let (v, s) = parse_section(&read(f)?)?;
        if names.as_ref().is_some_and(|n| *n != v) {
            return Err(CliError::Semantic("sections use different variables".into()));
        }
        names = Some(v);
        sections.push(s);
    }
    let n = match (vars, &names) {
        (Some(n), Some(v)) if n != v.len() => {
            return Err(CliError::Semantic(format!("--vars {n} but the sections have {} variables", v.len())))
        }
        (Some(n), _) => n,
        (None, Some(v)) => v.len(),
        (None, None) => return Err(CliError::Semantic("give --vars or at least one --section".into())),
    };
    if n == 0 {
        return Err(CliError::Semantic("--vars must be positive".into()));
    }
    let all = suite_samples(&sections, &[], n, samples, seed);
    let mut checks: Vec<Check> =
        courant_suite(&all).into_iter().map(|c| Check::from_witness(c.name, c.witness.map(Value::String))).collect();
    checks.push(Check::pass("samples").with_value(json!(all.len())));
    Ok(Report::new(checks))
}

fn courant_graph(file: &Path, seed: u64, samples: usize) -> Result<Report, CliError> {
    let (vars, input) = parse_graph(&read(file)?)?;
    let n = vars.len();
    let forms: Vec<OneForm> = (0..n).map(|i| OneForm::basis(n, i)).collect();
    let fields: Vec<VectorField> = (0..n).map(|i| VectorField::basis(n, i)).collect();
    let (kind, structure_check) = match input {
        GraphInput::Bivector(b) => {
            let jac = jacobiator_of_bivector(&b);
            let value: Vec<Value> =
                jac.iter().map(|((i, j, k), p)| json!([vars[*i], vars[*j], vars[*k], poly_json(p, &vars)])).collect();
            (
                GraphKind::Poisson(b),
                Check::pass("poisson")
                    .with_value(json!(jac.is_empty()))
                    .with_witness_if(!value.is_empty(), json!(value)),
            )
        }
        GraphInput::TwoForm(w) => {
            let dw = d_two_form(&w);
            let value: Vec<Value> =
                dw.iter().map(|((i, j, k), p)| json!([vars[*i], vars[*j], vars[*k], poly_json(p, &vars)])).collect();
            (
                GraphKind::TwoForm(w),
                Check::pass("closed_form")
                    .with_value(json!(dw.is_empty()))
                    .with_witness_if(!value.is_empty(), json!(value)),
            )
        }
    };
    let r = graph_closure_check(&kind, &forms, &fields, samples, seed);
    let witness = r.witness.as_ref().map(|w| {
        json!({
            "x": section_json(&w.x, &vars),
            "y": section_json(&w.y, &vars),
            "bracket": section_json(&w.bracket, &vars),
            "graph_point": section_json(&w.expected, &vars),
        })
    });
    Ok(Report::new(vec![
        structure_check,
        Check::from_witness("graph_closed", witness).with_value(json!({"pairs": r.pairs_checked})),
    ]))
}

trait WitnessIf {
    fn with_witness_if(self, cond: bool, w: Value) -> Self;
}

impl WitnessIf for Check {
    fn with_witness_if(mut self, cond: bool, w: Value) -> Self {
        if cond {
            self.witness = Some(w);
        }
        self
    }
}

fn dispatch(cmd: &Command) -> Result<Report, CliError> {
    match cmd {
        Command::Algebra(AlgebraCmd::Check { file }) => Ok(algebra_check(&load_algebra(file)?)),
        Command::Envelope(EnvelopeCmd::Build { file, ideal }) => envelope_build(&load_algebra(file)?, ideal),
        Command::Envelope(EnvelopeCmd::Verify { file, ideal, s }) => {
            envelope_verify(&load_algebra(file)?, ideal, s.clone())
        }
        Command::Ly(LyCmd::Check { file }) => Ok(ly_check(&parse_ly(&read(file)?)?)),
        Command::Ly(LyCmd::Derive { file }) => Ok(ly_derive(&load_algebra(file)?)),
        Command::Loop(LoopCmd::Eval { algebra, s, x, y, mode }) => {
            loop_eval(load_algebra(algebra)?, s.clone(), x, y, mode)
        }
        Command::Loop(LoopCmd::Verify { algebra, s, samples, seed, mode }) => {
            loop_verify(load_algebra(algebra)?, s.clone(), *samples, *seed, mode)
        }
        Command::Omni { dim } => omni(*dim),
        Command::Courant(CourantCmd::Bracket { x, y }) => courant_bracket_cmd(x, y),
        Command::Courant(CourantCmd::Axioms { vars, seed, samples, sections }) => {
            courant_axioms(*vars, *seed, *samples, sections)
        }
        Command::Courant(CourantCmd::Graph { file, seed, samples }) => courant_graph(file, *seed, *samples),
    }
}

/// Runs a parsed command. Input and precondition errors become a failed
/// `input` check.
pub fn run(cli: &Cli) -> Report {
    let start = Instant::now();
    let mut report = dispatch(&cli.command).unwrap_or_else(|e| Report::error(e.to_string()));
    if cli.timing {
        report.timing_ms = Some(start.elapsed().as_millis() as u64);
    }
    report
}

pub fn render(report: &Report, format: Format) -> String {
    match format {
        Format::Json => report.to_json() + "\n",
        Format::Text => report.to_text(),
    }
}
