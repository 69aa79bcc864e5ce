//! The `hcl` command-line front end. Exit codes: 0 verified or composed,
//! 1 verification false, 2 malformed input, 3 unsupported domain.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde::Serialize;
use serde_json::{json, Value};

use crate::alt::verify_quaternary_composition;
use crate::bqf::{compose_dirichlet, enumerate_class_group, reduce, verify_gauss_identity};
use crate::cubes::{cube_class_compose, dual_cubes_solve, verify_cube_composition};
use crate::error::{Error, Result};
use crate::sym::{cubic_class_compose, verify_cubic_composition, verify_cubic_polarized, verify_pair_composition};
use crate::verify::Verification;
use crate::wire::{parse_bqf, parse_cube, parse_cubic, parse_int, Envelope, Space, WireObject};
use crate::alt::verify_senary_identity;

pub const CUBE_FIXTURE: &str = include_str!("../fixtures/cube_composition.json");
pub const CUBIC_FIXTURE: &str = include_str!("../fixtures/cubic_composition.json");
pub const PAIR_FIXTURE: &str = include_str!("../fixtures/pair_composition.json");
pub const QUATERNARY_FIXTURE: &str = include_str!("../fixtures/quaternary_composition.json");
pub const GAUSS_FIXTURE: &str = include_str!("../fixtures/gauss_lemmermeyer.json");

#[derive(Parser, Debug)]
#[command(name = "hcl", version, about = "Explicit composition identities for Bhargava's higher composition laws")]
pub struct Cli {
    /// Print the report as JSON.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// List class representatives and the composition table.
    Classgroup {
        #[arg(long, short = 'D', allow_hyphen_values = true)]
        discriminant: String,
    },
    /// Compose two classes: `hcl compose bqf '[2,1,6]' '[2,-1,6]'`.
    Compose {
        #[arg(long = "in")]
        input: Option<PathBuf>,
        #[arg(long, short = 'D', allow_hyphen_values = true)]
        discriminant: Option<String>,
        /// bqf, cube or cubic
        space: Option<String>,
        #[arg(allow_hyphen_values = true)]
        objects: Vec<String>,
    },
    /// Verify a composition identity; without --in the bundled worked example is used.
    Verify {
        #[arg(value_enum)]
        law: Law,
        #[arg(long = "in")]
        input: Option<PathBuf>,
        #[arg(long, short = 'D', allow_hyphen_values = true)]
        discriminant: Option<String>,
    },
    /// Solve for cubes dual to three cubes A, B, C.
    Dual {
        #[arg(long = "in")]
        input: Option<PathBuf>,
    },
    /// Replay the four bundled worked examples.
    Examples,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Law {
    Gauss,
    Cube,
    Cubic,
    Pair,
    Quat,
    Senary,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Outcome {
    Ok,
    Failed,
    Malformed,
    Unsupported,
}

impl Outcome {
    pub fn exit_code(self) -> i32 {
        match self {
            Outcome::Ok => 0,
            Outcome::Failed => 1,
            Outcome::Malformed => 2,
            Outcome::Unsupported => 3,
        }
    }

    fn of_error(e: &Error) -> Outcome {
        match e {
            Error::Unsupported(_) => Outcome::Unsupported,
            Error::NotComposable(_) => Outcome::Failed,
            _ => Outcome::Malformed,
        }
    }
}

/// The result of one command.
#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub command: String,
    pub outcome: Outcome,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub reasons: Vec<String>,
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub artifacts: BTreeMap<String, Value>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub verifications: Vec<Verification>,
}

impl Report {
    fn new(command: &str) -> Self {
        Report {
            command: command.into(),
            outcome: Outcome::Ok,
            reasons: Vec::new(),
            artifacts: BTreeMap::new(),
            verifications: Vec::new(),
        }
    }

    fn error(command: &str, e: &Error) -> Self {
        let mut r = Report::new(command);
        r.outcome = Outcome::of_error(e);
        r.reasons.push(e.to_string());
        r
    }

    fn add_verification(&mut self, v: Verification) {
        if !v.holds() {
            self.outcome = Outcome::Failed;
            self.reasons.extend(v.failures().map(|c| match &c.detail {
                Some(d) => format!("{} law: {} ({d})", v.law, c.name),
                None => format!("{} law: {}", v.law, c.name),
            }));
        }
        self.verifications.push(v);
    }

    fn artifact(&mut self, key: &str, value: Value) {
        self.artifacts.insert(key.into(), value);
    }

    fn render_text(&self) -> String {
        let mut out = String::new();
        let verdict = match self.outcome {
            Outcome::Ok => "ok",
            Outcome::Failed => "FAILED",
            Outcome::Malformed => "malformed input",
            Outcome::Unsupported => "unsupported",
        };
        out.push_str(&format!("{}: {verdict}\n", self.command));
        for (k, v) in &self.artifacts {
            out.push_str(&format!("{k}: {}\n", render_value(v)));
        }
        for v in &self.verifications {
            out.push_str(&v.to_string());
            if !out.ends_with('\n') {
                out.push('\n');
            }
        }
        for r in &self.reasons {
            out.push_str(&format!("reason: {r}\n"));
        }
        out
    }
}

fn render_value(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(xs) if xs.iter().all(|x| !x.is_object()) => {
            format!("[{}]", xs.iter().map(render_value).collect::<Vec<_>>().join(", "))
        }
        other => other.to_string(),
    }
}

/// Parses the arguments, runs the command and writes the report to `out`.
/// Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { Outcome::Malformed.exit_code() } else { 0 };
            let _ = write!(out, "{e}");
            return code;
        }
    };
    let start = Instant::now();
    let report = execute(&cli.command);
    let text = if cli.json {
        serde_json::to_string_pretty(&report).expect("report serialises") + "\n"
    } else {
        format!("{}({:.1} ms)\n", report.render_text(), start.elapsed().as_secs_f64() * 1e3)
    };
    let _ = out.write_all(text.as_bytes());
    report.outcome.exit_code()
}

pub fn execute(command: &Command) -> Report {
    match command {
        Command::Classgroup { discriminant } => guard("classgroup", || cmd_classgroup(discriminant)),
        Command::Compose { input, discriminant, space, objects } => {
            guard("compose", || cmd_compose(input.as_ref(), discriminant.as_deref(), space.as_deref(), objects))
        }
        Command::Verify { law, input, discriminant } => {
            guard("verify", || cmd_verify(*law, input.as_ref(), discriminant.as_deref()))
        }
        Command::Dual { input } => guard("dual", || cmd_dual(input.as_ref())),
        Command::Examples => cmd_examples(),
    }
}

fn guard(name: &str, f: impl FnOnce() -> Result<Report>) -> Report {
    f().unwrap_or_else(|e| Report::error(name, &e))
}

fn parse_disc(s: &str) -> Result<BigInt> {
    parse_int(&Value::String(s.into()))
}

fn read_envelope(path: &PathBuf) -> Result<Envelope> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    Envelope::parse(&text)
}

fn ints(xs: &[BigInt]) -> Value {
    Value::Array(xs.iter().map(|x| Value::String(x.to_string())).collect())
}

pub fn cmd_classgroup(d: &str) -> Result<Report> {
    let d = parse_disc(d)?;
    let g = enumerate_class_group(&d)?;
    g.check_axioms().map_err(Error::Invalid)?;
    let mut r = Report::new("classgroup");
    r.artifact("discriminant", Value::String(d.to_string()));
    r.artifact("order", json!(g.order()));
    if d < BigInt::from(0) {
        r.artifact("positive_definite", json!(g.positive_definite_count()));
    }
    r.artifact("representatives", Value::Array(g.representatives.iter().map(|q| ints(&q.coeffs())).collect()));
    r.artifact("table", json!(g.table));
    Ok(r)
}

fn check_declared(declared: Option<&BigInt>, actual: &BigInt) -> Result<()> {
    match declared {
        Some(d) if d != actual => Err(Error::DiscriminantMismatch(d.clone(), actual.clone())),
        _ => Ok(()),
    }
}

pub fn cmd_compose(
    input: Option<&PathBuf>,
    discriminant: Option<&str>,
    space: Option<&str>,
    objects: &[String],
) -> Result<Report> {
    let env = match input {
        Some(p) => read_envelope(p)?,
        None => {
            let space: Space = space.ok_or_else(|| Error::Parse("compose needs --in or a space and two objects".into()))?.parse()?;
            let values = objects
                .iter()
                .map(|o| serde_json::from_str(o).map_err(|e| Error::Parse(format!("{o}: {e}"))))
                .collect::<Result<Vec<Value>>>()?;
            Envelope { space, discriminant: None, objects: values }
        }
    };
    let declared = match discriminant {
        Some(s) => Some(parse_disc(s)?),
        None => env.discriminant()?,
    };
    if env.objects.len() != 2 {
        return Err(Error::Parse(format!("compose takes two objects, found {}", env.objects.len())));
    }
    let mut r = Report::new("compose");
    let (d, result) = match env.space {
        Space::Bqf => {
            let (p, q) = (parse_bqf(&env.objects[0])?, parse_bqf(&env.objects[1])?);
            let c = reduce(&compose_dirichlet(&p, &q)?)?.form;
            (p.disc(), WireObject::Bqf(c))
        }
        Space::Cube => {
            let (a, b) = (parse_cube(&env.objects[0])?, parse_cube(&env.objects[1])?);
            (a.disc(), WireObject::Cube(cube_class_compose(&a, &b)?))
        }
        Space::Cubic => {
            let (f, g) = (parse_cubic(&env.objects[0])?, parse_cubic(&env.objects[1])?);
            (f.disc(), WireObject::Cubic(cubic_class_compose(&f, &g)?))
        }
        other => return Err(Error::Unsupported(format!("composition in the {other} space"))),
    };
    check_declared(declared.as_ref(), &d)?;
    r.artifact("discriminant", Value::String(d.to_string()));
    r.artifact("result", result.to_value());
    Ok(r)
}

fn default_payload(law: Law) -> Option<&'static str> {
    match law {
        Law::Gauss => Some(GAUSS_FIXTURE),
        Law::Cube => Some(CUBE_FIXTURE),
        Law::Cubic => Some(CUBIC_FIXTURE),
        Law::Pair => Some(PAIR_FIXTURE),
        Law::Quat => Some(QUATERNARY_FIXTURE),
        Law::Senary => None,
    }
}

/// Runs one law on a parsed payload.
pub fn verify_envelope(law: Law, env: &Envelope) -> Result<Verification> {
    let expected = match law {
        Law::Gauss => Space::Gauss,
        Law::Cube => Space::Cube,
        Law::Cubic => Space::Cubic,
        Law::Pair => Space::Pair,
        Law::Quat => Space::Quaternary,
        Law::Senary => Space::Senary,
    };
    if env.space != expected {
        return Err(Error::Parse(format!("payload space is {}, expected {expected}", env.space)));
    }
    let declared = env.discriminant()?;
    let mut v = match law {
        Law::Gauss => {
            let ([q1, q2, q3], data) = env.gauss()?;
            verify_gauss_identity(&q1, &q2, &q3, &data)
        }
        Law::Cube => {
            let c = env.cubes(6)?;
            if c.len() != 6 {
                return Err(Error::Parse("cube payload is A, B, C, R, S, T".into()));
            }
            verify_cube_composition(&c[0], &c[1], &c[2], &c[3], &c[4], &c[5])
        }
        Law::Cubic => {
            let ([f, g, h], r) = env.cubic_payload()?;
            let mut v = verify_cubic_composition(&f, &g, &h, &r);
            if v.holds() {
                v.absorb("polarized", verify_cubic_polarized(&f, &g, &h, &r));
            }
            v
        }
        Law::Pair => {
            let ([f, g, h], [r, s]) = env.pair_payload()?;
            verify_pair_composition(&f, &g, &h, &r, &s)
        }
        Law::Quat => {
            let c = env.cubes(6)?;
            if c.len() != 6 {
                return Err(Error::Parse("quaternary payload is A, B, C, R, S, T".into()));
            }
            verify_quaternary_composition(&c[0], &c[1], &c[2], &c[3], &c[4], &c[5])?
        }
        Law::Senary => {
            let d = declared.clone().ok_or_else(|| Error::Parse("senary verification needs a discriminant".into()))?;
            verify_senary_identity(&d)?
        }
    };
    if let (Some(d), Law::Gauss | Law::Cube | Law::Cubic | Law::Pair | Law::Quat) = (&declared, law) {
        let actual = match law {
            Law::Gauss => env.gauss()?.0[0].disc(),
            Law::Cubic => env.cubic_payload()?.0[0].disc(),
            Law::Pair => env.pair_payload()?.0[0].disc(),
            _ => env.cubes(1)?[0].disc(),
        };
        v.check_eq("declared discriminant", &actual, d);
    }
    Ok(v)
}

pub fn cmd_verify(law: Law, input: Option<&PathBuf>, discriminant: Option<&str>) -> Result<Report> {
    let mut env = match (input, default_payload(law)) {
        (Some(p), _) => read_envelope(p)?,
        (None, Some(text)) => Envelope::parse(text)?,
        (None, None) => Envelope { space: Space::Senary, discriminant: None, objects: Vec::new() },
    };
    if let Some(d) = discriminant {
        parse_disc(d)?;
        if law == Law::Senary {
            env.discriminant = Some(d.to_string());
        }
    }
    let mut r = Report::new("verify");
    r.artifact("law", Value::String(format!("{law:?}").to_lowercase()));
    if let Some(d) = &env.discriminant {
        r.artifact("discriminant", Value::String(d.clone()));
    }
    r.add_verification(verify_envelope(law, &env)?);
    Ok(r)
}

pub fn cmd_dual(input: Option<&PathBuf>) -> Result<Report> {
    let env = match input {
        Some(p) => read_envelope(p)?,
        None => Envelope::parse(CUBE_FIXTURE)?,
    };
    let c = env.cubes(3)?;
    let (a, b, cc) = (&c[0], &c[1], &c[2]);
    let w = dual_cubes_solve(a, b, cc)?;
    let mut r = Report::new("dual");
    r.artifact("R", ints(w.r.coeffs()));
    r.artifact("S", ints(w.s.coeffs()));
    r.artifact("T", ints(w.t.coeffs()));
    r.add_verification(verify_cube_composition(a, b, cc, &w.r, &w.s, &w.t));
    r.add_verification(w.duality(a, b, cc));
    Ok(r)
}

pub fn cmd_examples() -> Report {
    let mut r = Report::new("examples");
    let cases = [
        ("cube", Law::Cube, CUBE_FIXTURE),
        ("cubic", Law::Cubic, CUBIC_FIXTURE),
        ("pair", Law::Pair, PAIR_FIXTURE),
        ("quaternary", Law::Quat, QUATERNARY_FIXTURE),
    ];
    let mut passed = 0;
    for (name, law, text) in cases {
        match Envelope::parse(text).and_then(|env| verify_envelope(law, &env)) {
            Ok(v) => {
                passed += usize::from(v.holds());
                r.add_verification(v);
            }
            Err(e) => {
                r.outcome = Outcome::Failed;
                r.reasons.push(format!("{name}: {e}"));
            }
        }
    }
    r.artifact("passed", Value::String(format!("{passed}/{}", cases.len())));
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (i32, String) {
        let mut buf = Vec::new();
        let code = run(std::iter::once("hcl").chain(args.iter().copied()), &mut buf);
        (code, String::from_utf8(buf).unwrap())
    }

    #[test]
    fn classgroup_exit_codes() {
        assert_eq!(run_args(&["classgroup", "-D", "-47"]).0, 0);
        assert_eq!(run_args(&["classgroup", "--discriminant", "7"]).0, 2);
    }

    #[test]
    fn compose_inverse_classes() {
        let (code, out) = run_args(&["--json", "compose", "bqf", "[2,1,6]", "[2,-1,6]"]);
        assert_eq!(code, 0, "{out}");
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["artifacts"]["result"], json!(["1", "1", "12"]));
    }

    #[test]
    fn bundled_payloads_verify() {
        for law in ["gauss", "cube", "cubic", "pair", "quat"] {
            let (code, out) = run_args(&["verify", law]);
            assert_eq!(code, 0, "{law}: {out}");
        }
        assert_eq!(run_args(&["verify", "senary", "-D", "-4"]).0, 0);
    }

    #[test]
    fn examples_all_pass() {
        let (code, out) = run_args(&["examples"]);
        assert_eq!(code, 0);
        assert!(out.contains("passed: 4/4"), "{out}");
    }
}
