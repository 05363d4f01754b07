//! Command-line driver.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::algebra::{serre_element, AlgebraSpec, Element, Kind, NormalWord, Side};
use crate::cli::config::Config;
use crate::cli::parse::parse_element;
use crate::cli::print::format_word;
use crate::cli::verify::{run_suite, SUITES};
use crate::coeffs::Scalar;
use crate::error::Error;
use crate::galois::homotopy_invariant;
use crate::hopf::{antipode, coact, comultiply, counit, TensorElement};

/// Exit status for a successful run.
pub const EXIT_OK: i32 = 0;
/// Exit status when a verification suite finds a counterexample.
pub const EXIT_FAIL: i32 = 1;
/// Exit status for usage, configuration and parse errors.
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "qgalois", version, about = "Exact computations in U, gr U, A_lambda and their twists")]
pub struct Cli {
    /// JSON configuration (defaults to A2, q = 2, lambda_12 = 3).
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    /// Algebra for delta, eps and antipode: U, grU or kG.
    #[arg(long, global = true)]
    pub algebra: Option<String>,
    /// One JSON record per output term.
    #[arg(long, global = true)]
    pub json: bool,
    /// Seed for randomized suites.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Truncation degree for enumerating suites.
    #[arg(long, global = true, default_value_t = 3)]
    pub cap: usize,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Normal form of an expression.
    Nf {
        algebra: String,
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Product of two expressions.
    Mul {
        algebra: String,
        #[arg(allow_hyphen_values = true)]
        left: String,
        #[arg(allow_hyphen_values = true)]
        right: String,
    },
    /// Coproduct.
    Delta {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Coaction of U on Alambda.
    Coact {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Counit.
    Eps {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Antipode.
    Antipode {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Serre element; lambda-weighted in Alambda unless --unweighted.
    Serre {
        algebra: String,
        /// upper or lower
        side: String,
        i: usize,
        j: usize,
        #[arg(long)]
        unweighted: bool,
    },
    /// Run a verification suite (or `all`).
    Verify { suite: String },
    /// Homotopy invariant of the configured Alambda.
    Invariant,
}

fn scalar_json(c: &Scalar) -> (Value, Value) {
    let num = |b: &num_bigint::BigInt| -> Value {
        match i64::try_from(b) {
            Ok(n) => json!(n),
            Err(_) => json!(b.to_string()),
        }
    };
    (num(c.numer()), num(c.denom()))
}

fn word_json(w: &NormalWord) -> Value {
    let one_based = |v: &[usize]| v.iter().map(|i| i + 1).collect::<Vec<_>>();
    json!({ "lower": one_based(&w.lower), "upper": one_based(&w.upper), "torus": w.torus })
}

fn element_lines(e: &Element, spec: &AlgebraSpec, as_json: bool) -> Vec<String> {
    if !as_json {
        return vec![spec.format(e)];
    }
    e.terms()
        .rev()
        .map(|(w, c)| {
            let (num, den) = scalar_json(c);
            let mut v = word_json(w);
            v["num"] = num;
            v["den"] = den;
            v.to_string()
        })
        .collect()
}

fn tensor_lines(t: &TensorElement, as_json: bool) -> Vec<String> {
    let specs = t.specs();
    if as_json {
        return t
            .terms()
            .rev()
            .map(|(ws, c)| {
                let (num, den) = scalar_json(c);
                json!({ "num": num, "den": den, "legs": ws.iter().map(word_json).collect::<Vec<_>>() }).to_string()
            })
            .collect();
    }
    if t.is_zero() {
        return vec!["0".into()];
    }
    let mut out = String::new();
    for (k, (ws, c)) in t.terms().rev().enumerate() {
        let body = ws
            .iter()
            .zip(specs)
            .map(|(w, s)| format_word(w, s.kind()))
            .collect::<Vec<_>>()
            .join(" ⊗ ");
        let a = c.abs();
        let body = if a.is_one() { body } else { format!("{a} {body}") };
        let sign = match (k, c.is_negative()) {
            (0, false) => "",
            (0, true) => "-",
            (_, false) => " + ",
            (_, true) => " - ",
        };
        out.push_str(sign);
        out.push_str(&body);
    }
    vec![out]
}

fn scalar_line(c: &Scalar, as_json: bool) -> String {
    if as_json {
        let (num, den) = scalar_json(c);
        json!({ "num": num, "den": den }).to_string()
    } else {
        c.to_string()
    }
}

struct Session {
    config: Config,
    algebra: Option<String>,
    json: bool,
}

impl Session {
    fn spec(&self, kind: Kind) -> crate::Result<AlgebraSpec> {
        let (c, p) = self.config.resolve()?;
        AlgebraSpec::new(kind, &p, &c)
    }

    fn named(&self, name: &str) -> crate::Result<AlgebraSpec> {
        self.spec(Kind::parse(name)?)
    }

    /// The coalgebra selected by `--algebra`, `U` by default.
    fn coalgebra(&self) -> crate::Result<AlgebraSpec> {
        let kind = match &self.algebra {
            Some(a) => Kind::parse(a)?,
            None => Kind::U,
        };
        if !matches!(kind, Kind::U | Kind::GrU | Kind::GroupAlgebra) {
            return Err(Error::WrongAlgebra(format!("{kind} is not a Hopf algebra")));
        }
        self.spec(kind)
    }
}

fn execute(cli: &Cli, out: &mut dyn Write) -> crate::Result<i32> {
    let config = match &cli.config {
        Some(path) => Config::load(path)?,
        None => Config::default(),
    };
    let session = Session {
        config,
        algebra: cli.algebra.clone(),
        json: cli.json,
    };
    let j = session.json;
    let lines: Vec<String> = match &cli.command {
        Command::Nf { algebra, expr } => {
            let s = session.named(algebra)?;
            element_lines(&parse_element(expr, &s)?, &s, j)
        }
        Command::Mul { algebra, left, right } => {
            let s = session.named(algebra)?;
            let p = s.multiply(&parse_element(left, &s)?, &parse_element(right, &s)?);
            element_lines(&p, &s, j)
        }
        Command::Delta { expr } => {
            let s = session.coalgebra()?;
            tensor_lines(&comultiply(&parse_element(expr, &s)?, &s)?, j)
        }
        Command::Coact { expr } => {
            let s = session.spec(Kind::Alambda)?;
            tensor_lines(&coact(&parse_element(expr, &s)?, &s)?, j)
        }
        Command::Eps { expr } => {
            let s = session.coalgebra()?;
            vec![scalar_line(&counit(&parse_element(expr, &s)?, &s)?, j)]
        }
        Command::Antipode { expr } => {
            let s = session.coalgebra()?;
            element_lines(&antipode(&parse_element(expr, &s)?, &s)?, &s, j)
        }
        Command::Serre {
            algebra,
            side,
            i,
            j: jj,
            unweighted,
        } => {
            let s = session.named(algebra)?;
            let side = match side.to_ascii_lowercase().as_str() {
                "upper" | "e" | "x" => Side::Upper,
                "lower" | "f" | "y" => Side::Lower,
                other => return Err(Error::Config(format!("side must be upper or lower, got '{other}'"))),
            };
            if *i == 0 || *jj == 0 {
                return Err(Error::IndexError("Serre indices are 1-based".into()));
            }
            let weighted = s.kind() == Kind::Alambda && !unweighted;
            element_lines(&serre_element(&s, side, i - 1, jj - 1, weighted)?, &s, j)
        }
        Command::Invariant => {
            let s = session.spec(Kind::Alambda)?;
            let inv = homotopy_invariant(&s)?;
            let t = s.rank();
            let mut lines = Vec::new();
            for a in 0..t {
                for b in a + 1..t {
                    let (u, l) = (&inv.commutators[a][b], &inv.lambda[a][b]);
                    if j {
                        let (un, ud) = scalar_json(u);
                        let (ln, ld) = scalar_json(l);
                        lines.push(
                            json!({ "i": a + 1, "j": b + 1, "u": {"num": un, "den": ud}, "lambda": {"num": ln, "den": ld} })
                                .to_string(),
                        );
                    } else {
                        lines.push(format!("u_{}{} = {u}", a + 1, b + 1));
                        lines.push(format!("lambda_{}{} = {l}", a + 1, b + 1));
                    }
                }
            }
            lines
        }
        Command::Verify { suite } => return verify(&session, suite, cli, out),
    };
    for l in lines {
        writeln!(out, "{l}").map_err(|e| Error::Config(e.to_string()))?;
    }
    Ok(EXIT_OK)
}

fn verify(session: &Session, suite: &str, cli: &Cli, out: &mut dyn Write) -> crate::Result<i32> {
    let (cartan, params) = session.config.resolve()?;
    let names: Vec<&str> = if suite == "all" {
        SUITES.to_vec()
    } else if SUITES.contains(&suite) {
        vec![suite]
    } else {
        return Err(Error::Config(format!(
            "unknown suite '{suite}'; expected one of {} or all",
            SUITES.join(", ")
        )));
    };
    let io = |e: std::io::Error| Error::Config(e.to_string());
    for name in names {
        let mut rng = ChaCha8Rng::seed_from_u64(cli.seed);
        match run_suite(name, &cartan, &params, &mut rng, cli.cap) {
            Ok(n) => {
                if session.json {
                    writeln!(out, "{}", json!({ "suite": name, "pass": true, "checks": n })).map_err(io)?;
                } else {
                    writeln!(out, "{name}: pass ({n} checks)").map_err(io)?;
                }
            }
            Err(msg) => {
                if session.json {
                    writeln!(out, "{}", json!({ "suite": name, "pass": false, "counterexample": msg })).map_err(io)?;
                } else {
                    writeln!(out, "{name}: FAIL").map_err(io)?;
                    writeln!(out, "counterexample: {msg}").map_err(io)?;
                }
                return Ok(EXIT_FAIL);
            }
        }
    }
    Ok(EXIT_OK)
}

/// Parses `args` (including the program name), runs the command and
/// returns the exit status. Errors go to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = if e.use_stderr() {
                write!(err, "{}", e.render())
            } else {
                write!(out, "{}", e.render())
            };
            return code;
        }
    };
    match execute(&cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}
