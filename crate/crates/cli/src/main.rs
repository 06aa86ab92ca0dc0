//! `pglspec`: primitive prime divisors, spectra and prime graphs of
//! `PGL(2,q)` from the command line.

mod commands;
mod output;

use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use pgl_spectra::numtheory::{FactorConfig, Nat, DEFAULT_RHO_BUDGET, DEFAULT_SEED, DEFAULT_TRIAL_BOUND};
use pgl_spectra::verify::LEMMA1_DEFAULT_N_MAX;

use output::{render, OutputDocument, Status, SCHEMA_VERSION};

#[derive(Debug, Parser)]
#[command(name = "pglspec", version, about = "Spectra and prime graphs of PGL(2,q) and friends")]
struct Cli {
    /// Emit a JSON document instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Seed for Pollard-rho restarts and subgroup searches.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Pollard-rho iteration budget per factorization.
    #[arg(long, global = true, default_value_t = DEFAULT_RHO_BUDGET)]
    budget: u64,
    /// Size cap: partition degree for sym/alt, field size for oracle.
    #[arg(long, global = true)]
    cap: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Pgl2,
    Psl2,
    Sym,
    Alt,
    Metacyclic,
    F4psi,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OracleFamily {
    Pgl2,
    Psl2,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum WitnessGroup {
    /// Binary octahedral 2.S4 (48 elements).
    #[value(name = "2s4")]
    BinaryOctahedral,
    /// Binary tetrahedral SL(2,3) (24 elements).
    #[value(name = "sl23")]
    BinaryTetrahedral,
}

fn parse_nat(s: &str) -> Result<Nat, String> {
    s.parse::<Nat>().map_err(|e| format!("not a nonnegative integer: {e}"))
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Primitive prime divisors of a^n - 1.
    Ppd {
        #[arg(value_parser = parse_nat)]
        a: Nat,
        n: u32,
        /// One line per i in 1..=n.
        #[arg(long)]
        upto: bool,
    },
    /// Whether a^n - 1 has a primitive prime divisor above q.
    PpdAbove {
        #[arg(value_parser = parse_nat)]
        a: Nat,
        n: u32,
        q: u64,
    },
    /// Prime factorization.
    Factor {
        #[arg(value_parser = parse_nat)]
        n: Nat,
    },
    /// Maximal element orders. Arguments: pgl2/psl2 P N, sym/alt N,
    /// metacyclic M N K, f4psi E.
    Mu {
        family: Family,
        #[arg(required = true)]
        args: Vec<String>,
    },
    /// All element orders; arguments as for `mu`.
    Omega {
        family: Family,
        #[arg(required = true)]
        args: Vec<String>,
    },
    /// Prime graph of the spectrum; arguments as for `mu`.
    Graph {
        family: Family,
        #[arg(required = true)]
        args: Vec<String>,
        /// Graphviz output.
        #[arg(long)]
        dot: bool,
    },
    /// Brute-force spectrum over GF(p^n) compared with the closed form.
    Oracle {
        family: OracleFamily,
        p: u64,
        n: u32,
    },
    /// Solutions of p^m = q^n + 1 up to a bound.
    Catalan { bound: u64 },
    /// Run a verification suite.
    Verify {
        #[command(subcommand)]
        suite: Suite,
    },
    /// Row of the C_pp table for a prime 2^a 3^b + 1.
    Table2 {
        #[arg(value_parser = parse_nat)]
        p: Nat,
    },
    /// Seeded search for a subgroup of SL(2,7).
    Witness { group: WitnessGroup },
}

#[derive(Debug, Subcommand)]
enum Suite {
    /// Primitive prime divisor table for p in {7, 13, 17}.
    Table1,
    /// Large primitive divisors past a threshold.
    Lemma1 {
        #[arg(long, default_value_t = LEMMA1_DEFAULT_N_MAX)]
        n_max: u32,
    },
    /// Solutions of p^m = q^n + 1.
    Lemma2 {
        #[arg(long, default_value_t = commands::LEMMA2_DEFAULT_BOUND)]
        bound: u64,
    },
    /// Factorizations and prime sets quoted in the classification.
    Cases,
    /// Component structure of the prime graph of PGL(2,p^n).
    Pgl2 {
        #[arg(value_parser = parse_nat)]
        p: Nat,
        n: u32,
    },
    /// Every suite with default parameters.
    All,
}

impl Command {
    fn name(&self) -> String {
        match self {
            Command::Ppd { .. } => "ppd".into(),
            Command::PpdAbove { .. } => "ppd-above".into(),
            Command::Factor { .. } => "factor".into(),
            Command::Mu { .. } => "mu".into(),
            Command::Omega { .. } => "omega".into(),
            Command::Graph { .. } => "graph".into(),
            Command::Oracle { .. } => "oracle".into(),
            Command::Catalan { .. } => "catalan".into(),
            Command::Verify { suite } => format!("verify {}", suite.name()),
            Command::Table2 { .. } => "table2".into(),
            Command::Witness { .. } => "witness".into(),
        }
    }

    fn inputs(&self, cli: &Cli) -> Value {
        let mut v = match self {
            Command::Ppd { a, n, upto } => json!({"a": a.to_string(), "n": n, "upto": upto}),
            Command::PpdAbove { a, n, q } => json!({"a": a.to_string(), "n": n, "q": q}),
            Command::Factor { n } => json!({"n": n.to_string()}),
            Command::Mu { family, args } | Command::Omega { family, args } => {
                json!({"family": family_name(*family), "args": args})
            }
            Command::Graph { family, args, dot } => {
                json!({"family": family_name(*family), "args": args, "dot": dot})
            }
            Command::Oracle { family, p, n } => {
                json!({"family": oracle_name(*family), "p": p, "n": n})
            }
            Command::Catalan { bound } => json!({"bound": bound}),
            Command::Verify { suite } => match suite {
                Suite::Lemma1 { n_max } => json!({"n_max": n_max}),
                Suite::Lemma2 { bound } => json!({"bound": bound}),
                Suite::Pgl2 { p, n } => json!({"p": p.to_string(), "n": n}),
                Suite::Table1 | Suite::Cases | Suite::All => json!({}),
            },
            Command::Table2 { p } => json!({"p": p.to_string()}),
            Command::Witness { group } => json!({"group": witness_name(*group)}),
        };
        let obj = v.as_object_mut().expect("inputs are an object");
        obj.insert("seed".into(), json!(cli.seed));
        obj.insert("budget".into(), json!(cli.budget));
        obj.insert("cap".into(), json!(cli.cap));
        v
    }
}

impl Suite {
    fn name(&self) -> &'static str {
        match self {
            Suite::Table1 => "table1",
            Suite::Lemma1 { .. } => "lemma1",
            Suite::Lemma2 { .. } => "lemma2",
            Suite::Cases => "cases",
            Suite::Pgl2 { .. } => "pgl2",
            Suite::All => "all",
        }
    }
}

pub fn family_name(f: Family) -> &'static str {
    match f {
        Family::Pgl2 => "pgl2",
        Family::Psl2 => "psl2",
        Family::Sym => "sym",
        Family::Alt => "alt",
        Family::Metacyclic => "metacyclic",
        Family::F4psi => "f4psi",
    }
}

fn oracle_name(f: OracleFamily) -> &'static str {
    match f {
        OracleFamily::Pgl2 => "pgl2",
        OracleFamily::Psl2 => "psl2",
    }
}

fn witness_name(g: WitnessGroup) -> &'static str {
    match g {
        WitnessGroup::BinaryOctahedral => "2s4",
        WitnessGroup::BinaryTetrahedral => "sl23",
    }
}

fn run(cli: &Cli) -> pgl_spectra::Result<output::Outcome> {
    let cfg = FactorConfig {
        trial_bound: DEFAULT_TRIAL_BOUND,
        rho_budget: cli.budget,
        seed: cli.seed,
    };
    match &cli.command {
        Command::Ppd { a, n, upto } => commands::ppd(a, *n, *upto, &cfg),
        Command::PpdAbove { a, n, q } => commands::ppd_above(a, *n, *q),
        Command::Factor { n } => commands::factor(n, &cfg),
        Command::Mu { family, args } => commands::spectrum(*family, args, cli.cap, false),
        Command::Omega { family, args } => commands::spectrum(*family, args, cli.cap, true),
        Command::Graph { family, args, dot } => commands::graph(*family, args, cli.cap, *dot),
        Command::Oracle { family, p, n } => commands::oracle(*family, *p, *n, cli.cap),
        Command::Catalan { bound } => commands::catalan(*bound),
        Command::Verify { suite } => match suite {
            Suite::Table1 => commands::verify_table1(&cfg),
            Suite::Lemma1 { n_max } => commands::verify_lemma1(*n_max),
            Suite::Lemma2 { bound } => commands::verify_lemma2(*bound),
            Suite::Cases => commands::verify_cases(),
            Suite::Pgl2 { p, n } => commands::verify_pgl2(p, *n),
            Suite::All => commands::verify_all(&cfg),
        },
        Command::Table2 { p } => commands::table2(p),
        Command::Witness { group } => commands::witness(*group, cli.seed),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let command = cli.command.name();
    let inputs = cli.command.inputs(&cli);
    let (result, text, diagnostics, status) = match run(&cli) {
        Ok(out) => (out.result, out.text, out.diagnostics, out.status),
        Err(e) => {
            let status = Status::for_error(&e);
            (Value::Null, String::new(), vec![format!("error: {e}")], status)
        }
    };
    let stdout = std::io::stdout();
    let mut stdout = stdout.lock();
    if cli.json {
        let doc = OutputDocument {
            schema_version: SCHEMA_VERSION,
            command: &command,
            inputs: &inputs,
            result: &result,
            diagnostics: &diagnostics,
        };
        let _ = stdout.write_all(render(&doc).as_bytes());
    } else {
        let _ = stdout.write_all(text.as_bytes());
        for d in &diagnostics {
            eprintln!("{d}");
        }
    }
    ExitCode::from(status as u8)
}
