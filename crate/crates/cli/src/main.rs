//! `noether` command-line entry point.

use std::io::Read;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use noether_cli::examples::EXAMPLES;
use noether_cli::output::{render_json, render_text};
use noether_cli::{parse_script, run, RunReport, ScriptError};

#[derive(Parser)]
#[command(name = "noether", version, about = "Noetherian operators and differential powers in exact arithmetic")]
struct Cli {
    /// Emit the versioned JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Args)]
struct RingArgs {
    /// Ring with its field, e.g. `QQ[x,y]` or `Fp(2)(t)[x]`.
    #[arg(long)]
    ring: String,
    /// Monomial order: lex, grevlex or elim(k).
    #[arg(long)]
    order: Option<String>,
}

#[derive(Args)]
#[group(multiple = false)]
struct PrimeKindArgs {
    /// The prime is the maximal ideal of this rational point.
    #[arg(long, value_name = "POINT")]
    point: Option<String>,
    /// The prime is generated by one monic irreducible univariate polynomial.
    #[arg(long)]
    univariate: bool,
    /// A polynomial outside the prime, used for saturation.
    #[arg(long, value_name = "POLY")]
    witness: Option<String>,
}

#[derive(Args)]
struct PrimeArgs {
    #[command(flatten)]
    ring: RingArgs,
    /// Generators of the prime, comma separated.
    generators: String,
    n: i64,
    #[command(flatten)]
    kind: PrimeKindArgs,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run a script file, or `-` for standard input.
    Run { script: String },
    /// Reduced Groebner basis.
    Gb {
        #[command(flatten)]
        ring: RingArgs,
        generators: String,
    },
    /// Normal form of a polynomial modulo an ideal.
    Nf {
        #[command(flatten)]
        ring: RingArgs,
        poly: String,
        generators: String,
    },
    /// Saturation of an ideal by a polynomial.
    Sat {
        #[command(flatten)]
        ring: RingArgs,
        generators: String,
        by: String,
    },
    /// Intersection of two ideals.
    Intersect {
        #[command(flatten)]
        ring: RingArgs,
        first: String,
        second: String,
    },
    /// Noetherian operators of a primary ideal at a point.
    Noeth {
        #[command(flatten)]
        ring: RingArgs,
        generators: String,
        /// The point, e.g. `(0, 0)`.
        #[arg(long)]
        at: String,
        /// Largest truncation order tried before giving up.
        #[arg(long)]
        bound: Option<u32>,
    },
    /// Symbolic power of a prime.
    Sympow(PrimeArgs),
    /// Differential power of a prime.
    Diffpow {
        #[command(flatten)]
        prime: PrimeArgs,
        #[arg(long, conflicts_with = "classical", required_unless_present = "classical")]
        new: bool,
        #[arg(long)]
        classical: bool,
        /// Ambient hypersurface or variety ideal for `--new` at a point.
        #[arg(long = "mod", value_name = "GENERATORS")]
        modulo: Option<String>,
    },
    /// Compare the symbolic and both differential powers.
    CheckZn(PrimeArgs),
    /// Run the bundled example scripts.
    Examples {
        /// Print the named example instead of running it.
        #[arg(long, value_name = "NAME")]
        show: Option<String>,
    },
}

fn header(r: &RingArgs) -> String {
    match &r.order {
        Some(o) => format!("ring {} order {o};\n", r.ring),
        None => format!("ring {};\n", r.ring),
    }
}

fn prime_script(p: &PrimeArgs) -> String {
    let mut s = header(&p.ring);
    let kind = if let Some(pt) = &p.kind.point {
        s.push_str(&format!("point P = {pt};\n"));
        "point P".to_string()
    } else if p.kind.univariate {
        "univariate".to_string()
    } else if let Some(w) = &p.kind.witness {
        format!("witness {w}")
    } else {
        "general".to_string()
    };
    s.push_str(&format!("prime p = {} : {kind};\n", p.generators));
    s
}

/// Translate a one-shot subcommand into script text.
fn script_for(cmd: &Cmd) -> Result<String, String> {
    Ok(match cmd {
        Cmd::Run { script } => {
            if script == "-" {
                let mut text = String::new();
                std::io::stdin().read_to_string(&mut text).map_err(|e| format!("cannot read standard input: {e}"))?;
                text
            } else {
                std::fs::read_to_string(script).map_err(|e| format!("cannot read {script}: {e}"))?
            }
        }
        Cmd::Gb { ring, generators } => format!("{}ideal I = {generators};\ngb I;\n", header(ring)),
        Cmd::Nf { ring, poly, generators } => format!("{}ideal I = {generators};\nnf {poly} mod I;\n", header(ring)),
        Cmd::Sat { ring, generators, by } => format!("{}ideal I = {generators};\nsat I by {by};\n", header(ring)),
        Cmd::Intersect { ring, first, second } => {
            format!("{}ideal I = {first};\nideal J = {second};\nintersect I J;\n", header(ring))
        }
        Cmd::Noeth { ring, generators, at, bound } => {
            let bound = bound.map(|k| format!(" bound {k}")).unwrap_or_default();
            format!("{}ideal I = {generators};\npoint P = {at};\nnoeth I at P{bound};\n", header(ring))
        }
        Cmd::Sympow(p) => format!("{}sympow p {};\n", prime_script(p), p.n),
        Cmd::Diffpow { prime, new, modulo, .. } => {
            let mut s = prime_script(prime);
            let flag = if *new { "--new" } else { "--classical" };
            match modulo {
                Some(m) => s.push_str(&format!("ideal J = {m};\ndiffpow {flag} p {} mod J;\n", prime.n)),
                None => s.push_str(&format!("diffpow {flag} p {};\n", prime.n)),
            }
            s
        }
        Cmd::CheckZn(p) => format!("{}check-zn p {};\n", prime_script(p), p.n),
        Cmd::Examples { .. } => unreachable!("handled separately"),
    })
}

fn report_parse_error(json: bool, what: &str) -> ExitCode {
    if json {
        println!("{}", serde_json::json!({ "schema": noether_cli::runner::SCHEMA, "error": what, "exit_code": 2 }));
    } else {
        eprintln!("error: {what}");
    }
    ExitCode::from(2)
}

fn emit(json: bool, report: &RunReport) {
    if json {
        println!("{}", render_json(report));
    } else {
        print!("{}", render_text(report));
    }
}

fn run_examples(json: bool) -> ExitCode {
    let mut worst = 0u8;
    let mut reports = Vec::new();
    for ex in EXAMPLES {
        let report = match parse_script(ex.source) {
            Ok(s) => run(&s),
            Err(e) => return report_parse_error(json, &format!("{}: {e}", ex.name)),
        };
        worst = worst.max(report.exit_code);
        if json {
            reports.push(serde_json::json!({ "name": ex.name, "report": report }));
        } else {
            println!("{} {}: {}", if report.exit_code == 0 { "PASS" } else { "FAIL" }, ex.name, ex.summary);
        }
    }
    if json {
        let all = serde_json::json!({ "schema": noether_cli::runner::SCHEMA, "examples": reports, "exit_code": worst });
        println!("{}", serde_json::to_string_pretty(&all).expect("serializes"));
    }
    ExitCode::from(worst)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Cmd::Examples { show } = &cli.command {
        return match show {
            Some(name) => match noether_cli::examples::find(name) {
                Some(ex) => {
                    print!("{}", ex.source);
                    ExitCode::SUCCESS
                }
                None => report_parse_error(cli.json, &format!("no example named `{name}`")),
            },
            None => run_examples(cli.json),
        };
    }
    let text = match script_for(&cli.command) {
        Ok(t) => t,
        Err(e) => return report_parse_error(cli.json, &e),
    };
    let script = match parse_script(&text) {
        Ok(s) => s,
        Err(ScriptError { line, col, message }) => {
            let located = if matches!(cli.command, Cmd::Run { .. }) { format!("line {line}, column {col}: {message}") } else { message };
            return report_parse_error(cli.json, &located);
        }
    };
    let report = run(&script);
    emit(cli.json, &report);
    ExitCode::from(report.exit_code)
}
