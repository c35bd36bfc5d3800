//! Plain-text rendering of a [`RunReport`].

use std::fmt::Write;

use crate::runner::{ChainOut, CommandResult, PowerOut, RunReport, Value};

fn ideal_text(gens: &[String]) -> String {
    if gens.is_empty() { "(0)".to_string() } else { format!("({})", gens.join(", ")) }
}

fn power_text(p: &PowerOut) -> String {
    match p.status {
        "ideal" => ideal_text(p.generators.as_deref().unwrap_or_default()),
        "predicate" => "membership predicate only".to_string(),
        _ => format!("unavailable ({})", p.reason.as_deref().unwrap_or("no reason given")),
    }
}

fn chain_text(out: &mut String, c: &ChainOut) {
    let _ = writeln!(out, "  symbolic:       {}", power_text(&c.symbolic));
    let _ = writeln!(out, "  new_diff:       {}", power_text(&c.new_diff));
    let _ = writeln!(out, "  classical_diff: {}", power_text(&c.classical_diff));
    for cmp in &c.comparisons {
        let relation = match cmp.equal {
            Some(true) => "=",
            Some(false) => "strictly inside",
            None => "inside",
        };
        let _ = write!(out, "  {} {} {}", cmp.smaller, if cmp.included { relation } else { "NOT inside" }, cmp.larger);
        if let Some(w) = &cmp.witness {
            let _ = write!(out, " (witness {w})");
        }
        if let Some(d) = cmp.checked_up_to_degree {
            let _ = write!(out, " [checked through degree {d}]");
        }
        out.push('\n');
    }
    if let Some(s) = c.separable {
        let _ = writeln!(out, "  separable: {}", if s { "yes" } else { "no" });
    }
    let _ = writeln!(out, "  consistent with theorem: {}", if c.consistent_with_theorem { "yes" } else { "no" });
    let _ = writeln!(out, "  verdict: {}", c.verdict);
}

fn result_text(out: &mut String, r: &CommandResult) {
    let prefix = match &r.binds {
        Some(name) => format!("{name} = "),
        None => String::new(),
    };
    let _ = write!(out, "[{}] {}\n  ", r.line, r.command);
    if let Some(e) = &r.error {
        let _ = writeln!(out, "error ({}): {}", e.kind.name(), e.message);
        return;
    }
    match r.value.as_ref() {
        Some(Value::Ideal { generators }) => {
            let _ = writeln!(out, "{prefix}{}", ideal_text(generators));
        }
        Some(Value::NormalForm { polynomial }) => {
            let _ = writeln!(out, "{polynomial}");
        }
        Some(Value::Operators(ops)) => {
            let _ = writeln!(out, "point {}, colength {}, order {}", ops.point, ops.colength, ops.truncation_order);
            for op in &ops.operators_text {
                let _ = writeln!(out, "    {op}");
            }
            if let Some(w) = &ops.witness_outside_ideal {
                let _ = writeln!(out, "  witness outside ideal: {w}");
            }
        }
        Some(Value::Chain(c)) => {
            let _ = writeln!(out, "n = {}", c.n);
            chain_text(out, c);
        }
        Some(Value::Assertion { passed, detail }) => {
            let _ = writeln!(out, "{}: {detail}", if *passed { "ok" } else { "FAILED" });
        }
        None => out.push('\n'),
    }
}

pub fn render_text(report: &RunReport) -> String {
    let mut out = format!("ring {}\n", report.ring);
    for r in &report.results {
        result_text(&mut out, r);
    }
    let _ = writeln!(out, "exit code {}", report.exit_code);
    out
}

pub fn render_json(report: &RunReport) -> String {
    serde_json::to_string_pretty(report).expect("report serializes")
}
