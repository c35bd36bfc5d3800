//! Executes a parsed script against the library and collects a report.

use std::collections::HashMap;

use noether::dualspace::{default_safety_bound, noetherian_operators, NoetherianOperators};
use noether::powers::{chain_check, diff_power_classical, diff_power_new, symbolic_power, ChainReport, PowerValue};
use noether::weyl::OpTerm;
use noether::{Ideal, Point, Polynomial, PrimeData};
use serde::Serialize;

use crate::error::FailureKind;
use crate::script::{Command, DiffPowKind, Script, Statement};

/// JSON layout version.
pub const SCHEMA: u32 = 1;

#[derive(Clone, Debug, Serialize)]
pub struct RunReport {
    pub schema: u32,
    pub ring: String,
    pub results: Vec<CommandResult>,
    pub exit_code: u8,
}

#[derive(Clone, Debug, Serialize)]
pub struct CommandResult {
    pub line: usize,
    pub command: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub binds: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub value: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<Failure>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Failure {
    pub kind: FailureKind,
    pub message: String,
}

#[derive(Clone, Debug, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Value {
    Ideal { generators: Vec<String> },
    NormalForm { polynomial: String },
    Operators(OperatorsOut),
    Chain(ChainOut),
    Assertion { passed: bool, detail: String },
}

#[derive(Clone, Debug, Serialize)]
pub struct OperatorsOut {
    pub point: String,
    pub colength: usize,
    pub truncation_order: u32,
    pub operators: Vec<Vec<OpTerm>>,
    pub operators_text: Vec<String>,
    pub witness_outside_ideal: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct PowerOut {
    pub status: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub generators: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ComparisonOut {
    pub smaller: &'static str,
    pub larger: &'static str,
    pub included: bool,
    pub equal: Option<bool>,
    pub witness: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub checked_up_to_degree: Option<u32>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ChainOut {
    pub n: u32,
    pub symbolic: PowerOut,
    pub new_diff: PowerOut,
    pub classical_diff: PowerOut,
    pub comparisons: Vec<ComparisonOut>,
    pub separable: Option<bool>,
    pub expected_equalities: Vec<[&'static str; 2]>,
    pub consistent_with_theorem: bool,
    pub verdict: &'static str,
}

/// Reduced Groebner basis as strings, ascending by leading monomial.
pub fn ideal_generators(i: &Ideal) -> Vec<String> {
    i.groebner_basis().iter().map(|g| g.to_string()).collect()
}

fn power_out(v: &PowerValue) -> PowerOut {
    match v {
        PowerValue::Ideal(i) => PowerOut { status: "ideal", generators: Some(ideal_generators(i)), reason: None },
        PowerValue::Predicate => PowerOut { status: "predicate", generators: None, reason: None },
        PowerValue::Unavailable(why) => PowerOut { status: "unavailable", generators: None, reason: Some(why.clone()) },
    }
}

/// `violation` if an inclusion fails, `all-equal` if every comparison is an
/// equality, `strict` if some inclusion is proper, otherwise `partial`.
pub fn verdict(rep: &ChainReport) -> &'static str {
    if rep.comparisons.iter().any(|c| !c.included) {
        "violation"
    } else if !rep.comparisons.is_empty() && rep.comparisons.iter().all(|c| c.equal == Some(true)) {
        "all-equal"
    } else if rep.comparisons.iter().any(|c| c.equal == Some(false)) {
        "strict"
    } else {
        "partial"
    }
}

fn chain_out(rep: &ChainReport) -> ChainOut {
    ChainOut {
        n: rep.n,
        symbolic: power_out(&rep.symbolic),
        new_diff: power_out(&rep.new_diff),
        classical_diff: power_out(&rep.classical_diff),
        comparisons: rep
            .comparisons
            .iter()
            .map(|c| ComparisonOut {
                smaller: c.smaller.name(),
                larger: c.larger.name(),
                included: c.included,
                equal: c.equal,
                witness: c.witness.as_ref().map(|w| w.to_string()),
                checked_up_to_degree: c.checked_up_to_degree,
            })
            .collect(),
        separable: rep.separable,
        expected_equalities: rep.expected_equalities.iter().map(|(a, b)| [a.name(), b.name()]).collect(),
        consistent_with_theorem: rep.consistent_with_theorem,
        verdict: verdict(rep),
    }
}

fn operators_out(rep: &NoetherianOperators) -> OperatorsOut {
    OperatorsOut {
        point: rep.point.to_string(),
        colength: rep.colength,
        truncation_order: rep.truncation_order,
        operators: rep.operators.iter().map(|d| d.to_json_terms()).collect(),
        operators_text: rep.operators.iter().map(|d| d.to_string()).collect(),
        witness_outside_ideal: rep.witness_outside_ideal.as_ref().map(|w| w.to_string()),
    }
}

enum Binding {
    Ideal(Ideal),
    Point(Point),
    Prime(PrimeData),
    /// A `let` whose command failed.
    Failed(FailureKind, String),
}

struct Env {
    names: HashMap<String, Binding>,
}

type Step<T> = Result<T, Failure>;

fn fail(err: noether::Error) -> Failure {
    Failure { kind: FailureKind::of(&err), message: err.to_string() }
}

impl Env {
    fn ideal(&self, name: &str) -> Step<Ideal> {
        match self.names.get(name) {
            Some(Binding::Ideal(i)) => Ok(i.clone()),
            Some(Binding::Prime(p)) => Ok(p.ideal().clone()),
            Some(Binding::Failed(kind, why)) => Err(Failure { kind: *kind, message: format!("`{name}` is unavailable: {why}") }),
            _ => unreachable!("checked when the script was parsed"),
        }
    }

    fn point(&self, name: &str) -> Point {
        match self.names.get(name) {
            Some(Binding::Point(p)) => p.clone(),
            _ => unreachable!("checked when the script was parsed"),
        }
    }

    fn prime(&self, name: &str) -> &PrimeData {
        match self.names.get(name) {
            Some(Binding::Prime(p)) => p,
            _ => unreachable!("checked when the script was parsed"),
        }
    }

    /// Ideal-valued commands also return the ideal so `let` can bind it.
    fn exec(&self, cmd: &Command) -> Step<(Value, Option<Ideal>)> {
        let ideal_value = |i: Ideal| (Value::Ideal { generators: ideal_generators(&i) }, Some(i));
        let plain = |v: Value| (v, None);
        match cmd {
            Command::Gb(i) => Ok(ideal_value(self.ideal(i)?)),
            Command::Nf { poly, ideal } => {
                let nf = self.ideal(ideal)?.normal_form(poly).map_err(fail)?;
                Ok(plain(Value::NormalForm { polynomial: nf.to_string() }))
            }
            Command::Sat { ideal, by } => Ok(ideal_value(self.ideal(ideal)?.saturate(by).map_err(fail)?)),
            Command::Intersect(a, b) => Ok(ideal_value(self.ideal(a)?.intersect(&self.ideal(b)?).map_err(fail)?)),
            Command::Sum(a, b) => Ok(ideal_value(self.ideal(a)?.sum(&self.ideal(b)?).map_err(fail)?)),
            Command::Power { ideal, n } => Ok(ideal_value(self.ideal(ideal)?.power(*n).map_err(fail)?)),
            Command::Noeth { ideal, point, bound } => {
                let i = self.ideal(ideal)?;
                let bound = bound.unwrap_or_else(|| default_safety_bound(&i));
                let rep = noetherian_operators(&i, &self.point(point), bound).map_err(fail)?;
                Ok(plain(Value::Operators(operators_out(&rep))))
            }
            Command::SymPow { prime, n } => Ok(ideal_value(symbolic_power(self.prime(prime), *n).map_err(fail)?)),
            Command::DiffPow { kind: DiffPowKind::New, prime, n, modulo } => {
                let ambient = modulo.as_deref().map(|j| self.ideal(j)).transpose()?;
                Ok(ideal_value(diff_power_new(self.prime(prime), *n, ambient.as_ref()).map_err(fail)?))
            }
            Command::DiffPow { kind: DiffPowKind::Classical, prime, n, .. } => {
                Ok(ideal_value(diff_power_classical(self.prime(prime), *n).map_err(fail)?))
            }
            Command::CheckZn { prime, n } => {
                Ok(plain(Value::Chain(chain_out(&chain_check(self.prime(prime), *n).map_err(fail)?))))
            }
            Command::AssertEqual(a, b) => {
                let (x, y) = (self.ideal(a)?, self.ideal(b)?);
                let separating = |p: &Ideal, q: &Ideal| -> Step<Option<Polynomial>> {
                    for g in p.groebner_basis() {
                        if !q.contains(g).map_err(fail)? {
                            return Ok(Some(g.clone()));
                        }
                    }
                    Ok(None)
                };
                let (passed, detail) = match (separating(&x, &y)?, separating(&y, &x)?) {
                    (None, None) => (true, format!("{a} = {b}")),
                    (Some(g), _) => (false, format!("{g} lies in {a} but not in {b}")),
                    (None, Some(g)) => (false, format!("{g} lies in {b} but not in {a}")),
                };
                Ok(plain(Value::Assertion { passed, detail }))
            }
            Command::AssertMember { poly, ideal, expect } => {
                let inside = self.ideal(ideal)?.contains(poly).map_err(fail)?;
                let detail = format!("{poly} {} {ideal}", if inside { "lies in" } else { "does not lie in" });
                Ok(plain(Value::Assertion { passed: inside == *expect, detail }))
            }
            Command::Let { .. } => unreachable!("handled by the caller"),
        }
    }
}

/// Run every statement in order; failures are recorded and the run goes on.
pub fn run(script: &Script) -> RunReport {
    let mut env = Env { names: HashMap::new() };
    let mut results = Vec::new();
    let mut failures = Vec::new();
    for located in &script.statements {
        let (cmd, binds) = match &located.statement {
            Statement::Ideal { name, ideal } => {
                env.names.insert(name.clone(), Binding::Ideal(ideal.clone()));
                continue;
            }
            Statement::Point { name, point } => {
                env.names.insert(name.clone(), Binding::Point(point.clone()));
                continue;
            }
            Statement::Prime { name, prime } => {
                env.names.insert(name.clone(), Binding::Prime(prime.clone()));
                continue;
            }
            Statement::Command(Command::Let { name, command }) => (command.as_ref(), Some(name.clone())),
            Statement::Command(c) => (c, None),
        };
        let outcome = env.exec(cmd);
        if let Some(name) = &binds {
            let binding = match &outcome {
                Ok((_, Some(i))) => Binding::Ideal(i.clone()),
                Ok((_, None)) => unreachable!("only ideal-valued commands can be bound"),
                Err(f) => Binding::Failed(f.kind, f.message.clone()),
            };
            env.names.insert(name.clone(), binding);
        }
        let (value, error) = match outcome {
            Ok((v, _)) => {
                if let Value::Assertion { passed: false, .. } = v {
                    failures.push(FailureKind::AssertionFailed);
                }
                (Some(v), None)
            }
            Err(f) => {
                failures.push(f.kind);
                (None, Some(f))
            }
        };
        results.push(CommandResult { line: located.line, command: located.text.clone(), binds, value, error });
    }
    let exit_code = FailureKind::worst(failures).map_or(0, FailureKind::exit_code);
    RunReport { schema: SCHEMA, ring: script.ring.to_string(), results, exit_code }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::script::parse_script;

    fn run_text(text: &str) -> RunReport {
        run(&parse_script(text).unwrap())
    }

    #[test]
    fn noeth_lists_operators() {
        let rep = run_text("field QQ; ring QQ[x,y]; ideal I = x^2, y; point P = (0,0); noeth I at P;");
        let Some(Value::Operators(ops)) = &rep.results[0].value else { panic!("{rep:?}") };
        assert_eq!(ops.operators_text, vec!["1", "dx"]);
        assert_eq!(ops.colength, 2);
        assert_eq!(rep.exit_code, 0);
    }

    #[test]
    fn chain_verdicts() {
        let rep = run_text("ring QQ[x,y]; point O = (0, 0); prime m = x, y : point O; check-zn m 2;");
        let Some(Value::Chain(c)) = &rep.results[0].value else { panic!() };
        assert_eq!(c.verdict, "all-equal");
        let rep = run_text("field Fp(2)(t); ring [x]; prime p = x^2 - t : univariate; check-zn p 2;");
        let Some(Value::Chain(c)) = &rep.results[0].value else { panic!() };
        assert_eq!(c.verdict, "strict");
        let cmp = c.comparisons.iter().find(|x| x.smaller == "symbolic" && x.larger == "new_diff").unwrap();
        // -t = t in characteristic 2
        assert_eq!(cmp.witness.as_deref(), Some("x^2 + t"));
    }

    #[test]
    fn assertions_set_exit_code() {
        assert_eq!(run_text("ring QQ[x]; ideal I = x; ideal J = x^2; assert-equal I J;").exit_code, 1);
        assert_eq!(run_text("ring QQ[x]; ideal I = x; assert-member x^3 in I;").exit_code, 0);
        assert_eq!(run_text("ring QQ[x]; ideal I = x; assert-not-member 1 in I;").exit_code, 0);
    }

    #[test]
    fn failures_are_classified() {
        let unsupported = run_text("field Fp(5); ring [x,y]; prime m = x, y : general; diffpow --classical m 2;");
        assert_eq!(unsupported.exit_code, 3);
        let input = run_text("ring QQ[x,y]; ideal I = x - 1; point O = (0, 0); noeth I at O;");
        assert_eq!(input.exit_code, 2);
        let mixed = run_text("ring QQ[x]; prime p = x : general; ideal I = x; ideal J = 1; sympow p 0; assert-equal I J;");
        assert_eq!(mixed.exit_code, 2);
    }

    #[test]
    fn let_binds_results() {
        let rep = run_text("ring QQ[x,y]; ideal I = x*y; let S = sat I by y; ideal X = x; assert-equal S X;");
        assert_eq!(rep.exit_code, 0);
        assert_eq!(rep.results[0].binds.as_deref(), Some("S"));
        let rep = run_text("ring QQ[x,y]; ideal I = x; point O = (0,0); prime m = x, y : point O; let N = diffpow --new m 2 mod I; gb N;");
        assert_eq!(rep.exit_code, 0);
    }

    #[test]
    fn failed_let_propagates_kind() {
        let rep = run_text("field Fp(3); ring [x,y]; prime m = x, y : general; let C = diffpow --classical m 2; gb C;");
        assert_eq!(rep.results[1].error.as_ref().unwrap().kind, FailureKind::Unsupported);
        assert_eq!(rep.exit_code, 3);
    }
}
