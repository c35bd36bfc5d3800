//! The batch script format.
//!
//! A script is a sequence of statements separated by `;`. A `#` starts a
//! comment running to the end of the line.
//!
//! ```text
//! field QQ;
//! ring QQ[x,y] order grevlex;
//! ideal I = x^2, y;
//! point P = (0, 0);
//! prime m = x, y : point P;
//! noeth I at P;
//! let S = sympow m 2;
//! let Q = power m 2;
//! assert-equal S Q;
//! ```

use std::collections::HashMap;
use std::sync::Arc;

use noether::coeff::Field;
use noether::poly::{parse_field, parse_point, parse_polynomial, parse_polynomial_list, MonomialOrder, Point, PolyRing, Polynomial};
use noether::{Ideal, PrimeData};

use crate::error::ScriptError;

/// A declared or computed ideal, a point, or a prime.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NameKind {
    Ideal,
    Point,
    Prime,
}

impl NameKind {
    fn describe(self) -> &'static str {
        match self {
            NameKind::Ideal => "an ideal",
            NameKind::Point => "a point",
            NameKind::Prime => "a prime",
        }
    }
}

/// Which differential power `diffpow` computes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DiffPowKind {
    New,
    Classical,
}

#[derive(Clone, Debug)]
pub enum Command {
    Gb(String),
    Nf { poly: Polynomial, ideal: String },
    Sat { ideal: String, by: Polynomial },
    Intersect(String, String),
    Sum(String, String),
    Power { ideal: String, n: i64 },
    Noeth { ideal: String, point: String, bound: Option<u32> },
    SymPow { prime: String, n: i64 },
    DiffPow { kind: DiffPowKind, prime: String, n: i64, modulo: Option<String> },
    CheckZn { prime: String, n: i64 },
    AssertEqual(String, String),
    AssertMember { poly: Polynomial, ideal: String, expect: bool },
    Let { name: String, command: Box<Command> },
}

impl Command {
    fn is_ideal_valued(&self) -> bool {
        matches!(
            self,
            Command::Gb(_)
                | Command::Sat { .. }
                | Command::Intersect(..)
                | Command::Sum(..)
                | Command::Power { .. }
                | Command::SymPow { .. }
                | Command::DiffPow { .. }
        )
    }
}

#[derive(Clone, Debug)]
pub enum Statement {
    Ideal { name: String, ideal: Ideal },
    Point { name: String, point: Point },
    Prime { name: String, prime: PrimeData },
    Command(Command),
}

/// A statement with its source location (1-based).
#[derive(Clone, Debug)]
pub struct Located {
    pub line: usize,
    pub col: usize,
    pub text: String,
    pub statement: Statement,
}

/// A parsed and name-checked script.
#[derive(Clone, Debug)]
pub struct Script {
    pub field: Field,
    pub ring: Arc<PolyRing>,
    pub statements: Vec<Located>,
}

impl Script {
    pub fn commands(&self) -> impl Iterator<Item = &Located> {
        self.statements.iter().filter(|s| matches!(s.statement, Statement::Command(_)))
    }
}

/// Byte offset to line and column, both 1-based.
struct LineIndex {
    starts: Vec<usize>,
}

impl LineIndex {
    fn new(text: &str) -> Self {
        let mut starts = vec![0];
        starts.extend(text.char_indices().filter(|&(_, c)| c == '\n').map(|(i, _)| i + 1));
        LineIndex { starts }
    }

    fn locate(&self, text: &str, offset: usize) -> (usize, usize) {
        let line = self.starts.partition_point(|&s| s <= offset);
        let start = self.starts[line - 1];
        let col = text[start..offset.min(text.len())].chars().count() + 1;
        (line, col)
    }
}

/// A piece of the source with its absolute byte offset.
#[derive(Clone, Copy)]
struct Span<'a> {
    text: &'a str,
    offset: usize,
}

impl<'a> Span<'a> {
    fn trim(self) -> Span<'a> {
        let lead = self.text.len() - self.text.trim_start().len();
        Span { text: self.text.trim(), offset: self.offset + lead }
    }

    fn split_at(self, i: usize) -> (Span<'a>, Span<'a>) {
        (Span { text: &self.text[..i], offset: self.offset }, Span { text: &self.text[i..], offset: self.offset + i })
    }

    /// First whitespace-separated word and the rest.
    fn word(self) -> (Span<'a>, Span<'a>) {
        let s = self.trim();
        let end = s.text.find(char::is_whitespace).unwrap_or(s.text.len());
        let (w, rest) = s.split_at(end);
        (w, rest.trim())
    }

    /// Split around the first (or last) occurrence of a keyword standing
    /// as its own word.
    fn split_keyword(self, kw: &str, last: bool) -> Option<(Span<'a>, Span<'a>)> {
        let bytes = self.text.as_bytes();
        let is_word = |i: usize| {
            let before = i == 0 || bytes[i - 1].is_ascii_whitespace();
            let after = i + kw.len() == bytes.len() || bytes[i + kw.len()].is_ascii_whitespace();
            before && after
        };
        let mut hits = self.text.match_indices(kw).map(|(i, _)| i).filter(|&i| is_word(i));
        let i = if last { hits.last() } else { hits.next() }?;
        let (a, b) = self.split_at(i);
        Some((a.trim(), b.split_at(kw.len()).1.trim()))
    }
}

struct Parser<'a> {
    source: &'a str,
    index: LineIndex,
    field: Option<Field>,
    ring: Option<Arc<PolyRing>>,
    names: HashMap<String, NameKind>,
    points: HashMap<String, Point>,
}

type PResult<T> = Result<T, ScriptError>;

impl<'a> Parser<'a> {
    fn error(&self, at: Span, msg: impl Into<String>) -> ScriptError {
        let (line, col) = self.index.locate(self.source, at.offset);
        ScriptError { line, col, message: msg.into() }
    }

    /// Map a library error onto the fragment it came from.
    fn core_error(&self, at: Span, err: noether::Error) -> ScriptError {
        let offset = at.offset + err.position().unwrap_or(0);
        self.error(Span { text: at.text, offset }, err.to_string())
    }

    fn ring(&self, at: Span) -> PResult<Arc<PolyRing>> {
        self.ring.clone().ok_or_else(|| self.error(at, "no ring declared yet"))
    }

    fn declare(&mut self, name: Span, kind: NameKind) -> PResult<String> {
        if !noether_identifier(name.text) {
            return Err(self.error(name, format!("`{}` is not a valid name", name.text)));
        }
        if self.names.contains_key(name.text) {
            return Err(self.error(name, format!("`{}` is already declared", name.text)));
        }
        self.names.insert(name.text.to_string(), kind);
        Ok(name.text.to_string())
    }

    fn reference(&self, name: Span, want: NameKind) -> PResult<String> {
        match self.names.get(name.text) {
            None => Err(self.error(name, format!("undeclared name `{}`", name.text))),
            Some(&k) if k == want => Ok(name.text.to_string()),
            // a prime may stand in wherever an ideal is expected
            Some(NameKind::Prime) if want == NameKind::Ideal => Ok(name.text.to_string()),
            Some(&k) => Err(self.error(name, format!("`{}` is {}, expected {}", name.text, k.describe(), want.describe()))),
        }
    }

    fn polynomial(&self, s: Span) -> PResult<Polynomial> {
        let ring = self.ring(s)?;
        parse_polynomial(s.text, &ring).map_err(|e| self.core_error(s, e))
    }

    fn integer(&self, s: Span, what: &str) -> PResult<i64> {
        s.text.parse().map_err(|_| self.error(s, format!("expected an integer {what}, found `{}`", s.text)))
    }

    /// `name = rest`.
    fn binding(&self, s: Span<'a>) -> PResult<(Span<'a>, Span<'a>)> {
        let i = s.text.find('=').ok_or_else(|| self.error(s, "expected `name = ...`"))?;
        let (name, rest) = s.split_at(i);
        Ok((name.trim(), rest.split_at(1).1.trim()))
    }

    fn statement(&mut self, s: Span<'a>) -> PResult<Option<Statement>> {
        let (kw, rest) = s.word();
        match kw.text {
            "field" => {
                self.field_decl(rest)?;
                Ok(None)
            }
            "ring" => {
                self.ring_decl(rest)?;
                Ok(None)
            }
            "ideal" => {
                let (name, gens) = self.binding(rest)?;
                let ring = self.ring(kw)?;
                let list = parse_polynomial_list(gens.text, &ring).map_err(|e| self.core_error(gens, e))?;
                let ideal = Ideal::new(&ring, list).map_err(|e| self.core_error(gens, e))?;
                let name = self.declare(name, NameKind::Ideal)?;
                Ok(Some(Statement::Ideal { name, ideal }))
            }
            "point" => {
                let (name, coords) = self.binding(rest)?;
                let ring = self.ring(kw)?;
                let point = parse_point(coords.text, ring.field()).map_err(|e| self.core_error(coords, e))?;
                if point.arity() != ring.arity() {
                    return Err(self.error(coords, format!("point has {} coordinates, ring has {} variables", point.arity(), ring.arity())));
                }
                let name = self.declare(name, NameKind::Point)?;
                Ok(Some(Statement::Point { name, point }))
            }
            "prime" => {
                let (name, body) = self.binding(rest)?;
                let prime = self.prime_decl(body)?;
                let name = self.declare(name, NameKind::Prime)?;
                Ok(Some(Statement::Prime { name, prime }))
            }
            "let" => {
                let (name, body) = self.binding(rest)?;
                let command = self.command(body)?;
                if !command.is_ideal_valued() {
                    return Err(self.error(body, "only ideal-valued commands can be bound with `let`"));
                }
                let name = self.declare(name, NameKind::Ideal)?;
                Ok(Some(Statement::Command(Command::Let { name, command: Box::new(command) })))
            }
            _ => Ok(Some(Statement::Command(self.command(s)?))),
        }
    }

    fn field_decl(&mut self, s: Span) -> PResult<()> {
        if self.field.is_some() {
            return Err(self.error(s, "field already declared"));
        }
        let field = parse_field(s.text).map_err(|e| self.core_error(s, e))?;
        self.field = Some(field);
        Ok(())
    }

    fn ring_decl(&mut self, s: Span) -> PResult<()> {
        if self.ring.is_some() {
            return Err(self.error(s, "ring already declared"));
        }
        let close = s.text.rfind(']').ok_or_else(|| self.error(s, "expected `ring FIELD[vars]` or `ring [vars]`"))?;
        let open = s.text[..close].rfind('[').ok_or_else(|| self.error(s, "missing `[`"))?;
        let field_part = Span { text: &s.text[..open], offset: s.offset }.trim();
        let vars_part = Span { text: &s.text[open + 1..close], offset: s.offset + open + 1 };
        let tail = Span { text: &s.text[close + 1..], offset: s.offset + close + 1 }.trim();
        let field = match (&self.field, field_part.text.is_empty()) {
            (Some(f), true) => f.clone(),
            (None, true) => return Err(self.error(s, "no field declared; write `ring FIELD[vars]`")),
            (declared, false) => {
                let f = parse_field(field_part.text).map_err(|e| self.core_error(field_part, e))?;
                if let Some(d) = declared {
                    if d != &f {
                        return Err(self.error(field_part, format!("ring field {f} differs from declared field {d}")));
                    }
                }
                f
            }
        };
        let vars: Vec<String> = vars_part.text.split(',').map(|v| v.trim().to_string()).collect();
        let order = if tail.text.is_empty() {
            MonomialOrder::Grevlex
        } else {
            let (kw, value) = tail.word();
            if kw.text != "order" {
                return Err(self.error(tail, format!("unexpected `{}` after the variables", tail.text)));
            }
            parse_order(value.text).ok_or_else(|| self.error(value, format!("unknown order `{}`", value.text)))?
        };
        let ring = PolyRing::new(field.clone(), vars, order).map_err(|e| self.core_error(vars_part, e))?;
        self.field = Some(field);
        self.ring = Some(ring);
        Ok(())
    }

    fn prime_decl(&self, s: Span) -> PResult<PrimeData> {
        let ring = self.ring(s)?;
        let colon = s.text.rfind(':').ok_or_else(|| self.error(s, "expected `gens : kind`"))?;
        let (gens, kind) = s.split_at(colon);
        let (gens, kind) = (gens.trim(), kind.split_at(1).1.trim());
        let list = parse_polynomial_list(gens.text, &ring).map_err(|e| self.core_error(gens, e))?;
        let ideal = Ideal::new(&ring, list.clone()).map_err(|e| self.core_error(gens, e))?;
        let (kw, arg) = kind.word();
        match kw.text {
            "univariate" => {
                let [m] = list.as_slice() else {
                    return Err(self.error(gens, "a univariate prime has exactly one generator"));
                };
                PrimeData::univariate(m.clone()).map_err(|e| self.core_error(gens, e))
            }
            "point" => {
                let name = self.reference(arg, NameKind::Point)?;
                // the point's coordinates were validated when it was declared
                let point = self.points.get(&name).cloned().expect("declared point");
                let prime = PrimeData::rational_point(&ring, point).map_err(|e| self.core_error(arg, e))?;
                if !ideal.equals(prime.ideal()).map_err(|e| self.core_error(gens, e))? {
                    return Err(self.error(gens, format!("generators do not define the maximal ideal of `{name}`")));
                }
                Ok(prime)
            }
            "witness" => {
                let s = self.polynomial(arg)?;
                PrimeData::general(ideal, Some(s)).map_err(|e| self.core_error(arg, e))
            }
            "general" if arg.text.is_empty() => PrimeData::general(ideal, None).map_err(|e| self.core_error(gens, e)),
            _ => Err(self.error(kind, "expected `univariate`, `point NAME`, `witness POLY` or `general`")),
        }
    }

    fn command(&self, s: Span) -> PResult<Command> {
        let (kw, rest) = s.word();
        let args: Vec<Span> = words(rest);
        let arity = |n: usize, usage: &str| -> PResult<()> {
            if args.len() == n { Ok(()) } else { Err(self.error(s, format!("usage: {usage}"))) }
        };
        match kw.text {
            "gb" => {
                arity(1, "gb IDEAL")?;
                Ok(Command::Gb(self.reference(args[0], NameKind::Ideal)?))
            }
            "nf" => {
                let (poly, ideal) = rest.split_keyword("mod", true).ok_or_else(|| self.error(s, "usage: nf POLY mod IDEAL"))?;
                Ok(Command::Nf { poly: self.polynomial(poly)?, ideal: self.reference(ideal, NameKind::Ideal)? })
            }
            "sat" => {
                let (ideal, by) = rest.split_keyword("by", false).ok_or_else(|| self.error(s, "usage: sat IDEAL by POLY"))?;
                Ok(Command::Sat { ideal: self.reference(ideal, NameKind::Ideal)?, by: self.polynomial(by)? })
            }
            "intersect" => {
                arity(2, "intersect IDEAL IDEAL")?;
                Ok(Command::Intersect(self.reference(args[0], NameKind::Ideal)?, self.reference(args[1], NameKind::Ideal)?))
            }
            "sum" => {
                arity(2, "sum IDEAL IDEAL")?;
                Ok(Command::Sum(self.reference(args[0], NameKind::Ideal)?, self.reference(args[1], NameKind::Ideal)?))
            }
            "power" => {
                arity(2, "power IDEAL N")?;
                Ok(Command::Power { ideal: self.reference(args[0], NameKind::Ideal)?, n: self.integer(args[1], "power")? })
            }
            "noeth" => {
                let usage = "noeth IDEAL at POINT [bound K]";
                if !(args.len() == 3 || args.len() == 5) || args[1].text != "at" {
                    return Err(self.error(s, format!("usage: {usage}")));
                }
                let bound = if args.len() == 5 {
                    if args[3].text != "bound" {
                        return Err(self.error(args[3], format!("usage: {usage}")));
                    }
                    let k = self.integer(args[4], "bound")?;
                    Some(u32::try_from(k).map_err(|_| self.error(args[4], "bound must be nonnegative"))?)
                } else {
                    None
                };
                Ok(Command::Noeth {
                    ideal: self.reference(args[0], NameKind::Ideal)?,
                    point: self.reference(args[2], NameKind::Point)?,
                    bound,
                })
            }
            "sympow" => {
                arity(2, "sympow PRIME N")?;
                Ok(Command::SymPow { prime: self.reference(args[0], NameKind::Prime)?, n: self.integer(args[1], "power")? })
            }
            "diffpow" => {
                let usage = "diffpow --new|--classical PRIME N [mod IDEAL]";
                if !(args.len() == 3 || args.len() == 5) {
                    return Err(self.error(s, format!("usage: {usage}")));
                }
                let kind = match args[0].text {
                    "--new" => DiffPowKind::New,
                    "--classical" => DiffPowKind::Classical,
                    _ => return Err(self.error(args[0], format!("usage: {usage}"))),
                };
                let modulo = if args.len() == 5 {
                    if args[3].text != "mod" || kind != DiffPowKind::New {
                        return Err(self.error(args[3], "`mod IDEAL` applies to `diffpow --new` only"));
                    }
                    Some(self.reference(args[4], NameKind::Ideal)?)
                } else {
                    None
                };
                Ok(Command::DiffPow { kind, prime: self.reference(args[1], NameKind::Prime)?, n: self.integer(args[2], "power")?, modulo })
            }
            "check-zn" => {
                arity(2, "check-zn PRIME N")?;
                Ok(Command::CheckZn { prime: self.reference(args[0], NameKind::Prime)?, n: self.integer(args[1], "power")? })
            }
            "assert-equal" => {
                arity(2, "assert-equal IDEAL IDEAL")?;
                Ok(Command::AssertEqual(self.reference(args[0], NameKind::Ideal)?, self.reference(args[1], NameKind::Ideal)?))
            }
            "assert-member" | "assert-not-member" => {
                let (poly, ideal) =
                    rest.split_keyword("in", true).ok_or_else(|| self.error(s, format!("usage: {} POLY in IDEAL", kw.text)))?;
                Ok(Command::AssertMember {
                    poly: self.polynomial(poly)?,
                    ideal: self.reference(ideal, NameKind::Ideal)?,
                    expect: kw.text == "assert-member",
                })
            }
            "" => Err(self.error(s, "empty command")),
            other => Err(self.error(kw, format!("unknown command `{other}`"))),
        }
    }
}

fn words(s: Span) -> Vec<Span> {
    let mut out = Vec::new();
    let mut rest = s.trim();
    while !rest.text.is_empty() {
        let (w, r) = rest.word();
        out.push(w);
        rest = r;
    }
    out
}

fn noether_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    chars.next().is_some_and(|c| c.is_ascii_alphabetic() || c == '_') && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// `lex`, `grevlex` or `elim(k)`.
pub fn parse_order(s: &str) -> Option<MonomialOrder> {
    match s {
        "lex" => Some(MonomialOrder::Lex),
        "grevlex" => Some(MonomialOrder::Grevlex),
        _ => {
            let k = s.strip_prefix("elim(")?.strip_suffix(')')?.trim().parse().ok()?;
            Some(MonomialOrder::Elimination(k))
        }
    }
}

/// Blank out comments, keeping byte offsets intact.
fn strip_comments(text: &str) -> String {
    let mut out = String::with_capacity(text.len());
    let mut in_comment = false;
    for c in text.chars() {
        match c {
            '\n' => {
                in_comment = false;
                out.push('\n');
            }
            '#' => {
                in_comment = true;
                out.push(' ');
            }
            _ if in_comment => out.extend(std::iter::repeat_n(' ', c.len_utf8())),
            _ => out.push(c),
        }
    }
    out
}

pub fn parse_script(text: &str) -> Result<Script, ScriptError> {
    let clean = strip_comments(text);
    let mut parser = Parser { source: text, index: LineIndex::new(text), field: None, ring: None, names: HashMap::new(), points: HashMap::new() };
    let mut statements = Vec::new();
    let mut offset = 0;
    for piece in clean.split(';') {
        let span = Span { text: piece, offset }.trim();
        offset += piece.len() + 1;
        if span.text.is_empty() {
            continue;
        }
        if let Some(statement) = parser.statement(span)? {
            if let Statement::Point { name, point } = &statement {
                parser.points.insert(name.clone(), point.clone());
            }
            let (line, col) = parser.index.locate(text, span.offset);
            let collapsed = span.text.split_whitespace().collect::<Vec<_>>().join(" ");
            statements.push(Located { line, col, text: collapsed, statement });
        }
    }
    let ring = parser.ring.ok_or_else(|| ScriptError { line: 1, col: 1, message: "script declares no ring".into() })?;
    Ok(Script { field: ring.field().clone(), ring, statements })
}
