//! The instance-config language: whitespace-separated `key=value` tokens and
//! bare command words. Brackets and parentheses may contain spaces.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use polycomp::claims::ClaimId;
use polycomp::composite::CompositeRing;
use polycomp::fieldtower::{fp, Field};
use thiserror::Error;

use crate::expr::{parse_literal, parse_expr, Expr, Literal};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("{line}:{column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl ParseError {
    pub(crate) fn at(pos: Pos, message: impl Into<String>) -> ParseError {
        ParseError {
            line: pos.line,
            column: pos.column,
            message: message.into(),
        }
    }
}

/// 1-based line and column of a character in the config text.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Pos {
    pub line: usize,
    pub column: usize,
}

impl Pos {
    pub(crate) fn shift(self, by: usize) -> Pos {
        Pos {
            line: self.line,
            column: self.column + by,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Records,
    Table,
}

impl std::str::FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "records" => Ok(Format::Records),
            "table" => Ok(Format::Table),
            _ => Err(format!("unknown format {s:?}, expected records or table")),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Options {
    pub seed: u64,
    pub degree_bound: usize,
    pub window: usize,
    pub format: Format,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            seed: polycomp::DEFAULT_SEED,
            degree_bound: 4,
            window: 8,
            format: Format::Records,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IdealOp {
    Invertible,
    Colon,
    Factor,
    Pir,
}

#[derive(Clone, Debug)]
pub enum CoverSpec {
    Integers { r: BigInt },
    Finite { small: Field, big: Field, b: Expr },
}

#[derive(Clone, Debug)]
pub enum Command {
    Props,
    Factor { elem: Literal },
    Lengths { elem: Literal },
    Divisors { elem: Literal },
    Chain { f: Literal, d: BigInt, steps: usize },
    Bezout { f: Literal, g: Literal },
    Ideal { gens: Vec<Literal>, pole: usize, op: IdealOp },
    Cover(CoverSpec),
    Verify { claim: Option<ClaimId>, overfield: bool },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Props => "props",
            Command::Factor { .. } => "factor",
            Command::Lengths { .. } => "lengths",
            Command::Divisors { .. } => "divisors",
            Command::Chain { .. } => "chain",
            Command::Bezout { .. } => "bezout",
            Command::Ideal { .. } => "ideal",
            Command::Cover(_) => "cover",
            Command::Verify { .. } => "verify",
        }
    }
}

#[derive(Clone, Debug)]
pub struct InstanceConfig {
    pub ring: Option<CompositeRing>,
    pub command: Command,
    pub options: Options,
}

impl fmt::Display for InstanceConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.ring {
            Some(r) => write!(f, "{} on {r}", self.command.name()),
            None => f.write_str(self.command.name()),
        }
    }
}

#[derive(Clone, Debug)]
struct Token<'a> {
    pos: Pos,
    text: &'a str,
}

/// Splits on whitespace outside brackets; `#` starts a comment.
fn tokenize(text: &str) -> Result<Vec<Token<'_>>, ParseError> {
    let mut out = Vec::new();
    for (ln, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("");
        let mut depth: Vec<(char, Pos)> = Vec::new();
        let mut start: Option<usize> = None;
        for (i, ch) in line.char_indices() {
            let pos = Pos { line: ln + 1, column: line[..i].chars().count() + 1 };
            match ch {
                '(' | '[' => depth.push((ch, pos)),
                ')' | ']' => {
                    let want = if ch == ')' { '(' } else { '[' };
                    match depth.pop() {
                        Some((open, _)) if open == want => {}
                        _ => return Err(ParseError::at(pos, format!("unbalanced {ch:?}"))),
                    }
                }
                _ => {}
            }
            if ch.is_whitespace() && depth.is_empty() {
                if let Some(s) = start.take() {
                    out.push(token(ln, line, s, i));
                }
            } else if start.is_none() {
                start = Some(i);
            }
        }
        if let Some((open, pos)) = depth.pop() {
            return Err(ParseError::at(pos, format!("unclosed {open:?}")));
        }
        if let Some(s) = start {
            out.push(token(ln, line, s, line.len()));
        }
    }
    Ok(out)
}

fn token(ln: usize, line: &str, s: usize, e: usize) -> Token<'_> {
    Token {
        pos: Pos { line: ln + 1, column: line[..s].chars().count() + 1 },
        text: &line[s..e],
    }
}

const COMMANDS: [&str; 9] = ["props", "factor", "lengths", "divisors", "chain", "bezout", "ideal", "cover", "verify"];

/// Parses a full config. Every input either yields a config or an error
/// pointing at the offending token.
pub fn parse_config(text: &str) -> Result<InstanceConfig, ParseError> {
    let tokens = tokenize(text)?;
    let mut cmd: Option<(String, Pos)> = None;
    let mut words: Vec<Token> = Vec::new();
    let mut keys: Vec<(String, Token, Pos)> = Vec::new();
    for t in tokens {
        match t.text.split_once('=') {
            Some((k, v)) if !k.contains('(') && !k.contains('[') => {
                if k.is_empty() {
                    return Err(ParseError::at(t.pos, "missing key before '='"));
                }
                let vpos = t.pos.shift(k.chars().count() + 1);
                if keys.iter().any(|(kk, _, _)| kk == k) {
                    return Err(ParseError::at(t.pos, format!("duplicate key {k}")));
                }
                if k == "cmd" {
                    set_command(&mut cmd, v, vpos)?;
                }
                keys.push((k.to_string(), Token { pos: vpos, text: v }, t.pos));
            }
            _ if cmd.is_none() && COMMANDS.contains(&t.text) => set_command(&mut cmd, t.text, t.pos)?,
            _ => words.push(t),
        }
    }
    let Some((cmd, cmd_pos)) = cmd else {
        let end = words.first().map(|w| w.pos).unwrap_or(Pos { line: 1, column: 1 });
        return Err(ParseError::at(end, format!("missing command; expected one of {}", COMMANDS.join(", "))));
    };

    let mut table = Keys { keys, used: Vec::new() };
    let mut options = Options::default();
    if let Some(t) = table.take("seed") {
        options.seed = parse_num(&t)?;
    }
    if let Some(t) = table.take("degree-bound").or_else(|| table.take("degree_bound")) {
        options.degree_bound = parse_num(&t)?;
    }
    if let Some(t) = table.take("window") {
        options.window = parse_num(&t)?;
    }
    if let Some(t) = table.take("format") {
        options.format = t.text.parse().map_err(|e: String| ParseError::at(t.pos, e))?;
    }
    let ring = match table.take("ring") {
        Some(t) => Some(parse_ring(&t)?),
        None => None,
    };
    let literal = |table: &mut Keys, key: &str| -> Result<Literal, ParseError> {
        let t = table.require(key, cmd_pos, &cmd)?;
        parse_literal(t.text, t.pos)
    };

    let command = match cmd.as_str() {
        "props" => Command::Props,
        "factor" => Command::Factor { elem: literal(&mut table, "elem")? },
        "lengths" => Command::Lengths { elem: literal(&mut table, "elem")? },
        "divisors" => Command::Divisors { elem: literal(&mut table, "elem")? },
        "chain" => {
            let f = literal(&mut table, "f")?;
            let d = match table.take("d") {
                Some(t) => t.text.parse::<BigInt>().map_err(|_| ParseError::at(t.pos, "d must be an integer"))?,
                None => BigInt::from(2),
            };
            let steps = match table.take("steps") {
                Some(t) => parse_num(&t)?,
                None => 20,
            };
            Command::Chain { f, d, steps }
        }
        "bezout" => Command::Bezout {
            f: literal(&mut table, "f")?,
            g: literal(&mut table, "g")?,
        },
        "ideal" => {
            let t = table.require("gens", cmd_pos, &cmd)?;
            let gens = parse_gens(&t)?;
            let pole = match table.take("pole") {
                Some(t) => parse_num(&t)?,
                None => 0,
            };
            let op = match table.take("op") {
                None => IdealOp::Invertible,
                Some(t) => match t.text {
                    "invertible" => IdealOp::Invertible,
                    "colon" => IdealOp::Colon,
                    "factor" => IdealOp::Factor,
                    "pir" => IdealOp::Pir,
                    _ => return Err(ParseError::at(t.pos, "op must be invertible, colon, factor or pir")),
                },
            };
            Command::Ideal { gens, pole, op }
        }
        "cover" => Command::Cover(parse_cover(&mut words, &mut table, cmd_pos)?),
        "verify" => {
            let claim = match table.take("claim") {
                Some(t) => Some(t.text.parse::<ClaimId>().map_err(|e| ParseError::at(t.pos, e.to_string()))?),
                None => None,
            };
            let overfield = match table.take("overfield") {
                Some(t) => t.text.parse::<bool>().map_err(|_| ParseError::at(t.pos, "overfield must be true or false"))?,
                None => false,
            };
            Command::Verify { claim, overfield }
        }
        _ => unreachable!("checked against COMMANDS"),
    };
    if let Some(w) = words.first() {
        return Err(ParseError::at(w.pos, format!("unexpected word {:?}", w.text)));
    }
    if let Some((k, _, pos)) = table.keys.iter().find(|(k, _, _)| !table.used.contains(k) && k != "cmd") {
        return Err(ParseError::at(*pos, format!("unknown key {k} for command {cmd}")));
    }
    if ring.is_none() && !matches!(command, Command::Cover(_)) {
        return Err(ParseError::at(cmd_pos, format!("command {cmd} needs ring=composite(..)")));
    }
    Ok(InstanceConfig { ring, command, options })
}

fn set_command(cmd: &mut Option<(String, Pos)>, word: &str, pos: Pos) -> Result<(), ParseError> {
    if !COMMANDS.contains(&word) {
        return Err(ParseError::at(pos, format!("unknown command {word:?}")));
    }
    if cmd.is_some() {
        return Err(ParseError::at(pos, "command given twice"));
    }
    *cmd = Some((word.to_string(), pos));
    Ok(())
}

struct Keys<'a> {
    keys: Vec<(String, Token<'a>, Pos)>,
    used: Vec<String>,
}

impl<'a> Keys<'a> {
    fn take(&mut self, key: &str) -> Option<Token<'a>> {
        let t = self.keys.iter().find(|(k, _, _)| k == key).map(|(_, t, _)| t.clone());
        if t.is_some() {
            self.used.push(key.to_string());
        }
        t
    }

    fn require(&mut self, key: &str, pos: Pos, cmd: &str) -> Result<Token<'a>, ParseError> {
        self.take(key)
            .ok_or_else(|| ParseError::at(pos, format!("command {cmd} needs {key}=")))
    }
}

fn parse_num<T: std::str::FromStr>(t: &Token) -> Result<T, ParseError> {
    t.text
        .parse()
        .map_err(|_| ParseError::at(t.pos, format!("expected a non-negative integer, got {:?}", t.text)))
}

/// `[lit, lit, ...]` or a single literal.
fn parse_gens(t: &Token) -> Result<Vec<Literal>, ParseError> {
    let inner = t.text.trim();
    let nested = inner.starts_with('[') && inner[1..].trim_start().starts_with('[');
    if !nested {
        return Ok(vec![parse_literal(inner, t.pos)?]);
    }
    split_args(&inner[1..inner.len() - 1], t.pos.shift(1))?
        .into_iter()
        .map(|(s, p)| parse_literal(s, p))
        .collect()
}

/// Splits a comma list at bracket depth zero, keeping positions.
pub(crate) fn split_args(s: &str, pos: Pos) -> Result<Vec<(&str, Pos)>, ParseError> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, ch) in s.char_indices() {
        match ch {
            '(' | '[' => depth += 1,
            ')' | ']' => depth -= 1,
            ',' if depth == 0 => {
                out.push(trimmed(s, start, i, pos));
                start = i + 1;
            }
            _ => {}
        }
    }
    let last = trimmed(s, start, s.len(), pos);
    if !last.0.is_empty() || !out.is_empty() {
        out.push(last);
    }
    if let Some((_, p)) = out.iter().find(|(a, _)| a.is_empty()) {
        return Err(ParseError::at(*p, "empty argument"));
    }
    Ok(out)
}

fn trimmed(s: &str, a: usize, b: usize, pos: Pos) -> (&str, Pos) {
    let piece = &s[a..b];
    let lead = piece.len() - piece.trim_start().len();
    (piece.trim(), pos.shift(s[..a + lead].chars().count()))
}

/// `name(args)` split into the name and its arguments.
fn call<'s>(s: &'s str, pos: Pos) -> Result<(&'s str, Vec<(&'s str, Pos)>), ParseError> {
    match s.find('(') {
        Some(i) if s.ends_with(')') => Ok((s[..i].trim(), split_args(&s[i + 1..s.len() - 1], pos.shift(i + 1))?)),
        Some(_) => Err(ParseError::at(pos, format!("expected ')' at the end of {s:?}"))),
        None => Ok((s.trim(), Vec::new())),
    }
}

fn int_arg<T: std::str::FromStr>(arg: &(&str, Pos), what: &str) -> Result<T, ParseError> {
    arg.0
        .parse()
        .map_err(|_| ParseError::at(arg.1, format!("{what} must be a non-negative integer, got {:?}", arg.0)))
}

fn arity(name: &str, args: &[(&str, Pos)], range: std::ops::RangeInclusive<usize>, pos: Pos) -> Result<(), ParseError> {
    if range.contains(&args.len()) {
        Ok(())
    } else {
        Err(ParseError::at(pos, format!("{name} takes {range:?} arguments, got {}", args.len())))
    }
}

/// `gf(p)`, `gf(p, n [, [modulus]])`, `gf(q, n)` with `q = p^n`, `q`,
/// `numberfield([c0, c1, ...])`, `funcfield(p)`, `funcsub(p, e)`.
pub fn parse_field(s: &str, pos: Pos) -> Result<Field, ParseError> {
    let (name, args) = call(s, pos)?;
    let fail = |e: polycomp::fieldtower::FieldError| ParseError::at(pos, e.to_string());
    match name.to_ascii_lowercase().as_str() {
        "q" => {
            arity(name, &args, 0..=0, pos)?;
            Ok(Field::rationals())
        }
        "gf" => {
            arity(name, &args, 1..=3, pos)?;
            let a: u64 = int_arg(&args[0], "field order")?;
            if args.len() == 1 {
                return Field::prime(a).map_err(fail);
            }
            let n: u32 = int_arg(&args[1], "extension degree")?;
            let p = if fp::is_prime(a) {
                a
            } else {
                prime_root(a, n).ok_or_else(|| ParseError::at(args[0].1, format!("{a} is neither a prime nor a prime to the power {n}")))?
            };
            let modulus = match args.get(2) {
                Some(&(m, mpos)) => Some(
                    list_items(m, mpos)?
                        .into_iter()
                        .map(|a| int_arg::<u64>(&a, "modulus coefficient"))
                        .collect::<Result<Vec<_>, _>>()?,
                ),
                None => None,
            };
            Field::finite(p, n, modulus).map_err(fail)
        }
        "numberfield" => {
            let items = if args.len() == 1 && args[0].0.starts_with('[') {
                list_items(args[0].0, args[0].1)?
            } else {
                args
            };
            let coeffs = items
                .iter()
                .map(|&(c, p)| c.parse::<BigRational>().map_err(|_| ParseError::at(p, format!("{c:?} is not a rational number"))))
                .collect::<Result<Vec<_>, _>>()?;
            Field::number_field(coeffs).map_err(fail)
        }
        "funcfield" => {
            arity(name, &args, 1..=1, pos)?;
            Field::function_field(int_arg(&args[0], "characteristic")?).map_err(fail)
        }
        "funcsub" => {
            arity(name, &args, 2..=2, pos)?;
            Field::perfect_power_subfield(int_arg(&args[0], "characteristic")?, int_arg(&args[1], "exponent")?).map_err(fail)
        }
        _ => Err(ParseError::at(pos, format!("unknown field {name:?}"))),
    }
}

fn prime_root(q: u64, n: u32) -> Option<u64> {
    let p = (2..=q).find(|d| q % d == 0)?;
    (fp::is_prime(p) && p.checked_pow(n) == Some(q)).then_some(p)
}

fn list_items(s: &str, pos: Pos) -> Result<Vec<(&str, Pos)>, ParseError> {
    if !(s.starts_with('[') && s.ends_with(']')) {
        return Err(ParseError::at(pos, format!("expected a bracketed list, got {s:?}")));
    }
    split_args(&s[1..s.len() - 1], pos.shift(1))
}

/// `composite(small, big)`; the small ring may be `Z` or `Z_loc[p, ...]`.
pub fn parse_ring_text(s: &str, pos: Pos) -> Result<CompositeRing, ParseError> {
    let (name, args) = call(s, pos)?;
    if name != "composite" {
        return Err(ParseError::at(pos, format!("expected composite(..), got {name:?}")));
    }
    arity(name, &args, 2..=2, pos)?;
    let (small, spos) = args[0];
    let (big, bpos) = args[1];
    let is_q = |b: &str| b.eq_ignore_ascii_case("q");
    if small == "Z" {
        if !is_q(big) {
            return Err(ParseError::at(bpos, "Z pairs only with Q"));
        }
        return Ok(CompositeRing::integers_in_rationals());
    }
    if let Some(rest) = small.strip_prefix("Z_loc") {
        if !is_q(big) {
            return Err(ParseError::at(bpos, "Z_loc pairs only with Q"));
        }
        let primes = list_items(rest, spos.shift(5))?
            .iter()
            .map(|a| int_arg::<u64>(a, "prime"))
            .collect::<Result<Vec<_>, _>>()?;
        return CompositeRing::localized(&primes).map_err(|e| ParseError::at(spos, e.to_string()));
    }
    let k = parse_field(small, spos)?;
    let l = parse_field(big, bpos)?;
    CompositeRing::fields(k, l).map_err(|e| ParseError::at(pos, e.to_string()))
}

fn parse_ring(t: &Token) -> Result<CompositeRing, ParseError> {
    parse_ring_text(t.text, t.pos)
}

fn parse_cover(words: &mut Vec<Token>, table: &mut Keys, pos: Pos) -> Result<CoverSpec, ParseError> {
    let variant = if words.is_empty() {
        return Err(ParseError::at(pos, "cover needs a variant: z or gf"));
    } else {
        words.remove(0)
    };
    match variant.text {
        "z" | "Z" => {
            let t = table.require("r", pos, "cover z")?;
            let r = t.text.parse::<BigInt>().map_err(|_| ParseError::at(t.pos, "r must be an integer"))?;
            Ok(CoverSpec::Integers { r })
        }
        "gf" => {
            let s = table.require("small", pos, "cover gf")?;
            let b = table.require("big", pos, "cover gf")?;
            let small = parse_field(s.text, s.pos)?;
            let big = parse_field(b.text, b.pos)?;
            let b = match table.take("b") {
                Some(t) => parse_expr(t.text, t.pos)?,
                None => Expr::Int(BigInt::from(1)),
            };
            Ok(CoverSpec::Finite { small, big, b })
        }
        other => Err(ParseError::at(variant.pos, format!("unknown cover variant {other:?}, expected z or gf"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples_parse() {
        let c = parse_config("ring=composite(gf(2),gf(4,2)) cmd=verify").unwrap();
        assert!(matches!(c.command, Command::Verify { claim: None, .. }));
        let c = parse_config("ring=composite(Z,Q) cmd=chain f=[0,1] d=2 steps=5").unwrap();
        assert!(matches!(c.command, Command::Chain { steps: 5, .. }));
        let c = parse_config("cover z r=2").unwrap();
        assert!(c.ring.is_none());
        let c = parse_config("cover gf small=gf(2) big=gf(4, 2) b=w").unwrap();
        assert!(matches!(c.command, Command::Cover(CoverSpec::Finite { .. })));
        let c = parse_config("ring=composite(gf(2),gf(4,2))\nideal gens=[[0,1],[0,w]] pole=0 window=8 op=colon").unwrap();
        assert!(matches!(c.command, Command::Ideal { ref gens, op: IdealOp::Colon, .. } if gens.len() == 2));
        let c = parse_config("ring=composite(Z_loc[2,3],Q) props # comment").unwrap();
        assert_eq!(c.ring.unwrap().primes(), &[2, 3]);
    }

    #[test]
    fn fields() {
        let p = Pos { line: 1, column: 1 };
        assert_eq!(parse_field("gf(4,2)", p).unwrap(), Field::finite(2, 2, None).unwrap());
        assert_eq!(parse_field("gf(2,2)", p).unwrap(), Field::finite(2, 2, None).unwrap());
        assert_eq!(parse_field("gf(2, 3, [1,1,0,1])", p).unwrap(), Field::finite(2, 3, Some(vec![1, 1, 0, 1])).unwrap());
        assert!(parse_field("numberfield([-2,0,0,1])", p).is_ok());
        assert!(parse_field("funcsub(2,1)", p).is_ok());
        assert!(parse_field("gf(6,2)", p).is_err());
    }

    #[test]
    fn errors_carry_positions() {
        let e = parse_config("ring=composite(gf(2),gf(4,2)) cmd=verify colour=red").unwrap_err();
        assert_eq!((e.line, e.column), (1, 42));
        let e = parse_config("ring=composite(gf(2),gf(6,2))\ncmd=verify").unwrap_err();
        assert_eq!((e.line, e.column), (1, 25));
        let e = parse_config("ring=composite(gf(2),gf(4,2) cmd=verify").unwrap_err();
        assert_eq!((e.line, e.column), (1, 15));
        let e = parse_config("ring=composite(Z,Q)").unwrap_err();
        assert!(e.message.contains("missing command"));
        let e = parse_config("ring=composite(Z,Q) cmd=factor").unwrap_err();
        assert!(e.message.contains("elem"));
        let e = parse_config("ring=composite(Z,Q) cmd=verify claim=P99").unwrap_err();
        assert_eq!(e.column, 38);
    }
}
