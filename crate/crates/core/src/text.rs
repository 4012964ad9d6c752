//! Text formats: the expression grammar for `U(Vir)` and polynomials in
//! `z`, the element syntax matching [`ModuleElement`]'s rendering, and the
//! JSON records describing module families.
//!
//! Expression grammar (whitespace is insignificant):
//!
//! ```text
//! expr     := ['-'] term (('+' | '-') term)*
//! term     := factor ('*' factor)*
//! factor   := primary ('^' nonneg-int)?
//! primary  := 'd(' int ')' | 'z' | rational | '(' expr ')'
//! rational := nonneg-int ('/' positive-int)?
//! ```
//!
//! Parse errors carry the 1-based character column of the offending input.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde_json::{json, Map, Value};
use thiserror::Error;

use crate::algebra::rational::parse_rational;
use crate::algebra::rewrite::{StructureConstants, Virasoro};
use crate::algebra::{CentralPolynomial, Generator, Rational, UeaElement};
use crate::modules::{
    act, act_with, BasisIndex, Matrix, ModuleElement, ModuleError, ModuleFamily, NPlusModule, WhittakerFunctional,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at position {position}: {message}")]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TextError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("malformed record: {0}")]
    Record(String),
    #[error(transparent)]
    Module(#[from] ModuleError),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Sum(Vec<(bool, Expr)>),
    Product(Vec<Expr>),
    Power(Box<Expr>, u32),
    D(i64),
    Z,
    Scalar(Rational),
}

impl Expr {
    pub fn evaluate(&self) -> UeaElement {
        self.evaluate_with(&Virasoro)
    }

    pub fn evaluate_with<S: StructureConstants + ?Sized>(&self, rules: &S) -> UeaElement {
        match self {
            Expr::Sum(terms) => terms.iter().fold(UeaElement::zero(), |acc, (negative, e)| {
                let v = e.evaluate_with(rules);
                if *negative {
                    acc - v
                } else {
                    acc + v
                }
            }),
            Expr::Product(factors) => factors
                .iter()
                .fold(UeaElement::one(), |acc, f| acc.multiply_with(&f.evaluate_with(rules), rules)),
            Expr::Power(base, e) => {
                let b = base.evaluate_with(rules);
                (0..*e).fold(UeaElement::one(), |acc, _| acc.multiply_with(&b, rules))
            }
            Expr::D(k) => UeaElement::generator(Generator::D(*k)),
            Expr::Z => UeaElement::z(),
            Expr::Scalar(c) => UeaElement::scalar(c.clone()),
        }
    }
}

struct Cursor<'a> {
    chars: Vec<char>,
    pos: usize,
    what: &'a str,
}

impl<'a> Cursor<'a> {
    fn new(text: &str, what: &'a str) -> Self {
        Cursor { chars: text.chars().collect(), pos: 0, what }
    }

    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError { position: self.pos + 1, message: message.into() })
    }

    fn expect(&mut self, c: char) -> Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            match self.peek() {
                Some(found) => self.error(format!("expected '{c}', found '{found}'")),
                None => self.error(format!("expected '{c}', found end of input")),
            }
        }
    }

    fn digits(&mut self) -> Result<BigInt, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.chars.get(self.pos).is_some_and(char::is_ascii_digit) {
            self.pos += 1;
        }
        if start == self.pos {
            return self.error("expected a number");
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        Ok(s.parse().expect("ascii digits"))
    }

    fn signed_int(&mut self) -> Result<i64, ParseError> {
        let negative = self.eat('-');
        let start = self.pos;
        let n = self.digits()?;
        let n: i64 = match i64::try_from(&n) {
            Ok(n) => n,
            Err(_) => {
                self.pos = start;
                return self.error("integer out of range");
            }
        };
        Ok(if negative { -n } else { n })
    }

    fn exponent(&mut self) -> Result<u32, ParseError> {
        let start = self.pos;
        let n = self.digits()?;
        u32::try_from(&n).or_else(|_| {
            self.pos = start;
            self.error("exponent out of range")
        })
    }

    fn rational(&mut self) -> Result<Rational, ParseError> {
        let numer = self.digits()?;
        if self.eat('/') {
            let at = self.pos;
            let denom = self.digits()?;
            if denom.is_zero() {
                self.pos = at;
                return self.error("zero denominator");
            }
            return Ok(Rational::new(numer, denom));
        }
        Ok(Rational::from_integer(numer))
    }

    fn finish(&mut self) -> Result<(), ParseError> {
        match self.peek() {
            None => Ok(()),
            Some(c) => self.error(format!("unexpected '{c}' in {}", self.what)),
        }
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut terms = Vec::new();
        let mut negative = self.eat('-');
        loop {
            terms.push((negative, self.term()?));
            if self.eat('+') {
                negative = false;
            } else if self.eat('-') {
                negative = true;
            } else {
                break;
            }
        }
        Ok(Expr::Sum(terms))
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut factors = vec![self.factor()?];
        while self.eat('*') {
            factors.push(self.factor()?);
        }
        Ok(if factors.len() == 1 { factors.pop().expect("one factor") } else { Expr::Product(factors) })
    }

    fn factor(&mut self) -> Result<Expr, ParseError> {
        let base = self.primary()?;
        if self.eat('^') {
            return Ok(Expr::Power(Box::new(base), self.exponent()?));
        }
        Ok(base)
    }

    fn primary(&mut self) -> Result<Expr, ParseError> {
        match self.peek() {
            Some('d') => {
                self.pos += 1;
                self.expect('(')?;
                let k = self.signed_int()?;
                self.expect(')')?;
                Ok(Expr::D(k))
            }
            Some('z') => {
                self.pos += 1;
                Ok(Expr::Z)
            }
            Some('(') => {
                self.pos += 1;
                let inner = self.expr()?;
                self.expect(')')?;
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => Ok(Expr::Scalar(self.rational()?)),
            Some(c) => self.error(format!("unexpected '{c}'")),
            None => self.error("unexpected end of input"),
        }
    }
}

pub fn parse_expression(text: &str) -> Result<Expr, ParseError> {
    let mut cursor = Cursor::new(text, "expression");
    let e = cursor.expr()?;
    cursor.finish()?;
    Ok(e)
}

/// A polynomial in `z`, written in the expression grammar with `z` as the
/// only atom.
pub fn parse_polynomial(text: &str) -> Result<CentralPolynomial, ParseError> {
    let expr = parse_expression(text)?;
    if contains_d(&expr) {
        let at = text.find('d').map_or(1, |i| text[..i].chars().count() + 1);
        return Err(ParseError { position: at, message: "polynomials may only contain z".into() });
    }
    let coeffs = expr.evaluate().as_z_polynomial().expect("z-only expression");
    Ok(CentralPolynomial::new(coeffs))
}

fn contains_d(e: &Expr) -> bool {
    match e {
        Expr::Sum(t) => t.iter().any(|(_, e)| contains_d(e)),
        Expr::Product(f) => f.iter().any(contains_d),
        Expr::Power(b, _) => contains_d(b),
        Expr::D(_) => true,
        Expr::Z | Expr::Scalar(_) => false,
    }
}

/// `ψ` as `"a,b"`.
pub fn parse_psi(text: &str) -> Result<WhittakerFunctional, ParseError> {
    let parts: Vec<&str> = text.split(',').collect();
    if parts.len() != 2 {
        return Err(ParseError { position: 1, message: "expected two rationals 'psi1,psi2'".into() });
    }
    let first = parse_signed_rational(parts[0], 1)?;
    let second = parse_signed_rational(parts[1], parts[0].chars().count() + 2)?;
    Ok(WhittakerFunctional::new(first, second))
}

pub fn parse_signed_rational(text: &str, position: usize) -> Result<Rational, ParseError> {
    parse_rational(text.trim()).ok_or_else(|| ParseError { position, message: format!("invalid rational '{}'", text.trim()) })
}

/// Parses the rendering of [`ModuleElement`] back into an element of
/// `family`. Each term is an optional coefficient, a word in `d[k]`
/// (exponents allowed, `d(k)` accepted too), an optional `⊗`, and the
/// family's generator symbol: `w[j]` for `M(0,ξ)`, `v+` for Verma modules,
/// `w` for `L(ψ,ξ)`, `v[i]` for `V_N` and `w[c]` for direct sums. The word
/// acts on the generator, so it need not be in PBW order.
pub fn parse_element(text: &str, family: &Arc<ModuleFamily>) -> Result<ModuleElement, ParseError> {
    let mut cursor = Cursor::new(text, "element");
    let mut total = ModuleElement::zero(family);
    if cursor.peek() == Some('0') && cursor.chars[cursor.pos + 1..].iter().all(|c| c.is_whitespace()) {
        return Ok(total);
    }
    let mut negative = cursor.eat('-');
    loop {
        let term = element_term(&mut cursor, family)?;
        total = if negative { &total - &term } else { &total + &term };
        if cursor.eat('+') {
            negative = false;
        } else if cursor.eat('-') {
            negative = true;
        } else {
            break;
        }
    }
    cursor.finish()?;
    Ok(total)
}

fn element_term(cursor: &mut Cursor<'_>, family: &Arc<ModuleFamily>) -> Result<ModuleElement, ParseError> {
    let mut coeff = Rational::one();
    if cursor.peek().is_some_and(|c| c.is_ascii_digit()) {
        coeff = cursor.rational()?;
        cursor.expect('*')?;
    }
    let mut word = UeaElement::one();
    loop {
        match cursor.peek() {
            Some('d') => {
                cursor.pos += 1;
                let close = if cursor.eat('[') {
                    ']'
                } else {
                    cursor.expect('(')?;
                    ')'
                };
                let k = cursor.signed_int()?;
                cursor.expect(close)?;
                let e = if cursor.eat('^') { cursor.exponent()? } else { 1 };
                word = &word * &UeaElement::d(k).pow(e);
                cursor.eat('*');
            }
            Some('⊗') => {
                cursor.pos += 1;
            }
            _ => break,
        }
    }
    let start = cursor.pos;
    let generator = generator(cursor, family)?;
    let base = ModuleElement::basis(family, generator).or_else(|e| {
        cursor.pos = start;
        cursor.error(e.to_string())
    })?;
    Ok(act(&word, &base).scale(&coeff))
}

fn generator(cursor: &mut Cursor<'_>, family: &ModuleFamily) -> Result<BasisIndex, ParseError> {
    let bracketed = |cursor: &mut Cursor<'_>| -> Result<Option<u32>, ParseError> {
        if cursor.eat('[') {
            let n = cursor.exponent()?;
            cursor.expect(']')?;
            Ok(Some(n))
        } else {
            Ok(None)
        }
    };
    let start = cursor.pos;
    let symbol = cursor.peek();
    let one_based = |cursor: &mut Cursor<'_>, n: Option<u32>| -> Result<usize, ParseError> {
        match n {
            Some(n) if n >= 1 && (n as usize) <= family.components() => Ok(n as usize - 1),
            _ => {
                cursor.pos = start;
                cursor.error(format!("generator index must be between 1 and {}", family.components()))
            }
        }
    };
    match (family, symbol) {
        (ModuleFamily::Universal { .. }, Some('w')) => {
            cursor.pos += 1;
            match bracketed(cursor)? {
                Some(j) => Ok(BasisIndex::new(Default::default(), j, 0)),
                None => cursor.error("expected '[' after w"),
            }
        }
        (ModuleFamily::Verma { .. }, Some('v')) => {
            cursor.pos += 1;
            cursor.expect('+')?;
            Ok(BasisIndex::generator(0))
        }
        (ModuleFamily::Whittaker { .. }, Some('w')) => {
            cursor.pos += 1;
            Ok(BasisIndex::generator(0))
        }
        (ModuleFamily::Induced(_), Some('v')) => {
            cursor.pos += 1;
            let n = bracketed(cursor)?;
            Ok(BasisIndex::generator(one_based(cursor, n)?))
        }
        (ModuleFamily::DirectSum(_), Some('w')) => {
            cursor.pos += 1;
            let n = bracketed(cursor)?;
            Ok(BasisIndex::generator(one_based(cursor, n)?))
        }
        _ => cursor.error(format!("expected a generator of {}", family.name())),
    }
}

fn rational_json(r: &Rational) -> Value {
    if r.is_integer() {
        if let Ok(n) = i64::try_from(r.numer()) {
            return json!(n);
        }
    }
    json!(r.to_string())
}

fn rational_from_json(v: &Value, field: &str) -> Result<Rational, TextError> {
    let parsed = match v {
        Value::String(s) => parse_rational(s.trim()),
        Value::Number(n) => n.as_i64().map(|n| Rational::from_integer(n.into())),
        _ => None,
    };
    parsed.ok_or_else(|| TextError::Record(format!("{field}: expected an exact rational, found {v}")))
}

fn field<'v>(obj: &'v Map<String, Value>, name: &str) -> Result<&'v Value, TextError> {
    obj.get(name).ok_or_else(|| TextError::Record(format!("missing field '{name}'")))
}

fn psi_from_json(v: &Value) -> Result<WhittakerFunctional, TextError> {
    match v.as_array().map(Vec::as_slice) {
        Some([a, b]) => Ok(WhittakerFunctional::new(rational_from_json(a, "psi")?, rational_from_json(b, "psi")?)),
        _ => Err(TextError::Record("psi: expected [psi1, psi2]".into())),
    }
}

fn psi_json(psi: &WhittakerFunctional) -> Value {
    json!([rational_json(&psi.psi1), rational_json(&psi.psi2)])
}

fn matrix_from_json(v: &Value, name: &str, n: usize) -> Result<Matrix, TextError> {
    let rows = v.as_array().ok_or_else(|| TextError::Record(format!("{name}: expected an array of rows")))?;
    if rows.len() != n {
        return Err(TextError::Record(format!("{name}: expected {n} rows, found {}", rows.len())));
    }
    let mut out = Vec::with_capacity(n);
    for row in rows {
        let entries = row.as_array().ok_or_else(|| TextError::Record(format!("{name}: rows must be arrays")))?;
        if entries.len() != n {
            return Err(TextError::Record(format!("{name}: expected {n} entries per row, found {}", entries.len())));
        }
        out.push(entries.iter().map(|e| rational_from_json(e, name)).collect::<Result<Vec<_>, _>>()?);
    }
    Ok(Matrix::from_rows(out).expect("square by construction"))
}

fn matrix_json(m: &Matrix) -> Value {
    Value::Array(m.rows().iter().map(|r| Value::Array(r.iter().map(rational_json).collect())).collect())
}

/// Reads an `NPlusModule` record: `dimension`, `xi`, optional `psi`, and
/// row-major `D1`, `D2`. When `psi` is present it must match the diagonals.
/// The module is returned unvalidated.
pub fn nplus_from_json(v: &Value) -> Result<NPlusModule, TextError> {
    let obj = v.as_object().ok_or_else(|| TextError::Record("expected a JSON object".into()))?;
    let n = field(obj, "dimension")?
        .as_u64()
        .ok_or_else(|| TextError::Record("dimension: expected a positive integer".into()))? as usize;
    let xi = rational_from_json(field(obj, "xi")?, "xi")?;
    let d1 = matrix_from_json(field(obj, "D1")?, "D1", n)?;
    let d2 = matrix_from_json(field(obj, "D2")?, "D2", n)?;
    let module = NPlusModule::new(xi, d1, d2)?;
    if let Some(p) = obj.get("psi") {
        let psi = psi_from_json(p)?;
        if psi != module.psi() {
            return Err(ModuleError::InvalidNPlusModule(format!(
                "psi {} does not match the diagonals {}",
                psi,
                module.psi()
            ))
            .into());
        }
    }
    Ok(module)
}

pub fn nplus_to_json(module: &NPlusModule) -> Value {
    json!({
        "dimension": module.dim(),
        "xi": rational_json(module.xi()),
        "psi": psi_json(&module.psi()),
        "D1": matrix_json(module.d1()),
        "D2": matrix_json(module.d2()),
    })
}

/// Reads a family record. `family` is one of `universal`, `verma`,
/// `whittaker`, `induced`, `direct-sum`; a record without `family` but with
/// `dimension` is an `NPlusModule` record and describes `V_N`.
pub fn family_from_json(v: &Value) -> Result<ModuleFamily, TextError> {
    let obj = v.as_object().ok_or_else(|| TextError::Record("expected a JSON object".into()))?;
    let kind = match obj.get("family") {
        Some(Value::String(s)) => s.as_str(),
        Some(other) => return Err(TextError::Record(format!("family: expected a string, found {other}"))),
        None if obj.contains_key("dimension") => "induced",
        None => return Err(TextError::Record("missing field 'family'".into())),
    };
    let xi = || rational_from_json(field(obj, "xi")?, "xi");
    Ok(match kind {
        "universal" => ModuleFamily::universal(xi()?),
        "verma" => ModuleFamily::verma(xi()?, rational_from_json(field(obj, "h")?, "h")?),
        "whittaker" => ModuleFamily::whittaker(psi_from_json(field(obj, "psi")?)?, xi()?)?,
        "induced" => ModuleFamily::induced(nplus_from_json(v)?)?,
        "direct-sum" => {
            let summands = field(obj, "summands")?
                .as_array()
                .ok_or_else(|| TextError::Record("summands: expected an array".into()))?;
            let parsed = summands
                .iter()
                .map(|s| {
                    let o = s.as_object().ok_or_else(|| TextError::Record("summand: expected an object".into()))?;
                    Ok((psi_from_json(field(o, "psi")?)?, rational_from_json(field(o, "xi")?, "xi")?))
                })
                .collect::<Result<Vec<_>, TextError>>()?;
            ModuleFamily::direct_sum(parsed)?
        }
        other => return Err(TextError::Record(format!("unknown family '{other}'"))),
    })
}

pub fn family_to_json(family: &ModuleFamily) -> Value {
    match family {
        ModuleFamily::Universal { xi } => json!({"family": "universal", "xi": rational_json(xi)}),
        ModuleFamily::Verma { xi, h } => json!({"family": "verma", "xi": rational_json(xi), "h": rational_json(h)}),
        ModuleFamily::Whittaker { psi, xi } => {
            json!({"family": "whittaker", "psi": psi_json(psi), "xi": rational_json(xi)})
        }
        ModuleFamily::Induced(n) => {
            let mut v = nplus_to_json(n);
            v["family"] = json!("induced");
            v
        }
        ModuleFamily::DirectSum(s) => json!({
            "family": "direct-sum",
            "summands": s.iter().map(|(psi, xi)| json!({"psi": psi_json(psi), "xi": rational_json(xi)})).collect::<Vec<_>>(),
        }),
    }
}

/// Reads a family record from inline JSON or, failing that, from a file.
pub fn read_family(arg: &str) -> Result<ModuleFamily, ReadError> {
    family_from_json(&read_json(arg)?).map_err(ReadError::Text)
}

pub fn read_nplus(arg: &str) -> Result<NPlusModule, ReadError> {
    nplus_from_json(&read_json(arg)?).map_err(ReadError::Text)
}

#[derive(Debug, Error)]
pub enum ReadError {
    #[error("cannot read '{path}': {message}")]
    Io { path: String, message: String },
    #[error("invalid JSON: {0}")]
    Json(String),
    #[error(transparent)]
    Text(TextError),
}

fn read_json(arg: &str) -> Result<Value, ReadError> {
    let trimmed = arg.trim_start();
    let content = if trimmed.starts_with('{') {
        arg.to_string()
    } else {
        std::fs::read_to_string(arg).map_err(|e| ReadError::Io { path: arg.to_string(), message: e.to_string() })?
    };
    serde_json::from_str(&content).map_err(|e| ReadError::Json(e.to_string()))
}

/// Evaluates the rendering of `u·m` given both in text.
pub fn act_text<S: StructureConstants + ?Sized>(
    rules: &S,
    family: &Arc<ModuleFamily>,
    expr: &str,
    element: &str,
) -> Result<ModuleElement, ParseError> {
    let u = parse_expression(expr)?.evaluate_with(rules);
    let m = parse_element(element, family)?;
    Ok(act_with(rules, &u, &m))
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Sum(terms) => {
                for (i, (negative, e)) in terms.iter().enumerate() {
                    match (i, negative) {
                        (0, false) => {}
                        (0, true) => write!(f, "-")?,
                        (_, false) => write!(f, " + ")?,
                        (_, true) => write!(f, " - ")?,
                    }
                    write!(f, "{e}")?;
                }
                Ok(())
            }
            Expr::Product(factors) => {
                let parts: Vec<String> = factors.iter().map(ToString::to_string).collect();
                write!(f, "{}", parts.join("*"))
            }
            Expr::Power(b, e) => write!(f, "{b}^{e}"),
            Expr::D(k) => write!(f, "d({k})"),
            Expr::Z => write!(f, "z"),
            Expr::Scalar(c) => write!(f, "{c}"),
        }
    }
}
