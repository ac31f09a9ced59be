//! Plain-text fixtures of functions and fields.
//!
//! ```text
//! # comment
//! coords x1 x2 | xi1 xi2
//! [group header]
//! 2 x1 D[x1] + (xi1 xi2 - 1/2 x2^2) D[xi1]
//! ```
//!
//! Products are juxtaposition, `D[c]` is the derivation along `c`, and a
//! line without any `D[..]` is a function.

use super::{Coord, Coordinates, SuperPolynomial, SuperVectorField};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq)]
pub enum Parsed {
    Function(SuperPolynomial),
    Field(SuperVectorField),
}

impl Parsed {
    pub fn into_field(self) -> Option<SuperVectorField> {
        match self {
            Parsed::Field(f) => Some(f),
            Parsed::Function(p) if p.is_zero() => Some(SuperVectorField::zero()),
            Parsed::Function(_) => None,
        }
    }

    pub fn into_function(self) -> Option<SuperPolynomial> {
        match self {
            Parsed::Function(p) => Some(p),
            Parsed::Field(_) => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Fixture {
    pub coords: Coordinates,
    pub groups: Vec<(String, Vec<Parsed>)>,
}

impl Fixture {
    pub fn parse(text: &str) -> Result<Self> {
        let mut coords = None;
        let mut groups: Vec<(String, Vec<Parsed>)> = Vec::new();
        for (n, raw) in text.lines().enumerate() {
            let line = raw.trim();
            let err = |msg: &str| Error::Parse { line: n + 1, msg: msg.into() };
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            if let Some(rest) = line.strip_prefix("coords") {
                let (e, o) = rest.split_once('|').ok_or_else(|| err("coords need a `|`"))?;
                let even: Vec<&str> = e.split_whitespace().collect();
                let odd: Vec<&str> = o.split_whitespace().collect();
                coords = Some(Coordinates::new(&even, &odd));
                continue;
            }
            if let Some(h) = line.strip_prefix('[').and_then(|l| l.strip_suffix(']')) {
                groups.push((h.trim().to_string(), Vec::new()));
                continue;
            }
            let c = coords.as_ref().ok_or_else(|| err("expression before coords"))?;
            let g = groups.last_mut().ok_or_else(|| err("expression before a group header"))?;
            let v = parse_expr(line, c).map_err(|m| err(&m))?;
            g.1.push(v);
        }
        let coords = coords.ok_or(Error::Parse { line: 0, msg: "missing coords".into() })?;
        Ok(Fixture { coords, groups })
    }

    pub fn group(&self, header: &str) -> Option<&[Parsed]> {
        self.groups.iter().find(|g| g.0 == header).map(|g| g.1.as_slice())
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(Scalar),
    Name(String),
    D(String),
    Caret,
    Plus,
    Minus,
    Open,
    Close,
}

fn tokenize(s: &str) -> std::result::Result<Vec<Tok>, String> {
    let cs: Vec<char> = s.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < cs.len() {
        let c = cs[i];
        match c {
            ' ' | '\t' => i += 1,
            '+' => (out.push(Tok::Plus), i += 1).1,
            '-' => (out.push(Tok::Minus), i += 1).1,
            '(' => (out.push(Tok::Open), i += 1).1,
            ')' => (out.push(Tok::Close), i += 1).1,
            '^' => (out.push(Tok::Caret), i += 1).1,
            '0'..='9' => {
                let st = i;
                while i < cs.len() && (cs[i].is_ascii_digit() || cs[i] == '/') {
                    i += 1;
                }
                let t: String = cs[st..i].iter().collect();
                let (n, d) = t.split_once('/').unwrap_or((&t, "1"));
                let n: i64 = n.parse().map_err(|_| format!("bad number `{t}`"))?;
                let d: i64 = d.parse().map_err(|_| format!("bad number `{t}`"))?;
                if d == 0 {
                    return Err(format!("bad number `{t}`"));
                }
                out.push(Tok::Num(Scalar::new(n, d)));
            }
            c if c.is_ascii_alphabetic() => {
                let st = i;
                while i < cs.len() && cs[i].is_ascii_alphanumeric() {
                    i += 1;
                }
                let name: String = cs[st..i].iter().collect();
                if name == "D" && cs.get(i) == Some(&'[') {
                    let end = cs[i..].iter().position(|&c| c == ']').ok_or("unterminated D[")? + i;
                    out.push(Tok::D(cs[i + 1..end].iter().collect::<String>().trim().to_string()));
                    i = end + 1;
                } else {
                    out.push(Tok::Name(name));
                }
            }
            _ => return Err(format!("unexpected `{c}`")),
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<Tok>,
    pos: usize,
    coords: &'a Coordinates,
}

type Res<T> = std::result::Result<T, String>;

impl Parser<'_> {
    fn nx(&self) -> usize {
        self.coords.even.len()
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn expr(&mut self) -> Res<Parsed> {
        let mut sign = Scalar::one();
        match self.peek() {
            Some(Tok::Minus) => {
                self.pos += 1;
                sign = Scalar::int(-1);
            }
            Some(Tok::Plus) => self.pos += 1,
            _ => {}
        }
        let mut v = scale(self.term()?, &sign);
        while let Some(t) = self.peek() {
            let s = match t {
                Tok::Plus => Scalar::one(),
                Tok::Minus => Scalar::int(-1),
                _ => break,
            };
            self.pos += 1;
            let rhs = self.term()?;
            v = add(v, scale(rhs, &s))?;
        }
        Ok(v)
    }

    fn term(&mut self) -> Res<Parsed> {
        let mut v = Parsed::Function(SuperPolynomial::constant(self.nx(), Scalar::one()));
        let mut any = false;
        while let Some(t) = self.peek() {
            if matches!(t, Tok::Plus | Tok::Minus | Tok::Close) {
                break;
            }
            let f = self.factor()?;
            v = mul(v, f)?;
            any = true;
        }
        if !any {
            return Err("empty term".into());
        }
        Ok(v)
    }

    fn factor(&mut self) -> Res<Parsed> {
        match self.next() {
            Some(Tok::Open) => {
                let v = self.expr()?;
                if self.next() != Some(Tok::Close) {
                    return Err("missing `)`".into());
                }
                Ok(v)
            }
            Some(Tok::Num(c)) => Ok(Parsed::Function(SuperPolynomial::constant(self.nx(), c))),
            Some(Tok::D(name)) => {
                let c = self.coord(&name)?;
                Ok(Parsed::Field(SuperVectorField::partial(self.nx(), c)))
            }
            Some(Tok::Name(name)) => {
                let c = self.coord(&name)?;
                let x = SuperPolynomial::var(self.nx(), c);
                if self.peek() == Some(&Tok::Caret) {
                    self.pos += 1;
                    let Some(Tok::Num(e)) = self.next() else { return Err("exponent expected".into()) };
                    let e = e.to_integer().filter(|&e| e >= 0).ok_or("bad exponent")?;
                    let mut p = SuperPolynomial::constant(self.nx(), Scalar::one());
                    for _ in 0..e {
                        p = p.mul(&x);
                    }
                    return Ok(Parsed::Function(p));
                }
                Ok(Parsed::Function(x))
            }
            t => Err(format!("unexpected token {t:?}")),
        }
    }

    fn coord(&self, name: &str) -> Res<Coord> {
        self.coords.lookup(name).ok_or_else(|| format!("unknown coordinate `{name}`"))
    }
}

fn scale(v: Parsed, c: &Scalar) -> Parsed {
    match v {
        Parsed::Function(p) => Parsed::Function(p.scale(c)),
        Parsed::Field(x) => Parsed::Field(x.scale(c)),
    }
}

fn add(a: Parsed, b: Parsed) -> Res<Parsed> {
    match (a, b) {
        (Parsed::Function(p), Parsed::Function(q)) => Ok(Parsed::Function(p.add(&q))),
        (Parsed::Field(x), Parsed::Field(y)) => Ok(Parsed::Field(x.add(&y))),
        (Parsed::Function(p), Parsed::Field(x)) | (Parsed::Field(x), Parsed::Function(p)) if p.is_zero() => {
            Ok(Parsed::Field(x))
        }
        _ => Err("sum of a function and a field".into()),
    }
}

fn mul(a: Parsed, b: Parsed) -> Res<Parsed> {
    match (a, b) {
        (Parsed::Function(p), Parsed::Function(q)) => Ok(Parsed::Function(p.mul(&q))),
        (Parsed::Function(p), Parsed::Field(x)) => Ok(Parsed::Field(x.times(&p))),
        _ => Err("a field can only be multiplied from the left".into()),
    }
}

/// Parses one expression over the given coordinates.
pub fn parse_expr(s: &str, coords: &Coordinates) -> std::result::Result<Parsed, String> {
    let toks = tokenize(s)?;
    let mut p = Parser { toks, pos: 0, coords };
    let v = p.expr()?;
    if p.pos != p.toks.len() {
        return Err("trailing input".into());
    }
    Ok(v)
}
