//! The line-based curve specification format.
//!
//! ```text
//! # comment
//! ring: x, y
//! factor: y^2 - x^3
//! weights: 2, 3
//! tag: tame
//! ```

use std::sync::Arc;

use crate::algebra::{MultiPoly, Rational};
use crate::error::{Error, Result};
use crate::family::FamilySpec;
use crate::oracle::{semigroup_data, AlgebraPresentation};
use crate::topology::CurveSpec;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Tag {
    Tame,
    Lci,
    Monomial(Vec<u32>),
}

/// Parsed contents of a specification file.
#[derive(Clone, Debug, PartialEq)]
pub struct ParsedSpec {
    pub vars: Option<Arc<[String]>>,
    pub factors: Vec<MultiPoly>,
    pub weights: Option<Vec<u32>>,
    pub tags: Vec<Tag>,
}

impl ParsedSpec {
    pub fn is_tame(&self) -> bool {
        self.tags.contains(&Tag::Tame)
    }

    pub fn monomial_generators(&self) -> Option<&[u32]> {
        self.tags.iter().find_map(|t| match t {
            Tag::Monomial(g) => Some(g.as_slice()),
            _ => None,
        })
    }

    pub fn curve_spec(&self) -> Result<CurveSpec> {
        CurveSpec::new(self.factors.clone())
    }

    /// The family `f = product of factors`.
    pub fn family_spec(&self) -> Result<FamilySpec> {
        let Some(first) = self.factors.first() else {
            return Err(Error::InvalidCurveSpec("a family needs a factor line".into()));
        };
        let f = self.factors.iter().skip(1).fold(first.clone(), |acc, g| &acc * g);
        Ok(FamilySpec::plane(f)?.with_tame(self.is_tame()))
    }

    /// Presentation for the oracle: the curve's coordinate ring, or the monomial curve.
    pub fn presentation(&self) -> Result<AlgebraPresentation> {
        if self.factors.is_empty() {
            let gens = self
                .monomial_generators()
                .ok_or_else(|| Error::InvalidCurveSpec("no factor lines".into()))?;
            return semigroup_data(gens)?.presentation();
        }
        let spec = self.curve_spec()?;
        AlgebraPresentation::plane_curve(spec.product(), self.weights.clone())
    }
}

fn syntax(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Syntax { line, column, message: message.into() }
}

fn is_ident_start(c: char) -> bool {
    c.is_ascii_alphabetic() || c == '_'
}

fn is_ident_char(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '_'
}

pub fn parse_curve_spec(text: &str) -> Result<ParsedSpec> {
    let mut spec = ParsedSpec { vars: None, factors: Vec::new(), weights: None, tags: Vec::new() };
    let mut weights_line = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("");
        if content.trim().is_empty() {
            continue;
        }
        let Some(colon) = content.find(':') else {
            let col = content.len() - content.trim_start().len() + 1;
            return Err(syntax(line, col, "expected `key: value`"));
        };
        let key = content[..colon].trim();
        let value = &content[colon + 1..];
        let value_col = colon + 2;
        match key {
            "ring" => {
                if spec.vars.is_some() {
                    return Err(syntax(line, 1, "ring declared twice"));
                }
                spec.vars = Some(parse_ring(value, line, value_col)?);
            }
            "factor" => {
                let vars = spec.vars.as_ref().ok_or(Error::RingNotDeclared { line })?;
                let p = parse_polynomial(vars, value, line, value_col)?;
                if p.is_zero() {
                    return Err(Error::ZeroFactor { line });
                }
                spec.factors.push(p);
            }
            "weights" => {
                spec.weights = Some(parse_naturals(value, line, value_col, true)?);
                weights_line = line;
            }
            "tag" => spec.tags.push(parse_tag(value, line, value_col)?),
            other => return Err(syntax(line, 1, format!("unknown key `{other}`"))),
        }
    }
    if let (Some(w), Some(v)) = (&spec.weights, &spec.vars) {
        if w.len() != v.len() {
            return Err(syntax(weights_line, 1, format!("{} weights for {} variables", w.len(), v.len())));
        }
    }
    if spec.factors.is_empty() && spec.monomial_generators().is_none() {
        return Err(Error::InvalidCurveSpec("no factor lines".into()));
    }
    Ok(spec)
}

fn parse_ring(value: &str, line: usize, col0: usize) -> Result<Arc<[String]>> {
    let mut names: Vec<String> = Vec::new();
    let mut offset = 0;
    for part in value.split(',') {
        let lead = part.len() - part.trim_start().len();
        let name = part.trim();
        let col = col0 + offset + lead;
        if name.is_empty() || !name.starts_with(is_ident_start) || !name.chars().all(is_ident_char) {
            return Err(syntax(line, col, format!("invalid variable name `{name}`")));
        }
        if names.iter().any(|n| n == name) {
            return Err(syntax(line, col, format!("variable `{name}` declared twice")));
        }
        names.push(name.to_string());
        offset += part.len() + 1;
    }
    Ok(names.into())
}

fn parse_naturals(value: &str, line: usize, col0: usize, positive: bool) -> Result<Vec<u32>> {
    let mut out = Vec::new();
    let mut offset = 0;
    for part in value.split(',') {
        let lead = part.len() - part.trim_start().len();
        let n: u32 = part
            .trim()
            .parse()
            .map_err(|_| syntax(line, col0 + offset + lead, format!("expected a natural number, found `{}`", part.trim())))?;
        if positive && n == 0 {
            return Err(syntax(line, col0 + offset + lead, "weights must be positive"));
        }
        out.push(n);
        offset += part.len() + 1;
    }
    Ok(out)
}

fn parse_tag(value: &str, line: usize, col0: usize) -> Result<Tag> {
    let lead = value.len() - value.trim_start().len();
    let v = value.trim();
    match v {
        "tame" => Ok(Tag::Tame),
        "lci" => Ok(Tag::Lci),
        _ if v.starts_with("monomial(") && v.ends_with(')') => {
            let inner = &v["monomial(".len()..v.len() - 1];
            Ok(Tag::Monomial(parse_naturals(inner, line, col0 + lead + "monomial(".len(), true)?))
        }
        _ => Err(syntax(line, col0 + lead, format!("unknown tag `{v}`"))),
    }
}

/// Parses one polynomial expression; `col0` is the 1-based column of `text[0]` in its line.
pub fn parse_polynomial(vars: &Arc<[String]>, text: &str, line: usize, col0: usize) -> Result<MultiPoly> {
    let mut p = Parser { vars, chars: text.chars().collect(), pos: 0, line, col0 };
    p.skip_ws();
    if p.at_end() {
        return Err(p.error("empty expression"));
    }
    let e = p.expr()?;
    p.skip_ws();
    if !p.at_end() {
        return Err(p.error(format!("unexpected `{}`", p.chars[p.pos])));
    }
    Ok(e)
}

struct Parser<'a> {
    vars: &'a Arc<[String]>,
    chars: Vec<char>,
    pos: usize,
    line: usize,
    col0: usize,
}

impl Parser<'_> {
    fn at_end(&self) -> bool {
        self.pos >= self.chars.len()
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn error(&self, message: impl Into<String>) -> Error {
        syntax(self.line, self.col0 + self.pos, message)
    }

    fn expr(&mut self) -> Result<MultiPoly> {
        self.skip_ws();
        let mut acc = MultiPoly::zero(self.vars);
        let mut sign = match self.peek() {
            Some('-') => {
                self.pos += 1;
                -1
            }
            Some('+') => {
                self.pos += 1;
                1
            }
            _ => 1,
        };
        loop {
            let t = self.term()?;
            acc = if sign < 0 { &acc - &t } else { &acc + &t };
            self.skip_ws();
            match self.peek() {
                Some('+') => sign = 1,
                Some('-') => sign = -1,
                _ => return Ok(acc),
            }
            self.pos += 1;
        }
    }

    fn term(&mut self) -> Result<MultiPoly> {
        self.skip_ws();
        let mut acc = MultiPoly::one(self.vars);
        let mut any = false;
        loop {
            self.skip_ws();
            match self.peek() {
                Some('*') if any => {
                    self.pos += 1;
                    self.skip_ws();
                    if !self.peek().is_some_and(|c| c.is_ascii_digit() || c == '(' || is_ident_start(c)) {
                        return Err(self.error("expected a factor after `*`"));
                    }
                }
                Some(c) if c.is_ascii_digit() || c == '(' || is_ident_start(c) => {}
                _ => break,
            }
            let f = self.factor()?;
            acc = &acc * &f;
            any = true;
        }
        if !any {
            return Err(match self.peek() {
                Some(c) => self.error(format!("unexpected `{c}`")),
                None => self.error("unexpected end of expression"),
            });
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<MultiPoly> {
        let c = self.peek().unwrap();
        let base = if c.is_ascii_digit() {
            MultiPoly::constant(self.vars, self.number()?)
        } else if c == '(' {
            let open = self.pos;
            self.pos += 1;
            let e = self.expr()?;
            self.skip_ws();
            if self.peek() != Some(')') {
                return Err(if self.at_end() {
                    syntax(self.line, self.col0 + open, "unclosed `(`")
                } else {
                    self.error("expected `)`")
                });
            }
            self.pos += 1;
            e
        } else {
            self.variable()?
        };
        self.skip_ws();
        if self.peek() == Some('^') {
            self.pos += 1;
            self.skip_ws();
            let start = self.pos;
            while self.peek().is_some_and(|c| c.is_ascii_digit()) {
                self.pos += 1;
            }
            let digits: String = self.chars[start..self.pos].iter().collect();
            let e: u32 = digits.parse().map_err(|_| syntax(self.line, self.col0 + start, "expected an exponent"))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn digits(&mut self) -> String {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        self.chars[start..self.pos].iter().collect()
    }

    fn number(&mut self) -> Result<Rational> {
        let num: num_bigint::BigInt = self.digits().parse().expect("digits");
        if self.peek() == Some('/') {
            self.pos += 1;
            let at = self.pos;
            let den = self.digits();
            let den: num_bigint::BigInt = den.parse().map_err(|_| syntax(self.line, self.col0 + at, "expected a denominator"))?;
            if den == num_bigint::BigInt::from(0) {
                return Err(syntax(self.line, self.col0 + at, "zero denominator"));
            }
            return Ok(Rational::new(num, den));
        }
        Ok(Rational::from_integer(num))
    }

    /// Longest declared variable name starting here.
    fn variable(&mut self) -> Result<MultiPoly> {
        let rest: String = self.chars[self.pos..].iter().collect();
        let best = self
            .vars
            .iter()
            .enumerate()
            .filter(|(_, v)| rest.starts_with(v.as_str()))
            .max_by_key(|(_, v)| v.len());
        match best {
            Some((i, v)) => {
                self.pos += v.chars().count();
                Ok(MultiPoly::var(self.vars, i))
            }
            None => {
                let name: String = rest.chars().take_while(|&c| is_ident_char(c)).collect();
                Err(Error::UnknownVariable { name, line: self.line, column: self.col0 + self.pos })
            }
        }
    }
}
