//! Text format for ideals:
//!
//! ```text
//! # the conic
//! field: q
//! vars: x1 x2 x3
//! order: revlex
//! x1*x2 - x3^2
//! ```
//!
//! Header keys are optional (defaults `q`, `revlex`); `vars: 3` is short for
//! `x1 x2 x3`. Every other non-blank line is one generator.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{AlgebraError, Result};
use crate::field::Field;
use crate::groebner::Ideal;
use crate::monomial::default_names;
use crate::order::TermOrder;
use crate::poly::Polynomial;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealFile {
    pub field: Field,
    pub order: TermOrder,
    pub names: Vec<String>,
    pub generators: Vec<Polynomial>,
    pub homogeneous: bool,
}

impl IdealFile {
    pub fn ideal(&self) -> Result<Ideal> {
        Ideal::with_names(self.field, &self.order, self.names.clone(), self.generators.clone())
    }

    pub fn from_ideal(ideal: &Ideal) -> IdealFile {
        IdealFile {
            field: ideal.field(),
            order: ideal.order().clone(),
            names: ideal.names().to_vec(),
            generators: ideal.generators().to_vec(),
            homogeneous: ideal.is_homogeneous(),
        }
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct ParseOptions {
    pub require_homogeneous: bool,
    /// Overrides the header.
    pub field: Option<Field>,
}

fn perr(line: usize, column: usize, message: impl Into<String>) -> AlgebraError {
    AlgebraError::Parse {
        line,
        column,
        message: message.into(),
    }
}

pub fn parse_ideal(text: &str, opts: ParseOptions) -> Result<IdealFile> {
    let mut field = Field::Rational;
    let mut order_name = "revlex".to_string();
    let mut names: Option<Vec<String>> = None;
    let mut body: Vec<(usize, &str)> = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        let content = raw.split('#').next().unwrap().trim();
        if content.is_empty() {
            continue;
        }
        if let Some((key, value)) = content.split_once(':') {
            let value = value.trim();
            match key.trim() {
                "field" => {
                    field = Field::parse(value).map_err(|e| perr(line, 1, e.to_string()))?;
                    continue;
                }
                "order" => {
                    order_name = value.to_string();
                    continue;
                }
                "vars" => {
                    names = Some(match value.parse::<usize>() {
                        Ok(n) => default_names(n),
                        Err(_) => value.split_whitespace().map(String::from).collect(),
                    });
                    continue;
                }
                _ => {}
            }
        }
        body.push((line, raw));
    }
    if let Some(f) = opts.field {
        field = f;
    }
    let names = match names {
        Some(n) => n,
        None => infer_names(&body),
    };
    let order = TermOrder::parse(&order_name, names.len())?;
    let mut generators = Vec::new();
    for (line, raw) in body {
        let mut p = Parser {
            src: raw.as_bytes(),
            pos: 0,
            line,
            field,
            order: &order,
            names: &names,
        };
        let g = p.parse_line()?;
        if g.is_zero() {
            return Err(perr(line, 1, "zero generator"));
        }
        if opts.require_homogeneous && !g.is_homogeneous() {
            return Err(AlgebraError::NotHomogeneous(format!("line {line}: {}", raw.trim())));
        }
        generators.push(g);
    }
    let homogeneous = generators.iter().all(|g| g.is_homogeneous());
    Ok(IdealFile {
        field,
        order,
        names,
        generators,
        homogeneous,
    })
}

/// One polynomial in the given ring.
pub fn parse_polynomial(text: &str, field: Field, order: &TermOrder, names: &[String]) -> Result<Polynomial> {
    Parser {
        src: text.as_bytes(),
        pos: 0,
        line: 1,
        field,
        order,
        names,
    }
    .parse_line()
}

/// Without a `vars` header the ring is `x1..xN` for the largest index used.
fn infer_names(body: &[(usize, &str)]) -> Vec<String> {
    let mut n = 0;
    for (_, raw) in body {
        let b = raw.as_bytes();
        let mut i = 0;
        while i < b.len() {
            if b[i] == b'x' && (i == 0 || !b[i - 1].is_ascii_alphanumeric()) {
                let start = i + 1;
                let mut j = start;
                while j < b.len() && b[j].is_ascii_digit() {
                    j += 1;
                }
                if let Ok(k) = raw[start..j].parse::<usize>() {
                    n = n.max(k);
                }
                i = j;
            } else {
                i += 1;
            }
        }
    }
    default_names(n)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    line: usize,
    field: Field,
    order: &'a TermOrder,
    names: &'a [String],
}

impl Parser<'_> {
    fn err(&self, msg: impl Into<String>) -> AlgebraError {
        perr(self.line, self.pos + 1, msg)
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn parse_line(&mut self) -> Result<Polynomial> {
        let p = self.expr()?;
        if let Some(c) = self.peek() {
            return Err(self.err(format!("unexpected {:?}", c as char)));
        }
        Ok(p)
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut acc = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                -&self.term()?
            }
            Some(b'+') => {
                self.pos += 1;
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.factor()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            acc = &acc * &self.factor()?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let e = self.integer()?;
            let e: u32 = e.try_into().map_err(|_| self.err("exponent too large"))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn integer(&mut self) -> Result<BigInt> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected a number"));
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        Ok(s.parse().unwrap())
    }

    fn atom(&mut self) -> Result<Polynomial> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let p = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                Ok(p)
            }
            Some(c) if c.is_ascii_digit() => {
                let num = self.integer()?;
                let mut q = BigRational::from_integer(num);
                if self.peek() == Some(b'/') {
                    self.pos += 1;
                    self.skip_ws();
                    let den = self.integer()?;
                    if den == BigInt::from(0) {
                        return Err(self.err("division by zero"));
                    }
                    q /= BigRational::from_integer(den);
                }
                let c = self.field.from_rational(&q).map_err(|e| self.err(e.to_string()))?;
                Ok(Polynomial::constant(self.field, self.order, c))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                match self.names.iter().position(|n| n == name) {
                    Some(i) => Ok(Polynomial::var(self.field, self.order, i)),
                    None => Err(perr(self.line, start + 1, format!("unknown variable {name:?}"))),
                }
            }
            Some(c) => Err(self.err(format!("unexpected {:?}", c as char))),
            None => Err(self.err("unexpected end of line")),
        }
    }
}

pub fn print_ideal(f: &IdealFile) -> String {
    let mut out = format!(
        "field: {}\nvars: {}\norder: {}\n",
        f.field,
        f.names.join(" "),
        f.order.descriptor()
    );
    for g in &f.generators {
        out.push_str(&g.to_string_with(&f.names));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Ring;

    #[test]
    fn conic() {
        let f = parse_ideal("x1*x2 - x3^2\n", ParseOptions::default()).unwrap();
        let r = Ring::revlex(3);
        assert_eq!(f.generators, vec![r.poly(&[(1, &[1, 1, 0]), (-1, &[0, 0, 2])])]);
        assert!(f.homogeneous);
    }

    #[test]
    fn empty_is_zero_ideal() {
        let f = parse_ideal("vars: 2\n", ParseOptions::default()).unwrap();
        assert!(f.generators.is_empty());
        assert_eq!(f.names.len(), 2);
    }

    #[test]
    fn errors() {
        let strict = ParseOptions {
            require_homogeneous: true,
            ..Default::default()
        };
        assert!(matches!(parse_ideal("x1 + 1", strict), Err(AlgebraError::NotHomogeneous(_))));
        assert!(matches!(
            parse_ideal("vars: x1 x2\nx1 * z", ParseOptions::default()),
            Err(AlgebraError::Parse { line: 2, column: 6, .. })
        ));
        assert!(parse_ideal("x1 - x1", ParseOptions::default()).is_err());
        assert!(parse_ideal("x1 +", ParseOptions::default()).is_err());
    }

    #[test]
    fn rationals_and_parentheses() {
        let f = parse_ideal("vars: 2\n(x1 + x2)^2 - 1/2*x1*x2", ParseOptions::default()).unwrap();
        let printed = print_ideal(&f);
        assert!(printed.ends_with("x1^2 + 3/2*x1*x2 + x2^2\n"), "{printed}");
        assert_eq!(parse_ideal(&printed, ParseOptions::default()).unwrap(), f);
    }
}
