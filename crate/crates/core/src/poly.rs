//! Polynomials as canonical sorted term lists.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{AlgebraError, Result};
use crate::field::{Field, Scalar};
use crate::monomial::{bidegree_of, default_names, Bidegree, Monomial};
use crate::order::TermOrder;

/// A polynomial over an exact field. Terms are strictly descending under
/// `order`, with no zero coefficients and no repeated monomials.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Polynomial {
    field: Field,
    order: TermOrder,
    terms: Vec<(Scalar, Monomial)>,
}

impl Polynomial {
    pub fn zero(field: Field, order: &TermOrder) -> Polynomial {
        Polynomial {
            field,
            order: order.clone(),
            terms: Vec::new(),
        }
    }

    pub fn constant(field: Field, order: &TermOrder, c: Scalar) -> Polynomial {
        Polynomial::term(field, order, c, Monomial::one(order.nvars()))
    }

    pub fn one(field: Field, order: &TermOrder) -> Polynomial {
        Polynomial::constant(field, order, field.one())
    }

    pub fn term(field: Field, order: &TermOrder, c: Scalar, m: Monomial) -> Polynomial {
        let terms = if c.is_zero() { Vec::new() } else { vec![(c, m)] };
        Polynomial {
            field,
            order: order.clone(),
            terms,
        }
    }

    pub fn var(field: Field, order: &TermOrder, i: usize) -> Polynomial {
        Polynomial::term(field, order, field.one(), Monomial::var(order.nvars(), i))
    }

    /// Canonicalizes an arbitrary term list: sorts, merges duplicates and
    /// drops zeros.
    pub fn from_terms(
        field: Field,
        order: &TermOrder,
        mut terms: Vec<(Scalar, Monomial)>,
    ) -> Result<Polynomial> {
        for (c, m) in &terms {
            if c.field() != field {
                return Err(AlgebraError::FieldMismatch(c.field(), field));
            }
            if m.nvars() != order.nvars() {
                return Err(AlgebraError::AmbientMismatch(format!(
                    "term in {} variables, ring has {}",
                    m.nvars(),
                    order.nvars()
                )));
            }
        }
        terms.sort_by(|a, b| order.compare(&b.1, &a.1));
        let mut out: Vec<(Scalar, Monomial)> = Vec::with_capacity(terms.len());
        for (c, m) in terms {
            match out.last_mut() {
                Some(last) if last.1 == m => last.0 = &last.0 + &c,
                _ => out.push((c, m)),
            }
            if out.last().map_or(false, |t| t.0.is_zero()) {
                out.pop();
            }
        }
        Ok(Polynomial {
            field,
            order: order.clone(),
            terms: out,
        })
    }

    /// Builds from terms already strictly descending with nonzero
    /// coefficients.
    pub(crate) fn from_sorted_unchecked(
        field: Field,
        order: &TermOrder,
        terms: Vec<(Scalar, Monomial)>,
    ) -> Polynomial {
        debug_assert!(terms.windows(2).all(|w| order.compare(&w[0].1, &w[1].1) == Ordering::Greater));
        debug_assert!(terms.iter().all(|t| !t.0.is_zero()));
        Polynomial {
            field,
            order: order.clone(),
            terms,
        }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn order(&self) -> &TermOrder {
        &self.order
    }

    pub fn nvars(&self) -> usize {
        self.order.nvars()
    }

    pub fn terms(&self) -> &[(Scalar, Monomial)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Scalar, Monomial)> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|t| t.1.is_one())
    }

    pub fn leading_term(&self) -> Option<&(Scalar, Monomial)> {
        self.terms.first()
    }

    pub fn lead_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.1)
    }

    pub fn lead_coeff(&self) -> Option<&Scalar> {
        self.terms.first().map(|t| &t.0)
    }

    /// Maximal total degree, `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.1.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((_, m)) => self.terms.iter().all(|t| t.1.degree() == m.degree()),
        }
    }

    /// The common bidegree in a Rees scheme with `n` base variables, or
    /// `None` if the terms disagree (or the polynomial is zero).
    pub fn bidegree(&self, n: usize) -> Result<Option<Bidegree>> {
        let mut common = None;
        for (_, m) in &self.terms {
            let b = bidegree_of(m, n)?;
            match common {
                None => common = Some(b),
                Some(c) if c != b => return Ok(None),
                _ => {}
            }
        }
        Ok(common)
    }

    fn check_compatible(&self, other: &Polynomial) -> Result<()> {
        if self.field != other.field {
            return Err(AlgebraError::FieldMismatch(self.field, other.field));
        }
        if self.order != other.order {
            return Err(AlgebraError::AmbientMismatch(format!(
                "orders differ: {} on {} variables vs {} on {}",
                self.order,
                self.nvars(),
                other.order,
                other.nvars()
            )));
        }
        Ok(())
    }

    /// `self - c * m * g`, the primitive behind division and S-pairs.
    pub fn combine(&self, g: &Polynomial, c: &Scalar, m: &Monomial) -> Result<Polynomial> {
        self.check_compatible(g)?;
        if c.field() != self.field {
            return Err(AlgebraError::FieldMismatch(c.field(), self.field));
        }
        if m.nvars() != self.nvars() {
            return Err(AlgebraError::AmbientMismatch(format!(
                "multiplier has {} variables, ring has {}",
                m.nvars(),
                self.nvars()
            )));
        }
        let neg = c.neg_ref();
        Ok(self.combine_unchecked(g, &neg, m))
    }

    /// `self + c * m * g` by a sorted merge; multiplication by a monomial
    /// preserves the order of `g`'s terms.
    pub(crate) fn combine_unchecked(&self, g: &Polynomial, c: &Scalar, m: &Monomial) -> Polynomial {
        if c.is_zero() {
            return self.clone();
        }
        let order = &self.order;
        let mut out = Vec::with_capacity(self.terms.len() + g.terms.len());
        let mut a = self.terms.iter().peekable();
        let mut b = g.terms.iter().map(|(gc, gm)| (gc * c, gm.mul(m))).peekable();
        loop {
            match (a.peek(), b.peek()) {
                (None, None) => break,
                (Some(_), None) => out.push(a.next().unwrap().clone()),
                (None, Some(_)) => out.push(b.next().unwrap()),
                (Some(x), Some(y)) => match order.compare(&x.1, &y.1) {
                    Ordering::Greater => out.push(a.next().unwrap().clone()),
                    Ordering::Less => out.push(b.next().unwrap()),
                    Ordering::Equal => {
                        let x = a.next().unwrap();
                        let y = b.next().unwrap();
                        let s = &x.0 + &y.0;
                        if !s.is_zero() {
                            out.push((s, y.1));
                        }
                    }
                },
            }
        }
        Polynomial {
            field: self.field,
            order: self.order.clone(),
            terms: out,
        }
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_compatible(other)?;
        Ok(self.combine_unchecked(other, &self.field.one(), &Monomial::one(self.nvars())))
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_compatible(other)?;
        Ok(self.combine_unchecked(other, &self.field.one().neg_ref(), &Monomial::one(self.nvars())))
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_compatible(other)?;
        let mut acc = Polynomial::zero(self.field, &self.order);
        // Accumulate over the shorter factor.
        let (short, long) = if self.len() <= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        for (c, m) in &short.terms {
            acc = acc.combine_unchecked(long, c, m);
        }
        Ok(acc)
    }

    pub fn scale(&self, c: &Scalar) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.field, &self.order);
        }
        Polynomial {
            field: self.field,
            order: self.order.clone(),
            terms: self.terms.iter().map(|(a, m)| (a * c, m.clone())).collect(),
        }
    }

    pub fn mul_term(&self, c: &Scalar, m: &Monomial) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.field, &self.order);
        }
        Polynomial {
            field: self.field,
            order: self.order.clone(),
            terms: self.terms.iter().map(|(a, u)| (a * c, u.mul(m))).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Polynomial {
        let mut acc = Polynomial::one(self.field, &self.order);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self) -> Polynomial {
        match self.lead_coeff() {
            None => self.clone(),
            Some(c) if c.is_one() => self.clone(),
            Some(c) => self.scale(&c.inverse().unwrap()),
        }
    }

    /// Re-sorts under another order on the same variables.
    pub fn with_order(&self, order: &TermOrder) -> Polynomial {
        assert_eq!(order.nvars(), self.nvars(), "order has a different variable count");
        let mut terms = self.terms.clone();
        terms.sort_by(|a, b| order.compare(&b.1, &a.1));
        Polynomial {
            field: self.field,
            order: order.clone(),
            terms,
        }
    }

    /// Applies a monomial map (for example a variable renaming or an
    /// embedding into a larger ring) and re-canonicalizes.
    pub fn map_monomials(&self, order: &TermOrder, f: impl Fn(&Monomial) -> Monomial) -> Polynomial {
        let terms = self.terms.iter().map(|(c, m)| (c.clone(), f(m))).collect();
        Polynomial::from_terms(self.field, order, terms).expect("mapped terms stay in the field")
    }

    /// Embeds into a ring with more variables, variable `i` going to
    /// `offset + i`.
    pub fn embed(&self, order: &TermOrder, offset: usize) -> Polynomial {
        let n = order.nvars();
        let map: Vec<usize> = (0..self.nvars()).map(|i| offset + i).collect();
        self.map_monomials(order, |m| m.remap(n, &map))
    }

    /// Ring homomorphism sending variable `i` to `images[i]`.
    pub fn substitute(&self, images: &[Polynomial]) -> Result<Polynomial> {
        if images.len() != self.nvars() {
            return Err(AlgebraError::AmbientMismatch(format!(
                "{} images for {} variables",
                images.len(),
                self.nvars()
            )));
        }
        let target = match images.first() {
            Some(p) => p.order.clone(),
            None => self.order.clone(),
        };
        for p in images {
            if p.field != self.field {
                return Err(AlgebraError::FieldMismatch(p.field, self.field));
            }
            if p.order != target {
                return Err(AlgebraError::AmbientMismatch("images live in different rings".into()));
            }
        }
        let mut powers: Vec<Vec<Polynomial>> = images
            .iter()
            .map(|p| vec![Polynomial::one(self.field, &target), p.clone()])
            .collect();
        let mut acc = Polynomial::zero(self.field, &target);
        for (c, m) in &self.terms {
            let mut t = Polynomial::constant(self.field, &target, c.clone());
            for (i, &e) in m.exps().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e as usize {
                    let next = &powers[i][powers[i].len() - 1] * &images[i];
                    powers[i].push(next);
                }
                t = &t * &powers[i][e as usize];
            }
            acc = &acc + &t;
        }
        Ok(acc)
    }

    /// Homogeneous component of degree `d`.
    pub fn component(&self, d: u32) -> Polynomial {
        Polynomial {
            field: self.field,
            order: self.order.clone(),
            terms: self.terms.iter().filter(|t| t.1.degree() == d).cloned().collect(),
        }
    }

    pub fn coefficient(&self, m: &Monomial) -> Option<&Scalar> {
        self.terms.iter().find(|t| &t.1 == m).map(|t| &t.0)
    }

    pub fn to_string_with(&self, names: &[String]) -> String {
        let mut s = String::new();
        if self.terms.is_empty() {
            return "0".into();
        }
        for (k, (c, m)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = if neg { c.neg_ref() } else { c.clone() };
            if k == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            if m.is_one() {
                s.push_str(&abs.to_string());
            } else {
                if !abs.is_one() {
                    s.push_str(&abs.to_string());
                    s.push('*');
                }
                m.write_with(&mut s, names).unwrap();
            }
        }
        s
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_with(&default_names(self.nvars())))
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.checked_add(rhs).expect("polynomials from different rings")
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.checked_sub(rhs).expect("polynomials from different rings")
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.checked_mul(rhs).expect("polynomials from different rings")
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(&self.field.one().neg_ref())
    }
}

/// Small builder used throughout the tests: `x(i)` style construction over a
/// fixed ring.
#[derive(Clone, Debug)]
pub struct Ring {
    pub field: Field,
    pub order: TermOrder,
}

impl Ring {
    pub fn new(field: Field, order: TermOrder) -> Ring {
        Ring { field, order }
    }

    pub fn revlex(n: usize) -> Ring {
        Ring::new(Field::Rational, TermOrder::revlex(n))
    }

    pub fn nvars(&self) -> usize {
        self.order.nvars()
    }

    pub fn zero(&self) -> Polynomial {
        Polynomial::zero(self.field, &self.order)
    }

    pub fn one(&self) -> Polynomial {
        Polynomial::one(self.field, &self.order)
    }

    pub fn var(&self, i: usize) -> Polynomial {
        Polynomial::var(self.field, &self.order, i)
    }

    pub fn scalar(&self, v: i64) -> Polynomial {
        Polynomial::constant(self.field, &self.order, self.field.from_i64(v))
    }

    pub fn monomial(&self, c: i64, exps: &[u16]) -> Polynomial {
        Polynomial::term(self.field, &self.order, self.field.from_i64(c), Monomial::from_exps(exps))
    }

    /// Sum of `c * x^e` terms.
    pub fn poly(&self, terms: &[(i64, &[u16])]) -> Polynomial {
        let t = terms
            .iter()
            .map(|(c, e)| (self.field.from_i64(*c), Monomial::from_exps(e)))
            .collect();
        Polynomial::from_terms(self.field, &self.order, t).expect("terms match the ring")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn combine_examples() {
        let r = Ring::revlex(3);
        let one = r.field.one();
        // x1*x2 - 1*x2*(x1) = 0
        let f = r.monomial(1, &[1, 1, 0]);
        let g = r.var(0);
        assert!(f.combine(&g, &one, &Monomial::from_exps(&[0, 1, 0])).unwrap().is_zero());
        // x1^2 + x2^2 - x2^2 = x1^2
        let f = r.poly(&[(1, &[2, 0, 0]), (1, &[0, 2, 0])]);
        let g = r.monomial(1, &[0, 2, 0]);
        assert_eq!(f.combine(&g, &one, &Monomial::one(3)).unwrap(), r.monomial(1, &[2, 0, 0]));
        // x1*x2 - x3^2 - (-1)*x3*x3 = x1*x2
        let f = r.poly(&[(1, &[1, 1, 0]), (-1, &[0, 0, 2])]);
        let g = r.var(2);
        let res = f.combine(&g, &r.field.from_i64(-1), &Monomial::var(3, 2)).unwrap();
        assert_eq!(res, r.monomial(1, &[1, 1, 0]));
    }

    #[test]
    fn combine_rejects_mixed_rings() {
        let r = Ring::revlex(2);
        let s = Ring::new(Field::Prime(7), TermOrder::revlex(2));
        let one = r.field.one();
        assert!(r.var(0).combine(&s.var(0), &one, &Monomial::one(2)).is_err());
        let t = Ring::revlex(3);
        assert!(r.var(0).combine(&t.var(0), &one, &Monomial::one(2)).is_err());
    }

    #[test]
    fn from_terms_merges() {
        let r = Ring::revlex(2);
        let p = r.poly(&[(1, &[1, 0]), (2, &[0, 1]), (-1, &[1, 0]), (3, &[1, 0])]);
        assert_eq!(p.to_string(), "3*x1 + 2*x2");
        let z = r.poly(&[(1, &[1, 0]), (-1, &[1, 0])]);
        assert!(z.is_zero());
    }

    #[test]
    fn substitution() {
        let r = Ring::revlex(2);
        // (x1 + x2)^2 under x1 -> x1 + x2, x2 -> 0
        let f = r.monomial(1, &[2, 0]);
        let img = vec![&r.var(0) + &r.var(1), r.zero()];
        let g = f.substitute(&img).unwrap();
        assert_eq!(g.to_string(), "x1^2 + 2*x1*x2 + x2^2");
    }

    #[test]
    fn display_signs() {
        let r = Ring::revlex(3);
        let p = r.poly(&[(1, &[1, 1, 0]), (-1, &[0, 0, 2])]);
        assert_eq!(p.to_string(), "x1*x2 - x3^2");
        assert_eq!((-&p).to_string(), "-x1*x2 + x3^2");
    }
}
