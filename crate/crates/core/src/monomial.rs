//! Dense exponent-vector monomials.

use std::fmt;

use serde::{Deserialize, Serialize};
use smallvec::SmallVec;

use crate::error::{AlgebraError, Result};

pub(crate) type Exps = SmallVec<[u16; 16]>;

/// A monomial `x^e` in a fixed number of variables. The total degree is
/// cached and kept in sync by every constructor.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Exps,
    degree: u32,
}

impl Monomial {
    pub fn one(nvars: usize) -> Monomial {
        Monomial {
            exps: SmallVec::from_elem(0, nvars),
            degree: 0,
        }
    }

    pub fn var(nvars: usize, i: usize) -> Monomial {
        let mut m = Monomial::one(nvars);
        m.exps[i] = 1;
        m.degree = 1;
        m
    }

    pub fn from_exps(exps: &[u16]) -> Monomial {
        let degree = exps.iter().map(|&e| e as u32).sum();
        Monomial {
            exps: SmallVec::from_slice(exps),
            degree,
        }
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn exps(&self) -> &[u16] {
        &self.exps
    }

    pub fn exp(&self, i: usize) -> u16 {
        self.exps[i]
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    /// Sum of exponents over the variables `range`.
    pub fn partial_degree(&self, range: std::ops::Range<usize>) -> u32 {
        self.exps[range].iter().map(|&e| e as u32).sum()
    }

    pub fn weighted_degree(&self, weights: &[i64]) -> i64 {
        self.exps
            .iter()
            .zip(weights)
            .map(|(&e, &w)| e as i64 * w)
            .sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| a + b)
            .collect();
        Monomial {
            exps,
            degree: self.degree + other.degree,
        }
    }

    pub fn checked_mul(&self, other: &Monomial) -> Result<Monomial> {
        if self.nvars() != other.nvars() {
            return Err(ambient(self, other));
        }
        Ok(self.mul(other))
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.degree <= other.degree && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self` when `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        let exps = other.exps.iter().zip(&self.exps).map(|(a, b)| a - b).collect();
        Some(Monomial {
            exps,
            degree: other.degree - self.degree,
        })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let exps: Exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| *a.max(b))
            .collect();
        let degree = exps.iter().map(|&e| e as u32).sum();
        Monomial { exps, degree }
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let exps: Exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| *a.min(b))
            .collect();
        let degree = exps.iter().map(|&e| e as u32).sum();
        Monomial { exps, degree }
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Indices of variables with positive exponent.
    pub fn support(&self) -> Vec<usize> {
        (0..self.nvars()).filter(|&i| self.exps[i] > 0).collect()
    }

    /// The variable index sequence `i_1 <= ... <= i_d` with multiplicity.
    pub fn index_sequence(&self) -> Vec<usize> {
        let mut seq = Vec::with_capacity(self.degree as usize);
        for (i, &e) in self.exps.iter().enumerate() {
            for _ in 0..e {
                seq.push(i);
            }
        }
        seq
    }

    pub fn from_index_sequence(nvars: usize, seq: &[usize]) -> Monomial {
        let mut m = Monomial::one(nvars);
        for &i in seq {
            m.exps[i] += 1;
        }
        m.degree = seq.len() as u32;
        m
    }

    /// Reorders variables: variable `i` of `self` becomes variable `map[i]`
    /// of a ring with `nvars` variables.
    pub fn remap(&self, nvars: usize, map: &[usize]) -> Monomial {
        let mut m = Monomial::one(nvars);
        for (i, &e) in self.exps.iter().enumerate() {
            m.exps[map[i]] += e;
        }
        m.degree = self.degree;
        m
    }

    pub fn pow(&self, k: u32) -> Monomial {
        Monomial {
            exps: self.exps.iter().map(|&e| e * k as u16).collect(),
            degree: self.degree * k,
        }
    }

    /// All monomials of degree `d` in `nvars` variables, lexicographically
    /// descending by exponent vector.
    pub fn all_of_degree(nvars: usize, d: u32) -> Vec<Monomial> {
        let mut out = Vec::new();
        let mut cur = vec![0u16; nvars];
        fill(&mut out, &mut cur, 0, d);
        out
    }

    pub(crate) fn write_with(&self, f: &mut impl fmt::Write, names: &[String]) -> fmt::Result {
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_char('*')?;
            }
            first = false;
            f.write_str(&names[i])?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        if first {
            f.write_char('1')?;
        }
        Ok(())
    }
}

fn fill(out: &mut Vec<Monomial>, cur: &mut [u16], i: usize, left: u32) {
    if cur.is_empty() {
        if left == 0 {
            out.push(Monomial::from_exps(cur));
        }
        return;
    }
    if i == cur.len() - 1 {
        cur[i] = left as u16;
        out.push(Monomial::from_exps(cur));
        cur[i] = 0;
        return;
    }
    for e in (0..=left).rev() {
        cur[i] = e as u16;
        fill(out, cur, i + 1, left - e);
    }
    cur[i] = 0;
}

fn ambient(a: &Monomial, b: &Monomial) -> AlgebraError {
    AlgebraError::AmbientMismatch(format!("{} vs {} variables", a.nvars(), b.nvars()))
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.exps.as_slice())
    }
}

/// Default printing uses `x1, x2, ...`.
impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = default_names(self.nvars());
        self.write_with(f, &names)
    }
}

pub fn default_names(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("x{i}")).collect()
}

/// `x1..xn, y1..yn`.
pub fn rees_names(n: usize) -> Vec<String> {
    (1..=n)
        .map(|i| format!("x{i}"))
        .chain((1..=n).map(|i| format!("y{i}")))
        .collect()
}

/// Total degree and y-degree of a monomial in `x_1..x_n, y_1..y_n`, with
/// `deg x_i = (1,0)` and `deg y_i = (1,1)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct Bidegree {
    pub a: i64,
    pub b: i64,
}

/// Bidegree of `m` in a Rees scheme whose first `n` variables are the
/// x-block and last `n` the y-block.
pub fn bidegree_of(m: &Monomial, n: usize) -> Result<Bidegree> {
    if m.nvars() != 2 * n {
        return Err(AlgebraError::AmbientMismatch(format!(
            "monomial has {} variables, Rees scheme expects {}",
            m.nvars(),
            2 * n
        )));
    }
    let q = m.partial_degree(n..2 * n) as i64;
    Ok(Bidegree {
        a: m.degree() as i64,
        b: q,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bidegrees() {
        let n = 3;
        let x1y2 = Monomial::from_exps(&[1, 0, 0, 0, 1, 0]);
        assert_eq!(bidegree_of(&x1y2, n).unwrap(), Bidegree { a: 2, b: 1 });
        let y1y2 = Monomial::from_exps(&[0, 0, 0, 1, 1, 0]);
        assert_eq!(bidegree_of(&y1y2, n).unwrap(), Bidegree { a: 2, b: 2 });
        let x1x2 = Monomial::from_exps(&[1, 1, 0, 0, 0, 0]);
        assert_eq!(bidegree_of(&x1x2, n).unwrap(), Bidegree { a: 2, b: 0 });
        assert!(bidegree_of(&Monomial::one(5), 3).is_err());
    }

    #[test]
    fn divisibility_and_lcm() {
        let a = Monomial::from_exps(&[2, 1, 0]);
        let b = Monomial::from_exps(&[3, 1, 4]);
        assert!(a.divides(&b));
        assert!(!b.divides(&a));
        assert_eq!(a.quotient_of(&b).unwrap().exps(), &[1, 0, 4]);
        let c = Monomial::from_exps(&[0, 2, 1]);
        assert_eq!(a.lcm(&c).exps(), &[2, 2, 1]);
        assert_eq!(a.lcm(&c).degree(), 5);
        assert_eq!(a.gcd(&c).exps(), &[0, 1, 0]);
    }

    #[test]
    fn enumerate_degree() {
        let ms = Monomial::all_of_degree(3, 2);
        assert_eq!(ms.len(), 6);
        assert_eq!(ms[0].exps(), &[2, 0, 0]);
        assert_eq!(Monomial::all_of_degree(2, 0).len(), 1);
        assert_eq!(Monomial::all_of_degree(0, 0).len(), 1);
        assert_eq!(Monomial::all_of_degree(0, 1).len(), 0);
    }

    #[test]
    fn index_sequences() {
        let m = Monomial::from_exps(&[2, 0, 1]);
        assert_eq!(m.index_sequence(), vec![0, 0, 2]);
        assert_eq!(Monomial::from_index_sequence(3, &[0, 0, 2]), m);
        assert_eq!(m.to_string(), "x1^2*x3");
    }
}
