//! Hilbert series of graded modules presented by monomial data.
//!
//! A series is stored as `t^shift * N(t) / (1 - t)^n` with integer
//! numerator `N`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::monomial::Monomial;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HilbertSeries {
    nvars: usize,
    shift: i64,
    numer: Vec<i64>,
}

impl HilbertSeries {
    pub fn zero(nvars: usize) -> HilbertSeries {
        HilbertSeries {
            nvars,
            shift: 0,
            numer: Vec::new(),
        }
    }

    /// Series of the free module `B(-d)`.
    pub fn free(nvars: usize, d: i64) -> HilbertSeries {
        HilbertSeries {
            nvars,
            shift: d,
            numer: vec![1],
        }
        .normalized()
    }

    pub fn from_numerator(nvars: usize, shift: i64, numer: Vec<i64>) -> HilbertSeries {
        HilbertSeries { nvars, shift, numer }.normalized()
    }

    /// Series of `B/M` for a monomial ideal `M` given by generators.
    pub fn of_monomial_quotient(nvars: usize, gens: &[Monomial]) -> HilbertSeries {
        HilbertSeries {
            nvars,
            shift: 0,
            numer: monomial_numerator(gens.to_vec()),
        }
        .normalized()
    }

    /// Series of `⊕_j B(-degrees[j]) / M_j` where `per_comp[j]` generates the
    /// monomial ideal `M_j` in component `j`.
    pub fn of_monomial_module(nvars: usize, degrees: &[i64], per_comp: &[Vec<Monomial>]) -> HilbertSeries {
        let mut acc = HilbertSeries::zero(nvars);
        for (d, gens) in degrees.iter().zip(per_comp) {
            let piece = HilbertSeries::of_monomial_quotient(nvars, gens).shifted(*d);
            acc = acc.add(&piece);
        }
        acc
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn shift(&self) -> i64 {
        self.shift
    }

    pub fn numerator(&self) -> &[i64] {
        &self.numer
    }

    pub fn is_zero(&self) -> bool {
        self.numer.is_empty()
    }

    fn normalized(mut self) -> HilbertSeries {
        while self.numer.last() == Some(&0) {
            self.numer.pop();
        }
        let lead_zeros = self.numer.iter().take_while(|&&c| c == 0).count();
        if lead_zeros == self.numer.len() {
            self.numer.clear();
            self.shift = 0;
            return self;
        }
        self.numer.drain(..lead_zeros);
        self.shift += lead_zeros as i64;
        self
    }

    /// Multiplies by `t^d` (the series of `M(-d)`).
    pub fn shifted(&self, d: i64) -> HilbertSeries {
        let mut s = self.clone();
        if !s.is_zero() {
            s.shift += d;
        }
        s
    }

    pub fn add(&self, other: &HilbertSeries) -> HilbertSeries {
        self.combine(other, 1)
    }

    pub fn sub(&self, other: &HilbertSeries) -> HilbertSeries {
        self.combine(other, -1)
    }

    fn combine(&self, other: &HilbertSeries, sign: i64) -> HilbertSeries {
        assert_eq!(self.nvars, other.nvars, "series over different rings");
        if other.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            let mut o = other.clone();
            o.numer.iter_mut().for_each(|c| *c *= sign);
            return o;
        }
        let lo = self.shift.min(other.shift);
        let hi = (self.shift + self.numer.len() as i64).max(other.shift + other.numer.len() as i64);
        let mut numer = vec![0i64; (hi - lo) as usize];
        for (k, c) in self.numer.iter().enumerate() {
            numer[(self.shift - lo) as usize + k] += c;
        }
        for (k, c) in other.numer.iter().enumerate() {
            numer[(other.shift - lo) as usize + k] += sign * c;
        }
        HilbertSeries {
            nvars: self.nvars,
            shift: lo,
            numer,
        }
        .normalized()
    }

    /// Multiplies by `(1 - t^c)`.
    pub fn times_one_minus_t_pow(&self, c: u32) -> HilbertSeries {
        self.sub(&self.shifted(c as i64))
    }

    /// Value of the Hilbert function in degree `d`.
    pub fn coefficient(&self, d: i64) -> i64 {
        let n = self.nvars;
        let mut total: i128 = 0;
        for (k, &c) in self.numer.iter().enumerate() {
            let e = d - self.shift - k as i64;
            if e < 0 {
                continue;
            }
            total += c as i128 * binomial(e + n as i64 - 1, n.saturating_sub(1)) as i128;
        }
        if n == 0 {
            let idx = d - self.shift;
            return if idx >= 0 && (idx as usize) < self.numer.len() {
                self.numer[idx as usize]
            } else {
                0
            };
        }
        total as i64
    }

    /// The numerator with all factors `(1 - t)` cancelled, and the Krull
    /// dimension of the module (`None` for the zero module).
    pub fn reduced(&self) -> Option<(Vec<i64>, usize)> {
        if self.is_zero() {
            return None;
        }
        let mut h = self.numer.clone();
        let mut dim = self.nvars;
        while dim > 0 && h.iter().sum::<i64>() == 0 {
            // divide by (1 - t)
            let mut q = Vec::with_capacity(h.len() - 1);
            let mut acc = 0i64;
            for &c in &h[..h.len() - 1] {
                acc += c;
                q.push(acc);
            }
            h = q;
            dim -= 1;
        }
        Some((h, dim))
    }

    pub fn krull_dim(&self) -> Option<usize> {
        self.reduced().map(|(_, d)| d)
    }

    /// Degree from which the Hilbert function agrees with the Hilbert
    /// polynomial.
    pub fn polynomial_from(&self) -> Option<i64> {
        let (h, dim) = self.reduced()?;
        Some(self.shift + h.len() as i64 - dim as i64)
    }

    /// Least degree in which the module is nonzero.
    pub fn initial_degree(&self) -> Option<i64> {
        if self.is_zero() {
            return None;
        }
        let (h, dim) = self.reduced()?;
        if dim == 0 {
            return h.iter().position(|&c| c != 0).map(|k| self.shift + k as i64);
        }
        // With dim > 0 the function is eventually positive; scan upward.
        let mut d = self.shift;
        loop {
            if self.coefficient(d) != 0 {
                return Some(d);
            }
            d += 1;
        }
    }

    /// Largest degree in which a finite-length module is nonzero.
    pub fn top_degree(&self) -> Option<i64> {
        let (h, dim) = self.reduced()?;
        if dim != 0 {
            return None;
        }
        h.iter().rposition(|&c| c != 0).map(|k| self.shift + k as i64)
    }

    /// A degree `m` such that the Hilbert function is positive in every
    /// degree `>= m`. `None` for modules of finite length.
    pub fn positivity_bound(&self) -> Option<i64> {
        let (h, dim) = self.reduced()?;
        if dim == 0 {
            return None;
        }
        let poly = hilbert_polynomial(self.shift, &h, dim);
        let lead = poly.last().unwrap().clone();
        let mut bound = BigRational::zero();
        for c in &poly[..poly.len() - 1] {
            let r = (c / &lead).abs();
            if r > bound {
                bound = r;
            }
        }
        let cauchy = (bound + BigRational::one()).ceil().to_integer().to_i64().unwrap();
        let start = self.polynomial_from().unwrap().max(cauchy + 1);
        // Hilbert function equals the polynomial from `start` on, and the
        // polynomial has no real root beyond the Cauchy bound.
        let mut m = start;
        while self.coefficient(m - 1) > 0 {
            m -= 1;
        }
        Some(m)
    }
}

/// Coefficients (ascending powers of `d`) of the Hilbert polynomial of
/// `t^shift h(t) / (1-t)^dim`.
fn hilbert_polynomial(shift: i64, h: &[i64], dim: usize) -> Vec<BigRational> {
    let mut poly = vec![BigRational::zero(); dim];
    let mut fact = BigInt::one();
    for i in 1..dim {
        fact *= i;
    }
    for (k, &c) in h.iter().enumerate() {
        if c == 0 {
            continue;
        }
        // C(d - s - k + dim - 1, dim - 1) = prod_{i=1}^{dim-1} (d - s - k + i) / (dim-1)!
        let mut term = vec![BigRational::one()];
        for i in 1..dim as i64 {
            let a = BigRational::from_integer(BigInt::from(i - shift - k as i64));
            let mut next = vec![BigRational::zero(); term.len() + 1];
            for (e, t) in term.iter().enumerate() {
                next[e] += t * &a;
                next[e + 1] += t;
            }
            term = next;
        }
        let scale = BigRational::new(BigInt::from(c), fact.clone());
        for (e, t) in term.iter().enumerate() {
            poly[e] += t * &scale;
        }
    }
    poly
}

pub(crate) fn binomial(n: i64, k: usize) -> i64 {
    if n < 0 || (k as i64) > n {
        return 0;
    }
    let k = k.min((n - k as i64) as usize);
    let mut r: i128 = 1;
    for i in 0..k as i64 {
        r = r * (n - i) as i128 / (i + 1) as i128;
    }
    r as i64
}

/// Numerator `K(t)` with `HS(B/M) = K(t) / (1-t)^n`.
pub fn monomial_numerator(gens: Vec<Monomial>) -> Vec<i64> {
    let gens = minimalize(gens);
    if gens.is_empty() {
        return vec![1];
    }
    if gens.iter().any(|m| m.is_one()) {
        return Vec::new();
    }
    // Pairwise coprime generators: product of (1 - t^deg).
    let nvars = gens[0].nvars();
    let mut counts = vec![0usize; nvars];
    for m in &gens {
        for v in m.support() {
            counts[v] += 1;
        }
    }
    let (pivot, &best) = counts.iter().enumerate().max_by_key(|(i, &c)| (c, std::cmp::Reverse(*i))).unwrap();
    if best <= 1 {
        let mut k = vec![1i64];
        for m in &gens {
            k = poly_mul_one_minus(&k, m.degree() as usize);
        }
        return k;
    }
    let p = Monomial::var(nvars, pivot);
    // K(M) = K(M + (p)) + t * K(M : p)
    let mut plus = gens.clone();
    plus.push(p.clone());
    let colon: Vec<Monomial> = gens
        .iter()
        .map(|m| {
            let mut e = m.exps().to_vec();
            if e[pivot] > 0 {
                e[pivot] -= 1;
            }
            Monomial::from_exps(&e)
        })
        .collect();
    let a = monomial_numerator(plus);
    let b = monomial_numerator(colon);
    let len = a.len().max(b.len() + 1);
    let mut out = vec![0i64; len];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i + 1] += c;
    }
    out
}

fn poly_mul_one_minus(k: &[i64], d: usize) -> Vec<i64> {
    let mut out = vec![0i64; k.len() + d];
    for (i, c) in k.iter().enumerate() {
        out[i] += c;
        out[i + d] -= c;
    }
    out
}

/// Minimal generators of a monomial ideal.
pub fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by_key(|m| m.degree());
    gens.dedup();
    let mut out: Vec<Monomial> = Vec::with_capacity(gens.len());
    for m in gens {
        if !out.iter().any(|g| g.divides(&m)) {
            out.push(m);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u16]) -> Monomial {
        Monomial::from_exps(e)
    }

    fn count_standard(nvars: usize, gens: &[Monomial], d: u32) -> i64 {
        Monomial::all_of_degree(nvars, d)
            .into_iter()
            .filter(|u| !gens.iter().any(|g| g.divides(u)))
            .count() as i64
    }

    #[test]
    fn agrees_with_counting() {
        let gens = vec![m(&[1, 1, 0]), m(&[0, 2, 1]), m(&[2, 0, 2]), m(&[0, 0, 3])];
        let hs = HilbertSeries::of_monomial_quotient(3, &gens);
        for d in 0..10 {
            assert_eq!(hs.coefficient(d as i64), count_standard(3, &gens, d));
        }
    }

    #[test]
    fn dimensions() {
        let hs = HilbertSeries::of_monomial_quotient(2, &[m(&[1, 1])]);
        assert_eq!(hs.krull_dim(), Some(1));
        assert_eq!(hs.coefficient(0), 1);
        assert_eq!(hs.coefficient(5), 2);
        let art = HilbertSeries::of_monomial_quotient(2, &[m(&[2, 0]), m(&[0, 2])]);
        assert_eq!(art.krull_dim(), Some(0));
        assert_eq!(art.top_degree(), Some(2));
        assert!(HilbertSeries::of_monomial_quotient(2, &[m(&[0, 0])]).is_zero());
    }

    #[test]
    fn shifted_free_modules() {
        let f = HilbertSeries::free(3, 2);
        assert_eq!(f.coefficient(1), 0);
        assert_eq!(f.coefficient(2), 1);
        assert_eq!(f.coefficient(3), 3);
        assert_eq!(f.initial_degree(), Some(2));
        let z = f.sub(&f);
        assert!(z.is_zero());
        let neg = HilbertSeries::free(2, -3);
        assert_eq!(neg.coefficient(-3), 1);
        assert_eq!(neg.coefficient(-2), 2);
    }

    #[test]
    fn positivity() {
        // k[x,y]/(xy): HF = 1, 2, 2, 2, ...
        let hs = HilbertSeries::of_monomial_quotient(2, &[m(&[1, 1])]);
        assert_eq!(hs.positivity_bound(), Some(0));
        let shifted = HilbertSeries::free(1, -4);
        assert_eq!(shifted.positivity_bound(), Some(-4));
    }
}
