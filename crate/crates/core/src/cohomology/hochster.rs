//! Simplicial complexes, Stanley-Reisner ideals and Hochster's formula for
//! the local cohomology of `k[Δ]`.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::error::{AlgebraError, Result};
use crate::field::Field;
use crate::groebner::Ideal;
use crate::hilbert::binomial;
use crate::linalg::{rank, SparseRow};
use crate::monomial::Monomial;
use crate::order::TermOrder;
use crate::poly::Polynomial;

use super::profile::{CohomologyProfile, IndexProfile, Provenance, Tail};

/// A simplicial complex on vertices `1..=v` given by its facets.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SimplicialComplex {
    v: usize,
    facets: Vec<Vec<usize>>,
}

type Face = Vec<usize>;

impl SimplicialComplex {
    /// Facets are sorted and deduplicated; a facet contained in another is
    /// an error.
    pub fn new(v: usize, facets: Vec<Vec<usize>>) -> Result<SimplicialComplex> {
        let mut fs: Vec<Vec<usize>> = facets
            .into_iter()
            .map(|mut f| {
                f.sort_unstable();
                f.dedup();
                f
            })
            .collect();
        fs.sort();
        fs.dedup();
        for f in &fs {
            if f.iter().any(|&x| x == 0 || x > v) {
                return Err(AlgebraError::InvalidComplex(format!("facet {f:?} outside 1..={v}")));
            }
        }
        for (i, f) in fs.iter().enumerate() {
            for (j, g) in fs.iter().enumerate() {
                if i != j && is_subset(f, g) {
                    return Err(AlgebraError::InvalidComplex(format!("facet {f:?} lies in {g:?}")));
                }
            }
        }
        Ok(SimplicialComplex { v, facets: fs })
    }

    /// The full simplex on `v` vertices.
    pub fn simplex(v: usize) -> SimplicialComplex {
        SimplicialComplex::new(v, vec![(1..=v).collect()]).unwrap()
    }

    pub fn vertices(&self) -> usize {
        self.v
    }

    pub fn facets(&self) -> &[Vec<usize>] {
        &self.facets
    }

    /// All faces including the empty face.
    pub fn faces(&self) -> BTreeSet<Face> {
        let mut out = BTreeSet::new();
        out.insert(Vec::new());
        for f in &self.facets {
            for mask in 1u64..(1 << f.len()) {
                let face: Face = f.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &x)| x).collect();
                out.insert(face);
            }
        }
        out
    }

    pub fn is_face(&self, s: &[usize]) -> bool {
        self.facets.iter().any(|f| is_subset(s, f))
    }

    /// `dim k[Δ]` = size of the largest facet.
    pub fn krull_dim(&self) -> usize {
        self.facets.iter().map(|f| f.len()).max().unwrap_or(0)
    }

    /// `lk F = {G : G ∩ F = ∅, G ∪ F ∈ Δ}`, as a set of faces.
    pub fn link(&self, f: &[usize]) -> BTreeSet<Face> {
        let mut out = BTreeSet::new();
        for facet in &self.facets {
            if !is_subset(f, facet) {
                continue;
            }
            let rest: Vec<usize> = facet.iter().copied().filter(|x| !f.contains(x)).collect();
            for mask in 0u64..(1 << rest.len()) {
                out.insert(rest.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &x)| x).collect());
            }
        }
        out
    }

    /// Minimal non-faces, sorted by size then lexicographically.
    pub fn minimal_nonfaces(&self) -> Vec<Face> {
        let mut out = Vec::new();
        let max = self.krull_dim() + 1;
        for size in 1..=max.min(self.v) {
            for s in combinations(self.v, size) {
                if self.is_face(&s) {
                    continue;
                }
                let minimal = (0..s.len()).all(|k| {
                    let mut t = s.clone();
                    t.remove(k);
                    self.is_face(&t)
                });
                if minimal {
                    out.push(s);
                }
            }
        }
        out
    }

    /// The Stanley-Reisner ideal in `k[x_1..x_v]` under revlex.
    pub fn stanley_reisner_ideal(&self, field: Field) -> Ideal {
        let order = TermOrder::revlex(self.v);
        let gens = self
            .minimal_nonfaces()
            .into_iter()
            .map(|s| {
                let mut e = vec![0u16; self.v];
                for x in s {
                    e[x - 1] = 1;
                }
                Polynomial::term(field, &order, field.one(), Monomial::from_exps(&e))
            })
            .collect();
        Ideal::new(field, &order, gens).unwrap()
    }
}

fn is_subset(a: &[usize], b: &[usize]) -> bool {
    a.iter().all(|x| b.binary_search(x).is_ok())
}

fn combinations(v: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn go(start: usize, v: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for x in start..=v {
            if v - x + 1 < k - cur.len() {
                break;
            }
            cur.push(x);
            go(x + 1, v, k, cur, out);
            cur.pop();
        }
    }
    go(1, v, k, &mut cur, &mut out);
    out
}

/// Dimensions of reduced cohomology `H̃^k(Γ; field)` for `k = -1..=dim Γ`,
/// returned as a map `k -> dim` (zeros omitted). `Γ` must contain the
/// empty face.
pub fn reduced_cohomology(field: Field, faces: &BTreeSet<Face>) -> BTreeMap<i64, i64> {
    let max = faces.iter().map(|f| f.len()).max().unwrap_or(0);
    // by_size[s] lists the faces with s vertices; cochains in degree s - 1.
    let mut by_size: Vec<Vec<&Face>> = vec![Vec::new(); max + 1];
    for f in faces {
        by_size[f.len()].push(f);
    }
    let index: Vec<BTreeMap<&Face, usize>> = by_size
        .iter()
        .map(|fs| fs.iter().enumerate().map(|(i, f)| (*f, i)).collect())
        .collect();
    // rank of the boundary from size s to size s - 1
    let mut ranks = vec![0i64; max + 2];
    for s in 1..=max {
        let rows: Vec<SparseRow> = by_size[s]
            .iter()
            .map(|f| {
                let mut row = SparseRow::new();
                for k in 0..f.len() {
                    let mut g = (*f).clone();
                    g.remove(k);
                    let sign = if k % 2 == 0 { field.one() } else { field.one().neg_ref() };
                    row.insert(index[s - 1][&g], sign);
                }
                row
            })
            .collect();
        ranks[s] = rank(field, rows) as i64;
    }
    let mut out = BTreeMap::new();
    for s in 0..=max {
        let d = by_size[s].len() as i64 - ranks[s] - ranks[s + 1];
        if d != 0 {
            out.insert(s as i64 - 1, d);
        }
    }
    out
}

/// Number of exponent vectors supported exactly on a set of size `f` with
/// total degree `e`.
fn exact_support_count(f: usize, e: i64) -> i64 {
    if f == 0 {
        return i64::from(e == 0);
    }
    binomial(e - 1, f - 1)
}

/// `H^i_m(k[Δ])` by Hochster's formula:
/// `dim H^i_a = Σ_F dim H̃^{i-|F|-1}(lk F) · #{u : supp u = F, |u| = -a}`.
pub fn hochster_profile(field: Field, delta: &SimplicialComplex, window: (i64, i64)) -> CohomologyProfile {
    let d = delta.krull_dim();
    // contributions[i] = list of (|F|, multiplicity)
    let mut contributions: Vec<BTreeMap<usize, i64>> = vec![BTreeMap::new(); d + 1];
    for f in delta.faces() {
        let h = reduced_cohomology(field, &delta.link(&f));
        for (k, dim) in h {
            let i = k + f.len() as i64 + 1;
            if i >= 0 && (i as usize) <= d {
                *contributions[i as usize].entry(f.len()).or_insert(0) += dim;
            }
        }
    }
    let (lo, hi) = window;
    let mut indices = Vec::new();
    for contrib in &contributions {
        let dim_at = |a: i64| -> i64 { contrib.iter().map(|(&f, &m)| m * exact_support_count(f, -a)).sum() };
        let a = contrib.keys().min().map(|&f| -(f as i64));
        let support = (lo..=hi).filter_map(|a| {
            let x = dim_at(a);
            (x != 0).then_some((a, x))
        });
        let tail = if contrib.keys().any(|&f| f > 0) {
            Tail::AllNonzero
        } else {
            Tail::None
        };
        indices.push(IndexProfile {
            a,
            support: support.collect(),
            tail,
            exact: None,
        });
    }
    while indices.last().map_or(false, |x| x.is_zero()) {
        indices.pop();
    }
    CohomologyProfile {
        n: delta.vertices(),
        window,
        indices,
        provenance: Provenance::Computed,
    }
}

/// Local cohomology of the Stanley-Reisner ideal `I ⊂ T = k[x_1..x_v]` from
/// `0 -> I -> T -> k[Δ] -> 0`: `H^i(I) = H^{i-1}(k[Δ])` for `i < v`, and
/// `dim H^v(I)_a = dim H^{v-1}(k[Δ])_a + dim H^v(T)_a` when `I != 0`.
pub fn ideal_profile_via_ses(field: Field, delta: &SimplicialComplex, window: (i64, i64)) -> Result<CohomologyProfile> {
    let v = delta.vertices();
    if delta.facets().len() == 1 && delta.facets()[0].len() == v {
        return Ok(CohomologyProfile::zero(v, window));
    }
    let a_prof = hochster_profile(field, delta, window);
    let mut indices = vec![IndexProfile::zero()];
    for i in 1..v {
        match a_prof.index(i as i64 - 1) {
            Some(p) => indices.push(p.clone()),
            None => indices.push(IndexProfile::zero()),
        }
    }
    // i = v
    let (lo, hi) = window;
    let below = a_prof.index(v as i64 - 1);
    let mut support = BTreeMap::new();
    for a in lo..=hi {
        let mut d = exact_support_count(v, -a);
        if let Some(p) = below {
            d += p.support.get(&a).copied().unwrap_or(0);
        }
        if d != 0 {
            support.insert(a, d);
        }
    }
    let top = below.and_then(|p| p.a).max(Some(-(v as i64)));
    indices.push(IndexProfile {
        a: top,
        support,
        tail: Tail::AllNonzero,
        exact: None,
    });
    while indices.last().map_or(false, |x| x.is_zero()) {
        indices.pop();
    }
    Ok(CohomologyProfile {
        n: v,
        window,
        indices,
        provenance: Provenance::Computed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cohomology_of_small_complexes() {
        let f = Field::Rational;
        // circle: boundary of a triangle
        let c = SimplicialComplex::new(3, vec![vec![1, 2], vec![2, 3], vec![1, 3]]).unwrap();
        let h = reduced_cohomology(f, &c.faces());
        assert_eq!(h, BTreeMap::from([(1, 1)]));
        // two points
        let p = SimplicialComplex::new(2, vec![vec![1], vec![2]]).unwrap();
        assert_eq!(reduced_cohomology(f, &p.faces()), BTreeMap::from([(0, 1)]));
        // {∅}
        let empty: BTreeSet<Face> = [Vec::new()].into_iter().collect();
        assert_eq!(reduced_cohomology(f, &empty), BTreeMap::from([(-1, 1)]));
    }

    #[test]
    fn simplex_profile_is_polynomial_ring() {
        let s = SimplicialComplex::simplex(3);
        let p = hochster_profile(Field::Rational, &s, (-6, 2));
        assert_eq!(p.indices.len(), 4);
        assert_eq!(p.a(3), Some(-3));
        assert_eq!(p.dim(3, -4), Some(3));
        assert!((0..3).all(|i| p.a(i).is_none()));
        assert!(s.minimal_nonfaces().is_empty());
    }

    #[test]
    fn rejects_nested_facets() {
        assert!(SimplicialComplex::new(3, vec![vec![1, 2], vec![1, 2, 3]]).is_err());
        assert!(SimplicialComplex::new(3, vec![vec![1, 4]]).is_err());
    }

    #[test]
    fn two_points_ideal() {
        let p = SimplicialComplex::new(2, vec![vec![1], vec![2]]).unwrap();
        let sr = p.stanley_reisner_ideal(Field::Rational);
        assert_eq!(sr.generators().len(), 1);
        let ip = ideal_profile_via_ses(Field::Rational, &p, (-4, 2)).unwrap();
        assert_eq!(ip.a(1), None);
        assert_eq!(ip.a(2), Some(0));
        assert_eq!((ip.dim(2, 0), ip.dim(2, -1), ip.dim(2, -2)), (Some(1), Some(2), Some(3)));
    }
}
