//! Minimal graded free resolutions over the polynomial ring, Betti tables
//! and the invariants read off from them.

use std::collections::BTreeMap;
use std::fmt;

use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::error::{AlgebraError, Result};
use crate::field::{Field, Scalar};
use crate::groebner::{groebner_basis, syzygies, FreeModule, Ideal, Term, Vector};
use crate::hilbert::HilbertSeries;
use crate::order::{ModuleOrder, TermOrder};
use crate::poly::Polynomial;

/// A graded module `coker(⊕ B(-relation degrees) -> ⊕ B(-degrees))`.
#[derive(Clone, Debug)]
pub struct Presentation {
    field: Field,
    base: TermOrder,
    degrees: Vec<i64>,
    relations: Vec<Vector>,
}

impl Presentation {
    /// Relations are given as vectors in any order on the free module; they
    /// are re-sorted under position-over-term.
    pub fn new(field: Field, base: &TermOrder, degrees: Vec<i64>, relations: Vec<Vector>) -> Result<Presentation> {
        let fm = plain(field, base, degrees.clone());
        let relations: Vec<Vector> = relations.iter().map(|v| fm.resort(v)).filter(|v| !v.is_zero()).collect();
        for v in &relations {
            if v.terms.iter().any(|t| t.comp as usize >= degrees.len()) {
                return Err(AlgebraError::AmbientMismatch("relation outside the free module".into()));
            }
            if !fm.is_homogeneous(v) {
                return Err(AlgebraError::NotHomogeneous("inhomogeneous relation".into()));
            }
        }
        Ok(Presentation {
            field,
            base: base.clone(),
            degrees,
            relations,
        })
    }

    /// `B/J`.
    pub fn quotient(ideal: &Ideal) -> Result<Presentation> {
        ideal.require_homogeneous()?;
        let base = TermOrder::revlex(ideal.nvars());
        let fm = plain(ideal.field(), &base, vec![0]);
        let rels = ideal
            .generators()
            .iter()
            .map(|g| fm.from_polys(&[g.with_order(&base)]))
            .collect();
        Presentation::new(ideal.field(), &base, vec![0], rels)
    }

    /// The free module `⊕ B(-d)`.
    pub fn free(field: Field, nvars: usize, degrees: Vec<i64>) -> Presentation {
        Presentation::new(field, &TermOrder::revlex(nvars), degrees, Vec::new()).unwrap()
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn nvars(&self) -> usize {
        self.base.nvars()
    }

    pub fn degrees(&self) -> &[i64] {
        &self.degrees
    }

    pub fn relations(&self) -> &[Vector] {
        &self.relations
    }

    pub fn resolve(&self) -> Result<Resolution> {
        minimal_free_resolution(self)
    }
}

fn plain(field: Field, base: &TermOrder, degrees: Vec<i64>) -> FreeModule {
    FreeModule::new(field, ModuleOrder::position_over_term(base.clone()), degrees)
}

/// A graded free resolution `F_r -> ... -> F_1 -> F_0`. `maps[i]` lists the
/// images of the basis of `F_{i+1}` in `F_i`.
#[derive(Clone, Debug)]
pub struct Resolution {
    field: Field,
    base: TermOrder,
    modules: Vec<FreeModule>,
    maps: Vec<Vec<Vector>>,
    minimal: bool,
}

impl Resolution {
    /// Reassembles a resolution from module degrees and map columns.
    pub(crate) fn from_parts(
        field: Field,
        base: &TermOrder,
        degrees: Vec<Vec<i64>>,
        maps: Vec<Vec<Vector>>,
        minimal: bool,
    ) -> Result<Resolution> {
        if maps.len() + 1 != degrees.len().max(1) {
            return Err(AlgebraError::InvalidArgument("map count does not match module count".into()));
        }
        Ok(Resolution {
            field,
            base: base.clone(),
            modules: degrees.into_iter().map(|d| plain(field, base, d)).collect(),
            maps,
            minimal,
        })
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn nvars(&self) -> usize {
        self.base.nvars()
    }

    pub fn is_minimal(&self) -> bool {
        self.minimal
    }

    /// `r`: index of the last nonzero module.
    pub fn length(&self) -> usize {
        self.maps.len()
    }

    pub fn module(&self, i: usize) -> Option<&FreeModule> {
        self.modules.get(i)
    }

    pub fn degrees(&self, i: usize) -> &[i64] {
        self.modules.get(i).map_or(&[], |m| m.degrees())
    }

    pub fn rank(&self, i: usize) -> usize {
        self.degrees(i).len()
    }

    /// Images of the basis of `F_i` in `F_{i-1}` (`i >= 1`).
    pub fn map(&self, i: usize) -> &[Vector] {
        if i == 0 {
            return &[];
        }
        self.maps.get(i - 1).map_or(&[], |m| m.as_slice())
    }

    /// The matrix of `F_i -> F_{i-1}`, rows indexed by the basis of
    /// `F_{i-1}`.
    pub fn matrix(&self, i: usize) -> Vec<Vec<Polynomial>> {
        let rows = self.rank(i.wrapping_sub(1));
        let cols = self.map(i);
        let zero = Polynomial::zero(self.field, &self.base);
        let mut out = vec![vec![zero; cols.len()]; rows];
        if let Some(target) = self.modules.get(i.wrapping_sub(1)) {
            for (c, v) in cols.iter().enumerate() {
                for (r, p) in target.to_polys(v).into_iter().enumerate() {
                    out[r][c] = p;
                }
            }
        }
        out
    }

    pub fn betti_table(&self) -> BettiTable {
        let mut entries = BTreeMap::new();
        for (i, m) in self.modules.iter().enumerate() {
            for &d in m.degrees() {
                *entries.entry((i, d)).or_insert(0) += 1;
            }
        }
        BettiTable {
            n: self.nvars(),
            entries,
        }
    }

    /// Alternating sum of the series of the free modules.
    pub fn euler_series(&self) -> HilbertSeries {
        let n = self.nvars();
        let mut acc = HilbertSeries::zero(n);
        for (i, m) in self.modules.iter().enumerate() {
            for &d in m.degrees() {
                let s = HilbertSeries::free(n, d);
                acc = if i % 2 == 0 { acc.add(&s) } else { acc.sub(&s) };
            }
        }
        acc
    }

    /// Checks `d_{i} d_{i+1} = 0` and degree-zero homogeneity.
    pub fn is_complex(&self) -> bool {
        for (i, imgs) in self.maps.iter().enumerate() {
            let target = &self.modules[i];
            for (c, v) in imgs.iter().enumerate() {
                let want = self.modules[i + 1].degrees()[c];
                if v.terms.iter().any(|t| target.term_degree(&t.mon, t.comp) != want) {
                    return false;
                }
            }
            if i > 0 {
                let prev = &self.maps[i - 1];
                for v in imgs {
                    if !crate::groebner::apply_map(&self.modules[i - 1], prev, v).is_zero() {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// The resolution of the image of `F_1 -> F_0` (for `B/J`: of `J`).
    pub fn drop_front(&self) -> Resolution {
        if self.maps.is_empty() {
            return Resolution {
                field: self.field,
                base: self.base.clone(),
                modules: Vec::new(),
                maps: Vec::new(),
                minimal: self.minimal,
            };
        }
        Resolution {
            field: self.field,
            base: self.base.clone(),
            modules: self.modules[1..].to_vec(),
            maps: self.maps[1..].to_vec(),
            minimal: self.minimal,
        }
    }

    /// Presentation of `coker(F_1 -> F_0)`.
    pub fn presentation(&self) -> Presentation {
        Presentation {
            field: self.field,
            base: self.base.clone(),
            degrees: self.degrees(0).to_vec(),
            relations: self.map(1).to_vec(),
        }
    }
}

/// Schreyer resolution followed by cancellation of unit entries.
pub fn minimal_free_resolution(p: &Presentation) -> Result<Resolution> {
    let mut res = schreyer_resolution(p)?;
    minimalize(&mut res);
    Ok(res)
}

/// A (generally non-minimal) free resolution from iterated Schreyer
/// syzygies.
pub fn schreyer_resolution(p: &Presentation) -> Result<Resolution> {
    let n = p.nvars();
    let f0 = FreeModule::graded(p.field, &p.base, p.degrees.clone());
    let relations: Vec<Vector> = p.relations.iter().map(|v| f0.resort(v)).collect();
    let mut cur = groebner_basis(&f0, &relations);
    let mut cur_fm = f0;
    let mut modules = vec![plain(p.field, &p.base, p.degrees.clone())];
    let mut maps = Vec::new();
    while !cur.is_empty() {
        if maps.len() > 2 * n + 4 {
            return Err(AlgebraError::InvalidComplex("resolution did not terminate".into()));
        }
        sort_for_schreyer(&mut cur);
        let (next, syz) = syzygies(&cur_fm, &cur)?;
        let target = modules.last().unwrap().clone();
        maps.push(cur.iter().map(|v| target.resort(v)).collect::<Vec<_>>());
        modules.push(plain(p.field, &p.base, next.degrees().to_vec()));
        cur_fm = next;
        cur = syz;
    }
    Ok(Resolution {
        field: p.field,
        base: p.base.clone(),
        modules,
        maps,
        minimal: false,
    })
}

/// Groups by leading component, and within a component sorts leading
/// monomials lexicographically descending. With this ordering the Schreyer
/// resolution has length at most the number of variables.
fn sort_for_schreyer(v: &mut [Vector]) {
    v.sort_by(|a, b| {
        let (la, lb) = (a.lead().unwrap(), b.lead().unwrap());
        la.comp.cmp(&lb.comp).then_with(|| lb.mon.exps().cmp(la.mon.exps()))
    });
}

fn minimalize(res: &mut Resolution) {
    for k in 0..res.maps.len() {
        while let Some((r, c, u)) = first_unit(&res.maps[k]) {
            cancel(res, k, r, c, &u);
        }
    }
    while res.maps.last().map_or(false, |m| m.is_empty()) {
        res.maps.pop();
        res.modules.pop();
    }
    res.minimal = true;
}

/// First constant entry in `(row, column)` order.
fn first_unit(cols: &[Vector]) -> Option<(u32, usize, Scalar)> {
    let mut best: Option<(u32, usize, Scalar)> = None;
    for (c, v) in cols.iter().enumerate() {
        for t in &v.terms {
            if t.mon.is_one() && best.as_ref().map_or(true, |(r, _, _)| t.comp < *r) {
                best = Some((t.comp, c, t.coeff.clone()));
            }
        }
    }
    best
}

/// Splits off the trivial summand `B(-d) --u--> B(-d)` at row `r`, column
/// `c` of `maps[k]`.
fn cancel(res: &mut Resolution, k: usize, r: u32, c: usize, u: &Scalar) {
    let target = res.modules[k].clone();
    let pivot = res.maps[k][c].clone();
    let u_inv = u.inverse().unwrap();
    let nv = res.nvars();
    for (j, col) in res.maps[k].iter_mut().enumerate() {
        if j == c {
            continue;
        }
        let row_terms: Vec<Term> = col.terms.iter().filter(|t| t.comp == r).cloned().collect();
        let mut acc = col.clone();
        for t in row_terms {
            let q = (&t.coeff * &u_inv).neg_ref();
            acc = target.add_multiple(&acc, &pivot, &q, &t.mon);
        }
        *col = acc;
    }
    res.maps[k].remove(c);
    for col in res.maps[k].iter_mut() {
        drop_component(col, r);
    }
    let mut d = res.modules[k].degrees().to_vec();
    d.remove(r as usize);
    res.modules[k] = plain(res.field, &res.base, d);
    let mut d = res.modules[k + 1].degrees().to_vec();
    d.remove(c);
    res.modules[k + 1] = plain(res.field, &res.base, d);
    if k >= 1 {
        res.maps[k - 1].remove(r as usize);
    }
    if k + 1 < res.maps.len() {
        for col in res.maps[k + 1].iter_mut() {
            drop_component(col, c as u32);
        }
    }
    debug_assert!(nv == res.nvars());
}

fn drop_component(v: &mut Vector, comp: u32) {
    v.terms.retain(|t| t.comp != comp);
    for t in v.terms.iter_mut() {
        if t.comp > comp {
            t.comp -= 1;
        }
    }
}

/// Ranks `β_{i,j}` of a minimal resolution; `j` is the internal degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiTable {
    pub n: usize,
    pub entries: BTreeMap<(usize, i64), usize>,
}

impl Serialize for BettiTable {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Entry {
            i: usize,
            j: i64,
            beta: usize,
        }
        let mut seq = s.serialize_seq(Some(self.entries.len()))?;
        for (&(i, j), &beta) in &self.entries {
            seq.serialize_element(&Entry { i, j, beta })?;
        }
        seq.end()
    }
}

impl BettiTable {
    pub fn beta(&self, i: usize, j: i64) -> usize {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn total(&self, i: usize) -> usize {
        self.entries.range((i, i64::MIN)..=(i, i64::MAX)).map(|(_, v)| v).sum()
    }

    pub fn pd(&self) -> Option<usize> {
        self.entries.keys().map(|(i, _)| *i).max()
    }

    /// `b_i`: largest degree of a generator of `F_i`; `None` is `-∞`.
    pub fn b(&self, i: i64) -> Option<i64> {
        if i < 0 {
            return None;
        }
        self.entries
            .range((i as usize, i64::MIN)..=(i as usize, i64::MAX))
            .map(|((_, j), _)| *j)
            .max()
    }
}

impl fmt::Display for BettiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let Some(pd) = self.pd() else {
            return writeln!(f, "zero module");
        };
        let rows: Vec<i64> = {
            let mut r: Vec<i64> = self.entries.keys().map(|(i, j)| j - *i as i64).collect();
            r.sort();
            r.dedup();
            r
        };
        let (lo, hi) = (rows[0], *rows.last().unwrap());
        let w = (0..=pd)
            .map(|i| self.total(i).to_string().len())
            .max()
            .unwrap()
            .max(pd.to_string().len())
            + 1;
        let label = hi.to_string().len().max(lo.to_string().len()).max(5) + 1;
        write!(f, "{:>label$}", "")?;
        for i in 0..=pd {
            write!(f, "{i:>w$}")?;
        }
        writeln!(f)?;
        write!(f, "{:>label$}", "total:")?;
        for i in 0..=pd {
            write!(f, "{:>w$}", self.total(i))?;
        }
        writeln!(f)?;
        for r in lo..=hi {
            write!(f, "{:>label$}", format!("{r}:"))?;
            for i in 0..=pd {
                let b = self.beta(i, r + i as i64);
                if b == 0 {
                    write!(f, "{:>w$}", ".")?;
                } else {
                    write!(f, "{b:>w$}")?;
                }
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Values indexed by `i`; `None` stands for `-∞`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BettiInvariants {
    pub n: usize,
    pub b: Vec<Option<i64>>,
    /// `b*_j = max{b_i : i >= j}` for `j = 0..=n`.
    pub b_star: Vec<Option<i64>>,
    /// `j-reg = max{b_i - i : i >= j}` for `j = 0..=n`.
    pub j_reg: Vec<Option<i64>>,
    pub reg: Option<i64>,
    pub pd: Option<usize>,
    pub depth: Option<usize>,
    /// Positions with an extremal Betti number.
    pub extremal: Vec<usize>,
}

impl BettiInvariants {
    pub fn b_star_at(&self, j: i64) -> Option<i64> {
        let start = j.max(0) as usize;
        self.b.iter().skip(start).copied().max().flatten()
    }

    pub fn j_reg_at(&self, j: i64) -> Option<i64> {
        let start = j.max(0) as usize;
        self.b
            .iter()
            .enumerate()
            .skip(start)
            .filter_map(|(i, b)| b.map(|b| b - i as i64))
            .max()
    }
}

pub fn betti_invariants(t: &BettiTable) -> BettiInvariants {
    let pd = t.pd();
    let len = pd.map_or(0, |p| p + 1);
    let b: Vec<Option<i64>> = (0..len as i64).map(|i| t.b(i)).collect();
    let mut inv = BettiInvariants {
        n: t.n,
        b,
        b_star: Vec::new(),
        j_reg: Vec::new(),
        reg: None,
        pd,
        depth: pd.map(|p| t.n - p.min(t.n)),
        extremal: Vec::new(),
    };
    inv.b_star = (0..=t.n as i64).map(|j| inv.b_star_at(j)).collect();
    inv.j_reg = (0..=t.n as i64).map(|j| inv.j_reg_at(j)).collect();
    inv.reg = inv.j_reg_at(0);
    inv.extremal = (0..len)
        .filter(|&j| match inv.b[j] {
            None => false,
            Some(bj) => match inv.j_reg_at(j as i64 + 1) {
                None => true,
                Some(rest) => bj - j as i64 > rest,
            },
        })
        .collect();
    inv
}

/// Whether no entry of any map has a nonzero constant term.
pub fn has_unit_entries(res: &Resolution) -> bool {
    (1..=res.length()).any(|i| {
        res.map(i)
            .iter()
            .any(|v| v.terms.iter().any(|t| t.mon.is_one()))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Ring;

    fn ideal(r: &Ring, gens: Vec<Polynomial>) -> Ideal {
        Ideal::new(r.field, &r.order, gens).unwrap()
    }

    #[test]
    fn hypersurface() {
        let r = Ring::revlex(3);
        let j = ideal(&r, vec![r.poly(&[(1, &[1, 1, 0]), (-1, &[0, 0, 2])])]);
        let res = Presentation::quotient(&j).unwrap().resolve().unwrap();
        assert_eq!(res.length(), 1);
        assert_eq!(res.degrees(1), &[2]);
        let inv = betti_invariants(&res.betti_table());
        assert_eq!((inv.reg, inv.pd, inv.depth), (Some(1), Some(1), Some(2)));
    }

    #[test]
    fn koszul() {
        let r = Ring::revlex(2);
        let j = ideal(&r, vec![r.var(0), r.var(1)]);
        let res = Presentation::quotient(&j).unwrap().resolve().unwrap();
        let t = res.betti_table();
        assert_eq!((t.beta(0, 0), t.beta(1, 1), t.beta(2, 2)), (1, 2, 1));
        let inv = betti_invariants(&t);
        assert_eq!((inv.reg, inv.pd, inv.depth), (Some(0), Some(2), Some(0)));
        assert_eq!(inv.b_star_at(0), Some(2));
        assert!(res.is_complex());
    }

    #[test]
    fn unit_entries_are_cancelled() {
        // x^2, xy, y^2 plus a redundant generator x^2 + xy.
        let r = Ring::revlex(2);
        let gens = vec![
            r.monomial(1, &[2, 0]),
            r.monomial(1, &[1, 1]),
            r.monomial(1, &[0, 2]),
            r.poly(&[(1, &[2, 0]), (1, &[1, 1])]),
        ];
        let res = Presentation::quotient(&ideal(&r, gens)).unwrap().resolve().unwrap();
        let t = res.betti_table();
        assert_eq!((t.total(1), t.total(2)), (3, 2));
        assert!(!has_unit_entries(&res));
        assert!(res.is_complex());
    }

    #[test]
    fn twisted_cubic() {
        let r = Ring::revlex(4);
        let gens = vec![
            r.poly(&[(1, &[1, 0, 1, 0]), (-1, &[0, 2, 0, 0])]),
            r.poly(&[(1, &[1, 0, 0, 1]), (-1, &[0, 1, 1, 0])]),
            r.poly(&[(1, &[0, 1, 0, 1]), (-1, &[0, 0, 2, 0])]),
        ];
        let res = Presentation::quotient(&ideal(&r, gens.clone())).unwrap().resolve().unwrap();
        let t = res.betti_table();
        assert_eq!((t.beta(1, 2), t.beta(2, 3)), (3, 2));
        assert_eq!(t.pd(), Some(2));
        assert!(res.is_complex());
        let hs = ideal(&r, gens).groebner().hilbert_series();
        assert_eq!(res.euler_series(), hs);
    }

    #[test]
    fn module_presentation() {
        // coker of (x y) : B(-1) -> B^2 over k[x,y]
        let r = Ring::revlex(2);
        let base = TermOrder::revlex(2);
        let fm = plain(r.field, &base, vec![0, 0]);
        let rel = fm.from_polys(&[r.var(0), r.var(1)]);
        let p = Presentation::new(r.field, &base, vec![0, 0], vec![rel]).unwrap();
        let res = p.resolve().unwrap();
        assert_eq!(res.length(), 1);
        assert_eq!(res.degrees(1), &[1]);
    }
}
