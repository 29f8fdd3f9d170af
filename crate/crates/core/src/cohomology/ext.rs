//! Graded `Ext_B(E, B)` from a minimal resolution and local cohomology by
//! local duality: `dim H^i_m(E)_a = dim Ext^{n-i}_B(E, B)_{-a-n}`.

use serde::Serialize;

use crate::error::{AlgebraError, Result};
use crate::groebner::{groebner_basis, FreeModule, Term, Vector};
use crate::hilbert::HilbertSeries;
use crate::monomial::Monomial;
use crate::resolution::{Presentation, Resolution};

use super::profile::{fill_from_exact, CohomologyProfile, DualSeries, IndexProfile, Provenance};

/// `Ext^j_B(E, B(-n))`, described by its Hilbert series.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExtModule {
    pub j: usize,
    pub series: HilbertSeries,
}

impl ExtModule {
    pub fn hilbert_function(&self, d: i64) -> i64 {
        self.series.coefficient(d)
    }

    pub fn is_zero(&self) -> bool {
        self.series.is_zero()
    }

    /// Least degree of a nonzero element.
    pub fn initial_degree(&self) -> Option<i64> {
        self.series.initial_degree()
    }
}

/// Dual free module `F_j^* = ⊕ B(c)` ordered term-over-position.
fn dual_module(res: &Resolution, j: usize) -> FreeModule {
    let degrees = res.degrees(j).iter().map(|d| -d).collect();
    FreeModule::graded(res.field(), &crate::order::TermOrder::revlex(res.nvars()), degrees)
}

/// Rows of the matrix of `F_j -> F_{j-1}`, as vectors of `F_j^*`: the
/// images of the basis of `F_{j-1}^*` under the transpose.
fn transpose_rows(res: &Resolution, j: usize, target: &FreeModule) -> Vec<Vector> {
    let mut rows: Vec<Vec<Term>> = vec![Vec::new(); res.rank(j.wrapping_sub(1))];
    for (c, col) in res.map(j).iter().enumerate() {
        for t in &col.terms {
            rows[t.comp as usize].push(Term {
                coeff: t.coeff.clone(),
                mon: t.mon.clone(),
                comp: c as u32,
            });
        }
    }
    rows.into_iter().map(|ts| target.vector(ts)).collect()
}

/// Series of `coker(d_j^T : F_{j-1}^* -> F_j^*)`.
fn coker_transpose_series(res: &Resolution, j: usize) -> HilbertSeries {
    let n = res.nvars();
    let fm = dual_module(res, j);
    if fm.rank() == 0 {
        return HilbertSeries::zero(n);
    }
    let gens = if j == 0 { Vec::new() } else { transpose_rows(res, j, &fm) };
    let gb = groebner_basis(&fm, &gens);
    let mut per_comp: Vec<Vec<Monomial>> = vec![Vec::new(); fm.rank()];
    for g in &gb {
        let t = g.lead().unwrap();
        per_comp[t.comp as usize].push(t.mon.clone());
    }
    HilbertSeries::of_monomial_module(n, fm.degrees(), &per_comp)
}

fn free_dual_series(res: &Resolution, j: usize) -> HilbertSeries {
    let n = res.nvars();
    res.degrees(j)
        .iter()
        .fold(HilbertSeries::zero(n), |acc, d| acc.add(&HilbertSeries::free(n, -d)))
}

/// Series of `Ext^j_B(E, B)` (untwisted) for all `j = 0..=n`.
pub fn ext_series_all(res: &Resolution) -> Vec<HilbertSeries> {
    let n = res.nvars();
    let r = res.length();
    let cokers: Vec<HilbertSeries> = (0..=r + 1).map(|j| coker_transpose_series(res, j)).collect();
    (0..=n)
        .map(|j| {
            if j > r {
                return HilbertSeries::zero(n);
            }
            cokers[j + 1].add(&cokers[j]).sub(&free_dual_series(res, j + 1))
        })
        .collect()
}

/// `Ext^j_B(E, B(-n))`; zero for `j` outside `0..=n`.
pub fn graded_ext(res: &Resolution, j: i64) -> ExtModule {
    let n = res.nvars();
    if j < 0 || j as usize > n {
        return ExtModule {
            j: j.max(0) as usize,
            series: HilbertSeries::zero(n),
        };
    }
    let all = ext_series_all(res);
    ExtModule {
        j: j as usize,
        series: all[j as usize].shifted(n as i64),
    }
}

/// Local cohomology of `E` listed on `window = [lo, hi]`. Fails with
/// `WindowTooSmall` when some `a_i` exceeds `hi`.
pub fn cohomology_profile(p: &Presentation, window: (i64, i64)) -> Result<CohomologyProfile> {
    let res = p.resolve()?;
    profile_from_resolution(&res, window)
}

pub fn profile_from_resolution(res: &Resolution, window: (i64, i64)) -> Result<CohomologyProfile> {
    if window.0 > window.1 {
        return Err(AlgebraError::InvalidArgument("empty window".into()));
    }
    let n = res.nvars();
    let exts = ext_series_all(res);
    let mut indices = Vec::new();
    let mut worst: Option<i64> = None;
    for i in 0..=n {
        let ex = DualSeries {
            series: exts[n - i].clone(),
            offset: n as i64,
        };
        let a = ex.series.initial_degree().map(|d| -d - n as i64);
        let mut ip = IndexProfile {
            a,
            ..IndexProfile::zero()
        };
        fill_from_exact(&mut ip, &ex, window);
        worst = worst.max(a);
        indices.push(ip);
    }
    while indices.last().map_or(false, |x| x.is_zero()) {
        indices.pop();
    }
    if let Some(w) = worst {
        if w > window.1 {
            return Err(AlgebraError::WindowTooSmall { required: w });
        }
    }
    Ok(CohomologyProfile {
        n,
        window,
        indices,
        provenance: Provenance::Computed,
    })
}

/// A window `[lo, hi]` with `hi` at least every `a_i` (`a_i <= reg - i`),
/// extended downward by `below` degrees.
pub fn safe_window(res: &Resolution, below: i64) -> (i64, i64) {
    let inv = crate::resolution::betti_invariants(&res.betti_table());
    let hi = inv.reg.unwrap_or(0).max(0);
    (-(res.nvars() as i64) - below, hi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::Ideal;
    use crate::poly::Ring;

    #[test]
    fn free_module_has_only_top_cohomology() {
        let p = Presentation::free(crate::field::Field::Rational, 3, vec![0]);
        let prof = cohomology_profile(&p, (-8, 2)).unwrap();
        assert_eq!(prof.a(3), Some(-3));
        assert_eq!(prof.a(2), None);
        assert_eq!(prof.dim(3, -4), Some(3));
        assert_eq!(prof.index(3).unwrap().tail, super::super::Tail::AllNonzero);
    }

    #[test]
    fn residue_field() {
        let r = Ring::revlex(2);
        let m = Ideal::new(r.field, &r.order, vec![r.var(0), r.var(1)]).unwrap();
        let prof = cohomology_profile(&Presentation::quotient(&m).unwrap(), (-4, 2)).unwrap();
        assert_eq!(prof.indices.len(), 1);
        assert_eq!(prof.a(0), Some(0));
        assert_eq!(prof.index(0).unwrap().support.len(), 1);
    }

    #[test]
    fn conic() {
        let r = Ring::revlex(3);
        let j = Ideal::new(r.field, &r.order, vec![r.poly(&[(1, &[1, 1, 0]), (-1, &[0, 0, 2])])]).unwrap();
        let prof = cohomology_profile(&Presentation::quotient(&j).unwrap(), (-6, 2)).unwrap();
        assert_eq!(prof.a(2), Some(-1));
        assert_eq!(prof.a(1), None);
        assert_eq!(prof.a(0), None);
        assert!(matches!(
            cohomology_profile(&Presentation::quotient(&j).unwrap(), (-6, -2)),
            Err(AlgebraError::WindowTooSmall { required: -1 })
        ));
    }
}
