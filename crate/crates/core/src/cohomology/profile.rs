//! Windowed graded local cohomology data `H^i_m(E)_a` and the invariants
//! `a_i`, `a*_j`, `reg_j`, `a*`, `reg`.
//!
//! Throughout, `None` in an `Option<i64>` degree stands for `-∞`.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{AlgebraError, Result};
use crate::hilbert::HilbertSeries;

/// What is known about `H^i_m(E)_a` for `a` below the window.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Tail {
    /// Zero below the window.
    None,
    /// Nonzero in every degree below the window.
    AllNonzero,
    Unknown,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    Computed,
    /// Built from literal data rather than from a presentation.
    Asserted,
}

/// Exact source of the dimensions of one cohomology module:
/// `dim H^i_a = series[-a - offset]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct DualSeries {
    pub series: HilbertSeries,
    pub offset: i64,
}

impl DualSeries {
    fn dim(&self, a: i64) -> i64 {
        self.series.coefficient(-a - self.offset)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IndexProfile {
    /// `a_i`.
    pub a: Option<i64>,
    /// Nonzero dimensions inside the window.
    pub support: BTreeMap<i64, i64>,
    pub tail: Tail,
    #[serde(skip)]
    pub(crate) exact: Option<DualSeries>,
}

impl IndexProfile {
    pub fn zero() -> IndexProfile {
        IndexProfile {
            a: None,
            support: BTreeMap::new(),
            tail: Tail::None,
            exact: None,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_none()
    }

    fn top_at_most(&self, bound: i64, lo: i64) -> Result<Option<i64>> {
        if let Some(ex) = &self.exact {
            // dims are exact everywhere; scan down from `bound` using the
            // dual series, which is eventually positive or finite.
            let Some(a) = self.a else { return Ok(None) };
            let start = bound.min(a);
            let dim = ex.series.krull_dim().unwrap_or(0);
            let floor = if dim == 0 {
                -ex.series.top_degree().unwrap_or(0) - ex.offset
            } else {
                -ex.series.positivity_bound().unwrap() - ex.offset
            };
            let mut x = start;
            while x >= floor {
                if ex.dim(x) != 0 {
                    return Ok(Some(x));
                }
                x -= 1;
            }
            return Ok(if dim > 0 { Some(x) } else { None });
        }
        if let Some((&a, _)) = self.support.range(..=bound).next_back() {
            return Ok(Some(a));
        }
        match self.tail {
            Tail::None => Ok(None),
            Tail::AllNonzero => Ok(Some(bound.min(lo - 1))),
            Tail::Unknown => Err(AlgebraError::UncertifiedTail { index: usize::MAX }),
        }
    }

    fn vanishes_except(&self, allowed: &[i64]) -> Result<bool> {
        if self.is_zero() {
            return Ok(true);
        }
        if let Some(ex) = &self.exact {
            let dim = ex.series.krull_dim().unwrap_or(0);
            if dim > 0 {
                return Ok(false);
            }
            let lo = -ex.series.top_degree().unwrap() - ex.offset;
            return Ok((lo..=self.a.unwrap()).all(|a| allowed.contains(&a) || ex.dim(a) == 0));
        }
        match self.tail {
            Tail::None => Ok(self.support.keys().all(|a| allowed.contains(a))),
            Tail::AllNonzero => Ok(false),
            Tail::Unknown => Err(AlgebraError::UncertifiedTail { index: usize::MAX }),
        }
    }
}

/// `H^i_m(E)` for all `i`, with dimensions listed on `[lo, hi]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CohomologyProfile {
    /// Number of variables of the polynomial ring `E` is a module over.
    pub n: usize,
    pub window: (i64, i64),
    /// Indices `0..=dim E`.
    pub indices: Vec<IndexProfile>,
    pub provenance: Provenance,
}

impl CohomologyProfile {
    pub fn zero(n: usize, window: (i64, i64)) -> CohomologyProfile {
        CohomologyProfile {
            n,
            window,
            indices: Vec::new(),
            provenance: Provenance::Computed,
        }
    }

    /// A profile from literal data: per index the window dimensions and
    /// the tail. `a_i` is the largest listed degree, or `lo - 1` when only
    /// the tail is nonzero.
    pub fn asserted(n: usize, window: (i64, i64), data: Vec<(BTreeMap<i64, i64>, Tail)>) -> Result<CohomologyProfile> {
        let mut indices = Vec::new();
        for (support, tail) in data {
            if support.keys().any(|&a| a < window.0 || a > window.1) {
                return Err(AlgebraError::InvalidArgument("support outside the window".into()));
            }
            if support.values().any(|&d| d < 1) {
                return Err(AlgebraError::InvalidArgument("listed dimensions must be positive".into()));
            }
            if tail == Tail::Unknown && support.is_empty() {
                return Err(AlgebraError::UncertifiedTail { index: indices.len() });
            }
            let a = support
                .keys()
                .next_back()
                .copied()
                .or(if tail == Tail::AllNonzero { Some(window.0 - 1) } else { None });
            indices.push(IndexProfile {
                a,
                support,
                tail,
                exact: None,
            });
        }
        while indices.last().map_or(false, |p| p.is_zero()) {
            indices.pop();
        }
        Ok(CohomologyProfile {
            n,
            window,
            indices,
            provenance: Provenance::Asserted,
        })
    }

    pub fn index(&self, i: i64) -> Option<&IndexProfile> {
        if i < 0 {
            return None;
        }
        self.indices.get(i as usize)
    }

    /// `a_i`, `-∞` outside `0..=dim`.
    pub fn a(&self, i: i64) -> Option<i64> {
        self.index(i).and_then(|p| p.a)
    }

    /// `dim H^i_a` when determined.
    pub fn dim(&self, i: i64, a: i64) -> Option<i64> {
        let Some(p) = self.index(i) else { return Some(0) };
        if let Some(ex) = &p.exact {
            return Some(ex.dim(a));
        }
        if p.a.map_or(true, |top| a > top) {
            return Some(0);
        }
        if a >= self.window.0 && a <= self.window.1 {
            return Some(p.support.get(&a).copied().unwrap_or(0));
        }
        match p.tail {
            Tail::None => Some(0),
            _ => None,
        }
    }

    /// Krull dimension: largest index with nonzero cohomology.
    pub fn dimension(&self) -> Option<usize> {
        self.indices.iter().rposition(|p| !p.is_zero())
    }

    /// Least index with nonzero cohomology.
    pub fn depth(&self) -> Option<usize> {
        self.indices.iter().position(|p| !p.is_zero())
    }

    /// Largest `a <= bound` with `H^i_a != 0`.
    pub fn top_at_most(&self, i: i64, bound: i64) -> Result<Option<i64>> {
        match self.index(i) {
            None => Ok(None),
            Some(p) => p.top_at_most(bound, self.window.0).map_err(|_| AlgebraError::UncertifiedTail { index: i as usize }),
        }
    }

    /// `H^i_a = 0` for all `a` outside `allowed`.
    pub fn vanishes_except(&self, i: i64, allowed: &[i64]) -> Result<bool> {
        match self.index(i) {
            None => Ok(true),
            Some(p) => p.vanishes_except(allowed).map_err(|_| AlgebraError::UncertifiedTail { index: i as usize }),
        }
    }

    pub fn is_tainted(&self) -> bool {
        self.provenance == Provenance::Asserted
    }

    /// Re-lists window dimensions on a new window. Only profiles with exact
    /// dimension data can be widened.
    pub fn rewindow(&self, window: (i64, i64)) -> Result<CohomologyProfile> {
        let mut out = self.clone();
        out.window = window;
        for p in out.indices.iter_mut() {
            let Some(ex) = &p.exact else {
                if window.0 < self.window.0 || window.1 > self.window.1 {
                    return Err(AlgebraError::InvalidArgument("cannot widen an asserted profile".into()));
                }
                p.support.retain(|a, _| *a >= window.0 && *a <= window.1);
                continue;
            };
            let ex = ex.clone();
            fill_from_exact(p, &ex, window);
        }
        Ok(out)
    }
}

pub(crate) fn fill_from_exact(p: &mut IndexProfile, ex: &DualSeries, window: (i64, i64)) {
    let (lo, hi) = window;
    p.support = (lo..=hi)
        .filter_map(|a| {
            let d = ex.dim(a);
            (d != 0).then_some((a, d))
        })
        .collect();
    p.tail = if p.a.is_none() {
        Tail::None
    } else {
        match ex.series.krull_dim() {
            None => Tail::None,
            Some(0) => {
                let lowest = -ex.series.top_degree().unwrap() - ex.offset;
                if lowest >= lo {
                    Tail::None
                } else {
                    Tail::Unknown
                }
            }
            Some(_) => {
                let m = ex.series.positivity_bound().unwrap();
                // a < lo  <=>  -a - offset > -lo - offset
                if m <= -lo - ex.offset + 1 {
                    Tail::AllNonzero
                } else {
                    Tail::Unknown
                }
            }
        }
    };
    p.exact = Some(ex.clone());
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProfileInvariants {
    pub a: Vec<Option<i64>>,
    /// `a*_j = max{a_i : i <= j}` for `j = 0..=n`.
    pub a_star: Vec<Option<i64>>,
    /// `reg_j = max{a_i + i : i <= j}` for `j = 0..=n`.
    pub reg_j: Vec<Option<i64>>,
    pub a_star_total: Option<i64>,
    pub reg: Option<i64>,
    pub depth: Option<usize>,
    pub dim: Option<usize>,
}

pub fn a_star_at(p: &CohomologyProfile, j: i64) -> Option<i64> {
    (0..=j).map(|i| p.a(i)).max().flatten()
}

pub fn reg_at(p: &CohomologyProfile, j: i64) -> Option<i64> {
    (0..=j).filter_map(|i| p.a(i).map(|a| a + i)).max()
}

pub fn profile_invariants(p: &CohomologyProfile) -> ProfileInvariants {
    let top = p.indices.len() as i64 - 1;
    ProfileInvariants {
        a: p.indices.iter().map(|x| x.a).collect(),
        a_star: (0..=p.n as i64).map(|j| a_star_at(p, j)).collect(),
        reg_j: (0..=p.n as i64).map(|j| reg_at(p, j)).collect(),
        a_star_total: a_star_at(p, top),
        reg: reg_at(p, top),
        depth: p.depth(),
        dim: p.dimension(),
    }
}

/// Profile of `E[z_1..z_s]` over `n + s` variables, using
/// `H^i(E[z])_m = ⊕_{a >= m+1} H^{i-1}(E)_a`. The window moves down by `s`.
pub fn extension_shift(p: &CohomologyProfile, s: usize) -> Result<CohomologyProfile> {
    let mut cur = p.clone();
    for _ in 0..s {
        cur = extend_once(&cur)?;
    }
    Ok(cur)
}

fn extend_once(p: &CohomologyProfile) -> Result<CohomologyProfile> {
    let (lo, hi) = p.window;
    let window = (lo - 1, hi - 1);
    let mut indices = vec![IndexProfile::zero()];
    for (i, prev) in p.indices.iter().enumerate() {
        let Some(top) = prev.a else {
            indices.push(IndexProfile::zero());
            continue;
        };
        if top > hi {
            return Err(AlgebraError::WindowTooSmall { required: top });
        }
        let mut support = BTreeMap::new();
        for m in window.0..=window.1 {
            let mut total = 0;
            for a in m + 1..=top {
                total += p.dim(i as i64, a).ok_or(AlgebraError::UncertifiedTail { index: i })?;
            }
            if total != 0 {
                support.insert(m, total);
            }
        }
        indices.push(IndexProfile {
            a: Some(top - 1),
            support,
            tail: Tail::AllNonzero,
            exact: None,
        });
    }
    while indices.last().map_or(false, |x| x.is_zero()) {
        indices.pop();
    }
    Ok(CohomologyProfile {
        n: p.n + 1,
        window,
        indices,
        provenance: p.provenance,
    })
}

/// `(a*(E/fE), reg(E/fE))` for a regular form `f` of degree `c`.
pub fn quotient_regular_invariants(a_star: i64, reg: i64, c: i64) -> (i64, i64) {
    (a_star + c, reg + c - 1)
}
