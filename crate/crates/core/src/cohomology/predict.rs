//! Local cohomology of the Rees algebra `R = A[mt]` read off from that of
//! `A`, and the derived a-invariants, depth and regularity.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{AlgebraError, Result};
use crate::groebner::Ideal;
use crate::poly::Polynomial;

use super::profile::{a_star_at, reg_at, CohomologyProfile, IndexProfile, Provenance, Tail};

fn known_dim(p: &CohomologyProfile, i: i64, a: i64) -> Result<i64> {
    p.dim(i, a).ok_or(if a > p.window.1 {
        AlgebraError::WindowTooSmall { required: a }
    } else {
        AlgebraError::UncertifiedTail { index: i.max(0) as usize }
    })
}

/// `dim H^i_M(R)_{(a,b)}`, where `x_i` has bidegree `(1,0)` and `x_i t`
/// has bidegree `(1,1)`.
pub fn predict_rees_bigraded(p: &CohomologyProfile, i: i64, a: i64, b: i64) -> Result<i64> {
    let hi = 0.max(a + 1);
    let lo = 0.min(a + 1);
    if b >= hi || b < lo {
        Ok(0)
    } else if b >= 0 {
        known_dim(p, i, a)
    } else {
        known_dim(p, i - 1, a)
    }
}

/// `dim H^i_M(R)_a`.
pub fn predict_rees_dim(p: &CohomologyProfile, i: i64, a: i64) -> Result<i64> {
    if a >= 0 {
        Ok((a + 1) * known_dim(p, i, a)?)
    } else if a == -1 {
        Ok(0)
    } else {
        Ok((-a - 1) * known_dim(p, i - 1, a)?)
    }
}

/// Predicted invariants of `R = A[mt]`. Index vectors run over `0..=dim R`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReesPrediction {
    pub profile: CohomologyProfile,
    /// `a_i(R)`: `a_i(A)` when that is `>= 0`, otherwise the largest
    /// `a <= -2` with `H^{i-1}(A)_a != 0`.
    pub a: Vec<Option<i64>>,
    /// `max{i : H^j(A)_a = 0 for j < i-1, a != -1, and a_{i-1}(A) < 0}`.
    pub depth: usize,
    pub cohen_macaulay: bool,
    pub a_star: Option<i64>,
    pub reg: Option<i64>,
    /// `a*(R) = a*(A)` exactly when `a*(A) != -1`.
    pub a_star_equals_base: bool,
    /// `reg(R) = reg(A) + 1` exactly when `reg(A) = a_i(A) + i` for some
    /// `i` with `a_i(A) <= -2`; otherwise `reg(R) = reg(A)`.
    pub reg_formula: Option<i64>,
    pub tainted: bool,
}

/// Local cohomology of `R` over the `2n` variables `x, y`. The window of
/// `p` must reach down to `-2` at least.
pub fn predict_rees_profile(p: &CohomologyProfile) -> Result<ReesPrediction> {
    let (lo, hi) = p.window;
    if lo > -2 {
        return Err(AlgebraError::InvalidArgument("window must contain -2".into()));
    }
    let d = p.dimension().map_or(0, |d| d as i64);
    let mut indices = Vec::new();
    let mut a_vec = Vec::new();
    for i in 0..=d + 1 {
        let own = p.a(i);
        let a_r = match own {
            Some(x) if x >= 0 => Some(x),
            _ => p.top_at_most(i - 1, -2)?,
        };
        a_vec.push(a_r);
        let mut support = BTreeMap::new();
        for a in lo..=hi {
            let x = predict_rees_dim(p, i, a)?;
            if x != 0 {
                support.insert(a, x);
            }
        }
        let tail = match p.index(i - 1) {
            None => Tail::None,
            Some(q) if q.is_zero() => Tail::None,
            Some(q) => q.tail,
        };
        indices.push(IndexProfile {
            a: a_r,
            support,
            tail,
            exact: None,
        });
    }
    while indices.last().map_or(false, |x| x.is_zero()) {
        indices.pop();
        a_vec.pop();
    }
    let profile = CohomologyProfile {
        n: 2 * p.n,
        window: p.window,
        indices,
        provenance: p.provenance,
    };
    let depth = depth_formula(p)?;
    let top = a_vec.len() as i64 - 1;
    let a_star = a_star_at(&profile, top);
    let reg = reg_at(&profile, top);
    let top_a = p.indices.len() as i64 - 1;
    let base_a_star = a_star_at(p, top_a);
    let base_reg = reg_at(p, top_a);
    let bump = base_reg.is_some()
        && (0..=top_a).any(|i| matches!(p.a(i), Some(x) if x <= -2 && Some(x + i) == base_reg));
    Ok(ReesPrediction {
        // For Artinian A the ideal m is nilpotent and R is Artinian too.
        cohen_macaulay: depth as i64 == if d > 0 { d + 1 } else { 0 },
        a: a_vec,
        depth,
        a_star,
        reg,
        a_star_equals_base: base_a_star != Some(-1),
        reg_formula: base_reg.map(|r| if bump { r + 1 } else { r }),
        tainted: profile.provenance == Provenance::Asserted,
        profile,
    })
}

fn depth_formula(p: &CohomologyProfile) -> Result<usize> {
    let d = p.dimension().map_or(0, |d| d as i64);
    let mut best = 0;
    for i in 0..=d + 2 {
        let mut ok = p.a(i - 1).map_or(true, |x| x < 0);
        for j in 0..i - 1 {
            if !ok {
                break;
            }
            ok = p.vanishes_except(j, &[-1])?;
        }
        if ok {
            best = i as usize;
        }
    }
    Ok(best)
}

/// Depth of the Rees algebra of `A[z]` with respect to its maximal ideal:
/// `s + 2` when `a_s(A) <= 0` and `s + 1` when `a_s(A) >= 1`, with
/// `s = depth A`.
pub fn depth_rees_polyext(p: &CohomologyProfile) -> Result<usize> {
    let s = p
        .depth()
        .ok_or_else(|| AlgebraError::InvalidArgument("zero module".into()))?;
    let a_s = p.a(s as i64).unwrap();
    Ok(if a_s <= 0 { s + 2 } else { s + 1 })
}

/// Whether the form `f` is a nonzerodivisor on `B/J`, via
/// `HS(B/(J + f)) = (1 - t^c) HS(B/J)`.
pub fn is_regular_form(j: &Ideal, f: &Polynomial) -> Result<bool> {
    j.require_homogeneous()?;
    if !f.is_homogeneous() || f.is_zero() {
        return Err(AlgebraError::NotHomogeneous("form expected".into()));
    }
    let c = f.degree().unwrap();
    let mut gens = j.generators().to_vec();
    gens.push(f.with_order(j.order()));
    let both = j.with_generators(gens)?;
    let lhs = both.groebner().hilbert_series();
    let rhs = j.groebner().hilbert_series().times_one_minus_t_pow(c);
    Ok(lhs == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cohomology::ext::cohomology_profile;
    use crate::poly::Ring;
    use crate::resolution::Presentation;

    fn polynomial_ring(n: usize) -> CohomologyProfile {
        cohomology_profile(&Presentation::free(crate::field::Field::Rational, n, vec![0]), (-8, 3)).unwrap()
    }

    #[test]
    fn polynomial_rings() {
        for n in 1..=3i64 {
            let pr = predict_rees_profile(&polynomial_ring(n as usize)).unwrap();
            let want = if n == 1 { -2 } else { -n };
            assert_eq!(pr.a.last().copied().flatten(), Some(want));
            assert_eq!(pr.a.len() as i64, n + 2);
            assert_eq!(pr.reg, Some(if n == 1 { 0 } else { 1 }));
            assert_eq!(pr.reg, pr.reg_formula);
            assert_eq!(pr.a_star, Some(want));
            assert!(pr.cohen_macaulay);
            assert_eq!(pr.depth as i64, n + 1);
        }
    }

    #[test]
    fn bigraded_cases() {
        let p = polynomial_ring(1);
        assert_eq!(predict_rees_bigraded(&p, 2, -2, -1).unwrap(), 1);
        for b in -3..3 {
            assert_eq!(predict_rees_bigraded(&p, 1, -1, b).unwrap(), 0);
        }
        assert_eq!(predict_rees_bigraded(&p, 1, -3, -3).unwrap(), 0);
    }

    #[test]
    fn polynomial_extension_depth() {
        let k = polynomial_ring(0);
        assert_eq!(depth_rees_polyext(&k).unwrap(), 2);
        assert_eq!(depth_rees_polyext(&polynomial_ring(1)).unwrap(), 3);
    }

    #[test]
    fn regular_forms() {
        let r = Ring::revlex(3);
        let j = Ideal::new(r.field, &r.order, vec![r.poly(&[(1, &[1, 1, 0]), (-1, &[0, 0, 2])])]).unwrap();
        assert!(is_regular_form(&j, &r.var(0)).unwrap());
        let k = Ideal::new(r.field, &r.order, vec![r.monomial(1, &[1, 1, 0])]).unwrap();
        assert!(!is_regular_form(&k, &r.var(0)).unwrap());
    }
}
