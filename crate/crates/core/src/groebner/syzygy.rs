//! Schreyer syzygies of a Groebner basis.

use crate::error::{AlgebraError, Result};
use crate::monomial::Monomial;

use super::buchberger::{reduce_tracked, s_vector, Reducers};
use super::vector::{FreeModule, Term, Vector};

/// The first syzygies of a Groebner basis `gb` of a submodule of `fm`.
///
/// The returned free module has one basis element per element of `gb`,
/// graded by the degrees of the leading terms and ordered by the Schreyer
/// order induced from `fm`. The returned syzygies form a Groebner basis of
/// the syzygy module in that order; for each `i` only the pairs whose
/// quotient monomials `lcm/lm_i` are minimal are kept.
pub fn syzygies(fm: &FreeModule, gb: &[Vector]) -> Result<(FreeModule, Vec<Vector>)> {
    if gb.iter().any(|g| g.is_zero()) {
        return Err(AlgebraError::InvalidArgument("zero element in basis".into()));
    }
    let leads: Vec<(Monomial, u32)> = gb
        .iter()
        .map(|g| {
            let t = g.lead().unwrap();
            (t.mon.clone(), t.comp)
        })
        .collect();
    let degrees = leads.iter().map(|(m, c)| fm.term_degree(m, *c)).collect();
    let next = FreeModule::new(fm.field(), fm.order().schreyer(&leads), degrees);
    let reducers = Reducers::new(gb.iter());

    let mut out = Vec::new();
    for i in 0..gb.len() {
        let (li, ci) = &leads[i];
        // Candidate partners and their quotient monomials lcm / lm_i.
        let cands: Vec<(usize, Monomial)> = (i + 1..gb.len())
            .filter(|&j| leads[j].1 == *ci)
            .map(|j| (j, li.quotient_of(&li.lcm(&leads[j].0)).unwrap()))
            .collect();
        for (pos, (j, q)) in cands.iter().enumerate() {
            let redundant = cands.iter().enumerate().any(|(pos2, (_, q2))| {
                pos2 != pos && q2.divides(q) && (q2 != q || pos2 < pos)
            });
            if redundant {
                continue;
            }
            let s = s_vector(fm, &gb[i], &gb[*j]);
            let (quot, rem) = reduce_tracked(fm, &s, &reducers);
            if !rem.is_zero() {
                return Err(AlgebraError::NotGroebner(format!(
                    "S-pair ({i}, {j}) leaves a nonzero remainder"
                )));
            }
            let lj = &leads[*j].0;
            let qj = lj.quotient_of(&li.lcm(lj)).unwrap();
            let ci_inv = gb[i].lead().unwrap().coeff.inverse().unwrap();
            let cj_inv = gb[*j].lead().unwrap().coeff.inverse().unwrap();
            let mut terms = vec![
                Term {
                    coeff: ci_inv,
                    mon: q.clone(),
                    comp: i as u32,
                },
                Term {
                    coeff: cj_inv.neg_ref(),
                    mon: qj,
                    comp: *j as u32,
                },
            ];
            terms.extend(quot.into_iter().map(|(c, m, k)| Term {
                coeff: c.neg_ref(),
                mon: m,
                comp: k as u32,
            }));
            out.push(next.vector(terms));
        }
    }
    Ok((next, out))
}

/// Image of `v` (an element of the module whose basis maps to `images`)
/// inside `target`.
pub fn apply_map(target: &FreeModule, images: &[Vector], v: &Vector) -> Vector {
    let mut acc = Vector::default();
    for t in &v.terms {
        acc = target.add_multiple(&acc, &images[t.comp as usize], &t.coeff, &t.mon);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::buchberger::groebner_basis;
    use crate::poly::Ring;

    #[test]
    fn koszul_syzygy() {
        let r = Ring::revlex(2);
        let fm = FreeModule::ring(r.field, &r.order);
        let gb = vec![fm.from_polys(&[r.var(0)]), fm.from_polys(&[r.var(1)])];
        let (next, syz) = syzygies(&fm, &gb).unwrap();
        assert_eq!(syz.len(), 1);
        let coords = next.to_polys(&syz[0]);
        assert_eq!(coords[0], r.var(1));
        assert_eq!(coords[1], -&r.var(0));
        assert!(apply_map(&fm, &gb, &syz[0]).is_zero());
    }

    #[test]
    fn principal_has_no_syzygies() {
        let r = Ring::revlex(3);
        let fm = FreeModule::ring(r.field, &r.order);
        let g = fm.from_polys(&[r.poly(&[(1, &[1, 1, 0]), (-1, &[0, 0, 2])])]);
        let (_, syz) = syzygies(&fm, &[g]).unwrap();
        assert!(syz.is_empty());
    }

    #[test]
    fn rejects_non_basis() {
        let r = Ring::revlex(3);
        let fm = FreeModule::ring(r.field, &r.order);
        let f = fm.from_polys(&[r.poly(&[(1, &[2, 0, 0]), (-1, &[0, 1, 1])])]);
        let g = fm.from_polys(&[r.poly(&[(1, &[1, 1, 0]), (-1, &[0, 0, 2])])]);
        assert!(syzygies(&fm, &[f.clone(), g.clone()]).is_err());
        let gb = groebner_basis(&fm, &[f, g]);
        let (_, syz) = syzygies(&fm, &gb).unwrap();
        for s in &syz {
            assert!(apply_map(&fm, &gb, s).is_zero());
        }
    }
}
