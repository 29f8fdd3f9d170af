//! Buchberger's algorithm over free modules with the normal selection
//! strategy and the Gebauer–Möller criteria.

use crate::field::Scalar;
use crate::monomial::Monomial;

use super::vector::{divmask, FreeModule, Term, Vector};

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    comp: u32,
    degree: i64,
}

struct Lead {
    mon: Monomial,
    comp: u32,
    mask: u64,
}

impl Lead {
    fn of(v: &Vector) -> Lead {
        let t = v.lead().expect("nonzero basis element");
        Lead {
            mon: t.mon.clone(),
            comp: t.comp,
            mask: divmask(&t.mon),
        }
    }

    fn divides(&self, mon: &Monomial, comp: u32, mask: u64) -> bool {
        self.comp == comp && self.mask & !mask == 0 && self.mon.divides(mon)
    }
}

/// A growing basis with cached leading data.
pub(crate) struct Reducers<'a> {
    elems: Vec<&'a Vector>,
    leads: Vec<Lead>,
}

impl<'a> Reducers<'a> {
    pub(crate) fn new(elems: impl IntoIterator<Item = &'a Vector>) -> Reducers<'a> {
        let elems: Vec<&Vector> = elems.into_iter().collect();
        let leads = elems.iter().map(|v| Lead::of(v)).collect();
        Reducers { elems, leads }
    }

    fn find(&self, t: &Term) -> Option<usize> {
        let mask = divmask(&t.mon);
        self.leads.iter().position(|l| l.divides(&t.mon, t.comp, mask))
    }
}

/// Full reduction of `f`: repeatedly cancels the highest term divisible by
/// some leading term, using the first such divisor in list order.
pub(crate) fn reduce(fm: &FreeModule, f: &Vector, basis: &Reducers) -> Vector {
    reduce_impl(fm, f, basis, None)
}

/// Reduction that also records the quotient terms `(c, m, k)` meaning
/// `f = sum c*m*basis[k] + remainder`.
pub(crate) fn reduce_tracked(
    fm: &FreeModule,
    f: &Vector,
    basis: &Reducers,
) -> (Vec<(Scalar, Monomial, usize)>, Vector) {
    let mut q = Vec::new();
    let r = reduce_impl(fm, f, basis, Some(&mut q));
    (q, r)
}

fn reduce_impl(
    fm: &FreeModule,
    f: &Vector,
    basis: &Reducers,
    mut track: Option<&mut Vec<(Scalar, Monomial, usize)>>,
) -> Vector {
    let mut rem: Vec<Term> = Vec::new();
    let mut p = f.clone();
    loop {
        let hit = p
            .terms
            .iter()
            .enumerate()
            .find_map(|(idx, t)| basis.find(t).map(|k| (idx, k)));
        let Some((idx, k)) = hit else {
            rem.extend(p.terms);
            break;
        };
        rem.extend(p.terms.drain(..idx));
        let t = &p.terms[0];
        let g = basis.elems[k];
        let gl = g.lead().unwrap();
        let c = t.coeff.checked_div(&gl.coeff).expect("nonzero lead");
        let m = basis.leads[k].mon.quotient_of(&t.mon).unwrap();
        if let Some(q) = track.as_deref_mut() {
            q.push((c.clone(), m.clone(), k));
        }
        p = fm.add_multiple(&p, g, &c.neg_ref(), &m);
    }
    Vector { terms: rem }
}

/// S-vector of two elements whose leads share a component.
pub(crate) fn s_vector(fm: &FreeModule, f: &Vector, g: &Vector) -> Vector {
    let (lf, lg) = (f.lead().unwrap(), g.lead().unwrap());
    debug_assert_eq!(lf.comp, lg.comp);
    let l = lf.mon.lcm(&lg.mon);
    let mf = lf.mon.quotient_of(&l).unwrap();
    let mg = lg.mon.quotient_of(&l).unwrap();
    let cf = lf.coeff.inverse().unwrap();
    let cg = lg.coeff.inverse().unwrap().neg_ref();
    let a = fm.scale_term(f, &cf, &mf);
    fm.add_multiple(&a, g, &cg, &mg)
}

/// Computes the reduced Groebner basis of the submodule generated by `gens`.
/// Output is monic, interreduced and sorted by degree, then by leading term
/// ascending.
pub fn groebner_basis(fm: &FreeModule, gens: &[Vector]) -> Vec<Vector> {
    let raw = buchberger_raw(fm, gens);
    interreduce(fm, raw)
}

/// Runs Buchberger and returns a (not necessarily reduced) basis whose
/// leading terms are pairwise non-dividing.
pub(crate) fn buchberger_raw(fm: &FreeModule, gens: &[Vector]) -> Vec<Vector> {
    let rank_one = fm.rank() == 1;
    let mut input: Vec<Vector> = gens.iter().filter(|g| !g.is_zero()).cloned().collect();
    input.sort_by_key(|g| fm.degree_of(g).unwrap());
    let mut input = input.into_iter().peekable();

    let mut elems: Vec<Vector> = Vec::new();
    let mut leads: Vec<Lead> = Vec::new();
    let mut active: Vec<bool> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();

    loop {
        let next_pair = pairs
            .iter()
            .enumerate()
            .min_by(|(_, a), (_, b)| (a.degree, a.i, a.j).cmp(&(b.degree, b.i, b.j)))
            .map(|(k, p)| (k, p.degree));
        let next_gen = input.peek().map(|g| fm.degree_of(g).unwrap());
        let candidate = match (next_pair, next_gen) {
            (None, None) => break,
            (Some((k, _)), None) => {
                let p = pairs.swap_remove(k);
                s_vector(fm, &elems[p.i], &elems[p.j])
            }
            (Some((k, dp)), Some(dg)) if dp < dg => {
                let p = pairs.swap_remove(k);
                s_vector(fm, &elems[p.i], &elems[p.j])
            }
            _ => input.next().unwrap(),
        };
        let reducers = Reducers::new(
            elems
                .iter()
                .zip(&active)
                .filter(|(_, &a)| a)
                .map(|(e, _)| e),
        );
        let h = reduce(fm, &candidate, &reducers).monic();
        drop(reducers);
        if h.is_zero() {
            continue;
        }
        let hl = Lead::of(&h);
        let t = elems.len();

        // Pairs (g, h) with the same leading component.
        let mut cands: Vec<Pair> = (0..t)
            .filter(|&g| active[g] && leads[g].comp == hl.comp)
            .map(|g| {
                let lcm = leads[g].mon.lcm(&hl.mon);
                let degree = fm.term_degree(&lcm, hl.comp);
                Pair {
                    i: g,
                    j: t,
                    lcm,
                    comp: hl.comp,
                    degree,
                }
            })
            .collect();

        // Criterion M/F: drop a pair whose lcm is a multiple of another new
        // pair's lcm (keeping one representative of equal lcms).
        let mut kept: Vec<Pair> = Vec::new();
        while let Some(p) = cands.pop() {
            let coprime = rank_one && leads[p.i].mon.is_coprime(&hl.mon);
            let dominated = cands.iter().chain(kept.iter()).any(|q| q.lcm.divides(&p.lcm));
            if coprime || !dominated {
                kept.push(p);
            }
        }
        // Product criterion.
        kept.retain(|p| !(rank_one && leads[p.i].mon.is_coprime(&hl.mon)));

        // Criterion B on old pairs.
        pairs.retain(|p| {
            if p.comp != hl.comp || !hl.mon.divides(&p.lcm) {
                return true;
            }
            let l1 = leads[p.i].mon.lcm(&hl.mon);
            let l2 = leads[p.j].mon.lcm(&hl.mon);
            l1 == p.lcm || l2 == p.lcm
        });
        pairs.extend(kept);

        for g in 0..t {
            if active[g] && leads[g].comp == hl.comp && hl.mon.divides(&leads[g].mon) {
                active[g] = false;
            }
        }
        elems.push(h);
        leads.push(hl);
        active.push(true);
    }

    elems
        .into_iter()
        .zip(active)
        .filter(|(_, a)| *a)
        .map(|(e, _)| e)
        .collect()
}

/// Makes a basis with pairwise non-dividing leads reduced and sorted.
pub(crate) fn interreduce(fm: &FreeModule, mut basis: Vec<Vector>) -> Vec<Vector> {
    // Minimal leads first.
    basis.retain(|v| !v.is_zero());
    let mut minimal: Vec<Vector> = Vec::new();
    basis.sort_by(|a, b| fm.cmp_terms(a.lead().unwrap(), b.lead().unwrap()));
    for v in basis {
        let l = v.lead().unwrap();
        let mask = divmask(&l.mon);
        let redundant = minimal
            .iter()
            .any(|w| Lead::of(w).divides(&l.mon, l.comp, mask));
        if !redundant {
            minimal.push(v.monic());
        }
    }
    let mut out = Vec::with_capacity(minimal.len());
    for k in 0..minimal.len() {
        let others = Reducers::new(
            minimal
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != k)
                .map(|(_, v)| v),
        );
        let v = &minimal[k];
        let head = Vector {
            terms: vec![v.terms[0].clone()],
        };
        let tail = Vector {
            terms: v.terms[1..].to_vec(),
        };
        let tail = reduce(fm, &tail, &others);
        out.push(fm.add(&head, &tail));
    }
    sort_basis(fm, &mut out);
    out
}

pub(crate) fn sort_basis(fm: &FreeModule, basis: &mut [Vector]) {
    basis.sort_by(|a, b| {
        fm.degree_of(a)
            .cmp(&fm.degree_of(b))
            .then_with(|| fm.cmp_terms(a.lead().unwrap(), b.lead().unwrap()))
    });
}

/// Buchberger's criterion: returns the first pair `(i, j)` whose S-vector
/// does not reduce to zero.
pub fn first_failing_pair(fm: &FreeModule, basis: &[Vector]) -> Option<(usize, usize)> {
    let reducers = Reducers::new(basis.iter().filter(|v| !v.is_zero()));
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            let (Some(a), Some(b)) = (basis[i].lead(), basis[j].lead()) else {
                continue;
            };
            if a.comp != b.comp {
                continue;
            }
            let s = s_vector(fm, &basis[i], &basis[j]);
            if !reduce(fm, &s, &reducers).is_zero() {
                return Some((i, j));
            }
        }
    }
    None
}

/// Full reduction of `f` against `basis` (public wrapper).
pub fn normal_form(fm: &FreeModule, f: &Vector, basis: &[Vector]) -> Vector {
    let reducers = Reducers::new(basis.iter().filter(|v| !v.is_zero()));
    reduce(fm, f, &reducers)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;
    use crate::order::TermOrder;
    use crate::poly::Ring;

    #[test]
    fn cyclic_ideal_gb() {
        let r = Ring::revlex(3);
        let fm = FreeModule::ring(r.field, &r.order);
        // x1^2 - x2*x3, x1*x2 - x3^2 is not a GB under revlex.
        let f = r.poly(&[(1, &[2, 0, 0]), (-1, &[0, 1, 1])]);
        let g = r.poly(&[(1, &[1, 1, 0]), (-1, &[0, 0, 2])]);
        let gens = vec![fm.from_polys(&[f]), fm.from_polys(&[g])];
        assert!(first_failing_pair(&fm, &gens).is_some());
        let gb = groebner_basis(&fm, &gens);
        assert!(gb.len() > 2);
        assert!(first_failing_pair(&fm, &gb).is_none());
        for v in &gb {
            assert!(v.lead().unwrap().coeff.is_one());
        }
    }

    #[test]
    fn module_gb_over_two_components() {
        let base = TermOrder::revlex(2);
        let fm = FreeModule::graded(Field::Rational, &base, vec![0, 0]);
        let r = Ring::revlex(2);
        let v1 = fm.from_polys(&[r.var(0), r.var(1)]);
        let v2 = fm.from_polys(&[r.var(1), r.var(0)]);
        let gb = groebner_basis(&fm, &[v1, v2]);
        assert!(first_failing_pair(&fm, &gb).is_none());
        // The submodule has rank 2, so it contains y^2-x^2 times e_2.
        let target = fm.from_polys(&[r.zero(), &r.monomial(1, &[0, 2]) - &r.monomial(1, &[2, 0])]);
        assert!(normal_form(&fm, &target, &gb).is_zero());
    }
}
