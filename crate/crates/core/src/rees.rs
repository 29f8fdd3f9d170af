//! Presentations of Rees algebras: the `f^(k)` construction, the relations
//! `x_i y_j - x_j y_i`, elimination oracles and associated graded rings.

use std::collections::HashMap;

use serde::Serialize;

use crate::error::{AlgebraError, Result};
use crate::field::Field;
use crate::groebner::{GroebnerBasis, Ideal};
use crate::hilbert::HilbertSeries;
use crate::linalg::{ColumnIndex, Echelon, SparseRow};
use crate::monomial::{rees_names, Bidegree, Monomial};
use crate::order::{OrderKind, TermOrder};
use crate::poly::Polynomial;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ReesOrigin {
    /// `R = A[mt]` presented by `L' ∪ H`.
    MaximalIdeal,
    /// `R = A[It]` for `I` generated by forms of one degree, computed by
    /// eliminating an auxiliary variable.
    Elimination { forms: Vec<Polynomial>, degree: u32 },
}

/// Presentation `S/I` of a Rees algebra, `S = k[x_1..x_n, y_1..y_s]` with
/// `deg x_i = (1,0)` and `deg y_j = (1,1)`.
#[derive(Clone, Debug)]
pub struct ReesPresentation {
    n: usize,
    s: usize,
    base: Ideal,
    ideal: Ideal,
    origin: ReesOrigin,
}

impl ReesPresentation {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn s(&self) -> usize {
        self.s
    }

    /// The ideal `J` with `A = B/J`.
    pub fn base(&self) -> &Ideal {
        &self.base
    }

    /// The presentation ideal in `S`.
    pub fn ideal(&self) -> &Ideal {
        &self.ideal
    }

    pub fn generators(&self) -> &[Polynomial] {
        self.ideal.generators()
    }

    pub fn origin(&self) -> &ReesOrigin {
        &self.origin
    }

    pub fn bidegree(&self, m: &Monomial) -> Bidegree {
        let b = m.partial_degree(self.n..self.n + self.s) as i64;
        Bidegree {
            a: m.degree() as i64,
            b,
        }
    }

    /// Common bidegree of the terms of `f`, if any.
    pub fn bidegree_of_poly(&self, f: &Polynomial) -> Option<Bidegree> {
        let mut it = f.terms().iter().map(|(_, m)| self.bidegree(m));
        let first = it.next()?;
        it.all(|b| b == first).then_some(first)
    }
}

/// Graded revlex on `x_1 > ... > x_n > y_1 > ... > y_s`.
pub fn rees_order(n: usize, s: usize) -> TermOrder {
    TermOrder::revlex(n + s)
}

fn check_base_form(f: &Polynomial, n: usize) -> Result<u32> {
    if f.nvars() != n {
        return Err(AlgebraError::AmbientMismatch(format!(
            "form in {} variables, expected {n}",
            f.nvars()
        )));
    }
    if !f.is_homogeneous() || f.is_zero() {
        return Err(AlgebraError::NotHomogeneous(f.to_string()));
    }
    Ok(f.degree().unwrap())
}

/// `f^(k)`: in every monomial `x_{i_1} ... x_{i_d}` with `i_1 <= ... <= i_d`
/// the last `k` factors become `y`'s. The result lives in the `2n`-variable
/// Rees ring.
pub fn sharp(f: &Polynomial, k: u32) -> Result<Polynomial> {
    let n = f.nvars();
    let d = check_base_form(f, n)?;
    if k > d {
        return Err(AlgebraError::InvalidArgument(format!("k = {k} exceeds degree {d}")));
    }
    let order = rees_order(n, n);
    let terms = f
        .terms()
        .iter()
        .map(|(c, m)| {
            let seq = m.index_sequence();
            let split = (d - k) as usize;
            let mut e = vec![0u16; 2 * n];
            for &i in &seq[..split] {
                e[i] += 1;
            }
            for &i in &seq[split..] {
                e[n + i] += 1;
            }
            (c.clone(), Monomial::from_exps(&e))
        })
        .collect();
    Polynomial::from_terms(f.field(), &order, terms)
}

/// The relations `x_i y_j - x_j y_i` for `i < j`, ordered by `(i, j)`.
pub fn h_relations(field: Field, n: usize) -> Vec<Polynomial> {
    let order = rees_order(n, n);
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let mut a = vec![0u16; 2 * n];
            a[i] = 1;
            a[n + j] = 1;
            let mut b = vec![0u16; 2 * n];
            b[j] = 1;
            b[n + i] = 1;
            let p = Polynomial::from_terms(
                field,
                &order,
                vec![
                    (field.one(), Monomial::from_exps(&a)),
                    (field.one().neg_ref(), Monomial::from_exps(&b)),
                ],
            )
            .unwrap();
            out.push(p);
        }
    }
    out
}

/// `L' ∪ H` for the homogeneous list `L` in `n` variables: `L'` grouped by
/// `f` then `k`, followed by `H` in `(i, j)` order.
pub fn rees_generators(field: Field, l: &[Polynomial], n: usize) -> Result<ReesPresentation> {
    let order = rees_order(n, n);
    let mut gens = Vec::new();
    for f in l {
        if f.field() != field {
            return Err(AlgebraError::FieldMismatch(f.field(), field));
        }
        let d = check_base_form(f, n)?;
        for k in 0..=d {
            gens.push(sharp(f, k)?);
        }
    }
    gens.extend(h_relations(field, n));
    let base_order = TermOrder::revlex(n);
    let base = Ideal::new(field, &base_order, l.iter().map(|f| f.with_order(&base_order)).collect())?;
    let ideal = Ideal::with_names(field, &order, rees_names(n), gens)?;
    Ok(ReesPresentation {
        n,
        s: n,
        base,
        ideal,
        origin: ReesOrigin::MaximalIdeal,
    })
}

/// Replaces the generator list (for experiments such as appending a
/// duplicate).
pub fn with_generators(p: &ReesPresentation, gens: Vec<Polynomial>) -> Result<ReesPresentation> {
    Ok(ReesPresentation {
        ideal: p.ideal.with_generators(gens)?,
        ..p.clone()
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MinimalityReport {
    pub minimal: bool,
    /// Index of a generator lying in the ideal of the others.
    pub redundant: Option<usize>,
}

/// Checks that no generator lies in the ideal generated by the others,
/// degree by degree (bidegree by bidegree) with exact linear algebra.
/// Generators are examined from last to first.
pub fn minimality_check(p: &ReesPresentation) -> MinimalityReport {
    let gens = p.generators();
    let field = p.ideal.field();
    let nvars = p.n + p.s;
    for idx in (0..gens.len()).rev() {
        let g = &gens[idx];
        let Some(bd) = p.bidegree_of_poly(g) else {
            continue;
        };
        let mut cols: ColumnIndex<Monomial> = ColumnIndex::new();
        let mut ech = Echelon::new(field);
        for (jdx, h) in gens.iter().enumerate() {
            if jdx == idx {
                continue;
            }
            let Some(hb) = p.bidegree_of_poly(h) else {
                continue;
            };
            let (da, db) = (bd.a - hb.a, bd.b - hb.b);
            if da < 0 || db < 0 || db > da {
                continue;
            }
            for m in multipliers(p.n, p.s, (da - db) as u32, db as u32) {
                let row = to_row(&mut cols, h, &m);
                ech.insert(row);
            }
        }
        let target = to_row(&mut cols, g, &Monomial::one(nvars));
        if ech.contains(target) {
            return MinimalityReport {
                minimal: false,
                redundant: Some(idx),
            };
        }
    }
    MinimalityReport {
        minimal: true,
        redundant: None,
    }
}

fn to_row(cols: &mut ColumnIndex<Monomial>, h: &Polynomial, m: &Monomial) -> SparseRow {
    h.terms()
        .iter()
        .map(|(c, u)| (cols.index(&u.mul(m)), c.clone()))
        .collect()
}

/// Monomials with x-degree `dx` and y-degree `dy`.
fn multipliers(n: usize, s: usize, dx: u32, dy: u32) -> Vec<Monomial> {
    let xs = Monomial::all_of_degree(n, dx);
    let ys = Monomial::all_of_degree(s, dy);
    let mut out = Vec::with_capacity(xs.len() * ys.len());
    for x in &xs {
        for y in &ys {
            let mut e = x.exps().to_vec();
            e.extend_from_slice(y.exps());
            out.push(Monomial::from_exps(&e));
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CountCheck {
    pub degree: u32,
    pub rees_standard: i64,
    pub predicted: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GroebnerTheoremReport {
    /// `L` is a Groebner basis of `(L)` under revlex on `B`.
    pub base_is_groebner: bool,
    pub base_failing_pair: Option<(usize, usize)>,
    /// `L' ∪ H` passes Buchberger's criterion under revlex on `S`.
    pub rees_is_groebner: bool,
    pub rees_failing_pair: Option<(usize, usize)>,
    /// `|C'_i| = (i+1)|C_i|` for the standard bases of `in(L)` and
    /// `in(L' ∪ H)`.
    pub counts: Vec<CountCheck>,
    pub counts_agree: bool,
    /// The implication "(L is a GB) => (L' ∪ H is a GB and counts agree)".
    pub theorem_holds: bool,
}

pub fn verify_groebner_theorem(field: Field, l: &[Polynomial], n: usize, bound: u32) -> Result<GroebnerTheoremReport> {
    let p = rees_generators(field, l, n)?;
    let base_order = TermOrder::revlex(n);
    let base_gb = GroebnerBasisCheck::new(field, &base_order, p.base().generators().to_vec());
    let rees_gb = GroebnerBasisCheck::new(field, p.ideal().order(), p.generators().to_vec());

    let base_leads: Vec<Monomial> = l.iter().filter_map(|f| f.lead_monomial().cloned()).collect();
    let rees_leads: Vec<Monomial> = p.generators().iter().filter_map(|f| f.lead_monomial().cloned()).collect();
    let hb = HilbertSeries::of_monomial_quotient(n, &base_leads);
    let hr = HilbertSeries::of_monomial_quotient(2 * n, &rees_leads);
    let counts: Vec<CountCheck> = (0..=bound)
        .map(|i| CountCheck {
            degree: i,
            rees_standard: hr.coefficient(i as i64),
            predicted: (i as i64 + 1) * hb.coefficient(i as i64),
        })
        .collect();
    let counts_agree = counts.iter().all(|c| c.rees_standard == c.predicted);
    let base_is_groebner = base_gb.failing.is_none();
    let rees_is_groebner = rees_gb.failing.is_none();
    Ok(GroebnerTheoremReport {
        base_is_groebner,
        base_failing_pair: base_gb.failing,
        rees_is_groebner,
        rees_failing_pair: rees_gb.failing,
        theorem_holds: !base_is_groebner || (rees_is_groebner && counts_agree),
        counts,
        counts_agree,
    })
}

struct GroebnerBasisCheck {
    failing: Option<(usize, usize)>,
}

impl GroebnerBasisCheck {
    fn new(field: Field, order: &TermOrder, elems: Vec<Polynomial>) -> GroebnerBasisCheck {
        let failing = match GroebnerBasis::from_elements(field, order, elems.clone()) {
            Ok(_) => None,
            Err(_) => {
                let fm = crate::groebner::FreeModule::ring(field, order);
                let vs: Vec<_> = elems.iter().map(|g| fm.from_polys(std::slice::from_ref(g))).collect();
                crate::groebner::first_failing_pair(&fm, &vs)
            }
        };
        GroebnerBasisCheck { failing }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReducednessWitness {
    /// Element whose leading monomial divides a term of `container`.
    pub leader: usize,
    /// Element containing the divisible term.
    pub container: usize,
}

/// `None` when no term of one element is divisible by the leading monomial
/// of another (leading coefficients are ignored). Containers are scanned in
/// list order, their terms from the top, leaders in list order.
pub fn reducedness_check(elems: &[Polynomial]) -> Option<ReducednessWitness> {
    let leads: Vec<Option<&Monomial>> = elems.iter().map(|g| g.lead_monomial()).collect();
    for (ci, g) in elems.iter().enumerate() {
        for (_, m) in g.terms() {
            for (li, l) in leads.iter().enumerate() {
                let Some(l) = l else { continue };
                if li == ci {
                    continue;
                }
                if l.divides(m) {
                    return Some(ReducednessWitness {
                        leader: li,
                        container: ci,
                    });
                }
            }
        }
    }
    None
}

/// The involution `x_i <-> y_i` on a bihomogeneous element of the Rees ring
/// of the maximal ideal. Bidegree `(a, b)` goes to `(a, a - b)`.
pub fn rees_involution(p: &ReesPresentation, f: &Polynomial) -> Result<Polynomial> {
    if p.s != p.n {
        return Err(AlgebraError::InvalidArgument(
            "the involution needs as many y's as x's".into(),
        ));
    }
    if f.nvars() != 2 * p.n {
        return Err(AlgebraError::AmbientMismatch("element outside the Rees ring".into()));
    }
    if !f.is_zero() && p.bidegree_of_poly(f).is_none() {
        return Err(AlgebraError::NotHomogeneous(format!("{f} is not bihomogeneous")));
    }
    let n = p.n;
    let map: Vec<usize> = (0..2 * n).map(|i| if i < n { i + n } else { i - n }).collect();
    Ok(f.map_monomials(f.order(), |m| m.remap(2 * n, &map)))
}

/// Presentation ideal of `A[It]` for `I = (forms)` in `A = B/J`, all forms of
/// the same degree `c`, by eliminating `t` from `J + (y_j - f_j t)`. The
/// y-variables carry bidegree `(1,1)`.
pub fn rees_ideal_elimination(j: &Ideal, forms: &[Polynomial]) -> Result<ReesPresentation> {
    let n = j.nvars();
    let s = forms.len();
    if s == 0 {
        return Err(AlgebraError::InvalidArgument("no forms given".into()));
    }
    let mut degree = None;
    for f in forms {
        let d = check_base_form(f, n)?;
        match degree {
            None => degree = Some(d),
            Some(c) if c != d => {
                return Err(AlgebraError::InvalidArgument(format!(
                    "forms of degrees {c} and {d}"
                )))
            }
            _ => {}
        }
    }
    let c = degree.unwrap();
    let field = j.field();
    // Variables: x_1..x_n, y_1..y_s, t; t is eliminated first.
    let total = n + s + 1;
    let mut priority = vec![n + s];
    priority.extend(0..n + s);
    let big = TermOrder::with_priority(OrderKind::BlockElimination(1), priority)?;
    let mut gens: Vec<Polynomial> = j.generators().iter().map(|g| g.embed(&big, 0)).collect();
    let t = Polynomial::var(field, &big, n + s);
    for (idx, f) in forms.iter().enumerate() {
        let y = Polynomial::var(field, &big, n + idx);
        let ft = &f.embed(&big, 0) * &t;
        gens.push(&y - &ft);
    }
    let mut names: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
    names.extend((1..=s).map(|i| format!("y{i}")));
    names.push("t".into());
    let big_ideal = Ideal::with_names(field, &big, names, gens)?;
    let keep: Vec<usize> = (0..n + s).collect();
    let kernel = big_ideal.eliminate(&keep)?;
    debug_assert_eq!(kernel.nvars(), total - 1);
    let order = rees_order(n, s);
    let ideal = kernel.with_order(&order);
    Ok(ReesPresentation {
        n,
        s,
        base: j.clone(),
        ideal,
        origin: ReesOrigin::Elimination {
            forms: forms.to_vec(),
            degree: c,
        },
    })
}

/// Presentation of the associated graded ring `G = R/IR`: the presentation
/// ideal of `R` together with the generators of `I` (as elements of
/// bidegree `(c, 0)`). For the maximal ideal this adjoins `x_1..x_n`.
pub fn assoc_graded(p: &ReesPresentation) -> Result<Ideal> {
    let order = p.ideal.order().clone();
    let field = p.ideal.field();
    let forms: Vec<Polynomial> = match &p.origin {
        ReesOrigin::MaximalIdeal => (0..p.n).map(|i| Polynomial::var(field, &order, i)).collect(),
        ReesOrigin::Elimination { forms, .. } => forms.iter().map(|f| f.embed(&order, 0)).collect(),
    };
    let mut gens = p.ideal.generators().to_vec();
    gens.extend(forms);
    Ideal::with_names(field, &order, p.ideal.names().to_vec(), gens)
}

/// Reduced Groebner bases of two ideals in the same ring agree.
pub fn same_ideal(a: &Ideal, b: &Ideal) -> bool {
    let order = a.order();
    a.groebner().elements() == b.with_order(order).groebner().elements()
}

/// Hilbert function values `dim R_i` and `(i+1) dim A_i` for `i <= bound`.
pub fn hilbert_identity(p: &ReesPresentation, bound: u32) -> Vec<(i64, i64)> {
    let hr = p.ideal.groebner().hilbert_series();
    let ha = p.base.groebner().hilbert_series();
    (0..=bound as i64)
        .map(|i| (hr.coefficient(i), (i + 1) * ha.coefficient(i)))
        .collect()
}

/// Number of generators of each bidegree.
pub fn bidegree_census(p: &ReesPresentation) -> HashMap<(i64, i64), usize> {
    let mut out = HashMap::new();
    for g in p.generators() {
        if let Some(b) = p.bidegree_of_poly(g) {
            *out.entry((b.a, b.b)).or_insert(0) += 1;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Ring;

    fn conic() -> (Ring, Polynomial) {
        let r = Ring::revlex(3);
        let f = r.poly(&[(1, &[1, 1, 0]), (-1, &[0, 0, 2])]);
        (r, f)
    }

    #[test]
    fn sharp_examples() {
        let (_, f) = conic();
        let s = sharp(&f, 1).unwrap();
        let r6 = Ring::revlex(6);
        assert_eq!(s, r6.poly(&[(1, &[1, 0, 0, 0, 1, 0]), (-1, &[0, 0, 1, 0, 0, 1])]));
        assert_eq!(sharp(&f, 0).unwrap(), f.embed(&TermOrder::revlex(6), 0));
        let r1 = Ring::revlex(1);
        assert_eq!(sharp(&r1.var(0), 1).unwrap(), Ring::revlex(2).var(1));
        let r2 = Ring::revlex(2);
        let g = r2.monomial(1, &[2, 1]);
        assert_eq!(sharp(&g, 2).unwrap(), Ring::revlex(4).monomial(1, &[1, 0, 1, 1]));
        assert!(sharp(&g, 4).is_err());
        assert!(sharp(&(&r2.var(0) + &r2.one()), 1).is_err());
    }

    #[test]
    fn generator_counts() {
        let (r, f) = conic();
        let p = rees_generators(r.field, &[f], 3).unwrap();
        assert_eq!(p.generators().len(), 6);
        let p = rees_generators(Field::Rational, &[], 2).unwrap();
        assert_eq!(p.generators().len(), 1);
        assert_eq!(p.generators()[0].to_string(), "-x2*x3 + x1*x4");
        let r1 = Ring::revlex(1);
        let p = rees_generators(r1.field, &[r1.var(0)], 1).unwrap();
        assert_eq!(p.generators().len(), 2);
    }

    #[test]
    fn conic_is_not_reduced() {
        let (r, f) = conic();
        let p = rees_generators(r.field, &[f], 3).unwrap();
        let w = reducedness_check(p.generators()).unwrap();
        assert_eq!((w.leader, w.container), (1, 3));
        assert!(reducedness_check(&h_relations(Field::Rational, 3)).is_none());
    }

    #[test]
    fn involution_squares_to_identity() {
        let (r, f) = conic();
        let p = rees_generators(r.field, &[f], 3).unwrap();
        for g in p.generators() {
            let h = rees_involution(&p, g).unwrap();
            assert_eq!(rees_involution(&p, &h).unwrap(), *g);
        }
        let r6 = Ring::revlex(6);
        let bad = &r6.monomial(1, &[1, 1, 0, 0, 0, 0]) + &r6.monomial(1, &[1, 0, 0, 1, 0, 0]);
        assert!(rees_involution(&p, &bad).is_err());
    }
}
