//! Elements of graded free modules in the sparse term form used by the
//! Groebner engine.

use std::cmp::Ordering;
use std::sync::Arc;

use crate::field::{Field, Scalar};
use crate::monomial::Monomial;
use crate::order::{ModuleOrder, TermOrder};
use crate::poly::Polynomial;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Term {
    pub coeff: Scalar,
    pub mon: Monomial,
    pub comp: u32,
}

/// A free module `⊕ B(-degrees[j])` over a polynomial ring together with a
/// module order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FreeModule {
    field: Field,
    order: ModuleOrder,
    degrees: Arc<Vec<i64>>,
}

impl FreeModule {
    pub fn new(field: Field, order: ModuleOrder, degrees: Vec<i64>) -> FreeModule {
        FreeModule {
            field,
            order,
            degrees: Arc::new(degrees),
        }
    }

    /// The ring itself as a rank-one module.
    pub fn ring(field: Field, base: &TermOrder) -> FreeModule {
        FreeModule::new(field, ModuleOrder::position_over_term(base.clone()), vec![0])
    }

    /// Rank-`degrees.len()` module ordered term-over-position by degree.
    pub fn graded(field: Field, base: &TermOrder, degrees: Vec<i64>) -> FreeModule {
        FreeModule::new(
            field,
            ModuleOrder::term_over_position(base.clone(), degrees.clone()),
            degrees,
        )
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn order(&self) -> &ModuleOrder {
        &self.order
    }

    pub fn base(&self) -> &TermOrder {
        self.order.base()
    }

    pub fn nvars(&self) -> usize {
        self.order.base().nvars()
    }

    pub fn rank(&self) -> usize {
        self.degrees.len()
    }

    pub fn degrees(&self) -> &[i64] {
        &self.degrees
    }

    pub fn term_degree(&self, mon: &Monomial, comp: u32) -> i64 {
        mon.degree() as i64 + self.degrees[comp as usize]
    }

    pub fn cmp_terms(&self, a: &Term, b: &Term) -> Ordering {
        self.order.compare(&a.mon, a.comp, &b.mon, b.comp)
    }

    pub fn with_order(&self, order: ModuleOrder) -> FreeModule {
        FreeModule {
            field: self.field,
            order,
            degrees: self.degrees.clone(),
        }
    }

    pub fn zero(&self) -> Vector {
        Vector::default()
    }

    /// Canonical vector from arbitrary terms.
    pub fn vector(&self, mut terms: Vec<Term>) -> Vector {
        terms.sort_by(|a, b| self.cmp_terms(b, a));
        let mut out: Vec<Term> = Vec::with_capacity(terms.len());
        for t in terms {
            match out.last_mut() {
                Some(last) if last.mon == t.mon && last.comp == t.comp => {
                    last.coeff = &last.coeff + &t.coeff;
                }
                _ => out.push(t),
            }
            if out.last().map_or(false, |t| t.coeff.is_zero()) {
                out.pop();
            }
        }
        Vector { terms: out }
    }

    pub fn basis_vector(&self, j: usize) -> Vector {
        Vector {
            terms: vec![Term {
                coeff: self.field.one(),
                mon: Monomial::one(self.nvars()),
                comp: j as u32,
            }],
        }
    }

    pub fn from_polys(&self, coords: &[Polynomial]) -> Vector {
        let terms = coords
            .iter()
            .enumerate()
            .flat_map(|(j, p)| {
                p.terms().iter().map(move |(c, m)| Term {
                    coeff: c.clone(),
                    mon: m.clone(),
                    comp: j as u32,
                })
            })
            .collect();
        self.vector(terms)
    }

    pub fn to_polys(&self, v: &Vector) -> Vec<Polynomial> {
        let mut buckets: Vec<Vec<(Scalar, Monomial)>> = vec![Vec::new(); self.rank()];
        for t in &v.terms {
            buckets[t.comp as usize].push((t.coeff.clone(), t.mon.clone()));
        }
        buckets
            .into_iter()
            .map(|ts| Polynomial::from_terms(self.field, self.base(), ts).unwrap())
            .collect()
    }

    /// `f + c * m * g`.
    pub fn add_multiple(&self, f: &Vector, g: &Vector, c: &Scalar, m: &Monomial) -> Vector {
        if c.is_zero() || g.is_zero() {
            return f.clone();
        }
        let mut out = Vec::with_capacity(f.terms.len() + g.terms.len());
        let mut a = f.terms.iter().peekable();
        let mut b = g
            .terms
            .iter()
            .map(|t| Term {
                coeff: &t.coeff * c,
                mon: t.mon.mul(m),
                comp: t.comp,
            })
            .peekable();
        loop {
            match (a.peek(), b.peek()) {
                (None, None) => break,
                (Some(_), None) => out.push(a.next().unwrap().clone()),
                (None, Some(_)) => out.push(b.next().unwrap()),
                (Some(x), Some(y)) => match self.cmp_terms(x, y) {
                    Ordering::Greater => out.push(a.next().unwrap().clone()),
                    Ordering::Less => out.push(b.next().unwrap()),
                    Ordering::Equal => {
                        let x = a.next().unwrap();
                        let mut y = b.next().unwrap();
                        y.coeff = &x.coeff + &y.coeff;
                        if !y.coeff.is_zero() {
                            out.push(y);
                        }
                    }
                },
            }
        }
        Vector { terms: out }
    }

    pub fn add(&self, f: &Vector, g: &Vector) -> Vector {
        self.add_multiple(f, g, &self.field.one(), &Monomial::one(self.nvars()))
    }

    pub fn scale_term(&self, f: &Vector, c: &Scalar, m: &Monomial) -> Vector {
        if c.is_zero() {
            return Vector::default();
        }
        Vector {
            terms: f
                .terms
                .iter()
                .map(|t| Term {
                    coeff: &t.coeff * c,
                    mon: t.mon.mul(m),
                    comp: t.comp,
                })
                .collect(),
        }
    }

    /// Re-sorts a vector produced under another order of the same module.
    pub fn resort(&self, v: &Vector) -> Vector {
        self.vector(v.terms.clone())
    }

    /// Homogeneous degree of the leading term.
    pub fn degree_of(&self, v: &Vector) -> Option<i64> {
        v.lead().map(|t| self.term_degree(&t.mon, t.comp))
    }

    pub fn is_homogeneous(&self, v: &Vector) -> bool {
        match v.lead() {
            None => true,
            Some(l) => {
                let d = self.term_degree(&l.mon, l.comp);
                v.terms.iter().all(|t| self.term_degree(&t.mon, t.comp) == d)
            }
        }
    }
}

/// Terms strictly descending under the ambient module order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Vector {
    pub terms: Vec<Term>,
}

impl Vector {
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lead(&self) -> Option<&Term> {
        self.terms.first()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn monic(&self) -> Vector {
        match self.lead() {
            None => self.clone(),
            Some(t) if t.coeff.is_one() => self.clone(),
            Some(t) => {
                let inv = t.coeff.inverse().unwrap();
                Vector {
                    terms: self
                        .terms
                        .iter()
                        .map(|s| Term {
                            coeff: &s.coeff * &inv,
                            mon: s.mon.clone(),
                            comp: s.comp,
                        })
                        .collect(),
                }
            }
        }
    }

    pub fn neg(&self) -> Vector {
        Vector {
            terms: self
                .terms
                .iter()
                .map(|s| Term {
                    coeff: s.coeff.neg_ref(),
                    mon: s.mon.clone(),
                    comp: s.comp,
                })
                .collect(),
        }
    }

    /// Constant coefficient at basis element `comp`, if any.
    pub fn unit_at(&self, comp: u32) -> Option<&Scalar> {
        self.terms
            .iter()
            .find(|t| t.comp == comp && t.mon.is_one())
            .map(|t| &t.coeff)
    }
}

/// Cheap necessary condition for divisibility: bit `i mod 64` is set when
/// variable `i` occurs.
pub(crate) fn divmask(m: &Monomial) -> u64 {
    let mut mask = 0u64;
    for (i, &e) in m.exps().iter().enumerate() {
        if e > 0 {
            mask |= 1 << (i % 64);
        }
    }
    mask
}
