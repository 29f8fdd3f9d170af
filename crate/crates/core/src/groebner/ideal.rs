//! Ideals of polynomial rings and their reduced Groebner bases.

use crate::error::{AlgebraError, Result};
use crate::field::Field;
use crate::hilbert::HilbertSeries;
use crate::monomial::{default_names, Monomial};
use crate::order::{OrderKind, TermOrder};
use crate::poly::Polynomial;

use super::buchberger::{first_failing_pair, groebner_basis, normal_form};
use super::vector::{FreeModule, Vector};

/// Generators of an ideal in `k[x_1..x_n]` with variable names.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ideal {
    field: Field,
    order: TermOrder,
    names: Vec<String>,
    generators: Vec<Polynomial>,
}

impl Ideal {
    /// Zero generators are dropped.
    pub fn new(field: Field, order: &TermOrder, generators: Vec<Polynomial>) -> Result<Ideal> {
        Ideal::with_names(field, order, default_names(order.nvars()), generators)
    }

    pub fn with_names(
        field: Field,
        order: &TermOrder,
        names: Vec<String>,
        generators: Vec<Polynomial>,
    ) -> Result<Ideal> {
        if names.len() != order.nvars() {
            return Err(AlgebraError::AmbientMismatch(format!(
                "{} names for {} variables",
                names.len(),
                order.nvars()
            )));
        }
        for g in &generators {
            if g.field() != field {
                return Err(AlgebraError::FieldMismatch(g.field(), field));
            }
            if g.nvars() != order.nvars() {
                return Err(AlgebraError::AmbientMismatch(format!(
                    "generator in {} variables, ring has {}",
                    g.nvars(),
                    order.nvars()
                )));
            }
        }
        let generators = generators
            .into_iter()
            .filter(|g| !g.is_zero())
            .map(|g| if g.order() == order { g } else { g.with_order(order) })
            .collect();
        Ok(Ideal {
            field,
            order: order.clone(),
            names,
            generators,
        })
    }

    pub fn zero(field: Field, order: &TermOrder) -> Ideal {
        Ideal::new(field, order, Vec::new()).unwrap()
    }

    /// The homogeneous maximal ideal `(x_1, ..., x_n)`.
    pub fn maximal(field: Field, order: &TermOrder) -> Ideal {
        let gens = (0..order.nvars()).map(|i| Polynomial::var(field, order, i)).collect();
        Ideal::new(field, order, gens).unwrap()
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn order(&self) -> &TermOrder {
        &self.order
    }

    pub fn nvars(&self) -> usize {
        self.order.nvars()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn is_homogeneous(&self) -> bool {
        self.generators.iter().all(|g| g.is_homogeneous())
    }

    pub fn is_monomial(&self) -> bool {
        self.generators.iter().all(|g| g.len() == 1)
    }

    pub fn with_order(&self, order: &TermOrder) -> Ideal {
        Ideal::with_names(self.field, order, self.names.clone(), self.generators.clone()).unwrap()
    }

    pub fn with_generators(&self, generators: Vec<Polynomial>) -> Result<Ideal> {
        Ideal::with_names(self.field, &self.order, self.names.clone(), generators)
    }

    pub fn require_homogeneous(&self) -> Result<()> {
        match self.generators.iter().find(|g| !g.is_homogeneous()) {
            Some(g) => Err(AlgebraError::NotHomogeneous(g.to_string_with(&self.names))),
            None => Ok(()),
        }
    }

    pub fn groebner(&self) -> GroebnerBasis {
        let fm = FreeModule::ring(self.field, &self.order);
        let gens: Vec<Vector> = self
            .generators
            .iter()
            .map(|g| fm.from_polys(std::slice::from_ref(g)))
            .collect();
        let gb = groebner_basis(&fm, &gens);
        let elements = gb
            .iter()
            .map(|v| fm.to_polys(v).into_iter().next().unwrap())
            .collect();
        GroebnerBasis {
            field: self.field,
            order: self.order.clone(),
            elements,
            reduced: true,
        }
    }

    pub fn initial_ideal(&self) -> Ideal {
        self.groebner().initial_ideal()
    }

    /// Elements involving only the variables in `keep`, expressed in a ring
    /// on those variables (in the given order) with graded revlex.
    pub fn eliminate(&self, keep: &[usize]) -> Result<Ideal> {
        let n = self.nvars();
        let mut is_kept = vec![false; n];
        for &k in keep {
            if k >= n || is_kept[k] {
                return Err(AlgebraError::InvalidArgument(format!("bad variable list {keep:?}")));
            }
            is_kept[k] = true;
        }
        let drop: Vec<usize> = (0..n).filter(|&i| !is_kept[i]).collect();
        let order = if drop.is_empty() {
            self.order.clone()
        } else {
            let mut priority = drop.clone();
            priority.extend(keep.iter().copied());
            TermOrder::with_priority(OrderKind::BlockElimination(drop.len()), priority)?
        };
        let gb = self.with_order(&order).groebner();
        let small = TermOrder::revlex(keep.len());
        let mut position = vec![usize::MAX; n];
        for (j, &k) in keep.iter().enumerate() {
            position[k] = j;
        }
        let gens = gb
            .elements
            .iter()
            .filter(|g| g.terms().iter().all(|(_, m)| drop.iter().all(|&d| m.exp(d) == 0)))
            .map(|g| {
                g.map_monomials(&small, |m| {
                    let e: Vec<u16> = keep.iter().map(|&k| m.exp(k)).collect();
                    Monomial::from_exps(&e)
                })
            })
            .collect();
        let names = keep.iter().map(|&k| self.names[k].clone()).collect();
        Ideal::with_names(self.field, &small, names, gens)
    }
}

/// A Groebner basis with respect to `order`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    field: Field,
    order: TermOrder,
    elements: Vec<Polynomial>,
    reduced: bool,
}

impl GroebnerBasis {
    /// Wraps a list claimed to be a Groebner basis, verifying Buchberger's
    /// criterion.
    pub fn from_elements(field: Field, order: &TermOrder, elements: Vec<Polynomial>) -> Result<GroebnerBasis> {
        let gb = GroebnerBasis {
            field,
            order: order.clone(),
            elements,
            reduced: false,
        };
        if let Some((i, j)) = gb.failing_pair() {
            return Err(AlgebraError::NotGroebner(format!("S-pair ({i}, {j}) does not reduce to zero")));
        }
        Ok(GroebnerBasis {
            reduced: gb.is_reduced(),
            ..gb
        })
    }

    /// A reduced basis restored from a checksummed cache entry.
    pub(crate) fn trusted(field: Field, order: &TermOrder, elements: Vec<Polynomial>) -> GroebnerBasis {
        GroebnerBasis {
            field,
            order: order.clone(),
            elements,
            reduced: true,
        }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn order(&self) -> &TermOrder {
        &self.order
    }

    pub fn nvars(&self) -> usize {
        self.order.nvars()
    }

    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    pub fn reduced(&self) -> bool {
        self.reduced
    }

    fn module(&self) -> FreeModule {
        FreeModule::ring(self.field, &self.order)
    }

    fn vectors(&self) -> Vec<Vector> {
        let fm = self.module();
        self.elements
            .iter()
            .map(|g| fm.from_polys(std::slice::from_ref(g)))
            .collect()
    }

    /// First S-pair (by index) that fails to reduce to zero.
    pub fn failing_pair(&self) -> Option<(usize, usize)> {
        first_failing_pair(&self.module(), &self.vectors())
    }

    pub fn is_reduced(&self) -> bool {
        let leads: Vec<&Monomial> = self.elements.iter().filter_map(|g| g.lead_monomial()).collect();
        self.elements.iter().enumerate().all(|(i, g)| {
            g.lead_coeff().map_or(false, |c| c.is_one())
                && g.terms().iter().all(|(_, m)| {
                    leads.iter().enumerate().all(|(j, l)| j == i || !l.divides(m))
                })
        })
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.elements.iter().filter_map(|g| g.lead_monomial().cloned()).collect()
    }

    pub fn normal_form(&self, f: &Polynomial) -> Polynomial {
        let fm = self.module();
        let v = fm.from_polys(std::slice::from_ref(&f.with_order(&self.order)));
        let r = normal_form(&fm, &v, &self.vectors());
        fm.to_polys(&r).into_iter().next().unwrap()
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        self.normal_form(f).is_zero()
    }

    pub fn initial_ideal(&self) -> Ideal {
        let gens = self
            .leading_monomials()
            .into_iter()
            .map(|m| Polynomial::term(self.field, &self.order, self.field.one(), m))
            .collect();
        Ideal::new(self.field, &self.order, gens).unwrap()
    }

    /// Degree-`d` monomials outside the initial ideal, descending.
    pub fn standard_monomials(&self, d: u32) -> Vec<Monomial> {
        let leads = self.leading_monomials();
        let mut ms: Vec<Monomial> = Monomial::all_of_degree(self.nvars(), d)
            .into_iter()
            .filter(|m| !leads.iter().any(|l| l.divides(m)))
            .collect();
        ms.sort_by(|a, b| self.order.compare(b, a));
        ms
    }

    pub fn hilbert_series(&self) -> HilbertSeries {
        HilbertSeries::of_monomial_quotient(self.nvars(), &self.leading_monomials())
    }

    /// `dim_k (B/I)_d`.
    pub fn hilbert_function(&self, d: i64) -> i64 {
        self.hilbert_series().coefficient(d)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Ring;

    #[test]
    fn standard_monomial_examples() {
        let r = Ring::revlex(2);
        let i = Ideal::new(r.field, &r.order, vec![r.monomial(1, &[1, 1])]).unwrap();
        let gb = i.groebner();
        let sm = gb.standard_monomials(3);
        assert_eq!(sm, vec![Monomial::from_exps(&[3, 0]), Monomial::from_exps(&[0, 3])]);
        assert_eq!(gb.hilbert_function(0), 1);
        assert_eq!(gb.hilbert_function(4), 2);

        let r3 = Ring::revlex(3);
        let j = Ideal::new(r3.field, &r3.order, vec![r3.poly(&[(1, &[1, 1, 0]), (-1, &[0, 0, 2])])]).unwrap();
        assert_eq!(j.groebner().standard_monomials(2).len(), 5);
        assert_eq!(j.groebner().hilbert_function(2), 5);

        let z = Ideal::zero(r.field, &r.order);
        assert_eq!(z.groebner().standard_monomials(2).len(), 3);
    }

    #[test]
    fn elimination_gives_determinant() {
        // vars x1 x2 u v t
        let r = Ring::revlex(5);
        let f = &r.var(0) - &r.monomial(1, &[0, 0, 1, 0, 1]);
        let g = &r.var(1) - &r.monomial(1, &[0, 0, 0, 1, 1]);
        let i = Ideal::new(r.field, &r.order, vec![f, g]).unwrap();
        let e = i.eliminate(&[0, 1, 2, 3]).unwrap();
        let gb = e.groebner();
        let small = Ring::revlex(4);
        let det = &small.monomial(1, &[1, 0, 0, 1]) - &small.monomial(1, &[0, 1, 1, 0]);
        assert!(gb.contains(&det));
    }

    #[test]
    fn initial_ideal_of_conic() {
        let r = Ring::revlex(3);
        let j = Ideal::new(r.field, &r.order, vec![r.poly(&[(1, &[1, 1, 0]), (-1, &[0, 0, 2])])]).unwrap();
        let ini = j.initial_ideal();
        assert_eq!(ini.generators(), &[r.monomial(1, &[1, 1, 0])]);
    }
}
