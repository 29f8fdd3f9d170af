//! Multivariate division with remainder.

use crate::error::{AlgebraError, Result};
use crate::poly::Polynomial;

/// Divides `f` by the list `divisors`: `f = sum q_i * g_i + r` with no term
/// of `r` divisible by a leading term of a `g_i`. At each step the highest
/// reducible term is cancelled against the first divisor (in list order)
/// whose leading monomial divides it.
pub fn divide(f: &Polynomial, divisors: &[Polynomial]) -> Result<(Vec<Polynomial>, Polynomial)> {
    for g in divisors {
        if g.field() != f.field() {
            return Err(AlgebraError::FieldMismatch(g.field(), f.field()));
        }
        if g.order() != f.order() {
            return Err(AlgebraError::AmbientMismatch(
                "divisor lives in a different ring".into(),
            ));
        }
        if g.is_zero() {
            return Err(AlgebraError::InvalidArgument("zero divisor in list".into()));
        }
    }
    let field = f.field();
    let order = f.order();
    let mut quotients: Vec<Vec<_>> = vec![Vec::new(); divisors.len()];
    let mut rem = Vec::new();
    let mut p = f.clone();
    loop {
        let hit = p.terms().iter().enumerate().find_map(|(idx, (_, m))| {
            divisors
                .iter()
                .position(|g| g.lead_monomial().unwrap().divides(m))
                .map(|k| (idx, k))
        });
        let Some((idx, k)) = hit else {
            rem.extend(p.terms().iter().cloned());
            break;
        };
        rem.extend(p.terms()[..idx].iter().cloned());
        let (c, m) = p.terms()[idx].clone();
        let g = &divisors[k];
        let (gc, gm) = g.leading_term().unwrap();
        let qc = c.checked_div(gc)?;
        let qm = gm.quotient_of(&m).unwrap();
        quotients[k].push((qc.clone(), qm.clone()));
        let tail = Polynomial::from_sorted_unchecked(field, order, p.terms()[idx..].to_vec());
        p = tail.combine(g, &qc, &qm)?;
    }
    let quotients = quotients
        .into_iter()
        .map(|ts| Polynomial::from_terms(field, order, ts))
        .collect::<Result<Vec<_>>>()?;
    let rem = Polynomial::from_sorted_unchecked(field, order, rem);
    Ok((quotients, rem))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Ring;

    #[test]
    fn divide_examples() {
        let r = Ring::revlex(3);
        let g = r.poly(&[(1, &[1, 1, 0]), (-1, &[0, 0, 2])]);
        let (q, rem) = divide(&r.monomial(1, &[1, 1, 0]), &[g.clone()]).unwrap();
        assert_eq!(q[0], r.one());
        assert_eq!(rem, r.monomial(1, &[0, 0, 2]));
        let (q, rem) = divide(&r.monomial(1, &[0, 0, 2]), &[g]).unwrap();
        assert!(q[0].is_zero());
        assert_eq!(rem, r.monomial(1, &[0, 0, 2]));
    }

    #[test]
    fn first_divisor_wins() {
        let r = Ring::revlex(2);
        let f = r.monomial(1, &[1, 1]);
        let (q, rem) = divide(&f, &[r.var(0), r.var(1)]).unwrap();
        assert_eq!(q[0], r.var(1));
        assert!(q[1].is_zero());
        assert!(rem.is_zero());
    }
}
