//! `R = A[mt]` against `R_in`, built the same way from `B/in(J)`.

use crate::cohomology::predict_rees_profile;
use crate::error::Result;
use crate::groebner::Ideal;
use crate::order::TermOrder;

use super::report::{Reporter, TheoremReport};
use super::{analyze, ideal_digest};

/// Index-wise `a_i(R) <= a_i(R_in)`, then `a*` and `reg`, with both Rees
/// profiles taken from the formula route. The base comparison
/// `a_i(A) <= a_i(A_in)` is reported too.
pub fn check_ini(j: &Ideal, order: &TermOrder) -> Result<Vec<TheoremReport>> {
    j.require_homogeneous()?;
    let j = j.with_order(order);
    let jin = j.initial_ideal();
    let rep = Reporter {
        inputs: ideal_digest(&j, &[&order.descriptor()]),
        tainted: false,
        probabilistic: false,
    };
    let a = analyze(&j)?;
    let ain = analyze(&jin)?;
    let r = predict_rees_profile(&a.profile)?;
    let rin = predict_rees_profile(&ain.profile)?;
    let top = j.nvars() as i64 + 1;

    let mut out = Vec::new();
    for i in 0..=top {
        out.push(rep.leq(&format!("ini.base[{i}]"), a.profile.a(i), ain.profile.a(i)));
    }
    for i in 0..=top {
        out.push(rep.leq(&format!("ini3.a[{i}]"), r.profile.a(i), rin.profile.a(i)));
    }
    out.push(rep.leq("ini3.a-star", r.a_star, rin.a_star));
    out.push(rep.leq("ini3.reg", r.reg, rin.reg));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Ring;

    #[test]
    fn monomial_ideal_is_its_own_initial_ideal() {
        let r = Ring::revlex(3);
        let j = Ideal::new(r.field, &r.order, vec![r.monomial(1, &[1, 1, 0])]).unwrap();
        let reps = check_ini(&j, &r.order).unwrap();
        assert!(reps.iter().all(|x| x.holds() && x.left == x.right), "{reps:#?}");
    }

    #[test]
    fn conic_both_orders() {
        let r = Ring::revlex(3);
        let f = r.poly(&[(1, &[2, 0, 0]), (-1, &[0, 1, 1])]);
        let j = Ideal::new(r.field, &r.order, vec![f]).unwrap();
        for o in [TermOrder::revlex(3), TermOrder::lex(3)] {
            assert!(check_ini(&j, &o).unwrap().iter().all(|x| x.holds()));
        }
    }
}
