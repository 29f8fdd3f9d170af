//! Relations between `A` and `R = A[mt]` for the maximal graded ideal.

use crate::cohomology::{a_star_at, extension_shift, predict_rees_profile, reg_at, CohomologyProfile};
use crate::error::Result;
use crate::groebner::Ideal;
use crate::order::TermOrder;
use crate::rees::rees_generators;
use crate::resolution::BettiInvariants;

use super::report::{add, digest, Reporter, TheoremReport};
use super::{analyze, ideal_digest, Analysis};

#[derive(Clone, Copy, Debug, Default)]
pub struct MaxIdealOptions {
    /// Also resolve the presentation ideal of `R` over `2n` variables.
    /// `None` does so when `n <= 3`.
    pub direct: Option<bool>,
}

/// The presentation ideal of `A[mt]` from the reduced revlex basis of `J`,
/// analysed over `2n` variables.
pub fn analyze_rees(j: &Ideal) -> Result<Analysis> {
    let revlex = TermOrder::revlex(j.nvars());
    let gb = j.with_order(&revlex).groebner();
    let p = rees_generators(j.field(), gb.elements(), j.nvars())?;
    analyze(p.ideal())
}

pub fn check_maximal_ideal_theorems(j: &Ideal, opts: MaxIdealOptions) -> Result<Vec<TheoremReport>> {
    let a = analyze(j)?;
    let direct = match opts.direct.unwrap_or(j.nvars() <= 3) {
        true => Some(analyze_rees(j)?),
        false => None,
    };
    let rep = Reporter {
        inputs: ideal_digest(j, &["maxideal"]),
        tainted: false,
        probabilistic: false,
    };
    let mut out = core(&rep, &a.profile, Some(&a.betti_inv), direct.as_ref())?;
    out.extend(check_link1(&a));
    Ok(out)
}

/// Formula-route checks from a profile alone (for instance an asserted
/// one). Reports carry the profile's taint.
pub fn check_maximal_ideal_profile(p: &CohomologyProfile) -> Result<Vec<TheoremReport>> {
    let text = serde_json::to_string(p).expect("profile serializes");
    let rep = Reporter {
        inputs: digest(&[&text]),
        tainted: p.is_tainted(),
        probabilistic: false,
    };
    core(&rep, p, None, None)
}

fn core(
    rep: &Reporter,
    pa: &CohomologyProfile,
    betti_a: Option<&BettiInvariants>,
    direct: Option<&Analysis>,
) -> Result<Vec<TheoremReport>> {
    let n = pa.n as i64;
    let pred = predict_rees_profile(pa)?;
    let pr = direct.map_or(&pred.profile, |d| &d.profile);
    let route = if direct.is_some() { "direct" } else { "formula" };
    let top = n + 1;
    let a_star_a = a_star_at(pa, top);
    let a_star_r = a_star_at(pr, top + 1);
    let reg_a = reg_at(pa, top);
    let reg_r = reg_at(pr, top + 1);
    let mut out = Vec::new();

    if let Some(d) = direct {
        for i in 0..=top {
            out.push(rep.eq(&format!("vanish3.a[{i}]"), pred.a.get(i as usize).copied().flatten(), d.profile.a(i)));
        }
        let (lo, hi) = pa.window;
        let mut bad = 0;
        for i in 0..=top {
            for x in lo.max(d.profile.window.0)..=hi.min(d.profile.window.1) {
                if pred.profile.dim(i, x) != d.profile.dim(i, x) {
                    bad += 1;
                }
            }
        }
        out.push(rep.eq("vanish3.dims", Some(bad), Some(0)).note("count of windowed mismatches"));
        out.push(rep.eq("depth", Some(pred.depth as i64), d.profile.depth().map(|x| x as i64)));
        let cm_direct = d.profile.depth() == d.profile.dimension();
        out.push(rep.eq("cm", Some(pred.cohen_macaulay as i64), Some(cm_direct as i64)));
    }
    out.push(rep.leq("depth.at-least", pa.depth().map(|x| x as i64), Some(pred.depth as i64)));

    out.push(rep.leq("a-invariant3.lower", add(a_star_a, -n), a_star_r).note(route));
    out.push(rep.leq("a-invariant3.upper", a_star_r, a_star_a).note(route));
    out.push(rep.implies_eq("a-invariant3.if", a_star_a != Some(-1), "a*(A) = -1", a_star_r, a_star_a));
    out.push(rep.implies(
        "a-invariant3.only-if",
        a_star_r == a_star_a,
        "a*(R) != a*(A)",
        a_star_a != Some(-1),
        a_star_r,
        a_star_a,
    ));

    out.push(rep.leq("regularity3.lower", reg_a, reg_r).note(route));
    out.push(rep.leq("regularity3.upper", reg_r, add(reg_a, 1)).note(route));
    let witness = |bound: i64| {
        (0..bound).any(|i| matches!(pa.a(i), Some(x) if x <= -2 && Some(x + i) == reg_at(pa, bound)))
    };
    let exists = (0..=top).any(|i| matches!(pa.a(i), Some(x) if x <= -2 && Some(x + i) == reg_a));
    out.push(rep.implies_eq("regularity3.if", exists, "no i with reg(A) = a_i + i, a_i <= -2", reg_r, add(reg_a, 1)));
    out.push(rep.implies(
        "regularity3.only-if",
        reg_a.is_some() && reg_r == add(reg_a, 1),
        "reg(R) != reg(A) + 1",
        exists,
        reg_r,
        add(reg_a, 1),
    ));

    for j in 0..=top {
        let ar = a_star_at(pr, j);
        let aj = a_star_at(pa, j);
        out.push(rep.leq(&format!("a-invariant2.lower[{j}]"), add(a_star_at(pa, j - n), -n), ar));
        out.push(rep.leq(&format!("a-invariant2.upper[{j}]"), ar, aj));
        let cond = aj >= Some(0) || (a_star_at(pa, j - 1) == aj && aj <= Some(-2));
        out.push(rep.implies_eq(&format!("a-invariant2.if[{j}]"), cond, "condition fails", ar, aj));
        out.push(rep.implies(&format!("a-invariant2.only-if[{j}]"), ar == aj, "a*_j(R) != a*_j(A)", cond, ar, aj));

        let rr = reg_at(pr, j);
        let rj = reg_at(pa, j);
        out.push(rep.leq(&format!("regularity2.lower[{j}]"), reg_at(pa, j - n), rr));
        out.push(rep.leq(&format!("regularity2.upper[{j}]"), rr, add(rj, 1)));
        if rj.is_some() {
            let cond = witness(j);
            out.push(rep.implies_eq(&format!("regularity2.if[{j}]"), cond, "no i < j", rr, add(rj, 1)));
            out.push(rep.implies(
                &format!("regularity2.only-if[{j}]"),
                rr == add(rj, 1),
                "reg_j(R) != reg_j(A) + 1",
                cond,
                rr,
                add(rj, 1),
            ));
        }
    }

    for i in 0..=top {
        let want = match pa.a(i) {
            Some(x) if x >= 0 => Some(x),
            _ => pa.top_at_most(i - 1, -2)?,
        };
        out.push(rep.eq(&format!("bound2[{i}]"), pr.a(i), want).note(route));
    }

    if let Some(b) = betti_a {
        out.push(sufficient(rep, b, n, reg_a, reg_r));
    }
    if let Some(d) = direct {
        let b_star_a = betti_a.and_then(|b| b.b_star_at(0));
        let b_star_r = d.betti_inv.b_star_at(0);
        out.push(rep.leq("b-star.lower", b_star_a, b_star_r));
        out.push(rep.leq("b-star.upper", b_star_r, add(b_star_a, n)));
        out.push(rep.implies_eq("b-star.if", b_star_a != Some(n - 1), "b*(A) = n - 1", b_star_r, add(b_star_a, n)));
        out.push(rep.implies(
            "b-star.only-if",
            b_star_r == add(b_star_a, n),
            "b*(R) != b*(A) + n",
            b_star_a != Some(n - 1),
            b_star_r,
            add(b_star_a, n),
        ));
    }
    Ok(out)
}

/// `reg(R) = reg(A) + 1` when `reg(A) = b_i - i` and `b_i <= n - 2` at an
/// extremal index `i`.
fn sufficient(rep: &Reporter, b: &BettiInvariants, n: i64, reg_a: Option<i64>, reg_r: Option<i64>) -> TheoremReport {
    let mut reasons = Vec::new();
    let mut hyp = false;
    for &i in &b.extremal {
        let bi = b.b[i];
        if bi.map(|x| x - i as i64) != reg_a {
            continue;
        }
        if bi <= Some(n - 2) {
            hyp = true;
        } else {
            reasons.push(format!("b_{i} = {} > n - 2 = {}", bi.unwrap(), n - 2));
        }
    }
    let reason = if reasons.is_empty() {
        "no extremal index attains reg(A)".to_string()
    } else {
        reasons.join(", ")
    };
    let r = rep.implies_eq("sufficient", hyp, &reason, reg_r, add(reg_a, 1));
    if !hyp && reg_r == add(reg_a, 1) {
        r.note("reg(R) = reg(A) + 1 holds without the hypothesis")
    } else {
        r
    }
}

/// `b*_j = a*_{n-j} + n` and `j-reg = reg_{n-j}` for `j = 0..=n`, Betti
/// side from the resolution and cohomology side from the Ext modules.
pub fn check_link1(a: &Analysis) -> Vec<TheoremReport> {
    let rep = Reporter {
        inputs: digest(&[&a.betti.to_string()]),
        tainted: false,
        probabilistic: false,
    };
    let n = a.n as i64;
    let mut out = Vec::new();
    for j in 0..=n {
        out.push(rep.eq(
            &format!("link1.b-star[{j}]"),
            a.betti_inv.b_star_at(j),
            add(a_star_at(&a.profile, n - j), n),
        ));
        out.push(rep.eq(&format!("link1.j-reg[{j}]"), a.betti_inv.j_reg_at(j), reg_at(&a.profile, n - j)));
    }
    out
}

/// `reg(R_s)` for the Rees algebra of `A[z_1..z_s]`: `reg(A)` for `s < c`
/// and `reg(A) + 1` for `s >= c`, where `c = max{0, a_i + 2}` and `i` is
/// the largest index with `reg(A) = a_i + i`. Compared against the
/// regularity obtained from the extension and Rees transfer formulas.
pub fn check_rs_corollary(p: &CohomologyProfile, s: usize) -> Result<TheoremReport> {
    let text = serde_json::to_string(p).expect("profile serializes");
    let rep = Reporter {
        inputs: digest(&[&text, &s.to_string()]),
        tainted: p.is_tainted(),
        probabilistic: false,
    };
    let top = p.indices.len() as i64 - 1;
    let Some(reg) = reg_at(p, top) else {
        return Ok(rep.not_applicable("rs-corollary", "zero module"));
    };
    let i = (0..=top).rev().find(|&i| p.a(i).map(|a| a + i) == Some(reg)).unwrap();
    let c = (p.a(i).unwrap() + 2).max(0);
    let predicted = if (s as i64) < c { reg } else { reg + 1 };
    let t = extension_shift(p, s)?;
    let pr = predict_rees_profile(&t)?;
    Ok(rep
        .eq(&format!("rs-corollary[s={s}]"), pr.reg, Some(predicted))
        .note(format!("i = {i}, c = {c}")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;
    use crate::poly::Ring;
    use crate::resolution::Presentation;

    #[test]
    fn polynomial_ring_two_variables() {
        let r = Ring::revlex(2);
        let j = Ideal::zero(r.field, &r.order);
        let reps = check_maximal_ideal_theorems(&j, MaxIdealOptions::default()).unwrap();
        let failed: Vec<_> = reps.iter().filter(|x| x.fails()).collect();
        assert!(failed.is_empty(), "{failed:#?}");
        let up = reps.iter().find(|x| x.theorem == "regularity3.upper").unwrap();
        assert_eq!((up.left.0, up.right.0), (Some(1), Some(1)));
    }

    #[test]
    fn rs_corollary_for_small_rings() {
        let k = crate::cohomology::cohomology_profile(&Presentation::free(Field::Rational, 0, vec![0]), (-8, 3)).unwrap();
        for s in 0..4 {
            assert!(check_rs_corollary(&k, s).unwrap().holds());
        }
        let line = crate::cohomology::cohomology_profile(&Presentation::free(Field::Rational, 1, vec![0]), (-8, 3)).unwrap();
        let r0 = check_rs_corollary(&line, 0).unwrap();
        assert_eq!(r0.right.0, Some(0));
        let r1 = check_rs_corollary(&line, 1).unwrap();
        assert_eq!(r1.right.0, Some(1));
        assert!(r0.holds() && r1.holds());
    }
}
