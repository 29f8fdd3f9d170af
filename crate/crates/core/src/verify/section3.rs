//! Bounds for `R = A[It]` with `I` generated by forms of one degree.

use crate::cohomology::{a_star_at, is_regular_form, reg_at};
use crate::error::{AlgebraError, Result};
use crate::groebner::Ideal;
use crate::linalg::{rank, ColumnIndex, SparseRow};
use crate::poly::Polynomial;
use crate::rees::{assoc_graded, rees_ideal_elimination};

use super::report::{add, Reporter, TheoremReport};
use super::{analyze, ideal_digest};

fn minimally_generates(j: &Ideal, forms: &[Polynomial]) -> bool {
    let gb = j.groebner();
    let mut cols = ColumnIndex::new();
    let rows: Vec<SparseRow> = forms
        .iter()
        .map(|f| {
            gb.normal_form(&f.with_order(j.order()))
                .terms()
                .iter()
                .map(|(c, m)| (cols.index(m), c.clone()))
                .collect()
        })
        .collect();
    rank(j.field(), rows) == forms.len()
}

fn is_regular_sequence(j: &Ideal, forms: &[Polynomial]) -> Result<bool> {
    let mut cur = j.clone();
    for f in forms {
        let f = f.with_order(j.order());
        if !is_regular_form(&cur, &f)? {
            return Ok(false);
        }
        let mut gens = cur.generators().to_vec();
        gens.push(f);
        cur = cur.with_generators(gens)?;
    }
    Ok(true)
}

/// Reports for `A = B/J` and `I = (forms)`, all of one degree `c` and
/// minimally generating `I`:
///
/// * `a*(A) - s <= a*(R) <= max{a*(A), a*(G)}`
/// * `reg(A) <= reg(R) <= max{reg(A) + 1, reg(G)}`
/// * `a_i(R) <= max{a_{i-1}(A), a_i(G)}` and `b_i(R) >= b_i(A)`
/// * for a regular sequence, the upper bounds `a*(A) + s(c-1)` and
///   `max{reg(A) + 1, reg(A) + s(c-1)}`.
pub fn check_section3(j: &Ideal, forms: &[Polynomial]) -> Result<Vec<TheoremReport>> {
    j.require_homogeneous()?;
    let rp = rees_ideal_elimination(j, forms)?;
    if !minimally_generates(j, forms) {
        return Err(AlgebraError::InvalidArgument("forms do not minimally generate I".into()));
    }
    let s = forms.len() as i64;
    let c = forms[0].degree().unwrap() as i64;
    let names = j.names().to_vec();
    let form_text: Vec<String> = forms.iter().map(|f| f.to_string_with(&names)).collect();
    let joined = form_text.join(", ");
    let rep = Reporter {
        inputs: ideal_digest(j, &[&joined]),
        tainted: false,
        probabilistic: false,
    };

    let a = analyze(j)?;
    let r = analyze(rp.ideal())?;
    let g = analyze(&assoc_graded(&rp)?)?;

    let (pa, pr, pg) = (&a.profile, &r.profile, &g.profile);
    let top = (rp.ideal().nvars() + 1) as i64;
    let a_star = |p| a_star_at(p, top);
    let reg = |p| reg_at(p, top);

    let mut out = Vec::new();
    let attained = |rep: TheoremReport| {
        if rep.left == rep.right {
            rep.note("attained")
        } else {
            rep
        }
    };
    out.push(attained(rep.leq("a-invariant1.lower", add(a_star(pa), -s), a_star(pr))));
    out.push(attained(rep.leq("a-invariant1.upper", a_star(pr), a_star(pa).max(a_star(pg)))));
    out.push(attained(rep.leq("regularity1.lower", reg(pa), reg(pr))));
    out.push(attained(rep.leq("regularity1.upper", reg(pr), add(reg(pa), 1).max(reg(pg)))));
    for i in 0..=top {
        out.push(rep.leq(&format!("bound1[{i}]"), pr.a(i), pa.a(i - 1).max(pg.a(i))));
    }
    let pd = r.betti.pd().unwrap_or(0).max(a.betti.pd().unwrap_or(0)) as i64;
    for i in 0..=pd {
        out.push(rep.leq(&format!("shift[{i}]"), a.betti.b(i), r.betti.b(i)));
    }
    if is_regular_sequence(j, forms)? {
        let bump = s * (c - 1);
        out.push(attained(rep.leq("regular-sequence.a-invariant.upper", a_star(pr), add(a_star(pa), bump))));
        out.push(attained(rep.leq(
            "regular-sequence.regularity.upper",
            reg(pr),
            add(reg(pa), 1).max(add(reg(pa), bump)),
        )));
    } else {
        out.push(rep.not_applicable("regular-sequence", "forms are not a regular sequence"));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Ring;

    #[test]
    fn maximal_ideal_of_a_line() {
        let r = Ring::revlex(1);
        let j = Ideal::zero(r.field, &r.order);
        let reps = check_section3(&j, &[r.var(0)]).unwrap();
        assert!(reps.iter().all(|x| !x.fails()), "{reps:#?}");
        let lower = reps.iter().find(|x| x.theorem == "a-invariant1.lower").unwrap();
        assert_eq!((lower.left.0, lower.right.0), (Some(-2), Some(-2)));
    }

    #[test]
    fn redundant_forms_rejected() {
        let r = Ring::revlex(2);
        let j = Ideal::zero(r.field, &r.order);
        let f = r.var(0);
        assert!(check_section3(&j, &[f.clone(), f]).is_err());
    }
}
