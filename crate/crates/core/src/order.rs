//! Term orders on monomials and the induced orders on free modules.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use crate::error::{AlgebraError, Result};
use crate::monomial::Monomial;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum OrderKind {
    /// Graded reverse lexicographic.
    RevLex,
    Lex,
    /// Eliminates the first `k` variables in priority order: compares the
    /// degree in that block, then revlex inside it, then graded revlex on
    /// the remaining variables.
    BlockElimination(usize),
    /// Weighted degree (indexed by variable), ties broken by graded revlex.
    Weighted(Vec<i64>),
}

#[derive(PartialEq, Eq, Hash, Debug)]
struct OrderData {
    kind: OrderKind,
    nvars: usize,
    /// `priority[r]` is the variable of rank `r`; rank 0 is the largest.
    priority: Vec<usize>,
}

/// A total multiplicative order on the monomials of a fixed ring.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct TermOrder {
    inner: Arc<OrderData>,
}

impl TermOrder {
    pub fn new(kind: OrderKind, nvars: usize) -> Result<TermOrder> {
        TermOrder::with_priority(kind, (0..nvars).collect())
    }

    pub fn revlex(nvars: usize) -> TermOrder {
        TermOrder::new(OrderKind::RevLex, nvars).unwrap()
    }

    pub fn lex(nvars: usize) -> TermOrder {
        TermOrder::new(OrderKind::Lex, nvars).unwrap()
    }

    pub fn elimination(nvars: usize, k: usize) -> Result<TermOrder> {
        TermOrder::new(OrderKind::BlockElimination(k), nvars)
    }

    /// Builds an order with an explicit variable ranking. `priority` must be
    /// a permutation of `0..nvars`.
    pub fn with_priority(kind: OrderKind, priority: Vec<usize>) -> Result<TermOrder> {
        let nvars = priority.len();
        let mut seen = vec![false; nvars];
        for &v in &priority {
            if v >= nvars || seen[v] {
                return Err(AlgebraError::InvalidArgument(format!(
                    "variable priority {priority:?} is not a permutation"
                )));
            }
            seen[v] = true;
        }
        match &kind {
            OrderKind::BlockElimination(k) if *k > nvars => {
                return Err(AlgebraError::InvalidArgument(format!(
                    "elimination block {k} exceeds {nvars} variables"
                )))
            }
            OrderKind::Weighted(w) if w.len() != nvars => {
                return Err(AlgebraError::InvalidArgument(format!(
                    "{} weights for {nvars} variables",
                    w.len()
                )))
            }
            OrderKind::Weighted(w) if w.iter().any(|&x| x <= 0) => {
                return Err(AlgebraError::InvalidArgument(
                    "weights must be positive".into(),
                ))
            }
            _ => {}
        }
        Ok(TermOrder {
            inner: Arc::new(OrderData {
                kind,
                nvars,
                priority,
            }),
        })
    }

    /// Parses `revlex`, `lex` or `elim:<k>`.
    pub fn parse(s: &str, nvars: usize) -> Result<TermOrder> {
        match s.trim() {
            "revlex" | "grevlex" => Ok(TermOrder::revlex(nvars)),
            "lex" => Ok(TermOrder::lex(nvars)),
            other => {
                if let Some(k) = other.strip_prefix("elim:") {
                    let k = k.parse().map_err(|_| {
                        AlgebraError::InvalidArgument(format!("bad elimination block in {other:?}"))
                    })?;
                    TermOrder::elimination(nvars, k)
                } else {
                    Err(AlgebraError::InvalidArgument(format!("unknown order {other:?}")))
                }
            }
        }
    }

    pub fn kind(&self) -> &OrderKind {
        &self.inner.kind
    }

    pub fn nvars(&self) -> usize {
        self.inner.nvars
    }

    pub fn priority(&self) -> &[usize] {
        &self.inner.priority
    }

    pub fn is_graded(&self) -> bool {
        matches!(self.inner.kind, OrderKind::RevLex)
    }

    /// Same kind and priority on a ring with `nvars` variables, with the
    /// priority extended (or truncated) to the identity on new variables.
    pub fn resized(&self, nvars: usize) -> TermOrder {
        let mut priority: Vec<usize> = self.priority().iter().copied().filter(|&v| v < nvars).collect();
        priority.extend(self.nvars()..nvars);
        let kind = match &self.inner.kind {
            OrderKind::Weighted(w) => {
                let mut w = w.clone();
                w.resize(nvars, 1);
                OrderKind::Weighted(w)
            }
            OrderKind::BlockElimination(k) => OrderKind::BlockElimination((*k).min(nvars)),
            k => k.clone(),
        };
        TermOrder::with_priority(kind, priority).expect("resized priority is a permutation")
    }

    pub fn checked_compare(&self, u: &Monomial, v: &Monomial) -> Result<Ordering> {
        if u.nvars() != self.nvars() || v.nvars() != self.nvars() {
            return Err(AlgebraError::AmbientMismatch(format!(
                "comparing monomials in {} and {} variables under an order on {}",
                u.nvars(),
                v.nvars(),
                self.nvars()
            )));
        }
        Ok(self.compare(u, v))
    }

    pub fn compare(&self, u: &Monomial, v: &Monomial) -> Ordering {
        let p = &self.inner.priority;
        let (a, b) = (u.exps(), v.exps());
        match &self.inner.kind {
            OrderKind::RevLex => {
                u.degree().cmp(&v.degree()).then_with(|| revlex_tail(p, a, b))
            }
            OrderKind::Lex => {
                for &var in p {
                    match a[var].cmp(&b[var]) {
                        Ordering::Equal => continue,
                        o => return o,
                    }
                }
                Ordering::Equal
            }
            OrderKind::BlockElimination(k) => {
                let (head, tail) = p.split_at(*k);
                let dh = |e: &[u16]| head.iter().map(|&i| e[i] as u32).sum::<u32>();
                let dt = |e: &[u16]| tail.iter().map(|&i| e[i] as u32).sum::<u32>();
                dh(a)
                    .cmp(&dh(b))
                    .then_with(|| revlex_tail(head, a, b))
                    .then_with(|| dt(a).cmp(&dt(b)))
                    .then_with(|| revlex_tail(tail, a, b))
            }
            OrderKind::Weighted(w) => u
                .weighted_degree(w)
                .cmp(&v.weighted_degree(w))
                .then_with(|| u.degree().cmp(&v.degree()))
                .then_with(|| revlex_tail(p, a, b)),
        }
    }

    pub fn descriptor(&self) -> String {
        let kind = match &self.inner.kind {
            OrderKind::RevLex => "revlex".to_string(),
            OrderKind::Lex => "lex".to_string(),
            OrderKind::BlockElimination(k) => format!("elim:{k}"),
            OrderKind::Weighted(w) => format!("weighted:{w:?}"),
        };
        let identity = self.priority().iter().enumerate().all(|(i, &v)| i == v);
        if identity {
            kind
        } else {
            format!("{kind}/{:?}", self.priority())
        }
    }
}

impl fmt::Display for TermOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.descriptor())
    }
}

/// Revlex comparison of equal-degree exponent vectors restricted to the
/// ranked variables `vars`: the last nonzero difference decides, and a
/// negative difference means `a` is larger.
fn revlex_tail(vars: &[usize], a: &[u16], b: &[u16]) -> Ordering {
    for &var in vars.iter().rev() {
        match a[var].cmp(&b[var]) {
            Ordering::Equal => continue,
            Ordering::Less => return Ordering::Greater,
            Ordering::Greater => return Ordering::Less,
        }
    }
    Ordering::Equal
}

/// One basis element of a Schreyer frame: its image's leading monomial
/// pushed all the way down to the root module, the root component, and the
/// basis indices along the way (own index last).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FrameEntry {
    pub mon: Monomial,
    pub root: u32,
    pub chain: Vec<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SchreyerFrame {
    root: ModuleOrder,
    entries: Vec<FrameEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ModuleScheme {
    PositionOverTerm,
    /// Compares `deg m + twists[c]` first, then the base order, then the
    /// position.
    TermOverPosition { twists: Arc<Vec<i64>> },
    Schreyer(Arc<SchreyerFrame>),
}

/// Order on terms `m * e_c` of a free module. Among basis elements a smaller
/// index is larger.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ModuleOrder {
    base: TermOrder,
    scheme: ModuleScheme,
}

impl ModuleOrder {
    pub fn position_over_term(base: TermOrder) -> ModuleOrder {
        ModuleOrder {
            base,
            scheme: ModuleScheme::PositionOverTerm,
        }
    }

    pub fn term_over_position(base: TermOrder, twists: Vec<i64>) -> ModuleOrder {
        ModuleOrder {
            base,
            scheme: ModuleScheme::TermOverPosition {
                twists: Arc::new(twists),
            },
        }
    }

    pub fn base(&self) -> &TermOrder {
        &self.base
    }

    pub fn scheme(&self) -> &ModuleScheme {
        &self.scheme
    }

    /// The Schreyer order induced on a free module whose basis maps to
    /// elements with leading terms `leads[j] = (m_j, c_j)` in a module
    /// ordered by `self`. The leads are captured by value.
    pub fn schreyer(&self, leads: &[(Monomial, u32)]) -> ModuleOrder {
        let entries = leads
            .iter()
            .enumerate()
            .map(|(j, (m, c))| match &self.scheme {
                ModuleScheme::Schreyer(frame) => {
                    let parent = &frame.entries[*c as usize];
                    let mut chain = parent.chain.clone();
                    chain.push(j as u32);
                    FrameEntry {
                        mon: m.mul(&parent.mon),
                        root: parent.root,
                        chain,
                    }
                }
                _ => FrameEntry {
                    mon: m.clone(),
                    root: *c,
                    chain: vec![j as u32],
                },
            })
            .collect();
        let root = match &self.scheme {
            ModuleScheme::Schreyer(frame) => frame.root.clone(),
            _ => self.clone(),
        };
        ModuleOrder {
            base: self.base.clone(),
            scheme: ModuleScheme::Schreyer(Arc::new(SchreyerFrame { root, entries })),
        }
    }

    pub fn compare(&self, m1: &Monomial, c1: u32, m2: &Monomial, c2: u32) -> Ordering {
        match &self.scheme {
            ModuleScheme::PositionOverTerm => c2.cmp(&c1).then_with(|| self.base.compare(m1, m2)),
            ModuleScheme::TermOverPosition { twists } => {
                let d1 = m1.degree() as i64 + twists[c1 as usize];
                let d2 = m2.degree() as i64 + twists[c2 as usize];
                d1.cmp(&d2)
                    .then_with(|| self.base.compare(m1, m2))
                    .then_with(|| c2.cmp(&c1))
            }
            ModuleScheme::Schreyer(frame) => {
                let e1 = &frame.entries[c1 as usize];
                let e2 = &frame.entries[c2 as usize];
                let big1 = m1.mul(&e1.mon);
                let big2 = m2.mul(&e2.mon);
                frame
                    .root
                    .compare(&big1, e1.root, &big2, e2.root)
                    .then_with(|| {
                        for (a, b) in e1.chain.iter().zip(&e2.chain) {
                            match b.cmp(a) {
                                Ordering::Equal => continue,
                                o => return o,
                            }
                        }
                        Ordering::Equal
                    })
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u16]) -> Monomial {
        Monomial::from_exps(e)
    }

    #[test]
    fn revlex_examples() {
        let o = TermOrder::revlex(6);
        // x1*y2 vs x3*y3 in x1 x2 x3 y1 y2 y3
        assert_eq!(o.compare(&m(&[1, 0, 0, 0, 1, 0]), &m(&[0, 0, 1, 0, 0, 1])), Ordering::Greater);
        assert_eq!(o.compare(&m(&[1, 0, 0, 0, 0, 0]), &m(&[1, 0, 0, 0, 0, 0])), Ordering::Equal);
        // x1^2 vs x2*y1
        assert_eq!(o.compare(&m(&[2, 0, 0, 0, 0, 0]), &m(&[0, 1, 0, 1, 0, 0])), Ordering::Greater);
    }

    #[test]
    fn revlex_differs_from_lex() {
        let rl = TermOrder::revlex(3);
        let lx = TermOrder::lex(3);
        // x1*x3 vs x2^2
        let a = m(&[1, 0, 1]);
        let b = m(&[0, 2, 0]);
        assert_eq!(rl.compare(&a, &b), Ordering::Less);
        assert_eq!(lx.compare(&a, &b), Ordering::Greater);
    }

    #[test]
    fn priority_permutes_variables() {
        let o = TermOrder::with_priority(OrderKind::Lex, vec![2, 0, 1]).unwrap();
        assert_eq!(o.compare(&m(&[0, 0, 1]), &m(&[5, 0, 0])), Ordering::Greater);
        assert!(TermOrder::with_priority(OrderKind::Lex, vec![0, 0, 1]).is_err());
    }

    #[test]
    fn elimination_block() {
        let o = TermOrder::elimination(3, 1).unwrap();
        assert_eq!(o.compare(&m(&[1, 0, 0]), &m(&[0, 5, 5])), Ordering::Greater);
        assert_eq!(o.compare(&m(&[0, 2, 0]), &m(&[0, 1, 1])), Ordering::Greater);
    }

    #[test]
    fn parse_orders() {
        assert_eq!(TermOrder::parse("elim:2", 4).unwrap().kind(), &OrderKind::BlockElimination(2));
        assert!(TermOrder::parse("elim:9", 4).is_err());
        assert!(TermOrder::parse("deglex", 4).is_err());
    }

    #[test]
    fn schreyer_breaks_ties_by_chain() {
        let base = TermOrder::revlex(2);
        let root = ModuleOrder::position_over_term(base);
        let lvl1 = root.schreyer(&[(m(&[1, 0]), 0), (m(&[0, 1]), 0)]);
        // y*e0 and x*e1 both map to x*y at the root; e0 is larger.
        assert_eq!(lvl1.compare(&m(&[0, 1]), 0, &m(&[1, 0]), 1), Ordering::Greater);
        assert_eq!(lvl1.compare(&m(&[1, 0]), 0, &m(&[1, 0]), 1), Ordering::Greater);
    }
}
