//! Generating functions `G_Gamma` and `Ĝ_Gamma` over admissible subsets,
//! valued in `Z[q, q^-1][P][W_af]`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::alcove::{enumerate_admissible, is_cancellation_free, LambdaChain};
use crate::error::{Error, Result};
use crate::poly::Laurent;
use crate::rootsys::{Coroot, RootSystem, Weight, Weyl};

/// `w t_xi`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct AffineWeylElt {
    pub w: Weyl,
    pub xi: Coroot,
}

impl AffineWeylElt {
    pub fn new(w: Weyl, xi: Coroot) -> Self {
        AffineWeylElt { w, xi }
    }

    pub fn finite(rs: &RootSystem, w: Weyl) -> Self {
        AffineWeylElt {
            w,
            xi: Coroot::zero(rs.rank()),
        }
    }

    /// `x t_zeta`.
    pub fn translated(&self, zeta: &Coroot) -> Self {
        AffineWeylElt {
            w: self.w,
            xi: &self.xi + zeta,
        }
    }
}

/// A finite sum of `c(q) e^mu x`.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct GenFun {
    terms: BTreeMap<(Weight, AffineWeylElt), Laurent>,
}

impl GenFun {
    pub fn zero() -> Self {
        GenFun::default()
    }

    /// `1 * x`.
    pub fn basis(rs: &RootSystem, x: AffineWeylElt) -> Self {
        let mut f = GenFun::zero();
        f.add_term(Weight::zero(rs.rank()), x, &Laurent::monomial(0, 1));
        f
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, mu: Weight, x: AffineWeylElt, c: &Laurent) {
        let key = (mu, x);
        let e = self.terms.entry(key.clone()).or_default();
        *e += c;
        if e.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Weight, &AffineWeylElt, &Laurent)> {
        self.terms.iter().map(|((m, x), c)| (m, x, c))
    }

    pub fn coeff(&self, mu: &Weight, x: &AffineWeylElt) -> Laurent {
        self.terms
            .get(&(mu.clone(), x.clone()))
            .cloned()
            .unwrap_or_default()
    }

    /// Right multiplication by `t_zeta`.
    pub fn translated(&self, zeta: &Coroot) -> Self {
        let mut f = GenFun::zero();
        for (m, x, c) in self.terms() {
            f.add_term(m.clone(), x.translated(zeta), c);
        }
        f
    }

    /// Multiplication by `c q^e`.
    pub fn scaled(&self, c: i64, e: i64) -> Self {
        let mut f = GenFun::zero();
        for (m, x, l) in self.terms() {
            f.add_term(m.clone(), x.clone(), &l.scaled(c).shifted(e));
        }
        f
    }

    /// Drops every term with `q`-exponent below `floor`.
    pub fn truncated(&self, floor: i64) -> Self {
        let mut f = GenFun::zero();
        for (m, x, c) in self.terms() {
            f.add_term(m.clone(), x.clone(), &c.truncated(floor));
        }
        f
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.values().filter_map(Laurent::max_exp).max()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.values().filter_map(Laurent::min_exp).min()
    }
}

impl core::ops::AddAssign<&GenFun> for GenFun {
    fn add_assign(&mut self, o: &GenFun) {
        for ((m, x), c) in &o.terms {
            self.add_term(m.clone(), x.clone(), c);
        }
    }
}

impl core::ops::Sub for &GenFun {
    type Output = GenFun;
    fn sub(self, o: &GenFun) -> GenFun {
        let mut f = self.clone();
        f += &o.scaled(-1, 0);
        f
    }
}

/// `G_Gamma(x) = sum_A (-1)^{n(A)} q^{-height(A) - <lambda, xi>} e^{wt(A)} ed(A) t_{xi + down(A)}`.
pub fn genfun(rs: &RootSystem, chain: &LambdaChain, x: &AffineWeylElt) -> GenFun {
    let shift = -rs.pair(chain.lambda(), &x.xi);
    let mut f = GenFun::zero();
    for a in enumerate_admissible(rs, x.w, chain) {
        let c = Laurent::monomial(shift - a.height(), a.sign());
        f.add_term(
            a.wt().clone(),
            AffineWeylElt::new(a.ed(), &x.xi + a.down()),
            &c,
        );
    }
    f
}

fn extend_with(f: &GenFun, mut apply: impl FnMut(&AffineWeylElt, &Laurent) -> GenFun) -> GenFun {
    let mut out = GenFun::zero();
    for (mu, x, c) in f.terms() {
        for (nu, y, d) in apply(x, c).terms() {
            out.add_term(mu + nu, y.clone(), d);
        }
    }
    out
}

/// `G_Gamma` extended linearly over `Z[q, q^-1][P]`.
pub fn genfun_extend(rs: &RootSystem, chain: &LambdaChain, f: &GenFun) -> GenFun {
    extend_with(f, |x, c| {
        let g = genfun(rs, chain, x);
        let mut out = GenFun::zero();
        for (m, y, d) in g.terms() {
            out.add_term(m.clone(), y.clone(), &(d * c));
        }
        out
    })
}

/// `G_{outer} o G_{inner}(x)`.
pub fn compose(
    rs: &RootSystem,
    outer: &LambdaChain,
    inner: &LambdaChain,
    x: &AffineWeylElt,
) -> GenFun {
    genfun_extend(rs, outer, &genfun(rs, inner, x))
}

/// A tuple of partitions indexed by the simple roots.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct ParTuple(pub Vec<Vec<u32>>);

impl ParTuple {
    pub fn empty(rank: usize) -> Self {
        ParTuple(vec![Vec::new(); rank])
    }

    /// `|chi|`.
    pub fn size(&self) -> i64 {
        self.0.iter().flatten().map(|&p| p as i64).sum()
    }

    /// `iota(chi) = sum_i chi^(i)_1 alpha_i^vee`.
    pub fn iota(&self) -> Coroot {
        Coroot(
            self.0
                .iter()
                .map(|p| p.first().copied().unwrap_or(0) as i64)
                .collect(),
        )
    }

    /// Whether this lies in `Par(lambda)`.
    pub fn fits(&self, lambda: &Weight) -> bool {
        self.0.len() == lambda.0.len()
            && self.0.iter().zip(&lambda.0).all(|(p, &m)| {
                p.len() as i64 <= m.max(0)
                    && p.windows(2).all(|w| w[0] >= w[1])
                    && p.iter().all(|&x| x > 0)
            })
    }
}

fn partitions_into(
    n: u32,
    max_len: usize,
    max_part: u32,
    out: &mut Vec<Vec<u32>>,
    cur: &mut Vec<u32>,
) {
    if n == 0 {
        out.push(cur.clone());
        return;
    }
    if cur.len() == max_len {
        return;
    }
    for p in (1..=max_part.min(n)).rev() {
        cur.push(p);
        partitions_into(n - p, max_len, p, out, cur);
        cur.pop();
    }
}

/// All partitions of length at most `max_len` and size at most `bound`.
fn partitions_up_to(bound: u32, max_len: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    for n in 0..=bound {
        if n > 0 && max_len == 0 {
            break;
        }
        partitions_into(n, max_len, n, &mut out, &mut Vec::new());
    }
    out
}

/// Every `chi` in `Par(lambda)` with `|chi| <= bound`.
pub fn par_enumerate(lambda: &Weight, bound: i64) -> Vec<ParTuple> {
    let bound = bound.max(-1);
    if bound < 0 {
        return Vec::new();
    }
    let per: Vec<Vec<Vec<u32>>> = lambda
        .0
        .iter()
        .map(|&m| partitions_up_to(bound as u32, m.max(0) as usize))
        .collect();
    let mut out = vec![ParTuple(Vec::new())];
    for choices in &per {
        let mut next = Vec::new();
        for t in &out {
            let used = t.size();
            for p in choices {
                let s: i64 = p.iter().map(|&x| x as i64).sum();
                if used + s <= bound {
                    let mut u = t.clone();
                    u.0.push(p.clone());
                    next.push(u);
                }
            }
        }
        out = next;
    }
    out.sort_by(|a, b| a.size().cmp(&b.size()).then_with(|| a.cmp(b)));
    out
}

/// `psi * omega`: per simple root, a rectangle of `m_i(nu)` rows of length
/// `psi_1`, with `omega` attached on the right and `psi` below.
pub fn par_concat(psi: &ParTuple, omega: &ParTuple, mu: &Weight, nu: &Weight) -> Result<ParTuple> {
    if !is_cancellation_free(&[mu.clone(), nu.clone()]) {
        return Err(Error::Domain(format!(
            "{:?} + {:?} is not cancellation free",
            mu.0, nu.0
        )));
    }
    if !psi.fits(mu) || !omega.fits(nu) {
        return Err(Error::Domain("partition tuple does not lie in Par".into()));
    }
    let mut chi = Vec::with_capacity(mu.0.len());
    for i in 0..mu.0.len() {
        let (p, o) = (&psi.0[i], &omega.0[i]);
        let m2 = nu.0[i].max(0) as usize;
        let p1 = p.first().copied().unwrap_or(0);
        let mut rows: Vec<u32> = (0..m2)
            .map(|j| p1 + o.get(j).copied().unwrap_or(0))
            .collect();
        rows.extend(p.iter().copied());
        rows.retain(|&r| r > 0);
        chi.push(rows);
    }
    Ok(ParTuple(chi))
}

/// `Ĝ_Gamma(x) = sum_chi q^{-|chi|} G_Gamma(x) t_{iota(chi)}`, keeping only
/// exponents `>= floor`.
pub fn ghat(rs: &RootSystem, chain: &LambdaChain, x: &AffineWeylElt, floor: i64) -> GenFun {
    let g = genfun(rs, chain, x);
    let Some(top) = g.max_exp() else {
        return g;
    };
    let mut out = GenFun::zero();
    for chi in par_enumerate(chain.lambda(), top - floor) {
        out += &g.translated(&chi.iota()).scaled(1, -chi.size());
    }
    out.truncated(floor)
}

/// `Ĝ_Gamma` extended linearly, exact above `floor` on the exact part of `f`.
pub fn ghat_extend(rs: &RootSystem, chain: &LambdaChain, f: &GenFun, floor: i64) -> GenFun {
    let out = extend_with(f, |x, c| {
        let mut acc = GenFun::zero();
        for (e, k) in c.terms() {
            acc += &ghat(rs, chain, x, floor - e).scaled(k, e);
        }
        acc
    });
    out.truncated(floor)
}

/// Largest `q`-exponent `G_chain` can add to a term `y t_zeta`, over all `y`
/// and all `zeta = xi + down(A)`, `A` admissible for `inner`.
fn max_raise(rs: &RootSystem, chain: &LambdaChain, inner: &LambdaChain, x: &AffineWeylElt) -> i64 {
    let mut hmax = 0;
    for v in rs.weyl_elements() {
        for b in enumerate_admissible(rs, v, chain) {
            hmax = hmax.max(-b.height());
        }
    }
    let worst = enumerate_admissible(rs, x.w, inner)
        .iter()
        .map(|a| -rs.pair(chain.lambda(), &(&x.xi + a.down())))
        .max()
        .unwrap_or(0);
    hmax + worst
}

/// `Ĝ_{outer} o Ĝ_{inner}(x)` above `floor`; the weights must be
/// cancellation free so that partition translations only lower exponents.
pub fn compose_ghat(
    rs: &RootSystem,
    outer: &LambdaChain,
    inner: &LambdaChain,
    x: &AffineWeylElt,
    floor: i64,
) -> Result<GenFun> {
    if !is_cancellation_free(&[inner.lambda().clone(), outer.lambda().clone()]) {
        return Err(Error::Domain(format!(
            "{:?} + {:?} is not cancellation free",
            inner.lambda().0,
            outer.lambda().0
        )));
    }
    let lowered = floor - max_raise(rs, outer, inner, x).max(0);
    let first = ghat(rs, inner, x, lowered);
    Ok(ghat_extend(rs, outer, &first, floor))
}

/// Equality, optionally only of terms with exponent `>= floor`.
pub fn genfun_equal(f: &GenFun, g: &GenFun, floor: Option<i64>) -> bool {
    match floor {
        None => f == g,
        Some(e) => f.truncated(e) == g.truncated(e),
    }
}

/// `sum_{A in A(e, Gamma)} q^{height(A)} e^{wt(A)}`, keyed by weight.
pub fn height_character(rs: &RootSystem, chain: &LambdaChain) -> BTreeMap<Weight, Laurent> {
    let mut out: BTreeMap<Weight, Laurent> = BTreeMap::new();
    for a in enumerate_admissible(rs, Weyl::IDENTITY, chain) {
        let e = out.entry(a.wt().clone()).or_default();
        e.add_term(a.height(), 1);
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// Whether a weight-indexed family is invariant under the simple reflections.
pub fn is_w_invariant(rs: &RootSystem, f: &BTreeMap<Weight, Laurent>) -> bool {
    (0..rs.rank()).all(|i| {
        let a = rs.simple_root(i);
        f.iter()
            .all(|(mu, c)| f.get(&rs.reflect_weight(mu, a)) == Some(c))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alcove::{compute_levels, lex_chain};

    #[test]
    fn empty_chain() {
        let rs = RootSystem::new("A2", 2).unwrap();
        let g = lex_chain(&rs, &Weight(vec![0, 0])).unwrap();
        let x = AffineWeylElt::new(rs.simple_reflection(0), Coroot(vec![1, 0]));
        assert_eq!(genfun(&rs, &g, &x), GenFun::basis(&rs, x.clone()));
        assert_eq!(ghat(&rs, &g, &x, -5), GenFun::basis(&rs, x));
    }

    #[test]
    fn a1_examples() {
        let rs = RootSystem::new("A1", 1).unwrap();
        let a = rs.simple_root(0);
        let g = compute_levels(&rs, &[a], &Weight(vec![1])).unwrap();
        let s1 = rs.simple_reflection(0);
        let e = AffineWeylElt::finite(&rs, Weyl::IDENTITY);
        let mut want = GenFun::zero();
        want.add_term(Weight(vec![1]), e.clone(), &Laurent::monomial(0, 1));
        want.add_term(
            Weight(vec![-1]),
            AffineWeylElt::finite(&rs, s1),
            &Laurent::monomial(0, 1),
        );
        assert_eq!(genfun(&rs, &g, &e), want);

        let mut want = GenFun::zero();
        want.add_term(
            Weight(vec![-1]),
            AffineWeylElt::finite(&rs, s1),
            &Laurent::monomial(0, 1),
        );
        want.add_term(
            Weight(vec![1]),
            AffineWeylElt::new(Weyl::IDENTITY, Coroot(vec![1])),
            &Laurent::monomial(-1, 1),
        );
        assert_eq!(genfun(&rs, &g, &AffineWeylElt::finite(&rs, s1)), want);

        let gh = ghat(&rs, &g, &e, -3);
        let base = genfun(&rs, &g, &e);
        let mut want = GenFun::zero();
        for k in 0..=3 {
            want += &base.translated(&Coroot(vec![k])).scaled(1, -k);
        }
        assert_eq!(gh, want.truncated(-3));
    }

    #[test]
    fn partitions() {
        assert_eq!(
            par_enumerate(&Weight(vec![-1, 0]), 5),
            vec![ParTuple(vec![vec![], vec![]])]
        );
        let p = par_enumerate(&Weight(vec![1, 0]), 2);
        assert_eq!(p.len(), 3);
        assert_eq!(
            p.iter().map(ParTuple::size).collect::<Vec<_>>(),
            vec![0, 1, 2]
        );
        assert_eq!(p[2].iota(), Coroot(vec![2, 0]));
        // Partitions of at most 4 into at most 2 parts.
        assert_eq!(par_enumerate(&Weight(vec![2]), 4).len(), 1 + 1 + 2 + 2 + 3);
    }

    #[test]
    fn concat_rectangle() {
        let w1 = Weight(vec![1, 0]);
        let psi = ParTuple(vec![vec![2], vec![]]);
        let omega = ParTuple(vec![vec![1], vec![]]);
        let chi = par_concat(&psi, &omega, &w1, &w1).unwrap();
        assert_eq!(chi, ParTuple(vec![vec![3, 2], vec![]]));
        assert_eq!(chi.size(), psi.size() + omega.size() + 2);
        assert_eq!(chi.iota(), Coroot(vec![3, 0]));
        assert!(par_concat(&psi, &omega, &w1, &Weight(vec![-1, 0])).is_err());
    }
}
