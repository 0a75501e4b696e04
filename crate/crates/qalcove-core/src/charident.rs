//! The Chevalley-type identity for graded characters, with the characters
//! `gch V_x^-(mu)` kept as formal symbols subject only to
//! `gch V_{x t_xi}^-(mu) = q^{-<mu, xi>} gch V_x^-(mu)`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use crate::alcove::{concat_chains, enumerate_admissible, lambda_pm, lex_chain, LambdaChain};
use crate::error::{Error, Result};
use crate::genfun::{compose_ghat, ghat, AffineWeylElt, GenFun};
use crate::poly::Laurent;
use crate::rootsys::{RootSystem, Weight, Weyl};

/// A finite sum of `c(q) e^nu gch V_w^-(mu)` with `w` in the finite Weyl group.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FormalChar {
    mu: Weight,
    terms: BTreeMap<(Weyl, Weight), Laurent>,
}

impl FormalChar {
    pub fn zero(mu: Weight) -> Self {
        FormalChar {
            mu,
            terms: BTreeMap::new(),
        }
    }

    pub fn mu(&self) -> &Weight {
        &self.mu
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Adds `c e^nu gch V_x^-(mu)`, normalizing the translation part of `x`.
    pub fn add_symbol(&mut self, rs: &RootSystem, nu: Weight, x: &AffineWeylElt, c: &Laurent) {
        let c = c.shifted(-rs.pair(&self.mu, &x.xi));
        let key = (x.w, nu);
        let e = self.terms.entry(key.clone()).or_default();
        *e += &c;
        if e.is_zero() {
            self.terms.remove(&key);
        }
    }

    /// Terms as `(w, nu, coefficient)`.
    pub fn terms(&self) -> impl Iterator<Item = (Weyl, &Weight, &Laurent)> {
        self.terms.iter().map(|((w, nu), c)| (*w, nu, c))
    }

    pub fn truncated(&self, floor: i64) -> Self {
        let mut out = FormalChar::zero(self.mu.clone());
        for ((w, nu), c) in &self.terms {
            let c = c.truncated(floor);
            if !c.is_zero() {
                out.terms.insert((*w, nu.clone()), c);
            }
        }
        out
    }

    /// Image of an element of `Z[q, q^-1][P][W_af]` under `x -> gch V_x^-(mu)`.
    pub fn from_genfun(rs: &RootSystem, mu: &Weight, f: &GenFun) -> Self {
        let mut out = FormalChar::zero(mu.clone());
        for (nu, x, c) in f.terms() {
            out.add_symbol(rs, nu.clone(), x, c);
        }
        out
    }
}

/// Substitutes `gch V_w^-(0) := 1`.
pub fn specialize_trivial(f: &FormalChar) -> Result<BTreeMap<Weight, Laurent>> {
    if !f.mu.is_zero() {
        return Err(Error::Domain(format!(
            "specialization needs mu = 0, got {:?}",
            f.mu.0
        )));
    }
    let mut out: BTreeMap<Weight, Laurent> = BTreeMap::new();
    for (_, nu, c) in f.terms() {
        *out.entry(nu.clone()).or_default() += c;
    }
    out.retain(|_, c| !c.is_zero());
    Ok(out)
}

fn check_dominant(mu: &Weight) -> Result<()> {
    if mu.is_dominant() {
        Ok(())
    } else {
        Err(Error::Domain(format!("{:?} is not dominant", mu.0)))
    }
}

/// The right-hand side of the Chevalley-type identity over `chain`, exact
/// for exponents `>= floor`.
pub fn rhs_chevalley(
    rs: &RootSystem,
    mu: &Weight,
    chain: &LambdaChain,
    x: &AffineWeylElt,
    floor: i64,
) -> Result<FormalChar> {
    check_dominant(mu)?;
    // Normalizing lowers exponents by <mu, xi + down + iota> >= <mu, xi>.
    let g = ghat(rs, chain, x, floor + rs.pair(mu, &x.xi));
    Ok(FormalChar::from_genfun(rs, mu, &g).truncated(floor))
}

/// `sum_A (-1)^{|A|} q^{-height(A)} e^{wt(A)}` over `A(w, chain)`.
pub fn antidominant_sum(
    rs: &RootSystem,
    chain: &LambdaChain,
    w: Weyl,
) -> BTreeMap<Weight, Laurent> {
    let mut out: BTreeMap<Weight, Laurent> = BTreeMap::new();
    for a in enumerate_admissible(rs, w, chain) {
        let sign = if a.indices().len() % 2 == 0 { 1 } else { -1 };
        out.entry(a.wt().clone())
            .or_default()
            .add_term(-a.height(), sign);
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// Whether the `mu = 0` antidominant sum vanishes for the lex chain of `lambda` at `w`.
pub fn verify_vanishing(rs: &RootSystem, lambda: &Weight, w: Weyl) -> Result<bool> {
    if lambda.is_zero() || !lambda.is_antidominant() {
        return Err(Error::Domain(format!(
            "{:?} is not antidominant and nonzero",
            lambda.0
        )));
    }
    let chain = lex_chain(rs, lambda)?;
    Ok(antidominant_sum(rs, &chain, w).is_empty())
}

/// Compares the right-hand side over `lex(lambda+) * lex(lambda-)` with the
/// image of `Ĝ_{lex(lambda-)} o Ĝ_{lex(lambda+)}(x)` above `floor`.
pub fn verify_factorization(
    rs: &RootSystem,
    mu: &Weight,
    lambda: &Weight,
    x: &AffineWeylElt,
    floor: i64,
) -> Result<bool> {
    check_dominant(mu)?;
    let (plus, minus) = lambda_pm(lambda);
    let (gp, gm) = (lex_chain(rs, &plus)?, lex_chain(rs, &minus)?);
    let whole = concat_chains(rs, &gp, &gm)?;
    let lhs = rhs_chevalley(rs, mu, &whole, x, floor)?;
    let nested = compose_ghat(rs, &gm, &gp, x, floor + rs.pair(mu, &x.xi))?;
    let rhs = FormalChar::from_genfun(rs, mu, &nested).truncated(floor);
    Ok(lhs == rhs)
}

/// Weights of the specialized right-hand side that survive above `floor`.
pub fn specialized_rhs(
    rs: &RootSystem,
    chain: &LambdaChain,
    x: &AffineWeylElt,
    floor: i64,
) -> Result<BTreeMap<Weight, Laurent>> {
    let zero = Weight::zero(rs.rank());
    specialize_trivial(&rhs_chevalley(rs, &zero, chain, x, floor)?)
}

/// All `(w, nu)` symbols of a formal character, for reporting.
pub fn symbols(f: &FormalChar) -> Vec<(Weyl, Weight)> {
    f.terms.keys().cloned().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alcove::{gamma0, line_chain};
    use crate::rootsys::Coroot;
    use alloc::vec;

    #[test]
    fn trivial_lambda() {
        let rs = RootSystem::new("A2", 2).unwrap();
        let mu = Weight(vec![1, 1]);
        let g = lex_chain(&rs, &Weight(vec![0, 0])).unwrap();
        let x = AffineWeylElt::new(rs.simple_reflection(0), Coroot(vec![1, 0]));
        let f = rhs_chevalley(&rs, &mu, &g, &x, -10).unwrap();
        let t: Vec<_> = f
            .terms()
            .map(|(w, nu, c)| (w, nu.clone(), c.clone()))
            .collect();
        assert_eq!(t, vec![(x.w, Weight(vec![0, 0]), Laurent::monomial(-1, 1))]);
    }

    #[test]
    fn normalization_is_idempotent() {
        let rs = RootSystem::new("C2", 2).unwrap();
        let mu = Weight(vec![2, 1]);
        let mut f = FormalChar::zero(mu.clone());
        let x = AffineWeylElt::new(rs.longest(), Coroot(vec![1, 2]));
        f.add_symbol(&rs, Weight(vec![1, 0]), &x, &Laurent::monomial(0, 1));
        let mut g = FormalChar::zero(mu.clone());
        for (w, nu, c) in f.terms() {
            g.add_symbol(&rs, nu.clone(), &AffineWeylElt::finite(&rs, w), c);
        }
        assert_eq!(f, g);
    }

    #[test]
    fn specialization() {
        let rs = RootSystem::new("A2", 2).unwrap();
        let mut f = FormalChar::zero(Weight(vec![0, 0]));
        f.add_symbol(
            &rs,
            Weight(vec![1, 0]),
            &AffineWeylElt::finite(&rs, rs.simple_reflection(0)),
            &Laurent::monomial(-2, 1),
        );
        let s = specialize_trivial(&f).unwrap();
        assert_eq!(s.get(&Weight(vec![1, 0])), Some(&Laurent::monomial(-2, 1)));
        assert!(specialize_trivial(&FormalChar::zero(Weight(vec![1, 0]))).is_err());
    }

    #[test]
    fn vanishing_small() {
        let rs = RootSystem::new("A1", 1).unwrap();
        for w in rs.weyl_elements() {
            assert!(verify_vanishing(&rs, &Weight(vec![-1]), w).unwrap());
        }
        assert!(verify_vanishing(&rs, &Weight(vec![1]), Weyl::IDENTITY).is_err());
    }

    #[test]
    fn chain_independence_and_factorization() {
        let rs = RootSystem::new("A2", 2).unwrap();
        let lam = Weight(vec![-2, 1]);
        let mu = Weight(vec![2, 0]);
        let x = AffineWeylElt::finite(&rs, Weyl::IDENTITY);
        let a = rhs_chevalley(&rs, &mu, &line_chain(&rs, &lam).unwrap(), &x, -6).unwrap();
        let b = rhs_chevalley(&rs, &mu, &gamma0(&rs, &lam).unwrap(), &x, -6).unwrap();
        assert_eq!(a, b);
        assert!(verify_factorization(&rs, &mu, &lam, &x, -6).unwrap());
    }
}
