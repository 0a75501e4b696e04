//! λ-chains, admissible subsets and their statistics.
//!
//! Chain positions are 0-based throughout; printed index sets add one.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use num_integer::Integer;
use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::qbg::{pi_compatible_paths, DirectedPath, EdgeKind};
use crate::rootsys::{Coroot, Rat, RationalPoint, Root, RootSystem, Weight, Weyl};

/// A validated λ-chain with its levels `l_k`.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct LambdaChain {
    lambda: Weight,
    roots: Vec<Root>,
    levels: Vec<i64>,
}

impl LambdaChain {
    pub fn lambda(&self) -> &Weight {
        &self.lambda
    }

    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn levels(&self) -> &[i64] {
        &self.levels
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    /// `l~_k = <lambda, beta_k^vee> - l_k`.
    pub fn tilde_level(&self, rs: &RootSystem, k: usize) -> i64 {
        rs.pair_root(&self.lambda, self.roots[k]) - self.levels[k]
    }

    pub fn tilde_levels(&self, rs: &RootSystem) -> Vec<i64> {
        (0..self.len()).map(|k| self.tilde_level(rs, k)).collect()
    }
}

fn floor(x: Rat) -> i64 {
    x.numer().div_floor(x.denom())
}

fn in_fundamental_alcove(rs: &RootSystem, x: &RationalPoint) -> bool {
    rs.positive_roots().all(|a| {
        let p = rs.pair_point(x, a);
        p.is_positive() && p < Rat::one()
    })
}

/// Number of affine hyperplanes strictly separating two generic points.
fn separating_walls(rs: &RootSystem, x: &RationalPoint, y: &RationalPoint) -> i64 {
    rs.positive_roots()
        .map(|a| (floor(rs.pair_point(x, a)) - floor(rs.pair_point(y, a))).abs())
        .sum()
}

/// Simulates the alcove walk of `roots` from the base point and returns the
/// validated chain. Each step must cross a wall of the current alcove, and
/// the walk must end in `A_o - lambda`.
pub fn compute_levels(rs: &RootSystem, roots: &[Root], lambda: &Weight) -> Result<LambdaChain> {
    if lambda.0.len() != rs.rank() {
        return Err(Error::Dimension {
            expected: rs.rank(),
            got: lambda.0.len(),
        });
    }
    let mut c = rs.base_point();
    let mut levels = Vec::with_capacity(roots.len());
    for (k, &b) in roots.iter().enumerate() {
        let m = floor(rs.pair_point(&c, b));
        let next = rs.affine_reflect(&c, b, m);
        if separating_walls(rs, &c, &next) != 1 {
            return Err(Error::NotAChain(format!(
                "step {} does not cross a wall of the current alcove",
                k + 1
            )));
        }
        levels.push(-m);
        c = next;
    }
    let shifted = RationalPoint(
        c.0.iter()
            .zip(&lambda.0)
            .map(|(x, &l)| x + Rat::from_integer(l))
            .collect(),
    );
    if !in_fundamental_alcove(rs, &shifted) {
        return Err(Error::NotAChain(String::from(
            "the walk does not end in A_o - lambda",
        )));
    }
    Ok(LambdaChain {
        lambda: lambda.clone(),
        roots: roots.to_vec(),
        levels,
    })
}

/// Checks `<lambda, alpha^vee> = #{beta_j = alpha} - #{beta_j = -alpha}` for
/// every positive root.
pub fn counting_fact_holds(rs: &RootSystem, chain: &LambdaChain) -> bool {
    rs.positive_roots().all(|a| {
        let net: i64 = chain
            .roots
            .iter()
            .map(|&b| match b {
                _ if b == a => 1,
                _ if b == rs.neg(a) => -1,
                _ => 0,
            })
            .sum();
        net == rs.pair_root(&chain.lambda, a)
    })
}

/// Splits `lambda` into its dominant and antidominant parts.
pub fn lambda_pm(lambda: &Weight) -> (Weight, Weight) {
    (
        Weight(lambda.0.iter().map(|&x| x.max(0)).collect()),
        Weight(lambda.0.iter().map(|&x| x.min(0)).collect()),
    )
}

/// Whether every fundamental-weight coordinate has one sign across the summands.
pub fn is_cancellation_free(parts: &[Weight]) -> bool {
    let Some(n) = parts.first().map(|p| p.0.len()) else {
        return true;
    };
    (0..n).all(|i| {
        let pos = parts.iter().any(|p| p.0[i] > 0);
        let neg = parts.iter().any(|p| p.0[i] < 0);
        !(pos && neg)
    })
}

/// The reduced chain read off a straight line from a generic point near the
/// vertex `0` of `A_o` to its translate by `-lambda`.
///
/// The starting point is `sum_i eps_i w_i` with `eps_1 >> eps_2 >> ... > 0`,
/// so crossing times compare lexicographically. For dominant `lambda` this is
/// the lex λ-chain.
pub fn line_chain(rs: &RootSystem, lambda: &Weight) -> Result<LambdaChain> {
    let mut keyed: Vec<(Vec<Rat>, Root)> = Vec::new();
    for a in rs.positive_roots() {
        let m = rs.pair_root(lambda, a);
        let c = rs.coroot_coeffs(a);
        if m > 0 {
            for k in 0..m {
                let mut key = vec![Rat::new(k, m)];
                key.extend(c.iter().map(|&ci| Rat::new(ci, m)));
                keyed.push((key, a));
            }
        } else if m < 0 {
            let am = -m;
            for j in 1..=am {
                let mut key = vec![Rat::new(j, am)];
                key.extend(c.iter().map(|&ci| Rat::new(-ci, am)));
                keyed.push((key, rs.neg(a)));
            }
        }
    }
    keyed.sort_by(|x, y| x.0.cmp(&y.0));
    let roots: Vec<Root> = keyed.into_iter().map(|(_, r)| r).collect();
    compute_levels(rs, &roots, lambda)
}

/// The lex λ-chain for dominant `lambda`; for antidominant `lambda` the
/// reverse of the lex (-λ)-chain with every root negated.
pub fn lex_chain(rs: &RootSystem, lambda: &Weight) -> Result<LambdaChain> {
    if lambda.is_dominant() {
        line_chain(rs, lambda)
    } else if lambda.is_antidominant() {
        let pos = line_chain(rs, &-lambda)?;
        let roots: Vec<Root> = pos.roots.iter().rev().map(|&r| rs.neg(r)).collect();
        compute_levels(rs, &roots, lambda)
    } else {
        Err(Error::MixedSign(lambda.0.clone()))
    }
}

/// `lex(lambda+) * lex(lambda-)`.
pub fn gamma0(rs: &RootSystem, lambda: &Weight) -> Result<LambdaChain> {
    let (p, m) = lambda_pm(lambda);
    concat_chains(rs, &lex_chain(rs, &p)?, &lex_chain(rs, &m)?)
}

/// Builds the chain of the piecewise-linear path `nu_o -> p_1 -> ... -> p_k
/// -> nu_o - lambda`. Fails if the path meets two hyperplanes at once or
/// passes through a hyperplane at a waypoint.
pub fn chain_through_points(
    rs: &RootSystem,
    lambda: &Weight,
    waypoints: &[RationalPoint],
) -> Result<LambdaChain> {
    let nu = rs.base_point();
    let end = RationalPoint(
        nu.0.iter()
            .zip(&lambda.0)
            .map(|(x, &l)| x - Rat::from_integer(l))
            .collect(),
    );
    let mut pts = vec![nu];
    pts.extend(waypoints.iter().cloned());
    pts.push(end);
    let degenerate = || Error::NotAChain(String::from("path is not in general position"));
    let mut roots = Vec::new();
    for seg in pts.windows(2) {
        let mut hits: Vec<(Rat, Root)> = Vec::new();
        for a in rs.positive_roots() {
            let x = rs.pair_point(&seg[0], a);
            let y = rs.pair_point(&seg[1], a);
            if x.is_integer() || y.is_integer() {
                return Err(degenerate());
            }
            let (fx, fy) = (floor(x), floor(y));
            match fx.cmp(&fy) {
                Ordering::Less => {
                    for n in fx + 1..=fy {
                        hits.push(((Rat::from_integer(n) - x) / (y - x), rs.neg(a)));
                    }
                }
                Ordering::Greater => {
                    for n in (fy + 1..=fx).rev() {
                        hits.push(((x - Rat::from_integer(n)) / (x - y), a));
                    }
                }
                Ordering::Equal => {}
            }
        }
        hits.sort_by_key(|h| h.0);
        if hits.windows(2).any(|h| h[0].0 == h[1].0) {
            return Err(degenerate());
        }
        roots.extend(hits.into_iter().map(|(_, r)| r));
    }
    compute_levels(rs, &roots, lambda)
}

/// `Gamma1 * Gamma2`, a chain for the sum of the two weights.
pub fn concat_chains(rs: &RootSystem, g1: &LambdaChain, g2: &LambdaChain) -> Result<LambdaChain> {
    let mut roots = g1.roots.clone();
    roots.extend_from_slice(&g2.roots);
    compute_levels(rs, &roots, &(&g1.lambda + &g2.lambda))
}

/// Reduced means no alcove path with the same ends is shorter.
pub fn is_reduced(rs: &RootSystem, chain: &LambdaChain) -> bool {
    let min: i64 = rs
        .positive_roots()
        .map(|a| rs.pair_root(&chain.lambda, a).abs())
        .sum();
    chain.len() as i64 == min
}

/// Weakly reduced means no simple root occurs together with its negative.
pub fn is_weakly_reduced(rs: &RootSystem, chain: &LambdaChain) -> bool {
    (0..rs.rank()).all(|i| {
        let a = rs.simple_root(i);
        !(chain.roots.contains(&a) && chain.roots.contains(&rs.neg(a)))
    })
}

/// A `w`-admissible subset with its statistics.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct AdmissibleSubset {
    path: DirectedPath,
    wt: Weight,
    height: i64,
}

impl AdmissibleSubset {
    pub fn w(&self) -> Weyl {
        self.path.start()
    }

    /// Sorted 0-based chain positions.
    pub fn indices(&self) -> Vec<usize> {
        self.path.indices()
    }

    pub fn path(&self) -> &DirectedPath {
        &self.path
    }

    pub fn wt(&self) -> &Weight {
        &self.wt
    }

    pub fn ed(&self) -> Weyl {
        self.path.end()
    }

    pub fn down(&self) -> &Coroot {
        self.path.wt()
    }

    pub fn height(&self) -> i64 {
        self.height
    }

    pub fn n(&self) -> usize {
        self.path.nega()
    }

    /// `(-1)^{n(A)}`.
    pub fn sign(&self) -> i64 {
        if self.n().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// Positions whose step is a quantum edge.
    pub fn quantum_indices(&self) -> Vec<usize> {
        self.path
            .steps()
            .iter()
            .filter(|s| s.edge.kind == EdgeKind::Quantum)
            .map(|s| s.index)
            .collect()
    }
}

fn with_stats(rs: &RootSystem, chain: &LambdaChain, path: DirectedPath) -> AdmissibleSubset {
    let mut x = -&chain.lambda;
    for s in path.steps().iter().rev() {
        let b = chain.roots[s.index];
        let p = rs.pair_root(&x, b) + chain.levels[s.index];
        x -= &rs.root_weight(b).scaled(p);
    }
    let wt = -rs.act_weight(path.start(), &x);
    let height = path
        .steps()
        .iter()
        .filter(|s| s.edge.kind == EdgeKind::Quantum)
        .map(|s| rs.sgn(chain.roots[s.index]) * chain.tilde_level(rs, s.index))
        .sum();
    AdmissibleSubset { path, wt, height }
}

/// `A(w, Gamma)` in lexicographic order of index sets.
pub fn enumerate_admissible(
    rs: &RootSystem,
    w: Weyl,
    chain: &LambdaChain,
) -> Vec<AdmissibleSubset> {
    pi_compatible_paths(rs, w, &chain.roots)
        .into_iter()
        .map(|p| with_stats(rs, chain, p))
        .collect()
}

/// The admissible subset with the given sorted 0-based positions.
pub fn admissible_from_indices(
    rs: &RootSystem,
    w: Weyl,
    chain: &LambdaChain,
    indices: &[usize],
) -> Result<AdmissibleSubset> {
    let mut path = DirectedPath::empty(rs, w);
    let mut last = None;
    for &j in indices {
        if j >= chain.len() || last.is_some_and(|l| l >= j) || !path.push(rs, j, chain.roots[j]) {
            return Err(Error::NotAdmissible(indices.to_vec()));
        }
        last = Some(j);
    }
    Ok(with_stats(rs, chain, path))
}

/// `sum_{j in A^-} l_j`, defined only for dominant `lambda` and `w = e`.
pub fn coheight(chain: &LambdaChain, a: &AdmissibleSubset) -> Result<i64> {
    if !chain.lambda.is_dominant() || a.w() != Weyl::IDENTITY {
        return Err(Error::Domain(String::from(
            "coheight needs a dominant weight and w = e",
        )));
    }
    Ok(a.quantum_indices().iter().map(|&j| chain.levels[j]).sum())
}

/// `A * B` on `Gamma1 * Gamma2`, where `r1 = |Gamma1|` and `B` is admissible
/// for `Gamma2` starting at `ed(A)`.
pub fn concat_admissible(
    rs: &RootSystem,
    concat: &LambdaChain,
    r1: usize,
    a: &AdmissibleSubset,
    b: &AdmissibleSubset,
) -> Result<AdmissibleSubset> {
    if b.w() != a.ed() {
        return Err(Error::ConcatMismatch(format!(
            "B starts at {} but A ends at {}",
            rs.word_string(b.w()),
            rs.word_string(a.ed())
        )));
    }
    let mut idx = a.indices();
    idx.extend(b.indices().iter().map(|j| j + r1));
    admissible_from_indices(rs, a.w(), concat, &idx)
}

/// `(A ∩ [0,t), A ∩ [t,t+q), A ∩ [t+q,..))`.
pub fn split_admissible(
    indices: &[usize],
    t: usize,
    q: usize,
) -> (Vec<usize>, Vec<usize>, Vec<usize>) {
    let part = |lo: usize, hi: usize| {
        indices
            .iter()
            .copied()
            .filter(|&j| j >= lo && j < hi)
            .collect()
    };
    (part(0, t), part(t, t + q), part(t + q, usize::MAX))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn roots(rs: &RootSystem, cs: &[&[i64]]) -> Vec<Root> {
        cs.iter().map(|c| rs.root(c).unwrap()).collect()
    }

    fn one_based(a: &AdmissibleSubset) -> Vec<usize> {
        a.indices().iter().map(|j| j + 1).collect()
    }

    #[test]
    fn a2_levels() {
        let rs = RootSystem::new("A2", 2).unwrap();
        let g = compute_levels(&rs, &roots(&rs, &[&[1, 0], &[1, 1]]), &Weight(vec![1, 0])).unwrap();
        assert_eq!(g.levels(), &[0, 0]);
        assert_eq!(g.tilde_levels(&rs), vec![1, 1]);
        let e = compute_levels(&rs, &[], &Weight(vec![0, 0])).unwrap();
        assert!(e.is_empty());
        assert!(compute_levels(&rs, &roots(&rs, &[&[1, 0]]), &Weight(vec![1, 0])).is_err());
    }

    #[test]
    fn example_chains() {
        let rs = RootSystem::new("A2", 2).unwrap();
        let lam = Weight(vec![-2, 1]);
        let g1 = compute_levels(
            &rs,
            &roots(&rs, &[&[0, 1], &[-1, 0], &[-1, -1], &[-1, 0]]),
            &lam,
        )
        .unwrap();
        let g2 = compute_levels(
            &rs,
            &roots(&rs, &[&[-1, -1], &[-1, 0], &[0, 1], &[-1, 0]]),
            &lam,
        )
        .unwrap();
        assert!(counting_fact_holds(&rs, &g1));
        assert!(is_weakly_reduced(&rs, &g1));
        let s2 = rs.simple_reflection(1);
        let a1: Vec<Vec<usize>> = enumerate_admissible(&rs, s2, &g1)
            .iter()
            .map(one_based)
            .collect();
        assert_eq!(a1.len(), 12);
        assert_eq!(enumerate_admissible(&rs, s2, &g2).len(), 16);
        assert!(a1.contains(&vec![1, 2, 3, 4]));
        assert!(!a1.contains(&vec![1, 3]));
    }

    #[test]
    fn a1_statistics() {
        let rs = RootSystem::new("A1", 1).unwrap();
        let g = lex_chain(&rs, &Weight(vec![1])).unwrap();
        assert_eq!(g.roots(), &[rs.simple_root(0)]);
        let s1 = rs.simple_reflection(0);
        let a = admissible_from_indices(&rs, s1, &g, &[0]).unwrap();
        assert_eq!(
            (a.down(), a.height(), a.wt(), a.ed()),
            (&Coroot(vec![1]), 1, &Weight(vec![1]), Weyl::IDENTITY)
        );
        let b = admissible_from_indices(&rs, Weyl::IDENTITY, &g, &[0]).unwrap();
        assert_eq!(
            (b.down(), b.height(), b.wt(), b.ed()),
            (&Coroot(vec![0]), 0, &Weight(vec![-1]), s1)
        );
        let e = admissible_from_indices(&rs, s1, &g, &[]).unwrap();
        assert_eq!(e.wt(), &Weight(vec![-1]));
        assert_eq!(coheight(&g, &b), Ok(0));
        assert!(coheight(&g, &a).is_err());
    }

    #[test]
    fn lex_examples() {
        let rs = RootSystem::new("A2", 2).unwrap();
        let g = lex_chain(&rs, &Weight(vec![1, 0])).unwrap();
        assert_eq!(g.roots(), &roots(&rs, &[&[1, 0], &[1, 1]])[..]);
        assert!(is_reduced(&rs, &g));
        let n = lex_chain(&rs, &Weight(vec![-1, 0])).unwrap();
        assert_eq!(n.roots(), &roots(&rs, &[&[-1, -1], &[-1, 0]])[..]);
        assert!(lex_chain(&rs, &Weight(vec![-1, 1])).is_err());
        assert!(lex_chain(&rs, &Weight(vec![0, 0])).unwrap().is_empty());
    }

    #[test]
    fn weak_reduction() {
        let rs = RootSystem::new("A2", 2).unwrap();
        let g =
            compute_levels(&rs, &roots(&rs, &[&[1, 0], &[-1, 0]]), &Weight(vec![0, 0])).unwrap();
        assert!(!is_weakly_reduced(&rs, &g));
        assert!(!is_reduced(&rs, &g));
    }

    #[test]
    fn pm_and_cancellation() {
        assert_eq!(
            lambda_pm(&Weight(vec![-2, 1])),
            (Weight(vec![0, 1]), Weight(vec![-2, 0]))
        );
        assert!(!is_cancellation_free(&[
            Weight(vec![1, 0]),
            Weight(vec![-1, 0])
        ]));
        assert!(is_cancellation_free(&[
            Weight(vec![1, 0]),
            Weight(vec![1, 0])
        ]));
    }

    #[test]
    fn split() {
        assert_eq!(
            split_admissible(&[0, 2, 3], 1, 2),
            (vec![0], vec![2], vec![3])
        );
    }
}
