//! Seeded sampling of weights, chains and chain moves.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use qalcove_core::alcove::{chain_through_points, is_weakly_reduced, LambdaChain};
use qalcove_core::rootsys::Rat;
use qalcove_core::ybmoves::{find_yb_segments, insert_pair, yb_transform, YbSegment};
use qalcove_core::{Coroot, RationalPoint, RootSystem, Weight, Weyl};

/// Longer chains make admissible-subset enumeration expensive.
pub const MAX_CHAIN_LEN: usize = 22;

pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Sampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    /// An independent sampler for one case, so cases can run in any order.
    pub fn fork(seed: u64, case: u64) -> Self {
        Sampler::new(seed ^ case.wrapping_mul(0x9e37_79b9_7f4a_7c15))
    }

    pub fn int(&mut self, lo: i64, hi: i64) -> i64 {
        self.rng.gen_range(lo..=hi)
    }

    pub fn weight(&mut self, rs: &RootSystem, bound: i64) -> Weight {
        Weight((0..rs.rank()).map(|_| self.int(-bound, bound)).collect())
    }

    /// A weight with at least one positive and one negative coordinate.
    pub fn mixed_weight(&mut self, rs: &RootSystem, bound: i64) -> Weight {
        loop {
            let w = self.weight(rs, bound);
            if w.0.iter().any(|&x| x > 0) && w.0.iter().any(|&x| x < 0) {
                return w;
            }
        }
    }

    pub fn weyl(&mut self, rs: &RootSystem) -> Weyl {
        let all: Vec<Weyl> = rs.weyl_elements().collect();
        *all.choose(&mut self.rng).expect("nonempty Weyl group")
    }

    pub fn coroot(&mut self, rs: &RootSystem, bound: i64) -> Coroot {
        Coroot((0..rs.rank()).map(|_| self.int(-bound, bound)).collect())
    }

    /// `lambda = lambda_1 + lambda_2`, splitting each coordinate into two
    /// summands of its own sign.
    pub fn cancellation_free_split(&mut self, lambda: &Weight) -> (Weight, Weight) {
        let mut a = Vec::with_capacity(lambda.0.len());
        for &m in &lambda.0 {
            a.push(if m >= 0 {
                self.int(0, m)
            } else {
                self.int(m, 0)
            });
        }
        let a = Weight(a);
        let b = lambda - &a;
        (a, b)
    }

    fn waypoint(&mut self, rank: usize) -> RationalPoint {
        RationalPoint(
            (0..rank)
                .map(|i| Rat::new(self.int(-2, 2) * 1000 + self.int(1, 7 - 2 * i as i64), 1000))
                .collect(),
        )
    }

    /// A chain for `lambda` read off a path through one or two random
    /// points near lattice vertices; `None` if the path is degenerate or long.
    pub fn chain_for(&mut self, rs: &RootSystem, lambda: &Weight) -> Option<LambdaChain> {
        let n = self.int(1, 2) as usize;
        let pts: Vec<RationalPoint> = (0..n).map(|_| self.waypoint(rs.rank())).collect();
        let chain = chain_through_points(rs, lambda, &pts).ok()?;
        (chain.len() <= MAX_CHAIN_LEN).then_some(chain)
    }

    /// A random chain with a random weight of coordinates in `[-bound, bound]`.
    pub fn chain(&mut self, rs: &RootSystem, bound: i64, tries: usize) -> Option<LambdaChain> {
        (0..tries).find_map(|_| {
            let lambda = self.weight(rs, bound);
            self.chain_for(rs, &lambda)
        })
    }

    pub fn weakly_reduced_chain(
        &mut self,
        rs: &RootSystem,
        bound: i64,
        tries: usize,
    ) -> Option<LambdaChain> {
        (0..tries).find_map(|_| {
            self.chain(rs, bound, 1)
                .filter(|c| is_weakly_reduced(rs, c))
        })
    }

    pub fn segment(&mut self, rs: &RootSystem, chain: &LambdaChain) -> Option<YbSegment> {
        find_yb_segments(rs, chain).choose(&mut self.rng).copied()
    }

    /// Applies up to `steps` random Yang-Baxter moves.
    pub fn yb_walk(
        &mut self,
        rs: &RootSystem,
        chain: &LambdaChain,
        steps: usize,
    ) -> (LambdaChain, usize) {
        let mut cur = chain.clone();
        let mut done = 0;
        for _ in 0..steps {
            let Some(seg) = self.segment(rs, &cur) else {
                break;
            };
            match yb_transform(rs, &cur, seg.t, seg.q) {
                Ok(next) => {
                    cur = next;
                    done += 1;
                }
                Err(_) => break,
            }
        }
        (cur, done)
    }

    /// Inserts `(beta, -beta)` for a random non-simple positive `beta`, the
    /// inverse of a deletion move. `None` when every positive root is simple.
    pub fn insert_non_simple(
        &mut self,
        rs: &RootSystem,
        chain: &LambdaChain,
    ) -> Option<LambdaChain> {
        let candidates: Vec<_> = rs.positive_roots().filter(|&a| !rs.is_simple(a)).collect();
        let beta = *candidates.choose(&mut self.rng)?;
        let u = self.rng.gen_range(0..=chain.len());
        insert_pair(rs, chain, u, beta).ok()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::root_system;

    #[test]
    fn deterministic() {
        let rs = root_system("G2").unwrap();
        let a = Sampler::new(7).chain(&rs, 2, 50);
        let b = Sampler::new(7).chain(&rs, 2, 50);
        assert!(a.is_some());
        assert_eq!(a, b);
    }

    #[test]
    fn splits_are_cancellation_free() {
        let mut s = Sampler::new(3);
        for _ in 0..20 {
            let lam = Weight(vec![s.int(-3, 3), s.int(-3, 3)]);
            let (a, b) = s.cancellation_free_split(&lam);
            assert_eq!(&a + &b, lam);
            assert!(qalcove_core::alcove::is_cancellation_free(&[a, b]));
        }
    }

    #[test]
    fn walks_stay_chains() {
        let rs = root_system("C2").unwrap();
        let mut s = Sampler::new(11);
        let c = s.chain(&rs, 2, 50).unwrap();
        let (d, _) = s.yb_walk(&rs, &c, 3);
        assert_eq!(d.lambda(), c.lambda());
        let e = s.insert_non_simple(&rs, &d).unwrap();
        assert_eq!(e.len(), d.len() + 2);
    }
}
