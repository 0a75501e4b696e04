use std::collections::BTreeMap;

use proptest::prelude::*;

use qalcove_core::alcove::{
    chain_through_points, concat_chains, counting_fact_holds, enumerate_admissible, line_chain,
    LambdaChain,
};
use qalcove_core::charident::FormalChar;
use qalcove_core::genfun::{genfun, par_concat, par_enumerate, AffineWeylElt, GenFun};
use qalcove_core::poly::{Laurent, QPoly};
use qalcove_core::qbops::{apply_r_sequence, path_sum};
use qalcove_core::rootsys::Rat;
use qalcove_core::ybmoves::{
    build_sijection, delete_pair, find_yb_segments, insert_pair, yb_transform, YbContext,
};
use qalcove_core::{Coroot, RationalPoint, Root, RootSystem, Weight, Weyl};

fn system(label: &str) -> RootSystem {
    RootSystem::new(label, 2).unwrap()
}

fn rank2() -> impl Strategy<Value = &'static str> {
    prop_oneof![Just("A2"), Just("C2"), Just("G2")]
}

/// A chain through one waypoint near a lattice vertex.
fn chain_from(rs: &RootSystem, lam: &[i64], base: &[i64], off: &[i64]) -> Option<LambdaChain> {
    let p = RationalPoint(
        base.iter()
            .zip(off)
            .map(|(&b, &o)| Rat::new(b * 1000 + o, 1000))
            .collect(),
    );
    chain_through_points(rs, &Weight(lam.to_vec()), &[p])
        .ok()
        .filter(|c| c.len() <= 16)
}

fn chain_inputs() -> impl Strategy<Value = (Vec<i64>, Vec<i64>, Vec<i64>)> {
    (
        prop::collection::vec(-2i64..=2, 2),
        prop::collection::vec(-2i64..=2, 2),
        (1i64..=7, 1i64..=5).prop_map(|(a, b)| vec![a, b]),
    )
}

fn point(rs: &RootSystem, w: usize, xi: &[i64]) -> AffineWeylElt {
    let all: Vec<Weyl> = rs.weyl_elements().collect();
    AffineWeylElt::new(all[w % all.len()], Coroot(xi.to_vec()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn operator_product_is_path_sum(label in rank2(), idx in prop::collection::vec(0usize..12, 0..6), v in 0usize..12) {
        let rs = system(label);
        let all: Vec<Root> = rs.roots().collect();
        let seq: Vec<Root> = idx.iter().map(|&i| all[i % all.len()]).collect();
        let v = point(&rs, v, &[0, 0]).w;
        let mut pi = seq.clone();
        pi.reverse();
        prop_assert_eq!(apply_r_sequence(&rs, &seq, v), path_sum(&rs, &pi, v));
    }

    #[test]
    fn chains_satisfy_counting_fact(label in rank2(), (lam, base, off) in chain_inputs()) {
        let rs = system(label);
        if let Some(c) = chain_from(&rs, &lam, &base, &off) {
            prop_assert!(counting_fact_holds(&rs, &c));
        }
    }

    #[test]
    fn yang_baxter_move_is_an_involution_preserving_genfun(
        label in rank2(), (lam, base, off) in chain_inputs(), pick in 0usize..8, w in 0usize..12,
        xi in prop::collection::vec(-1i64..=1, 2),
    ) {
        let rs = system(label);
        let c = chain_from(&rs, &lam, &base, &off);
        prop_assume!(c.is_some());
        let c = c.unwrap();
        let segs = find_yb_segments(&rs, &c);
        prop_assume!(!segs.is_empty());
        let s = segs[pick % segs.len()];
        let d = yb_transform(&rs, &c, s.t, s.q).unwrap();
        prop_assert_eq!(&yb_transform(&rs, &d, s.t, s.q).unwrap(), &c);
        let x = point(&rs, w, &xi);
        prop_assert_eq!(genfun(&rs, &c, &x), genfun(&rs, &d, &x));
    }

    #[test]
    fn sijection_preserves_signed_statistics(
        label in prop_oneof![Just("A2"), Just("C2")], (lam, base, off) in chain_inputs(), pick in 0usize..8, w in 0usize..8,
    ) {
        let rs = system(label);
        let c = chain_from(&rs, &lam, &base, &off);
        prop_assume!(c.is_some());
        let c = c.unwrap();
        let segs = find_yb_segments(&rs, &c);
        prop_assume!(!segs.is_empty());
        let s = segs[pick % segs.len()];
        let ctx = YbContext::new(&rs, &c, s.t, s.q).unwrap();
        let sj = build_sijection(&rs, &ctx, point(&rs, w, &[0, 0]).w).unwrap();
        let stats = |v: &[qalcove_core::alcove::AdmissibleSubset]| {
            let mut m = BTreeMap::new();
            for a in v {
                *m.entry((a.ed(), a.down().clone(), a.wt().clone(), a.height())).or_insert(0i64) += a.sign();
            }
            m.retain(|_, k| *k != 0);
            m
        };
        prop_assert_eq!(stats(&sj.a1), stats(&sj.a2));
        for &(i, j) in &sj.y {
            prop_assert_eq!(sj.a1[i].sign(), sj.a2[j].sign());
        }
    }

    #[test]
    fn deleting_a_non_simple_pair_preserves_genfun(
        label in rank2(), (lam, base, off) in chain_inputs(), pos in 0usize..20, r in 0usize..6, w in 0usize..12,
    ) {
        let rs = system(label);
        let c = chain_from(&rs, &lam, &base, &off);
        prop_assume!(c.is_some());
        let c = c.unwrap();
        let non_simple: Vec<Root> = rs.positive_roots().filter(|&a| !rs.is_simple(a)).collect();
        let beta = non_simple[r % non_simple.len()];
        let u = pos % (c.len() + 1);
        let bigger = insert_pair(&rs, &c, u, beta);
        prop_assume!(bigger.is_ok());
        let bigger = bigger.unwrap();
        prop_assert_eq!(&delete_pair(&rs, &bigger, u).unwrap(), &c);
        let x = point(&rs, w, &[0, 0]);
        prop_assert_eq!(genfun(&rs, &bigger, &x), genfun(&rs, &c, &x));
    }

    #[test]
    fn deleting_a_simple_pair_multiplies_by_one_minus_translation(
        label in rank2(), (lam, base, off) in chain_inputs(), pos in 0usize..20, i in 0usize..2, w in 0usize..12,
        xi in prop::collection::vec(-1i64..=1, 2),
    ) {
        let rs = system(label);
        let c = chain_from(&rs, &lam, &base, &off);
        prop_assume!(c.is_some());
        let c = c.unwrap();
        let beta = rs.simple_root(i);
        let u = pos % (c.len() + 1);
        let bigger = insert_pair(&rs, &c, u, beta);
        prop_assume!(bigger.is_ok());
        let bigger = bigger.unwrap();
        let h = rs.sgn(bigger.roots()[u]) * bigger.tilde_level(&rs, u);
        prop_assert_eq!(h, rs.sgn(bigger.roots()[u + 1]) * bigger.tilde_level(&rs, u + 1));
        let x = point(&rs, w, &xi);
        let g2 = genfun(&rs, &c, &x);
        let mut rhs = g2.clone();
        rhs += &g2.translated(&rs.coroot(beta)).scaled(-1, -h);
        prop_assert_eq!(genfun(&rs, &bigger, &x), rhs);
    }

    #[test]
    fn partition_concatenation(m in 1i64..=3, n in 1i64..=3, a in 0usize..6, b in 0usize..6) {
        let (mu, nu) = (Weight(vec![m, 0]), Weight(vec![n, 0]));
        let ps = par_enumerate(&mu, 3);
        let os = par_enumerate(&nu, 3);
        let (psi, omega) = (&ps[a % ps.len()], &os[b % os.len()]);
        let chi = par_concat(psi, omega, &mu, &nu).unwrap();
        prop_assert!(chi.fits(&(&mu + &nu)));
        prop_assert_eq!(chi.iota(), &psi.iota() + &omega.iota());
        let pair: i64 = nu.0.iter().zip(&psi.iota().0).map(|(x, y)| x * y).sum();
        prop_assert_eq!(chi.size(), psi.size() + omega.size() + pair);
    }

    #[test]
    fn translation_normalization_is_idempotent(
        label in rank2(), mu in prop::collection::vec(0i64..=3, 2), xi in prop::collection::vec(-3i64..=3, 2),
        nu in prop::collection::vec(-2i64..=2, 2), w in 0usize..12, e in -4i64..=4,
    ) {
        let rs = system(label);
        let x = point(&rs, w, &xi);
        let mut once = FormalChar::zero(Weight(mu.clone()));
        once.add_symbol(&rs, Weight(nu), &x, &Laurent::monomial(e, 1));
        let mut twice = FormalChar::zero(Weight(mu));
        for (v, n, c) in once.terms() {
            twice.add_symbol(&rs, n.clone(), &AffineWeylElt::finite(&rs, v), c);
        }
        prop_assert_eq!(once, twice);
    }

    #[test]
    fn concatenation_is_a_chain(
        label in rank2(), a in prop::collection::vec(-2i64..=2, 2), b in prop::collection::vec(-2i64..=2, 2),
    ) {
        let rs = system(label);
        let (l1, l2) = (Weight(a), Weight(b));
        let g = concat_chains(&rs, &line_chain(&rs, &l1).unwrap(), &line_chain(&rs, &l2).unwrap()).unwrap();
        prop_assert_eq!(g.lambda(), &(&l1 + &l2));
        prop_assert!(counting_fact_holds(&rs, &g));
    }

    #[test]
    fn polynomial_strings_roundtrip(terms in prop::collection::vec((0u32..3, 0u32..3, -4i64..=4), 0..5)) {
        let mut p = QPoly::zero(2);
        for (a, b, c) in terms {
            p.add_term(vec![a, b], c);
        }
        let s = p.to_canonical_string();
        prop_assert_eq!(QPoly::parse(&s, 2).unwrap(), p);
    }
}

#[test]
fn empty_chain_genfun_is_the_point() {
    let rs = system("G2");
    let c = line_chain(&rs, &Weight(vec![0, 0])).unwrap();
    let x = point(&rs, 5, &[1, -1]);
    assert_eq!(genfun(&rs, &c, &x), GenFun::basis(&rs, x.clone()));
    assert_eq!(enumerate_admissible(&rs, x.w, &c).len(), 1);
}
