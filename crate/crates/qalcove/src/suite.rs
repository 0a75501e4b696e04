//! The verification suite: one report per acceptance criterion.
//!
//! Randomized cases are drawn from per-case forks of a seeded sampler, so
//! reports are identical for identical seeds whatever the thread count.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;
use std::path::Path;
use std::time::{Duration, Instant};

use anyhow::{bail, ensure, Context, Result};
use rayon::prelude::*;

use qalcove_core::alcove::{
    compute_levels, concat_chains, enumerate_admissible, is_weakly_reduced, lex_chain, line_chain,
    LambdaChain,
};
use qalcove_core::charident::{specialized_rhs, verify_vanishing};
use qalcove_core::genfun::{
    compose, compose_ghat, genfun, genfun_equal, ghat, height_character, is_w_invariant,
    AffineWeylElt,
};
use qalcove_core::qbg::{label_increasing_paths, pi_compatible_paths, reflection_orders};
use qalcove_core::qbops::{
    check_yang_baxter, operator_matrix, tabulated_operator, verify_matrix_props,
};
use qalcove_core::ybmoves::{
    build_sijection, classify_segment_path, yb_transform, Exceptional, PhiClass, YbContext,
};
use qalcove_core::{Coroot, Root, RootSystem, Weight, Weyl};

use crate::golden::{compare_golden, load_errata, matches_up_to_errata, verify_checksums};
use crate::parse::root_system;
use crate::sample::Sampler;

pub const DEFAULT_SEED: u64 = 20240531;

#[derive(Clone, Debug)]
pub struct Criterion {
    pub id: u8,
    pub title: &'static str,
    pub passed: bool,
    pub cases: usize,
    pub detail: String,
    pub elapsed: Duration,
}

impl Criterion {
    pub fn line(&self) -> String {
        let status = if self.passed { "PASS" } else { "FAIL" };
        format!(
            "{status} criterion {:>2}: {} ({} cases; {})",
            self.id, self.title, self.cases, self.detail
        )
    }
}

fn timed(
    id: u8,
    title: &'static str,
    f: impl FnOnce() -> Result<(bool, usize, String)>,
) -> Criterion {
    let start = Instant::now();
    let (passed, cases, detail) = match f() {
        Ok((p, n, d)) => (p, n, d.trim_end().to_string()),
        Err(e) => (false, 0, format!("error: {e:#}")),
    };
    Criterion {
        id,
        title,
        passed,
        cases,
        detail,
        elapsed: start.elapsed(),
    }
}

fn rsys(label: &str) -> Result<RootSystem> {
    root_system(label).with_context(|| format!("building {label}"))
}

fn roots(rs: &RootSystem, cs: &[&[i64]]) -> Result<Vec<Root>> {
    Ok(cs
        .iter()
        .map(|c| rs.root(c))
        .collect::<Result<Vec<_>, _>>()?)
}

pub fn golden_matrices(data: &Path) -> Criterion {
    timed(1, "golden operator matrices", || {
        let start = Instant::now();
        verify_checksums(data)?;
        let errata = load_errata(data)?;
        let mut cases = 0;
        let mut notes = Vec::new();
        let mut ok = true;
        for label in ["C2", "G2"] {
            let rs = rsys(label)?;
            let cmp = compare_golden(&rs, data)?;
            cases += cmp.len();
            let exact = cmp.iter().filter(|c| c.mismatches.is_empty()).count();
            ok &= matches_up_to_errata(&cmp, &errata);
            notes.push(format!("{label} {exact}/{} exact", cmp.len()));
            for c in &cmp {
                for m in &c.mismatches {
                    notes.push(format!(
                        "{} ({},{}) printed {} computed {}",
                        c.file, m.row, m.col, m.printed, m.computed
                    ));
                }
            }
        }
        let secs = start.elapsed().as_secs_f64();
        Ok((ok && secs < 5.0, cases, notes.join("; ")))
    })
}

fn a2_example_chains() -> Result<(RootSystem, LambdaChain, LambdaChain)> {
    let rs = rsys("A2")?;
    let g1 = compute_levels(
        &rs,
        &roots(&rs, &[&[0, 1], &[-1, 0], &[-1, -1], &[-1, 0]])?,
        &Weight(vec![-2, 1]),
    )?;
    let g2 = yb_transform(&rs, &g1, 0, 3)?;
    Ok((rs, g1, g2))
}

const EXAMPLE_A1: &[&[usize]] = &[
    &[],
    &[1],
    &[2],
    &[3],
    &[4],
    &[1, 2],
    &[1, 4],
    &[2, 4],
    &[3, 4],
    &[1, 2, 3],
    &[1, 2, 4],
    &[1, 2, 3, 4],
];
const EXAMPLE_A2: &[&[usize]] = &[
    &[],
    &[1],
    &[2],
    &[3],
    &[4],
    &[1, 2],
    &[1, 3],
    &[1, 4],
    &[2, 3],
    &[2, 4],
    &[3, 4],
    &[1, 2, 3],
    &[1, 2, 4],
    &[1, 3, 4],
    &[2, 3, 4],
    &[1, 2, 3, 4],
];

pub fn a2_admissible_example() -> Criterion {
    timed(
        2,
        "A2 admissible subsets before and after a Yang-Baxter move",
        || {
            let (rs, g1, g2) = a2_example_chains()?;
            let expected_g2 = roots(&rs, &[&[-1, -1], &[-1, 0], &[0, 1], &[-1, 0]])?;
            ensure!(
                g2.roots() == expected_g2.as_slice(),
                "transformed chain differs"
            );
            let w = rs.parse_word("s2")?;
            let sets = |c: &LambdaChain| -> BTreeSet<Vec<usize>> {
                enumerate_admissible(&rs, w, c)
                    .iter()
                    .map(|a| a.indices().iter().map(|i| i + 1).collect())
                    .collect()
            };
            let want =
                |l: &[&[usize]]| -> BTreeSet<Vec<usize>> { l.iter().map(|s| s.to_vec()).collect() };
            let (s1, s2) = (sets(&g1), sets(&g2));
            let ok = s1 == want(EXAMPLE_A1) && s2 == want(EXAMPLE_A2);
            Ok((
                ok,
                2,
                format!("|A(s2,G1)| = {}, |A(s2,G2)| = {}", s1.len(), s2.len()),
            ))
        },
    )
}

type PathRow = (&'static [&'static [i64]], &'static str, [i64; 2]);

/// Label sequences of the paths from `s2`, with end and down.
const TABLE_P: &[PathRow] = &[
    (&[&[0, 1]], "e", [0, 1]),
    (&[], "s2", [0, 0]),
    (&[&[1, 1]], "s1s2", [0, 0]),
    (&[&[1, 0]], "s2s1", [0, 0]),
    (&[&[1, 0], &[1, 1]], "s1s2s1", [0, 0]),
    (&[&[1, 0], &[0, 1]], "s2s1s2", [0, 0]),
];
const TABLE_Q: &[PathRow] = &[
    (&[&[1, 1], &[0, 1], &[1, 0]], "e", [1, 1]),
    (&[&[1, 1], &[1, 0], &[2, 1]], "e", [1, 1]),
    (&[&[0, 1]], "e", [0, 1]),
    (&[&[1, 1], &[0, 1]], "s1", [0, 1]),
    (&[&[0, 1], &[1, 0]], "s1", [0, 1]),
    (&[], "s2", [0, 0]),
    (&[&[1, 1]], "s1s2", [0, 0]),
    (&[&[1, 1], &[0, 1], &[2, 1]], "s2s1", [0, 1]),
    (&[&[0, 1], &[1, 0], &[2, 1]], "s2s1", [0, 1]),
    (&[&[1, 0]], "s2s1", [0, 0]),
    (&[&[1, 1], &[1, 0]], "s1s2s1", [0, 0]),
    (&[&[1, 1], &[2, 1]], "s2s1s2", [0, 0]),
];
/// `A^(2) -> Y(A)^(2)` in segment-local 1-based positions.
const TABLE_Y: &[(&[usize], &[usize])] = &[
    (&[], &[]),
    (&[2], &[3]),
    (&[3], &[2]),
    (&[4], &[1]),
    (&[2, 3], &[1, 4]),
    (&[2, 4], &[1, 3]),
];
const TABLE_I2: &[(&[usize], &[usize])] = &[
    (&[1, 2], &[2, 3]),
    (&[2, 3], &[1, 2]),
    (&[1, 2, 3], &[1, 3, 4]),
    (&[1, 2, 4], &[2, 3, 4]),
    (&[1, 3, 4], &[1, 2, 3]),
    (&[2, 3, 4], &[1, 2, 4]),
];

pub fn c2_tables() -> Criterion {
    timed(3, "C2 path tables and explicit Yang-Baxter maps", || {
        let rs = rsys("C2")?;
        let pi = roots(&rs, &[&[-2, -1], &[-1, 0], &[0, 1], &[1, 1]])?;
        let rev: Vec<Root> = pi.iter().rev().copied().collect();
        let v = rs.parse_word("s2")?;
        type Key = (Vec<Vec<i64>>, Weyl, Coroot);
        let computed = |p: &[Root]| -> BTreeSet<Key> {
            pi_compatible_paths(&rs, v, p)
                .iter()
                .map(|q| {
                    let labels = q.labels().iter().map(|&r| rs.coeffs(r).to_vec()).collect();
                    (labels, q.end(), q.wt().clone())
                })
                .collect()
        };
        let table = |t: &[PathRow]| -> Result<BTreeSet<Key>> {
            t.iter()
                .map(|(ls, end, down)| {
                    Ok((
                        ls.iter().map(|l| l.to_vec()).collect(),
                        rs.parse_word(end)?,
                        Coroot(down.to_vec()),
                    ))
                })
                .collect()
        };
        let (cp, cq) = (computed(&pi), computed(&rev));
        let mut ok = cp == table(TABLE_P)? && cq == table(TABLE_Q)?;
        let local = |xs: &[usize]| xs.iter().map(|x| x - 1).collect::<Vec<_>>();
        for (a, b) in TABLE_Y {
            let c = classify_segment_path(&rs, &pi, &rev, v, &local(a))?;
            ok &= c.class == PhiClass::Two && c.partner == local(b);
        }
        for (a, b) in TABLE_I2 {
            let c = classify_segment_path(&rs, &rev, &pi, v, &local(a))?;
            ok &= c.class == PhiClass::One && c.partner == local(b);
        }
        Ok((
            ok,
            4,
            format!("{} Pi paths, {} Pi' paths", cp.len(), cq.len()),
        ))
    })
}

pub fn shellability() -> Criterion {
    timed(4, "shellability of reflection orders", || {
        let start = Instant::now();
        let mut cases = 0;
        let mut bad = Vec::new();
        for label in ["A1xA1", "A2", "C2", "G2"] {
            let rs = rsys(label)?;
            let orders = reflection_orders(&rs);
            ensure!(
                orders.len() >= 2,
                "{label}: fewer than two reflection orders"
            );
            for order in &orders {
                for v in rs.weyl_elements() {
                    for w in rs.weyl_elements() {
                        cases += 1;
                        let n = label_increasing_paths(&rs, v, w, order).len();
                        if n != 1 {
                            bad.push(format!(
                                "{label} {}->{}: {n}",
                                rs.word_string(v),
                                rs.word_string(w)
                            ));
                        }
                    }
                }
            }
        }
        let secs = start.elapsed().as_secs_f64();
        Ok((
            bad.is_empty() && secs < 5.0,
            cases,
            format!("{} failures {}", bad.len(), bad.join(" ")),
        ))
    })
}

pub fn yang_baxter() -> Criterion {
    timed(
        5,
        "Yang-Baxter equation for quantum Bruhat operators",
        || {
            let mut notes = Vec::new();
            let mut ok = true;
            let mut cases = 0;
            for label in ["A2", "C2", "G2"] {
                let rs = rsys(label)?;
                let all: Vec<Root> = rs.roots().collect();
                let mut n = 0;
                for &a in &all {
                    for &b in &all {
                        if let Ok(eq) = check_yang_baxter(&rs, a, b) {
                            n += 1;
                            ok &= eq;
                        }
                    }
                }
                ok &= n > 0;
                cases += n;
                notes.push(format!("{label}: {n} pairs"));
            }
            Ok((ok, cases, notes.join(", ")))
        },
    )
}

/// 1-based `(operator, row, col)` of every G2 tabulated entry with a coefficient 3.
pub fn g2_coefficient_three() -> Result<BTreeSet<(usize, usize, usize)>> {
    let rs = rsys("G2")?;
    let mut out = BTreeSet::new();
    for i in 0..12 {
        let m = operator_matrix(&rs, &tabulated_operator(&rs, i)?);
        for r in 0..m.size() {
            for c in 0..m.size() {
                if m.entry(r, c).terms().any(|(_, k)| k.abs() >= 3) {
                    out.insert((i + 1, r + 1, c + 1));
                }
            }
        }
    }
    Ok(out)
}

pub fn matrix_props() -> Criterion {
    timed(
        6,
        "multiplicity relations of rank-2 operator matrices",
        || {
            let mut cases = 0;
            let mut bad = Vec::new();
            for label in ["A1xA1", "A2", "C2", "G2"] {
                let rs = rsys(label)?;
                for order in reflection_orders(&rs) {
                    for k in 0..=order.len() {
                        cases += 1;
                        let rep = verify_matrix_props(&rs, &order, k)?;
                        if !rep.passed() {
                            bad.push(format!("{label} k={k}: {}", rep.violations.join("; ")));
                        }
                    }
                }
            }
            let three = g2_coefficient_three()?;
            let want: BTreeSet<_> = [(9, 4, 6), (10, 7, 9)].into_iter().collect();
            let ok = bad.is_empty() && three == want;
            Ok((
                ok,
                cases,
                format!(
                    "{} violations; G2 coefficient 3 at {three:?} {}",
                    bad.len(),
                    bad.join(" ")
                ),
            ))
        },
    )
}

/// A chain where a single sijection meets all four exceptional G2 families.
pub fn g2_exceptional_chain() -> Result<(RootSystem, LambdaChain, usize, usize)> {
    let rs = rsys("G2")?;
    let cs: [&[i64]; 12] = [
        &[1, 0],
        &[-1, -1],
        &[-2, -1],
        &[-3, -2],
        &[-1, -1],
        &[0, -1],
        &[1, 0],
        &[3, 1],
        &[2, 1],
        &[3, 2],
        &[1, 1],
        &[2, 1],
    ];
    let chain = compute_levels(&rs, &roots(&rs, &cs)?, &Weight(vec![2, -1]))?;
    Ok((rs, chain, 4, 6))
}

type StatKey = (Weyl, Coroot, Weight, i64);

fn signed_stats(subsets: &[qalcove_core::alcove::AdmissibleSubset]) -> BTreeMap<StatKey, i64> {
    let mut m = BTreeMap::new();
    for a in subsets {
        *m.entry((a.ed(), a.down().clone(), a.wt().clone(), a.height()))
            .or_insert(0) += a.sign();
    }
    m.retain(|_, v| *v != 0);
    m
}

/// Outcome of one sijection case.
#[derive(Clone, Debug)]
pub struct SijectionCase {
    pub key: String,
    pub ok: bool,
    pub exceptional: Vec<Exceptional>,
    pub note: String,
}

pub fn sijection_case(
    rs: &RootSystem,
    chain: &LambdaChain,
    t: usize,
    q: usize,
    w: Weyl,
) -> SijectionCase {
    let key = format!(
        "{} lambda={:?} len={} seg=({},{}) w={}",
        rs.label(),
        chain.lambda().0,
        chain.len(),
        t + 1,
        q,
        rs.word_string(w)
    );
    let run = || -> Result<Vec<Exceptional>> {
        let ctx = YbContext::new(rs, chain, t, q)?;
        let s = build_sijection(rs, &ctx, w)?;
        ensure!(
            signed_stats(&s.a1) == signed_stats(&s.a2),
            "signed statistics differ"
        );
        ensure!(
            s.a1.len() == s.y.len() + 2 * s.i1.len(),
            "I1 does not cover the complement"
        );
        ensure!(
            s.a2.len() == s.y.len() + 2 * s.i2.len(),
            "I2 does not cover the complement"
        );
        Ok(s.exceptional_cases())
    };
    match run() {
        Ok(ex) => SijectionCase {
            key,
            ok: true,
            exceptional: ex,
            note: String::new(),
        },
        Err(e) => SijectionCase {
            key,
            ok: false,
            exceptional: Vec::new(),
            note: format!("{e:#}"),
        },
    }
}

/// Seeded sijection cases: random chains with a random segment, every `w`.
pub fn sijection_cases(seed: u64) -> Result<Vec<SijectionCase>> {
    let mut jobs: Vec<(RootSystem, LambdaChain, usize, usize)> = Vec::new();
    for (ti, (label, chains)) in [("A2", 8u64), ("C2", 8), ("G2", 10)]
        .into_iter()
        .enumerate()
    {
        let rs = rsys(label)?;
        let mut made = 0;
        let mut attempt = 0u64;
        while made < chains && attempt < 400 {
            let mut s = Sampler::fork(seed, (ti as u64) << 32 | attempt);
            attempt += 1;
            let Some(chain) = s.chain(&rs, 2, 20) else {
                continue;
            };
            let Some(seg) = s.segment(&rs, &chain) else {
                continue;
            };
            jobs.push((rs.clone(), chain, seg.t, seg.q));
            made += 1;
        }
    }
    let (rs, chain, t, q) = g2_exceptional_chain()?;
    jobs.push((rs, chain, t, q));
    let cases: Vec<SijectionCase> = jobs
        .par_iter()
        .flat_map_iter(|(rs, chain, t, q)| {
            rs.weyl_elements()
                .map(|w| sijection_case(rs, chain, *t, *q, w))
                .collect::<Vec<_>>()
        })
        .collect();
    Ok(cases)
}

pub fn sijections(seed: u64) -> Criterion {
    timed(
        7,
        "Yang-Baxter sijections preserve signed statistics",
        || {
            let start = Instant::now();
            let cases = sijection_cases(seed)?;
            let failed: Vec<&SijectionCase> = cases.iter().filter(|c| !c.ok).collect();
            let seen: BTreeSet<Exceptional> = cases
                .iter()
                .flat_map(|c| c.exceptional.iter().copied())
                .collect();
            let types: BTreeSet<&str> = cases
                .iter()
                .filter_map(|c| c.key.split(' ').next())
                .collect();
            let secs = start.elapsed().as_secs_f64();
            let ok = failed.is_empty()
                && cases.len() >= 50
                && seen.len() == 4
                && types.len() == 3
                && secs < 60.0;
            let mut detail = format!("exceptional {seen:?}; {} failures", failed.len());
            for f in failed.iter().take(5) {
                let _ = write!(detail, "; {}: {}", f.key, f.note);
            }
            Ok((ok, cases.len(), detail))
        },
    )
}

fn point(rs: &RootSystem, s: &mut Sampler) -> AffineWeylElt {
    let w = s.weyl(rs);
    AffineWeylElt::new(w, s.coroot(rs, 1))
}

pub fn genfun_invariance(seed: u64) -> Criterion {
    timed(8, "generating functions agree on related chains", || {
        let mut cases = 0;
        let (mut yb_moves, mut inserted) = (0, 0);
        let mut bad = Vec::new();
        for (ti, label) in ["A2", "C2"].into_iter().enumerate() {
            let rs = rsys(label)?;
            let mut pairs = 0;
            let mut attempt = 0u64;
            while pairs < 12 && attempt < 400 {
                let mut s = Sampler::fork(seed ^ 0x8, (ti as u64) << 32 | attempt);
                attempt += 1;
                let Some(g1) = s.weakly_reduced_chain(&rs, 2, 20) else {
                    continue;
                };
                let (mut g2, moves) = s.yb_walk(&rs, &g1, 3);
                let insert = s.int(0, 1) == 1 || moves == 0;
                if insert {
                    match s.insert_non_simple(&rs, &g2) {
                        Some(g) => g2 = g,
                        None => continue,
                    }
                }
                if !is_weakly_reduced(&rs, &g2) || g2.len() > 24 {
                    continue;
                }
                let x = point(&rs, &mut s);
                pairs += 1;
                yb_moves += moves;
                inserted += usize::from(insert);
                if genfun(&rs, &g1, &x) != genfun(&rs, &g2, &x) {
                    bad.push(format!("{label} {:?}", g1.lambda().0));
                }
            }
            ensure!(pairs >= 10, "{label}: only {pairs} pairs sampled");
            cases += pairs;
            for i in 0..4u64 {
                let mut s = Sampler::fork(seed ^ 0x88, (ti as u64) << 32 | i);
                let lam = s.mixed_weight(&rs, 2);
                let (p, m) = qalcove_core::alcove::lambda_pm(&lam);
                let (lp, lm) = (lex_chain(&rs, &p)?, lex_chain(&rs, &m)?);
                let x = point(&rs, &mut s);
                let a = genfun(&rs, &concat_chains(&rs, &lp, &lm)?, &x);
                let b = genfun(&rs, &concat_chains(&rs, &lm, &lp)?, &x);
                cases += 1;
                if a != b {
                    bad.push(format!("{label} lex pair {:?}", lam.0));
                }
            }
        }
        let detail = format!(
            "{yb_moves} YB moves, {inserted} insertions; {} failures {}",
            bad.len(),
            bad.join(" ")
        );
        Ok((bad.is_empty() && cases >= 20, cases, detail))
    })
}

pub const GHAT_FLOOR: i64 = -8;

pub fn commutativity(seed: u64) -> Criterion {
    timed(9, "composition and commutativity of G and Ĝ", || {
        let mut jobs = Vec::new();
        for (ti, label) in ["A2", "C2", "G2"].into_iter().enumerate() {
            let rs = rsys(label)?;
            for i in 0..4u64 {
                let mut s = Sampler::fork(seed ^ 0x9, (ti as u64) << 32 | i);
                let lam = s.weight(&rs, 2);
                let (l1, l2) = s.cancellation_free_split(&lam);
                let x = point(&rs, &mut s);
                jobs.push((rs.clone(), l1, l2, x));
            }
        }
        let results: Vec<Result<Option<String>>> = jobs
            .par_iter()
            .map(|(rs, l1, l2, x)| {
                let (g1, g2) = (line_chain(rs, l1)?, line_chain(rs, l2)?);
                let whole = concat_chains(rs, &g1, &g2)?;
                let direct = genfun(rs, &whole, x);
                let ok_g = compose(rs, &g2, &g1, x) == direct && compose(rs, &g1, &g2, x) == direct;
                let hat = ghat(rs, &whole, x, GHAT_FLOOR);
                let h21 = compose_ghat(rs, &g2, &g1, x, GHAT_FLOOR)?;
                let h12 = compose_ghat(rs, &g1, &g2, x, GHAT_FLOOR)?;
                let ok_h = genfun_equal(&h21, &hat, Some(GHAT_FLOOR))
                    && genfun_equal(&h12, &hat, Some(GHAT_FLOOR));
                Ok((!(ok_g && ok_h)).then(|| format!("{} {:?}+{:?}", rs.label(), l1.0, l2.0)))
            })
            .collect();
        let mut bad = Vec::new();
        for r in results {
            if let Some(b) = r? {
                bad.push(b);
            }
        }
        Ok((
            bad.is_empty() && jobs.len() >= 10,
            jobs.len(),
            format!(
                "floor {GHAT_FLOOR}; {} failures {}",
                bad.len(),
                bad.join(" ")
            ),
        ))
    })
}

pub const VANISH_FLOOR: i64 = -6;

pub fn vanishing(seed: u64) -> Criterion {
    timed(10, "vanishing at mu = 0", || {
        let mut cases = 0;
        let mut bad = Vec::new();
        let lists: [(&str, &[&[i64]]); 3] = [
            ("A1", &[&[-1], &[-2]]),
            ("A2", &[&[-1, 0], &[0, -1], &[-1, -1], &[-2, 0]]),
            ("C2", &[&[-1, 0], &[0, -1], &[-1, -1], &[-2, 0]]),
        ];
        for (label, lams) in lists {
            let rs = rsys(label)?;
            for lam in lams {
                for w in rs.weyl_elements() {
                    cases += 1;
                    if !verify_vanishing(&rs, &Weight(lam.to_vec()), w)? {
                        bad.push(format!("{label} {lam:?} {}", rs.word_string(w)));
                    }
                }
            }
        }
        let rs = rsys("A2")?;
        let mut lams = BTreeSet::new();
        let mut s = Sampler::new(seed ^ 0x10);
        while lams.len() < 6 {
            lams.insert(s.mixed_weight(&rs, 2).0);
        }
        for lam in &lams {
            let chain = line_chain(&rs, &Weight(lam.clone()))?;
            for w in rs.weyl_elements() {
                let x = AffineWeylElt::new(w, s.coroot(&rs, 1));
                cases += 1;
                if !specialized_rhs(&rs, &chain, &x, VANISH_FLOOR)?.is_empty() {
                    bad.push(format!("A2 rhs {lam:?} {}", rs.word_string(w)));
                }
            }
        }
        Ok((
            bad.is_empty(),
            cases,
            format!(
                "{} mixed weights; {} failures {}",
                lams.len(),
                bad.len(),
                bad.join(" ")
            ),
        ))
    })
}

pub fn symmetry() -> Criterion {
    timed(11, "W-invariance of the dominant height character", || {
        let mut cases = 0;
        let mut bad = Vec::new();
        for label in ["A2", "C2"] {
            let rs = rsys(label)?;
            for lam in [[1, 0], [0, 1], [1, 1]] {
                cases += 1;
                let chain = lex_chain(&rs, &Weight(lam.to_vec()))?;
                if !is_w_invariant(&rs, &height_character(&rs, &chain)) {
                    bad.push(format!("{label} {lam:?}"));
                }
            }
        }
        Ok((
            bad.is_empty(),
            cases,
            format!("{} failures {}", bad.len(), bad.join(" ")),
        ))
    })
}

/// Runs every criterion in order.
pub fn run_all(seed: u64, data: &Path) -> Vec<Criterion> {
    vec![
        golden_matrices(data),
        a2_admissible_example(),
        c2_tables(),
        shellability(),
        yang_baxter(),
        matrix_props(),
        sijections(seed),
        genfun_invariance(seed),
        commutativity(seed),
        vanishing(seed),
        symmetry(),
    ]
}

/// Runs the criteria with the given ids.
pub fn run_selected(ids: &[u8], seed: u64, data: &Path) -> Result<Vec<Criterion>> {
    let mut out = Vec::new();
    for &id in ids {
        out.push(match id {
            1 => golden_matrices(data),
            2 => a2_admissible_example(),
            3 => c2_tables(),
            4 => shellability(),
            5 => yang_baxter(),
            6 => matrix_props(),
            7 => sijections(seed),
            8 => genfun_invariance(seed),
            9 => commutativity(seed),
            10 => vanishing(seed),
            11 => symmetry(),
            _ => bail!("no criterion {id}"),
        });
    }
    Ok(out)
}

/// `case, result, detail` rows, plus wall time when asked for.
pub fn report_tsv(rows: &[Criterion], timings: bool) -> String {
    let mut out = String::from(if timings {
        "case\tresult\tcases\tdetail\twall_ms\n"
    } else {
        "case\tresult\tcases\tdetail\n"
    });
    for c in rows {
        let _ = write!(
            out,
            "{}\t{}\t{}\t{}",
            c.id,
            if c.passed { "PASS" } else { "FAIL" },
            c.cases,
            c.detail.replace('\t', " ")
        );
        if timings {
            let _ = write!(out, "\t{}", c.elapsed.as_millis());
        }
        out.push('\n');
    }
    out
}
