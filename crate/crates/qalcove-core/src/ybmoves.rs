//! Yang-Baxter and deletion moves on λ-chains, and the sijection `(I1, I2, Y)`
//! between the admissible subsets of two chains related by a Yang-Baxter move.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::alcove::{
    admissible_from_indices, compute_levels, enumerate_admissible, AdmissibleSubset, LambdaChain,
};
use crate::error::{Error, Result};
use crate::qbg::{pi_compatible_paths, qbg_edge, DirectedPath};
use crate::rootsys::{Coroot, Root, RootSystem, Weyl};

/// A Yang-Baxter segment `Gamma[t..t+q]` generated by `(alpha, beta)`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct YbSegment {
    pub t: usize,
    pub q: usize,
    pub alpha: Root,
    pub beta: Root,
}

fn segment_at(rs: &RootSystem, chain: &LambdaChain, t: usize, q: usize) -> Result<YbSegment> {
    let roots = chain.roots();
    if q < 2 || t + q > roots.len() {
        return Err(Error::PatternMismatch(format!(
            "segment ({t}, {q}) out of range"
        )));
    }
    let (alpha, beta) = (roots[t], roots[t + q - 1]);
    let sub = rs.rank2_subsystem(alpha, beta).map_err(|_| {
        Error::PatternMismatch(format!(
            "positions {}..{} do not span a Yang-Baxter pair",
            t + 1,
            t + q
        ))
    })?;
    if sub.segment[..] != roots[t..t + q] {
        return Err(Error::PatternMismatch(format!(
            "positions {}..{} do not form a Yang-Baxter segment",
            t + 1,
            t + q
        )));
    }
    Ok(YbSegment { t, q, alpha, beta })
}

/// Reverses the segment `Gamma[t..t+q]`.
pub fn yb_transform(
    rs: &RootSystem,
    chain: &LambdaChain,
    t: usize,
    q: usize,
) -> Result<LambdaChain> {
    segment_at(rs, chain, t, q)?;
    let mut roots = chain.roots().to_vec();
    roots[t..t + q].reverse();
    compute_levels(rs, &roots, chain.lambda())
}

/// Removes the pair `(beta, -beta)` at positions `u, u+1`.
pub fn delete_pair(rs: &RootSystem, chain: &LambdaChain, u: usize) -> Result<LambdaChain> {
    let roots = chain.roots();
    if u + 1 >= roots.len() || roots[u + 1] != rs.neg(roots[u]) {
        return Err(Error::PatternMismatch(format!(
            "positions {}, {} are not (beta, -beta)",
            u + 1,
            u + 2
        )));
    }
    let mut r = roots.to_vec();
    r.drain(u..u + 2);
    compute_levels(rs, &r, chain.lambda())
}

/// Inserts `(beta, -beta)` before position `u`; fails unless the alcove
/// there has a wall orthogonal to `beta`.
pub fn insert_pair(
    rs: &RootSystem,
    chain: &LambdaChain,
    u: usize,
    beta: Root,
) -> Result<LambdaChain> {
    let mut r = chain.roots().to_vec();
    if u > r.len() {
        return Err(Error::PatternMismatch(format!("position {u} out of range")));
    }
    r.splice(u..u, [beta, rs.neg(beta)]);
    compute_levels(rs, &r, chain.lambda())
}

/// All `(t, q)` at which a Yang-Baxter move applies.
pub fn find_yb_segments(rs: &RootSystem, chain: &LambdaChain) -> Vec<YbSegment> {
    let mut out = Vec::new();
    for t in 0..chain.len() {
        for q in [2, 3, 4, 6] {
            if YbContext::new(rs, chain, t, q).is_ok() {
                out.push(segment_at(rs, chain, t, q).unwrap());
            }
        }
    }
    out
}

/// Two chains related by a single Yang-Baxter move.
#[derive(Clone, Debug)]
pub struct YbContext {
    pub gamma1: LambdaChain,
    pub gamma2: LambdaChain,
    pub segment: YbSegment,
}

impl YbContext {
    pub fn new(rs: &RootSystem, chain: &LambdaChain, t: usize, q: usize) -> Result<Self> {
        let segment = segment_at(rs, chain, t, q)?;
        let gamma2 = yb_transform(rs, chain, t, q)?;
        let (l1, l2) = (chain.levels(), gamma2.levels());
        if (1..=q).any(|p| l2[t + p - 1] != l1[t + q - p]) {
            return Err(Error::PatternMismatch(String::from(
                "levels are not reversed by the move",
            )));
        }
        Ok(YbContext {
            gamma1: chain.clone(),
            gamma2,
            segment,
        })
    }

    pub fn t(&self) -> usize {
        self.segment.t
    }

    pub fn q(&self) -> usize {
        self.segment.q
    }

    /// `Gamma1^(2)`.
    pub fn pi(&self) -> &[Root] {
        &self.gamma1.roots()[self.t()..self.t() + self.q()]
    }

    /// `Gamma2^(2)`.
    pub fn pi_prime(&self) -> &[Root] {
        &self.gamma2.roots()[self.t()..self.t() + self.q()]
    }
}

/// The class `phi(A)` of an admissible subset; values 3 to 5 only occur in
/// the exceptional G2 configurations.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub enum PhiClass {
    One = 1,
    Two = 2,
    Three = 3,
    Four = 4,
    Five = 5,
}

impl PhiClass {
    pub fn value(self) -> u8 {
        self as u8
    }

    /// Classes handled by `Y`; the rest are paired by an involution.
    pub fn in_core(self) -> bool {
        matches!(self, PhiClass::Two | PhiClass::Four | PhiClass::Five)
    }
}

/// Which of the four exceptional G2 configurations applies.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash, PartialOrd, Ord)]
pub enum Exceptional {
    E1,
    E2,
    E3,
    E4,
}

pub mod g2_families {
    //! The explicit path families of the exceptional G2 configurations, as
    //! `(label, target)` steps from the start vertex.

    pub type FamilyPath = (&'static str, &'static [([i64; 2], &'static str)]);

    pub const P1_E1: FamilyPath = (
        "s1s2s1",
        &[([3, 2], "s2s1s2s1"), ([3, 1], "s2"), ([1, 1], "s1s2")],
    );
    pub const P2_E1: FamilyPath = ("s1s2s1", &[([3, 1], "e"), ([1, 0], "s1"), ([0, 1], "s1s2")]);
    pub const P3_E1: FamilyPath = ("s1s2s1", &[([3, 1], "e"), ([0, 1], "s2"), ([1, 1], "s1s2")]);
    pub const Q_E1: FamilyPath = (
        "s1s2s1",
        &[
            ([0, 1], "s1s2s1s2"),
            ([1, 0], "s1s2s1s2s1"),
            ([3, 1], "s1s2"),
        ],
    );

    pub const P_E3: FamilyPath = (
        "s2s1s2s1",
        &[([3, 1], "s2"), ([1, 0], "s2s1"), ([0, 1], "s2s1s2")],
    );
    pub const Q1_E3: FamilyPath = (
        "s2s1s2s1",
        &[([1, 1], "s1s2s1s2s1"), ([3, 1], "s1s2"), ([3, 2], "s2s1s2")],
    );
    // The last label is 3a1+a2: from w0 the edge labelled 3a1+2a2 lands on s1.
    pub const Q2_E3: FamilyPath = (
        "s2s1s2s1",
        &[([0, 1], "s2s1s2s1s2"), ([1, 0], "w0"), ([3, 1], "s2s1s2")],
    );
    pub const Q3_E3: FamilyPath = (
        "s2s1s2s1",
        &[([1, 1], "s1s2s1s2s1"), ([0, 1], "w0"), ([3, 1], "s2s1s2")],
    );

    /// Root pattern of the segment in cases E1 and E3, up to a global sign.
    pub const PATTERN_13: [[i64; 2]; 6] = [[3, 2], [2, 1], [3, 1], [1, 0], [0, -1], [-1, -1]];
    /// Root pattern of the segment in cases E2 and E4, up to a global sign.
    pub const PATTERN_24: [[i64; 2]; 6] = [[1, 1], [0, 1], [-1, 0], [-3, -1], [-2, -1], [-3, -2]];

    pub struct Case {
        pub pattern: &'static [[i64; 2]; 6],
        pub v: &'static str,
        pub ed: &'static str,
        /// Paths on the segment's own side.
        pub own: &'static [FamilyPath],
        /// Paths on the reversed side.
        pub other: &'static [FamilyPath],
    }

    pub const E1: Case = Case {
        pattern: &PATTERN_13,
        v: "s1s2s1",
        ed: "s1s2",
        own: &[P1_E1, P2_E1, P3_E1],
        other: &[Q_E1],
    };
    pub const E2: Case = Case {
        pattern: &PATTERN_24,
        v: "s1s2s1",
        ed: "s1s2",
        own: &[Q_E1],
        other: &[P1_E1, P2_E1, P3_E1],
    };
    pub const E3: Case = Case {
        pattern: &PATTERN_13,
        v: "s2s1s2s1",
        ed: "s2s1s2",
        own: &[P_E3],
        other: &[Q1_E3, Q2_E3, Q3_E3],
    };
    pub const E4: Case = Case {
        pattern: &PATTERN_24,
        v: "s2s1s2s1",
        ed: "s2s1s2",
        own: &[Q1_E3, Q2_E3, Q3_E3],
        other: &[P_E3],
    };
}

fn case_data(c: Exceptional) -> &'static g2_families::Case {
    match c {
        Exceptional::E1 => &g2_families::E1,
        Exceptional::E2 => &g2_families::E2,
        Exceptional::E3 => &g2_families::E3,
        Exceptional::E4 => &g2_families::E4,
    }
}

/// Local index set of a family path inside `pi`, after checking that the path
/// is a genuine path in the quantum Bruhat graph.
fn family_path_indices(
    rs: &RootSystem,
    pi: &[Root],
    path: &g2_families::FamilyPath,
) -> Result<Vec<usize>> {
    let defect = |m: &str| Error::Defect(format!("G2 family path {}: {m}", path.0));
    let mut v = rs.parse_word(path.0)?;
    let mut idx = Vec::new();
    let mut from = 0;
    for (label, target) in path.1 {
        let r = rs.root(label)?;
        let e = qbg_edge(rs, v, r).ok_or_else(|| defect("missing edge"))?;
        if e.target != rs.parse_word(target)? {
            return Err(defect("wrong target"));
        }
        let j = (from..pi.len())
            .find(|&j| rs.abs(pi[j]) == r)
            .ok_or_else(|| defect("label not in the segment in order"))?;
        idx.push(j);
        from = j + 1;
        v = e.target;
    }
    Ok(idx)
}

fn matches_pattern(rs: &RootSystem, pi: &[Root], pattern: &[[i64; 2]; 6]) -> bool {
    if rs.rank() != 2 || pi.len() != 6 {
        return false;
    }
    [1i64, -1].iter().any(|&s| {
        pi.iter()
            .zip(pattern)
            .all(|(&r, p)| rs.coeffs(r) == [s * p[0], s * p[1]])
    })
}

/// Detects an exceptional G2 configuration for a segment path starting at
/// `v` with the given end and weight.
pub fn exceptional_case(
    rs: &RootSystem,
    pi: &[Root],
    v: Weyl,
    ed: Weyl,
    wt: &Coroot,
) -> Option<Exceptional> {
    if rs.label() != "G2" || wt.0 != [1, 1] {
        return None;
    }
    [
        Exceptional::E1,
        Exceptional::E2,
        Exceptional::E3,
        Exceptional::E4,
    ]
    .into_iter()
    .find(|&c| {
        let d = case_data(c);
        matches_pattern(rs, pi, d.pattern)
            && rs.parse_word(d.v).ok() == Some(v)
            && rs.parse_word(d.ed).ok() == Some(ed)
    })
}

/// Result of classifying a segment path.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Classification {
    pub class: PhiClass,
    pub exceptional: Option<Exceptional>,
    /// Local index set of the partner path: on the reversed side for classes
    /// 2, 4, 5 and on the same side for classes 1, 3.
    pub partner: Vec<usize>,
}

fn same_stats(p: &DirectedPath, q: &DirectedPath) -> bool {
    p.end() == q.end() && p.wt() == q.wt()
}

/// Classifies the segment path with local indices `local` starting at `v`,
/// where `pi` is this side's segment and `pi_other` the reversed one.
pub fn classify_segment_path(
    rs: &RootSystem,
    pi: &[Root],
    pi_other: &[Root],
    v: Weyl,
    local: &[usize],
) -> Result<Classification> {
    let own = pi_compatible_paths(rs, v, pi);
    let p = own
        .iter()
        .find(|p| p.indices() == local)
        .ok_or_else(|| Error::NotAdmissible(local.to_vec()))?;
    let other = pi_compatible_paths(rs, v, pi_other);
    let same: Vec<Vec<usize>> = own
        .iter()
        .filter(|x| same_stats(x, p) && x.indices() != local)
        .map(|x| x.indices())
        .collect();
    let primes: Vec<Vec<usize>> = other
        .iter()
        .filter(|x| same_stats(x, p))
        .map(|x| x.indices())
        .collect();

    if let Some(case) = exceptional_case(rs, pi, v, p.end(), p.wt()) {
        let d = case_data(case);
        let fam_own = d
            .own
            .iter()
            .map(|s| family_path_indices(rs, pi, s))
            .collect::<Result<Vec<_>>>()?;
        let fam_other = d
            .other
            .iter()
            .map(|s| family_path_indices(rs, pi_other, s))
            .collect::<Result<Vec<_>>>()?;
        let mut all_own = same.clone();
        all_own.push(local.to_vec());
        all_own.sort();
        let mut expect_own = fam_own.clone();
        expect_own.sort();
        let mut expect_other = fam_other.clone();
        expect_other.sort();
        let mut got_other = primes.clone();
        got_other.sort();
        if all_own != expect_own || got_other != expect_other {
            return Err(Error::Defect(format!(
                "{case:?}: path families do not match the enumeration"
            )));
        }
        let (class, partner) = if fam_own.len() == 3 {
            // p1 <-> p3 under the involution, p2 goes to q under Y.
            match fam_own.iter().position(|f| f == local) {
                Some(0) => (PhiClass::Three, fam_own[2].clone()),
                Some(2) => (PhiClass::Three, fam_own[0].clone()),
                _ => (PhiClass::Four, fam_other[0].clone()),
            }
        } else {
            (PhiClass::Five, fam_other[1].clone())
        };
        return Ok(Classification {
            class,
            exceptional: Some(case),
            partner,
        });
    }

    match (same.len(), primes.len()) {
        (1, 0) | (1, 2) => Ok(Classification {
            class: PhiClass::One,
            exceptional: None,
            partner: same[0].clone(),
        }),
        (0, 1) => Ok(Classification {
            class: PhiClass::Two,
            exceptional: None,
            partner: primes[0].clone(),
        }),
        (a, b) => Err(Error::Defect(format!(
            "segment path {local:?} from {} has {a} same-side and {b} reversed-side matches",
            rs.word_string(v)
        ))),
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Side {
    First,
    Second,
}

fn side_chains(ctx: &YbContext, side: Side) -> (&LambdaChain, &LambdaChain, &[Root], &[Root]) {
    match side {
        Side::First => (&ctx.gamma1, &ctx.gamma2, ctx.pi(), ctx.pi_prime()),
        Side::Second => (&ctx.gamma2, &ctx.gamma1, ctx.pi_prime(), ctx.pi()),
    }
}

fn classify_on(
    rs: &RootSystem,
    ctx: &YbContext,
    side: Side,
    a: &AdmissibleSubset,
) -> Result<(Classification, Vec<usize>)> {
    let (_, _, pi, pi_other) = side_chains(ctx, side);
    let (t, q) = (ctx.t(), ctx.q());
    let idx = a.indices();
    let before = idx.iter().filter(|&&j| j < t).count();
    let v = a.path().vertices()[before];
    let local: Vec<usize> = idx
        .iter()
        .filter(|&&j| j >= t && j < t + q)
        .map(|j| j - t)
        .collect();
    let c = classify_segment_path(rs, pi, pi_other, v, &local)?;
    Ok((c, idx))
}

fn replace_segment(idx: &[usize], t: usize, q: usize, local: &[usize]) -> Vec<usize> {
    let mut out: Vec<usize> = idx.iter().copied().filter(|&j| j < t).collect();
    out.extend(local.iter().map(|j| j + t));
    out.extend(idx.iter().copied().filter(|&j| j >= t + q));
    out
}

/// `phi(A)` for `A` in `A(w, Gamma1)`.
pub fn classify_phi(rs: &RootSystem, ctx: &YbContext, a: &AdmissibleSubset) -> Result<PhiClass> {
    Ok(classify_on(rs, ctx, Side::First, a)?.0.class)
}

/// `phi'(B)` for `B` in `A(w, Gamma2)`.
pub fn classify_phi_prime(
    rs: &RootSystem,
    ctx: &YbContext,
    b: &AdmissibleSubset,
) -> Result<PhiClass> {
    Ok(classify_on(rs, ctx, Side::Second, b)?.0.class)
}

fn apply_map(
    rs: &RootSystem,
    ctx: &YbContext,
    side: Side,
    a: &AdmissibleSubset,
    want_core: bool,
) -> Result<AdmissibleSubset> {
    let (c, idx) = classify_on(rs, ctx, side, a)?;
    if c.class.in_core() != want_core {
        return Err(Error::Domain(format!(
            "subset of class {} is outside the map's domain",
            c.class.value()
        )));
    }
    let (own, other, _, _) = side_chains(ctx, side);
    let target = if want_core { other } else { own };
    admissible_from_indices(
        rs,
        a.w(),
        target,
        &replace_segment(&idx, ctx.t(), ctx.q(), &c.partner),
    )
}

/// `Y(A)`, for `A` of class 2, 4 or 5.
pub fn yb_y(rs: &RootSystem, ctx: &YbContext, a: &AdmissibleSubset) -> Result<AdmissibleSubset> {
    apply_map(rs, ctx, Side::First, a, true)
}

/// `Y^{-1}(B)`, for `B` of class 2, 4 or 5.
pub fn yb_y_inverse(
    rs: &RootSystem,
    ctx: &YbContext,
    b: &AdmissibleSubset,
) -> Result<AdmissibleSubset> {
    apply_map(rs, ctx, Side::Second, b, true)
}

/// `I1(A)`, for `A` of class 1 or 3.
pub fn yb_i1(rs: &RootSystem, ctx: &YbContext, a: &AdmissibleSubset) -> Result<AdmissibleSubset> {
    apply_map(rs, ctx, Side::First, a, false)
}

/// `I2(B)`, for `B` of class 1 or 3.
pub fn yb_i2(rs: &RootSystem, ctx: &YbContext, b: &AdmissibleSubset) -> Result<AdmissibleSubset> {
    apply_map(rs, ctx, Side::Second, b, false)
}

/// The full sijection `A(w, Gamma1) -> A(w, Gamma2)`, verified on construction.
#[derive(Clone, Debug)]
pub struct Sijection {
    pub w: Weyl,
    pub a1: Vec<AdmissibleSubset>,
    pub a2: Vec<AdmissibleSubset>,
    pub phi1: Vec<Classification>,
    pub phi2: Vec<Classification>,
    /// `(i, j)` with `Y(a1[i]) = a2[j]`.
    pub y: Vec<(usize, usize)>,
    /// Pairs `(i, j)`, `i < j`, of `I1`.
    pub i1: Vec<(usize, usize)>,
    /// Pairs `(i, j)`, `i < j`, of `I2`.
    pub i2: Vec<(usize, usize)>,
}

impl Sijection {
    pub fn exceptional_cases(&self) -> Vec<Exceptional> {
        let mut v: Vec<Exceptional> = self
            .phi1
            .iter()
            .chain(&self.phi2)
            .filter_map(|c| c.exceptional)
            .collect();
        v.sort();
        v.dedup();
        v
    }
}

fn preserved(a: &AdmissibleSubset, b: &AdmissibleSubset) -> bool {
    a.ed() == b.ed() && a.down() == b.down() && a.wt() == b.wt() && a.height() == b.height()
}

/// Classifications, then the `Y`-pairs and `I`-pairs found on one side.
type SideParts = (
    Vec<Classification>,
    Vec<(usize, usize)>,
    Vec<(usize, usize)>,
);

fn build_side(
    rs: &RootSystem,
    ctx: &YbContext,
    side: Side,
    own: &[AdmissibleSubset],
    other_pos: &BTreeMap<Vec<usize>, usize>,
    own_pos: &BTreeMap<Vec<usize>, usize>,
) -> Result<SideParts> {
    let (t, q) = (ctx.t(), ctx.q());
    let mut classes = Vec::with_capacity(own.len());
    let mut core = Vec::new();
    let mut inv = Vec::new();
    for (i, a) in own.iter().enumerate() {
        let (c, idx) = classify_on(rs, ctx, side, a)?;
        let target = replace_segment(&idx, t, q, &c.partner);
        let lookup = if c.class.in_core() {
            other_pos
        } else {
            own_pos
        };
        let j = *lookup.get(&target).ok_or_else(|| {
            Error::Defect(format!("partner {target:?} of {idx:?} is not admissible"))
        })?;
        if c.class.in_core() {
            core.push((i, j));
        } else {
            inv.push((i, j));
        }
        classes.push(c);
    }
    Ok((classes, core, inv))
}

fn check_involution(
    subsets: &[AdmissibleSubset],
    classes: &[Classification],
    pairs: &[(usize, usize)],
) -> Result<Vec<(usize, usize)>> {
    let map: BTreeMap<usize, usize> = pairs.iter().copied().collect();
    let mut out = Vec::new();
    for (&i, &j) in &map {
        if i == j || map.get(&j) != Some(&i) || classes[j].class.in_core() {
            return Err(Error::Defect(format!(
                "involution fails at {:?}",
                subsets[i].indices()
            )));
        }
        let (a, b) = (&subsets[i], &subsets[j]);
        if a.sign() != -b.sign() || !preserved(a, b) {
            return Err(Error::Defect(format!(
                "involution changes statistics at {:?}",
                a.indices()
            )));
        }
        if i < j {
            out.push((i, j));
        }
    }
    Ok(out)
}

/// Builds and verifies the sijection for a given `w`.
pub fn build_sijection(rs: &RootSystem, ctx: &YbContext, w: Weyl) -> Result<Sijection> {
    let a1 = enumerate_admissible(rs, w, &ctx.gamma1);
    let a2 = enumerate_admissible(rs, w, &ctx.gamma2);
    let pos = |v: &[AdmissibleSubset]| -> BTreeMap<Vec<usize>, usize> {
        v.iter()
            .enumerate()
            .map(|(i, a)| (a.indices(), i))
            .collect()
    };
    let (p1, p2) = (pos(&a1), pos(&a2));
    let (phi1, y, inv1) = build_side(rs, ctx, Side::First, &a1, &p2, &p1)?;
    let (phi2, y_back, inv2) = build_side(rs, ctx, Side::Second, &a2, &p1, &p2)?;

    // Y is a bijection between the two cores, and the reverse classification
    // recovers its inverse.
    let mut yb: Vec<(usize, usize)> = y_back.iter().map(|&(j, i)| (i, j)).collect();
    yb.sort();
    let mut ys = y.clone();
    ys.sort();
    if ys != yb {
        return Err(Error::Defect(String::from(
            "Y is not a bijection between the cores",
        )));
    }
    for &(i, j) in &y {
        if a1[i].sign() != a2[j].sign() || !preserved(&a1[i], &a2[j]) {
            return Err(Error::Defect(format!(
                "Y changes statistics at {:?}",
                a1[i].indices()
            )));
        }
    }
    let i1 = check_involution(&a1, &phi1, &inv1)?;
    let i2 = check_involution(&a2, &phi2, &inv2)?;
    Ok(Sijection {
        w,
        a1,
        a2,
        phi1,
        phi2,
        y,
        i1,
        i2,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::Weight;
    use alloc::vec;

    fn roots(rs: &RootSystem, cs: &[&[i64]]) -> Vec<Root> {
        cs.iter().map(|c| rs.root(c).unwrap()).collect()
    }

    #[test]
    fn a2_example_move() {
        let rs = RootSystem::new("A2", 2).unwrap();
        let lam = Weight(vec![-2, 1]);
        let g1 = compute_levels(
            &rs,
            &roots(&rs, &[&[0, 1], &[-1, 0], &[-1, -1], &[-1, 0]]),
            &lam,
        )
        .unwrap();
        let g2 = yb_transform(&rs, &g1, 0, 3).unwrap();
        assert_eq!(
            g2.roots(),
            &roots(&rs, &[&[-1, -1], &[-1, 0], &[0, 1], &[-1, 0]])[..]
        );
        assert_eq!(yb_transform(&rs, &g2, 0, 3).unwrap(), g1);
        let ctx = YbContext::new(&rs, &g1, 0, 3).unwrap();
        let s = build_sijection(&rs, &ctx, rs.simple_reflection(1)).unwrap();
        assert_eq!(s.a1.len(), 12);
        assert_eq!(s.a2.len(), 16);
        assert_eq!(s.a1.len() - s.y.len(), 2 * s.i1.len());
        assert_eq!(s.a2.len() - s.y.len(), 2 * s.i2.len());
    }

    #[test]
    fn delete_and_insert() {
        let rs = RootSystem::new("A2", 2).unwrap();
        let g = compute_levels(&rs, &roots(&rs, &[&[1, 0], &[1, 1]]), &Weight(vec![1, 0])).unwrap();
        let th = rs.highest_root();
        let bigger = insert_pair(&rs, &g, 1, th).unwrap();
        assert_eq!(bigger.len(), 4);
        assert_eq!(delete_pair(&rs, &bigger, 1).unwrap(), g);
        assert!(delete_pair(&rs, &g, 0).is_err());
    }

    #[test]
    fn family_paths_are_qbg_paths() {
        let rs = RootSystem::new("G2", 2).unwrap();
        let pat: Vec<Root> = g2_families::PATTERN_13
            .iter()
            .map(|c| rs.root(c).unwrap())
            .collect();
        let pat2: Vec<Root> = g2_families::PATTERN_24
            .iter()
            .map(|c| rs.root(c).unwrap())
            .collect();
        for s in [
            g2_families::P1_E1,
            g2_families::P2_E1,
            g2_families::P3_E1,
            g2_families::P_E3,
        ] {
            family_path_indices(&rs, &pat, &s).unwrap();
        }
        for s in [
            g2_families::Q_E1,
            g2_families::Q1_E3,
            g2_families::Q2_E3,
            g2_families::Q3_E3,
        ] {
            family_path_indices(&rs, &pat2, &s).unwrap();
        }
    }

    #[test]
    fn exceptional_classes() {
        let rs = RootSystem::new("G2", 2).unwrap();
        let pi: Vec<Root> = g2_families::PATTERN_13
            .iter()
            .map(|c| rs.root(c).unwrap())
            .collect();
        let mut rev = pi.clone();
        rev.reverse();
        let v = rs.parse_word("s1s2s1").unwrap();
        let p2 = family_path_indices(&rs, &pi, &g2_families::P2_E1).unwrap();
        let c = classify_segment_path(&rs, &pi, &rev, v, &p2).unwrap();
        assert_eq!(
            (c.class, c.exceptional),
            (PhiClass::Four, Some(Exceptional::E1))
        );
        let p1 = family_path_indices(&rs, &pi, &g2_families::P1_E1).unwrap();
        let c = classify_segment_path(&rs, &pi, &rev, v, &p1).unwrap();
        assert_eq!(c.class, PhiClass::Three);
        assert_eq!(
            c.partner,
            family_path_indices(&rs, &pi, &g2_families::P3_E1).unwrap()
        );
        let v3 = rs.parse_word("s2s1s2s1").unwrap();
        let p = family_path_indices(&rs, &pi, &g2_families::P_E3).unwrap();
        let c = classify_segment_path(&rs, &pi, &rev, v3, &p).unwrap();
        assert_eq!(
            (c.class, c.exceptional),
            (PhiClass::Five, Some(Exceptional::E3))
        );
    }

    #[test]
    fn c2_tables_for_v_s2() {
        let rs = RootSystem::new("C2", 2).unwrap();
        let pi = roots(&rs, &[&[-2, -1], &[-1, 0], &[0, 1], &[1, 1]]);
        let mut rev = pi.clone();
        rev.reverse();
        let v = rs.simple_reflection(1);
        let one = |xs: &[usize]| xs.iter().map(|x| x - 1).collect::<Vec<_>>();
        let y = [
            (&[][..], &[][..]),
            (&[2], &[3]),
            (&[3], &[2]),
            (&[4], &[1]),
            (&[2, 3], &[1, 4]),
            (&[2, 4], &[1, 3]),
        ];
        let own = pi_compatible_paths(&rs, v, &pi);
        assert_eq!(own.len(), 6);
        for (a, b) in y {
            let c = classify_segment_path(&rs, &pi, &rev, v, &one(a)).unwrap();
            assert_eq!((c.class, c.partner), (PhiClass::Two, one(b)));
            let back = classify_segment_path(&rs, &rev, &pi, v, &one(b)).unwrap();
            assert_eq!((back.class, back.partner), (PhiClass::Two, one(a)));
        }
        let i2 = [
            (&[1, 2][..], &[2, 3][..]),
            (&[1, 2, 3], &[1, 3, 4]),
            (&[1, 2, 4], &[2, 3, 4]),
        ];
        assert_eq!(pi_compatible_paths(&rs, v, &rev).len(), 12);
        for (a, b) in i2 {
            let c = classify_segment_path(&rs, &rev, &pi, v, &one(a)).unwrap();
            assert_eq!((c.class, c.partner), (PhiClass::One, one(b)));
        }
    }

    #[test]
    fn g2_all_exceptional_cases() {
        let rs = RootSystem::new("G2", 2).unwrap();
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
        let g = compute_levels(&rs, &roots(&rs, &cs), &Weight(vec![2, -1])).unwrap();
        let ctx = YbContext::new(&rs, &g, 4, 6).unwrap();
        let s = build_sijection(&rs, &ctx, rs.parse_word("s1s2s1").unwrap()).unwrap();
        assert_eq!(
            s.exceptional_cases(),
            vec![
                Exceptional::E1,
                Exceptional::E2,
                Exceptional::E3,
                Exceptional::E4
            ]
        );
        assert!(s.phi1.iter().any(|c| c.class == PhiClass::Four));
        assert!(s.phi2.iter().any(|c| c.class == PhiClass::Five));
    }
}
