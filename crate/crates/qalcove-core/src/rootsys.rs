//! Finite root systems and Weyl groups generated from a Cartan matrix.
//!
//! Conventions: `a_ij = <alpha_j, alpha_i^vee>`, roots are stored in the
//! simple-root basis, coroots in the simple-coroot basis and weights in the
//! fundamental-weight basis. Weyl group elements are indices into a table
//! sorted in ShortLex order of their canonical reduced words, so index 0 is
//! the identity and the last index is the longest element.

use alloc::collections::{BTreeMap, VecDeque};
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Reverse;
use core::ops::{Add, AddAssign, Neg, Sub, SubAssign};

use num_rational::Ratio;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};

pub type Rat = Ratio<i64>;

/// Largest rank accepted by [`RootSystem::new`].
pub const MAX_RANK: usize = 4;

/// A root, as an index into the root table of its [`RootSystem`].
///
/// Positive roots come first, ordered by height; the negative of positive
/// root `i` has index `i + |positive roots|`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Root(u16);

impl Root {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// A Weyl group element, as an index into the ShortLex-sorted element table.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Weyl(u16);

impl Weyl {
    pub const IDENTITY: Weyl = Weyl(0);

    pub fn index(self) -> usize {
        self.0 as usize
    }
}

macro_rules! int_vector {
    ($name:ident, $doc:literal) => {
        #[doc = $doc]
        #[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
        pub struct $name(pub Vec<i64>);

        impl $name {
            pub fn zero(n: usize) -> Self {
                $name(vec![0; n])
            }

            pub fn is_zero(&self) -> bool {
                self.0.iter().all(|&x| x == 0)
            }

            pub fn scaled(&self, k: i64) -> Self {
                $name(self.0.iter().map(|&x| x * k).collect())
            }

            pub fn as_slice(&self) -> &[i64] {
                &self.0
            }

            pub fn unit(n: usize, i: usize) -> Self {
                let mut v = vec![0; n];
                v[i] = 1;
                $name(v)
            }
        }

        impl From<Vec<i64>> for $name {
            fn from(v: Vec<i64>) -> Self {
                $name(v)
            }
        }

        impl<'a> Add<&'a $name> for &'a $name {
            type Output = $name;
            fn add(self, o: &$name) -> $name {
                $name(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
            }
        }

        impl<'a> Sub<&'a $name> for &'a $name {
            type Output = $name;
            fn sub(self, o: &$name) -> $name {
                $name(self.0.iter().zip(&o.0).map(|(a, b)| a - b).collect())
            }
        }

        impl Add for $name {
            type Output = $name;
            fn add(self, o: $name) -> $name {
                &self + &o
            }
        }

        impl Sub for $name {
            type Output = $name;
            fn sub(self, o: $name) -> $name {
                &self - &o
            }
        }

        impl AddAssign<&$name> for $name {
            fn add_assign(&mut self, o: &$name) {
                for (a, b) in self.0.iter_mut().zip(&o.0) {
                    *a += b;
                }
            }
        }

        impl SubAssign<&$name> for $name {
            fn sub_assign(&mut self, o: &$name) {
                for (a, b) in self.0.iter_mut().zip(&o.0) {
                    *a -= b;
                }
            }
        }

        impl Neg for $name {
            type Output = $name;
            fn neg(self) -> $name {
                $name(self.0.into_iter().map(|x| -x).collect())
            }
        }

        impl Neg for &$name {
            type Output = $name;
            fn neg(self) -> $name {
                $name(self.0.iter().map(|x| -x).collect())
            }
        }
    };
}

int_vector!(
    Weight,
    "An integral weight in the fundamental-weight basis."
);
int_vector!(
    Coroot,
    "An element of the coroot lattice in the simple-coroot basis."
);

impl Weight {
    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&x| x >= 0)
    }

    pub fn is_antidominant(&self) -> bool {
        self.0.iter().all(|&x| x <= 0)
    }
}

/// A rational point of the real weight space, in the fundamental-weight basis.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RationalPoint(pub Vec<Rat>);

impl RationalPoint {
    pub fn from_weight(w: &Weight) -> Self {
        RationalPoint(w.0.iter().map(|&x| Rat::from_integer(x)).collect())
    }

    /// The point as an integral weight, if it is one.
    pub fn to_weight(&self) -> Option<Weight> {
        self.0
            .iter()
            .map(|x| x.is_integer().then(|| x.to_integer()))
            .collect::<Option<Vec<_>>>()
            .map(Weight)
    }
}

/// Type of the rank-2 subsystem spanned by a Yang-Baxter pair.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Rank2Type {
    A1xA1,
    A2,
    C2,
    G2,
}

impl Rank2Type {
    pub fn segment_len(self) -> usize {
        match self {
            Rank2Type::A1xA1 => 2,
            Rank2Type::A2 => 3,
            Rank2Type::C2 => 4,
            Rank2Type::G2 => 6,
        }
    }
}

#[derive(Clone, Debug)]
pub struct Rank2Subsystem {
    pub kind: Rank2Type,
    /// `(alpha, s_alpha(beta), s_alpha s_beta(alpha), ..., s_beta(alpha), beta)`.
    pub segment: Vec<Root>,
}

#[derive(Clone, Debug)]
struct RootData {
    coeffs: Vec<i64>,
    coroot: Vec<i64>,
    weight: Vec<i64>,
}

#[derive(Clone, Debug)]
struct ElemData {
    word: Vec<u8>,
    mat: Vec<i64>,
    perm: Vec<u16>,
    inverse: u16,
    rmul_simple: Vec<u16>,
    rmul_refl: Vec<u16>,
}

/// A finite root system together with its fully enumerated Weyl group.
#[derive(Clone, Debug)]
pub struct RootSystem {
    label: String,
    rank: usize,
    cartan: Vec<Vec<i64>>,
    roots: Vec<RootData>,
    npos: usize,
    root_index: BTreeMap<Vec<i64>, u16>,
    refl: Vec<u16>,
    elems: Vec<ElemData>,
    elem_index: BTreeMap<Vec<i64>, u16>,
    theta: Root,
}

#[allow(clippy::needless_range_loop)]
fn cartan_of_simple(kind: char, n: usize) -> Option<Vec<Vec<i64>>> {
    let mut a = vec![vec![0i64; n]; n];
    for i in 0..n {
        a[i][i] = 2;
    }
    let chain = |a: &mut Vec<Vec<i64>>, upto: usize| {
        for i in 0..upto.saturating_sub(1) {
            a[i][i + 1] = -1;
            a[i + 1][i] = -1;
        }
    };
    match (kind, n) {
        ('A', 1..) => chain(&mut a, n),
        ('B', 2..) => {
            chain(&mut a, n);
            a[n - 1][n - 2] = -2;
        }
        ('C', 2..) => {
            chain(&mut a, n);
            a[n - 2][n - 1] = -2;
        }
        ('D', 4..) => {
            chain(&mut a, n - 1);
            a[n - 3][n - 1] = -1;
            a[n - 1][n - 3] = -1;
        }
        ('F', 4) => {
            chain(&mut a, 4);
            a[2][1] = -2;
        }
        ('G', 2) => {
            a[0][1] = -3;
            a[1][0] = -1;
        }
        _ => return None,
    }
    Some(a)
}

/// Cartan matrix of a type label such as `"A2"`, `"C3"` or `"A1xA1"`.
pub fn cartan_matrix(label: &str) -> Result<Vec<Vec<i64>>> {
    let bad = || Error::UnsupportedType(label.to_string());
    let mut blocks = Vec::new();
    for part in label.split(['x', 'X']) {
        let mut chars = part.chars();
        let kind = chars.next().ok_or_else(bad)?.to_ascii_uppercase();
        let n: usize = chars.as_str().parse().map_err(|_| bad())?;
        blocks.push(cartan_of_simple(kind, n).ok_or_else(bad)?);
    }
    let total: usize = blocks.iter().map(|b| b.len()).sum();
    let mut a = vec![vec![0i64; total]; total];
    let mut off = 0;
    for b in blocks {
        for (i, row) in b.iter().enumerate() {
            for (j, &x) in row.iter().enumerate() {
                a[off + i][off + j] = x;
            }
        }
        off += b.len();
    }
    Ok(a)
}

/// Checks that `a` is a Cartan matrix of finite type: symmetrizable with a
/// positive definite symmetrization.
#[allow(clippy::needless_range_loop)]
pub fn is_finite_type(a: &[Vec<i64>]) -> bool {
    let n = a.len();
    if a.iter().any(|r| r.len() != n) {
        return false;
    }
    for i in 0..n {
        if a[i][i] != 2 {
            return false;
        }
        for j in 0..n {
            if i != j && (a[i][j] > 0 || (a[i][j] == 0) != (a[j][i] == 0)) {
                return false;
            }
        }
    }
    // eps_i a_ij = eps_j a_ji
    let mut eps: Vec<Option<Rat>> = vec![None; n];
    for start in 0..n {
        if eps[start].is_some() {
            continue;
        }
        eps[start] = Some(Rat::from_integer(1));
        let mut queue = VecDeque::from([start]);
        while let Some(i) = queue.pop_front() {
            let ei = eps[i].unwrap();
            for j in 0..n {
                if i == j || a[i][j] == 0 {
                    continue;
                }
                let ej = ei * Rat::from_integer(a[i][j]) / Rat::from_integer(a[j][i]);
                match eps[j] {
                    None => {
                        eps[j] = Some(ej);
                        queue.push_back(j);
                    }
                    Some(x) if x != ej => return false,
                    Some(_) => {}
                }
            }
        }
    }
    let mut m: Vec<Vec<Rat>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| eps[i].unwrap() * Rat::from_integer(a[i][j]))
                .collect()
        })
        .collect();
    // Leading minors are the running products of the pivots.
    for k in 0..n {
        if !m[k][k].is_positive() {
            return false;
        }
        for i in k + 1..n {
            let f = m[i][k] / m[k][k];
            for j in k..n {
                let v = m[k][j];
                m[i][j] -= f * v;
            }
        }
    }
    true
}

impl RootSystem {
    /// Builds the root system of a labelled finite type of the given rank.
    pub fn new(label: &str, rank: usize) -> Result<Self> {
        let a = cartan_matrix(label)?;
        if a.len() != rank {
            return Err(Error::RankMismatch {
                label: label.to_string(),
                actual: a.len(),
                requested: rank,
            });
        }
        Self::from_cartan(label, a)
    }

    /// Builds a root system from an arbitrary finite-type Cartan matrix.
    pub fn from_cartan(label: &str, cartan: Vec<Vec<i64>>) -> Result<Self> {
        let n = cartan.len();
        if n == 0 || n > MAX_RANK {
            return Err(Error::UnsupportedType(format!("{label} (rank {n})")));
        }
        if !is_finite_type(&cartan) {
            return Err(Error::NotFiniteType);
        }
        let a = &cartan;

        // Closure of the simple roots under simple reflections, carrying coroots.
        let mut found: BTreeMap<Vec<i64>, Vec<i64>> = BTreeMap::new();
        let mut queue = VecDeque::new();
        for i in 0..n {
            let e = Weight::unit(n, i).0;
            found.insert(e.clone(), e.clone());
            queue.push_back(e);
        }
        while let Some(b) = queue.pop_front() {
            let c = found[&b].clone();
            for j in 0..n {
                let p: i64 = (0..n).map(|k| b[k] * a[j][k]).sum();
                let pc: i64 = (0..n).map(|k| c[k] * a[k][j]).sum();
                let mut nb = b.clone();
                nb[j] -= p;
                let mut nc = c.clone();
                nc[j] -= pc;
                if !found.contains_key(&nb) {
                    found.insert(nb.clone(), nc);
                    queue.push_back(nb);
                }
            }
            if found.len() > 1000 {
                return Err(Error::NotFiniteType);
            }
        }
        let mut pos: Vec<(Vec<i64>, Vec<i64>)> = found
            .into_iter()
            .filter(|(b, _)| b.iter().all(|&x| x >= 0))
            .collect();
        pos.sort_by_key(|(b, _)| (b.iter().sum::<i64>(), Reverse(b.clone())));
        let npos = pos.len();
        let weight_of = |b: &[i64]| -> Vec<i64> {
            (0..n)
                .map(|j| (0..n).map(|k| b[k] * a[j][k]).sum())
                .collect()
        };
        let mut roots: Vec<RootData> = pos
            .iter()
            .map(|(b, c)| RootData {
                coeffs: b.clone(),
                coroot: c.clone(),
                weight: weight_of(b),
            })
            .collect();
        for i in 0..npos {
            let r = &roots[i];
            let negd = RootData {
                coeffs: r.coeffs.iter().map(|x| -x).collect(),
                coroot: r.coroot.iter().map(|x| -x).collect(),
                weight: r.weight.iter().map(|x| -x).collect(),
            };
            roots.push(negd);
        }
        let root_index: BTreeMap<Vec<i64>, u16> = roots
            .iter()
            .enumerate()
            .map(|(i, r)| (r.coeffs.clone(), i as u16))
            .collect();
        let nr = roots.len();
        let mut refl = vec![0u16; nr * nr];
        for al in 0..nr {
            for be in 0..nr {
                let p: i64 = (0..n)
                    .map(|k| roots[be].weight[k] * roots[al].coroot[k])
                    .sum();
                let v: Vec<i64> = (0..n)
                    .map(|k| roots[be].coeffs[k] - p * roots[al].coeffs[k])
                    .collect();
                refl[al * nr + be] = root_index[&v];
            }
        }
        let theta = Root((npos - 1) as u16);

        // Breadth-first enumeration; layers come out in ShortLex order.
        let ident: Vec<i64> = (0..n * n)
            .map(|k| if k / n == k % n { 1 } else { 0 })
            .collect();
        let simple_mat = |i: usize| -> Vec<i64> {
            let mut m = ident.clone();
            for j in 0..n {
                m[j * n + i] -= a[j][i];
            }
            m
        };
        let mats_s: Vec<Vec<i64>> = (0..n).map(simple_mat).collect();
        let matmul = |x: &[i64], y: &[i64]| -> Vec<i64> {
            let mut z = vec![0i64; n * n];
            for i in 0..n {
                for k in 0..n {
                    let xik = x[i * n + k];
                    if xik != 0 {
                        for j in 0..n {
                            z[i * n + j] += xik * y[k * n + j];
                        }
                    }
                }
            }
            z
        };
        let matvec = |m: &[i64], v: &[i64]| -> Vec<i64> {
            (0..n)
                .map(|i| (0..n).map(|j| m[i * n + j] * v[j]).sum())
                .collect()
        };
        let rho = vec![1i64; n];
        let mut elems: Vec<ElemData> = vec![ElemData {
            word: Vec::new(),
            mat: ident.clone(),
            perm: (0..nr as u16).collect(),
            inverse: 0,
            rmul_simple: Vec::new(),
            rmul_refl: Vec::new(),
        }];
        let mut elem_index: BTreeMap<Vec<i64>, u16> = BTreeMap::new();
        elem_index.insert(rho.clone(), 0);
        let mut layer = vec![0usize];
        while !layer.is_empty() {
            let mut next = Vec::new();
            for &u in &layer {
                for i in 0..n {
                    let m = matmul(&elems[u].mat, &mats_s[i]);
                    let key = matvec(&m, &rho);
                    if elem_index.contains_key(&key) {
                        continue;
                    }
                    let mut word = elems[u].word.clone();
                    word.push(i as u8);
                    let perm = (0..nr)
                        .map(|b| elems[u].perm[refl[i * nr + b] as usize])
                        .collect();
                    let idx = elems.len();
                    if idx > u16::MAX as usize {
                        return Err(Error::UnsupportedType(label.to_string()));
                    }
                    elem_index.insert(key, idx as u16);
                    elems.push(ElemData {
                        word,
                        mat: m,
                        perm,
                        inverse: 0,
                        rmul_simple: Vec::new(),
                        rmul_refl: Vec::new(),
                    });
                    next.push(idx);
                }
            }
            layer = next;
        }
        for u in 0..elems.len() {
            let rs: Vec<u16> = (0..n)
                .map(|i| {
                    let m = matmul(&elems[u].mat, &mats_s[i]);
                    elem_index[&matvec(&m, &rho)]
                })
                .collect();
            let rr: Vec<u16> = (0..npos)
                .map(|al| {
                    let p: i64 = roots[al].coroot.iter().sum();
                    let srho: Vec<i64> = (0..n).map(|k| 1 - p * roots[al].weight[k]).collect();
                    elem_index[&matvec(&elems[u].mat, &srho)]
                })
                .collect();
            elems[u].rmul_simple = rs;
            elems[u].rmul_refl = rr;
        }
        for u in 0..elems.len() {
            let mut x = 0usize;
            for &i in elems[u].word.iter().rev() {
                x = elems[x].rmul_simple[i as usize] as usize;
            }
            elems[u].inverse = x as u16;
        }

        Ok(RootSystem {
            label: label.to_string(),
            rank: n,
            cartan,
            roots,
            npos,
            root_index,
            refl,
            elems,
            elem_index,
            theta,
        })
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    // ---- roots ----

    pub fn num_positive_roots(&self) -> usize {
        self.npos
    }

    pub fn positive_roots(&self) -> impl Iterator<Item = Root> + '_ {
        (0..self.npos as u16).map(Root)
    }

    pub fn roots(&self) -> impl Iterator<Item = Root> + '_ {
        (0..self.roots.len() as u16).map(Root)
    }

    pub fn simple_root(&self, i: usize) -> Root {
        Root(i as u16)
    }

    pub fn highest_root(&self) -> Root {
        self.theta
    }

    /// Looks up a root by its simple-root coefficients.
    pub fn root(&self, coeffs: &[i64]) -> Result<Root> {
        if coeffs.len() != self.rank {
            return Err(Error::Dimension {
                expected: self.rank,
                got: coeffs.len(),
            });
        }
        self.root_index
            .get(coeffs)
            .map(|&i| Root(i))
            .ok_or_else(|| Error::NotARoot(coeffs.to_vec()))
    }

    pub fn coeffs(&self, r: Root) -> &[i64] {
        &self.roots[r.index()].coeffs
    }

    pub fn coroot_coeffs(&self, r: Root) -> &[i64] {
        &self.roots[r.index()].coroot
    }

    pub fn coroot(&self, r: Root) -> Coroot {
        Coroot(self.coroot_coeffs(r).to_vec())
    }

    /// The root as a weight, in fundamental-weight coordinates.
    pub fn root_weight(&self, r: Root) -> Weight {
        Weight(self.roots[r.index()].weight.clone())
    }

    pub fn is_positive(&self, r: Root) -> bool {
        r.index() < self.npos
    }

    pub fn sgn(&self, r: Root) -> i64 {
        if self.is_positive(r) {
            1
        } else {
            -1
        }
    }

    pub fn neg(&self, r: Root) -> Root {
        if self.is_positive(r) {
            Root(r.0 + self.npos as u16)
        } else {
            Root(r.0 - self.npos as u16)
        }
    }

    pub fn abs(&self, r: Root) -> Root {
        if self.is_positive(r) {
            r
        } else {
            self.neg(r)
        }
    }

    pub fn is_simple(&self, r: Root) -> bool {
        self.abs(r).index() < self.rank
    }

    pub fn height(&self, r: Root) -> i64 {
        self.coeffs(r).iter().sum()
    }

    /// `<beta, gamma^vee>`.
    pub fn root_pair(&self, beta: Root, gamma: Root) -> i64 {
        let b = &self.roots[beta.index()].weight;
        let c = &self.roots[gamma.index()].coroot;
        b.iter().zip(c).map(|(x, y)| x * y).sum()
    }

    /// `s_alpha(beta)`.
    pub fn reflect_root(&self, alpha: Root, beta: Root) -> Root {
        let nr = self.roots.len();
        Root(self.refl[alpha.index() * nr + beta.index()])
    }

    // ---- pairings and weights ----

    pub fn pair(&self, w: &Weight, c: &Coroot) -> i64 {
        w.0.iter().zip(&c.0).map(|(x, y)| x * y).sum()
    }

    /// `<lambda, beta^vee>`.
    pub fn pair_root(&self, w: &Weight, beta: Root) -> i64 {
        w.0.iter()
            .zip(self.coroot_coeffs(beta))
            .map(|(x, y)| x * y)
            .sum()
    }

    pub fn pair_point(&self, x: &RationalPoint, beta: Root) -> Rat {
        x.0.iter()
            .zip(self.coroot_coeffs(beta))
            .map(|(a, &c)| a * Rat::from_integer(c))
            .fold(Rat::zero(), |s, v| s + v)
    }

    pub fn rho(&self) -> Weight {
        Weight(vec![1; self.rank])
    }

    pub fn fundamental_weight(&self, i: usize) -> Weight {
        Weight::unit(self.rank, i)
    }

    /// `h = ht(theta) + 1`, which is also one more than the height of the
    /// highest coroot.
    pub fn coxeter_number(&self) -> i64 {
        self.height(self.theta) + 1
    }

    /// The interior point `rho / h` of the fundamental alcove. With the
    /// Coxeter number `h`, `<rho/h, alpha^vee> < 1` holds for every positive
    /// root, including the short ones in non-simply-laced types.
    pub fn base_point(&self) -> RationalPoint {
        let h = self.coxeter_number();
        RationalPoint(vec![Rat::new(1, h); self.rank])
    }

    /// `s_alpha(lambda)`.
    pub fn reflect_weight(&self, lambda: &Weight, alpha: Root) -> Weight {
        let p = self.pair_root(lambda, alpha);
        lambda - &self.root_weight(alpha).scaled(p)
    }

    /// `s_{alpha,k}(nu) = nu - (<nu, alpha^vee> - k) alpha`.
    pub fn affine_reflect(&self, nu: &RationalPoint, alpha: Root, k: i64) -> RationalPoint {
        let p = self.pair_point(nu, alpha) - Rat::from_integer(k);
        let aw = &self.roots[alpha.index()].weight;
        RationalPoint(
            nu.0.iter()
                .zip(aw)
                .map(|(x, &a)| x - p * Rat::from_integer(a))
                .collect(),
        )
    }

    /// Recognizes the rank-2 subsystem generated by a Yang-Baxter pair and
    /// returns its ordered segment.
    pub fn rank2_subsystem(&self, alpha: Root, beta: Root) -> Result<Rank2Subsystem> {
        if alpha == self.neg(beta) || self.root_pair(alpha, beta) > 0 {
            return Err(Error::SegmentPrecondition);
        }
        let mut seg = Vec::new();
        let mut x = alpha;
        let mut y = self.reflect_root(alpha, beta);
        loop {
            seg.push(x);
            if x == beta {
                break;
            }
            seg.push(y);
            if y == beta {
                break;
            }
            if seg.len() >= 6 {
                return Err(Error::SegmentPrecondition);
            }
            x = self.reflect_root(alpha, self.reflect_root(beta, x));
            y = self.reflect_root(alpha, self.reflect_root(beta, y));
        }
        let kind = match seg.len() {
            2 => Rank2Type::A1xA1,
            3 => Rank2Type::A2,
            4 => Rank2Type::C2,
            6 => Rank2Type::G2,
            _ => return Err(Error::SegmentPrecondition),
        };
        Ok(Rank2Subsystem { kind, segment: seg })
    }

    // ---- Weyl group ----

    pub fn weyl_order(&self) -> usize {
        self.elems.len()
    }

    pub fn weyl_elements(&self) -> impl Iterator<Item = Weyl> + '_ {
        (0..self.elems.len() as u16).map(Weyl)
    }

    pub fn longest(&self) -> Weyl {
        Weyl((self.elems.len() - 1) as u16)
    }

    /// ShortLex-minimal reduced word, as 0-based generator indices.
    pub fn word(&self, w: Weyl) -> &[u8] {
        &self.elems[w.index()].word
    }

    pub fn length(&self, w: Weyl) -> usize {
        self.elems[w.index()].word.len()
    }

    pub fn inverse(&self, w: Weyl) -> Weyl {
        Weyl(self.elems[w.index()].inverse)
    }

    pub fn simple_reflection(&self, i: usize) -> Weyl {
        Weyl(self.elems[0].rmul_simple[i])
    }

    /// `w s_i`.
    pub fn mul_simple(&self, w: Weyl, i: usize) -> Weyl {
        Weyl(self.elems[w.index()].rmul_simple[i])
    }

    /// `w s_{|alpha|}`.
    pub fn mul_reflection(&self, w: Weyl, alpha: Root) -> Weyl {
        Weyl(self.elems[w.index()].rmul_refl[self.abs(alpha).index()])
    }

    pub fn reflection(&self, alpha: Root) -> Weyl {
        self.mul_reflection(Weyl::IDENTITY, alpha)
    }

    pub fn mul(&self, u: Weyl, v: Weyl) -> Weyl {
        self.word(v)
            .iter()
            .fold(u, |x, &i| self.mul_simple(x, i as usize))
    }

    /// Element of a word of 0-based generator indices (not necessarily reduced).
    pub fn from_word(&self, word: &[u8]) -> Result<Weyl> {
        let mut x = Weyl::IDENTITY;
        for &i in word {
            if i as usize >= self.rank {
                return Err(Error::BadWord(format!("{word:?}")));
            }
            x = self.mul_simple(x, i as usize);
        }
        Ok(x)
    }

    /// Parses `"e"`, `"w0"` or words like `"s1s2s1"` (1-based generators).
    pub fn parse_word(&self, s: &str) -> Result<Weyl> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if t.is_empty() || t == "e" || t == "1" {
            return Ok(Weyl::IDENTITY);
        }
        if t == "w0" {
            return Ok(self.longest());
        }
        let bad = || Error::BadWord(s.to_string());
        let mut word = Vec::new();
        for piece in t.split('s').skip(1) {
            let i: usize = piece.parse().map_err(|_| bad())?;
            if i == 0 || i > self.rank {
                return Err(bad());
            }
            word.push((i - 1) as u8);
        }
        if !t.starts_with('s') || word.is_empty() {
            return Err(bad());
        }
        self.from_word(&word)
    }

    /// `"e"` or `"s1s2..."`.
    pub fn word_string(&self, w: Weyl) -> String {
        let word = self.word(w);
        if word.is_empty() {
            return "e".to_string();
        }
        word.iter().map(|i| format!("s{}", i + 1)).collect()
    }

    /// Looks up the element mapping `rho` to the given weight.
    pub fn element_by_rho_image(&self, w_rho: &Weight) -> Option<Weyl> {
        self.elem_index.get(&w_rho.0).map(|&i| Weyl(i))
    }

    pub fn act_root(&self, w: Weyl, r: Root) -> Root {
        Root(self.elems[w.index()].perm[r.index()])
    }

    pub fn act_weight(&self, w: Weyl, x: &Weight) -> Weight {
        let n = self.rank;
        let m = &self.elems[w.index()].mat;
        Weight(
            (0..n)
                .map(|i| (0..n).map(|j| m[i * n + j] * x.0[j]).sum())
                .collect(),
        )
    }

    pub fn act_point(&self, w: Weyl, x: &RationalPoint) -> RationalPoint {
        let n = self.rank;
        let m = &self.elems[w.index()].mat;
        RationalPoint(
            (0..n)
                .map(|i| {
                    (0..n).fold(Rat::zero(), |s, j| {
                        s + x.0[j] * Rat::from_integer(m[i * n + j])
                    })
                })
                .collect(),
        )
    }

    /// Action on the coroot lattice, through `s_i(c) = c - <alpha_i, c> alpha_i^vee`.
    pub fn act_coroot(&self, w: Weyl, c: &Coroot) -> Coroot {
        let n = self.rank;
        let mut v = c.0.clone();
        for &i in self.word(w).iter().rev() {
            let i = i as usize;
            let p: i64 = (0..n).map(|k| v[k] * self.cartan[k][i]).sum();
            v[i] -= p;
        }
        Coroot(v)
    }

    /// Number of positive roots sent to negative roots by `w`.
    pub fn inversions(&self, w: Weyl) -> usize {
        self.positive_roots()
            .filter(|&r| !self.is_positive(self.act_root(w, r)))
            .count()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(l: &str) -> RootSystem {
        let n = cartan_matrix(l).unwrap().len();
        RootSystem::new(l, n).unwrap()
    }

    #[test]
    fn sizes() {
        for (l, np, nw) in [
            ("A1", 1, 2),
            ("A1xA1", 2, 4),
            ("A2", 3, 6),
            ("B2", 4, 8),
            ("C2", 4, 8),
            ("G2", 6, 12),
            ("A3", 6, 24),
            ("B3", 9, 48),
            ("C3", 9, 48),
            ("D4", 12, 192),
            ("F4", 24, 1152),
        ] {
            let r = rs(l);
            assert_eq!(r.num_positive_roots(), np, "{l}");
            assert_eq!(r.weyl_order(), nw, "{l}");
            assert_eq!(r.length(r.longest()), np, "{l}");
        }
    }

    #[test]
    fn c2_positive_roots() {
        let r = rs("C2");
        let mut got: Vec<Vec<i64>> = r.positive_roots().map(|a| r.coeffs(a).to_vec()).collect();
        got.sort();
        assert_eq!(got, vec![vec![0, 1], vec![1, 0], vec![1, 1], vec![2, 1]]);
        let t = r.root(&[2, 1]).unwrap();
        assert_eq!(r.coroot_coeffs(t), &[1, 1]);
        assert_eq!(r.highest_root(), t);
    }

    #[test]
    fn unsupported() {
        assert!(RootSystem::new("E9", 9).is_err());
        assert!(RootSystem::new("A2", 3).is_err());
        assert!(RootSystem::new("Q2", 2).is_err());
        assert!(RootSystem::from_cartan("bad", vec![vec![2, -2], vec![-2, 2]]).is_err());
    }

    #[test]
    fn pairings_a2() {
        let r = rs("A2");
        let th = r.highest_root();
        assert_eq!(r.pair(&Weight(vec![1, 0]), &Coroot(vec![1, 0])), 1);
        assert_eq!(r.pair(&r.rho(), &r.coroot(th)), 2);
        assert_eq!(r.pair(&Weight(vec![-2, 1]), &r.coroot(th)), -1);
    }

    #[test]
    fn actions_a2() {
        let r = rs("A2");
        let a1 = r.simple_root(0);
        let a2 = r.simple_root(1);
        let s1 = r.simple_reflection(0);
        assert_eq!(r.act_root(s1, a1), r.neg(a1));
        assert_eq!(r.coeffs(r.act_root(s1, a2)), &[1, 1]);
        assert_eq!(
            r.act_weight(r.longest(), &Weight(vec![1, 0])),
            Weight(vec![0, -1])
        );
    }

    #[test]
    fn affine_reflections() {
        let r = rs("A1");
        let a = r.simple_root(0);
        let w = RationalPoint::from_weight(&Weight(vec![1]));
        assert_eq!(r.affine_reflect(&w, a, 1), w);
        let nu = r.base_point();
        assert_eq!(
            r.affine_reflect(&nu, a, 0),
            r.act_point(r.simple_reflection(0), &nu)
        );
        assert_eq!(r.affine_reflect(&r.affine_reflect(&nu, a, 3), a, 3), nu);
    }

    #[test]
    fn base_point_is_interior() {
        for l in ["A2", "C2", "G2", "B3"] {
            let r = rs(l);
            let nu = r.base_point();
            for a in r.positive_roots() {
                let p = r.pair_point(&nu, a);
                assert!(p.is_positive() && p < Rat::from_integer(1), "{l}");
            }
        }
    }

    #[test]
    fn rank2_segments() {
        let a2 = rs("A2");
        let s = a2
            .rank2_subsystem(a2.simple_root(0), a2.simple_root(1))
            .unwrap();
        assert_eq!(s.kind, Rank2Type::A2);
        let c: Vec<_> = s.segment.iter().map(|&x| a2.coeffs(x).to_vec()).collect();
        assert_eq!(c, vec![vec![1, 0], vec![1, 1], vec![0, 1]]);
        let c2 = rs("C2");
        assert_eq!(
            c2.rank2_subsystem(c2.simple_root(0), c2.simple_root(1))
                .unwrap()
                .segment
                .len(),
            4
        );
        let g2 = rs("G2");
        let s = g2
            .rank2_subsystem(g2.simple_root(0), g2.simple_root(1))
            .unwrap();
        assert_eq!(s.kind, Rank2Type::G2);
        let c: Vec<_> = s.segment.iter().map(|&x| g2.coeffs(x).to_vec()).collect();
        assert_eq!(
            c,
            vec![
                vec![1, 0],
                vec![3, 1],
                vec![2, 1],
                vec![3, 2],
                vec![1, 1],
                vec![0, 1]
            ]
        );
        assert!(g2
            .rank2_subsystem(g2.simple_root(0), g2.simple_root(0))
            .is_err());
    }

    #[test]
    fn words() {
        let r = rs("G2");
        let w = r.parse_word("s1s2s1").unwrap();
        assert_eq!(r.word_string(w), "s1s2s1");
        assert_eq!(r.parse_word("e").unwrap(), Weyl::IDENTITY);
        assert_eq!(r.parse_word("s1s1").unwrap(), Weyl::IDENTITY);
        assert!(r.parse_word("s3").is_err());
        assert!(r.parse_word("x1").is_err());
        let order: Vec<String> = r
            .weyl_elements()
            .take(5)
            .map(|w| r.word_string(w))
            .collect();
        assert_eq!(order, vec!["e", "s1", "s2", "s1s2", "s2s1"]);
    }
}
