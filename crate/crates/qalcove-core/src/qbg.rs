//! The quantum Bruhat graph, reflection orders and Π-compatible paths.

use alloc::collections::{BTreeSet, VecDeque};
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::rootsys::{Coroot, Root, RootSystem, Weyl};

#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash, PartialOrd, Ord)]
pub enum EdgeKind {
    Bruhat,
    Quantum,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub struct QbgEdge {
    pub source: Weyl,
    pub target: Weyl,
    /// Always a positive root.
    pub label: Root,
    pub kind: EdgeKind,
}

/// The edge `v -> v s_alpha`, if there is one. A negative `alpha` is
/// replaced by `|alpha|`.
pub fn qbg_edge(rs: &RootSystem, v: Weyl, alpha: Root) -> Option<QbgEdge> {
    let alpha = rs.abs(alpha);
    let target = rs.mul_reflection(v, alpha);
    let lv = rs.length(v) as i64;
    let lt = rs.length(target) as i64;
    let kind = if lt == lv + 1 {
        EdgeKind::Bruhat
    } else if lt == lv - 2 * rs.coroot_coeffs(alpha).iter().sum::<i64>() + 1 {
        EdgeKind::Quantum
    } else {
        return None;
    };
    Some(QbgEdge {
        source: v,
        target,
        label: alpha,
        kind,
    })
}

pub fn out_edges(rs: &RootSystem, v: Weyl) -> Vec<QbgEdge> {
    rs.positive_roots()
        .filter_map(|a| qbg_edge(rs, v, a))
        .collect()
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub struct PathStep {
    /// Position in the sequence the path was drawn from.
    pub index: usize,
    /// The signed root at that position.
    pub root: Root,
    pub edge: QbgEdge,
}

/// A directed path in the quantum Bruhat graph with cached statistics.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct DirectedPath {
    start: Weyl,
    steps: Vec<PathStep>,
    end: Weyl,
    wt: Coroot,
    nega: usize,
}

impl DirectedPath {
    pub fn empty(rs: &RootSystem, v: Weyl) -> Self {
        DirectedPath {
            start: v,
            steps: Vec::new(),
            end: v,
            wt: Coroot::zero(rs.rank()),
            nega: 0,
        }
    }

    /// Extends the path by `root` at position `index`, if the edge exists.
    pub fn push(&mut self, rs: &RootSystem, index: usize, root: Root) -> bool {
        let Some(edge) = qbg_edge(rs, self.end, root) else {
            return false;
        };
        if edge.kind == EdgeKind::Quantum {
            self.wt += &rs.coroot(edge.label);
        }
        if !rs.is_positive(root) {
            self.nega += 1;
        }
        self.end = edge.target;
        self.steps.push(PathStep { index, root, edge });
        true
    }

    fn pop(&mut self, rs: &RootSystem) {
        let s = self.steps.pop().expect("pop on empty path");
        if s.edge.kind == EdgeKind::Quantum {
            self.wt -= &rs.coroot(s.edge.label);
        }
        if !rs.is_positive(s.root) {
            self.nega -= 1;
        }
        self.end = s.edge.source;
    }

    pub fn start(&self) -> Weyl {
        self.start
    }

    pub fn end(&self) -> Weyl {
        self.end
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn steps(&self) -> &[PathStep] {
        &self.steps
    }

    pub fn wt(&self) -> &Coroot {
        &self.wt
    }

    pub fn nega(&self) -> usize {
        self.nega
    }

    pub fn indices(&self) -> Vec<usize> {
        self.steps.iter().map(|s| s.index).collect()
    }

    pub fn vertices(&self) -> Vec<Weyl> {
        let mut v = vec![self.start];
        v.extend(self.steps.iter().map(|s| s.edge.target));
        v
    }

    pub fn labels(&self) -> Vec<Root> {
        self.steps.iter().map(|s| s.edge.label).collect()
    }
}

/// Whether `order` lists every positive root once and puts each sum
/// `alpha + beta` of positive roots between its summands.
pub fn is_reflection_order(rs: &RootSystem, order: &[Root]) -> bool {
    let n = rs.num_positive_roots();
    if order.len() != n {
        return false;
    }
    let mut pos = vec![usize::MAX; n];
    for (k, &r) in order.iter().enumerate() {
        if !rs.is_positive(r) || pos[r.index()] != usize::MAX {
            return false;
        }
        pos[r.index()] = k;
    }
    for a in rs.positive_roots() {
        for b in rs.positive_roots() {
            if a >= b {
                continue;
            }
            let sum: Vec<i64> = rs
                .coeffs(a)
                .iter()
                .zip(rs.coeffs(b))
                .map(|(x, y)| x + y)
                .collect();
            if let Ok(c) = rs.root(&sum) {
                let (pa, pb, pc) = (pos[a.index()], pos[b.index()], pos[c.index()]);
                if !((pa < pc && pc < pb) || (pb < pc && pc < pa)) {
                    return false;
                }
            }
        }
    }
    true
}

/// All paths `v -> ...` whose labels are `|pi_{j1}|, |pi_{j2}|, ...` with
/// `j1 < j2 < ...`, in lexicographic order of the index sequences (the empty
/// path first).
pub fn pi_compatible_paths(rs: &RootSystem, v: Weyl, pi: &[Root]) -> Vec<DirectedPath> {
    fn go(
        rs: &RootSystem,
        pi: &[Root],
        from: usize,
        cur: &mut DirectedPath,
        out: &mut Vec<DirectedPath>,
    ) {
        out.push(cur.clone());
        for j in from..pi.len() {
            if cur.push(rs, j, pi[j]) {
                go(rs, pi, j + 1, cur, out);
                cur.pop(rs);
            }
        }
    }
    let mut out = Vec::new();
    go(rs, pi, 0, &mut DirectedPath::empty(rs, v), &mut out);
    out
}

/// Every label-increasing path from `v` to `w` with respect to `order`.
pub fn label_increasing_paths(
    rs: &RootSystem,
    v: Weyl,
    w: Weyl,
    order: &[Root],
) -> Vec<DirectedPath> {
    pi_compatible_paths(rs, v, order)
        .into_iter()
        .filter(|p| p.end() == w)
        .collect()
}

/// The unique label-increasing path from `v` to `w`. Finding zero or several
/// paths means `order` is not a reflection order.
pub fn label_increasing_path(
    rs: &RootSystem,
    v: Weyl,
    w: Weyl,
    order: &[Root],
) -> Result<DirectedPath> {
    let mut ps = label_increasing_paths(rs, v, w, order);
    if ps.len() != 1 {
        return Err(Error::Defect(alloc::format!(
            "{} label-increasing paths from {} to {}",
            ps.len(),
            rs.word_string(v),
            rs.word_string(w)
        )));
    }
    Ok(ps.pop().unwrap())
}

fn distances_from(rs: &RootSystem, v: Weyl) -> Vec<usize> {
    let mut dist = vec![usize::MAX; rs.weyl_order()];
    dist[v.index()] = 0;
    let mut queue = VecDeque::from([v]);
    while let Some(x) = queue.pop_front() {
        for e in out_edges(rs, x) {
            if dist[e.target.index()] == usize::MAX {
                dist[e.target.index()] = dist[x.index()] + 1;
                queue.push_back(e.target);
            }
        }
    }
    dist
}

/// Length and weight of a shortest path from `v` to `w`.
pub fn shortest_stats(rs: &RootSystem, v: Weyl, w: Weyl) -> (usize, Coroot) {
    let ws = shortest_path_weights(rs, v, w);
    let d = distances_from(rs, v)[w.index()];
    (d, ws.into_iter().next().expect("QBG is strongly connected"))
}

/// The distinct weights over all shortest paths from `v` to `w`.
pub fn shortest_path_weights(rs: &RootSystem, v: Weyl, w: Weyl) -> Vec<Coroot> {
    let dist = distances_from(rs, v);
    let target = dist[w.index()];
    let mut found = BTreeSet::new();
    fn go(
        rs: &RootSystem,
        x: Weyl,
        w: Weyl,
        dist: &[usize],
        acc: &Coroot,
        out: &mut BTreeSet<Coroot>,
    ) {
        if x == w {
            out.insert(acc.clone());
            return;
        }
        for e in out_edges(rs, x) {
            if dist[e.target.index()] == dist[x.index()] + 1 {
                let next = if e.kind == EdgeKind::Quantum {
                    acc + &rs.coroot(e.label)
                } else {
                    acc.clone()
                };
                go(rs, e.target, w, dist, &next, out);
            }
        }
    }
    if target != usize::MAX {
        go(rs, v, w, &dist, &Coroot::zero(rs.rank()), &mut found);
    }
    found.into_iter().collect()
}

/// All reduced words of `w`, as 0-based generator indices, in lex order.
pub fn reduced_words(rs: &RootSystem, w: Weyl) -> Vec<Vec<u8>> {
    fn go(rs: &RootSystem, w: Weyl, suffix: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if w == Weyl::IDENTITY {
            out.push(suffix.iter().rev().copied().collect());
            return;
        }
        for i in 0..rs.rank() {
            let u = rs.mul_simple(w, i);
            if rs.length(u) < rs.length(w) {
                suffix.push(i as u8);
                go(rs, u, suffix, out);
                suffix.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(rs, w, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// The reflection order `beta_k = s_{i_1} ... s_{i_{k-1}}(alpha_{i_k})`
/// attached to a reduced word of the longest element.
pub fn reflection_order_from_word(rs: &RootSystem, word: &[u8]) -> Vec<Root> {
    let mut prefix = Weyl::IDENTITY;
    let mut out = Vec::with_capacity(word.len());
    for &i in word {
        out.push(rs.act_root(prefix, rs.simple_root(i as usize)));
        prefix = rs.mul_simple(prefix, i as usize);
    }
    out
}

/// The reflection orders coming from all reduced words of the longest element.
pub fn reflection_orders(rs: &RootSystem) -> Vec<Vec<Root>> {
    reduced_words(rs, rs.longest())
        .iter()
        .map(|w| reflection_order_from_word(rs, w))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn roots(rs: &RootSystem, cs: &[&[i64]]) -> Vec<Root> {
        cs.iter().map(|c| rs.root(c).unwrap()).collect()
    }

    #[test]
    fn a2_edges() {
        let rs = RootSystem::new("A2", 2).unwrap();
        let th = rs.highest_root();
        assert!(qbg_edge(&rs, Weyl::IDENTITY, th).is_none());
        let e = qbg_edge(&rs, rs.longest(), th).unwrap();
        assert_eq!((e.target, e.kind), (Weyl::IDENTITY, EdgeKind::Quantum));
        let e = qbg_edge(&rs, Weyl::IDENTITY, rs.simple_root(0)).unwrap();
        assert_eq!(
            (e.target, e.kind),
            (rs.simple_reflection(0), EdgeKind::Bruhat)
        );
    }

    #[test]
    fn reflection_order_examples() {
        let a2 = RootSystem::new("A2", 2).unwrap();
        assert!(is_reflection_order(
            &a2,
            &roots(&a2, &[&[1, 0], &[1, 1], &[0, 1]])
        ));
        assert!(!is_reflection_order(
            &a2,
            &roots(&a2, &[&[1, 0], &[0, 1], &[1, 1]])
        ));
        let c2 = RootSystem::new("C2", 2).unwrap();
        assert!(is_reflection_order(
            &c2,
            &roots(&c2, &[&[1, 0], &[2, 1], &[1, 1], &[0, 1]])
        ));
        for o in reflection_orders(&c2) {
            assert!(is_reflection_order(&c2, &o));
        }
    }

    #[test]
    fn shortest() {
        let rs = RootSystem::new("A2", 2).unwrap();
        let w0 = rs.longest();
        assert_eq!(shortest_stats(&rs, w0, w0), (0, Coroot(vec![0, 0])));
        assert_eq!(
            shortest_stats(&rs, Weyl::IDENTITY, w0),
            (3, Coroot(vec![0, 0]))
        );
        assert_eq!(
            shortest_stats(&rs, w0, Weyl::IDENTITY),
            (1, Coroot(vec![1, 1]))
        );
        let order = roots(&rs, &[&[1, 0], &[1, 1], &[0, 1]]);
        let p = label_increasing_path(&rs, Weyl::IDENTITY, w0, &order).unwrap();
        assert_eq!(p.len(), 3);
        assert!(label_increasing_path(&rs, w0, w0, &order)
            .unwrap()
            .is_empty());
    }

    #[test]
    fn empty_pi() {
        let rs = RootSystem::new("C2", 2).unwrap();
        let ps = pi_compatible_paths(&rs, rs.longest(), &[]);
        assert_eq!(ps.len(), 1);
        assert!(ps[0].is_empty());
    }
}
