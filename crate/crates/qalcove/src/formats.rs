//! JSON, TSV and DOT encodings of the library's objects.
//!
//! Index sets and generator indices are 1-based in every encoding.

use std::fmt::Write as _;

use anyhow::{bail, Result};
use serde::{Deserialize, Serialize};

use qalcove_core::alcove::{compute_levels, AdmissibleSubset, LambdaChain};
use qalcove_core::charident::FormalChar;
use qalcove_core::genfun::GenFun;
use qalcove_core::poly::Laurent;
use qalcove_core::qbg::{out_edges, EdgeKind};
use qalcove_core::qbops::OperatorMatrix;
use qalcove_core::ybmoves::Sijection;
use qalcove_core::{RootSystem, Weight};

use crate::parse::{root_system, word_indices};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainJson {
    #[serde(rename = "type")]
    pub type_label: String,
    pub rank: usize,
    pub lambda: Vec<i64>,
    pub roots: Vec<Vec<i64>>,
    /// Optional on input; checked when present.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub levels: Option<Vec<i64>>,
}

impl ChainJson {
    pub fn from_chain(rs: &RootSystem, chain: &LambdaChain) -> Self {
        ChainJson {
            type_label: rs.label().to_string(),
            rank: rs.rank(),
            lambda: chain.lambda().0.clone(),
            roots: chain
                .roots()
                .iter()
                .map(|&r| rs.coeffs(r).to_vec())
                .collect(),
            levels: Some(chain.levels().to_vec()),
        }
    }

    /// Validates the chain and rebuilds it in `rs`, which is created if not given.
    pub fn to_chain(&self) -> Result<(RootSystem, LambdaChain)> {
        let rs = root_system(&self.type_label)?;
        if rs.rank() != self.rank {
            bail!(
                "type {} has rank {}, file says {}",
                self.type_label,
                rs.rank(),
                self.rank
            );
        }
        let roots = self
            .roots
            .iter()
            .map(|c| rs.root(c))
            .collect::<Result<Vec<_>, _>>()?;
        let chain = compute_levels(&rs, &roots, &Weight(self.lambda.clone()))?;
        if let Some(levels) = &self.levels {
            if levels.as_slice() != chain.levels() {
                bail!(
                    "levels {:?} disagree with the computed {:?}",
                    levels,
                    chain.levels()
                );
            }
        }
        Ok((rs, chain))
    }
}

pub fn index_set(indices: &[usize]) -> String {
    let parts: Vec<String> = indices.iter().map(|i| (i + 1).to_string()).collect();
    format!("{{{}}}", parts.join(","))
}

fn vec_string(v: &[i64]) -> String {
    let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(","))
}

/// One row per subset: index set, wt, ed, down, height, n.
pub fn admissible_tsv(rs: &RootSystem, subsets: &[AdmissibleSubset]) -> String {
    let mut out = String::from("indices\twt\ted\tdown\theight\tn\n");
    for a in subsets {
        let _ = writeln!(
            out,
            "{}\t{}\t{}\t{}\t{}\t{}",
            index_set(&a.indices()),
            vec_string(&a.wt().0),
            rs.word_string(a.ed()),
            vec_string(&a.down().0),
            a.height(),
            a.n()
        );
    }
    out
}

fn laurent_pairs(c: &Laurent) -> Vec<[i64; 2]> {
    c.terms().map(|(e, k)| [e, k]).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenFunTerm {
    pub q: Vec<[i64; 2]>,
    pub mu: Vec<i64>,
    pub w: Vec<u8>,
    pub xi: Vec<i64>,
}

pub fn genfun_json(rs: &RootSystem, f: &GenFun) -> Vec<GenFunTerm> {
    f.terms()
        .map(|(mu, x, c)| GenFunTerm {
            q: laurent_pairs(c),
            mu: mu.0.clone(),
            w: word_indices(rs, x.w),
            xi: x.xi.0.clone(),
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FormalCharTerm {
    pub q: Vec<[i64; 2]>,
    pub mu: Vec<i64>,
    pub gch_w: Vec<u8>,
}

pub fn formal_char_json(rs: &RootSystem, f: &FormalChar) -> Vec<FormalCharTerm> {
    f.terms()
        .map(|(w, nu, c)| FormalCharTerm {
            q: laurent_pairs(c),
            mu: nu.0.clone(),
            gch_w: word_indices(rs, w),
        })
        .collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct SubsetStats {
    pub indices: Vec<usize>,
    pub sign: i64,
    pub ed: Vec<u8>,
    pub down: Vec<i64>,
    pub wt: Vec<i64>,
    pub height: i64,
    pub class: u8,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exceptional: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SijectionJson {
    pub w: Vec<u8>,
    /// Pairs of 1-based index sets `A -> Y(A)`.
    pub y: Vec<(Vec<usize>, Vec<usize>)>,
    pub i1: Vec<(Vec<usize>, Vec<usize>)>,
    pub i2: Vec<(Vec<usize>, Vec<usize>)>,
    pub a1: Vec<SubsetStats>,
    pub a2: Vec<SubsetStats>,
}

pub fn sijection_json(rs: &RootSystem, s: &Sijection) -> SijectionJson {
    let one = |a: &AdmissibleSubset| a.indices().iter().map(|i| i + 1).collect::<Vec<_>>();
    let pairs = |x: &[AdmissibleSubset], y: &[AdmissibleSubset], p: &[(usize, usize)]| {
        p.iter()
            .map(|&(i, j)| (one(&x[i]), one(&y[j])))
            .collect::<Vec<_>>()
    };
    let stats = |subs: &[AdmissibleSubset], cls: &[qalcove_core::ybmoves::Classification]| {
        subs.iter()
            .zip(cls)
            .map(|(a, c)| SubsetStats {
                indices: one(a),
                sign: a.sign(),
                ed: word_indices(rs, a.ed()),
                down: a.down().0.clone(),
                wt: a.wt().0.clone(),
                height: a.height(),
                class: c.class.value(),
                exceptional: c.exceptional.map(|e| format!("{e:?}")),
            })
            .collect::<Vec<_>>()
    };
    SijectionJson {
        w: word_indices(rs, s.w),
        y: pairs(&s.a1, &s.a2, &s.y),
        i1: pairs(&s.a1, &s.a1, &s.i1),
        i2: pairs(&s.a2, &s.a2, &s.i2),
        a1: stats(&s.a1, &s.phi1),
        a2: stats(&s.a2, &s.phi2),
    }
}

/// The quantum Bruhat graph in DOT; quantum edges are dashed and red.
pub fn qbg_dot(rs: &RootSystem) -> String {
    let mut out = format!("digraph \"QBG({})\" {{\n", rs.label());
    for v in rs.weyl_elements() {
        let _ = writeln!(out, "  \"{}\";", rs.word_string(v));
    }
    for v in rs.weyl_elements() {
        for e in out_edges(rs, v) {
            let style = match e.kind {
                EdgeKind::Bruhat => "color=black",
                EdgeKind::Quantum => "color=red, style=dashed",
            };
            let _ = writeln!(
                out,
                "  \"{}\" -> \"{}\" [label=\"{}\", {}];",
                rs.word_string(e.source),
                rs.word_string(e.target),
                vec_string(rs.coeffs(e.label)),
                style
            );
        }
    }
    out.push_str("}\n");
    out
}

/// Edge list: source, target, label, kind.
pub fn qbg_tsv(rs: &RootSystem) -> String {
    let mut out = String::from("source\ttarget\tlabel\tkind\n");
    for v in rs.weyl_elements() {
        for e in out_edges(rs, v) {
            let _ = writeln!(
                out,
                "{}\t{}\t{}\t{:?}",
                rs.word_string(e.source),
                rs.word_string(e.target),
                vec_string(rs.coeffs(e.label)),
                e.kind
            );
        }
    }
    out
}

/// The golden-file layout: tab-separated canonical polynomials.
pub fn matrix_tsv(m: &OperatorMatrix) -> String {
    let mut out = String::new();
    for row in m.to_strings() {
        out.push_str(&row.join("\t"));
        out.push('\n');
    }
    out
}

/// Splits a matrix file into cells, ignoring blank lines and surrounding whitespace.
pub fn parse_matrix_cells(text: &str) -> Vec<Vec<String>> {
    text.lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| l.split('\t').map(|c| c.trim().to_string()).collect())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use qalcove_core::alcove::lex_chain;

    #[test]
    fn chain_roundtrip() {
        let rs = root_system("C2").unwrap();
        let chain = lex_chain(&rs, &Weight(vec![1, 1])).unwrap();
        let j = ChainJson::from_chain(&rs, &chain);
        let text = serde_json::to_string(&j).unwrap();
        let back: ChainJson = serde_json::from_str(&text).unwrap();
        assert_eq!(back.to_chain().unwrap().1, chain);
        let mut bad = back.clone();
        bad.levels = Some(vec![0; chain.len()]);
        assert!(bad.to_chain().is_err());
        bad.levels = None;
        bad.lambda = vec![1, 0];
        assert!(bad.to_chain().is_err());
    }

    #[test]
    fn index_sets_are_one_based() {
        assert_eq!(index_set(&[0, 2]), "{1,3}");
        assert_eq!(index_set(&[]), "{}");
    }

    #[test]
    fn dot_has_every_edge() {
        let rs = root_system("A2").unwrap();
        let dot = qbg_dot(&rs);
        let edges = dot.matches("->").count();
        let expected: usize = rs.weyl_elements().map(|v| out_edges(&rs, v).len()).sum();
        assert_eq!(edges, expected);
        assert!(dot.contains("\"w0\"") || dot.contains("\"s1s2s1\""));
    }
}
