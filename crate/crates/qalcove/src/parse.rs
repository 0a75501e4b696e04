//! Parsing of command-line style values: type labels, integer vectors, words.

use anyhow::{anyhow, bail, Context, Result};
use qalcove_core::rootsys::cartan_matrix;
use qalcove_core::{Coroot, Root, RootSystem, Weight, Weyl};

/// Builds a root system, inferring the rank from the label.
pub fn root_system(label: &str) -> Result<RootSystem> {
    let rank = cartan_matrix(label)?.len();
    Ok(RootSystem::new(label, rank)?)
}

/// `"-2,1"` or `"-2 1"`; the empty string is the empty vector.
pub fn ints(s: &str) -> Result<Vec<i64>> {
    s.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<i64>()
                .with_context(|| format!("not an integer: {t:?}"))
        })
        .collect()
}

fn sized(rs: &RootSystem, s: &str, what: &str) -> Result<Vec<i64>> {
    let v = ints(s)?;
    if v.len() != rs.rank() {
        bail!(
            "{what} {s:?} has {} entries, type {} has rank {}",
            v.len(),
            rs.label(),
            rs.rank()
        );
    }
    Ok(v)
}

pub fn weight(rs: &RootSystem, s: &str) -> Result<Weight> {
    Ok(Weight(sized(rs, s, "weight")?))
}

pub fn coroot(rs: &RootSystem, s: &str) -> Result<Coroot> {
    if s.trim().is_empty() {
        return Ok(Coroot::zero(rs.rank()));
    }
    Ok(Coroot(sized(rs, s, "coroot")?))
}

pub fn root(rs: &RootSystem, s: &str) -> Result<Root> {
    Ok(rs.root(&sized(rs, s, "root")?)?)
}

/// Roots separated by `;`, e.g. `"1,0;0,1"`.
pub fn roots(rs: &RootSystem, s: &str) -> Result<Vec<Root>> {
    s.split(';')
        .filter(|t| !t.trim().is_empty())
        .map(|t| root(rs, t))
        .collect()
}

pub fn weyl(rs: &RootSystem, s: &str) -> Result<Weyl> {
    rs.parse_word(s).map_err(|e| anyhow!("{e}"))
}

/// Generator indices of the canonical word, 1-based.
pub fn word_indices(rs: &RootSystem, w: Weyl) -> Vec<u8> {
    rs.word(w).iter().map(|i| i + 1).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn values() {
        let rs = root_system("C2").unwrap();
        assert_eq!(ints(" -2, 1 ").unwrap(), vec![-2, 1]);
        assert!(ints("1,x").is_err());
        assert_eq!(weight(&rs, "-2,1").unwrap(), Weight(vec![-2, 1]));
        assert!(weight(&rs, "1").is_err());
        assert_eq!(coroot(&rs, "").unwrap(), Coroot(vec![0, 0]));
        assert_eq!(roots(&rs, "2,1;-1,0").unwrap().len(), 2);
        assert!(root(&rs, "1,2").is_err());
        let w = weyl(&rs, "s2s1").unwrap();
        assert_eq!(word_indices(&rs, w), vec![2, 1]);
        assert!(root_system("E9").is_err());
    }
}
