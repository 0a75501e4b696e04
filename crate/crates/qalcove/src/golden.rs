//! Reference operator matrices shipped under the data directory.
//!
//! `golden/SHA256SUMS` pins every file. `golden/ERRATA.tsv` lists printed
//! entries known to be wrong, with the corrected value.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use sha2::{Digest, Sha256};

use qalcove_core::qbops::{
    operator_matrix, tabulated_operator, tabulated_operators, OperatorMatrix,
};
use qalcove_core::RootSystem;

use crate::formats::parse_matrix_cells;

pub const DATA_DIR_ENV: &str = "QALCOVE_DATA_DIR";

/// `$QALCOVE_DATA_DIR`, or the `data` directory of the source tree.
pub fn data_dir() -> PathBuf {
    match std::env::var_os(DATA_DIR_ENV) {
        Some(d) => PathBuf::from(d),
        None => Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data"),
    }
}

fn golden_dir(data: &Path) -> PathBuf {
    data.join("golden")
}

/// Checks every file listed in `SHA256SUMS` and returns the listed names.
pub fn verify_checksums(data: &Path) -> Result<Vec<String>> {
    let dir = golden_dir(data);
    let sums = fs::read_to_string(dir.join("SHA256SUMS"))
        .with_context(|| format!("reading checksums in {}", dir.display()))?;
    let mut names = Vec::new();
    for line in sums.lines().filter(|l| !l.trim().is_empty()) {
        let (hash, name) = line
            .split_once(char::is_whitespace)
            .with_context(|| format!("malformed checksum line {line:?}"))?;
        let name = name.trim().trim_start_matches('*');
        let bytes = fs::read(dir.join(name)).with_context(|| format!("reading {name}"))?;
        let got = format!("{:x}", Sha256::digest(&bytes));
        if got != hash {
            bail!("checksum mismatch for {name}: expected {hash}, got {got}");
        }
        names.push(name.to_string());
    }
    Ok(names)
}

pub fn golden_file_name(label: &str, index: usize) -> String {
    format!("{}_op{:02}.tsv", label.to_ascii_lowercase(), index + 1)
}

pub fn load_matrix(rs: &RootSystem, path: &Path) -> Result<OperatorMatrix> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    OperatorMatrix::from_strings(rs, &parse_matrix_cells(&text))
        .with_context(|| format!("parsing {}", path.display()))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Erratum {
    pub printed: String,
    pub corrected: String,
}

/// Errata keyed by `(file, row, col)` with 1-based row and column.
pub fn load_errata(data: &Path) -> Result<BTreeMap<(String, usize, usize), Erratum>> {
    let path = golden_dir(data).join("ERRATA.tsv");
    let text = fs::read_to_string(&path).with_context(|| format!("reading {}", path.display()))?;
    let mut out = BTreeMap::new();
    for line in text
        .lines()
        .filter(|l| !l.trim().is_empty() && !l.starts_with('#'))
    {
        let f: Vec<&str> = line.split('\t').map(str::trim).collect();
        if f.len() != 5 {
            bail!("malformed erratum {line:?}");
        }
        out.insert(
            (f[0].to_string(), f[1].parse()?, f[2].parse()?),
            Erratum {
                printed: f[3].to_string(),
                corrected: f[4].to_string(),
            },
        );
    }
    Ok(out)
}

/// A computed entry that differs from the file, 1-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub row: usize,
    pub col: usize,
    pub computed: String,
    pub printed: String,
}

#[derive(Clone, Debug)]
pub struct GoldenComparison {
    pub file: String,
    pub mismatches: Vec<Mismatch>,
}

/// Compares every tabulated operator of `rs` with its golden file.
pub fn compare_golden(rs: &RootSystem, data: &Path) -> Result<Vec<GoldenComparison>> {
    let n = tabulated_operators(rs.label()).map_or(0, |t| t.len());
    if n == 0 {
        bail!("no tabulated operators for type {}", rs.label());
    }
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let file = golden_file_name(rs.label(), i);
        let printed = load_matrix(rs, &golden_dir(data).join(&file))?;
        let computed = operator_matrix(rs, &tabulated_operator(rs, i)?);
        let mismatches = computed
            .diff(&printed)
            .into_iter()
            .map(|(r, c)| Mismatch {
                row: r + 1,
                col: c + 1,
                computed: computed.entry(r, c).to_canonical_string(),
                printed: printed.entry(r, c).to_canonical_string(),
            })
            .collect();
        out.push(GoldenComparison { file, mismatches });
    }
    Ok(out)
}

/// Whether the mismatches are exactly the listed errata, each with the
/// listed printed and corrected values. Errata for other types are ignored.
pub fn matches_up_to_errata(
    cmp: &[GoldenComparison],
    errata: &BTreeMap<(String, usize, usize), Erratum>,
) -> bool {
    let files: Vec<&str> = cmp.iter().map(|c| c.file.as_str()).collect();
    let relevant = errata
        .iter()
        .filter(|((f, _, _), _)| files.contains(&f.as_str()))
        .count();
    let found = cmp
        .iter()
        .flat_map(|c| c.mismatches.iter().map(move |m| (c, m)))
        .filter(|(c, m)| {
            errata
                .get(&(c.file.clone(), m.row, m.col))
                .is_some_and(|e| e.printed == m.printed && e.corrected == m.computed)
        })
        .count();
    let total: usize = cmp.iter().map(|c| c.mismatches.len()).sum();
    found == total && total == relevant
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::root_system;

    #[test]
    fn shipped_files_are_intact() {
        let names = verify_checksums(&data_dir()).unwrap();
        assert_eq!(names.len(), 17);
    }

    #[test]
    fn c2_matches_exactly() {
        let rs = root_system("C2").unwrap();
        let cmp = compare_golden(&rs, &data_dir()).unwrap();
        assert_eq!(cmp.len(), 4);
        assert!(cmp.iter().all(|c| c.mismatches.is_empty()));
    }

    #[test]
    fn tampering_is_detected() {
        let tmp = tempfile::tempdir().unwrap();
        let g = tmp.path().join("golden");
        fs::create_dir(&g).unwrap();
        for e in fs::read_dir(golden_dir(&data_dir())).unwrap() {
            let e = e.unwrap();
            fs::copy(e.path(), g.join(e.file_name())).unwrap();
        }
        assert!(verify_checksums(tmp.path()).is_ok());
        fs::write(g.join("c2_op01.tsv"), "1\n").unwrap();
        assert!(verify_checksums(tmp.path()).is_err());
    }
}
