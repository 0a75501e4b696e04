//! Integer polynomials in the quantum parameters `Q_i` and Laurent
//! polynomials in a single variable `q`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, AddAssign, Mul, Neg, Sub};

use crate::error::{Error, Result};

/// A polynomial in `Q_1, ..., Q_n` with integer coefficients.
///
/// Zero coefficients are never stored, so structural equality is equality of
/// polynomials.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct QPoly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, i64>,
}

impl QPoly {
    pub fn zero(nvars: usize) -> Self {
        QPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::monomial(vec![0; nvars], 1)
    }

    pub fn monomial(exps: Vec<u32>, coeff: i64) -> Self {
        let mut p = QPoly::zero(exps.len());
        p.add_term(exps, coeff);
        p
    }

    /// `Q^xi` for `xi` in the nonnegative coroot cone.
    pub fn q_power(xi: &[i64]) -> Self {
        Self::monomial(xi.iter().map(|&m| m as u32).collect(), 1)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, i64)> {
        self.terms.iter().map(|(k, &v)| (k, v))
    }

    pub fn coeff(&self, exps: &[u32]) -> i64 {
        self.terms.get(exps).copied().unwrap_or(0)
    }

    pub fn add_term(&mut self, exps: Vec<u32>, coeff: i64) {
        debug_assert_eq!(exps.len(), self.nvars);
        if coeff == 0 {
            return;
        }
        match self.terms.get_mut(&exps) {
            Some(v) => {
                *v += coeff;
                if *v == 0 {
                    self.terms.remove(&exps);
                }
            }
            None => {
                self.terms.insert(exps, coeff);
            }
        }
    }

    /// Canonical text form: terms by descending exponent vector, e.g.
    /// `3*Q1*Q2+Q1` or `Q1^2*Q2^3-Q1^2*Q2^2`.
    pub fn to_canonical_string(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, (exps, &c)) in self.terms.iter().rev().enumerate() {
            let mono: Vec<String> = exps
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| {
                    if e == 1 {
                        format!("Q{}", i + 1)
                    } else {
                        format!("Q{}^{}", i + 1, e)
                    }
                })
                .collect();
            if c < 0 {
                out.push('-');
            } else if k > 0 {
                out.push('+');
            }
            let a = c.unsigned_abs();
            if mono.is_empty() {
                out.push_str(&a.to_string());
            } else {
                if a != 1 {
                    out.push_str(&format!("{a}*"));
                }
                out.push_str(&mono.join("*"));
            }
        }
        out
    }

    /// Parses the canonical form (and any reordering of it); whitespace is ignored.
    pub fn parse(s: &str, nvars: usize) -> Result<Self> {
        let bad = || Error::Domain(format!("cannot parse polynomial {s:?}"));
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if t.is_empty() {
            return Err(bad());
        }
        let mut p = QPoly::zero(nvars);
        let mut pieces: Vec<(i64, &str)> = Vec::new();
        let mut start = 0;
        let mut sign = 1;
        let bytes = t.as_bytes();
        for (i, &b) in bytes.iter().enumerate() {
            if b == b'+' || b == b'-' {
                if i > start {
                    pieces.push((sign, &t[start..i]));
                } else if i != 0 {
                    return Err(bad());
                }
                sign = if b == b'-' { -1 } else { 1 };
                start = i + 1;
            }
        }
        if start >= t.len() {
            return Err(bad());
        }
        pieces.push((sign, &t[start..]));
        for (sign, body) in pieces {
            let mut coeff = 1i64;
            let mut exps = vec![0u32; nvars];
            for f in body.split('*') {
                if let Some(rest) = f.strip_prefix('Q') {
                    let (var, e) = match rest.split_once('^') {
                        Some((v, e)) => (v, e.parse::<u32>().map_err(|_| bad())?),
                        None => (rest, 1),
                    };
                    let i: usize = var.parse().map_err(|_| bad())?;
                    if i == 0 || i > nvars {
                        return Err(bad());
                    }
                    exps[i - 1] += e;
                } else {
                    coeff *= f.parse::<i64>().map_err(|_| bad())?;
                }
            }
            p.add_term(exps, sign * coeff);
        }
        Ok(p)
    }
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_canonical_string())
    }
}

impl AddAssign<&QPoly> for QPoly {
    fn add_assign(&mut self, o: &QPoly) {
        for (k, &v) in &o.terms {
            self.add_term(k.clone(), v);
        }
    }
}

impl Add for &QPoly {
    type Output = QPoly;
    fn add(self, o: &QPoly) -> QPoly {
        let mut r = self.clone();
        r += o;
        r
    }
}

impl Neg for &QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        QPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(k, &v)| (k.clone(), -v)).collect(),
        }
    }
}

impl Sub for &QPoly {
    type Output = QPoly;
    fn sub(self, o: &QPoly) -> QPoly {
        self + &(-o)
    }
}

#[allow(clippy::suspicious_arithmetic_impl)]
impl Mul for &QPoly {
    type Output = QPoly;
    fn mul(self, o: &QPoly) -> QPoly {
        let mut r = QPoly::zero(self.nvars);
        for (a, &x) in &self.terms {
            for (b, &y) in &o.terms {
                let e = a.iter().zip(b).map(|(i, j)| i + j).collect();
                r.add_term(e, x * y);
            }
        }
        r
    }
}

/// A Laurent polynomial in `q` with integer coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default, PartialOrd, Ord)]
pub struct Laurent(BTreeMap<i64, i64>);

impl Laurent {
    pub fn zero() -> Self {
        Laurent(BTreeMap::new())
    }

    /// `c q^e`.
    pub fn monomial(e: i64, c: i64) -> Self {
        let mut l = Laurent::zero();
        l.add_term(e, c);
        l
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn add_term(&mut self, e: i64, c: i64) {
        if c == 0 {
            return;
        }
        let v = self.0.entry(e).or_insert(0);
        *v += c;
        if *v == 0 {
            self.0.remove(&e);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.0.iter().map(|(&e, &c)| (e, c))
    }

    pub fn coeff(&self, e: i64) -> i64 {
        self.0.get(&e).copied().unwrap_or(0)
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.0.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.0.keys().next_back().copied()
    }

    /// Multiplies by `q^s`.
    pub fn shifted(&self, s: i64) -> Self {
        Laurent(self.0.iter().map(|(&e, &c)| (e + s, c)).collect())
    }

    pub fn scaled(&self, k: i64) -> Self {
        let mut r = Laurent::zero();
        for (&e, &c) in &self.0 {
            r.add_term(e, c * k);
        }
        r
    }

    /// Drops every term with exponent below `floor`.
    pub fn truncated(&self, floor: i64) -> Self {
        Laurent(self.0.range(floor..).map(|(&e, &c)| (e, c)).collect())
    }
}

impl AddAssign<&Laurent> for Laurent {
    fn add_assign(&mut self, o: &Laurent) {
        for (&e, &c) in &o.0 {
            self.add_term(e, c);
        }
    }
}

impl Mul for &Laurent {
    type Output = Laurent;
    fn mul(self, o: &Laurent) -> Laurent {
        let mut r = Laurent::zero();
        for (&a, &x) in &self.0 {
            for (&b, &y) in &o.0 {
                r.add_term(a + b, x * y);
            }
        }
        r
    }
}

impl fmt::Display for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("0");
        }
        for (k, (&e, &c)) in self.0.iter().rev().enumerate() {
            if c < 0 {
                f.write_str("-")?;
            } else if k > 0 {
                f.write_str("+")?;
            }
            let a = c.unsigned_abs();
            match (e, a) {
                (0, _) => write!(f, "{a}")?,
                (_, 1) => write!(f, "q^{e}")?,
                _ => write!(f, "{a}*q^{e}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_strings() {
        let mut p = QPoly::zero(2);
        p.add_term(vec![1, 0], 1);
        p.add_term(vec![1, 1], 3);
        assert_eq!(p.to_canonical_string(), "3*Q1*Q2+Q1");
        let mut p = QPoly::zero(2);
        p.add_term(vec![2, 2], -1);
        p.add_term(vec![2, 3], 1);
        assert_eq!(p.to_canonical_string(), "Q1^2*Q2^3-Q1^2*Q2^2");
        assert_eq!(QPoly::zero(2).to_canonical_string(), "0");
        assert_eq!(QPoly::one(2).to_canonical_string(), "1");
        assert_eq!((-&QPoly::one(2)).to_canonical_string(), "-1");
    }

    #[test]
    fn parse_roundtrip() {
        for s in [
            "0",
            "1",
            "-1",
            "Q1*Q2-Q1",
            "2*Q1*Q2+Q2",
            "-Q1*Q2^2",
            "Q1^2*Q2^3+Q1^2*Q2^2",
        ] {
            assert_eq!(QPoly::parse(s, 2).unwrap().to_canonical_string(), s);
        }
        assert_eq!(
            QPoly::parse(" Q1 + 2 * Q1 ", 2)
                .unwrap()
                .to_canonical_string(),
            "3*Q1"
        );
        assert!(QPoly::parse("Q3", 2).is_err());
        assert!(QPoly::parse("", 2).is_err());
        assert!(QPoly::parse("Q1+", 2).is_err());
    }

    #[test]
    fn cancellation() {
        let a = QPoly::parse("Q1*Q2-Q1", 2).unwrap();
        assert!((&a - &a).is_zero());
        let b = &a * &QPoly::parse("Q2", 2).unwrap();
        assert_eq!(b.to_canonical_string(), "Q1*Q2^2-Q1*Q2");
    }

    #[test]
    fn laurent() {
        let mut l = Laurent::monomial(-2, 3);
        l.add_term(1, -1);
        assert_eq!(l.min_exp(), Some(-2));
        assert_eq!(l.truncated(0), Laurent::monomial(1, -1));
        assert_eq!(l.shifted(2).coeff(0), 3);
        l.add_term(1, 1);
        assert_eq!(l, Laurent::monomial(-2, 3));
    }
}
