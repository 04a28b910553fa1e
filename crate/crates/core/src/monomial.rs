//! Monomials as exponent vectors in `N^n`.
//!
//! Variable indices in the public API are 1-based: index `i` names `x_i`.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A monomial `x^b` with `b` in `N^n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Monomial {
    exponents: Vec<u32>,
}

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Result<Self> {
        if exponents.is_empty() {
            return Err(Error::EmptyAmbient);
        }
        Ok(Self { exponents })
    }

    /// The unit monomial `1` in `n` variables.
    pub fn unit(n: usize) -> Result<Self> {
        Self::new(vec![0; n])
    }

    /// The variable `x_i` in `n` variables.
    pub fn variable(i: usize, n: usize) -> Result<Self> {
        Self::pure_power(i, 1, n)
    }

    /// `x_i^e` in `n` variables.
    pub fn pure_power(i: usize, e: u32, n: usize) -> Result<Self> {
        if i == 0 || i > n {
            return Err(Error::VariableOutOfRange { index: i, n });
        }
        let mut exponents = vec![0; n];
        exponents[i - 1] = e;
        Self::new(exponents)
    }

    /// The squarefree monomial on the given 1-based support.
    pub fn squarefree<I: IntoIterator<Item = usize>>(support: I, n: usize) -> Result<Self> {
        let mut exponents = vec![0; n];
        for i in support {
            if i == 0 || i > n {
                return Err(Error::VariableOutOfRange { index: i, n });
            }
            exponents[i - 1] = 1;
        }
        Self::new(exponents)
    }

    pub fn n(&self) -> usize {
        self.exponents.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    /// Exponent of `x_i` (1-based). Out-of-range indices read as 0.
    pub fn exponent(&self, i: usize) -> u32 {
        i.checked_sub(1)
            .and_then(|k| self.exponents.get(k))
            .copied()
            .unwrap_or(0)
    }

    pub fn is_unit(&self) -> bool {
        self.exponents.iter().all(|&e| e == 0)
    }

    /// Total degree.
    pub fn degree(&self) -> u64 {
        self.exponents.iter().map(|&e| u64::from(e)).sum()
    }

    fn check_dim(&self, other: &Self) -> Result<()> {
        if self.n() != other.n() {
            return Err(Error::DimensionMismatch {
                left: self.n(),
                right: other.n(),
            });
        }
        Ok(())
    }

    /// `self | other`, i.e. componentwise `<=`.
    pub fn divides(&self, other: &Self) -> Result<bool> {
        self.check_dim(other)?;
        Ok(self.divides_unchecked(other))
    }

    pub(crate) fn divides_unchecked(&self, other: &Self) -> bool {
        self.exponents
            .iter()
            .zip(&other.exponents)
            .all(|(a, b)| a <= b)
    }

    /// Componentwise maximum.
    pub fn lcm(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        Ok(self.lcm_unchecked(other))
    }

    pub(crate) fn lcm_unchecked(&self, other: &Self) -> Self {
        Self {
            exponents: self
                .exponents
                .iter()
                .zip(&other.exponents)
                .map(|(&a, &b)| a.max(b))
                .collect(),
        }
    }

    /// Product, with overflow reported.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        let exponents = self
            .exponents
            .iter()
            .zip(&other.exponents)
            .map(|(&a, &b)| a.checked_add(b).ok_or(Error::Overflow))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { exponents })
    }

    /// `self / other` when `other | self`.
    pub fn checked_div(&self, other: &Self) -> Option<Self> {
        if self.n() != other.n() || !other.divides_unchecked(self) {
            return None;
        }
        Some(Self {
            exponents: self
                .exponents
                .iter()
                .zip(&other.exponents)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    /// 1-based indices of the variables dividing `self`.
    pub fn support(&self) -> BTreeSet<usize> {
        self.exponents
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(k, _)| k + 1)
            .collect()
    }

    /// `m(u)`: the largest index `i` with `x_i | u`.
    pub fn max_index(&self) -> Result<usize> {
        self.exponents
            .iter()
            .rposition(|&e| e > 0)
            .map(|k| k + 1)
            .ok_or(Error::UnitMonomial)
    }

    /// `x_j * u / x_{m(u)}` for `1 <= j < m(u)`.
    pub fn stability_shift(&self, j: usize) -> Result<Self> {
        let m = self.max_index()?;
        if j == 0 || j >= m {
            return Err(Error::ShiftIndex { j, m });
        }
        let mut exponents = self.exponents.clone();
        exponents[j - 1] = exponents[j - 1].checked_add(1).ok_or(Error::Overflow)?;
        exponents[m - 1] -= 1;
        Ok(Self { exponents })
    }

    /// Degree ascending, then exponent sequences lexicographically descending.
    pub fn canonical_compare(&self, other: &Self) -> Result<Ordering> {
        self.check_dim(other)?;
        Ok(self.canonical_unchecked(other))
    }

    fn canonical_unchecked(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.exponents.cmp(&self.exponents))
    }

    /// The exponent vector rendered as `[3,3,0,0]`.
    pub fn vector_string(&self) -> String {
        vector_string(&self.exponents)
    }

    /// Restriction to the first `r` variables. Fails if a dropped variable divides `self`.
    pub fn truncate_ambient(&self, r: usize) -> Option<Self> {
        if r == 0 || r > self.n() || self.exponents[r..].iter().any(|&e| e > 0) {
            return None;
        }
        Some(Self {
            exponents: self.exponents[..r].to_vec(),
        })
    }

    /// Pads with zero exponents up to `n` variables.
    pub fn extend_ambient(&self, n: usize) -> Self {
        let mut exponents = self.exponents.clone();
        if n > exponents.len() {
            exponents.resize(n, 0);
        }
        Self { exponents }
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.n()
            .cmp(&other.n())
            .then_with(|| self.canonical_unchecked(other))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl TryFrom<Vec<u32>> for Monomial {
    type Error = Error;

    fn try_from(v: Vec<u32>) -> Result<Self> {
        Self::new(v)
    }
}

impl From<Monomial> for Vec<u32> {
    fn from(m: Monomial) -> Self {
        m.exponents
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_unit() {
            return f.write_str("1");
        }
        let mut first = true;
        for (k, &e) in self.exponents.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            write!(f, "x{}", k + 1)?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

pub(crate) fn vector_string<T: fmt::Display>(v: &[T]) -> String {
    let parts: Vec<String> = v.iter().map(ToString::to_string).collect();
    format!("[{}]", parts.join(","))
}

/// Every monomial of total degree exactly `degree` in `n` variables,
/// in lexicographically descending exponent order.
pub fn monomials_of_degree(n: usize, degree: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    if n == 0 {
        return out;
    }
    let mut current = vec![0u32; n];
    compositions(&mut current, 0, degree, &mut out);
    out
}

fn compositions(current: &mut Vec<u32>, pos: usize, remaining: u32, out: &mut Vec<Monomial>) {
    if pos + 1 == current.len() {
        current[pos] = remaining;
        out.push(Monomial {
            exponents: current.clone(),
        });
        current[pos] = 0;
        return;
    }
    for e in (0..=remaining).rev() {
        current[pos] = e;
        compositions(current, pos + 1, remaining - e, out);
    }
    current[pos] = 0;
}

/// Every monomial of total degree at most `degree` in `n` variables.
pub fn monomials_up_to_degree(n: usize, degree: u32) -> Vec<Monomial> {
    (0..=degree)
        .flat_map(|k| monomials_of_degree(n, k))
        .collect()
}
