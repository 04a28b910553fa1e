//! Stable monomial ideals, truncation stability and the `t` / `q`
//! regularity bounds.
//!
//! `I` is stable when `x_j * u / x_{m(u)} ∈ I` for every monomial `u ∈ I`
//! and every `1 <= j < m(u)`. Checking minimal generators suffices; the
//! exhaustive variant exists to validate that reduction.

use std::cmp::Reverse;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::hypergraph::IncreasingHypergraph;
use crate::ideal::{MembershipIndex, MonomialIdeal};
use crate::monomial::{monomials_up_to_degree, Monomial};

/// A failed stability move: `shifted = x_j * generator / x_{m(generator)}` is not in the ideal.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StabilityWitness {
    pub generator: Monomial,
    pub j: usize,
    pub shifted: Monomial,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StabilityReport {
    pub ideal: MonomialIdeal,
    pub is_stable: bool,
    pub witness: Option<StabilityWitness>,
}

impl fmt::Display for StabilityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.witness {
            None => write!(f, "stable: yes"),
            Some(w) => write!(
                f,
                "stable: no\nwitness: u={} j={} shifted={} (not in ideal)",
                w.generator, w.j, w.shifted
            ),
        }
    }
}

/// `(j, m(u) descending, canonical position)`; smaller is preferred.
type WitnessKey = (usize, Reverse<usize>, usize);

/// Generator-level stability test.
///
/// When several moves fail, the witness with the smallest `j` is reported,
/// then the largest `m(u)`, then the earliest generator in canonical order.
pub fn is_stable(ideal: &MonomialIdeal) -> Result<StabilityReport> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    if ideal.is_unit() {
        return Err(Error::UnitIdeal);
    }
    let index = MembershipIndex::new(ideal);
    let mut best: Option<(WitnessKey, StabilityWitness)> = None;
    for (pos, u) in ideal.generators().iter().enumerate() {
        let m = u.max_index()?;
        for j in 1..m {
            let key = (j, Reverse(m), pos);
            if best.as_ref().is_some_and(|(k, _)| *k <= key) {
                break;
            }
            let shifted = u.stability_shift(j)?;
            if !index.contains(&shifted) {
                best = Some((
                    key,
                    StabilityWitness {
                        generator: u.clone(),
                        j,
                        shifted,
                    },
                ));
                break;
            }
        }
    }
    let witness = best.map(|(_, w)| w);
    Ok(StabilityReport {
        ideal: ideal.clone(),
        is_stable: witness.is_none(),
        witness,
    })
}

/// Checks the stability condition on every monomial of `ideal` up to `max_degree`.
pub fn is_stable_exhaustive(ideal: &MonomialIdeal, max_degree: u32) -> bool {
    monomials_up_to_degree(ideal.n(), max_degree)
        .into_iter()
        .filter(|u| !u.is_unit() && ideal.contains_unchecked(u))
        .all(|u| {
            let m = u.max_index().expect("non-unit");
            (1..m).all(|j| {
                u.stability_shift(j)
                    .is_ok_and(|v| ideal.contains_unchecked(&v))
            })
        })
}

/// `t = (Σ a_i) - max a_i`, i.e. `Σ_{i>=2} a_i` once `a` is sorted nonincreasingly.
pub fn t_bound(a: &[u32]) -> Result<u64> {
    let max = a.iter().copied().max().unwrap_or(0);
    if max == 0 {
        return Err(Error::ZeroVector);
    }
    let sum: u64 = a.iter().map(|&x| u64::from(x)).sum();
    Ok(sum - u64::from(max))
}

/// Sum of entries `2..=s` of `a` sorted nonincreasingly. Differs from
/// [`t_bound`] only when `s < n`; reported alongside it, never used as a bound.
pub fn t_bound_first_entries(a: &[u32], s: usize) -> u64 {
    let mut sorted = a.to_vec();
    sorted.sort_unstable_by(|x, y| y.cmp(x));
    sorted.iter().take(s).skip(1).map(|&x| u64::from(x)).sum()
}

/// `q = m(I) * (deg(I) - 1) + 1`.
pub fn q_bound(ideal: &MonomialIdeal) -> Result<u64> {
    let m = ideal.max_index()? as u64;
    let deg = ideal.max_degree()?;
    m.checked_mul(deg - 1)
        .and_then(|x| x.checked_add(1))
        .ok_or(Error::Overflow)
}

/// `(x_1^{a_1}, ..., x_n^{a_n})` truncated at `Σ_{i>=2} a_i`, for
/// `n - 1 >= a_1 >= ... >= a_n >= 1`.
pub fn pure_power_truncation(a: &[u32]) -> Result<(MonomialIdeal, u64)> {
    let n = a.len();
    if n < 2 {
        return Err(Error::Hypothesis(format!(
            "need at least 2 variables, got {n}"
        )));
    }
    if a.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::Hypothesis("exponents must be nonincreasing".into()));
    }
    if a[n - 1] < 1 {
        return Err(Error::Hypothesis("exponents must be positive".into()));
    }
    if a[0] as usize > n - 1 {
        return Err(Error::Hypothesis(format!(
            "largest exponent {} exceeds n - 1 = {}",
            a[0],
            n - 1
        )));
    }
    let t = t_bound(a)?;
    let ideal = MonomialIdeal::pure_powers(a)?.truncate(t)?;
    Ok((ideal, t))
}

/// Whether the pure-power ideal truncated at `t` is stable.
pub fn check_pure_power_truncation(a: &[u32]) -> Result<bool> {
    let (truncated, _) = pure_power_truncation(a)?;
    Ok(is_stable(&truncated)?.is_stable)
}

/// Given stable truncations `I_{>=q_i}` and `J_{>=q_j}`, whether
/// `(I ∩ J)_{>=max(q_i, q_j)}` is stable.
pub fn check_intersection_truncation(
    i: &MonomialIdeal,
    j: &MonomialIdeal,
    q_i: u32,
    q_j: u32,
) -> Result<bool> {
    if !is_stable(&i.truncate(q_i.into())?)?.is_stable {
        return Err(Error::UnstableInput {
            which: "first",
            degree: q_i,
        });
    }
    if !is_stable(&j.truncate(q_j.into())?)?.is_stable {
        return Err(Error::UnstableInput {
            which: "second",
            degree: q_j,
        });
    }
    let both = i.intersect(j)?.truncate(q_i.max(q_j).into())?;
    Ok(is_stable(&both)?.is_stable)
}

/// Truncation of a hypergraph's dual at `t`, computed in canonical vertex
/// order on the variables of `E_s`.
#[derive(Debug, Clone)]
pub struct DualTruncation {
    /// The dual restricted to the covered variables.
    pub dual: MonomialIdeal,
    pub t: u64,
    pub report: StabilityReport,
    /// Set when some vertex lies in no edge, so the check ran on a subring.
    pub restricted: bool,
}

pub fn dual_truncation(h: &IncreasingHypergraph) -> Result<DualTruncation> {
    let (canon, _) = h.canonical_vertex_order();
    let r = canon.covered().len();
    let dual = canon
        .special_dual()?
        .ideal
        .restrict(r)
        .expect("dual generators live on the covered vertices");
    let t = t_bound(canon.containment_vector().entries())?;
    let report = is_stable(&dual.truncate(t)?)?;
    Ok(DualTruncation {
        dual,
        t,
        report,
        restricted: canon.has_uncovered_vertices(),
    })
}

/// Whether the hypergraph's dual truncated at `t` is stable.
pub fn check_dual_truncation_stable(h: &IncreasingHypergraph) -> Result<bool> {
    Ok(dual_truncation(h)?.report.is_stable)
}

/// Smallest `e <= from` such that every truncation at `e..=from` is stable,
/// or `None` if the truncation at `from` is not.
pub fn minimal_stable_truncation(ideal: &MonomialIdeal, from: u64) -> Result<Option<u64>> {
    if !is_stable(&ideal.truncate(from)?)?.is_stable {
        return Ok(None);
    }
    let mut e = from;
    while e > 0 && is_stable(&ideal.truncate(e - 1)?)?.is_stable {
        e -= 1;
    }
    Ok(Some(e))
}
