//! Exact matrix rank over `Q` (fraction-free Bareiss elimination) and over `F_p`.

use num_bigint::BigInt;
use num_traits::Zero;

/// Coefficient field for homology computations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Field {
    Rational,
    Prime(u64),
}

impl Field {
    /// `0` selects the rationals; anything else must be a prime below 2^32.
    pub fn from_characteristic(c: u64) -> crate::Result<Self> {
        match c {
            0 => Ok(Field::Rational),
            p if is_prime(p) && p < (1 << 32) => Ok(Field::Prime(p)),
            other => Err(crate::Error::InvalidCharacteristic(other)),
        }
    }

    pub fn characteristic(self) -> u64 {
        match self {
            Field::Rational => 0,
            Field::Prime(p) => p,
        }
    }

    pub fn rank(self, rows: usize, cols: usize, entries: &[i64]) -> usize {
        match self {
            Field::Rational => rank_rational(rows, cols, entries),
            Field::Prime(p) => rank_mod_p(rows, cols, entries, p),
        }
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut k = 2;
    while k * k <= p {
        if p.is_multiple_of(k) {
            return false;
        }
        k += 1;
    }
    true
}

/// Rank of a dense row-major integer matrix over `Q`.
pub fn rank_rational(rows: usize, cols: usize, entries: &[i64]) -> usize {
    assert_eq!(entries.len(), rows * cols);
    let small: Vec<i128> = entries.iter().map(|&x| i128::from(x)).collect();
    match bareiss_i128(rows, cols, small) {
        Some(r) => r,
        None => bareiss_big(
            rows,
            cols,
            entries.iter().map(|&x| BigInt::from(x)).collect(),
        ),
    }
}

/// Bareiss elimination in `i128`; `None` on overflow.
fn bareiss_i128(rows: usize, cols: usize, mut a: Vec<i128>) -> Option<usize> {
    let mut rank = 0;
    let mut prev: i128 = 1;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(pivot) = (rank..rows).find(|&r| a[r * cols + col] != 0) else {
            continue;
        };
        if pivot != rank {
            for c in 0..cols {
                a.swap(pivot * cols + c, rank * cols + c);
            }
        }
        let p = a[rank * cols + col];
        for r in rank + 1..rows {
            let f = a[r * cols + col];
            for c in col + 1..cols {
                let lhs = p.checked_mul(a[r * cols + c])?;
                let rhs = f.checked_mul(a[rank * cols + c])?;
                // exact by Sylvester's identity
                a[r * cols + c] = lhs.checked_sub(rhs)? / prev;
            }
            a[r * cols + col] = 0;
        }
        prev = p;
        rank += 1;
    }
    Some(rank)
}

fn bareiss_big(rows: usize, cols: usize, mut a: Vec<BigInt>) -> usize {
    let mut rank = 0;
    let mut prev = BigInt::from(1);
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(pivot) = (rank..rows).find(|&r| !a[r * cols + col].is_zero()) else {
            continue;
        };
        if pivot != rank {
            for c in 0..cols {
                a.swap(pivot * cols + c, rank * cols + c);
            }
        }
        let p = a[rank * cols + col].clone();
        for r in rank + 1..rows {
            let f = a[r * cols + col].clone();
            for c in col + 1..cols {
                let v = &p * &a[r * cols + c] - &f * &a[rank * cols + c];
                a[r * cols + c] = v / &prev;
            }
            a[r * cols + col] = BigInt::zero();
        }
        prev = p;
        rank += 1;
    }
    rank
}

/// Rank of a dense row-major integer matrix over `F_p`.
pub fn rank_mod_p(rows: usize, cols: usize, entries: &[i64], p: u64) -> usize {
    assert_eq!(entries.len(), rows * cols);
    let m = p as i128;
    let mut a: Vec<u64> = entries
        .iter()
        .map(|&x| (i128::from(x).rem_euclid(m)) as u64)
        .collect();
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(pivot) = (rank..rows).find(|&r| a[r * cols + col] != 0) else {
            continue;
        };
        if pivot != rank {
            for c in 0..cols {
                a.swap(pivot * cols + c, rank * cols + c);
            }
        }
        let inv = pow_mod(a[rank * cols + col], p - 2, p);
        for r in rank + 1..rows {
            let f = a[r * cols + col] * inv % p;
            if f == 0 {
                continue;
            }
            for c in col..cols {
                let sub = f * a[rank * cols + c] % p;
                a[r * cols + c] = (a[r * cols + c] + p - sub) % p;
            }
        }
        rank += 1;
    }
    rank
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn small_ranks() {
        assert_eq!(rank_rational(2, 2, &[1, 2, 2, 4]), 1);
        assert_eq!(rank_rational(2, 2, &[1, 2, 3, 4]), 2);
        assert_eq!(rank_rational(3, 3, &[0; 9]), 0);
        assert_eq!(rank_rational(0, 4, &[]), 0);
        // boundary of a hollow triangle: edges 12, 13, 23 -> vertices
        let d1 = [-1, -1, 0, 1, 0, -1, 0, 1, 1];
        assert_eq!(rank_rational(3, 3, &d1), 2);
        assert_eq!(rank_mod_p(3, 3, &d1, 2), 2);
    }

    #[test]
    fn characteristic_matters() {
        // det = 2
        let m = [1, 1, -1, 1];
        assert_eq!(rank_rational(2, 2, &m), 2);
        assert_eq!(rank_mod_p(2, 2, &m, 2), 1);
        assert_eq!(rank_mod_p(2, 2, &m, 3), 2);
    }

    #[test]
    fn big_fallback_agrees() {
        let entries: Vec<i64> = (0..36).map(|k| ((k * 7919) % 23) as i64 - 11).collect();
        let big = bareiss_big(6, 6, entries.iter().map(|&x| BigInt::from(x)).collect());
        assert_eq!(rank_rational(6, 6, &entries), big);
    }

    #[test]
    fn field_from_characteristic() {
        assert_eq!(Field::from_characteristic(0).unwrap(), Field::Rational);
        assert_eq!(Field::from_characteristic(2).unwrap(), Field::Prime(2));
        assert!(Field::from_characteristic(4).is_err());
        assert!(Field::from_characteristic(1).is_err());
    }

    /// Rank via exact rational row reduction with explicit fractions (num/den pairs).
    fn rank_by_fractions(rows: usize, cols: usize, entries: &[i64]) -> usize {
        let mut a: Vec<Vec<(BigInt, BigInt)>> = (0..rows)
            .map(|r| {
                (0..cols)
                    .map(|c| (BigInt::from(entries[r * cols + c]), BigInt::from(1)))
                    .collect()
            })
            .collect();
        let mut rank = 0;
        for col in 0..cols {
            let Some(p) = (rank..rows).find(|&r| !a[r][col].0.is_zero()) else {
                continue;
            };
            a.swap(p, rank);
            let (pn, pd) = a[rank][col].clone();
            let pivot = a[rank].clone();
            for (r, row) in a.iter_mut().enumerate() {
                if r == rank || row[col].0.is_zero() {
                    continue;
                }
                let (fn_, fd) = row[col].clone();
                // factor = (fn/fd) / (pn/pd)
                let (kn, kd) = (&fn_ * &pd, &fd * &pn);
                for ((xn, xd), y) in pivot.iter().zip(row.iter_mut()) {
                    let (yn, yd) = y.clone();
                    let sn = &kn * xn;
                    let sd = &kd * xd;
                    *y = (&yn * &sd - &sn * &yd, &yd * &sd);
                }
            }
            rank += 1;
        }
        rank
    }

    proptest! {
        #[test]
        fn bareiss_matches_fraction_elimination(
            (rows, cols, entries) in (1usize..6, 1usize..6)
                .prop_flat_map(|(r, c)| (Just(r), Just(c), proptest::collection::vec(-2i64..3, r * c)))
        ) {
            prop_assert_eq!(rank_rational(rows, cols, &entries), rank_by_fractions(rows, cols, &entries));
        }
    }
}
