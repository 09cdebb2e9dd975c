//! Binary-digit machinery behind the projective-space gap formulas.
//!
//! The cup-length formulas for symmetric products reduce to questions about
//! the binary expansion of `2n`: where runs of ones stop, how much zero mass
//! sits underneath them, and which binomial coefficients survive mod 2.

use crate::error::{Error, Result};

/// Floor of the base-2 logarithm. Panics on zero.
pub fn floor_log2(m: u64) -> u32 {
    assert!(m > 0, "floor_log2 of zero");
    63 - m.leading_zeros()
}

/// Binary expansion of a positive integer together with its digit queries.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BinaryProfile {
    m: u64,
    e: u32,
}

impl BinaryProfile {
    pub fn new(m: u64) -> Result<Self> {
        if m == 0 {
            return Err(Error::PositiveRequired {
                what: "binary profile argument",
            });
        }
        Ok(BinaryProfile {
            m,
            e: floor_log2(m),
        })
    }

    pub fn value(&self) -> u64 {
        self.m
    }

    /// Index of the leading one.
    pub fn e(&self) -> u32 {
        self.e
    }

    /// The digit `δ_i`; zero beyond the leading one.
    pub fn digit(&self, i: u32) -> bool {
        i < 64 && (self.m >> i) & 1 == 1
    }

    /// Indices where a run of at least two ones stops going up:
    /// `δ_i = δ_{i-1} = 1` and `δ_{i+1} = 0`.
    pub fn s_set(&self) -> Vec<u32> {
        (1..=self.e)
            .filter(|&i| self.digit(i) && self.digit(i - 1) && !self.digit(i + 1))
            .collect()
    }

    /// Zero mass below `i`: the sum of `2^j` over digits `j <= i` that are zero.
    pub fn z_value(&self, i: u32) -> Result<u64> {
        if i > self.e {
            return Err(Error::DigitIndex { m: self.m, i });
        }
        let mask = if i >= 63 {
            u64::MAX
        } else {
            (1u64 << (i + 1)) - 1
        };
        Ok(!self.m & mask)
    }

    /// Length of the longest run of consecutive ones.
    pub fn longest_ones_run(&self) -> u32 {
        let mut m = self.m;
        let mut run = 0;
        while m != 0 {
            m &= m << 1;
            run += 1;
        }
        run
    }
}

/// Run stops of `m`, smallest first.
pub fn s_set(m: u64) -> Result<Vec<u32>> {
    Ok(BinaryProfile::new(m)?.s_set())
}

/// Zero mass of `m` below digit `i`.
pub fn z_value(m: u64, i: u32) -> Result<u64> {
    BinaryProfile::new(m)?.z_value(i)
}

/// Parity of `binom(m, j)`: odd exactly when `j` is a bitwise submask of `m`.
pub fn binom_parity(m: u64, j: u64) -> bool {
    j & !m == 0
}

/// Zero-divisor gap of the k-fold product of `P^{2n}`.
///
/// The two-fold case goes through [`gap_p2n_k2`]; the digit-run formula is
/// only trusted from `k = 3` on (it already undershoots at `n = 2, k = 2`).
pub fn gap_p2n(n: u64, k: u32) -> Result<u64> {
    if k < 2 {
        return Err(Error::InvalidK { k });
    }
    if n == 0 {
        return Err(Error::PositiveRequired { what: "n" });
    }
    if k == 2 {
        Ok(gap_p2n_k2(n))
    } else {
        gap_p2n_run_formula(n, k)
    }
}

/// Two-fold gap `4n - 2^{e+2} + 1` where `2^e <= n < 2^{e+1}`.
pub fn gap_p2n_k2(n: u64) -> u64 {
    assert!(n > 0 && n < 1 << 60, "n out of range");
    let e = floor_log2(n);
    4 * n - (1u64 << (e + 2)) + 1
}

/// Digit-run gap `max_{i in S(2n)} max(0, 2^{i+1} - 1 - k Z_i(2n))`.
///
/// Exposed separately from [`gap_p2n`] so callers can compare it with the
/// two-fold closed form at `k = 2`, where it is not valid.
pub fn gap_p2n_run_formula(n: u64, k: u32) -> Result<u64> {
    if n == 0 {
        return Err(Error::PositiveRequired { what: "n" });
    }
    if k < 2 {
        return Err(Error::InvalidK { k });
    }
    assert!(n < 1 << 60, "n out of range");
    let profile = BinaryProfile::new(2 * n)?;
    let mut best: u64 = 0;
    for i in profile.s_set() {
        let pow = (1u128 << (i + 1)) - 1;
        let kz = k as u128 * profile.z_value(i)? as u128;
        if pow > kz {
            best = best.max((pow - kz) as u64);
        }
    }
    Ok(best)
}

/// A `k` from which the digit-run gap of `P^{2n}` is guaranteed to vanish:
/// `2^{l+1} - 1` for `l` the longest run of ones in `n`.
pub fn gap_vanishing_k_threshold(n: u64) -> Result<u64> {
    let run = BinaryProfile::new(n)?.longest_ones_run();
    Ok((1u64 << (run + 1)) - 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn s_set_and_z_values_of_102() {
        assert_eq!(s_set(102).unwrap(), vec![2, 6]);
        assert_eq!(z_value(102, 2).unwrap(), 1);
        assert_eq!(z_value(102, 6).unwrap(), 25);
    }

    #[test]
    fn s_set_small_cases() {
        assert_eq!(s_set(3).unwrap(), vec![1]);
        assert_eq!(s_set(2).unwrap(), Vec::<u32>::new());
        assert_eq!(s_set(6).unwrap(), vec![2]);
        assert_eq!(s_set(4).unwrap(), Vec::<u32>::new());
        assert!(s_set(0).is_err());
    }

    #[test]
    fn z_value_rejects_indices_beyond_leading_one() {
        assert!(z_value(6, 3).is_err());
        assert_eq!(z_value(6, 2).unwrap(), 1);
    }

    #[test]
    fn parity_matches_pascal_triangle() {
        let mut row = vec![1u8];
        for m in 0..64u64 {
            for j in 0..=m {
                assert_eq!(
                    row[j as usize] == 1,
                    binom_parity(m, j),
                    "binom({m}, {j})"
                );
            }
            let mut next = vec![1u8];
            for j in 1..=m as usize {
                next.push(row[j - 1] ^ row[j]);
            }
            next.push(1);
            row = next;
        }
    }

    #[test]
    fn central_binomial_of_4n_is_even() {
        for n in 1..=64u64 {
            assert!(!binom_parity(4 * n, 2 * n), "binom(4*{n}, 2*{n})");
        }
    }

    #[test]
    fn two_fold_gap_values() {
        let expected = [1, 1, 5, 1, 5, 9, 13, 1];
        for (n, want) in (1u64..=8).zip(expected) {
            assert_eq!(gap_p2n(n, 2).unwrap(), want, "n = {n}");
        }
    }

    #[test]
    fn two_fold_branch_differs_from_run_formula() {
        // The run formula sees no run stop in 100 (binary of 4) and reports 0,
        // but the two-fold gap of P^4 is 1. gap_p2n must take the k = 2 branch.
        assert_eq!(gap_p2n_run_formula(2, 2).unwrap(), 0);
        assert_eq!(gap_p2n(2, 2).unwrap(), 1);
    }

    #[test]
    fn run_formula_values_for_n_51() {
        let expected = [(3, 52), (4, 27), (5, 2), (6, 1), (7, 0), (8, 0)];
        for (k, want) in expected {
            assert_eq!(gap_p2n(51, k).unwrap(), want, "k = {k}");
        }
        assert_eq!(gap_p2n(51, 2).unwrap(), 77);
    }

    #[test]
    fn gap_rejects_small_k_and_zero_n() {
        assert!(gap_p2n(5, 1).is_err());
        assert!(gap_p2n(5, 0).is_err());
        assert!(gap_p2n(0, 3).is_err());
    }

    #[test]
    fn gap_parity_follows_k() {
        for n in 1..=64u64 {
            for k in 3..=8u32 {
                let gap = gap_p2n(n, k).unwrap();
                if gap > 0 {
                    assert_eq!(gap % 2 == 0, k % 2 == 1, "n = {n}, k = {k}");
                }
            }
            let gap2 = gap_p2n(n, 2).unwrap();
            assert_eq!(gap2 % 2, 1, "two-fold gap is odd, n = {n}");
        }
    }

    #[test]
    fn gap_is_non_increasing_in_k() {
        for n in 1..=64u64 {
            for k in 2..=9u32 {
                assert!(
                    gap_p2n(n, k + 1).unwrap() <= gap_p2n(n, k).unwrap(),
                    "n = {n}, k = {k}"
                );
            }
        }
    }

    #[test]
    fn vanishing_threshold_is_sound() {
        for n in 1..=2048u64 {
            let k0 = gap_vanishing_k_threshold(n).unwrap();
            assert!(k0 >= 3);
            for k in k0..=k0 + 2 {
                assert_eq!(gap_p2n(n, k as u32).unwrap(), 0, "n = {n}, k = {k}");
            }
        }
    }

    #[test]
    fn vanishing_threshold_is_sharp_for_n_51() {
        assert_eq!(gap_vanishing_k_threshold(51).unwrap(), 7);
        assert!(gap_p2n(51, 6).unwrap() > 0);
    }

    #[test]
    fn longest_runs() {
        let cases = [(51, 2), (7, 3), (8, 1), (1, 1), (0b1011_0111, 3)];
        for (m, want) in cases {
            assert_eq!(
                BinaryProfile::new(m).unwrap().longest_ones_run(),
                want,
                "m = {m}"
            );
        }
    }

    #[test]
    fn z_value_complements_one_mass() {
        for m in 1..=1u64 << 12 {
            let profile = BinaryProfile::new(m).unwrap();
            for i in 0..=profile.e() {
                let mask = (1u64 << (i + 1)) - 1;
                assert_eq!(profile.z_value(i).unwrap() + (m & mask), mask);
            }
        }
    }
}
