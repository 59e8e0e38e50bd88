//! Exact integer evaluation of the closed and recursive σ1 formulas for
//! named graph families.
//!
//! The classical golden-ratio expressions are realized as integer
//! recurrences via (α^k − β^k)/√5 = F(k) and α^k + β^k = L(k), where F and L
//! are the Fibonacci and Lucas sequences. In particular
//!
//! σ0(P_t) = F(t+2), and
//! σ1(P_n) = ((n−1)·L(n) + 2·F(n−1)) / 5,
//!
//! where the division is always exact. Conventions for degenerate indices:
//! σ0(P_t) = 1 and σ1(P_t) = 0 whenever t <= 0.

use thiserror::Error;

use crate::family::{FamilyError, FamilySpec};
use crate::sigma::Count;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ClosedFormError {
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error("count overflow evaluating a closed form at index {0}")]
    Overflow(i64),
    #[error("internal error: {numerator} is not divisible by 5")]
    InexactDivision { numerator: u128 },
}

fn fibonacci(k: u64) -> Option<u128> {
    let (mut a, mut b) = (0u128, 1u128); // F(0), F(1)
    for _ in 0..k {
        let next = a.checked_add(b)?;
        a = b;
        b = next;
    }
    Some(a)
}

fn lucas(k: u64) -> Option<u128> {
    let (mut a, mut b) = (2u128, 1u128); // L(0), L(1)
    for _ in 0..k {
        let next = a.checked_add(b)?;
        a = b;
        b = next;
    }
    Some(a)
}

/// σ0 of the path on `t` vertices: F(t+2), or 1 for t <= 0.
pub fn sigma0_path(t: i64) -> Result<Count, ClosedFormError> {
    if t <= 0 {
        return Ok(Count::ONE);
    }
    fibonacci(t as u64 + 2)
        .map(Count::new)
        .ok_or(ClosedFormError::Overflow(t))
}

/// σ1 of the path on `t` vertices: ((t−1)·L(t) + 2·F(t−1)) / 5, or 0 for
/// t <= 0. The division by 5 is exact; a remainder signals a bug.
pub fn sigma1_path(t: i64) -> Result<Count, ClosedFormError> {
    if t <= 0 {
        return Ok(Count::ZERO);
    }
    let t = t as u64;
    let overflow = || ClosedFormError::Overflow(t as i64);
    let lucas_t = lucas(t).ok_or_else(overflow)?;
    let fib_prev = fibonacci(t - 1).ok_or_else(overflow)?;
    let numerator = (t as u128 - 1)
        .checked_mul(lucas_t)
        .and_then(|x| x.checked_add(fib_prev.checked_mul(2)?))
        .ok_or_else(overflow)?;
    if numerator % 5 != 0 {
        return Err(ClosedFormError::InexactDivision { numerator });
    }
    Ok(Count::new(numerator / 5))
}

/// σ1 of the path as the sum over its edges of the independent-set counts of
/// the two residual paths: Σ_{i=1}^{n−1} σ0(P_{i−2})·σ0(P_{n−i−2}).
///
/// An algebraically independent route from [`sigma1_path`], kept for
/// cross-checking the two.
pub fn sigma1_path_by_edge_sum(t: i64) -> Result<Count, ClosedFormError> {
    if t <= 0 {
        return Ok(Count::ZERO);
    }
    let mut total = Count::ZERO;
    for i in 1..t {
        total += sigma0_path(i - 2)? * sigma0_path(t - i - 2)?;
    }
    Ok(total)
}

/// σ0 and σ1 of the path on `t` vertices, `t <= 0` allowed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PathCounts {
    pub t: i64,
    pub s0: Count,
    pub s1: Count,
}

impl PathCounts {
    pub fn new(t: i64) -> Result<Self, ClosedFormError> {
        Ok(PathCounts { t, s0: sigma0_path(t)?, s1: sigma1_path(t)? })
    }
}

fn choose2(n: u128) -> u128 {
    n * n.saturating_sub(1) / 2
}

/// Closed-form σ1 for a family instance. Matches the recursive and
/// brute-force routes; the formula used depends on the family:
///
/// * complete: C(n,2), every edge lies in exactly one such subset;
/// * cycle: n·σ0(P_{n−4});
/// * star: n−1; complete bipartite: r·s (every edge is good);
/// * wheel: (n−1)·(1 + F(n−3));
/// * unicyclic star: n−1 + 2^(n−3);
/// * matching plus isolated vertices: m·3^(m−1)·2^r by the union rule;
/// * broom, lollipop, tadpole: vertex-deletion expansions in path counts.
pub fn sigma1_family(spec: &FamilySpec) -> Result<Count, ClosedFormError> {
    spec.validate()?;
    let s0p = sigma0_path;
    let s1p = sigma1_path;
    let value = match *spec {
        FamilySpec::Edgeless { .. } => Count::ZERO,
        FamilySpec::Path { n } => s1p(n as i64)?,
        FamilySpec::Cycle { n } => Count::new(n as u128) * s0p(n as i64 - 4)?,
        FamilySpec::Complete { n } => Count::new(choose2(n as u128)),
        FamilySpec::Star { n } => Count::new(n as u128 - 1),
        FamilySpec::CompleteBipartite { r, s } => Count::new(r as u128 * s as u128),
        FamilySpec::Wheel { n } => {
            let f = fibonacci(n as u64 - 3).ok_or(ClosedFormError::Overflow(n as i64))?;
            Count::new(n as u128 - 1) * Count::new(1 + f)
        }
        FamilySpec::UnicyclicStar { n } => Count::new(n as u128 - 1) + Count::pow2(n as u32 - 3),
        FamilySpec::Broom { n, k } => {
            let (n, k) = (n as i64, k as i64);
            s1p(k - 1)? * Count::pow2((n - k) as u32)
                + s1p(k - 2)?
                + s0p(k - 3)?
                + Count::new((n - k) as u128) * s0p(k - 2)?
        }
        FamilySpec::Lollipop { n, k } => {
            let (n, k) = (n as i64, k as i64);
            Count::new((n - k + 1) as u128) * s1p(k - 1)?
                + Count::new(choose2((n - k) as u128)) * s0p(k - 1)?
                + s1p(k - 2)?
                + s0p(k - 3)?
                + Count::new((n - k) as u128) * s0p(k - 2)?
        }
        FamilySpec::Tadpole { n, k } => {
            let (n, k) = (n as i64, k as i64);
            s1p(k - 1)? * s0p(n - k)?
                + s1p(n - k)? * s0p(k - 1)?
                + s1p(k - 2)? * s0p(n - k - 2)?
                + s1p(n - k - 2)? * s0p(k - 2)?
                + s0p(k - 3)? * s0p(n - k - 2)?
                + Count::new(2) * s0p(k - 2)? * s0p(n - k - 3)?
        }
        FamilySpec::MatchingPlusIsolated { pairs, isolated } => {
            if pairs == 0 {
                Count::ZERO
            } else {
                let triple_power = 3u128
                    .checked_pow(pairs as u32 - 1)
                    .ok_or(ClosedFormError::Overflow(pairs as i64))?;
                Count::new(pairs as u128) * Count::new(triple_power) * Count::pow2(isolated as u32)
            }
        }
    };
    Ok(value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sigma::{sigma1, sigma_k_brute};

    #[test]
    fn path_sigma0_values() {
        assert_eq!(sigma0_path(4).unwrap(), Count::new(8));
        assert_eq!(sigma0_path(0).unwrap(), Count::ONE);
        assert_eq!(sigma0_path(-5).unwrap(), Count::ONE);
        assert_eq!(sigma0_path(1).unwrap(), Count::new(2));
        assert_eq!(sigma0_path(10).unwrap(), Count::new(144));
    }

    #[test]
    fn path_sigma0_recurrence() {
        for t in 1..60 {
            assert_eq!(
                sigma0_path(t).unwrap(),
                sigma0_path(t - 1).unwrap() + sigma0_path(t - 2).unwrap()
            );
        }
    }

    #[test]
    fn path_sigma1_values() {
        let expected = [0u128, 0, 1, 2, 5, 10, 20, 38]; // t = 0..=7
        for (t, &want) in expected.iter().enumerate() {
            assert_eq!(sigma1_path(t as i64).unwrap(), Count::new(want), "t = {t}");
        }
        assert_eq!(sigma1_path(-2).unwrap(), Count::ZERO);
    }

    #[test]
    fn path_routes_agree_up_to_40() {
        for t in -2..=40 {
            assert_eq!(
                sigma1_path(t).unwrap(),
                sigma1_path_by_edge_sum(t).unwrap(),
                "t = {t}"
            );
        }
    }

    #[test]
    fn path_division_exact_up_to_ten_thousand() {
        // Replicates the formula numerator in big integers and asserts the
        // division by 5 never truncates, far beyond the u128 range.
        use num_bigint::BigUint;
        let five = BigUint::from(5u32);
        let (mut f_prev, mut f) = (BigUint::from(0u32), BigUint::from(1u32)); // F(0), F(1)
        let (mut l_prev, mut l) = (BigUint::from(2u32), BigUint::from(1u32)); // L(0), L(1)
        for t in 1u32..=10_000 {
            // invariants here: f = F(t), f_prev = F(t-1), l = L(t)
            let numerator = BigUint::from(t - 1) * &l + BigUint::from(2u32) * &f_prev;
            assert_eq!(&numerator % &five, BigUint::from(0u32), "t = {t}");
            let next_f = &f_prev + &f;
            f_prev = std::mem::replace(&mut f, next_f);
            let next_l = &l_prev + &l;
            l_prev = std::mem::replace(&mut l, next_l);
        }
    }

    #[test]
    fn overflow_is_reported() {
        assert!(matches!(sigma0_path(200), Err(ClosedFormError::Overflow(_))));
        assert!(matches!(sigma1_path(400), Err(ClosedFormError::Overflow(_))));
    }

    #[test]
    fn family_spot_values() {
        let cases: &[(FamilySpec, u128)] = &[
            (FamilySpec::Complete { n: 5 }, 10),
            (FamilySpec::Cycle { n: 3 }, 3),
            (FamilySpec::Cycle { n: 5 }, 10),
            (FamilySpec::Cycle { n: 6 }, 18),
            (FamilySpec::UnicyclicStar { n: 6 }, 13),
            (FamilySpec::UnicyclicStar { n: 7 }, 22),
            (FamilySpec::Wheel { n: 4 }, 6),
            (FamilySpec::Wheel { n: 5 }, 8),
            (FamilySpec::Wheel { n: 6 }, 15),
            (FamilySpec::Broom { n: 4, k: 2 }, 3),
            (FamilySpec::Broom { n: 6, k: 3 }, 15),
            (FamilySpec::Broom { n: 7, k: 4 }, 28),
            (FamilySpec::Lollipop { n: 6, k: 3 }, 20),
            (FamilySpec::Lollipop { n: 7, k: 4 }, 35),
            (FamilySpec::Tadpole { n: 6, k: 3 }, 17),
            (FamilySpec::Tadpole { n: 7, k: 3 }, 36),
            (FamilySpec::Tadpole { n: 8, k: 5 }, 61),
            (FamilySpec::MatchingPlusIsolated { pairs: 3, isolated: 0 }, 27),
            (FamilySpec::MatchingPlusIsolated { pairs: 4, isolated: 0 }, 108),
            (FamilySpec::Star { n: 9 }, 8),
            (FamilySpec::CompleteBipartite { r: 2, s: 3 }, 6),
            (FamilySpec::Edgeless { n: 5 }, 0),
            (FamilySpec::Path { n: 4 }, 5),
        ];
        for &(spec, want) in cases {
            assert_eq!(sigma1_family(&spec).unwrap(), Count::new(want), "{spec}");
        }
    }

    #[test]
    fn family_formula_matches_recursion_and_oracle() {
        let specs = [
            FamilySpec::Path { n: 9 },
            FamilySpec::Cycle { n: 9 },
            FamilySpec::Complete { n: 7 },
            FamilySpec::Star { n: 10 },
            FamilySpec::CompleteBipartite { r: 3, s: 4 },
            FamilySpec::Wheel { n: 8 },
            FamilySpec::Broom { n: 9, k: 4 },
            FamilySpec::Lollipop { n: 9, k: 4 },
            FamilySpec::Tadpole { n: 9, k: 4 },
            FamilySpec::UnicyclicStar { n: 9 },
            FamilySpec::MatchingPlusIsolated { pairs: 3, isolated: 2 },
        ];
        for spec in specs {
            let g = spec.construct().unwrap();
            let formula = sigma1_family(&spec).unwrap();
            assert_eq!(formula, sigma1(&g), "recursion disagrees for {spec}");
            assert_eq!(formula, sigma_k_brute(&g, 1).unwrap(), "oracle disagrees for {spec}");
        }
    }

    #[test]
    fn cycle_formula_matches_recursion_up_to_40() {
        for n in 3..=40 {
            let spec = FamilySpec::Cycle { n };
            let formula = sigma1_family(&spec).unwrap();
            assert_eq!(formula, sigma1(&spec.construct().unwrap()), "n = {n}");
            // and the formula is literally n * sigma0 of the residual path
            assert_eq!(formula, Count::new(n as u128) * sigma0_path(n as i64 - 4).unwrap());
        }
    }

    #[test]
    fn degenerate_family_cases() {
        // broom and lollipop with nothing attached degenerate to paths
        assert_eq!(
            sigma1_family(&FamilySpec::Broom { n: 5, k: 5 }).unwrap(),
            sigma1_path(5).unwrap()
        );
        assert_eq!(
            sigma1_family(&FamilySpec::Lollipop { n: 5, k: 5 }).unwrap(),
            sigma1_path(5).unwrap()
        );
        assert_eq!(
            sigma1_family(&FamilySpec::MatchingPlusIsolated { pairs: 0, isolated: 4 }).unwrap(),
            Count::ZERO
        );
        assert!(sigma1_family(&FamilySpec::Cycle { n: 2 }).is_err());
    }
}
