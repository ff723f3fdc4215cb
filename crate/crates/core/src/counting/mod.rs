//! Closed-form counts of Tamari intervals and their subfamilies, computed
//! exactly with big integers.

mod series;
mod tally;

pub use series::{modern_series_coefficients, trivariate_coefficients, ModernSeries, TriSeries};
pub use tally::{classify, tally, Classification, TallyReport};

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    General,
    Synchronized,
    Modern,
    New,
    ModernSynchronized,
    InfinitelyModern,
    Kreweras,
}

impl Family {
    pub const ALL: [Family; 7] = [
        Family::General,
        Family::Synchronized,
        Family::Modern,
        Family::New,
        Family::ModernSynchronized,
        Family::InfinitelyModern,
        Family::Kreweras,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::General => "general",
            Family::Synchronized => "synchronized",
            Family::Modern => "modern",
            Family::New => "new",
            Family::ModernSynchronized => "modern-synchronized",
            Family::InfinitelyModern => "infinitely-modern",
            Family::Kreweras => "kreweras",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.trim().to_ascii_lowercase().replace('_', "-");
        Family::ALL
            .into_iter()
            .find(|f| f.name() == key)
            .ok_or_else(|| Error::Parse(format!("unknown family {s:?}")))
    }
}

pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    num_integer::binomial(BigUint::from(n), BigUint::from(k))
}

/// `a / b`, panicking when the division is not exact: every formula here is
/// integral, so a remainder can only come from a transcription error.
fn exact_div(a: BigUint, b: impl Into<BigUint>) -> BigUint {
    let b = b.into();
    let (q, r) = a.div_rem(&b);
    assert!(r.is_zero(), "inexact division by {b}");
    q
}

fn pow2(e: usize) -> BigUint {
    BigUint::one() << e
}

pub fn catalan(n: usize) -> BigUint {
    exact_div(binomial(2 * n, n), n + 1)
}

/// Number of Tamari intervals of size `n`.
pub fn count_general(n: usize) -> BigUint {
    exact_div(BigUint::from(2u8) * binomial(4 * n + 1, n - 1), n * (n + 1))
}

fn count_modern(n: usize) -> BigUint {
    if n == 0 {
        return BigUint::one();
    }
    exact_div(BigUint::from(3u8) * pow2(n - 1) * binomial(2 * n, n), (n + 1) * (n + 2))
}

fn count_ternary(n: usize) -> BigUint {
    exact_div(binomial(3 * n, n), 2 * n + 1)
}

/// Number of intervals of size `n >= 1` in `family`. New intervals of size
/// `n` are counted by modern intervals of size `n - 1`, with one modern
/// interval of size 0.
pub fn count(family: Family, n: usize) -> Result<BigUint> {
    if n == 0 {
        return Err(Error::UnsupportedSize(0));
    }
    Ok(match family {
        Family::General => count_general(n),
        Family::Synchronized => exact_div(BigUint::from(2u8) * binomial(3 * n, n - 1), n * (n + 1)),
        Family::Modern => count_modern(n),
        Family::New => count_modern(n - 1),
        Family::ModernSynchronized => catalan(n),
        Family::InfinitelyModern | Family::Kreweras => count_ternary(n),
    })
}

fn count_self_dual_modern(n: usize) -> BigUint {
    if n == 0 {
        return BigUint::one();
    }
    let k = n / 2;
    if n.is_multiple_of(2) {
        exact_div(pow2(k - 1) * binomial(2 * k, k), k + 1)
    } else {
        exact_div(pow2(k) * binomial(2 * k, k), k + 1)
    }
}

/// Number of self-dual intervals of size `n >= 1` in `family`.
pub fn count_self_dual(family: Family, n: usize) -> Result<BigUint> {
    if n == 0 {
        return Err(Error::UnsupportedSize(0));
    }
    let k = n / 2;
    let even = n.is_multiple_of(2);
    Ok(match family {
        Family::General if even => exact_div(binomial(4 * k, k), 3 * k + 1),
        Family::General => exact_div(binomial(4 * k + 2, k), k + 1),
        Family::Synchronized | Family::ModernSynchronized if even => BigUint::zero(),
        Family::Synchronized => exact_div(binomial(3 * k + 1, k), k + 1),
        Family::ModernSynchronized => catalan(k),
        Family::Modern => count_self_dual_modern(n),
        Family::New => count_self_dual_modern(n - 1),
        Family::InfinitelyModern | Family::Kreweras if even => exact_div(binomial(3 * k, k), 2 * k + 1),
        Family::InfinitelyModern | Family::Kreweras => exact_div(binomial(3 * k + 1, k), k + 1),
    })
}

/// Number of intervals of size `n` whose two canopies agree at exactly
/// `k + 2` positions.
pub fn count_j(n: usize, k: usize) -> BigUint {
    if n == 0 || k + 2 > n + 1 {
        return BigUint::zero();
    }
    exact_div(
        BigUint::from(2u8) * binomial(3 * n, k) * binomial(n + 1, k + 2),
        n * (n + 1),
    )
}

/// Number of synchronized intervals with `i` canopy positions of type `S11`
/// and `j` of type `S00`, of size `i + j - 1`.
pub fn count_sync_ij(i: usize, j: usize) -> BigUint {
    if i == 0 || j == 0 {
        return BigUint::zero();
    }
    exact_div(
        binomial(2 * i + j - 2, j - 1) * binomial(2 * j + i - 2, i - 1),
        i * j,
    )
}

/// Narayana number, counting modern synchronized intervals with `i`
/// positions of type `S11` and `j` of type `S00`.
pub fn narayana(i: usize, j: usize) -> BigUint {
    if i == 0 || j == 0 {
        return BigUint::zero();
    }
    exact_div(binomial(i + j - 1, i) * binomial(i + j - 1, j), i + j - 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: &[u64]) -> Vec<BigUint> {
        v.iter().map(|&x| BigUint::from(x)).collect()
    }

    fn row(f: impl Fn(usize) -> BigUint, range: std::ops::RangeInclusive<usize>) -> Vec<BigUint> {
        range.map(f).collect()
    }

    // Independent evaluation in f64 of the formulas with small arguments.
    fn binom_f(n: u64, k: u64) -> f64 {
        (0..k).fold(1.0, |acc, i| acc * (n - i) as f64 / (i + 1) as f64)
    }

    #[test]
    fn general_counts() {
        assert_eq!(
            row(|n| count(Family::General, n).unwrap(), 1..=8),
            big(&[1, 3, 13, 68, 399, 2530, 16965, 118668])
        );
        for n in 1..=20u64 {
            let f = 2.0 / (n * (n + 1)) as f64 * binom_f(4 * n + 1, n - 1);
            let exact = count(Family::General, n as usize).unwrap();
            assert!((f - exact.to_string().parse::<f64>().unwrap()).abs() / f < 1e-9);
        }
        assert_eq!(count(Family::General, 0), Err(Error::UnsupportedSize(0)));
    }

    #[test]
    fn family_counts_at_three() {
        let c = |f| count(f, 3).unwrap();
        assert_eq!(c(Family::Synchronized), BigUint::from(6u8));
        assert_eq!(c(Family::Modern), BigUint::from(12u8));
        assert_eq!(c(Family::Kreweras), BigUint::from(12u8));
        assert_eq!(c(Family::InfinitelyModern), BigUint::from(12u8));
        assert_eq!(c(Family::ModernSynchronized), BigUint::from(5u8));
        assert_eq!(count(Family::New, 1).unwrap(), BigUint::one());
        assert_eq!(count(Family::Kreweras, 6).unwrap(), BigUint::from(1428u32));
    }

    #[test]
    fn self_dual_table() {
        let c = |f, n| count_self_dual(f, n).unwrap();
        assert_eq!(c(Family::General, 2), BigUint::one());
        assert_eq!(c(Family::General, 4), BigUint::from(4u8));
        assert_eq!(c(Family::Synchronized, 4), BigUint::zero());
        assert_eq!(c(Family::Kreweras, 3), BigUint::from(2u8));
        assert_eq!(row(|n| c(Family::General, n), 1..=7), big(&[1, 1, 3, 4, 15, 22, 91]));
    }

    #[test]
    fn refined_counts() {
        assert_eq!(count_j(2, 0), BigUint::one());
        assert_eq!(count_j(2, 1), BigUint::from(2u8));
        assert_eq!(row(|k| count_j(3, k), 0..=2), big(&[1, 6, 6]));
        for n in 1..=10 {
            let total: BigUint = (0..n).map(|k| count_j(n, k)).sum();
            assert_eq!(total, count_general(n));
            assert_eq!(count_j(n, n - 1), count(Family::Synchronized, n).unwrap());
            let sync: BigUint = (1..=n).map(|i| count_sync_ij(i, n + 1 - i)).sum();
            assert_eq!(sync, count(Family::Synchronized, n).unwrap());
            let nara: BigUint = (1..=n).map(|i| narayana(i, n + 1 - i)).sum();
            assert_eq!(nara, catalan(n));
            assert_eq!(count(Family::Kreweras, n).unwrap(), count(Family::InfinitelyModern, n).unwrap());
        }
        assert_eq!(count_sync_ij(1, 2), BigUint::one());
        assert_eq!(count_sync_ij(2, 1), BigUint::one());
        assert_eq!(count_sync_ij(1, 1), BigUint::one());
    }

    #[test]
    fn family_names_round_trip() {
        for f in Family::ALL {
            assert_eq!(f.name().parse::<Family>().unwrap(), f);
        }
        assert_eq!("Modern_Synchronized".parse::<Family>().unwrap(), Family::ModernSynchronized);
        assert!(matches!("tamari".parse::<Family>(), Err(Error::Parse(_))));
    }
}
