use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};

/// Binomial coefficient `C(n, k)`, zero when `k` lies outside `0..=n`.
///
/// Multiplicative form: after step `i` the accumulator holds `C(n, i)`, so
/// every division is exact.
pub fn choose(n: u64, k: i64) -> BigUint {
    if k < 0 || k as u64 > n {
        return BigUint::ZERO;
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// `a·(a+1)·…·b`.
pub fn product_range(a: u64, b: u64) -> Result<BigUint> {
    if a > b {
        return Err(Error::EmptyRange { start: a, end: b });
    }
    Ok((a..=b).fold(BigUint::one(), |acc, x| acc * x))
}

pub fn power_of_two(exp: u32) -> BigUint {
    BigUint::one() << exp as usize
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// Pascal's rule, row by row. Independent of the multiplicative path.
    fn pascal_row(n: usize) -> Vec<BigUint> {
        let mut row = vec![BigUint::one()];
        for _ in 0..n {
            let mut next = vec![BigUint::one(); row.len() + 1];
            for k in 1..row.len() {
                next[k] = &row[k - 1] + &row[k];
            }
            row = next;
        }
        row
    }

    #[test]
    fn small_values() {
        assert_eq!(choose(4, 2), BigUint::from(6u32));
        assert_eq!(choose(10, 3), pascal_row(10)[3]);
        assert_eq!(choose(10, 3), BigUint::from(120u32));
        assert_eq!(choose(0, 0), BigUint::one());
        assert_eq!(choose(5, -1), BigUint::ZERO);
        assert_eq!(choose(5, 6), BigUint::ZERO);
    }

    #[test]
    fn matches_pascal_rule_oracle() {
        for n in 0..=60 {
            let row = pascal_row(n);
            for (k, expected) in row.iter().enumerate() {
                assert_eq!(&choose(n as u64, k as i64), expected, "C({n},{k})");
            }
        }
    }

    #[test]
    fn product_range_values() {
        assert_eq!(product_range(1, 4).unwrap(), BigUint::from(24u32));
        assert_eq!(product_range(3, 3).unwrap(), BigUint::from(3u32));
        let oracle: u64 = [5u64, 6, 7, 8].iter().product();
        assert_eq!(product_range(5, 8).unwrap(), BigUint::from(oracle));
        assert_eq!(product_range(5, 8).unwrap(), BigUint::from(1680u32));
        assert_eq!(
            product_range(4, 3),
            Err(Error::EmptyRange { start: 4, end: 3 })
        );
    }

    #[test]
    fn doubled_odd_product_identity() {
        // 2^(n-1) · 1·3·…·(2n-3) = n·(n+1)·…·(2n-2)
        for n in 2u64..=30 {
            let odds = (1..n).fold(BigUint::one(), |acc, i| acc * (2 * i - 1));
            let left = power_of_two((n - 1) as u32) * odds;
            assert_eq!(left, product_range(n, 2 * n - 2).unwrap(), "n = {n}");
        }
    }

    proptest! {
        #[test]
        fn pascal_rule(n in 1u64..200, k in 1i64..200) {
            prop_assume!(k as u64 <= n);
            prop_assert_eq!(choose(n, k), choose(n - 1, k - 1) + choose(n - 1, k));
        }

        #[test]
        fn symmetric(n in 0u64..300, k in 0i64..300) {
            prop_assume!(k as u64 <= n);
            prop_assert_eq!(choose(n, k), choose(n, n as i64 - k));
        }

        #[test]
        fn row_sums_to_power_of_two(n in 0u64..150) {
            let total: BigUint = (0..=n as i64).map(|k| choose(n, k)).sum();
            prop_assert_eq!(total, power_of_two(n as u32));
        }
    }
}
