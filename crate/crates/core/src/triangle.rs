//! The arithmetic triangle in its original coordinates.
//!
//! A cell is addressed by its *parallel exponent* `i` (row, from 1) and its
//! *perpendicular exponent* `j` (column, from 1). The generator `(1, 1)`
//! holds 1 and every other cell is the sum of its left and upper
//! neighbours, missing neighbours counting as 0. Base `b` is the diagonal
//! of cells with `i + j − 1 = b`; it holds `b` cells.

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};
use crate::foundations::{choose, power_of_two, Rational};
use crate::solver::Division;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Triangle {
    order: u32,
    /// `rows[i - 1][j - 1]` is cell `(i, j)`; row `i` has `order + 1 − i`
    /// cells.
    rows: Vec<Vec<BigUint>>,
}

impl Triangle {
    /// Generates the first `order` bases by the addition rule.
    pub fn build(order: u32) -> Result<Self> {
        if order == 0 {
            return Err(Error::ZeroOrder);
        }
        let order_len = order as usize;
        let mut rows: Vec<Vec<BigUint>> = Vec::with_capacity(order_len);
        for i in 0..order_len {
            let len = order_len - i;
            let mut row: Vec<BigUint> = Vec::with_capacity(len);
            for j in 0..len {
                let cell = if i == 0 && j == 0 {
                    BigUint::one()
                } else {
                    let left = if j > 0 {
                        row[j - 1].clone()
                    } else {
                        BigUint::ZERO
                    };
                    let up = if i > 0 {
                        rows[i - 1][j].clone()
                    } else {
                        BigUint::ZERO
                    };
                    left + up
                };
                row.push(cell);
            }
            rows.push(row);
        }
        Ok(Triangle { order, rows })
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    /// Cell at parallel exponent `i`, perpendicular exponent `j`, if it lies
    /// within the generated bases.
    pub fn cell(&self, i: u32, j: u32) -> Option<&BigUint> {
        if i == 0 || j == 0 {
            return None;
        }
        self.rows.get(i as usize - 1)?.get(j as usize - 1)
    }

    /// Parallel rank `i`.
    pub fn parallel_rank(&self, i: u32) -> Option<&[BigUint]> {
        if i == 0 {
            return None;
        }
        self.rows.get(i as usize - 1).map(Vec::as_slice)
    }

    /// Cells of base `b`, ordered by increasing parallel exponent.
    pub fn base(&self, b: u32) -> Option<Vec<&BigUint>> {
        if b == 0 || b > self.order {
            return None;
        }
        (1..=b).map(|i| self.cell(i, b + 1 - i)).collect()
    }

    pub fn bases(&self) -> Vec<Vec<&BigUint>> {
        (1..=self.order).filter_map(|b| self.base(b)).collect()
    }

    /// Every generated cell as `(i, j, value)`.
    pub fn cells(&self) -> impl Iterator<Item = (u32, u32, &BigUint)> {
        self.rows.iter().enumerate().flat_map(|(i, row)| {
            row.iter()
                .enumerate()
                .map(move |(j, v)| (i as u32 + 1, j as u32 + 1, v))
        })
    }
}

/// Value of cell `(i, j)` without building the triangle: `C(i+j−2, i−1)`.
///
/// Either exponent at 0 lies outside the triangle and gives 0.
pub fn cell_direct(i: u32, j: u32) -> BigUint {
    if i == 0 || j == 0 {
        return BigUint::ZERO;
    }
    choose(u64::from(i) + u64::from(j) - 2, i64::from(i) - 1)
}

/// The `n` values of base `n`: `C(n−1, 0), …, C(n−1, n−1)`.
pub fn base_cells(n: u32) -> Vec<BigUint> {
    if n == 0 {
        return Vec::new();
    }
    let top = u64::from(n) - 1;
    (0..n).map(|k| choose(top, i64::from(k))).collect()
}

/// Two-player division read off base `a + b` of the triangle.
///
/// The base holds `C(a+b−1, ·)` summing to `2^(a+b−1)`. The player missing
/// `a` games gets the block of the first `b` cells, the other player the
/// remaining `a`.
pub fn base_partition(missing_a: u32, missing_b: u32) -> Result<Division> {
    if missing_a == 0 || missing_b == 0 {
        return Err(Error::ZeroMissing);
    }
    let cells = base_cells(missing_a + missing_b);
    let total = power_of_two(missing_a + missing_b - 1);
    let block: BigUint = cells[..missing_b as usize].iter().sum();
    let rest = &total - &block;
    Ok(Division::from_shares(vec![
        Rational::new(block, total.clone())?,
        Rational::new(rest, total)?,
    ]))
}

/// For the contiguous pair in base `base_index` whose upper cell has
/// perpendicular exponent `position`, returns the value ratio
/// `upper / lower` alongside the count ratio: cells from the upper one to
/// the end of the base on its side, over cells from the lower one to the
/// other end.
///
/// Upper cell is `(base_index + 1 − position, position)`, lower cell is
/// `(base_index − position, position + 1)`. Both ratios equal
/// `position / (base_index − position)`.
pub fn consequence12_ratio(base_index: u32, position: u32) -> Result<(Rational, Rational)> {
    if position == 0 || position >= base_index {
        return Err(Error::PositionOutOfRange {
            base: base_index,
            position,
        });
    }
    let upper = cell_direct(base_index + 1 - position, position);
    let lower = cell_direct(base_index - position, position + 1);
    // Counted in the base: the upper cell sits `position` cells from one
    // end, the lower one `base_index − position` from the other.
    let upper_count = position;
    let lower_count = base_index - position;
    Ok((
        Rational::new(upper, lower)?,
        Rational::new(upper_count, lower_count)?,
    ))
}

/// Both sides of `Σ_{k=n−1}^{2n−2} C(2n−2, k) = 2^(2n−3) + C(2n−2, n−1)/2`.
pub fn tail_sum_identity(n: u32) -> (BigUint, Rational) {
    assert!(n >= 2, "tail-sum identity needs n >= 2");
    let top = 2 * u64::from(n) - 2;
    let left = (i64::from(n) - 1..=top as i64)
        .map(|k| choose(top, k))
        .sum();
    let right = Rational::from(power_of_two(2 * n - 3))
        + Rational::new(choose(top, i64::from(n) - 1), 2u32).expect("nonzero");
    (left, right)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(n: u64) -> BigUint {
        BigUint::from(n)
    }

    #[test]
    fn known_cell_values() {
        let t = Triangle::build(10).unwrap();
        assert_eq!(t.cell(3, 3), Some(&big(6)));
        assert_eq!(t.cell(4, 2), Some(&big(4)));
        assert_eq!(t.cell(4, 4), Some(&big(20)));
        assert_eq!(t.cell(4, 5), Some(&big(35)));
        assert_eq!(t.cell(5, 5), Some(&big(70)));
        assert_eq!(t.cell(5, 6), Some(&big(126)));
        assert_eq!(t.cell(6, 5), Some(&big(126)));
        assert_eq!(t.cell(10, 1), Some(&big(1)));
        assert_eq!(t.cell(10, 2), None);
        let third: Vec<u64> = t
            .parallel_rank(3)
            .unwrap()
            .iter()
            .map(|v| v.try_into().unwrap())
            .collect();
        assert_eq!(third, [1, 3, 6, 10, 15, 21, 28, 36]);
    }

    #[test]
    fn generator_only() {
        let t = Triangle::build(1).unwrap();
        assert_eq!(t.cell(1, 1), Some(&big(1)));
        assert_eq!(t.cells().count(), 1);
        assert_eq!(Triangle::build(0), Err(Error::ZeroOrder));
    }

    #[test]
    fn order_five_cells() {
        let t = Triangle::build(5).unwrap();
        assert_eq!(t.cell(3, 3), Some(&big(6)));
        assert_eq!(t.cell(4, 2), Some(&big(4)));
        assert_eq!(t.cells().count(), 15);
    }

    #[test]
    fn cell_direct_values() {
        assert_eq!(cell_direct(4, 3), big(10));
        assert_eq!(cell_direct(4, 4), big(20));
        for j in 1..40 {
            assert_eq!(cell_direct(1, j), big(1));
        }
    }

    #[test]
    fn bases() {
        assert_eq!(base_cells(4), [1u32, 3, 3, 1].map(BigUint::from));
        assert_eq!(base_cells(1), [big(1)]);
        assert_eq!(base_cells(5), [1u32, 4, 6, 4, 1].map(BigUint::from));
        let t = Triangle::build(6).unwrap();
        let base4: Vec<BigUint> = t.base(4).unwrap().into_iter().cloned().collect();
        assert_eq!(base4, base_cells(4));
        assert!(t.base(7).is_none());
    }

    #[test]
    fn partition_of_base_five() {
        let d = base_partition(2, 3).unwrap();
        assert_eq!(
            d.shares(),
            [
                Rational::new(11, 16).unwrap(),
                Rational::new(5, 16).unwrap()
            ]
        );
        let d = base_partition(3, 2).unwrap();
        assert_eq!(
            d.shares(),
            [
                Rational::new(5, 16).unwrap(),
                Rational::new(11, 16).unwrap()
            ]
        );
        let d = base_partition(1, 1).unwrap();
        assert_eq!(
            d.shares(),
            [Rational::new(1, 2).unwrap(), Rational::new(1, 2).unwrap()]
        );
        assert_eq!(base_partition(0, 3), Err(Error::ZeroMissing));
    }

    #[test]
    fn twelfth_consequence_examples() {
        // E = (4,2) over C = (3,3) in base 5.
        let two_thirds = Rational::new(2, 3).unwrap();
        assert_eq!(
            consequence12_ratio(5, 2).unwrap(),
            (two_thirds.clone(), two_thirds)
        );
        let one = Rational::one();
        assert_eq!(consequence12_ratio(2, 1).unwrap(), (one.clone(), one));
        for b in 2..=20 {
            let expected = Rational::new(1, b - 1).unwrap();
            assert_eq!(
                consequence12_ratio(b, 1).unwrap(),
                (expected.clone(), expected)
            );
        }
    }

    #[test]
    fn twelfth_consequence_range() {
        assert!(consequence12_ratio(5, 0).is_err());
        assert_eq!(
            consequence12_ratio(5, 5),
            Err(Error::PositionOutOfRange {
                base: 5,
                position: 5
            })
        );
        assert!(consequence12_ratio(1, 1).is_err());
    }

    #[test]
    fn tail_sums() {
        assert_eq!(tail_sum_identity(2), (big(3), Rational::from(3)));
        assert_eq!(tail_sum_identity(3), (big(11), Rational::from(11)));
        // n = 5: C(8,4..=8) summed by hand.
        let oracle: u64 = 70 + 56 + 28 + 8 + 1;
        let (left, right) = tail_sum_identity(5);
        assert_eq!(left, big(oracle));
        assert_eq!(right, Rational::from(oracle));
    }
}
