//! Fraction-free integer elimination shared by the lattice and span code.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Divide a row by the gcd of its entries and make the leading entry positive.
pub(crate) fn normalize_row(row: &mut [BigInt]) {
    let mut g = BigInt::zero();
    for x in row.iter() {
        g = g.gcd(x);
    }
    if g.is_zero() {
        return;
    }
    let lead_negative = row.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative());
    if lead_negative {
        g = -g;
    }
    if !g.is_one() {
        for x in row.iter_mut() {
            *x = &*x / &g;
        }
    }
}

/// Reduced row echelon form over Z: every pivot row is primitive and every
/// pivot column is zero outside its pivot row. Returns the pivot columns.
pub(crate) fn integer_rref(rows: &mut Vec<Vec<BigInt>>) -> Vec<usize> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        normalize_row(&mut rows[r]);
        let (head, tail) = rows.split_at_mut(r);
        let (pivot_row, rest) = tail.split_first_mut().expect("pivot row exists");
        for other in head.iter_mut().chain(rest.iter_mut()) {
            if other[col].is_zero() {
                continue;
            }
            let a = pivot_row[col].clone();
            let b = other[col].clone();
            for (o, p) in other.iter_mut().zip(pivot_row.iter()) {
                *o = &*o * &a - p * &b;
            }
            normalize_row(other);
        }
        pivots.push(col);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    pivots
}

pub(crate) fn to_big(rows: &[Vec<i64>]) -> Vec<Vec<BigInt>> {
    rows.iter()
        .map(|row| row.iter().map(|&x| BigInt::from(x)).collect())
        .collect()
}

/// Rank over Q of the given integer rows.
pub(crate) fn rank_q(rows: &[Vec<i64>]) -> usize {
    let mut big = to_big(rows);
    integer_rref(&mut big).len()
}

/// Primitive integer basis of the right kernel {x : A x = 0}.
pub(crate) fn kernel_q(rows: &[Vec<i64>], ncols: usize) -> Vec<Vec<BigInt>> {
    let mut big = to_big(rows);
    let pivots = integer_rref(&mut big);
    let mut basis = Vec::new();
    for free in (0..ncols).filter(|c| !pivots.contains(c)) {
        let lcm = pivots
            .iter()
            .enumerate()
            .fold(BigInt::one(), |acc, (i, &pc)| acc.lcm(&big[i][pc]));
        let mut x = vec![BigInt::zero(); ncols];
        x[free] = lcm.clone();
        for (i, &pc) in pivots.iter().enumerate() {
            x[pc] = -(&big[i][free] * &lcm) / &big[i][pc];
        }
        normalize_row(&mut x);
        basis.push(x);
    }
    basis
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_of_dependent_rows() {
        let rows = vec![vec![1, 2, 3], vec![2, 4, 6], vec![0, 1, 1]];
        assert_eq!(rank_q(&rows), 2);
        assert_eq!(rank_q(&[]), 0);
    }

    #[test]
    fn kernel_vectors_are_annihilated() {
        let rows = vec![vec![0, 1, 0], vec![-1, 0, 1], vec![0, -1, 0]];
        let k = kernel_q(&rows, 3);
        assert_eq!(k, vec![vec![BigInt::from(1), BigInt::from(0), BigInt::from(1)]]);
    }

    #[test]
    fn kernel_with_non_unit_pivots() {
        let rows = vec![vec![2, 3, 0, 1], vec![4, 0, 6, 0]];
        for v in kernel_q(&rows, 4) {
            for row in &rows {
                let s: BigInt = row.iter().zip(&v).map(|(&a, b)| BigInt::from(a) * b).sum();
                assert!(s.is_zero());
            }
        }
        assert_eq!(kernel_q(&rows, 4).len(), 2);
    }
}
