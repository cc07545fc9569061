//! Integer linear algebra for alternating forms on homology lattices.
//!
//! Coordinates are ordered `x_1..x_n, y_1..y_n` and the standard form has
//! `ι(x_i, y_i) = 1`. All arithmetic is exact: `i64` with overflow checks,
//! falling back to big integers inside eliminations.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_integer::Integer;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg;

pub(crate) fn ck(x: Option<i64>) -> Result<i64> {
    x.ok_or(Error::Overflow)
}

/// Basis labels `x1..xn, y1..yn` for a lattice of rank `2n`.
pub fn basis_labels(rank: usize) -> Vec<String> {
    let n = rank / 2;
    (1..=n)
        .map(|i| format!("x{i}"))
        .chain((1..=n).map(|i| format!("y{i}")))
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct HomologyClass {
    coords: Vec<i64>,
}

impl HomologyClass {
    pub fn new(coords: Vec<i64>) -> Self {
        HomologyClass { coords }
    }

    pub fn zero(rank: usize) -> Self {
        HomologyClass { coords: vec![0; rank] }
    }

    pub fn basis(rank: usize, index: usize) -> Self {
        let mut c = Self::zero(rank);
        c.coords[index] = 1;
        c
    }

    /// `x_i` (1-based) in a lattice of the given rank.
    pub fn x(rank: usize, i: usize) -> Self {
        Self::basis(rank, i - 1)
    }

    /// `y_i` (1-based) in a lattice of the given rank.
    pub fn y(rank: usize, i: usize) -> Self {
        Self::basis(rank, rank / 2 + i - 1)
    }

    pub fn rank(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }

    fn same_rank(&self, other: &Self) -> Result<()> {
        if self.rank() != other.rank() {
            return Err(Error::DimensionMismatch { expected: self.rank(), found: other.rank() });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.same_rank(other)?;
        let coords = self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| ck(a.checked_add(*b)))
            .collect::<Result<_>>()?;
        Ok(HomologyClass { coords })
    }

    pub fn checked_scale(&self, k: i64) -> Result<Self> {
        let coords = self.coords.iter().map(|a| ck(a.checked_mul(k))).collect::<Result<_>>()?;
        Ok(HomologyClass { coords })
    }

    /// `self + k·other`
    pub fn checked_add_scaled(&self, k: i64, other: &Self) -> Result<Self> {
        self.checked_add(&other.checked_scale(k)?)
    }

    pub fn gcd(&self) -> i64 {
        self.coords.iter().fold(0i64, |g, &c| g.gcd(&c))
    }

    pub fn is_primitive(&self) -> bool {
        self.gcd() == 1
    }

    /// Divide by the content and make the first nonzero coordinate positive.
    pub fn primitive(&self) -> Self {
        let mut g = self.gcd();
        if g == 0 {
            return self.clone();
        }
        if self.coords.iter().find(|&&c| c != 0).is_some_and(|&c| c < 0) {
            g = -g;
        }
        HomologyClass { coords: self.coords.iter().map(|c| c / g).collect() }
    }

    /// Coordinates reduced mod 2, as a bitmask over basis indices.
    pub fn mod2_mask(&self) -> u64 {
        self.coords
            .iter()
            .enumerate()
            .filter(|(_, c)| *c % 2 != 0)
            .fold(0u64, |m, (i, _)| m | (1 << i))
    }

    /// Handles `i` (1-based) where the class has a nonzero `x_i` or `y_i`.
    pub fn support_handles(&self) -> Vec<usize> {
        let n = self.rank() / 2;
        (1..=n)
            .filter(|&i| self.coords[i - 1] != 0 || self.coords[n + i - 1] != 0)
            .collect()
    }
}

impl fmt::Display for HomologyClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let labels = basis_labels(self.rank());
        let mut first = true;
        for (c, label) in self.coords.iter().zip(&labels) {
            if *c == 0 {
                continue;
            }
            let sign = if *c < 0 { "-" } else if first { "" } else { "+" };
            let sep = if first { "" } else { " " };
            let mag = c.unsigned_abs();
            if mag == 1 {
                write!(f, "{sep}{sign}{label}")?;
            } else {
                write!(f, "{sep}{sign}{mag}{label}")?;
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl Add for &HomologyClass {
    type Output = HomologyClass;
    /// Panics on rank mismatch or overflow; use `checked_add` for a `Result`.
    fn add(self, rhs: &HomologyClass) -> HomologyClass {
        self.checked_add(rhs).expect("homology addition")
    }
}

impl Sub for &HomologyClass {
    type Output = HomologyClass;
    fn sub(self, rhs: &HomologyClass) -> HomologyClass {
        self.checked_add(&-rhs).expect("homology subtraction")
    }
}

impl Neg for &HomologyClass {
    type Output = HomologyClass;
    fn neg(self) -> HomologyClass {
        self.checked_scale(-1).expect("homology negation")
    }
}

/// Square integer matrix, row-major; acts on column vectors.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntMatrix {
    rows: Vec<Vec<i64>>,
}

impl IntMatrix {
    pub fn from_rows(rows: Vec<Vec<i64>>) -> Result<Self> {
        let n = rows.len();
        if let Some(bad) = rows.iter().find(|r| r.len() != n) {
            return Err(Error::DimensionMismatch { expected: n, found: bad.len() });
        }
        Ok(IntMatrix { rows })
    }

    pub fn from_columns(cols: &[HomologyClass]) -> Result<Self> {
        let n = cols.len();
        let mut rows = vec![vec![0; n]; n];
        for (j, c) in cols.iter().enumerate() {
            if c.rank() != n {
                return Err(Error::DimensionMismatch { expected: n, found: c.rank() });
            }
            for (i, row) in rows.iter_mut().enumerate() {
                row[j] = c.coords()[i];
            }
        }
        Ok(IntMatrix { rows })
    }

    pub fn identity(n: usize) -> Self {
        let rows = (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect();
        IntMatrix { rows }
    }

    pub fn diagonal(entries: &[i64]) -> Self {
        let n = entries.len();
        let rows = (0..n)
            .map(|i| (0..n).map(|j| if i == j { entries[i] } else { 0 }).collect())
            .collect();
        IntMatrix { rows }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.rows[i][j]
    }

    pub fn column(&self, j: usize) -> HomologyClass {
        HomologyClass::new(self.rows.iter().map(|r| r[j]).collect())
    }

    pub fn transpose(&self) -> Self {
        let n = self.dim();
        IntMatrix { rows: (0..n).map(|i| (0..n).map(|j| self.rows[j][i]).collect()).collect() }
    }

    pub fn apply(&self, v: &HomologyClass) -> Result<HomologyClass> {
        if v.rank() != self.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), found: v.rank() });
        }
        let coords = self
            .rows
            .iter()
            .map(|row| dot(row, v.coords()))
            .collect::<Result<_>>()?;
        Ok(HomologyClass::new(coords))
    }

    pub fn mul(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if other.dim() != self.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), found: other.dim() });
        }
        let t = other.transpose();
        let rows = self
            .rows
            .iter()
            .map(|row| t.rows.iter().map(|col| dot(row, col)).collect::<Result<Vec<_>>>())
            .collect::<Result<_>>()?;
        Ok(IntMatrix { rows })
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> Result<i64> {
        use num_bigint::BigInt;
        use num_traits::{One, Zero};
        let n = self.dim();
        let mut a = linalg::to_big(&self.rows);
        let mut sign = 1i64;
        let mut prev = BigInt::one();
        for k in 0..n {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                    Some(p) => {
                        a.swap(k, p);
                        sign = -sign;
                    }
                    None => return Ok(0),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    a[i][j] = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                }
            }
            prev = a[k][k].clone();
        }
        let det = if n == 0 { BigInt::one() } else { a[n - 1][n - 1].clone() * sign };
        det.to_i64().ok_or(Error::Overflow)
    }
}

fn dot(a: &[i64], b: &[i64]) -> Result<i64> {
    a.iter().zip(b).try_fold(0i64, |acc, (x, y)| ck(acc.checked_add(ck(x.checked_mul(*y))?)))
}

/// An alternating bilinear form given by its Gram matrix.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntersectionForm {
    gram: IntMatrix,
}

impl IntersectionForm {
    /// The standard form of rank `2n` with `ι(x_i, y_i) = 1`.
    pub fn standard(n: usize) -> Self {
        let mut rows = vec![vec![0; 2 * n]; 2 * n];
        for i in 0..n {
            rows[i][n + i] = 1;
            rows[n + i][i] = -1;
        }
        IntersectionForm { gram: IntMatrix { rows } }
    }

    pub fn from_gram(gram: IntMatrix) -> Result<Self> {
        let n = gram.dim();
        for i in 0..n {
            if gram.get(i, i) != 0 {
                return Err(Error::InvalidInput("gram matrix has nonzero diagonal".into()));
            }
            for j in 0..n {
                if gram.get(i, j) != -gram.get(j, i) {
                    return Err(Error::InvalidInput("gram matrix is not skew-symmetric".into()));
                }
            }
        }
        Ok(IntersectionForm { gram })
    }

    pub fn gram(&self) -> &IntMatrix {
        &self.gram
    }

    pub fn rank(&self) -> usize {
        self.gram.dim()
    }

    fn check(&self, v: &HomologyClass) -> Result<()> {
        if v.rank() != self.rank() {
            return Err(Error::DimensionMismatch { expected: self.rank(), found: v.rank() });
        }
        Ok(())
    }

    /// `uᵀ·G·v`
    pub fn pairing(&self, u: &HomologyClass, v: &HomologyClass) -> Result<i64> {
        self.check(u)?;
        let gv = self.gram.apply(v)?;
        dot(u.coords(), gv.coords())
    }

    /// `v + ι(v,c)·c`
    pub fn transvection_apply(&self, v: &HomologyClass, c: &HomologyClass) -> Result<HomologyClass> {
        self.transvection_power_apply(v, c, 1)
    }

    /// `v + k·ι(v,c)·c`, the `k`-th power of the transvection along `c`.
    pub fn transvection_power_apply(
        &self,
        v: &HomologyClass,
        c: &HomologyClass,
        k: i64,
    ) -> Result<HomologyClass> {
        let p = self.pairing(v, c)?;
        v.checked_add_scaled(ck(p.checked_mul(k))?, c)
    }

    pub fn transvection_matrix(&self, c: &HomologyClass) -> Result<IntMatrix> {
        self.transvection_power_matrix(c, 1)
    }

    pub fn transvection_power_matrix(&self, c: &HomologyClass, k: i64) -> Result<IntMatrix> {
        self.check(c)?;
        if c.is_zero() {
            return Err(Error::ZeroVector);
        }
        let n = self.rank();
        let cols = (0..n)
            .map(|j| self.transvection_power_apply(&HomologyClass::basis(n, j), c, k))
            .collect::<Result<Vec<_>>>()?;
        IntMatrix::from_columns(&cols)
    }

    /// `MᵀGM = G`
    pub fn sp_membership(&self, m: &IntMatrix) -> Result<bool> {
        if m.dim() != self.rank() {
            return Err(Error::DimensionMismatch { expected: self.rank(), found: m.dim() });
        }
        Ok(m.transpose().mul(&self.gram)?.mul(m)? == self.gram)
    }

    /// Form-preserving and fixes `v`.
    pub fn stabilizer_membership(&self, m: &IntMatrix, v: &HomologyClass) -> Result<bool> {
        Ok(self.sp_membership(m)? && m.apply(v)? == *v)
    }

    fn restricted_gram(&self, gens: &[HomologyClass]) -> Result<Vec<Vec<i64>>> {
        gens.iter()
            .map(|u| gens.iter().map(|v| self.pairing(u, v)).collect())
            .collect()
    }

    /// Primitive integer basis of `{v ∈ L : ι(v, L) = 0}`, computed over Q.
    pub fn radical(&self, lattice: &Sublattice) -> Result<Vec<HomologyClass>> {
        let gens = lattice.generators();
        let gram = self.restricted_gram(gens)?;
        let mut out = Vec::new();
        for lambda in linalg::kernel_q(&gram, gens.len()) {
            let mut v = HomologyClass::zero(self.rank());
            for (coef, g) in lambda.iter().zip(gens) {
                let k = coef.to_i64().ok_or(Error::Overflow)?;
                v = v.checked_add_scaled(k, g)?;
            }
            out.push(v.primitive());
        }
        Ok(out)
    }

    /// Hyperbolic pairs plus radical spanning the same Q-span as `lattice`.
    ///
    /// Pivot rule: the lexicographically first pair of remaining vectors
    /// with pairing ±1, signed so that `ι(z, w) = 1`. The other vectors are
    /// projected off the new pair by `v ↦ v − ι(v,w)z + ι(v,z)w`.
    pub fn symplectic_gram_schmidt(&self, lattice: &Sublattice) -> Result<SymplecticBasis> {
        let mut rest: Vec<HomologyClass> = lattice.generators().to_vec();
        let mut pairs = Vec::new();
        'outer: loop {
            for i in 0..rest.len() {
                for j in i + 1..rest.len() {
                    let p = self.pairing(&rest[i], &rest[j])?;
                    if p.abs() != 1 {
                        continue;
                    }
                    let z = rest[i].clone();
                    let w = rest[j].checked_scale(p)?;
                    rest.remove(j);
                    rest.remove(i);
                    for v in rest.iter_mut() {
                        let a = self.pairing(v, &w)?;
                        let b = self.pairing(v, &z)?;
                        *v = v.checked_add_scaled(-a, &z)?.checked_add_scaled(b, &w)?;
                    }
                    pairs.push((z, w));
                    continue 'outer;
                }
            }
            break;
        }
        for i in 0..rest.len() {
            for j in i + 1..rest.len() {
                if self.pairing(&rest[i], &rest[j])? != 0 {
                    return Err(Error::NonUnimodular);
                }
            }
        }
        Ok(SymplecticBasis { pairs, radical_basis: rest })
    }
}

/// Q-independent integer vectors in a fixed ambient rank.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sublattice {
    generators: Vec<HomologyClass>,
}

impl Sublattice {
    pub fn new(generators: Vec<HomologyClass>) -> Result<Self> {
        if let Some(first) = generators.first() {
            for g in &generators {
                first.same_rank(g)?;
            }
        }
        let rows: Vec<Vec<i64>> = generators.iter().map(|g| g.coords().to_vec()).collect();
        if linalg::rank_q(&rows) != generators.len() {
            return Err(Error::DependentGenerators);
        }
        Ok(Sublattice { generators })
    }

    pub fn generators(&self) -> &[HomologyClass] {
        &self.generators
    }

    pub fn rank(&self) -> usize {
        self.generators.len()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SymplecticBasis {
    pub pairs: Vec<(HomologyClass, HomologyClass)>,
    pub radical_basis: Vec<HomologyClass>,
}

/// Rank over Q of a family of classes.
pub fn q_rank(classes: &[HomologyClass]) -> usize {
    let rows: Vec<Vec<i64>> = classes.iter().map(|g| g.coords().to_vec()).collect();
    linalg::rank_q(&rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn x(n: usize, i: usize) -> HomologyClass {
        HomologyClass::x(2 * n, i)
    }
    fn y(n: usize, i: usize) -> HomologyClass {
        HomologyClass::y(2 * n, i)
    }

    /// The chain c_1 = y_1, c_2 = -x_1, c_3 = y_2 - y_1, ... inside rank 2n.
    fn chain(n: usize, len: usize) -> Vec<HomologyClass> {
        (1..=len)
            .map(|j| match j {
                1 => y(n, 1),
                j if j % 2 == 0 => -&x(n, j / 2),
                j => &y(n, j / 2 + 1) - &y(n, j / 2),
            })
            .collect()
    }

    #[test]
    fn pairing_examples() {
        let f = IntersectionForm::standard(3);
        assert_eq!(f.pairing(&x(3, 1), &y(3, 1)).unwrap(), 1);
        assert_eq!(f.pairing(&y(3, 1), &x(3, 1)).unwrap(), -1);
        assert_eq!(f.pairing(&x(3, 1), &x(3, 2)).unwrap(), 0);
        assert!(matches!(
            f.pairing(&x(3, 1), &x(2, 1)),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn transvection_examples() {
        let g = 4;
        let f = IntersectionForm::standard(g + 1);
        let c = &y(g + 1, g) - &y(g + 1, g - 1);
        let image = f.transvection_apply(&x(g + 1, g), &c).unwrap();
        assert_eq!(image, &x(g + 1, g) + &c);
        assert_eq!(f.transvection_apply(&x(g + 1, 1), &x(g + 1, 2)).unwrap(), x(g + 1, 1));
        assert_eq!(f.transvection_apply(&c, &c).unwrap(), c);
    }

    #[test]
    fn transvection_matrix_genus_one() {
        let f = IntersectionForm::standard(1);
        let m = f.transvection_matrix(&x(1, 1)).unwrap();
        assert_eq!(m.apply(&y(1, 1)).unwrap(), &y(1, 1) - &x(1, 1));
        assert_eq!(m.apply(&x(1, 1)).unwrap(), x(1, 1));
        assert_eq!(m.determinant().unwrap(), 1);
        assert_eq!(f.transvection_matrix(&HomologyClass::zero(2)), Err(Error::ZeroVector));
    }

    #[test]
    fn transvection_powers_compose() {
        let f = IntersectionForm::standard(2);
        let c = &x(2, 1) + &y(2, 2);
        let m = f.transvection_matrix(&c).unwrap();
        let inv = f.transvection_power_matrix(&c, -1).unwrap();
        assert_eq!(m.mul(&inv).unwrap(), IntMatrix::identity(4));
        assert_eq!(m.mul(&m).unwrap(), f.transvection_power_matrix(&c, 2).unwrap());
    }

    #[test]
    fn membership_examples() {
        let g = 3;
        let f = IntersectionForm::standard(g + 1);
        let id = IntMatrix::identity(8);
        assert!(f.sp_membership(&id).unwrap());
        assert!(f.stabilizer_membership(&id, &y(4, 4)).unwrap());
        let m = f.transvection_matrix(&(&y(4, 3) - &y(4, 2))).unwrap();
        assert!(f.stabilizer_membership(&m, &y(4, 4)).unwrap());
        let moving = f.transvection_matrix(&x(4, 4)).unwrap();
        assert!(!f.stabilizer_membership(&moving, &y(4, 4)).unwrap());
        assert!(!f.sp_membership(&IntMatrix::diagonal(&[2; 8])).unwrap());
    }

    #[test]
    fn radical_examples() {
        let f = IntersectionForm::standard(3);
        let full = Sublattice::new((1..=3).flat_map(|i| [x(3, i), y(3, i)]).collect()).unwrap();
        assert!(f.radical(&full).unwrap().is_empty());
        let line = Sublattice::new(vec![x(3, 1)]).unwrap();
        assert_eq!(f.radical(&line).unwrap(), vec![x(3, 1)]);
        let c = chain(3, 3);
        let three = Sublattice::new(c.clone()).unwrap();
        let rad = f.radical(&three).unwrap();
        assert_eq!(rad, vec![(&c[0] + &c[2]).primitive()]);
    }

    #[test]
    fn gram_schmidt_examples() {
        let f = IntersectionForm::standard(3);
        let hyp = Sublattice::new(vec![x(3, 1), y(3, 1)]).unwrap();
        let b = f.symplectic_gram_schmidt(&hyp).unwrap();
        assert_eq!(b.pairs, vec![(x(3, 1), y(3, 1))]);
        assert!(b.radical_basis.is_empty());

        for len in [3, 5] {
            let c = chain(3, len);
            let b = f.symplectic_gram_schmidt(&Sublattice::new(c.clone()).unwrap()).unwrap();
            assert_eq!(b.pairs.len(), len / 2);
            assert_eq!(b.radical_basis.len(), 1);
            let odd_sum = c.iter().step_by(2).fold(HomologyClass::zero(6), |a, v| &a + v);
            assert_eq!(b.radical_basis[0].primitive(), odd_sum.primitive());
        }
    }

    #[test]
    fn gram_schmidt_rejects_non_unimodular() {
        let f = IntersectionForm::standard(2);
        let l = Sublattice::new(vec![x(2, 1), y(2, 1).checked_scale(2).unwrap()]).unwrap();
        assert_eq!(f.symplectic_gram_schmidt(&l), Err(Error::NonUnimodular));
    }

    #[test]
    fn dependent_generators_rejected() {
        assert_eq!(
            Sublattice::new(vec![x(2, 1), x(2, 1).checked_scale(3).unwrap()]),
            Err(Error::DependentGenerators)
        );
    }

    #[test]
    fn display_uses_basis_labels() {
        let v = &(&x(2, 1) - &y(2, 2)) + &y(2, 1).checked_scale(2).unwrap();
        assert_eq!(v.to_string(), "x1 +2y1 -y2");
        assert_eq!(HomologyClass::zero(4).to_string(), "0");
    }

    fn vec_strategy() -> impl Strategy<Value = (usize, Vec<i64>, Vec<i64>)> {
        (1usize..=6).prop_flat_map(|n| {
            (
                Just(n),
                prop::collection::vec(-20i64..=20, 2 * n),
                prop::collection::vec(-20i64..=20, 2 * n),
            )
        })
    }

    proptest! {
        #[test]
        fn pairing_is_alternating((n, u, v) in vec_strategy()) {
            let f = IntersectionForm::standard(n);
            let (u, v) = (HomologyClass::new(u), HomologyClass::new(v));
            prop_assert_eq!(f.pairing(&u, &v).unwrap(), -f.pairing(&v, &u).unwrap());
            prop_assert_eq!(f.pairing(&u, &u).unwrap(), 0);
        }

        #[test]
        fn transvections_are_symplectic((n, c, v) in vec_strategy()) {
            let f = IntersectionForm::standard(n);
            let c = HomologyClass::new(c);
            prop_assume!(!c.is_zero());
            let m = f.transvection_matrix(&c).unwrap();
            prop_assert!(f.sp_membership(&m).unwrap());
            prop_assert_eq!(m.determinant().unwrap(), 1);
            prop_assert_eq!(m.apply(&c).unwrap(), c.clone());
            let v = HomologyClass::new(v);
            prop_assert_eq!(m.apply(&v).unwrap(), f.transvection_apply(&v, &c).unwrap());
        }

        #[test]
        fn gram_schmidt_invariants(len in 1usize..=9, n in 5usize..=6) {
            let f = IntersectionForm::standard(n);
            let gens = chain(n, len);
            let l = Sublattice::new(gens.clone()).unwrap();
            let b = f.symplectic_gram_schmidt(&l).unwrap();
            for (i, (z1, w1)) in b.pairs.iter().enumerate() {
                for (j, (z2, w2)) in b.pairs.iter().enumerate() {
                    prop_assert_eq!(f.pairing(z1, w2).unwrap(), i64::from(i == j));
                    prop_assert_eq!(f.pairing(z1, z2).unwrap(), 0);
                    prop_assert_eq!(f.pairing(w1, w2).unwrap(), 0);
                }
            }
            for r in &b.radical_basis {
                for g in &gens {
                    prop_assert_eq!(f.pairing(r, g).unwrap(), 0);
                }
            }
            let mut all: Vec<HomologyClass> = b.pairs.iter().flat_map(|(z, w)| [z.clone(), w.clone()]).collect();
            all.extend(b.radical_basis.iter().cloned());
            prop_assert_eq!(q_rank(&all), len);
            let mut joint = all.clone();
            joint.extend(gens.iter().cloned());
            prop_assert_eq!(q_rank(&joint), len);
            prop_assert_eq!(f.radical(&l).unwrap().len(), len - 2 * b.pairs.len());
        }
    }
}
