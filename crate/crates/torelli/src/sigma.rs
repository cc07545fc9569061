//! Boolean polynomial algebra `B^k` over `Z/2` and the Birman–Craggs–Johnson
//! homomorphism on chain maps.
//!
//! `B^k` is realised as square-free monomials in the barred basis classes,
//! truncated above degree `k`. A monomial is a bitmask over basis indices,
//! so ranks up to 64 are supported.

use std::collections::BTreeSet;

use itertools::Itertools;

use crate::chain::{ChainMapValue, ChainNotation, ExplicitMap, Generator, GroupWord};
use crate::error::{Error, Result};
use crate::surface::SurfaceModel;
use crate::symplectic::{basis_labels, HomologyClass, IntMatrix, IntersectionForm, Sublattice};
use crate::tau::Wedge3Vec;

pub const SIGMA_DEGREE: usize = 3;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BoolPoly {
    rank: usize,
    degree: usize,
    monomials: BTreeSet<u64>,
}

impl BoolPoly {
    pub fn zero(rank: usize, degree: usize) -> Self {
        assert!(rank <= 64, "boolean monomials are stored in 64-bit masks");
        BoolPoly { rank, degree, monomials: BTreeSet::new() }
    }

    pub fn one(rank: usize, degree: usize) -> Self {
        Self::monomial(rank, degree, 0)
    }

    /// `ē_i`
    pub fn generator(rank: usize, degree: usize, i: usize) -> Self {
        Self::monomial(rank, degree, 1 << i)
    }

    pub fn monomial(rank: usize, degree: usize, mask: u64) -> Self {
        let mut p = Self::zero(rank, degree);
        p.toggle(mask);
        p
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn degree_cap(&self) -> usize {
        self.degree
    }

    pub fn monomials(&self) -> &BTreeSet<u64> {
        &self.monomials
    }

    pub fn is_zero(&self) -> bool {
        self.monomials.is_empty()
    }

    fn toggle(&mut self, mask: u64) {
        if mask.count_ones() as usize > self.degree {
            return;
        }
        if !self.monomials.remove(&mask) {
            self.monomials.insert(mask);
        }
    }

    fn compatible(&self, other: &Self) -> Result<()> {
        if self.rank != other.rank || self.degree != other.degree {
            return Err(Error::DimensionMismatch { expected: self.rank, found: other.rank });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.compatible(other)?;
        let monomials = self.monomials.symmetric_difference(&other.monomials).copied().collect();
        Ok(BoolPoly { rank: self.rank, degree: self.degree, monomials })
    }

    /// Product with `ā² = ā`; monomials above the degree cap vanish.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.compatible(other)?;
        let mut out = Self::zero(self.rank, self.degree);
        for a in &self.monomials {
            for b in &other.monomials {
                out.toggle(a | b);
            }
        }
        Ok(out)
    }

    pub fn labeled_monomials(&self) -> Vec<Vec<String>> {
        let l = basis_labels(self.rank);
        self.monomials
            .iter()
            .map(|&m| {
                if m == 0 {
                    vec!["1".to_string()]
                } else {
                    (0..self.rank).filter(|i| m >> i & 1 == 1).map(|i| l[i].clone()).collect()
                }
            })
            .collect()
    }
}

/// `v̄` expanded over the basis through `\overline{a+b} = ā + b̄ + ι(a,b)`.
pub fn bool_embed(form: &IntersectionForm, v: &HomologyClass, degree: usize) -> Result<BoolPoly> {
    let rank = form.rank();
    let odd: Vec<usize> = (0..v.rank()).filter(|&i| v.coords()[i] % 2 != 0).collect();
    let mut p = BoolPoly::zero(rank, degree);
    let mut constant = 0i64;
    for (k, &i) in odd.iter().enumerate() {
        p.toggle(1 << i);
        for &j in &odd[k + 1..] {
            constant += form.pairing(&HomologyClass::basis(rank, i), &HomologyClass::basis(rank, j))?;
        }
    }
    if constant % 2 != 0 {
        p.toggle(0);
    }
    Ok(p)
}

/// Fold relation 1 over the summands in the given order.
pub fn bool_embed_sum(form: &IntersectionForm, summands: &[HomologyClass], degree: usize) -> Result<BoolPoly> {
    let mut acc = HomologyClass::zero(form.rank());
    let mut p = BoolPoly::zero(form.rank(), degree);
    for s in summands {
        p = p.add(&bool_embed(form, s, degree)?)?;
        if form.pairing(&acc, s)? % 2 != 0 {
            p = p.add(&BoolPoly::one(form.rank(), degree))?;
        }
        acc = acc.checked_add(s)?;
    }
    Ok(p)
}

/// `Σ_{i=0}^{k} C(d, i)`
pub fn bool_rank(d: usize, k: usize) -> u64 {
    (0..=k.min(d)).map(|i| binomial(d, i)).sum()
}

pub fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u64, |acc, i| acc * (n - i) as u64 / (i + 1) as u64)
}

/// Every monomial shape of `B^k` on `d` generators.
pub fn all_monomials(d: usize, k: usize) -> Vec<u64> {
    (0..=k.min(d))
        .flat_map(|size| (0..d).combinations(size).map(|s| s.iter().fold(0u64, |m, &i| m | 1 << i)))
        .collect()
}

/// Algebra map induced by `M` mod 2: `ē_i ↦ \overline{M e_i}`.
pub(crate) fn act_bool(form: &IntersectionForm, m: &IntMatrix, p: &BoolPoly) -> Result<BoolPoly> {
    let images = (0..m.dim())
        .map(|j| bool_embed(form, &m.column(j), p.degree))
        .collect::<Result<Vec<_>>>()?;
    let mut out = BoolPoly::zero(p.rank, p.degree);
    for &mono in &p.monomials {
        let mut term = BoolPoly::one(p.rank, p.degree);
        for (i, img) in images.iter().enumerate() {
            if mono >> i & 1 == 1 {
                term = term.mul(img)?;
            }
        }
        out = out.add(&term)?;
    }
    Ok(out)
}

pub fn sp_action_bool(form: &IntersectionForm, m: &IntMatrix, p: &BoolPoly) -> Result<BoolPoly> {
    if !form.sp_membership(m)? {
        return Err(Error::NonSymplectic);
    }
    act_bool(form, m, p)
}

fn omega_bar(form: &IntersectionForm, pairs: &[(HomologyClass, HomologyClass)]) -> Result<BoolPoly> {
    let mut p = BoolPoly::zero(form.rank(), SIGMA_DEGREE);
    for (z, w) in pairs {
        p = p.add(&bool_embed(form, z, SIGMA_DEGREE)?.mul(&bool_embed(form, w, SIGMA_DEGREE)?)?)?;
    }
    Ok(p)
}

/// `(Σ_j z̄_j w̄_j)(c̄ + 1̄)`
pub fn sigma_chainmap(form: &IntersectionForm, chain: &ChainMapValue) -> Result<BoolPoly> {
    let basis = form.symplectic_gram_schmidt(&Sublattice::new(chain.curves.clone())?)?;
    sigma_pairs(form, &basis.pairs, Some(&chain.boundary_class))
}

fn sigma_pairs(
    form: &IntersectionForm,
    pairs: &[(HomologyClass, HomologyClass)],
    c: Option<&HomologyClass>,
) -> Result<BoolPoly> {
    let omega = omega_bar(form, pairs)?;
    match c {
        Some(c) => {
            let c1 = bool_embed(form, c, SIGMA_DEGREE)?.add(&BoolPoly::one(form.rank(), SIGMA_DEGREE))?;
            omega.mul(&c1)
        }
        None => Ok(omega),
    }
}

/// A separating twist contributes `Σ z̄_j w̄_j`.
pub fn sigma_explicit(form: &IntersectionForm, map: &ExplicitMap) -> Result<BoolPoly> {
    sigma_pairs(form, &map.pairs, map.boundary_class.as_ref())
}

pub fn sigma_notation(n: &ChainNotation, model: &SurfaceModel) -> Result<BoolPoly> {
    sigma_chainmap(model.form(), &n.expand(model)?)
}

/// Sum over tokens; inverses contribute the same value in characteristic 2.
pub fn sigma_word(word: &GroupWord, model: &SurfaceModel) -> Result<BoolPoly> {
    let form = model.form();
    let mut total = BoolPoly::zero(model.rank(), SIGMA_DEGREE);
    for token in &word.tokens {
        let mut value = match &token.generator {
            Generator::Chain(n) => sigma_notation(n, model)?,
            Generator::Explicit(m) => sigma_explicit(form, m)?,
            Generator::Twist(t) => return Err(Error::NotTorelli(format!("bare twist {t}"))),
        };
        for &(t, e) in token.conjugator.iter().rev() {
            value = act_bool(form, &model.twist_matrix(t, e)?, &value)?;
        }
        if token.exponent % 2 != 0 {
            total = total.add(&value)?;
        }
    }
    Ok(total)
}

/// The comparison map `a`: reduce coefficients mod 2.
pub fn map_a(t: &Wedge3Vec) -> BTreeSet<[usize; 3]> {
    t.mod2()
}

/// The comparison map `b`: drop degree ≤ 2, read degree-3 monomials as wedges.
pub fn map_b(p: &BoolPoly) -> BTreeSet<[usize; 3]> {
    p.monomials
        .iter()
        .filter(|m| m.count_ones() == 3)
        .map(|&m| {
            let v: Vec<usize> = (0..64).filter(|i| m >> i & 1 == 1).collect();
            [v[0], v[1], v[2]]
        })
        .collect()
}

/// `(u, p) ∈ W` iff `a(u) = b(p)`.
pub fn w_membership(u: &Wedge3Vec, p: &BoolPoly) -> bool {
    map_a(u) == map_b(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chain::{conjugate_by_twist, enumerate_generators, relation_words, RelationName};
    use crate::tau::{tau_notation, tau_word};
    use proptest::prelude::*;

    fn model() -> SurfaceModel {
        SurfaceModel::build(3, 2).unwrap()
    }

    fn gen(i: usize) -> BoolPoly {
        BoolPoly::generator(8, 3, i)
    }

    #[test]
    fn embed_examples() {
        let m = model();
        let f = m.form();
        assert_eq!(bool_embed(f, &m.x(1), 3).unwrap(), gen(0));
        let xy = bool_embed(f, &(&m.x(1) + &m.y(1)), 3).unwrap();
        assert_eq!(xy, gen(0).add(&gen(4)).unwrap().add(&BoolPoly::one(8, 3)).unwrap());
        let xx = bool_embed(f, &(&m.x(1) + &m.x(2)), 3).unwrap();
        assert_eq!(xx, gen(0).add(&gen(1)).unwrap());
    }

    #[test]
    fn algebra_examples() {
        let x1 = gen(0);
        assert_eq!(x1.mul(&x1).unwrap(), x1);
        let cube = gen(0).mul(&gen(1)).unwrap().mul(&gen(2)).unwrap();
        assert_eq!(cube.monomials().len(), 1);
        assert!(cube.mul(&gen(4)).unwrap().is_zero());
        assert!(x1.add(&x1).unwrap().is_zero());
        assert_eq!(BoolPoly::one(8, 3).labeled_monomials(), vec![vec!["1".to_string()]]);
    }

    #[test]
    fn rank_formula() {
        assert_eq!(bool_rank(6, 3), 42);
        assert_eq!(bool_rank(7, 3), 64);
        assert_eq!(bool_rank(3, 3), 8);
        assert_eq!(bool_rank(9, 3), 130);
        for d in 0..=8 {
            for k in 0..=d {
                assert_eq!(all_monomials(d, k).len() as u64, bool_rank(d, k));
            }
        }
    }

    #[test]
    fn genus_one_formula_and_shear_invariance() {
        let m = model();
        let f = m.form();
        let v = "1234".parse::<ChainNotation>().unwrap().expand(&m).unwrap();
        let basis = f.symplectic_gram_schmidt(&Sublattice::new(v.curves.clone()).unwrap()).unwrap();
        let (z, w) = &basis.pairs[0];
        let c = &v.boundary_class;
        let e = |h: &HomologyClass| bool_embed(f, h, 3).unwrap();
        let zw = e(z).mul(&e(w)).unwrap();
        let want = zw.mul(&e(c)).unwrap().add(&zw).unwrap();
        assert_eq!(sigma_chainmap(f, &v).unwrap(), want);
        let sheared = ExplicitMap { label: "z+c".into(), pairs: vec![(z + c, w.clone())], boundary_class: Some(c.clone()) };
        assert_eq!(sigma_explicit(f, &sheared).unwrap(), want);
    }

    #[test]
    fn comparison_maps() {
        let m = model();
        let t = crate::tau::wedge(&m.x(1), &m.y(1), &m.y(2)).unwrap();
        let two = Wedge3Vec::zero(8).checked_add_scaled(2, &t).unwrap();
        assert!(map_a(&two).is_empty());
        assert!(map_b(&gen(0).mul(&gen(4)).unwrap()).is_empty());
        let cube = gen(0).mul(&gen(4)).unwrap().mul(&gen(5)).unwrap();
        assert_eq!(map_b(&cube), map_a(&t));
        assert!(w_membership(&Wedge3Vec::zero(8), &BoolPoly::one(8, 3)));
        assert!(!w_membership(&t, &BoolPoly::zero(8, 3)));
    }

    #[test]
    fn w_compatibility_and_equivariance_at_genus_three() {
        let m = model();
        let f = m.form();
        for n in enumerate_generators(&m).unwrap() {
            let s = sigma_notation(&n, &m).unwrap();
            assert!(w_membership(&tau_notation(&n, &m).unwrap(), &s), "{n}");
            for tw in m.twists() {
                for e in [1, -1] {
                    if let Ok((_, word)) = conjugate_by_twist(tw, e, &n, &m) {
                        let moved = act_bool(f, &m.twist_matrix(tw, e).unwrap(), &s).unwrap();
                        assert_eq!(sigma_word(&word, &m).unwrap(), moved, "{tw}^{e} * {n}");
                    }
                }
            }
        }
    }

    #[test]
    fn relations_vanish_mod_two() {
        for g in 3..=4 {
            let m = SurfaceModel::build(g, 2).unwrap();
            for k in 3..=g {
                for name in [RelationName::J1Full, RelationName::J2, RelationName::J3] {
                    let (l, r) = relation_words(name, k, &m).unwrap();
                    assert_eq!(sigma_word(&l, &m).unwrap(), sigma_word(&r, &m).unwrap(), "{name} k={k}");
                }
            }
            let (l, r) = relation_words(RelationName::Lantern, 0, &m).unwrap();
            assert_eq!(sigma_word(&l, &m).unwrap(), sigma_word(&r, &m).unwrap());
            assert!(!sigma_word(&l, &m).unwrap().is_zero());
            assert!(tau_word(&l, &m).unwrap().is_zero());
        }
    }

    #[test]
    fn action_rejects_non_symplectic() {
        let m = model();
        assert_eq!(
            sp_action_bool(m.form(), &IntMatrix::diagonal(&[3; 8]), &gen(0)),
            Err(Error::NonSymplectic)
        );
        assert_eq!(sp_action_bool(m.form(), &IntMatrix::identity(8), &gen(0)).unwrap(), gen(0));
    }

    proptest! {
        #[test]
        fn embedding_is_order_independent(
            parts in prop::collection::vec(prop::collection::vec(-3i64..=3, 8), 1..5),
            seed in any::<u64>(),
        ) {
            let m = model();
            let f = m.form();
            let summands: Vec<HomologyClass> = parts.into_iter().map(HomologyClass::new).collect();
            let total = summands.iter().fold(HomologyClass::zero(8), |a, s| &a + s);
            let direct = bool_embed(f, &total, 3).unwrap();
            prop_assert_eq!(bool_embed_sum(f, &summands, 3).unwrap(), direct.clone());
            let mut rotated = summands.clone();
            rotated.rotate_left(seed as usize % summands.len());
            rotated.reverse();
            prop_assert_eq!(bool_embed_sum(f, &rotated, 3).unwrap(), direct);
        }

        #[test]
        fn action_is_multiplicative(i in 0usize..8, j in 0usize..8, t in 0usize..8) {
            let m = model();
            let f = m.form();
            let tw = m.twists()[t];
            let mat = m.twist_matrix(tw, 1).unwrap();
            let (a, b) = (gen(i), gen(j).add(&BoolPoly::one(8, 3)).unwrap());
            let lhs = act_bool(f, &mat, &a.mul(&b).unwrap()).unwrap();
            let rhs = act_bool(f, &mat, &a).unwrap().mul(&act_bool(f, &mat, &b).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }
}
