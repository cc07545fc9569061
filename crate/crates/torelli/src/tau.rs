//! The Johnson homomorphism on chain maps, with values in `⋀³H`.

use std::collections::{BTreeMap, BTreeSet};

use crate::chain::{ChainMapValue, ChainNotation, ExplicitMap, Generator, GroupWord};
use crate::error::{Error, Result};
use crate::surface::SurfaceModel;
use crate::symplectic::{basis_labels, ck, HomologyClass, IntMatrix, IntersectionForm, Sublattice};

/// Sparse integer vector over the basis triples `e_a ∧ e_b ∧ e_c`, `a < b < c`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Wedge3Vec {
    rank: usize,
    coeffs: BTreeMap<[usize; 3], i64>,
}

impl Wedge3Vec {
    pub fn zero(rank: usize) -> Self {
        Wedge3Vec { rank, coeffs: BTreeMap::new() }
    }

    pub fn basis(rank: usize, a: usize, b: usize, c: usize) -> Result<Self> {
        let mut t = Self::zero(rank);
        t.add_term([a, b, c], 1)?;
        Ok(t)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn coeffs(&self) -> &BTreeMap<[usize; 3], i64> {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coefficient(&self, key: [usize; 3]) -> i64 {
        self.coeffs.get(&key).copied().unwrap_or(0)
    }

    /// Add `k·(e_a ∧ e_b ∧ e_c)` for an arbitrary index order.
    pub fn add_term(&mut self, key: [usize; 3], k: i64) -> Result<()> {
        let [a, b, c] = key;
        if a == b || b == c || a == c || k == 0 {
            return Ok(());
        }
        let mut sorted = key;
        let mut sign = 1;
        for i in 0..3 {
            for j in 0..2 - i {
                if sorted[j] > sorted[j + 1] {
                    sorted.swap(j, j + 1);
                    sign = -sign;
                }
            }
        }
        let entry = self.coeffs.entry(sorted).or_insert(0);
        *entry = ck(entry.checked_add(ck(k.checked_mul(sign))?))?;
        if *entry == 0 {
            self.coeffs.remove(&sorted);
        }
        Ok(())
    }

    pub fn checked_add_scaled(&self, k: i64, other: &Wedge3Vec) -> Result<Wedge3Vec> {
        if self.rank != other.rank {
            return Err(Error::DimensionMismatch { expected: self.rank, found: other.rank });
        }
        let mut out = self.clone();
        for (&key, &v) in &other.coeffs {
            out.add_term(key, ck(v.checked_mul(k))?)?;
        }
        Ok(out)
    }

    pub fn checked_add(&self, other: &Wedge3Vec) -> Result<Wedge3Vec> {
        self.checked_add_scaled(1, other)
    }

    pub fn checked_sub(&self, other: &Wedge3Vec) -> Result<Wedge3Vec> {
        self.checked_add_scaled(-1, other)
    }

    /// Coefficient-wise reduction mod 2 (the comparison map `a`).
    pub fn mod2(&self) -> BTreeSet<[usize; 3]> {
        self.coeffs.iter().filter(|(_, v)| *v % 2 != 0).map(|(k, _)| *k).collect()
    }

    /// Whether some stored triple uses basis index `i`.
    pub fn involves(&self, i: usize) -> bool {
        self.coeffs.keys().any(|k| k.contains(&i))
    }

    pub fn labeled_triples(&self) -> Vec<(String, String, String, i64)> {
        let l = basis_labels(self.rank);
        self.coeffs
            .iter()
            .map(|(&[a, b, c], &v)| (l[a].clone(), l[b].clone(), l[c].clone(), v))
            .collect()
    }
}

pub fn wedge(u: &HomologyClass, v: &HomologyClass, w: &HomologyClass) -> Result<Wedge3Vec> {
    let rank = u.rank();
    for x in [v, w] {
        if x.rank() != rank {
            return Err(Error::DimensionMismatch { expected: rank, found: x.rank() });
        }
    }
    let nz = |x: &HomologyClass| -> Vec<(usize, i64)> {
        x.coords().iter().copied().enumerate().filter(|(_, c)| *c != 0).collect()
    };
    let (nu, nv, nw) = (nz(u), nz(v), nz(w));
    let mut out = Wedge3Vec::zero(rank);
    for &(a, ua) in &nu {
        for &(b, vb) in &nv {
            for &(c, wc) in &nw {
                out.add_term([a, b, c], ck(ck(ua.checked_mul(vb))?.checked_mul(wc))?)?;
            }
        }
    }
    Ok(out)
}

/// `u∧v∧w ↦ Mu∧Mv∧Mw` without the symplectic check.
pub(crate) fn act_wedge3(m: &IntMatrix, t: &Wedge3Vec) -> Result<Wedge3Vec> {
    let cols: Vec<HomologyClass> = (0..m.dim()).map(|j| m.column(j)).collect();
    let mut out = Wedge3Vec::zero(t.rank);
    for (&[a, b, c], &k) in &t.coeffs {
        out = out.checked_add_scaled(k, &wedge(&cols[a], &cols[b], &cols[c])?)?;
    }
    Ok(out)
}

pub fn sp_action_wedge3(form: &IntersectionForm, m: &IntMatrix, t: &Wedge3Vec) -> Result<Wedge3Vec> {
    if t.rank != form.rank() {
        return Err(Error::DimensionMismatch { expected: form.rank(), found: t.rank });
    }
    if !form.sp_membership(m)? {
        return Err(Error::NonSymplectic);
    }
    act_wedge3(m, t)
}

fn omega_wedge(pairs: &[(HomologyClass, HomologyClass)], c: &HomologyClass) -> Result<Wedge3Vec> {
    pairs.iter().try_fold(Wedge3Vec::zero(c.rank()), |acc, (z, w)| acc.checked_add(&wedge(z, w, c)?))
}

/// `(Σ_j z_j∧w_j) ∧ c` for the symplectic basis of the chain's span.
pub fn tau_chainmap(form: &IntersectionForm, chain: &ChainMapValue) -> Result<Wedge3Vec> {
    if chain.boundary_class.is_zero() {
        return Err(Error::InvalidInput("chain with null-homologous boundary".into()));
    }
    let basis = form.symplectic_gram_schmidt(&Sublattice::new(chain.curves.clone())?)?;
    omega_wedge(&basis.pairs, &chain.boundary_class)
}

pub fn tau_explicit(map: &ExplicitMap) -> Result<Wedge3Vec> {
    match &map.boundary_class {
        Some(c) => omega_wedge(&map.pairs, c),
        None => {
            let rank = map.pairs.first().map_or(0, |(z, _)| z.rank());
            Ok(Wedge3Vec::zero(rank))
        }
    }
}

pub fn tau_notation(n: &ChainNotation, model: &SurfaceModel) -> Result<Wedge3Vec> {
    tau_chainmap(model.form(), &n.expand(model)?)
}

/// `Σ ± Sp(conjugator)·τ(token)` over the tokens of a word.
pub fn tau_word(word: &GroupWord, model: &SurfaceModel) -> Result<Wedge3Vec> {
    let mut total = Wedge3Vec::zero(model.rank());
    for token in &word.tokens {
        let mut value = match &token.generator {
            Generator::Chain(n) => tau_notation(n, model)?,
            Generator::Explicit(m) => tau_explicit(m)?,
            Generator::Twist(t) => return Err(Error::NotTorelli(format!("bare twist {t}"))),
        };
        for &(t, e) in token.conjugator.iter().rev() {
            value = act_wedge3(&model.twist_matrix(t, e)?, &value)?;
        }
        total = total.checked_add_scaled(token.exponent, &value)?;
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chain::{conjugate_by_twist, enumerate_generators, relation_words, RelationName, Token};
    use crate::surface::{CurveName, Twist};
    use proptest::prelude::*;

    #[test]
    fn wedge_examples() {
        let m = SurfaceModel::build(3, 2).unwrap();
        let (x1, y1, y2) = (m.x(1), m.y(1), m.y(2));
        let t = wedge(&x1, &y1, &y2).unwrap();
        assert_eq!(t.labeled_triples(), vec![("x1".into(), "y1".into(), "y2".into(), 1)]);
        assert!(wedge(&x1, &x1, &y2).unwrap().is_zero());
        let swapped = wedge(&y1, &x1, &y2).unwrap();
        assert_eq!(swapped, Wedge3Vec::zero(8).checked_sub(&t).unwrap());
        assert!(wedge(&x1, &y1, &HomologyClass::zero(6)).is_err());
    }

    #[test]
    fn transvection_action_anchor() {
        for g in 3..=6 {
            let m = SurfaceModel::build(g, 2).unwrap();
            let c = &m.y(g) - &m.y(g - 1);
            let mat = m.form().transvection_matrix(&c).unwrap();
            let t = wedge(&m.x(g), &m.y(g), &m.y(g + 1)).unwrap();
            // Expanding (x_g + y_g - y_{g-1}) ∧ y_g ∧ y_{g+1} gives a minus sign.
            let want = t.checked_sub(&wedge(&m.y(g - 1), &m.y(g), &m.y(g + 1)).unwrap()).unwrap();
            assert_eq!(sp_action_wedge3(m.form(), &mat, &t).unwrap(), want);
        }
    }

    #[test]
    fn action_rejects_non_symplectic() {
        let f = IntersectionForm::standard(2);
        let t = Wedge3Vec::basis(4, 0, 1, 2).unwrap();
        assert_eq!(sp_action_wedge3(&f, &IntMatrix::identity(4), &t).unwrap(), t);
        assert_eq!(sp_action_wedge3(&f, &IntMatrix::diagonal(&[2; 4]), &t), Err(Error::NonSymplectic));
    }

    #[test]
    fn genus_one_chain() {
        let m = SurfaceModel::build(3, 2).unwrap();
        let v = "1234".parse::<ChainNotation>().unwrap().expand(&m).unwrap();
        let basis = m.form().symplectic_gram_schmidt(&Sublattice::new(v.curves.clone()).unwrap()).unwrap();
        let (z, w) = &basis.pairs[0];
        let c = &v.curves[0] + &v.curves[2];
        assert_eq!(tau_chainmap(m.form(), &v).unwrap(), wedge(z, w, &c).unwrap());
    }

    #[test]
    fn genus_two_chain_splits_into_genus_one_pieces() {
        // At k = 3, J1 writes the genus-two map [234567] as three genus-one maps.
        let m = SurfaceModel::build(3, 2).unwrap();
        let (l, r) = relation_words(RelationName::J1, 3, &m).unwrap();
        assert_eq!(tau_word(&l, &m).unwrap(), tau_word(&r, &m).unwrap());
    }

    #[test]
    fn literal_j1_residual_is_the_missing_factor() {
        for g in 4..=5 {
            let m = SurfaceModel::build(g, 2).unwrap();
            for k in 4..=g {
                let (l, r) = relation_words(RelationName::J1, k, &m).unwrap();
                let diff = tau_word(&l, &m).unwrap().checked_sub(&tau_word(&r, &m).unwrap()).unwrap();
                let missing: ChainNotation = ChainNotation::straight((6..=2 * k + 1).collect()).unwrap();
                let t = tau_notation(&missing, &m).unwrap();
                assert_eq!(diff.checked_add(&t).unwrap(), Wedge3Vec::zero(m.rank()));
                assert!(!diff.is_zero());
            }
        }
    }

    #[test]
    fn word_cancellation_and_bare_twists() {
        let m = SurfaceModel::build(3, 2).unwrap();
        let n: ChainNotation = "1346".parse().unwrap();
        let w = GroupWord::new(vec![Token::chain(n.clone(), 1), Token::chain(n, -1)]).unwrap();
        assert!(tau_word(&w, &m).unwrap().is_zero());
        let bare = GroupWord::new(vec![Token {
            conjugator: vec![],
            generator: Generator::Twist(Twist::B),
            exponent: 1,
        }])
        .unwrap();
        assert!(matches!(tau_word(&bare, &m), Err(Error::NotTorelli(_))));
    }

    #[test]
    fn relations_vanish() {
        for g in 3..=4 {
            let m = SurfaceModel::build(g, 2).unwrap();
            for k in 3..=g {
                for name in [RelationName::J1Full, RelationName::J2, RelationName::J3] {
                    let (l, r) = relation_words(name, k, &m).unwrap();
                    assert_eq!(tau_word(&l, &m).unwrap(), tau_word(&r, &m).unwrap(), "{name} k={k} g={g}");
                }
            }
            let (l, r) = relation_words(RelationName::Lantern, 0, &m).unwrap();
            assert!(tau_word(&l, &m).unwrap().is_zero());
            assert!(tau_word(&r, &m).unwrap().is_zero());
        }
    }

    #[test]
    fn equivariance_and_commuting_at_genus_three() {
        let m = SurfaceModel::build(3, 2).unwrap();
        for n in enumerate_generators(&m).unwrap() {
            let t = tau_notation(&n, &m).unwrap();
            assert!(!t.involves(m.genus()), "{n} uses x_(g+1)");
            for tw in m.twists() {
                for s in [1, -1] {
                    let moved = act_wedge3(&m.twist_matrix(tw, s).unwrap(), &t).unwrap();
                    if let Ok((_, word)) = conjugate_by_twist(tw, s, &n, &m) {
                        assert_eq!(tau_word(&word, &m).unwrap(), moved, "{tw}^{s} * {n}");
                    }
                }
                if crate::chain::commutes_with_twist(tw, &n) {
                    assert_eq!(act_wedge3(&m.twist_matrix(tw, 1).unwrap(), &t).unwrap(), t);
                }
            }
        }
    }

    #[test]
    fn independent_of_hyperbolic_basis() {
        // Re-base the pairs by a symplectic change inside their span, and
        // shear z by the boundary class: the wedge with c is unchanged.
        let m = SurfaceModel::build(4, 2).unwrap();
        let v = "12345678".parse::<ChainNotation>().unwrap().expand(&m).unwrap();
        let f = m.form();
        let basis = f.symplectic_gram_schmidt(&Sublattice::new(v.curves.clone()).unwrap()).unwrap();
        let c = &v.boundary_class;
        let reference = tau_chainmap(f, &v).unwrap();
        let p = &basis.pairs;
        let rebased = vec![
            (&p[0].0 + &p[1].0, p[0].1.clone()),
            (p[1].0.clone(), &p[1].1 - &p[0].1),
            (&p[2].0 + c, p[2].1.checked_add_scaled(3, c).unwrap()),
        ];
        let em = ExplicitMap { label: "rebased".into(), pairs: rebased, boundary_class: Some(c.clone()) };
        em.validate(f).unwrap();
        assert_eq!(tau_explicit(&em).unwrap(), reference);
    }

    #[test]
    fn b_twist_image_of_chain_four() {
        let m = SurfaceModel::build(3, 2).unwrap();
        let c4 = m.curve(CurveName::C(4)).unwrap();
        let img = m.twist_apply(Twist::B, 1, c4).unwrap();
        assert_eq!(&img, m.curve(CurveName::Beta).unwrap());
    }

    proptest! {
        #[test]
        fn wedge_is_alternating_and_trilinear(
            u in prop::collection::vec(-5i64..=5, 6),
            v in prop::collection::vec(-5i64..=5, 6),
            w in prop::collection::vec(-5i64..=5, 6),
            k in -4i64..=4,
        ) {
            let (u, v, w) = (HomologyClass::new(u), HomologyClass::new(v), HomologyClass::new(w));
            let t = wedge(&u, &v, &w).unwrap();
            let z = Wedge3Vec::zero(6);
            prop_assert_eq!(wedge(&v, &u, &w).unwrap(), z.checked_sub(&t).unwrap());
            prop_assert!(wedge(&u, &v, &u).unwrap().is_zero());
            let scaled = wedge(&u.checked_scale(k).unwrap(), &v, &w).unwrap();
            prop_assert_eq!(scaled, z.checked_add_scaled(k, &t).unwrap());
            let sum = wedge(&(&u + &w), &v, &w).unwrap();
            prop_assert_eq!(sum, t);
        }

        #[test]
        fn action_is_functorial(i in 0usize..7, j in 0usize..7, a in 0usize..6, b in 0usize..6, c in 0usize..6) {
            let m = SurfaceModel::build(2, 2).unwrap();
            let tw = m.twists();
            let (s, t) = (tw[i % tw.len()], tw[j % tw.len()]);
            let ms = m.twist_matrix(s, 1).unwrap();
            let mt = m.twist_matrix(t, -1).unwrap();
            let mut x = Wedge3Vec::zero(6);
            x.add_term([a, b, c], 1).unwrap();
            x.add_term([0, 3, 5], 2).unwrap();
            let lhs = act_wedge3(&ms.mul(&mt).unwrap(), &x).unwrap();
            let rhs = act_wedge3(&ms, &act_wedge3(&mt, &x).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn basis_helper() {
        let t = Wedge3Vec::basis(6, 2, 0, 1).unwrap();
        assert_eq!(t.coefficient([0, 1, 2]), 1);
        let odd = Wedge3Vec::basis(6, 1, 0, 2).unwrap();
        assert_eq!(odd.coefficient([0, 1, 2]), -1);
    }
}
