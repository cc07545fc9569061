//! Homology models of `Σ_{g,1}` (one boundary) and of the two-boundary
//! surface `S ⊂ Σ_{g+1,1}`, with the classes of the named curves.
//!
//! Curve classes are the solution of the intersection constraints
//! (consecutive chain curves pair to `+1`, others to `0`, `b` meets only
//! `c_4`). With `n = g+1` handles for two boundaries and `n = g` for one:
//!
//! | curve | class |
//! |---|---|
//! | `c_1` | `y_1` |
//! | `c_{2i}` | `-x_i` |
//! | `c_{2i+1}` | `y_{i+1} - y_i` (two boundaries, `i ≤ g`) |
//! | `c_{2g+1}` | `-y_g` (one boundary) |
//! | `c_{2g+2}` | `-x_{g+1}` (two boundaries, ambient curve) |
//! | `b` | `y_2` |
//! | `β` | `b + c_4 = y_2 - x_2` |
//! | `γ_3` | `y_3 - y_1` |
//! | `∂_1`, `∂_2` | `y_{g+1}`, `-y_{g+1}` |
//!
//! Dehn twists act by `v ↦ v + ι(c, v)·c`, so `Sp(T_c)` is the inverse of the
//! transvection matrix of `c`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::symplectic::{HomologyClass, IntMatrix, IntersectionForm};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CurveName {
    C(usize),
    B,
    Beta,
    Gamma3,
    Boundary(usize),
}

impl fmt::Display for CurveName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CurveName::C(j) => write!(f, "c{j}"),
            CurveName::B => write!(f, "b"),
            CurveName::Beta => write!(f, "beta"),
            CurveName::Gamma3 => write!(f, "gamma3"),
            CurveName::Boundary(i) => write!(f, "d{i}"),
        }
    }
}

/// A Humphries twist curve: `c_j` or `b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Twist {
    C(usize),
    B,
}

impl Twist {
    pub fn curve(self) -> CurveName {
        match self {
            Twist::C(j) => CurveName::C(j),
            Twist::B => CurveName::B,
        }
    }
}

impl fmt::Display for Twist {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Twist::C(j) => write!(f, "T_c{j}"),
            Twist::B => write!(f, "T_b"),
        }
    }
}

impl Serialize for Twist {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl FromStr for Twist {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().trim_start_matches("T_").trim_start_matches('c');
        if t.eq_ignore_ascii_case("b") {
            return Ok(Twist::B);
        }
        t.parse::<usize>()
            .ok()
            .filter(|&j| j > 0)
            .map(Twist::C)
            .ok_or_else(|| Error::InvalidInput(format!("unknown twist {s:?}")))
    }
}

#[derive(Clone, Debug)]
pub struct SurfaceModel {
    genus: usize,
    boundary_count: usize,
    form: IntersectionForm,
    curves: BTreeMap<CurveName, HomologyClass>,
}

impl SurfaceModel {
    pub fn build(genus: usize, boundary_count: usize) -> Result<Self> {
        let curves = solve_curve_table(genus, boundary_count)?;
        let form = IntersectionForm::standard(handles(genus, boundary_count));
        let model = SurfaceModel { genus, boundary_count, form, curves };
        model.check_constraints()?;
        Ok(model)
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn boundary_count(&self) -> usize {
        self.boundary_count
    }

    pub fn rank(&self) -> usize {
        self.form.rank()
    }

    pub fn form(&self) -> &IntersectionForm {
        &self.form
    }

    pub fn curve_table(&self) -> &BTreeMap<CurveName, HomologyClass> {
        &self.curves
    }

    pub fn curve(&self, name: CurveName) -> Result<&HomologyClass> {
        self.curves
            .get(&name)
            .ok_or_else(|| Error::OutOfRange(format!("curve {name} not in the genus {} model", self.genus)))
    }

    /// Number of chain curves usable in chain maps: `2g+1` for two
    /// boundaries and `2g` for one.
    pub fn chain_len(&self) -> usize {
        if self.boundary_count == 2 {
            2 * self.genus + 1
        } else {
            2 * self.genus
        }
    }

    /// Largest index allowed in subchain notation.
    pub fn max_index(&self) -> usize {
        self.chain_len() + 1
    }

    pub fn has_b(&self) -> bool {
        self.curves.contains_key(&CurveName::B)
    }

    /// Twists available on this model: `c_1..c_{chain_len}` and `b`.
    pub fn twists(&self) -> Vec<Twist> {
        let mut t: Vec<Twist> = (1..=self.chain_len()).map(Twist::C).collect();
        if self.has_b() {
            t.push(Twist::B);
        }
        t
    }

    /// The Humphries generators `c_1..c_{2g}`, `b` of `Mod(Σ_{g,1})`.
    pub fn humphries_twists(&self) -> Vec<Twist> {
        let mut t: Vec<Twist> = (1..=2 * self.genus).map(Twist::C).collect();
        if self.has_b() {
            t.push(Twist::B);
        }
        t
    }

    pub fn twist_class(&self, t: Twist) -> Result<&HomologyClass> {
        if let Twist::C(j) = t {
            if j == 0 || j > self.chain_len() {
                return Err(Error::OutOfRange(format!("twist index {j} outside 1..={}", self.chain_len())));
            }
        }
        self.curve(t.curve())
    }

    /// `Sp(T^exponent)` for a Humphries twist.
    pub fn twist_matrix(&self, t: Twist, exponent: i64) -> Result<IntMatrix> {
        self.form.transvection_power_matrix(self.twist_class(t)?, -exponent)
    }

    pub fn twist_apply(&self, t: Twist, exponent: i64, v: &HomologyClass) -> Result<HomologyClass> {
        self.form.transvection_power_apply(v, self.twist_class(t)?, -exponent)
    }

    pub fn boundary_class(&self) -> Option<&HomologyClass> {
        self.curves.get(&CurveName::Boundary(1))
    }

    pub fn x(&self, i: usize) -> HomologyClass {
        HomologyClass::x(self.rank(), i)
    }

    pub fn y(&self, i: usize) -> HomologyClass {
        HomologyClass::y(self.rank(), i)
    }

    /// Recheck the full constraint system on the stored table.
    pub fn check_constraints(&self) -> Result<()> {
        let f = &self.form;
        let bad = |msg: String| Err(Error::InvalidInput(format!("curve table violates {msg}")));
        let top = self.chain_len() + 1;
        for i in 1..=top {
            for j in i + 1..=top {
                let p = f.pairing(self.curve(CurveName::C(i))?, self.curve(CurveName::C(j))?)?;
                let want = i64::from(j == i + 1);
                if p != want {
                    return bad(format!("iota(c{i}, c{j}) = {p}"));
                }
            }
        }
        if let Ok(b) = self.curve(CurveName::B) {
            for j in 1..=top {
                let p = f.pairing(b, self.curve(CurveName::C(j))?)?;
                if p != i64::from(j == 4) {
                    return bad(format!("iota(b, c{j}) = {p}"));
                }
            }
            let beta = self.curve(CurveName::Beta)?;
            if *beta != b + self.curve(CurveName::C(4))? {
                return bad("beta = b + c4".into());
            }
        }
        if let Some(d1) = self.boundary_class() {
            let odd_sum = (1..=self.chain_len())
                .step_by(2)
                .try_fold(HomologyClass::zero(self.rank()), |acc, j| {
                    acc.checked_add(self.curve(CurveName::C(j))?)
                })?;
            if odd_sum != *d1 || d1.is_zero() {
                return bad("odd chain sum = d1".into());
            }
            if !(d1 + self.curve(CurveName::Boundary(2))?).is_zero() {
                return bad("d1 + d2 = 0".into());
            }
        }
        for (name, class) in &self.curves {
            if !class.is_primitive() {
                return bad(format!("primitivity of {name}"));
            }
        }
        Ok(())
    }
}

fn handles(genus: usize, boundary_count: usize) -> usize {
    if boundary_count == 2 {
        genus + 1
    } else {
        genus
    }
}

/// Closed-form solution of the curve constraint system (see module docs).
pub fn solve_curve_table(genus: usize, boundary_count: usize) -> Result<BTreeMap<CurveName, HomologyClass>> {
    if genus == 0 {
        return Err(Error::OutOfRange("genus must be at least 1".into()));
    }
    if !(1..=2).contains(&boundary_count) {
        return Err(Error::OutOfRange(format!("boundary count {boundary_count} not in {{1, 2}}")));
    }
    let n = handles(genus, boundary_count);
    let rank = 2 * n;
    let x = |i| HomologyClass::x(rank, i);
    let y = |i| HomologyClass::y(rank, i);
    let mut t = BTreeMap::new();
    t.insert(CurveName::C(1), y(1));
    for i in 1..=n {
        t.insert(CurveName::C(2 * i), -&x(i));
        if i < n {
            t.insert(CurveName::C(2 * i + 1), &y(i + 1) - &y(i));
        }
    }
    if boundary_count == 1 {
        t.insert(CurveName::C(2 * genus + 1), -&y(genus));
    } else {
        t.insert(CurveName::Boundary(1), y(n));
        t.insert(CurveName::Boundary(2), -&y(n));
    }
    if genus >= 2 {
        t.insert(CurveName::B, y(2));
        t.insert(CurveName::Beta, &y(2) - &x(2));
    }
    if genus >= 3 {
        t.insert(CurveName::Gamma3, &y(3) - &y(1));
    }
    Ok(t)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum SubsurfaceKind {
    R,
    S,
    W,
    Y,
    X,
}

impl FromStr for SubsurfaceKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().trim_end_matches("_I").trim_end_matches("_i") {
            "R" => Ok(SubsurfaceKind::R),
            "S" => Ok(SubsurfaceKind::S),
            "W" => Ok(SubsurfaceKind::W),
            "Y" => Ok(SubsurfaceKind::Y),
            "X" => Ok(SubsurfaceKind::X),
            _ => Err(Error::InvalidInput(format!("unknown subsurface kind {s:?}"))),
        }
    }
}

/// An index-set subsurface of `S`. Handle `g+1` is the one carrying `∂_1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct SubsurfaceDescriptor {
    pub kind: SubsurfaceKind,
    pub index_set: Vec<usize>,
    pub support_handles: Vec<usize>,
}

impl SubsurfaceDescriptor {
    /// Genus and number of boundary components of a `W_I`.
    pub fn w_topology(&self, genus: usize) -> Option<(usize, usize)> {
        if self.kind != SubsurfaceKind::W {
            return None;
        }
        let k = self.index_set.len();
        Some(if self.index_set.contains(&(genus + 1)) { (k - 1, 2) } else { (k, 1) })
    }
}

pub fn enumerate_subsurfaces(kind: SubsurfaceKind, genus: usize, m: usize) -> Result<Vec<SubsurfaceDescriptor>> {
    let top = genus + 1;
    let limit = if kind == SubsurfaceKind::W { top } else { genus };
    if m > limit {
        return Err(Error::OutOfRange(format!("size {m} exceeds {limit} for {kind:?}")));
    }
    if matches!(kind, SubsurfaceKind::R | SubsurfaceKind::Y) && m != 1 {
        return Err(Error::OutOfRange(format!("{kind:?} is indexed by a single handle")));
    }
    let out = (1..=limit)
        .combinations(m)
        .map(|set| {
            let support = match kind {
                SubsurfaceKind::R | SubsurfaceKind::W => set.clone(),
                SubsurfaceKind::S | SubsurfaceKind::X => {
                    set.iter().copied().chain(std::iter::once(top)).collect()
                }
                SubsurfaceKind::Y => (1..=top).filter(|i| !set.contains(i)).collect(),
            };
            SubsurfaceDescriptor { kind, index_set: set, support_handles: support }
        })
        .collect();
    Ok(out)
}

/// Whether every Humphries curve `c_1..c_{2g+1}`, `b` of the two-boundary
/// model has its handle support inside some `W_J` with `|J| = m`.
pub fn generator_support_cover(genus: usize, m: usize) -> Result<bool> {
    if m < 2 {
        return Err(Error::OutOfRange(format!("cover size m = {m} must be at least 2")));
    }
    if genus < 2 {
        return Err(Error::OutOfRange("cover check needs genus >= 2".into()));
    }
    Ok(support_cover_unchecked(genus, m))
}

pub(crate) fn support_cover_unchecked(genus: usize, m: usize) -> bool {
    let Ok(model) = SurfaceModel::build(genus, 2) else {
        return false;
    };
    let Ok(ws) = enumerate_subsurfaces(SubsurfaceKind::W, genus, m.min(genus + 1)) else {
        return false;
    };
    let mut curves: Vec<CurveName> = (1..=2 * genus + 1).map(CurveName::C).collect();
    curves.push(CurveName::B);
    curves.iter().all(|&name| {
        let support = model.curves[&name].support_handles();
        ws.iter().any(|w| support.iter().all(|h| w.index_set.contains(h)))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranks() {
        assert_eq!(SurfaceModel::build(3, 2).unwrap().rank(), 8);
        assert_eq!(SurfaceModel::build(3, 1).unwrap().rank(), 6);
        assert!(SurfaceModel::build(0, 2).is_err());
        assert!(SurfaceModel::build(3, 3).is_err());
    }

    #[test]
    fn table_satisfies_constraints_up_to_genus_six() {
        for g in 1..=6 {
            for n in 1..=2 {
                SurfaceModel::build(g, n).unwrap().check_constraints().unwrap();
            }
        }
    }

    #[test]
    fn named_classes() {
        let m = SurfaceModel::build(3, 2).unwrap();
        assert_eq!(m.curve(CurveName::C(1)).unwrap(), &m.y(1));
        assert_eq!(m.boundary_class().unwrap(), &m.y(4));
        let beta = m.curve(CurveName::B).unwrap() + m.curve(CurveName::C(4)).unwrap();
        assert_eq!(m.curve(CurveName::Beta).unwrap(), &beta);
        let d = m.curve(CurveName::Boundary(1)).unwrap() + m.curve(CurveName::Boundary(2)).unwrap();
        assert!(d.is_zero());
        let f = m.form();
        for j in 1..m.chain_len() {
            let p = f.pairing(m.curve(CurveName::C(j)).unwrap(), m.curve(CurveName::C(j + 1)).unwrap());
            assert_eq!(p.unwrap(), 1);
        }
    }

    #[test]
    fn transvection_anchor_curve() {
        for g in 3..=6 {
            let m = SurfaceModel::build(g, 2).unwrap();
            let c = m.curve(CurveName::C(2 * g - 1)).unwrap();
            assert_eq!(*c, &m.y(g) - &m.y(g - 1));
            let image = m.form().transvection_apply(&m.x(g), c).unwrap();
            assert_eq!(image, &(&m.x(g) + &m.y(g)) - &m.y(g - 1));
            assert_eq!(m.twist_apply(Twist::C(2 * g - 1), -1, &m.x(g)).unwrap(), image);
        }
    }

    #[test]
    fn twist_matrices_are_symplectic() {
        let m = SurfaceModel::build(3, 2).unwrap();
        for t in m.twists() {
            let a = m.twist_matrix(t, 1).unwrap();
            assert!(m.form().sp_membership(&a).unwrap());
            let b = m.twist_matrix(t, -1).unwrap();
            assert_eq!(a.mul(&b).unwrap(), IntMatrix::identity(m.rank()));
        }
        assert!(m.twist_matrix(Twist::C(8), 1).is_err());
    }

    #[test]
    fn twist_parsing() {
        assert_eq!("3".parse::<Twist>().unwrap(), Twist::C(3));
        assert_eq!("b".parse::<Twist>().unwrap(), Twist::B);
        assert_eq!("c5".parse::<Twist>().unwrap(), Twist::C(5));
        assert!("0".parse::<Twist>().is_err());
        assert!("z".parse::<Twist>().is_err());
    }

    #[test]
    fn subsurface_counts() {
        assert_eq!(enumerate_subsurfaces(SubsurfaceKind::S, 3, 3).unwrap().len(), 1);
        assert_eq!(enumerate_subsurfaces(SubsurfaceKind::S, 5, 3).unwrap().len(), 10);
        assert_eq!(enumerate_subsurfaces(SubsurfaceKind::W, 3, 2).unwrap().len(), 6);
        assert_eq!(enumerate_subsurfaces(SubsurfaceKind::X, 6, 3).unwrap().len(), 20);
        assert_eq!(enumerate_subsurfaces(SubsurfaceKind::R, 4, 1).unwrap().len(), 4);
        assert!(enumerate_subsurfaces(SubsurfaceKind::S, 3, 4).is_err());
        for s in enumerate_subsurfaces(SubsurfaceKind::S, 4, 2).unwrap() {
            assert!(!s.index_set.contains(&5));
            assert!(s.support_handles.contains(&5));
        }
        let y = enumerate_subsurfaces(SubsurfaceKind::Y, 3, 1).unwrap();
        assert_eq!(y[0].support_handles, vec![2, 3, 4]);
    }

    #[test]
    fn w_topology_with_boundary_handle() {
        for w in enumerate_subsurfaces(SubsurfaceKind::W, 3, 2).unwrap() {
            let (genus, boundaries) = w.w_topology(3).unwrap();
            if w.index_set.contains(&4) {
                assert_eq!((genus, boundaries), (1, 2));
            } else {
                assert_eq!((genus, boundaries), (2, 1));
            }
        }
    }

    #[test]
    fn support_cover() {
        assert!(generator_support_cover(3, 2).unwrap());
        assert!(generator_support_cover(5, 2).unwrap());
        assert!(!support_cover_unchecked(3, 1));
        assert!(generator_support_cover(3, 1).is_err());
    }
}
