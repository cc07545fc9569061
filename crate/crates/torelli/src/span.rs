//! Span dimensions over Q and F2, orbit closures in `⋀³V_Z`, and the
//! disjointness graph on handle index sets.

use std::collections::{BTreeMap, BTreeSet};

use itertools::Itertools;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use petgraph::graph::UnGraph;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg;
use crate::sigma::{binomial, BoolPoly};
use crate::surface::{enumerate_subsurfaces, SubsurfaceDescriptor, SubsurfaceKind, SurfaceModel};
use crate::symplectic::{IntMatrix, IntersectionForm};
use crate::tau::{act_wedge3, wedge, Wedge3Vec};

/// Rank over Q of a family of `⋀³` vectors.
pub fn span_dim_q(vectors: &[Wedge3Vec]) -> usize {
    let keys: BTreeSet<[usize; 3]> = vectors.iter().flat_map(|v| v.coeffs().keys().copied()).collect();
    let col: BTreeMap<[usize; 3], usize> = keys.iter().enumerate().map(|(i, k)| (*k, i)).collect();
    let rows: Vec<Vec<i64>> = vectors
        .iter()
        .map(|v| {
            let mut row = vec![0; col.len()];
            for (k, &c) in v.coeffs() {
                row[col[k]] = c;
            }
            row
        })
        .collect();
    linalg::rank_q(&rows)
}

/// Rank over F2 of a family of Boolean polynomials, by bitset elimination.
pub fn span_dim_f2(polys: &[BoolPoly]) -> usize {
    let keys: BTreeSet<u64> = polys.iter().flat_map(|p| p.monomials().iter().copied()).collect();
    let col: BTreeMap<u64, usize> = keys.iter().enumerate().map(|(i, k)| (*k, i)).collect();
    let words = col.len().div_ceil(64).max(1);
    let mut rows: Vec<Vec<u64>> = polys
        .iter()
        .map(|p| {
            let mut row = vec![0u64; words];
            for m in p.monomials() {
                let c = col[m];
                row[c / 64] |= 1 << (c % 64);
            }
            row
        })
        .collect();
    let mut rank = 0;
    for c in 0..col.len() {
        let (w, bit) = (c / 64, 1u64 << (c % 64));
        let Some(p) = (rank..rows.len()).find(|&i| rows[i][w] & bit != 0) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != rank && row[w] & bit != 0 {
                row.iter_mut().zip(&pivot).for_each(|(a, b)| *a ^= b);
            }
        }
        rank += 1;
    }
    rank
}

/// Echelon basis over Q of a subspace of `⋀³`, kept fraction-free.
#[derive(Clone, Debug, Default)]
pub struct SubspaceBasisQ {
    rows: BTreeMap<[usize; 3], BTreeMap<[usize; 3], BigInt>>,
}

impl SubspaceBasisQ {
    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Pivot triples, in increasing order.
    pub fn pivots(&self) -> Vec<[usize; 3]> {
        self.rows.keys().copied().collect()
    }

    /// Add `v`; returns whether the dimension grew.
    pub fn insert(&mut self, v: &Wedge3Vec) -> bool {
        let mut r: BTreeMap<[usize; 3], BigInt> =
            v.coeffs().iter().map(|(k, &c)| (*k, BigInt::from(c))).collect();
        for (pivot, row) in &self.rows {
            let Some(a) = r.get(pivot).cloned() else { continue };
            let p = &row[pivot];
            for x in r.values_mut() {
                *x *= p;
            }
            for (k, c) in row {
                let e = r.entry(*k).or_insert_with(BigInt::zero);
                *e -= c * &a;
            }
            r.retain(|_, c| !c.is_zero());
            let g = r.values().fold(BigInt::zero(), |g, c| g.gcd(c));
            if !g.is_zero() {
                for x in r.values_mut() {
                    *x = &*x / &g;
                }
            }
        }
        let Some((&lead, c)) = r.iter().next() else {
            return false;
        };
        if c.is_negative() {
            r.values_mut().for_each(|x| *x = -&*x);
        }
        self.rows.insert(lead, r);
        true
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct OrbitClosure {
    pub final_dim: usize,
    pub rounds: usize,
}

/// Iterate `U ← U + Σ_M M·U` from the span of the seeds until stable.
pub fn orbit_closure_span(
    form: &IntersectionForm,
    seeds: &[Wedge3Vec],
    generators: &[IntMatrix],
    target_dim: usize,
) -> Result<OrbitClosure> {
    for m in generators {
        if !form.sp_membership(m)? {
            return Err(Error::NonSymplectic);
        }
    }
    let mut basis = SubspaceBasisQ::default();
    let mut spanning = Vec::new();
    for s in seeds {
        if basis.insert(s) {
            spanning.push(s.clone());
        }
    }
    let mut rounds = 0;
    loop {
        let start = basis.dim();
        let current = spanning.clone();
        for v in &current {
            for m in generators {
                let w = act_wedge3(m, v)?;
                if basis.insert(&w) {
                    spanning.push(w);
                }
            }
        }
        if basis.dim() == start {
            break;
        }
        rounds += 1;
        assert!(rounds <= target_dim.max(1), "orbit closure did not stabilise");
    }
    Ok(OrbitClosure { final_dim: basis.dim(), rounds })
}

/// `⋀³` of `span{x_i, y_i : i ∈ I, i ≤ g}`, plus `y_{g+1}` when `g+1 ∈ I`.
pub fn seed_subspace(model: &SurfaceModel, index_set: &[usize]) -> Result<Vec<Wedge3Vec>> {
    let g = model.genus();
    let mut vecs = Vec::new();
    for &i in index_set {
        if i <= g {
            vecs.push(model.x(i));
            vecs.push(model.y(i));
        } else if i == g + 1 {
            vecs.push(model.y(i));
        } else {
            return Err(Error::OutOfRange(format!("handle {i} beyond g+1 = {}", g + 1)));
        }
    }
    vecs.iter().tuple_combinations().map(|(a, b, c)| wedge(a, b, c)).collect()
}

/// `dim ⋀³V_Z = C(2g+1, 3)`.
pub fn wedge3_vz_dim(genus: usize) -> usize {
    binomial(2 * genus + 1, 3) as usize
}

/// Transvection matrices of `c_1..c_{2g}` and `b`.
pub fn humphries_matrices(model: &SurfaceModel) -> Result<Vec<IntMatrix>> {
    model
        .humphries_twists()
        .into_iter()
        .map(|t| model.form().transvection_matrix(model.twist_class(t)?))
        .collect()
}

/// Orbit closure of all seeds `V_I` with `|I| = d`.
pub fn orbit_closure_for_size(genus: usize, d: usize) -> Result<OrbitClosure> {
    let model = SurfaceModel::build(genus, 2)?;
    let mut seeds = Vec::new();
    for w in enumerate_subsurfaces(SubsurfaceKind::W, genus, d)? {
        seeds.extend(seed_subspace(&model, &w.index_set)?);
    }
    orbit_closure_span(model.form(), &seeds, &humphries_matrices(&model)?, wedge3_vz_dim(genus))
}

/// Least `d` whose `|I| = d` seeds generate all of `⋀³V_Z`.
pub fn d_min_search(genus: usize) -> Result<usize> {
    if genus < 3 {
        return Err(Error::OutOfRange(format!("d_min search needs genus >= 3, got {genus}")));
    }
    let target = wedge3_vz_dim(genus);
    for d in 1..=genus + 1 {
        if orbit_closure_for_size(genus, d)?.final_dim == target {
            return Ok(d);
        }
    }
    unreachable!("seeds with d = g+1 already span the space")
}

/// Finite disjointness graph: vertices are `m`-subsets of `{1..g+1}`.
#[derive(Clone, Debug, Serialize)]
pub struct GraphModel {
    pub vertices: Vec<SubsurfaceDescriptor>,
    pub edges: Vec<(usize, usize)>,
}

impl GraphModel {
    pub fn is_nontrivial(&self) -> bool {
        self.vertices.len() >= 2
    }

    /// Vertex counts of the classes without and with the handle `g+1`.
    pub fn class_sizes(&self, genus: usize) -> (usize, usize) {
        let with = self.vertices.iter().filter(|v| v.index_set.contains(&(genus + 1))).count();
        (self.vertices.len() - with, with)
    }
}

pub fn disjointness_graph(genus: usize, m: usize) -> Result<GraphModel> {
    if m == 0 || m > genus + 1 {
        return Err(Error::OutOfRange(format!("m = {m} outside 1..={}", genus + 1)));
    }
    let vertices = enumerate_subsurfaces(SubsurfaceKind::W, genus, m)?;
    let edges = (0..vertices.len())
        .tuple_combinations()
        .filter(|&(a, b)| vertices[a].index_set.iter().all(|i| !vertices[b].index_set.contains(i)))
        .collect();
    Ok(GraphModel { vertices, edges })
}

pub fn is_connected(graph: &GraphModel) -> bool {
    let n = graph.vertices.len();
    if n == 0 {
        return false;
    }
    let mut g = UnGraph::<(), ()>::with_capacity(n, graph.edges.len());
    for _ in 0..n {
        g.add_node(());
    }
    g.extend_with_edges(graph.edges.iter().map(|&(a, b)| (a as u32, b as u32)));
    petgraph::algo::connected_components(&g) == 1
}
