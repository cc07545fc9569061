//! Structured checks shared by the command line and the acceptance suite.

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::Serialize;

use crate::chain::{
    commutes_with_twist, conjugate_by_twist, enumerate_generators, relation_k_range, relation_words,
    ChainNotation, RelationName,
};
use crate::error::Result;
use crate::sigma::{act_bool, binomial, bool_rank, sigma_notation, sigma_word, w_membership, BoolPoly};
use crate::span::{
    d_min_search, disjointness_graph, is_connected, orbit_closure_for_size, span_dim_f2, span_dim_q,
    wedge3_vz_dim, OrbitClosure,
};
use crate::surface::{generator_support_cover, CurveName, SurfaceModel};
use crate::symplectic::{HomologyClass, IntersectionForm};
use crate::tau::{act_wedge3, sp_action_wedge3, tau_notation, tau_word, wedge, Wedge3Vec};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Pass,
    Fail,
    ReportOnly,
}

impl Verdict {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }

    /// Combine verdicts: any failure fails, otherwise any pass passes.
    pub fn all(vs: impl IntoIterator<Item = Verdict>) -> Self {
        vs.into_iter().fold(Verdict::ReportOnly, |acc, v| match (acc, v) {
            (Verdict::Fail, _) | (_, Verdict::Fail) => Verdict::Fail,
            (Verdict::Pass, _) | (_, Verdict::Pass) => Verdict::Pass,
            _ => Verdict::ReportOnly,
        })
    }

    pub fn label(self) -> &'static str {
        match self {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
            Verdict::ReportOnly => "REPORT",
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct RelationCheck {
    pub relation: String,
    pub genus: usize,
    pub k: usize,
    pub lhs: Vec<String>,
    pub rhs: Vec<String>,
    pub tau_difference: Vec<(String, String, String, i64)>,
    pub sigma_difference: Vec<Vec<String>>,
    pub tau_vanishes: bool,
    pub sigma_vanishes: bool,
}

impl RelationCheck {
    pub fn holds(&self) -> bool {
        self.tau_vanishes && self.sigma_vanishes
    }
}

pub fn verify_relation(name: RelationName, k: usize, model: &SurfaceModel) -> Result<RelationCheck> {
    let (lhs, rhs) = relation_words(name, k, model)?;
    let td = tau_word(&lhs, model)?.checked_sub(&tau_word(&rhs, model)?)?;
    let sd = sigma_word(&lhs, model)?.add(&sigma_word(&rhs, model)?)?;
    Ok(RelationCheck {
        relation: name.to_string(),
        genus: model.genus(),
        k,
        lhs: lhs.labels(),
        rhs: rhs.labels(),
        tau_vanishes: td.is_zero(),
        sigma_vanishes: sd.is_zero(),
        tau_difference: td.labeled_triples(),
        sigma_difference: sd.labeled_monomials(),
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct RankCheck {
    pub genus: usize,
    pub boundaries: usize,
    pub generators: usize,
    pub tau_rank: usize,
    pub tau_expected: usize,
    pub sigma_rank: usize,
    pub sigma_expected: usize,
}

impl RankCheck {
    pub fn holds(&self) -> bool {
        self.tau_rank == self.tau_expected && self.sigma_rank == self.sigma_expected
    }
}

/// Lattice dimension of `V_Z` (`2g+1`) or of `H_1(Σ_{g,1})` (`2g`).
pub fn image_dimension(model: &SurfaceModel) -> usize {
    if model.boundary_count() == 2 {
        2 * model.genus() + 1
    } else {
        2 * model.genus()
    }
}

pub fn generator_images(model: &SurfaceModel) -> Result<Vec<(ChainNotation, Wedge3Vec, BoolPoly)>> {
    enumerate_generators(model)?
        .into_iter()
        .map(|n| {
            let t = tau_notation(&n, model)?;
            let s = sigma_notation(&n, model)?;
            Ok((n, t, s))
        })
        .collect()
}

pub fn rank_check(model: &SurfaceModel) -> Result<RankCheck> {
    let images = generator_images(model)?;
    let taus: Vec<Wedge3Vec> = images.iter().map(|(_, t, _)| t.clone()).collect();
    let sigmas: Vec<BoolPoly> = images.iter().map(|(_, _, s)| s.clone()).collect();
    let d = image_dimension(model);
    Ok(RankCheck {
        genus: model.genus(),
        boundaries: model.boundary_count(),
        generators: images.len(),
        tau_rank: span_dim_q(&taus),
        tau_expected: binomial(d, 3) as usize,
        sigma_rank: span_dim_f2(&sigmas),
        sigma_expected: bool_rank(d, 3) as usize,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct SoundnessCheck {
    pub genus: usize,
    pub generators: usize,
    pub rewrites: usize,
    pub commuting: usize,
    pub no_rule: usize,
    pub failures: Vec<String>,
}

/// `τ(T^s * n) = Sp(T^s)·τ(n)` and the σ analogue for every applicable rule.
pub fn rewrite_soundness(model: &SurfaceModel) -> Result<SoundnessCheck> {
    let form = model.form();
    let images = generator_images(model)?;
    let mut out = SoundnessCheck {
        genus: model.genus(),
        generators: images.len(),
        rewrites: 0,
        commuting: 0,
        no_rule: 0,
        failures: Vec::new(),
    };
    for (n, t, s) in &images {
        for tw in model.twists() {
            for sign in [1, -1] {
                let Ok((_, word)) = conjugate_by_twist(tw, sign, n, model) else {
                    out.no_rule += 1;
                    continue;
                };
                let mat = model.twist_matrix(tw, sign)?;
                out.rewrites += 1;
                if tau_word(&word, model)? != act_wedge3(&mat, t)? {
                    out.failures.push(format!("tau: {tw}^{sign} * {n} -> {word}"));
                }
                if sigma_word(&word, model)? != act_bool(form, &mat, s)? {
                    out.failures.push(format!("sigma: {tw}^{sign} * {n} -> {word}"));
                }
            }
            if commutes_with_twist(tw, n) {
                out.commuting += 1;
                if act_wedge3(&model.twist_matrix(tw, 1)?, t)? != *t {
                    out.failures.push(format!("commuting {tw} moves tau({n})"));
                }
            }
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, Serialize)]
pub struct GeneratorCensus {
    pub genus: usize,
    pub straight: usize,
    pub beta: usize,
    pub total: usize,
    pub nontrivial: usize,
    pub claimed: u64,
    pub rank_lower_bound: u64,
    pub convention: &'static str,
}

pub fn generator_census(model: &SurfaceModel) -> Result<GeneratorCensus> {
    let gens = enumerate_generators(model)?;
    let beta = gens.iter().filter(|n| n.is_beta()).count();
    let nontrivial = gens.iter().filter(|n| n.curve_count() > 1).count();
    Ok(GeneratorCensus {
        genus: model.genus(),
        straight: gens.len() - beta,
        beta,
        total: gens.len(),
        nontrivial,
        claimed: 85 * binomial(model.genus(), 3),
        rank_lower_bound: bool_rank(image_dimension(model), 3),
        convention: "even-size index subsets of 1..=2g+2 plus odd-size subsets of 5..=2g+2 after beta; \
                     single-curve chains included",
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct GraphCheck {
    pub model: &'static str,
    pub genus: usize,
    pub m: usize,
    pub vertices: usize,
    pub edges: usize,
    pub class_without_boundary_handle: usize,
    pub class_with_boundary_handle: usize,
    pub connected: bool,
    pub nontrivial: bool,
    pub bound_applies: bool,
}

impl GraphCheck {
    /// Pass/fail only where `2m+1 ≤ g`; otherwise the result is reported.
    pub fn verdict(&self) -> Verdict {
        if self.bound_applies {
            Verdict::from_bool(self.connected)
        } else {
            Verdict::ReportOnly
        }
    }
}

pub fn graph_check(genus: usize, m: usize) -> Result<GraphCheck> {
    let g = disjointness_graph(genus, m)?;
    let (without, with) = g.class_sizes(genus);
    Ok(GraphCheck {
        model: "finite disjointness graph on handle index sets",
        genus,
        m,
        vertices: g.vertices.len(),
        edges: g.edges.len(),
        class_without_boundary_handle: without,
        class_with_boundary_handle: with,
        connected: is_connected(&g),
        nontrivial: g.is_nontrivial(),
        bound_applies: 2 * m < genus,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct DminCheck {
    pub genus: usize,
    pub target_dim: usize,
    pub by_seed_size: Vec<(usize, OrbitClosure)>,
    pub d_min: usize,
}

pub fn dmin_check(genus: usize) -> Result<DminCheck> {
    let by_seed_size = (1..=2)
        .map(|d| Ok((d, orbit_closure_for_size(genus, d)?)))
        .collect::<Result<Vec<_>>>()?;
    Ok(DminCheck { genus, target_dim: wedge3_vz_dim(genus), by_seed_size, d_min: d_min_search(genus)? })
}

/// One line of the acceptance suite.
#[derive(Clone, Debug, Serialize)]
pub struct Criterion {
    pub id: usize,
    pub title: &'static str,
    pub verdict: Verdict,
    pub detail: String,
}

fn criterion(id: usize, title: &'static str, verdict: Verdict, detail: String) -> Criterion {
    Criterion { id, title, verdict, detail }
}

fn guard(id: usize, title: &'static str, r: Result<Criterion>) -> Criterion {
    r.unwrap_or_else(|e| criterion(id, title, Verdict::Fail, format!("error: {e}")))
}

/// Genus ranges for a suite run: the stated ones, or a single genus.
#[derive(Clone, Debug)]
pub struct SuiteScope {
    pub symplectic: Vec<usize>,
    pub chains: Vec<usize>,
    pub rewrites: Vec<usize>,
    pub relations: Vec<usize>,
    pub ranks: Vec<usize>,
    pub dmin: Vec<usize>,
    pub graph_max: usize,
    pub census: usize,
    pub cover: Vec<usize>,
}

impl SuiteScope {
    pub fn full() -> Self {
        SuiteScope {
            symplectic: (1..=5).collect(),
            chains: (3..=5).collect(),
            rewrites: vec![3, 4],
            relations: (3..=5).collect(),
            ranks: vec![3, 4],
            dmin: vec![3, 4],
            graph_max: 9,
            census: 3,
            cover: (3..=6).collect(),
        }
    }

    pub fn at_genus(g: usize) -> Self {
        SuiteScope {
            symplectic: vec![g],
            chains: vec![g],
            rewrites: vec![g],
            relations: vec![g],
            ranks: vec![g],
            dmin: vec![g],
            graph_max: g,
            census: g,
            cover: vec![g],
        }
    }
}

pub fn acceptance_suite(scope: &SuiteScope) -> Vec<Criterion> {
    vec![
        guard(1, "symplectic suite", c1_symplectic(&scope.symplectic)),
        guard(2, "transvection anchor", c2_anchor(&scope.chains)),
        guard(3, "chain calculus", c3_chains(&scope.chains)),
        guard(4, "rewrite soundness", c4_rewrites(&scope.rewrites)),
        guard(5, "relations J1-J3 and lantern", c5_relations(&scope.relations)),
        guard(6, "abelianization ranks", c6_ranks(&scope.ranks)),
        guard(7, "W-compatibility", c7_w(&scope.ranks)),
        guard(8, "d_G(V) = 2", c8_dmin(&scope.dmin)),
        guard(9, "disjointness graph", c9_graph(scope.graph_max)),
        guard(10, "generator count", c10_census(scope.census)),
        guard(11, "degree-2 generation", c11_cover(&scope.cover)),
    ]
}

fn c1_symplectic(genera: &[usize]) -> Result<Criterion> {
    let mut rng = StdRng::seed_from_u64(0x5eed);
    let mut bad = 0;
    for trial in 0..1000 {
        let g = genera[trial % genera.len()];
        let form = IntersectionForm::standard(g);
        let mut draw = || HomologyClass::new((0..2 * g).map(|_| rng.gen_range(-50..=50)).collect());
        let (u, v) = (draw(), draw());
        if form.pairing(&u, &v)? != -form.pairing(&v, &u)? || form.pairing(&u, &u)? != 0 {
            bad += 1;
        }
        if !u.is_zero() {
            let m = form.transvection_matrix(&u)?;
            if !form.sp_membership(&m)? || m.apply(&v)? != form.transvection_apply(&v, &u)? {
                bad += 1;
            }
        }
    }
    Ok(criterion(1, "symplectic suite", Verdict::from_bool(bad == 0), format!("1000 random trials, {bad} failures")))
}

fn c2_anchor(genera: &[usize]) -> Result<Criterion> {
    let mut notes = Vec::new();
    let mut vector_ok = true;
    let mut wedge_ok = true;
    for &g in genera {
        let m = SurfaceModel::build(g, 2)?;
        let c = &m.y(g) - &m.y(g - 1);
        let mat = m.form().transvection_matrix(&c)?;
        vector_ok &= mat.apply(&m.x(g))? == &(&m.x(g) + &m.y(g)) - &m.y(g - 1);
        let t = wedge(&m.x(g), &m.y(g), &m.y(g + 1))?;
        let extra = wedge(&m.y(g - 1), &m.y(g), &m.y(g + 1))?;
        let got = sp_action_wedge3(m.form(), &mat, &t)?;
        let stated = t.checked_add(&extra)?;
        if got != stated {
            wedge_ok = false;
            let sign = if got == t.checked_sub(&extra)? { "-" } else { "?" };
            notes.push(format!("g={g}: image has {sign}y{}^y{g}^y{}", g - 1, g + 1));
        }
    }
    let detail = format!(
        "x_g -> x_g+y_g-y_(g-1): {}; wedge image with +y_(g-1)^y_g^y_(g+1): {}{}",
        if vector_ok { "ok" } else { "wrong" },
        if wedge_ok { "ok" } else { "mismatch" },
        if notes.is_empty() { String::new() } else { format!(" ({})", notes.join(", ")) }
    );
    Ok(criterion(2, "transvection anchor", Verdict::from_bool(vector_ok && wedge_ok), detail))
}

fn c3_chains(genera: &[usize]) -> Result<Criterion> {
    let m3 = SurfaceModel::build(3, 2)?;
    let c = |j| m3.curve(CurveName::C(j)).cloned();
    let v = "1346".parse::<ChainNotation>()?.expand(&m3)?;
    let mut ok = v.curves == vec![&c(1)? + &c(2)?, c(3)?, &c(4)? + &c(5)?];
    let mut checked = 0;
    for &g in genera {
        let m = SurfaceModel::build(g, 2)?;
        for n in enumerate_generators(&m)? {
            let e = n.expand(&m)?;
            for curve in &e.curves {
                ok &= m.form().pairing(&e.boundary_class, curve)? == 0;
            }
            checked += 1;
        }
    }
    Ok(criterion(3, "chain calculus", Verdict::from_bool(ok), format!("(1346) expansion and {checked} boundary classes")))
}

fn c4_rewrites(genera: &[usize]) -> Result<Criterion> {
    let mut ok = true;
    let mut parts = Vec::new();
    for &g in genera {
        let r = rewrite_soundness(&SurfaceModel::build(g, 2)?)?;
        ok &= r.failures.is_empty();
        parts.push(format!("g={g}: {} rewrites, {} failures", r.rewrites, r.failures.len()));
    }
    Ok(criterion(4, "rewrite soundness", Verdict::from_bool(ok), parts.join("; ")))
}

fn c5_relations(genera: &[usize]) -> Result<Criterion> {
    let mut failed = Vec::new();
    let mut total = 0;
    let mut full_ok = true;
    for &g in genera {
        let m = SurfaceModel::build(g, 2)?;
        for name in [RelationName::J1, RelationName::J2, RelationName::J3] {
            for k in 3..=g {
                total += 1;
                if !verify_relation(name, k, &m)?.holds() {
                    failed.push(format!("{name}(g={g},k={k})"));
                }
            }
        }
        for k in relation_k_range(RelationName::J1Full, &m) {
            full_ok &= verify_relation(RelationName::J1Full, k, &m)?.holds();
        }
        let lantern = verify_relation(RelationName::Lantern, 0, &m)?;
        let (lhs, _) = relation_words(RelationName::Lantern, 0, &m)?;
        total += 1;
        if !lantern.holds() || !tau_word(&lhs, &m)?.is_zero() {
            failed.push(format!("lantern(g={g})"));
        }
    }
    let detail = format!(
        "{}/{total} vanish under tau and sigma{}; J1 with [67..2k+1] restored: {}",
        total - failed.len(),
        if failed.is_empty() { String::new() } else { format!("; failing: {}", failed.join(" ")) },
        if full_ok { "all vanish" } else { "FAILS" }
    );
    Ok(criterion(5, "relations J1-J3 and lantern", Verdict::from_bool(failed.is_empty()), detail))
}

fn c6_ranks(genera: &[usize]) -> Result<Criterion> {
    let mut ok = true;
    let mut parts = Vec::new();
    for &g in genera {
        let r = rank_check(&SurfaceModel::build(g, 2)?)?;
        ok &= r.holds();
        parts.push(format!("g={g}: tau {}/{} sigma {}/{}", r.tau_rank, r.tau_expected, r.sigma_rank, r.sigma_expected));
    }
    let one = rank_check(&SurfaceModel::build(3, 1)?)?;
    ok &= one.holds() && one.sigma_rank == 42;
    parts.push(format!("one boundary g=3: tau {}/{} sigma {}/42", one.tau_rank, one.tau_expected, one.sigma_rank));
    Ok(criterion(6, "abelianization ranks", Verdict::from_bool(ok), parts.join("; ")))
}

fn c7_w(genera: &[usize]) -> Result<Criterion> {
    let mut bad = 0;
    let mut count = 0;
    for &g in genera {
        for (_, t, s) in generator_images(&SurfaceModel::build(g, 2)?)? {
            count += 1;
            bad += usize::from(!w_membership(&t, &s));
        }
    }
    Ok(criterion(7, "W-compatibility", Verdict::from_bool(bad == 0), format!("{count} generators, {bad} outside W")))
}

fn c8_dmin(genera: &[usize]) -> Result<Criterion> {
    let mut ok = true;
    let mut parts = Vec::new();
    for &g in genera {
        let d = dmin_check(g)?;
        let one = d.by_seed_size[0].1.final_dim;
        let two = d.by_seed_size[1].1.final_dim;
        ok &= two == d.target_dim && one < d.target_dim && d.d_min == 2;
        parts.push(format!("g={g}: |I|=1 -> {one}, |I|=2 -> {two} of {}", d.target_dim));
    }
    Ok(criterion(8, "d_G(V) = 2", Verdict::from_bool(ok), parts.join("; ")))
}

fn c9_graph(max_genus: usize) -> Result<Criterion> {
    let mut checked = 0;
    let mut bad = Vec::new();
    for g in 1..=max_genus {
        for m in (1..).take_while(|m| 2 * m < g) {
            checked += 1;
            if !graph_check(g, m)?.connected {
                bad.push(format!("(g={g},m={m})"));
            }
        }
    }
    let detail = format!("{checked} pairs with 2m+1 <= g, {} disconnected {}", bad.len(), bad.join(" "));
    Ok(criterion(9, "disjointness graph", Verdict::from_bool(bad.is_empty()), detail.trim_end().to_string()))
}

fn c10_census(genus: usize) -> Result<Criterion> {
    let c = generator_census(&SurfaceModel::build(genus, 2)?)?;
    let detail = format!(
        "g={genus}: {} generators ({} straight + {} beta, {} with more than one curve) vs claimed {}; lower bound {}",
        c.total, c.straight, c.beta, c.nontrivial, c.claimed, c.rank_lower_bound
    );
    let verdict = if c.total as u64 >= c.rank_lower_bound { Verdict::ReportOnly } else { Verdict::Fail };
    Ok(criterion(10, "generator count", verdict, detail))
}

fn c11_cover(genera: &[usize]) -> Result<Criterion> {
    let mut ok = true;
    for &g in genera {
        ok &= generator_support_cover(g, 2)?;
    }
    Ok(criterion(11, "degree-2 generation", Verdict::from_bool(ok), format!("support cover with m=2 at g in {genera:?}")))
}
