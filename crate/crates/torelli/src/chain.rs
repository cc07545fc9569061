//! Subchain notation, chain maps, the conjugation rewrite rules and the
//! relation words built from them.
//!
//! A notation `(i_1 … i_l)` stands for the chain whose curves are the block
//! sums `c_{i_j} + … + c_{i_{j+1}-1}`, so it has `l − 1` curves. In a β-chain
//! `[β i_1 … i_l]` the index `4` is implicit and `c_4` is replaced by `β` in
//! the first block, giving `l` curves. A primed `3'` marks the block
//! `c_3 + c_4 + c_5` replaced by `γ_3`; it must be followed by `6`.

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::surface::{CurveName, SurfaceModel, Twist};
use crate::symplectic::{HomologyClass, IntersectionForm};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ChainNotation {
    indices: Vec<usize>,
    beta_prefix: bool,
    gamma: bool,
}

impl ChainNotation {
    pub fn straight(indices: Vec<usize>) -> Result<Self> {
        Self::checked(indices, false, false)
    }

    pub fn beta(indices: Vec<usize>) -> Result<Self> {
        Self::checked(indices, true, false)
    }

    /// Straight notation with `3'` (the `γ_3` block).
    pub fn with_gamma(indices: Vec<usize>) -> Result<Self> {
        Self::checked(indices, false, true)
    }

    fn checked(indices: Vec<usize>, beta_prefix: bool, gamma: bool) -> Result<Self> {
        let n = ChainNotation { indices, beta_prefix, gamma };
        let bad = |m: &str| Err(Error::InvalidNotation(format!("{n}: {m}")));
        if n.indices.is_empty() || n.indices[0] == 0 {
            return bad("indices must be positive and nonempty");
        }
        if !n.indices.windows(2).all(|w| w[0] < w[1]) {
            return bad("indices must be strictly increasing");
        }
        if n.curve_count().is_multiple_of(2) {
            return bad("an odd number of curves is required");
        }
        if beta_prefix && n.indices[0] < 5 {
            return bad("indices after beta start at 5 or later");
        }
        if gamma {
            if beta_prefix {
                return bad("beta and 3' cannot be combined");
            }
            let pos = n.indices.iter().position(|&i| i == 3);
            if pos.and_then(|p| n.indices.get(p + 1)) != Some(&6) {
                return bad("3' must be followed by 6");
            }
        }
        Ok(n)
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn is_beta(&self) -> bool {
        self.beta_prefix
    }

    pub fn has_gamma(&self) -> bool {
        self.gamma
    }

    pub fn curve_count(&self) -> usize {
        if self.beta_prefix {
            self.indices.len()
        } else {
            self.indices.len() - 1
        }
    }

    /// Genus of the chain neighbourhood, `(curves − 1)/2`.
    pub fn genus_of_map(&self) -> usize {
        (self.curve_count() - 1) / 2
    }

    /// Indices of the underlying straight chain (`4` made explicit for β).
    pub fn index_set(&self) -> Vec<usize> {
        if self.beta_prefix {
            std::iter::once(4).chain(self.indices.iter().copied()).collect()
        } else {
            self.indices.clone()
        }
    }

    pub fn expand(&self, model: &SurfaceModel) -> Result<ChainMapValue> {
        expand_subchain(self, model)
    }
}

impl fmt::Display for ChainNotation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let wide = self.indices.iter().any(|&i| i >= 10);
        let sep = if wide { "," } else { "" };
        let body = self
            .indices
            .iter()
            .map(|&i| if self.gamma && i == 3 { "3'".to_string() } else { i.to_string() })
            .join(sep);
        if self.beta_prefix {
            write!(f, "[β{}{body}]", if wide { "," } else { "" })
        } else {
            write!(f, "[{body}]")
        }
    }
}

impl Serialize for ChainNotation {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl FromStr for ChainNotation {
    type Err = Error;

    /// Accepts `1346`, `[1346]`, `(1,3,4,6)`, `β56`, `b,5,6,7`, `23'67`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidNotation(format!("cannot parse {s:?}"));
        let mut body = s.trim().trim_start_matches(['[', '(']).trim_end_matches([']', ')']).trim();
        let mut beta = false;
        for prefix in ["beta", "β", "B", "b"] {
            if let Some(rest) = body.strip_prefix(prefix) {
                beta = true;
                body = rest.trim_start_matches([',', ' ']);
                break;
            }
        }
        let tokens: Vec<String> = if body.contains([',', ' ']) {
            body.split([',', ' ']).filter(|t| !t.is_empty()).map(str::to_string).collect()
        } else {
            let mut out: Vec<String> = Vec::new();
            for ch in body.chars() {
                match ch {
                    '\'' => out.last_mut().ok_or_else(bad)?.push(ch),
                    d if d.is_ascii_digit() => out.push(d.to_string()),
                    _ => return Err(bad()),
                }
            }
            out
        };
        let mut gamma = false;
        let mut indices = Vec::with_capacity(tokens.len());
        for t in &tokens {
            let (digits, primed) = match t.strip_suffix('\'') {
                Some(d) => (d, true),
                None => (t.as_str(), false),
            };
            let i: usize = digits.parse().map_err(|_| bad())?;
            if primed {
                if i != 3 || gamma {
                    return Err(Error::InvalidNotation(format!("only a single 3' is allowed in {s:?}")));
                }
                gamma = true;
            }
            indices.push(i);
        }
        Self::checked(indices, beta, gamma)
    }
}

/// The curves of an odd chain and the common class of its two boundary curves.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChainMapValue {
    pub curves: Vec<HomologyClass>,
    pub boundary_class: HomologyClass,
    pub genus: usize,
}

pub fn expand_subchain(n: &ChainNotation, model: &SurfaceModel) -> Result<ChainMapValue> {
    let bad = |m: String| Err(Error::InvalidNotation(format!("{n}: {m}")));
    let last = *n.indices.last().expect("nonempty");
    if last > model.max_index() {
        return bad(format!("index {last} exceeds {} for this model", model.max_index()));
    }
    if n.beta_prefix && !model.has_b() {
        return bad("the model has no curve b".into());
    }
    let idx = n.index_set();
    let mut curves = Vec::with_capacity(idx.len() - 1);
    for (k, w) in idx.windows(2).enumerate() {
        let (start, end) = (w[0], w[1]);
        let class = if n.gamma && start == 3 {
            model.curve(CurveName::Gamma3)?.clone()
        } else {
            let first = if n.beta_prefix && k == 0 { CurveName::Beta } else { CurveName::C(start) };
            (start + 1..end).try_fold(model.curve(first)?.clone(), |acc, j| {
                acc.checked_add(model.curve(CurveName::C(j))?)
            })?
        };
        curves.push(class);
    }
    let f = model.form();
    for i in 0..curves.len() {
        for j in i + 1..curves.len() {
            let want = i64::from(j == i + 1);
            if f.pairing(&curves[i], &curves[j])? != want {
                return bad(format!("curves {} and {} do not form a chain", i + 1, j + 1));
            }
        }
    }
    let boundary_class = boundary_class(&curves)?;
    Ok(ChainMapValue { genus: (curves.len() - 1) / 2, curves, boundary_class })
}

/// Sum of the odd-position curves of an odd chain.
pub fn boundary_class(curves: &[HomologyClass]) -> Result<HomologyClass> {
    if curves.len().is_multiple_of(2) {
        return Err(Error::InvalidInput(format!("chain of {} curves is not odd", curves.len())));
    }
    curves.iter().step_by(2).skip(1).try_fold(curves[0].clone(), |acc, c| acc.checked_add(c))
}

/// Homology class of the chain sum of two neighbours (`ι(a,b) = ±1`).
pub fn chain_sum(form: &IntersectionForm, a: &HomologyClass, b: &HomologyClass) -> Result<HomologyClass> {
    let p = form.pairing(a, b)?;
    if p.abs() != 1 {
        return Err(Error::InvalidInput(format!("classes pair to {p}, not chain neighbours")));
    }
    a.checked_add(b)
}

/// The commuting predicate of the rewrite rules.
///
/// For `c_j`: `j` and `j+1` both in, or both out of, the index set (for
/// β-chains `c_3`, `c_4` never commute). For `b`: no block contains `c_4`.
pub fn commutes_with_twist(t: Twist, n: &ChainNotation) -> bool {
    let idx = n.index_set();
    match t {
        Twist::C(j) if n.beta_prefix && (j == 3 || j == 4) => false,
        Twist::C(j) => idx.contains(&j) == idx.contains(&(j + 1)),
        Twist::B if n.beta_prefix => false,
        Twist::B => !(idx[0] <= 4 && 4 < *idx.last().expect("nonempty")),
    }
}

/// An explicitly given bounding-pair map or separating twist, for relations
/// whose curves are not chain maps of the fixed curve system.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExplicitMap {
    pub label: String,
    pub pairs: Vec<(HomologyClass, HomologyClass)>,
    /// Common class of the bounding pair; `None` for a separating twist.
    pub boundary_class: Option<HomologyClass>,
}

impl ExplicitMap {
    pub fn validate(&self, form: &IntersectionForm) -> Result<()> {
        let bad = |m: &str| Err(Error::InvalidInput(format!("{}: {m}", self.label)));
        for (i, (z1, w1)) in self.pairs.iter().enumerate() {
            for (j, (z2, w2)) in self.pairs.iter().enumerate() {
                if form.pairing(z1, w2)? != i64::from(i == j)
                    || form.pairing(z1, z2)? != 0
                    || form.pairing(w1, w2)? != 0
                {
                    return bad("pairs are not a symplectic basis");
                }
            }
            if let Some(c) = &self.boundary_class {
                if form.pairing(c, z1)? != 0 || form.pairing(c, w1)? != 0 {
                    return bad("boundary class is not orthogonal to the pairs");
                }
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Generator {
    Chain(ChainNotation),
    Explicit(ExplicitMap),
    Twist(Twist),
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::Chain(n) => write!(f, "{n}"),
            Generator::Explicit(m) => write!(f, "{}", m.label),
            Generator::Twist(t) => write!(f, "{t}"),
        }
    }
}

/// `f * g^e` with `f` the product of the conjugator twists, left to right.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Token {
    pub conjugator: Vec<(Twist, i64)>,
    pub generator: Generator,
    pub exponent: i64,
}

impl Token {
    pub fn chain(n: ChainNotation, exponent: i64) -> Self {
        Token { conjugator: Vec::new(), generator: Generator::Chain(n), exponent }
    }

    pub fn conjugated(mut self, t: Twist, e: i64) -> Self {
        self.conjugator.insert(0, (t, e));
        self
    }
}

impl fmt::Display for Token {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (t, e) in &self.conjugator {
            if *e == 1 {
                write!(f, "({t})*")?;
            } else {
                write!(f, "({t}^{e})*")?;
            }
        }
        write!(f, "{}", self.generator)?;
        if self.exponent != 1 {
            write!(f, "^{}", self.exponent)?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct GroupWord {
    pub tokens: Vec<Token>,
}

impl GroupWord {
    pub fn new(tokens: Vec<Token>) -> Result<Self> {
        if tokens.iter().any(|t| t.exponent == 0) {
            return Err(Error::InvalidInput("token with zero exponent".into()));
        }
        Ok(GroupWord { tokens })
    }

    fn chains(items: &[(&ChainNotation, i64)]) -> Self {
        GroupWord { tokens: items.iter().map(|(n, e)| Token::chain((*n).clone(), *e)).collect() }
    }

    pub fn labels(&self) -> Vec<String> {
        self.tokens.iter().map(ToString::to_string).collect()
    }
}

impl fmt::Display for GroupWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.tokens.is_empty() {
            return write!(f, "1");
        }
        write!(f, "{}", self.labels().join(" "))
    }
}

/// Which pattern produced a rewrite.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Rule {
    Commute,
    A1,
    A2,
    B1,
    B2,
}

/// One application of the conjugation rules to `T^sign * n`.
pub fn conjugate_by_twist(
    t: Twist,
    sign: i64,
    n: &ChainNotation,
    model: &SurfaceModel,
) -> Result<(Rule, GroupWord)> {
    if sign.abs() != 1 {
        return Err(Error::InvalidInput(format!("sign must be +1 or -1, got {sign}")));
    }
    model.twist_class(t)?;
    n.expand(model)?;
    let no_rule = |why: &str| Err(Error::NoRewriteRule(format!("{t}^{sign} * {n}: {why}")));
    if n.gamma {
        return no_rule("3' chains have no rewrite rules");
    }
    if commutes_with_twist(t, n) {
        return Ok((Rule::Commute, GroupWord::chains(&[(n, 1)])));
    }
    // `moved` is the image under the inverse-transvection move; `forward`
    // says whether T^sign itself realises it (rules A1/B1).
    let (moved, forward) = match t {
        Twist::B => {
            if n.beta_prefix {
                (ChainNotation::straight(n.index_set())?, sign == -1)
            } else if n.indices[0] == 4 {
                (ChainNotation::beta(n.indices[1..].to_vec())?, sign == 1)
            } else {
                return no_rule("b meets an interior block");
            }
        }
        Twist::C(j) => {
            if n.beta_prefix && (j == 3 || j == 4) {
                return no_rule("c3 and c4 meet the beta block");
            }
            let idx = n.index_set();
            let (from, to, fwd) = if idx.contains(&j) { (j, j + 1, sign == -1) } else { (j + 1, j, sign == 1) };
            let new_idx: Vec<usize> = idx.iter().map(|&i| if i == from { to } else { i }).collect();
            let m = if n.beta_prefix {
                ChainNotation::beta(new_idx[1..].to_vec())?
            } else {
                ChainNotation::straight(new_idx)?
            };
            (m, fwd)
        }
    };
    moved.expand(model)?;
    let a_case = match t {
        Twist::C(j) => n.index_set().contains(&j),
        Twist::B => n.beta_prefix,
    };
    let rule = match (a_case, forward) {
        (true, true) => Rule::A1,
        (true, false) => Rule::A2,
        (false, true) => Rule::B1,
        (false, false) => Rule::B2,
    };
    let word = if forward {
        GroupWord::chains(&[(&moved, 1)])
    } else {
        GroupWord::chains(&[(n, 1), (&moved, -1), (n, 1)])
    };
    Ok((rule, word))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum RelationName {
    J1,
    /// J1 with the factor `[67…2k+1]` restored on the left; it agrees with
    /// J1 at `k = 3`, where that factor is a single curve.
    J1Full,
    J2,
    J3,
    Lantern,
}

impl FromStr for RelationName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "j1" => Ok(RelationName::J1),
            "j1full" | "j1-full" => Ok(RelationName::J1Full),
            "j2" => Ok(RelationName::J2),
            "j3" => Ok(RelationName::J3),
            "lantern" => Ok(RelationName::Lantern),
            _ => Err(Error::InvalidInput(format!("unknown relation {s:?}"))),
        }
    }
}

impl fmt::Display for RelationName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            RelationName::J1 => "J1",
            RelationName::J1Full => "J1full",
            RelationName::J2 => "J2",
            RelationName::J3 => "J3",
            RelationName::Lantern => "lantern",
        };
        f.write_str(s)
    }
}

fn run(from: usize, to: usize) -> Vec<usize> {
    (from..=to).collect()
}

fn cat(parts: &[&[usize]]) -> Vec<usize> {
    parts.concat()
}

/// Admissible `k` for a relation on this model.
pub fn relation_k_range(name: RelationName, model: &SurfaceModel) -> std::ops::RangeInclusive<usize> {
    let top = model.max_index();
    match name {
        RelationName::J1 | RelationName::J1Full | RelationName::J2 => 3..=(top - 1) / 2,
        RelationName::J3 => 3..=top / 2,
        RelationName::Lantern => 0..=usize::MAX,
    }
}

/// The two sides of a relation as words.
pub fn relation_words(name: RelationName, k: usize, model: &SurfaceModel) -> Result<(GroupWord, GroupWord)> {
    let g = model.genus();
    if g < 3 {
        return Err(Error::OutOfRange(format!("relations need genus >= 3, got {g}")));
    }
    if !relation_k_range(name, model).contains(&k) {
        let r = relation_k_range(name, model);
        return Err(Error::OutOfRange(format!("k = {k} outside {}..={} for {name}", r.start(), r.end())));
    }
    let s = |v: Vec<usize>, e: i64| ChainNotation::straight(v).map(|n| Token::chain(n, e));
    let tb = |tok: Token| tok.conjugated(Twist::B, 1);
    let (lhs, rhs) = match name {
        RelationName::J1 | RelationName::J1Full => {
            let mut lhs = vec![s(run(2, 2 * k + 1), 1)?];
            if name == RelationName::J1Full {
                lhs.push(s(run(6, 2 * k + 1), 1)?);
            }
            let gamma = Token::chain(ChainNotation::with_gamma(cat(&[&[2, 3], &run(6, 2 * k + 1)]))?, 1);
            (lhs, vec![gamma, s(run(4, 2 * k + 1), 1)?, s(run(2, 5), 1)?])
        }
        RelationName::J2 => (
            vec![s(run(2, 2 * k + 1), -1)?, tb(s(run(2, 2 * k + 1), 1)?)],
            vec![
                s(run(2, 5), -1)?,
                s(run(4, 2 * k + 1), -1)?,
                Token::chain(ChainNotation::beta(run(5, 2 * k + 1))?, 1),
                tb(s(run(2, 5), 1)?),
            ],
        ),
        RelationName::J3 => (
            vec![
                s(run(1, 4), 1)?,
                s(cat(&[&[1, 2], &run(5, 2 * k)]), 1)?,
                tb(s(run(3, 2 * k), 1)?),
            ],
            vec![s(run(5, 2 * k), 1)?, s(run(1, 2 * k), 1)?],
        ),
        RelationName::Lantern => {
            let (sep, bps) = lantern_maps(model)?;
            let explicit = |m: ExplicitMap| Token {
                conjugator: Vec::new(),
                generator: Generator::Explicit(m),
                exponent: 1,
            };
            (vec![explicit(sep)], bps.into_iter().map(explicit).collect())
        }
    };
    Ok((GroupWord::new(lhs)?, GroupWord::new(rhs)?))
}

/// The separating twist `T_{b_1}` about the boundary of `Σ_{g,1}` and the
/// three bounding-pair maps of its lantern decomposition, with the
/// lantern boundary curves `b_2 ~ c_1` and `b_3 ~ b`.
pub fn lantern_maps(model: &SurfaceModel) -> Result<(ExplicitMap, Vec<ExplicitMap>)> {
    let g = model.genus();
    let (x, y) = (|i| model.x(i), |i| model.y(i));
    let rest: Vec<_> = (3..=g).map(|i| (x(i), y(i))).collect();
    let with = |first: (HomologyClass, HomologyClass)| {
        std::iter::once(first).chain(rest.iter().cloned()).collect::<Vec<_>>()
    };
    let sep = ExplicitMap {
        label: "T_b1".into(),
        pairs: (1..=g).map(|i| (x(i), y(i))).collect(),
        boundary_class: None,
    };
    let bps = vec![
        ExplicitMap {
            label: "T_x T_b4^-1".into(),
            pairs: with((&x(1) - &x(2), y(1))),
            boundary_class: Some(&y(1) + &y(2)),
        },
        ExplicitMap { label: "T_y T_b2^-1".into(), pairs: with((x(2), y(2))), boundary_class: Some(-&y(1)) },
        ExplicitMap { label: "T_z T_b3^-1".into(), pairs: with((x(1), y(1))), boundary_class: Some(-&y(2)) },
    ];
    for m in std::iter::once(&sep).chain(&bps) {
        m.validate(model.form())?;
    }
    Ok((sep, bps))
}

/// Odd straight subchains of the full chain and all odd β-chains.
pub fn enumerate_generators(model: &SurfaceModel) -> Result<Vec<ChainNotation>> {
    let top = model.max_index();
    let mut out = Vec::new();
    for size in (2..=top).step_by(2) {
        for set in (1..=top).combinations(size) {
            out.push(ChainNotation::straight(set)?);
        }
    }
    if model.has_b() && top >= 5 {
        for size in (1..=top - 4).step_by(2) {
            for set in (5..=top).combinations(size) {
                out.push(ChainNotation::beta(set)?);
            }
        }
    }
    for n in &out {
        n.expand(model)?;
    }
    Ok(out)
}
