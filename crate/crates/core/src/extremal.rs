//! Dense graphs without large `(k+1)`-connected subgraphs.
//!
//! `G_0` is the complete graph on `k + σk` vertices. `G_{i+1}` consists of
//! two copies of `G_i` identified along a `k`-set `Y_i ⊆ X_i`, where `X_i`
//! is a set of `2k` vertices split into `2^i` mutually non-adjacent parts.

use std::collections::{BTreeSet, HashMap};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::extract::first_k1_connected_subset;
use crate::graph::{rational, GraphJson, SimpleGraph, Vertex};
use crate::verdict::Verdict;

pub const DEFAULT_VERTEX_CAP: usize = 1 << 20;
/// Largest graph on which property (i) is also checked exhaustively.
pub const BRUTE_FORCE_VERIFY_LIMIT: usize = 20;

/// One identification step: two copies (`side_a`, `side_b`) of an earlier
/// construction stage meeting exactly in `glue`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GlueStep {
    pub level: usize,
    pub glue: Vec<Vertex>,
    pub side_a: Vec<Vertex>,
    pub side_b: Vec<Vertex>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtremalGraph {
    pub graph: SimpleGraph,
    pub k: usize,
    pub sigma_k: usize,
    pub level: usize,
    pub x_parts: Vec<Vec<Vertex>>,
    /// Every glue set ever used, mapped into the final labels. Steps from
    /// earlier levels appear once per copy of their stage.
    pub glue_history: Vec<GlueStep>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtremalMetadata {
    pub k: usize,
    pub sigma_k: usize,
    pub level: usize,
    pub x_parts: Vec<Vec<Vertex>>,
    pub glue_history: Vec<GlueStep>,
}

/// On-disk form: graph JSON plus a `metadata` block.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ExtremalFile {
    #[serde(flatten)]
    pub graph: GraphJson,
    pub metadata: ExtremalMetadata,
}

impl ExtremalGraph {
    pub fn to_file(&self) -> ExtremalFile {
        ExtremalFile {
            graph: self.graph.to_json(),
            metadata: ExtremalMetadata {
                k: self.k,
                sigma_k: self.sigma_k,
                level: self.level,
                x_parts: self.x_parts.clone(),
                glue_history: self.glue_history.clone(),
            },
        }
    }

    pub fn from_file(file: ExtremalFile) -> Result<Self> {
        let graph = SimpleGraph::try_from(file.graph)?;
        let m = file.metadata;
        Ok(ExtremalGraph {
            graph,
            k: m.k,
            sigma_k: m.sigma_k,
            level: m.level,
            x_parts: m.x_parts,
            glue_history: m.glue_history,
        })
    }

    /// `(1+σ)k`, the largest allowed size of a `(k+1)`-connected subgraph.
    pub fn leaf_size(&self) -> usize {
        self.k + self.sigma_k
    }

    /// `σ = σk / k` as an exact rational.
    pub fn sigma(&self) -> BigRational {
        rational(self.sigma_k as i64, self.k as i64)
    }
}

pub fn build_extremal(k: usize, sigma_k: usize, level: usize) -> Result<ExtremalGraph> {
    build_extremal_with_cap(k, sigma_k, level, DEFAULT_VERTEX_CAP)
}

pub fn build_extremal_with_cap(
    k: usize,
    sigma_k: usize,
    level: usize,
    vertex_cap: usize,
) -> Result<ExtremalGraph> {
    if k == 0 {
        return Err(Error::Parameter("k must be positive".into()));
    }
    if sigma_k < k {
        return Err(Error::Parameter(format!(
            "sigma_k = {sigma_k} < k = {k}: the construction needs sigma >= 1"
        )));
    }
    let vertices = level
        .try_into()
        .ok()
        .and_then(|l: u32| 1usize.checked_shl(l))
        .and_then(|p| p.checked_mul(sigma_k))
        .and_then(|v| v.checked_add(k));
    match vertices {
        Some(v) if v <= vertex_cap => {}
        _ => {
            return Err(Error::TooLarge {
                what: "extremal graph vertex count",
                got: vertices.unwrap_or(usize::MAX),
                limit: vertex_cap,
            })
        }
    }

    let mut e = ExtremalGraph {
        graph: SimpleGraph::complete(k + sigma_k),
        k,
        sigma_k,
        level: 0,
        x_parts: vec![(0..2 * k).collect()],
        glue_history: Vec::new(),
    };
    for _ in 0..level {
        e = double(&e);
    }
    Ok(e)
}

/// Splits the `X` parts into `Y` and `Z` parts of `k` vertices each.
///
/// Even positions of every part go to `Y`, odd ones to `Z`; each odd-sized
/// part leaves `Y` one vertex ahead, and the first half of those parts hand
/// their last `Y` vertex over to `Z`.
pub fn split_parts(x_parts: &[Vec<Vertex>]) -> (Vec<Vec<Vertex>>, Vec<Vec<Vertex>>) {
    let mut y: Vec<Vec<Vertex>> = Vec::with_capacity(x_parts.len());
    let mut z: Vec<Vec<Vertex>> = Vec::with_capacity(x_parts.len());
    for part in x_parts {
        y.push(part.iter().copied().step_by(2).collect());
        z.push(part.iter().copied().skip(1).step_by(2).collect());
    }
    let odd: Vec<usize> = (0..x_parts.len()).filter(|&i| x_parts[i].len() % 2 == 1).collect();
    for &i in &odd[..odd.len() / 2] {
        let v = y[i].pop().expect("odd part has a Y vertex");
        z[i].push(v);
        z[i].sort_unstable();
    }
    (y, z)
}

fn double(e: &ExtremalGraph) -> ExtremalGraph {
    let n = e.graph.n();
    let (y_parts, z_parts) = split_parts(&e.x_parts);
    let glue: BTreeSet<Vertex> = y_parts.iter().flatten().copied().collect();

    let mut map = vec![0; n];
    let mut fresh = n;
    for (v, slot) in map.iter_mut().enumerate() {
        if glue.contains(&v) {
            *slot = v;
        } else {
            *slot = fresh;
            fresh += 1;
        }
    }
    let mut graph = SimpleGraph::empty(fresh);
    for (u, v) in e.graph.edges() {
        graph.add_edge(u, v).expect("copy 1 edge in range");
        if !(glue.contains(&u) && glue.contains(&v)) {
            graph.add_edge(map[u], map[v]).expect("copy 2 edge in range");
        }
    }

    let map_set = |set: &[Vertex]| -> Vec<Vertex> {
        let mut out: Vec<Vertex> = set.iter().map(|&v| map[v]).collect();
        out.sort_unstable();
        out
    };
    let mut x_parts = z_parts.clone();
    x_parts.extend(z_parts.iter().map(|p| map_set(p)));

    let mut glue_history = e.glue_history.clone();
    glue_history.extend(e.glue_history.iter().map(|s| GlueStep {
        level: s.level,
        glue: map_set(&s.glue),
        side_a: map_set(&s.side_a),
        side_b: map_set(&s.side_b),
    }));
    glue_history.push(GlueStep {
        level: e.level,
        glue: glue.iter().copied().collect(),
        side_a: (0..n).collect(),
        side_b: map_set(&(0..n).collect::<Vec<_>>()),
    });

    ExtremalGraph {
        graph,
        k: e.k,
        sigma_k: e.sigma_k,
        level: e.level + 1,
        x_parts,
        glue_history,
    }
}

fn binom2(n: usize) -> BigRational {
    let n = BigInt::from(n);
    BigRational::new(&n * (&n - 1u32), BigInt::from(2))
}

/// `2^i (C((1+σ)k, 2) − (2/3)(1 − 4^{−i}) C(k, 2))`.
pub fn edge_lower_bound(k: usize, sigma_k: usize, level: usize) -> BigRational {
    let pow2 = BigRational::from_integer(BigInt::one() << level);
    let quarter_pow = BigRational::new(BigInt::one(), BigInt::one() << (2 * level));
    let shrink = rational(2, 3) * (BigRational::one() - quarter_pow);
    pow2 * (binom2(k + sigma_k) - shrink * binom2(k))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PropertyCheck {
    pub property: &'static str,
    pub verdict: Verdict,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExtremalReport {
    pub vertices: usize,
    pub edges: usize,
    /// Exact `e − bound` from property (iv).
    #[serde(serialize_with = "crate::numeric::serialize_rational")]
    pub edge_margin: BigRational,
    pub checks: Vec<PropertyCheck>,
}

impl ExtremalReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| !c.verdict.is_fail())
    }

    pub fn check(&self, property: &str) -> Option<&PropertyCheck> {
        self.checks.iter().find(|c| c.property == property)
    }
}

fn check_metadata(e: &ExtremalGraph) -> Result<()> {
    let n = e.graph.n();
    let bad = |what: String| Err(Error::Malformed(what));
    if e.k == 0 || e.sigma_k == 0 {
        return bad("k and sigma_k must be positive".into());
    }
    if e.level >= usize::BITS as usize {
        return bad(format!("level {} is out of range", e.level));
    }
    for v in e.x_parts.iter().flatten() {
        if *v >= n {
            return bad(format!("X vertex {v} out of range"));
        }
    }
    for step in &e.glue_history {
        if step.level >= e.level {
            return bad(format!("glue step level {} not below {}", step.level, e.level));
        }
        for v in step.glue.iter().chain(&step.side_a).chain(&step.side_b) {
            if *v >= n {
                return bad(format!("glue history vertex {v} out of range"));
            }
        }
    }
    Ok(())
}

pub fn verify_extremal(e: &ExtremalGraph) -> Result<ExtremalReport> {
    check_metadata(e)?;
    let g = &e.graph;
    let (k, i) = (e.k, e.level);
    let mut checks = Vec::new();

    let certificate = certify_no_large_subgraph(e);
    checks.push(PropertyCheck {
        property: "i_certificate",
        verdict: Verdict::from_bool(certificate.is_ok()),
        detail: certificate.err().unwrap_or_else(|| "glue certificate valid".into()),
    });

    if g.n() <= BRUTE_FORCE_VERIFY_LIMIT {
        let hit = first_k1_connected_subset(g, k, e.leaf_size() + 1, BRUTE_FORCE_VERIFY_LIMIT)?;
        checks.push(PropertyCheck {
            property: "i_brute_force",
            verdict: Verdict::from_bool(hit.is_none()),
            detail: match hit {
                None => "no large (k+1)-connected subset".into(),
                Some(h) => format!("{h:?} is (k+1)-connected"),
            },
        });
    } else {
        checks.push(PropertyCheck {
            property: "i_brute_force",
            verdict: Verdict::NotApplicable,
            detail: format!("{} vertices exceed the exhaustive limit", g.n()),
        });
    }

    let expected_n = (e.sigma_k << i) + k;
    checks.push(PropertyCheck {
        property: "ii_vertex_count",
        verdict: Verdict::from_bool(g.n() == expected_n),
        detail: format!("v = {}, k + 2^i sigma_k = {expected_n}", g.n()),
    });

    let partition = check_x_partition(e);
    checks.push(PropertyCheck {
        property: "iii_x_partition",
        verdict: Verdict::from_bool(partition.is_ok()),
        detail: partition.err().unwrap_or_else(|| format!("{} parts over 2k vertices", e.x_parts.len())),
    });

    let bound = edge_lower_bound(k, e.sigma_k, i);
    let edge_margin = BigRational::from_integer(g.edge_count().into()) - &bound;
    checks.push(PropertyCheck {
        property: "iv_edge_count",
        verdict: Verdict::from_bool(!edge_margin.is_negative()),
        detail: format!("e = {}, bound = {bound}, margin = {edge_margin}", g.edge_count()),
    });

    let glue_edges = check_glue_edges(e);
    checks.push(PropertyCheck {
        property: "glue_edge_bound",
        verdict: Verdict::from_bool(glue_edges.is_ok()),
        detail: glue_edges.err().unwrap_or_else(|| "2^j * 2e(Y_j) <= k^2 - k for every glue set".into()),
    });

    Ok(ExtremalReport { vertices: g.n(), edges: g.edge_count(), edge_margin, checks })
}

/// Recursively splits the vertex set along the recorded glue steps. A
/// `(k+1)`-connected subgraph always lies within one side of a separation
/// with a `k`-vertex core, so it is confined to some leaf, and every leaf
/// has at most `(1+σ)k` vertices.
fn certify_no_large_subgraph(e: &ExtremalGraph) -> Result<(), String> {
    let g = &e.graph;
    let by_union: HashMap<Vec<Vertex>, &GlueStep> = e
        .glue_history
        .iter()
        .map(|s| {
            let union: BTreeSet<Vertex> = s.side_a.iter().chain(&s.side_b).copied().collect();
            (union.into_iter().collect(), s)
        })
        .collect();

    let mut stack: Vec<Vec<Vertex>> = vec![(0..g.n()).collect()];
    while let Some(w) = stack.pop() {
        let Some(step) = by_union.get(&w) else {
            if w.len() > e.leaf_size() {
                return Err(format!("leaf with {} vertices has no recorded separation", w.len()));
            }
            continue;
        };
        let a: BTreeSet<Vertex> = step.side_a.iter().copied().collect();
        let b: BTreeSet<Vertex> = step.side_b.iter().copied().collect();
        let core: Vec<Vertex> = a.intersection(&b).copied().collect();
        if core != step.glue || core.len() != e.k {
            return Err(format!("glue {:?} is not the k-vertex intersection of its sides", step.glue));
        }
        if a.len() == w.len() || b.len() == w.len() {
            return Err(format!("a side of glue {:?} spans its vertex set", step.glue));
        }
        for u in a.difference(&b) {
            if let Some(v) = g.neighbors(*u).iter().find(|v| b.contains(v) && !a.contains(v)) {
                return Err(format!("edge {{{u}, {v}}} crosses glue {:?}", step.glue));
            }
        }
        stack.push(a.into_iter().collect());
        stack.push(b.into_iter().collect());
    }
    Ok(())
}

fn check_x_partition(e: &ExtremalGraph) -> Result<(), String> {
    let parts = &e.x_parts;
    if parts.len() != 1usize << e.level {
        return Err(format!("{} parts, expected 2^{}", parts.len(), e.level));
    }
    let mut owner = HashMap::new();
    for (idx, part) in parts.iter().enumerate() {
        for &v in part {
            if owner.insert(v, idx).is_some() {
                return Err(format!("vertex {v} appears twice in X"));
            }
        }
    }
    if owner.len() != 2 * e.k {
        return Err(format!("X has {} vertices, expected {}", owner.len(), 2 * e.k));
    }
    let min = parts.iter().map(Vec::len).min().unwrap_or(0);
    let max = parts.iter().map(Vec::len).max().unwrap_or(0);
    if max - min > 1 {
        return Err(format!("part sizes range from {min} to {max}"));
    }
    for (&v, &p) in &owner {
        for w in e.graph.neighbors(v) {
            if let Some(&q) = owner.get(w) {
                if q != p {
                    return Err(format!("edge {{{v}, {w}}} joins parts {p} and {q}"));
                }
            }
        }
    }
    Ok(())
}

fn check_glue_edges(e: &ExtremalGraph) -> Result<(), String> {
    let limit = e.k * e.k - e.k;
    for step in &e.glue_history {
        let twice = 2 * e.graph.edges_within(&step.glue);
        if (twice << step.level) > limit {
            return Err(format!(
                "glue {:?} at level {} has {} edges",
                step.glue,
                step.level,
                twice / 2
            ));
        }
    }
    Ok(())
}

/// `2e/(v − k)` against `δk − 1 − 1/(3σ)` with `δ = 2 + σ + 1/(3σ)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SharpnessRate {
    pub lhs: BigRational,
    pub rhs: BigRational,
}

impl SharpnessRate {
    pub fn holds(&self) -> bool {
        self.lhs >= self.rhs
    }
}

/// `δ = 2 + σ + 1/(3σ)` for the construction's rational `σ`.
pub fn construction_delta(k: usize, sigma_k: usize) -> BigRational {
    let sigma = rational(sigma_k as i64, k as i64);
    BigRational::from_integer(2.into()) + &sigma + (rational(3, 1) * sigma).recip()
}

pub fn sharpness_rate(e: &ExtremalGraph) -> SharpnessRate {
    let k = BigRational::from_integer(e.k.into());
    let sigma = e.sigma();
    let delta = construction_delta(e.k, e.sigma_k);
    let lhs = rational(2 * e.graph.edge_count() as i64, (e.graph.n() - e.k) as i64);
    let rhs = delta * k - BigRational::one() - (rational(3, 1) * sigma).recip();
    SharpnessRate { lhs, rhs }
}

/// First level up to `max_level` at which the average degree exceeds
/// `δk − 2`.
pub fn first_dense_level(k: usize, sigma_k: usize, max_level: usize) -> Result<Option<usize>> {
    let threshold = construction_delta(k, sigma_k) * BigRational::from_integer(k.into())
        - BigRational::from_integer(2.into());
    let mut e = build_extremal(k, sigma_k, 0)?;
    for level in 0..=max_level {
        if level > 0 {
            e = double(&e);
        }
        let avg = crate::graph::average_degree(&e.graph)?;
        if avg > threshold {
            return Ok(Some(level));
        }
    }
    Ok(None)
}
