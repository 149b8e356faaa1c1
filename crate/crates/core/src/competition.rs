//! Pairwise {1,2}-competition and the (1,2)-step competition graph, computed
//! both from the bounded-distance definition (the oracle) and from the
//! closed-form neighborhood characterizations (the fast path).
//!
//! Two vertices are adjacent in the (1,2)-step competition graph when some
//! third vertex `w` satisfies `d(u,w) <= 1` in `D - v` and `d(v,w) <= 2` in
//! `D - u`, or the same with the roles of `u` and `v` swapped. The fast path
//! never searches: for a same-part pair it tests whether the two
//! out-neighborhoods intersect or escape every single part; for a cross-part
//! pair it tests the three sole-out-neighbor / trapped-neighborhood
//! conditions. Oracle and fast path must agree on every pair, with sinks
//! short-circuited to non-adjacent.

use std::collections::HashMap;

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::tournament::MultipartiteTournament;

/// An undirected simple graph on labelled vertices.
#[derive(Clone, PartialEq, Eq)]
pub struct SimpleGraph {
    labels: Vec<String>,
    index: HashMap<String, usize>,
    adj: Vec<VertexSet>,
}

impl SimpleGraph {
    pub fn new<S: Into<String>>(vertices: Vec<S>, edges: &[(&str, &str)]) -> Result<SimpleGraph> {
        let labels: Vec<String> = vertices.into_iter().map(Into::into).collect();
        let mut index = HashMap::with_capacity(labels.len());
        for (i, l) in labels.iter().enumerate() {
            if index.insert(l.clone(), i).is_some() {
                return Err(Error::DuplicateVertex(l.clone()));
            }
        }
        let n = labels.len();
        let mut adj = vec![VertexSet::empty(n); n];
        for &(u, v) in edges {
            if u == v {
                return Err(Error::SelfLoop(u.to_string()));
            }
            let ui = *index
                .get(u)
                .ok_or_else(|| Error::VertexNotFound(u.to_string()))?;
            let vi = *index
                .get(v)
                .ok_or_else(|| Error::VertexNotFound(v.to_string()))?;
            adj[ui].insert(vi);
            adj[vi].insert(ui);
        }
        Ok(SimpleGraph { labels, index, adj })
    }

    pub(crate) fn from_adjacency(labels: Vec<String>, adj: Vec<VertexSet>) -> SimpleGraph {
        let index = labels
            .iter()
            .enumerate()
            .map(|(i, l)| (l.clone(), i))
            .collect();
        SimpleGraph { labels, index, adj }
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.index.get(label).copied()
    }

    pub(crate) fn require(&self, label: &str) -> Result<usize> {
        self.index_of(label)
            .ok_or_else(|| Error::VertexNotFound(label.to_string()))
    }

    pub fn adj_mask(&self, i: usize) -> &VertexSet {
        &self.adj[i]
    }

    pub fn has_edge_idx(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn has_edge(&self, u: &str, v: &str) -> Result<bool> {
        Ok(self.has_edge_idx(self.require(u)?, self.require(v)?))
    }

    pub fn degree(&self, i: usize) -> usize {
        self.adj[i].len()
    }

    /// Edges `(u, v)` with `u < v`, lexicographic in the vertex order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.vertex_count() {
            for v in self.adj[u].iter() {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.edges().len()
    }

    /// Closed neighborhood `N[v]` as an index set.
    pub fn closed_neighborhood(&self, i: usize) -> VertexSet {
        let mut m = self.adj[i].clone();
        m.insert(i);
        m
    }
}

impl std::fmt::Debug for SimpleGraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "SimpleGraph(n={}, edges=[", self.vertex_count())?;
        let mut first = true;
        for (u, v) in self.edges() {
            if !first {
                write!(f, ", ")?;
            }
            write!(f, "{}-{}", self.label(u), self.label(v))?;
            first = false;
        }
        write!(f, "])")
    }
}

/// How a pair earned its adjacency.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WitnessKind {
    /// Both vertices have an arc to the target.
    CommonOutNeighbor,
    /// One vertex has an arc to the target and the other reaches it by a
    /// directed path of exactly two arcs avoiding the first vertex.
    OneTwoStep,
}

/// Evidence for an edge of the (1,2)-step competition graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdjacencyWitness {
    pub kind: WitnessKind,
    pub target: String,
    /// For [`WitnessKind::OneTwoStep`]: the two-arc path `[start, mid,
    /// target]` from one of the queried vertices.
    pub path: Option<[String; 3]>,
}

impl AdjacencyWitness {
    /// Replays the witness against the raw arc set of `d` for the pair
    /// `(u, v)`.
    pub fn validate(&self, d: &MultipartiteTournament, u: &str, v: &str) -> bool {
        let dg = d.digraph();
        let (Some(ui), Some(vi), Some(wi)) =
            (dg.index_of(u), dg.index_of(v), dg.index_of(&self.target))
        else {
            return false;
        };
        if wi == ui || wi == vi {
            return false;
        }
        match self.kind {
            WitnessKind::CommonOutNeighbor => {
                self.path.is_none() && dg.has_arc_idx(ui, wi) && dg.has_arc_idx(vi, wi)
            }
            WitnessKind::OneTwoStep => {
                let Some([start, mid, end]) = &self.path else {
                    return false;
                };
                let (Some(si), Some(mi), Some(ei)) =
                    (dg.index_of(start), dg.index_of(mid), dg.index_of(end))
                else {
                    return false;
                };
                // The path belongs to one endpoint of the pair; the other
                // endpoint has the direct arc and must be avoided.
                let other = if si == ui {
                    vi
                } else if si == vi {
                    ui
                } else {
                    return false;
                };
                ei == wi
                    && mi != other
                    && dg.has_arc_idx(other, wi)
                    && dg.has_arc_idx(si, mi)
                    && dg.has_arc_idx(mi, ei)
            }
        }
    }
}

/// Adjacency computation strategy for [`competition_graph`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    /// Bounded-distance definition, searching over all candidate targets.
    Oracle,
    /// Closed-form neighborhood tests; no path search.
    Fast,
}

fn pair(d: &MultipartiteTournament, u: &str, v: &str) -> Result<(usize, usize)> {
    let dg = d.digraph();
    let ui = dg.require(u)?;
    let vi = dg.require(v)?;
    if ui == vi {
        return Err(Error::SameVertex(u.to_string()));
    }
    Ok((ui, vi))
}

/// Smallest common out-neighbor of `u` and `v`, as a witness.
pub fn competes(d: &MultipartiteTournament, u: &str, v: &str) -> Result<Option<AdjacencyWitness>> {
    let (ui, vi) = pair(d, u, v)?;
    Ok(competes_idx(d, ui, vi).map(|w| AdjacencyWitness {
        kind: WitnessKind::CommonOutNeighbor,
        target: d.digraph().label(w).to_string(),
        path: None,
    }))
}

pub(crate) fn competes_idx(d: &MultipartiteTournament, u: usize, v: usize) -> Option<usize> {
    d.digraph()
        .out_mask(u)
        .intersection(d.digraph().out_mask(v))
        .first()
}

/// Witness for the exact-length-2 side of {1,2}-competition: a target `w`
/// with an arc from one vertex and a two-arc path from the other avoiding
/// the first. Candidates are scanned in canonical order, the `u`-side
/// condition first.
pub fn one_two_competes(
    d: &MultipartiteTournament,
    u: &str,
    v: &str,
) -> Result<Option<AdjacencyWitness>> {
    let (ui, vi) = pair(d, u, v)?;
    Ok(
        one_two_competes_idx(d, ui, vi).map(|(w, path)| AdjacencyWitness {
            kind: WitnessKind::OneTwoStep,
            target: d.digraph().label(w).to_string(),
            path: Some(path.map(|i| d.digraph().label(i).to_string())),
        }),
    )
}

pub(crate) fn one_two_competes_idx(
    d: &MultipartiteTournament,
    u: usize,
    v: usize,
) -> Option<(usize, [usize; 3])> {
    let dg = d.digraph();
    for w in 0..dg.vertex_count() {
        if w == u || w == v {
            continue;
        }
        if dg.has_arc_idx(u, w) {
            let mut mid = dg.out_mask(v).intersection(dg.in_mask(w));
            mid.remove(u);
            if let Some(z) = mid.first() {
                return Some((w, [v, z, w]));
            }
        }
        if dg.has_arc_idx(v, w) {
            let mut mid = dg.out_mask(u).intersection(dg.in_mask(w));
            mid.remove(v);
            if let Some(z) = mid.first() {
                return Some((w, [u, z, w]));
            }
        }
    }
    None
}

/// Ground-truth adjacency from the bounded-distance definition, built purely
/// on digraph distance queries.
pub fn adjacent_oracle(d: &MultipartiteTournament, u: &str, v: &str) -> Result<bool> {
    let (ui, vi) = pair(d, u, v)?;
    Ok(adjacent_oracle_idx(d, ui, vi))
}

pub(crate) fn adjacent_oracle_idx(d: &MultipartiteTournament, u: usize, v: usize) -> bool {
    ij_adjacent_idx(d, u, v, 1, 2)
}

fn ij_adjacent_idx(d: &MultipartiteTournament, u: usize, v: usize, i: usize, j: usize) -> bool {
    let dg = d.digraph();
    (0..dg.vertex_count()).any(|w| {
        w != u
            && w != v
            && ((dg.distance_at_most_idx(u, w, Some(v), i)
                && dg.distance_at_most_idx(v, w, Some(u), j))
                || (dg.distance_at_most_idx(v, w, Some(u), i)
                    && dg.distance_at_most_idx(u, w, Some(v), j)))
    })
}

/// Closed-form adjacency; agrees with [`adjacent_oracle`] on every pair.
/// A sink is never adjacent to anything. A same-part pair is non-adjacent
/// exactly when the two out-neighborhoods are disjoint and their union fits
/// inside one part. A cross-part pair with arc `a -> b` is non-adjacent
/// exactly when `b` is `a`'s sole out-neighbor, or the out-neighborhoods
/// are disjoint and, for the part `X` holding `out(b)`, `out(a)` stays
/// inside `X` plus `b`.
pub fn adjacent_fast(d: &MultipartiteTournament, u: &str, v: &str) -> Result<bool> {
    let (ui, vi) = pair(d, u, v)?;
    Ok(adjacent_fast_idx(d, ui, vi))
}

pub(crate) fn adjacent_fast_idx(d: &MultipartiteTournament, u: usize, v: usize) -> bool {
    let dg = d.digraph();
    if dg.out_mask(u).is_empty() || dg.out_mask(v).is_empty() {
        return false;
    }
    if d.part_of(u) == d.part_of(v) {
        let nu = dg.out_mask(u);
        let nv = dg.out_mask(v);
        if !nu.is_disjoint(nv) {
            return true;
        }
        d.containing_part(&nu.union(nv)).is_none()
    } else {
        // orient along the single cross arc
        let (a, b) = if dg.has_arc_idx(u, v) { (u, v) } else { (v, u) };
        let na = dg.out_mask(a);
        let nb = dg.out_mask(b);
        if na.len() == 1 && na.contains(b) {
            return false;
        }
        if na.is_disjoint(nb) {
            if let Some(p) = d.containing_part(nb) {
                let mut trap = d.part_mask(p).clone();
                trap.insert(b);
                if na.is_subset_of(&trap) {
                    return false;
                }
            }
        }
        true
    }
}

/// The (1,2)-step competition graph on the tournament's vertex set.
pub fn competition_graph(d: &MultipartiteTournament, method: Method) -> SimpleGraph {
    let dg = d.digraph();
    let n = dg.vertex_count();
    let mut adj = vec![VertexSet::empty(n); n];
    for u in 0..n {
        for v in u + 1..n {
            let adjacent = match method {
                Method::Oracle => adjacent_oracle_idx(d, u, v),
                Method::Fast => adjacent_fast_idx(d, u, v),
            };
            if adjacent {
                adj[u].insert(v);
                adj[v].insert(u);
            }
        }
    }
    SimpleGraph::from_adjacency(dg.labels().to_vec(), adj)
}

/// The (i,j)-step competition graph for `1 <= i <= j <= 2`, computed from
/// the bounded-distance definition. `(1,1)` is the classical competition
/// graph.
pub fn generic_ij_graph(d: &MultipartiteTournament, i: usize, j: usize) -> Result<SimpleGraph> {
    if i < 1 || j < i || j > 2 {
        return Err(Error::UnsupportedBound(if (1..=2).contains(&i) {
            j
        } else {
            i
        }));
    }
    let dg = d.digraph();
    let n = dg.vertex_count();
    let mut adj = vec![VertexSet::empty(n); n];
    for u in 0..n {
        for v in u + 1..n {
            if ij_adjacent_idx(d, u, v, i, j) {
                adj[u].insert(v);
                adj[v].insert(u);
            }
        }
    }
    Ok(SimpleGraph::from_adjacency(dg.labels().to_vec(), adj))
}
