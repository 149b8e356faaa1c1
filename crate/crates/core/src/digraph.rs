//! Finite simple digraphs: labelled vertices, arcs, neighborhoods, and
//! bounded distances in vertex-deleted subdigraphs.

use std::collections::HashMap;

use crate::bitset::VertexSet;
use crate::error::{Error, Result};

/// A finite simple digraph. Vertex labels are opaque strings; internally
/// vertices are dense indices in declaration order, and neighborhoods are
/// bitsets so pair queries reduce to word operations.
#[derive(Clone, PartialEq, Eq)]
pub struct Digraph {
    labels: Vec<String>,
    index: HashMap<String, usize>,
    out: Vec<VertexSet>,
    inn: Vec<VertexSet>,
}

impl Digraph {
    /// Builds a digraph from declared vertices and arcs. Repeated arcs are
    /// collapsed (arc sets are sets); self-loops and undeclared endpoints are
    /// rejected.
    pub fn new<S: Into<String>>(vertices: Vec<S>, arcs: &[(&str, &str)]) -> Result<Digraph> {
        let labels: Vec<String> = vertices.into_iter().map(Into::into).collect();
        let mut index = HashMap::with_capacity(labels.len());
        for (i, l) in labels.iter().enumerate() {
            if index.insert(l.clone(), i).is_some() {
                return Err(Error::DuplicateVertex(l.clone()));
            }
        }
        let n = labels.len();
        let mut out = vec![VertexSet::empty(n); n];
        let mut inn = vec![VertexSet::empty(n); n];
        for &(u, v) in arcs {
            if u == v {
                return Err(Error::SelfLoop(u.to_string()));
            }
            let ui = *index
                .get(u)
                .ok_or_else(|| Error::VertexNotFound(u.to_string()))?;
            let vi = *index
                .get(v)
                .ok_or_else(|| Error::VertexNotFound(v.to_string()))?;
            out[ui].insert(vi);
            inn[vi].insert(ui);
        }
        Ok(Digraph {
            labels,
            index,
            out,
            inn,
        })
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

    pub fn out_mask(&self, i: usize) -> &VertexSet {
        &self.out[i]
    }

    pub fn in_mask(&self, i: usize) -> &VertexSet {
        &self.inn[i]
    }

    pub fn out_degree(&self, i: usize) -> usize {
        self.out[i].len()
    }

    pub fn has_arc_idx(&self, u: usize, v: usize) -> bool {
        self.out[u].contains(v)
    }

    pub fn has_arc(&self, u: &str, v: &str) -> Result<bool> {
        Ok(self.has_arc_idx(self.require(u)?, self.require(v)?))
    }

    /// Out-neighborhood of `v`, ascending in declaration order.
    pub fn out_neighbors(&self, v: &str) -> Result<Vec<&str>> {
        let i = self.require(v)?;
        Ok(self.out[i].iter().map(|j| self.label(j)).collect())
    }

    /// In-neighborhood of `v`, ascending in declaration order.
    pub fn in_neighbors(&self, v: &str) -> Result<Vec<&str>> {
        let i = self.require(v)?;
        Ok(self.inn[i].iter().map(|j| self.label(j)).collect())
    }

    /// Arcs in canonical order: ascending tail index, then head index.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.vertex_count()).flat_map(move |u| self.out[u].iter().map(move |v| (u, v)))
    }

    pub fn arc_count(&self) -> usize {
        self.out.iter().map(VertexSet::len).sum()
    }

    /// Whether a directed path from `u` to `w` of length at most `bound`
    /// exists in the subdigraph obtained by deleting `excluded`. A length-0
    /// path (`u == w`) counts. Only bounds 1 and 2 are supported.
    pub fn distance_at_most(
        &self,
        u: &str,
        w: &str,
        excluded: Option<&str>,
        bound: usize,
    ) -> Result<bool> {
        let ui = self.require(u)?;
        let wi = self.require(w)?;
        let ei = match excluded {
            Some(x) => {
                let xi = self.require(x)?;
                if xi == ui || xi == wi {
                    return Err(Error::InvalidExclusion(x.to_string()));
                }
                Some(xi)
            }
            None => None,
        };
        if !(1..=2).contains(&bound) {
            return Err(Error::UnsupportedBound(bound));
        }
        Ok(self.distance_at_most_idx(ui, wi, ei, bound))
    }

    /// Index-level form of [`distance_at_most`](Self::distance_at_most);
    /// callers guarantee `excluded` differs from both endpoints and
    /// `bound` is 1 or 2.
    pub fn distance_at_most_idx(
        &self,
        u: usize,
        w: usize,
        excluded: Option<usize>,
        bound: usize,
    ) -> bool {
        if u == w {
            return true;
        }
        if self.out[u].contains(w) {
            return true;
        }
        if bound < 2 {
            return false;
        }
        let mut mid = self.out[u].intersection(&self.inn[w]);
        if let Some(x) = excluded {
            mid.remove(x);
        }
        !mid.is_empty()
    }

    /// The induced subdigraph on `V - {v}`; `self` is left unchanged.
    pub fn delete_vertex(&self, v: &str) -> Result<Digraph> {
        let vi = self.require(v)?;
        let keep: Vec<usize> = (0..self.vertex_count()).filter(|&i| i != vi).collect();
        let labels: Vec<String> = keep.iter().map(|&i| self.labels[i].clone()).collect();
        let arcs: Vec<(&str, &str)> = keep
            .iter()
            .flat_map(|&u| {
                self.out[u]
                    .iter()
                    .filter(move |&x| x != vi)
                    .map(move |x| (self.label(u), self.label(x)))
            })
            .collect();
        Digraph::new(labels, &arcs)
    }

    /// Sinks (outdegree 0) as an index set.
    pub fn sink_mask(&self) -> VertexSet {
        VertexSet::from_indices(
            self.vertex_count(),
            (0..self.vertex_count()).filter(|&i| self.out[i].is_empty()),
        )
    }
}

impl std::fmt::Debug for Digraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Digraph(n={}, arcs=[", self.vertex_count())?;
        let mut first = true;
        for (u, v) in self.arcs() {
            if !first {
                write!(f, ", ")?;
            }
            write!(f, "{}->{}", self.label(u), self.label(v))?;
            first = false;
        }
        write!(f, "])")
    }
}
