//! Validated multipartite tournaments, deterministic random generation,
//! exhaustive orientation enumeration, and named fixtures.

use std::collections::HashMap;

use crate::bitset::VertexSet;
use crate::digraph::Digraph;
use crate::error::{Error, Result};

/// An ordered partition of a vertex set into named, nonempty, disjoint parts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Partition {
    parts: Vec<(String, Vec<String>)>,
}

impl Partition {
    pub fn new<S: Into<String>>(parts: Vec<(S, Vec<S>)>) -> Result<Partition> {
        let parts: Vec<(String, Vec<String>)> = parts
            .into_iter()
            .map(|(name, vs)| (name.into(), vs.into_iter().map(Into::into).collect()))
            .collect();
        let mut names = HashMap::new();
        let mut seen = HashMap::new();
        for (i, (name, members)) in parts.iter().enumerate() {
            if names.insert(name.clone(), i).is_some() {
                return Err(Error::DuplicatePartName(name.clone()));
            }
            if members.is_empty() {
                return Err(Error::EmptyPart(name.clone()));
            }
            for v in members {
                if seen.insert(v.clone(), i).is_some() {
                    return Err(Error::DuplicateVertex(v.clone()));
                }
            }
        }
        Ok(Partition { parts })
    }

    pub fn part_count(&self) -> usize {
        self.parts.len()
    }

    pub fn parts(&self) -> &[(String, Vec<String>)] {
        &self.parts
    }

    pub fn part_name(&self, i: usize) -> &str {
        &self.parts[i].0
    }

    pub fn members(&self, i: usize) -> &[String] {
        &self.parts[i].1
    }

    /// Vertices in canonical order: part order, then declaration order.
    pub fn canonical_vertices(&self) -> impl Iterator<Item = &str> {
        self.parts
            .iter()
            .flat_map(|(_, vs)| vs.iter().map(String::as_str))
    }
}

/// An orientation of a complete k-partite graph, k >= 3. The stored digraph
/// is re-indexed so vertex index order equals the canonical order (part
/// order, then declaration order within a part); every tie-break in the
/// crate refers to that order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultipartiteTournament {
    digraph: Digraph,
    partition: Partition,
    part_of: Vec<usize>,
    part_masks: Vec<VertexSet>,
}

/// Named example tournaments used across docs and tests.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Fixture {
    /// Directed triangle on singleton parts.
    T3,
    /// Two 2-parts joined in a directed 4-cycle plus a dominant vertex.
    Star5,
    /// Four vertices with a single sink.
    Sink4,
}

impl MultipartiteTournament {
    /// Checks that `digraph` is an orientation of the complete multipartite
    /// graph described by `partition` and returns the validated tournament.
    /// The first violating pair in canonical order names the error.
    pub fn validate(digraph: &Digraph, partition: &Partition) -> Result<MultipartiteTournament> {
        let canonical: Vec<&str> = partition.canonical_vertices().collect();
        if canonical.len() != digraph.vertex_count() {
            return Err(Error::VertexSetMismatch);
        }
        for v in &canonical {
            if digraph.index_of(v).is_none() {
                return Err(Error::VertexSetMismatch);
            }
        }
        if partition.part_count() < 3 {
            return Err(Error::TooFewParts(partition.part_count()));
        }

        let mut part_of_label: HashMap<&str, usize> = HashMap::new();
        for (p, (_, members)) in partition.parts().iter().enumerate() {
            for v in members {
                part_of_label.insert(v.as_str(), p);
            }
        }

        // Re-index into canonical order.
        let arcs: Vec<(&str, &str)> = digraph
            .arcs()
            .map(|(u, v)| (digraph.label(u), digraph.label(v)))
            .collect();
        let canon = Digraph::new(canonical.clone(), &arcs)?;

        let n = canon.vertex_count();
        let part_of: Vec<usize> = (0..n).map(|i| part_of_label[canon.label(i)]).collect();
        for u in 0..n {
            for v in u + 1..n {
                let fwd = canon.has_arc_idx(u, v);
                let bwd = canon.has_arc_idx(v, u);
                let lu = canon.label(u).to_string();
                let lv = canon.label(v).to_string();
                if part_of[u] == part_of[v] {
                    if fwd || bwd {
                        return Err(Error::IntraPartArc(lu, lv));
                    }
                } else {
                    match (fwd, bwd) {
                        (false, false) => return Err(Error::MissingCrossArc(lu, lv)),
                        (true, true) => return Err(Error::DoubleOrientation(lu, lv)),
                        _ => {}
                    }
                }
            }
        }

        let part_masks = (0..partition.part_count())
            .map(|p| VertexSet::from_indices(n, (0..n).filter(|&i| part_of[i] == p)))
            .collect();

        Ok(MultipartiteTournament {
            digraph: canon,
            partition: partition.clone(),
            part_of,
            part_masks,
        })
    }

    pub fn digraph(&self) -> &Digraph {
        &self.digraph
    }

    pub fn partition(&self) -> &Partition {
        &self.partition
    }

    pub fn vertex_count(&self) -> usize {
        self.digraph.vertex_count()
    }

    pub fn part_count(&self) -> usize {
        self.partition.part_count()
    }

    pub fn part_of(&self, i: usize) -> usize {
        self.part_of[i]
    }

    pub fn part_mask(&self, p: usize) -> &VertexSet {
        &self.part_masks[p]
    }

    pub fn part_name(&self, p: usize) -> &str {
        self.partition.part_name(p)
    }

    /// Index of the part whose name is `name`.
    pub fn part_index(&self, name: &str) -> Option<usize> {
        (0..self.part_count()).find(|&p| self.part_name(p) == name)
    }

    /// Part sizes in part order.
    pub fn part_sizes(&self) -> Vec<usize> {
        self.part_masks.iter().map(VertexSet::len).collect()
    }

    /// The unique part, if any, containing every member of `set`.
    /// `None` for the empty set and for sets meeting two or more parts.
    pub fn containing_part(&self, set: &VertexSet) -> Option<usize> {
        let first = set.first()?;
        let p = self.part_of[first];
        set.is_subset_of(&self.part_masks[p]).then_some(p)
    }

    /// Uniform random orientation. Vertices are named `p{i}v{j}` (1-based),
    /// parts `P{i}`. The generator is SplitMix64 seeded with `seed`; cross
    /// pairs are visited in canonical order `(u, v)` with `u < v`, one draw
    /// per pair, and the arc is `u -> v` exactly when the draw's top bit is
    /// clear. Identical `(part_sizes, seed)` reproduce the identical arc set
    /// on every platform.
    pub fn random(part_sizes: &[usize], seed: u64) -> Result<MultipartiteTournament> {
        if part_sizes.len() < 3 {
            return Err(Error::TooFewParts(part_sizes.len()));
        }
        let (partition, labels, part_of) = generated_partition(part_sizes)?;
        let mut state = seed;
        let mut arcs: Vec<(usize, usize)> = Vec::new();
        for (u, v) in cross_pairs(&part_of) {
            if splitmix64(&mut state) >> 63 == 0 {
                arcs.push((u, v));
            } else {
                arcs.push((v, u));
            }
        }
        build(labels, &partition, &arcs)
    }

    /// All `2^m` orientations over the `m` cross pairs, in lexicographic
    /// order of the orientation bit-vector (cross pairs in canonical order;
    /// bit 0 orients the pair from its smaller vertex). Capped at `m <= 20`.
    pub fn enumerate(part_sizes: &[usize]) -> Result<TournamentEnumeration> {
        if part_sizes.len() < 3 {
            return Err(Error::TooFewParts(part_sizes.len()));
        }
        let (partition, labels, part_of) = generated_partition(part_sizes)?;
        let pairs = cross_pairs(&part_of);
        if pairs.len() > 20 {
            return Err(Error::EnumerationTooLarge(pairs.len()));
        }
        Ok(TournamentEnumeration {
            partition,
            labels,
            pairs,
            next: 0,
        })
    }

    pub fn fixture(which: Fixture) -> MultipartiteTournament {
        let (parts, arcs) = match which {
            Fixture::T3 => (
                vec![("X1", vec!["a"]), ("X2", vec!["b"]), ("X3", vec!["c"])],
                vec![("a", "b"), ("b", "c"), ("c", "a")],
            ),
            Fixture::Star5 => (
                vec![
                    ("X1", vec!["u1", "u2"]),
                    ("X2", vec!["u3", "u4"]),
                    ("X3", vec!["x"]),
                ],
                vec![
                    ("u1", "u3"),
                    ("u3", "u2"),
                    ("u2", "u4"),
                    ("u4", "u1"),
                    ("x", "u1"),
                    ("x", "u2"),
                    ("x", "u3"),
                    ("x", "u4"),
                ],
            ),
            Fixture::Sink4 => (
                vec![("X1", vec!["s", "u"]), ("X2", vec!["v"]), ("X3", vec!["w"])],
                vec![("v", "s"), ("w", "s"), ("u", "v"), ("u", "w"), ("v", "w")],
            ),
        };
        let partition = Partition::new(parts).expect("fixture partition");
        let labels: Vec<String> = partition.canonical_vertices().map(String::from).collect();
        let digraph = Digraph::new(labels, &arcs).expect("fixture digraph");
        MultipartiteTournament::validate(&digraph, &partition).expect("fixture validates")
    }
}

/// Single-consumer stream over all orientations of a complete multipartite
/// graph; see [`MultipartiteTournament::enumerate`].
pub struct TournamentEnumeration {
    partition: Partition,
    labels: Vec<String>,
    pairs: Vec<(usize, usize)>,
    next: u64,
}

impl TournamentEnumeration {
    pub fn total(&self) -> u64 {
        1u64 << self.pairs.len()
    }
}

impl Iterator for TournamentEnumeration {
    type Item = MultipartiteTournament;

    fn next(&mut self) -> Option<Self::Item> {
        if self.next >= self.total() {
            return None;
        }
        let index = self.next;
        self.next += 1;
        let m = self.pairs.len();
        let arcs: Vec<(usize, usize)> = self
            .pairs
            .iter()
            .enumerate()
            .map(|(j, &(u, v))| {
                if index >> (m - 1 - j) & 1 == 0 {
                    (u, v)
                } else {
                    (v, u)
                }
            })
            .collect();
        Some(build(self.labels.clone(), &self.partition, &arcs).expect("enumerated orientation"))
    }
}

fn generated_partition(part_sizes: &[usize]) -> Result<(Partition, Vec<String>, Vec<usize>)> {
    let parts: Vec<(String, Vec<String>)> = part_sizes
        .iter()
        .enumerate()
        .map(|(i, &sz)| {
            let name = format!("P{}", i + 1);
            let members = (1..=sz).map(|j| format!("p{}v{}", i + 1, j)).collect();
            (name, members)
        })
        .collect();
    let partition = Partition::new(parts)?;
    let labels: Vec<String> = partition.canonical_vertices().map(String::from).collect();
    let mut part_of = Vec::with_capacity(labels.len());
    for (p, &sz) in part_sizes.iter().enumerate() {
        part_of.extend(std::iter::repeat_n(p, sz));
    }
    Ok((partition, labels, part_of))
}

/// Cross pairs `(u, v)`, `u < v`, in lexicographic canonical order.
fn cross_pairs(part_of: &[usize]) -> Vec<(usize, usize)> {
    let n = part_of.len();
    let mut pairs = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if part_of[u] != part_of[v] {
                pairs.push((u, v));
            }
        }
    }
    pairs
}

fn build(
    labels: Vec<String>,
    partition: &Partition,
    arcs: &[(usize, usize)],
) -> Result<MultipartiteTournament> {
    let named: Vec<(&str, &str)> = arcs
        .iter()
        .map(|&(u, v)| (labels[u].as_str(), labels[v].as_str()))
        .collect();
    let digraph = Digraph::new(labels.clone(), &named)?;
    MultipartiteTournament::validate(&digraph, partition)
}

fn splitmix64(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9E37_79B9_7F4A_7C15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validate_fixture_partitions() {
        let t = MultipartiteTournament::fixture(Fixture::T3);
        assert_eq!(t.part_count(), 3);
        assert_eq!(t.part_sizes(), vec![1, 1, 1]);

        let s = MultipartiteTournament::fixture(Fixture::Star5);
        assert!(s.digraph().sink_mask().is_empty());

        let k = MultipartiteTournament::fixture(Fixture::Sink4);
        let sinks = k.digraph().sink_mask();
        assert_eq!(sinks.len(), 1);
        let sink = sinks.first().unwrap();
        assert_eq!(k.digraph().label(sink), "s");
        assert_eq!(k.part_of(sink), 0);
    }

    #[test]
    fn validate_reports_first_violation() {
        let partition = Partition::new(vec![
            ("X1", vec!["a"]),
            ("X2", vec!["b"]),
            ("X3", vec!["c"]),
        ])
        .unwrap();
        let missing = Digraph::new(vec!["a", "b", "c"], &[("a", "b"), ("b", "c")]).unwrap();
        assert_eq!(
            MultipartiteTournament::validate(&missing, &partition),
            Err(Error::MissingCrossArc("a".into(), "c".into()))
        );
        let doubled = Digraph::new(
            vec!["a", "b", "c"],
            &[("a", "b"), ("b", "c"), ("c", "a"), ("a", "c")],
        )
        .unwrap();
        assert_eq!(
            MultipartiteTournament::validate(&doubled, &partition),
            Err(Error::DoubleOrientation("a".into(), "c".into()))
        );

        let two = Partition::new(vec![("X1", vec!["a"]), ("X2", vec!["b"])]).unwrap();
        let d = Digraph::new(vec!["a", "b"], &[("a", "b")]).unwrap();
        assert_eq!(
            MultipartiteTournament::validate(&d, &two),
            Err(Error::TooFewParts(2))
        );

        let intra = Partition::new(vec![
            ("X1", vec!["a", "b"]),
            ("X2", vec!["c"]),
            ("X3", vec!["d"]),
        ])
        .unwrap();
        let d = Digraph::new(
            vec!["a", "b", "c", "d"],
            &[
                ("a", "b"),
                ("a", "c"),
                ("a", "d"),
                ("b", "c"),
                ("b", "d"),
                ("c", "d"),
            ],
        )
        .unwrap();
        assert_eq!(
            MultipartiteTournament::validate(&d, &intra),
            Err(Error::IntraPartArc("a".into(), "b".into()))
        );
    }

    #[test]
    fn partition_rejects_empty_and_overlap() {
        assert_eq!(
            Partition::new(vec![("X1", vec![]), ("X2", vec!["b"])]),
            Err(Error::EmptyPart("X1".into()))
        );
        assert_eq!(
            Partition::new(vec![("X1", vec!["a"]), ("X2", vec!["a"])]),
            Err(Error::DuplicateVertex("a".into()))
        );
        assert_eq!(
            Partition::new(vec![("X1", vec!["a"]), ("X1", vec!["b"])]),
            Err(Error::DuplicatePartName("X1".into()))
        );
    }

    #[test]
    fn random_is_deterministic_with_expected_arc_count() {
        let a = MultipartiteTournament::random(&[2, 2, 1], 42).unwrap();
        let b = MultipartiteTournament::random(&[2, 2, 1], 42).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.digraph().arc_count(), 8);
        assert_eq!(
            MultipartiteTournament::random(&[3, 1], 7),
            Err(Error::TooFewParts(2))
        );
        let c = MultipartiteTournament::random(&[2, 2, 1], 43).unwrap();
        assert_eq!(c.digraph().arc_count(), 8);
    }

    #[test]
    fn coin_is_roughly_fair_per_pair() {
        // 12 cross pairs for [2,2,2]; each must come out "forward" in
        // 40..=60% of 1000 seeds.
        let sizes = [2usize, 2, 2];
        let probe = MultipartiteTournament::random(&sizes, 0).unwrap();
        let n = probe.vertex_count();
        let mut forward = vec![0usize; n * n];
        for seed in 0..1000u64 {
            let t = MultipartiteTournament::random(&sizes, seed).unwrap();
            for (u, v) in t.digraph().arcs() {
                if u < v {
                    forward[u * n + v] += 1;
                }
            }
        }
        for u in 0..n {
            for v in u + 1..n {
                if probe.part_of(u) != probe.part_of(v) {
                    let f = forward[u * n + v];
                    assert!((400..=600).contains(&f), "pair ({u},{v}): {f}");
                }
            }
        }
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(
            MultipartiteTournament::enumerate(&[1, 1, 1])
                .unwrap()
                .count(),
            8
        );
        assert_eq!(
            MultipartiteTournament::enumerate(&[2, 1, 1])
                .unwrap()
                .count(),
            32
        );
        assert_eq!(
            MultipartiteTournament::enumerate(&[3, 3, 3]).err(),
            Some(Error::EnumerationTooLarge(27))
        );
    }

    #[test]
    fn enumeration_is_exhaustive_and_duplicate_free() {
        let mut seen = std::collections::HashSet::new();
        for t in MultipartiteTournament::enumerate(&[2, 1, 1]).unwrap() {
            let key: Vec<(usize, usize)> = t.digraph().arcs().collect();
            assert!(seen.insert(key));
        }
        assert_eq!(seen.len(), 32);
    }

    /// Strong connectivity by double reachability sweep; test-local oracle.
    fn strongly_connected(t: &MultipartiteTournament) -> bool {
        let d = t.digraph();
        let n = d.vertex_count();
        let reach = |forward: bool| {
            let mut seen = vec![false; n];
            let mut stack = vec![0usize];
            seen[0] = true;
            while let Some(u) = stack.pop() {
                let mask = if forward { d.out_mask(u) } else { d.in_mask(u) };
                for v in mask.iter() {
                    if !seen[v] {
                        seen[v] = true;
                        stack.push(v);
                    }
                }
            }
            seen.into_iter().all(|b| b)
        };
        reach(true) && reach(false)
    }

    #[test]
    fn triangle_enumeration_has_two_strong_orientations() {
        let strong = MultipartiteTournament::enumerate(&[1, 1, 1])
            .unwrap()
            .filter(strongly_connected)
            .count();
        assert_eq!(strong, 2);
    }
}
