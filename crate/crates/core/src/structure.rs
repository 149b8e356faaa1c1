//! Tight/loose classification, the block decomposition of the competition
//! graph's adjacency matrix, and the exact combinatorial quantities bounded
//! by the structure theorems (diameters, domination number, maximum
//! anti-competing sets).

use crate::bitset::VertexSet;
use crate::competition::SimpleGraph;
use crate::error::{Error, Result};
use crate::tournament::MultipartiteTournament;

/// Whether a partite set induces a clique in the competition graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PartFlag {
    Competing,
    NonCompeting,
}

/// Verdict for one determined block of the adjacency-matrix decomposition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockVerdict {
    /// Name of the part designated as the distinguished non-competing part.
    pub designation: String,
    /// Block identifier, e.g. `F(P2) x X(P3)`.
    pub block: String,
    /// Expected pattern: `O`, `J`, or `J-I`.
    pub expected: String,
    pub pass: bool,
}

/// Everything the structure theorems say about one tournament.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureReport {
    /// Sinks, canonical order.
    pub sinks: Vec<String>,
    /// Per part: (name, flag).
    pub part_flags: Vec<(String, PartFlag)>,
    /// Per part: (name, vertices whose whole nonempty out-neighborhood lies
    /// in that part), canonical order.
    pub f_sets: Vec<(String, Vec<String>)>,
    /// Leftover of the designated non-competing part after removing sinks
    /// and all F-sets; `None` when the tournament is tight.
    pub x1_star: Option<Vec<String>>,
    pub loose: bool,
    /// Empty when the tournament is tight.
    pub block_verdicts: Vec<BlockVerdict>,
}

/// Sinks of the tournament, canonical order.
pub fn sinks(d: &MultipartiteTournament) -> Vec<String> {
    d.digraph()
        .sink_mask()
        .iter()
        .map(|i| d.digraph().label(i).to_string())
        .collect()
}

/// Aligns `g`'s adjacency onto `d`'s canonical vertex indices.
fn aligned_adjacency(d: &MultipartiteTournament, g: &SimpleGraph) -> Result<Vec<VertexSet>> {
    let dg = d.digraph();
    let n = dg.vertex_count();
    if g.vertex_count() != n {
        return Err(Error::VertexSetMismatch);
    }
    let mut to_d = Vec::with_capacity(n);
    for gi in 0..n {
        match dg.index_of(g.label(gi)) {
            Some(di) => to_d.push(di),
            None => return Err(Error::VertexSetMismatch),
        }
    }
    let mut adj = vec![VertexSet::empty(n); n];
    for (gu, gv) in g.edges() {
        let (du, dv) = (to_d[gu], to_d[gv]);
        adj[du].insert(dv);
        adj[dv].insert(du);
    }
    Ok(adj)
}

fn is_clique(adj: &[VertexSet], members: &VertexSet) -> bool {
    members.iter().all(|u| {
        let mut rest = members.minus(&adj[u]);
        rest.remove(u);
        rest.is_empty()
    })
}

/// Flags each part as competing (induces a clique in `g`) or not, plus the
/// loose verdict. `g` must be the competition graph of `d`.
pub fn classify_parts(
    d: &MultipartiteTournament,
    g: &SimpleGraph,
) -> Result<(Vec<PartFlag>, bool)> {
    let adj = aligned_adjacency(d, g)?;
    let flags: Vec<PartFlag> = (0..d.part_count())
        .map(|p| {
            if is_clique(&adj, d.part_mask(p)) {
                PartFlag::Competing
            } else {
                PartFlag::NonCompeting
            }
        })
        .collect();
    let loose = flags.contains(&PartFlag::NonCompeting);
    Ok((flags, loose))
}

/// For every part `X_i`, the set `{v : out(v) nonempty and out(v) inside
/// X_i}`, as index sets over `d`'s canonical order.
pub fn f_sets(d: &MultipartiteTournament) -> Vec<VertexSet> {
    let dg = d.digraph();
    let n = dg.vertex_count();
    (0..d.part_count())
        .map(|p| {
            VertexSet::from_indices(
                n,
                (0..n).filter(|&v| {
                    let out = dg.out_mask(v);
                    !out.is_empty() && out.is_subset_of(d.part_mask(p))
                }),
            )
        })
        .collect()
}

fn all_pairs_adjacent(adj: &[VertexSet], a: &VertexSet, b: &VertexSet) -> bool {
    a.iter().all(|u| {
        let mut want = b.clone();
        want.remove(u);
        want.is_subset_of(&adj[u])
    })
}

/// Stable non-sink pairs inside `part`, canonical order.
fn stable_nonsink_pairs(
    d: &MultipartiteTournament,
    adj: &[VertexSet],
    part: &VertexSet,
) -> Vec<(usize, usize)> {
    let members: Vec<usize> = part.iter().collect();
    let mut out = Vec::new();
    for (k, &a) in members.iter().enumerate() {
        if d.digraph().out_degree(a) == 0 {
            continue;
        }
        for &b in &members[k + 1..] {
            if d.digraph().out_degree(b) > 0 && !adj[a].contains(b) {
                out.push((a, b));
            }
        }
    }
    out
}

/// Checks every determined block of the adjacency-matrix decomposition for
/// each designation of the distinguished non-competing part. When two parts
/// are non-competing, both designations run and both must pass.
pub fn verify_block_structure(
    d: &MultipartiteTournament,
    g: &SimpleGraph,
) -> Result<Vec<BlockVerdict>> {
    let adj = aligned_adjacency(d, g)?;
    let (flags, loose) = classify_parts(d, g)?;
    if !loose {
        return Err(Error::NotLoose);
    }
    let fsets = f_sets(d);
    let sinks = d.digraph().sink_mask();
    let mut verdicts = Vec::new();
    for x1 in (0..d.part_count()).filter(|&p| flags[p] == PartFlag::NonCompeting) {
        run_designation(d, &adj, &fsets, &sinks, x1, &mut verdicts);
    }
    Ok(verdicts)
}

fn run_designation(
    d: &MultipartiteTournament,
    adj: &[VertexSet],
    fsets: &[VertexSet],
    sinks: &VertexSet,
    x1: usize,
    verdicts: &mut Vec<BlockVerdict>,
) {
    let designation = d.part_name(x1).to_string();
    let others: Vec<usize> = (0..d.part_count()).filter(|&p| p != x1).collect();
    let mut push = |block: String, expected: &str, pass: bool| {
        verdicts.push(BlockVerdict {
            designation: designation.clone(),
            block,
            expected: expected.to_string(),
            pass,
        });
    };

    // The rows U, F_i (i != x1), X1* must tile the designated part.
    let mut covered = sinks.clone();
    let mut partition_ok = sinks.is_subset_of(d.part_mask(x1));
    for &i in &others {
        partition_ok &= fsets[i].is_subset_of(d.part_mask(x1));
        covered = covered.union(&fsets[i]);
    }
    let x1_star = d.part_mask(x1).minus(&covered);
    push("row partition".to_string(), "U+F+X1* = X1", partition_ok);

    // U rows: all zero.
    if !sinks.is_empty() {
        push(
            "U x V".to_string(),
            "O",
            sinks.iter().all(|u| adj[u].is_empty()),
        );
    }

    let name = |p: usize| d.part_name(p);
    for (a, &i) in others.iter().enumerate() {
        // F_i x F_j, i != j
        for &j in &others[a + 1..] {
            if !fsets[i].is_empty() && !fsets[j].is_empty() {
                push(
                    format!("F({}) x F({})", name(i), name(j)),
                    "J",
                    all_pairs_adjacent(adj, &fsets[i], &fsets[j]),
                );
            }
        }
        // F_i x X1*
        if !fsets[i].is_empty() && !x1_star.is_empty() {
            push(
                format!("F({}) x X1*", name(i)),
                "J",
                all_pairs_adjacent(adj, &fsets[i], &x1_star),
            );
        }
        // F_i x X_j for j not in {x1, i}
        for &j in &others {
            if j != i && !fsets[i].is_empty() {
                push(
                    format!("F({}) x X({})", name(i), name(j)),
                    "J",
                    all_pairs_adjacent(adj, &fsets[i], d.part_mask(j)),
                );
            }
        }
    }

    // X1* against itself and every other part.
    if x1_star.len() > 1 {
        push(
            "X1* x X1*".to_string(),
            "J-I",
            all_pairs_adjacent(adj, &x1_star, &x1_star),
        );
    }
    if !x1_star.is_empty() {
        for &j in &others {
            push(
                format!("X1* x X({})", name(j)),
                "J",
                all_pairs_adjacent(adj, &x1_star, d.part_mask(j)),
            );
        }
    }

    // X_i x X_j for distinct parts away from the designation.
    for (a, &i) in others.iter().enumerate() {
        for &j in &others[a + 1..] {
            push(
                format!("X({}) x X({})", name(i), name(j)),
                "J",
                all_pairs_adjacent(adj, d.part_mask(i), d.part_mask(j)),
            );
        }
    }

    // Diagonal blocks. When a sink exists or the designated part holds a
    // stable set of size three, everything off the designated part is a
    // clique, so every diagonal must be complete; otherwise the part
    // absorbing the out-neighborhoods of the designated part's stable pairs
    // is left undetermined.
    let forced = !sinks.is_empty() || max_stable_in(adj, d.part_mask(x1)).len() >= 3;
    let exempt: Option<usize> = if forced {
        None
    } else {
        stable_nonsink_pairs(d, adj, d.part_mask(x1))
            .first()
            .and_then(|&(a, b)| {
                d.containing_part(&d.digraph().out_mask(a).union(d.digraph().out_mask(b)))
            })
    };
    for &i in &others {
        if Some(i) == exempt || d.part_mask(i).len() < 2 {
            continue;
        }
        push(
            format!("X({}) x X({})", name(i), name(i)),
            "J-I",
            all_pairs_adjacent(adj, d.part_mask(i), d.part_mask(i)),
        );
    }
}

/// Connected components of `g` with exact diameters, ordered by smallest
/// member. Isolated vertices have diameter 0.
pub fn components_and_diameters(g: &SimpleGraph) -> Vec<(Vec<String>, usize)> {
    let n = g.vertex_count();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        // gather the component
        let mut comp = vec![s];
        seen[s] = true;
        let mut head = 0;
        while head < comp.len() {
            let u = comp[head];
            head += 1;
            for v in g.adj_mask(u).iter() {
                if !seen[v] {
                    seen[v] = true;
                    comp.push(v);
                }
            }
        }
        comp.sort_unstable();
        let mut diameter = 0;
        for &u in &comp {
            for (v, dist) in bfs_distances(g, u) {
                if comp.binary_search(&v).is_ok() {
                    diameter = diameter.max(dist);
                }
            }
        }
        out.push((
            comp.iter().map(|&i| g.label(i).to_string()).collect(),
            diameter,
        ));
    }
    out
}

fn bfs_distances(g: &SimpleGraph, s: usize) -> Vec<(usize, usize)> {
    let n = g.vertex_count();
    let mut dist = vec![usize::MAX; n];
    dist[s] = 0;
    let mut queue = std::collections::VecDeque::from([s]);
    while let Some(u) = queue.pop_front() {
        for v in g.adj_mask(u).iter() {
            if dist[v] == usize::MAX {
                dist[v] = dist[u] + 1;
                queue.push_back(v);
            }
        }
    }
    (0..n)
        .filter(|&v| dist[v] != usize::MAX)
        .map(|v| (v, dist[v]))
        .collect()
}

const EXACT_SEARCH_CAP: usize = 32;

/// Exact domination number by branch and bound over the first undominated
/// vertex. Deterministic; capped at 32 vertices.
pub fn domination_number(g: &SimpleGraph) -> Result<usize> {
    let n = g.vertex_count();
    if n > EXACT_SEARCH_CAP {
        return Err(Error::InstanceTooLarge(n));
    }
    if n == 0 {
        return Ok(0);
    }
    let closed: Vec<u64> = (0..n)
        .map(|i| {
            let mut m = 1u64 << i;
            for v in g.adj_mask(i).iter() {
                m |= 1 << v;
            }
            m
        })
        .collect();
    let all = if n == 64 { !0 } else { (1u64 << n) - 1 };

    // greedy upper bound
    let mut dominated = 0u64;
    let mut best = 0usize;
    while dominated != all {
        let pick = (0..n)
            .max_by_key(|&i| ((closed[i] & !dominated).count_ones(), std::cmp::Reverse(i)))
            .unwrap();
        dominated |= closed[pick];
        best += 1;
    }

    let max_cover = closed
        .iter()
        .map(|m| m.count_ones() as usize)
        .max()
        .unwrap_or(1);
    fn go(
        closed: &[u64],
        all: u64,
        dominated: u64,
        chosen: usize,
        best: &mut usize,
        max_cover: usize,
    ) {
        if dominated == all {
            *best = (*best).min(chosen);
            return;
        }
        let remaining = (all & !dominated).count_ones() as usize;
        if chosen + remaining.div_ceil(max_cover) >= *best {
            return;
        }
        let v = (all & !dominated).trailing_zeros() as usize;
        // some vertex of N[v] must be chosen
        let mut cands = closed[v];
        while cands != 0 {
            let c = cands.trailing_zeros() as usize;
            cands &= cands - 1;
            go(
                closed,
                all,
                dominated | closed[c],
                chosen + 1,
                best,
                max_cover,
            );
        }
    }
    go(&closed, all, 0, 0, &mut best, max_cover);
    Ok(best)
}

/// Maximum stable set of the graph `adj` restricted to `allowed`,
/// deterministic first-found tie-break in canonical order.
fn max_stable_in(adj: &[VertexSet], allowed: &VertexSet) -> VertexSet {
    let n = allowed.universe();
    let mut best = VertexSet::empty(n);
    let mut current = VertexSet::empty(n);
    fn go(
        adj: &[VertexSet],
        candidates: &VertexSet,
        current: &mut VertexSet,
        best: &mut VertexSet,
    ) {
        if current.len() + candidates.len() <= best.len() {
            return;
        }
        match candidates.first() {
            None => {
                if current.len() > best.len() {
                    *best = current.clone();
                }
            }
            Some(v) => {
                // include v
                let mut rest = candidates.minus(&adj[v]);
                rest.remove(v);
                current.insert(v);
                go(adj, &rest, current, best);
                current.remove(v);
                // exclude v
                let mut without = candidates.clone();
                without.remove(v);
                go(adj, &without, current, best);
            }
        }
    }
    go(adj, allowed, &mut current, &mut best);
    best
}

/// Search scope for [`max_anti_competing_set`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SearchScope {
    /// Any stable set.
    Any,
    /// Stable sets meeting at least two parts.
    CrossPart,
    /// Stable sets inside the part with this index.
    WithinPart(usize),
}

/// A maximum anti-{1,2}-competing set under a scope constraint.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AntiCompetingSetResult {
    /// Canonical order.
    pub best_set: Vec<String>,
    pub size: usize,
    pub crosses_parts: bool,
    /// For a sinkless cross-part search that found size 4: whether the
    /// graph is complete apart from the six pairs inside the set and the
    /// set splits 2 + 2 over two parts.
    pub star_shape_verified: Option<bool>,
}

/// Maximum stable set of `g` (the competition graph of `d`) under `scope`.
/// Exact, deterministic, capped at 32 vertices.
pub fn max_anti_competing_set(
    d: &MultipartiteTournament,
    g: &SimpleGraph,
    scope: SearchScope,
) -> Result<AntiCompetingSetResult> {
    let n = d.vertex_count();
    if n > EXACT_SEARCH_CAP {
        return Err(Error::InstanceTooLarge(n));
    }
    let adj = aligned_adjacency(d, g)?;
    let best = match scope {
        SearchScope::Any => max_stable_in(&adj, &VertexSet::full(n)),
        SearchScope::WithinPart(p) => max_stable_in(&adj, d.part_mask(p)),
        SearchScope::CrossPart => {
            // Force one non-adjacent cross-part pair, then extend.
            let mut best = VertexSet::empty(n);
            for a in 0..n {
                for b in a + 1..n {
                    if d.part_of(a) == d.part_of(b) || adj[a].contains(b) {
                        continue;
                    }
                    let mut candidates = VertexSet::full(n).minus(&adj[a]).minus(&adj[b]);
                    candidates.remove(a);
                    candidates.remove(b);
                    let mut found = max_stable_in(&adj, &candidates);
                    found.insert(a);
                    found.insert(b);
                    if found.len() > best.len() {
                        best = found;
                    }
                }
            }
            best
        }
    };

    let parts_met: std::collections::BTreeSet<usize> = best.iter().map(|v| d.part_of(v)).collect();
    let crosses = parts_met.len() >= 2;
    let sinkless = d.digraph().sink_mask().is_empty();
    let star_shape_verified = if scope == SearchScope::CrossPart && best.len() == 4 && sinkless {
        let inside: Vec<usize> = best.iter().collect();
        let mut non_edges_inside = 0usize;
        let mut non_edges_total = 0usize;
        for (u, adj_u) in adj.iter().enumerate() {
            for v in u + 1..n {
                if !adj_u.contains(v) {
                    non_edges_total += 1;
                    if inside.contains(&u) && inside.contains(&v) {
                        non_edges_inside += 1;
                    }
                }
            }
        }
        let shape = non_edges_inside == 6 && non_edges_total == 6;
        let split: Vec<usize> = parts_met
            .iter()
            .map(|&p| best.intersection(d.part_mask(p)).len())
            .collect();
        Some(shape && split == vec![2, 2])
    } else {
        None
    };

    Ok(AntiCompetingSetResult {
        best_set: best
            .iter()
            .map(|i| d.digraph().label(i).to_string())
            .collect(),
        size: best.len(),
        crosses_parts: crosses,
        star_shape_verified,
    })
}

/// Equal open out- and in-neighborhoods in the digraph.
pub fn true_twins_digraph(d: &MultipartiteTournament, u: &str, v: &str) -> Result<bool> {
    let dg = d.digraph();
    let ui = dg.require(u)?;
    let vi = dg.require(v)?;
    if ui == vi {
        return Err(Error::SameVertex(u.to_string()));
    }
    Ok(dg.out_mask(ui) == dg.out_mask(vi) && dg.in_mask(ui) == dg.in_mask(vi))
}

/// Equal closed neighborhoods in the graph.
pub fn true_twins_graph(g: &SimpleGraph, u: &str, v: &str) -> Result<bool> {
    let ui = g.require(u)?;
    let vi = g.require(v)?;
    if ui == vi {
        return Err(Error::SameVertex(u.to_string()));
    }
    Ok(g.closed_neighborhood(ui) == g.closed_neighborhood(vi))
}

pub(crate) fn true_twins_digraph_idx(d: &MultipartiteTournament, u: usize, v: usize) -> bool {
    let dg = d.digraph();
    dg.out_mask(u) == dg.out_mask(v) && dg.in_mask(u) == dg.in_mask(v)
}

pub(crate) fn true_twins_graph_idx(adj: &[VertexSet], u: usize, v: usize) -> bool {
    let mut cu = adj[u].clone();
    cu.insert(u);
    let mut cv = adj[v].clone();
    cv.insert(v);
    cu == cv
}

pub(crate) fn max_stable_set(adj: &[VertexSet], allowed: &VertexSet) -> VertexSet {
    max_stable_in(adj, allowed)
}

/// All maximal stable sets of the graph, by pivoting enumeration over the
/// complement; capped at `cap` vertices. Output order is deterministic.
pub fn maximal_stable_sets(g: &SimpleGraph, cap: usize) -> Result<Vec<VertexSet>> {
    let n = g.vertex_count();
    if n > cap {
        return Err(Error::InstanceTooLarge(n));
    }
    let adj: Vec<VertexSet> = (0..n).map(|i| g.adj_mask(i).clone()).collect();
    Ok(maximal_stable_sets_in(&adj, &VertexSet::full(n)))
}

/// Maximal stable sets of the subgraph induced on `allowed` (maximal within
/// `allowed`, not within the whole graph).
pub(crate) fn maximal_stable_sets_in(adj: &[VertexSet], allowed: &VertexSet) -> Vec<VertexSet> {
    let n = allowed.universe();
    // maximal stable sets = maximal cliques of the complement
    let comp: Vec<VertexSet> = (0..n)
        .map(|i| {
            let mut m = adj[i].complement().intersection(allowed);
            m.remove(i);
            m
        })
        .collect();
    let mut out = Vec::new();
    let mut r = VertexSet::empty(n);
    bron_kerbosch(
        &comp,
        &mut r,
        allowed.clone(),
        VertexSet::empty(n),
        &mut out,
    );
    out.sort_by_key(|s| s.iter().collect::<Vec<_>>());
    out
}

fn bron_kerbosch(
    adj: &[VertexSet],
    r: &mut VertexSet,
    p: VertexSet,
    x: VertexSet,
    out: &mut Vec<VertexSet>,
) {
    if p.is_empty() && x.is_empty() {
        out.push(r.clone());
        return;
    }
    let pivot = p
        .union(&x)
        .iter()
        .max_by_key(|&u| (p.intersection(&adj[u]).len(), std::cmp::Reverse(u)))
        .unwrap();
    let mut p = p;
    let mut x = x;
    let candidates: Vec<usize> = p.minus(&adj[pivot]).iter().collect();
    for v in candidates {
        r.insert(v);
        bron_kerbosch(
            adj,
            r,
            p.intersection(&adj[v]),
            x.intersection(&adj[v]),
            out,
        );
        r.remove(v);
        p.remove(v);
        x.insert(v);
    }
}

/// Builds the full structure report for one tournament.
pub fn build_structure_report(
    d: &MultipartiteTournament,
    g: &SimpleGraph,
) -> Result<StructureReport> {
    let (flags, loose) = classify_parts(d, g)?;
    let fsets = f_sets(d);
    let sink_mask = d.digraph().sink_mask();
    let label = |i: usize| d.digraph().label(i).to_string();
    let x1_star = if loose {
        let x1 = (0..d.part_count())
            .find(|&p| flags[p] == PartFlag::NonCompeting)
            .expect("loose");
        let mut covered = sink_mask.clone();
        for (i, f) in fsets.iter().enumerate() {
            if i != x1 {
                covered = covered.union(f);
            }
        }
        Some(d.part_mask(x1).minus(&covered).iter().map(label).collect())
    } else {
        None
    };
    let block_verdicts = if loose {
        verify_block_structure(d, g)?
    } else {
        Vec::new()
    };
    Ok(StructureReport {
        sinks: sinks(d),
        part_flags: (0..d.part_count())
            .map(|p| (d.part_name(p).to_string(), flags[p]))
            .collect(),
        f_sets: fsets
            .iter()
            .enumerate()
            .map(|(p, f)| (d.part_name(p).to_string(), f.iter().map(label).collect()))
            .collect(),
        x1_star,
        loose,
        block_verdicts,
    })
}
