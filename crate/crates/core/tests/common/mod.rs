//! Independent test oracles. Everything here recomputes properties from
//! first principles (breadth-first search, triple enumeration, exhaustive
//! ordering search) so the library's closed forms and searches are checked
//! against a second route.

// Each integration test compiles this module separately and uses a subset.
#![allow(dead_code)]

use mtclab_core::{Digraph, SimpleGraph};

/// Whether a directed path from `u` to `w` of length at most `bound` exists
/// in `d` minus `excluded`, by plain breadth-first search.
pub fn bfs_distance_at_most(
    d: &Digraph,
    u: usize,
    w: usize,
    excluded: Option<usize>,
    bound: usize,
) -> bool {
    let n = d.vertex_count();
    let mut dist = vec![usize::MAX; n];
    if Some(u) == excluded {
        return false;
    }
    dist[u] = 0;
    let mut queue = std::collections::VecDeque::from([u]);
    while let Some(x) = queue.pop_front() {
        if dist[x] >= bound {
            continue;
        }
        for y in d.out_mask(x).iter() {
            if Some(y) != excluded && dist[y] == usize::MAX {
                dist[y] = dist[x] + 1;
                queue.push_back(y);
            }
        }
    }
    dist[w] <= bound
}

fn reachable_avoiding(g: &SimpleGraph, a: usize, b: usize, avoid: &[bool]) -> bool {
    if avoid[a] || avoid[b] {
        return false;
    }
    let n = g.vertex_count();
    let mut seen = vec![false; n];
    seen[a] = true;
    let mut stack = vec![a];
    while let Some(u) = stack.pop() {
        if u == b {
            return true;
        }
        for v in g.adj_mask(u).iter() {
            if !seen[v] && !avoid[v] {
                seen[v] = true;
                stack.push(v);
            }
        }
    }
    false
}

/// Definitional asteroidal-triple test over all vertex triples.
pub fn brute_force_asteroidal_triple(g: &SimpleGraph) -> Option<[usize; 3]> {
    let n = g.vertex_count();
    let closed = |z: usize| {
        let mut avoid = vec![false; n];
        avoid[z] = true;
        for v in g.adj_mask(z).iter() {
            avoid[v] = true;
        }
        avoid
    };
    for x in 0..n {
        for y in x + 1..n {
            if g.has_edge_idx(x, y) {
                continue;
            }
            for z in y + 1..n {
                if g.has_edge_idx(x, z) || g.has_edge_idx(y, z) {
                    continue;
                }
                if reachable_avoiding(g, x, y, &closed(z))
                    && reachable_avoiding(g, x, z, &closed(y))
                    && reachable_avoiding(g, y, z, &closed(x))
                {
                    return Some([x, y, z]);
                }
            }
        }
    }
    None
}

/// Exhaustive interval-model construction: search all vertex orderings for
/// one whose every ordered triple i < j < k with edge (i,k) also has edge
/// (i,j); from such an ordering an explicit interval family is built and
/// verified against the graph. Existence of a verified model decides
/// intervalness.
pub fn brute_force_interval_model(g: &SimpleGraph) -> Option<Vec<(usize, usize)>> {
    let n = g.vertex_count();
    assert!(n <= 8, "ordering search is factorial");
    let mut order: Vec<usize> = (0..n).collect();
    let mut model = None;
    permute(&mut order, 0, &mut |order| {
        if model.is_some() {
            return;
        }
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    if g.has_edge_idx(order[i], order[k]) && !g.has_edge_idx(order[i], order[j]) {
                        return;
                    }
                }
            }
        }
        // left endpoint = position, right endpoint = last adjacent position
        let mut intervals = vec![(0usize, 0usize); n];
        for i in 0..n {
            let mut right = i;
            for j in i + 1..n {
                if g.has_edge_idx(order[i], order[j]) {
                    right = j;
                }
            }
            intervals[order[i]] = (i, right);
        }
        // verify the intersection graph is exactly g
        for u in 0..n {
            for v in u + 1..n {
                let (a1, b1) = intervals[u];
                let (a2, b2) = intervals[v];
                let meet = a1.max(a2) <= b1.min(b2);
                if meet != g.has_edge_idx(u, v) {
                    return;
                }
            }
        }
        model = Some(intervals);
    });
    model
}

fn permute(items: &mut Vec<usize>, k: usize, visit: &mut impl FnMut(&Vec<usize>)) {
    if k == items.len() {
        visit(items);
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permute(items, k + 1, visit);
        items.swap(k, i);
    }
}
