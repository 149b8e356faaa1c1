//! A registry of machine-checkable statements about multipartite tournaments
//! and their (1,2)-step competition graphs, plus a deterministic fuzzer that
//! runs the whole catalog over generated instances and reports replayable
//! counterexamples.

use std::cell::OnceCell;
use std::collections::BTreeMap;

use crate::bitset::VertexSet;
use crate::competition::{
    adjacent_fast_idx, adjacent_oracle_idx, competition_graph, one_two_competes_idx, Method,
    SimpleGraph,
};
use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::mtd::serialize_mtd;
use crate::recognition::{
    all_holes, asteroidal_triples_idx, is_c4_free, is_chordal, is_interval, HOLE_ENUMERATION_CAP,
};
use crate::structure::{
    classify_parts, domination_number, f_sets, max_anti_competing_set, max_stable_set,
    maximal_stable_sets, maximal_stable_sets_in, true_twins_digraph_idx, true_twins_graph_idx,
    verify_block_structure, PartFlag, SearchScope,
};
use crate::tournament::MultipartiteTournament;

/// Verdict of one catalog entry on one instance.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
    NotApplicable,
    SkippedSize,
}

/// Replayable evidence for a FAIL.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    /// MTD v1 serialization of the instance.
    pub mtd: String,
    /// The violating tuple, human-readable.
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckResult {
    pub id: String,
    pub verdict: Verdict,
    pub counterexample: Option<Counterexample>,
    /// Side observations that carry no verdict (e.g. which of the two
    /// admissible domination values was attained).
    pub note: Option<String>,
}

enum Hyp {
    Holds,
    No,
    Skipped,
}

enum Conc {
    Pass(Option<String>),
    Fail(String, Option<String>),
    Skipped,
}

/// One catalog entry: a hypothesis and a conclusion over a prepared
/// instance context. The runner never evaluates the conclusion when the
/// hypothesis fails, so a check cannot FAIL outside its hypothesis.
pub struct TheoremCheck {
    pub id: &'static str,
    pub description: &'static str,
    hypothesis: fn(&Ctx) -> Hyp,
    conclusion: fn(&Ctx) -> Conc,
}

/// Shared per-instance state: the tournament, its competition graph
/// (closed form, oracle-verified on small instances), classification data,
/// and lazily computed enumerations.
struct Ctx<'a> {
    d: &'a MultipartiteTournament,
    g: SimpleGraph,
    n: usize,
    sinks: VertexSet,
    loose: bool,
    noncompeting: Vec<usize>,
    fsets: Vec<VertexSet>,
    holes: OnceCell<Option<Vec<Vec<usize>>>>,
    stables: OnceCell<Option<Vec<VertexSet>>>,
    dicycles: OnceCell<Option<Vec<Vec<usize>>>>,
}

const ORACLE_VERIFY_CAP: usize = 12;
const MAXIMAL_SET_CAP: usize = 16;
const DICYCLE_CAP: usize = 12;

impl<'a> Ctx<'a> {
    fn new(d: &'a MultipartiteTournament) -> Ctx<'a> {
        let g = competition_graph(d, Method::Fast);
        let n = d.vertex_count();
        if n <= ORACLE_VERIFY_CAP {
            let oracle = competition_graph(d, Method::Oracle);
            assert_eq!(
                g.edges(),
                oracle.edges(),
                "closed-form and oracle adjacency disagree on:\n{}",
                serialize_mtd(d)
            );
        }
        let (flags, loose) = classify_parts(d, &g).expect("graph built from d");
        let noncompeting = (0..d.part_count())
            .filter(|&p| flags[p] == PartFlag::NonCompeting)
            .collect();
        Ctx {
            d,
            n,
            sinks: d.digraph().sink_mask(),
            loose,
            noncompeting,
            fsets: f_sets(d),
            g,
            holes: OnceCell::new(),
            stables: OnceCell::new(),
            dicycles: OnceCell::new(),
        }
    }

    fn dg(&self) -> &Digraph {
        self.d.digraph()
    }

    fn out(&self, v: usize) -> &VertexSet {
        self.dg().out_mask(v)
    }

    fn nonsink(&self, v: usize) -> bool {
        !self.out(v).is_empty()
    }

    fn adjacent(&self, u: usize, v: usize) -> bool {
        self.g.has_edge_idx(u, v)
    }

    fn adj_masks(&self) -> Vec<VertexSet> {
        (0..self.n).map(|i| self.g.adj_mask(i).clone()).collect()
    }

    fn name(&self, v: usize) -> &str {
        self.dg().label(v)
    }

    fn names(&self, s: &VertexSet) -> String {
        s.iter().map(|v| self.name(v)).collect::<Vec<_>>().join(",")
    }

    fn sole_out(&self, u: usize, v: usize) -> bool {
        let out = self.out(u);
        out.len() == 1 && out.contains(v)
    }

    /// All holes of length >= 4, or `None` past the enumeration cap.
    fn holes(&self) -> Option<&Vec<Vec<usize>>> {
        self.holes
            .get_or_init(|| {
                if self.n > HOLE_ENUMERATION_CAP {
                    None
                } else {
                    Some(all_holes(&self.g, 4).expect("capped"))
                }
            })
            .as_ref()
    }

    fn holes_of_len(&self, want: impl Fn(usize) -> bool) -> Option<Vec<&Vec<usize>>> {
        self.holes()
            .map(|hs| hs.iter().filter(|h| want(h.len())).collect())
    }

    /// All maximal stable sets, or `None` past the enumeration cap.
    fn maximal_stables(&self) -> Option<&Vec<VertexSet>> {
        self.stables
            .get_or_init(|| maximal_stable_sets(&self.g, MAXIMAL_SET_CAP).ok())
            .as_ref()
    }

    /// Directed 3- and 4-cycles of the tournament, or `None` past the cap.
    fn directed_cycles(&self) -> Option<&Vec<Vec<usize>>> {
        self.dicycles
            .get_or_init(|| {
                if self.n > DICYCLE_CAP {
                    return None;
                }
                let dg = self.dg();
                let mut out = Vec::new();
                for a in 0..self.n {
                    for b in dg.out_mask(a).iter().filter(|&b| b > a) {
                        for c in dg.out_mask(b).intersection(dg.in_mask(a)).iter() {
                            if c > a {
                                out.push(vec![a, b, c]);
                            }
                        }
                    }
                }
                for a in 0..self.n {
                    for b in dg.out_mask(a).iter().filter(|&b| b > a) {
                        for d2 in dg.in_mask(a).iter().filter(|&d2| d2 > a && d2 != b) {
                            for c in dg.out_mask(b).intersection(dg.in_mask(d2)).iter() {
                                if c > a && c != b && c != d2 {
                                    out.push(vec![a, b, c, d2]);
                                }
                            }
                        }
                    }
                }
                Some(out)
            })
            .as_ref()
    }

    /// Pairwise non-adjacent triples inside `mask`, canonical order.
    fn stable_triples_in(&self, mask: &VertexSet) -> Vec<[usize; 3]> {
        let members: Vec<usize> = mask.iter().collect();
        let mut out = Vec::new();
        for (i, &a) in members.iter().enumerate() {
            for (j, &b) in members.iter().enumerate().skip(i + 1) {
                if self.adjacent(a, b) {
                    continue;
                }
                for &c in &members[j + 1..] {
                    if !self.adjacent(a, c) && !self.adjacent(b, c) {
                        out.push([a, b, c]);
                    }
                }
            }
        }
        out
    }

    fn max_stable_in_part(&self, p: usize) -> VertexSet {
        max_stable_set(&self.adj_masks(), self.d.part_mask(p))
    }

    /// Parts that can play the role of the undetermined diagonal for a
    /// designation: those absorbing the out-neighborhoods of some stable
    /// non-sink pair of the designated part.
    fn qualifying_parts(&self, x1: usize) -> Vec<usize> {
        if !self.sinks.is_empty() {
            return (0..self.d.part_count()).filter(|&p| p != x1).collect();
        }
        let members: Vec<usize> = self.d.part_mask(x1).iter().collect();
        let mut parts = std::collections::BTreeSet::new();
        for (i, &a) in members.iter().enumerate() {
            if !self.nonsink(a) {
                continue;
            }
            for &b in &members[i + 1..] {
                if !self.nonsink(b) || self.adjacent(a, b) {
                    continue;
                }
                if let Some(p) = self.d.containing_part(&self.out(a).union(self.out(b))) {
                    parts.insert(p);
                }
            }
        }
        parts.into_iter().collect()
    }
}

fn always(_: &Ctx) -> Hyp {
    Hyp::Holds
}

fn loose(ctx: &Ctx) -> Hyp {
    if ctx.loose {
        Hyp::Holds
    } else {
        Hyp::No
    }
}

fn loose_sinkless(ctx: &Ctx) -> Hyp {
    if ctx.loose && ctx.sinks.is_empty() {
        Hyp::Holds
    } else {
        Hyp::No
    }
}

fn loose_with_holes(ctx: &Ctx, want: fn(usize) -> bool) -> Hyp {
    if !ctx.loose {
        return Hyp::No;
    }
    match ctx.holes_of_len(want) {
        None => Hyp::Skipped,
        Some(hs) if hs.is_empty() => Hyp::No,
        Some(_) => Hyp::Holds,
    }
}

fn pass() -> Conc {
    Conc::Pass(None)
}

fn fail(detail: String) -> Conc {
    Conc::Fail(detail, None)
}

/// Iterates `body` over items, short-circuiting on the first failure.
fn forall<T>(items: impl IntoIterator<Item = T>, body: impl Fn(T) -> Option<String>) -> Conc {
    for item in items {
        if let Some(detail) = body(item) {
            return fail(detail);
        }
    }
    pass()
}

fn same_part_nonsink_pairs(ctx: &Ctx) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for u in 0..ctx.n {
        for v in u + 1..ctx.n {
            if ctx.d.part_of(u) == ctx.d.part_of(v) && ctx.nonsink(u) && ctx.nonsink(v) {
                out.push((u, v));
            }
        }
    }
    out
}

fn cross_part_nonsink_pairs(ctx: &Ctx) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for u in 0..ctx.n {
        for v in u + 1..ctx.n {
            if ctx.d.part_of(u) != ctx.d.part_of(v) && ctx.nonsink(u) && ctx.nonsink(v) {
                out.push((u, v));
            }
        }
    }
    out
}

fn p_same_1(ctx: &Ctx) -> Conc {
    forall(same_part_nonsink_pairs(ctx), |(u, v)| {
        let dg = ctx.dg();
        let competing = (0..ctx.n).any(|w| {
            w != u
                && w != v
                && dg.distance_at_most_idx(u, w, Some(v), 1)
                && dg.distance_at_most_idx(v, w, Some(u), 1)
        });
        let disjoint = ctx.out(u).is_disjoint(ctx.out(v));
        if competing == disjoint {
            Some(format!(
                "pair ({},{}): competing={} but disjoint out-neighborhoods={}",
                ctx.name(u),
                ctx.name(v),
                competing,
                disjoint
            ))
        } else {
            None
        }
    })
}

fn p_same_2(ctx: &Ctx) -> Conc {
    forall(same_part_nonsink_pairs(ctx), |(u, v)| {
        let steps = one_two_competes_idx(ctx.d, u, v).is_some();
        let trapped = ctx
            .d
            .containing_part(&ctx.out(u).union(ctx.out(v)))
            .is_some();
        if steps == trapped {
            Some(format!(
                "pair ({},{}): two-step competing={} but joint out-neighborhood in one part={}",
                ctx.name(u),
                ctx.name(v),
                steps,
                trapped
            ))
        } else {
            None
        }
    })
}

fn p_same_3(ctx: &Ctx) -> Conc {
    forall(same_part_nonsink_pairs(ctx), |(u, v)| {
        let adjacent = adjacent_oracle_idx(ctx.d, u, v);
        let disjoint = ctx.out(u).is_disjoint(ctx.out(v));
        let trapped = ctx
            .d
            .containing_part(&ctx.out(u).union(ctx.out(v)))
            .is_some();
        if !adjacent == (disjoint && trapped) {
            None
        } else {
            Some(format!(
                "pair ({},{}): adjacent={} disjoint={} trapped={}",
                ctx.name(u),
                ctx.name(v),
                adjacent,
                disjoint,
                trapped
            ))
        }
    })
}

fn p_diff(ctx: &Ctx) -> Conc {
    let mut arcs = Vec::new();
    for (u, v) in cross_part_nonsink_pairs(ctx) {
        if ctx.dg().has_arc_idx(u, v) {
            arcs.push((u, v));
        } else {
            arcs.push((v, u));
        }
    }
    forall(arcs, |(u, v)| {
        let adjacent = adjacent_oracle_idx(ctx.d, u, v);
        let sole = ctx.sole_out(u, v);
        let escape = ctx.out(u).is_disjoint(ctx.out(v))
            && ctx.d.containing_part(ctx.out(v)).is_some_and(|p| {
                let mut trap = ctx.d.part_mask(p).clone();
                trap.insert(v);
                ctx.out(u).is_subset_of(&trap)
            });
        if !adjacent == (sole || escape) {
            None
        } else {
            Some(format!(
                "arc ({},{}): adjacent={} sole-out={} trapped={}",
                ctx.name(u),
                ctx.name(v),
                adjacent,
                sole,
                escape
            ))
        }
    })
}

fn c_adj(ctx: &Ctx) -> Conc {
    forall(cross_part_nonsink_pairs(ctx), |(u, v)| {
        let by_conditions = adjacent_fast_idx(ctx.d, u, v);
        let by_oracle = adjacent_oracle_idx(ctx.d, u, v);
        if by_conditions == by_oracle {
            None
        } else {
            Some(format!(
                "pair ({},{}): closed form={} oracle={}",
                ctx.name(u),
                ctx.name(v),
                by_conditions,
                by_oracle
            ))
        }
    })
}

fn p_sub_1(ctx: &Ctx) -> Conc {
    let adj = ctx.adj_masks();
    for &x in &ctx.noncompeting {
        let part = ctx.d.part_mask(x);
        if part.len() > MAXIMAL_SET_CAP {
            return Conc::Skipped;
        }
        for s in maximal_stable_sets_in(&adj, part) {
            let nonsinks = s.iter().filter(|&v| ctx.nonsink(v)).count();
            if s.len() < 2 || nonsinks < 2 {
                // sets that are one non-sink plus sinks (or smaller) are
                // outside the hypothesis; all-sink sets are vacuous
                continue;
            }
            let mut union = VertexSet::empty(ctx.n);
            for v in s.iter() {
                union = union.union(ctx.out(v));
            }
            if ctx.d.containing_part(&union).is_none() {
                return fail(format!(
                    "stable set {{{}}} in part {} has joint out-neighborhood {{{}}} meeting two parts",
                    ctx.names(&s),
                    ctx.d.part_name(x),
                    ctx.names(&union)
                ));
            }
        }
    }
    pass()
}

fn p_sub_2(ctx: &Ctx) -> Conc {
    for &x in &ctx.noncompeting {
        let outside: Vec<usize> = ctx.d.part_mask(x).complement().iter().collect();
        for t in ctx.stable_triples_in(ctx.d.part_mask(x)) {
            let tset = VertexSet::from_indices(ctx.n, t);
            for (i, &p) in outside.iter().enumerate() {
                for &q in &outside[i + 1..] {
                    if ctx
                        .out(p)
                        .intersection(ctx.out(q))
                        .intersection(&tset)
                        .is_empty()
                    {
                        return fail(format!(
                            "pair ({},{}) outside part {} has no common out-neighbor in stable triple {{{}}}",
                            ctx.name(p),
                            ctx.name(q),
                            ctx.d.part_name(x),
                            ctx.names(&tset)
                        ));
                    }
                }
            }
        }
    }
    pass()
}

fn s_sink(ctx: &Ctx) -> Conc {
    forall(ctx.noncompeting.clone(), |x| {
        if ctx.sinks.is_subset_of(ctx.d.part_mask(x)) {
            None
        } else {
            Some(format!(
                "sink outside non-competing part {}: {{{}}}",
                ctx.d.part_name(x),
                ctx.names(&ctx.sinks.minus(ctx.d.part_mask(x)))
            ))
        }
    })
}

fn p_dist(ctx: &Ctx) -> Conc {
    for &x in &ctx.noncompeting {
        for v in ctx.d.part_mask(x).iter() {
            if !ctx.nonsink(v) || ctx.d.containing_part(ctx.out(v)).is_some() {
                continue;
            }
            for y in 0..ctx.n {
                if y != v && ctx.nonsink(y) && !ctx.adjacent(v, y) {
                    return fail(format!(
                        "{} in part {} has out-neighbors in two parts but misses non-sink {}",
                        ctx.name(v),
                        ctx.d.part_name(x),
                        ctx.name(y)
                    ));
                }
            }
        }
    }
    pass()
}

fn t_nns_1(ctx: &Ctx) -> Conc {
    for &x1 in &ctx.noncompeting {
        for p in (0..ctx.d.part_count()).filter(|&p| p != x1) {
            if !ctx.fsets[p].is_subset_of(ctx.d.part_mask(x1)) {
                return fail(format!(
                    "vertices with out-neighborhood inside {} escape designated part {}: {{{}}}",
                    ctx.d.part_name(p),
                    ctx.d.part_name(x1),
                    ctx.names(&ctx.fsets[p].minus(ctx.d.part_mask(x1)))
                ));
            }
        }
    }
    pass()
}

fn t_nns_2(ctx: &Ctx) -> Conc {
    for &x1 in &ctx.noncompeting {
        for p in ctx.qualifying_parts(x1) {
            let mut rest = VertexSet::empty(ctx.n);
            for i in (0..ctx.d.part_count()).filter(|&i| i != x1 && i != p) {
                rest = rest.union(ctx.d.part_mask(i));
            }
            let members: Vec<usize> = rest.iter().collect();
            for (i, &a) in members.iter().enumerate() {
                for &b in &members[i + 1..] {
                    if !ctx.adjacent(a, b) {
                        return fail(format!(
                            "designation {} / absorber {}: pair ({},{}) away from both is non-adjacent",
                            ctx.d.part_name(x1),
                            ctx.d.part_name(p),
                            ctx.name(a),
                            ctx.name(b)
                        ));
                    }
                }
            }
            for &a in &members {
                for b in ctx.d.part_mask(p).iter() {
                    if !ctx.adjacent(a, b) {
                        return fail(format!(
                            "designation {} / absorber {}: {} misses {} of the absorber",
                            ctx.d.part_name(x1),
                            ctx.d.part_name(p),
                            ctx.name(a),
                            ctx.name(b)
                        ));
                    }
                }
            }
        }
    }
    pass()
}

fn t_nns_3(ctx: &Ctx) -> Conc {
    for &x1 in &ctx.noncompeting {
        let others: Vec<usize> = (0..ctx.d.part_count()).filter(|&p| p != x1).collect();
        for &i in &others {
            for &j in &others {
                if i == j {
                    continue;
                }
                let targets = ctx.fsets[j].union(ctx.d.part_mask(j));
                for x in ctx.fsets[i].iter() {
                    for y in targets.iter() {
                        if x != y && !ctx.adjacent(x, y) {
                            return fail(format!(
                                "designation {}: {} (out-neighborhood in {}) misses {}",
                                ctx.d.part_name(x1),
                                ctx.name(x),
                                ctx.d.part_name(i),
                                ctx.name(y)
                            ));
                        }
                    }
                }
            }
        }
    }
    pass()
}

fn t_nns_4(ctx: &Ctx) -> Conc {
    for &x1 in &ctx.noncompeting {
        for i in (0..ctx.d.part_count()).filter(|&p| p != x1) {
            for x in ctx.fsets[i].iter() {
                for y in ctx.d.part_mask(i).iter() {
                    if x == y {
                        continue;
                    }
                    let nonadjacent = !ctx.adjacent(x, y);
                    let sole = ctx.sole_out(x, y) || ctx.sole_out(y, x);
                    if nonadjacent != sole {
                        return fail(format!(
                            "designation {}: pair ({},{}): non-adjacent={} sole-out-neighbor={}",
                            ctx.d.part_name(x1),
                            ctx.name(x),
                            ctx.name(y),
                            nonadjacent,
                            sole
                        ));
                    }
                }
            }
        }
    }
    pass()
}

fn t_nns_5_hyp(ctx: &Ctx) -> Hyp {
    if !ctx.loose {
        return Hyp::No;
    }
    let fires = ctx
        .noncompeting
        .iter()
        .any(|&x| !ctx.sinks.is_empty() || ctx.max_stable_in_part(x).len() >= 3);
    if fires {
        Hyp::Holds
    } else {
        Hyp::No
    }
}

fn t_nns_5(ctx: &Ctx) -> Conc {
    for &x1 in &ctx.noncompeting {
        if ctx.sinks.is_empty() && ctx.max_stable_in_part(x1).len() < 3 {
            continue;
        }
        let rest: Vec<usize> = ctx.d.part_mask(x1).complement().iter().collect();
        for (i, &a) in rest.iter().enumerate() {
            for &b in &rest[i + 1..] {
                if !ctx.adjacent(a, b) {
                    return fail(format!(
                        "designation {}: outside pair ({},{}) is non-adjacent",
                        ctx.d.part_name(x1),
                        ctx.name(a),
                        ctx.name(b)
                    ));
                }
            }
        }
    }
    pass()
}

fn t_struct(ctx: &Ctx) -> Conc {
    match verify_block_structure(ctx.d, &ctx.g) {
        Err(e) => fail(format!("block verification unavailable: {e}")),
        Ok(verdicts) => forall(verdicts, |v| {
            if v.pass {
                None
            } else {
                Some(format!(
                    "designation {}: block {} expected {}",
                    v.designation, v.block, v.expected
                ))
            }
        }),
    }
}

fn t_ab_1(ctx: &Ctx) -> Conc {
    forall(
        crate::structure::components_and_diameters(&ctx.g),
        |(comp, diameter)| {
            if diameter <= 2 {
                None
            } else {
                Some(format!(
                    "component {{{}}} has diameter {}",
                    comp.join(","),
                    diameter
                ))
            }
        },
    )
}

fn t_ab_2(ctx: &Ctx) -> Conc {
    let connected = crate::structure::components_and_diameters(&ctx.g).len() == 1;
    let sinkless = ctx.sinks.is_empty();
    if sinkless == connected {
        pass()
    } else {
        fail(format!("sinkless={sinkless} but connected={connected}"))
    }
}

fn t_ab_3(ctx: &Ctx) -> Conc {
    let Some(sets) = ctx.maximal_stables() else {
        return Conc::Skipped;
    };
    forall(sets.clone(), |s| {
        let parts: std::collections::BTreeSet<usize> = s.iter().map(|v| ctx.d.part_of(v)).collect();
        if parts.len() <= 2 {
            None
        } else {
            Some(format!(
                "maximal stable set {{{}}} meets {} parts",
                ctx.names(&s),
                parts.len()
            ))
        }
    })
}

fn t_ab_4(ctx: &Ctx) -> Conc {
    if ctx.noncompeting.len() <= 2 {
        pass()
    } else {
        fail(format!("{} non-competing parts", ctx.noncompeting.len()))
    }
}

fn t_ab_5_hyp(ctx: &Ctx) -> Hyp {
    if ctx.loose && ctx.g.edge_count() > 0 {
        Hyp::Holds
    } else {
        Hyp::No
    }
}

fn t_ab_5(ctx: &Ctx) -> Conc {
    let gamma = match domination_number(&ctx.g) {
        Ok(gamma) => gamma,
        Err(Error::InstanceTooLarge(_)) => return Conc::Skipped,
        Err(e) => return fail(format!("domination search failed: {e}")),
    };
    let m = ctx.sinks.len();
    if gamma == m + 1 || gamma == m + 2 {
        Conc::Pass(Some(format!("gamma = m+{}", gamma - m)))
    } else {
        fail(format!("domination number {gamma} with {m} sinks"))
    }
}

fn l_cyc(ctx: &Ctx) -> Conc {
    let Some(cycles) = ctx.directed_cycles() else {
        return Conc::Skipped;
    };
    for cycle in cycles {
        let cset = VertexSet::from_indices(ctx.n, cycle.iter().copied());
        for p in 0..ctx.d.part_count() {
            let outsiders = ctx.d.part_mask(p).minus(&cset);
            let qualifies = outsiders.iter().all(|u| {
                let hits = ctx.out(u).intersection(&cset);
                if cycle.len() == 3 {
                    hits.len() >= 2
                } else {
                    // on a 4-cycle only antipodal pairs split it 2 + 2
                    (hits.contains(cycle[0]) && hits.contains(cycle[2]))
                        || (hits.contains(cycle[1]) && hits.contains(cycle[3]))
                }
            });
            if !qualifies {
                continue;
            }
            for u in outsiders.iter() {
                for y in ctx.d.part_mask(p).iter() {
                    if y != u && !ctx.adjacent(u, y) {
                        let cycle_names: Vec<&str> = cycle.iter().map(|&v| ctx.name(v)).collect();
                        return fail(format!(
                            "cycle ({}) and part {}: {} misses {}",
                            cycle_names.join("->"),
                            ctx.d.part_name(p),
                            ctx.name(u),
                            ctx.name(y)
                        ));
                    }
                }
            }
        }
    }
    pass()
}

fn l_p3_hyp(ctx: &Ctx) -> Hyp {
    if !ctx.sinks.is_empty() {
        return Hyp::No;
    }
    let some =
        (0..ctx.d.part_count()).any(|p| !ctx.stable_triples_in(ctx.d.part_mask(p)).is_empty());
    if some {
        Hyp::Holds
    } else {
        Hyp::No
    }
}

fn l_p3(ctx: &Ctx) -> Conc {
    let hosts: Vec<usize> = (0..ctx.d.part_count())
        .filter(|&p| !ctx.stable_triples_in(ctx.d.part_mask(p)).is_empty())
        .collect();
    let all = VertexSet::full(ctx.n);
    let triples = ctx.stable_triples_in(&all);
    for &host in &hosts {
        for t in &triples {
            if !t.iter().all(|&v| ctx.d.part_mask(host).contains(v)) {
                return fail(format!(
                    "stable triple ({},{},{}) escapes part {}",
                    ctx.name(t[0]),
                    ctx.name(t[1]),
                    ctx.name(t[2]),
                    ctx.d.part_name(host)
                ));
            }
        }
    }
    pass()
}

fn t_s4(ctx: &Ctx) -> Conc {
    let r = match max_anti_competing_set(ctx.d, &ctx.g, SearchScope::CrossPart) {
        Ok(r) => r,
        Err(Error::InstanceTooLarge(_)) => return Conc::Skipped,
        Err(e) => return fail(format!("stable-set search failed: {e}")),
    };
    if r.size > 4 {
        return fail(format!(
            "cross-part anti-competing set {{{}}} has size {}",
            r.best_set.join(","),
            r.size
        ));
    }
    if r.size == 4 {
        if r.star_shape_verified != Some(true) {
            return fail(format!(
                "size-4 set {{{}}} without the complete-minus-K4 shape / 2+2 split",
                r.best_set.join(",")
            ));
        }
        if ctx.n < 5 {
            return fail(format!("size-4 set in an order-{} tournament", ctx.n));
        }
    }
    pass()
}

fn l_at_hyp(ctx: &Ctx) -> Hyp {
    if !ctx.loose {
        return Hyp::No;
    }
    if asteroidal_triples_idx(&ctx.g).is_empty() {
        Hyp::No
    } else {
        Hyp::Holds
    }
}

fn l_at(ctx: &Ctx) -> Conc {
    let triples = asteroidal_triples_idx(&ctx.g);
    if ctx.noncompeting.len() != 1 {
        return fail(format!(
            "asteroidal triple present with {} non-competing parts",
            ctx.noncompeting.len()
        ));
    }
    let host = ctx.d.part_mask(ctx.noncompeting[0]);
    forall(triples, |t| {
        if t.iter().all(|&v| host.contains(v)) {
            None
        } else {
            Some(format!(
                "asteroidal triple ({},{},{}) escapes part {}",
                ctx.name(t[0]),
                ctx.name(t[1]),
                ctx.name(t[2]),
                ctx.d.part_name(ctx.noncompeting[0])
            ))
        }
    })
}

fn twin_pairs(ctx: &Ctx) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for u in 0..ctx.n {
        for v in u + 1..ctx.n {
            if ctx.nonsink(u) && ctx.nonsink(v) && true_twins_digraph_idx(ctx.d, u, v) {
                out.push((u, v));
            }
        }
    }
    out
}

fn l_tt_hyp(ctx: &Ctx) -> Hyp {
    if twin_pairs(ctx).is_empty() {
        Hyp::No
    } else {
        Hyp::Holds
    }
}

fn l_tt(ctx: &Ctx) -> Conc {
    let adj = ctx.adj_masks();
    forall(twin_pairs(ctx), |(u, v)| {
        if true_twins_graph_idx(&adj, u, v) {
            None
        } else {
            Some(format!(
                "digraph true twins ({},{}) are not graph true twins",
                ctx.name(u),
                ctx.name(v)
            ))
        }
    })
}

/// Pairs feeding the two neighborhood lemmas: adjacent, same non-competing
/// part, not true twins in the competition graph. Paired with the part that
/// absorbs both out-neighborhoods when one exists.
fn xi_pairs(ctx: &Ctx) -> Vec<(usize, usize, Option<usize>)> {
    let adj = ctx.adj_masks();
    let mut out = Vec::new();
    for &x in &ctx.noncompeting {
        let members: Vec<usize> = ctx.d.part_mask(x).iter().collect();
        for (i, &u) in members.iter().enumerate() {
            for &v in &members[i + 1..] {
                if ctx.adjacent(u, v) && !true_twins_graph_idx(&adj, u, v) {
                    out.push((u, v, ctx.d.containing_part(&ctx.out(u).union(ctx.out(v)))));
                }
            }
        }
    }
    out
}

fn l_xi_1_hyp(ctx: &Ctx) -> Hyp {
    if ctx.loose && xi_pairs(ctx).iter().any(|&(_, _, p)| p.is_some()) {
        Hyp::Holds
    } else {
        Hyp::No
    }
}

fn l_xi_1(ctx: &Ctx) -> Conc {
    for (u, v, p) in xi_pairs(ctx) {
        let Some(p) = p else { continue };
        for w in ctx.d.part_mask(p).iter() {
            if !ctx.adjacent(w, u) && !ctx.adjacent(w, v) {
                return fail(format!(
                    "{} in part {} misses both {} and {}",
                    ctx.name(w),
                    ctx.d.part_name(p),
                    ctx.name(u),
                    ctx.name(v)
                ));
            }
        }
    }
    pass()
}

fn l_xi_2_hyp(ctx: &Ctx) -> Hyp {
    if ctx.loose && !xi_pairs(ctx).is_empty() {
        Hyp::Holds
    } else {
        Hyp::No
    }
}

fn l_xi_2(ctx: &Ctx) -> Conc {
    for (u, v, _) in xi_pairs(ctx) {
        let x = ctx.d.part_of(u);
        for w in 0..ctx.n {
            if w == u || w == v {
                continue;
            }
            if !ctx.adjacent(w, u) && !ctx.adjacent(w, v) && ctx.d.part_of(w) != x {
                return fail(format!(
                    "{} misses both {} and {} yet lies outside part {}",
                    ctx.name(w),
                    ctx.name(u),
                    ctx.name(v),
                    ctx.d.part_name(x)
                ));
            }
        }
    }
    pass()
}

fn t_hole5(ctx: &Ctx) -> Conc {
    let Some(holes) = ctx.holes_of_len(|l| l >= 5) else {
        return Conc::Skipped;
    };
    if ctx.noncompeting.len() != 1 {
        return fail(format!(
            "long hole present with {} non-competing parts",
            ctx.noncompeting.len()
        ));
    }
    let x = ctx.noncompeting[0];
    forall(holes, |hole| {
        let absorbed = (0..ctx.d.part_count()).any(|y| {
            y != x
                && ctx.d.part_mask(y).len() >= hole.len()
                && hole.iter().all(|&v| ctx.fsets[y].contains(v))
                && ctx.fsets[y].is_subset_of(ctx.d.part_mask(x))
        });
        if absorbed {
            None
        } else {
            let names: Vec<&str> = hole.iter().map(|&v| ctx.name(v)).collect();
            Some(format!(
                "hole ({}) has no absorbing part of matching size",
                names.join("-")
            ))
        }
    })
}

fn t_hole4_1(ctx: &Ctx) -> Conc {
    let ok = match ctx.noncompeting.len() {
        1 => true,
        2 => ctx
            .noncompeting
            .iter()
            .all(|&p| ctx.d.part_mask(p).len() >= 4),
        _ => false,
    };
    if ok {
        pass()
    } else {
        let sizes: Vec<String> = ctx
            .noncompeting
            .iter()
            .map(|&p| format!("{}:{}", ctx.d.part_name(p), ctx.d.part_mask(p).len()))
            .collect();
        fail(format!(
            "four-hole with non-competing parts [{}]",
            sizes.join(",")
        ))
    }
}

fn t_hole4_2(ctx: &Ctx) -> Conc {
    let Some(holes) = ctx.holes_of_len(|l| l == 4) else {
        return Conc::Skipped;
    };
    let mut mixed = 0usize;
    for hole in holes {
        let diags = [(hole[0], hole[2]), (hole[1], hole[3])];
        let same: Vec<bool> = diags
            .iter()
            .map(|&(a, b)| ctx.d.part_of(a) == ctx.d.part_of(b))
            .collect();
        for (k, &(a, b)) in diags.iter().enumerate() {
            if !same[k] && !(ctx.sole_out(a, b) || ctx.sole_out(b, a)) {
                let names: Vec<&str> = hole.iter().map(|&v| ctx.name(v)).collect();
                return Conc::Fail(
                    format!(
                        "hole ({}): cross-part diagonal ({},{}) without a sole-out-neighbor relation",
                        names.join("-"),
                        ctx.name(a),
                        ctx.name(b)
                    ),
                    None,
                );
            }
        }
        if same[0] && same[1] {
            if !(0..ctx.d.part_count()).any(|p| ctx.d.part_mask(p).len() >= 4) {
                let names: Vec<&str> = hole.iter().map(|&v| ctx.name(v)).collect();
                return Conc::Fail(
                    format!(
                        "hole ({}): both diagonals same-part but every part has size <= 3",
                        names.join("-")
                    ),
                    None,
                );
            }
        } else if same[0] || same[1] {
            mixed += 1;
        }
    }
    let note = (mixed > 0).then(|| format!("mixed-diagonal four-holes: {mixed} (no verdict)"));
    Conc::Pass(note)
}

fn c_chord_hyp(ctx: &Ctx) -> Hyp {
    let no_outdeg_one = (0..ctx.n).all(|v| ctx.dg().out_degree(v) != 1);
    let small_parts = ctx.d.part_sizes().iter().all(|&s| s <= 3);
    if ctx.loose && no_outdeg_one && small_parts {
        Hyp::Holds
    } else {
        Hyp::No
    }
}

fn c_chord(ctx: &Ctx) -> Conc {
    match is_chordal(&ctx.g) {
        crate::recognition::Chordality::Chordal { .. } => pass(),
        crate::recognition::Chordality::NotChordal { hole } => fail(format!(
            "competition graph has hole ({})",
            hole.cycle.join("-")
        )),
    }
}

fn t_int2_hyp(ctx: &Ctx) -> Hyp {
    if ctx.loose && ctx.d.part_sizes().iter().all(|&s| s <= 2) {
        Hyp::Holds
    } else {
        Hyp::No
    }
}

fn t_int2(ctx: &Ctx) -> Conc {
    if is_interval(&ctx.g).is_interval() {
        pass()
    } else {
        fail("competition graph is not interval".to_string())
    }
}

fn t_c4eq_hyp(ctx: &Ctx) -> Hyp {
    if ctx.noncompeting.len() == 2 {
        Hyp::Holds
    } else {
        Hyp::No
    }
}

fn t_c4eq(ctx: &Ctx) -> Conc {
    let interval = is_interval(&ctx.g).is_interval();
    let chordal = is_chordal(&ctx.g).is_chordal();
    let c4free = is_c4_free(&ctx.g);
    if interval != chordal || chordal != c4free {
        return fail(format!(
            "interval={interval} chordal={chordal} c4-free={c4free}"
        ));
    }
    let big_parts = ctx.d.part_sizes().iter().filter(|&&s| s >= 4).count();
    if big_parts <= 1 && !interval {
        return fail("all parts but one have size <= 3, yet the graph is not interval".to_string());
    }
    pass()
}

static CATALOG: &[TheoremCheck] = &[
    TheoremCheck {
        id: "P-SAME-1",
        description: "Two non-sink vertices of one part compete exactly when their out-neighborhoods intersect.",
        hypothesis: always,
        conclusion: p_same_1,
    },
    TheoremCheck {
        id: "P-SAME-2",
        description: "Two non-sink vertices of one part (1,2)-compete exactly when their joint out-neighborhood escapes every single part.",
        hypothesis: always,
        conclusion: p_same_2,
    },
    TheoremCheck {
        id: "P-SAME-3",
        description: "Two non-sink vertices of one part are non-adjacent exactly when their out-neighborhoods are disjoint and jointly inside one part.",
        hypothesis: always,
        conclusion: p_same_3,
    },
    TheoremCheck {
        id: "P-DIFF",
        description: "For an arc (u,v) between non-sink vertices of different parts: non-adjacent exactly when v is u's sole out-neighbor, or the out-neighborhoods are disjoint with out(v) inside a part X and out(u) inside X plus v.",
        hypothesis: always,
        conclusion: p_diff,
    },
    TheoremCheck {
        id: "C-ADJ",
        description: "For non-sink vertices of different parts, the three closed-form conditions decide adjacency exactly as the bounded-distance oracle does.",
        hypothesis: always,
        conclusion: c_adj,
    },
    TheoremCheck {
        id: "P-SUB-1",
        description: "A stable set with two non-sinks inside a non-competing part sends all its out-arcs into a single part.",
        hypothesis: loose,
        conclusion: p_sub_1,
    },
    TheoremCheck {
        id: "P-SUB-2",
        description: "Given a stable triple inside a non-competing part X, every pair outside X has a common out-neighbor inside the triple.",
        hypothesis: loose,
        conclusion: p_sub_2,
    },
    TheoremCheck {
        id: "S-SINK",
        description: "Every sink lies in every non-competing part.",
        hypothesis: loose,
        conclusion: s_sink,
    },
    TheoremCheck {
        id: "P-DIST",
        description: "A vertex of a non-competing part with out-neighbors in two parts is adjacent to every non-sink vertex.",
        hypothesis: loose,
        conclusion: p_dist,
    },
    TheoremCheck {
        id: "T-NNS-1",
        description: "Vertices whose whole out-neighborhood sits in one non-designated part belong to the designated non-competing part.",
        hypothesis: loose,
        conclusion: t_nns_1,
    },
    TheoremCheck {
        id: "T-NNS-2",
        description: "Away from the designated part and the absorbing part, all vertices form a clique adjacent to the whole absorbing part.",
        hypothesis: loose,
        conclusion: t_nns_2,
    },
    TheoremCheck {
        id: "T-NNS-3",
        description: "F-set vertices of one part are adjacent to the F-set and all of any other non-designated part.",
        hypothesis: loose,
        conclusion: t_nns_3,
    },
    TheoremCheck {
        id: "T-NNS-4",
        description: "A non-sink with out-neighborhood inside part X_i misses a vertex of X_i exactly when one is the sole out-neighbor of the other.",
        hypothesis: loose,
        conclusion: t_nns_4,
    },
    TheoremCheck {
        id: "T-NNS-5",
        description: "With a sink, or a stable set of size three in the designated part, everything outside the designated part is a clique.",
        hypothesis: t_nns_5_hyp,
        conclusion: t_nns_5,
    },
    TheoremCheck {
        id: "T-STRUCT",
        description: "The adjacency matrix conforms to the block decomposition over sinks, F-sets, the designated remainder, and the other parts.",
        hypothesis: loose,
        conclusion: t_struct,
    },
    TheoremCheck {
        id: "T-AB-1",
        description: "Every component of the competition graph has diameter at most two.",
        hypothesis: loose,
        conclusion: t_ab_1,
    },
    TheoremCheck {
        id: "T-AB-2",
        description: "The tournament is sinkless exactly when the competition graph is connected.",
        hypothesis: loose,
        conclusion: t_ab_2,
    },
    TheoremCheck {
        id: "T-AB-3",
        description: "Every maximal stable set of the competition graph meets at most two parts.",
        hypothesis: loose,
        conclusion: t_ab_3,
    },
    TheoremCheck {
        id: "T-AB-4",
        description: "At most two parts are non-competing.",
        hypothesis: loose,
        conclusion: t_ab_4,
    },
    TheoremCheck {
        id: "T-AB-5",
        description: "With m sinks and at least one edge, the domination number is m+1 or m+2.",
        hypothesis: t_ab_5_hyp,
        conclusion: t_ab_5,
    },
    TheoremCheck {
        id: "L-CYC",
        description: "If every part vertex off a directed 3- or 4-cycle has two out-neighbors splitting the cycle into sections of length at most two, the off-cycle part vertices are adjacent to the whole part.",
        hypothesis: always,
        conclusion: l_cyc,
    },
    TheoremCheck {
        id: "L-P3",
        description: "Sinkless, with a stable triple inside some part: every stable set of size three or more lies inside that part.",
        hypothesis: l_p3_hyp,
        conclusion: l_p3,
    },
    TheoremCheck {
        id: "T-S4",
        description: "Sinkless and loose: a cross-part anti-competing set has size at most four, and size four forces a 2+2 split, order at least five, and a complete graph minus one K4.",
        hypothesis: loose_sinkless,
        conclusion: t_s4,
    },
    TheoremCheck {
        id: "L-AT",
        description: "Any asteroidal triple lies inside the unique non-competing part.",
        hypothesis: l_at_hyp,
        conclusion: l_at,
    },
    TheoremCheck {
        id: "L-TT",
        description: "Non-sink true twins of the digraph are true twins of the competition graph.",
        hypothesis: l_tt_hyp,
        conclusion: l_tt,
    },
    TheoremCheck {
        id: "L-XI-1",
        description: "For an adjacent non-twin pair of a non-competing part with joint out-neighborhood inside X_i, every vertex of X_i touches the pair.",
        hypothesis: l_xi_1_hyp,
        conclusion: l_xi_1,
    },
    TheoremCheck {
        id: "L-XI-2",
        description: "Any vertex missing both members of an adjacent non-twin pair of a non-competing part X belongs to X.",
        hypothesis: l_xi_2_hyp,
        conclusion: l_xi_2,
    },
    TheoremCheck {
        id: "T-HOLE5",
        description: "A hole of length five or more forces a unique non-competing part, and every such hole sits inside an F-set whose target part is at least as large as the hole.",
        hypothesis: |ctx| loose_with_holes(ctx, |l| l >= 5),
        conclusion: t_hole5,
    },
    TheoremCheck {
        id: "T-HOLE4-1",
        description: "A four-hole forces either a unique non-competing part or exactly two, each of size at least four.",
        hypothesis: |ctx| loose_with_holes(ctx, |l| l == 4),
        conclusion: t_hole4_1,
    },
    TheoremCheck {
        id: "T-HOLE4-2",
        description: "On a four-hole, a cross-part diagonal pair is in a sole-out-neighbor relation; if both diagonals are same-part, some part has size at least four.",
        hypothesis: |ctx| loose_with_holes(ctx, |l| l == 4),
        conclusion: t_hole4_2,
    },
    TheoremCheck {
        id: "C-CHORD",
        description: "Loose, no vertex of outdegree one, all parts of size at most three: the competition graph is chordal.",
        hypothesis: c_chord_hyp,
        conclusion: c_chord,
    },
    TheoremCheck {
        id: "T-INT2",
        description: "Loose with all parts of size at most two: the competition graph is interval.",
        hypothesis: t_int2_hyp,
        conclusion: t_int2,
    },
    TheoremCheck {
        id: "T-C4EQ",
        description: "With exactly two non-competing parts: interval, chordal, and C4-free coincide; and if all parts but one have size at most three, the graph is interval.",
        hypothesis: t_c4eq_hyp,
        conclusion: t_c4eq,
    },
];

/// The theorem catalog, in fixed order.
pub fn catalog() -> &'static [TheoremCheck] {
    CATALOG
}

fn run_entry(entry: &TheoremCheck, ctx: &Ctx) -> CheckResult {
    let (verdict, counterexample, note) = match (entry.hypothesis)(ctx) {
        Hyp::No => (Verdict::NotApplicable, None, None),
        Hyp::Skipped => (Verdict::SkippedSize, None, None),
        Hyp::Holds => match (entry.conclusion)(ctx) {
            Conc::Pass(note) => (Verdict::Pass, None, note),
            Conc::Skipped => (Verdict::SkippedSize, None, None),
            Conc::Fail(detail, note) => (
                Verdict::Fail,
                Some(Counterexample {
                    mtd: serialize_mtd(ctx.d),
                    detail,
                }),
                note,
            ),
        },
    };
    CheckResult {
        id: entry.id.to_string(),
        verdict,
        counterexample,
        note,
    }
}

/// Runs one catalog entry against a tournament.
pub fn check(id: &str, d: &MultipartiteTournament) -> Result<CheckResult> {
    let entry = CATALOG
        .iter()
        .find(|e| e.id == id)
        .ok_or_else(|| Error::UnknownTheorem(id.to_string()))?;
    let ctx = Ctx::new(d);
    Ok(run_entry(entry, &ctx))
}

/// Runs the whole catalog, sharing one competition graph.
pub fn check_all(d: &MultipartiteTournament) -> Vec<CheckResult> {
    let ctx = Ctx::new(d);
    CATALOG.iter().map(|e| run_entry(e, &ctx)).collect()
}

/// Configuration for [`fuzz`]. Seeds are an inclusive range.
#[derive(Clone, Debug)]
pub struct FuzzConfig {
    pub part_size_menu: Vec<Vec<usize>>,
    pub seed_start: u64,
    pub seed_end: u64,
    pub stop_on_fail: bool,
    pub jobs: usize,
}

/// Per-theorem verdict counts.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Tally {
    pub pass: usize,
    pub fail: usize,
    pub not_applicable: usize,
    pub skipped: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FuzzFailure {
    pub part_sizes: Vec<usize>,
    pub seed: u64,
    pub theorem: String,
    pub detail: String,
    pub mtd: String,
}

/// Aggregated fuzz outcome; identical for any worker count.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FuzzReport {
    pub menu: Vec<Vec<usize>>,
    pub seed_start: u64,
    pub seed_end: u64,
    pub instances_run: usize,
    /// Catalog order.
    pub tallies: Vec<(String, Tally)>,
    /// Count per distinct `<id>: <note>` side observation.
    pub notes: BTreeMap<String, usize>,
    /// Ordered by (menu position, seed, catalog order).
    pub failures: Vec<FuzzFailure>,
}

impl FuzzReport {
    pub fn failed(&self) -> bool {
        !self.failures.is_empty()
    }
}

/// Generates `menu x seeds` instances, runs the whole catalog on each, and
/// aggregates. Tasks run in `jobs` workers; the merge is position-ordered,
/// so the report does not depend on the worker count. With `stop_on_fail`
/// the report is truncated after the first failing instance in task order.
pub fn fuzz(config: &FuzzConfig) -> Result<FuzzReport> {
    if config.part_size_menu.is_empty() {
        return Err(Error::ConfigError("empty part-size menu".into()));
    }
    for sizes in &config.part_size_menu {
        if sizes.len() < 3 {
            return Err(Error::ConfigError(format!(
                "size vector {sizes:?} has fewer than 3 parts"
            )));
        }
        if sizes.contains(&0) {
            return Err(Error::ConfigError(format!(
                "size vector {sizes:?} has an empty part"
            )));
        }
    }
    if config.seed_start > config.seed_end {
        return Err(Error::ConfigError(format!(
            "empty seed range {}..{}",
            config.seed_start, config.seed_end
        )));
    }
    if config.jobs == 0 {
        return Err(Error::ConfigError("jobs must be at least 1".into()));
    }

    let tasks: Vec<(Vec<usize>, u64)> = config
        .part_size_menu
        .iter()
        .flat_map(|sizes| {
            (config.seed_start..=config.seed_end).map(move |seed| (sizes.clone(), seed))
        })
        .collect();

    let run_task = |(sizes, seed): &(Vec<usize>, u64)| -> Vec<CheckResult> {
        let d = MultipartiteTournament::random(sizes, *seed).expect("validated menu");
        check_all(&d)
    };

    let mut results: Vec<Vec<CheckResult>> = Vec::with_capacity(tasks.len());
    if config.jobs == 1 {
        for task in &tasks {
            let r = run_task(task);
            let failed = r.iter().any(|c| c.verdict == Verdict::Fail);
            results.push(r);
            if config.stop_on_fail && failed {
                break;
            }
        }
    } else {
        let mut slots: Vec<Option<Vec<CheckResult>>> = vec![None; tasks.len()];
        std::thread::scope(|scope| {
            let chunks: Vec<&mut [Option<Vec<CheckResult>>]> = slots
                .chunks_mut(tasks.len().div_ceil(config.jobs))
                .collect();
            let mut offset = 0;
            for chunk in chunks {
                let start = offset;
                offset += chunk.len();
                let tasks = &tasks;
                scope.spawn(move || {
                    for (k, slot) in chunk.iter_mut().enumerate() {
                        *slot = Some(run_task(&tasks[start + k]));
                    }
                });
            }
        });
        for slot in slots {
            results.push(slot.expect("worker filled its slot"));
        }
        if config.stop_on_fail {
            if let Some(first) = results
                .iter()
                .position(|r| r.iter().any(|c| c.verdict == Verdict::Fail))
            {
                results.truncate(first + 1);
            }
        }
    }

    let mut tallies: Vec<(String, Tally)> = CATALOG
        .iter()
        .map(|e| (e.id.to_string(), Tally::default()))
        .collect();
    let mut notes = BTreeMap::new();
    let mut failures = Vec::new();
    for (i, instance) in results.iter().enumerate() {
        let (sizes, seed) = &tasks[i];
        for (k, r) in instance.iter().enumerate() {
            let tally = &mut tallies[k].1;
            match r.verdict {
                Verdict::Pass => tally.pass += 1,
                Verdict::Fail => tally.fail += 1,
                Verdict::NotApplicable => tally.not_applicable += 1,
                Verdict::SkippedSize => tally.skipped += 1,
            }
            if let Some(note) = &r.note {
                *notes.entry(format!("{}: {}", r.id, note)).or_insert(0) += 1;
            }
            if let Some(ce) = &r.counterexample {
                failures.push(FuzzFailure {
                    part_sizes: sizes.clone(),
                    seed: *seed,
                    theorem: r.id.clone(),
                    detail: ce.detail.clone(),
                    mtd: ce.mtd.clone(),
                });
            }
        }
    }

    Ok(FuzzReport {
        menu: config.part_size_menu.clone(),
        seed_start: config.seed_start,
        seed_end: config.seed_end,
        instances_run: results.len(),
        tallies,
        notes,
        failures,
    })
}
