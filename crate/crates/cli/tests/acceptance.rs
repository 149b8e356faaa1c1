//! Acceptance suite: one test per release criterion, each printing a
//! pass/fail line. Run with `cargo test -p mtclab-cli --test acceptance --
//! --nocapture` to see the lines.

use std::process::Command;
use std::time::Instant;

use mtclab_core::competition::{adjacent_fast, adjacent_oracle};
use mtclab_core::harness::{fuzz, FuzzConfig};
use mtclab_core::recognition::{
    find_asteroidal_triple, find_hole, is_c4_free, is_chordal, is_interval,
};
use mtclab_core::report::emit_fuzz_report;
use mtclab_core::{
    classify_parts, competition_graph, components_and_diameters, domination_number,
    max_anti_competing_set, maximal_stable_sets, parse_mtd, serialize_mtd, Fixture, Method,
    MultipartiteTournament, PartFlag, SearchScope, SimpleGraph,
};

const ENUMERATED: &[&[usize]] = &[&[1, 1, 1], &[2, 1, 1], &[2, 2, 1], &[1, 1, 1, 1]];

/// 10 size vectors with n <= 12 and k in {3,4,5}; 100 seeds each.
const RANDOM_MENU: &[&[usize]] = &[
    &[4, 4, 4],
    &[5, 4, 3],
    &[6, 3, 3],
    &[2, 2, 2],
    &[3, 3, 3, 3],
    &[4, 3, 2, 1],
    &[2, 2, 2, 2],
    &[5, 3, 2, 2],
    &[3, 3, 2, 2, 2],
    &[4, 2, 2, 2, 2],
];
const RANDOM_SEEDS: u64 = 100;

fn enumerated_corpus() -> Vec<MultipartiteTournament> {
    ENUMERATED
        .iter()
        .flat_map(|sizes| MultipartiteTournament::enumerate(sizes).unwrap())
        .collect()
}

fn random_corpus() -> Vec<MultipartiteTournament> {
    RANDOM_MENU
        .iter()
        .flat_map(|sizes| {
            (0..RANDOM_SEEDS).map(move |seed| MultipartiteTournament::random(sizes, seed).unwrap())
        })
        .collect()
}

fn loose_with_graph(d: &MultipartiteTournament) -> Option<(SimpleGraph, Vec<PartFlag>)> {
    let g = competition_graph(d, Method::Fast);
    let (flags, loose) = classify_parts(d, &g).unwrap();
    loose.then_some((g, flags))
}

#[test]
fn acceptance_1_oracle_equivalence() {
    let started = Instant::now();
    let mut instances = 0usize;
    let mut pairs = 0usize;
    let enumerated = enumerated_corpus();
    assert_eq!(enumerated.len(), 360);
    for d in enumerated.iter().chain(random_corpus().iter()) {
        instances += 1;
        let labels = d.digraph().labels().to_vec();
        for (i, u) in labels.iter().enumerate() {
            for v in &labels[i + 1..] {
                pairs += 1;
                assert_eq!(
                    adjacent_fast(d, u, v).unwrap(),
                    adjacent_oracle(d, u, v).unwrap(),
                    "mismatch at pair ({u},{v}) of\n{}",
                    serialize_mtd(d)
                );
            }
        }
    }
    let elapsed = started.elapsed();
    assert_eq!(instances, 360 + 1000);
    assert!(
        elapsed.as_secs() < 60,
        "equivalence sweep took {elapsed:?}, budget is 60 s"
    );
    println!(
        "acceptance 1 (oracle equivalence, {instances} instances / {pairs} pairs in {elapsed:?}): PASS"
    );
}

#[test]
fn acceptance_2_fixture_exactness() {
    let edge_set = |g: &SimpleGraph| -> Vec<(String, String)> {
        g.edges()
            .into_iter()
            .map(|(u, v)| (g.label(u).to_string(), g.label(v).to_string()))
            .collect()
    };
    let e = |pairs: &[(&str, &str)]| -> Vec<(String, String)> {
        pairs
            .iter()
            .map(|&(a, b)| (a.to_string(), b.to_string()))
            .collect()
    };
    for method in [Method::Fast, Method::Oracle] {
        let t3 = competition_graph(&MultipartiteTournament::fixture(Fixture::T3), method);
        assert_eq!(edge_set(&t3), e(&[]));

        // complete on 5 vertices minus the 6 pairs among {u1,u2,u3,u4}
        let star5 = competition_graph(&MultipartiteTournament::fixture(Fixture::Star5), method);
        assert_eq!(
            edge_set(&star5),
            e(&[("u1", "x"), ("u2", "x"), ("u3", "x"), ("u4", "x")])
        );

        let sink4 = competition_graph(&MultipartiteTournament::fixture(Fixture::Sink4), method);
        assert_eq!(edge_set(&sink4), e(&[("u", "v"), ("u", "w"), ("v", "w")]));
    }
    // the four leaves are exactly the maximum cross-part stable set
    let d = MultipartiteTournament::fixture(Fixture::Star5);
    let g = competition_graph(&d, Method::Fast);
    let r = max_anti_competing_set(&d, &g, SearchScope::CrossPart).unwrap();
    assert_eq!(r.best_set, vec!["u1", "u2", "u3", "u4"]);
    assert_eq!(r.star_shape_verified, Some(true));
    println!("acceptance 2 (fixture exactness): PASS");
}

#[test]
fn acceptance_3_structural_bounds() {
    let mut loose_count = 0usize;
    for d in enumerated_corpus().iter().chain(random_corpus().iter()) {
        let Some((g, flags)) = loose_with_graph(d) else {
            continue;
        };
        loose_count += 1;
        let sinks = mtclab_core::sinks(d);
        let components = components_and_diameters(&g);
        for (comp, diameter) in &components {
            assert!(
                *diameter <= 2,
                "component {comp:?} of diameter {diameter} in\n{}",
                serialize_mtd(d)
            );
        }
        assert_eq!(
            sinks.is_empty(),
            components.len() == 1,
            "connectivity vs sinks in\n{}",
            serialize_mtd(d)
        );
        let noncompeting = flags
            .iter()
            .filter(|f| **f == PartFlag::NonCompeting)
            .count();
        assert!(noncompeting <= 2, "{}", serialize_mtd(d));
        for s in maximal_stable_sets(&g, 16).unwrap() {
            let parts: std::collections::BTreeSet<usize> = s.iter().map(|v| d.part_of(v)).collect();
            assert!(parts.len() <= 2, "{}", serialize_mtd(d));
        }
        if g.edge_count() > 0 {
            let gamma = domination_number(&g).unwrap();
            let m = sinks.len();
            assert!(
                gamma == m + 1 || gamma == m + 2,
                "gamma={gamma} m={m} in\n{}",
                serialize_mtd(d)
            );
        }
    }
    println!("acceptance 3 (structural bounds on {loose_count} loose instances): PASS");
}

#[test]
fn acceptance_4_anti_competing_bound() {
    let mut checked = 0usize;
    let mut size_four = 0usize;
    for d in enumerated_corpus().iter().chain(random_corpus().iter()) {
        if !d.digraph().sink_mask().is_empty() {
            continue;
        }
        let Some((g, _)) = loose_with_graph(d) else {
            continue;
        };
        checked += 1;
        let r = max_anti_competing_set(d, &g, SearchScope::CrossPart).unwrap();
        assert!(r.size <= 4, "size {} in\n{}", r.size, serialize_mtd(d));
        if r.size == 4 {
            size_four += 1;
            assert_eq!(
                r.star_shape_verified,
                Some(true),
                "shape/split failed in\n{}",
                serialize_mtd(d)
            );
            assert!(d.vertex_count() >= 5);
        }
    }
    println!(
        "acceptance 4 (anti-competing bound on {checked} sinkless loose instances, {size_four} at the bound): PASS"
    );
}

#[test]
fn acceptance_5_interval_theorems() {
    let targeted: Vec<MultipartiteTournament> = [
        [2usize, 2, 2].as_slice(),
        &[2, 2, 2, 2],
        &[3, 3, 2],
        &[3, 3, 3],
    ]
    .iter()
    .flat_map(|sizes| {
        (0..125u64).map(move |seed| MultipartiteTournament::random(sizes, seed).unwrap())
    })
    .collect();
    assert_eq!(targeted.len(), 500);

    let mut small_parts = 0usize;
    let mut chordal_premise = 0usize;
    let mut two_noncompeting = 0usize;
    for d in enumerated_corpus()
        .iter()
        .chain(random_corpus().iter())
        .chain(targeted.iter())
    {
        let g = competition_graph(d, Method::Fast);
        let (flags, loose) = classify_parts(d, &g).unwrap();
        let noncompeting = flags
            .iter()
            .filter(|f| **f == PartFlag::NonCompeting)
            .count();
        let sizes = d.part_sizes();
        if loose && sizes.iter().all(|&s| s <= 2) {
            small_parts += 1;
            assert!(
                is_interval(&g).is_interval(),
                "parts <= 2 but not interval:\n{}",
                serialize_mtd(d)
            );
        }
        let no_outdeg_one = (0..d.vertex_count()).all(|v| d.digraph().out_degree(v) != 1);
        if loose && no_outdeg_one && sizes.iter().all(|&s| s <= 3) {
            chordal_premise += 1;
            assert!(
                is_chordal(&g).is_chordal(),
                "chordality premise violated:\n{}",
                serialize_mtd(d)
            );
        }
        if noncompeting == 2 {
            two_noncompeting += 1;
            let interval = is_interval(&g).is_interval();
            let chordal = is_chordal(&g).is_chordal();
            let c4free = is_c4_free(&g);
            assert!(
                interval == chordal && chordal == c4free,
                "interval={interval} chordal={chordal} c4free={c4free}:\n{}",
                serialize_mtd(d)
            );
        }
    }
    println!(
        "acceptance 5 (interval theorems: {small_parts} small-part, {chordal_premise} chordal-premise, {two_noncompeting} two-non-competing instances): PASS"
    );
}

#[test]
fn acceptance_6_recognizer_cross_validation() {
    let mut graphs = 0usize;
    for d in enumerated_corpus() {
        let g = competition_graph(&d, Method::Fast);
        if g.vertex_count() > 8 {
            continue;
        }
        graphs += 1;
        let chordal = is_chordal(&g).is_chordal();
        assert_eq!(chordal, find_hole(&g, 4).unwrap().is_none(), "{g:?}");
        let at = find_asteroidal_triple(&g);
        assert_eq!(
            at.is_some(),
            brute_force_asteroidal_triple(&g).is_some(),
            "{g:?}"
        );
        if let Some(at) = &at {
            assert!(at.validate(&g));
        }
        let interval = is_interval(&g).is_interval();
        assert_eq!(interval, brute_force_interval_model(&g).is_some(), "{g:?}");
    }
    println!("acceptance 6 (recognizer cross-validation on {graphs} competition graphs): PASS");
}

#[test]
fn acceptance_7_full_harness() {
    let config = FuzzConfig {
        part_size_menu: vec![vec![2, 2, 1], vec![2, 2, 2], vec![3, 2, 1]],
        seed_start: 0,
        seed_end: 199,
        stop_on_fail: false,
        jobs: 2,
    };
    let report = fuzz(&config).unwrap();
    assert_eq!(report.instances_run, 600);
    assert!(
        !report.failed(),
        "failures: {:?}",
        report
            .failures
            .iter()
            .map(|f| (&f.theorem, &f.part_sizes, f.seed))
            .collect::<Vec<_>>()
    );
    let text = emit_fuzz_report(&report);
    assert!(text.contains("instances: 600"));
    assert!(text.contains("failures: 0"));
    for entry in mtclab_core::catalog() {
        assert!(
            text.contains(&format!("theorem {}:", entry.id)),
            "report line missing for {}",
            entry.id
        );
    }
    println!("acceptance 7 (600-instance fuzz, 0 FAIL): PASS");
}

#[test]
fn acceptance_8_reproducibility() {
    let gen = || {
        let out = Command::new(env!("CARGO_BIN_EXE_mtclab"))
            .args(["gen", "--parts", "2,2,1", "--seed", "42"])
            .output()
            .unwrap();
        assert!(out.status.success());
        out.stdout
    };
    let first = gen();
    let second = gen();
    assert_eq!(first, second, "gen output differs between runs");
    let in_process = serialize_mtd(&MultipartiteTournament::random(&[2, 2, 1], 42).unwrap());
    assert_eq!(first, in_process.as_bytes());
    assert_eq!(parse_mtd(&in_process).unwrap().digraph().arc_count(), 8);

    let fuzz_run = |jobs: &str| {
        let out = Command::new(env!("CARGO_BIN_EXE_mtclab"))
            .args([
                "fuzz",
                "--parts-menu",
                "2,2,1;2,2,2;3,2,1",
                "--seeds",
                "0..49",
                "--jobs",
                jobs,
            ])
            .output()
            .unwrap();
        assert!(out.status.success());
        out.stdout
    };
    assert_eq!(
        fuzz_run("1"),
        fuzz_run("8"),
        "fuzz reports differ by job count"
    );
    println!("acceptance 8 (reproducibility): PASS");
}

// Independent oracles for criterion 6 (second routes, test-only).

fn reachable_avoiding(g: &SimpleGraph, a: usize, b: usize, avoid: &[bool]) -> bool {
    if avoid[a] || avoid[b] {
        return false;
    }
    let mut seen = vec![false; g.vertex_count()];
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

fn brute_force_asteroidal_triple(g: &SimpleGraph) -> Option<[usize; 3]> {
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

/// Exhaustive ordering search: an interval model exists exactly when some
/// vertex order has no ordered triple i < j < k with edge (i,k) missing
/// edge (i,j); the model built from such an order is verified against g.
fn brute_force_interval_model(g: &SimpleGraph) -> Option<Vec<(usize, usize)>> {
    let n = g.vertex_count();
    assert!(n <= 8);
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
        for u in 0..n {
            for v in u + 1..n {
                let (a1, b1) = intervals[u];
                let (a2, b2) = intervals[v];
                if (a1.max(a2) <= b1.min(b2)) != g.has_edge_idx(u, v) {
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
