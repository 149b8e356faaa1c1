//! Deterministic plain-text reports and DOT output.

use std::fmt::Write as _;

use crate::competition::SimpleGraph;
use crate::harness::{CheckResult, FuzzReport, Verdict};
use crate::structure::{PartFlag, StructureReport};
use crate::tournament::MultipartiteTournament;

fn list_or_dash(items: &[String]) -> String {
    if items.is_empty() {
        "-".to_string()
    } else {
        items.join(" ")
    }
}

/// Stable text form of a structure report.
pub fn emit_structure_report(r: &StructureReport) -> String {
    let mut out = String::from("structure-report\n");
    let _ = writeln!(out, "sinks: {}", list_or_dash(&r.sinks));
    let _ = writeln!(out, "loose: {}", r.loose);
    for (name, flag) in &r.part_flags {
        let flag = match flag {
            PartFlag::Competing => "COMPETING",
            PartFlag::NonCompeting => "NON_COMPETING",
        };
        let _ = writeln!(out, "part {name}: {flag}");
    }
    for (name, members) in &r.f_sets {
        let _ = writeln!(out, "f {name}: {}", list_or_dash(members));
    }
    match &r.x1_star {
        Some(rest) => {
            let _ = writeln!(out, "x1-star: {}", list_or_dash(rest));
        }
        None => {
            let _ = writeln!(out, "x1-star: n/a");
        }
    }
    for v in &r.block_verdicts {
        let _ = writeln!(
            out,
            "block [{}] {} = {}: {}",
            v.designation,
            v.block,
            v.expected,
            if v.pass { "pass" } else { "FAIL" }
        );
    }
    out
}

pub fn verdict_name(v: Verdict) -> &'static str {
    match v {
        Verdict::Pass => "PASS",
        Verdict::Fail => "FAIL",
        Verdict::NotApplicable => "NOT_APPLICABLE",
        Verdict::SkippedSize => "SKIPPED_SIZE",
    }
}

/// Stable text form of a batch of theorem checks.
pub fn emit_check_results(results: &[CheckResult]) -> String {
    let mut out = String::new();
    for r in results {
        let _ = writeln!(out, "check {}: {}", r.id, verdict_name(r.verdict));
        if let Some(note) = &r.note {
            let _ = writeln!(out, "note {}: {}", r.id, note);
        }
        if let Some(ce) = &r.counterexample {
            let _ = writeln!(out, "detail {}: {}", r.id, ce.detail);
            out.push_str("counterexample:\n");
            out.push_str(&ce.mtd);
            out.push_str("end-counterexample\n");
        }
    }
    out
}

fn sizes_text(sizes: &[usize]) -> String {
    sizes
        .iter()
        .map(usize::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

/// Stable text form of a fuzz report. Worker count never appears, so runs
/// with different parallelism emit identical bytes.
pub fn emit_fuzz_report(r: &FuzzReport) -> String {
    let mut out = String::from("fuzz-report\n");
    let menu: Vec<String> = r.menu.iter().map(|s| sizes_text(s)).collect();
    let _ = writeln!(out, "menu: {}", menu.join("; "));
    let _ = writeln!(out, "seeds: {}..{}", r.seed_start, r.seed_end);
    let _ = writeln!(out, "instances: {}", r.instances_run);
    for (id, t) in &r.tallies {
        let _ = writeln!(
            out,
            "theorem {id}: pass={} fail={} na={} skipped={}",
            t.pass, t.fail, t.not_applicable, t.skipped
        );
    }
    for (note, count) in &r.notes {
        let _ = writeln!(out, "observed {note} x{count}");
    }
    let _ = writeln!(out, "failures: {}", r.failures.len());
    for f in &r.failures {
        let _ = writeln!(
            out,
            "failure {} parts={} seed={}",
            f.theorem,
            sizes_text(&f.part_sizes),
            f.seed
        );
        let _ = writeln!(out, "detail: {}", f.detail);
        out.push_str("counterexample:\n");
        out.push_str(&f.mtd);
        out.push_str("end-counterexample\n");
    }
    out
}

/// DOT rendering of a competition graph: parts as clusters, sinks dashed.
pub fn emit_dot(d: &MultipartiteTournament, g: &SimpleGraph) -> String {
    let mut out = String::from("graph c12 {\n");
    let sinks = d.digraph().sink_mask();
    for p in 0..d.part_count() {
        let _ = writeln!(out, "  subgraph cluster_{p} {{");
        let _ = writeln!(out, "    label=\"{}\";", d.part_name(p));
        for v in d.part_mask(p).iter() {
            let style = if sinks.contains(v) {
                " [style=dashed]"
            } else {
                ""
            };
            let _ = writeln!(out, "    \"{}\"{};", d.digraph().label(v), style);
        }
        out.push_str("  }\n");
    }
    for (u, v) in g.edges() {
        let _ = writeln!(out, "  \"{}\" -- \"{}\";", g.label(u), g.label(v));
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::competition::{competition_graph, Method};
    use crate::structure::build_structure_report;
    use crate::tournament::Fixture;

    #[test]
    fn dot_counts() {
        let d = MultipartiteTournament::fixture(Fixture::T3);
        let g = competition_graph(&d, Method::Fast);
        let dot = emit_dot(&d, &g);
        assert_eq!(dot.matches(" -- ").count(), 0);
        assert_eq!(dot.matches("cluster_").count(), 3);

        let d = MultipartiteTournament::fixture(Fixture::Star5);
        let g = competition_graph(&d, Method::Fast);
        let dot = emit_dot(&d, &g);
        assert_eq!(dot.matches(" -- ").count(), 4);
        assert!(!dot.contains("style=dashed"));

        let d = MultipartiteTournament::fixture(Fixture::Sink4);
        let g = competition_graph(&d, Method::Fast);
        let dot = emit_dot(&d, &g);
        assert!(dot.contains("\"s\" [style=dashed];"));
    }

    #[test]
    fn structure_report_text_for_sink4() {
        let d = MultipartiteTournament::fixture(Fixture::Sink4);
        let g = competition_graph(&d, Method::Fast);
        let text = emit_structure_report(&build_structure_report(&d, &g).unwrap());
        assert!(text.contains("sinks: s\n"), "{text}");
        assert!(text.contains("loose: true\n"));
        assert!(text.contains("part X1: NON_COMPETING\n"));
        assert!(text.contains("f X1: w\n"));
        assert!(text.contains("x1-star: u\n"));
        assert!(!text.contains("FAIL"));
    }
}
