//! Report emission: versioned JSON, TSV scan tables, and DOT inclusion
//! diagrams.  All three are byte-deterministic for a fixed input; timing or
//! host information is deliberately excluded (deterministic work counters
//! live in the scan result instead).

use serde::Serialize;

use crate::error::Result;
use crate::quotient::{AnalyzedFamily, FibreVerdict, InclusionEdge};
use crate::scan::ScanResult;

pub const REPORT_SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReportFormat {
    Json,
    Tsv,
    Dot,
}

impl std::str::FromStr for ReportFormat {
    type Err = crate::error::Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(ReportFormat::Json),
            "tsv" => Ok(ReportFormat::Tsv),
            "dot" => Ok(ReportFormat::Dot),
            other => Err(crate::error::Error::Invalid(format!(
                "unknown format `{other}` (expected json, tsv, or dot)"
            ))),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct FamilySummary {
    pub label: String,
    pub aliases: Vec<String>,
    pub node: String,
    pub group_order: u32,
    pub group_index: u32,
    pub group_name: String,
    pub base_genus: u32,
    pub signature: Vec<u32>,
    pub genus: u32,
    pub r: usize,
    pub n_delta: u64,
    pub dim_family: i64,
    pub star: bool,
    /// `(dim M, dim P, prym fibre dim, phi fibre dim)` when `star` holds.
    pub fibration: Option<(i64, u64, u64, u64)>,
    /// Nontrivial `(degree, multiplicity)` rows of `H^0(K)`.
    pub h0_nontrivial: Vec<(u32, u64)>,
    /// `(factor_dim, exponent, moving, degree, fs)` per isogeny block.
    pub blocks: Vec<(u64, u32, bool, u32, i8)>,
}

pub fn summarize_family(a: &AnalyzedFamily) -> FamilySummary {
    let mut h0: Vec<(u32, u64)> = a
        .table
        .chars
        .iter()
        .zip(&a.hodge.nu)
        .skip(1)
        .filter(|(_, &n)| n > 0)
        .map(|(c, &n)| (c.degree, n))
        .collect();
    h0.sort_unstable();
    FamilySummary {
        label: a.fixture.label.clone(),
        aliases: a.fixture.aliases.clone(),
        node: a.fixture.node.clone(),
        group_order: a.fixture.group_id.order,
        group_index: a.fixture.group_id.index,
        group_name: a.fixture.group_name.clone(),
        base_genus: a.fixture.vector.g_prime,
        signature: a.signature.periods.clone(),
        genus: a.genus,
        r: a.signature.r(),
        n_delta: a.hodge.n_delta,
        dim_family: a.hodge.dim_moduli,
        star: a.hodge.star,
        fibration: crate::hodge::fibration_dimensions(&a.hodge).ok(),
        h0_nontrivial: h0,
        blocks: a
            .blocks
            .iter()
            .map(|b| (b.factor_dim, b.exponent, b.moving, b.degree, b.fs))
            .collect(),
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct WitnessSummary {
    pub subgroup_order: u32,
    pub generators: Vec<String>,
    /// Branch orders of the cover over the intermediate quotient.
    pub quotient_branch: Vec<u32>,
    pub verdict: String,
    /// Copies of each sub-family block surviving in the quotient Jacobian.
    pub copies: Vec<u64>,
}

#[derive(Clone, Debug, Serialize)]
pub struct EdgeSummary {
    pub sub_label: String,
    pub super_label: String,
    pub sub_node: String,
    pub super_node: String,
    pub genus: u32,
    pub same_node: bool,
    pub witnesses: Vec<WitnessSummary>,
}

pub fn verdict_string(v: &FibreVerdict) -> String {
    match v {
        FibreVerdict::Prym { full: true } => "prym-fibre(full)".into(),
        FibreVerdict::Prym { full: false } => "prym-fibre".into(),
        FibreVerdict::Phi { full: true } => "phi-fibre(full)".into(),
        FibreVerdict::Phi { full: false } => "phi-fibre".into(),
        FibreVerdict::Both { .. } => "both".into(),
        FibreVerdict::Neither => "neither".into(),
        FibreVerdict::Ambiguous { block } => format!("ambiguous(block {block})"),
    }
}

pub fn summarize_edge(e: &InclusionEdge) -> EdgeSummary {
    EdgeSummary {
        sub_label: e.sub_label.clone(),
        super_label: e.super_label.clone(),
        sub_node: e.sub_node.clone(),
        super_node: e.super_node.clone(),
        genus: e.genus,
        same_node: e.same_node,
        witnesses: e
            .witnesses
            .iter()
            .map(|w| WitnessSummary {
                subgroup_order: w.subgroup_order,
                generators: w.generators.clone(),
                quotient_branch: w.quotient.signature.periods.clone(),
                verdict: verdict_string(&w.membership.verdict),
                copies: w.membership.copies.clone(),
            })
            .collect(),
    }
}

/// The complete report for one run.
#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub schema_version: u32,
    pub scans: Vec<ScanResult>,
    pub families: Vec<FamilySummary>,
    pub edges: Vec<EdgeSummary>,
}

pub fn build_report(
    scans: Vec<ScanResult>,
    analyzed: &[AnalyzedFamily],
    edges: &[InclusionEdge],
) -> Report {
    Report {
        schema_version: REPORT_SCHEMA_VERSION,
        scans,
        families: analyzed.iter().map(summarize_family).collect(),
        edges: edges.iter().map(summarize_edge).collect(),
    }
}

/// TSV: one row per examined passport,
/// `g_prime  group  genus  r  N  verdict`.
pub fn scan_tsv(scans: &[ScanResult]) -> String {
    let mut out = String::from("# g_prime\tgroup\tgenus\tr\tN\tverdict\n");
    for s in scans {
        for row in &s.rows {
            out.push_str(&format!(
                "{}\t{}\t{}\t{}\t{}\t{}\n",
                row.g_prime,
                row.group_name,
                row.genus,
                row.r,
                row.n_delta,
                if row.star { "STAR" } else { "-" }
            ));
        }
    }
    out
}

/// DOT: one digraph per genus represented among the families; edges point
/// from the included family to the including one, merged to node level.
/// Same-node edges (identifications of the same locus) are omitted here but
/// kept in the JSON report.
pub fn inclusion_dot(analyzed: &[AnalyzedFamily], edges: &[InclusionEdge]) -> String {
    use std::collections::BTreeSet;
    let mut genera: Vec<u32> = analyzed.iter().map(|a| a.genus).collect();
    genera.sort_unstable();
    genera.dedup();
    let mut out = String::new();
    for g in genera {
        out.push_str(&format!("digraph genus{g} {{\n  rankdir=BT;\n"));
        let nodes: BTreeSet<&str> = analyzed
            .iter()
            .filter(|a| a.genus == g)
            .map(|a| a.fixture.node.as_str())
            .collect();
        for n in &nodes {
            out.push_str(&format!("  \"{n}\";\n"));
        }
        let node_edges: BTreeSet<(&str, &str)> = edges
            .iter()
            .filter(|e| e.genus == g && !e.same_node)
            .map(|e| (e.sub_node.as_str(), e.super_node.as_str()))
            .collect();
        for (a, b) in node_edges {
            out.push_str(&format!("  \"{a}\" -> \"{b}\";\n"));
        }
        out.push_str("}\n");
    }
    out
}

pub fn report_json(report: &Report) -> Result<String> {
    let mut s = serde_json::to_string_pretty(report)
        .map_err(|e| crate::error::Error::Invalid(e.to_string()))?;
    s.push('\n');
    Ok(s)
}

pub fn emit_report(
    report: &Report,
    analyzed: &[AnalyzedFamily],
    edges: &[InclusionEdge],
    format: ReportFormat,
) -> Result<String> {
    Ok(match format {
        ReportFormat::Json => report_json(report)?,
        ReportFormat::Tsv => scan_tsv(&report.scans),
        ReportFormat::Dot => inclusion_dot(analyzed, edges),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::load_catalog;
    use crate::cover::load_family_fixtures;
    use crate::quotient::detect_inclusions;
    use crate::scan::{analyze_family, run_scan};

    fn data(p: &str) -> std::path::PathBuf {
        std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data").join(p)
    }

    #[test]
    fn outputs_are_byte_stable() {
        let cat = load_catalog(&data("groups.cat")).unwrap();
        let fx = load_family_fixtures(&data("families.json"), &cat).unwrap();
        let analyzed: Vec<_> = fx.iter().map(|f| analyze_family(&cat, f).unwrap()).collect();
        let edges = detect_inclusions(&cat, &analyzed).unwrap();
        let bounds = crate::cover::ScanBounds::for_base_genus(1).unwrap();
        let run = || {
            let s = run_scan(&cat, &bounds).unwrap();
            let rep = build_report(vec![s], &analyzed, &edges);
            (
                report_json(&rep).unwrap(),
                scan_tsv(&rep.scans),
                inclusion_dot(&analyzed, &edges),
            )
        };
        assert_eq!(run(), run());
    }

    #[test]
    fn tsv_contains_the_expected_star_row() {
        let cat = load_catalog(&data("groups.cat")).unwrap();
        let bounds = crate::cover::ScanBounds::for_base_genus(1).unwrap();
        let s = run_scan(&cat, &bounds).unwrap();
        let tsv = scan_tsv(&[s]);
        assert!(tsv.contains("1\tZ/3\t4\t3\t3\tSTAR"));
        assert!(tsv.contains("1\tQ8\t3\t1\t1\tSTAR"));
    }

    #[test]
    fn dot_has_one_digraph_per_genus_and_no_self_loops() {
        let cat = load_catalog(&data("groups.cat")).unwrap();
        let fx = load_family_fixtures(&data("families.json"), &cat).unwrap();
        let analyzed: Vec<_> = fx.iter().map(|f| analyze_family(&cat, f).unwrap()).collect();
        let edges = detect_inclusions(&cat, &analyzed).unwrap();
        let dot = inclusion_dot(&analyzed, &edges);
        assert_eq!(dot.matches("digraph ").count(), 3); // genera 2, 3, 4
        assert!(dot.contains("digraph genus2"));
        for line in dot.lines() {
            if let Some((a, b)) = line.trim().split_once(" -> ") {
                assert_ne!(a, b.trim_end_matches(';'), "self loop in DOT");
            }
        }
        // known node-level edges
        assert!(dot.contains("\"(9)\" -> \"(2e)\""));
        assert!(dot.contains("\"(33)=(35)\" -> \"(31)=(3e)\""));
        assert!(dot.contains("\"(37)\" -> \"(6e)\""));
    }
}
