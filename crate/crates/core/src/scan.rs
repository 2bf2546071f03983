//! The exhaustive scan over the group catalog, and per-family analysis.
//!
//! `run_scan` enumerates every passport for every admissible catalog group
//! at the chosen base genus, computes `N(Δ)` for each, and reports which
//! satisfy the distinguishing dimension condition.  All arithmetic is exact
//! and the output ordering is deterministic, so repeated runs are
//! byte-identical.

use rayon::prelude::*;
use serde::Serialize;

use crate::catalog::GroupCatalog;
use crate::chartab::character_table;
use crate::cover::{enumerate_passports, FamilyFixture, ScanBounds, Signature};
use crate::decomp::jacobian_decomposition;
use crate::error::{Error, Result};
use crate::group::GroupId;
use crate::hodge::hodge_data;
use crate::quotient::AnalyzedFamily;

/// One examined passport.
#[derive(Clone, Debug, Serialize)]
pub struct ScanRow {
    pub g_prime: u32,
    pub group_order: u32,
    pub group_index: u32,
    pub group_name: String,
    pub genus: u32,
    pub signature: Vec<u32>,
    pub r: usize,
    /// Aut-canonical class indices of the branch elements.
    pub branch_classes: Vec<usize>,
    pub n_delta: u64,
    pub dim_moduli: i64,
    pub star: bool,
}

/// Deterministic work counters (no wall-clock content).
#[derive(Clone, Copy, Debug, Default, Serialize)]
pub struct WorkCounters {
    pub groups_considered: usize,
    pub groups_admissible: usize,
    pub passports_examined: usize,
    pub star_count: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct ScanResult {
    pub g_prime: u32,
    pub g_max: u32,
    pub max_order_ramified: u32,
    pub max_order_etale: u32,
    pub rows: Vec<ScanRow>,
    pub work: WorkCounters,
}

impl ScanResult {
    pub fn star_rows(&self) -> impl Iterator<Item = &ScanRow> {
        self.rows.iter().filter(|r| r.star)
    }
}

/// Scan every catalog group within the bounds for base genus `g_prime`.
pub fn run_scan(catalog: &GroupCatalog, bounds: &ScanBounds) -> Result<ScanResult> {
    let g_prime = bounds.g_prime;
    let max_order = if g_prime >= 2 {
        bounds.max_order_ramified.max(bounds.max_order_etale)
    } else {
        bounds.max_order_ramified
    };
    let groups: Vec<_> = catalog.groups().collect();
    let admissible: Vec<_> = groups
        .iter()
        .filter(|g| g.id.order <= max_order)
        .collect();
    let per_group: Vec<Vec<ScanRow>> = admissible
        .par_iter()
        .map(|g| -> Result<Vec<ScanRow>> {
            let table = character_table(g)?;
            let mut rows = Vec::new();
            for p in enumerate_passports(g, g_prime, bounds)? {
                let h = hodge_data(g, &table, &p.witness)?;
                rows.push(ScanRow {
                    g_prime,
                    group_order: g.id.order,
                    group_index: g.id.index,
                    group_name: g.name.clone(),
                    genus: p.genus,
                    signature: p.signature.periods.clone(),
                    r: p.signature.r(),
                    branch_classes: p.branch_classes.clone(),
                    n_delta: h.n_delta,
                    dim_moduli: h.dim_moduli,
                    star: h.star,
                });
            }
            Ok(rows)
        })
        .collect::<Result<_>>()?;
    let mut rows: Vec<ScanRow> = per_group.into_iter().flatten().collect();
    rows.sort_by(|a, b| {
        (a.genus, a.group_order, a.group_index, &a.signature, &a.branch_classes).cmp(&(
            b.genus,
            b.group_order,
            b.group_index,
            &b.signature,
            &b.branch_classes,
        ))
    });
    let work = WorkCounters {
        groups_considered: groups.len(),
        groups_admissible: admissible.len(),
        passports_examined: rows.len(),
        star_count: rows.iter().filter(|r| r.star).count(),
    };
    Ok(ScanResult {
        g_prime,
        g_max: bounds.g_max,
        max_order_ramified: bounds.max_order_ramified,
        max_order_etale: bounds.max_order_etale,
        rows,
        work,
    })
}

/// Analyze one curated family end to end, checking every pinned expectation.
/// A disagreement is an `ExpectationMismatch` (distinct process exit code).
pub fn analyze_family(catalog: &GroupCatalog, fixture: &FamilyFixture) -> Result<AnalyzedFamily> {
    let group = catalog
        .get(fixture.group_id)
        .ok_or_else(|| Error::Catalog(format!("missing {}", fixture.group_id)))?;
    let table = character_table(group)?;
    let hodge = hodge_data(group, &table, &fixture.vector)?;
    let signature = fixture.vector.signature(group);
    let genus = crate::cover::riemann_hurwitz_genus(group.order() as u32, &signature)?;
    let blocks = jacobian_decomposition(&table, &hodge)?;

    let mismatch = |field: &str, expected: String, computed: String| Error::ExpectationMismatch {
        label: fixture.label.clone(),
        field: field.into(),
        expected,
        computed,
    };
    if genus != fixture.expect.genus {
        return Err(mismatch("genus", fixture.expect.genus.to_string(), genus.to_string()));
    }
    if hodge.n_delta != fixture.expect.n_delta {
        return Err(mismatch(
            "n_delta",
            fixture.expect.n_delta.to_string(),
            hodge.n_delta.to_string(),
        ));
    }
    if hodge.dim_moduli != fixture.expect.dim_family {
        return Err(mismatch(
            "dim_family",
            fixture.expect.dim_family.to_string(),
            hodge.dim_moduli.to_string(),
        ));
    }
    if hodge.star != fixture.expect.star {
        return Err(mismatch(
            "star",
            fixture.expect.star.to_string(),
            hodge.star.to_string(),
        ));
    }
    let mut h0_rows: Vec<(u32, u64)> = table
        .chars
        .iter()
        .zip(&hodge.nu)
        .skip(1)
        .filter(|(_, &n)| n > 0)
        .map(|(c, &n)| (c.degree, n))
        .collect();
    h0_rows.sort_unstable();
    let mut expected_h0 = fixture.expect.h0_nontrivial.clone();
    expected_h0.sort_unstable();
    if h0_rows != expected_h0 {
        return Err(mismatch(
            "h0_nontrivial",
            format!("{expected_h0:?}"),
            format!("{h0_rows:?}"),
        ));
    }
    let mut block_rows: Vec<(u64, u32, bool)> = blocks
        .iter()
        .map(|b| (b.factor_dim, b.exponent, b.moving))
        .collect();
    block_rows.sort_unstable();
    let mut expected_blocks: Vec<(u64, u32, bool)> = fixture
        .expect
        .blocks
        .iter()
        .map(|&(d, n, m)| (d as u64, n, m))
        .collect();
    expected_blocks.sort_unstable();
    if block_rows != expected_blocks {
        return Err(mismatch(
            "blocks",
            format!("{expected_blocks:?}"),
            format!("{block_rows:?}"),
        ));
    }
    Ok(AnalyzedFamily {
        fixture: fixture.clone(),
        signature,
        genus,
        table,
        hodge,
        blocks,
    })
}

/// Every catalog group in the unramified range has a nontrivial character of
/// degree 1; this is the representation-theoretic input to the nonexistence
/// of positive-dimensional unramified families over base genus >= 2, checked
/// directly rather than assumed.
pub fn verify_unramified_lemma_input(catalog: &GroupCatalog) -> Result<()> {
    for g in catalog.groups() {
        if g.id.order > 12 {
            continue;
        }
        let t = character_table(g)?;
        let linear = t.chars.iter().filter(|c| c.degree == 1).count();
        if linear < 2 {
            return Err(Error::Invalid(format!(
                "group {} has no nontrivial degree-1 character",
                g.name
            )));
        }
    }
    Ok(())
}

/// The identifying key of a star family: `(g', group name, g, r, N)`.
pub fn star_key(row: &ScanRow) -> (u32, String, u32, usize, u64) {
    (
        row.g_prime,
        row.group_name.clone(),
        row.genus,
        row.r,
        row.n_delta,
    )
}

/// Convenience: the signature of a scan row as a `Signature`.
pub fn row_signature(row: &ScanRow) -> Signature {
    Signature {
        g_prime: row.g_prime,
        periods: row.signature.clone(),
    }
}

/// Identify the catalog group of a scan row.
pub fn row_group_id(row: &ScanRow) -> GroupId {
    GroupId {
        order: row.group_order,
        index: row.group_index,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::load_catalog;
    use crate::cover::load_family_fixtures;

    fn data(p: &str) -> std::path::PathBuf {
        std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data").join(p)
    }

    #[test]
    fn base_genus_one_scan_finds_exactly_six_families() {
        let cat = load_catalog(&data("groups.cat")).unwrap();
        let bounds = ScanBounds::for_base_genus(1).unwrap();
        let res = run_scan(&cat, &bounds).unwrap();
        let mut keys: Vec<_> = res.star_rows().map(star_key).collect();
        keys.sort();
        let expected: Vec<(u32, String, u32, usize, u64)> = vec![
            (1, "Q8".into(), 3, 1, 1),
            (1, "Z/2".into(), 2, 2, 2),
            (1, "Z/2".into(), 3, 4, 4),
            (1, "Z/3".into(), 3, 2, 2),
            (1, "Z/3".into(), 4, 3, 3),
            (1, "Z/4".into(), 3, 2, 2),
        ];
        assert_eq!(keys, expected);
    }

    #[test]
    fn higher_base_genus_scans_find_nothing() {
        let cat = load_catalog(&data("groups.cat")).unwrap();
        for gp in [2, 3] {
            let bounds = ScanBounds::for_base_genus(gp).unwrap();
            let res = run_scan(&cat, &bounds).unwrap();
            assert_eq!(res.star_rows().count(), 0, "base genus {gp}");
            assert!(res.work.passports_examined > 0, "base genus {gp}");
        }
    }

    #[test]
    fn unramified_lemma_input_holds() {
        let cat = load_catalog(&data("groups.cat")).unwrap();
        verify_unramified_lemma_input(&cat).unwrap();
    }

    #[test]
    fn analyze_family_accepts_all_fixtures() {
        let cat = load_catalog(&data("groups.cat")).unwrap();
        let fx = load_family_fixtures(&data("families.json"), &cat).unwrap();
        for f in &fx {
            analyze_family(&cat, f).unwrap();
        }
    }

    #[test]
    fn analyze_family_rejects_tampered_expectations() {
        let cat = load_catalog(&data("groups.cat")).unwrap();
        let fx = load_family_fixtures(&data("families.json"), &cat).unwrap();
        let mut f = fx[0].clone();
        f.expect.n_delta += 1;
        let err = analyze_family(&cat, &f).unwrap_err();
        assert_eq!(err.exit_code(), 2);
    }
}
