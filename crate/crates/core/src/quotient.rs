//! Intermediate quotients `C/H`, inclusion detection between families, and
//! fibre membership of the induced Prym/complementary fibrations.
//!
//! Points of `C` over the `j`-th branch point correspond to cosets
//! `g⟨c_j⟩`; a subgroup `H` acts by left multiplication, each orbit is one
//! point of `C/H` with ramification `e = |H ∩ g⟨c_j⟩g⁻¹|` in `C → C/H`.
//! The quotient genus is recomputed independently from the invariants of
//! `H^0(C, K_C)`, and the two must agree.

use crate::catalog::GroupCatalog;
use crate::chartab::CharacterTable;
use crate::cover::{
    enumerate_passports, FamilyFixture, GeneratingVector, ScanBounds, Signature,
};
use crate::decomp::RationalBlock;
use crate::error::{Error, Result};
use crate::group::{mask_elements, Mask, PermGroup};
use crate::hodge::HodgeData;

/// A fully analyzed family: fixture plus all derived invariants.
#[derive(Clone, Debug)]
pub struct AnalyzedFamily {
    pub fixture: FamilyFixture,
    pub signature: Signature,
    pub genus: u32,
    pub table: CharacterTable,
    pub hodge: HodgeData,
    pub blocks: Vec<RationalBlock>,
}

/// The covering data of `C → C/H` and `C/H → base` for a subgroup `H`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientData {
    pub subgroup: Mask,
    pub subgroup_order: u32,
    /// Genus of `C/H`.
    pub quotient_genus: u32,
    /// Signature of the `H`-action on `C`: `(genus of C/H; e_1, ..., e_k)`.
    pub signature: Signature,
    /// Ramification orders `m_j / e > 1` of `C/H → base`, sorted.
    pub lower_periods: Vec<u32>,
}

/// Branch data and genus of `C/H` by orbit counting and Riemann-Hurwitz.
pub fn quotient_signature(
    group: &PermGroup,
    v: &GeneratingVector,
    subgroup: Mask,
) -> Result<QuotientData> {
    let n = group.order();
    let h_elems: Vec<usize> = mask_elements(subgroup).collect();
    let h_order = h_elems.len() as u32;
    if h_order == 0 || !h_elems.contains(&group.identity()) {
        return Err(Error::Invalid("quotient_signature: not a subgroup mask".into()));
    }
    let sig = v.signature(group);
    let g = crate::cover::riemann_hurwitz_genus(n as u32, &sig)? as i64;

    let mut upper = Vec::new(); // e > 1, branch of C -> C/H
    let mut lower = Vec::new(); // m/e > 1, branch of C/H -> base
    let mut ram_sum: i64 = 0; // Σ (|H|/e)(e-1) over all branch orbits
    for &c in &v.branch {
        let m = group.orders[c];
        // cosets g⟨c⟩, keyed by mask
        let cyc: Vec<usize> = (0..m as i64).map(|k| group.pow(c, k)).collect();
        let mut coset_of = vec![usize::MAX; n];
        let mut num_cosets = 0;
        for g0 in 0..n {
            if coset_of[g0] != usize::MAX {
                continue;
            }
            for &ck in &cyc {
                coset_of[group.mul(g0, ck)] = num_cosets;
            }
            num_cosets += 1;
        }
        // H-orbits on the cosets (h acts by g⟨c⟩ -> hg⟨c⟩)
        let mut seen = vec![false; num_cosets];
        for g0 in 0..n {
            let c0 = coset_of[g0];
            if seen[c0] {
                continue;
            }
            let mut orbit = std::collections::BTreeSet::new();
            for &h in &h_elems {
                orbit.insert(coset_of[group.mul(h, g0)]);
            }
            for &o in &orbit {
                seen[o] = true;
            }
            let orbit_size = orbit.len() as u32;
            if !h_order.is_multiple_of(orbit_size) {
                return Err(Error::integrality(
                    "quotient_signature",
                    "orbit size does not divide |H|",
                ));
            }
            let e = h_order / orbit_size;
            if !m.is_multiple_of(e) {
                return Err(Error::integrality(
                    "quotient_signature",
                    "point stabilizer order does not divide the period",
                ));
            }
            if e > 1 {
                upper.push(e);
            }
            if m / e > 1 {
                lower.push(m / e);
            }
            ram_sum += (h_order / e) as i64 * (e as i64 - 1);
        }
    }
    // 2g - 2 = |H| (2 g_H - 2) + ram_sum
    let rhs = 2 * g - 2 - ram_sum;
    if rhs % h_order as i64 != 0 {
        return Err(Error::integrality("quotient_signature", "RH for C -> C/H fails"));
    }
    let two_gh_minus_2 = rhs / h_order as i64;
    if two_gh_minus_2 % 2 != 0 || two_gh_minus_2 < -2 {
        return Err(Error::integrality("quotient_signature", "RH for C -> C/H fails"));
    }
    let g_h = ((two_gh_minus_2 + 2) / 2) as u32;
    upper.sort_unstable();
    lower.sort_unstable();
    Ok(QuotientData {
        subgroup,
        subgroup_order: h_order,
        quotient_genus: g_h,
        signature: Signature {
            g_prime: g_h,
            periods: upper,
        },
        lower_periods: lower,
    })
}

/// `dim H^0(C, K_C)^H = Σ_χ ν_χ dim V_χ^H` — the genus of `C/H`,
/// independently of any orbit counting.
pub fn invariant_h0_dim(
    group: &PermGroup,
    table: &CharacterTable,
    nu: &[u64],
    subgroup: Mask,
) -> Result<u64> {
    let mut total = 0;
    for (ci, &n) in nu.iter().enumerate() {
        if n > 0 {
            total += n * table.restriction_invariant_dim(group, ci, subgroup)?;
        }
    }
    Ok(total)
}

/// Where a sub-family sits relative to the two fibrations of a super-family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FibreVerdict {
    /// Contained in a fibre of the Prym map; `full` if it fills one.
    Prym { full: bool },
    /// Contained in a fibre of the complementary map; `full` if it fills one.
    Phi { full: bool },
    /// Contained in fibres of both maps.
    Both { prym_full: bool, phi_full: bool },
    /// Contained in a fibre of neither map.
    Neither,
    /// An isotypic block splits fractionally across the quotient; the datum
    /// cannot be classified by this criterion.
    Ambiguous { block: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FibreMembership {
    /// Copies `k_O` of each sub-family block surviving in `J(C/H)`.
    pub copies: Vec<u64>,
    /// Blocks contributing to `J(C/H)` (the super elliptic side).
    pub e_side: Vec<usize>,
    /// Blocks contributing to the complementary (Prym) side.
    pub prym_side: Vec<usize>,
    pub verdict: FibreVerdict,
}

/// Decide membership of `sub` in a fibre of the Prym or complementary
/// fibration of `sup`, through the quotient by `subgroup`.
///
/// The Prym fibre direction is spanned by the factors on the `J(C/H)` side;
/// `sub` lies in a single fibre of a map exactly when every factor on the
/// other map's side is fixed in the `sub` family.
pub fn fibre_membership(
    sub: &AnalyzedFamily,
    sup: &AnalyzedFamily,
    group: &PermGroup,
    subgroup: Mask,
) -> Result<FibreMembership> {
    let mut copies = Vec::with_capacity(sub.blocks.len());
    for (bi, b) in sub.blocks.iter().enumerate() {
        let mut inv = 0u64;
        for &ci in &b.orbit {
            if sub.hodge.nu[ci] > 0 {
                inv += sub.hodge.nu[ci]
                    * sub.table.restriction_invariant_dim(group, ci, subgroup)?;
            }
        }
        if !inv.is_multiple_of(b.factor_dim) || inv / b.factor_dim > b.exponent as u64 {
            return Ok(FibreMembership {
                copies,
                e_side: Vec::new(),
                prym_side: Vec::new(),
                verdict: FibreVerdict::Ambiguous { block: bi },
            });
        }
        copies.push(inv / b.factor_dim);
    }
    // total invariant dimension must be the super base genus
    let total: u64 = copies
        .iter()
        .zip(&sub.blocks)
        .map(|(&k, b)| k * b.factor_dim)
        .sum();
    if total != sup.fixture.vector.g_prime as u64 {
        return Err(Error::integrality(
            "fibre_membership",
            format!("quotient Jacobian dimension {total} != super base genus"),
        ));
    }
    let e_side: Vec<usize> = (0..sub.blocks.len()).filter(|&i| copies[i] > 0).collect();
    let prym_side: Vec<usize> = (0..sub.blocks.len())
        .filter(|&i| sub.blocks[i].exponent as u64 - copies[i] > 0)
        .collect();
    let in_phi = e_side.iter().all(|&i| !sub.blocks[i].moving);
    let in_prym = prym_side.iter().all(|&i| !sub.blocks[i].moving);
    let sub_dim = sub.hodge.dim_moduli as u64;
    let prym_full = sub_dim == sup.hodge.prym_fibre_dim;
    let phi_full = sub_dim == sup.hodge.phi_fibre_dim;
    let verdict = match (in_prym, in_phi) {
        (true, true) => FibreVerdict::Both { prym_full, phi_full },
        (true, false) => FibreVerdict::Prym { full: prym_full },
        (false, true) => FibreVerdict::Phi { full: phi_full },
        (false, false) => FibreVerdict::Neither,
    };
    Ok(FibreMembership {
        copies,
        e_side,
        prym_side,
        verdict,
    })
}

/// One witness subgroup for an inclusion.
#[derive(Clone, Debug)]
pub struct InclusionWitness {
    pub subgroup: Mask,
    pub subgroup_order: u32,
    /// Minimal generators in cycle notation, for display.
    pub generators: Vec<String>,
    pub quotient: QuotientData,
    pub membership: FibreMembership,
}

/// A detected inclusion `sub ⊂ sup` between families of the same genus.
#[derive(Clone, Debug)]
pub struct InclusionEdge {
    pub sub_label: String,
    pub sub_node: String,
    pub super_label: String,
    pub super_node: String,
    pub genus: u32,
    /// True when both families realize the same locus (same node).
    pub same_node: bool,
    pub witnesses: Vec<InclusionWitness>,
}

/// Detect inclusions among the analyzed families: `sub ⊂ sup` holds when a
/// proper subgroup `H` of the sub group is isomorphic to the super group and
/// acts on the sub curve with exactly the super family's covering data.
///
/// Super candidates are the base-genus-one families satisfying the dimension
/// condition.  Isomorphism testing uses element-order multisets, which
/// separate all isomorphism classes up to order 8; every super group is
/// checked to be in that range, and the super passport is checked to be the
/// unique one for its group and signature, so the matched `H`-action lands
/// in the super family and not merely in one with the same numerics.
pub fn detect_inclusions(
    catalog: &GroupCatalog,
    analyzed: &[AnalyzedFamily],
) -> Result<Vec<InclusionEdge>> {
    let mut edges = Vec::new();
    for sup in analyzed {
        if sup.fixture.vector.g_prime != 1 || !sup.hodge.star {
            continue;
        }
        let sup_group = catalog
            .get(sup.fixture.group_id)
            .ok_or_else(|| Error::Catalog(format!("missing {}", sup.fixture.group_id)))?;
        if sup_group.order() > 8 {
            return Err(Error::Invalid(format!(
                "detect_inclusions: order-multiset isomorphism test not validated beyond \
                 order 8, super group {} has order {}",
                sup_group.name,
                sup_group.order()
            )));
        }
        // the super passport must be the unique one for (group, signature)
        let bounds = ScanBounds::with_g_max(1, sup.genus)?;
        let same_sig = enumerate_passports(sup_group, 1, &bounds)?
            .into_iter()
            .filter(|p| p.signature == sup.signature)
            .count();
        if same_sig != 1 {
            return Err(Error::Invalid(format!(
                "detect_inclusions: {} passports share the signature of {}",
                same_sig, sup.fixture.label
            )));
        }
        let sup_orders = sup_group.order_multiset();

        for sub in analyzed {
            if sub.fixture.label == sup.fixture.label || sub.genus != sup.genus {
                continue;
            }
            let group = catalog
                .get(sub.fixture.group_id)
                .ok_or_else(|| Error::Catalog(format!("missing {}", sub.fixture.group_id)))?;
            let mut witnesses = Vec::new();
            for rec in group.subgroups_up_to_conjugacy() {
                if rec.order as usize >= group.order()
                    || rec.order <= 1
                    || rec.order as usize != sup_group.order()
                {
                    continue;
                }
                if group.order_multiset_of_mask(rec.mask) != sup_orders {
                    continue;
                }
                let q = quotient_signature(group, &sub.fixture.vector, rec.mask)?;
                // oracle: orbit-count genus vs character-theoretic genus
                let by_chars =
                    invariant_h0_dim(group, &sub.table, &sub.hodge.nu, rec.mask)?;
                if by_chars != q.quotient_genus as u64 {
                    return Err(Error::integrality(
                        "detect_inclusions",
                        format!(
                            "{} / H: RH genus {} but invariant H^0 dimension {}",
                            sub.fixture.label, q.quotient_genus, by_chars
                        ),
                    ));
                }
                if q.quotient_genus != 1 || q.signature.periods != sup.signature.periods {
                    continue;
                }
                let membership = fibre_membership(sub, sup, group, rec.mask)?;
                let generators = group
                    .minimal_generators_of_mask(rec.mask)
                    .iter()
                    .map(|&e| group.elements[e].to_cycles_string())
                    .collect();
                witnesses.push(InclusionWitness {
                    subgroup: rec.mask,
                    subgroup_order: rec.order,
                    generators,
                    quotient: q,
                    membership,
                });
            }
            if !witnesses.is_empty() {
                witnesses.sort_by_key(|w| w.subgroup);
                edges.push(InclusionEdge {
                    sub_label: sub.fixture.label.clone(),
                    sub_node: sub.fixture.node.clone(),
                    super_label: sup.fixture.label.clone(),
                    super_node: sup.fixture.node.clone(),
                    genus: sub.genus,
                    same_node: sub.fixture.node == sup.fixture.node,
                    witnesses,
                });
            }
        }
    }
    edges.sort_by(|a, b| {
        (a.genus, &a.sub_label, &a.super_label).cmp(&(b.genus, &b.sub_label, &b.super_label))
    });
    Ok(edges)
}
