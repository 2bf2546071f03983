//! Covering data: signatures, generating vectors, Riemann-Hurwitz, passport
//! enumeration with automorphism dedup, and the curated family fixtures.
//!
//! A datum is a finite group `G` together with a surjection from the orbifold
//! surface group of signature `(g'; m_1, ..., m_r)`, recorded concretely as a
//! generating vector: hyperbolic pairs `(a_j, b_j)` and branch elements
//! `c_i` of order `m_i` satisfying `c_1 ... c_r [a_1,b_1] ... [a_g',b_g'] = 1`
//! and generating `G`.

use std::collections::{BTreeMap, BTreeSet};
use std::path::Path;

use num_rational::Rational64;
use num_traits::Zero;
use serde::Deserialize;

use crate::catalog::GroupCatalog;
use crate::error::{Error, Result};
use crate::group::{GroupId, PermGroup};
use crate::perm::Perm;

/// Orbifold signature `(g'; m_1 <= ... <= m_r)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Signature {
    pub g_prime: u32,
    pub periods: Vec<u32>,
}

impl Signature {
    pub fn r(&self) -> usize {
        self.periods.len()
    }

    /// Teichmüller dimension of the base orbifold, `3g' - 3 + r`.
    pub fn moduli_dim(&self) -> i64 {
        3 * self.g_prime as i64 - 3 + self.r() as i64
    }

    /// Negative of the orbifold Euler characteristic,
    /// `2g' - 2 + Σ (1 - 1/m_i)`; the signature is hyperbolic iff positive.
    pub fn minus_euler(&self) -> Rational64 {
        let mut s = Rational64::from_integer(2 * self.g_prime as i64 - 2);
        for &m in &self.periods {
            s += Rational64::new(m as i64 - 1, m as i64);
        }
        s
    }

    pub fn is_hyperbolic(&self) -> bool {
        self.minus_euler() > Rational64::zero()
    }
}

/// A generating vector, elements given as indices into `PermGroup::elements`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratingVector {
    pub g_prime: u32,
    /// Hyperbolic pairs `(a_j, b_j)`, one per handle of the base.
    pub hyperbolic: Vec<(usize, usize)>,
    /// Branch elements `c_1, ..., c_r` (all nontrivial).
    pub branch: Vec<usize>,
}

impl GeneratingVector {
    pub fn signature(&self, group: &PermGroup) -> Signature {
        let mut periods: Vec<u32> = self.branch.iter().map(|&c| group.orders[c]).collect();
        periods.sort_unstable();
        Signature {
            g_prime: self.g_prime,
            periods,
        }
    }

    /// Left-hand side of the surface relation
    /// `c_1 ... c_r [a_1,b_1] ... [a_g',b_g']`.
    pub fn relation_product(&self, group: &PermGroup) -> usize {
        let mut p = group.identity();
        for &c in &self.branch {
            p = group.mul(p, c);
        }
        for &(a, b) in &self.hyperbolic {
            p = group.mul(p, group.commutator(a, b));
        }
        p
    }

    pub fn all_entries(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.branch.clone();
        for &(a, b) in &self.hyperbolic {
            v.push(a);
            v.push(b);
        }
        v
    }
}

/// Outcome of checking a would-be generating vector.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VectorVerdict {
    Ok,
    /// Some branch element is the identity (periods must be >= 2).
    IdentityBranchElement,
    /// The surface relation does not hold.
    RelationFails,
    /// The entries do not generate the group.
    NotSurjective,
}

pub fn validate_generating_vector(group: &PermGroup, v: &GeneratingVector) -> VectorVerdict {
    if v.hyperbolic.len() != v.g_prime as usize {
        return VectorVerdict::RelationFails;
    }
    if v.branch.iter().any(|&c| c == group.identity()) {
        return VectorVerdict::IdentityBranchElement;
    }
    if v.relation_product(group) != group.identity() {
        return VectorVerdict::RelationFails;
    }
    if !group.generates(&v.all_entries()) {
        return VectorVerdict::NotSurjective;
    }
    VectorVerdict::Ok
}

/// Genus of the cover, by Riemann-Hurwitz:
/// `g = 1 + n(g'-1) + (n/2) Σ (1 - 1/m_i)`.  Errors if not an integer.
pub fn riemann_hurwitz_genus(n: u32, sig: &Signature) -> Result<u32> {
    let mut g = Rational64::from_integer(1 + n as i64 * (sig.g_prime as i64 - 1));
    for &m in &sig.periods {
        g += Rational64::new(n as i64, 2) * Rational64::new(m as i64 - 1, m as i64);
    }
    if !g.is_integer() || *g.numer() < 0 {
        return Err(Error::integrality(
            "riemann_hurwitz_genus",
            format!("RH genus {g} is not a nonnegative integer"),
        ));
    }
    Ok(*g.numer() as u32)
}

/// A passport: group, base genus, and the multiset of conjugacy classes of
/// the branch elements, canonical under `Aut(G)`; one witness vector kept.
#[derive(Clone, Debug)]
pub struct Passport {
    pub group_id: GroupId,
    pub group_name: String,
    pub signature: Signature,
    /// Sorted class indices of the branch elements, Aut-canonical.
    pub branch_classes: Vec<usize>,
    pub genus: u32,
    pub witness: GeneratingVector,
}

/// Canonical form of a branch-class multiset under the class permutations
/// induced by `Aut(G)`: the lexicographic minimum over the orbit.
pub fn canonical_branch_classes(classes: &[usize], class_perms: &[Vec<usize>]) -> Vec<usize> {
    let mut sorted: Vec<usize> = classes.to_vec();
    sorted.sort_unstable();
    let mut best = sorted.clone();
    for cp in class_perms {
        let mut image: Vec<usize> = sorted.iter().map(|&c| cp[c]).collect();
        image.sort_unstable();
        if image < best {
            best = image;
        }
    }
    best
}

/// Search bounds for a scan at base genus `g'`, with their derivations.
#[derive(Clone, Copy, Debug)]
pub struct ScanBounds {
    pub g_prime: u32,
    /// Largest cover genus examined.
    pub g_max: u32,
    /// Largest group order for ramified data (r >= 1).
    pub max_order_ramified: u32,
    /// Largest group order for unramified data (r = 0, only when g' >= 2).
    pub max_order_etale: u32,
}

impl ScanBounds {
    /// Default bounds: `g_max = 6g' + 1` is where `N >= g'(g'+1)/2` together
    /// with `N = 3g' - 3 + r` forces the search to close, and the order
    /// bounds follow from Riemann-Hurwitz:
    /// `2g - 2 >= n(2g' - 2) + n r / 2` with `r >= 1` when ramified, and
    /// `2g - 2 >= n(2g' - 2)` when unramified.
    pub fn for_base_genus(g_prime: u32) -> Result<ScanBounds> {
        if !(1..=3).contains(&g_prime) {
            return Err(Error::Invalid(format!(
                "scan supports base genus 1..3, got {g_prime}"
            )));
        }
        let g_max = 6 * g_prime + 1;
        Self::with_g_max(g_prime, g_max)
    }

    pub fn with_g_max(g_prime: u32, g_max: u32) -> Result<ScanBounds> {
        if !(1..=3).contains(&g_prime) {
            return Err(Error::Invalid(format!(
                "scan supports base genus 1..3, got {g_prime}"
            )));
        }
        let two_g_minus_2 = 2 * g_max as i64 - 2;
        // ramified: n * (2g'-2 + 1/2) <= 2g-2
        let denom_ram = Rational64::from_integer(2 * g_prime as i64 - 2) + Rational64::new(1, 2);
        let max_order_ramified =
            (Rational64::from_integer(two_g_minus_2) / denom_ram).floor().to_integer() as u32;
        // unramified: n * (2g'-2) <= 2g-2 (only meaningful for g' >= 2)
        let max_order_etale = if g_prime >= 2 {
            (two_g_minus_2 / (2 * g_prime as i64 - 2)) as u32
        } else {
            0
        };
        let b = ScanBounds {
            g_prime,
            g_max,
            max_order_ramified,
            max_order_etale,
        };
        // pinned values for the default window, so a silent arithmetic slip
        // in the derivation cannot widen or narrow the search
        if g_max == 6 * g_prime + 1 {
            let expected = match g_prime {
                1 => (24, 0),
                2 => (9, 12),
                3 => (8, 9),
                _ => unreachable!(),
            };
            assert_eq!((b.max_order_ramified, b.max_order_etale), expected);
        }
        Ok(b)
    }

    /// Largest admissible r for a group of order n: from
    /// `n Σ (1 - 1/m_i) <= 2g - 2 - n(2g' - 2)` and `1 - 1/m >= 1/2`.
    pub fn max_r(&self, n: u32) -> usize {
        let budget = 2 * self.g_max as i64 - 2 - n as i64 * (2 * self.g_prime as i64 - 2);
        if budget <= 0 {
            0
        } else {
            (2 * budget / n as i64) as usize
        }
    }
}

/// Enumerate all passports for `group` at base genus `g_prime` with cover
/// genus in `2..=bounds.g_max`, deduplicated under `Aut(G)`.
///
/// Strategy: enumerate sorted branch-class multisets first (pruned by
/// Riemann-Hurwitz and Aut-canonicity), then search for a witness vector.
/// Conjugating a vector leaves its passport fixed, so the first branch
/// element may be pinned to its class representative; the last branch
/// element is determined by the surface relation.
pub fn enumerate_passports(
    group: &PermGroup,
    g_prime: u32,
    bounds: &ScanBounds,
) -> Result<Vec<Passport>> {
    let n = group.order() as u32;
    let class_perms = group.class_permutations_from_auts(&group.automorphism_group());
    let nontrivial: Vec<usize> = (1..group.classes.len()).collect();
    let mut out: Vec<Passport> = Vec::new();

    // r = 0 (unramified), only hyperbolic for g' >= 2
    if g_prime >= 2 && n <= bounds.max_order_etale {
        let sig = Signature {
            g_prime,
            periods: Vec::new(),
        };
        let genus = riemann_hurwitz_genus(n, &sig)?;
        if (2..=bounds.g_max).contains(&genus) {
            if let Some(witness) = find_witness(group, g_prime, &[]) {
                out.push(Passport {
                    group_id: group.id,
                    group_name: group.name.clone(),
                    signature: sig,
                    branch_classes: Vec::new(),
                    genus,
                    witness,
                });
            }
        }
    }

    if n > bounds.max_order_ramified {
        return Ok(out);
    }
    let max_r = bounds.max_r(n);
    // sorted class multisets of each length r
    let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut stack: Vec<usize> = Vec::new();
    for r in 1..=max_r {
        enumerate_multisets(&nontrivial, r, &mut stack, &mut |classes| {
            let canon = canonical_branch_classes(classes, &class_perms);
            if canon != *classes || seen.contains(&canon) {
                return Ok(());
            }
            let mut periods: Vec<u32> =
                classes.iter().map(|&c| group.classes[c].order).collect();
            periods.sort_unstable();
            let sig = Signature { g_prime, periods };
            if !sig.is_hyperbolic() {
                return Ok(());
            }
            let genus = match riemann_hurwitz_genus(n, &sig) {
                Ok(g) => g,
                Err(_) => return Ok(()), // non-integral genus: no such cover
            };
            if !(2..=bounds.g_max).contains(&genus) {
                return Ok(());
            }
            if let Some(witness) = find_witness(group, g_prime, classes) {
                seen.insert(canon.clone());
                out.push(Passport {
                    group_id: group.id,
                    group_name: group.name.clone(),
                    signature: sig,
                    branch_classes: canon,
                    genus,
                    witness,
                });
            }
            Ok(())
        })?;
    }
    out.sort_by(|a, b| {
        a.signature
            .cmp(&b.signature)
            .then_with(|| a.branch_classes.cmp(&b.branch_classes))
    });
    Ok(out)
}

fn enumerate_multisets(
    pool: &[usize],
    r: usize,
    stack: &mut Vec<usize>,
    f: &mut dyn FnMut(&[usize]) -> Result<()>,
) -> Result<()> {
    if stack.len() == r {
        return f(stack);
    }
    let start = stack.last().copied().unwrap_or(0);
    for &c in pool.iter().filter(|&&c| c >= start) {
        stack.push(c);
        enumerate_multisets(pool, r, stack, f)?;
        stack.pop();
    }
    Ok(())
}

/// Find one generating vector with branch classes exactly `classes`
/// (in that order) and `g_prime` hyperbolic pairs, or None.
pub fn find_witness(
    group: &PermGroup,
    g_prime: u32,
    classes: &[usize],
) -> Option<GeneratingVector> {
    let r = classes.len();
    // candidate elements per branch slot; slot 0 pinned to the class rep
    let slot_pool: Vec<Vec<usize>> = classes
        .iter()
        .enumerate()
        .map(|(i, &c)| {
            if i == 0 {
                vec![group.classes[c].representative]
            } else {
                group.classes[c].members.clone()
            }
        })
        .collect();
    // hyperbolic pairs chosen one at a time, tracking the commutator product
    let mut pairs: Vec<(usize, usize)> = Vec::with_capacity(g_prime as usize);
    let mut chosen = vec![0usize; r];
    search_hyperbolic(
        group,
        &slot_pool,
        g_prime,
        group.identity(),
        &mut pairs,
        &mut chosen,
    )
}

fn search_hyperbolic(
    group: &PermGroup,
    slot_pool: &[Vec<usize>],
    g_prime: u32,
    comm_prod: usize,
    pairs: &mut Vec<(usize, usize)>,
    chosen: &mut Vec<usize>,
) -> Option<GeneratingVector> {
    if pairs.len() < g_prime as usize {
        for a in 0..group.order() {
            for b in 0..group.order() {
                pairs.push((a, b));
                let p = group.mul(comm_prod, group.commutator(a, b));
                if let Some(v) = search_hyperbolic(group, slot_pool, g_prime, p, pairs, chosen) {
                    return Some(v);
                }
                pairs.pop();
            }
        }
        return None;
    }
    search_branch(group, slot_pool, g_prime, comm_prod, 0, group.identity(), pairs, chosen)
}

#[allow(clippy::too_many_arguments)]
fn search_branch(
    group: &PermGroup,
    slot_pool: &[Vec<usize>],
    g_prime: u32,
    comm_prod: usize,
    depth: usize,
    prefix_prod: usize,
    pairs: &[(usize, usize)],
    chosen: &mut Vec<usize>,
) -> Option<GeneratingVector> {
    let r = slot_pool.len();
    if depth + 1 == r || r == 0 {
        // last branch element (if any) is forced by the relation
        // c_1 .. c_r * K = 1 with K the commutator product
        let v = if r == 0 {
            if comm_prod != group.identity() {
                return None;
            }
            GeneratingVector {
                g_prime,
                hyperbolic: pairs.to_vec(),
                branch: Vec::new(),
            }
        } else {
            let last = group.inv(group.mul(comm_prod, prefix_prod));
            if !slot_pool[r - 1].contains(&last) {
                return None;
            }
            chosen[r - 1] = last;
            GeneratingVector {
                g_prime,
                hyperbolic: pairs.to_vec(),
                branch: chosen.clone(),
            }
        };
        if validate_generating_vector(group, &v) == VectorVerdict::Ok {
            return Some(v);
        }
        return None;
    }
    for &c in &slot_pool[depth] {
        chosen[depth] = c;
        if let Some(v) = search_branch(
            group,
            slot_pool,
            g_prime,
            comm_prod,
            depth + 1,
            group.mul(prefix_prod, c),
            pairs,
            chosen,
        ) {
            return Some(v);
        }
    }
    None
}

// ---------------------------------------------------------------------------
// Curated family fixtures
// ---------------------------------------------------------------------------

#[derive(Debug, Deserialize)]
struct FixtureFileRaw {
    schema_version: u32,
    families: Vec<FixtureRaw>,
}

#[derive(Debug, Deserialize)]
struct FixtureRaw {
    label: String,
    aliases: Vec<String>,
    node: String,
    group: GroupRef,
    base_genus: u32,
    hyperbolic: Vec<(String, String)>,
    branch: Vec<String>,
    #[serde(default)]
    named_elements: BTreeMap<String, String>,
    expect: FixtureExpect,
    #[serde(default)]
    notes: String,
}

#[derive(Debug, Deserialize)]
struct GroupRef {
    order: u32,
    index: u32,
    name: String,
}

/// Pinned expectations carried by each fixture.
#[derive(Clone, Debug, Deserialize)]
pub struct FixtureExpect {
    pub signature: Vec<u32>,
    pub genus: u32,
    pub r: usize,
    pub n_delta: u64,
    pub dim_family: i64,
    pub star: bool,
    /// `(degree, multiplicity)` rows of the nontrivial part of `H^0(K)`.
    pub h0_nontrivial: Vec<(u32, u64)>,
    /// `(factor_dim, exponent, moving)` rows of the isogeny decomposition.
    pub blocks: Vec<(u32, u32, bool)>,
}

/// One curated family: a concrete datum plus its expected invariants.
#[derive(Clone, Debug)]
pub struct FamilyFixture {
    pub label: String,
    pub aliases: Vec<String>,
    /// Display label for the node this family shares with coincident ones.
    pub node: String,
    pub group_id: GroupId,
    pub group_name: String,
    pub vector: GeneratingVector,
    /// Named elements referenced by notes/tests, resolved to element ids.
    pub named_elements: BTreeMap<String, usize>,
    pub expect: FixtureExpect,
    pub notes: String,
}

impl FamilyFixture {
    pub fn signature(&self, group: &PermGroup) -> Signature {
        self.vector.signature(group)
    }
}

/// Load the fixtures and cross-validate each against the catalog: the quoted
/// group must exist under the quoted name, every permutation must be an
/// element of it, and the vector must validate with the expected signature
/// and Riemann-Hurwitz genus.
pub fn load_family_fixtures(path: &Path, catalog: &GroupCatalog) -> Result<Vec<FamilyFixture>> {
    let text = std::fs::read_to_string(path)?;
    let raw: FixtureFileRaw = serde_json::from_str(&text)
        .map_err(|e| Error::parse(path.display().to_string(), e.to_string()))?;
    if raw.schema_version != 1 {
        return Err(Error::parse(
            path.display().to_string(),
            format!("unsupported schema_version {}", raw.schema_version),
        ));
    }
    let mut out = Vec::with_capacity(raw.families.len());
    for f in raw.families {
        let fail = |msg: String| Error::Fixture {
            label: f.label.clone(),
            message: msg,
        };
        let id = GroupId {
            order: f.group.order,
            index: f.group.index,
        };
        let group = catalog
            .get(id)
            .ok_or_else(|| fail(format!("group {id} not in catalog")))?;
        if group.name != f.group.name {
            return Err(fail(format!(
                "catalog names {id} `{}`, fixture says `{}`",
                group.name, f.group.name
            )));
        }
        let resolve = |s: &str| -> Result<usize> {
            let p = Perm::parse_cycles(s, group.degree)?;
            group
                .elements
                .iter()
                .position(|e| *e == p)
                .ok_or_else(|| fail(format!("`{s}` is not an element of {}", group.name)))
        };
        let hyperbolic = f
            .hyperbolic
            .iter()
            .map(|(a, b)| Ok((resolve(a)?, resolve(b)?)))
            .collect::<Result<Vec<_>>>()?;
        let branch = f.branch.iter().map(|s| resolve(s)).collect::<Result<Vec<_>>>()?;
        let vector = GeneratingVector {
            g_prime: f.base_genus,
            hyperbolic,
            branch,
        };
        let verdict = validate_generating_vector(group, &vector);
        if verdict != VectorVerdict::Ok {
            return Err(fail(format!("generating vector invalid: {verdict:?}")));
        }
        let sig = vector.signature(group);
        if sig.periods != f.expect.signature || sig.r() != f.expect.r {
            return Err(fail("signature disagrees with expectation".into()));
        }
        let genus = riemann_hurwitz_genus(group.order() as u32, &sig)?;
        if genus != f.expect.genus {
            return Err(fail(format!(
                "RH genus {genus} disagrees with expected {}",
                f.expect.genus
            )));
        }
        let named_elements = f
            .named_elements
            .iter()
            .map(|(k, v)| Ok((k.clone(), resolve(v)?)))
            .collect::<Result<BTreeMap<_, _>>>()?;
        out.push(FamilyFixture {
            label: f.label,
            aliases: f.aliases,
            node: f.node,
            group_id: id,
            group_name: f.group.name,
            vector,
            named_elements,
            expect: f.expect,
            notes: f.notes,
        });
    }
    Ok(out)
}
