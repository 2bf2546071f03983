//! Isogeny decomposition of the Jacobian under the group action, over Q.
//!
//! Group algebra: `Q[G] = Π_O M_{n_O}(D_O)` with one factor per Galois orbit
//! `O` of irreducibles; if `d` is the common degree and `s` the Schur index
//! (`s = 2` exactly when the Frobenius-Schur indicator is `-1` for the group
//! orders in range), then `n_O = d / s`.  Correspondingly
//! `Jac(C) ~ Π_O B_O^{n_O}` with `dim B_O = (Σ_{χ∈O} ν_χ χ(1)) / n_O`.
//! A factor is "moving" in the family iff the `O`-isotypic part of
//! `H^0(K)` contributes invariants to `S² H^0(K)`, i.e. iff the factor's
//! period moves with the base point.

use num_rational::BigRational;

use crate::chartab::CharacterTable;
use crate::cyclotomic::Cyc;
use crate::error::{Error, Result};
use crate::hodge::HodgeData;

/// One isogeny factor `B^n` of the Jacobian.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalBlock {
    /// Character indices of the Galois orbit carrying this factor.
    pub orbit: Vec<usize>,
    /// Common degree of the characters in the orbit.
    pub degree: u32,
    /// Common Frobenius-Schur indicator of the orbit.
    pub fs: i8,
    /// Multiplicity `n` of the factor in the decomposition.
    pub exponent: u32,
    /// `dim B`.
    pub factor_dim: u64,
    /// Total `H^0(K)` dimension carried by the orbit (= n · dim B).
    pub h0_dim: u64,
    /// Invariant dimension contributed to `S² H^0(K)` by this orbit.
    pub sym2_inv: u64,
    /// Whether the factor varies in the family.
    pub moving: bool,
}

/// Decompose `Jac(C)` into rational isogeny factors, one block per Galois
/// orbit with nonzero `H^0`-multiplicity, in table orbit order (the trivial
/// character's orbit, when present, comes first).
pub fn jacobian_decomposition(
    table: &CharacterTable,
    hodge: &HodgeData,
) -> Result<Vec<RationalBlock>> {
    let mut blocks = Vec::new();
    for orbit in &table.orbits {
        let h0_dim: u64 = orbit
            .iter()
            .map(|&ci| hodge.nu[ci] * table.chars[ci].degree as u64)
            .sum();
        if h0_dim == 0 {
            continue;
        }
        let degree = table.chars[orbit[0]].degree;
        let fs = table.chars[orbit[0]].fs;
        for &ci in orbit {
            if table.chars[ci].degree != degree || table.chars[ci].fs != fs {
                return Err(Error::integrality(
                    "jacobian_decomposition",
                    "degree or indicator not constant on a Galois orbit",
                ));
            }
        }
        let s: u32 = if fs == -1 { 2 } else { 1 };
        if !degree.is_multiple_of(s) {
            return Err(Error::integrality(
                "jacobian_decomposition",
                "Schur index does not divide the degree",
            ));
        }
        let exponent = degree / s;
        if !h0_dim.is_multiple_of(exponent as u64) {
            return Err(Error::integrality(
                "jacobian_decomposition",
                format!("orbit H^0 dimension {h0_dim} not divisible by n = {exponent}"),
            ));
        }
        // orbit character weighted by the multiplicities
        let orbit_char: Vec<Cyc> = (0..table.num_classes())
            .map(|j| {
                let mut s = Cyc::zero(table.conductor);
                for &ci in orbit {
                    if hodge.nu[ci] > 0 {
                        s = s.add(&table.chars[ci].values[j].scale(
                            &BigRational::from_integer(hodge.nu[ci].into()),
                        ));
                    }
                }
                s
            })
            .collect();
        let sym2_inv = table.invariant_dim(&table.sym2(&orbit_char))?;
        blocks.push(RationalBlock {
            orbit: orbit.clone(),
            degree,
            fs,
            exponent,
            factor_dim: h0_dim / exponent as u64,
            h0_dim,
            sym2_inv,
            moving: sym2_inv > 0,
        });
    }
    // totals: Σ n · dim B = g and Σ sym2 contributions = N (orbits are
    // pairwise conjugate-closed, so cross terms contribute no invariants)
    let g: u64 = blocks.iter().map(|b| b.h0_dim).sum();
    let expected_g: u64 = hodge
        .nu
        .iter()
        .zip(&table.chars)
        .map(|(&n, c)| n * c.degree as u64)
        .sum();
    if g != expected_g {
        return Err(Error::integrality(
            "jacobian_decomposition",
            "block dimensions do not sum to the genus",
        ));
    }
    let n_sum: u64 = blocks.iter().map(|b| b.sym2_inv).sum();
    if n_sum != hodge.n_delta {
        return Err(Error::integrality(
            "jacobian_decomposition",
            format!("per-block invariants sum to {n_sum}, N = {}", hodge.n_delta),
        ));
    }
    Ok(blocks)
}

/// Moving/fixed flag per block, in block order.
pub fn rigidity_flags(blocks: &[RationalBlock]) -> Vec<bool> {
    blocks.iter().map(|b| b.moving).collect()
}
