//! Chevalley-Weil multiplicities, the invariant `N(Δ)`, the distinguishing
//! dimension condition, and the fibration dimensions it produces.
//!
//! For a datum with base genus `g'` and branch elements `c_j` of order `m_j`,
//! the multiplicity of an irreducible `χ` in `H^0(C, K_C)` is
//!
//! `ν_χ = χ(1)(g' - 1) + Σ_j Σ_{α=1}^{m_j - 1} (α / m_j) · N_{j, m_j - α}`
//!
//! for nontrivial `χ` (and `ν_triv = g'`), where `N_{j,β}` counts the
//! eigenvalue `ζ_{m_j}^β` of `χ(c_j)`.  The eigenvalue orientation is a
//! convention; both choices are implemented and must produce complex-
//! conjugate multiplicity patterns, which the tests check.

use num_rational::BigRational;
use num_traits::ToPrimitive;

use crate::chartab::CharacterTable;
use crate::cover::GeneratingVector;
use crate::cyclotomic::Cyc;
use crate::error::{Error, Result};
use crate::group::PermGroup;

/// Orientation of the eigenvalue index in the multiplicity formula.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CwConvention {
    /// `σ(α) = m - α` (the orientation validated on the curated families).
    Standard,
    /// `σ(α) = α`; produces the conjugate multiplicity pattern.
    Opposite,
}

/// Multiplicity `ν_χ` of each irreducible in `H^0(C, K_C)`, in table order.
pub fn chevalley_weil(
    group: &PermGroup,
    table: &CharacterTable,
    v: &GeneratingVector,
    convention: CwConvention,
) -> Result<Vec<u64>> {
    let g_prime = v.g_prime as i64;
    let mut nu = Vec::with_capacity(table.chars.len());
    for (ci, chi) in table.chars.iter().enumerate() {
        if ci == 0 {
            nu.push(v.g_prime as u64);
            continue;
        }
        let mut acc = BigRational::from_integer((chi.degree as i64 * (g_prime - 1)).into());
        for &c in &v.branch {
            let j = group.class_of[c];
            let m = table.class_orders[j] as i64;
            let counts = &chi.eig_counts[j];
            for alpha in 1..m {
                let beta = match convention {
                    CwConvention::Standard => (m - alpha) as usize,
                    CwConvention::Opposite => alpha as usize,
                };
                acc += BigRational::new(alpha.into(), m.into())
                    * BigRational::from_integer((counts[beta] as i64).into());
            }
        }
        if !acc.is_integer() || acc.to_integer().to_i64().is_none_or(|x| x < 0) {
            return Err(Error::integrality(
                "chevalley_weil",
                format!("multiplicity {acc} is not a nonnegative integer"),
            ));
        }
        nu.push(acc.to_integer().to_u64().unwrap());
    }
    Ok(nu)
}

/// The Hodge-theoretic record of one datum.
#[derive(Clone, Debug)]
pub struct HodgeData {
    /// Chevalley-Weil multiplicities, table order (standard convention).
    pub nu: Vec<u64>,
    /// Character of `H^0(C, K_C)` as a class function.
    pub h0_char: Vec<Cyc>,
    /// Character of the nontrivial part `H^0(K)⁻` (trivial summand removed).
    pub h0_minus_char: Vec<Cyc>,
    /// `N(Δ) = dim (S² H^0(K))^G`.
    pub n_delta: u64,
    /// `dim M = 3g' - 3 + r`, the dimension of the family.
    pub dim_moduli: i64,
    /// Whether `N(Δ) = dim M` (the distinguishing condition).
    pub star: bool,
    /// `dim (S² H^0(K)⁻)^G`, the dimension of the image family of Pryms.
    pub dim_p: u64,
    /// `g'(g'+1)/2`: fibre dimension of the Prym map restricted to the family.
    pub prym_fibre_dim: u64,
    /// `N(Δ) - g'(g'+1)/2`: fibre dimension of the complementary map.
    pub phi_fibre_dim: u64,
}

pub fn hodge_data(
    group: &PermGroup,
    table: &CharacterTable,
    v: &GeneratingVector,
) -> Result<HodgeData> {
    let nu = chevalley_weil(group, table, v, CwConvention::Standard)?;
    let g_prime = v.g_prime as u64;
    let k = table.num_classes();

    let mut h0_char = vec![Cyc::zero(table.conductor); k];
    let mut h0_minus_char = vec![Cyc::zero(table.conductor); k];
    for (ci, chi) in table.chars.iter().enumerate() {
        if nu[ci] == 0 {
            continue;
        }
        let w = BigRational::from_integer(nu[ci].into());
        for j in 0..k {
            let t = chi.values[j].scale(&w);
            h0_char[j] = h0_char[j].add(&t);
            if ci != 0 {
                h0_minus_char[j] = h0_minus_char[j].add(&t);
            }
        }
    }

    // cross-check the total dimension against Riemann-Hurwitz
    let sig = v.signature(group);
    let genus = crate::cover::riemann_hurwitz_genus(group.order() as u32, &sig)? as u64;
    let total: u64 = nu
        .iter()
        .zip(&table.chars)
        .map(|(&n, c)| n * c.degree as u64)
        .sum();
    if total != genus {
        return Err(Error::integrality(
            "hodge_data",
            format!("Σ ν_χ χ(1) = {total} but the RH genus is {genus}"),
        ));
    }

    let n_delta = table.invariant_dim(&table.sym2(&h0_char))?;
    let dim_p = table.invariant_dim(&table.sym2(&h0_minus_char))?;
    let prym_fibre_dim = g_prime * (g_prime + 1) / 2;
    // identity: the trivial summand H^0 = triv^{g'} ⊕ (H^0)⁻ contributes
    // exactly S²(triv^{g'}) to the invariants, of dimension g'(g'+1)/2
    if n_delta != prym_fibre_dim + dim_p {
        return Err(Error::integrality(
            "hodge_data",
            format!("N = {n_delta} != {prym_fibre_dim} + {dim_p}"),
        ));
    }
    let dim_moduli = sig.moduli_dim();
    Ok(HodgeData {
        nu,
        h0_char,
        h0_minus_char,
        n_delta,
        dim_moduli,
        star: n_delta as i64 == dim_moduli,
        dim_p,
        prym_fibre_dim,
        phi_fibre_dim: n_delta - prym_fibre_dim,
    })
}

/// `N(Δ)` alone.
pub fn n_delta(group: &PermGroup, table: &CharacterTable, v: &GeneratingVector) -> Result<u64> {
    Ok(hodge_data(group, table, v)?.n_delta)
}

/// Whether `N(Δ) = 3g' - 3 + r`.
pub fn satisfies_star(group: &PermGroup, table: &CharacterTable, v: &GeneratingVector) -> Result<bool> {
    Ok(hodge_data(group, table, v)?.star)
}

/// `(dim M, dim P, prym fibre dim, phi fibre dim)`.  Only defined for data
/// satisfying the distinguishing condition; refuses otherwise.
pub fn fibration_dimensions(h: &HodgeData) -> Result<(i64, u64, u64, u64)> {
    if !h.star {
        return Err(Error::Invalid(
            "fibration_dimensions: datum does not satisfy the dimension condition".into(),
        ));
    }
    Ok((h.dim_moduli, h.dim_p, h.prym_fibre_dim, h.phi_fibre_dim))
}
