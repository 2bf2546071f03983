//! Exact character tables via the modular (Dixon-style) method, and the
//! class-function operations every Hodge-theoretic computation reduces to.
//!
//! Outline: pick a prime `p ≡ 1 (mod exponent(G))` with `p > 2|G|`; the class
//! algebra matrices then split completely over `F_p`.  Their simultaneous
//! eigenvectors are the central characters; degrees and modular character
//! values follow from orthogonality.  Eigenvalue multiplicities `N_α` of each
//! character at each class representative are recovered mod `p` by a discrete
//! Fourier sum over a fixed root of unity, and lift exactly to small
//! nonnegative integers, giving the cyclotomic value `χ(g) = Σ N_α ζ_m^α`.

use num_rational::BigRational;

use crate::cyclotomic::Cyc;
use crate::error::{Error, Result};
use crate::group::{mask_elements, GroupId, Mask, PermGroup};

/// One irreducible character.
#[derive(Clone, Debug)]
pub struct Character {
    pub degree: u32,
    /// Value per conjugacy class, conductor = exponent(G).
    pub values: Vec<Cyc>,
    /// Frobenius-Schur indicator in {-1, 0, 1}.
    pub fs: i8,
    /// `eig_counts[class][α]` = multiplicity of eigenvalue `ζ_m^α` at the
    /// class representative, `m` the representative's order.
    pub eig_counts: Vec<Vec<u64>>,
}

#[derive(Clone, Debug)]
pub struct CharacterTable {
    pub group_id: GroupId,
    /// Conductor of all values: exponent(G).
    pub conductor: u32,
    pub group_order: u64,
    pub class_sizes: Vec<u64>,
    pub class_orders: Vec<u32>,
    /// Class of the inverse of each class.
    pub inverse_class: Vec<usize>,
    /// `power_class[j][t]` = class of `rep_j^t`, for t in 0..class_orders[j].
    pub power_class: Vec<Vec<usize>>,
    /// Irreducibles: trivial first, then sorted by (degree, values).
    pub chars: Vec<Character>,
    /// Galois-orbit partition of character indices (each orbit sorted; orbits
    /// sorted by first element).
    pub orbits: Vec<Vec<usize>>,
    /// Orbit id per character.
    pub orbit_of: Vec<usize>,
}

impl CharacterTable {
    pub fn num_classes(&self) -> usize {
        self.class_sizes.len()
    }

    /// Class of `rep_j^t` for arbitrary integer t.
    pub fn power_map(&self, j: usize, t: i64) -> usize {
        let m = self.class_orders[j] as i64;
        self.power_class[j][t.rem_euclid(m) as usize]
    }

    pub fn trivial_char(&self) -> Vec<Cyc> {
        vec![Cyc::one(self.conductor); self.num_classes()]
    }

    /// Exact inner product `(1/|G|) Σ_j |C_j| f(C_j) conj(h(C_j))`.
    pub fn inner(&self, f: &[Cyc], h: &[Cyc]) -> Cyc {
        let mut s = Cyc::zero(self.conductor);
        for j in 0..self.num_classes() {
            let term = f[j].mul(&h[j].conj());
            s = s.add(&term.scale(&BigRational::from_integer(self.class_sizes[j].into())));
        }
        s.scale(&BigRational::new(1.into(), self.group_order.into()))
    }

    /// `dim f^G = <f, trivial>`, asserted a nonnegative integer.
    pub fn invariant_dim(&self, f: &[Cyc]) -> Result<u64> {
        let mut s = Cyc::zero(self.conductor);
        for (fj, &cs) in f.iter().zip(&self.class_sizes) {
            s = s.add(&fj.scale(&BigRational::from_integer(cs.into())));
        }
        s.scale(&BigRational::new(1.into(), self.group_order.into()))
            .expect_nonneg_integer("invariant_dim")
    }

    /// Pointwise product of class functions.
    pub fn product(&self, f: &[Cyc], h: &[Cyc]) -> Vec<Cyc> {
        f.iter().zip(h).map(|(a, b)| a.mul(b)).collect()
    }

    pub fn sum(&self, f: &[Cyc], h: &[Cyc]) -> Vec<Cyc> {
        f.iter().zip(h).map(|(a, b)| a.add(b)).collect()
    }

    /// Symmetric square: `g ↦ (f(g)² + f(g²))/2` via the power map.
    pub fn sym2(&self, f: &[Cyc]) -> Vec<Cyc> {
        let half = BigRational::new(1.into(), 2.into());
        (0..self.num_classes())
            .map(|j| {
                let sq = &f[self.power_map(j, 2)];
                f[j].mul(&f[j]).add(sq).scale(&half)
            })
            .collect()
    }

    /// Exterior square: `g ↦ (f(g)² − f(g²))/2`.
    pub fn alt2(&self, f: &[Cyc]) -> Vec<Cyc> {
        let half = BigRational::new(1.into(), 2.into());
        (0..self.num_classes())
            .map(|j| {
                let sq = &f[self.power_map(j, 2)];
                f[j].mul(&f[j]).sub(sq).scale(&half)
            })
            .collect()
    }

    /// Decompose a character into irreducible multiplicities (each asserted a
    /// nonnegative integer).
    pub fn decompose(&self, f: &[Cyc]) -> Result<Vec<u64>> {
        self.chars
            .iter()
            .map(|chi| {
                self.inner(f, &chi.values)
                    .expect_nonneg_integer("character decomposition")
            })
            .collect()
    }

    /// `dim V_χ^H = (1/|H|) Σ_{h∈H} χ(h)` for a subgroup mask.
    pub fn restriction_invariant_dim(
        &self,
        group: &PermGroup,
        chi: usize,
        subgroup: Mask,
    ) -> Result<u64> {
        let mut s = Cyc::zero(self.conductor);
        for e in mask_elements(subgroup) {
            s = s.add(&self.chars[chi].values[group.class_of[e]]);
        }
        s.scale(&BigRational::new(
            1.into(),
            u64::from(subgroup.count_ones()).into(),
        ))
        .expect_nonneg_integer("restriction_invariant_dim")
    }

    /// Recompute `N_α` for (χ, class) from the definition
    /// `N_α = (1/m) Σ_t χ(rep^t) ζ_m^{-αt}` — used as a test oracle for the
    /// cached `eig_counts` table.
    pub fn eigenvalue_counts_from_definition(&self, chi: usize, j: usize) -> Result<Vec<u64>> {
        let m = self.class_orders[j] as i64;
        let l = self.conductor as i64;
        let mut out = Vec::with_capacity(m as usize);
        for alpha in 0..m {
            let mut s = Cyc::zero(self.conductor);
            for t in 0..m {
                let v = &self.chars[chi].values[self.power_map(j, t)];
                s = s.add(&v.mul(&Cyc::zeta_pow(self.conductor, -alpha * t * (l / m))));
            }
            out.push(
                s.scale(&BigRational::new(1.into(), m.into()))
                    .expect_nonneg_integer("eigenvalue_counts")?,
            );
        }
        Ok(out)
    }
}

// ---------------------------------------------------------------------------
// Modular arithmetic helpers
// ---------------------------------------------------------------------------

fn mod_pow(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

fn mod_inv(a: u64, p: u64) -> u64 {
    mod_pow(a, p - 2, p)
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn primitive_root(p: u64) -> u64 {
    let mut factors = Vec::new();
    let mut m = p - 1;
    let mut d = 2;
    while d * d <= m {
        if m.is_multiple_of(d) {
            factors.push(d);
            while m.is_multiple_of(d) {
                m /= d;
            }
        }
        d += 1;
    }
    if m > 1 {
        factors.push(m);
    }
    (2..p)
        .find(|&g| factors.iter().all(|&q| mod_pow(g, (p - 1) / q, p) != 1))
        .expect("no primitive root found")
}

/// Reduced-row-echelon basis of the row span; returns (basis rows, pivots).
#[allow(clippy::needless_range_loop)]
fn rref(mut rows: Vec<Vec<u64>>, p: u64) -> (Vec<Vec<u64>>, Vec<usize>) {
    let width = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..width {
        if let Some(sel) = (r..rows.len()).find(|&i| rows[i][c] != 0) {
            rows.swap(r, sel);
            let inv = mod_inv(rows[r][c], p);
            for v in rows[r].iter_mut() {
                *v = *v * inv % p;
            }
            for i in 0..rows.len() {
                if i != r && rows[i][c] != 0 {
                    let f = rows[i][c];
                    for cc in 0..width {
                        rows[i][cc] = (rows[i][cc] + (p - f) * rows[r][cc]) % p;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
    }
    rows.truncate(r);
    (rows, pivots)
}

/// Kernel basis (row vectors) of the matrix given by rows.
fn kernel(rows: &[Vec<u64>], width: usize, p: u64) -> Vec<Vec<u64>> {
    let (r, pivots) = rref(rows.to_vec(), p);
    let mut basis = Vec::new();
    let is_pivot = |c: usize| pivots.contains(&c);
    for free in 0..width {
        if is_pivot(free) {
            continue;
        }
        let mut v = vec![0u64; width];
        v[free] = 1;
        for (ri, &pc) in pivots.iter().enumerate() {
            v[pc] = (p - r[ri][free] % p) % p;
        }
        basis.push(v);
    }
    basis
}

// ---------------------------------------------------------------------------
// Table construction
// ---------------------------------------------------------------------------

#[allow(clippy::needless_range_loop)]
pub fn character_table(group: &PermGroup) -> Result<CharacterTable> {
    let n = group.order();
    let k = group.classes.len();
    let conductor = group.exponent();
    let ctx = || format!("character_table({})", group.id);

    let class_sizes: Vec<u64> = group.classes.iter().map(|c| c.members.len() as u64).collect();
    let class_orders: Vec<u32> = group.classes.iter().map(|c| c.order).collect();
    let reps: Vec<usize> = group.classes.iter().map(|c| c.representative).collect();
    let inverse_class: Vec<usize> = reps.iter().map(|&r| group.class_of[group.inv(r)]).collect();
    let power_class: Vec<Vec<usize>> = (0..k)
        .map(|j| {
            (0..class_orders[j] as i64)
                .map(|t| group.class_of[group.pow(reps[j], t)])
                .collect()
        })
        .collect();

    // structure constants a[i][j][l]: coefficient of class l in (class i)(class j)
    let mut a = vec![vec![vec![0u64; k]; k]; k];
    for i in 0..k {
        for (l, &zl) in reps.iter().enumerate() {
            for &x in &group.classes[i].members {
                let y = group.mul(group.inv(x), zl);
                a[i][group.class_of[y]][l] += 1;
            }
        }
    }

    // prime p ≡ 1 mod conductor, p > 2|G|
    let p = (1..)
        .map(|t| t * conductor as u64 + 1)
        .find(|&q| q > 2 * n as u64 && is_prime(q))
        .unwrap();

    // split the joint eigenspaces of the class-algebra operators
    let mut subspaces: Vec<Vec<Vec<u64>>> = vec![{
        let (basis, _) = rref(
            (0..k)
                .map(|i| {
                    let mut v = vec![0u64; k];
                    v[i] = 1;
                    v
                })
                .collect(),
            p,
        );
        basis
    }];
    for i in 1..k {
        if subspaces.iter().all(|s| s.len() == 1) {
            break;
        }
        let mut next = Vec::new();
        for basis in subspaces {
            if basis.len() == 1 {
                next.push(basis);
                continue;
            }
            // operator action in RREF coordinates: w ↦ A_i w with
            // (A_i)[j][l] = a[i][j][l]
            let (rbasis, pivots) = rref(basis.clone(), p);
            let d = rbasis.len();
            let rimages: Vec<Vec<u64>> = rbasis
                .iter()
                .map(|b| {
                    (0..k)
                        .map(|j| {
                            let mut s = 0u64;
                            for l in 0..k {
                                s = (s + a[i][j][l] % p * b[l]) % p;
                            }
                            s
                        })
                        .collect()
                })
                .collect();
            let mut s_mat = vec![vec![0u64; d]; d];
            for (bi, img) in rimages.iter().enumerate() {
                let mut resid = img.clone();
                for (t, &pc) in pivots.iter().enumerate() {
                    let c = resid[pc];
                    s_mat[bi][t] = c;
                    if c != 0 {
                        for cc in 0..k {
                            resid[cc] = (resid[cc] + (p - c) * rbasis[t][cc] % p) % p;
                        }
                    }
                }
                if resid.iter().any(|&v| v != 0) {
                    return Err(Error::integrality(
                        ctx(),
                        "class-algebra operator does not preserve a joint eigenspace",
                    ));
                }
            }
            // eigen-split S over F_p by trying every eigenvalue
            let mut found = 0;
            for lambda in 0..p {
                // rows of (S^T - lambda I): kernel in coordinate space
                let mut mat = vec![vec![0u64; d]; d];
                for r in 0..d {
                    for c in 0..d {
                        // coordinates x with S x = lambda x, where x are
                        // coefficients in rbasis: (S x)_r = sum_c x_c * s_mat[c][r]
                        mat[r][c] = s_mat[c][r] % p;
                    }
                    mat[r][r] = (mat[r][r] + p - lambda % p) % p;
                }
                let ker = kernel(&mat, d, p);
                if ker.is_empty() {
                    continue;
                }
                found += ker.len();
                let rows: Vec<Vec<u64>> = ker
                    .iter()
                    .map(|coef| {
                        (0..k)
                            .map(|c| {
                                let mut s = 0u64;
                                for t in 0..d {
                                    s = (s + coef[t] * rbasis[t][c]) % p;
                                }
                                s
                            })
                            .collect()
                    })
                    .collect();
                let (nb, _) = rref(rows, p);
                next.push(nb);
                if found == d {
                    break;
                }
            }
            if found != d {
                return Err(Error::integrality(
                    ctx(),
                    "modular eigenspace splitting incomplete",
                ));
            }
        }
        subspaces = next;
    }
    if subspaces.len() != k || subspaces.iter().any(|s| s.len() != 1) {
        return Err(Error::integrality(
            ctx(),
            "modular eigenvector separation did not reach dimension one",
        ));
    }

    // central characters: normalize each eigenvector at the identity class
    let mut omegas: Vec<Vec<u64>> = Vec::with_capacity(k);
    for s in &subspaces {
        let v = &s[0];
        if v[0] == 0 {
            return Err(Error::integrality(ctx(), "eigenvector vanishes at identity"));
        }
        let inv0 = mod_inv(v[0], p);
        omegas.push(v.iter().map(|&x| x * inv0 % p).collect());
    }

    // degrees and modular character values
    let z = primitive_root(p);
    let theta_l = mod_pow(z, (p - 1) / conductor as u64, p);
    let max_degree = (1..).take_while(|d| d * d <= n as u64).last().unwrap();
    let mut raw_chars: Vec<(u32, Vec<Cyc>, Vec<Vec<u64>>)> = Vec::with_capacity(k);
    for w in &omegas {
        let mut s = 0u64;
        for j in 0..k {
            s = (s + w[j] * w[inverse_class[j]] % p * mod_inv(class_sizes[j] % p, p)) % p;
        }
        let d2 = n as u64 * mod_inv(s, p) % p;
        let degree = (1..=max_degree)
            .find(|d| d * d % p == d2)
            .ok_or_else(|| Error::integrality(ctx(), "degree recovery failed"))?;
        let chi_mod: Vec<u64> = (0..k)
            .map(|j| degree % p * w[j] % p * mod_inv(class_sizes[j] % p, p) % p)
            .collect();
        // lift each class value via eigenvalue multiplicities
        let mut values = Vec::with_capacity(k);
        let mut eig_counts = Vec::with_capacity(k);
        for j in 0..k {
            let m = class_orders[j] as u64;
            let theta_m = mod_pow(theta_l, conductor as u64 / m, p);
            let inv_m = mod_inv(m % p, p);
            let mut counts = Vec::with_capacity(m as usize);
            for alpha in 0..m {
                let mut acc = 0u64;
                for t in 0..m {
                    let cls = power_class[j][t as usize];
                    let phase = mod_pow(theta_m, (m - alpha) % m * t % m, p);
                    acc = (acc + chi_mod[cls] * phase) % p;
                }
                let n_alpha = acc * inv_m % p;
                if n_alpha > degree {
                    return Err(Error::integrality(
                        ctx(),
                        "eigenvalue multiplicity exceeds degree",
                    ));
                }
                counts.push(n_alpha);
            }
            if counts.iter().sum::<u64>() != degree {
                return Err(Error::integrality(
                    ctx(),
                    "eigenvalue multiplicities do not sum to the degree",
                ));
            }
            let mut val = Cyc::zero(conductor);
            for (alpha, &c) in counts.iter().enumerate() {
                if c > 0 {
                    let e = alpha as i64 * (conductor as i64 / m as i64);
                    val = val.add(
                        &Cyc::zeta_pow(conductor, e)
                            .scale(&BigRational::from_integer((c as i64).into())),
                    );
                }
            }
            values.push(val);
            eig_counts.push(counts);
        }
        raw_chars.push((degree as u32, values, eig_counts));
    }

    // deterministic ordering: trivial first, then (degree, values)
    raw_chars.sort_by(|a, b| {
        let a_triv = a.0 == 1 && a.1.iter().all(|v| *v == Cyc::one(conductor));
        let b_triv = b.0 == 1 && b.1.iter().all(|v| *v == Cyc::one(conductor));
        b_triv
            .cmp(&a_triv)
            .then(a.0.cmp(&b.0))
            .then_with(|| a.1.cmp(&b.1))
    });
    if !(raw_chars[0].0 == 1 && raw_chars[0].1.iter().all(|v| *v == Cyc::one(conductor))) {
        return Err(Error::integrality(ctx(), "trivial character not found"));
    }

    // Frobenius-Schur indicators
    let mut chars: Vec<Character> = Vec::with_capacity(k);
    for (degree, values, eig_counts) in raw_chars {
        let mut s = Cyc::zero(conductor);
        for j in 0..k {
            let sq = power_class[j][(2 % class_orders[j]) as usize];
            s = s.add(&values[sq].scale(&BigRational::from_integer(class_sizes[j].into())));
        }
        let fs_val = s.scale(&BigRational::new(1.into(), (n as u64).into()));
        let fs_int = fs_val
            .as_integer()
            .ok_or_else(|| Error::integrality(ctx(), "FS indicator not an integer"))?;
        let fs = i8::try_from(fs_int)
            .ok()
            .filter(|v| (-1..=1).contains(v))
            .ok_or_else(|| Error::integrality(ctx(), "FS indicator outside {-1,0,1}"))?;
        chars.push(Character {
            degree,
            values,
            fs,
            eig_counts,
        });
    }

    // sanity: orthonormality and sum of squared degrees
    let table = CharacterTable {
        group_id: group.id,
        conductor,
        group_order: n as u64,
        class_sizes,
        class_orders,
        inverse_class,
        power_class,
        chars,
        orbits: Vec::new(),
        orbit_of: Vec::new(),
    };
    verify_table(&table)?;
    let (orbits, orbit_of) = galois_orbits(&table);
    Ok(CharacterTable {
        orbits,
        orbit_of,
        ..table
    })
}

fn verify_table(t: &CharacterTable) -> Result<()> {
    let k = t.num_classes();
    let ctx = || format!("character_table({})", t.group_id);
    let sum_sq: u64 = t.chars.iter().map(|c| (c.degree as u64).pow(2)).sum();
    if sum_sq != t.group_order {
        return Err(Error::integrality(ctx(), "sum of squared degrees != |G|"));
    }
    for i in 0..k {
        for j in 0..k {
            let ip = t.inner(&t.chars[i].values, &t.chars[j].values);
            let expected = Cyc::from_integer(t.conductor, u64::from(i == j) as i64);
            if ip != expected {
                return Err(Error::integrality(ctx(), "row orthogonality fails"));
            }
        }
    }
    Ok(())
}

/// Partition characters into Galois orbits: χ ~ χ' iff χ'(g) = χ(g^k) for
/// some k coprime to the conductor.
fn galois_orbits(t: &CharacterTable) -> (Vec<Vec<usize>>, Vec<usize>) {
    let k = t.chars.len();
    let l = t.conductor;
    let mut orbit_of: Vec<usize> = (0..k).collect();
    for e in 1..l.max(2) {
        if num_integer::gcd(e, l) != 1 {
            continue;
        }
        for i in 0..k {
            // χ_i composed with g -> g^e
            let mapped: Vec<Cyc> = (0..t.num_classes())
                .map(|j| t.chars[i].values[t.power_map(j, e as i64)].clone())
                .collect();
            let target = (0..k)
                .find(|&j| t.chars[j].values == mapped)
                .expect("Galois image of an irreducible must be an irreducible");
            // union
            let (a, b) = (orbit_of[i], orbit_of[target]);
            if a != b {
                let m = a.min(b);
                for o in orbit_of.iter_mut() {
                    if *o == a || *o == b {
                        *o = m;
                    }
                }
            }
        }
    }
    let mut roots: Vec<usize> = orbit_of.clone();
    roots.sort_unstable();
    roots.dedup();
    let mut orbits: Vec<Vec<usize>> = vec![Vec::new(); roots.len()];
    let mut orbit_id = vec![0usize; k];
    for (i, &r) in orbit_of.iter().enumerate() {
        let oid = roots.iter().position(|&x| x == r).unwrap();
        orbits[oid].push(i);
        orbit_id[i] = oid;
    }
    (orbits, orbit_id)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::GroupId;
    use crate::perm::Perm;

    fn build(name: &str, order: u32, degree: usize, gens: &[&str]) -> PermGroup {
        let generators = gens
            .iter()
            .map(|s| Perm::parse_cycles(s, degree).unwrap())
            .collect();
        PermGroup::from_generators(GroupId { order, index: 1 }, name.into(), degree, generators)
            .unwrap()
    }

    fn q8() -> PermGroup {
        build("Q8", 8, 8, &["(1,3,5,7)(2,4,6,8)", "(1,2,5,6)(3,8,7,4)"])
    }

    #[test]
    fn z2_table() {
        let g = build("Z/2", 2, 2, &["(1,2)"]);
        let t = character_table(&g).unwrap();
        assert_eq!(t.chars.len(), 2);
        assert_eq!(t.chars[0].degree, 1);
        assert_eq!(t.chars[1].degree, 1);
        assert_eq!(t.chars[1].values[1], Cyc::from_integer(2, -1));
    }

    #[test]
    fn q8_degrees_and_fs() {
        let t = character_table(&q8()).unwrap();
        let degrees: Vec<u32> = t.chars.iter().map(|c| c.degree).collect();
        assert_eq!(degrees, vec![1, 1, 1, 1, 2]);
        // the 2-dim character is quaternionic
        assert_eq!(t.chars[4].fs, -1);
        assert!(t.chars[..4].iter().all(|c| c.fs == 1));
    }

    #[test]
    fn s4_degrees_all_rational() {
        let g = build("S4", 24, 4, &["(1,2)", "(1,2,3,4)"]);
        let t = character_table(&g).unwrap();
        let degrees: Vec<u32> = t.chars.iter().map(|c| c.degree).collect();
        assert_eq!(degrees, vec![1, 1, 2, 3, 3]);
        assert_eq!(t.orbits.len(), 5, "all S4 characters are rational");
        for c in &t.chars {
            for v in &c.values {
                assert!(v.as_integer().is_some());
            }
        }
    }

    #[test]
    fn z3_faithful_characters_form_one_orbit() {
        let g = build("Z/3", 3, 3, &["(1,2,3)"]);
        let t = character_table(&g).unwrap();
        assert_eq!(t.orbits.len(), 2);
        assert_eq!(t.orbits[0], vec![0]);
        assert_eq!(t.orbits[1], vec![1, 2]);
        // faithful 1-dim characters of Z/3 are complex: FS = 0
        assert_eq!(t.chars[1].fs, 0);
    }

    #[test]
    fn z6_orbit_sizes() {
        let g = build("Z/6", 6, 6, &["(1,2,3,4,5,6)"]);
        let t = character_table(&g).unwrap();
        let mut sizes: Vec<usize> = t.orbits.iter().map(Vec::len).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 1, 2, 2]);
    }

    #[test]
    fn regular_character_decomposition() {
        // oracle: decomposing the regular character gives each degree once
        for g in [
            build("S3", 6, 3, &["(1,2)", "(1,2,3)"]),
            q8(),
            build("A4", 12, 4, &["(1,2,3)", "(1,2)(3,4)"]),
        ] {
            let t = character_table(&g).unwrap();
            let regular: Vec<Cyc> = (0..t.num_classes())
                .map(|j| {
                    if j == 0 {
                        Cyc::from_integer(t.conductor, g.order() as i64)
                    } else {
                        Cyc::zero(t.conductor)
                    }
                })
                .collect();
            let multiplicities = t.decompose(&regular).unwrap();
            for (c, &m) in t.chars.iter().zip(&multiplicities) {
                assert_eq!(m, c.degree as u64);
            }
            assert_eq!(t.invariant_dim(&regular).unwrap(), 1);
        }
    }

    #[test]
    fn q8_sym2_and_alt2_of_2dim() {
        let t = character_table(&q8()).unwrap();
        let two = &t.chars[4].values;
        assert_eq!(t.invariant_dim(&t.sym2(two)).unwrap(), 0);
        assert_eq!(t.invariant_dim(&t.alt2(two)).unwrap(), 1);
        // sym2 + alt2 = tensor square
        let s = t.sym2(two);
        let a = t.alt2(two);
        let ts = t.product(two, two);
        assert_eq!(t.sum(&s, &a), ts);
    }

    #[test]
    fn chi_tensor_chibar_contains_trivial_once() {
        let t = character_table(&q8()).unwrap();
        for c in &t.chars {
            let conj: Vec<Cyc> = c.values.iter().map(Cyc::conj).collect();
            let prod = t.product(&c.values, &conj);
            assert_eq!(t.invariant_dim(&prod).unwrap(), 1);
        }
    }

    #[test]
    fn eig_counts_match_definition_and_reconstruct_values() {
        for g in [
            q8(),
            build("S4", 24, 4, &["(1,2)", "(1,2,3,4)"]),
            build("Z/8", 8, 8, &["(1,2,3,4,5,6,7,8)"]),
        ] {
            let t = character_table(&g).unwrap();
            for ci in 0..t.chars.len() {
                for j in 0..t.num_classes() {
                    let by_def = t.eigenvalue_counts_from_definition(ci, j).unwrap();
                    assert_eq!(by_def, t.chars[ci].eig_counts[j]);
                    // reconstruct χ(rep^t) for all t
                    let m = t.class_orders[j] as i64;
                    let l = t.conductor as i64;
                    for tt in 0..m {
                        let mut v = Cyc::zero(t.conductor);
                        for (alpha, &cnt) in by_def.iter().enumerate() {
                            if cnt > 0 {
                                v = v.add(&Cyc::zeta_pow(t.conductor, alpha as i64 * tt * (l / m))
                                    .scale(&BigRational::from_integer((cnt as i64).into())));
                            }
                        }
                        assert_eq!(v, t.chars[ci].values[t.power_map(j, tt)]);
                    }
                }
            }
        }
    }

    #[test]
    fn q8_2dim_at_central_involution() {
        let g = q8();
        let t = character_table(&g).unwrap();
        // class of the unique involution
        let j = (0..t.num_classes()).find(|&j| t.class_orders[j] == 2).unwrap();
        let counts = &t.chars[4].eig_counts[j];
        // both eigenvalues are -1 = zeta_2^1
        assert_eq!(counts, &vec![0, 2]);
    }

    #[test]
    fn trivial_restriction_cases() {
        let g = q8();
        let t = character_table(&g).unwrap();
        let full: Mask = (1u32 << g.order()) - 1;
        for (i, c) in t.chars.iter().enumerate() {
            assert_eq!(
                t.restriction_invariant_dim(&g, i, 1).unwrap(),
                c.degree as u64
            );
            let expected = u64::from(i == 0);
            assert_eq!(t.restriction_invariant_dim(&g, i, full).unwrap(), expected);
        }
    }
}
