//! Finite group arithmetic: element enumeration, multiplication tables,
//! conjugacy classes, subgroups, automorphisms.
//!
//! Groups are materialized from permutation generators by breadth-first
//! closure; elements are then sorted lexicographically, which gives every
//! element a deterministic id (`0` is always the identity).  Orders are at
//! most 24, so subgroups are represented as 32-bit element masks.

use std::collections::HashMap;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::perm::Perm;

/// Catalog key `(order, index)`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize)]
pub struct GroupId {
    pub order: u32,
    pub index: u32,
}

impl fmt::Display for GroupId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.order, self.index)
    }
}

/// Subgroups as bitmasks over element ids (|G| <= 24 < 32).
pub type Mask = u32;

#[derive(Clone, Debug)]
pub struct ConjugacyClass {
    /// Minimal element id in the class.
    pub representative: usize,
    /// Sorted element ids.
    pub members: Vec<usize>,
    /// Common element order.
    pub order: u32,
}

#[derive(Clone, Debug)]
pub struct SubgroupRecord {
    /// A small generating set (element ids).
    pub generators: Vec<usize>,
    pub mask: Mask,
    pub order: u32,
    /// Index [G:H].
    pub index_in_group: u32,
    pub normal: bool,
    /// Id of this subgroup's conjugacy class among subgroups.
    pub conjugacy_class: usize,
}

#[derive(Clone, Debug)]
pub struct PermGroup {
    pub id: GroupId,
    pub name: String,
    pub degree: usize,
    pub generators: Vec<Perm>,
    /// Sorted element list; `elements[0]` is the identity.
    pub elements: Vec<Perm>,
    mult: Vec<u8>,
    inv: Vec<u8>,
    /// Element orders.
    pub orders: Vec<u32>,
    pub classes: Vec<ConjugacyClass>,
    /// Class id of each element.
    pub class_of: Vec<usize>,
}

impl PermGroup {
    /// Materialize a group from generators, checking it has `declared_order`
    /// elements.
    pub fn from_generators(
        id: GroupId,
        name: String,
        degree: usize,
        generators: Vec<Perm>,
    ) -> Result<Self> {
        let identity = Perm::identity(degree);
        let mut elements = vec![identity.clone()];
        let mut seen: HashMap<Perm, ()> = HashMap::new();
        seen.insert(identity, ());
        let mut frontier = vec![0usize];
        while let Some(&_) = frontier.first() {
            let mut next = Vec::new();
            for &i in &frontier {
                let x = elements[i].clone();
                for g in &generators {
                    let y = x.compose(g);
                    if !seen.contains_key(&y) {
                        seen.insert(y.clone(), ());
                        elements.push(y);
                        next.push(elements.len() - 1);
                        if elements.len() > id.order as usize {
                            return Err(Error::Catalog(format!(
                                "group {id}: generators produce more than the declared {} elements",
                                id.order
                            )));
                        }
                    }
                }
            }
            if next.is_empty() {
                break;
            }
            frontier = next;
        }
        if elements.len() != id.order as usize {
            return Err(Error::Catalog(format!(
                "group {id}: generators produce {} of {} declared elements",
                elements.len(),
                id.order
            )));
        }
        elements.sort();
        debug_assert!(elements[0].is_identity());

        let n = elements.len();
        let index: HashMap<&Perm, usize> = elements.iter().enumerate().map(|(i, p)| (p, i)).collect();
        let mut mult = vec![0u8; n * n];
        for a in 0..n {
            for b in 0..n {
                mult[a * n + b] = index[&elements[a].compose(&elements[b])] as u8;
            }
        }
        let mut inv = vec![0u8; n];
        for a in 0..n {
            inv[a] = index[&elements[a].inverse()] as u8;
        }
        let orders: Vec<u32> = elements.iter().map(|p| p.order()).collect();

        // Conjugacy classes, ordered by (element order, class size, min id);
        // the identity class is first because it uniquely has order 1.
        let mut class_of = vec![usize::MAX; n];
        let mut classes: Vec<ConjugacyClass> = Vec::new();
        for g in 0..n {
            if class_of[g] != usize::MAX {
                continue;
            }
            let mut members: Vec<usize> = (0..n)
                .map(|x| {
                    let xg = mult[x * n + g] as usize;
                    mult[xg * n + inv[x] as usize] as usize
                })
                .collect();
            members.sort_unstable();
            members.dedup();
            for &m in &members {
                class_of[m] = 0; // placeholder; fixed after sorting classes
            }
            classes.push(ConjugacyClass {
                representative: members[0],
                members,
                order: orders[g],
            });
        }
        classes.sort_by_key(|c| (c.order, c.members.len(), c.representative));
        for (ci, c) in classes.iter().enumerate() {
            for &m in &c.members {
                class_of[m] = ci;
            }
        }

        let group = PermGroup {
            id,
            name,
            degree,
            generators,
            elements,
            mult,
            inv,
            orders,
            classes,
            class_of,
        };
        debug_assert_eq!(
            group.classes.iter().map(|c| c.members.len()).sum::<usize>(),
            n
        );
        Ok(group)
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn identity(&self) -> usize {
        0
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mult[a * self.elements.len() + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a] as usize
    }

    pub fn pow(&self, a: usize, k: i64) -> usize {
        let m = self.orders[a] as i64;
        let mut k = k.rem_euclid(m);
        let mut r = 0usize;
        // orders are tiny; simple repeated multiplication
        while k > 0 {
            r = self.mul(r, a);
            k -= 1;
        }
        r
    }

    pub fn is_abelian(&self) -> bool {
        self.classes.len() == self.order()
    }

    pub fn exponent(&self) -> u32 {
        self.orders.iter().fold(1u32, |e, &o| num_integer::lcm(e, o))
    }

    /// Commutator `a b a^-1 b^-1`.
    pub fn commutator(&self, a: usize, b: usize) -> usize {
        self.mul(self.mul(a, b), self.mul(self.inv(a), self.inv(b)))
    }

    /// Multiset of element orders, the structural fingerprint used to match
    /// abstract subgroups against catalog groups.  It separates all
    /// isomorphism classes of order <= 8 (checked in tests), which covers
    /// every group appearing as a quotient-witness target.
    pub fn order_multiset(&self) -> Vec<u32> {
        let mut v = self.orders.clone();
        v.sort_unstable();
        v
    }

    pub fn order_multiset_of_mask(&self, mask: Mask) -> Vec<u32> {
        let mut v: Vec<u32> = mask_elements(mask).map(|e| self.orders[e]).collect();
        v.sort_unstable();
        v
    }

    // ---- subgroup machinery ------------------------------------------------

    /// Closure of a seed set of elements, as a mask.
    pub fn closure_mask(&self, seed: &[usize]) -> Mask {
        let mut mask: Mask = 1; // identity
        let mut frontier = vec![0usize];
        for &s in seed {
            if mask & (1 << s) == 0 {
                mask |= 1 << s;
                frontier.push(s);
            }
        }
        while let Some(x) = frontier.pop() {
            for &g in seed {
                let y = self.mul(x, g);
                if mask & (1 << y) == 0 {
                    mask |= 1 << y;
                    frontier.push(y);
                }
            }
            let xi = self.inv(x);
            if mask & (1 << xi) == 0 {
                mask |= 1 << xi;
                frontier.push(xi);
            }
        }
        // seed closure above only multiplies by seed; complete to a subgroup
        loop {
            let members: Vec<usize> = mask_elements(mask).collect();
            let mut grew = false;
            for &a in &members {
                for &b in &members {
                    let c = self.mul(a, b);
                    if mask & (1 << c) == 0 {
                        mask |= 1 << c;
                        grew = true;
                    }
                }
            }
            if !grew {
                break;
            }
        }
        mask
    }

    /// Whether the seed elements generate the whole group.
    pub fn generates(&self, seed: &[usize]) -> bool {
        // cheap BFS without the full pairwise closure
        let mut mask: Mask = 1;
        let mut frontier = vec![0usize];
        while let Some(x) = frontier.pop() {
            for &g in seed {
                let y = self.mul(x, g);
                if mask & (1 << y) == 0 {
                    mask |= 1 << y;
                    frontier.push(y);
                }
            }
        }
        mask.count_ones() as usize == self.order()
    }

    pub fn conjugate_mask(&self, mask: Mask, g: usize) -> Mask {
        let mut out: Mask = 0;
        for e in mask_elements(mask) {
            out |= 1 << self.mul(self.mul(g, e), self.inv(g));
        }
        out
    }

    pub fn is_normal_mask(&self, mask: Mask) -> bool {
        (0..self.order()).all(|g| self.conjugate_mask(mask, g) == mask)
    }

    /// All subgroups (as masks), sorted.  Cyclic subgroups first, then closed
    /// under pairwise join until a fixed point.
    pub fn all_subgroups(&self) -> Vec<Mask> {
        let mut set: std::collections::BTreeSet<Mask> = std::collections::BTreeSet::new();
        set.insert(1); // trivial
        for e in 0..self.order() {
            set.insert(self.closure_mask(&[e]));
        }
        loop {
            let current: Vec<Mask> = set.iter().copied().collect();
            let before = set.len();
            for (i, &a) in current.iter().enumerate() {
                for &b in &current[i + 1..] {
                    if a | b != a && a | b != b {
                        let join: Vec<usize> = mask_elements(a | b).collect();
                        set.insert(self.closure_mask(&join));
                    }
                }
            }
            if set.len() == before {
                break;
            }
        }
        set.into_iter().collect()
    }

    /// One representative per conjugacy class of subgroups, with records.
    /// Ordered by (order, minimal mask in the class).
    pub fn subgroups_up_to_conjugacy(&self) -> Vec<SubgroupRecord> {
        let all = self.all_subgroups();
        let mut seen: std::collections::BTreeSet<Mask> = std::collections::BTreeSet::new();
        let mut reps: Vec<(Mask, bool)> = Vec::new();
        for &m in &all {
            if seen.contains(&m) {
                continue;
            }
            let mut orbit: Vec<Mask> = (0..self.order())
                .map(|g| self.conjugate_mask(m, g))
                .collect();
            orbit.sort_unstable();
            orbit.dedup();
            let normal = orbit.len() == 1;
            for &c in &orbit {
                seen.insert(c);
            }
            reps.push((orbit[0], normal));
        }
        reps.sort_by_key(|&(m, _)| (m.count_ones(), m));
        reps.iter()
            .enumerate()
            .map(|(ci, &(mask, normal))| SubgroupRecord {
                generators: self.minimal_generators_of_mask(mask),
                mask,
                order: mask.count_ones(),
                index_in_group: self.order() as u32 / mask.count_ones(),
                normal,
                conjugacy_class: ci,
            })
            .collect()
    }

    /// Greedy small generating set for a subgroup mask.
    pub fn minimal_generators_of_mask(&self, mask: Mask) -> Vec<usize> {
        let mut gens: Vec<usize> = Vec::new();
        let mut have: Mask = 1;
        for e in mask_elements(mask) {
            if e == 0 || have & (1 << e) != 0 {
                continue;
            }
            gens.push(e);
            have = self.closure_mask(&gens);
            if have == mask {
                break;
            }
        }
        gens
    }

    // ---- automorphisms -----------------------------------------------------

    /// The full automorphism group, each map as an element permutation.
    /// Brute force over generator images constrained by (element order,
    /// conjugacy class size), then verified as a bijective homomorphism.
    pub fn automorphism_group(&self) -> Vec<Vec<u8>> {
        let n = self.order();
        // greedy generating sequence
        let mut gens: Vec<usize> = Vec::new();
        let mut have: Mask = 1;
        for e in 0..n {
            if have & (1 << e) != 0 {
                continue;
            }
            gens.push(e);
            have = self.closure_mask(&gens);
            if have.count_ones() as usize == n {
                break;
            }
        }
        // word table: every element as parent * generator
        let mut word: Vec<Option<(usize, usize)>> = vec![None; n];
        let mut order_list = vec![0usize];
        let mut frontier = vec![0usize];
        let mut reached: Mask = 1;
        while let Some(x) = frontier.pop() {
            for (gi, &g) in gens.iter().enumerate() {
                let y = self.mul(x, g);
                if reached & (1 << y) == 0 {
                    reached |= 1 << y;
                    word[y] = Some((x, gi));
                    order_list.push(y);
                    frontier.push(y);
                }
            }
        }
        debug_assert_eq!(order_list.len(), n);

        let pools: Vec<Vec<usize>> = gens
            .iter()
            .map(|&g| {
                (0..n)
                    .filter(|&h| {
                        self.orders[h] == self.orders[g]
                            && self.classes[self.class_of[h]].members.len()
                                == self.classes[self.class_of[g]].members.len()
                    })
                    .collect()
            })
            .collect();

        let mut auts: Vec<Vec<u8>> = Vec::new();
        let mut images = vec![0usize; gens.len()];
        self.aut_search(&gens, &pools, &word, &order_list, 0, &mut images, &mut auts);
        auts.sort();
        auts
    }

    #[allow(clippy::too_many_arguments)]
    fn aut_search(
        &self,
        gens: &[usize],
        pools: &[Vec<usize>],
        word: &[Option<(usize, usize)>],
        order_list: &[usize],
        depth: usize,
        images: &mut Vec<usize>,
        out: &mut Vec<Vec<u8>>,
    ) {
        let n = self.order();
        if depth == gens.len() {
            // build the map from the word table
            let mut phi = vec![u8::MAX; n];
            phi[0] = 0;
            for &y in &order_list[1..] {
                let (x, gi) = word[y].unwrap();
                phi[y] = self.mult[(phi[x] as usize) * n + images[gi]] as u8;
            }
            // bijectivity
            let mut seen = vec![false; n];
            for &v in &phi {
                if seen[v as usize] {
                    return;
                }
                seen[v as usize] = true;
            }
            // full homomorphism check
            for a in 0..n {
                for b in 0..n {
                    let ab = self.mult[a * n + b] as usize;
                    if phi[ab]
                        != self.mult[(phi[a] as usize) * n + phi[b] as usize] as u8
                    {
                        return;
                    }
                }
            }
            out.push(phi);
            return;
        }
        for &cand in &pools[depth] {
            images[depth] = cand;
            self.aut_search(gens, pools, word, order_list, depth + 1, images, out);
        }
    }

    /// Distinct permutations of conjugacy-class ids induced by Aut(G).
    pub fn class_permutations_from_auts(&self, auts: &[Vec<u8>]) -> Vec<Vec<usize>> {
        let mut set: std::collections::BTreeSet<Vec<usize>> = std::collections::BTreeSet::new();
        for phi in auts {
            let map: Vec<usize> = self
                .classes
                .iter()
                .map(|c| self.class_of[phi[c.representative] as usize])
                .collect();
            set.insert(map);
        }
        set.into_iter().collect()
    }
}

/// Iterate the element ids present in a mask.
pub fn mask_elements(mask: Mask) -> impl Iterator<Item = usize> {
    (0..32usize).filter(move |&i| mask & (1 << i) != 0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn build(name: &str, order: u32, degree: usize, gens: &[&str]) -> PermGroup {
        let generators = gens
            .iter()
            .map(|s| Perm::parse_cycles(s, degree).unwrap())
            .collect();
        PermGroup::from_generators(
            GroupId { order, index: 1 },
            name.into(),
            degree,
            generators,
        )
        .unwrap()
    }

    fn q8() -> PermGroup {
        build("Q8", 8, 8, &["(1,3,5,7)(2,4,6,8)", "(1,2,5,6)(3,8,7,4)"])
    }

    fn s4() -> PermGroup {
        build("S4", 24, 4, &["(1,2)", "(1,2,3,4)"])
    }

    fn s3() -> PermGroup {
        build("S3", 6, 3, &["(1,2)", "(1,2,3)"])
    }

    #[test]
    fn z4_has_four_singleton_classes() {
        let g = build("Z/4", 4, 4, &["(1,2,3,4)"]);
        let sizes: Vec<usize> = g.classes.iter().map(|c| c.members.len()).collect();
        assert_eq!(sizes, vec![1, 1, 1, 1]);
        assert!(g.is_abelian());
    }

    #[test]
    fn q8_class_sizes() {
        let g = q8();
        let mut sizes: Vec<usize> = g.classes.iter().map(|c| c.members.len()).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 1, 2, 2, 2]);
        // exactly one involution (the center)
        assert_eq!(g.orders.iter().filter(|&&o| o == 2).count(), 1);
    }

    #[test]
    fn s4_class_sizes() {
        let g = s4();
        let mut sizes: Vec<usize> = g.classes.iter().map(|c| c.members.len()).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 3, 6, 6, 8]);
        assert_eq!(g.classes[0].members, vec![0]);
    }

    #[test]
    fn class_ordering_is_by_order_size_min() {
        let g = s4();
        let keys: Vec<(u32, usize)> = g
            .classes
            .iter()
            .map(|c| (c.order, c.members.len()))
            .collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
    }

    #[test]
    fn power_map_is_class_well_defined() {
        let g = s4();
        for c in &g.classes {
            for k in 0..12i64 {
                let expected = g.class_of[g.pow(c.representative, k)];
                for &m in &c.members {
                    assert_eq!(g.class_of[g.pow(m, k)], expected);
                }
            }
        }
    }

    #[test]
    fn z6_subgroup_lattice() {
        let g = build("Z/6", 6, 6, &["(1,2,3,4,5,6)"]);
        let subs = g.subgroups_up_to_conjugacy();
        let mut orders: Vec<u32> = subs.iter().map(|s| s.order).collect();
        orders.sort_unstable();
        assert_eq!(orders, vec![1, 2, 3, 6]);
    }

    #[test]
    fn q8_has_six_subgroup_classes() {
        let subs = q8().subgroups_up_to_conjugacy();
        assert_eq!(subs.len(), 6);
        let mut orders: Vec<u32> = subs.iter().map(|s| s.order).collect();
        orders.sort_unstable();
        assert_eq!(orders, vec![1, 2, 4, 4, 4, 8]);
        // every subgroup of Q8 is normal
        assert!(subs.iter().all(|s| s.normal));
    }

    #[test]
    fn s3_has_four_subgroup_classes() {
        let subs = s3().subgroups_up_to_conjugacy();
        let orders: Vec<u32> = subs.iter().map(|s| s.order).collect();
        assert_eq!(orders, vec![1, 2, 3, 6]);
    }

    #[test]
    fn subgroup_orders_divide_group_order() {
        for g in [q8(), s4(), s3()] {
            for m in g.all_subgroups() {
                assert_eq!(g.order() % m.count_ones() as usize, 0);
            }
        }
    }

    #[test]
    fn automorphism_counts() {
        assert_eq!(build("Z/2", 2, 2, &["(1,2)"]).automorphism_group().len(), 1);
        assert_eq!(
            build("Z/4", 4, 4, &["(1,2,3,4)"]).automorphism_group().len(),
            2
        );
        assert_eq!(s3().automorphism_group().len(), 6);
        assert_eq!(q8().automorphism_group().len(), 24);
    }

    #[test]
    fn automorphisms_form_a_group_and_preserve_orders() {
        let g = s3();
        let auts = g.automorphism_group();
        let id: Vec<u8> = (0..g.order() as u8).collect();
        assert!(auts.contains(&id));
        for a in &auts {
            for b in &auts {
                let comp: Vec<u8> = (0..g.order()).map(|i| a[b[i] as usize]).collect();
                assert!(auts.contains(&comp));
            }
            for (e, &ord) in g.orders.iter().enumerate() {
                assert_eq!(g.orders[a[e] as usize], ord);
            }
        }
    }

    #[test]
    fn order_multiset_separates_small_groups() {
        // the two groups of order 4
        let z4 = build("Z/4", 4, 4, &["(1,2,3,4)"]);
        let v4 = build("Z/2xZ/2", 4, 4, &["(1,2)", "(3,4)"]);
        assert_ne!(z4.order_multiset(), v4.order_multiset());
        // the five groups of order 8 (built inline)
        let groups8 = [q8().order_multiset(),
            build("Z/8", 8, 8, &["(1,2,3,4,5,6,7,8)"]).order_multiset(),
            build("D4", 8, 4, &["(1,2,3,4)", "(2,4)"]).order_multiset(),
            build("Z/2xZ/4", 8, 6, &["(1,2)", "(3,4,5,6)"]).order_multiset(),
            build("Z/2^3", 8, 6, &["(1,2)", "(3,4)", "(5,6)"]).order_multiset()];
        for i in 0..groups8.len() {
            for j in i + 1..groups8.len() {
                assert_ne!(groups8[i], groups8[j]);
            }
        }
    }
}
