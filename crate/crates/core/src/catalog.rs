//! The shipped group catalog: every isomorphism class of order 2..24.
//!
//! File format (UTF-8): one record per group,
//! `order index degree ; gen1 ; gen2 ... # name`, generators in cycle
//! notation.  Lines starting with `#` are comments; a trailing `# name` on a
//! record is a human-readable annotation kept as the group's display name.

use std::collections::BTreeMap;
use std::path::Path;

use crate::error::{Error, Result};
use crate::group::{GroupId, PermGroup};
use crate::perm::Perm;

/// Number of isomorphism classes per order (standard small-group census),
/// validated at load time.
pub const CENSUS: [(u32, usize); 23] = [
    (2, 1),
    (3, 1),
    (4, 2),
    (5, 1),
    (6, 2),
    (7, 1),
    (8, 5),
    (9, 2),
    (10, 2),
    (11, 1),
    (12, 5),
    (13, 1),
    (14, 2),
    (15, 1),
    (16, 14),
    (17, 1),
    (18, 5),
    (19, 1),
    (20, 5),
    (21, 2),
    (22, 2),
    (23, 1),
    (24, 15),
];

#[derive(Debug)]
pub struct GroupCatalog {
    /// Groups per order, indexed 1.. in file order.
    pub by_order: BTreeMap<u32, Vec<PermGroup>>,
    pub provenance: String,
}

impl GroupCatalog {
    pub fn get(&self, id: GroupId) -> Option<&PermGroup> {
        self.by_order
            .get(&id.order)
            .and_then(|v| v.get(id.index as usize - 1))
    }

    pub fn groups(&self) -> impl Iterator<Item = &PermGroup> {
        self.by_order.values().flatten()
    }

    pub fn len(&self) -> usize {
        self.by_order.values().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

pub fn load_catalog(path: &Path) -> Result<GroupCatalog> {
    let text = std::fs::read_to_string(path)?;
    parse_catalog(&text, &path.display().to_string())
}

pub fn parse_catalog(text: &str, source: &str) -> Result<GroupCatalog> {
    let mut by_order: BTreeMap<u32, Vec<PermGroup>> = BTreeMap::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let ctx = || format!("{source}:{}", lineno + 1);
        let (record, name) = match line.split_once('#') {
            Some((r, n)) => (r.trim(), n.trim().to_string()),
            None => (line, String::new()),
        };
        let (head, gens_part) = record
            .split_once(';')
            .ok_or_else(|| Error::parse(ctx(), "missing `;` after header"))?;
        let head_fields: Vec<&str> = head.split_whitespace().collect();
        if head_fields.len() != 3 {
            return Err(Error::parse(ctx(), "header must be `order index degree`"));
        }
        let order: u32 = head_fields[0]
            .parse()
            .map_err(|_| Error::parse(ctx(), "bad order"))?;
        let index: u32 = head_fields[1]
            .parse()
            .map_err(|_| Error::parse(ctx(), "bad index"))?;
        let degree: usize = head_fields[2]
            .parse()
            .map_err(|_| Error::parse(ctx(), "bad degree"))?;
        if !(2..=24).contains(&order) {
            return Err(Error::Catalog(format!(
                "{}: order {order} outside 2..24",
                ctx()
            )));
        }
        let generators: Vec<Perm> = gens_part
            .split(';')
            .map(|s| Perm::parse_cycles(s, degree))
            .collect::<Result<_>>()?;
        let entry = by_order.entry(order).or_default();
        if index as usize != entry.len() + 1 {
            return Err(Error::Catalog(format!(
                "{}: index {index} out of sequence for order {order}",
                ctx()
            )));
        }
        let display = if name.is_empty() {
            format!("G[{order},{index}]")
        } else {
            name
        };
        let group = PermGroup::from_generators(GroupId { order, index }, display, degree, generators)?;
        entry.push(group);
    }
    // census validation
    for (order, expected) in CENSUS {
        let got = by_order.get(&order).map_or(0, Vec::len);
        if got != expected {
            return Err(Error::Catalog(format!(
                "order {order}: {got} groups in file, census requires {expected}"
            )));
        }
    }
    if by_order.keys().any(|&o| !(2..=24).contains(&o)) {
        return Err(Error::Catalog("unexpected order outside 2..24".into()));
    }
    Ok(GroupCatalog {
        by_order,
        provenance: source.to_string(),
    })
}

/// Locate a group by display name (exact match), used by tests and fixtures.
pub fn find_by_name<'a>(catalog: &'a GroupCatalog, name: &str) -> Option<&'a PermGroup> {
    catalog.groups().find(|g| g.name == name)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn data_path() -> std::path::PathBuf {
        std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data/groups.cat")
    }

    #[test]
    fn catalog_loads_and_census_holds() {
        let cat = load_catalog(&data_path()).unwrap();
        assert_eq!(cat.len(), 73);
        assert_eq!(cat.by_order[&8].len(), 5);
        assert_eq!(cat.by_order[&16].len(), 14);
        assert_eq!(cat.by_order[&2].len(), 1);
        assert_eq!(cat.by_order[&2][0].order(), 2);
    }

    #[test]
    fn every_group_satisfies_basic_invariants() {
        let cat = load_catalog(&data_path()).unwrap();
        for g in cat.groups() {
            assert_eq!(g.order() as u32, g.id.order);
            assert!(g.elements[0].is_identity());
            // class equation
            let total: usize = g.classes.iter().map(|c| c.members.len()).sum();
            assert_eq!(total, g.order());
            for c in &g.classes {
                assert_eq!(g.order() % c.members.len(), 0);
            }
        }
    }

    #[test]
    fn rejects_wrong_counts() {
        let text = "2 1 2 ; (1,2)\n";
        assert!(parse_catalog(text, "inline").is_err());
    }

    #[test]
    fn rejects_generation_mismatch() {
        let err = PermGroup::from_generators(
            GroupId { order: 3, index: 1 },
            "bad".into(),
            2,
            vec![Perm::parse_cycles("(1,2)", 2).unwrap()],
        );
        assert!(err.is_err());
    }
}
