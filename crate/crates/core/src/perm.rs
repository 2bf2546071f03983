//! Permutations on `{0, .., degree-1}` with cycle-notation I/O.
//!
//! Composition convention: `a.compose(&b)` applies `b` first, i.e.
//! `(a*b)(x) = a(b(x))`.  The catalog and fixture files use 1-based cycle
//! notation like `(1,2,3)(4,5)`; the identity is written `()`.

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Perm {
    img: Vec<usize>,
}

impl Perm {
    pub fn identity(degree: usize) -> Self {
        Perm {
            img: (0..degree).collect(),
        }
    }

    pub fn from_images(img: Vec<usize>) -> Result<Self> {
        let n = img.len();
        let mut seen = vec![false; n];
        for &i in &img {
            if i >= n || seen[i] {
                return Err(Error::parse("permutation", "images are not a bijection"));
            }
            seen[i] = true;
        }
        Ok(Perm { img })
    }

    pub fn degree(&self) -> usize {
        self.img.len()
    }

    pub fn apply(&self, p: usize) -> usize {
        self.img[p]
    }

    pub fn is_identity(&self) -> bool {
        self.img.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Perm) -> Perm {
        debug_assert_eq!(self.degree(), other.degree());
        Perm {
            img: other.img.iter().map(|&i| self.img[i]).collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut img = vec![0; self.img.len()];
        for (i, &j) in self.img.iter().enumerate() {
            img[j] = i;
        }
        Perm { img }
    }

    pub fn order(&self) -> u32 {
        let mut p = self.clone();
        let mut k = 1;
        while !p.is_identity() {
            p = p.compose(self);
            k += 1;
        }
        k
    }

    /// Parse 1-based cycle notation, e.g. `(1,2,3)(4,5)`; `()` is the identity.
    pub fn parse_cycles(s: &str, degree: usize) -> Result<Perm> {
        let s = s.trim();
        let mut img: Vec<usize> = (0..degree).collect();
        if s == "()" {
            return Ok(Perm { img });
        }
        let bad = |msg: &str| Error::parse(format!("permutation `{s}`"), msg);
        if !s.starts_with('(') || !s.ends_with(')') {
            return Err(bad("expected parenthesized cycles"));
        }
        let mut touched = vec![false; degree];
        for cyc in s[1..s.len() - 1].split(")(") {
            let points: Vec<usize> = cyc
                .split(',')
                .map(|t| {
                    t.trim()
                        .parse::<usize>()
                        .map_err(|_| bad("bad point"))
                        .and_then(|p| {
                            if p >= 1 && p <= degree {
                                Ok(p - 1)
                            } else {
                                Err(bad("point out of range"))
                            }
                        })
                })
                .collect::<Result<_>>()?;
            if points.len() < 2 {
                return Err(bad("cycle of length < 2"));
            }
            for &p in &points {
                if touched[p] {
                    return Err(bad("point repeated across cycles"));
                }
                touched[p] = true;
            }
            for (i, &p) in points.iter().enumerate() {
                img[p] = points[(i + 1) % points.len()];
            }
        }
        Ok(Perm { img })
    }

    /// Render in canonical 1-based cycle notation (fixed points omitted,
    /// cycles ordered by smallest point, each starting at its smallest point).
    pub fn to_cycles_string(&self) -> String {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = String::new();
        for start in 0..n {
            if seen[start] || self.img[start] == start {
                seen[start] = true;
                continue;
            }
            out.push('(');
            let mut p = start;
            loop {
                seen[p] = true;
                out.push_str(&(p + 1).to_string());
                p = self.img[p];
                if p == start {
                    break;
                }
                out.push(',');
            }
            out.push(')');
        }
        if out.is_empty() {
            out.push_str("()");
        }
        out
    }
}
