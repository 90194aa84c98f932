//! Scales as subsets of `Z_c`, with translation, affine maps and the
//! canonical `c:p1,p2,...` text encoding.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numtheory::{gcd_u64, mod_inverse};

/// A subset of `Z_c`, stored as strictly ascending residues.
///
/// Serializes as its canonical text form.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Scale {
    c: u32,
    pcs: Vec<u32>,
}

impl Scale {
    /// Builds a scale from residues that must already lie in `0..c` without
    /// repetition. Order does not matter.
    pub fn new(c: u32, pcs: impl IntoIterator<Item = u32>) -> Result<Self> {
        if c == 0 {
            return Err(Error::PreconditionViolated("modulus must be >= 1".into()));
        }
        let mut v: Vec<u32> = pcs.into_iter().collect();
        if let Some(&x) = v.iter().find(|&&x| x >= c) {
            return Err(Error::PreconditionViolated(format!("residue {x} out of range for Z_{c}")));
        }
        v.sort_unstable();
        if v.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::PreconditionViolated("duplicate residue".into()));
        }
        Ok(Scale { c, pcs: v })
    }

    /// Builds the support of arbitrary integers reduced modulo `c`.
    pub fn from_residues(c: u32, values: impl IntoIterator<Item = i64>) -> Self {
        assert!(c >= 1, "modulus must be >= 1");
        let mut v: Vec<u32> = values
            .into_iter()
            .map(|x| x.rem_euclid(i64::from(c)) as u32)
            .collect();
        v.sort_unstable();
        v.dedup();
        Scale { c, pcs: v }
    }

    pub fn full(c: u32) -> Self {
        Scale::from_residues(c, 0..i64::from(c))
    }

    pub fn empty(c: u32) -> Self {
        assert!(c >= 1, "modulus must be >= 1");
        Scale { c, pcs: Vec::new() }
    }

    /// `{0, 1, ..., d-1}` in `Z_c`.
    pub fn cluster(c: u32, d: u32) -> Self {
        Scale::from_residues(c, 0..i64::from(d))
    }

    pub fn modulus(&self) -> u32 {
        self.c
    }

    pub fn pcs(&self) -> &[u32] {
        &self.pcs
    }

    pub fn len(&self) -> usize {
        self.pcs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pcs.is_empty()
    }

    pub fn contains(&self, x: u32) -> bool {
        self.pcs.binary_search(&(x % self.c)).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = u32> + '_ {
        self.pcs.iter().copied()
    }

    /// `{x + t mod c}`.
    pub fn translate(&self, t: i64) -> Scale {
        Scale::from_residues(self.c, self.iter().map(|x| i64::from(x) + t))
    }

    pub fn apply_affine(&self, map: &AffineMap) -> Scale {
        assert_eq!(map.c, self.c, "affine map and scale live in different groups");
        Scale::from_residues(self.c, self.iter().map(|x| i64::from(map.apply(x))))
    }

    pub fn complement(&self) -> Scale {
        Scale {
            c: self.c,
            pcs: (0..self.c).filter(|&x| !self.contains(x)).collect(),
        }
    }

    pub fn is_subset(&self, other: &Scale) -> bool {
        self.c == other.c && self.iter().all(|x| other.contains(x))
    }

    /// Membership bitmap of length `c`.
    pub fn indicator(&self) -> Vec<bool> {
        let mut v = vec![false; self.c as usize];
        for x in self.iter() {
            v[x as usize] = true;
        }
        v
    }
}

pub fn translate(s: &Scale, t: i64) -> Scale {
    s.translate(t)
}

pub fn apply_affine(s: &Scale, map: &AffineMap) -> Scale {
    s.apply_affine(map)
}

pub fn complement(s: &Scale) -> Scale {
    s.complement()
}

pub fn parse_scale(text: &str) -> Result<Scale> {
    text.parse()
}

pub fn format_scale(s: &Scale) -> String {
    s.to_string()
}

impl fmt::Display for Scale {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:", self.c)?;
        for (i, x) in self.pcs.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

impl FromStr for Scale {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let (head, tail) = text
            .trim()
            .split_once(':')
            .ok_or_else(|| Error::parse(text, "expected \"c:p1,p2,...\""))?;
        let c: u32 = head
            .trim()
            .parse()
            .map_err(|_| Error::parse(text, format!("bad modulus {head:?}")))?;
        if c == 0 {
            return Err(Error::parse(text, "modulus must be >= 1"));
        }
        let mut pcs = Vec::new();
        if !tail.trim().is_empty() {
            for item in tail.split(',') {
                let x: u32 = item
                    .trim()
                    .parse()
                    .map_err(|_| Error::parse(text, format!("bad residue {item:?}")))?;
                if x >= c {
                    return Err(Error::parse(text, format!("residue {x} is not below {c}")));
                }
                pcs.push(x);
            }
        }
        pcs.sort_unstable();
        if let Some(w) = pcs.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::parse(text, format!("duplicate residue {}", w[0])));
        }
        Ok(Scale { c, pcs })
    }
}

impl Serialize for Scale {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Scale {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}

/// `x ↦ λx + μ` on `Z_c`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct AffineMap {
    c: u32,
    multiplier: u32,
    offset: u32,
}

impl AffineMap {
    pub fn new(c: u32, multiplier: i64, offset: i64) -> Self {
        assert!(c >= 1, "modulus must be >= 1");
        let m = i64::from(c);
        AffineMap {
            c,
            multiplier: multiplier.rem_euclid(m) as u32,
            offset: offset.rem_euclid(m) as u32,
        }
    }

    pub fn modulus(&self) -> u32 {
        self.c
    }

    pub fn multiplier(&self) -> u32 {
        self.multiplier
    }

    pub fn offset(&self) -> u32 {
        self.offset
    }

    pub fn is_bijective(&self) -> bool {
        gcd_u64(u64::from(self.multiplier), u64::from(self.c)) == 1
    }

    pub fn apply(&self, x: u32) -> u32 {
        ((u64::from(self.multiplier) * u64::from(x) + u64::from(self.offset)) % u64::from(self.c))
            as u32
    }

    /// `(λ⁻¹, -λ⁻¹μ)`, when `λ` is a unit.
    pub fn inverse(&self) -> Result<AffineMap> {
        let inv = mod_inverse(u64::from(self.multiplier), u64::from(self.c))? as i64;
        Ok(AffineMap::new(self.c, inv, -inv * i64::from(self.offset)))
    }
}
