//! Non-integer steps: `J_α` sets `{⌊kα⌋ mod c}` and `P_x` sets
//! `{k·x mod 1}` on the circle `R/Z`.
//!
//! Everything here is exact rational arithmetic. Floors and reductions
//! mod 1 are discontinuous, so floating point is never used.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numtheory::gcd_u64;
use crate::scale::Scale;

pub type Rational = Ratio<i64>;

/// Parses `"p/q"` or a bare integer `"p"`.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let t = text.trim();
    let (p, q) = match t.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (t, "1"),
    };
    let p: i64 = p.parse().map_err(|_| Error::parse(text, "bad numerator"))?;
    let q: i64 = q.parse().map_err(|_| Error::parse(text, "bad denominator"))?;
    if q <= 0 {
        return Err(Error::parse(text, "denominator must be positive"));
    }
    Ok(Rational::new(p, q))
}

pub fn format_rational(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// A point of `R/Z` with rational coordinate, kept in `[0, 1)` and in lowest
/// terms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RationalPoint(Rational);

impl RationalPoint {
    pub fn new(numerator: i64, denominator: i64) -> Result<Self> {
        if denominator <= 0 {
            return Err(Error::PreconditionViolated("denominator must be positive".into()));
        }
        Ok(Self::from_rational(Rational::new(numerator, denominator)))
    }

    pub fn from_rational(r: Rational) -> Self {
        RationalPoint(r - r.floor())
    }

    pub fn zero() -> Self {
        RationalPoint(Rational::from_integer(0))
    }

    pub fn value(&self) -> Rational {
        self.0
    }

    pub fn numerator(&self) -> i64 {
        *self.0.numer()
    }

    pub fn denominator(&self) -> i64 {
        *self.0.denom()
    }

    pub fn add(self, other: RationalPoint) -> RationalPoint {
        Self::from_rational(self.0 + other.0)
    }

    pub fn neg(self) -> RationalPoint {
        Self::from_rational(-self.0)
    }

    pub fn scale(self, k: i64) -> RationalPoint {
        Self::from_rational(self.0 * k)
    }
}

impl fmt::Display for RationalPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numerator(), self.denominator())
    }
}

impl FromStr for RationalPoint {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_rational(s).map(Self::from_rational)
    }
}

impl Serialize for RationalPoint {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for RationalPoint {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// The terms `⌊kα⌋ mod c` for `k` in `0..d`, in order.
pub fn j_sequence(alpha: Rational, c: u32, d: u32) -> Vec<u32> {
    assert!(c >= 1, "modulus must be >= 1");
    (0..i64::from(d))
        .map(|k| (alpha * k).floor().to_integer().rem_euclid(i64::from(c)) as u32)
        .collect()
}

/// Support of [`j_sequence`].
pub fn j_set(alpha: Rational, c: u32, d: u32) -> Result<Scale> {
    if c == 0 || d == 0 {
        return Err(Error::PreconditionViolated("need c >= 1 and d >= 1".into()));
    }
    Ok(Scale::from_residues(c, j_sequence(alpha, c, d).into_iter().map(i64::from)))
}

/// Right endpoint `α′` of the largest `[α, α′)` on which every `⌊kβ⌋`,
/// `1 <= k < d`, is constant: the nearest floor breakpoint above `α`.
///
/// With `c >= 2` each breakpoint changes a term mod `c`, so `α′` is also the
/// first point where the `J` sequence changes.
pub fn alpha_stability_interval(alpha: Rational, c: u32, d: u32) -> Result<(Rational, Rational)> {
    if d < 2 {
        return Err(Error::PreconditionViolated("stability interval needs d >= 2".into()));
    }
    if c < 2 {
        return Err(Error::PreconditionViolated(
            "in Z_1 every J sequence is constant; need c >= 2".into(),
        ));
    }
    let right = (1..i64::from(d))
        .map(|k| ((alpha * k).floor() + 1) / k)
        .min()
        .expect("d >= 2 gives at least one breakpoint");
    Ok((alpha, right))
}

/// `{0, x, 2x, ..., (d-1)x} mod 1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PSet {
    pub x: RationalPoint,
    pub d: u32,
    pub points: Vec<RationalPoint>,
}

impl PSet {
    fn point_set(&self) -> BTreeSet<RationalPoint> {
        self.points.iter().copied().collect()
    }

    /// Common denominator of the points.
    pub fn grid(&self) -> i64 {
        self.points
            .iter()
            .fold(1u64, |l, p| {
                let q = p.denominator() as u64;
                l / gcd_u64(l, q) * q
            }) as i64
    }
}

pub fn p_set(x: RationalPoint, d: u32) -> Result<PSet> {
    if d == 0 {
        return Err(Error::PreconditionViolated("P-set needs d >= 1".into()));
    }
    let points: BTreeSet<RationalPoint> = (0..i64::from(d)).map(|k| x.scale(k)).collect();
    Ok(PSet {
        x,
        d,
        points: points.into_iter().collect(),
    })
}

/// Every grid step `y` such that some translate of `P_y^d` is the given set.
///
/// With the points on the grid `(1/q)Z` and `q > 2(d - 1)`, index
/// differences below `d` never wrap, so the set behaves like a progression
/// with an irrational step and the answer is `{x, -x}`.
pub fn p_generators_finite(s: &PSet) -> Result<BTreeSet<RationalPoint>> {
    let d = i64::from(s.d);
    let q = s.grid();
    if d < 2 {
        return Err(Error::PreconditionViolated("generator search needs d >= 2".into()));
    }
    if q <= 2 * (d - 1) {
        return Err(Error::HypothesisViolated(format!(
            "grid 1/{q} is too coarse for {d} terms; need q > {}",
            2 * (d - 1)
        )));
    }
    let target = s.point_set();
    let mut found = BTreeSet::new();
    for k in 0..q {
        let y = RationalPoint::from_rational(Rational::new(k, q));
        let matches = target.iter().any(|&tau| {
            let walk: BTreeSet<RationalPoint> = (0..d).map(|j| tau.add(y.scale(j))).collect();
            walk.len() == s.d as usize && walk == target
        });
        if matches {
            found.insert(y);
        }
    }
    Ok(found)
}

/// Generators of the infinite scale `{n·x mod 1 : n ∈ Z}` for rational
/// `x = a/b`: the group `(1/b)Z/Z`, whose generators are the `k/b` with `k`
/// coprime to `b`.
pub fn p_infinite_generators(x: RationalPoint) -> BTreeSet<RationalPoint> {
    let b = x.denominator();
    if b == 1 {
        return BTreeSet::from([RationalPoint::zero()]);
    }
    (1..b)
        .filter(|&k| gcd_u64(k as u64, b as u64) == 1)
        .map(|k| RationalPoint::from_rational(Rational::new(k, b)))
        .collect()
}
