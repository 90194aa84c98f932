//! Oriented interval vectors and the polygon tests built on them.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numtheory::{divisors, gcd_u64};
use crate::scale::Scale;

/// `v[k]` counts ordered pairs `(x, y)` of the scale with `y - x ≡ k (mod c)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntervalVector {
    c: u32,
    v: Vec<u64>,
}

impl IntervalVector {
    pub fn modulus(&self) -> u32 {
        self.c
    }

    pub fn values(&self) -> &[u64] {
        &self.v
    }

    /// Multiplicity of interval `k`, taken modulo `c`.
    pub fn get(&self, k: i64) -> u64 {
        self.v[k.rem_euclid(i64::from(self.c)) as usize]
    }
}

impl fmt::Display for IntervalVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, x) in self.v.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str("]")
    }
}

pub fn interval_vector(s: &Scale) -> IntervalVector {
    let c = s.modulus();
    let mut v = vec![0u64; c as usize];
    for x in s.iter() {
        for y in s.iter() {
            v[((y + c - x) % c) as usize] += 1;
        }
    }
    IntervalVector { c, v }
}

/// Closed form of the interval vector of the cluster `{0, ..., d-1}`.
///
/// An interval `k` is spanned either directly (`j = i + k`, giving `d - k`
/// pairs when `k < d`) or across the octave (`j = i + k - c`, giving
/// `d + k - c` pairs when `d + k > c`).
pub fn cluster_vector(c: u32, d: u32) -> Result<IntervalVector> {
    if d <= 1 || d + 1 >= c {
        return Err(Error::PreconditionViolated(format!(
            "cluster vector needs 1 < d < c - 1, got c = {c}, d = {d}"
        )));
    }
    let (c, d) = (i64::from(c), i64::from(d));
    let mut v = vec![0u64; c as usize];
    v[0] = d as u64;
    for k in 1..=c / 2 {
        let count = if k <= d.min(c - d) {
            d - k
        } else if c - d < k && k <= d {
            2 * d - c
        } else if k >= d.max(c - d) {
            d - c + k
        } else {
            // d < k < c - d: neither kind of pair exists
            0
        };
        v[k as usize] = count as u64;
        v[(c - k) as usize] = count as u64;
    }
    Ok(IntervalVector { c: c as u32, v })
}

/// Whether `s` is a union of orbits of `x ↦ x + f`.
///
/// Both characterizations are evaluated (`V_s(f) = |s|` and `s + f = s`);
/// a disagreement is a bug and panics.
pub fn is_union_of_polygons(s: &Scale, f: u32) -> bool {
    let by_vector = interval_vector(s).get(i64::from(f)) == s.len() as u64;
    let by_translation = s.translate(i64::from(f)) == *s;
    assert_eq!(
        by_vector, by_translation,
        "interval-vector and translation tests disagree on {s} with f = {f}"
    );
    by_vector
}

/// The smallest divisor `f` of `c` for which `s` is one orbit of `x ↦ x + f`.
pub fn is_regular_polygon(s: &Scale) -> Option<u32> {
    if s.is_empty() {
        return None;
    }
    let c = s.modulus();
    let d = s.len() as u64;
    let iv = interval_vector(s);
    divisors(u64::from(c))
        .into_iter()
        .map(|f| f as u32)
        // a single orbit of +f has exactly c / f points
        .find(|&f| u64::from(c / f) == d && iv.get(i64::from(f)) == d)
}

/// Generator of `⟨s - s⟩` as a divisor of `c`; singletons give `c`
/// (the trivial group).
pub fn difference_group(s: &Scale) -> u32 {
    let c = s.modulus();
    let first = match s.pcs().first() {
        Some(&x) => x,
        None => return c,
    };
    // every difference is a combination of differences to one element
    s.iter()
        .skip(1)
        .fold(u64::from(c), |g, x| gcd_u64(g, u64::from(x - first))) as u32
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(text: &str) -> Scale {
        text.parse().unwrap()
    }

    #[test]
    fn definition_examples() {
        let cluster = interval_vector(&Scale::cluster(12, 8));
        assert_eq!(cluster.values(), &[8, 7, 6, 5, 4, 4, 4, 4, 4, 5, 6, 7]);
        assert_eq!(cluster.to_string(), "[8, 7, 6, 5, 4, 4, 4, 4, 4, 5, 6, 7]");
        assert_eq!(interval_vector(&s("9:4")).values(), &[1, 0, 0, 0, 0, 0, 0, 0, 0]);
        assert_eq!(
            interval_vector(&s("12:0,2,4,6,8,10")).values(),
            &[6, 0, 6, 0, 6, 0, 6, 0, 6, 0, 6, 0]
        );
    }

    #[test]
    fn cluster_examples() {
        assert_eq!(
            cluster_vector(12, 8).unwrap().values(),
            &[8, 7, 6, 5, 4, 4, 4, 4, 4, 5, 6, 7]
        );
        assert_eq!(cluster_vector(12, 8).unwrap(), interval_vector(&Scale::cluster(12, 8)));
        assert_eq!(cluster_vector(10, 4).unwrap().values(), &[4, 3, 2, 1, 0, 0, 0, 1, 2, 3]);
        for (c, d) in [(12, 1), (12, 11), (12, 12), (3, 2), (2, 1)] {
            assert!(cluster_vector(c, d).is_err(), "c={c} d={d}");
        }
    }

    #[test]
    fn cluster_closed_form_matches_pair_count() {
        for c in 4..=40 {
            for d in 2..c - 1 {
                assert_eq!(
                    cluster_vector(c, d).unwrap(),
                    interval_vector(&Scale::cluster(c, d)),
                    "c={c} d={d}"
                );
            }
        }
    }

    #[test]
    fn only_unit_intervals_reach_d_minus_one_in_a_cluster() {
        for c in 4..=40u32 {
            for d in 2..c - 1 {
                let iv = cluster_vector(c, d).unwrap();
                let hits: Vec<u32> = (1..c)
                    .filter(|&k| iv.get(i64::from(k)) == u64::from(d - 1))
                    .collect();
                assert_eq!(hits, vec![1, c - 1], "c={c} d={d}");
                assert!((2..c - 1).all(|k| iv.get(i64::from(k)) < u64::from(d - 1)));
            }
        }
    }

    #[test]
    fn vector_invariants() {
        for text in ["12:0,2,4,5,7,9,11", "10:1,3,5,7", "7:0", "5:", "16:0,1,5,9,12"] {
            let x = s(text);
            let iv = interval_vector(&x);
            let d = x.len() as u64;
            assert_eq!(iv.get(0), d);
            assert_eq!(iv.values().iter().sum::<u64>(), d * d);
            for k in 1..i64::from(x.modulus()) {
                assert_eq!(iv.get(k), iv.get(-k));
            }
        }
    }

    #[test]
    fn union_of_polygons_examples() {
        assert!(is_union_of_polygons(&s("12:0,1,3,4,6,7,9,10"), 3));
        assert!(!is_union_of_polygons(&s("12:0,1,3,4,6,7,9,10"), 2));
        let liszt = s("12:2,5,8,9,11");
        assert_eq!(interval_vector(&liszt).get(3), 4);
        assert!(!is_union_of_polygons(&liszt, 3));
    }

    #[test]
    fn union_of_polygons_agrees_everywhere() {
        // exhaustive over all subsets for small c; the function asserts agreement
        for c in 1..=12u32 {
            for mask in 0u32..(1 << c) {
                let x = Scale::new(c, (0..c).filter(|i| mask >> i & 1 == 1)).unwrap();
                for f in 1..c {
                    let _ = is_union_of_polygons(&x, f);
                }
            }
        }
        // and a sampled sweep up to c = 24
        let mut state = 0x9e37_79b9_7f4a_7c15u64;
        for c in 13..=24u32 {
            for _ in 0..2000 {
                state ^= state << 13;
                state ^= state >> 7;
                state ^= state << 17;
                let x = Scale::new(c, (0..c).filter(|i| state >> i & 1 == 1)).unwrap();
                for f in 1..c {
                    let _ = is_union_of_polygons(&x, f);
                }
            }
        }
    }

    #[test]
    fn regular_polygon_examples() {
        assert_eq!(is_regular_polygon(&s("12:0,2,4,6,8,10")), Some(2));
        assert_eq!(is_regular_polygon(&s("12:0,1,3")), None);
        assert_eq!(is_regular_polygon(&s("12:1,5,9")), Some(4));
        assert_eq!(is_regular_polygon(&s("12:0,1,3,4,6,7,9,10")), None);
        assert_eq!(is_regular_polygon(&s("12:5")), Some(12));
        assert_eq!(is_regular_polygon(&Scale::full(12)), Some(1));
        assert_eq!(is_regular_polygon(&s("12:")), None);
    }

    #[test]
    fn difference_group_examples() {
        assert_eq!(difference_group(&s("14:0,2,4,6,8,10,12")), 2);
        assert_eq!(difference_group(&s("14:3")), 14);
        assert_eq!(difference_group(&s("12:0,2,5,7")), 1);
        assert_eq!(difference_group(&s("12:1,4,10")), 3);
    }

    #[test]
    fn affine_maps_permute_the_vector() {
        use crate::scale::AffineMap;
        let c = 12;
        let x = s("12:0,1,4,6,7");
        let iv = interval_vector(&x);
        for lambda in [1, 5, 7, 11] {
            for mu in 0..c {
                let image = interval_vector(&x.apply_affine(&AffineMap::new(c, lambda, i64::from(mu))));
                for k in 0..i64::from(c) {
                    assert_eq!(iv.get(k), image.get(lambda * k));
                }
            }
        }
    }
}
