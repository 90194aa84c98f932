//! Generated scales: construction, brute-force generator enumeration and
//! structural classification.
//!
//! [`enumerate_generators`] tries every step and every starting point and is
//! the reference oracle. [`classify`] never calls it: it works from the
//! difference group and the interval vector, so the two can be checked
//! against each other.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::interval_vector::{difference_group, interval_vector};
use crate::numtheory::{gcd_u64, totient};
use crate::scale::Scale;

/// One arithmetic presentation `{start + k·step : 0 <= k < length}` of a scale.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GenSpec {
    pub c: u32,
    pub start: u32,
    pub step: u32,
    pub length: u32,
}

impl GenSpec {
    pub fn new(c: u32, start: i64, step: i64, length: u32) -> Result<Self> {
        if c == 0 || length == 0 || length > c {
            return Err(Error::PreconditionViolated(format!(
                "need 1 <= length <= c, got c = {c}, length = {length}"
            )));
        }
        let m = i64::from(c);
        Ok(GenSpec {
            c,
            start: start.rem_euclid(m) as u32,
            step: step.rem_euclid(m) as u32,
            length,
        })
    }

    fn terms(&self) -> impl Iterator<Item = u32> + '_ {
        let (c, a, f) = (u64::from(self.c), u64::from(self.start), u64::from(self.step));
        (0..u64::from(self.length)).map(move |k| ((a + k * f) % c) as u32)
    }

    /// Whether the `length` terms are pairwise distinct, i.e. the step's
    /// additive order is at least `length`.
    pub fn is_injective(&self) -> bool {
        u64::from(self.length) <= u64::from(self.c) / gcd_u64(u64::from(self.c), u64::from(self.step))
    }
}

/// Support of the arithmetic sequence; may be smaller than `length` when the
/// step has small order.
pub fn generate(spec: &GenSpec) -> Scale {
    Scale::from_residues(spec.c, spec.terms().map(i64::from))
}

/// Every step that generates a scale, with the starting points that work.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorReport {
    pub scale: Scale,
    pub generators: BTreeMap<u32, BTreeSet<u32>>,
    /// Number of distinct steps.
    pub count: usize,
}

impl GeneratorReport {
    pub fn steps(&self) -> Vec<u32> {
        self.generators.keys().copied().collect()
    }

    pub fn is_generated(&self) -> bool {
        self.count > 0
    }
}

/// Exhaustive search over all steps `f` in `0..c` and starts `a` in the scale.
pub fn enumerate_generators(s: &Scale) -> Result<GeneratorReport> {
    if s.is_empty() {
        return Err(Error::EmptyScale);
    }
    let c = s.modulus();
    let d = s.len() as u32;
    let mut generators = BTreeMap::new();
    for f in 0..c {
        let starts: BTreeSet<u32> = s
            .iter()
            .filter(|&a| {
                let spec = GenSpec { c, start: a, step: f, length: d };
                spec.is_injective() && spec.terms().all(|x| s.contains(x))
            })
            .collect();
        if !starts.is_empty() {
            generators.insert(f, starts);
        }
    }
    Ok(GeneratorReport {
        scale: s.clone(),
        count: generators.len(),
        generators,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ScaleKind {
    OneNote,
    Tritone,
    TwoGenerator,
    RegularPolygon,
    IncompletePolygon,
    FullAggregate,
    AlmostFull,
    NotGenerated,
}

impl ScaleKind {
    pub fn name(self) -> &'static str {
        match self {
            ScaleKind::OneNote => "OneNote",
            ScaleKind::Tritone => "Tritone",
            ScaleKind::TwoGenerator => "TwoGenerator",
            ScaleKind::RegularPolygon => "RegularPolygon",
            ScaleKind::IncompletePolygon => "IncompletePolygon",
            ScaleKind::FullAggregate => "FullAggregate",
            ScaleKind::AlmostFull => "AlmostFull",
            ScaleKind::NotGenerated => "NotGenerated",
        }
    }
}

impl fmt::Display for ScaleKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Classification {
    pub kind: ScaleKind,
    /// `gcd(c, f)` for any generator `f`; absent when not generated.
    pub m: Option<u32>,
    pub predicted_count: u64,
}

/// Classifies a non-empty scale and predicts its number of generator steps.
///
/// The scale sits inside one coset of its difference group `mZ_c`, which has
/// `h = c / m` elements. Dividing by `m` moves it to `Z_h`, where the
/// difference group is everything and any generator must be a unit:
/// `d = h` is a polygon, `d = h - 1` a polygon with one point removed, and
/// otherwise the only candidate steps are units `u` with `V(u) = d - 1`.
pub fn classify(s: &Scale) -> Result<Classification> {
    let c = s.modulus();
    let d = s.len() as u32;
    let phi = |n: u32| totient(u64::from(n));
    let generated = |kind, m, predicted_count| Classification {
        kind,
        m: Some(m),
        predicted_count,
    };

    match d {
        0 => return Err(Error::EmptyScale),
        // every step (0 included) generates a single note
        1 => return Ok(generated(ScaleKind::OneNote, c, u64::from(c))),
        _ if d == c => return Ok(generated(ScaleKind::FullAggregate, 1, phi(c))),
        _ => {}
    }

    let m = difference_group(s);
    let h = c / m;
    if d == h {
        return Ok(if h == 2 {
            generated(ScaleKind::Tritone, m, 1)
        } else {
            generated(ScaleKind::RegularPolygon, m, phi(h))
        });
    }
    if d + 1 == h {
        let kind = if m == 1 {
            ScaleKind::AlmostFull
        } else {
            ScaleKind::IncompletePolygon
        };
        return Ok(generated(kind, m, phi(h)));
    }

    let first = s.pcs()[0];
    let reduced = Scale::from_residues(h, s.iter().map(|x| i64::from((x - first) / m)));
    if unit_step_progression(&reduced).is_some() {
        Ok(generated(ScaleKind::TwoGenerator, m, 2))
    } else {
        Ok(Classification {
            kind: ScaleKind::NotGenerated,
            m: None,
            predicted_count: 0,
        })
    }
}

/// For `2 <= d <= h - 2` and a scale whose differences span `Z_h`: a unit
/// step `u` making the scale an arithmetic progression, if one exists.
fn unit_step_progression(s: &Scale) -> Option<u32> {
    let h = s.modulus();
    let d = s.len() as u32;
    let iv = interval_vector(s);
    (1..h)
        .filter(|&u| gcd_u64(u64::from(u), u64::from(h)) == 1)
        .filter(|&u| iv.get(i64::from(u)) == u64::from(d - 1))
        .find(|&u| {
            // exactly one element has no predecessor; walking from it must
            // stay inside the scale
            let mut heads = s.iter().filter(|&x| !s.contains((x + h - u) % h));
            match (heads.next(), heads.next()) {
                (Some(head), None) => (0..d).all(|k| s.contains((head + k * u) % h)),
                _ => false,
            }
        })
}

/// Support of `{seed · ratio^k mod c : 0 <= k < length}`.
pub fn geometric_support(c: u32, ratio: u32, seed: u32, length: u32) -> Result<Scale> {
    if c == 0 || length == 0 {
        return Err(Error::PreconditionViolated("need c >= 1 and length >= 1".into()));
    }
    let c64 = u64::from(c);
    let mut x = u64::from(seed) % c64;
    let mut values = Vec::with_capacity(length as usize);
    for _ in 0..length {
        values.push(x as i64);
        x = x * u64::from(ratio) % c64;
    }
    Ok(Scale::from_residues(c, values))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numtheory::is_totient;

    fn s(text: &str) -> Scale {
        text.parse().unwrap()
    }

    fn spec(c: u32, a: i64, f: i64, d: u32) -> GenSpec {
        GenSpec::new(c, a, f, d).unwrap()
    }

    #[test]
    fn generate_examples() {
        // 0 7 14 21 28 35 42 reduces to 0 7 2 9 4 11 6
        assert_eq!(generate(&spec(12, 0, 7, 7)), s("12:0,2,4,6,7,9,11"));
        assert_eq!(generate(&spec(12, 5, 7, 7)), s("12:0,2,4,5,7,9,11"));
        assert_eq!(generate(&spec(12, 0, 0, 5)), s("12:0"));
        assert_eq!(generate(&spec(14, 0, 2, 7)), s("14:0,2,4,6,8,10,12"));
        assert!(!spec(12, 0, 4, 4).is_injective());
        assert_eq!(generate(&spec(12, 0, 4, 4)).len(), 3);
        assert!(GenSpec::new(12, 0, 1, 13).is_err());
        assert!(GenSpec::new(12, 0, 1, 0).is_err());
    }

    #[test]
    fn enumerate_examples() {
        let major = enumerate_generators(&s("12:0,2,4,5,7,9,11")).unwrap();
        assert_eq!(major.steps(), vec![5, 7]);
        assert_eq!(major.count, 2);
        assert_eq!(major.generators[&7], BTreeSet::from([5]));
        assert_eq!(major.generators[&5], BTreeSet::from([11]));

        let tritone = enumerate_generators(&s("12:0,6")).unwrap();
        assert_eq!(tritone.steps(), vec![6]);

        let r = enumerate_generators(&s("16:0,2,4,6,8,10,12")).unwrap();
        assert_eq!(r.steps(), vec![2, 6, 10, 14]);
        let starts: Vec<Vec<u32>> = r.generators.values().map(|v| v.iter().copied().collect()).collect();
        assert_eq!(starts, vec![vec![0], vec![4], vec![8], vec![12]]);

        assert_eq!(enumerate_generators(&s("12:")), Err(Error::EmptyScale));
    }

    #[test]
    fn one_note_counts_every_step() {
        let r = enumerate_generators(&s("12:4")).unwrap();
        assert_eq!(r.count, 12);
        assert!(r.generators.contains_key(&0));
        let k = classify(&s("12:4")).unwrap();
        assert_eq!(k.kind, ScaleKind::OneNote);
        assert_eq!(k.predicted_count, 12);
    }

    #[test]
    fn classify_examples() {
        let whole_tone = classify(&s("12:0,2,4,6,8,10")).unwrap();
        assert_eq!(whole_tone.kind, ScaleKind::RegularPolygon);
        assert_eq!(whole_tone.predicted_count, 2);
        assert_eq!(whole_tone.m, Some(2));
        assert_eq!(enumerate_generators(&s("12:0,2,4,6,8,10")).unwrap().steps(), vec![2, 10]);

        let odd = classify(&s("10:1,3,5,7")).unwrap();
        assert_eq!(odd.kind, ScaleKind::IncompletePolygon);
        assert_eq!(odd.predicted_count, 4);
        assert_eq!(enumerate_generators(&s("10:1,3,5,7")).unwrap().steps(), vec![2, 4, 6, 8]);

        let ng = classify(&s("12:0,1,3")).unwrap();
        assert_eq!(ng.kind, ScaleKind::NotGenerated);
        assert_eq!(ng.predicted_count, 0);
        assert_eq!(ng.m, None);
        assert_eq!(enumerate_generators(&s("12:0,1,3")).unwrap().count, 0);

        assert_eq!(classify(&s("12:0,6")).unwrap().kind, ScaleKind::Tritone);
        assert_eq!(classify(&s("12:0,2,4,5,7,9,11")).unwrap().kind, ScaleKind::TwoGenerator);
        assert_eq!(classify(&Scale::full(12)).unwrap().kind, ScaleKind::FullAggregate);
        let almost = classify(&s("12:0,1,2,3,4,5,6,7,8,9,10")).unwrap();
        assert_eq!((almost.kind, almost.predicted_count), (ScaleKind::AlmostFull, 4));
        assert_eq!(classify(&s("2:0,1")).unwrap().kind, ScaleKind::FullAggregate);
        assert_eq!(classify(&s("12:")), Err(Error::EmptyScale));
    }

    #[test]
    fn geometric_examples() {
        let target = s("32:1,3,9,11,17,19,25,27");
        for r in [3, 11, 19, 27] {
            assert_eq!(geometric_support(32, r, 1, 8).unwrap(), target);
        }
        assert_eq!(geometric_support(32, 1, 1, 5).unwrap(), s("32:1"));
    }

    /// Every subset of `Z_c` for small `c`: the classifier must agree with
    /// the exhaustive search, including on non-generated scales.
    #[test]
    fn classify_agrees_with_enumeration_on_all_subsets() {
        for c in 1..=13u32 {
            for mask in 1u32..(1 << c) {
                let x = Scale::new(c, (0..c).filter(|i| mask >> i & 1 == 1)).unwrap();
                let k = classify(&x).unwrap();
                let r = enumerate_generators(&x).unwrap();
                assert_eq!(k.predicted_count, r.count as u64, "{x}: {k:?}");
                assert_eq!(k.kind == ScaleKind::NotGenerated, r.count == 0, "{x}");
                if let (Some(m), true) = (k.m, x.len() > 1) {
                    for &f in r.generators.keys() {
                        assert_eq!(gcd_u64(u64::from(c), u64::from(f)) as u32, m, "{x} f={f}");
                    }
                }
            }
        }
    }

    #[test]
    fn generator_structure_on_generated_scales() {
        for c in 2..=24u32 {
            for f in 1..c {
                let order = c / gcd_u64(u64::from(c), u64::from(f)) as u32;
                for d in 2..=order {
                    let x = generate(&spec(c, 0, i64::from(f), d));
                    let r = enumerate_generators(&x).unwrap();
                    assert!(is_totient(r.count as u64), "{x}");
                    assert_ne!(r.count, 14);

                    // closed under negation
                    for &g in r.generators.keys() {
                        assert!(r.generators.contains_key(&((c - g) % c)), "{x} g={g}");
                    }
                    // all steps share gcd with c
                    let gcds: BTreeSet<u64> =
                        r.generators.keys().map(|&g| gcd_u64(u64::from(c), u64::from(g))).collect();
                    assert_eq!(gcds.len(), 1, "{x}");

                    // translation does not change the step set
                    for t in [1, 5, i64::from(c) - 1] {
                        assert_eq!(enumerate_generators(&x.translate(t)).unwrap().steps(), r.steps());
                    }

                    let k = classify(&x).unwrap();
                    match k.kind {
                        ScaleKind::IncompletePolygon => {
                            // one distinct start per step
                            let starts: Vec<&BTreeSet<u32>> = r.generators.values().collect();
                            assert!(starts.iter().all(|v| v.len() == 1), "{x}");
                            let distinct: BTreeSet<u32> =
                                starts.iter().map(|v| *v.iter().next().unwrap()).collect();
                            assert_eq!(distinct.len(), r.count, "{x}");
                        }
                        ScaleKind::RegularPolygon => {
                            assert_eq!(r.count as u64, totient(u64::from(d)));
                            for &g in r.generators.keys() {
                                assert_eq!(c / gcd_u64(u64::from(c), u64::from(g)) as u32, d);
                            }
                        }
                        _ => {}
                    }
                }
            }
        }
    }
}
