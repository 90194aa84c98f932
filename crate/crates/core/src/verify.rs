//! Exhaustive verification sweeps at small moduli.
//!
//! Each sweep walks the generated scales `generate(c, 0, f, d)` for every
//! `c`, every step `f` and every length up to the order of `f`. Starting
//! points are pinned to 0: generator steps are translation invariant, and
//! that invariance is tested separately. Sweeps run in parallel over `c` and
//! rows are sorted by `(c, d, f)` afterwards, so output is deterministic.

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::complement::chopin_check;
use crate::dft::{dft, recover_generators_via_dft, seminorm_of, DEFAULT_TOLERANCE};
use crate::error::{Error, Result};
use crate::generation::{classify, enumerate_generators, generate, GenSpec, ScaleKind};
use crate::numtheory::{additive_order, gcd_u64, totient, totient_witness};
use crate::scale::Scale;

/// Largest subset sweep `verify_dft_maximality` will attempt.
pub const MAX_SWEEP: u128 = 2_000_000;

/// One checked case; serialized as one JSON line.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Row {
    pub c: u32,
    pub d: u32,
    pub f: u32,
    pub kind: String,
    pub predicted: u64,
    pub actual: u64,
    pub ok: bool,
    /// `n` with `Φ(n)` equal to the generator count (totient sweep only).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub scale: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub summary: String,
    pub cases: usize,
    pub violations: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub check: &'static str,
    pub rows: Vec<Row>,
}

impl Report {
    fn new(check: &'static str, mut rows: Vec<Row>) -> Self {
        rows.sort_by(|a, b| {
            (a.c, a.d, a.f, &a.scale).cmp(&(b.c, b.d, b.f, &b.scale))
        });
        Report { check, rows }
    }

    pub fn violations(&self) -> impl Iterator<Item = &Row> {
        self.rows.iter().filter(|r| !r.ok)
    }

    pub fn violation_count(&self) -> usize {
        self.violations().count()
    }

    pub fn summary(&self) -> Summary {
        Summary {
            summary: self.check.to_string(),
            cases: self.rows.len(),
            violations: self.violation_count(),
        }
    }

    /// All rows followed by the summary trailer, one JSON object per line.
    pub fn to_json_lines(&self) -> String {
        let mut out = String::new();
        for row in &self.rows {
            out.push_str(&serde_json::to_string(row).expect("rows serialize"));
            out.push('\n');
        }
        out.push_str(&serde_json::to_string(&self.summary()).expect("summary serializes"));
        out.push('\n');
        out
    }

    pub fn find(&self, c: u32, d: u32, f: u32) -> Option<&Row> {
        self.rows.iter().find(|r| (r.c, r.d, r.f) == (c, d, f))
    }
}

/// Every `(c, f, d)` with `2 <= c <= c_max`, `1 <= f < c`, `2 <= d <= ord(f)`
/// and `d` inside `lengths`.
fn generated_cases(c_max: u32, lengths: impl Fn(u32) -> (u32, u32) + Sync) -> Vec<(u32, u32, u32)> {
    (2..=c_max)
        .into_par_iter()
        .flat_map_iter(|c| {
            let (lo, hi) = lengths(c);
            (1..c).flat_map(move |f| {
                let order = additive_order(u64::from(f), u64::from(c)) as u32;
                (lo.max(2)..=hi.min(order)).map(move |d| (c, f, d))
            })
        })
        .collect()
}

fn scale_of(c: u32, f: u32, d: u32) -> Scale {
    generate(&GenSpec::new(c, 0, i64::from(f), d).expect("length within order"))
}

fn need_cmax(c_max: u32, min: u32) -> Result<()> {
    if c_max < min {
        return Err(Error::PreconditionViolated(format!("c_max must be >= {min}")));
    }
    Ok(())
}

/// Generator counts of generated scales are always values of Φ.
pub fn verify_totient_theorem(c_max: u32) -> Result<Report> {
    need_cmax(c_max, 2)?;
    let rows = generated_cases(c_max, |c| (2, c))
        .into_par_iter()
        .map(|(c, f, d)| {
            let s = scale_of(c, f, d);
            let count = enumerate_generators(&s).expect("non-empty").count as u64;
            let witness = totient_witness(count);
            let kind = classify(&s).expect("non-empty").kind;
            Row {
                c,
                d,
                f,
                kind: kind.name().to_string(),
                predicted: witness.map_or(0, totient),
                actual: count,
                ok: witness.is_some() && count != 14,
                witness,
                scale: None,
            }
        })
        .collect();
    Ok(Report::new("totient", rows))
}

/// The structural classifier against brute-force enumeration, plus the
/// unit-step split: two generators for `1 < d < c - 1`, `Φ(c)` at the top.
pub fn verify_classification(c_max: u32) -> Result<Report> {
    need_cmax(c_max, 2)?;
    let rows = generated_cases(c_max, |c| (2, c))
        .into_par_iter()
        .map(|(c, f, d)| {
            let s = scale_of(c, f, d);
            let k = classify(&s).expect("non-empty");
            let report = enumerate_generators(&s).expect("non-empty");
            let actual = report.count as u64;

            let mut ok = k.kind != ScaleKind::NotGenerated && k.predicted_count == actual;
            if gcd_u64(u64::from(f), u64::from(c)) == 1 {
                ok &= if d + 1 >= c {
                    actual == totient(u64::from(c))
                } else {
                    actual == 2
                };
            }
            let gcds: BTreeSet<u64> = report
                .generators
                .keys()
                .map(|&g| gcd_u64(u64::from(g), u64::from(c)))
                .collect();
            ok &= gcds.len() == 1 && k.m.map(u64::from) == gcds.first().copied();

            Row {
                c,
                d,
                f,
                kind: k.kind.name().to_string(),
                predicted: k.predicted_count,
                actual,
                ok,
                witness: None,
                scale: None,
            }
        })
        .collect();
    Ok(Report::new("classification", rows))
}

/// Complementary generated scales share a step and one embeds in the other.
///
/// Only scales whose complement is generated too produce a row; `predicted`
/// is the number of steps of the scale, `actual` the number shared with the
/// complement.
pub fn verify_chopin(c_max: u32) -> Result<Report> {
    need_cmax(c_max, 4)?;
    let rows = generated_cases(c_max, |c| (2, c.saturating_sub(2)))
        .into_par_iter()
        .filter_map(|(c, f, d)| {
            let s = scale_of(c, f, d);
            let report = chopin_check(&s).expect("size checked by the sweep bounds");
            report.both_generated.then(|| Row {
                c,
                d,
                f,
                kind: classify(&s).expect("non-empty").kind.name().to_string(),
                predicted: report.scale_steps.len() as u64,
                actual: report.shared_steps.len() as u64,
                ok: report.holds(),
                witness: None,
                scale: Some(s.to_string()),
            })
        })
        .collect();
    Ok(Report::new("chopin", rows))
}

fn binomial(n: u32, k: u32) -> u128 {
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * u128::from(n - i) / u128::from(i + 1))
}

/// Subsets of `0..n` with `k` elements as bitmasks, in increasing order.
fn k_subsets(n: u32, k: u32) -> impl Iterator<Item = u64> {
    let limit = 1u64 << n;
    let first = if k == 0 { 0 } else { (1u64 << k) - 1 };
    std::iter::successors(Some(first), move |&x| {
        if x == 0 {
            return None;
        }
        // next bit pattern with the same popcount
        let low = x & x.wrapping_neg();
        let ripple = x + low;
        let next = (((ripple ^ x) >> 2) / low) | ripple;
        (next < limit).then_some(next)
    })
}

/// Full sweep over the `d`-subsets of `Z_c`: the coprime seminorm is maximal
/// exactly on scales generated by a unit step, and on those the DFT
/// recovers the brute-force generator steps.
///
/// Rows cover the subsets that are maximizers or unit-generated;
/// `predicted` is 1 for a maximizer, `actual` is 1 for a unit-generated
/// scale, and `f` is its smallest unit step.
pub fn verify_dft_maximality(c: u32, d: u32) -> Result<Report> {
    if !(2..=63).contains(&c) || d == 0 || d >= c {
        return Err(Error::PreconditionViolated(format!(
            "need 2 <= c <= 63 and 1 <= d < c, got c = {c}, d = {d}"
        )));
    }
    if gcd_u64(u64::from(c), u64::from(d)) != 1 {
        return Err(Error::HypothesisViolated(format!("gcd({c}, {d}) != 1")));
    }
    let count = binomial(c, d);
    if count > MAX_SWEEP {
        return Err(Error::SweepTooLarge { c, d, count, limit: MAX_SWEEP });
    }

    let scored: Vec<(Scale, f64)> = k_subsets(c, d)
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|mask| {
            let s = Scale::new(c, (0..c).filter(|i| mask >> i & 1 == 1)).expect("valid mask");
            let value = seminorm_of(&dft(&s), s.len(), DEFAULT_TOLERANCE).value;
            (s, value)
        })
        .collect();
    let best = scored.iter().map(|(_, v)| *v).fold(0.0, f64::max);
    let slack = DEFAULT_TOLERANCE * f64::from(d);

    let rows = scored
        .into_par_iter()
        .filter_map(|(s, value)| {
            let is_max = value >= best - slack;
            let report = enumerate_generators(&s).expect("d >= 1");
            let unit_steps: Vec<u32> = report
                .generators
                .keys()
                .copied()
                .filter(|&g| gcd_u64(u64::from(g), u64::from(c)) == 1)
                .collect();
            let unit_generated = !unit_steps.is_empty();
            if !is_max && !unit_generated {
                return None;
            }
            let mut ok = is_max == unit_generated;
            if unit_generated && d > 1 && d + 1 < c {
                let recovered = recover_generators_via_dft(&s).expect("hypotheses checked");
                ok &= recovered == report.generators.keys().copied().collect();
            }
            Some(Row {
                c,
                d,
                f: unit_steps.first().copied().unwrap_or(0),
                kind: classify(&s).expect("d >= 1").kind.name().to_string(),
                predicted: u64::from(is_max),
                actual: u64::from(unit_generated),
                ok,
                witness: None,
                scale: Some(s.to_string()),
            })
        })
        .collect();
    Ok(Report::new("dft", rows))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subset_enumeration() {
        for (n, k) in [(5, 0), (5, 2), (12, 5), (12, 7), (6, 6)] {
            let all: Vec<u64> = k_subsets(n, k).collect();
            assert_eq!(all.len() as u128, binomial(n, k), "n={n} k={k}");
            assert!(all.iter().all(|m| m.count_ones() == k));
            assert!(all.windows(2).all(|w| w[0] < w[1]));
        }
    }

    #[test]
    fn tiny_totient_sweep() {
        let r = verify_totient_theorem(2).unwrap();
        assert_eq!(r.rows.len(), 1);
        let row = &r.rows[0];
        assert_eq!((row.c, row.d, row.f, row.actual), (2, 2, 1, 1));
        assert_eq!(row.kind, "FullAggregate");
        assert!(verify_totient_theorem(1).is_err());
    }

    #[test]
    fn sixteen_has_the_four_generator_row() {
        let r = verify_totient_theorem(16).unwrap();
        assert_eq!(r.violation_count(), 0);
        let row = r.find(16, 7, 2).unwrap();
        assert_eq!((row.actual, row.witness), (4, Some(5)));
        assert_eq!(row.predicted, 4);
        // whole-tone scale of Z_14
        assert_eq!(verify_totient_theorem(14).unwrap().find(14, 7, 2).unwrap().actual, 6);
    }

    #[test]
    fn json_lines_are_stable() {
        let a = verify_classification(10).unwrap().to_json_lines();
        let b = verify_classification(10).unwrap().to_json_lines();
        assert_eq!(a, b);
        let lines: Vec<&str> = a.lines().collect();
        let first: serde_json::Value = serde_json::from_str(lines[0]).unwrap();
        for key in ["c", "d", "f", "kind", "predicted", "actual", "ok"] {
            assert!(first.get(key).is_some(), "missing {key}");
        }
        let last: Summary = serde_json::from_str(lines.last().unwrap()).unwrap();
        assert_eq!(last.violations, 0);
        assert_eq!(last.cases, lines.len() - 1);
    }

    #[test]
    fn classification_rows() {
        let r = verify_classification(12).unwrap();
        assert_eq!(r.violation_count(), 0);
        let major = r.find(12, 7, 7).unwrap();
        assert_eq!((major.kind.as_str(), major.actual), ("TwoGenerator", 2));
        let almost = r.find(12, 11, 1).unwrap();
        assert_eq!((almost.kind.as_str(), almost.actual), ("AlmostFull", 4));
        let r10 = verify_classification(10).unwrap();
        let odd = r10.find(10, 4, 2).unwrap();
        assert_eq!((odd.kind.as_str(), odd.actual), ("IncompletePolygon", 4));
    }

    #[test]
    fn chopin_small() {
        let r = verify_chopin(4).unwrap();
        assert_eq!(r.violation_count(), 0);
        let row = r.find(4, 2, 2).unwrap();
        assert_eq!(row.scale.as_deref(), Some("4:0,2"));
        assert!(verify_chopin(3).is_err());

        let r12 = verify_chopin(12).unwrap();
        assert_eq!(r12.violation_count(), 0);
        // {0, 7, 2, 9} is {0, 2, 5, 7} shifted
        assert!(r12.find(12, 4, 7).unwrap().ok);
    }

    #[test]
    fn dft_sweep_preconditions() {
        assert!(matches!(verify_dft_maximality(12, 4), Err(Error::HypothesisViolated(_))));
        assert!(matches!(verify_dft_maximality(40, 19), Err(Error::SweepTooLarge { .. })));
        assert!(verify_dft_maximality(12, 12).is_err());
    }

    #[test]
    fn dft_sweep_almost_full_edge() {
        let r = verify_dft_maximality(6, 5).unwrap();
        assert_eq!(r.rows.len(), 6);
        assert_eq!(r.violation_count(), 0);
        assert!(r.rows.iter().all(|row| row.predicted == 1 && row.actual == 1));
    }
}
