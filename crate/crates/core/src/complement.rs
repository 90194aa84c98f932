//! Complementary generated scales: shared generators and translate embedding.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::generation::enumerate_generators;
use crate::scale::Scale;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EmbeddingDirection {
    /// `scale + τ ⊆ complement`
    ScaleIntoComplement,
    /// `complement + τ ⊆ scale`
    ComplementIntoScale,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Embedding {
    pub direction: EmbeddingDirection,
    pub translation: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChopinReport {
    pub scale: Scale,
    pub complement: Scale,
    pub both_generated: bool,
    pub scale_steps: BTreeSet<u32>,
    pub complement_steps: BTreeSet<u32>,
    pub shared_steps: BTreeSet<u32>,
    pub embedding: Option<Embedding>,
}

impl ChopinReport {
    /// The complement property holds, or there is nothing to claim.
    pub fn holds(&self) -> bool {
        !self.both_generated || (!self.shared_steps.is_empty() && self.embedding.is_some())
    }
}

/// Smallest `τ` with `small + τ ⊆ large`.
fn smallest_embedding(small: &Scale, large: &Scale) -> Option<u32> {
    (0..small.modulus()).find(|&t| small.iter().all(|x| large.contains(x + t)))
}

/// Generator steps of a scale and of its complement, and how one embeds into
/// the other. Needs `2 <= |a| <= c - 2`.
pub fn chopin_check(a: &Scale) -> Result<ChopinReport> {
    let c = a.modulus();
    let size = a.len();
    if size < 2 || size + 2 > c as usize {
        return Err(Error::TrivialScale { size, c });
    }
    let b = a.complement();
    let scale_steps: BTreeSet<u32> = enumerate_generators(a)?.generators.into_keys().collect();
    let complement_steps: BTreeSet<u32> = enumerate_generators(&b)?.generators.into_keys().collect();
    let both_generated = !scale_steps.is_empty() && !complement_steps.is_empty();

    let (shared_steps, embedding) = if both_generated {
        let shared = scale_steps.intersection(&complement_steps).copied().collect();
        // the smaller side embeds into the larger; equal sizes try a → b first
        let embedding = if a.len() <= b.len() {
            smallest_embedding(a, &b).map(|t| Embedding {
                direction: EmbeddingDirection::ScaleIntoComplement,
                translation: t,
            })
        } else {
            None
        }
        .or_else(|| {
            smallest_embedding(&b, a).map(|t| Embedding {
                direction: EmbeddingDirection::ComplementIntoScale,
                translation: t,
            })
        });
        (shared, embedding)
    } else {
        (BTreeSet::new(), None)
    };

    Ok(ChopinReport {
        scale: a.clone(),
        complement: b,
        both_generated,
        scale_steps,
        complement_steps,
        shared_steps,
        embedding,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(text: &str) -> Scale {
        text.parse().unwrap()
    }

    #[test]
    fn four_note_example() {
        let r = chopin_check(&s("12:0,2,5,7")).unwrap();
        assert!(r.both_generated);
        assert_eq!(r.complement, s("12:1,3,4,6,8,9,10,11"));
        assert_eq!(r.shared_steps, BTreeSet::from([5, 7]));
        let e = r.embedding.unwrap();
        assert_eq!(e.direction, EmbeddingDirection::ScaleIntoComplement);
        assert!(s("12:0,2,5,7").translate(i64::from(e.translation)).is_subset(&r.complement));
        assert!(r.holds());
    }

    #[test]
    fn whole_tone_halves() {
        let r = chopin_check(&s("12:0,2,4,6,8,10")).unwrap();
        assert_eq!(r.complement, s("12:1,3,5,7,9,11"));
        assert_eq!(
            r.embedding,
            Some(Embedding { direction: EmbeddingDirection::ScaleIntoComplement, translation: 1 })
        );
        assert_eq!(r.shared_steps, BTreeSet::from([2, 10]));

        let small = chopin_check(&s("4:0,2")).unwrap();
        assert_eq!(small.embedding.unwrap().translation, 1);
    }

    #[test]
    fn non_generated_makes_no_claim() {
        let r = chopin_check(&s("12:0,1,3")).unwrap();
        assert!(!r.both_generated);
        assert!(r.scale_steps.is_empty());
        assert!(r.complement_steps.is_empty());
        assert!(r.embedding.is_none());
        assert!(r.holds());
    }

    #[test]
    fn pentatonic_and_its_complement() {
        let r = chopin_check(&s("12:0,2,4,7,9")).unwrap();
        assert_eq!(r.scale_steps, BTreeSet::from([5, 7]));
        assert_eq!(r.complement_steps, BTreeSet::from([5, 7]));
        let e = r.embedding.unwrap();
        assert_eq!(e.direction, EmbeddingDirection::ScaleIntoComplement);
    }

    #[test]
    fn trivial_sizes_rejected() {
        for bad in ["12:0", "12:0,1,2,3,4,5,6,7,8,9,10", "3:0,1", "12:"] {
            assert!(matches!(chopin_check(&s(bad)), Err(Error::TrivialScale { .. })), "{bad}");
        }
    }
}
