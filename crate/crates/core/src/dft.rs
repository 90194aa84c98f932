//! Discrete Fourier transform of scales and DFT-based generator recovery.

use std::collections::BTreeSet;
use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numtheory::{gcd_u64, mod_inverse};
use crate::scale::Scale;

/// Default relative tolerance for magnitude ties.
pub const DEFAULT_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    pub c: u32,
    pub coeffs: Vec<Complex64>,
    pub magnitudes: Vec<f64>,
}

impl Spectrum {
    /// Coefficients as `[re, im]` pairs, ready for JSON.
    pub fn pairs(&self) -> Vec<[f64; 2]> {
        self.coeffs.iter().map(|z| [z.re, z.im]).collect()
    }
}

impl Serialize for Spectrum {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = serializer.serialize_struct("Spectrum", 3)?;
        st.serialize_field("c", &self.c)?;
        st.serialize_field("coeffs", &self.pairs())?;
        st.serialize_field("magnitudes", &self.magnitudes)?;
        st.end()
    }
}

/// `F(t) = Σ_{k ∈ s} exp(-2iπ k t / c)` for every `t` in `0..c`.
pub fn dft(s: &Scale) -> Spectrum {
    let c = s.modulus();
    let coeffs: Vec<Complex64> = (0..c)
        .map(|t| {
            s.iter()
                .map(|k| {
                    // reduce k·t first so the angle stays in [0, 2π)
                    let r = (u64::from(k) * u64::from(t) % u64::from(c)) as f64;
                    Complex64::from_polar(1.0, -2.0 * PI * r / f64::from(c))
                })
                .sum()
        })
        .collect();
    let magnitudes = coeffs.iter().map(|z| z.norm()).collect();
    Spectrum { c, coeffs, magnitudes }
}

/// `|F(t)|` for the `d`-term progression of step `f`, in closed form:
/// `|sin(π d t f / c)| / |sin(π t f / c)|`, or `d` when `t·f ≡ 0 (mod c)`.
/// For `d >= 2` the value reaches `d` only in that degenerate case.
pub fn closed_form_magnitude(c: u32, f: u32, d: u32, t: u32) -> f64 {
    let c64 = u64::from(c);
    let tf = u64::from(t) * u64::from(f) % c64;
    if tf == 0 {
        return f64::from(d);
    }
    let num = (PI * (u64::from(d) * tf % c64) as f64 / c as f64).sin().abs();
    let den = (PI * tf as f64 / c as f64).sin().abs();
    num / den
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Seminorm {
    pub value: f64,
    /// Indices coprime with `c` attaining the maximum.
    pub argmax: BTreeSet<u32>,
}

/// Largest `|F(t)|` over `t` coprime with `c`.
pub fn seminorm(s: &Scale) -> Result<Seminorm> {
    seminorm_with_tolerance(s, DEFAULT_TOLERANCE)
}

/// As [`seminorm`]; indices within `tolerance · max(|s|, 1)` of the maximum
/// count as ties.
pub fn seminorm_with_tolerance(s: &Scale, tolerance: f64) -> Result<Seminorm> {
    let c = s.modulus();
    if c < 2 {
        return Err(Error::PreconditionViolated("seminorm needs c >= 2".into()));
    }
    let spectrum = dft(s);
    Ok(seminorm_of(&spectrum, s.len(), tolerance))
}

pub(crate) fn seminorm_of(spectrum: &Spectrum, d: usize, tolerance: f64) -> Seminorm {
    let c = spectrum.c;
    let units: Vec<u32> = (1..c).filter(|&t| gcd_u64(u64::from(t), u64::from(c)) == 1).collect();
    let value = units
        .iter()
        .map(|&t| spectrum.magnitudes[t as usize])
        .fold(0.0, f64::max);
    let slack = tolerance * (d.max(1) as f64);
    let argmax = units
        .into_iter()
        .filter(|&t| spectrum.magnitudes[t as usize] >= value - slack)
        .collect();
    Seminorm { value, argmax }
}

/// Steps `±t⁻¹` for every `t` maximizing the coprime seminorm.
///
/// Only meaningful for `gcd(c, d) = 1` and `1 < d < c - 1`. The result is a
/// claim, not a certificate: if the scale is not generated by a unit step the
/// returned steps will not generate it.
pub fn recover_generators_via_dft(s: &Scale) -> Result<BTreeSet<u32>> {
    let c = s.modulus();
    let d = s.len() as u32;
    if gcd_u64(u64::from(c), u64::from(d)) != 1 || d <= 1 || d + 1 >= c {
        return Err(Error::HypothesisViolated(format!(
            "DFT recovery needs gcd(c, d) = 1 and 1 < d < c - 1, got c = {c}, d = {d}"
        )));
    }
    let norm = seminorm(s)?;
    let mut steps = BTreeSet::new();
    for t in norm.argmax {
        let inv = mod_inverse(u64::from(t), u64::from(c))? as u32;
        steps.insert(inv);
        steps.insert((c - inv) % c);
    }
    Ok(steps)
}
