//! Error distance, covering radius, and the deep holes of duals of (+)-TGRS
//! codes coming from the second-extension description of the extended code.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::code::{weight, LinearCode, DEFAULT_ENUMERATION_CAP};
use crate::error::{Error, Result};
use crate::field::{Elem, Field};
use crate::twisted::{divide, tgrs, w_vector, TwistedSpec};

/// Largest syndrome space the coset-leader table will allocate.
pub const DEFAULT_SYNDROME_CAP: u128 = 1_000_000;

/// `min_{c in C} d(u, c)` by enumerating the codewords.
pub fn error_distance(u: &[Elem], c: &LinearCode) -> Result<usize> {
    error_distance_with_cap(u, c, DEFAULT_ENUMERATION_CAP)
}

pub fn error_distance_with_cap(u: &[Elem], c: &LinearCode, cap: u128) -> Result<usize> {
    if u.len() != c.n() {
        return Err(Error::LengthMismatch(u.len(), c.n()));
    }
    let mut best = weight(u);
    c.for_each_codeword(cap, |w| {
        let d = u.iter().zip(w).filter(|(a, b)| a != b).count();
        best = best.min(d);
        best > 0
    })?;
    Ok(best)
}

/// Minimum weight of every coset of a code, indexed by syndrome. Built by a
/// breadth-first search from the zero syndrome, so each coset is labelled
/// with the weight at which it is first reached.
pub struct CosetLeaders {
    code: LinearCode,
    q: u64,
    weights: Vec<u8>,
    radius: usize,
}

const UNSEEN: u8 = u8::MAX;

impl CosetLeaders {
    pub fn new(c: &LinearCode) -> Result<CosetLeaders> {
        Self::with_cap(c, DEFAULT_SYNDROME_CAP)
    }

    pub fn with_cap(c: &LinearCode, cap: u128) -> Result<CosetLeaders> {
        let f = c.field();
        let q = f.order() as u64;
        let r = c.n() - c.k();
        let cosets = (q as u128).saturating_pow(r as u32);
        if cosets > cap {
            return Err(Error::EnumerationCapExceeded { needed: cosets, cap });
        }
        let h = c.parity_check();
        // every nonzero multiple of every column, as a syndrome vector
        let steps: Vec<Vec<Elem>> = (0..c.n())
            .flat_map(|j| {
                let col = h.column(j);
                f.elements()
                    .into_iter()
                    .skip(1)
                    .map(move |a| col.iter().map(|&x| f.mul(a, x)).collect::<Vec<_>>())
            })
            .collect();
        let mut weights = vec![UNSEEN; cosets as usize];
        weights[0] = 0;
        let mut layer = vec![vec![Elem::ZERO; r]];
        let mut radius = 0;
        let mut seen = 1usize;
        while seen < weights.len() {
            let mut next = Vec::new();
            for s in &layer {
                for step in &steps {
                    let t: Vec<Elem> = s.iter().zip(step).map(|(&a, &b)| f.add(a, b)).collect();
                    let idx = index(q, &t);
                    if weights[idx] == UNSEEN {
                        weights[idx] = (radius + 1) as u8;
                        seen += 1;
                        next.push(t);
                    }
                }
            }
            if next.is_empty() {
                break;
            }
            radius += 1;
            layer = next;
        }
        Ok(CosetLeaders {
            code: c.clone(),
            q,
            weights,
            radius,
        })
    }

    /// The covering radius: the largest coset-leader weight.
    pub fn radius(&self) -> usize {
        self.radius
    }

    /// Error distance of `y`, read off its syndrome.
    pub fn distance(&self, y: &[Elem]) -> Result<usize> {
        let s = self.code.syndrome(y)?;
        Ok(self.weights[index(self.q, &s)] as usize)
    }

    pub fn is_deep_hole(&self, y: &[Elem]) -> Result<bool> {
        Ok(self.distance(y)? == self.radius)
    }
}

fn index(q: u64, s: &[Elem]) -> usize {
    s.iter().rev().fold(0usize, |acc, a| acc * q as usize + a.value() as usize)
}

pub fn covering_radius(c: &LinearCode) -> Result<usize> {
    Ok(CosetLeaders::new(c)?.radius())
}

pub fn covering_radius_with_cap(c: &LinearCode, cap: u128) -> Result<usize> {
    Ok(CosetLeaders::with_cap(c, cap)?.radius())
}

/// Whether the error distance of `u` equals the covering radius. The distance
/// is computed by codeword enumeration, the radius from the coset table.
pub fn is_deep_hole(u: &[Elem], c: &LinearCode) -> Result<bool> {
    Ok(error_distance(u, c)? == covering_radius(c)?)
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum DeepHoleClass {
    /// Exponent `n - k - 1`, scale `eta^{-1}`.
    One,
    /// Exponent `n - k`, scale `(1 + eta sum(S))^{-1}`.
    Two,
}

impl DeepHoleClass {
    pub fn from_number(c: u8) -> Option<DeepHoleClass> {
        match c {
            1 => Some(DeepHoleClass::One),
            2 => Some(DeepHoleClass::Two),
            _ => None,
        }
    }

    pub fn number(self) -> u8 {
        match self {
            DeepHoleClass::One => 1,
            DeepHoleClass::Two => 2,
        }
    }
}

impl fmt::Display for DeepHoleClass {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(out, "class {}", self.number())
    }
}

/// The vector `u_i = s a_i^t w_i / v_i` with its exponent and scale.
#[derive(Clone, Debug)]
pub struct DeepHoleSpec {
    pub base: TwistedSpec,
    pub class: DeepHoleClass,
    pub t: usize,
    pub s: Elem,
    pub u: Vec<Elem>,
}

impl DeepHoleSpec {
    /// The `extended` flag of `spec` is ignored; the vector lives on the
    /// non-extended code.
    pub fn new(spec: &TwistedSpec, class: DeepHoleClass) -> Result<DeepHoleSpec> {
        let base = spec.as_extended(false);
        base.validate()?;
        let f = &base.field;
        let r = base.n() - base.k;
        let (t, s) = match class {
            DeepHoleClass::One => (r - 1, f.inv(base.eta)?),
            DeepHoleClass::Two => {
                let denom = f.mul_add(Elem::ONE, base.eta, base.sum_of_points());
                if denom.is_zero() {
                    return Err(Error::Class2Unavailable);
                }
                (r, f.inv(denom)?)
            }
        };
        let u = hole_vector(f, &base, t, s)?;
        Ok(DeepHoleSpec {
            base,
            class,
            t,
            s,
            u,
        })
    }
}

fn hole_vector(f: &Field, spec: &TwistedSpec, t: usize, s: Elem) -> Result<Vec<Elem>> {
    let wv = divide(f, &w_vector(f, &spec.points)?, &spec.v)?;
    Ok(spec
        .points
        .iter()
        .zip(&wv)
        .map(|(&a, &x)| f.mul(s, f.mul(f.pow_u(a, t as u64), x)))
        .collect())
}

pub fn deep_hole_vector(spec: &TwistedSpec, class: DeepHoleClass) -> Result<Vec<Elem>> {
    Ok(DeepHoleSpec::new(spec, class)?.u)
}

/// `TGRS` extended by the coordinate `sum u_i c_i`; this is the extended
/// twisted code for either class.
pub fn second_extension_of_tgrs(spec: &TwistedSpec, class: DeepHoleClass) -> Result<LinearCode> {
    let hole = DeepHoleSpec::new(spec, class)?;
    tgrs(&hole.base)?.second_extend(&hole.u)
}
