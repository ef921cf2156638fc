//! Error-correcting pairs for (+)-ETGRS codes and the decoder built on them.
//!
//! For a received word `y` the decoder finds a nonzero `a` in the pair's code
//! A with `sum_l b_l a_l y_l = 0` for every `b` in B. The zeros of `a` cover
//! the error positions, and a restricted syndrome solve recovers the values.

use serde::Serialize;

use crate::code::{weight, LinearCode};
use crate::error::{Error, Result};
use crate::field::Elem;
use crate::matrix::{FMatrix, Solution};
use crate::twisted::{divide, egrs_generator, etgrs, etgrs_parity_check, grs_generator, w_vector, TwistedSpec};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Odd,
    Even,
}

/// Auxiliary codes `(A, B)` correcting up to `t` errors in the extended code.
#[derive(Clone, Debug)]
pub struct EcpPair {
    pub a: LinearCode,
    pub b: LinearCode,
    pub t: usize,
    pub parity: Parity,
}

/// Outcome of checking the four pair conditions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct EcpReport {
    /// `A * B` lies in the dual of C.
    pub product_in_dual: bool,
    /// `d(B^perp) > t`.
    pub dual_distance_of_b: bool,
    /// `dim A > t`.
    pub dimension_of_a: bool,
    /// `d(A) + d(C) > length`.
    pub distance_sum: bool,
}

impl EcpReport {
    pub fn all(&self) -> bool {
        self.product_in_dual && self.dual_distance_of_b && self.dimension_of_a && self.distance_sum
    }

    pub fn as_array(&self) -> [bool; 4] {
        [
            self.product_in_dual,
            self.dual_distance_of_b,
            self.dimension_of_a,
            self.distance_sum,
        ]
    }
}

fn pair_generators(spec: &TwistedSpec) -> Result<(FMatrix, FMatrix, usize, Parity)> {
    if !spec.extended {
        return Err(Error::InvalidSpec(
            "error-correcting pairs are built for the extended code".into(),
        ));
    }
    spec.validate()?;
    let f = &spec.field;
    let n = spec.n();
    let r = n - spec.k;
    let ones = vec![Elem::ONE; n];
    let wv = divide(f, &w_vector(f, &spec.points)?, &spec.v)?;
    if r % 2 == 1 {
        let ga = grs_generator(f, &spec.points, &ones, (r + 1) / 2)?
            .append_column(&vec![Elem::ZERO; (r + 1) / 2])?;
        let gb = egrs_generator(f, &spec.points, &wv, (r - 1) / 2)?;
        Ok((ga, gb, (r - 1) / 2, Parity::Odd))
    } else {
        let ga = egrs_generator(f, &spec.points, &ones, (r + 2) / 2)?;
        let mut gb = egrs_generator(f, &spec.points, &wv, r / 2)?;
        gb.set(r / 2 - 1, n, f.neg(spec.eta));
        Ok((ga, gb, r / 2, Parity::Even))
    }
}

/// The pair for the extended code: `t = (n-k-1)/2` when `n - k` is odd and
/// `t = (n-k)/2` when it is even.
pub fn build_ecp(spec: &TwistedSpec) -> Result<EcpPair> {
    let (ga, gb, t, parity) = pair_generators(spec)?;
    Ok(EcpPair {
        a: LinearCode::from_generator(ga)?,
        b: LinearCode::from_generator(gb)?,
        t,
        parity,
    })
}

pub fn verify_ecp(a: &LinearCode, b: &LinearCode, c: &LinearCode, t: usize) -> Result<EcpReport> {
    a.check_compatible(b)?;
    a.check_compatible(c)?;
    let product_in_dual = a.schur_product(b)?.is_subcode_of(&c.euclidean_dual())?;
    let dual_distance_of_b = b.euclidean_dual().min_distance()? > t;
    let dimension_of_a = a.k() > t;
    let distance_sum = a.min_distance()? + c.min_distance()? > c.n();
    Ok(EcpReport {
        product_in_dual,
        dual_distance_of_b,
        dimension_of_a,
        distance_sum,
    })
}

/// Checks the pair against the extended code of `spec`.
pub fn verify_pair_for(spec: &TwistedSpec, pair: &EcpPair) -> Result<EcpReport> {
    verify_ecp(&pair.a, &pair.b, &etgrs(spec)?, pair.t)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DecodeOutcome {
    Codeword { codeword: Vec<Elem>, error: Vec<Elem> },
    AlreadyCodeword,
    TooManyErrors,
}

impl DecodeOutcome {
    pub fn tag(&self) -> &'static str {
        match self {
            DecodeOutcome::Codeword { .. } => "CODEWORD",
            DecodeOutcome::AlreadyCodeword => "ALREADY_CODEWORD",
            DecodeOutcome::TooManyErrors => "TOO_MANY_ERRORS",
        }
    }
}

/// Intermediate values of one decoding run. Positions in `zero_set` are
/// 1-indexed; the remaining fields stay empty past the step that ended the run.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DecodeTrace {
    pub t: usize,
    pub syndrome: Vec<Elem>,
    pub kernel_basis: Vec<Vec<Elem>>,
    pub u_prime: Vec<Elem>,
    pub locator: Vec<Elem>,
    pub zero_set: Vec<usize>,
    pub error: Vec<Elem>,
    pub codeword: Vec<Elem>,
}

/// Precomputed matrices for decoding many words of one extended code.
#[derive(Clone, Debug)]
pub struct EcpDecoder {
    spec: TwistedSpec,
    h: FMatrix,
    ga: FMatrix,
    gb: FMatrix,
    t: usize,
    parity: Parity,
}

impl EcpDecoder {
    pub fn new(spec: &TwistedSpec) -> Result<EcpDecoder> {
        let (ga, gb, t, parity) = pair_generators(spec)?;
        Ok(EcpDecoder {
            spec: spec.clone(),
            h: etgrs_parity_check(spec)?,
            ga,
            gb,
            t,
            parity,
        })
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    pub fn parity_check(&self) -> &FMatrix {
        &self.h
    }

    pub fn generator_a(&self) -> &FMatrix {
        &self.ga
    }

    pub fn generator_b(&self) -> &FMatrix {
        &self.gb
    }

    pub fn spec(&self) -> &TwistedSpec {
        &self.spec
    }

    pub fn decode(&self, y: &[Elem]) -> Result<DecodeOutcome> {
        Ok(self.decode_traced(y)?.0)
    }

    pub fn decode_traced(&self, y: &[Elem]) -> Result<(DecodeOutcome, DecodeTrace)> {
        let f = &self.spec.field;
        let len = self.h.cols();
        if y.len() != len {
            return Err(Error::LengthMismatch(y.len(), len));
        }
        if let Some(bad) = y.iter().find(|&&a| !f.contains(a)) {
            return Err(Error::ValueOutOfField(format!("{}", bad.value())));
        }
        let mut trace = DecodeTrace {
            t: self.t,
            syndrome: self.h.mul_vec(y)?,
            ..DecodeTrace::default()
        };
        if trace.syndrome.iter().all(|a| a.is_zero()) {
            trace.codeword = y.to_vec();
            trace.error = vec![Elem::ZERO; len];
            return Ok((DecodeOutcome::AlreadyCodeword, trace));
        }

        // M = G_B diag(y) G_A^T
        let m = FMatrix::from_fn(f, self.gb.rows(), self.ga.rows(), |i, j| {
            let (b, a) = (self.gb.row(i), self.ga.row(j));
            (0..len).fold(Elem::ZERO, |s, l| f.mul_add(s, f.mul(b[l], y[l]), a[l]))
        });
        trace.kernel_basis = m.null_space().into_iter().map(|u| normalize(f, u)).collect();
        let Some(u) = trace.kernel_basis.first().cloned() else {
            return Ok((DecodeOutcome::TooManyErrors, trace));
        };
        trace.locator = self.ga.vec_mul(&u)?;
        trace.u_prime = u;
        let zeros: Vec<usize> = (0..len).filter(|&j| trace.locator[j].is_zero()).collect();
        trace.zero_set = zeros.iter().map(|j| j + 1).collect();

        let restricted = self.h.select_columns(&zeros);
        let x = match restricted.solve_right(&trace.syndrome)? {
            Solution::Unique(x) => x,
            _ => return Ok((DecodeOutcome::TooManyErrors, trace)),
        };
        let mut error = vec![Elem::ZERO; len];
        for (&j, &xj) in zeros.iter().zip(&x) {
            error[j] = xj;
        }
        if weight(&error) > self.t {
            trace.error = error;
            return Ok((DecodeOutcome::TooManyErrors, trace));
        }
        let codeword: Vec<Elem> = y.iter().zip(&error).map(|(&a, &e)| f.sub(a, e)).collect();
        trace.error = error.clone();
        trace.codeword = codeword.clone();
        Ok((DecodeOutcome::Codeword { codeword, error }, trace))
    }
}

/// Scales a nonzero vector so its first nonzero entry is one.
fn normalize(f: &crate::field::Field, mut u: Vec<Elem>) -> Vec<Elem> {
    if let Some(&lead) = u.iter().find(|a| !a.is_zero()) {
        let inv = f.inv(lead).expect("nonzero");
        for a in u.iter_mut() {
            *a = f.mul(*a, inv);
        }
    }
    u
}

/// One-shot decode of `y` against the extended code of `spec`.
pub fn decode(spec: &TwistedSpec, y: &[Elem]) -> Result<DecodeOutcome> {
    EcpDecoder::new(spec)?.decode(y)
}

pub fn decode_traced(spec: &TwistedSpec, y: &[Elem]) -> Result<(DecodeOutcome, DecodeTrace)> {
    EcpDecoder::new(spec)?.decode_traced(y)
}
