//! Linear codes given by a generator matrix.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::OnceLock;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{Elem, Field};
use crate::matrix::FMatrix;

/// Default bound on the work any single minimum-distance computation may do.
pub const DEFAULT_ENUMERATION_CAP: u128 = 10_000_000;

/// Linear code over a finite field. Two codes compare equal when their
/// reduced row echelon generators are equal.
#[derive(Clone)]
pub struct LinearCode {
    generator: FMatrix,
    canonical: FMatrix,
    pivots: Vec<usize>,
    parity: OnceLock<FMatrix>,
    distance: OnceLock<usize>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum SingletonTag {
    Mds,
    Amds,
    Nmds,
    Other,
}

impl std::fmt::Display for SingletonTag {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            SingletonTag::Mds => "MDS",
            SingletonTag::Amds => "AMDS",
            SingletonTag::Nmds => "NMDS",
            SingletonTag::Other => "OTHER",
        })
    }
}

/// Position of a code relative to the Singleton bound, together with the
/// distances that decided it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SingletonClass {
    pub tag: SingletonTag,
    pub n: usize,
    pub k: usize,
    pub d: usize,
    pub dual_d: usize,
}

impl SingletonClass {
    /// Tag from the parameters alone. NMDS needs both the code and its dual
    /// to sit one below the bound.
    pub fn from_parameters(n: usize, k: usize, d: usize, dual_d: usize) -> Self {
        let tag = if d == n - k + 1 {
            SingletonTag::Mds
        } else if d + 1 == n - k + 1 && dual_d == k {
            SingletonTag::Nmds
        } else if d + 1 == n - k + 1 {
            SingletonTag::Amds
        } else {
            SingletonTag::Other
        };
        SingletonClass {
            tag,
            n,
            k,
            d,
            dual_d,
        }
    }
}

impl PartialEq for LinearCode {
    fn eq(&self, other: &Self) -> bool {
        self.canonical == other.canonical
    }
}

impl Eq for LinearCode {}

impl std::fmt::Debug for LinearCode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[{}, {}] code over {} ", self.n(), self.k(), self.field())?;
        f.debug_list().entries(self.generator.to_strings()).finish()
    }
}

impl LinearCode {
    /// Row space of `g`. When `g` already has full row rank it is kept as the
    /// generator (so later extensions append to exactly these rows); otherwise
    /// the nonzero rows of its reduced form are used.
    pub fn from_generator(g: FMatrix) -> Result<LinearCode> {
        if g.is_zero() || g.rows() == 0 {
            return Err(Error::ZeroMatrix);
        }
        Ok(Self::from_matrix_any(g))
    }

    /// Like [`LinearCode::from_generator`] but accepts the zero code.
    pub fn from_matrix_any(g: FMatrix) -> LinearCode {
        let rr = g.rref();
        let idx: Vec<usize> = (0..rr.rank).collect();
        let canonical = rr.matrix.select_rows(&idx);
        let generator = if rr.rank == g.rows() {
            g
        } else {
            canonical.clone()
        };
        LinearCode {
            generator,
            canonical,
            pivots: rr.pivots,
            parity: OnceLock::new(),
            distance: OnceLock::new(),
        }
    }

    pub fn from_rows(field: &Field, rows: &[Vec<Elem>]) -> Result<LinearCode> {
        Self::from_generator(FMatrix::from_rows(field, rows)?)
    }

    pub fn full_space(field: &Field, n: usize) -> LinearCode {
        Self::from_matrix_any(FMatrix::identity(field, n))
    }

    pub fn zero(field: &Field, n: usize) -> LinearCode {
        Self::from_matrix_any(FMatrix::zeros(field, 0, n))
    }

    #[inline]
    pub fn field(&self) -> &Field {
        self.generator.field()
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.generator.cols()
    }

    #[inline]
    pub fn k(&self) -> usize {
        self.canonical.rows()
    }

    pub fn generator(&self) -> &FMatrix {
        &self.generator
    }

    /// Reduced row echelon generator.
    pub fn canonical(&self) -> &FMatrix {
        &self.canonical
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Generator of the Euclidean dual, i.e. a parity-check matrix.
    pub fn parity_check(&self) -> &FMatrix {
        self.parity.get_or_init(|| {
            let kernel = self.canonical.null_space();
            FMatrix::from_rows_with_cols(self.field(), &kernel, self.n()).expect("kernel rows")
        })
    }

    pub fn encode(&self, msg: &[Elem]) -> Result<Vec<Elem>> {
        self.generator.vec_mul(msg)
    }

    pub fn syndrome(&self, y: &[Elem]) -> Result<Vec<Elem>> {
        if y.len() != self.n() {
            return Err(Error::LengthMismatch(y.len(), self.n()));
        }
        self.parity_check().mul_vec(y)
    }

    pub fn contains(&self, y: &[Elem]) -> Result<bool> {
        Ok(self.syndrome(y)?.iter().all(|a| a.is_zero()))
    }

    pub fn is_subcode_of(&self, other: &LinearCode) -> Result<bool> {
        self.check_compatible(other)?;
        for row in self.canonical.row_iter() {
            if !other.contains(row)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub(crate) fn check_compatible(&self, other: &LinearCode) -> Result<()> {
        self.field().same(other.field())?;
        if self.n() != other.n() {
            return Err(Error::LengthMismatch(self.n(), other.n()));
        }
        Ok(())
    }

    /// Applies `x -> x^(p^e)` to every coordinate of every codeword.
    pub fn frobenius(&self, e: u32) -> Result<LinearCode> {
        let f = self.field();
        f.check_galois_exponent(e)?;
        Ok(Self::from_matrix_any(
            self.generator.map(|a| f.frobenius_unchecked(a, e)),
        ))
    }

    /// The e-Galois dual `{y : sum x_i y_i^(p^e) = 0 for all x in C}`.
    /// Computed as the kernel of the generator raised to `p^(m-e)`.
    pub fn dual(&self, e: u32) -> Result<LinearCode> {
        let f = self.field();
        f.check_galois_exponent(e)?;
        let g = if e == 0 {
            self.canonical.clone()
        } else {
            let m = f.degree();
            self.canonical.map(|a| f.frobenius_unchecked(a, m - e))
        };
        let kernel = g.null_space();
        Ok(Self::from_matrix_any(
            FMatrix::from_rows_with_cols(f, &kernel, self.n()).expect("kernel rows"),
        ))
    }

    /// Euclidean dual.
    pub fn euclidean_dual(&self) -> LinearCode {
        let d = Self::from_matrix_any(self.parity_check().clone());
        // the double dual is the code itself
        let _ = d.parity.set(self.canonical.clone());
        d
    }

    pub fn is_self_dual(&self, e: u32) -> Result<bool> {
        let f = self.field();
        f.check_galois_exponent(e)?;
        if 2 * self.k() != self.n() {
            return Ok(false);
        }
        let g = &self.canonical;
        let ge = g.map(|a| f.frobenius_unchecked(a, e));
        Ok(g.matmul(&ge.transpose())?.is_zero())
    }

    /// Minimum distance with the default cap. The zero code reports `n + 1`.
    pub fn min_distance(&self) -> Result<usize> {
        self.min_distance_with_cap(DEFAULT_ENUMERATION_CAP)
    }

    /// Exact minimum distance. Two exact methods are available and the
    /// cheaper one runs: enumerating the `(q^k - 1)/(q - 1)` codewords up to
    /// scalars, or searching for the smallest set of linearly dependent
    /// parity-check columns among the `sum_{s <= n-k+1} C(n, s)` candidates.
    /// Fails only when both counts exceed `cap`.
    pub fn min_distance_with_cap(&self, cap: u128) -> Result<usize> {
        if let Some(&d) = self.distance.get() {
            return Ok(d);
        }
        let (n, k) = (self.n(), self.k());
        let d = if k == 0 {
            n + 1
        } else {
            let words = (self.field().order() as u128).saturating_pow(k as u32);
            let subsets = subset_count(n, n - k + 1);
            if words.min(subsets) > cap {
                return Err(Error::EnumerationCapExceeded {
                    needed: words.min(subsets),
                    cap,
                });
            }
            // a circuit check costs roughly (n-k) times a codeword's n
            if words * n as u128 <= subsets * (n - k).max(1) as u128 {
                self.distance_by_enumeration()
            } else {
                self.distance_by_circuits()
            }
        };
        let _ = self.distance.set(d);
        Ok(d)
    }

    fn distance_by_enumeration(&self) -> usize {
        let f = self.field();
        let rows: Vec<&[Elem]> = self.canonical.row_iter().collect();
        let k = rows.len();
        let elems = f.elements();
        let best = AtomicUsize::new(self.n());
        // one task per (leading row, coefficient of the next row)
        let tasks: Vec<(usize, Option<Elem>)> = (0..k)
            .flat_map(|i| {
                if i + 1 < k {
                    elems.iter().map(|&c| (i, Some(c))).collect::<Vec<_>>()
                } else {
                    vec![(i, None)]
                }
            })
            .collect();
        tasks.into_par_iter().for_each(|(i, c)| {
            if best.load(Ordering::Relaxed) <= 1 {
                return;
            }
            let mut base = rows[i].to_vec();
            let rest = match c {
                Some(c) => {
                    axpy(f, &mut base, c, rows[i + 1]);
                    &rows[i + 2..]
                }
                None => &rows[i + 1..],
            };
            let mut local = best.load(Ordering::Relaxed);
            for_each_combination(f, rest, base, |w| {
                let wt = weight(w);
                if wt < local {
                    local = wt;
                }
                local > 1
            });
            best.fetch_min(local, Ordering::Relaxed);
        });
        best.into_inner()
    }

    fn distance_by_circuits(&self) -> usize {
        let h = self.parity_check();
        let n = self.n();
        let cols: Vec<Vec<Elem>> = (0..n).map(|j| h.column(j)).collect();
        let f = self.field();
        for s in 1..=n {
            let found = (0..n)
                .into_par_iter()
                .any(|first| dependent_set_from(f, &cols, first, s));
            if found {
                return s;
            }
        }
        n + 1
    }

    /// Number of codewords of each weight, `A_0..A_n`.
    pub fn weight_distribution(&self, cap: u128) -> Result<Vec<u128>> {
        let f = self.field();
        let q = f.order() as u128;
        let words = q.saturating_pow(self.k() as u32);
        if words > cap {
            return Err(Error::EnumerationCapExceeded { needed: words, cap });
        }
        let mut counts = vec![0u128; self.n() + 1];
        counts[0] = 1;
        let rows: Vec<&[Elem]> = self.canonical.row_iter().collect();
        for i in 0..rows.len() {
            for_each_combination(f, &rows[i + 1..], rows[i].to_vec(), |w| {
                counts[weight(w)] += q - 1;
                true
            });
        }
        Ok(counts)
    }

    /// Tag relative to the Singleton bound; needs the distance of the code
    /// and of its Euclidean dual.
    pub fn classify_singleton(&self) -> Result<SingletonClass> {
        self.classify_singleton_with_cap(DEFAULT_ENUMERATION_CAP)
    }

    pub fn classify_singleton_with_cap(&self, cap: u128) -> Result<SingletonClass> {
        let d = self.min_distance_with_cap(cap)?;
        let dual_d = self.euclidean_dual().min_distance_with_cap(cap)?;
        Ok(SingletonClass::from_parameters(self.n(), self.k(), d, dual_d))
    }

    /// Span of all coordinatewise products `x * y` with `x` in `self` and `y`
    /// in `other`.
    pub fn schur_product(&self, other: &LinearCode) -> Result<LinearCode> {
        self.check_compatible(other)?;
        let f = self.field();
        let same = self == other;
        let mut rows = Vec::new();
        for (i, a) in self.canonical.row_iter().enumerate() {
            for (j, b) in other.canonical.row_iter().enumerate() {
                if same && j < i {
                    continue;
                }
                rows.push(a.iter().zip(b).map(|(&x, &y)| f.mul(x, y)).collect());
            }
        }
        Ok(Self::from_matrix_any(FMatrix::from_rows_with_cols(
            f,
            &rows,
            self.n(),
        )?))
    }

    pub fn schur_square(&self) -> LinearCode {
        self.schur_product(self).expect("a code is compatible with itself")
    }

    /// Appends the column `g` to the generator.
    pub fn first_extend(&self, g: &[Elem]) -> Result<LinearCode> {
        if g.len() != self.generator.rows() {
            return Err(Error::DimensionMismatch(format!(
                "extension column of length {} for {} generator rows",
                g.len(),
                self.generator.rows()
            )));
        }
        Ok(Self::from_matrix_any(self.generator.append_column(g)?))
    }

    /// Appends the coordinate `sum u_i c_i` to every codeword.
    pub fn second_extend(&self, u: &[Elem]) -> Result<LinearCode> {
        if u.len() != self.n() {
            return Err(Error::DimensionMismatch(format!(
                "functional of length {} for length {}",
                u.len(),
                self.n()
            )));
        }
        let col = self.generator.mul_vec(u)?;
        self.first_extend(&col)
    }

    /// Deletes the given coordinates.
    pub fn puncture(&self, positions: &[usize]) -> LinearCode {
        let keep: Vec<usize> = (0..self.n()).filter(|j| !positions.contains(j)).collect();
        Self::from_matrix_any(self.generator.select_columns(&keep))
    }

    /// Sum of two codes of the same length.
    pub fn sum(&self, other: &LinearCode) -> Result<LinearCode> {
        self.check_compatible(other)?;
        Ok(Self::from_matrix_any(self.canonical.vstack(&other.canonical)?))
    }

    /// Calls `visit` on every codeword; stops early when it returns false.
    pub fn for_each_codeword(&self, cap: u128, mut visit: impl FnMut(&[Elem]) -> bool) -> Result<()> {
        let words = (self.field().order() as u128).saturating_pow(self.k() as u32);
        if words > cap {
            return Err(Error::EnumerationCapExceeded { needed: words, cap });
        }
        let rows: Vec<&[Elem]> = self.canonical.row_iter().collect();
        for_each_combination(self.field(), &rows, vec![Elem::ZERO; self.n()], |w| visit(w));
        Ok(())
    }
}

pub fn weight(v: &[Elem]) -> usize {
    v.iter().filter(|a| !a.is_zero()).count()
}

/// `sum_{s=1}^{smax} C(n, s)`, saturating.
pub(crate) fn subset_count(n: usize, smax: usize) -> u128 {
    let mut total = 0u128;
    let mut c = 1u128;
    for s in 1..=smax.min(n) {
        c = c.saturating_mul((n - s + 1) as u128) / s as u128;
        total = total.saturating_add(c);
    }
    total
}

#[inline]
pub(crate) fn axpy(f: &Field, y: &mut [Elem], a: Elem, x: &[Elem]) {
    if a.is_zero() {
        return;
    }
    for (d, &b) in y.iter_mut().zip(x) {
        *d = f.mul_add(*d, a, b);
    }
}

/// Visits `base + sum c_j rows[j]` for every coefficient vector, starting
/// with all coefficients zero; each step touches one row on average.
/// Returns false if `visit` asked to stop.
pub(crate) fn for_each_combination(
    f: &Field,
    rows: &[&[Elem]],
    base: Vec<Elem>,
    mut visit: impl FnMut(&[Elem]) -> bool,
) -> bool {
    let elems = f.elements();
    let q = elems.len();
    let mut cur = base;
    let mut idx = vec![0usize; rows.len()];
    if !visit(&cur) {
        return false;
    }
    loop {
        let mut j = rows.len();
        loop {
            if j == 0 {
                return true;
            }
            j -= 1;
            let old = elems[idx[j]];
            idx[j] += 1;
            if idx[j] < q {
                let delta = f.sub(elems[idx[j]], old);
                axpy(f, &mut cur, delta, rows[j]);
                break;
            }
            idx[j] = 0;
            axpy(f, &mut cur, f.neg(old), rows[j]);
        }
        if !visit(&cur) {
            return false;
        }
    }
}

/// Whether some `s`-subset of columns with smallest index `first` is
/// linearly dependent while all of its proper prefixes are not.
fn dependent_set_from(f: &Field, cols: &[Vec<Elem>], first: usize, s: usize) -> bool {
    let mut basis: Vec<(usize, Vec<Elem>)> = Vec::with_capacity(s);
    if reduce_into(f, &mut basis, &cols[first]) {
        return s == 1;
    }
    s > 1 && dfs_dependent(f, cols, first + 1, s - 1, &mut basis)
}

fn dfs_dependent(
    f: &Field,
    cols: &[Vec<Elem>],
    start: usize,
    remaining: usize,
    basis: &mut Vec<(usize, Vec<Elem>)>,
) -> bool {
    for j in start..cols.len() {
        if cols.len() - j < remaining {
            break;
        }
        let dependent = reduce_into(f, basis, &cols[j]);
        if dependent {
            if remaining == 1 {
                return true;
            }
            continue;
        }
        if remaining > 1 && dfs_dependent(f, cols, j + 1, remaining - 1, basis) {
            return true;
        }
        basis.pop();
    }
    false
}

/// Reduces `v` against an echelon basis. Returns true when `v` lies in the
/// span; otherwise pushes the normalized remainder and returns false.
fn reduce_into(f: &Field, basis: &mut Vec<(usize, Vec<Elem>)>, v: &[Elem]) -> bool {
    let mut v = v.to_vec();
    for (p, b) in basis.iter() {
        let c = v[*p];
        if !c.is_zero() {
            axpy(f, &mut v, f.neg(c), b);
        }
    }
    match v.iter().position(|a| !a.is_zero()) {
        None => true,
        Some(p) => {
            let inv = f.inv(v[p]).expect("nonzero");
            for a in &mut v {
                *a = f.mul(*a, inv);
            }
            basis.push((p, v));
            false
        }
    }
}
