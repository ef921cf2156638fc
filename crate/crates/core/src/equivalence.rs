//! Deciding whether a code is (monomially) equivalent to a GRS code.
//!
//! Two tools: Schur-square statistics, which can certify that a code is not
//! GRS, and an exact equivalence test run against every GRS code of the same
//! parameters, which settles the question at small field sizes.

use rayon::prelude::*;
use serde::Serialize;

use crate::code::LinearCode;
use crate::error::{Error, Result};
use crate::field::{Elem, Field};
use crate::matrix::FMatrix;
use crate::twisted::grs;

/// Default limit on the number of GRS candidates an exhaustive search tests.
pub const DEFAULT_SEARCH_BUDGET: u128 = 100_000;

const PREFILTER_LIMIT: u128 = 100_000;
const SCALE_ENUMERATION_LIMIT: u128 = 1_000_000;

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum VerdictTag {
    CertifiedNonGrs,
    EquivalentToGrs,
    Inconclusive,
}

/// `D = C · diag(scales) · P`: coordinate j of a codeword of C, multiplied by
/// `scales[j]`, becomes coordinate `perm[j]` of a codeword of D.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub perm: Vec<usize>,
    pub scales: Vec<Elem>,
}

impl Witness {
    pub fn identity(n: usize) -> Witness {
        Witness {
            perm: (0..n).collect(),
            scales: vec![Elem::ONE; n],
        }
    }

    /// Image of `c` under the map.
    pub fn apply(&self, c: &LinearCode) -> LinearCode {
        let f = c.field();
        let g = c.generator();
        let mut inv = vec![0; self.perm.len()];
        for (j, &p) in self.perm.iter().enumerate() {
            inv[p] = j;
        }
        LinearCode::from_matrix_any(FMatrix::from_fn(f, g.rows(), g.cols(), |i, col| {
            let j = inv[col];
            f.mul(g.get(i, j), self.scales[j])
        }))
    }
}

/// Evidence for or against being GRS.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrsVerdict {
    pub tag: VerdictTag,
    /// `dim(C^2)`, when the dimension test applies.
    pub square_dim: Option<usize>,
    /// `2k - 1`, the value a GRS code would give.
    pub square_dim_grs: Option<usize>,
    /// A coordinate j with `e_j` in `(C^⊥)^2`, i.e. `d((C^⊥)^2) = 1`, when
    /// the dual-square test applies and finds one.
    pub dual_square_unit: Option<usize>,
    /// Whether the dual-square test was run.
    pub dual_square_tested: bool,
    /// First GRS evaluation set found equivalent, with the map.
    pub witness: Option<(Vec<Elem>, Witness)>,
    /// Every equivalent evaluation set, when collected.
    pub equivalent_sets: Vec<Vec<Elem>>,
    pub candidates_tested: u128,
}

impl GrsVerdict {
    fn empty(tag: VerdictTag) -> Self {
        GrsVerdict {
            tag,
            square_dim: None,
            square_dim_grs: None,
            dual_square_unit: None,
            dual_square_tested: false,
            witness: None,
            equivalent_sets: Vec::new(),
            candidates_tested: 0,
        }
    }
}

/// Applies the two Schur-square tests. A GRS code with `3 <= k < (n+1)/2`
/// has `dim(C^2) = 2k - 1`; for `n/2 <= k <= n - 3` its dual is GRS of small
/// dimension, so `(C^⊥)^2` has no word of weight one.
pub fn schur_certificate(c: &LinearCode) -> Result<GrsVerdict> {
    let (n, k) = (c.n(), c.k());
    if k < 3 || k + 3 > n {
        return Err(Error::DimensionOutOfRange { n, k });
    }
    let mut v = GrsVerdict::empty(VerdictTag::Inconclusive);
    if 2 * k < n + 1 {
        let dim = c.schur_square().k();
        v.square_dim = Some(dim);
        v.square_dim_grs = Some(2 * k - 1);
        if dim != 2 * k - 1 {
            v.tag = VerdictTag::CertifiedNonGrs;
        }
    }
    if 2 * k >= n {
        v.dual_square_tested = true;
        v.dual_square_unit = dual_square_unit(c);
        if v.dual_square_unit.is_some() {
            v.tag = VerdictTag::CertifiedNonGrs;
        }
    }
    Ok(v)
}

/// First coordinate j with `e_j` in `(C^⊥)^2`: column j of a parity-check
/// matrix of that square is zero.
pub fn dual_square_unit(c: &LinearCode) -> Option<usize> {
    let sq = c.euclidean_dual().schur_square();
    let h = sq.parity_check();
    (0..c.n()).find(|&j| (0..h.rows()).all(|i| h.get(i, j).is_zero()))
}

/// Searches for a monomial map taking `c` onto `d`.
///
/// Puts `c` in systematic form `[I | A]` on its pivot columns and, for each
/// ordered information set of `d`, brings `d` to `[I | B]`. The codes are
/// equivalent through that information set iff there is a row scaling
/// `beta` such that the columns of `diag(beta) A` and `B` agree as multisets
/// of projective points. `beta` is read off by matching a widest column of
/// `B` to a column of `A` with the same support; rows outside that support
/// are enumerated.
pub fn monomial_equivalent(c: &LinearCode, d: &LinearCode) -> Result<Option<Witness>> {
    equivalent_impl(c, d, true)
}

fn equivalent_impl(c: &LinearCode, d: &LinearCode, prefilter: bool) -> Result<Option<Witness>> {
    c.field().same(d.field())?;
    let (n, k) = (c.n(), c.k());
    if d.n() != n || d.k() != k {
        return Ok(None);
    }
    if k == 0 || k == n {
        return Ok(Some(Witness::identity(n)));
    }
    let f = c.field();
    let q = f.order() as u128;
    if prefilter && q.saturating_pow(k as u32) <= PREFILTER_LIMIT {
        let wc = c.weight_distribution(PREFILTER_LIMIT)?;
        let wd = d.weight_distribution(PREFILTER_LIMIT)?;
        if wc != wd {
            return Ok(None);
        }
    }

    let pivots = c.pivots().to_vec();
    let nonpivots: Vec<usize> = (0..n).filter(|j| !pivots.contains(j)).collect();
    let canon = c.canonical();
    let a_cols: Vec<Vec<Elem>> = nonpivots.iter().map(|&j| canon.column(j)).collect();

    let dc = d.canonical();
    let mut result = None;
    for_each_subset(n, k, &mut |info: &[usize]| {
        let m = dc.select_columns(info);
        let Some(minv) = invert(&m) else {
            return Ok(true);
        };
        let b = minv.matmul(dc).expect("conformable");
        let rest: Vec<usize> = (0..n).filter(|j| !info.contains(j)).collect();
        let b_cols: Vec<Vec<Elem>> = rest.iter().map(|&j| b.column(j)).collect();
        let found = for_each_permutation(k, &mut |sigma: &[usize]| {
            // row r of the reordered B is row sigma[r] of B
            let bs: Vec<Vec<Elem>> = b_cols
                .iter()
                .map(|col| sigma.iter().map(|&s| col[s]).collect())
                .collect();
            if let Some((beta, matching)) = match_columns(f, &a_cols, &bs)? {
                let mut perm = vec![0; n];
                let mut scales = vec![Elem::ONE; n];
                for (r, &p) in pivots.iter().enumerate() {
                    perm[p] = info[sigma[r]];
                    scales[p] = f.inv(beta[r])?;
                }
                for (t, &j) in nonpivots.iter().enumerate() {
                    let (u, mu) = matching[t];
                    perm[j] = rest[u];
                    scales[j] = mu;
                }
                let w = Witness { perm, scales };
                if w.apply(c) == *d {
                    result = Some(w);
                    return Ok(false);
                }
            }
            Ok(true)
        })?;
        Ok(found)
    })?;
    Ok(result)
}

/// Finds `beta` and, for every column t of `a`, a distinct column `u` of `b`
/// and scalar `mu` with `b_u = mu · diag(beta) a_t`.
#[allow(clippy::type_complexity)]
fn match_columns(
    f: &Field,
    a: &[Vec<Elem>],
    b: &[Vec<Elem>],
) -> Result<Option<(Vec<Elem>, Vec<(usize, Elem)>)>> {
    let k = b.first().map_or(0, Vec::len);
    let support = |v: &[Elem]| -> Vec<bool> { v.iter().map(|x| !x.is_zero()).collect() };
    let mut b_sorted: Vec<Vec<u32>> = b.iter().map(|col| normalize(f, col)).collect();
    b_sorted.sort_unstable();

    let star = (0..b.len())
        .max_by_key(|&u| (support(&b[u]).iter().filter(|&&s| s).count(), std::cmp::Reverse(u)))
        .expect("at least one column");
    let bstar = &b[star];
    let sup = support(bstar);
    // rows on which every column of A vanishes never affect the comparison
    let free_rows: Vec<usize> = (0..k)
        .filter(|&r| !sup[r] && a.iter().any(|col| !col[r].is_zero()))
        .collect();
    let combos = ((f.order() - 1) as u128).saturating_pow(free_rows.len() as u32);
    if combos > SCALE_ENUMERATION_LIMIT {
        return Err(Error::EnumerationCapExceeded {
            needed: combos,
            cap: SCALE_ENUMERATION_LIMIT,
        });
    }
    let nonzero: Vec<Elem> = f.elements()[1..].to_vec();
    for at in a.iter().filter(|col| support(col) == sup) {
        let mut beta = vec![Elem::ONE; k];
        for r in 0..k {
            if sup[r] {
                beta[r] = f.div(bstar[r], at[r])?;
            }
        }
        let mut idx = vec![0usize; free_rows.len()];
        loop {
            for (i, &r) in free_rows.iter().enumerate() {
                beta[r] = nonzero[idx[i]];
            }
            let scaled: Vec<Vec<Elem>> = a
                .iter()
                .map(|col| col.iter().zip(&beta).map(|(&x, &s)| f.mul(x, s)).collect())
                .collect();
            let mut a_sorted: Vec<Vec<u32>> = scaled.iter().map(|col| normalize(f, col)).collect();
            a_sorted.sort_unstable();
            if a_sorted == b_sorted {
                return Ok(Some((beta.clone(), pair_columns(f, &scaled, b)?)));
            }
            // odometer over the free rows
            let mut i = 0;
            loop {
                if i == idx.len() {
                    break;
                }
                idx[i] += 1;
                if idx[i] < nonzero.len() {
                    break;
                }
                idx[i] = 0;
                i += 1;
            }
            if i == idx.len() {
                break;
            }
        }
    }
    Ok(None)
}

fn pair_columns(f: &Field, a: &[Vec<Elem>], b: &[Vec<Elem>]) -> Result<Vec<(usize, Elem)>> {
    let bn: Vec<Vec<u32>> = b.iter().map(|col| normalize(f, col)).collect();
    let mut used = vec![false; b.len()];
    let mut out = Vec::with_capacity(a.len());
    for col in a {
        let key = normalize(f, col);
        let u = (0..b.len())
            .find(|&u| !used[u] && bn[u] == key)
            .expect("multisets agree");
        used[u] = true;
        let mu = match col.iter().position(|x| !x.is_zero()) {
            Some(r) => f.div(b[u][r], col[r])?,
            None => Elem::ONE,
        };
        out.push((u, mu));
    }
    Ok(out)
}

/// Scales a vector so its first nonzero entry is one.
fn normalize(f: &Field, v: &[Elem]) -> Vec<u32> {
    match v.iter().find(|x| !x.is_zero()) {
        None => v.iter().map(|x| x.value()).collect(),
        Some(&lead) => {
            let inv = f.inv(lead).expect("nonzero");
            v.iter().map(|&x| f.mul(x, inv).value()).collect()
        }
    }
}

fn invert(m: &FMatrix) -> Option<FMatrix> {
    let k = m.rows();
    let aug = m.hstack(&FMatrix::identity(m.field(), k)).ok()?;
    let rr = aug.rref();
    if rr.pivots.iter().copied().take(k).ne(0..k) {
        return None;
    }
    let cols: Vec<usize> = (k..2 * k).collect();
    Some(rr.matrix.select_columns(&cols))
}

/// Calls `visit` on every k-subset of `0..n` in lexicographic order until it
/// returns `Ok(false)`. Returns whether the walk ran to completion.
fn for_each_subset(
    n: usize,
    k: usize,
    visit: &mut dyn FnMut(&[usize]) -> Result<bool>,
) -> Result<bool> {
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        if !visit(&idx)? {
            return Ok(false);
        }
        let mut i = k;
        loop {
            if i == 0 {
                return Ok(true);
            }
            i -= 1;
            if idx[i] < n - k + i {
                break;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Heap's algorithm over permutations of `0..k`.
fn for_each_permutation(k: usize, visit: &mut dyn FnMut(&[usize]) -> Result<bool>) -> Result<bool> {
    let mut p: Vec<usize> = (0..k).collect();
    let mut c = vec![0usize; k];
    if !visit(&p)? {
        return Ok(false);
    }
    let mut i = 0;
    while i < k {
        if c[i] < i {
            if i % 2 == 0 {
                p.swap(0, i);
            } else {
                p.swap(c[i], i);
            }
            if !visit(&p)? {
                return Ok(false);
            }
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    Ok(true)
}

fn binomial(n: u128, k: u128) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |c, i| c.saturating_mul(n - i) / (i + 1))
}

/// Options for [`exhaustive_grs_search`].
#[derive(Copy, Clone, Debug)]
pub struct SearchOptions {
    pub budget: u128,
    /// Keep testing after the first match and report every equivalent set.
    pub collect_all: bool,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            budget: DEFAULT_SEARCH_BUDGET,
            collect_all: false,
        }
    }
}

/// Tests `c` against `GRS_k(S', 1)` for every n-subset `S'` of the field,
/// taken in lexicographic order of packed values. Multipliers are absorbed
/// by the diagonal part of the equivalence, so `v = 1` loses nothing.
pub fn exhaustive_grs_search(c: &LinearCode, opts: SearchOptions) -> Result<GrsVerdict> {
    let f = c.field();
    let (n, k) = (c.n(), c.k());
    let q = f.order() as usize;
    if n > q {
        return Err(Error::InvalidSpec(format!(
            "no GRS code of length {n} over {f}"
        )));
    }
    let total = binomial(q as u128, n as u128);
    if total > opts.budget {
        return Err(Error::BudgetExceeded {
            needed: total,
            budget: opts.budget,
        });
    }
    let mut sets = Vec::with_capacity(total as usize);
    let elems: Vec<Elem> = f.elements_by_value().collect();
    for_each_subset(q, n, &mut |idx| {
        sets.push(idx.iter().map(|&i| elems[i]).collect::<Vec<_>>());
        Ok(true)
    })?;
    let ones = vec![Elem::ONE; n];
    let test = |s: &Vec<Elem>| -> Result<Option<Witness>> {
        let g = grs(f, s, &ones, k)?;
        equivalent_impl(&g, c, false)
    };
    let mut verdict = GrsVerdict::empty(VerdictTag::CertifiedNonGrs);
    verdict.candidates_tested = total;
    if opts.collect_all {
        let results: Vec<Option<Witness>> = sets.par_iter().map(test).collect::<Result<_>>()?;
        for (s, w) in sets.into_iter().zip(results) {
            if let Some(w) = w {
                if verdict.witness.is_none() {
                    verdict.witness = Some((s.clone(), w));
                }
                verdict.equivalent_sets.push(s);
            }
        }
    } else {
        let first = sets
            .par_iter()
            .map(|s| test(s).map(|w| w.map(|w| (s.clone(), w))))
            .find_map_first(|r| match r {
                Ok(None) => None,
                other => Some(other),
            });
        if let Some(r) = first {
            let (s, w) = r?.expect("filtered to matches");
            verdict.equivalent_sets.push(s.clone());
            verdict.witness = Some((s, w));
        }
    }
    if verdict.witness.is_some() {
        verdict.tag = VerdictTag::EquivalentToGrs;
    }
    Ok(verdict)
}
