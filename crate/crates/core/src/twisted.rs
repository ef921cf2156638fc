//! GRS, extended GRS, and (+)-twisted GRS codes with their extensions.
//!
//! A (+)-TGRS code of dimension k evaluates the polynomials
//! `f_0 + f_1 x + ... + f_{k-1} (x^{k-1} + eta x^k)` at the points `a_i` and
//! scales coordinate i by `v_i`. The extended code appends `f_{k-1}`.

use std::collections::HashSet;

use rand::seq::SliceRandom;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::code::{LinearCode, SingletonClass};
use crate::error::{Error, Result};
use crate::field::{Elem, Field};
use crate::matrix::FMatrix;

/// Default bound on the number of k-subsets a subset-sum query may range over.
pub const DEFAULT_COMBINATORIAL_CAP: u128 = 10_000_000;

const PLAIN_ENUMERATION_LIMIT: u128 = 100_000;

/// Parameters `(S, v, eta, k, extended)` of a (+)-TGRS or (+)-ETGRS code.
/// The order of `points` fixes the column order of every matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwistedSpec {
    pub field: Field,
    pub points: Vec<Elem>,
    pub v: Vec<Elem>,
    pub eta: Elem,
    pub k: usize,
    pub extended: bool,
}

impl TwistedSpec {
    pub fn new(
        field: &Field,
        points: Vec<Elem>,
        v: Vec<Elem>,
        eta: Elem,
        k: usize,
        extended: bool,
    ) -> Result<TwistedSpec> {
        let spec = TwistedSpec {
            field: field.clone(),
            points,
            v,
            eta,
            k,
            extended,
        };
        spec.validate()?;
        Ok(spec)
    }

    /// All multipliers equal to one.
    pub fn with_unit_v(
        field: &Field,
        points: Vec<Elem>,
        eta: Elem,
        k: usize,
        extended: bool,
    ) -> Result<TwistedSpec> {
        let v = vec![Elem::ONE; points.len()];
        Self::new(field, points, v, eta, k, extended)
    }

    pub fn n(&self) -> usize {
        self.points.len()
    }

    /// Length of the code: n, or n + 1 when extended.
    pub fn length(&self) -> usize {
        self.n() + usize::from(self.extended)
    }

    pub fn sum_of_points(&self) -> Elem {
        let f = &self.field;
        self.points.iter().fold(Elem::ZERO, |s, &a| f.add(s, a))
    }

    pub fn validate(&self) -> Result<()> {
        let f = &self.field;
        let n = self.n();
        check_points(f, &self.points)?;
        check_multipliers(f, &self.v, n)?;
        if self.eta.is_zero() || !f.contains(self.eta) {
            return Err(Error::InvalidSpec("eta must be a nonzero field element".into()));
        }
        if self.k < 3 || self.k + 2 > n {
            return Err(Error::InvalidSpec(format!(
                "need 3 <= k <= n - 2, got k = {} with n = {n}",
                self.k
            )));
        }
        if n > f.order() as usize {
            return Err(Error::InvalidSpec(format!(
                "n = {n} exceeds the field size {}",
                f.order()
            )));
        }
        Ok(())
    }

    /// Uniform random valid spec: distinct points, nonzero v and eta.
    pub fn random<R: Rng + ?Sized>(
        field: &Field,
        n: usize,
        k: usize,
        extended: bool,
        rng: &mut R,
    ) -> Result<TwistedSpec> {
        let mut elems = field.elements();
        if n > elems.len() {
            return Err(Error::InvalidSpec(format!("n = {n} exceeds {}", elems.len())));
        }
        elems.shuffle(rng);
        let points = elems[..n].to_vec();
        let v = (0..n).map(|_| field.random_nonzero(rng)).collect();
        let eta = field.random_nonzero(rng);
        Self::new(field, points, v, eta, k, extended)
    }

    pub fn as_extended(&self, extended: bool) -> TwistedSpec {
        TwistedSpec {
            extended,
            ..self.clone()
        }
    }
}

fn check_points(f: &Field, points: &[Elem]) -> Result<()> {
    if points.iter().any(|&a| !f.contains(a)) {
        return Err(Error::InvalidSpec("evaluation point outside the field".into()));
    }
    let mut seen = HashSet::new();
    if !points.iter().all(|a| seen.insert(*a)) {
        return Err(Error::DuplicatePoints);
    }
    Ok(())
}

fn check_multipliers(f: &Field, v: &[Elem], n: usize) -> Result<()> {
    if v.len() != n {
        return Err(Error::InvalidSpec(format!(
            "{} multipliers for {n} points",
            v.len()
        )));
    }
    if v.iter().any(|&a| a.is_zero() || !f.contains(a)) {
        return Err(Error::InvalidSpec("multipliers must be nonzero".into()));
    }
    Ok(())
}

/// `w_i = prod_{j != i} (a_i - a_j)^{-1}`.
pub fn w_vector(f: &Field, points: &[Elem]) -> Result<Vec<Elem>> {
    check_points(f, points)?;
    points
        .iter()
        .enumerate()
        .map(|(i, &a)| {
            let prod = points
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .fold(Elem::ONE, |acc, (_, &b)| f.mul(acc, f.sub(a, b)));
            f.inv(prod)
        })
        .collect()
}

/// Entrywise quotient `x / y`.
pub fn divide(f: &Field, x: &[Elem], y: &[Elem]) -> Result<Vec<Elem>> {
    x.iter().zip(y).map(|(&a, &b)| f.div(a, b)).collect()
}

fn check_grs(f: &Field, points: &[Elem], v: &[Elem], k: usize) -> Result<()> {
    check_points(f, points)?;
    check_multipliers(f, v, points.len())?;
    if k == 0 || k > points.len() {
        return Err(Error::InvalidSpec(format!(
            "need 1 <= k <= n, got k = {k} with n = {}",
            points.len()
        )));
    }
    Ok(())
}

/// Rows `v * a^i` for `i < k`.
pub fn grs_generator(f: &Field, points: &[Elem], v: &[Elem], k: usize) -> Result<FMatrix> {
    check_grs(f, points, v, k)?;
    Ok(FMatrix::from_fn(f, k, points.len(), |i, j| {
        f.mul(v[j], f.pow_u(points[j], i as u64))
    }))
}

/// The generator above with the column `(0, ..., 0, 1)` appended.
pub fn egrs_generator(f: &Field, points: &[Elem], v: &[Elem], k: usize) -> Result<FMatrix> {
    let g = grs_generator(f, points, v, k)?;
    g.append_column(&unit_column(k))
}

pub fn grs(f: &Field, points: &[Elem], v: &[Elem], k: usize) -> Result<LinearCode> {
    LinearCode::from_generator(grs_generator(f, points, v, k)?)
}

pub fn egrs(f: &Field, points: &[Elem], v: &[Elem], k: usize) -> Result<LinearCode> {
    LinearCode::from_generator(egrs_generator(f, points, v, k)?)
}

fn unit_column(k: usize) -> Vec<Elem> {
    let mut col = vec![Elem::ZERO; k];
    col[k - 1] = Elem::ONE;
    col
}

/// Twisted generator without range checks on k beyond `1 <= k <= n`.
pub(crate) fn twisted_rows(
    f: &Field,
    points: &[Elem],
    v: &[Elem],
    eta: Elem,
    k: usize,
) -> Result<FMatrix> {
    check_grs(f, points, v, k)?;
    Ok(FMatrix::from_fn(f, k, points.len(), |i, j| {
        let a = points[j];
        let mono = f.pow_u(a, i as u64);
        let entry = if i + 1 == k {
            f.mul_add(mono, eta, f.pow_u(a, k as u64))
        } else {
            mono
        };
        f.mul(v[j], entry)
    }))
}

/// k × n generator of the non-extended code.
pub fn tgrs_generator(spec: &TwistedSpec) -> Result<FMatrix> {
    spec.validate()?;
    twisted_rows(&spec.field, &spec.points, &spec.v, spec.eta, spec.k)
}

/// k × (n+1) generator of the extended code.
pub fn etgrs_generator(spec: &TwistedSpec) -> Result<FMatrix> {
    tgrs_generator(spec)?.append_column(&unit_column(spec.k))
}

/// Generator of the code the spec names, honouring `extended`.
pub fn generator(spec: &TwistedSpec) -> Result<FMatrix> {
    if spec.extended {
        etgrs_generator(spec)
    } else {
        tgrs_generator(spec)
    }
}

pub fn tgrs(spec: &TwistedSpec) -> Result<LinearCode> {
    LinearCode::from_generator(tgrs_generator(spec)?)
}

pub fn etgrs(spec: &TwistedSpec) -> Result<LinearCode> {
    LinearCode::from_generator(etgrs_generator(spec)?)
}

pub fn twisted_code(spec: &TwistedSpec) -> Result<LinearCode> {
    LinearCode::from_generator(generator(spec)?)
}

/// The (n+1-k) × (n+1) parity-check matrix of the extended code: rows
/// `(w/v) a^h` for `h = 0..=n-k`, last column zero except `-eta` in row
/// `n-k-1` and `-1 - eta * sum(S)` in row `n-k`.
pub fn etgrs_parity_check(spec: &TwistedSpec) -> Result<FMatrix> {
    if !spec.extended {
        return Err(Error::InvalidSpec(
            "the parity-check formula is for the extended code".into(),
        ));
    }
    spec.validate()?;
    let f = &spec.field;
    let n = spec.n();
    let r = n - spec.k;
    let wv = divide(f, &w_vector(f, &spec.points)?, &spec.v)?;
    let sigma = spec.sum_of_points();
    let last_col: Vec<Elem> = (0..=r)
        .map(|h| {
            if h + 1 == r {
                f.neg(spec.eta)
            } else if h == r {
                f.neg(f.mul_add(Elem::ONE, spec.eta, sigma))
            } else {
                Elem::ZERO
            }
        })
        .collect();
    FMatrix::from_fn(f, r + 1, n, |h, j| f.mul(wv[j], f.pow_u(spec.points[j], h as u64)))
        .append_column(&last_col)
}

fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut c = 1u128;
    for i in 0..k {
        c = c.saturating_mul((n - i) as u128) / (i as u128 + 1);
    }
    c
}

/// Looks for a k-subset of `points` summing to `target`. On success returns
/// the lexicographically first such index set.
pub fn subset_sum_contains(
    f: &Field,
    points: &[Elem],
    k: usize,
    target: Elem,
    cap: u128,
) -> Result<Option<Vec<usize>>> {
    let n = points.len();
    if k == 0 || k > n {
        return Err(Error::InvalidSpec(format!("subset size {k} for {n} points")));
    }
    let count = binomial(n, k);
    if count > cap {
        return Err(Error::CombinatorialCapExceeded { n, k, cap });
    }
    if count <= PLAIN_ENUMERATION_LIMIT {
        return Ok(first_subset_plain(f, points, k, target));
    }
    // Fix indices one at a time, smallest first, keeping only choices whose
    // remainder is still reachable; reachability is a meet-in-the-middle test.
    let mut chosen = Vec::with_capacity(k);
    let mut rem = target;
    let mut start = 0;
    for slot in 0..k {
        let left = k - slot - 1;
        let pick = (start..=n - left - 1).find(|&i| {
            let r = f.sub(rem, points[i]);
            subset_sum_exists(f, &points[i + 1..], left, r)
        });
        match pick {
            Some(i) => {
                chosen.push(i);
                rem = f.sub(rem, points[i]);
                start = i + 1;
            }
            None => return Ok(None),
        }
    }
    Ok(Some(chosen))
}

fn first_subset_plain(f: &Field, points: &[Elem], k: usize, target: Elem) -> Option<Vec<usize>> {
    let n = points.len();
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        let s = idx.iter().fold(Elem::ZERO, |acc, &i| f.add(acc, points[i]));
        if s == target {
            return Some(idx);
        }
        // next combination in lexicographic order
        let mut i = k;
        loop {
            if i == 0 {
                return None;
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

fn subset_sums(f: &Field, pts: &[Elem], r: usize, out: &mut impl FnMut(Elem) -> bool) -> bool {
    fn go(
        f: &Field,
        pts: &[Elem],
        r: usize,
        acc: Elem,
        out: &mut impl FnMut(Elem) -> bool,
    ) -> bool {
        if r == 0 {
            return out(acc);
        }
        for i in 0..pts.len() {
            if pts.len() - i < r {
                break;
            }
            if !go(f, &pts[i + 1..], r - 1, f.add(acc, pts[i]), out) {
                return false;
            }
        }
        true
    }
    go(f, pts, r, Elem::ZERO, out)
}

fn subset_sum_exists(f: &Field, pts: &[Elem], r: usize, target: Elem) -> bool {
    if r == 0 {
        return target.is_zero();
    }
    if r > pts.len() {
        return false;
    }
    let (lo, hi) = pts.split_at(pts.len() / 2);
    let jmin = r.saturating_sub(hi.len());
    for j in jmin..=r.min(lo.len()) {
        let mut left = HashSet::new();
        subset_sums(f, lo, j, &mut |s| {
            left.insert(s);
            true
        });
        let mut found = false;
        subset_sums(f, hi, r - j, &mut |s| {
            found = left.contains(&f.sub(target, s));
            !found
        });
        if found {
            return true;
        }
    }
    false
}

/// `-eta^{-1}`, the sum whose presence among k-subset sums makes the code NMDS.
pub fn nmds_target(spec: &TwistedSpec) -> Elem {
    let f = &spec.field;
    f.neg(f.inv(spec.eta).expect("eta is nonzero"))
}

/// Index set of a k-subset of S summing to `-eta^{-1}`, if any.
pub fn nmds_witness(spec: &TwistedSpec, cap: u128) -> Result<Option<Vec<usize>>> {
    spec.validate()?;
    subset_sum_contains(&spec.field, &spec.points, spec.k, nmds_target(spec), cap)
}

/// MDS or NMDS from the subset-sum criterion, without enumerating codewords.
pub fn classify_twisted(spec: &TwistedSpec) -> Result<SingletonClass> {
    classify_twisted_with_cap(spec, DEFAULT_COMBINATORIAL_CAP)
}

pub fn classify_twisted_with_cap(spec: &TwistedSpec, cap: u128) -> Result<SingletonClass> {
    let nmds = nmds_witness(spec, cap)?.is_some();
    let len = spec.length();
    let k = spec.k;
    let d = len - k + 1 - usize::from(nmds);
    let dual_d = k + 1 - usize::from(nmds);
    Ok(SingletonClass::from_parameters(len, k, d, dual_d))
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum DualKind {
    HanZhang,
    TgrsShifted,
    TgrsNegated,
}

/// Description of the Euclidean dual of a (+)-TGRS code.
#[derive(Clone, Debug)]
pub struct DualFamily {
    pub kind: DualKind,
    pub points: Vec<Elem>,
    /// `w / v`, the multipliers of the dual.
    pub multipliers: Vec<Elem>,
    pub k: usize,
    /// Twist of the dual when it is itself a (+)-TGRS code.
    pub twist: Option<Elem>,
    pub code: LinearCode,
}

/// Which of the three dual families the non-extended code falls in. The
/// shifted twist is `-eta / (1 + eta sum(S))`; for the Han-Zhang case the
/// dual is represented by the kernel of the generator.
pub fn dual_family(spec: &TwistedSpec) -> Result<DualFamily> {
    if spec.extended {
        return Err(Error::InvalidSpec(
            "dual families are described for the non-extended code".into(),
        ));
    }
    spec.validate()?;
    let f = &spec.field;
    let n = spec.n();
    let multipliers = divide(f, &w_vector(f, &spec.points)?, &spec.v)?;
    let sigma = spec.sum_of_points();
    let denom = f.mul_add(Elem::ONE, spec.eta, sigma);
    let dual_k = n - spec.k;
    let (kind, twist) = if sigma.is_zero() {
        (DualKind::TgrsNegated, Some(f.neg(spec.eta)))
    } else if denom.is_zero() {
        (DualKind::HanZhang, None)
    } else {
        let theta = f.neg(f.div(spec.eta, denom)?);
        (DualKind::TgrsShifted, Some(theta))
    };
    let code = match twist {
        Some(theta) => LinearCode::from_generator(twisted_rows(
            f,
            &spec.points,
            &multipliers,
            theta,
            dual_k,
        )?)?,
        None => tgrs(spec)?.euclidean_dual(),
    };
    Ok(DualFamily {
        kind,
        points: spec.points.clone(),
        multipliers,
        k: dual_k,
        twist,
        code,
    })
}

/// Expected Schur square of the dual of the extended code: the whole space
/// when `k <= (n+1)/2`, otherwise `<(0,...,0,1)> + GRS_{2n-2k+1}(S, w^2/v^2)`
/// extended by a zero coordinate.
pub fn predicted_dual_schur_square(spec: &TwistedSpec) -> Result<LinearCode> {
    spec.validate()?;
    let f = &spec.field;
    let n = spec.n();
    if 2 * spec.k <= n + 1 {
        return Ok(LinearCode::full_space(f, n + 1));
    }
    let wv = divide(f, &w_vector(f, &spec.points)?, &spec.v)?;
    let sq: Vec<Elem> = wv.iter().map(|&x| f.mul(x, x)).collect();
    let c2 = grs(f, &spec.points, &sq, 2 * n - 2 * spec.k + 1)?.second_extend(&vec![Elem::ZERO; n])?;
    let mut unit = vec![Elem::ZERO; n + 1];
    unit[n] = Elem::ONE;
    let c1 = LinearCode::from_rows(f, &[unit])?;
    c1.sum(&c2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn ints(f: &Field, xs: &[i64]) -> Vec<Elem> {
        xs.iter().map(|&x| f.from_int(x)).collect()
    }

    #[test]
    fn w_two_points() {
        let f = Field::prime(7).unwrap();
        let w = w_vector(&f, &ints(&f, &[2, 5])).unwrap();
        assert_eq!(w, vec![f.inv(f.from_int(-3)).unwrap(), f.inv(f.from_int(3)).unwrap()]);
        assert_eq!(w_vector(&f, &ints(&f, &[2, 2])), Err(Error::DuplicatePoints));
    }

    #[test]
    fn power_sum_identities() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for (p, m) in [(11u64, 1u32), (13, 1), (2, 4), (3, 2)] {
            let f = Field::new(p, m, None).unwrap();
            for _ in 0..20 {
                let n = rng.gen_range(3..=f.order().min(12) as usize);
                let mut pts = f.elements();
                pts.shuffle(&mut rng);
                pts.truncate(n);
                let w = w_vector(&f, &pts).unwrap();
                let sigma = pts.iter().fold(Elem::ZERO, |s, &a| f.add(s, a));
                for l in 0..=n {
                    let s = pts
                        .iter()
                        .zip(&w)
                        .fold(Elem::ZERO, |acc, (&a, &wi)| f.add(acc, f.mul(wi, f.pow_u(a, l as u64))));
                    let expected = match l {
                        _ if l + 2 <= n => Elem::ZERO,
                        _ if l + 1 == n => Elem::ONE,
                        _ => sigma,
                    };
                    assert_eq!(s, expected, "n={n} l={l}");
                }
            }
        }
    }

    #[test]
    fn first_rows_match_grs() {
        let f = Field::prime(13).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let spec = TwistedSpec::random(&f, 8, 4, false, &mut rng).unwrap();
        let t = tgrs_generator(&spec).unwrap();
        let g = grs_generator(&f, &spec.points, &spec.v, 4).unwrap();
        for i in 0..3 {
            assert_eq!(t.row(i), g.row(i));
        }
        assert_ne!(t.row(3), g.row(3));
    }

    #[test]
    fn grs_full_space_and_egrs_distance() {
        let f = Field::prime(11).unwrap();
        let pts = ints(&f, &[1, 2, 3, 4]);
        let c = grs(&f, &pts, &[Elem::ONE; 4], 4).unwrap();
        assert_eq!(c, LinearCode::full_space(&f, 4));
        assert_eq!(c.min_distance().unwrap(), 1);
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..20 {
            let n = rng.gen_range(3..9);
            let k = rng.gen_range(1..=n);
            let mut pts = f.elements();
            pts.shuffle(&mut rng);
            pts.truncate(n);
            let v: Vec<Elem> = (0..n).map(|_| f.random_nonzero(&mut rng)).collect();
            let e = egrs(&f, &pts, &v, k).unwrap();
            assert_eq!(e.n(), n + 1);
            assert_eq!(e.min_distance().unwrap(), n - k + 2);
        }
    }

    #[test]
    fn spec_validation() {
        let f = Field::prime(11).unwrap();
        let pts = ints(&f, &[0, 1, 2, 3, 4, 5]);
        assert!(TwistedSpec::with_unit_v(&f, pts.clone(), Elem::ONE, 3, false).is_ok());
        assert!(TwistedSpec::with_unit_v(&f, pts.clone(), Elem::ZERO, 3, false).is_err());
        assert!(TwistedSpec::with_unit_v(&f, pts.clone(), Elem::ONE, 2, false).is_err());
        assert!(TwistedSpec::with_unit_v(&f, pts.clone(), Elem::ONE, 5, false).is_err());
        let dup = ints(&f, &[0, 1, 2, 3, 4, 4]);
        assert_eq!(
            TwistedSpec::with_unit_v(&f, dup, Elem::ONE, 3, false),
            Err(Error::DuplicatePoints)
        );
    }

    #[test]
    fn subset_sum_agrees_between_methods() {
        let f = Field::new(2, 8, None).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        for _ in 0..30 {
            let n = rng.gen_range(5..14);
            let k = rng.gen_range(1..=n);
            let mut pts = f.elements();
            pts.shuffle(&mut rng);
            pts.truncate(n);
            let target = f.random(&mut rng);
            let plain = first_subset_plain(&f, &pts, k, target);
            // force the greedy path
            let mut chosen = Vec::new();
            let mut rem = target;
            let mut start = 0;
            let mut ok = true;
            for slot in 0..k {
                let left = k - slot - 1;
                match (start..=n - left - 1)
                    .find(|&i| subset_sum_exists(&f, &pts[i + 1..], left, f.sub(rem, pts[i])))
                {
                    Some(i) => {
                        chosen.push(i);
                        rem = f.sub(rem, pts[i]);
                        start = i + 1;
                    }
                    None => {
                        ok = false;
                        break;
                    }
                }
            }
            assert_eq!(plain, ok.then_some(chosen));
        }
    }

    #[test]
    fn subset_sum_single_subset_and_cap() {
        let f = Field::prime(13).unwrap();
        let pts = ints(&f, &[1, 2, 3, 4]);
        assert_eq!(
            subset_sum_contains(&f, &pts, 4, f.from_int(10), 100).unwrap(),
            Some(vec![0, 1, 2, 3])
        );
        assert_eq!(subset_sum_contains(&f, &pts, 4, f.from_int(9), 100).unwrap(), None);
        assert!(matches!(
            subset_sum_contains(&f, &pts, 2, Elem::ONE, 5),
            Err(Error::CombinatorialCapExceeded { .. })
        ));
    }

    #[test]
    fn large_subset_sum_uses_meet_in_the_middle() {
        let f = Field::new(2, 8, None).unwrap();
        let pts: Vec<Elem> = f.elements()[1..31].to_vec();
        let target = f.exp(77);
        let hit = subset_sum_contains(&f, &pts, 12, target, DEFAULT_COMBINATORIAL_CAP * 10).unwrap();
        let idx = hit.expect("30 points in GF(256) reach most sums");
        let s = idx.iter().fold(Elem::ZERO, |acc, &i| f.add(acc, pts[i]));
        assert_eq!(s, target);
    }

    #[test]
    fn parity_check_annihilates_generator() {
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        for (p, m) in [(11u64, 1u32), (13, 1), (2, 4)] {
            let f = Field::new(p, m, None).unwrap();
            for _ in 0..20 {
                let n = rng.gen_range(5..=f.order().min(12) as usize);
                let k = rng.gen_range(3..=n - 2);
                let spec = TwistedSpec::random(&f, n, k, true, &mut rng).unwrap();
                let g = etgrs_generator(&spec).unwrap();
                let h = etgrs_parity_check(&spec).unwrap();
                assert!(g.matmul(&h.transpose()).unwrap().is_zero());
                let code = etgrs(&spec).unwrap();
                let from_h = LinearCode::from_generator(h).unwrap();
                assert_eq!(from_h, code.dual(0).unwrap());
            }
        }
    }

    #[test]
    fn classification_matches_enumeration() {
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        for (p, m) in [(7u64, 1u32), (11, 1), (2, 3), (3, 2)] {
            let f = Field::new(p, m, None).unwrap();
            for _ in 0..25 {
                let n = rng.gen_range(5..=f.order().min(9) as usize);
                let k = rng.gen_range(3..=n - 2);
                let ext = rng.gen_bool(0.5);
                let spec = TwistedSpec::random(&f, n, k, ext, &mut rng).unwrap();
                let fast = classify_twisted(&spec).unwrap();
                let slow = twisted_code(&spec).unwrap().classify_singleton().unwrap();
                assert_eq!(fast, slow, "{spec:?}");
            }
        }
    }

    #[test]
    fn dual_family_matches_kernel() {
        let mut rng = ChaCha8Rng::seed_from_u64(44);
        let mut seen = HashSet::new();
        for (p, m) in [(11u64, 1u32), (13, 1), (2, 4), (3, 2)] {
            let f = Field::new(p, m, None).unwrap();
            for _ in 0..40 {
                let n = rng.gen_range(5..=f.order().min(10) as usize);
                let k = rng.gen_range(3..=n - 2);
                let mut spec = TwistedSpec::random(&f, n, k, false, &mut rng).unwrap();
                if rng.gen_bool(0.3) {
                    // steer into the Han-Zhang case when the sum is nonzero
                    let s = spec.sum_of_points();
                    if !s.is_zero() {
                        spec.eta = f.neg(f.inv(s).unwrap());
                    }
                }
                let fam = dual_family(&spec).unwrap();
                seen.insert(fam.kind);
                assert_eq!(fam.code, tgrs(&spec).unwrap().dual(0).unwrap());
            }
        }
        assert!(seen.contains(&DualKind::HanZhang));
        assert!(seen.contains(&DualKind::TgrsShifted));
    }

    #[test]
    fn negated_twist_when_sum_vanishes() {
        let f = Field::prime(11).unwrap();
        // 1 + 2 + 3 + 4 + 5 + 7 = 22 = 0 in GF(11)
        let pts = ints(&f, &[1, 2, 3, 4, 5, 7]);
        let spec = TwistedSpec::with_unit_v(&f, pts, f.from_int(3), 3, false).unwrap();
        let fam = dual_family(&spec).unwrap();
        assert_eq!(fam.kind, DualKind::TgrsNegated);
        assert_eq!(fam.twist, Some(f.from_int(-3)));
    }
}
