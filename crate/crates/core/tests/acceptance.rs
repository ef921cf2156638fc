//! Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
//! criterion fails.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use common::*;
use tgrs_core::code::weight;
use tgrs_core::covering::{
    covering_radius, deep_hole_vector, error_distance, is_deep_hole, second_extension_of_tgrs,
    DeepHoleSpec,
};
use tgrs_core::ecp::{build_ecp, decode_traced, verify_pair_for, EcpDecoder, Parity};
use tgrs_core::equivalence::{exhaustive_grs_search, schur_certificate, SearchOptions, VerdictTag};
use tgrs_core::twisted::{
    classify_twisted, dual_family, etgrs, etgrs_generator, etgrs_parity_check,
    predicted_dual_schur_square, tgrs, tgrs_generator, w_vector,
};
use tgrs_core::{DecodeOutcome, DeepHoleClass, Elem, Error, Field, SingletonTag, TwistedSpec};

type Check = fn() -> Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn within(start: Instant, limit: Duration) -> Result<(), String> {
    let took = start.elapsed();
    if took > limit {
        Err(format!("took {took:.2?}, limit {limit:?}"))
    } else {
        Ok(())
    }
}

fn sorted_values(set: &[Elem]) -> Vec<u32> {
    let mut v: Vec<u32> = set.iter().map(|a| a.value()).collect();
    v.sort_unstable();
    v
}

fn add(f: &Field, x: &[Elem], y: &[Elem]) -> Vec<Elem> {
    x.iter().zip(y).map(|(&a, &b)| f.add(a, b)).collect()
}

fn ac1() -> Result<String, String> {
    let start = Instant::now();
    let spec = grs_equivalent();
    let class = classify_twisted(&spec).map_err(|e| e.to_string())?;
    ensure!(
        (class.tag, class.n, class.k, class.d) == (SingletonTag::Mds, 6, 3, 4),
        "classified {class:?}"
    );
    let opts = SearchOptions {
        collect_all: true,
        ..SearchOptions::default()
    };
    let verdict = exhaustive_grs_search(&tgrs(&spec).unwrap(), opts).map_err(|e| e.to_string())?;
    ensure!(verdict.tag == VerdictTag::EquivalentToGrs, "verdict {:?}", verdict.tag);
    let found: Vec<Vec<u32>> = verdict.equivalent_sets.iter().map(|s| sorted_values(s)).collect();
    let printed = [
        [1, 2, 5, 6, 9, 10],
        [2, 3, 4, 7, 8, 9],
        [1, 3, 5, 6, 8, 10],
        [3, 4, 5, 6, 7, 8],
        [1, 2, 4, 7, 9, 10],
    ];
    for s in printed {
        ensure!(found.contains(&s.to_vec()), "set {s:?} not among equivalent sets");
    }
    within(start, Duration::from_secs(600))?;
    Ok(format!(
        "MDS [6,3,4]; equivalent to GRS on {} of {} sets, all five printed sets present",
        found.len(),
        verdict.candidates_tested
    ))
}

fn ac2() -> Result<String, String> {
    let start = Instant::now();
    let spec = non_grs_tgrs();
    ensure!(
        classify_twisted(&spec).unwrap().tag == SingletonTag::Mds,
        "not classified MDS"
    );
    let c = tgrs(&spec).unwrap();
    let cert = schur_certificate(&c).map_err(|e| e.to_string())?;
    ensure!(cert.square_dim == Some(6), "dim(C^2) = {:?}", cert.square_dim);
    let verdict = exhaustive_grs_search(&c, SearchOptions::default()).map_err(|e| e.to_string())?;
    ensure!(verdict.tag == VerdictTag::CertifiedNonGrs, "verdict {:?}", verdict.tag);
    within(start, Duration::from_secs(900))?;
    Ok(format!(
        "MDS; dim(C^2) = 6 != 5; none of {} GRS codes equivalent",
        verdict.candidates_tested
    ))
}

fn ac3() -> Result<String, String> {
    let start = Instant::now();
    let spec = non_grs_etgrs();
    let class = classify_twisted(&spec).unwrap();
    ensure!(
        (class.tag, class.n, class.k, class.d) == (SingletonTag::Mds, 6, 3, 4),
        "classified {class:?}"
    );
    let c = etgrs(&spec).unwrap();
    ensure!(c.min_distance().unwrap() == 4, "enumerated distance differs");
    let verdict = exhaustive_grs_search(&c, SearchOptions::default()).map_err(|e| e.to_string())?;
    ensure!(verdict.tag == VerdictTag::CertifiedNonGrs, "verdict {:?}", verdict.tag);
    within(start, Duration::from_secs(900))?;
    Ok(format!(
        "MDS [6,3,4]; none of {} GRS codes equivalent",
        verdict.candidates_tested
    ))
}

fn ac4() -> Result<String, String> {
    let start = Instant::now();
    let spec = decoding_spec();
    let f = &spec.field;
    let v = |s: &str| f.parse_vector(s).unwrap();
    let (out, tr) = decode_traced(&spec, &received_word()).map_err(|e| e.to_string())?;
    ensure!(tr.syndrome == v("w^13,w,w^14,1,w^4,w^3,w^6"), "syndrome {:?}", f.format_vector(&tr.syndrome));
    let expected_u = v("1,w^4,w^3,w^12");
    let in_kernel = tr.kernel_basis.len() == 1
        && f.elements().iter().skip(1).any(|&a| {
            expected_u.iter().map(|&x| f.mul(a, x)).collect::<Vec<_>>() == tr.kernel_basis[0]
        });
    ensure!(in_kernel, "kernel basis {:?}", tr.kernel_basis);
    ensure!(tr.zero_set == vec![2, 5, 7], "Z = {:?}", tr.zero_set);
    let DecodeOutcome::Codeword { codeword, error } = out else {
        return Err(format!("outcome {}", out.tag()));
    };
    ensure!(
        error == v("0,w^9,0,0,w^4,0,w^10,0,0,0,0,0"),
        "error {:?}",
        f.format_vector(&error)
    );
    ensure!(
        codeword == v("w^13,w^13,w^2,w^10,w^8,w^6,w^6,w^2,w^5,w^4,0,1"),
        "codeword {:?}",
        f.format_vector(&codeword)
    );
    let h = etgrs_parity_check(&spec).unwrap();
    ensure!(h.mul_vec(&codeword).unwrap().iter().all(|a| a.is_zero()), "H c != 0");
    within(start, Duration::from_secs(1))?;
    Ok("syndrome, kernel, Z = {2,5,7}, error values and codeword as printed; H c = 0".into())
}

fn ac5() -> Result<String, String> {
    let start = Instant::now();
    let spec = han_zhang_spec();
    let f = &spec.field;
    let hz = dual_family(&spec).unwrap().code;
    let radius = covering_radius(&hz).map_err(|e| e.to_string())?;
    ensure!(radius == 3, "covering radius {radius}");
    let u = deep_hole_vector(&spec, DeepHoleClass::One).unwrap();
    ensure!(u == ints(f, &[4, 3, 12, 12, 3, 9]), "u = {:?}", f.format_vector(&u));
    let d = error_distance(&u, &hz).unwrap();
    ensure!(d == 3, "error distance {d}");
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..20 {
        let a = f.random_nonzero(&mut rng);
        let msg: Vec<Elem> = (0..hz.k()).map(|_| f.random(&mut rng)).collect();
        let c = hz.encode(&msg).unwrap();
        let member: Vec<Elem> = u.iter().zip(&c).map(|(&x, &y)| f.mul_add(y, a, x)).collect();
        ensure!(is_deep_hole(&member, &hz).unwrap(), "a*u + c not a deep hole");
    }
    within(start, Duration::from_secs(300))?;
    Ok("radius 3; d(u, HZ_3) = 3; 20/20 sampled a*u + c are deep holes".into())
}

fn ac6() -> Result<String, String> {
    let start = Instant::now();
    let fields = [
        Field::prime(11).unwrap(),
        Field::prime(13).unwrap(),
        Field::new(2, 4, None).unwrap(),
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut ok = 0;
    let mut parities = [0usize; 2];
    for draw in 0..100 {
        let f = &fields[draw % 3];
        let n = rng.gen_range(7..=f.order().min(14) as usize);
        // alternate the parity of n - k
        let mut k = rng.gen_range(3..=n - 2);
        if (n - k) % 2 != draw % 2 {
            k = if k > 3 { k - 1 } else { k + 1 };
        }
        let spec = TwistedSpec::random(f, n, k, true, &mut rng).unwrap();
        let dec = EcpDecoder::new(&spec).unwrap();
        parities[usize::from(dec.parity() == Parity::Even)] += 1;
        let code = etgrs(&spec).unwrap();
        let msg: Vec<Elem> = (0..k).map(|_| f.random(&mut rng)).collect();
        let c = code.encode(&msg).unwrap();
        let wt = rng.gen_range(1..=dec.t());
        let mut e = vec![Elem::ZERO; n + 1];
        for j in sample(&mut rng, n + 1, wt) {
            e[j] = f.random_nonzero(&mut rng);
        }
        let out = dec.decode(&add(f, &c, &e)).unwrap();
        if out == (DecodeOutcome::Codeword { codeword: c, error: e }) {
            ok += 1;
        }
    }
    ensure!(ok == 100, "{ok}/100 recovered");
    ensure!(parities[0] > 0 && parities[1] > 0, "parities {parities:?}");
    within(start, Duration::from_secs(120))?;
    Ok(format!(
        "100/100 exact recoveries ({} odd, {} even n-k)",
        parities[0], parities[1]
    ))
}

fn ac7() -> Result<String, String> {
    let fields = [
        Field::prime(5).unwrap(),
        Field::prime(7).unwrap(),
        Field::new(2, 3, None).unwrap(),
        Field::new(3, 2, None).unwrap(),
        Field::prime(11).unwrap(),
        Field::prime(13).unwrap(),
        Field::new(2, 4, None).unwrap(),
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for round in 0..50 {
        let f = &fields[round % fields.len()];
        let n = rng.gen_range(3..=12.min(f.order() as usize));
        let elems = f.elements();
        let points: Vec<Elem> = sample(&mut rng, elems.len(), n).iter().map(|i| elems[i]).collect();
        let w = w_vector(f, &points).unwrap();
        let sigma = points.iter().fold(Elem::ZERO, |s, &a| f.add(s, a));
        for l in 0..=n {
            let s = points
                .iter()
                .zip(&w)
                .fold(Elem::ZERO, |s, (&a, &x)| f.mul_add(s, f.pow_u(a, l as u64), x));
            let expected = if l + 2 <= n {
                Elem::ZERO
            } else if l + 1 == n {
                Elem::ONE
            } else {
                sigma
            };
            ensure!(s == expected, "n = {n}, l = {l} over {f}");
        }
    }
    Ok("50/50 evaluation sets satisfy the three power-sum regimes".into())
}

fn ac8() -> Result<String, String> {
    let fields = [Field::prime(13).unwrap(), Field::new(2, 4, None).unwrap()];
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut regimes = [0usize; 2];
    for round in 0..20 {
        let f = &fields[round % 2];
        let n = rng.gen_range(6..=10);
        let k = rng.gen_range(3..=n - 2);
        let spec = TwistedSpec::random(f, n, k, true, &mut rng).unwrap();
        let sq = etgrs(&spec).unwrap().euclidean_dual().schur_square();
        if 2 * k <= n + 1 {
            regimes[0] += 1;
            ensure!(sq.k() == n + 1, "rank {} for n = {n}, k = {k}", sq.k());
        } else {
            regimes[1] += 1;
            ensure!(
                sq == predicted_dual_schur_square(&spec).unwrap(),
                "structure differs for n = {n}, k = {k}"
            );
        }
    }
    ensure!(regimes[0] > 0 && regimes[1] > 0, "regimes {regimes:?}");
    Ok(format!(
        "20/20 ({} full-space, {} split-structure cases)",
        regimes[0], regimes[1]
    ))
}

fn ac9() -> Result<String, String> {
    let fields = [
        Field::prime(11).unwrap(),
        Field::prime(13).unwrap(),
        Field::new(2, 4, None).unwrap(),
        Field::new(3, 2, None).unwrap(),
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let (mut checked, mut unavailable) = (0, 0);
    for round in 0..50 {
        let f = &fields[round % fields.len()];
        let n = rng.gen_range(5..=f.order().min(12) as usize);
        let k = rng.gen_range(3..=n - 2);
        let spec = TwistedSpec::random(f, n, k, false, &mut rng).unwrap();
        let g = tgrs_generator(&spec).unwrap();
        let mut unit = vec![Elem::ZERO; k];
        unit[k - 1] = Elem::ONE;
        let ext = etgrs(&spec.as_extended(true)).unwrap();
        for class in [DeepHoleClass::One, DeepHoleClass::Two] {
            match DeepHoleSpec::new(&spec, class) {
                Ok(h) => {
                    ensure!(g.mul_vec(&h.u).unwrap() == unit, "G u != e_k ({class})");
                    ensure!(
                        second_extension_of_tgrs(&spec, class).unwrap() == ext,
                        "extension differs ({class})"
                    );
                    checked += 1;
                }
                Err(Error::Class2Unavailable) => unavailable += 1,
                Err(e) => return Err(e.to_string()),
            }
        }
    }
    Ok(format!(
        "50 specs: {checked} extensions equal ETGRS with G u = e_k; {unavailable} class-2 cases excluded by 1 + eta sum(S) = 0"
    ))
}

fn ac10() -> Result<String, String> {
    let fields = [
        Field::prime(11).unwrap(),
        Field::prime(13).unwrap(),
        Field::new(2, 4, None).unwrap(),
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let mut parities = [0usize; 2];
    for round in 0..50 {
        let f = &fields[round % 3];
        let n = rng.gen_range(6..=10);
        let k = rng.gen_range(3..=n - 2);
        let spec = TwistedSpec::random(f, n, k, true, &mut rng).unwrap();
        let pair = build_ecp(&spec).unwrap();
        parities[usize::from(pair.parity == Parity::Even)] += 1;
        let report = verify_pair_for(&spec, &pair).map_err(|e| e.to_string())?;
        ensure!(report.all(), "n = {n}, k = {k}: {report:?}");
    }
    ensure!(parities[0] > 0 && parities[1] > 0, "parities {parities:?}");
    Ok(format!(
        "50/50 pairs satisfy all four conditions ({} odd, {} even n-k)",
        parities[0], parities[1]
    ))
}

const V_SAMPLE: usize = 10_000;

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Multipliers with `v_1 = 1`: all of them when there are at most
/// `V_SAMPLE`, otherwise a seeded sample of that size. Self-duality is
/// unchanged by a common scalar, so this covers every projective class.
fn multiplier_sample(f: &Field, n: usize, seed: u64) -> Vec<Vec<Elem>> {
    let nonzero: Vec<Elem> = f.elements().into_iter().skip(1).collect();
    let total = nonzero.len().pow(n as u32 - 1);
    if total <= V_SAMPLE {
        (0..total)
            .map(|mut idx| {
                let mut v = vec![Elem::ONE];
                for _ in 1..n {
                    v.push(nonzero[idx % nonzero.len()]);
                    idx /= nonzero.len();
                }
                v
            })
            .collect()
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        (0..V_SAMPLE)
            .map(|_| {
                let mut v = vec![Elem::ONE];
                v.extend((1..n).map(|_| f.random_nonzero(&mut rng)));
                v
            })
            .collect()
    }
}

/// Whether `G * frob_e(G)^T = 0` for the extended generator with
/// multipliers `v`, with the v-free products precomputed.
struct GramTable {
    k: usize,
    /// `prod[(i * k + l) * n + j] = r_i(a_j) * frob(r_l(a_j))`
    prod: Vec<Elem>,
    n: usize,
}

impl GramTable {
    fn new(f: &Field, points: &[Elem], eta: Elem, k: usize, e: u32) -> GramTable {
        let n = points.len();
        let ones = vec![Elem::ONE; n];
        let spec = TwistedSpec {
            field: f.clone(),
            points: points.to_vec(),
            v: ones,
            eta,
            k,
            extended: false,
        };
        let g = tgrs_generator(&spec).unwrap();
        let mut prod = Vec::with_capacity(k * k * n);
        for i in 0..k {
            for l in 0..k {
                for j in 0..n {
                    prod.push(f.mul(g.get(i, j), f.frobenius(g.get(l, j), e).unwrap()));
                }
            }
        }
        GramTable { k, prod, n }
    }

    /// Entries of `G * frob_e(G)^T`, row-major.
    fn gram(&self, f: &Field, vv: &[Elem]) -> Vec<Elem> {
        (0..self.k * self.k)
            .map(|il| self.entry(f, vv, il))
            .collect()
    }

    fn entry(&self, f: &Field, vv: &[Elem], il: usize) -> Elem {
        let base = il * self.n;
        // the appended unit column only meets itself
        let start = if il + 1 == self.k * self.k { Elem::ONE } else { Elem::ZERO };
        (0..self.n).fold(start, |s, j| f.mul_add(s, vv[j], self.prod[base + j]))
    }

    fn self_orthogonal(&self, f: &Field, vv: &[Elem]) -> bool {
        (0..self.k * self.k).all(|il| self.entry(f, vv, il).is_zero())
    }
}

fn ac11() -> Result<String, String> {
    let start = Instant::now();
    let mut lines = Vec::new();
    let mut total_checks: u64 = 0;
    let mut found = 0usize;
    for (p, m) in [(2u64, 2u32), (2, 3), (3, 2)] {
        let f = Field::new(p, m, None).unwrap();
        let q = f.order() as usize;
        for k in [3usize, 4] {
            let n = 2 * k - 1;
            if n > q {
                lines.push(format!("GF({q}) k={k}: no evaluation set of size {n}"));
                continue;
            }
            let elems = f.elements();
            let mut points_list = Vec::new();
            for set in subsets(q, n) {
                for eta in elems.iter().skip(1) {
                    points_list.push((set.iter().map(|&i| elems[i]).collect::<Vec<_>>(), *eta));
                }
            }
            let vs = multiplier_sample(&f, n, 11 + q as u64 * 10 + k as u64);
            let counts: Vec<(u64, usize)> = points_list
                .par_iter()
                .map(|(points, eta)| {
                    let mut checks = 0u64;
                    let mut hits = 0usize;
                    for e in 0..m {
                        let table = GramTable::new(&f, points, *eta, k, e);
                        for v in &vs {
                            let vv: Vec<Elem> = v
                                .iter()
                                .map(|&x| f.mul(x, f.frobenius(x, e).unwrap()))
                                .collect();
                            checks += 1;
                            if table.self_orthogonal(&f, &vv) {
                                hits += 1;
                            }
                        }
                    }
                    (checks, hits)
                })
                .collect();
            let (checks, hits) = counts
                .iter()
                .fold((0, 0), |(c, h), &(c2, h2)| (c + c2, h + h2));
            total_checks += checks;
            found += hits;
            lines.push(format!(
                "GF({q}) k={k}: {} (S, eta) points x {} v x {m} e",
                points_list.len(),
                vs.len()
            ));
        }
    }
    // the fast Gram test against direct matrix products
    let f = Field::new(3, 2, None).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(111);
    for _ in 0..200 {
        let spec = TwistedSpec::random(&f, 5, 3, true, &mut rng).unwrap();
        let code = etgrs(&spec).unwrap();
        for e in 0..2 {
            let table = GramTable::new(&f, &spec.points, spec.eta, 3, e);
            let vv: Vec<Elem> = spec
                .v
                .iter()
                .map(|&x| f.mul(x, f.frobenius(x, e).unwrap()))
                .collect();
            let g = etgrs_generator(&spec).unwrap();
            let ge = g.map(|a| f.frobenius(a, e).unwrap());
            let direct = g.matmul(&ge.transpose()).unwrap();
            let direct: Vec<Elem> = direct.to_rows().concat();
            ensure!(table.gram(&f, &vv) == direct, "Gram table disagrees with G frob(G)^T");
            ensure!(
                table.self_orthogonal(&f, &vv) == code.is_self_dual(e).unwrap(),
                "fast test disagrees with is_self_dual"
            );
        }
    }
    ensure!(found == 0, "{found} self-dual instances found");
    within(start, Duration::from_secs(600))?;
    Ok(format!(
        "0 self-dual among {total_checks} sampled checks [{}]",
        lines.join("; ")
    ))
}

fn ac12() -> Result<String, String> {
    let start = Instant::now();
    let f = Field::new(2, 3, None).unwrap();
    let points = f.elements();
    for eta in points.iter().skip(1) {
        let spec = TwistedSpec::with_unit_v(&f, points.clone(), *eta, 4, false).unwrap();
        let class = classify_twisted(&spec).unwrap();
        ensure!(class.tag == SingletonTag::Nmds, "eta = {} gives {}", f.format(*eta), class.tag);
    }
    within(start, Duration::from_secs(1))?;
    // independent confirmation by enumeration, outside the time bound
    for eta in points.iter().skip(1) {
        let spec = TwistedSpec::with_unit_v(&f, points.clone(), *eta, 4, false).unwrap();
        let d = tgrs(&spec).unwrap().min_distance().unwrap();
        ensure!(d == 4, "enumerated distance {d} for eta = {}", f.format(*eta));
    }
    Ok("all 7 values of eta give NMDS [8,4,4] (rule and enumeration agree)".into())
}

/// Median wall time of decoding words with `t` errors each, for a random
/// extended code of length n + 1 and dimension k. With `prebuilt` the
/// decoder's matrices are built once per code and only the per-word work is
/// timed; otherwise every call builds them.
fn decode_time(f: &Field, n: usize, k: usize, prebuilt: bool, rng: &mut ChaCha8Rng) -> Duration {
    let reps = 31;
    let spec = TwistedSpec::random(f, n, k, true, rng).unwrap();
    let code = etgrs(&spec).unwrap();
    let dec = EcpDecoder::new(&spec).unwrap();
    let t = dec.t();
    let mut times = Vec::with_capacity(reps);
    for _ in 0..reps {
        let msg: Vec<Elem> = (0..k).map(|_| f.random(rng)).collect();
        let c = code.encode(&msg).unwrap();
        let mut e = vec![Elem::ZERO; n + 1];
        for j in sample(rng, n + 1, t) {
            e[j] = f.random_nonzero(rng);
        }
        let y = add(f, &c, &e);
        let start = Instant::now();
        let out = if prebuilt {
            dec.decode(&y).unwrap()
        } else {
            tgrs_core::ecp::decode(&spec, &y).unwrap()
        };
        times.push(start.elapsed());
        assert!(matches!(out, DecodeOutcome::Codeword { .. }));
        assert_eq!(weight(&e), t);
    }
    times.sort();
    times[reps / 2]
}

fn log_log_slope(ns: &[usize], times: &[Duration]) -> f64 {
    let pts: Vec<(f64, f64)> = ns
        .iter()
        .zip(times)
        .map(|(&n, d)| ((n as f64).ln(), d.as_secs_f64().ln()))
        .collect();
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / pts.len() as f64;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / pts.len() as f64;
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
    sxy / sxx
}

/// The fitted configuration is the worst case for the error radius: k = 3
/// gives the largest t, and the code-only matrices are built once. The
/// one-shot k = n/2 slope is reported alongside; its quadratic setup cost
/// still dominates at these lengths.
fn scaling() -> Result<String, String> {
    let f = Field::new(2, 8, None).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(256);
    let ns = [16usize, 32, 64, 128];
    decode_time(&f, 16, 3, true, &mut rng);
    let worst: Vec<Duration> = ns.iter().map(|&n| decode_time(&f, n, 3, true, &mut rng)).collect();
    let half: Vec<Duration> = ns
        .iter()
        .map(|&n| decode_time(&f, n, n / 2, false, &mut rng))
        .collect();
    let slope = log_log_slope(&ns, &worst);
    let times: Vec<String> = ns
        .iter()
        .zip(&worst)
        .map(|(n, d)| format!("n={n}: {:.3}ms", d.as_secs_f64() * 1e3))
        .collect();
    let detail = format!(
        "slope {slope:.2} at k=3 per word ({}); one-shot k=n/2 slope {:.2}",
        times.join(", "),
        log_log_slope(&ns, &half)
    );
    ensure!((2.5..=3.5).contains(&slope), "{detail} outside 3.0 +/- 0.5");
    Ok(detail)
}

fn main() -> ExitCode {
    let checks: [(&str, &str, Check); 13] = [
        ("AC1", "GRS-equivalent twisted code over GF(11)", ac1),
        ("AC2", "non-GRS MDS twisted code over GF(13)", ac2),
        ("AC3", "non-GRS MDS extended code over GF(11)", ac3),
        ("AC4", "decoding trace over GF(16)", ac4),
        ("AC5", "Han-Zhang covering radius and deep holes", ac5),
        ("AC6", "decode round trip", ac6),
        ("AC7", "power sums of w", ac7),
        ("AC8", "Schur square of the extended dual", ac8),
        ("AC9", "second extension equals the extended code", ac9),
        ("AC10", "error-correcting pair conditions", ac10),
        ("AC11", "no Galois self-dual extended codes (sampled)", ac11),
        ("AC12", "S = GF(8), k = 4 is always NMDS", ac12),
        ("SCALING", "decode time is cubic in n over GF(256)", scaling),
    ];
    let mut failed = 0;
    for (id, title, check) in checks {
        let start = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(check))
            .unwrap_or_else(|_| Err("panicked".to_string()));
        let took = start.elapsed();
        match result {
            Ok(detail) => println!("PASS {id} {title} [{took:.2?}]: {detail}"),
            Err(why) => {
                failed += 1;
                println!("FAIL {id} {title} [{took:.2?}]: {why}");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
