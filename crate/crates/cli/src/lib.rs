//! Front end for `tgrs-core`. [`run`] takes argv and writes to the given
//! streams, returning the process exit code.

pub mod report;

use std::io::{Read, Write};

use clap::{Args, Parser, Subcommand};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use tgrs_core::code::DEFAULT_ENUMERATION_CAP;
use tgrs_core::covering::{CosetLeaders, DEFAULT_SYNDROME_CAP};
use tgrs_core::ecp::{build_ecp, verify_pair_for, EcpDecoder};
use tgrs_core::equivalence::{
    exhaustive_grs_search, monomial_equivalent, schur_certificate, SearchOptions, VerdictTag,
    Witness, DEFAULT_SEARCH_BUDGET,
};
use tgrs_core::json::{parse_input, Input};
use tgrs_core::twisted::{
    classify_twisted_with_cap, dual_family, etgrs_parity_check, generator, nmds_witness, tgrs,
    twisted_code, DEFAULT_COMBINATORIAL_CAP,
};
use tgrs_core::{
    DecodeOutcome, DeepHoleClass, DeepHoleSpec, Elem, Error, Field, LinearCode, TwistedSpec,
};

use report::*;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_DECODE_FAILURE: i32 = 2;
pub const EXIT_INCONCLUSIVE: i32 = 3;
pub const EXIT_BAD_INPUT: i32 = 64;
pub const EXIT_CAP: i32 = 65;

#[derive(Parser, Debug)]
#[command(name = "tgrs", version, about = "Twisted GRS codes: construction, classification, decoding, deep holes")]
struct Cli {
    /// Spec or code JSON file, `-` for standard input.
    #[arg(long, global = true, value_name = "FILE")]
    spec: Option<String>,
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Seed for the randomized sub-sampling commands.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Overrides the enumeration, subset-sum, syndrome and search limits.
    #[arg(long, global = true)]
    cap: Option<u128>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Singleton class (MDS, AMDS, NMDS, OTHER) with parameters.
    Classify,
    /// Generator and parity-check matrices.
    Matrices,
    /// Decode a received word of the extended code with its ECP.
    Decode {
        /// Comma-separated field elements.
        #[arg(long, allow_hyphen_values = true)]
        received: String,
    },
    #[command(subcommand)]
    Ecp(EcpCommand),
    /// Schur square of the code or of its dual.
    Schur {
        #[arg(long)]
        dual: bool,
        #[arg(long)]
        dim: bool,
        #[arg(long)]
        dist: bool,
    },
    #[command(subcommand)]
    Equiv(EquivCommand),
    #[command(subcommand)]
    Deephole(DeepholeCommand),
    /// Covering radius. For a spec, of the dual of the non-extended code.
    Radius {
        /// Measure the twisted code itself instead of its dual.
        #[arg(long)]
        code: bool,
    },
}

#[derive(Subcommand, Debug)]
enum EcpCommand {
    /// Generators of the pair (A, B).
    Build,
    /// Check the four pair conditions.
    Verify,
}

#[derive(Subcommand, Debug)]
enum EquivCommand {
    /// Decide GRS-equivalence: Schur certificate, then exhaustive search.
    Search {
        /// Report every equivalent evaluation set.
        #[arg(long)]
        all: bool,
    },
    /// Monomial equivalence with another descriptor.
    Pair { other: String },
}

#[derive(Args, Debug)]
struct ClassArg {
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=2))]
    class: u8,
}

#[derive(Subcommand, Debug)]
enum DeepholeCommand {
    /// Deep hole of the dual of the non-extended code.
    Vector {
        #[command(flatten)]
        class: ClassArg,
    },
    /// Radius of the dual, distance of the vector, deep-hole verdict.
    Check {
        #[command(flatten)]
        class: ClassArg,
        /// Check this vector instead of the constructed one.
        #[arg(long, allow_hyphen_values = true)]
        vector: Option<String>,
        /// Also test this many random `a*u + c`; needs `--seed`.
        #[arg(long, default_value_t = 0)]
        samples: usize,
    },
}

/// An error with the exit code it maps to.
#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::EnumerationCapExceeded { .. }
            | Error::CombinatorialCapExceeded { .. }
            | Error::BudgetExceeded { .. } => EXIT_CAP,
            _ => EXIT_BAD_INPUT,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn bad_input(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_BAD_INPUT,
        message: message.into(),
    }
}

type Outcome = std::result::Result<(String, i32), Failure>;

struct Ctx {
    json: bool,
    seed: Option<u64>,
    cap: Option<u128>,
}

impl Ctx {
    fn cap_or(&self, default: u128) -> u128 {
        self.cap.unwrap_or(default)
    }

    fn emit<T: Serialize + std::fmt::Display>(&self, value: &T, code: i32) -> Outcome {
        let text = if self.json {
            serde_json::to_string_pretty(value).expect("plain data")
        } else {
            value.to_string()
        };
        Ok((text, code))
    }
}

/// Runs one invocation. `stdin` is read only for `--spec -`.
pub fn run<I, S>(args: I, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_BAD_INPUT } else { EXIT_OK };
            let rendered = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(err, "{rendered}");
            } else {
                let _ = write!(out, "{rendered}");
            }
            return code;
        }
    };
    match dispatch(cli, stdin) {
        Ok((text, code)) => {
            let _ = writeln!(out, "{}", text.trim_end());
            code
        }
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn read_descriptor(path: &str, stdin: &mut dyn Read) -> std::result::Result<Input, Failure> {
    let text = if path == "-" {
        let mut s = String::new();
        stdin
            .read_to_string(&mut s)
            .map_err(|e| bad_input(format!("reading standard input: {e}")))?;
        s
    } else {
        std::fs::read_to_string(path).map_err(|e| bad_input(format!("reading {path}: {e}")))?
    };
    Ok(parse_input(&text)?)
}

fn dispatch(cli: Cli, stdin: &mut dyn Read) -> Outcome {
    let path = cli
        .spec
        .as_deref()
        .ok_or_else(|| bad_input("--spec <FILE> is required"))?;
    let input = read_descriptor(path, stdin)?;
    let ctx = Ctx {
        json: cli.json,
        seed: cli.seed,
        cap: cli.cap,
    };
    match cli.command {
        Command::Classify => classify(&ctx, &input),
        Command::Matrices => matrices(&ctx, &input),
        Command::Decode { received } => decode(&ctx, need_spec(&input, "decode")?, &received),
        Command::Ecp(EcpCommand::Build) => ecp_build(&ctx, need_spec(&input, "ecp")?),
        Command::Ecp(EcpCommand::Verify) => ecp_verify(&ctx, need_spec(&input, "ecp")?),
        Command::Schur { dual, dim, dist } => schur(&ctx, &input, dual, dim, dist),
        Command::Equiv(EquivCommand::Search { all }) => equiv_search(&ctx, &input, all),
        Command::Equiv(EquivCommand::Pair { other }) => {
            let other = read_descriptor(&other, stdin)?;
            equiv_pair(&ctx, &input, &other)
        }
        Command::Deephole(DeepholeCommand::Vector { class }) => {
            hole_vector(&ctx, need_spec(&input, "deephole")?, class.class)
        }
        Command::Deephole(DeepholeCommand::Check {
            class,
            vector,
            samples,
        }) => hole_check(
            &ctx,
            need_spec(&input, "deephole")?,
            class.class,
            vector.as_deref(),
            samples,
        ),
        Command::Radius { code } => radius(&ctx, &input, code),
    }
}

fn need_spec<'a>(input: &'a Input, verb: &str) -> std::result::Result<&'a TwistedSpec, Failure> {
    match input {
        Input::Spec(s) => Ok(s),
        Input::Code(_) => Err(bad_input(format!("{verb} needs a twisted spec, not a generator"))),
    }
}

fn strings(f: &Field, v: &[Elem]) -> Vec<String> {
    f.format_vector(v)
}

fn classify(ctx: &Ctx, input: &Input) -> Outcome {
    let report = match input {
        Input::Spec(spec) => {
            let cap = ctx.cap_or(DEFAULT_COMBINATORIAL_CAP);
            let class = classify_twisted_with_cap(spec, cap)?;
            let witness = nmds_witness(spec, cap)?
                .map(|idx| idx.iter().map(|&i| spec.field.format(spec.points[i])).collect());
            Classification {
                field: spec.field.to_string(),
                tag: class.tag.to_string(),
                n: class.n,
                k: class.k,
                d: class.d,
                dual_d: class.dual_d,
                witness,
            }
        }
        Input::Code(c) => {
            let class = c.classify_singleton_with_cap(ctx.cap_or(DEFAULT_ENUMERATION_CAP))?;
            Classification {
                field: c.field().to_string(),
                tag: class.tag.to_string(),
                n: class.n,
                k: class.k,
                d: class.d,
                dual_d: class.dual_d,
                witness: None,
            }
        }
    };
    ctx.emit(&report, EXIT_OK)
}

fn matrices(ctx: &Ctx, input: &Input) -> Outcome {
    let (g, h) = match input {
        Input::Spec(spec) => {
            let h = if spec.extended {
                etgrs_parity_check(spec)?
            } else {
                tgrs(spec)?.parity_check().clone()
            };
            (generator(spec)?, h)
        }
        Input::Code(c) => (c.generator().clone(), c.parity_check().clone()),
    };
    let report = Matrices {
        generator: g.to_strings(),
        parity_check: h.to_strings(),
    };
    ctx.emit(&report, EXIT_OK)
}

fn decode(ctx: &Ctx, spec: &TwistedSpec, received: &str) -> Outcome {
    let f = &spec.field;
    let y = f.parse_vector(received)?;
    let (outcome, tr) = EcpDecoder::new(spec)?.decode_traced(&y)?;
    let code = match outcome {
        DecodeOutcome::TooManyErrors => EXIT_DECODE_FAILURE,
        _ => EXIT_OK,
    };
    let report = DecodeReport {
        outcome: outcome.tag().to_string(),
        t: tr.t,
        syndrome: strings(f, &tr.syndrome),
        kernel_basis: tr.kernel_basis.iter().map(|u| strings(f, u)).collect(),
        u_prime: strings(f, &tr.u_prime),
        locator: strings(f, &tr.locator),
        zero_set: tr.zero_set.clone(),
        error: strings(f, &tr.error),
        codeword: strings(f, &tr.codeword),
    };
    ctx.emit(&report, code)
}

fn ecp_build(ctx: &Ctx, spec: &TwistedSpec) -> Outcome {
    let pair = build_ecp(spec)?;
    let report = EcpBuild {
        t: pair.t,
        parity: serde_json::to_value(pair.parity)
            .ok()
            .and_then(|v| v.as_str().map(str::to_string))
            .unwrap_or_default(),
        dim_a: pair.a.k(),
        dim_b: pair.b.k(),
        generator_a: pair.a.generator().to_strings(),
        generator_b: pair.b.generator().to_strings(),
    };
    ctx.emit(&report, EXIT_OK)
}

fn ecp_verify(ctx: &Ctx, spec: &TwistedSpec) -> Outcome {
    let pair = build_ecp(spec)?;
    let r = verify_pair_for(spec, &pair)?;
    let report = EcpVerify {
        t: pair.t,
        product_in_dual: r.product_in_dual,
        dual_distance_of_b: r.dual_distance_of_b,
        dimension_of_a: r.dimension_of_a,
        distance_sum: r.distance_sum,
        all: r.all(),
    };
    let code = if r.all() { EXIT_OK } else { EXIT_FAILED };
    ctx.emit(&report, code)
}

fn schur(ctx: &Ctx, input: &Input, dual: bool, dim: bool, dist: bool) -> Outcome {
    let c = input.code()?;
    let base = if dual { c.euclidean_dual() } else { c };
    let sq = base.schur_square();
    // with neither flag the dimension is the cheap default
    let want_dim = dim || !dist;
    let distance = if dist {
        Some(sq.min_distance_with_cap(ctx.cap_or(DEFAULT_ENUMERATION_CAP))?)
    } else {
        None
    };
    let report = SchurReport {
        of: if dual { "dual" } else { "code" }.to_string(),
        n: base.n(),
        k: base.k(),
        dim: want_dim.then(|| sq.k()),
        distance,
    };
    ctx.emit(&report, EXIT_OK)
}

fn witness_report(f: &Field, w: &Witness) -> WitnessReport {
    WitnessReport {
        perm: w.perm.clone(),
        scales: strings(f, &w.scales),
    }
}

fn verdict_name(tag: VerdictTag) -> String {
    serde_json::to_value(tag)
        .ok()
        .and_then(|v| v.as_str().map(str::to_string))
        .unwrap_or_default()
}

fn equiv_search(ctx: &Ctx, input: &Input, all: bool) -> Outcome {
    let c = input.code()?;
    let f = c.field().clone();
    let cert = schur_certificate(&c)?;
    let opts = SearchOptions {
        budget: ctx.cap_or(DEFAULT_SEARCH_BUDGET),
        collect_all: all,
    };
    let mut note = None;
    let verdict = if cert.tag == VerdictTag::CertifiedNonGrs {
        cert
    } else {
        match exhaustive_grs_search(&c, opts) {
            Ok(v) => v,
            Err(Error::BudgetExceeded { needed, budget }) => {
                note = Some(format!(
                    "exhaustive search needs {needed} candidates, budget is {budget}"
                ));
                cert
            }
            Err(e) => return Err(e.into()),
        }
    };
    let code = match verdict.tag {
        VerdictTag::Inconclusive => EXIT_INCONCLUSIVE,
        _ => EXIT_OK,
    };
    let report = EquivSearch {
        verdict: verdict_name(verdict.tag),
        square_dim: verdict.square_dim,
        square_dim_grs: verdict.square_dim_grs,
        dual_square_unit: verdict.dual_square_unit.map(|j| j + 1),
        candidates_tested: verdict.candidates_tested,
        equivalent_sets: verdict.equivalent_sets.iter().map(|s| strings(&f, s)).collect(),
        witness: verdict.witness.as_ref().map(|(_, w)| witness_report(&f, w)),
        note,
    };
    ctx.emit(&report, code)
}

fn equiv_pair(ctx: &Ctx, input: &Input, other: &Input) -> Outcome {
    let c = input.code()?;
    let d = other.code()?;
    let w = monomial_equivalent(&c, &d)?;
    let report = EquivPair {
        equivalent: w.is_some(),
        witness: w.as_ref().map(|w| witness_report(c.field(), w)),
    };
    ctx.emit(&report, EXIT_OK)
}

fn hole_class(class: u8) -> DeepHoleClass {
    DeepHoleClass::from_number(class).expect("clap restricts the class to 1 or 2")
}

fn hole_vector(ctx: &Ctx, spec: &TwistedSpec, class: u8) -> Outcome {
    let h = DeepHoleSpec::new(spec, hole_class(class))?;
    let f = &spec.field;
    let report = HoleVector {
        class,
        t: h.t,
        s: f.format(h.s),
        u: strings(f, &h.u),
    };
    ctx.emit(&report, EXIT_OK)
}

/// The code whose deep holes the constructions describe.
fn tgrs_dual(spec: &TwistedSpec) -> std::result::Result<LinearCode, Failure> {
    Ok(dual_family(&spec.as_extended(false))?.code)
}

fn hole_check(
    ctx: &Ctx,
    spec: &TwistedSpec,
    class: u8,
    vector: Option<&str>,
    samples: usize,
) -> Outcome {
    let f = &spec.field;
    let u = match vector {
        Some(text) => f.parse_vector(text)?,
        None => DeepHoleSpec::new(spec, hole_class(class))?.u,
    };
    if samples > 0 && ctx.seed.is_none() {
        return Err(bad_input("--samples needs an explicit --seed"));
    }
    let dual = tgrs_dual(spec)?;
    if u.len() != dual.n() {
        return Err(Error::LengthMismatch(u.len(), dual.n()).into());
    }
    let table = CosetLeaders::with_cap(&dual, ctx.cap_or(DEFAULT_SYNDROME_CAP))?;
    let distance = table.distance(&u)?;
    let (mut sampled, mut deep) = (None, None);
    if let Some(seed) = ctx.seed.filter(|_| samples > 0) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut hits = 0;
        for _ in 0..samples {
            let a = f.random_nonzero(&mut rng);
            let msg: Vec<Elem> = (0..dual.k()).map(|_| f.random(&mut rng)).collect();
            let c = dual.encode(&msg)?;
            let y: Vec<Elem> = u.iter().zip(&c).map(|(&x, &z)| f.mul_add(z, a, x)).collect();
            hits += usize::from(table.is_deep_hole(&y)?);
        }
        sampled = Some(samples);
        deep = Some(hits);
    }
    let report = RadiusReport {
        code: "dual of the non-extended twisted code".to_string(),
        radius: table.radius(),
        vector: Some(strings(f, &u)),
        distance: Some(distance),
        is_deep_hole: Some(distance == table.radius()),
        family_sampled: sampled,
        family_deep: deep,
    };
    ctx.emit(&report, EXIT_OK)
}

fn radius(ctx: &Ctx, input: &Input, itself: bool) -> Outcome {
    let (label, c) = match input {
        Input::Spec(spec) if !itself => ("dual of the non-extended twisted code", tgrs_dual(spec)?),
        Input::Spec(spec) => ("twisted code", twisted_code(spec)?),
        Input::Code(c) => ("code", c.clone()),
    };
    let table = CosetLeaders::with_cap(&c, ctx.cap_or(DEFAULT_SYNDROME_CAP))?;
    let report = RadiusReport {
        code: label.to_string(),
        radius: table.radius(),
        vector: None,
        distance: None,
        is_deep_hole: None,
        family_sampled: None,
        family_deep: None,
    };
    ctx.emit(&report, EXIT_OK)
}
