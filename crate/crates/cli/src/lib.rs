//! The `specht` command line. [`run`] does all the work so tests can call
//! it in-process.

use std::io::Write;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};
use specht_core::character::{
    gl2_weight_mult, gl3_simple_character, sl2_simple_character, staircase_weight_mult,
    weight_mult_ab2,
};
use specht_core::decompose::{
    block_component, decompose_a31b, decompose_a31b_dual, decompose_hook, decompose_staircase,
    decompose_two_power_hook,
};
use specht_core::special::{is_lp_special, is_p_special};
use specht_core::verify::{
    a31b_grid, core_identity_expectation, core_identity_grid, render_multiset, run_grid,
    verify_a31b_consistency, verify_core_identity, ConsistencyVerdict, CoreIdentityVerdict,
    LabelMultiset,
};
use specht_core::{
    Composition, Decomposition, Error, Partition, SchurSum, SpecialParams, WeightCharacter,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_PRECONDITION: i32 = 2;
pub const EXIT_MISMATCH: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "specht",
    version,
    about = "Young module decompositions of Specht modules at q = -1"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decompose a Specht module into Young modules.
    #[command(subcommand)]
    Decompose(DecomposeCmd),
    /// Staircase-core block component of a permutation module.
    Blockcomp(BlockcompArgs),
    /// Products and truncations in the Schur basis.
    #[command(subcommand)]
    Schur(SchurCmd),
    /// The l-core of a partition.
    Core(CoreArgs),
    /// Characters and weight multiplicities of simple modules.
    #[command(subcommand)]
    Char(CharCmd),
    /// Whether (r, b) is p-special, or (l, p)-special with --l.
    Special(SpecialArgs),
    /// Character identities behind the decompositions.
    #[command(subcommand)]
    Verify(VerifyCmd),
}

#[derive(Args, Debug)]
struct Output {
    /// Emit JSON instead of text.
    #[arg(long)]
    json: bool,
}

#[derive(Args, Debug)]
struct Field {
    /// Quantum characteristic.
    #[arg(long, default_value_t = 2)]
    l: u64,
    /// Characteristic of the field: 0 or a prime.
    #[arg(long, default_value_t = 2)]
    p: u64,
}

#[derive(Subcommand, Debug)]
enum DecomposeCmd {
    /// Sp(a, m-1, ..., 2, 1^(b-m+2)) with a - m even, b - m odd.
    Staircase {
        #[arg(long)]
        m: i64,
        #[arg(long)]
        a: i64,
        #[arg(long)]
        b: i64,
        #[command(flatten)]
        field: Field,
        #[command(flatten)]
        out: Output,
    },
    /// Sp(a, 1^b) with a and b of opposite parity.
    Hook {
        #[arg(long)]
        a: i64,
        #[arg(long)]
        b: i64,
        #[command(flatten)]
        field: Field,
        #[command(flatten)]
        out: Output,
    },
    /// Sp(a, 3, 1^(b-1)) in characteristic 2.
    A31b {
        #[arg(long)]
        a: i64,
        #[arg(long)]
        b: i64,
        #[command(flatten)]
        out: Output,
    },
    /// Sp(b+1, 2, 2, 1^(a-3)), the conjugate of `a31b`.
    DualA31b {
        #[arg(long)]
        a: i64,
        #[arg(long)]
        b: i64,
        #[command(flatten)]
        out: Output,
    },
    /// Sp(2^k + 2, 1^(2^k - 1)) in characteristic 2.
    #[command(alias = "example63")]
    TwoPowerHook {
        #[arg(long)]
        k: i64,
        #[command(flatten)]
        out: Output,
    },
}

#[derive(Args, Debug)]
struct BlockcompArgs {
    #[arg(long)]
    m: i64,
    #[arg(long)]
    a: i64,
    #[arg(long)]
    b: i64,
    #[command(flatten)]
    field: Field,
    /// Label the summands as injectives of the symmetric power.
    #[arg(long)]
    injective: bool,
    #[command(flatten)]
    out: Output,
}

#[derive(Args, Debug)]
struct Factors {
    /// Row lengths a_1,a_2,... contributing s(a_i).
    #[arg(long, default_value = "")]
    rows: Composition,
    /// Column lengths b_1,b_2,... contributing s(1^b_j).
    #[arg(long, default_value = "")]
    cols: Composition,
}

#[derive(Subcommand, Debug)]
enum SchurCmd {
    /// Expand the product of rows then columns.
    Prod {
        #[command(flatten)]
        factors: Factors,
        #[command(flatten)]
        out: Output,
    },
    /// Keep the terms with the given l-core.
    Corefilter {
        #[command(flatten)]
        factors: Factors,
        #[arg(long)]
        core: Partition,
        #[arg(long, default_value_t = 2)]
        l: u32,
        #[command(flatten)]
        out: Output,
    },
    /// Keep the m-adapted terms.
    Adaptfilter {
        #[command(flatten)]
        factors: Factors,
        #[arg(long)]
        m: u32,
        #[command(flatten)]
        out: Output,
    },
}

#[derive(Args, Debug)]
struct CoreArgs {
    #[arg(long)]
    lambda: Partition,
    #[arg(long, default_value_t = 2)]
    l: u32,
    #[command(flatten)]
    out: Output,
}

#[derive(Subcommand, Debug)]
enum CharCmd {
    /// Character of the rank-one simple module L(r).
    Sl2 {
        #[arg(long)]
        r: i64,
        #[command(flatten)]
        field: Field,
        #[command(flatten)]
        out: Output,
    },
    /// dim L(c,d) at weight (a,b); --lambda gives (c,d).
    Gl2 {
        #[arg(long)]
        lambda: Partition,
        #[arg(long)]
        a: i64,
        #[arg(long)]
        b: i64,
        #[command(flatten)]
        field: Field,
        #[command(flatten)]
        out: Output,
    },
    /// Character of the rank-three simple module L(lambda) (q = 1).
    Gl3Oracle {
        #[arg(long)]
        lambda: Partition,
        #[arg(long, default_value_t = 2)]
        p: u64,
        #[command(flatten)]
        out: Output,
    },
    /// dim L(σ_m + lμ) at weight (a, b, (m-2)(l-1), ..., l-1); --lambda gives μ.
    Staircase {
        #[arg(long)]
        m: i64,
        #[arg(long)]
        a: i64,
        #[arg(long)]
        b: i64,
        #[arg(long)]
        lambda: Partition,
        #[command(flatten)]
        field: Field,
        #[command(flatten)]
        out: Output,
    },
    /// dim L(σ₂ + 2μ) at weight (a, b, 2) in characteristic 2; --lambda gives μ.
    Ab2 {
        #[arg(long)]
        a: i64,
        #[arg(long)]
        b: i64,
        #[arg(long)]
        lambda: Partition,
        #[command(flatten)]
        out: Output,
    },
}

#[derive(Args, Debug)]
struct SpecialArgs {
    #[arg(long, allow_hyphen_values = true)]
    r: i64,
    #[arg(long, allow_hyphen_values = true)]
    b: i64,
    #[arg(long, default_value_t = 2)]
    p: u64,
    /// Test (l, p)-speciality instead.
    #[arg(long)]
    l: Option<u64>,
    #[command(flatten)]
    out: Output,
}

#[derive(Subcommand, Debug)]
enum VerifyCmd {
    /// Core truncation of s(a) s(1^b) s(1^(m-2)) ... s(1) against its closed form.
    #[command(alias = "cor5-7")]
    CoreIdentity {
        #[arg(long, required_unless_present = "grid")]
        m: Option<i64>,
        #[arg(long, required_unless_present = "grid")]
        a: Option<i64>,
        #[arg(long, required_unless_present = "grid")]
        b: Option<i64>,
        /// Run 2 <= m <= 5, m <= a <= m+12, m-1 <= b <= m+11 instead.
        #[arg(long, conflicts_with_all = ["m", "a", "b"])]
        grid: bool,
        #[command(flatten)]
        out: Output,
    },
    /// Sp(a,3,1^(b-1)) + 2 Sp(a+2,1^b) against the weight multiplicities of M(a,b,2).
    #[command(alias = "prop7-2-2")]
    A31bConsistency {
        #[arg(long, required_unless_present = "grid")]
        a: Option<i64>,
        #[arg(long, required_unless_present = "grid")]
        b: Option<i64>,
        /// Run every valid a <= 40, b <= 39 instead.
        #[arg(long, conflicts_with_all = ["a", "b"])]
        grid: bool,
        #[command(flatten)]
        out: Output,
    },
}

/// What a command produced: text and JSON renderings of the same data.
struct Rendered {
    text: String,
    json: String,
    code: i32,
}

impl Rendered {
    fn ok(text: impl Into<String>, json: impl Into<String>) -> Self {
        Rendered {
            text: text.into(),
            json: json.into(),
            code: EXIT_OK,
        }
    }

    fn from_value(text: impl Into<String>, value: Value) -> Self {
        Rendered::ok(text, value.to_string())
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Syntax(_) => EXIT_USAGE,
        Error::Validity(_)
        | Error::Domain(_)
        | Error::Precondition(_)
        | Error::UnsupportedBaseCase(_) => EXIT_PRECONDITION,
    }
}

/// Parses `args` (including the program name), runs the command and writes
/// its output. Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    let json = cli.command.json();
    match dispatch(cli.command) {
        Ok(r) => {
            let body = if json { &r.json } else { &r.text };
            let _ = writeln!(out, "{body}");
            r.code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

impl Command {
    fn json(&self) -> bool {
        match self {
            Command::Decompose(c) => match c {
                DecomposeCmd::Staircase { out, .. }
                | DecomposeCmd::Hook { out, .. }
                | DecomposeCmd::A31b { out, .. }
                | DecomposeCmd::DualA31b { out, .. }
                | DecomposeCmd::TwoPowerHook { out, .. } => out.json,
            },
            Command::Blockcomp(a) => a.out.json,
            Command::Schur(c) => match c {
                SchurCmd::Prod { out, .. }
                | SchurCmd::Corefilter { out, .. }
                | SchurCmd::Adaptfilter { out, .. } => out.json,
            },
            Command::Core(a) => a.out.json,
            Command::Char(c) => match c {
                CharCmd::Sl2 { out, .. }
                | CharCmd::Gl2 { out, .. }
                | CharCmd::Gl3Oracle { out, .. }
                | CharCmd::Staircase { out, .. }
                | CharCmd::Ab2 { out, .. } => out.json,
            },
            Command::Special(a) => a.out.json,
            Command::Verify(c) => match c {
                VerifyCmd::CoreIdentity { out, .. } | VerifyCmd::A31bConsistency { out, .. } => {
                    out.json
                }
            },
        }
    }
}

fn dispatch(cmd: Command) -> specht_core::Result<Rendered> {
    match cmd {
        Command::Decompose(c) => decompose(c),
        Command::Blockcomp(a) => {
            let bc = block_component(a.m, a.a, a.b, SpecialParams::new(a.field.l, a.field.p)?)?;
            let text = if a.injective {
                bc.injective_form()
            } else {
                bc.to_string()
            };
            Ok(Rendered::ok(text, bc.to_json()))
        }
        Command::Schur(c) => schur(c),
        Command::Core(a) => {
            if a.l < 2 {
                return Err(Error::Domain(format!("l must be at least 2, got {}", a.l)));
            }
            let core = a.lambda.core(a.l);
            Ok(Rendered::from_value(
                core.to_string(),
                json!({ "lambda": a.lambda, "l": a.l, "core": core }),
            ))
        }
        Command::Char(c) => character(c),
        Command::Special(a) => {
            let (special, value) = match a.l {
                Some(l) => {
                    let params = SpecialParams::new(l, a.p)?;
                    let s = is_lp_special(a.r, a.b, params)?;
                    (
                        s,
                        json!({ "r": a.r, "b": a.b, "l": l, "p": a.p, "special": s }),
                    )
                }
                None => {
                    let s = is_p_special(a.r, a.b, a.p)?;
                    (s, json!({ "r": a.r, "b": a.b, "p": a.p, "special": s }))
                }
            };
            Ok(Rendered::from_value(special.to_string(), value))
        }
        Command::Verify(c) => verify(c),
    }
}

fn decompose(c: DecomposeCmd) -> specht_core::Result<Rendered> {
    let d: Decomposition = match c {
        DecomposeCmd::Staircase { m, a, b, field, .. } => {
            check_l_is_2(field.l)?;
            decompose_staircase(m, a, b, field.p)?
        }
        DecomposeCmd::Hook { a, b, field, .. } => {
            check_l_is_2(field.l)?;
            decompose_hook(a, b, field.p)?
        }
        DecomposeCmd::A31b { a, b, .. } => decompose_a31b(a, b)?,
        DecomposeCmd::DualA31b { a, b, .. } => decompose_a31b_dual(a, b)?,
        DecomposeCmd::TwoPowerHook { k, .. } => decompose_two_power_hook(k)?,
    };
    Ok(Rendered::ok(d.to_string(), d.to_json()))
}

fn check_l_is_2(l: u64) -> specht_core::Result<()> {
    if l == 2 {
        Ok(())
    } else {
        Err(Error::Precondition(format!(
            "Specht decompositions are available for l = 2 only, got l = {l}"
        )))
    }
}

fn schur(c: SchurCmd) -> specht_core::Result<Rendered> {
    let product = |f: &Factors| SchurSum::product_character(&f.rows, &f.cols);
    let g = match c {
        SchurCmd::Prod { factors, .. } => product(&factors),
        SchurCmd::Corefilter {
            factors, core, l, ..
        } => product(&factors).truncate_core(&core, l)?,
        SchurCmd::Adaptfilter { factors, m, .. } => product(&factors).truncate_adapted(m),
    };
    Ok(Rendered::ok(g.to_string(), g.to_json()))
}

fn character_value(ch: &WeightCharacter) -> Value {
    let weights: Vec<Value> = ch
        .weights()
        .rev()
        .map(|(w, k)| json!({ "weight": w, "mult": k }))
        .collect();
    json!({ "rank": ch.rank(), "dim": ch.dim(), "weights": weights })
}

fn character_text(ch: &WeightCharacter) -> String {
    let mut lines = vec![format!("dim {}", ch.dim())];
    for (w, k) in ch.weights().rev() {
        let w: Vec<String> = w.iter().map(i64::to_string).collect();
        lines.push(format!("({}) {k}", w.join(",")));
    }
    lines.join("\n")
}

fn character(c: CharCmd) -> specht_core::Result<Rendered> {
    let mult = |k: u64, v: Value| Ok(Rendered::from_value(k.to_string(), v));
    match c {
        CharCmd::Sl2 { r, field, .. } => {
            let ch = sl2_simple_character(r, SpecialParams::new(field.l, field.p)?)?;
            Ok(Rendered::from_value(
                character_text(&ch),
                character_value(&ch),
            ))
        }
        CharCmd::Gl3Oracle { lambda, p, .. } => {
            let ch = gl3_simple_character(&lambda, p)?;
            Ok(Rendered::from_value(
                character_text(&ch),
                character_value(&ch),
            ))
        }
        CharCmd::Gl2 {
            lambda,
            a,
            b,
            field,
            ..
        } => {
            if lambda.len() > 2 {
                return Err(Error::Validity(format!("{lambda} has more than two parts")));
            }
            let (c, d) = (i64::from(lambda.part(0)), i64::from(lambda.part(1)));
            let k = gl2_weight_mult(c, d, a, b, SpecialParams::new(field.l, field.p)?)?;
            mult(
                k,
                json!({ "lambda": lambda, "weight": [a, b], "l": field.l, "p": field.p, "mult": k }),
            )
        }
        CharCmd::Staircase {
            m,
            a,
            b,
            lambda,
            field,
            ..
        } => {
            let k = staircase_weight_mult(m, a, b, &lambda, SpecialParams::new(field.l, field.p)?)?;
            mult(
                k,
                json!({ "m": m, "a": a, "b": b, "mu": lambda, "l": field.l, "p": field.p, "mult": k }),
            )
        }
        CharCmd::Ab2 { a, b, lambda, .. } => {
            let k = weight_mult_ab2(a, b, &lambda)?;
            mult(k, json!({ "a": a, "b": b, "mu": lambda, "mult": k }))
        }
    }
}

fn core_identity_line(m: i64, a: i64, b: i64, v: &CoreIdentityVerdict) -> (String, Value) {
    match v {
        CoreIdentityVerdict::Matches(case) => {
            let expected = core_identity_expectation(m, a, b)
                .map(|(_, e)| e)
                .unwrap_or_default();
            (
                format!("m={m} a={a} b={b}: match ({case}) {expected}"),
                json!({ "m": m, "a": a, "b": b, "verdict": "match", "case": case.to_string(),
                        "expected": expected.to_string() }),
            )
        }
        CoreIdentityVerdict::Mismatch {
            case,
            expected,
            actual,
        } => (
            format!("m={m} a={a} b={b}: MISMATCH ({case}) expected {expected}, got {actual}"),
            json!({ "m": m, "a": a, "b": b, "verdict": "mismatch", "case": case.to_string(),
                    "expected": expected.to_string(), "actual": actual.to_string() }),
        ),
    }
}

fn multiset_value(ms: &LabelMultiset) -> Value {
    let items: Vec<Value> = ms
        .iter()
        .rev()
        .map(|(y, k)| json!({ "young": y, "mult": k }))
        .collect();
    Value::Array(items)
}

fn consistency_line(a: i64, b: i64, v: &ConsistencyVerdict) -> (String, Value) {
    match v {
        ConsistencyVerdict::Consistent => (
            format!("a={a} b={b}: consistent"),
            json!({ "a": a, "b": b, "verdict": "consistent" }),
        ),
        ConsistencyVerdict::Mismatch {
            decomposed,
            families,
            weights,
        } => (
            format!(
                "a={a} b={b}: MISMATCH\n  decomposed: {}\n  families:   {}\n  weights:    {}",
                render_multiset(decomposed),
                render_multiset(families),
                render_multiset(weights)
            ),
            json!({ "a": a, "b": b, "verdict": "mismatch",
                    "decomposed": multiset_value(decomposed),
                    "families": multiset_value(families),
                    "weights": multiset_value(weights) }),
        ),
    }
}

fn collect(lines: Vec<(String, Value)>, all_ok: bool, single: bool) -> Rendered {
    let (texts, values): (Vec<String>, Vec<Value>) = lines.into_iter().unzip();
    let json = if single {
        values.into_iter().next().expect("one case").to_string()
    } else {
        Value::Array(values).to_string()
    };
    Rendered {
        text: texts.join("\n"),
        json,
        code: if all_ok { EXIT_OK } else { EXIT_MISMATCH },
    }
}

fn verify(c: VerifyCmd) -> specht_core::Result<Rendered> {
    match c {
        VerifyCmd::CoreIdentity { m, a, b, grid, .. } => {
            let cases = match (m, a, b) {
                (Some(m), Some(a), Some(b)) if !grid => vec![(m, a, b)],
                _ => core_identity_grid(2, 5, 12, 11),
            };
            let verdicts = run_grid(&cases, |&(m, a, b)| verify_core_identity(m, a, b));
            let mut lines = Vec::new();
            let mut all_ok = true;
            for (&(m, a, b), v) in cases.iter().zip(verdicts) {
                let v = v?;
                all_ok &= v.is_match();
                lines.push(core_identity_line(m, a, b, &v));
            }
            Ok(collect(lines, all_ok, !grid))
        }
        VerifyCmd::A31bConsistency { a, b, grid, .. } => {
            let cases = match (a, b) {
                (Some(a), Some(b)) if !grid => vec![(a, b)],
                _ => a31b_grid(40, 39),
            };
            let verdicts = run_grid(&cases, |&(a, b)| verify_a31b_consistency(a, b));
            let mut lines = Vec::new();
            let mut all_ok = true;
            for (&(a, b), v) in cases.iter().zip(verdicts) {
                let v = v?;
                all_ok &= v.is_consistent();
                lines.push(consistency_line(a, b, &v));
            }
            Ok(collect(lines, all_ok, !grid))
        }
    }
}
