use std::io::Read;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value as Json};
use tcshuffle::cohomology::{cup_length, RingPresentation, TensorSquare};
use tcshuffle::graded::Coefficients;
use tcshuffle::hopf_shuffle::{degree_split, delta_rho_oracle, phi_homology, PhiInput, PhiOutput};
use tcshuffle::prism::prism_check;
use tcshuffle::shuffles::enumerate_shuffles;
use tcshuffle::tc_rules::{classify, ganea_product_bounds, TcVerdict, TwoCellInput};

mod expr;
mod reproduce;

/// Largest `n + m` accepted by commands that enumerate all shuffles.
const MAX_SHUFFLE_DIM: usize = 20;
/// `phi` expands one tensor per `(n+1, m+1)` shuffle and checks it against a second formula.
const MAX_PHI_DIM: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Debug, Parser)]
#[command(name = "tcshuffle", version, about = "Shuffle combinatorics, Hopf invariants and topological complexity of two-cell complexes")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Seed for randomized checks.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// List the (n, m) shuffles in lexicographic order of their first block.
    Shuffles { n: usize, m: usize },
    /// Decompose Δ^n × Δ^m and check the boundary and gluing conditions.
    PrismCheck {
        n: usize,
        m: usize,
        /// Random points tested per adjacent pair of simplices.
        #[arg(long, default_value_t = 20)]
        samples: usize,
    },
    /// Induced map of the topological shuffle on primitive homology classes.
    Phi {
        n: usize,
        m: usize,
        /// Degrees of x_1..x_{n+1}, y_{n+2}..y_{n+m+2}, or one degree for all.
        #[arg(long, value_delimiter = ',', required = true)]
        degrees: Vec<u32>,
        /// Coefficient modulus, 0 for the integers.
        #[arg(long, default_value_t = 0)]
        modulus: u64,
    },
    /// Degree of the bottom-cell map for S^p factors, with the sign split.
    Degree { n: usize, m: usize, p: u32 },
    /// Evaluate an expression in a presented ring or its tensor square.
    Ring {
        /// Presentation as inline JSON, a file path, or '-' for stdin.
        presentation: String,
        /// Expression to evaluate, e.g. "(1*u - u*1)^4".
        #[arg(long)]
        expr: Option<String>,
        /// Also report the cup length of the tensor square.
        #[arg(long)]
        cup_length: bool,
    },
    /// Bound the topological complexity of a two-cell complex.
    Tc {
        /// Two-cell input or a verdict, as inline JSON, a file path, or '-'.
        input: String,
        /// Also bound TC(X × S^k).
        #[arg(long)]
        times_sphere: Option<u32>,
        /// Order of the top-cell Hopf invariant, used with --times-sphere.
        #[arg(long)]
        hopf_order: Option<u64>,
    },
    /// Recompute the regression table of known values.
    Reproduce,
}

/// Exit path for a command: a structured error with its exit code.
#[derive(Debug)]
struct Failure {
    code: u8,
    kind: &'static str,
    message: String,
}

impl Failure {
    fn input(message: impl ToString) -> Self {
        Failure { code: 1, kind: "invalid_input", message: message.to_string() }
    }

    fn internal(message: impl ToString) -> Self {
        Failure { code: 2, kind: "internal", message: message.to_string() }
    }
}

/// A successful result, with its text rendering.
struct Output {
    json: Json,
    text: String,
    code: u8,
}

impl Output {
    fn new(json: Json, text: impl Into<String>) -> Self {
        Output { json, text: text.into(), code: 0 }
    }
}

fn to_json<T: Serialize>(v: &T) -> Json {
    serde_json::to_value(v).expect("plain data serializes")
}

fn load_json(arg: &str) -> Result<String, Failure> {
    let trimmed = arg.trim_start();
    if trimmed.starts_with('{') || trimmed.starts_with('[') {
        Ok(arg.to_string())
    } else if arg == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(|e| Failure::input(format!("reading stdin: {e}")))?;
        Ok(s)
    } else {
        std::fs::read_to_string(arg).map_err(|e| Failure::input(format!("reading {arg}: {e}")))
    }
}

fn parse<T: for<'de> Deserialize<'de>>(arg: &str, what: &str) -> Result<T, Failure> {
    serde_json::from_str(&load_json(arg)?).map_err(|e| Failure::input(format!("malformed {what}: {e}")))
}

fn check_dim(n: usize, m: usize) -> Result<(), Failure> {
    if n + m > MAX_SHUFFLE_DIM {
        return Err(Failure::input(format!("n + m = {} exceeds the supported maximum {MAX_SHUFFLE_DIM}", n + m)));
    }
    Ok(())
}

fn shuffles(n: usize, m: usize) -> Result<Output, Failure> {
    check_dim(n, m)?;
    let all = enumerate_shuffles(n, m);
    let mut text = String::new();
    let rows: Vec<Json> = all
        .iter()
        .map(|s| {
            let sig = s.signature();
            let seq = s.sequences();
            text.push_str(&format!("{:?}  area {}  sign {:+}  α {:?}  β {:?}\n", s.first_block(), sig.area, sig.sign, seq.alpha, seq.beta));
            json!({
                "n": n, "m": m, "first_block": s.first_block(),
                "area": sig.area, "sign": sig.sign, "alpha": seq.alpha, "beta": seq.beta,
            })
        })
        .collect();
    text.push_str(&format!("{} shuffles", rows.len()));
    Ok(Output::new(json!({ "count": rows.len(), "shuffles": rows }), text))
}

fn prism(n: usize, m: usize, samples: usize, seed: u64) -> Result<Output, Failure> {
    if n + m > 12 {
        return Err(Failure::input(format!("n + m = {} exceeds the supported maximum 12 for prism checks", n + m)));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let report = prism_check(&mut rng, n, m, samples);
    let text = format!(
        "Δ^{n} × Δ^{m}: {} simplices, relative cycle: {}, gluing: {}",
        report.simplices, report.relative_cycle, report.gluing_ok
    );
    let mut out = Output::new(json!({ "n": n, "m": m, "samples": samples, "seed": seed }), text);
    if let (Json::Object(o), Json::Object(r)) = (&mut out.json, to_json(&report)) {
        o.extend(r);
    }
    if !(report.relative_cycle && report.gluing_ok) {
        return Err(Failure::internal(format!("prism decomposition check failed: {}", out.json)));
    }
    Ok(out)
}

fn phi_terms(out: &PhiOutput) -> Json {
    out.tensor
        .terms()
        .map(|(factors, c)| json!({ "coefficient": c.to_string(), "factors": factors.iter().map(|z| z.to_string()).collect::<Vec<_>>() }))
        .collect()
}

fn phi(n: usize, m: usize, degrees: &[u32], modulus: u64) -> Result<Output, Failure> {
    if n + m > MAX_PHI_DIM {
        return Err(Failure::input(format!("n + m = {} exceeds the supported maximum {MAX_PHI_DIM} for phi", n + m)));
    }
    let ring = Coefficients::new(modulus).map_err(Failure::input)?;
    let flat = if degrees.len() == 1 { vec![degrees[0]; n + m + 2] } else { degrees.to_vec() };
    let input = PhiInput::from_flat(n, m, &flat, ring).map_err(Failure::input)?;
    let closed = phi_homology(&input);
    if closed != delta_rho_oracle(&input) {
        return Err(Failure::internal("closed-form shuffle sum disagrees with the diagonal composite"));
    }
    let json = json!({
        "n": n, "m": m, "degrees": flat, "modulus": modulus,
        "text": closed.to_string(), "terms": phi_terms(&closed),
    });
    Ok(Output::new(json, closed.to_string()))
}

fn degree(n: usize, m: usize, p: u32) -> Result<Output, Failure> {
    if n + m > 100 {
        return Err(Failure::input(format!("n + m = {} exceeds the supported maximum 100", n + m)));
    }
    if p == 0 {
        return Err(Failure::input("p must be at least 1"));
    }
    let split = degree_split(n, m, p);
    let text = format!("degree {}  (#S⁺ = {}, #S⁻ = {})", split.degree, split.s_plus, split.s_minus);
    Ok(Output::new(to_json(&split), text))
}

fn ring(presentation: &str, expression: Option<&str>, want_cup_length: bool) -> Result<Output, Failure> {
    let pres: RingPresentation = parse(presentation, "ring presentation")?;
    let sq = TensorSquare::new(&pres.into_shared());
    let mut json = json!({ "ring": { "modulus": sq.base().ring().modulus(), "generators": to_json(&sq.base().generators()) } });
    let mut text = Vec::new();
    if let Some(src) = expression {
        let (x, square) = expr::evaluate(src, &sq).map_err(Failure::input)?.into_element(&sq);
        let terms: Vec<Json> = x
            .terms()
            .into_iter()
            .map(|(mono, c)| json!({ "coefficient": c.to_string(), "monomial": mono }))
            .collect();
        json["expression"] = json!(src);
        json["in"] = json!(if square { "tensor_square" } else { "base" });
        json["result"] = json!(x.to_string());
        json["nonzero"] = json!(!x.is_zero());
        json["degree"] = json!(x.degree());
        json["terms"] = json!(terms);
        text.push(format!("{src} = {x}  ({})", if x.is_zero() { "zero" } else { "nonzero" }));
    }
    if want_cup_length {
        let base = cup_length(sq.base()).map_err(Failure::input)?;
        let square = cup_length(sq.square()).map_err(Failure::input)?;
        json["cup_length"] = json!({ "base": base, "tensor_square": square });
        text.push(format!("cup length {base}, of the tensor square {square}"));
    }
    if expression.is_none() && !want_cup_length {
        text.push(format!("{} generators over {}", sq.base().generators().len(), sq.base().ring()));
    }
    Ok(Output::new(json, text.join("\n")))
}

fn tc(input: &str, times_sphere: Option<u32>, hopf_order: Option<u64>) -> Result<Output, Failure> {
    // a two-cell complex has "attaching"; anything else must be a verdict
    let raw: Json = parse(input, "tc input")?;
    let (verdict, given) = if raw.get("attaching").is_some() {
        let x: TwoCellInput = serde_json::from_value(raw).map_err(|e| Failure::input(format!("malformed two-cell input: {e}")))?;
        (classify(&x).map_err(Failure::input)?, Some(to_json(&x)))
    } else {
        let v: TcVerdict = serde_json::from_value(raw).map_err(|e| Failure::input(format!("malformed verdict: {e}")))?;
        (TcVerdict::from_bounds(v.lower, v.upper, v.justifications).map_err(Failure::input)?, None)
    };
    let Some(k) = times_sphere else {
        if hopf_order.is_some() {
            return Err(Failure::input("--hopf-order needs --times-sphere"));
        }
        return Ok(Output::new(to_json(&verdict), verdict.to_string().trim_end()));
    };
    if k == 0 {
        return Err(Failure::input("the sphere dimension must be at least 1"));
    }
    let product = ganea_product_bounds(&verdict, k, hopf_order).map_err(Failure::input)?;
    let mut text = format!("X: {verdict}X × S^{k}: {} ≤ TC ≤ {}", product.lower, product.upper);
    if product.additivity_fails {
        text.push_str(&format!(" (additive prediction [{}, {}] fails)", product.additive_lower, product.additive_upper));
    }
    for j in &product.justifications {
        text.push_str(&format!("\n  [{}, {}] {}: {}", j.lower, j.upper, j.rule, j.citation));
    }
    let mut json = json!({ "verdict": to_json(&verdict), "product": to_json(&product) });
    if let Some(x) = given {
        json["two_cell"] = x;
    }
    Ok(Output::new(json, text))
}

fn reproduce_table() -> Output {
    let report = reproduce::run();
    let mut text: Vec<String> = report
        .rows
        .iter()
        .map(|r| {
            let mark = if r.ok { "ok  " } else { "FAIL" };
            let detail = if r.ok { String::new() } else { format!("  (got {})", r.actual) };
            format!("{mark} [{}] {}: {}{detail}", r.area, r.name, r.expected)
        })
        .collect();
    text.push(format!("{} passed, {} failed", report.passed, report.failed));
    let code = if report.failed == 0 { 0 } else { 3 };
    Output { json: to_json(&report), text: text.join("\n"), code }
}

fn dispatch(cli: &Cli) -> Result<Output, Failure> {
    match &cli.command {
        Command::Shuffles { n, m } => shuffles(*n, *m),
        Command::PrismCheck { n, m, samples } => prism(*n, *m, *samples, cli.seed),
        Command::Phi { n, m, degrees, modulus } => phi(*n, *m, degrees, *modulus),
        Command::Degree { n, m, p } => degree(*n, *m, *p),
        Command::Ring { presentation, expr, cup_length } => ring(presentation, expr.as_deref(), *cup_length),
        Command::Tc { input, times_sphere, hopf_order } => tc(input, *times_sphere, *hopf_order),
        Command::Reproduce => Ok(reproduce_table()),
    }
}

fn emit_error(format: Format, f: &Failure) -> ExitCode {
    match format {
        Format::Json => eprintln!("{}", json!({ "error": { "kind": f.kind, "message": f.message } })),
        Format::Text => eprintln!("error ({}): {}", f.kind, f.message),
    }
    ExitCode::from(f.code)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            // --help and --version
            print!("{e}");
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let format = if std::env::args().any(|a| a == "text") { Format::Text } else { Format::Json };
            let rendered = e.to_string();
            let first = rendered.lines().next().unwrap_or("invalid arguments");
            let f = Failure { code: 1, kind: "usage", message: first.trim_start_matches("error: ").to_string() };
            return emit_error(format, &f);
        }
    };
    std::panic::set_hook(Box::new(|_| {}));
    let result = std::panic::catch_unwind(|| dispatch(&cli)).unwrap_or_else(|p| {
        let msg = p.downcast_ref::<&str>().map(|s| s.to_string()).or_else(|| p.downcast_ref::<String>().cloned());
        Err(Failure::internal(msg.unwrap_or_else(|| "panic".into())))
    });
    match result {
        Ok(out) => {
            match cli.format {
                Format::Json => println!("{}", serde_json::to_string_pretty(&out.json).expect("json values serialize")),
                Format::Text => println!("{}", out.text),
            }
            ExitCode::from(out.code)
        }
        Err(f) => emit_error(cli.format, &f),
    }
}
