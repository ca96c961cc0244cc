//! Batch command-line front end for the homweyl kernel.
//!
//! Elements are given in the text grammar (`x1`, `y2^3`, `3/2*y1*x1 + 1`);
//! `-` reads one element from stdin. Every certificate printed by an
//! algorithm subcommand has already been re-verified by evaluation.
//!
//! Exit codes: 0 success, 1 input error, 2 algorithm error (e.g. a stalled
//! difference step), 3 internal verification failure.

use std::io::Read;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use homweyl::cert::{Certificate, IdealPresentation, Side};
use homweyl::element::{TwistParameter, WeylElement};
use homweyl::error::AlgorithmError;
use homweyl::hom::check_hom_associativity;
use homweyl::ideal::{
    constant_generators, flatten_leading, hom_generators_from_assoc, principal_from_constant,
    principal_from_two, CertifiedGenerators, DifferenceChain,
};
use homweyl::print::{print_canonical, print_y_polynomial};
use homweyl::rational::{rational_from_str, Rational};
use homweyl::sample::{random_element, random_nonzero_twist, SampleConfig};

#[derive(Parser)]
#[command(
    name = "homweyl",
    version,
    about = "Exact arithmetic and certified ideal algorithms for twisted Weyl algebras"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SideArg {
    Left,
    Right,
}

impl From<SideArg> for Side {
    fn from(side: SideArg) -> Side {
        match side {
            SideArg::Left => Side::Left,
            SideArg::Right => Side::Right,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
struct Common {
    /// Number of variable pairs in the ambient algebra.
    #[arg(long, default_value_t = 1)]
    n: usize,

    /// Twist components, comma-separated rationals (default: all 1).
    #[arg(long)]
    k: Option<String>,

    /// Which side ideals are generated on.
    #[arg(long, value_enum, default_value_t = SideArg::Left)]
    side: SideArg,

    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Subcommand)]
enum Command {
    /// Associative product of two elements.
    Mul {
        #[command(flatten)]
        common: Common,
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    /// Twisted product alpha_k(ab) of two elements.
    YauMul {
        #[command(flatten)]
        common: Common,
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    /// Apply a power of the twisting automorphism.
    Alpha {
        #[command(flatten)]
        common: Common,
        /// Exponent of the twist (negative for the inverse).
        #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
        exp: i64,
        #[arg(allow_hyphen_values = true)]
        element: String,
    },
    /// x-degree, leading coefficient, and y-degree of an element.
    Degrees {
        #[command(flatten)]
        common: Common,
        #[arg(allow_hyphen_values = true)]
        element: String,
    },
    /// Replace a generator by one with leading coefficient 1, certified.
    Flatten {
        #[command(flatten)]
        common: Common,
        #[arg(allow_hyphen_values = true)]
        element: String,
    },
    /// Replace a generator by constant-coefficient generators, certified.
    ConstGens {
        #[command(flatten)]
        common: Common,
        #[arg(allow_hyphen_values = true)]
        element: String,
    },
    /// Pack constant-coefficient generators into one principal generator.
    Principal {
        #[command(flatten)]
        common: Common,
        #[arg(required = true, allow_hyphen_values = true)]
        generators: Vec<String>,
    },
    /// Full pipeline: two generators to one principal generator.
    TwoToOne {
        #[command(flatten)]
        common: Common,
        #[arg(allow_hyphen_values = true)]
        p: String,
        #[arg(allow_hyphen_values = true)]
        q: String,
    },
    /// Inverse-twist images of generators of an untwisted-ideal presentation.
    HomGens {
        #[command(flatten)]
        common: Common,
        #[arg(required = true, allow_hyphen_values = true)]
        generators: Vec<String>,
    },
    /// Evaluate a serialized certificate against a presentation and target.
    VerifyCert {
        #[command(flatten)]
        common: Common,
        /// Path to the certificate JSON, or '-' for stdin.
        #[arg(long)]
        cert: String,
        /// The claimed ideal member.
        #[arg(long, allow_hyphen_values = true)]
        target: String,
        #[arg(required = true, allow_hyphen_values = true)]
        generators: Vec<String>,
    },
    /// Check the hom-associativity identity on a triple or at random.
    CheckHom {
        #[command(flatten)]
        common: Common,
        /// Number of random triples to check instead of an explicit triple.
        #[arg(long, conflicts_with = "elements")]
        random: Option<u64>,
        /// Seed for random triple generation.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// An explicit triple a b c.
        #[arg(num_args = 3, allow_hyphen_values = true)]
        elements: Vec<String>,
    },
}

struct CliError {
    code: u8,
    message: String,
}

impl CliError {
    fn input(message: impl Into<String>) -> Self {
        CliError {
            code: 1,
            message: message.into(),
        }
    }

    fn verification(message: impl Into<String>) -> Self {
        CliError {
            code: 3,
            message: message.into(),
        }
    }
}

impl From<homweyl::parse::ParseError> for CliError {
    fn from(e: homweyl::parse::ParseError) -> Self {
        CliError::input(e.to_string())
    }
}

impl From<AlgorithmError> for CliError {
    fn from(e: AlgorithmError) -> Self {
        let code = match e {
            AlgorithmError::Internal(_) => 3,
            _ => 2,
        };
        CliError {
            code,
            message: e.to_string(),
        }
    }
}

impl From<homweyl::error::CertificateError> for CliError {
    fn from(e: homweyl::error::CertificateError) -> Self {
        CliError::input(e.to_string())
    }
}

impl From<homweyl::error::WeylError> for CliError {
    fn from(e: homweyl::error::WeylError) -> Self {
        CliError::input(e.to_string())
    }
}

/// Tracks stdin so that at most one argument reads it.
struct ElementReader {
    stdin_used: bool,
}

impl ElementReader {
    fn new() -> Self {
        ElementReader { stdin_used: false }
    }

    fn read(&mut self, arg: &str, n: usize) -> Result<WeylElement, CliError> {
        let text = if arg == "-" {
            if self.stdin_used {
                return Err(CliError::input(
                    "stdin ('-') may be used for only one element",
                ));
            }
            self.stdin_used = true;
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| CliError::input(format!("reading stdin: {e}")))?;
            buf.trim().to_string()
        } else {
            arg.to_string()
        };
        Ok(homweyl::parse::parse(&text, n)?)
    }
}

fn parse_twist(common: &Common) -> Result<TwistParameter, CliError> {
    if common.n == 0 {
        return Err(CliError::input("n must be at least 1"));
    }
    let components = match &common.k {
        None => vec![Rational::from_integer(1.into()); common.n],
        Some(text) => {
            let parts: Vec<&str> = text.split(',').collect();
            if parts.len() != common.n {
                return Err(CliError::input(format!(
                    "twist has {} components, expected {}",
                    parts.len(),
                    common.n
                )));
            }
            parts
                .iter()
                .map(|p| {
                    rational_from_str(p.trim())
                        .map_err(|e| CliError::input(format!("malformed twist component: {e}")))
                })
                .collect::<Result<_, _>>()?
        }
    };
    Ok(TwistParameter::new(components))
}

fn multi_index_value(m: &homweyl::monomial::MultiIndex) -> Value {
    Value::Array(m.entries().iter().map(|&e| json!(e)).collect())
}

fn generators_json(cg: &CertifiedGenerators) -> (Value, Value, Value) {
    let gens = Value::Array(
        cg.new_generators
            .iter()
            .map(|g| json!(print_canonical(g)))
            .collect(),
    );
    let new_in_old = Value::Array(cg.new_in_old.iter().map(Certificate::to_json).collect());
    let old_in_new = Value::Array(cg.old_in_new.iter().map(Certificate::to_json).collect());
    (gens, new_in_old, old_in_new)
}

fn chain_json(chain: &DifferenceChain) -> Value {
    json!({
        "steps": chain.steps.iter().map(|s| json!(print_canonical(s))).collect::<Vec<_>>(),
        "extracted": chain.extracted.iter().map(|s| json!(print_canonical(s))).collect::<Vec<_>>(),
    })
}

/// Re-verifies a generator change before it is printed.
fn verify_generator_change(
    cg: &CertifiedGenerators,
    old_gens: &[WeylElement],
    common: &Common,
    k: &TwistParameter,
) -> Result<(), CliError> {
    let side = common.side.into();
    let old = IdealPresentation::new(side, common.n, k.clone(), old_gens.to_vec())
        .map_err(|e| CliError::verification(e.to_string()))?;
    let new = IdealPresentation::new(side, common.n, k.clone(), cg.new_generators.clone())
        .map_err(|e| CliError::verification(e.to_string()))?;
    for (g, c) in cg.new_generators.iter().zip(&cg.new_in_old) {
        let value = c
            .evaluate(&old)
            .map_err(|e| CliError::verification(e.to_string()))?;
        if value != *g {
            return Err(CliError::verification(format!(
                "certificate for new generator {} evaluates to {}",
                print_canonical(g),
                print_canonical(&value)
            )));
        }
    }
    for (g, c) in old_gens.iter().zip(&cg.old_in_new) {
        let value = c
            .evaluate(&new)
            .map_err(|e| CliError::verification(e.to_string()))?;
        if value != *g {
            return Err(CliError::verification(format!(
                "certificate for input {} evaluates to {}",
                print_canonical(g),
                print_canonical(&value)
            )));
        }
    }
    Ok(())
}

fn cert_lines(out: &mut String, label: &str, certs: &[Certificate]) {
    for (i, c) in certs.iter().enumerate() {
        out.push_str(&format!(
            "{label} {} = {}\n",
            i + 1,
            serde_json::to_string(&c.to_json()).expect("serializable")
        ));
    }
}

fn run(cli: Cli) -> Result<String, CliError> {
    let mut reader = ElementReader::new();
    match cli.command {
        Command::Mul { common, a, b } => {
            let a = reader.read(&a, common.n)?;
            let b = reader.read(&b, common.n)?;
            let result = a.mul(&b)?;
            render_element(&common, &result)
        }
        Command::YauMul { common, a, b } => {
            let k = parse_twist(&common)?;
            let a = reader.read(&a, common.n)?;
            let b = reader.read(&b, common.n)?;
            let result = a.yau_mul(&b, &k)?;
            render_element(&common, &result)
        }
        Command::Alpha {
            common,
            exp,
            element,
        } => {
            let k = parse_twist(&common)?;
            let p = reader.read(&element, common.n)?;
            let result = p.alpha_pow(&k, exp)?;
            render_element(&common, &result)
        }
        Command::Degrees { common, element } => {
            let p = reader.read(&element, common.n)?;
            match (common.format, p.degrees()) {
                (Format::Text, Some(d)) => Ok(format!(
                    "deg_x = {}\nleading = {}\ndeg_y = {}\n",
                    d.deg_x,
                    print_y_polynomial(&d.leading),
                    d.deg_y
                )),
                (Format::Text, None) => {
                    Ok("deg_x = none\nleading = none\ndeg_y = none\n".to_string())
                }
                (Format::Json, Some(d)) => Ok(json_line(json!({
                    "deg_x": multi_index_value(&d.deg_x),
                    "leading": print_y_polynomial(&d.leading),
                    "deg_y": multi_index_value(&d.deg_y),
                }))),
                (Format::Json, None) => Ok(json_line(json!({
                    "deg_x": Value::Null,
                    "leading": Value::Null,
                    "deg_y": Value::Null,
                }))),
            }
        }
        Command::Flatten { common, element } => {
            let k = parse_twist(&common)?;
            let p = reader.read(&element, common.n)?;
            let (flat, cert) = flatten_leading(&p, &k, common.side.into())?;
            let pres = IdealPresentation::new(common.side.into(), common.n, k, vec![p])
                .map_err(|e| CliError::verification(e.to_string()))?;
            let value = cert
                .evaluate(&pres)
                .map_err(|e| CliError::verification(e.to_string()))?;
            if value != flat {
                return Err(CliError::verification(format!(
                    "flatten certificate evaluates to {}",
                    print_canonical(&value)
                )));
            }
            match common.format {
                Format::Text => Ok(format!(
                    "flattened = {}\ncertificate = {}\n",
                    print_canonical(&flat),
                    serde_json::to_string(&cert.to_json()).expect("serializable")
                )),
                Format::Json => Ok(json_line(json!({
                    "flattened": print_canonical(&flat),
                    "certificate": cert.to_json(),
                }))),
            }
        }
        Command::ConstGens { common, element } => {
            let k = parse_twist(&common)?;
            let p = reader.read(&element, common.n)?;
            let cg = constant_generators(&p, &k, common.side.into())?;
            verify_generator_change(&cg, &[p], &common, &k)?;
            match common.format {
                Format::Text => {
                    let mut out = String::new();
                    for (i, g) in cg.new_generators.iter().enumerate() {
                        out.push_str(&format!("generator {} = {}\n", i + 1, print_canonical(g)));
                    }
                    cert_lines(&mut out, "generator over input,", &cg.new_in_old);
                    cert_lines(&mut out, "input over generators,", &cg.old_in_new);
                    Ok(out)
                }
                Format::Json => {
                    let (gens, new_in_old, old_in_new) = generators_json(&cg);
                    Ok(json_line(json!({
                        "generators": gens,
                        "new_in_old": new_in_old,
                        "old_in_new": old_in_new,
                    })))
                }
            }
        }
        Command::Principal { common, generators } => {
            let k = parse_twist(&common)?;
            let gens: Vec<WeylElement> = generators
                .iter()
                .map(|g| reader.read(g, common.n))
                .collect::<Result<_, _>>()?;
            let (t, chain, cg) = principal_from_constant(&gens, &k, common.side.into())?;
            verify_generator_change(&cg, &gens, &common, &k)?;
            match common.format {
                Format::Text => {
                    let mut out = format!("t = {}\n", print_canonical(&t));
                    for (i, s) in chain.steps.iter().enumerate() {
                        out.push_str(&format!("chain {} = {}\n", i + 1, print_canonical(s)));
                    }
                    for (i, g) in chain.extracted.iter().enumerate() {
                        out.push_str(&format!("extracted {} = {}\n", i + 1, print_canonical(g)));
                    }
                    cert_lines(&mut out, "t over inputs,", &cg.new_in_old);
                    cert_lines(&mut out, "input over t,", &cg.old_in_new);
                    Ok(out)
                }
                Format::Json => {
                    let (_, new_in_old, old_in_new) = generators_json(&cg);
                    Ok(json_line(json!({
                        "t": print_canonical(&t),
                        "chain": chain_json(&chain),
                        "new_in_old": new_in_old,
                        "old_in_new": old_in_new,
                    })))
                }
            }
        }
        Command::TwoToOne { common, p, q } => {
            let k = parse_twist(&common)?;
            let p = reader.read(&p, common.n)?;
            let q = reader.read(&q, common.n)?;
            let (t, cg) = principal_from_two(&p, &q, &k, common.side.into())?;
            verify_generator_change(&cg, &[p, q], &common, &k)?;
            match common.format {
                Format::Text => {
                    let mut out = format!("t = {}\n", print_canonical(&t));
                    cert_lines(&mut out, "t over inputs,", &cg.new_in_old);
                    cert_lines(&mut out, "input over t,", &cg.old_in_new);
                    Ok(out)
                }
                Format::Json => {
                    let (_, new_in_old, old_in_new) = generators_json(&cg);
                    Ok(json_line(json!({
                        "t": print_canonical(&t),
                        "new_in_old": new_in_old,
                        "old_in_new": old_in_new,
                    })))
                }
            }
        }
        Command::HomGens { common, generators } => {
            let k = parse_twist(&common)?;
            let gens: Vec<WeylElement> = generators
                .iter()
                .map(|g| reader.read(g, common.n))
                .collect::<Result<_, _>>()?;
            let images = hom_generators_from_assoc(&gens, &k)?;
            match common.format {
                Format::Text => Ok(images
                    .iter()
                    .enumerate()
                    .map(|(i, g)| format!("generator {} = {}\n", i + 1, print_canonical(g)))
                    .collect()),
                Format::Json => Ok(json_line(json!({
                    "generators": images
                        .iter()
                        .map(|g| json!(print_canonical(g)))
                        .collect::<Vec<_>>(),
                }))),
            }
        }
        Command::VerifyCert {
            common,
            cert,
            target,
            generators,
        } => {
            let k = parse_twist(&common)?;
            let cert_text = if cert == "-" {
                if reader.stdin_used {
                    return Err(CliError::input("stdin ('-') may be used only once"));
                }
                reader.stdin_used = true;
                let mut buf = String::new();
                std::io::stdin()
                    .read_to_string(&mut buf)
                    .map_err(|e| CliError::input(format!("reading stdin: {e}")))?;
                buf
            } else {
                std::fs::read_to_string(&cert)
                    .map_err(|e| CliError::input(format!("reading {cert}: {e}")))?
            };
            let cert_value: Value = serde_json::from_str(&cert_text)
                .map_err(|e| CliError::input(format!("malformed certificate JSON: {e}")))?;
            let certificate = Certificate::from_json(&cert_value, common.n)?;
            let gens: Vec<WeylElement> = generators
                .iter()
                .map(|g| reader.read(g, common.n))
                .collect::<Result<_, _>>()?;
            let target = reader.read(&target, common.n)?;
            let pres = IdealPresentation::new(common.side.into(), common.n, k, gens)?;
            let value = certificate.evaluate(&pres)?;
            let verified = value == target;
            let out = match common.format {
                Format::Text => format!(
                    "value = {}\nverified = {}\n",
                    print_canonical(&value),
                    verified
                ),
                Format::Json => json_line(json!({
                    "value": print_canonical(&value),
                    "verified": verified,
                })),
            };
            if verified {
                Ok(out)
            } else {
                // the claim failed; report on stdout but exit 3
                print!("{out}");
                Err(CliError::verification(format!(
                    "certificate evaluates to {}, not {}",
                    print_canonical(&value),
                    print_canonical(&target)
                )))
            }
        }
        Command::CheckHom {
            common,
            random,
            seed,
            elements,
        } => {
            let k = parse_twist(&common)?;
            match random {
                Some(count) => {
                    use rand_chacha::rand_core::SeedableRng;
                    let mut rng = ChaCha8Rng::seed_from_u64(seed);
                    let cfg = SampleConfig::new(common.n);
                    let mut failures = 0u64;
                    for _ in 0..count {
                        let a = random_element(&mut rng, &cfg);
                        let b = random_element(&mut rng, &cfg);
                        let c = random_element(&mut rng, &cfg);
                        let k_case = if common.k.is_some() {
                            k.clone()
                        } else {
                            random_nonzero_twist(&mut rng, common.n, 10)
                        };
                        let report = check_hom_associativity(&a, &b, &c, &k_case)?;
                        if !report.holds {
                            failures += 1;
                        }
                    }
                    let out = match common.format {
                        Format::Text => {
                            format!("checked = {count}\nseed = {seed}\nfailures = {failures}\n")
                        }
                        Format::Json => json_line(json!({
                            "checked": count,
                            "seed": seed,
                            "failures": failures,
                        })),
                    };
                    if failures > 0 {
                        print!("{out}");
                        return Err(CliError::verification(format!(
                            "{failures} random triples violated hom-associativity"
                        )));
                    }
                    Ok(out)
                }
                None => {
                    if elements.len() != 3 {
                        return Err(CliError::input(
                            "check-hom needs three elements or --random COUNT",
                        ));
                    }
                    let a = reader.read(&elements[0], common.n)?;
                    let b = reader.read(&elements[1], common.n)?;
                    let c = reader.read(&elements[2], common.n)?;
                    let report = check_hom_associativity(&a, &b, &c, &k)?;
                    let out = match common.format {
                        Format::Text => format!(
                            "holds = {}\nlhs = {}\nrhs = {}\n",
                            report.holds,
                            print_canonical(&report.lhs),
                            print_canonical(&report.rhs)
                        ),
                        Format::Json => json_line(json!({
                            "holds": report.holds,
                            "lhs": print_canonical(&report.lhs),
                            "rhs": print_canonical(&report.rhs),
                        })),
                    };
                    if !report.holds {
                        print!("{out}");
                        return Err(CliError::verification(
                            "hom-associativity identity failed; the kernel is buggy",
                        ));
                    }
                    Ok(out)
                }
            }
        }
    }
}

fn render_element(common: &Common, result: &WeylElement) -> Result<String, CliError> {
    match common.format {
        Format::Text => Ok(format!("{}\n", print_canonical(result))),
        Format::Json => Ok(json_line(json!({ "result": print_canonical(result) }))),
    }
}

fn json_line(value: Value) -> String {
    let mut s = serde_json::to_string(&value).expect("serializable");
    s.push('\n');
    s
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{e}");
                return ExitCode::SUCCESS;
            }
            eprintln!("{e}");
            return ExitCode::from(1);
        }
    };
    match run(cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}
