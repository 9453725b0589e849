//! Command line front end: argument parsing, validation and dispatch.
//!
//! Exit codes: 0 on success, 2 on validation errors (malformed partitions,
//! out-of-box inputs, unknown algorithms), 3 on cross-check failures in
//! verify mode or under `--alg all`.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use grfusion_core::fusion::{
    fusion_coefficient, fusion_labels, fusion_product, verlinde_numeric, AffineWeight,
    FusionAlgorithm,
};
use grfusion_core::partitions::{BoundingBox, Partition};
use grfusion_core::qh::{
    bvi_numeric, forced_degree, gw_invariant, qh_product, GwAlgorithm, GwQuery,
};

use crate::cache::{product_key, Cache};
use crate::format::{parse_composition, parse_partition, FusionExpansionJson, QExpansionJson};
use crate::render;
use crate::verify;

/// Environment variable consulted for the cache path when `--cache` is not
/// given.
pub const CACHE_ENV: &str = "GRFUSION_CACHE";

#[derive(Parser)]
#[command(
    name = "grfusion",
    version,
    about = "Exact products in qH*(Gr_{n,n+k}) and the sl(n)_k fusion ring, cross-verified"
)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Text,
    Json,
}

#[derive(Args)]
struct BoxArgs {
    /// Number of rows n of the bounding box (rank of the fusion ring).
    #[arg(short = 'n', long = "n")]
    n: usize,
    /// Number of columns k of the bounding box (level of the fusion ring).
    #[arg(short = 'k', long = "k")]
    k: usize,
}

#[derive(Args)]
struct ProductArgs {
    #[command(flatten)]
    bx: BoxArgs,
    /// Left factor, comma-separated; empty string is the empty partition.
    #[arg(long)]
    lhs: String,
    /// Right factor.
    #[arg(long)]
    rhs: String,
    /// Algorithm selector, or `all` to cross-check every algorithm
    /// (defaults to fermion for qh-product, projection for fusion-product).
    #[arg(long)]
    alg: Option<String>,
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    format: OutputFormat,
    /// Coefficient cache file (defaults to $GRFUSION_CACHE when set).
    #[arg(long)]
    cache: Option<PathBuf>,
    /// Also print ASCII Young diagrams of the factors (text format).
    #[arg(long, default_value_t = false)]
    diagrams: bool,
}

#[derive(Args)]
struct GwArgs {
    #[command(flatten)]
    bx: BoxArgs,
    #[arg(long)]
    lhs: String,
    #[arg(long)]
    rhs: String,
    /// Target class ν.
    #[arg(long)]
    nu: String,
    /// Degree d; defaults to the one forced by |λ|+|μ|-|ν| = dN.
    #[arg(long)]
    d: Option<u32>,
    #[arg(long, default_value = "all")]
    alg: String,
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    format: OutputFormat,
}

#[derive(Args)]
struct FusionArgs {
    #[command(flatten)]
    bx: BoxArgs,
    #[arg(long)]
    lhs: String,
    #[arg(long)]
    rhs: String,
    #[arg(long)]
    nu: String,
    #[arg(long, default_value = "all")]
    alg: String,
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    format: OutputFormat,
}

#[derive(Args)]
struct KostkaArgs {
    /// Shape λ.
    #[arg(long)]
    lhs: String,
    /// Weight composition α.
    #[arg(long)]
    rhs: String,
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    format: OutputFormat,
}

#[derive(Args)]
struct LrArgs {
    #[arg(long)]
    lhs: String,
    #[arg(long)]
    rhs: String,
    /// Optional target ν; omitted, the full expansion is printed.
    #[arg(long)]
    nu: Option<String>,
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    format: OutputFormat,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Ring {
    Qh,
    Fusion,
}

#[derive(Args)]
struct TableArgs {
    #[command(flatten)]
    bx: BoxArgs,
    #[arg(long, value_enum, default_value_t = Ring::Qh)]
    ring: Ring,
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    format: OutputFormat,
}

#[derive(Args)]
struct VerifyArgs {
    /// Exhaustive cross-algorithm sweeps for every box with n+k <= this.
    #[arg(long = "max-N", default_value_t = 6)]
    max_word_len: usize,
    /// Numeric oracle sweeps for every box with n+k <= this.
    #[arg(long = "oracle-max-N", default_value_t = 5)]
    oracle_max: usize,
    /// Additional word lengths checked on random queries, e.g. `7,8`.
    #[arg(long = "random-N", value_delimiter = ',')]
    random_levels: Vec<usize>,
    /// Random queries per word length.
    #[arg(long, default_value_t = 200)]
    samples: usize,
    #[arg(long, default_value_t = 42)]
    seed: u64,
    /// Worker pool size; 0 uses the available parallelism.
    #[arg(long, default_value_t = 0)]
    jobs: usize,
    /// Cache file whose entries are checked against recomputation.
    #[arg(long)]
    cache: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Full product expansion in the quantum cohomology ring.
    #[command(name = "qh-product")]
    QhProduct(ProductArgs),
    /// A single Gromov-Witten invariant C_{λμ}^{ν,d}.
    Gw(GwArgs),
    /// Full product expansion in the sl(n)_k fusion ring.
    #[command(name = "fusion-product")]
    FusionProduct(ProductArgs),
    /// A single fusion coefficient N_{λμ}^ν.
    Fusion(FusionArgs),
    /// Kostka number K_{λ,α}.
    Kostka(KostkaArgs),
    /// Littlewood-Richardson coefficient or expansion.
    Lr(LrArgs),
    /// Differential verification sweeps across all algorithms.
    Verify(VerifyArgs),
    /// Multiplication table of a whole ring.
    Table(TableArgs),
}

#[derive(serde::Serialize)]
struct TableRow<T: serde::Serialize> {
    lhs: Vec<usize>,
    rhs: Vec<usize>,
    expansion: T,
}

enum CliError {
    Validation(String),
    CrossCheck(String),
}

type CliResult = Result<(), CliError>;

fn invalid(msg: impl Into<String>) -> CliError {
    CliError::Validation(msg.into())
}

fn checked_box(n: usize, k: usize) -> Result<BoundingBox, CliError> {
    if n + k < 1 || n + k > 64 {
        return Err(invalid(format!("need 1 <= n+k <= 64, got n={n} k={k}")));
    }
    Ok(BoundingBox::new(n, k))
}

fn boxed_partition(s: &str, bx: BoundingBox, role: &str) -> Result<Partition, CliError> {
    let p = parse_partition(s).map_err(|e| invalid(format!("{role}: {e}")))?;
    if !bx.contains(&p) {
        return Err(invalid(format!(
            "{role} {} does not fit the {}x{} box",
            render::render_partition(&p),
            bx.rows(),
            bx.cols()
        )));
    }
    Ok(p)
}

fn fusion_label(s: &str, n: usize, k: usize, role: &str) -> Result<Partition, CliError> {
    let p = parse_partition(s).map_err(|e| invalid(format!("{role}: {e}")))?;
    if p.len() + 1 > n || p.part(1) > k {
        return Err(invalid(format!(
            "{role} {} is not a level-{k} sl({n}) label (needs <= {} rows, parts <= {k})",
            render::render_partition(&p),
            n - 1
        )));
    }
    Ok(p)
}

fn parse_gw_alg(s: &str) -> Result<Option<GwAlgorithm>, CliError> {
    // None encodes `all`
    match s {
        "all" => Ok(None),
        "fermion" => Ok(Some(GwAlgorithm::Fermionic)),
        "rs" => Ok(Some(GwAlgorithm::RacahSpeiser)),
        "vev" => Ok(Some(GwAlgorithm::Vev)),
        "rimhook" => Ok(Some(GwAlgorithm::RimHook)),
        "dualrimhook" => Ok(Some(GwAlgorithm::DualRimHook)),
        other => Err(invalid(format!(
            "unknown algorithm {other:?} (expected fermion|rs|vev|rimhook|dualrimhook|bvi|all)"
        ))),
    }
}

fn parse_fusion_alg(s: &str) -> Result<Option<FusionAlgorithm>, CliError> {
    match s {
        "all" => Ok(None),
        "projection" => Ok(Some(FusionAlgorithm::Projection)),
        "lift" => Ok(Some(FusionAlgorithm::Lift)),
        "kacwalton" => Ok(Some(FusionAlgorithm::KacWalton)),
        "fusionrs" => Ok(Some(FusionAlgorithm::RacahSpeiser)),
        "recursion" => Ok(Some(FusionAlgorithm::Recursion)),
        "dualrs" => Ok(Some(FusionAlgorithm::DualRacahSpeiser)),
        "projdualrimhook" => Ok(Some(FusionAlgorithm::ProjectedDualRimHook)),
        other => Err(invalid(format!(
            "unknown algorithm {other:?} (expected projection|lift|kacwalton|fusionrs|recursion|dualrs|projdualrimhook|verlinde|all)"
        ))),
    }
}

fn cache_from(path: &Option<PathBuf>) -> Option<Cache> {
    path.clone()
        .or_else(|| std::env::var_os(CACHE_ENV).map(PathBuf::from))
        .map(|p| Cache::open(&p))
}

fn cmd_qh_product(args: &ProductArgs) -> CliResult {
    let bx = checked_box(args.bx.n, args.bx.k)?;
    let lam = boxed_partition(&args.lhs, bx, "--lhs")?;
    let mu = boxed_partition(&args.rhs, bx, "--rhs")?;
    let alg = match args.alg.as_deref().unwrap_or("fermion") {
        "bvi" => {
            return Err(invalid(
                "bvi computes single coefficients; use the gw command",
            ))
        }
        other => parse_gw_alg(other)?,
    };
    let key = product_key("qh-product", bx.rows(), bx.cols(), &args.lhs, &args.rhs);
    let cache = cache_from(&args.cache);
    let cached = match (&cache, alg) {
        (Some(c), Some(_)) => c.lookup(&key).map_err(|e| invalid(e.to_string()))?,
        _ => None,
    };
    let json_text = if let Some(value) = cached {
        value
    } else {
        let exp = match alg {
            Some(alg) => qh_product(&lam, &mu, bx, alg),
            None => {
                let reference = qh_product(&lam, &mu, bx, GwAlgorithm::Fermionic);
                for other in GwAlgorithm::ALL {
                    if qh_product(&lam, &mu, bx, other) != reference {
                        return Err(CliError::CrossCheck(format!(
                            "{} disagrees with fermion on {} * {}",
                            other.name(),
                            render::render_partition(&lam),
                            render::render_partition(&mu)
                        )));
                    }
                }
                reference
            }
        };
        let text = serde_json::to_string(&QExpansionJson::from_expansion(&exp))
            .map_err(|e| invalid(e.to_string()))?;
        if let (Some(c), Some(_)) = (&cache, alg) {
            c.store(&key, &text).map_err(|e| invalid(e.to_string()))?;
        }
        text
    };
    let schema: QExpansionJson =
        serde_json::from_str(&json_text).map_err(|e| invalid(e.to_string()))?;
    match args.format {
        OutputFormat::Json => println!("{json_text}"),
        OutputFormat::Text => {
            if args.diagrams {
                println!("{}", render::render_diagram(&lam, bx));
                println!("{}", render::render_diagram(&mu, bx));
            }
            let exp = schema.to_expansion().map_err(invalid)?;
            println!("{}", render::render_qexpansion(&exp));
        }
    }
    Ok(())
}

fn cmd_gw(args: &GwArgs) -> CliResult {
    let bx = checked_box(args.bx.n, args.bx.k)?;
    let lam = boxed_partition(&args.lhs, bx, "--lhs")?;
    let mu = boxed_partition(&args.rhs, bx, "--rhs")?;
    let nu = boxed_partition(&args.nu, bx, "--nu")?;
    let degree = match args.d.or_else(|| forced_degree(&lam, &mu, &nu, bx)) {
        Some(d) => d,
        None => {
            // no degree satisfies the law, so the invariant vanishes
            match args.format {
                OutputFormat::Text => println!("0"),
                OutputFormat::Json => println!("{}", json!({ "coefficient": 0 })),
            }
            return Ok(());
        }
    };
    let query = GwQuery::new(lam, mu, nu, degree, bx);
    match args.alg.as_str() {
        "bvi" => {
            let v = bvi_numeric(&query).map_err(|e| CliError::CrossCheck(format!("bvi: {e}")))?;
            match args.format {
                OutputFormat::Text => println!("{}", v.rounded),
                OutputFormat::Json => println!(
                    "{}",
                    json!({ "algorithm": "bvi", "coefficient": v.rounded, "value": v.real, "imag": v.imag })
                ),
            }
            Ok(())
        }
        other => match parse_gw_alg(other)? {
            Some(alg) => {
                let c = gw_invariant(&query, alg);
                match args.format {
                    OutputFormat::Text => println!("{c}"),
                    OutputFormat::Json => {
                        println!("{}", json!({ "algorithm": alg.name(), "coefficient": c }))
                    }
                }
                Ok(())
            }
            None => {
                let mut values = Vec::new();
                for alg in GwAlgorithm::ALL {
                    values.push((alg.name(), gw_invariant(&query, alg)));
                }
                let bvi =
                    bvi_numeric(&query).map_err(|e| CliError::CrossCheck(format!("bvi: {e}")))?;
                values.push(("bvi", bvi.rounded));
                match args.format {
                    OutputFormat::Text => {
                        for (name, v) in &values {
                            println!("{name} {v}");
                        }
                    }
                    OutputFormat::Json => {
                        let map: serde_json::Map<String, serde_json::Value> = values
                            .iter()
                            .map(|(name, v)| (name.to_string(), json!(v)))
                            .collect();
                        println!(
                            "{}",
                            json!({ "coefficient": values[0].1, "algorithms": map })
                        );
                    }
                }
                if values.iter().any(|&(_, v)| v != values[0].1) {
                    return Err(CliError::CrossCheck(format!(
                        "algorithms disagree: {values:?}"
                    )));
                }
                Ok(())
            }
        },
    }
}

fn cmd_fusion_product(args: &ProductArgs) -> CliResult {
    let n = args.bx.n;
    let k = args.bx.k;
    checked_box(n, k)?;
    if n < 1 {
        return Err(invalid("the fusion ring needs n >= 1"));
    }
    let lam = fusion_label(&args.lhs, n, k, "--lhs")?;
    let mu = fusion_label(&args.rhs, n, k, "--rhs")?;
    let alg = match args.alg.as_deref().unwrap_or("projection") {
        "verlinde" => {
            return Err(invalid(
                "verlinde computes single coefficients; use the fusion command",
            ))
        }
        other => parse_fusion_alg(other)?,
    };
    let key = product_key("fusion-product", n, k, &args.lhs, &args.rhs);
    let cache = cache_from(&args.cache);
    let cached = match (&cache, alg) {
        (Some(c), Some(_)) => c.lookup(&key).map_err(|e| invalid(e.to_string()))?,
        _ => None,
    };
    let json_text = if let Some(value) = cached {
        value
    } else {
        let exp = match alg {
            Some(alg) => fusion_product(&lam, &mu, n, k, alg),
            None => {
                let reference = fusion_product(&lam, &mu, n, k, FusionAlgorithm::Projection);
                for other in FusionAlgorithm::ALL {
                    if fusion_product(&lam, &mu, n, k, other) != reference {
                        return Err(CliError::CrossCheck(format!(
                            "{} disagrees with projection on {} * {}",
                            other.name(),
                            render::render_partition(&lam),
                            render::render_partition(&mu)
                        )));
                    }
                }
                reference
            }
        };
        let text = serde_json::to_string(&FusionExpansionJson::from_expansion(&exp))
            .map_err(|e| invalid(e.to_string()))?;
        if let (Some(c), Some(_)) = (&cache, alg) {
            c.store(&key, &text).map_err(|e| invalid(e.to_string()))?;
        }
        text
    };
    match args.format {
        OutputFormat::Json => println!("{json_text}"),
        OutputFormat::Text => {
            if args.diagrams {
                let bx = BoundingBox::new(n, k);
                println!("{}", render::render_diagram(&lam, bx));
                println!("{}", render::render_diagram(&mu, bx));
            }
            let schema: FusionExpansionJson =
                serde_json::from_str(&json_text).map_err(|e| invalid(e.to_string()))?;
            let rows = schema
                .terms
                .iter()
                .map(|t| {
                    let coeff = if t.coeff == 1 {
                        String::new()
                    } else {
                        t.coeff.to_string()
                    };
                    format!(
                        "{coeff}{}",
                        render::render_partition(&Partition::new(t.nu.clone()))
                    )
                })
                .collect::<Vec<_>>()
                .join(" + ");
            println!(
                "{}",
                if rows.is_empty() {
                    "0".to_string()
                } else {
                    rows
                }
            );
        }
    }
    Ok(())
}

fn cmd_fusion(args: &FusionArgs) -> CliResult {
    let n = args.bx.n;
    let k = args.bx.k;
    checked_box(n, k)?;
    if n < 1 {
        return Err(invalid("the fusion ring needs n >= 1"));
    }
    let lam = fusion_label(&args.lhs, n, k, "--lhs")?;
    let mu = fusion_label(&args.rhs, n, k, "--rhs")?;
    let nu = fusion_label(&args.nu, n, k, "--nu")?;
    match args.alg.as_str() {
        "verlinde" => {
            let v = verlinde_numeric(&lam, &mu, &nu, n, k)
                .map_err(|e| CliError::CrossCheck(format!("verlinde: {e}")))?;
            match args.format {
                OutputFormat::Text => println!("{}", v.rounded),
                OutputFormat::Json => println!(
                    "{}",
                    json!({ "algorithm": "verlinde", "coefficient": v.rounded, "value": v.real, "imag": v.imag })
                ),
            }
            Ok(())
        }
        other => match parse_fusion_alg(other)? {
            Some(alg) => {
                let c = fusion_coefficient(&lam, &mu, &nu, n, k, alg);
                match args.format {
                    OutputFormat::Text => println!("{c}"),
                    OutputFormat::Json => {
                        println!(
                            "{}",
                            json!({
                                "algorithm": alg.name(),
                                "coefficient": c,
                                "weights": dynkin_labels(&lam, &mu, &nu, n, k),
                            })
                        )
                    }
                }
                Ok(())
            }
            None => {
                let mut values = Vec::new();
                for alg in FusionAlgorithm::ALL {
                    values.push((alg.name(), fusion_coefficient(&lam, &mu, &nu, n, k, alg)));
                }
                let verlinde = verlinde_numeric(&lam, &mu, &nu, n, k)
                    .map_err(|e| CliError::CrossCheck(format!("verlinde: {e}")))?;
                values.push(("verlinde", verlinde.rounded));
                match args.format {
                    OutputFormat::Text => {
                        for (name, v) in &values {
                            println!("{name} {v}");
                        }
                    }
                    OutputFormat::Json => {
                        let map: serde_json::Map<String, serde_json::Value> = values
                            .iter()
                            .map(|(name, v)| (name.to_string(), json!(v)))
                            .collect();
                        println!(
                            "{}",
                            json!({
                                "coefficient": values[0].1,
                                "algorithms": map,
                                "weights": dynkin_labels(&lam, &mu, &nu, n, k),
                            })
                        );
                    }
                }
                if values.iter().any(|&(_, v)| v != values[0].1) {
                    return Err(CliError::CrossCheck(format!(
                        "algorithms disagree: {values:?}"
                    )));
                }
                Ok(())
            }
        },
    }
}

/// Operands of a fusion query as affine Dynkin-label arrays.
fn dynkin_labels(
    lam: &Partition,
    mu: &Partition,
    nu: &Partition,
    n: usize,
    k: usize,
) -> serde_json::Value {
    json!({
        "lhs": AffineWeight::from_partition(lam, n, k).labels(),
        "rhs": AffineWeight::from_partition(mu, n, k).labels(),
        "nu": AffineWeight::from_partition(nu, n, k).labels(),
    })
}

fn cmd_kostka(args: &KostkaArgs) -> CliResult {
    let shape = parse_partition(&args.lhs).map_err(|e| invalid(format!("--lhs: {e}")))?;
    let weight = parse_composition(&args.rhs).map_err(|e| invalid(format!("--rhs: {e}")))?;
    let value = grfusion_core::tableaux::kostka(&shape, &weight);
    match args.format {
        OutputFormat::Text => println!("{value}"),
        OutputFormat::Json => println!("{}", json!({ "kostka": value })),
    }
    Ok(())
}

fn cmd_lr(args: &LrArgs) -> CliResult {
    let lam = parse_partition(&args.lhs).map_err(|e| invalid(format!("--lhs: {e}")))?;
    let mu = parse_partition(&args.rhs).map_err(|e| invalid(format!("--rhs: {e}")))?;
    match &args.nu {
        Some(nu) => {
            let nu = parse_partition(nu).map_err(|e| invalid(format!("--nu: {e}")))?;
            let c = grfusion_core::tableaux::lr_coefficient(&lam, &mu, &nu);
            match args.format {
                OutputFormat::Text => println!("{c}"),
                OutputFormat::Json => println!("{}", json!({ "coefficient": c })),
            }
        }
        None => {
            let exp = grfusion_core::tableaux::lr_expand(&lam, &mu);
            let mut rows: Vec<(&Partition, &u64)> = exp.iter().collect();
            rows.sort_by(|a, b| b.0.cmp(a.0));
            match args.format {
                OutputFormat::Text => {
                    let text = rows
                        .iter()
                        .map(|(nu, &c)| {
                            let coeff = if c == 1 { String::new() } else { c.to_string() };
                            format!("{coeff}{}", render::render_partition(nu))
                        })
                        .collect::<Vec<_>>()
                        .join(" + ");
                    println!("{text}");
                }
                OutputFormat::Json => {
                    let terms: Vec<serde_json::Value> = rows
                        .iter()
                        .map(|(nu, &c)| json!({ "nu": nu.parts(), "coeff": c }))
                        .collect();
                    println!("{}", json!({ "terms": terms }));
                }
            }
        }
    }
    Ok(())
}

fn cmd_table(args: &TableArgs) -> CliResult {
    let n = args.bx.n;
    let k = args.bx.k;
    checked_box(n, k)?;
    match args.ring {
        Ring::Qh => {
            let bx = BoundingBox::new(n, k);
            let mut parts = bx.partitions();
            parts.reverse();
            let mut out = Vec::new();
            for (i, lam) in parts.iter().enumerate() {
                for mu in &parts[i..] {
                    let exp = qh_product(lam, mu, bx, GwAlgorithm::Fermionic);
                    out.push((lam.clone(), mu.clone(), exp));
                }
            }
            match args.format {
                OutputFormat::Text => {
                    for (lam, mu, exp) in &out {
                        println!(
                            "{} * {} = {}",
                            render::render_partition(lam),
                            render::render_partition(mu),
                            render::render_qexpansion(exp)
                        );
                    }
                }
                OutputFormat::Json => {
                    let rows: Vec<TableRow<QExpansionJson>> = out
                        .iter()
                        .map(|(lam, mu, exp)| TableRow {
                            lhs: lam.parts().to_vec(),
                            rhs: mu.parts().to_vec(),
                            expansion: QExpansionJson::from_expansion(exp),
                        })
                        .collect();
                    println!("{}", serde_json::to_string(&rows).unwrap());
                }
            }
        }
        Ring::Fusion => {
            if n < 1 {
                return Err(invalid("the fusion ring needs n >= 1"));
            }
            let mut labels = fusion_labels(n, k);
            labels.reverse();
            let mut out = Vec::new();
            for (i, lam) in labels.iter().enumerate() {
                for mu in &labels[i..] {
                    let exp = fusion_product(lam, mu, n, k, FusionAlgorithm::Projection);
                    out.push((lam.clone(), mu.clone(), exp));
                }
            }
            match args.format {
                OutputFormat::Text => {
                    for (lam, mu, exp) in &out {
                        println!(
                            "{} * {} = {}",
                            render::render_partition(lam),
                            render::render_partition(mu),
                            render::render_fusion_expansion(exp)
                        );
                    }
                }
                OutputFormat::Json => {
                    let rows: Vec<TableRow<FusionExpansionJson>> = out
                        .iter()
                        .map(|(lam, mu, exp)| TableRow {
                            lhs: lam.parts().to_vec(),
                            rhs: mu.parts().to_vec(),
                            expansion: FusionExpansionJson::from_expansion(exp),
                        })
                        .collect();
                    println!("{}", serde_json::to_string(&rows).unwrap());
                }
            }
        }
    }
    Ok(())
}

fn cmd_verify(args: &VerifyArgs) -> CliResult {
    if args.max_word_len < 1 || args.max_word_len > 10 {
        return Err(invalid("--max-N must be between 1 and 10"));
    }
    for &level in &args.random_levels {
        if !(2..=12).contains(&level) {
            return Err(invalid("--random-N entries must be between 2 and 12"));
        }
    }
    let cache = cache_from(&args.cache);
    let outcome = verify::run(
        args.max_word_len,
        args.oracle_max.min(args.max_word_len),
        &args.random_levels,
        args.samples,
        args.seed,
        args.jobs,
        cache.as_ref(),
    )
    .map_err(|e| invalid(e.to_string()))?;
    for line in &outcome.lines {
        println!("{line}");
    }
    if outcome.ok() {
        println!("verify: all cross-checks agree");
        Ok(())
    } else {
        println!("verify: {} mismatches", outcome.mismatches.len());
        println!("minimal failing query: {}", outcome.mismatches[0]);
        Err(CliError::CrossCheck(outcome.mismatches[0].clone()))
    }
}

/// Parses and runs; returns the process exit code.
pub fn run_from<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let result = match &cli.command {
        Cmd::QhProduct(a) => cmd_qh_product(a),
        Cmd::Gw(a) => cmd_gw(a),
        Cmd::FusionProduct(a) => cmd_fusion_product(a),
        Cmd::Fusion(a) => cmd_fusion(a),
        Cmd::Kostka(a) => cmd_kostka(a),
        Cmd::Lr(a) => cmd_lr(a),
        Cmd::Verify(a) => cmd_verify(a),
        Cmd::Table(a) => cmd_table(a),
    };
    match result {
        Ok(()) => 0,
        Err(CliError::Validation(msg)) => {
            eprintln!("error: {msg}");
            2
        }
        Err(CliError::CrossCheck(msg)) => {
            eprintln!("cross-check failure: {msg}");
            3
        }
    }
}

/// Entry point for the binary.
pub fn run() -> i32 {
    run_from(std::env::args_os())
}
