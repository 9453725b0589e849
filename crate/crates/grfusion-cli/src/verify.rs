//! Differential verification sweeps: every exact algorithm against every
//! other, the floating-point oracles against the exact values, and cache
//! integrity. A sweep returns human-readable mismatch reports sorted so
//! the minimal failing query comes first; an empty list means agreement.

use anyhow::Result;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;

use grfusion_core::fusion::{fusion_labels, fusion_product, verlinde_numeric, FusionAlgorithm};
use grfusion_core::partitions::{BoundingBox, Partition};
use grfusion_core::qh::{bvi_numeric, forced_degree, qh_product, GwAlgorithm, GwQuery};

use crate::cache::{Cache, CACHE_VERSION};
use crate::format::{parse_partition, QExpansionJson};

pub struct VerifyOutcome {
    /// One summary line per sweep unit.
    pub lines: Vec<String>,
    /// Sorted mismatch reports; the first is the minimal failing query.
    pub mismatches: Vec<String>,
}

impl VerifyOutcome {
    pub fn ok(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Exhaustive five-way Gromov-Witten agreement over one box.
fn sweep_gw_box(bx: BoundingBox) -> Vec<String> {
    let parts = bx.partitions();
    let pairs: Vec<(usize, usize)> = (0..parts.len())
        .flat_map(|i| (0..parts.len()).map(move |j| (i, j)))
        .collect();
    pairs
        .par_iter()
        .flat_map_iter(|&(i, j)| {
            let (lam, mu) = (&parts[i], &parts[j]);
            let reference = qh_product(lam, mu, bx, GwAlgorithm::Fermionic);
            let mut out = Vec::new();
            for alg in [
                GwAlgorithm::RacahSpeiser,
                GwAlgorithm::Vev,
                GwAlgorithm::RimHook,
                GwAlgorithm::DualRimHook,
            ] {
                let got = qh_product(lam, mu, bx, alg);
                if got != reference {
                    out.push(format!(
                        "N={:02} n={:02} gw λ={lam} μ={mu}: {} disagrees with fermion",
                        bx.sites(),
                        bx.rows(),
                        alg.name()
                    ));
                }
            }
            out
        })
        .collect()
}

/// Exhaustive agreement of all fusion algorithms over one ring.
fn sweep_fusion_ring(n: usize, k: usize) -> Vec<String> {
    let labels = fusion_labels(n, k);
    let pairs: Vec<(usize, usize)> = (0..labels.len())
        .flat_map(|i| (0..labels.len()).map(move |j| (i, j)))
        .collect();
    pairs
        .par_iter()
        .flat_map_iter(|&(i, j)| {
            let (lam, mu) = (&labels[i], &labels[j]);
            let reference = fusion_product(lam, mu, n, k, FusionAlgorithm::Projection);
            let mut out = Vec::new();
            for alg in FusionAlgorithm::ALL {
                let got = fusion_product(lam, mu, n, k, alg);
                if got != reference {
                    out.push(format!(
                        "N={:02} n={:02} fusion λ={lam} μ={mu}: {} disagrees with projection",
                        n + k,
                        n,
                        alg.name()
                    ));
                }
            }
            out
        })
        .collect()
}

/// Bertram-Vafa-Intriligator oracle against the exact expansion, every
/// query in the box.
fn sweep_bvi_box(bx: BoundingBox) -> Vec<String> {
    let parts = bx.partitions();
    let pairs: Vec<(usize, usize)> = (0..parts.len())
        .flat_map(|i| (0..parts.len()).map(move |j| (i, j)))
        .collect();
    pairs
        .par_iter()
        .flat_map_iter(|&(i, j)| {
            let (lam, mu) = (&parts[i], &parts[j]);
            let exact = qh_product(lam, mu, bx, GwAlgorithm::RacahSpeiser);
            let mut out = Vec::new();
            for nu in &parts {
                let Some(d) = forced_degree(lam, mu, nu, bx) else {
                    continue;
                };
                let query = GwQuery::new(lam.clone(), mu.clone(), nu.clone(), d, bx);
                let want: i64 = exact
                    .coefficient(nu, d)
                    .try_into()
                    .expect("coefficient exceeds i64");
                match bvi_numeric(&query) {
                    Ok(v) if v.rounded == want => {}
                    Ok(v) => out.push(format!(
                        "N={:02} n={:02} bvi λ={lam} μ={mu} ν={nu} d={d}: {} vs exact {want}",
                        bx.sites(),
                        bx.rows(),
                        v.rounded
                    )),
                    Err(e) => out.push(format!(
                        "N={:02} n={:02} bvi λ={lam} μ={mu} ν={nu} d={d}: {e}",
                        bx.sites(),
                        bx.rows()
                    )),
                }
            }
            out
        })
        .collect()
}

/// Verlinde oracle against Kac-Walton, every triple in the ring.
fn sweep_verlinde_ring(n: usize, k: usize) -> Vec<String> {
    let labels = fusion_labels(n, k);
    let pairs: Vec<(usize, usize)> = (0..labels.len())
        .flat_map(|i| (0..labels.len()).map(move |j| (i, j)))
        .collect();
    pairs
        .par_iter()
        .flat_map_iter(|&(i, j)| {
            let (lam, mu) = (&labels[i], &labels[j]);
            let exact = fusion_product(lam, mu, n, k, FusionAlgorithm::KacWalton);
            let mut out = Vec::new();
            for nu in &labels {
                let want = exact.coefficient(nu) as i64;
                match verlinde_numeric(lam, mu, nu, n, k) {
                    Ok(v) if v.rounded == want => {}
                    Ok(v) => out.push(format!(
                        "N={:02} n={:02} verlinde λ={lam} μ={mu} ν={nu}: {} vs exact {want}",
                        n + k,
                        n,
                        v.rounded
                    )),
                    Err(e) => out.push(format!(
                        "N={:02} n={:02} verlinde λ={lam} μ={mu} ν={nu}: {e}",
                        n + k,
                        n
                    )),
                }
            }
            out
        })
        .collect()
}

fn random_pairs(count: usize, len: usize, rng: &mut StdRng) -> Vec<(usize, usize)> {
    (0..count)
        .map(|_| (rng.gen_range(0..len), rng.gen_range(0..len)))
        .collect()
}

/// Random five-way and fusion agreement checks at word length `big_n`.
fn sweep_random(big_n: usize, samples: usize, seed: u64) -> Vec<String> {
    let mut rng = StdRng::seed_from_u64(seed ^ (big_n as u64).wrapping_mul(0x9e3779b97f4a7c15));
    let mut jobs: Vec<(BoundingBox, Partition, Partition)> = Vec::new();
    for _ in 0..samples {
        let n = rng.gen_range(1..big_n);
        let bx = BoundingBox::new(n, big_n - n);
        let parts = bx.partitions();
        let (i, j) = (rng.gen_range(0..parts.len()), rng.gen_range(0..parts.len()));
        jobs.push((bx, parts[i].clone(), parts[j].clone()));
    }
    let mut fusion_jobs: Vec<(usize, usize, Partition, Partition)> = Vec::new();
    for _ in 0..samples {
        let n = rng.gen_range(1..=big_n);
        let k = big_n - n;
        let labels = fusion_labels(n, k);
        let pair = random_pairs(1, labels.len(), &mut rng)[0];
        fusion_jobs.push((n, k, labels[pair.0].clone(), labels[pair.1].clone()));
    }
    let mut out: Vec<String> = jobs
        .par_iter()
        .flat_map_iter(|(bx, lam, mu)| {
            let reference = qh_product(lam, mu, *bx, GwAlgorithm::Fermionic);
            GwAlgorithm::ALL
                .iter()
                .filter(|alg| qh_product(lam, mu, *bx, **alg) != reference)
                .map(|alg| {
                    format!(
                        "N={:02} n={:02} gw(random) λ={lam} μ={mu}: {} disagrees",
                        bx.sites(),
                        bx.rows(),
                        alg.name()
                    )
                })
                .collect::<Vec<_>>()
        })
        .collect();
    out.par_extend(fusion_jobs.par_iter().flat_map_iter(|(n, k, lam, mu)| {
        let reference = fusion_product(lam, mu, *n, *k, FusionAlgorithm::Projection);
        FusionAlgorithm::ALL
            .iter()
            .filter(|alg| fusion_product(lam, mu, *n, *k, **alg) != reference)
            .map(|alg| {
                format!(
                    "N={:02} n={:02} fusion(random) λ={lam} μ={mu}: {} disagrees",
                    n + k,
                    n,
                    alg.name()
                )
            })
            .collect::<Vec<_>>()
    }));
    out
}

/// Recomputes every cache entry and demands byte-identical values.
pub fn check_cache(cache: &Cache) -> Result<Vec<String>> {
    let mut out = Vec::new();
    for entry in cache.entries()? {
        if entry.version != CACHE_VERSION {
            continue; // stale entries are ignored, not errors
        }
        let fields: std::collections::HashMap<&str, &str> = entry
            .query
            .split('|')
            .skip(1)
            .filter_map(|f| f.split_once('='))
            .collect();
        let verb = entry.query.split('|').next().unwrap_or("");
        let (Some(n), Some(k), Some(lhs), Some(rhs)) = (
            fields.get("n").and_then(|v| v.parse::<usize>().ok()),
            fields.get("k").and_then(|v| v.parse::<usize>().ok()),
            fields.get("lhs"),
            fields.get("rhs"),
        ) else {
            out.push(format!("cache: unparseable query {:?}", entry.query));
            continue;
        };
        let lam = parse_partition(lhs).map_err(anyhow::Error::msg)?;
        let mu = parse_partition(rhs).map_err(anyhow::Error::msg)?;
        let recomputed = match verb {
            "qh-product" => {
                let bx = BoundingBox::new(n, k);
                serde_json::to_string(&QExpansionJson::from_expansion(&qh_product(
                    &lam,
                    &mu,
                    bx,
                    GwAlgorithm::Fermionic,
                )))?
            }
            "fusion-product" => {
                serde_json::to_string(&crate::format::FusionExpansionJson::from_expansion(
                    &fusion_product(&lam, &mu, n, k, FusionAlgorithm::Projection),
                ))?
            }
            other => {
                out.push(format!("cache: unknown verb {other:?}"));
                continue;
            }
        };
        if recomputed != entry.value.get() {
            out.push(format!(
                "cache: stored value differs from recomputation for {:?}",
                entry.query
            ));
        }
    }
    Ok(out)
}

/// Full verification run. Exact sweeps cover every box with
/// `N <= max_word_len`; oracle sweeps cover `N <= oracle_max` (capped at
/// `max_word_len`); `random_levels` adds sampled checks at larger `N`.
pub fn run(
    max_word_len: usize,
    oracle_max: usize,
    random_levels: &[usize],
    samples: usize,
    seed: u64,
    jobs: usize,
    cache: Option<&Cache>,
) -> Result<VerifyOutcome> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| anyhow::anyhow!("thread pool: {e}"))?;
    pool.install(|| {
        let mut lines = Vec::new();
        let mut mismatches = Vec::new();
        for big_n in 1..=max_word_len {
            for n in 0..=big_n {
                let bx = BoundingBox::new(n, big_n - n);
                let found = sweep_gw_box(bx);
                let classes = bx.partitions().len();
                lines.push(format!(
                    "box({n},{}): {classes}^2 products, five GW algorithms {}",
                    big_n - n,
                    if found.is_empty() {
                        "agree"
                    } else {
                        "DISAGREE"
                    }
                ));
                mismatches.extend(found);
                if big_n <= oracle_max {
                    mismatches.extend(sweep_bvi_box(bx));
                }
            }
            for n in 1..=big_n {
                let k = big_n - n;
                let found = sweep_fusion_ring(n, k);
                lines.push(format!(
                    "sl({n})_{k}: {} labels, all fusion algorithms {}",
                    fusion_labels(n, k).len(),
                    if found.is_empty() {
                        "agree"
                    } else {
                        "DISAGREE"
                    }
                ));
                mismatches.extend(found);
                if big_n <= oracle_max {
                    mismatches.extend(sweep_verlinde_ring(n, k));
                }
            }
        }
        for &big_n in random_levels {
            let found = sweep_random(big_n, samples, seed);
            lines.push(format!(
                "N={big_n}: {samples} random GW pairs and {samples} random fusion pairs {}",
                if found.is_empty() {
                    "agree"
                } else {
                    "DISAGREE"
                }
            ));
            mismatches.extend(found);
        }
        if let Some(cache) = cache {
            let found = check_cache(cache)?;
            lines.push(format!(
                "cache: {} entr{} checked against recomputation",
                cache.entries()?.len(),
                if cache.entries()?.len() == 1 {
                    "y"
                } else {
                    "ies"
                }
            ));
            mismatches.extend(found);
        }
        mismatches.sort();
        Ok(VerifyOutcome { lines, mismatches })
    })
}
