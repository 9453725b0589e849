//! Command line parsing of partitions and the canonical JSON schemas.
//!
//! Expansions serialize with a deterministic term order — descending
//! `q`-degree, then descending lexicographic `ν` — so identical queries
//! always produce byte-identical output.

use std::collections::BTreeMap;

use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use grfusion_core::fock::QPoly;
use grfusion_core::fusion::FusionExpansion;
use grfusion_core::partitions::{BoundingBox, Partition};
use grfusion_core::qh::QExpansion;

/// Parses a comma-separated partition; the empty string is the empty
/// partition. Rejects sequences that are not weakly decreasing.
pub fn parse_partition(s: &str) -> Result<Partition, String> {
    let parts = parse_composition(s)?;
    if !parts.windows(2).all(|w| w[0] >= w[1]) {
        return Err(format!("not weakly decreasing: {s:?}"));
    }
    Ok(Partition::new(parts))
}

/// Parses a comma-separated list of nonnegative integers (a composition,
/// used for Kostka weights); the empty string is the empty list.
pub fn parse_composition(s: &str) -> Result<Vec<usize>, String> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|p| {
            p.trim()
                .parse::<usize>()
                .map_err(|_| format!("bad entry {p:?} in {s:?}"))
        })
        .collect()
}

#[derive(Serialize, Deserialize, Clone, Copy, PartialEq, Eq, Debug)]
pub struct BoxJson {
    pub n: usize,
    pub k: usize,
}

#[derive(Serialize, Deserialize, Clone, PartialEq, Eq, Debug)]
pub struct QTermJson {
    pub nu: Vec<usize>,
    pub coeffs: BTreeMap<String, i64>,
}

/// `{"box":{"n":..,"k":..},"terms":[{"nu":[..],"coeffs":{"d":c,..}},..]}`
#[derive(Serialize, Deserialize, Clone, PartialEq, Eq, Debug)]
pub struct QExpansionJson {
    #[serde(rename = "box")]
    pub bx: BoxJson,
    pub terms: Vec<QTermJson>,
}

impl QExpansionJson {
    pub fn from_expansion(exp: &QExpansion) -> Self {
        let bx = exp.bounding_box();
        let terms = exp
            .rows()
            .into_iter()
            .map(|(d, nu, c)| QTermJson {
                nu: nu.parts().to_vec(),
                coeffs: [(d.to_string(), c.to_i64().expect("coefficient exceeds i64"))]
                    .into_iter()
                    .collect(),
            })
            .collect();
        QExpansionJson {
            bx: BoxJson {
                n: bx.rows(),
                k: bx.cols(),
            },
            terms,
        }
    }

    pub fn to_expansion(&self) -> Result<QExpansion, String> {
        let bx = BoundingBox::new(self.bx.n, self.bx.k);
        let mut exp = QExpansion::new(bx);
        for term in &self.terms {
            let nu = Partition::new(term.nu.clone());
            for (d, &c) in &term.coeffs {
                let d: u32 = d.parse().map_err(|_| format!("bad degree key {d:?}"))?;
                exp.add(nu.clone(), QPoly::monomial(d, c.into()));
            }
        }
        Ok(exp)
    }
}

#[derive(Serialize, Deserialize, Clone, PartialEq, Eq, Debug)]
pub struct FusionTermJson {
    pub nu: Vec<usize>,
    pub coeff: u64,
}

/// `{"n":..,"k":..,"terms":[{"nu":[..],"coeff":c},..]}`
#[derive(Serialize, Deserialize, Clone, PartialEq, Eq, Debug)]
pub struct FusionExpansionJson {
    pub n: usize,
    pub k: usize,
    pub terms: Vec<FusionTermJson>,
}

impl FusionExpansionJson {
    pub fn from_expansion(exp: &FusionExpansion) -> Self {
        let terms = exp
            .rows()
            .into_iter()
            .map(|(nu, coeff)| FusionTermJson {
                nu: nu.parts().to_vec(),
                coeff,
            })
            .collect();
        FusionExpansionJson {
            n: exp.rank(),
            k: exp.level(),
            terms,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use grfusion_core::qh::{qh_product, GwAlgorithm};

    #[test]
    fn partition_parsing() {
        assert_eq!(parse_partition("3,1").unwrap(), Partition::new(vec![3, 1]));
        assert_eq!(parse_partition("").unwrap(), Partition::empty());
        assert_eq!(
            parse_partition(" 2 , 2 , 0 ").unwrap(),
            Partition::new(vec![2, 2])
        );
        assert!(parse_partition("1,2").is_err());
        assert!(parse_partition("a").is_err());
    }

    #[test]
    fn qexpansion_round_trip() {
        let bx = BoundingBox::new(3, 4);
        let exp = qh_product(
            &parse_partition("3,1").unwrap(),
            &parse_partition("3,2").unwrap(),
            bx,
            GwAlgorithm::Fermionic,
        );
        let json = QExpansionJson::from_expansion(&exp);
        assert_eq!(json.to_expansion().unwrap(), exp);
        let text = serde_json::to_string(&json).unwrap();
        let back: QExpansionJson = serde_json::from_str(&text).unwrap();
        assert_eq!(back, json);
    }
}
