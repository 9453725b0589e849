//! Plain-text rendering: expansions as `q^d`-weighted bracketed partitions
//! and ASCII Young diagrams with their 01-word line.

use num_traits::ToPrimitive;

use grfusion_core::fusion::FusionExpansion;
use grfusion_core::partitions::{word_of_partition, BoundingBox, Partition};
use grfusion_core::qh::QExpansion;

pub fn render_partition(p: &Partition) -> String {
    let inner = p
        .parts()
        .iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(",");
    format!("[{inner}]")
}

fn q_power(d: u32) -> String {
    match d {
        0 => String::new(),
        1 => "q".to_string(),
        _ => format!("q^{d}"),
    }
}

/// `q[2] + q[1,1] + [4,4,1] + 2[4,3,2] + [3,3,3]` — terms in descending
/// degree, then descending lexicographic `ν`; unit coefficients omitted.
pub fn render_qexpansion(exp: &QExpansion) -> String {
    let rows = exp.rows();
    if rows.is_empty() {
        return "0".to_string();
    }
    rows.into_iter()
        .map(|(d, nu, c)| {
            let c = c.to_i64().expect("coefficient exceeds i64");
            let coeff = if c == 1 { String::new() } else { c.to_string() };
            format!("{coeff}{}{}", q_power(d), render_partition(&nu))
        })
        .collect::<Vec<_>>()
        .join(" + ")
}

/// Fusion expansions render the same way without `q`-powers.
pub fn render_fusion_expansion(exp: &FusionExpansion) -> String {
    let rows = exp.rows();
    if rows.is_empty() {
        return "0".to_string();
    }
    rows.into_iter()
        .map(|(nu, c)| {
            let coeff = if c == 1 { String::new() } else { c.to_string() };
            format!("{coeff}{}", render_partition(&nu))
        })
        .collect::<Vec<_>>()
        .join(" + ")
}

/// ASCII Young diagram of `λ` inside its box, followed by the 01-word line
/// (position 1 leftmost). The empty partition renders as the word line
/// alone.
pub fn render_diagram(p: &Partition, bx: BoundingBox) -> String {
    assert!(bx.contains(p), "{p} does not fit {bx:?}");
    let mut out = String::new();
    for &row in p.parts() {
        out.push_str(&"[]".repeat(row));
        out.push('\n');
    }
    out.push_str(&format!("w = {}", word_of_partition(p, bx)));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use grfusion_core::partitions::{partition_of_word, BitWord};
    use grfusion_core::qh::{qh_product, GwAlgorithm};

    fn pt(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec())
    }

    #[test]
    fn pinned_text_rendering() {
        let bx = BoundingBox::new(3, 4);
        let exp = qh_product(&pt(&[3, 1]), &pt(&[3, 2]), bx, GwAlgorithm::Fermionic);
        assert_eq!(
            render_qexpansion(&exp),
            "q[2] + q[1,1] + [4,4,1] + 2[4,3,2] + [3,3,3]"
        );
    }

    #[test]
    fn diagram_round_trips_word() {
        // a five-particle configuration on nine sites, Figure-1 style
        let bx = BoundingBox::new(5, 4);
        for p in [pt(&[4, 3, 3, 1]), pt(&[2, 2, 1]), Partition::empty()] {
            let text = render_diagram(&p, bx);
            let word_line = text.lines().last().unwrap();
            let word = BitWord::parse(word_line.strip_prefix("w = ").unwrap()).unwrap();
            assert_eq!(partition_of_word(&word), p);
            assert_eq!(text.lines().count(), p.len() + 1);
        }
        // empty partition: single word line 1..10..0
        let empty = render_diagram(&Partition::empty(), BoundingBox::new(2, 3));
        assert_eq!(empty, "w = 11000");
        // full box: k columns x n rows of cells
        let full = render_diagram(&pt(&[3, 3]), BoundingBox::new(2, 3));
        assert_eq!(full, "[][][]\n[][][]\nw = 00011");
    }
}
