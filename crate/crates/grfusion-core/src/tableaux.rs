//! Semistandard tableaux, Kostka numbers, Littlewood-Richardson
//! coefficients, Pieri strips and straightening of Schur indices.
//!
//! Two independent routes are kept for the quantities every ring algorithm
//! consumes: Kostka numbers are computed both by direct tableau enumeration
//! and by the horizontal-strip recursion, and `c_{λμ}^ν` is available both
//! as a skew lattice-word count and through the strip-by-strip product
//! expansion. The pairs are cross-checked in the test suites.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::partitions::Partition;

/// A semistandard Young tableau: rows weakly increase, columns strictly
/// increase; entries are 1-based.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Tableau {
    rows: Vec<Vec<usize>>,
}

impl Tableau {
    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn shape(&self) -> Partition {
        Partition::new(self.rows.iter().map(|r| r.len()).collect::<Vec<_>>())
    }

    /// Weight vector `(t_1, …, t_m)`: `t_i` counts the entries equal to `i`.
    pub fn weight(&self, max_entry: usize) -> Vec<usize> {
        let mut w = vec![0usize; max_entry];
        for row in &self.rows {
            for &e in row {
                w[e - 1] += 1;
            }
        }
        w
    }
}

/// All semistandard tableaux of the given shape with entries `<= max_entry`,
/// enumerated cell by cell in row-major order.
pub fn enumerate_ssyt(shape: &Partition, max_entry: usize) -> Vec<Tableau> {
    let mut out = Vec::new();
    let mut rows: Vec<Vec<usize>> = shape.parts().iter().map(|&len| vec![0; len]).collect();
    fill_cells(shape, max_entry, 0, 0, &mut rows, &mut |rows| {
        out.push(Tableau {
            rows: rows.to_vec(),
        })
    });
    out
}

fn fill_cells(
    shape: &Partition,
    max_entry: usize,
    mut r: usize,
    mut c: usize,
    rows: &mut Vec<Vec<usize>>,
    emit: &mut impl FnMut(&[Vec<usize>]),
) {
    // advance to the next cell, skipping exhausted rows
    while r < rows.len() && c >= rows[r].len() {
        r += 1;
        c = 0;
    }
    if r == rows.len() {
        emit(rows);
        return;
    }
    let left = if c > 0 { rows[r][c - 1] } else { 1 };
    let above = if r > 0 && shape.part(r) > c {
        rows[r - 1][c] + 1
    } else {
        1
    };
    for e in left.max(above)..=max_entry {
        rows[r][c] = e;
        fill_cells(shape, max_entry, r, c + 1, rows, emit);
    }
    rows[r][c] = 0;
}

/// Kostka number by direct tableau enumeration: counts SSYT of the given
/// shape whose weight is exactly `weight` (entries bounded by its length).
pub fn kostka_by_enumeration(shape: &Partition, weight: &[usize]) -> u64 {
    if shape.weight() != weight.iter().sum::<usize>() {
        return 0;
    }
    let mut remaining = weight.to_vec();
    let mut rows: Vec<Vec<usize>> = shape.parts().iter().map(|&len| vec![0; len]).collect();
    let mut count = 0u64;
    count_weighted(shape, &mut remaining, 0, 0, &mut rows, &mut count);
    count
}

fn count_weighted(
    shape: &Partition,
    remaining: &mut [usize],
    mut r: usize,
    mut c: usize,
    rows: &mut Vec<Vec<usize>>,
    count: &mut u64,
) {
    while r < rows.len() && c >= rows[r].len() {
        r += 1;
        c = 0;
    }
    if r == rows.len() {
        *count += 1;
        return;
    }
    let left = if c > 0 { rows[r][c - 1] } else { 1 };
    let above = if r > 0 && shape.part(r) > c {
        rows[r - 1][c] + 1
    } else {
        1
    };
    for e in left.max(above)..=remaining.len() {
        if remaining[e - 1] == 0 {
            continue;
        }
        remaining[e - 1] -= 1;
        rows[r][c] = e;
        count_weighted(shape, remaining, r, c + 1, rows, count);
        remaining[e - 1] += 1;
    }
    rows[r][c] = 0;
}

/// Kostka number through the strip recursion
/// `K_{λ,(α_1,…,α_ℓ)} = Σ_ρ K_{ρ,(α_1,…,α_{ℓ-1})}` over all `ρ ⊆ λ` with
/// `λ/ρ` a horizontal strip of size `α_ℓ`.
pub fn kostka(shape: &Partition, weight: &[usize]) -> u64 {
    if shape.weight() != weight.iter().sum::<usize>() {
        return 0;
    }
    let mut w = weight.to_vec();
    while w.last() == Some(&0) {
        w.pop();
    }
    kostka_rec(shape, &w)
}

fn kostka_rec(shape: &Partition, weight: &[usize]) -> u64 {
    let Some((&last, prefix)) = weight.split_last() else {
        return if shape.is_empty() { 1 } else { 0 };
    };
    horizontal_strips(shape, last)
        .iter()
        .map(|rho| kostka_rec(rho, prefix))
        .sum()
}

/// All `ρ ⊆ λ` such that `λ/ρ` is a horizontal strip (at most one cell per
/// column) with exactly `size` cells.
pub fn horizontal_strips(shape: &Partition, size: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut acc = Vec::new();
    h_strips(shape.parts(), size, 1, &mut acc, &mut out);
    out.sort();
    out
}

fn h_strips(
    parts: &[usize],
    left: usize,
    row: usize,
    acc: &mut Vec<usize>,
    out: &mut Vec<Partition>,
) {
    if row > parts.len() {
        if left == 0 {
            out.push(Partition::new(acc.clone()));
        }
        return;
    }
    let cur = parts[row - 1];
    let next = parts.get(row).copied().unwrap_or(0);
    // strip condition: ρ_row >= λ_{row+1}
    let lo = next.max(cur.saturating_sub(left));
    for keep in lo..=cur {
        acc.push(keep);
        h_strips(parts, left - (cur - keep), row + 1, acc, out);
        acc.pop();
    }
}

/// All `ρ ⊆ λ` such that `λ/ρ` is a vertical strip (at most one cell per
/// row) with exactly `size` cells.
pub fn vertical_strips(shape: &Partition, size: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut acc = Vec::new();
    v_strips(shape.parts(), size, 1, &mut acc, &mut out);
    out.sort();
    out
}

fn v_strips(
    parts: &[usize],
    left: usize,
    row: usize,
    acc: &mut Vec<usize>,
    out: &mut Vec<Partition>,
) {
    if row > parts.len() {
        if left == 0 {
            out.push(Partition::new(acc.clone()));
        }
        return;
    }
    let cur = parts[row - 1];
    for drop in 0..=1usize.min(left).min(cur) {
        let keep = cur - drop;
        // ρ must stay weakly decreasing
        if let Some(&prev) = acc.last() {
            if keep > prev {
                continue;
            }
        }
        acc.push(keep);
        v_strips(parts, left - drop, row + 1, acc, out);
        acc.pop();
    }
}

/// Littlewood-Richardson coefficient `c_{λμ}^ν` as the number of skew
/// tableaux of shape `ν/λ` and content `μ` whose reverse reading word is a
/// lattice word.
pub fn lr_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if lambda.weight() + mu.weight() != nu.weight() {
        return 0;
    }
    if !nu.contains(lambda) || !nu.contains(mu) {
        return 0;
    }
    let nrows = nu.len();
    let letters = mu.len();
    let mut counts = vec![0usize; letters + 1];
    let mut grid: Vec<Vec<usize>> = (1..=nrows).map(|r| vec![0; nu.part(r)]).collect();
    let mut total = 0u64;
    // fill in reverse reading order: rows top to bottom, right to left
    fill_skew(
        lambda,
        mu,
        nu,
        0,
        nu.part(1),
        &mut grid,
        &mut counts,
        &mut total,
    );
    total
}

#[allow(clippy::too_many_arguments)]
fn fill_skew(
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
    r: usize,
    c_plus1: usize,
    grid: &mut Vec<Vec<usize>>,
    counts: &mut Vec<usize>,
    total: &mut u64,
) {
    let (mut r, mut c_plus1) = (r, c_plus1);
    // move left past cells of λ, then to the next row
    loop {
        if r == grid.len() {
            *total += 1;
            return;
        }
        if c_plus1 == 0 || c_plus1 <= lambda.part(r + 1) {
            r += 1;
            c_plus1 = if r < grid.len() { nu.part(r + 1) } else { 0 };
        } else {
            break;
        }
    }
    let c = c_plus1 - 1; // 0-based column of the cell being filled
    let right = if c + 1 < grid[r].len() {
        grid[r][c + 1]
    } else {
        mu.len()
    };
    let above = if r > 0 && nu.part(r) > c && lambda.part(r) <= c {
        grid[r - 1][c]
    } else {
        0
    };
    for e in (above + 1)..=right {
        // lattice prefix condition and content bound
        if counts[e] + 1 > mu.part(e) || (e > 1 && counts[e] + 1 > counts[e - 1]) {
            continue;
        }
        counts[e] += 1;
        grid[r][c] = e;
        fill_skew(lambda, mu, nu, r, c, grid, counts, total);
        grid[r][c] = 0;
        counts[e] -= 1;
    }
}

/// Full product expansion `s_λ · s_μ = Σ_ν c_{λμ}^ν s_ν`, computed by adding
/// the rows of `μ` as horizontal strips subject to the lattice condition:
/// the strip of letter `i` may hold at most as many cells in rows `1..=r` as
/// the strip of letter `i-1` holds in rows `1..=r-1`.
pub fn lr_expand(lambda: &Partition, mu: &Partition) -> BTreeMap<Partition, u64> {
    let mut out = BTreeMap::new();
    expand_rec(lambda.parts().to_vec(), mu.parts(), None, &mut out);
    out
}

fn expand_rec(
    shape: Vec<usize>,
    remaining_rows: &[usize],
    prev_cum: Option<&[usize]>,
    out: &mut BTreeMap<Partition, u64>,
) {
    let Some((&size, rest)) = remaining_rows.split_first() else {
        *out.entry(Partition::new(shape)).or_insert(0) += 1;
        return;
    };
    let mut new_shape = Vec::with_capacity(shape.len() + 1);
    let mut cum = Vec::with_capacity(shape.len() + 1);
    place_letter(
        &shape,
        size,
        0,
        prev_cum,
        &mut new_shape,
        &mut cum,
        rest,
        out,
    );
}

#[allow(clippy::too_many_arguments)]
fn place_letter(
    shape: &[usize],
    left: usize,
    r: usize, // 0-based row being decided
    prev_cum: Option<&[usize]>,
    new_shape: &mut Vec<usize>,
    cum: &mut Vec<usize>,
    rest: &[usize],
    out: &mut BTreeMap<Partition, u64>,
) {
    if r == shape.len() + 1 {
        if left == 0 {
            let mut s = new_shape.clone();
            while s.last() == Some(&0) {
                s.pop();
            }
            expand_rec(s, rest, Some(cum), out);
        }
        return;
    }
    let cur = shape.get(r).copied().unwrap_or(0);
    // horizontal strip: the new row r may not reach past the old row r-1
    let strip_hi = if r == 0 {
        cur + left
    } else {
        shape[r - 1].min(cur + left)
    };
    let lattice_cap = match prev_cum {
        None => usize::MAX, // first letter is unconstrained
        Some(_) if r == 0 => 0,
        Some(pc) => pc
            .get(r - 1)
            .copied()
            .unwrap_or_else(|| *pc.last().unwrap()),
    };
    let placed_before = cum.last().copied().unwrap_or(0);
    for new_len in cur..=strip_hi {
        let placed = placed_before + (new_len - cur);
        if lattice_cap != usize::MAX && placed > lattice_cap {
            break;
        }
        new_shape.push(new_len);
        cum.push(placed);
        place_letter(
            shape,
            left - (new_len - cur),
            r + 1,
            prev_cum,
            new_shape,
            cum,
            rest,
            out,
        );
        cum.pop();
        new_shape.pop();
    }
}

/// Outcome of straightening an integer Schur index.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Straightened {
    /// `+1` or `-1`; vanishing indices are reported as `None` by
    /// [`straighten`].
    pub sign: i8,
    pub partition: Partition,
}

/// Straightens `s_v` for an arbitrary integer vector `v` of length `m`:
/// adds the staircase `(m-1, …, 1, 0)`, returns `None` when two entries
/// collide (the Schur index vanishes), otherwise sorts, records the sign of
/// the sorting permutation and subtracts the staircase again. Indices whose
/// straightened form has a negative part also vanish.
pub fn straighten(v: &[i64]) -> Option<Straightened> {
    let m = v.len();
    let mut shifted: Vec<i64> = v
        .iter()
        .enumerate()
        .map(|(j, &x)| x + (m - 1 - j) as i64)
        .collect();
    for i in 0..m {
        for j in i + 1..m {
            if shifted[i] == shifted[j] {
                return None;
            }
        }
    }
    // count inversions of the descending sort
    let mut sign = 1i8;
    for i in 0..m {
        for j in i + 1..m {
            if shifted[i] < shifted[j] {
                sign = -sign;
            }
        }
    }
    shifted.sort_unstable_by(|a, b| b.cmp(a));
    let mut parts = Vec::with_capacity(m);
    for (j, &x) in shifted.iter().enumerate() {
        let p = x - (m - 1 - j) as i64;
        if p < 0 {
            return None;
        }
        parts.push(p as usize);
    }
    Some(Straightened {
        sign,
        partition: Partition::new(parts),
    })
}

/// Weight-multiplicity table of SSYT: maps each occurring weight vector to
/// the number of tableaux carrying it (a Kostka number). Enumerated as
/// chains of horizontal strips, independently of the cell-by-cell filler.
pub fn ssyt_weight_multiplicities(
    shape: &Partition,
    max_entry: usize,
) -> BTreeMap<Vec<usize>, u64> {
    let mut out = BTreeMap::new();
    if shape.len() > max_entry {
        return out;
    }
    let mut weights = Vec::new();
    strip_chains(
        &Partition::empty(),
        shape,
        max_entry,
        1,
        &mut weights,
        &mut out,
    );
    out
}

fn strip_chains(
    current: &Partition,
    target: &Partition,
    max_entry: usize,
    step: usize,
    weights: &mut Vec<usize>,
    out: &mut BTreeMap<Vec<usize>, u64>,
) {
    if step > max_entry {
        if current == target {
            *out.entry(weights.clone()).or_insert(0) += 1;
        }
        return;
    }
    // grow `current` towards `target` by one horizontal strip; rows deeper
    // than the remaining number of steps must already be complete
    let remaining = max_entry - step;
    let mut acc = Vec::new();
    grow_strip(
        current.parts(),
        target,
        remaining,
        1,
        &mut acc,
        &mut |next: &[usize]| {
            let next_p = Partition::new(next.to_vec());
            weights.push(next_p.weight() - current.weight());
            strip_chains(&next_p, target, max_entry, step + 1, weights, out);
            weights.pop();
        },
    );
}

fn grow_strip(
    parts: &[usize],
    target: &Partition,
    remaining: usize,
    row: usize,
    acc: &mut Vec<usize>,
    emit: &mut impl FnMut(&[usize]),
) {
    if row > target.len() {
        let mut v = acc.clone();
        while v.last() == Some(&0) {
            v.pop();
        }
        emit(&v);
        return;
    }
    let cur = parts.get(row - 1).copied().unwrap_or(0);
    // strip condition: the grown row may not reach past the previous
    // shape's row above (rows more than one past the shape stay empty)
    let above = if row == 1 {
        usize::MAX
    } else {
        parts.get(row - 2).copied().unwrap_or(0)
    };
    // feasibility: rows below row + remaining can never be touched again
    let lo = cur.max(target.part(row + remaining));
    let hi = target.part(row).min(above);
    for new_len in lo..=hi {
        acc.push(new_len);
        grow_strip(parts, target, remaining, row + 1, acc, emit);
        acc.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::collections::BTreeMap;

    fn pt(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec())
    }

    #[test]
    fn enumerate_small_shapes() {
        assert_eq!(enumerate_ssyt(&Partition::empty(), 4).len(), 1);
        let singles = enumerate_ssyt(&pt(&[1]), 3);
        assert_eq!(singles.len(), 3);
        let weights: Vec<_> = singles.iter().map(|t| t.weight(3)).collect();
        assert!(weights.contains(&vec![1, 0, 0]));
        assert!(weights.contains(&vec![0, 1, 0]));
        assert!(weights.contains(&vec![0, 0, 1]));
    }

    #[test]
    fn fermionic_product_tableaux() {
        // shape (2,2,1) with 4 entries: K_{λ,(2,1,1,1)} = 2, K_{λ,(2,2,1,0)} = 1
        let shape = pt(&[2, 2, 1]);
        let tabs = enumerate_ssyt(&shape, 4);
        let mut by_weight: BTreeMap<Vec<usize>, u64> = BTreeMap::new();
        for t in &tabs {
            *by_weight.entry(t.weight(4)).or_insert(0) += 1;
        }
        assert_eq!(by_weight[&vec![2, 1, 1, 1]], 2);
        assert_eq!(by_weight[&vec![2, 2, 1, 0]], 1);
        assert_eq!(by_weight, ssyt_weight_multiplicities(&shape, 4));
    }

    #[test]
    fn kostka_examples() {
        assert_eq!(kostka(&pt(&[3, 2, 1]), &[2, 3, 0, 1, 0]), 1);
        assert_eq!(kostka(&pt(&[3, 1]), &[2, 1, 1]), 2);
        assert_eq!(kostka(&pt(&[3, 1]), &[3, 1, 0]), 1);
        for shape in [pt(&[3, 2, 1]), pt(&[4, 2]), pt(&[2, 2, 2])] {
            assert_eq!(kostka(&shape, shape.parts()), 1);
        }
        // size mismatch returns zero
        assert_eq!(kostka(&pt(&[2, 1]), &[1, 1, 1, 1]), 0);
    }

    #[test]
    fn kostka_routes_agree_and_permutation_invariance() {
        // exhaustive over the 4x4 box with all length-4 compositions
        for shape in crate::partitions::BoundingBox::new(4, 4).partitions() {
            let total = shape.weight();
            for a in 0..=total {
                for b in 0..=total - a {
                    for c in 0..=total - a - b {
                        let d = total - a - b - c;
                        let alpha = [a, b, c, d];
                        let k1 = kostka(&shape, &alpha);
                        let k2 = kostka_by_enumeration(&shape, &alpha);
                        assert_eq!(k1, k2, "λ={shape} α={alpha:?}");
                        let mut sorted = alpha;
                        sorted.sort_unstable_by(|x, y| y.cmp(x));
                        assert_eq!(k1, kostka(&shape, &sorted), "λ={shape} α={alpha:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn lr_examples() {
        let lam = pt(&[5, 4, 4, 2, 2]);
        let mu = pt(&[3, 2, 1]);
        assert_eq!(lr_coefficient(&lam, &mu, &pt(&[5, 5, 4, 3, 2, 2, 2])), 2);
        assert_eq!(lr_coefficient(&lam, &mu, &pt(&[5, 4, 4, 3, 2, 2, 2, 1])), 1);
        assert_eq!(lr_coefficient(&lam, &Partition::empty(), &lam), 1);
    }

    #[test]
    fn lr_expand_product_of_31_and_32() {
        // s_{(3,1)} s_{(3,2)}: fourteen terms, (5,3,1) and (4,3,2) twice
        let exp = lr_expand(&pt(&[3, 1]), &pt(&[3, 2]));
        let expected: BTreeMap<Partition, u64> = [
            (pt(&[6, 3]), 1),
            (pt(&[6, 2, 1]), 1),
            (pt(&[5, 4]), 1),
            (pt(&[5, 3, 1]), 2),
            (pt(&[5, 2, 2]), 1),
            (pt(&[4, 4, 1]), 1),
            (pt(&[4, 3, 2]), 2),
            (pt(&[3, 3, 3]), 1),
            (pt(&[5, 2, 1, 1]), 1),
            (pt(&[4, 3, 1, 1]), 1),
            (pt(&[4, 2, 2, 1]), 1),
            (pt(&[3, 3, 2, 1]), 1),
        ]
        .into_iter()
        .collect();
        assert_eq!(exp, expected);
        assert_eq!(
            lr_expand(&Partition::empty(), &pt(&[2, 1]))[&pt(&[2, 1])],
            1
        );
    }

    #[test]
    fn lr_expand_agrees_with_skew_count() {
        let pairs = [
            (pt(&[2, 1]), pt(&[2, 1])),
            (pt(&[3, 1]), pt(&[3, 2])),
            (pt(&[2, 2]), pt(&[2, 2])),
            (pt(&[3, 2, 1]), pt(&[2, 2])),
        ];
        for (lam, mu) in pairs {
            let exp = lr_expand(&lam, &mu);
            let total: u64 = exp.values().sum();
            assert!(total > 0);
            for (nu, &c) in &exp {
                assert_eq!(c, lr_coefficient(&lam, &mu, nu), "λ={lam} μ={mu} ν={nu}");
            }
            // no missed shapes: every ν of the right size is consistent
            for nu in exp.keys() {
                assert_eq!(nu.weight(), lam.weight() + mu.weight());
            }
        }
    }

    #[test]
    fn lr_symmetries() {
        // c_{λμ}^ν = c_{μλ}^ν = c_{λ^t μ^t}^{ν^t} for all |ν| <= 8
        let small: Vec<Partition> = crate::partitions::BoundingBox::new(8, 8)
            .partitions()
            .into_iter()
            .filter(|p| p.weight() <= 8)
            .collect();
        for lam in &small {
            for mu in &small {
                if lam.weight() + mu.weight() > 8 || lam > mu {
                    continue;
                }
                let exp = lr_expand(lam, mu);
                for (nu, &c) in &exp {
                    assert_eq!(c, lr_coefficient(mu, lam, nu));
                    assert_eq!(
                        c,
                        lr_coefficient(&lam.transpose(), &mu.transpose(), &nu.transpose())
                    );
                }
            }
        }
    }

    #[test]
    fn kostka_as_lr() {
        // K_{λ,α} = c_{λ,μ(α)}^{ν(α)} with μ_i = Σ_{j>i} α_j, ν_i = Σ_{j>=i} α_j
        for shape in crate::partitions::BoundingBox::new(3, 3).partitions() {
            let total = shape.weight();
            for a in 0..=total {
                for b in 0..=total - a {
                    let c = total - a - b;
                    let alpha = [a, b, c];
                    let mu: Vec<usize> = (0..3).map(|i| alpha[i + 1..].iter().sum()).collect();
                    let nu: Vec<usize> = (0..3).map(|i| alpha[i..].iter().sum()).collect();
                    assert_eq!(
                        kostka(&shape, &alpha),
                        lr_coefficient(&shape, &Partition::new(mu), &Partition::new(nu)),
                        "λ={shape} α={alpha:?}"
                    );
                }
            }
        }
    }

    #[test]
    fn straighten_examples() {
        let s = straighten(&[-2, 3, 1]).unwrap();
        assert_eq!((s.sign, s.partition), (1, pt(&[2])));
        assert!(straighten(&[3, 2, 0, 1]).is_none());
        for p in [pt(&[3, 1]), pt(&[2, 2, 2]), Partition::empty()] {
            let v: Vec<i64> = p.padded(4).iter().map(|&x| x as i64).collect();
            let s = straighten(&v).unwrap();
            assert_eq!((s.sign, s.partition.clone()), (1, p));
            // idempotent on its own output
            let v2: Vec<i64> = s.partition.padded(4).iter().map(|&x| x as i64).collect();
            let s2 = straighten(&v2).unwrap();
            assert_eq!((s2.sign, s2.partition), (1, s.partition));
        }
    }

    #[test]
    fn strip_examples() {
        let strips = horizontal_strips(&pt(&[2, 1]), 1);
        assert_eq!(strips, vec![pt(&[1, 1]), pt(&[2])]);
        assert!(horizontal_strips(&pt(&[2, 1]), 3).is_empty());
        assert_eq!(horizontal_strips(&pt(&[2, 1]), 0), vec![pt(&[2, 1])]);
        let v = vertical_strips(&pt(&[2, 1]), 1);
        assert_eq!(v, vec![pt(&[1, 1]), pt(&[2])]);
        assert_eq!(vertical_strips(&pt(&[2, 2]), 2), vec![pt(&[1, 1])]);
    }

    /// Brute-force oracle: expand `s_λ(x_1..x_m)` as a monomial table via
    /// tableau enumeration and check `s_λ s_μ = Σ_ν c_{λμ}^ν s_ν`.
    fn monomials(p: &Partition, m: usize) -> BTreeMap<Vec<usize>, i64> {
        let mut out = BTreeMap::new();
        for (w, c) in ssyt_weight_multiplicities(p, m) {
            *out.entry(w).or_insert(0) += c as i64;
        }
        out
    }

    #[test]
    fn lr_expand_against_monomial_oracle() {
        let m = 4;
        let pairs = [
            (pt(&[2, 1]), pt(&[2, 1])),
            (pt(&[3, 1]), pt(&[2, 2])),
            (pt(&[2, 2]), pt(&[1, 1])),
        ];
        for (lam, mu) in pairs {
            let mut product: BTreeMap<Vec<usize>, i64> = BTreeMap::new();
            for (wa, ca) in monomials(&lam, m) {
                for (wb, cb) in monomials(&mu, m) {
                    let key: Vec<usize> = wa.iter().zip(&wb).map(|(a, b)| a + b).collect();
                    *product.entry(key).or_insert(0) += ca * cb;
                }
            }
            for (nu, c) in lr_expand(&lam, &mu) {
                if nu.len() > m {
                    continue; // no monomials in m variables
                }
                for (w, k) in monomials(&nu, m) {
                    *product.entry(w).or_insert(0) -= c as i64 * k;
                }
            }
            assert!(product.values().all(|&v| v == 0), "λ={lam} μ={mu}");
        }
    }
}
