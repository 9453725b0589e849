//! Partitions, bounding boxes and the bijection with 01-words.
//!
//! A partition `λ` with at most `n` parts, each at most `k`, corresponds to
//! a word of length `N = n + k` over `{0,1}` with exactly `n` one-letters:
//! reading the one-positions right to left as `ℓ_1 > … > ℓ_n`, the bijection
//! is `ℓ_i = λ_i + n + 1 - i`. The word picture (a Maya diagram on a circle
//! of `N` sites) is what makes the Clifford-algebra product and the two
//! Dynkin-diagram rotations `rot` (order `n`) and `Rot` (order `N`) cheap to
//! compute.

use alloc::vec::Vec;
use core::fmt;

/// A partition: weakly decreasing nonnegative parts, trailing zeros trimmed.
///
/// The canonical form never stores trailing zeros, so `(2,1,0)` and `(2,1)`
/// compare equal. Box-aware operations zero-pad internally.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition from weakly decreasing parts; trailing zeros are
    /// trimmed. Panics if the sequence increases anywhere.
    pub fn new(parts: impl Into<Vec<usize>>) -> Self {
        let mut parts = parts.into();
        assert!(
            parts.windows(2).all(|w| w[0] >= w[1]),
            "partition parts must be weakly decreasing: {parts:?}"
        );
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `λ_i` with 1-based index `i`; zero beyond the last part.
    pub fn part(&self, i: usize) -> usize {
        assert!(i >= 1, "parts are 1-indexed");
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    /// Total number of boxes `|λ|`.
    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Containment of Young diagrams: `self_i >= other_i` for all rows.
    pub fn contains(&self, other: &Partition) -> bool {
        other
            .parts
            .iter()
            .enumerate()
            .all(|(i, &p)| self.part(i + 1) >= p)
    }

    /// Conjugate partition `λ^t_j = #{i : λ_i >= j}`; an involution.
    pub fn transpose(&self) -> Partition {
        let cols = self.part(1);
        let parts = (1..=cols)
            .map(|j| self.parts.iter().filter(|&&p| p >= j).count())
            .collect::<Vec<_>>();
        Partition { parts }
    }

    /// Parts padded with zeros to length `n`. Panics if `λ` has more than
    /// `n` parts.
    pub fn padded(&self, n: usize) -> Vec<usize> {
        assert!(self.len() <= n, "partition {self} has more than {n} parts");
        let mut v = self.parts.clone();
        v.resize(n, 0);
        v
    }

    /// Multiplicity of columns of height exactly `n` (requires `len <= n`);
    /// equals `λ_n` when the partition is padded to `n` rows.
    pub fn full_columns(&self, n: usize) -> usize {
        assert!(self.len() <= n);
        if n == 0 {
            0
        } else {
            self.part(n)
        }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// The `n x k` bounding box of `Gr_{n,n+k}`; `N = n + k` is the number of
/// sites of the word picture.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct BoundingBox {
    n: usize,
    k: usize,
}

impl BoundingBox {
    /// Panics unless `1 <= n + k <= 64` (words are stored in a `u64`).
    pub fn new(n: usize, k: usize) -> Self {
        assert!(n + k >= 1, "bounding box needs n + k >= 1");
        assert!(n + k <= 64, "word length n + k = {} exceeds 64", n + k);
        BoundingBox { n, k }
    }

    pub fn rows(&self) -> usize {
        self.n
    }

    pub fn cols(&self) -> usize {
        self.k
    }

    /// `N = n + k`.
    pub fn sites(&self) -> usize {
        self.n + self.k
    }

    pub fn contains(&self, p: &Partition) -> bool {
        p.len() <= self.n && p.part(1) <= self.k
    }

    /// All partitions fitting the box, ascending in lexicographic order.
    /// There are `C(n+k, n)` of them.
    pub fn partitions(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut stack = Vec::new();
        collect_box_partitions(self.n, self.k, &mut stack, &mut out);
        out.sort();
        out
    }

    /// Complement `ν^∨ = (k - ν_n, …, k - ν_1)`; an involution on the box.
    pub fn complement(&self, p: &Partition) -> Partition {
        assert!(self.contains(p), "{p} does not fit {self:?}");
        let padded = p.padded(self.n);
        let parts = padded.iter().rev().map(|&x| self.k - x).collect::<Vec<_>>();
        Partition::new(parts)
    }
}

fn collect_box_partitions(
    rows: usize,
    max: usize,
    stack: &mut Vec<usize>,
    out: &mut Vec<Partition>,
) {
    out.push(Partition::new(stack.clone()));
    if rows == 0 {
        return;
    }
    let lo = 1;
    let hi = stack.last().copied().unwrap_or(max);
    for part in lo..=hi {
        stack.push(part);
        collect_box_partitions(rows - 1, max, stack, out);
        stack.pop();
    }
}

/// A fixed-length 01-word; position `i` (1-based, leftmost = 1) is bit
/// `i - 1` of the mask. The number of 1-letters is the particle number.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BitWord {
    len: u8,
    mask: u64,
}

impl BitWord {
    pub fn new(len: usize, mask: u64) -> Self {
        assert!((1..=64).contains(&len));
        assert!(
            len == 64 || mask < (1u64 << len),
            "mask has bits beyond position {len}"
        );
        BitWord {
            len: len as u8,
            mask,
        }
    }

    /// Parses a string over `{0,1}`, position 1 leftmost.
    pub fn parse(s: &str) -> Option<Self> {
        if s.is_empty() || s.len() > 64 {
            return None;
        }
        let mut mask = 0u64;
        for (i, c) in s.chars().enumerate() {
            match c {
                '1' => mask |= 1u64 << i,
                '0' => {}
                _ => return None,
            }
        }
        Some(BitWord::new(s.len(), mask))
    }

    #[allow(clippy::len_without_is_empty)] // words have length >= 1
    pub fn len(&self) -> usize {
        self.len as usize
    }

    /// Bit at 1-based position `i`.
    pub fn bit(&self, i: usize) -> bool {
        assert!(i >= 1 && i <= self.len());
        self.mask >> (i - 1) & 1 == 1
    }

    pub fn with_bit(&self, i: usize, value: bool) -> Self {
        assert!(i >= 1 && i <= self.len());
        let mut mask = self.mask;
        if value {
            mask |= 1u64 << (i - 1);
        } else {
            mask &= !(1u64 << (i - 1));
        }
        BitWord {
            len: self.len,
            mask,
        }
    }

    /// Particle number: total count of 1-letters.
    pub fn ones(&self) -> usize {
        self.mask.count_ones() as usize
    }

    /// `n_a(w)`: number of 1-letters in positions `1..=a` (`0 <= a <= N`).
    pub fn prefix_ones(&self, a: usize) -> usize {
        assert!(a <= self.len());
        if a == 0 {
            0
        } else {
            (self.mask & (u64::MAX >> (64 - a))).count_ones() as usize
        }
    }

    /// One-positions read right to left: `ℓ_1 > ℓ_2 > … > ℓ_n`.
    pub fn positions_desc(&self) -> Vec<usize> {
        (1..=self.len()).rev().filter(|&i| self.bit(i)).collect()
    }

    /// Cyclic left rotation by `steps`: position 1 moves to position `N`.
    pub fn rotate_left(&self, steps: usize) -> Self {
        let n = self.len();
        let s = steps % n;
        if s == 0 {
            return *self;
        }
        let low = self.mask >> s;
        let high = (self.mask & (u64::MAX >> (64 - s))) << (n - s);
        BitWord {
            len: self.len,
            mask: low | high,
        }
    }

    /// The partition encoded by this word (particle number read off the word).
    pub fn to_partition(&self) -> Partition {
        partition_of_word(self)
    }
}

impl fmt::Display for BitWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 1..=self.len() {
            write!(f, "{}", if self.bit(i) { '1' } else { '0' })?;
        }
        Ok(())
    }
}

impl fmt::Debug for BitWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `λ -> w(λ)` with one-positions `ℓ_i = λ_i + n + 1 - i`. Panics if `λ`
/// does not fit the box.
pub fn word_of_partition(p: &Partition, bx: BoundingBox) -> BitWord {
    assert!(bx.contains(p), "{p} does not fit {bx:?}");
    let n = bx.rows();
    let mut mask = 0u64;
    for i in 1..=n {
        let pos = p.part(i) + n + 1 - i;
        mask |= 1u64 << (pos - 1);
    }
    BitWord::new(bx.sites(), mask)
}

/// Inverse of [`word_of_partition`]: `λ_i = ℓ_i - (n + 1 - i)`.
pub fn partition_of_word(w: &BitWord) -> Partition {
    let n = w.ones();
    let parts = w
        .positions_desc()
        .iter()
        .enumerate()
        .map(|(idx, &pos)| pos - (n - idx))
        .collect::<Vec<_>>();
    Partition::new(parts)
}

/// Removes all columns of maximal height `n`: subtracts `λ_n` from every
/// part when `λ` has exactly `n` nonzero parts, otherwise returns `λ`.
pub fn column_reduce(p: &Partition, n: usize) -> Partition {
    assert!(p.len() <= n, "{p} has more than {n} parts");
    if n == 0 || p.len() < n {
        return p.clone();
    }
    let last = p.part(n);
    Partition::new(p.parts().iter().map(|&x| x - last).collect::<Vec<_>>())
}

/// Removes all rows of maximal length `k`.
pub fn row_reduce(p: &Partition, k: usize) -> Partition {
    assert!(p.part(1) <= k, "{p} has a row longer than {k}");
    Partition::new(
        p.parts()
            .iter()
            .copied()
            .filter(|&x| x != k)
            .collect::<Vec<_>>(),
    )
}

/// The order-`n` Dynkin diagram rotation on `P_{<= n-1, k}`: prepend a row
/// of width `k`, then delete all columns of height `n`. Iterated `d` times;
/// negative counts are taken modulo `n`.
pub fn rot(p: &Partition, n: usize, k: usize, d: i64) -> Partition {
    assert!(n >= 1);
    assert!(
        p.len() < n && p.part(1) <= k,
        "{p} is not a level-{k} sl({n}) label"
    );
    let steps = d.rem_euclid(n as i64) as usize;
    let mut cur = p.clone();
    for _ in 0..steps {
        let mut parts = Vec::with_capacity(cur.len() + 1);
        parts.push(k);
        parts.extend_from_slice(cur.parts());
        cur = column_reduce(&Partition::new(parts), n);
    }
    cur
}

/// The order-`N` rotation on `P_{<= n,k}`: one step is the cyclic left
/// rotation of the 01-word (the letter at position 1 moves to position `N`).
/// Negative counts are taken modulo `N`.
pub fn big_rot(p: &Partition, bx: BoundingBox, a: i64) -> Partition {
    let big_n = bx.sites();
    let steps = a.rem_euclid(big_n as i64) as usize;
    partition_of_word(&word_of_partition(p, bx).rotate_left(steps))
}

/// `n_a(w(λ))`: the number of 1-letters of the word of `λ` among positions
/// `1..=a`.
pub fn n_counter(p: &Partition, bx: BoundingBox, a: usize) -> usize {
    word_of_partition(p, bx).prefix_ones(a)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec())
    }

    #[test]
    fn word_of_partition_examples() {
        // positions ℓ(μ) = (7,6,4,2) for μ = (3,3,2,1) in the 4x3 box
        let bx = BoundingBox::new(4, 3);
        let w = word_of_partition(&pt(&[3, 3, 2, 1]), bx);
        assert_eq!(w.to_string(), "0101011");
        assert_eq!(w.positions_desc(), vec![7, 6, 4, 2]);

        let bx22 = BoundingBox::new(2, 2);
        assert_eq!(
            word_of_partition(&Partition::empty(), bx22).to_string(),
            "1100"
        );
        assert_eq!(word_of_partition(&pt(&[2, 2]), bx22).to_string(), "0011");
    }

    #[test]
    #[should_panic]
    fn word_of_partition_rejects_oversized() {
        word_of_partition(&pt(&[4]), BoundingBox::new(2, 3));
    }

    #[test]
    fn partition_of_word_examples() {
        assert_eq!(
            partition_of_word(&BitWord::parse("0101011").unwrap()),
            pt(&[3, 3, 2, 1])
        );
        assert_eq!(
            partition_of_word(&BitWord::parse("1001101").unwrap()),
            pt(&[3, 2, 2])
        );
        assert_eq!(
            partition_of_word(&BitWord::parse("1110000").unwrap()),
            Partition::empty()
        );
    }

    #[test]
    fn round_trip_all_small_boxes() {
        for big_n in 1..=8usize {
            for n in 0..=big_n {
                let bx = BoundingBox::new(n, big_n - n);
                for p in bx.partitions() {
                    let w = word_of_partition(&p, bx);
                    assert_eq!(w.ones(), n);
                    assert_eq!(partition_of_word(&w), p);
                }
            }
        }
    }

    #[test]
    fn box_partition_count() {
        // C(n+k, n) Schubert classes
        assert_eq!(BoundingBox::new(3, 3).partitions().len(), 20);
        assert_eq!(BoundingBox::new(2, 3).partitions().len(), 10);
        assert_eq!(BoundingBox::new(0, 5).partitions().len(), 1);
    }

    #[test]
    fn transpose_examples() {
        assert_eq!(pt(&[3, 1]).transpose(), pt(&[2, 1, 1]));
        assert_eq!(Partition::empty().transpose(), Partition::empty());
        // column-count oracle
        assert_eq!(pt(&[5, 4, 4, 2, 2]).transpose(), pt(&[5, 5, 3, 3, 1]));
        for p in BoundingBox::new(3, 4).partitions() {
            assert_eq!(p.transpose().transpose(), p);
        }
    }

    #[test]
    fn complement_examples() {
        let bx = BoundingBox::new(3, 4);
        assert_eq!(bx.complement(&pt(&[2, 1])), pt(&[4, 3, 2]));
        assert_eq!(bx.complement(&pt(&[4, 4, 4])), Partition::empty());
        assert_eq!(bx.complement(&Partition::empty()), pt(&[4, 4, 4]));
        for p in bx.partitions() {
            assert_eq!(bx.complement(&bx.complement(&p)), p);
        }
    }

    #[test]
    fn reduction_examples() {
        assert_eq!(column_reduce(&pt(&[2, 2, 1]), 4), pt(&[2, 2, 1]));
        assert_eq!(column_reduce(&pt(&[1, 1, 1]), 3), Partition::empty());
        assert_eq!(column_reduce(&pt(&[4, 3, 2]), 3), pt(&[2, 1]));
        assert_eq!(row_reduce(&pt(&[3, 1]), 3), pt(&[1]));
        assert_eq!(row_reduce(&Partition::empty(), 4), Partition::empty());
    }

    #[test]
    fn reductions_commute_with_transpose() {
        // (λ')^t = (λ^t)'' on the 3x4 box
        let bx = BoundingBox::new(3, 4);
        for p in bx.partitions() {
            let lhs = column_reduce(&p, 3).transpose();
            let rhs = row_reduce(&p.transpose(), 3);
            assert_eq!(lhs, rhs, "failed for {p}");
        }
    }

    #[test]
    fn rot_examples() {
        assert_eq!(rot(&pt(&[1, 1, 1]), 4, 3, 1), pt(&[2]));
        assert_eq!(rot(&Partition::empty(), 4, 3, 2), pt(&[3, 3]));
        // exact order n on P_{<= n-1, k}
        let (n, k) = (3, 4);
        for p in BoundingBox::new(n - 1, k).partitions() {
            assert_eq!(rot(&p, n, k, n as i64), p);
            assert_eq!(rot(&rot(&p, n, k, 1), n, k, -1), p);
        }
    }

    #[test]
    fn big_rot_examples() {
        let bx = BoundingBox::new(3, 4);
        assert_eq!(big_rot(&pt(&[4, 2]), bx, -1), pt(&[2]));
        for p in bx.partitions() {
            assert_eq!(big_rot(&p, bx, bx.sites() as i64), p);
        }
        // λ_n > 0 forces (λ_1 - 1, …, λ_n - 1)
        assert_eq!(big_rot(&pt(&[4, 2, 1]), bx, 1), pt(&[3, 1]));
    }

    #[test]
    fn big_rot_weight_formula() {
        // |Rot^a(λ)| = |λ| + N n_a(λ) - a n
        for big_n in 2..=8usize {
            for n in 0..=big_n {
                let bx = BoundingBox::new(n, big_n - n);
                for p in bx.partitions() {
                    for a in 0..=big_n {
                        let lhs = big_rot(&p, bx, a as i64).weight() as i64;
                        let rhs = p.weight() as i64 + (big_n * n_counter(&p, bx, a)) as i64
                            - (a * n) as i64;
                        assert_eq!(lhs, rhs, "λ={p} box=({n},{}) a={a}", big_n - n);
                    }
                }
            }
        }
    }

    #[test]
    fn rot_of_reduction_is_big_rot() {
        // rot^a(σ') = Rot^{ℓ_{n-a}(σ)-1}(σ) for a = 1..n-1; the right side
        // starts with a 1-letter, so it is already column reduced.
        let (n, k) = (3usize, 4usize);
        let bx = BoundingBox::new(n, k);
        for sigma in bx.partitions() {
            let word = word_of_partition(&sigma, bx);
            let ell = word.positions_desc();
            for a in 1..n {
                let lhs = rot(&column_reduce(&sigma, n), n, k, a as i64);
                let rhs = big_rot(&sigma, bx, (ell[n - a - 1] - 1) as i64);
                assert_eq!(lhs, rhs, "σ={sigma} a={a}");
            }
        }
    }

    #[test]
    fn n_counter_examples() {
        let bx = BoundingBox::new(3, 4);
        let p = pt(&[2, 1]);
        // w((2,1)) = 1010100 in the 3x4 box
        assert_eq!(word_of_partition(&p, bx).to_string(), "1010100");
        assert_eq!(n_counter(&p, bx, 3), 2);
        assert_eq!(n_counter(&p, bx, 0), 0);
        assert_eq!(n_counter(&p, bx, bx.sites()), 3);
    }

    #[test]
    fn rotation_maps_have_exact_orders() {
        // Rot has exact order N on the box; rot exact order n on labels
        for big_n in 2..=8usize {
            for n in 1..=big_n {
                let bx = BoundingBox::new(n, big_n - n);
                let parts = bx.partitions();
                for a in 1..big_n {
                    assert!(
                        parts.iter().any(|p| big_rot(p, bx, a as i64) != *p) || parts.len() == 1,
                        "Rot^{a} fixed every element of box({n},{})",
                        big_n - n
                    );
                }
                for p in &parts {
                    assert_eq!(big_rot(p, bx, big_n as i64), *p);
                }
                if n >= 2 {
                    let labels = BoundingBox::new(n - 1, big_n - n).partitions();
                    for a in 1..n {
                        assert!(
                            labels.iter().any(|p| rot(p, n, big_n - n, a as i64) != *p)
                                || labels.len() == 1,
                            "rot^{a} fixed every label of sl({n}) level {}",
                            big_n - n
                        );
                    }
                    for p in &labels {
                        assert_eq!(rot(p, n, big_n - n, n as i64), *p);
                    }
                }
            }
        }
    }

    #[test]
    fn word_rotation_is_cyclic() {
        let w = BitWord::parse("1001010").unwrap();
        assert_eq!(w.rotate_left(1).to_string(), "0010101");
        assert_eq!(w.rotate_left(7), w);
    }
}
