//! The finite Clifford algebra on the q-deformed Fock space.
//!
//! Basis states are 01-words of length `N`; `ψ*_i` sets the letter at site
//! `i` (creation) and `ψ_i` clears it (annihilation), both with the sign
//! `(-1)^{n_{i-1}(w)}`. Sites beyond `N` wrap quasi-periodically,
//!
//! ```text
//!   ψ*_{i+N} = (-1)^{n̂+1} q ψ*_i,      ψ̄*_{i+N} = (-1)^{n̂} q ψ̄*_i,
//! ```
//!
//! where `n̂` is the particle number operator, evaluated on each basis term
//! at application time. The nil-Temperley-Lieb letters `u_i = ψ*_{i+1} ψ_i`
//! (with `u_N = (-1)^{n̂-1} q ψ*_1 ψ_N`) generate commuting noncommutative
//! elementary and complete symmetric polynomials, whose Jacobi-Trudi
//! determinants give the noncommutative Schur operators `s_λ`. Applying
//! `s_λ` to the word of `μ` — or equivalently summing the tableau-indexed
//! creation monomials of the star product — expands `λ ⋆ μ` in the quantum
//! cohomology ring.
//!
//! Coefficients are integer polynomials in `q`; no floating point or
//! rational arithmetic appears here.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::partitions::{word_of_partition, BitWord, BoundingBox, Partition};
use crate::tableaux::{horizontal_strips, ssyt_weight_multiplicities};

/// An integer polynomial in the deformation parameter `q`. Zero
/// coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct QPoly {
    coeffs: BTreeMap<u32, BigInt>,
}

impl QPoly {
    pub fn zero() -> Self {
        QPoly::default()
    }

    pub fn one() -> Self {
        QPoly::monomial(0, BigInt::one())
    }

    pub fn monomial(degree: u32, coeff: BigInt) -> Self {
        let mut coeffs = BTreeMap::new();
        if !coeff.is_zero() {
            coeffs.insert(degree, coeff);
        }
        QPoly { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient of `q^degree`.
    pub fn coeff(&self, degree: u32) -> BigInt {
        self.coeffs
            .get(&degree)
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (u32, &BigInt)> {
        self.coeffs.iter().map(|(&d, c)| (d, c))
    }

    pub fn add_assign(&mut self, other: &QPoly) {
        for (&d, c) in &other.coeffs {
            let entry = self.coeffs.entry(d).or_insert_with(BigInt::zero);
            *entry += c;
            if entry.is_zero() {
                self.coeffs.remove(&d);
            }
        }
    }

    pub fn scaled(&self, factor: &BigInt) -> QPoly {
        if factor.is_zero() {
            return QPoly::zero();
        }
        QPoly {
            coeffs: self.coeffs.iter().map(|(&d, c)| (d, c * factor)).collect(),
        }
    }

    /// Multiplies by `sign * q^shift`.
    pub fn shifted(&self, shift: u32, sign: i8) -> QPoly {
        let factor = BigInt::from(sign);
        QPoly {
            coeffs: self
                .coeffs
                .iter()
                .map(|(&d, c)| (d + shift, c * &factor))
                .collect(),
        }
    }

    pub fn mul(&self, other: &QPoly) -> QPoly {
        let mut out = QPoly::zero();
        for (&d1, c1) in &self.coeffs {
            for (&d2, c2) in &other.coeffs {
                let entry = out.coeffs.entry(d1 + d2).or_insert_with(BigInt::zero);
                *entry += c1 * c2;
            }
        }
        out.coeffs.retain(|_, c| !c.is_zero());
        out
    }

    /// Substitutes `q -> -q`.
    pub fn bar(&self) -> QPoly {
        QPoly {
            coeffs: self
                .coeffs
                .iter()
                .map(|(&d, c)| (d, if d % 2 == 1 { -c } else { c.clone() }))
                .collect(),
        }
    }
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (&d, c)) in self.coeffs.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            let unit_coeff = abs.is_one() && d > 0;
            if !unit_coeff {
                write!(f, "{abs}")?;
            }
            match d {
                0 => {}
                1 => write!(f, "q")?,
                _ => write!(f, "q^{d}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A finite linear combination of 01-words with [`QPoly`] coefficients; all
/// words share one length and particle number.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct FockState {
    sites: usize,
    terms: BTreeMap<BitWord, QPoly>,
}

impl FockState {
    pub fn zero(sites: usize) -> Self {
        FockState {
            sites,
            terms: BTreeMap::new(),
        }
    }

    /// The vacuum `∅`: the all-zero word with coefficient one.
    pub fn vacuum(sites: usize) -> Self {
        FockState::basis(BitWord::new(sites, 0))
    }

    pub fn basis(word: BitWord) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(word, QPoly::one());
        FockState {
            sites: word.len(),
            terms,
        }
    }

    pub fn sites(&self) -> usize {
        self.sites
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Particle number shared by all terms; `None` for the zero state.
    pub fn particles(&self) -> Option<usize> {
        let p = self.terms.keys().next()?.ones();
        debug_assert!(self.terms.keys().all(|w| w.ones() == p));
        Some(p)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&BitWord, &QPoly)> {
        self.terms.iter()
    }

    /// Scalar product `⟨w, state⟩`: the coefficient of the basis word `w`.
    pub fn coeff(&self, word: &BitWord) -> QPoly {
        self.terms.get(word).cloned().unwrap_or_else(QPoly::zero)
    }

    pub fn add_term(&mut self, word: BitWord, poly: QPoly) {
        assert_eq!(word.len(), self.sites);
        if poly.is_zero() {
            return;
        }
        let entry = self.terms.entry(word).or_default();
        entry.add_assign(&poly);
        if entry.is_zero() {
            self.terms.remove(&word);
        }
    }

    pub fn add_assign(&mut self, other: &FockState) {
        assert_eq!(self.sites, other.sites);
        for (w, p) in &other.terms {
            self.add_term(*w, p.clone());
        }
    }

    pub fn scaled(&self, factor: &BigInt) -> FockState {
        if factor.is_zero() {
            return FockState::zero(self.sites);
        }
        FockState {
            sites: self.sites,
            terms: self
                .terms
                .iter()
                .map(|(w, p)| (*w, p.scaled(factor)))
                .collect(),
        }
    }

    /// Applies a word-level operator to every term. The closure returns the
    /// image word together with a sign and a power of `q`, or `None` when
    /// the term is annihilated. `q_sign` substitutes `q -> -q` per picked-up
    /// power (used for the barred Schur operators).
    fn map_words(
        &self,
        q_sign: i8,
        f: impl Fn(&BitWord) -> Option<(BitWord, i8, u32)>,
    ) -> FockState {
        let mut out = FockState::zero(self.sites);
        for (w, p) in &self.terms {
            if let Some((image, sign, q_pow)) = f(w) {
                let total_sign = if q_sign < 0 && q_pow % 2 == 1 {
                    -sign
                } else {
                    sign
                };
                out.add_term(image, p.shifted(q_pow, total_sign));
            }
        }
        out
    }
}

impl fmt::Display for FockState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (w, p)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({p})|{w}⟩")?;
        }
        Ok(())
    }
}

impl fmt::Debug for FockState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Creation or annihilation, optionally barred, at a (possibly extended)
/// site `>= 1`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct OperatorKind {
    pub create: bool,
    pub barred: bool,
    pub site: usize,
}

impl OperatorKind {
    pub fn create(site: usize) -> Self {
        OperatorKind {
            create: true,
            barred: false,
            site,
        }
    }

    pub fn barred_create(site: usize) -> Self {
        OperatorKind {
            create: true,
            barred: true,
            site,
        }
    }

    pub fn annihilate(site: usize) -> Self {
        OperatorKind {
            create: false,
            barred: false,
            site,
        }
    }
}

fn create_word(w: &BitWord, site: usize) -> Option<(BitWord, i8, u32)> {
    if w.bit(site) {
        return None;
    }
    let sign = if w.prefix_ones(site - 1).is_multiple_of(2) {
        1
    } else {
        -1
    };
    Some((w.with_bit(site, true), sign, 0))
}

fn annihilate_word(w: &BitWord, site: usize) -> Option<(BitWord, i8, u32)> {
    if !w.bit(site) {
        return None;
    }
    let sign = if w.prefix_ones(site - 1).is_multiple_of(2) {
        1
    } else {
        -1
    };
    Some((w.with_bit(site, false), sign, 0))
}

/// `ψ*_i` for `1 <= i <= N`.
pub fn apply_create(site: usize, s: &FockState) -> FockState {
    assert!(site >= 1 && site <= s.sites());
    s.map_words(1, |w| create_word(w, site))
}

/// `ψ_i` for `1 <= i <= N`.
pub fn apply_annihilate(site: usize, s: &FockState) -> FockState {
    assert!(site >= 1 && site <= s.sites());
    s.map_words(1, |w| annihilate_word(w, site))
}

/// Applies an operator whose site may exceed `N` once; the wrap multiplies
/// by `q` and by the eigenvalue of `(-1)^{n̂+1}` (unbarred) or `(-1)^{n̂}`
/// (barred). The particle number operator stands to the left of the reduced
/// operator, so for creation it sees the term with the particle already
/// added; for annihilation (the adjoint identity) it acts first.
pub fn apply_extended(op: OperatorKind, s: &FockState) -> FockState {
    apply_extended_signed(op, s, 1)
}

fn apply_extended_signed(op: OperatorKind, s: &FockState, q_sign: i8) -> FockState {
    let n_sites = s.sites();
    assert!(op.site >= 1, "sites are 1-based");
    assert!(
        op.site < 2 * n_sites,
        "site {} wraps more than once (N = {n_sites})",
        op.site
    );
    let (site, wraps) = if op.site > n_sites {
        (op.site - n_sites, 1u32)
    } else {
        (op.site, 0u32)
    };
    s.map_words(q_sign, |w| {
        let base = if op.create {
            create_word(w, site)
        } else {
            annihilate_word(w, site)
        };
        let (image, sign, _) = base?;
        if wraps == 0 {
            return Some((image, sign, 0));
        }
        let eigenvalue = if op.create { w.ones() + 1 } else { w.ones() };
        let flip = if op.barred {
            eigenvalue % 2 == 1
        } else {
            eigenvalue % 2 == 0
        };
        Some((image, if flip { -sign } else { sign }, 1))
    })
}

/// The nil-Temperley-Lieb letter `u_i = ψ*_{i+1} ψ_i` for `i < N` and
/// `u_N = (-1)^{n̂-1} q ψ*_1 ψ_N`.
pub fn nil_tl_letter(i: usize, s: &FockState) -> FockState {
    nil_tl_letter_signed(i, s, 1)
}

fn nil_tl_letter_signed(i: usize, s: &FockState, q_sign: i8) -> FockState {
    let n_sites = s.sites();
    assert!(i >= 1 && i <= n_sites);
    s.map_words(q_sign, |w| {
        if i < n_sites {
            let (w1, s1, _) = annihilate_word(w, i)?;
            let (w2, s2, _) = create_word(&w1, i + 1)?;
            Some((w2, s1 * s2, 0))
        } else {
            let p = w.ones();
            let (w1, s1, _) = annihilate_word(w, n_sites)?;
            let (w2, s2, _) = create_word(&w1, 1)?;
            let hop_sign = s1 * s2;
            // (-1)^{n̂-1} with eigenvalue p (particle number is restored
            // after the hop)
            let sign = if p % 2 == 0 { -hop_sign } else { hop_sign };
            Some((w2, sign, 1))
        }
    })
}

/// Maximal runs of cyclically consecutive sites in `subset` (which must not
/// cover the whole circle), each listed in cyclic ascending order.
fn cyclic_runs(subset: &[usize], n_sites: usize) -> Vec<Vec<usize>> {
    let mut in_set = alloc::vec![false; n_sites + 1];
    for &i in subset {
        in_set[i] = true;
    }
    let pred = |i: usize| if i == 1 { n_sites } else { i - 1 };
    let succ = |i: usize| if i == n_sites { 1 } else { i + 1 };
    let mut runs = Vec::new();
    for &start in subset {
        if in_set[pred(start)] {
            continue;
        }
        let mut run = Vec::new();
        let mut cur = start;
        while in_set[cur] {
            run.push(cur);
            cur = succ(cur);
        }
        runs.push(run);
    }
    runs
}

fn for_each_subset(n_sites: usize, size: usize, f: &mut impl FnMut(&[usize])) {
    fn rec(
        start: usize,
        n_sites: usize,
        left: usize,
        acc: &mut Vec<usize>,
        f: &mut impl FnMut(&[usize]),
    ) {
        if left == 0 {
            f(acc);
            return;
        }
        for i in start..=n_sites - left + 1 {
            acc.push(i);
            rec(i + 1, n_sites, left - 1, acc, f);
            acc.pop();
        }
    }
    let mut acc = Vec::new();
    rec(1, n_sites, size, &mut acc, f);
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum CyclicOrder {
    /// `h_r`: within a run the higher letter acts later.
    Clockwise,
    /// `e_r`: within a run the higher letter acts first.
    Counterclockwise,
}

fn nc_symmetric(r: usize, s: &FockState, q_sign: i8, order: CyclicOrder) -> FockState {
    let n_sites = s.sites();
    assert!(r >= 1 && r <= n_sites);
    if r == n_sites {
        // h_N = (-1)^{n̂-1} q; e_N vanishes except on the full word, where
        // it equals q
        return match order {
            CyclicOrder::Clockwise => s.map_words(q_sign, |w| {
                let sign = if w.ones() % 2 == 0 { -1 } else { 1 };
                Some((*w, sign, 1))
            }),
            CyclicOrder::Counterclockwise => s.map_words(q_sign, |w| {
                if w.ones() == n_sites {
                    Some((*w, 1, 1))
                } else {
                    None
                }
            }),
        };
    }
    let mut total = FockState::zero(n_sites);
    for_each_subset(n_sites, r, &mut |subset| {
        let mut cur = s.clone();
        for run in cyclic_runs(subset, n_sites) {
            match order {
                CyclicOrder::Clockwise => {
                    for &i in &run {
                        cur = nil_tl_letter_signed(i, &cur, q_sign);
                    }
                }
                CyclicOrder::Counterclockwise => {
                    for &i in run.iter().rev() {
                        cur = nil_tl_letter_signed(i, &cur, q_sign);
                    }
                }
            }
            if cur.is_zero() {
                break;
            }
        }
        total.add_assign(&cur);
    });
    total
}

/// Noncommutative elementary symmetric polynomial `e_r` applied to a state.
pub fn nc_elementary(r: usize, s: &FockState) -> FockState {
    nc_symmetric(r, s, 1, CyclicOrder::Counterclockwise)
}

/// Noncommutative complete symmetric polynomial `h_r` applied to a state.
pub fn nc_complete(r: usize, s: &FockState) -> FockState {
    nc_symmetric(r, s, 1, CyclicOrder::Clockwise)
}

/// Which Jacobi-Trudi determinant realizes a noncommutative Schur operator.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SchurBasis {
    Elementary,
    Complete,
}

/// Noncommutative Schur operator `s_λ` via the Jacobi-Trudi determinant in
/// the chosen basis, expanded as a signed permutation sum of commuting
/// operator products.
pub fn nc_schur(shape: &Partition, s: &FockState, basis: SchurBasis) -> FockState {
    nc_schur_signed(shape, s, 1, basis)
}

/// `s̄_λ`: the same operator with `q` replaced by `-q`.
pub fn nc_schur_barred(shape: &Partition, s: &FockState, basis: SchurBasis) -> FockState {
    nc_schur_signed(shape, s, -1, basis)
}

fn nc_schur_signed(shape: &Partition, s: &FockState, q_sign: i8, basis: SchurBasis) -> FockState {
    let index_parts = match basis {
        SchurBasis::Elementary => shape.transpose(),
        SchurBasis::Complete => shape.clone(),
    };
    let m = index_parts.len();
    if m == 0 {
        return s.clone();
    }
    let n_sites = s.sites();
    let mut total = FockState::zero(n_sites);
    let mut perm: Vec<usize> = (0..m).collect();
    permute(&mut perm, 0, &mut |perm, sign| {
        // row i, column perm[i]: index λ_i - (i+1) + (perm[i]+1)
        let mut cur = s.clone();
        for (i, &j) in perm.iter().enumerate() {
            let idx = index_parts.part(i + 1) as i64 - (i as i64 + 1) + (j as i64 + 1);
            if idx < 0 || idx as usize > n_sites {
                cur = FockState::zero(n_sites);
                break;
            }
            if idx == 0 {
                continue;
            }
            cur = match basis {
                SchurBasis::Elementary => {
                    nc_symmetric(idx as usize, &cur, q_sign, CyclicOrder::Counterclockwise)
                }
                SchurBasis::Complete => {
                    nc_symmetric(idx as usize, &cur, q_sign, CyclicOrder::Clockwise)
                }
            };
            if cur.is_zero() {
                break;
            }
        }
        total.add_assign(&cur.scaled(&BigInt::from(sign)));
    });
    total
}

fn permute(perm: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize], i8)) {
    fn rec(perm: &mut Vec<usize>, k: usize, sign: i8, f: &mut impl FnMut(&[usize], i8)) {
        if k == perm.len() {
            f(perm, sign);
            return;
        }
        for i in k..perm.len() {
            perm.swap(k, i);
            let s = if i == k { sign } else { -sign };
            rec(perm, k + 1, s, f);
            perm.swap(k, i);
        }
    }
    rec(perm, k, 1, f);
}

/// The fermionic star product `λ ⋆ μ`: for every semistandard tableau of
/// shape `λ` with entries `<= n` and weight `t`, the creation monomial
///
/// ```text
///   ψ*_{ℓ_n(μ)+t_n} ψ̄*_{ℓ_{n-1}(μ)+t_{n-1}} ⋯ ψ*/ψ̄*_{ℓ_1(μ)+t_1} ∅
/// ```
///
/// is applied rightmost first (slot `i = 1` first); the slot at `ℓ_i` is
/// barred exactly when `n - i` is odd. Sites beyond `N` wrap once via the
/// quasi-periodic boundary conditions.
pub fn star_fermionic(lambda: &Partition, mu: &Partition, bx: BoundingBox) -> FockState {
    assert!(bx.contains(lambda), "{lambda} does not fit {bx:?}");
    assert!(bx.contains(mu), "{mu} does not fit {bx:?}");
    let n = bx.rows();
    let n_sites = bx.sites();
    let ell = word_of_partition(mu, bx).positions_desc();
    let mut total = FockState::zero(n_sites);
    for (t, mult) in ssyt_weight_multiplicities(lambda, n) {
        let mut cur = FockState::vacuum(n_sites);
        for i in 1..=n {
            let site = ell[i - 1] + t[i - 1];
            let barred = (n - i) % 2 == 1;
            let op = OperatorKind {
                create: true,
                barred,
                site,
            };
            cur = apply_extended(op, &cur);
            if cur.is_zero() {
                break;
            }
        }
        total.add_assign(&cur.scaled(&BigInt::from(mult)));
    }
    total
}

/// Checks the commutation identity
/// `s_λ ψ*_i = Σ_{r=0}^{λ_1} ψ*_{i+r} Σ_{λ/μ=(r)} s̄_μ`
/// as an operator identity on every basis word of the given length.
pub fn commutation_check(shape: &Partition, site: usize, n_sites: usize) -> bool {
    assert!(n_sites <= 20, "exhaustive word check is exponential in N");
    for mask in 0..(1u64 << n_sites) {
        let w = FockState::basis(BitWord::new(n_sites, mask));
        let lhs = nc_schur(shape, &apply_create(site, &w), SchurBasis::Elementary);
        let mut rhs = FockState::zero(n_sites);
        for r in 0..=shape.part(1) {
            let mut inner = FockState::zero(n_sites);
            for mu in horizontal_strips(shape, r) {
                inner.add_assign(&nc_schur_barred(&mu, &w, SchurBasis::Elementary));
            }
            rhs.add_assign(&apply_extended(OperatorKind::create(site + r), &inner));
        }
        if lhs != rhs {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec())
    }

    fn word(s: &str) -> BitWord {
        BitWord::parse(s).unwrap()
    }

    #[test]
    fn create_annihilate_basics() {
        let n_sites = 4;
        let vac = FockState::vacuum(n_sites);
        let one = apply_create(1, &vac);
        assert_eq!(one.coeff(&word("1000")), QPoly::one());
        assert!(apply_create(1, &one).is_zero());
        assert!(apply_annihilate(2, &vac).is_zero());
    }

    #[test]
    fn ribbon_examples() {
        // ψ_2 subtracts the top row of (4,3,3,1) and adds a boundary ribbon,
        // giving +(5,4,4) as a three-particle state (n = k = 4, N = 8)
        let bx = BoundingBox::new(4, 4);
        let mu = pt(&[4, 3, 3, 1]);
        let w = word_of_partition(&mu, bx);
        assert_eq!(w.to_string(), "01001101");
        let out = apply_annihilate(2, &FockState::basis(w));
        let expected = word_of_partition(&pt(&[5, 4, 4]), BoundingBox::new(3, 5));
        assert_eq!(out.coeff(&expected), QPoly::one());

        // ψ*_3 adds the top row and subtracts the ribbon starting on the
        // -1 diagonal; the word picture gives -(3,2,2,1,1)
        let out = apply_create(3, &FockState::basis(w));
        let expected = word_of_partition(&pt(&[3, 2, 2, 1, 1]), BoundingBox::new(5, 3));
        assert_eq!(out.coeff(&expected), QPoly::monomial(0, BigInt::from(-1)));
    }

    #[test]
    fn clifford_relations_small() {
        for n_sites in 1..=6usize {
            for mask in 0..(1u64 << n_sites) {
                let w = FockState::basis(BitWord::new(n_sites, mask));
                for i in 1..=n_sites {
                    for j in 1..=n_sites {
                        // ψ_i ψ_j + ψ_j ψ_i = 0
                        let mut a = apply_annihilate(i, &apply_annihilate(j, &w));
                        a.add_assign(&apply_annihilate(j, &apply_annihilate(i, &w)));
                        assert!(a.is_zero());
                        // ψ*_i ψ*_j + ψ*_j ψ*_i = 0
                        let mut b = apply_create(i, &apply_create(j, &w));
                        b.add_assign(&apply_create(j, &apply_create(i, &w)));
                        assert!(b.is_zero());
                        // ψ_i ψ*_j + ψ*_j ψ_i = δ_ij
                        let mut c = apply_annihilate(i, &apply_create(j, &w));
                        c.add_assign(&apply_create(j, &apply_annihilate(i, &w)));
                        if i == j {
                            assert_eq!(c, w);
                        } else {
                            assert!(c.is_zero());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn adjointness() {
        // ⟨ψ*_i w, w'⟩ = ⟨w, ψ_i w'⟩ on all pairs for N <= 5
        for n_sites in 1..=5usize {
            for m1 in 0..(1u64 << n_sites) {
                let w = BitWord::new(n_sites, m1);
                for m2 in 0..(1u64 << n_sites) {
                    let wp = BitWord::new(n_sites, m2);
                    for i in 1..=n_sites {
                        let lhs = apply_create(i, &FockState::basis(w)).coeff(&wp);
                        let rhs = apply_annihilate(i, &FockState::basis(wp)).coeff(&w);
                        assert_eq!(lhs, rhs);
                    }
                }
            }
        }
    }

    #[test]
    fn extended_wrap() {
        // on a two-particle word the created term has n̂ = 3, so the barred
        // wrap gives (-1)^3 q and the unbarred one (-1)^4 q
        let n_sites = 5;
        let base = FockState::basis(word("01100"));
        let wrapped = apply_extended(OperatorKind::barred_create(1 + n_sites), &base);
        let direct = apply_create(1, &base);
        for (w, p) in wrapped.terms() {
            assert_eq!(*p, direct.coeff(w).shifted(1, -1));
        }
        let unbarred = apply_extended(OperatorKind::create(1 + n_sites), &base);
        for (w, p) in unbarred.terms() {
            assert_eq!(*p, direct.coeff(w).shifted(1, 1));
        }
    }

    #[test]
    fn extended_annihilation_wrap() {
        // the adjoint identity puts the number operator to the right of the
        // reduced ψ_i, so the eigenvalue is the input particle count
        let n_sites = 5;
        let base = FockState::basis(word("01100"));
        let direct = apply_annihilate(2, &base);
        let wrapped = apply_extended(OperatorKind::annihilate(2 + n_sites), &base);
        for (w, p) in wrapped.terms() {
            // p = 2 even: unbarred flip applies, so -q
            assert_eq!(*p, direct.coeff(w).shifted(1, -1));
        }
    }

    #[test]
    fn fermionic_product_example_chain() {
        // tableau weights (1,1,1,2) on μ = (3,3,2,1): sites (8,7,5,4) give
        // q ψ*_1 ψ*_4 ψ*_5 ψ*_7 ∅ = +q |1001101⟩
        let bx = BoundingBox::new(4, 3);
        let mu = pt(&[3, 3, 2, 1]);
        let ell = word_of_partition(&mu, bx).positions_desc();
        assert_eq!(ell, vec![7, 6, 4, 2]);
        let t = [1usize, 1, 1, 2];
        let mut cur = FockState::vacuum(7);
        for i in 1..=4usize {
            let op = OperatorKind {
                create: true,
                barred: (4 - i) % 2 == 1,
                site: ell[i - 1] + t[i - 1],
            };
            cur = apply_extended(op, &cur);
        }
        assert_eq!(
            cur.coeff(&word("1001101")),
            QPoly::monomial(1, BigInt::one())
        );

        // duplicate target site after wrapping kills the term
        let t = [2usize, 2, 1, 0];
        let mut cur = FockState::vacuum(7);
        for i in 1..=4usize {
            let op = OperatorKind {
                create: true,
                barred: (4 - i) % 2 == 1,
                site: ell[i - 1] + t[i - 1],
            };
            cur = apply_extended(op, &cur);
        }
        assert!(cur.is_zero());
    }

    #[test]
    fn nil_tl_relations() {
        // the braid-type relations need N >= 3 (at N = 2 the two letters
        // are cyclically adjacent on both sides); u_i^2 = 0 holds always
        for n_sites in 2..=6usize {
            for mask in 0..(1u64 << n_sites) {
                let w = FockState::basis(BitWord::new(n_sites, mask));
                for i in 1..=n_sites {
                    assert!(nil_tl_letter(i, &nil_tl_letter(i, &w)).is_zero());
                    if n_sites >= 3 {
                        let succ = i % n_sites + 1;
                        assert!(
                            nil_tl_letter(i, &nil_tl_letter(succ, &nil_tl_letter(i, &w))).is_zero()
                        );
                        assert!(
                            nil_tl_letter(succ, &nil_tl_letter(i, &nil_tl_letter(succ, &w)))
                                .is_zero()
                        );
                    }
                    for j in 1..=n_sites {
                        let dist = (i as i64 - j as i64).rem_euclid(n_sites as i64);
                        if dist > 1 && dist < n_sites as i64 - 1 {
                            let a = nil_tl_letter(i, &nil_tl_letter(j, &w));
                            let b = nil_tl_letter(j, &nil_tl_letter(i, &w));
                            assert_eq!(a, b);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn u1_hop() {
        let s = FockState::basis(word("1000"));
        let out = nil_tl_letter(1, &s);
        assert_eq!(out.coeff(&word("0100")), QPoly::one());
    }

    #[test]
    fn e1_equals_h1_equals_sum_of_letters() {
        for n_sites in 2..=5usize {
            for mask in 0..(1u64 << n_sites) {
                let w = FockState::basis(BitWord::new(n_sites, mask));
                let e1 = nc_elementary(1, &w);
                let h1 = nc_complete(1, &w);
                let mut sum = FockState::zero(n_sites);
                for i in 1..=n_sites {
                    sum.add_assign(&nil_tl_letter(i, &w));
                }
                assert_eq!(e1, sum);
                assert_eq!(h1, sum);
            }
        }
    }

    #[test]
    fn eh_commute() {
        for n_sites in 2..=5usize {
            for mask in 0..(1u64 << n_sites) {
                let w = FockState::basis(BitWord::new(n_sites, mask));
                for r in 1..=n_sites {
                    for s in 1..=n_sites {
                        let a = nc_elementary(r, &nc_complete(s, &w));
                        let b = nc_complete(s, &nc_elementary(r, &w));
                        assert_eq!(a, b, "N={n_sites} r={r} s={s} w={mask:b}");
                        let c = nc_elementary(r, &nc_elementary(s, &w));
                        let d = nc_elementary(s, &nc_elementary(r, &w));
                        assert_eq!(c, d);
                    }
                }
            }
        }
    }

    #[test]
    fn h_on_vacuum() {
        // h_r ∅ = 0 for 1 <= r <= N-1 on the zero-particle space
        let n_sites = 5;
        let vac = FockState::vacuum(n_sites);
        for r in 1..n_sites {
            assert!(nc_complete(r, &vac).is_zero());
        }
    }

    #[test]
    fn schur_specialisations() {
        for n_sites in 2..=5usize {
            for mask in 0..(1u64 << n_sites) {
                let w = FockState::basis(BitWord::new(n_sites, mask));
                for r in 1..=n_sites.min(4) {
                    let col = pt(&alloc::vec![1; r]);
                    assert_eq!(
                        nc_schur(&col, &w, SchurBasis::Elementary),
                        nc_elementary(r, &w)
                    );
                    let row = pt(&[r]);
                    assert_eq!(nc_schur(&row, &w, SchurBasis::Complete), nc_complete(r, &w));
                }
            }
        }
    }

    #[test]
    fn schur_e_det_equals_h_det() {
        // operator equality on each particle sector for shapes in that
        // sector's bounding box (boxed indices never reach e_N or h_N)
        for n_sites in 2..=5usize {
            for mask in 0..(1u64 << n_sites) {
                let w = FockState::basis(BitWord::new(n_sites, mask));
                let particles = BitWord::new(n_sites, mask).ones();
                for shape in BoundingBox::new(particles, n_sites - particles).partitions() {
                    let a = nc_schur(&shape, &w, SchurBasis::Elementary);
                    let b = nc_schur(&shape, &w, SchurBasis::Complete);
                    assert_eq!(a, b, "N={n_sites} λ={shape} w={mask:b}");
                }
            }
        }
    }

    #[test]
    fn schur_e2e3_minus_e1e4() {
        // s_{(2,2,1)} = e_2 e_3 - e_1 e_4 for n = 4, k = 3
        let shape = pt(&[2, 2, 1]);
        let n_sites = 7;
        for mask in [0b0101011u64, 0b1001101, 0b0011101, 0b1110000] {
            let w = FockState::basis(BitWord::new(n_sites, mask));
            let direct = nc_schur(&shape, &w, SchurBasis::Elementary);
            let mut byhand = nc_elementary(2, &nc_elementary(3, &w));
            byhand.add_assign(&nc_elementary(1, &nc_elementary(4, &w)).scaled(&BigInt::from(-1)));
            assert_eq!(direct, byhand);
        }
    }

    #[test]
    fn star_unit_and_schur_agreement() {
        let bx = BoundingBox::new(2, 3);
        for mu in bx.partitions() {
            let s = star_fermionic(&Partition::empty(), &mu, bx);
            assert_eq!(s, FockState::basis(word_of_partition(&mu, bx)));
            for lam in bx.partitions() {
                let star = star_fermionic(&lam, &mu, bx);
                let schur = nc_schur(
                    &lam,
                    &FockState::basis(word_of_partition(&mu, bx)),
                    SchurBasis::Elementary,
                );
                assert_eq!(star, schur, "λ={lam} μ={mu}");
            }
        }
    }

    #[test]
    fn barred_schur_is_q_negation() {
        // the q_sign route agrees with substituting q -> -q coefficientwise
        let n_sites = 5;
        for mask in 0..(1u64 << n_sites) {
            let w = FockState::basis(BitWord::new(n_sites, mask));
            let particles = w.particles();
            for shape in BoundingBox::new(2, 3).partitions() {
                let plain = nc_schur(&shape, &w, SchurBasis::Elementary);
                let barred = nc_schur_barred(&shape, &w, SchurBasis::Elementary);
                assert_eq!(plain.particles(), barred.particles());
                if !plain.is_zero() {
                    assert_eq!(plain.particles(), particles);
                }
                for (word, poly) in plain.terms() {
                    assert_eq!(barred.coeff(word), poly.bar(), "λ={shape} w={mask:b}");
                }
                assert_eq!(plain.terms().count(), barred.terms().count());
            }
        }
    }

    #[test]
    fn commutation_identity_small() {
        let n_sites = 4;
        for shape in BoundingBox::new(2, 2).partitions() {
            for i in 1..=n_sites {
                assert!(commutation_check(&shape, i, n_sites), "λ={shape} i={i}");
            }
        }
    }
}
