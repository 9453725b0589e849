//! Floating-point root-of-unity oracles.
//!
//! Both structure constants admit exact finite sums over evaluation points
//! built from `ζ = exp(2πi/(k+n))` and the half-integer tuples
//! `I(σ) = ((n+1)/2 + σ_n - n, …, (n+1)/2 + σ_1 - 1)`: the Bertram-Vafa-
//! Intriligator sum for the Gromov-Witten invariants and the Verlinde
//! (Kac-Peterson) sum for the fusion coefficients. They are evaluated in
//! `f64` complex arithmetic and rounded; exact algorithms elsewhere in the
//! crate must match the rounded values within `1e-6`.

use alloc::vec::Vec;
use core::f64::consts::PI;
use core::fmt;

use num_complex::Complex64;

use crate::partitions::{BoundingBox, Partition};
use crate::tableaux::ssyt_weight_multiplicities;

/// A numeric oracle result: the raw complex parts and the nearest integer.
#[derive(Clone, Copy, PartialEq, Debug)]
pub struct RoundedValue {
    pub real: f64,
    pub imag: f64,
    pub rounded: i64,
}

/// Raised when an oracle sum fails to be integral within tolerance.
#[derive(Clone, Copy, PartialEq, Debug)]
pub enum OracleError {
    NonIntegral { real: f64, imag: f64 },
}

impl fmt::Display for OracleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OracleError::NonIntegral { real, imag } => {
                write!(f, "oracle sum {real} + {imag}i is not integral within 1e-6")
            }
        }
    }
}

/// Rounds a complex sum to the nearest integer, rejecting results whose
/// imaginary part or rounding defect exceeds `tol`.
pub fn round_to_integer(z: Complex64, tol: f64) -> Result<RoundedValue, OracleError> {
    let rounded = libm::round(z.re);
    if libm::fabs(z.im) >= tol || libm::fabs(z.re - rounded) > tol {
        return Err(OracleError::NonIntegral {
            real: z.re,
            imag: z.im,
        });
    }
    Ok(RoundedValue {
        real: z.re,
        imag: z.im,
        rounded: rounded as i64,
    })
}

/// `I(σ)` for `σ` with at most `n` rows: entry `j` (1-based) is
/// `(n+1)/2 + σ_{n+1-j} - (n+1-j)`, a half-integer when `n` is even.
pub fn i_map(sigma: &Partition, n: usize) -> Vec<f64> {
    assert!(sigma.len() <= n);
    (1..=n)
        .map(|j| {
            let i = n + 1 - j;
            (n as f64 + 1.0) / 2.0 + sigma.part(i) as f64 - i as f64
        })
        .collect()
}

/// `ζ^e` with `ζ = exp(2πi/N)` and a (half-)integer exponent `e`.
fn zeta_pow(e: f64, big_n: usize) -> Complex64 {
    let angle = 2.0 * PI * e / big_n as f64;
    Complex64::new(libm::cos(angle), libm::sin(angle))
}

fn points(exponents: &[f64], big_n: usize, conjugate: bool) -> Vec<Complex64> {
    exponents
        .iter()
        .map(|&e| zeta_pow(if conjugate { -e } else { e }, big_n))
        .collect()
}

fn cpow(x: Complex64, p: usize) -> Complex64 {
    let mut out = Complex64::new(1.0, 0.0);
    let mut base = x;
    let mut e = p;
    while e > 0 {
        if e & 1 == 1 {
            out *= base;
        }
        base *= base;
        e >>= 1;
    }
    out
}

/// Determinant by Gaussian elimination with partial pivoting; returns the
/// determinant and the smallest pivot magnitude encountered.
fn det(mut m: Vec<Vec<Complex64>>) -> (Complex64, f64) {
    let n = m.len();
    let mut det = Complex64::new(1.0, 0.0);
    let mut min_pivot = f64::INFINITY;
    for col in 0..n {
        let (pivot_row, pivot_norm) = (col..n)
            .map(|r| (r, m[r][col].norm_sqr()))
            .max_by(|a, b| a.1.partial_cmp(&b.1).unwrap())
            .unwrap();
        let pivot_mag = libm::sqrt(pivot_norm);
        min_pivot = min_pivot.min(pivot_mag);
        if pivot_mag == 0.0 {
            return (Complex64::new(0.0, 0.0), 0.0);
        }
        if pivot_row != col {
            m.swap(pivot_row, col);
            det = -det;
        }
        let pivot = m[col][col];
        det *= pivot;
        for r in col + 1..n {
            let f = m[r][col] / pivot;
            #[allow(clippy::needless_range_loop)] // two rows of one matrix
            for c in col..n {
                let sub = f * m[col][c];
                m[r][c] -= sub;
            }
        }
    }
    (det, min_pivot)
}

/// Schur polynomial `s_λ(x_1, …, x_m)` at arbitrary complex points by the
/// bialternant ratio, falling back to the tableau monomial sum when a
/// denominator pivot drops below `1e-12`.
pub fn schur_eval(lambda: &Partition, x: &[Complex64]) -> Complex64 {
    let m = x.len();
    if lambda.len() > m {
        return Complex64::new(0.0, 0.0);
    }
    if m == 0 {
        return Complex64::new(1.0, 0.0);
    }
    let numer: Vec<Vec<Complex64>> = (1..=m)
        .map(|i| {
            let e = lambda.part(i) + m - i;
            x.iter().map(|&xj| cpow(xj, e)).collect()
        })
        .collect();
    let denom: Vec<Vec<Complex64>> = (1..=m)
        .map(|i| x.iter().map(|&xj| cpow(xj, m - i)).collect())
        .collect();
    let (den, den_pivot) = det(denom);
    if den_pivot < 1e-12 {
        return schur_by_tableaux(lambda, x);
    }
    let (num, _) = det(numer);
    num / den
}

fn schur_by_tableaux(lambda: &Partition, x: &[Complex64]) -> Complex64 {
    let m = x.len();
    let mut total = Complex64::new(0.0, 0.0);
    for (w, mult) in ssyt_weight_multiplicities(lambda, m) {
        let mut term = Complex64::new(mult as f64, 0.0);
        for (j, &e) in w.iter().enumerate() {
            term *= cpow(x[j], e);
        }
        total += term;
    }
    total
}

/// `Π_{i<j} |x_i - x_j|^2`.
fn vandermonde_weight(x: &[Complex64]) -> f64 {
    let mut w = 1.0;
    for i in 0..x.len() {
        for j in i + 1..x.len() {
            w *= (x[i] - x[j]).norm_sqr();
        }
    }
    w
}

/// The Bertram-Vafa-Intriligator sum
/// `(k+n)^{-n} Σ_{σ ⊆ n×k} s_λ(ζ^{-I(σ)}) s_μ(ζ^{-I(σ)}) s_ν(ζ^{I(σ)})
///  Π_{i<j} |ζ^{I_i(σ)} - ζ^{I_j(σ)}|^2`.
pub fn bvi_sum(lambda: &Partition, mu: &Partition, nu: &Partition, bx: BoundingBox) -> Complex64 {
    let n = bx.rows();
    let big_n = bx.sites();
    let mut total = Complex64::new(0.0, 0.0);
    for sigma in bx.partitions() {
        let exps = i_map(&sigma, n);
        let plus = points(&exps, big_n, false);
        let minus = points(&exps, big_n, true);
        let term = schur_eval(lambda, &minus)
            * schur_eval(mu, &minus)
            * schur_eval(nu, &plus)
            * vandermonde_weight(&plus);
        total += term;
    }
    let norm = libm::pow(big_n as f64, n as f64);
    total / norm
}

/// The Verlinde sum for `sl(n)_k` fusion coefficients, with the charge
/// prefactor written out: each `σ ⊆ (n-1)×k` contributes
/// `ζ^{|σ|(|λ|+|μ|-|ν|)/n} s_λ(ζ^{-I}) s_μ(ζ^{-I}) s_ν(ζ^{I}) ·
///  Π_{i<j}|ζ^{I_i}-ζ^{I_j}|^2 / (n (k+n)^{n-1})`.
pub fn verlinde_sum(
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
    n: usize,
    k: usize,
) -> Complex64 {
    assert!(n >= 1);
    let big_n = n + k;
    let labels: Vec<Partition> = if n == 1 {
        alloc::vec![Partition::empty()]
    } else {
        BoundingBox::new(n - 1, k).partitions()
    };
    let charge = lambda.weight() as f64 + mu.weight() as f64 - nu.weight() as f64;
    let mut total = Complex64::new(0.0, 0.0);
    for sigma in labels {
        let exps = i_map(&sigma, n);
        let plus = points(&exps, big_n, false);
        let minus = points(&exps, big_n, true);
        let pref = zeta_pow(sigma.weight() as f64 * charge / n as f64, big_n);
        let term = pref
            * schur_eval(lambda, &minus)
            * schur_eval(mu, &minus)
            * schur_eval(nu, &plus)
            * vandermonde_weight(&plus);
        total += term;
    }
    let norm = n as f64 * libm::pow(big_n as f64, n as f64 - 1.0);
    total / norm
}

/// `|s_λ(ζ^{I(σ)}) - s_{λ^t}(ζ^{-I(σ^t)})|` where the transposed tuple uses
/// the `k`-variable version of the index map.
pub fn technical_gap(lambda: &Partition, sigma: &Partition, bx: BoundingBox) -> f64 {
    let n = bx.rows();
    let k = bx.cols();
    let big_n = bx.sites();
    let lhs_pts = points(&i_map(sigma, n), big_n, false);
    let rhs_pts = points(&i_map(&sigma.transpose(), k), big_n, true);
    let lhs = schur_eval(lambda, &lhs_pts);
    let rhs = schur_eval(&lambda.transpose(), &rhs_pts);
    (lhs - rhs).norm()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec())
    }

    #[test]
    fn schur_eval_matches_tableau_sum() {
        let pts = [
            Complex64::new(0.3, 0.7),
            Complex64::new(-1.1, 0.2),
            Complex64::new(0.5, -0.4),
        ];
        for shape in [pt(&[2, 1]), pt(&[3]), pt(&[1, 1, 1]), Partition::empty()] {
            let a = schur_eval(&shape, &pts);
            let b = schur_by_tableaux(&shape, &pts);
            assert!((a - b).norm() < 1e-9, "{shape}: {a} vs {b}");
        }
    }

    #[test]
    fn i_map_is_strictly_increasing() {
        for sigma in BoundingBox::new(3, 2).partitions() {
            let exps = i_map(&sigma, 3);
            assert!(exps.windows(2).all(|w| w[0] < w[1]));
        }
    }

    #[test]
    fn bvi_unit() {
        let bx = BoundingBox::new(2, 2);
        let z = bvi_sum(
            &Partition::empty(),
            &Partition::empty(),
            &Partition::empty(),
            bx,
        );
        assert!((z.re - 1.0).abs() < 1e-9 && z.im.abs() < 1e-9, "{z}");
    }

    #[test]
    fn verlinde_unit() {
        let z = verlinde_sum(
            &Partition::empty(),
            &Partition::empty(),
            &Partition::empty(),
            3,
            2,
        );
        assert!((z.re - 1.0).abs() < 1e-9 && z.im.abs() < 1e-9, "{z}");
    }
}
