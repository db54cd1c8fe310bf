//! q-integers, q-factorials, Pochhammer symbols and Gaussian coefficients.

use num_bigint::BigInt;
use num_traits::One;

use crate::cyclotomic::{CycRing, IntPoly};
use crate::error::{Error, Result};

use super::qpoly::QPoly;
use super::series::TruncSeries;
use super::tpoly::TPoly;

/// `[n]_{q^s} = 1 + q^s + … + q^{s(n-1)}`; `[0] = 0`.
pub fn q_int(n: usize, step: usize, ring: &CycRing) -> QPoly {
    QPoly::from_int_poly(&q_int_int(n, step), ring)
}

pub fn q_int_int(n: usize, step: usize) -> IntPoly {
    assert!(step >= 1, "q step must be positive");
    if n == 0 {
        return IntPoly::zero();
    }
    let mut coeffs = vec![BigInt::default(); step * (n - 1) + 1];
    for j in 0..n {
        coeffs[j * step] = BigInt::one();
    }
    IntPoly::new(coeffs)
}

/// `[n]_q! = [1]_q [2]_q ⋯ [n]_q`.
pub fn q_factorial(n: usize, ring: &CycRing) -> QPoly {
    (1..=n).fold(QPoly::one(ring), |acc, k| &acc * &q_int(k, 1, ring))
}

/// `(q;q)_n = (1-q)(1-q^2)⋯(1-q^n)` over the integers.
pub fn q_pochhammer_int(n: usize) -> IntPoly {
    (1..=n).fold(IntPoly::one(), |acc, j| {
        &acc * &(&IntPoly::one() - &IntPoly::monomial(BigInt::one(), j))
    })
}

/// `(q;q)_n`.
pub fn q_pochhammer(n: usize, ring: &CycRing) -> QPoly {
    QPoly::from_int_poly(&q_pochhammer_int(n), ring)
}

/// q-multinomial `(q;q)_N / ∏ (q;q)_{parts_j}` over the integers, `N = Σ parts`.
pub fn q_multinomial_int(parts: &[usize]) -> Result<IntPoly> {
    let total: usize = parts.iter().sum();
    let denominator = parts
        .iter()
        .fold(IntPoly::one(), |acc, &k| &acc * &q_pochhammer_int(k));
    q_pochhammer_int(total)
        .div_exact(&denominator)
        .map_err(|e| Error::Internal(format!("q-multinomial {parts:?}: {e}")))
}

pub fn q_multinomial(parts: &[usize], ring: &CycRing) -> Result<QPoly> {
    Ok(QPoly::from_int_poly(&q_multinomial_int(parts)?, ring))
}

/// Gaussian binomial over the integers; zero when `k > n`.
pub fn q_binomial_int(n: usize, k: usize) -> IntPoly {
    if k > n {
        return IntPoly::zero();
    }
    q_multinomial_int(&[k, n - k]).expect("q-binomial division is exact")
}

/// Gaussian binomial `[n over k]_q`; zero when `k > n`.
pub fn q_binomial(n: usize, k: usize, ring: &CycRing) -> QPoly {
    QPoly::from_int_poly(&q_binomial_int(n, k), ring)
}

/// `(t q^{qshift}; q^{qstep})_n = ∏_{j<n} (1 - t q^{qshift + j·qstep})`.
pub fn pochhammer_t(qshift: usize, qstep: usize, n: usize, ring: &CycRing) -> TPoly {
    (0..n).fold(TPoly::one(ring), |acc, j| {
        let factor = &TPoly::one(ring)
            - &TPoly::monomial(QPoly::monomial(ring.one(), qshift + j * qstep), 1);
        &acc * &factor
    })
}

/// [`pochhammer_t`] as a series truncated at `t^order`.
pub fn pochhammer_t_series(
    qshift: usize,
    qstep: usize,
    n: usize,
    order: usize,
    ring: &CycRing,
) -> TruncSeries {
    pochhammer_t(qshift, qstep, n, ring).to_series(order)
}

/// `1/(t; q^s)_n = Σ_k [n+k-1 over k]_{q^s} t^k`, truncated at `t^order`.
///
/// `n = 0` gives the constant series 1.
pub fn inv_pochhammer_trunc(n: usize, qstep: usize, order: usize, ring: &CycRing) -> TruncSeries {
    if n == 0 {
        return TruncSeries::one(ring, order);
    }
    TruncSeries::from_fn(ring, order, |k| {
        QPoly::from_int_poly(&q_binomial_int(n + k - 1, k).dilate(qstep), ring)
    })
}
