use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::cyclotomic::CycRing;
use crate::error::{Error, Result};

use super::qpoly::{monomial_text, render_terms, QPoly};
use super::tpoly::first_mismatch_in;
use super::CoeffMismatch;

/// Power series in `t` with [`QPoly`] coefficients, known up to `t^order`.
///
/// Holds exactly `order + 1` coefficients. Series of different order or
/// modulus are not comparable.
#[derive(Clone, PartialEq, Eq)]
pub struct TruncSeries {
    ring: CycRing,
    order: usize,
    coeffs: Vec<QPoly>,
}

impl TruncSeries {
    /// Pads with zeros or drops terms beyond `t^order`.
    pub fn from_coeffs(ring: &CycRing, order: usize, mut coeffs: Vec<QPoly>) -> Self {
        coeffs.truncate(order + 1);
        coeffs.resize(order + 1, QPoly::zero(ring));
        TruncSeries {
            ring: ring.clone(),
            order,
            coeffs,
        }
    }

    /// Builds the series whose `t^ℓ` coefficient is `f(ℓ)`.
    pub fn from_fn(ring: &CycRing, order: usize, f: impl FnMut(usize) -> QPoly) -> Self {
        Self::from_coeffs(ring, order, (0..=order).map(f).collect())
    }

    pub fn zero(ring: &CycRing, order: usize) -> Self {
        Self::from_coeffs(ring, order, Vec::new())
    }

    pub fn one(ring: &CycRing, order: usize) -> Self {
        Self::from_coeffs(ring, order, vec![QPoly::one(ring)])
    }

    /// `1/(1 - t)`, the identity for [`TruncSeries::hadamard`].
    pub fn geometric(ring: &CycRing, order: usize) -> Self {
        Self::from_fn(ring, order, |_| QPoly::one(ring))
    }

    pub fn ring(&self) -> &CycRing {
        &self.ring
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeffs(&self) -> &[QPoly] {
        &self.coeffs
    }

    pub fn coeff(&self, l: usize) -> &QPoly {
        &self.coeffs[l]
    }

    pub fn scale(&self, c: &QPoly) -> TruncSeries {
        TruncSeries {
            ring: self.ring.clone(),
            order: self.order,
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    /// Coefficientwise product `Σ a_ℓ b_ℓ t^ℓ`.
    pub fn hadamard(&self, other: &TruncSeries) -> Result<TruncSeries> {
        self.check_compatible(other)?;
        Ok(TruncSeries {
            ring: self.ring.clone(),
            order: self.order,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a * b)
                .collect(),
        })
    }

    /// Coefficientwise equality up to `t^order`.
    pub fn series_eq(&self, other: &TruncSeries) -> Result<bool> {
        self.check_compatible(other)?;
        Ok(self.coeffs == other.coeffs)
    }

    /// First coefficient (in `(t, q)` order) where the two series differ.
    pub fn first_mismatch(&self, other: &TruncSeries) -> Result<Option<CoeffMismatch>> {
        self.check_compatible(other)?;
        Ok(first_mismatch_in(
            self.coeffs
                .iter()
                .zip(&other.coeffs)
                .enumerate()
                .map(|(l, (a, b))| (l, a.clone(), b.clone())),
        ))
    }

    /// Terms in `(t, q)` order followed by the `O(t^{order+1})` marker.
    pub fn render(&self) -> String {
        let body = render_terms(
            &self.ring,
            self.coeffs.iter().enumerate().flat_map(|(a, qp)| {
                qp.coeffs()
                    .iter()
                    .enumerate()
                    .map(move |(b, c)| (c.clone(), monomial_text(a, b)))
            }),
        );
        format!("{body} + O(t^{})", self.order + 1)
    }

    pub(crate) fn check_compatible(&self, other: &TruncSeries) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::ModulusMismatch {
                left: self.ring.order(),
                right: other.ring.order(),
            });
        }
        if self.order != other.order {
            return Err(Error::OrderMismatch {
                left: self.order,
                right: other.order,
            });
        }
        Ok(())
    }

    fn assert_compatible(&self, other: &TruncSeries) {
        if let Err(e) = self.check_compatible(other) {
            panic!("{e}");
        }
    }
}

impl fmt::Debug for TruncSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TruncSeries(m={}, {})", self.ring.order(), self.render())
    }
}

impl fmt::Display for TruncSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl Add for &TruncSeries {
    type Output = TruncSeries;
    fn add(self, rhs: &TruncSeries) -> TruncSeries {
        self.assert_compatible(rhs);
        TruncSeries {
            ring: self.ring.clone(),
            order: self.order,
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &TruncSeries {
    type Output = TruncSeries;
    fn sub(self, rhs: &TruncSeries) -> TruncSeries {
        self + &(-rhs)
    }
}

impl Neg for &TruncSeries {
    type Output = TruncSeries;
    fn neg(self) -> TruncSeries {
        TruncSeries {
            ring: self.ring.clone(),
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

/// Cauchy product truncated at `t^order`.
impl Mul for &TruncSeries {
    type Output = TruncSeries;
    fn mul(self, rhs: &TruncSeries) -> TruncSeries {
        self.assert_compatible(rhs);
        let coeffs = (0..=self.order)
            .map(|l| {
                (0..=l)
                    .filter(|&j| !self.coeffs[j].is_zero() && !rhs.coeffs[l - j].is_zero())
                    .fold(QPoly::zero(&self.ring), |acc, j| {
                        &acc + &(&self.coeffs[j] * &rhs.coeffs[l - j])
                    })
            })
            .collect();
        TruncSeries {
            ring: self.ring.clone(),
            order: self.order,
            coeffs,
        }
    }
}
