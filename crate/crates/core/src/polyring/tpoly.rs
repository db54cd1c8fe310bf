use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::cyclotomic::{CycElem, CycRing};
use crate::error::{Error, Result};

use super::qpoly::{monomial_text, render_terms, QPoly};
use super::series::TruncSeries;
use super::CoeffMismatch;

/// Exact polynomial in `t` with [`QPoly`] coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct TPoly {
    ring: CycRing,
    coeffs: Vec<QPoly>,
}

impl TPoly {
    pub fn new(ring: &CycRing, mut coeffs: Vec<QPoly>) -> Self {
        for c in &coeffs {
            assert!(c.ring() == ring, "modulus mismatch in TPoly::new");
        }
        while coeffs.last().is_some_and(QPoly::is_zero) {
            coeffs.pop();
        }
        TPoly {
            ring: ring.clone(),
            coeffs,
        }
    }

    pub fn zero(ring: &CycRing) -> Self {
        Self::new(ring, Vec::new())
    }

    pub fn one(ring: &CycRing) -> Self {
        Self::constant(QPoly::one(ring))
    }

    pub fn constant(c: QPoly) -> Self {
        let ring = c.ring().clone();
        Self::new(&ring, vec![c])
    }

    /// `c · t^d`
    pub fn monomial(c: QPoly, d: usize) -> Self {
        let ring = c.ring().clone();
        let mut coeffs = vec![QPoly::zero(&ring); d];
        coeffs.push(c);
        Self::new(&ring, coeffs)
    }

    /// `(1 - t)^e`
    pub fn one_minus_t_pow(ring: &CycRing, e: u32) -> Self {
        let base = &Self::one(ring) - &Self::monomial(QPoly::one(ring), 1);
        base.pow(e)
    }

    pub fn ring(&self) -> &CycRing {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[QPoly] {
        &self.coeffs
    }

    pub fn coeff(&self, d: usize) -> QPoly {
        self.coeffs
            .get(d)
            .cloned()
            .unwrap_or_else(|| QPoly::zero(&self.ring))
    }

    pub fn scale(&self, c: &QPoly) -> TPoly {
        Self::new(&self.ring, self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn scale_elem(&self, c: &CycElem) -> TPoly {
        Self::new(&self.ring, self.coeffs.iter().map(|x| x.scale(c)).collect())
    }

    pub fn pow(&self, e: u32) -> TPoly {
        (0..e).fold(TPoly::one(&self.ring), |acc, _| &acc * self)
    }

    /// Substitutes `q -> q^s` in every coefficient.
    pub fn dilate_q(&self, s: usize) -> TPoly {
        Self::new(
            &self.ring,
            self.coeffs.iter().map(|c| c.dilate(s)).collect(),
        )
    }

    /// Specialization `t = 1`.
    pub fn at_t_one(&self) -> QPoly {
        self.coeffs
            .iter()
            .fold(QPoly::zero(&self.ring), |acc, c| &acc + c)
    }

    /// Specialization `q = 1`.
    pub fn at_q_one(&self) -> TPoly {
        Self::new(
            &self.ring,
            self.coeffs
                .iter()
                .map(|c| QPoly::constant(c.eval_one()))
                .collect(),
        )
    }

    /// Exact quotient by a divisor whose constant term is a unit `±ξ^j`.
    ///
    /// Runs the division from the low-order end, then checks that the
    /// quotient times the divisor reproduces `self`.
    pub fn div_exact(&self, divisor: &TPoly) -> Result<TPoly> {
        let (Some(da), Some(db)) = (self.degree(), divisor.degree()) else {
            if divisor.is_zero() {
                return Err(Error::NotDivisible(
                    "division by the zero polynomial".into(),
                ));
            }
            return Ok(TPoly::zero(&self.ring));
        };
        if da < db {
            return Err(Error::NotDivisible(format!(
                "t-degree {da} is below the divisor's t-degree {db}"
            )));
        }
        let c0 = divisor.coeff(0);
        let inv = match c0.degree() {
            Some(0) => c0.coeff(0).unit_inverse(),
            _ => None,
        }
        .ok_or_else(|| {
            Error::NotDivisible(format!(
                "constant term {} of the divisor is not a unit",
                c0.render()
            ))
        })?;
        let mut quot: Vec<QPoly> = Vec::with_capacity(da - db + 1);
        for j in 0..=(da - db) {
            let mut c = self.coeff(j);
            for i in 1..=j.min(db) {
                c = &c - &(&divisor.coeffs[i] * &quot[j - i]);
            }
            quot.push(c.scale(&inv));
        }
        let quot = TPoly::new(&self.ring, quot);
        if &quot * divisor != *self {
            return Err(Error::NotDivisible(format!(
                "({}) / ({}) is not a polynomial",
                self.render(),
                divisor.render()
            )));
        }
        Ok(quot)
    }

    /// Power series view truncated at `t^order`.
    pub fn to_series(&self, order: usize) -> TruncSeries {
        TruncSeries::from_coeffs(&self.ring, order, self.coeffs.clone())
    }

    /// First coefficient (in `(t, q)` order) where the two polynomials differ.
    pub fn first_mismatch(&self, other: &TPoly) -> Result<Option<CoeffMismatch>> {
        if self.ring != other.ring {
            return Err(Error::ModulusMismatch {
                left: self.ring.order(),
                right: other.ring.order(),
            });
        }
        let n = self.coeffs.len().max(other.coeffs.len());
        Ok(first_mismatch_in(
            (0..n).map(|d| (d, self.coeff(d), other.coeff(d))),
        ))
    }

    pub fn render(&self) -> String {
        render_terms(
            &self.ring,
            self.coeffs.iter().enumerate().flat_map(|(a, qp)| {
                qp.coeffs()
                    .iter()
                    .enumerate()
                    .map(move |(b, c)| (c.clone(), monomial_text(a, b)))
            }),
        )
    }

    fn check_ring(&self, other: &TPoly) {
        assert!(
            self.ring == other.ring,
            "{}",
            Error::ModulusMismatch {
                left: self.ring.order(),
                right: other.ring.order()
            }
        );
    }
}

pub(crate) fn first_mismatch_in(
    rows: impl Iterator<Item = (usize, QPoly, QPoly)>,
) -> Option<CoeffMismatch> {
    for (t, a, b) in rows {
        if a == b {
            continue;
        }
        let n = a.coeffs().len().max(b.coeffs().len());
        for q in 0..n {
            let (ca, cb) = (a.coeff(q), b.coeff(q));
            if ca != cb {
                return Some(CoeffMismatch {
                    t_degree: t,
                    q_degree: q,
                    lhs_coeff: ca.render(),
                    rhs_coeff: cb.render(),
                });
            }
        }
    }
    None
}

impl fmt::Debug for TPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TPoly(m={}, {})", self.ring.order(), self.render())
    }
}

impl fmt::Display for TPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl Add for &TPoly {
    type Output = TPoly;
    fn add(self, rhs: &TPoly) -> TPoly {
        self.check_ring(rhs);
        let n = self.coeffs.len().max(rhs.coeffs.len());
        TPoly::new(
            &self.ring,
            (0..n).map(|d| &self.coeff(d) + &rhs.coeff(d)).collect(),
        )
    }
}

impl Sub for &TPoly {
    type Output = TPoly;
    fn sub(self, rhs: &TPoly) -> TPoly {
        self + &(-rhs)
    }
}

impl Neg for &TPoly {
    type Output = TPoly;
    fn neg(self) -> TPoly {
        TPoly::new(&self.ring, self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &TPoly {
    type Output = TPoly;
    fn mul(self, rhs: &TPoly) -> TPoly {
        self.check_ring(rhs);
        if self.is_zero() || rhs.is_zero() {
            return TPoly::zero(&self.ring);
        }
        let mut out = vec![QPoly::zero(&self.ring); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] = &out[i + j] + &(a * b);
                }
            }
        }
        TPoly::new(&self.ring, out)
    }
}
