use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::Zero;

use crate::cyclotomic::{join_integer_terms, CycElem, CycRing, IntPoly};
use crate::error::{Error, Result};

/// Polynomial in `q` with coefficients in `Z[ξ_m]`, lowest degree first.
#[derive(Clone, PartialEq, Eq)]
pub struct QPoly {
    ring: CycRing,
    coeffs: Vec<CycElem>,
}

impl QPoly {
    pub fn new(ring: &CycRing, mut coeffs: Vec<CycElem>) -> Self {
        for c in &coeffs {
            assert!(
                c.ring() == ring,
                "{}",
                Error::ModulusMismatch {
                    left: ring.order(),
                    right: c.modulus()
                }
            );
        }
        while coeffs.last().is_some_and(CycElem::is_zero) {
            coeffs.pop();
        }
        QPoly {
            ring: ring.clone(),
            coeffs,
        }
    }

    pub fn zero(ring: &CycRing) -> Self {
        QPoly {
            ring: ring.clone(),
            coeffs: Vec::new(),
        }
    }

    pub fn one(ring: &CycRing) -> Self {
        Self::constant(ring.one())
    }

    pub fn constant(c: CycElem) -> Self {
        let ring = c.ring().clone();
        Self::new(&ring, vec![c])
    }

    /// `c · q^d`
    pub fn monomial(c: CycElem, d: usize) -> Self {
        let ring = c.ring().clone();
        let mut coeffs = vec![ring.zero(); d];
        coeffs.push(c);
        Self::new(&ring, coeffs)
    }

    /// `1 - c·q^d`
    pub fn one_minus(c: CycElem, d: usize) -> Self {
        let ring = c.ring().clone();
        &Self::one(&ring) - &Self::monomial(c, d)
    }

    /// Embeds an integer polynomial in `q`.
    pub fn from_int_poly(p: &IntPoly, ring: &CycRing) -> Self {
        Self::new(
            ring,
            p.coeffs().iter().map(|c| ring.int(c.clone())).collect(),
        )
    }

    pub fn from_i64s(coeffs: &[i64], ring: &CycRing) -> Self {
        Self::from_int_poly(&IntPoly::from_i64s(coeffs), ring)
    }

    /// Inverse of [`QPoly::from_int_poly`]; `None` if any coefficient is not in `Z`.
    pub fn to_int_poly(&self) -> Option<IntPoly> {
        self.coeffs
            .iter()
            .map(|c| c.as_integer().cloned())
            .collect::<Option<Vec<_>>>()
            .map(IntPoly::new)
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

    pub fn coeffs(&self) -> &[CycElem] {
        &self.coeffs
    }

    pub fn coeff(&self, d: usize) -> CycElem {
        self.coeffs
            .get(d)
            .cloned()
            .unwrap_or_else(|| self.ring.zero())
    }

    pub fn scale(&self, c: &CycElem) -> QPoly {
        Self::new(&self.ring, self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn scale_int(&self, c: &BigInt) -> QPoly {
        Self::new(&self.ring, self.coeffs.iter().map(|x| x.scale(c)).collect())
    }

    pub fn pow(&self, e: u32) -> QPoly {
        let mut result = QPoly::one(&self.ring);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Substitutes `q -> q^s`.
    pub fn dilate(&self, s: usize) -> QPoly {
        assert!(s >= 1, "dilation step must be positive");
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![self.ring.zero(); (self.coeffs.len() - 1) * s + 1];
        for (d, c) in self.coeffs.iter().enumerate() {
            coeffs[d * s] = c.clone();
        }
        Self::new(&self.ring, coeffs)
    }

    /// Value at `q = 1`.
    pub fn eval_one(&self) -> CycElem {
        self.coeffs.iter().fold(self.ring.zero(), |acc, c| &acc + c)
    }

    /// Long division by a divisor whose leading coefficient is `±ξ^j`.
    pub fn div_rem(&self, divisor: &QPoly) -> Result<(QPoly, QPoly)> {
        self.check_ring(divisor);
        let lead = divisor
            .coeffs
            .last()
            .ok_or_else(|| Error::NotDivisible("division by the zero polynomial".into()))?;
        let lead_inv = lead.unit_inverse().ok_or_else(|| {
            Error::NotDivisible(format!(
                "leading coefficient {} of the divisor is not a unit",
                lead.render()
            ))
        })?;
        let db = divisor.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() <= db {
            return Ok((QPoly::zero(&self.ring), self.clone()));
        }
        let mut quot = vec![self.ring.zero(); rem.len() - db];
        for shift in (0..quot.len()).rev() {
            let c = &rem[shift + db] * &lead_inv;
            if c.is_zero() {
                continue;
            }
            for (j, b) in divisor.coeffs.iter().enumerate() {
                rem[shift + j] = &rem[shift + j] - &(&c * b);
            }
            quot[shift] = c;
        }
        Ok((QPoly::new(&self.ring, quot), QPoly::new(&self.ring, rem)))
    }

    /// Exact quotient; a nonzero remainder is [`Error::NotDivisible`].
    pub fn div_exact(&self, divisor: &QPoly) -> Result<QPoly> {
        let (q, r) = self.div_rem(divisor)?;
        if !r.is_zero() {
            return Err(Error::NotDivisible(format!(
                "({}) / ({}) leaves remainder {}",
                self.render(),
                divisor.render(),
                r.render()
            )));
        }
        Ok(q)
    }

    pub fn render(&self) -> String {
        render_terms(
            &self.ring,
            self.coeffs
                .iter()
                .enumerate()
                .map(|(d, c)| (c.clone(), monomial_text(0, d))),
        )
    }

    pub(crate) fn check_ring(&self, other: &QPoly) {
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

/// `t^a*q^b` with exponents 0 and 1 elided; empty for the constant monomial.
pub(crate) fn monomial_text(t: usize, q: usize) -> String {
    let mut parts = Vec::new();
    for (var, e) in [("t", t), ("q", q)] {
        match e {
            0 => {}
            1 => parts.push(var.to_string()),
            _ => parts.push(format!("{var}^{e}")),
        }
    }
    parts.join("*")
}

/// Renders `(coefficient, monomial)` pairs, skipping zero coefficients.
///
/// Coefficients print as integers when `m ≤ 2` and as `[c0,c1,…]` otherwise.
pub(crate) fn render_terms(
    ring: &CycRing,
    terms: impl Iterator<Item = (CycElem, String)>,
) -> String {
    let terms = terms.filter(|(c, _)| !c.is_zero());
    if ring.order() <= 2 {
        return join_integer_terms(terms.map(|(c, mono)| (c.coeffs()[0].clone(), mono)));
    }
    let parts: Vec<String> = terms
        .map(|(c, mono)| {
            if mono.is_empty() {
                c.render()
            } else {
                format!("{}*{mono}", c.render())
            }
        })
        .collect();
    if parts.is_empty() {
        "0".to_string()
    } else {
        parts.join(" + ")
    }
}

impl fmt::Debug for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QPoly(m={}, {})", self.ring.order(), self.render())
    }
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl Add for &QPoly {
    type Output = QPoly;
    fn add(self, rhs: &QPoly) -> QPoly {
        self.check_ring(rhs);
        let n = self.coeffs.len().max(rhs.coeffs.len());
        QPoly::new(
            &self.ring,
            (0..n)
                .map(|d| match (self.coeffs.get(d), rhs.coeffs.get(d)) {
                    (Some(a), Some(b)) => a + b,
                    (Some(a), None) => a.clone(),
                    (None, Some(b)) => b.clone(),
                    (None, None) => unreachable!(),
                })
                .collect(),
        )
    }
}

impl Sub for &QPoly {
    type Output = QPoly;
    fn sub(self, rhs: &QPoly) -> QPoly {
        self + &(-rhs)
    }
}

impl Neg for &QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        QPoly {
            ring: self.ring.clone(),
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &QPoly {
    type Output = QPoly;
    fn mul(self, rhs: &QPoly) -> QPoly {
        self.check_ring(rhs);
        if self.is_zero() || rhs.is_zero() {
            return QPoly::zero(&self.ring);
        }
        // Accumulate unreduced products per q-degree and reduce once at the end.
        let phi = self.ring.degree();
        let width = 2 * phi - 1;
        let n = self.coeffs.len() + rhs.coeffs.len() - 1;
        let mut acc = vec![BigInt::zero(); n * width];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let base = (i + j) * width;
                for (x, ax) in a.coeffs().iter().enumerate() {
                    if ax.is_zero() {
                        continue;
                    }
                    for (y, by) in b.coeffs().iter().enumerate() {
                        if !by.is_zero() {
                            acc[base + x + y] += ax * by;
                        }
                    }
                }
            }
        }
        let coeffs = acc
            .chunks(width)
            .map(|raw| self.ring.reduce_short(raw))
            .collect();
        QPoly::new(&self.ring, coeffs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn division_examples() {
        let r1 = CycRing::new(1);
        let a = QPoly::from_i64s(&[1, 0, 0, 0, -1], &r1);
        let b = QPoly::from_i64s(&[1, 0, -1], &r1);
        assert_eq!(a.div_exact(&b).unwrap(), QPoly::from_i64s(&[1, 0, 1], &r1));
        let odd = QPoly::from_i64s(&[1, 0, 0, -1], &r1);
        assert!(matches!(odd.div_exact(&b), Err(Error::NotDivisible(_))));
    }

    #[test]
    fn division_by_unit_leading_root_of_unity() {
        let r5 = CycRing::new(5);
        let z = r5.xi();
        let b = &QPoly::one(&r5) + &QPoly::monomial(z.clone(), 2);
        let c = QPoly::new(&r5, vec![r5.int(3), z.clone(), r5.one()]);
        let a = &b * &c;
        assert_eq!(a.div_exact(&b).unwrap(), c);
    }

    #[test]
    fn dilate_and_eval() {
        let r1 = CycRing::new(1);
        let p = QPoly::from_i64s(&[1, 2, 3], &r1);
        assert_eq!(p.dilate(2), QPoly::from_i64s(&[1, 0, 2, 0, 3], &r1));
        assert_eq!(p.eval_one(), r1.int(6));
    }

    #[test]
    fn rendering_with_vector_coefficients() {
        let r3 = CycRing::new(3);
        let p = &QPoly::one(&r3) + &QPoly::monomial(r3.xi(), 2);
        assert_eq!(p.render(), "[1,0] + [0,1]*q^2");
        let r2 = CycRing::new(2);
        assert_eq!(
            QPoly::from_i64s(&[1, -2, 0, -1], &r2).render(),
            "1 - 2*q - q^3"
        );
    }
}
