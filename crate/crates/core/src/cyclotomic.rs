//! Exact arithmetic in `Z[ξ_m] = Z[x]/(Φ_m(x))`.
//!
//! Elements are dense coefficient vectors of length `φ(m)` over the basis
//! `1, z, …, z^{φ(m)-1}`. For `m ∈ {1, 2}` the ring is `Z` and elements
//! have a single coefficient; they go through the same code path.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Dense integer polynomial in one indeterminate, lowest degree first.
///
/// Always canonical: the highest stored coefficient is nonzero, and the zero
/// polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// `c · x^d`
    pub fn monomial(c: BigInt, d: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); d + 1];
        coeffs[d] = c;
        Self::new(coeffs)
    }

    /// `x^d - 1`
    pub fn x_pow_minus_one(d: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); d + 1];
        coeffs[0] = BigInt::from(-1);
        coeffs[d] += 1;
        Self::new(coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, d: usize) -> BigInt {
        self.coeffs.get(d).cloned().unwrap_or_default()
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(IntPoly::one(), |acc, _| &acc * self)
    }

    /// Substitutes `x -> x^s`.
    pub fn dilate(&self, s: usize) -> Self {
        assert!(s >= 1, "dilation step must be positive");
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len().saturating_sub(1) * s + 1];
        for (d, c) in self.coeffs.iter().enumerate() {
            coeffs[d * s] = c.clone();
        }
        Self::new(coeffs)
    }

    /// Long division by a divisor whose leading coefficient is `±1`.
    pub fn div_rem(&self, divisor: &IntPoly) -> Result<(IntPoly, IntPoly)> {
        let lead = divisor
            .leading()
            .ok_or_else(|| Error::NotDivisible("division by the zero polynomial".into()))?;
        if lead.abs() != BigInt::one() {
            return Err(Error::NotDivisible(format!(
                "leading coefficient {lead} of the divisor is not a unit"
            )));
        }
        let db = divisor.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() <= db {
            return Ok((IntPoly::zero(), self.clone()));
        }
        let mut quot = vec![BigInt::zero(); rem.len() - db];
        for shift in (0..quot.len()).rev() {
            let c = &rem[shift + db] * lead;
            if c.is_zero() {
                continue;
            }
            for (j, b) in divisor.coeffs.iter().enumerate() {
                rem[shift + j] -= &c * b;
            }
            quot[shift] = c;
        }
        Ok((IntPoly::new(quot), IntPoly::new(rem)))
    }

    /// Exact division; a nonzero remainder is reported as [`Error::NotDivisible`].
    pub fn div_exact(&self, divisor: &IntPoly) -> Result<IntPoly> {
        let (q, r) = self.div_rem(divisor)?;
        if !r.is_zero() {
            return Err(Error::NotDivisible(format!(
                "remainder {} is nonzero",
                r.render("x")
            )));
        }
        Ok(q)
    }

    /// Canonical text form in the variable `var`, lowest degree first.
    pub fn render(&self, var: &str) -> String {
        let terms = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(d, c)| {
                let mono = match d {
                    0 => String::new(),
                    1 => var.to_string(),
                    _ => format!("{var}^{d}"),
                };
                (c.clone(), mono)
            });
        join_integer_terms(terms)
    }
}

/// Joins `(coefficient, monomial)` pairs as `1 + 2*t*q - q^3`.
pub(crate) fn join_integer_terms(terms: impl Iterator<Item = (BigInt, String)>) -> String {
    let mut out = String::new();
    for (c, mono) in terms {
        let negative = c.is_negative();
        let mag = c.abs();
        if out.is_empty() {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        if mono.is_empty() {
            out.push_str(&mag.to_string());
        } else if mag.is_one() {
            out.push_str(&mono);
        } else {
            out.push_str(&format!("{mag}*{mono}"));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly({})", self.render("x"))
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::new((0..n).map(|d| self.coeff(d) + rhs.coeff(d)).collect())
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::new((0..n).map(|d| self.coeff(d) - rhs.coeff(d)).collect())
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        IntPoly::new(out)
    }
}

fn phi_cache() -> &'static Mutex<HashMap<u32, IntPoly>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, IntPoly>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// The monic cyclotomic polynomial `Φ_m(x)`.
///
/// Computed as `(x^m - 1) / ∏_{d | m, d < m} Φ_d(x)` with exact division and
/// memoized across calls.
///
/// Panics if `m == 0`.
pub fn cyclotomic_poly(m: u32) -> IntPoly {
    assert!(m >= 1, "cyclotomic polynomial order must be positive");
    if let Some(p) = phi_cache().lock().unwrap().get(&m) {
        return p.clone();
    }
    let mut divisor = IntPoly::one();
    for d in (1..m).filter(|d| m.is_multiple_of(*d)) {
        divisor = &divisor * &cyclotomic_poly(d);
    }
    let phi = IntPoly::x_pow_minus_one(m as usize)
        .div_exact(&divisor)
        .expect("x^m - 1 is divisible by the product of Φ_d over proper divisors");
    phi_cache().lock().unwrap().insert(m, phi.clone());
    phi
}

struct RingData {
    m: u32,
    phi: IntPoly,
    /// Row `j` holds `x^j mod Φ_m` for `j < 2·deg Φ_m - 1`.
    reduction: Vec<Vec<BigInt>>,
}

/// Handle to the ring `Z[ξ_m]`. Cheap to clone; equal iff the orders agree.
#[derive(Clone)]
pub struct CycRing(Arc<RingData>);

impl CycRing {
    /// Returns the (shared, memoized) ring of order `m`. Panics if `m == 0`.
    pub fn new(m: u32) -> Self {
        static RINGS: OnceLock<Mutex<HashMap<u32, CycRing>>> = OnceLock::new();
        let rings = RINGS.get_or_init(|| Mutex::new(HashMap::new()));
        if let Some(r) = rings.lock().unwrap().get(&m) {
            return r.clone();
        }
        let phi = cyclotomic_poly(m);
        let deg = phi.degree().expect("Φ_m is nonzero");
        let mut reduction = Vec::with_capacity(2 * deg - 1);
        let mut row: Vec<BigInt> = vec![BigInt::zero(); deg];
        row[0] = BigInt::one();
        for _ in 0..(2 * deg - 1) {
            reduction.push(row.clone());
            row = times_x(&row, &phi);
        }
        let ring = CycRing(Arc::new(RingData { m, phi, reduction }));
        rings.lock().unwrap().insert(m, ring.clone());
        ring
    }

    pub fn order(&self) -> u32 {
        self.0.m
    }

    /// `deg Φ_m = φ(m)`.
    pub fn degree(&self) -> usize {
        self.0.reduction[0].len()
    }

    pub fn modulus(&self) -> &IntPoly {
        &self.0.phi
    }

    pub fn zero(&self) -> CycElem {
        CycElem {
            ring: self.clone(),
            coeffs: vec![BigInt::zero(); self.degree()],
        }
    }

    pub fn one(&self) -> CycElem {
        self.int(BigInt::one())
    }

    pub fn int(&self, c: impl Into<BigInt>) -> CycElem {
        let mut e = self.zero();
        e.coeffs[0] = c.into();
        e
    }

    /// The generator `ξ_m`.
    pub fn xi(&self) -> CycElem {
        self.xi_pow(1)
    }

    /// `ξ_m^k`, using `ξ_m^m = 1`.
    pub fn xi_pow(&self, k: u64) -> CycElem {
        let mut e = self.one();
        for _ in 0..(k % u64::from(self.order())) {
            e = e.mul_xi();
        }
        e
    }

    /// Builds an element from a coefficient vector of length `φ(m)`.
    pub fn elem(&self, coeffs: Vec<BigInt>) -> Result<CycElem> {
        if coeffs.len() != self.degree() {
            return Err(Error::Domain(format!(
                "expected {} coefficients for m = {}, got {}",
                self.degree(),
                self.order(),
                coeffs.len()
            )));
        }
        Ok(CycElem {
            ring: self.clone(),
            coeffs,
        })
    }

    /// Reduces an unreduced product vector of length at most `2φ - 1`.
    pub(crate) fn reduce_short(&self, raw: &[BigInt]) -> CycElem {
        let deg = self.degree();
        let mut coeffs = raw[..raw.len().min(deg)].to_vec();
        coeffs.resize(deg, BigInt::zero());
        for (j, c) in raw.iter().enumerate().skip(deg) {
            if c.is_zero() {
                continue;
            }
            for (slot, r) in coeffs.iter_mut().zip(&self.0.reduction[j]) {
                if !r.is_zero() {
                    *slot += c * r;
                }
            }
        }
        CycElem {
            ring: self.clone(),
            coeffs,
        }
    }
}

/// Multiplies a reduced vector by `x` and reduces modulo the monic `phi`.
fn times_x(v: &[BigInt], phi: &IntPoly) -> Vec<BigInt> {
    let deg = v.len();
    let top = v[deg - 1].clone();
    let mut out = Vec::with_capacity(deg);
    out.push(BigInt::zero());
    out.extend_from_slice(&v[..deg - 1]);
    if !top.is_zero() {
        for (slot, p) in out.iter_mut().zip(phi.coeffs()) {
            *slot -= &top * p;
        }
    }
    out
}

impl PartialEq for CycRing {
    fn eq(&self, other: &Self) -> bool {
        self.order() == other.order()
    }
}

impl Eq for CycRing {}

impl fmt::Debug for CycRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycRing({})", self.order())
    }
}

/// An element of `Z[ξ_m]`.
#[derive(Clone, PartialEq, Eq)]
pub struct CycElem {
    ring: CycRing,
    coeffs: Vec<BigInt>,
}

impl CycElem {
    pub fn ring(&self) -> &CycRing {
        &self.ring
    }

    pub fn modulus(&self) -> u32 {
        self.ring.order()
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    /// Returns the integer value when the element lies in `Z`.
    pub fn as_integer(&self) -> Option<&BigInt> {
        self.coeffs[1..]
            .iter()
            .all(Zero::is_zero)
            .then_some(&self.coeffs[0])
    }

    pub fn mul_xi(&self) -> CycElem {
        CycElem {
            ring: self.ring.clone(),
            coeffs: times_x(&self.coeffs, self.ring.modulus()),
        }
    }

    pub fn scale(&self, c: &BigInt) -> CycElem {
        CycElem {
            ring: self.ring.clone(),
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> CycElem {
        (0..e).fold(self.ring.one(), |acc, _| &acc * self)
    }

    /// Multiplicative inverse when the element is `±ξ^j`.
    pub fn unit_inverse(&self) -> Option<CycElem> {
        let m = u64::from(self.modulus());
        for j in 0..m {
            let candidate = self.ring.xi_pow(j);
            let inverse = self.ring.xi_pow(m - j);
            if *self == candidate {
                return Some(inverse);
            }
            if *self == -&candidate {
                return Some(-&inverse);
            }
        }
        None
    }

    /// Integer when `m ≤ 2`, otherwise the bracketed coefficient vector.
    pub fn render(&self) -> String {
        if self.modulus() <= 2 {
            self.coeffs[0].to_string()
        } else {
            let parts: Vec<String> = self.coeffs.iter().map(ToString::to_string).collect();
            format!("[{}]", parts.join(","))
        }
    }

    fn check_ring(&self, other: &CycElem) {
        assert!(
            self.ring == other.ring,
            "{}",
            Error::ModulusMismatch {
                left: self.modulus(),
                right: other.modulus()
            }
        );
    }
}

impl fmt::Debug for CycElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycElem(m={}, {})", self.modulus(), self.render())
    }
}

impl fmt::Display for CycElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl Add for &CycElem {
    type Output = CycElem;
    fn add(self, rhs: &CycElem) -> CycElem {
        self.check_ring(rhs);
        CycElem {
            ring: self.ring.clone(),
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &CycElem {
    type Output = CycElem;
    fn sub(self, rhs: &CycElem) -> CycElem {
        self.check_ring(rhs);
        CycElem {
            ring: self.ring.clone(),
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Neg for &CycElem {
    type Output = CycElem;
    fn neg(self) -> CycElem {
        CycElem {
            ring: self.ring.clone(),
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
        }
    }
}

impl Mul for &CycElem {
    type Output = CycElem;
    fn mul(self, rhs: &CycElem) -> CycElem {
        self.check_ring(rhs);
        let deg = self.ring.degree();
        let mut raw = vec![BigInt::zero(); 2 * deg - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    raw[i + j] += a * b;
                }
            }
        }
        self.ring.reduce_short(&raw)
    }
}

/// Remainder of `p` modulo `Φ_m`, i.e. `p(ξ_m)`.
pub fn cyc_reduce(p: &IntPoly, ring: &CycRing) -> CycElem {
    // x^m ≡ 1 first, so the long division below has bounded size.
    let m = ring.order() as usize;
    let mut folded = vec![BigInt::zero(); m];
    for (d, c) in p.coeffs().iter().enumerate() {
        folded[d % m] += c;
    }
    let (_, rem) = IntPoly::new(folded)
        .div_rem(ring.modulus())
        .expect("Φ_m is monic");
    let mut coeffs = rem.coeffs().to_vec();
    coeffs.resize(ring.degree(), BigInt::zero());
    CycElem {
        ring: ring.clone(),
        coeffs,
    }
}

/// Evaluates `f(p)` at `p = ξ_m` by Horner's rule in the quotient ring.
///
/// `f ≡ g (mod Φ_m)` exactly when the two evaluations agree.
pub fn specialize_p(f: &IntPoly, ring: &CycRing) -> CycElem {
    f.coeffs()
        .iter()
        .rev()
        .fold(ring.zero(), |acc, c| &acc.mul_xi() + &ring.int(c.clone()))
}

/// Euler's totient, used only to size and sanity-check rings.
pub fn totient(m: u32) -> u32 {
    (1..=m).filter(|k| k.gcd(&m) == 1).count() as u32
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ip(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    /// Independent route: Φ_m = ∏_{d | m} (x^d - 1)^{μ(m/d)}.
    fn mobius(n: u32) -> i32 {
        let mut n = n;
        let mut result = 1;
        let mut p = 2;
        while p * p <= n {
            if n.is_multiple_of(p) {
                n /= p;
                if n.is_multiple_of(p) {
                    return 0;
                }
                result = -result;
            }
            p += 1;
        }
        if n > 1 {
            result = -result;
        }
        result
    }

    fn phi_by_mobius(m: u32) -> IntPoly {
        let mut num = IntPoly::one();
        let mut den = IntPoly::one();
        for d in (1..=m).filter(|d| m.is_multiple_of(*d)) {
            match mobius(m / d) {
                1 => num = &num * &IntPoly::x_pow_minus_one(d as usize),
                -1 => den = &den * &IntPoly::x_pow_minus_one(d as usize),
                _ => {}
            }
        }
        num.div_exact(&den).unwrap()
    }

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(cyclotomic_poly(1), ip(&[-1, 1]));
        assert_eq!(cyclotomic_poly(2), ip(&[1, 1]));
        assert_eq!(cyclotomic_poly(6), ip(&[1, -1, 1]));
        assert_eq!(cyclotomic_poly(6), phi_by_mobius(6));
    }

    #[test]
    fn divisor_product_recovers_x_pow_m_minus_one() {
        for m in 1..=24 {
            let phi = cyclotomic_poly(m);
            assert_eq!(phi, phi_by_mobius(m), "m = {m}");
            assert_eq!(phi.degree(), Some(totient(m) as usize));
            let prod = (1..=m)
                .filter(|d| m % d == 0)
                .fold(IntPoly::one(), |acc, d| &acc * &cyclotomic_poly(d));
            assert_eq!(prod, IntPoly::x_pow_minus_one(m as usize));
            let ring = CycRing::new(m);
            assert!(cyc_reduce(&IntPoly::x_pow_minus_one(m as usize), &ring).is_zero());
        }
    }

    #[test]
    fn reduction_examples() {
        let r4 = CycRing::new(4);
        assert_eq!(cyc_reduce(&ip(&[0, 0, 1]), &r4), r4.int(-1));
        for m in 1..=12 {
            let ring = CycRing::new(m);
            assert!(cyc_reduce(&IntPoly::monomial(BigInt::one(), m as usize), &ring).is_one());
        }
        let r5 = CycRing::new(5);
        let e = cyc_reduce(&ip(&[3, 1]), &r5);
        let expected: Vec<BigInt> = [3, 1, 0, 0].into_iter().map(BigInt::from).collect();
        assert_eq!(e.coeffs(), expected.as_slice());
    }

    #[test]
    fn arithmetic_examples() {
        let r4 = CycRing::new(4);
        let z = r4.xi();
        assert_eq!(&z * &z, r4.int(-1));
        let r3 = CycRing::new(3);
        let a = &r3.one() + &r3.xi();
        assert_eq!(&a + &(-&r3.xi()), r3.one());
        let r2 = CycRing::new(2);
        assert_eq!(&r2.int(-1) * &r2.int(-1), r2.one());
        assert_eq!(r2.xi(), r2.int(-1));
        assert_eq!(CycRing::new(1).xi(), CycRing::new(1).one());
    }

    #[test]
    #[should_panic(expected = "modulus mismatch")]
    fn mixing_moduli_panics() {
        let _ = &CycRing::new(3).one() + &CycRing::new(4).one();
    }

    #[test]
    fn specialization_examples() {
        assert_eq!(
            specialize_p(&ip(&[1, -1]), &CycRing::new(2)),
            CycRing::new(2).int(2)
        );
        let f = &ip(&[1, -1]) * &ip(&[1, 0, -1]);
        assert_eq!(specialize_p(&f, &CycRing::new(3)), CycRing::new(3).int(3));
        assert!(specialize_p(&ip(&[1, 1, 1, 1]), &CycRing::new(4)).is_zero());
    }

    #[test]
    fn p_pochhammer_at_root_of_unity_is_m() {
        for m in 1..=12u32 {
            let ring = CycRing::new(m);
            let f = (1..m as usize).fold(IntPoly::one(), |acc, j| {
                &acc * &(&IntPoly::one() - &IntPoly::monomial(BigInt::one(), j))
            });
            assert_eq!(specialize_p(&f, &ring), ring.int(m), "m = {m}");
        }
    }

    #[test]
    fn unit_inverse_of_powers_of_xi() {
        for m in [3u32, 4, 5, 6, 8] {
            let ring = CycRing::new(m);
            for j in 0..u64::from(m) {
                let u = -&ring.xi_pow(j);
                assert!((&u * &u.unit_inverse().unwrap()).is_one());
            }
            assert!(ring.int(2).unit_inverse().is_none());
        }
    }

    #[test]
    fn rendering() {
        assert_eq!(CycRing::new(2).int(-3).render(), "-3");
        assert_eq!(CycRing::new(4).xi().render(), "[0,1]");
        assert_eq!(ip(&[1, 0, -2, 1]).render("q"), "1 - 2*q^2 + q^3");
        assert_eq!(IntPoly::zero().render("q"), "0");
    }

    fn arb_poly() -> impl Strategy<Value = IntPoly> {
        prop::collection::vec(-20i64..20, 0..14).prop_map(|v| IntPoly::from_i64s(&v))
    }

    proptest! {
        #[test]
        fn ring_laws(
            m in 1u32..=12,
            a in prop::collection::vec(-50i64..50, 12),
            b in prop::collection::vec(-50i64..50, 12),
            c in prop::collection::vec(-50i64..50, 12),
        ) {
            let ring = CycRing::new(m);
            let mk = |v: &[i64]| {
                ring.elem(v[..ring.degree()].iter().map(|&x| BigInt::from(x)).collect()).unwrap()
            };
            let (a, b, c) = (mk(&a), mk(&b), mk(&c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&(&a - &b) + &b, a.clone());
        }

        #[test]
        fn reduction_and_specialization_are_homomorphisms(m in 1u32..=12, f in arb_poly(), g in arb_poly()) {
            let ring = CycRing::new(m);
            let fg = &f * &g;
            prop_assert_eq!(specialize_p(&fg, &ring), &specialize_p(&f, &ring) * &specialize_p(&g, &ring));
            prop_assert_eq!(cyc_reduce(&(&f + &g), &ring), &cyc_reduce(&f, &ring) + &cyc_reduce(&g, &ring));
            prop_assert_eq!(cyc_reduce(&fg, &ring), specialize_p(&fg, &ring));
        }
    }
}
