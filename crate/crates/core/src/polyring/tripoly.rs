use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::cyclotomic::{join_integer_terms, CycRing, IntPoly};

use super::qpoly::QPoly;
use super::tpoly::TPoly;
use super::CoeffMismatch;

/// Exponent triple `(t, q, p)`.
pub type Exponents = (u32, u32, u32);

/// Sparse integer polynomial in `t`, `q` and `p`.
///
/// Stored coefficients are nonzero; iteration is lexicographic in `(t, q, p)`.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct TriPoly {
    terms: BTreeMap<Exponents, BigInt>,
}

impl TriPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(BigInt::one(), (0, 0, 0))
    }

    pub fn monomial(c: BigInt, e: Exponents) -> Self {
        let mut p = Self::zero();
        p.add_term(e, c);
        p
    }

    /// Integer polynomial in `q` (no `t`, no `p`).
    pub fn from_q_poly(f: &IntPoly) -> Self {
        Self::from_univariate(f, |d| (0, d, 0))
    }

    /// Integer polynomial in `p` (no `t`, no `q`).
    pub fn from_p_poly(f: &IntPoly) -> Self {
        Self::from_univariate(f, |d| (0, 0, d))
    }

    fn from_univariate(f: &IntPoly, exp: impl Fn(u32) -> Exponents) -> Self {
        let mut p = Self::zero();
        for (d, c) in f.coeffs().iter().enumerate() {
            p.add_term(exp(d as u32), c.clone());
        }
        p
    }

    pub fn add_term(&mut self, e: Exponents, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(e).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, e: Exponents) -> BigInt {
        self.terms.get(&e).cloned().unwrap_or_default()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Sum of all coefficients, i.e. the value at `t = q = p = 1`.
    pub fn coefficient_sum(&self) -> BigInt {
        self.terms.values().sum()
    }

    fn map_exponents(&self, f: impl Fn(Exponents) -> Exponents) -> TriPoly {
        let mut out = TriPoly::zero();
        for (&e, c) in &self.terms {
            out.add_term(f(e), c.clone());
        }
        out
    }

    pub fn at_t_one(&self) -> TriPoly {
        self.map_exponents(|(_, q, p)| (0, q, p))
    }

    pub fn at_q_one(&self) -> TriPoly {
        self.map_exponents(|(t, _, p)| (t, 0, p))
    }

    pub fn at_p_one(&self) -> TriPoly {
        self.map_exponents(|(t, q, _)| (t, q, 0))
    }

    /// Substitutes `q -> q^s`.
    pub fn dilate_q(&self, s: u32) -> TriPoly {
        self.map_exponents(|(t, q, p)| (t, q * s, p))
    }

    /// Coefficient of `t^j`, as a polynomial in `q` and `p`.
    pub fn t_coeff(&self, j: u32) -> TriPoly {
        TriPoly {
            terms: self
                .terms
                .range((j, 0, 0)..=(j, u32::MAX, u32::MAX))
                .map(|(&(_, q, p), c)| ((0, q, p), c.clone()))
                .collect(),
        }
    }

    pub fn t_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.0).max()
    }

    /// Substitutes `p = ξ_m`, producing a polynomial in `t` over `Z[ξ_m][q]`.
    ///
    /// With `m = 1` this drops `p`.
    pub fn specialize(&self, ring: &CycRing) -> TPoly {
        let t_len = self.t_degree().map_or(0, |d| d as usize + 1);
        let mut rows: Vec<Vec<crate::cyclotomic::CycElem>> = vec![Vec::new(); t_len];
        for (&(t, q, p), c) in &self.terms {
            let row = &mut rows[t as usize];
            if row.len() <= q as usize {
                row.resize(q as usize + 1, ring.zero());
            }
            let term = ring.xi_pow(u64::from(p)).scale(c);
            row[q as usize] = &row[q as usize] + &term;
        }
        TPoly::new(
            ring,
            rows.into_iter().map(|row| QPoly::new(ring, row)).collect(),
        )
    }

    /// Groups terms by `(t, q)`; each group is a polynomial in `p`.
    fn tq_groups(&self) -> BTreeMap<(u32, u32), IntPoly> {
        let mut groups: BTreeMap<(u32, u32), Vec<BigInt>> = BTreeMap::new();
        for (&(t, q, p), c) in &self.terms {
            let row = groups.entry((t, q)).or_default();
            if row.len() <= p as usize {
                row.resize(p as usize + 1, BigInt::zero());
            }
            row[p as usize] = c.clone();
        }
        groups
            .into_iter()
            .map(|(k, v)| (k, IntPoly::new(v)))
            .collect()
    }

    /// First `(t, q)` slot whose `p`-polynomial differs.
    pub fn first_mismatch(&self, other: &TriPoly) -> Option<CoeffMismatch> {
        if self == other {
            return None;
        }
        let (a, b) = (self.tq_groups(), other.tq_groups());
        let mut keys: Vec<&(u32, u32)> = a.keys().chain(b.keys()).collect();
        keys.sort();
        keys.dedup();
        let zero = IntPoly::zero();
        keys.into_iter().find_map(|k| {
            let (x, y) = (a.get(k).unwrap_or(&zero), b.get(k).unwrap_or(&zero));
            (x != y).then(|| CoeffMismatch {
                t_degree: k.0 as usize,
                q_degree: k.1 as usize,
                lhs_coeff: x.render("p"),
                rhs_coeff: y.render("p"),
            })
        })
    }

    pub fn render(&self) -> String {
        join_integer_terms(self.terms.iter().map(|(&(t, q, p), c)| {
            let mut parts = Vec::new();
            for (var, e) in [("t", t), ("q", q), ("p", p)] {
                match e {
                    0 => {}
                    1 => parts.push(var.to_string()),
                    _ => parts.push(format!("{var}^{e}")),
                }
            }
            (c.clone(), parts.join("*"))
        }))
    }
}

impl fmt::Debug for TriPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TriPoly({})", self.render())
    }
}

impl fmt::Display for TriPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl Add for &TriPoly {
    type Output = TriPoly;
    fn add(self, rhs: &TriPoly) -> TriPoly {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, c.clone());
        }
        out
    }
}

impl Sub for &TriPoly {
    type Output = TriPoly;
    fn sub(self, rhs: &TriPoly) -> TriPoly {
        self + &(-rhs)
    }
}

impl Neg for &TriPoly {
    type Output = TriPoly;
    fn neg(self) -> TriPoly {
        TriPoly {
            terms: self.terms.iter().map(|(&e, c)| (e, -c)).collect(),
        }
    }
}

impl Mul for &TriPoly {
    type Output = TriPoly;
    fn mul(self, rhs: &TriPoly) -> TriPoly {
        let mut out = TriPoly::zero();
        for (&(t1, q1, p1), a) in &self.terms {
            for (&(t2, q2, p2), b) in &rhs.terms {
                out.add_term((t1 + t2, q1 + q2, p1 + p2), a * b);
            }
        }
        out
    }
}
