use crate::cyclotomic::CycElem;
use crate::error::Result;
use crate::polyring::{CoeffMismatch, QPoly, TPoly, TriPoly, TruncSeries};

/// One side of an identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    /// Exact polynomial in `t` over `Z[ξ_m][q]`.
    Poly(TPoly),
    /// Series in `t` known up to a fixed order.
    Series(TruncSeries),
    /// Integer polynomial in `t`, `q` and `p` with `p` symbolic.
    Tri(TriPoly),
}

impl Expr {
    /// A constant of `Z[ξ_m]`.
    pub fn elem(c: CycElem) -> Expr {
        Expr::Poly(TPoly::constant(QPoly::constant(c)))
    }

    pub fn render(&self) -> String {
        match self {
            Expr::Poly(p) => p.render(),
            Expr::Series(s) => s.render(),
            Expr::Tri(p) => p.render(),
        }
    }

    /// First differing coefficient; `None` when the two sides agree.
    pub fn first_mismatch(&self, other: &Expr) -> Result<Option<CoeffMismatch>> {
        match (self, other) {
            (Expr::Poly(a), Expr::Poly(b)) => a.first_mismatch(b),
            (Expr::Series(a), Expr::Series(b)) => a.first_mismatch(b),
            (Expr::Tri(a), Expr::Tri(b)) => Ok(a.first_mismatch(b)),
            _ => Err(crate::error::Error::Internal(
                "compared expressions of different kinds".into(),
            )),
        }
    }

    /// Adds 1 to one coefficient and returns the `(t, q)` slot touched.
    ///
    /// `pick` selects among the nonzero coefficients (wrapping); an all-zero
    /// expression gets its constant term bumped.
    pub fn perturb(&self, pick: u64) -> (Expr, (usize, usize)) {
        match self {
            Expr::Poly(p) => {
                let (rows, at) = bump(p.ring(), p.coeffs(), pick);
                (Expr::Poly(TPoly::new(p.ring(), rows)), at)
            }
            Expr::Series(s) => {
                let (rows, at) = bump(s.ring(), s.coeffs(), pick);
                (
                    Expr::Series(TruncSeries::from_coeffs(s.ring(), s.order(), rows)),
                    at,
                )
            }
            Expr::Tri(p) => {
                let slots: Vec<_> = p.terms().map(|(&e, _)| e).collect();
                let e = if slots.is_empty() {
                    (0, 0, 0)
                } else {
                    slots[(pick % slots.len() as u64) as usize]
                };
                let mut out = p.clone();
                out.add_term(e, 1.into());
                (Expr::Tri(out), (e.0 as usize, e.1 as usize))
            }
        }
    }
}

fn bump(
    ring: &crate::cyclotomic::CycRing,
    rows: &[QPoly],
    pick: u64,
) -> (Vec<QPoly>, (usize, usize)) {
    let slots: Vec<(usize, usize)> = rows
        .iter()
        .enumerate()
        .flat_map(|(a, row)| {
            row.coeffs()
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(move |(b, _)| (a, b))
        })
        .collect();
    let at = if slots.is_empty() {
        (0, 0)
    } else {
        slots[(pick % slots.len() as u64) as usize]
    };
    let mut rows = rows.to_vec();
    if rows.is_empty() {
        rows.push(QPoly::zero(ring));
    }
    let mut coeffs = rows[at.0].coeffs().to_vec();
    if coeffs.len() <= at.1 {
        coeffs.resize(at.1 + 1, ring.zero());
    }
    coeffs[at.1] = &coeffs[at.1] + &ring.one();
    rows[at.0] = QPoly::new(ring, coeffs);
    (rows, at)
}
