use num_bigint::BigInt;

use crate::cyclotomic::{specialize_p, CycRing};
use crate::error::{Error, Result};
use crate::permstat::{
    carlitz_rhs, eulerian_mahonian_dilated, normalized_series, symbolic_series_coeff, util_rhs,
};
use crate::polyring::{
    pochhammer_t, pochhammer_t_series, q_factorial, q_int, q_multinomial_int, q_pochhammer,
    q_pochhammer_int, QPoly, TPoly, TriPoly, TruncSeries,
};

use super::{Context, Expr, MatrixConfig, Params, SuiteId};

/// One suite evaluated at one parameter point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub suite: SuiteId,
    pub params: Params,
}

impl Check {
    pub fn new(suite: SuiteId, params: &[(&str, i64)]) -> Self {
        Check {
            suite,
            params: params.iter().map(|&(k, v)| (k.to_string(), v)).collect(),
        }
    }

    /// `key=value` pairs joined by spaces.
    pub fn params_text(&self) -> String {
        self.params
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect::<Vec<_>>()
            .join(" ")
    }

    fn get(&self, key: &str) -> Result<usize> {
        let v = self
            .params
            .get(key)
            .copied()
            .ok_or_else(|| Error::Domain(format!("{} needs parameter `{key}`", self.suite)))?;
        usize::try_from(v).map_err(|_| Error::Domain(format!("`{key}` must be nonnegative")))
    }

    fn m(&self) -> Result<u32> {
        let m = self.get("m")?;
        if m == 0 {
            return Err(Error::Domain("m must be positive".into()));
        }
        u32::try_from(m).map_err(|_| Error::Domain("m is too large".into()))
    }
}

pub struct Sides {
    pub lhs: Expr,
    pub rhs: Expr,
}

fn p(v: usize) -> i64 {
    v as i64
}

/// The parameter grid of one suite under `config`.
pub fn checks_for(suite: SuiteId, config: &MatrixConfig) -> Vec<Check> {
    let n_max = config.n_max;
    let l = p(config.trunc);
    let ms = |lo: u32| config.m_set.iter().copied().filter(move |&m| m >= lo);
    let mut out = Vec::new();
    let mut push = |params: &[(&str, i64)]| out.push(Check::new(suite, params));
    match suite {
        SuiteId::Main => {
            for m in ms(1) {
                for n in 0..=n_max {
                    let (k, i) = (n / m as usize, n % m as usize);
                    push(&[
                        ("n", p(n)),
                        ("m", m.into()),
                        ("k", p(k)),
                        ("i", p(i)),
                        ("L", l),
                    ]);
                }
            }
        }
        SuiteId::Carlitz => (0..=n_max).for_each(|n| push(&[("n", p(n)), ("L", l)])),
        SuiteId::Util => {
            for n in 0..=n_max {
                for ell in 0..=config.ell_max {
                    push(&[("n", p(n)), ("ell", p(ell))]);
                }
            }
        }
        SuiteId::CaseI0 => {
            for m in ms(1) {
                for k in (0..).take_while(|k| m as usize * k <= n_max) {
                    push(&[("m", m.into()), ("k", p(k)), ("n", p(m as usize * k))]);
                }
            }
        }
        SuiteId::CaseImag => {
            for k in (0..).take_while(|k| 4 * k <= n_max) {
                push(&[("m", 4), ("k", p(k)), ("n", p(4 * k))]);
            }
        }
        SuiteId::CaseI1 | SuiteId::CaseI2 | SuiteId::MissingOdd => {
            let (i, lo) = match suite {
                SuiteId::CaseI1 => (1, 2),
                SuiteId::CaseI2 => (2, 3),
                _ => (1, 2),
            };
            let m_values: Vec<u32> = if suite == SuiteId::MissingOdd {
                vec![2]
            } else {
                ms(lo).collect()
            };
            for m in m_values {
                for k in (0..).take_while(|k| m as usize * k + i <= n_max) {
                    let n = m as usize * k + i;
                    push(&[("m", m.into()), ("k", p(k)), ("n", p(n)), ("L", l)]);
                }
            }
        }
        SuiteId::DfEven | SuiteId::Wachs => {
            for k in (0..).take_while(|k| 2 * k <= n_max) {
                push(&[("k", p(k)), ("n", p(2 * k))]);
            }
        }
        SuiteId::DfOdd => {
            for k in (0..).take_while(|k| 2 * k < n_max) {
                push(&[("k", p(k)), ("n", p(2 * k + 1))]);
            }
        }
        SuiteId::GesselSimion => (0..=n_max).for_each(|n| push(&[("n", p(n))])),
        SuiteId::AdinGr => {
            for m in ms(1) {
                for n in 0..=n_max {
                    let (k, i) = (n / m as usize, n % m as usize);
                    push(&[("n", p(n)), ("m", m.into()), ("k", p(k)), ("i", p(i))]);
                }
            }
        }
        SuiteId::Q1Triple | SuiteId::M4Eulerian => {
            let m_values: Vec<u32> = if suite == SuiteId::M4Eulerian {
                vec![4]
            } else {
                ms(1).collect()
            };
            for m in m_values {
                let m_us = m as usize;
                for line in 1..=3usize {
                    if m_us < line || (line == 1 && m == 1 && suite == SuiteId::M4Eulerian) {
                        continue;
                    }
                    let i = line - 1;
                    for k in (0..).take_while(|k| m_us * k + i <= n_max) {
                        let n = m_us * k + i;
                        let base = [
                            ("m", i64::from(m)),
                            ("k", p(k)),
                            ("n", p(n)),
                            ("line", p(line)),
                        ];
                        let variants: &[i64] = if line == 3 { &[1, 0] } else { &[1] };
                        for &printed in variants {
                            let mut params = base.to_vec();
                            params.push(("printed", printed));
                            push(&params);
                        }
                    }
                }
            }
        }
        SuiteId::M4Mahonian => {
            for r in 0..4usize {
                for k in (0..).take_while(|k| 4 * k + r <= n_max) {
                    let base = [("line", p(r)), ("k", p(k)), ("n", p(4 * k + r))];
                    let variants: &[i64] = if r == 2 { &[1, 0] } else { &[1] };
                    for &printed in variants {
                        let mut params = base.to_vec();
                        params.push(("printed", printed));
                        push(&params);
                    }
                }
            }
        }
        SuiteId::QLucas => {
            for m in ms(2) {
                for parts in part_tuples(3, n_max) {
                    let vanishing =
                        parts.iter().map(|&x| x % m as usize).sum::<usize>() >= m as usize;
                    let mut params = vec![("m", i64::from(m))];
                    let names = ["n0", "n1", "n2"];
                    params.extend(parts.iter().enumerate().map(|(j, &x)| (names[j], p(x))));
                    params.push(("clause", 0));
                    push(&params);
                    if vanishing {
                        params.pop();
                        params.push(("clause", 1));
                        push(&params);
                    }
                }
            }
        }
        SuiteId::LemmaAgr => {
            for m in 2..=8i64 {
                for i in 0..m {
                    for j in (m - i).max(0)..m {
                        push(&[("part", 1), ("m", m), ("i", i), ("j", j)]);
                    }
                }
            }
            for m in 1..=12 {
                push(&[("part", 3), ("m", m)]);
            }
        }
    }
    out
}

/// Nonempty tuples of length ≤ `max_len` with total ≤ `max_total`.
fn part_tuples(max_len: usize, max_total: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut frontier: Vec<Vec<usize>> = vec![vec![]];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for t in &frontier {
            let used: usize = t.iter().sum();
            for x in 0..=max_total - used {
                let mut u = t.clone();
                u.push(x);
                next.push(u);
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

fn series(tp: &TPoly, order: usize) -> Expr {
    Expr::Series(tp.to_series(order))
}

/// `A(t, 1)` with `p = 1`.
fn eulerian(a: &TriPoly, ring: &CycRing) -> TPoly {
    a.at_q_one().at_p_one().specialize(ring)
}

fn one_minus_q(ring: &CycRing, d: usize) -> QPoly {
    QPoly::one_minus(ring.one(), d)
}

fn as_t_poly(q: QPoly) -> TPoly {
    TPoly::constant(q)
}

/// `((1 - q^{ℓ+2}) + q ξ (1 - q^ℓ)) [ℓ+1]_q / (1 - q^2)`, i.e. the `t^ℓ` coefficient of
/// `A_2(t,q,ξ)/(t;q)_3`.
pub(crate) fn c2_coefficient(l: usize, ring: &CycRing) -> Result<QPoly> {
    let numerator =
        &one_minus_q(ring, l + 2) + &(&QPoly::monomial(ring.xi(), 1) * &one_minus_q(ring, l));
    (&numerator * &q_int(l + 1, 1, ring)).div_exact(&one_minus_q(ring, 2))
}

/// Both sides of the third `q = 1` line, scaled by 2.
fn q1_third_line(a_n: &TriPoly, ctx: &Context, m: u32, k: usize, printed: bool) -> Result<Sides> {
    let r = CycRing::new(m);
    let lhs = a_n.at_q_one().specialize(&r).scale_elem(&r.int(2));
    let a_k1 = eulerian(&*ctx.euler_mahonian(k + 1)?, &r);
    let rhs = if printed {
        let factor = &r.int(k as i64 + 2) + &r.xi().scale(&BigInt::from(k));
        let e = (m as usize * k - k + 1) as u32;
        &TPoly::one_minus_t_pow(&r, e).scale_elem(&factor) * &a_k1
    } else {
        let a_k2 = eulerian(&*ctx.euler_mahonian(k + 2)?, &r);
        let one_minus_t = TPoly::one_minus_t_pow(&r, 1);
        let inner = &(&one_minus_t * &a_k1).scale_elem(&(&r.one() - &r.xi()))
            + &a_k2.scale_elem(&(&r.one() + &r.xi()));
        &TPoly::one_minus_t_pow(&r, ((m as usize - 1) * k) as u32) * &inner
    };
    Ok(Sides {
        lhs: Expr::Poly(lhs),
        rhs: Expr::Poly(rhs),
    })
}

/// Printed numerator of the `A_{4n+r}(1,q,I)` line.
fn m4_numerator(r: usize, ring: &CycRing) -> QPoly {
    let (one, xi) = (ring.one(), ring.xi());
    let c = |a: i64, b: i64| &ring.int(a) + &xi.scale(&BigInt::from(b));
    match r {
        2 => QPoly::new(ring, vec![one, xi]),
        3 => QPoly::new(ring, vec![c(1, 0), c(-1, 1), c(-1, 1), c(0, -1)]),
        _ => QPoly::one(ring),
    }
}

/// Builds both sides of `check`.
pub fn build_sides(check: &Check, ctx: &Context) -> Result<Sides> {
    let a = |n: usize| -> Result<std::sync::Arc<TriPoly>> { ctx.euler_mahonian(n) };
    let poly = |lhs: TPoly, rhs: TPoly| Sides {
        lhs: Expr::Poly(lhs),
        rhs: Expr::Poly(rhs),
    };
    Ok(match check.suite {
        SuiteId::Main => {
            let (n, m, l) = (check.get("n")?, check.m()?, check.get("L")?);
            let r = CycRing::new(m);
            let (k, i) = (n / m as usize, n % m as usize);
            let lhs = normalized_series(a(n)?.as_ref(), n, l, &r);
            let rhs = normalized_series(a(i)?.as_ref(), i, l, &r)
                .hadamard(&carlitz_rhs(k as u32, m as usize, l, &r))?;
            Sides {
                lhs: Expr::Series(lhs),
                rhs: Expr::Series(rhs),
            }
        }
        SuiteId::Carlitz => {
            let (n, l) = (check.get("n")?, check.get("L")?);
            let r = CycRing::new(1);
            Sides {
                lhs: Expr::Series(normalized_series(a(n)?.as_ref(), n, l, &r)),
                rhs: Expr::Series(carlitz_rhs(n as u32, 1, l, &r)),
            }
        }
        SuiteId::Util => {
            let (n, ell) = (check.get("n")?, check.get("ell")?);
            Sides {
                lhs: Expr::Tri(symbolic_series_coeff(a(n)?.as_ref(), n, ell)),
                rhs: Expr::Tri(util_rhs(n, ell)?),
            }
        }
        SuiteId::CaseI0 | SuiteId::CaseImag => {
            let (m, k) = (check.m()?, check.get("k")?);
            let r = CycRing::new(m);
            let n = m as usize * k;
            let lhs = a(n)?.specialize(&r);
            let num = pochhammer_t(0, 1, n + 1, &r);
            let den = pochhammer_t(0, m as usize, k + 1, &r);
            let a_k = eulerian_mahonian_dilated(a(k)?.as_ref(), m, &r);
            match num.div_exact(&den) {
                Ok(ratio) => poly(lhs, &ratio * &a_k),
                // a remainder is itself a failure; compare with the denominator cleared
                Err(Error::NotDivisible(_)) => poly(&lhs * &den, &num * &a_k),
                Err(e) => return Err(e),
            }
        }
        SuiteId::CaseI1 | SuiteId::MissingOdd | SuiteId::CaseI2 => {
            let (m, k, l) = (check.m()?, check.get("k")?, check.get("L")?);
            let r = CycRing::new(m);
            let i = if check.suite == SuiteId::CaseI2 { 2 } else { 1 };
            let n = m as usize * k + i;
            let stream = TruncSeries::from_coeffs(
                &r,
                l,
                (0..=l)
                    .map(|ell| {
                        let head = if i == 2 {
                            c2_coefficient(ell, &r)?
                        } else {
                            q_int(ell + 1, 1, &r)
                        };
                        Ok(&head * &q_int(ell + 1, m as usize, &r).pow(k as u32))
                    })
                    .collect::<Result<_>>()?,
            );
            Sides {
                lhs: series(&a(n)?.specialize(&r), l),
                rhs: Expr::Series(&pochhammer_t_series(0, 1, n + 1, l, &r) * &stream),
            }
        }
        SuiteId::DfEven | SuiteId::DfOdd => {
            let k = check.get("k")?;
            let r = CycRing::new(2);
            let (n, base) = if check.suite == SuiteId::DfEven {
                (2 * k, k)
            } else {
                (2 * k + 1, k + 1)
            };
            poly(
                a(n)?.at_q_one().specialize(&r),
                &TPoly::one_minus_t_pow(&r, k as u32) * &eulerian(a(base)?.as_ref(), &r),
            )
        }
        SuiteId::GesselSimion => {
            let n = check.get("n")?;
            let r = CycRing::new(2);
            let f = (n / 2) as u32;
            let one_plus_q = QPoly::from_i64s(&[1, 1], &r);
            let lhs = &a(n)?.at_t_one().specialize(&r) * &as_t_poly(one_plus_q.pow(f));
            let rhs = &one_minus_q(&r, 1).pow(f) * &q_factorial(n, &r);
            poly(lhs, as_t_poly(rhs))
        }
        SuiteId::Wachs => {
            let k = check.get("k")?;
            let r = CycRing::new(2);
            poly(
                a(2 * k)?.specialize(&r),
                &pochhammer_t(1, 2, k, &r) * &eulerian_mahonian_dilated(a(k)?.as_ref(), 2, &r),
            )
        }
        SuiteId::AdinGr => {
            let (n, m) = (check.get("n")?, check.m()?);
            let r = CycRing::new(m);
            let (k, i) = (n / m as usize, n % m as usize);
            let clear = &q_pochhammer(i, &r) * &one_minus_q(&r, m as usize).pow(k as u32);
            poly(
                &a(n)?.at_t_one().specialize(&r) * &as_t_poly(clear),
                &a(i)?.at_t_one().specialize(&r) * &as_t_poly(q_pochhammer(n, &r)),
            )
        }
        SuiteId::Q1Triple | SuiteId::M4Eulerian => {
            let (m, k, line) = (check.m()?, check.get("k")?, check.get("line")?);
            let printed = check.get("printed")? == 1;
            let r = CycRing::new(m);
            let n = m as usize * k + line - 1;
            let a_n = a(n)?;
            match line {
                1 | 2 => poly(
                    a_n.at_q_one().specialize(&r),
                    &TPoly::one_minus_t_pow(&r, ((m as usize - 1) * k) as u32)
                        * &eulerian(a(k + line - 1)?.as_ref(), &r),
                ),
                3 => q1_third_line(&a_n, ctx, m, k, printed)?,
                _ => return Err(Error::Domain(format!("line {line} out of range 1..=3"))),
            }
        }
        SuiteId::M4Mahonian => {
            let (r_line, k) = (check.get("line")?, check.get("k")?);
            let printed = check.get("printed")? == 1;
            if r_line > 3 {
                return Err(Error::Domain(format!("line {r_line} out of range 0..=3")));
            }
            let r = CycRing::new(4);
            let n = 4 * k + r_line;
            let lhs = &a(n)?.at_t_one().specialize(&r)
                * &as_t_poly(&q_pochhammer(r_line, &r) * &one_minus_q(&r, 4).pow(k as u32));
            let rhs = if printed {
                let top = if r_line == 2 { n + 1 } else { n };
                as_t_poly(
                    &(&m4_numerator(r_line, &r) * &one_minus_q(&r, 1).pow(n as u32))
                        * &q_factorial(top, &r),
                )
            } else {
                &a(r_line)?.at_t_one().specialize(&r) * &as_t_poly(q_pochhammer(n, &r))
            };
            poly(lhs, rhs)
        }
        SuiteId::QLucas => {
            let m = check.m()?;
            let r = CycRing::new(m);
            let parts: Vec<usize> = ["n0", "n1", "n2"]
                .iter()
                .filter(|key| check.params.contains_key(**key))
                .map(|key| check.get(key))
                .collect::<Result<_>>()?;
            let (ks, is): (Vec<usize>, Vec<usize>) = parts
                .iter()
                .map(|&x| (x / m as usize, x % m as usize))
                .unzip();
            let small = specialize_p(&q_multinomial_int(&is)?, &r);
            match check.get("clause")? {
                0 => {
                    let ordinary = q_multinomial_int(&ks)?.eval(&BigInt::from(1));
                    Sides {
                        lhs: Expr::elem(specialize_p(&q_multinomial_int(&parts)?, &r)),
                        rhs: Expr::elem(small.scale(&ordinary)),
                    }
                }
                _ => Sides {
                    lhs: Expr::elem(small),
                    rhs: Expr::elem(r.zero()),
                },
            }
        }
        SuiteId::LemmaAgr => {
            let m = check.m()?;
            let r = CycRing::new(m);
            match check.get("part")? {
                1 => {
                    let (i, j) = (check.get("i")?, check.get("j")?);
                    Sides {
                        lhs: Expr::elem(specialize_p(&q_multinomial_int(&[i, j])?, &r)),
                        rhs: Expr::elem(r.zero()),
                    }
                }
                3 => Sides {
                    lhs: Expr::elem(specialize_p(&q_pochhammer_int(m as usize - 1), &r)),
                    rhs: Expr::elem(r.int(i64::from(m))),
                },
                other => return Err(Error::Domain(format!("lemma part {other} is not checked"))),
            }
        }
    })
}
