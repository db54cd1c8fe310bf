//! Permutation and word statistics, brute-force `A_n(t,q,p)`, and the
//! closed-form series the identity checks compare against.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::cyclotomic::CycRing;
use crate::error::{Error, Result};
use crate::polyring::{
    inv_pochhammer_trunc, q_binomial_int, q_int, q_multinomial_int, TPoly, TriPoly, TruncSeries,
};

/// Default largest `n` for which `S_n` is enumerated.
pub const DEFAULT_ENUMERATION_CAP: usize = 9;
/// Largest `n` accepted when the caller opts in explicitly.
pub const EXTENDED_ENUMERATION_CAP: usize = 10;
/// Default bound on the number of compositions summed by [`util_rhs`].
pub const DEFAULT_COMPOSITION_CAP: u128 = 1_000_000;

/// A rearrangement of `1..=n`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(values: Vec<usize>) -> Result<Self> {
        let n = values.len();
        let mut seen = vec![false; n + 1];
        for &v in &values {
            if v == 0 || v > n || seen[v] {
                return Err(Error::Domain(format!(
                    "{values:?} is not a permutation of 1..={n}"
                )));
            }
            seen[v] = true;
        }
        Ok(Permutation(values))
    }

    pub fn identity(n: usize) -> Self {
        Permutation((1..=n).collect())
    }

    pub fn values(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({self})")
    }
}

/// One-line notation; values are separated by spaces once `n ≥ 10`.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.0.len() >= 10 { " " } else { "" };
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        f.write_str(&parts.join(sep))
    }
}

/// A word over the nonnegative integers.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Word(pub Vec<u32>);

impl Word {
    pub fn letters(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.0.iter().any(|&x| x >= 10) {
            " "
        } else {
            ""
        };
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        f.write_str(&parts.join(sep))
    }
}

pub fn des(sigma: &Permutation) -> usize {
    sigma.0.windows(2).filter(|w| w[0] > w[1]).count()
}

pub fn maj(sigma: &Permutation) -> usize {
    sigma
        .0
        .windows(2)
        .enumerate()
        .filter(|(_, w)| w[0] > w[1])
        .map(|(i, _)| i + 1)
        .sum()
}

pub fn inv(sigma: &Permutation) -> usize {
    count_pairs(&sigma.0, |a, b| a > b)
}

/// Pairs `i < j` with `x_i < x_j`.
pub fn coinv(w: &Word) -> usize {
    count_pairs(&w.0, |a, b| a < b)
}

pub fn sumt(w: &Word) -> u64 {
    w.0.iter().map(|&x| u64::from(x)).sum()
}

/// Largest letter; 0 for the empty word.
pub fn maxw(w: &Word) -> u32 {
    w.0.iter().copied().max().unwrap_or(0)
}

fn count_pairs<T: Copy>(xs: &[T], rel: impl Fn(T, T) -> bool) -> usize {
    let mut count = 0;
    for i in 0..xs.len() {
        for j in i + 1..xs.len() {
            if rel(xs[i], xs[j]) {
                count += 1;
            }
        }
    }
    count
}

/// Controls brute-force enumeration of `S_n`.
#[derive(Debug, Clone, Copy)]
pub struct EnumOptions {
    pub cap: usize,
    /// Worker count; results do not depend on it.
    pub jobs: usize,
}

impl Default for EnumOptions {
    fn default() -> Self {
        EnumOptions {
            cap: DEFAULT_ENUMERATION_CAP,
            jobs: 1,
        }
    }
}

/// `A_n(t,q,p) = Σ_{σ ∈ S_n} t^{des σ} q^{maj σ} p^{inv σ}` with the default cap.
pub fn euler_mahonian(n: usize) -> Result<TriPoly> {
    euler_mahonian_with(n, &EnumOptions::default())
}

pub fn euler_mahonian_with(n: usize, opts: &EnumOptions) -> Result<TriPoly> {
    let cap = opts.cap.min(EXTENDED_ENUMERATION_CAP);
    if n > cap {
        return Err(Error::EnumerationCap { n, cap });
    }
    if n == 0 {
        return Ok(TriPoly::one());
    }
    let top = n * (n - 1) / 2 + 1;
    let block = |first: usize| count_block(n, first, top);
    let merge = |mut a: Vec<u64>, b: Vec<u64>| {
        for (x, y) in a.iter_mut().zip(b) {
            *x += y;
        }
        a
    };
    let counts = if opts.jobs <= 1 {
        (1..=n).map(block).reduce(merge).unwrap()
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(opts.jobs)
            .build()
            .map_err(|e| Error::Internal(format!("thread pool: {e}")))?;
        pool.install(|| {
            (1..=n)
                .into_par_iter()
                .map(block)
                .reduce(|| vec![0; n * top * top], merge)
        })
    };
    let mut poly = TriPoly::zero();
    for (idx, &c) in counts.iter().enumerate() {
        if c > 0 {
            let (d, rest) = (idx / (top * top), idx % (top * top));
            let (mj, iv) = (rest / top, rest % top);
            poly.add_term((d as u32, mj as u32, iv as u32), BigInt::from(c));
        }
    }
    Ok(poly)
}

/// Counts `(des, maj, inv)` over permutations of `1..=n` starting with `first`.
fn count_block(n: usize, first: usize, top: usize) -> Vec<u64> {
    let mut counts = vec![0u64; n * top * top];
    let mut perm: Vec<usize> = std::iter::once(first)
        .chain((1..=n).filter(|&v| v != first))
        .collect();
    loop {
        let (mut d, mut mj) = (0, 0);
        for i in 0..n - 1 {
            if perm[i] > perm[i + 1] {
                d += 1;
                mj += i + 1;
            }
        }
        let iv = count_pairs(&perm, |a, b| a > b);
        counts[(d * top + mj) * top + iv] += 1;
        if !next_permutation(&mut perm[1..]) {
            break;
        }
    }
    counts
}

/// Advances to the next permutation in lexicographic order; false at the last one.
fn next_permutation(xs: &mut [usize]) -> bool {
    if xs.len() < 2 {
        return false;
    }
    let Some(i) = (0..xs.len() - 1).rev().find(|&i| xs[i] < xs[i + 1]) else {
        return false;
    };
    let j = (i + 1..xs.len()).rev().find(|&j| xs[j] > xs[i]).unwrap();
    xs.swap(i, j);
    xs[i + 1..].reverse();
    true
}

/// `Σ_ℓ ([ℓ+1]_{q^s})^n t^ℓ`, the closed form of `A_n(t,q^s)/(t;q^s)_{n+1}`.
pub fn carlitz_rhs(n: u32, qstep: usize, order: usize, ring: &CycRing) -> TruncSeries {
    TruncSeries::from_fn(ring, order, |l| q_int(l + 1, qstep, ring).pow(n))
}

/// `A_n(t,q,ξ_m)/(t;q)_{n+1}` from an already enumerated `A_n`.
pub fn normalized_series(a_n: &TriPoly, n: usize, order: usize, ring: &CycRing) -> TruncSeries {
    &a_n.specialize(ring).to_series(order) * &inv_pochhammer_trunc(n + 1, 1, order, ring)
}

/// `C_i(ℓ; q, ξ_m)`: the coefficients of `A_i(t,q,ξ_m)/(t;q)_{i+1}`.
pub fn c_stream(i: usize, ring: &CycRing, order: usize) -> Result<TruncSeries> {
    if i >= ring.order() as usize {
        return Err(Error::Domain(format!(
            "C_i needs i ≤ m - 1, got i = {i}, m = {}",
            ring.order()
        )));
    }
    Ok(normalized_series(&euler_mahonian(i)?, i, order, ring))
}

/// `[t^ℓ] A_n(t,q,p)/(t;q)_{n+1}` with `p` kept symbolic.
pub fn symbolic_series_coeff(a_n: &TriPoly, n: usize, l: usize) -> TriPoly {
    (0..=l).fold(TriPoly::zero(), |acc, j| {
        let a_j = a_n.t_coeff(j as u32);
        if a_j.is_empty() {
            return acc;
        }
        let binom = TriPoly::from_q_poly(&q_binomial_int(n + l - j, l - j));
        &acc + &(&a_j * &binom)
    })
}

/// `Σ_{n_0+⋯+n_ℓ = n} q^{n_1 + 2n_2 + ⋯ + ℓn_ℓ} [n; n_0,…,n_ℓ]_p` with the default cap.
pub fn util_rhs(n: usize, l: usize) -> Result<TriPoly> {
    util_rhs_with_cap(n, l, DEFAULT_COMPOSITION_CAP)
}

pub fn util_rhs_with_cap(n: usize, l: usize, cap: u128) -> Result<TriPoly> {
    // binomial(n + ℓ, ℓ) compositions
    let count = (1..=l as u128).fold(1u128, |acc, j| acc * (n as u128 + j) / j);
    if count > cap {
        return Err(Error::CompositionCap { count, cap });
    }
    let mut memo: HashMap<Vec<usize>, TriPoly> = HashMap::new();
    let mut total = TriPoly::zero();
    let mut parts = vec![0usize; l + 1];
    compositions(n, 0, &mut parts, &mut |parts| {
        let mut key = parts.to_vec();
        key.sort_unstable();
        if !memo.contains_key(&key) {
            let mult = q_multinomial_int(&key)?;
            memo.insert(key.clone(), TriPoly::from_p_poly(&mult));
        }
        let weight: usize = parts.iter().enumerate().map(|(j, &nj)| j * nj).sum();
        let shift = TriPoly::monomial(BigInt::from(1), (0, weight as u32, 0));
        total = &total + &(&shift * &memo[&key]);
        Ok(())
    })?;
    Ok(total)
}

fn compositions(
    remaining: usize,
    slot: usize,
    parts: &mut Vec<usize>,
    visit: &mut impl FnMut(&[usize]) -> Result<()>,
) -> Result<()> {
    if slot + 1 == parts.len() {
        parts[slot] = remaining;
        return visit(parts);
    }
    for k in 0..=remaining {
        parts[slot] = k;
        compositions(remaining - k, slot + 1, parts, visit)?;
    }
    Ok(())
}

/// `A_n(t, q^s)` (so `p = 1`) embedded over `Z[ξ_m]`.
pub fn eulerian_mahonian_dilated(a_n: &TriPoly, s: u32, ring: &CycRing) -> TPoly {
    a_n.at_p_one().dilate_q(s).specialize(ring)
}
