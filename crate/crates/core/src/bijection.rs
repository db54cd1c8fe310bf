//! Words of length `n` over the nonnegative integers in bijection with pairs
//! `(σ, λ)` where `σ ∈ S_n` and `λ` is a partition with largest part at most `n`.

use std::collections::HashSet;
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::permstat::{coinv, des, inv, maj, maxw, sumt, Permutation, Word};

/// Weakly decreasing positive parts.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Domain(format!(
                "{parts:?} is not a weakly decreasing sequence of positive integers"
            )));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> u64 {
        self.0.iter().map(|&x| u64::from(x)).sum()
    }

    pub fn largest(&self) -> u32 {
        self.0.first().copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        conjugate(&self.0)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Every intermediate row of the forward map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BijectionTrace {
    pub w: Word,
    pub wbar: Word,
    pub sigma: Permutation,
    pub z: Vec<u32>,
    pub mu: Vec<u32>,
    pub lambda: Partition,
}

/// Sorts `w` weakly decreasing, keeping equal letters in their original order.
///
/// `sigma` lists the original (1-based) positions in sorted order.
pub fn stable_desc_sort(w: &Word) -> (Word, Permutation) {
    let mut positions: Vec<usize> = (1..=w.len()).collect();
    positions.sort_by(|&a, &b| w.0[b - 1].cmp(&w.0[a - 1]).then(a.cmp(&b)));
    let wbar = Word(positions.iter().map(|&j| w.0[j - 1]).collect());
    let sigma = Permutation::new(positions).expect("sorted positions form a permutation");
    (wbar, sigma)
}

/// `z_j` counts descents of `σ` at positions `i ≥ j`; `z_n = 0`.
pub fn z_vector(sigma: &Permutation) -> Vec<u32> {
    let s = sigma.values();
    let mut z = vec![0u32; s.len()];
    for j in (0..s.len().saturating_sub(1)).rev() {
        z[j] = z[j + 1] + u32::from(s[j] > s[j + 1]);
    }
    z
}

/// Conjugate of a weakly decreasing sequence; zeros are ignored.
pub fn conjugate(mu: &[u32]) -> Partition {
    let largest = mu.iter().copied().max().unwrap_or(0);
    Partition(
        (1..=largest)
            .map(|k| mu.iter().filter(|&&x| x >= k).count() as u32)
            .collect(),
    )
}

pub fn word_to_pair(w: &Word) -> Result<(Permutation, Partition)> {
    let trace = word_to_pair_traced(w)?;
    Ok((trace.sigma, trace.lambda))
}

pub fn word_to_pair_traced(w: &Word) -> Result<BijectionTrace> {
    let (wbar, sigma) = stable_desc_sort(w);
    let z = z_vector(&sigma);
    let mu = wbar
        .0
        .iter()
        .zip(&z)
        .map(|(&b, &zj)| {
            b.checked_sub(zj)
                .ok_or_else(|| Error::Internal(format!("negative entry in wbar - z for {w}")))
        })
        .collect::<Result<Vec<u32>>>()?;
    if mu.windows(2).any(|p| p[0] < p[1]) {
        return Err(Error::Internal(format!(
            "wbar - z is not weakly decreasing for {w}"
        )));
    }
    let lambda = conjugate(&mu);
    Ok(BijectionTrace {
        w: w.clone(),
        wbar,
        sigma,
        z,
        mu,
        lambda,
    })
}

pub fn pair_to_word(sigma: &Permutation, lambda: &Partition) -> Result<Word> {
    let n = sigma.len();
    if lambda.largest() as usize > n {
        return Err(Error::Domain(format!(
            "largest part of {lambda} exceeds n = {n}"
        )));
    }
    let mut mu = lambda.conjugate().0;
    mu.resize(n, 0);
    let z = z_vector(sigma);
    let mut w = vec![0u32; n];
    for (j, &pos) in sigma.values().iter().enumerate() {
        w[pos - 1] = mu[j] + z[j];
    }
    let word = Word(w);
    if stable_desc_sort(&word).1 != *sigma {
        return Err(Error::Internal(format!(
            "un-sorting ({sigma}, {lambda}) did not reproduce the permutation"
        )));
    }
    Ok(word)
}

/// Violations found for one word; empty means all properties hold.
pub fn property_failures(w: &Word) -> Vec<String> {
    let mut failures = Vec::new();
    let (sigma, lambda) = match word_to_pair(w) {
        Ok(pair) => pair,
        Err(e) => return vec![e.to_string()],
    };
    if maxw(w) as usize != des(&sigma) + lambda.len() {
        failures.push("maxw(w) != des(sigma) + len(lambda)".into());
    }
    if sumt(w) != maj(&sigma) as u64 + lambda.size() {
        failures.push("sumt(w) != maj(sigma) + |lambda|".into());
    }
    if coinv(w) != inv(&sigma) {
        failures.push("coinv(w) != inv(sigma)".into());
    }
    if lambda.largest() as usize > w.len() {
        failures.push("largest part of lambda exceeds n".into());
    }
    match pair_to_word(&sigma, &lambda) {
        Ok(back) if back == *w => {}
        Ok(back) => failures.push(format!("inverse map returned {back}")),
        Err(e) => failures.push(format!("inverse map failed: {e}")),
    }
    failures
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WordFailure {
    pub word: String,
    pub reasons: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SweepSummary {
    pub n: usize,
    pub max_letter: u32,
    pub words: u64,
    pub injective: bool,
    pub failures: Vec<WordFailure>,
}

impl SweepSummary {
    pub fn passed(&self) -> bool {
        self.injective && self.failures.is_empty()
    }
}

/// Checks every word of length `n` over `{0, …, max_letter}`.
///
/// Words are split into blocks by first letter; the result does not depend on `jobs`.
pub fn exhaustive_check(n: usize, max_letter: u32, jobs: usize) -> Result<SweepSummary> {
    let base = u64::from(max_letter) + 1;
    let total = base
        .checked_pow(n as u32)
        .filter(|&t| t <= 50_000_000)
        .ok_or_else(|| {
            Error::Domain(format!(
                "{base}^{n} words is beyond the exhaustive sweep limit of 50000000"
            ))
        })?;
    let blocks = if n == 0 { 1 } else { base };
    let per_block = total / blocks;
    let run_block = |b: u64| {
        let mut images = Vec::with_capacity(per_block as usize);
        let mut failures = Vec::new();
        for offset in 0..per_block {
            let w = decode_word(b * per_block + offset, n, base);
            let reasons = property_failures(&w);
            if reasons.is_empty() {
                images.push(word_to_pair(&w).expect("checked above"));
            } else {
                failures.push(WordFailure {
                    word: w.to_string(),
                    reasons,
                });
            }
        }
        (images, failures)
    };
    let results: Vec<_> = if jobs <= 1 {
        (0..blocks).map(run_block).collect()
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .map_err(|e| Error::Internal(format!("thread pool: {e}")))?;
        pool.install(|| (0..blocks).into_par_iter().map(run_block).collect())
    };
    let mut seen = HashSet::with_capacity(total as usize);
    let mut injective = true;
    let mut failures = Vec::new();
    for (images, fails) in results {
        for image in images {
            injective &= seen.insert(image);
        }
        failures.extend(fails);
    }
    Ok(SweepSummary {
        n,
        max_letter,
        words: total,
        injective,
        failures,
    })
}

/// Most significant digit first, so block `b` holds the words starting with `b`.
fn decode_word(mut code: u64, n: usize, base: u64) -> Word {
    let mut letters = vec![0u32; n];
    for slot in letters.iter_mut().rev() {
        *slot = (code % base) as u32;
        code /= base;
    }
    Word(letters)
}

/// Runs the sort as literal adjacent swaps of columns `(letter, position)`,
/// recording `(w′, σ′)` after every swap, starting from `(w, identity)`.
pub fn swap_sort_steps(w: &Word) -> Vec<(Word, Permutation)> {
    let mut letters = w.0.clone();
    let mut positions: Vec<usize> = (1..=w.len()).collect();
    let snapshot = |l: &Vec<u32>, p: &Vec<usize>| {
        (
            Word(l.clone()),
            Permutation::new(p.clone()).expect("positions stay a permutation"),
        )
    };
    let mut steps = vec![snapshot(&letters, &positions)];
    loop {
        let mut swapped = false;
        for i in 0..letters.len().saturating_sub(1) {
            if letters[i] < letters[i + 1] {
                letters.swap(i, i + 1);
                positions.swap(i, i + 1);
                steps.push(snapshot(&letters, &positions));
                swapped = true;
            }
        }
        if !swapped {
            return steps;
        }
    }
}
