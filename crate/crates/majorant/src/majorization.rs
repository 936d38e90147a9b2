//! Majorization partial order on non-negative vectors, the supremum of a
//! vector set, and the flattening process that makes a supremum descending.
//!
//! A vector `p` is majorized by `q` (written `p ≺ q`) when every prefix sum
//! of the descending-sorted `p` is bounded by the corresponding prefix of
//! `q` and the totals agree. Vectors of unequal length are zero-padded.

use crate::error::{Error, Result};

/// Default absolute tolerance for prefix-sum comparisons.
pub const DEFAULT_TOL: f64 = 1e-9;

/// Components in `[-COMPONENT_CLAMP, 0)` are clamped to zero; anything more
/// negative is rejected. Eigenprojector arithmetic produces tiny negatives.
pub const COMPONENT_CLAMP: f64 = 1e-12;

const TOTAL_TOL: f64 = 1e-9;

/// Non-negative real vector with a known expected total mass
/// (1 for a single distribution, L for a direct sum of L distributions).
#[derive(Debug, Clone, PartialEq)]
pub struct ProbabilityVector {
    components: Vec<f64>,
    total: f64,
}

impl ProbabilityVector {
    /// Validate and clamp components against an expected total.
    pub fn new(components: Vec<f64>, total: f64) -> Result<Self> {
        let mut components = components;
        for (i, c) in components.iter_mut().enumerate() {
            if !c.is_finite() {
                return Err(Error::NonFinite { row: 0, col: i });
            }
            if *c < 0.0 {
                if *c >= -COMPONENT_CLAMP {
                    *c = 0.0;
                } else {
                    return Err(Error::NegativeComponent {
                        index: i,
                        value: *c,
                    });
                }
            }
        }
        let sum: f64 = components.iter().sum();
        if (sum - total).abs() > TOTAL_TOL {
            return Err(Error::TotalMismatch {
                lhs: sum,
                rhs: total,
                tol: TOTAL_TOL,
            });
        }
        Ok(Self { components, total })
    }

    /// A single probability distribution (total mass 1).
    pub fn distribution(components: Vec<f64>) -> Result<Self> {
        Self::new(components, 1.0)
    }

    pub fn components(&self) -> &[f64] {
        &self.components
    }

    pub fn total(&self) -> f64 {
        self.total
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    /// Concatenation of several vectors; totals add.
    pub fn direct_sum(parts: &[ProbabilityVector]) -> Self {
        let components: Vec<f64> = parts.iter().flat_map(|p| p.components.clone()).collect();
        let total = parts.iter().map(|p| p.total).sum();
        Self { components, total }
    }

    /// Prefix sums of the descending-sorted components; index `k-1` holds the
    /// sum of the `k` largest entries.
    pub fn sorted_prefix_sums(&self) -> Vec<f64> {
        let sorted = sort_descending(self);
        let mut acc = 0.0;
        sorted
            .components
            .iter()
            .map(|c| {
                acc += c;
                acc
            })
            .collect()
    }

    /// True when `self` majorizes `p`, i.e. `p ≺ self`.
    pub fn majorizes(&self, p: &ProbabilityVector, tol: f64) -> Result<bool> {
        majorizes(self, p, tol)
    }
}

/// Components rearranged in descending order (`p↓`).
pub fn sort_descending(p: &ProbabilityVector) -> ProbabilityVector {
    let mut components = p.components.clone();
    components.sort_by(|a, b| b.total_cmp(a));
    ProbabilityVector {
        components,
        total: p.total,
    }
}

/// Whether `q` majorizes `p` (`p ≺ q`). Vectors of different length are
/// zero-padded to a common length first.
pub fn majorizes(q: &ProbabilityVector, p: &ProbabilityVector, tol: f64) -> Result<bool> {
    let sum_p: f64 = p.components.iter().sum();
    let sum_q: f64 = q.components.iter().sum();
    if (sum_p - sum_q).abs() > tol {
        return Err(Error::TotalMismatch {
            lhs: sum_p,
            rhs: sum_q,
            tol,
        });
    }
    let p_prefix = p.sorted_prefix_sums();
    let q_prefix = q.sorted_prefix_sums();
    // Padding appends zeros, so prefixes past the end stay at the final sum.
    let len = p_prefix.len().max(q_prefix.len());
    for k in 0..len {
        let lhs = *p_prefix.get(k).unwrap_or(&sum_p);
        let rhs = *q_prefix.get(k).unwrap_or(&sum_q);
        if lhs > rhs + tol {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Flattening: replace order-violating adjacent runs by their block mean
/// until the vector is descending. Implemented as left-to-right pool-adjacent
/// -violators merging, which computes the limit of repeated pairwise
/// averaging exactly in finitely many steps. Sum-preserving and idempotent.
pub fn flatten(v: &[f64]) -> Vec<f64> {
    // (block sum, block length) stack; merge while the tail violates
    // descending order of block means.
    let mut blocks: Vec<(f64, usize)> = Vec::with_capacity(v.len());
    for &x in v {
        blocks.push((x, 1));
        while blocks.len() >= 2 {
            let (s2, n2) = blocks[blocks.len() - 1];
            let (s1, n1) = blocks[blocks.len() - 2];
            if s1 / n1 as f64 < s2 / n2 as f64 {
                blocks.pop();
                blocks.pop();
                blocks.push((s1 + s2, n1 + n2));
            } else {
                break;
            }
        }
    }
    let mut out = Vec::with_capacity(v.len());
    for (s, n) in blocks {
        let mean = s / n as f64;
        out.extend(std::iter::repeat(mean).take(n));
    }
    out
}

/// Descending bound vector ω with cached prefix sums Ω_k.
#[derive(Debug, Clone, PartialEq, serde::Serialize)]
pub struct MajorizationBound {
    omega: Vec<f64>,
    prefix: Vec<f64>,
    total: f64,
}

impl MajorizationBound {
    /// Flatten a raw (possibly non-descending) bound vector and cache its
    /// prefix sums.
    pub fn from_raw(omega_raw: Vec<f64>) -> Self {
        let omega = flatten(&omega_raw);
        let mut prefix = Vec::with_capacity(omega.len());
        let mut acc = 0.0;
        for &w in &omega {
            acc += w;
            prefix.push(acc);
        }
        Self {
            omega,
            prefix,
            total: acc,
        }
    }

    pub fn omega(&self) -> &[f64] {
        &self.omega
    }

    /// Prefix sums; entry `k-1` is Ω_k.
    pub fn prefix(&self) -> &[f64] {
        &self.prefix
    }

    /// Ω_k with 1-based `k`; saturates at the total past the vector length,
    /// which matches zero-padding.
    pub fn prefix_at(&self, k: usize) -> f64 {
        if k == 0 {
            0.0
        } else if k <= self.prefix.len() {
            self.prefix[k - 1]
        } else {
            self.total
        }
    }

    pub fn len(&self) -> usize {
        self.omega.len()
    }

    pub fn is_empty(&self) -> bool {
        self.omega.is_empty()
    }

    pub fn total(&self) -> f64 {
        self.total
    }

    /// Whether the bound majorizes `p` (`p ≺ ω`).
    pub fn majorizes(&self, p: &ProbabilityVector, tol: f64) -> Result<bool> {
        let as_vector = ProbabilityVector {
            components: self.omega.clone(),
            total: self.total,
        };
        majorizes(&as_vector, p, tol)
    }
}

/// Supremum of a set of equal-total vectors: prefix ceilings
/// Ω_k = max over the set of k-prefix sums, differenced and flattened.
/// The result majorizes every member.
pub fn supremum(set: &[ProbabilityVector]) -> Result<MajorizationBound> {
    if set.is_empty() {
        return Err(Error::Empty { what: "vector set" });
    }
    let total = set[0].total;
    for p in set {
        let sum: f64 = p.components.iter().sum();
        if (sum - total).abs() > TOTAL_TOL {
            return Err(Error::TotalMismatch {
                lhs: sum,
                rhs: total,
                tol: TOTAL_TOL,
            });
        }
    }
    let len = set.iter().map(|p| p.len()).max().unwrap_or(0);
    let mut ceilings = vec![0.0f64; len];
    for p in set {
        let prefix = p.sorted_prefix_sums();
        for k in 0..len {
            let value = *prefix.get(k).unwrap_or(&p.total);
            if value > ceilings[k] {
                ceilings[k] = value;
            }
        }
    }
    let mut omega_raw = Vec::with_capacity(len);
    let mut prev = 0.0;
    for &c in &ceilings {
        omega_raw.push(c - prev);
        prev = c;
    }
    Ok(MajorizationBound::from_raw(omega_raw))
}
