//! Brute-force zero-divisor cup-length search.
//!
//! Ground truth for the closed formulas: enumerate exponent families for
//! products of basic zero divisors, expand them over the tensor power, and
//! report the largest total degree with a nonzero product together with a
//! re-verifiable witness.
//!
//! The restricted enumeration keeps only reduced families — column 1 sorted,
//! the other columns 0/1 with the first row non-increasing — which attain
//! the maximum. Every exponent is capped at `4n − 1`: at exponent `4n` the
//! only split of `(x + x')^{4n}` not overflowing a slot is the middle one,
//! and its binomial coefficient is even.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::ring::{Monomial, RingContext};
use crate::tensor::{
    tensor_mul, zd_power, zd_product, EvalOptions, EvalStats, ExponentAssignment, PowerCache,
    TensorClass, TensorContext, TensorMonomial,
};

/// Default search budget, in expanded tensor terms.
pub const DEFAULT_BUDGET: u64 = 200_000_000;

const CHUNK_SIZE: usize = 512;

/// A reduced exponent family: column-1 exponents sorted non-increasingly,
/// all other columns 0/1 with the first row non-increasing across columns.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct ExponentTuple {
    k: u32,
    g: u32,
    /// `a_{2,1} ≥ a_{3,1} ≥ … ≥ a_{k,1}`.
    a1: Vec<u32>,
    /// Rows `r = 2..=k` by columns `i = 2..=g`, each entry 0 or 1.
    bits: Vec<u8>,
}

impl ExponentTuple {
    pub fn new(n: u32, a1: Vec<u32>, bits: Vec<u8>, g: u32) -> Result<ExponentTuple> {
        let k = a1.len() as u32 + 1;
        if k < 2 {
            return Err(Error::InvalidK { k });
        }
        if g == 0 {
            return Err(Error::PositiveRequired { what: "g" });
        }
        if bits.len() != ((k - 1) * (g - 1)) as usize {
            return Err(Error::InvalidTuple {
                reason: format!(
                    "expected {} square-free entries, got {}",
                    (k - 1) * (g - 1),
                    bits.len()
                ),
            });
        }
        let cap = 4 * n - 1;
        if a1.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidTuple {
                reason: "column-1 exponents must be non-increasing".into(),
            });
        }
        if a1.iter().any(|&a| a > cap) {
            return Err(Error::InvalidTuple {
                reason: format!("column-1 exponents must not exceed {cap}"),
            });
        }
        if bits.iter().any(|&b| b > 1) {
            return Err(Error::InvalidTuple {
                reason: "square-free entries must be 0 or 1".into(),
            });
        }
        let row2 = &bits[..(g - 1) as usize];
        if row2.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidTuple {
                reason: "first square-free row must be non-increasing".into(),
            });
        }
        Ok(ExponentTuple { k, g, a1, bits })
    }

    pub fn total_degree(&self) -> u64 {
        self.a1.iter().map(|&a| a as u64).sum::<u64>()
            + self.bits.iter().map(|&b| b as u64).sum::<u64>()
    }

    pub fn assignment(&self) -> ExponentAssignment {
        let mut assign = ExponentAssignment::zeros(self.k, self.g).expect("validated shape");
        for r in 2..=self.k {
            assign.set(r, 1, self.a1[(r - 2) as usize]);
            for i in 2..=self.g {
                let bit = self.bits[((r - 2) * (self.g - 1) + (i - 2)) as usize];
                assign.set(r, i, bit as u32);
            }
        }
        assign
    }
}

/// A nonzero product found by the search, replayable for verification.
#[derive(Clone, Debug, Serialize)]
pub struct ZclWitness {
    pub assignment: ExponentAssignment,
    pub survivor: TensorMonomial,
    pub total_degree: u64,
}

impl ZclWitness {
    /// Re-evaluates the product and checks that the survivor is present.
    pub fn verify(&self, tctx: &TensorContext) -> Result<bool> {
        let stats = EvalStats::new();
        let out = zd_product(
            &self.assignment,
            tctx,
            &EvalOptions::default(),
            &stats,
            None,
        )?;
        Ok(out.contains(&self.survivor, tctx)
            && self.assignment.total_degree() == self.total_degree
            && self.survivor.degree() == self.total_degree)
    }
}

/// Result of a search run.
#[derive(Clone, Debug, Serialize)]
pub struct SearchOutcome {
    /// With `exact`, the cup length; otherwise the largest degree not yet
    /// ruled out when the budget ran dry (an upper bound).
    pub value: u64,
    pub exact: bool,
    pub witness: Option<ZclWitness>,
    /// Tensor terms expanded over the whole run.
    pub expanded: u64,
}

fn partitions_bounded(total: u64, parts: u32, lo: u32, hi: u32) -> Vec<Vec<u32>> {
    fn rec(total: u64, parts: u32, lo: u32, hi: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if parts == 0 {
            if total == 0 {
                out.push(prefix.clone());
            }
            return;
        }
        if total < lo as u64 * parts as u64 || total > hi as u64 * parts as u64 {
            return;
        }
        let first_max = hi.min(total.min(u32::MAX as u64) as u32);
        for a in (lo..=first_max).rev() {
            prefix.push(a);
            rec(total - a as u64, parts - 1, lo, a, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(total, parts, lo, hi, &mut Vec::new(), &mut out);
    out
}

fn bit_matrices(k: u32, g: u32) -> Vec<Vec<u8>> {
    let cols = (g - 1) as usize;
    let mut rows2 = Vec::new();
    for ones in 0..=cols {
        let mut row = vec![0u8; cols];
        row[..ones].fill(1);
        rows2.push(row);
    }
    let mut matrices: Vec<Vec<u8>> = rows2;
    for _ in 3..=k {
        let mut next = Vec::new();
        for m in &matrices {
            for mask in 0..1u32 << cols {
                let mut ext = m.clone();
                for c in 0..cols {
                    ext.push(((mask >> c) & 1) as u8);
                }
                next.push(ext);
            }
        }
        matrices = next;
    }
    matrices
}

/// All reduced exponent families of the given total degree, in row-major
/// lexicographic order of their full assignment matrices.
pub fn reduced_tuples(n: u32, g: u32, k: u32, degree: u64) -> Result<Vec<ExponentTuple>> {
    if k < 2 {
        return Err(Error::InvalidK { k });
    }
    if n == 0 || g == 0 {
        return Err(Error::PositiveRequired { what: "n and g" });
    }
    let cap = 4 * n - 1;
    let mut tuples = Vec::new();
    for bits in bit_matrices(k, g) {
        let s: u64 = bits.iter().map(|&b| b as u64).sum();
        if s > degree {
            continue;
        }
        for a1 in partitions_bounded(degree - s, k - 1, 0, cap) {
            tuples.push(ExponentTuple::new(n, a1, bits.clone(), g).expect("generated reduced"));
        }
    }
    let mut keyed: Vec<(ExponentAssignment, ExponentTuple)> = tuples
        .into_iter()
        .map(|t| (t.assignment(), t))
        .collect();
    keyed.sort_by(|x, y| x.0.cmp(&y.0));
    Ok(keyed.into_iter().map(|(_, t)| t).collect())
}

/// Every exponent assignment of the given total degree with entries capped
/// at `4n − 1`, in row-major lexicographic order. Guarded to tiny shapes;
/// only used to validate the reduced enumeration.
pub fn unrestricted_assignments(
    n: u32,
    g: u32,
    k: u32,
    degree: u64,
) -> Result<Vec<ExponentAssignment>> {
    if k < 2 {
        return Err(Error::InvalidK { k });
    }
    if n == 0 || g == 0 {
        return Err(Error::PositiveRequired { what: "n and g" });
    }
    let cells = (k - 1) * g;
    if cells > 8 {
        return Err(Error::TooLarge {
            what: format!("unrestricted enumeration over {cells} exponent cells"),
        });
    }
    let cap = 4 * n - 1;
    let mut out = Vec::new();
    let mut entries = vec![0u32; cells as usize];
    fn rec(
        at: usize,
        remaining: u64,
        cap: u32,
        entries: &mut Vec<u32>,
        out: &mut Vec<Vec<u32>>,
    ) {
        if at == entries.len() {
            if remaining == 0 {
                out.push(entries.clone());
            }
            return;
        }
        if remaining > cap as u64 * (entries.len() - at) as u64 {
            return;
        }
        for a in 0..=cap.min(remaining.min(u32::MAX as u64) as u32) {
            entries[at] = a;
            rec(at + 1, remaining - a as u64, cap, entries, out);
            entries[at] = 0;
        }
    }
    let mut raw = Vec::new();
    rec(0, degree, cap, &mut entries, &mut raw);
    raw.sort_unstable();
    for entries in raw {
        let mut assign = ExponentAssignment::zeros(k, g)?;
        for r in 2..=k {
            for i in 1..=g {
                assign.set(r, i, entries[((r - 2) * g + (i - 1)) as usize]);
            }
        }
        out.push(assign);
    }
    Ok(out)
}

/// Exhaustive cup-length search over zero-divisor products.
///
/// Scans total degrees downward from `2nk`; at each degree the candidate
/// assignments are evaluated in fixed-size chunks, tuples within a chunk in
/// parallel. The budget is consulted only between chunks, and the reported
/// witness is the row-major lexicographically least successful assignment
/// at the maximal degree, so results do not depend on thread count.
pub fn search_zcl(n: u32, g: u32, k: u32, restricted: bool, budget: u64) -> Result<SearchOutcome> {
    search_zcl_with(n, g, k, restricted, budget, EvalOptions::default())
}

/// [`search_zcl`] with explicit evaluation options.
pub fn search_zcl_with(
    n: u32,
    g: u32,
    k: u32,
    restricted: bool,
    budget: u64,
    opts: EvalOptions,
) -> Result<SearchOutcome> {
    let ring = RingContext::new(n, g)?;
    let tctx = TensorContext::new(ring, k)?;
    let stats = EvalStats::new();
    let cache = PowerCache::new();
    for degree in (0..=tctx.top_degree()).rev() {
        let assignments: Vec<ExponentAssignment> = if restricted {
            reduced_tuples(n, g, k, degree)?
                .into_iter()
                .map(|t| t.assignment())
                .collect()
        } else {
            unrestricted_assignments(n, g, k, degree)?
        };
        for chunk in assignments.chunks(CHUNK_SIZE) {
            if stats.expanded() >= budget {
                return Ok(SearchOutcome {
                    value: degree,
                    exact: false,
                    witness: None,
                    expanded: stats.expanded(),
                });
            }
            let hit = chunk
                .par_iter()
                .enumerate()
                .filter_map(|(at, assign)| {
                    let out = zd_product(assign, &tctx, &opts, &stats, Some(&cache))
                        .expect("assignments are shaped for the context");
                    if out.is_zero() {
                        None
                    } else {
                        Some((at, out.min_term(&tctx).expect("nonzero class")))
                    }
                })
                .min_by_key(|&(at, _)| at);
            if let Some((at, survivor)) = hit {
                let assignment = chunk[at].clone();
                let witness = ZclWitness {
                    assignment,
                    survivor,
                    total_degree: degree,
                };
                debug_assert!(witness.verify(&tctx)?);
                return Ok(SearchOutcome {
                    value: degree,
                    exact: true,
                    witness: Some(witness),
                    expanded: stats.expanded(),
                });
            }
        }
    }
    unreachable!("the empty product at degree zero is nonzero");
}

/// Largest `ℓ` such that some product of the `k − 1` basic zero divisors
/// of the projective-space factor contains
/// `x₁^ℓ ⊗ x^{2n} ⊗ ⋯ ⊗ x^{2n}`.
///
/// Scans `ℓ` downward from `2n`. Every factor exponent must be at least
/// `2n` to fill its slot, and a factor for slot r is the last to touch
/// slot r, so partial products are filtered to terms whose finished slots
/// already hold `x^{2n}`.
pub fn max_ell(n: u32, k: u32, budget: u64) -> Result<u64> {
    let ring = RingContext::new(n, 1)?;
    let tctx = TensorContext::new(ring, k)?;
    let stats = EvalStats::new();
    let cache = PowerCache::new();
    let full = Monomial::generator_power(1, 2 * n, &ring)?.expect("x^{2n} is the top class");
    for ell in (0..=2 * n as u64).rev() {
        let total = 2 * n as u64 * (k as u64 - 1) + ell;
        for a1 in partitions_bounded(total, k - 1, 2 * n, 4 * n - 1) {
            if stats.expanded() >= budget {
                return Err(Error::BudgetExhausted {
                    what: format!("max_ell(n={n}, k={k})"),
                    spent: stats.expanded(),
                });
            }
            let mut acc = TensorClass::unit(&tctx);
            for r in 2..=k {
                let power = zd_power(r, 1, a1[(r - 2) as usize], &tctx, &stats, Some(&cache))?;
                acc = tensor_mul(&acc, &power, &tctx, &stats);
                acc = TensorClass::from_monomials(
                    acc.monomials(&tctx)
                        .into_iter()
                        .filter(|tm| tm.slots()[(r - 1) as usize] == full),
                    &tctx,
                );
                if acc.is_zero() {
                    break;
                }
            }
            debug_assert!(acc.term_count() <= 1);
            if !acc.is_zero() {
                return Ok(ell);
            }
        }
    }
    unreachable!("ℓ = 0 succeeds with every exponent equal to 2n");
}
