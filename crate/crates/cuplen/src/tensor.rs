//! Tensor powers of the symmetric-product ring and zero-divisor products.
//!
//! Classes in the k-fold tensor power are mod-2 sets of slot-wise basis
//! monomials. Each tensor monomial packs into a `u128` key — slot 1 in the
//! least significant field — so large expansions stay cheap and the term
//! with the smallest key is a deterministic representative.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::RwLock;

use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::ring::{monomial_mul, CohClass, IdxSet, Monomial, RingContext};

/// Ambient parameters for the k-fold tensor power, plus the packing layout.
#[derive(Debug, Clone, Copy)]
pub struct TensorContext {
    ring: RingContext,
    k: u32,
    a_bits: u32,
    slot_bits: u32,
}

impl TensorContext {
    pub fn new(ring: RingContext, k: u32) -> Result<Self> {
        if k < 2 {
            return Err(Error::InvalidK { k });
        }
        let a_bits = 64 - (2 * ring.n() as u64).leading_zeros();
        let slot_bits = a_bits + (ring.g() - 1);
        if k as u64 * slot_bits as u64 > 128 {
            return Err(Error::TooLarge {
                what: format!(
                    "k = {k} slots of {slot_bits} bits do not pack into a 128-bit key"
                ),
            });
        }
        Ok(TensorContext {
            ring,
            k,
            a_bits,
            slot_bits,
        })
    }

    pub fn ring(&self) -> &RingContext {
        &self.ring
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    /// Top nonvanishing total degree, `2nk`.
    pub fn top_degree(&self) -> u64 {
        self.ring.top_degree() as u64 * self.k as u64
    }

    fn a_mask(&self) -> u128 {
        (1u128 << self.a_bits) - 1
    }

    fn slot_mask(&self) -> u128 {
        (1u128 << self.slot_bits) - 1
    }

    fn pack_slot(&self, m: Monomial) -> u128 {
        m.a() as u128 | ((m.idx().bits() as u128) << self.a_bits)
    }

    fn unpack_slot(&self, bits: u128) -> Monomial {
        let a = (bits & self.a_mask()) as u32;
        let idx = IdxSet::from_bits((bits >> self.a_bits) as u64);
        Monomial::from_parts_unchecked(a, idx)
    }

    pub(crate) fn pack(&self, tm: &TensorMonomial) -> u128 {
        let mut key = 0u128;
        for (s, &m) in tm.slots().iter().enumerate() {
            key |= self.pack_slot(m) << (s as u32 * self.slot_bits);
        }
        key
    }

    pub(crate) fn unpack(&self, key: u128) -> TensorMonomial {
        let slots = (0..self.k)
            .map(|s| self.unpack_slot((key >> (s * self.slot_bits)) & self.slot_mask()))
            .collect();
        TensorMonomial { slots }
    }

    /// Total head-room of a packed term across all slots.
    fn key_capacity(&self, key: u128) -> u64 {
        let n = self.ring.n() as u64;
        (0..self.k)
            .map(|s| {
                let m = self.unpack_slot((key >> (s * self.slot_bits)) & self.slot_mask());
                n - m.weight() as u64
            })
            .sum()
    }
}

/// One basis element of the k-fold tensor power.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct TensorMonomial {
    slots: Vec<Monomial>,
}

impl TensorMonomial {
    pub fn unit(tctx: &TensorContext) -> TensorMonomial {
        TensorMonomial {
            slots: vec![Monomial::ONE; tctx.k() as usize],
        }
    }

    pub fn new(slots: Vec<Monomial>, tctx: &TensorContext) -> Result<TensorMonomial> {
        if slots.len() != tctx.k() as usize {
            return Err(Error::SlotCount {
                expected: tctx.k(),
                got: slots.len(),
            });
        }
        Ok(TensorMonomial { slots })
    }

    pub fn slots(&self) -> &[Monomial] {
        &self.slots
    }

    pub fn degree(&self) -> u64 {
        self.slots.iter().map(|m| m.degree() as u64).sum()
    }
}

impl Serialize for TensorMonomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.slots.len()))?;
        for m in &self.slots {
            seq.serialize_element(m)?;
        }
        seq.end()
    }
}

impl fmt::Display for TensorMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.slots.iter().map(|m| m.to_string()).collect();
        write!(f, "{}", parts.join(" ⊗ "))
    }
}

/// Total head-room across slots; stored monomials are never overweight.
pub fn tensor_capacity(tm: &TensorMonomial, tctx: &TensorContext) -> u64 {
    let n = tctx.ring().n() as u64;
    tm.slots().iter().map(|m| n - m.weight() as u64).sum()
}

/// A mod-2 set of tensor monomials in packed form.
#[derive(Clone, Default, PartialEq, Eq, Debug)]
pub struct TensorClass {
    terms: HashSet<u128>,
}

impl TensorClass {
    pub fn zero() -> TensorClass {
        TensorClass::default()
    }

    pub fn unit(tctx: &TensorContext) -> TensorClass {
        TensorClass::from_monomials([TensorMonomial::unit(tctx)], tctx)
    }

    pub fn from_monomials(
        ms: impl IntoIterator<Item = TensorMonomial>,
        tctx: &TensorContext,
    ) -> TensorClass {
        let mut class = TensorClass::zero();
        for tm in ms {
            class.toggle(tctx.pack(&tm));
        }
        class
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn contains(&self, tm: &TensorMonomial, tctx: &TensorContext) -> bool {
        self.terms.contains(&tctx.pack(tm))
    }

    /// All terms, ascending by packed key (slot 1 least significant).
    pub fn monomials(&self, tctx: &TensorContext) -> Vec<TensorMonomial> {
        let mut keys: Vec<u128> = self.terms.iter().copied().collect();
        keys.sort_unstable();
        keys.into_iter().map(|key| tctx.unpack(key)).collect()
    }

    /// The term with the smallest packed key, a deterministic representative.
    pub fn min_term(&self, tctx: &TensorContext) -> Option<TensorMonomial> {
        self.terms.iter().min().map(|&key| tctx.unpack(key))
    }

    fn toggle(&mut self, key: u128) {
        if !self.terms.remove(&key) {
            self.terms.insert(key);
        }
    }

    /// Drops every term whose total capacity is below `min`.
    fn retain_capacity_at_least(&mut self, min: u64, tctx: &TensorContext) {
        self.terms.retain(|&key| tctx.key_capacity(key) >= min);
    }
}

/// Shared counter of expanded tensor terms; the unit of search budgets.
#[derive(Default, Debug)]
pub struct EvalStats {
    expanded: AtomicU64,
}

impl EvalStats {
    pub fn new() -> EvalStats {
        EvalStats::default()
    }

    pub fn bump(&self, by: u64) {
        self.expanded.fetch_add(by, Ordering::Relaxed);
    }

    pub fn expanded(&self) -> u64 {
        self.expanded.load(Ordering::Relaxed)
    }
}

fn mul_keys(a: u128, b: u128, tctx: &TensorContext) -> Option<u128> {
    let n = tctx.ring().n();
    let a_mask = tctx.a_mask();
    let slot_mask = tctx.slot_mask();
    let mut out = 0u128;
    for s in 0..tctx.k() {
        let shift = s * tctx.slot_bits;
        let u = (a >> shift) & slot_mask;
        let v = (b >> shift) & slot_mask;
        let ua = (u & a_mask) as u32;
        let va = (v & a_mask) as u32;
        let ui = (u >> tctx.a_bits) as u64;
        let vi = (v >> tctx.a_bits) as u64;
        let prod_a = ua + va + 2 * (ui & vi).count_ones();
        let prod_i = ui ^ vi;
        if (prod_a + 1) / 2 + prod_i.count_ones() > n {
            return None;
        }
        out |= (prod_a as u128 | (prod_i as u128) << tctx.a_bits) << shift;
    }
    Some(out)
}

/// Product of two tensor classes, expanding pairwise with mod-2 cancellation.
pub fn tensor_mul(
    p: &TensorClass,
    q: &TensorClass,
    tctx: &TensorContext,
    stats: &EvalStats,
) -> TensorClass {
    let (outer, inner) = if p.terms.len() <= q.terms.len() {
        (p, q)
    } else {
        (q, p)
    };
    let mut out = TensorClass::zero();
    for &ka in &outer.terms {
        stats.bump(inner.terms.len() as u64);
        for &kb in &inner.terms {
            if let Some(key) = mul_keys(ka, kb, tctx) {
                out.toggle(key);
            }
        }
    }
    out
}

/// The basic zero divisor `x_{1,i} ⊗ 1 ⊗ ⋯ + ⋯ ⊗ x_{r,i} ⊗ ⋯` (slots 1 and r).
pub fn zero_divisor(r: u32, i: u32, tctx: &TensorContext) -> Result<TensorClass> {
    validate_slot(r, tctx)?;
    let x = Monomial::generator(i, tctx.ring())?;
    let mut first = TensorMonomial::unit(tctx);
    first.slots[0] = x;
    let mut second = TensorMonomial::unit(tctx);
    second.slots[(r - 1) as usize] = x;
    Ok(TensorClass::from_monomials([first, second], tctx))
}

fn validate_slot(r: u32, tctx: &TensorContext) -> Result<()> {
    if r < 2 || r > tctx.k() {
        return Err(Error::SlotIndex { r, k: tctx.k() });
    }
    Ok(())
}

/// Memo for zero-divisor powers, keyed by `(r, i, m)`.
#[derive(Default, Debug)]
pub struct PowerCache {
    map: RwLock<HashMap<(u32, u32, u32), TensorClass>>,
}

impl PowerCache {
    pub fn new() -> PowerCache {
        PowerCache::default()
    }
}

/// `(x_{1,i} + x_{r,i})^m`, expanded through binomial parity: one term per
/// submask `j` of `m`, namely `x_{1,i}^j` in slot 1 and `x_{r,i}^{m-j}` in
/// slot r, kept when both slot entries survive.
///
/// Direct construction expands no term pairs, so it never advances `stats`;
/// budgets meter only the pairwise products formed in [`tensor_mul`].
pub fn zd_power(
    r: u32,
    i: u32,
    m: u32,
    tctx: &TensorContext,
    _stats: &EvalStats,
    cache: Option<&PowerCache>,
) -> Result<TensorClass> {
    validate_slot(r, tctx)?;
    if i == 0 || i > tctx.ring().g() {
        return Err(Error::GeneratorIndex {
            i,
            g: tctx.ring().g(),
        });
    }
    if let Some(c) = cache {
        if let Some(hit) = c.map.read().unwrap().get(&(r, i, m)) {
            return Ok(hit.clone());
        }
    }
    let mut out = TensorClass::zero();
    let shift = (r - 1) * tctx.slot_bits;
    let mut j = m;
    loop {
        let head = Monomial::generator_power(i, j, tctx.ring())?;
        let tail = Monomial::generator_power(i, m - j, tctx.ring())?;
        if let (Some(head), Some(tail)) = (head, tail) {
            out.toggle(tctx.pack_slot(head) | tctx.pack_slot(tail) << shift);
        }
        if j == 0 {
            break;
        }
        j = (j - 1) & m;
    }
    if let Some(c) = cache {
        c.map.write().unwrap().insert((r, i, m), out.clone());
    }
    Ok(out)
}

/// Reference implementation of [`zd_power`] by iterated multiplication.
pub fn zd_power_naive(
    r: u32,
    i: u32,
    m: u32,
    tctx: &TensorContext,
    stats: &EvalStats,
) -> Result<TensorClass> {
    let zd = zero_divisor(r, i, tctx)?;
    let mut acc = TensorClass::unit(tctx);
    for _ in 0..m {
        acc = tensor_mul(&acc, &zd, tctx, stats);
    }
    Ok(acc)
}

/// Exponents `a_{r,i}` for the product `Π (x_{1,i} + x_{r,i})^{a_{r,i}}`,
/// laid out row-major: rows `r = 2..=k`, columns `i = 1..=g`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize)]
pub struct ExponentAssignment {
    k: u32,
    g: u32,
    entries: Vec<u32>,
}

impl ExponentAssignment {
    pub fn zeros(k: u32, g: u32) -> Result<ExponentAssignment> {
        if k < 2 {
            return Err(Error::InvalidK { k });
        }
        if g == 0 {
            return Err(Error::PositiveRequired { what: "g" });
        }
        Ok(ExponentAssignment {
            k,
            g,
            entries: vec![0; ((k - 1) * g) as usize],
        })
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn g(&self) -> u32 {
        self.g
    }

    fn index(&self, r: u32, i: u32) -> usize {
        assert!((2..=self.k).contains(&r), "slot {r} out of range");
        assert!((1..=self.g).contains(&i), "generator {i} out of range");
        ((r - 2) * self.g + (i - 1)) as usize
    }

    pub fn get(&self, r: u32, i: u32) -> u32 {
        self.entries[self.index(r, i)]
    }

    pub fn set(&mut self, r: u32, i: u32, a: u32) {
        let at = self.index(r, i);
        self.entries[at] = a;
    }

    pub fn total_degree(&self) -> u64 {
        self.entries.iter().map(|&a| a as u64).sum()
    }

    /// Nonzero factors ordered for evaluation: the `i = 1` factors first,
    /// then the remaining generator indices ascending, slots ascending inside.
    pub fn factors(&self) -> Vec<(u32, u32, u32)> {
        let mut out = Vec::new();
        for i in 1..=self.g {
            for r in 2..=self.k {
                let a = self.get(r, i);
                if a > 0 {
                    out.push((i, r, a));
                }
            }
        }
        out
    }

    /// Column sum `Σ_r a_{r,i}`.
    pub fn column_sum(&self, i: u32) -> u64 {
        (2..=self.k).map(|r| self.get(r, i) as u64).sum()
    }

    pub fn column_max(&self, i: u32) -> u32 {
        (2..=self.k).map(|r| self.get(r, i)).max().unwrap_or(0)
    }
}

impl fmt::Display for ExponentAssignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .factors()
            .iter()
            .map(|&(i, r, a)| format!("a[{r},{i}]={a}"))
            .collect();
        if parts.is_empty() {
            write!(f, "empty")
        } else {
            write!(f, "{}", parts.join(", "))
        }
    }
}

/// Evaluation switches for [`zd_product`].
#[derive(Clone, Copy, Debug)]
pub struct EvalOptions {
    /// Drop terms that cannot absorb the square-free factors still to come.
    pub prune: bool,
}

impl Default for EvalOptions {
    fn default() -> Self {
        EvalOptions { prune: true }
    }
}

/// Capacity needed by the factor groups with generator index above `after`.
///
/// Multiplying by the square-free group of a fresh generator index costs at
/// least `⌊(1 + Σ_r a_{r,i})/2⌋` capacity, so the costs of the remaining
/// groups add up. Only sound when those exponents are all 0/1; returns
/// `None` otherwise and the caller skips pruning.
fn future_capacity_cost(assign: &ExponentAssignment, after: u32) -> Option<u64> {
    let mut cost = 0u64;
    for i in after + 1..=assign.g() {
        if assign.column_max(i) > 1 {
            return None;
        }
        cost += (1 + assign.column_sum(i)) / 2;
    }
    Some(cost)
}

/// Ordered product of the zero-divisor powers described by `assign`.
///
/// Factors touching only slot pairs `(1, r)` with `i = 1` are multiplied
/// first, then the remaining generator indices ascending. The running
/// product short-circuits at zero.
pub fn zd_product(
    assign: &ExponentAssignment,
    tctx: &TensorContext,
    opts: &EvalOptions,
    stats: &EvalStats,
    cache: Option<&PowerCache>,
) -> Result<TensorClass> {
    if assign.k() != tctx.k() || assign.g() != tctx.ring().g() {
        return Err(Error::ShapeMismatch {
            want_k: tctx.k(),
            want_g: tctx.ring().g(),
            got_k: assign.k(),
            got_g: assign.g(),
        });
    }
    let mut acc = TensorClass::unit(tctx);
    let factors = assign.factors();
    let mut at = 0;
    while at < factors.len() {
        let group_i = factors[at].0;
        while at < factors.len() && factors[at].0 == group_i {
            let (i, r, a) = factors[at];
            let power = zd_power(r, i, a, tctx, stats, cache)?;
            acc = tensor_mul(&acc, &power, tctx, stats);
            if acc.is_zero() {
                return Ok(acc);
            }
            at += 1;
        }
        if opts.prune {
            if let Some(cost) = future_capacity_cost(assign, group_i) {
                if cost > 0 {
                    acc.retain_capacity_at_least(cost, tctx);
                    if acc.is_zero() {
                        return Ok(acc);
                    }
                }
            }
        }
    }
    Ok(acc)
}

/// Image under the multiplication map back to the plain ring: every tensor
/// term has its slots multiplied out.
pub fn diagonal_image(tc: &TensorClass, tctx: &TensorContext) -> CohClass {
    let mut out = CohClass::zero();
    for tm in tc.monomials(tctx) {
        let mut acc = Some(Monomial::ONE);
        for &m in tm.slots() {
            acc = acc.and_then(|u| monomial_mul(u, m, tctx.ring()));
        }
        if let Some(m) = acc {
            out.toggle(m);
        }
    }
    out
}
