//! The mod-2 cohomology ring of the n-th symmetric product of a genus-g
//! non-orientable surface.
//!
//! Generators `x_1, …, x_g` live in degree one and share a common square
//! `y = x_i^2` in degree two; any square-free product `x_{i_1} ⋯ x_{i_r} y^s`
//! with `r + s > n` vanishes. The normal form stores the exponent `a` of
//! `x_1` (which absorbs every power of `y`) plus a square-free tail in the
//! remaining generators, so a basis monomial is `x_1^a · Π_{i in idx} x_i`.

use std::collections::BTreeSet;
use std::fmt;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Largest supported genus; the square-free tail packs into a `u64`.
pub const MAX_GENUS: u32 = 65;
/// Largest supported number of points.
pub const MAX_N: u32 = 1 << 20;

/// Ambient parameters: `n` points on a genus-`g` non-orientable surface.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct RingContext {
    n: u32,
    g: u32,
}

impl RingContext {
    pub fn new(n: u32, g: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::PositiveRequired { what: "n" });
        }
        if g == 0 {
            return Err(Error::PositiveRequired { what: "g" });
        }
        if g > MAX_GENUS {
            return Err(Error::TooLarge {
                what: format!("genus {g} exceeds the supported maximum {MAX_GENUS}"),
            });
        }
        if n > MAX_N {
            return Err(Error::TooLarge {
                what: format!("n = {n} exceeds the supported maximum {MAX_N}"),
            });
        }
        Ok(RingContext { n, g })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn g(&self) -> u32 {
        self.g
    }

    /// Top nonvanishing degree, `2n`.
    pub fn top_degree(&self) -> u32 {
        2 * self.n
    }
}

/// Square-free tail over the generators `x_2, …, x_g`; bit `i - 2` is `x_i`.
#[derive(Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IdxSet(u64);

impl IdxSet {
    pub const EMPTY: IdxSet = IdxSet(0);

    pub fn from_bits(bits: u64) -> IdxSet {
        IdxSet(bits)
    }

    pub fn from_indices(indices: &[u32], ctx: &RingContext) -> Result<IdxSet> {
        let mut bits = 0u64;
        for &i in indices {
            if i < 2 || i > ctx.g() {
                return Err(Error::GeneratorIndex { i, g: ctx.g() });
            }
            bits |= 1 << (i - 2);
        }
        Ok(IdxSet(bits))
    }

    pub fn bits(&self) -> u64 {
        self.0
    }

    pub fn len(&self) -> u32 {
        self.0.count_ones()
    }

    pub fn is_empty(&self) -> bool {
        self.0 == 0
    }

    pub fn contains(&self, i: u32) -> bool {
        i >= 2 && i < 66 && (self.0 >> (i - 2)) & 1 == 1
    }

    pub fn intersection(&self, other: IdxSet) -> IdxSet {
        IdxSet(self.0 & other.0)
    }

    pub fn symmetric_difference(&self, other: IdxSet) -> IdxSet {
        IdxSet(self.0 ^ other.0)
    }

    /// Generator indices present, ascending.
    pub fn indices(&self) -> impl Iterator<Item = u32> + '_ {
        (0..64).filter(|b| (self.0 >> b) & 1 == 1).map(|b| b + 2)
    }

    fn fits(&self, g: u32) -> bool {
        g >= 65 || self.0 < (1u64 << (g - 1))
    }
}

impl fmt::Debug for IdxSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.indices()).finish()
    }
}

/// A normal-form basis monomial `x_1^a · Π_{i in idx} x_i`.
///
/// Only monomials satisfying the basis bound `⌈a/2⌉ + |idx| <= n` are
/// representable; the zero class is `None` wherever it can arise.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Monomial {
    a: u32,
    idx: IdxSet,
}

impl Monomial {
    pub const ONE: Monomial = Monomial {
        a: 0,
        idx: IdxSet::EMPTY,
    };

    /// Builds the monomial when it satisfies the basis bound; `None` is zero.
    pub fn new(a: u32, idx: IdxSet, ctx: &RingContext) -> Option<Monomial> {
        let m = Monomial { a, idx };
        (idx.fits(ctx.g()) && m.weight() <= ctx.n()).then_some(m)
    }

    pub(crate) fn from_parts_unchecked(a: u32, idx: IdxSet) -> Monomial {
        Monomial { a, idx }
    }

    /// The generator `x_i`.
    pub fn generator(i: u32, ctx: &RingContext) -> Result<Monomial> {
        Ok(Self::generator_power(i, 1, ctx)?.expect("generators survive for n >= 1"))
    }

    /// Normal form of `x_i^p`; `None` is zero.
    pub fn generator_power(i: u32, p: u32, ctx: &RingContext) -> Result<Option<Monomial>> {
        if i == 0 || i > ctx.g() {
            return Err(Error::GeneratorIndex { i, g: ctx.g() });
        }
        Ok(if i == 1 {
            Monomial::new(p, IdxSet::EMPTY, ctx)
        } else {
            let idx = if p % 2 == 1 {
                IdxSet(1 << (i - 2))
            } else {
                IdxSet::EMPTY
            };
            Monomial::new(p & !1, idx, ctx)
        })
    }

    pub fn a(&self) -> u32 {
        self.a
    }

    pub fn idx(&self) -> IdxSet {
        self.idx
    }

    pub fn degree(&self) -> u32 {
        self.a + self.idx.len()
    }

    /// `⌈a/2⌉ + |idx|`, the quantity the basis bound caps by `n`.
    pub fn weight(&self) -> u32 {
        (self.a + 1) / 2 + self.idx.len()
    }

    /// Head-room before the monomial dies: `n - weight`.
    pub fn capacity(&self, ctx: &RingContext) -> u32 {
        debug_assert!(self.weight() <= ctx.n());
        ctx.n() - self.weight()
    }
}

impl Serialize for Monomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("Monomial", 2)?;
        s.serialize_field("a", &self.a)?;
        s.serialize_field("idx", &self.idx.indices().collect::<Vec<_>>())?;
        s.end()
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.a {
            0 => {}
            1 => parts.push("x1".to_string()),
            a => parts.push(format!("x1^{a}")),
        }
        for i in self.idx.indices() {
            parts.push(format!("x{i}"));
        }
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join("*"))
        }
    }
}

/// Capacity with the zero class mapped to `-∞`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Capacity {
    NegInfinity,
    Finite(u32),
}

pub fn capacity(m: Option<Monomial>, ctx: &RingContext) -> Capacity {
    match m {
        None => Capacity::NegInfinity,
        Some(m) => Capacity::Finite(m.capacity(ctx)),
    }
}

/// Normal form of a raw exponent vector `(e_1, …, e_g)`; `None` is zero.
pub fn normalize(raw: &[u32], ctx: &RingContext) -> Result<Option<Monomial>> {
    if raw.len() != ctx.g() as usize {
        return Err(Error::GeneratorCount {
            expected: ctx.g(),
            got: raw.len(),
        });
    }
    let mut a = raw[0] as u64;
    let mut bits = 0u64;
    for (j, &e) in raw.iter().enumerate().skip(1) {
        a += 2 * (e as u64 / 2);
        if e % 2 == 1 {
            bits |= 1 << (j - 1);
        }
    }
    if a > ctx.top_degree() as u64 {
        return Ok(None);
    }
    Ok(Monomial::new(a as u32, IdxSet::from_bits(bits), ctx))
}

/// Product of two normal-form monomials; `None` is the zero class.
pub fn monomial_mul(u: Monomial, v: Monomial, ctx: &RingContext) -> Option<Monomial> {
    let shared = u.idx.intersection(v.idx);
    let a = u.a + v.a + 2 * shared.len();
    Monomial::new(a, u.idx.symmetric_difference(v.idx), ctx)
}

/// A cohomology class: a finite mod-2 set of basis monomials.
#[derive(Clone, Default, PartialEq, Eq, Debug)]
pub struct CohClass {
    terms: BTreeSet<Monomial>,
}

impl CohClass {
    pub fn zero() -> CohClass {
        CohClass::default()
    }

    pub fn one() -> CohClass {
        CohClass::from_monomial(Monomial::ONE)
    }

    pub fn from_monomial(m: Monomial) -> CohClass {
        let mut terms = BTreeSet::new();
        terms.insert(m);
        CohClass { terms }
    }

    pub fn from_monomials(ms: impl IntoIterator<Item = Monomial>) -> CohClass {
        let mut class = CohClass::zero();
        for m in ms {
            class.toggle(m);
        }
        class
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = &Monomial> {
        self.terms.iter()
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.terms.contains(m)
    }

    /// Mod-2 insertion: adding a monomial twice cancels it.
    pub fn toggle(&mut self, m: Monomial) {
        if !self.terms.remove(&m) {
            self.terms.insert(m);
        }
    }
}

impl fmt::Display for CohClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|m| m.to_string()).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Mod-2 sum (symmetric difference of term sets).
pub fn class_add(p: &CohClass, q: &CohClass) -> CohClass {
    let mut out = p.clone();
    for &m in q.terms() {
        out.toggle(m);
    }
    out
}

/// Product of two classes, expanding term by term.
pub fn class_mul(p: &CohClass, q: &CohClass, ctx: &RingContext) -> CohClass {
    let mut out = CohClass::zero();
    for &u in p.terms() {
        for &v in q.terms() {
            if let Some(w) = monomial_mul(u, v, ctx) {
                out.toggle(w);
            }
        }
    }
    out
}

/// All masks of the given width with exactly `ones` bits set, ascending.
fn masks_with_popcount(width: u32, ones: u32) -> Vec<u64> {
    if ones > width {
        return Vec::new();
    }
    if ones == 0 {
        return vec![0];
    }
    let top = 1u64 << width;
    let mut v = (1u64 << ones) - 1;
    let mut out = Vec::new();
    while v < top {
        out.push(v);
        let c = v & v.wrapping_neg();
        let r = v + c;
        v = (((r ^ v) >> 2) / c) | r;
    }
    out
}

/// All basis monomials, ascending by `(a, idx)`; optionally one degree only.
///
/// Without a degree filter this walks every square-free tail, so it is only
/// supported for `g <= 25`.
pub fn enumerate_basis(ctx: &RingContext, degree: Option<u32>) -> Vec<Monomial> {
    let width = ctx.g() - 1;
    let mut out = Vec::new();
    for a in 0..=ctx.top_degree() {
        let head = (a + 1) / 2;
        if head > ctx.n() {
            break;
        }
        let room = ctx.n() - head;
        match degree {
            Some(d) => {
                if d < a || d - a > room || d - a > width {
                    continue;
                }
                for bits in masks_with_popcount(width, d - a) {
                    out.push(Monomial {
                        a,
                        idx: IdxSet(bits),
                    });
                }
            }
            None => {
                assert!(
                    width <= 24,
                    "full basis enumeration is only supported for g <= 25"
                );
                for bits in 0..1u64 << width {
                    if bits.count_ones() <= room {
                        out.push(Monomial {
                            a,
                            idx: IdxSet(bits),
                        });
                    }
                }
            }
        }
    }
    out
}
