//! Naive reference model of the cohomology ring: raw exponent vectors
//! reduced directly through the published relations, with none of the
//! normal-form bookkeeping the library uses.

use cuplen::ring::{CohClass, IdxSet, Monomial, RingContext};
use std::collections::HashSet;

/// A mod-2 sum of raw terms `x₁^{e₁}⋯x_g^{e_g} y^s`.
#[derive(Clone, Debug)]
pub struct RawPoly {
    n: u32,
    g: u32,
    terms: HashSet<(Vec<u32>, u32)>,
}

impl RawPoly {
    pub fn zero(n: u32, g: u32) -> RawPoly {
        RawPoly {
            n,
            g,
            terms: HashSet::new(),
        }
    }

    pub fn one(n: u32, g: u32) -> RawPoly {
        let mut p = RawPoly::zero(n, g);
        p.toggle_raw(&vec![0; g as usize], 0);
        p
    }

    pub fn from_raw_terms(n: u32, g: u32, raws: &[(Vec<u32>, u32)]) -> RawPoly {
        let mut p = RawPoly::zero(n, g);
        for (e, s) in raws {
            p.toggle_raw(e, *s);
        }
        p
    }

    /// Applies `x_i² = y` everywhere, then kills the term if the square-free
    /// part and the accumulated y-power overflow `n`.
    fn reduce(&self, e: &[u32], s: u32) -> Option<(Vec<u32>, u32)> {
        let s_tot = s + e.iter().map(|&x| x / 2).sum::<u32>();
        let residues: Vec<u32> = e.iter().map(|&x| x % 2).collect();
        let odd: u32 = residues.iter().sum();
        if odd + s_tot <= self.n {
            Some((residues, s_tot))
        } else {
            None
        }
    }

    fn toggle_raw(&mut self, e: &[u32], s: u32) {
        assert_eq!(e.len(), self.g as usize);
        if let Some(term) = self.reduce(e, s) {
            if !self.terms.remove(&term) {
                self.terms.insert(term);
            }
        }
    }

    pub fn add(&self, other: &RawPoly) -> RawPoly {
        assert_eq!((self.n, self.g), (other.n, other.g));
        let mut out = self.clone();
        for (e, s) in &other.terms {
            out.toggle_raw(e, *s);
        }
        out
    }

    pub fn mul(&self, other: &RawPoly) -> RawPoly {
        assert_eq!((self.n, self.g), (other.n, other.g));
        let mut out = RawPoly::zero(self.n, self.g);
        for (ea, sa) in &self.terms {
            for (eb, sb) in &other.terms {
                let e: Vec<u32> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.toggle_raw(&e, sa + sb);
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Bridges each reduced term into the library's normal form; the naive
    /// survival check and the constructor's must agree.
    pub fn to_class(&self, ctx: &RingContext) -> CohClass {
        assert_eq!((ctx.n(), ctx.g()), (self.n, self.g));
        let mut out = CohClass::zero();
        for (residues, s) in &self.terms {
            let a = residues[0] + 2 * s;
            let indices: Vec<u32> = (2..=self.g)
                .filter(|&i| residues[i as usize - 1] == 1)
                .collect();
            let idx = IdxSet::from_indices(&indices, ctx).expect("indices within genus");
            let m = Monomial::new(a, idx, ctx)
                .expect("term alive in the naive model must be a basis monomial");
            out.toggle(m);
        }
        out
    }
}
