//! Cross-validation campaigns: brute-force search against the closed forms,
//! reduction and pruning soundness, randomized capacity properties, and
//! whole-grid structural laws. Failures are returned as data, never panics,
//! so the CLI can serialize them.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use std::collections::BTreeSet;

use crate::closed_forms::{
    gap_closed, zcl_closed, zcl_diff_predicted, zcl_value, CaseTag, DiffPrediction,
};
use crate::combinatorics::{binom_parity, floor_log2, gap_p2n};
use crate::error::{Error, Result};
use crate::ring::{monomial_mul, IdxSet, Monomial, RingContext};
use crate::search::{reduced_tuples, search_zcl, search_zcl_with, SearchOutcome};
use crate::tensor::{
    tensor_capacity, tensor_mul, zd_product, zero_divisor, EvalOptions, EvalStats,
    ExponentAssignment, PowerCache, TensorClass, TensorContext, TensorMonomial,
};

/// Inclusive parameter ranges for a verification sweep.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct GridSpec {
    pub n: (u32, u32),
    pub g: (u32, u32),
    pub k: (u32, u32),
}

impl GridSpec {
    pub fn new(n: (u32, u32), g: (u32, u32), k: (u32, u32)) -> GridSpec {
        GridSpec { n, g, k }
    }

    pub fn cells(&self) -> Vec<(u32, u32, u32)> {
        let mut out = Vec::new();
        for n in self.n.0..=self.n.1 {
            for g in self.g.0..=self.g.1 {
                for k in self.k.0..=self.k.1 {
                    out.push((n, g, k));
                }
            }
        }
        out
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum CellStatus {
    #[serde(rename = "AGREE")]
    Agree,
    #[serde(rename = "MISMATCH")]
    Mismatch,
    #[serde(rename = "BUDGET_EXCEEDED")]
    BudgetExceeded,
}

impl std::fmt::Display for CellStatus {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            CellStatus::Agree => "AGREE",
            CellStatus::Mismatch => "MISMATCH",
            CellStatus::BudgetExceeded => "BUDGET_EXCEEDED",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CellReport {
    pub n: u32,
    pub g: u32,
    pub k: u32,
    pub status: CellStatus,
    pub closed_value: u64,
    pub case: CaseTag,
    pub search: SearchOutcome,
}

/// Everything needed to study a formula/search disagreement offline: both
/// values, the search witness if any, and a per-tuple expansion trace at the
/// disputed degree.
#[derive(Clone, Debug, Serialize)]
pub struct MismatchArtifact {
    pub n: u32,
    pub g: u32,
    pub k: u32,
    pub closed_value: u64,
    pub case: CaseTag,
    pub search: SearchOutcome,
    pub trace: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct GridReport {
    pub spec: GridSpec,
    pub restricted: bool,
    pub prune: bool,
    pub budget: u64,
    pub cells: Vec<CellReport>,
    pub mismatches: Vec<MismatchArtifact>,
    pub agree: usize,
    pub budget_exceeded: usize,
}

impl GridReport {
    /// Budget-starved cells are inconclusive, not failures.
    pub fn all_agree(&self) -> bool {
        self.mismatches.is_empty()
    }
}

const TRACE_CAP: usize = 64;

fn expansion_trace(n: u32, g: u32, k: u32, degree: u64, opts: EvalOptions) -> Result<Vec<String>> {
    let ring = RingContext::new(n, g)?;
    let tctx = TensorContext::new(ring, k)?;
    let stats = EvalStats::new();
    let cache = PowerCache::new();
    let mut lines = Vec::new();
    for tuple in reduced_tuples(n, g, k, degree)? {
        if lines.len() == TRACE_CAP {
            lines.push(format!("(trace capped at {TRACE_CAP} tuples)"));
            break;
        }
        let assign = tuple.assignment();
        let product = zd_product(&assign, &tctx, &opts, &stats, Some(&cache))?;
        lines.push(format!(
            "degree {degree}: {assign}: {} surviving terms",
            product.term_count()
        ));
    }
    Ok(lines)
}

/// Runs the search across the grid and compares each cell with the closed
/// form. Every mismatch becomes an artifact; the caller decides severity.
pub fn verify_grid(
    spec: &GridSpec,
    restricted: bool,
    budget: u64,
    opts: EvalOptions,
) -> Result<GridReport> {
    let mut cells = Vec::new();
    let mut mismatches = Vec::new();
    let mut agree = 0usize;
    let mut starved = 0usize;
    for (n, g, k) in spec.cells() {
        let (closed_value, case) = zcl_closed(n as u64, g as u64, k)?;
        let search = search_zcl_with(n, g, k, restricted, budget, opts)?;
        let status = if !search.exact {
            starved += 1;
            CellStatus::BudgetExceeded
        } else if search.value == closed_value {
            agree += 1;
            CellStatus::Agree
        } else {
            mismatches.push(MismatchArtifact {
                n,
                g,
                k,
                closed_value,
                case,
                search: search.clone(),
                trace: expansion_trace(n, g, k, closed_value.max(search.value), opts)?,
            });
            CellStatus::Mismatch
        };
        cells.push(CellReport {
            n,
            g,
            k,
            status,
            closed_value,
            case,
            search,
        });
    }
    Ok(GridReport {
        spec: *spec,
        restricted,
        prune: opts.prune,
        budget,
        cells,
        mismatches,
        agree,
        budget_exceeded: starved,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct ReductionCell {
    pub n: u32,
    pub g: u32,
    pub k: u32,
    pub restricted_value: u64,
    pub unrestricted_value: u64,
    pub agree: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct ReductionReport {
    pub cells: Vec<ReductionCell>,
    pub disagreements: usize,
}

impl ReductionReport {
    pub fn all_agree(&self) -> bool {
        self.disagreements == 0
    }
}

/// Double-search comparison: the reduced enumeration must reach the same
/// maximum as the unrestricted one. Only sensible on tiny instances.
pub fn reduction_soundness(
    n_max: u32,
    g_max: u32,
    k_max: u32,
    budget: u64,
) -> Result<ReductionReport> {
    let mut cells = Vec::new();
    let mut disagreements = 0usize;
    for n in 1..=n_max {
        for g in 1..=g_max {
            for k in 2..=k_max {
                let restricted = search_zcl(n, g, k, true, budget)?;
                let unrestricted = search_zcl(n, g, k, false, budget)?;
                if !restricted.exact || !unrestricted.exact {
                    return Err(Error::BudgetExhausted {
                        what: format!("reduction soundness at n={n} g={g} k={k}"),
                        spent: restricted.expanded + unrestricted.expanded,
                    });
                }
                let agree = restricted.value == unrestricted.value;
                if !agree {
                    disagreements += 1;
                }
                cells.push(ReductionCell {
                    n,
                    g,
                    k,
                    restricted_value: restricted.value,
                    unrestricted_value: unrestricted.value,
                    agree,
                });
            }
        }
    }
    Ok(ReductionReport {
        cells,
        disagreements,
    })
}

/// Outcome of one randomized property campaign.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PropReport {
    pub property: String,
    pub instances: u64,
    pub violations: u64,
    pub first_violation: Option<String>,
}

impl PropReport {
    fn new(property: &str) -> PropReport {
        PropReport {
            property: property.to_string(),
            instances: 0,
            violations: 0,
            first_violation: None,
        }
    }

    fn fail(&mut self, detail: String) {
        self.violations += 1;
        if self.first_violation.is_none() {
            self.first_violation = Some(detail);
        }
    }

    pub fn passed(&self) -> bool {
        self.violations == 0
    }
}

/// Rejection-samples a basis monomial whose square-free part stays within
/// `genus_cap`, inside a ring of possibly larger genus.
fn random_monomial(rng: &mut ChaCha8Rng, ctx: &RingContext, genus_cap: u32) -> Monomial {
    loop {
        let a = rng.gen_range(0..=2 * ctx.n());
        let indices: Vec<u32> = (2..=genus_cap).filter(|_| rng.gen_bool(0.5)).collect();
        let idx = IdxSet::from_indices(&indices, ctx).expect("indices within genus");
        if let Some(m) = Monomial::new(a, idx, ctx) {
            return m;
        }
    }
}

fn capacity_sum_report(seed: u64, instances: u64) -> Result<PropReport> {
    let mut report = PropReport::new("capacity of x-power tensors equals the halved deficit sum");
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 1);
    for _ in 0..instances {
        report.instances += 1;
        let n = rng.gen_range(1..=6u32);
        let g = rng.gen_range(1..=5u32);
        let k = rng.gen_range(2..=4u32);
        let ring = RingContext::new(n, g)?;
        let tctx = TensorContext::new(ring, k)?;
        let ps: Vec<u32> = (0..k).map(|_| rng.gen_range(0..=2 * n)).collect();
        let slots: Vec<Monomial> = ps
            .iter()
            .map(|&p| {
                Monomial::generator_power(1, 2 * n - p, &ring)
                    .expect("generator index valid")
                    .expect("x1 powers up to 2n survive")
            })
            .collect();
        let tm = TensorMonomial::new(slots, &tctx)?;
        let cap = tensor_capacity(&tm, &tctx);
        let budget: u64 = ps.iter().map(|&p| p as u64).sum();
        let expected: u64 = ps.iter().map(|&p| (p / 2) as u64).sum();
        if cap != expected || cap > budget / 2 {
            report.fail(format!(
                "n={n} k={k} deficits {ps:?}: capacity {cap}, expected {expected} (≤ {})",
                budget / 2
            ));
        }
    }
    Ok(report)
}

fn fresh_zero_divisor_report(seed: u64, instances: u64) -> Result<PropReport> {
    let mut report =
        PropReport::new("fresh zero-divisor products drop capacity by half their count");
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 2);
    for _ in 0..instances {
        report.instances += 1;
        let n = rng.gen_range(1..=6u32);
        let g = rng.gen_range(1..=4u32);
        let k = rng.gen_range(2..=4u32);
        let ring = RingContext::new(n, g + 1)?;
        let tctx = TensorContext::new(ring, k)?;
        let slots: Vec<Monomial> = (0..k).map(|_| random_monomial(&mut rng, &ring, g)).collect();
        let b = TensorMonomial::new(slots, &tctx)?;
        let cb = tensor_capacity(&b, &tctx);
        let eps: Vec<bool> = (2..=k).map(|_| rng.gen_bool(0.5)).collect();
        let j = eps.iter().filter(|&&e| e).count() as u64;
        let need = (1 + j) / 2;
        let stats = EvalStats::new();
        let mut acc = TensorClass::from_monomials([b.clone()], &tctx);
        for (off, &e) in eps.iter().enumerate() {
            if e {
                let zd = zero_divisor(off as u32 + 2, g + 1, &tctx)?;
                acc = tensor_mul(&acc, &zd, &tctx, &stats);
            }
        }
        if acc.is_zero() {
            continue;
        }
        if cb < need {
            report.fail(format!(
                "n={n} g={g} k={k} b={b} ε={eps:?}: capacity {cb} < {need} yet product nonzero"
            ));
            continue;
        }
        let bound = cb - need;
        for alpha in acc.monomials(&tctx) {
            let ca = tensor_capacity(&alpha, &tctx);
            if ca > bound {
                report.fail(format!(
                    "n={n} g={g} k={k} b={b} ε={eps:?}: term {alpha} has capacity {ca} > {bound}"
                ));
                break;
            }
        }
    }
    Ok(report)
}

fn fresh_generator_report(seed: u64, instances: u64) -> Result<PropReport> {
    let mut report = PropReport::new("distinct fresh generators each consume one unit of capacity");
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 3);
    for _ in 0..instances {
        report.instances += 1;
        let n = rng.gen_range(1..=6u32);
        let g = rng.gen_range(1..=5u32);
        let k = rng.gen_range(2..=4u32);
        let j = rng.gen_range(1..=4u32);
        let ring = RingContext::new(n, g + j)?;
        let tctx = TensorContext::new(ring, k)?;
        let b_slots: Vec<Monomial> = (0..k).map(|_| random_monomial(&mut rng, &ring, g)).collect();
        let b = TensorMonomial::new(b_slots.clone(), &tctx)?;
        let cb = tensor_capacity(&b, &tctx);
        // Factors land in random slots; indices must be distinct only within
        // a slot, so cross-slot reuse is deliberately exercised.
        let mut per_slot: Vec<Vec<u32>> = vec![Vec::new(); k as usize];
        for _ in 0..j {
            let r = rng.gen_range(0..k) as usize;
            loop {
                let i = rng.gen_range(g + 1..=g + j);
                if !per_slot[r].contains(&i) {
                    per_slot[r].push(i);
                    break;
                }
            }
        }
        let mut vanished = false;
        let mut out_slots = Vec::with_capacity(k as usize);
        for (r, fresh) in per_slot.iter().enumerate() {
            let mut m = Some(b_slots[r]);
            for &i in fresh {
                let gen = Monomial::generator(i, &ring)?;
                m = m.and_then(|cur| monomial_mul(cur, gen, &ring));
            }
            match m {
                Some(cur) => out_slots.push(cur),
                None => {
                    vanished = true;
                    break;
                }
            }
        }
        if cb < j as u64 && !vanished {
            report.fail(format!(
                "n={n} g={g} k={k} b={b} slots {per_slot:?}: capacity {cb} < {j} yet product nonzero"
            ));
            continue;
        }
        if !vanished {
            let prod = TensorMonomial::new(out_slots, &tctx)?;
            let cap = tensor_capacity(&prod, &tctx);
            if cap + j as u64 > cb {
                report.fail(format!(
                    "n={n} g={g} k={k} b={b} slots {per_slot:?}: capacity {cap} > {cb} − {j}"
                ));
            }
        }
    }
    Ok(report)
}

/// Randomized campaigns for the three capacity laws; each samples
/// `instances` cases from the documented small-parameter region.
pub fn capacity_properties(seed: u64, instances: u64) -> Result<Vec<PropReport>> {
    Ok(vec![
        capacity_sum_report(seed, instances)?,
        fresh_zero_divisor_report(seed, instances)?,
        fresh_generator_report(seed, instances)?,
    ])
}

fn random_composition(rng: &mut ChaCha8Rng, total: u64, parts: u32, cap: u32) -> Vec<u32> {
    let mut rem = total;
    let mut out = Vec::with_capacity(parts as usize);
    for r in 0..parts {
        let left = (parts - r - 1) as u64;
        let lo = rem.saturating_sub(cap as u64 * left);
        let hi = (cap as u64).min(rem);
        let p = rng.gen_range(lo..=hi);
        out.push(p as u32);
        rem -= p;
    }
    debug_assert_eq!(rem, 0);
    out
}

/// In the even-k mid-genus window, any product of an x-power tensor of
/// near-top degree with enough square-free zero-divisor factors must vanish:
/// nothing of degree above `2nk − t` survives. Sampled at fixed cells whose
/// window data are verified on the fly.
pub fn even_window_vanishing(seed: u64, instances: u64) -> Result<PropReport> {
    let mut report = PropReport::new("even-k mid-genus products above the threshold degree vanish");
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 4);
    let cells: [(u32, u32, u32); 3] = [(3, 2, 4), (6, 2, 4), (7, 3, 6)];
    for _ in 0..instances {
        report.instances += 1;
        let (n, g, k) = cells[rng.gen_range(0..cells.len())];
        let gp = gap_p2n(n as u64, k)?;
        assert_eq!(gp % 2, 1, "window requires an odd projective gap");
        let h = (gp + 1) / 2;
        let lambda = (k / 2) as u64;
        let gm = (g - 1) as u64;
        assert!(gm * (lambda - 1) < h && h <= gm * lambda);
        let t = h - gm * (lambda - 1);
        let cell_count = ((k - 1) * (g - 1)) as u64;
        let d_max = (cell_count + t).saturating_sub(gp + 1).min(gp - 1);
        let d = rng.gen_range(0..=d_max);
        let s = rng.gen_range((gp + d + 1 - t)..=cell_count);
        let mut pool: Vec<(u32, u32)> = (2..=k)
            .flat_map(|r| (2..=g).map(move |i| (r, i)))
            .collect();
        for slot in 0..s as usize {
            let pick = rng.gen_range(slot..pool.len());
            pool.swap(slot, pick);
        }
        let deficit = gp + d;
        let m_count = rng.gen_range(1..=4usize);
        let mut comps: BTreeSet<Vec<u32>> = BTreeSet::new();
        while comps.len() < m_count {
            comps.insert(random_composition(&mut rng, deficit, k, 2 * n));
        }
        let ring = RingContext::new(n, g)?;
        let tctx = TensorContext::new(ring, k)?;
        let ms: Vec<TensorMonomial> = comps
            .iter()
            .map(|ps| {
                let slots: Vec<Monomial> = ps
                    .iter()
                    .map(|&p| {
                        Monomial::generator_power(1, 2 * n - p, &ring)
                            .expect("generator index valid")
                            .expect("x1 powers up to 2n survive")
                    })
                    .collect();
                TensorMonomial::new(slots, &tctx)
            })
            .collect::<Result<_>>()?;
        let stats = EvalStats::new();
        let mut acc = TensorClass::from_monomials(ms, &tctx);
        for &(r, i) in &pool[..s as usize] {
            if acc.is_zero() {
                break;
            }
            acc = tensor_mul(&acc, &zero_divisor(r, i, &tctx)?, &tctx, &stats);
        }
        if !acc.is_zero() {
            report.fail(format!(
                "n={n} g={g} k={k} d={d} s={s} m-terms {m_count}: product of degree {} survives",
                (2 * n as u64 * k as u64) - deficit + s
            ));
        }
    }
    Ok(report)
}

#[derive(Clone, Copy, Debug, Serialize)]
pub struct BadZeroDivisorRow {
    pub j: u32,
    pub product_nonzero: bool,
    pub parity_nonzero: bool,
}

/// Truth table for the claim that `∏_{i≤j} (x_{1,i} + x_{2,i})²` vanishes
/// whenever `j ≤ min(g, n)`, computed two ways.
#[derive(Clone, Debug, Serialize)]
pub struct BadZeroDivisorReport {
    pub n: u32,
    pub g: u32,
    pub claimed_zero_through: u32,
    pub rows: Vec<BadZeroDivisorRow>,
    pub routes_agree: bool,
    pub claim_confirmed: bool,
}

/// Each squared factor equals `y⊗1 + 1⊗y` regardless of the generator index,
/// so the j-fold product expands binomially; the brute-force route is
/// cross-checked against that parity expansion.
pub fn bad_zero_divisor_report(n: u32, g: u32) -> Result<BadZeroDivisorReport> {
    let ring = RingContext::new(n, g)?;
    let tctx = TensorContext::new(ring, 2)?;
    let stats = EvalStats::new();
    let cache = PowerCache::new();
    let claimed = n.min(g);
    let mut rows = Vec::new();
    for j in 1..=g {
        let mut assign = ExponentAssignment::zeros(2, g)?;
        for i in 1..=j {
            assign.set(2, i, 2);
        }
        let product = zd_product(&assign, &tctx, &EvalOptions::default(), &stats, Some(&cache))?;
        let product_nonzero = !product.is_zero();
        let s_lo = j.saturating_sub(n);
        let s_hi = j.min(n);
        let parity_nonzero = (s_lo..=s_hi).any(|s| binom_parity(j as u64, s as u64));
        rows.push(BadZeroDivisorRow {
            j,
            product_nonzero,
            parity_nonzero,
        });
    }
    let routes_agree = rows.iter().all(|r| r.product_nonzero == r.parity_nonzero);
    let claim_confirmed = rows
        .iter()
        .filter(|r| r.j <= claimed)
        .all(|r| !r.product_nonzero);
    Ok(BadZeroDivisorReport {
        n,
        g,
        claimed_zero_through: claimed,
        rows,
        routes_agree,
        claim_confirmed,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct LawReport {
    pub law: String,
    pub checked: u64,
    pub violations: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct StructuralReport {
    pub n_max: u64,
    pub g_max: u64,
    pub k_max: u32,
    pub laws: Vec<LawReport>,
    pub violation_samples: Vec<String>,
}

impl StructuralReport {
    pub fn passed(&self) -> bool {
        self.laws.iter().all(|l| l.violations == 0)
    }
}

fn check(
    law: &mut LawReport,
    ok: bool,
    samples: &mut Vec<String>,
    msg: impl FnOnce() -> String,
) {
    law.checked += 1;
    if !ok {
        law.violations += 1;
        if samples.len() < 64 {
            samples.push(msg());
        }
    }
}

/// Closed-form law sweep over the full grid: the degree identity, both
/// monotonicities, the bound chain, gap parity, genus-step predictions, and
/// agreement of the two-fold branches at the crossover genus.
pub fn structural_laws(n_max: u64, g_max: u64, k_max: u32) -> Result<StructuralReport> {
    let new_law = |name: &str| LawReport {
        law: name.to_string(),
        checked: 0,
        violations: 0,
    };
    let mut identity = new_law("zcl + gap = 2nk");
    let mut mono_g = new_law("zcl non-decreasing in g");
    let mut mono_k = new_law("zcl non-decreasing in k");
    let mut chain = new_law("2n(k−1) ≤ zcl ≤ 2nk");
    let mut parity = new_law("positive projective gap has parity opposite to k");
    let mut steps = new_law("genus-step predictions contain the actual difference");
    let mut boundary = new_law("two-fold branches agree at the crossover genus");
    let mut samples = Vec::new();

    for n in 1..=n_max {
        for k in 2..=k_max {
            let gp = gap_p2n(n, k)?;
            if gp > 0 {
                check(
                    &mut parity,
                    (gp % 2 == 1) == (k % 2 == 0),
                    &mut samples,
                    || format!("n={n} k={k}: projective gap {gp} has the parity of k"),
                );
            }
            for g in 1..=g_max {
                let zcl = zcl_value(n, g, k)?;
                let gap = gap_closed(n, g, k)?;
                let top = 2 * n * k as u64;
                check(&mut identity, zcl + gap == top, &mut samples, || {
                    format!("n={n} g={g} k={k}: zcl {zcl} + gap {gap} ≠ {top}")
                });
                check(
                    &mut chain,
                    2 * n * (k as u64 - 1) <= zcl && zcl <= top,
                    &mut samples,
                    || format!("n={n} g={g} k={k}: zcl {zcl} outside [{}, {top}]", 2 * n * (k as u64 - 1)),
                );
                let zcl_next_g = zcl_value(n, g + 1, k)?;
                check(&mut mono_g, zcl_next_g >= zcl, &mut samples, || {
                    format!("n={n} g={g} k={k}: zcl drops to {zcl_next_g} at genus {}", g + 1)
                });
                if k < k_max {
                    let zcl_next_k = zcl_value(n, g, k + 1)?;
                    check(&mut mono_k, zcl_next_k >= zcl, &mut samples, || {
                        format!("n={n} g={g} k={k}: zcl drops to {zcl_next_k} at k={}", k + 1)
                    });
                }
                let step = zcl_diff_predicted(n, g, k)?;
                let diff = zcl_next_g - zcl;
                let ok = match step.prediction {
                    DiffPrediction::Exact(v) => diff == v,
                    DiffPrediction::AtMost(v) => diff <= v,
                };
                check(&mut steps, ok, &mut samples, || {
                    format!(
                        "n={n} g={g} k={k}: case {} predicted {:?}, actual {diff}",
                        step.case_id, step.prediction
                    )
                });
            }
        }
        let e = floor_log2(n);
        let b = 2 * n + 1 - (1u64 << (e + 1));
        if b <= g_max {
            let small = (1u64 << (e + 2)) + b - 2;
            let large = (1u64 << (e + 1)) + 2 * n - 1;
            check(
                &mut boundary,
                small == large && zcl_value(n, b, 2)? == small,
                &mut samples,
                || format!("n={n}: branches give {small} and {large} at g={b}"),
            );
        }
    }

    Ok(StructuralReport {
        n_max,
        g_max,
        k_max,
        laws: vec![identity, mono_g, mono_k, chain, parity, steps, boundary],
        violation_samples: samples,
    })
}
