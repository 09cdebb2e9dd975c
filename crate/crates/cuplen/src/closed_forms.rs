//! Closed-form zero-divisor cup lengths and gaps for symmetric products of
//! non-orientable surfaces.
//!
//! Every value is returned together with a [`CaseTag`] naming the formula
//! branch that produced it and the evaluated window thresholds, so each
//! number can be audited against the case hypotheses.

use std::fmt;

use serde::Serialize;

use crate::combinatorics::{floor_log2, gap_p2n, gap_p2n_k2};
use crate::error::{Error, Result};

/// Formula branch for `zcl_k(SPⁿ(N_g))`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum CaseLabel {
    #[serde(rename = "K2_SMALL_G")]
    K2SmallG,
    #[serde(rename = "K2_LARGE_G")]
    K2LargeG,
    #[serde(rename = "A_ODD")]
    AOdd,
    #[serde(rename = "A_EVEN_SMALL_G")]
    AEvenSmallG,
    #[serde(rename = "B_EVEN_MID_G")]
    BEvenMidG,
    #[serde(rename = "C_EVEN_LARGE_G")]
    CEvenLargeG,
}

impl fmt::Display for CaseLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            CaseLabel::K2SmallG => "K2_SMALL_G",
            CaseLabel::K2LargeG => "K2_LARGE_G",
            CaseLabel::AOdd => "A_ODD",
            CaseLabel::AEvenSmallG => "A_EVEN_SMALL_G",
            CaseLabel::BEvenMidG => "B_EVEN_MID_G",
            CaseLabel::CEvenLargeG => "C_EVEN_LARGE_G",
        };
        f.write_str(s)
    }
}

/// Which branch applies, with the comparison quantities that decided it.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct CaseTag {
    pub label: CaseLabel,
    /// `gap_k(P^{2n})` of the ambient projective-space power.
    pub gap_p: u64,
    /// `⌊gap_k(P^{2n})/k⌋ + 1`, the last genus of the even-k small window.
    pub small_g_max: Option<u64>,
    /// `⌊gap_k(P^{2n})/(k−2)⌋ + 1`, the last genus of the even-k mid window.
    pub mid_g_max: Option<u64>,
    /// `2n − 2^{e+1} + 1`, the two-fold branch boundary.
    pub k2_boundary: Option<u64>,
}

fn validate(n: u64, g: u64, k: u32) -> Result<()> {
    if n == 0 {
        return Err(Error::PositiveRequired { what: "n" });
    }
    if g == 0 {
        return Err(Error::PositiveRequired { what: "g" });
    }
    if k < 2 {
        return Err(Error::InvalidK { k });
    }
    if n >= 1 << 40 || k as u64 >= 1 << 20 {
        return Err(Error::TooLarge {
            what: format!("parameters n = {n}, k = {k} exceed the supported range"),
        });
    }
    Ok(())
}

fn two_nk(n: u64, k: u32) -> u64 {
    2 * n * k as u64
}

/// Which formula window `(n, g, k)` falls into.
pub fn classify(n: u64, g: u64, k: u32) -> Result<CaseTag> {
    validate(n, g, k)?;
    if k == 2 {
        let e = floor_log2(n);
        let boundary = 2 * n + 1 - (1 << (e + 1));
        let label = if g <= boundary {
            CaseLabel::K2SmallG
        } else {
            CaseLabel::K2LargeG
        };
        return Ok(CaseTag {
            label,
            gap_p: gap_p2n_k2(n),
            small_g_max: None,
            mid_g_max: None,
            k2_boundary: Some(boundary),
        });
    }
    let gap_p = gap_p2n(n, k)?;
    if k % 2 == 1 {
        return Ok(CaseTag {
            label: CaseLabel::AOdd,
            gap_p,
            small_g_max: None,
            mid_g_max: None,
            k2_boundary: None,
        });
    }
    let small_g_max = gap_p / k as u64 + 1;
    let mid_g_max = gap_p / (k as u64 - 2) + 1;
    let label = if g <= small_g_max {
        CaseLabel::AEvenSmallG
    } else if g <= mid_g_max {
        CaseLabel::BEvenMidG
    } else {
        CaseLabel::CEvenLargeG
    };
    Ok(CaseTag {
        label,
        gap_p,
        small_g_max: Some(small_g_max),
        mid_g_max: Some(mid_g_max),
        k2_boundary: None,
    })
}

/// The k-fold zero-divisor cup length of `SPⁿ(N_g)`, with its case tag.
pub fn zcl_closed(n: u64, g: u64, k: u32) -> Result<(u64, CaseTag)> {
    let tag = classify(n, g, k)?;
    let top = two_nk(n, k);
    let value = match tag.label {
        CaseLabel::K2SmallG => {
            let e = floor_log2(n);
            let small = (1 << (e + 2)) + g - 2;
            if g == tag.k2_boundary.unwrap() {
                let large = (1 << (e + 1)) + 2 * n - 1;
                assert_eq!(small, large, "branch values must agree at the boundary");
            }
            small
        }
        CaseLabel::K2LargeG => {
            let e = floor_log2(n);
            (1 << (e + 1)) + 2 * n - 1
        }
        CaseLabel::AOdd | CaseLabel::AEvenSmallG => {
            top - tag.gap_p.saturating_sub((k as u64 - 1) * (g - 1))
        }
        CaseLabel::BEvenMidG => {
            assert!(
                tag.gap_p % 2 == 1,
                "the mid-window gap of the projective-space power must be odd"
            );
            let h = (tag.gap_p + 1) / 2;
            let lambda = k as u64 / 2;
            let t = h - (lambda - 1) * (g - 1);
            assert!(
                (1..=tag.gap_p).contains(&t),
                "mid-window gap out of range: t = {t}, gap_p = {}",
                tag.gap_p
            );
            top - t
        }
        CaseLabel::CEvenLargeG => top,
    };
    Ok((value, tag))
}

/// [`zcl_closed`] without the tag.
pub fn zcl_value(n: u64, g: u64, k: u32) -> Result<u64> {
    Ok(zcl_closed(n, g, k)?.0)
}

/// The k-fold zero-divisors gap of `SPⁿ(N_g)`: `2nk − zcl`, cross-checked
/// against the directly stated gap expressions for the same case.
pub fn gap_closed(n: u64, g: u64, k: u32) -> Result<u64> {
    let (value, tag) = zcl_closed(n, g, k)?;
    let gap = two_nk(n, k) - value;
    let direct = match tag.label {
        CaseLabel::K2SmallG => gap_p2n_k2(n) - (g - 1),
        CaseLabel::K2LargeG => tag.k2_boundary.unwrap(),
        CaseLabel::AOdd | CaseLabel::AEvenSmallG => {
            tag.gap_p.saturating_sub((k as u64 - 1) * (g - 1))
        }
        CaseLabel::BEvenMidG => (tag.gap_p + 1) / 2 - (k as u64 / 2 - 1) * (g - 1),
        CaseLabel::CEvenLargeG => 0,
    };
    assert_eq!(gap, direct, "gap routes disagree at n={n}, g={g}, k={k}");
    Ok(gap)
}

/// Smallest genus at which `zcl_k(SPⁿ(N_g))` reaches `2nk` (it then stays
/// there). Requires `k ≥ 3`; the two-fold cup length never reaches `4n`.
pub fn stabilization_genus(n: u64, k: u32) -> Result<u64> {
    validate(n, 1, k)?;
    if k < 3 {
        return Err(Error::InvalidK { k });
    }
    let gap_p = gap_p2n(n, k)?;
    if gap_p == 0 {
        return Ok(1);
    }
    if k % 2 == 1 {
        Ok(gap_p.div_ceil(k as u64 - 1) + 1)
    } else {
        Ok(gap_p / (k as u64 - 2) + 2)
    }
}

/// Predicted change of `zcl` when the genus grows by one.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum DiffPrediction {
    Exact(u64),
    AtMost(u64),
}

/// A genus-increment prediction with the hypothesis window that produced it.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct GenusStep {
    pub case_id: u32,
    pub prediction: DiffPrediction,
}

/// Predicts `zcl_k(SPⁿ(N_{g+1})) − zcl_k(SPⁿ(N_g))` from the window data
/// alone. Six hypothesis windows cover every `(n, g, k)`; all but part of
/// the odd-k window pin the difference down exactly.
pub fn zcl_diff_predicted(n: u64, g: u64, k: u32) -> Result<GenusStep> {
    validate(n, g, k)?;
    if k == 2 {
        let e = floor_log2(n);
        let exact_window = 2 * n - (1 << (e + 1));
        let d = if g <= exact_window { 1 } else { 0 };
        return Ok(GenusStep {
            case_id: 1,
            prediction: DiffPrediction::Exact(d),
        });
    }
    let gap_p = gap_p2n(n, k)?;
    if k % 2 == 1 {
        let prediction = if zcl_value(n, g + 1, k)? != two_nk(n, k) {
            DiffPrediction::Exact(k as u64 - 1)
        } else if (g - 1) * (k as u64 - 1) >= gap_p {
            DiffPrediction::Exact(0)
        } else {
            DiffPrediction::AtMost(k as u64 - 1)
        };
        return Ok(GenusStep {
            case_id: 2,
            prediction,
        });
    }
    let q = gap_p / k as u64;
    if g <= q {
        return Ok(GenusStep {
            case_id: 3,
            prediction: DiffPrediction::Exact(k as u64 - 1),
        });
    }
    if g == q + 1 {
        let r = gap_p % k as u64;
        let d = if k as u64 <= 2 * g + r {
            assert!(r % 2 == 1, "the boundary residue must be odd here");
            (k as u64 + r - 3) / 2
        } else {
            g + r - 1
        };
        return Ok(GenusStep {
            case_id: 4,
            prediction: DiffPrediction::Exact(d),
        });
    }
    if g <= gap_p / (k as u64 - 2) {
        return Ok(GenusStep {
            case_id: 5,
            prediction: DiffPrediction::Exact(k as u64 / 2 - 1),
        });
    }
    Ok(GenusStep {
        case_id: 6,
        prediction: DiffPrediction::Exact(gap_closed(n, g, k)?),
    })
}
