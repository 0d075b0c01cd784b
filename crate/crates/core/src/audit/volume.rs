use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A named hyperbolic volume.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct VolumeConstant {
    pub name: &'static str,
    pub value: f64,
    pub provenance: &'static str,
}

/// Volume of the Whitehead link exterior, `4·G` with `G` Catalan's constant.
pub const V0: VolumeConstant = VolumeConstant {
    name: "V0",
    value: 3.663_862_376_708_876,
    provenance: "volume of the Whitehead link exterior, 3.66...; digits beyond 3.66 are 4*Catalan, \
                 checked against 4*sum((-1)^k/(2k+1)^2) by catalan_by_series",
};

/// Safe lower bound for the volume of a one-cusped hyperbolic knot complement.
pub const ONE_CUSP_FLOOR: VolumeConstant = VolumeConstant {
    name: "one-cusp floor",
    value: 2.0,
    provenance: "lower bound for one-cusped hyperbolic volume used in the degree bound",
};

/// Figure-eight knot complement volume, `6·Λ(π/3)`.
pub const FIGURE_EIGHT: VolumeConstant = VolumeConstant {
    name: "figure-eight",
    value: 2.029_883_212_819_307,
    provenance: "two regular ideal tetrahedra, 6*Lobachevsky(pi/3), checked by quadrature in lobachevsky",
};

/// Catalan's constant from the alternating series `Σ (−1)^k/(2k+1)²`,
/// summed from the tail and averaged over the last two partial sums.
pub fn catalan_by_series(terms: usize) -> f64 {
    let term = |k: usize| {
        let s = if k % 2 == 0 { 1.0 } else { -1.0 };
        s / ((2 * k + 1) as f64).powi(2)
    };
    let tail: f64 = (0..terms).rev().map(term).sum();
    // average of S_{N-1} and S_N cancels the leading error term
    tail - term(terms - 1) / 2.0
}

/// Lobachevsky function `Λ(θ) = −∫₀^θ log|2 sin t| dt` for `0 < θ < π`.
///
/// The `log(2t)` singularity is integrated in closed form and the smooth
/// remainder `log(sin t / t)` by composite Simpson.
pub fn lobachevsky(theta: f64) -> f64 {
    let singular = theta * (2.0 * theta).ln() - theta;
    let g = |t: f64| if t == 0.0 { 0.0 } else { (t.sin() / t).ln() };
    let n = 4000;
    let h = theta / n as f64;
    let mut acc = g(0.0) + g(theta);
    for i in 1..n {
        let w = if i % 2 == 1 { 4.0 } else { 2.0 };
        acc += w * g(i as f64 * h);
    }
    -(singular + acc * h / 3.0)
}

/// Degree `p` over a branch link with complement volume `vol`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CoverCertificate {
    pub degree: u32,
    pub branch_volume: f64,
    pub label: String,
}

impl CoverCertificate {
    pub fn new(degree: u32, branch_volume: f64, label: impl Into<String>) -> Result<Self> {
        if degree == 0 {
            return Err(Error::InvalidCertificate("degree must be positive".into()));
        }
        if !(branch_volume.is_finite() && branch_volume > 0.0) {
            return Err(Error::InvalidCertificate(format!("branch volume {branch_volume} is not positive")));
        }
        Ok(CoverCertificate { degree, branch_volume, label: label.into() })
    }
}

/// `p · vol`
pub fn complexity(c: &CoverCertificate) -> f64 {
    c.degree as f64 * c.branch_volume
}

/// Largest integer `p ≥ 0` with `p · volume_floor < budget`.
pub fn degree_bound_for_budget(budget: f64, volume_floor: f64) -> Result<u64> {
    if !(volume_floor.is_finite() && volume_floor > 0.0) {
        return Err(Error::InvalidCertificate(format!("volume floor {volume_floor} is not positive")));
    }
    if !budget.is_finite() || budget <= 0.0 {
        return Ok(0);
    }
    let mut p = (budget / volume_floor).floor() as u64;
    while p > 0 && p as f64 * volume_floor >= budget {
        p -= 1;
    }
    while (p + 1) as f64 * volume_floor < budget {
        p += 1;
    }
    Ok(p)
}

/// Twelve digits after the decimal point.
pub fn format_volume(v: f64) -> String {
    format!("{v:.12}")
}

/// `v` rounded to twelve decimal places, for JSON output.
pub fn round_volume(v: f64) -> f64 {
    format_volume(v).parse().expect("formatted float parses")
}
