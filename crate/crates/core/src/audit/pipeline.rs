use std::ops::RangeInclusive;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::volume::{complexity, degree_bound_for_budget, round_volume, CoverCertificate, ONE_CUSP_FLOOR, V0};
use crate::error::{Error, Result};
use crate::montesinos::{double_branched_cover, is_lens_space_symbol, ln_link, twist_knot};
use crate::orbifold::{five_point_disk_cover, prism_case_analysis, CaseAnalysis};
use crate::slopes::{enumerate_constrained_slopes, Slope};

/// Slope pairs `(f, c)` fed to the constrained enumeration, with `k1 = 1`,
/// `k2 = 2`.
pub const DEMO_PAIRS: [((i64, i64), (i64, i64)); 3] = [((1, 0), (0, 1)), ((1, 0), (1, 2)), ((3, 2), (5, 3))];

/// Steps of the argument that are not effective and are left as conditions.
pub const NON_EFFECTIVE_STEPS: [&str; 3] =
    ["pseudo-Anosov fillings", "hyperbolic V1 case", "reducible Seifert slope count"];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Excluded,
    CandidateExceptional,
    Conditional,
}

impl std::fmt::Display for Status {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Status::Excluded => "excluded",
            Status::CandidateExceptional => "candidate-exceptional",
            Status::Conditional => "conditional",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SlopeDemo {
    pub pairs: Vec<(Slope, Slope)>,
    pub counts: Vec<usize>,
}

/// A horizontal-surface solution surviving the case analysis.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Obstruction {
    pub case: u8,
    pub degree: u64,
}

/// Verdict for one `n`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PrismEntry {
    pub n: i64,
    pub upper_bound: String,
    pub upper_bound_value: f64,
    pub twist_knot_excluded: bool,
    pub case_analysis: Option<CaseAnalysis>,
    pub slope_demo: SlopeDemo,
    pub max_degree: u64,
    pub status: Status,
    pub candidates: Vec<Obstruction>,
    pub notes: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PrismReport {
    pub entries: Vec<PrismEntry>,
    /// `n` values not excluded by any computable step.
    pub candidate_exceptional: Vec<i64>,
    /// Degenerate parameters (`|4n − 1| < 3`).
    pub excluded_parameters: Vec<i64>,
}

fn slope_demo() -> Result<SlopeDemo> {
    let mut pairs = Vec::new();
    let mut counts = Vec::new();
    for ((fp, fq), (cp, cq)) in DEMO_PAIRS {
        let (f, c) = (Slope::new(fp, fq)?, Slope::new(cp, cq)?);
        counts.push(enumerate_constrained_slopes(&f, &c, 1, 2)?.len());
        pairs.push((f, c));
    }
    Ok(SlopeDemo { pairs, counts })
}

/// `M_n` is not a lens space, while every twist knot has a lens space as
/// double branched cover, so `L_n` cannot be replaced by a twist knot.
fn twist_knot_excluded(n: i64) -> Result<bool> {
    let (planar, _) = ln_link(n);
    let m_n_is_lens = is_lens_space_symbol(&double_branched_cover(&planar)?)?;
    let twist_is_lens = is_lens_space_symbol(&double_branched_cover(&twist_knot(n))?)?;
    Ok(twist_is_lens && !m_n_is_lens)
}

fn entry(n: i64, demo: &SlopeDemo, max_degree: u64) -> Result<PrismEntry> {
    let upper = CoverCertificate::new(2, V0.value, format!("L_{n}"))?;
    let mut e = PrismEntry {
        n,
        upper_bound: "2*V0".into(),
        upper_bound_value: round_volume(complexity(&upper)),
        twist_knot_excluded: false,
        case_analysis: None,
        slope_demo: demo.clone(),
        max_degree,
        status: Status::Excluded,
        candidates: Vec::new(),
        notes: Vec::new(),
    };
    if (4 * n - 1).abs() < 3 {
        e.notes.push(format!("degenerate parameter: |4n-1| = {} < 3", (4 * n - 1).abs()));
        return Ok(e);
    }
    e.twist_knot_excluded = twist_knot_excluded(n)?;
    let analysis = prism_case_analysis(n, &five_point_disk_cover())?;
    e.candidates = analysis.solutions().into_iter().map(|(case, degree)| Obstruction { case, degree }).collect();
    e.case_analysis = Some(analysis);
    if e.candidates.is_empty() {
        e.status = Status::Conditional;
        e.notes.push(format!("lv = 2V0 conditional on: {}", NON_EFFECTIVE_STEPS.join(", ")));
    } else {
        e.status = Status::CandidateExceptional;
        for c in &e.candidates {
            e.notes.push(format!("case {} admits a horizontal F_2,1 of degree {}", c.case, c.degree));
        }
        e.notes.push(format!("unresolved without: {}", NON_EFFECTIVE_STEPS.join(", ")));
    }
    Ok(e)
}

/// Runs every computable step for each `n` in the range, in parallel;
/// entries are ordered by `n`.
pub fn prism_verify(range: RangeInclusive<i64>) -> Result<PrismReport> {
    let demo = slope_demo()?;
    let max_degree = degree_bound_for_budget(2.0 * V0.value, ONE_CUSP_FLOOR.value)?;
    let ns: Vec<i64> = range.collect();
    let entries = ns.par_iter().map(|&n| entry(n, &demo, max_degree)).collect::<Result<Vec<_>>>()?;
    let pick = |s: Status| entries.iter().filter(|e| e.status == s).map(|e| e.n).collect::<Vec<_>>();
    let report = PrismReport {
        candidate_exceptional: pick(Status::CandidateExceptional),
        excluded_parameters: pick(Status::Excluded),
        entries,
    };
    debug_assert!(report.entries.windows(2).all(|w| w[0].n < w[1].n));
    Ok(report)
}

/// `from..=to`, allowing the empty range `to = from − 1`.
pub fn range_from_bounds(from: i64, to: i64) -> Result<RangeInclusive<i64>> {
    if from > to + 1 {
        return Err(Error::Shape(format!("empty range needs from <= to + 1, got {from}..{to}")));
    }
    Ok(from..=to)
}
