//! 2-orbifolds, surfaces, Riemann–Hurwitz, and the degree equation
//! `χ(F) = d·χ^orb(B)` for horizontal surfaces in Seifert fibered spaces.

use std::fmt;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::Rational;
use crate::seifert::{prism_fibrations, remove_fiber, FiberChoice};

/// Compact 2-orbifold with cone points. `genus` counts cross-caps when the
/// underlying surface is non-orientable.
///
/// Wire form: `{"orientable":bool,"genus":int,"boundary":int,"cones":[int,...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Orbifold2D {
    pub orientable: bool,
    pub genus: u32,
    pub boundary: u32,
    pub cones: Vec<u64>,
}

impl Orbifold2D {
    pub fn new(orientable: bool, genus: u32, boundary: u32, cones: Vec<u64>) -> Result<Self> {
        let o = Orbifold2D { orientable, genus, boundary, cones }.sorted();
        o.validate()?;
        Ok(o)
    }

    pub fn validate(&self) -> Result<()> {
        if !self.orientable && self.genus == 0 {
            return Err(Error::InvalidOrbifold("non-orientable surface needs at least one cross-cap".into()));
        }
        if let Some(c) = self.cones.iter().find(|&&c| c < 2) {
            return Err(Error::InvalidOrbifold(format!("cone index {c} < 2")));
        }
        Ok(())
    }

    pub(crate) fn sorted(mut self) -> Self {
        self.cones.sort_unstable();
        self
    }

    pub fn disk(cones: Vec<u64>) -> Result<Self> {
        Self::new(true, 0, 1, cones)
    }

    pub fn mobius_band(cones: Vec<u64>) -> Result<Self> {
        Self::new(false, 1, 1, cones)
    }

    pub fn underlying(&self) -> SurfaceData {
        SurfaceData { genus: self.genus, boundary: self.boundary, orientable: self.orientable }
    }

    pub fn chi_orb(&self) -> Rational {
        chi_orb(self)
    }

    /// A short human name for the common cases, e.g. `disk(2,2,3)`.
    pub fn describe(&self) -> String {
        let base = match (self.orientable, self.genus, self.boundary) {
            (true, 0, 0) => "sphere".to_string(),
            (true, 0, 1) => "disk".to_string(),
            (true, 0, 2) => "annulus".to_string(),
            (false, 1, 0) => "projective plane".to_string(),
            (false, 1, 1) => "Mobius band".to_string(),
            (true, g, b) => format!("orientable genus {g} with {b} boundary"),
            (false, g, b) => format!("{g} cross-caps with {b} boundary"),
        };
        if self.cones.is_empty() {
            base
        } else {
            let cones: Vec<String> = self.cones.iter().map(u64::to_string).collect();
            format!("{base}({})", cones.join(","))
        }
    }
}

impl fmt::Display for Orbifold2D {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.describe())
    }
}

/// A compact surface; `genus` counts cross-caps when non-orientable.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SurfaceData {
    pub genus: u32,
    pub boundary: u32,
    pub orientable: bool,
}

impl SurfaceData {
    pub fn new(genus: u32, boundary: u32, orientable: bool) -> Result<Self> {
        if !orientable && genus == 0 {
            return Err(Error::InvalidSurface("non-orientable surface needs at least one cross-cap".into()));
        }
        Ok(SurfaceData { genus, boundary, orientable })
    }

    pub const fn disk() -> Self {
        SurfaceData { genus: 0, boundary: 1, orientable: true }
    }

    pub fn chi(&self) -> i64 {
        let (g, b) = (self.genus as i64, self.boundary as i64);
        if self.orientable {
            2 - 2 * g - b
        } else {
            2 - g - b
        }
    }
}

/// `χ(|B|) − Σ (1 − 1/k)` over cone points.
pub fn chi_orb(b: &Orbifold2D) -> Rational {
    let mut chi = Rational::from(b.underlying().chi());
    for &k in &b.cones {
        chi = chi - Rational::one() + Rational::new(1, k).expect("cone index ≥ 2");
    }
    chi
}

/// The branched cover of `base` of the given degree, where each entry of
/// `branching` lists the local degrees over one branch point.
///
/// `χ(cover) = d·χ(base) − Σ (local degree − 1)`. The boundary count is
/// determined for closed bases, degree 1, and double covers of a base with
/// one boundary circle (connected preimage iff the number of ramified points
/// is odd); other combinations need monodromy data and are rejected.
pub fn riemann_hurwitz_cover(base: &SurfaceData, degree: u32, branching: &[Vec<u32>]) -> Result<SurfaceData> {
    if degree == 0 {
        return Err(Error::InconsistentBranching("degree must be positive".into()));
    }
    if !base.orientable && base.genus == 0 {
        return Err(Error::InvalidSurface("non-orientable surface needs at least one cross-cap".into()));
    }
    let mut ramification = 0i64;
    let mut ramified_points = 0u32;
    for (i, locals) in branching.iter().enumerate() {
        if locals.contains(&0) {
            return Err(Error::InconsistentBranching(format!("branch point {i} has a zero local degree")));
        }
        let total: u64 = locals.iter().map(|&e| e as u64).sum();
        if total != degree as u64 {
            return Err(Error::InconsistentBranching(format!(
                "local degrees over branch point {i} sum to {total}, expected {degree}"
            )));
        }
        let r: i64 = locals.iter().map(|&e| e as i64 - 1).sum();
        ramification += r;
        if r > 0 {
            ramified_points += 1;
        }
    }
    let chi = degree as i64 * base.chi() - ramification;

    if degree == 1 {
        return Ok(*base);
    }
    if !base.orientable {
        return Err(Error::Undetermined("orientability of a cover of a non-orientable base".into()));
    }
    let boundary = match (base.boundary, degree) {
        (0, _) => 0,
        (1, 2) => {
            if ramified_points % 2 == 1 {
                1
            } else {
                2
            }
        }
        _ => {
            return Err(Error::Undetermined(format!(
                "boundary of a degree-{degree} cover of a base with {} boundary circles",
                base.boundary
            )))
        }
    };
    let twice_genus = 2 - boundary as i64 - chi;
    if twice_genus < 0 || twice_genus % 2 != 0 {
        return Err(Error::InconsistentBranching(format!(
            "chi = {chi} with {boundary} boundary circles is not an orientable surface"
        )));
    }
    Ok(SurfaceData { genus: (twice_genus / 2) as u32, boundary, orientable: true })
}

/// The surface `F_{2,1}`: double cover of the disk branched over five points.
pub fn five_point_disk_cover() -> SurfaceData {
    riemann_hurwitz_cover(&SurfaceData::disk(), 2, &vec![vec![2]; 5]).expect("valid branching data")
}

/// Degrees `d` solving `χ(F) = d·χ^orb(B)`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeSolutions {
    /// Solutions where every cone index also divides `d`.
    pub degrees: Vec<u64>,
    /// Solutions of the Euler characteristic equation alone.
    pub chi_only_degrees: Vec<u64>,
}

fn positive_integer(x: &Rational) -> Option<u64> {
    if !x.is_positive() {
        return None;
    }
    x.to_integer().and_then(|n: BigInt| n.to_u64())
}

/// Solves the degree equation over an orientable base. At most one `d` can
/// solve it when `χ^orb ≠ 0`, so this is an exact division, not a search.
pub fn solve_horizontal(f: &SurfaceData, b: &Orbifold2D) -> Result<DegreeSolutions> {
    b.validate()?;
    if !b.orientable {
        return Err(Error::ExpectedOrientable);
    }
    let chi_b = chi_orb(b);
    let chi_f = Rational::from(f.chi());
    if chi_b.is_zero() {
        return if chi_f.is_zero() { Err(Error::InfiniteSolutions) } else { Ok(DegreeSolutions::default()) };
    }
    let d = chi_f.checked_div(&chi_b)?;
    let chi_only: Vec<u64> = positive_integer(&d).into_iter().collect();
    let degrees = chi_only.iter().copied().filter(|d| b.cones.iter().all(|k| d % k == 0)).collect();
    Ok(DegreeSolutions { degrees, chi_only_degrees: chi_only })
}

pub fn horizontal_degree_solutions(f: &SurfaceData, b: &Orbifold2D) -> Result<Vec<u64>> {
    Ok(solve_horizontal(f, b)?.degrees)
}

pub fn orientation_double_cover(b: &Orbifold2D) -> Result<Orbifold2D> {
    b.validate()?;
    if b.orientable {
        return Err(Error::ExpectedNonOrientable);
    }
    // χ doubles: 2(2 − k − b) = 2 − 2g' − 2b  ⇒  g' = k − 1
    let cones = b.cones.iter().flat_map(|&c| [c, c]).collect();
    Ok(Orbifold2D { orientable: true, genus: b.genus - 1, boundary: 2 * b.boundary, cones }.sorted())
}

/// Degrees over a non-orientable base for an orientable surface. The cover
/// factors through the orientation double cover, so `d = 2d'` where `d'`
/// solves the equation (with cone divisibility) upstairs.
pub fn solve_nonorientable(f: &SurfaceData, b: &Orbifold2D) -> Result<DegreeSolutions> {
    if !f.orientable {
        return Err(Error::InvalidSurface("horizontal surface must be orientable here".into()));
    }
    let upstairs = orientation_double_cover(b)?;
    let s = solve_horizontal(f, &upstairs)?;
    Ok(DegreeSolutions {
        degrees: s.degrees.iter().map(|d| 2 * d).collect(),
        chi_only_degrees: s.chi_only_degrees.iter().map(|d| 2 * d).collect(),
    })
}

pub fn nonorientable_base_solutions(f: &SurfaceData, b: &Orbifold2D) -> Result<Vec<u64>> {
    Ok(solve_nonorientable(f, b)?.degrees)
}

/// Dispatches on the orientability of the base.
pub fn solve_any(f: &SurfaceData, b: &Orbifold2D) -> Result<DegreeSolutions> {
    if b.orientable {
        solve_horizontal(f, b)
    } else {
        solve_nonorientable(f, b)
    }
}

/// One of the five bases obtained by drilling a fiber out of `M_n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseResult {
    pub case: u8,
    pub orbifold: Orbifold2D,
    pub chi_orb: Rational,
    pub degrees: Vec<u64>,
    pub chi_only_degrees: Vec<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseAnalysis {
    pub n: i64,
    pub cases: Vec<CaseResult>,
    /// Some case admits a horizontal surface of the given type.
    pub admits_horizontal: bool,
}

impl CaseAnalysis {
    /// `(case, d)` pairs with a nonempty solution set.
    pub fn solutions(&self) -> Vec<(u8, u64)> {
        self.cases.iter().flat_map(|c| c.degrees.iter().map(move |&d| (c.case, d))).collect()
    }
}

/// Runs the degree equation for `fiber_surface` over the five bases:
///
/// 1. `On` fibration, exceptional fiber removed (Möbius band);
/// 2. `On` fibration, regular fiber removed (Möbius band, cone 2);
/// 3. `Oo` fibration, regular fiber removed (disk, cones 2, 2, |4n−1|);
/// 4. `Oo` fibration, the |4n−1| fiber removed (disk, cones 2, 2);
/// 5. `Oo` fibration, an index-2 fiber removed (disk, cones 2, |4n−1|).
pub fn prism_case_analysis(n: i64, fiber_surface: &SurfaceData) -> Result<CaseAnalysis> {
    let (oo, on) = prism_fibrations(n)?;
    let index = (4 * n - 1).unsigned_abs() as i64;
    let position = |alpha: i64| {
        oo.fibers.iter().position(|f| f.alpha == alpha).expect("prism fibration has this fiber")
    };
    let bases = [
        remove_fiber(&on, FiberChoice::Exceptional(0))?,
        remove_fiber(&on, FiberChoice::Regular)?,
        remove_fiber(&oo, FiberChoice::Regular)?,
        remove_fiber(&oo, FiberChoice::Exceptional(position(index)))?,
        remove_fiber(&oo, FiberChoice::Exceptional(position(2)))?,
    ];
    let mut cases = Vec::with_capacity(5);
    for (i, orbifold) in bases.into_iter().enumerate() {
        let sol = solve_any(fiber_surface, &orbifold)?;
        cases.push(CaseResult {
            case: i as u8 + 1,
            chi_orb: chi_orb(&orbifold),
            orbifold,
            degrees: sol.degrees,
            chi_only_degrees: sol.chi_only_degrees,
        });
    }
    let admits_horizontal = cases.iter().any(|c| !c.degrees.is_empty());
    Ok(CaseAnalysis { n, cases, admits_horizontal })
}
