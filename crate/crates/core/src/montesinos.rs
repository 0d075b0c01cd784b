//! Montesinos links as `(genus, tangle list)` data and their double branched
//! covers.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::seifert::{BaseClass, Fiber, SeifertSymbol};

/// Wire form: `{"genus":int,"tangles":[[beta,alpha],...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MontesinosLink {
    pub genus: u32,
    /// Rational tangles `β/α`, stored like Seifert fiber terms.
    pub tangles: Vec<Fiber>,
}

impl MontesinosLink {
    pub fn new(genus: u32, tangles: &[(i64, i64)]) -> Result<Self> {
        let l = MontesinosLink { genus, tangles: tangles.iter().map(|&(b, a)| Fiber::new(b, a)).collect() };
        l.validate()?;
        Ok(l)
    }

    pub fn validate(&self) -> Result<()> {
        if self.tangles.is_empty() {
            return Err(Error::InvalidLink("at least one tangle is required".into()));
        }
        if let Some(t) = self.tangles.iter().find(|t| t.alpha < 1) {
            return Err(Error::InvalidLink(format!("tangle {}/{} has alpha < 1", t.beta, t.alpha)));
        }
        Ok(())
    }
}

/// Genus 0 gives `(Oo,0; β₁/α₁, …)`, genus `g > 0` gives `(On,g; β₁/α₁, …)`,
/// returned in normal form.
pub fn double_branched_cover(l: &MontesinosLink) -> Result<SeifertSymbol> {
    l.validate()?;
    let class = if l.genus == 0 { BaseClass::Oo } else { BaseClass::On };
    SeifertSymbol::new(class, l.genus, l.tangles.clone())?.normalize()
}

/// The two Montesinos presentations of `L_n`:
/// `(0; 1/2, −1/2, −2/(4n−1))` and `(1; (4n−1)/2)`.
pub fn ln_link(n: i64) -> (MontesinosLink, MontesinosLink) {
    let m = 4 * n - 1;
    let third = if m > 0 { (-2, m) } else { (2, -m) };
    let planar = MontesinosLink::new(0, &[(1, 2), (-1, 2), third]).expect("valid tangles");
    let crosscap = MontesinosLink::new(1, &[(m, 2)]).expect("valid tangles");
    (planar, crosscap)
}

/// Twist knot with `2n` half-twists next to a clasp, as the tangle sum
/// `1/2 + 2n`. Only used to feed the lens-space test.
pub fn twist_knot(n: i64) -> MontesinosLink {
    MontesinosLink::new(0, &[(1, 2), (2 * n, 1)]).expect("valid tangles")
}

/// Lens spaces (including `S³` and `S²×S¹`) among Seifert symbols: base
/// sphere with at most two exceptional fibers. Normalizes first.
pub fn is_lens_space_symbol(s: &SeifertSymbol) -> Result<bool> {
    let s = s.normalize()?;
    Ok(s.class == BaseClass::Oo && s.genus == 0 && s.exceptional().count() <= 2)
}
