//! Slopes on a torus and their intersection numbers.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A primitive pair `(p, q)` up to overall sign, stored with `q > 0` or as
/// `(1, 0)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Slope {
    p: i64,
    q: i64,
}

impl Slope {
    pub fn new(p: i64, q: i64) -> Result<Self> {
        if p == 0 && q == 0 {
            return Err(Error::InvalidSlope { p, q, reason: "zero vector" });
        }
        if p.gcd(&q) != 1 {
            return Err(Error::InvalidSlope { p, q, reason: "not primitive" });
        }
        let (p, q) = if q < 0 || (q == 0 && p < 0) { (-p, -q) } else { (p, q) };
        Ok(Slope { p, q })
    }

    pub fn p(&self) -> i64 {
        self.p
    }

    pub fn q(&self) -> i64 {
        self.q
    }

    /// `|a.p·b.q − a.q·b.p|`
    pub fn delta(&self, other: &Slope) -> u64 {
        let d = self.p as i128 * other.q as i128 - self.q as i128 * other.p as i128;
        u64::try_from(d.unsigned_abs()).expect("intersection number overflows u64")
    }

    /// Image under the integer matrix `[[m00, m01], [m10, m11]]`, which must
    /// be unimodular.
    pub fn transform(&self, m: [[i64; 2]; 2]) -> Result<Slope> {
        Slope::new(m[0][0] * self.p + m[0][1] * self.q, m[1][0] * self.p + m[1][1] * self.q)
    }
}

/// Δ(a, b)
pub fn delta(a: &Slope, b: &Slope) -> u64 {
    a.delta(b)
}

/// A unimodular matrix sending `f` to `(1, 0)`, with its inverse.
fn basis_to_first_axis(f: &Slope) -> ([[i64; 2]; 2], [[i64; 2]; 2]) {
    let e = f.p.extended_gcd(&f.q);
    let (x, y) = if e.gcd < 0 { (-e.x, -e.y) } else { (e.x, e.y) };
    let forward = [[x, y], [-f.q, f.p]];
    let inverse = [[f.p, -y], [f.q, x]];
    (forward, inverse)
}

/// Every slope `α` with `Δ(f, α) = k1` and `Δ(c, α) ≤ k2`, sorted by `(p, q)`.
///
/// The list is complete: after a unimodular change of basis taking `f` to
/// `(1, 0)` the first condition pins the second coordinate to `k1`, and the
/// second becomes a bounded interval for the first coordinate.
pub fn enumerate_constrained_slopes(f: &Slope, c: &Slope, k1: u64, k2: u64) -> Result<Vec<Slope>> {
    if f == c {
        return Err(Error::DegenerateSlopes(f.to_string()));
    }
    if k1 == 0 {
        return Err(Error::InvalidSlope { p: 0, q: 0, reason: "k1 must be positive" });
    }
    let (forward, inverse) = basis_to_first_axis(f);
    let c2 = c.transform(forward)?;
    debug_assert_eq!(f.transform(forward)?, Slope::new(1, 0)?);

    // α' = (t, k1): Δ(c', α') = |c'.p·k1 − c'.q·t| ≤ k2, and c'.q ≠ 0 because c ≠ f.
    let (cp, cq) = (c2.p as i128, c2.q as i128);
    let k1i = k1 as i128;
    let center = cp * k1i;
    let lo = Integer::div_ceil(&(center - k2 as i128), &cq);
    let hi = Integer::div_floor(&(center + k2 as i128), &cq);

    let mut out = Vec::new();
    for t in lo..=hi {
        if t.gcd(&k1i) != 1 {
            continue;
        }
        let t = i64::try_from(t).map_err(|_| Error::InvalidSlope { p: 0, q: 0, reason: "coordinate overflow" })?;
        out.push(Slope::new(t, k1 as i64)?.transform(inverse)?);
    }
    out.sort_unstable();
    out.dedup();

    assert!(
        out.len() as u64 <= 2 * (2 * k2 + 1),
        "slope enumeration exceeded its bound: {} > {}",
        out.len(),
        2 * (2 * k2 + 1)
    );
    debug_assert!(out.iter().all(|a| f.delta(a) == k1 && c.delta(a) <= k2));
    Ok(out)
}

impl fmt::Display for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", self.p, self.q)
    }
}

impl FromStr for Slope {
    type Err = Error;

    /// Parses `p,q`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = Error::InvalidSlope { p: 0, q: 0, reason: "expected two comma-separated integers" };
        let (p, q) = s.split_once(',').ok_or(bad.clone())?;
        let p = p.trim().parse().map_err(|_| bad.clone())?;
        let q = q.trim().parse().map_err(|_| bad)?;
        Slope::new(p, q)
    }
}

impl Serialize for Slope {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        [self.p, self.q].serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Slope {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let [p, q] = <[i64; 2]>::deserialize(deserializer)?;
        Slope::new(p, q).map_err(serde::de::Error::custom)
    }
}
