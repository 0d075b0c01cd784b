//! Braid words and invariants of their closures.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A word in the Artin generators `σ₁ … σ_{n−1}`; letter `i` is `σᵢ`,
/// letter `−i` is `σᵢ⁻¹`.
///
/// Wire form: `{"strands":int,"letters":[±int,...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BraidWord {
    pub strands: usize,
    pub letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i32>) -> Result<Self> {
        let w = BraidWord { strands, letters };
        w.validate()?;
        Ok(w)
    }

    pub fn identity(strands: usize) -> Result<Self> {
        Self::new(strands, Vec::new())
    }

    pub fn validate(&self) -> Result<()> {
        if self.strands < 2 {
            return Err(Error::InvalidBraid(format!("{} strands, need at least 2", self.strands)));
        }
        if let Some(&l) = self.letters.iter().find(|&&l| l == 0 || l.unsigned_abs() as usize >= self.strands) {
            return Err(Error::InvalidBraid(format!("letter {l} on {} strands", self.strands)));
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_positive(&self) -> bool {
        self.letters.iter().all(|&l| l > 0)
    }

    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|&l| l.signum() as i64).sum()
    }

    /// Underlying permutation: `perm[i]` is where the strand starting at
    /// position `i` ends.
    pub fn permutation(&self) -> Vec<usize> {
        let mut at: Vec<usize> = (0..self.strands).collect();
        for &l in &self.letters {
            let i = l.unsigned_abs() as usize - 1;
            at.swap(i, i + 1);
        }
        // at[pos] = starting strand now at pos
        let mut perm = vec![0; self.strands];
        for (pos, &start) in at.iter().enumerate() {
            perm[start] = pos;
        }
        perm
    }

    fn push_block(&mut self, block: &[i32], power: i64) {
        for _ in 0..power.unsigned_abs() {
            if power > 0 {
                self.letters.extend_from_slice(block);
            } else {
                self.letters.extend(block.iter().rev().map(|l| -l));
            }
        }
    }
}

/// `(σ₁…σ_{p−1})^q · (σ₁…σ_{r−1})^{r·s}` on `p` strands.
pub fn twisted_torus_braid(p: usize, q: i64, r: usize, s: i64) -> Result<BraidWord> {
    if p < 2 {
        return Err(Error::InvalidBraid(format!("p = {p}, need p ≥ 2")));
    }
    if !(2..=p).contains(&r) {
        return Err(Error::InvalidBraid(format!("r = {r}, need 2 ≤ r ≤ p = {p}")));
    }
    let mut w = BraidWord { strands: p, letters: Vec::new() };
    let torus: Vec<i32> = (1..p as i32).collect();
    let twist: Vec<i32> = (1..r as i32).collect();
    w.push_block(&torus, q);
    w.push_block(&twist, r as i64 * s);
    Ok(w)
}

pub fn closure_components(w: &BraidWord) -> usize {
    let perm = w.permutation();
    let mut seen = vec![false; perm.len()];
    let mut cycles = 0;
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        cycles += 1;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = perm[i];
        }
    }
    cycles
}

/// Euler characteristic of the Seifert surface of the closure built from
/// the braid: one disk per strand, one band per crossing.
pub fn bennequin_chi(w: &BraidWord) -> Result<i64> {
    if let Some(&l) = w.letters.iter().find(|&&l| l < 0) {
        return Err(Error::NotPositive(l));
    }
    Ok(w.strands as i64 - w.len() as i64)
}

/// Genus of a positive braid knot, realized by its braid surface.
pub fn bennequin_genus(w: &BraidWord) -> Result<i64> {
    let chi = bennequin_chi(w)?;
    let components = closure_components(w);
    if components != 1 {
        return Err(Error::NotAKnot(components));
    }
    Ok((1 - chi) / 2)
}

impl fmt::Display for BraidWord {
    /// Artin notation, e.g. `s1 s2 s1^-1`; the empty word prints as `e`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("e");
        }
        for (i, &l) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            if l > 0 {
                write!(f, "s{l}")?;
            } else {
                write!(f, "s{}^-1", -l)?;
            }
        }
        Ok(())
    }
}

/// Parses Artin notation (`s1 s2^-1 …`, or `e` for the empty word). The
/// strand count is not part of the notation; use [`parse_artin`].
impl FromStr for BraidWord {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let letters = parse_letters(s)?;
        let strands = letters.iter().map(|l| l.unsigned_abs() as usize + 1).max().unwrap_or(2);
        BraidWord::new(strands, letters)
    }
}

pub fn parse_artin(strands: usize, s: &str) -> Result<BraidWord> {
    BraidWord::new(strands, parse_letters(s)?)
}

fn parse_letters(s: &str) -> Result<Vec<i32>> {
    let mut out = Vec::new();
    for tok in s.split_whitespace() {
        if tok == "e" {
            continue;
        }
        let bad = || Error::InvalidBraid(format!("cannot parse letter {tok:?}"));
        let body = tok.strip_prefix('s').ok_or_else(bad)?;
        let (idx, inv) = match body.split_once('^') {
            Some((i, "-1")) => (i, true),
            Some((i, "1")) => (i, false),
            Some(_) => return Err(bad()),
            None => (body, false),
        };
        let i: i32 = idx.parse().map_err(|_| bad())?;
        if i <= 0 {
            return Err(bad());
        }
        out.push(if inv { -i } else { i });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_integer::Integer;
    use proptest::prelude::*;

    /// Cycle count by composing explicit transposition maps.
    fn components_oracle(w: &BraidWord) -> usize {
        let n = w.strands;
        let mut map: Vec<usize> = (0..n).collect();
        for &l in &w.letters {
            let i = l.unsigned_abs() as usize - 1;
            let t = |x: usize| if x == i { i + 1 } else if x == i + 1 { i } else { x };
            map = map.into_iter().map(t).collect();
        }
        let mut seen = std::collections::BTreeSet::new();
        let mut cycles = 0;
        for s in 0..n {
            if seen.insert(s) {
                cycles += 1;
                let mut x = map[s];
                while seen.insert(x) {
                    x = map[x];
                }
            }
        }
        cycles
    }

    #[test]
    fn ttk_examples() {
        let w = twisted_torus_braid(5, 1, 2, 1).unwrap();
        assert_eq!(w.letters, vec![1, 2, 3, 4, 1, 1]);
        assert_eq!(w.to_string(), "s1 s2 s3 s4 s1 s1");
        let w = twisted_torus_braid(5, 6, 2, 1).unwrap();
        assert_eq!((w.strands, w.len()), (5, 26));
        let w = twisted_torus_braid(4, 3, 3, 0).unwrap();
        assert_eq!(w.letters, [1, 2, 3].repeat(3));
    }

    #[test]
    fn negative_powers_emit_inverses() {
        let w = twisted_torus_braid(3, -1, 2, -1).unwrap();
        assert_eq!(w.letters, vec![-2, -1, -1, -1]);
        assert_eq!(w.to_string(), "s2^-1 s1^-1 s1^-1 s1^-1");
    }

    #[test]
    fn ttk_errors() {
        assert!(twisted_torus_braid(1, 1, 2, 1).is_err());
        assert!(twisted_torus_braid(5, 1, 6, 1).is_err());
        assert!(twisted_torus_braid(5, 1, 1, 1).is_err());
    }

    #[test]
    fn components_examples() {
        assert_eq!(closure_components(&twisted_torus_braid(5, 1, 2, 1).unwrap()), 1);
        assert_eq!(closure_components(&twisted_torus_braid(4, 2, 2, 0).unwrap()), 2);
        assert_eq!(closure_components(&BraidWord::identity(6).unwrap()), 6);
    }

    #[test]
    fn pn_family_is_knots() {
        for n in 0..=100 {
            let w = twisted_torus_braid(5, 5 * n + 1, 2, 1).unwrap();
            assert_eq!(closure_components(&w), 1, "n = {n}");
        }
    }

    #[test]
    fn torus_braid_components_are_gcd() {
        for p in 2..=8usize {
            for q in (-8i64..=8).filter(|&q| q != 0) {
                let w = twisted_torus_braid(p, q, 2, 0).unwrap();
                let want = (p as i64).gcd(&q) as usize;
                assert_eq!(closure_components(&w), want);
                assert_eq!(components_oracle(&w), want);
            }
        }
    }

    #[test]
    fn bennequin_examples() {
        let w = twisted_torus_braid(5, 1, 2, 1).unwrap();
        assert_eq!(bennequin_chi(&w).unwrap(), -1);
        assert_eq!(bennequin_genus(&w).unwrap(), 1);
        let w = twisted_torus_braid(5, 6, 2, 1).unwrap();
        assert_eq!(bennequin_chi(&w).unwrap(), -21);
        assert_eq!(bennequin_genus(&w).unwrap(), 11);
        let w = twisted_torus_braid(2, 1, 2, 0).unwrap();
        assert_eq!((bennequin_chi(&w).unwrap(), bennequin_genus(&w).unwrap()), (1, 0));
    }

    #[test]
    fn bennequin_refusals() {
        let mixed = BraidWord::new(3, vec![1, -2]).unwrap();
        assert_eq!(bennequin_chi(&mixed), Err(Error::NotPositive(-2)));
        let link = twisted_torus_braid(4, 2, 2, 0).unwrap();
        assert_eq!(bennequin_genus(&link), Err(Error::NotAKnot(2)));
    }

    #[test]
    fn validation_and_parsing() {
        assert!(BraidWord::new(1, vec![]).is_err());
        assert!(BraidWord::new(3, vec![3]).is_err());
        assert!(BraidWord::new(3, vec![0]).is_err());
        let w: BraidWord = "s1 s2^-1 s1".parse().unwrap();
        assert_eq!((w.strands, w.letters.clone()), (3, vec![1, -2, 1]));
        assert_eq!(parse_artin(5, "s1 s2 s3 s4 s1 s1").unwrap(), twisted_torus_braid(5, 1, 2, 1).unwrap());
        assert_eq!(parse_artin(4, "e").unwrap(), BraidWord::identity(4).unwrap());
        assert!("t1".parse::<BraidWord>().is_err());
        assert!("s1^2".parse::<BraidWord>().is_err());
        assert!("s0".parse::<BraidWord>().is_err());
    }

    #[test]
    fn json_schema() {
        let w: BraidWord = serde_json::from_str(r#"{"strands":5,"letters":[1,2,3,4,1,1]}"#).unwrap();
        assert_eq!(w, twisted_torus_braid(5, 1, 2, 1).unwrap());
    }

    proptest! {
        #[test]
        fn exponent_sum_closed_form(p in 2usize..8, q in -8i64..8, r_off in 0usize..8, s in -4i64..4) {
            let r = 2 + r_off % (p - 1);
            let w = twisted_torus_braid(p, q, r, s).unwrap();
            let r = r as i64;
            prop_assert_eq!(w.exponent_sum(), q * (p as i64 - 1) + s * r * (r - 1));
        }

        #[test]
        fn bennequin_chi_invariant_under_rotation(p in 2usize..8, letters in proptest::collection::vec(1i32..8, 0..30), k in 0usize..30) {
            let letters: Vec<i32> = letters.into_iter().map(|l| 1 + (l - 1) % (p as i32 - 1)).collect();
            let w = BraidWord::new(p, letters).unwrap();
            let mut rotated = w.clone();
            if !rotated.letters.is_empty() {
                let k = k % rotated.letters.len();
                rotated.letters.rotate_left(k);
            }
            prop_assert_eq!(bennequin_chi(&rotated).unwrap(), bennequin_chi(&w).unwrap());
            prop_assert_eq!(closure_components(&rotated), closure_components(&w));
        }

        #[test]
        fn components_match_oracle(p in 2usize..9, letters in proptest::collection::vec(-8i32..8, 0..40)) {
            let letters: Vec<i32> = letters.into_iter().filter(|&l| l != 0).map(|l| l.signum() * (1 + (l.abs() - 1) % (p as i32 - 1))).collect();
            let w = BraidWord::new(p, letters).unwrap();
            prop_assert_eq!(closure_components(&w), components_oracle(&w));
        }

        #[test]
        fn artin_round_trip(p in 2usize..9, letters in proptest::collection::vec(-8i32..8, 0..20)) {
            let letters: Vec<i32> = letters.into_iter().filter(|&l| l != 0).map(|l| l.signum() * (1 + (l.abs() - 1) % (p as i32 - 1))).collect();
            let w = BraidWord::new(p, letters).unwrap();
            prop_assert_eq!(parse_artin(p, &w.to_string()).unwrap(), w);
        }
    }
}
