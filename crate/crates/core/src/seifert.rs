//! Seifert symbols `(Oy, g; β₁/α₁, …, β_r/α_r)`.
//!
//! The Euler number convention is `e = −Σ β/α`. Normal form reduces each
//! exceptional `β` into `[0, α)`, collects the excess into one trailing
//! `(b, 1)` term, and sorts exceptional fibers by `(α, β)`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{smith_normal_form, IntMatrix, Rational};
use crate::orbifold::Orbifold2D;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum BaseClass {
    /// Orientable base, orientable total space.
    Oo,
    /// Non-orientable base (`genus` cross-caps), orientable total space.
    On,
}

impl fmt::Display for BaseClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BaseClass::Oo => "Oo",
            BaseClass::On => "On",
        })
    }
}

/// One `β/α` term. Terms with `α = 1` are regular and only shift the
/// Euler number.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fiber {
    pub beta: i64,
    pub alpha: i64,
}

impl Fiber {
    pub const fn new(beta: i64, alpha: i64) -> Self {
        Fiber { beta, alpha }
    }

    pub fn is_exceptional(&self) -> bool {
        self.alpha >= 2
    }

    pub fn ratio(&self) -> Rational {
        Rational::new(self.beta, self.alpha).expect("alpha validated positive")
    }

    fn validate(&self) -> Result<()> {
        if self.alpha < 1 {
            return Err(Error::InvalidSymbol(format!("fiber {}/{} has alpha < 1", self.beta, self.alpha)));
        }
        if self.beta.gcd(&self.alpha) != 1 {
            return Err(Error::InvalidSymbol(format!(
                "fiber {}/{} is not a coprime pair",
                self.beta, self.alpha
            )));
        }
        Ok(())
    }
}

impl Serialize for Fiber {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        [self.beta, self.alpha].serialize(s)
    }
}

impl<'de> Deserialize<'de> for Fiber {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let [beta, alpha] = <[i64; 2]>::deserialize(d)?;
        Ok(Fiber { beta, alpha })
    }
}

/// Wire form: `{"class":"Oo"|"On","genus":int,"fibers":[[beta,alpha],...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SeifertSymbol {
    pub class: BaseClass,
    pub genus: u32,
    pub fibers: Vec<Fiber>,
}

/// Which fiber to drill out in [`remove_fiber`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FiberChoice {
    Regular,
    /// Index into the symbol's `fibers` list.
    Exceptional(usize),
}

impl SeifertSymbol {
    pub fn new(class: BaseClass, genus: u32, fibers: Vec<Fiber>) -> Result<Self> {
        let s = SeifertSymbol { class, genus, fibers };
        s.validate()?;
        Ok(s)
    }

    /// Builds a symbol from `(beta, alpha)` pairs.
    pub fn from_pairs(class: BaseClass, genus: u32, pairs: &[(i64, i64)]) -> Result<Self> {
        Self::new(class, genus, pairs.iter().map(|&(b, a)| Fiber::new(b, a)).collect())
    }

    pub fn validate(&self) -> Result<()> {
        if self.class == BaseClass::On && self.genus == 0 {
            return Err(Error::InvalidSymbol("On base class needs at least one cross-cap".into()));
        }
        self.fibers.iter().try_for_each(Fiber::validate)
    }

    pub fn exceptional(&self) -> impl Iterator<Item = &Fiber> {
        self.fibers.iter().filter(|f| f.is_exceptional())
    }

    pub fn normalize(&self) -> Result<SeifertSymbol> {
        normalize(self)
    }

    pub fn euler_number(&self) -> Rational {
        euler_number(self)
    }
}

pub fn normalize(s: &SeifertSymbol) -> Result<SeifertSymbol> {
    s.validate()?;
    let mut b: i64 = 0;
    let mut exceptional = Vec::new();
    for f in &s.fibers {
        if f.alpha == 1 {
            b += f.beta;
        } else {
            b += f.beta.div_euclid(f.alpha);
            exceptional.push(Fiber::new(f.beta.rem_euclid(f.alpha), f.alpha));
        }
    }
    exceptional.sort_by_key(|f| (f.alpha, f.beta));
    exceptional.push(Fiber::new(b, 1));
    Ok(SeifertSymbol { class: s.class, genus: s.genus, fibers: exceptional })
}

/// `e = −Σ β/α`
pub fn euler_number(s: &SeifertSymbol) -> Rational {
    -s.fibers.iter().map(Fiber::ratio).sum::<Rational>()
}

pub fn base_orbifold(s: &SeifertSymbol) -> Orbifold2D {
    Orbifold2D {
        orientable: s.class == BaseClass::Oo,
        genus: s.genus,
        boundary: 0,
        cones: s.exceptional().map(|f| f.alpha as u64).collect(),
    }
    .sorted()
}

/// Base orbifold of the complement of a fibered neighbourhood of one fiber.
pub fn remove_fiber(s: &SeifertSymbol, which: FiberChoice) -> Result<Orbifold2D> {
    let mut base = base_orbifold(s);
    if let FiberChoice::Exceptional(index) = which {
        let fiber = s.fibers.get(index).ok_or(Error::FiberIndex { index, len: s.fibers.len() })?;
        if !fiber.is_exceptional() {
            return Err(Error::NotExceptional { index, alpha: fiber.alpha });
        }
        let pos = base.cones.iter().position(|&c| c == fiber.alpha as u64).expect("cone present");
        base.cones.remove(pos);
    }
    base.boundary += 1;
    Ok(base)
}

/// Abelian group `⊕ ℤ/dᵢ`; a factor of `0` is a free `ℤ` summand.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AbelianGroup {
    /// Decimal strings on the wire, like rationals.
    #[serde(with = "decimal_list")]
    pub invariant_factors: Vec<BigInt>,
}

mod decimal_list {
    use num_bigint::BigInt;
    use serde::{de::Error as _, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(v.iter().map(|d| d.to_string()))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigInt>, D::Error> {
        let raw: Vec<String> = Vec::deserialize(d)?;
        raw.iter().map(|x| x.parse().map_err(|_| D::Error::custom(format!("not an integer: {x:?}")))).collect()
    }
}

impl AbelianGroup {
    pub fn free_rank(&self) -> usize {
        self.invariant_factors.iter().filter(|d| d.is_zero()).count()
    }

    /// Group order, or `None` when infinite.
    pub fn order(&self) -> Option<BigInt> {
        (self.free_rank() == 0).then(|| self.invariant_factors.iter().product())
    }

    pub fn is_trivial(&self) -> bool {
        self.invariant_factors.is_empty()
    }
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .invariant_factors
            .iter()
            .map(|d| if d.is_zero() { "Z".to_string() } else { format!("Z/{d}") })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

/// First homology from the presentation with generators `x₁…x_r, h` and
/// relations `αᵢxᵢ + βᵢh = 0`, `Σxᵢ = 0`, plus `2g` free generators from the
/// base surface.
pub fn first_homology(s: &SeifertSymbol) -> Result<AbelianGroup> {
    s.validate()?;
    if s.class != BaseClass::Oo {
        return Err(Error::UnsupportedClass);
    }
    let r = s.fibers.len();
    let mut m = IntMatrix::zeros(r + 1, r + 1);
    for (i, f) in s.fibers.iter().enumerate() {
        m[(i, i)] = BigInt::from(f.alpha);
        m[(i, r)] = BigInt::from(f.beta);
        m[(r, i)] = BigInt::one();
    }
    let snf = smith_normal_form(&m);
    let mut factors: Vec<BigInt> = snf.diagonal.iter().filter(|d| !d.is_one()).cloned().collect();
    factors.extend(std::iter::repeat(BigInt::zero()).take(2 * s.genus as usize));
    // zeros sort last, torsion stays in divisibility order
    factors.sort_by_key(|d| (d.is_zero(), d.clone()));
    Ok(AbelianGroup { invariant_factors: factors })
}

/// The two fibrations of `M_n`:
/// `(Oo,0; 1/2, −1/2, −2/(4n−1))` and `(On,1; (4n−1)/2)`, both normalized.
pub fn prism_fibrations(n: i64) -> Result<(SeifertSymbol, SeifertSymbol)> {
    let m = 4 * n - 1;
    if m.abs() < 3 {
        return Err(Error::DegeneratePrism { n, index: m.abs() });
    }
    // −2/m with a positive denominator
    let third = if m > 0 { (-2, m) } else { (2, -m) };
    let oo = SeifertSymbol::from_pairs(BaseClass::Oo, 0, &[(1, 2), (-1, 2), third])?;
    let on = SeifertSymbol::from_pairs(BaseClass::On, 1, &[(m, 2)])?;
    Ok((oo.normalize()?, on.normalize()?))
}

impl fmt::Display for SeifertSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{}", self.class, self.genus)?;
        for (i, fib) in self.fibers.iter().enumerate() {
            write!(f, "{} {}/{}", if i == 0 { ";" } else { "," }, fib.beta, fib.alpha)?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn oo(pairs: &[(i64, i64)]) -> SeifertSymbol {
        SeifertSymbol::from_pairs(BaseClass::Oo, 0, pairs).unwrap()
    }

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d).unwrap()
    }

    #[test]
    fn normalize_examples() {
        assert_eq!(oo(&[(1, 2), (-1, 2), (-2, 3)]).normalize().unwrap(), oo(&[(1, 2), (1, 2), (1, 3), (-2, 1)]));
        assert_eq!(oo(&[(0, 1)]).normalize().unwrap(), oo(&[(0, 1)]));
        let g1 = SeifertSymbol::from_pairs(BaseClass::Oo, 1, &[(5, 3)]).unwrap();
        assert_eq!(g1.normalize().unwrap(), SeifertSymbol::from_pairs(BaseClass::Oo, 1, &[(2, 3), (1, 1)]).unwrap());
    }

    #[test]
    fn invalid_symbols() {
        let bad = SeifertSymbol { class: BaseClass::On, genus: 0, fibers: vec![Fiber::new(1, 2)] };
        assert!(matches!(normalize(&bad), Err(Error::InvalidSymbol(_))));
        assert!(SeifertSymbol::from_pairs(BaseClass::Oo, 0, &[(1, 0)]).is_err());
        assert!(SeifertSymbol::from_pairs(BaseClass::Oo, 0, &[(2, 4)]).is_err());
    }

    #[test]
    fn euler_examples() {
        assert_eq!(euler_number(&oo(&[(1, 2), (-1, 2)])), Rational::zero());
        assert_eq!(euler_number(&oo(&[(1, 2), (-1, 2), (-2, 3)])), q(2, 3));
        let on = SeifertSymbol::from_pairs(BaseClass::On, 1, &[(3, 2)]).unwrap();
        assert_eq!(euler_number(&on), q(-3, 2));
    }

    #[test]
    fn base_orbifold_examples() {
        let b = base_orbifold(&oo(&[(1, 2), (-1, 2), (-2, 3)]));
        assert!(b.orientable);
        assert_eq!((b.genus, b.boundary, b.cones.clone()), (0, 0, vec![2, 2, 3]));

        let b = base_orbifold(&SeifertSymbol::from_pairs(BaseClass::On, 1, &[(3, 2)]).unwrap());
        assert!(!b.orientable);
        assert_eq!((b.genus, b.boundary, b.cones.clone()), (1, 0, vec![2]));

        let b = base_orbifold(&SeifertSymbol::from_pairs(BaseClass::Oo, 2, &[]).unwrap());
        assert_eq!((b.orientable, b.genus, b.cones.len()), (true, 2, 0));
    }

    #[test]
    fn remove_fiber_cases() {
        for n in [1, 2, -1, 5] {
            let m = (4 * n - 1i64).unsigned_abs();
            let (oo_sym, on_sym) = prism_fibrations(n).unwrap();

            let mobius = remove_fiber(&on_sym, FiberChoice::Exceptional(0)).unwrap();
            assert_eq!((mobius.orientable, mobius.genus, mobius.boundary), (false, 1, 1));
            assert!(mobius.cones.is_empty());

            let mobius2 = remove_fiber(&on_sym, FiberChoice::Regular).unwrap();
            assert_eq!(mobius2.cones, vec![2]);

            let disk3 = remove_fiber(&oo_sym, FiberChoice::Regular).unwrap();
            assert_eq!((disk3.orientable, disk3.genus, disk3.boundary), (true, 0, 1));
            let mut want = vec![2, 2, m];
            want.sort();
            assert_eq!(disk3.cones, want);
        }
    }

    #[test]
    fn remove_fiber_errors() {
        let (oo_sym, _) = prism_fibrations(1).unwrap();
        assert_eq!(remove_fiber(&oo_sym, FiberChoice::Exceptional(9)), Err(Error::FiberIndex { index: 9, len: 4 }));
        assert_eq!(
            remove_fiber(&oo_sym, FiberChoice::Exceptional(3)),
            Err(Error::NotExceptional { index: 3, alpha: 1 })
        );
    }

    #[test]
    fn homology_examples() {
        let m1 = oo(&[(1, 2), (1, 2), (1, 3), (-2, 1)]);
        let h = first_homology(&m1).unwrap();
        assert_eq!(h.order(), Some(BigInt::from(8)));
        // |α₁α₂α₃·e| closed form
        let closed = (q(2 * 2 * 3, 1) * euler_number(&m1)).abs();
        assert_eq!(closed, q(8, 1));

        let s2s1 = first_homology(&oo(&[(0, 1)])).unwrap();
        assert_eq!(s2s1.invariant_factors, vec![BigInt::zero()]);

        let poincare = first_homology(&oo(&[(1, 2), (1, 3), (1, 5), (-1, 1)])).unwrap();
        assert!(poincare.is_trivial());

        let on = SeifertSymbol::from_pairs(BaseClass::On, 1, &[(3, 2)]).unwrap();
        assert_eq!(first_homology(&on), Err(Error::UnsupportedClass));
    }

    #[test]
    fn homology_json() {
        let h = first_homology(&oo(&[(1, 2), (1, 2), (1, 3), (-2, 1)])).unwrap();
        let s = serde_json::to_string(&h).unwrap();
        assert_eq!(s, r#"{"invariant_factors":["8"]}"#);
        assert_eq!(serde_json::from_str::<AbelianGroup>(&s).unwrap(), h);
        assert!(serde_json::from_str::<AbelianGroup>(r#"{"invariant_factors":["x"]}"#).is_err());
    }

    #[test]
    fn homology_of_genus_one_base_has_free_part() {
        let s = SeifertSymbol::from_pairs(BaseClass::Oo, 1, &[(1, 1)]).unwrap();
        let h = first_homology(&s).unwrap();
        assert_eq!(h.free_rank(), 2);
        assert_eq!(h.order(), None);
    }

    #[test]
    fn prism_examples() {
        let (a, b) = prism_fibrations(1).unwrap();
        assert_eq!(a, oo(&[(1, 2), (-1, 2), (-2, 3)]).normalize().unwrap());
        assert_eq!(b, SeifertSymbol::from_pairs(BaseClass::On, 1, &[(3, 2)]).unwrap().normalize().unwrap());

        let (a, _) = prism_fibrations(-1).unwrap();
        assert_eq!(base_orbifold(&a).cones, vec![2, 2, 5]);
        assert_eq!(a, oo(&[(1, 2), (-1, 2), (2, 5)]).normalize().unwrap());

        assert_eq!(prism_fibrations(0), Err(Error::DegeneratePrism { n: 0, index: 1 }));
    }

    #[test]
    fn prism_family_euler_and_distinctness() {
        let mut seen = std::collections::HashSet::new();
        for n in (-20..=20).filter(|&n| n != 0) {
            let (a, _) = prism_fibrations(n).unwrap();
            assert_eq!(euler_number(&a), q(2, 4 * n - 1));
            assert!(seen.insert(a), "duplicate symbol at n = {n}");
        }
    }

    #[test]
    fn display() {
        let (a, b) = prism_fibrations(1).unwrap();
        assert_eq!(a.to_string(), "(Oo,0; 1/2, 1/2, 1/3, -2/1)");
        assert_eq!(b.to_string(), "(On,1; 1/2, 1/1)");
    }

    #[test]
    fn json_schema() {
        let s: SeifertSymbol = serde_json::from_str(r#"{"class":"Oo","genus":0,"fibers":[[1,2],[-1,2]]}"#).unwrap();
        assert_eq!(s, oo(&[(1, 2), (-1, 2)]));
        assert_eq!(serde_json::to_string(&s).unwrap(), r#"{"class":"Oo","genus":0,"fibers":[[1,2],[-1,2]]}"#);
        assert!(serde_json::from_str::<SeifertSymbol>(r#"{"class":"Ox","genus":0,"fibers":[]}"#).is_err());
    }

    fn fiber() -> impl Strategy<Value = Fiber> {
        (-40i64..40, 1i64..12)
            .prop_filter("coprime", |(b, a)| b.gcd(a) == 1)
            .prop_map(|(b, a)| Fiber::new(b, a))
    }

    fn symbol() -> impl Strategy<Value = SeifertSymbol> {
        (any::<bool>(), 0u32..3, proptest::collection::vec(fiber(), 0..6)).prop_map(|(o, g, fibers)| {
            let (class, genus) = if o { (BaseClass::Oo, g) } else { (BaseClass::On, g + 1) };
            SeifertSymbol { class, genus, fibers }
        })
    }

    proptest! {
        #[test]
        fn normalize_idempotent(s in symbol()) {
            let n = s.normalize().unwrap();
            prop_assert_eq!(n.normalize().unwrap(), n.clone());
            prop_assert_eq!(n.fibers.iter().filter(|f| f.alpha == 1).count(), 1);
            prop_assert!(n.exceptional().all(|f| 0 <= f.beta && f.beta < f.alpha));
        }

        #[test]
        fn euler_invariant_under_normalize(s in symbol()) {
            prop_assert_eq!(euler_number(&s.normalize().unwrap()), euler_number(&s));
        }

        #[test]
        fn base_invariant_under_normalize(s in symbol()) {
            prop_assert_eq!(base_orbifold(&s.normalize().unwrap()), base_orbifold(&s));
        }

        #[test]
        fn homology_order_matches_closed_form(fibers in proptest::collection::vec(fiber(), 1..6)) {
            let s = SeifertSymbol { class: BaseClass::Oo, genus: 0, fibers };
            let alphas: i64 = s.fibers.iter().map(|f| f.alpha).product();
            let closed = (Rational::from(alphas) * euler_number(&s)).abs();
            let h = first_homology(&s).unwrap();
            if closed.is_zero() {
                prop_assert_eq!(h.order(), None);
            } else {
                prop_assert_eq!(Rational::from(h.order().unwrap()), closed);
            }
        }
    }
}
