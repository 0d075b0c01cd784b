use std::fmt;
use std::ops::RangeInclusive;

use num_integer::Integer;

use super::Rational;

/// The ratio `(a·x + b) / (c·x + e)` of two affine functions of one integer
/// variable.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AffineRatio {
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub e: i64,
}

impl AffineRatio {
    pub const fn new(a: i64, b: i64, c: i64, e: i64) -> Self {
        AffineRatio { a, b, c, e }
    }

    fn num(&self, x: i64) -> i128 {
        self.a as i128 * x as i128 + self.b as i128
    }

    fn den(&self, x: i64) -> i128 {
        self.c as i128 * x as i128 + self.e as i128
    }

    /// Exact value at `x`, or `None` at a pole.
    pub fn eval(&self, x: i64) -> Option<Rational> {
        let d = self.den(x);
        (d != 0).then(|| Rational::new(self.num(x), d).expect("nonzero denominator"))
    }

    /// Integer value at `x`, or `None` at a pole or a non-integral point.
    pub fn integer_at(&self, x: i64) -> Option<i128> {
        let d = self.den(x);
        if d == 0 {
            return None;
        }
        let n = self.num(x);
        (n % d == 0).then_some(n / d)
    }
}

impl fmt::Display for AffineRatio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}x + {})/({}x + {})", self.a, self.b, self.c, self.e)
    }
}

/// All points of `domain` where `f` takes an integer value, paired with that
/// value, in ascending order of the point.
///
/// When the denominator varies, `(c·x + e)` must divide the constant
/// `c·b − a·e`, so candidates come from its divisors. When it is constant the
/// condition is a linear congruence. Poles are skipped.
pub fn bounded_diophantine(f: &AffineRatio, domain: RangeInclusive<i64>) -> Vec<(i64, i128)> {
    let (lo, hi) = (*domain.start(), *domain.end());
    if lo > hi {
        return Vec::new();
    }
    let width = (hi as i128 - lo as i128 + 1) as u128;

    let scan = |xs: &mut dyn Iterator<Item = i64>| -> Vec<(i64, i128)> {
        xs.filter_map(|x| f.integer_at(x).map(|v| (x, v))).collect()
    };

    if f.c == 0 {
        if f.e == 0 {
            return Vec::new();
        }
        if f.a == 0 {
            return if (f.b as i128) % (f.e as i128) == 0 { scan(&mut (lo..=hi)) } else { Vec::new() };
        }
        // a·x ≡ -b (mod |e|)
        let m = (f.e as i128).abs();
        let a = (f.a as i128).rem_euclid(m);
        let rhs = (-(f.b as i128)).rem_euclid(m);
        let g = a.gcd(&m);
        if rhs % g != 0 {
            return Vec::new();
        }
        let step = m / g;
        let inv = mod_inverse(a / g, step);
        let x0 = ((rhs / g) * inv).rem_euclid(step);
        let first = lo as i128 + (x0 - lo as i128).rem_euclid(step);
        let mut out = Vec::new();
        let mut x = first;
        while x <= hi as i128 {
            let xi = x as i64;
            out.push((xi, f.num(xi) / f.e as i128));
            x += step;
        }
        return out;
    }

    let k = f.c as i128 * f.b as i128 - f.a as i128 * f.e as i128;
    if k == 0 {
        // f is the constant a/c away from its pole.
        return if f.a % f.c == 0 { scan(&mut (lo..=hi)) } else { Vec::new() };
    }
    let k = k.unsigned_abs();
    if width <= isqrt(k) {
        return scan(&mut (lo..=hi));
    }
    let mut xs: Vec<i64> = divisors(k)
        .into_iter()
        .flat_map(|t| [t as i128, -(t as i128)])
        .filter_map(|t| {
            let shifted = t - f.e as i128;
            (shifted % f.c as i128 == 0).then(|| shifted / f.c as i128)
        })
        .filter(|&x| (lo as i128..=hi as i128).contains(&x))
        .map(|x| x as i64)
        .collect();
    xs.sort_unstable();
    xs.dedup();
    scan(&mut xs.into_iter())
}

fn isqrt(n: u128) -> u128 {
    let mut x = (n as f64).sqrt() as u128;
    while x * x > n {
        x -= 1;
    }
    while (x + 1) * (x + 1) <= n {
        x += 1;
    }
    x
}

fn divisors(n: u128) -> Vec<u128> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u128;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

fn mod_inverse(a: i128, m: i128) -> i128 {
    if m == 1 {
        return 0;
    }
    let e = a.extended_gcd(&m);
    debug_assert_eq!(e.gcd, 1);
    e.x.rem_euclid(m)
}
