//! Exact arithmetic in cyclotomic fields `Q(ζ_n)`.
//!
//! A [`Cyclotomic`] is stored in the power basis `1, ζ_n, …, ζ_n^{φ(n)-1}` of
//! `Q[x]/(Φ_n)`, as integer numerators over one positive common denominator.
//! The representation is canonical, so equality at a fixed conductor is a
//! structural comparison. Binary operations between different conductors
//! lift both operands to the lcm; nothing is ever descended automatically.

mod field;
mod matrix;
mod poly;

use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub use field::{cyclotomic_polynomial, totient};
pub use matrix::CycloMatrix;

use crate::error::ArithmeticError;

/// Arbitrary-precision rational, always in lowest terms with positive denominator.
pub type Rational = BigRational;

/// An element of `Q(ζ_n)`.
#[derive(Clone, Debug)]
pub struct Cyclotomic {
    conductor: u32,
    num: Vec<BigInt>,
    den: BigInt,
}

impl Cyclotomic {
    /// Builds from power-basis coefficients at conductor `n`. Longer inputs are
    /// reduced modulo `Φ_n`; shorter ones are zero-padded.
    pub fn from_coeffs(n: u32, coeffs: &[Rational]) -> Self {
        let den = coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let num: Vec<BigInt> = coeffs
            .iter()
            .map(|c| c.numer() * (&den / c.denom()))
            .collect();
        Self::from_integer_poly(n, num, den)
    }

    /// `Σ c_k ζ_n^{e_k}` for arbitrary integer exponents.
    pub fn from_exponents<I>(n: u32, terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, Rational)>,
    {
        let mut coeffs = vec![Rational::zero(); n as usize];
        for (e, c) in terms {
            coeffs[e.rem_euclid(n as i64) as usize] += c;
        }
        Self::from_coeffs(n, &coeffs)
    }

    fn from_integer_poly(n: u32, mut num: Vec<BigInt>, den: BigInt) -> Self {
        let ctx = field::context(n);
        reduce(&mut num, &ctx.modulus);
        num.resize(ctx.degree, BigInt::zero());
        let mut out = Cyclotomic {
            conductor: n,
            num,
            den,
        };
        out.normalize();
        out
    }

    fn normalize(&mut self) {
        if self.den.is_negative() {
            self.den = -&self.den;
            for c in &mut self.num {
                *c = -&*c;
            }
        }
        let g = self
            .num
            .iter()
            .fold(self.den.clone(), |acc, c| acc.gcd(c));
        if self.num.iter().all(Zero::is_zero) {
            self.den = BigInt::one();
        } else if !g.is_one() {
            for c in &mut self.num {
                *c = &*c / &g;
            }
            self.den = &self.den / &g;
        }
    }

    pub fn from_rational(q: Rational) -> Self {
        Self::from_rational_at(1, q)
    }

    /// The rational `q` viewed in `Q(ζ_n)`.
    pub fn from_rational_at(n: u32, q: Rational) -> Self {
        let mut num = vec![BigInt::zero(); field::totient(n)];
        let (p, d) = q.into_raw();
        num[0] = p;
        let mut out = Cyclotomic {
            conductor: n,
            num,
            den: d,
        };
        out.normalize();
        out
    }

    pub fn from_int(k: i64) -> Self {
        Self::from_rational(Rational::from_integer(BigInt::from(k)))
    }

    pub fn ratio(p: i64, q: i64) -> Self {
        Self::from_rational(Rational::new(BigInt::from(p), BigInt::from(q)))
    }

    /// `ζ_n^k`.
    pub fn zeta_pow(n: u32, k: i64) -> Self {
        Self::from_exponents(n, [(k, Rational::one())])
    }

    /// The primitive root `ζ_n = exp(2πi/n)`.
    pub fn zeta(n: u32) -> Self {
        Self::zeta_pow(n, 1)
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    /// Power-basis coefficients, length `φ(conductor)`.
    pub fn coeffs(&self) -> Vec<Rational> {
        self.num
            .iter()
            .map(|c| Rational::new(c.clone(), self.den.clone()))
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.num.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.den.is_one() && self.num[0].is_one() && self.num[1..].iter().all(Zero::is_zero)
    }

    pub fn is_rational(&self) -> bool {
        self.num[1..].iter().all(Zero::is_zero)
    }

    pub fn to_rational(&self) -> Option<Rational> {
        self.is_rational()
            .then(|| Rational::new(self.num[0].clone(), self.den.clone()))
    }

    /// True for rational integers.
    pub fn to_integer(&self) -> Option<BigInt> {
        (self.is_rational() && self.den.is_one()).then(|| self.num[0].clone())
    }

    /// The same element viewed at conductor `n`, which must be a multiple of
    /// the current conductor.
    pub fn lift(&self, n: u32) -> Self {
        assert!(
            n % self.conductor == 0,
            "cannot lift conductor {} to {}",
            self.conductor,
            n
        );
        if n == self.conductor {
            return self.clone();
        }
        if self.is_rational() {
            return Self::from_rational_at(n, Rational::new(self.num[0].clone(), self.den.clone()));
        }
        let step = (n / self.conductor) as usize;
        let mut num = vec![BigInt::zero(); (self.num.len() - 1) * step + 1];
        for (k, c) in self.num.iter().enumerate() {
            num[k * step] = c.clone();
        }
        Self::from_integer_poly(n, num, self.den.clone())
    }

    fn coerce<'a>(a: &'a Self, b: &'a Self) -> (std::borrow::Cow<'a, Self>, std::borrow::Cow<'a, Self>) {
        use std::borrow::Cow;
        if a.conductor == b.conductor {
            return (Cow::Borrowed(a), Cow::Borrowed(b));
        }
        let n = field::lcm(a.conductor, b.conductor);
        let wrap = |x: &'a Self| -> Cow<'a, Self> {
            if x.conductor == n {
                Cow::Borrowed(x)
            } else {
                Cow::Owned(x.lift(n))
            }
        };
        (wrap(a), wrap(b))
    }

    fn add_sub(&self, other: &Self, negate: bool) -> Self {
        let (a, b) = Self::coerce(self, other);
        let l = a.den.lcm(&b.den);
        let fa = &l / &a.den;
        let fb = &l / &b.den;
        let num = a
            .num
            .iter()
            .zip(&b.num)
            .map(|(x, y)| {
                let (x, y) = (x * &fa, y * &fb);
                if negate {
                    x - y
                } else {
                    x + y
                }
            })
            .collect();
        let mut out = Cyclotomic {
            conductor: a.conductor,
            num,
            den: l,
        };
        out.normalize();
        out
    }

    fn mul_ref(&self, other: &Self) -> Self {
        if self.is_rational() {
            return other.scale_by(self);
        }
        if other.is_rational() {
            return self.scale_by(other);
        }
        let (a, b) = Self::coerce(self, other);
        let mut prod = vec![BigInt::zero(); a.num.len() + b.num.len() - 1];
        for (i, x) in a.num.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.num.iter().enumerate() {
                if !y.is_zero() {
                    prod[i + j] += x * y;
                }
            }
        }
        Self::from_integer_poly(a.conductor, prod, &a.den * &b.den)
    }

    /// Multiplies by a rational (given as a Cyclotomic), keeping the lcm conductor.
    fn scale_by(&self, q: &Self) -> Self {
        let n = field::lcm(self.conductor, q.conductor);
        let base = if n == self.conductor {
            std::borrow::Cow::Borrowed(self)
        } else {
            std::borrow::Cow::Owned(self.lift(n))
        };
        let s = &q.num[0];
        let mut out = Cyclotomic {
            conductor: n,
            num: base.num.iter().map(|c| c * s).collect(),
            den: &base.den * &q.den,
        };
        out.normalize();
        out
    }

    /// Multiplicative inverse via the extended Euclidean algorithm against `Φ_n`,
    /// run as a primitive remainder sequence over the integers.
    pub fn inv(&self) -> Result<Self, ArithmeticError> {
        if self.is_zero() {
            return Err(ArithmeticError::DivisionByZero);
        }
        if let Some(q) = self.to_rational() {
            return Ok(Self::from_rational_at(self.conductor, q.recip()));
        }
        let ctx = field::context(self.conductor);
        let (s, c) = poly::inverse_mod(&self.num, &ctx.modulus).ok_or(ArithmeticError::DivisionByZero)?;
        let num = s.into_iter().map(|x| x * &self.den).collect();
        let out = Self::from_integer_poly(self.conductor, num, c);
        debug_assert!((self * &out).is_one());
        Ok(out)
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self, ArithmeticError> {
        Ok(self * &other.inv()?)
    }

    /// Image under the Galois automorphism `ζ_n ↦ ζ_n^k` (`gcd(k, n) = 1`).
    pub fn galois(&self, k: i64) -> Self {
        let n = self.conductor;
        debug_assert_eq!((k.rem_euclid(n as i64) as u32).gcd(&n), 1);
        let terms = self
            .num
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(e, c)| (e as i64 * k, Rational::from_integer(c.clone())));
        let mut out = Self::from_exponents(n, terms);
        out.den = &out.den * &self.den;
        out.normalize();
        out
    }

    /// Complex conjugation `ζ_n ↦ ζ_n^{-1}`.
    pub fn conj(&self) -> Self {
        self.galois(-1)
    }

    /// Numerical value under `ζ_n ↦ exp(2πi/n)`. Display only.
    pub fn embed(&self) -> Complex64 {
        if self.is_rational() {
            return Complex64::new(
                Rational::new(self.num[0].clone(), self.den.clone())
                    .to_f64()
                    .unwrap_or(f64::NAN),
                0.0,
            );
        }
        let n = self.conductor as f64;
        let mut acc = Complex64::new(0.0, 0.0);
        for (k, c) in self.num.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let w = Rational::new(c.clone(), self.den.clone())
                .to_f64()
                .unwrap_or(f64::NAN);
            let angle = std::f64::consts::TAU * k as f64 / n;
            acc += Complex64::from_polar(w, angle);
        }
        acc
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one_at(self.conductor);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    fn one_at(n: u32) -> Self {
        Self::from_rational_at(n, Rational::one())
    }
}

/// Reduces an integer polynomial modulo a monic integer polynomial, in place.
fn reduce(p: &mut Vec<BigInt>, modulus: &[i64]) {
    let d = modulus.len() - 1;
    while p.len() > d {
        let top = p.pop().unwrap();
        if top.is_zero() {
            continue;
        }
        let shift = p.len() - d;
        for (j, &m) in modulus[..d].iter().enumerate() {
            if m != 0 {
                p[shift + j] -= &top * m;
            }
        }
    }
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        if self.conductor == other.conductor {
            return self.den == other.den && self.num == other.num;
        }
        let (a, b) = Self::coerce(self, other);
        a.den == b.den && a.num == b.num
    }
}

impl Eq for Cyclotomic {}

impl Zero for Cyclotomic {
    fn zero() -> Self {
        Self::from_int(0)
    }
    fn is_zero(&self) -> bool {
        Cyclotomic::is_zero(self)
    }
}

impl One for Cyclotomic {
    fn one() -> Self {
        Self::from_int(1)
    }
}

impl From<i64> for Cyclotomic {
    fn from(k: i64) -> Self {
        Self::from_int(k)
    }
}

impl From<Rational> for Cyclotomic {
    fn from(q: Rational) -> Self {
        Self::from_rational(q)
    }
}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic {
            conductor: self.conductor,
            num: self.num.iter().map(|c| -c).collect(),
            den: self.den.clone(),
        }
    }
}

impl Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        -&self
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $body:expr) => {
        impl $tr<&Cyclotomic> for &Cyclotomic {
            type Output = Cyclotomic;
            fn $method(self, rhs: &Cyclotomic) -> Cyclotomic {
                let f: fn(&Cyclotomic, &Cyclotomic) -> Cyclotomic = $body;
                f(self, rhs)
            }
        }
        impl $tr<Cyclotomic> for Cyclotomic {
            type Output = Cyclotomic;
            fn $method(self, rhs: Cyclotomic) -> Cyclotomic {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&Cyclotomic> for Cyclotomic {
            type Output = Cyclotomic;
            fn $method(self, rhs: &Cyclotomic) -> Cyclotomic {
                (&self).$method(rhs)
            }
        }
        impl $tr<Cyclotomic> for &Cyclotomic {
            type Output = Cyclotomic;
            fn $method(self, rhs: Cyclotomic) -> Cyclotomic {
                self.$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a, b| a.add_sub(b, false));
forward_binop!(Sub, sub, |a, b| a.add_sub(b, true));
forward_binop!(Mul, mul, |a, b| a.mul_ref(b));

/// Panics on division by zero; use [`Cyclotomic::checked_div`] to handle it.
impl Div<&Cyclotomic> for &Cyclotomic {
    type Output = Cyclotomic;
    fn div(self, rhs: &Cyclotomic) -> Cyclotomic {
        self.checked_div(rhs).expect("cyclotomic division by zero")
    }
}

impl Div<Cyclotomic> for Cyclotomic {
    type Output = Cyclotomic;
    fn div(self, rhs: Cyclotomic) -> Cyclotomic {
        &self / &rhs
    }
}

impl AddAssign<&Cyclotomic> for Cyclotomic {
    fn add_assign(&mut self, rhs: &Cyclotomic) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&Cyclotomic> for Cyclotomic {
    fn sub_assign(&mut self, rhs: &Cyclotomic) {
        *self = &*self - rhs;
    }
}

impl MulAssign<&Cyclotomic> for Cyclotomic {
    fn mul_assign(&mut self, rhs: &Cyclotomic) {
        *self = &*self * rhs;
    }
}

impl Sum for Cyclotomic {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |a, b| a + b)
    }
}

impl<'a> Sum<&'a Cyclotomic> for Cyclotomic {
    fn sum<I: Iterator<Item = &'a Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |a, b| a + b)
    }
}

impl Product for Cyclotomic {
    fn product<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::one(), |a, b| a * b)
    }
}

const MINUS: char = '\u{2212}';

/// Formats a rational with a typographic minus sign.
pub fn format_rational(q: &Rational) -> String {
    let s = if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    };
    s.replace('-', &MINUS.to_string())
}

/// Text form: rationals as `p/q`, other values as sums of `ζN^k` tokens,
/// e.g. `−ζ5^2−ζ5^3`.
impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(q) = self.to_rational() {
            return f.write_str(&format_rational(&q));
        }
        let mut out = String::new();
        for (k, c) in self.coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let negative = c.is_negative();
            let mag = c.abs();
            if negative {
                out.push(MINUS);
            } else if !out.is_empty() {
                out.push('+');
            }
            let token = match k {
                0 => String::new(),
                1 => format!("ζ{}", self.conductor),
                _ => format!("ζ{}^{}", self.conductor, k),
            };
            if k == 0 {
                out.push_str(&format_rational(&mag));
            } else if mag.is_one() {
                out.push_str(&token);
            } else {
                out.push_str(&format_rational(&mag));
                out.push('·');
                out.push_str(&token);
            }
        }
        f.write_str(&out)
    }
}

/// `%g`-style rendering with six significant digits.
pub fn format_approx(z: Complex64) -> String {
    let scale = z.re.abs().max(z.im.abs()).max(1.0);
    let re_small = z.re.abs() < 1e-12 * scale;
    let im_small = z.im.abs() < 1e-12 * scale;
    match (re_small, im_small) {
        (_, true) => sig6(if re_small { 0.0 } else { z.re }),
        (true, false) => format!("{}i", sig6(z.im)),
        (false, false) => {
            let sign = if z.im < 0.0 { '-' } else { '+' };
            format!("{}{}{}i", sig6(z.re), sign, sig6(z.im.abs()))
        }
    }
}

fn sig6(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    let exp = x.abs().log10().floor() as i32;
    if !(-5..6).contains(&exp) {
        let s = format!("{:.5e}", x);
        return s;
    }
    let decimals = (5 - exp).max(0) as usize;
    let s = format!("{:.*}", decimals, x);
    let s = if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s
    };
    if s == "-0" {
        "0".to_string()
    } else {
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// (1 + √5)/2 = −ζ5² − ζ5³.
    fn golden() -> Cyclotomic {
        -(Cyclotomic::zeta_pow(5, 2) + Cyclotomic::zeta_pow(5, 3))
    }

    fn q(p: i64, d: i64) -> Rational {
        Rational::new(p.into(), d.into())
    }

    #[test]
    fn zeta4_squared_is_minus_one() {
        let i = Cyclotomic::zeta(4);
        assert_eq!(&i * &i, Cyclotomic::from_int(-1));
    }

    #[test]
    fn golden_ratio_squared() {
        let g = golden();
        assert_eq!(&g * &g, &g + &Cyclotomic::one());
    }

    #[test]
    fn additive_identity() {
        let g = golden();
        assert_eq!(&g + &Cyclotomic::zero(), g);
    }

    #[test]
    fn inverses() {
        let z = Cyclotomic::zeta(7);
        assert_eq!(z.inv().unwrap(), Cyclotomic::zeta_pow(7, 6));
        let g = golden();
        assert_eq!(g.inv().unwrap(), &g - &Cyclotomic::one());
        assert_eq!(Cyclotomic::zero().inv(), Err(ArithmeticError::DivisionByZero));
    }

    #[test]
    fn conjugation() {
        assert_eq!(Cyclotomic::zeta(9).conj(), Cyclotomic::zeta_pow(9, 8));
        let r = Cyclotomic::ratio(3, 2);
        assert_eq!(r.conj(), r);
        assert_eq!(golden().conj(), golden());
    }

    #[test]
    fn embedding() {
        let i = Cyclotomic::zeta(4).embed();
        assert!((i - Complex64::new(0.0, 1.0)).norm() < 1e-12);
        assert!((golden().embed().re - 1.618_033_988_749_895).abs() < 1e-10);
        assert_eq!(Cyclotomic::ratio(3, 2).embed(), Complex64::new(1.5, 0.0));
    }

    #[test]
    fn lifting_preserves_value() {
        let i = Cyclotomic::zeta(4);
        let lifted = i.lift(8);
        assert_eq!(lifted.conductor(), 8);
        assert_eq!(lifted, Cyclotomic::zeta_pow(8, 2));
        assert_eq!(i, lifted);
        // ζ4 · ζ3 lands in conductor 12.
        let p = &i * &Cyclotomic::zeta(3);
        assert_eq!(p.conductor(), 12);
        assert_eq!(p, Cyclotomic::zeta_pow(12, 7));
    }

    #[test]
    fn rational_detection_and_canonical_form() {
        let z = Cyclotomic::zeta(5);
        let sum: Cyclotomic = (0..5).map(|k| Cyclotomic::zeta_pow(5, k)).sum();
        assert!(sum.is_zero());
        assert!(!z.is_rational());
        assert!((&z * &z.conj()).is_one());
        let c = Cyclotomic::from_coeffs(5, &[q(2, 4), q(0, 1), q(-6, 8), q(0, 1)]);
        assert_eq!(c.coeffs(), vec![q(1, 2), q(0, 1), q(-3, 4), q(0, 1)]);
    }

    #[test]
    fn display_forms() {
        assert_eq!(golden().to_string(), "−ζ5^2−ζ5^3");
        assert_eq!(Cyclotomic::ratio(-3, 2).to_string(), "−3/2");
        let x = Cyclotomic::from_coeffs(8, &[q(1, 1), q(1, 2), q(0, 1), q(-1, 1)]);
        assert_eq!(x.to_string(), "1+1/2·ζ8−ζ8^3");
        assert_eq!(format_approx(golden().embed()), "1.61803");
        assert_eq!(format_approx(Cyclotomic::zeta(4).embed()), "1i");
        assert_eq!(format_approx(Cyclotomic::zeta(8).embed()), "0.707107+0.707107i");
        assert_eq!(format_approx(Cyclotomic::from_int(-4).embed()), "-4");
    }
}
