//! Truncated power series with exact coefficients, and the exponential
//! generating functions for alternating permutations and snakes.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{FromPrimitive, Num, One};
use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};

pub const DEFAULT_ORDER: usize = 16;

/// `c_0 + c_1 x + ... + c_{N-1} x^{N-1} + O(x^N)` over a field.
#[derive(Clone, PartialEq, Eq)]
pub struct TruncatedSeries<T> {
    coeffs: Vec<T>,
}

impl<T> TruncatedSeries<T>
where
    T: Clone + Num + Neg<Output = T> + FromPrimitive,
{
    pub fn from_coeffs(mut coeffs: Vec<T>, order: usize) -> Self {
        coeffs.resize(order, T::zero());
        TruncatedSeries { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Self::from_coeffs(Vec::new(), order)
    }

    pub fn constant(c: T, order: usize) -> Self {
        Self::from_coeffs(vec![c], order)
    }

    pub fn from_int(c: i64, order: usize) -> Self {
        Self::constant(T::from_i64(c).expect("i64 fits"), order)
    }

    /// The series `x`.
    pub fn x(order: usize) -> Self {
        Self::from_coeffs(vec![T::zero(), T::one()], order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn coeff(&self, n: usize) -> T {
        self.coeffs.get(n).cloned().unwrap_or_else(T::zero)
    }

    fn taylor(order: usize, term: impl Fn(usize) -> Option<(bool, usize)>) -> Self {
        // term(n) = Some((negative, n)) means ±1/n! at x^n.
        let mut coeffs = Vec::with_capacity(order);
        let mut fact = T::one();
        for n in 0..order {
            if n > 0 {
                fact = fact * T::from_usize(n).expect("usize fits");
            }
            coeffs.push(match term(n) {
                Some((neg, _)) => {
                    let c = T::one() / fact.clone();
                    if neg {
                        -c
                    } else {
                        c
                    }
                }
                None => T::zero(),
            });
        }
        TruncatedSeries { coeffs }
    }

    pub fn sin(order: usize) -> Self {
        Self::taylor(order, |n| (n % 2 == 1).then_some((n % 4 == 3, n)))
    }

    pub fn cos(order: usize) -> Self {
        Self::taylor(order, |n| (n % 2 == 0).then_some((n % 4 == 2, n)))
    }

    /// `f(x) ↦ f(c·x)`.
    pub fn scale_arg(&self, c: i64) -> Self {
        let c = T::from_i64(c).expect("i64 fits");
        let mut pow = T::one();
        let mut coeffs = Vec::with_capacity(self.order());
        for a in &self.coeffs {
            coeffs.push(a.clone() * pow.clone());
            pow = pow * c.clone();
        }
        TruncatedSeries { coeffs }
    }

    pub fn scale(&self, c: &T) -> Self {
        TruncatedSeries { coeffs: self.coeffs.iter().map(|a| a.clone() * c.clone()).collect() }
    }

    pub fn div(&self, g: &Self) -> Result<Self> {
        let order = self.order().min(g.order());
        let g0 = g.coeff(0);
        if g0.is_zero() {
            return domain("series division by a series with zero constant term");
        }
        let mut q: Vec<T> = Vec::with_capacity(order);
        for n in 0..order {
            let mut acc = self.coeff(n);
            for k in 0..n {
                acc = acc - q[k].clone() * g.coeff(n - k);
            }
            q.push(acc / g0.clone());
        }
        Ok(TruncatedSeries { coeffs: q })
    }

    pub fn recip(&self) -> Result<Self> {
        Self::constant(T::one(), self.order()).div(self)
    }
}

impl<T: fmt::Display> fmt::Debug for TruncatedSeries<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        write!(f, "[{}] + O(x^{})", parts.join(", "), self.coeffs.len())
    }
}

impl<T: Clone + Num + Neg<Output = T> + FromPrimitive> Add for &TruncatedSeries<T> {
    type Output = TruncatedSeries<T>;
    fn add(self, rhs: Self) -> TruncatedSeries<T> {
        let order = self.order().min(rhs.order());
        TruncatedSeries { coeffs: (0..order).map(|i| self.coeff(i) + rhs.coeff(i)).collect() }
    }
}

impl<T: Clone + Num + Neg<Output = T> + FromPrimitive> Sub for &TruncatedSeries<T> {
    type Output = TruncatedSeries<T>;
    fn sub(self, rhs: Self) -> TruncatedSeries<T> {
        let order = self.order().min(rhs.order());
        TruncatedSeries { coeffs: (0..order).map(|i| self.coeff(i) - rhs.coeff(i)).collect() }
    }
}

impl<T: Clone + Num + Neg<Output = T> + FromPrimitive> Mul for &TruncatedSeries<T> {
    type Output = TruncatedSeries<T>;
    fn mul(self, rhs: Self) -> TruncatedSeries<T> {
        let order = self.order().min(rhs.order());
        let coeffs = (0..order)
            .map(|n| (0..=n).fold(T::zero(), |acc, k| acc + self.coeff(k) * rhs.coeff(n - k)))
            .collect();
        TruncatedSeries { coeffs }
    }
}

impl<T: Clone + Num + Neg<Output = T> + FromPrimitive> Neg for &TruncatedSeries<T> {
    type Output = TruncatedSeries<T>;
    fn neg(self) -> TruncatedSeries<T> {
        TruncatedSeries { coeffs: self.coeffs.iter().map(|c| -c.clone()).collect() }
    }
}

/// Exact rational series, the instantiation every generating function uses.
pub type Series = TruncatedSeries<BigRational>;

/// `n! · [x^n] f`, which must be an integer.
pub fn egf_coeff(f: &Series, n: usize) -> Result<BigInt> {
    if n >= f.order() {
        return domain(format!("coefficient {n} requested from a series of order {}", f.order()));
    }
    let fact: BigInt = (1..=n as u64).map(BigInt::from).product();
    let v = f.coeff(n) * BigRational::from_integer(fact);
    if v.is_integer() {
        Ok(v.to_integer())
    } else {
        Err(Error::Integrity(format!("n!·[x^{n}] = {v} is not an integer")))
    }
}

fn half(f: &Series) -> Series {
    f.scale(&BigRational::new(BigInt::one(), BigInt::from(2)))
}

fn quarter(f: &Series) -> Series {
    f.scale(&BigRational::new(BigInt::one(), BigInt::from(4)))
}

/// `sec x + tan x = (1 + sin x) / cos x`.
fn sec_plus_tan(order: usize) -> Series {
    let one = Series::from_int(1, order);
    (&one + &Series::sin(order)).div(&Series::cos(order)).expect("cos(0) = 1")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum AltFamily {
    A,
    APlus,
    AMinus,
    B,
    BPlus,
    BMinus,
    D,
    BminusD,
    DPlus,
    DMinus,
    BminusDPlus,
    BminusDMinus,
}

impl AltFamily {
    pub const ALL: [AltFamily; 12] = [
        AltFamily::A,
        AltFamily::APlus,
        AltFamily::AMinus,
        AltFamily::B,
        AltFamily::BPlus,
        AltFamily::BMinus,
        AltFamily::D,
        AltFamily::BminusD,
        AltFamily::DPlus,
        AltFamily::DMinus,
        AltFamily::BminusDPlus,
        AltFamily::BminusDMinus,
    ];
}

/// Alternating-permutation generating functions in their usual stated form.
/// The B-D± pair is off; see [`egf_alt_corrected`].
pub fn egf_alt(family: AltFamily, order: usize) -> Series {
    let x = Series::x(order);
    let one = Series::from_int(1, order);
    let a = sec_plus_tan(order);
    let b = a.scale_arg(2);
    match family {
        AltFamily::A => a,
        AltFamily::APlus => half(&(&(&a + &Series::cos(order)) + &x)),
        AltFamily::AMinus => half(&(&(&a - &Series::cos(order)) - &x)),
        AltFamily::B => b,
        AltFamily::BPlus | AltFamily::D => half(&(&b + &one)),
        AltFamily::BMinus | AltFamily::BminusD => half(&(&b - &one)),
        AltFamily::DPlus => quarter(&(&(&b + &x.scale_arg(2)) + &Series::from_int(3, order))),
        AltFamily::DMinus => quarter(&(&(&b - &x.scale_arg(2)) - &Series::from_int(1, order))),
        AltFamily::BminusDPlus => half(&(&(&b - &one) + &x)),
        AltFamily::BminusDMinus => half(&(&(&b - &one) - &x)),
    }
}

/// Same as [`egf_alt`] except for B-D±, where the brute-force counts give
/// `(sec 2x + tan 2x - 1 ± 2x)/4`.
pub fn egf_alt_corrected(family: AltFamily, order: usize) -> Series {
    let b = sec_plus_tan(order).scale_arg(2);
    let one = Series::from_int(1, order);
    let two_x = Series::x(order).scale_arg(2);
    match family {
        AltFamily::BminusDPlus => quarter(&(&(&b - &one) + &two_x)),
        AltFamily::BminusDMinus => quarter(&(&(&b - &one) - &two_x)),
        other => egf_alt(other, order),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum SnakeFamily {
    B,
    BPlus,
    BMinus,
    D,
    BminusD,
    DPlus,
    DMinus,
    BminusDPlus,
    BminusDMinus,
}

impl SnakeFamily {
    pub const ALL: [SnakeFamily; 9] = [
        SnakeFamily::B,
        SnakeFamily::BPlus,
        SnakeFamily::BMinus,
        SnakeFamily::D,
        SnakeFamily::BminusD,
        SnakeFamily::DPlus,
        SnakeFamily::DMinus,
        SnakeFamily::BminusDPlus,
        SnakeFamily::BminusDMinus,
    ];
}

pub fn egf_snakes(family: SnakeFamily, order: usize) -> Series {
    let sin = Series::sin(order);
    let cos = Series::cos(order);
    let den = &cos - &sin;
    let sin2 = &sin * &sin;
    let cos2 = &cos * &cos;
    let over = |num: &Series| num.div(&den).expect("cos(0) - sin(0) = 1");
    match family {
        SnakeFamily::B => den.recip().expect("cos(0) - sin(0) = 1"),
        SnakeFamily::BPlus | SnakeFamily::D => over(&cos2),
        SnakeFamily::BMinus | SnakeFamily::BminusD => over(&sin2),
        SnakeFamily::DPlus => half(&over(&(&cos2.scale(&BigRational::from_integer(2.into())) - &sin2))),
        SnakeFamily::DMinus | SnakeFamily::BminusDPlus | SnakeFamily::BminusDMinus => {
            half(&over(&sin2))
        }
    }
}
