//! Exact univariate and bivariate polynomials over an integer-like ring.
//!
//! Both types are generic over the coefficient; the crate root fixes the
//! coefficient to `BigInt` as [`crate::UniPoly`] and [`crate::BiPoly`].

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{FromPrimitive, Num};
use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};

/// Coefficient ring for [`Univariate`] and [`Bivariate`].
pub trait Coeff:
    Clone + fmt::Debug + fmt::Display + PartialEq + Num + Neg<Output = Self> + FromPrimitive
{
}

impl<T> Coeff for T where
    T: Clone + fmt::Debug + fmt::Display + PartialEq + Num + Neg<Output = Self> + FromPrimitive
{
}

fn is_negative<T: Coeff>(c: &T) -> bool {
    c.to_string().starts_with('-')
}

// ---------------------------------------------------------------------------

/// Dense polynomial in `t`; `coeffs[i]` is the coefficient of `t^i`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Univariate<T> {
    coeffs: Vec<T>,
}

impl<T: Coeff> Univariate<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Univariate { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| T::from_i64(c).expect("i64 fits")).collect())
    }

    pub fn zero() -> Self {
        Univariate { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(T::one())
    }

    pub fn constant(c: T) -> Self {
        Self::new(vec![c])
    }

    pub fn t() -> Self {
        Self::monomial(T::one(), 1)
    }

    pub fn monomial(c: T, k: usize) -> Self {
        let mut coeffs = vec![T::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    /// `1 + c·t`.
    pub fn linear(c: i64) -> Self {
        Self::from_ints(&[1, c])
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> T {
        self.coeffs.get(k).cloned().unwrap_or_else(T::zero)
    }

    pub fn eval_int(&self, x: &T) -> T {
        self.coeffs.iter().rev().fold(T::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    pub fn scale(&self, c: &T) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    /// Multiply by `t^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![T::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Univariate { coeffs }
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Exact quotient by `1 + t`, or `None` if `1 + t` does not divide.
    pub fn div_one_plus_t(&self) -> Option<Self> {
        let Some(deg) = self.degree() else {
            return Some(Self::zero());
        };
        if deg == 0 {
            return None;
        }
        // Synthetic division from the top: q_{k-1} = a_k - q_k.
        let mut q = vec![T::zero(); deg];
        let mut carry = T::zero();
        for k in (1..=deg).rev() {
            let qk = self.coeffs[k].clone() - carry;
            q[k - 1] = qk.clone();
            carry = qk;
        }
        if (self.coeffs[0].clone() - carry).is_zero() {
            Some(Self::new(q))
        } else {
            None
        }
    }

    /// Largest `m` with `(1+t)^m | self`.
    pub fn one_plus_t_multiplicity(&self) -> Result<u32> {
        if self.is_zero() {
            return domain("(1+t)-multiplicity of the zero polynomial is undefined");
        }
        let mut m = 0;
        let mut f = self.clone();
        while let Some(q) = f.div_one_plus_t() {
            f = q;
            m += 1;
        }
        Ok(m)
    }

    /// `(Σ_{s odd} s^k f_s, Σ_{s even, s ≥ 2} s^k f_s)`.
    pub fn moment_sums(&self, k: u32) -> (T, T) {
        let mut odd = T::zero();
        let mut even = T::zero();
        for (s, c) in self.coeffs.iter().enumerate().skip(1) {
            let w = num_traits::pow(T::from_usize(s).expect("usize fits"), k as usize) * c.clone();
            if s % 2 == 1 {
                odd = odd + w;
            } else {
                even = even + w;
            }
        }
        (odd, even)
    }

    pub fn moment_check(&self, k: u32) -> bool {
        let (odd, even) = self.moment_sums(k);
        odd == even
    }

    pub fn to_json_value(&self) -> PolyJson {
        PolyJson {
            vars: vec!["t".into()],
            terms: self
                .coeffs
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| TermJson { exp: vec![i as u32], coef: c.to_string() })
                .collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_json_value()).expect("plain data serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        match AnyPoly::<T>::from_json(s)? {
            AnyPoly::Uni(f) => Ok(f),
            AnyPoly::Bi(_) => Err(Error::Parse("expected a polynomial in t".into())),
        }
    }

    pub fn to_latex(&self) -> String {
        render(self.coeffs.iter().enumerate().map(|(i, c)| (c, vec![("t", i as u32)])), true)
    }
}

impl<T: Coeff> fmt::Display for Univariate<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render(
            self.coeffs.iter().enumerate().map(|(i, c)| (c, vec![("t", i as u32)])),
            false,
        ))
    }
}

impl<T: Coeff> fmt::Debug for Univariate<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl<T: Coeff> Add for &Univariate<T> {
    type Output = Univariate<T>;
    fn add(self, rhs: Self) -> Univariate<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Univariate::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl<T: Coeff> Sub for &Univariate<T> {
    type Output = Univariate<T>;
    fn sub(self, rhs: Self) -> Univariate<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Univariate::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl<T: Coeff> Mul for &Univariate<T> {
    type Output = Univariate<T>;
    fn mul(self, rhs: Self) -> Univariate<T> {
        if self.is_zero() || rhs.is_zero() {
            return Univariate::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Univariate::new(out)
    }
}

impl<T: Coeff> Neg for &Univariate<T> {
    type Output = Univariate<T>;
    fn neg(self) -> Univariate<T> {
        Univariate { coeffs: self.coeffs.iter().map(|c| -c.clone()).collect() }
    }
}

// ---------------------------------------------------------------------------

/// Sparse polynomial in `p` and `q`, keyed by `(deg_p, deg_q)`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Bivariate<T> {
    terms: BTreeMap<(u32, u32), T>,
}

impl<T: Coeff> Bivariate<T> {
    pub fn zero() -> Self {
        Bivariate { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::constant(T::one())
    }

    pub fn constant(c: T) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn from_int(c: i64) -> Self {
        Self::constant(T::from_i64(c).expect("i64 fits"))
    }

    pub fn monomial(c: T, i: u32, j: u32) -> Self {
        let mut f = Self::zero();
        f.add_term(i, j, c);
        f
    }

    pub fn p() -> Self {
        Self::monomial(T::one(), 1, 0)
    }

    pub fn q() -> Self {
        Self::monomial(T::one(), 0, 1)
    }

    /// Build from `(i, j, c)` triples; repeated exponents accumulate.
    pub fn from_terms(terms: &[(u32, u32, i64)]) -> Self {
        let mut f = Self::zero();
        for &(i, j, c) in terms {
            f.add_term(i, j, T::from_i64(c).expect("i64 fits"));
        }
        f
    }

    pub fn add_term(&mut self, i: u32, j: u32, c: T) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry((i, j)).or_insert_with(T::zero);
        *slot = slot.clone() + c;
        if slot.is_zero() {
            self.terms.remove(&(i, j));
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &T)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, i: u32, j: u32) -> T {
        self.terms.get(&(i, j)).cloned().unwrap_or_else(T::zero)
    }

    /// Total degree, `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|(i, j)| i + j).max()
    }

    pub fn scale(&self, c: &T) -> Self {
        let mut f = Self::zero();
        for (&(i, j), a) in &self.terms {
            f.add_term(i, j, a.clone() * c.clone());
        }
        f
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }

    pub fn swap_pq(&self) -> Self {
        Bivariate { terms: self.terms.iter().map(|(&(i, j), c)| ((j, i), c.clone())).collect() }
    }

    /// Set `p = q = t`.
    pub fn substitute_diag(&self) -> Univariate<T> {
        let deg = self.degree().unwrap_or(0) as usize;
        let mut coeffs = vec![T::zero(); deg + 1];
        for (&(i, j), c) in &self.terms {
            let k = (i + j) as usize;
            coeffs[k] = coeffs[k].clone() + c.clone();
        }
        Univariate::new(coeffs)
    }

    pub fn eval_int(&self, p: &T, q: &T) -> T {
        self.terms.iter().fold(T::zero(), |acc, (&(i, j), c)| {
            acc + c.clone()
                * num_traits::pow(p.clone(), i as usize)
                * num_traits::pow(q.clone(), j as usize)
        })
    }

    pub fn to_json_value(&self) -> PolyJson {
        PolyJson {
            vars: vec!["p".into(), "q".into()],
            terms: self
                .terms
                .iter()
                .map(|(&(i, j), c)| TermJson { exp: vec![i, j], coef: c.to_string() })
                .collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_json_value()).expect("plain data serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        match AnyPoly::<T>::from_json(s)? {
            AnyPoly::Bi(f) => Ok(f),
            AnyPoly::Uni(_) => Err(Error::Parse("expected a polynomial in p, q".into())),
        }
    }

    pub fn to_latex(&self) -> String {
        render(self.terms.iter().map(|(&(i, j), c)| (c, vec![("p", i), ("q", j)])), true)
    }
}

impl<T: Coeff> fmt::Display for Bivariate<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render(
            self.terms.iter().map(|(&(i, j), c)| (c, vec![("p", i), ("q", j)])),
            false,
        ))
    }
}

impl<T: Coeff> fmt::Debug for Bivariate<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl<T: Coeff> Add for &Bivariate<T> {
    type Output = Bivariate<T>;
    fn add(self, rhs: Self) -> Bivariate<T> {
        let mut out = self.clone();
        for (&(i, j), c) in &rhs.terms {
            out.add_term(i, j, c.clone());
        }
        out
    }
}

impl<T: Coeff> Sub for &Bivariate<T> {
    type Output = Bivariate<T>;
    fn sub(self, rhs: Self) -> Bivariate<T> {
        let mut out = self.clone();
        for (&(i, j), c) in &rhs.terms {
            out.add_term(i, j, -c.clone());
        }
        out
    }
}

impl<T: Coeff> Mul for &Bivariate<T> {
    type Output = Bivariate<T>;
    fn mul(self, rhs: Self) -> Bivariate<T> {
        let mut out = Bivariate::zero();
        for (&(i, j), a) in &self.terms {
            for (&(k, l), b) in &rhs.terms {
                out.add_term(i + k, j + l, a.clone() * b.clone());
            }
        }
        out
    }
}

impl<T: Coeff> Neg for &Bivariate<T> {
    type Output = Bivariate<T>;
    fn neg(self) -> Bivariate<T> {
        Bivariate { terms: self.terms.iter().map(|(&k, c)| (k, -c.clone())).collect() }
    }
}

macro_rules! forward_owned {
    ($ty:ident) => {
        impl<T: Coeff> Add for $ty<T> {
            type Output = $ty<T>;
            fn add(self, rhs: Self) -> $ty<T> {
                &self + &rhs
            }
        }
        impl<T: Coeff> Sub for $ty<T> {
            type Output = $ty<T>;
            fn sub(self, rhs: Self) -> $ty<T> {
                &self - &rhs
            }
        }
        impl<T: Coeff> Mul for $ty<T> {
            type Output = $ty<T>;
            fn mul(self, rhs: Self) -> $ty<T> {
                &self * &rhs
            }
        }
        impl<T: Coeff> Neg for $ty<T> {
            type Output = $ty<T>;
            fn neg(self) -> $ty<T> {
                -&self
            }
        }
    };
}

forward_owned!(Univariate);
forward_owned!(Bivariate);

// ---------------------------------------------------------------------------
// Rendering and the canonical JSON form.

fn render<'a, T: Coeff + 'a>(
    terms: impl Iterator<Item = (&'a T, Vec<(&'static str, u32)>)>,
    latex: bool,
) -> String {
    let mut out = String::new();
    for (c, vars) in terms {
        if c.is_zero() {
            continue;
        }
        let neg = is_negative(c);
        let abs = if neg { -c.clone() } else { c.clone() };
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let mut mono = String::new();
        for (v, e) in vars {
            match e {
                0 => {}
                1 => mono.push_str(v),
                e if latex => mono.push_str(&format!("{v}^{{{e}}}")),
                e => mono.push_str(&format!("{v}^{e}")),
            }
        }
        if mono.is_empty() || !abs.is_one() {
            out.push_str(&abs.to_string());
        }
        out.push_str(&mono);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub exp: Vec<u32>,
    pub coef: String,
}

/// Canonical serialized form: `{"vars": [...], "terms": [{"exp": [..], "coef": "<decimal>"}]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyJson {
    pub vars: Vec<String>,
    pub terms: Vec<TermJson>,
}

#[derive(Debug, Clone, PartialEq)]
pub enum AnyPoly<T: Coeff> {
    Uni(Univariate<T>),
    Bi(Bivariate<T>),
}

impl<T: Coeff> AnyPoly<T> {
    pub fn from_json(s: &str) -> Result<Self> {
        let raw: PolyJson = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        Self::from_json_value(&raw)
    }

    pub fn from_json_value(raw: &PolyJson) -> Result<Self> {
        let parse = |s: &str| {
            T::from_str_radix(s, 10).map_err(|_| Error::Parse(format!("bad coefficient `{s}`")))
        };
        let vars: Vec<&str> = raw.vars.iter().map(String::as_str).collect();
        match vars.as_slice() {
            ["t"] => {
                let mut f = Univariate::zero();
                for term in &raw.terms {
                    let [e] = term.exp[..] else {
                        return Err(Error::Parse("univariate term needs one exponent".into()));
                    };
                    f = &f + &Univariate::monomial(parse(&term.coef)?, e as usize);
                }
                Ok(AnyPoly::Uni(f))
            }
            ["p", "q"] => {
                let mut f = Bivariate::zero();
                for term in &raw.terms {
                    let [i, j] = term.exp[..] else {
                        return Err(Error::Parse("bivariate term needs two exponents".into()));
                    };
                    f.add_term(i, j, parse(&term.coef)?);
                }
                Ok(AnyPoly::Bi(f))
            }
            other => Err(Error::Parse(format!("unsupported variables {other:?}"))),
        }
    }

    pub fn to_json(&self) -> String {
        match self {
            AnyPoly::Uni(f) => f.to_json(),
            AnyPoly::Bi(f) => f.to_json(),
        }
    }
}
