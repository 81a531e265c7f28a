//! Closed forms and recurrences for the signed alternating-run polynomials,
//! evaluated directly with no enumeration.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::enumerate::PolyFamily;
use crate::error::{domain, Error, Result};
use crate::perm::{ClassA, Step};
use crate::{BiPoly, UniPoly};

fn one_minus_pq() -> BiPoly {
    BiPoly::from_terms(&[(0, 0, 1), (1, 1, -1)])
}

fn one_minus_p() -> BiPoly {
    BiPoly::from_terms(&[(0, 0, 1), (1, 0, -1)])
}

fn one_minus_q() -> BiPoly {
    BiPoly::from_terms(&[(0, 0, 1), (0, 1, -1)])
}

fn t_poly() -> UniPoly {
    UniPoly::t()
}

fn one_minus_t() -> UniPoly {
    UniPoly::linear(-1)
}

fn one_plus_t() -> UniPoly {
    UniPoly::linear(1)
}

fn one_minus_t2() -> UniPoly {
    UniPoly::from_ints(&[1, 0, -1])
}

/// `Σ_{π ∈ S_n} (-1)^{inv} p^{pk} q^{val}`.
///
/// Zero for n ≡ 2, 3 (mod 4); `2(1-p)(1-q)(1-pq)^{2(k-1)}` for n = 4k, 4k+1.
/// n = 1 has no closed form and returns the single-element value 1.
pub fn thm_sgn_altrun_biv(n: usize) -> Result<BiPoly> {
    match n {
        0 => domain("n must be positive"),
        1 => Ok(BiPoly::one()),
        _ if n % 4 >= 2 => Ok(BiPoly::zero()),
        _ => {
            let k = (n / 4) as u32;
            let f = &(&one_minus_p() * &one_minus_q()) * &one_minus_pq().pow(2 * (k - 1));
            Ok(f.scale(&BigInt::from(2)))
        }
    }
}

/// The class-restricted signed polynomial for S_n, n ≥ 2.
pub fn thm_class_biv(n: usize, class: ClassA) -> Result<BiPoly> {
    if n < 2 {
        return domain("type A end classes need n >= 2");
    }
    if n % 4 >= 2 {
        let k = (n / 4) as u32;
        let aa = one_minus_pq().pow(2 * k);
        return Ok(match class {
            ClassA::AA => aa,
            ClassA::DD => -&aa,
            ClassA::AD | ClassA::DA => BiPoly::zero(),
        });
    }
    if n < 4 {
        return domain("the n = 4k, 4k+1 class formulas need k >= 1");
    }
    let k = (n / 4) as u32;
    let base = one_minus_pq().pow(2 * (k - 1));
    Ok(match class {
        ClassA::AA | ClassA::DD => &BiPoly::from_terms(&[(0, 0, 1), (1, 1, 1)]) * &base,
        ClassA::AD => &BiPoly::from_terms(&[(1, 0, -2)]) * &base,
        ClassA::DA => &BiPoly::from_terms(&[(0, 1, -2)]) * &base,
    })
}

/// All four class polynomials `[aa, ad, da, dd]` for S_n, computed from the
/// n = 2 values by the odd/even recurrences. The da and dd classes are
/// closed off with `da(p,q) = ad(q,p)` and `dd = ±aa` by n mod 4.
pub fn recurrence_classes(n: usize) -> Result<[BiPoly; 4]> {
    if n < 2 {
        return domain("type A end classes need n >= 2");
    }
    // n = 2: 12 is aa with sign +, 21 is dd with sign -.
    let mut aa = BiPoly::one();
    let mut ad = BiPoly::zero();
    let mut da = BiPoly::zero();
    let mut dd = BiPoly::from_int(-1);
    let p = BiPoly::p();
    let q = BiPoly::q();
    let pq = &p * &q;
    for m in 3..=n {
        let (new_ad, new_aa) = if m % 2 == 1 {
            (
                &(&(-&(&pq * &ad)) - &(&p * &aa)) - &(&p * &dd),
                &(&(&q * &ad) - &(&p * &da)) + &aa,
            )
        } else {
            (
                &(-&(&p * &aa)) + &(&p * &dd),
                &(&(&(&BiPoly::one() + &pq) * &aa) + &(&q * &ad)) + &(&p * &da),
            )
        };
        ad = new_ad;
        aa = new_aa;
        da = ad.swap_pq();
        dd = if m % 4 <= 1 { aa.clone() } else { -&aa };
    }
    Ok([aa, ad, da, dd])
}

pub fn recurrence_class_biv(n: usize, class: ClassA) -> Result<BiPoly> {
    let [aa, ad, da, dd] = recurrence_classes(n)?;
    Ok(match class {
        ClassA::AA => aa,
        ClassA::AD => ad,
        ClassA::DA => da,
        ClassA::DD => dd,
    })
}

/// `Σ_{π ∈ S_n} (-1)^{inv} t^{altruns}`: `2t(1-t)^{2k}(1+t)^{2k-2}` for
/// n = 4k, 4k+1 and zero for n ≡ 2, 3. n = 1 gives `t`.
pub fn cor_sgn_altrun_uni(n: usize) -> Result<UniPoly> {
    match n {
        0 => domain("n must be positive"),
        1 => Ok(t_poly()),
        _ if n % 4 >= 2 => Ok(UniPoly::zero()),
        _ => {
            let k = (n / 4) as u32;
            let f = &(&t_poly() * &one_minus_t().pow(2 * k)) * &one_plus_t().pow(2 * k - 2);
            Ok(f.scale(&BigInt::from(2)))
        }
    }
}

fn binom(n: i64, k: i64) -> BigInt {
    if k < 0 || n < 0 || k > n {
        return BigInt::zero();
    }
    let mut acc = BigInt::from(1);
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

fn sign_pow(e: i64) -> i64 {
    if e.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// `R^+_{n,ℓ} - R^-_{n,ℓ}`, for n ≥ 2 and 1 ≤ ℓ ≤ n - 1.
pub fn g_coeff(n: usize, l: usize) -> Result<BigInt> {
    if n < 2 || l == 0 || l >= n {
        return domain(format!("G_(n,l) needs n >= 2 and 1 <= l <= n-1, got ({n}, {l})"));
    }
    if n % 4 >= 2 || n < 4 {
        return Ok(BigInt::zero());
    }
    let m = 2 * (n / 4) as i64 - 2;
    let l = l as i64;
    Ok(if l % 2 == 0 {
        let j = (l - 2) / 2;
        BigInt::from(-4 * sign_pow(j)) * binom(m, j)
    } else {
        let j = (l - 1) / 2;
        BigInt::from(2 * sign_pow(j)) * binom(m, j)
            + BigInt::from(2 * sign_pow(j - 1)) * binom(m, j - 1)
    })
}

/// `R^±_{n,ℓ} = (F ± G)/2` where `F = R_{n,ℓ}` is supplied by the caller.
pub fn r_pm_coeff(f: &BigInt, n: usize, l: usize, plus: bool) -> Result<BigInt> {
    let g = g_coeff(n, l)?;
    let s = if plus { f + g } else { f - g };
    let (q, r) = s.div_rem(&BigInt::from(2));
    if !r.is_zero() {
        return Err(Error::Integrity(format!("F ± G = {s} is odd at (n, l) = ({n}, {l})")));
    }
    Ok(q)
}

/// Signed B_n polynomials `(end a, end d, total)` with sign inv_B.
pub fn thm_b_formulas(n: usize) -> Result<(BiPoly, BiPoly, BiPoly)> {
    if n == 0 {
        return domain("n must be positive");
    }
    let k = (n / 2) as u32;
    Ok(if n.is_multiple_of(2) {
        let base = one_minus_pq().pow(k - 1);
        let a = &one_minus_q() * &base;
        let d = &one_minus_p() * &base;
        let total = &BiPoly::from_terms(&[(0, 0, 2), (1, 0, -1), (0, 1, -1)]) * &base;
        (a, d, total)
    } else {
        let a = one_minus_pq().pow(k);
        let d = -&a;
        (a, d, BiPoly::zero())
    })
}

/// `Σ_{π ∈ B_n} (-1)^{inv_B} t^{altruns}`.
pub fn cor_b_uni(n: usize) -> Result<UniPoly> {
    if n == 0 {
        return domain("n must be positive");
    }
    if n % 2 == 1 {
        return Ok(UniPoly::zero());
    }
    let k = (n / 2) as u32;
    let f = &(&t_poly() * &one_minus_t()) * &one_minus_t2().pow(k - 1);
    Ok(f.scale(&BigInt::from(2)))
}

/// Signed D_n polynomials `(end a, end d, total)` with sign inv_D.
pub fn thm_d_formulas(n: usize) -> Result<(BiPoly, BiPoly, BiPoly)> {
    let (a, d_b, _) = thm_b_formulas(n)?;
    let d = if n.is_multiple_of(2) { d_b } else { BiPoly::zero() };
    let total = &a + &d;
    Ok((a, d, total))
}

/// `Σ_{π ∈ D_n} (-1)^{inv_D} t^{altruns}`.
pub fn cor_d_uni(n: usize) -> Result<UniPoly> {
    if n == 0 {
        return domain("n must be positive");
    }
    let k = (n / 2) as u32;
    if n.is_multiple_of(2) {
        cor_b_uni(n)
    } else {
        Ok(&t_poly() * &one_minus_t2().pow(k))
    }
}

/// `(R^{D,>} - R^{B-D,>}, R^D - R^{B-D})`.
pub fn gao_sun_differences(n: usize) -> Result<(UniPoly, UniPoly)> {
    if n == 0 {
        return domain("n must be positive");
    }
    let k = (n / 2) as u32;
    Ok(if n.is_multiple_of(2) {
        let first = &(&t_poly() * &one_minus_t()) * &one_minus_t2().pow(k - 1);
        let total = first.scale(&BigInt::from(2));
        (first, total)
    } else {
        (&t_poly() * &one_minus_t2().pow(k), UniPoly::zero())
    })
}

/// The power of `(1+t)` guaranteed to divide `family` at `n`.
pub fn divisibility_claim(family: PolyFamily, n: usize) -> Result<u32> {
    use PolyFamily::*;
    match family {
        R | RPlus | RMinus => {
            if n < 4 {
                return domain(format!("the type A divisibility claims need n >= 4, got {n}"));
            }
            let m = ((n - 2) / 2) as u32;
            Ok(match family {
                R => m,
                _ if n % 4 <= 1 => m - 1,
                _ => m,
            })
        }
        _ => {
            if n == 0 {
                return domain("n must be positive");
            }
            Ok(((n - 1) / 2) as u32)
        }
    }
}

/// Smallest n for which the moment identity of order k is asserted.
pub fn moment_min_n(family: PolyFamily, n_mod_4: usize, k: u32) -> usize {
    use PolyFamily::*;
    let k = k as usize;
    match family {
        R => 2 * k + 4,
        RPlus | RMinus if n_mod_4 <= 1 => 2 * k + 6,
        RPlus | RMinus => 2 * k + 4,
        _ => 2 * k + 3,
    }
}

/// Snake counts `S^{+} - S^{-}` for B and D: +1 when n ≡ 0, 1 (mod 4), else -1.
pub fn snake_difference(n: usize) -> i64 {
    if n % 4 <= 1 {
        1
    } else {
        -1
    }
}

/// `E^+_n - E^-_n` in S_n for n ≥ 2.
pub fn alternating_difference_a(n: usize) -> i64 {
    match n % 4 {
        0 => 1,
        2 => -1,
        _ => 0,
    }
}

/// End-class polynomial by step, for callers holding a [`Step`].
pub fn thm_b_end(n: usize, end: Step) -> Result<BiPoly> {
    let (a, d, _) = thm_b_formulas(n)?;
    Ok(if end == Step::Ascent { a } else { d })
}

pub fn thm_d_end(n: usize, end: Step) -> Result<BiPoly> {
    let (a, d, _) = thm_d_formulas(n)?;
    Ok(if end == Step::Ascent { a } else { d })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(t: &[(u32, u32, i64)]) -> BiPoly {
        BiPoly::from_terms(t)
    }

    #[test]
    fn sgn_altrun_branches() {
        assert_eq!(thm_sgn_altrun_biv(4).unwrap(), b(&[(0, 0, 2), (1, 0, -2), (0, 1, -2), (1, 1, 2)]));
        assert!(thm_sgn_altrun_biv(6).unwrap().is_zero());
        assert_eq!(thm_sgn_altrun_biv(5).unwrap(), thm_sgn_altrun_biv(4).unwrap());
        assert!(thm_sgn_altrun_biv(0).is_err());
    }

    #[test]
    fn class_branches() {
        assert_eq!(thm_class_biv(4, ClassA::DD).unwrap(), b(&[(0, 0, 1), (1, 1, 1)]));
        assert_eq!(thm_class_biv(6, ClassA::AA).unwrap(), b(&[(0, 0, 1), (1, 1, -2), (2, 2, 1)]));
        assert!(thm_class_biv(6, ClassA::AD).unwrap().is_zero());
        assert_eq!(thm_class_biv(4, ClassA::AD).unwrap(), b(&[(1, 0, -2)]));
    }

    #[test]
    fn recurrence_agrees_with_closed_form() {
        for n in 4..=12 {
            for class in ClassA::ALL {
                assert_eq!(
                    recurrence_class_biv(n, class).unwrap(),
                    thm_class_biv(n, class).unwrap(),
                    "n = {n}, {class:?}"
                );
            }
        }
        assert_eq!(recurrence_class_biv(5, ClassA::AA).unwrap(), recurrence_class_biv(4, ClassA::AA).unwrap());
    }

    #[test]
    fn classes_sum_to_total_and_diagonal() {
        for n in 4..=13 {
            let sum = ClassA::ALL
                .iter()
                .fold(BiPoly::zero(), |acc, &c| &acc + &thm_class_biv(n, c).unwrap());
            assert_eq!(sum, thm_sgn_altrun_biv(n).unwrap());
        }
        for n in 1..=9 {
            let diag = &t_poly() * &thm_sgn_altrun_biv(n).unwrap().substitute_diag();
            assert_eq!(diag, cor_sgn_altrun_uni(n).unwrap(), "n = {n}");
        }
    }

    #[test]
    fn univariate_examples() {
        assert_eq!(cor_sgn_altrun_uni(4).unwrap(), UniPoly::from_ints(&[0, 2, -4, 2]));
        assert!(cor_sgn_altrun_uni(7).unwrap().is_zero());
        let r8 = cor_sgn_altrun_uni(8).unwrap();
        assert_eq!(r8.one_plus_t_multiplicity().unwrap(), 2);
    }

    #[test]
    fn g_examples() {
        assert_eq!(g_coeff(8, 2).unwrap(), BigInt::from(-4));
        assert_eq!(g_coeff(8, 3).unwrap(), BigInt::from(-2));
        assert_eq!(r_pm_coeff(&BigInt::from(252), 8, 2, true).unwrap(), BigInt::from(124));
        assert_eq!(r_pm_coeff(&BigInt::from(2766), 8, 3, true).unwrap(), BigInt::from(1382));
        for l in 1..6 {
            assert!(g_coeff(6, l).unwrap().is_zero());
        }
        assert!(g_coeff(8, 8).is_err());
    }

    #[test]
    fn g_matches_signed_univariate() {
        for n in 4..=17 {
            let s = cor_sgn_altrun_uni(n).unwrap();
            for l in 1..n {
                assert_eq!(g_coeff(n, l).unwrap(), s.coeff(l), "n = {n}, l = {l}");
            }
        }
    }

    #[test]
    fn type_b_and_d_examples() {
        assert_eq!(thm_b_formulas(2).unwrap().2, b(&[(0, 0, 2), (1, 0, -1), (0, 1, -1)]));
        assert_eq!(thm_b_formulas(3).unwrap().0, b(&[(0, 0, 1), (1, 1, -1)]));
        assert_eq!(thm_b_formulas(1).unwrap().1, BiPoly::from_int(-1));
        assert!(thm_d_formulas(3).unwrap().1.is_zero());
        assert_eq!(cor_d_uni(3).unwrap(), UniPoly::from_ints(&[0, 1, 0, -1]));
        assert_eq!(thm_d_formulas(2).unwrap().1, b(&[(0, 0, 1), (1, 0, -1)]));
        for n in 1..=10 {
            let (_, _, tb) = thm_b_formulas(n).unwrap();
            assert_eq!(&t_poly() * &tb.substitute_diag(), cor_b_uni(n).unwrap());
            let (_, _, td) = thm_d_formulas(n).unwrap();
            assert_eq!(&t_poly() * &td.substitute_diag(), cor_d_uni(n).unwrap());
        }
    }

    #[test]
    fn gao_sun_examples() {
        let (_, total4) = gao_sun_differences(4).unwrap();
        assert_eq!(total4, UniPoly::from_ints(&[0, 2, -2, -2, 2]));
        assert!(gao_sun_differences(5).unwrap().1.is_zero());
        assert_eq!(gao_sun_differences(3).unwrap().0, UniPoly::from_ints(&[0, 1, 0, -1]));
    }

    #[test]
    fn claims() {
        assert_eq!(divisibility_claim(PolyFamily::R, 8).unwrap(), 3);
        assert_eq!(divisibility_claim(PolyFamily::RPlus, 8).unwrap(), 2);
        assert_eq!(divisibility_claim(PolyFamily::RMinus, 6).unwrap(), 2);
        assert_eq!(divisibility_claim(PolyFamily::RB, 7).unwrap(), 3);
        assert!(divisibility_claim(PolyFamily::R, 3).is_err());
    }
}
