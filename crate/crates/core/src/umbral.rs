//! The q-umbral pairing between series (as functionals) and polynomials,
//! the action of series as operators on polynomials, Sheffer orthogonality
//! checks for Appell pairs `(g(t), t)`, and the connection-coefficient
//! engines expressing a polynomial in the q-Euler bases.

use num_traits::One;

use crate::dpseries::DPSeries;
use crate::error::{Error, Result};
use crate::families::PolyFamily;
use crate::qcomb::{binomial, multinomial_sum, q_binomial_rat, q_factorial_rat};
use crate::qscalar::QRat;
use crate::xpoly::XPoly;

fn check_truncation(f: &DPSeries, p: &XPoly) -> Result<()> {
    match p.degree() {
        Some(d) if d > f.order() => Err(Error::TruncationTooSmall {
            order: f.order(),
            degree: d,
        }),
        _ => Ok(()),
    }
}

/// `<f(t) | p(x)> = Σ_k a_k p_k`, the bilinear extension of
/// `<f(t) | x^n> = a_n`. For `f = t^k` this is `<t^k | x^n> = [n]_q! δ_{n,k}`.
pub fn pair(f: &DPSeries, p: &XPoly) -> Result<QRat> {
    check_truncation(f, p)?;
    Ok(p.coeffs()
        .iter()
        .enumerate()
        .filter(|(k, c)| !c.is_zero() && !f.coeff(*k).is_zero())
        .map(|(k, c)| f.coeff(k) * c)
        .sum())
}

/// The operator image `f(t) p(x) = Σ_k (a_k / [k]_q!) D_q^k p(x)`.
///
/// Computed coefficientwise: the x^j coefficient is
/// `Σ_k a_k [j+k choose k]_q p_{j+k}`.
pub fn apply(f: &DPSeries, p: &XPoly) -> Result<XPoly> {
    check_truncation(f, p)?;
    let Some(deg) = p.degree() else {
        return Ok(XPoly::zero());
    };
    let coeffs = (0..=deg)
        .map(|j| {
            (0..=deg - j)
                .filter(|&k| !f.coeff(k).is_zero() && !p.coeff(j + k).is_zero())
                .map(|k| {
                    &(f.coeff(k) * &p.coeff(j + k)) * &q_binomial_rat((j + k) as i64, k as i64)
                })
                .sum()
        })
        .collect();
    Ok(XPoly::from_coeffs(coeffs))
}

/// Rebuild a series from its values on monomials:
/// `f(t) = Σ_k <f | x^k> t^k / [k]_q!`.
pub fn series_from_moments(f: &DPSeries) -> Result<DPSeries> {
    (0..=f.order())
        .map(|k| pair(f, &XPoly::monomial(QRat::one(), k)))
        .collect::<Result<Vec<_>>>()
        .map(DPSeries::from_coeffs)
}

/// Rebuild a polynomial from its moments:
/// `p(x) = Σ_k <t^k | p> x^k / [k]_q!`.
pub fn poly_from_moments(p: &XPoly) -> Result<XPoly> {
    let Some(deg) = p.degree() else {
        return Ok(XPoly::zero());
    };
    let mut out = XPoly::zero();
    for k in 0..=deg {
        let moment = pair(&DPSeries::t_pow(k, deg), p)?;
        out = &out + &XPoly::monomial(&moment / &q_factorial_rat(k), k);
    }
    Ok(out)
}

/// A failed orthogonality relation `<g t^k | S_n> ≠ [n]_q! δ_{n,k}`.
#[derive(Clone, Debug, PartialEq)]
pub struct ShefferMismatch {
    pub n: usize,
    pub k: usize,
    pub lhs: QRat,
    pub rhs: QRat,
}

/// Verify `S_n ~ (g(t), t)`: `<g(t) t^k | S_n(x)> = [n]_q! δ_{n,k}` for all
/// `0 ≤ n, k ≤ n_max`. Returns every mismatch; empty means the relation holds.
pub fn sheffer_check(
    g: &DPSeries,
    family: &PolyFamily,
    n_max: usize,
) -> Result<Vec<ShefferMismatch>> {
    if g.order() < n_max {
        return Err(Error::TruncationTooSmall {
            order: g.order(),
            degree: n_max,
        });
    }
    let g = g.truncate(n_max);
    let mut mismatches = Vec::new();
    for k in 0..=n_max {
        let functional = g.try_mul(&DPSeries::t_pow(k, n_max))?;
        for n in 0..=n_max.min(family.len().saturating_sub(1)) {
            let lhs = pair(&functional, family.member(n))?;
            let rhs = if n == k {
                q_factorial_rat(n)
            } else {
                QRat::zero()
            };
            if lhs != rhs {
                mismatches.push(ShefferMismatch { n, k, lhs, rhs });
            }
        }
    }
    Ok(mismatches)
}

/// Coefficients `b_k` with `p(x) = Σ_k b_k E_{k,q}(x)`:
/// `b_k = (p^(k)(1) + p^(k)(0)) / (2 [k]_q!)` where `p^(k) = D_q^k p`.
pub fn expand_in_euler(p: &XPoly) -> Vec<QRat> {
    let Some(deg) = p.degree() else {
        return Vec::new();
    };
    let half = QRat::from_ratio(1, 2);
    let mut derivative = p.clone();
    let mut out = Vec::with_capacity(deg + 1);
    for k in 0..=deg {
        let boundary = &derivative.eval(&QRat::one()) + &derivative.eval(&QRat::zero());
        out.push(&(&boundary * &half) / &q_factorial_rat(k));
        derivative = derivative.dq();
    }
    out
}

/// Coefficients `b_k` with `p(x) = Σ_k b_k E^(r)_{k,q}(x)`, from the
/// functional `((e_q(t)+1)/2)^r t^k` expanded through q-multinomials:
///
/// `b_k = 2^-r / [k]_q! Σ_{m=0}^{n-k} Σ_{l=0}^{r} C(r,l) Σ_{i_1+..+i_l=m} (m; i)_q p^(m+k)(0) / [m]_q!`
///
/// The l = 0 inner sum is the empty composition, contributing 1 at m = 0.
pub fn expand_in_euler_r(p: &XPoly, r: usize) -> Vec<QRat> {
    let Some(deg) = p.degree() else {
        return Vec::new();
    };
    // p^(j)(0) for j = 0..=deg
    let mut at_zero = Vec::with_capacity(deg + 1);
    let mut derivative = p.clone();
    for _ in 0..=deg {
        at_zero.push(derivative.eval(&QRat::zero()));
        derivative = derivative.dq();
    }
    // weight(m) = Σ_l C(r,l) Σ_{compositions} multinomial = <(e_q(t)+1)^r | x^m>
    let weights: Vec<QRat> = (0..=deg)
        .map(|m| {
            (0..=r)
                .map(|l| QRat::from(multinomial_sum(m, l)).scale(&binomial(r, l)))
                .sum()
        })
        .collect();
    let two_pow = QRat::from_bigrat(num_rational::BigRational::from_integer(
        num_bigint::BigInt::one() << r,
    ));
    (0..=deg)
        .map(|k| {
            let inner: QRat = (0..=deg - k)
                .filter(|&m| !at_zero[m + k].is_zero())
                .map(|m| &(&weights[m] * &at_zero[m + k]) / &q_factorial_rat(m))
                .sum();
            &inner / &(&two_pow * &q_factorial_rat(k))
        })
        .collect()
}

/// `Σ_k coeffs[k] basis[k]`.
///
/// # Panics
/// If `basis` is shorter than `coeffs`.
pub fn reconstruct(coeffs: &[QRat], basis: &[XPoly]) -> XPoly {
    coeffs
        .iter()
        .zip(basis)
        .filter(|(c, _)| !c.is_zero())
        .map(|(c, s)| s.scale(c))
        .sum()
}
