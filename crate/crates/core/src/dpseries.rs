//! Truncated divided-power series `f(t) = Σ_{k≤N} a_k t^k / [k]_q!`.
//!
//! The stored `a_k` are exactly the values `<f(t) | x^k>`, so a series is at
//! once an element of the q-umbral algebra and a linear functional on
//! polynomials. Products are q-binomial convolutions:
//! `c_n = Σ_k [n choose k]_q a_k b_{n-k}`.

use std::ops::{Add, Neg, Sub};

use crate::error::{Error, Result};
use crate::qcomb::{q_binomial_rat, q_factorial_rat, q_int_rat};
use crate::qscalar::QRat;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DPSeries {
    coeffs: Vec<QRat>,
}

impl DPSeries {
    /// Series with the given divided-power coefficients `a_0..a_N`.
    ///
    /// # Panics
    /// If `coeffs` is empty: every series carries at least `a_0`.
    pub fn from_coeffs(coeffs: Vec<QRat>) -> Self {
        assert!(
            !coeffs.is_empty(),
            "a series needs at least one coefficient"
        );
        Self { coeffs }
    }

    pub fn constant(c: QRat, order: usize) -> Self {
        let mut coeffs = vec![QRat::zero(); order + 1];
        coeffs[0] = c;
        Self { coeffs }
    }

    pub fn one(order: usize) -> Self {
        Self::constant(QRat::one(), order)
    }

    pub fn zero(order: usize) -> Self {
        Self::constant(QRat::zero(), order)
    }

    /// The delta series t. Requires `order >= 1` to be nonzero.
    pub fn t(order: usize) -> Self {
        let mut s = Self::zero(order);
        if order >= 1 {
            s.coeffs[1] = QRat::one();
        }
        s
    }

    /// `t^k` as a series: its divided-power coefficient at k is `[k]_q!`.
    pub fn t_pow(k: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if k <= order {
            s.coeffs[k] = q_factorial_rat(k);
        }
        s
    }

    /// `e_q(t) = Σ t^n / [n]_q!`: every coefficient is 1.
    pub fn eq_exponential(order: usize) -> Self {
        Self {
            coeffs: vec![QRat::one(); order + 1],
        }
    }

    /// `e_q(yt)`: coefficients `y^n`.
    pub fn eq_exponential_at(y: &QRat, order: usize) -> Self {
        let mut coeffs = Vec::with_capacity(order + 1);
        let mut acc = QRat::one();
        for _ in 0..=order {
            coeffs.push(acc.clone());
            acc = &acc * y;
        }
        Self { coeffs }
    }

    /// Truncation bound N.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[QRat] {
        &self.coeffs
    }

    /// Divided-power coefficient `a_k`, which equals `<f | x^k>`.
    pub fn coeff(&self, k: usize) -> &QRat {
        &self.coeffs[k]
    }

    /// Order of vanishing: index of the first nonzero coefficient, `None` for
    /// the zero truncation (order +∞).
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn is_invertible(&self) -> bool {
        self.valuation() == Some(0)
    }

    pub fn is_delta(&self) -> bool {
        self.valuation() == Some(1)
    }

    /// Drop coefficients above `order`.
    pub fn truncate(&self, order: usize) -> Self {
        let keep = (order + 1).min(self.coeffs.len());
        Self {
            coeffs: self.coeffs[..keep].to_vec(),
        }
    }

    pub fn scale(&self, c: &QRat) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    fn check_orders(&self, other: &Self) -> Result<()> {
        if self.order() != other.order() {
            return Err(Error::OrderMismatch(self.order(), other.order()));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_orders(other)?;
        Ok(Self {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_orders(other)?;
        Ok(Self {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    /// Truncated product by q-binomial convolution.
    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_orders(other)?;
        let coeffs = (0..=self.order())
            .map(|n| {
                (0..=n)
                    .filter(|&k| !self.coeffs[k].is_zero() && !other.coeffs[n - k].is_zero())
                    .map(|k| {
                        &q_binomial_rat(n as i64, k as i64)
                            * &(&self.coeffs[k] * &other.coeffs[n - k])
                    })
                    .sum()
            })
            .collect();
        Ok(Self { coeffs })
    }

    /// Multiplicative inverse by the triangular recurrence
    /// `b_n = (δ_{n,0} - Σ_{k<n} [n choose k]_q b_k a_{n-k}) / a_0`.
    pub fn invert(&self) -> Result<Self> {
        let a0 = &self.coeffs[0];
        if a0.is_zero() {
            return Err(Error::NotInvertible);
        }
        let inv_a0 = a0.inv()?;
        let mut out: Vec<QRat> = Vec::with_capacity(self.coeffs.len());
        for n in 0..=self.order() {
            let mut acc = if n == 0 { QRat::one() } else { QRat::zero() };
            for (k, bk) in out.iter().enumerate() {
                let a = &self.coeffs[n - k];
                if a.is_zero() || bk.is_zero() {
                    continue;
                }
                acc = &acc - &(&q_binomial_rat(n as i64, k as i64) * &(bk * a));
            }
            out.push(&acc * &inv_a0);
        }
        Ok(Self { coeffs: out })
    }

    /// `f^r` by repeated multiplication; `f^0 = 1`.
    pub fn power(&self, r: usize) -> Self {
        let mut acc = Self::one(self.order());
        for _ in 0..r {
            acc = acc.try_mul(self).expect("same truncation order");
        }
        acc
    }

    /// `f(t)/t` for a series with zero constant term; the result has
    /// truncation order N-1 and coefficients `g_j = a_{j+1} / [j+1]_q`.
    pub fn shift_down(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::NotDivisible);
        }
        if self.order() == 0 {
            // f = 0 + O(t): nothing is known about f/t beyond truncation.
            return Err(Error::TruncationTooSmall {
                order: 0,
                degree: 1,
            });
        }
        let coeffs = self.coeffs[1..]
            .iter()
            .enumerate()
            .map(|(j, a)| a / &q_int_rat(j + 1))
            .collect();
        Ok(Self { coeffs })
    }
}

impl Add<&DPSeries> for &DPSeries {
    type Output = DPSeries;

    /// # Panics
    /// On mismatched truncation orders; use [`DPSeries::try_add`] to handle that.
    fn add(self, rhs: &DPSeries) -> DPSeries {
        self.try_add(rhs).expect("truncation orders differ")
    }
}

impl Sub<&DPSeries> for &DPSeries {
    type Output = DPSeries;

    fn sub(self, rhs: &DPSeries) -> DPSeries {
        self.try_sub(rhs).expect("truncation orders differ")
    }
}

impl Neg for &DPSeries {
    type Output = DPSeries;

    fn neg(self) -> DPSeries {
        DPSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}
