use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::BigRat;
use crate::error::{Error, Result};

/// Dense polynomial in q over ℚ. Index i holds the coefficient of q^i.
///
/// Canonical: no trailing zero coefficient, so the zero polynomial is empty.
#[derive(Clone, PartialEq, Eq, Hash, Default, Debug)]
pub struct QNumPoly {
    coeffs: Vec<BigRat>,
}

impl QNumPoly {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigRat::one())
    }

    /// The indeterminate q.
    pub fn q() -> Self {
        Self::monomial(BigRat::one(), 1)
    }

    pub fn constant(c: BigRat) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `c * q^degree`.
    pub fn monomial(c: BigRat, degree: usize) -> Self {
        let mut coeffs = vec![BigRat::zero(); degree + 1];
        coeffs[degree] = c;
        Self::from_coeffs(coeffs)
    }

    pub fn from_coeffs(mut coeffs: Vec<BigRat>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    /// Build from integer coefficients in ascending powers of q.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::from_coeffs(
            coeffs
                .iter()
                .map(|&c| BigRat::from_integer(c.into()))
                .collect(),
        )
    }

    pub fn coeffs(&self) -> &[BigRat] {
        &self.coeffs
    }

    /// Coefficient of q^i (zero past the degree).
    pub fn coeff(&self, i: usize) -> BigRat {
        self.coeffs.get(i).cloned().unwrap_or_else(BigRat::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigRat> {
        self.coeffs.last()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// True for nonzero constants and for zero.
    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn scale(&self, c: &BigRat) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// Horner evaluation at a rational point.
    pub fn eval(&self, point: &BigRat) -> BigRat {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRat::zero(), |acc, c| acc * point + c)
    }

    /// Scale so the leading coefficient is 1. Zero stays zero.
    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Self::zero(),
            Some(lc) if lc.is_one() => self.clone(),
            Some(lc) => self.scale(&lc.recip()),
        }
    }

    /// Euclidean division over ℚ: `self = quot * divisor + rem`, `deg rem < deg divisor`.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        let dlead = divisor.leading().ok_or(Error::DivisionByZero)?;
        let ddeg = divisor.coeffs.len() - 1;
        if self.coeffs.len() <= ddeg {
            return Ok((Self::zero(), self.clone()));
        }
        let inv = dlead.recip();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigRat::zero(); rem.len() - ddeg];
        for shift in (0..quot.len()).rev() {
            let top = &rem[shift + ddeg];
            if top.is_zero() {
                continue;
            }
            let factor = top * &inv;
            for (i, d) in divisor.coeffs.iter().enumerate() {
                if !d.is_zero() {
                    rem[shift + i] -= &factor * d;
                }
            }
            quot[shift] = factor;
        }
        rem.truncate(ddeg);
        Ok((Self::from_coeffs(quot), Self::from_coeffs(rem)))
    }

    /// Exact quotient; `None` when `divisor` is zero or does not divide `self`.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        if divisor.is_constant() {
            return divisor.leading().map(|c| self.scale(&c.recip()));
        }
        let (quot, rem) = self.div_rem(divisor).ok()?;
        rem.is_zero().then_some(quot)
    }

    /// Monic greatest common divisor over ℚ.
    ///
    /// Runs a primitive pseudo-remainder sequence over ℤ after clearing
    /// denominators, which keeps coefficient growth in check.
    pub fn gcd(&self, other: &Self) -> Result<Self> {
        match (self.is_zero(), other.is_zero()) {
            (true, true) => return Err(Error::ZeroGcd),
            (true, false) => return Ok(other.monic()),
            (false, true) => return Ok(self.monic()),
            _ => {}
        }
        if self.is_constant() || other.is_constant() {
            return Ok(Self::one());
        }
        if self == other {
            return Ok(self.monic());
        }
        let (_, mut a) = self.primitive_part();
        let (_, mut b) = other.primitive_part();
        if a.len() < b.len() {
            std::mem::swap(&mut a, &mut b);
        }
        loop {
            let r = int_pseudo_rem(a, &b);
            if r.is_empty() {
                let lc = BigRat::from_integer(b.last().cloned().unwrap());
                let coeffs = b
                    .into_iter()
                    .map(|c| BigRat::from_integer(c) / &lc)
                    .collect();
                return Ok(Self::from_coeffs(coeffs));
            }
            if r.len() == 1 {
                return Ok(Self::one());
            }
            a = b;
            b = int_primitive(r);
        }
    }

    /// Split `self = content * P` where P has coprime integer coefficients and
    /// a positive leading coefficient. The zero polynomial gives `(0, [])`.
    pub fn primitive_part(&self) -> (BigRat, Vec<BigInt>) {
        if self.is_zero() {
            return (BigRat::zero(), Vec::new());
        }
        let lcm = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&lcm / c.denom()))
            .collect();
        let mut content = int_content(&ints);
        if ints.last().unwrap().is_negative() {
            content = -content;
        }
        let prim = ints.into_iter().map(|c| c / &content).collect();
        (BigRat::new(content, lcm), prim)
    }

    /// Grammar-compatible rendering with the given variable name, descending powers.
    pub fn to_string_in(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if c.is_negative() {
                out.push('-');
            } else if !out.is_empty() {
                out.push('+');
            }
            let abs = c.abs();
            match k {
                0 => out.push_str(&abs.to_string()),
                _ => {
                    if !abs.is_one() {
                        out.push_str(&abs.to_string());
                        out.push('*');
                    }
                    out.push_str(var);
                    if k > 1 {
                        out.push('^');
                        out.push_str(&k.to_string());
                    }
                }
            }
        }
        out
    }

    /// Number of nonzero terms.
    pub fn term_count(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    pub fn to_latex_in(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if c.is_negative() {
                out.push('-');
            } else if !out.is_empty() {
                out.push('+');
            }
            let abs = c.abs();
            let coef = if abs.is_integer() {
                abs.to_string()
            } else {
                format!("\\frac{{{}}}{{{}}}", abs.numer(), abs.denom())
            };
            match k {
                0 => out.push_str(&coef),
                _ => {
                    if !abs.is_one() {
                        out.push_str(&coef);
                    }
                    out.push_str(var);
                    if k > 1 {
                        out.push_str(&format!("^{{{k}}}"));
                    }
                }
            }
        }
        out
    }
}

fn int_content(v: &[BigInt]) -> BigInt {
    let mut g = BigInt::zero();
    for c in v {
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    g
}

fn int_primitive(v: Vec<BigInt>) -> Vec<BigInt> {
    let mut g = int_content(&v);
    if v.last().is_some_and(Signed::is_negative) {
        g = -g;
    }
    if g.is_one() {
        return v;
    }
    v.into_iter().map(|c| c / &g).collect()
}

/// A nonzero constant multiple of `a mod b` over ℤ, made primitive.
fn int_pseudo_rem(mut r: Vec<BigInt>, b: &[BigInt]) -> Vec<BigInt> {
    let lb = b.last().unwrap();
    while r.len() >= b.len() {
        let lr = r.last().unwrap().clone();
        let g = lr.gcd(lb);
        let mul_r = lb / &g;
        let mul_b = &lr / &g;
        let shift = r.len() - b.len();
        if !mul_r.is_one() {
            for x in r.iter_mut() {
                *x *= &mul_r;
            }
        }
        for (i, bi) in b.iter().enumerate() {
            r[shift + i] -= &mul_b * bi;
        }
        while r.last().is_some_and(Zero::is_zero) {
            r.pop();
        }
        if r.is_empty() {
            break;
        }
        r = int_primitive(r);
    }
    r
}

impl fmt::Display for QNumPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_in("q"))
    }
}

impl Add<&QNumPoly> for &QNumPoly {
    type Output = QNumPoly;

    fn add(self, rhs: &QNumPoly) -> QNumPoly {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (c, s) in coeffs.iter_mut().zip(&short.coeffs) {
            *c += s;
        }
        QNumPoly::from_coeffs(coeffs)
    }
}

impl Sub<&QNumPoly> for &QNumPoly {
    type Output = QNumPoly;

    fn sub(self, rhs: &QNumPoly) -> QNumPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(len, BigRat::zero());
        for (c, s) in coeffs.iter_mut().zip(&rhs.coeffs) {
            *c -= s;
        }
        QNumPoly::from_coeffs(coeffs)
    }
}

impl Mul<&QNumPoly> for &QNumPoly {
    type Output = QNumPoly;

    fn mul(self, rhs: &QNumPoly) -> QNumPoly {
        if self.is_zero() || rhs.is_zero() {
            return QNumPoly::zero();
        }
        if self.is_one() {
            return rhs.clone();
        }
        if rhs.is_one() {
            return self.clone();
        }
        // Integer fast path: clear denominators once instead of reducing per term.
        let (ca, a) = self.primitive_part();
        let (cb, b) = rhs.primitive_part();
        let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if !y.is_zero() {
                    out[i + j] += x * y;
                }
            }
        }
        let c = ca * cb;
        QNumPoly::from_coeffs(
            out.into_iter()
                .map(|v| BigRat::from_integer(v) * &c)
                .collect(),
        )
    }
}

impl Neg for &QNumPoly {
    type Output = QNumPoly;

    fn neg(self) -> QNumPoly {
        QNumPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for QNumPoly {
    type Output = QNumPoly;

    fn neg(self) -> QNumPoly {
        -&self
    }
}

macro_rules! forward_owned_binop {
    ($ty:ty, $tr:ident, $method:ident) => {
        impl $tr<$ty> for $ty {
            type Output = $ty;
            fn $method(self, rhs: $ty) -> $ty {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&$ty> for $ty {
            type Output = $ty;
            fn $method(self, rhs: &$ty) -> $ty {
                (&self).$method(rhs)
            }
        }
        impl $tr<$ty> for &$ty {
            type Output = $ty;
            fn $method(self, rhs: $ty) -> $ty {
                self.$method(&rhs)
            }
        }
    };
}

pub(crate) use forward_owned_binop;

forward_owned_binop!(QNumPoly, Add, add);
forward_owned_binop!(QNumPoly, Sub, sub);
forward_owned_binop!(QNumPoly, Mul, mul);

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> QNumPoly {
        QNumPoly::from_ints(c)
    }

    fn r(n: i64, d: i64) -> BigRat {
        BigRat::new(n.into(), d.into())
    }

    #[test]
    fn difference_of_squares() {
        assert_eq!(&p(&[1, 1]) * &p(&[1, -1]), p(&[1, 0, -1]));
    }

    #[test]
    fn cyclotomic_factor_check() {
        assert_eq!(&p(&[1, 1]) * &p(&[1, 0, 1]), p(&[1, 1, 1, 1]));
    }

    #[test]
    fn additive_identity_and_trailing_zeros() {
        let a = p(&[3, 0, 2]);
        assert_eq!(&a + &QNumPoly::zero(), a);
        assert_eq!(&a - &a, QNumPoly::zero());
        assert_eq!(p(&[1, 2, 0, 0]).degree(), Some(1));
        assert_eq!(QNumPoly::zero().degree(), None);
    }

    #[test]
    fn gcd_examples() {
        // gcd(q^2-1, q^2+2q+1) = q+1
        assert_eq!(p(&[-1, 0, 1]).gcd(&p(&[1, 2, 1])).unwrap(), p(&[1, 1]));
        // gcd(p, 0) = monic(p)
        assert_eq!(
            p(&[2, 4]).gcd(&QNumPoly::zero()).unwrap(),
            p(&[1, 2]).monic()
        );
        assert_eq!(
            p(&[2, 4]).gcd(&QNumPoly::zero()).unwrap().coeffs(),
            &[r(1, 2), r(1, 1)]
        );
        // gcd(1+q, 1+q+q^2) = 1
        assert_eq!(p(&[1, 1]).gcd(&p(&[1, 1, 1])).unwrap(), QNumPoly::one());
        assert_eq!(QNumPoly::zero().gcd(&QNumPoly::zero()), Err(Error::ZeroGcd));
    }

    #[test]
    fn gcd_with_rational_coefficients() {
        let a = QNumPoly::from_coeffs(vec![r(1, 2), r(1, 3)]);
        let b = &a * &p(&[5, 0, 7]);
        let c = &a * &p(&[1, 1]);
        assert_eq!(b.gcd(&c).unwrap(), a.monic());
    }

    #[test]
    fn div_rem_reconstructs() {
        let a = p(&[3, -1, 4, 1, -5]);
        let d = p(&[2, 0, 3]);
        let (quot, rem) = a.div_rem(&d).unwrap();
        assert_eq!(&(&quot * &d) + &rem, a);
        assert!(rem.degree().unwrap_or(0) < 2);
        assert_eq!(a.div_rem(&QNumPoly::zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn rendering() {
        assert_eq!(p(&[1, 2, 1]).to_string(), "q^2+2*q+1");
        assert_eq!(
            QNumPoly::from_coeffs(vec![r(-1, 4), r(1, 4)]).to_string(),
            "1/4*q-1/4"
        );
        assert_eq!(p(&[0, -1]).to_string(), "-q");
        assert_eq!(QNumPoly::zero().to_string(), "0");
    }

    #[test]
    fn primitive_part_sign_and_content() {
        let a = QNumPoly::from_coeffs(vec![r(1, 4), r(-1, 4)]);
        let (c, prim) = a.primitive_part();
        assert_eq!(c, r(-1, 4));
        assert_eq!(prim, vec![BigInt::from(-1), BigInt::from(1)]);
    }

    fn arb_poly() -> impl Strategy<Value = QNumPoly> {
        prop::collection::vec((-6i64..=6, 1i64..=4), 0..6)
            .prop_map(|v| QNumPoly::from_coeffs(v.into_iter().map(|(n, d)| r(n, d)).collect()))
    }

    proptest! {
        #[test]
        fn gcd_divides_both(a in arb_poly(), b in arb_poly(), f in arb_poly()) {
            prop_assume!(!f.is_zero() && !(a.is_zero() && b.is_zero()));
            let (x, y) = (&a * &f, &b * &f);
            let g = x.gcd(&y).unwrap();
            prop_assert!(x.div_exact(&g).is_some());
            prop_assert!(y.div_exact(&g).is_some());
            // f divides the gcd
            prop_assert!(g.div_exact(&f).is_some());
            prop_assert!(g.leading().unwrap().is_one());
        }

        #[test]
        fn ring_laws(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a * &b, &b * &a);
        }

        #[test]
        fn eval_is_homomorphism(a in arb_poly(), b in arb_poly(), x in -5i64..5, d in 1i64..4) {
            let pt = r(x, d);
            prop_assert_eq!((&a * &b).eval(&pt), a.eval(&pt) * b.eval(&pt));
            prop_assert_eq!((&a + &b).eval(&pt), a.eval(&pt) + b.eval(&pt));
        }
    }
}
