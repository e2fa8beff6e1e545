use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::poly::forward_owned_binop;
use super::{format_bigrat, parse_bigrat, BigRat, QNumPoly};
use crate::error::{Error, Result};

/// Element of ℚ(q) in canonical form.
///
/// `gcd(num, den) = 1`, `den` is monic and nonzero, and zero is `0/1`. Two
/// values are equal as field elements exactly when their fields are equal.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct QRat {
    num: QNumPoly,
    den: QNumPoly,
}

impl QRat {
    pub fn new(num: QNumPoly, den: QNumPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: QNumPoly, den: QNumPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let g = num.gcd(&den).expect("denominator is nonzero");
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (
                num.div_exact(&g).expect("gcd divides numerator"),
                den.div_exact(&g).expect("gcd divides denominator"),
            )
        };
        Self::normalize_lead(num, den)
    }

    fn normalize_lead(num: QNumPoly, den: QNumPoly) -> Self {
        let lc = den.leading().expect("nonzero denominator").clone();
        if lc.is_one() {
            Self { num, den }
        } else {
            let inv = lc.recip();
            Self {
                num: num.scale(&inv),
                den: den.scale(&inv),
            }
        }
    }

    pub fn zero() -> Self {
        Self {
            num: QNumPoly::zero(),
            den: QNumPoly::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_poly(QNumPoly::one())
    }

    pub fn q() -> Self {
        Self::from_poly(QNumPoly::q())
    }

    pub fn from_poly(num: QNumPoly) -> Self {
        Self {
            num,
            den: QNumPoly::one(),
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_bigrat(BigRat::from_integer(n.into()))
    }

    pub fn from_ratio(n: i64, d: i64) -> Self {
        Self::from_bigrat(BigRat::new(n.into(), d.into()))
    }

    pub fn from_bigrat(c: BigRat) -> Self {
        Self::from_poly(QNumPoly::constant(c))
    }

    pub fn num(&self) -> &QNumPoly {
        &self.num
    }

    pub fn den(&self) -> &QNumPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// True when the denominator is 1.
    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// The rational value if this is a constant.
    pub fn as_constant(&self) -> Option<BigRat> {
        (self.den.is_one() && self.num.is_constant()).then(|| self.num.coeff(0))
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalize_lead(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        Ok(self * &rhs.inv()?)
    }

    pub fn scale(&self, c: &BigRat) -> Self {
        Self {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
        .fix_zero()
    }

    fn fix_zero(self) -> Self {
        if self.num.is_zero() {
            Self::zero()
        } else {
            self
        }
    }

    pub fn pow(&self, exp: u32) -> Self {
        Self {
            num: self.num.pow(exp),
            den: self.den.pow(exp),
        }
    }

    /// Value of the rational function at `q = point`.
    pub fn eval(&self, point: &BigRat) -> Result<BigRat> {
        let d = self.den.eval(point);
        if d.is_zero() {
            return Err(Error::Pole(point.clone()));
        }
        Ok(self.num.eval(point) / d)
    }

    pub fn eval_to_qrat(&self, point: &BigRat) -> Result<Self> {
        self.eval(point).map(Self::from_bigrat)
    }

    /// Content-factored parts: `self = c * N / D` with N, D primitive integer
    /// polynomials with positive leading coefficients.
    fn factored(&self) -> (BigRat, QNumPoly, QNumPoly) {
        let (cn, n) = self.num.primitive_part();
        let (cd, d) = self.den.primitive_part();
        let to_poly = |v: Vec<BigInt>| {
            QNumPoly::from_coeffs(v.into_iter().map(BigRat::from_integer).collect())
        };
        (cn / cd, to_poly(n), to_poly(d))
    }

    pub fn to_latex(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let (c, n, d) = self.factored();
        let sign = if c.is_negative() { "-" } else { "" };
        let c = c.abs();
        let mut top = String::new();
        let wrap = |p: &QNumPoly, force: bool| {
            let s = p.to_latex_in("q");
            if force && p.term_count() > 1 {
                format!("\\left({s}\\right)")
            } else {
                s
            }
        };
        if n.is_one() {
            top.push_str(&c.numer().to_string());
        } else {
            if !c.numer().is_one() {
                top.push_str(&c.numer().to_string());
            }
            top.push_str(&wrap(&n, !c.numer().is_one()));
        }
        let mut bottom = String::new();
        if d.is_one() {
            if !c.denom().is_one() {
                bottom.push_str(&c.denom().to_string());
            }
        } else {
            if !c.denom().is_one() {
                bottom.push_str(&c.denom().to_string());
            }
            bottom.push_str(&wrap(&d, !c.denom().is_one()));
        }
        if bottom.is_empty() {
            format!("{sign}{top}")
        } else {
            format!("{sign}\\frac{{{top}}}{{{bottom}}}")
        }
    }
}

impl fmt::Display for QRat {
    /// Compact form such as `(q-1)/4` or `q^2/(q^3+2*q^2+2*q+1)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let (c, n, d) = self.factored();
        if c.is_negative() {
            f.write_str("-")?;
        }
        let c = c.abs();
        let single = |p: &QNumPoly| p.term_count() == 1;
        if n.is_one() {
            write!(f, "{}", c.numer())?;
        } else if c.numer().is_one() {
            if single(&n) || (d.is_one() && c.denom().is_one()) {
                write!(f, "{n}")?;
            } else {
                write!(f, "({n})")?;
            }
        } else if single(&n) {
            write!(f, "{}*{n}", c.numer())?;
        } else {
            write!(f, "{}*({n})", c.numer())?;
        }
        match (d.is_one(), c.denom().is_one()) {
            (true, true) => Ok(()),
            (true, false) => write!(f, "/{}", c.denom()),
            (false, true) if single(&d) => write!(f, "/{d}"),
            (false, true) => write!(f, "/({d})"),
            (false, false) if single(&d) => write!(f, "/({}*{d})", c.denom()),
            (false, false) => write!(f, "/({}*({d}))", c.denom()),
        }
    }
}

impl Default for QRat {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<QNumPoly> for QRat {
    fn from(p: QNumPoly) -> Self {
        Self::from_poly(p)
    }
}

impl From<BigRat> for QRat {
    fn from(c: BigRat) -> Self {
        Self::from_bigrat(c)
    }
}

impl From<i64> for QRat {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

impl Add<&QRat> for &QRat {
    type Output = QRat;

    fn add(self, rhs: &QRat) -> QRat {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            let num = &self.num + &rhs.num;
            if self.den.is_one() {
                return QRat::from_poly(num);
            }
            return QRat::reduce(num, self.den.clone());
        }
        // a + c/d = (ad + c)/d is already reduced when gcd(c, d) = 1.
        if self.den.is_one() {
            let num = &(&self.num * &rhs.den) + &rhs.num;
            return QRat {
                num,
                den: rhs.den.clone(),
            }
            .fix_zero();
        }
        if rhs.den.is_one() {
            let num = &self.num + &(&rhs.num * &self.den);
            return QRat {
                num,
                den: self.den.clone(),
            }
            .fix_zero();
        }
        let g = self.den.gcd(&rhs.den).expect("nonzero denominators");
        if g.is_one() {
            let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
            let den = &self.den * &rhs.den;
            return QRat { num, den }.fix_zero();
        }
        let b1 = self.den.div_exact(&g).unwrap();
        let d1 = rhs.den.div_exact(&g).unwrap();
        let num = &(&self.num * &d1) + &(&rhs.num * &b1);
        if num.is_zero() {
            return QRat::zero();
        }
        let h = num.gcd(&g).unwrap();
        let (num, den) = if h.is_one() {
            (num, &b1 * &rhs.den)
        } else {
            (
                num.div_exact(&h).unwrap(),
                &b1 * &rhs.den.div_exact(&h).unwrap(),
            )
        };
        QRat::normalize_lead(num, den)
    }
}

impl Sub<&QRat> for &QRat {
    type Output = QRat;

    fn sub(self, rhs: &QRat) -> QRat {
        self + &(-rhs)
    }
}

impl Mul<&QRat> for &QRat {
    type Output = QRat;

    fn mul(self, rhs: &QRat) -> QRat {
        if self.is_zero() || rhs.is_zero() {
            return QRat::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return QRat::from_poly(&self.num * &rhs.num);
        }
        let cancel = |n: &QNumPoly, d: &QNumPoly| -> (QNumPoly, QNumPoly) {
            if d.is_one() {
                return (n.clone(), d.clone());
            }
            let g = n.gcd(d).unwrap();
            if g.is_one() {
                (n.clone(), d.clone())
            } else {
                (n.div_exact(&g).unwrap(), d.div_exact(&g).unwrap())
            }
        };
        let (a, d) = cancel(&self.num, &rhs.den);
        let (c, b) = cancel(&rhs.num, &self.den);
        QRat::normalize_lead(&a * &c, &b * &d)
    }
}

impl Div<&QRat> for &QRat {
    type Output = QRat;

    /// Panics on division by zero; see [`QRat::checked_div`].
    fn div(self, rhs: &QRat) -> QRat {
        self.checked_div(rhs).expect("QRat division by zero")
    }
}

impl Neg for &QRat {
    type Output = QRat;

    fn neg(self) -> QRat {
        QRat {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for QRat {
    type Output = QRat;

    fn neg(self) -> QRat {
        -&self
    }
}

forward_owned_binop!(QRat, Add, add);
forward_owned_binop!(QRat, Sub, sub);
forward_owned_binop!(QRat, Mul, mul);
forward_owned_binop!(QRat, Div, div);

impl std::iter::Sum for QRat {
    fn sum<I: Iterator<Item = QRat>>(iter: I) -> QRat {
        iter.fold(QRat::zero(), |acc, x| &acc + &x)
    }
}

#[derive(Serialize, Deserialize)]
struct QRatRecord {
    num: Vec<String>,
    den: Vec<String>,
}

fn poly_strings(p: &QNumPoly) -> Vec<String> {
    p.coeffs().iter().map(format_bigrat).collect()
}

fn poly_from_strings<E: serde::de::Error>(v: &[String]) -> Result<QNumPoly, E> {
    v.iter()
        .map(|s| parse_bigrat(s).ok_or_else(|| E::custom(format!("bad rational `{s}`"))))
        .collect::<Result<Vec<_>, E>>()
        .map(QNumPoly::from_coeffs)
}

impl Serialize for QRat {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        QRatRecord {
            num: poly_strings(&self.num),
            den: poly_strings(&self.den),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for QRat {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let rec = QRatRecord::deserialize(deserializer)?;
        let num = poly_from_strings(&rec.num)?;
        let den = poly_from_strings(&rec.den)?;
        QRat::new(num, den).map_err(D::Error::custom)
    }
}
