//! Polynomials in x with coefficients in ℚ(q), together with the
//! q-derivative, the Jackson integral and an expression parser.

mod parse;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Signed;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Result;
use crate::qcomb::q_int_rat;
use crate::qscalar::poly::forward_owned_binop;
use crate::qscalar::{BigRat, QNumPoly, QRat};

pub use parse::parse;

/// Dense polynomial `Σ c_k x^k`; no trailing zero coefficient.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct XPoly {
    coeffs: Vec<QRat>,
}

impl XPoly {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(QRat::one())
    }

    pub fn x() -> Self {
        Self::monomial(QRat::one(), 1)
    }

    pub fn constant(c: QRat) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `c x^k`.
    pub fn monomial(c: QRat, k: usize) -> Self {
        let mut coeffs = vec![QRat::zero(); k + 1];
        coeffs[k] = c;
        Self::from_coeffs(coeffs)
    }

    pub fn from_coeffs(mut coeffs: Vec<QRat>) -> Self {
        while coeffs.last().is_some_and(QRat::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn coeffs(&self) -> &[QRat] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> QRat {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Option<&QRat> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &QRat) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn pow(&self, exp: u32) -> Self {
        (0..exp).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Horner evaluation at `x = c`.
    pub fn eval(&self, c: &QRat) -> QRat {
        self.coeffs
            .iter()
            .rev()
            .fold(QRat::zero(), |acc, a| &(&acc * c) + a)
    }

    /// q-derivative `D_q`: `x^n ↦ [n]_q x^(n-1)`.
    pub fn dq(&self) -> Self {
        Self::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(n, c)| c * &q_int_rat(n))
                .collect(),
        )
    }

    /// `D_q^k`.
    pub fn dq_iter(&self, k: usize) -> Self {
        (0..k).fold(self.clone(), |p, _| p.dq())
    }

    /// Jackson integral from 0: `x^n ↦ x^(n+1) / [n+1]_q`.
    ///
    /// This is the closed form of the Jackson series on monomials, since
    /// `(1-q) Σ_a q^(a(n+1)) = 1/[n+1]_q`.
    pub fn jackson0(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![QRat::zero()];
        coeffs.extend(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(n, c)| c / &q_int_rat(n + 1)),
        );
        Self::from_coeffs(coeffs)
    }

    /// Jackson integral over `[a, b]`, taken as `F(b) - F(a)` with `F = jackson0(p)`.
    pub fn jackson_interval(&self, a: &QRat, b: &QRat) -> QRat {
        let f = self.jackson0();
        &f.eval(b) - &f.eval(a)
    }

    /// Specialize every coefficient at `q = point`.
    pub fn eval_q(&self, point: &BigRat) -> Result<Self> {
        self.coeffs
            .iter()
            .map(|c| c.eval_to_qrat(point))
            .collect::<Result<Vec<_>>>()
            .map(Self::from_coeffs)
    }

    pub fn to_latex(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let xs = match k {
                0 => String::new(),
                1 => "x".into(),
                _ => format!("x^{{{k}}}"),
            };
            let latex = c.to_latex();
            // a fraction is already a single factor
            let single =
                latex.trim_start_matches('-').starts_with("\\frac") || c.num().term_count() == 1;
            let body = if c.is_one() && k > 0 {
                xs
            } else if k > 0 && (-c).is_one() {
                format!("-{xs}")
            } else if single || k == 0 {
                format!("{latex}{xs}")
            } else {
                format!("\\left({latex}\\right){xs}")
            };
            if !out.is_empty() && !body.starts_with('-') {
                out.push('+');
            }
            out.push_str(&body);
        }
        out
    }
}

/// Render one coefficient times `x^k` without a leading sign; returns
/// `(negative, body)`.
fn render_term(c: &QRat, k: usize) -> (bool, String) {
    let xs = match k {
        0 => None,
        1 => Some("x".to_string()),
        _ => Some(format!("x^{k}")),
    };
    let mut factors: Vec<String> = Vec::new();
    let negative;
    if c.is_polynomial() {
        let (content, prim) = c.num().primitive_part();
        negative = content.is_negative();
        let a = content.abs();
        let prim = QNumPoly::from_coeffs(prim.into_iter().map(BigRat::from_integer).collect());
        if prim.is_constant() {
            if k == 0 || !num_traits::One::is_one(&a) {
                factors.push(a.to_string());
            }
        } else {
            if !num_traits::One::is_one(&a) {
                factors.push(a.to_string());
            }
            if prim.term_count() > 1 {
                factors.push(format!("({prim})"));
            } else {
                factors.push(prim.to_string());
            }
        }
    } else {
        negative = false;
        factors.push(format!("({c})"));
    }
    factors.extend(xs);
    (negative, factors.join("*"))
}

impl fmt::Display for XPoly {
    /// Descending powers of x. Polynomial-in-q coefficients render in the
    /// parser's grammar, so `parse(p.to_string()) == p` for them.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let (negative, body) = render_term(c, k);
            match (first, negative) {
                (true, true) | (false, true) => f.write_str("-")?,
                (false, false) => f.write_str("+")?,
                (true, false) => {}
            }
            f.write_str(&body)?;
            first = false;
        }
        Ok(())
    }
}

impl Add<&XPoly> for &XPoly {
    type Output = XPoly;

    fn add(self, rhs: &XPoly) -> XPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        XPoly::from_coeffs((0..len).map(|k| &self.coeff(k) + &rhs.coeff(k)).collect())
    }
}

impl Sub<&XPoly> for &XPoly {
    type Output = XPoly;

    fn sub(self, rhs: &XPoly) -> XPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        XPoly::from_coeffs((0..len).map(|k| &self.coeff(k) - &rhs.coeff(k)).collect())
    }
}

impl Mul<&XPoly> for &XPoly {
    type Output = XPoly;

    fn mul(self, rhs: &XPoly) -> XPoly {
        if self.is_zero() || rhs.is_zero() {
            return XPoly::zero();
        }
        let mut out = vec![QRat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] = &out[i + j] + &(a * b);
                }
            }
        }
        XPoly::from_coeffs(out)
    }
}

impl Neg for &XPoly {
    type Output = XPoly;

    fn neg(self) -> XPoly {
        XPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

forward_owned_binop!(XPoly, Add, add);
forward_owned_binop!(XPoly, Sub, sub);
forward_owned_binop!(XPoly, Mul, mul);

impl std::iter::Sum for XPoly {
    fn sum<I: Iterator<Item = XPoly>>(iter: I) -> XPoly {
        iter.fold(XPoly::zero(), |acc, p| &acc + &p)
    }
}

/// Serialized as the ascending coefficient list.
impl Serialize for XPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.coeffs.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for XPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        Vec::<QRat>::deserialize(deserializer).map(XPoly::from_coeffs)
    }
}

impl From<QRat> for XPoly {
    fn from(c: QRat) -> Self {
        Self::constant(c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn qp(c: &[i64]) -> QRat {
        QNumPoly::from_ints(c).into()
    }

    fn rat(n: i64, d: i64) -> QRat {
        QRat::from_ratio(n, d)
    }

    fn e1() -> XPoly {
        XPoly::from_coeffs(vec![rat(-1, 2), QRat::one()])
    }

    fn e2() -> XPoly {
        // x^2 - ([2]_q/2) x + (q-1)/4
        XPoly::from_coeffs(vec![
            qp(&[-1, 1]).scale(&BigRat::new(1.into(), 4.into())),
            qp(&[-1, -1]).scale(&BigRat::new(1.into(), 2.into())),
            QRat::one(),
        ])
    }

    #[test]
    fn arithmetic() {
        assert_eq!(&e1() + &XPoly::constant(rat(1, 2)), XPoly::x());
        assert_eq!(&XPoly::x() * &XPoly::x(), XPoly::monomial(QRat::one(), 2));
        let s = qp(&[-1, 1]).scale(&BigRat::new(1.into(), 4.into()));
        assert_eq!(XPoly::monomial(QRat::one(), 2).scale(&s).coeff(2), s);
    }

    #[test]
    fn q_derivative() {
        assert_eq!(
            XPoly::monomial(QRat::one(), 3).dq(),
            XPoly::monomial(q_int_rat(3), 2)
        );
        assert_eq!(XPoly::constant(rat(7, 3)).dq(), XPoly::zero());
        assert_eq!(e2().dq(), e1().scale(&q_int_rat(2)));
        assert_eq!(
            XPoly::monomial(QRat::one(), 3).dq_iter(2),
            XPoly::monomial(&q_int_rat(3) * &q_int_rat(2), 1)
        );
    }

    #[test]
    fn jackson_integrals() {
        let x2 = XPoly::monomial(QRat::one(), 2);
        assert_eq!(
            x2.jackson0(),
            XPoly::monomial(q_int_rat(3).inv().unwrap(), 3)
        );
        assert_eq!(XPoly::zero().jackson0(), XPoly::zero());
        let half_over_2 = &q_int_rat(2).inv().unwrap() - &rat(1, 2);
        assert_eq!(
            e1().jackson_interval(&QRat::zero(), &QRat::one()),
            half_over_2
        );
        assert!(e2().jackson_interval(&rat(3, 5), &rat(3, 5)).is_zero());
        assert_eq!(
            XPoly::x().jackson_interval(&QRat::zero(), &QRat::one()),
            q_int_rat(2).inv().unwrap()
        );
    }

    #[test]
    fn jackson_closed_form_matches_geometric_series() {
        // (1-q) Σ_{a<M} q^{a(n+1)} x^{n+1} telescopes to (1-q^{M(n+1)}) / [n+1]_q;
        // check the partial sums at q = 1/2 approach the closed form.
        let q = BigRat::new(1.into(), 2.into());
        for n in 0..4usize {
            let closed = XPoly::monomial(QRat::one(), n)
                .jackson0()
                .eval(&QRat::one())
                .eval(&q)
                .unwrap();
            let mut partial = BigRat::from_integer(0.into());
            let one = BigRat::from_integer(1.into());
            for a in 0..200u32 {
                partial += (&one - &q) * num_traits::pow(q.clone(), (a as usize) * (n + 1));
            }
            let err = (closed - partial).abs();
            assert!(err < BigRat::new(1.into(), num_bigint::BigInt::from(10u32).pow(30)));
        }
    }

    #[test]
    fn evaluation() {
        assert_eq!(e1().eval(&QRat::one()), rat(1, 2));
        assert_eq!(e2().eval(&QRat::zero()), e2().coeff(0));
        // E_2(1) = -E_2
        assert_eq!(e2().eval(&QRat::one()), -e2().coeff(0));
    }

    #[test]
    fn rendering() {
        assert_eq!(e2().to_string(), "x^2-1/2*(q+1)*x+1/4*(q-1)");
        assert_eq!(e1().to_string(), "x-1/2");
        assert_eq!(XPoly::zero().to_string(), "0");
        assert_eq!(XPoly::monomial(QRat::q(), 1).to_string(), "q*x");
        assert_eq!(XPoly::monomial(-QRat::q(), 0).to_string(), "-q");
    }

    fn arb_xpoly() -> impl Strategy<Value = XPoly> {
        prop::collection::vec((-3i64..=3, -2i64..=2, 1i64..=3), 0..6).prop_map(|v| {
            XPoly::from_coeffs(
                v.into_iter()
                    .map(|(a, b, d)| qp(&[a, b]).scale(&BigRat::new(1.into(), d.into())))
                    .collect(),
            )
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn linearity(a in arb_xpoly(), b in arb_xpoly(), s in -3i64..=3) {
            let c = qp(&[s, 1]);
            let comb = &a.scale(&c) + &b;
            prop_assert_eq!(comb.dq(), &a.dq().scale(&c) + &b.dq());
            prop_assert_eq!(comb.jackson0(), &a.jackson0().scale(&c) + &b.jackson0());
        }

        #[test]
        fn fundamental_theorem(a in arb_xpoly()) {
            prop_assert_eq!(a.jackson0().dq(), a);
        }

        #[test]
        fn q_to_one_gives_classical_derivative(a in arb_xpoly()) {
            let one = BigRat::from_integer(1.into());
            let lhs = a.dq().eval_q(&one).unwrap();
            let at_one = a.eval_q(&one).unwrap();
            let classical = XPoly::from_coeffs(
                at_one.coeffs().iter().enumerate().skip(1).map(|(n, c)| c * &QRat::from_int(n as i64)).collect(),
            );
            prop_assert_eq!(lhs, classical);
        }

        #[test]
        fn print_parse_round_trip(a in arb_xpoly()) {
            let text = a.to_string();
            prop_assert_eq!(parse(&text).unwrap(), a, "text was {}", text);
        }
    }

    #[test]
    fn fundamental_theorem_up_to_degree_20() {
        for n in 0..=20 {
            let p = XPoly::monomial(qp(&[1, n as i64]), n);
            assert_eq!(p.jackson0().dq(), p);
        }
    }
}
