//! q-Euler and q-Bernoulli numbers and polynomials of every order r.
//!
//! Every family has two independent constructions: coefficient extraction
//! from its generating function in the divided-power algebra, and a
//! recurrence or q-multinomial formula. Polynomials follow from the numbers
//! by the Appell form `S_n(x) = Σ_l [n choose l]_q s_l x^(n-l)`.

use serde::Serialize;

use crate::dpseries::DPSeries;
use crate::qcomb::{compositions, q_binomial_rat, q_int_rat, q_multinomial};
use crate::qscalar::QRat;
use crate::xpoly::XPoly;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum FamilyKind {
    Euler,
    Bernoulli,
}

impl FamilyKind {
    pub fn symbol(self) -> &'static str {
        match self {
            FamilyKind::Euler => "E",
            FamilyKind::Bernoulli => "B",
        }
    }
}

/// How a family's numbers were obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Construction {
    /// Coefficients of the generating function.
    Series,
    /// Linear recurrence from the boundary-value identities.
    Recurrence,
    /// Sum over compositions of q-multinomial-weighted products.
    Multinomial,
}

/// `S_0(x), ..., S_N(x)` with their values at zero.
///
/// Each `S_n` is monic of degree n and `numbers[n] = S_n(0)`.
#[derive(Clone, Debug, PartialEq)]
pub struct PolyFamily {
    kind: FamilyKind,
    order_r: usize,
    members: Vec<XPoly>,
    numbers: Vec<QRat>,
    path: Construction,
}

impl PolyFamily {
    /// Build the Appell family `S_n(x) = Σ_l [n choose l]_q numbers[l] x^(n-l)`.
    pub fn from_numbers(
        kind: FamilyKind,
        order_r: usize,
        numbers: Vec<QRat>,
        path: Construction,
    ) -> Self {
        let members = (0..numbers.len())
            .map(|n| appell_poly(&numbers, n))
            .collect();
        Self {
            kind,
            order_r,
            members,
            numbers,
            path,
        }
    }

    pub fn kind(&self) -> FamilyKind {
        self.kind
    }

    pub fn order_r(&self) -> usize {
        self.order_r
    }

    pub fn path(&self) -> Construction {
        self.path
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Largest index present.
    pub fn n_max(&self) -> usize {
        self.members.len().saturating_sub(1)
    }

    pub fn member(&self, n: usize) -> &XPoly {
        &self.members[n]
    }

    pub fn members(&self) -> &[XPoly] {
        &self.members
    }

    pub fn number(&self, n: usize) -> &QRat {
        &self.numbers[n]
    }

    pub fn numbers(&self) -> &[QRat] {
        &self.numbers
    }

    /// Overwrite one member without touching `numbers`. Used to seed
    /// corruptions when testing the verifiers.
    pub fn replace_member(&mut self, n: usize, p: XPoly) {
        self.members[n] = p;
    }

    pub fn replace_number(&mut self, n: usize, c: QRat) {
        self.numbers[n] = c;
    }

    /// Restrict to members `0..=n_max`.
    pub fn truncate(&self, n_max: usize) -> Self {
        let keep = (n_max + 1).min(self.members.len());
        Self {
            members: self.members[..keep].to_vec(),
            numbers: self.numbers[..keep].to_vec(),
            ..self.clone()
        }
    }

    /// Latex symbol for member n, e.g. `E^{(2)}_{3,q}(x)`.
    pub fn latex_symbol(&self, n: usize) -> String {
        let sym = self.kind.symbol();
        if self.order_r == 1 {
            format!("{sym}_{{{n},q}}")
        } else {
            format!("{sym}^{{({})}}_{{{n},q}}", self.order_r)
        }
    }
}

fn appell_poly(numbers: &[QRat], n: usize) -> XPoly {
    XPoly::from_coeffs(
        (0..=n)
            .map(|j| &q_binomial_rat(n as i64, j as i64) * &numbers[n - j])
            .collect(),
    )
}

/// `(e_q(t) + 1) / 2`, whose reciprocal generates the q-Euler numbers.
pub fn euler_g(order: usize) -> DPSeries {
    (&DPSeries::eq_exponential(order) + &DPSeries::one(order)).scale(&QRat::from_ratio(1, 2))
}

/// `((e_q(t) + 1) / 2)^r`.
pub fn euler_g_r(order: usize, r: usize) -> DPSeries {
    euler_g(order).power(r)
}

/// `(e_q(t) - 1) / t`, computed at truncation `order` from `e_q(t) - 1` at
/// `order + 1`.
pub fn bernoulli_g(order: usize) -> DPSeries {
    let delta = &DPSeries::eq_exponential(order + 1) - &DPSeries::one(order + 1);
    delta
        .shift_down()
        .expect("e_q(t) - 1 has zero constant term")
}

/// `2 / (e_q(t) + 1)`.
pub fn euler_generating(order: usize) -> DPSeries {
    euler_g(order).invert().expect("constant term is 1")
}

/// `t / (e_q(t) - 1)`.
pub fn bernoulli_generating(order: usize) -> DPSeries {
    bernoulli_g(order).invert().expect("constant term is 1")
}

/// `E_{0,q}, ..., E_{n_max,q}` as coefficients of `2 / (e_q(t) + 1)`.
pub fn euler_numbers_series(n_max: usize) -> Vec<QRat> {
    euler_generating(n_max + 1).coeffs()[..=n_max].to_vec()
}

/// `E_{0,q} = 1` and `-2 E_{n,q} = Σ_{l<n} [n choose l]_q E_{l,q}`.
pub fn euler_numbers_recurrence(n_max: usize) -> Vec<QRat> {
    let mut out = vec![QRat::one()];
    let minus_half = QRat::from_ratio(-1, 2);
    for n in 1..=n_max {
        let s: QRat = out
            .iter()
            .enumerate()
            .map(|(l, e)| &q_binomial_rat(n as i64, l as i64) * e)
            .sum();
        out.push(&s * &minus_half);
    }
    out
}

/// `E_{n,q}(x)` for `n ≤ n_max`, from the generating-function numbers.
pub fn euler_polys(n_max: usize) -> PolyFamily {
    PolyFamily::from_numbers(
        FamilyKind::Euler,
        1,
        euler_numbers_series(n_max),
        Construction::Series,
    )
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BernoulliPath {
    Series,
    Recurrence,
}

/// `B_{0,q}, ..., B_{n_max,q}`.
///
/// The series path inverts `(e_q(t) - 1)/t`; the recurrence path uses
/// `B_{0,q} = 1` and `Σ_{l<n} [n choose l]_q B_{l,q} = δ_{n,1}`.
pub fn bernoulli_numbers(n_max: usize, path: BernoulliPath) -> Vec<QRat> {
    match path {
        BernoulliPath::Series => bernoulli_generating(n_max + 1).coeffs()[..=n_max].to_vec(),
        BernoulliPath::Recurrence => {
            let mut out = vec![QRat::one()];
            for m in 1..=n_max {
                // n = m + 1 ≥ 2: [n]_q B_m = -Σ_{l<m} [n choose l]_q B_l
                let n = (m + 1) as i64;
                let s: QRat = out
                    .iter()
                    .enumerate()
                    .map(|(l, b)| &q_binomial_rat(n, l as i64) * b)
                    .sum();
                out.push(&(-s) / &q_int_rat(m + 1));
            }
            out
        }
    }
}

/// `B_{n,q}(x)` for `n ≤ n_max`, from the generating-function numbers.
pub fn bernoulli_polys(n_max: usize) -> PolyFamily {
    PolyFamily::from_numbers(
        FamilyKind::Bernoulli,
        1,
        bernoulli_numbers(n_max, BernoulliPath::Series),
        Construction::Series,
    )
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EulerOrderPath {
    Series,
    Multinomial,
}

/// Order-r q-Euler numbers by the q-multinomial convolution of order-1
/// numbers: `E^(r)_n = Σ_{i_1+..+i_r=n} (n; i_1..i_r)_q E_{i_1} ... E_{i_r}`.
pub fn euler_numbers_multinomial(n_max: usize, r: usize, base: &[QRat]) -> Vec<QRat> {
    (0..=n_max)
        .map(|n| {
            compositions(n, r)
                .map(|c| {
                    let weight: QRat = q_multinomial(n, &c).expect("composition of n").into();
                    c.parts().iter().fold(weight, |acc, &i| &acc * &base[i])
                })
                .sum()
        })
        .collect()
}

/// `E^(r)_{n,q}(x)` for `n ≤ n_max`. Order 0 gives `x^n`, order 1 the
/// ordinary family.
pub fn euler_r(n_max: usize, r: usize, path: EulerOrderPath) -> PolyFamily {
    let (numbers, construction) = match path {
        EulerOrderPath::Series => {
            let gen = euler_generating(n_max + 1).power(r);
            (gen.coeffs()[..=n_max].to_vec(), Construction::Series)
        }
        EulerOrderPath::Multinomial => {
            let base = euler_numbers_recurrence(n_max);
            (
                euler_numbers_multinomial(n_max, r, &base),
                Construction::Multinomial,
            )
        }
    };
    PolyFamily::from_numbers(FamilyKind::Euler, r, numbers, construction)
}

/// `B^(r)_{n,q}(x)` for `n ≤ n_max`, from `(t / (e_q(t) - 1))^r`.
pub fn bernoulli_r(n_max: usize, r: usize) -> PolyFamily {
    let gen = bernoulli_generating(n_max + 1).power(r);
    PolyFamily::from_numbers(
        FamilyKind::Bernoulli,
        r,
        gen.coeffs()[..=n_max].to_vec(),
        Construction::Series,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qscalar::{BigRat, QNumPoly};
    use crate::umbral::apply;

    fn qp(c: &[i64]) -> QRat {
        QNumPoly::from_ints(c).into()
    }

    fn half(x: QRat) -> QRat {
        x.scale(&BigRat::new(1.into(), 2.into()))
    }

    #[test]
    fn euler_numbers_small() {
        for e in [euler_numbers_series(3), euler_numbers_recurrence(3)] {
            assert_eq!(e[0], QRat::one());
            assert_eq!(e[1], QRat::from_ratio(-1, 2));
            assert_eq!(e[2], half(half(qp(&[-1, 1]))));
        }
    }

    #[test]
    fn euler_polys_small() {
        let fam = euler_polys(2);
        assert_eq!(fam.member(0), &XPoly::one());
        assert_eq!(
            fam.member(1),
            &XPoly::from_coeffs(vec![QRat::from_ratio(-1, 2), QRat::one()])
        );
        let e2 = XPoly::from_coeffs(vec![
            half(half(qp(&[-1, 1]))),
            -half(q_int_rat(2)),
            QRat::one(),
        ]);
        assert_eq!(fam.member(2), &e2);
    }

    #[test]
    fn bernoulli_polys_small() {
        let fam = bernoulli_polys(2);
        let b1 = q_int_rat(2).inv().unwrap();
        assert_eq!(fam.member(1), &XPoly::from_coeffs(vec![-b1, QRat::one()]));
        let b2 = (&q_int_rat(3) * &q_int_rat(2)).inv().unwrap() * QRat::q().pow(2);
        assert_eq!(
            fam.member(2),
            &XPoly::from_coeffs(vec![b2, QRat::from_int(-1), QRat::one()])
        );
        for n in 0..=2 {
            assert_eq!(&fam.member(n).eval(&QRat::zero()), fam.number(n));
        }
    }

    #[test]
    fn order_zero_and_one() {
        let e0 = euler_r(5, 0, EulerOrderPath::Series);
        for n in 0..=5 {
            assert_eq!(e0.member(n), &XPoly::monomial(QRat::one(), n));
            assert_eq!(e0.number(n).is_one(), n == 0);
        }
        assert_eq!(
            euler_r(5, 1, EulerOrderPath::Series).members(),
            euler_polys(5).members()
        );
        assert_eq!(bernoulli_r(5, 0).members(), e0.members());
        assert_eq!(bernoulli_r(5, 1).members(), bernoulli_polys(5).members());
    }

    #[test]
    fn order_two_first_numbers() {
        assert_eq!(
            euler_r(1, 2, EulerOrderPath::Multinomial).number(1),
            &QRat::from_int(-1)
        );
        assert_eq!(
            euler_r(1, 2, EulerOrderPath::Series).number(1),
            &QRat::from_int(-1)
        );
        let expected = (&QRat::from_int(-2)) / &q_int_rat(2);
        assert_eq!(bernoulli_r(1, 2).number(1), &expected);
    }

    #[test]
    fn appell_property_for_every_family() {
        let t = DPSeries::t(8);
        let mut fams = vec![euler_polys(8), bernoulli_polys(8)];
        for r in 0..=3 {
            fams.push(euler_r(8, r, EulerOrderPath::Series));
            fams.push(bernoulli_r(8, r));
        }
        for fam in &fams {
            for n in 0..=8 {
                let s = fam.member(n);
                assert_eq!(s.degree(), Some(n));
                assert!(s.leading().unwrap().is_one());
                assert_eq!(&s.eval(&QRat::zero()), fam.number(n));
                let lhs = apply(&t, s).unwrap();
                let rhs = if n == 0 {
                    XPoly::zero()
                } else {
                    fam.member(n - 1).scale(&q_int_rat(n))
                };
                assert_eq!(lhs, rhs, "{:?} r={} n={n}", fam.kind(), fam.order_r());
            }
        }
    }

    #[test]
    fn generating_function_acts_as_operator() {
        let e = euler_polys(6);
        let gen = euler_generating(6);
        for n in 0..=6 {
            assert_eq!(
                &apply(&gen, &XPoly::monomial(QRat::one(), n)).unwrap(),
                e.member(n)
            );
        }
    }

    #[test]
    fn bernoulli_paths_agree() {
        assert_eq!(
            bernoulli_numbers(8, BernoulliPath::Series),
            bernoulli_numbers(8, BernoulliPath::Recurrence)
        );
    }
}
