use num_traits::{One, Zero};

use crate::qcomb::binomial;
use crate::qscalar::BigRat;

/// Classical Euler numbers `E_n(0)`: `E_0 = 1`, `-2 E_n = Σ_{l<n} C(n,l) E_l`.
pub fn classical_euler(n_max: usize) -> Vec<BigRat> {
    let mut out = vec![BigRat::one()];
    for n in 1..=n_max {
        let s = out
            .iter()
            .enumerate()
            .fold(BigRat::zero(), |acc, (l, e)| acc + binomial(n, l) * e);
        out.push(-s / BigRat::from_integer(2.into()));
    }
    out
}

/// Classical Bernoulli numbers with `B_1 = -1/2`:
/// `B_0 = 1`, `Σ_{l<n} C(n,l) B_l = 0` for `n ≥ 2`.
pub fn classical_bernoulli(n_max: usize) -> Vec<BigRat> {
    let mut out = vec![BigRat::one()];
    for m in 1..=n_max {
        let s = out
            .iter()
            .enumerate()
            .fold(BigRat::zero(), |acc, (l, b)| acc + binomial(m + 1, l) * b);
        out.push(-s / BigRat::from_integer((m + 1).into()));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> BigRat {
        BigRat::new(n.into(), d.into())
    }

    #[test]
    fn euler_values() {
        let e = classical_euler(5);
        assert_eq!(e[..4], [r(1, 1), r(-1, 2), r(0, 1), r(1, 4)]);
        // E_n(0) vanishes for even n ≥ 2
        assert!(e[4].is_zero());
    }

    #[test]
    fn bernoulli_values() {
        let b = classical_bernoulli(6);
        assert_eq!(
            b,
            vec![
                r(1, 1),
                r(-1, 2),
                r(1, 6),
                r(0, 1),
                r(-1, 30),
                r(0, 1),
                r(1, 42)
            ]
        );
    }
}
