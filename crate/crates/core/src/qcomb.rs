//! q-combinatorial primitives: q-integers, q-factorials, Gaussian binomials,
//! q-multinomials and finite q-shifted factorials.
//!
//! Factorials and binomials are memoized in process-wide caches; the caches
//! are idempotent so concurrent callers only ever observe identical values.

use std::collections::HashMap;
use std::sync::{LazyLock, RwLock};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::qscalar::{BigRat, QNumPoly, QRat};

/// `[n]_q = 1 + q + ... + q^(n-1)`, with `[0]_q = 0`.
pub fn q_int(n: usize) -> QNumPoly {
    QNumPoly::from_coeffs(vec![BigRat::one(); n])
}

static FACTORIALS: LazyLock<RwLock<Vec<QNumPoly>>> =
    LazyLock::new(|| RwLock::new(vec![QNumPoly::one()]));

/// `[n]_q! = [n]_q [n-1]_q ... [1]_q`, with `[0]_q! = 1`.
pub fn q_factorial(n: usize) -> QNumPoly {
    if let Some(f) = FACTORIALS.read().unwrap().get(n) {
        return f.clone();
    }
    let mut table = FACTORIALS.write().unwrap();
    while table.len() <= n {
        let k = table.len();
        let next = &table[k - 1] * &q_int(k);
        table.push(next);
    }
    table[n].clone()
}

static BINOMIALS: LazyLock<RwLock<HashMap<(usize, usize), QNumPoly>>> =
    LazyLock::new(|| RwLock::new(HashMap::new()));

/// Gaussian binomial `[n]_q! / ([k]_q! [n-k]_q!)`.
///
/// Returns zero when `k < 0`, `n < 0` or `k > n`, so boundary terms of sums
/// vanish without special cases.
pub fn q_binomial(n: i64, k: i64) -> QNumPoly {
    if n < 0 || k < 0 || k > n {
        return QNumPoly::zero();
    }
    let (n, k) = (n as usize, k as usize);
    let key = (n, k.min(n - k));
    if let Some(b) = BINOMIALS.read().unwrap().get(&key) {
        return b.clone();
    }
    let denom = &q_factorial(k) * &q_factorial(n - k);
    let value = q_factorial(n)
        .div_exact(&denom)
        .expect("q-binomial division is exact");
    BINOMIALS.write().unwrap().insert(key, value.clone());
    value
}

pub fn q_int_rat(n: usize) -> QRat {
    q_int(n).into()
}

pub fn q_factorial_rat(n: usize) -> QRat {
    q_factorial(n).into()
}

pub fn q_binomial_rat(n: i64, k: i64) -> QRat {
    q_binomial(n, k).into()
}

/// Tuple `(i_1, ..., i_l)` of non-negative parts. The empty tuple is valid.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Composition(Vec<usize>);

impl Composition {
    pub fn new(parts: Vec<usize>) -> Self {
        Self(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn sum(&self) -> usize {
        self.0.iter().sum()
    }
}

/// q-multinomial `[n]_q! / ([i_1]_q! ... [i_l]_q!)` for a composition of n.
pub fn q_multinomial(n: usize, c: &Composition) -> Result<QNumPoly> {
    let actual = c.sum();
    if actual != n {
        return Err(Error::SumMismatch {
            expected: n,
            actual,
        });
    }
    let denom = c
        .parts()
        .iter()
        .fold(QNumPoly::one(), |acc, &i| &acc * &q_factorial(i));
    Ok(q_factorial(n)
        .div_exact(&denom)
        .expect("q-multinomial division is exact"))
}

/// Finite q-shifted factorial `(a:q)_n = (1-a)(1-aq)...(1-aq^(n-1))`.
pub fn q_shifted_factorial(a: &QRat, n: usize) -> QRat {
    let one = QRat::one();
    let mut acc = QRat::one();
    let mut a_qi = a.clone();
    for _ in 0..n {
        acc = &acc * &(&one - &a_qi);
        a_qi = &a_qi * &QRat::q();
    }
    acc
}

/// All `l`-tuples of non-negative integers summing to `m`, in lexicographic
/// order, each exactly once. For `l = 0` this yields the empty tuple iff `m = 0`.
pub fn compositions(m: usize, l: usize) -> Compositions {
    let current = match l {
        0 => (m == 0).then(Vec::new),
        _ => {
            let mut v = vec![0; l];
            v[l - 1] = m;
            Some(v)
        }
    };
    Compositions { current }
}

pub struct Compositions {
    current: Option<Vec<usize>>,
}

impl Iterator for Compositions {
    type Item = Composition;

    fn next(&mut self) -> Option<Composition> {
        let out = self.current.take()?;
        let l = out.len();
        // Advance: bump the rightmost slot that has mass to its right.
        let mut tail = 0;
        for j in (0..l.saturating_sub(1)).rev() {
            tail += out[j + 1];
            if tail > 0 {
                let mut next = out.clone();
                next[j] += 1;
                for slot in next.iter_mut().skip(j + 1) {
                    *slot = 0;
                }
                next[l - 1] = tail - 1;
                self.current = Some(next);
                break;
            }
        }
        Some(Composition(out))
    }
}

/// `Σ_{i_1+...+i_l=m} (m; i_1,...,i_l)_q`, the inner sum of the order-r
/// connection formulas, by explicit enumeration. Memoized.
pub fn multinomial_sum(m: usize, l: usize) -> QNumPoly {
    static CACHE: LazyLock<RwLock<HashMap<(usize, usize), QNumPoly>>> =
        LazyLock::new(|| RwLock::new(HashMap::new()));
    if let Some(v) = CACHE.read().unwrap().get(&(m, l)) {
        return v.clone();
    }
    let total = compositions(m, l).fold(QNumPoly::zero(), |acc, c| {
        &acc + &q_multinomial(m, &c).expect("composition sums to m")
    });
    CACHE.write().unwrap().insert((m, l), total.clone());
    total
}

/// Classical binomial coefficient as a rational.
pub fn binomial(n: usize, k: usize) -> BigRat {
    if k > n {
        return BigRat::zero();
    }
    BigRat::from_integer(num_integer::binomial(
        num_bigint::BigInt::from(n),
        num_bigint::BigInt::from(k),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> QNumPoly {
        QNumPoly::from_ints(c)
    }

    #[test]
    fn q_integers() {
        assert_eq!(q_int(0), QNumPoly::zero());
        assert_eq!(q_int(2), p(&[1, 1]));
        assert_eq!(q_int(3), p(&[1, 1, 1]));
    }

    #[test]
    fn q_factorials() {
        assert_eq!(q_factorial(0), QNumPoly::one());
        assert_eq!(q_factorial(2), p(&[1, 1]));
        assert_eq!(q_factorial(3), p(&[1, 2, 2, 1]));
    }

    #[test]
    fn q_binomials() {
        assert_eq!(q_binomial(7, 0), QNumPoly::one());
        assert_eq!(q_binomial(2, 1), p(&[1, 1]));
        assert_eq!(q_binomial(4, 2), p(&[1, 1, 2, 1, 1]));
        assert_eq!(q_binomial(4, 5), QNumPoly::zero());
        assert_eq!(q_binomial(4, -1), QNumPoly::zero());
        assert_eq!(q_binomial(-1, 0), QNumPoly::zero());
    }

    #[test]
    fn pascal_rule_and_symmetry() {
        for n in 1..=20i64 {
            for k in 1..=n {
                let lhs = q_binomial(n, k);
                let rhs = &q_binomial(n - 1, k - 1)
                    + &(&QNumPoly::monomial(BigRat::one(), k as usize) * &q_binomial(n - 1, k));
                assert_eq!(lhs, rhs, "n={n} k={k}");
                assert_eq!(q_binomial(n, k), q_binomial(n, n - k));
            }
        }
    }

    #[test]
    fn binomial_at_q_one_is_classical() {
        for n in 0..=20usize {
            for k in 0..=n {
                assert_eq!(
                    q_binomial(n as i64, k as i64).eval(&BigRat::one()),
                    binomial(n, k)
                );
            }
        }
    }

    #[test]
    fn multinomials() {
        let c = |v: &[usize]| Composition::new(v.to_vec());
        assert_eq!(q_multinomial(2, &c(&[1, 1])).unwrap(), p(&[1, 1]));
        assert_eq!(q_multinomial(5, &c(&[5])).unwrap(), QNumPoly::one());
        assert_eq!(q_multinomial(3, &c(&[1, 1, 1])).unwrap(), p(&[1, 2, 2, 1]));
        assert_eq!(q_multinomial(0, &c(&[])).unwrap(), QNumPoly::one());
        assert_eq!(
            q_multinomial(3, &c(&[1, 1])),
            Err(Error::SumMismatch {
                expected: 3,
                actual: 2
            })
        );
    }

    #[test]
    fn multinomial_telescopes_into_binomials() {
        for m in 0..=7usize {
            for l in 1..=4usize {
                for comp in compositions(m, l) {
                    let mut rest = m as i64;
                    let mut prod = QNumPoly::one();
                    for &i in comp.parts() {
                        prod = &prod * &q_binomial(rest, i as i64);
                        rest -= i as i64;
                    }
                    assert_eq!(q_multinomial(m, &comp).unwrap(), prod);
                }
            }
        }
    }

    #[test]
    fn shifted_factorials() {
        let a = QRat::from_ratio(1, 3);
        assert_eq!(q_shifted_factorial(&a, 0), QRat::one());
        let expected = &(&QRat::one() - &a) * &(&QRat::one() - &(&a * &QRat::q()));
        assert_eq!(q_shifted_factorial(&a, 2), expected);
        for n in 1..5 {
            assert!(q_shifted_factorial(&QRat::one(), n).is_zero());
        }
        // (q:q)_n = (1-q)^n [n]_q!
        let one_minus_q = QRat::from_poly(p(&[1, -1]));
        assert_eq!(
            q_shifted_factorial(&QRat::q(), 4),
            &one_minus_q.pow(4) * &q_factorial_rat(4)
        );
    }

    #[test]
    fn composition_enumeration() {
        let got: Vec<Vec<usize>> = compositions(1, 2).map(|c| c.parts().to_vec()).collect();
        assert_eq!(got, vec![vec![0, 1], vec![1, 0]]);
        let empty: Vec<Composition> = compositions(0, 0).collect();
        assert_eq!(empty, vec![Composition::new(vec![])]);
        assert_eq!(compositions(3, 0).count(), 0);
        assert_eq!(compositions(4, 3).count(), 15);
    }

    #[test]
    fn multinomial_sum_matches_definition_small() {
        // l = 2, m = 2: (2;0,2) + (2;1,1) + (2;2,0) = 1 + [2]_q + 1
        assert_eq!(multinomial_sum(2, 2), p(&[3, 1]));
        assert_eq!(multinomial_sum(0, 0), QNumPoly::one());
        assert_eq!(multinomial_sum(3, 0), QNumPoly::zero());
        assert_eq!(multinomial_sum(4, 1), QNumPoly::one());
    }

    proptest! {
        #[test]
        fn compositions_are_distinct_and_complete(m in 0usize..7, l in 1usize..5) {
            let all: Vec<Composition> = compositions(m, l).collect();
            let set: std::collections::HashSet<_> = all.iter().cloned().collect();
            prop_assert_eq!(set.len(), all.len());
            prop_assert!(all.iter().all(|c| c.len() == l && c.sum() == m));
            prop_assert_eq!(BigRat::from_integer(all.len().into()), binomial(m + l - 1, l - 1));
        }
    }
}
