use std::time::Instant;

use num_bigint::BigInt;
use num_traits::One;

use super::classical::{classical_bernoulli, classical_euler};
use super::context::Context;
use super::report::{IdentityReport, Side, Witness};
use crate::dpseries::DPSeries;
use crate::error::{Error, Result};
use crate::families::{bernoulli_g, euler_g, euler_g_r, PolyFamily};
use crate::qcomb::{binomial, multinomial_sum, q_binomial_rat, q_factorial_rat, q_int_rat};
use crate::qscalar::{BigRat, QRat};
use crate::umbral::{expand_in_euler, expand_in_euler_r, pair, reconstruct};
use crate::xpoly::XPoly;

/// Index bounds for a verification run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Ranges {
    /// n bound for identities in one family of order 1.
    pub n_single: usize,
    /// n bound for order-r identities.
    pub n_order: usize,
    pub r_max: usize,
    /// n bound for the two-variable grid check.
    pub n_bivariate: usize,
}

impl Ranges {
    pub fn uniform(n_max: usize, r_max: usize) -> Self {
        Self {
            n_single: n_max,
            n_order: n_max,
            r_max,
            n_bivariate: n_max,
        }
    }

    /// A context large enough for every entry at these bounds.
    pub fn context(&self) -> Context {
        let single = self.n_single.max(self.n_bivariate).max(self.n_order) + 1;
        Context::build(single, self.n_order, self.r_max)
    }
}

/// How the two sides of an identity are compared.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub enum Comparison {
    /// Equality in ℚ(q).
    #[default]
    Exact,
    /// Equality of the images under q ↦ q0. A pole on either side fails.
    AtQ(BigRat),
}

impl Comparison {
    fn scalars(&self, a: &QRat, b: &QRat) -> bool {
        match self {
            Comparison::Exact => a == b,
            Comparison::AtQ(q0) => matches!((a.eval(q0), b.eval(q0)), (Ok(x), Ok(y)) if x == y),
        }
    }

    fn polys(&self, a: &XPoly, b: &XPoly) -> bool {
        match self {
            Comparison::Exact => a == b,
            Comparison::AtQ(_) => {
                let len = a.coeffs().len().max(b.coeffs().len());
                (0..len).all(|k| self.scalars(&a.coeff(k), &b.coeff(k)))
            }
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Scope {
    Single,
    Bivariate,
    Order,
    /// Single-family pairs up to `n_single` plus order-r pairs.
    Mixed,
}

struct Entry {
    id: &'static str,
    scope: Scope,
    check: fn(&mut Checker),
}

const CATALOG: &[Entry] = &[
    Entry {
        id: "eq18",
        scope: Scope::Single,
        check: eq18,
    },
    Entry {
        id: "lemma1",
        scope: Scope::Single,
        check: lemma1,
    },
    Entry {
        id: "thm2",
        scope: Scope::Single,
        check: thm2,
    },
    Entry {
        id: "eq26",
        scope: Scope::Bivariate,
        check: eq26,
    },
    Entry {
        id: "thm3",
        scope: Scope::Single,
        check: thm3,
    },
    Entry {
        id: "thm4",
        scope: Scope::Single,
        check: thm4,
    },
    Entry {
        id: "eq37",
        scope: Scope::Single,
        check: eq37,
    },
    Entry {
        id: "thm5",
        scope: Scope::Order,
        check: thm5,
    },
    Entry {
        id: "eq51",
        scope: Scope::Order,
        check: eq51,
    },
    Entry {
        id: "thm6",
        scope: Scope::Order,
        check: thm6,
    },
    Entry {
        id: "thm7",
        scope: Scope::Order,
        check: thm7,
    },
    Entry {
        id: "thm8",
        scope: Scope::Order,
        check: thm8,
    },
    Entry {
        id: "thm9",
        scope: Scope::Order,
        check: thm9,
    },
    Entry {
        id: "sheffer",
        scope: Scope::Mixed,
        check: sheffer,
    },
    Entry {
        id: "q1-limits",
        scope: Scope::Single,
        check: q1_limits,
    },
];

/// Catalog identifiers in run order.
pub fn catalog_ids() -> Vec<&'static str> {
    CATALOG.iter().map(|e| e.id).collect()
}

fn lookup(id: &str) -> Result<&'static Entry> {
    CATALOG
        .iter()
        .find(|e| e.id == id)
        .ok_or_else(|| Error::UnknownIdentity(id.to_string()))
}

/// Run one entry with every bound set to `n_max`.
pub fn verify(id: &str, n_max: usize, r_max: usize) -> Result<IdentityReport> {
    let entry = lookup(id)?;
    let ranges = Ranges::uniform(n_max, r_max);
    Ok(run(entry, &ranges.context(), &ranges, &Comparison::Exact))
}

/// Run the whole catalog with every bound set to `n_max`.
pub fn verify_all(n_max: usize, r_max: usize) -> Vec<IdentityReport> {
    let ranges = Ranges::uniform(n_max, r_max);
    verify_with(
        &ranges.context(),
        &catalog_ids(),
        &ranges,
        &Comparison::Exact,
        1,
    )
    .expect("catalog ids are known")
}

/// Run the given entries against a prepared context on up to `jobs` threads.
/// Reports come back in the order of `ids`.
///
/// # Panics
/// If `ctx` is smaller than `ranges` requires.
pub fn verify_with(
    ctx: &Context,
    ids: &[&str],
    ranges: &Ranges,
    cmp: &Comparison,
    jobs: usize,
) -> Result<Vec<IdentityReport>> {
    let entries = ids
        .iter()
        .map(|id| lookup(id))
        .collect::<Result<Vec<_>>>()?;
    let jobs = jobs.clamp(1, entries.len().max(1));
    if jobs == 1 {
        return Ok(entries.iter().map(|e| run(e, ctx, ranges, cmp)).collect());
    }
    let mut slots: Vec<Option<IdentityReport>> = vec![None; entries.len()];
    std::thread::scope(|s| {
        let handles: Vec<_> = (0..jobs)
            .map(|w| {
                let entries = &entries;
                s.spawn(move || {
                    (w..entries.len())
                        .step_by(jobs)
                        .map(|i| (i, run(entries[i], ctx, ranges, cmp)))
                        .collect::<Vec<_>>()
                })
            })
            .collect();
        for h in handles {
            for (i, report) in h.join().expect("checker panicked") {
                slots[i] = Some(report);
            }
        }
    });
    Ok(slots
        .into_iter()
        .map(|r| r.expect("every slot filled"))
        .collect())
}

fn run(entry: &Entry, ctx: &Context, ranges: &Ranges, cmp: &Comparison) -> IdentityReport {
    let start = Instant::now();
    let mut checker = Checker {
        ctx,
        ranges,
        cmp,
        witnesses: Vec::new(),
    };
    (entry.check)(&mut checker);
    let (n_max, r_max) = match entry.scope {
        Scope::Single => (ranges.n_single, None),
        Scope::Bivariate => (ranges.n_bivariate, None),
        Scope::Order => (ranges.n_order, Some(ranges.r_max)),
        Scope::Mixed => (ranges.n_single, Some(ranges.r_max)),
    };
    IdentityReport {
        id: entry.id.to_string(),
        n_max,
        r_max,
        witnesses: checker.witnesses,
        elapsed: start.elapsed(),
    }
}

struct Checker<'a> {
    ctx: &'a Context,
    ranges: &'a Ranges,
    cmp: &'a Comparison,
    witnesses: Vec<Witness>,
}

impl Checker<'_> {
    fn scalar(&mut self, n: usize, k: Option<usize>, r: Option<usize>, lhs: QRat, rhs: QRat) {
        if !self.cmp.scalars(&lhs, &rhs) {
            self.witnesses.push(Witness {
                n,
                k,
                r,
                lhs: Side::Scalar(lhs),
                rhs: Side::Scalar(rhs),
            });
        }
    }

    fn poly(&mut self, n: usize, k: Option<usize>, r: Option<usize>, lhs: XPoly, rhs: XPoly) {
        if !self.cmp.polys(&lhs, &rhs) {
            self.witnesses.push(Witness {
                n,
                k,
                r,
                lhs: Side::Poly(lhs),
                rhs: Side::Poly(rhs),
            });
        }
    }
}

fn delta(cond: bool, value: i64) -> QRat {
    QRat::from_int(if cond { value } else { 0 })
}

fn qbin(n: usize, k: usize) -> QRat {
    q_binomial_rat(n as i64, k as i64)
}

fn eq18(c: &mut Checker) {
    let one = QRat::one();
    for n in 0..=c.ranges.n_single {
        let e = c.ctx.euler();
        let lhs = &e.member(n).eval(&one) + e.number(n);
        c.scalar(n, None, None, lhs, delta(n == 0, 2));
    }
}

fn lemma1(c: &mut Checker) {
    for n in 0..=c.ranges.n_single {
        let numbers = c.ctx.euler().numbers();
        let recurrence = c.ctx.euler_recurrence[n].clone();
        c.scalar(n, None, None, recurrence, numbers[n].clone());
        if n > 0 {
            let lhs = numbers[n].scale(&BigRat::from_integer((-2).into()));
            let rhs: QRat = (0..n).map(|l| &qbin(n, l) * &numbers[l]).sum();
            c.scalar(n, None, None, lhs, rhs);
        }
    }
}

fn thm2(c: &mut Checker) {
    let n_max = c.ranges.n_single;
    let g = bernoulli_g(n_max);
    let (zero, one) = (QRat::zero(), QRat::one());
    for n in 0..=n_max {
        let e = c.ctx.euler();
        let p = e.member(n);
        let lhs = pair(&g, p).expect("order covers degree");
        // (E_{n+1}(1) - E_{n+1}) / [n+1], the step that ties E_n to E_{n+1}
        let boundary = &(&e.member(n + 1).eval(&one) - e.number(n + 1)) / &q_int_rat(n + 1);
        c.scalar(n, None, None, lhs.clone(), boundary);
        c.scalar(n, None, None, lhs, p.jackson_interval(&zero, &one));
    }
}

fn eq26(c: &mut Checker) {
    for n in 0..=c.ranges.n_bivariate {
        let e = c.ctx.euler();
        let antiderivative = e.member(n).jackson0();
        let next = e.member(n + 1);
        let scale = q_int_rat(n + 1).inv().expect("[n+1] is nonzero");
        let points = n + 2;
        for i in 0..points {
            let x = QRat::from_ratio(i as i64, 2);
            for j in 0..points {
                let y = QRat::from_ratio(3 - j as i64, 3);
                let upper = &x + &y;
                let lhs = &antiderivative.eval(&upper) - &antiderivative.eval(&x);
                let rhs = &(&next.eval(&upper) - &next.eval(&x)) * &scale;
                c.scalar(n, None, None, lhs, rhs);
            }
        }
    }
}

fn thm3(c: &mut Checker) {
    let basis = c.ctx.euler().members();
    for n in 0..=c.ranges.n_single {
        let monomial = XPoly::monomial(QRat::one(), n);
        let bernoulli = c.ctx.bernoulli().member(n);
        for p in [&monomial, bernoulli] {
            let rebuilt = reconstruct(&expand_in_euler(p), basis);
            c.poly(n, None, None, rebuilt, p.clone());
        }
    }
}

fn thm4(c: &mut Checker) {
    let (e, b) = (c.ctx.euler(), c.ctx.bernoulli());
    let two = BigRat::from_integer(2.into());
    for n in 2..=c.ranges.n_single {
        // [n](q-1) / (2[2])
        let middle = &(&q_int_rat(n) * &(&QRat::q() - &QRat::one())) / &q_int_rat(2).scale(&two);
        let mut rhs = e.member(n) + &e.member(n - 1).scale(&middle);
        for k in 0..=n - 2 {
            rhs = &rhs + &e.member(k).scale(&(&qbin(n, k) * b.number(n - k)));
        }
        c.poly(n, None, None, b.member(n).clone(), rhs);
    }
}

fn eq37(c: &mut Checker) {
    let one = QRat::one();
    for n in 0..=c.ranges.n_single {
        let b = c.ctx.bernoulli();
        if n == 0 {
            c.scalar(0, None, None, b.number(0).clone(), QRat::one());
        }
        let lhs = &b.member(n).eval(&one) - b.number(n);
        c.scalar(n, None, None, lhs, delta(n == 1, 1));
        let recurrence = c.ctx.bernoulli_recurrence[n].clone();
        c.scalar(n, None, None, recurrence, b.number(n).clone());
    }
}

fn thm5(c: &mut Checker) {
    for r in 0..=c.ranges.r_max {
        for n in 0..=c.ranges.n_order {
            let lhs = c.ctx.euler_r_multinomial[r][n].clone();
            let rhs = c.ctx.euler_r(r).number(n).clone();
            c.scalar(n, None, Some(r), lhs, rhs);
        }
    }
}

fn eq51(c: &mut Checker) {
    let one = QRat::one();
    let two = BigRat::from_integer(2.into());
    for r in 1..=c.ranges.r_max {
        for n in 0..=c.ranges.n_order {
            let (cur, prev) = (c.ctx.euler_r(r), c.ctx.euler_r(r - 1));
            let lhs = &cur.member(n).eval(&one) + cur.number(n);
            let rhs = prev.number(n).scale(&two);
            c.scalar(n, None, Some(r), lhs, rhs);
        }
    }
}

fn thm6(c: &mut Checker) {
    for r in 1..=c.ranges.r_max {
        for n in 0..=c.ranges.n_order {
            let prev = c.ctx.euler_r(r - 1);
            let rhs: XPoly = (0..=n)
                .map(|k| {
                    c.ctx
                        .euler()
                        .member(k)
                        .scale(&(&qbin(n, k) * prev.number(n - k)))
                })
                .sum();
            c.poly(n, None, Some(r), c.ctx.euler_r(r).member(n).clone(), rhs);
        }
    }
}

fn thm7(c: &mut Checker) {
    for r in 0..=c.ranges.r_max {
        let basis = c.ctx.euler_r(r).members();
        for n in 0..=c.ranges.n_order {
            let monomial = XPoly::monomial(QRat::one(), n);
            let euler = c.ctx.euler().member(n);
            let bernoulli = c.ctx.bernoulli_r(r).member(n);
            for p in [&monomial, euler, bernoulli] {
                let rebuilt = reconstruct(&expand_in_euler_r(p, r), basis);
                c.poly(n, None, Some(r), rebuilt, p.clone());
            }
        }
    }
}

/// Closed-form coefficients of `p_n` in the order-r Euler basis, where
/// `numbers[j]` is the value at zero of the Appell family containing `p_n`:
/// `b_k = 2^-r Σ_m Σ_l C(r,l) Σ_{|i|=m, len l} (m; i)_q C(m+k,m)_q C(n,m+k)_q numbers[n-m-k]`.
fn closed_form_coefficients(n: usize, r: usize, numbers: &[QRat]) -> Vec<QRat> {
    let scale = BigRat::new(BigInt::one(), BigInt::one() << r);
    (0..=n)
        .map(|k| {
            let sum: QRat = (0..=n - k)
                .map(|m| {
                    let weight: QRat = (0..=r)
                        .map(|l| QRat::from(multinomial_sum(m, l)).scale(&binomial(r, l)))
                        .sum();
                    &(&weight * &(&qbin(m + k, m) * &qbin(n, m + k))) * &numbers[n - m - k]
                })
                .sum();
            sum.scale(&scale)
        })
        .collect()
}

fn closed_form_check(c: &mut Checker, target: impl Fn(&Context, usize) -> &PolyFamily) {
    for r in 0..=c.ranges.r_max {
        for n in 0..=c.ranges.n_order {
            let family = target(c.ctx, r);
            let coeffs = closed_form_coefficients(n, r, family.numbers());
            let rebuilt = reconstruct(&coeffs, c.ctx.euler_r(r).members());
            c.poly(n, None, Some(r), rebuilt, family.member(n).clone());
        }
    }
}

fn thm8(c: &mut Checker) {
    closed_form_check(c, |ctx, _| ctx.euler());
}

fn thm9(c: &mut Checker) {
    closed_form_check(c, |ctx, r| ctx.bernoulli_r(r));
}

fn sheffer_pairs(
    c: &mut Checker,
    g: &DPSeries,
    family: &PolyFamily,
    n_max: usize,
    r: Option<usize>,
) {
    for k in 0..=n_max {
        let functional = g.try_mul(&DPSeries::t_pow(k, n_max)).expect("same order");
        for n in 0..=n_max {
            let lhs = pair(&functional, family.member(n)).expect("order covers degree");
            let rhs = if n == k {
                q_factorial_rat(n)
            } else {
                QRat::zero()
            };
            c.scalar(n, Some(k), r, lhs, rhs);
        }
    }
}

fn sheffer(c: &mut Checker) {
    let (n_single, n_order) = (c.ranges.n_single, c.ranges.n_order);
    let (euler, bernoulli) = (c.ctx.euler(), c.ctx.bernoulli());
    sheffer_pairs(c, &euler_g(n_single), euler, n_single, Some(1));
    sheffer_pairs(c, &bernoulli_g(n_single), bernoulli, n_single, None);
    for r in 0..=c.ranges.r_max {
        let family = c.ctx.euler_r(r);
        sheffer_pairs(c, &euler_g_r(n_order, r), family, n_order, Some(r));
    }
}

fn q1_limits(c: &mut Checker) {
    let n_max = c.ranges.n_single;
    let one = BigRat::one();
    let oracles = [
        (c.ctx.euler().numbers(), classical_euler(n_max)),
        (c.ctx.bernoulli().numbers(), classical_bernoulli(n_max)),
    ];
    for (numbers, oracle) in oracles {
        for (n, expected) in oracle.into_iter().enumerate() {
            let lhs = numbers[n]
                .eval_to_qrat(&one)
                .unwrap_or_else(|_| numbers[n].clone());
            c.scalar(n, None, None, lhs, QRat::from_bigrat(expected));
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::identities::{Corruption, CorruptionTarget, FamilyId, Status};

    #[test]
    fn eq18_passes() {
        assert_eq!(verify("eq18", 8, 0).unwrap().status(), Status::Pass);
    }

    #[test]
    fn thm4_at_two() {
        let report = verify("thm4", 2, 0).unwrap();
        assert!(report.passed());
        let b = crate::families::bernoulli_polys(2);
        // x^2 - x + q^2/([3][2])
        let b2 = &q_int_rat(3) * &q_int_rat(2);
        let expected = XPoly::from_coeffs(vec![
            &(&QRat::q() * &QRat::q()) / &b2,
            QRat::from_int(-1),
            QRat::one(),
        ]);
        assert_eq!(b.member(2), &expected);
    }

    #[test]
    fn q1_limits_twelve() {
        assert!(verify("q1-limits", 12, 0).unwrap().passed());
    }

    #[test]
    fn unknown_id() {
        assert!(matches!(
            verify("nope", 3, 1),
            Err(Error::UnknownIdentity(_))
        ));
    }

    #[test]
    fn all_pass_small() {
        let reports = verify_all(6, 2);
        assert_eq!(reports.len(), 15);
        for r in &reports {
            assert!(r.passed(), "{} failed: {:?}", r.id, r.witnesses.first());
        }
        let ids: Vec<_> = reports.iter().map(|r| r.id.as_str()).collect();
        assert_eq!(ids, catalog_ids());
    }

    #[test]
    fn degenerate_ranges() {
        assert!(verify_all(0, 0).iter().all(IdentityReport::passed));
    }

    #[test]
    fn corrupted_e2_fails_eq18() {
        let ranges = Ranges::uniform(5, 1);
        let mut ctx = ranges.context();
        ctx.seed_corruption(&Corruption {
            family: FamilyId::Euler,
            n: 2,
            target: CorruptionTarget::Number,
            delta: QRat::one(),
        });
        let report = verify_with(&ctx, &["eq18"], &ranges, &Comparison::Exact, 1)
            .unwrap()
            .remove(0);
        assert_eq!(report.status(), Status::Fail);
        assert_eq!(report.witnesses.len(), 1);
        assert_eq!(report.witnesses[0].n, 2);
    }

    #[test]
    fn jobs_do_not_change_output() {
        let ranges = Ranges::uniform(4, 2);
        let ctx = ranges.context();
        let ids = catalog_ids();
        let strip = |v: Vec<IdentityReport>| {
            v.into_iter()
                .map(|r| serde_json::to_string(&r.json_view(false)).unwrap())
                .collect::<Vec<_>>()
        };
        let one = strip(verify_with(&ctx, &ids, &ranges, &Comparison::Exact, 1).unwrap());
        let four = strip(verify_with(&ctx, &ids, &ranges, &Comparison::Exact, 4).unwrap());
        assert_eq!(one, four);
    }

    #[test]
    fn thm8_at_order_one_matches_thm6_coefficients() {
        // over the order-1 basis both give E_n(x) with b_k = C(n,k) E^{(0)}_{n-k} = δ_{n,k}
        let numbers = crate::families::euler_numbers_recurrence(8);
        for n in 0..=8 {
            let coeffs = closed_form_coefficients(n, 1, &numbers);
            for (k, b) in coeffs.iter().enumerate() {
                assert_eq!(b, &delta(k == n, 1), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn witness_json_shape() {
        let w = Witness {
            n: 2,
            k: None,
            r: Some(1),
            lhs: Side::Scalar(QRat::one()),
            rhs: Side::Poly(XPoly::x()),
        };
        let v = serde_json::to_value(&w).unwrap();
        assert_eq!(v["n"], 2);
        assert!(v["k"].is_null());
        assert_eq!(v["rhs"].as_array().unwrap().len(), 2);
    }
}
