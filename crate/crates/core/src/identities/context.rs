use crate::families::{
    bernoulli_numbers, bernoulli_polys, bernoulli_r, euler_numbers_multinomial,
    euler_numbers_recurrence, euler_polys, euler_r, BernoulliPath, EulerOrderPath, PolyFamily,
};
use crate::qscalar::QRat;
use crate::xpoly::XPoly;

/// Every family the catalog reads, built once per verification run.
///
/// Checkers only see families through this struct, so a test can seed a
/// corruption here and observe which identities notice it.
#[derive(Clone, Debug)]
pub struct Context {
    pub(crate) euler: PolyFamily,
    pub(crate) euler_recurrence: Vec<QRat>,
    pub(crate) bernoulli: PolyFamily,
    pub(crate) bernoulli_recurrence: Vec<QRat>,
    /// Indexed by order r, series path.
    pub(crate) euler_r: Vec<PolyFamily>,
    /// Indexed by order r, q-multinomial path (numbers only).
    pub(crate) euler_r_multinomial: Vec<Vec<QRat>>,
    pub(crate) bernoulli_r: Vec<PolyFamily>,
}

/// Names a family stored in a [`Context`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FamilyId {
    Euler,
    EulerRecurrence,
    Bernoulli,
    BernoulliRecurrence,
    EulerOrder(usize),
    EulerMultinomial(usize),
    BernoulliOrder(usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CorruptionTarget {
    /// The value at x = 0 stored alongside the polynomials.
    Number,
    /// Coefficient of x^j in member n.
    Coefficient(usize),
}

/// Add `delta` to one stored value.
#[derive(Clone, Debug, PartialEq)]
pub struct Corruption {
    pub family: FamilyId,
    pub n: usize,
    pub target: CorruptionTarget,
    pub delta: QRat,
}

impl Context {
    /// Single-variable families up to `n_single`, order-r families up to
    /// `n_order` for every `r ≤ r_max`.
    pub fn build(n_single: usize, n_order: usize, r_max: usize) -> Self {
        let euler = euler_polys(n_single);
        let bernoulli = bernoulli_polys(n_single);
        let euler_recurrence = euler_numbers_recurrence(n_single);
        let bernoulli_recurrence = bernoulli_numbers(n_single, BernoulliPath::Recurrence);
        let base = euler_numbers_recurrence(n_order);
        let mut euler_r_fams = Vec::new();
        let mut multinomial = Vec::new();
        let mut bernoulli_r_fams = Vec::new();
        for r in 0..=r_max {
            euler_r_fams.push(euler_r(n_order, r, EulerOrderPath::Series));
            multinomial.push(euler_numbers_multinomial(n_order, r, &base));
            bernoulli_r_fams.push(bernoulli_r(n_order, r));
        }
        Self {
            euler,
            euler_recurrence,
            bernoulli,
            bernoulli_recurrence,
            euler_r: euler_r_fams,
            euler_r_multinomial: multinomial,
            bernoulli_r: bernoulli_r_fams,
        }
    }

    pub fn euler(&self) -> &PolyFamily {
        &self.euler
    }

    pub fn bernoulli(&self) -> &PolyFamily {
        &self.bernoulli
    }

    pub fn euler_r(&self, r: usize) -> &PolyFamily {
        &self.euler_r[r]
    }

    pub fn bernoulli_r(&self, r: usize) -> &PolyFamily {
        &self.bernoulli_r[r]
    }

    pub fn r_max(&self) -> usize {
        self.euler_r.len() - 1
    }

    pub fn n_single(&self) -> usize {
        self.euler.n_max()
    }

    pub fn n_order(&self) -> usize {
        self.euler_r[0].n_max()
    }

    /// Largest member index of a family.
    pub fn family_len(&self, id: FamilyId) -> usize {
        match id {
            FamilyId::Euler => self.euler.len(),
            FamilyId::EulerRecurrence => self.euler_recurrence.len(),
            FamilyId::Bernoulli => self.bernoulli.len(),
            FamilyId::BernoulliRecurrence => self.bernoulli_recurrence.len(),
            FamilyId::EulerOrder(r) => self.euler_r[r].len(),
            FamilyId::EulerMultinomial(r) => self.euler_r_multinomial[r].len(),
            FamilyId::BernoulliOrder(r) => self.bernoulli_r[r].len(),
        }
    }

    /// True for families that only carry numbers, not polynomials.
    pub fn numbers_only(id: FamilyId) -> bool {
        matches!(
            id,
            FamilyId::EulerRecurrence
                | FamilyId::BernoulliRecurrence
                | FamilyId::EulerMultinomial(_)
        )
    }

    /// Apply a corruption in place.
    ///
    /// # Panics
    /// If the index is out of range, or a coefficient is targeted in a
    /// numbers-only family.
    pub fn seed_corruption(&mut self, c: &Corruption) {
        let numbers_only = |v: &mut Vec<QRat>| match c.target {
            CorruptionTarget::Number => v[c.n] = &v[c.n] + &c.delta,
            CorruptionTarget::Coefficient(_) => panic!("{:?} stores numbers only", c.family),
        };
        let family = |f: &mut PolyFamily| match c.target {
            CorruptionTarget::Number => {
                let v = f.number(c.n) + &c.delta;
                f.replace_number(c.n, v);
            }
            CorruptionTarget::Coefficient(j) => {
                let bumped = f.member(c.n) + &XPoly::monomial(c.delta.clone(), j);
                f.replace_member(c.n, bumped);
            }
        };
        match c.family {
            FamilyId::Euler => family(&mut self.euler),
            FamilyId::Bernoulli => family(&mut self.bernoulli),
            FamilyId::EulerOrder(r) => family(&mut self.euler_r[r]),
            FamilyId::BernoulliOrder(r) => family(&mut self.bernoulli_r[r]),
            FamilyId::EulerRecurrence => numbers_only(&mut self.euler_recurrence),
            FamilyId::BernoulliRecurrence => numbers_only(&mut self.bernoulli_recurrence),
            FamilyId::EulerMultinomial(r) => numbers_only(&mut self.euler_r_multinomial[r]),
        }
    }
}
