//! Numerical divisor classes on a ruled surface over a genus-`b` curve,
//! optionally blown up at `s + t` points.
//!
//! Classes are written in the rational basis `T0, F, E'_1..E'_s, E''_1..E''_t`
//! where `T0` is the normalized section (`T0^2 = 0`), `F` the fiber, and the
//! `E` classes are exceptional `(-1)`-curves orthogonal to everything else.

use crate::error::{Error, Result};
use crate::ratcalc::Rat;

/// Upper limit on each exceptional family; coefficient vectors are dense.
pub const MAX_EXCEPTIONAL: usize = 10_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SurfaceModel {
    base_genus: u64,
    total_ram: usize,
    index3: usize,
}

impl SurfaceModel {
    /// `s` blow-ups at total-ramification points and `t` at index-three points.
    pub fn new(base_genus: u64, s: usize, t: usize) -> Result<Self> {
        for count in [s, t] {
            if count > MAX_EXCEPTIONAL {
                return Err(Error::TooManyBlowups(count));
            }
        }
        Ok(SurfaceModel {
            base_genus,
            total_ram: s,
            index3: t,
        })
    }

    /// The ruled surface itself, no blow-ups.
    pub fn ruled(base_genus: u64) -> Self {
        SurfaceModel {
            base_genus,
            total_ram: 0,
            index3: 0,
        }
    }

    pub fn base_genus(&self) -> u64 {
        self.base_genus
    }

    pub fn s(&self) -> usize {
        self.total_ram
    }

    pub fn t(&self) -> usize {
        self.index3
    }

    pub fn is_blown_up(&self) -> bool {
        self.total_ram + self.index3 > 0
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NumClass {
    model: SurfaceModel,
    t0: Rat,
    f: Rat,
    e_prime: Vec<Rat>,
    e_dblprime: Vec<Rat>,
}

impl NumClass {
    pub fn new(
        model: SurfaceModel,
        t0: Rat,
        f: Rat,
        e_prime: Vec<Rat>,
        e_dblprime: Vec<Rat>,
    ) -> Result<Self> {
        for (expected, found) in [(model.s(), e_prime.len()), (model.t(), e_dblprime.len())] {
            if expected != found {
                return Err(Error::LengthMismatch { expected, found });
            }
        }
        Ok(NumClass {
            model,
            t0,
            f,
            e_prime,
            e_dblprime,
        })
    }

    pub fn zero(model: SurfaceModel) -> Self {
        NumClass {
            model,
            t0: Rat::zero(),
            f: Rat::zero(),
            e_prime: vec![Rat::zero(); model.s()],
            e_dblprime: vec![Rat::zero(); model.t()],
        }
    }

    /// `a T0 + b F` with no exceptional part.
    pub fn from_basis(model: SurfaceModel, t0: Rat, f: Rat) -> Self {
        NumClass {
            t0,
            f,
            ..NumClass::zero(model)
        }
    }

    pub fn section(model: SurfaceModel) -> Self {
        Self::from_basis(model, Rat::one(), Rat::zero())
    }

    pub fn fiber(model: SurfaceModel) -> Self {
        Self::from_basis(model, Rat::zero(), Rat::one())
    }

    /// The exceptional class `E'_i` (0-based).
    pub fn e_prime(model: SurfaceModel, i: usize) -> Result<Self> {
        let mut c = NumClass::zero(model);
        let len = c.e_prime.len();
        *c.e_prime
            .get_mut(i)
            .ok_or(Error::ExceptionalIndex { index: i, len })? = Rat::one();
        Ok(c)
    }

    /// The exceptional class `E''_j` (0-based).
    pub fn e_dblprime(model: SurfaceModel, j: usize) -> Result<Self> {
        let mut c = NumClass::zero(model);
        let len = c.e_dblprime.len();
        *c.e_dblprime
            .get_mut(j)
            .ok_or(Error::ExceptionalIndex { index: j, len })? = Rat::one();
        Ok(c)
    }

    pub fn model(&self) -> SurfaceModel {
        self.model
    }

    pub fn t0(&self) -> &Rat {
        &self.t0
    }

    pub fn f(&self) -> &Rat {
        &self.f
    }

    pub fn e_prime_coeffs(&self) -> &[Rat] {
        &self.e_prime
    }

    pub fn e_dblprime_coeffs(&self) -> &[Rat] {
        &self.e_dblprime
    }

    fn ensure_same(&self, other: &NumClass) -> Result<()> {
        if self.model != other.model {
            return Err(Error::ModelMismatch);
        }
        Ok(())
    }

    pub fn plus(&self, other: &NumClass) -> Result<NumClass> {
        self.ensure_same(other)?;
        let zip = |a: &[Rat], b: &[Rat]| a.iter().zip(b).map(|(x, y)| x + y).collect();
        Ok(NumClass {
            model: self.model,
            t0: &self.t0 + &other.t0,
            f: &self.f + &other.f,
            e_prime: zip(&self.e_prime, &other.e_prime),
            e_dblprime: zip(&self.e_dblprime, &other.e_dblprime),
        })
    }

    pub fn minus(&self, other: &NumClass) -> Result<NumClass> {
        self.plus(&other.scaled(&Rat::from_int(-1)))
    }

    pub fn scaled(&self, k: &Rat) -> NumClass {
        let sc = |v: &[Rat]| v.iter().map(|x| x * k).collect();
        NumClass {
            model: self.model,
            t0: &self.t0 * k,
            f: &self.f * k,
            e_prime: sc(&self.e_prime),
            e_dblprime: sc(&self.e_dblprime),
        }
    }

    pub fn intersect(&self, other: &NumClass) -> Result<Rat> {
        self.ensure_same(other)?;
        let dot = |a: &[Rat], b: &[Rat]| a.iter().zip(b).map(|(x, y)| x * y).sum::<Rat>();
        Ok(&self.t0 * &other.f + &self.f * &other.t0
            - dot(&self.e_prime, &other.e_prime)
            - dot(&self.e_dblprime, &other.e_dblprime))
    }

    pub fn self_intersection(&self) -> Rat {
        self.intersect(self).expect("same model")
    }

    pub fn is_zero(&self) -> bool {
        self.t0.is_zero()
            && self.f.is_zero()
            && self.e_prime.iter().all(Rat::is_zero)
            && self.e_dblprime.iter().all(Rat::is_zero)
    }
}

/// Intersection pairing of two classes on the same model.
pub fn intersect(a: &NumClass, b: &NumClass) -> Result<Rat> {
    a.intersect(b)
}

/// `K = -2 T0 + (2b - 2) F + sum E'_i + sum E''_j`, with the pullback of
/// `K_B` represented as `(2b - 2) F`.
pub fn canonical_class(m: SurfaceModel) -> NumClass {
    let b = Rat::from_int(m.base_genus() as i64);
    NumClass {
        model: m,
        t0: Rat::from_int(-2),
        f: Rat::from_int(2) * b - Rat::from_int(2),
        e_prime: vec![Rat::one(); m.s()],
        e_dblprime: vec![Rat::one(); m.t()],
    }
}

/// `chi(O) = 1 - b`; blow-ups do not change it.
pub fn chi_structure(m: SurfaceModel) -> i64 {
    1 - m.base_genus() as i64
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn r(n: i64) -> Rat {
        Rat::from_int(n)
    }

    #[test]
    fn pairing_table() {
        let m = SurfaceModel::new(0, 1, 1).unwrap();
        let t0 = NumClass::section(m);
        let f = NumClass::fiber(m);
        let e1 = NumClass::e_prime(m, 0).unwrap();
        let e2 = NumClass::e_dblprime(m, 0).unwrap();
        assert_eq!(t0.intersect(&f).unwrap(), r(1));
        assert_eq!(t0.self_intersection(), r(0));
        assert_eq!(f.self_intersection(), r(0));
        assert_eq!(e1.self_intersection(), r(-1));
        assert_eq!(e2.self_intersection(), r(-1));
        for x in [&t0, &f, &e2] {
            assert_eq!(e1.intersect(x).unwrap(), r(0));
        }
    }

    #[test]
    fn bilinear_example() {
        let m = SurfaceModel::ruled(0);
        let a = NumClass::from_basis(m, r(1), r(2));
        let b = NumClass::from_basis(m, r(3), r(-1));
        assert_eq!(a.intersect(&b).unwrap(), r(5));
    }

    #[test]
    fn model_mismatch() {
        let a = NumClass::section(SurfaceModel::ruled(0));
        let b = NumClass::section(SurfaceModel::ruled(1));
        assert_eq!(a.intersect(&b), Err(Error::ModelMismatch));
        assert_eq!(a.plus(&b), Err(Error::ModelMismatch));
        let m = SurfaceModel::new(0, 2, 0).unwrap();
        assert!(NumClass::new(m, r(0), r(0), vec![r(1)], vec![]).is_err());
        assert!(NumClass::e_prime(m, 2).is_err());
    }

    #[test]
    fn canonical_class_examples() {
        let k = canonical_class(SurfaceModel::ruled(0));
        assert_eq!(k, NumClass::from_basis(SurfaceModel::ruled(0), r(-2), r(-2)));
        assert_eq!(k.self_intersection(), r(8));
        assert_eq!(canonical_class(SurfaceModel::ruled(1)).self_intersection(), r(0));
        assert_eq!(canonical_class(SurfaceModel::new(0, 1, 2).unwrap()).self_intersection(), r(5));
    }

    #[test]
    fn chi_examples() {
        assert_eq!(chi_structure(SurfaceModel::ruled(0)), 1);
        assert_eq!(chi_structure(SurfaceModel::ruled(1)), 0);
        assert_eq!(chi_structure(SurfaceModel::new(3, 2, 1).unwrap()), -2);
    }

    #[test]
    fn rejects_huge_blowup_counts() {
        assert_eq!(SurfaceModel::new(0, MAX_EXCEPTIONAL + 1, 0), Err(Error::TooManyBlowups(MAX_EXCEPTIONAL + 1)));
        assert!(SurfaceModel::new(0, MAX_EXCEPTIONAL, MAX_EXCEPTIONAL).is_ok());
    }

    fn rat() -> impl Strategy<Value = Rat> {
        (-30i64..30, 1i64..8).prop_map(|(p, q)| Rat::new(p, q).unwrap())
    }

    fn class(m: SurfaceModel) -> impl Strategy<Value = NumClass> {
        (
            rat(),
            rat(),
            prop::collection::vec(rat(), m.s()),
            prop::collection::vec(rat(), m.t()),
        )
            .prop_map(move |(a, b, e1, e2)| NumClass::new(m, a, b, e1, e2).unwrap())
    }

    const M: SurfaceModel = SurfaceModel { base_genus: 2, total_ram: 2, index3: 3 };

    proptest! {
        #[test]
        fn symmetric(a in class(M), b in class(M)) {
            prop_assert_eq!(a.intersect(&b).unwrap(), b.intersect(&a).unwrap());
        }

        #[test]
        fn bilinear(a in class(M), b in class(M), c in class(M), k in rat()) {
            let lhs = a.plus(&c.scaled(&k)).unwrap().intersect(&b).unwrap();
            let rhs = a.intersect(&b).unwrap() + &k * c.intersect(&b).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn canonical_square_law(b in 0u64..60, s in 0usize..40, t in 0usize..40) {
            let m = SurfaceModel::new(b, s, t).unwrap();
            let expected = -8 * (b as i64 - 1) - s as i64 - t as i64;
            prop_assert_eq!(canonical_class(m).self_intersection(), r(expected));
        }
    }
}
