//! Pushforward identities for a flat degree-`n` cover `S -> Y` of a ruled
//! surface, and the decomposition of `c1(E)` in the `(T0, F, E', E'')` basis.
//!
//! The covering surface is never modeled; `R^2` enters as a scalar.

use crate::chern::{self, BundleData};
use crate::chow::{self, NumClass, SurfaceModel};
use crate::error::{Error, Result};
use crate::ratcalc::Rat;

/// Smallest fiber genus for which the trigonal model applies.
pub const MIN_GENUS_TRIGONAL: i64 = 5;
/// Smallest fiber genus for which the fourgonal model applies (the `g^1_4` on
/// the general fiber is unique from here on).
pub const MIN_GENUS_FOURGONAL: i64 = 10;

pub fn min_genus(n: u32) -> Option<i64> {
    match n {
        3 => Some(MIN_GENUS_TRIGONAL),
        4 => Some(MIN_GENUS_FOURGONAL),
        _ => None,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverData {
    degree: u32,
    genus: i64,
    surface: SurfaceModel,
    reduced_bundle: BundleData,
    rsq: Option<Rat>,
}

impl CoverData {
    pub fn new(
        degree: u32,
        genus: i64,
        surface: SurfaceModel,
        reduced_bundle: BundleData,
        rsq: Option<Rat>,
    ) -> Result<Self> {
        if degree < 2 {
            return Err(Error::Precondition(format!("cover degree {degree} < 2")));
        }
        reduced_bundle.ensure_rank(degree - 1)?;
        if reduced_bundle.model() != surface {
            return Err(Error::ModelMismatch);
        }
        if let Some(min) = min_genus(degree) {
            if genus < min {
                return Err(Error::Precondition(format!(
                    "degree {degree} covers need g >= {min}, got {genus}"
                )));
            }
        }
        Ok(CoverData {
            degree,
            genus,
            surface,
            reduced_bundle,
            rsq,
        })
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn genus(&self) -> i64 {
        self.genus
    }

    pub fn surface(&self) -> SurfaceModel {
        self.surface
    }

    pub fn reduced_bundle(&self) -> &BundleData {
        &self.reduced_bundle
    }

    pub fn rsq(&self) -> Option<&Rat> {
        self.rsq.as_ref()
    }
}

/// `rho_* R = 2 c1(E)`.
pub fn push_ramification(cd: &CoverData) -> NumClass {
    cd.reduced_bundle.c1().scaled(&Rat::from_int(2))
}

/// `chi(O_S) = n chi(O_Y) + c1(E).K_Y / 2 + c1(E)^2 / 2 - c2(E)`.
pub fn chi_total_space(cd: &CoverData) -> Rat {
    let e = &cd.reduced_bundle;
    let k = chow::canonical_class(cd.surface);
    let half = Rat::new(1, 2).expect("literal");
    Rat::from_int(cd.degree as i64 * chow::chi_structure(cd.surface))
        + &half * e.c1().intersect(&k).expect("same model")
        + &half * e.c1_squared()
        - e.c2()
}

/// Chern data of `rho_* O_S(2R)`: `(n, 3 c1(E), 4 c1(E)^2 + c2(E) - R^2)`.
pub fn push_2r_bundle(cd: &CoverData) -> Result<BundleData> {
    let rsq = cd
        .rsq
        .as_ref()
        .ok_or_else(|| Error::Precondition("R^2 is required".into()))?;
    let e = &cd.reduced_bundle;
    BundleData::new(
        cd.degree,
        e.c1().scaled(&Rat::from_int(3)),
        Rat::from_int(4) * e.c1_squared() + e.c2() - rsq,
    )
}

fn push_2r_c2(e: &BundleData, rsq: &Rat) -> Rat {
    Rat::from_int(4) * e.c1_squared() + e.c2() - rsq
}

/// Trigonal `R^2 = 2 c1^2 - 3 c2`.
pub fn trigonal_rsq(e: &BundleData) -> Result<Rat> {
    e.ensure_rank(2)?;
    Ok(Rat::from_int(2) * e.c1_squared() - Rat::from_int(3) * e.c2())
}

/// Trigonal `R^2` obtained by solving `c2(Sym^2 E) = c2(rho_* O_S(2R))`.
/// The pushforward `c2` is affine in `R^2` with slope `-1`.
pub fn trigonal_rsq_via_sym2(e: &BundleData) -> Result<Rat> {
    e.ensure_rank(2)?;
    let target = chern::sym2(e)?.c2().clone();
    let at_zero = push_2r_c2(e, &Rat::zero());
    let slope = push_2r_c2(e, &Rat::one()) - &at_zero;
    (target - at_zero).checked_div(&slope)
}

fn check_conics(e: &BundleData, f: &BundleData) -> Result<()> {
    e.ensure_rank(3)?;
    f.ensure_rank(2)?;
    if e.c1() != f.c1() {
        return Err(Error::C1Mismatch);
    }
    Ok(())
}

/// Fourgonal `R^2 = 2 c1(E)^2 - 4 c2(E) + c2(F)`, `F` the bundle of conics.
pub fn fourgonal_rsq(e: &BundleData, f: &BundleData) -> Result<Rat> {
    check_conics(e, f)?;
    Ok(Rat::from_int(2) * e.c1_squared() - Rat::from_int(4) * e.c2() + f.c2())
}

/// Fourgonal `R^2` from `0 -> F -> Sym^2 E -> rho_* O_S(2R) -> 0`: the
/// quotient's Chern data comes from the Whitney formula, then `R^2` is read
/// off its `c2`.
pub fn fourgonal_rsq_via_whitney(e: &BundleData, f: &BundleData) -> Result<Rat> {
    check_conics(e, f)?;
    let total = chern::sym2(e)?;
    let quot_c1 = total.c1().minus(f.c1())?;
    let quot_c2 = total.c2() - f.c2() - f.c1().intersect(&quot_c1)?;
    let quot = BundleData::new(total.rank() - f.rank(), quot_c1, quot_c2)?;
    if quot.c1() != &e.c1().scaled(&Rat::from_int(3)) {
        return Err(Error::C1Mismatch);
    }
    let at_zero = push_2r_c2(e, &Rat::zero());
    let slope = push_2r_c2(e, &Rat::one()) - &at_zero;
    (quot.c2() - &at_zero).checked_div(&slope)
}

/// Solves the conics sequence for `F` given `Sym^2 E` and the pushforward.
pub fn conics_bundle(e: &BundleData, push_2r: &BundleData) -> Result<BundleData> {
    e.ensure_rank(3)?;
    chern::whitney_sub(&chern::sym2(e)?, push_2r)
}

fn slot(g: i64, n: u32) -> Result<Rat> {
    let d = g + n as i64 - 1;
    if d <= 0 {
        return Err(Error::Precondition(format!("g + n - 1 = {d} must be positive")));
    }
    Ok(Rat::from_int(d))
}

/// `c1(E) = (g + n - 1) T0 + c1^2 / (2 (g + n - 1)) F` on an unblown model.
pub fn c1_decomposition(g: i64, n: u32, c1sq: &Rat, model: SurfaceModel) -> Result<NumClass> {
    if model.is_blown_up() {
        return Err(Error::Precondition("model must have s = t = 0".into()));
    }
    let d = slot(g, n)?;
    let f = c1sq.checked_div(&(Rat::from_int(2) * &d))?;
    Ok(NumClass::from_basis(model, d, f))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ExceptionalKind {
    /// `E'`, over a total-ramification non-Gorenstein point.
    TotalRamification,
    /// `E''`, over an index-three non-Gorenstein point.
    IndexThree,
}

/// Intersection of the upstairs ramification divisor with the preimage of
/// one exceptional curve.
pub fn upstairs_intersection(n: u32, kind: ExceptionalKind) -> Result<Rat> {
    match (n, kind) {
        (3, ExceptionalKind::IndexThree) => Ok(Rat::from_int(4)),
        (4, ExceptionalKind::TotalRamification) => Ok(Rat::from_int(6)),
        (4, ExceptionalKind::IndexThree) => Ok(Rat::from_int(4)),
        _ => Err(Error::UnsupportedExceptional(n)),
    }
}

/// Coefficient `a` of an exceptional class in `c1(E~)`: solves
/// `2 c1(E~) . E = (R~ . rho^* E)` for `a` through the pairing.
pub fn solve_exceptional_coefficients(n: u32, kind: ExceptionalKind) -> Result<Rat> {
    let rhs = upstairs_intersection(n, kind)?;
    let (model, e) = match kind {
        ExceptionalKind::TotalRamification => {
            let m = SurfaceModel::new(0, 1, 0)?;
            (m, NumClass::e_prime(m, 0)?)
        }
        ExceptionalKind::IndexThree => {
            let m = SurfaceModel::new(0, 0, 1)?;
            (m, NumClass::e_dblprime(m, 0)?)
        }
    };
    // T0 and F parts are orthogonal to E, any placeholder values work
    let base = NumClass::from_basis(model, Rat::from_int(n as i64 + 1), Rat::one());
    let lhs = |a: &Rat| -> Result<Rat> {
        Ok(Rat::from_int(2) * base.plus(&e.scaled(a))?.intersect(&e)?)
    };
    let at_zero = lhs(&Rat::zero())?;
    let slope = lhs(&Rat::one())? - &at_zero;
    (rhs - at_zero).checked_div(&slope)
}

/// `c1(E~)` on the blown-up model:
/// `(g + n - 1) T0 + (c1^2 + sum a^2) / (2 (g + n - 1)) F + sum a E`,
/// with the exceptional coefficients `a` from
/// [`solve_exceptional_coefficients`].
pub fn blownup_c1(g: i64, n: u32, c1sq: &Rat, model: SurfaceModel) -> Result<NumClass> {
    if n == 3 && model.s() > 0 {
        return Err(Error::Precondition(
            "degree-3 models have no total-ramification exceptional family".into(),
        ));
    }
    if n != 3 && n != 4 {
        return Err(Error::UnsupportedExceptional(n));
    }
    let a_prime = if model.s() > 0 {
        solve_exceptional_coefficients(n, ExceptionalKind::TotalRamification)?
    } else {
        Rat::zero()
    };
    let a_dbl = if model.t() > 0 {
        solve_exceptional_coefficients(n, ExceptionalKind::IndexThree)?
    } else {
        Rat::zero()
    };
    let d = slot(g, n)?;
    let correction = Rat::from_int(model.s() as i64) * a_prime.pow(2)
        + Rat::from_int(model.t() as i64) * a_dbl.pow(2);
    let f = (c1sq + &correction).checked_div(&(Rat::from_int(2) * &d))?;
    NumClass::new(
        model,
        d,
        f,
        vec![a_prime; model.s()],
        vec![a_dbl; model.t()],
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn r(n: i64) -> Rat {
        Rat::from_int(n)
    }

    fn q(p: i64, d: i64) -> Rat {
        Rat::new(p, d).unwrap()
    }

    fn trig_cover(b: u64, c1: NumClass, c2: Rat, rsq: Option<Rat>) -> CoverData {
        let m = SurfaceModel::ruled(b);
        CoverData::new(3, 5, m, BundleData::new(2, c1, c2).unwrap(), rsq).unwrap()
    }

    #[test]
    fn ramification_pushforward() {
        let m = SurfaceModel::ruled(0);
        let cd = trig_cover(0, NumClass::from_basis(m, r(7), r(1)), r(2), None);
        let pr = push_ramification(&cd);
        assert_eq!(pr, NumClass::from_basis(m, r(14), r(2)));
        assert_eq!(pr.self_intersection(), r(4) * r(14));
        let zero = trig_cover(0, NumClass::zero(m), r(0), None);
        assert!(push_ramification(&zero).is_zero());
    }

    #[test]
    fn chi_of_total_space() {
        let m = SurfaceModel::ruled(0);
        let cd = trig_cover(0, NumClass::from_basis(m, r(7), r(1)), r(2), None);
        assert_eq!(chi_total_space(&cd), r(0));
        let triv = trig_cover(0, NumClass::zero(m), r(0), None);
        assert_eq!(chi_total_space(&triv), r(3));

        // n = 4 over an elliptic base: chi(O_Y) = 0 and K_Y = -2 T0
        let m1 = SurfaceModel::ruled(1);
        let c1 = NumClass::from_basis(m1, r(13), q(1, 2));
        let e = BundleData::new(3, c1.clone(), r(4)).unwrap();
        let cd = CoverData::new(4, 10, m1, e, None).unwrap();
        let k = NumClass::from_basis(m1, r(-2), r(0));
        let expected = q(1, 2) * c1.intersect(&k).unwrap() + q(1, 2) * r(13) - r(4);
        assert_eq!(chi_total_space(&cd), expected);
        assert_eq!(expected, q(-1, 2) + q(13, 2) - r(4));
    }

    #[test]
    fn push_of_2r() {
        let m = SurfaceModel::ruled(0);
        let c1 = NumClass::from_basis(m, r(7), r(1));
        let cd = trig_cover(0, c1.clone(), r(2), Some(r(22)));
        let p = push_2r_bundle(&cd).unwrap();
        assert_eq!(p.c2(), &r(36));
        assert_eq!(p.c1(), &c1.scaled(&r(3)));
        assert_eq!(p.rank(), 3);

        let cancel = trig_cover(0, c1, r(2), Some(r(4 * 14 + 2)));
        assert_eq!(push_2r_bundle(&cancel).unwrap().c2(), &r(0));

        let missing = trig_cover(0, NumClass::zero(m), r(0), None);
        assert!(push_2r_bundle(&missing).is_err());
    }

    #[test]
    fn trigonal_rsq_examples() {
        let m = SurfaceModel::ruled(0);
        let e = BundleData::new(2, NumClass::from_basis(m, r(7), r(1)), q(28, 9)).unwrap();
        assert_eq!(trigonal_rsq(&e).unwrap(), q(56, 3));
        assert_eq!(trigonal_rsq_via_sym2(&e).unwrap(), q(56, 3));

        // c2 = (2/9) c1^2 saturates the index bound (4/3) c1^2
        let c1 = NumClass::from_basis(m, r(7), r(1));
        let e = BundleData::new(2, c1, q(2, 9) * r(14)).unwrap();
        assert_eq!(trigonal_rsq(&e).unwrap(), q(4, 3) * r(14));

        assert_eq!(trigonal_rsq(&BundleData::trivial(2, m).unwrap()).unwrap(), r(0));
        assert!(trigonal_rsq(&BundleData::trivial(3, m).unwrap()).is_err());
    }

    #[test]
    fn fourgonal_rsq_examples() {
        let m = SurfaceModel::ruled(0);
        let c1 = NumClass::from_basis(m, r(9), r(1)); // c1^2 = 18
        let e = BundleData::new(3, c1.clone(), r(6)).unwrap();
        let f = BundleData::new(2, c1.clone(), r(3)).unwrap();
        assert_eq!(fourgonal_rsq(&e, &f).unwrap(), r(15));
        assert_eq!(fourgonal_rsq_via_whitney(&e, &f).unwrap(), r(15));

        // c2(F) = 4 c2(E) - c1^2 makes R^2 = c1^2, saturating the index bound
        let f_sat = BundleData::new(2, c1.clone(), r(4 * 6) - r(18)).unwrap();
        assert_eq!(fourgonal_rsq(&e, &f_sat).unwrap(), r(18));

        let z3 = BundleData::trivial(3, m).unwrap();
        let z2 = BundleData::trivial(2, m).unwrap();
        assert_eq!(fourgonal_rsq(&z3, &z2).unwrap(), r(0));

        let f_bad = BundleData::new(2, c1.scaled(&r(2)), r(3)).unwrap();
        assert_eq!(fourgonal_rsq(&e, &f_bad), Err(Error::C1Mismatch));
        assert!(fourgonal_rsq(&f, &f).is_err());
    }

    #[test]
    fn conics_bundle_has_c1_of_e() {
        let m = SurfaceModel::ruled(2);
        let c1 = NumClass::from_basis(m, r(13), q(3, 2));
        let e = BundleData::new(3, c1.clone(), r(7)).unwrap();
        let cd = CoverData::new(4, 10, m, e.clone(), Some(r(20))).unwrap();
        let push = push_2r_bundle(&cd).unwrap();
        let f = conics_bundle(&e, &push).unwrap();
        assert_eq!(f.c1(), &c1);
        assert_eq!(f.rank(), 2);
        assert_eq!(fourgonal_rsq(&e, &f).unwrap(), r(20));
    }

    #[test]
    fn c1_decomposition_examples() {
        let m = SurfaceModel::ruled(0);
        assert_eq!(c1_decomposition(5, 3, &r(14), m).unwrap(), NumClass::from_basis(m, r(7), r(1)));
        assert_eq!(c1_decomposition(5, 3, &r(18), m).unwrap(), NumClass::from_basis(m, r(7), q(9, 7)));
        assert_eq!(c1_decomposition(5, 3, &r(0), m).unwrap(), NumClass::section(m).scaled(&r(7)));
        assert!(c1_decomposition(-2, 3, &r(1), m).is_err());
        assert!(c1_decomposition(5, 3, &r(1), SurfaceModel::new(0, 0, 1).unwrap()).is_err());
    }

    #[test]
    fn exceptional_coefficients() {
        use ExceptionalKind::*;
        assert_eq!(solve_exceptional_coefficients(3, IndexThree).unwrap(), r(-2));
        assert_eq!(solve_exceptional_coefficients(4, TotalRamification).unwrap(), r(-3));
        assert_eq!(solve_exceptional_coefficients(4, IndexThree).unwrap(), r(-2));
        assert!(solve_exceptional_coefficients(3, TotalRamification).is_err());
        assert!(solve_exceptional_coefficients(5, IndexThree).is_err());
    }

    #[test]
    fn blownup_c1_examples() {
        let m = SurfaceModel::new(0, 0, 1).unwrap();
        let c = blownup_c1(5, 3, &r(14), m).unwrap();
        let expected = NumClass::new(m, r(7), q(9, 7), vec![], vec![r(-2)]).unwrap();
        assert_eq!(c, expected);
        assert_eq!(c.self_intersection(), r(14));

        let m4 = SurfaceModel::new(0, 1, 1).unwrap();
        let c = blownup_c1(10, 4, &r(26), m4).unwrap();
        assert_eq!(c.f(), &q(3, 2));
        assert_eq!(c.e_prime_coeffs(), &[r(-3)]);
        assert_eq!(c.self_intersection(), r(26));

        let flat = SurfaceModel::ruled(0);
        assert_eq!(blownup_c1(11, 4, &r(30), flat).unwrap(), c1_decomposition(11, 4, &r(30), flat).unwrap());

        assert!(blownup_c1(5, 3, &r(14), SurfaceModel::new(0, 1, 0).unwrap()).is_err());
    }

    #[test]
    fn ramification_meets_exceptional_curves_as_upstairs() {
        let m = SurfaceModel::new(0, 2, 3).unwrap();
        let c1 = blownup_c1(12, 4, &r(40), m).unwrap();
        let e = BundleData::new(3, c1, r(9)).unwrap();
        let cd = CoverData::new(4, 12, m, e, None).unwrap();
        let pr = push_ramification(&cd);
        for i in 0..2 {
            assert_eq!(pr.intersect(&NumClass::e_prime(m, i).unwrap()).unwrap(), r(6));
        }
        for j in 0..3 {
            assert_eq!(pr.intersect(&NumClass::e_dblprime(m, j).unwrap()).unwrap(), r(4));
        }
    }

    fn rat() -> impl Strategy<Value = Rat> {
        (-60i64..60, 1i64..9).prop_map(|(p, q)| Rat::new(p, q).unwrap())
    }

    proptest! {
        #[test]
        fn trigonal_routes_agree(t0 in rat(), f in rat(), c2 in rat(), b in 0u64..6) {
            let m = SurfaceModel::ruled(b);
            let e = BundleData::new(2, NumClass::from_basis(m, t0, f), c2).unwrap();
            prop_assert_eq!(trigonal_rsq(&e).unwrap(), trigonal_rsq_via_sym2(&e).unwrap());
        }

        #[test]
        fn fourgonal_routes_agree(t0 in rat(), f in rat(), c2e in rat(), c2f in rat()) {
            let m = SurfaceModel::ruled(1);
            let c1 = NumClass::from_basis(m, t0, f);
            let e = BundleData::new(3, c1.clone(), c2e).unwrap();
            let ff = BundleData::new(2, c1, c2f).unwrap();
            prop_assert_eq!(fourgonal_rsq(&e, &ff).unwrap(), fourgonal_rsq_via_whitney(&e, &ff).unwrap());
        }

        #[test]
        fn decompositions_round_trip(
            g in 5i64..200, c1sq in rat(), s in 0usize..6, t in 0usize..6, four in any::<bool>()
        ) {
            let (n, s) = if four { (4, s) } else { (3, 0) };
            let m = SurfaceModel::new(0, s, t).unwrap();
            prop_assert_eq!(blownup_c1(g, n, &c1sq, m).unwrap().self_intersection(), c1sq.clone());
            let flat = SurfaceModel::ruled(3);
            prop_assert_eq!(c1_decomposition(g, n, &c1sq, flat).unwrap().self_intersection(), c1sq);
        }
    }
}
