//! Fibration invariants `K_f^2`, `chi_f` and the slope `K_f^2 / chi_f`.
//!
//! The formulas are generic over [`Scalar`], so they evaluate at a fixed
//! genus over [`Rat`] or symbolically in `g` over [`RatFunc`].

use std::cmp::Ordering;

use crate::chow;
use crate::error::{Error, Result};
use crate::grr::{self, CoverData};
use crate::ratcalc::{Rat, RatFunc, Scalar};

#[derive(Debug, Clone, PartialEq)]
pub struct FibrationInvariants<T> {
    pub kf2: T,
    pub chif: T,
    pub slope: T,
}

impl<T: Scalar> FibrationInvariants<T> {
    /// Rejects a vanishing or (when decidable) negative `chi_f`, and logs a
    /// warning when the slope falls outside `(0, 12]`.
    pub fn new(kf2: T, chif: T) -> Result<Self> {
        if chif.is_zero() {
            return Err(Error::ZeroChi);
        }
        if chif.sign() == Some(Ordering::Less) {
            return Err(Error::NegativeChi(chif.to_string()));
        }
        let slope = kf2.try_div(&chif)?;
        let inv = FibrationInvariants { kf2, chif, slope };
        if inv.in_geometric_range() == Some(false) {
            log::warn!("slope {} lies outside (0, 12]", inv.slope);
        }
        Ok(inv)
    }

    /// Whether `0 < slope <= 12`, `None` when the sign is not decidable.
    pub fn in_geometric_range(&self) -> Option<bool> {
        let lo = self.slope.sign()?;
        let hi = (self.slope.clone() - T::from_int(12)).sign()?;
        Some(lo == Ordering::Greater && hi != Ordering::Greater)
    }
}

fn div<T: Scalar>(a: T, b: T) -> Result<T> {
    a.try_div(&b)
}

/// `K_f^2 = R^2 - 4 c1^2 / (g + n - 1)`,
/// `chi_f = (g + n - 2) / (2 (g + n - 1)) c1^2 - c2`.
pub fn slope_general<T: Scalar>(g: &T, n: u32, c1sq: &T, c2: &T, rsq: &T) -> Result<FibrationInvariants<T>> {
    let d = g.clone() + T::from_int(n as i64 - 1);
    let kf2 = rsq.clone() - div(T::from_int(4) * c1sq.clone(), d.clone())?;
    let chif = div(d.clone() - T::from_int(1), T::from_int(2) * d)? * c1sq.clone() - c2.clone();
    FibrationInvariants::new(kf2, chif)
}

fn trigonal_parts<T: Scalar>(g: &T, c1sq: &T, c2: &T, t: &T) -> Result<(T, T)> {
    let gp2 = g.clone() + T::from_int(2);
    let kf2 = div(T::from_int(2) * g.clone(), gp2.clone())? * c1sq.clone() - T::from_int(3) * c2.clone();
    let chif = div(g.clone() + T::from_int(1), T::from_int(2) * gp2.clone())? * c1sq.clone()
        - c2.clone()
        + div(g.clone(), gp2)? * t.clone();
    Ok((kf2, chif))
}

pub fn slope_trigonal<T: Scalar>(g: &T, c1sq: &T, c2: &T) -> Result<FibrationInvariants<T>> {
    let (k, c) = trigonal_parts(g, c1sq, c2, &T::from_int(0))?;
    FibrationInvariants::new(k, c)
}

/// Trigonal invariants on the Gorenstein model blown up at `t` index-three
/// points: `chi_f` gains `g / (g + 2)` per point, `K_f^2` is unchanged.
pub fn slope_trigonal_blowup<T: Scalar>(g: &T, c1sq: &T, c2: &T, t: &T) -> Result<FibrationInvariants<T>> {
    let (k, c) = trigonal_parts(g, c1sq, c2, t)?;
    FibrationInvariants::new(k, c)
}

/// Raw `(K_f^2, chi_f)` of the trigonal blown-up model, without the sign
/// checks on `chi_f`.
pub fn trigonal_blowup_raw<T: Scalar>(g: &T, c1sq: &T, c2: &T, t: &T) -> Result<(T, T)> {
    trigonal_parts(g, c1sq, c2, t)
}

fn fourgonal_parts<T: Scalar>(g: &T, c1sq: &T, c2e: &T, c2f: &T, s: &T, t: &T) -> Result<(T, T)> {
    let gp3 = g.clone() + T::from_int(3);
    let kf2 = div(T::from_int(2) * (g.clone() + T::from_int(1)), gp3.clone())? * c1sq.clone()
        - T::from_int(4) * c2e.clone()
        + c2f.clone();
    let chif = div(g.clone() + T::from_int(2), T::from_int(2) * gp3.clone())? * c1sq.clone() - c2e.clone()
        + div(T::from_int(3) * g.clone(), T::from_int(2) * gp3.clone())? * s.clone()
        + div(g.clone() + T::from_int(1), gp3)? * t.clone();
    Ok((kf2, chif))
}

pub fn slope_fourgonal<T: Scalar>(g: &T, c1sq: &T, c2e: &T, c2f: &T) -> Result<FibrationInvariants<T>> {
    let zero = T::from_int(0);
    let (k, c) = fourgonal_parts(g, c1sq, c2e, c2f, &zero, &zero)?;
    FibrationInvariants::new(k, c)
}

/// Fourgonal invariants on the Gorenstein model blown up at `s`
/// total-ramification and `t` index-three points.
pub fn slope_fourgonal_blowup<T: Scalar>(
    g: &T,
    c1sq: &T,
    c2e: &T,
    c2f: &T,
    s: &T,
    t: &T,
) -> Result<FibrationInvariants<T>> {
    let (k, c) = fourgonal_parts(g, c1sq, c2e, c2f, s, t)?;
    FibrationInvariants::new(k, c)
}

pub fn fourgonal_blowup_raw<T: Scalar>(g: &T, c1sq: &T, c2e: &T, c2f: &T, s: &T, t: &T) -> Result<(T, T)> {
    fourgonal_parts(g, c1sq, c2e, c2f, s, t)
}

/// The fourgonal slope with `c2(E)` set to its index-theorem floor
/// `(c1^2 + c2(F)) / 4`, written as `4 + remainder`:
/// `4 + (c2(F) - 2 c1^2 / (g + 3)) / ((g + 1) c1^2 / (4 (g + 3)) - c2(F) / 4)`.
pub fn fourgonal_formulaslope<T: Scalar>(g: &T, c1sq: &T, c2f: &T) -> Result<T> {
    fourgonal_blowup_lower_form(g, c1sq, c2f, &T::from_int(0), &T::from_int(0))
}

/// The blown-up analogue of [`fourgonal_formulaslope`] in its published
/// shape, with the `s` and `t` terms added to the denominator only.
///
/// For `s = t = 0` it equals the exact substitution. For `s + t > 0` it
/// differs from [`fourgonal_index_substituted`], whose remainder numerator
/// also carries `-4 (3 g s / (2 (g + 3)) + (g + 1) t / (g + 3))`.
pub fn fourgonal_blowup_lower_form<T: Scalar>(g: &T, c1sq: &T, c2f: &T, s: &T, t: &T) -> Result<T> {
    let gp3 = g.clone() + T::from_int(3);
    let num = c2f.clone() - div(T::from_int(2) * c1sq.clone(), gp3.clone())?;
    let den = div(g.clone() + T::from_int(1), T::from_int(4) * gp3.clone())? * c1sq.clone()
        - div(c2f.clone(), T::from_int(4))?
        + div(T::from_int(3) * g.clone(), T::from_int(2) * gp3.clone())? * s.clone()
        + div(g.clone() + T::from_int(1), gp3)? * t.clone();
    Ok(T::from_int(4) + div(num, den)?)
}

/// `c2(E)` at the index-theorem floor `(c1^2 + c2(F)) / 4`.
pub fn c2e_index_floor<T: Scalar>(c1sq: &T, c2f: &T) -> Result<T> {
    div(c1sq.clone() + c2f.clone(), T::from_int(4))
}

/// Fourgonal blown-up invariants with `c2(E) = (c1^2 + c2(F)) / 4`.
pub fn fourgonal_index_substituted<T: Scalar>(
    g: &T,
    c1sq: &T,
    c2f: &T,
    s: &T,
    t: &T,
) -> Result<FibrationInvariants<T>> {
    let c2e = c2e_index_floor(c1sq, c2f)?;
    slope_fourgonal_blowup(g, c1sq, &c2e, c2f, s, t)
}

#[derive(Debug, Clone, PartialEq)]
pub struct ModuliInvariants<T> {
    /// `s_B = 12 - s(f)`.
    pub s_b: T,
    /// `delta . B = 12 chi_f - K_f^2`.
    pub delta_b: T,
    /// `lambda . B = chi_f`.
    pub lambda_b: T,
}

pub fn moduli_conversion<T: Scalar>(inv: &FibrationInvariants<T>) -> Result<ModuliInvariants<T>> {
    if inv.chif.is_zero() {
        return Err(Error::ZeroChi);
    }
    Ok(ModuliInvariants {
        s_b: T::from_int(12) - inv.slope.clone(),
        delta_b: T::from_int(12) * inv.chif.clone() - inv.kf2.clone(),
        lambda_b: inv.chif.clone(),
    })
}

/// `F_n(g) = 6 - 2 / (n - 1) - 2 n / g`.
pub fn harris_stankova_reference(n: u32) -> Result<RatFunc> {
    if n < 2 {
        return Err(Error::Precondition(format!("n = {n} must be at least 2")));
    }
    let n = n as i64;
    let constant = RatFunc::constant(Rat::from_int(6) - Rat::new(2, n - 1)?);
    Ok(&constant - &RatFunc::from_polys(&[2 * n], &[0, 1])?)
}

/// Invariants assembled from intersection numbers on `Y`:
/// `K_f^2 = R^2 + 4 c1(E).K_Y + n K_Y^2 - 8 (g - 1)(b - 1)` and
/// `chi_f = chi(O_S) - (g - 1)(b - 1)`.
///
/// On an unblown model this agrees with [`slope_general`] for every `b`.
pub fn invariants_via_intersection(cd: &CoverData) -> Result<FibrationInvariants<Rat>> {
    let rsq = cd
        .rsq()
        .cloned()
        .ok_or_else(|| Error::Precondition("R^2 is required".into()))?;
    let m = cd.surface();
    let k = chow::canonical_class(m);
    let c1 = cd.reduced_bundle().c1();
    let gb = Rat::from_int((cd.genus() - 1) * (m.base_genus() as i64 - 1));
    let kf2 = rsq + Rat::from_int(4) * c1.intersect(&k)?
        + Rat::from_int(cd.degree() as i64) * k.self_intersection()
        - Rat::from_int(8) * &gb;
    let chif = grr::chi_total_space(cd) - gb;
    FibrationInvariants::new(kf2, chif)
}
