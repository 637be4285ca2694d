//! The rank-2 Picard lattice of a smooth quartic surface through a curve.
//!
//! A curve of type `(g, d)` lies on a smooth quartic exactly when `8g < d^2`;
//! for a general such curve the quartic has Picard lattice `<H, C>` with Gram
//! matrix `[[4, d], [d, 2g-2]]` and discriminant `r = d^2 - 8(g-1)`. Lattice
//! classes of prescribed self-intersection `c` correspond to solutions of
//! `x^2 - r y^2 = 4c`, so existence questions delegate to [`crate::pell`].
//! When neither a square-`-2` nor square-`0` class exists, the closed cone of
//! curves is the closure of the positive cone, and its boundary rays are the
//! isotropic directions of the Gram form, carried exactly as quadratic surds.
//!
//! Verdicts derived from this model hold for a *general* element: the model
//! encodes Picard rank exactly 2 with the lattice spanned by `H` and `C`.

use num::{BigInt, BigRational, One, Zero};
use thiserror::Error;

use crate::arith::is_perfect_square;
use crate::curve::CurveNumerics;
use crate::pell::{decide, PellOutcome, PellProblem};
use crate::surd::QuadraticSurd;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum K3Error {
    #[error("no smooth quartic contains a curve of type ({g}, {d}): 8g >= d^2")]
    ModelDoesNotExist { g: i64, d: i64 },
    #[error("the cone of curves is not settled by the positive-cone criterion: {reason}")]
    NotPositiveCone { reason: String },
}

/// True iff curves of type `(g, d)` on smooth quartic surfaces exist.
pub fn mori_existence(n: &CurveNumerics) -> bool {
    8 * (n.g() as i128) < (n.d() as i128) * (n.d() as i128)
}

/// `r = d^2 - 8(g - 1)`, defined when the quartic model exists.
pub fn discriminant(n: &CurveNumerics) -> Result<BigInt, K3Error> {
    if !mori_existence(n) {
        return Err(K3Error::ModelDoesNotExist { g: n.g(), d: n.d() });
    }
    let d = n.d() as i128;
    let g = n.g() as i128;
    Ok(BigInt::from(d * d - 8 * (g - 1)))
}

/// The lattice `<H, C>` with Gram matrix `[[4, d], [d, 2g-2]]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuarticLatticeModel {
    numerics: CurveNumerics,
    r: BigInt,
}

/// Existence of square `-2` and square `0` classes, with the Pell
/// decisions that certify each answer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalEllipticTest {
    pub has_rational: bool,
    pub has_elliptic: bool,
    pub rational_outcome: PellOutcome,
    pub elliptic_outcome: PellOutcome,
}

/// A boundary ray of the closed cone of curves, in the basis `(H|_S, C)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurdRay {
    pub h: QuadraticSurd,
    pub c: QuadraticSurd,
    pub rational: bool,
}

/// The closed cone of curves in the positive-cone case.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConeDescription {
    pub rays: [SurdRay; 2],
    /// The open cone of curves itself; false in the positive-cone case.
    pub closed: bool,
}

impl QuarticLatticeModel {
    pub fn new(numerics: CurveNumerics) -> Result<Self, K3Error> {
        let r = discriminant(&numerics)?;
        Ok(QuarticLatticeModel { numerics, r })
    }

    pub fn numerics(&self) -> &CurveNumerics {
        &self.numerics
    }

    pub fn discriminant(&self) -> &BigInt {
        &self.r
    }

    pub fn gram(&self) -> [[BigInt; 2]; 2] {
        let d = BigInt::from(self.numerics.d());
        let c2 = BigInt::from(2 * self.numerics.g() - 2);
        [[BigInt::from(4), d.clone()], [d, c2]]
    }

    /// Decides whether the lattice holds a class of self-intersection `c`,
    /// i.e. whether `x^2 - r y^2 = 4c` is solvable; the witness is the pair
    /// `(d0, n)` with `d0 = H . class`.
    pub fn has_class_of_self_intersection(&self, c: i64) -> (bool, Option<(BigInt, BigInt)>) {
        let p = PellProblem::new(self.r.clone(), BigInt::from(4) * BigInt::from(c))
            .expect("discriminant is positive");
        let out = decide(&p);
        (out.solvable, out.witness)
    }

    /// Square `-2` classes are ruled by `x^2 - r y^2 = -8`, square `0`
    /// classes by `x^2 - r y^2 = 0` (a perfect-square test on `r`).
    pub fn rational_elliptic_test(&self) -> RationalEllipticTest {
        let rational_outcome = decide(
            &PellProblem::new(self.r.clone(), BigInt::from(-8)).expect("positive discriminant"),
        );
        let elliptic_outcome = decide(
            &PellProblem::new(self.r.clone(), BigInt::zero()).expect("positive discriminant"),
        );
        RationalEllipticTest {
            has_rational: rational_outcome.solvable,
            has_elliptic: elliptic_outcome.solvable,
            rational_outcome,
            elliptic_outcome,
        }
    }

    /// Boundary rays of the closed cone of curves when no class of
    /// non-positive self-intersection exists: the isotropic directions
    /// `(-d + sqrt(r), 4)` and `(d + sqrt(r), -4)` of the Gram form.
    pub fn cone_of_curves(&self) -> Result<ConeDescription, K3Error> {
        let test = self.rational_elliptic_test();
        if test.has_rational {
            return Err(K3Error::NotPositiveCone {
                reason: "a class of self-intersection -2 exists".into(),
            });
        }
        if test.has_elliptic {
            return Err(K3Error::NotPositiveCone {
                reason: "a class of self-intersection 0 exists".into(),
            });
        }
        let d = self.numerics.d();
        let rational = is_perfect_square(&self.r);
        let ray = |h_const: i64, c_coord: i64| SurdRay {
            h: QuadraticSurd::new(
                BigRational::from_integer(BigInt::from(h_const)),
                BigRational::one(),
                self.r.clone(),
            ),
            c: QuadraticSurd::from_int(c_coord),
            rational,
        };
        Ok(ConeDescription {
            rays: [ray(-d, 4), ray(d, -4)],
            closed: false,
        })
    }

    /// `v . Gram . v` for a vector with surd coordinates in `(H|_S, C)`.
    pub fn gram_square(&self, h: &QuadraticSurd, c: &QuadraticSurd) -> QuadraticSurd {
        let d = QuadraticSurd::from_int(self.numerics.d());
        let c2 = QuadraticSurd::from_int(2 * self.numerics.g() - 2);
        let four = QuadraticSurd::from_int(4);
        let two = QuadraticSurd::from_int(2);
        // 4 h^2 + 2 d h c + (2g-2) c^2
        let t1 = &(&four * h) * h;
        let t2 = &(&(&two * &d) * h) * c;
        let t3 = &(&c2 * c) * c;
        &(&t1 + &t2) + &t3
    }
}
