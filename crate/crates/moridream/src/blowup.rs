//! Rank-2 intersection theory on the blowup `X -> P^3` along a curve.
//!
//! `N^1(X)` is spanned by the hyperplane pullback `H` and the exceptional
//! divisor `E`; `N_1(X)` by the line class `l` and the fiber class `f` of
//! `E -> C`. The pairing is fixed by the convention
//!
//! ```text
//! H.l = 1,  H.f = 0,  E.l = 0,  E.f = -1,
//! ```
//!
//! the unique sign choice under which a residual component of a linkage on
//! surfaces of degrees `(n1, n2)` has class `d (l - n2 f) + e f` and meets
//! `E` in `n2 d - e`, where `e = 2g - 2 - (n1 - 4) d`.
//!
//! The cone computations cover three regimes: complete intersections, rigid
//! skew linkages (all cones rational), and curves with an extremal quartic
//! surface, where one boundary ray of the movable cone is a quadratic surd
//! and rationality of the ray is exactly squareness of the discriminant.

use num::{BigInt, BigRational, One};
use thiserror::Error;

use crate::curve::CurveNumerics;
use crate::k3::{self, QuarticLatticeModel};
use crate::surd::QuadraticSurd;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BlowupError {
    #[error("surface degrees must satisfy n1 <= n2, got ({n1}, {n2})")]
    InvalidSurfaceOrder { n1: i64, n2: i64 },
    #[error("residual component {index} has e = {e} > 0: the linkage is not rigid")]
    NotRigid { index: usize, e: i64 },
    #[error("a linkage needs a nonempty residual; the complete-intersection case is cones_ci")]
    DegenerateLinkage,
    #[error("extremal-surface hypothesis fails: {condition}")]
    HypothesisFails { condition: String },
    #[error("flip steps need a1 >= a2 >= 1, got ({a1}, {a2})")]
    InvalidFlipInput { a1: i64, a2: i64 },
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// A divisor class `a H + b E`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivisorClass {
    pub h: BigRational,
    pub e: BigRational,
}

impl DivisorClass {
    pub fn new(h: BigRational, e: BigRational) -> Self {
        DivisorClass { h, e }
    }

    pub fn from_ints(h: i64, e: i64) -> Self {
        DivisorClass::new(rat(h), rat(e))
    }

    pub fn hyperplane() -> Self {
        Self::from_ints(1, 0)
    }

    pub fn exceptional() -> Self {
        Self::from_ints(0, 1)
    }

    /// The strict transform `n H - E` of a degree-`n` surface through the
    /// center.
    pub fn surface(n: i64) -> Self {
        Self::from_ints(n, -1)
    }
}

/// A curve class `c_l l + c_f f`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurveClass {
    pub l: BigRational,
    pub f: BigRational,
}

impl CurveClass {
    pub fn new(l: BigRational, f: BigRational) -> Self {
        CurveClass { l, f }
    }

    pub fn from_ints(l: i64, f: i64) -> Self {
        CurveClass::new(rat(l), rat(f))
    }

    pub fn line() -> Self {
        Self::from_ints(1, 0)
    }

    pub fn fiber() -> Self {
        Self::from_ints(0, 1)
    }
}

/// The intersection pairing `(a H + b E) . (c_l l + c_f f) = a c_l - b c_f`.
pub fn pair(divisor: &DivisorClass, curve: &CurveClass) -> BigRational {
    &divisor.h * &curve.l - &divisor.e * &curve.f
}

/// A residual component's self-intersection datum and numerical class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResidualClass {
    /// `e = 2g - 2 - (n1 - 4) d`, the self-intersection on the first surface.
    pub e: i64,
    /// `d l + (e - d n2) f`.
    pub class: CurveClass,
}

/// Class and `e`-invariant of a genus-`g`, degree-`d` residual component of
/// an `(n1, n2)` linkage.
pub fn residual_class(g: i64, d: i64, n1: i64, n2: i64) -> Result<ResidualClass, BlowupError> {
    if n1 > n2 {
        return Err(BlowupError::InvalidSurfaceOrder { n1, n2 });
    }
    let e128 = 2 * (g as i128) - 2 - ((n1 as i128) - 4) * (d as i128);
    let e = i64::try_from(e128).expect("e-invariant exceeds i64");
    let cf = i64::try_from(e128 - (d as i128) * (n2 as i128)).expect("class entry exceeds i64");
    Ok(ResidualClass {
        e,
        class: CurveClass::from_ints(d, cf),
    })
}

/// One boundary ray of a cone in `N^1(X)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Ray {
    Rational(DivisorClass),
    Irrational { h: QuadraticSurd, e: QuadraticSurd },
}

impl Ray {
    pub fn is_rational(&self) -> bool {
        match self {
            Ray::Rational(_) => true,
            Ray::Irrational { h, e } => h.is_rational() && e.is_rational(),
        }
    }

    fn surd_coords(&self) -> (QuadraticSurd, QuadraticSurd) {
        match self {
            Ray::Rational(d) => (
                QuadraticSurd::rational(d.h.clone()),
                QuadraticSurd::rational(d.e.clone()),
            ),
            Ray::Irrational { h, e } => (h.clone(), e.clone()),
        }
    }
}

/// `det(u, v)` of two rays in `(H, E)` coordinates, as a surd.
fn ray_det(u: &Ray, v: &Ray) -> QuadraticSurd {
    let (uh, ue) = u.surd_coords();
    let (vh, ve) = v.surd_coords();
    &(&uh * &ve) - &(&ue * &vh)
}

/// The effective/movable/nef triple bounding the birational geometry.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConePair {
    pub effective: [DivisorClass; 2],
    pub movable: [Ray; 2],
    pub nef: [Ray; 2],
}

impl ConePair {
    /// Checks `nef ⊆ movable ⊆ effective` by determinant signs.
    pub fn nesting_holds(&self) -> bool {
        let eff = [
            Ray::Rational(self.effective[0].clone()),
            Ray::Rational(self.effective[1].clone()),
        ];
        cone_contains(&eff, &self.movable) && cone_contains(&self.movable, &self.nef)
    }
}

/// Whether the 2-dimensional cone spanned by `outer` contains every ray of
/// `inner`; exact sign arithmetic, orientation-normalized.
pub fn cone_contains(outer: &[Ray; 2], inner: &[Ray; 2]) -> bool {
    let orientation = ray_det(&outer[0], &outer[1]).sign();
    if orientation == std::cmp::Ordering::Equal {
        return false;
    }
    let flip = orientation == std::cmp::Ordering::Less;
    inner.iter().all(|w| {
        let mut lo = ray_det(&outer[0], w).sign();
        let mut hi = ray_det(w, &outer[1]).sign();
        if flip {
            lo = lo.reverse();
            hi = hi.reverse();
        }
        lo != std::cmp::Ordering::Less && hi != std::cmp::Ordering::Less
    })
}

/// Cone data for a rigid skew linkage, all rays rational.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RigidCones {
    pub cones: ConePair,
    /// Strictly negative `e` on every component.
    pub super_rigid: bool,
    pub residuals: Vec<ResidualClass>,
    /// The nef wall, perpendicular to the extremal residual ray.
    pub wall: DivisorClass,
}

fn primitive_divisor(h: i128, e: i128) -> DivisorClass {
    let g = gcd_i128(h.abs(), e.abs()).max(1);
    DivisorClass::from_ints(
        i64::try_from(h / g).expect("wall entry exceeds i64"),
        i64::try_from(e / g).expect("wall entry exceeds i64"),
    )
}

fn gcd_i128(mut a: i128, mut b: i128) -> i128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Effective `<E, n1 H - E>`, movable `<H, n2 H - E>`, and nef `<H, D1>`
/// with `D1` the wall perpendicular to the minimum-ratio residual ray.
pub fn cones_super_rigid(
    n1: i64,
    n2: i64,
    residual: &[(i64, i64)],
) -> Result<RigidCones, BlowupError> {
    if n1 > n2 {
        return Err(BlowupError::InvalidSurfaceOrder { n1, n2 });
    }
    if residual.is_empty() {
        return Err(BlowupError::DegenerateLinkage);
    }
    let mut residuals = Vec::with_capacity(residual.len());
    for (index, &(g, d)) in residual.iter().enumerate() {
        let rc = residual_class(g, d, n1, n2)?;
        if rc.e > 0 {
            return Err(BlowupError::NotRigid { index, e: rc.e });
        }
        residuals.push(rc);
    }
    let super_rigid = residuals.iter().all(|rc| rc.e < 0);

    // extremal ray: minimum e/d, compared by cross-multiplication
    let extremal = residuals
        .iter()
        .zip(residual)
        .min_by(|(l, (_, ld)), (r, (_, rd))| {
            ((l.e as i128) * (*rd as i128)).cmp(&((r.e as i128) * (*ld as i128)))
        })
        .map(|(rc, (_, d))| (rc.e as i128, *d as i128))
        .expect("nonempty residual");
    let (e_min, d_min) = extremal;
    let wall = primitive_divisor(d_min * (n2 as i128) - e_min, -d_min);

    let cones = ConePair {
        effective: [DivisorClass::exceptional(), DivisorClass::surface(n1)],
        movable: [
            Ray::Rational(DivisorClass::hyperplane()),
            Ray::Rational(DivisorClass::surface(n2)),
        ],
        nef: [
            Ray::Rational(DivisorClass::hyperplane()),
            Ray::Rational(wall.clone()),
        ],
    };
    Ok(RigidCones {
        cones,
        super_rigid,
        residuals,
        wall,
    })
}

/// What the second-surface contraction does for a complete intersection.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CiContraction {
    /// `n1 = n2`: the linear system of `S2` fibers over the line.
    FibrationToP1,
    /// `n1 < n2`: divisorial, contracting the strict transform of `S1`.
    DivisorialContractingS1,
}

/// Cones of the blowup of a smooth `(n1, n2)` complete intersection:
/// `Eff = <E, S1>`, `Mov = Nef = <H, S2>`.
pub fn cones_ci(n1: i64, n2: i64) -> Result<(ConePair, CiContraction), BlowupError> {
    if n1 > n2 {
        return Err(BlowupError::InvalidSurfaceOrder { n1, n2 });
    }
    let cones = ConePair {
        effective: [DivisorClass::exceptional(), DivisorClass::surface(n1)],
        movable: [
            Ray::Rational(DivisorClass::hyperplane()),
            Ray::Rational(DivisorClass::surface(n2)),
        ],
        nef: [
            Ray::Rational(DivisorClass::hyperplane()),
            Ray::Rational(DivisorClass::surface(n2)),
        ],
    };
    let contraction = if n1 == n2 {
        CiContraction::FibrationToP1
    } else {
        CiContraction::DivisorialContractingS1
    };
    Ok((cones, contraction))
}

/// Cones of a curve with an extremal quartic surface.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtremalCones {
    pub cones: ConePair,
    /// Discriminant of the quartic lattice; the surd radicand of the
    /// irrational boundary ray.
    pub radicand: BigInt,
    /// False exactly when the discriminant is a perfect square.
    pub irrational: bool,
    /// `64 - 8d + 2g - 2`, quoted by the hypothesis check.
    pub inequality_value: i64,
    pub d_ge_16: bool,
}

/// Movable and nef cones of the blowup when the quartic through the curve
/// is extremal: `Eff = <E, 4H - E>` and `Mov = Nef = <H, (d + sqrt(r)) H - 4 E>`.
///
/// Hypotheses checked: the surface degree is 4, the quartic model exists
/// (`8g < d^2`), the lattice has no class of self-intersection `-2` or `0`,
/// and either `d >= 16` or `64 - 8d + 2g - 2 <= 0`.
pub fn cones_extremal_surface(
    numerics: &CurveNumerics,
    surface_degree: i64,
) -> Result<ExtremalCones, BlowupError> {
    if surface_degree != 4 {
        return Err(BlowupError::HypothesisFails {
            condition: format!(
                "only quartic extremal surfaces are modeled, got degree {surface_degree}"
            ),
        });
    }
    let (g, d) = (numerics.g(), numerics.d());
    let model = QuarticLatticeModel::new(*numerics).map_err(|_| {
        BlowupError::HypothesisFails {
            condition: format!("8g < d^2 fails: 8*{g} >= {d}^2"),
        }
    })?;
    let test = model.rational_elliptic_test();
    if test.has_rational {
        return Err(BlowupError::HypothesisFails {
            condition: format!(
                "x^2 - {} y^2 = -8 is solvable: a class of self-intersection -2 exists",
                model.discriminant()
            ),
        });
    }
    if test.has_elliptic {
        return Err(BlowupError::HypothesisFails {
            condition: format!(
                "{} is a perfect square: a class of self-intersection 0 exists",
                model.discriminant()
            ),
        });
    }
    let inequality_value = i64::try_from(64 - 8 * (d as i128) + 2 * (g as i128) - 2)
        .expect("inequality value exceeds i64");
    let d_ge_16 = d >= 16;
    if !d_ge_16 && inequality_value > 0 {
        return Err(BlowupError::HypothesisFails {
            condition: format!(
                "d = {d} < 16 and 64 - 8d + 2g - 2 = {inequality_value} > 0"
            ),
        });
    }

    let r = model.discriminant().clone();
    let boundary = Ray::Irrational {
        h: QuadraticSurd::new(rat(d), BigRational::one(), r.clone()),
        e: QuadraticSurd::from_int(-4),
    };
    let hyperplane = Ray::Rational(DivisorClass::hyperplane());
    let cones = ConePair {
        effective: [DivisorClass::exceptional(), DivisorClass::surface(4)],
        movable: [hyperplane.clone(), boundary.clone()],
        nef: [hyperplane, boundary],
    };
    Ok(ExtremalCones {
        cones,
        irrational: !crate::arith::is_perfect_square(&r),
        radicand: r,
        inequality_value,
        d_ge_16,
    })
}

/// Checks that the irrational boundary ray is isotropic for the quartic
/// Gram form, in exact surd arithmetic.
pub fn boundary_ray_isotropic(numerics: &CurveNumerics, cones: &ExtremalCones) -> bool {
    let model = match k3::QuarticLatticeModel::new(*numerics) {
        Ok(m) => m,
        Err(_) => return false,
    };
    match &cones.cones.movable[1] {
        Ray::Irrational { h, e } => model.gram_square(h, e).is_zero(),
        Ray::Rational(_) => false,
    }
}

/// The Euclidean quotient sequence normalizing an unbalanced pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlipSteps {
    pub multiplicities: Vec<i64>,
    /// Total blowup count, the sum of the multiplicities.
    pub total: i64,
    /// Equal entries once the division terminates.
    pub final_pair: (i64, i64),
}

/// Runs the Euclidean algorithm on `a1 >= a2 >= 1`; the final normal bundle
/// is balanced because the last division is exact.
///
/// ```
/// use moridream::blowup::flip_steps;
///
/// let steps = flip_steps(5, 3).unwrap();
/// assert_eq!(steps.multiplicities, vec![1, 1, 2]);
/// assert_eq!(steps.total, 4);
/// assert_eq!(steps.final_pair, (2, 2));
/// ```
pub fn flip_steps(a1: i64, a2: i64) -> Result<FlipSteps, BlowupError> {
    if a2 < 1 || a1 < a2 {
        return Err(BlowupError::InvalidFlipInput { a1, a2 });
    }
    let mut multiplicities = Vec::new();
    let (mut a, mut b) = (a1, a2);
    loop {
        let q = a / b;
        let r = a % b;
        multiplicities.push(q);
        if r == 0 {
            let total = multiplicities.iter().sum();
            return Ok(FlipSteps {
                multiplicities,
                total,
                final_pair: (a, a),
            });
        }
        (a, b) = (b, r);
    }
}

/// `deg O_gamma(S2 - S1) = (n2 - n1) d` for a flipped curve of degree `d`.
pub fn unbalance_degree(n1: i64, n2: i64, d: i64) -> Result<i64, BlowupError> {
    if n1 > n2 {
        return Err(BlowupError::InvalidSurfaceOrder { n1, n2 });
    }
    Ok((n2 - n1) * d)
}
