//! Liaison arithmetic and the hypothesis checkers built on it.
//!
//! Curves cut out residually by a pair of surfaces exchange genus and degree
//! by the exact rules `d + d' = n1 n2` and `g - g' = (n1 + n2 - 4)(d - d')/2`.
//! A skew linkage (residual a disjoint union of curves) is *rigid* when every
//! component has `e_i = 2 g_i - 2 - (n1 - 4) d_i <= 0` and *super-rigid* when
//! all are strictly negative; in that regime the movable cone is walled into
//! chambers by the residual rays, ordered by the exact rationals `e_i / d_i`.
//!
//! Q-canonicity of a residual component (a rational multiple of the
//! hyperplane section being linearly equivalent to the canonical class)
//! depends on the curve's linear-equivalence class, not on `(g, d)`, so it
//! enters as an input flag and is never computed. Rational and elliptic
//! components default to Q-canonical. The genericity counter
//! [`qcanonical_genericity`] quantifies when non-Q-canonical curves dominate
//! every Hilbert-scheme component, by exact dimension bounds.

use num::BigRational;
use thiserror::Error;

use crate::blowup::{residual_class, CurveClass, DivisorClass};
use crate::curve::CurveNumerics;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LinkageError {
    #[error("invalid linkage data: {0}")]
    InvalidSpec(String),
    #[error("degree {d} does not fit in an ({n1}, {n2}) linkage: need d <= {max}")]
    DegreeTooLarge { d: i64, n1: i64, n2: i64, max: i64 },
    #[error("genus transfer ({numerator})/2 is not an integer")]
    NonIntegralGenus { numerator: i64 },
    #[error("residual genus would be {g} < 0: no such linkage exists")]
    NegativeResidualGenus { g: i64 },
    #[error("component {index} has e = {e} > 0: the linkage is not rigid")]
    NotRigid { index: usize, e: i64 },
    #[error("genus {g} < 2: every rational or elliptic curve is Q-canonical")]
    GenusTooSmall { g: i64 },
    #[error("component {index} needs the `{flag}` flag: not computable from (g, d)")]
    MissingFlag { index: usize, flag: &'static str },
}

/// One residual component with its optional linear-equivalence flags.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinkageComponent {
    pub g: i64,
    pub d: i64,
    /// Whether some rational multiple of the hyperplane section is the
    /// canonical class. Defaults to true for `g <= 1`, unknown otherwise.
    pub qcanonical: Option<bool>,
    /// `nu` such that `K ~ nu H` on the component, when known.
    pub subcanonical_level: Option<i64>,
}

impl LinkageComponent {
    pub fn new(g: i64, d: i64) -> Self {
        LinkageComponent {
            g,
            d,
            qcanonical: None,
            subcanonical_level: None,
        }
    }

    pub fn with_qcanonical(mut self, flag: bool) -> Self {
        self.qcanonical = Some(flag);
        self
    }

    pub fn with_subcanonical_level(mut self, level: i64) -> Self {
        self.subcanonical_level = Some(level);
        // subcanonical curves are in particular Q-canonical
        self.qcanonical.get_or_insert(true);
        self
    }

    /// A component known to be a smooth `(m1, m2)` complete intersection is
    /// `(m1 + m2 - 4)`-subcanonical.
    pub fn as_complete_intersection(self, m1: i64, m2: i64) -> Self {
        self.with_subcanonical_level(m1 + m2 - 4)
    }

    /// The stored flag with the genus-at-most-one default applied.
    pub fn effective_qcanonical(&self) -> Option<bool> {
        if self.g <= 1 {
            Some(self.qcanonical.unwrap_or(true))
        } else {
            self.qcanonical
        }
    }
}

/// Surface degrees plus the residual configuration of a skew linkage.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkewLinkageSpec {
    n1: i64,
    n2: i64,
    components: Vec<LinkageComponent>,
}

impl SkewLinkageSpec {
    pub fn new(n1: i64, n2: i64, components: Vec<LinkageComponent>) -> Result<Self, LinkageError> {
        if n1 < 1 || n2 < 1 || n1 > n2 {
            return Err(LinkageError::InvalidSpec(format!(
                "surface degrees must satisfy 1 <= n1 <= n2, got ({n1}, {n2})"
            )));
        }
        if components.is_empty() {
            return Err(LinkageError::InvalidSpec(
                "a skew linkage needs at least one residual component".into(),
            ));
        }
        let mut total = 0i64;
        for (i, c) in components.iter().enumerate() {
            if c.d < 1 {
                return Err(LinkageError::InvalidSpec(format!(
                    "component {i} has degree {} < 1",
                    c.d
                )));
            }
            if c.g < 0 {
                return Err(LinkageError::InvalidSpec(format!(
                    "component {i} has genus {} < 0",
                    c.g
                )));
            }
            total += c.d;
        }
        if total > n1 * n2 - 1 {
            return Err(LinkageError::InvalidSpec(format!(
                "residual degrees sum to {total} > n1*n2 - 1 = {}",
                n1 * n2 - 1
            )));
        }
        Ok(SkewLinkageSpec { n1, n2, components })
    }

    pub fn n1(&self) -> i64 {
        self.n1
    }

    pub fn n2(&self) -> i64 {
        self.n2
    }

    pub fn components(&self) -> &[LinkageComponent] {
        &self.components
    }
}

/// Genus and degree of the residual of a `(g, d)` curve in an `(n1, n2)`
/// linkage: `d' = n1 n2 - d`, `g' = g - (n1 + n2 - 4)(d - d')/2`.
///
/// ```
/// use moridream::linkage::linked_numerics;
///
/// let residual = linked_numerics(23, 14, 4, 5).unwrap();
/// assert_eq!((residual.g(), residual.d()), (3, 6));
/// ```
pub fn linked_numerics(g: i64, d: i64, n1: i64, n2: i64) -> Result<CurveNumerics, LinkageError> {
    if n1 < 1 || n2 < 1 {
        return Err(LinkageError::InvalidSpec(format!(
            "surface degrees must be positive, got ({n1}, {n2})"
        )));
    }
    let max = n1 * n2 - 1;
    if d > max {
        return Err(LinkageError::DegreeTooLarge { d, n1, n2, max });
    }
    let d_res = n1 * n2 - d;
    let numerator = (n1 as i128 + n2 as i128 - 4) * (d as i128 - d_res as i128);
    if numerator % 2 != 0 {
        // unreachable for integer inputs (the two factors can never both be
        // odd), kept so the transfer stays a total function of its formula
        return Err(LinkageError::NonIntegralGenus {
            numerator: numerator as i64,
        });
    }
    let g_res = g as i128 - numerator / 2;
    let g_res = i64::try_from(g_res).expect("genus exceeds i64");
    if g_res < 0 {
        return Err(LinkageError::NegativeResidualGenus { g: g_res });
    }
    CurveNumerics::new(g_res, d_res)
        .map_err(|e| LinkageError::InvalidSpec(e.to_string()))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Rigidity {
    SuperRigid,
    Rigid,
    NotRigid,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RigidityReport {
    pub class: Rigidity,
    /// `e_i = 2 g_i - 2 - (n1 - 4) d_i` per component, in input order.
    pub e: Vec<i64>,
    /// `n1 = n2`.
    pub balanced: bool,
}

pub fn rigidity(spec: &SkewLinkageSpec) -> RigidityReport {
    let e: Vec<i64> = spec
        .components
        .iter()
        .map(|c| 2 * c.g - 2 - (spec.n1 - 4) * c.d)
        .collect();
    let class = if e.iter().all(|&v| v < 0) {
        Rigidity::SuperRigid
    } else if e.iter().all(|&v| v <= 0) {
        Rigidity::Rigid
    } else {
        Rigidity::NotRigid
    };
    RigidityReport {
        class,
        e,
        balanced: spec.n1 == spec.n2,
    }
}

/// The contraction at the far end of the chamber sequence.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EndContraction {
    /// Balanced super-rigid linkage: fiber type over the line.
    FibrationToP1,
    /// Unbalanced super-rigid linkage: the first surface drops to a point.
    DivisorialToPoint,
    /// Unbalanced, rigid only.
    Divisorial,
    /// Balanced, rigid only.
    Fibration,
}

/// The chamber decomposition carried by a rigid skew linkage.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChamberStructure {
    /// Index sets into the spec's components, ordered by increasing
    /// `e_i / d_i`; equal ratios share a block.
    pub blocks: Vec<Vec<usize>>,
    /// One primitive curve class per block.
    pub rays: Vec<CurveClass>,
    /// One wall per block, perpendicular to its ray.
    pub walls: Vec<DivisorClass>,
    pub end_contraction: EndContraction,
    pub rigidity: RigidityReport,
}

/// Partitions the residual components by the exact ratio `e_i / d_i` and
/// produces the wall sequence `D_1 .. D_k`.
pub fn chambers(spec: &SkewLinkageSpec) -> Result<ChamberStructure, LinkageError> {
    let report = rigidity(spec);
    if report.class == Rigidity::NotRigid {
        let (index, &e) = report
            .e
            .iter()
            .enumerate()
            .find(|(_, &v)| v > 0)
            .expect("NotRigid implies a positive e");
        return Err(LinkageError::NotRigid { index, e });
    }

    // sort indices by e/d via cross-multiplication (degrees are positive)
    let ratio_lt = |i: usize, j: usize| {
        (report.e[i] as i128) * (spec.components[j].d as i128)
            < (report.e[j] as i128) * (spec.components[i].d as i128)
    };
    let ratio_eq = |i: usize, j: usize| {
        (report.e[i] as i128) * (spec.components[j].d as i128)
            == (report.e[j] as i128) * (spec.components[i].d as i128)
    };
    let mut order: Vec<usize> = (0..spec.components.len()).collect();
    order.sort_by(|&i, &j| {
        if ratio_eq(i, j) {
            std::cmp::Ordering::Equal
        } else if ratio_lt(i, j) {
            std::cmp::Ordering::Less
        } else {
            std::cmp::Ordering::Greater
        }
    });

    let mut blocks: Vec<Vec<usize>> = Vec::new();
    for idx in order {
        match blocks.last_mut() {
            Some(block) if ratio_eq(block[0], idx) => block.push(idx),
            _ => blocks.push(vec![idx]),
        }
    }

    let mut rays = Vec::with_capacity(blocks.len());
    let mut walls = Vec::with_capacity(blocks.len());
    for block in &blocks {
        let rep = block[0];
        let c = &spec.components[rep];
        let rc = residual_class(c.g, c.d, spec.n1, spec.n2)
            .expect("spec invariants give a valid residual");
        let gcd = gcd_i64(c.d, (rc.e - c.d * spec.n2).abs()).max(1);
        rays.push(CurveClass::from_ints(
            c.d / gcd,
            (rc.e - c.d * spec.n2) / gcd,
        ));
        let wh = c.d as i128 * spec.n2 as i128 - rc.e as i128;
        let we = -(c.d as i128);
        let wg = gcd_i64(wh.unsigned_abs() as i64, we.unsigned_abs() as i64).max(1) as i128;
        walls.push(DivisorClass::from_ints(
            i64::try_from(wh / wg).expect("wall entry exceeds i64"),
            i64::try_from(we / wg).expect("wall entry exceeds i64"),
        ));
    }

    let end_contraction = match (report.balanced, report.class) {
        (true, Rigidity::SuperRigid) => EndContraction::FibrationToP1,
        (true, _) => EndContraction::Fibration,
        (false, Rigidity::SuperRigid) => EndContraction::DivisorialToPoint,
        (false, _) => EndContraction::Divisorial,
    };

    Ok(ChamberStructure {
        blocks,
        rays,
        walls,
        end_contraction,
        rigidity: report,
    })
}

fn gcd_i64(mut a: i64, mut b: i64) -> i64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a.abs()
}

/// Which regime of the degree relative to `2g - 2` applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DegreeRegime {
    /// `d > 2g - 2`: every divisor of degree `d` is non-special.
    AboveCanonical,
    /// `d = 2g - 2`: the canonical divisor itself maximizes sections.
    Canonical,
    /// `d < 2g - 2`: section counts bounded through Clifford's inequality,
    /// with the hyperelliptic locus counted separately.
    BelowCanonical,
}

/// One dimension bound on a locus of Q-canonically embedded curves.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocusBound {
    pub locus: &'static str,
    /// The bound on the locus dimension (an equality when `exact`).
    pub bound: i64,
    /// Every Hilbert-scheme component has dimension at least `4d`.
    pub four_d: i64,
    /// Whether the bound forces the locus below every component.
    pub strictly_dominated: bool,
    /// Bound attained exactly rather than a strict upper estimate.
    pub exact: bool,
}

/// Whether non-Q-canonical curves are generic in every component of the
/// Hilbert scheme of `(g, d)` curves.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QcanGenericity {
    pub applicable: bool,
    /// The two stubborn pairs (3, 4) and (4, 6), where every curve is a
    /// canonical complete intersection.
    pub exceptional: bool,
    pub regime: DegreeRegime,
    pub bounds: Vec<LocusBound>,
}

/// Dimension-count test: the Q-canonical locus is a countable union of
/// closed subsets, and it is *strict* in every component exactly when each
/// listed bound stays below `4d`. Requires `g >= 2`; in lower genus every
/// curve is Q-canonical and the question is vacuous.
pub fn qcanonical_genericity(g: i64, d: i64) -> Result<QcanGenericity, LinkageError> {
    if g < 2 {
        return Err(LinkageError::GenusTooSmall { g });
    }
    if d < 1 {
        return Err(LinkageError::InvalidSpec(format!("degree {d} < 1")));
    }
    let four_d = 4 * d;
    let exceptional = (g, d) == (3, 4) || (g, d) == (4, 6);

    let (regime, bounds) = if d > 2 * g - 2 {
        let bound = 4 * d - g;
        (
            DegreeRegime::AboveCanonical,
            vec![LocusBound {
                locus: "non-special",
                bound,
                four_d,
                strictly_dominated: bound < four_d,
                exact: true,
            }],
        )
    } else if d == 2 * g - 2 {
        let bound = 4 * d - g + 4; // = 7g - 4
        (
            DegreeRegime::Canonical,
            vec![LocusBound {
                locus: "canonical",
                bound,
                four_d,
                strictly_dominated: bound < four_d, // g > 4
                exact: true,
            }],
        )
    } else {
        let general = 2 * d + 3 * g;
        let hyperelliptic = 2 * d + 2 * g + 2;
        (
            DegreeRegime::BelowCanonical,
            vec![
                LocusBound {
                    locus: "general",
                    bound: general,
                    // the Clifford estimate is strict off the hyperelliptic
                    // locus, so equality with 4d still dominates
                    four_d,
                    strictly_dominated: general <= four_d, // 3g <= 2d
                    exact: false,
                },
                LocusBound {
                    locus: "hyperelliptic",
                    bound: hyperelliptic,
                    four_d,
                    strictly_dominated: hyperelliptic < four_d, // d > g + 1
                    exact: true,
                },
            ],
        )
    };

    let applicable = bounds.iter().all(|b| b.strictly_dominated);
    Ok(QcanGenericity {
        applicable,
        exceptional,
        regime,
        bounds,
    })
}

/// How the `h^1(I_C'(n_i - 4)) = 0` hypothesis was settled.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum H1Route {
    /// Trivial Hartshorne-Rao module: exact certificate.
    AcmCertificate,
    /// `n_i >= d' + 2` (Castelnuovo-Mumford regularity of smooth space
    /// curves). Sufficient, not necessary.
    RegularityBound,
    Unverified,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ObstructionViolation {
    /// Genus at most 1: every residual is Q-canonical, so the very general
    /// locus the obstruction needs is empty rather than obstructed.
    GenericityVacuous { g: i64 },
    /// The non-Q-canonical locus is not generic for `(g', d')`.
    GenericityFails { detail: String },
    /// `2g' - 2 - (n - 4) d' >= 0` for one of the surfaces.
    NotSuperRigid { n: i64, value: i64 },
    /// Neither the ACM certificate nor the regularity bound applies.
    H1Unverified { n: i64, required: i64 },
    /// `d'` does not fit in an `(n1, n2)` linkage at all.
    InvalidLinkage { detail: String },
}

/// Outcome of checking the linkage-obstruction hypotheses.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ObstructionReport {
    pub hypotheses_ok: bool,
    pub violations: Vec<ObstructionViolation>,
    /// `(g, d)` of the linked curve when the arithmetic is valid.
    pub linked: Option<CurveNumerics>,
    pub h1_route: H1Route,
    /// Super-rigidity values `2g' - 2 - (n_i - 4) d'` per surface.
    pub super_rigidity: [(i64, i64); 2],
    /// Set exactly when all hypotheses hold.
    pub verdict_fragment: Option<&'static str>,
}

pub const NOT_MDS_VERY_GENERAL: &str =
    "not a Mori Dream Space for a very general element: nef but not semiample divisor";

/// Verifies the hypotheses for the linkage obstruction on `(g', d')` with
/// surfaces of degrees `n1, n2`: genericity of non-Q-canonical curves,
/// super-rigidity against both surfaces, and the `h^1` vanishing (exact via
/// the ACM flag, else the sufficient regularity bound `n_i >= d' + 2`).
///
/// ```
/// use moridream::linkage::linkage_obstruction_check;
///
/// let report = linkage_obstruction_check(2, 5, 5, 5, true);
/// assert!(report.hypotheses_ok);
/// let linked = report.linked.unwrap();
/// assert_eq!((linked.g(), linked.d()), (47, 20));
/// ```
pub fn linkage_obstruction_check(
    g_res: i64,
    d_res: i64,
    n1: i64,
    n2: i64,
    acm: bool,
) -> ObstructionReport {
    let mut violations = Vec::new();

    match qcanonical_genericity(g_res, d_res) {
        Err(LinkageError::GenusTooSmall { g }) => {
            violations.push(ObstructionViolation::GenericityVacuous { g });
        }
        Err(e) => {
            violations.push(ObstructionViolation::GenericityFails {
                detail: e.to_string(),
            });
        }
        Ok(q) if !q.applicable => {
            let detail = if q.exceptional {
                format!("({g_res}, {d_res}) is an exceptional pair: every element is a canonical complete intersection")
            } else {
                format!(
                    "dimension bounds do not dominate: {:?}",
                    q.bounds
                        .iter()
                        .filter(|b| !b.strictly_dominated)
                        .map(|b| (b.locus, b.bound, b.four_d))
                        .collect::<Vec<_>>()
                )
            };
            violations.push(ObstructionViolation::GenericityFails { detail });
        }
        Ok(_) => {}
    }

    let sr = |n: i64| 2 * g_res - 2 - (n - 4) * d_res;
    let super_rigidity = [(n1, sr(n1)), (n2, sr(n2))];
    for &(n, value) in &super_rigidity {
        if value >= 0 {
            violations.push(ObstructionViolation::NotSuperRigid { n, value });
        }
    }

    let h1_route = if acm {
        H1Route::AcmCertificate
    } else if n1 >= d_res + 2 && n2 >= d_res + 2 {
        H1Route::RegularityBound
    } else {
        let n = if n1 < d_res + 2 { n1 } else { n2 };
        violations.push(ObstructionViolation::H1Unverified {
            n,
            required: d_res + 2,
        });
        H1Route::Unverified
    };

    let linked = match linked_numerics(g_res, d_res, n1, n2) {
        Ok(n) => Some(n),
        Err(e) => {
            violations.push(ObstructionViolation::InvalidLinkage {
                detail: e.to_string(),
            });
            None
        }
    };

    let hypotheses_ok = violations.is_empty();
    ObstructionReport {
        hypotheses_ok,
        violations,
        linked,
        h1_route,
        super_rigidity,
        verdict_fragment: hypotheses_ok.then_some(NOT_MDS_VERY_GENERAL),
    }
}

/// Restriction of `a H + b S2` to the residual curve, written against the
/// hyperplane section and the canonical class: `((a - b(n1 - 4)), b)`.
pub fn restriction_coefficients(
    a: &BigRational,
    b: &BigRational,
    n1: i64,
) -> (BigRational, BigRational) {
    let shift = BigRational::from_integer((n1 - 4).into());
    (a - b * shift, b.clone())
}

/// Which branch settled a component's potential contractibility.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ContractibilityBranch {
    /// Q-canonical with `4(g - 1) - (n2 - 4) d < 0`.
    StarCondition,
    /// Top block under a super-rigid linkage, same star condition.
    SuperRigidStar,
    /// Top block via `K ~ (n2 - 4) H`.
    Subcanonical,
    /// The component's flags rule every branch out.
    None,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentContractibility {
    pub index: usize,
    pub in_top_block: bool,
    pub branch: ContractibilityBranch,
    /// `4(g - 1) - (n2 - 4) d`.
    pub star_value: i64,
    pub satisfied: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PotentialContractibility {
    pub components: Vec<ComponentContractibility>,
    pub all_satisfied: bool,
}

/// Per-component check of the conditions under which every residual ray
/// stays contractible along the chamber sequence. Components outside the
/// top ratio block need Q-canonicity plus `4(g_i - 1) - (n2 - 4) d_i < 0`;
/// the top block needs either super-rigidity with the same condition or the
/// exact subcanonical level `n2 - 4`.
pub fn potential_contractibility_conditions(
    spec: &SkewLinkageSpec,
) -> Result<PotentialContractibility, LinkageError> {
    let structure = chambers(spec)?;
    let top_block = structure.blocks.last().expect("blocks are nonempty");
    let super_rigid = structure.rigidity.class == Rigidity::SuperRigid;

    let mut components = Vec::with_capacity(spec.components.len());
    for (index, c) in spec.components.iter().enumerate() {
        let in_top_block = top_block.contains(&index);
        let star_value = 4 * (c.g - 1) - (spec.n2 - 4) * c.d;
        let qcan = c.effective_qcanonical();
        let level = c.subcanonical_level;

        let (branch, satisfied, detail) = if qcan == Some(false) {
            (
                ContractibilityBranch::None,
                false,
                "component is not Q-canonical".to_string(),
            )
        } else if !in_top_block {
            match qcan {
                None => return Err(LinkageError::MissingFlag { index, flag: "qcanonical" }),
                Some(true) => {
                    let ok = star_value < 0;
                    (
                        ContractibilityBranch::StarCondition,
                        ok,
                        format!("4(g-1) - (n2-4) d = {star_value}"),
                    )
                }
                Some(false) => unreachable!("handled above"),
            }
        } else if super_rigid && qcan == Some(true) && star_value < 0 {
            (
                ContractibilityBranch::SuperRigidStar,
                true,
                format!("super-rigid with 4(g-1) - (n2-4) d = {star_value}"),
            )
        } else if let Some(nu) = level {
            let ok = nu == spec.n2 - 4;
            (
                ContractibilityBranch::Subcanonical,
                ok,
                format!("subcanonical level {nu}, required {}", spec.n2 - 4),
            )
        } else if qcan.is_none() {
            return Err(LinkageError::MissingFlag { index, flag: "qcanonical" });
        } else {
            return Err(LinkageError::MissingFlag {
                index,
                flag: "subcanonical_level",
            });
        };

        components.push(ComponentContractibility {
            index,
            in_top_block,
            branch,
            star_value,
            satisfied,
            detail,
        });
    }

    let all_satisfied = components.iter().all(|c| c.satisfied);
    Ok(PotentialContractibility {
        components,
        all_satisfied,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::blowup::pair;
    use num::{BigInt, Zero};

    fn rat(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    #[test]
    fn linkage_chain_of_low_degree_quartic() {
        let r = linked_numerics(23, 14, 4, 5).unwrap();
        assert_eq!((r.g(), r.d()), (3, 6));
        let r = linked_numerics(3, 6, 3, 3).unwrap();
        assert_eq!((r.g(), r.d()), (0, 3));
        let r = linked_numerics(0, 3, 2, 2).unwrap();
        assert_eq!((r.g(), r.d()), (0, 1));
        // inverse direction: residual (2, 5) inside quintics
        let r = linked_numerics(2, 5, 5, 5).unwrap();
        assert_eq!((r.g(), r.d()), (47, 20));
    }

    #[test]
    fn linkage_error_paths() {
        assert!(matches!(
            linked_numerics(0, 6, 2, 3),
            Err(LinkageError::DegreeTooLarge { .. })
        ));
        // (0, 5) cannot be (2, 3)-linked: residual genus -2
        assert!(matches!(
            linked_numerics(0, 5, 2, 3),
            Err(LinkageError::NegativeResidualGenus { g: -2 })
        ));
    }

    #[test]
    fn linkage_involution() {
        for (g, d, n1, n2) in [(23, 14, 4, 5), (47, 20, 5, 5), (3, 6, 3, 3), (4, 5, 3, 3)] {
            let r = linked_numerics(g, d, n1, n2).unwrap();
            assert_eq!(d + r.d(), n1 * n2);
            let back = linked_numerics(r.g(), r.d(), n1, n2).unwrap();
            assert_eq!((back.g(), back.d()), (g, d));
        }
    }

    fn spec(n1: i64, n2: i64, comps: &[(i64, i64)]) -> SkewLinkageSpec {
        SkewLinkageSpec::new(
            n1,
            n2,
            comps.iter().map(|&(g, d)| LinkageComponent::new(g, d)).collect(),
        )
        .unwrap()
    }

    #[test]
    fn rigidity_classes() {
        let r = rigidity(&spec(5, 5, &[(2, 5)]));
        assert_eq!((r.class, r.balanced), (Rigidity::SuperRigid, true));
        assert_eq!(r.e, vec![-3]);

        let r = rigidity(&spec(4, 5, &[(3, 6)]));
        assert_eq!(r.class, Rigidity::NotRigid);
        assert_eq!(r.e, vec![4]);

        let r = rigidity(&spec(4, 4, &[(0, 1)]));
        assert_eq!((r.class, r.balanced), (Rigidity::SuperRigid, true));
        assert_eq!(r.e, vec![-2]);

        let r = rigidity(&spec(4, 9, &[(1, 3)]));
        assert_eq!(r.class, Rigidity::Rigid);
    }

    #[test]
    fn chamber_blocks_and_walls() {
        // e/d: (0,1) -> -3, (1,4) -> -4/4 = -1; first block is the line
        let st = chambers(&spec(5, 5, &[(0, 1), (1, 4)])).unwrap();
        assert_eq!(st.blocks, vec![vec![0], vec![1]]);
        assert_eq!(st.end_contraction, EndContraction::FibrationToP1);
        for (wall, ray) in st.walls.iter().zip(&st.rays) {
            assert!(pair(wall, ray).is_zero());
        }

        // equal ratios merge into one block with one wall
        let st = chambers(&spec(5, 5, &[(0, 2), (0, 2)])).unwrap();
        assert_eq!(st.blocks, vec![vec![0, 1]]);
        assert_eq!(st.walls.len(), 1);

        let st = chambers(&spec(4, 4, &[(0, 1)])).unwrap();
        assert_eq!(st.blocks.len(), 1);

        assert!(matches!(
            chambers(&spec(4, 5, &[(3, 6)])),
            Err(LinkageError::NotRigid { index: 0, e: 4 })
        ));
    }

    #[test]
    fn chamber_ratios_strictly_increase() {
        let st = chambers(&spec(5, 6, &[(0, 1), (0, 2), (1, 4), (0, 1)])).unwrap();
        let flat: Vec<usize> = st.blocks.iter().flatten().copied().collect();
        let mut seen: Vec<usize> = flat.clone();
        seen.sort_unstable();
        assert_eq!(seen, (0..4).collect::<Vec<_>>());
        let e = st.rigidity.e.clone();
        let comps = [(0i64, 1i64), (0, 2), (1, 4), (0, 1)];
        for pair_ix in st.blocks.windows(2) {
            let (i, j) = (pair_ix[0][0], pair_ix[1][0]);
            assert!(
                (e[i] as i128) * (comps[j].1 as i128) < (e[j] as i128) * (comps[i].1 as i128)
            );
        }
    }

    #[test]
    fn genericity_cases() {
        let q = qcanonical_genericity(2, 5).unwrap();
        assert!(q.applicable && !q.exceptional);
        assert_eq!(q.bounds[0].bound, 18);

        let q = qcanonical_genericity(3, 4).unwrap();
        assert!(!q.applicable && q.exceptional);
        assert_eq!(q.regime, DegreeRegime::Canonical);

        let q = qcanonical_genericity(4, 6).unwrap();
        assert!(!q.applicable && q.exceptional);

        // d > 2g - 2 regime: bound 4d - g = 28 < 32
        let q = qcanonical_genericity(4, 8).unwrap();
        assert_eq!(q.regime, DegreeRegime::AboveCanonical);
        assert!(q.applicable);
        assert_eq!(q.bounds[0].bound, 28);

        // canonical degree with g > 4 is fine
        let q = qcanonical_genericity(5, 8).unwrap();
        assert!(q.applicable);

        // below-canonical needs 2d >= 3g
        assert!(qcanonical_genericity(6, 9).unwrap().applicable);
        assert!(!qcanonical_genericity(6, 8).unwrap().applicable);

        assert!(matches!(
            qcanonical_genericity(1, 3),
            Err(LinkageError::GenusTooSmall { g: 1 })
        ));
    }

    #[test]
    fn linkage_obstruction_rows() {
        let r = linkage_obstruction_check(2, 5, 5, 5, true);
        assert!(r.hypotheses_ok);
        assert_eq!(r.h1_route, H1Route::AcmCertificate);
        let linked = r.linked.unwrap();
        assert_eq!((linked.g(), linked.d()), (47, 20));

        let r = linkage_obstruction_check(3, 4, 6, 6, true);
        assert!(!r.hypotheses_ok);
        assert!(matches!(
            r.violations[0],
            ObstructionViolation::GenericityFails { .. }
        ));

        let r = linkage_obstruction_check(2, 5, 4, 4, true);
        assert!(!r.hypotheses_ok);
        assert!(r
            .violations
            .iter()
            .any(|v| matches!(v, ObstructionViolation::NotSuperRigid { n: 4, value: 2 })));
    }

    #[test]
    fn obstruction_check_monotone_in_surface_degree() {
        // once satisfied with acm, enlarging a surface degree keeps it so
        for n in 5..=30 {
            let r = linkage_obstruction_check(2, 5, n, n, true);
            assert!(r.hypotheses_ok, "failed at n = {n}");
        }
    }

    #[test]
    fn restriction_formula() {
        assert_eq!(
            restriction_coefficients(&rat(1), &rat(0), 5),
            (rat(1), rat(0))
        );
        assert_eq!(
            restriction_coefficients(&rat(0), &rat(1), 4),
            (rat(0), rat(1))
        );
        assert_eq!(
            restriction_coefficients(&rat(3), &rat(2), 5),
            (rat(1), rat(2))
        );
    }

    #[test]
    fn contractibility_branches() {
        // rational curve in a balanced quintic linkage: star branch
        let s = SkewLinkageSpec::new(5, 5, vec![LinkageComponent::new(0, 1)]).unwrap();
        let r = potential_contractibility_conditions(&s).unwrap();
        assert!(r.all_satisfied);
        assert_eq!(r.components[0].star_value, -5);
        assert_eq!(r.components[0].branch, ContractibilityBranch::SuperRigidStar);

        // rigid-not-super top block without a subcanonical level: flag demanded
        let s = SkewLinkageSpec::new(
            4,
            9,
            vec![LinkageComponent::new(1, 3).with_qcanonical(true)],
        )
        .unwrap();
        assert_eq!(
            potential_contractibility_conditions(&s),
            Err(LinkageError::MissingFlag {
                index: 0,
                flag: "subcanonical_level"
            })
        );
        // ... and satisfied once the level matches n2 - 4 = 5
        let s = SkewLinkageSpec::new(
            4,
            9,
            vec![LinkageComponent::new(1, 3).with_subcanonical_level(5)],
        )
        .unwrap();
        let r = potential_contractibility_conditions(&s).unwrap();
        assert!(r.all_satisfied);
        assert_eq!(r.components[0].branch, ContractibilityBranch::Subcanonical);

        // explicit non-Q-canonical flag fails the hypothesis outright
        let s = SkewLinkageSpec::new(
            5,
            5,
            vec![LinkageComponent::new(2, 5).with_qcanonical(false)],
        )
        .unwrap();
        let r = potential_contractibility_conditions(&s).unwrap();
        assert!(!r.all_satisfied);
        assert_eq!(r.components[0].branch, ContractibilityBranch::None);

        // unknown flag on a positive-genus component outside the top block
        let s = SkewLinkageSpec::new(
            5,
            5,
            vec![LinkageComponent::new(0, 1), LinkageComponent::new(2, 5)],
        )
        .unwrap();
        // blocks: (2,5) ratio -3/5, (0,1) ratio -3 -> top block is (2,5)
        assert!(matches!(
            potential_contractibility_conditions(&s),
            Err(LinkageError::MissingFlag { index: 1, flag: "qcanonical" })
        ));
    }
}
