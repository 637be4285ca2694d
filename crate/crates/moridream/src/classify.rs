//! The verdict engine: one entry point dispatching over evidence.
//!
//! A query carries the curve type `(g, d)` and an [`Evidence`] value naming
//! what is known about the curve. Evidence is trusted as given; the engine
//! evaluates criteria, it does not prove geometry. Distinct evidence for the
//! same `(g, d)` can legitimately reach opposite verdicts: `(141, 35)` is
//! Mori Dream on the cubic-surface component and not Mori Dream on the
//! quartic component, and the engine never merges these.
//!
//! Quantifiers track the genericity logic of each criterion: open conditions
//! hold for a *general* element, countable intersections of open conditions
//! only for a *very general* one, and unconditional criteria for *every*
//! element. Every negative verdict carries re-checkable certificates.

use num::BigInt;
use thiserror::Error;

use crate::citations;
use crate::curve::CurveNumerics;
use crate::hilbert;
use crate::k3::{self, QuarticLatticeModel};
use crate::linkage::{
    self, LinkageComponent, ObstructionReport, ObstructionViolation, PotentialContractibility,
    SkewLinkageSpec,
};
use crate::pell::PellOutcome;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ClassifyError {
    #[error("invalid evidence: {0}")]
    InvalidEvidence(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("hypothesis failure: {0}")]
    HypothesisFailure(String),
}

/// What is known about the curve being classified.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Evidence {
    /// Smooth complete intersection of surfaces of the given degrees.
    CompleteIntersection(i64, i64),
    /// Ideal generated by three polynomials.
    AlmostCompleteIntersection,
    /// Lies on a surface of degree at most 3.
    OnSurfaceOfDegree(i64),
    /// General member of the quartic locus of its Hilbert scheme.
    GeneralOnQuartic,
    /// Obtained by a super-rigid linkage from a very general `(g', d')`
    /// curve on surfaces of degrees `(n1, n2)`.
    GeneralLinked {
        g_res: i64,
        d_res: i64,
        n1: i64,
        n2: i64,
        acm: bool,
    },
    /// Nothing beyond `(g, d)`.
    Unspecified,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    MoriDream,
    NotMoriDream,
    Inconclusive,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Quantifier {
    EveryElement,
    GeneralElement,
    VeryGeneralElement,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Obstruction {
    IrrationalMovableRay,
    NefNotSemiample,
}

/// The Pell and inequality data backing a quartic-locus verdict.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuarticCertificates {
    pub r: BigInt,
    pub rational_outcome: PellOutcome,
    pub elliptic_outcome: PellOutcome,
    /// `64 - 8d + 2g - 2`.
    pub inequality_value: i64,
    pub d_ge_16: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CertificateBundle {
    None,
    Quartic(Box<QuarticCertificates>),
    Linked(ObstructionReport),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub status: Status,
    pub quantifier: Option<Quantifier>,
    pub obstruction: Option<Obstruction>,
    pub citations: Vec<&'static str>,
    pub certificates: CertificateBundle,
    pub notes: Vec<String>,
}

impl Verdict {
    fn mori_dream(quantifier: Quantifier, citation: &'static str, notes: Vec<String>) -> Self {
        Verdict {
            status: Status::MoriDream,
            quantifier: Some(quantifier),
            obstruction: None,
            citations: vec![citation],
            certificates: CertificateBundle::None,
            notes,
        }
    }

    fn inconclusive(notes: Vec<String>, certificates: CertificateBundle) -> Self {
        Verdict {
            status: Status::Inconclusive,
            quantifier: None,
            obstruction: None,
            citations: Vec::new(),
            certificates,
            notes,
        }
    }

    /// Structural invariants: negatives carry an obstruction, positives a
    /// citation.
    pub fn well_formed(&self) -> bool {
        match self.status {
            Status::NotMoriDream => self.obstruction.is_some() && !self.citations.is_empty(),
            Status::MoriDream => !self.citations.is_empty(),
            Status::Inconclusive => true,
        }
    }
}

/// Evaluates the applicable criterion for `(g, d)` under the given evidence.
///
/// ```
/// use moridream::classify::{classify, Evidence, Status, Quantifier};
/// use moridream::CurveNumerics;
///
/// let n = CurveNumerics::new(4, 6).unwrap();
/// let v = classify(&n, &Evidence::CompleteIntersection(2, 3)).unwrap();
/// assert_eq!(v.status, Status::MoriDream);
/// assert_eq!(v.quantifier, Some(Quantifier::EveryElement));
/// ```
pub fn classify(n: &CurveNumerics, evidence: &Evidence) -> Result<Verdict, ClassifyError> {
    let verdict = match evidence {
        Evidence::CompleteIntersection(n1, n2) => {
            let rec = hilbert::ci_numerics(*n1, *n2)
                .map_err(|e| ClassifyError::InvalidEvidence(e.to_string()))?;
            if rec.numerics != *n {
                return Err(ClassifyError::InvalidEvidence(format!(
                    "a ({n1}, {n2}) complete intersection has numerics {}, not {}",
                    rec.numerics, n
                )));
            }
            Verdict::mori_dream(
                Quantifier::EveryElement,
                citations::ACI_MDS,
                vec![format!("complete intersection of degrees ({n1}, {n2})")],
            )
        }
        Evidence::AlmostCompleteIntersection => Verdict::mori_dream(
            Quantifier::EveryElement,
            citations::ACI_MDS,
            vec!["almost complete intersection".to_string()],
        ),
        Evidence::OnSurfaceOfDegree(s) => {
            if !(1..=3).contains(s) {
                return Err(ClassifyError::InvalidEvidence(format!(
                    "the low-degree-surface criterion needs degree 1..=3, got {s}"
                )));
            }
            Verdict::mori_dream(
                Quantifier::EveryElement,
                citations::LOW_DEGREE_SURFACE_MDS,
                vec![format!("lies on a surface of degree {s}")],
            )
        }
        Evidence::GeneralOnQuartic => classify_on_quartic(n),
        Evidence::GeneralLinked {
            g_res,
            d_res,
            n1,
            n2,
            acm,
        } => classify_linked(n, *g_res, *d_res, *n1, *n2, *acm)?,
        Evidence::Unspecified => classify_unspecified(n),
    };
    debug_assert!(verdict.well_formed());
    Ok(verdict)
}

fn classify_on_quartic(n: &CurveNumerics) -> Verdict {
    let (g, d) = (n.g(), n.d());
    if !k3::mori_existence(n) {
        return Verdict::inconclusive(
            vec![format!(
                "8g < d^2 fails (8*{g} >= {d}^2): no smooth quartic contains such a curve"
            )],
            CertificateBundle::None,
        );
    }
    let model = QuarticLatticeModel::new(*n).expect("existence checked");
    let test = model.rational_elliptic_test();
    let inequality_value = 64 - 8 * d + 2 * g - 2;
    let d_ge_16 = d >= 16;
    let certificates = QuarticCertificates {
        r: model.discriminant().clone(),
        rational_outcome: test.rational_outcome.clone(),
        elliptic_outcome: test.elliptic_outcome.clone(),
        inequality_value,
        d_ge_16,
    };

    let mut failures = Vec::new();
    if test.has_rational {
        failures.push(format!(
            "x^2 - {} y^2 = -8 is solvable: a class of self-intersection -2 exists",
            certificates.r
        ));
    }
    if test.has_elliptic {
        failures.push(format!(
            "{} is a perfect square: a class of self-intersection 0 exists",
            certificates.r
        ));
    }
    if !d_ge_16 && inequality_value > 0 {
        failures.push(format!(
            "d = {d} < 16 and 64 - 8d + 2g - 2 = {inequality_value} > 0"
        ));
    }

    if failures.is_empty() {
        Verdict {
            status: Status::NotMoriDream,
            quantifier: Some(Quantifier::GeneralElement),
            obstruction: Some(Obstruction::IrrationalMovableRay),
            citations: vec![citations::QUARTIC_IRRATIONAL_RAY],
            certificates: CertificateBundle::Quartic(Box::new(certificates)),
            notes: vec![format!("discriminant r = {}", model.discriminant())],
        }
    } else {
        Verdict::inconclusive(failures, CertificateBundle::Quartic(Box::new(certificates)))
    }
}

fn classify_linked(
    n: &CurveNumerics,
    g_res: i64,
    d_res: i64,
    n1: i64,
    n2: i64,
    acm: bool,
) -> Result<Verdict, ClassifyError> {
    let report = linkage::linkage_obstruction_check(g_res, d_res, n1, n2, acm);
    match &report.linked {
        Some(linked) if linked != n => {
            return Err(ClassifyError::InvalidEvidence(format!(
                "an ({n1}, {n2}) linkage of ({g_res}, {d_res}) has numerics {linked}, not {n}"
            )));
        }
        None => {
            return Err(ClassifyError::InvalidEvidence(format!(
                "({g_res}, {d_res}) does not fit an ({n1}, {n2}) linkage"
            )));
        }
        Some(_) => {}
    }
    if report.hypotheses_ok {
        Ok(Verdict {
            status: Status::NotMoriDream,
            quantifier: Some(Quantifier::VeryGeneralElement),
            obstruction: Some(Obstruction::NefNotSemiample),
            citations: vec![citations::RIGID_LINKAGE_NEF_NOT_SEMIAMPLE],
            certificates: CertificateBundle::Linked(report.clone()),
            notes: vec![report
                .verdict_fragment
                .expect("fragment set on success")
                .to_string()],
        })
    } else {
        let notes = report
            .violations
            .iter()
            .map(describe_violation)
            .collect();
        Ok(Verdict::inconclusive(notes, CertificateBundle::Linked(report)))
    }
}

fn describe_violation(v: &ObstructionViolation) -> String {
    match v {
        ObstructionViolation::GenericityVacuous { g } => format!(
            "genus {g} <= 1: every residual is Q-canonical, the very general locus is empty"
        ),
        ObstructionViolation::GenericityFails { detail } => {
            format!("non-Q-canonical curves are not generic: {detail}")
        }
        ObstructionViolation::NotSuperRigid { n, value } => {
            format!("not super-rigid against degree {n}: 2g' - 2 - (n - 4) d' = {value} >= 0")
        }
        ObstructionViolation::H1Unverified { n, required } => format!(
            "h^1 vanishing unverified for degree {n}: needs the ACM flag or n >= {required}"
        ),
        ObstructionViolation::InvalidLinkage { detail } => detail.clone(),
    }
}

fn classify_unspecified(n: &CurveNumerics) -> Verdict {
    let (g, d) = (n.g(), n.d());
    if hilbert::on_quadric_by_max_genus(g, d) {
        let a = d / 2;
        let b = d - a;
        return Verdict::mori_dream(
            Quantifier::EveryElement,
            citations::LOW_DEGREE_SURFACE_MDS,
            vec![format!(
                "maximal genus for degree {d}: every such curve lies on a quadric (bidegree ({a}, {b}))"
            )],
        );
    }
    if (g, d) == (8, 8) {
        // bidegree (3, 5) exhausts the whole Hilbert scheme here
        return Verdict::mori_dream(
            Quantifier::EveryElement,
            citations::LOW_DEGREE_SURFACE_MDS,
            vec![
                "every (8, 8) curve lies on a quadric with bidegree (3, 5)".to_string(),
            ],
        );
    }
    Verdict::inconclusive(
        vec!["no applicable criterion without evidence".to_string()],
        CertificateBundle::None,
    )
}

/// One `(g, d)` pair surviving the raw irrational-ray hypothesis scan.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanRow {
    pub numerics: CurveNumerics,
    pub r: BigInt,
    pub rational_outcome: PellOutcome,
    pub elliptic_outcome: PellOutcome,
    pub inequality_value: i64,
    pub d_ge_16: bool,
}

/// All `(g, d)` with `d <= d_max` passing the raw hypotheses: `8g < d^2`,
/// both Pell equations unsolvable, and `d >= 16` or `64 - 8d + 2g - 2 <= 0`.
/// Deterministic, ordered by `(d, g)`. This is a hypothesis scan, not a
/// componenthood statement; see [`hilbert::low_degree_quartic_catalog`] for
/// the catalogued components below degree 16.
pub fn irrational_ray_scan(d_max: i64) -> Result<Vec<ScanRow>, ClassifyError> {
    if d_max < 3 {
        return Err(ClassifyError::InvalidInput(format!(
            "scan needs d_max >= 3, got {d_max}"
        )));
    }
    let mut rows = Vec::new();
    for d in 1..=d_max {
        for g in 0..=(d * d - 1) / 8 {
            let inequality_value = 64 - 8 * d + 2 * g - 2;
            let d_ge_16 = d >= 16;
            if !d_ge_16 && inequality_value > 0 {
                continue;
            }
            let n = CurveNumerics::new(g, d).expect("scan ranges are valid");
            let model = QuarticLatticeModel::new(n).expect("8g < d^2 by range");
            let test = model.rational_elliptic_test();
            if test.has_rational || test.has_elliptic {
                continue;
            }
            rows.push(ScanRow {
                numerics: n,
                r: model.discriminant().clone(),
                rational_outcome: test.rational_outcome,
                elliptic_outcome: test.elliptic_outcome,
                inequality_value,
                d_ge_16,
            });
        }
    }
    Ok(rows)
}

/// The two coexisting behaviours inside one linked family.
#[derive(Debug, Clone, PartialEq)]
pub struct NonOpennessReport {
    /// `(g, d)` of the linked curves.
    pub linked: CurveNumerics,
    /// The very general member: not a Mori Dream Space. Empty (with the
    /// note set) when the residual genus is at most 1 and the non-Q-canonical
    /// locus is empty.
    pub very_general: Option<Verdict>,
    pub very_general_note: Option<String>,
    /// The Q-canonical specialization: a Mori Dream Space on a positive-
    /// codimension subset of the closure of the very general locus.
    pub special_locus: Verdict,
    pub contractibility: PotentialContractibility,
}

/// Emits the two-branch non-openness witness for the family linked from
/// `(g_res, d_res)` on surfaces of degrees `(n1, n2)`: the very general
/// member carries a nef non-semiample divisor, while the Q-canonical
/// specialization is a Mori Dream Space.
pub fn non_openness_witness(
    g_res: i64,
    d_res: i64,
    n1: i64,
    n2: i64,
    acm: bool,
) -> Result<NonOpennessReport, ClassifyError> {
    let report = linkage::linkage_obstruction_check(g_res, d_res, n1, n2, acm);
    let linked = report
        .linked
        .ok_or_else(|| {
            ClassifyError::HypothesisFailure(format!(
                "({g_res}, {d_res}) does not fit an ({n1}, {n2}) linkage"
            ))
        })?;

    let vacuous_only = report
        .violations
        .iter()
        .all(|v| matches!(v, ObstructionViolation::GenericityVacuous { .. }))
        && !report.violations.is_empty();

    let (very_general, very_general_note) = if report.hypotheses_ok {
        let verdict = classify(
            &linked,
            &Evidence::GeneralLinked {
                g_res,
                d_res,
                n1,
                n2,
                acm,
            },
        )?;
        (Some(verdict), None)
    } else if vacuous_only {
        (
            None,
            Some(format!(
                "residual genus {g_res} <= 1: every residual is Q-canonical, so the \
                 very general branch is empty and no obstruction arises"
            )),
        )
    } else {
        let details: Vec<String> = report.violations.iter().map(describe_violation).collect();
        return Err(ClassifyError::HypothesisFailure(details.join("; ")));
    };

    // the Q-canonical specialization: same linkage with the residual
    // flagged Q-canonical, checked through the contractibility conditions
    let spec = SkewLinkageSpec::new(
        n1.min(n2),
        n1.max(n2),
        vec![LinkageComponent::new(g_res, d_res).with_qcanonical(true)],
    )
    .map_err(|e| ClassifyError::HypothesisFailure(e.to_string()))?;
    let contractibility = linkage::potential_contractibility_conditions(&spec)
        .map_err(|e| ClassifyError::HypothesisFailure(e.to_string()))?;
    if !contractibility.all_satisfied {
        let details: Vec<&str> = contractibility
            .components
            .iter()
            .filter(|c| !c.satisfied)
            .map(|c| c.detail.as_str())
            .collect();
        return Err(ClassifyError::HypothesisFailure(format!(
            "the Q-canonical specialization branch fails: {}",
            details.join("; ")
        )));
    }
    let special_locus = Verdict {
        status: Status::MoriDream,
        quantifier: Some(Quantifier::EveryElement),
        obstruction: None,
        citations: vec![
            citations::QCANONICAL_POTENTIALLY_CONTRACTIBLE,
            citations::POTENTIAL_CONTRACTIBILITY_MDS,
            citations::SEMIAMPLE_DEGENERATION,
        ],
        certificates: CertificateBundle::None,
        notes: vec![format!(
            "holds on the Q-canonical specialization locus, a positive-codimension subset \
             of the closure of the very general locus in the {linked} family"
        )],
    };

    Ok(NonOpennessReport {
        linked,
        very_general,
        very_general_note,
        special_locus,
        contractibility,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{blowup, pell};

    fn numerics(g: i64, d: i64) -> CurveNumerics {
        CurveNumerics::new(g, d).unwrap()
    }

    #[test]
    fn classify_spec_rows() {
        let v = classify(
            &numerics(47, 20),
            &Evidence::GeneralLinked {
                g_res: 2,
                d_res: 5,
                n1: 5,
                n2: 5,
                acm: true,
            },
        )
        .unwrap();
        assert_eq!(v.status, Status::NotMoriDream);
        assert_eq!(v.quantifier, Some(Quantifier::VeryGeneralElement));
        assert_eq!(v.obstruction, Some(Obstruction::NefNotSemiample));

        let v = classify(&numerics(3, 9), &Evidence::GeneralOnQuartic).unwrap();
        assert_eq!(v.status, Status::NotMoriDream);
        assert_eq!(v.quantifier, Some(Quantifier::GeneralElement));
        assert_eq!(v.obstruction, Some(Obstruction::IrrationalMovableRay));
        match &v.certificates {
            CertificateBundle::Quartic(c) => {
                assert_eq!(c.r, BigInt::from(65));
                assert_eq!(
                    c.rational_outcome.certificate,
                    pell::Certificate::ModulusSieve {
                        modulus: 5,
                        d: 65.into(),
                        n: (-8).into()
                    }
                );
            }
            other => panic!("expected quartic certificates, got {other:?}"),
        }

        let v = classify(&numerics(4, 6), &Evidence::CompleteIntersection(2, 3)).unwrap();
        assert_eq!(v.status, Status::MoriDream);
        assert_eq!(v.quantifier, Some(Quantifier::EveryElement));

        let v = classify(&numerics(8, 8), &Evidence::Unspecified).unwrap();
        assert_eq!(v.status, Status::MoriDream);

        let v = classify(&numerics(5, 5), &Evidence::Unspecified).unwrap();
        assert_eq!(v.status, Status::Inconclusive);
    }

    #[test]
    fn two_components_never_merge() {
        let n = numerics(141, 35);
        let on_cubic = classify(&n, &Evidence::OnSurfaceOfDegree(3)).unwrap();
        assert_eq!(on_cubic.status, Status::MoriDream);
        let on_quartic = classify(&n, &Evidence::GeneralOnQuartic).unwrap();
        assert_eq!(on_quartic.status, Status::NotMoriDream);
    }

    #[test]
    fn invalid_evidence_rejected() {
        assert!(matches!(
            classify(&numerics(4, 6), &Evidence::CompleteIntersection(2, 4)),
            Err(ClassifyError::InvalidEvidence(_))
        ));
        assert!(matches!(
            classify(&numerics(3, 9), &Evidence::OnSurfaceOfDegree(4)),
            Err(ClassifyError::InvalidEvidence(_))
        ));
        assert!(matches!(
            classify(
                &numerics(47, 20),
                &Evidence::GeneralLinked {
                    g_res: 2,
                    d_res: 5,
                    n1: 4,
                    n2: 5,
                    acm: true
                }
            ),
            Err(ClassifyError::InvalidEvidence(_))
        ));
    }

    #[test]
    fn quartic_hypothesis_failures_are_inconclusive() {
        // an elliptic quartic curve: r = 16 is a perfect square
        let v = classify(&numerics(1, 4), &Evidence::GeneralOnQuartic).unwrap();
        assert_eq!(v.status, Status::Inconclusive);
        assert!(v.notes.iter().any(|n| n.contains("perfect square")));

        // no quartic model at all
        let v = classify(&numerics(2, 4), &Evidence::GeneralOnQuartic).unwrap();
        assert_eq!(v.status, Status::Inconclusive);
    }

    #[test]
    fn scan_small_degrees() {
        assert!(irrational_ray_scan(2).is_err());
        assert!(irrational_ray_scan(3).unwrap().is_empty());

        let rows = irrational_ray_scan(15).unwrap();
        let pairs: Vec<(i64, i64)> = rows
            .iter()
            .map(|r| (r.numerics.g(), r.numerics.d()))
            .collect();
        for expected in [(3, 9), (7, 10), (15, 12), (23, 14)] {
            assert!(pairs.contains(&expected), "missing {expected:?}");
        }
        // raw scan is a strict superset of the catalog
        assert!(pairs.contains(&(2, 10)));
        assert!(pairs.contains(&(3, 10)));
        // (2, 9) fails: x^2 - 73 y^2 = -8 is solvable
        assert!(!pairs.contains(&(2, 9)));
        // ordering and determinism
        let mut sorted = pairs.clone();
        sorted.sort_by_key(|&(g, d)| (d, g));
        assert_eq!(
            pairs,
            sorted
                .iter()
                .map(|&(g, d)| (g, d))
                .collect::<Vec<_>>()
        );
    }

    #[test]
    fn scan_is_monotone_prefix() {
        let small = irrational_ray_scan(10).unwrap();
        let large = irrational_ray_scan(13).unwrap();
        assert_eq!(&large[..small.len()], &small[..]);
    }

    #[test]
    fn non_openness_both_branches() {
        let report = non_openness_witness(2, 5, 5, 5, true).unwrap();
        assert_eq!((report.linked.g(), report.linked.d()), (47, 20));
        let vg = report.very_general.unwrap();
        assert_eq!(vg.status, Status::NotMoriDream);
        assert!(vg
            .citations
            .contains(&citations::RIGID_LINKAGE_NEF_NOT_SEMIAMPLE));
        assert_eq!(report.special_locus.status, Status::MoriDream);
        assert!(report
            .special_locus
            .citations
            .contains(&citations::SEMIAMPLE_DEGENERATION));
    }

    #[test]
    fn non_openness_rejects_exceptional_pair() {
        assert!(matches!(
            non_openness_witness(3, 4, 6, 6, true),
            Err(ClassifyError::HypothesisFailure(_))
        ));
    }

    #[test]
    fn non_openness_line_residual_has_empty_obstruction_branch() {
        let report = non_openness_witness(0, 1, 4, 4, true).unwrap();
        assert_eq!((report.linked.g(), report.linked.d()), (28, 15));
        assert!(report.very_general.is_none());
        assert!(report.very_general_note.is_some());
        assert_eq!(report.special_locus.status, Status::MoriDream);
    }

    #[test]
    fn not_mds_verdicts_recheck() {
        // every negative verdict's certificates re-verify independently
        let v = classify(&numerics(15, 12), &Evidence::GeneralOnQuartic).unwrap();
        match &v.certificates {
            CertificateBundle::Quartic(c) => {
                assert!(!c.rational_outcome.solvable);
                match &c.rational_outcome.certificate {
                    cert @ pell::Certificate::ModulusSieve { .. } => {
                        assert!(pell::verify_sieve_certificate(cert));
                    }
                    other => panic!("expected a sieve certificate, got {other:?}"),
                }
                assert!(c.d_ge_16 || c.inequality_value <= 0);
            }
            other => panic!("expected quartic certificates, got {other:?}"),
        }
    }

    #[test]
    fn blowup_cones_match_scan_rows() {
        // every scan survivor with d <= 20 yields isotropic irrational rays
        for row in irrational_ray_scan(20).unwrap() {
            let ext = blowup::cones_extremal_surface(&row.numerics, 4).unwrap();
            assert!(ext.irrational);
            assert!(blowup::boundary_ray_isotropic(&row.numerics, &ext));
        }
    }
}
