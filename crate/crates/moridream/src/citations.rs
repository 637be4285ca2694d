//! Stable identifiers for the criteria a verdict can rest on.
//!
//! Reports quote these names so that downstream consumers can branch on the
//! exact criterion that produced a verdict without string-matching prose.

/// Blowups of complete and almost complete intersections are Mori Dream
/// Spaces.
pub const ACI_MDS: &str = "aci-mds";

/// Blowups of curves on surfaces of degree at most 3 are Mori Dream Spaces.
pub const LOW_DEGREE_SURFACE_MDS: &str = "low-degree-surface-mds";

/// Unsolvable Pell pair on a quartic of Picard rank 2 forces an irrational
/// extremal ray of the movable cone; the blowup is not a Mori Dream Space.
pub const QUARTIC_IRRATIONAL_RAY: &str = "quartic-irrational-ray";

/// A very general curve obtained by super-rigid linkage carries a nef,
/// non-semiample divisor; the blowup is not a Mori Dream Space.
pub const RIGID_LINKAGE_NEF_NOT_SEMIAMPLE: &str = "rigid-linkage-nef-not-semiample";

/// Q-canonical residuals make every extremal ray met by the second-surface
/// contraction contractible.
pub const QCANONICAL_POTENTIALLY_CONTRACTIBLE: &str = "qcanonical-potentially-contractible";

/// Potential contractibility of every residual component upgrades a rigid
/// skew linkage to a Mori Dream Space.
pub const POTENTIAL_CONTRACTIBILITY_MDS: &str = "potential-contractibility-mds";

/// The Q-canonical specialization inside the closure of the very general
/// locus is a Mori Dream Space: Mori dreamness is not open in families.
pub const SEMIAMPLE_DEGENERATION: &str = "semiample-degeneration";

/// Locus of curves on smooth quartics as an irreducible Hilbert-scheme
/// component of dimension 33 + g.
pub const QUARTIC_COMPONENT: &str = "quartic-component";

/// Curves on smooth quadrics; component test for the bidegree family.
pub const QUADRIC_FAMILY: &str = "quadric-family";

/// Curves on smooth cubics; component test for the type septuple.
pub const CUBIC_FAMILY: &str = "cubic-family";
