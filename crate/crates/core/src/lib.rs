//! Symmetry classes of SO(3) and O(3) representations.
//!
//! A representation given as a sum of harmonic irreducibles has finitely
//! many isotropy classes. They are obtained by combining the classes of the
//! summands with the clips operation, whose tables live in [`clips`]. The
//! [`oracle`] module checks those tables against explicit matrix groups.

pub mod clips;
pub mod groups;
pub mod irreps;
pub mod oracle;
pub mod symmetry;

pub use clips::{
    clips_pair, clips_params, clips_rule, clips_sets, ClipsError, ClipsParameters, ClipsRuleOutcome,
};
pub use groups::{
    hasse, is_leq, ClassError, ClassSet, GroupContext, HasseEdges, ProperClass, SubgroupClass,
    SubgroupType,
};
pub use irreps::{
    alt_square, isotropy_irrep_o3, isotropy_irrep_so3, sym_square, tensor_product, HarmonicLabel,
    HarmonicSum, IrrepError,
};
pub use oracle::{
    classify, intersect, realize, verify_clips, verify_clips_standard, AxisFrame, ElementMatrix,
    MatrixGroup, OracleError, Verdict, VerificationReport,
};
pub use symmetry::{isotropy_classes, minus_one_action, MinusOneAction, RepSpec, SymmetryError};
