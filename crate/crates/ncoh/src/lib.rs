//! Exact computation of ordinary and restricted low-degree cohomology for the
//! truncated maximal nilpotent subalgebras n+(A1^(1))(p) of the simplest
//! affine Lie algebra, over prime fields GF(p), together with the explicit
//! one-dimensional restricted central extensions the cohomology classifies.
//!
//! Everything is exact arithmetic over GF(p); there is no floating point
//! anywhere. The crate is organized along the pipeline:
//!
//! * [`fp`], [`matrix`]: prime-field scalars and dense linear algebra
//!   (row reduction, kernel bases, kernel-mod-image quotients).
//! * [`algebra`]: the algebra g(p), its bracket and grading, the family of
//!   restricted structures (mu, lambda), Jacobson terms, axiom verification.
//! * [`cochain`]: graded cochain spaces with lexicographic bases, the
//!   differentials d1 and d2 (two independent implementations), the
//!   distinguished cocycles phi_k, and the four-term row relations that
//!   assemble the d2 matrix.
//! * [`cohomology`]: ordinary H^1 and H^2, total and graded, with canonical
//!   representatives and closed-form expectations to check against.
//! * [`restricted`]: restricted cochains in (sigma, tau) coordinates, the
//!   induced maps completing the restricted differentials, brute-force
//!   evaluation of compatible maps, and restricted H^1 and H^2.
//! * [`extensions`]: construction and axiom-verification of the
//!   one-dimensional restricted central extensions, plus rendered summaries
//!   of their twisted brackets and p-maps.
//!
//! All operations are pure functions over immutable values and safe to call
//! concurrently.

pub mod algebra;
pub mod cochain;
pub mod cohomology;
pub mod extensions;
pub mod fp;
pub mod matrix;
pub mod report;
pub mod restricted;

pub use algebra::{
    bracket, center, jacobson_s, jacobson_terms, nfold_bracket, structure_constant,
    verify_lie_algebra, verify_restricted, AlgebraElement, AlgebraError, GAlgebra, LieAlgebra,
    RestrictedStructure, DEFAULT_SEED,
};
pub use cochain::{
    basic_equation_row, d1, d2, d2_closed_form, d_matrix, f_of, g_of, m_of, pair_basis,
    pair_basis_graded, pair_index, phi_k, s_of, triple_basis, triple_basis_graded, triple_index,
    Cochain1, Cochain2, Cochain3, CochainError, IndexHelpers,
};
pub use cohomology::{graded_kernel2, ordinary_h1, ordinary_h2, CohomologyReport, Representative};
pub use extensions::{
    build_extension, check_coboundary_shift_isomorphism, cocycle_for_label, render_extension_table,
    verify_extension, ExtElement, ExtensionAlgebra, ExtensionError, ExtensionRow, ExtensionTable,
};
pub use fp::{FieldError, Fp, Prime};
pub use matrix::{quotient_basis, FpMatrix, FpVec, LinalgError, Quotient};
pub use report::{AxiomCheck, TheoremCheck, VerificationReport};
pub use restricted::{
    d1_star, d2_star, d2_star_is_zero, d2_star_kernel_basis, ind1, ind2_matrix, omega_eval,
    restricted_h1, restricted_h2, tilde_closed_form, tilde_eval_bruteforce, CocycleLabel,
    EvalMethod, RestrictedCochain2, RestrictedError, RestrictedH2Report, StructureRegime, TildeTag,
    DEFAULT_BRUTEFORCE_CAP,
};
