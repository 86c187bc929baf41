//! Explicit a-priori bounds on the non-real (and exceptional real) eigenvalues of
//! regular indefinite Sturm-Liouville problems
//!
//! ```text
//!     -(p f')' + q f = lambda w f    on (a, b),
//! ```
//!
//! where `1/p`, `q`, `w` are integrable, `p > 0` and the weight `w` changes sign.
//! The library computes the bound constants from the coefficients and the
//! selfadjoint boundary conditions, constructs or validates the auxiliary
//! function `g` entering the bounds, and backs everything with a finite-element
//! eigensolver so that every bound and inequality can be checked numerically on
//! the computed spectrum.
//!
//! Modules:
//! - [`coeffs`]: coefficient functions, quadrature, weighted norms, turning
//!   points and sublevel-set measures;
//! - [`domains`]: selfadjoint boundary conditions, the boundary constant
//!   `c(D)` and the boundary-form inequality;
//! - [`bounds`]: the constants `alpha`, `beta`, `gamma`, `delta`, the
//!   admissible function `g`, the epsilon search and all bound variants;
//! - [`eigensolve`]: finite-element discretization, dense pencil solves,
//!   eigenvalue classification and the verification checks.

extern crate openblas_src;

pub mod bounds;
pub mod coeffs;
pub mod domains;
pub mod eigensolve;
mod error;

pub use bounds::{
    best_bounds, bound_exceptional, bounds_alpha_delta, bounds_alpha_delta_ftp, bounds_beta_gamma,
    bounds_beta_gamma_ftp, compute_constants, construct_g_ftp, find_eps, lift_g_endpoints,
    validate_g, AdmissibleG, BoundConstants, BoundReport, BoundVariant, EpsSelection, GDiagnostics,
    GProvenance, MeasureKind,
};
pub use coeffs::{
    integrate, norms, sublevel_measure, turning_points, weighted_l2_norm, Coefficients, Fn1D,
    FnKind, Interval, MeasureWeight, QuadSettings, TurningPoints, WeightedNorms, WeightPower,
};
pub use domains::{
    boundary_form, c_of_domain, check_lemma_2_1, constrain_pencil, BoundaryCheck, BoundaryParam,
    BoundaryTrace, ConstrainedPencil, DofLayout, SelfadjointDomain,
};
pub use eigensolve::{
    discretize, lemma_norm_checks, mesh_converge, refine_eigenpair, residual_identity_check,
    solve_pencil, verify_bounds, BoundVerdict, ClassifySettings, DiscreteProblem, EigenClass,
    EigenPair, IdentityReport, LemmaReport, Pencil, RawPair, SolveMethod, Spectrum,
};
pub use error::{CoreError, Result};
