//! Exact symbolic engine for the diagrammatic centralizer algebras of the
//! classical and e6/e7 exceptional Lie-algebra series.
//!
//! The crate constructs birdtrack diagram algebras `End(V⊗p)` for the
//! `su`, `so`, `sp`, `e6` and `e7` families, builds the associated rational
//! R-matrices, and verifies the Yang-Baxter equation as an identity of
//! rational functions in `Q(m, u, v)`. A floating-point (and small-case
//! exact) tensor layer provides independent numeric oracles from explicit
//! division-algebra realizations.
//!
//! Layering, bottom up:
//!
//! * [`ratfunc`] — the exact scalar field `Q(m, u, v)`;
//! * [`diagram`] — decorated wiring graphs, canonical forms and the local
//!   rewrite system (loop values, symplectic arrows, cubic/quartic vertices);
//! * [`centralizer`] — bases, reduction tables and structure constants of
//!   the centralizer algebras at two and three strands;
//! * [`rmatrix`] — R-matrix construction, spectral checks and exact
//!   Yang-Baxter residuals;
//! * [`numeric`] — dense tensors over `f64` or exact rationals realizing
//!   the same identities for concrete division-algebra dimensions.

pub mod centralizer;
pub mod diagram;
pub mod linalg;
pub mod numeric;
pub mod ratfunc;
pub mod rmatrix;

/// The exact scalar type of every symbolic algebra in the crate.
pub type Coeff = ratfunc::RationalFunc;

/// Exact rational scalar used by the small-case numeric oracles.
pub type Rational = num_rational::BigRational;

/// Dense numeric tensor over `f64` (the default oracle precision).
pub type Tensor64 = numeric::Tensor<f64>;

/// Dense numeric tensor over exact rationals (the `m = 1` gold oracle).
pub type TensorQ = numeric::Tensor<Rational>;
