//! Exact canonical-dimension computations for highest weight modules.
//!
//! The crate computes Gelfand-Kirillov (canonical) dimensions of locally
//! analytic representations through the combinatorics they reduce to:
//!
//! * [`rootdata`] — split root data (A..G series and `GL_n`) with exact
//!   rational pairings, rho, dominance predicates and the normalizing
//!   coweight `t`;
//! * [`weyl`] — Weyl group enumeration, Bruhat order, dot action and
//!   maximal-length coset representatives;
//! * [`kl`] — Kazhdan-Lusztig polynomials with memoization, an independent
//!   Hecke-algebra oracle, inverse evaluation matrices and a persistent
//!   line-oriented cache format;
//! * [`goldie`] — multiplicity inversion rows `a(w, w')`, Goldie-rank
//!   polynomial degrees `m_w` by exact multinomial expansion, and
//!   `dim L(w . mu) = #Phi+ - m_w`;
//! * [`dimcalc`] — parabolic-induction dimensions, dimension bounds, the
//!   GL2 trianguline principal series answer, and the Drinfeld half-space
//!   pipeline.
//!
//! Everything is exact: weights are `BigRational` vectors, polynomial
//! coefficients are big integers, and no floating point exists anywhere.

pub mod dimcalc;
pub mod error;
pub mod goldie;
pub mod kl;
pub mod rootdata;
pub mod weyl;

pub use dimcalc::{
    dim_bounds, dim_parabolic_induction, drinfeld_dim, drinfeld_i0, drinfeld_weights, drinfeld_z,
    gl2_trianguline_dim, BoundsReport, DrinfeldReport, DrinfeldStep, PipelineConfig,
    TriangulineCase, TriangulineReport, TrianguParam, ZPairing,
};
pub use error::{Error, Result};
pub use goldie::{
    a_coeffs, dim_simple_hw, goldie_degree, goldie_degree_with_t, ACoeffRow, GoldieCertificate,
    GoldieReport,
};
pub use kl::{hecke_oracle, inverse_kl_row, kl_poly, KLPolynomial, KlEngine};
pub use rootdata::{
    build_root_datum, build_root_datum_with_cap, Fingerprint, Orientation, Rat, Root, RootDatum,
    Series, Weight, DEFAULT_WEYL_CAP,
};
pub use weyl::{
    bruhat_leq, dominant_conjugate, dot_apply, enumerate_group, longest_element, CosetData,
    WeylElement,
};
