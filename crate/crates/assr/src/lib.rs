//! Classification of rectangular matrices by staircase structure and minor
//! signs, with exact rational arithmetic, plus structural analysis of their
//! QR factorization.
//!
//! The library answers three kinds of questions about a dense `m x n`
//! matrix of maximal rank:
//!
//! - **Structure**: is it a type-I or type-II staircase matrix, and which
//!   index sets describe its zero pattern? ([`staircase`])
//! - **Sign regularity**: is it SR, TP, or ASSR, with which signature — by
//!   exhaustive minor enumeration or by the reduced consecutive-minor
//!   characterization, both over exact rationals? ([`classify`], [`minors`])
//! - **Factorization**: does its modified Gram-Schmidt QR factorization
//!   exhibit the predicted structure (`R` totally positive, column boundary
//!   minors transferring to `Q` with signed values)? ([`qr`])
//!
//! Heavy minor scans run data-parallel via rayon when the default
//! `parallel` feature is enabled; disabling it falls back to the sequential
//! kernels with identical results, including witness selection.
//!
//! ```
//! use assr::{classification_report, AssrMode, RationalMatrix, DEFAULT_BUDGET};
//!
//! let a = RationalMatrix::from_i64_rows(&[
//!     &[1, 1, 0],
//!     &[1, 2, 1],
//!     &[0, 1, 2],
//! ]);
//! let report = classification_report(&a, AssrMode::Reduced, DEFAULT_BUDGET).unwrap();
//! assert!(report.is_tp);
//! assert_eq!(report.signature.unwrap().to_string(), "(1, 1, 1)");
//! ```

pub mod classify;
pub mod error;
pub mod io;
pub mod matrix;
pub mod minors;
pub mod qr;
pub mod rational;
pub mod scan;
pub mod seq;
pub mod staircase;
pub mod testgen;

pub use classify::{
    check_signature_constraint, check_submatrix_inheritance, classification_report, compute_h,
    exact_rank, is_assr_full, is_assr_reduced, is_sr, is_tp, AssrMode, ClassificationReport,
    SignatureVerdict, Witness, WitnessReason,
};
pub use error::{Error, Result};
pub use matrix::{RationalMatrix, RealMatrix};
pub use minors::{
    classify_boundary, det_exact, enumerate_minors, enumerate_nontrivial_minors, is_nontrivial,
    laplace_det, minor, BoundaryKind, MinorItem, MinorQuery, DEFAULT_BUDGET,
};
pub use qr::{
    cauchy_binet_residual, check_boundary_transfer, mgs_qr, verify_orthonormal, verify_r_tp,
    BoundarySignReport, QRPair,
};
pub use rational::{format_rational, parse_rational, Rat};
pub use seq::{enumerate_sequences, IndexSequence, Sign, Signature};
pub use staircase::{
    index_it_hat, index_jt, is_type1_staircase, is_type2_staircase, staircase_type, zero_pattern,
    StaircaseType, ZeroPattern,
};
pub use testgen::{fixture, generate, sign_transform, GenKind, GenSpec, SignTransform, SplitMix64};
