//! Nonparametric regression with the Nadaraya-Watson estimator indexed by a
//! positive semidefinite bandwidth matrix.
//!
//! The estimator predicts `psi_H(x) = sum_i w_i(x) Y_i` with softmax weights
//! derived from `exp(-(X_i - x)' H (X_i - x))`, where `H` is a symmetric PSD
//! `p x p` matrix. A rank-deficient `H` ignores directions in its null space,
//! which lets the estimator exploit low-dimensional (single- or multi-index)
//! structure in the regression function.
//!
//! `H` is selected by minimizing a K-fold cross-validation criterion over a
//! Frobenius ball of PSD matrices, using gradient descent in a factor
//! parameterization with Armijo backtracking ([`cv::optimize_bandwidth`]).
//!
//! The crate is organized around the pipeline:
//!
//! * [`psd`] — symmetric PSD bandwidth matrices, half-vectorization, and
//!   projection onto the feasible set (PSD cone intersected with a ball).
//! * [`kernel`] — the estimator itself plus the squared-loss gradient with
//!   respect to the bandwidth.
//! * [`cv`] — fold plans, the CV criterion/gradient, scalar grid search, and
//!   the bandwidth optimizer.
//! * [`theory`] — computable constants from the oracle inequality and the
//!   bandwidth/radius schedules, plus an empirical rate-slope estimator.
//! * [`sim`] — single-/two-index simulation designs, oracle comparator, and
//!   the replication/RMSE protocol.
//! * [`bench`] — CSV ingestion, preprocessing (standardization and dummy
//!   coding), an OLS baseline, and the 4-way outer-split benchmark.
//! * [`report`] — RMSE tables with confidence intervals, serializable as CSV
//!   and JSON with embedded configuration for exact reruns.

pub mod bench;
pub mod cv;
pub mod error;
pub mod kernel;
pub mod psd;
pub mod report;
pub mod sim;
pub mod theory;

pub use error::{Error, Result};
pub use kernel::{Dataset, KernelFit};
pub use psd::{FeasibleSet, SymmetricBandwidth};
