// Copyright 2026 The torus-weyl Authors
// SPDX-License-Identifier: Apache-2.0

//! Weyl quantization on the torus phase space `T² = ℝ²/ℤ²` with Hilbert space
//! `ℂ^N` and Planck constant `h = 1/N`.
//!
//! * [`rep`]: the representations `T_{θ,N}` of the discrete Heisenberg group.
//! * [`symbols`]: trigonometric polynomials, lattice samplings and the fold `Δ`.
//! * [`quantize`]: `Op^W_{θ,N}` by the Fourier and the matrix-element routes.
//! * [`wigner`]: discrete Wigner tables, marginals and the pairing identity.
//! * [`dequantize`]: canonical symbols and the Pauli dictionaries.
//! * [`moyal`]: Moyal product/bracket, semiclassical residuals and dynamics.
//! * [`io`] and [`cli`]: JSON/CSV interchange and the command-line front end.
//! * [`acceptance`]: the randomized end-to-end checks run by `selftest`.

pub mod acceptance;
pub mod cli;
pub mod dequantize;
pub mod error;
pub mod io;
pub mod moyal;
mod numeric;
pub mod quantize;
pub mod rep;
pub mod symbols;
pub mod wigner;

pub use error::{Error, Result};
pub use numeric::{max_abs, max_abs_diff, rank};
pub use rep::{Operator, Representation, State};
pub use symbols::{ReducedSymbol, SampledSymbol, TrigPolynomial};
pub use wigner::{WignerKind, WignerTable};

pub use num_complex::Complex64;
