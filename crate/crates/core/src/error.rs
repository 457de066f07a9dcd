// Copyright 2026 The torus-weyl Authors
// SPDX-License-Identifier: Apache-2.0

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension must be at least 1")]
    ZeroDimension,

    #[error("theta must be finite, got ({0}, {1})")]
    NonFiniteTheta(f64, f64),

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("grid shape {rows}x{cols} does not match the lattice side {side}")]
    GridShape {
        rows: usize,
        cols: usize,
        side: usize,
    },

    #[error("symbols belong to different representations")]
    RepresentationMismatch,

    #[error("index ({r}, {s}) out of range for N = {dim}")]
    IndexOutOfRange { r: usize, s: usize, dim: usize },

    #[error("non-finite value at lattice point ({0}, {1})")]
    NonFinite(usize, usize),

    #[error("Hamiltonian grid is not real: max |imag| = {0:e}")]
    NonRealHamiltonian(f64),

    #[error("operator is not square: {0} entries for N = {1}")]
    NonSquare(usize, usize),

    #[error("step count must be at least 1")]
    ZeroSteps,

    #[error("malformed input: {0}")]
    Parse(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
