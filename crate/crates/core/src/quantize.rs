// Copyright 2026 The torus-weyl Authors
// SPDX-License-Identifier: Apache-2.0

//! Weyl quantization `Op^W_{θ,N}`.
//!
//! Two independent routes are provided: the Fourier route sums
//! `α̂(n)·T_{θ,N}(n)` over the coefficients of a trigonometric polynomial, and
//! the sampled route builds each matrix element from the `2N`-point DFT of
//! the lattice values in the momentum direction. They agree on every
//! trigonometric polynomial; only the sampled route accepts arbitrary grids.

use crate::numeric::{parity_sign, wrap, HalfRoots};
use crate::rep::{heisenberg, Operator, Representation};
use crate::symbols::{ReducedSymbol, SampledSymbol, TrigPolynomial};
use nalgebra::DMatrix;
use num_complex::Complex64;

/// `Σ α̂(n₁, n₂) T_{θ,N}(n₁, n₂)` over the stored coefficients.
pub fn quantize_fourier(tp: &TrigPolynomial, rep: &Representation) -> Operator {
    tp.terms()
        .fold(Operator::zeros(rep.dim()), |acc, ((n1, n2), amp)| {
            &acc + &heisenberg(rep, n1, n2).scale(amp)
        })
}

/// `F₂β(m, r) = Σ_l β(m, l) e^{−2πirl/2N}`, unnormalized, by direct summation.
pub(crate) fn momentum_dft(grid: &DMatrix<Complex64>, roots: &HalfRoots) -> DMatrix<Complex64> {
    let side = grid.nrows();
    DMatrix::from_fn(side, side, |m, r| {
        (0..side)
            .map(|l| grid[(m, l)] * roots.get(-((r * l) as i64)))
            .sum()
    })
}

/// Matrix elements
/// `⟨u_n, Op u_j⟩ = (1/2N)[F₂α(j+n, j−n) + F₂α(j+n+N, j−n+N)]`, indices mod `2N`.
pub fn quantize_sampled(sym: &SampledSymbol) -> Operator {
    let n = sym.rep().dim();
    let side = 2 * n;
    let roots = HalfRoots::new(n);
    let f2 = momentum_dft(sym.grid(), &roots);
    let norm = 1.0 / side as f64;
    Operator::from_fn(n, |row, col| {
        let (a, b) = (col + row, col as i64 - row as i64);
        let first = f2[(a % side, wrap(b, side))];
        let second = f2[((a + n) % side, wrap(b + n as i64, side))];
        (first + second) * norm
    })
}

/// Entrywise conjugate; its quantization is the adjoint of the original's.
pub fn adjoint_symbol(sym: &SampledSymbol) -> SampledSymbol {
    sym.map(|z| z.conj())
}

/// Rebuilds the operator from `𝒜 = Δ(μ(α))`:
/// `A_{m,l} = (1/2N) Σ_{s<N} 𝒜_{m+l,s} e^{πis(m−l)/N}`.
///
/// The row index `m+l` lives in `ℤ_{2N}`; for `m+l ≥ N` the row is read
/// through the fold's sign rule `𝒜_{j+N,s} = (−1)^s 𝒜_{j,s}`.
pub fn operator_from_reduced(red: &ReducedSymbol) -> Operator {
    let n = red.dim();
    let roots = HalfRoots::new(n);
    let g = red.grid();
    let norm = 1.0 / (2 * n) as f64;
    Operator::from_fn(n, |m, l| {
        let row = m + l;
        let diff = m as i64 - l as i64;
        (0..n)
            .map(|s| {
                let entry = if row < n {
                    g[(row, s)]
                } else {
                    g[(row - n, s)] * parity_sign(s as i64)
                };
                entry * roots.get(s as i64 * diff)
            })
            .sum::<Complex64>()
            * norm
    })
}
