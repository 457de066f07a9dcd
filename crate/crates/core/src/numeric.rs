// Copyright 2026 The torus-weyl Authors
// SPDX-License-Identifier: Apache-2.0

//! Small numerical helpers shared by the phase-space modules.

use nalgebra::DMatrix;
use num_complex::Complex64;
use std::f64::consts::PI;

/// Table of the `2N`-th roots of unity `e^{iπk/N}`, indexed by `k mod 2N`.
///
/// Every lattice phase in the library is of the form `e^{±iπ k/N}` for an
/// integer `k`, so reducing `k` exactly in integer arithmetic and looking the
/// phase up keeps all kernels at machine precision regardless of `k`. The
/// second half is the exact negation of the first, so sign identities such
/// as `e^{iπ(k+N)/N} = −e^{iπk/N}` hold bit for bit.
#[derive(Debug, Clone)]
pub(crate) struct HalfRoots {
    period: i64,
    table: Vec<Complex64>,
}

impl HalfRoots {
    pub(crate) fn new(dim: usize) -> Self {
        let period = 2 * dim as i64;
        let mut table: Vec<Complex64> = (0..dim)
            .map(|k| {
                if 2 * k == dim {
                    Complex64::new(0.0, 1.0)
                } else {
                    Complex64::from_polar(1.0, PI * k as f64 / dim as f64)
                }
            })
            .collect();
        table.extend_from_within(..);
        table[dim..].iter_mut().for_each(|z| *z = -*z);
        Self { period, table }
    }

    /// `e^{iπk/N}`.
    #[inline]
    pub(crate) fn get(&self, k: i64) -> Complex64 {
        self.table[k.rem_euclid(self.period) as usize]
    }
}

#[inline]
pub(crate) fn wrap(i: i64, n: usize) -> usize {
    i.rem_euclid(n as i64) as usize
}

/// `(-1)^k` for any integer `k`.
#[inline]
pub(crate) fn parity_sign(k: i64) -> f64 {
    if k.rem_euclid(2) == 0 {
        1.0
    } else {
        -1.0
    }
}

/// Largest entrywise modulus of `a - b`. Shapes must agree.
pub fn max_abs_diff(a: &DMatrix<Complex64>, b: &DMatrix<Complex64>) -> f64 {
    assert_eq!(a.shape(), b.shape(), "max_abs_diff: shape mismatch");
    a.iter()
        .zip(b.iter())
        .map(|(x, y)| (x - y).norm())
        .fold(0.0, f64::max)
}

/// Largest entrywise modulus.
pub fn max_abs(a: &DMatrix<Complex64>) -> f64 {
    a.iter().map(|x| x.norm()).fold(0.0, f64::max)
}

/// Numerical rank from the singular values, relative cutoff `rtol`.
pub fn rank(a: &DMatrix<Complex64>, rtol: f64) -> usize {
    if a.is_empty() {
        return 0;
    }
    let sv = a.clone().svd(false, false).singular_values;
    let top = sv.iter().cloned().fold(0.0, f64::max);
    if top == 0.0 {
        return 0;
    }
    sv.iter().filter(|&&s| s > rtol * top).count()
}
