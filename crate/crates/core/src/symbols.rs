// Copyright 2026 The torus-weyl Authors
// SPDX-License-Identifier: Apache-2.0

//! Classical symbols on the torus: closed-form trigonometric polynomials,
//! their samplings on the lattice `L(θ,N)`, and the four-term fold `Δ` that
//! characterizes when two samplings quantize to the same operator.
//!
//! Grids are indexed `(r, s)` with `r` the position direction and `s` the
//! momentum direction, both read mod `2N`.

use crate::error::{Error, Result};
use crate::numeric::{max_abs, parity_sign, wrap};
use crate::rep::Representation;
use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeMap;
use std::f64::consts::PI;

/// Default tolerance of [`equivalent_default`], relative to the grid scale.
pub const DEFAULT_EQUIV_TOL: f64 = 1e-10;

/// Finite Fourier series `α(x, p) = Σ α̂(n₁, n₂) e^{2πi(n₁x + n₂p)}`.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct TrigPolynomial {
    coeffs: BTreeMap<(i64, i64), Complex64>,
}

impl TrigPolynomial {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn constant(c: Complex64) -> Self {
        Self::monomial(0, 0, c)
    }

    /// `amp · e^{2πi(n₁x + n₂p)}`.
    pub fn monomial(n1: i64, n2: i64, amp: Complex64) -> Self {
        let mut tp = Self::new();
        tp.add_term(n1, n2, amp);
        tp
    }

    /// Adds `amp` to the coefficient at `(n₁, n₂)`.
    pub fn add_term(&mut self, n1: i64, n2: i64, amp: Complex64) {
        *self.coeffs.entry((n1, n2)).or_default() += amp;
    }

    pub fn with_term(mut self, n1: i64, n2: i64, amp: Complex64) -> Self {
        self.add_term(n1, n2, amp);
        self
    }

    pub fn coefficient(&self, n1: i64, n2: i64) -> Complex64 {
        self.coeffs.get(&(n1, n2)).copied().unwrap_or_default()
    }

    /// Stored `((n₁, n₂), α̂)` pairs in frequency order.
    pub fn terms(&self) -> impl Iterator<Item = ((i64, i64), Complex64)> + '_ {
        self.coeffs.iter().map(|(&k, &v)| (k, v))
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Drops coefficients with modulus `<= tol`.
    pub fn pruned(mut self, tol: f64) -> Self {
        self.coeffs.retain(|_, v| v.norm() > tol);
        self
    }

    pub fn scaled(&self, c: Complex64) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|(&k, &v)| (k, v * c)).collect(),
        }
    }

    pub fn conj(&self) -> Self {
        Self {
            coeffs: self
                .coeffs
                .iter()
                .map(|(&(a, b), &v)| ((-a, -b), v.conj()))
                .collect(),
        }
    }

    /// Exact finite sum at `(x mod 1, p mod 1)`.
    pub fn evaluate(&self, x: f64, p: f64) -> Complex64 {
        let (x, p) = (x.rem_euclid(1.0), p.rem_euclid(1.0));
        self.coeffs
            .iter()
            .map(|(&(n1, n2), &amp)| {
                amp * Complex64::from_polar(1.0, 2.0 * PI * (n1 as f64 * x + n2 as f64 * p))
            })
            .sum()
    }
}

/// Values of a symbol on the `2N × 2N` lattice `L(θ,N)`.
#[derive(Debug, Clone, PartialEq)]
pub struct SampledSymbol {
    rep: Representation,
    grid: DMatrix<Complex64>,
}

impl SampledSymbol {
    pub fn new(rep: Representation, grid: DMatrix<Complex64>) -> Result<Self> {
        let side = rep.side();
        if grid.nrows() != side || grid.ncols() != side {
            return Err(Error::GridShape {
                rows: grid.nrows(),
                cols: grid.ncols(),
                side,
            });
        }
        for r in 0..side {
            for s in 0..side {
                let z = grid[(r, s)];
                if !z.re.is_finite() || !z.im.is_finite() {
                    return Err(Error::NonFinite(r, s));
                }
            }
        }
        Ok(Self { rep, grid })
    }

    pub fn from_fn(rep: Representation, f: impl FnMut(usize, usize) -> Complex64) -> Result<Self> {
        let side = rep.side();
        Self::new(rep, DMatrix::from_fn(side, side, f))
    }

    pub fn constant(rep: Representation, c: Complex64) -> Self {
        let side = rep.side();
        Self {
            rep,
            grid: DMatrix::from_element(side, side, c),
        }
    }

    pub fn zeros(rep: Representation) -> Self {
        Self::constant(rep, Complex64::default())
    }

    /// Uniform random entries with real and imaginary parts in `[-1, 1)`.
    pub fn random<R: Rng>(rep: Representation, rng: &mut R) -> Self {
        let side = rep.side();
        let grid = DMatrix::from_fn(side, side, |_, _| {
            Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0))
        });
        Self { rep, grid }
    }

    pub fn rep(&self) -> &Representation {
        &self.rep
    }

    pub fn grid(&self) -> &DMatrix<Complex64> {
        &self.grid
    }

    pub fn into_grid(self) -> DMatrix<Complex64> {
        self.grid
    }

    /// Value at lattice point `(r mod 2N, s mod 2N)`.
    pub fn at(&self, r: i64, s: i64) -> Complex64 {
        let side = self.rep.side();
        self.grid[(wrap(r, side), wrap(s, side))]
    }

    /// Same values viewed as a sampling on a different lattice of equal size.
    pub fn with_rep(&self, rep: Representation) -> Result<Self> {
        Self::new(rep, self.grid.clone())
    }

    pub fn map(&self, f: impl Fn(Complex64) -> Complex64) -> Self {
        Self {
            rep: self.rep,
            grid: self.grid.map(f),
        }
    }

    /// `λ·self + other`.
    pub fn axpy(&self, lambda: Complex64, other: &SampledSymbol) -> Result<Self> {
        self.ensure_same_rep(other)?;
        Ok(Self {
            rep: self.rep,
            grid: &self.grid * lambda + &other.grid,
        })
    }

    pub fn add(&self, other: &SampledSymbol) -> Result<Self> {
        self.axpy(Complex64::new(1.0, 0.0), other)
    }

    pub fn sub(&self, other: &SampledSymbol) -> Result<Self> {
        other.axpy(Complex64::new(-1.0, 0.0), self)
    }

    pub fn max_abs_diff(&self, other: &SampledSymbol) -> f64 {
        crate::numeric::max_abs_diff(&self.grid, &other.grid)
    }

    pub(crate) fn ensure_same_rep(&self, other: &SampledSymbol) -> Result<()> {
        if self.rep != other.rep {
            return Err(Error::RepresentationMismatch);
        }
        Ok(())
    }
}

/// The `N × N` image `Δ(μ_{θ,N}(α))` of a sampling.
#[derive(Debug, Clone, PartialEq)]
pub struct ReducedSymbol {
    grid: DMatrix<Complex64>,
}

impl ReducedSymbol {
    pub fn new(grid: DMatrix<Complex64>) -> Result<Self> {
        if grid.nrows() != grid.ncols() {
            return Err(Error::NonSquare(grid.len(), grid.nrows()));
        }
        if grid.nrows() == 0 {
            return Err(Error::ZeroDimension);
        }
        Ok(Self { grid })
    }

    pub fn dim(&self) -> usize {
        self.grid.nrows()
    }

    pub fn grid(&self) -> &DMatrix<Complex64> {
        &self.grid
    }

    pub fn max_abs_diff(&self, other: &ReducedSymbol) -> f64 {
        crate::numeric::max_abs_diff(&self.grid, &other.grid)
    }
}

/// `μ_{θ,N}(α)`: evaluate at `(r/2N + θ₁/N, s/2N + θ₂/N)` for `r, s < 2N`.
pub fn sample(tp: &TrigPolynomial, rep: &Representation) -> SampledSymbol {
    let side = rep.side();
    let grid = DMatrix::from_fn(side, side, |r, s| {
        let (x, p) = rep.lattice_point(r, s);
        tp.evaluate(x, p)
    });
    SampledSymbol { rep: *rep, grid }
}

/// The three shifted terms of the fold at `(j, k)`. Shared by [`delta`] and
/// [`kernel_element`] so that kernel elements fold to exactly zero.
fn fold_tail(g: &DMatrix<Complex64>, n: usize, j: usize, k: usize) -> Complex64 {
    let (ji, ki, ni) = (j as i64, k as i64, n as i64);
    g[(j + n, k)] * parity_sign(ki)
        + g[(j, k + n)] * parity_sign(ji)
        + g[(j + n, k + n)] * parity_sign(ji + ki + ni)
}

/// `Δ(A)_{j,k} = A_{j,k} + (−1)^k A_{j+N,k} + (−1)^j A_{j,k+N} + (−1)^{j+k+N} A_{j+N,k+N}`
/// on a raw `2N × 2N` grid.
pub fn delta_grid(g: &DMatrix<Complex64>) -> DMatrix<Complex64> {
    assert!(
        g.nrows() == g.ncols() && g.nrows().is_multiple_of(2),
        "delta_grid needs an even square grid"
    );
    let n = g.nrows() / 2;
    DMatrix::from_fn(n, n, |j, k| g[(j, k)] + fold_tail(g, n, j, k))
}

pub fn delta(sym: &SampledSymbol) -> ReducedSymbol {
    ReducedSymbol {
        grid: delta_grid(&sym.grid),
    }
}

/// Two samplings quantize to the same operator iff their folds agree;
/// compares with absolute tolerance `tol`.
pub fn equivalent(a: &SampledSymbol, b: &SampledSymbol, tol: f64) -> Result<bool> {
    a.ensure_same_rep(b)?;
    Ok(delta(a).max_abs_diff(&delta(b)) <= tol)
}

/// [`equivalent`] at `1e-10 · max(1, largest grid modulus)`.
pub fn equivalent_default(a: &SampledSymbol, b: &SampledSymbol) -> Result<bool> {
    let scale = max_abs(&a.grid).max(max_abs(&b.grid)).max(1.0);
    equivalent(a, b, DEFAULT_EQUIV_TOL * scale)
}

/// A pseudo-random element of `Ker Δ`: the three off-principal blocks are
/// drawn from `seed` and the principal block is solved for. Seed `0` gives
/// the zero grid.
pub fn kernel_element(rep: &Representation, seed: u64) -> SampledSymbol {
    if seed == 0 {
        return SampledSymbol::zeros(*rep);
    }
    let n = rep.dim();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = DMatrix::from_fn(rep.side(), rep.side(), |_, _| {
        Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0))
    });
    for j in 0..n {
        for k in 0..n {
            g[(j, k)] = -fold_tail(&g, n, j, k);
        }
    }
    SampledSymbol { rep: *rep, grid: g }
}

/// Extends an `N × N` block to a `2N × 2N` grid obeying
/// `g(m+N, l) = (−1)^l g(m, l)`, `g(m, l+N) = (−1)^m g(m, l)` and
/// `g(m+N, l+N) = (−1)^{m+l+N} g(m, l)`.
pub fn symmetric_extension(block: &DMatrix<Complex64>) -> DMatrix<Complex64> {
    let n = block.nrows();
    DMatrix::from_fn(2 * n, 2 * n, |r, s| {
        let (m, l) = (r % n, s % n);
        let sign = match (r >= n, s >= n) {
            (false, false) => 1.0,
            (true, false) => parity_sign(l as i64),
            (false, true) => parity_sign(m as i64),
            (true, true) => parity_sign((m + l + n) as i64),
        };
        block[(m, l)] * sign
    })
}

/// Matrix of `Δ` as a linear map `ℂ^{4N²} → ℂ^{N²}` (row-major flattening on
/// both sides).
pub fn delta_map_matrix(dim: usize) -> DMatrix<Complex64> {
    let side = 2 * dim;
    let mut m = DMatrix::zeros(dim * dim, side * side);
    let mut unit = DMatrix::zeros(side, side);
    for r in 0..side {
        for s in 0..side {
            unit[(r, s)] = Complex64::new(1.0, 0.0);
            let image = delta_grid(&unit);
            for j in 0..dim {
                for k in 0..dim {
                    m[(j * dim + k, r * side + s)] = image[(j, k)];
                }
            }
            unit[(r, s)] = Complex64::default();
        }
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::rank;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn evaluate_examples() {
        assert_eq!(
            TrigPolynomial::constant(c(1.0, 0.0)).evaluate(0.3, 0.9),
            c(1.0, 0.0)
        );
        let e = TrigPolynomial::monomial(1, 0, c(1.0, 0.0)).evaluate(0.25, 0.6);
        assert!((e - c(0.0, 1.0)).norm() < 1e-15);
        let cosine = TrigPolynomial::monomial(1, 0, c(1.0, 0.0)).with_term(-1, 0, c(1.0, 0.0));
        assert!((cosine.evaluate(1.0 / 3.0, 0.0) - c(-1.0, 0.0)).norm() < 1e-14);
    }

    #[test]
    fn sample_of_x_harmonic_at_n1() {
        let rep = Representation::untwisted(1).unwrap();
        let g = sample(&TrigPolynomial::monomial(1, 0, c(1.0, 0.0)), &rep);
        let expected = DMatrix::from_row_slice(
            2,
            2,
            &[c(1.0, 0.0), c(1.0, 0.0), c(-1.0, 0.0), c(-1.0, 0.0)],
        );
        assert!(crate::numeric::max_abs_diff(g.grid(), &expected) < 1e-15);
    }

    #[test]
    fn constant_sampling_is_flat() {
        let rep = Representation::new(0.4, 0.1, 3).unwrap();
        let g = sample(&TrigPolynomial::constant(c(1.0, 0.0)), &rep);
        assert!(g.grid().iter().all(|&z| z == c(1.0, 0.0)));
    }

    #[test]
    fn delta_of_constant_at_n1() {
        let rep = Representation::untwisted(1).unwrap();
        let d = delta(&SampledSymbol::constant(rep, c(3.0, 0.0)));
        assert_eq!(d.grid()[(0, 0)], c(6.0, 0.0));
    }

    #[test]
    fn delta_of_symmetric_grid_is_four_times_block() {
        let block = DMatrix::from_fn(3, 3, |i, j| c(i as f64 + 0.5, j as f64 - 1.0));
        let d = delta_grid(&symmetric_extension(&block));
        assert!(crate::numeric::max_abs_diff(&d, &(block * c(4.0, 0.0))) < 1e-14);
    }

    #[test]
    fn kernel_elements_fold_to_exact_zero() {
        for n in 1..=5 {
            let rep = Representation::new(0.2, 0.3, n).unwrap();
            assert!(kernel_element(&rep, 0)
                .grid()
                .iter()
                .all(|z| *z == c(0.0, 0.0)));
            for seed in 1..6 {
                let k = kernel_element(&rep, seed);
                assert!(delta(&k).grid().iter().all(|z| *z == c(0.0, 0.0)));
            }
        }
    }

    #[test]
    fn kernel_elements_span_the_kernel() {
        for n in 1..=4 {
            let rep = Representation::untwisted(n).unwrap();
            let side = 2 * n;
            let cols: Vec<_> = (1..=(3 * n * n) as u64)
                .map(|seed| {
                    let g = kernel_element(&rep, seed);
                    nalgebra::DVector::from_iterator(
                        side * side,
                        (0..side)
                            .flat_map(|r| (0..side).map(move |s| (r, s)))
                            .map(|(r, s)| g.grid()[(r, s)]),
                    )
                })
                .collect();
            let stacked = DMatrix::from_columns(&cols);
            assert_eq!(rank(&stacked, 1e-10), 3 * n * n);
        }
    }

    #[test]
    fn equivalence_examples() {
        let rep = Representation::untwisted(1).unwrap();
        let one = SampledSymbol::constant(rep, c(1.0, 0.0));
        let two = SampledSymbol::constant(rep, c(2.0, 0.0));
        assert!(equivalent(&one, &one, 0.0).unwrap());
        assert!(!equivalent(&one, &two, 1e-10).unwrap());
        let shifted = one.add(&kernel_element(&rep, 7)).unwrap();
        assert!(equivalent_default(&one, &shifted).unwrap());
        let other = SampledSymbol::zeros(Representation::untwisted(2).unwrap());
        assert!(matches!(
            equivalent(&one, &other, 1e-10),
            Err(Error::RepresentationMismatch)
        ));
    }

    #[test]
    fn grid_validation() {
        let rep = Representation::untwisted(2).unwrap();
        assert!(matches!(
            SampledSymbol::new(rep, DMatrix::zeros(3, 4)),
            Err(Error::GridShape { .. })
        ));
        let mut g = DMatrix::zeros(4, 4);
        g[(1, 2)] = c(f64::INFINITY, 0.0);
        assert!(matches!(
            SampledSymbol::new(rep, g),
            Err(Error::NonFinite(1, 2))
        ));
    }

    #[test]
    fn sub_is_inverse_of_add() {
        let rep = Representation::untwisted(2).unwrap();
        let a = kernel_element(&rep, 3);
        let b = kernel_element(&rep, 4);
        let back = a.add(&b).unwrap().sub(&b).unwrap();
        assert!(back.max_abs_diff(&a) < 1e-15);
    }
}
