// Copyright 2026 The torus-weyl Authors
// SPDX-License-Identifier: Apache-2.0

//! The `N`-dimensional unitary representations `T_{θ,N}` of the discrete
//! Heisenberg group, together with the operator and state types they act on.
//!
//! All pairings are antilinear in the first argument: `⟨ψ, φ⟩ = Σ ψ̄_j φ_j`.

use crate::error::{Error, Result};
use crate::numeric::{max_abs_diff, wrap, HalfRoots};
use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use std::f64::consts::PI;
use std::ops::{Add, Index, Mul, Sub};

/// A representation `(θ, N)`: a point of the torus and the Hilbert space
/// dimension `N = 1/h`.
///
/// Both angles are reduced into `[0, 1)` on construction, so two
/// representations compare equal iff their reduced angles are bit-identical.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Representation {
    theta1: f64,
    theta2: f64,
    dim: usize,
}

fn reduce_unit(x: f64) -> f64 {
    let t = x.rem_euclid(1.0);
    // rem_euclid can round up to exactly 1.0 for tiny negative inputs
    if t >= 1.0 {
        0.0
    } else {
        t
    }
}

impl Representation {
    pub fn new(theta1: f64, theta2: f64, dim: usize) -> Result<Self> {
        if dim == 0 {
            return Err(Error::ZeroDimension);
        }
        if !theta1.is_finite() || !theta2.is_finite() {
            return Err(Error::NonFiniteTheta(theta1, theta2));
        }
        Ok(Self {
            theta1: reduce_unit(theta1),
            theta2: reduce_unit(theta2),
            dim,
        })
    }

    /// `θ = (0, 0)`.
    pub fn untwisted(dim: usize) -> Result<Self> {
        Self::new(0.0, 0.0, dim)
    }

    pub fn theta1(&self) -> f64 {
        self.theta1
    }

    pub fn theta2(&self) -> f64 {
        self.theta2
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Side of the sampling lattice, `2N`.
    pub fn side(&self) -> usize {
        2 * self.dim
    }

    pub fn planck(&self) -> f64 {
        1.0 / self.dim as f64
    }

    /// Torus coordinates `(r/2N + θ₁/N, s/2N + θ₂/N)` of lattice point `(r, s)`.
    pub fn lattice_point(&self, r: usize, s: usize) -> (f64, f64) {
        let n = self.dim as f64;
        (
            r as f64 / (2.0 * n) + self.theta1 / n,
            s as f64 / (2.0 * n) + self.theta2 / n,
        )
    }
}

/// A linear operator on `ℂ^N`, stored as a dense square matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct Operator(DMatrix<Complex64>);

impl Operator {
    pub fn new(matrix: DMatrix<Complex64>) -> Result<Self> {
        if matrix.nrows() != matrix.ncols() {
            return Err(Error::NonSquare(matrix.len(), matrix.nrows()));
        }
        if matrix.nrows() == 0 {
            return Err(Error::ZeroDimension);
        }
        Ok(Self(matrix))
    }

    pub fn identity(dim: usize) -> Self {
        Self(DMatrix::identity(dim, dim))
    }

    pub fn zeros(dim: usize) -> Self {
        Self(DMatrix::zeros(dim, dim))
    }

    pub fn from_fn(dim: usize, f: impl FnMut(usize, usize) -> Complex64) -> Self {
        Self(DMatrix::from_fn(dim, dim, f))
    }

    pub fn dim(&self) -> usize {
        self.0.nrows()
    }

    pub fn matrix(&self) -> &DMatrix<Complex64> {
        &self.0
    }

    pub fn into_matrix(self) -> DMatrix<Complex64> {
        self.0
    }

    pub fn adjoint(&self) -> Self {
        Self(self.0.adjoint())
    }

    pub fn scale(&self, c: Complex64) -> Self {
        Self(&self.0 * c)
    }

    /// `[self, other] = self·other − other·self`.
    pub fn commutator(&self, other: &Operator) -> Self {
        Self(&self.0 * &other.0 - &other.0 * &self.0)
    }

    pub fn apply(&self, state: &State) -> State {
        State(&self.0 * &state.0)
    }

    /// Integer power; negative exponents go through a dense inverse and
    /// return `None` for singular operators.
    pub fn power(&self, k: i64) -> Option<Self> {
        let base = if k < 0 {
            self.0.clone().try_inverse()?
        } else {
            self.0.clone()
        };
        let mut acc = DMatrix::identity(self.dim(), self.dim());
        for _ in 0..k.unsigned_abs() {
            acc = &acc * &base;
        }
        Some(Self(acc))
    }

    pub fn max_abs_diff(&self, other: &Operator) -> f64 {
        max_abs_diff(&self.0, &other.0)
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        max_abs_diff(&self.0, &self.0.adjoint()) <= tol
    }
}

impl Index<(usize, usize)> for Operator {
    type Output = Complex64;

    fn index(&self, idx: (usize, usize)) -> &Complex64 {
        &self.0[idx]
    }
}

impl Mul for &Operator {
    type Output = Operator;

    fn mul(self, rhs: &Operator) -> Operator {
        Operator(&self.0 * &rhs.0)
    }
}

impl Add for &Operator {
    type Output = Operator;

    fn add(self, rhs: &Operator) -> Operator {
        Operator(&self.0 + &rhs.0)
    }
}

impl Sub for &Operator {
    type Output = Operator;

    fn sub(self, rhs: &Operator) -> Operator {
        Operator(&self.0 - &rhs.0)
    }
}

/// A (not necessarily normalized) vector of `ℂ^N`, indices read mod `N`.
#[derive(Debug, Clone, PartialEq)]
pub struct State(DVector<Complex64>);

impl State {
    pub fn new(components: Vec<Complex64>) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::ZeroDimension);
        }
        Ok(Self(DVector::from_vec(components)))
    }

    /// Canonical basis vector `u_j`.
    pub fn basis(dim: usize, j: usize) -> Self {
        let mut v = DVector::zeros(dim);
        v[j % dim] = Complex64::new(1.0, 0.0);
        Self(v)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn components(&self) -> &[Complex64] {
        self.0.as_slice()
    }

    /// Component `j mod N`.
    pub fn at(&self, j: i64) -> Complex64 {
        self.0[wrap(j, self.dim())]
    }

    /// `⟨self, other⟩`, antilinear in `self`.
    pub fn inner(&self, other: &State) -> Complex64 {
        self.0.dotc(&other.0)
    }

    pub fn norm_sqr(&self) -> f64 {
        self.0.norm_squared()
    }

    pub fn normalized(&self) -> Self {
        Self(self.0.normalize())
    }

    /// Rank-one operator `|self⟩⟨bra|`, i.e. `F_{l,k} = self_l · conj(bra_k)`.
    pub fn outer(&self, bra: &State) -> Operator {
        Operator(&self.0 * bra.0.adjoint())
    }

    /// Unnormalized discrete Fourier coefficients `ψ̂_j = Σ_m ψ_m e^{−2πimj/N}`.
    pub fn dft(&self) -> Vec<Complex64> {
        let n = self.dim();
        let roots = HalfRoots::new(n);
        (0..n)
            .map(|j| {
                (0..n)
                    .map(|m| self.0[m] * roots.get(-2 * (m * j) as i64))
                    .sum()
            })
            .collect()
    }
}

/// `T_{θ,N}(n₁, n₂)`: column `j` carries
/// `e^{−πin₁n₂/N} e^{2πin₁(j+θ₁)/N} e^{2πin₂θ₂/N}` in row `j − n₂ mod N`.
pub fn heisenberg(rep: &Representation, n1: i64, n2: i64) -> Operator {
    let n = rep.dim();
    let nf = n as f64;
    let two_n = 2 * n as i128;
    let (a, b) = (n1 as i128, n2 as i128);
    // integer part of the phase in units of π/N, reduced mod 2N before going to floats
    let cocycle = (-(a * b)).rem_euclid(two_n);
    let twist = 2.0 * PI * (n1 as f64 * rep.theta1() + n2 as f64 * rep.theta2()) / nf;
    let mut m = DMatrix::zeros(n, n);
    for j in 0..n {
        let k = (cocycle + 2 * (a * j as i128).rem_euclid(n as i128)).rem_euclid(two_n);
        let angle = PI * k as f64 / nf + twist;
        m[(wrap(j as i64 - n2, n), j)] = Complex64::from_polar(1.0, angle);
    }
    Operator(m)
}

/// Clock generator `t₁(θ₁) = T(1, 0) = diag(e^{2πi(j+θ₁)/N})`.
pub fn generator_t1(rep: &Representation) -> Operator {
    heisenberg(rep, 1, 0)
}

/// Shift generator `t₂(θ₂) = T(0, 1)`: `u_j ↦ e^{2πiθ₂/N} u_{j−1}`.
pub fn generator_t2(rep: &Representation) -> Operator {
    heisenberg(rep, 0, 1)
}

/// Largest deviations observed for each algebraic law of `T_{θ,N}`.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct LawReport {
    /// `T(n)* = T(−n)`
    pub adjoint: f64,
    /// `T(n)T(m) = e^{−πi(n₁m₂−n₂m₁)/N} T(n+m)`
    pub product: f64,
    /// `t₁^{n₁} t₂^{n₂} = e^{−2πin₁n₂/N} t₂^{n₂} t₁^{n₁}`
    pub commutation: f64,
    /// `T(n + 2N m) = e^{2πi(2m₁θ₁+2m₂θ₂)} T(n)`
    pub period_2n: f64,
    /// `T(n + mN, 0) = e^{2πimθ₁} T(n, 0)` and likewise for the shift
    pub period_n: f64,
    /// `T(n₁, n₂) = e^{−πin₁n₂/N} t₂^{n₂} t₁^{n₁}`
    pub factorization: f64,
}

impl LawReport {
    pub fn max(&self) -> f64 {
        [
            self.adjoint,
            self.product,
            self.commutation,
            self.period_2n,
            self.period_n,
            self.factorization,
        ]
        .into_iter()
        .fold(0.0, f64::max)
    }
}

/// Evaluates every representation law on each sample `(n₁, n₂, m₁, m₂)`.
///
/// Generator powers are formed by repeated matrix products (negative powers
/// through a dense inverse), independently of the closed-form phase used by
/// [`heisenberg`]. The second pair doubles as the period multiple in the
/// periodicity laws.
pub fn check_representation_laws(rep: &Representation, samples: &[[i64; 4]]) -> LawReport {
    let n = rep.dim() as i64;
    let nf = n as f64;
    let t1 = generator_t1(rep);
    let t2 = generator_t2(rep);
    let pow = |op: &Operator, k: i64| op.power(k).expect("generators are unitary");
    let phase = |angle: f64| Complex64::from_polar(1.0, angle);
    let mut report = LawReport::default();

    for &[n1, n2, m1, m2] in samples {
        let tn = heisenberg(rep, n1, n2);
        let tm = heisenberg(rep, m1, m2);

        let adj = tn.adjoint().max_abs_diff(&heisenberg(rep, -n1, -n2));
        report.adjoint = report.adjoint.max(adj);

        let lhs = &tn * &tm;
        let rhs =
            heisenberg(rep, n1 + m1, n2 + m2).scale(phase(-PI * (n1 * m2 - n2 * m1) as f64 / nf));
        report.product = report.product.max(lhs.max_abs_diff(&rhs));

        let (p1, p2) = (pow(&t1, n1), pow(&t2, n2));
        let lhs = &p1 * &p2;
        let rhs = (&p2 * &p1).scale(phase(-2.0 * PI * (n1 * n2) as f64 / nf));
        report.commutation = report.commutation.max(lhs.max_abs_diff(&rhs));

        let fact = (&p2 * &p1).scale(phase(-PI * (n1 * n2) as f64 / nf));
        report.factorization = report.factorization.max(tn.max_abs_diff(&fact));

        let shifted = heisenberg(rep, n1 + 2 * n * m1, n2 + 2 * n * m2);
        let expect = tn.scale(phase(
            2.0 * PI * (2.0 * m1 as f64 * rep.theta1() + 2.0 * m2 as f64 * rep.theta2()),
        ));
        report.period_2n = report.period_2n.max(shifted.max_abs_diff(&expect));

        let a = heisenberg(rep, n1 + m1 * n, 0).max_abs_diff(
            &heisenberg(rep, n1, 0).scale(phase(2.0 * PI * m1 as f64 * rep.theta1())),
        );
        let b = heisenberg(rep, 0, n2 + m2 * n).max_abs_diff(
            &heisenberg(rep, 0, n2).scale(phase(2.0 * PI * m2 as f64 * rep.theta2())),
        );
        report.period_n = report.period_n.max(a).max(b);
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn theta_is_reduced_mod_one() {
        let rep = Representation::new(1.25, -0.25, 3).unwrap();
        assert_eq!(rep.theta1(), 0.25);
        assert_eq!(rep.theta2(), 0.75);
        let tiny = Representation::new(-1e-20, 0.0, 2).unwrap();
        assert!(tiny.theta1() < 1.0);
    }

    #[test]
    fn rejects_degenerate_input() {
        assert!(matches!(
            Representation::new(0.0, 0.0, 0),
            Err(Error::ZeroDimension)
        ));
        assert!(Representation::new(f64::NAN, 0.0, 2).is_err());
    }

    #[test]
    fn t10_at_n2_is_sigma_z() {
        let rep = Representation::untwisted(2).unwrap();
        let t = heisenberg(&rep, 1, 0);
        let sz = Operator::from_fn(2, |i, j| match (i, j) {
            (0, 0) => c(1.0, 0.0),
            (1, 1) => c(-1.0, 0.0),
            _ => c(0.0, 0.0),
        });
        assert!(t.max_abs_diff(&sz) < 1e-15);
    }

    #[test]
    fn origin_is_identity() {
        let rep = Representation::new(0.37, 0.81, 5).unwrap();
        assert!(heisenberg(&rep, 0, 0).max_abs_diff(&Operator::identity(5)) < 1e-15);
    }

    #[test]
    fn generators_at_n2() {
        let rep = Representation::untwisted(2).unwrap();
        let t2 = generator_t2(&rep);
        let sx = Operator::from_fn(2, |i, j| if i != j { c(1.0, 0.0) } else { c(0.0, 0.0) });
        assert!(t2.max_abs_diff(&sx) < 1e-15);
    }

    #[test]
    fn generators_at_n1_are_scalars() {
        let rep = Representation::new(0.2, 0.7, 1).unwrap();
        let t1 = generator_t1(&rep);
        let t2 = generator_t2(&rep);
        assert!((t1[(0, 0)] - Complex64::from_polar(1.0, 2.0 * PI * 0.2)).norm() < 1e-15);
        assert!((t2[(0, 0)] - Complex64::from_polar(1.0, 2.0 * PI * 0.7)).norm() < 1e-15);
    }

    #[test]
    fn clock_to_the_n_is_a_phase() {
        let rep = Representation::new(0.25, 0.0, 4).unwrap();
        let p = generator_t1(&rep).power(4).unwrap();
        // e^{2πiθ₁} = e^{iπ/2} = i on every diagonal slot
        let expected = Operator::identity(4).scale(c(0.0, 1.0));
        assert!(p.max_abs_diff(&expected) < 1e-14);
    }

    #[test]
    fn negative_indices_match_generator_products() {
        // T(4, −2) = e^{−πi·4·(−2)/3} t₂^{−2} t₁^{4}
        let rep = Representation::new(0.3, 0.7, 3).unwrap();
        let t1 = generator_t1(&rep);
        let t2 = generator_t2(&rep);
        let mut t2_inv = Operator::identity(3);
        for _ in 0..2 {
            t2_inv = &t2_inv * &t2.adjoint();
        }
        let mut t1_4 = Operator::identity(3);
        for _ in 0..4 {
            t1_4 = &t1_4 * &t1;
        }
        let expected = (&t2_inv * &t1_4).scale(Complex64::from_polar(1.0, -PI * (-8.0) / 3.0));
        assert!(heisenberg(&rep, 4, -2).max_abs_diff(&expected) < 1e-12);
    }

    #[test]
    fn product_law_with_half_twist() {
        let rep = Representation::new(0.5, 0.5, 2).unwrap();
        let lhs = &heisenberg(&rep, 1, 0) * &heisenberg(&rep, 0, 1);
        let rhs = heisenberg(&rep, 1, 1).scale(Complex64::from_polar(1.0, -PI / 2.0));
        assert!(lhs.max_abs_diff(&rhs) < 1e-15);
    }

    #[test]
    fn laws_hold_on_a_single_sample() {
        let rep = Representation::untwisted(3).unwrap();
        assert!(check_representation_laws(&rep, &[[1, 1, 1, 1]]).max() < 1e-12);
    }

    #[test]
    fn heisenberg_is_unitary() {
        let rep = Representation::new(0.13, 0.58, 6).unwrap();
        for (n1, n2) in [(3, -7), (-11, 4), (25, 13)] {
            let t = heisenberg(&rep, n1, n2);
            assert!((&t * &t.adjoint()).max_abs_diff(&Operator::identity(6)) < 1e-12);
        }
    }

    #[test]
    fn state_helpers() {
        let psi = State::new(vec![c(1.0, 1.0), c(0.0, 2.0)]).unwrap();
        assert_eq!(psi.at(-1), c(0.0, 2.0));
        assert!((psi.inner(&psi).re - 6.0).abs() < 1e-15);
        // antilinear in the first slot
        let i_psi = State::new(psi.components().iter().map(|z| z * c(0.0, 1.0)).collect()).unwrap();
        assert!((i_psi.inner(&psi) - c(0.0, -6.0)).norm() < 1e-14);
        let hat = State::new(vec![c(1.0, 0.0), c(1.0, 0.0)]).unwrap().dft();
        assert!((hat[0] - c(2.0, 0.0)).norm() < 1e-15 && hat[1].norm() < 1e-15);
    }
}
