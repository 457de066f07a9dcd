// Copyright 2026 The torus-weyl Authors
// SPDX-License-Identifier: Apache-2.0

//! Moyal product and bracket on lattice samplings, the Poisson bracket of
//! trigonometric polynomials, and Heisenberg-picture dynamics of operators
//! and of their symbols.

use crate::error::{Error, Result};
use crate::numeric::HalfRoots;
use crate::quantize::quantize_sampled;
use crate::rep::{Operator, Representation};
use crate::symbols::{sample, SampledSymbol, TrigPolynomial};
use nalgebra::{DMatrix, SymmetricEigen};
use num_complex::Complex64;
use std::f64::consts::PI;

/// Imaginary parts of a Hamiltonian grid above this are rejected.
pub const HAMILTONIAN_IMAG_TOL: f64 = 1e-12;

/// `(α ♯ β)(j, k)` via the factored evaluation.
///
/// With `ω(x) = e^{πix/N}` and `B̂(u, v) = Σ_{r,s} β(r, s) ω(us − rv)`, the
/// inner double sum of the product kernel collapses to
/// `ω(j s₁ − r₁ k) B̂(r₁, s₁)`, leaving an `O((2N)²)` sum per output point.
pub fn moyal_product(a: &SampledSymbol, b: &SampledSymbol) -> Result<SampledSymbol> {
    a.ensure_same_rep(b)?;
    let n = a.rep().dim();
    let side = 2 * n;
    let roots = HalfRoots::new(n);
    let (ga, gb) = (a.grid(), b.grid());

    // P(r, u) = Σ_s β(r, s) ω(us)
    let partial = DMatrix::from_fn(side, side, |r, u| {
        (0..side)
            .map(|s| gb[(r, s)] * roots.get((u * s) as i64))
            .sum::<Complex64>()
    });
    // B̂(u, v) = Σ_r P(r, u) ω(−rv)
    let b_hat = DMatrix::from_fn(side, side, |u, v| {
        (0..side)
            .map(|r| partial[(r, u)] * roots.get(-((r * v) as i64)))
            .sum::<Complex64>()
    });

    let norm = 1.0 / (side * side) as f64;
    let grid = DMatrix::from_fn(side, side, |j, k| {
        let mut acc = Complex64::default();
        for r1 in 0..side {
            for s1 in 0..side {
                let phase = roots.get((j * s1) as i64 - (r1 * k) as i64);
                acc += ga[((j + r1) % side, (k + s1) % side)] * phase * b_hat[(r1, s1)];
            }
        }
        acc * norm
    });
    SampledSymbol::new(*a.rep(), grid)
}

/// Direct four-fold sum
/// `(1/(2N)²) Σ α(j+r₁, k+s₁) β(j+r₂, k+s₂) e^{(πi/N)(r₁s₂ − r₂s₁)}`.
/// `O((2N)⁶)`; kept as a reference for [`moyal_product`].
pub fn moyal_product_direct(a: &SampledSymbol, b: &SampledSymbol) -> Result<SampledSymbol> {
    four_fold(a, b, |roots, k| roots.get(k))
}

/// Direct sine-kernel sum
/// `(2i/(2N)²) Σ α(j+r₁, k+s₁) β(j+r₂, k+s₂) sin((π/N)(r₁s₂ − r₂s₁))`.
pub fn moyal_bracket_direct(a: &SampledSymbol, b: &SampledSymbol) -> Result<SampledSymbol> {
    four_fold(a, b, |roots, k| Complex64::new(0.0, 2.0 * roots.get(k).im))
}

fn four_fold(
    a: &SampledSymbol,
    b: &SampledSymbol,
    kernel: impl Fn(&HalfRoots, i64) -> Complex64,
) -> Result<SampledSymbol> {
    a.ensure_same_rep(b)?;
    let n = a.rep().dim();
    let side = 2 * n;
    let roots = HalfRoots::new(n);
    let norm = 1.0 / (side * side) as f64;
    let grid = DMatrix::from_fn(side, side, |j, k| {
        let mut acc = Complex64::default();
        for r1 in 0..side {
            for s1 in 0..side {
                let av = a.grid()[((j + r1) % side, (k + s1) % side)];
                for r2 in 0..side {
                    for s2 in 0..side {
                        let bv = b.grid()[((j + r2) % side, (k + s2) % side)];
                        let w = kernel(&roots, (r1 * s2) as i64 - (r2 * s1) as i64);
                        acc += av * bv * w;
                    }
                }
            }
        }
        acc * norm
    });
    SampledSymbol::new(*a.rep(), grid)
}

/// `{α, β}_♯ = α ♯ β − β ♯ α`, the symbol of the commutator.
pub fn moyal_bracket(a: &SampledSymbol, b: &SampledSymbol) -> Result<SampledSymbol> {
    let ab = moyal_product(a, b)?;
    let ba = moyal_product(b, a)?;
    ab.sub(&ba)
}

/// Moyal product of trigonometric polynomials through the twisted
/// convolution `γ̂(n+m) += α̂(n) β̂(m) e^{−πi(n₁m₂ − n₂m₁)/N}`.
pub fn moyal_product_fourier(a: &TrigPolynomial, b: &TrigPolynomial, dim: usize) -> TrigPolynomial {
    let roots = HalfRoots::new(dim);
    let mut out = TrigPolynomial::new();
    for ((n1, n2), x) in a.terms() {
        for ((m1, m2), y) in b.terms() {
            out.add_term(n1 + m1, n2 + m2, x * y * roots.get(-(n1 * m2 - n2 * m1)));
        }
    }
    out
}

/// `{α, β} = ∂ₓα ∂ₚβ − ∂ₚα ∂ₓβ`, exactly, on Fourier coefficients:
/// `−4π²(n₁m₂ − n₂m₁) α̂(n) β̂(m)` lands at frequency `n + m`.
pub fn poisson_bracket(a: &TrigPolynomial, b: &TrigPolynomial) -> TrigPolynomial {
    let mut out = TrigPolynomial::new();
    for ((n1, n2), x) in a.terms() {
        for ((m1, m2), y) in b.terms() {
            let cross = n1 * m2 - n2 * m1;
            if cross != 0 {
                out.add_term(n1 + m1, n2 + m2, x * y * (-4.0 * PI * PI * cross as f64));
            }
        }
    }
    out
}

/// `max_{L(θ,N)} |(2πN/i){α, β}_♯ − {α, β}|`; decays like `N⁻²` for fixed
/// smooth symbols.
pub fn semiclassical_residual(a: &TrigPolynomial, b: &TrigPolynomial, rep: &Representation) -> f64 {
    let bracket = moyal_bracket(&sample(a, rep), &sample(b, rep)).expect("same representation");
    let classical = sample(&poisson_bracket(a, b), rep);
    // 2πN/i = −2πN·i
    let scale = Complex64::new(0.0, -2.0 * PI * rep.dim() as f64);
    bracket
        .grid()
        .iter()
        .zip(classical.grid().iter())
        .map(|(q, p)| (q * scale - p).norm())
        .fold(0.0, f64::max)
}

/// A real classical Hamiltonian sampled on `L(θ,N)`.
#[derive(Debug, Clone, PartialEq)]
pub struct HamiltonianSystem {
    hamiltonian: SampledSymbol,
}

impl HamiltonianSystem {
    /// Rejects grids with imaginary parts above [`HAMILTONIAN_IMAG_TOL`];
    /// the accepted grid is stored with its imaginary parts cleared.
    pub fn new(hamiltonian: SampledSymbol) -> Result<Self> {
        let worst = hamiltonian
            .grid()
            .iter()
            .map(|z| z.im.abs())
            .fold(0.0, f64::max);
        if worst > HAMILTONIAN_IMAG_TOL {
            return Err(Error::NonRealHamiltonian(worst));
        }
        Ok(Self {
            hamiltonian: hamiltonian.map(|z| Complex64::new(z.re, 0.0)),
        })
    }

    pub fn hamiltonian(&self) -> &SampledSymbol {
        &self.hamiltonian
    }

    pub fn rep(&self) -> &Representation {
        self.hamiltonian.rep()
    }

    /// `H = Op^W(𝓗)`, Hermitian.
    pub fn operator(&self) -> Operator {
        quantize_sampled(&self.hamiltonian)
    }

    /// `e^{+2πiNtH}` from the eigendecomposition of `H`.
    fn heisenberg_propagator(&self, t: f64) -> DMatrix<Complex64> {
        let h = self.operator().into_matrix();
        // clear rounding-level anti-Hermitian residue before the Hermitian solver
        let h = (&h + h.adjoint()) * Complex64::new(0.5, 0.0);
        let eig = SymmetricEigen::new(h);
        let lambda = 2.0 * PI * self.rep().dim() as f64 * t;
        let phases = eig
            .eigenvalues
            .map(|e| Complex64::from_polar(1.0, lambda * e));
        let v = &eig.eigenvectors;
        v * DMatrix::from_diagonal(&phases) * v.adjoint()
    }
}

/// `A(t) = e^{+2πiNtH} A₀ e^{−2πiNtH}`.
pub fn evolve_operator(sys: &HamiltonianSystem, a0: &Operator, t: f64) -> Result<Operator> {
    if a0.dim() != sys.rep().dim() {
        return Err(Error::DimensionMismatch {
            expected: sys.rep().dim(),
            found: a0.dim(),
        });
    }
    let u = sys.heisenberg_propagator(t);
    Operator::new(&u * a0.matrix() * u.adjoint())
}

/// Integrates `dα/dt = 2πiN {𝓗, α}_♯` with classical fixed-step RK4.
///
/// The quantization of the result tracks [`evolve_operator`] with a global
/// error of order `(t/steps)⁴`.
pub fn evolve_symbol(
    sys: &HamiltonianSystem,
    a0: &SampledSymbol,
    t: f64,
    steps: usize,
) -> Result<SampledSymbol> {
    if steps == 0 {
        return Err(Error::ZeroSteps);
    }
    sys.hamiltonian.ensure_same_rep(a0)?;
    let h = t / steps as f64;
    let rate = Complex64::new(0.0, 2.0 * PI * sys.rep().dim() as f64);
    let field = |alpha: &SampledSymbol| -> Result<SampledSymbol> {
        Ok(moyal_bracket(&sys.hamiltonian, alpha)?.map(|z| z * rate))
    };
    let half = Complex64::new(0.5 * h, 0.0);
    let full = Complex64::new(h, 0.0);
    let mut alpha = a0.clone();
    for _ in 0..steps {
        let k1 = field(&alpha)?;
        let k2 = field(&k1.axpy(half, &alpha)?)?;
        let k3 = field(&k2.axpy(half, &alpha)?)?;
        let k4 = field(&k3.axpy(full, &alpha)?)?;
        let grid = alpha.grid()
            + (k1.grid()
                + k2.grid() * Complex64::new(2.0, 0.0)
                + k3.grid() * Complex64::new(2.0, 0.0)
                + k4.grid())
                * Complex64::new(h / 6.0, 0.0);
        alpha = SampledSymbol::new(*a0.rep(), grid)?;
    }
    Ok(alpha)
}

/// `max |Op(evolve_symbol) − evolve_operator(Op(α₀))|`.
pub fn evolution_defect(
    sys: &HamiltonianSystem,
    a0: &SampledSymbol,
    t: f64,
    steps: usize,
) -> Result<f64> {
    let evolved = evolve_symbol(sys, a0, t, steps)?;
    let exact = evolve_operator(sys, &quantize_sampled(a0), t)?;
    Ok(quantize_sampled(&evolved).max_abs_diff(&exact))
}
