// Copyright 2026 The torus-weyl Authors
// SPDX-License-Identifier: Apache-2.0

//! Dequantization: a canonical symbol `N·W̃_N(A)` for every operator, the
//! reduced symbol labelling its equivalence class, and the spin-1/2 and
//! `N`-dimensional Pauli dictionaries.

use crate::error::{Error, Result};
use crate::numeric::{wrap, HalfRoots};
use crate::rep::{heisenberg, Operator, Representation};
use crate::symbols::{ReducedSymbol, SampledSymbol, TrigPolynomial};
use crate::wigner::wigner_operator;
use num_complex::Complex64;
use std::f64::consts::PI;

/// The canonical representative `μ(α) = N·W̃_N(A)`; it quantizes back to `A`
/// and satisfies the three Wigner sign symmetries.
pub fn dequantize(rep: &Representation, op: &Operator) -> Result<SampledSymbol> {
    let table = wigner_operator(rep, op)?;
    let scale = Complex64::new(rep.dim() as f64, 0.0);
    SampledSymbol::new(*rep, table.into_grid() * scale)
}

/// `4N` times the principal block of `W̃_N(A)`: the common value of
/// `Δ(μ(α))` over every symbol `α` quantizing to `A`.
pub fn canonical_class(rep: &Representation, op: &Operator) -> Result<ReducedSymbol> {
    let table = wigner_operator(rep, op)?;
    let scale = Complex64::new(4.0 * rep.dim() as f64, 0.0);
    ReducedSymbol::new(table.principal_block() * scale)
}

fn ensure_spin_half(rep: &Representation) -> Result<()> {
    if rep.dim() != 2 {
        return Err(Error::DimensionMismatch {
            expected: 2,
            found: rep.dim(),
        });
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq)]
pub struct PauliSet<T> {
    pub identity: T,
    pub x: T,
    pub y: T,
    pub z: T,
}

impl<T> PauliSet<T> {
    /// `[I, σx, σy, σz]`.
    pub fn as_array(&self) -> [&T; 4] {
        [&self.identity, &self.x, &self.y, &self.z]
    }
}

/// The standard spin-1/2 matrices.
pub fn pauli(rep2: &Representation) -> Result<PauliSet<Operator>> {
    ensure_spin_half(rep2)?;
    let c = Complex64::new;
    let from = |m: [[Complex64; 2]; 2]| Operator::from_fn(2, |i, j| m[i][j]);
    let (o, l, i) = (c(0.0, 0.0), c(1.0, 0.0), c(0.0, 1.0));
    Ok(PauliSet {
        identity: from([[l, o], [o, l]]),
        x: from([[o, l], [l, o]]),
        y: from([[o, -i], [i, o]]),
        z: from([[l, o], [o, -l]]),
    })
}

/// Per-matrix deviations `[z, x, y]` in `σz = e^{−πiθ₁}T(1,0)`,
/// `σx = e^{−πiθ₂}T(0,1)` and `σy = y_sign·e^{−πi(θ₁+θ₂)}T(1,1)`.
///
/// With the cocycle `e^{−πin₁n₂/N}` in `T`, the `σy` relation holds with
/// `y_sign = −1`; `y_sign = +1` misses by exactly 2.
pub fn pauli_generator_deviations(rep2: &Representation, y_sign: f64) -> Result<[f64; 3]> {
    let p = pauli(rep2)?;
    let (t1, t2) = (rep2.theta1(), rep2.theta2());
    let phase = |a: f64| Complex64::from_polar(1.0, -PI * a);
    let z = heisenberg(rep2, 1, 0).scale(phase(t1)).max_abs_diff(&p.z);
    let x = heisenberg(rep2, 0, 1).scale(phase(t2)).max_abs_diff(&p.x);
    let y = heisenberg(rep2, 1, 1)
        .scale(phase(t1 + t2) * y_sign)
        .max_abs_diff(&p.y);
    Ok([z, x, y])
}

/// Largest deviation in the generator dictionary
/// `σz = e^{−πiθ₁}T(1,0)`, `σx = e^{−πiθ₂}T(0,1)`, `σy = −e^{−πi(θ₁+θ₂)}T(1,1)`.
pub fn pauli_generator_deviation(rep2: &Representation) -> Result<f64> {
    let [z, x, y] = pauli_generator_deviations(rep2, -1.0)?;
    Ok(z.max(x).max(y))
}

/// Closed-form symbols: `α_I = 1`, `α_x = e^{−πiθ₂}e^{2πip}`,
/// `α_y = −e^{−πi(θ₁+θ₂)}e^{2πi(x+p)}`, `α_z = e^{−πiθ₁}e^{2πix}`.
pub fn pauli_symbols(rep2: &Representation) -> Result<PauliSet<TrigPolynomial>> {
    ensure_spin_half(rep2)?;
    let (t1, t2) = (rep2.theta1(), rep2.theta2());
    let phase = |a: f64| Complex64::from_polar(1.0, -PI * a);
    Ok(PauliSet {
        identity: TrigPolynomial::constant(Complex64::new(1.0, 0.0)),
        x: TrigPolynomial::monomial(0, 1, phase(t2)),
        y: TrigPolynomial::monomial(1, 1, -phase(t1 + t2)),
        z: TrigPolynomial::monomial(1, 0, phase(t1)),
    })
}

fn ensure_lattice_index(rep: &Representation, r: usize, s: usize) -> Result<()> {
    if r >= rep.side() || s >= rep.side() {
        return Err(Error::IndexOutOfRange {
            r,
            s,
            dim: rep.dim(),
        });
    }
    Ok(())
}

/// `B^{[r,s]} = Σ_j e^{−πi(r−2j)s/N} E_{j, r−j}`.
///
/// Defined for `r, s ∈ ℤ_{2N}`; the `N²` matrices with `r, s < N` form a
/// basis of `M_N(ℂ)`, the rest differ from them by a sign.
pub fn big_pauli(rep: &Representation, r: usize, s: usize) -> Result<Operator> {
    ensure_lattice_index(rep, r, s)?;
    let n = rep.dim();
    let roots = HalfRoots::new(n);
    let mut op = Operator::zeros(n).into_matrix();
    for j in 0..n {
        let col = wrap(r as i64 - j as i64, n);
        op[(j, col)] = roots.get(-(r as i64 - 2 * j as i64) * s as i64);
    }
    Operator::new(op)
}

/// Symbol of `B^{[r,s]}` whose sampling is `2N` at lattice point `(r, s)` and
/// zero elsewhere: coefficients
/// `(1/2N) e^{−2πik(r/2N+θ₁/N)} e^{−2πim(s/2N+θ₂/N)}` for `k, m < 2N`.
pub fn big_pauli_symbol(rep: &Representation, r: usize, s: usize) -> Result<TrigPolynomial> {
    ensure_lattice_index(rep, r, s)?;
    let n = rep.dim();
    let nf = n as f64;
    let side = rep.side() as i64;
    let mut tp = TrigPolynomial::new();
    for k in 0..side {
        for m in 0..side {
            let lattice = (k * r as i64 + m * s as i64).rem_euclid(side);
            let angle = -PI * lattice as f64 / nf
                - 2.0 * PI * (k as f64 * rep.theta1() + m as f64 * rep.theta2()) / nf;
            tp.add_term(k, m, Complex64::from_polar(1.0 / side as f64, angle));
        }
    }
    Ok(tp)
}
