// Copyright 2026 The torus-weyl Authors
// SPDX-License-Identifier: Apache-2.0

//! Discrete Wigner tables `W̃_N` of state pairs and operators.
//!
//! The Wigner transform on the torus is a weighted Dirac comb on `L(θ,N)`;
//! a [`WignerTable`] holds the `2N × 2N` weights plus the anchor `θ`. The
//! weights themselves do not depend on `θ`.

use crate::error::{Error, Result};
use crate::numeric::{max_abs_diff, parity_sign, wrap, HalfRoots};
use crate::rep::{heisenberg, Operator, Representation, State};
use crate::symbols::{symmetric_extension, SampledSymbol};
use nalgebra::DMatrix;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum WignerKind {
    StatePair,
    Operator,
}

#[derive(Debug, Clone, PartialEq)]
pub struct WignerTable {
    rep: Representation,
    kind: WignerKind,
    grid: DMatrix<Complex64>,
}

impl WignerTable {
    pub fn new(rep: Representation, kind: WignerKind, grid: DMatrix<Complex64>) -> Result<Self> {
        let side = rep.side();
        if grid.nrows() != side || grid.ncols() != side {
            return Err(Error::GridShape {
                rows: grid.nrows(),
                cols: grid.ncols(),
                side,
            });
        }
        Ok(Self { rep, kind, grid })
    }

    /// Rebuilds the full table from its values on the independent lattice
    /// (the `N × N` principal block) using the three sign symmetries.
    pub fn from_principal_block(
        rep: Representation,
        kind: WignerKind,
        block: &DMatrix<Complex64>,
    ) -> Result<Self> {
        if block.nrows() != rep.dim() || block.ncols() != rep.dim() {
            return Err(Error::DimensionMismatch {
                expected: rep.dim(),
                found: block.nrows(),
            });
        }
        Self::new(rep, kind, symmetric_extension(block))
    }

    pub fn rep(&self) -> &Representation {
        &self.rep
    }

    pub fn kind(&self) -> WignerKind {
        self.kind
    }

    pub fn grid(&self) -> &DMatrix<Complex64> {
        &self.grid
    }

    pub fn into_grid(self) -> DMatrix<Complex64> {
        self.grid
    }

    pub fn principal_block(&self) -> DMatrix<Complex64> {
        let n = self.rep.dim();
        self.grid.view((0, 0), (n, n)).into_owned()
    }

    pub fn total_mass(&self) -> Complex64 {
        self.grid.iter().sum()
    }
}

fn ensure_dim(rep: &Representation, found: usize) -> Result<()> {
    if rep.dim() != found {
        return Err(Error::DimensionMismatch {
            expected: rep.dim(),
            found,
        });
    }
    Ok(())
}

/// `V_{θ,N}(ψ, φ)(n₁, n₂) = ⟨ψ, T_{θ,N}(n₁, n₂) φ⟩`.
pub fn fourier_wigner(
    rep: &Representation,
    psi: &State,
    phi: &State,
    n1: i64,
    n2: i64,
) -> Result<Complex64> {
    ensure_dim(rep, psi.dim())?;
    ensure_dim(rep, phi.dim())?;
    Ok(psi.inner(&heisenberg(rep, n1, n2).apply(phi)))
}

/// `W̃_N(ψ, φ)(r, s) = (1/2N) Σ_{l∈ℤ_N} ψ̄_{r−l} φ_l e^{−πi(2l−r)s/N}`.
pub fn wigner_state(rep: &Representation, psi: &State, phi: &State) -> Result<WignerTable> {
    ensure_dim(rep, psi.dim())?;
    ensure_dim(rep, phi.dim())?;
    let n = rep.dim();
    let roots = HalfRoots::new(n);
    let norm = 1.0 / rep.side() as f64;
    let grid = DMatrix::from_fn(rep.side(), rep.side(), |r, s| {
        let (r, s) = (r as i64, s as i64);
        (0..n as i64)
            .map(|l| psi.at(r - l).conj() * phi.at(l) * roots.get(-(2 * l - r) * s))
            .sum::<Complex64>()
            * norm
    });
    Ok(WignerTable {
        rep: *rep,
        kind: WignerKind::StatePair,
        grid,
    })
}

/// `W̃_N(F)(r, s) = (1/2N) Σ_l F_{l, r−l} e^{−πi(2l−r)s/N}`.
pub fn wigner_operator(rep: &Representation, op: &Operator) -> Result<WignerTable> {
    ensure_dim(rep, op.dim())?;
    let n = rep.dim();
    let roots = HalfRoots::new(n);
    let norm = 1.0 / rep.side() as f64;
    let grid = DMatrix::from_fn(rep.side(), rep.side(), |r, s| {
        let (r, s) = (r as i64, s as i64);
        (0..n as i64)
            .map(|l| op[(l as usize, wrap(r - l, n))] * roots.get(-(2 * l - r) * s))
            .sum::<Complex64>()
            * norm
    });
    Ok(WignerTable {
        rep: *rep,
        kind: WignerKind::Operator,
        grid,
    })
}

/// Position marginal `v(r) = Σ_s W̃(r, s)`. For a state pair
/// `v(2j) = ψ̄_j φ_j` and odd slots vanish.
pub fn marginal_x(table: &WignerTable) -> Vec<Complex64> {
    table.grid.row_iter().map(|row| row.iter().sum()).collect()
}

/// Momentum marginal `w(s) = Σ_r W̃(r, s)`. For a state pair
/// `w(2j) = (1/N) conj(ψ̂_j) φ̂_j` and odd slots vanish.
pub fn marginal_p(table: &WignerTable) -> Vec<Complex64> {
    table
        .grid
        .column_iter()
        .map(|col| col.iter().sum())
        .collect()
}

/// `Σ_{r,s} α(r, s) W̃(ψ, φ)(r, s)`, which equals `⟨ψ, Op(α) φ⟩`.
pub fn pairing(sym: &SampledSymbol, psi: &State, phi: &State) -> Result<Complex64> {
    let table = wigner_state(sym.rep(), psi, phi)?;
    Ok(sym.grid().component_mul(&table.grid).iter().sum())
}

/// `ψ̃_j = ψ_{N−j}` (indices mod `N`).
pub fn reflected(psi: &State) -> State {
    let n = psi.dim() as i64;
    State::new((0..n).map(|j| psi.at(n - j)).collect()).expect("non-empty state")
}

/// Residuals of the three sign symmetries over all `(m, l) ∈ ℤ_{2N}²`:
/// `W(m+N, l) = (−1)^l W(m, l)`, `W(m, l+N) = (−1)^m W(m, l)`,
/// `W(m+N, l+N) = (−1)^{m+l+N} W(m, l)`.
pub fn symmetry_residuals(grid: &DMatrix<Complex64>) -> [f64; 3] {
    let side = grid.nrows();
    let n = side / 2;
    let mut out = [0.0f64; 3];
    for m in 0..side {
        for l in 0..side {
            let w = grid[(m, l)];
            let (mi, li, ni) = (m as i64, l as i64, n as i64);
            let s1 = (grid[((m + n) % side, l)] - w * parity_sign(li)).norm();
            let s2 = (grid[(m, (l + n) % side)] - w * parity_sign(mi)).norm();
            let s3 =
                (grid[((m + n) % side, (l + n) % side)] - w * parity_sign(mi + li + ni)).norm();
            out[0] = out[0].max(s1);
            out[1] = out[1].max(s2);
            out[2] = out[2].max(s3);
        }
    }
    out
}

/// Largest of the three symmetry residuals.
pub fn check_symmetries(table: &WignerTable) -> f64 {
    symmetry_residuals(&table.grid)
        .into_iter()
        .fold(0.0, f64::max)
}

/// Entrywise distance between two tables' weights.
pub fn table_distance(a: &WignerTable, b: &WignerTable) -> f64 {
    max_abs_diff(&a.grid, &b.grid)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn rows(data: [[f64; 4]; 4], scale: f64) -> DMatrix<Complex64> {
        DMatrix::from_fn(4, 4, |i, j| c(data[i][j] * scale, 0.0))
    }

    #[test]
    fn ground_state_table_at_n2() {
        let rep = Representation::new(0.42, 0.17, 2).unwrap();
        let u0 = State::basis(2, 0);
        let t = wigner_state(&rep, &u0, &u0).unwrap();
        let expected = rows(
            [
                [1.0, 1.0, 1.0, 1.0],
                [0.0; 4],
                [1.0, -1.0, 1.0, -1.0],
                [0.0; 4],
            ],
            0.25,
        );
        assert!(max_abs_diff(t.grid(), &expected) < 1e-15);
        let mx = marginal_x(&t);
        let mp = marginal_p(&t);
        for (got, want) in mx.iter().zip([1.0, 0.0, 0.0, 0.0]) {
            assert!((got - c(want, 0.0)).norm() < 1e-15);
        }
        for (got, want) in mp.iter().zip([0.5, 0.0, 0.5, 0.0]) {
            assert!((got - c(want, 0.0)).norm() < 1e-15);
        }
    }

    #[test]
    fn balanced_state_marginals_at_n2() {
        let rep = Representation::untwisted(2).unwrap();
        let h = std::f64::consts::FRAC_1_SQRT_2;
        let psi = State::new(vec![c(h, 0.0), c(h, 0.0)]).unwrap();
        let t = wigner_state(&rep, &psi, &psi).unwrap();
        for (got, want) in marginal_x(&t).iter().zip([0.5, 0.0, 0.5, 0.0]) {
            assert!((got - c(want, 0.0)).norm() < 1e-15);
        }
        for (got, want) in marginal_p(&t).iter().zip([1.0, 0.0, 0.0, 0.0]) {
            assert!((got - c(want, 0.0)).norm() < 1e-15);
        }
    }

    #[test]
    fn orthogonal_states_have_zero_mass() {
        let rep = Representation::untwisted(3).unwrap();
        let t = wigner_state(&rep, &State::basis(3, 0), &State::basis(3, 1)).unwrap();
        assert!(t.total_mass().norm() < 1e-15);
    }

    #[test]
    fn identity_and_sigma_x_tables() {
        let rep = Representation::untwisted(2).unwrap();
        let id = wigner_operator(&rep, &Operator::identity(2)).unwrap();
        let expected = rows(
            [
                [1.0, 0.0, 1.0, 0.0],
                [0.0; 4],
                [1.0, 0.0, 1.0, 0.0],
                [0.0; 4],
            ],
            0.5,
        );
        assert!(max_abs_diff(id.grid(), &expected) < 1e-15);
        let sx = Operator::from_fn(2, |i, j| if i != j { c(1.0, 0.0) } else { c(0.0, 0.0) });
        let t = wigner_operator(&rep, &sx).unwrap();
        let expected = rows(
            [
                [0.0; 4],
                [1.0, 0.0, -1.0, 0.0],
                [0.0; 4],
                [1.0, 0.0, -1.0, 0.0],
            ],
            0.5,
        );
        assert!(max_abs_diff(t.grid(), &expected) < 1e-15);
    }

    #[test]
    fn fourier_wigner_examples() {
        let rep = Representation::untwisted(2).unwrap();
        let u0 = State::basis(2, 0);
        assert!((fourier_wigner(&rep, &u0, &u0, 1, 0).unwrap() - c(1.0, 0.0)).norm() < 1e-15);
        let psi = State::new(vec![c(0.3, -0.1), c(1.2, 0.4)]).unwrap();
        let phi = State::new(vec![c(-0.7, 0.2), c(0.05, 0.9)]).unwrap();
        let v = fourier_wigner(&rep, &psi, &phi, 0, 0).unwrap();
        assert!((v - psi.inner(&phi)).norm() < 1e-15);
    }

    #[test]
    fn violated_symmetry_is_reported() {
        let rep = Representation::untwisted(3).unwrap();
        let t = wigner_operator(&rep, &Operator::identity(3)).unwrap();
        assert!(check_symmetries(&t) < 1e-15);
        let mut g = t.into_grid();
        g[(4, 1)] += c(1e-3, 0.0);
        let bad = WignerTable::new(rep, WignerKind::Operator, g).unwrap();
        assert!(symmetry_residuals(bad.grid())[0] >= 1e-3 - 1e-15);
    }

    #[test]
    fn dimension_mismatch_is_an_error() {
        let rep = Representation::untwisted(3).unwrap();
        let err = wigner_state(&rep, &State::basis(2, 0), &State::basis(3, 0));
        assert!(matches!(
            err,
            Err(Error::DimensionMismatch {
                expected: 3,
                found: 2
            })
        ));
    }
}
