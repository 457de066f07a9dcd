// Copyright 2026 The torus-weyl Authors
// SPDX-License-Identifier: Apache-2.0

//! Wigner table of a qutrit state: marginals, ghost lattice, pairing identity.

use torus_weyl::quantize::quantize_sampled;
use torus_weyl::symbols::sample;
use torus_weyl::wigner::{marginal_p, marginal_x, pairing, symmetry_residuals, wigner_state};
use torus_weyl::{Complex64, Representation, State, TrigPolynomial};

fn main() -> torus_weyl::Result<()> {
    let rep = Representation::new(0.0, 0.5, 3)?;
    let psi = State::new(vec![
        Complex64::new(0.6, 0.0),
        Complex64::new(0.0, 0.48),
        Complex64::new(-0.64, 0.0),
    ])?
    .normalized();
    let table = wigner_state(&rep, &psi, &psi)?;

    println!("W̃(ψ) real part (rows r, columns s):");
    for row in table.grid().row_iter() {
        let cells: Vec<String> = row.iter().map(|z| format!("{:+.4}", z.re)).collect();
        println!("  {}", cells.join(" "));
    }
    let fmt = |v: Vec<Complex64>| {
        v.iter()
            .map(|z| format!("{:.4}", z.re))
            .collect::<Vec<_>>()
            .join(" ")
    };
    println!("x-marginal: {}", fmt(marginal_x(&table)));
    println!("p-marginal: {}", fmt(marginal_p(&table)));
    println!(
        "|ψ_j|²:     {}",
        psi.components()
            .iter()
            .map(|z| format!("{:.4}", z.norm_sqr()))
            .collect::<Vec<_>>()
            .join("  ")
    );
    println!("total mass: {:.6}", table.total_mass().re);
    println!("symmetry residuals: {:?}", symmetry_residuals(table.grid()));

    // ⟨ψ, Op(α) ψ⟩ as a phase-space average
    let alpha = TrigPolynomial::monomial(1, 0, Complex64::new(1.0, 0.0)).with_term(
        -1,
        0,
        Complex64::new(1.0, 0.0),
    );
    let sym = sample(&alpha, &rep);
    let avg = pairing(&sym, &psi, &psi)?;
    let direct = psi.inner(&quantize_sampled(&sym).apply(&psi));
    println!(
        "⟨2cos 2πx⟩: phase space {:.6}, matrix element {:.6}",
        avg.re, direct.re
    );
    Ok(())
}
