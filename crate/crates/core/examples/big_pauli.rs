// Copyright 2026 The torus-weyl Authors
// SPDX-License-Identifier: Apache-2.0

//! The N-dimensional Pauli basis B^[r,s] and the symbols that quantize to it.

use torus_weyl::dequantize::{big_pauli, big_pauli_symbol, canonical_class};
use torus_weyl::quantize::quantize_fourier;
use torus_weyl::symbols::sample;
use torus_weyl::Representation;

fn main() -> torus_weyl::Result<()> {
    let n = 3;
    let rep = Representation::new(0.4, 0.1, n)?;
    let b = big_pauli(&rep, 1, 2)?;
    println!("B^[1,2] for N = {n}:");
    for row in b.matrix().row_iter() {
        let cells: Vec<String> = row
            .iter()
            .map(|z| format!("{:+.3}{:+.3}i", z.re, z.im))
            .collect();
        println!("  {}", cells.join("  "));
    }

    let beta = big_pauli_symbol(&rep, 1, 2)?;
    let spike = sample(&beta, &rep);
    println!("\nβ^[1,2] sampled: {:.3} at (1,2)", spike.grid()[(1, 2)].re);
    println!(
        "reduced class of B^[1,2]:\n{:.3}",
        canonical_class(&rep, &b)?.grid().map(|z| z.re)
    );

    let mut worst = 0.0f64;
    for r in 0..2 * n {
        for s in 0..2 * n {
            let op = big_pauli(&rep, r, s)?;
            worst =
                worst.max(quantize_fourier(&big_pauli_symbol(&rep, r, s)?, &rep).max_abs_diff(&op));
        }
    }
    println!("quantize_fourier(β^[r,s]) vs B^[r,s], all r, s < 2N: {worst:.1e}");
    Ok(())
}
