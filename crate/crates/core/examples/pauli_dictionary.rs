// Copyright 2026 The torus-weyl Authors
// SPDX-License-Identifier: Apache-2.0

//! Spin 1/2: Wigner tables of the Pauli matrices, their reduced symbols,
//! and the closed-form symbols that quantize back to them.

use torus_weyl::dequantize::{canonical_class, pauli, pauli_generator_deviation, pauli_symbols};
use torus_weyl::quantize::quantize_fourier;
use torus_weyl::wigner::wigner_operator;
use torus_weyl::{Operator, Representation};

fn show(name: &str, m: &nalgebra::DMatrix<torus_weyl::Complex64>) {
    println!("{name}:");
    for row in m.row_iter() {
        let cells: Vec<String> = row.iter().map(|z| format!("{:+.3}", z.re)).collect();
        println!("  {}", cells.join(" "));
    }
}

fn main() -> torus_weyl::Result<()> {
    let rep = Representation::new(0.25, 0.6, 2)?;
    let ops = pauli(&rep)?;
    let syms = pauli_symbols(&rep)?;
    let names = ["I", "σx", "σy", "σz"];

    for ((name, op), sym) in names.iter().zip(ops.as_array()).zip(syms.as_array()) {
        let table = wigner_operator(&rep, op)?;
        show(&format!("W̃₂({name})"), table.grid());
        show(
            &format!("reduced symbol of {name}"),
            canonical_class(&rep, op)?.grid(),
        );
        let back: Operator = quantize_fourier(sym, &rep);
        println!(
            "  closed-form symbol quantizes back to within {:.1e}\n",
            back.max_abs_diff(op)
        );
    }
    println!(
        "generator dictionary deviation: {:.1e}",
        pauli_generator_deviation(&rep)?
    );
    Ok(())
}
