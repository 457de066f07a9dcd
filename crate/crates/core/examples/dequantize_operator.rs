// Copyright 2026 The torus-weyl Authors
// SPDX-License-Identifier: Apache-2.0

//! Dequantize a random operator and quantize the canonical symbol back.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use torus_weyl::acceptance::random_operator;
use torus_weyl::dequantize::{canonical_class, dequantize};
use torus_weyl::quantize::quantize_sampled;
use torus_weyl::symbols::delta;
use torus_weyl::wigner::symmetry_residuals;
use torus_weyl::Representation;

fn main() -> torus_weyl::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for n in [2, 3, 5, 8] {
        let rep = Representation::new(0.7, 0.2, n)?;
        let a = random_operator(&mut rng, n);
        let sym = dequantize(&rep, &a)?;
        let back = quantize_sampled(&sym);
        let class = canonical_class(&rep, &a)?;
        let sym_res = symmetry_residuals(sym.grid())
            .into_iter()
            .fold(0.0, f64::max);
        println!(
            "N = {n}: round trip {:.1e}, Δ(symbol) vs class {:.1e}, symmetry residual {:.1e}",
            back.max_abs_diff(&a),
            delta(&sym).max_abs_diff(&class),
            sym_res
        );
    }
    Ok(())
}
