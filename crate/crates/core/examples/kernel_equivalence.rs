// Copyright 2026 The torus-weyl Authors
// SPDX-License-Identifier: Apache-2.0

//! Symbols that differ by an element of ker Δ quantize to the same operator.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use torus_weyl::quantize::{operator_from_reduced, quantize_sampled};
use torus_weyl::symbols::{delta, delta_map_matrix, equivalent_default, kernel_element};
use torus_weyl::{rank, Representation, SampledSymbol};

fn main() -> torus_weyl::Result<()> {
    for n in 1..=6 {
        let r = rank(&delta_map_matrix(n), 1e-10);
        println!("N = {n}: rank Δ = {r}, nullity = {}", 4 * n * n - r);
    }

    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let rep = Representation::new(0.1, 0.2, 4)?;
    let alpha = SampledSymbol::random(rep, &mut rng);
    let beta = alpha.add(&kernel_element(&rep, 99))?;
    println!(
        "\nα and α + k: max grid difference {:.3}",
        alpha.max_abs_diff(&beta)
    );
    println!("equivalent: {}", equivalent_default(&alpha, &beta)?);
    println!(
        "Op(α) vs Op(α + k): {:.1e}",
        quantize_sampled(&alpha).max_abs_diff(&quantize_sampled(&beta))
    );
    println!(
        "Op(α) from Δ(α) alone: {:.1e}",
        operator_from_reduced(&delta(&alpha)).max_abs_diff(&quantize_sampled(&alpha))
    );
    Ok(())
}
