// Copyright 2026 The torus-weyl Authors
// SPDX-License-Identifier: Apache-2.0

//! Quantize the same trigonometric polynomial through the Fourier route and
//! through lattice samples, for several dimensions.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use torus_weyl::acceptance::random_trig_polynomial;
use torus_weyl::quantize::{quantize_fourier, quantize_sampled};
use torus_weyl::symbols::sample;
use torus_weyl::Representation;

fn main() -> torus_weyl::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    println!("{:>3} {:>6} {:>14}", "N", "terms", "route gap");
    for n in 1..=8 {
        let rep = Representation::new(0.3, 0.85, n)?;
        let tp = random_trig_polynomial(&mut rng, n);
        let fourier = quantize_fourier(&tp, &rep);
        let sampled = quantize_sampled(&sample(&tp, &rep));
        println!(
            "{n:>3} {:>6} {:>14.3e}",
            tp.len(),
            fourier.max_abs_diff(&sampled)
        );
    }
    Ok(())
}
