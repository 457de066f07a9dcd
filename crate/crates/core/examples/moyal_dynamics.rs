// Copyright 2026 The torus-weyl Authors
// SPDX-License-Identifier: Apache-2.0

//! Heisenberg dynamics of a symbol under a Harper Hamiltonian, integrated with
//! the Moyal bracket and compared with exact operator evolution.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use torus_weyl::acceptance::harper;
use torus_weyl::moyal::{evolution_defect, HamiltonianSystem};
use torus_weyl::symbols::sample;
use torus_weyl::{Representation, SampledSymbol};

fn main() -> torus_weyl::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let rep = Representation::new(0.0, 0.0, 4)?;
    let h = sample(&harper(0.25), &rep).map(|z| z.re.into());
    let sys = HamiltonianSystem::new(h)?;
    let a0 = SampledSymbol::random(rep, &mut rng);

    println!("{:>6} {:>12} {:>8}", "steps", "defect", "ratio");
    let mut previous: Option<f64> = None;
    for steps in [125, 250, 500, 1000, 2000] {
        let d = evolution_defect(&sys, &a0, 1.0, steps)?;
        let ratio = previous
            .map(|p| format!("{:.2}", p / d))
            .unwrap_or_default();
        println!("{steps:>6} {d:>12.3e} {ratio:>8}");
        previous = Some(d);
    }
    Ok(())
}
