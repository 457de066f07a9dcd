// Copyright 2026 The torus-weyl Authors
// SPDX-License-Identifier: Apache-2.0

use std::f64::consts::PI;
use torus_weyl::dequantize::{dequantize, pauli, pauli_symbols};
use torus_weyl::moyal::{evolve_operator, evolve_symbol, HamiltonianSystem};
use torus_weyl::quantize::quantize_sampled;
use torus_weyl::symbols::sample;
use torus_weyl::{Complex64, Representation, State};

#[test]
fn spin_precession_period_matches_the_eigen_gap() {
    let rep = Representation::untwisted(2).unwrap();
    let p = pauli(&rep).unwrap();
    let h = sample(&pauli_symbols(&rep).unwrap().z, &rep).map(|z| Complex64::new(z.re, 0.0));
    let sys = HamiltonianSystem::new(h).unwrap();
    // Re α_z = cos 2πx quantizes to σz: eigenvalues ±1, gap 2
    assert!(sys.operator().max_abs_diff(&p.z) < 1e-15);

    let r = std::f64::consts::FRAC_1_SQRT_2;
    let plus = State::new(vec![Complex64::new(r, 0.0), Complex64::new(r, 0.0)]).unwrap();
    let sx0 = dequantize(&rep, &p.x).unwrap();
    // angular frequency 2πN·gap = 8π, so ⟨σx⟩ has period 1/4
    for k in 0..=8 {
        let t = k as f64 / 32.0;
        let exact = evolve_operator(&sys, &p.x, t).unwrap();
        let expect = (8.0 * PI * t).cos();
        assert!(
            (plus.inner(&exact.apply(&plus)).re - expect).abs() < 1e-12,
            "t = {t}"
        );
        let via_symbol = quantize_sampled(&evolve_symbol(&sys, &sx0, t, 400).unwrap());
        assert!(
            (plus.inner(&via_symbol.apply(&plus)).re - expect).abs() < 1e-7,
            "t = {t}"
        );
    }
}

#[test]
fn evolution_preserves_products() {
    let rep = Representation::new(0.3, 0.6, 3).unwrap();
    let h = sample(&torus_weyl::acceptance::harper(0.5), &rep).map(|z| Complex64::new(z.re, 0.0));
    let sys = HamiltonianSystem::new(h).unwrap();
    let mut rng = <rand_chacha::ChaCha8Rng as rand::SeedableRng>::seed_from_u64(1);
    let a = torus_weyl::acceptance::random_operator(&mut rng, 3);
    let b = torus_weyl::acceptance::random_operator(&mut rng, 3);
    let t = 0.37;
    let lhs = evolve_operator(&sys, &(&a * &b), t).unwrap();
    let rhs = &evolve_operator(&sys, &a, t).unwrap() * &evolve_operator(&sys, &b, t).unwrap();
    assert!(lhs.max_abs_diff(&rhs) < 1e-12);
}
