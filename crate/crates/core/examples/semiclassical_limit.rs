// Copyright 2026 The torus-weyl Authors
// SPDX-License-Identifier: Apache-2.0

//! The scaled Moyal bracket (2πN/i){a, b}_♯ approaches the Poisson bracket
//! at rate N⁻².

use std::f64::consts::PI;
use torus_weyl::acceptance::semiclassical_pair;
use torus_weyl::moyal::semiclassical_residual;
use torus_weyl::{Complex64, Representation, TrigPolynomial};

fn main() -> torus_weyl::Result<()> {
    let (a, b) = semiclassical_pair();
    let ex = TrigPolynomial::monomial(1, 0, Complex64::new(1.0, 0.0));
    let ep = TrigPolynomial::monomial(0, 1, Complex64::new(1.0, 0.0));

    println!(
        "{:>4} {:>12} {:>8} {:>12} {:>12}",
        "N", "residual", "ratio", "plane waves", "closed form"
    );
    let mut previous: Option<f64> = None;
    for n in [2, 4, 8, 16, 32] {
        let rep = Representation::new(0.5, 0.5, n)?;
        let r = semiclassical_residual(&a, &b, &rep);
        let x = PI / n as f64;
        let closed = 4.0 * PI * PI * (1.0 - x.sin() / x);
        let ratio = previous
            .map(|p| format!("{:.4}", r / p))
            .unwrap_or_default();
        println!(
            "{n:>4} {r:>12.4e} {ratio:>8} {:>12.4e} {closed:>12.4e}",
            semiclassical_residual(&ex, &ep, &rep)
        );
        previous = Some(r);
    }
    Ok(())
}
