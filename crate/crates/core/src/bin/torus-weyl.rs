// Copyright 2026 The torus-weyl Authors
// SPDX-License-Identifier: Apache-2.0

fn main() {
    std::process::exit(torus_weyl::cli::run(std::env::args_os()));
}
