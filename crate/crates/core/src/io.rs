// Copyright 2026 The torus-weyl Authors
// SPDX-License-Identifier: Apache-2.0

//! JSON interchange and CSV export.
//!
//! Complex numbers travel as `[re, im]` pairs and matrices as flat row-major
//! arrays. Every float is written with 17 significant digits, so writing and
//! re-reading an artifact is bit-exact and identical inputs give
//! byte-identical files. CSV is for people and plotting tools only; nothing
//! reads it back.

use crate::error::{Error, Result};
use crate::rep::{Operator, Representation, State};
use crate::symbols::{SampledSymbol, TrigPolynomial};
use crate::wigner::{marginal_p, marginal_x, WignerKind, WignerTable};
use nalgebra::DMatrix;
use num_complex::Complex64;
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use std::fmt::Write as _;
use std::path::Path;

/// Compact JSON with floats as `{:.16e}`.
struct FixedFloat;

impl serde_json::ser::Formatter for FixedFloat {
    fn write_f64<W: ?Sized + std::io::Write>(
        &mut self,
        writer: &mut W,
        value: f64,
    ) -> std::io::Result<()> {
        write!(writer, "{value:.16e}")
    }

    fn write_f32<W: ?Sized + std::io::Write>(
        &mut self,
        writer: &mut W,
        value: f32,
    ) -> std::io::Result<()> {
        self.write_f64(writer, f64::from(value))
    }
}

/// Serializes with the fixed float format and a trailing newline.
pub fn to_json_string<T: Serialize>(value: &T) -> String {
    let mut buf = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut buf, FixedFloat);
    value.serialize(&mut ser).expect("in-memory serialization");
    buf.push(b'\n');
    String::from_utf8(buf).expect("serde_json emits UTF-8")
}

/// A value with a JSON wire format.
pub trait JsonArtifact: Sized {
    fn to_json(&self) -> String;
    fn from_json(text: &str) -> Result<Self>;

    fn read(path: impl AsRef<Path>) -> Result<Self> {
        Self::from_json(&std::fs::read_to_string(path)?)
    }

    fn write(&self, path: impl AsRef<Path>) -> Result<()> {
        std::fs::write(path, self.to_json())?;
        Ok(())
    }
}

fn parse<T: DeserializeOwned>(text: &str) -> Result<T> {
    Ok(serde_json::from_str(text)?)
}

fn pack(z: &Complex64) -> [f64; 2] {
    [z.re, z.im]
}

fn unpack(pairs: &[[f64; 2]]) -> Vec<Complex64> {
    pairs
        .iter()
        .map(|&[re, im]| Complex64::new(re, im))
        .collect()
}

/// Row-major flattening; nalgebra stores column-major.
fn flatten(m: &DMatrix<Complex64>) -> Vec<[f64; 2]> {
    m.row_iter()
        .flat_map(|row| row.iter().map(pack).collect::<Vec<_>>())
        .collect()
}

fn square_from_flat(pairs: &[[f64; 2]], side: usize) -> Result<DMatrix<Complex64>> {
    if pairs.len() != side * side {
        return Err(Error::DimensionMismatch {
            expected: side * side,
            found: pairs.len(),
        });
    }
    Ok(DMatrix::from_row_slice(side, side, &unpack(pairs)))
}

fn ensure_finite(values: &DMatrix<Complex64>) -> Result<()> {
    match values
        .iter()
        .position(|z| !z.re.is_finite() || !z.im.is_finite())
    {
        Some(k) => Err(Error::NonFinite(k % values.nrows(), k / values.nrows())),
        None => Ok(()),
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TermWire {
    n1: i64,
    n2: i64,
    re: f64,
    im: f64,
}

impl JsonArtifact for TrigPolynomial {
    fn to_json(&self) -> String {
        let terms: Vec<TermWire> = self
            .terms()
            .map(|((n1, n2), z)| TermWire {
                n1,
                n2,
                re: z.re,
                im: z.im,
            })
            .collect();
        to_json_string(&terms)
    }

    /// Repeated frequencies are summed.
    fn from_json(text: &str) -> Result<Self> {
        let terms: Vec<TermWire> = parse(text)?;
        let mut tp = TrigPolynomial::new();
        for (k, t) in terms.iter().enumerate() {
            if !t.re.is_finite() || !t.im.is_finite() {
                return Err(Error::NonFinite(k, 0));
            }
            tp.add_term(t.n1, t.n2, Complex64::new(t.re, t.im));
        }
        Ok(tp)
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GridWire {
    theta1: f64,
    theta2: f64,
    #[serde(rename = "N")]
    n: usize,
    grid: Vec<[f64; 2]>,
}

impl GridWire {
    fn new(rep: &Representation, grid: &DMatrix<Complex64>) -> Self {
        Self {
            theta1: rep.theta1(),
            theta2: rep.theta2(),
            n: rep.dim(),
            grid: flatten(grid),
        }
    }

    fn decode(&self) -> Result<(Representation, DMatrix<Complex64>)> {
        let rep = Representation::new(self.theta1, self.theta2, self.n)?;
        let grid = square_from_flat(&self.grid, rep.side())?;
        ensure_finite(&grid)?;
        Ok((rep, grid))
    }
}

impl JsonArtifact for SampledSymbol {
    fn to_json(&self) -> String {
        to_json_string(&GridWire::new(self.rep(), self.grid()))
    }

    fn from_json(text: &str) -> Result<Self> {
        let (rep, grid) = parse::<GridWire>(text)?.decode()?;
        SampledSymbol::new(rep, grid)
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct WignerWire {
    theta1: f64,
    theta2: f64,
    #[serde(rename = "N")]
    n: usize,
    kind: WignerKind,
    grid: Vec<[f64; 2]>,
}

impl JsonArtifact for WignerTable {
    fn to_json(&self) -> String {
        let rep = self.rep();
        to_json_string(&WignerWire {
            theta1: rep.theta1(),
            theta2: rep.theta2(),
            n: rep.dim(),
            kind: self.kind(),
            grid: flatten(self.grid()),
        })
    }

    fn from_json(text: &str) -> Result<Self> {
        let wire: WignerWire = parse(text)?;
        let (rep, grid) = GridWire {
            theta1: wire.theta1,
            theta2: wire.theta2,
            n: wire.n,
            grid: wire.grid,
        }
        .decode()?;
        WignerTable::new(rep, wire.kind, grid)
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct OperatorWire {
    #[serde(rename = "N")]
    n: usize,
    entries: Vec<[f64; 2]>,
}

impl JsonArtifact for Operator {
    fn to_json(&self) -> String {
        to_json_string(&OperatorWire {
            n: self.dim(),
            entries: flatten(self.matrix()),
        })
    }

    fn from_json(text: &str) -> Result<Self> {
        let wire: OperatorWire = parse(text)?;
        if wire.n == 0 {
            return Err(Error::ZeroDimension);
        }
        if wire.entries.len() != wire.n * wire.n {
            // a flat list of M² entries under a different N is a non-square claim
            return Err(Error::NonSquare(wire.entries.len(), wire.n));
        }
        let m = square_from_flat(&wire.entries, wire.n)?;
        ensure_finite(&m)?;
        Operator::new(m)
    }
}

impl JsonArtifact for State {
    fn to_json(&self) -> String {
        to_json_string(&self.components().iter().map(pack).collect::<Vec<_>>())
    }

    fn from_json(text: &str) -> Result<Self> {
        let pairs: Vec<[f64; 2]> = parse(text)?;
        if let Some(k) = pairs
            .iter()
            .position(|p| !p[0].is_finite() || !p[1].is_finite())
        {
            return Err(Error::NonFinite(k, 0));
        }
        State::new(unpack(&pairs))
    }
}

/// `x,p,re,im` per lattice point, rows in row-major grid order.
pub fn lattice_csv(rep: &Representation, grid: &DMatrix<Complex64>) -> String {
    let mut out = String::from("x,p,re,im\n");
    for r in 0..grid.nrows() {
        for s in 0..grid.ncols() {
            let (x, p) = rep.lattice_point(r, s);
            let z = grid[(r, s)];
            writeln!(out, "{x:.16e},{p:.16e},{:.16e},{:.16e}", z.re, z.im)
                .expect("write to String");
        }
    }
    out
}

/// Both marginals against their lattice coordinates, one row per slot.
pub fn marginals_csv(table: &WignerTable) -> String {
    let rep = table.rep();
    let (mx, mp) = (marginal_x(table), marginal_p(table));
    let mut out = String::from("slot,x,x_re,x_im,p,p_re,p_im\n");
    for (k, (a, b)) in mx.iter().zip(&mp).enumerate() {
        let (x, p) = rep.lattice_point(k, k);
        writeln!(
            out,
            "{k},{x:.16e},{:.16e},{:.16e},{p:.16e},{:.16e},{:.16e}",
            a.re, a.im, b.re, b.im
        )
        .expect("write to String");
    }
    out
}
