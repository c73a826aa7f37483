//! Plain-text coefficient files.
//!
//! ```text
//! maxsurf-coefficients 1
//! annulus 0.0000000000000000e0 inf
//! [h]
//! a 1 5.0000000000000000e-1 0.0000000000000000e0
//! b 1 -5.0000000000000000e-1 0.0000000000000000e0
//! [w]
//! log 1.0000000000000000e0 0.0000000000000000e0
//! ```
//!
//! Each function lists its nonzero log coefficient, then nonzero `a_n` and
//! `b_n` in ascending `n`. Numbers carry 17 significant digits, so writing a
//! loaded file reproduces it byte for byte.

use std::fmt::Write as _;

use maxsurf_core::{Annulus, Complex64, HarmonicOnAnnulus, MaximalSurface};

const MAGIC: &str = "maxsurf-coefficients 1";

fn num(x: f64) -> String {
    format!("{x:.16e}")
}

fn write_harmonic(out: &mut String, name: &str, f: &HarmonicOnAnnulus) {
    let zero = Complex64::new(0.0, 0.0);
    let _ = writeln!(out, "[{name}]");
    let log = f.log_coeff();
    if log != zero {
        let _ = writeln!(out, "log {} {}", num(log.re), num(log.im));
    }
    for (n, a, _) in f.coefficients() {
        if a != zero {
            let _ = writeln!(out, "a {n} {} {}", num(a.re), num(a.im));
        }
    }
    for (n, _, b) in f.coefficients() {
        if b != zero {
            let _ = writeln!(out, "b {n} {} {}", num(b.re), num(b.im));
        }
    }
}

pub fn to_text(surface: &MaximalSurface) -> String {
    let annulus = surface.annulus();
    let mut out = format!("{MAGIC}\nannulus {} {}\n", num(annulus.inner()), num(annulus.outer()));
    write_harmonic(&mut out, "h", surface.h());
    write_harmonic(&mut out, "w", surface.w());
    out
}

#[derive(Default)]
struct Entries {
    log: Complex64,
    a: Vec<(i64, Complex64)>,
    b: Vec<(i64, Complex64)>,
}

impl Entries {
    fn build(&self, annulus: Annulus) -> HarmonicOnAnnulus {
        let band = self.a.iter().chain(&self.b).map(|(n, _)| n.unsigned_abs() as usize).max().unwrap_or(0);
        let mut f = HarmonicOnAnnulus::zero(band.max(1), annulus).with_log(self.log);
        for &(n, v) in &self.a {
            f.set_holo(n, v);
        }
        for &(n, v) in &self.b {
            f.set_antiholo(n, v);
        }
        f
    }
}

pub fn from_text(text: &str) -> Result<MaximalSurface, String> {
    let mut lines = text.lines().enumerate();
    match lines.next() {
        Some((_, l)) if l == MAGIC => {}
        _ => return Err(format!("missing header {MAGIC:?}")),
    }
    let mut annulus = None;
    let mut h = None::<Entries>;
    let mut w = None::<Entries>;
    let mut current: Option<char> = None;
    for (i, line) in lines {
        let at = |e: String| format!("line {}: {e}", i + 1);
        let fields: Vec<&str> = line.split_whitespace().collect();
        let float = |k: usize| -> Result<f64, String> {
            fields
                .get(k)
                .ok_or_else(|| at("missing field".into()))?
                .parse::<f64>()
                .map_err(|e| at(e.to_string()))
        };
        match fields.as_slice() {
            [] => continue,
            ["annulus", _, _] => {
                let a = Annulus::new(float(1)?, float(2)?).map_err(|e| at(e.to_string()))?;
                annulus = Some(a);
            }
            ["[h]"] if h.is_none() => {
                h = Some(Entries::default());
                current = Some('h');
            }
            ["[w]"] if w.is_none() => {
                w = Some(Entries::default());
                current = Some('w');
            }
            [kind @ ("log" | "a" | "b"), ..] => {
                let entries = match current {
                    Some('h') => h.as_mut(),
                    Some('w') => w.as_mut(),
                    _ => None,
                }
                .ok_or_else(|| at("coefficient outside a [h] or [w] section".into()))?;
                if *kind == "log" {
                    if fields.len() != 3 {
                        return Err(at("expected: log re im".into()));
                    }
                    entries.log = Complex64::new(float(1)?, float(2)?);
                } else {
                    if fields.len() != 4 {
                        return Err(at(format!("expected: {kind} n re im")));
                    }
                    let n: i64 = fields[1].parse().map_err(|e: std::num::ParseIntError| at(e.to_string()))?;
                    if *kind == "b" && n == 0 {
                        return Err(at("b_0 must be zero".into()));
                    }
                    let v = Complex64::new(float(2)?, float(3)?);
                    let list = if *kind == "a" { &mut entries.a } else { &mut entries.b };
                    if list.iter().any(|(m, _)| *m == n) {
                        return Err(at(format!("{kind}_{n} given twice")));
                    }
                    list.push((n, v));
                }
            }
            _ => return Err(at(format!("unrecognized line {line:?}"))),
        }
    }
    let annulus = annulus.ok_or("missing annulus line")?;
    let h = h.ok_or("missing [h] section")?.build(annulus);
    let w = w.ok_or("missing [w] section")?.build(annulus);
    MaximalSurface::new(h, w).map_err(|e| e.to_string())
}
