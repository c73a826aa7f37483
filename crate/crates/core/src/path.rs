//! Piecewise-smooth integration paths in the punctured plane.

use std::f64::consts::PI;

use num_complex::Complex64;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum PathPiece {
    Segment { from: Complex64, to: Complex64 },
    /// Circular arc of `radius` about the origin, angles in radians.
    Arc { radius: f64, from: f64, to: f64 },
}

impl PathPiece {
    /// Point at parameter `t ∈ [0, 1]`.
    pub fn point(&self, t: f64) -> Complex64 {
        match *self {
            PathPiece::Segment { from, to } => from + (to - from) * t,
            PathPiece::Arc { radius, from, to } => Complex64::from_polar(radius, from + (to - from) * t),
        }
    }

    /// `dz/dt`.
    pub fn velocity(&self, t: f64) -> Complex64 {
        match *self {
            PathPiece::Segment { from, to } => to - from,
            PathPiece::Arc { radius, from, to } => {
                let angle = from + (to - from) * t;
                Complex64::new(0.0, to - from) * Complex64::from_polar(radius, angle)
            }
        }
    }

    pub fn start(&self) -> Complex64 {
        self.point(0.0)
    }

    pub fn end(&self) -> Complex64 {
        self.point(1.0)
    }

    fn is_trivial(&self) -> bool {
        match *self {
            PathPiece::Segment { from, to } => from == to,
            PathPiece::Arc { from, to, .. } => from == to,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct Path {
    pieces: Vec<PathPiece>,
}

impl Path {
    pub fn new(pieces: Vec<PathPiece>) -> Self {
        Self {
            pieces: pieces.into_iter().filter(|p| !p.is_trivial()).collect(),
        }
    }

    /// Straight segments through `points` in order.
    pub fn polyline(points: &[Complex64]) -> Self {
        Self::new(
            points
                .windows(2)
                .map(|w| PathPiece::Segment { from: w[0], to: w[1] })
                .collect(),
        )
    }

    /// Arc along `|z| = |from|` to the angle of `to` (the shorter way round),
    /// then radially out or in to `to`. Stays inside any annulus containing
    /// both endpoints.
    pub fn arc_then_radial(from: Complex64, to: Complex64) -> Self {
        let radius = from.norm();
        let a0 = from.arg();
        let mut delta = to.arg() - a0;
        if delta > PI {
            delta -= 2.0 * PI;
        } else if delta < -PI {
            delta += 2.0 * PI;
        }
        let turn = Complex64::from_polar(radius, a0 + delta);
        let corner = if to.norm() == 0.0 { turn } else { to * (radius / to.norm()) };
        Self::new(vec![
            PathPiece::Arc {
                radius,
                from: a0,
                to: a0 + delta,
            },
            PathPiece::Segment { from: corner, to },
        ])
    }

    /// Arc along `|z| = radius` from angle 0 to `angle`.
    pub fn arc_from_axis(radius: f64, angle: f64) -> Self {
        Self::new(vec![PathPiece::Arc {
            radius,
            from: 0.0,
            to: angle,
        }])
    }

    pub fn pieces(&self) -> &[PathPiece] {
        &self.pieces
    }

    pub fn is_empty(&self) -> bool {
        self.pieces.is_empty()
    }
}
