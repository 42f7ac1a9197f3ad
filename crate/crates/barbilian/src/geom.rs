//! Elementary planar/spatial geometry shared by every module.

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// A point in the plane.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Point2 {
    pub x: f64,
    pub y: f64,
}

impl Point2 {
    pub fn new(x: f64, y: f64) -> Self {
        debug_assert!(x.is_finite() && y.is_finite());
        Point2 { x, y }
    }

    pub fn dist(self, other: Point2) -> f64 {
        (self.x - other.x).hypot(self.y - other.y)
    }

    pub fn norm(self) -> f64 {
        self.x.hypot(self.y)
    }
}

impl From<(f64, f64)> for Point2 {
    fn from((x, y): (f64, f64)) -> Self {
        Point2::new(x, y)
    }
}

/// A point in space.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Point3 {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl Point3 {
    pub fn new(x: f64, y: f64, z: f64) -> Self {
        debug_assert!(x.is_finite() && y.is_finite() && z.is_finite());
        Point3 { x, y, z }
    }

    pub fn norm(self) -> f64 {
        (self.x * self.x + self.y * self.y + self.z * self.z).sqrt()
    }

    pub fn dot(self, o: Point3) -> f64 {
        self.x * o.x + self.y * o.y + self.z * o.z
    }

    pub fn cross(self, o: Point3) -> Point3 {
        Point3 {
            x: self.y * o.z - self.z * o.y,
            y: self.z * o.x - self.x * o.z,
            z: self.x * o.y - self.y * o.x,
        }
    }

    pub fn scale(self, c: f64) -> Point3 {
        Point3 { x: c * self.x, y: c * self.y, z: c * self.z }
    }

    pub fn add(self, o: Point3) -> Point3 {
        Point3 { x: self.x + o.x, y: self.y + o.y, z: self.z + o.z }
    }

    pub fn sub(self, o: Point3) -> Point3 {
        Point3 { x: self.x - o.x, y: self.y - o.y, z: self.z - o.z }
    }

    /// Planar shadow (drops the z coordinate).
    pub fn xy(self) -> Point2 {
        Point2 { x: self.x, y: self.y }
    }
}

impl From<(f64, f64, f64)> for Point3 {
    fn from((x, y, z): (f64, f64, f64)) -> Self {
        Point3::new(x, y, z)
    }
}

/// A point of either dimension; admissible points and boundary points are
/// planar for the 2-D domains and spatial for the two 3-D domains.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Point {
    Planar(Point2),
    Spatial(Point3),
}

impl Point {
    pub fn planar(self) -> Result<Point2> {
        match self {
            Point::Planar(p) => Ok(p),
            Point::Spatial(_) => Err(Error::OutsideDomain(
                "expected a planar point for a planar domain".into(),
            )),
        }
    }

    pub fn spatial(self) -> Result<Point3> {
        match self {
            Point::Spatial(p) => Ok(p),
            Point::Planar(_) => Err(Error::OutsideDomain(
                "expected a spatial point for a 3-D domain".into(),
            )),
        }
    }
}

impl From<Point2> for Point {
    fn from(p: Point2) -> Self {
        Point::Planar(p)
    }
}

impl From<Point3> for Point {
    fn from(p: Point3) -> Self {
        Point::Spatial(p)
    }
}

impl From<(f64, f64)> for Point {
    fn from(p: (f64, f64)) -> Self {
        Point::Planar(p.into())
    }
}

impl From<(f64, f64, f64)> for Point {
    fn from(p: (f64, f64, f64)) -> Self {
        Point::Spatial(p.into())
    }
}

impl Serialize for Point {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Point::Planar(p) => [p.x, p.y].serialize(s),
            Point::Spatial(p) => [p.x, p.y, p.z].serialize(s),
        }
    }
}

/// A non-zero direction in the plane. Only the carried line matters for
/// tangent-circle constructions; the velocity-dependent quadrant tensor also
/// uses the component signs.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Direction2 {
    dx: f64,
    dy: f64,
}

impl Direction2 {
    pub fn new(dx: f64, dy: f64) -> Result<Self> {
        if !(dx.is_finite() && dy.is_finite()) || (dx == 0.0 && dy == 0.0) {
            return Err(Error::InvalidParameter(format!(
                "direction ({dx}, {dy}) must be finite and non-zero"
            )));
        }
        Ok(Direction2 { dx, dy })
    }

    pub fn dx(self) -> f64 {
        self.dx
    }

    pub fn dy(self) -> f64 {
        self.dy
    }

    pub fn norm(self) -> f64 {
        self.dx.hypot(self.dy)
    }

    /// Unit vector along the direction.
    pub fn unit(self) -> (f64, f64) {
        let n = self.norm();
        (self.dx / n, self.dy / n)
    }

    /// Slope of the carried line.
    pub fn slope(self) -> Slope {
        if self.dx == 0.0 {
            Slope::Vertical
        } else {
            Slope::Finite(self.dy / self.dx)
        }
    }
}

/// Slope of a line: finite `m` or vertical.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Slope {
    Finite(f64),
    Vertical,
}

impl Slope {
    /// Canonical frame of the carried line: a unit tangent with `dx > 0`
    /// (or `(0, 1)` for vertical lines) and the unit normal obtained by a
    /// quarter turn to the left. The "plus" tangent circle always sits on the
    /// side of that normal, which makes the plus/minus labels deterministic
    /// per line rather than per direction sign.
    pub fn frame(self) -> ((f64, f64), (f64, f64)) {
        match self {
            Slope::Vertical => ((0.0, 1.0), (-1.0, 0.0)),
            Slope::Finite(m) => {
                let w = (m * m + 1.0).sqrt();
                ((1.0 / w, m / w), (-m / w, 1.0 / w))
            }
        }
    }
}

impl From<Direction2> for Slope {
    fn from(d: Direction2) -> Slope {
        d.slope()
    }
}

pub(crate) fn rot90(v: (f64, f64)) -> (f64, f64) {
    (-v.1, v.0)
}

/// Great-circle distance between two points on the sphere of radius `r`
/// centred at the origin. Inputs need not be exactly on the sphere; they are
/// projected radially.
pub fn great_circle_distance(a: Point3, b: Point3, r: f64) -> f64 {
    let na = a.norm();
    let nb = b.norm();
    debug_assert!(na > 0.0 && nb > 0.0);
    let dot = a.dot(b) / (na * nb);
    let cross = a.cross(b).norm() / (na * nb);
    r * cross.atan2(dot)
}
