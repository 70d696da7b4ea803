//! Rays, triangles and the nearest-hit search.

use crate::vecmath::Vec3;

/// Initial distance for the nearest-hit fold. Larger than any real hit in a
/// scene that fits inside a billion world units.
pub const MAX_DISTANCE: f64 = 999_999_999_999.9;

/// Determinants at or below this magnitude are treated as a ray parallel to
/// the triangle plane.
pub const DETERMINANT_EPSILON: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Ray {
    pub origin: Vec3,
    /// Unit length for every ray the camera produces.
    pub direction: Vec3,
}

impl Ray {
    pub fn new(origin: Vec3, direction: Vec3) -> Self {
        Ray { origin, direction }
    }

    #[inline]
    pub fn at(&self, t: f64) -> Vec3 {
        self.origin + self.direction * t
    }
}

/// A flat-colored triangle. Degenerate triangles are allowed but never hit.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Triangle {
    pub a: Vec3,
    pub b: Vec3,
    pub c: Vec3,
    pub color: Vec3,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IntersectionRecord {
    pub t: f64,
    pub position: Vec3,
    pub normal: Vec3,
    pub color: Vec3,
}

impl IntersectionRecord {
    /// The "nothing hit yet" record: `t` is [`MAX_DISTANCE`], everything else zero.
    pub const fn sentinel() -> Self {
        IntersectionRecord {
            t: MAX_DISTANCE,
            position: Vec3::ZERO,
            normal: Vec3::ZERO,
            color: Vec3::ZERO,
        }
    }
}

impl Default for IntersectionRecord {
    fn default() -> Self {
        IntersectionRecord::sentinel()
    }
}

/// Outcome of an intersection query. On a miss `record` is whatever the
/// caller started with (the sentinel for a single triangle).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HitResult {
    pub hit: bool,
    pub record: IntersectionRecord,
}

impl HitResult {
    pub const fn miss(record: IntersectionRecord) -> Self {
        HitResult { hit: false, record }
    }
}

impl Triangle {
    pub const fn new(a: Vec3, b: Vec3, c: Vec3, color: Vec3) -> Self {
        Triangle { a, b, c, color }
    }

    /// Geometric normal from the vertex winding, or `None` when degenerate.
    pub fn normal(&self) -> Option<Vec3> {
        (self.b - self.a).cross(self.c - self.a).normalize().ok()
    }

    /// Moller-Trumbore distance along `ray`, if the ray hits.
    ///
    /// Both faces are hittable, the triangle is closed (edges count) and only
    /// `t > 0` is accepted.
    #[inline]
    pub fn hit_distance(&self, ray: &Ray) -> Option<f64> {
        let edge1 = self.b - self.a;
        let edge2 = self.c - self.a;
        let pvec = ray.direction.cross(edge2);
        let det = edge1.dot(pvec);
        if !(det.abs() > DETERMINANT_EPSILON) {
            return None;
        }
        let inv_det = 1.0 / det;

        let tvec = ray.origin - self.a;
        let u = tvec.dot(pvec) * inv_det;
        if !(0.0..=1.0).contains(&u) {
            return None;
        }

        let qvec = tvec.cross(edge1);
        let v = ray.direction.dot(qvec) * inv_det;
        if v < 0.0 || u + v > 1.0 {
            return None;
        }

        let t = edge2.dot(qvec) * inv_det;
        (t > 0.0 && self.normal().is_some()).then_some(t)
    }

    /// Full intersection record for `ray`, or a miss carrying the sentinel.
    pub fn intersect(&self, ray: &Ray) -> HitResult {
        match (self.hit_distance(ray), self.normal()) {
            (Some(t), Some(normal)) => HitResult {
                hit: true,
                record: IntersectionRecord {
                    t,
                    position: ray.at(t),
                    normal,
                    color: self.color,
                },
            },
            _ => HitResult::miss(IntersectionRecord::sentinel()),
        }
    }
}

/// Nearest hit of `ray` against `triangles` that is closer than `init.t`.
///
/// Returns `(false, init)` when nothing qualifies. Among equal distances the
/// earliest triangle in the slice wins.
pub fn intersect_ray_triangles(
    ray: &Ray,
    triangles: &[Triangle],
    init: IntersectionRecord,
) -> HitResult {
    let nearest = triangles
        .iter()
        .fold(None::<(&Triangle, f64)>, |best, tri| {
            let limit = best.map_or(init.t, |(_, t)| t);
            match tri.hit_distance(ray) {
                Some(t) if t > 0.0 && t < limit => Some((tri, t)),
                _ => best,
            }
        });
    match nearest {
        Some((tri, _)) => tri.intersect(ray),
        None => HitResult::miss(init),
    }
}
