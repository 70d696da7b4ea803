//! Test-only oracles and fixtures. Nothing here calls into the intersection,
//! camera or PPM code it is used to check.
#![allow(dead_code)]

use std::fmt::Write as _;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use raytrace::{HitResult, IntersectionRecord, Ray, Triangle, Vec3};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_vec(rng: &mut impl Rng, lo: f64, hi: f64) -> Vec3 {
    Vec3::new(
        rng.random_range(lo..hi),
        rng.random_range(lo..hi),
        rng.random_range(lo..hi),
    )
}

pub fn random_unit(rng: &mut impl Rng) -> Vec3 {
    loop {
        let v = random_vec(rng, -1.0, 1.0);
        let len2 = v.x * v.x + v.y * v.y + v.z * v.z;
        if len2 > 1e-4 && len2 <= 1.0 {
            return v / len2.sqrt();
        }
    }
}

pub fn random_color(rng: &mut impl Rng) -> Vec3 {
    random_vec(rng, 0.0, 1.0)
}

type V = [f64; 3];

fn sub(a: V, b: V) -> V {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2]]
}

fn dot(a: V, b: V) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

fn cross(a: V, b: V) -> V {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

/// Verdict of the plane-equation oracle.
#[derive(Debug, Clone, Copy)]
pub struct OracleHit {
    pub hit: bool,
    pub t: f64,
    /// Within `band` of a decision boundary (parallel ray, triangle edge or
    /// t = 0), where either verdict is acceptable.
    pub ambiguous: bool,
}

/// Intersects the ray with the triangle's supporting plane, then classifies
/// the plane point with dot-product barycentric coordinates.
pub fn plane_oracle(ray: &Ray, tri: &Triangle, band: f64) -> OracleHit {
    let (o, d) = (ray.origin.to_array(), ray.direction.to_array());
    let (a, b, c) = (tri.a.to_array(), tri.b.to_array(), tri.c.to_array());
    let ab = sub(b, a);
    let ac = sub(c, a);
    let n = cross(ab, ac);
    let denom = dot(n, d);
    if denom.abs() < band {
        return OracleHit {
            hit: false,
            t: f64::NAN,
            ambiguous: true,
        };
    }
    let t = dot(n, sub(a, o)) / denom;
    let p = [o[0] + t * d[0], o[1] + t * d[1], o[2] + t * d[2]];
    let ap = sub(p, a);
    let d00 = dot(ab, ab);
    let d01 = dot(ab, ac);
    let d11 = dot(ac, ac);
    let d20 = dot(ap, ab);
    let d21 = dot(ap, ac);
    let den = d00 * d11 - d01 * d01;
    let beta = (d11 * d20 - d01 * d21) / den;
    let gamma = (d00 * d21 - d01 * d20) / den;
    let alpha = 1.0 - beta - gamma;
    let inside = alpha >= 0.0 && beta >= 0.0 && gamma >= 0.0;
    let boundary = alpha.abs().min(beta.abs()).min(gamma.abs());
    OracleHit {
        hit: inside && t > 0.0,
        t,
        ambiguous: boundary < band || t.abs() < band,
    }
}

/// Nearest hit by scanning every single-triangle result; the first of equal
/// distances wins.
pub fn brute_force_nearest(ray: &Ray, tris: &[Triangle], init: IntersectionRecord) -> HitResult {
    let mut best: Option<IntersectionRecord> = None;
    for tri in tris {
        let r = tri.intersect(ray);
        if !r.hit || !(r.record.t > 0.0 && r.record.t < init.t) {
            continue;
        }
        match best {
            Some(b) if b.t <= r.record.t => {}
            _ => best = Some(r.record),
        }
    }
    match best {
        Some(record) => HitResult { hit: true, record },
        None => HitResult {
            hit: false,
            record: init,
        },
    }
}

/// Minimal P3 reader: header values and the channel integers.
#[derive(Debug, Clone, PartialEq)]
pub struct Ppm {
    pub width: usize,
    pub height: usize,
    pub max: u32,
    pub values: Vec<u32>,
}

impl Ppm {
    pub fn pixel(&self, x: usize, y: usize) -> [u32; 3] {
        let i = 3 * (y * self.width + x);
        [self.values[i], self.values[i + 1], self.values[i + 2]]
    }

    pub fn pixels(&self) -> impl Iterator<Item = [u32; 3]> + '_ {
        self.values.chunks_exact(3).map(|c| [c[0], c[1], c[2]])
    }
}

pub fn read_ppm(bytes: &[u8]) -> Result<Ppm, String> {
    let text = std::str::from_utf8(bytes).map_err(|e| e.to_string())?;
    let mut tokens = text
        .lines()
        .map(|l| l.split('#').next().unwrap())
        .flat_map(str::split_whitespace);
    if tokens.next() != Some("P3") {
        return Err("missing P3 magic".into());
    }
    let mut num = |what: &str| -> Result<u32, String> {
        tokens
            .next()
            .ok_or(format!("missing {what}"))?
            .parse()
            .map_err(|e| format!("bad {what}: {e}"))
    };
    let width = num("width")? as usize;
    let height = num("height")? as usize;
    let max = num("max value")?;
    let mut values = Vec::new();
    while let Ok(v) = num("value") {
        if v > max {
            return Err(format!("value {v} above max {max}"));
        }
        values.push(v);
    }
    if values.len() != width * height * 3 {
        return Err(format!(
            "expected {} values, found {}",
            width * height * 3,
            values.len()
        ));
    }
    Ok(Ppm {
        width,
        height,
        max,
        values,
    })
}

/// OBJ text for a ground plane plus a `cols` x `rows` grid of boxes with
/// varying heights. Each box and the ground are written as quads, so the
/// mesh has `12 * cols * rows + 2` triangles after fan triangulation.
pub fn city_obj(cols: usize, rows: usize) -> String {
    let mut out = String::from("# procedural city\no city\n");
    let mut next = 1usize;
    let extent = 4.0;
    out.push_str(&format!(
        "v {e} {e} 0\nv {n} {e} 0\nv {n} {n} 0\nv {e} {n} 0\nf 1 2 3 4\n",
        e = -extent,
        n = extent
    ));
    next += 4;
    let cell_x = 2.0 * extent / cols as f64;
    let cell_y = 2.0 * extent / rows as f64;
    for r in 0..rows {
        for c in 0..cols {
            let x0 = -extent + c as f64 * cell_x + 0.1 * cell_x;
            let x1 = x0 + 0.8 * cell_x;
            let y0 = -extent + r as f64 * cell_y + 0.1 * cell_y;
            let y1 = y0 + 0.8 * cell_y;
            let h = 0.2 + 1.5 * (((r * 7 + c * 13) % 11) as f64 / 10.0);
            for (x, y, z) in [
                (x0, y0, 0.0),
                (x1, y0, 0.0),
                (x1, y1, 0.0),
                (x0, y1, 0.0),
                (x0, y0, h),
                (x1, y0, h),
                (x1, y1, h),
                (x0, y1, h),
            ] {
                writeln!(out, "v {x:.6} {y:.6} {z:.6}").unwrap();
            }
            let i = |k: usize| next + k;
            for face in [
                [0, 3, 2, 1],
                [4, 5, 6, 7],
                [0, 1, 5, 4],
                [1, 2, 6, 5],
                [2, 3, 7, 6],
                [3, 0, 4, 7],
            ] {
                writeln!(
                    out,
                    "f {} {}/1 {}//1 {}/1/1",
                    i(face[0]),
                    i(face[1]),
                    i(face[2]),
                    i(face[3])
                )
                .unwrap();
            }
            next += 8;
        }
    }
    out
}
