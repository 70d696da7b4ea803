//! Orthonormal frames and the pinhole camera.

use thiserror::Error;

use crate::geometry::Ray;
use crate::vecmath::{Mat3, Vec2, Vec3};

/// Cross products shorter than this mean the inputs are parallel.
const PARALLEL_EPSILON: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Error)]
pub enum CameraError {
    #[error("frame axis vector has zero length")]
    ZeroAxis,
    #[error("up vector is parallel to the view axis")]
    UpParallel,
    #[error("image window requires min_x < max_x (got {min} .. {max})")]
    WindowX { min: f64, max: f64 },
    #[error("image window requires min_y < max_y (got {min} .. {max})")]
    WindowY { min: f64, max: f64 },
    #[error("image plane distance must be positive (got {0})")]
    Distance(f64),
    #[error("resolution must be at least 1x1 (got {0}x{1})")]
    Resolution(u32, u32),
    #[error("camera position and look-at point coincide")]
    PositionIsLookAt,
    #[error("pixel ({i}, {j}) outside 1..={width} x 1..={height}")]
    PixelOutOfRange {
        i: u32,
        j: u32,
        width: u32,
        height: u32,
    },
}

/// Right-handed orthonormal frame. `m` maps frame coordinates to world
/// coordinates; its columns are `u`, `v`, `w`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Onb {
    pub u: Vec3,
    pub v: Vec3,
    pub w: Vec3,
    pub m: Mat3,
}

impl Onb {
    fn from_axes(u: Vec3, v: Vec3, w: Vec3) -> Self {
        Onb {
            u,
            v,
            w,
            m: Mat3::from_cols(u, v, w),
        }
    }

    /// Frame whose `w` axis is `normalize(w)` and whose `v` axis leans toward `up`.
    pub fn from_up_w(up: Vec3, w: Vec3) -> Result<Self, CameraError> {
        let w = w.normalize().map_err(|_| CameraError::ZeroAxis)?;
        let side = up.cross(w);
        if !(side.length() >= PARALLEL_EPSILON) {
            return Err(CameraError::UpParallel);
        }
        let u = side.normalize().map_err(|_| CameraError::UpParallel)?;
        let v = w.cross(u);
        Ok(Onb::from_axes(u, v, w))
    }

    /// Some frame whose `v` axis is `normalize(v)`.
    ///
    /// The helper axis is the canonical basis vector least aligned with `v`
    /// (first one on ties), so the result is deterministic.
    pub fn from_v(v: Vec3) -> Result<Self, CameraError> {
        let v = v.normalize().map_err(|_| CameraError::ZeroAxis)?;
        let helper = [Vec3::X, Vec3::Y, Vec3::Z]
            .into_iter()
            .min_by(|a, b| a.dot(v).abs().total_cmp(&b.dot(v).abs()))
            .expect("three candidates");
        let u = v
            .cross(helper)
            .normalize()
            .map_err(|_| CameraError::ZeroAxis)?;
        let w = u.cross(v);
        Ok(Onb::from_axes(u, v, w))
    }

    #[inline]
    pub fn to_world(&self, local: Vec3) -> Vec3 {
        self.m * local
    }
}

/// Rectangle on the image plane, in camera units.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Window {
    pub min_x: f64,
    pub max_x: f64,
    pub min_y: f64,
    pub max_y: f64,
}

impl Window {
    pub const fn new(min_x: f64, max_x: f64, min_y: f64, max_y: f64) -> Self {
        Window {
            min_x,
            max_x,
            min_y,
            max_y,
        }
    }
}

impl Default for Window {
    fn default() -> Self {
        Window::new(-1.0, 1.0, -1.0, 1.0)
    }
}

/// Lensless perspective camera. Construct with [`PinholeCamera::new`]; the
/// fields are public for reading.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PinholeCamera {
    pub window: Window,
    pub distance: f64,
    pub resolution: Vec2<u32>,
    pub position: Vec3,
    pub up: Vec3,
    pub look_at: Vec3,
    pub direction: Vec3,
    pub onb: Onb,
}

impl PinholeCamera {
    /// Validates every parameter and builds the view frame. The camera looks
    /// down `-w`, where `w = -normalize(look_at - position)`.
    pub fn new(
        window: Window,
        distance: f64,
        resolution: Vec2<u32>,
        position: Vec3,
        up: Vec3,
        look_at: Vec3,
    ) -> Result<Self, CameraError> {
        if !(window.min_x < window.max_x) {
            return Err(CameraError::WindowX {
                min: window.min_x,
                max: window.max_x,
            });
        }
        if !(window.min_y < window.max_y) {
            return Err(CameraError::WindowY {
                min: window.min_y,
                max: window.max_y,
            });
        }
        if !(distance > 0.0) {
            return Err(CameraError::Distance(distance));
        }
        if resolution.x < 1 || resolution.y < 1 {
            return Err(CameraError::Resolution(resolution.x, resolution.y));
        }
        let direction = (look_at - position)
            .normalize()
            .map_err(|_| CameraError::PositionIsLookAt)?;
        let onb = Onb::from_up_w(up, -direction)?;
        Ok(PinholeCamera {
            window,
            distance,
            resolution,
            position,
            up,
            look_at,
            direction,
            onb,
        })
    }

    pub fn width(&self) -> u32 {
        self.resolution.x
    }

    pub fn height(&self) -> u32 {
        self.resolution.y
    }

    /// Camera-space point on the window for the center of pixel `(i, j)`.
    ///
    /// Pixels are 1-based; `j == height` is the top row.
    pub fn window_point(&self, pixel: Vec2<u32>) -> Result<(f64, f64), CameraError> {
        let Vec2 { x: i, y: j } = pixel;
        let (width, height) = (self.width(), self.height());
        if i < 1 || i > width || j < 1 || j > height {
            return Err(CameraError::PixelOutOfRange {
                i,
                j,
                width,
                height,
            });
        }
        let w = &self.window;
        let su = w.min_x + (w.max_x - w.min_x) * (f64::from(i) - 0.5) / f64::from(width);
        let sv = w.min_y + (w.max_y - w.min_y) * (f64::from(j) - 0.5) / f64::from(height);
        Ok((su, sv))
    }

    /// World-space ray from the camera position through pixel `(i, j)`.
    pub fn world_space_ray(&self, pixel: Vec2<u32>) -> Result<Ray, CameraError> {
        let (su, sv) = self.window_point(pixel)?;
        let direction = self
            .onb
            .to_world(Vec3::new(su, sv, -self.distance))
            .normalize()
            .expect("distance > 0 keeps the camera-space direction non-zero");
        Ok(Ray::new(self.position, direction))
    }
}
