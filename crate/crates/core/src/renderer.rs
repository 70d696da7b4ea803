//! One primary ray per pixel, flat shading by nearest hit.

use rayon::prelude::*;
use thiserror::Error;

use crate::camera::{CameraError, PinholeCamera};
use crate::geometry::{intersect_ray_triangles, IntersectionRecord, Triangle};
use crate::imageio::FrameBuffer;
use crate::vecmath::{Vec2, Vec3};

#[derive(Debug, Error)]
pub enum RenderError {
    #[error(transparent)]
    Camera(#[from] CameraError),
    #[error("requested resolution {requested:?} does not match camera resolution {camera:?}")]
    ResolutionMismatch {
        requested: Vec2<u32>,
        camera: Vec2<u32>,
    },
    #[error("jobs must be at least 1")]
    NoJobs,
    #[error("could not start render workers: {0}")]
    Pool(#[from] rayon::ThreadPoolBuildError),
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct Scene {
    pub triangles: Vec<Triangle>,
    /// Color of pixels whose ray hits nothing.
    pub background: Vec3,
}

impl Scene {
    pub fn new(triangles: Vec<Triangle>, background: Vec3) -> Self {
        Scene {
            triangles,
            background,
        }
    }

    /// A single red triangle around the origin in the z = 0 plane, on black.
    ///
    /// Sized so that the default camera (at z = 5, unit distance, window
    /// [-1, 1]^2) sees it covering roughly a fifth of the frame.
    pub fn default_scene() -> Self {
        Scene {
            triangles: vec![Triangle::new(
                Vec3::new(-3.0, -3.0, 0.0),
                Vec3::new(3.0, -3.0, 0.0),
                Vec3::new(0.0, 3.0, 0.0),
                Vec3::new(1.0, 0.0, 0.0),
            )],
            background: Vec3::ZERO,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RenderConfig {
    pub camera: PinholeCamera,
    pub scene: Scene,
    pub jobs: usize,
}

impl RenderConfig {
    pub fn render(&self) -> Result<FrameBuffer, RenderError> {
        integrate(self.camera.resolution, &self.camera, &self.scene, self.jobs)
    }
}

/// Threads a render with `jobs` actually uses: CPU-bound workers beyond the
/// core count only contend with each other.
pub fn worker_count(jobs: usize) -> usize {
    let cores = std::thread::available_parallelism().map_or(1, |n| n.get());
    jobs.clamp(1, cores)
}

/// Color seen through 1-based pixel `(i, j)`; `j == height` is the top row.
pub fn shade_pixel(
    camera: &PinholeCamera,
    scene: &Scene,
    i: u32,
    j: u32,
) -> Result<Vec3, CameraError> {
    let ray = camera.world_space_ray(Vec2::new(i, j))?;
    let result = intersect_ray_triangles(&ray, &scene.triangles, IntersectionRecord::sentinel());
    Ok(if result.hit {
        result.record.color
    } else {
        scene.background
    })
}

/// Renders the whole image. Buffer row `r`, column `c` holds pixel
/// `(c + 1, height - r)`.
///
/// Rows are handed out to up to `jobs` worker threads (never more than the
/// machine has cores). Each pixel is computed once and lands in a fixed
/// slot, so the result does not depend on `jobs`.
pub fn integrate(
    resolution: Vec2<u32>,
    camera: &PinholeCamera,
    scene: &Scene,
    jobs: usize,
) -> Result<FrameBuffer, RenderError> {
    if resolution != camera.resolution {
        return Err(RenderError::ResolutionMismatch {
            requested: resolution,
            camera: camera.resolution,
        });
    }
    if jobs == 0 {
        return Err(RenderError::NoJobs);
    }
    let (width, height) = (resolution.x as usize, resolution.y as usize);
    let mut buf = FrameBuffer::new(width, height).expect("camera resolution is at least 1x1");

    let shade_row = |(r, row): (usize, &mut [Vec3])| {
        let j = (height - r) as u32;
        for (c, px) in row.iter_mut().enumerate() {
            *px = shade_pixel(camera, scene, c as u32 + 1, j)
                .expect("pixel inside camera resolution");
        }
    };

    let workers = worker_count(jobs);
    if workers == 1 {
        buf.pixels_mut()
            .chunks_mut(width)
            .enumerate()
            .for_each(shade_row);
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(workers)
            .build()?;
        pool.install(|| {
            buf.pixels_mut()
                .par_chunks_mut(width)
                .enumerate()
                .for_each(shade_row)
        });
    }
    Ok(buf)
}
