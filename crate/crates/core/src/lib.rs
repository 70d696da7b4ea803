//! A small brute-force ray tracer for triangle meshes.
//!
//! Meshes come from Wavefront OBJ files, every pixel gets one ray through a
//! pinhole camera, the nearest triangle along that ray decides the pixel
//! color, and the image is written as ASCII PPM.

// `!(x > y)` style checks are deliberate: they also reject NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod camera;
pub mod cli;
pub mod geometry;
pub mod imageio;
pub mod renderer;
pub mod vecmath;

pub use camera::{CameraError, Onb, PinholeCamera, Window};
pub use geometry::{
    intersect_ray_triangles, HitResult, IntersectionRecord, Ray, Triangle, MAX_DISTANCE,
};
pub use imageio::{load_obj, parse_obj, save_ppm, write_ppm, FrameBuffer, Mesh, ObjError};
pub use renderer::{integrate, shade_pixel, worker_count, RenderConfig, RenderError, Scene};
pub use vecmath::{Mat3, Vec2, Vec3};
