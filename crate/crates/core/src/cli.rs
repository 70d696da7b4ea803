//! Command-line front end: load (or build) a scene, render it, write a PPM.
//!
//! Exit codes: 0 success, 2 usage, 3 I/O failure, 4 OBJ parse failure.
//! Everything diagnostic goes to standard error.

use std::ffi::OsString;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use clap::Parser;
use thiserror::Error;

use crate::camera::{CameraError, PinholeCamera, Window};
use crate::imageio::{load_obj, save_ppm, ObjError};
use crate::renderer::{worker_count, RenderConfig, RenderError, Scene};
use crate::vecmath::{Vec2, Vec3};

#[derive(Debug, Clone, PartialEq, Parser)]
#[command(
    name = "raytrace",
    version,
    about = "Brute-force triangle mesh ray tracer"
)]
pub struct CliOptions {
    /// OBJ mesh to render
    #[arg(short, long, value_name = "PATH", conflicts_with = "demo")]
    pub input: Option<PathBuf>,

    /// Destination PPM file
    #[arg(short, long, value_name = "PATH", default_value = "out.ppm")]
    pub output: PathBuf,

    #[arg(long, default_value_t = 400, value_parser = clap::value_parser!(u32).range(1..))]
    pub width: u32,

    #[arg(long, default_value_t = 400, value_parser = clap::value_parser!(u32).range(1..))]
    pub height: u32,

    /// Camera position
    #[arg(long, value_name = "X,Y,Z", default_value = "0,0,5", value_parser = parse_vec3, allow_hyphen_values = true)]
    pub position: Vec3,

    /// Point the camera looks at
    #[arg(long = "look-at", value_name = "X,Y,Z", default_value = "0,0,0", value_parser = parse_vec3, allow_hyphen_values = true)]
    pub look_at: Vec3,

    #[arg(long, value_name = "X,Y,Z", default_value = "0,1,0", value_parser = parse_vec3, allow_hyphen_values = true)]
    pub up: Vec3,

    /// Distance from the pinhole to the image plane
    #[arg(
        long,
        value_name = "D",
        default_value_t = 1.0,
        allow_hyphen_values = true
    )]
    pub distance: f64,

    /// Image plane window
    #[arg(long, value_name = "MINX,MAXX,MINY,MAXY", default_value = "-1,1,-1,1", value_parser = parse_window, allow_hyphen_values = true)]
    pub frame: Window,

    #[arg(long, value_name = "R,G,B", default_value = "0,0,0", value_parser = parse_rgb)]
    pub background: Vec3,

    /// Color given to every loaded triangle
    #[arg(long, value_name = "R,G,B", default_value = "1,0,0", value_parser = parse_rgb)]
    pub color: Vec3,

    /// Worker threads
    #[arg(long, default_value_t = 1, value_parser = parse_jobs)]
    pub jobs: usize,

    /// Render the built-in red triangle (implied when no input is given)
    #[arg(long)]
    pub demo: bool,
}

impl CliOptions {
    pub fn is_demo(&self) -> bool {
        self.demo || self.input.is_none()
    }

    pub fn camera(&self) -> Result<PinholeCamera, CameraError> {
        PinholeCamera::new(
            self.frame,
            self.distance,
            Vec2::new(self.width, self.height),
            self.position,
            self.up,
            self.look_at,
        )
    }
}

fn parse_components<const N: usize>(s: &str) -> Result<[f64; N], String> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != N {
        return Err(format!(
            "expected {N} comma-separated numbers, got {}",
            parts.len()
        ));
    }
    let mut out = [0.0; N];
    for (slot, part) in out.iter_mut().zip(parts) {
        *slot = part
            .parse::<f64>()
            .ok()
            .filter(|x| x.is_finite())
            .ok_or_else(|| format!("invalid number {part:?}"))?;
    }
    Ok(out)
}

fn parse_jobs(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(n) if n >= 1 => Ok(n),
        _ => Err(format!("expected a positive integer, got {s:?}")),
    }
}

fn parse_vec3(s: &str) -> Result<Vec3, String> {
    parse_components::<3>(s).map(Vec3::from)
}

fn parse_rgb(s: &str) -> Result<Vec3, String> {
    let c = parse_components::<3>(s)?;
    if c.iter().any(|ch| !(0.0..=1.0).contains(ch)) {
        return Err("color channels must lie in [0, 1]".into());
    }
    Ok(Vec3::from(c))
}

fn parse_window(s: &str) -> Result<Window, String> {
    let [min_x, max_x, min_y, max_y] = parse_components::<4>(s)?;
    Ok(Window::new(min_x, max_x, min_y, max_y))
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    /// `--help` or `--version`; not a failure.
    #[error("{0}")]
    Info(String),
    #[error("{0}")]
    Obj(ObjError),
    #[error("cannot write {path}: {source}")]
    Write {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error(transparent)]
    Render(#[from] RenderError),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Info(_) => 0,
            CliError::Usage(_) => 2,
            CliError::Obj(ObjError::Io { .. }) | CliError::Write { .. } => 3,
            CliError::Obj(ObjError::Parse { .. }) => 4,
            // invalid configurations are caught while parsing
            CliError::Render(_) => 2,
        }
    }
}

impl From<ObjError> for CliError {
    fn from(e: ObjError) -> Self {
        CliError::Obj(e)
    }
}

/// Parses and validates the arguments (`argv[0]` is the program name).
pub fn parse_args<I, T>(argv: I) -> Result<CliOptions, CliError>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let opts = CliOptions::try_parse_from(argv).map_err(|e| {
        use clap::error::ErrorKind;
        match e.kind() {
            ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => CliError::Info(e.to_string()),
            _ => CliError::Usage(e.to_string()),
        }
    })?;
    opts.camera()
        .map_err(|e| CliError::Usage(format!("error: {e}")))?;
    Ok(opts)
}

#[derive(Debug, Clone, PartialEq)]
pub struct RenderSummary {
    pub triangles: usize,
    pub resolution: Vec2<u32>,
    pub workers: usize,
    pub elapsed: Duration,
}

/// Loads the scene, renders it and writes the image.
pub fn run_render(opts: &CliOptions) -> Result<RenderSummary, CliError> {
    let camera = opts
        .camera()
        .map_err(|e| CliError::Usage(format!("error: {e}")))?;
    let scene = match &opts.input {
        Some(path) if !opts.demo => {
            Scene::new(load_obj(path, opts.color)?.triangles, opts.background)
        }
        _ => Scene {
            background: opts.background,
            ..Scene::default_scene()
        },
    };
    let config = RenderConfig {
        camera,
        scene,
        jobs: opts.jobs,
    };

    let start = Instant::now();
    let image = config.render()?;
    let elapsed = start.elapsed();

    save_ppm(&image, &opts.output).map_err(|source| CliError::Write {
        path: opts.output.clone(),
        source,
    })?;

    Ok(RenderSummary {
        triangles: config.scene.triangles.len(),
        resolution: camera.resolution,
        workers: worker_count(opts.jobs),
        elapsed,
    })
}

/// Entry point used by the binary.
pub fn main_with_args<I, T>(argv: I) -> ExitCode
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let result = parse_args(argv).and_then(|opts| run_render(&opts));
    match result {
        Ok(summary) => {
            eprintln!(
                "triangles: {}  resolution: {}x{}  workers: {}  render time: {:.3} s",
                summary.triangles,
                summary.resolution.x,
                summary.resolution.y,
                summary.workers,
                summary.elapsed.as_secs_f64()
            );
            ExitCode::SUCCESS
        }
        Err(CliError::Info(text)) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(e @ CliError::Usage(_)) => {
            eprint!("{}", e.to_string().trim_end());
            eprintln!();
            ExitCode::from(e.exit_code())
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
