//! Python bindings for `raytrace`.
//!
//! Anything that takes a vector also accepts a plain `(x, y, z)` tuple.

use std::path::PathBuf;

use pyo3::create_exception;
use pyo3::exceptions::{PyOSError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyBytes;

use raytrace::camera::CameraError;
use raytrace::imageio::BufferError;
use raytrace::{
    FrameBuffer, IntersectionRecord, ObjError, Onb, PinholeCamera, Ray, RenderError, Scene,
    Triangle, Vec2, Vec3, Window,
};

create_exception!(
    pyraytrace,
    ObjParseError,
    PyValueError,
    "Malformed OBJ input."
);

fn camera_err(e: CameraError) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn buffer_err(e: BufferError) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn obj_err(e: ObjError) -> PyErr {
    match e {
        ObjError::Io { .. } => PyOSError::new_err(e.to_string()),
        ObjError::Parse { .. } => ObjParseError::new_err(e.to_string()),
    }
}

fn render_err(e: RenderError) -> PyErr {
    PyValueError::new_err(e.to_string())
}

#[pyclass(name = "Vec3", module = "pyraytrace", frozen, from_py_object)]
#[derive(Clone, Copy)]
pub struct PyVec3(pub Vec3);

#[derive(FromPyObject)]
pub enum Vec3Arg {
    Vec(PyVec3),
    Tuple((f64, f64, f64)),
}

impl From<Vec3Arg> for Vec3 {
    fn from(arg: Vec3Arg) -> Vec3 {
        match arg {
            Vec3Arg::Vec(v) => v.0,
            Vec3Arg::Tuple((x, y, z)) => Vec3::new(x, y, z),
        }
    }
}

#[derive(FromPyObject)]
pub enum Scalar3 {
    Vec(Vec3Arg),
    Scalar(f64),
}

#[pymethods]
impl PyVec3 {
    #[new]
    #[pyo3(signature = (x=0.0, y=0.0, z=0.0))]
    fn new(x: f64, y: f64, z: f64) -> Self {
        PyVec3(Vec3::new(x, y, z))
    }

    #[getter]
    fn x(&self) -> f64 {
        self.0.x
    }

    #[getter]
    fn y(&self) -> f64 {
        self.0.y
    }

    #[getter]
    fn z(&self) -> f64 {
        self.0.z
    }

    fn dot(&self, other: Vec3Arg) -> f64 {
        self.0.dot(other.into())
    }

    fn cross(&self, other: Vec3Arg) -> Self {
        PyVec3(self.0.cross(other.into()))
    }

    fn length(&self) -> f64 {
        self.0.length()
    }

    /// Raises ValueError for the zero vector.
    fn normalize(&self) -> PyResult<Self> {
        self.0
            .normalize()
            .map(PyVec3)
            .map_err(|e| PyValueError::new_err(e.to_string()))
    }

    #[allow(clippy::wrong_self_convention)]
    fn to_tuple(&self) -> (f64, f64, f64) {
        (self.0.x, self.0.y, self.0.z)
    }

    fn __add__(&self, other: Vec3Arg) -> Self {
        PyVec3(self.0 + other.into())
    }

    fn __sub__(&self, other: Vec3Arg) -> Self {
        PyVec3(self.0 - other.into())
    }

    /// Componentwise for vectors, scaling for numbers.
    fn __mul__(&self, other: Scalar3) -> Self {
        match other {
            Scalar3::Vec(v) => PyVec3(self.0 * Vec3::from(v)),
            Scalar3::Scalar(s) => PyVec3(self.0 * s),
        }
    }

    fn __rmul__(&self, s: f64) -> Self {
        PyVec3(s * self.0)
    }

    fn __truediv__(&self, other: Scalar3) -> Self {
        match other {
            Scalar3::Vec(v) => PyVec3(self.0 / Vec3::from(v)),
            Scalar3::Scalar(s) => PyVec3(self.0 / s),
        }
    }

    fn __neg__(&self) -> Self {
        PyVec3(-self.0)
    }

    fn __eq__(&self, other: &Bound<'_, PyAny>) -> bool {
        other
            .extract::<Vec3Arg>()
            .is_ok_and(|v| Vec3::from(v) == self.0)
    }

    fn __repr__(&self) -> String {
        format!("Vec3({}, {}, {})", self.0.x, self.0.y, self.0.z)
    }
}

#[pyclass(name = "Ray", module = "pyraytrace", frozen, from_py_object)]
#[derive(Clone, Copy)]
pub struct PyRay(pub Ray);

#[pymethods]
impl PyRay {
    #[new]
    fn new(origin: Vec3Arg, direction: Vec3Arg) -> Self {
        PyRay(Ray::new(origin.into(), direction.into()))
    }

    #[getter]
    fn origin(&self) -> PyVec3 {
        PyVec3(self.0.origin)
    }

    #[getter]
    fn direction(&self) -> PyVec3 {
        PyVec3(self.0.direction)
    }

    fn at(&self, t: f64) -> PyVec3 {
        PyVec3(self.0.at(t))
    }

    fn __repr__(&self) -> String {
        format!(
            "Ray(origin={}, direction={})",
            self.0.origin, self.0.direction
        )
    }
}

#[pyclass(
    name = "IntersectionRecord",
    module = "pyraytrace",
    frozen,
    from_py_object
)]
#[derive(Clone, Copy)]
pub struct PyRecord(pub IntersectionRecord);

#[pymethods]
impl PyRecord {
    #[staticmethod]
    fn sentinel() -> Self {
        PyRecord(IntersectionRecord::sentinel())
    }

    #[getter]
    fn t(&self) -> f64 {
        self.0.t
    }

    #[getter]
    fn position(&self) -> PyVec3 {
        PyVec3(self.0.position)
    }

    #[getter]
    fn normal(&self) -> PyVec3 {
        PyVec3(self.0.normal)
    }

    #[getter]
    fn color(&self) -> PyVec3 {
        PyVec3(self.0.color)
    }

    fn __repr__(&self) -> String {
        format!(
            "IntersectionRecord(t={}, position={}, color={})",
            self.0.t, self.0.position, self.0.color
        )
    }
}

#[pyclass(name = "Triangle", module = "pyraytrace", frozen, from_py_object)]
#[derive(Clone, Copy)]
pub struct PyTriangle(pub Triangle);

#[pymethods]
impl PyTriangle {
    #[new]
    #[pyo3(signature = (a, b, c, color=None))]
    fn new(a: Vec3Arg, b: Vec3Arg, c: Vec3Arg, color: Option<Vec3Arg>) -> Self {
        let color = color.map_or(Vec3::X, Vec3::from);
        PyTriangle(Triangle::new(a.into(), b.into(), c.into(), color))
    }

    #[getter]
    fn a(&self) -> PyVec3 {
        PyVec3(self.0.a)
    }

    #[getter]
    fn b(&self) -> PyVec3 {
        PyVec3(self.0.b)
    }

    #[getter]
    fn c(&self) -> PyVec3 {
        PyVec3(self.0.c)
    }

    #[getter]
    fn color(&self) -> PyVec3 {
        PyVec3(self.0.color)
    }

    /// Returns `(hit, record)`.
    fn intersect(&self, ray: PyRay) -> (bool, PyRecord) {
        let r = self.0.intersect(&ray.0);
        (r.hit, PyRecord(r.record))
    }

    fn __repr__(&self) -> String {
        format!(
            "Triangle({}, {}, {}, color={})",
            self.0.a, self.0.b, self.0.c, self.0.color
        )
    }
}

/// Nearest hit closer than `init.t` (the sentinel by default). Returns `(hit, record)`.
#[pyfunction]
#[pyo3(signature = (ray, triangles, init=None))]
fn intersect_ray_triangles(
    ray: PyRay,
    triangles: Vec<PyTriangle>,
    init: Option<PyRecord>,
) -> (bool, PyRecord) {
    let tris: Vec<Triangle> = triangles.into_iter().map(|t| t.0).collect();
    let init = init.map_or_else(IntersectionRecord::sentinel, |r| r.0);
    let r = raytrace::intersect_ray_triangles(&ray.0, &tris, init);
    (r.hit, PyRecord(r.record))
}

#[pyclass(name = "Onb", module = "pyraytrace", frozen)]
pub struct PyOnb(pub Onb);

#[pymethods]
impl PyOnb {
    #[staticmethod]
    fn from_up_w(up: Vec3Arg, w: Vec3Arg) -> PyResult<Self> {
        Onb::from_up_w(up.into(), w.into())
            .map(PyOnb)
            .map_err(camera_err)
    }

    #[staticmethod]
    fn from_v(v: Vec3Arg) -> PyResult<Self> {
        Onb::from_v(v.into()).map(PyOnb).map_err(camera_err)
    }

    #[getter]
    fn u(&self) -> PyVec3 {
        PyVec3(self.0.u)
    }

    #[getter]
    fn v(&self) -> PyVec3 {
        PyVec3(self.0.v)
    }

    #[getter]
    fn w(&self) -> PyVec3 {
        PyVec3(self.0.w)
    }

    fn to_world(&self, local: Vec3Arg) -> PyVec3 {
        PyVec3(self.0.to_world(local.into()))
    }
}

#[pyclass(name = "PinholeCamera", module = "pyraytrace", frozen)]
pub struct PyCamera(pub PinholeCamera);

#[pymethods]
impl PyCamera {
    #[new]
    #[pyo3(signature = (
        width, height, position=(0.0, 0.0, 5.0), look_at=(0.0, 0.0, 0.0), up=(0.0, 1.0, 0.0),
        distance=1.0, frame=(-1.0, 1.0, -1.0, 1.0)
    ))]
    fn new(
        width: u32,
        height: u32,
        position: (f64, f64, f64),
        look_at: (f64, f64, f64),
        up: (f64, f64, f64),
        distance: f64,
        frame: (f64, f64, f64, f64),
    ) -> PyResult<Self> {
        let v = |(x, y, z): (f64, f64, f64)| Vec3::new(x, y, z);
        PinholeCamera::new(
            Window::new(frame.0, frame.1, frame.2, frame.3),
            distance,
            Vec2::new(width, height),
            v(position),
            v(up),
            v(look_at),
        )
        .map(PyCamera)
        .map_err(camera_err)
    }

    #[getter]
    fn width(&self) -> u32 {
        self.0.width()
    }

    #[getter]
    fn height(&self) -> u32 {
        self.0.height()
    }

    #[getter]
    fn position(&self) -> PyVec3 {
        PyVec3(self.0.position)
    }

    #[getter]
    fn direction(&self) -> PyVec3 {
        PyVec3(self.0.direction)
    }

    #[getter]
    fn onb(&self) -> PyOnb {
        PyOnb(self.0.onb)
    }

    /// Ray through 1-based pixel `(i, j)`; `j == height` is the top row.
    fn world_space_ray(&self, i: u32, j: u32) -> PyResult<PyRay> {
        self.0
            .world_space_ray(Vec2::new(i, j))
            .map(PyRay)
            .map_err(camera_err)
    }
}

#[pyclass(name = "FrameBuffer", module = "pyraytrace")]
pub struct PyFrameBuffer(pub FrameBuffer);

#[pymethods]
impl PyFrameBuffer {
    #[new]
    fn new(width: usize, height: usize) -> PyResult<Self> {
        FrameBuffer::new(width, height)
            .map(PyFrameBuffer)
            .map_err(buffer_err)
    }

    #[getter]
    fn width(&self) -> usize {
        self.0.width()
    }

    #[getter]
    fn height(&self) -> usize {
        self.0.height()
    }

    /// 0-based, `y = 0` is the top row.
    fn get(&self, x: usize, y: usize) -> PyResult<PyVec3> {
        self.0.get(x, y).map(PyVec3).map_err(buffer_err)
    }

    fn set(&mut self, x: usize, y: usize, color: Vec3Arg) -> PyResult<()> {
        self.0.set(x, y, color.into()).map_err(buffer_err)
    }

    /// Rows top to bottom, each a list of `(r, g, b)` tuples.
    fn to_list(&self) -> Vec<Vec<(f64, f64, f64)>> {
        self.0
            .rows()
            .map(|row| row.iter().map(|p| (p.x, p.y, p.z)).collect())
            .collect()
    }

    fn to_ppm<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyBytes>> {
        let mut out = Vec::new();
        raytrace::write_ppm(&self.0, &mut out)?;
        Ok(PyBytes::new(py, &out))
    }

    fn save_ppm(&self, path: PathBuf) -> PyResult<()> {
        Ok(raytrace::save_ppm(&self.0, path)?)
    }

    fn __len__(&self) -> usize {
        self.0.width() * self.0.height()
    }
}

#[pyclass(name = "Scene", module = "pyraytrace")]
pub struct PyScene(pub Scene);

#[pymethods]
impl PyScene {
    #[new]
    #[pyo3(signature = (triangles=Vec::new(), background=None))]
    fn new(triangles: Vec<PyTriangle>, background: Option<Vec3Arg>) -> Self {
        PyScene(Scene::new(
            triangles.into_iter().map(|t| t.0).collect(),
            background.map_or(Vec3::ZERO, Vec3::from),
        ))
    }

    /// The built-in red triangle on black.
    #[staticmethod]
    fn default() -> Self {
        PyScene(Scene::default_scene())
    }

    #[getter]
    fn triangles(&self) -> Vec<PyTriangle> {
        self.0.triangles.iter().copied().map(PyTriangle).collect()
    }

    #[getter]
    fn background(&self) -> PyVec3 {
        PyVec3(self.0.background)
    }

    fn __len__(&self) -> usize {
        self.0.triangles.len()
    }
}

/// Loads an OBJ mesh; every triangle gets `color` (red by default).
#[pyfunction]
#[pyo3(signature = (path, color=None))]
fn load_obj(path: PathBuf, color: Option<Vec3Arg>) -> PyResult<Vec<PyTriangle>> {
    let color = color.map_or(Vec3::X, Vec3::from);
    let mesh = raytrace::load_obj(path, color).map_err(obj_err)?;
    Ok(mesh.triangles.into_iter().map(PyTriangle).collect())
}

#[pyfunction]
fn shade_pixel(camera: &PyCamera, scene: &PyScene, i: u32, j: u32) -> PyResult<PyVec3> {
    raytrace::shade_pixel(&camera.0, &scene.0, i, j)
        .map(PyVec3)
        .map_err(camera_err)
}

/// Renders `scene` through `camera`. The GIL is released while rendering.
#[pyfunction]
#[pyo3(signature = (camera, scene, jobs=1))]
fn render(
    py: Python<'_>,
    camera: &PyCamera,
    scene: &PyScene,
    jobs: usize,
) -> PyResult<PyFrameBuffer> {
    let (cam, scene) = (camera.0, scene.0.clone());
    py.detach(move || raytrace::integrate(cam.resolution, &cam, &scene, jobs))
        .map(PyFrameBuffer)
        .map_err(render_err)
}

#[pymodule]
pub fn pyraytrace(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyVec3>()?;
    m.add_class::<PyRay>()?;
    m.add_class::<PyRecord>()?;
    m.add_class::<PyTriangle>()?;
    m.add_class::<PyOnb>()?;
    m.add_class::<PyCamera>()?;
    m.add_class::<PyFrameBuffer>()?;
    m.add_class::<PyScene>()?;
    m.add_function(wrap_pyfunction!(intersect_ray_triangles, m)?)?;
    m.add_function(wrap_pyfunction!(load_obj, m)?)?;
    m.add_function(wrap_pyfunction!(shade_pixel, m)?)?;
    m.add_function(wrap_pyfunction!(render, m)?)?;
    m.add("ObjParseError", m.py().get_type::<ObjParseError>())?;
    m.add("MAX_DISTANCE", raytrace::MAX_DISTANCE)?;
    Ok(())
}
