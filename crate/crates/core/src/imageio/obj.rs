//! Wavefront OBJ subset: `v` vertices and `f` polygon faces.
//!
//! Faces are fan-triangulated around their first vertex. Texture and normal
//! references in face tokens are ignored, as are all other directives.
//! Indices must be positive, 1-based and refer to already declared vertices.

use std::fs::File;
use std::io::{self, BufRead, BufReader};
use std::path::{Path, PathBuf};

use thiserror::Error;

use crate::geometry::Triangle;
use crate::vecmath::Vec3;

#[derive(Debug, Clone, PartialEq, Default)]
pub struct Mesh {
    pub triangles: Vec<Triangle>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ObjErrorKind {
    #[error("malformed number {0:?}")]
    BadNumber(String),
    #[error("vertex needs three coordinates")]
    ShortVertex,
    #[error("face needs at least three vertices, found {0}")]
    ShortFace(usize),
    #[error("vertex index must be positive, found {0}")]
    NonPositiveIndex(i64),
    #[error("vertex index {index} out of range, {count} vertices defined")]
    IndexOutOfRange { index: i64, count: usize },
}

#[derive(Debug, Error)]
pub enum ObjError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: io::Error,
    },
    #[error("line {line}: {kind}")]
    Parse { line: usize, kind: ObjErrorKind },
}

impl ObjError {
    /// 1-based line number of a parse failure.
    pub fn line(&self) -> Option<usize> {
        match self {
            ObjError::Parse { line, .. } => Some(*line),
            ObjError::Io { .. } => None,
        }
    }
}

fn parse_coord(token: &str) -> Result<f64, ObjErrorKind> {
    match token.parse::<f64>() {
        Ok(x) if x.is_finite() => Ok(x),
        _ => Err(ObjErrorKind::BadNumber(token.to_owned())),
    }
}

fn parse_index(token: &str, count: usize) -> Result<usize, ObjErrorKind> {
    // i, i/t, i/t/n or i//n
    let head = token.split('/').next().unwrap_or(token);
    let index: i64 = head
        .parse()
        .map_err(|_| ObjErrorKind::BadNumber(token.to_owned()))?;
    if index <= 0 {
        return Err(ObjErrorKind::NonPositiveIndex(index));
    }
    if index as u64 > count as u64 {
        return Err(ObjErrorKind::IndexOutOfRange { index, count });
    }
    Ok(index as usize - 1)
}

/// Parses OBJ text from `reader`, giving every triangle `color`.
pub fn parse_obj<R: BufRead>(reader: R, color: Vec3) -> Result<Mesh, ObjError> {
    parse_lines(reader, color, Path::new("<input>"))
}

fn parse_lines<R: BufRead>(reader: R, color: Vec3, path: &Path) -> Result<Mesh, ObjError> {
    let mut vertices: Vec<Vec3> = Vec::new();
    let mut triangles = Vec::new();

    for (n, line) in reader.lines().enumerate() {
        let line_no = n + 1;
        let line = line.map_err(|source| ObjError::Io {
            path: path.to_owned(),
            source,
        })?;
        let at = |kind| ObjError::Parse {
            line: line_no,
            kind,
        };

        let mut tokens = line.split_whitespace();
        match tokens.next() {
            Some("v") => {
                let coords: Vec<&str> = tokens.take(3).collect();
                if coords.len() < 3 {
                    return Err(at(ObjErrorKind::ShortVertex));
                }
                let mut xyz = [0.0; 3];
                for (slot, tok) in xyz.iter_mut().zip(coords) {
                    *slot = parse_coord(tok).map_err(at)?;
                }
                vertices.push(Vec3::from(xyz));
            }
            Some("f") => {
                let indices = tokens
                    .map(|tok| parse_index(tok, vertices.len()))
                    .collect::<Result<Vec<_>, _>>()
                    .map_err(at)?;
                if indices.len() < 3 {
                    return Err(at(ObjErrorKind::ShortFace(indices.len())));
                }
                let anchor = vertices[indices[0]];
                triangles.extend(indices[1..].windows(2).map(|pair| {
                    Triangle::new(anchor, vertices[pair[0]], vertices[pair[1]], color)
                }));
            }
            // blank lines, comments, vn/vt/o/g/s/mtllib/usemtl and friends
            _ => {}
        }
    }

    Ok(Mesh { triangles })
}

/// Loads an OBJ file, giving every triangle `color`.
pub fn load_obj(path: impl AsRef<Path>, color: Vec3) -> Result<Mesh, ObjError> {
    let path = path.as_ref();
    let file = File::open(path).map_err(|source| ObjError::Io {
        path: path.to_owned(),
        source,
    })?;
    parse_lines(BufReader::new(file), color, path)
}
