use thiserror::Error;

use crate::vecmath::Vec3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum BufferError {
    #[error("frame buffer dimensions must be positive (got {width}x{height})")]
    Dimensions { width: usize, height: usize },
    #[error("pixel ({x}, {y}) outside {width}x{height} buffer")]
    OutOfRange {
        x: usize,
        y: usize,
        width: usize,
        height: usize,
    },
}

/// Row-major RGB image. Row 0 is the top of the picture and addressing is
/// 0-based.
#[derive(Debug, Clone, PartialEq)]
pub struct FrameBuffer {
    width: usize,
    height: usize,
    pixels: Vec<Vec3>,
}

impl FrameBuffer {
    /// All-black buffer.
    pub fn new(width: usize, height: usize) -> Result<Self, BufferError> {
        Self::filled(width, height, Vec3::ZERO)
    }

    pub fn filled(width: usize, height: usize, color: Vec3) -> Result<Self, BufferError> {
        if width == 0 || height == 0 {
            return Err(BufferError::Dimensions { width, height });
        }
        Ok(FrameBuffer {
            width,
            height,
            pixels: vec![color; width * height],
        })
    }

    /// Builds a buffer from rows listed top to bottom. Every row must have
    /// the same non-zero length.
    pub fn from_rows<R: AsRef<[Vec3]>>(rows: &[R]) -> Result<Self, BufferError> {
        let height = rows.len();
        let width = rows.first().map_or(0, |r| r.as_ref().len());
        if width == 0 || height == 0 || rows.iter().any(|r| r.as_ref().len() != width) {
            return Err(BufferError::Dimensions { width, height });
        }
        let pixels = rows
            .iter()
            .flat_map(|r| r.as_ref().iter().copied())
            .collect();
        Ok(FrameBuffer {
            width,
            height,
            pixels,
        })
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    fn index(&self, x: usize, y: usize) -> Result<usize, BufferError> {
        if x < self.width && y < self.height {
            Ok(y * self.width + x)
        } else {
            Err(BufferError::OutOfRange {
                x,
                y,
                width: self.width,
                height: self.height,
            })
        }
    }

    pub fn get(&self, x: usize, y: usize) -> Result<Vec3, BufferError> {
        self.index(x, y).map(|i| self.pixels[i])
    }

    pub fn set(&mut self, x: usize, y: usize, color: Vec3) -> Result<(), BufferError> {
        let i = self.index(x, y)?;
        self.pixels[i] = color;
        Ok(())
    }

    /// Copy of `self` with one pixel replaced.
    pub fn with_pixel(&self, x: usize, y: usize, color: Vec3) -> Result<Self, BufferError> {
        let mut out = self.clone();
        out.set(x, y, color)?;
        Ok(out)
    }

    pub fn pixels(&self) -> &[Vec3] {
        &self.pixels
    }

    pub(crate) fn pixels_mut(&mut self) -> &mut [Vec3] {
        &mut self.pixels
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Vec3]> {
        self.pixels.chunks_exact(self.width)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn init_shape() {
        let buf = FrameBuffer::new(2, 3).unwrap();
        assert_eq!(buf.rows().count(), 3);
        assert!(buf
            .rows()
            .all(|r| r.len() == 2 && r.iter().all(|&c| c == Vec3::ZERO)));
        assert_eq!(FrameBuffer::new(1, 1).unwrap().pixels(), &[Vec3::ZERO]);
        assert_eq!(
            FrameBuffer::new(0, 5),
            Err(BufferError::Dimensions {
                width: 0,
                height: 5
            })
        );
        assert!(FrameBuffer::new(5, 0).is_err());
    }

    #[test]
    fn get_and_set() {
        let mut buf = FrameBuffer::new(3, 2).unwrap();
        assert_eq!(buf.get(2, 1), Ok(Vec3::ZERO));
        buf.set(2, 1, Vec3::X).unwrap();
        assert_eq!(buf.get(2, 1), Ok(Vec3::X));
        assert_eq!(buf.rows().nth(1).unwrap()[2], Vec3::X);
        assert!(matches!(
            buf.set(3, 0, Vec3::X),
            Err(BufferError::OutOfRange { .. })
        ));
        assert!(buf.get(0, 2).is_err());
    }

    #[test]
    fn with_pixel_leaves_original() {
        let buf = FrameBuffer::new(2, 2).unwrap();
        let next = buf.with_pixel(1, 0, Vec3::Y).unwrap();
        assert_eq!(buf.get(1, 0), Ok(Vec3::ZERO));
        assert_eq!(next.get(1, 0), Ok(Vec3::Y));
        assert_eq!(next.get(0, 0), Ok(Vec3::ZERO));
    }

    #[test]
    fn from_rows_requires_rectangle() {
        let ok = FrameBuffer::from_rows(&[vec![Vec3::X, Vec3::Y]]).unwrap();
        assert_eq!((ok.width(), ok.height()), (2, 1));
        assert!(FrameBuffer::from_rows(&[vec![Vec3::X], vec![]]).is_err());
        assert!(FrameBuffer::from_rows::<Vec<Vec3>>(&[]).is_err());
    }
}
