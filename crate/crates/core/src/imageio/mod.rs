//! Frame buffer, OBJ mesh loading and PPM output.

mod buffer;
mod obj;
mod ppm;

pub use buffer::{BufferError, FrameBuffer};
pub use obj::{load_obj, parse_obj, Mesh, ObjError, ObjErrorKind};
pub use ppm::{quantize, save_ppm, write_ppm};
