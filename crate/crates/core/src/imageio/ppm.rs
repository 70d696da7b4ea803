//! ASCII PPM (P3) output.
//!
//! Layout: `P3\n<width> <height>\n255\n` followed by every channel of every
//! pixel, top row first, each written as an integer and one trailing space.
//! There is no final newline.

use std::fs;
use std::io::{self, BufWriter, Write};
use std::path::Path;

use tempfile::NamedTempFile;

use super::FrameBuffer;

/// Maps a channel in `[0, 1]` to `0..=255`, clamping first and rounding
/// half away from zero.
pub fn quantize(channel: f64) -> u8 {
    (channel.clamp(0.0, 1.0) * 255.0).round() as u8
}

pub fn write_ppm<W: Write>(buf: &FrameBuffer, out: W) -> io::Result<()> {
    let mut out = BufWriter::new(out);
    write!(out, "P3\n{} {}\n255\n", buf.width(), buf.height())?;
    for px in buf.pixels() {
        for channel in px.to_array() {
            write!(out, "{} ", quantize(channel))?;
        }
    }
    out.flush()
}

/// Writes `buf` to `path` atomically: the bytes go to a temporary file in the
/// same directory, which is renamed over `path` only once complete.
pub fn save_ppm(buf: &FrameBuffer, path: impl AsRef<Path>) -> io::Result<()> {
    let path = path.as_ref();
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    let mut tmp = NamedTempFile::new_in(dir)?;
    write_ppm(buf, tmp.as_file_mut())?;
    tmp.as_file().sync_all()?;
    let file = tmp.persist(path).map_err(|e| e.error)?;
    // NamedTempFile is created 0600; match what File::create would give.
    #[cfg(unix)]
    {
        use std::os::unix::fs::PermissionsExt;
        let _ = file.set_permissions(fs::Permissions::from_mode(0o644));
    }
    #[cfg(not(unix))]
    let _ = file;
    Ok(())
}
