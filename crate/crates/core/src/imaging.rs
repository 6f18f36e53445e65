//! PNG heatmaps with a fixed colormap and a plain-text range sidecar.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use crate::error::{Error, Result};
use crate::io::write_file;

/// Viridis control points, evenly spaced on `[0, 1]`.
const STOPS: [[f64; 3]; 9] = [
    [68.0, 1.0, 84.0],
    [71.0, 44.0, 122.0],
    [59.0, 81.0, 139.0],
    [44.0, 113.0, 142.0],
    [33.0, 144.0, 141.0],
    [39.0, 173.0, 129.0],
    [92.0, 200.0, 99.0],
    [170.0, 220.0, 50.0],
    [253.0, 231.0, 37.0],
];

/// Colour of `t` clamped to `[0, 1]`.
pub fn colormap(t: f64) -> [u8; 3] {
    let t = if t.is_finite() { t.clamp(0.0, 1.0) } else { 0.0 };
    let s = t * (STOPS.len() - 1) as f64;
    let i = (s.floor() as usize).min(STOPS.len() - 2);
    let f = s - i as f64;
    let mut rgb = [0u8; 3];
    for (c, out) in rgb.iter_mut().enumerate() {
        *out = (STOPS[i][c] * (1.0 - f) + STOPS[i + 1][c] * f).round() as u8;
    }
    rgb
}

/// Write a `width x height` row-major field as a PNG (first row at the
/// bottom, so row index grows with `y`), scaled by `scale` pixels per cell,
/// plus `<path>.txt` recording the colour range.
pub fn write_heatmap(
    path: impl AsRef<Path>,
    values: &[f64],
    width: usize,
    height: usize,
    scale: usize,
    label: &str,
) -> Result<()> {
    let path = path.as_ref();
    if values.len() != width * height || width == 0 || height == 0 || scale == 0 {
        return Err(Error::Shape(format!(
            "heatmap of {} values cannot be {width} x {height}",
            values.len()
        )));
    }
    let (lo, hi) = values
        .iter()
        .filter(|v| v.is_finite())
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(a, b), &v| (a.min(v), b.max(v)));
    let (lo, hi) = if lo.is_finite() { (lo, hi) } else { (0.0, 0.0) };
    let span = if hi > lo { hi - lo } else { 1.0 };
    let img = image::RgbImage::from_fn((width * scale) as u32, (height * scale) as u32, |px, py| {
        let ix = px as usize / scale;
        let iy = height - 1 - py as usize / scale;
        image::Rgb(colormap((values[iy * width + ix] - lo) / span))
    });
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        fs::create_dir_all(dir).map_err(|e| Error::io(dir, e))?;
    }
    img.save(path)?;
    let mut side = String::new();
    let _ = writeln!(side, "label: {label}");
    let _ = writeln!(side, "min: {lo:e}");
    let _ = writeln!(side, "max: {hi:e}");
    let _ = writeln!(side, "colormap: viridis");
    let mut sidecar = path.as_os_str().to_owned();
    sidecar.push(".txt");
    write_file(Path::new(&sidecar), side.as_bytes())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn colormap_endpoints() {
        assert_eq!(colormap(0.0), [68, 1, 84]);
        assert_eq!(colormap(1.0), [253, 231, 37]);
        assert_eq!(colormap(-3.0), colormap(0.0));
        assert_eq!(colormap(f64::NAN), colormap(0.0));
    }

    #[test]
    fn heatmap_and_sidecar() {
        let dir = tempfile::tempdir().unwrap();
        let p = dir.path().join("h.png");
        write_heatmap(&p, &[0.0, 1.0, 2.0, 3.0], 2, 2, 3, "test").unwrap();
        let img = image::open(&p).unwrap().into_rgb8();
        assert_eq!(img.dimensions(), (6, 6));
        // Value 0 sits at the bottom left.
        assert_eq!(img.get_pixel(0, 5).0, colormap(0.0));
        let side = fs::read_to_string(dir.path().join("h.png.txt")).unwrap();
        assert!(side.contains("max: 3e0"));
        assert!(write_heatmap(&p, &[0.0], 2, 2, 1, "bad").is_err());
    }
}
