//! Random contrast recipes and sample archives.
//!
//! Every generator draws from `ChaCha8Rng::seed_from_u64(seed)` in a fixed,
//! documented order, so a dataset is a pure function of its seed and
//! parameters on every platform.

use std::collections::BTreeMap;
use std::f64::consts::FRAC_1_SQRT_2;
use std::fs;
use std::path::{Path, PathBuf};

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::contrast::ContrastGrid;
use crate::error::{Error, Result};
use crate::farfield::DirectionSet;
use crate::forward::ForwardSolver;
use crate::inverse::{expand_cartesian, Term};
use crate::io;
use crate::pipeline::{add_noise, contrast_to_polar_image, PolarGrid, ProcessedData, ProcessingMap};
use crate::pswf::PswfBasis;

pub const MANIFEST_NAME: &str = "manifest.json";
pub const ARCHIVE_FORMAT: &str = "diskscat-archive-1";

/// Generator family of a dataset.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RecipeKind {
    Disks,
    Gaussians,
    PswfCombo,
    RasterImport,
}

impl RecipeKind {
    pub fn name(self) -> &'static str {
        match self {
            RecipeKind::Disks => "disks",
            RecipeKind::Gaussians => "gaussians",
            RecipeKind::PswfCombo => "pswf_combo",
            RecipeKind::RasterImport => "raster_import",
        }
    }
}

/// Point samples of `f` at the cell centres, zeroed outside the unit disk.
fn disk_supported(n: usize, f: impl Fn(f64, f64) -> f64) -> Result<ContrastGrid> {
    ContrastGrid::from_fn(n, |x, y| if x * x + y * y <= 1.0 { f(x, y) } else { 0.0 })
}

/// Union of 1 to 3 constant disks.
///
/// Per sample: the disk count `U{1, 2, 3}`; per disk the radius
/// `U(0.1, 0.3)`, then centre `x`, `y ~ U(-0.4, 0.4)`; finally the peak
/// `U(0.1, 0.8)`. Overlaps add before the sample is scaled to its peak.
pub fn gen_disks(seed: u64, count: usize, n: usize) -> Result<Vec<ContrastGrid>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let k = rng.random_range(1..=3usize);
            let disks: Vec<(f64, f64, f64)> = (0..k)
                .map(|_| {
                    let r = rng.random_range(0.1..0.3);
                    let x = rng.random_range(-0.4..0.4);
                    let y = rng.random_range(-0.4..0.4);
                    (x, y, r)
                })
                .collect();
            let peak = rng.random_range(0.1..0.8);
            let q = disk_union(n, &disks, 1.0)?;
            Ok(q.scaled(peak / q.max_abs()))
        })
        .collect()
}

/// Sum of constant disks `(x, y, radius)` of height `value`, sampled at
/// cell centres.
pub fn disk_union(n: usize, disks: &[(f64, f64, f64)], value: f64) -> Result<ContrastGrid> {
    disk_supported(n, |x, y| {
        value * disks.iter().filter(|&&(cx, cy, r)| (x - cx).hypot(y - cy) < r).count() as f64
    })
}

/// `R sum r_i exp(-a_i (x - x_i)^2 - b_i (y - y_i)^2)`, zero outside `B`.
///
/// Per sample: the count `U{1, 2, 3}`; per bump `a`, `b ~ U(16, 66)`, then
/// `x_i`, `y_i ~ U(-0.4, 0.4)`, then `r_i ~ U(-1, 1)`; finally the target
/// sup-norm `U(0.5, 0.8)` fixing `R`.
pub fn gen_gaussians(seed: u64, count: usize, n: usize) -> Result<Vec<ContrastGrid>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let k = rng.random_range(1..=3usize);
            let bumps: Vec<[f64; 5]> = (0..k)
                .map(|_| {
                    let a = rng.random_range(16.0..66.0);
                    let b = rng.random_range(16.0..66.0);
                    let x = rng.random_range(-0.4..0.4);
                    let y = rng.random_range(-0.4..0.4);
                    let r = rng.random_range(-1.0..1.0);
                    [a, b, x, y, r]
                })
                .collect();
            let target = rng.random_range(0.5..0.8);
            let q = disk_supported(n, |x, y| {
                bumps
                    .iter()
                    .map(|[a, b, cx, cy, r]| r * (-a * (x - cx).powi(2) - b * (y - cy).powi(2)).exp())
                    .sum()
            })?;
            let max = q.max_abs();
            if max == 0.0 {
                // Only reachable if every r_i draws exactly zero.
                return Ok(q);
            }
            Ok(q.scaled(target / max))
        })
        .collect()
}

/// A random PSWF combination together with its expansion.
#[derive(Debug, Clone, PartialEq)]
pub struct PswfCombo {
    pub contrast: ContrastGrid,
    /// Real coefficients of the (scaled) expansion, in basis order.
    pub terms: Vec<Term>,
}

/// `R sum_{m, n < max_index} xi_{m,n,l} chi_{m,n}^{-1/2} psi_{m,n,l}`.
///
/// Per sample: one standard normal `xi` per `(m, n, l)` in basis order
/// (`m`, then `n`, then `l`), then the target sup-norm `U(0.5, 0.8)` over
/// the cell centres fixing `R`.
pub fn gen_pswf_combo(
    seed: u64,
    count: usize,
    max_index: usize,
    basis: &PswfBasis,
    n: usize,
) -> Result<Vec<PswfCombo>> {
    if max_index == 0 || max_index > basis.max_m() + 1 || max_index > basis.max_n() + 1 {
        return Err(Error::BasisBound(format!(
            "combination over m, n < {max_index} needs max_m, max_n >= {}, basis has {} and {}",
            max_index.saturating_sub(1),
            basis.max_m(),
            basis.max_n()
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let mut terms: Vec<Term> = basis
                .entries()
                .filter(|e| e.m < max_index && e.n < max_index)
                .map(|e| {
                    let xi: f64 = rng.sample(StandardNormal);
                    Term {
                        m: e.m,
                        n: e.n,
                        l: e.l,
                        coeff: Complex64::new(xi / e.radial.chi.sqrt(), 0.0),
                    }
                })
                .collect();
            let target = rng.random_range(0.5..0.8);
            let values = expand_cartesian(basis, &terms, n)?;
            let max = values.iter().fold(0.0f64, |m, v| m.max(v.re.abs()));
            let scale = target / max;
            for t in &mut terms {
                t.coeff *= scale;
            }
            let contrast = ContrastGrid::new(n, values.iter().map(|v| v.re * scale).collect())?;
            Ok(PswfCombo { contrast, terms })
        })
        .collect()
}

/// Options for raster import.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RasterOptions {
    /// Grid size `N`.
    pub n: usize,
    /// Contrast assigned to full intensity.
    pub max_amplitude: f64,
    /// Half-width of the centred square the image is mapped to; the default
    /// `1/sqrt(2)` inscribes it in the unit disk.
    pub extent: f64,
    /// Normalized intensities below this are set to zero.
    pub threshold: f64,
}

impl Default for RasterOptions {
    fn default() -> Self {
        Self {
            n: 104,
            max_amplitude: 0.5,
            extent: FRAC_1_SQRT_2,
            threshold: 0.0,
        }
    }
}

/// Load a grayscale raster (8 or 16 bit) as a contrast: intensities are
/// normalized to `[0, max_amplitude]` and sampled bilinearly (edge-clamped)
/// on the centred square; cells outside the square are zero.
pub fn import_raster(path: impl AsRef<Path>, opts: RasterOptions) -> Result<ContrastGrid> {
    let path = path.as_ref();
    if !(opts.extent > 0.0 && opts.extent <= 1.0) || opts.max_amplitude < 0.0 {
        return Err(Error::InvalidArgument(format!(
            "raster extent must lie in (0, 1] and amplitude be >= 0, got {} and {}",
            opts.extent, opts.max_amplitude
        )));
    }
    let img = image::open(path)?.into_luma16();
    let (w, h) = (img.width() as usize, img.height() as usize);
    if w < 2 || h < 2 {
        return Err(Error::Shape(format!("{}: raster is {w} x {h}", path.display())));
    }
    let pixel = |ix: usize, iy: usize| {
        let v = img.get_pixel(ix as u32, iy as u32)[0] as f64 / u16::MAX as f64;
        if v < opts.threshold {
            0.0
        } else {
            v
        }
    };
    let e = opts.extent;
    ContrastGrid::from_fn(opts.n, |x, y| {
        if x.abs() > e || y.abs() > e {
            return 0.0;
        }
        // Image rows run top to bottom; pixel centres span the square.
        let fx = ((x + e) / (2.0 * e) * w as f64 - 0.5).clamp(0.0, (w - 1) as f64);
        let fy = ((e - y) / (2.0 * e) * h as f64 - 0.5).clamp(0.0, (h - 1) as f64);
        let (x0, y0) = (fx.floor() as usize, fy.floor() as usize);
        let (x1, y1) = ((x0 + 1).min(w - 1), (y0 + 1).min(h - 1));
        let (tx, ty) = (fx - x0 as f64, fy - y0 as f64);
        let v = (1.0 - ty) * ((1.0 - tx) * pixel(x0, y0) + tx * pixel(x1, y0))
            + ty * ((1.0 - tx) * pixel(x0, y1) + tx * pixel(x1, y1));
        opts.max_amplitude * v
    })
}

/// Write the whole grid as a 16-bit grayscale PNG, mapping `[0,
/// max_amplitude]` to full range (values outside are clamped). Importing
/// with `extent = 1` and the same `N` recovers the grid to within half a
/// quantization step, `max_amplitude / 131070`.
pub fn export_raster(q: &ContrastGrid, path: impl AsRef<Path>, max_amplitude: f64) -> Result<()> {
    if max_amplitude <= 0.0 {
        return Err(Error::InvalidArgument("raster amplitude must be positive".into()));
    }
    let n = q.n();
    let img = image::ImageBuffer::<image::Luma<u16>, Vec<u16>>::from_fn(n as u32, n as u32, |px, py| {
        // Top image row is the largest y.
        let v = q.get(px as usize, n - 1 - py as usize) / max_amplitude;
        image::Luma([(v.clamp(0.0, 1.0) * u16::MAX as f64).round() as u16])
    });
    let path = path.as_ref();
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        fs::create_dir_all(dir).map_err(|e| Error::io(dir, e))?;
    }
    img.save(path)?;
    Ok(())
}

/// Multiplicative noise applied to the full far field of every sample; the
/// sample at position `i` uses seed `seed + i`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct NoiseSpec {
    pub delta: f64,
    pub seed: u64,
}

/// Settings shared by every sample of an archive.
#[derive(Debug, Clone, PartialEq)]
pub struct ArchiveConfig {
    pub recipe: RecipeKind,
    pub seed: u64,
    pub k: f64,
    /// Number of incident and of observation directions (uniform).
    pub directions: usize,
    pub grid: PolarGrid,
    pub noise: Option<NoiseSpec>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FileRecord {
    pub path: String,
    pub sha256: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SampleRecord {
    pub id: String,
    /// Degree of nonlinearity of the sample.
    pub rel: f64,
    pub max_residual: f64,
    /// Keys: `q` (CGR1), `full`, `born` (FFM1), `u`, `ub`, `q_polar` and,
    /// with noise, `u_noisy` (PRC1).
    pub files: BTreeMap<String, FileRecord>,
}

/// Index of an archive directory, stored as `manifest.json`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Manifest {
    pub format: String,
    pub recipe: RecipeKind,
    pub seed: u64,
    pub k: f64,
    pub c: f64,
    pub grid_n: usize,
    pub n_obs: usize,
    pub n_inc: usize,
    pub n1: usize,
    pub n2: usize,
    pub noise: Option<NoiseSpec>,
    pub samples: Vec<SampleRecord>,
}

fn sha256_hex(bytes: &[u8]) -> String {
    Sha256::digest(bytes).iter().map(|b| format!("{b:02x}")).collect()
}

/// Simulate, process and store every contrast under `out`, then write the
/// manifest. Samples are solved one after another (each solve is parallel
/// over incidences) and written by this thread only.
pub fn build_samples(contrasts: &[ContrastGrid], cfg: &ArchiveConfig, out: &Path) -> Result<Manifest> {
    let n = match contrasts.first() {
        Some(q) => q.n(),
        None => return Err(Error::InvalidArgument("no contrasts to simulate".into())),
    };
    if contrasts.iter().any(|q| q.n() != n) {
        return Err(Error::Shape("all contrasts of an archive must share one grid".into()));
    }
    let dirs = DirectionSet::uniform(cfg.directions)?;
    let solver = ForwardSolver::new(n, cfg.k)?;
    let map = ProcessingMap::new(&dirs, &dirs, &cfg.grid, None);
    fs::create_dir_all(out).map_err(|e| Error::io(out, e))?;

    let mut samples = Vec::with_capacity(contrasts.len());
    for (i, q) in contrasts.iter().enumerate() {
        let id = format!("{}-{i:05}", cfg.recipe.name());
        let tag = |e: Error| Error::Sample {
            id: id.clone(),
            source: Box::new(e),
        };
        let sim = solver.simulate(q, &dirs, &dirs).map_err(tag)?;
        let rel = sim.rel.ok_or(Error::ZeroField).map_err(tag)?;
        let u = map.apply(&sim.full, &cfg.grid).map_err(tag)?;
        let ub = map.apply(&sim.born, &cfg.grid).map_err(tag)?;
        let polar: Vec<Complex64> = contrast_to_polar_image(q, &cfg.grid)
            .into_iter()
            .map(|v| Complex64::new(v, 0.0))
            .collect();
        let q_polar = ProcessedData::new(u.c, cfg.grid.clone(), polar, None).map_err(tag)?;

        let mut blobs: Vec<(&str, String, Vec<u8>)> = vec![
            ("q", format!("{id}.q.cgr1"), io::encode_contrast(q)),
            ("full", format!("{id}.full.ffm1"), io::encode_far_field(&sim.full)),
            ("born", format!("{id}.born.ffm1"), io::encode_far_field(&sim.born)),
            ("u", format!("{id}.u.prc1"), io::encode_processed(&u)),
            ("ub", format!("{id}.ub.prc1"), io::encode_processed(&ub)),
            ("q_polar", format!("{id}.q_polar.prc1"), io::encode_processed(&q_polar)),
        ];
        if let Some(noise) = cfg.noise {
            let noisy = add_noise(&sim.full, noise.delta, noise.seed.wrapping_add(i as u64)).map_err(tag)?;
            let un = map.apply(&noisy, &cfg.grid).map_err(tag)?;
            blobs.push(("u_noisy", format!("{id}.u_noisy.prc1"), io::encode_processed(&un)));
        }
        let mut files = BTreeMap::new();
        for (key, name, bytes) in blobs {
            io::write_file(&out.join(&name), &bytes)?;
            files.insert(
                key.to_string(),
                FileRecord {
                    path: name,
                    sha256: sha256_hex(&bytes),
                },
            );
        }
        samples.push(SampleRecord {
            id,
            rel,
            max_residual: sim.max_residual,
            files,
        });
    }
    let manifest = Manifest {
        format: ARCHIVE_FORMAT.to_string(),
        recipe: cfg.recipe,
        seed: cfg.seed,
        k: cfg.k,
        c: 2.0 * cfg.k,
        grid_n: n,
        n_obs: cfg.directions,
        n_inc: cfg.directions,
        n1: cfg.grid.n1(),
        n2: cfg.grid.n2(),
        noise: cfg.noise,
        samples,
    };
    let text = serde_json::to_string_pretty(&manifest).map_err(|e| Error::format("manifest", e.to_string()))?;
    io::write_file(&out.join(MANIFEST_NAME), text.as_bytes())?;
    Ok(manifest)
}

pub fn read_manifest(dir: &Path) -> Result<Manifest> {
    let path = dir.join(MANIFEST_NAME);
    let text = fs::read_to_string(&path).map_err(|e| Error::io(&path, e))?;
    let manifest: Manifest = serde_json::from_str(&text).map_err(|e| Error::format("manifest", e.to_string()))?;
    if manifest.format != ARCHIVE_FORMAT {
        return Err(Error::format(
            "manifest",
            format!("unknown format {:?}", manifest.format),
        ));
    }
    Ok(manifest)
}

/// Path of a sample file, rejecting names that escape the archive.
pub fn archive_path(dir: &Path, record: &FileRecord) -> Result<PathBuf> {
    let rel = Path::new(&record.path);
    if rel.is_absolute() || rel.components().any(|c| !matches!(c, std::path::Component::Normal(_))) {
        return Err(Error::format("manifest", format!("unsafe path {:?}", record.path)));
    }
    Ok(dir.join(rel))
}

/// Check that every referenced file exists, matches its checksum, parses,
/// and agrees with the manifest's shapes.
pub fn verify_archive(dir: &Path) -> Result<Manifest> {
    let manifest = read_manifest(dir)?;
    for s in &manifest.samples {
        let tag = |e: Error| Error::Sample {
            id: s.id.clone(),
            source: Box::new(e),
        };
        for (key, rec) in &s.files {
            let path = archive_path(dir, rec).map_err(tag)?;
            let bytes = fs::read(&path).map_err(|e| tag(Error::io(&path, e)))?;
            if sha256_hex(&bytes) != rec.sha256 {
                return Err(tag(Error::format("archive", format!("checksum mismatch for {key}"))));
            }
            let shape_ok = match rec.path.rsplit('.').next() {
                Some("cgr1") => io::decode_contrast(&bytes).map_err(tag)?.n() == manifest.grid_n,
                Some("ffm1") => {
                    let ff = io::decode_far_field(&bytes).map_err(tag)?;
                    ff.n_obs() == manifest.n_obs && ff.n_inc() == manifest.n_inc
                }
                Some("prc1") => {
                    let u = io::decode_processed(&bytes).map_err(tag)?;
                    u.grid.n1() == manifest.n1 && u.grid.n2() == manifest.n2
                }
                _ => return Err(tag(Error::format("archive", format!("unknown file type {}", rec.path)))),
            };
            if !shape_ok {
                return Err(tag(Error::Shape(format!("{key} disagrees with the manifest"))));
            }
        }
    }
    Ok(manifest)
}

/// Named test objects.
pub mod presets {
    use super::*;

    /// Centred disk of radius `radius` and value `q`, cell-averaged with
    /// `8 x 8` sub-samples.
    pub fn centered_disk(n: usize, radius: f64, q: f64) -> Result<ContrastGrid> {
        ContrastGrid::from_fn_averaged(n, 8, |x, y| if x.hypot(y) < radius { q } else { 0.0 })
    }

    /// Three separated disks of common value `q`; at `k = 16` their degree
    /// of nonlinearity is about 2.4 for `q = 0.7` and 3.3 for `q = 1`.
    pub fn three_disks(n: usize, q: f64) -> Result<ContrastGrid> {
        disk_union(n, &[(-0.3, 0.25, 0.28), (0.3, 0.2, 0.28), (0.0, -0.3, 0.3)], q)
    }

    /// Grid of 25 Gaussian bumps with random weights `r_j ~ U(-1, 1)` and
    /// centre jitters `U(-0.005, 0.015)`, scaled to sup-norm 0.7. Draw order
    /// per bump: `n_j`, `m_j`, `r_j`.
    pub fn gaussian_grid(n: usize, seed: u64) -> Result<ContrastGrid> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let bumps: Vec<[f64; 3]> = (1..=25)
            .map(|j| {
                let a = 0.25 * (j % 5) as f64 - 0.5;
                let b = -0.25 * (j / 5) as f64 + 0.5;
                let nj = rng.random_range(-0.005..0.015);
                let mj = rng.random_range(-0.005..0.015);
                let r = rng.random_range(-1.0..1.0);
                [a + nj, b + mj, r]
            })
            .collect();
        let q = disk_supported(n, |x, y| {
            bumps
                .iter()
                .map(|[cx, cy, r]| r * (-45.0 * (x - cx).powi(2) - 60.0 * (y - cy).powi(2)).exp())
                .sum()
        })?;
        Ok(q.scaled(0.7 / q.max_abs()))
    }

    /// `0.6 (1 - |x|^2) cos(x) sin(y)` on the disk.
    pub fn smooth_bump(n: usize) -> Result<ContrastGrid> {
        disk_supported(n, |x, y| 0.6 * (1.0 - x * x - y * y) * x.cos() * y.sin())
    }
}
