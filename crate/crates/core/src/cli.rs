//! Command-line front end.
//!
//! Every subcommand accepts `--config FILE`, a flat `key=value` file whose
//! keys are long flag names (`k=16`, `n1=104`); flags given on the command
//! line take precedence.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::Command as Process;

use clap::{Args, CommandFactory, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use sha2::{Digest, Sha256};

use crate::contrast::ContrastGrid;
use crate::dataset::{self, presets, ArchiveConfig, NoiseSpec, RasterOptions, RecipeKind};
use crate::error::{Error, Result};
use crate::farfield::DirectionSet;
use crate::forward::ForwardSolver;
use crate::imaging::write_heatmap;
use crate::inverse::{self, Reconstruction};
use crate::io;
use crate::pipeline::{self, PolarGrid, ProcessedData, DEFAULT_N1, DEFAULT_N2};
use crate::pswf::{alpha_plateau, build_basis, PswfBasis};

#[derive(Debug, Parser)]
#[command(name = "diskscat", version, about = "Inverse medium scattering on the unit disk")]
#[command(args_override_self = true)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

/// Settings shared by the simulation and processing commands.
#[derive(Debug, Clone, Args)]
pub struct RunConfig {
    /// Wavenumber; the processed data have bandwidth c = 2k.
    #[arg(long, allow_negative_numbers = true, default_value_t = 16.0)]
    pub k: f64,
    /// Cartesian grid size N on [-1, 1]^2.
    #[arg(long, default_value_t = 104)]
    pub grid: usize,
    /// Number of incident directions.
    #[arg(long, default_value_t = 104)]
    pub ninc: usize,
    /// Number of observation directions.
    #[arg(long, default_value_t = 104)]
    pub nobs: usize,
    /// Angular nodes of the polar grid.
    #[arg(long, default_value_t = DEFAULT_N1)]
    pub n1: usize,
    /// Radial nodes of the polar grid.
    #[arg(long, default_value_t = DEFAULT_N2)]
    pub n2: usize,
    /// Random seed.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Flat key=value file with defaults for any flag of the command.
    #[arg(long)]
    pub config: Option<PathBuf>,
}

/// Basis source and cutoff for inversion.
#[derive(Debug, Clone, Args)]
pub struct InvertArgs {
    /// Basis cache (PSWF1); built on the fly when absent.
    #[arg(long)]
    pub basis: Option<PathBuf>,
    /// Highest angular order of an on-the-fly basis.
    #[arg(long, default_value_t = 10)]
    pub max_m: usize,
    /// Highest radial index of an on-the-fly basis.
    #[arg(long, default_value_t = 10)]
    pub max_n: usize,
    /// Keep |alpha| > eta (default 1e-2 max|alpha|).
    #[arg(long, allow_negative_numbers = true, conflicts_with = "alpha_reg")]
    pub eta: Option<f64>,
    /// Keep chi < 1/alpha_reg instead of an |alpha| cutoff.
    #[arg(long, allow_negative_numbers = true)]
    pub alpha_reg: Option<f64>,
    /// Cartesian output grid size.
    #[arg(long, default_value_t = 104)]
    pub grid: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Preset {
    Disk,
    ThreeDisks,
    GaussianGrid,
    SmoothBump,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Recipe {
    Disks,
    Gaussians,
    /// PSWF combinations over m, n < 5.
    Pswf5,
    /// PSWF combinations over m, n < 10.
    Pswf10,
    /// Grayscale PNGs from --raster-dir.
    Raster,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build the PSWF basis, print its tables and write a cache file.
    Basis {
        /// Bandwidth c (default 2k).
        #[arg(long, allow_negative_numbers = true)]
        c: Option<f64>,
        /// Wavenumber; the bandwidth is c = 2k.
        #[arg(long, allow_negative_numbers = true, default_value_t = 16.0)]
        k: f64,
        /// Highest angular order m.
        #[arg(long, default_value_t = 10)]
        max_m: usize,
        /// Highest radial index n.
        #[arg(long, default_value_t = 10)]
        max_n: usize,
        /// Output path.
        #[arg(long, default_value = "basis.pswf1")]
        out: PathBuf,
        /// Flat key=value file with defaults for any flag of the command.
        #[arg(long)]
        config: Option<PathBuf>,
    },
    /// Simulate full and Born far fields of a contrast.
    Simulate {
        #[command(flatten)]
        run: RunConfig,
        /// Contrast file (CGR1, or CSV by extension).
        #[arg(long, required_unless_present = "preset")]
        contrast: Option<PathBuf>,
        /// Built-in test object instead of a contrast file.
        #[arg(long, conflicts_with = "contrast")]
        preset: Option<Preset>,
        /// Contrast value of the disk presets.
        #[arg(long, allow_negative_numbers = true, default_value_t = 0.3)]
        amplitude: f64,
        /// Also write a copy with multiplicative noise of this level.
        #[arg(long, allow_negative_numbers = true)]
        noise: Option<f64>,
        /// Output path.
        #[arg(long, default_value = "simulation")]
        out: PathBuf,
    },
    /// Turn a far-field matrix into processed data.
    Process {
        #[command(flatten)]
        run: RunConfig,
        /// FFM1 input.
        #[arg(long)]
        input: PathBuf,
        /// Mask to the aperture [-theta, theta] before processing.
        #[arg(long, allow_negative_numbers = true)]
        aperture: Option<f64>,
        /// Add multiplicative noise of this level before processing.
        #[arg(long, allow_negative_numbers = true)]
        noise: Option<f64>,
        /// Output path.
        #[arg(long, default_value = "processed.prc1")]
        out: PathBuf,
        /// Also write a CSV dump.
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Low-rank reconstruction from processed data.
    Invert {
        /// PRC1 input.
        #[arg(long)]
        input: PathBuf,
        #[command(flatten)]
        inv: InvertArgs,
        /// Reference contrast for an error report: CGR1 or CSV, or a PRC1
        /// polar image compared node by node.
        #[arg(long)]
        truth: Option<PathBuf>,
        /// Output path.
        #[arg(long, default_value = "reconstruction")]
        out: PathBuf,
        /// Flat key=value file with defaults for any flag of the command.
        #[arg(long)]
        config: Option<PathBuf>,
    },
    /// List the basis entries retained by a cutoff and the count curve.
    Profile {
        /// Basis cache (PSWF1).
        #[arg(long)]
        basis: PathBuf,
        /// Keep |alpha| > eta (default 1e-2 max|alpha|).
        #[arg(long, allow_negative_numbers = true)]
        eta: Option<f64>,
        /// CSV of retained count against eta (40 log-spaced values).
        #[arg(long)]
        curve: Option<PathBuf>,
        /// Flat key=value file with defaults for any flag of the command.
        #[arg(long)]
        config: Option<PathBuf>,
    },
    /// Generate contrasts, simulate them and write a sample archive.
    Dataset {
        #[command(flatten)]
        run: RunConfig,
        /// Contrast generator.
        #[arg(long, value_enum, default_value = "disks")]
        recipe: Recipe,
        /// Number of samples.
        #[arg(long, default_value_t = 2000)]
        count: usize,
        /// Noise level of an extra noisy processed copy per sample.
        #[arg(long, allow_negative_numbers = true)]
        noise: Option<f64>,
        /// Basis cache for the PSWF recipes.
        #[arg(long)]
        basis: Option<PathBuf>,
        /// Directory of grayscale PNGs for the raster recipe.
        #[arg(long)]
        raster_dir: Option<PathBuf>,
        /// Contrast assigned to full raster intensity.
        #[arg(long, allow_negative_numbers = true, default_value_t = 0.5)]
        raster_amplitude: f64,
        /// Output path.
        #[arg(long, default_value = "dataset")]
        out: PathBuf,
    },
    /// Check an archive's checksums and shapes.
    Verify {
        /// Archive directory.
        #[arg(long)]
        archive: PathBuf,
        /// Flat key=value file with defaults for any flag of the command.
        #[arg(long)]
        config: Option<PathBuf>,
    },
    /// Reconstruct every sample of an archive and report L2(B) errors.
    Eval {
        /// Archive directory.
        #[arg(long)]
        archive: PathBuf,
        /// Which processed record to invert.
        #[arg(long, default_value = "u")]
        key: String,
        #[command(flatten)]
        inv: InvertArgs,
        /// Write heatmaps of every sample here.
        #[arg(long)]
        png_dir: Option<PathBuf>,
        /// Output path.
        #[arg(long, default_value = "eval.csv")]
        out: PathBuf,
        /// Flat key=value file with defaults for any flag of the command.
        #[arg(long)]
        config: Option<PathBuf>,
    },
    /// Validate externally corrected data against the original and invert.
    Correct {
        /// PRC1 data before correction.
        #[arg(long)]
        original: PathBuf,
        /// Corrected PRC1 data.
        #[arg(long)]
        corrected: PathBuf,
        /// Command producing the corrected file; `{input}` and `{output}` are
        /// replaced by the two paths (e.g. "cp {input} {output}").
        #[arg(long)]
        corrector_cmd: Option<String>,
        #[command(flatten)]
        inv: InvertArgs,
        /// Reference contrast for an error report: CGR1 or CSV, or a PRC1
        /// polar image compared node by node.
        #[arg(long)]
        truth: Option<PathBuf>,
        /// Output path.
        #[arg(long, default_value = "corrected")]
        out: PathBuf,
        /// Flat key=value file with defaults for any flag of the command.
        #[arg(long)]
        config: Option<PathBuf>,
    },
}

/// Parse `key=value` lines; `#` starts a comment.
pub fn parse_config(text: &str) -> Result<Vec<(String, String)>> {
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (k, v) = line
            .split_once('=')
            .ok_or_else(|| Error::InvalidArgument(format!("config line {}: expected key=value", i + 1)))?;
        out.push((k.trim().replace('_', "-"), v.trim().to_string()));
    }
    Ok(out)
}

/// Insert `--key value` pairs from a `--config` file right after the
/// subcommand name, so that explicit flags (which come later) win.
fn expand_config(args: Vec<OsString>) -> Result<Vec<OsString>> {
    let pos = args.iter().position(|a| a == "--config");
    let inline = args.iter().enumerate().find_map(|(i, a)| {
        a.to_str()
            .and_then(|s| s.strip_prefix("--config="))
            .map(|p| (i, p.to_string()))
    });
    let path = match (pos, inline) {
        (Some(i), _) => match args.get(i + 1) {
            Some(p) => PathBuf::from(p),
            None => return Ok(args),
        },
        (None, Some((_, p))) => PathBuf::from(p),
        (None, None) => return Ok(args),
    };
    let text = fs::read_to_string(&path).map_err(|e| Error::io(&path, e))?;
    let entries = parse_config(&text)?;
    let sub_pos = 1;
    let Some(sub_name) = args.get(sub_pos).and_then(|s| s.to_str()) else {
        return Ok(args);
    };
    let cmd = Cli::command();
    let Some(sub) = cmd.find_subcommand(sub_name) else {
        return Ok(args);
    };
    let known: Vec<String> = sub
        .get_arguments()
        .filter_map(|a| a.get_long().map(str::to_string))
        .collect();
    let mut injected = Vec::new();
    for (k, v) in entries {
        if k == "config" {
            continue;
        }
        if !known.contains(&k) {
            return Err(Error::InvalidArgument(format!(
                "config key {k:?} is not an option of `{sub_name}`"
            )));
        }
        injected.push(OsString::from(format!("--{k}")));
        injected.push(OsString::from(v));
    }
    let mut out = args[..=sub_pos].to_vec();
    out.extend(injected);
    out.extend_from_slice(&args[sub_pos + 1..]);
    Ok(out)
}

/// Entry point of the binary: parse, run, and map errors to exit codes.
pub fn main() -> i32 {
    let args: Vec<OsString> = std::env::args_os().collect();
    let args = match expand_config(args) {
        Ok(a) => a,
        Err(e) => {
            eprintln!("error: {e}");
            return e.category().exit_code();
        }
    };
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match run(cli) {
        Ok(report) => {
            print!("{report}");
            0
        }
        Err(e) => {
            eprintln!("error: {e}");
            e.category().exit_code()
        }
    }
}

/// Execute a parsed command; returns the text to print on success.
pub fn run(cli: Cli) -> Result<String> {
    match cli.command {
        Command::Basis {
            c,
            k,
            max_m,
            max_n,
            out,
            ..
        } => cmd_basis(c.unwrap_or(2.0 * k), max_m, max_n, &out),
        Command::Simulate {
            run,
            contrast,
            preset,
            amplitude,
            noise,
            out,
        } => cmd_simulate(&run, contrast.as_deref(), preset, amplitude, noise, &out),
        Command::Process {
            run,
            input,
            aperture,
            noise,
            out,
            csv,
        } => cmd_process(&run, &input, aperture, noise, &out, csv.as_deref()),
        Command::Invert {
            input, inv, truth, out, ..
        } => cmd_invert(&io::read_processed(&input)?, &inv, truth.as_deref(), &out),
        Command::Profile { basis, eta, curve, .. } => cmd_profile(&io::read_basis(&basis)?, eta, curve.as_deref()),
        Command::Dataset {
            run,
            recipe,
            count,
            noise,
            basis,
            raster_dir,
            raster_amplitude,
            out,
        } => cmd_dataset(
            &run,
            recipe,
            count,
            noise,
            basis.as_deref(),
            raster_dir.as_deref(),
            raster_amplitude,
            &out,
        ),
        Command::Verify { archive, .. } => {
            let m = dataset::verify_archive(&archive)?;
            Ok(format!("{}: {} samples verified\n", archive.display(), m.samples.len()))
        }
        Command::Eval {
            archive,
            key,
            inv,
            png_dir,
            out,
            ..
        } => cmd_eval(&archive, &key, &inv, png_dir.as_deref(), &out),
        Command::Correct {
            original,
            corrected,
            corrector_cmd,
            inv,
            truth,
            out,
            ..
        } => cmd_correct(
            &original,
            &corrected,
            corrector_cmd.as_deref(),
            &inv,
            truth.as_deref(),
            &out,
        ),
    }
}

fn sha256_file(path: &Path) -> Result<String> {
    let bytes = fs::read(path).map_err(|e| Error::io(path, e))?;
    Ok(Sha256::digest(&bytes).iter().map(|b| format!("{b:02x}")).collect())
}

fn sidecar(path: &Path, ext: &str) -> PathBuf {
    let mut s = path.as_os_str().to_owned();
    s.push(ext);
    PathBuf::from(s)
}

fn basis_table(basis: &PswfBasis) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "c = {}, 2 pi / c = {:.6e}", basis.c(), alpha_plateau(basis.c()));
    let _ = writeln!(s, "{:>3} {:>3} {:>14} {:>14}", "m", "n", "|alpha|", "chi");
    for m in 0..=basis.max_m() {
        for n in 0..=basis.max_n() {
            let a = basis.alpha(m, n).expect("in range").norm();
            let chi = basis.radial(m, n).expect("in range").chi;
            let _ = writeln!(s, "{m:>3} {n:>3} {a:>14.6e} {chi:>14.6e}");
        }
    }
    s
}

/// Build or reuse a basis cache; a cache whose parameters and recorded
/// checksum match is left untouched.
pub fn cmd_basis(c: f64, max_m: usize, max_n: usize, out: &Path) -> Result<String> {
    let hash_path = sidecar(out, ".sha256");
    if out.exists() && hash_path.exists() {
        let recorded = fs::read_to_string(&hash_path).map_err(|e| Error::io(&hash_path, e))?;
        if recorded.trim() == sha256_file(out)? {
            if let Ok(b) = io::read_basis(out) {
                if b.c() == c && b.max_m() == max_m && b.max_n() == max_n {
                    return Ok(format!("cache hit: {}\n{}", out.display(), basis_table(&b)));
                }
            }
        }
    }
    let basis = build_basis(c, max_m, max_n)?;
    io::write_basis(out, &basis)?;
    io::write_file(&hash_path, format!("{}\n", sha256_file(out)?).as_bytes())?;
    Ok(format!("wrote {}\n{}", out.display(), basis_table(&basis)))
}

fn read_contrast_any(path: &Path) -> Result<ContrastGrid> {
    if path.extension().is_some_and(|e| e.eq_ignore_ascii_case("csv")) {
        let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        io::contrast_from_csv(&text)
    } else {
        io::read_contrast(path)
    }
}

pub fn cmd_simulate(
    run: &RunConfig,
    contrast: Option<&Path>,
    preset: Option<Preset>,
    amplitude: f64,
    noise: Option<f64>,
    out: &Path,
) -> Result<String> {
    let q = match (contrast, preset) {
        (Some(p), _) => read_contrast_any(p)?,
        (None, Some(Preset::Disk)) => presets::centered_disk(run.grid, 0.5, amplitude)?,
        (None, Some(Preset::ThreeDisks)) => presets::three_disks(run.grid, amplitude)?,
        (None, Some(Preset::GaussianGrid)) => presets::gaussian_grid(run.grid, run.seed)?,
        (None, Some(Preset::SmoothBump)) => presets::smooth_bump(run.grid)?,
        (None, None) => return Err(Error::InvalidArgument("give --contrast or --preset".into())),
    };
    let inc = DirectionSet::uniform(run.ninc)?;
    let obs = DirectionSet::uniform(run.nobs)?;
    let sim = ForwardSolver::new(q.n(), run.k)?.simulate(&q, &inc, &obs)?;
    io::write_contrast(out.join("contrast.cgr1"), &q)?;
    io::write_far_field(out.join("full.ffm1"), &sim.full)?;
    io::write_far_field(out.join("born.ffm1"), &sim.born)?;
    let mut report = format!(
        "wrote {}/{{contrast.cgr1, full.ffm1, born.ffm1}}\nmax GMRES residual {:.3e} ({} iterations)\n",
        out.display(),
        sim.max_residual,
        sim.max_iterations
    );
    if let Some(delta) = noise {
        let noisy = pipeline::add_noise(&sim.full, delta, run.seed)?;
        io::write_far_field(out.join("noisy.ffm1"), &noisy)?;
        let _ = writeln!(
            report,
            "wrote {}/noisy.ffm1 (delta {delta}, seed {})",
            out.display(),
            run.seed
        );
    }
    let rel = sim.rel.ok_or(Error::ZeroField)?;
    let _ = writeln!(report, "rel(k) = {rel:.6}");
    Ok(report)
}

pub fn cmd_process(
    run: &RunConfig,
    input: &Path,
    aperture: Option<f64>,
    noise: Option<f64>,
    out: &Path,
    csv: Option<&Path>,
) -> Result<String> {
    let mut ff = io::read_far_field(input)?;
    if let Some(delta) = noise {
        ff = pipeline::add_noise(&ff, delta, run.seed)?;
    }
    if let Some(theta) = aperture {
        ff = pipeline::apply_limited_aperture(&ff, theta)?;
    }
    let grid = PolarGrid::new(run.n1, run.n2)?;
    let u = pipeline::process_far_field(&ff, &grid)?;
    io::write_processed(out, &u)?;
    if let Some(p) = csv {
        io::write_file(p, io::processed_to_csv(&u).as_bytes())?;
    }
    let zeros = u.values.iter().filter(|v| v.norm() == 0.0).count();
    Ok(format!(
        "wrote {} (c = {}, {} x {}, {} zero nodes)\n",
        out.display(),
        u.c,
        grid.n2(),
        grid.n1(),
        zeros
    ))
}

fn load_basis(inv: &InvertArgs, c: f64) -> Result<PswfBasis> {
    match &inv.basis {
        Some(p) => io::read_basis(p),
        None => build_basis(c, inv.max_m, inv.max_n),
    }
}

fn reconstruct(u: &ProcessedData, basis: &PswfBasis, inv: &InvertArgs) -> Result<Reconstruction> {
    match (inv.eta, inv.alpha_reg) {
        (_, Some(a)) => inverse::invert_sl(u, basis, a, inv.grid),
        (Some(eta), None) => inverse::invert_eta(u, basis, eta, inv.grid),
        (None, None) => inverse::invert_eta(u, basis, default_eta(basis), inv.grid),
    }
}

/// `1e-2 max |alpha|`.
pub fn default_eta(basis: &PswfBasis) -> f64 {
    1e-2 * basis.entries().map(|e| e.alpha.norm()).fold(0.0, f64::max)
}

/// Relative `L^2(B)` error of a polar reconstruction against polar truth.
pub fn polar_error(grid: &PolarGrid, approx: &[Complex64], truth: &[Complex64]) -> f64 {
    let diff: Vec<Complex64> = approx.iter().zip(truth).map(|(a, b)| a - b).collect();
    grid.norm(&diff) / grid.norm(truth)
}

fn truth_on_grid(q: &ContrastGrid, grid: &PolarGrid) -> Vec<Complex64> {
    pipeline::contrast_to_polar_image(q, grid)
        .into_iter()
        .map(|v| Complex64::new(v, 0.0))
        .collect()
}

pub fn cmd_invert(u: &ProcessedData, inv: &InvertArgs, truth: Option<&Path>, out: &Path) -> Result<String> {
    let basis = load_basis(inv, u.c)?;
    let rec = reconstruct(u, &basis, inv)?;
    let real = rec.real_contrast()?;
    io::write_contrast(out.join("reconstruction.cgr1"), &real)?;
    let polar = ProcessedData::new(u.c, u.grid.clone(), rec.polar.clone(), u.aperture)?;
    io::write_processed(out.join("reconstruction_polar.prc1"), &polar)?;
    io::write_file(
        &out.join("coefficients.csv"),
        io::coefficients_to_csv(&rec.coefficients.entries).as_bytes(),
    )?;
    write_heatmap(
        out.join("reconstruction.png"),
        real.values(),
        real.n(),
        real.n(),
        4,
        "Re q",
    )?;
    let im: f64 = rec.cartesian.iter().map(|v| v.im * v.im).sum::<f64>().sqrt();
    let re: f64 = rec.cartesian.iter().map(|v| v.re * v.re).sum::<f64>().sqrt();
    let mut report = format!(
        "retained {} of {} entries ({:?})\n|Im q| / |Re q| = {:.3e}\nwrote {}\n",
        rec.coefficients.entries.len(),
        basis.len(),
        rec.coefficients.cutoff,
        if re > 0.0 { im / re } else { 0.0 },
        out.display()
    );
    if let Some(t) = truth {
        let reference = if t.extension().is_some_and(|e| e.eq_ignore_ascii_case("prc1")) {
            let p = io::read_processed(t)?;
            if p.grid != u.grid {
                return Err(Error::Shape("polar truth is on a different grid than the data".into()));
            }
            p.values
        } else {
            truth_on_grid(&read_contrast_any(t)?, &u.grid)
        };
        let err = polar_error(&u.grid, &rec.polar, &reference);
        let _ = writeln!(report, "relative L2(B) error {err:.6e}");
    }
    Ok(report)
}

pub fn cmd_profile(basis: &PswfBasis, eta: Option<f64>, curve: Option<&Path>) -> Result<String> {
    let eta = eta.unwrap_or_else(|| default_eta(basis));
    let kept = inverse::filter_profile(basis, eta);
    let mut s = format!("eta = {eta:.6e}: {} of {} entries retained\n", kept.len(), basis.len());
    let _ = writeln!(s, "m,n,l,abs_alpha,chi");
    for e in &kept {
        let _ = writeln!(s, "{},{},{},{:e},{:e}", e.m, e.n, e.l, e.alpha_abs, e.chi);
    }
    if let Some(p) = curve {
        let top = alpha_plateau(basis.c());
        let etas: Vec<f64> = (0..40).map(|i| top * 10f64.powf(-(i as f64) * 10.0 / 39.0)).collect();
        let mut csv = String::from("eta,retained\n");
        for (e, n) in inverse::retained_counts(basis, &etas) {
            let _ = writeln!(csv, "{e:e},{n}");
        }
        io::write_file(p, csv.as_bytes())?;
    }
    Ok(s)
}

#[allow(clippy::too_many_arguments)]
pub fn cmd_dataset(
    run: &RunConfig,
    recipe: Recipe,
    count: usize,
    noise: Option<f64>,
    basis: Option<&Path>,
    raster_dir: Option<&Path>,
    raster_amplitude: f64,
    out: &Path,
) -> Result<String> {
    if count == 0 {
        return Err(Error::InvalidArgument("--count must be at least 1".into()));
    }
    let (kind, contrasts) = match recipe {
        Recipe::Disks => (RecipeKind::Disks, dataset::gen_disks(run.seed, count, run.grid)?),
        Recipe::Gaussians => (
            RecipeKind::Gaussians,
            dataset::gen_gaussians(run.seed, count, run.grid)?,
        ),
        Recipe::Pswf5 | Recipe::Pswf10 => {
            let max_index = if recipe == Recipe::Pswf5 { 5 } else { 10 };
            let basis = match basis {
                Some(p) => io::read_basis(p)?,
                None => build_basis(2.0 * run.k, max_index - 1, max_index - 1)?,
            };
            let combos = dataset::gen_pswf_combo(run.seed, count, max_index, &basis, run.grid)?;
            (RecipeKind::PswfCombo, combos.into_iter().map(|c| c.contrast).collect())
        }
        Recipe::Raster => {
            let dir = raster_dir.ok_or_else(|| Error::InvalidArgument("--raster-dir is required".into()))?;
            let mut paths: Vec<PathBuf> = fs::read_dir(dir)
                .map_err(|e| Error::io(dir, e))?
                .filter_map(|e| e.ok().map(|e| e.path()))
                .filter(|p| p.extension().is_some_and(|e| e.eq_ignore_ascii_case("png")))
                .collect();
            paths.sort();
            paths.truncate(count);
            let opts = RasterOptions {
                n: run.grid,
                max_amplitude: raster_amplitude,
                ..RasterOptions::default()
            };
            let qs = paths
                .iter()
                .map(|p| dataset::import_raster(p, opts))
                .collect::<Result<Vec<_>>>()?;
            (RecipeKind::RasterImport, qs)
        }
    };
    if run.ninc != run.nobs {
        return Err(Error::InvalidArgument("archives use equal --ninc and --nobs".into()));
    }
    let cfg = ArchiveConfig {
        recipe: kind,
        seed: run.seed,
        k: run.k,
        directions: run.ninc,
        grid: PolarGrid::new(run.n1, run.n2)?,
        noise: noise.map(|delta| NoiseSpec { delta, seed: run.seed }),
    };
    let manifest = dataset::build_samples(&contrasts, &cfg, out)?;
    let rels: Vec<f64> = manifest.samples.iter().map(|s| s.rel).collect();
    let inside = rels.iter().filter(|r| (0.2..=1.6).contains(*r)).count();
    Ok(format!(
        "wrote {} samples to {}; rel(k) in [{:.3}, {:.3}], {inside} within [0.2, 1.6]\n",
        rels.len(),
        out.display(),
        rels.iter().cloned().fold(f64::INFINITY, f64::min),
        rels.iter().cloned().fold(f64::NEG_INFINITY, f64::max),
    ))
}

fn polar_heatmap(
    path: &Path,
    u: &[Complex64],
    grid: &PolarGrid,
    part: fn(&Complex64) -> f64,
    label: &str,
) -> Result<()> {
    let cart = pipeline::polar_to_cartesian(&u.iter().map(part).collect::<Vec<_>>(), grid, 104);
    write_heatmap(path, &cart, 104, 104, 4, label)
}

pub fn cmd_eval(archive: &Path, key: &str, inv: &InvertArgs, png_dir: Option<&Path>, out: &Path) -> Result<String> {
    let manifest = dataset::verify_archive(archive)?;
    let basis = load_basis(inv, manifest.c)?;
    let mut csv = String::from("id,rel,error\n");
    let mut total = 0.0;
    for s in &manifest.samples {
        let tag = |e: Error| Error::Sample {
            id: s.id.clone(),
            source: Box::new(e),
        };
        let file = |k: &str| -> Result<PathBuf> {
            let rec = s
                .files
                .get(k)
                .ok_or_else(|| tag(Error::format("manifest", format!("no record {k:?}"))))?;
            dataset::archive_path(archive, rec)
        };
        let u = io::read_processed(file(key)?)?;
        let truth = io::read_processed(file("q_polar")?)?;
        let rec = reconstruct(&u, &basis, inv).map_err(tag)?;
        let err = polar_error(&u.grid, &rec.polar, &truth.values);
        total += err;
        let _ = writeln!(csv, "{},{:.6e},{:.6e}", s.id, s.rel, err);
        if let Some(dir) = png_dir {
            let q = io::read_contrast(file("q")?)?;
            write_heatmap(
                dir.join(format!("{}.truth.png", s.id)),
                q.values(),
                q.n(),
                q.n(),
                4,
                "q",
            )?;
            let r = rec.real_contrast()?;
            write_heatmap(
                dir.join(format!("{}.recon.png", s.id)),
                r.values(),
                r.n(),
                r.n(),
                4,
                "Re q_eta",
            )?;
            polar_heatmap(
                &dir.join(format!("{}.{key}.re.png", s.id)),
                &u.values,
                &u.grid,
                |v| v.re,
                "Re u",
            )?;
            polar_heatmap(
                &dir.join(format!("{}.{key}.im.png", s.id)),
                &u.values,
                &u.grid,
                |v| v.im,
                "Im u",
            )?;
        }
    }
    io::write_file(out, csv.as_bytes())?;
    Ok(format!(
        "{} samples, mean relative error {:.4e}; wrote {}\n",
        manifest.samples.len(),
        total / manifest.samples.len().max(1) as f64,
        out.display()
    ))
}

/// Corrected data must match the original in grid, bandwidth and aperture.
pub fn check_corrected(original: &ProcessedData, corrected: &ProcessedData) -> Result<()> {
    if original.grid != corrected.grid {
        return Err(Error::Shape(format!(
            "corrected data are {} x {}, original {} x {}",
            corrected.grid.n2(),
            corrected.grid.n1(),
            original.grid.n2(),
            original.grid.n1()
        )));
    }
    if (original.c - corrected.c).abs() > 1e-12 * original.c {
        return Err(Error::BandwidthMismatch {
            data: corrected.c,
            basis: original.c,
        });
    }
    Ok(())
}

pub fn cmd_correct(
    original: &Path,
    corrected: &Path,
    corrector_cmd: Option<&str>,
    inv: &InvertArgs,
    truth: Option<&Path>,
    out: &Path,
) -> Result<String> {
    let u0 = io::read_processed(original)?;
    if let Some(cmd) = corrector_cmd {
        let line = cmd
            .replace("{input}", &original.display().to_string())
            .replace("{output}", &corrected.display().to_string());
        let status = Process::new("sh")
            .arg("-c")
            .arg(&line)
            .status()
            .map_err(|e| Error::io("sh", e))?;
        if !status.success() {
            return Err(Error::format("corrector", format!("`{line}` exited with {status}")));
        }
    }
    if !corrected.exists() {
        return Err(Error::io(
            corrected,
            std::io::Error::new(std::io::ErrorKind::NotFound, "corrected data missing"),
        ));
    }
    let u = io::read_processed(corrected)?;
    check_corrected(&u0, &u)?;
    cmd_invert(&u, inv, truth, out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn config_parsing() {
        let c = parse_config("# defaults\nk = 8\nalpha_reg=0.1 # trailing\n\n").unwrap();
        assert_eq!(c, vec![("k".into(), "8".into()), ("alpha-reg".into(), "0.1".into())]);
        assert!(parse_config("k 8").is_err());
    }

    #[test]
    fn config_file_precedes_flags() {
        let dir = tempfile::tempdir().unwrap();
        let cfg = dir.path().join("run.cfg");
        fs::write(&cfg, "k = 8\nn1 = 64\n").unwrap();
        let args: Vec<OsString> = ["diskscat", "process", "--input", "x.ffm1", "--config"]
            .iter()
            .map(OsString::from)
            .chain([cfg.clone().into_os_string(), "--k".into(), "12".into()])
            .collect();
        let cli = Cli::try_parse_from(expand_config(args).unwrap()).unwrap();
        let Command::Process { run, .. } = cli.command else {
            panic!("wrong subcommand")
        };
        assert_eq!(run.k, 12.0);
        assert_eq!(run.n1, 64);

        fs::write(&cfg, "bogus = 1\n").unwrap();
        let args: Vec<OsString> = vec![
            "diskscat".into(),
            "process".into(),
            "--config".into(),
            cfg.into_os_string(),
        ];
        assert!(expand_config(args).is_err());
    }

    #[test]
    fn help_documents_every_flag() {
        let mut cmd = Cli::command();
        cmd.build();
        for sub in cmd.get_subcommands() {
            for arg in sub.get_arguments() {
                if arg.get_long().is_some() && arg.get_id() != "help" && arg.get_id() != "version" {
                    assert!(
                        arg.get_help().is_some(),
                        "{} --{} lacks help",
                        sub.get_name(),
                        arg.get_id()
                    );
                }
            }
        }
    }
}
