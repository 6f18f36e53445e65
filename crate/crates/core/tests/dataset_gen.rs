mod common;

use std::fs;

use diskscat::contrast::ContrastGrid;
use diskscat::dataset::{
    build_samples, export_raster, gen_disks, gen_gaussians, gen_pswf_combo, import_raster, read_manifest,
    verify_archive, ArchiveConfig, NoiseSpec, RasterOptions, RecipeKind, MANIFEST_NAME,
};
use diskscat::inverse::{expand_polar, invert_eta};
use diskscat::pipeline::{born_on_grid, PolarGrid, ProcessedData};
use diskscat::pswf::build_basis;
use num_complex::Complex64;

fn laplacian_max(q: &ContrastGrid, r_max: f64) -> f64 {
    let (n, h) = (q.n(), q.spacing());
    let mut worst = 0.0f64;
    for iy in 1..n - 1 {
        for ix in 1..n - 1 {
            if q.coord(ix).hypot(q.coord(iy)) >= r_max {
                continue;
            }
            let lap = (q.get(ix + 1, iy) + q.get(ix - 1, iy) + q.get(ix, iy + 1) + q.get(ix, iy - 1)
                - 4.0 * q.get(ix, iy))
                / (h * h);
            worst = worst.max(lap.abs());
        }
    }
    worst
}

#[test]
fn disk_samples_follow_their_amplitude_law_and_support() {
    let qs = gen_disks(11, 200, 64).unwrap();
    assert_eq!(qs, gen_disks(11, 200, 64).unwrap());
    for q in &qs {
        assert!((0.1..=0.8).contains(&q.max_abs()));
        for iy in 0..64 {
            for ix in 0..64 {
                if q.get(ix, iy) != 0.0 {
                    let (x, y) = (q.coord(ix), q.coord(iy));
                    assert!(x.abs() < 0.7 && y.abs() < 0.7 && x.hypot(y) < 1.0);
                }
            }
        }
    }
}

#[test]
fn gaussian_samples_are_bounded_smooth_and_reproducible() {
    let coarse = gen_gaussians(5, 30, 64).unwrap();
    let fine = gen_gaussians(5, 30, 128).unwrap();
    assert_eq!(coarse, gen_gaussians(5, 30, 64).unwrap());
    for (a, b) in coarse.iter().zip(&fine) {
        assert!((0.5..=0.8).contains(&a.max_abs()));
        let ratio = laplacian_max(b, 0.9) / laplacian_max(a, 0.9);
        assert!((0.8..1.25).contains(&ratio), "Laplacian ratio {ratio}");
    }
    // Control: a disk edge makes the same ratio grow like 1 / h^2.
    let disk = |n| gen_disks(5, 1, n).unwrap().remove(0);
    assert!(laplacian_max(&disk(128), 0.9) / laplacian_max(&disk(64), 0.9) > 3.0);
}

#[test]
fn pswf_combinations_are_recovered_from_their_born_data() {
    let c = 16.0;
    let basis = build_basis(c, 4, 4).unwrap();
    let grid = PolarGrid::new(64, 40).unwrap();
    let eta = 0.5 * basis.entries().map(|e| e.alpha.norm()).fold(f64::INFINITY, f64::min);
    for combo in gen_pswf_combo(2, 4, 5, &basis, 48).unwrap() {
        assert!((0.5..=0.8 + 1e-12).contains(&combo.contrast.max_abs()));
        let q = expand_polar(&basis, &combo.terms, &grid).unwrap();
        let u = ProcessedData::new(c, grid.clone(), born_on_grid(c, &q, &grid, &grid), None).unwrap();
        let rec = invert_eta(&u, &basis, eta, 48).unwrap();
        let diff: Vec<Complex64> = rec.polar.iter().zip(&q).map(|(a, b)| a - b).collect();
        assert!(grid.norm(&diff) < 1e-4 * grid.norm(&q));
        let err = rec
            .cartesian
            .iter()
            .zip(combo.contrast.values())
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max);
        assert!(err < 1e-4 * combo.contrast.max_abs(), "cartesian error {err}");
    }
}

#[test]
fn pswf_coefficients_decay_with_n_on_average() {
    let basis = build_basis(16.0, 9, 9).unwrap();
    let combos = gen_pswf_combo(4, 40, 10, &basis, 32).unwrap();
    let mut mean = [0.0f64; 10];
    for combo in &combos {
        for t in &combo.terms {
            mean[t.n] += t.coeff.norm();
        }
    }
    for w in mean.windows(2) {
        assert!(w[1] < w[0], "{mean:?}");
    }
    assert!(gen_pswf_combo(4, 1, 11, &basis, 32).is_err());
    assert!(gen_pswf_combo(4, 1, 0, &basis, 32).is_err());
}

fn small_config(noise: Option<NoiseSpec>) -> ArchiveConfig {
    ArchiveConfig {
        recipe: RecipeKind::Disks,
        seed: 3,
        k: 4.0,
        directions: 16,
        grid: PolarGrid::new(16, 8).unwrap(),
        noise,
    }
}

#[test]
fn archives_are_complete_verified_and_byte_identical() {
    let qs = gen_disks(3, 3, 32).unwrap();
    let cfg = small_config(Some(NoiseSpec { delta: 0.1, seed: 9 }));
    let (a, b) = (tempfile::tempdir().unwrap(), tempfile::tempdir().unwrap());
    let m = build_samples(&qs, &cfg, a.path()).unwrap();
    build_samples(&qs, &cfg, b.path()).unwrap();
    assert_eq!(m.samples.len(), qs.len());
    assert_eq!(read_manifest(a.path()).unwrap(), m);
    assert_eq!(verify_archive(a.path()).unwrap(), m);
    for s in &m.samples {
        assert_eq!(s.files.len(), 7);
        assert!(s.rel > 0.0 && s.rel.is_finite());
    }
    let mut names: Vec<_> = fs::read_dir(a.path())
        .unwrap()
        .map(|e| e.unwrap().file_name())
        .collect();
    names.sort();
    assert_eq!(names.len(), 3 * 7 + 1);
    for name in names {
        assert_eq!(
            fs::read(a.path().join(&name)).unwrap(),
            fs::read(b.path().join(&name)).unwrap()
        );
    }

    // Tampering is caught.
    let victim = a.path().join(&m.samples[1].files["u"].path);
    let mut bytes = fs::read(&victim).unwrap();
    let last = bytes.len() - 1;
    bytes[last] ^= 1;
    fs::write(&victim, bytes).unwrap();
    assert!(verify_archive(a.path()).is_err());
    fs::remove_file(b.path().join(&m.samples[0].files["q"].path)).unwrap();
    assert!(verify_archive(b.path()).is_err());
    fs::write(b.path().join(MANIFEST_NAME), "{}").unwrap();
    assert!(read_manifest(b.path()).is_err());
}

#[test]
fn archive_without_noise_has_six_files_per_sample() {
    let qs = gen_gaussians(1, 2, 32).unwrap();
    let dir = tempfile::tempdir().unwrap();
    let m = build_samples(&qs, &small_config(None), dir.path()).unwrap();
    assert!(m
        .samples
        .iter()
        .all(|s| s.files.len() == 6 && !s.files.contains_key("u_noisy")));
    assert!(build_samples(&[], &small_config(None), dir.path()).is_err());
}

fn write_gray(path: &std::path::Path, value: u8) {
    image::GrayImage::from_pixel(28, 28, image::Luma([value]))
        .save(path)
        .unwrap();
}

#[test]
fn raster_import_of_constant_images() {
    let dir = tempfile::tempdir().unwrap();
    let (black, white) = (dir.path().join("black.png"), dir.path().join("white.png"));
    write_gray(&black, 0);
    write_gray(&white, 255);
    let opts = RasterOptions {
        n: 64,
        ..RasterOptions::default()
    };
    assert!(import_raster(&black, opts).unwrap().values().iter().all(|&v| v == 0.0));
    let q = import_raster(&white, opts).unwrap();
    let e = opts.extent;
    for iy in 0..64 {
        for ix in 0..64 {
            let inside = q.coord(ix).abs() <= e && q.coord(iy).abs() <= e;
            assert_eq!(q.get(ix, iy), if inside { 0.5 } else { 0.0 });
        }
    }
    assert!(import_raster(dir.path().join("missing.png"), opts).is_err());
    let tiny = dir.path().join("tiny.png");
    image::GrayImage::from_pixel(1, 5, image::Luma([9]))
        .save(&tiny)
        .unwrap();
    assert!(import_raster(&tiny, opts).is_err());
}

#[test]
fn raster_round_trip_is_within_half_a_quantization_step() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("q.png");
    let q = gen_gaussians(8, 1, 48).unwrap().remove(0);
    // Negative lobes are clamped by the export, so compare against the clamped grid.
    let amp = 0.8;
    export_raster(&q, &path, amp).unwrap();
    let opts = RasterOptions {
        n: 48,
        max_amplitude: amp,
        extent: 1.0,
        threshold: 0.0,
    };
    let back = import_raster(&path, opts).unwrap();
    let step = amp / 65535.0;
    for (a, b) in back.values().iter().zip(q.values()) {
        assert!((a - b.clamp(0.0, amp)).abs() <= 0.5 * step + 1e-12);
    }
}
