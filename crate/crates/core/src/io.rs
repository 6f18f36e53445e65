//! Self-describing little-endian binary formats and CSV exports.
//!
//! | magic   | layout after the magic                                            |
//! |---------|-------------------------------------------------------------------|
//! | `CGR1`  | `N: u64`, `N*N` f64 row-major (`[iy * N + ix]`)                   |
//! | `FFM1`  | `k: f64`, `N_obs: u64`, `N_inc: u64`, observation angles, incidence angles, then `N_obs*N_inc` (re, im) pairs observation-major |
//! | `PRC1`  | `c: f64`, `N1: u64`, `N2: u64`, aperture `f64` (`-1` for full), then `N2*N1` (re, im) pairs radial-major |
//! | `PSWF1` | `c: f64`, `max_m: u64`, `max_n: u64`, `J: u64` (truncation at `m = 0`), then per `(m, n)` in `m`-major order: `chi: f64`, `alpha: (re, im)`, `len: u64`, `len` Jacobi coefficients |
//!
//! The aperture of a masked far-field matrix is not stored in `FFM1`; it is
//! recovered from the processed `PRC1` file instead.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use num_complex::Complex64;

use crate::contrast::ContrastGrid;
use crate::error::{Error, Result};
use crate::farfield::{DirectionSet, FarFieldMatrix};
use crate::inverse::Coefficient;
use crate::pipeline::{PolarGrid, ProcessedData};
use crate::pswf::{PswfBasis, RadialEigenpair};

pub const CGR_MAGIC: &[u8] = b"CGR1";
pub const FFM_MAGIC: &[u8] = b"FFM1";
pub const PRC_MAGIC: &[u8] = b"PRC1";
pub const PSWF_MAGIC: &[u8] = b"PSWF1";

/// Aperture value stored for full-aperture data.
pub const FULL_APERTURE: f64 = -1.0;

/// Upper bound on any stored dimension, to reject corrupt headers before
/// allocating.
const MAX_DIM: u64 = 1 << 24;

struct Writer(Vec<u8>);

impl Writer {
    fn new(magic: &[u8]) -> Self {
        Self(magic.to_vec())
    }

    fn f64(&mut self, v: f64) {
        self.0.extend_from_slice(&v.to_le_bytes());
    }

    fn u64(&mut self, v: usize) {
        self.0.extend_from_slice(&(v as u64).to_le_bytes());
    }

    fn complex(&mut self, v: Complex64) {
        self.f64(v.re);
        self.f64(v.im);
    }
}

struct Reader<'a> {
    kind: &'static str,
    buf: &'a [u8],
    pos: usize,
}

impl<'a> Reader<'a> {
    fn new(kind: &'static str, magic: &[u8], buf: &'a [u8]) -> Result<Self> {
        if !buf.starts_with(magic) {
            return Err(Error::format(kind, "bad magic bytes"));
        }
        Ok(Self {
            kind,
            buf,
            pos: magic.len(),
        })
    }

    fn take(&mut self, n: usize) -> Result<&'a [u8]> {
        let end = self.pos.checked_add(n).filter(|&e| e <= self.buf.len());
        let end = end.ok_or_else(|| Error::format(self.kind, "truncated file"))?;
        let out = &self.buf[self.pos..end];
        self.pos = end;
        Ok(out)
    }

    fn f64(&mut self) -> Result<f64> {
        Ok(f64::from_le_bytes(self.take(8)?.try_into().expect("8 bytes")))
    }

    fn dim(&mut self, what: &str) -> Result<usize> {
        let v = u64::from_le_bytes(self.take(8)?.try_into().expect("8 bytes"));
        if v > MAX_DIM {
            return Err(Error::format(self.kind, format!("{what} = {v} is implausibly large")));
        }
        Ok(v as usize)
    }

    fn f64s(&mut self, n: usize) -> Result<Vec<f64>> {
        (0..n).map(|_| self.f64()).collect()
    }

    fn complexes(&mut self, n: usize) -> Result<Vec<Complex64>> {
        (0..n).map(|_| Ok(Complex64::new(self.f64()?, self.f64()?))).collect()
    }

    fn finish(self) -> Result<()> {
        if self.pos != self.buf.len() {
            return Err(Error::format(
                self.kind,
                format!("{} trailing bytes", self.buf.len() - self.pos),
            ));
        }
        Ok(())
    }
}

fn read_file(path: &Path) -> Result<Vec<u8>> {
    fs::read(path).map_err(|e| Error::io(path, e))
}

pub(crate) fn write_file(path: &Path, bytes: &[u8]) -> Result<()> {
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        fs::create_dir_all(dir).map_err(|e| Error::io(dir, e))?;
    }
    fs::write(path, bytes).map_err(|e| Error::io(path, e))
}

pub fn encode_contrast(q: &ContrastGrid) -> Vec<u8> {
    let mut w = Writer::new(CGR_MAGIC);
    w.u64(q.n());
    q.values().iter().for_each(|&v| w.f64(v));
    w.0
}

pub fn decode_contrast(bytes: &[u8]) -> Result<ContrastGrid> {
    let mut r = Reader::new("CGR1", CGR_MAGIC, bytes)?;
    let n = r.dim("N")?;
    let values = r.f64s(n * n)?;
    r.finish()?;
    ContrastGrid::new(n, values).map_err(|e| Error::format("CGR1", e.to_string()))
}

pub fn encode_far_field(ff: &FarFieldMatrix) -> Vec<u8> {
    let mut w = Writer::new(FFM_MAGIC);
    w.f64(ff.k);
    w.u64(ff.n_obs());
    w.u64(ff.n_inc());
    ff.obs.angles().iter().for_each(|&a| w.f64(a));
    ff.inc.angles().iter().for_each(|&a| w.f64(a));
    ff.values.iter().for_each(|&v| w.complex(v));
    w.0
}

pub fn decode_far_field(bytes: &[u8]) -> Result<FarFieldMatrix> {
    let mut r = Reader::new("FFM1", FFM_MAGIC, bytes)?;
    let k = r.f64()?;
    let n_obs = r.dim("N_obs")?;
    let n_inc = r.dim("N_inc")?;
    let obs = r.f64s(n_obs)?;
    let inc = r.f64s(n_inc)?;
    let values = r.complexes(n_obs * n_inc)?;
    r.finish()?;
    let wrap = |e: Error| Error::format("FFM1", e.to_string());
    let obs = DirectionSet::new(obs).map_err(wrap)?;
    let inc = DirectionSet::new(inc).map_err(wrap)?;
    FarFieldMatrix::new(k, obs, inc, values).map_err(wrap)
}

pub fn encode_processed(u: &ProcessedData) -> Vec<u8> {
    let mut w = Writer::new(PRC_MAGIC);
    w.f64(u.c);
    w.u64(u.grid.n1());
    w.u64(u.grid.n2());
    w.f64(u.aperture.unwrap_or(FULL_APERTURE));
    u.values.iter().for_each(|&v| w.complex(v));
    w.0
}

pub fn decode_processed(bytes: &[u8]) -> Result<ProcessedData> {
    let mut r = Reader::new("PRC1", PRC_MAGIC, bytes)?;
    let c = r.f64()?;
    let n1 = r.dim("N1")?;
    let n2 = r.dim("N2")?;
    let aperture = r.f64()?;
    let aperture = if aperture == FULL_APERTURE {
        None
    } else if aperture > 0.0 && aperture < std::f64::consts::PI {
        Some(aperture)
    } else {
        return Err(Error::format("PRC1", format!("aperture {aperture} outside (0, pi)")));
    };
    let values = r.complexes(n1 * n2)?;
    r.finish()?;
    let wrap = |e: Error| Error::format("PRC1", e.to_string());
    let grid = PolarGrid::new(n1, n2).map_err(wrap)?;
    ProcessedData::new(c, grid, values, aperture).map_err(wrap)
}

pub fn encode_basis(basis: &PswfBasis) -> Vec<u8> {
    let mut w = Writer::new(PSWF_MAGIC);
    w.f64(basis.c());
    w.u64(basis.max_m());
    w.u64(basis.max_n());
    w.u64(basis.base_truncation());
    for (pair, alpha) in basis.radial_pairs().iter().zip(basis.alphas()) {
        w.f64(pair.chi);
        w.complex(*alpha);
        w.u64(pair.beta.len());
        pair.beta.iter().for_each(|&b| w.f64(b));
    }
    w.0
}

pub fn decode_basis(bytes: &[u8]) -> Result<PswfBasis> {
    let mut r = Reader::new("PSWF1", PSWF_MAGIC, bytes)?;
    let c = r.f64()?;
    let max_m = r.dim("max_m")?;
    let max_n = r.dim("max_n")?;
    let _base = r.dim("J")?;
    let mut radial = Vec::new();
    let mut alpha = Vec::new();
    for m in 0..=max_m {
        for n in 0..=max_n {
            let chi = r.f64()?;
            alpha.push(Complex64::new(r.f64()?, r.f64()?));
            let len = r.dim("coefficient count")?;
            if len == 0 {
                return Err(Error::format("PSWF1", format!("empty coefficients at ({m}, {n})")));
            }
            let beta = r.f64s(len)?;
            radial.push(RadialEigenpair {
                m,
                n,
                chi,
                beta,
                truncation: len - 1,
            });
        }
    }
    r.finish()?;
    if !(c > 0.0 && c.is_finite()) {
        return Err(Error::format("PSWF1", format!("bandwidth {c} is not positive")));
    }
    PswfBasis::from_parts(c, max_m, max_n, radial, alpha)
}

macro_rules! file_pair {
    ($read:ident, $write:ident, $ty:ty, $enc:ident, $dec:ident) => {
        pub fn $write(path: impl AsRef<Path>, value: &$ty) -> Result<()> {
            write_file(path.as_ref(), &$enc(value))
        }

        pub fn $read(path: impl AsRef<Path>) -> Result<$ty> {
            $dec(&read_file(path.as_ref())?)
        }
    };
}

file_pair!(
    read_contrast,
    write_contrast,
    ContrastGrid,
    encode_contrast,
    decode_contrast
);
file_pair!(
    read_far_field,
    write_far_field,
    FarFieldMatrix,
    encode_far_field,
    decode_far_field
);
file_pair!(
    read_processed,
    write_processed,
    ProcessedData,
    encode_processed,
    decode_processed
);
file_pair!(read_basis, write_basis, PswfBasis, encode_basis, decode_basis);

/// Contrast as CSV: `N` rows of `N` comma-separated values, row `iy`.
pub fn contrast_to_csv(q: &ContrastGrid) -> String {
    let mut s = String::new();
    for row in q.values().chunks(q.n()) {
        let line: Vec<String> = row.iter().map(|v| format!("{v:e}")).collect();
        s.push_str(&line.join(","));
        s.push('\n');
    }
    s
}

pub fn contrast_from_csv(text: &str) -> Result<ContrastGrid> {
    let rows: Vec<Vec<f64>> = text
        .lines()
        .filter(|l| !l.trim().is_empty())
        .enumerate()
        .map(|(i, line)| {
            line.split(',')
                .map(|t| {
                    t.trim()
                        .parse::<f64>()
                        .map_err(|e| Error::format("contrast CSV", format!("row {i}: {t:?}: {e}")))
                })
                .collect()
        })
        .collect::<Result<_>>()?;
    let n = rows.len();
    if rows.iter().any(|r| r.len() != n) {
        return Err(Error::format("contrast CSV", "grid is not square"));
    }
    ContrastGrid::new(n, rows.concat()).map_err(|e| Error::format("contrast CSV", e.to_string()))
}

/// Processed data as CSV with columns `m,n,r,theta,re,im`.
pub fn processed_to_csv(u: &ProcessedData) -> String {
    let mut s = String::from("m,n,r,theta,re,im\n");
    for m in 0..u.grid.n2() {
        for n in 0..u.grid.n1() {
            let v = u.get(m, n);
            let _ = writeln!(
                s,
                "{m},{n},{:e},{:e},{:e},{:e}",
                u.grid.radii()[m],
                u.grid.angles()[n],
                v.re,
                v.im
            );
        }
    }
    s
}

/// Coefficients as CSV with columns `m,n,l,re_u,im_u,abs_alpha,chi,re_q,im_q`.
pub fn coefficients_to_csv(entries: &[Coefficient]) -> String {
    let mut s = String::from("m,n,l,re_u,im_u,abs_alpha,chi,re_q,im_q\n");
    for e in entries {
        let _ = writeln!(
            s,
            "{},{},{},{:e},{:e},{:e},{:e},{:e},{:e}",
            e.m,
            e.n,
            e.l,
            e.u_coeff.re,
            e.u_coeff.im,
            e.alpha.norm(),
            e.chi,
            e.q_coeff.re,
            e.q_coeff.im
        );
    }
    s
}
