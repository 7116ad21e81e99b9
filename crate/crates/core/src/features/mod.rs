//! Feature extraction: grayscale images to fixed-length DCT feature vectors.
//!
//! The pipeline is `load_pgm` -> `normalize_geometry` -> `dct2` ->
//! `zigzag_scan`, producing a [`FeatureVector`] per sample. Feature files are
//! CSV with header `subject_id,sample_id,modality,v0,...,v{d-1}`; that format
//! is the interchange boundary for everything downstream.

mod dct;
mod io;
mod pgm;

pub use dct::{dct2, idct2};
pub use io::{read_feature_csv, write_feature_csv, FeatureRecord};
pub use pgm::{load_pgm, write_pgm};

use crate::error::{Error, Result};
use ndarray::Array2;

/// Grayscale image with intensities in `[0,1]`, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct RawImage {
    width: usize,
    height: usize,
    pixels: Vec<f64>,
}

impl RawImage {
    pub fn new(width: usize, height: usize, pixels: Vec<f64>) -> Result<Self> {
        if width == 0 || height == 0 {
            return Err(Error::MalformedImage("zero-size image".into()));
        }
        if pixels.len() != width * height {
            return Err(Error::MalformedImage(format!(
                "pixel count {} does not match {}x{}",
                pixels.len(),
                width,
                height
            )));
        }
        if pixels.iter().any(|p| !p.is_finite() || *p < 0.0 || *p > 1.0) {
            return Err(Error::MalformedImage(
                "intensity outside [0,1]".into(),
            ));
        }
        Ok(Self {
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

    pub fn pixels(&self) -> &[f64] {
        &self.pixels
    }

    pub fn pixel(&self, row: usize, col: usize) -> f64 {
        self.pixels[row * self.width + col]
    }
}

/// Fixed-length real feature vector for one biometric sample.
#[derive(Debug, Clone, PartialEq)]
pub struct FeatureVector {
    pub values: Vec<f64>,
    pub modality: String,
    pub source_id: String,
}

impl FeatureVector {
    pub fn new(values: Vec<f64>, modality: impl Into<String>, source_id: impl Into<String>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::EmptyInput("feature vector"));
        }
        if values.iter().any(|v| !v.is_finite()) {
            return Err(Error::NonFinite("feature vector".into()));
        }
        Ok(Self {
            values,
            modality: modality.into(),
            source_id: source_id.into(),
        })
    }

    pub fn dim(&self) -> usize {
        self.values.len()
    }

    pub fn l2_norm(&self) -> f64 {
        self.values.iter().map(|v| v * v).sum::<f64>().sqrt()
    }
}

/// Resize to the requested size with bilinear interpolation.
///
/// Sample coordinates are corner-aligned, so corner pixels of the output
/// equal the corner pixels of the source and constants map to constants.
pub fn normalize_geometry(img: &RawImage, target_w: usize, target_h: usize) -> Result<RawImage> {
    if target_w == 0 || target_h == 0 {
        return Err(Error::InvalidParam("target size must be at least 1x1".into()));
    }
    if target_w == img.width && target_h == img.height {
        return Ok(img.clone());
    }

    // Maps output index 0 to source 0 and output max to source max.
    let coord = |i: usize, target: usize, source: usize| -> f64 {
        if target == 1 {
            (source - 1) as f64 / 2.0
        } else {
            i as f64 * (source - 1) as f64 / (target - 1) as f64
        }
    };

    let mut pixels = Vec::with_capacity(target_w * target_h);
    for oy in 0..target_h {
        let fy = coord(oy, target_h, img.height);
        let y0 = fy.floor() as usize;
        let y1 = (y0 + 1).min(img.height - 1);
        let ty = fy - y0 as f64;
        for ox in 0..target_w {
            let fx = coord(ox, target_w, img.width);
            let x0 = fx.floor() as usize;
            let x1 = (x0 + 1).min(img.width - 1);
            let tx = fx - x0 as f64;

            let top = img.pixel(y0, x0) * (1.0 - tx) + img.pixel(y0, x1) * tx;
            let bot = img.pixel(y1, x0) * (1.0 - tx) + img.pixel(y1, x1) * tx;
            pixels.push((top * (1.0 - ty) + bot * ty).clamp(0.0, 1.0));
        }
    }
    RawImage::new(target_w, target_h, pixels)
}

/// First `d` coefficients of the grid in zigzag order: anti-diagonals of
/// increasing `row+col`, starting at the top-left corner and moving right
/// first (JPEG convention), alternating traversal direction per diagonal.
pub fn zigzag_scan(grid: &Array2<f64>, d: usize, modality: &str, source_id: &str) -> Result<FeatureVector> {
    let (h, w) = grid.dim();
    if d == 0 {
        return Err(Error::InvalidParam("zigzag dimension must be at least 1".into()));
    }
    if d > h * w {
        return Err(Error::InvalidParam(format!(
            "zigzag dimension {} exceeds grid size {}x{}",
            d, h, w
        )));
    }

    let mut values = Vec::with_capacity(d);
    'outer: for s in 0..(h + w - 1) {
        let r_lo = s.saturating_sub(w - 1);
        let r_hi = s.min(h - 1);
        // Odd diagonals run down-left (row increasing), even ones up-right.
        let range: Vec<usize> = if s % 2 == 1 {
            (r_lo..=r_hi).collect()
        } else {
            (r_lo..=r_hi).rev().collect()
        };
        for r in range {
            values.push(grid[(r, s - r)]);
            if values.len() == d {
                break 'outer;
            }
        }
    }
    FeatureVector::new(values, modality, source_id)
}

/// Full image-to-feature pipeline used by the CLI `extract` command.
pub fn extract_features(
    img: &RawImage,
    target_w: usize,
    target_h: usize,
    d: usize,
    modality: &str,
    source_id: &str,
) -> Result<FeatureVector> {
    let resized = normalize_geometry(img, target_w, target_h)?;
    let grid = dct2(&resized);
    zigzag_scan(&grid, d, modality, source_id)
}
