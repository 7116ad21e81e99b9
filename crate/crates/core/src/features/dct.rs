//! Orthonormal type-II 2D DCT.
//!
//! With the orthonormal convention the transform matrix is orthogonal, so
//! Parseval holds exactly: the coefficient energy equals the pixel energy.
//! A constant image of value `v` and size `h x w` transforms to a single DC
//! coefficient `v * sqrt(h*w)`.

use super::RawImage;
use ndarray::Array2;

/// Orthonormal 1-D DCT-II basis as a matrix: row k holds
/// `s(k) * cos(pi*(2n+1)*k / (2N))` with `s(0)=sqrt(1/N)`, `s(k)=sqrt(2/N)`.
fn dct_matrix(n: usize) -> Array2<f64> {
    let nf = n as f64;
    Array2::from_shape_fn((n, n), |(k, i)| {
        let scale = if k == 0 { (1.0 / nf).sqrt() } else { (2.0 / nf).sqrt() };
        scale * (std::f64::consts::PI * (2.0 * i as f64 + 1.0) * k as f64 / (2.0 * nf)).cos()
    })
}

/// 2-D DCT coefficients of the image, `height x width`.
pub fn dct2(img: &RawImage) -> Array2<f64> {
    let (h, w) = (img.height(), img.width());
    let x = Array2::from_shape_vec((h, w), img.pixels().to_vec()).expect("shape checked by RawImage");
    let dh = dct_matrix(h);
    let dw = dct_matrix(w);
    dh.dot(&x).dot(&dw.t())
}

/// Exact inverse of [`dct2`]; the transform is orthogonal so the inverse is
/// the transpose.
pub fn idct2(coeffs: &Array2<f64>) -> Array2<f64> {
    let (h, w) = coeffs.dim();
    let dh = dct_matrix(h);
    let dw = dct_matrix(w);
    dh.t().dot(coeffs).dot(&dw)
}
