//! Binary PGM (P5) reader/writer, 8-bit only.

use super::RawImage;
use crate::error::{Error, Result};
use std::io::Write;
use std::path::Path;

fn malformed(msg: &str) -> Error {
    Error::MalformedImage(msg.into())
}

/// Parse a binary 8-bit PGM from raw bytes, scaling intensities to `[0,1]`.
pub fn load_pgm(bytes: &[u8]) -> Result<RawImage> {
    let mut pos = 0usize;

    let mut next_token = |buf: &[u8]| -> Result<(usize, usize)> {
        // Skip whitespace and `#` comment lines between header fields.
        let mut i = pos;
        loop {
            while i < buf.len() && buf[i].is_ascii_whitespace() {
                i += 1;
            }
            if i < buf.len() && buf[i] == b'#' {
                while i < buf.len() && buf[i] != b'\n' {
                    i += 1;
                }
            } else {
                break;
            }
        }
        let start = i;
        while i < buf.len() && !buf[i].is_ascii_whitespace() {
            i += 1;
        }
        if start == i {
            return Err(malformed("truncated header"));
        }
        Ok((start, i))
    };

    let (s, e) = next_token(bytes)?;
    if &bytes[s..e] != b"P5" {
        return Err(malformed("not a binary PGM (missing P5 magic)"));
    }
    pos = e;

    let mut read_number = |buf: &[u8], pos: &mut usize| -> Result<usize> {
        let (s, e) = {
            let saved = *pos;
            // next_token closes over `pos` above; inline the scan here instead.
            let mut i = saved;
            loop {
                while i < buf.len() && buf[i].is_ascii_whitespace() {
                    i += 1;
                }
                if i < buf.len() && buf[i] == b'#' {
                    while i < buf.len() && buf[i] != b'\n' {
                        i += 1;
                    }
                } else {
                    break;
                }
            }
            let start = i;
            while i < buf.len() && !buf[i].is_ascii_whitespace() {
                i += 1;
            }
            if start == i {
                return Err(malformed("truncated header"));
            }
            (start, i)
        };
        *pos = e;
        std::str::from_utf8(&buf[s..e])
            .ok()
            .and_then(|t| t.parse::<usize>().ok())
            .ok_or_else(|| malformed("non-numeric header field"))
    };

    let width = read_number(bytes, &mut pos)?;
    let height = read_number(bytes, &mut pos)?;
    let maxval = read_number(bytes, &mut pos)?;

    if width == 0 || height == 0 {
        return Err(malformed("zero-size image"));
    }
    if maxval == 0 || maxval > 255 {
        return Err(malformed("unsupported maxval (8-bit only)"));
    }

    // Exactly one whitespace byte separates the header from the raster.
    if pos >= bytes.len() || !bytes[pos].is_ascii_whitespace() {
        return Err(malformed("missing raster separator"));
    }
    pos += 1;

    let n = width * height;
    if bytes.len() < pos + n {
        return Err(malformed("truncated raster data"));
    }
    let pixels = bytes[pos..pos + n]
        .iter()
        .map(|&b| b as f64 / maxval as f64)
        .collect();
    RawImage::new(width, height, pixels)
}

/// Write an 8-bit binary PGM with maxval 255.
pub fn write_pgm<W: Write>(img: &RawImage, out: &mut W) -> Result<()> {
    write!(out, "P5\n{} {}\n255\n", img.width(), img.height())?;
    let bytes: Vec<u8> = img
        .pixels()
        .iter()
        .map(|&p| (p * 255.0).round().clamp(0.0, 255.0) as u8)
        .collect();
    out.write_all(&bytes)?;
    Ok(())
}

pub fn load_pgm_file(path: &Path) -> Result<RawImage> {
    load_pgm(&std::fs::read(path)?)
}

pub fn write_pgm_file(img: &RawImage, path: &Path) -> Result<()> {
    let mut buf = Vec::new();
    write_pgm(img, &mut buf)?;
    std::fs::write(path, buf)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pgm_bytes(img: &RawImage) -> Vec<u8> {
        let mut buf = Vec::new();
        write_pgm(img, &mut buf).unwrap();
        buf
    }

    #[test]
    fn max_intensity_pixels_map_to_one() {
        let bytes = b"P5\n2 2\n255\n\xff\xff\xff\xff";
        let img = load_pgm(bytes).unwrap();
        assert_eq!(img.width(), 2);
        assert_eq!(img.height(), 2);
        assert!(img.pixels().iter().all(|&p| p == 1.0));
    }

    #[test]
    fn dimensions_pass_through() {
        let img = RawImage::new(50, 40, vec![0.5; 2000]).unwrap();
        let back = load_pgm(&pgm_bytes(&img)).unwrap();
        assert_eq!(back.width(), 50);
        assert_eq!(back.height(), 40);
    }

    #[test]
    fn truncated_stream_is_rejected() {
        let img = RawImage::new(4, 4, vec![0.25; 16]).unwrap();
        let bytes = pgm_bytes(&img);
        assert!(matches!(
            load_pgm(&bytes[..bytes.len() - 3]),
            Err(Error::MalformedImage(_))
        ));
    }

    #[test]
    fn bad_magic_and_maxval_are_rejected() {
        assert!(load_pgm(b"P2\n2 2\n255\n....").is_err());
        assert!(load_pgm(b"P5\n2 2\n65535\n\0\0\0\0").is_err());
        assert!(load_pgm(b"P5\n0 2\n255\n").is_err());
    }

    #[test]
    fn header_comments_are_skipped() {
        let bytes = b"P5\n# made by a scanner\n2 1\n# another comment\n255\n\x00\x80";
        let img = load_pgm(bytes).unwrap();
        assert_eq!(img.width(), 2);
        assert!((img.pixel(0, 1) - 128.0 / 255.0).abs() < 1e-12);
    }

    #[test]
    fn roundtrip_preserves_8bit_images() {
        let pixels: Vec<f64> = (0..64).map(|i| (i * 4) as f64 / 255.0).collect();
        let img = RawImage::new(8, 8, pixels).unwrap();
        assert_eq!(load_pgm(&pgm_bytes(&img)).unwrap(), img);
    }
}
