//! KRT v1: a two-line text format for colorings.
//!
//! ```text
//! krt 1 N=4 t=2 r=2
//! 1 0 1 1 0 1
//! ```
//!
//! The second line lists the `C(N, t)` colors in colex order. Lines starting
//! with `#` before the header are comments. The writer never emits comments.

use std::fmt::Write;

use super::{check_shape, subset_count, Color, Coloring};
use crate::{Error, Result};

pub fn write_krt(c: &Coloring) -> String {
    let mut out = String::with_capacity(24 + 2 * c.colors.len());
    let _ = writeln!(out, "krt 1 N={} t={} r={}", c.ground_size, c.tuple_size, c.num_colors);
    for (i, color) in c.colors.iter().enumerate() {
        if i > 0 {
            out.push(' ');
        }
        let _ = write!(out, "{color}");
    }
    out.push('\n');
    out
}

fn header_field(token: Option<&str>, key: &str) -> Result<usize> {
    let token = token.ok_or_else(|| Error::Krt(format!("missing header field {key}")))?;
    let value = token
        .strip_prefix(key)
        .and_then(|rest| rest.strip_prefix('='))
        .ok_or_else(|| Error::Krt(format!("expected {key}=<value>, found {token:?}")))?;
    value
        .parse()
        .map_err(|_| Error::Krt(format!("bad value for {key}: {value:?}")))
}

pub fn parse_krt(text: &str) -> Result<Coloring> {
    let mut lines = text.split('\n').skip_while(|l| l.starts_with('#'));
    let header = lines.next().filter(|h| !h.is_empty()).ok_or_else(|| Error::Krt("missing header".into()))?;

    let mut tokens = header.split(' ');
    if tokens.next() != Some("krt") || tokens.next() != Some("1") {
        return Err(Error::Krt(format!("expected \"krt 1\" header, found {header:?}")));
    }
    let ground_size = header_field(tokens.next(), "N")?;
    let tuple_size = header_field(tokens.next(), "t")?;
    let num_colors = header_field(tokens.next(), "r")?;
    if let Some(extra) = tokens.next() {
        return Err(Error::Krt(format!("unexpected header token {extra:?}")));
    }
    let num_colors = u32::try_from(num_colors).map_err(|_| Error::Krt("r out of range".into()))?;
    check_shape(ground_size, tuple_size, num_colors).map_err(|e| Error::Krt(e.to_string()))?;
    let expected = subset_count(ground_size, tuple_size)?;

    let body = lines.next().unwrap_or("");
    let colors = body
        .split_ascii_whitespace()
        .map(|tok| {
            tok.parse::<u64>()
                .map_err(|_| Error::Krt(format!("bad color value {tok:?}")))
        })
        .collect::<Result<Vec<_>>>()?;
    if colors.len() != expected {
        return Err(Error::Krt(format!("expected {expected} colors, found {}", colors.len())));
    }
    if let Some(&bad) = colors.iter().find(|&&c| c >= num_colors as u64) {
        return Err(Error::ColorOutOfRange { color: bad, num_colors });
    }
    if let Some(rest) = lines.find(|l| !l.trim().is_empty()) {
        return Err(Error::Krt(format!("unexpected trailing content {rest:?}")));
    }
    let colors: Vec<Color> = colors.into_iter().map(|c| c as Color).collect();
    Coloring::new(ground_size, tuple_size, num_colors, colors)
}
