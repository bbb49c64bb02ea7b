//! Parsing of fan and divisor arguments.

use std::path::Path;

use anyhow::{bail, Context, Result};
use toric_core::fan::build_named;
use toric_core::{Divisor, Error, Fan};

/// A built-in surface name, or a path to a `{"rays": [...]}` file.
pub fn load_fan(spec: &str) -> Result<Fan> {
    match build_named(spec) {
        Ok(fan) => Ok(fan),
        Err(Error::UnknownName(_)) if Path::new(spec).exists() => read_fan_file(Path::new(spec)),
        Err(e) => Err(e)
            .with_context(|| format!("`{spec}` is neither a built-in surface nor a readable file")),
    }
}

pub fn read_fan_file(path: &Path) -> Result<Fan> {
    let text =
        std::fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    serde_json::from_str(&text).with_context(|| format!("{} is not a valid fan", path.display()))
}

/// `"[1,2,3]"`, `"1,2,3"` or `"1 2 3"`.
pub fn parse_integers(text: &str) -> Result<Vec<i64>> {
    let trimmed = text.trim();
    if trimmed.starts_with('[') {
        return serde_json::from_str(trimmed)
            .with_context(|| format!("cannot parse `{text}` as an integer list"));
    }
    trimmed
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|s| !s.is_empty())
        .map(|s| {
            s.parse::<i64>()
                .with_context(|| format!("`{s}` is not an integer"))
        })
        .collect()
}

/// All `n` coefficients, or the `n - 2` free ones.
pub fn parse_divisor<'f>(fan: &'f Fan, text: &str) -> Result<Divisor<'f>> {
    let coeffs = parse_integers(text)?;
    if coeffs.is_empty() {
        bail!("empty divisor");
    }
    Ok(Divisor::parse_coeffs(fan, &coeffs)?)
}
