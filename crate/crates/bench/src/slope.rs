//! Least-squares fit of `log T` against `log N`.

use std::collections::BTreeMap;

use crate::error::{BenchError, Result};
use crate::record::{Algorithm, BenchRecord};

/// Fewest size points accepted for a fit.
pub const MIN_POINTS: usize = 4;

#[derive(Debug, Clone, PartialEq)]
pub struct SlopeEstimate {
    pub slope: f64,
    pub intercept: f64,
    pub r_squared: f64,
    /// `(ln N, ln T)` pairs the fit used.
    pub points: Vec<(f64, f64)>,
}

/// Fits `ln T = slope · ln N + intercept` over `(N, T)` samples.
pub fn fit_slope(samples: &[(f64, f64)]) -> Result<SlopeEstimate> {
    if samples.len() < MIN_POINTS {
        return Err(BenchError::InsufficientRows {
            needed: MIN_POINTS,
            found: samples.len(),
        });
    }
    if samples.iter().any(|&(n, t)| n <= 0.0 || t <= 0.0) {
        return Err(BenchError::Usage("sizes and times must be positive".into()));
    }
    let points: Vec<(f64, f64)> = samples.iter().map(|&(n, t)| (n.ln(), t.ln())).collect();
    let k = points.len() as f64;
    let mean_x = points.iter().map(|p| p.0).sum::<f64>() / k;
    let mean_y = points.iter().map(|p| p.1).sum::<f64>() / k;
    let sxx: f64 = points.iter().map(|p| (p.0 - mean_x).powi(2)).sum();
    let sxy: f64 = points.iter().map(|p| (p.0 - mean_x) * (p.1 - mean_y)).sum();
    let syy: f64 = points.iter().map(|p| (p.1 - mean_y).powi(2)).sum();
    if sxx == 0.0 {
        return Err(BenchError::Usage("all rows have the same size".into()));
    }
    let slope = sxy / sxx;
    let intercept = mean_y - slope * mean_x;
    let r_squared = if syy == 0.0 {
        1.0
    } else {
        sxy * sxy / (sxx * syy)
    };
    Ok(SlopeEstimate {
        slope,
        intercept,
        r_squared,
        points,
    })
}

/// Rows grouped by `(algorithm, B, threads)`.
pub type ConfigKey = (Algorithm, usize, usize);

/// Fits every configuration with enough rows. Fails if none qualifies.
pub fn fit_records(records: &[BenchRecord]) -> Result<Vec<(ConfigKey, SlopeEstimate)>> {
    let mut groups: BTreeMap<ConfigKey, Vec<(f64, f64)>> = BTreeMap::new();
    for r in records {
        groups
            .entry((r.algorithm, r.blocks, r.threads))
            .or_default()
            .push((r.size_bits as f64, r.wall_seconds));
    }
    let largest = groups.values().map(Vec::len).max().unwrap_or(0);
    let fits: Vec<_> = groups
        .into_iter()
        .filter(|(_, s)| s.len() >= MIN_POINTS)
        .map(|(k, s)| fit_slope(&s).map(|e| (k, e)))
        .collect::<Result<_>>()?;
    if fits.is_empty() {
        return Err(BenchError::InsufficientRows {
            needed: MIN_POINTS,
            found: largest,
        });
    }
    Ok(fits)
}
