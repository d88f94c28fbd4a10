use crate::Error;

/// Least-squares line `y = slope·x + intercept`; `residual` is the RMS error.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GrowthFit {
    pub slope: f64,
    pub intercept: f64,
    pub residual: f64,
}

pub const MIN_FIT_POINTS: usize = 4;

pub fn fit_growth(points: &[(f64, f64)]) -> Result<GrowthFit, Error> {
    if points.len() < MIN_FIT_POINTS {
        return Err(Error::Format(format!(
            "growth fit needs at least {MIN_FIT_POINTS} points, got {}",
            points.len()
        )));
    }
    let count = points.len() as f64;
    let mean_x = points.iter().map(|p| p.0).sum::<f64>() / count;
    let mean_y = points.iter().map(|p| p.1).sum::<f64>() / count;
    let sxx: f64 = points.iter().map(|p| (p.0 - mean_x).powi(2)).sum();
    let sxy: f64 = points.iter().map(|p| (p.0 - mean_x) * (p.1 - mean_y)).sum();
    if sxx == 0.0 {
        return Err(Error::Format(
            "growth fit needs at least two distinct n".into(),
        ));
    }
    let slope = sxy / sxx;
    let intercept = mean_y - slope * mean_x;
    let sse: f64 = points
        .iter()
        .map(|p| (p.1 - (slope * p.0 + intercept)).powi(2))
        .sum();
    Ok(GrowthFit {
        slope,
        intercept,
        residual: (sse / count).sqrt(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_line() {
        let pts: Vec<(f64, f64)> = (8..=20).map(|n| (n as f64, n as f64)).collect();
        let fit = fit_growth(&pts).unwrap();
        assert!((fit.slope - 1.0).abs() < 1e-12);
        assert!(fit.intercept.abs() < 1e-9);
        assert!(fit.residual < 1e-9);
    }

    #[test]
    fn half_slope_with_offset() {
        let pts: Vec<(f64, f64)> = (0..6)
            .map(|k| (16.0 + 2.0 * k as f64, 1.0 + 0.5 * (16.0 + 2.0 * k as f64)))
            .collect();
        let fit = fit_growth(&pts).unwrap();
        assert!((fit.slope - 0.5).abs() < 1e-12);
        assert!((fit.intercept - 1.0).abs() < 1e-9);
    }

    #[test]
    fn residual_of_noisy_points() {
        // y = x ± 1 alternating: slope stays near 1, RMS residual near 1
        let pts = [(0.0, 1.0), (1.0, 0.0), (2.0, 3.0), (3.0, 2.0)];
        let fit = fit_growth(&pts).unwrap();
        assert!((fit.slope - 0.6).abs() < 1e-12);
        assert!(fit.residual > 0.5);
    }

    #[test]
    fn too_few_points() {
        assert!(fit_growth(&[(1.0, 1.0), (2.0, 2.0), (3.0, 3.0)]).is_err());
        assert!(fit_growth(&[(1.0, 1.0); 5]).is_err());
    }
}
