use alloc::vec::Vec;

use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KsResult {
    /// `sup |F_n(x) - x|`.
    pub statistic: f64,
    pub n: usize,
    pub alpha: f64,
    /// `c(alpha) / sqrt(n)`.
    pub critical_value: f64,
    pub pass: bool,
}

/// Asymptotic Kolmogorov critical coefficient `c(alpha)`. Tabulated values
/// for the usual levels, `sqrt(-ln(alpha / 2) / 2)` otherwise.
pub fn ks_critical_coefficient(alpha: f64) -> Result<f64> {
    if !(alpha > 0.0 && alpha < 1.0) {
        return Err(Error::InvalidArgument(alloc::format!("alpha {alpha} outside (0, 1)")));
    }
    const TABLE: [(f64, f64); 4] = [(0.10, 1.224), (0.05, 1.358), (0.01, 1.628), (0.001, 1.949)];
    Ok(TABLE
        .iter()
        .find(|(a, _)| (a - alpha).abs() < 1e-12)
        .map_or_else(|| libm::sqrt(-libm::log(alpha / 2.0) / 2.0), |(_, c)| *c))
}

/// One-sample Kolmogorov–Smirnov test against Uniform(0, 1).
pub fn ks_statistic(samples: &[f64], alpha: f64) -> Result<KsResult> {
    if samples.is_empty() {
        return Err(Error::EmptyInput("samples"));
    }
    if let Some(&x) = samples.iter().find(|x| !(0.0..=1.0).contains(*x)) {
        return Err(Error::Domain(x));
    }
    let c = ks_critical_coefficient(alpha)?;
    let mut sorted: Vec<f64> = samples.to_vec();
    sorted.sort_unstable_by(f64::total_cmp);
    let n = sorted.len();
    let nf = n as f64;
    let statistic = sorted
        .iter()
        .enumerate()
        .map(|(i, &x)| f64::max((i + 1) as f64 / nf - x, x - i as f64 / nf))
        .fold(0.0, f64::max);
    let critical_value = c / libm::sqrt(nf);
    Ok(KsResult { statistic, n, alpha, critical_value, pass: statistic < critical_value })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::{uniform, Seed};

    #[test]
    fn single_point() {
        assert_eq!(ks_statistic(&[0.5], 0.01).unwrap().statistic, 0.5);
    }

    #[test]
    fn midpoint_grid() {
        for n in [1usize, 4, 10, 1000] {
            let xs: Vec<f64> = (1..=n).map(|i| (i as f64 - 0.5) / n as f64).collect();
            let d = ks_statistic(&xs, 0.01).unwrap().statistic;
            assert!((d - 0.5 / n as f64).abs() < 1e-12, "{n}: {d}");
        }
    }

    #[test]
    fn all_zero() {
        let r = ks_statistic(&[0.0; 20], 0.01).unwrap();
        assert_eq!(r.statistic, 1.0);
        assert!(!r.pass);
    }

    #[test]
    fn domain_and_empty() {
        assert_eq!(ks_statistic(&[0.2, 1.5], 0.01), Err(Error::Domain(1.5)));
        assert_eq!(ks_statistic(&[], 0.01), Err(Error::EmptyInput("samples")));
        assert!(ks_statistic(&[0.2], 1.0).is_err());
    }

    #[test]
    fn critical_coefficients() {
        assert_eq!(ks_critical_coefficient(0.01).unwrap(), 1.628);
        assert!((ks_critical_coefficient(0.02).unwrap() - 1.5174).abs() < 1e-3);
    }

    #[test]
    fn uniform_samples_pass() {
        let passes = (0..100u64)
            .filter(|&s| {
                let mut rng = Seed::sub_seed(777, s).rng(0);
                let xs: Vec<f64> = (0..10_000).map(|_| uniform(&mut rng)).collect();
                ks_statistic(&xs, 0.01).unwrap().pass
            })
            .count();
        assert!(passes >= 98, "{passes}/100");
    }
}
