use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OlsFit {
    pub slope: f64,
    pub intercept: f64,
    pub r2: f64,
    pub n: usize,
}

/// Simple least squares `y = slope * x + intercept` with coefficient of
/// determination `1 - SS_res / SS_tot`.
pub fn ols_r2(xs: &[f64], ys: &[f64]) -> Result<OlsFit> {
    if xs.len() != ys.len() {
        return Err(Error::InvalidArgument(alloc::format!("{} xs vs {} ys", xs.len(), ys.len())));
    }
    let n = xs.len();
    if n < 3 {
        return Err(Error::InsufficientData { needed: 3, got: n });
    }
    let nf = n as f64;
    let mx = xs.iter().sum::<f64>() / nf;
    let my = ys.iter().sum::<f64>() / nf;
    let (mut sxx, mut sxy, mut syy) = (0.0, 0.0, 0.0);
    for (&x, &y) in xs.iter().zip(ys) {
        let (dx, dy) = (x - mx, y - my);
        sxx += dx * dx;
        sxy += dx * dy;
        syy += dy * dy;
    }
    if sxx == 0.0 {
        return Err(Error::DegenerateInput("xs have zero variance"));
    }
    if syy == 0.0 {
        return Err(Error::DegenerateInput("ys have zero variance"));
    }
    let slope = sxy / sxx;
    let intercept = my - slope * mx;
    let ss_res: f64 = xs
        .iter()
        .zip(ys)
        .map(|(&x, &y)| {
            let e = y - (slope * x + intercept);
            e * e
        })
        .sum();
    let r2 = (1.0 - ss_res / syy).clamp(0.0, 1.0);
    Ok(OlsFit { slope, intercept, r2, n })
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec::Vec;
    use proptest::prelude::*;

    #[test]
    fn perfect_fit() {
        let f = ols_r2(&[0.0, 1.0, 2.0], &[0.0, 1.0, 2.0]).unwrap();
        assert_eq!((f.slope, f.intercept, f.r2), (1.0, 0.0, 1.0));
    }

    #[test]
    fn hand_case() {
        // normal equations: sxx = 2, sxy = 1, mean y = 2/3 -> slope 1/2,
        // intercept 2/3 - 1/2 = 1/6; SS_tot = 2/3, SS_res = 1/6 -> r2 = 3/4
        let f = ols_r2(&[0.0, 1.0, 2.0], &[0.0, 1.0, 1.0]).unwrap();
        assert!((f.slope - 0.5).abs() < 1e-12);
        assert!((f.intercept - 1.0 / 6.0).abs() < 1e-12);
        assert!((f.r2 - 0.75).abs() < 1e-12);
    }

    #[test]
    fn degenerate_inputs() {
        assert_eq!(ols_r2(&[0.0, 1.0, 2.0], &[3.0; 3]), Err(Error::DegenerateInput("ys have zero variance")));
        assert_eq!(ols_r2(&[1.0; 3], &[0.0, 1.0, 2.0]), Err(Error::DegenerateInput("xs have zero variance")));
        assert!(matches!(ols_r2(&[0.0, 1.0], &[0.0, 1.0]), Err(Error::InsufficientData { .. })));
        assert!(matches!(ols_r2(&[0.0, 1.0, 2.0], &[0.0, 1.0]), Err(Error::InvalidArgument(_))));
    }

    proptest! {
        #[test]
        fn recovers_exact_lines(a in -50i32..50, b in -50i32..50, xs in prop::collection::btree_set(-1000i32..1000, 3..30)) {
            prop_assume!(a != 0);
            let xs: Vec<f64> = xs.into_iter().map(f64::from).collect();
            let ys: Vec<f64> = xs.iter().map(|x| a as f64 * x + b as f64).collect();
            let f = ols_r2(&xs, &ys).unwrap();
            prop_assert!((f.slope - a as f64).abs() <= 1e-9);
            prop_assert!((f.intercept - b as f64).abs() <= 1e-9);
            prop_assert!((f.r2 - 1.0).abs() <= 1e-9);
        }

        #[test]
        fn r2_in_unit_interval(pts in prop::collection::vec((-100i32..100, -100i32..100), 3..40)) {
            let xs: Vec<f64> = pts.iter().map(|p| p.0 as f64).collect();
            let ys: Vec<f64> = pts.iter().map(|p| p.1 as f64).collect();
            if let Ok(f) = ols_r2(&xs, &ys) {
                prop_assert!((0.0..=1.0).contains(&f.r2));
                let max_resid = xs.iter().zip(&ys).map(|(x, y)| (y - f.slope * x - f.intercept).abs()).fold(0.0, f64::max);
                if max_resid > 1e-6 {
                    prop_assert!(f.r2 < 1.0);
                }
            }
        }
    }
}
