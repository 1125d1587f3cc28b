//! Least-squares scaling fits in log space.

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FitKind {
    /// `y = A·e^{B·x}`
    Exponential,
    /// `y = A·x^B`
    Power,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScalingFit {
    pub kind: FitKind,
    pub a: f64,
    pub b: f64,
    /// Coefficient of determination of the linearized fit, in `[0, 1]`.
    pub r_squared: f64,
}

impl ScalingFit {
    pub fn predict(&self, x: f64) -> f64 {
        match self.kind {
            FitKind::Exponential => self.a * (self.b * x).exp(),
            FitKind::Power => self.a * x.powf(self.b),
        }
    }
}

pub fn fit_scaling(xs: &[f64], ys: &[f64], kind: FitKind) -> Result<ScalingFit> {
    if xs.len() != ys.len() {
        return Err(Error::InvalidParameter(format!(
            "{} x values but {} y values",
            xs.len(),
            ys.len()
        )));
    }
    if xs.len() < 3 {
        return Err(Error::InvalidParameter("need at least 3 points".into()));
    }
    if let Some(y) = ys.iter().find(|&&y| !(y > 0.0 && y.is_finite())) {
        return Err(Error::InvalidParameter(format!("y = {y} is not positive")));
    }
    let tx: Vec<f64> = match kind {
        FitKind::Exponential => xs.to_vec(),
        FitKind::Power => {
            if let Some(x) = xs.iter().find(|&&x| !(x > 0.0 && x.is_finite())) {
                return Err(Error::InvalidParameter(format!("x = {x} is not positive")));
            }
            xs.iter().map(|x| x.ln()).collect()
        }
    };
    let ty: Vec<f64> = ys.iter().map(|y| y.ln()).collect();

    let len = tx.len() as f64;
    let mx = tx.iter().sum::<f64>() / len;
    let my = ty.iter().sum::<f64>() / len;
    let sxx: f64 = tx.iter().map(|x| (x - mx).powi(2)).sum();
    let sxy: f64 = tx.iter().zip(&ty).map(|(x, y)| (x - mx) * (y - my)).sum();
    if sxx == 0.0 {
        return Err(Error::InvalidParameter("x values are all equal".into()));
    }
    let b = sxy / sxx;
    let intercept = my - b * mx;
    let ss_res: f64 = tx
        .iter()
        .zip(&ty)
        .map(|(x, y)| (y - intercept - b * x).powi(2))
        .sum();
    let ss_tot: f64 = ty.iter().map(|y| (y - my).powi(2)).sum();
    let r_squared = if ss_tot == 0.0 {
        1.0
    } else {
        (1.0 - ss_res / ss_tot).clamp(0.0, 1.0)
    };
    Ok(ScalingFit {
        kind,
        a: intercept.exp(),
        b,
        r_squared,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn recovers_exponential() {
        let xs: Vec<f64> = (0..10).map(f64::from).collect();
        let ys: Vec<f64> = xs.iter().map(|x| 2.0 * (-0.1 * x).exp()).collect();
        let fit = fit_scaling(&xs, &ys, FitKind::Exponential).unwrap();
        assert!((fit.a - 2.0).abs() < 1e-9);
        assert!((fit.b + 0.1).abs() < 1e-9);
        assert!((fit.r_squared - 1.0).abs() < 1e-9);
    }

    #[test]
    fn recovers_power() {
        let xs = [10.0, 100.0, 1000.0, 1e4];
        let ys: Vec<f64> = xs.iter().map(|x: &f64| 77.422 * x.powf(1.125)).collect();
        let fit = fit_scaling(&xs, &ys, FitKind::Power).unwrap();
        assert!((fit.a - 77.422).abs() < 1e-9 * 77.422);
        assert!((fit.b - 1.125).abs() < 1e-9);
        assert!((fit.predict(50.0) - 77.422 * 50f64.powf(1.125)).abs() < 1e-6);
    }

    #[test]
    fn noisy_data_has_r_squared_below_one() {
        let xs = [1.0, 2.0, 3.0, 4.0];
        let ys = [1.0, 3.0, 2.0, 5.0];
        let fit = fit_scaling(&xs, &ys, FitKind::Exponential).unwrap();
        assert!(fit.r_squared > 0.0 && fit.r_squared < 1.0);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(fit_scaling(&[1.0, 2.0], &[1.0, 2.0], FitKind::Power).is_err());
        assert!(fit_scaling(&[1.0, 2.0, 3.0], &[1.0, 0.0, 2.0], FitKind::Power).is_err());
        assert!(fit_scaling(&[0.0, 2.0, 3.0], &[1.0, 1.0, 2.0], FitKind::Power).is_err());
        assert!(fit_scaling(&[1.0, 2.0, 3.0], &[1.0, 2.0], FitKind::Exponential).is_err());
        assert!(fit_scaling(&[2.0, 2.0, 2.0], &[1.0, 2.0, 3.0], FitKind::Exponential).is_err());
    }
}
