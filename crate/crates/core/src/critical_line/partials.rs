use num_complex::Complex64;

use super::StripFunction;
use crate::error::Result;
use crate::special_functions::ComplexPoint;

/// First and second partial derivatives of f(½ + λ + it) in λ and t, all
/// divided by `exp(reference_log_scale)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct StripPartials {
    pub point: ComplexPoint,
    pub reference_log_scale: f64,
    pub value: Complex64,
    pub d_lambda: Complex64,
    pub d_t: Complex64,
    pub d_lambda_lambda: Complex64,
    pub d_t_t: Complex64,
    pub d_lambda_t: Complex64,
}

fn extrapolate(column: &[Complex64]) -> Complex64 {
    let mut row = column.to_vec();
    for m in 1..column.len() {
        let factor = 4f64.powi(m as i32) - 1.0;
        row = (1..row.len())
            .map(|i| row[i] + (row[i] - row[i - 1]) / factor)
            .collect();
    }
    row[0]
}

/// Partials by Richardson-extrapolated central differences with steps h/2^i.
pub fn strip_partials<F: StripFunction + ?Sized>(
    f: &F,
    s: ComplexPoint,
    h: f64,
    levels: usize,
) -> Result<StripPartials> {
    let reference = f.reference_log_scale(s.t)?;
    let at = |dl: f64, dt: f64| -> Result<Complex64> {
        Ok(f.eval(ComplexPoint::new(s.sigma + dl, s.t + dt))?.descaled(reference))
    };
    let center = at(0.0, 0.0)?;
    let levels = levels.max(1);
    let mut cols: [Vec<Complex64>; 5] = Default::default();
    for i in 0..levels {
        let h = h / 2f64.powi(i as i32);
        let (lp, lm) = (at(h, 0.0)?, at(-h, 0.0)?);
        let (tp, tm) = (at(0.0, h)?, at(0.0, -h)?);
        let (pp, pm) = (at(h, h)?, at(h, -h)?);
        let (mp, mm) = (at(-h, h)?, at(-h, -h)?);
        cols[0].push((lp - lm) / (2.0 * h));
        cols[1].push((tp - tm) / (2.0 * h));
        cols[2].push((lp - 2.0 * center + lm) / (h * h));
        cols[3].push((tp - 2.0 * center + tm) / (h * h));
        cols[4].push((pp - pm - mp + mm) / (4.0 * h * h));
    }
    Ok(StripPartials {
        point: s,
        reference_log_scale: reference,
        value: center,
        d_lambda: extrapolate(&cols[0]),
        d_t: extrapolate(&cols[1]),
        d_lambda_lambda: extrapolate(&cols[2]),
        d_t_t: extrapolate(&cols[3]),
        d_lambda_t: extrapolate(&cols[4]),
    })
}
