use num_complex::Complex64;

/// A point s = σ + it of the complex plane.
///
/// σ is the single stored coordinate; λ = σ − ½ is always derived from it.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ComplexPoint {
    pub sigma: f64,
    pub t: f64,
}

impl ComplexPoint {
    pub const fn new(sigma: f64, t: f64) -> Self {
        Self { sigma, t }
    }

    /// s = ½ + λ + it.
    pub fn from_lambda(lambda: f64, t: f64) -> Self {
        Self::new(0.5 + lambda, t)
    }

    pub fn on_critical_line(t: f64) -> Self {
        Self::new(0.5, t)
    }

    pub fn lambda(&self) -> f64 {
        self.sigma - 0.5
    }

    pub fn to_complex(self) -> Complex64 {
        Complex64::new(self.sigma, self.t)
    }

    pub fn from_complex(z: Complex64) -> Self {
        Self::new(z.re, z.im)
    }

    /// 1 − s.
    pub fn reflect(self) -> Self {
        Self::new(1.0 - self.sigma, -self.t)
    }

    pub fn conj(self) -> Self {
        Self::new(self.sigma, -self.t)
    }
}

impl From<Complex64> for ComplexPoint {
    fn from(z: Complex64) -> Self {
        Self::from_complex(z)
    }
}

impl From<ComplexPoint> for Complex64 {
    fn from(s: ComplexPoint) -> Self {
        s.to_complex()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn lambda_is_offset_from_half() {
        let s = ComplexPoint::from_lambda(0.25, 101.3);
        assert_eq!(s.sigma, 0.75);
        assert_eq!(s.lambda(), 0.25);
        assert_eq!(ComplexPoint::on_critical_line(3.0).lambda(), 0.0);
    }

    proptest! {
        #[test]
        fn lambda_round_trip_within_one_ulp(sigma in 0.0f64..1.0, t in -500.0f64..500.0) {
            let s = ComplexPoint::new(sigma, t);
            let back = ComplexPoint::from_lambda(s.lambda(), t);
            prop_assert!((back.sigma - sigma).abs() <= f64::EPSILON);
            prop_assert_eq!(back.t, t);
        }

        #[test]
        fn reflect_and_conj_are_involutions(sigma in -3.0f64..3.0, t in -500.0f64..500.0) {
            let s = ComplexPoint::new(sigma, t);
            prop_assert_eq!(s.conj().conj(), s);
            let r = s.reflect().reflect();
            prop_assert!((r.sigma - sigma).abs() <= 4.0 * f64::EPSILON);
            prop_assert_eq!(r.t, t);
        }
    }
}
