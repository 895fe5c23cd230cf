use std::f64::consts::{LN_2, PI};
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_complex::Complex64;

// ln 2 split so that `k * LN2_HI` is exact for |k| < 2^20.
const LN2_HI: f64 = 6.931_471_803_691_238e-1;
const LN2_LO: f64 = 1.908_214_929_270_587_7e-10;

/// A complex number with an unbounded binary exponent.
///
/// The value is `mantissa * 2^exponent` with the larger of |Re|, |Im| of the
/// mantissa in [½, 1). This keeps the full 53-bit mantissa for magnitudes far
/// outside the `f64` range, so ξ values of order 1e−170 and their ratios are
/// exact to rounding. The natural-log magnitude and the phase in (−π, π] are
/// derived views; zero has log-magnitude −∞ and phase 0.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LogScaledComplex {
    mantissa: Complex64,
    exponent: i64,
}

fn frexp(x: f64) -> (f64, i64) {
    if x == 0.0 || !x.is_finite() {
        return (x, 0);
    }
    let bits = x.to_bits();
    let biased = ((bits >> 52) & 0x7ff) as i64;
    if biased == 0 {
        // subnormal: lift into the normal range first
        let (f, e) = frexp(x * f64::from_bits(0x4350_0000_0000_0000));
        return (f, e - 54);
    }
    let f = f64::from_bits((bits & !(0x7ff_u64 << 52)) | (1022_u64 << 52));
    (f, biased - 1022)
}

fn pow2(e: i64) -> f64 {
    debug_assert!((-1022..=1023).contains(&e));
    f64::from_bits(((e + 1023) as u64) << 52)
}

fn ldexp(mut x: f64, mut e: i64) -> f64 {
    while e > 1000 {
        x *= pow2(1000);
        e -= 1000;
        if !x.is_finite() {
            return x;
        }
    }
    while e < -1000 {
        x *= pow2(-1000);
        e += 1000;
        if x == 0.0 {
            return x;
        }
    }
    x * pow2(e)
}

fn ldexp_complex(z: Complex64, e: i64) -> Complex64 {
    Complex64::new(ldexp(z.re, e), ldexp(z.im, e))
}

impl LogScaledComplex {
    pub const ZERO: Self = Self {
        mantissa: Complex64::new(0.0, 0.0),
        exponent: 0,
    };
    pub const ONE: Self = Self {
        mantissa: Complex64::new(0.5, 0.0),
        exponent: 1,
    };

    fn normalized(mantissa: Complex64, exponent: i64) -> Self {
        if !(mantissa.re.is_finite() && mantissa.im.is_finite()) {
            return Self { mantissa, exponent };
        }
        let largest = mantissa.re.abs().max(mantissa.im.abs());
        if largest == 0.0 {
            return Self::ZERO;
        }
        let (_, e) = frexp(largest);
        Self {
            mantissa: ldexp_complex(mantissa, -e),
            exponent: exponent + e,
        }
    }

    pub fn from_complex(z: Complex64) -> Self {
        Self::normalized(z, 0)
    }

    pub fn from_real(x: f64) -> Self {
        Self::from_complex(Complex64::new(x, 0.0))
    }

    /// Build from log-magnitude and phase (the phase need not be wrapped).
    pub fn from_polar_log(log_magnitude: f64, phase: f64) -> Self {
        Self::exp(Complex64::new(log_magnitude, phase))
    }

    /// exp(z) without overflow or underflow.
    pub fn exp(z: Complex64) -> Self {
        if z.re == f64::NEG_INFINITY {
            return Self::ZERO;
        }
        if !(z.re.is_finite() && z.im.is_finite()) {
            return Self {
                mantissa: Complex64::new(f64::NAN, f64::NAN),
                exponent: 0,
            };
        }
        let k = (z.re / LN_2).floor();
        let r = (z.re - k * LN2_HI) - k * LN2_LO;
        Self::normalized(Complex64::from_polar(r.exp(), z.im), k as i64)
    }

    /// Principal logarithm: (ln|z|, arg z).
    pub fn ln(&self) -> Complex64 {
        Complex64::new(self.log_magnitude(), self.phase())
    }

    pub fn log_magnitude(&self) -> f64 {
        if self.is_zero() {
            return f64::NEG_INFINITY;
        }
        // 2|m| lies in [1, 2√2), so its log is small and exactly zero for ONE
        let k = (self.exponent - 1) as f64;
        (2.0 * self.mantissa.norm()).ln() + k * LN2_HI + k * LN2_LO
    }

    pub fn log10_magnitude(&self) -> f64 {
        self.log_magnitude() / std::f64::consts::LN_10
    }

    /// Argument in (−π, π]; zero maps to 0.
    pub fn phase(&self) -> f64 {
        if self.is_zero() {
            return 0.0;
        }
        let p = self.mantissa.im.atan2(self.mantissa.re);
        if p == -PI {
            PI
        } else {
            p
        }
    }

    pub fn is_zero(&self) -> bool {
        self.mantissa.re == 0.0 && self.mantissa.im == 0.0
    }

    pub fn is_finite(&self) -> bool {
        self.mantissa.re.is_finite() && self.mantissa.im.is_finite()
    }

    /// Plain complex view; underflows to zero or overflows to infinity when
    /// the magnitude is outside the `f64` range.
    pub fn to_complex(&self) -> Complex64 {
        ldexp_complex(self.mantissa, self.exponent)
    }

    /// `self / exp(reference_log)` as a plain complex number.
    pub fn descaled(&self, reference_log: f64) -> Complex64 {
        (*self * Self::exp(Complex64::new(-reference_log, 0.0))).to_complex()
    }

    /// `z * exp(reference_log)`, the inverse of [`descaled`](Self::descaled).
    pub fn rescaled(z: Complex64, reference_log: f64) -> Self {
        Self::from_complex(z) * Self::exp(Complex64::new(reference_log, 0.0))
    }

    pub fn real_part(&self) -> Self {
        Self::normalized(Complex64::new(self.mantissa.re, 0.0), self.exponent)
    }

    pub fn imag_part(&self) -> Self {
        Self::normalized(Complex64::new(self.mantissa.im, 0.0), self.exponent)
    }

    /// Sign of the real part: −1, 0 or +1.
    pub fn real_sign(&self) -> f64 {
        if self.mantissa.re == 0.0 {
            0.0
        } else {
            self.mantissa.re.signum()
        }
    }

    pub fn conj(&self) -> Self {
        Self {
            mantissa: self.mantissa.conj(),
            exponent: self.exponent,
        }
    }

    pub fn recip(&self) -> Self {
        Self::ONE / *self
    }

    pub fn abs(&self) -> Self {
        Self::normalized(Complex64::new(self.mantissa.norm(), 0.0), self.exponent)
    }

    pub fn scale(&self, factor: f64) -> Self {
        Self::normalized(self.mantissa * factor, self.exponent)
    }
}

impl From<Complex64> for LogScaledComplex {
    fn from(z: Complex64) -> Self {
        Self::from_complex(z)
    }
}

impl From<f64> for LogScaledComplex {
    fn from(x: f64) -> Self {
        Self::from_real(x)
    }
}

impl Mul for LogScaledComplex {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Self::normalized(self.mantissa * rhs.mantissa, self.exponent + rhs.exponent)
    }
}

impl Mul<Complex64> for LogScaledComplex {
    type Output = Self;
    fn mul(self, rhs: Complex64) -> Self {
        self * Self::from_complex(rhs)
    }
}

impl Div for LogScaledComplex {
    type Output = Self;
    fn div(self, rhs: Self) -> Self {
        Self::normalized(self.mantissa / rhs.mantissa, self.exponent - rhs.exponent)
    }
}

impl Div<Complex64> for LogScaledComplex {
    type Output = Self;
    fn div(self, rhs: Complex64) -> Self {
        self / Self::from_complex(rhs)
    }
}

impl Add for LogScaledComplex {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        if self.is_zero() {
            return rhs;
        }
        if rhs.is_zero() {
            return self;
        }
        let (big, small) = if self.exponent >= rhs.exponent {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let shifted = ldexp_complex(small.mantissa, small.exponent - big.exponent);
        Self::normalized(big.mantissa + shifted, big.exponent)
    }
}

impl Neg for LogScaledComplex {
    type Output = Self;
    fn neg(self) -> Self {
        Self {
            mantissa: -self.mantissa,
            exponent: self.exponent,
        }
    }
}

impl Sub for LogScaledComplex {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}
