//! Scalar math shims and small slice helpers.
//!
//! All transcendental functions go through `libm` so that the crate computes
//! identical bits with and without `std`. Nothing in the crate calls the
//! inherent `f64` float methods directly.

/// ln(2*pi), the constant in Gaussian log-densities.
pub const LN_2PI: f64 = 1.8378770664093453;

/// ln(2), the constant in the standard Laplace log-density.
pub const LN_2: f64 = core::f64::consts::LN_2;

#[inline]
pub fn exp(x: f64) -> f64 {
    libm::exp(x)
}

#[inline]
pub fn ln(x: f64) -> f64 {
    libm::log(x)
}

#[inline]
pub fn log1p(x: f64) -> f64 {
    libm::log1p(x)
}

#[inline]
pub fn sqrt(x: f64) -> f64 {
    libm::sqrt(x)
}

#[inline]
pub fn abs(x: f64) -> f64 {
    libm::fabs(x)
}

#[inline]
pub fn cos(x: f64) -> f64 {
    libm::cos(x)
}

#[inline]
pub fn tanh(x: f64) -> f64 {
    libm::tanh(x)
}

/// Numerically stable softplus ln(1 + e^x).
#[inline]
pub fn softplus(x: f64) -> f64 {
    if x > 0.0 { x + log1p(exp(-x)) } else { log1p(exp(x)) }
}

/// Numerically stable logistic function, the derivative of softplus.
#[inline]
pub fn sigmoid(x: f64) -> f64 {
    if x >= 0.0 {
        1.0 / (1.0 + exp(-x))
    } else {
        let e = exp(x);
        e / (1.0 + e)
    }
}

/// Stable log(sum(exp(xs))).
pub fn logsumexp(xs: &[f64]) -> f64 {
    let mut m = f64::NEG_INFINITY;
    for &x in xs {
        if x > m {
            m = x;
        }
    }
    if !m.is_finite() {
        return m;
    }
    let mut s = 0.0;
    for &x in xs {
        s += exp(x - m);
    }
    m + ln(s)
}

/// Dot product of two equally long slices.
#[inline]
pub fn dot(a: &[f64], b: &[f64]) -> f64 {
    debug_assert_eq!(a.len(), b.len());
    let mut s = 0.0;
    for i in 0..a.len() {
        s += a[i] * b[i];
    }
    s
}

/// Euclidean norm of a slice.
pub fn l2_norm(a: &[f64]) -> f64 {
    sqrt(dot(a, a))
}

/// Arithmetic mean; 0.0 for an empty slice.
pub fn mean(a: &[f64]) -> f64 {
    if a.is_empty() {
        return 0.0;
    }
    let mut s = 0.0;
    for &x in a {
        s += x;
    }
    s / a.len() as f64
}

/// Unbiased sample variance (n-1 denominator); 0.0 for fewer than two items.
pub fn sample_variance(a: &[f64]) -> f64 {
    if a.len() < 2 {
        return 0.0;
    }
    let m = mean(a);
    let mut s = 0.0;
    for &x in a {
        let d = x - m;
        s += d * d;
    }
    s / (a.len() - 1) as f64
}

/// True iff every entry is finite.
pub fn all_finite(a: &[f64]) -> bool {
    a.iter().all(|x| x.is_finite())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn softplus_matches_naive_form_in_safe_range() {
        for i in -40..40 {
            let x = i as f64 * 0.5;
            let naive = ln(1.0 + exp(x));
            assert!((softplus(x) - naive).abs() < 1e-12, "x={x}");
        }
    }

    #[test]
    fn softplus_is_stable_for_large_inputs() {
        assert!((softplus(800.0) - 800.0).abs() < 1e-12);
        assert_eq!(softplus(-800.0), 0.0);
        assert!(softplus(-50.0) > 0.0);
    }

    #[test]
    fn sigmoid_is_softplus_derivative() {
        let h = 1e-6;
        for i in -10..10 {
            let x = i as f64 * 0.7;
            let fd = (softplus(x + h) - softplus(x - h)) / (2.0 * h);
            assert!((sigmoid(x) - fd).abs() < 1e-8);
        }
    }

    #[test]
    fn logsumexp_matches_direct_sum() {
        let xs = [0.1, -2.0, 3.5];
        let direct = ln(exp(0.1) + exp(-2.0) + exp(3.5));
        assert!((logsumexp(&xs) - direct).abs() < 1e-12);
        // Huge values must not overflow.
        let big = [1000.0, 1000.0];
        assert!((logsumexp(&big) - (1000.0 + ln(2.0))).abs() < 1e-12);
    }

    #[test]
    fn variance_of_constant_is_zero() {
        assert_eq!(sample_variance(&[3.0, 3.0, 3.0]), 0.0);
        let v = sample_variance(&[1.0, 2.0, 3.0]);
        assert!((v - 1.0).abs() < 1e-15);
    }
}
