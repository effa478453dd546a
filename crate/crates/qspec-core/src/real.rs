//! Scalar math shim so the same call sites compile under `std` and `no_std`.
//!
//! Under `std` the intrinsics-backed inherent methods are used; without it we
//! fall back to `libm`. `lgamma` has no stable inherent counterpart and always
//! goes through `libm`.

#![allow(dead_code)]

macro_rules! shim1 {
    ($name:ident, $libm:ident) => {
        #[cfg(feature = "std")]
        #[inline(always)]
        pub(crate) fn $name(x: f64) -> f64 {
            x.$name()
        }
        #[cfg(not(feature = "std"))]
        #[inline(always)]
        pub(crate) fn $name(x: f64) -> f64 {
            libm::$libm(x)
        }
    };
}

shim1!(sqrt, sqrt);
shim1!(cbrt, cbrt);
shim1!(abs, fabs);
shim1!(sin, sin);
shim1!(cos, cos);
shim1!(tan, tan);
shim1!(exp, exp);
shim1!(ln, log);
shim1!(floor, floor);
shim1!(ceil, ceil);
shim1!(round, round);

#[cfg(feature = "std")]
#[inline(always)]
pub(crate) fn hypot(x: f64, y: f64) -> f64 {
    x.hypot(y)
}
#[cfg(not(feature = "std"))]
#[inline(always)]
pub(crate) fn hypot(x: f64, y: f64) -> f64 {
    libm::hypot(x, y)
}

#[cfg(feature = "std")]
#[inline(always)]
pub(crate) fn atan2(y: f64, x: f64) -> f64 {
    y.atan2(x)
}
#[cfg(not(feature = "std"))]
#[inline(always)]
pub(crate) fn atan2(y: f64, x: f64) -> f64 {
    libm::atan2(y, x)
}

#[cfg(feature = "std")]
#[inline(always)]
pub(crate) fn powi(x: f64, n: i32) -> f64 {
    x.powi(n)
}
#[cfg(not(feature = "std"))]
#[inline(always)]
pub(crate) fn powi(x: f64, n: i32) -> f64 {
    libm::pow(x, n as f64)
}

#[cfg(feature = "std")]
#[inline(always)]
pub(crate) fn powf(x: f64, y: f64) -> f64 {
    x.powf(y)
}
#[cfg(not(feature = "std"))]
#[inline(always)]
pub(crate) fn powf(x: f64, y: f64) -> f64 {
    libm::pow(x, y)
}

/// Natural log of the Gamma function (Beta-weight normalizations).
#[inline(always)]
pub(crate) fn lgamma(x: f64) -> f64 {
    libm::lgamma(x)
}

/// ln B(a, b) = lnΓ(a) + lnΓ(b) − lnΓ(a+b).
#[inline(always)]
pub(crate) fn ln_beta(a: f64, b: f64) -> f64 {
    lgamma(a) + lgamma(b) - lgamma(a + b)
}
