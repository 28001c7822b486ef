//! Rational transfer functions and state-space realizations.
//!
//! Transfer functions are stored unreduced: pole/zero cancellation is an
//! explicit, reported operation, never a silent side effect. Cancelling an
//! unstable pair hides internal instability, so [`RationalTf::reduce`] flags
//! every cancelled pair with nonnegative real part.

use nalgebra::{DMatrix, DVector, RowDVector};
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::poly::Polynomial;

/// Default tolerance for pole/zero cancellation in [`RationalTf::reduce`].
pub const REDUCE_TOL: f64 = 1e-8;

/// Relative margin used to reject evaluation at (numerical) poles.
pub const POLE_EVAL_MARGIN: f64 = 1e-12;

/// Ratio of two real polynomials `num(s) / den(s)`.
#[derive(Clone, Debug, PartialEq)]
pub struct RationalTf {
    num: Polynomial,
    den: Polynomial,
}

impl RationalTf {
    pub fn new(num: Polynomial, den: Polynomial) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Self { num, den })
    }

    /// Convenience constructor from ascending coefficient slices.
    pub fn from_coeffs(num: &[f64], den: &[f64]) -> Result<Self> {
        Self::new(Polynomial::new(num.to_vec()), Polynomial::new(den.to_vec()))
    }

    pub fn constant(k: f64) -> Self {
        Self {
            num: Polynomial::constant(k),
            den: Polynomial::one(),
        }
    }

    pub fn num(&self) -> &Polynomial {
        &self.num
    }

    pub fn den(&self) -> &Polynomial {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// `num(s0) / den(s0)`, rejecting points too close to a pole.
    pub fn eval(&self, s0: Complex64) -> Result<Complex64> {
        let den_val = self.den.eval(s0);
        let scale = self.den.eval_scale(s0).max(1.0);
        if den_val.norm() <= POLE_EVAL_MARGIN * scale {
            return Err(Error::PoleAtEvaluation(s0));
        }
        Ok(self.num.eval(s0) / den_val)
    }

    pub fn try_div(&self, rhs: &RationalTf) -> Result<RationalTf> {
        if rhs.num.is_zero() {
            return Err(Error::DivisionByZeroTf);
        }
        RationalTf::new(&self.num * &rhs.den, &self.den * &rhs.num)
    }

    /// Cancels numerator/denominator root pairs closer than `tol` and reports
    /// every cancelled pair. Pairs with nonnegative real part are flagged: a
    /// cancellation between an unstable pole and a nonminimum-phase zero must
    /// never pass silently.
    pub fn reduce(&self, tol: f64) -> (RationalTf, ReduceReport) {
        let mut report = ReduceReport::default();
        if self.num.is_zero() || self.num.is_constant() || self.den.is_constant() {
            return (self.clone(), report);
        }
        let mut zeros = self.num.roots().expect("degree >= 1");
        let mut poles = self.den.roots().expect("degree >= 1");

        loop {
            let mut best: Option<(usize, usize, f64)> = None;
            for (i, z) in zeros.iter().enumerate() {
                for (j, q) in poles.iter().enumerate() {
                    let d = (z - q).norm();
                    if d < tol && best.map_or(true, |(_, _, bd)| d < bd) {
                        best = Some((i, j, d));
                    }
                }
            }
            match best {
                Some((i, j, _)) => {
                    let zero = zeros.remove(i);
                    let pole = poles.remove(j);
                    let unstable = 0.5 * (zero.re + pole.re) >= 0.0;
                    report.cancelled.push(CancelledPair {
                        zero,
                        pole,
                        unstable,
                    });
                }
                None => break,
            }
        }

        if report.cancelled.is_empty() {
            return (self.clone(), report);
        }
        let reduced = RationalTf {
            num: Polynomial::from_roots(&zeros, self.num.leading()),
            den: Polynomial::from_roots(&poles, self.den.leading()),
        };
        (reduced, report)
    }

    /// Stability, minimum-phase, properness, and relative-degree report.
    /// Assumes the representation is already coprime within tolerance.
    pub fn classify(&self) -> Classification {
        let stable = self.den.is_constant() || self.den.is_hurwitz().expect("degree >= 1");
        let minimum_phase =
            self.num.is_constant() || self.num.is_hurwitz().expect("degree >= 1");
        let proper = self.num.degree() <= self.den.degree();
        Classification {
            stable,
            minimum_phase,
            proper,
            relative_degree: self.den.degree() as i64 - self.num.degree() as i64,
        }
    }

    /// Controllable canonical realization. Requires a proper (and coprime)
    /// transfer function; `D` is the high-frequency gain.
    pub fn realize(&self) -> Result<StateSpace> {
        let n = self.den.degree();
        let m = self.num.degree();
        if m > n {
            return Err(Error::NotRealizable {
                num_degree: m,
                den_degree: n,
            });
        }
        let lead = self.den.leading();
        let den_monic = self.den.scale(1.0 / lead);
        let num_scaled = self.num.scale(1.0 / lead);

        if n == 0 {
            return Ok(StateSpace {
                a: DMatrix::zeros(0, 0),
                b: DVector::zeros(0),
                c: RowDVector::zeros(0),
                d: num_scaled.coeffs()[0],
            });
        }

        let d = if m == n { num_scaled.coeffs()[n] } else { 0.0 };
        // Residual numerator after removing the feedthrough: num - d * den.
        let strictly = &num_scaled - &den_monic.scale(d);

        let a = DMatrix::from_fn(n, n, |i, j| {
            if i == n - 1 {
                -den_monic.coeffs()[j]
            } else if j == i + 1 {
                1.0
            } else {
                0.0
            }
        });
        let mut b = DVector::zeros(n);
        b[n - 1] = 1.0;
        let c = RowDVector::from_fn(n, |_, j| {
            strictly.coeffs().get(j).copied().unwrap_or(0.0)
        });
        Ok(StateSpace { a, b, c, d })
    }

    /// `g(j omega)` per requested frequency. Errors if any pole sits within
    /// `1e-9` of a requested point on the imaginary axis.
    pub fn freq_response(&self, omegas: &[f64]) -> Result<Vec<Complex64>> {
        let poles = if self.den.is_constant() {
            Vec::new()
        } else {
            self.den.roots().expect("degree >= 1")
        };
        let mut out = Vec::with_capacity(omegas.len());
        for &omega in omegas {
            let s0 = Complex64::new(0.0, omega);
            if poles.iter().any(|p| (p - s0).norm() < 1e-9) {
                return Err(Error::PoleOnAxis(omega));
            }
            out.push(self.num.eval(s0) / self.den.eval(s0));
        }
        Ok(out)
    }
}

impl std::ops::Add for &RationalTf {
    type Output = RationalTf;
    fn add(self, rhs: &RationalTf) -> RationalTf {
        RationalTf {
            num: &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            den: &self.den * &rhs.den,
        }
    }
}

impl std::ops::Sub for &RationalTf {
    type Output = RationalTf;
    fn sub(self, rhs: &RationalTf) -> RationalTf {
        RationalTf {
            num: &(&self.num * &rhs.den) - &(&rhs.num * &self.den),
            den: &self.den * &rhs.den,
        }
    }
}

impl std::ops::Mul for &RationalTf {
    type Output = RationalTf;
    fn mul(self, rhs: &RationalTf) -> RationalTf {
        RationalTf {
            num: &self.num * &rhs.num,
            den: &self.den * &rhs.den,
        }
    }
}

impl std::fmt::Display for RationalTf {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}) / ({})", self.num, self.den)
    }
}

/// Result of [`RationalTf::classify`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Classification {
    pub stable: bool,
    pub minimum_phase: bool,
    pub proper: bool,
    pub relative_degree: i64,
}

/// One cancelled pole/zero pair from [`RationalTf::reduce`].
#[derive(Clone, Copy, Debug)]
pub struct CancelledPair {
    pub zero: Complex64,
    pub pole: Complex64,
    /// UNSTABLE_CANCELLATION: the pair sits in the closed right half-plane.
    pub unstable: bool,
}

/// Cancellation report from [`RationalTf::reduce`].
#[derive(Clone, Debug, Default)]
pub struct ReduceReport {
    pub cancelled: Vec<CancelledPair>,
}

impl ReduceReport {
    pub fn has_unstable_cancellation(&self) -> bool {
        self.cancelled.iter().any(|pair| pair.unstable)
    }
}

/// SISO state-space model `x' = A x + B u`, `y = C x + D u`.
#[derive(Clone, Debug, PartialEq)]
pub struct StateSpace {
    pub a: DMatrix<f64>,
    pub b: DVector<f64>,
    pub c: RowDVector<f64>,
    pub d: f64,
}

impl StateSpace {
    pub fn order(&self) -> usize {
        self.a.nrows()
    }

    pub fn is_strictly_proper(&self) -> bool {
        self.d == 0.0
    }

    /// Resolvent evaluation `C (s I - A)^{-1} B + D` through a complex LU solve.
    pub fn eval(&self, s0: Complex64) -> Complex64 {
        let n = self.order();
        if n == 0 {
            return Complex64::new(self.d, 0.0);
        }
        let mut m = DMatrix::<Complex64>::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                m[(i, j)] = Complex64::new(-self.a[(i, j)], 0.0);
            }
            m[(i, i)] += s0;
        }
        let rhs = DVector::<Complex64>::from_fn(n, |i, _| Complex64::new(self.b[i], 0.0));
        let x = m.lu().solve(&rhs).expect("resolvent is nonsingular off the spectrum");
        let mut acc = Complex64::new(self.d, 0.0);
        for i in 0..n {
            acc += Complex64::new(self.c[i], 0.0) * x[i];
        }
        acc
    }
}
