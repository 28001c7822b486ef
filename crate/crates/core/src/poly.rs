//! Real polynomial algebra with robust root finding and Hurwitz testing.
//!
//! Coefficients are stored in ascending degree: `coeffs[k]` multiplies `s^k`.
//! The zero polynomial is represented as the single coefficient `0`. Every
//! arithmetic operation re-normalizes, trimming leading coefficients that are
//! negligible relative to the largest one, so float cancellation cannot
//! silently inflate degrees.

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::{Error, Result};

/// Relative threshold below which a leading coefficient is trimmed.
pub const COEFF_TRIM_REL: f64 = 1e-12;

/// Residual tolerance for computed roots: `|p(root)| <= ROOT_RESIDUAL_TOL * max(1, max|coeff|)`.
pub const ROOT_RESIDUAL_TOL: f64 = 1e-8;

/// Default tolerance for root-distance coprimality checks.
pub const COPRIME_TOL: f64 = 1e-7;

/// Real polynomial in the Laplace variable `s`, ascending coefficients.
#[derive(Clone, Debug, PartialEq)]
pub struct Polynomial {
    coeffs: Vec<f64>,
}

impl Polynomial {
    /// Builds a polynomial from ascending coefficients, normalizing the
    /// representation. Panics on non-finite coefficients.
    pub fn new(coeffs: impl Into<Vec<f64>>) -> Self {
        let coeffs = coeffs.into();
        assert!(
            coeffs.iter().all(|c| c.is_finite()),
            "polynomial coefficients must be finite"
        );
        let mut p = Self { coeffs };
        p.normalize();
        p
    }

    pub fn zero() -> Self {
        Self { coeffs: vec![0.0] }
    }

    pub fn constant(c: f64) -> Self {
        Self::new(vec![c])
    }

    pub fn one() -> Self {
        Self::constant(1.0)
    }

    /// Monomial `s`.
    pub fn s() -> Self {
        Self::new(vec![0.0, 1.0])
    }

    /// Builds `leading * prod (s - r_i)` from a root list. Complex roots must
    /// appear in conjugate pairs (up to rounding); the construction runs in
    /// complex arithmetic and keeps the real parts.
    pub fn from_roots(roots: &[Complex64], leading: f64) -> Self {
        let mut acc = vec![Complex64::new(1.0, 0.0)];
        for r in roots {
            let mut next = vec![Complex64::new(0.0, 0.0); acc.len() + 1];
            for (k, a) in acc.iter().enumerate() {
                next[k] -= a * r;
                next[k + 1] += a;
            }
            acc = next;
        }
        let coeffs: Vec<f64> = acc.iter().map(|c| c.re * leading).collect();
        debug_assert!(
            acc.iter()
                .all(|c| c.im.abs() <= 1e-9 * (1.0 + c.re.abs())),
            "root list was not conjugate-symmetric"
        );
        Self::new(coeffs)
    }

    fn normalize(&mut self) {
        let max_abs = self.coeffs.iter().fold(0.0f64, |m, c| m.max(c.abs()));
        if max_abs == 0.0 {
            self.coeffs = vec![0.0];
            return;
        }
        while self.coeffs.len() > 1 {
            let last = *self.coeffs.last().unwrap();
            if last.abs() <= COEFF_TRIM_REL * max_abs {
                self.coeffs.pop();
            } else {
                break;
            }
        }
        if self.coeffs.len() == 1 && self.coeffs[0].abs() <= COEFF_TRIM_REL * max_abs {
            self.coeffs[0] = 0.0;
        }
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    /// Degree of the normalized polynomial; the zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0] == 0.0
    }

    pub fn is_constant(&self) -> bool {
        self.degree() == 0
    }

    pub fn leading(&self) -> f64 {
        *self.coeffs.last().unwrap()
    }

    pub fn scale(&self, k: f64) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * k).collect::<Vec<_>>())
    }

    pub fn derivative(&self) -> Self {
        if self.degree() == 0 {
            return Self::zero();
        }
        let coeffs: Vec<f64> = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c * k as f64)
            .collect();
        Self::new(coeffs)
    }

    /// Horner evaluation at a complex point.
    pub fn eval(&self, s0: Complex64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for c in self.coeffs.iter().rev() {
            acc = acc * s0 + c;
        }
        acc
    }

    pub fn eval_real(&self, x: f64) -> f64 {
        let mut acc = 0.0;
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Magnitude scale of a Horner evaluation, `sum |c_k| |s0|^k`. Used to turn
    /// absolute residuals into relative ones.
    pub fn eval_scale(&self, s0: Complex64) -> f64 {
        let m = s0.norm();
        let mut acc = 0.0;
        for c in self.coeffs.iter().rev() {
            acc = acc * m + c.abs();
        }
        acc
    }

    /// All `deg` complex roots with multiplicity, computed as eigenvalues of
    /// the balanced companion matrix and polished by guarded Newton steps.
    /// Complex roots of real polynomials are returned in conjugate pairs.
    pub fn roots(&self) -> Result<Vec<Complex64>> {
        if self.is_zero() || self.degree() == 0 {
            return Err(Error::NoRootsDefined);
        }
        let n = self.degree();
        let lead = self.leading();
        if n == 1 {
            return Ok(vec![Complex64::new(-self.coeffs[0] / lead, 0.0)]);
        }
        // Monic companion matrix with the coefficient column on the right.
        let monic: Vec<f64> = self.coeffs[..n].iter().map(|c| c / lead).collect();
        let mut companion = DMatrix::<f64>::from_fn(n, n, |i, j| {
            if j == n - 1 {
                -monic[i]
            } else if i == j + 1 {
                1.0
            } else {
                0.0
            }
        });
        balance_in_place(&mut companion);
        let eig = companion.complex_eigenvalues();

        let deriv = self.derivative();
        let mut roots: Vec<Complex64> = eig.iter().copied().collect();
        for r in &mut roots {
            if r.im == 0.0 {
                let mut x = r.re;
                for _ in 0..3 {
                    let fx = self.eval_real(x);
                    let dx = deriv.eval_real(x);
                    if dx == 0.0 {
                        break;
                    }
                    let next = x - fx / dx;
                    if self.eval_real(next).abs() < fx.abs() {
                        x = next;
                    } else {
                        break;
                    }
                }
                *r = Complex64::new(x, 0.0);
            } else {
                let mut z = *r;
                for _ in 0..3 {
                    let fz = self.eval(z);
                    let dz = deriv.eval(z);
                    if dz.norm() == 0.0 {
                        break;
                    }
                    let next = z - fz / dz;
                    if self.eval(next).norm() < fz.norm() {
                        z = next;
                    } else {
                        break;
                    }
                }
                *r = z;
            }
        }
        enforce_conjugate_pairs(&mut roots);
        roots.sort_by(|a, b| (a.re, a.im).partial_cmp(&(b.re, b.im)).unwrap());
        Ok(roots)
    }

    /// Routh-Hurwitz tabular criterion: true iff every root has negative real
    /// part. No root finding is involved. A zero first-column pivot is handled
    /// by the epsilon-substitution rule to complete the table, and any such
    /// degeneracy (or a full zero row) already rules Hurwitz out.
    pub fn is_hurwitz(&self) -> Result<bool> {
        let table = self.routh_first_column()?;
        Ok(!table.zero_row
            && table.epsilon_events == 0
            && table.first_column.iter().all(|&x| x > 0.0))
    }

    /// First column of the Routh table, sign-normalized so the leading
    /// coefficient is positive.
    pub fn routh_first_column(&self) -> Result<RouthTable> {
        if self.is_zero() || self.degree() == 0 {
            return Err(Error::HurwitzUndefined);
        }
        let n = self.degree();
        let mut desc: Vec<f64> = self.coeffs.iter().rev().copied().collect();
        if desc[0] < 0.0 {
            for c in &mut desc {
                *c = -*c;
            }
        }
        let width = n / 2 + 1;
        let mut prev = vec![0.0; width];
        let mut cur = vec![0.0; width];
        for (k, c) in desc.iter().enumerate() {
            if k % 2 == 0 {
                prev[k / 2] = *c;
            } else {
                cur[k / 2] = *c;
            }
        }

        let mut first_column = vec![prev[0], cur[0]];
        let mut epsilon_events = 0usize;
        let mut zero_row = false;

        for _ in 2..=n {
            let scale = cur.iter().fold(0.0f64, |m, x| m.max(x.abs()));
            if scale == 0.0 {
                // Full zero row: an even factor with symmetric root pairs.
                zero_row = true;
                break;
            }
            if cur[0].abs() <= 1e-13 * scale {
                cur[0] = 1e-30 * scale.max(1.0);
                epsilon_events += 1;
                *first_column.last_mut().unwrap() = cur[0];
            }
            let mut next = vec![0.0; width];
            for k in 0..width - 1 {
                next[k] = (cur[0] * prev[k + 1] - prev[0] * cur[k + 1]) / cur[0];
            }
            first_column.push(next[0]);
            prev = cur;
            cur = next;
        }

        Ok(RouthTable {
            first_column,
            epsilon_events,
            zero_row,
        })
    }

    /// True iff no root of `self` lies within `tol` of a root of `other`.
    /// Constants have no roots and are coprime to everything.
    pub fn coprime(&self, other: &Polynomial, tol: f64) -> bool {
        assert!(
            !self.is_zero() && !other.is_zero(),
            "coprimality requires nonzero polynomials"
        );
        if self.degree() == 0 || other.degree() == 0 {
            return true;
        }
        let ra = self.roots().expect("degree checked above");
        let rb = other.roots().expect("degree checked above");
        ra.iter()
            .all(|a| rb.iter().all(|b| (a - b).norm() > tol))
    }
}

/// Outcome of the Routh tabulation.
#[derive(Clone, Debug)]
pub struct RouthTable {
    /// First-column entries, from the `s^n` row down to `s^0`.
    pub first_column: Vec<f64>,
    /// Number of zero pivots replaced by the epsilon rule.
    pub epsilon_events: usize,
    /// A full row of zeros appeared (roots symmetric about the origin).
    pub zero_row: bool,
}

impl std::ops::Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = vec![0.0; len];
        for (k, c) in self.coeffs.iter().enumerate() {
            out[k] += c;
        }
        for (k, c) in rhs.coeffs.iter().enumerate() {
            out[k] += c;
        }
        Polynomial::new(out)
    }
}

impl std::ops::Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self + &rhs.scale(-1.0)
    }
}

impl std::ops::Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![0.0; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::new(out)
    }
}

impl std::ops::Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(-1.0)
    }
}

impl std::fmt::Display for Polynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if *c == 0.0 && self.degree() > 0 {
                continue;
            }
            let mag = c.abs();
            if first {
                if *c < 0.0 {
                    write!(f, "-")?;
                }
                first = false;
            } else if *c < 0.0 {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match k {
                0 => write!(f, "{mag}")?,
                1 => {
                    if mag != 1.0 {
                        write!(f, "{mag}")?;
                    }
                    write!(f, "s")?;
                }
                _ => {
                    if mag != 1.0 {
                        write!(f, "{mag}")?;
                    }
                    write!(f, "s^{k}")?;
                }
            }
        }
        Ok(())
    }
}

/// Parlett-Reinsch balancing: diagonal similarity scaling with radix-2 factors
/// so row and column norms roughly agree. Eigenvalues are unchanged.
fn balance_in_place(a: &mut DMatrix<f64>) {
    let n = a.nrows();
    let radix = 2.0f64;
    loop {
        let mut done = true;
        for i in 0..n {
            let mut c: f64 = (0..n).filter(|&j| j != i).map(|j| a[(j, i)].abs()).sum();
            let mut r: f64 = (0..n).filter(|&j| j != i).map(|j| a[(i, j)].abs()).sum();
            if c == 0.0 || r == 0.0 {
                continue;
            }
            let s = c + r;
            let mut factor = 1.0;
            while c < r / radix {
                c *= radix;
                r /= radix;
                factor *= radix;
            }
            while c >= r * radix {
                c /= radix;
                r *= radix;
                factor /= radix;
            }
            if c + r < 0.95 * s {
                done = false;
                for j in 0..n {
                    a[(i, j)] /= factor;
                }
                for j in 0..n {
                    a[(j, i)] *= factor;
                }
            }
        }
        if done {
            break;
        }
    }
}

/// Snaps near-conjugate eigenvalue pairs to exact conjugates.
fn enforce_conjugate_pairs(roots: &mut [Complex64]) {
    let n = roots.len();
    let mut used = vec![false; n];
    for i in 0..n {
        if used[i] || roots[i].im <= 0.0 {
            continue;
        }
        let target = roots[i].conj();
        let mut best: Option<(usize, f64)> = None;
        for (j, r) in roots.iter().enumerate() {
            if j == i || used[j] || r.im >= 0.0 {
                continue;
            }
            let d = (r - target).norm();
            if best.map_or(true, |(_, bd)| d < bd) {
                best = Some((j, d));
            }
        }
        if let Some((j, d)) = best {
            if d <= 1e-6 * (1.0 + target.norm()) {
                roots[j] = target;
                used[i] = true;
                used[j] = true;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::prelude::*;
    use rand_chacha::ChaCha8Rng;

    fn p(coeffs: &[f64]) -> Polynomial {
        Polynomial::new(coeffs.to_vec())
    }

    /// Independent root oracle: Durand-Kerner simultaneous iteration.
    fn durand_kerner(poly: &Polynomial) -> Vec<Complex64> {
        let n = poly.degree();
        let lead = poly.leading();
        let monic = poly.scale(1.0 / lead);
        let seed = Complex64::new(0.4, 0.9);
        let mut z: Vec<Complex64> = (0..n).map(|k| seed.powu(k as u32 + 1)).collect();
        for _ in 0..500 {
            let mut max_step = 0.0f64;
            for i in 0..n {
                let mut denom = Complex64::new(1.0, 0.0);
                for j in 0..n {
                    if j != i {
                        denom *= z[i] - z[j];
                    }
                }
                let step = monic.eval(z[i]) / denom;
                z[i] -= step;
                max_step = max_step.max(step.norm());
            }
            if max_step < 1e-14 {
                break;
            }
        }
        z
    }

    fn match_root_sets(a: &[Complex64], b: &[Complex64], tol: f64) -> bool {
        if a.len() != b.len() {
            return false;
        }
        let mut used = vec![false; b.len()];
        'outer: for x in a {
            for (j, y) in b.iter().enumerate() {
                if !used[j] && (x - y).norm() <= tol {
                    used[j] = true;
                    continue 'outer;
                }
            }
            return false;
        }
        true
    }

    #[test]
    fn add_examples() {
        assert_eq!(&p(&[1.0, 1.0]) + &Polynomial::zero(), p(&[1.0, 1.0]));
        let sum = &p(&[2.0, 3.0, 1.0]) + &p(&[-1.0, 1.0]);
        assert_eq!(sum, p(&[1.0, 4.0, 1.0]));
        for s0 in [
            Complex64::new(0.3, 1.1),
            Complex64::new(-2.0, 0.4),
            Complex64::new(1.7, -0.9),
        ] {
            let direct = p(&[2.0, 3.0, 1.0]).eval(s0) + p(&[-1.0, 1.0]).eval(s0);
            assert!((sum.eval(s0) - direct).norm() < 1e-12 * (1.0 + direct.norm()));
        }
        assert_eq!(&Polynomial::s() + &p(&[0.0, -1.0]), Polynomial::zero());
        assert!((&Polynomial::s() + &p(&[0.0, -1.0])).is_zero());
    }

    #[test]
    fn mul_examples() {
        assert_eq!(&p(&[1.0, 1.0]) * &p(&[2.0, 1.0]), p(&[2.0, 3.0, 1.0]));
        let q = p(&[0.5, -3.0, 2.0]);
        assert_eq!(&q * &Polynomial::one(), q);
        let prod = &p(&[-1.0, 1.0]) * &p(&[1.0, 4.0, 1.0]);
        assert_eq!(prod, p(&[-1.0, -3.0, 3.0, 1.0]));
        for s0 in [
            Complex64::new(0.2, 0.7),
            Complex64::new(-1.5, 2.0),
            Complex64::new(3.0, -0.1),
        ] {
            let direct = p(&[-1.0, 1.0]).eval(s0) * p(&[1.0, 4.0, 1.0]).eval(s0);
            assert!((prod.eval(s0) - direct).norm() < 1e-12 * (1.0 + direct.norm()));
        }
    }

    #[test]
    fn eval_examples() {
        assert_eq!(p(&[2.0, 3.0, 1.0]).eval(Complex64::new(-1.0, 0.0)).norm(), 0.0);
        assert_eq!(p(&[-1.0, 1.0]).eval(Complex64::new(1.0, 0.0)).norm(), 0.0);
        assert_eq!(
            p(&[1.0, 4.0, 1.0]).eval(Complex64::new(1.0, 0.0)),
            Complex64::new(6.0, 0.0)
        );
    }

    #[test]
    fn roots_examples() {
        let r = p(&[2.0, 3.0, 1.0]).roots().unwrap();
        assert!(match_root_sets(
            &r,
            &[Complex64::new(-1.0, 0.0), Complex64::new(-2.0, 0.0)],
            1e-9
        ));

        let r = p(&[3.0, 2.0, 1.0]).roots().unwrap();
        let rt2 = 2.0f64.sqrt();
        assert!(match_root_sets(
            &r,
            &[Complex64::new(-1.0, rt2), Complex64::new(-1.0, -rt2)],
            1e-9
        ));

        let r = p(&[-1.0, 1.0]).roots().unwrap();
        assert!(match_root_sets(&r, &[Complex64::new(1.0, 0.0)], 1e-12));

        assert_eq!(Polynomial::zero().roots(), Err(Error::NoRootsDefined));
        assert_eq!(Polynomial::constant(4.0).roots(), Err(Error::NoRootsDefined));
    }

    #[test]
    fn roots_conjugate_pairing_is_exact() {
        let r = p(&[10.0, 11.0, 4.0, 2.0, 1.0]).roots().unwrap();
        for x in &r {
            if x.im != 0.0 {
                assert!(r.iter().any(|y| *y == x.conj()));
            }
        }
    }

    #[test]
    fn hurwitz_examples() {
        assert!(p(&[1.0, 4.0, 1.0]).is_hurwitz().unwrap());
        assert!(!p(&[-3.0, 8.0, 1.0]).is_hurwitz().unwrap());
        assert!(p(&[1.0, 1.0]).is_hurwitz().unwrap());
        assert_eq!(Polynomial::zero().is_hurwitz(), Err(Error::HurwitzUndefined));
        assert_eq!(Polynomial::constant(2.0).is_hurwitz(), Err(Error::HurwitzUndefined));
    }

    #[test]
    fn hurwitz_zero_pivot_epsilon_rule() {
        // s^5 + 2s^4 + 2s^3 + 4s^2 + 11s + 10: the s^3 row starts with a zero
        // pivot; the epsilon limit makes the next entry large negative.
        let poly = p(&[10.0, 11.0, 4.0, 2.0, 2.0, 1.0]);
        let table = poly.routh_first_column().unwrap();
        assert_eq!(table.epsilon_events, 1);
        assert!(table.first_column.iter().any(|&x| x < 0.0));
        assert!(!poly.is_hurwitz().unwrap());
        // Sign check against actual roots.
        let max_re = poly
            .roots()
            .unwrap()
            .iter()
            .map(|r| r.re)
            .fold(f64::NEG_INFINITY, f64::max);
        assert!(max_re > 0.0);
    }

    #[test]
    fn hurwitz_zero_row() {
        // (s + 2)(s^2 + 4) has a symmetric pair on the imaginary axis.
        let poly = p(&[8.0, 4.0, 2.0, 1.0]);
        let table = poly.routh_first_column().unwrap();
        assert!(table.zero_row);
        assert!(!poly.is_hurwitz().unwrap());
    }

    #[test]
    fn hurwitz_agrees_with_root_signs() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let mut checked = 0;
        while checked < 200 {
            let deg = rng.random_range(1..=8);
            let coeffs: Vec<f64> = (0..=deg).map(|_| rng.random_range(-3.0..3.0)).collect();
            let poly = Polynomial::new(coeffs);
            if poly.degree() != deg {
                continue;
            }
            let max_re = poly
                .roots()
                .unwrap()
                .iter()
                .map(|r| r.re)
                .fold(f64::NEG_INFINITY, f64::max);
            if max_re.abs() < 1e-6 {
                continue;
            }
            assert_eq!(
                poly.is_hurwitz().unwrap(),
                max_re < 0.0,
                "disagreement for {poly} (max Re = {max_re})"
            );
            checked += 1;
        }
    }

    #[test]
    fn coprime_examples() {
        let p1 = p(&[-1.0, 1.0]);
        let q = p(&[2.0, 3.0, 1.0]);
        assert!(p1.coprime(&q, COPRIME_TOL));
        assert!(!p(&[1.0, 1.0]).coprime(&q, COPRIME_TOL));
        assert!(Polynomial::constant(1.0).coprime(&q, COPRIME_TOL));
    }

    #[test]
    fn wilkinson_stress_residual_bound() {
        let roots: Vec<Complex64> = (1..=10).map(|k| Complex64::new(k as f64, 0.0)).collect();
        let wilkinson = Polynomial::from_roots(&roots, 1.0);
        let computed = wilkinson.roots().unwrap();
        let coeff_norm = wilkinson
            .coeffs()
            .iter()
            .fold(0.0f64, |m, c| m.max(c.abs()));
        let bound = ROOT_RESIDUAL_TOL * coeff_norm.max(1.0);
        for r in &computed {
            let residual = wilkinson.eval(*r).norm();
            assert!(
                residual <= bound,
                "residual {residual} exceeds bound {bound} at root {r}"
            );
        }
        assert!(match_root_sets(&computed, &roots, 1e-4));
    }

    #[test]
    fn roots_match_durand_kerner_oracle() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..50 {
            let deg = rng.random_range(2..=6);
            let coeffs: Vec<f64> = (0..=deg).map(|_| rng.random_range(-2.0..2.0)).collect();
            let poly = Polynomial::new(coeffs);
            if poly.degree() < 2 {
                continue;
            }
            let ours = poly.roots().unwrap();
            let oracle = durand_kerner(&poly);
            assert!(
                match_root_sets(&ours, &oracle, 1e-5),
                "root mismatch for {poly}: {ours:?} vs {oracle:?}"
            );
        }
    }

    #[test]
    fn from_roots_round_trip() {
        let roots = [
            Complex64::new(-1.0, 0.0),
            Complex64::new(-2.0, 1.5),
            Complex64::new(-2.0, -1.5),
        ];
        let poly = Polynomial::from_roots(&roots, 2.0);
        assert!(match_root_sets(&poly.roots().unwrap(), &roots, 1e-9));
        assert!((poly.leading() - 2.0).abs() < 1e-12);
    }

    proptest! {
        #[test]
        fn mul_is_eval_homomorphism(
            a in proptest::collection::vec(-2.0f64..2.0, 1..=7),
            b in proptest::collection::vec(-2.0f64..2.0, 1..=7),
        ) {
            let pa = Polynomial::new(a);
            let pb = Polynomial::new(b);
            let prod = &pa * &pb;
            let points = [
                Complex64::new(0.3, 0.8), Complex64::new(-1.2, 0.5),
                Complex64::new(2.1, -1.0), Complex64::new(0.0, 1.6),
                Complex64::new(-0.7, -0.7), Complex64::new(1.0, 0.0),
                Complex64::new(-2.5, 1.9), Complex64::new(0.4, -2.2),
                Complex64::new(1.8, 1.8), Complex64::new(-0.1, 0.05),
            ];
            for s0 in points {
                let direct = pa.eval(s0) * pb.eval(s0);
                let through = prod.eval(s0);
                prop_assert!((through - direct).norm() <= 1e-10 * (1.0 + direct.norm()));
            }
        }

        #[test]
        fn add_then_sub_is_identity(
            a in proptest::collection::vec(-5.0f64..5.0, 1..=6),
            b in proptest::collection::vec(-5.0f64..5.0, 1..=6),
        ) {
            let pa = Polynomial::new(a);
            let pb = Polynomial::new(b);
            let back = &(&pa + &pb) - &pb;
            let s0 = Complex64::new(0.9, 0.4);
            prop_assert!((back.eval(s0) - pa.eval(s0)).norm() <= 1e-9 * (1.0 + pa.eval(s0).norm()));
        }
    }
}
