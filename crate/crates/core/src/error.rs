//! Crate-wide error type.

use num_complex::Complex64;

/// Errors raised by the analysis, design, and simulation layers.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    /// Root finding requested on a constant or zero polynomial.
    #[error("no roots defined: polynomial degree must be at least 1")]
    NoRootsDefined,

    /// Hurwitz classification of the zero polynomial or a constant.
    #[error("Hurwitz test undefined: polynomial degree must be at least 1")]
    HurwitzUndefined,

    /// Transfer function constructed with a zero denominator.
    #[error("denominator is the zero polynomial")]
    ZeroDenominator,

    /// Evaluation requested at (or numerically too close to) a pole.
    #[error("pole at evaluation point s = {0}")]
    PoleAtEvaluation(Complex64),

    /// Division by a transfer function with zero numerator.
    #[error("division by a zero transfer function")]
    DivisionByZeroTf,

    /// Frequency response requested at a frequency sitting on a pole.
    #[error("pole on the imaginary axis within tolerance of omega = {0}")]
    PoleOnAxis(f64),

    /// State-space realization of an improper transfer function.
    #[error("not realizable as proper state space: deg(num) = {num_degree} > deg(den) = {den_degree}")]
    NotRealizable { num_degree: usize, den_degree: usize },

    /// Two-way coding matrix violating one of the validity conditions.
    #[error("invalid two-way coding: {0}")]
    InvalidCoding(String),

    /// Catalog parameter outside its admissible domain.
    #[error("coding parameter out of domain: {0}")]
    CodingParameter(String),

    /// Coding design requested with F2 = 0, which leaves c undefined.
    #[error("c undefined: zero-placing gain F2 must be nonzero")]
    ZeroPlacerGainZero,

    /// Coding design requested with F1 = F2, which makes ad vanish.
    #[error("ad would vanish: F1 = {0} must differ from F2")]
    CoincidentGains(f64),

    /// A static output feedback gain that fails the Hurwitz certificate.
    #[error("gain not stabilizing: {role} = {gain}")]
    GainNotStabilizing { role: &'static str, gain: f64 },

    /// Operation requiring coprime numerator and denominator.
    #[error("plant numerator and denominator must be coprime")]
    NotCoprime,

    /// Attack synthesis found no zero (forward) or pole (feedback) to target.
    #[error("no admissible mode: {0}")]
    NoAdmissibleMode(String),

    /// Attack mode coincides with a pole of the injection channel.
    #[error("resonant injection: mode {0} coincides with a channel pole")]
    ResonantInjection(Complex64),

    /// Residual detector given an unstable nominal model.
    #[error("nominal model is unstable")]
    UnstableNominal,

    /// Plant with direct feedthrough cannot be wired into the loop.
    #[error("algebraic loop through plant unsupported: plant must be strictly proper")]
    PlantNotStrictlyProper,

    /// Static interconnection equations are singular.
    #[error("ill-posed interconnection: 1 + c*D_K = {0}")]
    IllPosed(f64),

    /// Scenario field violating an invariant (non-positive dt, bad x0, ...).
    #[error("invalid scenario: {0}")]
    InvalidScenario(String),

    /// Operation requiring a stable closed loop.
    #[error("unstable closed loop: {0}")]
    UnstableLoop(String),

    /// Gain search exhausted the grid without a stabilizing hit.
    #[error("no stabilizing static gain found on grid")]
    NoStabilizingGain,

    /// Post-condition check of a design failed (should not happen for valid inputs).
    #[error("design certification failed: {0}")]
    DesignCertificationFailed(String),
}

pub type Result<T> = std::result::Result<T, Error>;
