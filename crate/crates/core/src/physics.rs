//! Electromagnetic quantities used by the radargram simulator.
//!
//! Everything here is a pure function over immutable values and is safe to
//! call from any number of threads.

use thiserror::Error;

/// Vacuum permittivity ε₀ in farads per meter.
pub const VACUUM_PERMITTIVITY: f64 = 8.854_187_812_8e-12;

/// Speed of light in vacuum, expressed in m/ns (the unit traces are timed in).
pub const SPEED_OF_LIGHT_M_PER_NS: f64 = 0.299_792_458;

#[derive(Debug, Error, PartialEq)]
pub enum PhysicsError {
    #[error("stored-energy permittivity must be positive, got {0}")]
    NonPositiveStoredPermittivity(f64),
    #[error("dielectric-loss permittivity must be non-negative, got {0}")]
    NegativeLossPermittivity(f64),
    #[error("absolute permittivity must be positive, got {0}")]
    NonPositivePermittivity(f64),
    #[error("relative permittivity must be positive, got {0}")]
    NonPositiveKappa(f64),
    #[error("two-way travel time must be non-negative, got {0}")]
    NegativeTravelTime(f64),
    #[error("wave velocity must be positive, got {0}")]
    NonPositiveVelocity(f64),
    #[error("depth must be non-negative, got {0}")]
    NegativeDepth(f64),
    #[error("material `{name}`: {reason}")]
    InvalidMaterial { name: String, reason: String },
}

/// Complex permittivity split into stored-energy and loss components.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Permittivity {
    eps_store: f64,
    eps_loss: f64,
}

impl Permittivity {
    pub fn new(eps_store: f64, eps_loss: f64) -> Result<Self, PhysicsError> {
        if !(eps_store > 0.0) {
            return Err(PhysicsError::NonPositiveStoredPermittivity(eps_store));
        }
        if !(eps_loss >= 0.0) {
            return Err(PhysicsError::NegativeLossPermittivity(eps_loss));
        }
        Ok(Self { eps_store, eps_loss })
    }

    pub fn eps_store(&self) -> f64 {
        self.eps_store
    }

    pub fn eps_loss(&self) -> f64 {
        self.eps_loss
    }
}

/// A complex number; only what the permittivity algebra needs.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Complex {
    pub re: f64,
    pub im: f64,
}

impl Complex {
    pub fn magnitude(&self) -> f64 {
        self.re.hypot(self.im)
    }
}

/// ε = ε′ − i·ε″.
pub fn complex_permittivity(p: Permittivity) -> Complex {
    Complex {
        re: p.eps_store,
        im: -p.eps_loss,
    }
}

/// κ = ε / ε₀, the dielectric constant.
pub fn relative_permittivity(eps_abs: f64) -> Result<f64, PhysicsError> {
    if !(eps_abs > 0.0) {
        return Err(PhysicsError::NonPositivePermittivity(eps_abs));
    }
    Ok(eps_abs / VACUUM_PERMITTIVITY)
}

/// R = (√κ₁ − √κ₂) / (√κ₁ + √κ₂), the amplitude reflected at a boundary.
pub fn reflection_coefficient(kappa1: f64, kappa2: f64) -> Result<f64, PhysicsError> {
    if !(kappa1 > 0.0) {
        return Err(PhysicsError::NonPositiveKappa(kappa1));
    }
    if !(kappa2 > 0.0) {
        return Err(PhysicsError::NonPositiveKappa(kappa2));
    }
    let (a, b) = (kappa1.sqrt(), kappa2.sqrt());
    Ok((a - b) / (a + b))
}

/// d = v·t/2 — depth from two-way travel time (v in m/ns, t in ns).
pub fn depth_from_twt(velocity: f64, twt: f64) -> Result<f64, PhysicsError> {
    if !(velocity > 0.0) {
        return Err(PhysicsError::NonPositiveVelocity(velocity));
    }
    if !(twt >= 0.0) {
        return Err(PhysicsError::NegativeTravelTime(twt));
    }
    Ok(velocity * twt / 2.0)
}

/// t = 2d/v — two-way travel time from depth (inverse of [`depth_from_twt`]).
pub fn twt_from_depth(velocity: f64, depth: f64) -> Result<f64, PhysicsError> {
    if !(velocity > 0.0) {
        return Err(PhysicsError::NonPositiveVelocity(velocity));
    }
    if !(depth >= 0.0) {
        return Err(PhysicsError::NegativeDepth(depth));
    }
    Ok(2.0 * depth / velocity)
}

/// A named subsurface material: dielectric constant, wave velocity, and a
/// scalar loss exponent controlling signal damping.
///
/// κ and velocity are stored independently (real soils deviate from the
/// lossless coupling); [`Material::validate`] checks they agree within 5%.
#[derive(Debug, Clone, PartialEq)]
pub struct Material {
    pub name: String,
    /// Relative permittivity, dimensionless, ≥ 1.
    pub kappa: f64,
    /// Wave travel velocity in m/ns, in (0, c].
    pub velocity: f64,
    /// Loss exponent (per ns of two-way travel), ≥ 0.
    pub loss_tangent: f64,
}

impl Material {
    pub fn new(
        name: impl Into<String>,
        kappa: f64,
        velocity: f64,
        loss_tangent: f64,
    ) -> Result<Self, PhysicsError> {
        let name = name.into();
        let fail = |reason: String| PhysicsError::InvalidMaterial {
            name: name.clone(),
            reason,
        };
        if !(kappa >= 1.0) {
            return Err(fail(format!("kappa must be >= 1, got {kappa}")));
        }
        if !(velocity > 0.0 && velocity <= SPEED_OF_LIGHT_M_PER_NS + 1e-12) {
            return Err(fail(format!(
                "velocity must be in (0, {SPEED_OF_LIGHT_M_PER_NS}] m/ns, got {velocity}"
            )));
        }
        if !(loss_tangent >= 0.0) {
            return Err(fail(format!("loss_tangent must be >= 0, got {loss_tangent}")));
        }
        Ok(Self {
            name,
            kappa,
            velocity,
            loss_tangent,
        })
    }

    /// Velocity implied by κ alone: c/√κ.
    pub fn velocity_from_kappa(&self) -> f64 {
        SPEED_OF_LIGHT_M_PER_NS / self.kappa.sqrt()
    }

    /// Checks the stored velocity against c/√κ, tolerance 5% relative.
    pub fn validate(&self) -> Result<(), PhysicsError> {
        let expected = self.velocity_from_kappa();
        let rel = (self.velocity - expected).abs() / expected;
        if rel > 0.05 {
            return Err(PhysicsError::InvalidMaterial {
                name: self.name.clone(),
                reason: format!(
                    "velocity {} m/ns is {:.1}% off c/sqrt(kappa) = {expected:.4} m/ns",
                    self.velocity,
                    rel * 100.0
                ),
            });
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol
    }

    // -- complex_permittivity -------------------------------------------------

    #[test]
    fn complex_permittivity_zero_loss() {
        let p = Permittivity::new(3.0, 0.0).unwrap();
        let c = complex_permittivity(p);
        assert_eq!(c.re, 3.0);
        assert_eq!(c.im, 0.0);
    }

    #[test]
    fn complex_permittivity_lossy() {
        let p = Permittivity::new(80.0, 10.0).unwrap();
        let c = complex_permittivity(p);
        assert_eq!(c.re, 80.0);
        assert_eq!(c.im, -10.0);
        // |eps| = sqrt(80^2 + 10^2)
        assert!(close(c.magnitude(), (80.0f64 * 80.0 + 10.0 * 10.0).sqrt(), 1e-12));
        assert!(close(c.magnitude(), 80.622_577_482_985_49, 1e-9));
    }

    #[test]
    fn permittivity_rejects_bad_components() {
        assert!(Permittivity::new(0.0, 0.0).is_err());
        assert!(Permittivity::new(-1.0, 0.0).is_err());
        assert!(Permittivity::new(1.0, -0.1).is_err());
        assert!(Permittivity::new(1.0, f64::NAN).is_err());
    }

    // -- relative_permittivity ------------------------------------------------

    #[test]
    fn relative_permittivity_vacuum_is_one() {
        assert!(close(relative_permittivity(VACUUM_PERMITTIVITY).unwrap(), 1.0, 1e-15));
    }

    #[test]
    fn relative_permittivity_ratio_identity() {
        assert!(close(
            relative_permittivity(3.0 * VACUUM_PERMITTIVITY).unwrap(),
            3.0,
            1e-12
        ));
    }

    #[test]
    fn relative_permittivity_hand_division() {
        // 4.4270939064e-11 / 8.8541878128e-12 = 5.0
        assert!(close(relative_permittivity(4.427_093_906_4e-11).unwrap(), 5.0, 1e-10));
    }

    #[test]
    fn relative_permittivity_rejects_nonpositive() {
        assert_eq!(
            relative_permittivity(0.0),
            Err(PhysicsError::NonPositivePermittivity(0.0))
        );
        assert!(relative_permittivity(-1.0).is_err());
    }

    // -- reflection_coefficient -----------------------------------------------

    #[test]
    fn reflection_equal_media_is_zero() {
        assert_eq!(reflection_coefficient(4.0, 4.0).unwrap(), 0.0);
    }

    #[test]
    fn reflection_hand_value() {
        // kappa 4 -> 1: (2 - 1) / (2 + 1) = 1/3
        assert!(close(reflection_coefficient(4.0, 1.0).unwrap(), 1.0 / 3.0, 1e-15));
        assert!(close(reflection_coefficient(1.0, 4.0).unwrap(), -1.0 / 3.0, 1e-15));
    }

    #[test]
    fn reflection_rejects_nonpositive() {
        assert!(reflection_coefficient(0.0, 1.0).is_err());
        assert!(reflection_coefficient(1.0, -2.0).is_err());
    }

    #[test]
    fn reflection_antisymmetry_and_bound() {
        let kappas = [1.0, 1.5, 2.0, 4.0, 9.0, 25.0, 81.0];
        for &a in &kappas {
            for &b in &kappas {
                let r = reflection_coefficient(a, b).unwrap();
                let rs = reflection_coefficient(b, a).unwrap();
                assert!(close(r, -rs, 1e-15));
                assert!(r.abs() <= 1.0);
                if a != b {
                    assert!(r.abs() < 1.0);
                    assert!(r != 0.0);
                }
            }
        }
    }

    // -- depth / travel time --------------------------------------------------

    #[test]
    fn depth_hand_values() {
        assert!(close(depth_from_twt(0.1, 20.0).unwrap(), 1.0, 1e-15));
        assert_eq!(depth_from_twt(0.17, 0.0).unwrap(), 0.0);
        // 6 m lies inside the sensor's 5-10 m penetration band.
        let d = depth_from_twt(0.12, 100.0).unwrap();
        assert!(close(d, 6.0, 1e-12));
        assert!((5.0..=10.0).contains(&d));
    }

    #[test]
    fn depth_is_linear_in_time() {
        let v = 0.123;
        let d1 = depth_from_twt(v, 7.0).unwrap();
        let d3 = depth_from_twt(v, 21.0).unwrap();
        assert!(close(3.0 * d1, d3, 1e-12));
    }

    #[test]
    fn twt_hand_values() {
        assert!(close(twt_from_depth(0.1, 1.0).unwrap(), 20.0, 1e-15));
        assert_eq!(twt_from_depth(0.2, 0.0).unwrap(), 0.0);
    }

    #[test]
    fn depth_twt_round_trip() {
        for &v in &[0.05, 0.1, 0.2998] {
            for &d in &[0.01, 1.0, 7.5, 123.0] {
                let t = twt_from_depth(v, d).unwrap();
                let back = depth_from_twt(v, t).unwrap();
                assert!((back - d).abs() / d < 1e-12);
            }
        }
    }

    #[test]
    fn negative_time_and_velocity_rejected() {
        assert!(depth_from_twt(0.1, -1.0).is_err());
        assert!(depth_from_twt(0.0, 1.0).is_err());
        assert!(twt_from_depth(-0.1, 1.0).is_err());
        assert!(twt_from_depth(0.1, -1.0).is_err());
    }

    // -- Material ---------------------------------------------------------

    #[test]
    fn material_validator_accepts_consistent_pairs() {
        let m = Material::new("dry sand", 4.0, 0.149, 0.003).unwrap();
        m.validate().unwrap();
    }

    #[test]
    fn material_validator_rejects_inconsistent_velocity() {
        let m = Material::new("odd", 4.0, 0.2, 0.0).unwrap();
        assert!(m.validate().is_err());
    }

    #[test]
    fn material_rejects_out_of_range() {
        assert!(Material::new("thin", 0.5, 0.1, 0.0).is_err());
        assert!(Material::new("fast", 4.0, 0.35, 0.0).is_err());
        assert!(Material::new("neg", 4.0, 0.1, -0.5).is_err());
    }
}
