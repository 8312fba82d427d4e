//! Perron-vector ratios on G12 after eliminating the pendant and wᵢ
//! components from the eigenequations.

use serde::Serialize;

use super::{spectral_radius, AlphaValue};
use crate::error::{Error, Result};
use crate::families::FamilySpec;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RatioTerms {
    pub lambda: f64,
    /// aᵢ = (1−α)² mᵢ / (λ − α).
    pub a: [f64; 4],
    /// b = (1−α)² / (λ − 2α).
    pub b: f64,
    /// Perron components at u₁..u₄.
    pub x_u: [f64; 4],
    /// x_{u₁} / x_{u₂} read off the Perron vector.
    pub observed_ratio: f64,
    /// b / (λ − α(m₁+1) − a₁ − b).
    pub predicted_ratio: f64,
}

impl RatioTerms {
    pub fn ratio_error(&self) -> f64 {
        (self.observed_ratio - self.predicted_ratio).abs()
    }

    /// |observed / predicted − 1|. The predicted side divides by a small
    /// difference involving λ, so at large α only the relative error stays
    /// near machine precision.
    pub fn relative_ratio_error(&self) -> f64 {
        (self.observed_ratio / self.predicted_ratio - 1.0).abs()
    }
}

pub fn eigen_ratio_terms(spec: &FamilySpec, alpha: &AlphaValue) -> Result<RatioTerms> {
    let FamilySpec::G12(m) = *spec else {
        return Err(Error::Family(format!("{spec}: ratio terms are defined for g12 only")));
    };
    let g = spec.make()?;
    let r = spectral_radius(&g, alpha)?;
    let a = alpha.value();
    let lambda = r.lambda;
    if lambda <= 2.0 * a {
        return Err(Error::Invalid(format!("{spec}: λ = {lambda} does not exceed 2α")));
    }
    let q = (1.0 - a) * (1.0 - a);
    let a_terms = m.map(|mi| q * mi as f64 / (lambda - a));
    let b = q / (lambda - 2.0 * a);
    let x_u = [r.perron[0], r.perron[1], r.perron[2], r.perron[3]];
    let predicted_ratio = b / (lambda - a * (m[0] as f64 + 1.0) - a_terms[0] - b);
    Ok(RatioTerms {
        lambda,
        a: a_terms,
        b,
        x_u,
        observed_ratio: x_u[0] / x_u[1],
        predicted_ratio,
    })
}
