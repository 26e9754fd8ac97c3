//! Density fields, the membrane-bound boundary state, seeded random initial
//! data and mass accounting.

use rand::distributions::{Distribution, Uniform};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::grid::{AnnulusGrid, Grid1D};

/// How the stored values relate to the physical density ρ.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Representation {
    /// Plain density ρ (all 1D grids).
    Density,
    /// Scaled density ρ̃ = r·ρ (annulus only; every discrete formula of the
    /// polar scheme is written in ρ̃).
    ScaledDensity,
}

/// Cell-centered field values on a grid.
#[derive(Debug, Clone)]
pub struct Field {
    pub values: Vec<f64>,
    pub repr: Representation,
}

impl Field {
    pub fn new(values: Vec<f64>, repr: Representation) -> Self {
        Field { values, repr }
    }

    pub fn zeros(n: usize, repr: Representation) -> Self {
        Field {
            values: vec![0.0; n],
            repr,
        }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// max_k |v_k|; 0 for an empty field.
    pub fn sup_norm(&self) -> f64 {
        self.values.iter().fold(0.0_f64, |m, v| m.max(v.abs()))
    }

    pub fn is_finite(&self) -> bool {
        self.values.iter().all(|v| v.is_finite())
    }
}

/// Membrane-bound marker density μ on the active boundary, one value per
/// angular sector.
#[derive(Debug, Clone)]
pub struct BoundaryState {
    pub values: Vec<f64>,
}

impl BoundaryState {
    pub fn zeros(n: usize) -> Self {
        BoundaryState {
            values: vec![0.0; n],
        }
    }
}

fn scaled_uniform_draws(n: usize, seed: u64) -> Vec<f64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let dist = Uniform::new(0.5, 1.5);
    (0..n).map(|_| dist.sample(&mut rng)).collect()
}

/// Random initial density on a 1D grid: i.i.d. uniform draws on [0.5, 1.5)
/// from a ChaCha8 generator seeded by `seed`, rescaled so the total mass is
/// exactly `m`. `m = 0` yields the zero field.
pub fn random_initial_density_1d(grid: &Grid1D, m: f64, seed: u64) -> Field {
    assert!(m >= 0.0, "mass must be nonnegative, got {m}");
    let mut values = scaled_uniform_draws(grid.n, seed);
    let raw_mass: f64 = values.iter().sum::<f64>() * grid.delta;
    let scale = if raw_mass > 0.0 { m / raw_mass } else { 0.0 };
    for v in &mut values {
        *v *= scale;
    }
    Field::new(values, Representation::Density)
}

/// Random initial density on the annulus, stored as ρ̃ = r·ρ with ρ the
/// i.i.d. uniform draw, rescaled so ∫ρ̃ dr dθ = `m` exactly.
pub fn random_initial_density_annulus(grid: &AnnulusGrid, m: f64, seed: u64) -> Field {
    assert!(m >= 0.0, "mass must be nonnegative, got {m}");
    let mut values = scaled_uniform_draws(grid.len(), seed);
    for j in 0..grid.n_r {
        for k in 0..grid.n_theta {
            values[grid.idx(j, k)] *= grid.r_centers[j];
        }
    }
    let raw_mass: f64 = values.iter().sum::<f64>() * grid.dr * grid.dtheta;
    let scale = if raw_mass > 0.0 { m / raw_mass } else { 0.0 };
    for v in &mut values {
        *v *= scale;
    }
    Field::new(values, Representation::ScaledDensity)
}

/// Total marker mass on a 1D grid: Σ ρ_k Δ, plus the membrane content μ for
/// the half-line exchange model.
pub fn total_mass_1d(grid: &Grid1D, field: &Field, mu: Option<f64>) -> f64 {
    assert_eq!(
        field.repr,
        Representation::Density,
        "1D mass expects a plain-density field"
    );
    assert_eq!(field.len(), grid.n);
    field.values.iter().sum::<f64>() * grid.delta + mu.unwrap_or(0.0)
}

/// Total marker mass on the annulus: Σ ρ̃_{j,k} Δr Δθ (since ∫ρ r dr dθ =
/// ∫ρ̃ dr dθ), plus Σ μ_k R_max Δθ when the exchange layer is present.
pub fn total_mass_annulus(grid: &AnnulusGrid, field: &Field, mu: Option<&[f64]>) -> f64 {
    assert_eq!(
        field.repr,
        Representation::ScaledDensity,
        "annulus mass expects the scaled field ρ̃"
    );
    assert_eq!(field.len(), grid.len());
    let interior: f64 = field.values.iter().sum::<f64>() * grid.dr * grid.dtheta;
    let boundary = match mu {
        Some(mu) => {
            assert_eq!(mu.len(), grid.n_theta);
            mu.iter().sum::<f64>() * grid.r_faces[grid.n_r] * grid.dtheta
        }
        None => 0.0,
    };
    interior + boundary
}
