//! Cell-centered finite-volume grids: the truncated half-line, the periodic
//! circle, and the polar annulus.

/// Topology of a one-dimensional grid.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GridKind {
    /// Truncation of (0, ∞) to (0, L) with cells (x_{k-1/2}, x_{k+1/2}).
    HalfLineTruncated,
    /// The circle R/2πZ, cells (θ_{k-1/2}, θ_{k+1/2}) with periodic closure.
    Periodic,
}

/// One-dimensional cell-centered grid.
#[derive(Debug, Clone)]
pub struct Grid1D {
    pub kind: GridKind,
    /// Number of control volumes.
    pub n: usize,
    /// Cell width (Δx = L/N on the half-line, Δθ = 2π/N on the circle).
    pub delta: f64,
    /// Cell-center coordinates, strictly increasing.
    pub centers: Vec<f64>,
}

impl Grid1D {
    /// Truncated half-line (0, L) split into `n` equal cells with centers
    /// at (k - 1/2)·Δx.
    pub fn half_line(n: usize, length: f64) -> Self {
        assert!(n >= 2, "half-line grid needs at least 2 cells, got {n}");
        assert!(length > 0.0, "domain length must be positive, got {length}");
        let delta = length / n as f64;
        let centers = (0..n).map(|k| (k as f64 + 0.5) * delta).collect();
        Grid1D {
            kind: GridKind::HalfLineTruncated,
            n,
            delta,
            centers,
        }
    }

    /// Periodic grid on R/2πZ with centers θ_k = k·Δθ, k = 1..N.
    pub fn periodic(n: usize) -> Self {
        assert!(n >= 3, "periodic grid needs at least 3 cells, got {n}");
        let delta = std::f64::consts::TAU / n as f64;
        let centers = (1..=n).map(|k| k as f64 * delta).collect();
        Grid1D {
            kind: GridKind::Periodic,
            n,
            delta,
            centers,
        }
    }

    /// Total length covered by the cells (L or 2π).
    pub fn extent(&self) -> f64 {
        self.delta * self.n as f64
    }
}

/// Polar grid on the annulus [R_min, R_max] × R/2πZ.
///
/// Radial faces sit exactly at R_min and R_max; cell centers are midway
/// between adjacent faces. Cells are indexed (j, k) with j the radial ring
/// (0-based, innermost first) and k the angular sector; the flattened index
/// is `j * n_theta + k` (angular index fastest).
#[derive(Debug, Clone)]
pub struct AnnulusGrid {
    pub n_r: usize,
    pub n_theta: usize,
    pub dr: f64,
    pub dtheta: f64,
    /// r_j at ring centers, length `n_r`.
    pub r_centers: Vec<f64>,
    /// r_{j±1/2} at ring faces, length `n_r + 1`; first is R_min, last R_max.
    pub r_faces: Vec<f64>,
}

impl AnnulusGrid {
    pub fn new(n_r: usize, n_theta: usize, r_min: f64, r_max: f64) -> Self {
        assert!(n_r >= 2, "annulus grid needs at least 2 rings, got {n_r}");
        assert!(n_theta >= 3, "annulus grid needs at least 3 sectors, got {n_theta}");
        assert!(
            r_min > 0.0 && r_min < r_max,
            "need 0 < R_min < R_max, got [{r_min}, {r_max}]"
        );
        let dr = (r_max - r_min) / n_r as f64;
        let dtheta = std::f64::consts::TAU / n_theta as f64;
        let r_faces: Vec<f64> = (0..=n_r).map(|j| r_min + j as f64 * dr).collect();
        let r_centers = (0..n_r)
            .map(|j| 0.5 * (r_faces[j] + r_faces[j + 1]))
            .collect();
        AnnulusGrid {
            n_r,
            n_theta,
            dr,
            dtheta,
            r_centers,
            r_faces,
        }
    }

    /// Number of cells N_r · N_θ.
    pub fn len(&self) -> usize {
        self.n_r * self.n_theta
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Flattened cell index of ring `j`, sector `k` (both 0-based).
    #[inline]
    pub fn idx(&self, j: usize, k: usize) -> usize {
        j * self.n_theta + k
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn half_line_centers_cover_domain() {
        let g = Grid1D::half_line(400, 20.0);
        assert_eq!(g.n, 400);
        assert!((g.delta - 0.05).abs() < 1e-15);
        assert!((g.extent() - 20.0).abs() < 1e-12);
        assert!((g.centers[0] - 0.025).abs() < 1e-15);
        assert!(g.centers.windows(2).all(|w| w[1] > w[0]));
    }

    #[test]
    fn periodic_covers_full_circle() {
        let g = Grid1D::periodic(64);
        assert!((g.extent() - std::f64::consts::TAU).abs() < 1e-12);
        assert!((g.centers[63] - std::f64::consts::TAU).abs() < 1e-12);
    }

    #[test]
    fn annulus_faces_hit_radii_and_centers_sit_midway() {
        let g = AnnulusGrid::new(46, 128, 0.2, 2.5);
        assert_eq!(g.r_faces.len(), 47);
        assert_eq!(g.r_centers.len(), 46);
        assert!((g.r_faces[0] - 0.2).abs() < 1e-15);
        assert!((g.r_faces[46] - 2.5).abs() < 1e-12);
        for j in 0..46 {
            let mid = 0.5 * (g.r_faces[j] + g.r_faces[j + 1]);
            assert!((g.r_centers[j] - mid).abs() < 1e-15);
        }
        assert!((g.dtheta * 128.0 - std::f64::consts::TAU).abs() < 1e-12);
    }

    #[test]
    #[should_panic]
    fn annulus_rejects_inverted_radii() {
        AnnulusGrid::new(4, 8, 2.5, 0.2);
    }
}
