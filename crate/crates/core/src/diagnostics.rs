//! Observables recorded along a trajectory: masses, sup-norm, boundary
//! Fourier amplitudes and the operational blow-up test.

use crate::field::Field;

/// One time-stamped row of the diagnostics series.
#[derive(Debug, Clone)]
pub struct DiagnosticsRecord {
    pub t: f64,
    pub total_mass: f64,
    pub interior_mass: f64,
    pub boundary_mass: f64,
    pub sup_norm: f64,
    /// |Fourier mode m| of the boundary trace for m = 0, 1, 2.
    pub mode_amplitudes: [f64; 3],
    pub blown_up: bool,
}

/// Discrete Fourier amplitude of mode `m` of a boundary trace:
/// |(1/N) Σ_k trace_k e^{-i m θ_k}| with θ_k = 2πk/N.
///
/// Mode 0 is the mean of the trace. Requires N ≥ 2m + 1 so the mode is
/// resolved.
pub fn boundary_fourier_mode(trace: &[f64], m: usize) -> f64 {
    let n = trace.len();
    assert!(
        n >= 2 * m + 1,
        "trace of length {n} cannot resolve mode {m}"
    );
    let w = std::f64::consts::TAU * m as f64 / n as f64;
    let (mut re, mut im) = (0.0, 0.0);
    for (k, &v) in trace.iter().enumerate() {
        let phase = w * k as f64;
        re += v * phase.cos();
        im -= v * phase.sin();
    }
    let n = n as f64;
    (re / n).hypot(im / n)
}

/// Operational blow-up test: fires when the sup-norm exceeds
/// `blowup_factor` times the initial sup-norm or any value is non-finite.
/// A failed linear solve is the third trigger; callers raise the flag
/// directly in that case since the field never gets produced.
pub fn blowup_indicator(field: &Field, initial_sup: f64, blowup_factor: f64) -> bool {
    assert!(initial_sup > 0.0, "initial sup-norm must be positive");
    if !field.is_finite() {
        return true;
    }
    field.sup_norm() > blowup_factor * initial_sup
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Representation;

    #[test]
    fn uniform_trace_has_no_mode_one() {
        let trace = vec![2.5; 32];
        assert!(boundary_fourier_mode(&trace, 1) < 1e-15);
        assert!((boundary_fourier_mode(&trace, 0) - 2.5).abs() < 1e-14);
    }

    #[test]
    fn pure_cosine_mode_amplitude() {
        let n = 64;
        let trace: Vec<f64> = (0..n)
            .map(|k| 1.0 + (std::f64::consts::TAU * k as f64 / n as f64).cos())
            .collect();
        assert!((boundary_fourier_mode(&trace, 1) - 0.5).abs() < 1e-14);
        assert!((boundary_fourier_mode(&trace, 0) - 1.0).abs() < 1e-14);
        assert!(boundary_fourier_mode(&trace, 2) < 1e-14);
    }

    #[test]
    fn single_spike_amplitude_matches_direct_sum() {
        // Direct-summation oracle: a spike of height h at cell k0 has
        // |(1/N) h e^{-i m θ_{k0}}| = h/N for every mode.
        let n = 48;
        let h = 3.7;
        for k0 in [0, 5, 47] {
            let mut trace = vec![0.0; n];
            trace[k0] = h;
            let got = boundary_fourier_mode(&trace, 1);
            assert!((got - h / n as f64).abs() < 1e-14, "k0={k0} got {got}");
        }
    }

    #[test]
    fn mode_amplitudes_are_rotation_invariant() {
        let n = 32;
        let trace: Vec<f64> = (0..n).map(|k| (k as f64 * 0.37).sin() + 1.5).collect();
        let mut rotated = trace.clone();
        rotated.rotate_right(5);
        for m in 0..3 {
            let a = boundary_fourier_mode(&trace, m);
            let b = boundary_fourier_mode(&rotated, m);
            assert!((a - b).abs() < 1e-13);
        }
    }

    #[test]
    #[should_panic]
    fn mode_beyond_resolution_rejected() {
        boundary_fourier_mode(&[1.0, 2.0, 3.0], 2);
    }

    #[test]
    fn blowup_triggers() {
        let f = Field::new(vec![10.0], Representation::Density);
        assert!(!blowup_indicator(&f, 1.0, 1e6));
        let f = Field::new(vec![2e6], Representation::Density);
        assert!(blowup_indicator(&f, 1.0, 1e6));
        let f = Field::new(vec![f64::NAN], Representation::Density);
        assert!(blowup_indicator(&f, 1.0, 1e6));
        let f = Field::new(vec![f64::INFINITY], Representation::Density);
        assert!(blowup_indicator(&f, 1.0, 1e6));
    }
}
