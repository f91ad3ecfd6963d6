// Generated by `verify::render_wave_theta_source`; thresholds in ‖t²A‖₁.
// (products, θ cos, θ sin)
pub(crate) const WAVE_THETA_DOUBLE: [(u8, f64, f64); 3] = [
    (3, 1.3213e-2, 2.1345e-2),
    (4, 9.6251e-1, 1.2663e0),
    (5, 6.5920e0, 3.6404e0),
];
pub(crate) const WAVE_THETA_SINGLE: [(u8, f64, f64); 3] = [
    (3, 7.3540e-1, 1.1874e0),
    (4, 8.9612e0, 1.1761e1),
    (5, 3.0864e1, 2.1848e1),
];
