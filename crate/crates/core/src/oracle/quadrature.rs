//! Product quadrature rules on the sphere and on the rotation group.

use std::f64::consts::PI;

/// Gauss-Legendre nodes and weights on [-1, 1], by Newton iteration on P_n.
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    assert!(n >= 1, "Gauss-Legendre order must be at least 1");
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    let nf = n as f64;
    for i in 0..n.div_ceil(2) {
        // Tricomi's initial guess
        let mut x = (PI * (i as f64 + 0.75) / (nf + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (p, d) = legendre_with_derivative(n, x);
            dp = d;
            let dx = p / d;
            x -= dx;
            if dx.abs() < 1e-16 {
                break;
            }
        }
        let (_, d) = legendre_with_derivative(n, x);
        if d != 0.0 {
            dp = d;
        }
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    (nodes, weights)
}

fn legendre_with_derivative(n: usize, x: f64) -> (f64, f64) {
    let (mut p0, mut p1) = (1.0, x);
    for k in 2..=n {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    if n == 0 {
        return (1.0, 0.0);
    }
    let d = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, d)
}

/// One node of a rotation-group rule: ZYZ Euler angles and a weight.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OrientationNode {
    /// Azimuth of the rotated z axis.
    pub phi: f64,
    pub cos_theta: f64,
    /// Roll about the rotated z axis.
    pub psi: f64,
    pub weight: f64,
}

impl OrientationNode {
    /// Rotation matrix Rz(phi) Ry(theta) Rz(psi), row major.
    pub fn matrix(&self) -> [[f64; 3]; 3] {
        zyz(self.phi.sin_cos(), self.cos_theta, self.psi.sin_cos())
    }
}

fn zyz((sp, cp): (f64, f64), ct: f64, (ss, cs): (f64, f64)) -> [[f64; 3]; 3] {
    let st = (1.0 - ct * ct).max(0.0).sqrt();
    [
        [cp * ct * cs - sp * ss, -cp * ct * ss - sp * cs, cp * st],
        [sp * ct * cs + cp * ss, -sp * ct * ss + cp * cs, sp * st],
        [-st * cs, st * ss, ct],
    ]
}

/// Gauss-Legendre in cos(theta) times uniform azimuth (the sphere of
/// electron directions), times a uniform roll angle. Weights sum to
/// `total`. With `order` n there are n x 2n x 2n nodes; polynomials of
/// degree below 2n in the direction cosines are integrated exactly.
pub fn orientation_rule(order: usize, total: f64) -> Vec<OrientationNode> {
    let (x, w) = gauss_legendre(order);
    let n_az = 2 * order;
    let step = 2.0 * PI / n_az as f64;
    // GL weights sum to 2; azimuth and roll each contribute n_az equal parts
    let norm = total / (2.0 * (n_az * n_az) as f64);
    let mut nodes = Vec::with_capacity(order * n_az * n_az);
    for (&ct, &wt) in x.iter().zip(&w) {
        for i in 0..n_az {
            for j in 0..n_az {
                nodes.push(OrientationNode {
                    phi: i as f64 * step,
                    cos_theta: ct,
                    psi: j as f64 * step,
                    weight: wt * norm,
                });
            }
        }
    }
    nodes
}

/// Same nodes as [`orientation_rule`] in the same order, without
/// materializing them: calls `f(row, rotation, weight)` where `row` is the
/// Gauss-Legendre index.
pub fn visit_orientations(order: usize, total: f64, mut f: impl FnMut(usize, &[[f64; 3]; 3], f64)) {
    let (x, w) = gauss_legendre(order);
    let n_az = 2 * order;
    let step = 2.0 * PI / n_az as f64;
    let norm = total / (2.0 * (n_az * n_az) as f64);
    let trig: Vec<(f64, f64)> = (0..n_az).map(|i| (i as f64 * step).sin_cos()).collect();
    for (row, (&ct, &wt)) in x.iter().zip(&w).enumerate() {
        for &phi in &trig {
            for &psi in &trig {
                f(row, &zyz(phi, ct, psi), wt * norm);
            }
        }
    }
}
