//! Signless Laplacian `Q = D + A`: spectrum, least eigenpair, and checks of
//! the standard eigenvalue facts.

pub mod eigen;
pub mod structure;

use crate::error::{GraphError, SpectralError};
use crate::graph::Graph;

pub use structure::{
    check_relocation_lemma, find_odd_cycle_coalescence, validate_f3_max_at_v3,
    validate_odd_cycle_symmetry, validate_tree_monotone, validate_unicyclic_signs,
    validate_zero_branch, OddCycleCoalescence, Verdict,
};

/// Residual bound every reported eigenpair must meet.
pub const RESIDUAL_BOUND: f64 = 1e-8;
/// Least eigenvalues in `[-CLAMP, 0)` are reported as 0.
pub const CLAMP: f64 = 1e-10;

/// Numeric tolerances shared by the spectral checks.
#[derive(Copy, Clone, Debug, PartialEq)]
pub struct Tolerances {
    /// Eigenvalues within this distance of `q_min` count toward its multiplicity.
    pub cluster: f64,
    /// Entry `x_i` counts as zero when `|x_i| <= zero * ||x||_inf`.
    pub zero: f64,
    /// Strict inequalities need a gap above `strict * ||x||_inf`.
    pub strict: f64,
    /// Slack for interlacing and spectral comparisons.
    pub interlace: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            cluster: 1e-8,
            zero: 1e-8,
            strict: 1e-9,
            interlace: 1e-8,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct VertexVector {
    values: Vec<f64>,
}

impl VertexVector {
    pub fn new(values: Vec<f64>) -> Self {
        VertexVector { values }
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn get(&self, i: usize) -> f64 {
        self.values[i]
    }

    pub fn norm(&self) -> f64 {
        self.values.iter().map(|x| x * x).sum::<f64>().sqrt()
    }

    pub fn norm_inf(&self) -> f64 {
        self.values.iter().fold(0.0, |m, x| m.max(x.abs()))
    }

    pub fn is_unit(&self) -> bool {
        (self.norm() - 1.0).abs() <= 1e-12
    }

    pub fn normalized(&self) -> VertexVector {
        let n = self.norm();
        VertexVector::new(self.values.iter().map(|x| x / n).collect())
    }

    pub fn negated(&self) -> VertexVector {
        VertexVector::new(self.values.iter().map(|x| -x).collect())
    }

    /// Flips the sign so the first entry of largest magnitude is positive.
    pub fn sign_normalized(&self) -> VertexVector {
        let max = self.norm_inf();
        let first = self
            .values
            .iter()
            .position(|x| x.abs() >= max * (1.0 - 1e-9));
        match first {
            Some(i) if self.values[i] < 0.0 => self.negated(),
            _ => self.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SpectralResult {
    pub q_min: f64,
    /// Unit, sign-normalized eigenvector for `q_min`.
    pub eigenvector: VertexVector,
    /// `||Q x - q_min x||_inf`.
    pub residual: f64,
    pub multiplicity: usize,
}

pub fn q_matrix(g: &Graph) -> Vec<Vec<f64>> {
    let n = g.order();
    let mut q = vec![vec![0.0; n]; n];
    for (i, row) in q.iter_mut().enumerate() {
        row[i] = g.degree(i) as f64;
        for j in g.neighbors(i) {
            row[j] = 1.0;
        }
    }
    q
}

/// `Q x` computed from adjacency.
pub fn q_apply(g: &Graph, x: &[f64]) -> Vec<f64> {
    (0..g.order())
        .map(|i| g.degree(i) as f64 * x[i] + g.neighbors(i).iter().map(|j| x[j]).sum::<f64>())
        .collect()
}

/// Q-eigenvalues in descending order.
pub fn q_spectrum(g: &Graph) -> Result<Vec<f64>, SpectralError> {
    let e = eigen::symmetric_eigen(&q_matrix(g))?;
    let mut values = e.values;
    values.reverse();
    Ok(values)
}

pub fn q_min(g: &Graph) -> Result<SpectralResult, SpectralError> {
    q_min_with(g, &Tolerances::default())
}

pub fn q_min_with(g: &Graph, tol: &Tolerances) -> Result<SpectralResult, SpectralError> {
    let n = g.order();
    if n == 0 {
        return Err(GraphError::EmptyGraph.into());
    }
    let q = q_matrix(g);
    let e = eigen::symmetric_eigen(&q)?;
    let mut lambda = e.values[0];
    let mut x = e.vector(0);
    let bisected = eigen::least_by_bisection(&e.diag, &e.off);
    if (bisected - lambda).abs() > 1e-9 * (1.0 + lambda.abs()) {
        lambda = bisected;
        x = eigen::inverse_iteration(&q, lambda).ok_or(SpectralError::NoConvergence)?;
    }
    let mut residual = residual_inf(g, &x, lambda);
    if residual > RESIDUAL_BOUND {
        if let Some(y) = eigen::inverse_iteration(&q, lambda) {
            let r = residual_inf(g, &y, lambda);
            if r < residual {
                x = y;
                residual = r;
            }
        }
    }
    if residual > RESIDUAL_BOUND {
        return Err(SpectralError::NotAnEigenvector(residual));
    }
    let multiplicity = e
        .values
        .iter()
        .filter(|&&v| (v - lambda).abs() <= tol.cluster)
        .count()
        .max(1);
    if (-CLAMP..0.0).contains(&lambda) {
        lambda = 0.0;
    }
    let eigenvector = VertexVector::new(x).normalized().sign_normalized();
    Ok(SpectralResult {
        q_min: lambda,
        eigenvector,
        residual,
        multiplicity,
    })
}

fn residual_inf(g: &Graph, x: &[f64], lambda: f64) -> f64 {
    let norm = x.iter().map(|t| t * t).sum::<f64>().sqrt();
    q_apply(g, x)
        .iter()
        .zip(x)
        .map(|(qx, xi)| ((qx - lambda * xi) / norm).abs())
        .fold(0.0, f64::max)
}

/// `x^T Q x` as the edge sum of `(x_i + x_j)^2`.
pub fn rayleigh(g: &Graph, x: &VertexVector) -> Result<f64, SpectralError> {
    if x.len() != g.order() {
        return Err(SpectralError::DimensionMismatch {
            expected: g.order(),
            got: x.len(),
        });
    }
    Ok(g.edges().map(|(i, j)| (x.get(i) + x.get(j)).powi(2)).sum())
}

/// Whether the spectra of `g` and `g - uv` interleave.
pub fn check_interlacing(g: &Graph, e: (usize, usize)) -> Result<bool, SpectralError> {
    check_interlacing_with(g, e, Tolerances::default().interlace)
}

pub fn check_interlacing_with(
    g: &Graph,
    e: (usize, usize),
    tol: f64,
) -> Result<bool, SpectralError> {
    let h = g.with_edge_removed(e.0, e.1)?;
    let q = q_spectrum(g)?;
    let s = q_spectrum(&h)?;
    let n = q.len();
    let mut ok = s[n - 1] >= -tol;
    for i in 0..n {
        ok &= s[i] <= q[i] + tol;
        if i + 1 < n {
            ok &= q[i + 1] <= s[i] + tol;
        }
    }
    Ok(ok)
}

/// `q_min < δ` with a strict margin, for connected graphs of order at least 2.
pub fn check_qmin_below_mindeg(g: &Graph) -> Result<bool, SpectralError> {
    if g.order() < 2 || !g.is_connected() {
        return Err(SpectralError::Shape(
            "needs a connected graph on at least 2 vertices".into(),
        ));
    }
    let q = q_min(g)?.q_min;
    Ok(g.min_degree() as f64 - q > Tolerances::default().strict)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{cycle, path};

    fn close(a: &[f64], b: &[f64], tol: f64) -> bool {
        a.len() == b.len() && a.iter().zip(b).all(|(x, y)| (x - y).abs() <= tol)
    }

    #[test]
    fn q_matrix_examples() {
        let k2 = Graph::from_edges(2, &[(0, 1)]).unwrap();
        assert_eq!(q_matrix(&k2), vec![vec![1.0, 1.0], vec![1.0, 1.0]]);
        let p3 = path(3).unwrap().graph;
        assert_eq!(
            q_matrix(&p3),
            vec![
                vec![1.0, 1.0, 0.0],
                vec![1.0, 2.0, 1.0],
                vec![0.0, 1.0, 1.0]
            ]
        );
        let c3 = cycle(3).unwrap().graph;
        let q = q_matrix(&c3);
        assert!((0..3).all(|i| q[i][i] == 2.0 && (0..3).all(|j| i == j || q[i][j] == 1.0)));
    }

    #[test]
    fn spectrum_examples() {
        assert!(close(
            &q_spectrum(&cycle(3).unwrap().graph).unwrap(),
            &[4.0, 1.0, 1.0],
            1e-10
        ));
        assert!(close(
            &q_spectrum(&path(3).unwrap().graph).unwrap(),
            &[3.0, 1.0, 0.0],
            1e-10
        ));
        assert!(close(
            &q_spectrum(&Graph::empty(1).unwrap()).unwrap(),
            &[0.0],
            1e-12
        ));
    }

    #[test]
    fn cycle_spectra_closed_form() {
        use std::f64::consts::PI;
        for n in 3..=30 {
            let mut expect: Vec<f64> = (0..n)
                .map(|k| 2.0 + 2.0 * (2.0 * PI * k as f64 / n as f64).cos())
                .collect();
            expect.sort_by(|a, b| b.total_cmp(a));
            assert!(
                close(
                    &q_spectrum(&cycle(n).unwrap().graph).unwrap(),
                    &expect,
                    1e-10
                ),
                "n={n}"
            );
        }
    }

    #[test]
    fn least_eigenpairs() {
        let c5 = q_min(&cycle(5).unwrap().graph).unwrap();
        assert!((c5.q_min - 0.381_966_011_250_105_1).abs() < 1e-10);
        assert_eq!(c5.multiplicity, 2);
        let c3 = q_min(&cycle(3).unwrap().graph).unwrap();
        assert!((c3.q_min - 1.0).abs() < 1e-12);
        let p4 = q_min(&path(4).unwrap().graph).unwrap();
        assert!(p4.q_min.abs() < 1e-12);
        assert!(p4.eigenvector.is_unit());
        assert!(p4.residual <= RESIDUAL_BOUND);
    }

    #[test]
    fn rayleigh_examples() {
        let c3 = cycle(3).unwrap().graph;
        assert_eq!(
            rayleigh(&c3, &VertexVector::new(vec![1.0, 0.0, 0.0])).unwrap(),
            2.0
        );
        let p4 = path(4).unwrap().graph;
        let h = 0.5;
        assert_eq!(
            rayleigh(&p4, &VertexVector::new(vec![h, -h, h, -h])).unwrap(),
            0.0
        );
        let c5 = cycle(5).unwrap().graph;
        let r = q_min(&c5).unwrap();
        assert!((rayleigh(&c5, &r.eigenvector).unwrap() - r.q_min).abs() < 1e-10);
        assert!(matches!(
            rayleigh(&c5, &VertexVector::new(vec![1.0])),
            Err(SpectralError::DimensionMismatch {
                expected: 5,
                got: 1
            })
        ));
    }

    #[test]
    fn interlacing_examples() {
        let k3 = cycle(3).unwrap().graph;
        assert!(check_interlacing(&k3, (0, 1)).unwrap());
        let p4 = path(4).unwrap().graph;
        assert!(check_interlacing(&p4, (1, 2)).unwrap());
        assert!(check_interlacing(&p4, (0, 2)).is_err());
    }

    #[test]
    fn mindeg_examples() {
        assert!(check_qmin_below_mindeg(&cycle(3).unwrap().graph).unwrap());
        assert!(check_qmin_below_mindeg(&path(5).unwrap().graph).unwrap());
        assert!(check_qmin_below_mindeg(&Graph::empty(1).unwrap()).is_err());
    }
}
