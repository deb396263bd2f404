//! Gauss–Jacobi quadrature and integration over the half-line `[1, ∞)`.
//!
//! Integrands have the shape `(η+1)^a (η−1)^b N(η)/D(η)` with `N`, `D` exact
//! polynomials. The interval is split at `η = 3`:
//!
//! * on `[1, 3]`, `η = 2 + x` and Gauss–Jacobi nodes for `(1+x)^b` absorb the
//!   endpoint singularity;
//! * on `[3, ∞)`, `η = 1/s`, `s = (1+x)/6`; the integrand becomes `s^q G(s)` with
//!   `G` analytic at `s = 0` and `q = −(deg N − deg D + a + b) − 2`, and Gauss–Jacobi
//!   nodes for `(1+x)^q` absorb the power at infinity.
//!
//! Each piece is evaluated at doubling node counts; the reported error is the
//! difference between the last two levels.

use crate::error::{Error, Result};
use crate::rational::{fmt_rat, to_f64, Rat};
use crate::ratpoly::{sturm_count, ExtRat, F64Poly, Interval, RatPoly};

/// Nodes and weights of an `n`-point Gauss rule.
#[derive(Clone, Debug, PartialEq)]
pub struct GaussRule {
    /// Nodes in increasing order.
    pub nodes: Vec<f64>,
    /// Matching weights.
    pub weights: Vec<f64>,
}

/// `n`-point Gauss–Jacobi rule for the weight `(1+x)^β` on `[−1, 1]`, `β > −1`.
///
/// Built by Golub–Welsch: eigenvalues of the Jacobi matrix are the nodes and the
/// squared first eigenvector components times `μ₀ = 2^{β+1}/(β+1)` are the weights.
pub fn gauss_jacobi_right(n: usize, beta: f64) -> GaussRule {
    assert!(beta > -1.0, "weight (1+x)^β requires β > −1");
    assert!(n > 0, "at least one node");
    let (a, b) = (0.0_f64, beta);
    let mut diag = vec![0.0; n];
    let mut off = vec![0.0; n];
    for (k, d) in diag.iter_mut().enumerate() {
        let kf = k as f64;
        let s = 2.0 * kf + a + b;
        *d = if k == 0 { (b - a) / (a + b + 2.0) } else { (b * b - a * a) / (s * (s + 2.0)) };
    }
    for k in 1..n {
        let kf = k as f64;
        let s = 2.0 * kf + a + b;
        let num = 4.0 * kf * (kf + a) * (kf + b) * (kf + a + b);
        let den = s * s * (s + 1.0) * (s - 1.0);
        off[k] = (num / den).sqrt();
    }
    let mu0 = 2f64.powf(b + 1.0) / (b + 1.0);
    let (nodes, first) = tridiagonal_eigen_first_row(diag, off);
    let mut pairs: Vec<(f64, f64)> = nodes.into_iter().zip(first.into_iter().map(|z| mu0 * z * z)).collect();
    pairs.sort_by(|x, y| x.0.total_cmp(&y.0));
    GaussRule { nodes: pairs.iter().map(|p| p.0).collect(), weights: pairs.iter().map(|p| p.1).collect() }
}

/// Implicit QL on a symmetric tridiagonal matrix (diagonal `d`, sub-diagonal `e[1..]`),
/// returning eigenvalues and the first component of each normalized eigenvector.
fn tridiagonal_eigen_first_row(mut d: Vec<f64>, mut e: Vec<f64>) -> (Vec<f64>, Vec<f64>) {
    let n = d.len();
    let mut z = vec![0.0; n];
    z[0] = 1.0;
    for i in 1..n {
        e[i - 1] = e[i];
    }
    e[n - 1] = 0.0;
    for l in 0..n {
        let mut iter = 0;
        loop {
            let mut m = l;
            while m + 1 < n {
                let dd = d[m].abs() + d[m + 1].abs();
                if e[m].abs() <= f64::EPSILON * dd {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            iter += 1;
            assert!(iter < 100, "QL iteration did not converge");
            let mut g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            let mut r = g.hypot(1.0);
            g = d[m] - d[l] + e[l] / (g + r.copysign(g));
            let (mut s, mut c, mut p) = (1.0, 1.0, 0.0);
            let mut i = m;
            let mut underflow = false;
            while i > l {
                i -= 1;
                let f = s * e[i];
                let b = c * e[i];
                r = f.hypot(g);
                e[i + 1] = r;
                if r == 0.0 {
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    underflow = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
                let zf = z[i + 1];
                z[i + 1] = s * z[i] + c * zf;
                z[i] = c * z[i] - s * zf;
            }
            if underflow {
                continue;
            }
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }
    (d, z)
}

/// `(η+1)^a (η−1)^b N(η)/D(η)` on `[1, ∞)`.
#[derive(Clone, Debug)]
pub struct HalfLineIntegrand {
    /// Exponent of `(η + 1)`.
    pub a: Rat,
    /// Exponent of `(η − 1)`.
    pub b: Rat,
    /// Numerator.
    pub num: RatPoly,
    /// Denominator; must have no zeros on `[1, ∞)`.
    pub den: RatPoly,
}

/// Quadrature controls.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct QuadConfig {
    /// Nodes at the first level.
    pub base_nodes: usize,
    /// Number of doublings after the first level.
    pub levels: usize,
    /// Stop early once the level-to-level change drops below this relative size.
    pub rel_tol: f64,
}

impl Default for QuadConfig {
    fn default() -> Self {
        Self { base_nodes: 32, levels: 4, rel_tol: 1e-14 }
    }
}

impl QuadConfig {
    /// Default configuration, with the number of doublings taken from `XJACOBI_QUAD_LEVEL` when set.
    pub fn from_env() -> Self {
        let mut c = Self::default();
        if let Some(l) = std::env::var("XJACOBI_QUAD_LEVEL").ok().and_then(|s| s.parse().ok()) {
            c.levels = l;
        }
        c
    }
}

/// Integral value with a conservative error estimate.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct QuadResult {
    /// Best estimate.
    pub value: f64,
    /// `|Q_{2n} − Q_n|` of the last two levels (both pieces combined).
    pub error: f64,
    /// Node count per piece at the last level.
    pub nodes: usize,
}

impl HalfLineIntegrand {
    /// Power of `η` governing the decay at infinity: `deg N − deg D + a + b`.
    pub fn decay_exponent(&self) -> Result<Rat> {
        let dn = self.num.degree().ok_or(Error::ZeroPolynomial)?;
        let dd = self.den.degree().ok_or(Error::ZeroPolynomial)?;
        Ok(Rat::from_integer((dn as i64 - dd as i64).into()) + &self.a + &self.b)
    }

    /// Exact convergence gate: `b > −1` and decay exponent `< −1`; denominator nonvanishing on `[1, ∞)`.
    pub fn check(&self) -> Result<()> {
        let minus_one = -Rat::from_integer(1.into());
        if self.b <= minus_one {
            return Err(Error::DivergentIntegral(format!("endpoint exponent (η−1)^{} is not integrable", fmt_rat(&self.b))));
        }
        let e = self.decay_exponent()?;
        if e >= minus_one {
            return Err(Error::DivergentIntegral(format!("integrand decays like η^{} at infinity", fmt_rat(&e))));
        }
        let iv = Interval::new(ExtRat::Finite(Rat::from_integer(1.into())), ExtRat::PosInf, true, false)?;
        if self.den.degree() != Some(0) && sturm_count(&self.den, &iv)? > 0 {
            return Err(Error::WeightPoleInInterval);
        }
        Ok(())
    }

    /// Integrates over `[1, ∞)` after [`HalfLineIntegrand::check`].
    pub fn integrate(&self, cfg: &QuadConfig) -> Result<QuadResult> {
        self.check()?;
        let pieces = Pieces::new(self)?;
        let mut n = cfg.base_nodes;
        let mut prev = pieces.eval(n);
        let mut err = f64::INFINITY;
        for _ in 0..cfg.levels {
            n *= 2;
            let cur = pieces.eval(n);
            err = (cur - prev).abs();
            prev = cur;
            if err <= cfg.rel_tol * cur.abs() {
                break;
            }
        }
        Ok(QuadResult { value: prev, error: err, nodes: n })
    }
}

struct Pieces {
    a: f64,
    b: f64,
    q: f64,
    num: F64Poly,
    den: F64Poly,
    rev_num: F64Poly,
    rev_den: F64Poly,
}

impl Pieces {
    fn new(f: &HalfLineIntegrand) -> Result<Self> {
        let dn = f.num.degree().ok_or(Error::ZeroPolynomial)?;
        let dd = f.den.degree().ok_or(Error::ZeroPolynomial)?;
        let q = -f.decay_exponent()? - Rat::from_integer(2.into());
        Ok(Self {
            a: to_f64(&f.a),
            b: to_f64(&f.b),
            q: to_f64(&q),
            num: f.num.to_f64(),
            den: f.den.to_f64(),
            rev_num: f.num.reversed(dn).to_f64(),
            rev_den: f.den.reversed(dd).to_f64(),
        })
    }

    fn eval(&self, n: usize) -> f64 {
        // [1, 3]: η = 2 + x, (η−1)^b = (1+x)^b absorbed.
        let left = gauss_jacobi_right(n, self.b);
        let lsum: f64 = left
            .nodes
            .iter()
            .zip(&left.weights)
            .map(|(&x, &w)| {
                let eta = 2.0 + x;
                w * (eta + 1.0).powf(self.a) * self.num.eval(eta) / self.den.eval(eta)
            })
            .sum();
        // [3, ∞): η = 1/s, s = (1+x)/6; s^q absorbed, G(s) = (1+s)^a (1−s)^b revN(s)/revD(s).
        let right = gauss_jacobi_right(n, self.q);
        let scale = 6f64.powf(-self.q - 1.0);
        let rsum: f64 = right
            .nodes
            .iter()
            .zip(&right.weights)
            .map(|(&x, &w)| {
                let s = (1.0 + x) / 6.0;
                w * (1.0 + s).powf(self.a) * (1.0 - s).powf(self.b) * self.rev_num.eval(s) / self.rev_den.eval(s)
            })
            .sum();
        lsum + scale * rsum
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    #[test]
    fn gauss_legendre_matches_known_nodes() {
        let r = gauss_jacobi_right(3, 0.0);
        let x = (3.0f64 / 5.0).sqrt();
        assert!((r.nodes[0] + x).abs() < 1e-14 && (r.nodes[1]).abs() < 1e-14 && (r.nodes[2] - x).abs() < 1e-14);
        assert!((r.weights[1] - 8.0 / 9.0).abs() < 1e-14 && (r.weights[0] - 5.0 / 9.0).abs() < 1e-14);
    }

    #[test]
    fn gauss_jacobi_integrates_moments_exactly() {
        // ∫ (1+x)^β x^k dx over [−1, 1], degree ≤ 2n−1 is exact.
        let beta = 0.5;
        let r = gauss_jacobi_right(6, beta);
        // k = 0: 2^{β+1}/(β+1); k = 1: 2^{β+2}/(β+2) − 2^{β+1}/(β+1).
        let m0: f64 = r.weights.iter().sum();
        let m1: f64 = r.nodes.iter().zip(&r.weights).map(|(x, w)| x * w).sum();
        let e0 = 2f64.powf(beta + 1.0) / (beta + 1.0);
        let e1 = 2f64.powf(beta + 2.0) / (beta + 2.0) - e0;
        assert!((m0 - e0).abs() < 1e-13 && (m1 - e1).abs() < 1e-13);
    }

    #[test]
    fn closed_form_half_line_integrals() {
        let f = HalfLineIntegrand { a: int(-3), b: int(0), num: RatPoly::one(), den: RatPoly::one() };
        let r = f.integrate(&QuadConfig::default()).unwrap();
        assert!((r.value - 0.125).abs() <= 1e-12 * 0.125, "{r:?}");
        let g = HalfLineIntegrand { a: int(-4), b: rat(1, 2), num: RatPoly::one(), den: RatPoly::one() };
        let r = g.integrate(&QuadConfig::default()).unwrap();
        let exact = 2f64.powf(-2.5) * std::f64::consts::PI / 16.0;
        assert!((r.value - exact).abs() <= 1e-12 * exact, "{r:?} vs {exact}");
    }

    #[test]
    fn divergence_gate() {
        let f = HalfLineIntegrand { a: int(-1), b: int(0), num: RatPoly::one(), den: RatPoly::one() };
        assert!(matches!(f.integrate(&QuadConfig::default()), Err(Error::DivergentIntegral(_))));
        let g = HalfLineIntegrand { a: int(-4), b: int(-1), num: RatPoly::one(), den: RatPoly::one() };
        assert!(matches!(g.check(), Err(Error::DivergentIntegral(_))));
        let h = HalfLineIntegrand { a: int(-4), b: int(0), num: RatPoly::one(), den: RatPoly::from_ints(&[-2, 1]) };
        assert!(matches!(h.check(), Err(Error::WeightPoleInInterval)));
    }
}
