//! Numerical orthogonality checks on the half-line and exact zero counts.
//!
//! Gram matrices of the XR-Jacobi families, of the Romanovski–Jacobi base set and
//! of the cross-orthogonal X_m-Jacobi sets are assembled entry by entry with
//! [`crate::quadrature`]; every entry carries its own error estimate and the
//! report only claims orthogonality when those estimates are small enough to
//! make the claim meaningful.

use num::{One, Signed};

use crate::error::{Error, Result};
use crate::exec::{self, Strategy};
use crate::jacobi::{jacobi, JacobiParams, LambdaPair, Quadrant};
use crate::quadrature::{HalfLineIntegrand, QuadConfig};
use crate::rational::{fmt_rat, int, to_f64, Rat};
use crate::ratpoly::{sturm_count, ExtRat, F64Poly, Interval, RatPoly};
use crate::seeds::{classify_derived, is_admissible};
use crate::sle::transformed_exponents;
use crate::xconstruct::{half_gap, xm_jacobi, xr_jacobi, XrFamily};

/// Largest normalized off-diagonal entry accepted as orthogonal.
pub const OFF_DIAGONAL_TOL: f64 = 1e-8;
/// Largest normalized quadrature error estimate accepted alongside [`OFF_DIAGONAL_TOL`].
pub const ERROR_TOL: f64 = 1e-9;

/// Which weight to build.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WeightSpec {
    /// Weight of an XR family generated by a seed of degree `seed_m`.
    Xr {
        /// Family.
        family: XrFamily,
        /// Seed degree.
        seed_m: usize,
        /// Positive exponent differences.
        lam_o: LambdaPair,
    },
    /// Romanovski–Jacobi base weight `(η+1)^{−λ_-}(η−1)^{λ_+}`.
    RJacobi {
        /// Positive exponent differences.
        lam_o: LambdaPair,
    },
    /// Cross-orthogonality weight of the X_m-Jacobi set, reflected to `η = −x ∈ [1, ∞)`:
    /// `(1+η)^{−α−2}(η−1)^{β} / [P_n^{(α+1,β−1)}(−η)]²`.
    Xm {
        /// Jacobi `α`.
        alpha: Rat,
        /// Jacobi `β`.
        beta: Rat,
        /// Fixed index `n`.
        n: usize,
    },
}

/// A weight `(η+1)^a (η−1)^b / D(η)` on `[1, ∞)`.
#[derive(Clone, Debug, PartialEq)]
pub struct Weight {
    /// Exponent of `(η + 1)`.
    pub a: Rat,
    /// Exponent of `(η − 1)`.
    pub b: Rat,
    /// Denominator (a squared seed polynomial, or 1).
    pub den: RatPoly,
    den_f: F64Poly,
}

impl Weight {
    fn new(a: Rat, b: Rat, den: RatPoly) -> Result<Self> {
        let iv = Interval::new(ExtRat::Finite(Rat::one()), ExtRat::PosInf, true, false)?;
        if den.degree() != Some(0) && sturm_count(&den, &iv)? > 0 {
            return Err(Error::WeightPoleInInterval);
        }
        let den_f = den.to_f64();
        Ok(Self { a, b, den, den_f })
    }

    /// Value at `η > 1`.
    pub fn eval(&self, eta: f64) -> f64 {
        (eta + 1.0).powf(to_f64(&self.a)) * (eta - 1.0).powf(to_f64(&self.b)) / self.den_f.eval(eta)
    }

    /// Endpoint exponents `(a, b)`.
    pub fn exponents(&self) -> (&Rat, &Rat) {
        (&self.a, &self.b)
    }

    /// Integrand `p · weight`.
    pub fn integrand(&self, p: &RatPoly) -> HalfLineIntegrand {
        HalfLineIntegrand { a: self.a.clone(), b: self.b.clone(), num: p.clone(), den: self.den.clone() }
    }
}

fn require_positive(lam_o: &LambdaPair) -> Result<()> {
    if lam_o.quadrant() == Quadrant::I {
        Ok(())
    } else {
        Err(Error::InvalidLambda("λ_o must have positive components".into()))
    }
}

/// Builds the weight; [`Error::WeightPoleInInterval`] when the denominator vanishes on `[1, ∞)`.
pub fn weight(ws: &WeightSpec) -> Result<Weight> {
    match ws {
        WeightSpec::Xr { family, seed_m, lam_o } => {
            require_positive(lam_o)?;
            let (pm, pp) = transformed_exponents(*family, lam_o);
            let seed = family.seed_poly(*seed_m, lam_o)?;
            Weight::new(pm * int(2) - Rat::one(), pp * int(2) - Rat::one(), &seed * &seed)
        }
        WeightSpec::RJacobi { lam_o } => {
            require_positive(lam_o)?;
            Weight::new(-lam_o.minus().clone(), lam_o.plus().clone(), RatPoly::one())
        }
        WeightSpec::Xm { alpha, beta, n } => {
            let p = jacobi(*n, &JacobiParams::new(alpha + Rat::one(), beta - Rat::one()))?.reflect();
            Weight::new(-alpha - int(2), beta.clone(), &p * &p)
        }
    }
}

/// Integrates `p · w` over `[1, ∞)`; [`Error::DivergentIntegral`] when the exact gate fails.
pub fn integrate_semiinf(p: &RatPoly, w: &Weight, cfg: &QuadConfig) -> Result<crate::quadrature::QuadResult> {
    w.integrand(p).integrate(cfg)
}

/// Normalized Gram matrix with per-entry error estimates.
#[derive(Clone, Debug, PartialEq)]
pub struct GramReport {
    /// Row labels (level or index of each polynomial).
    pub labels: Vec<usize>,
    /// `⟨i,j⟩ / √(⟨i,i⟩⟨j,j⟩)`.
    pub matrix: Vec<Vec<f64>>,
    /// Unnormalized diagonal `⟨i,i⟩`.
    pub norms: Vec<f64>,
    /// Normalized quadrature error estimate of each entry.
    pub errors: Vec<Vec<f64>>,
    /// Largest `|matrix[i][j]|`, `i ≠ j`.
    pub max_off_diagonal: f64,
    /// Largest normalized error estimate.
    pub max_error: f64,
    /// Exact convergence flag for every candidate level `0..=v_max`; only convergent levels enter the matrix.
    pub convergent: Vec<bool>,
    /// Orthogonality claimed: positive norms, off-diagonals below [`OFF_DIAGONAL_TOL`], errors below [`ERROR_TOL`].
    pub pass: bool,
}

fn assemble(labels: Vec<usize>, polys: &[RatPoly], w: &Weight, convergent: Vec<bool>, cfg: &QuadConfig, strategy: Strategy) -> Result<GramReport> {
    let k = polys.len();
    let pairs: Vec<(usize, usize)> = (0..k).flat_map(|i| (i..k).map(move |j| (i, j))).collect();
    let raw = exec::map(strategy, &pairs, |&(i, j)| integrate_semiinf(&(&polys[i] * &polys[j]), w, cfg));
    let mut val = vec![vec![0.0; k]; k];
    let mut err = vec![vec![0.0; k]; k];
    for (&(i, j), r) in pairs.iter().zip(raw) {
        let r = r?;
        val[i][j] = r.value;
        val[j][i] = r.value;
        err[i][j] = r.error;
        err[j][i] = r.error;
    }
    let norms: Vec<f64> = (0..k).map(|i| val[i][i]).collect();
    let positive = norms.iter().all(|&n| n > 0.0 && n.is_finite());
    let mut matrix = vec![vec![0.0; k]; k];
    let mut errors = vec![vec![0.0; k]; k];
    let (mut max_off, mut max_err) = (0.0_f64, 0.0_f64);
    for i in 0..k {
        for j in 0..k {
            let s = (norms[i] * norms[j]).abs().sqrt();
            matrix[i][j] = val[i][j] / s;
            errors[i][j] = err[i][j] / s;
            max_err = max_err.max(errors[i][j]);
            if i != j {
                max_off = max_off.max(matrix[i][j].abs());
            }
        }
    }
    let pass = positive && max_off < OFF_DIAGONAL_TOL && max_err < ERROR_TOL;
    Ok(GramReport { labels, matrix, norms, errors, max_off_diagonal: max_off, max_error: max_err, convergent, pass })
}

/// Exact convergence of `⟨v, v⟩`: `2v + λ_+ − λ_- < −1`, i.e. `v < ½(λ_- − λ_+ − 1)`.
pub fn norm_converges(v: usize, lam_o: &LambdaPair) -> bool {
    int(v as i64) < half_gap(lam_o)
}

fn levels(lam_o: &LambdaPair) -> Result<(Vec<usize>, Vec<bool>)> {
    let hg = half_gap(lam_o);
    if hg.is_negative() {
        return Err(Error::EmptySpectrum(fmt_rat(&(hg * int(2)))));
    }
    let v_max: usize = crate::rational::floor(&hg).try_into().map_err(|_| Error::RangeViolation("too many levels".into()))?;
    let flags: Vec<bool> = (0..=v_max).map(|v| norm_converges(v, lam_o)).collect();
    let vs: Vec<usize> = (0..=v_max).filter(|&v| flags[v]).collect();
    if vs.len() < 2 {
        return Err(Error::RangeViolation(format!("need at least two normalizable levels, found {}", vs.len())));
    }
    Ok((vs, flags))
}

/// Gram matrix of one XR family over all normalizable levels.
pub fn gram(family: XrFamily, seed_m: usize, lam_o: &LambdaPair, cfg: &QuadConfig, strategy: Strategy) -> Result<GramReport> {
    require_positive(lam_o)?;
    let seed_spec = classify_derived(family.seed_sigma(), seed_m, lam_o)?;
    let adm = is_admissible(&seed_spec);
    if !adm.admissible {
        return Err(Error::AdmissibilityError(adm.diagnostics.join("; ")));
    }
    let (vs, flags) = levels(lam_o)?;
    let polys = vs.iter().map(|&v| xr_jacobi(family, seed_m, v, lam_o).map(|x| x.poly)).collect::<Result<Vec<_>>>()?;
    let w = weight(&WeightSpec::Xr { family, seed_m, lam_o: lam_o.clone() })?;
    assemble(vs, &polys, &w, flags, cfg, strategy)
}

/// Gram matrix of the Romanovski–Jacobi bound-state polynomials `P_v^{(λ_+, −λ_-)}`.
pub fn gram_r_jacobi(lam_o: &LambdaPair, cfg: &QuadConfig, strategy: Strategy) -> Result<GramReport> {
    require_positive(lam_o)?;
    let (vs, flags) = levels(lam_o)?;
    let prm = JacobiParams::new(lam_o.plus().clone(), -lam_o.minus().clone());
    let polys = vs.iter().map(|&v| jacobi(v, &prm)).collect::<Result<Vec<_>>>()?;
    let w = weight(&WeightSpec::RJacobi { lam_o: lam_o.clone() })?;
    assemble(vs, &polys, &w, flags, cfg, strategy)
}

/// Checks the cross-orthogonality preconditions `0 ≤ m < ½(α − β + 1)`, `α > m − 1`, `β > 0`.
pub fn check_cross_range(alpha: &Rat, beta: &Rat, m_list: &[usize]) -> Result<()> {
    let bound = (alpha - beta + Rat::one()) / int(2);
    if !beta.is_positive() {
        return Err(Error::RangeViolation(format!("β = {} must be positive", fmt_rat(beta))));
    }
    for &m in m_list {
        let mq = int(m as i64);
        if mq >= bound {
            return Err(Error::RangeViolation(format!("m = {m} must satisfy m < ½(α − β + 1) = {}", fmt_rat(&bound))));
        }
        if alpha <= &(&mq - Rat::one()) {
            return Err(Error::RangeViolation(format!("α = {} must exceed m − 1 = {}", fmt_rat(alpha), m as i64 - 1)));
        }
    }
    Ok(())
}

/// Cross-orthogonality of `P̂_{m,m+n}^{(α,β)}` over `(−∞, −1]` for the listed `m`, at fixed `n`.
///
/// Evaluated after the reflection `x = −η`, so the polynomials enter as `P̂(−η)` on `[1, ∞)`.
pub fn cross_ortho(alpha: &Rat, beta: &Rat, n: usize, m_list: &[usize], cfg: &QuadConfig, strategy: Strategy) -> Result<GramReport> {
    check_cross_range(alpha, beta, m_list)?;
    let prm = JacobiParams::new(alpha.clone(), beta.clone());
    let polys =
        m_list.iter().map(|&m| xm_jacobi(m, n, &prm).map(|x| x.poly.reflect())).collect::<Result<Vec<_>>>()?;
    let w = weight(&WeightSpec::Xm { alpha: alpha.clone(), beta: beta.clone(), n })?;
    assemble(m_list.to_vec(), &polys, &w, vec![true; m_list.len()], cfg, strategy)
}

/// Exact real-zero census of an X_m-Jacobi polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZeroCounts {
    /// Zeros on `(−∞, −1)`.
    pub left: usize,
    /// Zeros on `(−1, 1)`.
    pub inside: usize,
    /// Zeros on `(1, ∞)`.
    pub right: usize,
    /// Zeros exactly at `±1` (with multiplicity).
    pub at_endpoints: usize,
    /// Nonreal zeros (with multiplicity), `degree − real zeros`.
    pub complex: usize,
}

/// Sturm counts of `P̂_{m,m+n}^{(α,β)}` on `(−∞,−1)`, `(−1,1)`, `(1,∞)`.
pub fn exceptional_zero_count(m: usize, n: usize, alpha: &Rat, beta: &Rat) -> Result<ZeroCounts> {
    let p = xm_jacobi(m, n, &JacobiParams::new(alpha.clone(), beta.clone()))?.poly;
    let one = Rat::one();
    let count = |lo: ExtRat, hi: ExtRat| -> Result<usize> { sturm_count(&p, &Interval::open(lo, hi)?) };
    let left = count(ExtRat::NegInf, ExtRat::Finite(-one.clone()))?;
    let inside = count(ExtRat::Finite(-one.clone()), ExtRat::Finite(one.clone()))?;
    let right = count(ExtRat::Finite(one.clone()), ExtRat::PosInf)?;
    let at_endpoints = p.root_multiplicity(&-one.clone()) + p.root_multiplicity(&one);
    let real_mult = real_zero_multiplicity(&p)?;
    let deg = p.degree().ok_or(Error::ZeroPolynomial)?;
    Ok(ZeroCounts { left, inside, right, at_endpoints, complex: deg - real_mult })
}

// Number of real zeros counted with multiplicity, via the squarefree factorization p = Π f_k^k.
fn real_zero_multiplicity(p: &RatPoly) -> Result<usize> {
    let all = Interval::real_line();
    let mut total = 0;
    let mut cur = p.clone();
    // Pass k counts the distinct roots of multiplicity ≥ k.
    while cur.degree().unwrap_or(0) > 0 {
        let g = cur.gcd(&cur.differentiate());
        let sf = cur.exact_div(&g).ok_or(Error::ZeroPolynomial)?;
        total += sturm_count(&sf, &all)?;
        cur = g;
    }
    Ok(total)
}
