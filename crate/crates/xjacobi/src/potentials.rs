//! Hyperbolic Pöschl–Teller potentials, their rational Darboux deformations and a
//! finite-difference eigen-solver used as an independent numerical check.
//!
//! The Liouville change of variable `η = cosh 2r` (so that `dr/dη = √ρ` with
//! `ρ = 1/(4(η² − 1))`) and the gauge `ψ = ρ^{1/4} Φ` turn the canonical equation
//! `Φ″ + (I + Eρ)Φ = 0` into the Schrödinger equation `−ψ_rr + V ψ = E ψ` with
//!
//! `V[η] = −ρ^{−1} I[η] + 1 + 3/(η² − 1)`,
//!
//! the last two terms being the Schwarzian part of the change of variable. For the
//! reference fraction this is the h-PT potential
//! `V = (½ − 2λ_-²)/(η+1) + (2λ_+² − ½)/(η−1) = −h(h+1)/cosh²r + g(g−1)/sinh²r`,
//! with `h = λ_- − ½` and `g = λ_+ + ½`. A deformation replaces `I°` by the
//! transformed fraction `Î` of a nodeless seed, adding `−ρ^{−1}(Î − I°)`.
//!
//! Energies here are Schrödinger energies `E`; see [`schrodinger_energy`] for the
//! single place where they are related to the prime-convention `ε` of the seed
//! tables.

use num::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exec::{self, Strategy};
use crate::jacobi::LambdaPair;
use crate::rational::{fmt_rat, int, rat, to_f64, Rat};
use crate::ratfn::RatFn;
use crate::ratpoly::{ExtRat, Interval, RatPoly};
use crate::seeds::{is_admissible, spectrum, SeedSpec, SeedType};
use crate::sle::{self, csle_energy, csle_residual, ref_pfr, transformed_pfr, QuasiRationalFn, RefPfr};
use crate::xconstruct::{xr_jacobi, XrFamily};

/// Schrödinger energy of a level with prime-convention energy `ε`.
///
/// The energy reference is shifted so that the potential vanishes at infinity;
/// with the Liouville map used here this makes `E = ε − 1`, which is also the
/// canonical-form energy of the η-space equation.
pub fn schrodinger_energy(eps: &Rat) -> Rat {
    csle_energy(eps)
}

/// Schwarzian contribution `1 + 3/(η² − 1)` of the change of variable `η = cosh 2r`.
pub fn schwarzian_term() -> RatFn {
    let pole = RatFn::new(RatPoly::constant(int(3)), RatPoly::from_ints(&[-1, 0, 1])).expect("nonzero");
    &RatFn::constant(Rat::one()) + &pole
}

/// Potential `−ρ^{−1} I + 1 + 3/(η² − 1)` of an arbitrary polynomial fraction `I`.
pub fn liouville_potential(pfr: &RefPfr) -> RatFn {
    let rho_inv = RatFn::from_poly(RatPoly::from_ints(&[-4, 0, 4]));
    &(-&(&rho_inv * &pfr.func)) + &schwarzian_term()
}

/// Closed form `(½ − 2λ_-²)/(η+1) + (2λ_+² − ½)/(η−1)` of the undeformed potential.
pub fn h_pt_algebraic(lam_o: &LambdaPair) -> RatFn {
    let half = rat(1, 2);
    let lm = lam_o.minus();
    let lp = lam_o.plus();
    let a = RatFn::new(RatPoly::constant(&half - int(2) * lm * lm), RatPoly::from_ints(&[1, 1])).expect("nonzero");
    let b = RatFn::new(RatPoly::constant(int(2) * lp * lp - &half), RatPoly::from_ints(&[-1, 1])).expect("nonzero");
    &a + &b
}

/// `V(r) = −h(h+1)/cosh²r + g(g−1)/sinh²r` evaluated directly.
pub fn h_pt(r: f64, h: f64, g: f64) -> f64 {
    -h * (h + 1.0) / r.cosh().powi(2) + g * (g - 1.0) / r.sinh().powi(2)
}

/// Parameters `(h, g) = (λ_- − ½, λ_+ + ½)` of the r-space form.
pub fn hg_params(lam_o: &LambdaPair) -> (Rat, Rat) {
    (lam_o.minus() - rat(1, 2), lam_o.plus() + rat(1, 2))
}

/// Zero `(λ_0 − λ_1)/(λ_0 + λ_1 + 2)` of a degree-one seed `P_1^{(λ_1, λ_0)}`,
/// with `λ_0 = σ_-λ_-` and `λ_1 = σ_+λ_+`.
pub fn bqr_m1_zero(lam0: &Rat, lam1: &Rat) -> Result<Rat> {
    let d = lam0 + lam1 + int(2);
    if d.is_zero() {
        return Err(Error::DivisionByZero("λ_0 + λ_1 + 2 = 0".into()));
    }
    Ok((lam0 - lam1) / d)
}

/// Whether a degree-one seed is one of the single-level cases accepted without full
/// admissibility: d' with `2 < λ_- + λ_+ < 3`, or d with `½ < λ_+ < 1` or `0 < λ_- < λ_+ − 2`.
fn bqr_single_level(seed: &SeedSpec) -> bool {
    if seed.m != 1 {
        return false;
    }
    let (lm, lp) = (seed.lam_o.minus(), seed.lam_o.plus());
    match seed.type_tag {
        SeedType::DPrime => {
            let s = lm + lp;
            s > int(2) && s < int(3)
        }
        SeedType::D => (lp > &rat(1, 2) && lp < &Rat::one()) || (lm.is_positive() && lm < &(lp - int(2))),
        _ => false,
    }
}

/// A seed deformation of the h-PT potential.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Deformation {
    /// The factorization seed.
    pub seed: SeedSpec,
    /// Transformed polynomial fraction `Î`.
    pub pfr: RefPfr,
    /// Accepted as a degree-one single-level case rather than by full admissibility.
    pub single_level: bool,
}

/// An undeformed or rationally deformed h-PT potential.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PotentialSpec {
    /// Exponent differences of the undeformed potential.
    pub base: LambdaPair,
    /// Seed deformation, if any.
    pub deformation: Option<Deformation>,
    /// Algebraic form `V^L[η]`.
    pub v_eta: RatFn,
    /// The same potential as a function of `t = η − 1 = 2 sinh²r`, for accurate evaluation near `r = 0`.
    pub v_t: RatFn,
    /// Notes from construction.
    pub diagnostics: Vec<String>,
}

fn shift_to_t(f: &RatFn) -> RatFn {
    let one = Rat::one();
    RatFn::new(f.num().compose_affine(&one, &one), f.den().compose_affine(&one, &one)).expect("nonzero")
}

fn eval_ratfn(f: &RatFn, x: f64) -> f64 {
    f.num().eval_f64(x) / f.den().eval_f64(x)
}

/// Builds the potential, deformed by `seed` when given.
///
/// The seed must be admissible, or one of the degree-one single-level cases, which
/// are accepted with a diagnostic. The deformation term is checked to have no poles
/// on `η ∈ (1, ∞)`.
pub fn build_potential(lam_o: &LambdaPair, seed: Option<&SeedSpec>) -> Result<PotentialSpec> {
    if !(lam_o.minus().is_positive() && lam_o.plus().is_positive()) {
        return Err(Error::InvalidLambda(format!(
            "potential requires λ_± > 0, got ({}, {})",
            fmt_rat(lam_o.minus()),
            fmt_rat(lam_o.plus())
        )));
    }
    let base_v = h_pt_algebraic(lam_o);
    let mut diagnostics = Vec::new();
    let (v_eta, deformation) = match seed {
        None => (base_v, None),
        Some(s) => {
            if &s.lam_o != lam_o {
                return Err(Error::AdmissibilityError("seed belongs to a different λ_o".into()));
            }
            let adm = is_admissible(s);
            let single_level = !adm.admissible && bqr_single_level(s);
            if !adm.admissible && !single_level {
                return Err(Error::AdmissibilityError(format!(
                    "{} seed m = {}: {}",
                    s.type_tag,
                    s.m,
                    adm.diagnostics.join("; ")
                )));
            }
            if single_level {
                diagnostics.push(format!("degree-one {} seed accepted as a single-level case", s.type_tag));
            }
            let pfr = transformed_pfr(s)?;
            let rho_inv = RatFn::from_poly(RatPoly::from_ints(&[-4, 0, 4]));
            let delta = &rho_inv * &(&pfr.func - &ref_pfr(lam_o).func);
            let domain = Interval::open(ExtRat::Finite(Rat::one()), ExtRat::PosInf)?;
            if delta.pole_count(&domain) > 0 {
                return Err(Error::PoleInDomain);
            }
            (&base_v - &delta, Some(Deformation { seed: s.clone(), pfr, single_level }))
        }
    };
    let v_t = shift_to_t(&v_eta);
    Ok(PotentialSpec { base: lam_o.clone(), deformation, v_eta, v_t, diagnostics })
}

impl PotentialSpec {
    /// Polynomial fraction of the η-space equation behind this potential.
    pub fn pfr(&self) -> RefPfr {
        match &self.deformation {
            Some(d) => d.pfr.clone(),
            None => ref_pfr(&self.base),
        }
    }

    /// `V^L[η]` in floating point.
    pub fn eval_eta(&self, eta: f64) -> f64 {
        eval_ratfn(&self.v_eta, eta)
    }

    /// `V(r)` with `η = cosh 2r`, evaluated through `t = 2 sinh²r`.
    pub fn eval_r(&self, r: f64) -> f64 {
        let s = r.sinh();
        eval_ratfn(&self.v_t, 2.0 * s * s)
    }

    /// `V^L[η] → 0` as `η → ∞`.
    pub fn vanishes_at_infinity(&self) -> bool {
        match (self.v_eta.num().degree(), self.v_eta.den().degree()) {
            (None, _) => true,
            (Some(n), Some(d)) => n < d,
            _ => false,
        }
    }

    /// Analytic Schrödinger energies of the bound levels, lowest first.
    ///
    /// Darboux transforms by admissible seeds keep the spectrum of the reference problem.
    pub fn analytic_energies(&self) -> Result<Vec<Rat>> {
        Ok(spectrum(&self.base)?.energies.iter().map(schrodinger_energy).collect())
    }
}

/// `Some(c)` when `a − b` is the constant `c`.
pub fn constant_difference(a: &RatFn, b: &RatFn) -> Option<Rat> {
    let d = a - b;
    if d.is_zero() {
        return Some(Rat::zero());
    }
    match (d.num().degree(), d.den().degree()) {
        (Some(0), Some(0)) => Some(d.num().coeff(0) / d.den().coeff(0)),
        _ => None,
    }
}

/// The Liouville identity: the potential of the reference fraction equals the closed form.
pub fn liouville_identity_holds(lam_o: &LambdaPair) -> bool {
    liouville_potential(&ref_pfr(lam_o)) == h_pt_algebraic(lam_o)
}

/// Closed-form bound state of a potential.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EigenfunctionForm {
    /// Level index.
    pub v: usize,
    /// XR family of the deformation, `None` for the undeformed potential.
    pub family: Option<XrFamily>,
    /// η-space canonical solution `Φ`.
    pub phi: QuasiRationalFn,
    /// Prime-convention energy `ε_v`.
    pub eps: Rat,
    /// Schrödinger energy.
    pub energy: Rat,
    /// Exponent of `sinh r` in the r-space prefactor.
    pub sinh_exp: Rat,
    /// Exponent of `cosh r` in the r-space prefactor (entering as `cosh^{−k} r`).
    pub cosh_exp: Rat,
}

impl EigenfunctionForm {
    /// Schrödinger-gauge form `ψ ∝ ρ^{1/4}Φ = (1+η)^{p_- − ¼}(η−1)^{p_+ − ¼} N/D`.
    pub fn psi(&self) -> QuasiRationalFn {
        let q = rat(1, 4);
        QuasiRationalFn::from_ratfn(&self.phi.p_minus - &q, &self.phi.p_plus - &q, self.phi.rational_part().clone())
    }

    /// `ψ(r) = sinh^{a} r · cosh^{−b} r · N(η)/D(η)` with `η = cosh 2r`, up to normalization.
    pub fn eval_r(&self, r: f64) -> f64 {
        let eta = (2.0 * r).cosh();
        let f = self.phi.rational_part();
        r.sinh().powf(to_f64(&self.sinh_exp)) / r.cosh().powf(to_f64(&self.cosh_exp)) * eval_ratfn(f, eta)
    }

    /// Exact canonical-form residual against the fraction of `spec`.
    pub fn residual(&self, spec: &PotentialSpec) -> Result<QuasiRationalFn> {
        csle_residual(&self.phi, &self.eps, &spec.pfr())
    }
}

/// Closed-form eigenfunction of level `v`.
///
/// The undeformed case takes `0 ≤ v ≤ v_max`; deformations by seeds of families a,
/// a' and b use the XR polynomials of that family, whose level range is
/// `v < ½(λ_- − λ_+ − 1)`.
pub fn eigenfunction(spec: &PotentialSpec, v: usize) -> Result<EigenfunctionForm> {
    let sp = spectrum(&spec.base)?;
    if v > sp.v_max {
        return Err(Error::RangeViolation(format!("level v = {v} exceeds v_max = {}", sp.v_max)));
    }
    let eps = sp.energies[v].clone();
    let (phi, family) = match &spec.deformation {
        None => (sle::eigenfunction(v, &spec.base)?, None),
        Some(d) => {
            let family = sle::xr_family_of(d.seed.type_tag).ok_or_else(|| {
                Error::RangeViolation(format!("no closed-form eigenfunctions for {} deformations", d.seed.type_tag))
            })?;
            let xr = xr_jacobi(family, d.seed.m, v, &spec.base)?;
            (sle::xr_eigenfunction(family, &d.seed, &xr.poly)?, Some(family))
        }
    };
    let q = rat(1, 4);
    let sinh_exp = int(2) * (&phi.p_plus - &q);
    let cosh_exp = -int(2) * (&phi.p_minus - &q);
    let energy = schrodinger_energy(&eps);
    Ok(EigenfunctionForm { v, family, phi, eps, energy, sinh_exp, cosh_exp })
}

/// Uniform grid `r_min < r < r_max` with `n` intervals and Dirichlet conditions at both ends.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FdGrid {
    /// Left end.
    pub r_min: f64,
    /// Right end.
    pub r_max: f64,
    /// Number of intervals of the coarse grid; the fine grid uses `2n`.
    pub n: usize,
}

impl FdGrid {
    /// The grid of the acceptance runs: `[10⁻³, 12]`, 4000 intervals.
    pub const DEFAULT: FdGrid = FdGrid { r_min: 1e-3, r_max: 12.0, n: 4000 };
}

/// Minimum number of intervals accepted by [`fd_spectrum`].
pub const MIN_INTERVALS: usize = 2000;

/// Largest allowed `|E_{2N} − E_N| / max(1, |E_{2N}|)` before the grid is declared too coarse.
pub const RICHARDSON_TOL: f64 = 1e-2;

/// Finite-difference eigenvalues on the coarse and fine grids and their Richardson extrapolation.
#[derive(Clone, Debug, PartialEq)]
pub struct FdSpectrum {
    /// The grid (coarse resolution).
    pub grid: FdGrid,
    /// Eigenvalues with `n` intervals.
    pub coarse: Vec<f64>,
    /// Eigenvalues with `2n` intervals.
    pub fine: Vec<f64>,
    /// `(4 E_{2N} − E_N)/3`.
    pub extrapolated: Vec<f64>,
}

/// Number of eigenvalues of a symmetric tridiagonal matrix (diagonal `a`, constant
/// off-diagonal `b`) strictly below `x`, from the signs of the `LDLᵀ` pivots.
fn count_below(a: &[f64], b: f64, x: f64) -> usize {
    let b2 = b * b;
    let tiny = f64::MIN_POSITIVE.sqrt() * b.abs().max(1.0);
    let mut count = 0;
    let mut d = 1.0;
    for (i, &ai) in a.iter().enumerate() {
        d = if i == 0 { ai - x } else { ai - x - b2 / d };
        if d == 0.0 {
            d = -tiny;
        }
        if d < 0.0 {
            count += 1;
        }
    }
    count
}

/// Lowest `k` eigenvalues of `−ψ″ + V ψ` on a uniform grid with `n` intervals and
/// Dirichlet ends, by bisection on the Sturm count of the tridiagonal matrix.
pub fn fd_eigenvalues<V: Fn(f64) -> f64>(potential: V, r_min: f64, r_max: f64, n: usize, k: usize) -> Vec<f64> {
    let h = (r_max - r_min) / n as f64;
    let inv_h2 = 1.0 / (h * h);
    let a: Vec<f64> = (1..n).map(|i| 2.0 * inv_h2 + potential(r_min + i as f64 * h)).collect();
    let b = -inv_h2;
    let lo0 = a.iter().cloned().fold(f64::INFINITY, f64::min) - 2.0 * b.abs();
    let hi0 = a.iter().cloned().fold(f64::NEG_INFINITY, f64::max) + 2.0 * b.abs();
    (0..k.min(a.len()))
        .map(|j| {
            let (mut lo, mut hi) = (lo0, hi0);
            for _ in 0..200 {
                let mid = 0.5 * (lo + hi);
                if mid <= lo || mid >= hi {
                    break;
                }
                if count_below(&a, b, mid) > j {
                    hi = mid;
                } else {
                    lo = mid;
                }
            }
            0.5 * (lo + hi)
        })
        .collect()
}

/// Lowest `k` finite-difference eigenvalues of an arbitrary potential, at `n` and `2n`
/// intervals, with Richardson extrapolation and the coarse-grid gate.
pub fn fd_spectrum_fn<V: Fn(f64) -> f64>(potential: V, grid: FdGrid, k: usize) -> Result<FdSpectrum> {
    if !(grid.r_min < grid.r_max) || grid.n < 2 {
        return Err(Error::RangeViolation("grid needs r_min < r_max and at least two intervals".into()));
    }
    let coarse = fd_eigenvalues(&potential, grid.r_min, grid.r_max, grid.n, k);
    let fine = fd_eigenvalues(&potential, grid.r_min, grid.r_max, 2 * grid.n, k);
    for (j, (c, f)) in coarse.iter().zip(&fine).enumerate() {
        if (f - c).abs() > RICHARDSON_TOL * f.abs().max(1.0) {
            return Err(Error::GridTooCoarse(format!("level {j}: E_N = {c:.17e}, E_2N = {f:.17e}")));
        }
    }
    let extrapolated = coarse.iter().zip(&fine).map(|(c, f)| (4.0 * f - c) / 3.0).collect();
    Ok(FdSpectrum { grid, coarse, fine, extrapolated })
}

/// Lowest `k` finite-difference eigenvalues of a potential. Requires `n ≥ 2000` and
/// `V(r_max) ≈ 0`.
pub fn fd_spectrum(spec: &PotentialSpec, grid: FdGrid, k: usize) -> Result<FdSpectrum> {
    if grid.n < MIN_INTERVALS {
        return Err(Error::GridTooCoarse(format!("{} intervals < {MIN_INTERVALS}", grid.n)));
    }
    if !(grid.r_min > 0.0) {
        return Err(Error::RangeViolation("r_min must be positive".into()));
    }
    fd_spectrum_fn(|r| spec.eval_r(r), grid, k)
}

/// [`fd_spectrum`] over several potentials; each solve is single-threaded, the batch
/// is distributed according to `strategy`.
pub fn fd_sweep(specs: &[PotentialSpec], grid: FdGrid, k: usize, strategy: Strategy) -> Vec<Result<FdSpectrum>> {
    exec::map(strategy, specs, |s| fd_spectrum(s, grid, k))
}

/// Relative deviation `|x − e|/|e|` (absolute when `e = 0`).
pub fn relative_error(x: f64, e: f64) -> f64 {
    if e == 0.0 {
        (x - e).abs()
    } else {
        ((x - e) / e).abs()
    }
}
