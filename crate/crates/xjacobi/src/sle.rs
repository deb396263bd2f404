//! Canonical Sturm–Liouville equations of the Romanovski reference problem and of
//! its rational Darboux transforms, with exact residual checks.
//!
//! The reference equation in canonical form is
//! `Φ″ + (I°[η] + E ρ[η]) Φ = 0`, with density `ρ = 1/(4(η² − 1))` and the
//! reference polynomial fraction
//! `I° = (1−λ_-²)/(4(η+1)²) + (1−λ_+²)/(4(η−1)²) + (λ_-² + λ_+² − 1)/(4(η² − 1))`.
//! Throughout, stored energies use the prime convention `ε` of the seed tables;
//! the canonical-form energy is `E = ε − 1` (see [`csle_energy`]).
//!
//! Everything here is exact: solutions are [`QuasiRationalFn`]s whose exponents
//! stay rational, so "satisfies the equation" becomes "the residual numerator is
//! the zero polynomial".

use num::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exec::{self, Strategy};
use crate::jacobi::{jacobi, IdentityFailure, IdentityReport, JacobiParams, LambdaPair};
use crate::rational::{int, rat, to_f64, Rat};
use crate::ratfn::RatFn;
use crate::ratpoly::RatPoly;
use crate::seeds::{classify_derived, spectrum, SeedSpec, SeedType};
use crate::xconstruct::{check_xr_seed_range, xr_jacobi, SigmaPair, XPolyResult, XrFamily};

/// `(1+η)^{p_-} (η−1)^{p_+} · N(η)/D(η)` with rational exponents.
///
/// Powers of `(η ± 1)` are kept in the exponents: after normalization neither
/// `N` nor `D` vanishes at `η = ±1`, `D` is monic and `gcd(N, D) = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuasiRationalFn {
    /// Exponent of `(1 + η)`.
    pub p_minus: Rat,
    /// Exponent of `(η − 1)`.
    pub p_plus: Rat,
    r: RatFn,
}

fn linear_at(r: i64) -> RatPoly {
    RatPoly::linear(int(-r), Rat::one())
}

fn strip_root(p: &RatPoly, r: i64) -> (RatPoly, i64) {
    if p.is_zero() {
        return (p.clone(), 0);
    }
    let k = p.root_multiplicity(&int(r));
    let mut q = p.clone();
    let lin = linear_at(r);
    for _ in 0..k {
        q = q.exact_div(&lin).expect("root divides");
    }
    (q, k as i64)
}

impl QuasiRationalFn {
    /// Builds and normalizes `(1+η)^{p_-}(η−1)^{p_+} num/den`.
    pub fn new(p_minus: Rat, p_plus: Rat, num: RatPoly, den: RatPoly) -> Result<Self> {
        Ok(Self::from_ratfn(p_minus, p_plus, RatFn::new(num, den)?))
    }

    /// Builds from a rational-function factor.
    pub fn from_ratfn(p_minus: Rat, p_plus: Rat, r: RatFn) -> Self {
        let mut s = Self { p_minus, p_plus, r };
        s.normalize();
        s
    }

    fn normalize(&mut self) {
        if self.r.is_zero() {
            self.p_minus = Rat::zero();
            self.p_plus = Rat::zero();
            return;
        }
        let (n1, a1) = strip_root(self.r.num(), -1);
        let (n2, b1) = strip_root(&n1, 1);
        let (d1, a2) = strip_root(self.r.den(), -1);
        let (d2, b2) = strip_root(&d1, 1);
        self.p_minus = &self.p_minus + int(a1 - a2);
        self.p_plus = &self.p_plus + int(b1 - b2);
        self.r = RatFn::new(n2, d2).expect("nonzero denominator");
    }

    /// Numerator of the rational factor.
    pub fn num(&self) -> &RatPoly {
        self.r.num()
    }

    /// Monic denominator of the rational factor.
    pub fn den(&self) -> &RatPoly {
        self.r.den()
    }

    /// Rational factor `N/D`.
    pub fn rational_part(&self) -> &RatFn {
        &self.r
    }

    /// `true` when the function vanishes identically.
    pub fn is_zero(&self) -> bool {
        self.r.is_zero()
    }

    /// Logarithmic derivative of the power prefactor, `p_-/(η+1) + p_+/(η−1)`.
    fn prefactor_log_derivative(&self) -> RatFn {
        let a = RatFn::new(RatPoly::constant(self.p_minus.clone()), linear_at(-1)).expect("nonzero");
        let b = RatFn::new(RatPoly::constant(self.p_plus.clone()), linear_at(1)).expect("nonzero");
        &a + &b
    }

    /// Exact first derivative.
    pub fn derivative(&self) -> Self {
        let l = self.prefactor_log_derivative();
        let r = &self.r.derivative() + &(&self.r * &l);
        Self::from_ratfn(self.p_minus.clone(), self.p_plus.clone(), r)
    }

    /// Exact second derivative.
    pub fn second_derivative(&self) -> Self {
        self.derivative().derivative()
    }

    /// `self · g` for a rational function `g`.
    pub fn mul_ratfn(&self, g: &RatFn) -> Self {
        Self::from_ratfn(self.p_minus.clone(), self.p_plus.clone(), &self.r * g)
    }

    /// Product of two quasi-rational functions.
    pub fn mul(&self, other: &Self) -> Self {
        Self::from_ratfn(&self.p_minus + &other.p_minus, &self.p_plus + &other.p_plus, &self.r * &other.r)
    }

    /// Sum; the exponents must differ by integers.
    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.is_zero() {
            return Ok(other.clone());
        }
        if other.is_zero() {
            return Ok(self.clone());
        }
        let dm = &other.p_minus - &self.p_minus;
        let dp = &other.p_plus - &self.p_plus;
        if !dm.is_integer() || !dp.is_integer() {
            return Err(Error::RangeViolation("exponents differ by a non-integer".into()));
        }
        let pm = if dm.is_negative() { other.p_minus.clone() } else { self.p_minus.clone() };
        let pp = if dp.is_negative() { other.p_plus.clone() } else { self.p_plus.clone() };
        let lift = |q: &Self| -> RatFn {
            let em = (&q.p_minus - &pm).to_integer();
            let ep = (&q.p_plus - &pp).to_integer();
            let em: usize = em.try_into().expect("nonnegative shift");
            let ep: usize = ep.try_into().expect("nonnegative shift");
            let f = &linear_at(-1).pow(em) * &linear_at(1).pow(ep);
            &q.r * &RatFn::from_poly(f)
        };
        let sum = &lift(self) + &lift(other);
        Ok(Self::from_ratfn(pm, pp, sum))
    }

    /// `Some(c)` when `self = c · other` for a rational constant `c ≠ 0`.
    pub fn ratio_constant(&self, other: &Self) -> Option<Rat> {
        if self.is_zero() || other.is_zero() {
            return None;
        }
        if self.p_minus != other.p_minus || self.p_plus != other.p_plus {
            return None;
        }
        let q = self.r.div(&other.r).ok()?;
        if q.num().degree() == Some(0) && q.den().degree() == Some(0) {
            Some(q.num().coeff(0))
        } else {
            None
        }
    }

    /// `self / other` as a rational function; the exponents must differ by integers.
    pub fn ratio_rational(&self, other: &Self) -> Result<RatFn> {
        let dm = &self.p_minus - &other.p_minus;
        let dp = &self.p_plus - &other.p_plus;
        if !dm.is_integer() || !dp.is_integer() {
            return Err(Error::RangeViolation("exponents differ by a non-integer".into()));
        }
        let split = |d: &Rat, root: i64| -> (RatPoly, RatPoly) {
            let k: i64 = d.to_integer().try_into().expect("small exponent shift");
            let f = linear_at(root).pow(k.unsigned_abs() as usize);
            if k >= 0 {
                (f, RatPoly::one())
            } else {
                (RatPoly::one(), f)
            }
        };
        let (nm, dm_) = split(&dm, -1);
        let (np, dp_) = split(&dp, 1);
        let shift = RatFn::new(&nm * &np, &dm_ * &dp_)?;
        Ok(&self.r.div(&other.r)? * &shift)
    }

    /// Floating-point value at `η > 1`.
    pub fn eval_f64(&self, eta: f64) -> f64 {
        let n = self.r.num().eval_f64(eta);
        let d = self.r.den().eval_f64(eta);
        (1.0 + eta).powf(to_f64(&self.p_minus)) * (eta - 1.0).powf(to_f64(&self.p_plus)) * n / d
    }
}

/// Density `ρ = 1/(4(η² − 1))`.
pub fn rho() -> RatFn {
    RatFn::new(RatPoly::one(), RatPoly::from_ints(&[-4, 0, 4])).expect("nonzero")
}

/// Canonical-form energy `E = ε − 1` for a prime-convention energy `ε`.
pub fn csle_energy(eps: &Rat) -> Rat {
    eps - Rat::one()
}

/// Reference polynomial fraction, base or Darboux-transformed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RefPfr {
    /// Exponent differences of the reference problem.
    pub lam_o: LambdaPair,
    /// Seed `(σ, m)` of the transform, `None` for the base fraction.
    pub seed: Option<(SigmaPair, usize)>,
    /// The fraction as an exact rational function of `η`.
    pub func: RatFn,
}

fn sqrt_rat(x: &Rat) -> Option<Rat> {
    if x.is_negative() {
        return None;
    }
    let (n, d) = (x.numer().clone(), x.denom().clone());
    let (sn, sd) = (n.sqrt(), d.sqrt());
    if &sn * &sn == n && &sd * &sd == d {
        Some(Rat::new(sn, sd))
    } else {
        None
    }
}

impl RefPfr {
    /// `lim_{η→∞} η² I`; equals ¼ for every well-formed fraction.
    pub fn eta2_limit(&self) -> Option<Rat> {
        self.func.eta2_limit()
    }

    /// Double-pole coefficient at `η = r`.
    pub fn pole_strength(&self, r: i64) -> Option<Rat> {
        self.func.double_pole_coeff(&int(r))
    }

    /// Exponent difference `λ ≥ 0` read off the double pole at `η = r ∈ {−1, +1}`
    /// from `(1 − λ²)/4`; `None` when `λ` is irrational or the pole is too strong.
    pub fn exp_diff(&self, r: i64) -> Option<Rat> {
        let c = self.pole_strength(r)?;
        sqrt_rat(&(Rat::one() - c * int(4)))
    }
}

fn base_fraction(lm: &Rat, lp: &Rat) -> RatFn {
    let one = Rat::one();
    let a = RatFn::new(RatPoly::constant((&one - lm * lm) / int(4)), RatPoly::from_ints(&[1, 2, 1])).expect("nonzero");
    let b = RatFn::new(RatPoly::constant((&one - lp * lp) / int(4)), RatPoly::from_ints(&[1, -2, 1])).expect("nonzero");
    let c =
        RatFn::new(RatPoly::constant((lm * lm + lp * lp - &one) / int(4)), RatPoly::from_ints(&[-1, 0, 1])).expect("nonzero");
    &(&a + &b) + &c
}

/// Base reference fraction `I°[η; λ_o]`.
pub fn ref_pfr(lam_o: &LambdaPair) -> RefPfr {
    RefPfr { lam_o: lam_o.clone(), seed: None, func: base_fraction(lam_o.minus(), lam_o.plus()) }
}

/// The seed solution `φ = (1+η)^{½(σ_-λ_-+1)} (η−1)^{½(σ_+λ_++1)} Π_m`.
pub fn seed_function(seed: &SeedSpec) -> Result<QuasiRationalFn> {
    let l = seed.lam_o.signed(seed.sigma.minus(), seed.sigma.plus());
    let pi = seed.poly()?;
    QuasiRationalFn::new((l.minus() + Rat::one()) / int(2), (l.plus() + Rat::one()) / int(2), pi, RatPoly::one())
}

/// Reciprocal factorization function `(1+η)^{−½σ_-λ_-} (η−1)^{−½σ_+λ_+} / Π_m` of the inverse transform.
pub fn reciprocal_seed_function(seed: &SeedSpec) -> Result<QuasiRationalFn> {
    let l = seed.lam_o.signed(seed.sigma.minus(), seed.sigma.plus());
    let pi = seed.poly()?;
    QuasiRationalFn::new(-l.minus() / int(2), -l.plus() / int(2), RatPoly::one(), pi)
}

/// `ρ^{−1/2} = 2 (1+η)^{1/2} (η−1)^{1/2}`.
pub fn rho_inv_sqrt() -> QuasiRationalFn {
    QuasiRationalFn::from_ratfn(rat(1, 2), rat(1, 2), RatFn::constant(int(2)))
}

/// Checks that the seed and its reciprocal multiply to a constant multiple of `ρ^{−1/2}`.
pub fn reciprocity_holds(seed: &SeedSpec) -> Result<bool> {
    let prod = seed_function(seed)?.mul(&reciprocal_seed_function(seed)?);
    Ok(prod.ratio_constant(&rho_inv_sqrt()).is_some())
}

/// The polynomial `Ô` of the transformed fraction:
/// `Ô = −(E + 2σ_-σ_+λ_-λ_+) Π − 4[(η+1)σ_+λ_+ + (η−1)σ_-λ_-] Π′`, with `E` the seed's canonical energy.
pub fn o_hat(seed: &SeedSpec) -> Result<RatPoly> {
    let pi = seed.poly()?;
    let l = seed.lam_o.signed(seed.sigma.minus(), seed.sigma.plus());
    let e = csle_energy(&seed.energy);
    let c0 = -(e + int(2) * l.minus() * l.plus());
    let lin = RatPoly::linear(l.plus() - l.minus(), l.plus() + l.minus()).scale(&int(4));
    Ok(&pi.scale(&c0) - &(&lin * &pi.differentiate()))
}

/// Closed form of the `η^m` coefficient of [`o_hat`]:
/// `(−E − 2σ_-σ_+λ_-λ_+ − 4m(σ_+λ_+ + σ_-λ_-)) · lc(Π_m)`.
pub fn o_hat_leading(seed: &SeedSpec) -> Result<Rat> {
    let pi = seed.poly()?;
    let l = seed.lam_o.signed(seed.sigma.minus(), seed.sigma.plus());
    let e = csle_energy(&seed.energy);
    let m = int(seed.m as i64);
    let c = -e - int(2) * l.minus() * l.plus() - int(4) * m * (l.plus() + l.minus());
    Ok(c * pi.leading_coeff().expect("nonzero"))
}

/// Transformed reference fraction
/// `Î = (1−λ̂_-²)/(4(η+1)²) + (1−λ̂_+²)/(4(η−1)²) − Ô/(4(1−η²)Π) + Π″/Π − 2Π′²/Π²`,
/// with `λ̂_± = |σ_±λ_± + 1|`.
pub fn transformed_pfr(seed: &SeedSpec) -> Result<RefPfr> {
    let pi = seed.poly()?;
    let l = seed.lam_o.signed(seed.sigma.minus(), seed.sigma.plus());
    let hm = (l.minus() + Rat::one()).abs();
    let hp = (l.plus() + Rat::one()).abs();
    let one = Rat::one();
    let a = RatFn::new(RatPoly::constant((&one - &hm * &hm) / int(4)), RatPoly::from_ints(&[1, 2, 1]))?;
    let b = RatFn::new(RatPoly::constant((&one - &hp * &hp) / int(4)), RatPoly::from_ints(&[1, -2, 1]))?;
    let o = RatFn::new(o_hat(seed)?, &RatPoly::from_ints(&[4, 0, -4]) * &pi)?;
    let d1 = pi.differentiate();
    let d2 = d1.differentiate();
    let t1 = RatFn::new(d2, pi.clone())?;
    let t2 = RatFn::new((&d1 * &d1).scale(&int(2)), &pi * &pi)?;
    let func = &(&(&(&a + &b) - &o) + &t1) - &t2;
    Ok(RefPfr { lam_o: seed.lam_o.clone(), seed: Some((seed.sigma, seed.m)), func })
}

/// The same transformed fraction obtained directly from the Darboux construction:
/// with `f = ρ^{−1/2}/φ` solving the transformed equation at the seed energy `E`,
/// `Î = −f″/f − E ρ`.
pub fn darboux_pfr(seed: &SeedSpec) -> Result<RefPfr> {
    let f = reciprocal_seed_function(seed)?;
    let f2 = f.second_derivative();
    let ratio = f2.ratio_rational(&f)?;
    let e = csle_energy(&seed.energy);
    let func = &(-&ratio) - &rho().scale(&e);
    Ok(RefPfr { lam_o: seed.lam_o.clone(), seed: Some((seed.sigma, seed.m)), func })
}

/// Canonical-form residual `Φ″ + (I + E ρ) Φ` at prime energy `ε`, with `E = ε − 1`.
///
/// The numerator of the result is the zero polynomial exactly when `Φ` solves the equation.
pub fn csle_residual(phi: &QuasiRationalFn, eps: &Rat, pfr: &RefPfr) -> Result<QuasiRationalFn> {
    let q = &pfr.func + &rho().scale(&csle_energy(eps));
    phi.second_derivative().add(&phi.mul_ratfn(&q))
}

/// Bound state `v` of the reference problem,
/// `(1+η)^{½(1−λ_-)} (η−1)^{½(1+λ_+)} P_v^{(λ_+, −λ_-)}`, at prime energy `1 − (λ_- − λ_+ − 2v − 1)²`.
pub fn eigenfunction(v: usize, lam_o: &LambdaPair) -> Result<QuasiRationalFn> {
    let p = jacobi(v, &JacobiParams::new(lam_o.plus().clone(), -lam_o.minus().clone()))?;
    QuasiRationalFn::new(
        (Rat::one() - lam_o.minus()) / int(2),
        (Rat::one() + lam_o.plus()) / int(2),
        p,
        RatPoly::one(),
    )
}

/// The XR family generated by a seed type, if any.
pub fn xr_family_of(tag: SeedType) -> Option<XrFamily> {
    match tag {
        SeedType::A => Some(XrFamily::A),
        SeedType::APrime => Some(XrFamily::APrime),
        SeedType::B => Some(XrFamily::B),
        _ => None,
    }
}

/// Exponents `(p_-, p_+)` of the transformed bound states `(1+η)^{p_-}(η−1)^{p_+} P/Π`:
/// `p_- = −½λ_- + κ_-`, `p_+ = ½λ_+ + κ_+`.
pub fn transformed_exponents(family: XrFamily, lam_o: &LambdaPair) -> (Rat, Rat) {
    let (km, kp) = family.kappa();
    (-lam_o.minus() / int(2) + int(km as i64), lam_o.plus() / int(2) + int(kp as i64))
}

/// Transformed bound state `(1+η)^{p_-}(η−1)^{p_+} P / Π_m` built on an XR polynomial `P`.
pub fn xr_eigenfunction(family: XrFamily, seed: &SeedSpec, xr: &RatPoly) -> Result<QuasiRationalFn> {
    let (pm, pp) = transformed_exponents(family, &seed.lam_o);
    QuasiRationalFn::new(pm, pp, xr.clone(), seed.poly()?)
}

/// Coefficients of the Heine-type equation
/// `(η² − 1) Π P″ + 2 B P′ + (C₀ + ¼(ε − 1) Π) P = 0`
/// satisfied by the XR polynomials `P` of one family at prime energy `ε`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeineCoeffs {
    /// First-derivative coefficient, degree `m + 1`.
    pub b: RatPoly,
    /// Zero-energy free term, degree `m`.
    pub c0: RatPoly,
    /// Seed polynomial `Π_m`.
    pub pi: RatPoly,
    /// Linear part `B̂ = p_-(η − 1) + p_+(η + 1)`.
    pub b_hat: RatPoly,
    /// Exponent at `η = −1`.
    pub p_minus: Rat,
    /// Exponent at `η = +1`.
    pub p_plus: Rat,
}

fn b_hat(pm: &Rat, pp: &Rat) -> RatPoly {
    RatPoly::linear(pp - pm, pm + pp)
}

fn require_squarefree(pi: &RatPoly) -> Result<()> {
    if pi.is_squarefree() {
        Ok(())
    } else {
        Err(Error::RepeatedRoot("seed polynomial must have simple roots".into()))
    }
}

/// Heine coefficients for the XR family generated by `seed` (types a, a', b).
///
/// `B = Π B̂ + (1 − η²) Π′` and `C₀ = ¼ Ô − 2 B̂ Π′ + 2 p_- p_+ Π`.
pub fn heine_coeffs(seed: &SeedSpec) -> Result<HeineCoeffs> {
    let family = xr_family_of(seed.type_tag)
        .ok_or_else(|| Error::NoSuchType(format!("type {} generates no XR family", seed.type_tag)))?;
    let pi = seed.poly()?;
    require_squarefree(&pi)?;
    let (pm, pp) = transformed_exponents(family, &seed.lam_o);
    let bh = b_hat(&pm, &pp);
    let d1 = pi.differentiate();
    let b = &(&pi * &bh) + &(&RatPoly::from_ints(&[1, 0, -1]) * &d1);
    let c0 = &(&o_hat(seed)?.scale(&rat(1, 4)) - &(&bh * &d1).scale(&int(2))) + &pi.scale(&(int(2) * &pm * &pp));
    Ok(HeineCoeffs { b, c0, pi, b_hat: bh, p_minus: pm, p_plus: pp })
}

/// Heine coefficients from first principles for a gauge `h = (1+η)^{p_-}(η−1)^{p_+}/Π` and an
/// arbitrary fraction `I`: `B = (η² − 1) Π h′/h`, `C₀ = (η² − 1) Π (h″/h + I)`.
///
/// Errors with [`Error::RangeViolation`] when `C₀` fails to be a polynomial, i.e. the gauge
/// does not match the fraction.
pub fn heine_coeffs_direct(p_minus: Rat, p_plus: Rat, pi: &RatPoly, pfr: &RefPfr) -> Result<HeineCoeffs> {
    let bh = b_hat(&p_minus, &p_plus);
    let d1 = pi.differentiate();
    let b = &(pi * &bh) + &(&RatPoly::from_ints(&[1, 0, -1]) * &d1);
    let h = QuasiRationalFn::new(p_minus.clone(), p_plus.clone(), RatPoly::one(), pi.clone())?;
    let h2 = h.second_derivative();
    let ratio = h2.ratio_rational(&h)?;
    let c = &(&ratio + &pfr.func) * &RatFn::from_poly(&RatPoly::from_ints(&[-1, 0, 1]) * pi);
    if c.den().degree() != Some(0) {
        return Err(Error::RangeViolation("free term is not a polynomial for this gauge".into()));
    }
    Ok(HeineCoeffs { b, c0: c.num().clone(), pi: pi.clone(), b_hat: bh, p_minus, p_plus })
}

/// Residual `(η² − 1) Π P″ + 2 B P′ + (C₀ + ¼(ε − 1) Π) P` at prime energy `ε`.
pub fn heine_residual(p: &RatPoly, hc: &HeineCoeffs, eps: &Rat) -> RatPoly {
    let d1 = p.differentiate();
    let d2 = d1.differentiate();
    let lead = &RatPoly::from_ints(&[-1, 0, 1]) * &hc.pi;
    let free = &hc.c0 + &hc.pi.scale(&(csle_energy(eps) / int(4)));
    &(&(&lead * &d2) + &(&hc.b * &d1).scale(&int(2))) + &(&free * p)
}

/// [`heine_residual`] for an XR polynomial generated by `seed`.
pub fn heine_residual_xr(x: &XPolyResult, seed: &SeedSpec, eps: &Rat) -> Result<RatPoly> {
    Ok(heine_residual(&x.poly, &heine_coeffs(seed)?, eps))
}

/// Prime-form free term `q̃ = −(η − 1) I + 1/(4(η − 1))`.
pub fn prime_free_term(pfr: &RefPfr) -> RatFn {
    let lin = RatFn::from_poly(linear_at(1));
    let inv = RatFn::new(RatPoly::constant(rat(1, 4)), linear_at(1)).expect("nonzero");
    &(-&(&lin * &pfr.func)) + &inv
}

/// Closed form `(1 − λ_-²)/(2(η+1)²) + λ_+²/(2(η² − 1))` of the base prime free term.
pub fn prime_free_term_closed(lam_o: &LambdaPair) -> RatFn {
    let (lm, lp) = (lam_o.minus(), lam_o.plus());
    let a = RatFn::new(RatPoly::constant((Rat::one() - lm * lm) / int(2)), RatPoly::from_ints(&[1, 2, 1])).expect("nonzero");
    let b = RatFn::new(RatPoly::constant(lp * lp / int(2)), RatPoly::from_ints(&[-1, 0, 1])).expect("nonzero");
    &a + &b
}

/// Seed degrees swept per family: a takes `0..=3`; a' the three smallest degrees above
/// `λ_- − λ_+ − 1`; b every degree below `λ_+`. Out-of-range degrees are dropped.
pub fn sweep_seed_degrees(family: XrFamily, lam_o: &LambdaPair) -> Vec<usize> {
    let candidates: Vec<usize> = match family {
        XrFamily::A => (0..=3).collect(),
        XrFamily::APrime => {
            let gap = lam_o.minus() - lam_o.plus() - Rat::one();
            if gap.is_negative() {
                Vec::new()
            } else {
                let lo = crate::rational::floor(&gap).to_string().parse::<usize>().unwrap_or(0) + 1;
                (lo..lo + 3).collect()
            }
        }
        XrFamily::B => (0..8).collect(),
    };
    candidates.into_iter().filter(|&m| check_xr_seed_range(family, m, lam_o).is_ok()).collect()
}

/// All `(family, seed degree, level)` triples with a constructible XR polynomial.
pub fn xr_cases(lam_o: &LambdaPair) -> Vec<(XrFamily, usize, usize)> {
    let hg = crate::xconstruct::half_gap(lam_o);
    let mut out = Vec::new();
    for family in [XrFamily::A, XrFamily::APrime, XrFamily::B] {
        for m in sweep_seed_degrees(family, lam_o) {
            let mut v = 0;
            while int(v as i64) < hg {
                out.push((family, m, v));
                v += 1;
            }
        }
    }
    out
}

fn record(report: &mut IdentityReport, identity: &str, n: usize, lam_o: &LambdaPair, outcome: Result<bool>) {
    match outcome {
        Ok(true) => report.checked += 1,
        Ok(false) => {
            report.checked += 1;
            report.failures.push(IdentityFailure {
                identity: identity.into(),
                n,
                params: lam_o.jacobi_params(),
                detail: "nonzero residual".into(),
            })
        }
        Err(Error::DegreeCollapse { .. }) | Err(Error::RepeatedRoot(_)) => report.skipped += 1,
        Err(e) => {
            report.checked += 1;
            report.failures.push(IdentityFailure {
                identity: identity.into(),
                n,
                params: lam_o.jacobi_params(),
                detail: e.to_string(),
            })
        }
    }
}

/// Exact Heine residuals of every XR polynomial of families a, a' and b over the
/// sweep of [`xr_cases`], at the level energies.
pub fn heine_sweep(lams: &[LambdaPair], strategy: Strategy) -> IdentityReport {
    let work: Vec<(&LambdaPair, XrFamily, usize, usize)> =
        lams.iter().flat_map(|l| xr_cases(l).into_iter().map(move |(f, m, v)| (l, f, m, v))).collect();
    let outcomes = exec::map(strategy, &work, |&(l, family, m, v)| {
        let run = || -> Result<bool> {
            let seed = classify_derived(family.seed_sigma(), m, l)?;
            let eps = spectrum(l)?.energies[v].clone();
            let x = xr_jacobi(family, m, v, l)?;
            Ok(heine_residual_xr(&x, &seed, &eps)?.is_zero())
        };
        run()
    });
    let mut report = IdentityReport::default();
    for ((l, family, m, _), o) in work.iter().zip(outcomes) {
        record(&mut report, &format!("heine-{family:?}-m{m}"), *m, l, o);
    }
    report
}

/// Exact canonical-form residuals: every classified seed of degree `≤ m_max` at its own
/// energy against the reference fraction; every bound state at its level energy; and
/// every transformed bound state of [`xr_cases`] against the transformed fraction.
pub fn csle_sweep(lams: &[LambdaPair], m_max: usize, strategy: Strategy) -> IdentityReport {
    #[derive(Clone, Copy)]
    enum Case {
        Seed(SigmaPair, usize),
        Bound(usize),
        Xr(XrFamily, usize, usize),
    }
    let mut work: Vec<(&LambdaPair, Case)> = Vec::new();
    for l in lams {
        for sigma in SigmaPair::ALL {
            for m in 0..=m_max {
                work.push((l, Case::Seed(sigma, m)));
            }
        }
        if let Ok(sp) = spectrum(l) {
            for v in 0..=sp.v_max {
                work.push((l, Case::Bound(v)));
            }
        }
        for (f, m, v) in xr_cases(l) {
            work.push((l, Case::Xr(f, m, v)));
        }
    }
    let outcomes = exec::map(strategy, &work, |&(l, case)| -> Option<(String, usize, Result<bool>)> {
        match case {
            Case::Seed(sigma, m) => {
                let seed = classify_derived(sigma, m, l).ok()?;
                let run = || Ok(csle_residual(&seed_function(&seed)?, &seed.energy, &ref_pfr(l))?.is_zero());
                Some((format!("csle-seed-{}", seed.type_tag), m, run()))
            }
            Case::Bound(v) => {
                let run = || {
                    let eps = spectrum(l)?.energies[v].clone();
                    Ok(csle_residual(&eigenfunction(v, l)?, &eps, &ref_pfr(l))?.is_zero())
                };
                Some(("csle-bound".into(), v, run()))
            }
            Case::Xr(family, m, v) => {
                let run = || {
                    let seed = classify_derived(family.seed_sigma(), m, l)?;
                    let eps = spectrum(l)?.energies[v].clone();
                    let x = xr_jacobi(family, m, v, l)?;
                    let phi = xr_eigenfunction(family, &seed, &x.poly)?;
                    Ok(csle_residual(&phi, &eps, &transformed_pfr(&seed)?)?.is_zero())
                };
                Some((format!("csle-xr-{family:?}-m{m}"), v, run()))
            }
        }
    });
    let mut report = IdentityReport::default();
    for ((l, _), o) in work.iter().zip(outcomes) {
        if let Some((id, n, r)) = o {
            record(&mut report, &id, n, l, r);
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lam(pm: i64, qm: i64, pp: i64, qp: i64) -> LambdaPair {
        LambdaPair::from_fracs(pm, qm, pp, qp).unwrap()
    }

    #[test]
    fn base_fraction_examples() {
        let one = ref_pfr(&lam(1, 1, 1, 1));
        let expect = RatFn::new(RatPoly::constant(rat(-1, 4)), RatPoly::from_ints(&[1, 0, -1])).unwrap();
        assert_eq!(one.func, expect);
        let l = lam(11, 2, 1, 2);
        let f = ref_pfr(&l);
        assert_eq!(f.eta2_limit(), Some(rat(1, 4)));
        assert_eq!(f.pole_strength(-1), Some((Rat::one() - rat(121, 4)) / int(4)));
        assert_eq!(f.exp_diff(-1), Some(rat(11, 2)));
        assert_eq!(f.exp_diff(1), Some(rat(1, 2)));
    }

    #[test]
    fn bound_states_solve_reference_equation() {
        let l = lam(11, 2, 1, 2);
        let s = spectrum(&l).unwrap();
        let pfr = ref_pfr(&l);
        for v in 0..=s.v_max {
            let phi = eigenfunction(v, &l).unwrap();
            let e = s.energies[v].clone();
            assert!(csle_residual(&phi, &e, &pfr).unwrap().is_zero(), "v = {v}");
            let wrong = &e + Rat::one();
            assert!(!csle_residual(&phi, &wrong, &pfr).unwrap().is_zero());
        }
    }

    #[test]
    fn seeds_solve_reference_and_transformed_equations() {
        for l in [lam(11, 2, 1, 2), lam(13, 2, 3, 2), lam(9, 1, 5, 2)] {
            let pfr = ref_pfr(&l);
            for sigma in SigmaPair::ALL {
                for m in 0..5 {
                    let Ok(seed) = classify_derived(sigma, m, &l) else { continue };
                    let e = seed.energy.clone();
                    let Ok(phi) = seed_function(&seed) else { continue };
                    assert!(csle_residual(&phi, &e, &pfr).unwrap().is_zero());
                    let t = transformed_pfr(&seed).unwrap();
                    assert_eq!(t.func, darboux_pfr(&seed).unwrap().func, "{sigma} {m}");
                    assert_eq!(t.eta2_limit(), Some(rat(1, 4)));
                    let lm = (seed.lam_o.signed(sigma.minus(), sigma.plus()).minus() + Rat::one()).abs();
                    assert_eq!(t.exp_diff(-1), Some(lm));
                    let inv = reciprocal_seed_function(&seed).unwrap();
                    assert!(csle_residual(&inv, &e, &t).unwrap().is_zero());
                    assert!(reciprocity_holds(&seed).unwrap());
                    let o = o_hat(&seed).unwrap();
                    assert_eq!(o.coeff(m), o_hat_leading(&seed).unwrap());
                }
            }
        }
    }

    #[test]
    fn a0_shifts_exponent_differences() {
        let l = lam(13, 2, 3, 2);
        let seed = classify_derived(SigmaPair::PP, 0, &l).unwrap();
        let shifted = lam(15, 2, 5, 2);
        assert_eq!(transformed_pfr(&seed).unwrap().func, ref_pfr(&shifted).func);
    }

    #[test]
    fn heine_residual_vanishes_on_xr_polynomials() {
        let l = lam(13, 2, 1, 2);
        let s = spectrum(&l).unwrap();
        let seed = classify_derived(SigmaPair::PP, 1, &l).unwrap();
        let hc = heine_coeffs(&seed).unwrap();
        let x = xr_jacobi(XrFamily::A, 1, 1, &l).unwrap();
        assert!(heine_residual(&x.poly, &hc, &s.energies[1]).is_zero());
        let perturbed = &x.poly + &RatPoly::one();
        assert!(!heine_residual(&perturbed, &hc, &s.energies[1]).is_zero());
        let direct = heine_coeffs_direct(hc.p_minus.clone(), hc.p_plus.clone(), &hc.pi, &transformed_pfr(&seed).unwrap()).unwrap();
        assert_eq!(direct, hc);
        assert_eq!(hc.b.degree(), Some(2));
        assert_eq!(hc.c0.degree(), Some(1));
    }

    #[test]
    fn residual_sweeps_are_exact() {
        let lams = [lam(11, 2, 1, 2), lam(13, 2, 1, 2), lam(13, 2, 3, 2)];
        let h = heine_sweep(&lams, Strategy::default());
        assert!(h.pass(), "{:?}", h.failures);
        assert!(h.checked >= 20, "{}", h.checked);
        let c = csle_sweep(&lams, 3, Strategy::default());
        assert!(c.pass(), "{:?}", c.failures);
        assert!(c.checked >= 100, "{}", c.checked);
        let fams: Vec<XrFamily> = xr_cases(&lam(13, 2, 3, 2)).into_iter().map(|c| c.0).collect();
        assert!(fams.contains(&XrFamily::B) && fams.contains(&XrFamily::APrime));
    }

    #[test]
    fn legendre_gauge_gives_b_hat_eta() {
        assert_eq!(b_hat(&rat(1, 2), &rat(1, 2)), RatPoly::x());
    }

    #[test]
    fn prime_free_term_matches_closed_form() {
        for l in [lam(11, 2, 1, 2), lam(7, 3, 2, 5), lam(1, 1, 4, 1)] {
            assert_eq!(prime_free_term(&ref_pfr(&l)), prime_free_term_closed(&l));
        }
    }
}
