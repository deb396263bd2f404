//! Polynomial determinants and the exceptional polynomial families built from
//! them: XB-Jacobi, orthogonal X_m-Jacobi, and the three XR-Jacobi sequences.
//!
//! Throughout, a pair `λ = (λ_-, λ_+)` carries the exponent differences at
//! η = −1 and η = +1, and a sign pair `σ = (σ_-, σ_+)` is written `σ_-σ_+`.
//! The seed column of a polynomial determinant uses the Jacobi indexes
//! `(σ_+ λ_+, σ_- λ_-)`; the eigenfunction column uses `(λ_+, λ_-)`.

use std::fmt;

use num::{One, Zero};

use crate::error::{Error, Result};
use crate::exec::{self, Strategy};
use crate::jacobi::{jacobi, jacobi_deriv, jacobi_signed, leading_coeff, IdentityReport, JacobiParams, LambdaPair};
use crate::rational::{fmt_rat, int, rat, Rat};
use crate::ratpoly::{wronskian2, RatPoly, ScaledPoly};

/// Sign pair `σ = (σ_-, σ_+)`, each exactly ±1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SigmaPair {
    minus: i32,
    plus: i32,
}

impl SigmaPair {
    /// `(+, +)`.
    pub const PP: SigmaPair = SigmaPair { minus: 1, plus: 1 };
    /// `(−, +)`.
    pub const MP: SigmaPair = SigmaPair { minus: -1, plus: 1 };
    /// `(+, −)`.
    pub const PM: SigmaPair = SigmaPair { minus: 1, plus: -1 };
    /// `(−, −)`.
    pub const MM: SigmaPair = SigmaPair { minus: -1, plus: -1 };
    /// All four sign patterns.
    pub const ALL: [SigmaPair; 4] = [Self::PP, Self::MP, Self::PM, Self::MM];

    /// Validating constructor.
    pub fn new(minus: i32, plus: i32) -> Result<Self> {
        if minus.abs() != 1 || plus.abs() != 1 {
            return Err(Error::RangeViolation(format!("signs must be ±1, got ({minus}, {plus})")));
        }
        Ok(Self { minus, plus })
    }

    /// Parses a two-character string such as `"-+"` (σ_- first).
    pub fn parse(s: &str) -> Result<Self> {
        let c: Vec<char> = s.trim().chars().collect();
        if c.len() != 2 {
            return Err(Error::Parse(format!("sign pair '{s}' must have two characters")));
        }
        Self::new(parse_sign(c[0])?, parse_sign(c[1])?)
    }

    /// σ_-.
    pub fn minus(&self) -> i32 {
        self.minus
    }

    /// σ_+.
    pub fn plus(&self) -> i32 {
        self.plus
    }

    /// Component-wise product `σ × σ′`.
    pub fn times(&self, other: &SigmaPair) -> SigmaPair {
        SigmaPair { minus: self.minus * other.minus, plus: self.plus * other.plus }
    }

    /// Components exchanged, `(σ_+, σ_-)`.
    pub fn swapped(&self) -> SigmaPair {
        SigmaPair { minus: self.plus, plus: self.minus }
    }
}

/// Parses `'+'` or `'-'` into ±1.
pub fn parse_sign(c: char) -> Result<i32> {
    match c {
        '+' => Ok(1),
        '-' | '−' => Ok(-1),
        _ => Err(Error::Parse(format!("'{c}' is not a sign"))),
    }
}

fn sign_char(s: i32) -> char {
    if s > 0 {
        '+'
    } else {
        '-'
    }
}

impl fmt::Display for SigmaPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", sign_char(self.minus), sign_char(self.plus))
    }
}

/// `(σ_+ λ_+, σ_- λ_-)` as Jacobi indexes.
fn seed_params(lam: &LambdaPair, sigma: SigmaPair) -> JacobiParams {
    lam.signed(sigma.minus, sigma.plus).jacobi_params()
}

/// Supplementary polynomial
/// `S_{n+1}^{(λ_+,λ_-)} = ½[(λ_-+λ_++2)η + λ_+−λ_-] P_n^{(λ_+,λ_-)} + (η²−1) Ṗ_n^{(λ_+,λ_-)}`.
pub fn s_poly(n: usize, lam_plus: &Rat, lam_minus: &Rat) -> Result<RatPoly> {
    let prm = JacobiParams::new(lam_plus.clone(), lam_minus.clone());
    let p = jacobi(n, &prm)?;
    let lin = s_linear(lam_plus, lam_minus);
    Ok(&(&lin * &p) + &(&RatPoly::from_ints(&[-1, 0, 1]) * &p.differentiate()))
}

/// Second construction path of `S_{n+1}` through the closed-form derivative:
/// `½[…] P_n + ½(λ_-+λ_++n+1)(η²−1) P_{n−1}^{(λ_++1,λ_-+1)}`.
pub fn s_poly_via_derivative(n: usize, lam_plus: &Rat, lam_minus: &Rat) -> Result<RatPoly> {
    let prm = JacobiParams::new(lam_plus.clone(), lam_minus.clone());
    let p = jacobi(n, &prm)?;
    let c = (lam_minus + lam_plus + int(n as i64 + 1)) / int(2);
    let lower = jacobi_signed(n as i64 - 1, &prm.shifted(1, 1))?;
    Ok(&(&s_linear(lam_plus, lam_minus) * &p) + &(&RatPoly::from_ints(&[-1, 0, 1]) * &lower).scale(&c))
}

fn s_linear(lam_plus: &Rat, lam_minus: &Rat) -> RatPoly {
    RatPoly::linear((lam_plus - lam_minus) / int(2), (lam_minus + lam_plus + int(2)) / int(2))
}

/// Polynomial determinant
/// `D = P_m^{(σ_+λ_+,σ_-λ_-)} S_{n+1}^{(λ_+,λ_-)} − S_{m+1}^{(σ_+λ_+,σ_-λ_-)} P_n^{(λ_+,λ_-)}`.
pub fn poly_det(m: usize, n: usize, lam: &LambdaPair, sigma: SigmaPair) -> Result<RatPoly> {
    let sp = seed_params(lam, sigma);
    let pm = jacobi(m, &sp)?;
    let sm = s_poly(m, &sp.alpha, &sp.beta)?;
    let pn = jacobi(n, &lam.jacobi_params())?;
    let sn = s_poly(n, lam.plus(), lam.minus())?;
    Ok(&(&pm * &sn) - &(&sm * &pn))
}

/// Which construction produced an [`XPolyResult`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    /// A bare factored polynomial determinant.
    PdRaw,
    /// XB-Jacobi polynomial from a determinant with known seeds.
    Xb,
    /// Orthogonal X_m-Jacobi polynomial.
    Xm,
    /// XR-Jacobi sequence generated by a type-a seed.
    XrA,
    /// XR-Jacobi sequence generated by a type-a′ seed.
    XrAPrime,
    /// XR-Jacobi sequence generated by a type-b seed.
    XrB,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::PdRaw => "PD-raw",
            Family::Xb => "XB",
            Family::Xm => "Xm",
            Family::XrA => "XR-a",
            Family::XrAPrime => "XR-a'",
            Family::XrB => "XR-b",
        })
    }
}

/// The three XR-Jacobi sequences.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum XrFamily {
    /// Seed `P_n^{(λ_+,λ_-)}`, always nodeless on (1, ∞).
    A,
    /// Seed `P_m^{(λ_+,−λ_-)}`.
    APrime,
    /// Seed `P_m^{(−λ_+,−λ_-)}`.
    B,
}

impl XrFamily {
    /// All three families.
    pub const ALL: [XrFamily; 3] = [XrFamily::A, XrFamily::APrime, XrFamily::B];

    /// Parses `a`, `a'` (or `ap`), `b`.
    pub fn parse(s: &str) -> Result<Self> {
        match s.trim() {
            "a" => Ok(XrFamily::A),
            "a'" | "ap" | "aprime" | "a′" => Ok(XrFamily::APrime),
            "b" => Ok(XrFamily::B),
            _ => Err(Error::Parse(format!("unknown family '{s}' (expected a, a', b)"))),
        }
    }

    /// Seed signs `(σ_-, σ_+)` relative to the positive pair `λ_o`.
    pub fn seed_sigma(&self) -> SigmaPair {
        match self {
            XrFamily::A => SigmaPair::PP,
            XrFamily::APrime => SigmaPair::MP,
            XrFamily::B => SigmaPair::MM,
        }
    }

    /// Determinant signs used with `λ = (−λ_{o;-}, λ_{o;+})`.
    pub fn pd_sigma(&self) -> SigmaPair {
        self.seed_sigma().times(&SigmaPair::MP)
    }

    /// `(κ_-, κ_+)` stripped from the determinant.
    pub fn kappa(&self) -> (u32, u32) {
        match self {
            XrFamily::A => (0, 1),
            XrFamily::APrime => (1, 1),
            XrFamily::B => (1, 0),
        }
    }

    /// Result tag.
    pub fn family(&self) -> Family {
        match self {
            XrFamily::A => Family::XrA,
            XrFamily::APrime => Family::XrAPrime,
            XrFamily::B => Family::XrB,
        }
    }

    /// Seed Jacobi polynomial `P_m^{(σ_+λ_{o;+}, σ_-λ_{o;-})}`.
    pub fn seed_poly(&self, m: usize, lam_o: &LambdaPair) -> Result<RatPoly> {
        let s = self.seed_sigma();
        jacobi(m, &lam_o.signed(s.minus, s.plus).jacobi_params())
    }
}

impl fmt::Display for XrFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            XrFamily::A => "a",
            XrFamily::APrime => "a'",
            XrFamily::B => "b",
        })
    }
}

/// A seed entering a determinant: signs and degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeedRef {
    /// Seed signs relative to the parameter pair.
    pub sigma: SigmaPair,
    /// Seed degree.
    pub m: usize,
}

/// Parameters and seeds a polynomial was built from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Provenance {
    /// Parameter pair handed to the constructor.
    pub lam: LambdaPair,
    /// Seeds involved, first-row seed first.
    pub seeds: Vec<SeedRef>,
}

/// Monic exceptional polynomial with its factorization bookkeeping.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct XPolyResult {
    /// Monic polynomial, nonzero at η = ±1.
    pub poly: RatPoly,
    /// Power of (1+η) removed.
    pub kappa_minus: u32,
    /// Power of (1−η) removed.
    pub kappa_plus: u32,
    /// Degree of `poly`.
    pub degree: usize,
    /// Construction tag.
    pub family: Family,
    /// Leading coefficient of the quotient before monic normalization.
    pub raw_leading: Rat,
    /// Source parameters, when known.
    pub provenance: Option<Provenance>,
}

/// Strips `(1+η)^{κ_-}(1−η)^{κ_+}` with `κ ∈ {0, 1}` and normalizes to monic.
pub fn factor_pd(d: &RatPoly) -> Result<XPolyResult> {
    if d.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let km = d.root_multiplicity(&int(-1));
    if km >= 2 {
        return Err(Error::SimpleRootViolation { sign: '+' });
    }
    let kp = d.root_multiplicity(&int(1));
    if kp >= 2 {
        return Err(Error::SimpleRootViolation { sign: '-' });
    }
    let mut q = d.clone();
    if km == 1 {
        q = q.exact_div(&RatPoly::from_ints(&[1, 1])).expect("root at −1");
    }
    if kp == 1 {
        q = q.exact_div(&RatPoly::from_ints(&[1, -1])).expect("root at +1");
    }
    let raw_leading = q.leading_coeff().expect("nonzero").clone();
    let poly = q.monic()?;
    Ok(XPolyResult {
        degree: poly.degree().expect("nonzero"),
        poly,
        kappa_minus: km as u32,
        kappa_plus: kp as u32,
        family: Family::PdRaw,
        raw_leading,
        provenance: None,
    })
}

/// X_m-Jacobi polynomial with its closed-form leading coefficient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct XmJacobi {
    /// `P̂_{m,m+n}^{(α,β)}(x)`, degree `m + n`.
    pub poly: RatPoly,
    /// Closed-form leading coefficient `k̂_{m,m+n}^{(α,β)}`.
    pub leading: Rat,
}

/// Closed-form leading coefficient
/// `k̂ = (α+n+1−m)/(α+n+1) · k_m^{(−α−2,β)} · k_n^{(α+1,β−1)}`.
pub fn xm_leading_coeff(m: usize, n: usize, prm: &JacobiParams) -> Result<Rat> {
    let d = &prm.alpha + int(n as i64 + 1);
    if d.is_zero() {
        return Err(Error::DivisionByZero("α + n + 1".into()));
    }
    let km = leading_coeff(m, &JacobiParams::new(-&prm.alpha - int(2), prm.beta.clone()));
    let kn = leading_coeff(n, &prm.shifted(1, -1));
    Ok((&d - int(m as i64)) / &d * km * kn)
}

/// X_m-Jacobi polynomial `P̂_{m,m+n}^{(α,β)}(x)`.
///
/// With `λ_- = α + 1`, `λ_+ = β − 1`:
/// `(λ_-+n) P̂ = (λ_-−m) P_m^{(−λ_-−1,λ_++1)} P_n^{(λ_-,λ_+)} + (x−1) P_m^{(−λ_-,λ_+)} Ṗ_n^{(λ_-,λ_+)}`.
pub fn xm_jacobi(m: usize, n: usize, prm: &JacobiParams) -> Result<XmJacobi> {
    let lm = &prm.alpha + Rat::one();
    let lp = &prm.beta - Rat::one();
    let d = &lm + int(n as i64);
    if d.is_zero() {
        return Err(Error::DivisionByZero("λ_- + n".into()));
    }
    let base = JacobiParams::new(lm.clone(), lp.clone());
    let t1 = &jacobi(m, &JacobiParams::new(-&lm - Rat::one(), &lp + Rat::one()))? * &jacobi(n, &base)?;
    let t2 = &jacobi(m, &JacobiParams::new(-lm.clone(), lp.clone()))? * &jacobi_deriv(n, &base)?;
    let sum = &t1.scale(&(&lm - int(m as i64))) + &(&RatPoly::from_ints(&[-1, 1]) * &t2);
    let poly = sum.scale(&d.recip());
    let leading = xm_leading_coeff(m, n, prm)?;
    if leading.is_zero() {
        return Err(Error::DegreeCollapse { n: m + n, alpha: fmt_rat(&prm.alpha), beta: fmt_rat(&prm.beta) });
    }
    match poly.degree() {
        Some(g) if g == m + n => Ok(XmJacobi { poly, leading }),
        Some(g) => Err(Error::DegreeMismatch { expected: m + n, found: g }),
        None => Err(Error::DegreeMismatch { expected: m + n, found: 0 }),
    }
}

/// Half-width of the discrete spectrum, `½(λ_{o;-} − λ_{o;+} − 1)`.
pub fn half_gap(lam_o: &LambdaPair) -> Rat {
    (lam_o.minus() - lam_o.plus() - Rat::one()) / int(2)
}

/// Checks the admissible seed-degree range of each XR family.
pub fn check_xr_seed_range(family: XrFamily, seed_m: usize, lam_o: &LambdaPair) -> Result<()> {
    let m = int(seed_m as i64);
    let gap = lam_o.minus() - lam_o.plus() - Rat::one();
    match family {
        XrFamily::A => Ok(()),
        XrFamily::APrime if m > gap && gap > Rat::zero() => Ok(()),
        XrFamily::APrime => Err(Error::RangeViolation(format!(
            "type a' seed requires m > λ_- − λ_+ − 1 = {gap} > 0, got m = {seed_m}"
        ))),
        XrFamily::B if &m < lam_o.plus() && lam_o.plus() < &(lam_o.minus() - Rat::one()) => Ok(()),
        XrFamily::B => Err(Error::RangeViolation(format!(
            "type b seed requires 0 ≤ m < λ_+ < λ_- − 1, got m = {seed_m}, λ = ({}, {})",
            lam_o.minus(),
            lam_o.plus()
        ))),
    }
}

/// Checks `0 ≤ v < ½(λ_{o;-} − λ_{o;+} − 1)`.
pub fn check_level_range(v: usize, lam_o: &LambdaPair) -> Result<()> {
    let hg = half_gap(lam_o);
    if int(v as i64) < hg {
        Ok(())
    } else {
        Err(Error::RangeViolation(format!("level v = {v} requires v < ½(λ_- − λ_+ − 1) = {hg}")))
    }
}

/// Expected degree of the XR polynomial.
pub fn xr_degree(family: XrFamily, seed_m: usize, v: usize) -> Option<usize> {
    match family {
        XrFamily::APrime => (seed_m + v).checked_sub(1),
        _ => Some(seed_m + v),
    }
}

/// XR-Jacobi polynomial of level `v` generated by a seed of degree `seed_m`.
///
/// Built from the determinant with `λ = (−λ_{o;-}, λ_{o;+})` (quadrant II), the
/// family's determinant signs, and the eigenfunction column of degree `v`.
pub fn xr_jacobi(family: XrFamily, seed_m: usize, v: usize, lam_o: &LambdaPair) -> Result<XPolyResult> {
    if lam_o.quadrant() != crate::jacobi::Quadrant::I {
        return Err(Error::RangeViolation("λ_o must have positive components".into()));
    }
    check_level_range(v, lam_o)?;
    check_xr_seed_range(family, seed_m, lam_o)?;
    xr_jacobi_unchecked(family, seed_m, v, lam_o)
}

/// [`xr_jacobi`] without the level and seed range gates (the determinant
/// factorization and degree checks still apply).
pub fn xr_jacobi_unchecked(family: XrFamily, seed_m: usize, v: usize, lam_o: &LambdaPair) -> Result<XPolyResult> {
    let lam = lam_o.signed(-1, 1);
    let d = poly_det(seed_m, v, &lam, family.pd_sigma())?;
    let mut r = factor_pd(&d)?;
    let (km, kp) = family.kappa();
    let expected = xr_degree(family, seed_m, v).ok_or_else(|| Error::RangeViolation("degree −1".into()))?;
    if r.degree != expected || (r.kappa_minus, r.kappa_plus) != (km, kp) {
        return Err(Error::DegreeMismatch { expected, found: r.degree });
    }
    r.family = family.family();
    r.provenance = Some(Provenance {
        lam: lam_o.clone(),
        seeds: vec![SeedRef { sigma: family.seed_sigma(), m: seed_m }],
    });
    Ok(r)
}

/// Outcome of comparing a family-a XR polynomial with a reflected X_m-Jacobi polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReversedXmReport {
    /// Family-a XR polynomial of seed degree `n` and level `m`.
    pub xr: RatPoly,
    /// `(−1)^{m+n} P̂_{m,m+n}^{(λ_--1,λ_++1)}(−η) / k̂`.
    pub reversed_xm: RatPoly,
    /// Exact equality of the two.
    pub equal: bool,
}

/// Exact comparison of `J[η | a n]` at level `m` with the reflected, normalized
/// X_m-Jacobi polynomial with indexes `(λ_{o;-} − 1, λ_{o;+} + 1)`.
pub fn xr_equals_reversed_xm(n: usize, m: usize, lam_o: &LambdaPair) -> Result<ReversedXmReport> {
    let hg = half_gap(lam_o);
    if !(int(m as i64) < hg && hg < lam_o.minus() - Rat::one()) {
        return Err(Error::RangeViolation(format!(
            "requires 0 ≤ m < ½(λ_- − λ_+ − 1) < λ_- − 1, got m = {m}"
        )));
    }
    let xr = xr_jacobi(XrFamily::A, n, m, lam_o)?.poly;
    let prm = JacobiParams::new(lam_o.minus() - Rat::one(), lam_o.plus() + Rat::one());
    let xm = xm_jacobi(m, n, &prm)?;
    let sign = if (m + n) % 2 == 0 { int(1) } else { int(-1) };
    let reversed_xm = xm.poly.reflect().scale(&(sign / &xm.leading));
    Ok(ReversedXmReport { equal: xr == reversed_xm, xr, reversed_xm })
}

fn lam_label(lam: &LambdaPair) -> JacobiParams {
    lam.jacobi_params()
}

/// Exact sweep of the determinant-level identities for `0 ≤ m, n ≤ mn_max`:
/// the two construction paths of `S_{n+1}` and the reflection symmetry of
/// `S`, the reflection identity of determinants for all four sign patterns
/// (`D[η; λ_+, λ_- | σ_+σ_-] = (−1)^{m+n+1} D[−η; λ_-, λ_+ | σ_-σ_+]`),
/// and the derivative-free rewrites of `S_{m+1}` at flipped indexes.
/// Samples may lie in any quadrant.
pub fn verify_pd_identities(mn_max: usize, samples: &[LambdaPair], strategy: Strategy) -> IdentityReport {
    verify_pd_identities_grid(mn_max, mn_max, samples, strategy)
}

/// [`verify_pd_identities`] over the rectangle `0 ≤ m ≤ m_max`, `0 ≤ n ≤ n_max`;
/// the single-index `S` identities run for every `n ≤ n_max`.
pub fn verify_pd_identities_grid(m_max: usize, n_max: usize, samples: &[LambdaPair], strategy: Strategy) -> IdentityReport {
    let parts = exec::map(strategy, samples, |lam| {
        let mut r = IdentityReport::default();
        let label = lam_label(lam);
        let (lp, lm) = (lam.plus(), lam.minus());
        for n in 0..=n_max {
            r.record("s-poly-two-paths", n, &label, (|| Ok(&s_poly(n, lp, lm)? - &s_poly_via_derivative(n, lp, lm)?))());
            r.record(
                "s-poly-reflection",
                n,
                &label,
                (|| {
                    let a = s_poly(n, lp, lm)?;
                    let b = s_poly(n, lm, lp)?.reflect();
                    Ok(if (n + 1) % 2 == 0 { &a - &b } else { &a + &b })
                })(),
            );
            r.record("s-poly-eliminate-minus", n, &label, s_eliminated_minus_diff(n, lam));
            r.record("s-poly-eliminate-plus", n, &label, s_eliminated_plus_diff(n, lam));
        }
        let swapped = LambdaPair::new(lp.clone(), lm.clone()).expect("nonzero");
        let own = DetTable::new(n_max, &lam.jacobi_params());
        let own_swapped = DetTable::new(n_max, &swapped.jacobi_params());
        for sigma in SigmaPair::ALL {
            let seed = DetTable::new(m_max, &seed_params(lam, sigma));
            let seed_swapped = DetTable::new(m_max, &seed_params(&swapped, sigma.swapped()));
            for m in 0..=m_max {
                for n in 0..=n_max {
                    // Each column term picks up (−1)^{m+n+1} under η → −η with swapped indexes.
                    let diff = (|| {
                        let d = DetTable::det(&seed, m, &own, n)?;
                        let refl = DetTable::det(&seed_swapped, m, &own_swapped, n)?.reflect();
                        let diff = if (m + n) % 2 == 1 { &d - &refl } else { &d + &refl };
                        Ok(if diff.is_zero() { RatPoly::zero() } else { diff.to_poly() })
                    })();
                    r.record(&format!("pd-reflection[{sigma}] m={m}"), n, &label, diff);
                }
            }
        }
        r
    });
    let mut out = IdentityReport::default();
    for p in parts {
        out.absorb(p);
    }
    out
}

/// `P_k` and `S_{k+1}` for one index pair and `k ≤ k_max`, in unreduced form,
/// so that each determinant costs two products and one difference.
struct DetTable {
    p: Vec<Result<ScaledPoly>>,
    s: Vec<Result<ScaledPoly>>,
}

impl DetTable {
    fn new(k_max: usize, prm: &JacobiParams) -> Self {
        let p = (0..=k_max).map(|k| jacobi(k, prm).map(|q| ScaledPoly::new(&q))).collect();
        let s = (0..=k_max).map(|k| s_poly(k, &prm.alpha, &prm.beta).map(|q| ScaledPoly::new(&q))).collect();
        Self { p, s }
    }

    /// [`poly_det`] from tabulated columns: `P_m^{seed} S_{n+1} − S_{m+1}^{seed} P_n`.
    fn det(seed: &Self, m: usize, own: &Self, n: usize) -> Result<ScaledPoly> {
        fn at(col: &[Result<ScaledPoly>], k: usize) -> Result<&ScaledPoly> {
            col[k].as_ref().map_err(Clone::clone)
        }
        let (pm, sm, pn, sn) = (at(&seed.p, m)?, at(&seed.s, m)?, at(&own.p, n)?, at(&own.s, n)?);
        Ok(&(pm * sn) - &(sm * pn))
    }
}

/// `S_{m+1}^{(λ_+,−λ_-)} − {½[(λ_++λ_-+2)η+λ_+−λ_-] P_m^{(λ_+,−λ_-)} − (η−1)(λ_-−m) P_m^{(λ_++1,−λ_-−1)}}`.
///
/// The linear factor keeps the *unflipped* `λ_-`, exactly as in the
/// determinant column it replaces.
fn s_eliminated_minus_diff(m: usize, lam: &LambdaPair) -> Result<RatPoly> {
    let (lp, lm) = (lam.plus(), lam.minus());
    let q = JacobiParams::new(lp.clone(), -lm.clone());
    let lhs = s_poly(m, lp, &-lm.clone())?;
    let p = jacobi(m, &q)?;
    let rhs = &(&s_linear(lp, lm) * &p)
        - &(&RatPoly::from_ints(&[-1, 1]) * &jacobi(m, &q.shifted(1, -1))?).scale(&(lm - int(m as i64)));
    Ok(&lhs - &rhs)
}

/// `S_{m+1}^{(−λ_+,λ_-)} − {½[(λ_-+λ_++2)η+λ_+−λ_-] P_m^{(−λ_+,λ_-)} − (η+1)(λ_+−m) P_m^{(−λ_+−1,λ_-+1)}}`, again with
/// the unflipped linear factor.
fn s_eliminated_plus_diff(m: usize, lam: &LambdaPair) -> Result<RatPoly> {
    let (lp, lm) = (lam.plus(), lam.minus());
    let q = JacobiParams::new(-lp.clone(), lm.clone());
    let lhs = s_poly(m, &-lp.clone(), lm)?;
    let p = jacobi(m, &q)?;
    let rhs = &(&s_linear(lp, lm) * &p)
        - &(&RatPoly::from_ints(&[1, 1]) * &jacobi(m, &q.shifted(-1, 1))?).scale(&(lp - int(m as i64)));
    Ok(&lhs - &rhs)
}

/// Exact sweep of the determinant decompositions for `0 ≤ m, n ≤ mn_max`
/// (quadrant-I samples): the `−+` and `+−` factorizations through the
/// derivative-free rewrites, the `−+` determinant as a reflected X_m-Jacobi
/// polynomial, the closed-form X_m-Jacobi leading coefficient, and the `++`
/// determinant as `(η²−1)` times a Jacobi Wronskian (with the factored form
/// checked for `m_2 = m_1 + 1`).
pub fn verify_decompositions(mn_max: usize, samples: &[LambdaPair], strategy: Strategy) -> IdentityReport {
    let work: Vec<(usize, usize, &LambdaPair)> = samples
        .iter()
        .flat_map(|l| (0..=mn_max).flat_map(move |m| (0..=mn_max).map(move |n| (m, n, l))))
        .collect();
    let parts = exec::map(strategy, &work, |&(m, n, lam)| {
        let mut r = IdentityReport::default();
        let label = lam_label(lam);
        r.record(&format!("pd-minus-plus-factor m={m}"), n, &label, pd_mp_factor_diff(m, n, lam));
        r.record(&format!("pd-plus-minus-factor m={m}"), n, &label, pd_pm_factor_diff(m, n, lam));
        r.record(&format!("pd-as-reversed-xm m={m}"), n, &label, pd_reversed_xm_diff(m, n, lam));
        r.record(&format!("xm-leading-coefficient m={m}"), n, &label, xm_leading_diff(m, n, lam));
        r.record(&format!("pd-wronskian m={m}"), n, &label, pd_wronskian_diff(m, n, lam));
        if n == m + 1 {
            r.record(&format!("pd-wronskian-factored m={m}"), n, &label, pd_wronskian_factored_diff(m, lam));
        }
        r
    });
    let mut out = IdentityReport::default();
    for p in parts {
        out.absorb(p);
    }
    out
}

/// `D[−+] − (η−1)[(λ_-−m) P_m^{(λ_++1,−λ_-−1)} P_n + (η+1) P_m^{(λ_+,−λ_-)} Ṗ_n]`.
fn pd_mp_factor_diff(m: usize, n: usize, lam: &LambdaPair) -> Result<RatPoly> {
    let (lp, lm) = (lam.plus(), lam.minus());
    let q = JacobiParams::new(lp.clone(), -lm.clone());
    let base = lam.jacobi_params();
    let t1 = (&jacobi(m, &q.shifted(1, -1))? * &jacobi(n, &base)?).scale(&(lm - int(m as i64)));
    let t2 = &(&RatPoly::from_ints(&[1, 1]) * &jacobi(m, &q)?) * &jacobi_deriv(n, &base)?;
    let rhs = &RatPoly::from_ints(&[-1, 1]) * &(&t1 + &t2);
    Ok(&poly_det(m, n, lam, SigmaPair::MP)? - &rhs)
}

/// `D[+−] − (η+1)[(η−1) P_m^{(−λ_+,λ_-)} Ṗ_n + (λ_+−m) P_m^{(−λ_+−1,λ_-+1)} P_n]`.
fn pd_pm_factor_diff(m: usize, n: usize, lam: &LambdaPair) -> Result<RatPoly> {
    let (lp, lm) = (lam.plus(), lam.minus());
    let q = JacobiParams::new(-lp.clone(), lm.clone());
    let base = lam.jacobi_params();
    let t1 = &(&RatPoly::from_ints(&[-1, 1]) * &jacobi(m, &q)?) * &jacobi_deriv(n, &base)?;
    let t2 = (&jacobi(m, &q.shifted(-1, 1))? * &jacobi(n, &base)?).scale(&(lp - int(m as i64)));
    let rhs = &RatPoly::from_ints(&[1, 1]) * &(&t1 + &t2);
    Ok(&poly_det(m, n, lam, SigmaPair::PM)? - &rhs)
}

/// `D[−+] − (−1)^{m+n} (λ_-+n)(η−1) P̂_{m,m+n}^{(λ_-−1,λ_++1)}(−η)`.
fn pd_reversed_xm_diff(m: usize, n: usize, lam: &LambdaPair) -> Result<RatPoly> {
    let prm = JacobiParams::new(lam.minus() - Rat::one(), lam.plus() + Rat::one());
    let xm = xm_jacobi(m, n, &prm)?;
    let sign = if (m + n) % 2 == 0 { int(1) } else { int(-1) };
    let c = sign * (lam.minus() + int(n as i64));
    let rhs = (&RatPoly::from_ints(&[-1, 1]) * &xm.poly.reflect()).scale(&c);
    Ok(&poly_det(m, n, lam, SigmaPair::MP)? - &rhs)
}

fn xm_leading_diff(m: usize, n: usize, lam: &LambdaPair) -> Result<RatPoly> {
    let prm = JacobiParams::new(lam.minus() - Rat::one(), lam.plus() + Rat::one());
    let xm = xm_jacobi(m, n, &prm)?;
    Ok(RatPoly::constant(xm.poly.leading_coeff().cloned().unwrap_or_else(Rat::zero) - xm.leading))
}

/// `D[++](m, n) − (η²−1) W{P_m, P_n}`.
fn pd_wronskian_diff(m: usize, n: usize, lam: &LambdaPair) -> Result<RatPoly> {
    let base = lam.jacobi_params();
    let w = wronskian2(&jacobi(m, &base)?, &jacobi(n, &base)?);
    Ok(&poly_det(m, n, lam, SigmaPair::PP)? - &(&RatPoly::from_ints(&[-1, 0, 1]) * &w))
}

/// Factored `D[++](m, m+1)` versus the monic Wronskian, with `κ = (1, 1)`.
fn pd_wronskian_factored_diff(m: usize, lam: &LambdaPair) -> Result<RatPoly> {
    let base = lam.jacobi_params();
    let f = factor_pd(&poly_det(m, m + 1, lam, SigmaPair::PP)?)?;
    let w = wronskian2(&jacobi(m, &base)?, &jacobi(m + 1, &base)?).monic()?;
    if (f.kappa_minus, f.kappa_plus) != (1, 1) || f.degree != 2 * m {
        return Ok(RatPoly::one());
    }
    Ok(&f.poly - &w)
}

/// Deterministic default samples: rationals with small coprime parts.
///
/// Used where a caller needs a fixed, reproducible sweep without a random
/// number generator; `count` values are produced in each of `quadrants`.
pub fn grid_samples(count: usize, positive_only: bool) -> Vec<LambdaPair> {
    let nums = [3i64, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41];
    let dens = [2i64, 3, 7, 5, 11, 13, 4, 9];
    let mut out = Vec::with_capacity(count);
    let mut k = 0usize;
    while out.len() < count {
        let a = rat(nums[k % nums.len()], dens[(k / 3) % dens.len()]);
        let b = rat(nums[(k * 5 + 3) % nums.len()], dens[(k + 1) % dens.len()]);
        let (sa, sb) = if positive_only { (1, 1) } else { [(1, 1), (-1, 1), (-1, -1), (1, -1)][k % 4] };
        let lm = if sa < 0 { -a } else { a };
        let lp = if sb < 0 { -b } else { b };
        if let Ok(l) = LambdaPair::new(lm, lp) {
            out.push(l);
        }
        k += 1;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratpoly::{sturm_count, ExtRat, Interval};

    fn lam(pm: i64, qm: i64, pp: i64, qp: i64) -> LambdaPair {
        LambdaPair::from_fracs(pm, qm, pp, qp).unwrap()
    }

    #[test]
    fn s_poly_examples() {
        let (lp, lm) = (rat(2, 7), rat(31, 3));
        assert_eq!(s_poly(0, &lp, &lm).unwrap(), s_linear(&lp, &lm));
        assert_eq!(s_poly(0, &int(1), &int(1)).unwrap(), RatPoly::from_ints(&[0, 2]));
        for n in 0..6 {
            assert_eq!(s_poly(n, &lp, &lm).unwrap(), s_poly_via_derivative(n, &lp, &lm).unwrap());
            assert_eq!(s_poly(n, &lp, &lm).unwrap().degree(), Some(n + 1));
        }
    }

    #[test]
    fn poly_det_base_case() {
        // m = n = 0, σ = −−: S_1^{(λ)} − S_1^{(−λ)} = (λ_-+λ_+)η + λ_+ − λ_-.
        let l = lam(31, 3, 2, 7);
        let d = poly_det(0, 0, &l, SigmaPair::MM).unwrap();
        assert_eq!(d, RatPoly::linear(l.plus() - l.minus(), l.plus() + l.minus()));
    }

    #[test]
    fn minus_plus_pd_factor_structure() {
        let l = lam(31, 3, 2, 7);
        let d = poly_det(1, 1, &l, SigmaPair::MP).unwrap();
        let q = d.exact_div(&RatPoly::from_ints(&[1, -1])).expect("(1−η) divides");
        assert!(!q.eval(&int(1)).is_zero() && !q.eval(&int(-1)).is_zero());
    }

    #[test]
    fn factor_pd_examples() {
        let d = &RatPoly::from_ints(&[1, -1]) * &RatPoly::from_ints(&[3, 1]);
        let f = factor_pd(&d).unwrap();
        assert_eq!(f.poly, RatPoly::from_ints(&[3, 1]));
        assert_eq!((f.kappa_minus, f.kappa_plus), (0, 1));
        let g = factor_pd(&RatPoly::from_ints(&[5, 0, 2])).unwrap();
        assert_eq!((g.kappa_minus, g.kappa_plus, g.degree), (0, 0, 2));
        let sq = RatPoly::from_ints(&[1, 1]).pow(2);
        assert!(matches!(factor_pd(&sq), Err(Error::SimpleRootViolation { sign: '+' })));
        assert!(matches!(factor_pd(&RatPoly::zero()), Err(Error::ZeroPolynomial)));
        let l = lam(31, 3, 2, 7);
        for m1 in 0..3 {
            let f = factor_pd(&poly_det(m1, m1 + 1, &l, SigmaPair::PP).unwrap()).unwrap();
            assert_eq!((f.kappa_minus, f.kappa_plus, f.degree), (1, 1, 2 * m1));
        }
    }

    #[test]
    fn xm_examples() {
        // m = 0 degenerates to a multiple of the classical polynomial.
        let prm = JacobiParams::new(rat(9, 2), rat(3, 2));
        for n in 0..4 {
            let x = xm_jacobi(0, n, &prm).unwrap();
            assert_eq!(x.poly, jacobi(n, &prm).unwrap());
        }
        // m = 1, α = 4, β = 1, n = 1: the exceptional zero lies left of −1.
        let x = xm_jacobi(1, 1, &JacobiParams::new(int(4), int(1))).unwrap();
        assert_eq!(x.poly.degree(), Some(2));
        let left = Interval::open(ExtRat::NegInf, ExtRat::Finite(int(-1))).unwrap();
        let outside_right = Interval::open(ExtRat::Finite(int(1)), ExtRat::PosInf).unwrap();
        assert_eq!(sturm_count(&x.poly, &left).unwrap(), 1);
        assert_eq!(sturm_count(&x.poly, &outside_right).unwrap(), 0);
        assert_eq!(x.poly.leading_coeff(), Some(&x.leading));
    }

    #[test]
    fn xr_base_cases() {
        let lo = lam(13, 2, 3, 2);
        let (lm, lp) = (lo.minus().clone(), lo.plus().clone());
        // Family a, v = 0: monic P_n^{(λ_++1, λ_-−1)}.
        for n in 0..4 {
            let x = xr_jacobi(XrFamily::A, n, 0, &lo).unwrap();
            let e = jacobi(n, &JacobiParams::new(&lp + int(1), &lm - int(1))).unwrap().monic().unwrap();
            assert_eq!(x.poly, e);
        }
        // Family a, seed n = 0: monic P_v^{(λ_++1, −λ_-−1)}.
        for v in 0..2 {
            let x = xr_jacobi(XrFamily::A, 0, v, &lo).unwrap();
            let e = jacobi(v, &JacobiParams::new(&lp + int(1), -&lm - int(1))).unwrap().monic().unwrap();
            assert_eq!(x.poly, e);
        }
        // Family b, seed m = 0: monic P_v^{(λ_+−1, 1−λ_-)}.
        for v in 0..2 {
            let x = xr_jacobi(XrFamily::B, 0, v, &lo).unwrap();
            let e = jacobi(v, &JacobiParams::new(&lp - int(1), int(1) - &lm)).unwrap().monic().unwrap();
            assert_eq!(x.poly, e);
        }
        // Family a', v = 0: monic P_{m−1}^{(λ_++1, 1−λ_-)}.
        for m in 5..8 {
            let x = xr_jacobi(XrFamily::APrime, m, 0, &lo).unwrap();
            let e = jacobi(m - 1, &JacobiParams::new(&lp + int(1), int(1) - &lm)).unwrap().monic().unwrap();
            assert_eq!(x.poly, e);
            assert_eq!(x.degree, m - 1);
        }
    }

    #[test]
    fn xr_range_gates() {
        let lo = lam(11, 2, 1, 2);
        assert!(matches!(xr_jacobi(XrFamily::A, 1, 2, &lo), Err(Error::RangeViolation(_))));
        assert!(matches!(xr_jacobi(XrFamily::APrime, 4, 0, &lo), Err(Error::RangeViolation(_))));
        assert!(matches!(xr_jacobi(XrFamily::B, 1, 0, &lo), Err(Error::RangeViolation(_))));
        assert!(xr_jacobi(XrFamily::APrime, 5, 1, &lo).is_ok());
    }

    #[test]
    fn reversed_xm_examples() {
        assert!(xr_equals_reversed_xm(1, 0, &lam(11, 2, 1, 2)).unwrap().equal);
        assert!(xr_equals_reversed_xm(2, 1, &lam(13, 2, 1, 2)).unwrap().equal);
        assert!(xr_equals_reversed_xm(1, 2, &lam(17, 2, 1, 2)).unwrap().equal);
        assert!(xr_equals_reversed_xm(1, 2, &lam(11, 2, 1, 2)).is_err());
    }

    #[test]
    fn small_identity_sweeps() {
        let mixed = grid_samples(4, false);
        let r = verify_pd_identities(2, &mixed, Strategy::Sequential);
        assert!(r.pass(), "{:?}", r.failures);
        let pos = grid_samples(3, true);
        let r = verify_decompositions(2, &pos, Strategy::Sequential);
        assert!(r.pass(), "{:?}", r.failures);
    }

    #[test]
    fn sigma_parsing() {
        assert_eq!(SigmaPair::parse("-+").unwrap(), SigmaPair::MP);
        assert_eq!(SigmaPair::parse("+-").unwrap(), SigmaPair::PM);
        assert!(SigmaPair::parse("+").is_err());
        assert!(SigmaPair::new(2, 1).is_err());
        assert_eq!(SigmaPair::MP.to_string(), "-+");
        assert_eq!(XrFamily::A.pd_sigma(), SigmaPair::MP);
        assert_eq!(XrFamily::APrime.pd_sigma(), SigmaPair::PP);
        assert_eq!(XrFamily::B.pd_sigma(), SigmaPair::PM);
    }
}
