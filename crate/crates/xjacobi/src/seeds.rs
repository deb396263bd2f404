//! Jacobi-seed solutions of the Romanovski reference problem.
//!
//! A seed is a quasi-rational solution `(1+η)^{½(σ_-λ_-+1)} (η−1)^{½(σ_+λ_++1)} P_m`
//! with `P_m = P_m^{(σ_+λ_+, σ_-λ_-)}`. Its asymptotic sign `σ_∞` at `η → ∞` and the
//! range of `m` sort it into one of seven types; this module classifies seeds,
//! computes their energies and the finite discrete spectrum, and decides whether a
//! seed can serve as the factorization function of a rational Darboux transform.

use std::fmt;

use num::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::jacobi::{jacobi, JacobiParams, LambdaPair, Quadrant};
use crate::rational::{floor, fmt_rat, int, is_integer, pochhammer, rat, Rat};
use crate::ratpoly::{sturm_count, ExtRat, Interval, RatPoly};
use crate::xconstruct::SigmaPair;

/// Seed type, keyed by `(σ_-, σ_+, σ_∞)` and the admissible range of `m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SeedType {
    /// `(+,+,−)`, any `m`.
    A,
    /// `(−,+,−)`, `m > ½(λ_- − λ_+ − 1)`.
    APrime,
    /// `(−,−,+)`, `m < ½(λ_- + λ_+ − 1)`.
    B,
    /// `(+,−,+)`, `m < ½(λ_+ − λ_- − 1)`; only possible when the discrete spectrum is empty.
    BPrime,
    /// `(−,+,+)`, `m < ½(λ_- − λ_+ − 1)`: the bound states themselves.
    C,
    /// `(+,−,−)`, `m ≥ ½(λ_+ − λ_- − 1)`.
    D,
    /// `(−,−,−)`, `m > ½(λ_- + λ_+ − 1)`.
    DPrime,
}

impl SeedType {
    /// All seven types.
    pub const ALL: [SeedType; 7] =
        [SeedType::A, SeedType::APrime, SeedType::B, SeedType::BPrime, SeedType::C, SeedType::D, SeedType::DPrime];

    /// Parses `a`, `a'`, `b`, `b'`, `c`, `d`, `d'`.
    pub fn parse(s: &str) -> Result<Self> {
        Ok(match s.trim() {
            "a" => SeedType::A,
            "a'" | "ap" => SeedType::APrime,
            "b" => SeedType::B,
            "b'" | "bp" => SeedType::BPrime,
            "c" => SeedType::C,
            "d" => SeedType::D,
            "d'" | "dp" => SeedType::DPrime,
            other => return Err(Error::Parse(format!("unknown seed type {other:?}"))),
        })
    }

    /// Sign pair `(σ_-, σ_+)` of the type.
    pub fn sigma(&self) -> SigmaPair {
        match self {
            SeedType::A => SigmaPair::PP,
            SeedType::APrime | SeedType::C => SigmaPair::MP,
            SeedType::B | SeedType::DPrime => SigmaPair::MM,
            SeedType::BPrime | SeedType::D => SigmaPair::PM,
        }
    }

    /// Asymptotic sign `σ_∞` of the type.
    pub fn sigma_inf(&self) -> i32 {
        match self {
            SeedType::A | SeedType::APrime | SeedType::D | SeedType::DPrime => -1,
            SeedType::B | SeedType::BPrime | SeedType::C => 1,
        }
    }
}

impl fmt::Display for SeedType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SeedType::A => "a",
            SeedType::APrime => "a'",
            SeedType::B => "b",
            SeedType::BPrime => "b'",
            SeedType::C => "c",
            SeedType::D => "d",
            SeedType::DPrime => "d'",
        })
    }
}

/// A classified seed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeedSpec {
    /// `(σ_-, σ_+)`.
    pub sigma: SigmaPair,
    /// Asymptotic sign at infinity (as supplied or derived).
    pub sigma_inf: i32,
    /// Degree of the seed polynomial.
    pub m: usize,
    /// Positive exponent differences `λ_o`.
    pub lam_o: LambdaPair,
    /// Type from the classification table.
    pub type_tag: SeedType,
    /// `ε = 1 − (σ_-λ_- + σ_+λ_+ + 2m + 1)²`.
    pub energy: Rat,
}

impl SeedSpec {
    /// Jacobi indexes `(σ_+λ_+, σ_-λ_-)` of the seed polynomial.
    pub fn jacobi_params(&self) -> JacobiParams {
        self.lam_o.signed(self.sigma.minus(), self.sigma.plus()).jacobi_params()
    }

    /// The seed polynomial `P_m^{(σ_+λ_+, σ_-λ_-)}`.
    pub fn poly(&self) -> Result<RatPoly> {
        jacobi(self.m, &self.jacobi_params())
    }
}

/// Seed energy `1 − (σ_-λ_- + σ_+λ_+ + 2m + 1)²`.
pub fn energy(sigma: SigmaPair, m: usize, lam_o: &LambdaPair) -> Rat {
    let s = exponent_sum(sigma, m, lam_o);
    Rat::one() - &s * &s
}

/// `σ_-λ_- + σ_+λ_+ + 2m + 1`; its sign fixes the growth of the seed at infinity.
pub fn exponent_sum(sigma: SigmaPair, m: usize, lam_o: &LambdaPair) -> Rat {
    let l = lam_o.signed(sigma.minus(), sigma.plus());
    l.minus() + l.plus() + int(2 * m as i64 + 1)
}

/// Asymptotic sign derived from the exponent sum: `σ_∞ = −sign(σ_-λ_- + σ_+λ_+ + 2m + 1)`.
///
/// A vanishing sum is only meaningful on the lower edge of the type-d range, where it
/// resolves to `−`; anywhere else it is a [`Error::RangeViolation`].
pub fn derived_sigma_inf(sigma: SigmaPair, m: usize, lam_o: &LambdaPair) -> Result<i32> {
    let s = exponent_sum(sigma, m, lam_o);
    if s.is_positive() {
        Ok(-1)
    } else if s.is_negative() {
        Ok(1)
    } else if sigma == SigmaPair::PM {
        Ok(-1)
    } else {
        Err(Error::RangeViolation(format!(
            "σ = {sigma}, m = {m}: exponent sum at infinity vanishes, asymptotic sign undefined"
        )))
    }
}

fn require_positive(lam_o: &LambdaPair) -> Result<()> {
    if lam_o.quadrant() == Quadrant::I {
        Ok(())
    } else {
        Err(Error::InvalidLambda(format!(
            "({}, {}): seed classification requires λ_o > 0",
            fmt_rat(lam_o.minus()),
            fmt_rat(lam_o.plus())
        )))
    }
}

/// Classifies a seed from an explicit triple `(σ_-, σ_+, σ_∞)`.
///
/// All range bounds are compared exactly. The `(−,+,+)` triple is read as type c when
/// `λ_- > λ_+` and as type b' otherwise (only one of the two ranges can be nonempty);
/// the triple `(+,−,+)`, which is what the growth at infinity actually gives for b',
/// is accepted as b' as well.
pub fn classify(sigma: SigmaPair, sigma_inf: i32, m: usize, lam_o: &LambdaPair) -> Result<SeedSpec> {
    require_positive(lam_o)?;
    if sigma_inf != 1 && sigma_inf != -1 {
        return Err(Error::Parse(format!("σ_∞ must be ±1, got {sigma_inf}")));
    }
    let (lm, lp) = (lam_o.minus(), lam_o.plus());
    let half = |x: Rat| x / int(2);
    let mq = int(m as i64);
    let above = |bound: Rat, strict: bool, what: &str| -> Result<()> {
        let ok = if strict { mq > bound } else { mq >= bound };
        if ok {
            Ok(())
        } else {
            Err(Error::RangeViolation(format!(
                "m = {m} must satisfy m {} {what} = {}",
                if strict { ">" } else { "≥" },
                fmt_rat(&bound)
            )))
        }
    };
    let below = |bound: Rat, what: &str| -> Result<()> {
        if mq < bound {
            Ok(())
        } else {
            Err(Error::RangeViolation(format!("m = {m} must satisfy m < {what} = {}", fmt_rat(&bound))))
        }
    };
    let tag = match (sigma.minus(), sigma.plus(), sigma_inf) {
        (1, 1, -1) => SeedType::A,
        (-1, 1, -1) => {
            above(half(lm - lp - Rat::one()), true, "½(λ_- − λ_+ − 1)")?;
            SeedType::APrime
        }
        (-1, 1, 1) if lm > lp => {
            below(half(lm - lp - Rat::one()), "½(λ_- − λ_+ − 1)")?;
            SeedType::C
        }
        (-1, 1, 1) | (1, -1, 1) => {
            below(half(lp - lm - Rat::one()), "½(λ_+ − λ_- − 1)")?;
            SeedType::BPrime
        }
        (1, -1, -1) => {
            above(half(lp - lm - Rat::one()), false, "½(λ_+ − λ_- − 1)")?;
            SeedType::D
        }
        (-1, -1, 1) => {
            below(half(lm + lp - Rat::one()), "½(λ_- + λ_+ − 1)")?;
            SeedType::B
        }
        (-1, -1, -1) => {
            above(half(lm + lp - Rat::one()), true, "½(λ_- + λ_+ − 1)")?;
            SeedType::DPrime
        }
        (a, b, c) => {
            return Err(Error::NoSuchType(format!(
                "({}, {}, {}) matches no seed type",
                sign_char(a),
                sign_char(b),
                sign_char(c)
            )))
        }
    };
    Ok(SeedSpec { sigma, sigma_inf, m, lam_o: lam_o.clone(), type_tag: tag, energy: energy(sigma, m, lam_o) })
}

/// Classifies a seed with `σ_∞` derived from its growth at infinity.
pub fn classify_derived(sigma: SigmaPair, m: usize, lam_o: &LambdaPair) -> Result<SeedSpec> {
    require_positive(lam_o)?;
    classify(sigma, derived_sigma_inf(sigma, m, lam_o)?, m, lam_o)
}

fn sign_char(s: i32) -> char {
    if s < 0 {
        '−'
    } else {
        '+'
    }
}

/// Finite discrete spectrum of the Romanovski reference problem.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Spectrum {
    /// Exponent differences.
    pub lam_o: LambdaPair,
    /// Highest level, `⌊½(λ_- − λ_+ − 1)⌋`.
    pub v_max: usize,
    /// `ε_v = 1 − (λ_- − λ_+ − 2v − 1)²` for `v = 0..=v_max`.
    pub energies: Vec<Rat>,
    /// Set when `λ_- − λ_+ − 1` is an even integer, so the top level sits on the continuum edge `ε = 1`.
    pub borderline: bool,
}

/// Energy `1 − (λ_- − λ_+ − 1)²` of the lowest level (defined even when no level exists).
pub fn ground_energy(lam_o: &LambdaPair) -> Rat {
    let g = lam_o.minus() - lam_o.plus() - Rat::one();
    Rat::one() - &g * &g
}

/// Discrete spectrum; [`Error::EmptySpectrum`] when `λ_- − λ_+ < 1`.
pub fn spectrum(lam_o: &LambdaPair) -> Result<Spectrum> {
    require_positive(lam_o)?;
    let g = lam_o.minus() - lam_o.plus() - Rat::one();
    if g.is_negative() {
        return Err(Error::EmptySpectrum(fmt_rat(&g)));
    }
    let vm = floor(&(&g / int(2)));
    let v_max: usize = vm.try_into().map_err(|_| Error::RangeViolation("spectrum too large".into()))?;
    let energies = (0..=v_max)
        .map(|v| {
            let t = &g - int(2 * v as i64);
            Rat::one() - &t * &t
        })
        .collect();
    let borderline = is_integer(&(&g / int(2)));
    Ok(Spectrum { lam_o: lam_o.clone(), v_max, energies, borderline })
}

/// Klein-type parity prediction for zeros of `P_m^{(α,β)}` on `(1, ∞)`.
///
/// The product `(α+β+m+1)_m (α+1)_m` carries the sign of `P_m(1)·lc(P_m)`; when it is
/// positive the number of zeros beyond `η = 1` is even, and for the type-d seeds it is
/// zero. Returns `None` when the product vanishes (a zero at `η = 1` or a collapsed degree).
pub fn klein_nodeless(m: usize, prm: &JacobiParams) -> Option<bool> {
    let p = pochhammer(&(&prm.alpha + &prm.beta + int(m as i64 + 1)), m) * pochhammer(&(&prm.alpha + Rat::one()), m);
    if p.is_zero() {
        None
    } else {
        Some(p.is_positive())
    }
}

/// Outcome of the admissibility test, with each check reported separately.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Admissibility {
    /// Overall verdict.
    pub admissible: bool,
    /// Seed energy strictly below the lowest level.
    pub energy_below: bool,
    /// Real zeros of the seed polynomial on `(1, ∞)`; `None` if the polynomial collapsed.
    pub zero_count: Option<usize>,
    /// `zero_count == Some(0)`.
    pub nodeless: bool,
    /// Type b only: `λ_+ > ½`, the sufficient condition for a principal factorization function.
    pub ff_usable: Option<bool>,
    /// Type d only: the rising-factorial prediction of nodelessness.
    pub klein_prediction: Option<bool>,
    /// The seed polynomial vanishes at `η = 1`.
    pub endpoint_zero: bool,
    /// Human-readable notes, one per check.
    pub diagnostics: Vec<String>,
}

/// Decides whether a seed can generate a rational Darboux transform that keeps the spectrum.
///
/// A seed is admissible when its energy lies strictly below the ground level and its
/// polynomial has no zeros on `(1, ∞)`. Type b' is never admissible; type b seeds with
/// `λ_+ ≤ ½` would need a non-principal factorization function and are rejected with a
/// separate diagnostic.
pub fn is_admissible(seed: &SeedSpec) -> Admissibility {
    let mut diag = Vec::new();
    let lam = &seed.lam_o;
    let e0 = ground_energy(lam);
    let has_spectrum = !(lam.minus() - lam.plus() - Rat::one()).is_negative();
    let energy_below = has_spectrum && seed.energy < e0;
    if !has_spectrum {
        diag.push("energy: no discrete spectrum to lie below".to_string());
    } else {
        diag.push(format!(
            "energy: ε = {} {} ε_0 = {}",
            fmt_rat(&seed.energy),
            if energy_below { "<" } else { "≥" },
            fmt_rat(&e0)
        ));
    }
    let (zero_count, endpoint_zero) = match seed.poly() {
        Ok(p) => {
            let iv = Interval::open(ExtRat::Finite(Rat::one()), ExtRat::PosInf).expect("1 < ∞");
            let z = sturm_count(&p, &iv).expect("nonzero polynomial");
            let ez = p.eval(&Rat::one()).is_zero();
            diag.push(format!("nodes: {z} zero(s) on (1, ∞)"));
            if ez {
                diag.push("nodes: seed polynomial vanishes at η = 1".to_string());
            }
            (Some(z), ez)
        }
        Err(e) => {
            diag.push(format!("nodes: seed polynomial unavailable ({e})"));
            (None, false)
        }
    };
    let nodeless = zero_count == Some(0);
    let mut admissible = energy_below && nodeless;
    let mut ff_usable = None;
    let mut klein_prediction = None;
    match seed.type_tag {
        SeedType::BPrime => {
            admissible = false;
            diag.push("type b': does not co-exist with the discrete spectrum".to_string());
        }
        SeedType::B => {
            let ok = lam.plus() > &rat(1, 2);
            ff_usable = Some(ok);
            if !ok {
                admissible = false;
                diag.push("type b: λ_+ ≤ ½ needs a non-principal factorization function; rejected".to_string());
            }
        }
        SeedType::D => {
            klein_prediction = klein_nodeless(seed.m, &seed.jacobi_params());
            match klein_prediction {
                Some(k) => diag.push(format!("type d: rising-factorial test predicts nodeless = {k}")),
                None => diag.push("type d: rising-factorial product vanishes".to_string()),
            }
        }
        _ => {}
    }
    Admissibility { admissible, energy_below, zero_count, nodeless, ff_usable, klein_prediction, endpoint_zero, diagnostics: diag }
}

/// Energy gap `ε_seed − ε_0` in closed form for the FF-capable types (a, a', b, d).
///
/// Provided as an independent cross-check of the direct comparison in [`is_admissible`].
pub fn closed_form_gap(tag: SeedType, m: usize, lam_o: &LambdaPair) -> Option<Rat> {
    let (lm, lp) = (lam_o.minus().clone(), lam_o.plus().clone());
    let mq = int(m as i64);
    let one = Rat::one();
    Some(match tag {
        SeedType::A => {
            let a = &lp - &lm + &one;
            let b = &lp + &lm + int(2 * m as i64 + 1);
            &a * &a - &b * &b
        }
        SeedType::APrime => -int(4) * &mq * (&mq + &one + &lp - &lm),
        SeedType::B => -int(4) * (&lp - &mq) * (&lm - &one - &mq),
        SeedType::D => -int(4) * (&mq + &one) * (&lm - &lp + &mq),
        _ => return None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lam(pm: i64, qm: i64, pp: i64, qp: i64) -> LambdaPair {
        LambdaPair::from_fracs(pm, qm, pp, qp).unwrap()
    }

    #[test]
    fn table_rows() {
        let l = lam(11, 2, 1, 2);
        assert_eq!(classify(SigmaPair::PP, -1, 5, &l).unwrap().type_tag, SeedType::A);
        assert!(matches!(classify(SigmaPair::MP, -1, 2, &l), Err(Error::RangeViolation(_))));
        assert_eq!(classify(SigmaPair::MP, -1, 3, &l).unwrap().type_tag, SeedType::APrime);
        assert_eq!(classify(SigmaPair::MP, 1, 1, &l).unwrap().type_tag, SeedType::C);
        assert!(matches!(classify(SigmaPair::MP, 1, 2, &l), Err(Error::RangeViolation(_))));
        assert!(matches!(classify(SigmaPair::PP, 1, 0, &l), Err(Error::NoSuchType(_))));
        // ½(λ_- + λ_+ − 1) = 5/2
        assert_eq!(classify(SigmaPair::MM, 1, 2, &l).unwrap().type_tag, SeedType::B);
        assert_eq!(classify(SigmaPair::MM, -1, 3, &l).unwrap().type_tag, SeedType::DPrime);
        assert_eq!(classify(SigmaPair::PM, -1, 0, &l).unwrap().type_tag, SeedType::D);
        assert!(classify(SigmaPair::PM, 1, 0, &l).is_err());
        // b' lives only where λ_+ > λ_- + 1.
        let r = lam(1, 2, 9, 2);
        assert_eq!(classify(SigmaPair::MP, 1, 1, &r).unwrap().type_tag, SeedType::BPrime);
        assert_eq!(classify(SigmaPair::PM, 1, 1, &r).unwrap().type_tag, SeedType::BPrime);
    }

    #[test]
    fn derived_sign_matches_table() {
        for l in [lam(11, 2, 1, 2), lam(13, 2, 3, 2), lam(1, 2, 9, 2), lam(7, 3, 5, 4)] {
            for sigma in SigmaPair::ALL {
                for m in 0..10 {
                    if let Ok(s) = classify_derived(sigma, m, &l) {
                        assert_eq!(s.type_tag.sigma_inf(), s.sigma_inf, "{sigma} {m}");
                        assert_eq!(classify(s.sigma, s.sigma_inf, s.m, &s.lam_o).unwrap(), s);
                    }
                }
            }
        }
    }

    #[test]
    fn spectra() {
        let s = spectrum(&lam(11, 2, 1, 2)).unwrap();
        assert_eq!(s.v_max, 2);
        assert_eq!(s.energies, vec![int(-15), int(-3), int(1)]);
        assert!(s.borderline);
        let s = spectrum(&lam(3, 2, 1, 2)).unwrap();
        assert_eq!((s.v_max, s.energies.clone(), s.borderline), (0, vec![int(1)], true));
        let s = spectrum(&lam(13, 2, 1, 2)).unwrap();
        assert_eq!(s.energies, vec![int(-24), int(-8), int(0)]);
        assert!(!s.borderline);
        assert!(matches!(spectrum(&lam(1, 1, 2, 1)), Err(Error::EmptySpectrum(_))));
    }

    #[test]
    fn admissibility_examples() {
        let l = lam(11, 2, 1, 2);
        for n in 0..8 {
            let a = is_admissible(&classify(SigmaPair::PP, -1, n, &l).unwrap());
            assert!(a.admissible, "{a:?}");
        }
        let d = is_admissible(&classify(SigmaPair::PM, -1, 2, &lam(9, 1, 5, 2)).unwrap());
        assert_eq!(d.klein_prediction, Some(true));
        assert_eq!(d.zero_count, Some(0));
        assert!(d.admissible);
        let c = is_admissible(&classify(SigmaPair::MP, 1, 0, &l).unwrap());
        assert!(!c.energy_below && !c.admissible);
        let bp = is_admissible(&classify(SigmaPair::PM, 1, 0, &lam(1, 2, 9, 2)).unwrap());
        assert!(!bp.admissible);
    }

    #[test]
    fn closed_form_gaps_agree() {
        for l in [lam(11, 2, 1, 2), lam(13, 2, 3, 2), lam(9, 1, 5, 2), lam(17, 3, 2, 5)] {
            for (sigma, tag) in
                [(SigmaPair::PP, SeedType::A), (SigmaPair::MP, SeedType::APrime), (SigmaPair::MM, SeedType::B), (SigmaPair::PM, SeedType::D)]
            {
                for m in 0..8 {
                    let gap = energy(sigma, m, &l) - ground_energy(&l);
                    assert_eq!(closed_form_gap(tag, m, &l).unwrap(), gap, "{tag} {m}");
                }
            }
        }
    }
}
