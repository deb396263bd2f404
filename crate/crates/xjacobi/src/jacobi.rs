//! Classical Jacobi polynomials with exact rational indexes, their derivative
//! and contiguous relations, and Romanovski–Jacobi polynomials.

use num::{BigInt, Integer, One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exec::{self, Strategy};
use crate::rational::{factorial, fmt_rat, int, pochhammer, rat, Rat};
use crate::ratpoly::RatPoly;

/// The two indexes `(α, β)` of `P_n^{(α,β)}`; α belongs to η = +1, β to η = −1.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct JacobiParams {
    /// Index attached to the endpoint η = +1.
    pub alpha: Rat,
    /// Index attached to the endpoint η = −1.
    pub beta: Rat,
}

impl JacobiParams {
    /// `(α, β)`.
    pub fn new(alpha: Rat, beta: Rat) -> Self {
        Self { alpha, beta }
    }

    /// `(α + da, β + db)`.
    pub fn shifted(&self, da: i64, db: i64) -> Self {
        Self { alpha: &self.alpha + int(da), beta: &self.beta + int(db) }
    }
}

/// Leading coefficient `k_n^{(α,β)} = (α+β+n+1)_n / (n! 2^n)`.
pub fn leading_coeff(n: usize, prm: &JacobiParams) -> Rat {
    let a = &prm.alpha + &prm.beta + int(n as i64 + 1);
    pochhammer(&a, n) / (factorial(n) * Rat::from_integer(num::pow(num::BigInt::from(2), n)))
}

/// Hypergeometric form
/// `P_n = (1/n!) Σ_k C(n,k) (α+β+n+1)_k (α+k+1)_{n−k} ((η−1)/2)^k`,
/// valid for every parameter value.
///
/// With `α = p/D`, `β = q/D` over a common denominator the whole expansion is an
/// integer polynomial over `Dⁿ n! 2ⁿ`:
/// `N_j = Σ_{k≥j} C(n,k) C(k,j) (−1)^{k−j} 2^{n−k} Π_{i<k}(D(n+1+i)+p+q) Π_{k<i≤n}(p+iD)`,
/// so each coefficient is reduced exactly once.
fn jacobi_integer(n: usize, prm: &JacobiParams) -> RatPoly {
    let d = prm.alpha.denom().lcm(prm.beta.denom());
    let p = prm.alpha.numer() * (&d / prm.alpha.denom());
    let q = prm.beta.numer() * (&d / prm.beta.denom());
    let big = |v: usize| BigInt::from(v);
    // a[k] = Π_{i<k} (D(n+1+i) + p + q)
    let mut a = vec![BigInt::one()];
    for i in 0..n {
        let next = &a[i] * (&d * big(n + 1 + i) + &p + &q);
        a.push(next);
    }
    // b[k] = Π_{k<i≤n} (p + iD)
    let mut b = vec![BigInt::one(); n + 1];
    for k in (0..n).rev() {
        b[k] = &b[k + 1] * (&p + &d * big(k + 1));
    }
    let binom = |n: usize, k: usize| -> BigInt { (0..k).fold(BigInt::one(), |acc, i| acc * big(n - i) / big(i + 1)) };
    let terms: Vec<BigInt> =
        (0..=n).map(|k| binom(n, k) * &a[k] * &b[k] * (BigInt::one() << (n - k))).collect();
    let den = num::pow(d, n) * factorial_int(n) * (BigInt::one() << n);
    let coeffs = (0..=n)
        .map(|j| {
            let mut num = BigInt::zero();
            for (k, t) in terms.iter().enumerate().skip(j) {
                let c = binom(k, j) * t;
                if (k - j) % 2 == 0 {
                    num += c;
                } else {
                    num -= c;
                }
            }
            Rat::new(num, den.clone())
        })
        .collect();
    RatPoly::from_coeffs(coeffs)
}

fn factorial_int(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

/// `P_n^{(α,β)}(η)` from its hypergeometric expansion in exact integer arithmetic.
///
/// A vanishing leading coefficient is reported as [`Error::DegreeCollapse`]
/// rather than returning a lower-degree polynomial.
pub fn jacobi(n: usize, prm: &JacobiParams) -> Result<RatPoly> {
    if leading_coeff(n, prm).is_zero() {
        return Err(Error::DegreeCollapse { n, alpha: fmt_rat(&prm.alpha), beta: fmt_rat(&prm.beta) });
    }
    Ok(jacobi_integer(n, prm))
}

/// `P_n` with the convention `P_{−1} ≡ 0`.
pub fn jacobi_signed(n: i64, prm: &JacobiParams) -> Result<RatPoly> {
    if n < 0 {
        Ok(RatPoly::zero())
    } else {
        jacobi(n as usize, prm)
    }
}

/// `Ṗ_n^{(α,β)} = ½(α+β+n+1) P_{n−1}^{(α+1,β+1)}`; zero for `n = 0`.
pub fn jacobi_deriv(n: usize, prm: &JacobiParams) -> Result<RatPoly> {
    if n == 0 {
        return Ok(RatPoly::zero());
    }
    let c = (&prm.alpha + &prm.beta + int(n as i64 + 1)) / int(2);
    Ok(jacobi(n - 1, &prm.shifted(1, 1))?.scale(&c))
}

/// Quadrant of an exponent-difference pair `(λ_-, λ_+)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Quadrant {
    /// λ_- > 0, λ_+ > 0.
    I,
    /// λ_- < 0, λ_+ > 0.
    II,
    /// λ_- < 0, λ_+ < 0.
    III,
    /// λ_- > 0, λ_+ < 0.
    IV,
}

/// Exponent differences `(λ_-, λ_+)` at η = −1 and η = +1.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LambdaPair {
    lam_minus: Rat,
    lam_plus: Rat,
}

impl LambdaPair {
    /// Rejects zero components (quadrant boundaries).
    pub fn new(lam_minus: Rat, lam_plus: Rat) -> Result<Self> {
        if lam_minus.is_zero() || lam_plus.is_zero() {
            return Err(Error::InvalidLambda(format!(
                "({}, {}): components must be nonzero",
                fmt_rat(&lam_minus),
                fmt_rat(&lam_plus)
            )));
        }
        Ok(Self { lam_minus, lam_plus })
    }

    /// Positive pair `λ_o` (quadrant I), as required by the Romanovski constructions.
    pub fn positive(lam_minus: Rat, lam_plus: Rat) -> Result<Self> {
        let l = Self::new(lam_minus, lam_plus)?;
        if l.quadrant() != Quadrant::I {
            return Err(Error::InvalidLambda(format!(
                "({}, {}): both components must be positive",
                fmt_rat(&l.lam_minus),
                fmt_rat(&l.lam_plus)
            )));
        }
        Ok(l)
    }

    /// Convenience constructor from integer fractions `(p−/q−, p+/q+)`.
    pub fn from_fracs(pm: i64, qm: i64, pp: i64, qp: i64) -> Result<Self> {
        Self::new(rat(pm, qm), rat(pp, qp))
    }

    /// λ_-, the exponent difference at η = −1.
    pub fn minus(&self) -> &Rat {
        &self.lam_minus
    }

    /// λ_+, the exponent difference at η = +1.
    pub fn plus(&self) -> &Rat {
        &self.lam_plus
    }

    /// Sign-table quadrant.
    pub fn quadrant(&self) -> Quadrant {
        match (self.lam_minus.is_positive(), self.lam_plus.is_positive()) {
            (true, true) => Quadrant::I,
            (false, true) => Quadrant::II,
            (false, false) => Quadrant::III,
            (true, false) => Quadrant::IV,
        }
    }

    /// `(σ_- λ_-, σ_+ λ_+)` for signs `σ_± ∈ {±1}`.
    pub fn signed(&self, sigma_minus: i32, sigma_plus: i32) -> Self {
        let f = |s: i32, v: &Rat| if s < 0 { -v } else { v.clone() };
        Self { lam_minus: f(sigma_minus, &self.lam_minus), lam_plus: f(sigma_plus, &self.lam_plus) }
    }

    /// Jacobi indexes `(α, β) = (λ_+, λ_-)` of the seed polynomials.
    pub fn jacobi_params(&self) -> JacobiParams {
        JacobiParams::new(self.lam_plus.clone(), self.lam_minus.clone())
    }
}

/// Romanovski–Jacobi polynomial in `z = (η − 1)/2`.
///
/// Returns `J_v(z) = P_v^{(−λ_-, λ_+)}(−(2z + 1))`, i.e. the Jacobi polynomial
/// with its argument `x = 2z + 1` replaced by `−x`. This is the form that is
/// orthogonal on `z ∈ (0, ∞)` with weight `(z+1)^{−λ_-} z^{λ_+}`; it equals
/// `(−1)^v P_v^{(λ_+, −λ_-)}(η)`.
pub fn r_jacobi(v: usize, lam: &LambdaPair) -> Result<RatPoly> {
    let p = jacobi(v, &JacobiParams::new(-lam.minus().clone(), lam.plus().clone()))?;
    Ok(p.compose_affine(&int(-2), &int(-1)))
}

/// One failed (or skipped) identity check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityFailure {
    /// Identity label, e.g. `"contiguous-beta"`.
    pub identity: String,
    /// Degree index at which it failed.
    pub n: usize,
    /// Parameters at which it failed, as `(α, β)` or `(λ_+, λ_-)`.
    pub params: JacobiParams,
    /// Short diagnostic (nonzero difference or construction error).
    pub detail: String,
}

/// Outcome of an exact identity sweep.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct IdentityReport {
    /// Number of identity instances compared.
    pub checked: usize,
    /// Instances skipped because a factor degree-collapses or a denominator vanishes.
    pub skipped: usize,
    /// Instances whose difference is not the zero polynomial.
    pub failures: Vec<IdentityFailure>,
}

impl IdentityReport {
    /// `true` when every compared instance held exactly.
    pub fn pass(&self) -> bool {
        self.failures.is_empty()
    }

    /// Merges another report into this one.
    pub fn absorb(&mut self, other: IdentityReport) {
        self.checked += other.checked;
        self.skipped += other.skipped;
        self.failures.extend(other.failures);
    }

    pub(crate) fn record(&mut self, label: &str, n: usize, prm: &JacobiParams, diff: Result<RatPoly>) {
        match diff {
            Ok(d) if d.is_zero() => self.checked += 1,
            Ok(d) => {
                self.checked += 1;
                self.failures.push(IdentityFailure {
                    identity: label.into(),
                    n,
                    params: prm.clone(),
                    detail: format!("difference = {d}"),
                });
            }
            Err(Error::DegreeCollapse { .. }) | Err(Error::DivisionByZero(_)) => self.skipped += 1,
            Err(e) => self.failures.push(IdentityFailure {
                identity: label.into(),
                n,
                params: prm.clone(),
                detail: e.to_string(),
            }),
        }
    }
}

/// `P_n^{(α,β)} − [(α+β+n+1) P_n^{(α+1,β)} − (β+n) P_n^{(α+1,β−1)}]/(α+n+1)`.
fn contiguous_alpha_diff(n: usize, prm: &JacobiParams) -> Result<RatPoly> {
    let nn = int(n as i64);
    let d = &prm.alpha + &nn + Rat::one();
    if d.is_zero() {
        return Err(Error::DivisionByZero("α + n + 1".into()));
    }
    let c1 = (&prm.alpha + &prm.beta + &nn + Rat::one()) / &d;
    let c2 = (&prm.beta + &nn) / &d;
    let rhs = &jacobi(n, &prm.shifted(1, 0))?.scale(&c1) - &jacobi(n, &prm.shifted(1, -1))?.scale(&c2);
    Ok(&jacobi(n, prm)? - &rhs)
}

/// `P_n^{(α+1,β)} − P_n^{(α,β)} − ½(η+1) P_{n−1}^{(α+1,β+1)}`.
fn contiguous_beta_diff(n: usize, prm: &JacobiParams) -> Result<RatPoly> {
    let lhs = &jacobi(n, &prm.shifted(1, 0))? - &jacobi(n, prm)?;
    let rhs = &RatPoly::linear(rat(1, 2), rat(1, 2)) * &jacobi_signed(n as i64 - 1, &prm.shifted(1, 1))?;
    Ok(&lhs - &rhs)
}

/// With `(λ_+, λ_-) = (α, β)`:
/// `λ_- P_m^{(λ_+,−λ_-)} − (η+1) Ṗ_m^{(λ_+,−λ_-)} − (λ_- − m) P_m^{(λ_++1,−λ_-−1)}`.
pub(crate) fn eliminate_minus_diff(m: usize, prm: &JacobiParams) -> Result<RatPoly> {
    let (lp, lm) = (&prm.alpha, &prm.beta);
    let q = JacobiParams::new(lp.clone(), -lm.clone());
    let p = jacobi(m, &q)?;
    let lhs = &p.scale(lm) - &(&RatPoly::linear(Rat::one(), Rat::one()) * &p.differentiate());
    let rhs = jacobi(m, &q.shifted(1, -1))?.scale(&(lm - int(m as i64)));
    Ok(&lhs - &rhs)
}

/// With `(λ_+, λ_-) = (α, β)`:
/// `λ_+ P_m^{(−λ_+,λ_-)} + (1−η) Ṗ_m^{(−λ_+,λ_-)} − (λ_+ − m) P_m^{(−λ_+−1,λ_-+1)}`.
pub(crate) fn eliminate_plus_diff(m: usize, prm: &JacobiParams) -> Result<RatPoly> {
    let (lp, lm) = (&prm.alpha, &prm.beta);
    let q = JacobiParams::new(-lp.clone(), lm.clone());
    let p = jacobi(m, &q)?;
    let lhs = &p.scale(lp) + &(&RatPoly::linear(Rat::one(), -Rat::one()) * &p.differentiate());
    let rhs = jacobi(m, &q.shifted(-1, 1))?.scale(&(lp - int(m as i64)));
    Ok(&lhs - &rhs)
}

/// Dual derivative paths: closed form versus term-by-term differentiation.
fn derivative_diff(n: usize, prm: &JacobiParams) -> Result<RatPoly> {
    Ok(&jacobi_deriv(n, prm)? - &jacobi(n, prm)?.differentiate())
}

/// Closed-form leading coefficient versus the constructed polynomial.
fn leading_coeff_diff(n: usize, prm: &JacobiParams) -> Result<RatPoly> {
    let p = jacobi(n, prm)?;
    let lc = p.leading_coeff().cloned().unwrap_or_else(Rat::zero);
    let deg_ok = p.degree() == Some(n);
    let d = lc - leading_coeff(n, prm);
    Ok(if deg_ok { RatPoly::constant(d) } else { RatPoly::one() })
}

/// Exact sweep of the Jacobi-level identities for `0 ≤ n ≤ n_max` and every sample.
///
/// Checked relations: the two contiguous relations in α and in β, the two
/// first-derivative eliminations at η = ∓1 (samples read as `(λ_+, λ_-)`),
/// the closed-form derivative, and the closed-form leading coefficient.
pub fn verify_contiguous_identities(n_max: usize, samples: &[JacobiParams], strategy: Strategy) -> IdentityReport {
    let work: Vec<(usize, &JacobiParams)> =
        samples.iter().flat_map(|p| (0..=n_max).map(move |n| (n, p))).collect();
    let parts = exec::map(strategy, &work, |&(n, prm)| {
        let mut r = IdentityReport::default();
        r.record("contiguous-alpha", n, prm, contiguous_alpha_diff(n, prm));
        r.record("contiguous-beta", n, prm, contiguous_beta_diff(n, prm));
        r.record("eliminate-derivative-minus", n, prm, eliminate_minus_diff(n, prm));
        r.record("eliminate-derivative-plus", n, prm, eliminate_plus_diff(n, prm));
        r.record("derivative", n, prm, derivative_diff(n, prm));
        r.record("leading-coefficient", n, prm, leading_coeff_diff(n, prm));
        r
    });
    let mut out = IdentityReport::default();
    for p in parts {
        out.absorb(p);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Hypergeometric form
    /// `P_n = (1/n!) Σ_k C(n,k) (α+β+n+1)_k (α+k+1)_{n−k} ((η−1)/2)^k`,
    /// evaluated term by term in rational arithmetic.
    fn jacobi_sum(n: usize, prm: &JacobiParams) -> RatPoly {
        let z = RatPoly::linear(rat(-1, 2), rat(1, 2));
        let apb = &prm.alpha + &prm.beta + int(n as i64 + 1);
        let mut acc = RatPoly::zero();
        let mut zk = RatPoly::one();
        let mut binom = Rat::one();
        for k in 0..=n {
            let c = &binom * pochhammer(&apb, k) * pochhammer(&(&prm.alpha + int(k as i64 + 1)), n - k);
            acc += &zk.scale(&c);
            zk = &zk * &z;
            binom = binom * int((n - k) as i64) / int(k as i64 + 1);
        }
        acc.scale(&factorial(n).recip())
    }

    /// Three-term recurrence; `None` if a recurrence denominator vanishes.
    fn jacobi_recurrence(n: usize, prm: &JacobiParams) -> Option<RatPoly> {
        let (a, b) = (&prm.alpha, &prm.beta);
        let two = int(2);
        let mut p_prev = RatPoly::one();
        if n == 0 {
            return Some(p_prev);
        }
        let mut p = RatPoly::linear((a - b) / &two, (a + b + &two) / &two);
        for k in 2..=n {
            let kk = int(k as i64);
            let s = &kk * &two + a + b; // 2k + α + β
            let den = &two * &kk * (&kk + a + b) * (&s - &two);
            if den.is_zero() {
                return None;
            }
            let c1 = (&s - Rat::one()) * &s * (&s - &two);
            let c0 = (&s - Rat::one()) * (a * a - b * b);
            let c2 = &two * (&kk + a - Rat::one()) * (&kk + b - Rat::one()) * &s;
            let lin = RatPoly::linear(c0, c1);
            let next = (&(&lin * &p) - &p_prev.scale(&c2)).scale(&den.recip());
            p_prev = p;
            p = next;
        }
        Some(p)
    }

    #[test]
    fn integer_expansion_matches_rational_paths() {
        let vals = [rat(-37, 7), rat(22, 9), int(-3), rat(-1, 2), int(0), rat(5, 3), int(-7)];
        for a in &vals {
            for b in &vals {
                let q = prm(a.clone(), b.clone());
                for n in 0..=9 {
                    let fast = jacobi_integer(n, &q);
                    assert_eq!(fast, jacobi_sum(n, &q), "n={n} α={a} β={b}");
                    if let Some(r) = jacobi_recurrence(n, &q) {
                        assert_eq!(fast, r, "recurrence n={n} α={a} β={b}");
                    }
                }
            }
        }
    }

    fn prm(a: Rat, b: Rat) -> JacobiParams {
        JacobiParams::new(a, b)
    }

    /// Independent oracle: Rodrigues-free explicit sum in powers of (η+1) and (η−1),
    /// `P_n = 2^{−n} Σ_s C(n+α, n−s) C(n+β, s) (η−1)^s (η+1)^{n−s}`.
    fn oracle(n: usize, a: &Rat, b: &Rat) -> RatPoly {
        let binom = |top: &Rat, k: usize| pochhammer(&(top - int(k as i64) + Rat::one()), k) / factorial(k);
        let nn = int(n as i64);
        let xm = RatPoly::from_ints(&[-1, 1]);
        let xp = RatPoly::from_ints(&[1, 1]);
        let mut acc = RatPoly::zero();
        for s in 0..=n {
            let c = binom(&(&nn + a), n - s) * binom(&(&nn + b), s);
            acc += &(&xm.pow(s) * &xp.pow(n - s)).scale(&c);
        }
        acc.scale(&(Rat::one() / Rat::from_integer(num::pow(num::BigInt::from(2), n))))
    }

    #[test]
    fn small_degree_examples() {
        let z = prm(int(0), int(0));
        assert_eq!(jacobi(0, &prm(rat(7, 3), rat(-2, 5))).unwrap(), RatPoly::one());
        assert_eq!(jacobi(1, &z).unwrap(), RatPoly::x());
        assert_eq!(jacobi(2, &z).unwrap(), RatPoly::from_coeffs(vec![rat(-1, 2), int(0), rat(3, 2)]));
        let p = prm(rat(3, 4), rat(-1, 3));
        let expect = RatPoly::linear((&p.alpha - &p.beta) / int(2), (&p.alpha + &p.beta + int(2)) / int(2));
        assert_eq!(jacobi(1, &p).unwrap(), expect);
    }

    #[test]
    fn recurrence_matches_independent_oracle() {
        for (a, b) in [(rat(1, 2), rat(1, 2)), (rat(-11, 2), rat(1, 2)), (rat(2, 7), rat(-5, 3)), (int(0), int(-1))] {
            for n in 0..=9 {
                match jacobi(n, &prm(a.clone(), b.clone())) {
                    Ok(p) => assert_eq!(p, oracle(n, &a, &b), "n={n} a={a} b={b}"),
                    Err(Error::DegreeCollapse { .. }) => assert!(leading_coeff(n, &prm(a.clone(), b.clone())).is_zero()),
                    Err(e) => panic!("{e}"),
                }
            }
        }
    }

    #[test]
    fn degenerate_recurrence_falls_back() {
        // α + β = −1 nulls the first recurrence denominator.
        let p = prm(rat(1, 2), rat(-3, 2));
        for n in 0..6 {
            assert_eq!(jacobi(n, &p).unwrap(), oracle(n, &p.alpha, &p.beta));
        }
    }

    #[test]
    fn degree_collapse_is_reported() {
        // α+β = −3: (α+β+3)_2 = 0·1 = 0.
        let p = prm(rat(-1, 2), rat(-5, 2));
        assert!(matches!(jacobi(2, &p), Err(Error::DegreeCollapse { n: 2, .. })));
    }

    #[test]
    fn derivative_examples() {
        let z = prm(int(0), int(0));
        assert_eq!(jacobi_deriv(1, &z).unwrap(), RatPoly::one());
        assert_eq!(jacobi_deriv(2, &z).unwrap(), RatPoly::from_ints(&[0, 3]));
        let p = prm(rat(1, 2), rat(-1, 3));
        assert_eq!(jacobi_deriv(3, &p).unwrap(), jacobi(3, &p).unwrap().differentiate());
    }

    #[test]
    fn contiguous_beta_hand_example() {
        // P_1^{(2,1)} − P_1^{(1,1)} = (η+1)/2.
        let p = prm(int(1), int(1));
        let lhs = &jacobi(1, &p.shifted(1, 0)).unwrap() - &jacobi(1, &p).unwrap();
        assert_eq!(lhs, RatPoly::linear(rat(1, 2), rat(1, 2)));
        assert!(contiguous_beta_diff(1, &p).unwrap().is_zero());
        assert!(contiguous_beta_diff(0, &p).unwrap().is_zero());
        assert!(eliminate_minus_diff(0, &prm(rat(1, 3), rat(5, 2))).unwrap().is_zero());
    }

    #[test]
    fn identity_sweep_small() {
        let samples = vec![prm(rat(3, 7), rat(5, 11)), prm(rat(-13, 5), rat(2, 9))];
        let r = verify_contiguous_identities(6, &samples, Strategy::Sequential);
        assert!(r.pass(), "{:?}", r.failures);
        assert!(r.checked > 60);
    }

    #[test]
    fn r_jacobi_examples() {
        let lam = LambdaPair::from_fracs(11, 2, 1, 2).unwrap();
        assert_eq!(r_jacobi(0, &lam).unwrap(), RatPoly::one());
        // P_1^{(−11/2,1/2)}(x) = −3x/2 − 3, x = −(2z+1): 3z − 3/2.
        assert_eq!(r_jacobi(1, &lam).unwrap(), RatPoly::linear(rat(-3, 2), int(3)));
        // z = 0 is x = −1.
        let p = jacobi(2, &prm(rat(-11, 2), rat(1, 2))).unwrap();
        assert_eq!(r_jacobi(2, &lam).unwrap().eval(&int(0)), p.eval(&int(-1)));
        assert!(matches!(r_jacobi(3, &lam), Err(Error::DegreeCollapse { .. })));
    }

    #[test]
    fn lambda_pair_quadrants() {
        assert_eq!(LambdaPair::from_fracs(1, 1, 1, 1).unwrap().quadrant(), Quadrant::I);
        assert_eq!(LambdaPair::from_fracs(-1, 1, 1, 1).unwrap().quadrant(), Quadrant::II);
        assert_eq!(LambdaPair::from_fracs(-1, 1, -1, 1).unwrap().quadrant(), Quadrant::III);
        assert_eq!(LambdaPair::from_fracs(1, 1, -1, 1).unwrap().quadrant(), Quadrant::IV);
        assert!(LambdaPair::from_fracs(0, 1, 1, 1).is_err());
        assert!(LambdaPair::positive(rat(-1, 2), int(1)).is_err());
    }
}
