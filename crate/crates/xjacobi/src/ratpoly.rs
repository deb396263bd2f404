//! Exact univariate polynomials over ℚ and Sturm-sequence real-root counting.
//!
//! [`RatPoly`] stores its coefficients densely with index = power of η and
//! keeps the highest stored coefficient nonzero, so the zero polynomial is the
//! empty list and structural equality is polynomial equality. No operation in
//! this module rounds.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num::{BigInt, Integer, One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::{int, Rat};

/// Dense polynomial in η with exact rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct RatPoly {
    coeffs: Vec<Rat>,
}

impl RatPoly {
    /// The zero polynomial.
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    /// The constant polynomial 1.
    pub fn one() -> Self {
        Self::constant(Rat::one())
    }

    /// The constant polynomial `c`.
    pub fn constant(c: Rat) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// The identity polynomial η.
    pub fn x() -> Self {
        Self::from_coeffs(vec![Rat::zero(), Rat::one()])
    }

    /// `c0 + c1·η`.
    pub fn linear(c0: Rat, c1: Rat) -> Self {
        Self::from_coeffs(vec![c0, c1])
    }

    /// Builds a polynomial from ascending coefficients, trimming high zeros.
    pub fn from_coeffs(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    /// Builds a polynomial from ascending integer coefficients.
    pub fn from_ints(c: &[i64]) -> Self {
        Self::from_coeffs(c.iter().map(|&v| int(v)).collect())
    }

    /// Ascending coefficients; empty for the zero polynomial.
    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    /// Coefficient of η^k (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> Rat {
        self.coeffs.get(k).cloned().unwrap_or_else(Rat::zero)
    }

    /// Degree, or `None` for the zero polynomial (the "−∞" sentinel).
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// `true` for the zero polynomial.
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Highest nonzero coefficient.
    pub fn leading_coeff(&self) -> Option<&Rat> {
        self.coeffs.last()
    }

    /// Horner evaluation at an exact rational point.
    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Exact sign of `p(x)`.
    pub fn sign_at(&self, x: &Rat) -> i32 {
        crate::rational::sign(&self.eval(x))
    }

    /// dp/dη.
    pub fn differentiate(&self) -> Self {
        Self::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * int(k as i64))
                .collect(),
        )
    }

    /// `c · p`.
    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    /// Monic normalization; the zero polynomial is an error.
    pub fn monic(&self) -> Result<Self> {
        let lc = self.leading_coeff().ok_or(Error::ZeroPolynomial)?;
        Ok(self.scale(&lc.recip()))
    }

    /// `p^k`.
    pub fn pow(&self, k: usize) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Composition `p(a·η + b)`.
    pub fn compose_affine(&self, a: &Rat, b: &Rat) -> Self {
        let lin = Self::linear(b.clone(), a.clone());
        let mut acc = Self::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * &lin) + &Self::constant(c.clone());
        }
        acc
    }

    /// Reflection `p(−η)`.
    pub fn reflect(&self) -> Self {
        Self::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| if k % 2 == 1 { -c } else { c.clone() })
                .collect(),
        )
    }

    /// Reversed polynomial `η^d p(1/η)` for a chosen formal degree `d ≥ deg p`.
    pub fn reversed(&self, d: usize) -> Self {
        let mut c = vec![Rat::zero(); d + 1];
        for (k, a) in self.coeffs.iter().enumerate() {
            c[d - k] = a.clone();
        }
        Self::from_coeffs(c)
    }

    /// Euclidean division `self = q·d + r` with `deg r < deg d`.
    pub fn div_rem(&self, d: &Self) -> Result<(Self, Self)> {
        let dd = d.degree().ok_or(Error::ZeroPolynomial)?;
        let lc_inv = d.coeffs[dd].recip();
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut q = vec![Rat::zero(); r.len() - dd];
        for k in (0..q.len()).rev() {
            let c = &r[k + dd] * &lc_inv;
            if !c.is_zero() {
                for (j, dc) in d.coeffs.iter().enumerate() {
                    r[k + j] -= &c * dc;
                }
            }
            q[k] = c;
        }
        r.truncate(dd);
        Ok((Self::from_coeffs(q), Self::from_coeffs(r)))
    }

    /// Exact quotient when `d` divides `self`, `None` otherwise.
    pub fn exact_div(&self, d: &Self) -> Option<Self> {
        match self.div_rem(d) {
            Ok((q, r)) if r.is_zero() => Some(q),
            _ => None,
        }
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.primitive_positive();
        let mut b = other.primitive_positive();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("nonzero divisor");
            a = b;
            b = r.primitive_positive();
        }
        if a.is_zero() {
            a
        } else {
            a.monic().expect("nonzero")
        }
    }

    /// Squarefree part `p / gcd(p, p′)`, made monic.
    pub fn squarefree_part(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let g = self.gcd(&self.differentiate());
        let q = self.exact_div(&g).expect("gcd divides");
        q.monic()
    }

    /// `true` when `gcd(p, p′)` is constant (all roots simple).
    pub fn is_squarefree(&self) -> bool {
        !self.is_zero() && self.gcd(&self.differentiate()).degree() == Some(0)
    }

    /// Positive rational multiple with coprime integer coefficients.
    ///
    /// Scaling by a positive constant leaves every sign unchanged, which is
    /// what makes this the content-removal step of Sturm chains.
    pub fn primitive_positive(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut l = BigInt::one();
        for c in &self.coeffs {
            l = l.lcm(c.denom());
        }
        let ints: Vec<BigInt> = self.coeffs.iter().map(|c| (c * Rat::from_integer(l.clone())).to_integer()).collect();
        let mut g = BigInt::zero();
        for v in &ints {
            g = g.gcd(v);
        }
        Self::from_coeffs(ints.into_iter().map(|v| Rat::from_integer(v / &g)).collect())
    }

    /// Multiplicity of the root `r` (0 if `p(r) ≠ 0`).
    pub fn root_multiplicity(&self, r: &Rat) -> usize {
        if self.is_zero() {
            return usize::MAX;
        }
        let lin = Self::linear(-r.clone(), Rat::one());
        let mut p = self.clone();
        let mut k = 0;
        while let Some(q) = p.exact_div(&lin) {
            p = q;
            k += 1;
        }
        k
    }

    /// Coefficients in the `"p/q"` wire format.
    pub fn coeff_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(crate::rational::fmt_rat).collect()
    }

    /// Coefficients rounded to `f64`, for repeated floating-point evaluation.
    pub fn to_f64(&self) -> F64Poly {
        F64Poly { coeffs: self.coeffs.iter().map(crate::rational::to_f64).collect() }
    }

    /// Floating-point value at `x` (compensated Horner on the rounded coefficients).
    pub fn eval_f64(&self, x: f64) -> f64 {
        self.to_f64().eval(x)
    }
}

/// Polynomial with `f64` coefficients, lowest degree first.
#[derive(Clone, Debug, PartialEq)]
pub struct F64Poly {
    coeffs: Vec<f64>,
}

impl F64Poly {
    /// Coefficients, lowest degree first.
    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    /// Compensated Horner evaluation: error-free transforms of each multiply-add
    /// accumulate a correction term, giving roughly twice-working-precision accuracy.
    pub fn eval(&self, x: f64) -> f64 {
        let Some((&last, rest)) = self.coeffs.split_last() else {
            return 0.0;
        };
        let mut s = last;
        let mut c = 0.0_f64;
        for &a in rest.iter().rev() {
            let p = s * x;
            let pe = s.mul_add(x, -p);
            let t = p + a;
            let z = t - p;
            let te = (p - (t - z)) + (a - z);
            s = t;
            c = c.mul_add(x, pe + te);
        }
        s + c
    }
}

/// d/dη, as a free function.
pub fn differentiate(p: &RatPoly) -> RatPoly {
    p.differentiate()
}

/// Two-function Wronskian `W{p, q} = p·q′ − p′·q`.
pub fn wronskian2(p: &RatPoly, q: &RatPoly) -> RatPoly {
    &(p * &q.differentiate()) - &(&p.differentiate() * q)
}

impl fmt::Display for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let show_coeff = k == 0 || !a.is_one();
            if show_coeff {
                write!(f, "{a}")?;
            }
            match k {
                0 => {}
                1 => write!(f, "{}η", if show_coeff { "*" } else { "" })?,
                _ => write!(f, "{}η^{k}", if show_coeff { "*" } else { "" })?,
            }
        }
        Ok(())
    }
}

fn add_coeffs(a: &[Rat], b: &[Rat], sub: bool) -> RatPoly {
    let n = a.len().max(b.len());
    let mut c = Vec::with_capacity(n);
    for k in 0..n {
        let x = a.get(k).cloned().unwrap_or_else(Rat::zero);
        let y = b.get(k);
        c.push(match (y, sub) {
            (Some(y), false) => x + y,
            (Some(y), true) => x - y,
            (None, _) => x,
        });
    }
    RatPoly::from_coeffs(c)
}

impl Add for &RatPoly {
    type Output = RatPoly;
    fn add(self, rhs: &RatPoly) -> RatPoly {
        add_coeffs(&self.coeffs, &rhs.coeffs, false)
    }
}

impl Sub for &RatPoly {
    type Output = RatPoly;
    fn sub(self, rhs: &RatPoly) -> RatPoly {
        add_coeffs(&self.coeffs, &rhs.coeffs, true)
    }
}

impl Mul for &RatPoly {
    type Output = RatPoly;
    fn mul(self, rhs: &RatPoly) -> RatPoly {
        if self.is_zero() || rhs.is_zero() {
            return RatPoly::zero();
        }
        // Convolve integer numerators over common denominators: one gcd per
        // output coefficient instead of one per term.
        let (a, da) = self.integer_form();
        let (b, db) = rhs.integer_form();
        let mut c = vec![BigInt::zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                c[i + j] += x * y;
            }
        }
        let den = da * db;
        RatPoly::from_coeffs(c.into_iter().map(|n| Rat::new(n, den.clone())).collect())
    }
}

impl RatPoly {
    /// Integer numerators over the least common denominator of the coefficients.
    fn integer_form(&self) -> (Vec<BigInt>, BigInt) {
        let den = self.coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let nums = self.coeffs.iter().map(|c| c.numer() * (&den / c.denom())).collect();
        (nums, den)
    }
}

/// Unreduced exact form `num(η) / den` of a rational polynomial.
///
/// Products and differences are formed by integer convolution and cross
/// multiplication without any gcd, which makes long chains of exact identity
/// checks cheap; [`ScaledPoly::is_zero`] is exact, and [`ScaledPoly::to_poly`]
/// reduces once at the end.
#[derive(Clone, Debug)]
pub struct ScaledPoly {
    num: Vec<BigInt>,
    den: BigInt,
}

impl ScaledPoly {
    /// Integer numerators over the least common denominator of `p`.
    pub fn new(p: &RatPoly) -> Self {
        let (num, den) = p.integer_form();
        Self { num, den }
    }

    /// Whether the polynomial is identically zero.
    pub fn is_zero(&self) -> bool {
        self.num.iter().all(Zero::is_zero)
    }

    /// `p(−η)`.
    pub fn reflect(&self) -> Self {
        let num = self.num.iter().enumerate().map(|(k, c)| if k % 2 == 1 { -c } else { c.clone() }).collect();
        Self { num, den: self.den.clone() }
    }

    /// Reduced rational polynomial.
    pub fn to_poly(&self) -> RatPoly {
        RatPoly::from_coeffs(self.num.iter().map(|c| Rat::new(c.clone(), self.den.clone())).collect())
    }

    fn combine(&self, rhs: &Self, sign: i8) -> Self {
        let len = self.num.len().max(rhs.num.len());
        let num = (0..len)
            .map(|i| {
                let a = self.num.get(i).map(|c| c * &rhs.den).unwrap_or_default();
                let b = rhs.num.get(i).map(|c| c * &self.den).unwrap_or_default();
                if sign > 0 {
                    a + b
                } else {
                    a - b
                }
            })
            .collect();
        Self { num, den: &self.den * &rhs.den }
    }
}

impl Add for &ScaledPoly {
    type Output = ScaledPoly;
    fn add(self, rhs: &ScaledPoly) -> ScaledPoly {
        self.combine(rhs, 1)
    }
}

impl Sub for &ScaledPoly {
    type Output = ScaledPoly;
    fn sub(self, rhs: &ScaledPoly) -> ScaledPoly {
        self.combine(rhs, -1)
    }
}

impl Mul for &ScaledPoly {
    type Output = ScaledPoly;
    fn mul(self, rhs: &ScaledPoly) -> ScaledPoly {
        if self.num.is_empty() || rhs.num.is_empty() {
            return ScaledPoly { num: Vec::new(), den: BigInt::one() };
        }
        let mut num = vec![BigInt::zero(); self.num.len() + rhs.num.len() - 1];
        for (i, x) in self.num.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in rhs.num.iter().enumerate() {
                num[i + j] += x * y;
            }
        }
        ScaledPoly { num, den: &self.den * &rhs.den }
    }
}

impl Neg for &RatPoly {
    type Output = RatPoly;
    fn neg(self) -> RatPoly {
        RatPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for RatPoly {
            type Output = RatPoly;
            fn $m(self, rhs: RatPoly) -> RatPoly {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&RatPoly> for RatPoly {
            type Output = RatPoly;
            fn $m(self, rhs: &RatPoly) -> RatPoly {
                (&self).$m(rhs)
            }
        }
        impl $tr<RatPoly> for &RatPoly {
            type Output = RatPoly;
            fn $m(self, rhs: RatPoly) -> RatPoly {
                self.$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for RatPoly {
    type Output = RatPoly;
    fn neg(self) -> RatPoly {
        -&self
    }
}

impl AddAssign<&RatPoly> for RatPoly {
    fn add_assign(&mut self, rhs: &RatPoly) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&RatPoly> for RatPoly {
    fn sub_assign(&mut self, rhs: &RatPoly) {
        *self = &*self - rhs;
    }
}

/// Point of the extended rational line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExtRat {
    /// −∞.
    NegInf,
    /// A finite rational.
    Finite(Rat),
    /// +∞.
    PosInf,
}

impl ExtRat {
    fn rank(&self) -> u8 {
        match self {
            ExtRat::NegInf => 0,
            ExtRat::Finite(_) => 1,
            ExtRat::PosInf => 2,
        }
    }
}

impl From<Rat> for ExtRat {
    fn from(r: Rat) -> Self {
        ExtRat::Finite(r)
    }
}

impl PartialOrd for ExtRat {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(match (self, other) {
            (ExtRat::Finite(a), ExtRat::Finite(b)) => a.cmp(b),
            _ => self.rank().cmp(&other.rank()),
        })
    }
}

/// Real interval with rational or infinite endpoints and per-end open/closed flags.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Interval {
    lo: ExtRat,
    hi: ExtRat,
    lo_closed: bool,
    hi_closed: bool,
}

impl Interval {
    /// General constructor; requires `lo < hi`. Infinite ends are always open.
    pub fn new(lo: ExtRat, hi: ExtRat, lo_closed: bool, hi_closed: bool) -> Result<Self> {
        if lo >= hi {
            return Err(Error::RangeViolation("interval requires lo < hi".into()));
        }
        let lo_closed = lo_closed && matches!(lo, ExtRat::Finite(_));
        let hi_closed = hi_closed && matches!(hi, ExtRat::Finite(_));
        Ok(Self { lo, hi, lo_closed, hi_closed })
    }

    /// Open interval `(lo, hi)`.
    pub fn open(lo: ExtRat, hi: ExtRat) -> Result<Self> {
        Self::new(lo, hi, false, false)
    }

    /// Closed interval `[lo, hi]` with finite ends.
    pub fn closed(lo: Rat, hi: Rat) -> Result<Self> {
        Self::new(ExtRat::Finite(lo), ExtRat::Finite(hi), true, true)
    }

    /// The whole real line.
    pub fn real_line() -> Self {
        Self { lo: ExtRat::NegInf, hi: ExtRat::PosInf, lo_closed: false, hi_closed: false }
    }

    /// Lower end.
    pub fn lo(&self) -> &ExtRat {
        &self.lo
    }

    /// Upper end.
    pub fn hi(&self) -> &ExtRat {
        &self.hi
    }
}

/// Sturm chain of a squarefree polynomial, built with content removal.
#[derive(Clone, Debug)]
pub struct SturmChain {
    chain: Vec<RatPoly>,
}

impl SturmChain {
    /// Builds the chain p, p′, −rem(p, p′), …; `p` must be nonzero.
    pub fn new(p: &RatPoly) -> Result<Self> {
        if p.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let mut chain = vec![p.primitive_positive(), p.differentiate().primitive_positive()];
        loop {
            let n = chain.len();
            if chain[n - 1].is_zero() {
                chain.pop();
                break;
            }
            let (_, r) = chain[n - 2].div_rem(&chain[n - 1]).expect("nonzero divisor");
            if r.is_zero() {
                break;
            }
            chain.push((-r).primitive_positive());
        }
        Ok(Self { chain })
    }

    /// Number of sign variations of the chain at a point of the extended line.
    pub fn variations_at(&self, x: &ExtRat) -> usize {
        let signs = self.chain.iter().map(|q| {
            let d = q.degree().unwrap_or(0);
            let lc = crate::rational::sign(q.leading_coeff().expect("nonzero chain element"));
            match x {
                ExtRat::PosInf => lc,
                ExtRat::NegInf => {
                    if d % 2 == 0 {
                        lc
                    } else {
                        -lc
                    }
                }
                ExtRat::Finite(r) => q.sign_at(r),
            }
        });
        let mut last = 0;
        let mut v = 0;
        for s in signs {
            if s == 0 {
                continue;
            }
            if last != 0 && s != last {
                v += 1;
            }
            last = s;
        }
        v
    }
}

/// Number of distinct real roots of `p` in `iv`.
///
/// `p` is reduced to its squarefree part automatically, so multiple roots are
/// counted once.
pub fn sturm_count(p: &RatPoly, iv: &Interval) -> Result<usize> {
    let sf = p.squarefree_part()?;
    if sf.degree() == Some(0) {
        return Ok(0);
    }
    let chain = SturmChain::new(&sf)?;
    // Sturm's theorem counts roots in the half-open interval (lo, hi].
    let mut n = chain.variations_at(&iv.lo) as i64 - chain.variations_at(&iv.hi) as i64;
    if let ExtRat::Finite(b) = &iv.hi {
        if !iv.hi_closed && sf.eval(b).is_zero() {
            n -= 1;
        }
    }
    if let ExtRat::Finite(a) = &iv.lo {
        if iv.lo_closed && sf.eval(a).is_zero() {
            n += 1;
        }
    }
    Ok(n as usize)
}
