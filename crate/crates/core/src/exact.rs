//! The scalar tower: arbitrary-precision rationals, the quadratic field
//! ℚ(√5), certified dyadic interval arithmetic (including enclosures of π
//! and of sine/cosine at rational angles), GF(2) linear algebra, and exact
//! strict-separation linear programming.
//!
//! Everything here is deterministic and allocation-heavy by design: these
//! scalars back *certificates*, so correctness and reproducibility dominate
//! speed. No floating point participates in any decision path.

use num_bigint::{BigInt, Sign as BigSign};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use crate::error::{Error, Result};

/// Exact rational scalar used throughout.
pub type Rational = BigRational;

/// Convenience constructor for small rationals.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Convenience constructor `n/d`.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Three-valued sign.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    pub fn of_rational(x: &Rational) -> Sign {
        match x.numer().sign() {
            BigSign::Minus => Sign::Negative,
            BigSign::NoSign => Sign::Zero,
            BigSign::Plus => Sign::Positive,
        }
    }
}

// ----------------------------------------------------------------------
// ℚ(√5)
// ----------------------------------------------------------------------

/// An element `a + b√5` of the real quadratic field ℚ(√5).
///
/// Comparison and sign are decided exactly by case analysis and squaring
/// — no floating point.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QSqrt5 {
    pub a: Rational,
    pub b: Rational,
}

impl QSqrt5 {
    pub fn new(a: Rational, b: Rational) -> Self {
        QSqrt5 { a, b }
    }

    pub fn from_rational(a: Rational) -> Self {
        QSqrt5 { a, b: Rational::zero() }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(rat(n))
    }

    /// The generator √5.
    pub fn sqrt5() -> Self {
        QSqrt5 { a: Rational::zero(), b: Rational::one() }
    }

    pub fn zero() -> Self {
        Self::from_int(0)
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// Galois conjugate `a − b√5`.
    pub fn conjugate(&self) -> Self {
        QSqrt5 { a: self.a.clone(), b: -self.b.clone() }
    }

    /// Field norm `a² − 5b²` (the product with the conjugate).
    pub fn field_norm(&self) -> Rational {
        &self.a * &self.a - rat(5) * &self.b * &self.b
    }

    /// Exact sign of `a + b√5`.
    ///
    /// Cases: if either coefficient vanishes the sign is the other's; if
    /// both share a sign the value shares it; otherwise |a| and |b√5| are
    /// compared by squaring (both positive, so squaring is monotone) and
    /// the larger magnitude's sign wins.
    pub fn sign(&self) -> Sign {
        let sa = Sign::of_rational(&self.a);
        let sb = Sign::of_rational(&self.b);
        match (sa, sb) {
            (Sign::Zero, s) | (s, Sign::Zero) => s,
            (Sign::Positive, Sign::Positive) => Sign::Positive,
            (Sign::Negative, Sign::Negative) => Sign::Negative,
            _ => {
                // Opposite signs: compare a² with 5b².
                let a2 = &self.a * &self.a;
                let b25 = rat(5) * &self.b * &self.b;
                match a2.cmp(&b25) {
                    Ordering::Equal => Sign::Zero,
                    Ordering::Greater => sa,
                    Ordering::Less => sb,
                }
            }
        }
    }

    /// Multiplicative inverse; errors on zero.
    pub fn inverse(&self) -> Result<Self> {
        let n = self.field_norm();
        if n.is_zero() {
            return Err(Error::Arithmetic("division by zero in ℚ(√5)".into()));
        }
        Ok(QSqrt5 { a: &self.a / &n, b: -(&self.b / &n) })
    }

    /// 64-bit float approximation (diagnostics and sanity cross-checks only).
    pub fn to_f64(&self) -> f64 {
        let f = |r: &Rational| r.numer().to_f64().unwrap_or(f64::NAN) / r.denom().to_f64().unwrap_or(f64::NAN);
        f(&self.a) + f(&self.b) * 5f64.sqrt()
    }
}

impl fmt::Display for QSqrt5 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}√5", self.a, self.b)
    }
}

impl Add for &QSqrt5 {
    type Output = QSqrt5;
    fn add(self, rhs: &QSqrt5) -> QSqrt5 {
        QSqrt5 { a: &self.a + &rhs.a, b: &self.b + &rhs.b }
    }
}

impl Sub for &QSqrt5 {
    type Output = QSqrt5;
    fn sub(self, rhs: &QSqrt5) -> QSqrt5 {
        QSqrt5 { a: &self.a - &rhs.a, b: &self.b - &rhs.b }
    }
}

impl Mul for &QSqrt5 {
    type Output = QSqrt5;
    fn mul(self, rhs: &QSqrt5) -> QSqrt5 {
        QSqrt5 {
            a: &self.a * &rhs.a + rat(5) * &self.b * &rhs.b,
            b: &self.a * &rhs.b + &self.b * &rhs.a,
        }
    }
}

impl Neg for &QSqrt5 {
    type Output = QSqrt5;
    fn neg(self) -> QSqrt5 {
        QSqrt5 { a: -self.a.clone(), b: -self.b.clone() }
    }
}

impl Div for &QSqrt5 {
    type Output = QSqrt5;
    fn div(self, rhs: &QSqrt5) -> QSqrt5 {
        self * &rhs.inverse().expect("division by zero in ℚ(√5)")
    }
}

impl PartialOrd for QSqrt5 {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for QSqrt5 {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self - other).sign() {
            Sign::Negative => Ordering::Less,
            Sign::Zero => Ordering::Equal,
            Sign::Positive => Ordering::Greater,
        }
    }
}

/// Exact inner product of equal-length ℚ(√5) vectors.
pub fn qsqrt5_dot(u: &[QSqrt5], v: &[QSqrt5]) -> QSqrt5 {
    assert_eq!(u.len(), v.len(), "dot product of unequal lengths");
    let mut acc = QSqrt5::zero();
    for (x, y) in u.iter().zip(v) {
        acc = &acc + &(x * y);
    }
    acc
}

/// Exact sign of a ℚ(√5) value.
pub fn qsqrt5_sign(x: &QSqrt5) -> Sign {
    x.sign()
}

// ----------------------------------------------------------------------
// Dyadic numbers
// ----------------------------------------------------------------------

/// A dyadic rational `mantissa · 2^exponent` with arbitrary-precision
/// mantissa. Interval endpoints are stored in this form so that rounding
/// direction is fully controlled.
#[derive(Clone, Debug)]
pub struct Dyadic {
    pub mantissa: BigInt,
    pub exponent: i64,
}

impl Dyadic {
    pub fn new(mantissa: BigInt, exponent: i64) -> Self {
        Dyadic { mantissa, exponent }
    }

    pub fn zero() -> Self {
        Dyadic { mantissa: BigInt::zero(), exponent: 0 }
    }

    pub fn from_int(n: i64) -> Self {
        Dyadic { mantissa: BigInt::from(n), exponent: 0 }
    }

    pub fn is_zero(&self) -> bool {
        self.mantissa.is_zero()
    }

    pub fn to_rational(&self) -> Rational {
        let two = BigInt::from(2);
        if self.exponent >= 0 {
            Rational::from_integer(&self.mantissa * two.pow(self.exponent as u32))
        } else {
            Rational::new(self.mantissa.clone(), two.pow((-self.exponent) as u32))
        }
    }

    fn aligned(&self, other: &Dyadic) -> (BigInt, BigInt, i64) {
        let e = self.exponent.min(other.exponent);
        let a = &self.mantissa << (self.exponent - e) as usize;
        let b = &other.mantissa << (other.exponent - e) as usize;
        (a, b, e)
    }

    pub fn add(&self, other: &Dyadic) -> Dyadic {
        let (a, b, e) = self.aligned(other);
        Dyadic { mantissa: a + b, exponent: e }
    }

    pub fn sub(&self, other: &Dyadic) -> Dyadic {
        let (a, b, e) = self.aligned(other);
        Dyadic { mantissa: a - b, exponent: e }
    }

    pub fn mul(&self, other: &Dyadic) -> Dyadic {
        Dyadic {
            mantissa: &self.mantissa * &other.mantissa,
            exponent: self.exponent + other.exponent,
        }
    }

    pub fn neg(&self) -> Dyadic {
        Dyadic { mantissa: -self.mantissa.clone(), exponent: self.exponent }
    }

    pub fn cmp_value(&self, other: &Dyadic) -> Ordering {
        let (a, b, _) = self.aligned(other);
        a.cmp(&b)
    }

    /// Round down (toward −∞) to at most `bits` mantissa bits.
    pub fn round_floor(&self, bits: u32) -> Dyadic {
        let len = self.mantissa.bits();
        if len <= bits as u64 {
            return self.clone();
        }
        let drop = (len - bits as u64) as i64;
        // BigInt's shift-right is an arithmetic (floor) shift.
        Dyadic {
            mantissa: &self.mantissa >> drop as usize,
            exponent: self.exponent + drop,
        }
    }

    /// Round up (toward +∞) to at most `bits` mantissa bits.
    pub fn round_ceil(&self, bits: u32) -> Dyadic {
        self.neg().round_floor(bits).neg()
    }

    /// Floor of an exact rational with roughly `bits` significant bits.
    pub fn from_rational_floor(r: &Rational, bits: u32) -> Dyadic {
        Self::from_rational_dir(r, bits, false)
    }

    /// Ceiling counterpart of [`Dyadic::from_rational_floor`].
    pub fn from_rational_ceil(r: &Rational, bits: u32) -> Dyadic {
        Self::from_rational_dir(r, bits, true)
    }

    fn from_rational_dir(r: &Rational, bits: u32, ceil: bool) -> Dyadic {
        if r.is_zero() {
            return Dyadic::zero();
        }
        let num = r.numer();
        let den = r.denom();
        // Scale so the quotient carries `bits + 2` significant bits.
        let shift = (bits as i64 + 2) + (den.bits() as i64 - num.bits() as i64).max(0) + 2;
        let shift = shift.max(0) as u64;
        let scaled = num << shift as usize;
        let (q, rem) = num_integer::Integer::div_rem(&scaled, den);
        // den > 0 always, so the truncated quotient is exact when rem == 0,
        // and otherwise floor(q) for positive and ceil(q) for negative values.
        let m = if rem.is_zero() {
            q
        } else if ceil {
            if r.is_positive() {
                q + 1
            } else {
                q
            }
        } else if r.is_positive() {
            q
        } else {
            q - 1
        };
        let d = Dyadic { mantissa: m, exponent: -(shift as i64) };
        if ceil {
            d.round_ceil(bits)
        } else {
            d.round_floor(bits)
        }
    }

    pub fn to_f64(&self) -> f64 {
        let r = self.to_rational();
        r.numer().to_f64().unwrap_or(f64::NAN) / r.denom().to_f64().unwrap_or(f64::NAN)
    }

    /// log₂ of |value|, roughly (for width reporting).
    pub fn log2_magnitude(&self) -> Option<i64> {
        if self.mantissa.is_zero() {
            return None;
        }
        Some(self.mantissa.bits() as i64 + self.exponent)
    }
}

// ----------------------------------------------------------------------
// Certified intervals
// ----------------------------------------------------------------------

/// A certified enclosure `[lower, upper]` with dyadic endpoints.
///
/// Every operation rounds outward at the stored precision, so any real
/// number enclosed by the inputs has its image enclosed by the output.
/// Signs are only reported when 0 lies strictly outside the interval.
#[derive(Clone, Debug)]
pub struct CertifiedInterval {
    pub lower: Dyadic,
    pub upper: Dyadic,
    pub precision: u32,
}

impl CertifiedInterval {
    pub fn new(lower: Dyadic, upper: Dyadic, precision: u32) -> Self {
        debug_assert!(lower.cmp_value(&upper) != Ordering::Greater);
        CertifiedInterval { lower, upper, precision }
    }

    pub fn exact_int(n: i64, precision: u32) -> Self {
        let d = Dyadic::from_int(n);
        CertifiedInterval { lower: d.clone(), upper: d, precision }
    }

    pub fn from_rational(r: &Rational, precision: u32) -> Self {
        CertifiedInterval {
            lower: Dyadic::from_rational_floor(r, precision),
            upper: Dyadic::from_rational_ceil(r, precision),
            precision,
        }
    }

    pub fn from_rational_bounds(lo: &Rational, hi: &Rational, precision: u32) -> Self {
        debug_assert!(lo <= hi);
        CertifiedInterval {
            lower: Dyadic::from_rational_floor(lo, precision),
            upper: Dyadic::from_rational_ceil(hi, precision),
            precision,
        }
    }

    pub fn contains_zero(&self) -> bool {
        !self.lower.mantissa.is_positive() && !self.upper.mantissa.is_negative()
    }

    pub fn contains_rational(&self, r: &Rational) -> bool {
        &self.lower.to_rational() <= r && r <= &self.upper.to_rational()
    }

    /// Sign, if certain.
    pub fn sign(&self) -> Option<Sign> {
        if self.lower.mantissa.is_positive() {
            Some(Sign::Positive)
        } else if self.upper.mantissa.is_negative() {
            Some(Sign::Negative)
        } else if self.lower.mantissa.is_zero() && self.upper.mantissa.is_zero() {
            Some(Sign::Zero)
        } else {
            None
        }
    }

    pub fn width(&self) -> Dyadic {
        self.upper.sub(&self.lower)
    }

    /// log₂ of the width (None for exact points).
    pub fn width_log2(&self) -> Option<i64> {
        self.width().log2_magnitude()
    }

    fn out(&self, lo: Dyadic, hi: Dyadic) -> CertifiedInterval {
        CertifiedInterval {
            lower: lo.round_floor(self.precision),
            upper: hi.round_ceil(self.precision),
            precision: self.precision,
        }
    }

    pub fn add(&self, rhs: &CertifiedInterval) -> CertifiedInterval {
        self.out(self.lower.add(&rhs.lower), self.upper.add(&rhs.upper))
    }

    pub fn sub(&self, rhs: &CertifiedInterval) -> CertifiedInterval {
        self.out(self.lower.sub(&rhs.upper), self.upper.sub(&rhs.lower))
    }

    pub fn neg(&self) -> CertifiedInterval {
        CertifiedInterval {
            lower: self.upper.neg(),
            upper: self.lower.neg(),
            precision: self.precision,
        }
    }

    pub fn mul(&self, rhs: &CertifiedInterval) -> CertifiedInterval {
        let cands = [
            self.lower.mul(&rhs.lower),
            self.lower.mul(&rhs.upper),
            self.upper.mul(&rhs.lower),
            self.upper.mul(&rhs.upper),
        ];
        let mut lo = cands[0].clone();
        let mut hi = cands[0].clone();
        for c in &cands[1..] {
            if c.cmp_value(&lo) == Ordering::Less {
                lo = c.clone();
            }
            if c.cmp_value(&hi) == Ordering::Greater {
                hi = c.clone();
            }
        }
        self.out(lo, hi)
    }

    /// Division; errors when the divisor's enclosure contains zero.
    pub fn div(&self, rhs: &CertifiedInterval) -> Result<CertifiedInterval> {
        if rhs.contains_zero() {
            return Err(Error::Arithmetic(
                "interval division by an enclosure containing zero".into(),
            ));
        }
        // Route through exact rationals: endpoint quotients are exact, then
        // round outward once.
        let a = self.lower.to_rational();
        let b = self.upper.to_rational();
        let c = rhs.lower.to_rational();
        let d = rhs.upper.to_rational();
        let cands = [&a / &c, &a / &d, &b / &c, &b / &d];
        let lo = cands.iter().min().unwrap();
        let hi = cands.iter().max().unwrap();
        Ok(CertifiedInterval::from_rational_bounds(lo, hi, self.precision))
    }

    /// Scale by an exact rational.
    pub fn scale(&self, r: &Rational) -> CertifiedInterval {
        self.mul(&CertifiedInterval::from_rational(r, self.precision))
    }

    /// Widen symmetrically by an exact rational bound ≥ 0.
    pub fn pad(&self, bound: &Rational) -> CertifiedInterval {
        debug_assert!(!bound.is_negative());
        let pad_lo = Dyadic::from_rational_floor(&-bound.clone(), self.precision);
        let pad_hi = Dyadic::from_rational_ceil(bound, self.precision);
        self.out(self.lower.add(&pad_lo), self.upper.add(&pad_hi))
    }

    pub fn to_f64_mid(&self) -> f64 {
        (self.lower.to_f64() + self.upper.to_f64()) / 2.0
    }
}

/// The certification precision ladder, in mantissa bits.
pub const PRECISION_SCHEDULE: [u32; 4] = [64, 128, 256, 512];

// ----------------------------------------------------------------------
// π and trigonometric enclosures
// ----------------------------------------------------------------------

/// Certified enclosure of arctan(1/x) for integer x ≥ 2, by the alternating
/// Taylor series: consecutive partial sums bracket the limit.
fn arctan_inv(x: i64, bits: u32) -> (Rational, Rational) {
    let x2 = rat(x * x);
    let mut power = ratio(1, x); // x^{-(2m+1)} for the current m
    let mut sum = Rational::zero(); // partial sum S_m
    let mut m: i64 = 0;
    let eps = Rational::new(BigInt::one(), BigInt::from(2).pow(bits + 8));
    loop {
        let a = &power / rat(2 * m + 1);
        // The remainder after S_m has magnitude ≤ a and the sign of the
        // next term, so the limit lies between S_m and S_m ± a.
        if a < eps {
            let other = if m % 2 == 0 { &sum + &a } else { &sum - &a };
            return if sum <= other { (sum, other) } else { (other, sum) };
        }
        sum = if m % 2 == 0 { &sum + &a } else { &sum - &a };
        power = &power / &x2;
        m += 1;
    }
}

/// Certified enclosure of π via Machin's identity
/// π = 16·arctan(1/5) − 4·arctan(1/239).
pub fn pi_interval(bits: u32) -> CertifiedInterval {
    let (a_lo, a_hi) = arctan_inv(5, bits);
    let (b_lo, b_hi) = arctan_inv(239, bits);
    let lo = rat(16) * &a_lo - rat(4) * &b_hi;
    let hi = rat(16) * &a_hi - rat(4) * &b_lo;
    CertifiedInterval::from_rational_bounds(&lo, &hi, bits)
}

/// Factorial as a rational.
fn factorial(n: u64) -> Rational {
    let mut f = BigInt::one();
    for i in 2..=n {
        f *= BigInt::from(i);
    }
    Rational::from_integer(f)
}

/// Certified cos/sin of the angle `2π·q/n` (0 ≤ q < n), at the requested
/// precision. Quarter turns are returned exactly.
pub fn cos_sin_two_pi(q: u64, n: u64, bits: u32) -> (CertifiedInterval, CertifiedInterval) {
    assert!(n > 0 && q < n, "angle fraction out of range");
    // Exact quarter turns.
    if (4 * q) % n == 0 {
        let (c, s) = match (4 * q) / n {
            0 => (1, 0),
            1 => (0, 1),
            2 => (-1, 0),
            _ => (0, -1),
        };
        return (
            CertifiedInterval::exact_int(c, bits),
            CertifiedInterval::exact_int(s, bits),
        );
    }
    // Work at a higher internal precision so Taylor evaluation error stays
    // far below the requested resolution.
    let work = bits + 64;
    let x = pi_interval(work).scale(&Rational::new(BigInt::from(2 * q), BigInt::from(n)));
    let x2 = x.mul(&x);

    // |x| < 2π < 7. Pick the first truncation index whose Lagrange
    // remainder bound 7^(m+1)/(m+1)! drops below 2^-(work+8).
    let eps = Rational::new(BigInt::one(), BigInt::from(2).pow(work + 8));
    let mut m: u64 = 1;
    loop {
        let bound = Rational::from_integer(BigInt::from(7).pow((m + 1) as u32)) / factorial(m + 1);
        if bound < eps {
            break;
        }
        m += 1;
    }
    // cos: sum over even powers up to 2K ≥ m; sin: odd powers.
    let terms = (m / 2) + 2;

    // Horner evaluation of Σ_{k=0}^{K} (−1)^k y^k / (2k)!  (cos)
    // and Σ (−1)^k y^k / (2k+1)!  (sin/x), y = x².
    let horner = |offset: u64| -> CertifiedInterval {
        let mut acc = CertifiedInterval::exact_int(0, work);
        for k in (0..=terms).rev() {
            let coeff = Rational::new(
                if k % 2 == 0 { BigInt::one() } else { -BigInt::one() },
                factorial(2 * k + offset).numer().clone(),
            );
            acc = acc.mul(&x2).add(&CertifiedInterval::from_rational(&coeff, work));
        }
        acc
    };
    let rem_cos = Rational::from_integer(BigInt::from(7).pow((2 * terms + 2) as u32))
        / factorial(2 * terms + 2);
    let rem_sin = Rational::from_integer(BigInt::from(7).pow((2 * terms + 3) as u32))
        / factorial(2 * terms + 3);
    let cos = horner(0).pad(&rem_cos);
    let sin = x.mul(&horner(1)).pad(&rem_sin);
    // Report at the externally requested precision tag (endpoints already
    // carry more bits than needed; keep them — outward rounding only).
    (
        CertifiedInterval { lower: cos.lower, upper: cos.upper, precision: bits },
        CertifiedInterval { lower: sin.lower, upper: sin.upper, precision: bits },
    )
}

/// Certified coordinates of the j-th point on a trigonometric moment curve:
/// for each frequency f the pair (cos 2πfj/n, sin 2πfj/n), concatenated.
pub fn interval_trig_point(j: u64, n: u64, frequencies: &[u64], bits: u32) -> Vec<CertifiedInterval> {
    assert!(j < n, "point index out of range");
    let mut out = Vec::with_capacity(2 * frequencies.len());
    for &f in frequencies {
        let q = (f % n) * (j % n) % n;
        let (c, s) = cos_sin_two_pi(q, n, bits);
        out.push(c);
        out.push(s);
    }
    out
}

// ----------------------------------------------------------------------
// Interval linear algebra
// ----------------------------------------------------------------------

/// Determinant enclosure by Gaussian elimination with partial pivoting.
/// Returns `None` when elimination stalls on a column whose candidate
/// pivots all contain zero (caller should refine precision).
pub fn interval_det(matrix: &[Vec<CertifiedInterval>]) -> Option<CertifiedInterval> {
    let n = matrix.len();
    if n == 0 {
        return Some(CertifiedInterval::exact_int(1, 64));
    }
    let bits = matrix[0][0].precision;
    let mut m: Vec<Vec<CertifiedInterval>> = matrix.to_vec();
    let mut det = CertifiedInterval::exact_int(1, bits);
    let mut negate = false;
    for col in 0..n {
        // Choose the pivot with the largest lower magnitude bound that
        // excludes zero.
        let mut best: Option<(usize, Dyadic)> = None;
        for (r, row) in m.iter().enumerate().skip(col) {
            let e = &row[col];
            if e.contains_zero() {
                continue;
            }
            // Magnitude lower bound: min(|lo|, |hi|) of whichever side.
            let mag = if e.lower.mantissa.is_positive() {
                e.lower.clone()
            } else {
                e.upper.neg()
            };
            if best.as_ref().map_or(true, |(_, b)| mag.cmp_value(b) == Ordering::Greater) {
                best = Some((r, mag));
            }
        }
        let (prow, _) = best?;
        if prow != col {
            m.swap(prow, col);
            negate = !negate;
        }
        let pivot = m[col][col].clone();
        det = det.mul(&pivot);
        for r in col + 1..n {
            let factor = m[r][col].div(&pivot).ok()?;
            for c in col..n {
                let delta = factor.mul(&m[col][c]);
                m[r][c] = m[r][c].sub(&delta);
            }
        }
    }
    Some(if negate { det.neg() } else { det })
}

/// Result of a determinant sign certification.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DetSign {
    Positive,
    Negative,
    /// Could not separate from zero; carries the log₂ width achieved at the
    /// final precision (None when the enclosure happened to be a point).
    Indeterminate { width_log2: Option<i64> },
}

/// Certify the sign of a determinant whose entries can be regenerated at
/// any precision. Walks the precision schedule until the enclosure
/// excludes zero; a true zero stays indeterminate at every rung.
pub fn certified_sign_det<F>(mut entries_at: F, schedule: &[u32]) -> DetSign
where
    F: FnMut(u32) -> Vec<Vec<CertifiedInterval>>,
{
    let mut last_width = None;
    for &bits in schedule {
        let m = entries_at(bits);
        if let Some(det) = interval_det(&m) {
            match det.sign() {
                Some(Sign::Positive) => return DetSign::Positive,
                Some(Sign::Negative) => return DetSign::Negative,
                Some(Sign::Zero) | None => last_width = det.width_log2(),
            }
        }
    }
    DetSign::Indeterminate { width_log2: last_width }
}

// ----------------------------------------------------------------------
// GF(2) linear algebra
// ----------------------------------------------------------------------

/// Dense bit-packed matrix over GF(2).
#[derive(Clone, Debug)]
pub struct GF2Matrix {
    rows: Vec<Vec<u64>>,
    cols: usize,
}

impl GF2Matrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        let words = cols.div_ceil(64);
        GF2Matrix { rows: vec![vec![0u64; words]; rows], cols }
    }

    /// Build from an iterator of rows, each given by its set column indices.
    pub fn from_rows<I, J>(rows: I, cols: usize) -> Self
    where
        I: IntoIterator<Item = J>,
        J: IntoIterator<Item = usize>,
    {
        let words = cols.div_ceil(64);
        let mut out = Vec::new();
        for row in rows {
            let mut r = vec![0u64; words];
            for c in row {
                debug_assert!(c < cols);
                r[c / 64] ^= 1 << (c % 64);
            }
            out.push(r);
        }
        GF2Matrix { rows: out, cols }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_rows((0..n).map(|i| [i]), n)
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows.len(), self.cols)
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        (self.rows[r][c / 64] >> (c % 64)) & 1 == 1
    }

    pub fn set(&mut self, r: usize, c: usize, v: bool) {
        let mask = 1u64 << (c % 64);
        if v {
            self.rows[r][c / 64] |= mask;
        } else {
            self.rows[r][c / 64] &= !mask;
        }
    }

    pub fn transpose(&self) -> GF2Matrix {
        let (rs, cs) = self.shape();
        let mut t = GF2Matrix::zero(cs, rs);
        for r in 0..rs {
            for w in 0..self.rows[r].len() {
                let mut word = self.rows[r][w];
                while word != 0 {
                    let b = word.trailing_zeros() as usize;
                    t.set(w * 64 + b, r, true);
                    word &= word - 1;
                }
            }
        }
        t
    }

    fn first_set(row: &[u64]) -> Option<usize> {
        for (w, &word) in row.iter().enumerate() {
            if word != 0 {
                return Some(w * 64 + word.trailing_zeros() as usize);
            }
        }
        None
    }

    /// Rank by in-place forward elimination (the input is consumed).
    pub fn rank(mut self) -> usize {
        let mut rank = 0;
        let nrows = self.rows.len();
        for row_i in 0..nrows {
            let row = std::mem::take(&mut self.rows[row_i]);
            let mut row = row;
            // Reduce against established pivots.
            loop {
                match Self::first_set(&row) {
                    None => break,
                    Some(lead) => {
                        let mut reduced = false;
                        for prior in self.rows[..row_i].iter() {
                            if !prior.is_empty() && Self::first_set(prior) == Some(lead) {
                                for (a, b) in row.iter_mut().zip(prior) {
                                    *a ^= b;
                                }
                                reduced = true;
                                break;
                            }
                        }
                        if !reduced {
                            break;
                        }
                    }
                }
            }
            if Self::first_set(&row).is_some() {
                rank += 1;
            }
            self.rows[row_i] = row;
        }
        rank
    }

    /// Solve `xᵀ·self = bᵀ` being careless of orientation is easy to get
    /// wrong; this solves `self · x = b` over GF(2), returning any solution.
    pub fn solve(&self, b: &[bool]) -> Option<Vec<bool>> {
        assert_eq!(b.len(), self.rows.len());
        let (nr, nc) = self.shape();
        // Augmented elimination.
        let mut rows: Vec<(Vec<u64>, bool)> =
            self.rows.iter().cloned().zip(b.iter().copied()).collect();
        let mut pivots: Vec<(usize, usize)> = Vec::new(); // (row, col)
        let mut next_row = 0;
        for col in 0..nc {
            let Some(pr) = (next_row..nr).find(|&r| (rows[r].0[col / 64] >> (col % 64)) & 1 == 1)
            else {
                continue;
            };
            rows.swap(next_row, pr);
            let (prow, pb) = rows[next_row].clone();
            for (r, (row, rb)) in rows.iter_mut().enumerate() {
                if r != next_row && (row[col / 64] >> (col % 64)) & 1 == 1 {
                    for (a, c) in row.iter_mut().zip(&prow) {
                        *a ^= c;
                    }
                    *rb ^= pb;
                }
            }
            pivots.push((next_row, col));
            next_row += 1;
            if next_row == nr {
                break;
            }
        }
        // Inconsistent if any zero row has RHS 1.
        for (row, rb) in rows.iter().skip(next_row) {
            if *rb && Self::first_set(row).is_none() {
                return None;
            }
        }
        let mut x = vec![false; nc];
        for &(r, c) in &pivots {
            x[c] = rows[r].1;
        }
        Some(x)
    }

    /// Basis of the right nullspace (solutions of `self · x = 0`).
    pub fn nullspace(&self) -> Vec<Vec<bool>> {
        let (nr, nc) = self.shape();
        let mut rows: Vec<Vec<u64>> = self.rows.clone();
        let mut pivot_col_of_row: Vec<usize> = Vec::new();
        let mut next_row = 0;
        for col in 0..nc {
            let Some(pr) = (next_row..nr).find(|&r| (rows[r][col / 64] >> (col % 64)) & 1 == 1)
            else {
                continue;
            };
            rows.swap(next_row, pr);
            let prow = rows[next_row].clone();
            for (r, row) in rows.iter_mut().enumerate() {
                if r != next_row && (row[col / 64] >> (col % 64)) & 1 == 1 {
                    for (a, c) in row.iter_mut().zip(&prow) {
                        *a ^= c;
                    }
                }
            }
            pivot_col_of_row.push(col);
            next_row += 1;
            if next_row == nr {
                break;
            }
        }
        let pivot_cols: std::collections::HashSet<usize> =
            pivot_col_of_row.iter().copied().collect();
        let mut basis = Vec::new();
        for free in (0..nc).filter(|c| !pivot_cols.contains(c)) {
            let mut v = vec![false; nc];
            v[free] = true;
            for (r, &pc) in pivot_col_of_row.iter().enumerate() {
                if (rows[r][free / 64] >> (free % 64)) & 1 == 1 {
                    v[pc] = true;
                }
            }
            basis.push(v);
        }
        basis
    }
}

/// Rank of a GF(2) matrix (convenience wrapper).
pub fn gf2_rank(m: &GF2Matrix) -> usize {
    m.clone().rank()
}

// ----------------------------------------------------------------------
// Exact strict-separation LP
// ----------------------------------------------------------------------

/// A separating hyperplane witness: `normal · v > offset` strictly on the
/// inside points and `< offset` strictly on the outside points.
#[derive(Clone, Debug)]
pub struct SeparationWitness {
    pub normal: Vec<Rational>,
    pub offset: Rational,
}

/// Decide, exactly, whether some hyperplane strictly separates `inside`
/// from `outside` (inside on the positive open side). Strictness is
/// normalized to `normal·v ≥ offset+1` versus `≤ offset−1`, which is
/// equivalent up to scaling. Solved by primal simplex with Bland's rule
/// on exact rationals.
pub fn strict_separation_feasible(
    inside: &[Vec<Rational>],
    outside: &[Vec<Rational>],
) -> Option<SeparationWitness> {
    let dim = inside
        .iter()
        .chain(outside)
        .map(|p| p.len())
        .next()
        .unwrap_or(0);
    assert!(
        inside.iter().chain(outside).all(|p| p.len() == dim),
        "points of unequal dimension"
    );
    if inside.is_empty() || outside.is_empty() {
        // A horizontal hyperplane below / above everything works.
        let offset = if inside.is_empty() { rat(1) } else { rat(-1) };
        return Some(SeparationWitness { normal: vec![Rational::zero(); dim], offset });
    }

    // Unknowns: a ∈ ℚ^dim (free), b ∈ ℚ (free) — each split into
    // nonnegative parts. Constraints, all written as (row)·x ≥ 1:
    //   inside v:   a·v − b ≥ 1
    //   outside v: −a·v + b ≥ 1
    let nvar = 2 * (dim + 1);
    let mut cons: Vec<Vec<Rational>> = Vec::new();
    for v in inside {
        let mut row = Vec::with_capacity(nvar);
        for x in v {
            row.push(x.clone());
            row.push(-x.clone());
        }
        row.push(rat(-1));
        row.push(rat(1));
        cons.push(row);
    }
    for v in outside {
        let mut row = Vec::with_capacity(nvar);
        for x in v {
            row.push(-x.clone());
            row.push(x.clone());
        }
        row.push(rat(1));
        row.push(rat(-1));
        cons.push(row);
    }

    let sol = phase_one_feasible(&cons)?;
    // Reassemble the free variables and verify strictness exactly.
    let mut normal = Vec::with_capacity(dim);
    for i in 0..dim {
        normal.push(&sol[2 * i] - &sol[2 * i + 1]);
    }
    let offset = &sol[2 * dim] - &sol[2 * dim + 1];
    for v in inside {
        let d: Rational = normal.iter().zip(v).map(|(a, x)| a * x).sum();
        assert!(d > offset, "separation witness failed inside check");
    }
    for v in outside {
        let d: Rational = normal.iter().zip(v).map(|(a, x)| a * x).sum();
        assert!(d < offset, "separation witness failed outside check");
    }
    Some(SeparationWitness { normal, offset })
}

/// Phase-1 simplex: find x ≥ 0 with cons·x ≥ 1 (all right-hand sides 1),
/// or None if infeasible. Bland's rule guarantees termination.
fn phase_one_feasible(cons: &[Vec<Rational>]) -> Option<Vec<Rational>> {
    let m = cons.len();
    let n = cons[0].len();
    // Standard form: cons·x − s = 1, s ≥ 0 surplus; artificial z ≥ 0 with
    // +1 coefficient keeps an identity basis. Minimize Σz.
    // Tableau columns: [x (n) | s (m) | z (m) | rhs].
    let cols = n + 2 * m + 1;
    let mut t: Vec<Vec<Rational>> = vec![vec![Rational::zero(); cols]; m + 1];
    for (i, row) in cons.iter().enumerate() {
        for (j, a) in row.iter().enumerate() {
            t[i][j] = a.clone();
        }
        t[i][n + i] = rat(-1); // surplus
        t[i][n + m + i] = rat(1); // artificial
        t[i][cols - 1] = rat(1); // rhs
    }
    // Objective row: minimize Σ z  ⇒ row = Σ constraint rows over x/s parts
    // (reduced costs start with basis = artificials).
    for j in 0..cols {
        let mut s = Rational::zero();
        for i in 0..m {
            s += &t[i][j];
        }
        // z columns have reduced cost 0 under the artificial basis.
        if (n + m..n + 2 * m).contains(&j) {
            s = Rational::zero();
        }
        t[m][j] = s;
    }
    let mut basis: Vec<usize> = (n + m..n + 2 * m).collect();

    loop {
        // Bland: entering = smallest column index with positive reduced cost.
        let Some(enter) = (0..cols - 1).find(|&j| t[m][j].is_positive()) else {
            break;
        };
        // Ratio test; Bland ties broken by smallest basis variable index.
        let mut leave: Option<(usize, Rational)> = None;
        for i in 0..m {
            if t[i][enter].is_positive() {
                let ratio = &t[i][cols - 1] / &t[i][enter];
                match &leave {
                    None => leave = Some((i, ratio)),
                    Some((bi, br)) => {
                        if ratio < *br || (ratio == *br && basis[i] < basis[*bi]) {
                            leave = Some((i, ratio));
                        }
                    }
                }
            }
        }
        let (pivot_row, _) = leave?; // unbounded phase-1 cannot happen; None is defensive
        // Pivot.
        let pv = t[pivot_row][enter].clone();
        for v in t[pivot_row].iter_mut() {
            *v = &*v / &pv;
        }
        for i in 0..=m {
            if i != pivot_row && !t[i][enter].is_zero() {
                let f = t[i][enter].clone();
                let prow = t[pivot_row].clone();
                for (v, p) in t[i].iter_mut().zip(&prow) {
                    *v = &*v - &f * p;
                }
            }
        }
        basis[pivot_row] = enter;
    }

    // Feasible iff every artificial is zero ⇔ objective value is zero.
    // Objective value = Σ artificials = Σ rhs of rows whose basis var is
    // artificial.
    let mut art_sum = Rational::zero();
    for i in 0..m {
        if basis[i] >= n + m {
            art_sum += &t[i][cols - 1];
        }
    }
    if !art_sum.is_zero() {
        return None;
    }
    let mut x = vec![Rational::zero(); n];
    for i in 0..m {
        if basis[i] < n {
            x[basis[i]] = t[i][cols - 1].clone();
        }
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};

    fn q(a: Rational, b: Rational) -> QSqrt5 {
        QSqrt5::new(a, b)
    }

    #[test]
    fn qsqrt5_field_and_sign() {
        let x = q(ratio(3, 2), ratio(-2, 3));
        let prod = &x * &x.conjugate();
        assert_eq!(prod, QSqrt5::from_rational(x.field_norm()));
        assert_eq!(prod.b, Rational::zero());
        // sign via squaring case analysis
        assert_eq!(q(rat(-2), rat(1)).sign(), Sign::Positive); // √5 > 2
        assert_eq!(q(rat(-3), rat(1)).sign(), Sign::Negative); // √5 < 3
        assert_eq!(q(rat(5), rat(-2)).sign(), Sign::Positive); // 2√5 < 5
        assert_eq!(q(rat(4), rat(-2)).sign(), Sign::Negative); // 2√5 > 4
        assert_eq!(q(rat(0), rat(0)).sign(), Sign::Zero);
        let golden = q(ratio(1, 2), ratio(1, 2));
        let inv = golden.inverse().unwrap();
        assert_eq!(&golden * &inv, QSqrt5::from_int(1));
        // φ² = φ + 1
        assert_eq!(&golden * &golden, &golden + &QSqrt5::from_int(1));
    }

    #[test]
    fn qsqrt5_sign_matches_float_on_random_values() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..2000 {
            let a = ratio(rng.gen_range(-50..50), rng.gen_range(1..20));
            let b = ratio(rng.gen_range(-50..50), rng.gen_range(1..20));
            let x = q(a, b);
            let f = x.to_f64();
            if f.abs() > 1e-6 {
                let want = if f > 0.0 { Sign::Positive } else { Sign::Negative };
                assert_eq!(x.sign(), want, "{x}");
            }
        }
    }

    #[test]
    fn polytope_normal_products_evaluate_exactly() {
        // Inner products of facet normals with polytope vertices over ℚ(√5):
        // N₁ = (1 + 1/√5, √5 − 1, 0, 0, 0) against the first simplex point
        // (5,−1,−1,−1,−1)/√5 gives 6/√5; N₂ = ((11+3√5)/8, (1−3√5)/8, 1,1,1)
        // against the negated second point (1,−5,1,1,1)/√5 gives 3/(3−√5).
        let inv_s5 = q(rat(0), ratio(1, 5)); // 1/√5 = √5/5
        let n1 = vec![
            &QSqrt5::from_int(1) + &inv_s5,
            q(rat(-1), rat(1)),
            QSqrt5::zero(),
            QSqrt5::zero(),
            QSqrt5::zero(),
        ];
        let v1: Vec<QSqrt5> = [5i64, -1, -1, -1, -1]
            .iter()
            .map(|&c| &QSqrt5::from_int(c) * &inv_s5)
            .collect();
        let d1 = qsqrt5_dot(&n1, &v1);
        assert_eq!(d1, q(rat(0), ratio(6, 5))); // 6/√5 = (6/5)√5
        assert!((d1.to_f64() - 2.68328).abs() < 1e-4);

        let n2 = vec![
            q(ratio(11, 8), ratio(3, 8)),
            q(ratio(1, 8), ratio(-3, 8)),
            QSqrt5::from_int(1),
            QSqrt5::from_int(1),
            QSqrt5::from_int(1),
        ];
        let v2p: Vec<QSqrt5> = [1i64, -5, 1, 1, 1]
            .iter()
            .map(|&c| &QSqrt5::from_int(c) * &inv_s5)
            .collect();
        let d2 = qsqrt5_dot(&n2, &v2p);
        // 3/(3−√5) = (9+3√5)/4
        let expected = &QSqrt5::from_int(3) / &q(rat(3), rat(-1));
        assert_eq!(d2, expected);
        assert_eq!(d2, q(ratio(9, 4), ratio(3, 4)));
        // zero vector dot anything is zero
        let z = vec![QSqrt5::zero(); 5];
        assert!(qsqrt5_dot(&z, &v2p).is_zero());
    }

    #[test]
    fn dyadic_rounding_directions() {
        let r = ratio(1, 3);
        let lo = Dyadic::from_rational_floor(&r, 64);
        let hi = Dyadic::from_rational_ceil(&r, 64);
        assert!(lo.to_rational() <= r && r <= hi.to_rational());
        assert!(lo.cmp_value(&hi) != Ordering::Greater);
        let nr = -r.clone();
        let nlo = Dyadic::from_rational_floor(&nr, 64);
        let nhi = Dyadic::from_rational_ceil(&nr, 64);
        assert!(nlo.to_rational() <= nr && nr <= nhi.to_rational());
        // exact dyadics round-trip exactly
        let e = ratio(-7, 16);
        assert_eq!(Dyadic::from_rational_floor(&e, 64).to_rational(), e);
        assert_eq!(Dyadic::from_rational_ceil(&e, 64).to_rational(), e);
        // rounding a negative number down must not move it toward zero
        let d = Dyadic::from_int(-3);
        assert!(d.round_floor(1).to_rational() <= rat(-3));
        assert!(d.round_ceil(1).to_rational() >= rat(-3));
    }

    #[test]
    fn interval_arithmetic_is_conservative_on_random_rationals() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..10_000 {
            let x = ratio(rng.gen_range(-1000..1000), rng.gen_range(1..100));
            let y = ratio(rng.gen_range(-1000..1000), rng.gen_range(1..100));
            let ix = CertifiedInterval::from_rational(&x, 64);
            let iy = CertifiedInterval::from_rational(&y, 64);
            assert!(ix.add(&iy).contains_rational(&(&x + &y)));
            assert!(ix.sub(&iy).contains_rational(&(&x - &y)));
            assert!(ix.mul(&iy).contains_rational(&(&x * &y)));
            if !iy.contains_zero() {
                assert!(ix.div(&iy).unwrap().contains_rational(&(&x / &y)));
            }
        }
    }

    #[test]
    fn pi_enclosure_is_tight_and_correct() {
        let pi = pi_interval(128);
        // Known 30-digit value of π, checked against the enclosure.
        let approx = ratio(314159265358979324, 100000000000000000);
        // |π − approx| < 1e-17, so approx must lie within a slightly padded
        // enclosure, and the enclosure width must be tiny.
        assert!(pi.pad(&ratio(1, 100000000000000)).contains_rational(&approx));
        assert!(pi.width_log2().unwrap() < -120);
    }

    #[test]
    fn trig_points_hit_exact_quarter_turns_and_tight_widths() {
        // j=0: exactly (1,0) per frequency.
        let p = interval_trig_point(0, 7, &[1, 2, 4], 64);
        assert_eq!(p.len(), 6);
        for (i, iv) in p.iter().enumerate() {
            let want = if i % 2 == 0 { 1 } else { 0 };
            assert_eq!(iv.lower.to_rational(), rat(want));
            assert_eq!(iv.upper.to_rational(), rat(want));
        }
        // quarter turn: n=4, j=1 → exactly (0,1).
        let p = interval_trig_point(1, 4, &[1], 64);
        assert_eq!(p[0].lower.to_rational(), rat(0));
        assert_eq!(p[1].upper.to_rational(), rat(1));
        // seventh roots at 64 bits: width below 2⁻⁶⁰.
        let p = interval_trig_point(1, 7, &[1], 64);
        for iv in &p {
            assert!(iv.width_log2().unwrap_or(i64::MIN) < -60, "{:?}", iv.width_log2());
        }
        // cos²+sin² encloses 1.
        let one = p[0].mul(&p[0]).add(&p[1].mul(&p[1]));
        assert!(one.contains_rational(&rat(1)));
    }

    #[test]
    fn determinant_sign_certification() {
        let id = |bits: u32| {
            (0..3)
                .map(|i| {
                    (0..3)
                        .map(|j| CertifiedInterval::exact_int((i == j) as i64, bits))
                        .collect()
                })
                .collect::<Vec<Vec<_>>>()
        };
        assert_eq!(certified_sign_det(id, &PRECISION_SCHEDULE), DetSign::Positive);

        // Swapping two rows flips the sign.
        let swapped = |bits: u32| {
            let rows = [[0, 1, 0], [1, 0, 0], [0, 0, 1]];
            rows.iter()
                .map(|r| r.iter().map(|&e| CertifiedInterval::exact_int(e, bits)).collect())
                .collect::<Vec<Vec<_>>>()
        };
        assert_eq!(certified_sign_det(swapped, &PRECISION_SCHEDULE), DetSign::Negative);

        // A truly singular rational matrix stays indeterminate forever.
        let singular = |bits: u32| {
            let rows = [[1, 2], [2, 4]];
            rows.iter()
                .map(|r| r.iter().map(|&e| CertifiedInterval::exact_int(e, bits)).collect())
                .collect::<Vec<Vec<_>>>()
        };
        assert!(matches!(
            certified_sign_det(singular, &PRECISION_SCHEDULE),
            DetSign::Indeterminate { .. }
        ));

        // An irrational but nonzero determinant: det [[cos θ, sin θ],[−sin θ, cos θ]] = 1.
        let rot = |bits: u32| {
            let (c, s) = cos_sin_two_pi(1, 7, bits);
            vec![vec![c.clone(), s.clone()], vec![s.neg(), c.clone()]]
        };
        assert_eq!(certified_sign_det(rot, &PRECISION_SCHEDULE), DetSign::Positive);
    }

    #[test]
    fn gf2_rank_and_kernels() {
        assert_eq!(gf2_rank(&GF2Matrix::zero(4, 6)), 0);
        assert_eq!(gf2_rank(&GF2Matrix::identity(17)), 17);
        // Triangle-edge incidence of the tetrahedron boundary: 4 triangles
        // over 6 edges, rank 3.
        let edges = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
        let tris = [[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]];
        let eidx = |a: usize, b: usize| edges.iter().position(|&e| e == (a, b)).unwrap();
        let m = GF2Matrix::from_rows(
            tris.iter().map(|t| {
                vec![eidx(t[0], t[1]), eidx(t[0], t[2]), eidx(t[1], t[2])]
            }),
            6,
        );
        assert_eq!(gf2_rank(&m), 3);
        assert_eq!(gf2_rank(&m.transpose()), 3);
        // Right-kernel dimensions complement the rank on each side.
        assert_eq!(m.nullspace().len(), 6 - 3);
        assert_eq!(m.transpose().nullspace().len(), 4 - 3);
        // Each edge lies in exactly two triangles, so the image of
        // edge-space under this incidence map is the even-weight subspace:
        // hitting exactly one triangle oddly is impossible, two is possible.
        assert!(m.solve(&[true, false, false, false]).is_none());
        let x = m.solve(&[true, true, false, false]).unwrap();
        for (i, want) in [true, true, false, false].iter().enumerate() {
            let hit = x
                .iter()
                .enumerate()
                .filter(|(j, &on)| on && m.get(i, *j))
                .count();
            assert_eq!(hit % 2 == 1, *want);
        }
    }

    #[test]
    fn gf2_rank_equals_transpose_rank_randomized() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for _ in 0..50 {
            let rows = rng.gen_range(1..12);
            let cols = rng.gen_range(1..12);
            let mut m = GF2Matrix::zero(rows, cols);
            for r in 0..rows {
                for c in 0..cols {
                    if rng.gen_bool(0.4) {
                        m.set(r, c, true);
                    }
                }
            }
            assert_eq!(gf2_rank(&m), gf2_rank(&m.transpose()));
        }
    }

    fn unit(i: usize, dim: usize, sign: i64) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); dim];
        v[i] = rat(sign);
        v
    }

    #[test]
    fn strict_separation_on_cross_polytope_vertices() {
        // Vertices ±e_i of the 6-dimensional cross polytope.
        let dim = 6;
        let mut all = Vec::new();
        for i in 0..dim {
            all.push(unit(i, dim, 1));
            all.push(unit(i, dim, -1));
        }
        // single vertex vs its antipode: feasible
        assert!(strict_separation_feasible(&[all[0].clone()], &[all[1].clone()]).is_some());
        // antipodal pair inside, everything else outside: infeasible
        let inside = vec![all[0].clone(), all[1].clone()];
        let outside: Vec<_> = all[2..].to_vec();
        assert!(strict_separation_feasible(&inside, &outside).is_none());
        // empty inside: feasible
        assert!(strict_separation_feasible(&[], &outside).is_some());
        // monotonicity: shrinking both sides of a feasible instance stays feasible
        let inside = vec![all[0].clone(), all[2].clone()];
        let outside: Vec<_> = vec![all[1].clone(), all[3].clone(), all[4].clone()];
        let w = strict_separation_feasible(&inside, &outside);
        assert!(w.is_some());
        assert!(strict_separation_feasible(&inside[..1], &outside[..2]).is_some());
        // witness separates strictly
        let w = w.unwrap();
        for v in &inside {
            let d: Rational = w.normal.iter().zip(v).map(|(a, x)| a * x).sum();
            assert!(d > w.offset);
        }
    }
}
