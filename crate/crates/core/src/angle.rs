//! Exact angles measured in degrees.
//!
//! Every angle that the hexagon conditions talk about (interior angles,
//! `360/n`, `720/m`, `180 - 180/n`, vertex sums) is a rational number of
//! degrees, so it is stored as a reduced fraction and compared without any
//! tolerance. Coordinates are a separate, floating-point concern.

use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};
use core::str::FromStr;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::TileError;

/// A rational number of degrees, always kept in lowest terms with a
/// positive denominator.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AngleDeg(Ratio<i64>);

impl AngleDeg {
    pub const ZERO: AngleDeg = AngleDeg(Ratio::new_raw(0, 1));
    pub const STRAIGHT: AngleDeg = AngleDeg(Ratio::new_raw(180, 1));
    pub const FULL: AngleDeg = AngleDeg(Ratio::new_raw(360, 1));

    /// `num/den` degrees. Fails on a zero denominator.
    pub fn new(num: i64, den: i64) -> Result<Self, TileError> {
        if den == 0 {
            return Err(TileError::Domain("angle denominator is zero"));
        }
        Ok(AngleDeg(Ratio::new(num, den)))
    }

    pub const fn from_int(deg: i64) -> Self {
        AngleDeg(Ratio::new_raw(deg, 1))
    }

    /// `360/n` degrees.
    pub fn full_over(n: i64) -> Self {
        AngleDeg(Ratio::new(360, n))
    }

    pub fn numer(&self) -> i64 {
        *self.0.numer()
    }

    pub fn denom(&self) -> i64 {
        *self.0.denom()
    }

    pub fn to_f64(self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    pub fn to_radians(self) -> f64 {
        self.to_f64() * core::f64::consts::PI / 180.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn abs(self) -> Self {
        AngleDeg(self.0.abs())
    }

    /// Reduce into `[0, 360)`.
    pub fn normalized(self) -> Self {
        let full = Ratio::from_integer(360);
        let mut r = self.0 % full;
        if r.is_negative() {
            r += full;
        }
        AngleDeg(r)
    }

    /// Reduce into `[0, 180)`; the natural range for line directions.
    pub fn normalized_half(self) -> Self {
        let half = Ratio::from_integer(180);
        let mut r = self.0 % half;
        if r.is_negative() {
            r += half;
        }
        AngleDeg(r)
    }

    /// True when `self` lies strictly between 0 and 180 degrees.
    pub fn is_convex_interior(&self) -> bool {
        *self > AngleDeg::ZERO && *self < AngleDeg::STRAIGHT
    }

    /// If this angle is `360/n` for an integer `n`, return `n`.
    pub fn divides_full_turn(&self) -> Option<i64> {
        if self.0 <= Ratio::zero() {
            return None;
        }
        let q = Ratio::from_integer(360) / self.0;
        q.is_integer().then(|| q.to_integer())
    }

    /// Round to `places` decimal places, half away from zero, returned as an
    /// integer count of `10^-places` degrees. Exact: no float is involved.
    pub fn round_scaled(&self, places: u32) -> i64 {
        let scale = 10i64.pow(places);
        let n = self.numer() * scale;
        let d = self.denom();
        let (q, r) = n.div_rem(&d);
        if 2 * r.abs() >= d {
            q + n.signum()
        } else {
            q
        }
    }

    /// Decimal rendering rounded to `places`, with trailing zeros trimmed
    /// (`120`, `157.5`, `51.43`).
    pub fn display_rounded(&self, places: u32) -> alloc::string::String {
        let scaled = self.round_scaled(places);
        let scale = 10i64.pow(places);
        let sign = if scaled < 0 { "-" } else { "" };
        let int = scaled.abs() / scale;
        let mut frac = alloc::format!("{:0width$}", scaled.abs() % scale, width = places as usize);
        while frac.ends_with('0') {
            frac.pop();
        }
        if frac.is_empty() {
            alloc::format!("{sign}{int}")
        } else {
            alloc::format!("{sign}{int}.{frac}")
        }
    }

    /// Nearest fraction with denominator at most `max_den`, via continued
    /// fractions. Used to name mirror axes recovered from coordinates.
    pub fn approximate(deg: f64, max_den: i64) -> Option<Self> {
        if !deg.is_finite() {
            return None;
        }
        let neg = deg < 0.0;
        let mut x = if neg { -deg } else { deg };
        let (mut p0, mut q0, mut p1, mut q1) = (0i64, 1i64, 1i64, 0i64);
        for _ in 0..64 {
            let a = libm::floor(x);
            if a > 1e12 {
                break;
            }
            let a = a as i64;
            let p2 = a.checked_mul(p1).and_then(|v| v.checked_add(p0))?;
            let q2 = a.checked_mul(q1).and_then(|v| v.checked_add(q0))?;
            if q2 > max_den {
                break;
            }
            p0 = p1;
            q0 = q1;
            p1 = p2;
            q1 = q2;
            let frac = x - a as f64;
            if frac < 1e-12 {
                break;
            }
            x = 1.0 / frac;
        }
        if q1 == 0 {
            return None;
        }
        let r = Ratio::new(if neg { -p1 } else { p1 }, q1);
        Some(AngleDeg(r))
    }
}

impl fmt::Debug for AngleDeg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}°", self)
    }
}

impl fmt::Display for AngleDeg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denom() == 1 {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

/// Accepts `134`, `-12.25`, `134.5` and `360/7`. Decimals are read as exact
/// fractions over a power of ten.
impl FromStr for AngleDeg {
    type Err = TileError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let bad = TileError::Domain("malformed angle");
        if let Some((n, d)) = s.split_once('/') {
            let n: i64 = n.trim().parse().map_err(|_| bad.clone())?;
            let d: i64 = d.trim().parse().map_err(|_| bad.clone())?;
            return AngleDeg::new(n, d);
        }
        let (neg, body) = match s.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, s.strip_prefix('+').unwrap_or(s)),
        };
        let (int, frac) = body.split_once('.').unwrap_or((body, ""));
        if int.is_empty() && frac.is_empty() {
            return Err(bad);
        }
        if !int.chars().all(|c| c.is_ascii_digit()) || !frac.chars().all(|c| c.is_ascii_digit()) {
            return Err(bad);
        }
        if frac.len() > 12 {
            return Err(TileError::Domain("too many decimal places in angle"));
        }
        let digits = alloc::format!("{int}{frac}");
        let num: i64 = if digits.is_empty() {
            0
        } else {
            digits.parse().map_err(|_| bad)?
        };
        let den = 10i64.pow(frac.len() as u32);
        AngleDeg::new(if neg { -num } else { num }, den)
    }
}

impl Add for AngleDeg {
    type Output = AngleDeg;
    fn add(self, rhs: AngleDeg) -> AngleDeg {
        AngleDeg(self.0 + rhs.0)
    }
}

impl AddAssign for AngleDeg {
    fn add_assign(&mut self, rhs: AngleDeg) {
        self.0 += rhs.0;
    }
}

impl Sub for AngleDeg {
    type Output = AngleDeg;
    fn sub(self, rhs: AngleDeg) -> AngleDeg {
        AngleDeg(self.0 - rhs.0)
    }
}

impl SubAssign for AngleDeg {
    fn sub_assign(&mut self, rhs: AngleDeg) {
        self.0 -= rhs.0;
    }
}

impl Neg for AngleDeg {
    type Output = AngleDeg;
    fn neg(self) -> AngleDeg {
        AngleDeg(-self.0)
    }
}

impl Mul<i64> for AngleDeg {
    type Output = AngleDeg;
    fn mul(self, rhs: i64) -> AngleDeg {
        AngleDeg(self.0 * rhs)
    }
}

impl Div<i64> for AngleDeg {
    type Output = AngleDeg;
    fn div(self, rhs: i64) -> AngleDeg {
        AngleDeg(self.0 / rhs)
    }
}

impl core::iter::Sum for AngleDeg {
    fn sum<I: Iterator<Item = AngleDeg>>(iter: I) -> AngleDeg {
        iter.fold(AngleDeg::ZERO, |a, b| a + b)
    }
}

/// An interior angle that is either known exactly or was measured from
/// coordinates (the two new corners created by a generic bisecting cut).
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum AngleValue {
    Exact(AngleDeg),
    Measured(f64),
}

impl AngleValue {
    pub fn to_f64(self) -> f64 {
        match self {
            AngleValue::Exact(a) => a.to_f64(),
            AngleValue::Measured(v) => v,
        }
    }

    pub fn exact(self) -> Option<AngleDeg> {
        match self {
            AngleValue::Exact(a) => Some(a),
            AngleValue::Measured(_) => None,
        }
    }

    /// Sum of a run of angles: exact if every term is exact.
    pub fn sum<I: IntoIterator<Item = AngleValue>>(items: I) -> AngleValue {
        let mut exact = Some(AngleDeg::ZERO);
        let mut approx = 0.0;
        for a in items {
            approx += a.to_f64();
            exact = match (exact, a) {
                (Some(acc), AngleValue::Exact(x)) => Some(acc + x),
                _ => None,
            };
        }
        match exact {
            Some(e) => AngleValue::Exact(e),
            None => AngleValue::Measured(approx),
        }
    }
}

impl From<AngleDeg> for AngleValue {
    fn from(a: AngleDeg) -> Self {
        AngleValue::Exact(a)
    }
}

impl PartialOrd for AngleValue {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        match (self, other) {
            (AngleValue::Exact(a), AngleValue::Exact(b)) => Some(a.cmp(b)),
            _ => self.to_f64().partial_cmp(&other.to_f64()),
        }
    }
}
