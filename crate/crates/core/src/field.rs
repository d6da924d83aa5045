//! Exact scalars: rationals and elements of cyclotomic fields ℚ(ζ_m).
//!
//! A cyclotomic element is stored as its coefficient vector in the power basis
//! `1, ζ, …, ζ^{φ(m)-1}`, fully reduced modulo the m-th cyclotomic polynomial.
//! Elements whose only nonzero coefficient is the constant one are always
//! stored as rationals, so equality is structural.
//!
//! Arithmetic between two genuinely cyclotomic elements of different orders
//! panics; sessions validate field declarations before any arithmetic runs.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// The coefficient field of a computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Field {
    Rational,
    Cyclotomic(u32),
}

impl Field {
    pub fn parse(s: &str) -> Result<Field> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("q") {
            return Ok(Field::Rational);
        }
        if let Some(rest) = s.strip_prefix("cyclo:") {
            let m: u32 = rest
                .trim()
                .parse()
                .map_err(|_| Error::Field(format!("bad cyclotomic order `{rest}`")))?;
            if m == 0 {
                return Err(Error::Field("cyclotomic order must be positive".into()));
            }
            return Ok(Field::Cyclotomic(m));
        }
        Err(Error::Field(format!("unknown field `{s}` (expected q or cyclo:m)")))
    }

    /// Order of the adjoined root of unity; 1 for ℚ.
    pub fn order(self) -> u32 {
        match self {
            Field::Rational => 1,
            Field::Cyclotomic(m) => m,
        }
    }

    pub fn contains(self, x: &FieldElem) -> bool {
        match x.order() {
            None => true,
            Some(m) => self.order() == m,
        }
    }

    /// The smallest declared field containing both, or an error for mixed orders.
    pub fn join(self, other: Field) -> Result<Field> {
        let (a, b) = (self.order(), other.order());
        if a <= 2 {
            Ok(if b <= 2 && a >= b { self } else { other })
        } else if b <= 2 || a == b {
            Ok(self)
        } else {
            Err(Error::Field(format!(
                "mixed cyclotomic orders {a} and {b} are not supported"
            )))
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "q"),
            Field::Cyclotomic(m) => write!(f, "cyclo:{m}"),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
enum Repr {
    Rat(BigRational),
    /// Invariant: len = φ(m), some coefficient of index ≥ 1 is nonzero.
    Cyc(u32, Vec<BigRational>),
}

/// An exact element of ℚ or of a cyclotomic field.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct FieldElem(Repr);

type Poly = Vec<BigRational>;

fn trim(p: &mut Poly) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

fn poly_mul(a: &[BigRational], b: &[BigRational]) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    trim(&mut out);
    out
}

fn poly_sub(a: &[BigRational], b: &[BigRational]) -> Poly {
    let n = a.len().max(b.len());
    let mut out: Poly = (0..n)
        .map(|i| {
            let x = a.get(i).cloned().unwrap_or_else(BigRational::zero);
            match b.get(i) {
                Some(y) => x - y,
                None => x,
            }
        })
        .collect();
    trim(&mut out);
    out
}

/// Division with remainder; `b` must be nonzero and trimmed.
fn poly_divrem(a: &[BigRational], b: &[BigRational]) -> (Poly, Poly) {
    let mut rem: Poly = a.to_vec();
    trim(&mut rem);
    let db = b.len() - 1;
    if rem.len() < b.len() {
        return (Vec::new(), rem);
    }
    let mut quot = vec![BigRational::zero(); rem.len() - db];
    let lead = b[db].clone();
    while rem.len() >= b.len() {
        let shift = rem.len() - b.len();
        let c = rem.last().unwrap().clone() / &lead;
        for (i, y) in b.iter().enumerate() {
            rem[shift + i] -= &c * y;
        }
        quot[shift] = c;
        trim(&mut rem);
    }
    (quot, rem)
}

fn cyclotomic_cache() -> &'static Mutex<HashMap<u32, Arc<Poly>>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<Poly>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Coefficients (constant term first) of the m-th cyclotomic polynomial.
pub fn cyclotomic_polynomial(m: u32) -> Arc<Vec<BigRational>> {
    assert!(m > 0, "cyclotomic order must be positive");
    if let Some(p) = cyclotomic_cache().lock().unwrap().get(&m) {
        return p.clone();
    }
    // Φ_m = (x^m - 1) / ∏_{d | m, d < m} Φ_d
    let mut p: Poly = vec![BigRational::zero(); m as usize + 1];
    p[0] = -BigRational::one();
    p[m as usize] = BigRational::one();
    for d in 1..m {
        if m.is_multiple_of(d) {
            let phi_d = cyclotomic_polynomial(d);
            let (q, r) = poly_divrem(&p, &phi_d);
            debug_assert!(r.is_empty());
            p = q;
        }
    }
    let p = Arc::new(p);
    cyclotomic_cache().lock().unwrap().insert(m, p.clone());
    p
}

/// Euler's totient, the degree of ℚ(ζ_m) over ℚ.
pub fn euler_phi(m: u32) -> usize {
    cyclotomic_polynomial(m).len() - 1
}

fn reduce(m: u32, mut coeffs: Poly) -> FieldElem {
    let phi = cyclotomic_polynomial(m);
    let deg = phi.len() - 1;
    trim(&mut coeffs);
    while coeffs.len() > deg {
        let top = coeffs.len() - 1;
        let c = coeffs[top].clone();
        let shift = top - deg;
        for (i, y) in phi.iter().enumerate() {
            coeffs[shift + i] -= &c * y;
        }
        trim(&mut coeffs);
    }
    if coeffs.len() <= 1 {
        FieldElem(Repr::Rat(coeffs.pop().unwrap_or_else(BigRational::zero)))
    } else {
        coeffs.resize(deg, BigRational::zero());
        FieldElem(Repr::Cyc(m, coeffs))
    }
}

impl FieldElem {
    pub fn zero() -> Self {
        FieldElem(Repr::Rat(BigRational::zero()))
    }

    pub fn one() -> Self {
        FieldElem(Repr::Rat(BigRational::one()))
    }

    pub fn from_int(n: i64) -> Self {
        FieldElem(Repr::Rat(BigRational::from_integer(BigInt::from(n))))
    }

    /// `num / den`; panics when `den == 0`.
    pub fn ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        FieldElem(Repr::Rat(BigRational::new(num.into(), den.into())))
    }

    pub fn from_rational(q: BigRational) -> Self {
        FieldElem(Repr::Rat(q))
    }

    /// ζ_m^k, reduced.
    pub fn root_of_unity(m: u32, k: u32) -> Self {
        let k = (k % m) as usize;
        let mut coeffs = vec![BigRational::zero(); k + 1];
        coeffs[k] = BigRational::one();
        reduce(m, coeffs)
    }

    /// Builds `Σ coeffs[i] ζ_m^i` and reduces it.
    pub fn cyclotomic(m: u32, coeffs: Vec<BigRational>) -> Self {
        reduce(m, coeffs)
    }

    pub fn is_zero(&self) -> bool {
        matches!(&self.0, Repr::Rat(q) if q.is_zero())
    }

    pub fn is_one(&self) -> bool {
        matches!(&self.0, Repr::Rat(q) if q.is_one())
    }

    pub fn is_rational(&self) -> bool {
        matches!(self.0, Repr::Rat(_))
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match &self.0 {
            Repr::Rat(q) => Some(q),
            Repr::Cyc(..) => None,
        }
    }

    /// Cyclotomic order if the element is not rational.
    pub fn order(&self) -> Option<u32> {
        match &self.0 {
            Repr::Rat(_) => None,
            Repr::Cyc(m, _) => Some(*m),
        }
    }

    /// Coefficients in the power basis of ℚ(ζ_m) (length 1 for rationals).
    pub fn coefficients(&self) -> Vec<BigRational> {
        match &self.0 {
            Repr::Rat(q) => vec![q.clone()],
            Repr::Cyc(_, c) => c.clone(),
        }
    }

    pub fn inv(&self) -> Option<FieldElem> {
        match &self.0 {
            Repr::Rat(q) if q.is_zero() => None,
            Repr::Rat(q) => Some(FieldElem(Repr::Rat(q.recip()))),
            Repr::Cyc(m, a) => {
                let phi = cyclotomic_polynomial(*m);
                let mut a = a.clone();
                trim(&mut a);
                let (mut r0, mut r1): (Poly, Poly) = (phi.to_vec(), a);
                let (mut s0, mut s1): (Poly, Poly) = (Vec::new(), vec![BigRational::one()]);
                while !r1.is_empty() {
                    let (q, r) = poly_divrem(&r0, &r1);
                    let s2 = poly_sub(&s0, &poly_mul(&q, &s1));
                    r0 = std::mem::replace(&mut r1, r);
                    s0 = std::mem::replace(&mut s1, s2);
                }
                // Φ_m is irreducible, so the gcd is a nonzero constant.
                debug_assert_eq!(r0.len(), 1);
                let c = r0[0].recip();
                Some(reduce(*m, s0.into_iter().map(|x| x * &c).collect()))
            }
        }
    }

    fn order_pair(a: &FieldElem, b: &FieldElem) -> Option<u32> {
        match (a.order(), b.order()) {
            (None, None) => None,
            (Some(m), None) | (None, Some(m)) => Some(m),
            (Some(m), Some(n)) => {
                assert!(m == n, "mixed cyclotomic orders {m} and {n}");
                Some(m)
            }
        }
    }

    fn padded(&self, len: usize) -> Poly {
        let mut c = self.coefficients();
        c.resize(len.max(c.len()), BigRational::zero());
        c
    }

    fn add_ref(&self, other: &FieldElem) -> FieldElem {
        match Self::order_pair(self, other) {
            None => {
                let (Repr::Rat(a), Repr::Rat(b)) = (&self.0, &other.0) else {
                    unreachable!()
                };
                FieldElem(Repr::Rat(a + b))
            }
            Some(m) => {
                let n = euler_phi(m);
                let a = self.padded(n);
                let b = other.padded(n);
                reduce(m, a.into_iter().zip(b).map(|(x, y)| x + y).collect())
            }
        }
    }

    fn mul_ref(&self, other: &FieldElem) -> FieldElem {
        match (&self.0, &other.0) {
            (Repr::Rat(a), Repr::Rat(b)) => FieldElem(Repr::Rat(a * b)),
            (Repr::Rat(a), Repr::Cyc(m, c)) | (Repr::Cyc(m, c), Repr::Rat(a)) => {
                if a.is_zero() {
                    return FieldElem::zero();
                }
                FieldElem(Repr::Cyc(*m, c.iter().map(|x| x * a).collect()))
            }
            (Repr::Cyc(m, a), Repr::Cyc(n, b)) => {
                assert!(m == n, "mixed cyclotomic orders {m} and {n}");
                reduce(*m, poly_mul(a, b))
            }
        }
    }

    fn neg_ref(&self) -> FieldElem {
        match &self.0 {
            Repr::Rat(a) => FieldElem(Repr::Rat(-a)),
            Repr::Cyc(m, c) => FieldElem(Repr::Cyc(*m, c.iter().map(|x| -x).collect())),
        }
    }

    /// True when the printed form is a single signed monomial (no parentheses needed
    /// when used as a coefficient).
    pub fn is_atomic(&self) -> bool {
        match &self.0 {
            Repr::Rat(_) => true,
            Repr::Cyc(_, c) => c.iter().filter(|x| !x.is_zero()).count() == 1,
        }
    }

    /// True for rationals `< 0`.
    pub fn is_negative_rational(&self) -> bool {
        matches!(&self.0, Repr::Rat(q) if q.is_negative())
    }

    /// Parses `3/2`, `-4`, `zeta`, `1/2*zeta^3 - 2` against the given field.
    pub fn parse(s: &str, field: Field) -> Result<FieldElem> {
        let bad = || Error::Field(format!("cannot parse scalar `{s}`"));
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(bad());
        }
        let mut acc = FieldElem::zero();
        let mut rest = compact.as_str();
        while !rest.is_empty() {
            let sign = if let Some(r) = rest.strip_prefix('-') {
                rest = r;
                -1
            } else {
                if let Some(r) = rest.strip_prefix('+') {
                    rest = r;
                }
                1
            };
            let end = rest[1..]
                .find(['+', '-'])
                .map(|i| i + 1)
                .unwrap_or(rest.len());
            let term = &rest[..end];
            rest = &rest[end..];
            let (coef_str, zeta_part) = match term.find("zeta") {
                Some(pos) => {
                    let c = term[..pos].trim_end_matches('*');
                    (c, Some(&term[pos + 4..]))
                }
                None => (term, None),
            };
            let coef = if coef_str.is_empty() {
                BigRational::one()
            } else {
                parse_rational(coef_str).ok_or_else(bad)?
            };
            let mut value = FieldElem::from_rational(coef);
            if let Some(pow) = zeta_part {
                let k: u32 = if pow.is_empty() {
                    1
                } else {
                    pow.strip_prefix('^')
                        .and_then(|p| p.parse().ok())
                        .ok_or_else(bad)?
                };
                let m = field.order();
                if m == 1 {
                    return Err(Error::Field(format!(
                        "`zeta` used in `{s}` but the field is q"
                    )));
                }
                value = value * FieldElem::root_of_unity(m, k);
            }
            if sign < 0 {
                value = -value;
            }
            acc += value;
        }
        if !field.contains(&acc) {
            return Err(Error::Field(format!("`{s}` does not lie in {field}")));
        }
        Ok(acc)
    }
}

/// Parses `n` or `n/d` with optional sign.
pub fn parse_rational(s: &str) -> Option<BigRational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                None
            } else {
                Some(BigRational::new(n, d))
            }
        }
        None => s.parse::<BigInt>().ok().map(BigRational::from_integer),
    }
}

fn fmt_rational(q: &BigRational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Rat(q) => f.write_str(&fmt_rational(q)),
            Repr::Cyc(_, c) => {
                let mut first = true;
                for (k, x) in c.iter().enumerate() {
                    if x.is_zero() {
                        continue;
                    }
                    let neg = x.is_negative();
                    let abs = x.abs();
                    if first {
                        if neg {
                            f.write_str("-")?;
                        }
                    } else {
                        f.write_str(if neg { " - " } else { " + " })?;
                    }
                    first = false;
                    let zeta = match k {
                        0 => String::new(),
                        1 => "zeta".to_string(),
                        _ => format!("zeta^{k}"),
                    };
                    if k == 0 {
                        f.write_str(&fmt_rational(&abs))?;
                    } else if abs.is_one() {
                        f.write_str(&zeta)?;
                    } else {
                        write!(f, "{}*{}", fmt_rational(&abs), zeta)?;
                    }
                }
                Ok(())
            }
        }
    }
}

impl Default for FieldElem {
    fn default() -> Self {
        FieldElem::zero()
    }
}

impl From<i64> for FieldElem {
    fn from(n: i64) -> Self {
        FieldElem::from_int(n)
    }
}

impl From<BigRational> for FieldElem {
    fn from(q: BigRational) -> Self {
        FieldElem::from_rational(q)
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $body:expr) => {
        impl $tr<&FieldElem> for &FieldElem {
            type Output = FieldElem;
            fn $m(self, rhs: &FieldElem) -> FieldElem {
                let f: fn(&FieldElem, &FieldElem) -> FieldElem = $body;
                f(self, rhs)
            }
        }
        impl $tr<FieldElem> for FieldElem {
            type Output = FieldElem;
            fn $m(self, rhs: FieldElem) -> FieldElem {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&FieldElem> for FieldElem {
            type Output = FieldElem;
            fn $m(self, rhs: &FieldElem) -> FieldElem {
                (&self).$m(rhs)
            }
        }
        impl $tr<FieldElem> for &FieldElem {
            type Output = FieldElem;
            fn $m(self, rhs: FieldElem) -> FieldElem {
                self.$m(&rhs)
            }
        }
    };
}

binop!(Add, add, |a, b| a.add_ref(b));
binop!(Sub, sub, |a, b| a.add_ref(&b.neg_ref()));
binop!(Mul, mul, |a, b| a.mul_ref(b));
binop!(Div, div, |a, b| a.mul_ref(&b.inv().expect("division by zero")));

impl Neg for FieldElem {
    type Output = FieldElem;
    fn neg(self) -> FieldElem {
        self.neg_ref()
    }
}

impl Neg for &FieldElem {
    type Output = FieldElem;
    fn neg(self) -> FieldElem {
        self.neg_ref()
    }
}

impl AddAssign<FieldElem> for FieldElem {
    fn add_assign(&mut self, rhs: FieldElem) {
        *self = self.add_ref(&rhs);
    }
}

impl AddAssign<&FieldElem> for FieldElem {
    fn add_assign(&mut self, rhs: &FieldElem) {
        *self = self.add_ref(rhs);
    }
}

impl SubAssign<&FieldElem> for FieldElem {
    fn sub_assign(&mut self, rhs: &FieldElem) {
        *self = self.add_ref(&rhs.neg_ref());
    }
}

impl MulAssign<&FieldElem> for FieldElem {
    fn mul_assign(&mut self, rhs: &FieldElem) {
        *self = self.mul_ref(rhs);
    }
}

impl std::iter::Sum for FieldElem {
    fn sum<I: Iterator<Item = FieldElem>>(iter: I) -> FieldElem {
        iter.fold(FieldElem::zero(), |a, b| a + b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(m: u32, k: u32) -> FieldElem {
        FieldElem::root_of_unity(m, k)
    }

    #[test]
    fn cyclotomic_polynomials() {
        let as_ints = |m| -> Vec<i64> {
            cyclotomic_polynomial(m)
                .iter()
                .map(|c| c.to_integer().try_into().unwrap())
                .collect()
        };
        assert_eq!(as_ints(1), vec![-1, 1]);
        assert_eq!(as_ints(2), vec![1, 1]);
        assert_eq!(as_ints(3), vec![1, 1, 1]);
        assert_eq!(as_ints(4), vec![1, 0, 1]);
        assert_eq!(as_ints(6), vec![1, -1, 1]);
        assert_eq!(as_ints(12), vec![1, 0, -1, 0, 1]);
        assert_eq!(euler_phi(15), 8);
    }

    #[test]
    fn low_orders_are_rational() {
        assert_eq!(z(2, 1), FieldElem::from_int(-1));
        assert_eq!(z(1, 5), FieldElem::one());
        assert!(z(4, 2).is_rational());
        assert_eq!(z(4, 2), FieldElem::from_int(-1));
    }

    #[test]
    fn roots_of_unity_multiply() {
        for m in [3u32, 5, 8, 12] {
            let mut acc = FieldElem::one();
            for _ in 0..m {
                acc = acc * z(m, 1);
            }
            assert_eq!(acc, FieldElem::one(), "ζ_{m}^{m} = 1");
            // sum of all m-th roots of unity vanishes for m > 1
            let s: FieldElem = (0..m).map(|k| z(m, k)).sum();
            assert!(s.is_zero());
        }
    }

    #[test]
    fn inverses() {
        let a = FieldElem::from_int(2) + z(5, 1) - z(5, 3) * FieldElem::ratio(1, 3);
        let b = a.inv().unwrap();
        assert_eq!(a * b, FieldElem::one());
        assert!(FieldElem::zero().inv().is_none());
    }

    #[test]
    fn display_and_parse() {
        let f = Field::Cyclotomic(5);
        let a = FieldElem::ratio(1, 2) - z(5, 1) + z(5, 3) * FieldElem::from_int(3);
        let s = a.to_string();
        assert_eq!(s, "1/2 - zeta + 3*zeta^3");
        assert_eq!(FieldElem::parse(&s, f).unwrap(), a);
        assert_eq!(
            FieldElem::parse("-3/6", Field::Rational).unwrap(),
            FieldElem::ratio(-1, 2)
        );
        assert!(FieldElem::parse("zeta", Field::Rational).is_err());
        assert!(FieldElem::parse("1/0", Field::Rational).is_err());
    }

    #[test]
    fn field_join() {
        assert_eq!(
            Field::Rational.join(Field::Cyclotomic(3)).unwrap(),
            Field::Cyclotomic(3)
        );
        assert!(Field::Cyclotomic(3).join(Field::Cyclotomic(5)).is_err());
        assert_eq!(Field::parse("cyclo:7").unwrap(), Field::Cyclotomic(7));
    }

    #[test]
    #[should_panic(expected = "mixed cyclotomic orders")]
    fn mixed_orders_panic() {
        let _ = z(3, 1) + z(5, 1);
    }
}
