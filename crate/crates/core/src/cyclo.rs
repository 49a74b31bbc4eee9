//! Exact arithmetic in cyclotomic fields `Q(zeta_r)`.
//!
//! A value is a dense vector of rationals: the coordinates in the power
//! basis `1, zeta, .., zeta^(phi(r)-1)` after reduction modulo the r-th
//! cyclotomic polynomial. Reduction keeps representations canonical, so
//! equality is coefficient equality (after aligning moduli). Character
//! values, structure constants, and inner products all flow through this
//! type; nothing is ever rounded.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Mutex, OnceLock};

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{integer, One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Euler totient by trial-division factorization.
pub fn phi(r: u32) -> u32 {
    let mut n = r;
    let mut result = r;
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            while n % d == 0 {
                n /= d;
            }
            result -= result / d;
        }
        d += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

/// All positive divisors of `r`, ascending.
pub fn divisors(r: u32) -> Vec<u32> {
    let mut out: Vec<u32> = (1..=r).filter(|d| r % d == 0).collect();
    out.sort_unstable();
    out
}

/// Coefficients of the r-th cyclotomic polynomial, constant term first.
///
/// Computed as `(x^r - 1) / prod_(d | r, d < r) Phi_d` by exact division;
/// results are cached per modulus.
pub fn cyclotomic_polynomial(r: u32) -> Vec<BigInt> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Vec<BigInt>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(hit) = cache.lock().unwrap().get(&r) {
        return hit.clone();
    }
    // x^r - 1.
    let mut num = vec![BigInt::zero(); r as usize + 1];
    num[0] = BigInt::from(-1);
    num[r as usize] = BigInt::one();
    for d in divisors(r) {
        if d < r {
            num = divide_exact(&num, &cyclotomic_polynomial(d));
        }
    }
    cache.lock().unwrap().insert(r, num.clone());
    num
}

/// Exact polynomial division with integer coefficients; panics if the
/// divisor is not monic or the division leaves a remainder, which cannot
/// happen for cyclotomic factors.
fn divide_exact(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    assert!(den.last().map(|c| c.is_one()).unwrap_or(false), "divisor must be monic");
    let mut rem = num.to_vec();
    let dn = den.len() - 1;
    let qn = rem.len() - 1 - dn;
    let mut quot = vec![BigInt::zero(); qn + 1];
    for k in (0..=qn).rev() {
        let coeff = rem[k + dn].clone();
        quot[k] = coeff.clone();
        for (i, d) in den.iter().enumerate() {
            rem[k + i] -= &coeff * d;
        }
    }
    assert!(rem.iter().all(|c| c.is_zero()), "division must be exact");
    quot
}

pub fn rational(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// An element of `Q(zeta_r)` in canonical reduced form.
#[derive(Clone)]
pub struct CycloNumber {
    modulus: u32,
    /// Exactly `phi(modulus)` coefficients, constant term first.
    coeffs: Vec<BigRational>,
}

impl CycloNumber {
    pub fn zero(modulus: u32) -> Self {
        assert!(modulus >= 1);
        CycloNumber { modulus, coeffs: vec![BigRational::zero(); phi(modulus) as usize] }
    }

    pub fn one(modulus: u32) -> Self {
        Self::from_rational(modulus, BigRational::one())
    }

    pub fn from_rational(modulus: u32, value: BigRational) -> Self {
        let mut out = Self::zero(modulus);
        // For modulus 1 the minimal polynomial is x - 1, so the basis
        // element itself is 1 and the constant slot still works.
        out.coeffs[0] = value;
        out
    }

    pub fn from_integer(modulus: u32, value: i64) -> Self {
        Self::from_rational(modulus, rational(value))
    }

    /// `zeta_modulus^k`, exponent taken mod `modulus`.
    pub fn root_of_unity(modulus: u32, k: i64) -> Self {
        let k = k.rem_euclid(modulus as i64) as usize;
        let mut raw = vec![BigRational::zero(); k + 1];
        raw[k] = BigRational::one();
        Self::reduce(modulus, raw)
    }

    /// `sum_k weights[k] * zeta^k` for integer weights indexed by exponent.
    pub fn from_zeta_powers(modulus: u32, weights: &[BigRational]) -> Self {
        Self::reduce(modulus, weights.to_vec())
    }

    /// Reduces an arbitrary-degree polynomial in `zeta` to the power basis.
    fn reduce(modulus: u32, mut raw: Vec<BigRational>) -> Self {
        let deg = phi(modulus) as usize;
        let min_poly: Vec<BigRational> = cyclotomic_polynomial(modulus)
            .into_iter()
            .map(BigRational::from_integer)
            .collect();
        while raw.len() > deg {
            let k = raw.len() - 1;
            let lead = raw.pop().unwrap();
            if lead.is_zero() {
                continue;
            }
            // x^k = x^(k-deg) * (x^deg - Phi) since Phi is monic.
            for (i, c) in min_poly.iter().take(deg).enumerate() {
                let slot = k - deg + i;
                let delta = &lead * c;
                raw[slot] -= delta;
            }
        }
        raw.resize(deg, BigRational::zero());
        CycloNumber { modulus, coeffs: raw }
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Embeds into `Q(zeta_m)` for any multiple `m` of the modulus via
    /// `zeta_r -> zeta_m^(m/r)`.
    pub fn promote(&self, m: u32) -> Result<CycloNumber> {
        if m % self.modulus != 0 {
            return Err(Error::ParameterMismatch(format!(
                "cannot embed Q(zeta_{}) in Q(zeta_{})",
                self.modulus, m
            )));
        }
        if m == self.modulus {
            return Ok(self.clone());
        }
        let step = (m / self.modulus) as usize;
        let mut raw = vec![BigRational::zero(); (self.coeffs.len() - 1) * step + 1];
        for (k, c) in self.coeffs.iter().enumerate() {
            raw[k * step] = c.clone();
        }
        Ok(Self::reduce(m, raw))
    }

    fn aligned(&self, other: &CycloNumber) -> (CycloNumber, CycloNumber) {
        let m = integer::lcm(self.modulus, other.modulus);
        (self.promote(m).unwrap(), other.promote(m).unwrap())
    }

    pub fn add(&self, other: &CycloNumber) -> CycloNumber {
        let (mut a, b) = self.aligned(other);
        for (x, y) in a.coeffs.iter_mut().zip(&b.coeffs) {
            *x += y;
        }
        a
    }

    pub fn sub(&self, other: &CycloNumber) -> CycloNumber {
        let (mut a, b) = self.aligned(other);
        for (x, y) in a.coeffs.iter_mut().zip(&b.coeffs) {
            *x -= y;
        }
        a
    }

    pub fn negate(&self) -> CycloNumber {
        let mut out = self.clone();
        for c in &mut out.coeffs {
            *c = -c.clone();
        }
        out
    }

    pub fn mul(&self, other: &CycloNumber) -> CycloNumber {
        let (a, b) = self.aligned(other);
        let mut raw = vec![BigRational::zero(); a.coeffs.len() + b.coeffs.len() - 1];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if !y.is_zero() {
                    raw[i + j] += x * y;
                }
            }
        }
        Self::reduce(a.modulus, raw)
    }

    pub fn scale(&self, factor: &BigRational) -> CycloNumber {
        let mut out = self.clone();
        for c in &mut out.coeffs {
            *c *= factor;
        }
        out
    }

    /// Complex conjugation: `zeta -> zeta^(r-1)`.
    pub fn conjugate(&self) -> CycloNumber {
        let r = self.modulus;
        let mut raw = vec![BigRational::zero(); r as usize];
        for (k, c) in self.coeffs.iter().enumerate() {
            let e = ((r as usize - k) % r as usize) as usize;
            raw[e] += c;
        }
        Self::reduce(r, raw)
    }

    /// Extracts the value as a rational if it lies in the prime field.
    pub fn as_rational(&self) -> Result<BigRational> {
        for (degree, c) in self.coeffs.iter().enumerate().skip(1) {
            if !c.is_zero() {
                return Err(Error::NotRational { degree });
            }
        }
        Ok(self.coeffs[0].clone())
    }

    pub fn as_integer(&self) -> Result<BigInt> {
        let q = self.as_rational()?;
        if !q.denom().is_one() {
            return Err(Error::Consistency(format!("value {q} is not an integer")));
        }
        Ok(q.to_integer())
    }

    pub fn equals(&self, other: &CycloNumber) -> bool {
        let (a, b) = self.aligned(other);
        a.coeffs == b.coeffs
    }

    pub fn to_wire(&self) -> WireCyclo {
        WireCyclo {
            r: self.modulus,
            coeffs: self
                .coeffs
                .iter()
                .map(|c| [c.numer().to_string(), c.denom().to_string()])
                .collect(),
        }
    }

    pub fn from_wire(wire: &WireCyclo) -> Result<CycloNumber> {
        if wire.r == 0 {
            return Err(Error::InvalidParameter("modulus must be positive".into()));
        }
        if wire.coeffs.len() != phi(wire.r) as usize {
            return Err(Error::ParameterMismatch(format!(
                "expected {} coefficients for modulus {}, got {}",
                phi(wire.r),
                wire.r,
                wire.coeffs.len()
            )));
        }
        let mut coeffs = Vec::with_capacity(wire.coeffs.len());
        for [n, d] in &wire.coeffs {
            let numer: BigInt = n
                .parse()
                .map_err(|_| Error::InvalidParameter(format!("bad numerator {n:?}")))?;
            let denom: BigInt = d
                .parse()
                .map_err(|_| Error::InvalidParameter(format!("bad denominator {d:?}")))?;
            if denom.is_zero() {
                return Err(Error::InvalidParameter("zero denominator".into()));
            }
            coeffs.push(BigRational::new(numer, denom));
        }
        Ok(CycloNumber { modulus: wire.r, coeffs })
    }
}

impl PartialEq for CycloNumber {
    fn eq(&self, other: &Self) -> bool {
        self.equals(other)
    }
}

impl Eq for CycloNumber {}

impl fmt::Debug for CycloNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if k == 0 {
                write!(f, "{c}")?;
            } else if c.is_one() {
                write!(f, "z{}^{k}", self.modulus)?;
            } else {
                write!(f, "{c}*z{}^{k}", self.modulus)?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Wire form: modulus plus exact coefficients as decimal strings.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct WireCyclo {
    pub r: u32,
    pub coeffs: Vec<[String; 2]>,
}

/// Renders a value compactly for reports: plain rational when possible,
/// otherwise the basis expansion.
pub fn render(value: &CycloNumber) -> String {
    match value.as_rational() {
        Ok(q) => q.to_string(),
        Err(_) => format!("{value:?}"),
    }
}
