//! Exact arithmetic in the cyclotomic field ℚ(ζ_n).
//!
//! A [`Scalar`] is a polynomial in ζ_n with rational coefficients, kept fully
//! reduced modulo the n-th cyclotomic polynomial Φ_n, so equality is plain
//! coefficientwise comparison. The context `n = 1` degenerates to ℚ itself.
//!
//! All operations are exact; the crate never touches floating point.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision rational number, always in lowest terms with a
/// positive denominator.
pub type Rational = num_rational::BigRational;

/// Errors from field operations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ScalarError {
    /// Division by the zero scalar.
    DivisionByZero,
    /// Operands live in different cyclotomic fields.
    FieldMismatch { left: u32, right: u32 },
    /// A scalar string failed to parse.
    Parse(String),
}

impl fmt::Display for ScalarError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ScalarError::DivisionByZero => write!(f, "division by zero"),
            ScalarError::FieldMismatch { left, right } => {
                write!(f, "field mismatch: Q(zeta_{left}) vs Q(zeta_{right})")
            }
            ScalarError::Parse(msg) => write!(f, "invalid scalar: {msg}"),
        }
    }
}

/// An element of ℚ(ζ_n), reduced mod Φ_n.
///
/// `coeffs[k]` is the coefficient of ζ_n^k; the vector always has length
/// φ(n) = deg Φ_n, so two scalars of the same field are equal iff their
/// coefficient vectors are.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Scalar {
    order: u32,
    coeffs: Vec<Rational>,
}

impl Scalar {
    /// Cyclotomic order of the ambient field.
    pub fn order(&self) -> u32 {
        self.order
    }

    /// Coefficients with respect to the power basis 1, ζ, …, ζ^{φ(n)−1}.
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rational::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Rational::is_zero)
    }

    /// The rational part, if the scalar is in fact rational.
    pub fn as_rational(&self) -> Option<&Rational> {
        if self.coeffs[1..].iter().all(Rational::is_zero) {
            Some(&self.coeffs[0])
        } else {
            None
        }
    }
}

/// The coefficient field ℚ(ζ_n), carrying Φ_n for reduction.
///
/// All scalar arithmetic goes through a context; scalars remember only the
/// order `n` so that cross-field mixups are caught cheaply.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldCtx {
    order: u32,
    /// Coefficients of Φ_n, little-endian, monic, length `degree + 1`.
    min_poly: Vec<Rational>,
}

impl FieldCtx {
    /// Context for ℚ(ζ_n). `n = 1` gives plain rationals.
    pub fn new(order: u32) -> FieldCtx {
        assert!(order >= 1, "cyclotomic order must be positive");
        FieldCtx {
            order,
            min_poly: cyclotomic_polynomial(order),
        }
    }

    /// ℚ itself (order 1).
    pub fn rationals() -> FieldCtx {
        FieldCtx::new(1)
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    /// Degree of the extension, φ(n).
    pub fn degree(&self) -> usize {
        self.min_poly.len() - 1
    }

    /// Coefficients of Φ_n, little-endian.
    pub fn min_poly(&self) -> &[Rational] {
        &self.min_poly
    }

    pub fn zero(&self) -> Scalar {
        Scalar {
            order: self.order,
            coeffs: vec![Rational::zero(); self.degree()],
        }
    }

    pub fn one(&self) -> Scalar {
        self.from_int(1)
    }

    pub fn from_int(&self, n: i64) -> Scalar {
        self.from_rational(Rational::from_integer(BigInt::from(n)))
    }

    pub fn from_rational(&self, q: Rational) -> Scalar {
        let mut s = self.zero();
        s.coeffs[0] = q;
        s
    }

    pub fn rational(&self, numer: i64, denom: i64) -> Scalar {
        assert!(denom != 0, "zero denominator");
        self.from_rational(Rational::new(BigInt::from(numer), BigInt::from(denom)))
    }

    /// ζ_n^k, for any integer k (reduced mod n).
    pub fn zeta_pow(&self, k: i64) -> Scalar {
        let n = i64::from(self.order);
        let k = k.rem_euclid(n) as usize;
        let mut poly = vec![Rational::zero(); k + 1];
        poly[k] = Rational::one();
        self.reduce(poly)
    }

    /// ζ_n itself.
    pub fn zeta(&self) -> Scalar {
        self.zeta_pow(1)
    }

    fn check(&self, s: &Scalar) {
        assert_eq!(
            s.order, self.order,
            "scalar from Q(zeta_{}) used in Q(zeta_{})",
            s.order, self.order
        );
    }

    fn reduce(&self, poly: Vec<Rational>) -> Scalar {
        let rem = poly_rem(poly, &self.min_poly);
        let mut coeffs = rem;
        coeffs.resize(self.degree(), Rational::zero());
        Scalar {
            order: self.order,
            coeffs,
        }
    }

    pub fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.check(a);
        self.check(b);
        let coeffs = a
            .coeffs
            .iter()
            .zip(&b.coeffs)
            .map(|(x, y)| x + y)
            .collect();
        Scalar {
            order: self.order,
            coeffs,
        }
    }

    pub fn sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.add(a, &self.neg(b))
    }

    pub fn neg(&self, a: &Scalar) -> Scalar {
        self.check(a);
        Scalar {
            order: self.order,
            coeffs: a.coeffs.iter().map(|x| -x).collect(),
        }
    }

    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.check(a);
        self.check(b);
        if a.is_zero() || b.is_zero() {
            return self.zero();
        }
        // Fast path: multiplying by a rational needs no reduction.
        if let Some(q) = a.as_rational() {
            return self.scale(b, q);
        }
        if let Some(q) = b.as_rational() {
            return self.scale(a, q);
        }
        let mut prod = vec![Rational::zero(); a.coeffs.len() + b.coeffs.len() - 1];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                prod[i + j] += x * y;
            }
        }
        self.reduce(prod)
    }

    fn scale(&self, a: &Scalar, q: &Rational) -> Scalar {
        Scalar {
            order: self.order,
            coeffs: a.coeffs.iter().map(|x| x * q).collect(),
        }
    }

    /// Multiplicative inverse via the extended Euclidean algorithm in ℚ[z]
    /// against Φ_n.
    pub fn inv(&self, a: &Scalar) -> Result<Scalar, ScalarError> {
        self.check(a);
        if a.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        if let Some(q) = a.as_rational() {
            return Ok(self.from_rational(q.recip()));
        }
        // Bezout: u·a + v·Φ = gcd = 1 (Φ_n is irreducible and a ≠ 0).
        let (gcd, u) = poly_ext_gcd(&a.coeffs, &self.min_poly);
        debug_assert_eq!(gcd.len(), 1, "cyclotomic polynomial must be irreducible");
        let g0 = gcd[0].clone();
        let inv_g = g0.recip();
        let scaled: Vec<Rational> = u.iter().map(|c| c * &inv_g).collect();
        Ok(self.reduce(scaled))
    }

    pub fn div(&self, a: &Scalar, b: &Scalar) -> Result<Scalar, ScalarError> {
        let binv = self.inv(b)?;
        Ok(self.mul(a, &binv))
    }

    /// Checked addition surfacing `FieldMismatch` instead of panicking;
    /// the unchecked ops are for inner loops where operands were validated
    /// at a module boundary.
    pub fn try_add(&self, a: &Scalar, b: &Scalar) -> Result<Scalar, ScalarError> {
        self.ensure_member(a)?;
        self.ensure_member(b)?;
        Ok(self.add(a, b))
    }

    pub fn try_mul(&self, a: &Scalar, b: &Scalar) -> Result<Scalar, ScalarError> {
        self.ensure_member(a)?;
        self.ensure_member(b)?;
        Ok(self.mul(a, b))
    }

    pub fn ensure_member(&self, s: &Scalar) -> Result<(), ScalarError> {
        if s.order != self.order {
            Err(ScalarError::FieldMismatch {
                left: s.order,
                right: self.order,
            })
        } else {
            Ok(())
        }
    }

    /// Evaluate Φ_n at a scalar (used by the Φ_n(ζ_n) = 0 sanity test).
    pub fn eval_min_poly(&self, at: &Scalar) -> Scalar {
        let mut acc = self.zero();
        for c in self.min_poly.iter().rev() {
            acc = self.mul(&acc, at);
            acc = self.add(&acc, &self.from_rational(c.clone()));
        }
        acc
    }

    /// Parse the scalar grammar used by the file format: a sum of terms
    /// `coef`, `coef*z^k`, `z^k`, `z`, with rational coefficients `p` or
    /// `p/q`. `z` denotes ζ_n of this context. Example: `1/2*z^2 - 3`.
    pub fn parse_scalar(&self, input: &str) -> Result<Scalar, ScalarError> {
        let text = input.trim();
        if text.is_empty() {
            return Err(ScalarError::Parse("empty scalar".into()));
        }
        let mut acc = self.zero();
        let mut rest = text;
        let mut first = true;
        while !rest.is_empty() {
            let (sign, after_sign) = match rest.as_bytes()[0] {
                b'+' if !first => (1, rest[1..].trim_start()),
                b'-' => (-1, rest[1..].trim_start()),
                b'+' => {
                    return Err(ScalarError::Parse(format!(
                        "leading '+' not allowed in {input:?}"
                    )))
                }
                _ if first => (1, rest),
                _ => {
                    return Err(ScalarError::Parse(format!(
                        "expected '+' or '-' at {rest:?}"
                    )))
                }
            };
            first = false;
            let term_end = after_sign
                .char_indices()
                .find(|(_, c)| *c == '+' || *c == '-')
                .map(|(i, _)| i)
                .unwrap_or(after_sign.len());
            let term_text = after_sign[..term_end].trim();
            if term_text.is_empty() {
                return Err(ScalarError::Parse(format!("dangling sign in {input:?}")));
            }
            let term = self.parse_term(term_text)?;
            let term = if sign < 0 { self.neg(&term) } else { term };
            acc = self.add(&acc, &term);
            rest = after_sign[term_end..].trim_start();
        }
        Ok(acc)
    }

    fn parse_term(&self, term: &str) -> Result<Scalar, ScalarError> {
        let (coef_text, z_text) = match term.find('*') {
            Some(pos) => (Some(term[..pos].trim()), Some(term[pos + 1..].trim())),
            None if term.starts_with('z') => (None, Some(term)),
            None => (Some(term), None),
        };
        let coef = match coef_text {
            Some(t) => parse_rational(t)?,
            None => Rational::one(),
        };
        let power = match z_text {
            None => 0,
            Some("z") => 1,
            Some(t) => {
                let Some(exp_text) = t.strip_prefix("z^") else {
                    return Err(ScalarError::Parse(format!("bad power term {t:?}")));
                };
                exp_text
                    .parse::<i64>()
                    .map_err(|_| ScalarError::Parse(format!("bad exponent {exp_text:?}")))?
            }
        };
        let zp = self.zeta_pow(power);
        Ok(self.mul(&self.from_rational(coef), &zp))
    }
}

fn parse_rational(text: &str) -> Result<Rational, ScalarError> {
    let bad = || ScalarError::Parse(format!("bad rational {text:?}"));
    match text.find('/') {
        Some(pos) => {
            let num: BigInt = text[..pos].trim().parse().map_err(|_| bad())?;
            let den: BigInt = text[pos + 1..].trim().parse().map_err(|_| bad())?;
            if den.is_zero() || den.is_negative() {
                return Err(bad());
            }
            Ok(Rational::new(num, den))
        }
        None => {
            let num: BigInt = text.trim().parse().map_err(|_| bad())?;
            Ok(Rational::from_integer(num))
        }
    }
}

/// Canonical rendering: terms by descending power, ` + ` / ` - ` separators,
/// unit coefficients elided, so `parse ∘ display` is the identity.
impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let negative = c.is_negative();
            if first {
                if negative {
                    write!(f, "-")?;
                }
                first = false;
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag = c.abs();
            let unit_coef = mag.is_one() && k > 0;
            if !unit_coef {
                if mag.denom().is_one() {
                    write!(f, "{}", mag.numer())?;
                } else {
                    write!(f, "{}/{}", mag.numer(), mag.denom())?;
                }
                if k > 0 {
                    write!(f, "*")?;
                }
            }
            if k == 1 {
                write!(f, "z")?;
            } else if k > 1 {
                write!(f, "z^{k}")?;
            }
        }
        Ok(())
    }
}

// --- polynomial helpers (little-endian coefficient vectors over ℚ) ---

fn poly_trim(mut p: Vec<Rational>) -> Vec<Rational> {
    while p.len() > 1 && p.last().map_or(false, Rational::is_zero) {
        p.pop();
    }
    p
}

fn poly_is_zero(p: &[Rational]) -> bool {
    p.iter().all(Rational::is_zero)
}

/// Remainder of `num` modulo the monic-up-to-scalar polynomial `den`.
fn poly_rem(num: Vec<Rational>, den: &[Rational]) -> Vec<Rational> {
    let den = poly_trim(den.to_vec());
    let lead = den.last().expect("nonzero divisor").clone();
    let mut rem = poly_trim(num);
    while !poly_is_zero(&rem) && rem.len() >= den.len() {
        let shift = rem.len() - den.len();
        let factor = rem.last().unwrap() / &lead;
        for (i, d) in den.iter().enumerate() {
            let adj = &factor * d;
            rem[shift + i] -= adj;
        }
        rem = poly_trim(rem);
        if rem.len() == 1 && rem[0].is_zero() {
            break;
        }
    }
    rem
}

/// Exact quotient `num / den`; panics if the division is not exact
/// (only used for cyclotomic polynomials, where it always is).
fn poly_div_exact(num: &[Rational], den: &[Rational]) -> Vec<Rational> {
    let den = poly_trim(den.to_vec());
    let lead = den.last().expect("nonzero divisor").clone();
    let mut rem = poly_trim(num.to_vec());
    let mut quot = vec![Rational::zero(); rem.len().saturating_sub(den.len()) + 1];
    while !poly_is_zero(&rem) && rem.len() >= den.len() {
        let shift = rem.len() - den.len();
        let factor = rem.last().unwrap() / &lead;
        quot[shift] = factor.clone();
        for (i, d) in den.iter().enumerate() {
            let adj = &factor * d;
            rem[shift + i] -= adj;
        }
        rem = poly_trim(rem);
    }
    assert!(poly_is_zero(&rem), "polynomial division was not exact");
    poly_trim(quot)
}

/// Extended gcd in ℚ[z]: returns `(g, u)` with `u·a ≡ g (mod b)` and
/// `g = gcd(a, b)` up to a unit.
fn poly_ext_gcd(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let mut r0 = poly_trim(a.to_vec());
    let mut r1 = poly_trim(b.to_vec());
    let mut u0 = vec![Rational::one()];
    let mut u1 = vec![Rational::zero()];
    while !poly_is_zero(&r1) {
        let (q, r) = poly_div_rem(&r0, &r1);
        let u_next = poly_sub(&u0, &poly_mul(&q, &u1));
        r0 = r1;
        r1 = r;
        u0 = u1;
        u1 = u_next;
    }
    (r0, u0)
}

fn poly_div_rem(num: &[Rational], den: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let den = poly_trim(den.to_vec());
    let lead = den.last().expect("nonzero divisor").clone();
    let mut rem = poly_trim(num.to_vec());
    if rem.len() < den.len() {
        return (vec![Rational::zero()], rem);
    }
    let mut quot = vec![Rational::zero(); rem.len() - den.len() + 1];
    while !poly_is_zero(&rem) && rem.len() >= den.len() {
        let shift = rem.len() - den.len();
        let factor = rem.last().unwrap() / &lead;
        quot[shift] = factor.clone();
        for (i, d) in den.iter().enumerate() {
            let adj = &factor * d;
            rem[shift + i] -= adj;
        }
        rem = poly_trim(rem);
    }
    (poly_trim(quot), rem)
}

fn poly_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    if poly_is_zero(a) || poly_is_zero(b) {
        return vec![Rational::zero()];
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn poly_sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let n = a.len().max(b.len());
    let mut out = vec![Rational::zero(); n];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] -= y;
    }
    poly_trim(out)
}

/// Euler's totient by trial division; orders here are tiny.
pub fn euler_phi(n: u32) -> u32 {
    let mut n = n;
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

/// Φ_n, computed by dividing x^n − 1 by all Φ_d with d | n, d < n.
fn cyclotomic_polynomial(n: u32) -> Vec<Rational> {
    let mut cache: Vec<Option<Vec<Rational>>> = vec![None; (n + 1) as usize];
    cyclotomic_rec(n, &mut cache)
}

fn cyclotomic_rec(n: u32, cache: &mut Vec<Option<Vec<Rational>>>) -> Vec<Rational> {
    if let Some(p) = &cache[n as usize] {
        return p.clone();
    }
    // x^n - 1
    let mut num = vec![Rational::zero(); (n + 1) as usize];
    num[0] = -Rational::one();
    num[n as usize] = Rational::one();
    let mut poly = num;
    for d in 1..n {
        if n % d == 0 {
            let phi_d = cyclotomic_rec(d, cache);
            poly = poly_div_exact(&poly, &phi_d);
        }
    }
    cache[n as usize] = Some(poly.clone());
    poly
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn rational_field_basics() {
        let ctx = FieldCtx::rationals();
        assert_eq!(ctx.degree(), 1);
        let half = ctx.rational(1, 2);
        let third = ctx.rational(1, 3);
        assert_eq!(ctx.add(&half, &third), ctx.rational(5, 6));
        assert_eq!(ctx.mul(&half, &third), ctx.rational(1, 6));
        assert_eq!(ctx.div(&half, &third).unwrap(), ctx.rational(3, 2));
    }

    #[test]
    fn zeta4_squares_to_minus_one() {
        let ctx = FieldCtx::new(4);
        assert_eq!(ctx.degree(), 2);
        let z = ctx.zeta();
        assert_eq!(ctx.mul(&z, &z), ctx.from_int(-1));
        assert_eq!(ctx.zeta_pow(0), ctx.one());
        assert_eq!(ctx.zeta_pow(2), ctx.from_int(-1));
    }

    #[test]
    fn zeta3_cubes_to_one() {
        let ctx = FieldCtx::new(3);
        assert_eq!(ctx.zeta_pow(3), ctx.one());
        // Phi_3 = z^2 + z + 1 must kill zeta_3.
        assert!(ctx.eval_min_poly(&ctx.zeta()).is_zero());
    }

    #[test]
    fn inverse_of_one_plus_zeta3() {
        // Independent oracle: run the extended Euclid by hand against
        // Phi_3 = z^2 + z + 1. gcd(1+z, z^2+z+1): z^2+z+1 = z·(1+z) + 1,
        // so 1 = (z^2+z+1) - z·(1+z) and (1+z)^{-1} = -z.
        let ctx = FieldCtx::new(3);
        let a = ctx.add(&ctx.one(), &ctx.zeta());
        let inv = ctx.inv(&a).unwrap();
        assert_eq!(inv, ctx.neg(&ctx.zeta()));
        // (1+z)(-z) = -z - z^2 = 1 mod Phi_3.
        assert!(ctx.mul(&a, &inv).is_one());
    }

    #[test]
    fn zero_has_no_inverse() {
        let ctx = FieldCtx::new(4);
        assert_eq!(ctx.inv(&ctx.zero()), Err(ScalarError::DivisionByZero));
    }

    #[test]
    fn field_mismatch_is_reported() {
        let q = FieldCtx::rationals();
        let q4 = FieldCtx::new(4);
        let err = q.try_add(&q.one(), &q4.one()).unwrap_err();
        assert_eq!(err, ScalarError::FieldMismatch { left: 4, right: 1 });
    }

    #[test]
    fn phi_values() {
        for (n, phi) in [(1, 1), (2, 1), (3, 2), (4, 2), (6, 2), (8, 4), (12, 4)] {
            assert_eq!(euler_phi(n), phi);
            assert_eq!(FieldCtx::new(n).degree() as u32, phi);
        }
    }

    #[test]
    fn display_and_parse_round_trip() {
        let ctx = FieldCtx::new(4);
        let s = ctx.parse_scalar("1/2*z - 3").unwrap();
        assert_eq!(s.to_string(), "1/2*z - 3");
        assert_eq!(ctx.parse_scalar(&s.to_string()).unwrap(), s);

        let cases = ["0", "1", "-1", "z", "-z", "2*z + 1/3", "-5/7*z - 2"];
        for c in cases {
            let v = ctx.parse_scalar(c).unwrap();
            assert_eq!(v.to_string(), c, "canonical form of {c}");
        }
    }

    #[test]
    fn parse_reduces_high_powers() {
        let ctx = FieldCtx::new(4);
        // z^2 = -1 in Q(zeta_4), so "1/2*z^2 - 3" is the rational -7/2.
        let s = ctx.parse_scalar("1/2*z^2 - 3").unwrap();
        assert_eq!(s, ctx.rational(-7, 2));
        assert_eq!(ctx.parse_scalar("z^5").unwrap(), ctx.zeta());
    }

    #[test]
    fn parse_rejects_garbage() {
        let ctx = FieldCtx::rationals();
        for bad in ["", "+1", "1 +", "q", "1/0", "z^x", "1//2"] {
            assert!(ctx.parse_scalar(bad).is_err(), "{bad:?} should not parse");
        }
    }
}
