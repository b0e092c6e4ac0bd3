//! Exact rational polynomials and the face-vector transforms built on them:
//! Chebyshev polynomials, the Tchebyshev transform, gamma vectors, and the
//! g-, P-, and F-polynomials of symmetric h-vectors.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{BigInt, BigRational, One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::complex::{ComplexError, FVector, SimplicialComplex};
use crate::vset::VertexSet;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PolyError {
    #[error("h-vector is not symmetric: {0:?}")]
    NotSymmetric(Vec<i64>),
    #[error("h-vector has odd degree {0}")]
    OddDegree(usize),
    #[error("invalid polynomial JSON: {0}")]
    Parse(String),
    #[error(transparent)]
    Complex(#[from] ComplexError),
}

type Result<T> = std::result::Result<T, PolyError>;

pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_int(n: i64) -> BigRational {
    BigRational::from(BigInt::from(n))
}

/// Dense univariate polynomial with exact rational coefficients.
/// Trailing zero coefficients are trimmed; the zero polynomial is empty.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct RatPoly {
    coeffs: Vec<BigRational>,
}

impl RatPoly {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        RatPoly { coeffs }
    }

    pub fn zero() -> Self {
        RatPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        RatPoly::constant(rat_int(1))
    }

    pub fn x() -> Self {
        RatPoly::new(vec![rat_int(0), rat_int(1)])
    }

    pub fn constant(c: BigRational) -> Self {
        RatPoly::new(vec![c])
    }

    pub fn from_ints(cs: &[i64]) -> Self {
        RatPoly::new(cs.iter().map(|&c| rat_int(c)).collect())
    }

    pub fn from_counts(cs: &[u64]) -> Self {
        RatPoly::new(cs.iter().map(|&c| rat_int(c as i64)).collect())
    }

    pub fn monomial(deg: usize, c: BigRational) -> Self {
        let mut coeffs = vec![BigRational::zero(); deg + 1];
        coeffs[deg] = c;
        RatPoly::new(coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> BigRational {
        self.coeffs.get(k).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn scale(&self, c: &BigRational) -> RatPoly {
        RatPoly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Substitute `x -> a*x`.
    pub fn scale_arg(&self, a: &BigRational) -> RatPoly {
        let mut pow = BigRational::one();
        RatPoly::new(
            self.coeffs
                .iter()
                .map(|c| {
                    let out = c * &pow;
                    pow = &pow * a;
                    out
                })
                .collect(),
        )
    }

    /// Substitute the rational function `num/den` for `x`, cleared to a
    /// polynomial by the factor `den^total`; requires `total >= deg`.
    pub fn compose_fraction(&self, num: &RatPoly, den: &RatPoly, total: usize) -> RatPoly {
        assert!(self.degree().is_none_or(|d| d <= total));
        let mut num_pow = RatPoly::one();
        let mut terms: Vec<RatPoly> = Vec::with_capacity(self.coeffs.len());
        for (k, c) in self.coeffs.iter().enumerate() {
            let mut den_pow = RatPoly::one();
            for _ in 0..(total - k) {
                den_pow = &den_pow * den;
            }
            terms.push(&(&num_pow * &den_pow) * &RatPoly::constant(c.clone()));
            num_pow = &num_pow * num;
        }
        terms.into_iter().fold(RatPoly::zero(), |a, b| &a + &b)
    }

    /// Substitute another polynomial for `x`.
    pub fn compose(&self, inner: &RatPoly) -> RatPoly {
        let mut acc = RatPoly::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * inner) + &RatPoly::constant(c.clone());
        }
        acc
    }

    pub fn pow(&self, e: usize) -> RatPoly {
        let mut acc = RatPoly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn is_integer(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    /// Integer coefficient vector, if every coefficient is an integer.
    pub fn to_int_coeffs(&self) -> Option<Vec<i64>> {
        self.coeffs
            .iter()
            .map(|c| {
                if c.is_integer() {
                    i64::try_from(c.to_integer()).ok()
                } else {
                    None
                }
            })
            .collect()
    }

    pub fn to_json_strings(&self) -> Vec<String> {
        self.coeffs
            .iter()
            .map(|c| format!("{}/{}", c.numer(), c.denom()))
            .collect()
    }

    pub fn from_json_strings(strs: &[String]) -> Result<RatPoly> {
        let coeffs = strs
            .iter()
            .map(|s| {
                let (n, d) = s
                    .split_once('/')
                    .ok_or_else(|| PolyError::Parse(format!("bad coefficient {s:?}")))?;
                let n: BigInt = n
                    .parse()
                    .map_err(|_| PolyError::Parse(format!("bad numerator {n:?}")))?;
                let d: BigInt = d
                    .parse()
                    .map_err(|_| PolyError::Parse(format!("bad denominator {d:?}")))?;
                if d.is_zero() {
                    return Err(PolyError::Parse("zero denominator".into()));
                }
                Ok(BigRational::new(n, d))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(RatPoly::new(coeffs))
    }
}

impl Add for &RatPoly {
    type Output = RatPoly;
    fn add(self, rhs: &RatPoly) -> RatPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        RatPoly::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &RatPoly {
    type Output = RatPoly;
    fn sub(self, rhs: &RatPoly) -> RatPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        RatPoly::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Neg for &RatPoly {
    type Output = RatPoly;
    fn neg(self) -> RatPoly {
        RatPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &RatPoly {
    type Output = RatPoly;
    fn mul(self, rhs: &RatPoly) -> RatPoly {
        if self.is_zero() || rhs.is_zero() {
            return RatPoly::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        RatPoly::new(out)
    }
}

impl fmt::Display for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            let a = c.abs();
            match k {
                0 => write!(f, "{a}")?,
                _ => {
                    if !a.is_one() {
                        write!(f, "{a}*")?;
                    }
                    write!(f, "x")?;
                    if k > 1 {
                        write!(f, "^{k}")?;
                    }
                }
            }
            first = false;
        }
        Ok(())
    }
}

impl Serialize for RatPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json_strings().serialize(s)
    }
}

impl<'de> Deserialize<'de> for RatPoly {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let strs = Vec::<String>::deserialize(d)?;
        RatPoly::from_json_strings(&strs).map_err(serde::de::Error::custom)
    }
}

/// Chebyshev polynomial of the first kind, `T_0 = 1`, `T_1 = x`,
/// `T_n = 2x T_{n-1} - T_{n-2}`.
pub fn chebyshev_t(n: usize) -> RatPoly {
    let mut prev = RatPoly::one();
    if n == 0 {
        return prev;
    }
    let mut cur = RatPoly::x();
    let two_x = RatPoly::new(vec![rat_int(0), rat_int(2)]);
    for _ in 1..n {
        let next = &(&two_x * &cur) - &prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// The linear map `x^n -> T_n(x)` applied coefficientwise.
pub fn tcheb_transform(p: &RatPoly) -> RatPoly {
    let mut acc = RatPoly::zero();
    for (k, c) in p.coeffs().iter().enumerate() {
        acc = &acc + &chebyshev_t(k).scale(c);
    }
    acc
}

/// `F_A(x) = Σ_j f_{j-1}(A) ((x-1)/2)^j`.
pub fn f_poly(f: &FVector) -> RatPoly {
    let half_xm1 = RatPoly::new(vec![rat(-1, 2), rat(1, 2)]);
    let mut pow = RatPoly::one();
    let mut acc = RatPoly::zero();
    for &count in &f.0 {
        acc = &acc + &pow.scale(&rat_int(count as i64));
        pow = &pow * &half_xm1;
    }
    acc
}

/// Ordinary f-polynomial `f_A(t) = Σ_j f_{j-1}(A) t^j` (the empty face
/// contributes the constant term 1).
pub fn f_polynomial(f: &FVector) -> RatPoly {
    RatPoly::from_counts(&f.0)
}

/// A symmetric (reciprocal) h-vector of even degree; the carrier for the
/// gamma, g, and P transforms.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SymmetricHVector {
    entries: Vec<i64>,
}

impl SymmetricHVector {
    pub fn new(entries: Vec<i64>) -> Result<Self> {
        let d = entries.len() - 1;
        if !d.is_multiple_of(2) {
            return Err(PolyError::OddDegree(d));
        }
        for k in 0..=d / 2 {
            if entries[k] != entries[d - k] {
                return Err(PolyError::NotSymmetric(entries));
            }
        }
        Ok(SymmetricHVector { entries })
    }

    pub fn from_complex(c: &SimplicialComplex) -> Result<Self> {
        SymmetricHVector::new(c.f_vector().h_vector())
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    /// Degree `d` of the h-polynomial; always even.
    pub fn degree(&self) -> usize {
        self.entries.len() - 1
    }

    /// Coefficients of `h(t)` in the basis `t^i (1+t)^{d-2i}`, solved
    /// top-down from the degree-`d` coefficient.
    pub fn gamma_vector(&self) -> Vec<i64> {
        let d = self.degree();
        let mut rem: Vec<i128> = self.entries.iter().map(|&h| h as i128).collect();
        let mut gamma = Vec::with_capacity(d / 2 + 1);
        for i in 0..=d / 2 {
            let g = rem[d - i];
            gamma.push(g);
            // Subtract g * t^i (1+t)^{d-2i}.
            for j in 0..=(d - 2 * i) {
                rem[i + j] -= g * crate::vset::binom((d - 2 * i) as u64, j as u64) as i128;
            }
        }
        debug_assert!(rem.iter().all(|&r| r == 0), "basis expansion must be exact");
        gamma.into_iter().map(|g| g as i64).collect()
    }

    pub fn gamma_poly(&self) -> RatPoly {
        RatPoly::from_ints(&self.gamma_vector())
    }

    pub fn h_poly(&self) -> RatPoly {
        RatPoly::from_ints(&self.entries)
    }

    /// `g(u) = h_{d/2} + 2 Σ_{j=1}^{d/2} h_{d/2-j} T_j(u/2)`; the result has
    /// integer coefficients.
    pub fn g_poly(&self) -> RatPoly {
        let d = self.degree();
        let m = d / 2;
        let half = rat(1, 2);
        let mut acc = RatPoly::constant(rat_int(self.entries[m]));
        for j in 1..=m {
            let tj = chebyshev_t(j).scale_arg(&half);
            acc = &acc + &tj.scale(&rat_int(2 * self.entries[m - j]));
        }
        debug_assert!(acc.is_integer());
        acc
    }

    /// `P(u) = h_{d/2} + 2 Σ_{j=1}^{d/2} h_{d/2-j} u^j`, the preimage of
    /// `g(2u)` under the Tchebyshev transform.
    pub fn p_poly(&self) -> RatPoly {
        let d = self.degree();
        let m = d / 2;
        let mut coeffs = vec![rat_int(self.entries[m])];
        for j in 1..=m {
            coeffs.push(rat_int(2 * self.entries[m - j]));
        }
        RatPoly::new(coeffs)
    }

    /// Checks `γ(u) = u^{d/2} g(1/u - 2)` and the equivalent form
    /// `(u+2)^{d/2} γ(1/(u+2)) = g(u)`, both as exact polynomial identities.
    pub fn verify_gamcheb_inversion(&self) -> bool {
        let m = self.degree() / 2;
        let gamma = self.gamma_poly();
        let g = self.g_poly();
        // u^m g((1 - 2u)/u): substitute x = (1-2u)/u and clear with u^m.
        let num = RatPoly::new(vec![rat_int(1), rat_int(-2)]);
        let den = RatPoly::x();
        let lhs = g.compose_fraction(&num, &den, m);
        if lhs != gamma {
            return false;
        }
        // (u+2)^m γ(1/(u+2)).
        let num2 = RatPoly::one();
        let den2 = RatPoly::new(vec![rat_int(2), rat_int(1)]);
        let lhs2 = gamma.compose_fraction(&num2, &den2, m);
        lhs2 == g
    }
}

/// Checks `γ(Δ') = γ(Δ) + t γ(lk_Δ(e))` where `Δ'` is the stellar
/// subdivision of `Δ` at the edge `e`.
pub fn gamma_recursion_check(c: &SimplicialComplex, e: VertexSet) -> Result<bool> {
    let sub = c.edge_subdivision(e)?;
    let (lk, _) = c.link(e)?;
    let lhs = SymmetricHVector::from_complex(&sub)?.gamma_poly();
    let g_c = SymmetricHVector::from_complex(c)?.gamma_poly();
    let g_lk = SymmetricHVector::from_complex(&lk)?.gamma_poly();
    let rhs = &g_c + &(&RatPoly::x() * &g_lk);
    Ok(lhs == rhs)
}

/// Entrywise `h_i(lk(e)) <= h_i(c)`, the shorter vector zero-padded.
pub fn link_h_inequality(c: &SimplicialComplex, e: VertexSet) -> Result<bool> {
    let (lk, _) = c.link(e)?;
    let h_lk = lk.f_vector().h_vector();
    let h_c = c.f_vector().h_vector();
    Ok(h_lk
        .iter()
        .enumerate()
        .all(|(i, &h)| h <= h_c.get(i).copied().unwrap_or(0)))
}
