//! Exact integer coefficient families.
//!
//! For an order `m >= 1` three integer polynomials drive the higher-order
//! Wirtinger functionals:
//!
//! - `Q_m(t) = (t - 1)(t - 4)...(t - m^2)`, whose coefficients `c_{m,k}` are
//!   the central factorial numbers of even index,
//! - `P_m(t) = (t - 4)(t - 9)...(t - m^2)` with `P_1 = 1`, coefficients
//!   `lambda_{m,k}`,
//! - `(P_m(t) - P_m(1)) / (t - 1)`, whose coefficients are `S_{m,1..m-1}`; the
//!   constant `S_{m,0}` is `P_m(1)`.
//!
//! Coefficient growth is factorial, so everything here is arbitrary precision.
//! All lists are in ascending degree and out-of-range entries read as zero.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};

/// Dense polynomial with arbitrary-precision integer coefficients, ascending
/// by degree. The zero polynomial has an empty coefficient vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// `t - root`
    pub fn linear_monic(root: BigInt) -> Self {
        Self::new(vec![-root, BigInt::one()])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree of the polynomial; the zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    /// Coefficient of `t^k`, zero when out of range.
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn leading(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    /// Horner evaluation.
    pub fn eval(&self, t: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * t + c)
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|k| self.coeff(k) - other.coeff(k)).collect())
    }

    /// Synthetic division by `t - root`, returning `(quotient, remainder)`.
    pub fn div_linear(&self, root: &BigInt) -> (Self, BigInt) {
        if self.coeffs.is_empty() {
            return (Self::zero(), BigInt::zero());
        }
        let n = self.coeffs.len();
        let mut quotient = vec![BigInt::zero(); n - 1];
        let mut carry = BigInt::zero();
        for k in (0..n).rev() {
            let value = &self.coeffs[k] + &carry * root;
            if k == 0 {
                return (Self::new(quotient), value);
            }
            quotient[k - 1] = value.clone();
            carry = value;
        }
        unreachable!("loop returns at k = 0")
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let mag = c.abs();
            match (k, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "t")?,
                (1, false) => write!(f, "{mag}t")?,
                (_, true) => write!(f, "t^{k}")?,
                (_, false) => write!(f, "{mag}t^{k}")?,
            }
        }
        Ok(())
    }
}

fn check_order(m: usize) -> Result<()> {
    if m == 0 {
        Err(Error::ZeroOrder(m))
    } else {
        Ok(())
    }
}

fn product_of_roots(squares: impl Iterator<Item = usize>) -> IntPolynomial {
    squares.fold(IntPolynomial::one(), |acc, j| {
        acc.mul(&IntPolynomial::linear_monic(BigInt::from(j * j)))
    })
}

/// `Q_m(t) = prod_{j=1}^{m} (t - j^2)`.
pub fn q_polynomial(m: usize) -> Result<IntPolynomial> {
    check_order(m)?;
    Ok(product_of_roots(1..=m))
}

/// `P_m(t) = prod_{j=2}^{m} (t - j^2)`, with `P_1 = 1`.
pub fn p_polynomial(m: usize) -> Result<IntPolynomial> {
    check_order(m)?;
    Ok(product_of_roots(2..=m))
}

/// `(P_m(t) - P_m(1)) / (t - 1)`, of degree `m - 2` (zero for `m = 1`).
pub fn s_polynomial(m: usize) -> Result<IntPolynomial> {
    let p = p_polynomial(m)?;
    let one = BigInt::one();
    let shifted = p.sub(&IntPolynomial::constant(p.eval(&one)));
    let (quotient, remainder) = shifted.div_linear(&one);
    if !remainder.is_zero() {
        return Err(Error::NonzeroRemainder(remainder.to_string()));
    }
    Ok(quotient)
}

/// `c_{m,0..=m}`.
pub fn expand_q(m: usize) -> Result<Vec<BigInt>> {
    Ok(q_polynomial(m)?.into_coeffs())
}

/// `lambda_{m,0..m}`.
pub fn expand_p(m: usize) -> Result<Vec<BigInt>> {
    Ok(p_polynomial(m)?.into_coeffs())
}

/// `S_{m,0..m}`: `S_{m,0} = P_m(1)` followed by the quotient coefficients.
pub fn expand_s(m: usize) -> Result<Vec<BigInt>> {
    let head = p_polynomial(m)?.eval(&BigInt::one());
    let tail = s_polynomial(m)?.into_coeffs();
    let mut s = Vec::with_capacity(m);
    s.push(head);
    s.extend(tail);
    // m = 1: the quotient is the zero polynomial
    s.resize(m, BigInt::zero());
    Ok(s)
}

/// The three coefficient families of one order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoefficientTable {
    pub m: usize,
    /// `c_{m,0..=m}`
    pub c: Vec<BigInt>,
    /// `lambda_{m,0..m}`
    pub lambda: Vec<BigInt>,
    /// `S_{m,0..m}`; `S_{m,m} = 0` is implied.
    pub s: Vec<BigInt>,
}

fn at(list: &[BigInt], k: isize) -> BigInt {
    if k < 0 {
        return BigInt::zero();
    }
    list.get(k as usize).cloned().unwrap_or_default()
}

fn to_f64(list: &[BigInt]) -> Vec<f64> {
    list.iter()
        .map(|v| v.to_f64().unwrap_or(f64::NAN))
        .collect()
}

impl CoefficientTable {
    pub fn new(m: usize) -> Result<Self> {
        Ok(Self {
            m,
            c: expand_q(m)?,
            lambda: expand_p(m)?,
            s: expand_s(m)?,
        })
    }

    pub fn c(&self, k: isize) -> BigInt {
        at(&self.c, k)
    }

    pub fn lambda(&self, k: isize) -> BigInt {
        at(&self.lambda, k)
    }

    pub fn s(&self, k: isize) -> BigInt {
        at(&self.s, k)
    }

    pub fn c_f64(&self) -> Vec<f64> {
        to_f64(&self.c)
    }

    pub fn lambda_f64(&self) -> Vec<f64> {
        to_f64(&self.lambda)
    }

    pub fn s_f64(&self) -> Vec<f64> {
        to_f64(&self.s)
    }

    /// Structural invariants of a single table: monic products, the
    /// telescoping identity `lambda_k = S_k - S_{k+1}` and the closed forms of
    /// `S_{m,0}` and `S_{m,0} - S_{m,1}`.
    pub fn check_invariants(&self) -> bool {
        let m = self.m as isize;
        let monic = self.c(m).is_one() && self.lambda(m - 1).is_one();
        let telescoping = (0..m).all(|k| self.lambda(k) == self.s(k) - self.s(k + 1));
        let s0 = self.s(0);
        monic
            && telescoping
            && s0 == s0_closed_form(self.m)
            && s0 - self.s(1) == lambda0_closed_form(self.m)
    }

    /// Integer-serialisable view for JSON/CSV output.
    pub fn to_record(&self) -> TableRecord {
        let strings = |v: &[BigInt]| v.iter().map(ToString::to_string).collect();
        TableRecord {
            m: self.m,
            c: strings(&self.c),
            lambda: strings(&self.lambda),
            s: strings(&self.s),
        }
    }
}

/// Decimal-string rendering of a [`CoefficientTable`].
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct TableRecord {
    pub m: usize,
    pub c: Vec<String>,
    pub lambda: Vec<String>,
    #[serde(rename = "S")]
    pub s: Vec<String>,
}

fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

fn sign(exponent: usize) -> BigInt {
    if exponent.is_multiple_of(2) {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

/// `(-1)^{m-1} (m-1)! (m+1)! / 2`, which equals `P_m(1)`.
pub fn s0_closed_form(m: usize) -> BigInt {
    sign(m - 1) * factorial(m - 1) * factorial(m + 1) / 2
}

/// `(-1)^{m-1} (m!)^2`, which equals `P_m(0) = S_{m,0} - S_{m,1}`.
pub fn lambda0_closed_form(m: usize) -> BigInt {
    let f = factorial(m);
    sign(m - 1) * &f * &f
}

/// Verifies the three multiplicative recurrences linking order `m` to
/// `m + 1`. The `S` recurrence is checked for `k >= 1` only.
pub fn check_recurrences(table_m: &CoefficientTable, table_m1: &CoefficientTable) -> Result<bool> {
    if table_m1.m != table_m.m + 1 {
        return Err(Error::OrderMismatch {
            expected: table_m.m + 1,
            found: table_m1.m,
        });
    }
    let sq = BigInt::from(table_m1.m * table_m1.m);
    let m1 = table_m1.m as isize;
    let c_ok = (0..=m1).all(|k| table_m1.c(k) == table_m.c(k - 1) - &sq * table_m.c(k));
    let l_ok = (0..m1).all(|k| table_m1.lambda(k) == table_m.lambda(k - 1) - &sq * table_m.lambda(k));
    let s_ok = (1..m1).all(|k| table_m1.s(k) == table_m.s(k - 1) - &sq * table_m.s(k));
    Ok(c_ok && l_ok && s_ok)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    /// Independent oracle: expand prod (t - r_i) with machine integers by
    /// repeated convolution against [-r, 1].
    fn oracle_expand(roots: &[i64]) -> Vec<i64> {
        let mut poly = vec![1i64];
        for &r in roots {
            let mut next = vec![0i64; poly.len() + 1];
            for (i, &a) in poly.iter().enumerate() {
                next[i] -= r * a;
                next[i + 1] += a;
            }
            poly = next;
        }
        poly
    }

    #[test]
    fn q_small_orders() {
        assert_eq!(expand_q(1).unwrap(), ints(&[-1, 1]));
        assert_eq!(expand_q(2).unwrap(), ints(&[4, -5, 1]));
        assert_eq!(expand_q(3).unwrap(), ints(&[-36, 49, -14, 1]));
        assert_eq!(oracle_expand(&[1, 4, 9, 16]), vec![576, -820, 273, -30, 1]);
        assert_eq!(expand_q(4).unwrap(), ints(&[576, -820, 273, -30, 1]));
    }

    #[test]
    fn p_small_orders() {
        assert_eq!(expand_p(1).unwrap(), ints(&[1]));
        assert_eq!(expand_p(2).unwrap(), ints(&[-4, 1]));
        assert_eq!(expand_p(3).unwrap(), ints(&[36, -13, 1]));
        assert_eq!(oracle_expand(&[4, 9, 16]), vec![-576, 244, -29, 1]);
        assert_eq!(expand_p(4).unwrap(), ints(&[-576, 244, -29, 1]));
    }

    #[test]
    fn s_small_orders() {
        assert_eq!(expand_s(1).unwrap(), ints(&[1]));
        assert_eq!(expand_s(2).unwrap(), ints(&[-3, 1]));
        assert_eq!(expand_s(3).unwrap(), ints(&[24, -12, 1]));
        assert_eq!(expand_s(4).unwrap(), ints(&[-360, 216, -28, 1]));
        let s4 = expand_s(4).unwrap();
        assert_eq!(&s4[0] - &s4[1], BigInt::from(-576));
    }

    #[test]
    fn zero_order_rejected() {
        assert_eq!(expand_q(0), Err(Error::ZeroOrder(0)));
        assert_eq!(expand_p(0), Err(Error::ZeroOrder(0)));
        assert_eq!(expand_s(0), Err(Error::ZeroOrder(0)));
        assert!(CoefficientTable::new(0).is_err());
    }

    #[test]
    fn recurrences_small() {
        let t: Vec<_> = (1..=4).map(|m| CoefficientTable::new(m).unwrap()).collect();
        assert!(check_recurrences(&t[0], &t[1]).unwrap());
        assert!(check_recurrences(&t[1], &t[2]).unwrap());
        assert!(check_recurrences(&t[2], &t[3]).unwrap());
        assert_eq!(t[2].c(1), t[1].c(0) - BigInt::from(9) * t[1].c(1));
    }

    #[test]
    fn recurrences_reject_mismatched_orders() {
        let a = CoefficientTable::new(2).unwrap();
        let b = CoefficientTable::new(4).unwrap();
        assert_eq!(
            check_recurrences(&a, &b),
            Err(Error::OrderMismatch { expected: 3, found: 4 })
        );
    }

    #[test]
    fn corrupted_table_fails_recurrence() {
        let a = CoefficientTable::new(3).unwrap();
        let mut b = CoefficientTable::new(4).unwrap();
        b.s[2] += 1;
        assert!(!check_recurrences(&a, &b).unwrap());
    }

    #[test]
    fn identities_up_to_twelve() {
        for m in 1..=12 {
            let table = CoefficientTable::new(m).unwrap();
            assert!(table.check_invariants(), "m = {m}");
            let q = q_polynomial(m).unwrap();
            let p = p_polynomial(m).unwrap();
            let t_minus_one = IntPolynomial::linear_monic(BigInt::one());
            assert_eq!(q, t_minus_one.mul(&p));
            for j in 1..=m {
                let root = BigInt::from(j * j);
                assert!(q.eval(&root).is_zero());
                if j >= 2 {
                    assert!(p.eval(&root).is_zero());
                }
            }
            if m < 12 {
                let next = CoefficientTable::new(m + 1).unwrap();
                assert!(check_recurrences(&table, &next).unwrap());
            }
        }
    }

    #[test]
    fn overflows_machine_integers_eventually() {
        // (16!)^2 does not fit in i64
        let table = CoefficientTable::new(16).unwrap();
        assert!(table.c(0).to_i64().is_none());
        assert!(table.check_invariants());
    }

    #[test]
    fn synthetic_division_remainder() {
        let p = IntPolynomial::new(ints(&[-576, 244, -29, 1]));
        let (q, r) = p.div_linear(&BigInt::from(16));
        assert!(r.is_zero());
        assert_eq!(q.coeffs(), ints(&[36, -13, 1]).as_slice());
        let (_, r) = p.div_linear(&BigInt::one());
        assert_eq!(r, BigInt::from(-360));
    }

    #[test]
    fn display_is_readable() {
        let q = q_polynomial(2).unwrap();
        assert_eq!(q.to_string(), "t^2 - 5t + 4");
        assert_eq!(IntPolynomial::zero().to_string(), "0");
        assert_eq!(IntPolynomial::zero().degree(), 0);
        assert_eq!(q.degree(), 2);
    }

    #[test]
    fn record_serialises_as_strings() {
        let rec = CoefficientTable::new(3).unwrap().to_record();
        let json = serde_json::to_value(&rec).unwrap();
        assert_eq!(json["c"][0], "-36");
        assert_eq!(json["S"][0], "24");
        assert_eq!(json["lambda"][1], "-13");
    }
}
