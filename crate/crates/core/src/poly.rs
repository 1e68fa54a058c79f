//! Integer polynomials and exact real-root counting.
//!
//! Root counting reduces to the square-free part (`p / gcd(p, p')`) and then
//! counts sign variations of its Sturm sequence at `-∞` and `+∞`. Every
//! intermediate polynomial lives over the rationals; nothing is rounded.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Polynomial with integer coefficients `c₀ + c₁x + … + c_d x^d`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    /// Trailing zero coefficients are dropped.
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * x + BigRational::from_integer(c.clone()))
    }

    pub fn mul(&self, other: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || other.is_zero() {
            return IntPolynomial::new(Vec::new());
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::new(out)
    }

    /// Square-free part with content removed and a positive leading
    /// coefficient. It has the same distinct roots as `self`, each simple.
    pub fn square_free_part(&self) -> Result<IntPolynomial> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let p = RatPoly::from_int(self);
        let g = p.gcd(&p.derivative());
        Ok(p.div_exact(&g).to_primitive())
    }

    /// Number of distinct real roots.
    pub fn count_real_roots(&self) -> Result<usize> {
        let sf = RatPoly::from_int(&self.square_free_part()?);
        Ok(sturm_count(&sf))
    }

    /// Whether every complex root is real (multiplicities ignored).
    pub fn all_roots_real(&self) -> Result<bool> {
        let sf = self.square_free_part()?;
        let degree = sf.degree().expect("square-free part of a nonzero polynomial");
        Ok(sturm_count(&RatPoly::from_int(&sf)) == degree)
    }
}

/// Highest degree first, e.g. `3x^3+5x^2+3x`; `0` for the zero polynomial.
impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else if first { "" } else { "+" };
            let mag = c.abs();
            let mag_str = if i > 0 && mag.is_one() { String::new() } else { mag.to_string() };
            let var = match i {
                0 => String::new(),
                1 => "x".to_string(),
                _ => format!("x^{i}"),
            };
            write!(f, "{sign}{mag_str}{var}")?;
            first = false;
        }
        Ok(())
    }
}

/// Dense polynomial over Q, lowest degree first, no trailing zeros.
#[derive(Debug, Clone, PartialEq)]
struct RatPoly(Vec<BigRational>);

impl RatPoly {
    fn new(mut c: Vec<BigRational>) -> Self {
        while c.last().is_some_and(Zero::is_zero) {
            c.pop();
        }
        RatPoly(c)
    }

    fn from_int(p: &IntPolynomial) -> Self {
        RatPoly::new(p.coeffs.iter().cloned().map(BigRational::from_integer).collect())
    }

    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    fn lead(&self) -> &BigRational {
        self.0.last().expect("nonzero polynomial")
    }

    fn derivative(&self) -> RatPoly {
        RatPoly::new(
            self.0
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigRational::from_integer(BigInt::from(i)))
                .collect(),
        )
    }

    fn div_rem(&self, d: &RatPoly) -> (RatPoly, RatPoly) {
        assert!(!d.is_zero(), "division by zero polynomial");
        let mut rem = self.0.clone();
        if self.0.len() < d.0.len() {
            return (RatPoly(Vec::new()), self.clone());
        }
        let mut quot = vec![BigRational::zero(); self.0.len() - d.0.len() + 1];
        let dl = d.lead();
        for k in (0..quot.len()).rev() {
            let factor = &rem[k + d.degree()] / dl;
            if factor.is_zero() {
                continue;
            }
            for (i, c) in d.0.iter().enumerate() {
                rem[k + i] -= &factor * c;
            }
            quot[k] = factor;
        }
        rem.truncate(d.degree());
        (RatPoly::new(quot), RatPoly::new(rem))
    }

    fn div_exact(&self, d: &RatPoly) -> RatPoly {
        let (q, r) = self.div_rem(d);
        debug_assert!(r.is_zero());
        q
    }

    fn monic(&self) -> RatPoly {
        let l = self.lead().clone();
        RatPoly(self.0.iter().map(|c| c / &l).collect())
    }

    fn gcd(&self, other: &RatPoly) -> RatPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Scales to coprime integer coefficients with positive leading term.
    fn to_primitive(&self) -> IntPolynomial {
        let denom_lcm = self
            .0
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = self
            .0
            .iter()
            .map(|c| (c * BigRational::from_integer(denom_lcm.clone())).to_integer())
            .collect();
        let content = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        let sign = if ints.last().is_some_and(Signed::is_negative) { -1 } else { 1 };
        let content = content * sign;
        IntPolynomial::new(ints.into_iter().map(|c| c / &content).collect())
    }
}

fn sturm_sequence(p: &RatPoly) -> Vec<RatPoly> {
    let mut seq = vec![p.clone(), p.derivative()];
    loop {
        let n = seq.len();
        if seq[n - 1].is_zero() {
            seq.pop();
            break;
        }
        let r = seq[n - 2].div_rem(&seq[n - 1]).1;
        if r.is_zero() {
            break;
        }
        seq.push(RatPoly::new(r.0.into_iter().map(|c| -c).collect()));
    }
    seq
}

fn sign_variations(signs: impl Iterator<Item = i8>) -> usize {
    let mut last = 0i8;
    let mut count = 0;
    for s in signs.filter(|&s| s != 0) {
        if last != 0 && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

/// Distinct real roots of `p` via `V(-∞) - V(+∞)`.
fn sturm_count(p: &RatPoly) -> usize {
    if p.degree() == 0 {
        return 0;
    }
    let seq = sturm_sequence(p);
    let at_pos = seq.iter().map(|s| if s.lead().is_positive() { 1 } else { -1 });
    let at_neg = seq.iter().map(|s| {
        let lead_pos = s.lead().is_positive();
        let odd = s.degree() % 2 == 1;
        if lead_pos != odd { 1 } else { -1 }
    });
    sign_variations(at_neg) - sign_variations(at_pos)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64(c)
    }

    #[test]
    fn display() {
        assert_eq!(poly(&[0, 3, 5, 3]).to_string(), "3x^3+5x^2+3x");
        assert_eq!(poly(&[1, 1]).to_string(), "x+1");
        assert_eq!(poly(&[-1, 0, 1]).to_string(), "x^2-1");
        assert_eq!(poly(&[0, -1]).to_string(), "-x");
        assert_eq!(poly(&[0, 0, 0]).to_string(), "0");
        assert_eq!(poly(&[0, 0, 0]).degree(), None);
    }

    #[test]
    fn root_count_examples() {
        assert_eq!(poly(&[0, 3, 5, 3]).count_real_roots().unwrap(), 1);
        assert_eq!(poly(&[-1, 0, 1]).count_real_roots().unwrap(), 2);
        assert_eq!(poly(&[1, -2, 1]).count_real_roots().unwrap(), 1);
        assert_eq!(poly(&[1, 0, 1]).count_real_roots().unwrap(), 0);
        assert_eq!(poly(&[7]).count_real_roots().unwrap(), 0);
        assert_eq!(poly(&[]).count_real_roots(), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn all_real_examples() {
        assert!(!poly(&[0, 3, 5, 3]).all_roots_real().unwrap());
        assert!(poly(&[1, 4, 6, 4, 1]).all_roots_real().unwrap());
        assert!(!poly(&[1, 0, 1]).all_roots_real().unwrap());
        assert!(poly(&[5]).all_roots_real().unwrap());
    }

    #[test]
    fn square_free_part_is_primitive() {
        // 2(x-1)^2(x+2) = 2x^3 - 6x + 4
        let sf = poly(&[4, -6, 0, 2]).square_free_part().unwrap();
        assert_eq!(sf, poly(&[-2, 1, 1]));
        let sf = poly(&[-1, 4, -6, 4, -1]).square_free_part().unwrap();
        assert_eq!(sf, poly(&[-1, 1]));
    }
}
