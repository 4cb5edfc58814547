use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Mul};

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};

/// Coefficients `b_0..b_n` of `per(xI - A(G)) = Σ b_k x^{n-k}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial {
    coeffs: Vec<BigInt>,
}

impl Polynomial {
    pub fn from_coefficients(coeffs: Vec<BigInt>) -> Self {
        Polynomial { coeffs }
    }

    /// Builds `b_k = (-1)^k w_k` from unsigned Sachs weights.
    pub fn from_weights(weights: &[BigUint]) -> Self {
        let coeffs = weights
            .iter()
            .enumerate()
            .map(|(k, w)| {
                let w = BigInt::from(w.clone());
                if k % 2 == 0 {
                    w
                } else {
                    -w
                }
            })
            .collect();
        Polynomial { coeffs }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// `b_k`.
    pub fn coefficient(&self, k: usize) -> Option<&BigInt> {
        self.coeffs.get(k)
    }

    /// `Σ |b_k|`.
    pub fn perm_sum(&self) -> PermSum {
        PermSum(self.coeffs.iter().map(|c| c.abs().to_biguint().expect("abs is non-negative")).sum())
    }

    /// `(-1)^k b_k >= 0` for every k.
    pub fn has_alternating_signs(&self) -> bool {
        self.coeffs.iter().enumerate().all(
            |(k, c)| {
                if k % 2 == 0 {
                    !c.is_negative()
                } else {
                    !c.is_positive()
                }
            },
        )
    }
}

impl fmt::Display for Polynomial {
    /// Comma-separated `b_0,…,b_n`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// A permanental sum.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PermSum(pub BigUint);

impl PermSum {
    pub fn one() -> Self {
        PermSum(BigUint::one())
    }

    pub fn zero() -> Self {
        PermSum(BigUint::zero())
    }

    pub fn value(&self) -> &BigUint {
        &self.0
    }

    pub fn into_inner(self) -> BigUint {
        self.0
    }
}

impl From<u64> for PermSum {
    fn from(v: u64) -> Self {
        PermSum(BigUint::from(v))
    }
}

impl From<BigUint> for PermSum {
    fn from(v: BigUint) -> Self {
        PermSum(v)
    }
}

impl PartialEq<u64> for PermSum {
    fn eq(&self, other: &u64) -> bool {
        self.0 == BigUint::from(*other)
    }
}

impl Add for PermSum {
    type Output = PermSum;
    fn add(self, rhs: PermSum) -> PermSum {
        PermSum(self.0 + rhs.0)
    }
}

impl AddAssign for PermSum {
    fn add_assign(&mut self, rhs: PermSum) {
        self.0 += rhs.0;
    }
}

impl Mul for PermSum {
    type Output = PermSum;
    fn mul(self, rhs: PermSum) -> PermSum {
        PermSum(self.0 * rhs.0)
    }
}

impl Mul<u32> for PermSum {
    type Output = PermSum;
    fn mul(self, rhs: u32) -> PermSum {
        PermSum(self.0 * rhs)
    }
}

impl Sum for PermSum {
    fn sum<I: Iterator<Item = PermSum>>(iter: I) -> PermSum {
        iter.fold(PermSum::zero(), Add::add)
    }
}

impl fmt::Display for PermSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}
