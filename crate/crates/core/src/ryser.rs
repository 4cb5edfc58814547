//! Exact permanents by Ryser's inclusion–exclusion over column subsets,
//! visited in Gray-code order so each step updates the row sums by one column.
//!
//! `PS(G) = per(I + A(G))`: expanding `per(xI - A)` multilinearly gives
//! `b_k = (-1)^k Σ_{|S|=k} per(A[S])`, and since every `(-1)^k b_k` is
//! non-negative, `Σ |b_k| = Σ_S per(A[S]) = per(I + A)`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::graph::{iter_bits, Graph};
use crate::poly::{PermSum, Polynomial};

/// Default largest matrix dimension for [`IntMatrix::permanent`].
pub const DEFAULT_MAX_DIM: usize = 24;
/// Largest order for the principal-minor coefficient expansion.
pub const COEFF_MAX_ORDER: usize = 16;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    dim: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(dim: usize) -> Self {
        IntMatrix { dim, data: vec![0; dim * dim] }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = IntMatrix::zeros(dim);
        for i in 0..dim {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self> {
        let dim = rows.len();
        if rows.iter().any(|r| r.len() != dim) {
            return Err(Error::invalid("matrix is not square"));
        }
        Ok(IntMatrix { dim, data: rows.concat() })
    }

    pub fn adjacency(g: &Graph) -> Self {
        let mut m = IntMatrix::zeros(g.order());
        for (u, v) in g.edges() {
            m.set(u, v, 1);
            m.set(v, u, 1);
        }
        m
    }

    /// `I + A(G)`.
    pub fn identity_plus_adjacency(g: &Graph) -> Self {
        let mut m = IntMatrix::adjacency(g);
        for i in 0..g.order() {
            m.set(i, i, 1);
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.data[i * self.dim + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: i64) {
        self.data[i * self.dim + j] = value;
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        for j in 0..self.dim {
            self.data.swap(a * self.dim + j, b * self.dim + j);
        }
    }

    pub fn swap_columns(&mut self, a: usize, b: usize) {
        for i in 0..self.dim {
            self.data.swap(i * self.dim + a, i * self.dim + b);
        }
    }

    /// Principal submatrix on the index set `keep` (a bitmask).
    pub fn principal(&self, keep: u64) -> IntMatrix {
        let idx: Vec<usize> = iter_bits(keep).filter(|&i| i < self.dim).collect();
        let mut m = IntMatrix::zeros(idx.len());
        for (a, &i) in idx.iter().enumerate() {
            for (b, &j) in idx.iter().enumerate() {
                m.set(a, b, self.get(i, j));
            }
        }
        m
    }

    pub fn permanent(&self) -> Result<BigInt> {
        self.permanent_with_limit(DEFAULT_MAX_DIM)
    }

    pub fn permanent_with_limit(&self, limit: usize) -> Result<BigInt> {
        if self.dim > limit || self.dim > 63 {
            return Err(Error::EngineLimit { engine: "permanent", order: self.dim, limit: limit.min(63) });
        }
        Ok(ryser(self))
    }
}

/// `per(M) = (-1)^d Σ_{S ⊆ cols} (-1)^{|S|} Π_i Σ_{j∈S} m_ij`.
fn ryser(m: &IntMatrix) -> BigInt {
    let d = m.dim;
    if d == 0 {
        return BigInt::one();
    }
    let mut row_sums = vec![0i64; d];
    let mut total = Accumulator::default();
    let mut subset = 0u64;
    for k in 1u64..(1u64 << d) {
        let j = k.trailing_zeros() as usize;
        let adding = subset & (1 << j) == 0;
        subset ^= 1 << j;
        for (i, s) in row_sums.iter_mut().enumerate() {
            let x = m.get(i, j);
            if adding {
                *s += x;
            } else {
                *s -= x;
            }
        }
        let negative = (d - subset.count_ones() as usize) % 2 == 1;
        total.add_product(&row_sums, negative);
    }
    total.finish()
}

/// Exact sum of signed products, using `i128` until it would overflow.
#[derive(Default)]
struct Accumulator {
    fast: i128,
    slow: BigInt,
}

impl Accumulator {
    fn add_product(&mut self, factors: &[i64], negative: bool) {
        let mut prod: i128 = 1;
        for &f in factors {
            match prod.checked_mul(f as i128) {
                Some(p) => prod = p,
                None => {
                    let big: BigInt = factors.iter().map(|&f| BigInt::from(f)).product();
                    self.slow += if negative { -big } else { big };
                    return;
                }
            }
            if prod == 0 {
                return;
            }
        }
        let term = if negative { -prod } else { prod };
        match self.fast.checked_add(term) {
            Some(s) => self.fast = s,
            None => {
                self.slow += BigInt::from(self.fast) + BigInt::from(term);
                self.fast = 0;
            }
        }
    }

    fn finish(self) -> BigInt {
        self.slow + BigInt::from(self.fast)
    }
}

pub fn permanent(m: &IntMatrix) -> Result<BigInt> {
    m.permanent()
}

/// Coefficients from principal minors: `b_k = (-1)^k Σ_{|S|=k} per(A[S])`.
pub fn coefficients_permanent(g: &Graph) -> Result<Polynomial> {
    let n = g.order();
    if n > COEFF_MAX_ORDER {
        return Err(Error::EngineLimit {
            engine: "permanent-coefficients",
            order: n,
            limit: COEFF_MAX_ORDER,
        });
    }
    let a = IntMatrix::adjacency(g);
    let mut sums = vec![BigInt::zero(); n + 1];
    for s in 0u64..(1u64 << n) {
        let k = s.count_ones() as usize;
        sums[k] += ryser(&a.principal(s));
    }
    let coeffs = sums.into_iter().enumerate().map(|(k, s)| if k % 2 == 0 { s } else { -s }).collect();
    Ok(Polynomial::from_coefficients(coeffs))
}

pub fn ps_permanent(g: &Graph) -> Result<PermSum> {
    let per = IntMatrix::identity_plus_adjacency(g).permanent().map_err(|_| Error::EngineLimit {
        engine: "permanent",
        order: g.order(),
        limit: DEFAULT_MAX_DIM,
    })?;
    Ok(PermSum(per.to_biguint().expect("per(I + A) of a 0/1 matrix is non-negative")))
}
