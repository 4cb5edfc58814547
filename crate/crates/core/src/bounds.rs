//! Fibonacci numbers and the closed-form extremal bounds, keyed by claim id.
//!
//! Convention: `F(0) = 0`, `F(1) = F(2) = 1`, so `PS(P_n) = F(n+1)`.

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::family::make_d;
use crate::poly::PermSum;
use crate::recursive::RecursiveEngine;

/// Immutable table `F(0..len)`.
#[derive(Clone, Debug)]
pub struct FibSeq {
    table: Vec<BigUint>,
}

impl FibSeq {
    pub fn new(len: usize) -> Self {
        let mut table = Vec::with_capacity(len.max(2));
        table.push(BigUint::zero());
        table.push(BigUint::one());
        while table.len() < len {
            let next = &table[table.len() - 1] + &table[table.len() - 2];
            table.push(next);
        }
        table.truncate(len);
        FibSeq { table }
    }

    pub fn len(&self) -> usize {
        self.table.len()
    }

    pub fn is_empty(&self) -> bool {
        self.table.is_empty()
    }

    pub fn get(&self, n: usize) -> Option<&BigUint> {
        self.table.get(n)
    }
}

const TABLE_LEN: usize = 256;

fn table() -> &'static FibSeq {
    static TABLE: OnceLock<FibSeq> = OnceLock::new();
    TABLE.get_or_init(|| FibSeq::new(TABLE_LEN))
}

pub fn fib(n: usize) -> BigUint {
    if let Some(v) = table().get(n) {
        return v.clone();
    }
    let (mut a, mut b) =
        (table().get(TABLE_LEN - 2).unwrap().clone(), table().get(TABLE_LEN - 1).unwrap().clone());
    for _ in TABLE_LEN - 1..n {
        let c = &a + &b;
        a = b;
        b = c;
    }
    b
}

/// `F(n - k)`, or an error when the index is negative.
fn f(n: usize, k: usize) -> Result<BigUint> {
    n.checked_sub(k).map(fib).ok_or_else(|| Error::invalid(format!("F(n-{k}) is undefined at n = {n}")))
}

pub fn forest_max(n: usize) -> Result<BigUint> {
    Ok(fib(n + 1))
}

pub fn forest_multi_max(n: usize) -> Result<BigUint> {
    Ok(f(n, 1)? * 2u32)
}

pub fn unicyclic_max(n: usize) -> Result<BigUint> {
    Ok(f(n, 2)? * 6u32 + f(n, 3)? * 2u32)
}

pub fn unicyclic_second(n: usize) -> Result<BigUint> {
    Ok(f(n, 2)? * 6u32 + f(n, 5)? * 4u32)
}

pub fn b1_max(n: usize) -> Result<BigUint> {
    Ok(f(n, 3)? * 8u32 + f(n, 4)? * 12u32)
}

pub fn b2_max(n: usize) -> Result<BigUint> {
    Ok(f(n, 3)? * 20u32)
}

pub fn b2_second(n: usize) -> Result<BigUint> {
    Ok(f(n, 5)? * 36u32 + f(n, 6)? * 24u32)
}

pub fn b3_max(n: usize) -> Result<BigUint> {
    Ok(f(n, 3)? * 14u32 + f(n, 4)? * 6u32)
}

pub fn uni_union_bound(n: usize) -> Result<BigUint> {
    Ok(f(n, 6)? * 54u32 + f(n, 7)? * 18u32)
}

pub fn forest_uni_bound(n: usize) -> Result<BigUint> {
    Ok(f(n, 2)? * 6u32)
}

pub const U4_MAX: u32 = 9;

/// Identifier of a checkable extremal statement.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Claim {
    Lem2_7,
    Lem2_8,
    Lem2_9,
    Lem2_10,
    Thm1_1,
    Lem4_1,
    Thm1_2,
    Thm1_3,
    Thm1_4,
    Lem4_2,
    Lem4_3,
    Lem4_5,
    Lem4_6,
    Lem5_1,
}

/// A closed-form right-hand side.
#[derive(Clone, Copy)]
pub struct BoundFormula {
    pub claim: Claim,
    pub name: &'static str,
    pub expression: &'static str,
    eval: fn(usize) -> Result<BigUint>,
}

impl BoundFormula {
    pub fn eval(&self, n: usize) -> Result<BigUint> {
        (self.eval)(n)
    }
}

impl fmt::Debug for BoundFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = {}", self.name, self.expression)
    }
}

impl Claim {
    pub const ALL: [Claim; 14] = [
        Claim::Lem2_7,
        Claim::Lem2_8,
        Claim::Lem2_9,
        Claim::Lem2_10,
        Claim::Thm1_1,
        Claim::Lem4_1,
        Claim::Thm1_2,
        Claim::Thm1_3,
        Claim::Thm1_4,
        Claim::Lem4_2,
        Claim::Lem4_3,
        Claim::Lem4_5,
        Claim::Lem4_6,
        Claim::Lem5_1,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Claim::Lem2_7 => "lem2.7",
            Claim::Lem2_8 => "lem2.8",
            Claim::Lem2_9 => "lem2.9",
            Claim::Lem2_10 => "lem2.10",
            Claim::Thm1_1 => "thm1.1",
            Claim::Lem4_1 => "lem4.1",
            Claim::Thm1_2 => "thm1.2",
            Claim::Thm1_3 => "thm1.3",
            Claim::Thm1_4 => "thm1.4",
            Claim::Lem4_2 => "lem4.2",
            Claim::Lem4_3 => "lem4.3",
            Claim::Lem4_5 => "lem4.5",
            Claim::Lem4_6 => "lem4.6",
            Claim::Lem5_1 => "lem5.1",
        }
    }

    /// One-line statement of what the claim asserts.
    pub fn statement(self) -> &'static str {
        match self {
            Claim::Lem2_7 => "forests of order n: max PS = F(n+1), only P_n",
            Claim::Lem2_8 => "forests with >= 2 components: max PS = 2F(n-1), only P_2 + P_(n-2)",
            Claim::Lem2_9 => "unicyclic graphs: max PS = 6F(n-2)+2F(n-3), only D(3,n-3)",
            Claim::Lem2_10 => {
                "unicyclic graphs other than D(3,n-3): max PS = 6F(n-2)+4F(n-5), only D'(3,3,n-6)"
            }
            Claim::Thm1_1 => "bicyclic type B1: max PS = 8F(n-3)+12F(n-4), only B1A(3,3,n-5,rim)",
            Claim::Lem4_1 => "bicyclic type B2: max PS = 20F(n-3), only B2(3,3,n-6)",
            Claim::Thm1_2 => {
                "bicyclic type B2 other than B2(3,3,n-6): max PS = 36F(n-5)+24F(n-6), only B2P(n-7)"
            }
            Claim::Thm1_3 => "bicyclic type B3: max PS = 14F(n-3)+6F(n-4), only B3P(n-4)",
            Claim::Thm1_4 => {
                "bicyclic graphs other than B2(3,3,n-6): max PS = 36F(n-5)+24F(n-6), only B2P(n-7)"
            }
            Claim::Lem4_2 => "two unicyclic graphs of orders m, t >= 5: PS product < 54F(n-6)+18F(n-7)",
            Claim::Lem4_3 => "unicyclic graphs of order 4: max PS = 9, only C_4",
            Claim::Lem4_5 => "forest plus unicyclic graph: max PS = 6F(n-2), only P_(n-3) + C_3",
            Claim::Lem4_6 => "54F(n-6)+18F(n-7)+6F(n-4) <= 36F(n-5)+24F(n-6), equality only at n = 9",
            Claim::Lem5_1 => "PS(D(r,n-r)) strictly decreases in r",
        }
    }

    /// Smallest and largest `n` the statement covers.
    pub fn validity(self) -> (usize, Option<usize>) {
        match self {
            Claim::Lem2_7 => (1, None),
            Claim::Lem2_8 => (4, None),
            Claim::Lem2_9 => (5, None),
            Claim::Lem2_10 => (8, None),
            Claim::Thm1_1 => (7, None),
            Claim::Lem4_1 => (8, None),
            Claim::Thm1_2 | Claim::Thm1_4 => (11, None),
            Claim::Thm1_3 => (6, None),
            Claim::Lem4_2 => (10, None),
            Claim::Lem4_3 => (4, Some(4)),
            Claim::Lem4_5 => (7, None),
            Claim::Lem4_6 => (9, None),
            Claim::Lem5_1 => (5, None),
        }
    }

    pub fn is_valid_at(self, n: usize) -> bool {
        let (lo, hi) = self.validity();
        n >= lo && hi.is_none_or(|hi| n <= hi)
    }

    pub fn formula(self) -> Option<BoundFormula> {
        let (name, expression, eval): (_, _, fn(usize) -> Result<BigUint>) = match self {
            Claim::Lem2_7 => ("forest_max", "F(n+1)", forest_max),
            Claim::Lem2_8 => ("forest_multi_max", "2F(n-1)", forest_multi_max),
            Claim::Lem2_9 => ("unicyclic_max", "6F(n-2)+2F(n-3)", unicyclic_max),
            Claim::Lem2_10 => ("unicyclic_second", "6F(n-2)+4F(n-5)", unicyclic_second),
            Claim::Thm1_1 => ("b1_max", "8F(n-3)+12F(n-4)", b1_max),
            Claim::Lem4_1 => ("b2_max", "20F(n-3)", b2_max),
            Claim::Thm1_2 | Claim::Thm1_4 => ("b2_second", "36F(n-5)+24F(n-6)", b2_second),
            Claim::Thm1_3 => ("b3_max", "14F(n-3)+6F(n-4)", b3_max),
            Claim::Lem4_2 => ("uni_union_bound", "54F(n-6)+18F(n-7)", uni_union_bound),
            Claim::Lem4_3 => ("u4_max", "9", |_| Ok(BigUint::from(U4_MAX))),
            Claim::Lem4_5 => ("forest_uni_bound", "6F(n-2)", forest_uni_bound),
            Claim::Lem4_6 | Claim::Lem5_1 => return None,
        };
        Some(BoundFormula { claim: self, name, expression, eval })
    }
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Claim {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.trim().to_ascii_lowercase();
        Claim::ALL.into_iter().find(|c| c.id() == key).ok_or_else(|| Error::UnknownClaim(s.to_string()))
    }
}

/// Evaluates a claim's closed form at `n`.
///
/// Defined wherever every Fibonacci index is non-negative, which is wider
/// than the claim's validity range (see [`Claim::validity`]).
pub fn bound(claim: Claim, n: usize) -> Result<BigUint> {
    match claim.formula() {
        Some(formula) => formula.eval(n),
        None => Err(Error::NoClosedForm { claim: claim.id() }),
    }
}

/// Looks a claim up by id and evaluates it.
pub fn bound_by_id(id: &str, n: usize) -> Result<BigUint> {
    bound(id.parse()?, n)
}

/// `[36F(n-5)+24F(n-6)] - [54F(n-6)+18F(n-7)+6F(n-4)]`.
pub fn lemma46_gap(n: usize) -> Result<BigInt> {
    if n < 9 {
        return Err(Error::invalid(format!("the gap is defined for n >= 9, got {n}")));
    }
    let (rhs, lhs) = lemma46_sides(n)?;
    Ok(BigInt::from(rhs) - BigInt::from(lhs))
}

/// `(36F(n-5)+24F(n-6), 54F(n-6)+18F(n-7)+6F(n-4))`.
pub(crate) fn lemma46_sides(n: usize) -> Result<(BigUint, BigUint)> {
    let rhs = b2_second(n)?;
    let lhs = uni_union_bound(n)? + f(n, 4)? * 6u32;
    Ok((rhs, lhs))
}

/// `PS(D(r, n-r))` for `r = 3..n-1`.
pub fn d_family_monotonicity(n: usize) -> Result<Vec<PermSum>> {
    if n < 5 {
        return Err(Error::invalid(format!("the D(r,n-r) sequence needs n >= 5, got {n}")));
    }
    let engine = RecursiveEngine::new();
    (3..n).map(|r| Ok(engine.ps(&make_d(r, n - r)?))).collect()
}
