//! Named graph families and the `NAME(INT, ...)` spec language.
//!
//! Vertex numbering is fixed per constructor so tests can refer to vertices:
//!
//! | family       | numbering |
//! |--------------|-----------|
//! | `P(n)`       | path `0-1-…-(n-1)` |
//! | `C(n)`       | cycle `0-1-…-(n-1)-0` |
//! | `D(r,s)`     | cycle `0..r`, pendant path `r..r+s` with `r` joined to `0` |
//! | `DP(n,r)`    | path `v_1..v_{n-3}` = `0..n-3`; triangle `n-3,n-2,n-1`; edge `(r-1, n-3)` |
//! | `B1(p,q)`    | hub `0`; cycles `0,1..p-1` and `0,p..p+q-2` |
//! | `B2(p,q,r)`  | cycles `0..p` and `p..p+q`; connecting path `0, p+q.., p` |
//! | `B3(p,q,r)`  | branch vertices `0`, `1`; the three paths' internal vertices follow in order |
//! | `B1A(p,q,r,at)` | `B1(p,q)` then pendant path, joined to `0` (`hub`) or `1` (`rim`) |
//! | `B2P(k)`     | `B2(3,3,1)` (centre `6`) then pendant path joined to `6` |
//! | `B3P(k)`, `B3H(k)` | `B3(1,1,0)` then pendant path joined to `2` resp. `0` |

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub fn make_path(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::invalid("P(n) needs n >= 1; use Graph::empty() for the empty graph"));
    }
    let mut g = Graph::new(n)?;
    for v in 1..n {
        g.add_edge(v - 1, v)?;
    }
    Ok(g)
}

pub fn make_cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::invalid(format!("C(n) needs n >= 3, got {n}")));
    }
    let mut g = make_path(n)?;
    g.add_edge(n - 1, 0)?;
    Ok(g)
}

/// Appends a path of `len` new vertices, its first vertex joined to `at`.
fn attach_pendant_path(g: &Graph, at: usize, len: usize) -> Result<Graph> {
    if len == 0 {
        return Ok(g.clone());
    }
    g.bridge(at, &make_path(len)?, 0)
}

pub fn make_d(r: usize, s: usize) -> Result<Graph> {
    if r < 3 {
        return Err(Error::invalid(format!("D(r,s) needs r >= 3, got {r}")));
    }
    attach_pendant_path(&make_cycle(r)?, 0, s)
}

/// `D'(3, r, n-r-3)`: a path on `n-3` vertices with a triangle hanging by one
/// edge from its `r`-th vertex.
pub fn make_dprime(n: usize, r: usize) -> Result<Graph> {
    if n < 5 {
        return Err(Error::invalid(format!("DP(n,r) needs n >= 5, got {n}")));
    }
    if r == 0 || r > n - 3 {
        return Err(Error::invalid(format!("DP(n,r) needs 1 <= r <= {}, got {r}", n - 3)));
    }
    let path = make_path(n - 3)?;
    let mut g = path.disjoint_union(&make_cycle(3)?)?;
    g.add_edge(r - 1, n - 3)?;
    Ok(g)
}

pub fn make_b1(p: usize, q: usize) -> Result<Graph> {
    if p < 3 || q < 3 {
        return Err(Error::invalid(format!("B1(p,q) needs p,q >= 3, got ({p},{q})")));
    }
    make_cycle(p)?.identify(0, &make_cycle(q)?, 0)
}

pub fn make_b2(p: usize, q: usize, r: usize) -> Result<Graph> {
    if p < 3 || q < 3 {
        return Err(Error::invalid(format!("B2(p,q,r) needs p,q >= 3, got ({p},{q})")));
    }
    let mut g = make_cycle(p)?.disjoint_union(&make_cycle(q)?)?;
    let mut prev = 0;
    for _ in 0..r {
        let w = g.add_vertex()?;
        g.add_edge(prev, w)?;
        prev = w;
    }
    g.add_edge(prev, p)?;
    Ok(g)
}

/// Theta graph: branch vertices `0` and `1` joined by paths with `p`, `q`, `r`
/// internal vertices.
pub fn make_b3(p: usize, q: usize, r: usize) -> Result<Graph> {
    if [p, q, r].iter().filter(|&&x| x == 0).count() > 1 {
        return Err(Error::invalid(format!(
            "B3(p,q,r) allows at most one zero parameter, got ({p},{q},{r})"
        )));
    }
    let mut g = Graph::new(2)?;
    for len in [p, q, r] {
        let mut prev = 0;
        for _ in 0..len {
            let w = g.add_vertex()?;
            g.add_edge(prev, w)?;
            prev = w;
        }
        g.add_edge(prev, 1)?;
    }
    Ok(g)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Attach {
    /// The degree-4 vertex.
    Hub,
    /// A degree-2 neighbour of the hub on the first cycle.
    Rim,
}

pub fn make_b1a(p: usize, q: usize, r: usize, at: Attach) -> Result<Graph> {
    if r == 0 {
        return Err(Error::invalid("B1A needs a pendant path of r >= 1 vertices"));
    }
    let base = make_b1(p, q)?;
    let v = match at {
        Attach::Hub => 0,
        Attach::Rim => 1,
    };
    attach_pendant_path(&base, v, r)
}

pub fn make_b2p(k: usize) -> Result<Graph> {
    if k == 0 {
        return Err(Error::invalid("B2P(k) needs k >= 1"));
    }
    attach_pendant_path(&make_b2(3, 3, 1)?, 6, k)
}

pub fn make_b3p(k: usize) -> Result<Graph> {
    if k == 0 {
        return Err(Error::invalid("B3P(k) needs k >= 1"));
    }
    attach_pendant_path(&make_b3(1, 1, 0)?, 2, k)
}

pub fn make_b3h(k: usize) -> Result<Graph> {
    if k == 0 {
        return Err(Error::invalid("B3H(k) needs k >= 1"));
    }
    attach_pendant_path(&make_b3(1, 1, 0)?, 0, k)
}

/// A parsed family instance.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    P(usize),
    C(usize),
    D(usize, usize),
    DP(usize, usize),
    B1(usize, usize),
    B2(usize, usize, usize),
    B3(usize, usize, usize),
    B1A(usize, usize, usize, Attach),
    B2P(usize),
    B3P(usize),
    B3H(usize),
}

impl FamilySpec {
    pub fn build(&self) -> Result<Graph> {
        match *self {
            FamilySpec::P(n) => make_path(n),
            FamilySpec::C(n) => make_cycle(n),
            FamilySpec::D(r, s) => make_d(r, s),
            FamilySpec::DP(n, r) => make_dprime(n, r),
            FamilySpec::B1(p, q) => make_b1(p, q),
            FamilySpec::B2(p, q, r) => make_b2(p, q, r),
            FamilySpec::B3(p, q, r) => make_b3(p, q, r),
            FamilySpec::B1A(p, q, r, at) => make_b1a(p, q, r, at),
            FamilySpec::B2P(k) => make_b2p(k),
            FamilySpec::B3P(k) => make_b3p(k),
            FamilySpec::B3H(k) => make_b3h(k),
        }
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let fail = |reason: &str| Error::FamilySpec { spec: text.to_string(), reason: reason.to_string() };
        let s = text.trim();
        let open = s.find('(').ok_or_else(|| fail("expected NAME(args)"))?;
        if !s.ends_with(')') {
            return Err(fail("missing closing parenthesis"));
        }
        let name = s[..open].trim();
        let tokens: Vec<&str> = s[open + 1..s.len() - 1].split(',').map(str::trim).collect();
        let int = |i: usize| -> Result<usize> {
            tokens[i]
                .parse::<usize>()
                .map_err(|_| fail(&format!("argument {} is not a non-negative integer", i + 1)))
        };
        let arity = |k: usize| -> Result<()> {
            if tokens.len() == k {
                Ok(())
            } else {
                Err(fail(&format!("{name} takes {k} arguments, got {}", tokens.len())))
            }
        };
        let spec = match name {
            "P" => {
                arity(1)?;
                FamilySpec::P(int(0)?)
            }
            "C" => {
                arity(1)?;
                FamilySpec::C(int(0)?)
            }
            "D" => {
                arity(2)?;
                FamilySpec::D(int(0)?, int(1)?)
            }
            "DP" => {
                arity(2)?;
                FamilySpec::DP(int(0)?, int(1)?)
            }
            "B1" => {
                arity(2)?;
                FamilySpec::B1(int(0)?, int(1)?)
            }
            "B2" => {
                arity(3)?;
                FamilySpec::B2(int(0)?, int(1)?, int(2)?)
            }
            "B3" => {
                arity(3)?;
                FamilySpec::B3(int(0)?, int(1)?, int(2)?)
            }
            "B1A" => {
                arity(4)?;
                let at = match tokens[3] {
                    "hub" => Attach::Hub,
                    "rim" => Attach::Rim,
                    _ => return Err(fail("fourth B1A argument must be hub or rim")),
                };
                FamilySpec::B1A(int(0)?, int(1)?, int(2)?, at)
            }
            "B2P" => {
                arity(1)?;
                FamilySpec::B2P(int(0)?)
            }
            "B3P" => {
                arity(1)?;
                FamilySpec::B3P(int(0)?)
            }
            "B3H" => {
                arity(1)?;
                FamilySpec::B3H(int(0)?)
            }
            _ => return Err(fail(&format!("unknown family {name:?}"))),
        };
        // parameter ranges are checked here so bad specs fail at parse time
        spec.build().map_err(|e| fail(&e.to_string()))?;
        Ok(spec)
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FamilySpec::P(n) => write!(f, "P({n})"),
            FamilySpec::C(n) => write!(f, "C({n})"),
            FamilySpec::D(r, s) => write!(f, "D({r},{s})"),
            FamilySpec::DP(n, r) => write!(f, "DP({n},{r})"),
            FamilySpec::B1(p, q) => write!(f, "B1({p},{q})"),
            FamilySpec::B2(p, q, r) => write!(f, "B2({p},{q},{r})"),
            FamilySpec::B3(p, q, r) => write!(f, "B3({p},{q},{r})"),
            FamilySpec::B1A(p, q, r, at) => {
                let at = match at {
                    Attach::Hub => "hub",
                    Attach::Rim => "rim",
                };
                write!(f, "B1A({p},{q},{r},{at})")
            }
            FamilySpec::B2P(k) => write!(f, "B2P({k})"),
            FamilySpec::B3P(k) => write!(f, "B3P({k})"),
            FamilySpec::B3H(k) => write!(f, "B3H({k})"),
        }
    }
}
