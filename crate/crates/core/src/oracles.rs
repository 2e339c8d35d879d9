//! Independent cross-checks for the classifier: Catalan numbers, the
//! solid-torus count from continued fractions, and a naive curve tracer.
//!
//! Nothing in here is used by the classification itself.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Catalan number by the convolution recurrence.
pub fn catalan(n: usize) -> u128 {
    let mut c = vec![1u128; n + 1];
    for m in 1..=n {
        c[m] = (0..m).map(|i| c[i] * c[m - 1 - i]).sum();
    }
    c[n]
}

/// Slope `-p/q` of two dividing curves on a solid torus boundary, meridian
/// slope 0.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct NegativeSlope {
    p: u64,
    q: u64,
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

impl NegativeSlope {
    pub fn new(p: u64, q: u64) -> Result<NegativeSlope> {
        if p == 0 || q == 0 {
            return Err(Error::BadSlope(format!("-{p}/{q}")));
        }
        if gcd(p, q) != 1 {
            return Err(Error::BadSlope(format!("-{p}/{q} is not in lowest terms")));
        }
        Ok(NegativeSlope { p, q })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    /// Meridional Dehn twists change `q` by multiples of `p`; the
    /// representative returned has `1 <= q <= p`, so slope `<= -1`.
    pub fn normalized(&self) -> NegativeSlope {
        let q = match self.q % self.p {
            0 => self.p,
            r => r,
        };
        NegativeSlope { p: self.p, q }
    }

    /// `-p/q = r0 - 1/(r1 - 1/(... - 1/rk))` with `r0 <= -1` and the other
    /// coefficients `<= -2`. Applies to the normalized slope.
    pub fn continued_fraction(&self) -> Vec<i64> {
        let s = self.normalized();
        let (mut a, mut b) = (-(s.p as i64), s.q as i64);
        let mut cf = Vec::new();
        loop {
            let r = a.div_euclid(b);
            cf.push(r);
            let rem = a.rem_euclid(b);
            if rem == 0 {
                break;
            }
            // next term is 1 / (r - a/b) = -b / rem
            a = -b;
            b = rem;
        }
        cf
    }
}

impl fmt::Display for NegativeSlope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.q == 1 {
            write!(f, "-{}", self.p)
        } else {
            write!(f, "-{}/{}", self.p, self.q)
        }
    }
}

impl FromStr for NegativeSlope {
    type Err = Error;

    fn from_str(s: &str) -> Result<NegativeSlope> {
        let bad = || Error::BadSlope(s.to_string());
        let body = s.trim().strip_prefix('-').ok_or_else(bad)?;
        let (p, q) = match body.split_once('/') {
            Some((p, q)) => (p.trim(), q.trim()),
            None => (body, "1"),
        };
        let p: u64 = p.parse().map_err(|_| bad())?;
        let q: u64 = q.parse().map_err(|_| bad())?;
        NegativeSlope::new(p, q).map_err(|_| bad())
    }
}

/// Rebuilds `(p, q)` with slope `-p/q` from continued-fraction coefficients.
pub fn from_continued_fraction(cf: &[i64]) -> (u64, u64) {
    let (last, rest) = cf.split_last().expect("empty continued fraction");
    // value = num / den
    let (mut num, mut den) = (*last, 1i64);
    for &r in rest.iter().rev() {
        // r - 1/(num/den) = (r*num - den) / num
        let next = r * num - den;
        den = num;
        num = next;
    }
    if den < 0 {
        num = -num;
        den = -den;
    }
    ((-num) as u64, den as u64)
}

/// Number of tight contact structures on the solid torus with the given
/// boundary slope.
pub fn solid_torus_count(s: NegativeSlope) -> u128 {
    let cf = s.continued_fraction();
    let (last, rest) = cf.split_last().expect("nonempty expansion");
    rest.iter().fold(last.unsigned_abs() as u128, |acc, r| {
        acc * (r + 1).unsigned_abs() as u128
    })
}

/// Counts closed walks in a graph where every node has degree 2, walking
/// edge by edge so that parallel edges form bigons.
pub fn trace_components(node_count: usize, edges: &[(usize, usize)]) -> Result<usize> {
    let mut incident: Vec<Vec<usize>> = vec![Vec::new(); node_count];
    for (e, &(a, b)) in edges.iter().enumerate() {
        for v in [a, b] {
            if v >= node_count {
                return Err(Error::DegreeViolation {
                    locator: format!("edge {e}"),
                    detail: format!("endpoint {v} is not a node"),
                });
            }
        }
        incident[a].push(e);
        incident[b].push(e);
    }
    for (v, inc) in incident.iter().enumerate() {
        if inc.len() != 2 {
            return Err(Error::DegreeViolation {
                locator: format!("node {v}"),
                detail: format!("degree {}", inc.len()),
            });
        }
    }
    let mut used = vec![false; edges.len()];
    let mut cycles = 0;
    for start in 0..edges.len() {
        if used[start] {
            continue;
        }
        cycles += 1;
        used[start] = true;
        let (mut e, mut at) = (start, edges[start].1);
        loop {
            let inc = &incident[at];
            let next = if inc[0] == e { inc[1] } else { inc[0] };
            if used[next] {
                break;
            }
            used[next] = true;
            let (a, b) = edges[next];
            at = if a == at { b } else { a };
            e = next;
        }
    }
    Ok(cycles)
}
