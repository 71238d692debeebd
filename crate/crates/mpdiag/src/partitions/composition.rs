//! Weak compositions `a ∈ W_{r,k}`: color multiplicities of a row.

use std::fmt;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::scalars::factorial;

/// A weak composition: `parts[j]` is the number of positions of color `j+1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition {
    pub parts: Vec<usize>,
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Self {
        Composition { parts }
    }

    /// Builds a composition and checks it sums to `r`.
    pub fn with_total(parts: Vec<usize>, r: usize) -> Result<Self> {
        let c = Composition { parts };
        if c.total() != r {
            return Err(Error::Mismatch(format!(
                "composition {c} sums to {} but {r} was required",
                c.total()
            )));
        }
        Ok(c)
    }

    /// The composition `(r, 0, …, 0)` with `k` parts.
    pub fn first_color(r: usize, k: usize) -> Self {
        let mut parts = vec![0; k];
        parts[0] = r;
        Composition { parts }
    }

    /// Sum of the parts.
    pub fn total(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of colors `k`.
    pub fn k(&self) -> usize {
        self.parts.len()
    }

    /// Color (1-based) of each position `1..=r`, in segment order: the first
    /// `parts[0]` positions get color 1, and so on.
    pub fn colors(&self) -> Vec<u32> {
        let mut out = Vec::with_capacity(self.total());
        for (j, &m) in self.parts.iter().enumerate() {
            out.extend(std::iter::repeat_n(j as u32 + 1, m));
        }
        out
    }

    /// `|𝔖_a| = Π a_j!`.
    pub fn young_order(&self) -> BigInt {
        self.parts.iter().map(|&m| factorial(m)).product()
    }

    /// All of `W_{r,k}` in lexicographic order of parts.
    pub fn all(r: usize, k: usize) -> Vec<Composition> {
        fn rec(r: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Composition>) {
            if k == 1 {
                cur.push(r);
                out.push(Composition::new(cur.clone()));
                cur.pop();
                return;
            }
            for first in 0..=r {
                cur.push(first);
                rec(r - first, k - 1, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        if k == 0 {
            if r == 0 {
                out.push(Composition::new(vec![]));
            }
            return out;
        }
        rec(r, k, &mut Vec::new(), &mut out);
        out
    }

    /// Color multiplicities of a list of colors, as a composition with `k`
    /// parts.
    pub fn from_colors(colors: impl IntoIterator<Item = u32>, k: usize) -> Self {
        let mut parts = vec![0; k];
        for c in colors {
            parts[c as usize - 1] += 1;
        }
        Composition { parts }
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        // |W_{r,k}| = C(r+k-1, k-1)
        assert_eq!(Composition::all(3, 2).len(), 4);
        assert_eq!(Composition::all(2, 3).len(), 6);
        assert_eq!(Composition::new(vec![2, 0, 1]).colors(), vec![1, 1, 3]);
        assert_eq!(Composition::new(vec![2, 2]).young_order(), BigInt::from(4));
    }
}
