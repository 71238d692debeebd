//! Permutations of `{1, …, r}` and Young subgroups.

use std::fmt;

use crate::error::{Error, Result};
use crate::limits::check_group_order;
use crate::partitions::Composition;

/// A bijection of `{1, …, r}`, stored 0-based: `images[i] = σ(i+1) − 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(r: usize) -> Self {
        Permutation {
            images: (0..r).collect(),
        }
    }

    /// From 1-based images `[σ(1), …, σ(r)]`.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let r = images.len();
        let mut seen = vec![false; r];
        for &v in images {
            if v == 0 || v > r || seen[v - 1] {
                return Err(Error::Domain(format!("not a permutation: {images:?}")));
            }
            seen[v - 1] = true;
        }
        Ok(Permutation {
            images: images.iter().map(|v| v - 1).collect(),
        })
    }

    /// From 0-based images.
    pub(crate) fn from_zero_based(images: Vec<usize>) -> Self {
        Permutation { images }
    }

    /// From disjoint cycles in 1-based notation, e.g. `[[3,4],[1,5]]`.
    pub fn from_cycles(r: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut images: Vec<usize> = (0..r).collect();
        let mut touched = vec![false; r];
        for cyc in cycles {
            for (i, &a) in cyc.iter().enumerate() {
                let b = cyc[(i + 1) % cyc.len()];
                if a == 0 || a > r || b == 0 || b > r || touched[a - 1] {
                    return Err(Error::Domain(format!("bad cycle notation {cycles:?}")));
                }
                touched[a - 1] = true;
                images[a - 1] = b - 1;
            }
        }
        Ok(Permutation { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// `σ(i)` for 1-based `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1] + 1
    }

    /// 0-based images.
    pub fn images0(&self) -> &[usize] {
        &self.images
    }

    /// 1-based images.
    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|v| v + 1).collect()
    }

    /// `(self ∘ other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation {
            images: other.images.iter().map(|&j| self.images[j]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            inv[j] = i;
        }
        Permutation { images: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// Sign `±1`.
    pub fn sign(&self) -> i32 {
        let mut seen = vec![false; self.images.len()];
        let mut sign = 1;
        for s in 0..self.images.len() {
            if seen[s] {
                continue;
            }
            let mut len = 0;
            let mut i = s;
            while !seen[i] {
                seen[i] = true;
                i = self.images[i];
                len += 1;
            }
            if len % 2 == 0 {
                sign = -sign;
            }
        }
        sign
    }

    /// Cycle notation, omitting fixed points, e.g. `(1 5)(2 6)`.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.images.len()];
        let mut out = Vec::new();
        for s in 0..self.images.len() {
            if seen[s] || self.images[s] == s {
                continue;
            }
            let mut cyc = Vec::new();
            let mut i = s;
            while !seen[i] {
                seen[i] = true;
                cyc.push(i + 1);
                i = self.images[i];
            }
            out.push(cyc);
        }
        out
    }

    /// All permutations of `{1, …, r}` in lexicographic order of images.
    pub fn all(r: usize) -> Result<Vec<Permutation>> {
        young_subgroup(&Composition::new(vec![r]))
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            let s: Vec<String> = c.iter().map(|v| v.to_string()).collect();
            write!(f, "({})", s.join(" "))?;
        }
        Ok(())
    }
}

/// All permutations of a slice of distinct items (lexicographic by index).
pub(crate) fn permutations_of(items: &[usize]) -> Vec<Vec<usize>> {
    let n = items.len();
    let mut out = Vec::new();
    let mut idx: Vec<usize> = (0..n).collect();
    loop {
        out.push(idx.iter().map(|&i| items[i]).collect());
        // next lexicographic permutation of idx
        let Some(i) = (0..n.saturating_sub(1))
            .rev()
            .find(|&i| idx[i] < idx[i + 1])
        else {
            break;
        };
        let j = (i + 1..n).rev().find(|&j| idx[j] > idx[i]).unwrap();
        idx.swap(i, j);
        idx[i + 1..].reverse();
    }
    out
}

/// All elements of the Young subgroup `𝔖_a = 𝔖_{a_1} × ⋯ × 𝔖_{a_k}`,
/// which permutes positions within each color segment.
pub fn young_subgroup(a: &Composition) -> Result<Vec<Permutation>> {
    let order: usize = a
        .parts
        .iter()
        .map(|&m| (1..=m).product::<usize>())
        .product();
    check_group_order(order)?;
    let r = a.total();
    let mut result = vec![Vec::with_capacity(r)];
    let mut start = 0;
    for &m in &a.parts {
        let seg: Vec<usize> = (start..start + m).collect();
        let perms = permutations_of(&seg);
        let mut next = Vec::with_capacity(result.len() * perms.len());
        for prefix in &result {
            for p in &perms {
                let mut v: Vec<usize> = prefix.clone();
                v.extend_from_slice(p);
                next.push(v);
            }
        }
        result = next;
        start += m;
    }
    Ok(result
        .into_iter()
        .map(Permutation::from_zero_based)
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn young_subgroup_sizes() {
        assert_eq!(young_subgroup(&Composition::new(vec![3])).unwrap().len(), 6);
        assert_eq!(
            young_subgroup(&Composition::new(vec![1, 1, 1])).unwrap(),
            vec![Permutation::identity(3)]
        );
        assert_eq!(
            young_subgroup(&Composition::new(vec![2, 2])).unwrap().len(),
            4
        );
    }

    #[test]
    fn sign_and_cycles() {
        let s = Permutation::from_cycles(9, &[&[3, 4], &[1, 5], &[2, 6], &[7, 9]]).unwrap();
        assert_eq!(s.sign(), 1);
        assert_eq!(s.to_string(), "(1 5)(2 6)(3 4)(7 9)");
        assert!(s.compose(&s.inverse()).is_identity());
    }
}
