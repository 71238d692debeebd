//! Sparse linear combinations `Σ c_k · e_k` with polynomial coefficients,
//! shared by the element types of both algebras.

use std::collections::BTreeMap;

use crate::scalars::{Poly, Rational};

/// A finite formal sum over keys `K` with non-zero [`Poly`] coefficients.
///
/// Stored in a `BTreeMap`, so iteration order (and therefore every printed
/// or serialized form) is deterministic.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LinComb<K: Ord> {
    terms: BTreeMap<K, Poly>,
}

impl<K: Ord> Default for LinComb<K> {
    fn default() -> Self {
        LinComb {
            terms: BTreeMap::new(),
        }
    }
}

impl<K: Ord + Clone> LinComb<K> {
    pub fn new() -> Self {
        Self::default()
    }

    /// The single term `c · k` (empty if `c = 0`).
    pub fn single(k: K, c: Poly) -> Self {
        let mut out = Self::new();
        out.add_term(k, &c);
        out
    }

    /// Adds `c · k`, dropping the entry if it cancels to zero.
    pub fn add_term(&mut self, k: K, c: &Poly) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&k) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.terms.remove(&k);
                }
            }
            None => {
                self.terms.insert(k, c.clone());
            }
        }
    }

    /// `self += c · other`.
    pub fn add_scaled(&mut self, other: &LinComb<K>, c: &Poly) {
        if c.is_zero() {
            return;
        }
        for (k, v) in &other.terms {
            self.add_term(k.clone(), &(v * c));
        }
    }

    /// `self += other`.
    pub fn add_assign(&mut self, other: &LinComb<K>) {
        for (k, v) in &other.terms {
            self.add_term(k.clone(), v);
        }
    }

    /// `c · self`.
    pub fn scale(&self, c: &Poly) -> LinComb<K> {
        let mut out = Self::new();
        out.add_scaled(self, c);
        out
    }

    /// `self − other`.
    pub fn sub(&self, other: &LinComb<K>) -> LinComb<K> {
        let mut out = self.clone();
        out.add_scaled(other, &Poly::int(-1));
        out
    }

    /// Coefficient of `k` (zero if absent).
    pub fn coeff(&self, k: &K) -> Poly {
        self.terms.get(k).cloned().unwrap_or_default()
    }

    pub fn get(&self, k: &K) -> Option<&Poly> {
        self.terms.get(k)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&K, &Poly)> {
        self.terms.iter()
    }

    pub fn keys(&self) -> impl Iterator<Item = &K> {
        self.terms.keys()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Maps keys through `f`, adding coefficients of keys that collide.
    pub fn map_keys<K2: Ord + Clone>(&self, mut f: impl FnMut(&K) -> K2) -> LinComb<K2> {
        let mut out = LinComb::new();
        for (k, v) in &self.terms {
            out.add_term(f(k), v);
        }
        out
    }

    /// Specializes every coefficient at `x = n`, dropping zeros.
    pub fn evaluate(&self, n: i64) -> BTreeMap<K, Rational> {
        self.terms
            .iter()
            .map(|(k, v)| (k.clone(), v.evaluate(n)))
            .filter(|(_, v)| *v != Rational::from_integer(0.into()))
            .collect()
    }

    /// Sum of many combinations.
    pub fn sum<'a>(parts: impl IntoIterator<Item = &'a LinComb<K>>) -> LinComb<K>
    where
        K: 'a,
    {
        let mut out = Self::new();
        for p in parts {
            out.add_assign(p);
        }
        out
    }
}

impl<K: Ord> IntoIterator for LinComb<K> {
    type Item = (K, Poly);
    type IntoIter = std::collections::btree_map::IntoIter<K, Poly>;
    fn into_iter(self) -> Self::IntoIter {
        self.terms.into_iter()
    }
}

/// Prints `c * key + ...`; multi-term coefficients are parenthesized.
pub(crate) fn format_terms<K: Ord>(lc: &LinComb<K>, key: impl Fn(&K) -> String) -> String {
    if lc.terms.is_empty() {
        return "0".to_string();
    }
    lc.terms
        .iter()
        .map(|(k, c)| {
            let t = c.to_text();
            let t = if t.contains(' ') && !t.starts_with('(') {
                format!("({t})")
            } else {
                t
            };
            format!("{t} * {}", key(k))
        })
        .collect::<Vec<_>>()
        .join(" + ")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cancellation_removes_terms() {
        let mut a = LinComb::single(1u32, Poly::x());
        a.add_term(1, &(-Poly::x()));
        assert!(a.is_empty());
        a.add_term(2, &Poly::int(3));
        assert_eq!(format_terms(&a, |k| k.to_string()), "3 * 2");
        let b = LinComb::single(2u32, &Poly::x() - &Poly::int(2));
        assert_eq!(format_terms(&b, |k| k.to_string()), "(x - 2) * 2");
    }
}
