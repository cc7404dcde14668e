//! Coordinate sets: subsets of the column indices of a code.
//!
//! Stored 0-based and sorted. Everything that crosses an I/O boundary
//! (serde, `Display`, the `*_one_based` helpers) uses the 1-based `[n]`
//! convention instead.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CoordSet(Vec<usize>);

impl CoordSet {
    pub fn empty() -> Self {
        CoordSet(Vec::new())
    }

    /// `[n]`, all coordinates of a length-`n` code.
    pub fn full(n: usize) -> Self {
        CoordSet((0..n).collect())
    }

    /// Builds a set from 0-based indices; duplicates are dropped.
    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> Self {
        let mut v: Vec<usize> = indices.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        CoordSet(v)
    }

    /// Builds a set from 1-based indices, checking them against `n`.
    pub fn from_one_based(indices: &[usize], n: usize) -> Result<Self> {
        for &i in indices {
            if i == 0 || i > n {
                return Err(Error::CoordinateOutOfRange { index: i, n });
            }
        }
        Ok(Self::from_indices(indices.iter().map(|i| i - 1)))
    }

    pub fn to_one_based(&self) -> Vec<usize> {
        self.0.iter().map(|i| i + 1).collect()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.0.binary_search(&i).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    /// Largest index plus one, or 0 for the empty set.
    pub fn bound(&self) -> usize {
        self.0.last().map_or(0, |m| m + 1)
    }

    pub fn union(&self, other: &CoordSet) -> CoordSet {
        let mut out = Vec::with_capacity(self.len() + other.len());
        let (mut a, mut b) = (self.0.iter().peekable(), other.0.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some(&&x), Some(&&y)) => {
                    if x < y {
                        out.push(x);
                        a.next();
                    } else if y < x {
                        out.push(y);
                        b.next();
                    } else {
                        out.push(x);
                        a.next();
                        b.next();
                    }
                }
                (Some(&&x), None) => {
                    out.push(x);
                    a.next();
                }
                (None, Some(&&y)) => {
                    out.push(y);
                    b.next();
                }
                (None, None) => break,
            }
        }
        CoordSet(out)
    }

    pub fn intersection(&self, other: &CoordSet) -> CoordSet {
        CoordSet(self.0.iter().copied().filter(|&i| other.contains(i)).collect())
    }

    pub fn difference(&self, other: &CoordSet) -> CoordSet {
        CoordSet(self.0.iter().copied().filter(|&i| !other.contains(i)).collect())
    }

    pub fn complement(&self, n: usize) -> CoordSet {
        CoordSet((0..n).filter(|&i| !self.contains(i)).collect())
    }

    pub fn is_subset(&self, other: &CoordSet) -> bool {
        self.0.iter().all(|&i| other.contains(i))
    }

    pub fn insert(&mut self, i: usize) {
        if let Err(pos) = self.0.binary_search(&i) {
            self.0.insert(pos, i);
        }
    }
}

impl FromIterator<usize> for CoordSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        CoordSet::from_indices(iter)
    }
}

impl fmt::Display for CoordSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (j, i) in self.0.iter().enumerate() {
            if j > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", i + 1)?;
        }
        write!(f, "}}")
    }
}

impl Serialize for CoordSet {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_one_based().serialize(s)
    }
}

impl<'de> Deserialize<'de> for CoordSet {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v: Vec<usize> = Vec::deserialize(d)?;
        if v.contains(&0) {
            return Err(serde::de::Error::custom("coordinates are 1-based; found 0"));
        }
        Ok(CoordSet::from_indices(v.into_iter().map(|i| i - 1)))
    }
}
