//! Linear codes given by generator matrices, and the set functions on them:
//! entropy (rank of a column subset), closure, restriction, shortening,
//! puncturing and exact minimum distance.

use std::sync::Arc;

use crate::coords::CoordSet;
use crate::error::{Error, Result};
use crate::galois::{Field, FieldElem};
use crate::linalg::{rref, rref_limited, Row, SpanBasis};

/// Upper limit on the number of messages enumerated by [`LinearCode::min_distance`].
pub const DEFAULT_ENUMERATION_CAP: u64 = 1 << 24;

/// A linear code over GF(q) with a full-row-rank generator matrix.
///
/// A zero-dimensional code (k = 0) is a valid value: it is what restricting
/// to a set of zero columns, or shortening on an information set, produces.
#[derive(Clone, Debug)]
pub struct LinearCode {
    field: Arc<Field>,
    n: usize,
    rows: Vec<Row>,
    columns: Vec<Row>,
    normalized: bool,
}

/// A minimum-weight codeword together with the message that produces it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinWeight {
    pub weight: usize,
    pub message: Vec<FieldElem>,
    pub codeword: Vec<FieldElem>,
}

impl LinearCode {
    /// Builds a code from generator rows. Rows must all have the same,
    /// nonzero length and generate a nonzero code. Rank-deficient inputs are
    /// replaced by the nonzero rows of their reduced row-echelon form; see
    /// [`LinearCode::was_normalized`].
    pub fn new(field: Arc<Field>, rows: Vec<Row>) -> Result<Self> {
        let n = rows.first().map_or(0, |r| r.len());
        if n == 0 {
            return Err(Error::InvalidGenerator("generator has no columns".into()));
        }
        if let Some((i, r)) = rows.iter().enumerate().find(|(_, r)| r.len() != n) {
            return Err(Error::InvalidGenerator(format!(
                "row {} has {} entries, expected {n}",
                i + 1,
                r.len()
            )));
        }
        let code = Self::from_rows(field, n, rows);
        if code.k() == 0 {
            return Err(Error::ZeroDimensional("the generator matrix is all zero".into()));
        }
        Ok(code)
    }

    /// Convenience constructor from integer entries.
    pub fn from_u32_rows(q: u32, rows: &[Vec<u32>]) -> Result<Self> {
        let field = Arc::new(Field::new(q)?);
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|&v| field.elem(v)).collect::<Result<Row>>())
            .collect::<Result<Vec<Row>>>()?;
        Self::new(field, rows)
    }

    /// The zero-dimensional code of length `n`.
    pub fn zero(field: Arc<Field>, n: usize) -> Self {
        LinearCode { field, n, rows: Vec::new(), columns: vec![Vec::new(); n], normalized: false }
    }

    /// Internal constructor: accepts any shape and normalizes to full row rank.
    fn from_rows(field: Arc<Field>, n: usize, rows: Vec<Row>) -> Self {
        let mut reduced = rows.clone();
        let rank = rref(&field, &mut reduced).len();
        let (rows, normalized) = if rank == rows.len() {
            (rows, false)
        } else {
            reduced.truncate(rank);
            (reduced, true)
        };
        let columns = (0..n).map(|j| rows.iter().map(|r| r[j]).collect()).collect();
        LinearCode { field, n, rows, columns, normalized }
    }

    pub fn field(&self) -> &Arc<Field> {
        &self.field
    }

    pub fn q(&self) -> u32 {
        self.field.order()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Row] {
        &self.rows
    }

    pub fn column(&self, j: usize) -> &[FieldElem] {
        &self.columns[j]
    }

    pub fn is_zero_dimensional(&self) -> bool {
        self.rows.is_empty()
    }

    /// True when the generator given at construction was rank deficient and
    /// got replaced by an equivalent full-rank one.
    pub fn was_normalized(&self) -> bool {
        self.normalized
    }

    /// Generator rows as plain integers, e.g. for serialization.
    pub fn generator_u32(&self) -> Vec<Vec<u32>> {
        self.rows.iter().map(|r| r.iter().map(|x| x.value()).collect()).collect()
    }

    fn check(&self, set: &CoordSet) -> Result<()> {
        if set.bound() > self.n {
            return Err(Error::CoordinateOutOfRange { index: set.bound(), n: self.n });
        }
        Ok(())
    }

    /// Reduced row-echelon form of the generator and its rank.
    pub fn rref(&self) -> (Vec<Row>, usize) {
        let mut m = self.rows.clone();
        let rank = rref(&self.field, &mut m).len();
        (m, rank)
    }

    /// Rank of the columns indexed by a 0-based slice; no bounds check.
    pub(crate) fn rank_of(&self, cols: &[usize]) -> usize {
        let mut basis = SpanBasis::new(&self.field);
        let k = self.k();
        for &j in cols {
            basis.insert(&self.columns[j]);
            if basis.rank() == k {
                break;
            }
        }
        basis.rank()
    }

    /// H(I): dimension of the restriction to `set`.
    pub fn entropy(&self, set: &CoordSet) -> Result<usize> {
        self.check(set)?;
        Ok(self.rank_of(set.as_slice()))
    }

    /// cl(I): every coordinate whose column lies in the span of the columns in `set`.
    pub fn closure(&self, set: &CoordSet) -> Result<CoordSet> {
        self.check(set)?;
        let mut basis = SpanBasis::new(&self.field);
        for j in set.iter() {
            basis.insert(&self.columns[j]);
        }
        Ok((0..self.n)
            .filter(|&e| set.contains(e) || basis.contains(&self.columns[e]))
            .collect())
    }

    /// C|_I, re-derived to full row rank. An empty or all-zero selection
    /// yields a zero-dimensional code.
    pub fn restrict(&self, set: &CoordSet) -> Result<LinearCode> {
        self.check(set)?;
        Ok(self.restrict_unchecked(set.as_slice()))
    }

    pub(crate) fn restrict_unchecked(&self, cols: &[usize]) -> LinearCode {
        let rows: Vec<Row> = self
            .rows
            .iter()
            .map(|r| cols.iter().map(|&j| r[j]).collect())
            .collect();
        let mut code = Self::from_rows(Arc::clone(&self.field), cols.len(), rows);
        code.normalized = false;
        code
    }

    /// C/I: codewords vanishing on `set`, with those coordinates removed.
    /// Length `n - |I|`, dimension `k - H(I)`.
    pub fn shorten(&self, set: &CoordSet) -> Result<LinearCode> {
        self.check(set)?;
        let rest = set.complement(self.n);
        let width = set.len();
        let mut rows: Vec<Row> = self
            .rows
            .iter()
            .map(|r| set.iter().chain(rest.iter()).map(|j| r[j]).collect())
            .collect();
        let rank = rref_limited(&self.field, &mut rows, width).len();
        let kept: Vec<Row> = rows[rank..].iter().map(|r| r[width..].to_vec()).collect();
        let mut code = Self::from_rows(Arc::clone(&self.field), rest.len(), kept);
        code.normalized = false;
        Ok(code)
    }

    /// Restriction to the complement of `set`.
    pub fn puncture(&self, set: &CoordSet) -> Result<LinearCode> {
        self.check(set)?;
        self.restrict(&set.complement(self.n))
    }

    /// The block-diagonal code `self ⊕ other`.
    pub fn direct_sum(&self, other: &LinearCode) -> Result<LinearCode> {
        if self.q() != other.q() {
            return Err(Error::FieldMismatch(self.q(), other.q()));
        }
        let n = self.n + other.n;
        let zero = FieldElem::ZERO;
        let mut rows = Vec::with_capacity(self.k() + other.k());
        for r in &self.rows {
            let mut row = r.clone();
            row.resize(n, zero);
            rows.push(row);
        }
        for r in &other.rows {
            let mut row = vec![zero; self.n];
            row.extend_from_slice(r);
            rows.push(row);
        }
        Ok(Self::from_rows(Arc::clone(&self.field), n, rows))
    }

    pub fn encode(&self, message: &[FieldElem]) -> Vec<FieldElem> {
        let mut cw = vec![FieldElem::ZERO; self.n];
        for (&m, row) in message.iter().zip(&self.rows) {
            if m.is_zero() {
                continue;
            }
            for (c, &g) in cw.iter_mut().zip(row) {
                *c = self.field.add(*c, self.field.mul(m, g));
            }
        }
        cw
    }

    fn enumeration_size(&self) -> u128 {
        (self.q() as u128).checked_pow(self.k() as u32).unwrap_or(u128::MAX)
    }

    /// Exact minimum distance, `None` for a zero-dimensional code.
    pub fn min_distance(&self) -> Result<Option<usize>> {
        self.min_distance_with_cap(DEFAULT_ENUMERATION_CAP)
    }

    pub fn min_distance_with_cap(&self, cap: u64) -> Result<Option<usize>> {
        Ok(self.min_weight_codeword_with_cap(cap)?.map(|m| m.weight))
    }

    /// A minimum-weight codeword; among all messages attaining the minimum
    /// the lexicographically smallest one (by element index) is returned.
    pub fn min_weight_codeword(&self) -> Result<Option<MinWeight>> {
        self.min_weight_codeword_with_cap(DEFAULT_ENUMERATION_CAP)
    }

    pub fn min_weight_codeword_with_cap(&self, cap: u64) -> Result<Option<MinWeight>> {
        if self.is_zero_dimensional() {
            return Ok(None);
        }
        let needed = self.enumeration_size();
        if needed > cap as u128 {
            return Err(Error::EnumerationCap { needed, cap });
        }
        if self.q() == 2 && self.n <= 128 {
            Ok(Some(self.min_weight_binary()))
        } else {
            Ok(Some(self.min_weight_general()))
        }
    }

    /// Gray-code walk over all binary messages with codewords as bitmasks.
    /// Gray index bit `k-1-j` is message coordinate `j`, so comparing Gray
    /// values compares messages lexicographically.
    fn min_weight_binary(&self) -> MinWeight {
        let k = self.k();
        let masks: Vec<u128> = self
            .rows
            .iter()
            .map(|r| {
                r.iter()
                    .enumerate()
                    .fold(0u128, |acc, (j, x)| if x.is_zero() { acc } else { acc | 1 << j })
            })
            .collect();
        let (mut gray, mut cw) = (0u64, 0u128);
        let (mut best_w, mut best_g) = (usize::MAX, 0u64);
        for i in 1..(1u64 << k) {
            let bit = i.trailing_zeros() as usize;
            gray ^= 1 << bit;
            cw ^= masks[k - 1 - bit];
            let w = cw.count_ones() as usize;
            if w < best_w || (w == best_w && gray < best_g) {
                best_w = w;
                best_g = gray;
            }
        }
        let message: Vec<FieldElem> = (0..k)
            .map(|j| if best_g >> (k - 1 - j) & 1 == 1 { FieldElem::ONE } else { FieldElem::ZERO })
            .collect();
        let codeword = self.encode(&message);
        MinWeight { weight: best_w, message, codeword }
    }

    /// Enumerates messages whose first nonzero entry is one, in increasing
    /// lexicographic order; scalar multiples share a weight, and the
    /// normalized message is the lexicographically smallest of its class.
    fn min_weight_general(&self) -> MinWeight {
        let f = &*self.field;
        let k = self.k();
        let q = self.q() as usize;
        let mut best: Option<(usize, Vec<FieldElem>)> = None;
        for lead in (0..k).rev() {
            let mut msg = vec![FieldElem::ZERO; k];
            msg[lead] = FieldElem::ONE;
            let mut cw = self.rows[lead].clone();
            let tail = lead + 1..k;
            loop {
                let w = cw.iter().filter(|x| !x.is_zero()).count();
                if best.as_ref().is_none_or(|(bw, _)| w < *bw) {
                    best = Some((w, msg.clone()));
                }
                // advance the tail counter, last coordinate fastest
                let mut pos = k;
                let mut advanced = false;
                while pos > tail.start {
                    pos -= 1;
                    let old = msg[pos];
                    let next = (old.idx() + 1) % q;
                    let new = FieldElem::from_index(next as u8);
                    msg[pos] = new;
                    let delta = f.sub(new, old);
                    for (c, &g) in cw.iter_mut().zip(&self.rows[pos]) {
                        *c = f.add(*c, f.mul(delta, g));
                    }
                    if next != 0 {
                        advanced = true;
                        break;
                    }
                }
                if !advanced {
                    break;
                }
            }
        }
        let (weight, message) = best.expect("k >= 1");
        let codeword = self.encode(&message);
        MinWeight { weight, message, codeword }
    }

    /// Positions where `word` is nonzero.
    pub fn support(word: &[FieldElem]) -> CoordSet {
        word.iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .map(|(i, _)| i)
            .collect()
    }
}
