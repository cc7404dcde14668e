//! Gaussian elimination over GF(q).

use crate::galois::{Field, FieldElem};

pub type Row = Vec<FieldElem>;

/// Reduces `rows` to reduced row-echelon form in place, considering only
/// pivot columns in `0..pivot_limit`. Zero rows sink to the bottom.
/// Returns the pivot columns, one per nonzero leading row.
pub fn rref_limited(field: &Field, rows: &mut [Row], pivot_limit: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..pivot_limit {
        if r == rows.len() {
            break;
        }
        let Some(sel) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, sel);
        let inv = field.inv(rows[r][col]).expect("pivot is nonzero");
        for x in rows[r].iter_mut() {
            *x = field.mul(*x, inv);
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r {
                continue;
            }
            let c = row[col];
            if c.is_zero() {
                continue;
            }
            for (x, &p) in row.iter_mut().zip(&pivot_row) {
                *x = field.sub(*x, field.mul(c, p));
            }
        }
        pivots.push(col);
        r += 1;
    }
    pivots
}

/// Full reduced row-echelon form; the rank is the number of pivots.
pub fn rref(field: &Field, rows: &mut [Row]) -> Vec<usize> {
    let width = rows.first().map_or(0, |r| r.len());
    rref_limited(field, rows, width)
}

/// An incrementally built basis of a subspace of GF(q)^dim.
///
/// Each stored vector has its pivot entry normalized to one and vanishes at
/// the pivots of all vectors inserted before it, so a single forward sweep
/// reduces any query vector.
#[derive(Clone, Debug)]
pub struct SpanBasis<'f> {
    field: &'f Field,
    vectors: Vec<(usize, Row)>,
}

impl<'f> SpanBasis<'f> {
    pub fn new(field: &'f Field) -> Self {
        SpanBasis { field, vectors: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.vectors.len()
    }

    fn reduce(&self, v: &mut [FieldElem]) {
        for (p, b) in &self.vectors {
            let c = v[*p];
            if !c.is_zero() {
                for (x, &y) in v.iter_mut().zip(b) {
                    *x = self.field.sub(*x, self.field.mul(c, y));
                }
            }
        }
    }

    pub fn contains(&self, v: &[FieldElem]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(|x| x.is_zero())
    }

    /// Adds `v` to the span; returns whether the rank grew.
    pub fn insert(&mut self, v: &[FieldElem]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        let Some(p) = w.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = self.field.inv(w[p]).expect("nonzero");
        for x in w.iter_mut() {
            *x = self.field.mul(*x, inv);
        }
        self.vectors.push((p, w));
        true
    }
}
