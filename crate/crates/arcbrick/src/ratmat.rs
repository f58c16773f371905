//! Dense matrices over the rationals with exact arithmetic.
//!
//! Everything downstream (Hom spaces, Ext cocycles, endomorphism radicals)
//! reduces to reduced row echelon form over `BigRational`, so pivoting and
//! basis ordering are fixed here once: leftmost pivot, rows processed top to
//! bottom, free columns in increasing order.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rat = BigRational;

pub fn rat(p: i64) -> Rat {
    BigRational::from_integer(BigInt::from(p))
}

pub fn rat_frac(p: i64, q: i64) -> Rat {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

/// Render a rational as `p` or `p/q` (reduced, q > 0).
pub fn rat_to_string(x: &Rat) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Parse `p` or `p/q`.
pub fn rat_from_str(s: &str) -> Result<Rat> {
    let bad = || Error::BadRational(s.to_string());
    match s.split_once('/') {
        None => {
            let p: BigInt = s.trim().parse().map_err(|_| bad())?;
            Ok(BigRational::from_integer(p))
        }
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(p, q))
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RatMat {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

impl RatMat {
    pub fn zero(rows: usize, cols: usize) -> Self {
        RatMat {
            rows,
            cols,
            data: vec![Rat::zero(); rows * cols],
        }
    }

    pub fn identity(k: usize) -> Self {
        let mut m = RatMat::zero(k, k);
        for i in 0..k {
            m.set(i, i, Rat::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::ShapeMismatch("ragged row lengths".into()));
        }
        Ok(RatMat {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        RatMat::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| rat(x)).collect())
                .collect(),
        )
        .expect("literal rows are rectangular")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Rat {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rat) {
        self.data[r * self.cols + c] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn entries(&self) -> &[Rat] {
        &self.data
    }

    pub fn transpose(&self) -> RatMat {
        let mut out = RatMat::zero(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(c, r, self.get(r, c).clone());
            }
        }
        out
    }

    pub fn mul(&self, rhs: &RatMat) -> RatMat {
        assert_eq!(self.cols, rhs.rows, "matrix product shape mismatch");
        let mut out = RatMat::zero(self.rows, rhs.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..rhs.cols {
                    let b = rhs.get(k, c);
                    if b.is_zero() {
                        continue;
                    }
                    let cur = out.get(r, c).clone();
                    out.set(r, c, cur + a * b);
                }
            }
        }
        out
    }

    pub fn add(&self, rhs: &RatMat) -> RatMat {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let mut out = self.clone();
        for (x, y) in out.data.iter_mut().zip(&rhs.data) {
            *x += y;
        }
        out
    }

    pub fn sub(&self, rhs: &RatMat) -> RatMat {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let mut out = self.clone();
        for (x, y) in out.data.iter_mut().zip(&rhs.data) {
            *x -= y;
        }
        out
    }

    pub fn neg(&self) -> RatMat {
        let mut out = self.clone();
        for x in out.data.iter_mut() {
            *x = -x.clone();
        }
        out
    }

    pub fn scale(&self, s: &Rat) -> RatMat {
        let mut out = self.clone();
        for x in out.data.iter_mut() {
            *x *= s;
        }
        out
    }

    /// Stack `rhs` to the right.
    pub fn hstack(&self, rhs: &RatMat) -> RatMat {
        assert_eq!(self.rows, rhs.rows);
        let mut out = RatMat::zero(self.rows, self.cols + rhs.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(r, c, self.get(r, c).clone());
            }
            for c in 0..rhs.cols {
                out.set(r, self.cols + c, rhs.get(r, c).clone());
            }
        }
        out
    }

    /// Stack `rhs` below.
    pub fn vstack(&self, rhs: &RatMat) -> RatMat {
        assert_eq!(self.cols, rhs.cols);
        let mut data = self.data.clone();
        data.extend_from_slice(&rhs.data);
        RatMat {
            rows: self.rows + rhs.rows,
            cols: self.cols,
            data,
        }
    }

    /// Reduced row echelon form together with the pivot columns.
    pub fn rref(&self) -> (RatMat, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            // Find a pivot in this column at or below `row`; prefer the
            // topmost nonzero entry so bases come out reproducibly.
            let mut piv = None;
            for r in row..m.rows {
                if !m.get(r, col).is_zero() {
                    piv = Some(r);
                    break;
                }
            }
            let Some(piv) = piv else { continue };
            if piv != row {
                for c in 0..m.cols {
                    let a = m.get(row, c).clone();
                    let b = m.get(piv, c).clone();
                    m.set(row, c, b);
                    m.set(piv, c, a);
                }
            }
            let inv = {
                let p = m.get(row, col);
                Rat::one() / p.clone()
            };
            for c in col..m.cols {
                let v = m.get(row, c).clone() * &inv;
                m.set(row, c, v);
            }
            for r in 0..m.rows {
                if r == row || m.get(r, col).is_zero() {
                    continue;
                }
                let factor = m.get(r, col).clone();
                for c in col..m.cols {
                    let v = m.get(r, c).clone() - &factor * m.get(row, c);
                    m.set(r, c, v);
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right nullspace. One vector per free column, in
    /// increasing column order, with a 1 in the free coordinate.
    pub fn nullspace(&self) -> Vec<Vec<Rat>> {
        let (r, pivots) = self.rref();
        let pivot_set: Vec<Option<usize>> = {
            let mut v = vec![None; self.cols];
            for (row_idx, &col) in pivots.iter().enumerate() {
                v[col] = Some(row_idx);
            }
            v
        };
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_set[free].is_some() {
                continue;
            }
            let mut vec = vec![Rat::zero(); self.cols];
            vec[free] = Rat::one();
            for (row_idx, &col) in pivots.iter().enumerate() {
                vec[col] = -r.get(row_idx, free).clone();
            }
            basis.push(vec);
        }
        basis
    }

    /// One solution of `self * x = b` with free variables set to zero,
    /// or `None` when the system is inconsistent.
    pub fn solve(&self, b: &[Rat]) -> Option<Vec<Rat>> {
        assert_eq!(b.len(), self.rows);
        let rhs = RatMat {
            rows: self.rows,
            cols: 1,
            data: b.to_vec(),
        };
        self.solve_mat(&rhs).map(|m| m.data)
    }

    /// Columnwise particular solutions of `self * X = B`.
    pub fn solve_mat(&self, b: &RatMat) -> Option<RatMat> {
        assert_eq!(b.rows, self.rows);
        let aug = self.hstack(b);
        let (r, pivots) = aug.rref();
        // Inconsistent iff some pivot lands in the appended block.
        if pivots.iter().any(|&c| c >= self.cols) {
            return None;
        }
        let mut x = RatMat::zero(self.cols, b.cols);
        for (row_idx, &col) in pivots.iter().enumerate() {
            for c in 0..b.cols {
                x.set(col, c, r.get(row_idx, self.cols + c).clone());
            }
        }
        Some(x)
    }
}

/// Rank of the span of a family of coordinate vectors.
pub fn rank_of_vectors(vecs: &[Vec<Rat>]) -> usize {
    if vecs.is_empty() {
        return 0;
    }
    let m = RatMat::from_rows(vecs.to_vec()).expect("vectors share a length");
    m.rank()
}

/// Keep the signum around for occasional exactness sanity checks.
pub fn rat_sign(x: &Rat) -> i8 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rref_and_rank() {
        let m = RatMat::from_int_rows(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(m.rank(), 2);
        let (r, pivots) = m.rref();
        assert_eq!(pivots, vec![0, 1]);
        assert_eq!(r.get(0, 0), &rat(1));
        assert_eq!(r.get(0, 1), &rat(0));
    }

    #[test]
    fn nullspace_dimension_complements_rank() {
        let m = RatMat::from_int_rows(&[&[1, 1, 0, 0], &[0, 0, 1, -1]]);
        let ns = m.nullspace();
        assert_eq!(ns.len(), 2);
        for v in &ns {
            let prod = m.mul(&RatMat {
                rows: 4,
                cols: 1,
                data: v.clone(),
            });
            assert!(prod.is_zero());
        }
    }

    #[test]
    fn solve_consistent_and_inconsistent() {
        let m = RatMat::from_int_rows(&[&[2, 0], &[0, 3]]);
        let x = m.solve(&[rat(4), rat(9)]).unwrap();
        assert_eq!(x, vec![rat(2), rat(3)]);

        let singular = RatMat::from_int_rows(&[&[1, 1], &[1, 1]]);
        assert!(singular.solve(&[rat(0), rat(1)]).is_none());
        assert!(singular.solve(&[rat(1), rat(1)]).is_some());
    }

    #[test]
    fn rational_strings_round_trip() {
        for s in ["0", "-7", "3/4", "-5/9"] {
            assert_eq!(rat_to_string(&rat_from_str(s).unwrap()), s);
        }
        assert_eq!(rat_from_str("6/8").unwrap(), rat_frac(3, 4));
        assert!(rat_from_str("1/0").is_err());
        assert!(rat_from_str("x").is_err());
    }
}
