//! Exact elimination for banded symmetric positive-definite integer systems.
//!
//! Fraction-free (Bareiss) elimination restricted to the band. Every
//! intermediate entry is a minor of the input, so divisions are exact. A row
//! outside the active window only gets rescaled by `p_k / p_{k-1}` at each step;
//! those factors telescope, so the rescaling is applied implicitly by skipping
//! the division at the row's first update.
//!
//! Arithmetic first runs in checked `i128` and falls back to [`BigInt`] on
//! overflow.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{CheckedDiv, CheckedMul, CheckedSub, One, Zero};

use crate::error::{Error, Result};

/// Square integer matrix with a symmetric band of half-width `band`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BandMatrix {
    n: usize,
    band: usize,
    data: Vec<i64>,
}

impl BandMatrix {
    pub fn zeros(n: usize, band: usize) -> Self {
        let band = band.max(1);
        BandMatrix {
            n,
            band,
            data: vec![0; n * (2 * band + 1)],
        }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn band(&self) -> usize {
        self.band
    }

    fn slot(&self, i: usize, j: usize) -> Option<usize> {
        if i >= self.n || j >= self.n || i.abs_diff(j) > self.band {
            return None;
        }
        Some(i * (2 * self.band + 1) + j + self.band - i)
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.slot(i, j).map_or(0, |s| self.data[s])
    }

    /// Panics when `(i, j)` lies outside the band.
    pub fn set(&mut self, i: usize, j: usize, value: i64) {
        let s = self.slot(i, j).expect("entry outside band");
        self.data[s] = value;
    }

    pub fn add(&mut self, i: usize, j: usize, value: i64) {
        let s = self.slot(i, j).expect("entry outside band");
        self.data[s] += value;
    }
}

trait Exact: Clone + Zero + One + CheckedMul + CheckedSub + CheckedDiv + From<i64> {}

impl Exact for i128 {}
impl Exact for BigInt {}

struct Band<T> {
    n: usize,
    w: usize,
    data: Vec<T>,
}

impl<T: Exact> Band<T> {
    fn from_matrix(m: &BandMatrix) -> Self {
        Band {
            n: m.n,
            w: m.band,
            data: m.data.iter().map(|&x| T::from(x)).collect(),
        }
    }

    fn idx(&self, i: usize, j: usize) -> usize {
        i * (2 * self.w + 1) + j + self.w - i
    }

    fn get(&self, i: usize, j: usize) -> T {
        if i.abs_diff(j) > self.w {
            T::zero()
        } else {
            self.data[self.idx(i, j)].clone()
        }
    }
}

/// Upper-triangular result of fraction-free elimination.
struct Eliminated<T> {
    upper: Band<T>,
    rhs: Vec<T>,
}

enum Failure {
    Overflow,
    Singular,
}

fn eliminate<T: Exact>(m: &BandMatrix, rhs: &[i64]) -> std::result::Result<Eliminated<T>, Failure> {
    let mut a = Band::<T>::from_matrix(m);
    let mut b: Vec<T> = rhs.iter().map(|&x| T::from(x)).collect();
    let (n, w) = (a.n, a.w);
    let mut prev = T::one();
    for k in 0..n {
        let pivot = a.get(k, k);
        if pivot.is_zero() {
            return Err(Failure::Singular);
        }
        for i in (k + 1)..=(k + w).min(n.saturating_sub(1)) {
            let first_update = k == i.saturating_sub(w);
            let factor = a.get(i, k);
            let combine = |own: &T, pivot_row: &T| -> Option<T> {
                let value = pivot.checked_mul(own)?.checked_sub(&factor.checked_mul(pivot_row)?)?;
                if first_update {
                    Some(value)
                } else {
                    value.checked_div(&prev)
                }
            };
            for j in (k + 1)..=(i + w).min(n - 1) {
                let updated = combine(&a.get(i, j), &a.get(k, j)).ok_or(Failure::Overflow)?;
                let s = a.idx(i, j);
                a.data[s] = updated;
            }
            if !b.is_empty() {
                b[i] = combine(&b[i], &b[k]).ok_or(Failure::Overflow)?;
            }
        }
        prev = pivot;
    }
    Ok(Eliminated { upper: a, rhs: b })
}

fn determinant_with<T: Exact>(m: &BandMatrix) -> std::result::Result<T, Failure> {
    if m.n == 0 {
        return Ok(T::one());
    }
    let e = eliminate::<T>(m, &[])?;
    Ok(e.upper.get(m.n - 1, m.n - 1))
}

/// Solution scaled by the determinant: returns `(det, det * x)`, both integral.
fn solve_with<T: Exact>(m: &BandMatrix, rhs: &[i64]) -> std::result::Result<(T, Vec<T>), Failure> {
    let n = m.n;
    let e = eliminate::<T>(m, rhs)?;
    let det = e.upper.get(n - 1, n - 1);
    let mut y = vec![T::zero(); n];
    for k in (0..n).rev() {
        let mut acc = det.checked_mul(&e.rhs[k]).ok_or(Failure::Overflow)?;
        let last = (k + e.upper.w).min(n - 1);
        for (j, yj) in y.iter().enumerate().take(last + 1).skip(k + 1) {
            let term = e.upper.get(k, j).checked_mul(yj).ok_or(Failure::Overflow)?;
            acc = acc.checked_sub(&term).ok_or(Failure::Overflow)?;
        }
        y[k] = acc.checked_div(&e.upper.get(k, k)).ok_or(Failure::Overflow)?;
    }
    Ok((det, y))
}

/// Determinant of a matrix whose leading principal minors are all non-zero
/// (e.g. a positive-definite one). The empty matrix has determinant 1.
pub fn determinant(m: &BandMatrix) -> Result<BigInt> {
    match determinant_with::<i128>(m) {
        Ok(d) => Ok(BigInt::from(d)),
        Err(Failure::Singular) => Err(Error::Singular),
        Err(Failure::Overflow) => match determinant_with::<BigInt>(m) {
            Ok(d) => Ok(d),
            Err(_) => Err(Error::Singular),
        },
    }
}

/// Exact solution of `m x = rhs` under the same pivot condition as [`determinant`].
pub fn solve(m: &BandMatrix, rhs: &[i64]) -> Result<Vec<BigRational>> {
    assert_eq!(rhs.len(), m.n, "right-hand side length");
    if m.n == 0 {
        return Ok(Vec::new());
    }
    let (det, scaled): (BigInt, Vec<BigInt>) = match solve_with::<i128>(m, rhs) {
        Ok((d, y)) => (BigInt::from(d), y.into_iter().map(BigInt::from).collect()),
        Err(Failure::Singular) => return Err(Error::Singular),
        Err(Failure::Overflow) => solve_with::<BigInt>(m, rhs).map_err(|_| Error::Singular)?,
    };
    Ok(scaled
        .into_iter()
        .map(|y| BigRational::new(y, det.clone()))
        .collect())
}
