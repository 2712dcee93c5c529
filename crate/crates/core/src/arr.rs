//! Dense 3-axis `f64` array used throughout the engine.
//!
//! One type covers every shape the engine needs: weather states are
//! `(C, H, W)`, per-variable stacks are `(P, H, W)`, token latents are
//! `(1, T, D)`, weight matrices `(1, rows, cols)` and vectors `(1, 1, n)`.
//! Data is stored row-major with the first axis outermost, so the slab of
//! channel `c` is contiguous.

use alloc::vec;
use alloc::vec::Vec;

#[derive(Debug, Clone, PartialEq)]
pub struct Arr3 {
    d0: usize,
    d1: usize,
    d2: usize,
    data: Vec<f64>,
}

impl Arr3 {
    pub fn zeros(d0: usize, d1: usize, d2: usize) -> Self {
        Self {
            d0,
            d1,
            d2,
            data: vec![0.0; d0 * d1 * d2],
        }
    }

    pub fn full(d0: usize, d1: usize, d2: usize, value: f64) -> Self {
        Self {
            d0,
            d1,
            d2,
            data: vec![value; d0 * d1 * d2],
        }
    }

    /// Wrap an existing buffer. Panics if `data.len() != d0*d1*d2`.
    pub fn from_vec(d0: usize, d1: usize, d2: usize, data: Vec<f64>) -> Self {
        assert_eq!(data.len(), d0 * d1 * d2, "buffer length mismatch");
        Self { d0, d1, d2, data }
    }

    pub fn from_fn(d0: usize, d1: usize, d2: usize, mut f: impl FnMut(usize, usize, usize) -> f64) -> Self {
        let mut data = Vec::with_capacity(d0 * d1 * d2);
        for i in 0..d0 {
            for j in 0..d1 {
                for k in 0..d2 {
                    data.push(f(i, j, k));
                }
            }
        }
        Self { d0, d1, d2, data }
    }

    /// Vector constructor: shape `(1, 1, n)`.
    pub fn vector(data: Vec<f64>) -> Self {
        let n = data.len();
        Self { d0: 1, d1: 1, d2: n, data }
    }

    /// Scalar constructor: shape `(1, 1, 1)`.
    pub fn scalar(v: f64) -> Self {
        Self::vector(vec![v])
    }

    #[inline]
    pub fn shape(&self) -> (usize, usize, usize) {
        (self.d0, self.d1, self.d2)
    }

    #[inline]
    pub fn d0(&self) -> usize {
        self.d0
    }

    #[inline]
    pub fn d1(&self) -> usize {
        self.d1
    }

    #[inline]
    pub fn d2(&self) -> usize {
        self.d2
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.data.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.data.is_empty()
    }

    #[inline]
    pub fn idx(&self, i: usize, j: usize, k: usize) -> usize {
        debug_assert!(i < self.d0 && j < self.d1 && k < self.d2);
        (i * self.d1 + j) * self.d2 + k
    }

    #[inline]
    pub fn at(&self, i: usize, j: usize, k: usize) -> f64 {
        self.data[self.idx(i, j, k)]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, k: usize, v: f64) {
        let ix = self.idx(i, j, k);
        self.data[ix] = v;
    }

    #[inline]
    pub fn as_slice(&self) -> &[f64] {
        &self.data
    }

    #[inline]
    pub fn as_mut_slice(&mut self) -> &mut [f64] {
        &mut self.data
    }

    pub fn into_vec(self) -> Vec<f64> {
        self.data
    }

    /// Contiguous slab of outer index `i` (e.g. one channel of a state).
    pub fn slab(&self, i: usize) -> &[f64] {
        let n = self.d1 * self.d2;
        &self.data[i * n..(i + 1) * n]
    }

    pub fn slab_mut(&mut self, i: usize) -> &mut [f64] {
        let n = self.d1 * self.d2;
        &mut self.data[i * n..(i + 1) * n]
    }

    /// Contiguous block of outer indices `[start, start+len)` as a new array.
    pub fn slice_d0(&self, start: usize, len: usize) -> Arr3 {
        let n = self.d1 * self.d2;
        Arr3 {
            d0: len,
            d1: self.d1,
            d2: self.d2,
            data: self.data[start * n..(start + len) * n].to_vec(),
        }
    }

    pub fn map(&self, f: impl Fn(f64) -> f64) -> Arr3 {
        Arr3 {
            d0: self.d0,
            d1: self.d1,
            d2: self.d2,
            data: self.data.iter().map(|&x| f(x)).collect(),
        }
    }

    /// Element-wise combination of two equal-shaped arrays.
    pub fn zip(&self, other: &Arr3, f: impl Fn(f64, f64) -> f64) -> Arr3 {
        assert_eq!(self.shape(), other.shape(), "shape mismatch");
        Arr3 {
            d0: self.d0,
            d1: self.d1,
            d2: self.d2,
            data: self
                .data
                .iter()
                .zip(other.data.iter())
                .map(|(&a, &b)| f(a, b))
                .collect(),
        }
    }

    pub fn max_abs(&self) -> f64 {
        let mut m = 0.0f64;
        for &x in &self.data {
            let a = libm::fabs(x);
            if a > m {
                m = a;
            }
        }
        m
    }

    pub fn nan_count(&self) -> usize {
        self.data.iter().filter(|x| x.is_nan()).count()
    }

    pub fn all_finite(&self) -> bool {
        self.data.iter().all(|x| x.is_finite())
    }

    /// First non-finite element as `(d0, d1, d2)` indices, if any.
    pub fn first_non_finite(&self) -> Option<(usize, usize, usize)> {
        let pos = self.data.iter().position(|x| !x.is_finite())?;
        let k = pos % self.d2;
        let j = (pos / self.d2) % self.d1;
        let i = pos / (self.d1 * self.d2);
        Some((i, j, k))
    }
}

/// Largest absolute element-wise difference; panics on shape mismatch.
pub fn max_abs_diff(a: &Arr3, b: &Arr3) -> f64 {
    assert_eq!(a.shape(), b.shape(), "shape mismatch");
    let mut m = 0.0f64;
    for (&x, &y) in a.as_slice().iter().zip(b.as_slice()) {
        let d = libm::fabs(x - y);
        if d > m {
            m = d;
        }
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn indexing_is_row_major_with_contiguous_slabs() {
        let a = Arr3::from_fn(2, 3, 4, |i, j, k| (i * 100 + j * 10 + k) as f64);
        assert_eq!(a.at(1, 2, 3), 123.0);
        assert_eq!(a.idx(1, 0, 0), 12);
        assert_eq!(a.slab(1)[0], 100.0);
        assert_eq!(a.slice_d0(1, 1).as_slice(), a.slab(1));
    }

    #[test]
    fn non_finite_location_is_reported() {
        let mut a = Arr3::zeros(2, 2, 2);
        a.set(1, 0, 1, f64::NAN);
        assert_eq!(a.first_non_finite(), Some((1, 0, 1)));
        assert_eq!(a.nan_count(), 1);
        assert!(!a.all_finite());
    }
}
