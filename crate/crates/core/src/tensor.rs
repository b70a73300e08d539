//! Small dense tensors of order three and four.

use crate::scalar::Real;

#[derive(Clone, Debug, PartialEq)]
pub struct Tensor3<T> {
    pub n: usize,
    pub data: Vec<T>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Tensor4<T> {
    pub n: usize,
    pub data: Vec<T>,
}

impl<T: Real> Tensor3<T> {
    pub fn zeros(n: usize) -> Self {
        Tensor3 {
            n,
            data: vec![T::zero(); n * n * n],
        }
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize, k: usize) -> T {
        self.data[(i * self.n + j) * self.n + k]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, k: usize, v: T) {
        self.data[(i * self.n + j) * self.n + k] = v;
    }

    pub fn amax(&self) -> T {
        amax(&self.data)
    }

    pub fn max_abs_diff(&self, other: &Self) -> T {
        max_abs_diff(&self.data, &other.data)
    }
}

impl<T: Real> Tensor4<T> {
    pub fn zeros(n: usize) -> Self {
        Tensor4 {
            n,
            data: vec![T::zero(); n * n * n * n],
        }
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize, k: usize, l: usize) -> T {
        self.data[((i * self.n + j) * self.n + k) * self.n + l]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, k: usize, l: usize, v: T) {
        self.data[((i * self.n + j) * self.n + k) * self.n + l] = v;
    }

    pub fn amax(&self) -> T {
        amax(&self.data)
    }
}

fn amax<T: Real>(d: &[T]) -> T {
    d.iter().fold(T::zero(), |m, v| m.max(v.abs()))
}

fn max_abs_diff<T: Real>(a: &[T], b: &[T]) -> T {
    a.iter()
        .zip(b.iter())
        .fold(T::zero(), |m, (x, y)| m.max((*x - *y).abs()))
}
