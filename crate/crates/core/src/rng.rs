//! Seeded randomness for basis choices and test inputs.

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use crate::linalg::{Matrix, C64};

pub struct Rng {
    inner: ChaCha8Rng,
}

impl Rng {
    pub fn new(seed: u64) -> Self {
        Self {
            inner: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    /// Derives an independent stream, e.g. one per group or per check.
    pub fn derive(seed: u64, stream: u64) -> Self {
        let mut inner = ChaCha8Rng::seed_from_u64(seed);
        inner.set_stream(stream);
        Self { inner }
    }

    /// Uniform in `[0, 1)`.
    pub fn unit(&mut self) -> f64 {
        (self.inner.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Uniform in `[-1, 1)`.
    pub fn symmetric(&mut self) -> f64 {
        2.0 * self.unit() - 1.0
    }

    pub fn below(&mut self, n: usize) -> usize {
        (self.inner.next_u64() % n as u64) as usize
    }

    pub fn complex(&mut self) -> C64 {
        C64::new(self.symmetric(), self.symmetric())
    }

    pub fn matrix(&mut self, rows: usize, cols: usize) -> Matrix {
        Matrix::from_fn(rows, cols, |_, _| self.complex())
    }

    pub fn hermitian(&mut self, n: usize) -> Matrix {
        let a = self.matrix(n, n);
        &a + &a.adjoint()
    }

    /// Unitary factor of the QR decomposition of a random matrix.
    pub fn unitary(&mut self, n: usize) -> Matrix {
        let a = self.matrix(n, n);
        Matrix::from_inner(a.inner().clone().qr().q())
    }
}
