//! Seeded generators for test matrices: generic rational matrices, matrices
//! of prescribed rank, unimodular (SL) matrices built from shears, and
//! rational special orthogonal matrices built from Pythagorean rotations.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::matrix::RMatrix;
use crate::oracle::{det_bareiss, rank};
use crate::rational::Rational;

/// Primitive Pythagorean triples `(a, b, c)` with `a² + b² = c²`.
pub const PYTHAGOREAN_TRIPLES: [(i64, i64, i64); 6] = [
    (3, 4, 5),
    (5, 12, 13),
    (8, 15, 17),
    (7, 24, 25),
    (20, 21, 29),
    (9, 40, 41),
];

pub struct MatrixSampler {
    rng: ChaCha8Rng,
}

impl MatrixSampler {
    pub fn new(seed: u64) -> Self {
        MatrixSampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    /// Small integer in `[-bound, bound]`.
    pub fn int(&mut self, bound: i64) -> Rational {
        Rational::from_int(self.rng.gen_range(-bound..=bound))
    }

    /// Mostly small integers, with roughly one entry in four a proper fraction.
    pub fn scalar(&mut self) -> Rational {
        let num = self.rng.gen_range(-9i64..=9);
        let den = if self.rng.gen_bool(0.25) {
            self.rng.gen_range(2i64..=5)
        } else {
            1
        };
        Rational::new(num, den).expect("nonzero denominator")
    }

    pub fn int_matrix(&mut self, rows: usize, cols: usize, bound: i64) -> RMatrix {
        RMatrix::from_fn(rows, cols, |_, _| self.int(bound))
    }

    pub fn rational_matrix(&mut self, rows: usize, cols: usize) -> RMatrix {
        RMatrix::from_fn(rows, cols, |_, _| self.scalar())
    }

    /// Square matrix of order `n` and exact rank `r`.
    pub fn rank_deficient(&mut self, n: usize, r: usize) -> RMatrix {
        assert!(r <= n);
        if r == 0 {
            return RMatrix::zeros(n, n);
        }
        loop {
            let left = self.int_matrix(n, r, 4);
            let right = self.int_matrix(r, n, 4);
            let a = left.mul(&right).expect("conforming factors");
            if rank(&a) == r {
                return a;
            }
        }
    }

    pub fn invertible(&mut self, n: usize) -> RMatrix {
        loop {
            let a = self.rational_matrix(n, n);
            if !det_bareiss(&a).expect("square").is_zero() {
                return a;
            }
        }
    }

    /// Product of random elementary shears `I + t·E_ij`, so `det = 1` exactly.
    pub fn special_linear(&mut self, n: usize) -> RMatrix {
        let mut a = RMatrix::identity(n);
        if n < 2 {
            return a;
        }
        for _ in 0..3 * n {
            let i = self.rng.gen_range(1..=n);
            let mut j = self.rng.gen_range(1..n);
            if j >= i {
                j += 1;
            }
            let t = self.scalar();
            let mut shear = RMatrix::identity(n);
            shear.set(i, j, t);
            a = shear.mul(&a).expect("square");
        }
        a
    }

    /// Rotation by a Pythagorean angle in the `(i, j)` coordinate plane.
    pub fn plane_rotation(&mut self, n: usize, i: usize, j: usize) -> RMatrix {
        let &(x, y, h) = PYTHAGOREAN_TRIPLES
            .choose(&mut self.rng)
            .expect("non-empty");
        let (mut c, mut s) = (x, y);
        if self.rng.gen_bool(0.5) {
            std::mem::swap(&mut c, &mut s);
        }
        if self.rng.gen_bool(0.5) {
            s = -s;
        }
        givens(
            n,
            i,
            j,
            Rational::new(c, h).unwrap(),
            Rational::new(s, h).unwrap(),
        )
    }

    /// Signed permutation matrix with determinant +1.
    pub fn signed_permutation(&mut self, n: usize) -> RMatrix {
        let mut perm: Vec<usize> = (1..=n).collect();
        perm.shuffle(&mut self.rng);
        let mut signs: Vec<i64> = (0..n)
            .map(|_| if self.rng.gen_bool(0.5) { -1 } else { 1 })
            .collect();
        let mut p = RMatrix::from_fn(n, n, |i, j| {
            if perm[i - 1] == j {
                Rational::from_int(signs[i - 1])
            } else {
                Rational::zero()
            }
        });
        if det_bareiss(&p).expect("square").is_negative() && n > 0 {
            signs[0] = -signs[0];
            let j = perm[0];
            p.set(1, j, Rational::from_int(signs[0]));
        }
        p
    }

    /// Rational matrix in SO(n): a signed permutation times several
    /// Pythagorean plane rotations.
    pub fn special_orthogonal(&mut self, n: usize) -> RMatrix {
        let mut a = self.signed_permutation(n);
        if n < 2 {
            return a;
        }
        let steps = self.rng.gen_range(1..=n);
        for _ in 0..steps {
            let i = self.rng.gen_range(1..n);
            let j = self.rng.gen_range(i + 1..=n);
            let g = self.plane_rotation(n, i, j);
            a = g.mul(&a).expect("square");
        }
        a
    }
}

/// Identity except for the `(i, j)` plane, which holds `[[c, -s], [s, c]]`.
pub fn givens(n: usize, i: usize, j: usize, c: Rational, s: Rational) -> RMatrix {
    let mut g = RMatrix::identity(n);
    g.set(i, i, c.clone());
    g.set(j, j, c);
    g.set(i, j, -&s);
    g.set(j, i, s);
    g
}
