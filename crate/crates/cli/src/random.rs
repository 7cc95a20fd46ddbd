//! Seeded generators for randomized cross-checks.

use nearbi_core::bimodule::{self, Bimodule};
use nearbi_core::scalar::int;
use nearbi_core::{fixtures, Algebra, Comultiplication, Matrix, Tensor2, Tensor3};
use rand::seq::IndexedRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub type Gen = ChaCha8Rng;

pub fn generator(seed: u64) -> Gen {
    ChaCha8Rng::seed_from_u64(seed)
}

fn nonzero_coefficient(rng: &mut Gen) -> i64 {
    *[-2i64, -1, 1, 2].choose(rng).expect("nonempty")
}

/// At most `entries` random nonzero integer coefficients.
pub fn sparse_tensor3(rng: &mut Gen, dim: usize, entries: usize) -> Tensor3 {
    let mut t = Tensor3::zeros(dim);
    for _ in 0..rng.random_range(0..=entries) {
        let (i, j, k) = (
            rng.random_range(0..dim),
            rng.random_range(0..dim),
            rng.random_range(0..dim),
        );
        t.add_at(i, j, k, &int(nonzero_coefficient(rng)));
    }
    t
}

fn scaled(t: &Tensor3, s: i64) -> Tensor3 {
    t.scale(&int(s))
}

/// Structure tensors of dimension at most `max_dim`. A third are scaled
/// copies of small fixtures so that every predicate sees both verdicts.
pub fn algebra(rng: &mut Gen, max_dim: usize) -> Algebra {
    let seeded: Vec<Algebra> = [fixtures::nal4(), fixtures::lr3()]
        .into_iter()
        .filter(|a| a.dim() <= max_dim)
        .collect();
    if !seeded.is_empty() && rng.random_bool(1.0 / 3.0) {
        let a = seeded.choose(rng).expect("nonempty");
        return Algebra::new(scaled(a.constants(), nonzero_coefficient(rng)));
    }
    let dim = rng.random_range(1..=max_dim);
    Algebra::new(sparse_tensor3(rng, dim, 5))
}

pub fn comultiplication(rng: &mut Gen, max_dim: usize) -> Comultiplication {
    if rng.random_bool(0.25) {
        let c = if max_dim >= 4 { fixtures::co4() } else { Comultiplication::zero(max_dim) };
        return c.scale(&int(nonzero_coefficient(rng)));
    }
    let dim = rng.random_range(1..=max_dim);
    Comultiplication::new(sparse_tensor3(rng, dim, 5))
}

/// Skew tensor with each pair `i < j` filled with probability `density`.
pub fn skew(rng: &mut Gen, dim: usize, density: f64) -> Tensor2 {
    let mut r = Tensor2::zeros(dim);
    for i in 0..dim {
        for j in i + 1..dim {
            if rng.random_bool(density) {
                let c = int(nonzero_coefficient(rng));
                r.set(j, i, -c.clone());
                r.set(i, j, c);
            }
        }
    }
    r
}

fn sparse_matrix(rng: &mut Gen, m: usize) -> Matrix {
    let mut out = Matrix::zeros(m, m);
    for _ in 0..rng.random_range(0..=m) {
        let (p, q) = (rng.random_range(0..m), rng.random_range(0..m));
        out.set(p, q, int(nonzero_coefficient(rng)));
    }
    out
}

/// Bimodules over `a`: adjoint, coadjoint, zero, or sparse random actions.
pub fn bimodule(rng: &mut Gen, a: &Algebra) -> Bimodule {
    match rng.random_range(0..4) {
        0 => Bimodule::adjoint(a),
        1 => bimodule::dual_bimodule(&Bimodule::adjoint(a)),
        2 => {
            let m = rng.random_range(1..=3);
            Bimodule::zero(a, m)
        }
        _ => {
            let m = rng.random_range(1..=3);
            let n = a.dim();
            let l = (0..n).map(|_| sparse_matrix(rng, m)).collect();
            let r = (0..n).map(|_| sparse_matrix(rng, m)).collect();
            Bimodule::new(a.clone(), m, l, r).expect("dimensions agree")
        }
    }
}

/// `base` with one or two coefficients changed.
pub fn perturbed(rng: &mut Gen, base: &Comultiplication) -> Comultiplication {
    let n = base.dim();
    let mut t = base.tensor().clone();
    for _ in 0..rng.random_range(1..=2) {
        let (i, j, k) = (
            rng.random_range(0..n),
            rng.random_range(0..n),
            rng.random_range(0..n),
        );
        t.add_at(i, j, k, &int(nonzero_coefficient(rng)));
    }
    Comultiplication::new(t)
}

/// `a ⊕ k^extra` with the extra directions annihilating everything.
pub fn pad(a: &Algebra, extra: usize) -> Algebra {
    let n = a.dim() + extra;
    let mut t = Tensor3::zeros(n);
    for (i, j, k, c) in a.constants().support() {
        t.set(i, j, k, c.clone());
    }
    Algebra::new(t)
}
