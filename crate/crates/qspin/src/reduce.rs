//! Deterministic parallel reductions.
//!
//! Every sum over amplitudes in this crate goes through these helpers.
//! The input is split into fixed-size chunks, per-chunk partial sums are
//! computed independently (possibly on different workers) and then folded
//! in chunk-index order. The result is therefore identical no matter how
//! many threads the pool has, which is what makes rerun outputs
//! byte-identical.

use num_complex::Complex64;
use rayon::prelude::*;

/// Chunk length for all deterministic reductions. Fixed: changing it
/// changes rounding and therefore the byte-level output of every pipeline.
pub const CHUNK: usize = 1 << 12;

/// Sum of `f(chunk)` over fixed chunks of `xs`, folded in chunk order.
fn chunked<T, S, F>(xs: &[T], zero: S, f: F) -> S
where
    T: Sync,
    S: Send + std::ops::Add<Output = S>,
    F: Fn(&[T]) -> S + Sync,
{
    xs.par_chunks(CHUNK)
        .map(|c| f(c))
        .collect::<Vec<S>>()
        .into_iter()
        .fold(zero, |a, b| a + b)
}

/// `sum_i conj(a_i) * b_i` with a fixed reduction order.
pub fn dot(a: &[Complex64], b: &[Complex64]) -> Complex64 {
    assert_eq!(a.len(), b.len(), "dot: length mismatch");
    if a.len() < CHUNK {
        return a
            .iter()
            .zip(b)
            .fold(Complex64::ZERO, |s, (x, y)| s + x.conj() * y);
    }
    // Pair chunks of both slices by index.
    a.par_chunks(CHUNK)
        .zip(b.par_chunks(CHUNK))
        .map(|(ca, cb)| {
            ca.iter()
                .zip(cb)
                .fold(Complex64::ZERO, |s, (x, y)| s + x.conj() * y)
        })
        .collect::<Vec<_>>()
        .into_iter()
        .fold(Complex64::ZERO, |a, b| a + b)
}

/// `sum_i |a_i|^2` with a fixed reduction order.
pub fn norm_sqr(a: &[Complex64]) -> f64 {
    chunked(a, 0.0, |c| c.iter().map(|x| x.norm_sqr()).sum::<f64>())
}

pub fn norm(a: &[Complex64]) -> f64 {
    norm_sqr(a).sqrt()
}

/// Weighted sum `sum_i |a_i|^2 w(i)` where `w` sees the global index.
pub fn weighted_norm_sqr<F>(a: &[Complex64], w: F) -> f64
where
    F: Fn(usize) -> f64 + Sync,
{
    a.par_chunks(CHUNK)
        .enumerate()
        .map(|(ci, c)| {
            let base = ci * CHUNK;
            c.iter()
                .enumerate()
                .map(|(i, x)| x.norm_sqr() * w(base + i))
                .sum::<f64>()
        })
        .collect::<Vec<f64>>()
        .into_iter()
        .sum()
}

/// Per-chunk accumulation into a caller-provided accumulator type, folded
/// in chunk order. `acc` must be associative enough for physics but the
/// floating-point fold order is fixed here, not by the scheduler.
pub fn accumulate<A, F, M>(a: &[Complex64], init: A, per_chunk: F, merge: M) -> A
where
    A: Send + Clone + Sync,
    F: Fn(usize, &[Complex64], &mut A) + Sync,
    M: Fn(&mut A, A),
{
    let partials: Vec<A> = a
        .par_chunks(CHUNK)
        .enumerate()
        .map(|(ci, c)| {
            let mut acc = init.clone();
            per_chunk(ci * CHUNK, c, &mut acc);
            acc
        })
        .collect();
    let mut out = init;
    for p in partials {
        merge(&mut out, p);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dot_matches_sequential() {
        let n = 3 * CHUNK + 17;
        let a: Vec<Complex64> = (0..n)
            .map(|i| Complex64::new((i as f64).sin(), (i as f64).cos()))
            .collect();
        let b: Vec<Complex64> = (0..n)
            .map(|i| Complex64::new((i as f64 * 0.7).cos(), 0.1))
            .collect();
        let seq = a
            .iter()
            .zip(&b)
            .fold(Complex64::ZERO, |s, (x, y)| s + x.conj() * y);
        let par = dot(&a, &b);
        assert!((seq - par).norm() < 1e-9 * seq.norm().max(1.0));
        // Determinism: repeated evaluation is bit-identical.
        assert_eq!(par, dot(&a, &b));
    }

    #[test]
    fn norm_of_unit_basis() {
        let mut a = vec![Complex64::ZERO; 1024];
        a[37] = Complex64::new(0.0, 1.0);
        assert_eq!(norm(&a), 1.0);
    }

    #[test]
    fn weighted_sum_sees_global_index() {
        let mut a = vec![Complex64::ZERO; 2 * CHUNK];
        a[CHUNK + 5] = Complex64::new(1.0, 0.0);
        let v = weighted_norm_sqr(&a, |i| i as f64);
        assert_eq!(v, (CHUNK + 5) as f64);
    }
}
