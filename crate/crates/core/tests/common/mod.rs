//! Generators and independent oracles shared by the integration tests.
//!
//! The determinant oracle here is the Leibniz permutation sum, written against
//! `LaurentPoly` arithmetic only, so it shares no code with the elimination or
//! cofactor routes in the library.

#![allow(dead_code)]

use itertools::Itertools;
use knotproj::{IntMatrix, LaurentMatrix, LaurentPoly, SeifertMatrix};
use num_bigint::BigInt;
use rand::Rng;

pub fn poly(s: &str) -> LaurentPoly {
    s.parse().unwrap()
}

/// Sign of a permutation by counting inversions.
fn perm_sign(p: &[usize]) -> i64 {
    let inversions = (0..p.len())
        .flat_map(|i| (i + 1..p.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| p[i] > p[j])
        .count();
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

/// `det M = sum over permutations s of sign(s) * prod_i M[i][s(i)]`
pub fn leibniz_det(m: &LaurentMatrix) -> LaurentPoly {
    let n = m.size();
    let mut acc = LaurentPoly::zero();
    for p in (0..n).permutations(n) {
        let mut term = LaurentPoly::constant(perm_sign(&p));
        for (i, &j) in p.iter().enumerate() {
            term = &term * m.get(i, j);
        }
        acc = acc + term;
    }
    acc
}

pub fn leibniz_det_int(m: &IntMatrix) -> BigInt {
    let p = leibniz_det(&m.to_laurent());
    p.coeff(0)
}

/// 2x2 presentation `t*A - A^T` for odd q, built by hand and expanded as `ad - bc`.
pub fn cofactor_2x2_class(a: [[i64; 2]; 2]) -> LaurentPoly {
    let entry = |i: usize, j: usize| LaurentPoly::from_i64s(0, &[-a[j][i], a[i][j]]);
    let det = &entry(0, 0) * &entry(1, 1) - &entry(0, 1) * &entry(1, 0);
    det.canonicalize().into_polynomial()
}

pub fn random_poly<R: Rng>(rng: &mut R, coeff: i64, min_exp: i64, span: usize) -> LaurentPoly {
    let offset = rng.gen_range(min_exp..=-min_exp);
    let len = rng.gen_range(0..=span);
    let coeffs: Vec<i64> = (0..len).map(|_| rng.gen_range(-coeff..=coeff)).collect();
    LaurentPoly::from_i64s(offset, &coeffs)
}

/// Random Laurent matrix with entry degree span <= 2 and coefficients in [-3, 3].
pub fn random_laurent_matrix<R: Rng>(rng: &mut R, size: usize) -> LaurentMatrix {
    LaurentMatrix::from_fn(size, |_, _| random_poly(rng, 3, -1, 3))
}

pub fn random_int_matrix<R: Rng>(rng: &mut R, size: usize, bound: i64) -> IntMatrix {
    IntMatrix::from_fn(size, |_, _| BigInt::from(rng.gen_range(-bound..=bound)))
}

/// Valid odd-q Seifert matrix: random symmetric part (entries in [-3, 3]) plus the
/// strictly upper half of the standard skew form, so `A - A^T` is that form.
pub fn random_seifert<R: Rng>(rng: &mut R, size: usize, q: u32) -> SeifertMatrix {
    assert!(size.is_multiple_of(2) && !q.is_multiple_of(2));
    let upper: Vec<i64> = (0..size * size).map(|_| rng.gen_range(-3..=3)).collect();
    let sym = |i: usize, j: usize| upper[i.min(j) * size + i.max(j)];
    let skew_upper = |i: usize, j: usize| i64::from(i.is_multiple_of(2) && j == i + 1);
    let a = IntMatrix::from_fn(size, |i, j| BigInt::from(sym(i, j) + skew_upper(i, j)));
    SeifertMatrix::new(a, q).expect("recipe yields unimodular A - A^T")
}
