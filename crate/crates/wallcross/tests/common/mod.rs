//! Shared helpers for the integration tests: independent oracle
//! implementations (so library results are checked against a second,
//! structurally different computation), random-data generators, and
//! paths to the bundled data files.
#![allow(dead_code)]

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use num_traits::{One, Zero};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use wallcross::algebra::{Algebra, Element, Parity};
use wallcross::rational::{int, Rational};

/// Deterministic RNG for reproducible randomized tests.
pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Path to a bundled data file at the repository root.
pub fn data_path(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("../../data")
        .join(name)
}

// ---------------------------------------------------------------------------
// Word oracle for graded products.
//
// A monomial is a fully expanded word of generator indices.  Products are
// words concatenated and then bubble-sorted into nondecreasing order,
// flipping the sign every time two odd letters cross; afterwards the word
// is zero if any odd letter repeats or any letter reaches its nilpotency
// order.  This shares no code with the library's inversion-counting
// product.

/// Multiplies two expanded words.  Returns the sorted word and sign, or
/// `None` when the product is zero.
pub fn word_mul(
    odd: &[bool],
    nilpotency: &[Option<u32>],
    a: &[u32],
    b: &[u32],
) -> Option<(Vec<u32>, i64)> {
    let mut word: Vec<u32> = a.iter().chain(b.iter()).copied().collect();
    let mut sign = 1i64;
    let n = word.len();
    for _ in 0..n {
        for j in 1..n {
            if word[j - 1] > word[j] {
                if odd[word[j - 1] as usize] && odd[word[j] as usize] {
                    sign = -sign;
                }
                word.swap(j - 1, j);
            }
        }
    }
    let mut i = 0;
    while i < word.len() {
        let mut j = i;
        while j < word.len() && word[j] == word[i] {
            j += 1;
        }
        let count = (j - i) as u32;
        let g = word[i] as usize;
        if odd[g] && count >= 2 {
            return None;
        }
        if let Some(order) = nilpotency[g] {
            if count >= order {
                return None;
            }
        }
        i = j;
    }
    Some((word, sign))
}

/// An element as a map from expanded words to coefficients.
pub type WordMap = BTreeMap<Vec<u32>, Rational>;

/// Converts a library element into word form.
pub fn element_words(e: &Element) -> WordMap {
    e.terms()
        .map(|(m, c)| {
            let mut word = Vec::new();
            for &(g, k) in m.factors() {
                for _ in 0..k {
                    word.push(g);
                }
            }
            (word, c.clone())
        })
        .collect()
}

/// Multiplies two elements entirely through the word oracle.
pub fn oracle_product(algebra: &Algebra, a: &Element, b: &Element) -> WordMap {
    let odd: Vec<bool> = algebra
        .generators()
        .iter()
        .map(|g| g.parity == Parity::Odd)
        .collect();
    let nilpotency: Vec<Option<u32>> =
        algebra.generators().iter().map(|g| g.nilpotency).collect();
    let mut out = WordMap::new();
    for (wa, ca) in element_words(a) {
        for (wb, cb) in element_words(b) {
            if let Some((word, sign)) = word_mul(&odd, &nilpotency, &wa, &wb) {
                let contribution = &ca * &cb * int(sign);
                let entry = out.entry(word).or_insert_with(Rational::zero);
                *entry += contribution;
            }
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

// ---------------------------------------------------------------------------
// Exact determinant by Gaussian elimination with partial pivoting — the
// independent check for Pfaffians, `Pf(A)² = det(A)`.

pub fn determinant(matrix: &[Vec<Rational>]) -> Rational {
    let n = matrix.len();
    let mut m: Vec<Vec<Rational>> = matrix.to_vec();
    for row in &m {
        assert_eq!(row.len(), n, "determinant needs a square matrix");
    }
    let mut det = Rational::one();
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return Rational::zero();
        };
        if pivot != col {
            m.swap(pivot, col);
            det = -det;
        }
        let p = m[col][col].clone();
        det *= &p;
        for r in col + 1..n {
            if m[r][col].is_zero() {
                continue;
            }
            let factor = &m[r][col] / &p;
            for c in col..n {
                let delta = &factor * &m[col][c];
                m[r][c] = &m[r][c] - &delta;
            }
        }
    }
    det
}

// ---------------------------------------------------------------------------
// Weighted elementary symmetric functions by explicit subset enumeration —
// the independent expansion of a product `Π (mᵢ·u + cᵢ)`.

/// Coefficient of `u^{r-j}` in `Π (mᵢ·u + cᵢ)`: the sum over `j`-element
/// subsets `S` of `Π_{i∈S} cᵢ · Π_{i∉S} mᵢ`.
pub fn weighted_symmetric(
    algebra: &Algebra,
    weights: &[i64],
    classes: &[Element],
    j: usize,
) -> Element {
    assert_eq!(weights.len(), classes.len());
    let r = weights.len();
    let mut out = algebra.zero();
    // Enumerate subsets by bitmask; the factor count never exceeds the
    // small ranks used in tests.
    assert!(r <= 16, "subset enumeration is for small ranks");
    for mask in 0u32..(1 << r) {
        if mask.count_ones() as usize != j {
            continue;
        }
        let mut product = algebra.one();
        for (i, class) in classes.iter().enumerate() {
            if mask & (1 << i) != 0 {
                product = product.mul(class).unwrap();
            } else {
                product = product.scale(&int(weights[i]));
            }
        }
        out = out.add(&product).unwrap();
    }
    out
}

// ---------------------------------------------------------------------------
// Random data.

/// Random antisymmetric matrix with integer entries in `lo..=hi`.
pub fn random_antisymmetric(
    rng: &mut ChaCha8Rng,
    n: usize,
    lo: i64,
    hi: i64,
) -> Vec<Vec<Rational>> {
    let mut m = vec![vec![int(0); n]; n];
    for i in 0..n {
        for j in (i + 1)..n {
            let v = rng.gen_range(lo..=hi);
            m[i][j] = int(v);
            m[j][i] = int(-v);
        }
    }
    m
}

/// Random nonzero integer in `-bound..=bound`.
pub fn random_nonzero(rng: &mut ChaCha8Rng, bound: i64) -> i64 {
    loop {
        let v = rng.gen_range(-bound..=bound);
        if v != 0 {
            return v;
        }
    }
}

/// Random homogeneous degree-two element of an exterior algebra on
/// degree-one generators, with integer coefficients in `-bound..=bound`.
pub fn random_two_form(rng: &mut ChaCha8Rng, algebra: &Algebra, bound: i64) -> Element {
    let labels: Vec<String> = algebra
        .generators()
        .iter()
        .map(|g| g.label.clone())
        .collect();
    let mut out = algebra.zero();
    for i in 0..labels.len() {
        for j in (i + 1)..labels.len() {
            let c = rng.gen_range(-bound..=bound);
            if c == 0 {
                continue;
            }
            let term = algebra
                .monomial_term(&[(&labels[i], 1), (&labels[j], 1)], int(c))
                .unwrap();
            out = out.add(&term).unwrap();
        }
    }
    out
}

/// The two-form `Σ_{i<j} a[i][j]·xᵢxⱼ` of an antisymmetric matrix in the
/// exterior algebra on `x1..xn`.
pub fn pairing_two_form(algebra: &Algebra, a: &[Vec<Rational>]) -> Element {
    let n = a.len();
    let mut out = algebra.zero();
    for i in 0..n {
        for j in (i + 1)..n {
            if a[i][j].is_zero() {
                continue;
            }
            let xi = format!("x{}", i + 1);
            let xj = format!("x{}", j + 1);
            let term = algebra
                .monomial_term(&[(&xi, 1), (&xj, 1)], a[i][j].clone())
                .unwrap();
            out = out.add(&term).unwrap();
        }
    }
    out
}

/// Exterior algebra on `x1..xn` with the standard volume `x1⋯xn ↦ 1`.
pub fn exterior_xn(n: usize) -> Algebra {
    let labels: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
    let refs: Vec<&str> = labels.iter().map(|s| s.as_str()).collect();
    Algebra::exterior(&refs).unwrap()
}
