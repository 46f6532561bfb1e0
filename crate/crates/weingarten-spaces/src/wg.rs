//! Exact Gram and Weingarten matrices.
//!
//! The Gram matrix of a category on a word is `G(pi, sigma) = N^|pi v sigma|`
//! over the enumerated single-row members; the Weingarten matrix is its exact
//! inverse. No floating point anywhere: small dimensions make Gram matrices
//! violently ill-conditioned, and the tests demand exact identities.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num::{BigInt, BigRational, One, Zero};

use crate::category::{enumerate, CategoryId};
use crate::error::{Error, Result};
use crate::partition::{ColoredWord, Partition};

pub type Rational = BigRational;

pub fn rat_int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// Exact `base^exp` with the convention `0^0 = 1`.
pub fn rat_pow(base: u64, exp: usize) -> Rational {
    if exp == 0 {
        return Rational::one();
    }
    Rational::from_integer(BigInt::from(base).pow(exp as u32))
}

#[derive(Clone, Debug)]
pub struct GramMatrix {
    pub category: CategoryId,
    pub word: ColoredWord,
    pub dim: u64,
    pub partitions: Arc<Vec<Partition>>,
    pub entries: Vec<Vec<Rational>>,
}

#[derive(Clone, Debug)]
pub struct WeingartenMatrix {
    pub category: CategoryId,
    pub word: ColoredWord,
    pub dim: u64,
    pub partitions: Arc<Vec<Partition>>,
    pub entries: Vec<Vec<Rational>>,
}

impl GramMatrix {
    pub fn size(&self) -> usize {
        self.partitions.len()
    }
}

impl WeingartenMatrix {
    pub fn size(&self) -> usize {
        self.partitions.len()
    }

    pub fn entry(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i][j]
    }
}

/// Gram matrix of a category on a word at dimension `n`. An empty category
/// gives the 0x0 matrix.
pub fn gram(cat: CategoryId, word: &ColoredWord, n: u64) -> Result<GramMatrix> {
    let parts = enumerate(cat, word)?;
    let size = parts.len();
    let mut entries = vec![vec![Rational::zero(); size]; size];
    for i in 0..size {
        for j in i..size {
            let join = parts[i].join(&parts[j])?;
            let v = rat_pow(n, join.block_count());
            entries[i][j] = v.clone();
            entries[j][i] = v;
        }
    }
    Ok(GramMatrix {
        category: cat,
        word: word.clone(),
        dim: n,
        partitions: parts,
        entries,
    })
}

/// Exact Gauss-Jordan inverse. Returns None when singular.
fn invert(matrix: &[Vec<Rational>]) -> Option<Vec<Vec<Rational>>> {
    let n = matrix.len();
    let mut a: Vec<Vec<Rational>> = matrix.to_vec();
    let mut inv: Vec<Vec<Rational>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { Rational::one() } else { Rational::zero() })
                .collect()
        })
        .collect();
    for col in 0..n {
        let pivot_row = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot_row);
        inv.swap(col, pivot_row);
        let pivot = a[col][col].clone();
        for j in 0..n {
            a[col][j] /= pivot.clone();
            inv[col][j] /= pivot.clone();
        }
        for row in 0..n {
            if row != col && !a[row][col].is_zero() {
                let factor = a[row][col].clone();
                for j in 0..n {
                    let av = a[col][j].clone() * factor.clone();
                    a[row][j] -= av;
                    let iv = inv[col][j].clone() * factor.clone();
                    inv[row][j] -= iv;
                }
            }
        }
    }
    Some(inv)
}

type WgKey = (CategoryId, ColoredWord, u64);

fn wg_cache() -> &'static Mutex<HashMap<WgKey, Arc<WeingartenMatrix>>> {
    static CACHE: OnceLock<Mutex<HashMap<WgKey, Arc<WeingartenMatrix>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Weingarten matrix: exact inverse of the Gram matrix, memoized by
/// (category, word, dimension). Singular Gram matrices are an error; the
/// integration formula has no meaning for them.
pub fn weingarten(cat: CategoryId, word: &ColoredWord, n: u64) -> Result<Arc<WeingartenMatrix>> {
    let key = (cat, word.clone(), n);
    if let Some(hit) = wg_cache().lock().unwrap().get(&key) {
        return Ok(hit.clone());
    }
    let g = gram(cat, word, n)?;
    let entries = invert(&g.entries).ok_or(Error::SingularGram {
        category: cat,
        word: word.clone(),
        dim: n,
    })?;
    let w = Arc::new(WeingartenMatrix {
        category: cat,
        word: g.word,
        dim: n,
        partitions: g.partitions,
        entries,
    });
    wg_cache().lock().unwrap().insert(key, w.clone());
    Ok(w)
}

/// Pivots of the symmetric elimination, in order. All positive exactly when
/// the matrix is positive definite.
pub fn leading_pivots(matrix: &[Vec<Rational>]) -> Option<Vec<Rational>> {
    let n = matrix.len();
    let mut a = matrix.to_vec();
    let mut pivots = Vec::with_capacity(n);
    for col in 0..n {
        let pivot = a[col][col].clone();
        if pivot.is_zero() {
            return None;
        }
        pivots.push(pivot.clone());
        for row in col + 1..n {
            let factor = a[row][col].clone() / pivot.clone();
            for j in col..n {
                let v = a[col][j].clone() * factor.clone();
                a[row][j] -= v;
            }
        }
    }
    Some(pivots)
}
