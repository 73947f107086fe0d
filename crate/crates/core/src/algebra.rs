//! Formal linear combinations and exact linear algebra over GF(2).
//!
//! [`FormalSum`] is a free module over the integers on an ordered generator
//! type; [`F2Sum`] is its reduction mod 2 (a set with symmetric difference as
//! addition). [`F2Matrix`] provides deterministic Gauss-Jordan elimination:
//! rank, a particular solution with free variables set to zero, and a kernel
//! basis, always pivoting on the leftmost available column so that repeated
//! runs produce identical output.

use num_bigint::BigInt;
use num_traits::Zero;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("dimension mismatch: matrix has {rows} rows but right-hand side has {rhs}")]
    DimensionMismatch { rows: usize, rhs: usize },
    #[error("inconsistent linear system: no solution exists")]
    Inconsistent,
}

/// A finite integer linear combination of generators.
///
/// Zero coefficients are never stored, so structural equality is equality of
/// elements. Generators are kept in a `BTreeMap`, which fixes a deterministic
/// term order everywhere (printing, iteration, matrix assembly).
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct FormalSum<G: Ord> {
    terms: BTreeMap<G, BigInt>,
}

impl<G: Ord> FormalSum<G> {
    pub fn zero() -> Self {
        FormalSum {
            terms: BTreeMap::new(),
        }
    }

    /// The sum consisting of a single generator with coefficient one.
    pub fn generator(g: G) -> Self {
        let mut s = Self::zero();
        s.add_term(g, BigInt::from(1));
        s
    }

    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (G, BigInt)>,
    {
        let mut s = Self::zero();
        for (g, c) in terms {
            s.add_term(g, c);
        }
        s
    }

    /// Adds `c · g`, removing the entry if the total coefficient cancels.
    pub fn add_term(&mut self, g: G, c: BigInt) {
        use std::collections::btree_map::Entry;
        if c.is_zero() {
            return;
        }
        match self.terms.entry(g) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, g: &G) -> BigInt {
        self.terms.get(g).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&G, &BigInt)> {
        self.terms.iter()
    }

    /// Reduction mod 2: the set of generators with odd coefficient.
    pub fn mod2(&self) -> F2Sum<G>
    where
        G: Clone,
    {
        let mut out = F2Sum::zero();
        for (g, c) in &self.terms {
            if (c % 2i32) != BigInt::zero() {
                out.toggle(g.clone());
            }
        }
        out
    }

    /// Linear extension of a map on generators.
    pub fn map<H: Ord, F>(&self, mut f: F) -> FormalSum<H>
    where
        F: FnMut(&G) -> FormalSum<H>,
    {
        let mut out = FormalSum::zero();
        for (g, c) in &self.terms {
            for (h, d) in f(g).terms {
                out.add_term(h, c * d);
            }
        }
        out
    }

    pub fn scaled(&self, c: i64) -> Self
    where
        G: Clone,
    {
        let mut out = Self::zero();
        for (g, coeff) in &self.terms {
            out.add_term(g.clone(), coeff * c);
        }
        out
    }
}

impl<G: Ord + Clone> std::ops::Add for FormalSum<G> {
    type Output = FormalSum<G>;

    fn add(mut self, rhs: FormalSum<G>) -> FormalSum<G> {
        for (g, c) in rhs.terms {
            self.add_term(g, c);
        }
        self
    }
}

impl<G: Ord + Clone> std::ops::Sub for FormalSum<G> {
    type Output = FormalSum<G>;

    fn sub(mut self, rhs: FormalSum<G>) -> FormalSum<G> {
        for (g, c) in rhs.terms {
            self.add_term(g, -c);
        }
        self
    }
}

impl<G: Ord + Clone> std::ops::Neg for FormalSum<G> {
    type Output = FormalSum<G>;

    fn neg(self) -> FormalSum<G> {
        self.scaled(-1)
    }
}

impl<G: Ord + fmt::Display> fmt::Display for FormalSum<G> {
    /// Renders `a - b + 3·c`; the zero sum renders as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let one = BigInt::from(1);
        for (i, (g, c)) in self.terms.iter().enumerate() {
            let neg = c < &BigInt::zero();
            let abs = if neg { -c.clone() } else { c.clone() };
            if i == 0 {
                if neg {
                    write!(f, "- ")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if abs != one {
                write!(f, "{abs}·")?;
            }
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

/// A finite GF(2) linear combination of generators, stored as the set of
/// generators with coefficient one. Addition is symmetric difference.
#[derive(Clone, Debug, PartialEq, Eq, Default, PartialOrd, Ord)]
pub struct F2Sum<G: Ord> {
    terms: BTreeSet<G>,
}

impl<G: Ord> F2Sum<G> {
    pub fn zero() -> Self {
        F2Sum {
            terms: BTreeSet::new(),
        }
    }

    pub fn generator(g: G) -> Self {
        let mut s = Self::zero();
        s.toggle(g);
        s
    }

    pub fn from_generators<I: IntoIterator<Item = G>>(gens: I) -> Self {
        let mut s = Self::zero();
        for g in gens {
            s.toggle(g);
        }
        s
    }

    /// Adds `g` mod 2 (inserts it, or removes it if already present).
    pub fn toggle(&mut self, g: G) {
        if !self.terms.remove(&g) {
            self.terms.insert(g);
        }
    }

    pub fn contains(&self, g: &G) -> bool {
        self.terms.contains(g)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &G> {
        self.terms.iter()
    }

    /// Linear extension of a map on generators (everything mod 2).
    pub fn map<H: Ord, F>(&self, mut f: F) -> F2Sum<H>
    where
        F: FnMut(&G) -> F2Sum<H>,
    {
        let mut out = F2Sum::zero();
        for g in &self.terms {
            for h in f(g).terms {
                out.toggle(h);
            }
        }
        out
    }
}

impl<G: Ord + Clone> std::ops::Add for F2Sum<G> {
    type Output = F2Sum<G>;

    fn add(mut self, rhs: F2Sum<G>) -> F2Sum<G> {
        for g in rhs.terms {
            self.toggle(g);
        }
        self
    }
}

impl<G: Ord + fmt::Display> fmt::Display for F2Sum<G> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, g) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

/// The result of solving `M x = b` over GF(2).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct F2Solution {
    /// One solution, with every free variable set to zero.
    pub particular: Vec<bool>,
    /// A basis of the kernel of `M`, one vector per free column, in column order.
    pub kernel: Vec<Vec<bool>>,
    pub rank: usize,
}

/// A dense bit matrix over GF(2) with row-major 64-bit packing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct F2Matrix {
    rows: usize,
    cols: usize,
    words_per_row: usize,
    data: Vec<u64>,
}

impl F2Matrix {
    pub fn new(rows: usize, cols: usize) -> Self {
        let words_per_row = cols.div_ceil(64).max(1);
        F2Matrix {
            rows,
            cols,
            words_per_row,
            data: vec![0; rows * words_per_row],
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn set(&mut self, r: usize, c: usize, value: bool) {
        assert!(r < self.rows && c < self.cols, "index out of range");
        let w = r * self.words_per_row + c / 64;
        let bit = 1u64 << (c % 64);
        if value {
            self.data[w] |= bit;
        } else {
            self.data[w] &= !bit;
        }
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        assert!(r < self.rows && c < self.cols, "index out of range");
        self.data[r * self.words_per_row + c / 64] >> (c % 64) & 1 == 1
    }

    fn xor_rows(&mut self, target: usize, source: usize) {
        let w = self.words_per_row;
        let (t, s) = (target * w, source * w);
        for i in 0..w {
            let v = self.data[s + i];
            self.data[t + i] ^= v;
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        let w = self.words_per_row;
        for i in 0..w {
            self.data.swap(a * w + i, b * w + i);
        }
    }

    /// Reduces a copy to reduced row echelon form with leftmost pivots.
    /// Returns the pivot columns in order.
    fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(pivot_row) = (row..self.rows).find(|&r| self.get(r, col)) else {
                continue;
            };
            self.swap_rows(row, pivot_row);
            for r in 0..self.rows {
                if r != row && self.get(r, col) {
                    self.xor_rows(r, row);
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().rref().len()
    }

    /// Solves `M x = rhs`, returning a particular solution (free variables
    /// zero) together with a deterministic kernel basis.
    pub fn solve(&self, rhs: &[bool]) -> Result<F2Solution, AlgebraError> {
        if rhs.len() != self.rows {
            return Err(AlgebraError::DimensionMismatch {
                rows: self.rows,
                rhs: rhs.len(),
            });
        }
        // Augment with the right-hand side as an extra column.
        let mut aug = F2Matrix::new(self.rows, self.cols + 1);
        for (r, &bit) in rhs.iter().enumerate() {
            for w in 0..self.words_per_row {
                aug.data[r * aug.words_per_row + w] = self.data[r * self.words_per_row + w];
            }
            aug.set(r, self.cols, bit);
        }
        let mut pivots = aug.rref();
        // A pivot in the augmented column means the system is inconsistent.
        if pivots.last() == Some(&self.cols) {
            return Err(AlgebraError::Inconsistent);
        }
        pivots.retain(|&c| c < self.cols);
        let rank = pivots.len();

        let mut particular = vec![false; self.cols];
        for (i, &c) in pivots.iter().enumerate() {
            particular[c] = aug.get(i, self.cols);
        }

        let pivot_set: BTreeSet<usize> = pivots.iter().copied().collect();
        let mut kernel = Vec::new();
        for free in (0..self.cols).filter(|c| !pivot_set.contains(c)) {
            let mut vec = vec![false; self.cols];
            vec[free] = true;
            for (i, &c) in pivots.iter().enumerate() {
                vec[c] = aug.get(i, free);
            }
            kernel.push(vec);
        }
        Ok(F2Solution {
            particular,
            kernel,
            rank,
        })
    }

    /// Applies the matrix to a vector.
    pub fn apply(&self, x: &[bool]) -> Vec<bool> {
        assert_eq!(x.len(), self.cols, "dimension mismatch");
        (0..self.rows)
            .map(|r| {
                let mut acc = false;
                for (c, &xc) in x.iter().enumerate() {
                    if xc && self.get(r, c) {
                        acc = !acc;
                    }
                }
                acc
            })
            .collect()
    }
}
