//! The sequence operad: degree-graded spaces of nondegenerate surjections.
//!
//! A basis element of arity r and degree d is a map u: {1,…,r+d} ↠ {1,…,r},
//! written as the sequence (u(1),…,u(r+d)), with no two adjacent entries
//! equal. Sequences with adjacent repeats, and non-surjective sequences, are
//! identified with zero. The module provides the differential, the partial
//! compositions u ∘ₖ v, the symmetric group action by value relabeling, and
//! lexicographic bases of each graded piece.
//!
//! Signs are governed by the table arrangement of a sequence: an entry is a
//! caesura when its value occurs again later, and rows are cut after each
//! caesura, so a degree-d sequence has d caesuras and d+1 rows. All integral
//! sign conventions here are validated by d∘d = 0 and the Leibniz rule in the
//! test suites.

use crate::algebra::FormalSum;
use num_bigint::BigInt;
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OperadError {
    #[error("a surjection needs at least one entry")]
    Empty,
    #[error("entry at position {pos} is zero; values are 1-based")]
    InvalidValue { pos: usize },
    #[error("adjacent equal entries at positions {pos} and {}; such sequences are zero", pos + 1)]
    Degenerate { pos: usize },
    #[error("value {missing} never occurs; non-surjective sequences are zero")]
    NotSurjective { missing: u32 },
    #[error("composition slot {slot} is out of range for arity {arity}")]
    InvalidSlot { slot: u32, arity: u32 },
    #[error("relabeling must be a permutation of 1..={arity}")]
    InvalidPermutation { arity: u32 },
    #[error("parse error at byte {offset}: {detail}")]
    Parse { offset: usize, detail: String },
}

/// A nondegenerate surjection (u(1),…,u(n)) onto {1,…,arity}.
///
/// The arity is inferred from the largest value; the degree is n − arity.
/// Ordering is by arity, then lexicographic on the sequence, which fixes the
/// term order of every formal sum built from these.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Surjection {
    arity: u32,
    seq: Vec<u32>,
}

/// A formal integer combination of surjections.
pub type OperadElement = FormalSum<Surjection>;

impl Surjection {
    /// Validates a sequence: nonempty, 1-based, no adjacent repeats, and
    /// surjective onto {1,…,max}.
    pub fn new(seq: Vec<u32>) -> Result<Self, OperadError> {
        if seq.is_empty() {
            return Err(OperadError::Empty);
        }
        if let Some(pos) = seq.iter().position(|&x| x == 0) {
            return Err(OperadError::InvalidValue { pos });
        }
        if let Some(pos) = seq.windows(2).position(|w| w[0] == w[1]) {
            return Err(OperadError::Degenerate { pos });
        }
        let arity = *seq.iter().max().expect("nonempty");
        for v in 1..=arity {
            if !seq.contains(&v) {
                return Err(OperadError::NotSurjective { missing: v });
            }
        }
        Ok(Surjection { arity, seq })
    }

    pub fn arity(&self) -> u32 {
        self.arity
    }

    pub fn degree(&self) -> usize {
        self.seq.len() - self.arity as usize
    }

    pub fn len(&self) -> usize {
        self.seq.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn entries(&self) -> &[u32] {
        &self.seq
    }

    /// The table arrangement: caesura flags, row indices, the rows
    /// themselves, and the deletion sign of each position.
    pub fn table(&self) -> TableArrangement {
        let n = self.seq.len();
        let caesura: Vec<bool> = (0..n)
            .map(|p| self.seq[p + 1..].contains(&self.seq[p]))
            .collect();
        let mut row_of = vec![0usize; n];
        let mut cur = 0;
        for p in 0..n {
            row_of[p] = cur;
            if caesura[p] {
                cur += 1;
            }
        }
        let mut rows: Vec<Vec<u32>> = vec![Vec::new(); cur + 1];
        for p in 0..n {
            rows[row_of[p]].push(self.seq[p]);
        }
        // Deletion signs. A caesura at row i contributes (−1)^i. The final
        // occurrence of a repeated value negates the sign of the occurrence
        // before it (always a caesura). Values occurring once have no sign:
        // deleting them lands in zero.
        let mut signs: Vec<Option<i8>> = vec![None; n];
        for p in 0..n {
            if caesura[p] {
                signs[p] = Some(if row_of[p].is_multiple_of(2) { 1 } else { -1 });
            }
        }
        for p in 0..n {
            if signs[p].is_none() {
                if let Some(prev) = (0..p).rev().find(|&q| self.seq[q] == self.seq[p]) {
                    let s = signs[prev].expect("an earlier occurrence is a caesura");
                    signs[p] = Some(-s);
                }
            }
        }
        TableArrangement {
            rows,
            row_of,
            caesura,
            signs,
        }
    }

    /// The differential: the signed sum over deletions of one entry, with
    /// degenerate and non-surjective results dropped.
    pub fn boundary(&self) -> OperadElement {
        let table = self.table();
        let mut out = FormalSum::zero();
        for (p, sign) in table.signs.iter().enumerate() {
            let Some(s) = *sign else { continue };
            let mut seq = self.seq.clone();
            seq.remove(p);
            let Ok(v) = Surjection::new(seq) else {
                continue;
            };
            debug_assert_eq!(v.arity, self.arity, "signed deletions stay surjective");
            out.add_term(v, BigInt::from(s));
        }
        out
    }

    /// The partial composition self ∘ₖ other, grafting `other` into slot k.
    ///
    /// Each splitting of `other` into as many overlapping pieces as there are
    /// occurrences of k contributes one term; its Koszul sign interleaves the
    /// caesura-count degrees of the spans of `self` between occurrences of k
    /// with those of the pieces.
    pub fn compose(&self, k: u32, other: &Surjection) -> Result<OperadElement, OperadError> {
        if k == 0 || k > self.arity {
            return Err(OperadError::InvalidSlot {
                slot: k,
                arity: self.arity,
            });
        }
        let s = other.arity;
        let occ: Vec<usize> = (0..self.seq.len()).filter(|&p| self.seq[p] == k).collect();
        let n = occ.len();
        let tu = self.table();
        let tv = other.table();

        // Spans of self between consecutive occurrences of k, inclusive on
        // both ends, so adjacent spans share an occurrence.
        let mut span_bounds = Vec::with_capacity(n + 1);
        span_bounds.push((0usize, occ[0]));
        for m in 1..n {
            span_bounds.push((occ[m - 1], occ[m]));
        }
        span_bounds.push((occ[n - 1], self.seq.len() - 1));
        let span_degs: Vec<usize> = span_bounds
            .iter()
            .map(|&(lo, hi)| tu.row_of[hi] - tu.row_of[lo])
            .collect();

        // Koszul shuffle target: span 0, piece 0, span 1, piece 1, …, span n,
        // with pieces indexed n+1..=2n in the degree list.
        let mut order = Vec::with_capacity(2 * n + 1);
        for m in 0..n {
            order.push(m);
            order.push(n + 1 + m);
        }
        order.push(n);

        let mut out = FormalSum::zero();
        for cuts in weakly_increasing_tuples(n - 1, 0, other.seq.len() - 1) {
            let mut bounds = Vec::with_capacity(n + 1);
            bounds.push(0usize);
            bounds.extend(cuts);
            bounds.push(other.seq.len() - 1);

            let mut degs = span_degs.clone();
            degs.extend((0..n).map(|m| tv.row_of[bounds[m + 1]] - tv.row_of[bounds[m]]));
            let sign = koszul_sign(&order, &degs);

            let mut seq = Vec::with_capacity(self.seq.len() + other.seq.len() - 1);
            let mut piece = 0;
            for &x in &self.seq {
                if x == k {
                    for &y in &other.seq[bounds[piece]..=bounds[piece + 1]] {
                        seq.push(y + k - 1);
                    }
                    piece += 1;
                } else if x > k {
                    seq.push(x + s - 1);
                } else {
                    seq.push(x);
                }
            }
            // Degenerate or non-surjective assemblies are zero; with both
            // inputs valid this never fires, but dropping is the correct
            // behavior regardless.
            let Ok(w) = Surjection::new(seq) else {
                continue;
            };
            if w.arity == self.arity + s - 1 {
                out.add_term(w, BigInt::from(sign));
            }
        }
        Ok(out)
    }

    /// The symmetric group action: relabel every entry x to perm[x−1].
    /// `perm` must list 1..=arity in some order.
    pub fn symmetric_action(&self, perm: &[u32]) -> Result<Surjection, OperadError> {
        if perm.len() != self.arity as usize {
            return Err(OperadError::InvalidPermutation { arity: self.arity });
        }
        let mut seen = vec![false; self.arity as usize];
        for &v in perm {
            if v == 0 || v > self.arity || seen[v as usize - 1] {
                return Err(OperadError::InvalidPermutation { arity: self.arity });
            }
            seen[v as usize - 1] = true;
        }
        let seq = self.seq.iter().map(|&x| perm[x as usize - 1]).collect();
        Ok(Surjection::new(seq).expect("relabeling preserves validity"))
    }
}

impl fmt::Display for Surjection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.seq.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

impl FromStr for Surjection {
    type Err = OperadError;

    /// Parses "(3,1,2,3,1)"; the parentheses and interior whitespace are
    /// optional.
    fn from_str(input: &str) -> Result<Self, Self::Err> {
        let trimmed = input.trim();
        let offset_base = input.len() - input.trim_start().len();
        let inner = match (trimmed.strip_prefix('('), trimmed.strip_suffix(')')) {
            (Some(_), None) | (None, Some(_)) => {
                return Err(OperadError::Parse {
                    offset: offset_base,
                    detail: "unbalanced parentheses".into(),
                })
            }
            (Some(body), Some(_)) => &body[..body.len() - 1],
            (None, None) => trimmed,
        };
        if inner.trim().is_empty() {
            return Err(OperadError::Empty);
        }
        let mut seq = Vec::new();
        let inner_base = offset_base + (trimmed.len() - inner.len()) / 2;
        let mut cursor = inner_base;
        for part in inner.split(',') {
            let value = part.trim().parse::<u32>().map_err(|e| OperadError::Parse {
                offset: cursor,
                detail: format!("bad entry {:?}: {e}", part.trim()),
            })?;
            seq.push(value);
            cursor += part.len() + 1;
        }
        Surjection::new(seq)
    }
}

/// The table arrangement of one surjection; see [`Surjection::table`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableArrangement {
    /// The entries split into rows, one cut after each caesura.
    pub rows: Vec<Vec<u32>>,
    /// Row index of each position.
    pub row_of: Vec<usize>,
    /// Whether each position is a caesura (its value occurs again later).
    pub caesura: Vec<bool>,
    /// Deletion sign of each position; None when deletion lands in zero.
    pub signs: Vec<Option<i8>>,
}

/// Linear extension of [`Surjection::boundary`].
pub fn boundary_element(element: &OperadElement) -> OperadElement {
    element.map(|u| u.boundary())
}

/// Bilinear extension of [`Surjection::compose`].
pub fn compose_sum(
    left: &OperadElement,
    k: u32,
    right: &OperadElement,
) -> Result<OperadElement, OperadError> {
    let mut out = FormalSum::zero();
    for (u, cu) in left.iter() {
        for (v, cv) in right.iter() {
            for (w, cw) in u.compose(k, v)?.iter() {
                out.add_term(w.clone(), cu * cv * cw);
            }
        }
    }
    Ok(out)
}

/// Linear extension of [`Surjection::symmetric_action`].
pub fn symmetric_action_sum(
    element: &OperadElement,
    perm: &[u32],
) -> Result<OperadElement, OperadError> {
    let mut out = FormalSum::zero();
    for (u, c) in element.iter() {
        out.add_term(u.symmetric_action(perm)?, c.clone());
    }
    Ok(out)
}

/// The lexicographically ordered basis of arity `arity` and degree `degree`.
pub fn basis(arity: u32, degree: usize) -> Vec<Surjection> {
    let len = arity as usize + degree;
    let mut out = Vec::new();
    if arity == 0 {
        return out;
    }
    let mut cur = Vec::with_capacity(len);
    let mut seen = vec![false; arity as usize + 1];
    gen_basis(arity, len, arity as usize, &mut cur, &mut seen, &mut out);
    out
}

fn gen_basis(
    arity: u32,
    len: usize,
    missing: usize,
    cur: &mut Vec<u32>,
    seen: &mut [bool],
    out: &mut Vec<Surjection>,
) {
    if missing > len - cur.len() {
        return;
    }
    if cur.len() == len {
        out.push(Surjection {
            arity,
            seq: cur.clone(),
        });
        return;
    }
    for v in 1..=arity {
        if cur.last() == Some(&v) {
            continue;
        }
        let fresh = !seen[v as usize];
        seen[v as usize] = true;
        cur.push(v);
        gen_basis(arity, len, missing - usize::from(fresh), cur, seen, out);
        cur.pop();
        if fresh {
            seen[v as usize] = false;
        }
    }
}

/// Koszul sign of reading `degs` in the order `order`: each transposed pair
/// of odd degrees contributes a factor −1.
fn koszul_sign(order: &[usize], degs: &[usize]) -> i8 {
    let mut sign = 1i8;
    for i in 0..order.len() {
        for j in i + 1..order.len() {
            if order[i] > order[j] && degs[order[i]] % 2 == 1 && degs[order[j]] % 2 == 1 {
                sign = -sign;
            }
        }
    }
    sign
}

/// All weakly increasing tuples of the given length with entries in
/// lo..=hi, in lexicographic order. The empty tuple is the sole length-0
/// output.
pub(crate) fn weakly_increasing_tuples(len: usize, lo: usize, hi: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if len == 0 {
        out.push(Vec::new());
        return out;
    }
    if lo > hi {
        return out;
    }
    let mut cur = Vec::with_capacity(len);
    gen_tuples(len, lo, hi, &mut cur, &mut out);
    out
}

fn gen_tuples(len: usize, lo: usize, hi: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if cur.len() == len {
        out.push(cur.clone());
        return;
    }
    for v in lo..=hi {
        cur.push(v);
        gen_tuples(len, v, hi, cur, out);
        cur.pop();
    }
}
