//! Finite simplicial sets, normalized chains, and the interval-cut action.
//!
//! A [`SimplicialSet`] stores one generator table per dimension (the
//! nondegenerate simplices) and a face table for each generator. Arbitrary
//! simplices are [`SimplexRef`]s: a strictly decreasing degeneracy word
//! applied to a nondegenerate generator, the unique normal form guaranteed
//! by the simplicial identities. The face engine pushes dᵢ through a
//! degeneracy word with the rules dᵢsⱼ = sⱼ₋₁dᵢ (i < j), dᵢsⱼ = id
//! (i = j, j+1), dᵢsⱼ = sⱼdᵢ₋₁ (i > j+1), then renormalizes.
//!
//! An arity-r surjection u acts on a normalized n-chain by interval cuts:
//! split {0,…,n} into as many overlapping intervals as u has entries, send
//! the j-th interval to factor u(j), and keep the term when every factor's
//! vertex list is strictly increasing and restricts to a nondegenerate
//! simplex. Every term of one cut sum carries the same sign, the inversion
//! parity of u's sequence.

use crate::algebra::{F2Sum, FormalSum};
use crate::operad::{weakly_increasing_tuples, Surjection};
use num_bigint::BigInt;
use num_traits::Zero;
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SimplicialError {
    #[error("face table shape is wrong for generator {idx} of dimension {dim}")]
    FaceTableShape { dim: usize, idx: usize },
    #[error("face {i} of generator {idx} in dimension {dim} has total dimension {got}, expected {expected}")]
    FaceDimension {
        dim: usize,
        idx: usize,
        i: usize,
        got: usize,
        expected: usize,
    },
    #[error("face {i} of generator {idx} in dimension {dim} points at a missing generator")]
    DanglingFace { dim: usize, idx: usize, i: usize },
    #[error("simplicial identity d{i}d{j} = d{}d{i} fails on generator {idx} of dimension {dim}", j - 1)]
    IdentityViolation {
        dim: usize,
        idx: usize,
        i: usize,
        j: usize,
    },
    #[error("no simplex named {name:?}")]
    UnknownSimplex { name: String },
    #[error("chain mixes simplices of different dimensions")]
    MixedDimensions,
    #[error("unknown space {spec:?}; use delta:n or sphere:n")]
    UnknownSpace { spec: String },
    #[error("chain parse error: {detail}")]
    ChainParse { detail: String },
}

/// A possibly degenerate simplex in normal form: the degeneracy word
/// (strictly decreasing, outermost operator first) applied to generator
/// `idx` of dimension `dim`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SimplexRef {
    pub degeneracies: Vec<usize>,
    pub dim: usize,
    pub idx: usize,
}

impl SimplexRef {
    pub fn nondegenerate(dim: usize, idx: usize) -> Self {
        SimplexRef {
            degeneracies: Vec::new(),
            dim,
            idx,
        }
    }

    pub fn total_dim(&self) -> usize {
        self.dim + self.degeneracies.len()
    }

    pub fn is_degenerate(&self) -> bool {
        !self.degeneracies.is_empty()
    }
}

/// Prepends the operator s_j to a strictly decreasing degeneracy word,
/// renormalizing with sⱼsₑ = sₑ₊₁sⱼ for j ≤ e.
fn insert_degeneracy(word: &mut Vec<usize>, j: usize) {
    let mut pos = 0;
    while pos < word.len() && j <= word[pos] {
        word[pos] += 1;
        pos += 1;
    }
    word.insert(pos, j);
}

/// A formal combination of nondegenerate simplices of one dimension,
/// stored by generator index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Chain {
    pub degree: usize,
    pub terms: FormalSum<usize>,
}

impl Chain {
    pub fn zero(degree: usize) -> Self {
        Chain {
            degree,
            terms: FormalSum::zero(),
        }
    }

    pub fn generator(degree: usize, idx: usize) -> Self {
        Chain {
            degree,
            terms: FormalSum::generator(idx),
        }
    }
}

/// A formal combination of tensor products of nondegenerate simplices;
/// each term lists its factors as (dimension, generator index).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorChain {
    pub arity: usize,
    pub terms: FormalSum<Vec<(usize, usize)>>,
}

impl TensorChain {
    pub fn zero(arity: usize) -> Self {
        TensorChain {
            arity,
            terms: FormalSum::zero(),
        }
    }

    pub fn mod2(&self) -> F2Sum<Vec<(usize, usize)>> {
        self.terms.mod2()
    }
}

/// A finite simplicial set: named nondegenerate generators per dimension
/// plus a face table, validated against the simplicial identities.
#[derive(Clone, Debug)]
pub struct SimplicialSet {
    name: String,
    generators: Vec<Vec<String>>,
    faces: Vec<Vec<Vec<SimplexRef>>>,
}

impl SimplicialSet {
    /// Builds a simplicial set from generator names and face tables.
    /// `faces[d][i]` lists d₀,…,d_d of generator i in dimension d; entries
    /// for dimension 0 must be empty. Construction checks the shape of the
    /// tables and the identity dᵢdⱼ = dⱼ₋₁dᵢ for i < j on every generator.
    pub fn new(
        name: impl Into<String>,
        generators: Vec<Vec<String>>,
        faces: Vec<Vec<Vec<SimplexRef>>>,
    ) -> Result<Self, SimplicialError> {
        let space = SimplicialSet {
            name: name.into(),
            generators,
            faces,
        };
        if space.faces.len() != space.generators.len() {
            return Err(SimplicialError::FaceTableShape {
                dim: space.faces.len(),
                idx: 0,
            });
        }
        for dim in 0..space.generators.len() {
            if space.faces[dim].len() != space.generators[dim].len() {
                return Err(SimplicialError::FaceTableShape {
                    dim,
                    idx: space.faces[dim].len(),
                });
            }
            for idx in 0..space.generators[dim].len() {
                let expected = if dim == 0 { 0 } else { dim + 1 };
                let row = &space.faces[dim][idx];
                if row.len() != expected {
                    return Err(SimplicialError::FaceTableShape { dim, idx });
                }
                for (i, f) in row.iter().enumerate() {
                    if f.total_dim() != dim - 1 {
                        return Err(SimplicialError::FaceDimension {
                            dim,
                            idx,
                            i,
                            got: f.total_dim(),
                            expected: dim - 1,
                        });
                    }
                    let ok = f.dim < space.generators.len()
                        && f.idx < space.generators[f.dim].len()
                        && f.degeneracies.windows(2).all(|w| w[0] > w[1]);
                    if !ok {
                        return Err(SimplicialError::DanglingFace { dim, idx, i });
                    }
                }
            }
        }
        // dᵢdⱼ = dⱼ₋₁dᵢ for i < j, on every generator of dimension ≥ 2.
        for dim in 2..space.generators.len() {
            for idx in 0..space.generators[dim].len() {
                let x = SimplexRef::nondegenerate(dim, idx);
                for j in 1..=dim {
                    for i in 0..j {
                        let lhs = space.face(&space.face(&x, j), i);
                        let rhs = space.face(&space.face(&x, i), j - 1);
                        if lhs != rhs {
                            return Err(SimplicialError::IdentityViolation { dim, idx, i, j });
                        }
                    }
                }
            }
        }
        Ok(space)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// One past the largest dimension carrying generators.
    pub fn dimension_count(&self) -> usize {
        self.generators.len()
    }

    pub fn generator_count(&self, dim: usize) -> usize {
        self.generators.get(dim).map_or(0, |g| g.len())
    }

    pub fn simplex_name(&self, dim: usize, idx: usize) -> &str {
        &self.generators[dim][idx]
    }

    /// Finds a nondegenerate generator by name.
    pub fn lookup(&self, name: &str) -> Result<(usize, usize), SimplicialError> {
        for (dim, names) in self.generators.iter().enumerate() {
            if let Some(idx) = names.iter().position(|n| n == name) {
                return Ok((dim, idx));
            }
        }
        Err(SimplicialError::UnknownSimplex { name: name.into() })
    }

    /// The face dᵢ of an arbitrary simplex, in normal form.
    pub fn face(&self, simplex: &SimplexRef, i: usize) -> SimplexRef {
        let total = simplex.total_dim();
        assert!(total >= 1, "0-simplices have no faces");
        assert!(
            i <= total,
            "face index {i} out of range for dimension {total}"
        );
        let mut i = i;
        let mut emitted: Vec<usize> = Vec::new();
        for (pos, &j) in simplex.degeneracies.iter().enumerate() {
            if i < j {
                emitted.push(j - 1);
            } else if i == j || i == j + 1 {
                // dᵢ cancels this sⱼ; the inner word survives unchanged.
                let mut word = simplex.degeneracies[pos + 1..].to_vec();
                for &e in emitted.iter().rev() {
                    insert_degeneracy(&mut word, e);
                }
                return SimplexRef {
                    degeneracies: word,
                    dim: simplex.dim,
                    idx: simplex.idx,
                };
            } else {
                emitted.push(j);
                i -= 1;
            }
        }
        let stored = &self.faces[simplex.dim][simplex.idx][i];
        let mut word = stored.degeneracies.clone();
        for &e in emitted.iter().rev() {
            insert_degeneracy(&mut word, e);
        }
        SimplexRef {
            degeneracies: word,
            dim: stored.dim,
            idx: stored.idx,
        }
    }

    /// Restricts a nondegenerate generator to a strictly increasing subset
    /// of its vertices by deleting the complement, largest vertex first.
    pub fn restrict(&self, dim: usize, idx: usize, vertices: &[usize]) -> SimplexRef {
        debug_assert!(
            vertices.windows(2).all(|w| w[0] < w[1]),
            "vertices must increase"
        );
        debug_assert!(!vertices.is_empty() && *vertices.last().unwrap() <= dim);
        let mut cur = SimplexRef::nondegenerate(dim, idx);
        for v in (0..=dim).rev() {
            if !vertices.contains(&v) {
                cur = self.face(&cur, v);
            }
        }
        cur
    }

    /// The normalized boundary: alternating faces, degenerate ones dropped.
    pub fn chain_boundary(&self, chain: &Chain) -> Chain {
        if chain.degree == 0 {
            return Chain::zero(0);
        }
        let mut terms = FormalSum::zero();
        for (&idx, c) in chain.terms.iter() {
            let x = SimplexRef::nondegenerate(chain.degree, idx);
            for i in 0..=chain.degree {
                let f = self.face(&x, i);
                if f.is_degenerate() {
                    continue;
                }
                let sign = if i % 2 == 0 { 1 } else { -1 };
                terms.add_term(f.idx, c * sign);
            }
        }
        Chain {
            degree: chain.degree - 1,
            terms,
        }
    }

    /// The boundary of a tensor of chains, mod 2 (no Koszul signs needed).
    pub fn tensor_boundary_mod2(&self, tensor: &TensorChain) -> F2Sum<Vec<(usize, usize)>> {
        let mut out = F2Sum::zero();
        for (factors, c) in tensor.terms.iter() {
            if (c % 2i32).is_zero() {
                continue;
            }
            for (slot, &(dim, idx)) in factors.iter().enumerate() {
                if dim == 0 {
                    continue;
                }
                let x = SimplexRef::nondegenerate(dim, idx);
                for i in 0..=dim {
                    let f = self.face(&x, i);
                    if f.is_degenerate() {
                        continue;
                    }
                    let mut next = factors.clone();
                    next[slot] = (f.dim, f.idx);
                    out.toggle(next);
                }
            }
        }
        out
    }

    /// Applies a surjection to a chain by interval cuts.
    pub fn interval_cut_action(&self, u: &Surjection, chain: &Chain) -> TensorChain {
        let arity = u.arity() as usize;
        let n = chain.degree;
        let sign = BigInt::from(tau_sign(u));
        let mut terms = FormalSum::zero();
        for (&idx, c) in chain.terms.iter() {
            for bounds in interval_cut_bounds(u.len(), n) {
                let Some(factors) = self.cut_factors(u, idx, n, &bounds) else {
                    continue;
                };
                terms.add_term(factors, c * &sign);
            }
        }
        TensorChain { arity, terms }
    }

    /// One cut: gathers each factor's vertices and restricts, returning
    /// None when the term is zero.
    fn cut_factors(
        &self,
        u: &Surjection,
        idx: usize,
        n: usize,
        bounds: &[usize],
    ) -> Option<Vec<(usize, usize)>> {
        let arity = u.arity() as usize;
        let mut factors = Vec::with_capacity(arity);
        for k in 1..=arity as u32 {
            let mut vertices: Vec<usize> = Vec::new();
            for (j, &value) in u.entries().iter().enumerate() {
                if value != k {
                    continue;
                }
                for v in bounds[j]..=bounds[j + 1] {
                    if vertices.last().is_some_and(|&last| last >= v) {
                        return None;
                    }
                    vertices.push(v);
                }
            }
            let restricted = self.restrict(n, idx, &vertices);
            if restricted.is_degenerate() {
                return None;
            }
            factors.push((restricted.dim, restricted.idx));
        }
        Some(factors)
    }

    /// Renders a chain as text, e.g. "01 - 2·02".
    pub fn render_chain(&self, chain: &Chain) -> String {
        chain
            .terms
            .map(|&idx| FormalSum::generator(self.generators[chain.degree][idx].clone()))
            .to_string()
    }

    /// Renders a tensor chain with integer coefficients, e.g.
    /// "- e2 ⊗ e0 ⊗ e2".
    pub fn render_tensor(&self, tensor: &TensorChain) -> String {
        tensor
            .terms
            .map(|factors| FormalSum::generator(self.tensor_name(factors)))
            .to_string()
    }

    /// Renders a tensor chain mod 2.
    pub fn render_tensor_mod2(&self, tensor: &TensorChain) -> String {
        tensor
            .mod2()
            .map(|factors| F2Sum::generator(self.tensor_name(factors)))
            .to_string()
    }

    fn tensor_name(&self, factors: &[(usize, usize)]) -> String {
        factors
            .iter()
            .map(|&(dim, idx)| self.generators[dim][idx].clone())
            .collect::<Vec<_>>()
            .join(" ⊗ ")
    }

    /// Parses a chain like "e2", "01 + 02", or "3·012 - 01"; all terms must
    /// share one dimension.
    pub fn parse_chain(&self, text: &str) -> Result<Chain, SimplicialError> {
        let mut degree: Option<usize> = None;
        let mut terms = FormalSum::zero();
        for (sign, term) in split_signed_terms(text)? {
            let term = term.trim();
            let (coeff, name) = match term.split_once('·').or_else(|| term.split_once('*')) {
                Some((c, n)) => {
                    let c = c
                        .trim()
                        .parse::<i64>()
                        .map_err(|e| SimplicialError::ChainParse {
                            detail: format!("bad coefficient {:?}: {e}", c.trim()),
                        })?;
                    (c, n.trim())
                }
                None => (1, term),
            };
            let (dim, idx) = self.lookup(name)?;
            match degree {
                None => degree = Some(dim),
                Some(d) if d != dim => return Err(SimplicialError::MixedDimensions),
                _ => {}
            }
            terms.add_term(idx, BigInt::from(coeff * sign));
        }
        let degree = degree.ok_or_else(|| SimplicialError::ChainParse {
            detail: "empty chain".into(),
        })?;
        Ok(Chain { degree, terms })
    }
}

/// Splits "a + b - c" into signed terms.
fn split_signed_terms(text: &str) -> Result<Vec<(i64, String)>, SimplicialError> {
    let mut out = Vec::new();
    let mut sign = 1i64;
    let mut cur = String::new();
    let flush = |sign: i64, cur: &mut String, out: &mut Vec<(i64, String)>| {
        let t = cur.trim().to_string();
        if !t.is_empty() {
            out.push((sign, t));
        }
        cur.clear();
    };
    for ch in text.chars() {
        match ch {
            '+' => {
                flush(sign, &mut cur, &mut out);
                sign = 1;
            }
            '-' => {
                flush(sign, &mut cur, &mut out);
                sign = -1;
            }
            _ => cur.push(ch),
        }
    }
    flush(sign, &mut cur, &mut out);
    if out.is_empty() {
        return Err(SimplicialError::ChainParse {
            detail: "empty chain".into(),
        });
    }
    Ok(out)
}

/// The inversion parity of the sequence: the common sign of every term of
/// one interval-cut sum.
pub fn tau_sign(u: &Surjection) -> i8 {
    let seq = u.entries();
    let mut inversions = 0usize;
    for p in 0..seq.len() {
        for q in p + 1..seq.len() {
            if seq[p] > seq[q] {
                inversions += 1;
            }
        }
    }
    if inversions.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// All interval endpoint lists for cutting {0,…,n} into `len` overlapping
/// intervals: bounds[j]..=bounds[j+1] is interval j.
fn interval_cut_bounds(len: usize, n: usize) -> Vec<Vec<usize>> {
    weakly_increasing_tuples(len - 1, 0, n)
        .into_iter()
        .map(|cuts| {
            let mut bounds = Vec::with_capacity(len + 1);
            bounds.push(0);
            bounds.extend(cuts);
            bounds.push(n);
            bounds
        })
        .collect()
}

/// The standard n-simplex Δⁿ, n ≤ 9: one generator per nonempty subset of
/// {0,…,n}, named by concatenating its vertices ("02", "012", …).
pub fn standard_simplex(n: usize) -> SimplicialSet {
    assert!(n <= 9, "single-digit vertex names only");
    let mut subsets: Vec<Vec<Vec<usize>>> = vec![Vec::new(); n + 1];
    // Lexicographic subsets of each size.
    fn gen(start: usize, n: usize, cur: &mut Vec<usize>, out: &mut [Vec<Vec<usize>>]) {
        if !cur.is_empty() {
            out[cur.len() - 1].push(cur.clone());
        }
        for v in start..=n {
            cur.push(v);
            gen(v + 1, n, cur, out);
            cur.pop();
        }
    }
    gen(0, n, &mut Vec::new(), &mut subsets);

    let mut index: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
    for dim_subsets in &subsets {
        for (i, s) in dim_subsets.iter().enumerate() {
            index.insert(s.clone(), i);
        }
    }
    let generators: Vec<Vec<String>> = subsets
        .iter()
        .map(|dim_subsets| {
            dim_subsets
                .iter()
                .map(|s| s.iter().map(|v| v.to_string()).collect::<String>())
                .collect()
        })
        .collect();
    let faces: Vec<Vec<Vec<SimplexRef>>> = subsets
        .iter()
        .enumerate()
        .map(|(dim, dim_subsets)| {
            dim_subsets
                .iter()
                .map(|s| {
                    (0..if dim == 0 { 0 } else { dim + 1 })
                        .map(|i| {
                            let mut t = s.clone();
                            t.remove(i);
                            SimplexRef::nondegenerate(dim - 1, index[&t])
                        })
                        .collect()
                })
                .collect()
        })
        .collect();
    SimplicialSet::new(format!("delta:{n}"), generators, faces)
        .expect("the standard simplex satisfies the simplicial identities")
}

/// The n-sphere with one vertex e0 and one n-cell e{n}; every face of the
/// cell is the fully degenerate simplex over e0.
pub fn sphere(n: usize) -> SimplicialSet {
    assert!(n >= 1, "the sphere model needs dimension at least 1");
    let mut generators = vec![Vec::new(); n + 1];
    generators[0] = vec!["e0".to_string()];
    generators[n] = vec![format!("e{n}")];
    let mut faces = vec![Vec::new(); n + 1];
    faces[0] = vec![Vec::new()];
    let collapsed = SimplexRef {
        degeneracies: (0..n.saturating_sub(1)).rev().collect(),
        dim: 0,
        idx: 0,
    };
    faces[n] = vec![vec![collapsed; n + 1]];
    SimplicialSet::new(format!("sphere:{n}"), generators, faces)
        .expect("the collapsed sphere satisfies the simplicial identities")
}

/// Builds a named space: "delta:n" or "sphere:n".
pub fn builtin(spec: &str) -> Result<SimplicialSet, SimplicialError> {
    let err = || SimplicialError::UnknownSpace { spec: spec.into() };
    let (kind, dim) = spec.split_once(':').ok_or_else(err)?;
    let n: usize = dim.trim().parse().map_err(|_| err())?;
    match kind.trim() {
        "delta" if n <= 9 => Ok(standard_simplex(n)),
        "sphere" if n >= 1 => Ok(sphere(n)),
        _ => Err(err()),
    }
}
