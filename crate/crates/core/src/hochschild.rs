//! Finite graded algebras over GF(2), their Hochschild homology, and the
//! evaluation of sequence-operad operations on simplicial cochains.
//!
//! A [`GradedAlgebra`] is given by a finite basis with degrees and a
//! multiplication table; construction validates degree additivity, the unit
//! laws, and associativity. [`HochschildComplex`] builds the normalized
//! cyclic bar complex C_{s,n} = A ⊗ Ā⊗ⁿ (s the internal degree, n the bar
//! length), whose boundary merges adjacent tensor factors and wraps the last
//! factor onto the head. Merged products landing in a bar slot drop their
//! unit component; the head slot keeps it. The boundary preserves s and
//! lowers n, so homology classes are graded by q = s − n.
//!
//! On the simplicial side, [`op_apply`] turns a surjection into a cochain
//! operation: the value of u(a₁,…,a_r) on a simplex is the pairing of
//! a₁⊗…⊗a_r with the interval-cut expansion of that simplex. Cup and cup-one
//! products are the arity-2 specializations. [`PsiContext`] packages the
//! comparison map that sends a Hochschild class of the cohomology of the
//! 2-sphere to a cochain on the sphere model: bar length 0 evaluates to the
//! dual cochain, length 1 to a cup-one product, and length 2 through a
//! degree-2 primitive of the sequence operad.

use crate::algebra::F2Sum;
use crate::operad::Surjection;
use crate::simplicial::{Chain, SimplicialSet};
use num_traits::Zero;
use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum HochschildError {
    #[error("duplicate generator name {name:?}")]
    DuplicateGenerator { name: String },
    #[error("generator name {name:?} contains a reserved character")]
    ReservedCharacter { name: String },
    #[error("multiplication table shape does not match the generator list")]
    MultShape,
    #[error("product of generators {i} and {j} is not degree-additive")]
    DegreeMismatch { i: usize, j: usize },
    #[error("the unit element must be a nonzero combination of degree-0 generators")]
    UnitDegree,
    #[error("unit law fails on generator {name:?}")]
    UnitLaw { name: String },
    #[error("associativity fails on generators ({i}, {j}, {k})")]
    NotAssociative { i: usize, j: usize, k: usize },
    #[error("algebra parse error on line {line}: {detail}")]
    AlgebraParse { line: usize, detail: String },
    #[error("no generator flagged as the unit; add \"unit\" to one basis line")]
    MissingUnit,
    #[error("unknown generator {name:?}")]
    UnknownGenerator { name: String },
    #[error("the unit of {name:?} is not a single generator, so bar words cannot be normalized")]
    UnitNotGenerator { name: String },
    #[error("truncation {got} is too small; homology in this degree needs at least {needed}")]
    TruncationTooSmall { needed: usize, got: usize },
    #[error("the algebra is not commutative, so the commutative augmentation is undefined")]
    NotCommutative,
    #[error("bar length {length} is out of range; this map is defined up to length 2")]
    BarLengthTooLarge { length: usize },
    #[error("the element is not a cycle")]
    NotACycle,
    #[error("generator {name:?} of degree {degree} has no simplex of that dimension")]
    NoMatchingSimplex { name: String, degree: usize },
}

/// A finite graded algebra over GF(2): named basis generators with degrees,
/// a distinguished unit element, and a multiplication table. Construction
/// verifies degree additivity, both unit laws, and associativity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedAlgebra {
    name: String,
    generators: Vec<(String, usize)>,
    unit: F2Sum<usize>,
    mult: Vec<Vec<F2Sum<usize>>>,
}

impl GradedAlgebra {
    pub fn new(
        name: impl Into<String>,
        generators: Vec<(String, usize)>,
        unit: F2Sum<usize>,
        mult: Vec<Vec<F2Sum<usize>>>,
    ) -> Result<Self, HochschildError> {
        let alg = GradedAlgebra {
            name: name.into(),
            generators,
            unit,
            mult,
        };
        alg.validate()?;
        Ok(alg)
    }

    fn validate(&self) -> Result<(), HochschildError> {
        for (i, (name, _)) in self.generators.iter().enumerate() {
            if self.generators[..i].iter().any(|(other, _)| other == name) {
                return Err(HochschildError::DuplicateGenerator { name: name.clone() });
            }
        }
        let g = self.generators.len();
        if self.mult.len() != g || self.mult.iter().any(|row| row.len() != g) {
            return Err(HochschildError::MultShape);
        }
        for i in 0..g {
            for j in 0..g {
                let expected = self.generators[i].1 + self.generators[j].1;
                for &k in self.mult[i][j].iter() {
                    if self.generators.get(k).map(|(_, d)| *d) != Some(expected) {
                        return Err(HochschildError::DegreeMismatch { i, j });
                    }
                }
            }
        }
        if self.unit.is_zero() || self.unit.iter().any(|&k| self.generators[k].1 != 0) {
            return Err(HochschildError::UnitDegree);
        }
        for j in 0..g {
            let x = F2Sum::generator(j);
            if self.mul(&self.unit, &x) != x || self.mul(&x, &self.unit) != x {
                return Err(HochschildError::UnitLaw {
                    name: self.generators[j].0.clone(),
                });
            }
        }
        for i in 0..g {
            for j in 0..g {
                let ij = self.mult[i][j].clone();
                for k in 0..g {
                    let left = self.mul(&ij, &F2Sum::generator(k));
                    let right = self.mul(&F2Sum::generator(i), &self.mult[j][k]);
                    if left != right {
                        return Err(HochschildError::NotAssociative { i, j, k });
                    }
                }
            }
        }
        Ok(())
    }

    /// Parses the text form: one basis line "name degree" per generator,
    /// the unit line flagged "name 0 unit", then product lines "a*b = c+d"
    /// (right side "0" for a vanishing product). Products of the unit are
    /// filled in automatically; all other omitted products default to 0.
    /// '#' starts a comment.
    pub fn parse(name: impl Into<String>, text: &str) -> Result<Self, HochschildError> {
        let mut generators: Vec<(String, usize)> = Vec::new();
        let mut unit_idx: Option<usize> = None;
        let mut products: Vec<(usize, String, String)> = Vec::new();
        for (line_idx, raw) in text.lines().enumerate() {
            let line_no = line_idx + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            if let Some((lhs, rhs)) = line.split_once('=') {
                products.push((line_no, lhs.trim().to_string(), rhs.trim().to_string()));
                continue;
            }
            let mut parts = line.split_whitespace();
            let gen_name = parts.next().expect("nonempty line");
            if gen_name.contains(['*', '=', '#']) {
                return Err(HochschildError::ReservedCharacter {
                    name: gen_name.into(),
                });
            }
            let degree: usize = parts
                .next()
                .ok_or_else(|| HochschildError::AlgebraParse {
                    line: line_no,
                    detail: "expected \"name degree\"".into(),
                })?
                .parse()
                .map_err(|e| HochschildError::AlgebraParse {
                    line: line_no,
                    detail: format!("bad degree: {e}"),
                })?;
            match parts.next() {
                None => {}
                Some("unit") => {
                    if unit_idx.is_some() {
                        return Err(HochschildError::AlgebraParse {
                            line: line_no,
                            detail: "a second generator is flagged as the unit".into(),
                        });
                    }
                    unit_idx = Some(generators.len());
                }
                Some(extra) => {
                    return Err(HochschildError::AlgebraParse {
                        line: line_no,
                        detail: format!("unexpected token {extra:?}"),
                    })
                }
            }
            generators.push((gen_name.to_string(), degree));
        }
        let unit_idx = unit_idx.ok_or(HochschildError::MissingUnit)?;
        let index: BTreeMap<&str, usize> = generators
            .iter()
            .enumerate()
            .map(|(i, (n, _))| (n.as_str(), i))
            .collect();
        let g = generators.len();
        let mut mult = vec![vec![F2Sum::zero(); g]; g];
        for (j, row) in mult.iter_mut().enumerate() {
            row[unit_idx] = F2Sum::generator(j);
        }
        for (j, slot) in mult[unit_idx].iter_mut().enumerate() {
            *slot = F2Sum::generator(j);
        }
        let lookup = |line: usize, name: &str| {
            index
                .get(name.trim())
                .copied()
                .ok_or_else(|| HochschildError::AlgebraParse {
                    line,
                    detail: format!("unknown generator {:?}", name.trim()),
                })
        };
        for (line_no, lhs, rhs) in products {
            let (a, b) = lhs
                .split_once('*')
                .ok_or_else(|| HochschildError::AlgebraParse {
                    line: line_no,
                    detail: "expected \"a*b = ...\"".into(),
                })?;
            let (a, b) = (lookup(line_no, a)?, lookup(line_no, b)?);
            let mut value = F2Sum::zero();
            if rhs.trim() != "0" {
                for part in rhs.split('+') {
                    value.toggle(lookup(line_no, part)?);
                }
            }
            mult[a][b] = value;
        }
        GradedAlgebra::new(name, generators, F2Sum::generator(unit_idx), mult)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn generator_count(&self) -> usize {
        self.generators.len()
    }

    pub fn generator_name(&self, i: usize) -> &str {
        &self.generators[i].0
    }

    pub fn generator_degree(&self, i: usize) -> usize {
        self.generators[i].1
    }

    pub fn find(&self, name: &str) -> Result<usize, HochschildError> {
        self.generators
            .iter()
            .position(|(n, _)| n == name)
            .ok_or_else(|| HochschildError::UnknownGenerator { name: name.into() })
    }

    pub fn unit(&self) -> &F2Sum<usize> {
        &self.unit
    }

    /// The unit when it is a single basis generator; bar normalization
    /// requires this.
    pub fn unit_generator(&self) -> Option<usize> {
        let mut it = self.unit.iter();
        match (it.next(), it.next()) {
            (Some(&g), None) => Some(g),
            _ => None,
        }
    }

    /// Bilinear multiplication of GF(2) combinations of generators.
    pub fn mul(&self, a: &F2Sum<usize>, b: &F2Sum<usize>) -> F2Sum<usize> {
        let mut out = F2Sum::zero();
        for &i in a.iter() {
            for &j in b.iter() {
                for &k in self.mult[i][j].iter() {
                    out.toggle(k);
                }
            }
        }
        out
    }

    pub fn is_commutative(&self) -> bool {
        let g = self.generators.len();
        (0..g).all(|i| (0..g).all(|j| self.mult[i][j] == self.mult[j][i]))
    }

    pub fn render_element(&self, e: &F2Sum<usize>) -> String {
        if e.is_zero() {
            return "0".into();
        }
        e.iter()
            .map(|&i| self.generators[i].0.clone())
            .collect::<Vec<_>>()
            .join(" + ")
    }

    pub fn render_word(&self, w: &BarWord) -> String {
        w.entries
            .iter()
            .map(|&i| self.generators[i].0.clone())
            .collect::<Vec<_>>()
            .join(" ⊗ ")
    }

    pub fn render_class(&self, e: &F2Sum<BarWord>) -> String {
        if e.is_zero() {
            return "0".into();
        }
        e.iter()
            .map(|w| self.render_word(w))
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

/// A basis word a₀ ⊗ a₁ ⊗ … ⊗ a_n of the bar complex, stored as generator
/// indices; the bar length is n.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BarWord {
    pub entries: Vec<usize>,
}

impl BarWord {
    pub fn new(entries: Vec<usize>) -> Self {
        assert!(!entries.is_empty(), "a bar word has a head entry");
        BarWord { entries }
    }

    pub fn bar_length(&self) -> usize {
        self.entries.len() - 1
    }
}

/// The normalized cyclic bar complex of a graded algebra, truncated at a
/// maximum bar length.
#[derive(Clone, Debug)]
pub struct HochschildComplex {
    algebra: GradedAlgebra,
    truncation: usize,
    unit: usize,
}

impl HochschildComplex {
    pub fn new(algebra: GradedAlgebra, truncation: usize) -> Result<Self, HochschildError> {
        let unit = algebra
            .unit_generator()
            .ok_or_else(|| HochschildError::UnitNotGenerator {
                name: algebra.name().into(),
            })?;
        Ok(HochschildComplex {
            algebra,
            truncation,
            unit,
        })
    }

    pub fn algebra(&self) -> &GradedAlgebra {
        &self.algebra
    }

    pub fn truncation(&self) -> usize {
        self.truncation
    }

    /// The basis of C_{s,n}: words with internal degree sum s and bar length
    /// n, head entry unrestricted, bar entries distinct from the unit, in
    /// lexicographic order.
    pub fn basis_words(&self, s: usize, n: usize) -> Vec<BarWord> {
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(n + 1);
        self.gen_words(s, n, 0, &mut cur, &mut out);
        out
    }

    fn gen_words(
        &self,
        s: usize,
        n: usize,
        used: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<BarWord>,
    ) {
        if cur.len() == n + 1 {
            if used == s {
                out.push(BarWord::new(cur.clone()));
            }
            return;
        }
        for g in 0..self.algebra.generator_count() {
            if !cur.is_empty() && g == self.unit {
                continue;
            }
            let d = self.algebra.generator_degree(g);
            if used + d > s {
                continue;
            }
            cur.push(g);
            self.gen_words(s, n, used + d, cur, out);
            cur.pop();
        }
    }

    /// The bar boundary of one word: merge each adjacent pair, plus the
    /// wrap-around product of the last entry onto the head. Merges landing
    /// in a bar slot drop the unit component of the product; the head slot
    /// keeps it.
    pub fn boundary_word(&self, w: &BarWord) -> F2Sum<BarWord> {
        let n = w.bar_length();
        let mut out = F2Sum::zero();
        if n == 0 {
            return out;
        }
        for i in 0..n {
            let prod = &self.algebra.mult[w.entries[i]][w.entries[i + 1]];
            for &g in prod.iter() {
                if i > 0 && g == self.unit {
                    continue;
                }
                let mut entries = Vec::with_capacity(n);
                entries.extend_from_slice(&w.entries[..i]);
                entries.push(g);
                entries.extend_from_slice(&w.entries[i + 2..]);
                out.toggle(BarWord::new(entries));
            }
        }
        let wrap = &self.algebra.mult[w.entries[n]][w.entries[0]];
        for &g in wrap.iter() {
            let mut entries = Vec::with_capacity(n);
            entries.push(g);
            entries.extend_from_slice(&w.entries[1..n]);
            out.toggle(BarWord::new(entries));
        }
        out
    }

    /// Linear extension of [`Self::boundary_word`].
    pub fn boundary_sum(&self, e: &F2Sum<BarWord>) -> F2Sum<BarWord> {
        e.map(|w| self.boundary_word(w))
    }

    /// A basis of homology classes in total degree q (classes of internal
    /// degree s and bar length n with s − n = q), listed by ascending bar
    /// length. Computes every bar length the truncation can certify, which
    /// requires truncation ≥ q + 2.
    pub fn hh_basis(&self, q: usize) -> Result<Vec<F2Sum<BarWord>>, HochschildError> {
        if self.truncation < q + 2 {
            return Err(HochschildError::TruncationTooSmall {
                needed: q + 2,
                got: self.truncation,
            });
        }
        let mut classes = Vec::new();
        for n in 0..=self.truncation - 2 {
            let s = n + q;
            let cols = self.basis_words(s, n);
            if cols.is_empty() {
                continue;
            }
            let col_index: BTreeMap<&BarWord, usize> =
                cols.iter().enumerate().map(|(i, w)| (w, i)).collect();
            // Kernel of the boundary out of (s, n).
            let rows = if n == 0 {
                Vec::new()
            } else {
                self.basis_words(s, n - 1)
            };
            let row_index: BTreeMap<&BarWord, usize> =
                rows.iter().enumerate().map(|(i, w)| (w, i)).collect();
            let mut matrix = crate::algebra::F2Matrix::new(rows.len(), cols.len());
            for (c, w) in cols.iter().enumerate() {
                for target in self.boundary_word(w).iter() {
                    let r = *row_index
                        .get(target)
                        .expect("boundary stays in the complex");
                    matrix.set(r, c, true);
                }
            }
            let kernel = matrix
                .solve(&vec![false; rows.len()])
                .expect("the zero system is consistent")
                .kernel;
            // Image of the boundary from (s, n+1), reduced into echelon form.
            let mut reducer = Echelon::new();
            for w in self.basis_words(s, n + 1) {
                let mut v = vec![false; cols.len()];
                for target in self.boundary_word(&w).iter() {
                    let c = *col_index
                        .get(target)
                        .expect("boundary stays in the complex");
                    v[c] = !v[c];
                }
                let _ = reducer.insert(v);
            }
            for v in kernel {
                if let Some(reduced) = reducer.insert(v) {
                    let mut class = F2Sum::zero();
                    for (c, &bit) in reduced.iter().enumerate() {
                        if bit {
                            class.toggle(cols[c].clone());
                        }
                    }
                    classes.push(class);
                }
            }
        }
        Ok(classes)
    }

    /// The commutative augmentation: projection onto the bar-length-0 part.
    /// Only defined when the algebra is commutative.
    pub fn augmentation(&self, e: &F2Sum<BarWord>) -> Result<F2Sum<BarWord>, HochschildError> {
        if !self.algebra.is_commutative() {
            return Err(HochschildError::NotCommutative);
        }
        let mut out = F2Sum::zero();
        for w in e.iter() {
            if w.bar_length() == 0 {
                out.toggle(w.clone());
            }
        }
        Ok(out)
    }
}

/// A growing reduced echelon basis over GF(2). `insert` returns the fully
/// reduced vector when it is independent of everything inserted so far.
struct Echelon {
    rows: Vec<Vec<bool>>,
}

impl Echelon {
    fn new() -> Self {
        Echelon { rows: Vec::new() }
    }

    fn insert(&mut self, mut v: Vec<bool>) -> Option<Vec<bool>> {
        for row in &self.rows {
            let p = row.iter().position(|&b| b).expect("rows are nonzero");
            if v[p] {
                for (vi, ri) in v.iter_mut().zip(row) {
                    *vi ^= ri;
                }
            }
        }
        let pivot = v.iter().position(|&b| b)?;
        for row in &mut self.rows {
            if row[pivot] {
                for (ri, vi) in row.iter_mut().zip(&v) {
                    *ri ^= vi;
                }
            }
        }
        self.rows.push(v.clone());
        self.rows.sort_by_key(|r| r.iter().position(|&b| b));
        Some(v)
    }
}

/// A GF(2) cochain on one simplicial set: the set of nondegenerate
/// generators of the given dimension on which it evaluates to 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cochain {
    pub degree: usize,
    pub support: F2Sum<usize>,
}

impl Cochain {
    pub fn zero(degree: usize) -> Self {
        Cochain {
            degree,
            support: F2Sum::zero(),
        }
    }

    pub fn dual(degree: usize, idx: usize) -> Self {
        Cochain {
            degree,
            support: F2Sum::generator(idx),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.support.is_zero()
    }
}

impl fmt::Display for Cochain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "degree-{} cochain on {} generators",
            self.degree,
            self.support.len()
        )
    }
}

/// The cochain operation of a surjection: the value of u(a₁,…,a_r) on a
/// simplex is the mod-2 pairing of a₁⊗…⊗a_r with the interval-cut expansion
/// of the simplex. The result lives in degree Σ|aᵢ| − degree(u); operations
/// pushed below degree 0 are zero.
pub fn op_apply(space: &SimplicialSet, u: &Surjection, args: &[Cochain]) -> Cochain {
    assert_eq!(
        u.arity() as usize,
        args.len(),
        "arity must match the argument count"
    );
    let total: usize = args.iter().map(|a| a.degree).sum();
    let Some(degree) = total.checked_sub(u.degree()) else {
        return Cochain::zero(0);
    };
    let mut support = F2Sum::zero();
    for idx in 0..space.generator_count(degree) {
        let cut = space.interval_cut_action(u, &Chain::generator(degree, idx));
        let mut parity = false;
        for (factors, c) in cut.terms.iter() {
            if (c % 2i32).is_zero() {
                continue;
            }
            let matches = factors
                .iter()
                .zip(args)
                .all(|(&(fd, fi), a)| fd == a.degree && a.support.contains(&fi));
            if matches {
                parity = !parity;
            }
        }
        if parity {
            support.toggle(idx);
        }
    }
    Cochain { degree, support }
}

/// The cup product of two cochains.
pub fn cup(space: &SimplicialSet, a: &Cochain, b: &Cochain) -> Cochain {
    let u = Surjection::new(vec![1, 2]).expect("(1,2) is valid");
    op_apply(space, &u, &[a.clone(), b.clone()])
}

/// The cup-one product of two cochains.
pub fn cup1(space: &SimplicialSet, a: &Cochain, b: &Cochain) -> Cochain {
    let u = Surjection::new(vec![1, 2, 1]).expect("(1,2,1) is valid");
    op_apply(space, &u, &[a.clone(), b.clone()])
}

/// The simplicial coboundary of a cochain.
pub fn coboundary(space: &SimplicialSet, a: &Cochain) -> Cochain {
    let degree = a.degree + 1;
    let mut support = F2Sum::zero();
    for idx in 0..space.generator_count(degree) {
        let b = space.chain_boundary(&Chain::generator(degree, idx));
        let mut parity = false;
        for (i, c) in b.terms.iter() {
            if (c % 2i32).is_zero() {
                continue;
            }
            if a.support.contains(i) {
                parity = !parity;
            }
        }
        if parity {
            support.toggle(idx);
        }
    }
    Cochain { degree, support }
}

/// The cochain algebra of a finite simplicial set, truncated above
/// `max_degree`: one generator per nondegenerate simplex dual, cup product
/// via front/back restriction, unit the sum of all vertex duals. Products
/// landing above the truncation are zero.
pub fn cochain_algebra(space: &SimplicialSet, max_degree: usize) -> GradedAlgebra {
    let mut generators: Vec<(String, usize)> = Vec::new();
    let mut lookup: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for dim in 0..=max_degree.min(space.dimension_count().saturating_sub(1)) {
        for idx in 0..space.generator_count(dim) {
            lookup.insert((dim, idx), generators.len());
            generators.push((format!("{}*", space.simplex_name(dim, idx)), dim));
        }
    }
    let mut unit = F2Sum::zero();
    for idx in 0..space.generator_count(0) {
        unit.toggle(lookup[&(0, idx)]);
    }
    let g = generators.len();
    let mut mult = vec![vec![F2Sum::zero(); g]; g];
    for (&(da, ia), &gi) in &lookup {
        for (&(db, ib), &gj) in &lookup {
            let total = da + db;
            if total > max_degree {
                continue;
            }
            let mut value = F2Sum::zero();
            for idx in 0..space.generator_count(total) {
                let front: Vec<usize> = (0..=da).collect();
                let back: Vec<usize> = (da..=total).collect();
                let f = space.restrict(total, idx, &front);
                let b = space.restrict(total, idx, &back);
                if !f.is_degenerate() && !b.is_degenerate() && f.idx == ia && b.idx == ib {
                    value.toggle(lookup[&(total, idx)]);
                }
            }
            mult[gi][gj] = value;
        }
    }
    GradedAlgebra::new(format!("{} cochains", space.name()), generators, unit, mult)
        .expect("the truncated cochain algebra is associative and unital")
}

/// The evaluation context for the comparison map on the 2-sphere: the
/// sphere model, the two-generator cohomology algebra, a degree-2 primitive
/// of the sequence operad, and the dual simplex of each algebra generator.
#[derive(Clone, Debug)]
pub struct PsiContext {
    space: SimplicialSet,
    algebra: GradedAlgebra,
    primitive: Vec<Surjection>,
    gen_to_simplex: Vec<(usize, usize)>,
}

/// The cohomology of the 2-sphere as an abstract algebra: generators 1 and
/// a, with a·a = 0.
pub fn sphere2_algebra() -> GradedAlgebra {
    GradedAlgebra::parse("sphere2-cohomology", "1 0 unit\na 2\na*a = 0\n")
        .expect("the two-generator algebra is valid")
}

impl PsiContext {
    /// Builds a context over a space and algebra by matching each algebra
    /// generator to the unique simplex generator of its degree.
    pub fn new(
        space: SimplicialSet,
        algebra: GradedAlgebra,
        primitive: Vec<Surjection>,
    ) -> Result<Self, HochschildError> {
        let mut gen_to_simplex = Vec::with_capacity(algebra.generator_count());
        for g in 0..algebra.generator_count() {
            let degree = algebra.generator_degree(g);
            if space.generator_count(degree) != 1 {
                return Err(HochschildError::NoMatchingSimplex {
                    name: algebra.generator_name(g).into(),
                    degree,
                });
            }
            gen_to_simplex.push((degree, 0));
        }
        Ok(PsiContext {
            space,
            algebra,
            primitive,
            gen_to_simplex,
        })
    }

    /// The standard context: the one-vertex 2-sphere with its cohomology
    /// algebra and a chosen degree-2 primitive.
    pub fn for_sphere2(primitive: Vec<Surjection>) -> Self {
        Self::new(crate::simplicial::sphere(2), sphere2_algebra(), primitive)
            .expect("the sphere model matches its cohomology")
    }

    pub fn space(&self) -> &SimplicialSet {
        &self.space
    }

    pub fn algebra(&self) -> &GradedAlgebra {
        &self.algebra
    }

    pub fn primitive(&self) -> &[Surjection] {
        &self.primitive
    }

    /// The dual cochain of an algebra generator.
    pub fn dual(&self, g: usize) -> Cochain {
        let (dim, idx) = self.gen_to_simplex[g];
        Cochain::dual(dim, idx)
    }

    /// The chain-level formula of the comparison map on one bar word:
    /// length 0 is the dual cochain, length 1 the cup-one product, length 2
    /// the sum of the primitive's operations. Defined up to length 2.
    pub fn eval_word(&self, entries: &[usize]) -> Result<Cochain, HochschildError> {
        let args: Vec<Cochain> = entries.iter().map(|&g| self.dual(g)).collect();
        match entries.len() - 1 {
            0 => Ok(args[0].clone()),
            1 => Ok(cup1(&self.space, &args[0], &args[1])),
            2 => {
                let mut sum: Option<Cochain> = None;
                for u in &self.primitive {
                    let term = op_apply(&self.space, u, &args);
                    sum = Some(match sum {
                        None => term,
                        Some(prev) => merge(prev, term),
                    });
                }
                Ok(sum.unwrap_or_else(|| Cochain::zero(0)))
            }
            n => Err(HochschildError::BarLengthTooLarge { length: n }),
        }
    }

    /// Evaluates the comparison map on a Hochschild cycle of bar length at
    /// most 2.
    pub fn psi_eval(
        &self,
        complex: &HochschildComplex,
        cycle: &F2Sum<BarWord>,
    ) -> Result<Cochain, HochschildError> {
        if !complex.boundary_sum(cycle).is_zero() {
            return Err(HochschildError::NotACycle);
        }
        let mut acc: Option<Cochain> = None;
        for word in cycle.iter() {
            let value = self.eval_word(&word.entries)?;
            acc = Some(match acc {
                None => value,
                Some(prev) => merge(prev, value),
            });
        }
        Ok(acc.unwrap_or_else(|| Cochain::zero(0)))
    }

    /// The coefficient of the top cell in a cochain.
    pub fn eval_fundamental(&self, c: &Cochain) -> bool {
        let top = self.space.dimension_count() - 1;
        c.degree == top && c.support.contains(&0)
    }

    /// The pairing of the primitive with a triple of algebra generators:
    /// the top-cell coefficient of the length-2 operation on their duals.
    pub fn pairing3(&self, gens: [usize; 3]) -> bool {
        let c = self.eval_word(&gens).expect("length 2 is in range");
        self.eval_fundamental(&c)
    }
}

/// Adds two cochains mod 2; a zero cochain is absorbed regardless of its
/// nominal degree.
fn merge(a: Cochain, b: Cochain) -> Cochain {
    if a.is_zero() {
        return b;
    }
    if b.is_zero() {
        return a;
    }
    assert_eq!(
        a.degree, b.degree,
        "cannot add cochains of different degrees"
    );
    Cochain {
        degree: a.degree,
        support: a.support + b.support,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplicial::{builtin, sphere, standard_simplex};

    fn surj(text: &str) -> Surjection {
        text.parse().unwrap()
    }

    fn truncated_polynomial() -> GradedAlgebra {
        GradedAlgebra::parse(
            "truncated-polynomial",
            "1 0 unit\nx 2\ny 4\nx*x = y\nx*y = 0\ny*x = 0\ny*y = 0\n",
        )
        .unwrap()
    }

    fn involution_algebra() -> GradedAlgebra {
        GradedAlgebra::parse("involution", "1 0 unit\ng 0\ng*g = 1\n").unwrap()
    }

    #[test]
    fn parse_fills_unit_products() {
        let alg = sphere2_algebra();
        let one = F2Sum::generator(0);
        let a = F2Sum::generator(1);
        assert_eq!(alg.mul(&one, &a), a);
        assert_eq!(alg.mul(&a, &one), a);
        assert_eq!(alg.mul(&a, &a), F2Sum::zero());
        assert_eq!(alg.unit_generator(), Some(0));
        assert!(alg.is_commutative());
    }

    #[test]
    fn construction_rejects_bad_tables() {
        assert!(matches!(
            GradedAlgebra::parse("bad", "1 0 unit\np 1\np*p = p\n"),
            Err(HochschildError::DegreeMismatch { .. })
        ));
        assert!(matches!(
            GradedAlgebra::parse(
                "bad",
                "1 0 unit\np 1\nq 2\np*p = q\np*q = 0\nq*p = p\nq*q = 0\n"
            ),
            Err(HochschildError::DegreeMismatch { .. })
        ));
        assert!(matches!(
            GradedAlgebra::parse("bad", "p 1\n"),
            Err(HochschildError::MissingUnit)
        ));
        assert!(matches!(
            GradedAlgebra::parse("bad", "1 0 unit\n1 0\n"),
            Err(HochschildError::DuplicateGenerator { .. })
        ));
    }

    #[test]
    fn construction_rejects_non_associative_products() {
        // (pp)p = qp = p but p(pp) = pq = 0.
        let text = "1 0 unit\np 0\nq 0\np*p = q\np*q = 0\nq*p = p\nq*q = 0\n";
        assert!(matches!(
            GradedAlgebra::parse("bad", text),
            Err(HochschildError::NotAssociative { .. })
        ));
    }

    #[test]
    fn cochain_algebra_of_the_interval() {
        let alg = cochain_algebra(&standard_simplex(1), 1);
        let v0 = alg.find("0*").unwrap();
        let v1 = alg.find("1*").unwrap();
        let e = alg.find("01*").unwrap();
        let g = |i| F2Sum::generator(i);
        assert_eq!(alg.mul(&g(v0), &g(v0)), g(v0));
        assert_eq!(alg.mul(&g(v1), &g(v1)), g(v1));
        assert_eq!(alg.mul(&g(v0), &g(v1)), F2Sum::zero());
        assert_eq!(alg.mul(&g(v1), &g(v0)), F2Sum::zero());
        assert_eq!(alg.mul(&g(v0), &g(e)), g(e));
        assert_eq!(alg.mul(&g(e), &g(v1)), g(e));
        assert_eq!(alg.mul(&g(v1), &g(e)), F2Sum::zero());
        assert_eq!(alg.mul(&g(e), &g(v0)), F2Sum::zero());
        assert!(
            alg.unit_generator().is_none(),
            "the interval unit is a sum of vertex duals"
        );
        assert!(!alg.is_commutative());
    }

    #[test]
    fn cochain_algebra_of_the_sphere_is_the_two_generator_algebra() {
        let alg = cochain_algebra(&sphere(2), 2);
        assert_eq!(alg.generator_count(), 2);
        assert_eq!(alg.unit_generator(), Some(0));
        let a = F2Sum::generator(1);
        assert_eq!(alg.mul(&a, &a), F2Sum::zero());
        assert_eq!(alg.generator_degree(1), 2);
    }

    #[test]
    fn cup_product_agrees_with_the_interval_cut_form() {
        let space = standard_simplex(2);
        let alg = cochain_algebra(&space, 2);
        for i in 0..alg.generator_count() {
            for j in 0..alg.generator_count() {
                let a = Cochain::dual(alg.generator_degree(i), dual_index(&space, &alg, i));
                let b = Cochain::dual(alg.generator_degree(j), dual_index(&space, &alg, j));
                let via_cuts = cup(&space, &a, &b);
                let table = &alg.mult[i][j];
                let expected: F2Sum<usize> = table
                    .iter()
                    .map(|&k| dual_index(&space, &alg, k))
                    .collect::<Vec<_>>()
                    .into_iter()
                    .fold(F2Sum::zero(), |mut acc, idx| {
                        acc.toggle(idx);
                        acc
                    });
                if via_cuts.is_zero() {
                    assert!(expected.is_zero(), "generators {i},{j}");
                } else {
                    assert_eq!(via_cuts.support, expected, "generators {i},{j}");
                    assert_eq!(
                        via_cuts.degree,
                        alg.generator_degree(i) + alg.generator_degree(j)
                    );
                }
            }
        }
    }

    fn dual_index(space: &SimplicialSet, alg: &GradedAlgebra, g: usize) -> usize {
        let name = alg.generator_name(g).trim_end_matches('*');
        let (_, idx) = space.lookup(name).unwrap();
        idx
    }

    #[test]
    fn spot_cup_products_on_the_triangle() {
        let space = standard_simplex(2);
        let d = |name: &str| {
            let (dim, idx) = space.lookup(name).unwrap();
            Cochain::dual(dim, idx)
        };
        let expect = |c: &Cochain, name: &str| {
            let (dim, idx) = space.lookup(name).unwrap();
            assert_eq!(c.degree, dim);
            assert_eq!(c.support, F2Sum::generator(idx));
        };
        expect(&cup(&space, &d("0"), &d("01")), "01");
        assert!(cup(&space, &d("1"), &d("01")).is_zero());
        expect(&cup(&space, &d("01"), &d("1")), "01");
        assert!(cup(&space, &d("01"), &d("2")).is_zero());
        expect(&cup(&space, &d("01"), &d("12")), "012");
        expect(&cup(&space, &d("0"), &d("012")), "012");
        expect(&cup(&space, &d("012"), &d("2")), "012");
    }

    #[test]
    fn cup_one_is_diagonal_on_edge_duals() {
        let space = standard_simplex(2);
        let edges = ["01", "02", "12"];
        for x in edges {
            for y in edges {
                let (dx, ix) = space.lookup(x).unwrap();
                let (dy, iy) = space.lookup(y).unwrap();
                let c = cup1(&space, &Cochain::dual(dx, ix), &Cochain::dual(dy, iy));
                if x == y {
                    assert_eq!(c.degree, 1);
                    assert_eq!(c.support, F2Sum::generator(ix), "{x} cup1 {y}");
                } else {
                    assert!(c.is_zero(), "{x} cup1 {y}");
                }
            }
        }
    }

    #[test]
    fn bar_boundary_wrap_cancellation() {
        let complex = HochschildComplex::new(sphere2_algebra(), 6).unwrap();
        let one_a = BarWord::new(vec![0, 1]);
        assert!(complex.boundary_word(&one_a).is_zero());
        let one_aa = BarWord::new(vec![0, 1, 1]);
        assert!(complex.boundary_word(&one_aa).is_zero());
    }

    #[test]
    fn bar_boundary_merges_into_the_head() {
        let complex = HochschildComplex::new(truncated_polynomial(), 6).unwrap();
        let (x, y) = (1usize, 2usize);
        let w = BarWord::new(vec![0, x, x]);
        let b = complex.boundary_word(&w);
        assert_eq!(b, F2Sum::generator(BarWord::new(vec![0, y])));
    }

    #[test]
    fn bar_boundary_kills_interior_units() {
        let complex = HochschildComplex::new(involution_algebra(), 6).unwrap();
        let g = 1usize;
        assert!(complex
            .boundary_word(&BarWord::new(vec![0, g, g]))
            .is_zero());
        let b = complex.boundary_word(&BarWord::new(vec![g, g, g]));
        assert!(b.is_zero(), "head merge and wrap cancel: {b:?}");
    }

    #[test]
    fn bar_boundary_squares_to_zero() {
        for alg in [
            sphere2_algebra(),
            truncated_polynomial(),
            involution_algebra(),
        ] {
            let complex = HochschildComplex::new(alg, 6).unwrap();
            for s in 0..=8 {
                for n in 1..=5 {
                    for w in complex.basis_words(s, n) {
                        let bb = complex.boundary_sum(&complex.boundary_word(&w));
                        assert!(bb.is_zero(), "d² fails on {w:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn complex_requires_a_generator_unit() {
        let alg = cochain_algebra(&standard_simplex(1), 1);
        assert!(matches!(
            HochschildComplex::new(alg, 6),
            Err(HochschildError::UnitNotGenerator { .. })
        ));
    }

    #[test]
    fn homology_of_the_sphere_algebra() {
        let complex = HochschildComplex::new(sphere2_algebra(), 8).unwrap();
        let alg = complex.algebra().clone();
        let render = |classes: &[F2Sum<BarWord>]| {
            classes
                .iter()
                .map(|c| alg.render_class(c))
                .collect::<Vec<_>>()
        };
        assert_eq!(render(&complex.hh_basis(0).unwrap()), vec!["1"]);
        assert_eq!(render(&complex.hh_basis(1).unwrap()), vec!["1 ⊗ a"]);
        assert_eq!(
            render(&complex.hh_basis(2).unwrap()),
            vec!["a", "1 ⊗ a ⊗ a"]
        );
        let totals: Vec<usize> = (0..=6)
            .map(|q| complex.hh_basis(q).unwrap().len())
            .collect();
        assert_eq!(totals, vec![1, 1, 2, 2, 2, 2, 2]);
    }

    #[test]
    fn homology_needs_enough_truncation() {
        let complex = HochschildComplex::new(sphere2_algebra(), 3).unwrap();
        assert!(matches!(
            complex.hh_basis(2),
            Err(HochschildError::TruncationTooSmall { needed: 4, got: 3 })
        ));
    }

    #[test]
    fn augmentation_projects_to_bar_length_zero() {
        let complex = HochschildComplex::new(sphere2_algebra(), 8).unwrap();
        let a = F2Sum::generator(BarWord::new(vec![1]));
        let one_aa = F2Sum::generator(BarWord::new(vec![0, 1, 1]));
        assert_eq!(complex.augmentation(&a).unwrap(), a);
        assert!(complex.augmentation(&one_aa).unwrap().is_zero());
        let noncomm = cochain_algebra(&standard_simplex(2), 2);
        assert!(!noncomm.is_commutative());
    }

    #[test]
    fn psi_on_low_bar_lengths() {
        let primitive = vec![
            surj("(1,2,3,2,3)"),
            surj("(1,3,1,2,1)"),
            surj("(1,3,2,3,1)"),
        ];
        let ctx = PsiContext::for_sphere2(primitive);
        let complex = HochschildComplex::new(ctx.algebra().clone(), 8).unwrap();
        // Bar length 0: the class of a evaluates to its dual cochain.
        let a = F2Sum::generator(BarWord::new(vec![1]));
        let c = ctx.psi_eval(&complex, &a).unwrap();
        assert_eq!(c.degree, 2);
        assert!(ctx.eval_fundamental(&c));
        // Bar length 1: 1 ⊗ a maps to e0* cup1 e2*, which vanishes.
        let one_a = F2Sum::generator(BarWord::new(vec![0, 1]));
        assert!(ctx.psi_eval(&complex, &one_a).unwrap().is_zero());
        // Bar length 2: 1 ⊗ a ⊗ a hits the fundamental cochain.
        let one_aa = F2Sum::generator(BarWord::new(vec![0, 1, 1]));
        let c = ctx.psi_eval(&complex, &one_aa).unwrap();
        assert!(ctx.eval_fundamental(&c));
        // The transposed word a ⊗ 1 ⊗ a does not.
        assert!(!ctx.pairing3([1, 0, 1]));
        assert!(ctx.pairing3([0, 1, 1]));
    }

    #[test]
    fn psi_rejects_long_words_and_non_cycles() {
        let ctx = PsiContext::for_sphere2(vec![surj("(1,2,3,2,3)")]);
        let complex = HochschildComplex::new(ctx.algebra().clone(), 8).unwrap();
        let long = F2Sum::generator(BarWord::new(vec![0, 1, 1, 1]));
        assert!(matches!(
            ctx.psi_eval(&complex, &long),
            Err(HochschildError::BarLengthTooLarge { length: 3 })
        ));
        let tp = HochschildComplex::new(truncated_polynomial(), 8).unwrap();
        let ctx_tp =
            PsiContext::new(sphere(2), sphere2_algebra(), vec![surj("(1,2,3,2,3)")]).unwrap();
        // 1 ⊗ x ⊗ x is not a cycle in the truncated polynomial algebra.
        let w = F2Sum::generator(BarWord::new(vec![0, 1, 1]));
        assert!(matches!(
            ctx_tp.psi_eval(&tp, &w),
            Err(HochschildError::NotACycle)
        ));
    }

    #[test]
    fn builtin_space_round_trip_for_cochains() {
        let alg = cochain_algebra(&builtin("sphere:2").unwrap(), 2);
        assert_eq!(alg.name(), "sphere:2 cochains");
    }
}
