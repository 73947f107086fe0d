//! The end-to-end verification pipeline.
//!
//! The pipeline builds the arity-3, degree-1 obstruction cycle U from
//! compositions of (1,2,1) and (1,2), solves dV = U over GF(2) for a
//! degree-2 primitive V, evaluates the comparison map and the commutative
//! augmentation on the two Hochschild classes of the sphere algebra in
//! total degree 2, and computes the low bidegree components of the induced
//! inner product. [`verify`] re-runs every check and returns a
//! [`VerificationReport`] whose JSON rendering is deterministic, so two
//! runs of the same build produce identical bytes.

use crate::algebra::{AlgebraError, F2Matrix, F2Sum, FormalSum};
use crate::hochschild::{cup, BarWord, HochschildComplex, HochschildError, PsiContext};
use crate::operad::{
    basis, boundary_element, symmetric_action_sum, OperadElement, OperadError, Surjection,
};
use crate::simplicial::{sphere, Chain, SimplicialError};
use num_bigint::BigInt;
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum PipelineError {
    #[error("construction check failed: {detail}")]
    ConstructionMismatch { detail: String },
    #[error("the linear system dV = U has no solution over GF(2)")]
    SolverInconsistent,
    #[error(transparent)]
    Operad(#[from] OperadError),
    #[error(transparent)]
    Hochschild(#[from] HochschildError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Simplicial(#[from] SimplicialError),
}

fn surjection(text: &str) -> Surjection {
    text.parse()
        .expect("pipeline literals are valid surjections")
}

fn f2_sum(texts: &[&str]) -> F2Sum<Surjection> {
    F2Sum::from_generators(texts.iter().map(|t| surjection(t)))
}

/// Builds the obstruction cycle U = t₁ − t₂ + σ·t₁ from partial
/// compositions of (1,2,1) with (1,2), where σ cycles the three labels.
/// Fails hard if the expansion mod 2 or the cycle property is off.
pub fn build_u() -> Result<OperadElement, PipelineError> {
    let assoc = surjection("(1,2,1)");
    let diag = surjection("(1,2)");
    let t1 = assoc.compose(1, &diag)?;
    let t2 = assoc.compose(2, &diag)?;
    let t3 = symmetric_action_sum(&t1, &[3, 1, 2])?;
    let u = t1 - t2 + t3;

    let expected = f2_sum(&[
        "(1,3,1,2)",
        "(1,2,3,2)",
        "(1,2,3,1)",
        "(3,2,3,1)",
        "(3,1,2,1)",
    ]);
    if u.mod2() != expected {
        return Err(PipelineError::ConstructionMismatch {
            detail: format!("U expands to {} mod 2", u.mod2()),
        });
    }
    if !boundary_element(&u).mod2().is_zero() {
        return Err(PipelineError::ConstructionMismatch {
            detail: "U is not a cycle mod 2".into(),
        });
    }
    for (term, _) in u.iter() {
        if term.arity() != 3 || term.degree() != 1 {
            return Err(PipelineError::ConstructionMismatch {
                detail: format!("term {term} is not arity 3, degree 1"),
            });
        }
    }
    Ok(u)
}

/// The solved primitive: dV = U mod 2, together with the solver's rank and
/// a basis of the boundary kernel in the same degree.
#[derive(Clone, Debug)]
pub struct PrimitiveSolution {
    /// The particular solution with free variables zeroed, as a set of
    /// arity-3, degree-2 surjections.
    pub v: Vec<Surjection>,
    /// A basis of mod-2 cycles in arity 3, degree 2.
    pub kernel: Vec<F2Sum<Surjection>>,
    pub rank: usize,
    pub kernel_dimension: usize,
}

/// Solves dV = U over GF(2) on the lexicographic basis of arity 3,
/// degree 2, with leftmost pivots and zeroed free variables, so the answer
/// is deterministic.
pub fn solve_v(u: &OperadElement) -> Result<PrimitiveSolution, PipelineError> {
    let domain = basis(3, 2);
    let target = basis(3, 1);
    let u2 = u.mod2();

    let mut matrix = F2Matrix::new(target.len(), domain.len());
    for (c, w) in domain.iter().enumerate() {
        for t in w.boundary().mod2().iter() {
            let r = target
                .iter()
                .position(|x| x == t)
                .expect("boundary stays in the basis");
            matrix.set(r, c, true);
        }
    }
    let rhs: Vec<bool> = target.iter().map(|t| u2.contains(t)).collect();
    let solution = matrix.solve(&rhs).map_err(|e| match e {
        AlgebraError::Inconsistent => PipelineError::SolverInconsistent,
        other => PipelineError::Algebra(other),
    })?;

    let v: Vec<Surjection> = domain
        .iter()
        .zip(&solution.particular)
        .filter(|(_, &bit)| bit)
        .map(|(w, _)| w.clone())
        .collect();
    let check: F2Sum<Surjection> = v
        .iter()
        .fold(FormalSum::zero(), |acc, w| acc + w.boundary())
        .mod2();
    if check != u2 {
        return Err(PipelineError::ConstructionMismatch {
            detail: "solved V does not bound U mod 2".into(),
        });
    }
    let kernel = solution
        .kernel
        .iter()
        .map(|vec| {
            F2Sum::from_generators(
                domain
                    .iter()
                    .zip(vec)
                    .filter(|(_, &bit)| bit)
                    .map(|(w, _)| w.clone()),
            )
        })
        .collect();
    Ok(PrimitiveSolution {
        v,
        kernel,
        rank: solution.rank,
        kernel_dimension: solution.kernel.len(),
    })
}

/// One row of the square comparison: a Hochschild class with both images.
#[derive(Clone, Debug, Serialize)]
pub struct SquareRecord {
    pub class: String,
    pub psi: String,
    pub f: String,
    pub agrees: bool,
}

/// The two maps evaluated on every class of total degree 2.
#[derive(Clone, Debug, Serialize)]
pub struct SquareCheck {
    pub records: Vec<SquareRecord>,
    pub non_commuting: bool,
}

/// Evaluates the comparison map and the commutative augmentation on the
/// degree-2 Hochschild classes of the sphere algebra.
pub fn square_check(truncation: usize) -> Result<SquareCheck, PipelineError> {
    let u = build_u()?;
    let solution = solve_v(&u)?;
    let ctx = PsiContext::for_sphere2(solution.v);
    let complex = HochschildComplex::new(ctx.algebra().clone(), truncation)?;
    square_records(&ctx, &complex)
}

fn square_records(
    ctx: &PsiContext,
    complex: &HochschildComplex,
) -> Result<SquareCheck, PipelineError> {
    let algebra = complex.algebra();
    let fundamental = algebra.find("a")?;
    let mut records = Vec::new();
    for class in complex.hh_basis(2)? {
        let psi_value = ctx.eval_fundamental(&ctx.psi_eval(complex, &class)?);
        let f_image = complex.augmentation(&class)?;
        let f_value = f_image.contains(&BarWord::new(vec![fundamental]));
        records.push(SquareRecord {
            class: algebra.render_class(&class),
            psi: render_f2_value(psi_value, algebra.generator_name(fundamental)),
            f: render_f2_value(f_value, algebra.generator_name(fundamental)),
            agrees: psi_value == f_value,
        });
    }
    let non_commuting = records.iter().any(|r| !r.agrees);
    Ok(SquareCheck {
        records,
        non_commuting,
    })
}

fn render_f2_value(value: bool, name: &str) -> String {
    if value {
        name.to_string()
    } else {
        "0".to_string()
    }
}

/// One evaluated tuple of an inner product component.
#[derive(Clone, Debug, Serialize)]
pub struct InnerProductEntry {
    pub args: Vec<String>,
    #[serde(skip)]
    pub arg_indices: Vec<usize>,
    pub value: bool,
}

/// The table of one component F_{p,q}.
#[derive(Clone, Debug, Serialize)]
pub struct ComponentTable {
    pub p: usize,
    pub q: usize,
    pub entries: Vec<InnerProductEntry>,
}

/// The low bidegree components of the inner product induced by the
/// comparison map: F_{p,0}(x₁,…,x_{p+2}) is the top-cell coefficient of
/// Ψ(x_{p+2} ⊗ x₁ ⊗ … ⊗ x_p) ⌣ dual(x_{p+1}), and F_{p,q} vanishes for
/// q ≠ 0.
#[derive(Clone, Debug, Serialize)]
pub struct InnerProductComponents {
    pub tables: Vec<ComponentTable>,
}

impl InnerProductComponents {
    /// Tabulates F_{p,0} for p ≤ 2 over all generator tuples.
    pub fn compute(ctx: &PsiContext) -> Result<Self, PipelineError> {
        let algebra = ctx.algebra().clone();
        let g = algebra.generator_count();
        let mut tables = Vec::new();
        for p in 0..=2usize {
            let mut entries = Vec::new();
            let mut tuple = vec![0usize; p + 2];
            loop {
                let word: Vec<usize> = std::iter::once(tuple[p + 1])
                    .chain(tuple[..p].iter().copied())
                    .collect();
                let inner = ctx.eval_word(&word)?;
                let product = cup(ctx.space(), &inner, &ctx.dual(tuple[p]));
                let value = ctx.eval_fundamental(&product);
                entries.push(InnerProductEntry {
                    args: tuple
                        .iter()
                        .map(|&i| algebra.generator_name(i).to_string())
                        .collect(),
                    arg_indices: tuple.clone(),
                    value,
                });
                // Odometer over generator indices, last position fastest.
                let mut pos = p + 2;
                loop {
                    if pos == 0 {
                        break;
                    }
                    pos -= 1;
                    tuple[pos] += 1;
                    if tuple[pos] < g {
                        break;
                    }
                    tuple[pos] = 0;
                }
                if tuple.iter().all(|&i| i == 0) {
                    break;
                }
            }
            tables.push(ComponentTable { p, q: 0, entries });
        }
        Ok(InnerProductComponents { tables })
    }

    /// Looks up F_{p,q} on a tuple of generator indices. Components with
    /// q ≠ 0 vanish identically; p beyond the tabulated range is None.
    pub fn value(&self, p: usize, q: usize, args: &[usize]) -> Option<bool> {
        if q != 0 {
            return Some(false);
        }
        let table = self.tables.iter().find(|t| t.p == p)?;
        if args.len() != p + 2 {
            return None;
        }
        table
            .entries
            .iter()
            .find(|e| e.arg_indices == args)
            .map(|e| e.value)
    }
}

/// One verification check: what was computed, what was expected, where the
/// expectation comes from ("reference" for values printed in the source
/// material, "derived-oracle" for independently recomputed ones).
#[derive(Clone, Debug, Serialize)]
pub struct CheckRecord {
    pub id: String,
    pub inputs: String,
    pub computed: String,
    pub expected: String,
    pub provenance: String,
    pub pass: bool,
}

/// The solver artifacts attached to a report.
#[derive(Clone, Debug, Serialize)]
pub struct SolverArtifacts {
    pub primitive: Vec<String>,
    pub rank: usize,
    pub kernel_dimension: usize,
}

/// A full verification run: every check recomputed, records sorted by id.
#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub checks: Vec<CheckRecord>,
    pub non_commuting: bool,
    pub all_pass: bool,
    pub solver: SolverArtifacts,
}

impl VerificationReport {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn render_human(&self) -> String {
        let mut out = String::new();
        for check in &self.checks {
            let status = if check.pass { "pass" } else { "FAIL" };
            out.push_str(&format!("[{status}] {}: {}\n", check.id, check.computed));
            if !check.pass {
                out.push_str(&format!(
                    "       expected ({}): {}\n",
                    check.provenance, check.expected
                ));
            }
        }
        out.push_str(&format!(
            "primitive: {} (rank {}, kernel dimension {})\n",
            self.solver.primitive.join(", "),
            self.solver.rank,
            self.solver.kernel_dimension
        ));
        out.push_str(if self.non_commuting {
            "verdict: the square does not commute\n"
        } else {
            "verdict: the square commutes\n"
        });
        out.push_str(if self.all_pass {
            "all checks passed\n"
        } else {
            "some checks FAILED\n"
        });
        out
    }
}

fn record(
    id: &str,
    inputs: &str,
    computed: String,
    expected: String,
    provenance: &str,
    pass: bool,
) -> CheckRecord {
    CheckRecord {
        id: id.into(),
        inputs: inputs.into(),
        computed,
        expected,
        provenance: provenance.into(),
        pass,
    }
}

/// Runs every pipeline check and assembles the report. Deterministic: two
/// runs return byte-identical JSON.
pub fn verify(truncation: usize) -> Result<VerificationReport, PipelineError> {
    let mut checks = Vec::new();

    // The worked differential example, compared mod 2.
    let diff_input = surjection("(4,3,1,2,1,3,5,2)");
    let diff_computed = diff_input.boundary().mod2();
    let diff_expected = f2_sum(&[
        "(4,1,2,1,3,5,2)",
        "(4,3,2,1,3,5,2)",
        "(4,3,1,2,3,5,2)",
        "(4,3,1,2,1,5,2)",
        "(4,3,1,2,1,3,5)",
    ]);
    checks.push(record(
        "01-differential-example",
        "boundary of (4,3,1,2,1,3,5,2), mod 2",
        diff_computed.to_string(),
        diff_expected.to_string(),
        "reference",
        diff_computed == diff_expected,
    ));

    // The worked composition example, with integer coefficients.
    let comp_computed = surjection("(2,3,2,1)").compose(2, &surjection("(4,3,4,1,2)"))?;
    let comp_expected = FormalSum::from_terms(
        [
            ("(5,6,5,4,5,2,3,1)", 1),
            ("(5,4,6,4,5,2,3,1)", -1),
            ("(5,4,5,6,5,2,3,1)", -1),
            ("(5,4,5,2,6,2,3,1)", -1),
            ("(5,4,5,2,3,6,3,1)", -1),
        ]
        .into_iter()
        .map(|(t, c)| (surjection(t), BigInt::from(c))),
    );
    checks.push(record(
        "02-composition-example",
        "(2,3,2,1) composed with (4,3,4,1,2) in slot 2",
        comp_computed.to_string(),
        comp_expected.to_string(),
        "reference",
        comp_computed == comp_expected,
    ));

    // U and its defining properties.
    let u = build_u()?;
    let u_expected = f2_sum(&[
        "(1,3,1,2)",
        "(1,2,3,2)",
        "(1,2,3,1)",
        "(3,2,3,1)",
        "(3,1,2,1)",
    ]);
    checks.push(record(
        "03-u-expansion",
        "U from compositions of (1,2,1) with (1,2), mod 2",
        u.mod2().to_string(),
        u_expected.to_string(),
        "reference",
        u.mod2() == u_expected,
    ));
    let du = boundary_element(&u).mod2();
    checks.push(record(
        "04-u-cycle",
        "boundary of U, mod 2",
        du.to_string(),
        "0".into(),
        "reference",
        du.is_zero(),
    ));
    let homogeneous = u.iter().all(|(t, _)| t.arity() == 3 && t.degree() == 1);
    checks.push(record(
        "05-u-arity-degree",
        "arity and degree of every term of U",
        if homogeneous {
            "arity 3, degree 1".into()
        } else {
            "mixed".into()
        },
        "arity 3, degree 1".into(),
        "reference",
        homogeneous,
    ));

    // The solved primitive and the alternate one.
    let solution = solve_v(&u)?;
    let dv: F2Sum<Surjection> = solution
        .v
        .iter()
        .fold(FormalSum::zero(), |acc, w| acc + w.boundary())
        .mod2();
    checks.push(record(
        "06-v-solves",
        "boundary of the solved V, mod 2",
        dv.to_string(),
        u.mod2().to_string(),
        "derived-oracle",
        dv == u.mod2(),
    ));
    let alternate = ["(3,1,3,1,2)", "(3,1,2,3,2)", "(3,1,2,3,1)"];
    let d_alt: F2Sum<Surjection> = alternate
        .iter()
        .map(|t| surjection(t))
        .fold(FormalSum::zero(), |acc, w| acc + w.boundary())
        .mod2();
    checks.push(record(
        "07-v-alternate",
        "boundary of {(3,1,3,1,2), (3,1,2,3,2), (3,1,2,3,1)}, mod 2",
        d_alt.to_string(),
        u.mod2().to_string(),
        "reference",
        d_alt == u.mod2(),
    ));

    // Interval cuts of the alternate primitive's terms on the sphere cell.
    let space = sphere(2);
    let cell = Chain::generator(2, 0);
    let mut aw_mod2 = Vec::new();
    let mut aw_integral = Vec::new();
    for t in alternate {
        let cut = space.interval_cut_action(&surjection(t), &cell);
        aw_mod2.push(format!("{t} ↦ {}", space.render_tensor_mod2(&cut)));
        aw_integral.push(format!("{t} ↦ {}", space.render_tensor(&cut)));
    }
    let aw_mod2 = aw_mod2.join("; ");
    let aw_integral = aw_integral.join("; ");
    let aw_mod2_expected = "(3,1,3,1,2) ↦ e2 ⊗ e0 ⊗ e2; \
                            (3,1,2,3,2) ↦ e0 ⊗ e2 ⊗ e2; \
                            (3,1,2,3,1) ↦ e2 ⊗ e0 ⊗ e2"
        .to_string();
    let aw_integral_expected = "(3,1,3,1,2) ↦ - e2 ⊗ e0 ⊗ e2; \
                                (3,1,2,3,2) ↦ e0 ⊗ e2 ⊗ e2; \
                                (3,1,2,3,1) ↦ - e2 ⊗ e0 ⊗ e2"
        .to_string();
    checks.push(record(
        "08-cut-values",
        "interval cuts of the alternate primitive on the sphere cell, mod 2",
        aw_mod2.clone(),
        aw_mod2_expected.clone(),
        "reference",
        aw_mod2 == aw_mod2_expected,
    ));
    checks.push(record(
        "09-cut-signs",
        "interval cuts of the alternate primitive on the sphere cell, integral",
        aw_integral.clone(),
        aw_integral_expected.clone(),
        "reference",
        aw_integral == aw_integral_expected,
    ));

    // Hochschild homology of the sphere algebra in total degree 2.
    let ctx = PsiContext::for_sphere2(solution.v.clone());
    let complex = HochschildComplex::new(ctx.algebra().clone(), truncation)?;
    let hh2 = complex.hh_basis(2)?;
    let hh_rendered = hh2
        .iter()
        .map(|c| complex.algebra().render_class(c))
        .collect::<Vec<_>>()
        .join("; ");
    let hh_computed = format!("dimension {}: {}", hh2.len(), hh_rendered);
    let hh_expected = "dimension 2: a; 1 ⊗ a ⊗ a".to_string();
    checks.push(record(
        "10-hochschild-degree-two",
        "basis of Hochschild homology in total degree 2",
        hh_computed.clone(),
        hh_expected.clone(),
        "reference",
        hh_computed == hh_expected,
    ));

    // The square: the comparison map against the commutative augmentation.
    let square = square_records(&ctx, &complex)?;
    let psi_line = square
        .records
        .iter()
        .map(|r| format!("psi({}) = {}", r.class, r.psi))
        .collect::<Vec<_>>()
        .join("; ");
    let psi_expected = "psi(a) = a; psi(1 ⊗ a ⊗ a) = a".to_string();
    checks.push(record(
        "11-square-psi",
        "the comparison map on the degree-2 classes",
        psi_line.clone(),
        psi_expected.clone(),
        "reference",
        psi_line == psi_expected,
    ));
    let f_line = square
        .records
        .iter()
        .map(|r| format!("f({}) = {}", r.class, r.f))
        .collect::<Vec<_>>()
        .join("; ");
    let f_expected = "f(a) = a; f(1 ⊗ a ⊗ a) = 0".to_string();
    checks.push(record(
        "12-square-f",
        "the commutative augmentation on the degree-2 classes",
        f_line.clone(),
        f_expected.clone(),
        "reference",
        f_line == f_expected,
    ));
    checks.push(record(
        "13-non-commuting",
        "whether the two maps disagree on some degree-2 class",
        square.non_commuting.to_string(),
        "true".into(),
        "reference",
        square.non_commuting,
    ));

    // Inner product components.
    let inner = InnerProductComponents::compute(&ctx)?;
    let render_table = |p: usize| -> String {
        let table = inner.tables.iter().find(|t| t.p == p).expect("tabulated");
        let nonzero: Vec<String> = table
            .entries
            .iter()
            .filter(|e| e.value)
            .map(|e| format!("({})", e.args.join(",")))
            .collect();
        if nonzero.is_empty() {
            format!("all {} tuples ↦ 0", table.entries.len())
        } else {
            format!(
                "{} ↦ 1; {} other tuples ↦ 0",
                nonzero.join(", "),
                table.entries.len() - nonzero.len()
            )
        }
    };
    let f00 = render_table(0);
    let f00_expected = "(1,a), (a,1) ↦ 1; 2 other tuples ↦ 0".to_string();
    checks.push(record(
        "14-inner-product-00",
        "F_{0,0} on all generator pairs",
        f00.clone(),
        f00_expected.clone(),
        "derived-oracle",
        f00 == f00_expected,
    ));
    let f10 = render_table(1);
    let f10_expected = "all 8 tuples ↦ 0".to_string();
    checks.push(record(
        "15-inner-product-10",
        "F_{1,0} on all generator triples",
        f10.clone(),
        f10_expected.clone(),
        "derived-oracle",
        f10 == f10_expected,
    ));
    let f20 = render_table(2);
    let f20_expected = "(a,a,1,1) ↦ 1; 15 other tuples ↦ 0".to_string();
    checks.push(record(
        "16-inner-product-20",
        "F_{2,0} on all generator quadruples",
        f20.clone(),
        f20_expected.clone(),
        "derived-oracle",
        f20 == f20_expected,
    ));

    checks.sort_by(|a, b| a.id.cmp(&b.id));
    let all_pass = checks.iter().all(|c| c.pass);
    let solver = SolverArtifacts {
        primitive: solution.v.iter().map(|w| w.to_string()).collect(),
        rank: solution.rank,
        kernel_dimension: solution.kernel_dimension,
    };
    Ok(VerificationReport {
        checks,
        non_commuting: square.non_commuting,
        all_pass,
        solver,
    })
}
