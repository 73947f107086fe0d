//! Laws of the cyclic bar complex: the differential squares to zero, the
//! sphere algebra has the expected homology, the augmentation kills
//! boundaries, and the comparison pairing does not depend on which
//! primitive the solver picks.

use caesura::hochschild::{sphere2_algebra, GradedAlgebra, HochschildComplex, PsiContext};
use caesura::operad::Surjection;
use caesura::pipeline::{build_u, solve_v};
use caesura::F2Sum;

fn sample_algebras() -> Vec<GradedAlgebra> {
    let truncated = "\
1 0 unit
x 2
y 4
x*x = y
x*y = 0
y*x = 0
y*y = 0
";
    let involution = "\
1 0 unit
g 0
g*g = 1
";
    vec![
        sphere2_algebra(),
        GradedAlgebra::parse("truncated-polynomial", truncated).unwrap(),
        GradedAlgebra::parse("involution", involution).unwrap(),
    ]
}

#[test]
fn bar_differential_squares_to_zero() {
    for algebra in sample_algebras() {
        let complex = HochschildComplex::new(algebra, 6).unwrap();
        for s in 0..=8usize {
            for n in 1..=5usize {
                for w in complex.basis_words(s, n) {
                    let twice = complex.boundary_sum(&complex.boundary_word(&w));
                    assert!(
                        twice.is_zero(),
                        "d² of {} is nonzero over {}",
                        complex.algebra().render_word(&w),
                        complex.algebra().name()
                    );
                }
            }
        }
    }
}

#[test]
fn sphere_homology_has_the_expected_dimensions() {
    let complex = HochschildComplex::new(sphere2_algebra(), 8).unwrap();
    let dims: Vec<usize> = (0..=6)
        .map(|q| complex.hh_basis(q).unwrap().len())
        .collect();
    assert_eq!(dims, vec![1, 1, 2, 2, 2, 2, 2]);

    let rendered: Vec<String> = complex
        .hh_basis(2)
        .unwrap()
        .iter()
        .map(|c| complex.algebra().render_class(c))
        .collect();
    assert_eq!(rendered, vec!["a", "1 ⊗ a ⊗ a"]);
}

#[test]
fn augmentation_kills_boundaries_of_length_one_words() {
    for algebra in sample_algebras() {
        assert!(
            algebra.is_commutative(),
            "{} should be commutative",
            algebra.name()
        );
        let complex = HochschildComplex::new(algebra, 6).unwrap();
        for s in 0..=8usize {
            for w in complex.basis_words(s, 1) {
                let image = complex.augmentation(&complex.boundary_word(&w)).unwrap();
                assert!(
                    image.is_zero(),
                    "augmentation of the boundary of {} is nonzero",
                    complex.algebra().render_word(&w)
                );
            }
        }
    }
}

#[test]
fn pairing_is_invariant_under_every_kernel_perturbation() {
    let u = build_u().unwrap();
    let solution = solve_v(&u).unwrap();
    let base = PsiContext::for_sphere2(solution.v.clone());
    let one = base.algebra().find("1").unwrap();
    let a = base.algebra().find("a").unwrap();
    let reference = (base.pairing3([one, a, a]), base.pairing3([a, one, a]));
    assert_eq!(reference, (true, false));

    assert_eq!(solution.kernel.len(), 29);
    for kernel_vector in &solution.kernel {
        let mut set: F2Sum<Surjection> = F2Sum::from_generators(solution.v.iter().cloned());
        for w in kernel_vector.iter() {
            set.toggle(w.clone());
        }
        let perturbed: Vec<Surjection> = set.iter().cloned().collect();
        let ctx = PsiContext::for_sphere2(perturbed);
        let values = (ctx.pairing3([one, a, a]), ctx.pairing3([a, one, a]));
        assert_eq!(
            values, reference,
            "pairing moved under the kernel perturbation {kernel_vector}"
        );
    }
}
