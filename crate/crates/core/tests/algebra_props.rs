use leibniz_forge::algebra::lambda_is_homomorphism;
use leibniz_forge::corpus::{
    aff1_action, heisenberg_action, leibniz_corpus, random_nilpotent_leibniz, random_skew_algebra,
    random_sparse_algebra, so3_action, transported,
};
use leibniz_forge::linalg::{rat, Matrix, Rational, Vector};
use leibniz_forge::products::{
    demisemidirect, gl_action, graph_algebra, graph_criterion, hemisemidirect, ModuleAction,
};
use leibniz_forge::sampling::Sampler;
use leibniz_forge::subspace::Subspace;
use leibniz_forge::StructureAlgebra;
use proptest::prelude::*;
use std::sync::OnceLock;

fn lambda(a: &StructureAlgebra, x: &[Rational]) -> Matrix {
    a.left_mul(x).unwrap()
}

fn small_corpus() -> &'static [StructureAlgebra] {
    static CORPUS: OnceLock<Vec<StructureAlgebra>> = OnceLock::new();
    CORPUS.get_or_init(|| leibniz_corpus().into_iter().filter(|a| a.dim() <= 5).collect())
}

fn leibniz_algebra() -> impl Strategy<Value = StructureAlgebra> {
    let n = small_corpus().len();
    prop_oneof![
        (2usize..6, any::<u64>()).prop_map(|(n, s)| random_nilpotent_leibniz(n, s)),
        (0..n, any::<u64>()).prop_map(|(i, s)| transported(&small_corpus()[i], s)),
    ]
}

fn any_algebra() -> impl Strategy<Value = StructureAlgebra> {
    prop_oneof![
        leibniz_algebra(),
        (2usize..5, any::<u64>()).prop_map(|(n, s)| random_sparse_algebra(n, s)),
        (2usize..5, any::<u64>()).prop_map(|(n, s)| random_skew_algebra(n, s)),
    ]
}

fn samples(n: usize, seed: u64) -> Vec<Vector> {
    let mut s = Sampler::new(seed);
    (0..4).map(|_| s.vector(n)).collect()
}

fn actions() -> Vec<ModuleAction> {
    let mut out = vec![gl_action(1), gl_action(2), gl_action(3), aff1_action(), so3_action(), heisenberg_action()];
    out.push(ModuleAction::trivial(leibniz_forge::corpus::so3(), 2));
    out.push(ModuleAction::adjoint(leibniz_forge::corpus::aff1()));
    out.push(ModuleAction::trivial(StructureAlgebra::abelian(2), 3));
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn lambda_kills_squares(a in leibniz_algebra(), seed in any::<u64>()) {
        for x in samples(a.dim(), seed) {
            let xx = a.product(&x, &x).unwrap();
            prop_assert!(lambda(&a, &xx).is_zero());
        }
    }

    // Oracle: the commutator of left multiplications, compared entrywise.
    #[test]
    fn lambda_is_homomorphism_iff_leibniz(a in any_algebra()) {
        let n = a.dim();
        let mut hom = true;
        for i in 0..n {
            for j in 0..n {
                let li = a.left_mul_basis(i);
                let lj = a.left_mul_basis(j);
                hom &= lambda(&a, a.basis_product(i, j)) == &(&li * &lj) - &(&lj * &li);
            }
        }
        prop_assert_eq!(hom, a.check_leibniz().holds);
        prop_assert_eq!(hom, lambda_is_homomorphism(&a));
    }

    #[test]
    fn squares_inside_kernel(a in leibniz_algebra()) {
        prop_assert!(a.squares_ideal().is_subspace_of(&a.kernel_of_lambda()));
    }

    #[test]
    fn sandwich_quotients_are_lie(a in leibniz_algebra(), seed in any::<u64>()) {
        let sq = a.squares_ideal();
        let ker = a.kernel_of_lambda();
        let mut s = Sampler::new(seed);
        let mut gens: Vec<Vector> = sq.basis().to_vec();
        for v in ker.basis() {
            if s.chance(0.5) {
                gens.push(v.clone());
            }
        }
        let m = Subspace::span(a.dim(), gens).unwrap();
        prop_assume!(a.is_ideal(&m));
        let (q, _) = a.quotient(&m).unwrap();
        prop_assert!(q.check_lie().holds);
    }

    #[test]
    fn skew_symmetrization_fixes_exactly_skew_algebras(a in any_algebra()) {
        prop_assert_eq!(a.skew_symmetrize().constants() == a.constants(), a.check_skew().holds);
    }

    #[test]
    fn graph_criteria_match_identities(a in any_algebra()) {
        let r = graph_criterion(&a);
        prop_assert_eq!(r.graph_closed_under_leibniz, a.check_leibniz().holds);
        prop_assert_eq!(r.graph_is_lie_subalgebra, a.check_lie().holds);
    }

    // π_ℰ restricted to the graph carries its product onto that of A.
    #[test]
    fn graph_projection_is_isomorphism(a in leibniz_algebra()) {
        let g = graph_algebra(&a).expect("closed graph");
        prop_assert_eq!(g.constants(), a.constants());
    }
}

#[test]
fn demisemidirect_is_skew_part_of_hemisemidirect() {
    for act in actions() {
        let hemi = hemisemidirect(&act).unwrap();
        assert_eq!(demisemidirect(&act).unwrap().constants(), hemi.skew_symmetrize().constants());
    }
}

#[test]
fn hemisemidirect_is_leibniz_and_lie_only_for_zero_action() {
    for act in actions() {
        let hemi = hemisemidirect(&act).unwrap();
        assert!(hemi.check_leibniz().holds, "{}", hemi.name());
        assert_eq!(hemi.check_lie().holds, act.is_zero(), "{}", hemi.name());
    }
}

#[test]
fn non_leibniz_direction_has_witness() {
    // e1·e1 = e2, e2·e1 = e1 violates the identity at (e1, e1, e1).
    let a = StructureAlgebra::from_entries("bad", 2, &[(0, 0, 1, rat(1, 1)), (1, 0, 0, rat(1, 1))]);
    let check = a.check_leibniz();
    assert!(!check.holds);
    let w = check.witness.unwrap();
    assert_ne!(w.lhs, w.rhs);
    assert!(!lambda_is_homomorphism(&a));
    assert!(!graph_criterion(&a).graph_closed_under_leibniz);
}
