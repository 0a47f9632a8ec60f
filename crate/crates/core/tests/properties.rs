use nalgebra::DMatrix;
use proptest::prelude::*;
use symtele_core::{
    distinguishable::{self as dist, BellKind, QubitState},
    identical::{self as ident, PolarizationState},
    symmetric::{contract, sym_product, ModeLabel, ModeSet, ProductConfiguration, SymmetricSpace},
    tensor::{apply, inner_product, normalize, projector, tensor_product},
    Basis, LinearOperator, StateVector, C64, TOL,
};

fn c64() -> impl Strategy<Value = C64> {
    (-1.0f64..1.0, -1.0f64..1.0).prop_map(|(re, im)| C64::new(re, im))
}

fn basis(prefix: &str, n: usize) -> Basis {
    Basis::new((0..n).map(|k| format!("{prefix}{k}"))).unwrap()
}

fn vector(prefix: &'static str, n: usize) -> impl Strategy<Value = StateVector> {
    proptest::collection::vec(c64(), n).prop_map(move |a| StateVector::new(basis(prefix, n), a).unwrap())
}

fn nonzero(prefix: &'static str, n: usize) -> impl Strategy<Value = StateVector> {
    vector(prefix, n).prop_filter("nonzero", |v| v.norm() > 1e-3)
}

fn qubit() -> impl Strategy<Value = QubitState> {
    (c64(), c64())
        .prop_filter("nonzero", |(a, b)| a.norm_sqr() + b.norm_sqr() > 1e-3)
        .prop_map(|(a, b)| QubitState::normalized(a, b).unwrap())
}

fn mode() -> impl Strategy<Value = ModeLabel> { proptest::sample::select(ModeLabel::ALL.to_vec()) }

fn permutation3() -> impl Strategy<Value = Vec<usize>> {
    Just(vec![0usize, 1, 2]).prop_shuffle()
}

proptest! {
    #[test]
    fn inner_product_is_conjugate_symmetric((a, b) in (vector("e", 5), vector("e", 5))) {
        let ab = inner_product(&a, &b).unwrap();
        let ba = inner_product(&b, &a).unwrap();
        prop_assert!((ab - ba.conj()).norm() < TOL);
    }

    #[test]
    fn tensor_norm_is_multiplicative((a, b) in (vector("a", 3), vector("b", 4))) {
        let t = tensor_product(&a, &b).unwrap();
        prop_assert_eq!(t.len(), 12);
        prop_assert!((t.norm() - a.norm() * b.norm()).abs() < TOL);
    }

    #[test]
    fn projectors_are_idempotent(v in nonzero("e", 6)) {
        let p = projector(&normalize(&v).unwrap()).unwrap();
        prop_assert!(p.projector_residual() < TOL);
        prop_assert!((p.trace() - C64::new(1.0, 0.0)).norm() < TOL);
        prop_assert_eq!(p.rank(TOL), 1);
    }

    #[test]
    fn apply_is_linear(
        entries in proptest::collection::vec(c64(), 16),
        (u, v) in (vector("e", 4), vector("e", 4)),
        (x, y) in (c64(), c64()),
    ) {
        let b = basis("e", 4);
        let op = LinearOperator::new(b.clone(), b, DMatrix::from_row_slice(4, 4, &entries)).unwrap();
        let lhs = apply(&op, &u.scale(x).add(&v.scale(y)).unwrap()).unwrap();
        let rhs = apply(&op, &u).unwrap().scale(x).add(&apply(&op, &v).unwrap().scale(y)).unwrap();
        prop_assert!(lhs.distance(&rhs).unwrap() < 1e-12);
    }

    #[test]
    fn symmetrize_ignores_slot_order(slots in proptest::collection::vec(mode(), 3), perm in permutation3()) {
        let space = SymmetricSpace::new(&ModeSet::omega(), 3).unwrap();
        let shuffled: Vec<ModeLabel> = perm.iter().map(|&k| slots[k]).collect();
        let a = space.symmetrize(&ProductConfiguration::new(slots).unwrap()).unwrap();
        let b = space.symmetrize(&ProductConfiguration::new(shuffled).unwrap()).unwrap();
        prop_assert!(a.distance(&b).unwrap() < TOL);
        prop_assert!((a.norm() - 1.0).abs() < TOL);
    }

    #[test]
    fn expansion_is_symmetric_and_inverted_by_projection(
        amps in proptest::collection::vec(c64(), 20),
        perm in permutation3(),
    ) {
        let modes = ModeSet::momenta(&[1, 2]).unwrap();
        let space = SymmetricSpace::new(&modes, 3).unwrap();
        prop_assert_eq!(space.dim(), 20);
        let v = StateVector::new(space.basis().clone(), amps).unwrap();
        let e = space.expand(&v).unwrap();
        prop_assert!((e.norm() - v.norm()).abs() < TOL);
        let pe = space.product_space().permute_slots(&e, &perm).unwrap();
        prop_assert!(pe.distance(&e).unwrap() < TOL);
        prop_assert!(space.project(&e).unwrap().distance(&v).unwrap() < TOL);
    }

    #[test]
    fn contract_is_adjoint_to_sym_product(
        a in proptest::collection::vec(c64(), 10),
        r in proptest::collection::vec(c64(), 6),
        t in proptest::collection::vec(c64(), 56),
    ) {
        let omega = ModeSet::omega();
        let two = SymmetricSpace::new(&omega, 2).unwrap();
        let three = SymmetricSpace::new(&omega, 3).unwrap();
        let a = StateVector::new(SymmetricSpace::new(&ModeSet::momenta(&[1, 3]).unwrap(), 2).unwrap().basis().clone(), a).unwrap();
        let a = symtele_core::symmetric::embed(&a, &omega).unwrap();
        prop_assert_eq!(a.basis(), two.basis());
        let one = SymmetricSpace::new(&omega, 1).unwrap();
        let r = StateVector::new(one.basis().clone(), r).unwrap();
        let t = StateVector::new(three.basis().clone(), t).unwrap();
        // <r | contract(a, t)> = <sym_product(a, r) | t>
        let lhs = inner_product(&r, &contract(&a, &t).unwrap()).unwrap();
        let rhs = inner_product(&sym_product(&a, &r).unwrap(), &t).unwrap();
        prop_assert!((lhs - rhs).norm() < 1e-12);
    }

    #[test]
    fn distinguishable_protocol_is_perfect(q in qubit()) {
        let mut sum = 0.0;
        for kind in BellKind::ALL {
            let t = dist::teleport(&q, kind).unwrap();
            sum += t.probability;
            prop_assert!((t.probability - 0.25).abs() < TOL);
            prop_assert!((t.fidelity - 1.0).abs() < TOL);
            prop_assert!((t.corrected.phase_distance(&q.on_slot(dist::RECEIVER_SLOT)).unwrap()) < 1e-12);
        }
        prop_assert!((sum - 1.0).abs() < TOL);
    }

    #[test]
    fn identical_protocol_is_perfect(q in qubit()) {
        let p = PolarizationState::from_qubit(&q, ident::INPUT_MOMENTUM).unwrap();
        let total = ident::total_state(&p).unwrap();
        prop_assert!((total.norm() - 1.0).abs() < TOL);
        let mut sum = 0.0;
        for kind in BellKind::ALL {
            let t = ident::teleport_identical(&p, kind).unwrap();
            sum += t.probability;
            prop_assert!((t.probability - 0.25).abs() < TOL);
            prop_assert!((t.fidelity - 1.0).abs() < TOL);
            prop_assert!(ident::leakage(&t.conditional_state, ident::RECEIVER_MOMENTUM).unwrap() < TOL);
            prop_assert!(ident::conditional_mismatch(&q, kind).unwrap() < TOL);
            let fixed = ident::polarization_pair(&t.corrected_state, ident::RECEIVER_MOMENTUM).unwrap();
            prop_assert!(ident::pair_phase_distance(fixed, [q.alpha(), q.beta()]) < 1e-12);
        }
        prop_assert!((sum - 1.0).abs() < TOL);
    }

    #[test]
    fn first_quantized_route_matches(q in qubit()) {
        let p = PolarizationState::from_qubit(&q, ident::INPUT_MOMENTUM).unwrap();
        let direct = ident::total_state(&p).unwrap();
        let literal = ident::first_quantized_total_state(&p).unwrap();
        prop_assert!(literal.distance(&direct).unwrap() < TOL);
    }
}
