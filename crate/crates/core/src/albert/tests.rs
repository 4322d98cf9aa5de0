use super::*;
use crate::eiii::orbit_sample;
use crate::liealg::f4_basis;
use crate::rep27::{act27, act27_dual, exp_nilpotent, mat_apply, xi_generator};
use crate::rng::Rng;
use proptest::prelude::*;

fn two() -> ExtScalar {
    ExtScalar::from_int(2)
}

#[test]
fn sigma_sends_singlet_to_singlet() {
    assert_eq!(phi_empty().map(sigma_iso), psi_empty());
    let mut rng = Rng::new(1);
    for _ in 0..10 {
        let f = Covector27::random(&mut rng);
        assert_eq!(sigma_inv(&sigma_iso(&f)), f);
        let p = Vector27::random(&mut rng);
        assert_eq!(sigma_iso(&sigma_inv(&p)), p);
    }
}

#[test]
fn sigma_intertwines_f4() {
    let mut rng = Rng::new(2);
    let basis = f4_basis();
    for _ in 0..20 {
        let f = Covector27::random(&mut rng);
        for x in &basis {
            assert_eq!(sigma_iso(&act27_dual(x, &f).unwrap()), act27(x, &sigma_iso(&f)).unwrap());
        }
    }
}

#[test]
fn singlet_is_fixed_by_f4() {
    let w = psi_empty().root3;
    for x in f4_basis() {
        assert!(act27(&x, &w).unwrap().is_zero());
    }
}

#[test]
fn pairing_two_routes_agree() {
    let mut rng = Rng::new(3);
    for _ in 0..30 {
        let a = Vector27::random(&mut rng);
        let b = Vector27::random(&mut rng);
        assert_eq!(f4_pairing(&a, &b), f4_pairing_split(&a, &b));
        assert_eq!(f4_pairing(&a, &b), f4_pairing(&b, &a));
    }
}

#[test]
fn pairing_is_f4_invariant() {
    let mut rng = Rng::new(4);
    let a = Vector27::random(&mut rng);
    let b = Vector27::random(&mut rng);
    for x in f4_basis() {
        let s = &f4_pairing(&act27(&x, &a).unwrap(), &b) + &f4_pairing(&a, &act27(&x, &b).unwrap());
        assert!(s.is_zero());
    }
}

#[test]
fn pairing_with_singlet_is_the_trace_coordinate() {
    let mut rng = Rng::new(5);
    for _ in 0..10 {
        let p = Vector27::random(&mut rng);
        let sp = Split::of(&p);
        let g = psi_empty().map(|w| f4_pairing(&p, w));
        // √3⟨Ψ, Ψ_∅⟩ = s + t
        let scaled = g.scale(&Surd3::root3(ExtScalar::one()));
        assert_eq!(scaled.rational_part(), Some(&(&sp.s + &sp.t)));
        assert_eq!(j_map(&p).trace(), &(&sp.s + &sp.t) * &q(-1, 2));
        assert_eq!(j_map_complex(&p).trace(), &sp.s + &sp.t);
    }
}

#[test]
fn psi_o_identities() {
    let o = psi_o();
    assert_eq!(j_map(&o), JordanMatrix::diagonal([ExtScalar::zero(), ExtScalar::one(), ExtScalar::zero()]));
    assert_eq!(f4_pairing(&o, &o), two());
    // Ψ_o⋄Ψ_o + 2Ψ_o + 2√3Ψ_∅ = 0
    let lhs = Surd3::rational(diamond_f4(&o, &o).add(&o.scale(&two())));
    let total = lhs.add(&psi_empty().scale(&Surd3::root3(two())));
    assert!(total.is_zero());
    assert!(reality_check(&o));
    assert!(!reality_check(&o.scale(&ExtScalar::i())));
    assert!(reality_check(&Vector27::lowest()));
}

#[test]
fn diamond_two_routes_agree() {
    let mut rng = Rng::new(6);
    for _ in 0..20 {
        let a = Vector27::random(&mut rng);
        let b = Vector27::random(&mut rng);
        assert_eq!(diamond_f4(&a, &b), diamond_f4_split(&a, &b));
        assert_eq!(diamond_f4(&a, &b), diamond_f4(&b, &a));
    }
}

#[test]
fn random_real_points_are_real() {
    let mut rng = Rng::new(7);
    for _ in 0..10 {
        assert!(reality_check(&random_real(&mut rng)));
    }
}

#[test]
fn master_identity_real() {
    let mut rng = Rng::new(8);
    let quarter = q(1, 4);
    for _ in 0..20 {
        let a = random_real(&mut rng);
        let b = random_real(&mut rng);
        let lhs = jordan_star(&j_map(&a), &j_map(&b));
        let rhs = j_map(&diamond_f4(&a, &b))
            .scale(&q(-1, 2))
            .add(&JordanMatrix::identity().scale(&(&f4_pairing(&a, &b) * &quarter)));
        assert_eq!(lhs, rhs);
    }
}

#[test]
fn master_identity_complex() {
    let mut rng = Rng::new(9);
    let quarter = q(1, 4);
    for _ in 0..10 {
        let a = Vector27::random(&mut rng);
        let b = Vector27::random(&mut rng);
        let lhs = jordan_star(&j_map(&a), &j_map(&b));
        let rhs = j_map(&diamond_f4(&a, &b))
            .scale(&q(-1, 2))
            .add(&JordanMatrix::identity().scale(&(&f4_pairing(&a, &b) * &quarter)));
        assert_eq!(lhs, rhs);
    }
}

#[test]
fn trace_is_f4_invariant() {
    let mut rng = Rng::new(10);
    let p = Vector27::random(&mut rng);
    for x in f4_basis() {
        assert!(j_map(&act27(&x, &p).unwrap()).trace().is_zero());
    }
}

#[test]
fn determinant_three_routes() {
    let mut rng = Rng::new(11);
    for _ in 0..20 {
        let p = Vector27::random(&mut rng);
        let d = jordan_det(&p);
        assert_eq!(d, jordan_det_split(&p));
        assert_eq!(d, det_generic(&j_map_complex(&p)));
    }
    let m = JordanMatrix::diagonal([two(), ExtScalar::from_int(3), ExtScalar::from_int(5)]);
    assert_eq!(det_generic(&m), ExtScalar::from_int(30));
}

#[test]
fn determinant_is_e6_invariant() {
    let mut rng = Rng::new(12);
    for _ in 0..5 {
        let g = exp_nilpotent(&xi_generator(&Spinor::random(5, Chirality::Plus, &mut rng))).unwrap();
        let p = Vector27::random(&mut rng);
        assert_eq!(jordan_det(&mat_apply(&g, &p)), jordan_det(&p));
    }
}

#[test]
fn orbit_projection() {
    for seed in 0..10 {
        let p = orbit_sample(seed, 6).unwrap();
        assert_eq!(plucker8_failure(&p), None);
        assert!(veronese_complex(&p).check());
        let pr = f4_orbit_project(&p).unwrap();
        assert_eq!(jordan_star(&pr, &pr), pr);
        assert!(pr.trace().is_one());
    }
}

#[test]
fn stratum_at_infinity() {
    let (_, _, p) = stratum_witness(400).expect("a witness with s + t = 0");
    assert!(f4_orbit_project(&p).is_err());
    assert!(psi_empty().map(|w| f4_pairing(&p, w)).is_zero());
}

#[test]
fn real_veronese_points() {
    let mut rng = Rng::new(13);
    for _ in 0..10 {
        let a = Octonion::random_real(&mut rng);
        let b = Octonion::random_real(&mut rng);
        let ver = veronese_from_chart(1, &a, &b).unwrap();
        assert!(ver.check());
        assert!(ver.lambda_sum().is_one());
        let p = real_from_veronese(&ver).unwrap();
        assert!(reality_check(&p));
        assert_eq!(veronese_real(&p), ver);
        let j = j_map(&p);
        assert_eq!(j, ver.matrix());
        assert_eq!(jordan_star(&j, &j), j);
        let sq = Surd3::rational(diamond_f4(&p, &p).add(&p.scale(&two())));
        assert!(sq.add(&psi_empty().scale(&Surd3::root3(two()))).is_zero());
    }
}

#[test]
fn chart_transitions_and_cocycle() {
    let mut rng = Rng::new(14);
    for _ in 0..10 {
        let a = Octonion::random_real(&mut rng);
        let b = Octonion::random_real(&mut rng);
        let ver = veronese_from_chart(1, &a, &b).unwrap();
        let c1 = projective_chart(1, &ver).unwrap();
        let c2 = projective_chart(2, &ver).unwrap();
        let c3 = projective_chart(3, &ver).unwrap();
        let t12 = chart_transition_oct(&c1.0, &c1.1).unwrap();
        assert_eq!(t12, c2);
        let t23 = chart_transition_oct(&t12.0, &t12.1).unwrap();
        assert_eq!(t23, c3);
        assert_eq!(chart_transition_oct(&t23.0, &t23.1).unwrap(), c1);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn star_commutes_and_has_unit(seed in any::<u64>()) {
        let mut rng = Rng::new(seed);
        let a = JordanMatrix::random(&mut rng);
        let b = JordanMatrix::random(&mut rng);
        prop_assert_eq!(jordan_star(&a, &b), jordan_star(&b, &a));
        prop_assert_eq!(jordan_star(&JordanMatrix::identity(), &b), b.clone());
        prop_assert_eq!(JordanMatrix::from_json(&b.to_json()).unwrap(), b);
    }
}

#[test]
fn suite_passes() {
    let checks = run_checks(&mut Rng::new(15), 6);
    let bad: Vec<_> = checks.iter().filter(|c| !c.passed()).collect();
    assert!(bad.is_empty(), "{bad:?}");
}

#[test]
fn real_arrangement_squares_to_a_scalar_on_the_orbit() {
    // the master identity with Ψ⋄Ψ = 0 leaves only the pairing term
    let p = orbit_sample(3, 5).unwrap();
    let j = j_map(&p);
    let expect = JordanMatrix::identity().scale(&(&f4_pairing(&p, &p) * &q(1, 4)));
    assert_eq!(jordan_star(&j, &j), expect);
    assert_ne!(jordan_star(&j, &j), j.scale(&j.trace()));
}

#[test]
fn zero_vector_is_veronese_with_zero_sum() {
    let ver = Veronese { x: Default::default(), lam: Default::default() };
    assert!(ver.check());
    assert!(ver.lambda_sum().is_zero());
    assert!(real_from_veronese(&ver).is_err());
}

#[test]
fn off_orbit_points_are_rejected() {
    let mut rng = Rng::new(16);
    let p = Vector27::random(&mut rng);
    assert!(f4_orbit_project(&p).is_err());
    assert!(!veronese_complex(&p).check());
    assert!(projective_chart(4, &veronese_complex(&p)).is_err());
    assert!(chart_transition_oct(&Octonion::unit(1), &Octonion::zero()).is_err());
}
