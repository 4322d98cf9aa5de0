use super::*;
use crate::liealg::{bracket, same_span, SO10};
use proptest::prelude::*;
use crate::rng::Rng;

fn rand_e6(rng: &mut Rng) -> LieElement {
    LieElement::from_coords(Algebra::E6, rng.gaussians(E6_DIM)).unwrap()
}

fn e6_basis() -> Vec<LieElement> {
    (0..E6_DIM).map(|k| LieElement::basis(Algebra::E6, k)).collect()
}

#[test]
fn rho_block_weights() {
    let mut rng = Rng::new(1);
    let rho = LieElement::basis(Algebra::E6, E6_RHO);
    let p = Vector27::random(&mut rng);
    let got = act27(&rho, &p).unwrap();
    let i = ExtScalar::i();
    assert_eq!(got.v, vscale(&p.v, &(&i * &ExtScalar::from_int(2))));
    assert_eq!(got.psi, p.psi.scale(&-&i));
    assert_eq!(got.s, &p.s * &(&i * &ExtScalar::from_int(-4)));

    let f = Covector27::random(&mut rng);
    let got = act27_dual(&rho, &f).unwrap();
    assert_eq!(got.u, vscale(&f.u, &(&i * &ExtScalar::from_int(-2))));
    assert_eq!(got.phi, f.phi.scale(&i));
    assert_eq!(got.t, &f.t * &(&i * &ExtScalar::from_int(4)));
}

#[test]
fn xi_moves_psi0_into_spinor_slot() {
    let mut rng = Rng::new(2);
    let xi = Spinor::random(5, Chirality::Plus, &mut rng);
    let got = act27(&xi_generator(&xi), &Vector27::lowest()).unwrap();
    assert_eq!(got, Vector27 { v: vec![ExtScalar::zero(); 10], psi: xi, s: ExtScalar::zero() });
}

#[test]
fn representation_property() {
    let mut rng = Rng::new(3);
    for _ in 0..20 {
        let x = rand_e6(&mut rng);
        let y = rand_e6(&mut rng);
        let p = Vector27::random(&mut rng);
        let lhs = act27(&bracket(&x, &y).unwrap(), &p).unwrap();
        let rhs = act27(&x, &act27(&y, &p).unwrap()).unwrap().sub(&act27(&y, &act27(&x, &p).unwrap()).unwrap());
        assert_eq!(lhs, rhs);
        let f = Covector27::random(&mut rng);
        let lhs = act27_dual(&bracket(&x, &y).unwrap(), &f).unwrap();
        let rhs = act27_dual(&x, &act27_dual(&y, &f).unwrap())
            .unwrap()
            .sub(&act27_dual(&y, &act27_dual(&x, &f).unwrap()).unwrap());
        assert_eq!(lhs, rhs);
    }
}

#[test]
fn dual_action_is_contragredient() {
    let mut rng = Rng::new(4);
    for x in e6_basis() {
        let f = Covector27::random(&mut rng);
        let p = Vector27::random(&mut rng);
        let a = pairing(&act27_dual(&x, &f).unwrap(), &p);
        let b = pairing(&f, &act27(&x, &p).unwrap());
        assert!((&a + &b).is_zero());
    }
    for k in 0..SO10 {
        let got = act27_dual(&LieElement::basis(Algebra::E6, k), &Covector27::lowest()).unwrap();
        assert!(got.t.is_zero());
    }
}

#[test]
fn cubic_invariant_under_every_generator() {
    let mut rng = Rng::new(5);
    for x in e6_basis() {
        for _ in 0..3 {
            let [a, b, c] = [0, 1, 2].map(|_| Vector27::random(&mut rng));
            let s = &(&d_cubic(&act27(&x, &a).unwrap(), &b, &c) + &d_cubic(&a, &act27(&x, &b).unwrap(), &c))
                + &d_cubic(&a, &b, &act27(&x, &c).unwrap());
            assert!(s.is_zero());
            let [a, b, c] = [0, 1, 2].map(|_| Covector27::random(&mut rng));
            let s = &(&d_dual(&act27_dual(&x, &a).unwrap(), &b, &c) + &d_dual(&a, &act27_dual(&x, &b).unwrap(), &c))
                + &d_dual(&a, &b, &act27_dual(&x, &c).unwrap());
            assert!(s.is_zero());
        }
    }
}

#[test]
fn lowest_weights_square_to_zero() {
    assert!(diamond27(&Vector27::lowest(), &Vector27::lowest()).is_zero());
    assert!(diamond27_dual(&Covector27::lowest(), &Covector27::lowest()).is_zero());
}

#[test]
fn diamond_identities_hold() {
    let mut rng = Rng::new(6);
    for _ in 0..10 {
        let [a, b, c, d] = [0, 1, 2, 3].map(|_| Vector27::random(&mut rng));
        assert_eq!(diamond_identity_one([&a, &b, &c, &d]), None);
        let f = Covector27::random(&mut rng);
        assert_eq!(diamond_identity_two([&a, &b, &c], &f), None);
    }
}

#[test]
fn diamond_identity_detects_a_wrong_scale() {
    // scaling the dual diamond by 2 must break the first identity
    let mut rng = Rng::new(7);
    let [a, b, c, d] = [0, 1, 2, 3].map(|_| Vector27::random(&mut rng));
    let two = ExtScalar::from_int(2);
    let mut lhs = Vector27::zero();
    for (x, y, z) in [(&a, &b, &c), (&b, &c, &a), (&c, &a, &b)] {
        lhs = lhs.add(&diamond27_dual(&diamond27(x, y), &diamond27(z, &d)).scale(&two)).sub(&z.scale(&d_cubic(x, y, &d)));
    }
    assert_ne!(lhs, d.scale(&d_cubic(&a, &b, &c)));
}

#[test]
fn stabiliser_of_psi0() {
    let stab = stabilizer_psi0();
    assert_eq!(stab.len(), 45);
    let so10: Vec<LieElement> = (0..SO10).map(|k| LieElement::basis(Algebra::E6, k)).collect();
    assert!(same_span(&stab, &so10));
    for x in &so10 {
        assert!(act27(x, &Vector27::lowest()).unwrap().is_zero());
    }
    let rho = LieElement::basis(Algebra::E6, E6_RHO);
    let got = act27(&rho, &Vector27::lowest()).unwrap();
    assert_eq!(got, Vector27::lowest().scale(&(&ExtScalar::i() * &ExtScalar::from_int(-4))));
    assert_eq!(annihilator_psi0_complex().len(), 61);
}

#[test]
fn nilpotent_exponentials() {
    let mut rng = Rng::new(8);
    for _ in 0..5 {
        let xi = Spinor::random(5, Chirality::Plus, &mut rng);
        let eta = Spinor::random(5, Chirality::Minus, &mut rng);
        for z in [xi_generator(&xi), eta_generator(&eta)] {
            let e = exp_nilpotent(&z).unwrap();
            let back = exp_nilpotent(&z.scale(&ExtScalar::from_int(-1))).unwrap();
            assert_eq!(mat_mul(&e, &back), identity27());
        }
    }
    let mixed = xi_generator(&Spinor::basis(5, 0)).add(&eta_generator(&Spinor::basis(5, 1)));
    assert!(exp_nilpotent(&mixed).is_err());
    assert!(exp_nilpotent(&LieElement::basis(Algebra::E6, 0)).is_err());
}

#[test]
fn exponential_preserves_cubic() {
    let mut rng = Rng::new(9);
    let g = exp_nilpotent(&xi_generator(&Spinor::random(5, Chirality::Plus, &mut rng))).unwrap();
    let [a, b, c] = [0, 1, 2].map(|_| Vector27::random(&mut rng));
    assert_eq!(d_cubic(&mat_apply(&g, &a), &mat_apply(&g, &b), &mat_apply(&g, &c)), d_cubic(&a, &b, &c));
}

#[test]
fn json_roundtrip() {
    let mut rng = Rng::new(10);
    let p = Vector27::random(&mut rng);
    let v = p.to_json();
    assert!(v.get("v").is_some() && v.get("psi").is_some() && v.get("s").is_some());
    assert_eq!(Vector27::from_json(&v).unwrap(), p);
    let f = Covector27::random(&mut rng);
    assert_eq!(Covector27::from_json(&f.to_json()).unwrap(), f);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn cubic_totally_symmetric(seed in any::<u64>()) {
        let mut rng = Rng::new(seed);
        let [a, b, c] = [0, 1, 2].map(|_| Vector27::random(&mut rng));
        let d = d_cubic(&a, &b, &c);
        prop_assert_eq!(&d, &d_cubic(&b, &a, &c));
        prop_assert_eq!(&d, &d_cubic(&a, &c, &b));
        prop_assert_eq!(&d, &d_cubic(&c, &b, &a));
        prop_assert_eq!(&pairing(&diamond27(&a, &b), &c), &d);
    }

    #[test]
    fn dual_cubic_matches_dual_diamond(seed in any::<u64>()) {
        let mut rng = Rng::new(seed);
        let [a, b, c] = [0, 1, 2].map(|_| Covector27::random(&mut rng));
        let d = d_dual(&a, &b, &c);
        prop_assert_eq!(&d, &d_dual(&b, &c, &a));
        prop_assert_eq!(&d, &d_dual(&b, &a, &c));
        prop_assert_eq!(&pairing(&c, &diamond27_dual(&a, &b)), &d);
    }
}
