use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::json;
use ssr_core::constructions::{
    self, binary_cubics, exterior, hom_ef, j_commutant, spinor::HalfSpinor, tautological,
    three_forms::{PrimitiveThreeForms, ThreeForms},
    ConstructionId, Model,
};
use ssr_core::field::{ratio, rat, BaseField, Field, PrimeField, Rationals, Scalar};
use ssr_core::linalg::{self, Matrix};
use ssr_core::ssr::verify_ssr;

fn q(v: &[i64]) -> Vec<num_rational::BigRational> {
    v.iter().map(|&x| rat(x)).collect()
}

fn check_all<K: BaseField + 'static>(k: &K) {
    for id in ConstructionId::all_default() {
        let model = constructions::build(&id, k).unwrap_or_else(|e| panic!("{id}: {e}"));
        let report = verify_ssr(model.ssr(), false);
        assert!(report.passed(), "{id} over {}: {:?}", k.descriptor(), report.failures);
        assert!(report.m_mu_is_m(), "{id}: m_mu smaller than m");
    }
}

#[test]
fn every_construction_verifies_over_rationals() {
    check_all(&Rationals);
}

#[test]
fn every_construction_verifies_over_small_primes() {
    for p in [5, 7, 11, 13] {
        check_all(&PrimeField::new(p).unwrap());
    }
}

#[test]
fn dimensions() {
    let k = Rationals;
    let expect = [
        (ConstructionId::BinaryCubics, 4, 3),
        (ConstructionId::Tautological { n: 1 }, 2, 3),
        (ConstructionId::Tautological { n: 2 }, 4, 10),
        (ConstructionId::HomEF { m: 3 }, 6, 6),
        (ConstructionId::ThreeForms6, 20, 35),
        (ConstructionId::PrimitiveThreeForms6, 14, 21),
        (ConstructionId::HalfSpinor12, 32, 66),
    ];
    for (id, n, d) in expect {
        let s = constructions::construct(&id, &k).unwrap();
        assert_eq!((s.dim(), s.m_dim()), (n, d), "{id}");
    }
}

#[test]
fn cubic_examples() {
    let k = Rationals;
    let s = binary_cubics(&k).unwrap();
    assert_eq!(s.omega_eval(&q(&[1, 0, 0, 0]), &q(&[0, 0, 0, 1])), rat(1));
    let a = q(&[1, 0, 0, 1]);
    // diag(1, −1) = H
    assert_eq!(s.mu(&a), q(&[1, 0, 0]));
    assert_eq!(s.quartic(&a), rat(9));
    assert_eq!(s.psi(&a), q(&[-3, 0, 0, 3]));
    assert_eq!(s.quartic(&q(&[1, 0, 0, 0])), rat(0));
    // ω(P, P') = ad' − da' − 3(bc' − cb')
    let (p, p2) = (q(&[2, -1, 3, 5]), q(&[-1, 4, 1, 2]));
    let expect = p[0].clone() * &p2[3] - p[3].clone() * &p2[0]
        - rat(3) * (p[1].clone() * &p2[2] - p[2].clone() * &p2[1]);
    assert_eq!(s.omega_eval(&p, &p2), expect);
}


fn oracle_agrees<K: BaseField + 'static>(k: &K, id: &ConstructionId, random: usize, forced: usize) {
    let model = constructions::build(id, k).unwrap();
    let s = model.ssr();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let generic = |v: &[K::Elem]| !linalg::is_zero_vec(v) && linalg::is_zero_vec(&s.mu(v));
    for _ in 0..random {
        let v = s.random_vector(&mut rng);
        assert_eq!(model.zero_set_oracle(&v), generic(&v), "{id}: {v:?}");
    }
    for _ in 0..forced {
        if let Some(v) = model.sample_zero_set(&mut rng) {
            assert!(generic(&v), "{id}: sampled point has μ ≠ 0");
            assert!(model.zero_set_oracle(&v), "{id}: oracle rejects sampled point");
        }
    }
}

#[test]
fn zero_set_oracles_match_the_moment_map() {
    for id in ConstructionId::all_default() {
        oracle_agrees(&PrimeField::new(5).unwrap(), &id, 150, 40);
        oracle_agrees(&Rationals, &id, 60, 20);
    }
}

#[test]
fn zero_set_examples() {
    let k = Rationals;
    let cubics = constructions::BinaryCubics::new(&k).unwrap();
    assert!(cubics.zero_set_oracle(&q(&[1, 0, 0, 0])));
    let forms = ThreeForms::new(&k).unwrap();
    let mut v = vec![rat(0); 20];
    v[0] = rat(1);
    v[19] = rat(1);
    assert!(!forms.zero_set_oracle(&v));
    let spin = HalfSpinor::new(&k).unwrap();
    let mut vac = vec![rat(0); 32];
    vac[0] = rat(1);
    assert!(spin.zero_set_oracle(&vac));
    assert!(linalg::is_zero_vec(&spin.ssr().mu(&vac)));
}

#[test]
fn three_form_examples() {
    let k = Rationals;
    let forms = ThreeForms::new(&k).unwrap();
    let s = forms.ssr();
    let masks = forms.masks();
    let pos = |m: u32| masks.iter().position(|&x| x == m).unwrap();
    let (e123, e456) = (s.unit(pos(0b000111)), s.unit(pos(0b111000)));
    assert_eq!(pos(0b000111), 0);
    assert_eq!(s.omega_eval(&e123, &e456), rat(1));
    assert!(linalg::is_zero_vec(&s.mu(&e123)));
    assert_eq!(s.quartic(&linalg::vadd(&e123, &e456)), rat(9));
    // the form pairs monomials with complementary support only
    for (i, &a) in masks.iter().enumerate() {
        for (j, &b) in masks.iter().enumerate() {
            let w = s.omega().gram()[(i, j)].clone();
            assert_eq!(w.is_zero(), a | b != 63, "{a:06b} {b:06b}");
            // grading by the number of indices among the first three
            let deg = |m: u32| (m & 7).count_ones() as i32 - (m >> 3).count_ones() as i32;
            if !w.is_zero() {
                assert_eq!(deg(a) + deg(b), 0);
            }
        }
    }
}

#[test]
fn primitive_forms_restrict_the_three_form_moment() {
    let k = Rationals;
    let prim = PrimitiveThreeForms::new(&k, None).unwrap();
    let s = prim.ssr();
    assert_eq!(s.dim(), 14);
    let forms = prim.ambient();
    let mut e123 = vec![rat(0); 20];
    e123[0] = rat(1);
    let v = prim.restrict(&e123).expect("e¹²³ is primitive");
    assert!(linalg::is_zero_vec(&s.mu(&v)));
    assert!(prim.zero_set_oracle(&v));
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..10 {
        let (a, b) = (s.random_vector(&mut rng), s.random_vector(&mut rng));
        let inside = s.m_matrix(&s.bmu(&a, &b));
        let outside = forms.ssr().m_matrix(&forms.ssr().bmu(&prim.embed(&a), &prim.embed(&b)));
        let restricted = Matrix::from_cols(
            &k.zero(),
            &(0..14).map(|c| outside.mul_vec(&prim.embed(&s.unit(c)))).collect::<Vec<_>>(),
            20,
        )
        .unwrap();
        let lifted = Matrix::from_cols(
            &k.zero(),
            &(0..14).map(|c| prim.embed(&inside.mul_vec(&s.unit(c)))).collect::<Vec<_>>(),
            20,
        )
        .unwrap();
        assert_eq!(restricted, lifted);
        assert_eq!(s.omega_eval(&a, &b), forms.ssr().omega_eval(&prim.embed(&a), &prim.embed(&b)));
    }
}

#[test]
fn primitive_forms_accept_another_symplectic_form() {
    let k = PrimeField::new(7).unwrap();
    let mut om = Matrix::zeros(&k, 6, 6);
    for (i, j) in [(0, 1), (2, 3), (4, 5)] {
        om[(i, j)] = k.one();
        om[(j, i)] = -k.one();
    }
    om[(0, 3)] = k.from_i64(2);
    om[(3, 0)] = k.from_i64(-2);
    let prim = PrimitiveThreeForms::new(&k, Some(om)).unwrap();
    assert!(verify_ssr(prim.ssr(), false).passed());
    let degenerate = Matrix::zeros(&k, 6, 6);
    assert!(PrimitiveThreeForms::new(&k, Some(degenerate)).is_err());
}

#[test]
fn spinor_form_pairs_complementary_degrees() {
    let k = PrimeField::new(7).unwrap();
    let spin = HalfSpinor::new(&k).unwrap();
    let g = spin.ssr().omega().gram();
    for (i, &a) in spin.masks().iter().enumerate() {
        for (j, &b) in spin.masks().iter().enumerate() {
            if !g[(i, j)].is_zero() {
                assert_eq!(a | b, 63);
                assert_eq!(a & b, 0);
            }
        }
    }
}

#[test]
fn tautological_covariants_vanish() {
    let k = Rationals;
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for n in 1..=3 {
        let s = tautological(&k, n).unwrap();
        assert_eq!(s.m_dim(), n * (2 * n + 1));
        for _ in 0..20 {
            let a = s.random_vector(&mut rng);
            assert!(linalg::is_zero_vec(&s.psi(&a)));
            assert!(s.quartic(&a).is_zero());
        }
    }
}

#[test]
fn j_commutant_examples() {
    let k = Rationals;
    let j = Matrix::from_i64(&k, &[&[1, 0], &[0, -1]]);
    let s = j_commutant(&k, 1, &rat(1), Some(j.clone())).unwrap();
    assert!(verify_ssr(&s, false).passed());
    assert!(linalg::is_zero_vec(&s.mu(&q(&[1, 0]))));
    let v = q(&[1, 1]);
    assert_eq!(s.quartic(&v), rat(9));
    // Ψ(v) = (3/2λ)ω(v, Jv)Jv and Q(v) = (9/4λ)ω(v, Jv)²
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for lambda in [1, 2, -3] {
        let lam = rat(lambda);
        let s = j_commutant(&k, 2, &lam, None).unwrap();
        let jm = j_commutant::default_j(&k, 2, &lam);
        for _ in 0..10 {
            let v = s.random_vector(&mut rng);
            let jv = jm.mul_vec(&v);
            let w = s.omega_eval(&v, &jv);
            let c = ratio(3, 2) / &lam * &w;
            assert_eq!(s.psi(&v), linalg::vscale(&c, &jv));
            assert_eq!(s.quartic(&v), ratio(9, 4) / &lam * &w * &w);
        }
    }
    assert!(matches!(
        j_commutant(&k, 2, &rat(1), Some(Matrix::from_i64(&k, &[&[1, 0, 0, 0], &[0, -1, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, -1]]))),
        Err(ssr_core::Error::InvalidJ(_))
    ));
    assert!(j_commutant(&k, 1, &rat(2), Some(j)).is_err());
}

#[test]
fn j_commutant_with_nonsquare_has_trivial_zero_set() {
    let k = PrimeField::new(5).unwrap();
    let s = j_commutant(&k, 2, &k.from_i64(2), None).unwrap();
    let all = k.elements().unwrap();
    for idx in 1..625usize {
        let v: Vec<_> = (0..4).map(|t| all[idx / 5usize.pow(t) % 5]).collect();
        assert!(!linalg::is_zero_vec(&s.mu(&v)));
    }
}

#[test]
fn hom_ef_formulas() {
    let k = Rationals;
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    let g = Matrix::from_i64(&k, &[&[1, 0, 0], &[0, 2, 1], &[0, 1, -1]]);
    for gm in [None, Some(g)] {
        let model = hom_ef::HomEF::new(&k, 3, gm.clone()).unwrap();
        let s = model.ssr();
        assert!(verify_ssr(s, false).passed());
        let g = gm.unwrap_or_else(|| Matrix::identity(&k, 3));
        for _ in 0..10 {
            let (a, b) = (s.random_vector(&mut rng), s.random_vector(&mut rng));
            let (a1, a2, b1, b2) = (&a[..3], &a[3..], &b[..3], &b[3..]);
            assert_eq!(s.omega_eval(&a, &b), g.bilinear(a1, b2) - g.bilinear(a2, b1));
            let expect = rat(9)
                * (g.bilinear(a1, a2) * g.bilinear(a1, a2) - g.bilinear(a1, a1) * g.bilinear(a2, a2));
            assert_eq!(s.quartic(&a), expect);
        }
        assert!(linalg::is_zero_vec(&s.mu(&s.zero_vec())));
    }
    let degenerate = Matrix::from_i64(&k, &[&[1, 0], &[0, 0]]);
    assert!(matches!(hom_ef::hom_ef(&k, 2, Some(degenerate)), Err(ssr_core::Error::DegenerateForm)));
}

#[test]
fn construction_ids_parse() {
    assert_eq!("binary_cubics".parse::<ConstructionId>().unwrap(), ConstructionId::BinaryCubics);
    assert_eq!(
        ConstructionId::from_name("JCommutant", &json!({"n": 1, "lambda_j": 2})).unwrap(),
        ConstructionId::JCommutant { n: 1, lambda: 2 }
    );
    assert!(ConstructionId::from_name("Tautological", &json!({"n": 0})).is_err());
    assert!("e8".parse::<ConstructionId>().is_err());
}

#[test]
fn exterior_order_is_lexicographic() {
    let m = exterior::subsets(6, 3);
    assert_eq!(m.len(), 20);
    assert_eq!(&m[..4], &[0b000111, 0b001011, 0b010011, 0b100011]);
}
