use num_rational::BigRational;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use ssr_core::constructions::{self, binary_cubics, tautological, ConstructionId, ThreeForms};
use ssr_core::field::{rat, ratio, Field, PrimeField, Rationals, Scalar};
use ssr_core::linalg;
use ssr_core::ssr::{
    check_polarizations, classical_eisenstein, coisotropy_check, covariant_identities, covariant_report,
    eisenstein_syzygy, minimal_polynomial_mu, moment_tilde, orbit_geometry, q_vanishing_test, verify_ssr,
    SsrData,
};
use ssr_core::Error;

fn q(v: &[i64]) -> Vec<BigRational> {
    v.iter().map(|&x| rat(x)).collect()
}

fn cubics() -> SsrData<Rationals> {
    binary_cubics(&Rationals).unwrap()
}

#[test]
fn cubic_covariants() {
    let s = cubics();
    let p0 = q(&[1, 0, 0, 1]);
    let r = covariant_report(&s, &p0).unwrap();
    assert_eq!(r.q, rat(9));
    assert_eq!(r.psi, q(&[-3, 0, 0, 3]));
    assert_eq!(r.ker_dmu_dim, 1);
    assert!(s.ker_dmu(&p0).contains(&r.psi));
    // μ(Ψ(P₀)) = −9 μ(P₀) and Q(Ψ(P₀)) = 9³
    assert_eq!(s.mu(&r.psi), q(&[-9, 0, 0]));
    assert_eq!(s.quartic(&r.psi), rat(729));
    let zero = covariant_report(&s, &s.zero_vec()).unwrap();
    assert!(linalg::is_zero_vec(&zero.mu) && linalg::is_zero_vec(&zero.psi) && zero.q.is_zero());
    assert_eq!(s.ker_dmu(&s.zero_vec()).dim(), 4);
}

#[test]
fn quartic_is_the_discriminant() {
    let s = cubics();
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for _ in 0..50 {
        let p = s.random_vector(&mut rng);
        let (a, b, c, d) = (&p[0], &p[1], &p[2], &p[3]);
        let u = a.clone() * d - b.clone() * c;
        let disc = rat(9) * (u.square() + rat(4) * (b.clone() * d - c.square()) * (b.square() - a.clone() * c));
        assert_eq!(s.quartic(&p), disc);
    }
}

#[test]
fn scaled_moment_breaks_the_identity() {
    let s = tautological(&Rationals, 2).unwrap();
    assert!(verify_ssr(&s, false).passed());
    let n = s.dim();
    let bmu: Vec<Vec<BigRational>> = (0..n * n)
        .map(|t| linalg::vscale(&rat(2), s.bmu_basis(t / n, t % n)))
        .collect();
    let bad = SsrData::new(Rationals, s.omega().gram().clone(), s.m_basis().to_vec(), bmu).unwrap();
    let report = verify_ssr(&bad, false);
    assert!(!report.defining_identity);
    assert!(report.invariance && report.equivariance);
}

#[test]
fn normalizer_contains_the_algebra() {
    let s = cubics();
    let report = verify_ssr(&s, true);
    let nd = report.normalizer_dim.unwrap();
    assert!(nd >= report.m_mu_dim);
}

#[test]
fn vanishing_quartic_examples() {
    let s = cubics();
    assert!(!q_vanishing_test(&s, &q(&[1, 0, 0, 1])).unwrap());
    assert!(q_vanishing_test(&s, &q(&[1, 0, 0, 0])).unwrap());
    assert!(matches!(q_vanishing_test(&s, &s.zero_vec()), Err(Error::ZeroVector)));
    let x3 = q(&[1, 0, 0, 0]);
    let m = minimal_polynomial_mu(&s, &x3).unwrap();
    assert!(m.psi_zero && m.mu_cubed_zero && m.holds);
}

#[test]
fn minimal_polynomial_of_a_split_three_form() {
    let forms = ThreeForms::new(&Rationals).unwrap();
    let s = constructions::Model::ssr(&forms);
    let mut a = s.zero_vec();
    a[0] = rat(1);
    a[19] = rat(1);
    let m = minimal_polynomial_mu(s, &a).unwrap();
    assert!(m.holds);
    // (x² − 9)(x² − 1) = x⁴ − 10x² + 9
    assert_eq!(m.minimal_polynomial.coeffs, q(&[9, 0, -10, 0, 1]));
    let mut e123 = s.zero_vec();
    e123[0] = rat(1);
    assert_eq!(minimal_polynomial_mu(s, &e123).unwrap().minimal_polynomial.coeffs, q(&[0, 1]));
}

#[test]
fn classical_syzygy_examples() {
    let s = cubics();
    let p0 = q(&[1, 0, 0, 1]);
    let r = classical_eisenstein(&s, &p0, &q(&[1, 0])).unwrap();
    assert_eq!((r.x, r.y, r.z, r.delta.clone()), (rat(-1), rat(1), rat(0), rat(1)));
    let r = classical_eisenstein(&s, &p0, &q(&[1, 1])).unwrap();
    assert_eq!((r.x, r.y, r.z, r.delta), (rat(0), rat(2), rat(-1), rat(1)));
    let r = classical_eisenstein(&s, &s.zero_vec(), &q(&[3, -2])).unwrap();
    assert!(r.holds && r.x.is_zero() && r.y.is_zero() && r.z.is_zero() && r.delta.is_zero());
    let t = tautological(&Rationals, 2).unwrap();
    assert!(matches!(
        classical_eisenstein(&t, &p0, &q(&[1, 0])),
        Err(Error::WrongConstruction(_))
    ));
}

#[test]
fn eisenstein_on_the_split_plane() {
    let s = cubics();
    let p0 = q(&[1, 0, 0, 1]);
    let r = eisenstein_syzygy(&s, &p0).unwrap();
    assert!(r.holds);
    let mu = s.mu_matrix(&p0);
    let psi = s.psi(&p0);
    for v in [&p0, &psi] {
        assert_eq!(r.lhs.mul_vec(v), linalg::vscale(&rat(-6), &mu.mul_vec(v)));
    }
}

#[test]
fn moment_tilde_vanishes_on_tautological_moment() {
    let s = tautological(&Rationals, 2).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let v = s.random_vector(&mut rng);
    assert!(moment_tilde(&s, &s.zero_vec()).iter().all(Scalar::is_zero));
    let c = s.mu(&v);
    let value: BigRational = moment_tilde(&s, &v)
        .iter()
        .zip(&c)
        .map(|(x, y)| x.clone() * y)
        .fold(rat(0), |acc, t| acc + t);
    assert!(value.is_zero());
}

#[test]
fn broken_data_can_fail_coisotropy() {
    // only the diagonal part of sp(4), so orbits are too small to be coisotropic
    let s = tautological(&Rationals, 2).unwrap();
    let cartan: Vec<_> = s
        .m_basis()
        .iter()
        .filter(|x| (0..4).all(|i| (0..4).all(|j| i == j || x[(i, j)].is_zero())))
        .cloned()
        .collect();
    assert_eq!(cartan.len(), 2);
    let n = s.dim();
    let bad = SsrData::new(Rationals, s.omega().gram().clone(), cartan, vec![vec![rat(0); 2]; n * n]).unwrap();
    let r = coisotropy_check(&bad, &q(&[1, 0, 0, 0])).unwrap();
    assert!(!r.holds);
    assert!(r.witness.is_some());
}

fn sweep<K: Field + ssr_core::field::BaseField + 'static>(k: &K, samples: usize) {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for id in ConstructionId::all_default() {
        let model = constructions::build(&id, k).unwrap();
        let s = model.ssr();
        for _ in 0..samples {
            let a = s.random_nonzero_vector(&mut rng);
            let b = s.random_vector(&mut rng);
            let c = s.random_vector(&mut rng);
            let d = s.random_vector(&mut rng);
            check_polarizations(s, &a, &b, &c, &d).unwrap_or_else(|e| panic!("{id}: {e}"));
            assert!(coisotropy_check(s, &a).unwrap().holds, "{id}");
            q_vanishing_test(s, &a).unwrap_or_else(|e| panic!("{id}: {e}"));
            orbit_geometry(s, &a).unwrap_or_else(|e| panic!("{id}: {e}"));
            let (x, y) = (k.random(&mut rng), k.random(&mut rng));
            let ids = covariant_identities(s, &a, &x, &y).unwrap();
            assert!(ids.all_hold(), "{id}: {:?}", ids.failures());
            assert!(eisenstein_syzygy(s, &a).unwrap().holds, "{id}");
            if s.dim() > 2 {
                assert!(minimal_polynomial_mu(s, &a).unwrap().holds, "{id}");
            }
        }
        // forced zero-set points
        if let Some(z) = model.sample_zero_set(&mut rng) {
            let g = orbit_geometry(s, &z).unwrap();
            assert!(g.mu_zero && g.lagrangian, "{id}");
        }
    }
}

#[test]
fn geometry_and_identities_over_f7() {
    sweep(&PrimeField::new(7).unwrap(), 6);
}

#[test]
fn geometry_and_identities_over_rationals() {
    sweep(&Rationals, 3);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn classical_syzygy_holds(p in proptest::collection::vec(-6i64..6, 4), v in proptest::collection::vec(-6i64..6, 2)) {
        let s = cubics();
        let r = classical_eisenstein(&s, &q(&p), &q(&v)).unwrap();
        prop_assert!(r.holds);
    }

    #[test]
    fn cubic_identities_hold(p in proptest::collection::vec(-5i64..5, 4), a in -4i64..4, b in -4i64..4) {
        let s = cubics();
        let ids = covariant_identities(&s, &q(&p), &rat(a), &ratio(b, 3)).unwrap();
        prop_assert!(ids.all_hold());
    }
}
