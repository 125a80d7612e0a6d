//! Randomised invariants. Inputs are drawn from proptest seeds fed to a
//! ChaCha stream so failures shrink to a single reproducible seed.

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::sync::{Arc, OnceLock};
use trialkit::algebra::{random_scalar, Algebra, Element};
use trialkit::algebra_file::AlgebraFile;
use trialkit::assoc_examples::{assoc_sigma_triple, cayley_transform, unitary_triple};
use trialkit::autos::{hurwitz_sigma_map, unipotent_bridge, BridgeDirection};
use trialkit::constructors::{named, para_zorn, ZornCoefficients};
use trialkit::fields::{sqrt_in_field, Field, Scalar};
use trialkit::linalg::Matrix;
use trialkit::symcomp::{lambda_space, sigma_from_pair, theorem25_triples};
use trialkit::triality::{trig_inv, trig_mul, verify_local, TrialityTriple};
use trialkit::zorn::{rho_map, zorn_rho, zorn_s_triple};

fn cached(slot: &'static OnceLock<Arc<Algebra>>, name: &str, f: Field) -> Arc<Algebra> {
    slot.get_or_init(|| Arc::new(named(name, f).unwrap())).clone()
}

fn octonions() -> Arc<Algebra> {
    static A: OnceLock<Arc<Algebra>> = OnceLock::new();
    cached(&A, "hurwitz:8", Field::Rationals)
}

fn para_octonions() -> Arc<Algebra> {
    static A: OnceLock<Arc<Algebra>> = OnceLock::new();
    cached(&A, "para:8", Field::Rationals)
}

fn pseudo_octonion() -> Arc<Algebra> {
    static A: OnceLock<Arc<Algebra>> = OnceLock::new();
    cached(&A, "pseudo-octonion", Field::quadratic(3).unwrap())
}

fn quaternions() -> Arc<Algebra> {
    static A: OnceLock<Arc<Algebra>> = OnceLock::new();
    cached(&A, "hurwitz:4", Field::Rationals)
}

fn fields() -> [Field; 4] {
    [Field::Rationals, Field::quadratic(3).unwrap(), Field::quadratic(-1).unwrap(), Field::prime(7).unwrap()]
}

fn nonzero(f: Field, r: &mut ChaCha8Rng) -> Scalar {
    loop {
        let s = random_scalar(f, r, 6);
        if !s.is_zero() {
            return s;
        }
    }
}

fn random_matrix(f: Field, n: usize, r: &mut ChaCha8Rng) -> Matrix {
    Matrix::from_fn(f, n, n, |_, _| random_scalar(f, r, 3))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn field_axioms(seed in any::<u64>(), which in 0usize..4) {
        let f = fields()[which];
        let r = &mut ChaCha8Rng::seed_from_u64(seed);
        let (a, b, c) = (random_scalar(f, r, 9), random_scalar(f, r, 9), random_scalar(f, r, 9));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a + &b, &b + &a);
        if !a.is_zero() {
            prop_assert!((&a * &a.inv().unwrap()).is_one());
        }
        let sq = a.square();
        let root = sqrt_in_field(&sq).expect("a square has a root");
        prop_assert_eq!(root.square(), sq);
    }

    #[test]
    fn sqrt_agrees_with_search(p in prop::sample::select(vec![3u64, 5, 7, 11, 13, 29, 31]), c in 0u64..31) {
        let f = Field::prime(p).unwrap();
        let c = Scalar::residue(f, c % p);
        let found = f.elements().unwrap().into_iter().any(|x| x.square() == c);
        match sqrt_in_field(&c) {
            Some(r) => prop_assert_eq!(r.square(), c),
            None => prop_assert!(!found),
        }
    }

    #[test]
    fn product_is_bilinear(seed in any::<u64>(), pick in 0usize..2) {
        let a = if pick == 0 { octonions() } else { pseudo_octonion() };
        let r = &mut ChaCha8Rng::seed_from_u64(seed);
        let (x, y, z) = (a.random_element(r, 4), a.random_element(r, 4), a.random_element(r, 4));
        let c = random_scalar(a.field(), r, 5);
        prop_assert_eq!(a.mul(&(&x + &y), &z), &a.mul(&x, &z) + &a.mul(&y, &z));
        prop_assert_eq!(a.mul(&x.scale(&c), &z), a.mul(&x, &z).scale(&c));
        prop_assert_eq!(a.left_op(&x).act(&y), a.mul(&x, &y));
        prop_assert_eq!(a.right_op(&y).act(&x), a.mul(&x, &y));
    }

    #[test]
    fn conjugation_is_functorial(seed in any::<u64>()) {
        let a = para_octonions();
        let r = &mut ChaCha8Rng::seed_from_u64(seed);
        let (p, q) = (random_matrix(a.field(), 8, r), random_matrix(a.field(), 8, r));
        let lhs = a.conjugate_map(&(&p * &q)).unwrap();
        let rhs = &a.conjugate_map(&p).unwrap() * &a.conjugate_map(&q).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    /// Words in σ/θ triples of basis Σ-triples and sign triples stay in Trig(A)
    /// and obey the group laws.
    #[test]
    fn trig_group_laws(picks in prop::collection::vec((1usize..8, 1usize..8, 0usize..4), 3)) {
        let a = para_octonions();
        let mut gens = Vec::new();
        for (i, j, k) in picks {
            let s = sigma_from_pair(&a, &a.basis(i), &a.basis(j)).unwrap();
            let st = theorem25_triples(&s).unwrap();
            prop_assert!(st.report.all_pass(), "{}", st.report.to_text());
            gens.push(if k == 0 { st.theta } else { trig_mul(&st.sigma, &TrialityTriple::klein(&a, k)).unwrap() });
        }
        let (g, h, k) = (&gens[0], &gens[1], &gens[2]);
        let left = trig_mul(&trig_mul(g, h).unwrap(), k).unwrap();
        let right = trig_mul(g, &trig_mul(h, k).unwrap()).unwrap();
        prop_assert_eq!(left.maps(), right.maps());
        let unit = trig_mul(g, &trig_inv(g).unwrap()).unwrap();
        prop_assert!(unit.is_identity());
        for m in left.maps() {
            prop_assert!(a.isometry_witness(m).unwrap().is_none());
        }
    }

    #[test]
    fn sigma_triple_consequences(i in 1usize..8, j in 1usize..8) {
        let a = para_octonions();
        let s = sigma_from_pair(&a, &a.basis(i), &a.basis(j)).unwrap();
        prop_assert_eq!(&a.mul(s.a(3), s.a(1)), s.a(2));
        prop_assert_eq!(&a.mul(s.a(2), s.a(3)), s.a(1));
    }

    #[test]
    fn dim2_locality_iff_trace_zero(l1 in -4i64..5, l2 in -4i64..5, l3 in -4i64..5) {
        let a = Arc::new(named("para2", Field::Rationals).unwrap());
        let rot = |c: i64| Matrix::from_ints(Field::Rationals, &[&[0, -c], &[c, 0]]);
        let ok = verify_local(&a, rot(l1), rot(l2), rot(l3)).is_ok();
        prop_assert_eq!(ok, l1 + l2 + l3 == 0);
    }

    #[test]
    fn rho_is_a_homomorphism(seed in any::<u64>(), nb in 0usize..3, k in 1i64..3) {
        let f = Field::Rationals;
        let r = &mut ChaCha8Rng::seed_from_u64(seed);
        let b = if nb == 2 {
            ZornCoefficients::from_algebra(&named("para2", f).unwrap()).unwrap()
        } else {
            ZornCoefficients::plain(f, nb)
        };
        let a = Arc::new(para_zorn(&b, &f.int(k)).unwrap());
        let (mu, nu) = (nonzero(f, r), nonzero(f, r));
        let (rm, _) = zorn_rho(&a, &mu).unwrap();
        let (rn, _) = zorn_rho(&a, &nu).unwrap();
        let (rmn, rep) = zorn_rho(&a, &(&mu * &nu)).unwrap();
        prop_assert!(rep.all_pass(), "{}", rep.to_text());
        let prod = trig_mul(&rm, &rn).unwrap();
        prop_assert_eq!(prod.maps(), rmn.maps());
        for j in 1..=3 {
            let inv = rho_map(b.dim(), j, &mu.inv().unwrap()).unwrap();
            prop_assert!((&inv * rm.g(j)).is_identity());
        }
        let (s, _) = zorn_s_triple(&a).unwrap();
        prop_assert!((&(s.t(1) + s.t(2)) + s.t(3)).is_zero());
    }

    /// p skew (p̄ = −p) gives a unitary Cayley transform wherever e + p is invertible.
    #[test]
    fn cayley_transform_is_unitary(seed in any::<u64>()) {
        let h = quaternions();
        let r = &mut ChaCha8Rng::seed_from_u64(seed);
        let x = h.random_element(r, 5);
        let p = &x - &h.bar(&x);
        match cayley_transform(&h, &p) {
            Ok(u) => {
                let e = h.unit().unwrap();
                prop_assert_eq!(&h.mul(&h.bar(&u), &u), e);
                prop_assert_eq!(&h.mul(&u, &h.bar(&u)), e);
                // three unitaries with a₁ = a₂ = a₃ give an automorphism of the conjugate algebra
                let t = unitary_triple(&h, u.clone(), u.clone(), u).unwrap();
                let s = assoc_sigma_triple(&t).unwrap();
                prop_assert!(s.report.all_pass(), "{}", s.report.to_text());
            }
            // over the quaternions e + p is invertible for every skew p
            Err(e) => prop_assert!(false, "{}", e),
        }
    }

    #[test]
    fn hurwitz_sigma_fixes_unit(i in 1usize..8, j in 1usize..8, k in 1usize..8) {
        // a = ½(−e + b) with b a sum of three distinct imaginary units
        prop_assume!(i != j && j != k && i != k);
        let h = octonions();
        let f = h.field();
        let b = &(&h.basis(i) + &h.basis(j)) + &h.basis(k);
        let a = (&b - h.unit().unwrap()).scale(&f.ratio(1, 2).unwrap());
        let s = hurwitz_sigma_map(&h, &a);
        prop_assert_eq!(&s.act(h.unit().unwrap()), h.unit().unwrap());
        prop_assert!(s.pow(3).is_identity());
        prop_assert!((&s * &hurwitz_sigma_map(&h, &h.bar(&a))).is_identity());
    }

    #[test]
    fn algebra_file_round_trip(seed in any::<u64>(), n in 1usize..4, which in 0usize..4) {
        let f = fields()[which];
        let r = &mut ChaCha8Rng::seed_from_u64(seed);
        let mut entries = Vec::new();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    entries.push((i, j, k, random_scalar(f, r, 4)));
                }
            }
        }
        let a = Algebra::from_entries("random", f, n, &entries).unwrap();
        let text = AlgebraFile::from_algebra(&a).to_json();
        let back = AlgebraFile::from_json(&text).unwrap().to_algebra().unwrap();
        prop_assert_eq!(&back, &a);
        prop_assert_eq!(AlgebraFile::from_algebra(&back).to_json(), text);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(8))]

    /// Λ(a) round trip p ↦ q ↦ p on every solved basis vector, for Σ-triples of
    /// the para-quaternions.
    #[test]
    fn lambda_round_trip(i in 1usize..4, j in 1usize..4) {
        let a = Arc::new(named("para:4", Field::Rationals).unwrap());
        let s = sigma_from_pair(&a, &a.basis(i), &a.basis(j)).unwrap();
        for v in lambda_space(&s).unwrap() {
            for m in 1..=3i64 {
                // p_j = q_{j+1} a_{j+2} = q_j − a_{j+1} q_{j+2}
                prop_assert_eq!(&a.mul(v.q(m + 1), s.a(m + 2)), v.p(m));
                prop_assert_eq!(&(v.q(m) - &a.mul(s.a(m + 1), v.q(m + 2))), v.p(m));
            }
        }
    }

    #[test]
    fn unipotent_round_trip_on_random_combinations(seed in any::<u64>()) {
        let z = named("zorn", Field::Rationals).unwrap();
        let ds = trialkit::autos::nilpotent_derivations(&z);
        let r = &mut ChaCha8Rng::seed_from_u64(seed);
        let d = ds[rand::Rng::random_range(r, 0..ds.len())].scale(&nonzero(Field::Rationals, r));
        let fwd = unipotent_bridge(&z, &d, BridgeDirection::DerToAuto).unwrap();
        prop_assert!(fwd.report.all_pass(), "{}", fwd.report.to_text());
        let back = unipotent_bridge(&z, &fwd.sigma, BridgeDirection::AutoToDer).unwrap();
        prop_assert_eq!(back.d, d);
    }
}

#[test]
fn exp_residual_shrinks_with_terms() {
    let a = Arc::new(named("para2", Field::Rationals).unwrap());
    let rot = |c: i64| Matrix::from_ints(Field::Rationals, &[&[0, -c], &[c, 0]]);
    let t = verify_local(&a, rot(2), rot(1), rot(-3)).unwrap();
    let res: Vec<f64> = [4, 8, 16, 30]
        .iter()
        .map(|&n| trialkit::expmap::exp_bridge(&t, n, 1e-9).unwrap().residual)
        .collect();
    for w in res.windows(2) {
        assert!(w[1] <= w[0] || w[1] < 1e-12, "{res:?}");
    }
    assert!(res[3] < 1e-9);
}

#[test]
fn elements_have_matching_dimension() {
    let a = octonions();
    let bad = Element::zero(Field::Rationals, 3);
    assert!(a.multiply(&a.basis(0), &bad).is_err());
}
