use dynsym::jordan::{Field, JordanElement};
use dynsym::landau::{self, Presentation};
use dynsym::scalar::rat;
use dynsym::transforms::{self, Coordinate, KsMode, LcPoint, PhasePoint4};
use dynsym::weyl::{Monomial, Sig, WeylElement};
use dynsym::{ExactMatrix, Scalar};
use proptest::prelude::*;

fn sig() -> Sig {
    landau::phase_signature()
}

fn scalar() -> impl Strategy<Value = Scalar> {
    (-3i64..=3, -3i64..=3, -2i64..=2).prop_map(|(re, im, s2)| &Scalar::gauss(rat(re, 1), rat(im, 2)) + &(&Scalar::sqrt2() * &Scalar::from_int(s2)))
}

fn element() -> impl Strategy<Value = WeylElement> {
    let term = ([0u8..=1, 0u8..=1], [0u8..=1, 0u8..=1], scalar());
    prop::collection::vec(term, 0..4).prop_map(|terms| {
        let s = sig();
        let mut e = WeylElement::zero(&s);
        for (pos, der, c) in terms {
            let mut m = Monomial::unit(2);
            m.pos[0] = pos[0];
            m.pos[1] = pos[1];
            m.der[0] = der[0];
            m.der[1] = der[1];
            e = &e + &WeylElement::monomial(&s, m, c);
        }
        e
    })
}

fn jordan(field: Field) -> impl Strategy<Value = JordanElement> {
    prop::collection::vec(-5i64..=5, field.dim()).prop_map(move |c| JordanElement::from_ints(field, &c).unwrap())
}

fn field() -> impl Strategy<Value = Field> {
    prop_oneof![Just(Field::Real), Just(Field::Complex)]
}

fn matrix() -> impl Strategy<Value = ExactMatrix> {
    prop::collection::vec(scalar(), 16).prop_map(|v| {
        let mut m = ExactMatrix::zeros(4, 4);
        for (k, c) in v.into_iter().enumerate() {
            m.set(k / 4, k % 4, c);
        }
        m
    })
}

fn point() -> impl Strategy<Value = PhasePoint4> {
    ([-5i64..=5, -5i64..=5, -5i64..=5, -5i64..=5], [-5i64..=5, -5i64..=5, -5i64..=5, -5i64..=5])
        .prop_filter_map("u = 0", |(u, w)| PhasePoint4::from_ints(u, w).ok())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn jacobi(a in element(), b in element(), c in element()) {
        let j = &(&a.commutator(&b.commutator(&c).unwrap()).unwrap() + &b.commutator(&c.commutator(&a).unwrap()).unwrap())
            + &c.commutator(&a.commutator(&b).unwrap()).unwrap();
        prop_assert!(j.is_zero());
    }

    #[test]
    fn associativity(a in element(), b in element(), c in element()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
    }

    #[test]
    fn bilinearity(a in element(), b in element(), c in element(), k in scalar()) {
        prop_assert_eq!((&a + &b).commutator(&c).unwrap(), &a.commutator(&c).unwrap() + &b.commutator(&c).unwrap());
        prop_assert_eq!(a.scale(&k).commutator(&c).unwrap(), a.commutator(&c).unwrap().scale(&k));
    }

    #[test]
    fn antisymmetry(a in element(), b in element()) {
        prop_assert!((&a.commutator(&b).unwrap() + &b.commutator(&a).unwrap()).is_zero());
        prop_assert!(a.commutator(&a).unwrap().is_zero());
    }

    #[test]
    fn substitution_is_homomorphism(a in element(), b in element()) {
        let map = landau::phase_to_holo().unwrap();
        let lhs = map.apply(&(&a * &b)).unwrap();
        let rhs = &map.apply(&a).unwrap() * &map.apply(&b).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn substitution_round_trip(a in element()) {
        let there = landau::phase_to_holo().unwrap().apply(&a).unwrap();
        prop_assert_eq!(landau::holo_to_phase().unwrap().apply(&there).unwrap(), a);
    }

    #[test]
    fn normal_form_is_idempotent(a in element()) {
        let again = WeylElement::from_records(a.signature(), &a.to_records()).unwrap();
        prop_assert_eq!(again, a);
    }

    #[test]
    fn generator_brackets_stay_in_span(a in 0usize..10, b in 0usize..10) {
        let g = landau::dirac_generators(Presentation::Oscillator).unwrap();
        let gens = g.table.generators();
        let basis: Vec<WeylElement> = gens.iter().map(|(_, e)| e.clone()).collect();
        let br = gens[a].1.commutator(&gens[b].1).unwrap();
        prop_assert!(dynsym::lie::decompose(&br, &basis).is_some());
    }

    #[test]
    fn jordan_product_commutes(a in jordan(Field::Real), b in jordan(Field::Real), c in jordan(Field::Complex), d in jordan(Field::Complex)) {
        prop_assert_eq!(a.product(&b).unwrap(), b.product(&a).unwrap());
        prop_assert_eq!(c.product(&d).unwrap(), d.product(&c).unwrap());
    }

    #[test]
    fn jordan_identity(a in jordan(Field::Complex), b in jordan(Field::Complex)) {
        let a2 = a.product(&a).unwrap();
        let lhs = a.product(&a2.product(&b).unwrap()).unwrap();
        let rhs = a2.product(&a.product(&b).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn triple_outer_symmetry(f in field(), s in any::<u64>()) {
        let mut rng = <rand_chacha::ChaCha8Rng as rand::SeedableRng>::seed_from_u64(s);
        let (a, b, c) = (dynsym::jordan::random_element(f, &mut rng), dynsym::jordan::random_element(f, &mut rng), dynsym::jordan::random_element(f, &mut rng));
        prop_assert_eq!(a.triple(&b, &c).unwrap(), c.triple(&b, &a).unwrap());
    }

    #[test]
    fn matrix_commutator_jacobi(a in matrix(), b in matrix(), c in matrix()) {
        let j = &(&a.commutator(&b.commutator(&c)) + &b.commutator(&c.commutator(&a))) + &c.commutator(&a.commutator(&b));
        prop_assert!(j.is_zero());
    }

    #[test]
    fn constraint_commutes_with_positions(pt in point(), k in 0usize..3) {
        let b = transforms::poisson_bracket(Coordinate::K, Coordinate::X(k), &pt, KsMode::HopfNormalized).unwrap();
        prop_assert_eq!(b, rat(0, 1));
    }

    #[test]
    fn hopf_norm_everywhere(pt in point()) {
        let x = transforms::ks_map(&pt, KsMode::HopfNormalized).unwrap().x;
        let n = pt.norm_sq();
        prop_assert_eq!(x.iter().map(|v| v * v).sum::<dynsym::Rational>(), &n * &n);
    }

    #[test]
    fn poisson_antisymmetry(pt in point(), i in 0usize..3, j in 0usize..3) {
        let m = KsMode::HopfNormalized;
        let ab = transforms::poisson_bracket(Coordinate::X(i), Coordinate::P(j), &pt, m).unwrap();
        let ba = transforms::poisson_bracket(Coordinate::P(j), Coordinate::X(i), &pt, m).unwrap();
        prop_assert_eq!(ab, -ba);
    }

    #[test]
    fn lc_fiber(u1 in -5i64..=5, u3 in -5i64..=5, w1 in -5i64..=5, w3 in -5i64..=5) {
        prop_assume!(u1 != 0 || u3 != 0);
        let a = transforms::lc_map(&LcPoint::from_ints(u1, u3, w1, w3)).unwrap();
        let b = transforms::lc_map(&LcPoint::from_ints(-u1, -u3, -w1, -w3)).unwrap();
        prop_assert_eq!(a, b);
    }
}
