use proptest::prelude::*;
use qgalois::cartan::preset;
use qgalois::cli::parse_element;
use qgalois::coeffs::q_binomial;
use qgalois::sample::{random_element, random_params};
use qgalois::{AlgebraSpec, Family, Kind, Scalar};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn kinds() -> impl Strategy<Value = Kind> {
    prop_oneof![
        Just(Kind::U),
        Just(Kind::GrU),
        Just(Kind::Alambda),
        Just(Kind::Torus),
        Just(Kind::GroupAlgebra)
    ]
}

fn spec_for(kind: Kind, seed: u64) -> (AlgebraSpec, ChaCha8Rng) {
    let c = preset(Family::A, 2).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let p = random_params(&mut rng, &c);
    (AlgebraSpec::new(kind, &p, &c).unwrap(), rng)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn print_then_parse_is_identity(kind in kinds(), seed in any::<u64>()) {
        let (s, mut rng) = spec_for(kind, seed);
        let x = random_element(&mut rng, kind, 2, 5, 4, 2);
        let text = s.format(&x);
        prop_assert_eq!(parse_element(&text, &s).unwrap(), x);
    }

    #[test]
    fn q_binomial_is_symmetric(n in 0i64..9, r in 0i64..9, num in 2i64..7, den in 1i64..5) {
        prop_assume!(r <= n && num != den);
        let v = Scalar::new(num, den).unwrap();
        prop_assert_eq!(q_binomial(n, r, &v).unwrap(), q_binomial(n, n - r, &v).unwrap());
    }

    #[test]
    fn q_pascal_rule(n in 1i64..9, r in 1i64..8, num in 2i64..7) {
        prop_assume!(r < n);
        // [n, r] = v^{r-n} [n-1, r-1] + v^r [n-1, r] for balanced binomials
        let v = Scalar::from_int(num);
        let lhs = q_binomial(n, r, &v).unwrap();
        let rhs = v.pow(r - n).unwrap() * q_binomial(n - 1, r - 1, &v).unwrap()
            + v.pow(r).unwrap() * q_binomial(n - 1, r, &v).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn multiplication_is_associative(kind in kinds(), seed in any::<u64>()) {
        let (s, mut rng) = spec_for(kind, seed);
        let a = random_element(&mut rng, kind, 2, 2, 2, 1);
        let b = random_element(&mut rng, kind, 2, 2, 2, 1);
        let c = random_element(&mut rng, kind, 2, 2, 2, 1);
        prop_assert_eq!(s.multiply(&s.multiply(&a, &b), &c), s.multiply(&a, &s.multiply(&b, &c)));
    }
}
