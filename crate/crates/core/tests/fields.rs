mod common;

use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use cyclonum_core::finite_field::{find_primitive, DlogTable, FieldElement, FieldSpec, DEFAULT_MEMORY_CAP};

use common::prime_powers;

fn random_element(spec: &FieldSpec, rng: &mut StdRng) -> FieldElement {
    spec.decode(rng.gen_range(0..spec.q()))
}

fn fields() -> Vec<(u64, u32)> {
    let mut v: Vec<(u64, u32)> = prime_powers(100_000).into_iter().filter(|&(_, n)| n > 1).collect();
    v.extend([(2, 1), (3, 1), (101, 1), (65_521, 1)]);
    v
}

#[test]
fn axioms_on_random_triples() {
    let mut rng = StdRng::seed_from_u64(1);
    let all = fields();
    for &(p, n) in all.iter().step_by(all.len() / 12) {
        let f = FieldSpec::new(p, n).unwrap();
        let one = f.one();
        for _ in 0..10_000 {
            let a = random_element(&f, &mut rng);
            let b = random_element(&f, &mut rng);
            let c = random_element(&f, &mut rng);
            assert_eq!(f.mul(&f.mul(&a, &b), &c), f.mul(&a, &f.mul(&b, &c)));
            assert_eq!(f.add(&f.add(&a, &b), &c), f.add(&a, &f.add(&b, &c)));
            assert_eq!(
                f.mul(&a, &f.add(&b, &c)),
                f.add(&f.mul(&a, &b), &f.mul(&a, &c))
            );
            assert_eq!(f.add(&a, &f.neg(&a)), f.zero());
            if !a.is_zero() {
                assert_eq!(f.mul(&a, &f.inv(&a).unwrap()), one, "F_{}", f.q());
            }
        }
    }
}

#[test]
fn zero_has_no_inverse() {
    let f = FieldSpec::new(3, 4).unwrap();
    assert!(f.inv(&f.zero()).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn frobenius_is_additive(idx in any::<prop::sample::Index>(), seed in any::<u64>()) {
        let all = fields();
        let (p, n) = all[idx.index(all.len())];
        let f = FieldSpec::new(p, n).unwrap();
        let mut rng = StdRng::seed_from_u64(seed);
        let a = random_element(&f, &mut rng);
        let b = random_element(&f, &mut rng);
        prop_assert_eq!(f.pow(&f.add(&a, &b), p), f.add(&f.pow(&a, p), &f.pow(&b, p)));
        prop_assert_eq!(f.pow(&a, f.q()), a);
    }

    #[test]
    fn encoding_round_trips(idx in any::<prop::sample::Index>(), seed in any::<u64>()) {
        let all = fields();
        let (p, n) = all[idx.index(all.len())];
        let f = FieldSpec::new(p, n).unwrap();
        let code = StdRng::seed_from_u64(seed).gen_range(0..f.q());
        prop_assert_eq!(f.encode(&f.decode(code)), code);
    }
}

#[test]
fn dlog_round_trips_and_primitive_has_full_order() {
    let all = fields();
    for &(p, n) in all.iter().step_by(7) {
        let f = FieldSpec::new(p, n).unwrap();
        let g = find_primitive(&f).unwrap();
        assert_eq!(f.order(&g).unwrap(), f.q() - 1);
        let t = DlogTable::build(&f, &g, DEFAULT_MEMORY_CAP).unwrap();
        let mut x = f.one();
        for i in 0..f.q() - 1 {
            assert_eq!(t.log(&f, &x), Some(i));
            x = f.mul(&x, &g);
        }
        assert_eq!(x, f.one());
        assert_eq!(t.log(&f, &f.zero()), None);
    }
}
