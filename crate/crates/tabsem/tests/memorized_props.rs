//! The argmin image and its semiring structure.

mod common;

use common::{int_value, random_table, rng};
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use tabsem::{BinaryLaw, MemorizedValue, SemiringSpec, Word};

const AB: &[char] = &['a', 'b'];

fn random_memorized(rng: &mut ChaCha8Rng) -> MemorizedValue {
    let n = rng.random_range(0..=4usize);
    if n == 0 {
        return MemorizedValue::zero();
    }
    let addresses = (0..n)
        .map(|_| common::random_word(rng, AB, 3))
        .collect::<std::collections::BTreeSet<Word>>();
    MemorizedValue::new(addresses, int_value(rng, 0, 20)).unwrap()
}

#[test]
fn image_commutes_with_pointwise_min_and_convolution() {
    let tropical = SemiringSpec::tropical();
    let min = BinaryLaw::min();
    let mut rng = rng(211);
    for _ in 0..300 {
        let t1 = random_table(&mut rng, &['a', 'b', 'c'], 5, 3, |r| int_value(r, 0, 20));
        let t2 = random_table(&mut rng, &['a', 'b', 'c'], 5, 3, |r| int_value(r, 0, 20));

        let of_sum = MemorizedValue::from_table(&t1.pointwise(&t2, &min).unwrap());
        let sum_of = MemorizedValue::from_table(&t1).plus(&MemorizedValue::from_table(&t2));
        assert_eq!(of_sum, sum_of);

        let of_product =
            MemorizedValue::from_table(&t1.convolution(&t2, &tropical).unwrap());
        let product_of = MemorizedValue::from_table(&t1)
            .times(&MemorizedValue::from_table(&t2))
            .unwrap();
        assert_eq!(of_product, product_of);
    }
}

#[test]
fn memorized_values_satisfy_the_semiring_identities() {
    let mut rng = rng(223);
    for _ in 0..500 {
        let x = random_memorized(&mut rng);
        let y = random_memorized(&mut rng);
        let z = random_memorized(&mut rng);

        assert_eq!(x.plus(&y.plus(&z)), x.plus(&y).plus(&z));
        assert_eq!(x.plus(&y), y.plus(&x));
        assert_eq!(x.plus(&x), x, "plus is idempotent");
        assert_eq!(
            x.times(&y.times(&z).unwrap()).unwrap(),
            x.times(&y).unwrap().times(&z).unwrap()
        );
        assert_eq!(
            x.plus(&y).times(&z).unwrap(),
            x.times(&z).unwrap().plus(&y.times(&z).unwrap())
        );
        assert_eq!(
            z.times(&x.plus(&y)).unwrap(),
            z.times(&x).unwrap().plus(&z.times(&y).unwrap())
        );
    }
}

#[test]
fn neutral_and_absorbing_elements() {
    let mut rng = rng(227);
    for _ in 0..100 {
        let m = random_memorized(&mut rng);
        assert_eq!(m.plus(&MemorizedValue::zero()), m);
        assert_eq!(MemorizedValue::zero().plus(&m), m);
        assert_eq!(m.times(&MemorizedValue::one()).unwrap(), m);
        assert_eq!(MemorizedValue::one().times(&m).unwrap(), m);
        assert_eq!(m.times(&MemorizedValue::zero()).unwrap(), MemorizedValue::zero());
        assert_eq!(MemorizedValue::zero().times(&m).unwrap(), MemorizedValue::zero());
    }
}
