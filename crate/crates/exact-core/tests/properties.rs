use exact_core::{int, monomials_of_degree, rat, LambdaOrder, Monomial, OnePS, Rat};
use num_traits::Zero;
use proptest::prelude::*;
use std::cmp::Ordering;

fn arb_rat() -> impl Strategy<Value = Rat> {
    (-20i64..=20, 1i64..=12).prop_map(|(n, d)| rat(n, d))
}

fn arb_oneps() -> impl Strategy<Value = OnePS> {
    (arb_rat(), arb_rat(), arb_rat()).prop_map(|(a, b, c)| {
        let d = -(a.clone() + &b + &c);
        OnePS::new([a, b, c, d]).unwrap()
    })
}

fn arb_monomial(max_degree: u32) -> impl Strategy<Value = Monomial> {
    let m = max_degree;
    (0..=m).prop_flat_map(move |a| {
        (0..=m - a).prop_flat_map(move |b| {
            (0..=m - a - b).prop_map(move |c| Monomial([a, b, c, 0]))
        })
    })
}

proptest! {
    #[test]
    fn weight_is_additive_in_lambda(l in arb_oneps(), m in arb_oneps(), mono in arb_monomial(4)) {
        prop_assert_eq!(l.add(&m).weight(&mono), l.weight(&mono) + m.weight(&mono));
    }

    #[test]
    fn weight_is_additive_in_monomial(l in arb_oneps(), a in arb_monomial(3), b in arb_monomial(3)) {
        prop_assert_eq!(l.weight(&a.mul(&b)), l.weight(&a) + l.weight(&b));
    }

    #[test]
    fn degree_weights_sum_to_zero(l in arb_oneps(), d in 0u32..=6) {
        let total: Rat = monomials_of_degree(d).iter().map(|m| l.weight(m)).sum();
        prop_assert!(total.is_zero());
    }

    #[test]
    fn order_is_total_and_antisymmetric(l in arb_oneps(), d in 0u32..=3) {
        let ord = LambdaOrder::new(l);
        let ms = monomials_of_degree(d);
        for a in &ms {
            for b in &ms {
                let ab = ord.compare(a, b);
                prop_assert_eq!(ab, ord.compare(b, a).reverse());
                prop_assert_eq!(ab == Ordering::Equal, a == b);
            }
        }
    }

    #[test]
    fn order_is_transitive_on_samples(l in arb_oneps(), picks in proptest::collection::vec(0usize..35, 3)) {
        let ord = LambdaOrder::new(l);
        let ms = monomials_of_degree(4);
        let (a, b, c) = (&ms[picks[0]], &ms[picks[1]], &ms[picks[2]]);
        if ord.compare(a, b) != Ordering::Greater && ord.compare(b, c) != Ordering::Greater {
            prop_assert_ne!(ord.compare(a, c), Ordering::Greater);
        }
    }

    #[test]
    fn integerize_is_integral_and_parallel(l in arb_oneps()) {
        let n = l.integerize();
        prop_assert!(n.is_integral());
        if !l.is_zero() {
            // The two weight vectors agree up to the positive factor that
            // any nonzero coordinate exhibits.
            let i = (0..4).find(|&i| !l.weights()[i].is_zero()).unwrap();
            let factor = n.weights()[i].clone() / l.weights()[i].clone();
            prop_assert!(factor > Rat::zero());
            prop_assert_eq!(n, l.scale(&factor));
        }
    }
}

#[test]
fn exhaustive_weight_zero_sum_small_degrees() {
    for lambda in [
        OnePS::ints([3, 1, -1, -3]),
        OnePS::ints([17, 5, -7, -15]),
        OnePS::ints([1, 1, -1, -1]),
        OnePS::new([int(1), rat(1, 3), rat(-1, 3), int(-1)]).unwrap(),
    ] {
        for d in 0..=6 {
            let total: Rat = monomials_of_degree(d).iter().map(|m| lambda.weight(m)).sum();
            assert!(total.is_zero(), "degree {} under {}", d, lambda);
        }
    }
}
