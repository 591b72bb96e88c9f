use std::collections::HashSet;

use icecount::exactalg::{interpolate, Poly, RatFunc};
use icecount::formulas::{asm_total, binomial, gen_binom, hook_sum_m};
use icecount::{
    count, count_backtrack, count_rowdp, enumerate_states, Arrow, BoundarySpec, Count, Engine,
    EnumBudget, EnumConfig, Parallelism, Partition,
};
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

fn partition() -> impl Strategy<Value = Partition> {
    (1usize..=4, 0u32..=5).prop_flat_map(|(n, l)| {
        proptest::collection::vec(0..=l, n).prop_map(|mut parts| {
            parts.sort_unstable_by(|a, b| b.cmp(a));
            Partition::new(parts).unwrap()
        })
    })
}

fn generic_spec() -> impl Strategy<Value = BoundarySpec> {
    (1usize..=4, 1usize..=4).prop_flat_map(|(r, c)| {
        let bits = |k| proptest::collection::vec(any::<bool>(), k);
        (bits(c), bits(c), bits(r), bits(r)).prop_map(|(t, b, l, rt)| {
            let v = |x: Vec<bool>| {
                x.into_iter()
                    .map(|u| if u { Arrow::Up } else { Arrow::Down })
                    .collect::<Vec<_>>()
            };
            let h = |x: Vec<bool>| {
                x.into_iter()
                    .map(|u| if u { Arrow::Right } else { Arrow::Left })
                    .collect::<Vec<_>>()
            };
            BoundarySpec::new(&v(t), &v(b), &h(l), &h(rt)).unwrap()
        })
    })
}

fn small_poly() -> impl Strategy<Value = Poly> {
    proptest::collection::vec(-9i64..=9, 0..5).prop_map(|c| Poly::from_ints(&c))
}

fn q(v: i64) -> BigRational {
    BigRational::from_integer(v.into())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn engines_agree_on_generic_specs(spec in generic_spec()) {
        let bt = count_backtrack(&spec, &EnumBudget::default()).unwrap();
        let dp = count_rowdp(&spec).unwrap();
        let streamed = enumerate_states(&spec, &EnumBudget::default()).count();
        prop_assert_eq!(&bt, &dp);
        prop_assert_eq!(bt, Count::from(streamed));
        if !spec.is_balanced() {
            prop_assert_eq!(dp, Count::from(0u32));
        }
    }

    #[test]
    fn partition_states_obey_flux_and_ice(lambda in partition()) {
        let spec = BoundarySpec::from_partition(&lambda);
        prop_assert!(spec.is_balanced());
        let n = lambda.len();
        let mut seen = 0u64;
        for state in enumerate_states(&spec, &EnumBudget::default()) {
            let state = state.unwrap();
            prop_assert_eq!(state.validate(), Ok(true));
            for r in 0..=n {
                prop_assert_eq!(state.ups_on_cut(r), n - r);
            }
            seen += 1;
        }
        prop_assert_eq!(Count::from(seen), count_rowdp(&spec).unwrap());
    }

    #[test]
    fn shift_appends_a_down_column(lambda in partition(), d in 1u32..=3) {
        let base = BoundarySpec::from_partition(&lambda);
        let shifted = BoundarySpec::from_partition(&lambda.shifted(d));
        prop_assert_eq!(shifted.rows(), base.rows());
        prop_assert_eq!(shifted.cols(), base.cols() + d as usize);
        let (head, tail) = shifted.top_bits().split_at(base.cols());
        prop_assert_eq!(head, base.top_bits());
        prop_assert!(tail.iter().all(|&up| !up));
        prop_assert_eq!(shifted.left_bits(), base.left_bits());
        prop_assert_eq!(shifted.right_bits(), base.right_bits());
        prop_assert_eq!(count_rowdp(&shifted).unwrap(), count_rowdp(&base).unwrap());
    }

    #[test]
    fn counts_ignore_thread_count(lambda in partition()) {
        let spec = BoundarySpec::from_partition(&lambda);
        let seq = count(&spec, Engine::Backtrack, &EnumConfig::default()).unwrap();
        for k in [2, 8] {
            let cfg = EnumConfig::with_parallelism(Parallelism::Threads(k));
            prop_assert_eq!(&count(&spec, Engine::Backtrack, &cfg).unwrap(), &seq);
            prop_assert_eq!(&count(&spec, Engine::RowDp, &cfg).unwrap(), &seq);
        }
    }

    #[test]
    fn state_json_round_trips(lambda in partition(), pick in 0usize..50) {
        let spec = BoundarySpec::from_partition(&lambda);
        let states: Vec<_> = enumerate_states(&spec, &EnumBudget::default()).collect::<Result<_, _>>().unwrap();
        let state = &states[pick % states.len()];
        let text = serde_json::to_string(&state.to_json()).unwrap();
        let back = icecount::GridState::from_json(&serde_json::from_str(&text).unwrap()).unwrap();
        // the JSON form does not record which constructor built the boundary
        prop_assert_eq!(back.vertical(), state.vertical());
        prop_assert_eq!(back.horizontal(), state.horizontal());
        prop_assert_eq!(back.spec(), &state.spec().clone().untagged());
    }

    #[test]
    fn polynomial_ring_laws(a in small_poly(), b in small_poly(), c in small_poly()) {
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a - &b) + &b, a.clone());
        let x = q(3);
        prop_assert_eq!((&a * &b).eval(&x), a.eval(&x) * b.eval(&x));
    }

    #[test]
    fn division_reconstructs(a in small_poly(), b in small_poly()) {
        prop_assume!(!b.is_zero());
        let (quot, rem) = a.div_rem(&b);
        prop_assert_eq!(&(&quot * &b) + &rem, a.clone());
        prop_assert!(rem.is_zero() || rem.degree() < b.degree());
        let g = Poly::gcd(&a, &b);
        prop_assert!(a.div_rem(&g).1.is_zero());
        prop_assert!(b.div_rem(&g).1.is_zero());
    }

    #[test]
    fn ratfunc_canonical_form_is_unique(p in small_poly(), d in small_poly(), k in small_poly()) {
        prop_assume!(!d.is_zero() && !k.is_zero());
        let r = RatFunc::new(p.clone(), d.clone()).unwrap();
        let scaled = RatFunc::new(&p * &k, &d * &k).unwrap();
        prop_assert_eq!(&r, &scaled);
        prop_assert!(r.same_value(&scaled));
        prop_assert!(r.den().leading().unwrap() > &q(0));
        for x in -3i64..=3 {
            if let Some(v) = r.eval_int(x) {
                prop_assert_eq!(v * d.eval_int(x), p.eval_int(x));
            }
        }
    }

    #[test]
    fn interpolation_recovers_polynomials(p in small_poly(), start in -5i64..5) {
        let pts: Vec<_> = (start..start + 5).map(|x| (q(x), p.eval_int(x))).collect();
        prop_assert_eq!(interpolate(&pts).unwrap(), p);
    }

    #[test]
    fn negative_upper_binomials(n in 1i64..12, k in 0i64..12) {
        // C(−n, k) = (−1)^k C(n+k−1, k)
        let sign = if k % 2 == 0 { 1 } else { -1 };
        let expected = BigInt::from(binomial((n + k - 1) as u64, k as u64)) * sign;
        prop_assert_eq!(gen_binom(-n, k), BigRational::from_integer(expected));
    }
}

#[test]
fn constructors_are_balanced() {
    for n in 1..=6 {
        for lambda in Partition::all_with(n, 8) {
            assert!(
                BoundarySpec::from_partition(&lambda).is_balanced(),
                "{lambda}"
            );
        }
    }
    for r in 1..=8 {
        for c in 1..=8 {
            assert!(BoundarySpec::s_model(r, c).unwrap().is_balanced());
            assert!(BoundarySpec::t_model(r, c).unwrap().is_balanced());
        }
    }
    for n in 1..=6 {
        for m in 0..=5 {
            for j in 1..=n {
                assert!(BoundarySpec::l_shape(n, m, j).unwrap().is_balanced());
            }
        }
    }
    for n in 2..=8 {
        for j in 1..=n {
            assert!(BoundarySpec::refined_asm(n, j).unwrap().is_balanced());
            assert!(BoundarySpec::refined_vsasm(n, j).unwrap().is_balanced());
        }
    }
    for n in 1..=8 {
        assert!(BoundarySpec::vsasm(n).unwrap().is_balanced());
    }
}

fn is_asm(m: &[Vec<i8>]) -> bool {
    let line_ok = |line: Vec<i8>| {
        let nz: Vec<i8> = line.into_iter().filter(|&v| v != 0).collect();
        nz.iter().sum::<i8>() == 1 && nz.first() == Some(&1) && nz.windows(2).all(|w| w[0] == -w[1])
    };
    let n = m.len();
    (0..n).all(|r| line_ok(m[r].clone()))
        && (0..n).all(|c| line_ok(m.iter().map(|row| row[c]).collect()))
}

#[test]
fn asm_map_is_injective_onto_valid_matrices() {
    for n in 1..=4 {
        let spec = BoundarySpec::domain_wall(n).unwrap();
        let mut images = HashSet::new();
        for state in enumerate_states(&spec, &EnumBudget::default()) {
            let asm = state.unwrap().to_asm().unwrap();
            assert!(is_asm(&asm), "{asm:?}");
            assert!(images.insert(asm));
        }
        assert_eq!(Count::from(images.len()), asm_total(n as u32).unwrap());
    }
}

#[test]
fn hook_factor_times_asm_is_hook_count() {
    for m in 0..=6 {
        let r = icecount::exactalg::rm_ratfunc(m);
        for n in 1..=8u32 {
            let a = BigRational::from_integer(asm_total(n).unwrap().into());
            let v = r.eval_int(n as i64).unwrap() * a;
            assert!(v.is_integer() && v >= q(0));
            assert_eq!(
                v,
                BigRational::from_integer(hook_sum_m(n, m).unwrap().into())
            );
        }
    }
}
