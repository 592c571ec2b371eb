use convex_count::closed_form::{closed_form_vector, lemma1_check};
use convex_count::cli::{OutputRecord, Payload, LevelRecord};
use convex_count::exact::{binomial, binomial_generalized, poly_determinant_charpoly};
use convex_count::production::count_sequence;
use convex_count::spectral::{charpoly_recurrence, count_real_roots, real_roots, Precision};
use convex_count::verify::formula_classes;
use convex_count::{BigInt, BigRational, CountVector, GraphClass, GraphClassSpec, HTMatrix, IntPolynomial};
use num_traits::{One, Zero};
use proptest::prelude::*;

fn ints(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

prop_compose! {
    fn ht_matrix(max: usize)(size in 1..=max)
        (sub in prop_oneof![1i64..=3, -2i64..=-1], band in prop::collection::vec(-6i64..=6, size), size in Just(size))
        -> HTMatrix
    {
        HTMatrix::toeplitz(size, sub.into(), ints(&band)).unwrap()
    }
}

fn rational() -> impl Strategy<Value = BigRational> {
    (-40i64..=40, 1i64..=7).prop_map(|(p, q)| BigRational::new(p.into(), q.into()))
}

proptest! {
    #[test]
    fn upper_hessenberg_and_toeplitz(m in ht_matrix(8)) {
        let n = m.size();
        for i in 0..n {
            for j in 0..n {
                if j + 1 < i {
                    prop_assert!(m.entry(i, j).is_zero());
                } else if i > 0 && j > 0 {
                    prop_assert_eq!(m.entry(i, j), m.entry(i - 1, j - 1));
                }
            }
        }
        for i in 1..n {
            prop_assert_eq!(&m.entry(i, i - 1), m.subdiagonal());
        }
    }

    #[test]
    fn recurrence_equals_determinant(m in ht_matrix(7)) {
        let seq = charpoly_recurrence(&m, m.size()).unwrap();
        prop_assert_eq!(seq.polys[0].clone(), IntPolynomial::one());
        for k in 1..=m.size() {
            let det = poly_determinant_charpoly(&m.truncate(k).unwrap());
            prop_assert_eq!(&seq.polys[k], &det);
            prop_assert_eq!(det.degree(), Some(k));
            let lead = if k % 2 == 0 { BigInt::one() } else { -BigInt::one() };
            prop_assert_eq!(det.leading(), Some(&lead));
        }
    }

    /// With `x_i = (-1/a_{-1})^i d_i(λ)`, every row of `A x - λ x` but the
    /// first vanishes, and the first vanishes exactly when `d_n(λ) = 0`.
    #[test]
    fn eigenvector_rows(m in ht_matrix(6), lambda in rational()) {
        let n = m.size();
        let seq = charpoly_recurrence(&m, n).unwrap();
        let step = BigRational::new(-BigInt::one(), m.subdiagonal().clone());
        let mut f = BigRational::one();
        let mut x = Vec::new();
        for d in &seq.polys[..n] {
            x.push(d.eval_rational(&lambda) * &f);
            f *= &step;
        }
        x.reverse();
        let row = |i: usize| -> BigRational {
            let ax: BigRational = (0..n).map(|j| BigRational::from_integer(m.entry(i, j)) * &x[j]).sum();
            ax - &lambda * &x[i]
        };
        for i in 1..n {
            prop_assert!(row(i).is_zero(), "row {}", i);
        }
        prop_assert_eq!(row(0).is_zero(), seq.polys[n].eval_rational(&lambda).is_zero());
    }

    #[test]
    fn mat_vec_is_linear(m in ht_matrix(6), u in prop::collection::vec(0u64..100, 6), v in prop::collection::vec(0u64..100, 6)) {
        let n = m.size();
        let u = CountVector::from_u64s(1, &u[..n]);
        let v = CountVector::from_u64s(1, &v[..n]);
        let sum = CountVector::new(1, u.entries().iter().zip(v.entries()).map(|(a, b)| a + b).collect());
        let (au, av, asum) = (m.apply(&u).unwrap(), m.apply(&v).unwrap(), m.apply(&sum).unwrap());
        prop_assert_eq!(asum.level(), 2);
        let added: Vec<BigInt> = au.entries().iter().zip(av.entries()).map(|(a, b)| a + b).collect();
        prop_assert_eq!(asum.entries(), &added[..]);
    }

    #[test]
    fn identity_holds(t in 0i64..=25, m in 0i64..=25, n in 0i64..=25) {
        prop_assert!(lemma1_check(t, m, n));
    }

    #[test]
    fn generalized_binomial_pascal(n in -30i64..30, k in 1i64..30) {
        prop_assert_eq!(
            binomial_generalized(n, k),
            binomial_generalized(n - 1, k) + binomial_generalized(n - 1, k - 1)
        );
        if n >= 0 {
            prop_assert_eq!(binomial_generalized(n, k), binomial(n, k));
        }
    }

    #[test]
    fn roots_of_products_of_linear_factors(mut rs in prop::collection::btree_set(-20i64..=20, 1..6)) {
        let roots: Vec<i64> = std::mem::take(&mut rs).into_iter().collect();
        let p = roots.iter().fold(IntPolynomial::one(), |acc, &r| &acc * &IntPolynomial::from_i64s(&[-r, 1]));
        // a squared factor must not change the distinct count
        let doubled = &p * &IntPolynomial::from_i64s(&[-roots[0], 1]);
        prop_assert_eq!(count_real_roots(&doubled), roots.len());
        let found = real_roots(&p, Precision::new(64));
        prop_assert_eq!(found.len(), roots.len());
        for (iv, &r) in found.iter().zip(&roots) {
            prop_assert_eq!(iv.midpoint(), BigRational::from_integer(r.into()));
        }
    }

    #[test]
    fn output_record_round_trips(
        level in 1usize..40,
        vector in prop::collection::vec(any::<u128>(), 0..8),
        total in any::<i128>(),
    ) {
        let record = OutputRecord {
            format_version: 1,
            command: "counts".into(),
            class: Some("geometric".into()),
            parameters: [("n_max".to_string(), level.to_string())].into_iter().collect(),
            payload: Payload::Counts {
                levels: vec![LevelRecord {
                    level,
                    vector: vector.iter().map(|v| (BigInt::from(*v) * BigInt::from(*v)).to_string()).collect(),
                    total: total.to_string(),
                }],
            },
        };
        let json = record.to_json();
        let quoted = format!("\"{}\"", total);
        prop_assert!(json.contains(&quoted));
        prop_assert_eq!(OutputRecord::from_json(&json).unwrap(), record);
    }
}

#[test]
fn class_vectors_nonnegative_with_zero_tail() {
    for class in formula_classes() {
        let spec = GraphClassSpec::new(class.clone()).unwrap();
        let size = 16;
        let m = class.matrix(size).unwrap();
        let mut v = spec.initial.resized(size).unwrap();
        while v.level() < 14 {
            assert!(v.is_nonnegative(), "{class}: {v}");
            assert!(v.support_len() <= class.reachable_len(v.level()), "{class}: {v}");
            v = m.apply(&v).unwrap();
        }
    }
}

#[test]
fn closed_forms_match_matrix_to_level_12() {
    for class in formula_classes() {
        let spec = GraphClassSpec::new(class.clone()).unwrap();
        for l in count_sequence(&spec, 12).unwrap() {
            assert_eq!(closed_form_vector(&class, l.level).unwrap(), l.vector, "{class}");
        }
    }
}

#[test]
fn relation_class_has_no_closed_form() {
    let class = GraphClass::Relation { counts: ints(&[1, 4, 23]) };
    assert!(closed_form_vector(&class, 3).is_none());
}
