use fusioncat::{
    catalog_get, ce_mul, from_json_str, to_json_string, CentralElement, ClassFunction, CycloMatrix, Cyclotomic, Rational,
    CATALOG_NAMES,
};
use num_bigint::BigInt;
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = Rational> {
    (-40i64..=40, 1i64..=9).prop_map(|(p, q)| Rational::new(BigInt::from(p), BigInt::from(q)))
}

/// A random element of `Q(ζ_n)` from `n` power-basis coefficients (reduced mod `Φ_n`).
fn cyclo_at(n: u32) -> impl Strategy<Value = Cyclotomic> {
    prop::collection::vec(rational(), n as usize).prop_map(move |c| Cyclotomic::from_coeffs(n, &c))
}

fn cyclo() -> impl Strategy<Value = Cyclotomic> {
    (1u32..=24).prop_flat_map(cyclo_at)
}

fn matrix8() -> impl Strategy<Value = CycloMatrix> {
    prop::collection::vec(cyclo_at(8), 16).prop_map(|e| CycloMatrix::new(4, 4, e))
}

fn close(a: num_complex::Complex64, b: num_complex::Complex64, tol: f64) -> bool {
    (a - b).norm() <= tol * (1.0 + a.norm().max(b.norm()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn inverse_is_exact(a in cyclo()) {
        prop_assume!(!a.is_zero());
        prop_assert!((&a * &a.inv().unwrap()).is_one());
    }

    #[test]
    fn conjugation_is_an_involutive_homomorphism(a in cyclo(), b in cyclo()) {
        prop_assert_eq!(a.conj().conj(), a.clone());
        prop_assert_eq!((&a * &b).conj(), &a.conj() * &b.conj());
        prop_assert_eq!((&a + &b).conj(), &a.conj() + &b.conj());
    }

    #[test]
    fn embedding_is_multiplicative(a in cyclo(), b in cyclo()) {
        prop_assert!(close((&a * &b).embed(), a.embed() * b.embed(), 1e-9));
        prop_assert!(close((&a + &b).embed(), a.embed() + b.embed(), 1e-9));
    }

    #[test]
    fn mixed_conductor_arithmetic(a in cyclo(), b in cyclo()) {
        let sum = &a + &b;
        prop_assert_eq!(&sum - &b, a.clone());
        prop_assert_eq!(sum.conductor() % a.conductor(), 0);
    }

    #[test]
    fn matrix_inverse_is_exact(m in matrix8()) {
        if let Ok(inv) = m.inverse() {
            prop_assert!((&m * &inv).is_identity());
            prop_assert!((&inv * &m).is_identity());
        } else {
            prop_assert!(m.rank() < 4);
        }
    }

    #[test]
    fn fourier_round_trip(c in prop::collection::vec(cyclo_at(8), 3)) {
        let ising = catalog_get("ising").unwrap();
        let f = ClassFunction::new(c.clone());
        prop_assert_eq!(ising.fourier(&ising.fourier_inv(&f)), f);
        let a = CentralElement::new(c);
        prop_assert_eq!(ising.fourier_inv(&ising.fourier(&a)), a.clone());
        prop_assert_eq!(ising.fourier(&a), ising.act_arrow(&ising.cointegral_full(), &ising.antipode(&a)));
    }

    #[test]
    fn drinfeld_map_is_multiplicative(f in prop::collection::vec(cyclo_at(5), 2), g in prop::collection::vec(cyclo_at(5), 2)) {
        let fib = catalog_get("fibonacci").unwrap();
        let (f, g) = (ClassFunction::new(f), ClassFunction::new(g));
        let lhs = fib.drinfeld_map(&fib.cf_mul(&f, &g)).unwrap();
        let rhs = ce_mul(&fib.drinfeld_map(&f).unwrap(), &fib.drinfeld_map(&g).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn arrow_action_is_a_module(c in prop::collection::vec(cyclo_at(4), 4), a in prop::collection::vec(cyclo_at(4), 4), b in prop::collection::vec(cyclo_at(4), 4)) {
        let toric = catalog_get("toric_code").unwrap();
        let (f, a, b) = (ClassFunction::new(c), CentralElement::new(a), CentralElement::new(b));
        prop_assert_eq!(toric.act_arrow(&toric.act_arrow(&f, &a), &b), toric.act_arrow(&f, &ce_mul(&a, &b)));
    }
}

#[test]
fn catalog_structural_invariants() {
    for name in CATALOG_NAMES {
        let c = catalog_get(name).unwrap();
        let r = c.rank();
        let s = c.s_matrix("test").unwrap();
        assert!(s.is_symmetric(), "{name}");
        for i in 0..r {
            assert_eq!(s.get(0, i), c.dim(i), "{name}");
            for j in 0..r {
                let rhs: Cyclotomic = (0..r).map(|k| c.dim(k) * &Cyclotomic::from_int(i64::from(c.n(i, j, k)))).sum();
                assert_eq!(c.dim(i) * c.dim(j), rhs, "{name}");
            }
        }
        assert_eq!(fusioncat::verlinde_fusion(s).unwrap(), c.ring().tensor(), "{name}");
    }
}

#[test]
fn idempotents_are_complete_and_orthogonal() {
    for name in CATALOG_NAMES {
        let c = catalog_get(name).unwrap();
        let conj = c.conjugacy_data().unwrap();
        let r = c.rank();
        let mut total = ClassFunction::zero(r);
        for j in 0..r {
            total = total.add(&conj.idempotents[j]);
            for k in 0..r {
                let p = c.cf_mul(&conj.idempotents[j], &conj.idempotents[k]);
                if j == k {
                    assert_eq!(p, conj.idempotents[j], "{name}");
                } else {
                    assert!(p.is_zero(), "{name}");
                }
                let pair = c.pairing(&conj.idempotents[j], &conj.class_sums[k]);
                let want = if j == k { conj.sizes[j].clone() } else { Cyclotomic::from_int(0) };
                assert_eq!(pair, want, "{name}");
            }
            assert_eq!(c.drinfeld_map(&conj.idempotents[j]).unwrap(), c.idempotent_e(j), "{name}");
        }
        assert_eq!(total, c.chi(0), "{name}");
    }
}

#[test]
fn lattice_laws_on_every_entry() {
    for name in CATALOG_NAMES {
        let c = catalog_get(name).unwrap();
        let subs = c.enumerate_subcats().unwrap();
        assert_eq!(subs, c.enumerate_subcats_by_joins(), "{name}");
        for d in &subs {
            let inv = c.subcat_invariants(d).unwrap();
            assert_eq!(c.cf_mul(&inv.lambda, &inv.lambda), inv.lambda, "{name}");
            for e in &subs {
                c.meet_join(d, e).unwrap_or_else(|err| panic!("{name}: {err}"));
                let (dp, ep) = (c.centralizer_smatrix(d).unwrap(), c.centralizer_smatrix(e).unwrap());
                if d.is_subset_of(e) {
                    assert!(ep.is_subset_of(&dp), "{name}");
                }
            }
            let dp = c.centralizer_smatrix(d).unwrap();
            assert_eq!(c.centralizer_theorem(d).unwrap().centralizer, dp, "{name}");
            assert_eq!(&(&c.subset_dim(d.members()) * &c.subset_dim(dp.members())), c.global_dim(), "{name}");
            assert_eq!(c.support_l(&dp).unwrap(), d.members(), "{name}");
        }
    }
}

#[test]
fn grading_components_partition_simples() {
    for name in CATALOG_NAMES {
        let c = catalog_get(name).unwrap();
        let g = c.grading().unwrap();
        let mut all: Vec<usize> = g.components.iter().flatten().copied().collect();
        all.sort_unstable();
        assert_eq!(all, (0..c.rank()).collect::<Vec<_>>(), "{name}");
        assert_eq!(g.components[g.identity], g.adjoint.members(), "{name}");
        assert!(g.checks.iter().all(|k| k.is_pass()), "{name}: {:?}", g.checks);
    }
}

#[test]
fn json_round_trip_is_stable() {
    for name in CATALOG_NAMES {
        let data = catalog_get(name).unwrap().data().clone();
        let text = to_json_string(&data);
        let back = from_json_str(&text).unwrap();
        assert_eq!(back, data, "{name}");
        assert_eq!(to_json_string(&back), text, "{name}");
    }
}
