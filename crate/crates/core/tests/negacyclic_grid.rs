use negacensus_core::arith::euler_phi;
use negacensus_core::negacyclic::{
    dual_generator, factor_xn_plus_one, partner, CodeSpec, DualKind, NegacyclicProfile,
};
use negacensus_core::oracle::brute_factor;

fn grid() -> impl Iterator<Item = NegacyclicProfile> {
    let mut out = Vec::new();
    for p in [3u64, 5, 7, 11, 13] {
        for (l, dual) in [
            (1, DualKind::Euclidean),
            (2, DualKind::Euclidean),
            (1, DualKind::Hermitian),
        ] {
            for nu in 0..=3 {
                for r in 0..=1 {
                    for n_prime in [1u64, 3, 5, 7] {
                        if let Ok(pr) = NegacyclicProfile::new(p, l, dual, nu, r, n_prime) {
                            out.push(pr);
                        }
                    }
                }
            }
        }
    }
    out.into_iter()
}

#[test]
fn factorization_matches_oracle() {
    for profile in grid() {
        let s = factor_xn_plus_one(&profile).unwrap();
        let f = &s.field;
        let modulus = f.x_pow_plus_one(profile.n() as usize);
        assert_eq!(s.reconstruct(), modulus, "{profile:?}");

        let expected = brute_factor(f, &modulus).unwrap();
        let got: Vec<_> = s
            .distinct_factors()
            .into_iter()
            .map(|g| (g, s.multiplicity))
            .collect();
        assert_eq!(got, expected, "{profile:?}");
    }
}

#[test]
fn block_shapes() {
    for profile in grid() {
        let s = factor_xn_plus_one(&profile).unwrap();
        for block in &s.blocks {
            let count = block.singletons.len() + 2 * block.pairs.len();
            assert_eq!(
                count as u64 * block.order,
                block.totient,
                "{profile:?} d={}",
                block.d
            );
            assert_eq!(
                block.totient,
                euler_phi((2u64 << profile.nu()) * block.d).unwrap()
            );
            for g in block.factors() {
                assert_eq!(g.degree(), Some(block.order as usize));
            }
            for (g, h) in &block.pairs {
                assert!(g < h);
                assert_eq!(&partner(&s.field, profile.dual(), g).unwrap(), h);
            }
        }
    }
}

#[test]
fn dual_of_dual_is_the_code() {
    for profile in grid().filter(|p| p.n() <= 60) {
        let s = factor_xn_plus_one(&profile).unwrap();
        let singles = vec![1; s.singleton_count()];
        let pairs = vec![(s.multiplicity, 0); s.pair_count()];
        let code = s.code(&singles, &pairs).unwrap();
        let dual = dual_generator(&code).unwrap();
        let back = CodeSpec::from_generator(profile, code.field.clone(), dual);
        assert_eq!(
            dual_generator(&back).unwrap(),
            code.generator,
            "{profile:?}"
        );
    }
}
