//! Acceptance suite: one test per criterion, each printing a PASS/FAIL line.
//! Run with `cargo test -p ncoh --test acceptance` (add `-- --nocapture` to
//! see the per-criterion lines for passing tests too).

mod golden;

use ncoh::{
    basic_equation_row, bracket, build_extension, cocycle_for_label, d1, d2, d2_closed_form,
    d2_star_kernel_basis, d_matrix, graded_kernel2, ind2_matrix, jacobson_s, nfold_bracket,
    omega_eval, ordinary_h1, ordinary_h2, pair_basis, pair_basis_graded, phi_k, restricted_h1,
    restricted_h2, tilde_closed_form, tilde_eval_bruteforce, triple_basis_graded, verify_extension,
    AlgebraElement, Cochain1, Cochain2, CocycleLabel, EvalMethod, Fp, FpMatrix, FpVec, Prime,
    Representative, RestrictedCochain2, RestrictedStructure, TildeTag, DEFAULT_BRUTEFORCE_CAP,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const ALL_PRIMES: &[u32] = &[5, 7, 11, 13, 17, 19, 23, 29, 31];
const RESTRICTED_PRIMES: &[u32] = &[5, 7, 11, 13, 17, 23];
const SEED: u64 = 0xacce97ed;

fn prime(v: u32) -> Prime {
    Prime::new_at_least_5(v).unwrap()
}

fn graded_vec(p: Prime, k: usize, c: &Cochain2) -> FpVec {
    let entries: Vec<i64> = pair_basis_graded(p, k)
        .iter()
        .map(|&(i, j)| c.coeff(i, j).value() as i64)
        .collect();
    FpVec::from_signed(p, &entries)
}

fn rank_of(p: Prime, rows: &[FpVec]) -> usize {
    if rows.is_empty() {
        0
    } else {
        FpMatrix::from_rows(p, rows).unwrap().rank()
    }
}

fn spans_equal(p: Prime, k: usize, a: &[Cochain2], b: &[Cochain2]) -> bool {
    let av: Vec<FpVec> = a.iter().map(|c| graded_vec(p, k, c)).collect();
    let bv: Vec<FpVec> = b.iter().map(|c| graded_vec(p, k, c)).collect();
    let mut all = av.clone();
    all.extend(bv.iter().cloned());
    rank_of(p, &av) == rank_of(p, &all) && rank_of(p, &bv) == rank_of(p, &all)
}

#[test]
fn criterion_1_ordinary_h1() {
    for &v in ALL_PRIMES {
        let p = prime(v);
        let report = ordinary_h1(p);
        assert_eq!(report.dimension, 2, "dim H^1 at p={v}");
        assert_eq!(
            report.representatives,
            vec![
                Representative::One(Cochain1::basis(p, 1)),
                Representative::One(Cochain1::basis(p, 2)),
            ],
            "H^1 basis at p={v}"
        );
    }
    println!("criterion 1: PASS - dim H^1 = 2 with basis {{e^1, e^2}} for all listed primes");
}

#[test]
fn criterion_2_ordinary_h2() {
    for &v in ALL_PRIMES {
        let p = prime(v);
        let pv = v as usize;
        let report = ordinary_h2(p);
        assert_eq!(report.kernel_dim, pv + 1, "dim ker d^2 at p={v}");
        assert_eq!(report.dimension, 3, "dim H^2 at p={v}");
        let mut expected_degrees = vec![5usize, 7, pv + 1];
        expected_degrees.sort_unstable();
        expected_degrees.dedup();
        let degrees: Vec<usize> = report.graded.iter().map(|&(k, _)| k).collect();
        assert_eq!(degrees, expected_degrees, "H^2 degrees at p={v}");
        assert!(
            report.graded.iter().all(|&(_, d)| d == 1),
            "each graded part is a line at p={v}"
        );

        // Representatives cohomologous to e^{1,4}, e^{2,5}, phi_{p+1}: the
        // difference lies in the degree-k coboundary span.
        let canonical = [
            Cochain2::basis(p, 1, 4).unwrap(),
            Cochain2::basis(p, 2, 5).unwrap(),
            phi_k(p, pv + 1).unwrap(),
        ];
        for rep in &report.representatives {
            let Representative::Two(c) = rep else {
                panic!("H^2 representative should be a 2-cochain")
            };
            let k = c.degrees()[0];
            let target = canonical
                .iter()
                .find(|t| t.degrees() == vec![k])
                .unwrap_or_else(|| panic!("no canonical class in degree {k}"));
            let image: Vec<FpVec> = if k <= pv {
                vec![graded_vec(p, k, &d1(&Cochain1::basis(p, k)))]
            } else {
                Vec::new()
            };
            let a = graded_vec(p, k, c);
            let b = graded_vec(p, k, target);
            let diff_entries: Vec<i64> = (0..a.len())
                .map(|i| (a.get(i) - b.get(i)).value() as i64)
                .collect();
            let mut with = image.clone();
            with.push(FpVec::from_signed(p, &diff_entries));
            assert_eq!(
                rank_of(p, &with),
                rank_of(p, &image),
                "p={v} k={k}: representative not cohomologous to the canonical class"
            );
        }
    }
    // p = 5 special cases for the graded kernels.
    let p5 = prime(5);
    assert!(spans_equal(
        p5,
        5,
        &graded_kernel2(p5, 5).unwrap(),
        &[Cochain2::basis(p5, 1, 4).unwrap(), phi_k(p5, 5).unwrap()],
    ));
    assert_eq!(
        graded_kernel2(p5, 7).unwrap(),
        vec![Cochain2::basis(p5, 2, 5).unwrap()]
    );
    println!(
        "criterion 2: PASS - dim ker d^2 = p+1, dim H^2 = 3, graded parts at {{5, 7, p+1}}, canonical classes"
    );
}

#[test]
fn criterion_3_reference_matrix_rows() {
    for table in golden::TABLES {
        let p = prime(table.p);
        let k = table.k;
        let pairs = pair_basis_graded(p, k);
        assert_eq!(
            pairs,
            table.columns.to_vec(),
            "column set at p={} k={k}",
            table.p
        );
        let triples = triple_basis_graded(p, k);
        let m = d_matrix(2, p, Some(k));
        for &((u, v, w), cells) in table.rows {
            assert_eq!(cells.len(), pairs.len(), "row width ({u},{v},{w})");
            let row_idx = triples
                .iter()
                .position(|&t| t == (u, v, w))
                .unwrap_or_else(|| panic!("row ({u},{v},{w}) not in degree-{k} basis"));
            // Entry-for-entry match of the matrix row (structurally absent
            // positions hold 0).
            for (col, &cell) in cells.iter().enumerate() {
                let expected = if cell == golden::B {
                    Fp::zero(p)
                } else {
                    Fp::new(cell as i64, p)
                };
                assert_eq!(
                    m.get(row_idx, col),
                    expected,
                    "p={} k={k} row ({u},{v},{w}) column {:?}",
                    table.p,
                    pairs[col]
                );
            }
            // The present/absent pattern matches the four-term row relation.
            let relation = basic_equation_row(p, k, u, v).unwrap();
            let present: Vec<(usize, usize)> = relation.iter().map(|&(pair, _)| pair).collect();
            let golden_present: Vec<(usize, usize)> = cells
                .iter()
                .enumerate()
                .filter(|(_, &c)| c != golden::B)
                .map(|(col, _)| pairs[col])
                .collect();
            assert_eq!(
                present, golden_present,
                "term pattern at p={} k={k} row ({u},{v},{w})",
                table.p
            );
        }
    }
    println!(
        "criterion 3: PASS - u in {{1,2}} rows of the d^2 matrices match the reference tables (11 tables)"
    );
}

#[test]
fn criterion_4_restricted_h1() {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for &v in ALL_PRIMES {
        let p = prime(v);
        let mut structures = vec![RestrictedStructure::zero(p)];
        for _ in 0..5 {
            structures.push(RestrictedStructure::random(p, false, &mut rng));
        }
        if v % 3 == 2 {
            for _ in 0..5 {
                structures.push(RestrictedStructure::random(p, true, &mut rng));
            }
        }
        for s in &structures {
            let report = restricted_h1(s);
            assert_eq!(report.dimension, 2, "dim H^1_* at p={v}");
        }
    }
    println!("criterion 4: PASS - dim H^1_* = 2 for zero, random lambda, and random (mu, lambda)");
}

#[test]
fn criterion_5_restricted_h2_regimes() {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 5);
    let mut lines = Vec::new();
    let mut mismatches = 0usize;
    let mut record = |p: u32, desc: &str, expected: usize, computed: usize| {
        let ok = expected == computed;
        lines.push(format!(
            "  p={p:<2} {desc:<34} expected {expected:>2}  computed {computed:>2}  {}",
            if ok { "ok" } else { "MISMATCH" }
        ));
        if !ok {
            1
        } else {
            0
        }
    };

    for &v in RESTRICTED_PRIMES {
        let p = prime(v);
        let pv = v as usize;
        if v % 3 != 2 {
            // lambda = 0 and 5 random lambda: expected p+3.
            let zero = restricted_h2(&RestrictedStructure::zero(p));
            mismatches += record(v, "lambda = 0", pv + 3, zero.dimension);
            for i in 0..5 {
                let s = RestrictedStructure::random(p, false, &mut rng);
                let r = restricted_h2(&s);
                mismatches += record(v, &format!("random lambda #{i}"), pv + 3, r.dimension);
            }
        } else {
            // mu + lambda = 0 regime: expected p+3.
            let zero = restricted_h2(&RestrictedStructure::zero(p));
            mismatches += record(v, "mu = lambda = 0", pv + 3, zero.dimension);
            for i in 0..3 {
                let lambda: Vec<i64> = (0..pv).map(|_| rng.gen_range(0..v) as i64).collect();
                if lambda.iter().all(|&x| x == 0) {
                    continue;
                }
                let mu: Vec<i64> = lambda.iter().map(|&x| -x).collect();
                let s = RestrictedStructure::new(p, &mu, &lambda).unwrap();
                let r = restricted_h2(&s);
                mismatches += record(v, &format!("mu = -lambda != 0 #{i}"), pv + 3, r.dimension);
            }
            // mu + lambda != 0 regime: expected p+2.
            for i in 0..3 {
                let s = loop {
                    let cand = RestrictedStructure::random(p, true, &mut rng);
                    if !cand.mu_plus_lambda_is_zero() {
                        break cand;
                    }
                };
                let r = restricted_h2(&s);
                mismatches += record(v, &format!("mu + lambda != 0 #{i}"), pv + 2, r.dimension);
            }
        }
    }
    let table = lines.join("\n");
    if mismatches == 0 {
        println!("criterion 5: PASS - restricted H^2 regime dimensions\n{table}");
    } else {
        println!("criterion 5: FAIL - {mismatches} regime cells disagree\n{table}");
        panic!(
            "criterion 5: {mismatches} regime cells disagree with the stated dimensions\n{table}"
        );
    }
}

#[test]
fn criterion_6_tilde_oracle_equivalence() {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 6);
    for &v in &[5u32, 7, 11] {
        let p = prime(v);
        let pv = v as usize;
        let mut tagged: Vec<(TildeTag, Cochain2)> = vec![
            (TildeTag::E14, Cochain2::basis(p, 1, 4).unwrap()),
            (TildeTag::E25, Cochain2::basis(p, 2, 5).unwrap()),
            (TildeTag::PhiP1, phi_k(p, pv + 1).unwrap()),
            (TildeTag::E1P, Cochain2::basis(p, 1, pv).unwrap()),
        ];
        for k in 3..=pv {
            tagged.push((TildeTag::PhiK(k), phi_k(p, k).unwrap()));
        }
        for sample in 0..100 {
            let g = AlgebraElement::random(p, &mut rng);
            for (tag, phi) in &tagged {
                let oracle = tilde_eval_bruteforce(phi, &g, DEFAULT_BRUTEFORCE_CAP).unwrap();
                let closed = tilde_closed_form(*tag, p, &g).unwrap();
                assert_eq!(
                    oracle, closed,
                    "p={v} sample {sample}: oracle vs closed form for {tag}"
                );
            }
        }
    }
    println!(
        "criterion 6: PASS - brute-force compatible-map evaluation matches the closed forms \
         (all resolved to the zero map) on 100 random elements at p = 5, 7, 11"
    );
}

#[test]
fn criterion_7_property_suites() {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 7);
    for &v in ALL_PRIMES {
        let p = prime(v);
        let pv = v as usize;

        // Jacobi on all basis triples.
        for i in 1..=pv {
            let ei = AlgebraElement::basis(p, i).unwrap();
            for j in (i + 1)..=pv {
                let ej = AlgebraElement::basis(p, j).unwrap();
                let bij = bracket(&ei, &ej).unwrap();
                for k in (j + 1)..=pv {
                    let ek = AlgebraElement::basis(p, k).unwrap();
                    let t1 = bracket(&bij, &ek).unwrap();
                    let t2 = bracket(&bracket(&ej, &ek).unwrap(), &ei).unwrap();
                    let t3 = bracket(&bracket(&ek, &ei).unwrap(), &ej).unwrap();
                    assert!(
                        t1.add(&t2).unwrap().add(&t3).unwrap().is_zero(),
                        "Jacobi fails at p={v} ({i},{j},{k})"
                    );
                }
            }
        }

        // d2 after d1 vanishes, exhaustively on the basis and on randoms.
        for k in 1..=pv {
            assert!(d2(&d1(&Cochain1::basis(p, k))).is_zero(), "p={v} e^{k}");
        }
        for _ in 0..5 {
            let coeffs: Vec<i64> = (0..pv).map(|_| rng.gen_range(0..v) as i64).collect();
            assert!(d2(&d1(&Cochain1::from_signed(p, &coeffs))).is_zero());
        }

        // Both d2 implementations agree: exhaustive on basis pairs for small
        // primes, randomized otherwise.
        if v <= 13 {
            for (i, j) in pair_basis(p) {
                let phi = Cochain2::basis(p, i, j).unwrap();
                assert_eq!(d2(&phi), d2_closed_form(&phi), "p={v} e^{{{i},{j}}}");
            }
        } else {
            for _ in 0..100 {
                let terms: Vec<(usize, usize, i64)> = pair_basis(p)
                    .into_iter()
                    .map(|(i, j)| (i, j, rng.gen_range(0..v) as i64))
                    .collect();
                let phi = Cochain2::from_pairs(p, &terms).unwrap();
                assert_eq!(d2(&phi), d2_closed_form(&phi), "p={v} random cochain");
            }
        }

        // (ad g)^p = 0 on 100 random elements.
        for _ in 0..100 {
            let g = AlgebraElement::random(p, &mut rng);
            let h = AlgebraElement::random(p, &mut rng);
            let mut args = vec![h];
            args.extend(std::iter::repeat_with(|| g.clone()).take(pv));
            assert!(nfold_bracket(&args).unwrap().is_zero(), "(ad g)^p at p={v}");
        }

        // Jacobson terms vanish identically in g(p): basis pairs plus randoms.
        let s = RestrictedStructure::random(p, true, &mut rng);
        for i in 1..=pv {
            for j in 1..=pv {
                let terms = jacobson_s(
                    &s,
                    &AlgebraElement::basis(p, i).unwrap(),
                    &AlgebraElement::basis(p, j).unwrap(),
                )
                .unwrap();
                assert!(
                    terms.iter().all(AlgebraElement::is_zero),
                    "s_i at p={v} ({i},{j})"
                );
            }
        }
        for _ in 0..5 {
            let g = AlgebraElement::random(p, &mut rng);
            let h = AlgebraElement::random(p, &mut rng);
            let terms = jacobson_s(&s, &g, &h).unwrap();
            assert!(
                terms.iter().all(AlgebraElement::is_zero),
                "random s_i at p={v}"
            );
        }

        // The induced bilinear map only sees sigma, never tau: its matrix is
        // built from sigma wedges alone, so any tau gives the same d2_star.
        let terms: Vec<(usize, usize, i64)> = pair_basis(p)
            .into_iter()
            .map(|(i, j)| (i, j, rng.gen_range(0..v) as i64))
            .collect();
        let sigma = Cochain2::from_pairs(p, &terms).unwrap();
        let m = ind2_matrix(&sigma, &s);
        for _ in 0..3 {
            let tau: Vec<i64> = (0..pv).map(|_| rng.gen_range(0..v) as i64).collect();
            let c = RestrictedCochain2::new(sigma.clone(), &tau).unwrap();
            let (_, induced) = ncoh::d2_star(&c, &s);
            assert_eq!(induced, m, "induced map depends on tau at p={v}");
        }

        // Frobenius scaling of omega (closed evaluation; the brute-force
        // route is exercised separately under its cap).
        for _ in 0..100 {
            let tau: Vec<i64> = (0..pv).map(|_| rng.gen_range(0..v) as i64).collect();
            let c = RestrictedCochain2::new(sigma.clone(), &tau).unwrap();
            let g = AlgebraElement::random(p, &mut rng);
            let alpha = Fp::new(rng.gen_range(0..v) as i64, p);
            let lhs = omega_eval(&c, &g.scale(alpha), EvalMethod::ClosedForm, 19).unwrap();
            let rhs = alpha.pow(v as u64) * omega_eval(&c, &g, EvalMethod::ClosedForm, 19).unwrap();
            assert_eq!(lhs, rhs, "Frobenius scaling at p={v}");
        }
    }
    println!(
        "criterion 7: PASS - Jacobi, d^2 d^1 = 0, d^2 route agreement, nilpotency, vanishing \
         Jacobson terms, tau-independence, Frobenius scaling"
    );
}

#[test]
fn criterion_8_extension_round_trip() {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 8);
    for &v in &[5u32, 7, 11] {
        let p = prime(v);
        let mut structures = vec![RestrictedStructure::zero(p)];
        structures.push(RestrictedStructure::random(p, true, &mut rng));
        for s in &structures {
            // Every kernel-basis cocycle builds an extension that passes all
            // axioms.
            for c in d2_star_kernel_basis(s) {
                let ext = build_extension(s, &c, DEFAULT_BRUTEFORCE_CAP).unwrap();
                let report = verify_extension(&ext, 2, SEED);
                assert!(report.all_passed(), "p={v} cocycle {c:?}:\n{report}");
            }
            // 20 random non-cocycles each fail at least one axiom with a
            // witness.
            let mut found = 0;
            while found < 20 {
                let terms: Vec<(usize, usize, i64)> = pair_basis(p)
                    .into_iter()
                    .map(|(i, j)| (i, j, rng.gen_range(0..v) as i64))
                    .collect();
                let tau: Vec<i64> = (0..v as usize)
                    .map(|_| rng.gen_range(0..v) as i64)
                    .collect();
                let c = RestrictedCochain2::new(Cochain2::from_pairs(p, &terms).unwrap(), &tau)
                    .unwrap();
                if ncoh::d2_star_is_zero(&c, s) {
                    continue;
                }
                found += 1;
                let ext = build_extension(s, &c, DEFAULT_BRUTEFORCE_CAP).unwrap();
                let report = verify_extension(&ext, 1, SEED);
                assert!(
                    !report.all_passed(),
                    "p={v}: non-cocycle passed verification"
                );
                assert!(
                    report.failures().iter().all(|f| f.witness.is_some()),
                    "p={v}: failure without witness"
                );
            }
        }
    }

    // The p = 5 extension by (e^{2,5}, tilde): its p-map twist equals the
    // oracle-resolved value of the compatible map, which the cross-check of
    // criterion 6 pins to the zero map; the brute-force evaluation inside
    // the extension's p-map must agree at every element.
    let p5 = prime(5);
    let s = RestrictedStructure::zero(p5);
    let c = cocycle_for_label(p5, &CocycleLabel::E25).unwrap();
    let ext = build_extension(&s, &c, DEFAULT_BRUTEFORCE_CAP).unwrap();
    for _ in 0..50 {
        let g = AlgebraElement::random(p5, &mut rng);
        let pm = ext.p_map(&ncoh::ExtElement::from_algebra(&g)).unwrap();
        let expected = tilde_eval_bruteforce(&c.sigma, &g, DEFAULT_BRUTEFORCE_CAP).unwrap();
        assert_eq!(pm.central_part(), expected, "p=5 e25 p-map twist");
        assert_eq!(
            expected,
            tilde_closed_form(TildeTag::E25, p5, &g).unwrap(),
            "p=5 e25 oracle-vs-registry"
        );
    }
    println!(
        "criterion 8: PASS - kernel cocycles verify, non-cocycles fail with witnesses, p = 5 \
         e25 p-map twist matches the oracle-resolved compatible map"
    );
}

#[test]
fn criterion_9_rank_nullity_consistency() {
    // Ordinary cohomology, recomputed from raw ungraded matrix ranks.
    for &v in ALL_PRIMES {
        let p = prime(v);
        let pv = v as usize;
        let d1m = d_matrix(1, p, None);
        let d2m = d_matrix(2, p, None);
        let h1 = ordinary_h1(p);
        assert_eq!(h1.dimension, pv - d1m.rank(), "H^1 rank-nullity at p={v}");
        let h2 = ordinary_h2(p);
        let ker2 = d2m.cols() - d2m.rank();
        assert_eq!(h2.kernel_dim, ker2, "ker d^2 at p={v}");
        assert_eq!(h2.dimension, ker2 - d1m.rank(), "H^2 = ker - im at p={v}");
        assert_eq!(h2.image_dim, d1m.rank(), "im d^1 at p={v}");
    }
    // Restricted cohomology: reported dimension against independent kernel
    // and image ranks in joint coordinates.
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 9);
    for &v in RESTRICTED_PRIMES {
        let p = prime(v);
        for s in [
            RestrictedStructure::zero(p),
            RestrictedStructure::random(p, true, &mut rng),
        ] {
            let report = restricted_h2(&s);
            let kernel: Vec<FpVec> = d2_star_kernel_basis(&s)
                .iter()
                .map(|c| c.joint_vec())
                .collect();
            let image: Vec<FpVec> = (1..=v as usize)
                .map(|k| ncoh::d1_star(&Cochain1::basis(p, k), &s).joint_vec())
                .collect();
            assert_eq!(report.kernel_dim, rank_of(p, &kernel), "ker rank p={v}");
            assert_eq!(report.image_dim, rank_of(p, &image), "im rank p={v}");
            assert_eq!(
                report.dimension,
                rank_of(p, &kernel) - rank_of(p, &image),
                "H^2_* rank-nullity p={v}"
            );
        }
    }
    println!("criterion 9: PASS - all reported dimensions equal kernel rank minus image rank");
}
