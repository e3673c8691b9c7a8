use super::*;
use crate::matrix::MatQ;
use crate::rational::q;
use num_traits::Zero;

fn g(names: &[&str]) -> Vec<String> {
    names.iter().map(ToString::to_string).collect()
}

fn u23() -> Matroid {
    Matroid::from_bases(
        g(&["a", "b", "c"]),
        &[vec!["a", "b"], vec!["a", "c"], vec!["b", "c"]],
    )
    .unwrap()
}

#[test]
fn from_bases_validates_exchange() {
    assert_eq!(u23().num_bases(), 3);

    let err = Matroid::from_bases(g(&["a", "b", "c", "d"]), &[vec!["a", "b"], vec!["c", "d"]]);
    match err {
        Err(Error::BasisExchange { basis, element, .. }) => {
            assert_eq!(basis, vec!["a", "b"]);
            assert_eq!(element, "a");
        }
        other => panic!("expected exchange failure, got {other:?}"),
    }

    assert!(matches!(
        Matroid::from_bases::<&str>(g(&["a"]), &[]),
        Err(Error::InvalidMatroid(_))
    ));
    assert!(matches!(
        Matroid::from_bases(g(&["a", "b"]), &[vec!["a"], vec!["a", "b"]]),
        Err(Error::InvalidMatroid(_))
    ));
}

#[test]
fn pt_instances_have_pinned_counts() {
    let m1 = poljak_turzik(PtInstance::M1);
    let m2 = poljak_turzik(PtInstance::M2);
    assert_eq!(m1.num_bases(), 30);
    assert_eq!(m2.num_bases(), 31);
    let xs = ["x1", "x2", "x3", "x4", "x5", "x6"];
    assert!(m1
        .restriction(&xs)
        .unwrap()
        .same_matroid(&m2.restriction(&xs).unwrap()));
    // The common restriction drops exactly the two all-x lines.
    assert_eq!(m1.restriction(&xs).unwrap().num_bases(), 18);
}

#[test]
fn rank_and_closure_pinned_values() {
    let m1 = poljak_turzik(PtInstance::M1);
    assert!(m1.closure(&["x1", "x4"]).unwrap().contains(&"y".to_string()));
    assert_eq!(m1.rank(&["y", "x3", "x6"]).unwrap(), 2);
    assert_eq!(m1.rank::<&str>(&[]).unwrap(), 0);
    assert_eq!(m1.rank_total(), 3);
}

#[test]
fn restriction_contraction_loops() {
    let m1 = poljak_turzik(PtInstance::M1);
    assert!(m1.loops().is_empty());
    assert!(m1.coloops().is_empty());
    let m2 = poljak_turzik(PtInstance::M2);
    assert!(m2.loops().is_empty());
    assert!(m2.coloops().is_empty());

    let contracted = u23().contraction(&["a"]).unwrap();
    let u12 = Matroid::from_bases(g(&["b", "c"]), &[vec!["b"], vec!["c"]]).unwrap();
    assert!(contracted.same_matroid(&u12));
}

#[test]
fn contraction_matches_derivative_of_bases_polynomial() {
    let m1 = poljak_turzik(PtInstance::M1);
    let p = m1.bases_generating_poly().unwrap();
    let dp = p.partial_derivative("x1", 1).unwrap();
    let contracted = m1.contraction(&["x1"]).unwrap();
    let expected = contracted.bases_generating_poly().unwrap();
    // The derivative drops x1; compare over the contracted variable set.
    assert!(dp.semantic_eq(&expected));
}

#[test]
fn bases_generating_polynomials() {
    let u34 = {
        let names = g(&["a", "b", "c", "d"]);
        let mut bases = Vec::new();
        for i in 0..4usize {
            let b: Vec<String> = (0..4).filter(|&j| j != i).map(|j| names[j].clone()).collect();
            bases.push(b);
        }
        Matroid::from_bases(names, &bases).unwrap()
    };
    let p = u34.bases_generating_poly().unwrap();
    let e3 = crate::poly::elementary_symmetric(p.vars(), 3).unwrap();
    assert_eq!(p, e3);
}

#[test]
fn modularity_checks() {
    assert!(u23().is_modular());
    let two_elements = Matroid::from_bases(g(&["a", "b"]), &[vec!["a"], vec!["b"]]).unwrap();
    assert!(two_elements.is_modular());
    // Brute-force oracle over flat pairs, rank from independent-set
    // enumeration rather than basis intersections.
    let m1 = poljak_turzik(PtInstance::M1);
    let oracle = |m: &Matroid| -> bool {
        let rank_indep = |a: u32| -> usize {
            (0..=m.full_mask())
                .filter(|&s| {
                    s & !a == 0
                        && m.bases_masks().iter().any(|&b| s & !b == 0)
                })
                .map(|s| s.count_ones() as usize)
                .max()
                .unwrap_or(0)
        };
        let flats: Vec<u32> = (0..=m.full_mask())
            .filter(|&f| {
                (0..m.ground().len())
                    .all(|x| f >> x & 1 == 1 || rank_indep(f | 1 << x) > rank_indep(f))
            })
            .collect();
        flats.iter().all(|&f| {
            flats
                .iter()
                .all(|&h| rank_indep(f & h) + rank_indep(f | h) == rank_indep(f) + rank_indep(h))
        })
    };
    assert_eq!(m1.is_modular(), oracle(&m1));
    assert!(!m1.is_modular());
    assert_eq!(u23().is_modular(), oracle(&u23()));
}

#[test]
fn rank_table_axioms_hold_for_matroids() {
    for m in [u23(), poljak_turzik(PtInstance::M1)] {
        let t = RankTable::from_matroid(&m);
        t.validate().unwrap();
        assert!(t.to_matroid().unwrap().same_matroid(&m));
        // r(A) <= |A|, monotone, r(cl A) = r(A), cl monotone.
        for a in 0..=m.full_mask() {
            assert!(m.rank_mask(a) <= a.count_ones() as usize);
            assert_eq!(m.rank_mask(m.closure_mask(a)), m.rank_mask(a));
            for b in 0..=m.full_mask() {
                if a & b == a {
                    assert!(m.rank_mask(a) <= m.rank_mask(b));
                    assert_eq!(m.closure_mask(a) & !m.closure_mask(b), 0);
                }
            }
        }
    }
}

#[test]
fn amalgam_search_pinned_cases() {
    // Identical inputs reproduce the input.
    let m = u23();
    match amalgam_search(&m, &m).unwrap() {
        AmalgamOutcome::Amalgam(n) => assert!(n.same_matroid(&m)),
        other => panic!("expected amalgam, got {other:?}"),
    }

    // Free matroids glued along one point.
    let f1 = Matroid::from_bases(g(&["a", "b"]), &[vec!["a", "b"]]).unwrap();
    let f2 = Matroid::from_bases(g(&["b", "c"]), &[vec!["b", "c"]]).unwrap();
    match amalgam_search(&f1, &f2).unwrap() {
        AmalgamOutcome::Amalgam(n) => {
            assert!(n.restriction(&["a", "b"]).unwrap().same_matroid(&f1));
            assert!(n.restriction(&["b", "c"]).unwrap().same_matroid(&f2));
        }
        other => panic!("expected amalgam, got {other:?}"),
    }

    // The seven-point pair has none.
    let m1 = poljak_turzik(PtInstance::M1);
    let m2 = poljak_turzik(PtInstance::M2);
    assert!(matches!(
        amalgam_search(&m1, &m2).unwrap(),
        AmalgamOutcome::Infeasible
    ));

    // Incompatible shared restrictions are reported as such.
    let line = Matroid::from_bases(g(&["a", "b"]), &[vec!["a"], vec!["b"]]).unwrap();
    assert!(matches!(
        amalgam_search(&f1, &line).unwrap(),
        AmalgamOutcome::IncompatibleRestrictions
    ));
}

#[test]
fn amalgam_of_identical_random_linear_matroids() {
    // Random representable matroids from rational matrices.
    let mut found = 0;
    for seed in 0..40u64 {
        let mut rng = crate::certify::probe_rng(seed, 0);
        use rand::Rng;
        let n = rng.gen_range(3..=5usize);
        let r = rng.gen_range(1..=3usize);
        let mat = MatQ::from_fn(r, n, |_, _| q(rng.gen_range(-2i64..=2)));
        let names: Vec<String> = (0..n).map(|i| format!("e{i}")).collect();
        let mut bases = Vec::new();
        for sub in 0..1u32 << n {
            if sub.count_ones() as usize != r {
                continue;
            }
            let cols: Vec<usize> = mask_bits(sub).collect();
            let sq = MatQ::from_fn(r, r, |i, j| mat[(i, cols[j])].clone());
            if !sq.det().unwrap().is_zero() {
                bases.push(mask_bits(sub).map(|i| names[i].clone()).collect::<Vec<_>>());
            }
        }
        if bases.is_empty() {
            continue;
        }
        let m = Matroid::from_bases(names, &bases).unwrap();
        found += 1;
        match amalgam_search(&m, &m).unwrap() {
            AmalgamOutcome::Amalgam(out) => assert!(out.same_matroid(&m)),
            other => panic!("self-amalgam must exist, got {other:?}"),
        }
        if found >= 20 {
            break;
        }
    }
    assert!(found >= 20);
}

#[test]
fn replay_of_the_hand_argument() {
    let replay = pt_infeasibility_replay().unwrap();
    assert!(replay.all_hold(), "failing steps: {:?}", replay.steps);
    assert_eq!(replay.steps.len(), 8);
}

#[test]
fn delta_matroid_basics() {
    let dm = DeltaMatroid::new_unchecked(
        g(&["a", "b"]),
        &[vec![], vec!["a"], vec!["a", "b"]],
    )
    .unwrap();
    assert!(dm.is_delta_matroid());
    let lower = dm.lower_matroid().unwrap();
    assert_eq!(lower.rank_total(), 0);
    let upper = dm.upper_matroid().unwrap();
    assert_eq!(upper.rank_total(), 2);

    let single = DeltaMatroid::new_unchecked(g(&["a", "b"]), &[vec!["a"]]).unwrap();
    assert!(single.is_delta_matroid());

    // Equicardinal feasible family = matroid bases: lower = upper.
    let from_bases = DeltaMatroid::new_unchecked(
        g(&["a", "b", "c"]),
        &[vec!["a", "b"], vec!["a", "c"], vec!["b", "c"]],
    )
    .unwrap();
    assert!(from_bases.lower_matroid().unwrap().same_matroid(&u23()));
    assert!(from_bases.upper_matroid().unwrap().same_matroid(&u23()));
}

#[test]
fn delta_matroid_violation_has_exact_witness() {
    // {{a,b},{c,d}} as a feasible family: deleting a from {a,b} cannot be
    // repaired.
    let dm = DeltaMatroid::new_unchecked(
        g(&["a", "b", "c", "d"]),
        &[vec!["a", "b"], vec!["c", "d"]],
    )
    .unwrap();
    let v = dm.violation().unwrap();
    assert_eq!(v.a, vec!["a", "b"]);
    assert_eq!(v.b, vec!["c", "d"]);
    assert_eq!(v.x, "a");
    let check = dm.exchange_check(&["a", "b"], &["c", "d"], "a").unwrap();
    assert!(!check.satisfied);
    assert_eq!(check.candidates.len(), 4);
}

#[test]
fn mixed_cardinality_delta_matroid_validates() {
    // Feasible sets of sizes 1 and 2; symmetric exchange holds by hand.
    let dm = DeltaMatroid::validated(
        g(&["a", "b", "c"]),
        &[vec!["a"], vec!["b"], vec!["a", "c"], vec!["b", "c"]],
    )
    .unwrap();
    assert!(dm.is_delta_matroid());
    let lower = dm.lower_matroid().unwrap();
    assert_eq!(lower.rank_total(), 1);
    let upper = dm.upper_matroid().unwrap();
    assert_eq!(upper.rank_total(), 2);
}

#[test]
fn support_matroids_from_polynomials() {
    let m1 = poljak_turzik(PtInstance::M1);
    let p = m1.bases_generating_poly().unwrap();
    let back = support_matroid(&p).unwrap();
    assert!(back.same_matroid(&m1));

    let vars = crate::poly::VariableSet::new(["a", "b", "c", "d"]).unwrap();
    let e3 = crate::poly::elementary_symmetric(&vars, 3).unwrap();
    assert_eq!(support_matroid(&e3).unwrap().num_bases(), 4);

    let pairs = Polynomial::parse("a*b + c*d", &vars).unwrap();
    assert!(matches!(
        support_matroid(&pairs),
        Err(Error::BasisExchange { .. })
    ));
    let inhom = Polynomial::parse("1 + a", &vars).unwrap();
    assert!(support_matroid(&inhom).is_err());
}

#[test]
fn matroid_json_round_trip() {
    let m = u23();
    let js = serde_json::to_string(&m).unwrap();
    let back: Matroid = serde_json::from_str(&js).unwrap();
    assert!(back.same_matroid(&m));

    let dm = DeltaMatroid::new_unchecked(g(&["a", "b"]), &[vec![], vec!["a", "b"]]).unwrap();
    let js = serde_json::to_string(&dm).unwrap();
    let back: DeltaMatroid = serde_json::from_str(&js).unwrap();
    assert_eq!(back, dm);
}
