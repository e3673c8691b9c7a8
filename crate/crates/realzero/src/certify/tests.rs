use super::*;
use crate::poly::elementary_symmetric;
use crate::rational::{q, qr};

fn vars(names: &[&str]) -> VariableSet {
    VariableSet::new(names.iter().copied()).unwrap()
}

fn p(text: &str, vs: &VariableSet) -> Polynomial {
    Polynomial::parse(text, vs).unwrap()
}

#[test]
fn status_lattice_order() {
    assert!(Status::Refuted < Status::Unknown);
    assert!(Status::Unknown < Status::Probable);
    assert!(Status::Probable < Status::Certified);
}

#[test]
fn quadratic_decisions_on_pinned_examples() {
    let v = vars(&["x1", "x2"]);
    let ball = p("1 - x1^2 - x2^2", &v);
    assert_eq!(quadratic_real_zero(&ball).unwrap().status, Status::Certified);

    let hyper = p("x1*x2 - 1", &v);
    let verdict = quadratic_real_zero(&hyper).unwrap();
    assert_eq!(verdict.status, Status::Refuted);
    let Some(Witness::Direction(a)) = verdict.witness else {
        panic!("expected direction witness");
    };
    let zero = vec![q(0); 2];
    assert!(!is_real_rooted(&hyper.restrict_line(&a, &zero).unwrap()));

    let w = vars(&["x"]);
    assert_eq!(
        quadratic_real_zero(&p("1 + x", &w)).unwrap().status,
        Status::Certified
    );
    assert!(quadratic_real_zero(&p("x", &w)).is_err());
    assert!(quadratic_real_zero(&p("1 + x^3", &w)).is_err());
}

#[test]
fn real_zero_sampling_examples() {
    let v = vars(&["x1"]);
    let bad = p("1 + x1^2", &v);
    let verdict = real_zero_sample(&bad, 50, 1).unwrap();
    assert_eq!(verdict.status, Status::Refuted);
    assert_eq!(verdict.samples_used, 1);

    let vanishing = p("x1", &v);
    assert_eq!(
        real_zero_sample(&vanishing, 10, 1).unwrap().witness,
        Some(Witness::Origin)
    );

    let w = vars(&["x1", "x2"]);
    let ball = p("1 - x1^2 - x2^2", &w);
    assert_eq!(real_zero_sample(&ball, 100, 3).unwrap().status, Status::Probable);
}

#[test]
fn sampling_is_deterministic_and_matches_sequential() {
    let v = vars(&["x1", "x2", "x3"]);
    let poly = p("1 - x1^2 - 2*x2^2 - 3*x3^2 + x1*x2", &v);
    let a = real_zero_sample(&poly, 40, 9).unwrap();
    let b = real_zero_sample(&poly, 40, 9).unwrap();
    let c = real_zero_sample_sequential(&poly, 40, 9).unwrap();
    assert_eq!(a, b);
    assert_eq!(a, c);

    let d = stable_sample(&poly, 40, 9).unwrap();
    let e = stable_sample_sequential(&poly, 40, 9).unwrap();
    assert_eq!(d, e);
}

#[test]
fn stability_sampling_examples() {
    let v = vars(&["x1", "x2"]);
    assert_eq!(
        stable_sample(&p("x1*x2 - 1", &v), 100, 5).unwrap().status,
        Status::Probable
    );
    let ball = p("1 - x1^2 - x2^2", &v);
    let verdict = stable_sample(&ball, 200, 5).unwrap();
    assert_eq!(verdict.status, Status::Refuted);
    let Some(Witness::Line { a, b }) = &verdict.witness else {
        panic!("expected line witness");
    };
    assert!(!is_real_rooted(&ball.restrict_line(a, b).unwrap()));

    let w = vars(&["x1", "x2", "x3", "x4"]);
    let pairs = p("x1*x2 + x3*x4", &w);
    assert_eq!(stable_sample(&pairs, 300, 5).unwrap().status, Status::Refuted);
    // Hand witness: a = 1, b = (1, 1, -1, -1) gives 2t^2 + 2.
    let f = pairs
        .restrict_line(&vec![q(1); 4], &[q(1), q(1), q(-1), q(-1)])
        .unwrap();
    assert!(!is_real_rooted(&f));

    assert!(stable_sample(&Polynomial::zero(v), 10, 5).is_err());
}

#[test]
fn rayleigh_pinned_examples() {
    let v = vars(&["x1", "x2"]);
    let free = p("1 + x1 + x2 + x1*x2", &v);
    assert!(rayleigh(&free, "x1", "x2").unwrap().is_zero());

    let w = vars(&["x1", "x2", "x3"]);
    let e2 = elementary_symmetric(&w, 2).unwrap();
    let r = rayleigh(&e2, "x1", "x2").unwrap();
    assert_eq!(r, p("x3^2", &w));

    assert!(rayleigh(&p("x1^2", &v), "x1", "x2").is_err());
    assert!(rayleigh(&free, "x1", "x1").is_err());
}

#[test]
fn sos_verification() {
    let v = vars(&["x"]);
    let cert = SosCertificate::new(vec![(q(1), p("x", &v))]).unwrap();
    assert!(verify_sos(&p("x^2", &v), &cert));
    assert!(!verify_sos(&p("x^2 + 1", &v), &cert));
    assert_eq!(sos_defect(&p("x^2 + 1", &v), &cert), p("1", &v));
    assert!(SosCertificate::new(vec![(q(0), p("x", &v))]).is_err());
}

#[test]
fn certified_identity_json_round_trip() {
    let v = vars(&["x", "y"]);
    let id = CertifiedIdentity {
        target: p("x^2 + 3/4*y^2", &v),
        certificate: SosCertificate::new(vec![(q(1), p("x", &v)), (qr(3, 4), p("y", &v))])
            .unwrap(),
    };
    let js = serde_json::to_string(&id).unwrap();
    let back: CertifiedIdentity = serde_json::from_str(&js).unwrap();
    assert_eq!(back, id);
    assert!(verify_sos(&back.target, &back.certificate));
}

#[test]
fn global_nonneg_paths() {
    let v = vars(&["x1", "x2", "x3", "x4"]);
    assert_eq!(
        global_nonneg(&p("x3^2", &v), None, 10, 1).status,
        Status::Certified
    );
    let odd = p("x2*x4", &v);
    let verdict = global_nonneg(&odd, None, 200, 1);
    assert_eq!(verdict.status, Status::Refuted);
    let Some(Witness::Point(pt)) = verdict.witness else {
        panic!("expected point witness");
    };
    assert!(odd.evaluate(&pt).unwrap().is_negative());
    // Nonnegative coefficients alone never certify.
    assert_ne!(
        global_nonneg(&p("x2*x4 + x1", &v), None, 5, 1).status,
        Status::Certified
    );
}

#[test]
fn wagner_wei_certifies_elementary_symmetric() {
    let v = vars(&["x1", "x2", "x3"]);
    let e2 = elementary_symmetric(&v, 2).unwrap();
    let tree = wagner_wei_stable(&e2, &[], WagnerWeiOptions::default()).unwrap();
    assert_eq!(tree.overall(), Status::Certified);
    assert!(tree.flags.iter().any(|f| f.contains("zero child")));
}

#[test]
fn wagner_wei_refutes_disjoint_pairs() {
    let v = vars(&["x1", "x2", "x3", "x4"]);
    let pairs = p("x1*x2 + x3*x4", &v);
    let tree = wagner_wei_stable(&pairs, &[], WagnerWeiOptions::default()).unwrap();
    assert_eq!(tree.root_status(), Status::Refuted);
    assert_eq!(tree.verdict().status, Status::Refuted);
    // All six pairs at the root refute.
    let root = &tree.nodes[tree.root];
    let res = root.rayleigh.as_ref().unwrap();
    assert_eq!(res.tried.len(), 6);
    assert!(res.tried.iter().all(|(_, _, s)| *s == Status::Refuted));
}

#[test]
fn wagner_wei_rejects_bad_inputs() {
    let v = vars(&["x1", "x2"]);
    assert!(wagner_wei_stable(&p("x1^2", &v), &[], WagnerWeiOptions::default()).is_err());
    assert!(wagner_wei_stable(&p("x1 - x2", &v), &[], WagnerWeiOptions::default()).is_err());
    assert!(
        wagner_wei_stable(&Polynomial::zero(v), &[], WagnerWeiOptions::default()).is_err()
    );
}

#[test]
fn rigid_convexity_examples() {
    let v = vars(&["x"]);
    let disk = p("1 - x^2", &v);
    assert!(rigidly_convex_contains(&disk, &[qr(1, 2)]).unwrap());
    assert!(!rigidly_convex_contains(&disk, &[q(3)]).unwrap());
    // The boundary point: root lands exactly at t = 1, excluded.
    assert!(rigidly_convex_contains(&disk, &[q(1)]).unwrap());
    assert!(rigidly_convex_contains(&p("x", &v), &[q(1)]).is_err());
}

#[test]
fn orthant_membership_shortcut() {
    let v = vars(&["x"]);
    assert!(orthant_in_rigid_set(&p("1 + x", &v)));
    assert!(!orthant_in_rigid_set(&p("1 - x", &v)));
    assert!(orthant_in_rigid_set(&Polynomial::one(v)));
}

#[test]
fn det_polynomials_sample_as_real_zero() {
    let a1 = SymmetricMatrixQ::from_i64(&[&[1, 2], &[2, -1]]).unwrap();
    let a2 = SymmetricMatrixQ::from_i64(&[&[0, 1], &[1, 3]]).unwrap();
    let dp = det_polynomial(&[("x1".into(), a1), ("x2".into(), a2)]).unwrap();
    assert_eq!(real_zero_sample(&dp, 100, 11).unwrap().status, Status::Probable);
}

#[test]
fn quadratic_agrees_with_sampling_on_random_quadratics() {
    // Certified quadratics never refute under sampling; refuted ones carry
    // an exact line witness.
    let v = vars(&["x1", "x2", "x3"]);
    for seed in 0..60u64 {
        let mut rng = probe_rng(seed, 0);
        let mut terms: Vec<(Vec<u32>, Rational)> = vec![(vec![0, 0, 0], q(1))];
        for i in 0..3 {
            let mut e = vec![0u32; 3];
            e[i] = 1;
            terms.push((e, q(rng.gen_range(-4i64..=4))));
        }
        for i in 0..3 {
            for j in i..3 {
                let mut e = vec![0u32; 3];
                e[i] += 1;
                e[j] += 1;
                terms.push((e, q(rng.gen_range(-4i64..=4))));
            }
        }
        let poly = Polynomial::from_terms(v.clone(), terms).unwrap();
        let exact = quadratic_real_zero(&poly).unwrap();
        let sampled = real_zero_sample(&poly, 120, seed + 1).unwrap();
        match exact.status {
            Status::Certified => assert_eq!(sampled.status, Status::Probable),
            Status::Refuted => {
                let Some(Witness::Direction(a)) = &exact.witness else {
                    panic!("missing witness");
                };
                let zero = vec![q(0); 3];
                assert!(!is_real_rooted(&poly.restrict_line(a, &zero).unwrap()));
            }
            _ => panic!("quadratic decision must be exact"),
        }
    }
}
