use proptest::prelude::*;

use cdlab_core::{io, named, Analysis, CatalogSpec, CdLattice, Group, Limits, Subgroup};

const SPECS: &[&str] = &[
    "cyclic:12",
    "dihedral:4",
    "dihedral:6",
    "dicyclic:2",
    "dicyclic:3",
    "symmetric:3",
    "symmetric:4",
    "alternating:4",
    "elementary_abelian:2:3",
    "heisenberg:3",
    "extraspecial_exp_p2:3",
    "product(symmetric:3,cyclic:2)",
    "product(dihedral:4,cyclic:2)",
    "product(dicyclic:2,cyclic:4)",
    "product(alternating:4,cyclic:2)",
];

fn group(i: usize) -> Group {
    named(&CatalogSpec::parse(SPECS[i]).unwrap(), Limits::default()).unwrap()
}

fn spec_index() -> impl Strategy<Value = usize> {
    0..SPECS.len()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn double_centralizer(i in spec_index(), seeds in prop::collection::vec(0usize..1000, 1..3)) {
        let g = group(i);
        let h = g.closure(seeds.iter().map(|s| s % g.order()));
        let c = g.centralizer(&h);
        let cc = g.centralizer(&c);
        prop_assert!(h.is_subgroup_of(&cc));
        prop_assert_eq!(g.centralizer(&cc), c);
    }

    #[test]
    fn normal_closure_idempotent(i in spec_index(), seed in 0usize..1000) {
        let g = group(i);
        let h = g.cyclic_subgroup(seed % g.order());
        let n = g.normal_closure(&h);
        prop_assert!(g.is_normal(&n));
        prop_assert!(h.is_subgroup_of(&n));
        prop_assert_eq!(g.normal_closure(&n), n.clone());
        prop_assert!(g.is_subnormal(&n));
    }

    #[test]
    fn relabelling_preserves_invariants(i in spec_index(), key in any::<u64>()) {
        let g = group(i);
        let n = g.order();
        // Random permutation of the non-identity elements.
        let mut perm: Vec<usize> = (1..n).collect();
        let mut state = key | 1;
        for j in (1..perm.len()).rev() {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            perm.swap(j, (state % (j as u64 + 1)) as usize);
        }
        perm.insert(0, 0);
        let mut back = vec![0; n];
        for (x, &y) in perm.iter().enumerate() {
            back[y] = x;
        }
        let h = Group::from_fn(n, |a, b| perm[g.mul(back[a], back[b])]).unwrap();
        let a = Analysis::new(&g, 100_000).unwrap();
        let b = Analysis::new(&h, 100_000).unwrap();
        prop_assert_eq!(a.len(), b.len());
        prop_assert_eq!(a.mu(), b.mu());
        prop_assert_eq!(a.cd_indices().len(), b.cd_indices().len());
        prop_assert_eq!(a.center().order(), b.center().order());
        prop_assert_eq!(g.central_series().nilpotency_class, h.central_series().nilpotency_class);
    }
}

#[test]
fn measure_bounds_and_divisibility() {
    for (i, spec) in SPECS.iter().enumerate() {
        let g = group(i);
        let a = Analysis::new(&g, 100_000).unwrap();
        let n = g.order() as u64;
        let gz = n / a.center().order() as u64;
        assert!(a.mu() <= gz, "{}", spec);
        assert_eq!(a.measure(a.full_index()).value, gz);
        for j in 0..a.len() {
            assert_eq!((n * n) % a.measure(j).value, 0);
        }
    }
}

#[test]
fn lattice_invariants() {
    for (i, spec) in SPECS.iter().enumerate() {
        let g = group(i);
        let a = Analysis::new(&g, 100_000).unwrap();
        let l = CdLattice::build(&a).unwrap();
        let product = l.top().order() * g.centralizer(l.top()).order();
        for (j, h) in l.members.iter().enumerate() {
            let c = g.centralizer(h);
            assert_eq!(h.order() * c.order(), product, "{}", spec);
            assert_eq!(l.members.get(l.duality[j]), &c);
            assert_eq!(&g.centralizer(&c), h);
            assert!(l.bottom().is_subgroup_of(h) && h.is_subgroup_of(l.top()));
            for k in l.members.iter() {
                assert!(l.members.contains(h.join(&g, k).mask()));
                assert!(l.members.contains(h.meet(&g, k).mask()));
                assert_eq!(h.set_product(&g, k).count(), h.join(&g, k).order());
            }
        }
        assert_eq!(l.bottom(), &g.centralizer(l.top()));
        assert!(l.bottom().is_abelian(&g));
    }
}

#[test]
fn fitting_trivial_iff_no_normal_abelian() {
    for spec in SPECS.iter().chain(&["alternating:5", "symmetric:5", "product(symmetric:3,symmetric:3)"]) {
        let g = named(&CatalogSpec::parse(spec).unwrap(), Limits::default()).unwrap();
        let a = Analysis::new(&g, 100_000).unwrap();
        let normal_abelian = (0..a.len()).any(|j| a.is_normal(j) && a.is_abelian(j) && !a.subgroup(j).is_trivial());
        assert_eq!(g.fitting_subgroup().is_trivial(), !normal_abelian, "{spec}");
    }
}

#[test]
fn nilpotency_class_equals_upper_length() {
    for (i, spec) in SPECS.iter().enumerate() {
        let g = group(i);
        let s = g.central_series();
        assert_eq!(s.upper_length(g.order()), s.nilpotency_class, "{}", spec);
        assert_eq!(s.is_nilpotent(), g.is_nilpotent());
    }
}

#[test]
fn cayley_round_trip() {
    for (i, spec) in SPECS.iter().enumerate() {
        let g = group(i);
        let text = io::to_cayley_text(&g);
        let back = io::parse_group(&text, Limits::default()).unwrap();
        assert!(g.rows().eq(back.rows()), "{}", spec);
    }
}

#[test]
fn load_group_from_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("s3.txt");
    std::fs::write(&path, "# S3\nperm 3\n1 0 2\n1 2 0\n").unwrap();
    let g = io::load_group(&path, Limits::default()).unwrap();
    assert_eq!(g.order(), 6);
    assert_eq!(g.label(), Some("s3"));
    let trivial = dir.path().join("one.txt");
    std::fs::write(&trivial, "cayley 1\n0\n").unwrap();
    assert_eq!(io::load_group(&trivial, Limits::default()).unwrap().order(), 1);
    let bad = dir.path().join("bad.txt");
    std::fs::write(&bad, "cayley 2\n0 1\n1\n").unwrap();
    let err = io::load_group(&bad, Limits::default()).unwrap_err();
    assert!(matches!(err, cdlab_core::Error::Parse { line: 3, .. }), "{err}");
}

#[test]
fn trivial_group_lattice() {
    let g = named(&CatalogSpec::parse("cyclic:1").unwrap(), Limits::default()).unwrap();
    let a = Analysis::new(&g, 10).unwrap();
    let l = CdLattice::build(&a).unwrap();
    assert_eq!(l.mu, 1);
    assert_eq!(l.len(), 1);
    assert_eq!(l.top(), &Subgroup::trivial(&g));
}
