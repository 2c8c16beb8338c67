use std::collections::BTreeMap;

use dp1_core::lattice::{build_lattice, enumerate_roots, GeometricLattice};
use dp1_core::mod2::{
    all_vectors, in_radical, lift_to_root, mod2_pair, q0, q_on_r, radical, radical_elements, reduce_mod2,
    strata_profile, Mod2Vector,
};
use dp1_core::types::SexticType;
use dp1_core::Error;

fn unit(l: &GeometricLattice, j: usize) -> Mod2Vector {
    Mod2Vector::unit(l.rank, j)
}

#[test]
fn reduction() {
    let e8 = build_lattice(SexticType::PQ(4, 0));
    let o1 = e8.oval(1).unwrap();
    assert!(reduce_mod2(&o1.iter().map(|x| 2 * x).collect::<Vec<_>>()).is_zero());
    assert_eq!(reduce_mod2(&o1), unit(&e8, 0));
    assert_eq!(reduce_mod2(&[-3, 4, 1]).coords(), vec![1, 0, 1]);
}

#[test]
fn e7_seven_chain_residue() {
    let e7 = build_lattice(SexticType::PQ(3, 0));
    let chain = [1, 2, 3, 4, 3, 2, 2];
    assert_eq!(e7.norm(&chain), -2);
    let v = reduce_mod2(&chain);
    assert_eq!(v.coords(), vec![1, 0, 1, 0, 1, 0, 0]);
    // a root residue lies in V1∖R1, and for E7 the only nonzero radical class is in R1
    assert_eq!(q0(&e7, v), 1);
    assert!(!in_radical(&e7, v));
}

#[test]
fn pairing_and_radical() {
    let e8 = build_lattice(SexticType::PQ(4, 0));
    assert_eq!(mod2_pair(&e8, unit(&e8, 0), unit(&e8, 1)), 1);
    assert_eq!(mod2_pair(&e8, unit(&e8, 0), unit(&e8, 0)), 0);
    let dims = [
        (SexticType::PQ(4, 0), 0),
        (SexticType::PQ(3, 0), 1),
        (SexticType::PQ(2, 0), 2),
        (SexticType::PQ(1, 0), 3),
        (SexticType::PQ(1, 1), 2),
        (SexticType::ThreeJ, 2),
        (SexticType::PQ(0, 0), 4),
        (SexticType::PQ(0, 1), 3),
        (SexticType::PQ(0, 2), 2),
        (SexticType::PQ(0, 3), 1),
        (SexticType::PQ(0, 4), 0),
    ];
    for (s, d) in dims {
        let l = build_lattice(s);
        assert_eq!(radical(&l).len(), d, "{s}");
        for r in radical_elements(&l) {
            for x in all_vectors(l.rank) {
                assert_eq!(mod2_pair(&l, r, x), 0);
            }
        }
    }
    let a4 = build_lattice(SexticType::PQ(0, 0));
    assert_eq!(radical_elements(&a4).len(), 16);
}

#[test]
fn quadratic_forms() {
    let e8 = build_lattice(SexticType::PQ(4, 0));
    assert_eq!(q0(&e8, unit(&e8, 0)), 1);
    assert_eq!(q0(&e8, Mod2Vector::zero(8)), 0);
    assert_eq!(q0(&e8, unit(&e8, 0) + unit(&e8, 2)), 0);

    let e7 = build_lattice(SexticType::PQ(3, 0));
    let r = radical(&e7)[0];
    assert_eq!(q_on_r(&e7, r), Ok(1));
    assert_eq!(q_on_r(&e7, Mod2Vector::zero(7)), Ok(0));
    assert_eq!(q_on_r(&e7, unit(&e7, 0)), Err(Error::NotInRadical));

    let d4 = build_lattice(SexticType::PQ(1, 1));
    for r in radical_elements(&d4) {
        assert!(matches!(q_on_r(&d4, r), Ok(0 | 2)));
    }
}

#[test]
fn strata() {
    let cases = [
        (SexticType::PQ(4, 0), (256, 1, 120, 0, 120)),
        (SexticType::PQ(2, 0), (64, 4, 32, 2, 30)),
        (SexticType::PQ(0, 0), (16, 16, 8, 4, 4)),
    ];
    for (s, want) in cases {
        let p = strata_profile(&build_lattice(s));
        assert_eq!((p.size_v, p.size_r, p.size_v1, p.size_r1, p.size_v1_minus_r1), want, "{s}");
    }
    for s in SexticType::ALL {
        let l = build_lattice(s);
        let p = strata_profile(&l);
        assert_eq!(p.size_v, 1 << l.rank);
        assert_eq!(p.r_counts.iter().sum::<usize>(), p.size_r);
        if let SexticType::PQ(a, b) = s {
            if (a == 0 || b == 0) && a.max(b) <= 3 {
                let [r0, r1, r2, r3] = p.r_counts;
                assert_eq!(r1 + r3, p.size_r / 2, "{s}");
                assert_eq!(r0 + r2, p.size_r / 2, "{s}");
            }
        }
    }
}

#[test]
fn lifting() {
    let e8 = build_lattice(SexticType::PQ(4, 0));
    let o1 = e8.oval(1).unwrap();
    assert_eq!(lift_to_root(&e8, unit(&e8, 0)), Ok(o1));
    assert_eq!(lift_to_root(&e8, Mod2Vector::zero(8)), Err(Error::NotInV1));
    let e7 = build_lattice(SexticType::PQ(3, 0));
    assert_eq!(lift_to_root(&e7, radical(&e7)[0]), Err(Error::InR1));
}

#[test]
fn root_residues_cover_v1_minus_r1_twice() {
    for s in SexticType::ALL {
        let l = build_lattice(s);
        let mut seen: BTreeMap<Mod2Vector, usize> = BTreeMap::new();
        for e in enumerate_roots(&l) {
            *seen.entry(reduce_mod2(&e)).or_default() += 1;
        }
        let mut expected = 0;
        for v in all_vectors(l.rank) {
            let in_r1 = in_radical(&l, v) && q_on_r(&l, v) == Ok(1);
            if q0(&l, v) == 1 && !in_r1 {
                expected += 1;
                assert_eq!(seen.get(&v), Some(&2), "{s}: {v}");
                let e = lift_to_root(&l, v).unwrap();
                assert_eq!(reduce_mod2(&e), v);
                assert!(e > e.iter().map(|x| -x).collect::<Vec<_>>());
            }
        }
        assert_eq!(seen.len(), expected, "{s}");
    }
}
