use std::collections::BTreeSet;

use dp1_core::intlin::determinant;
use dp1_core::lattice::{
    build_lattice, enumerate_roots, line_class_on_x, line_class_on_y, pair, BasisLabel, H2ClassX, H2ClassY,
    LatticeName,
};
use dp1_core::mod2::{reduce_mod2, strata_profile};
use dp1_core::types::{SexticType, SurfaceTopology};
use dp1_core::Error;

fn neg(m: &[Vec<i64>]) -> Vec<Vec<i64>> {
    m.iter().map(|r| r.iter().map(|x| -x).collect()).collect()
}

#[test]
fn eleven_types_biject_with_surfaces() {
    assert_eq!(SexticType::ALL.len(), 11);
    let surfaces: BTreeSet<String> = SexticType::ALL.iter().map(|s| s.surface().to_string()).collect();
    assert_eq!(surfaces.len(), 11);
    for s in SexticType::ALL {
        assert_eq!(s.surface().sextic(), s);
        assert_eq!(s.to_string().parse::<SexticType>().unwrap(), s);
        assert_eq!(s.surface().to_string().parse::<SurfaceTopology>().unwrap(), s.surface());
    }
}

#[test]
fn gram_shape_and_discriminants() {
    let expected = [
        (SexticType::PQ(4, 0), LatticeName::E8, 1),
        (SexticType::PQ(3, 0), LatticeName::E7, 2),
        (SexticType::PQ(2, 0), LatticeName::D6, 4),
        (SexticType::PQ(1, 0), LatticeName::D4A1, 8),
        (SexticType::PQ(1, 1), LatticeName::D4, 4),
        (SexticType::ThreeJ, LatticeName::D4, 4),
        (SexticType::PQ(0, 0), LatticeName::NA1(4), 16),
        (SexticType::PQ(0, 1), LatticeName::NA1(3), 8),
        (SexticType::PQ(0, 2), LatticeName::NA1(2), 4),
        (SexticType::PQ(0, 3), LatticeName::NA1(1), 2),
        (SexticType::PQ(0, 4), LatticeName::NA1(0), 1),
    ];
    for (s, name, disc) in expected {
        let l = build_lattice(s);
        assert_eq!(l.name, name, "{s}");
        assert_eq!(determinant(&neg(&l.gram)), disc, "{s}");
        assert!(l.is_negative_definite(), "{s}");
        for i in 0..l.rank {
            assert_eq!(l.gram[i][i], -2);
            for j in 0..l.rank {
                assert_eq!(l.gram[i][j], l.gram[j][i]);
                if i != j {
                    assert!(matches!(l.gram[i][j], 0 | 1));
                }
            }
        }
    }
}

#[test]
fn lattice_examples() {
    let e8 = build_lattice(SexticType::PQ(4, 0));
    assert_eq!(e8.rank, 8);
    let empty = build_lattice(SexticType::PQ(0, 4));
    assert_eq!(empty.rank, 0);
    assert!(empty.labels.is_empty());
    let j = build_lattice(SexticType::ThreeJ);
    assert_eq!(
        j.gram,
        vec![vec![-2, 1, 1, 1], vec![1, -2, 0, 0], vec![1, 0, -2, 0], vec![1, 0, 0, -2]]
    );
    assert_eq!(j.lower_ovals, Vec::<usize>::new());
    assert_eq!(e8.lower_ovals, vec![1, 3]);
    assert_eq!(build_lattice(SexticType::PQ(3, 0)).lower_ovals, vec![1, 2, 3]);
}

#[test]
fn root_counts() {
    assert_eq!(enumerate_roots(&build_lattice(SexticType::PQ(4, 0))).len(), 240);
    assert_eq!(enumerate_roots(&build_lattice(SexticType::PQ(1, 0))).len(), 26);
    assert_eq!(enumerate_roots(&build_lattice(SexticType::PQ(0, 3))), vec![vec![-1], vec![1]]);
    for s in SexticType::ALL {
        let l = build_lattice(s);
        let roots = enumerate_roots(&l);
        assert_eq!(roots.len(), 2 * strata_profile(&l).size_v1_minus_r1, "{s}");
        let set: BTreeSet<_> = roots.iter().cloned().collect();
        for e in &roots {
            for x in &roots {
                assert!(set.contains(&l.reflect(x, e)), "{s}: not reflection closed");
            }
        }
    }
}

#[test]
fn pairing_examples() {
    let e8 = build_lattice(SexticType::PQ(4, 0));
    let o1 = e8.oval(1).unwrap();
    let o2 = e8.oval(2).unwrap();
    let b12 = e8.basis_vector(1);
    assert_eq!(e8.labels[1].to_string(), "B12");
    assert_eq!(pair(&e8, &o1, &o1), Ok(-2));
    assert_eq!(pair(&e8, &o1, &b12), Ok(1));
    assert_eq!(pair(&e8, &o1, &o2), Ok(0));
    assert!(matches!(pair(&e8, &o1, &[1, 0]), Err(Error::Dimension { .. })));
    assert_eq!(e8.index_of(BasisLabel::Oval(4)), Some(6));
}

#[test]
fn line_classes_on_y() {
    let e8 = build_lattice(SexticType::PQ(4, 0));
    let o1 = e8.oval(1).unwrap();
    let l = line_class_on_y(&e8, &o1).unwrap();
    assert_eq!(l, H2ClassY { k: -1, w: o1.iter().map(|x| -x).collect() });
    let m = line_class_on_y(&e8, &o1.iter().map(|x| -x).collect::<Vec<_>>()).unwrap();
    assert_eq!(m.w, o1);
    assert_eq!(l.w.iter().zip(&m.w).map(|(a, b)| a + b).collect::<Vec<_>>(), vec![0; 8]);
    let k = H2ClassY::canonical(8);
    for e in enumerate_roots(&e8) {
        let c = line_class_on_y(&e8, &e).unwrap();
        assert_eq!(c.pairing(&e8, &c), -1);
        assert_eq!(c.pairing(&e8, &k), -1);
    }
    assert_eq!(line_class_on_y(&e8, &[1, 0, 1, 0, 0, 0, 0, 0]), Err(Error::NotRoot(-4)));
}

#[test]
fn line_classes_on_x() {
    let e8 = build_lattice(SexticType::PQ(4, 0));
    assert_eq!(line_class_on_x(&e8, &[0; 8]).unwrap(), H2ClassX::base_line(8));
    let o1 = e8.oval(1).unwrap();
    assert_eq!(line_class_on_x(&e8, &o1).unwrap(), H2ClassX { m: -1, w: o1, n: 1 });
    for v in enumerate_roots(&e8) {
        let x = line_class_on_x(&e8, &v).unwrap();
        assert_eq!(x.pairing(&e8, &x), -1, "{v:?}");
        assert_eq!(x.pairing(&e8, &H2ClassX::fiber(8)), 1);
    }
    let f = H2ClassX::fiber(8);
    let l = H2ClassX::base_line(8);
    assert_eq!((f.pairing(&e8, &f), f.pairing(&e8, &l), l.pairing(&e8, &l)), (0, 1, -1));
}

#[test]
fn root_residues_avoid_r1() {
    for s in SexticType::ALL {
        let l = build_lattice(s);
        for e in enumerate_roots(&l) {
            let v = reduce_mod2(&e);
            assert!(!v.is_zero(), "{s}");
        }
    }
}
