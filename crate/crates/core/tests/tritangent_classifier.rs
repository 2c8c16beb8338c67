use std::collections::{BTreeMap, BTreeSet};

use dp1_core::lattice::{build_lattice, root_pairs, BasisLabel, GeometricLattice};
use dp1_core::mod2::{all_vectors, mod2_pair, q0, radical_elements, reduce_mod2, Mod2Vector};
use dp1_core::tritangent::{
    boundary_delta, classify_root, code_census, code_of, enumerate_tritangents, oval_bridge_split, pair_census,
    three_j_grouping, type_counts, Code, Symbol, ThreeJGroup, TritangentType,
};
use dp1_core::types::SexticType;
use dp1_core::Error;

fn label_bit(l: &GeometricLattice, label: &str) -> Mod2Vector {
    let j = l.labels.iter().position(|x| x.to_string() == label).unwrap();
    Mod2Vector::unit(l.rank, j)
}

fn is_oval(l: &GeometricLattice, j: usize) -> bool {
    matches!(l.labels[j], BasisLabel::Oval(_))
}

fn with_ovals() -> Vec<SexticType> {
    SexticType::ALL.into_iter().filter(|s| s.ovals() > 0).collect()
}

#[test]
fn split_examples() {
    let e8 = build_lattice(SexticType::PQ(4, 0));
    let o1 = label_bit(&e8, "O1");
    let b12 = label_bit(&e8, "B12");
    let s = oval_bridge_split(&e8, o1).unwrap();
    assert_eq!((s.vo, s.vb), (o1, Mod2Vector::zero(8)));
    let s = oval_bridge_split(&e8, b12).unwrap();
    assert_eq!((s.vo, s.vb), (Mod2Vector::zero(8), b12));
    let s = oval_bridge_split(&e8, o1 + b12).unwrap();
    assert_eq!((s.vo, s.vb), (o1, b12));
    for t in [SexticType::ThreeJ, SexticType::PQ(0, 2)] {
        let l = build_lattice(t);
        assert!(matches!(oval_bridge_split(&l, Mod2Vector::zero(l.rank)), Err(Error::Unsupported(_))));
    }
}

#[test]
fn split_parts_are_isotropic() {
    for s in with_ovals() {
        let l = build_lattice(s);
        for v in all_vectors(l.rank) {
            let sp = oval_bridge_split(&l, v).unwrap();
            assert_eq!(sp.vo + sp.vb, v);
            for w in all_vectors(l.rank) {
                let sw = oval_bridge_split(&l, w).unwrap();
                assert_eq!(mod2_pair(&l, sp.vo, sw.vo), 0, "{s}");
                assert_eq!(mod2_pair(&l, sp.vb, sw.vb), 0, "{s}");
            }
        }
    }
}

#[test]
fn boundary_examples() {
    let e8 = build_lattice(SexticType::PQ(4, 0));
    let d = boundary_delta(&e8, label_bit(&e8, "B12")).unwrap();
    assert_eq!(d, label_bit(&e8, "O1") + label_bit(&e8, "O2"));
    assert_eq!(boundary_delta(&e8, label_bit(&e8, "B3")).unwrap(), label_bit(&e8, "O3"));
    assert!(boundary_delta(&e8, label_bit(&e8, "O1")).is_err());
}

#[test]
fn boundary_kernel_is_radical() {
    for s in with_ovals() {
        let l = build_lattice(s);
        let bridges: Vec<Mod2Vector> = all_vectors(l.rank)
            .filter(|v| (0..l.rank).all(|j| !v.get(j) || !is_oval(&l, j)))
            .collect();
        let ker: BTreeSet<Mod2Vector> =
            bridges.into_iter().filter(|&b| boundary_delta(&l, b).unwrap().is_zero()).collect();
        let r: BTreeSet<Mod2Vector> = radical_elements(&l).into_iter().collect();
        assert_eq!(ker, r, "{s}");
    }
}

#[test]
fn classify_examples() {
    let e8 = build_lattice(SexticType::PQ(4, 0));
    let t = classify_root(&e8, &e8.oval(1).unwrap()).unwrap();
    assert_eq!((t.s_in.clone(), t.s_tan.clone(), t.ttype), (vec![1], vec![], TritangentType::T0Star));
    let t = classify_root(&e8, &e8.basis_vector(1)).unwrap();
    assert_eq!((t.s_in.clone(), t.s_tan.clone(), t.ttype), (vec![], vec![1, 2], TritangentType::T2));
    // coefficients 0,0,1,2,3,2,1 on O1..O4 and bridges, 2 on B3
    let e = [0, 0, 1, 2, 3, 2, 1, 2];
    assert_eq!(e8.norm(&e), -2);
    let t = classify_root(&e8, &e).unwrap();
    assert_eq!((t.s_in.clone(), t.s_tan.clone(), t.ttype), (vec![2, 3, 4], vec![], TritangentType::T0));
    assert_eq!(code_of(&t, SexticType::PQ(4, 0)).unwrap().to_string(), "o u u u");
    let t = classify_root(&e8, &e8.oval(1).unwrap()).unwrap();
    assert_eq!(code_of(&t, SexticType::PQ(4, 0)).unwrap().to_string(), "C o o o");
    assert!(matches!(classify_root(&e8, &[2, 0, 0, 0, 0, 0, 0, 0]), Err(Error::NotRoot(-8))));
}

#[test]
fn type_totals() {
    let want = [
        (SexticType::PQ(4, 0), [4, 4, 32, 48, 32]),
        (SexticType::PQ(1, 1), [3, 1, 8, 0, 0]),
        (SexticType::PQ(0, 4), [0, 0, 0, 0, 0]),
        (SexticType::ThreeJ, [12, 0, 0, 0, 0]),
    ];
    for (s, counts) in want {
        assert_eq!(type_counts(&enumerate_tritangents(s)), counts, "{s}");
    }
    for s in SexticType::ALL {
        for t in enumerate_tritangents(s) {
            assert_eq!(t.s_tan.len(), t.ttype.index().saturating_sub(1), "{s}");
            if t.ttype == TritangentType::T0Star {
                assert!(t.s_tan.is_empty() && t.s_in.len() == 1);
            }
            assert!(t.s_in.iter().chain(&t.s_tan).all(|&i| (1..=s.ovals()).contains(&i)));
        }
    }
}

fn odd_parity(s_in: &[usize], s_tan: &[usize]) -> bool {
    let a = s_in.iter().filter(|i| !s_tan.contains(i)).count();
    let b = s_tan.iter().filter(|&&i| i == 1 || i == 3).count();
    (a + b) % 2 == 1
}

fn subsets(n: usize) -> Vec<Vec<usize>> {
    (0..1u32 << n).map(|m| (1..=n).filter(|i| m >> (i - 1) & 1 == 1).collect()).collect()
}

#[test]
fn parity_law_for_four_ovals() {
    let census = pair_census(SexticType::PQ(4, 0));
    for (s_in, s_tan) in census.keys() {
        assert!(odd_parity(s_in, s_tan), "{s_in:?} {s_tan:?}");
    }
    let mut expected = BTreeMap::new();
    for s1 in subsets(4) {
        for s2 in subsets(4) {
            if s2.len() < 4 && odd_parity(&s1, &s2) {
                expected.insert((s1.clone(), s2), 1);
            }
        }
    }
    assert_eq!(census, expected);
    let mut partners: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
    for (_, s2) in census.keys() {
        *partners.entry(s2.clone()).or_default() += 1;
    }
    assert_eq!(partners.len(), 15);
    assert!(partners.values().all(|&c| c == 8));
}

#[test]
fn pair_census_small() {
    let c2 = pair_census(SexticType::PQ(2, 0));
    assert!(!c2.contains_key(&(vec![], vec![])));
    assert!(c2.values().all(|&c| c == 2));
    assert_eq!(pair_census(SexticType::PQ(1, 0)).get(&(vec![], vec![])), Some(&1));
}

#[test]
fn q0_decomposition_and_bridge_parity() {
    for s in with_ovals() {
        let l = build_lattice(s);
        for v in all_vectors(l.rank) {
            let sp = oval_bridge_split(&l, v).unwrap();
            let rhs = (sp.vo.weight() + sp.vb.weight()) as u8 + mod2_pair(&l, sp.vo, sp.vb);
            assert_eq!(q0(&l, v), rhs % 2, "{s}: {v}");
        }
    }
    let e8 = build_lattice(SexticType::PQ(4, 0));
    for e in root_pairs(&e8) {
        let t = classify_root(&e8, &e).unwrap();
        let vb = oval_bridge_split(&e8, reduce_mod2(&e)).unwrap().vb;
        let lower = t.s_tan.iter().filter(|&&i| i == 1 || i == 3).count();
        assert_eq!(vb.weight() as usize % 2, lower % 2);
    }
}

#[test]
fn codes_are_injective_with_brackets() {
    for s in [SexticType::PQ(4, 0), SexticType::PQ(3, 0)] {
        let codes = code_census(s).unwrap();
        let distinct: BTreeSet<&Code> = codes.iter().collect();
        assert_eq!(distinct.len(), codes.len(), "{s}");
    }
    assert_eq!(code_census(SexticType::PQ(4, 0)).unwrap().len(), 120);
    assert_eq!(code_census(SexticType::PQ(3, 0)).unwrap().len(), 63);
}

#[test]
fn bracket_example() {
    let e8 = build_lattice(SexticType::PQ(4, 0));
    let t = enumerate_tritangents(SexticType::PQ(4, 0))
        .into_iter()
        .find(|t| t.s_tan == [1, 3] && t.s_in.iter().filter(|i| !t.s_tan.contains(i)).eq([2].iter()))
        .unwrap();
    let code = code_of(&classify_root(&e8, &t.root).unwrap(), SexticType::PQ(4, 0)).unwrap();
    // the arc from gap 1 to gap 2 holds oval 2
    assert_eq!(code.bracket, Some((1, 2)));
    assert!(matches!(code.symbols[1], Symbol::Under));
}

#[test]
fn one_one_codes() {
    let mut counts: BTreeMap<String, usize> = BTreeMap::new();
    for c in code_census(SexticType::PQ(1, 1)).unwrap() {
        *counts.entry(c.to_string()).or_default() += 1;
    }
    let want: BTreeMap<String, usize> =
        [("o", 3), ("C", 1), ("U", 4), ("O", 4)].into_iter().map(|(k, v)| (k.to_string(), v)).collect();
    assert_eq!(counts, want);
    assert!(matches!(code_census(SexticType::ThreeJ), Err(Error::Unsupported(_))));
}

#[test]
fn flipping_tangent_sides() {
    for s in with_ovals() {
        let codes: BTreeSet<Code> = code_census(s).unwrap().into_iter().collect();
        for c in &codes {
            for (i, sym) in c.symbols.iter().enumerate() {
                let other = match sym {
                    Symbol::UnderTan => Symbol::OverTan,
                    Symbol::OverTan => Symbol::UnderTan,
                    _ => continue,
                };
                let mut d = c.clone();
                d.symbols[i] = other;
                assert!(codes.contains(&d), "{s}: {c} without {d}");
            }
        }
    }
}

#[test]
fn code_text_round_trip() {
    let c: Code = "U U [2,0) u u".parse().unwrap();
    assert_eq!(c.bracket, Some((2, 0)));
    assert_eq!(c.to_string(), "U U [2,0) u u");
    assert!("u x".parse::<Code>().is_err());
    for s in with_ovals() {
        for c in code_census(s).unwrap() {
            assert_eq!(c.to_string().parse::<Code>().unwrap(), c);
        }
    }
}

#[test]
fn three_j_groups() {
    let g = three_j_grouping();
    assert_eq!(g.len(), 3);
    assert!(g.values().all(|v| v.len() == 4));
    let l = build_lattice(SexticType::ThreeJ);
    let b: Vec<Vec<i64>> = vec![vec![0, 1, 0, 0], vec![0, 0, 1, 0], vec![0, 0, 0, 1], vec![-2, -1, -1, -1]];
    for (group, roots) in &g {
        for e in roots {
            for bj in &b {
                let odd = l.dot(e, bj).rem_euclid(2) == 1;
                assert_eq!(odd, *group != ThreeJGroup::A, "{group}: {e:?}");
            }
        }
    }
    assert!(enumerate_tritangents(SexticType::ThreeJ)
        .iter()
        .all(|t| t.s_tan.is_empty() && t.ttype == TritangentType::T0));
}
