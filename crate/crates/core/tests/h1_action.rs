use std::collections::BTreeSet;

use dp1_core::h1::{
    action_matrix, apply_action, class_of_section, compose_matrices, count_line_classes, delta_of_section,
    line_class_witnesses, mw_sum, obstruction_kappa, section_realizable, vanishing_orbit, H1Class, H1Delta,
    LineClassCount,
};
use dp1_core::intlin::identity;
use dp1_core::mapping_class::{delta_bar, kk_swap, mods_identity, mods_mul, s, t_c, PhiMap};
use dp1_core::types::SurfaceTopology;
use dp1_core::Error;

fn handles(p: u8, q: u8) -> SurfaceTopology {
    SurfaceTopology::Handles { p, q }
}

#[test]
fn section_classes() {
    let k = handles(1, 0);
    assert_eq!(class_of_section(&mods_identity(k)).unwrap(), H1Class::base_line(1));
    assert_eq!(
        class_of_section(&s(k, 1).unwrap()).unwrap(),
        H1Class { kappa_bar: 1, pairs: vec![(-1, 0)], lambda: 1 }
    );
    assert_eq!(
        class_of_section(&delta_bar(k, 1).unwrap()).unwrap(),
        H1Class { kappa_bar: 0, pairs: vec![(0, 1)], lambda: 1 }
    );
    assert!(matches!(class_of_section(&kk_swap()), Err(Error::Unsupported(_))));
}

#[test]
fn matrices() {
    for p in 0..=4 {
        assert_eq!(action_matrix(&H1Delta::zero(p)).unwrap(), identity(2 * p + 2));
    }
    let m = action_matrix(&H1Delta { kappa_bar: 0, m: vec![1], kappa: vec![0] }).unwrap();
    assert_eq!(m, vec![vec![1, 0, 1, 0], vec![0, 1, -2, 1], vec![0, 0, 1, 0], vec![0, 0, 0, 1]]);
    let m = action_matrix(&H1Delta { kappa_bar: 1, m: vec![3], kappa: vec![1] }).unwrap();
    assert_eq!(m, vec![vec![1, 1, 1, 1], vec![0, -1, -6, 3], vec![0, 0, -1, 1], vec![0, 0, 0, 1]]);
    assert!(matches!(
        action_matrix(&H1Delta { kappa_bar: 0, m: vec![0], kappa: vec![2] }),
        Err(Error::Input(_))
    ));
}

#[test]
fn fiber_fixed_and_base_line_shifted() {
    let phi = PhiMap::new(handles(2, 0));
    for v in [[1, 0, 0, 0, 0, 0], [0, 1, 1, 0, 0, 2], [3, -1, 0, 2, 1, -1]] {
        let d = delta_of_section(&phi.apply(&v).unwrap()).unwrap();
        let m = action_matrix(&d).unwrap();
        assert_eq!(apply_action(&m, &H1Class::fiber(2)).unwrap(), H1Class::fiber(2));
        assert_eq!(apply_action(&m, &H1Class::base_line(2)).unwrap(), H1Class::from_delta(&d));
    }
}

#[test]
fn sums() {
    let d = H1Delta { kappa_bar: 1, m: vec![2, -1], kappa: vec![0, 1] };
    assert_eq!(mw_sum(&d, &H1Delta::zero(2)).unwrap(), d);
    let one = H1Delta { kappa_bar: 0, m: vec![0], kappa: vec![1] };
    assert_eq!(mw_sum(&one, &one).unwrap(), H1Delta::zero(1));
    let ds = [
        H1Delta { kappa_bar: 1, m: vec![1, 0], kappa: vec![1, 0] },
        H1Delta { kappa_bar: 0, m: vec![-2, 5], kappa: vec![0, 1] },
        H1Delta { kappa_bar: 1, m: vec![3, 3], kappa: vec![1, 1] },
    ];
    for a in &ds {
        for b in &ds {
            let via_matrix = apply_action(&action_matrix(a).unwrap(), &H1Class::from_delta(b)).unwrap();
            assert_eq!(H1Class::from_delta(&mw_sum(a, b).unwrap()), via_matrix);
        }
    }
}

#[test]
fn matrix_of_product_is_product_of_matrices() {
    let k = handles(3, 0);
    let phi = PhiMap::new(k);
    let vs = [[1, 0, 0, 0, 0, 0, 0], [0, 1, 0, 0, 2, 0, -1], [1, 1, 1, 1, 1, 1, 1], [0, -3, 2, 0, 0, 1, 0]];
    for v in &vs {
        for w in &vs {
            let (g, h) = (phi.apply(v).unwrap(), phi.apply(w).unwrap());
            let gh = mods_mul(k, &g, &h).unwrap();
            let mat = |x| action_matrix(&delta_of_section(x).unwrap()).unwrap();
            assert_eq!(mat(&gh), compose_matrices(&mat(&g), &mat(&h)));
            let sum = mw_sum(&delta_of_section(&g).unwrap(), &delta_of_section(&h).unwrap()).unwrap();
            assert_eq!(class_of_section(&gh).unwrap(), H1Class::from_delta(&sum));
        }
    }
}

#[test]
fn obstructions() {
    let k4 = handles(4, 0);
    assert_eq!(obstruction_kappa(k4, &[0; 4], &[0; 4]), Ok(0));
    assert_eq!(obstruction_kappa(k4, &[1, 0, 0, 0], &[0; 4]), Ok(1));
    for m in -3..=3 {
        assert_eq!(obstruction_kappa(handles(1, 1), &[m], &[1]), Ok(1));
    }
    assert!(matches!(obstruction_kappa(handles(2, 0), &[0, 0], &[0, 0]), Err(Error::Unsupported(_))));
}

#[test]
fn realizable_sections() {
    for surface in SurfaceTopology::all() {
        assert_eq!(section_realizable(surface, &mods_identity(surface)), Ok(true));
    }
    let kt = handles(1, 1);
    assert_eq!(section_realizable(kt, &t_c(kt, 1).unwrap()), Ok(false));
    let k2 = handles(2, 0);
    for i in 1..=2 {
        for g in [delta_bar(k2, i).unwrap(), t_c(k2, i).unwrap(), s(k2, i).unwrap()] {
            assert_eq!(section_realizable(k2, &g), Ok(true));
        }
    }
}

#[test]
fn line_class_counts() {
    assert_eq!(count_line_classes(SurfaceTopology::KleinKlein), LineClassCount::Finite(4));
    assert_eq!(count_line_classes(handles(0, 4)), LineClassCount::Finite(1));
    for q in 0..4 {
        assert_eq!(count_line_classes(handles(0, q)), LineClassCount::Finite(2));
    }
    for (p, q) in [(1, 0), (1, 1), (2, 0), (3, 0), (4, 0)] {
        assert_eq!(count_line_classes(handles(p, q)), LineClassCount::Infinite);
    }
    let w = line_class_witnesses(handles(1, 0), 100).unwrap();
    assert_eq!(w.iter().collect::<BTreeSet<_>>().len(), 100);
    assert!(w.iter().all(|c| c.lambda == 1));
}

#[test]
fn vanishing_classes() {
    let k = handles(2, 0);
    assert_eq!(vanishing_orbit(k, 1, 0).unwrap(), H1Class { kappa_bar: 0, pairs: vec![(0, 1), (0, 0)], lambda: 0 });
    assert_eq!(vanishing_orbit(k, 2, 1).unwrap(), H1Class { kappa_bar: 1, pairs: vec![(0, 0), (-2, 1)], lambda: 0 });
    let all: BTreeSet<H1Class> = (0..100).map(|n| vanishing_orbit(k, 1, n).unwrap()).collect();
    assert_eq!(all.len(), 100);
    assert!(matches!(vanishing_orbit(handles(0, 2), 1, 0), Err(Error::Unsupported(_))));
}
