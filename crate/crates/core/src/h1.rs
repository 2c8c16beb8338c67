//! Integral `H_1(X_ℝ)` in the basis `([F_ℝ], b_1, o_1, …, b_p, o_p, [L_ℝ])`
//! and the action of real Mordell–Weil translations on it.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::intlin::Mat;
use crate::mapping_class::{self, ModSElement, PhiMap};
use crate::types::SurfaceTopology;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct H1Class {
    pub kappa_bar: u8,
    /// `(m_i, k_i)`: coefficients on `b_i` and `o_i`.
    pub pairs: Vec<(i64, i64)>,
    pub lambda: i64,
}

/// `[L′_ℝ] − [L_ℝ]` for two real lines.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct H1Delta {
    pub kappa_bar: u8,
    pub m: Vec<i64>,
    pub kappa: Vec<u8>,
}

impl H1Delta {
    pub fn zero(p: usize) -> Self {
        H1Delta { kappa_bar: 0, m: vec![0; p], kappa: vec![0; p] }
    }

    pub fn handles(&self) -> usize {
        self.m.len()
    }

    fn check(&self) -> Result<()> {
        if self.kappa.len() != self.m.len() {
            return Err(Error::Dimension { expected: self.m.len(), got: self.kappa.len() });
        }
        if self.kappa_bar > 1 || self.kappa.iter().any(|&k| k > 1) {
            return Err(Error::Input("kappa entries must be 0 or 1".into()));
        }
        Ok(())
    }
}

impl H1Class {
    pub fn base_line(p: usize) -> Self {
        H1Class { kappa_bar: 0, pairs: vec![(0, 0); p], lambda: 1 }
    }

    pub fn fiber(p: usize) -> Self {
        H1Class { kappa_bar: 1, pairs: vec![(0, 0); p], lambda: 0 }
    }

    pub fn from_delta(d: &H1Delta) -> Self {
        H1Class {
            kappa_bar: d.kappa_bar,
            pairs: d.m.iter().zip(&d.kappa).map(|(&m, &k)| (m, i64::from(k))).collect(),
            lambda: 1,
        }
    }

    /// Coordinates in the basis order.
    pub fn coords(&self) -> Vec<i64> {
        let mut v = vec![i64::from(self.kappa_bar)];
        for &(m, k) in &self.pairs {
            v.push(m);
            v.push(k);
        }
        v.push(self.lambda);
        v
    }

    pub fn from_coords(c: &[i64]) -> Result<Self> {
        if c.len() < 2 || c.len() % 2 != 0 {
            return Err(Error::Input(format!("{} coordinates do not describe an H1 class", c.len())));
        }
        let l = c.len();
        Ok(H1Class {
            kappa_bar: c[0].rem_euclid(2) as u8,
            pairs: c[1..l - 1].chunks(2).map(|w| (w[0], w[1])).collect(),
            lambda: c[l - 1],
        })
    }
}

impl std::fmt::Display for H1Class {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}F", self.kappa_bar)?;
        for (i, (m, k)) in self.pairs.iter().enumerate() {
            write!(f, " {m:+}b{} {k:+}o{}", i + 1, i + 1)?;
        }
        write!(f, " {:+}L", self.lambda)
    }
}

fn sign(k: u8) -> i64 {
    if k == 0 {
        1
    } else {
        -1
    }
}

/// `[g(L)_ℝ] − [L_ℝ]` read off the normal form of `g`.
pub fn delta_of_section(g: &ModSElement) -> Result<H1Delta> {
    match g {
        ModSElement::Handles { kappa, n, m } => {
            let free: i64 = m.iter().zip(kappa).map(|(&mi, &k)| mi * (1 - i64::from(k))).sum();
            let kappa_bar = (n.iter().sum::<i64>() + free).rem_euclid(2) as u8;
            Ok(H1Delta {
                kappa_bar,
                m: m.iter().zip(kappa).map(|(&mi, &k)| -sign(k) * mi).collect(),
                kappa: kappa.clone(),
            })
        }
        ModSElement::Sphere { t } => Ok(H1Delta { kappa_bar: *t, m: vec![], kappa: vec![] }),
        ModSElement::KleinKlein { .. } => Err(Error::Unsupported("K+K has no handle decomposition".into())),
    }
}

pub fn class_of_section(g: &ModSElement) -> Result<H1Class> {
    Ok(H1Class::from_delta(&delta_of_section(g)?))
}

/// `(2p+2)×(2p+2)` matrix; entry `[i][j]` is the `i`-th coordinate of the
/// image of the `j`-th basis class. Row 0 is read mod 2.
pub fn action_matrix(d: &H1Delta) -> Result<Mat> {
    d.check()?;
    let p = d.handles();
    let n = 2 * p + 2;
    let mut a = vec![vec![0; n]; n];
    a[0][0] = 1;
    a[0][n - 1] = i64::from(d.kappa_bar);
    a[n - 1][n - 1] = 1;
    for i in 0..p {
        let (b, o) = (2 * i + 1, 2 * i + 2);
        let (k, m) = (d.kappa[i], d.m[i]);
        a[0][b] = i64::from(k);
        a[0][o] = m.rem_euclid(2);
        a[b][b] = sign(k);
        a[b][o] = -2 * m;
        a[b][n - 1] = m;
        a[o][o] = sign(k);
        a[o][n - 1] = i64::from(k);
    }
    Ok(a)
}

/// Product of two action matrices, first row reduced mod 2.
pub fn compose_matrices(a: &[Vec<i64>], b: &[Vec<i64>]) -> Mat {
    let mut c = crate::intlin::mat_mul(a, b);
    for x in &mut c[0] {
        *x = x.rem_euclid(2);
    }
    c
}

pub fn apply_action(a: &[Vec<i64>], x: &H1Class) -> Result<H1Class> {
    let c = x.coords();
    if c.len() != a.len() {
        return Err(Error::Dimension { expected: a.len(), got: c.len() });
    }
    H1Class::from_coords(&crate::intlin::mat_vec(a, &c))
}

/// Group law on deltas: per handle, the product of the triangular matrices
/// `((−1)^κ, m; 0, (−1)^κ)`.
pub fn mw_sum(d1: &H1Delta, d2: &H1Delta) -> Result<H1Delta> {
    d1.check()?;
    d2.check()?;
    if d1.handles() != d2.handles() {
        return Err(Error::Dimension { expected: d1.handles(), got: d2.handles() });
    }
    let mut kappa_bar = i64::from(d1.kappa_bar) + i64::from(d2.kappa_bar);
    let mut m = Vec::with_capacity(d1.handles());
    let mut kappa = Vec::with_capacity(d1.handles());
    for i in 0..d1.handles() {
        let (k1, k2) = (d1.kappa[i], d2.kappa[i]);
        let (m1, m2) = (d1.m[i], d2.m[i]);
        m.push(sign(k1) * m2 + sign(k2) * m1);
        kappa.push(k1 ^ k2);
        kappa_bar += i64::from(k1) * m2 + i64::from(k2) * m1;
    }
    Ok(H1Delta { kappa_bar: kappa_bar.rem_euclid(2) as u8, m, kappa })
}

/// The value of `κ̄` forced on a class realized by a real line.
pub fn obstruction_kappa(surface: SurfaceTopology, m: &[i64], kappa: &[u8]) -> Result<u8> {
    let want = match surface {
        SurfaceTopology::Handles { p: 4, q: 0 } => 4,
        SurfaceTopology::Handles { p: 1, q: 1 } => 1,
        s => return Err(Error::Unsupported(format!("no line obstruction on {s}"))),
    };
    if m.len() != want {
        return Err(Error::Dimension { expected: want, got: m.len() });
    }
    if kappa.len() != want {
        return Err(Error::Dimension { expected: want, got: kappa.len() });
    }
    let k = |i: usize| i64::from(kappa[i]);
    let v = if want == 4 {
        m[0] + m[2] + (0..4).map(|i| m[i] * k(i) + k(i)).sum::<i64>()
    } else {
        m[0] + m[0] * k(0) + k(0)
    };
    Ok(v.rem_euclid(2) as u8)
}

pub fn section_realizable(surface: SurfaceTopology, g: &ModSElement) -> Result<bool> {
    mapping_class::in_image(surface, g)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum LineClassCount {
    Finite(u64),
    Infinite,
}

impl std::fmt::Display for LineClassCount {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            LineClassCount::Finite(n) => write!(f, "{n}"),
            LineClassCount::Infinite => write!(f, "inf"),
        }
    }
}

/// Number of classes `[L_ℝ]` realized by real lines: the orbit of the base
/// line under `im Φ`.
pub fn count_line_classes(surface: SurfaceTopology) -> LineClassCount {
    let image = PhiMap::new(surface).analysis().image;
    match image.order() {
        Some(n) => LineClassCount::Finite(n as u64),
        None => LineClassCount::Infinite,
    }
}

/// Classes `[L_ℝ] + n·a_1`, realized by `Φ(n·v)` with `Φ(v) = s_1`.
pub fn line_class_witnesses(surface: SurfaceTopology, count: usize) -> Result<Vec<H1Class>> {
    let phi = PhiMap::new(surface);
    let s1 = mapping_class::s(surface, 1)?;
    let v = phi
        .preimage(&s1)?
        .ok_or_else(|| Error::Unsupported(format!("s_1 not realized on {surface}")))?;
    (0..count as i64)
        .map(|n| {
            let w: Vec<i64> = v.iter().map(|x| n * x).collect();
            class_of_section(&phi.apply(&w)?)
        })
        .collect()
}

/// `o_i + n(a_i − b_i)` with `a_i = [F_ℝ] − b_i`.
pub fn vanishing_orbit(surface: SurfaceTopology, i: usize, n: i64) -> Result<H1Class> {
    let p = match surface {
        SurfaceTopology::Handles { p, .. } if p > 0 => p as usize,
        s => return Err(Error::Unsupported(format!("no handles on {s}"))),
    };
    if !(1..=p).contains(&i) {
        return Err(Error::Input(format!("handle index {i} outside 1..={p}")));
    }
    let mut pairs = vec![(0, 0); p];
    pairs[i - 1] = (-2 * n, 1);
    Ok(H1Class { kappa_bar: n.rem_euclid(2) as u8, pairs, lambda: 0 })
}
