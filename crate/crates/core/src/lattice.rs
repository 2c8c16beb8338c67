//! Geometric root lattices Λ with their oval/bridge bases, root enumeration and
//! the ambient homology lattices H2(Y), H2(X).

use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::intlin;
use crate::types::SexticType;

pub type LatticeVector = Vec<i64>;

/// Bridge-classes of the geometric basis.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Bridge {
    /// `B_{i,i+1}` joining ovals `i` and `i+1`.
    Link(usize),
    /// `B_i`, `B_i′`, `B_i″` hanging off oval `i`; `primes` counts the primes.
    Pendant { oval: usize, primes: u8 },
    /// `B_{11}`, orthogonal to everything else.
    Detached,
    /// `B_0` of the three-J type.
    Center,
    /// `B_i`, i = 1..3, of the three-J type.
    Leg(usize),
    /// `B_i` of the `⟨0|q⟩` types.
    Free(usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum BasisLabel {
    Oval(usize),
    Bridge(Bridge),
}

impl fmt::Display for BasisLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            BasisLabel::Oval(i) => write!(f, "O{i}"),
            BasisLabel::Bridge(Bridge::Link(i)) => write!(f, "B{}{}", i, i + 1),
            BasisLabel::Bridge(Bridge::Pendant { oval, primes }) => {
                write!(f, "B{oval}{}", "'".repeat(primes as usize))
            }
            BasisLabel::Bridge(Bridge::Detached) => write!(f, "B11"),
            BasisLabel::Bridge(Bridge::Center) => write!(f, "B0"),
            BasisLabel::Bridge(Bridge::Leg(i)) | BasisLabel::Bridge(Bridge::Free(i)) => {
                write!(f, "B{i}")
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum LatticeName {
    E8,
    E7,
    D6,
    D4A1,
    D4,
    NA1(usize),
}

impl fmt::Display for LatticeName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LatticeName::E8 => write!(f, "E8"),
            LatticeName::E7 => write!(f, "E7"),
            LatticeName::D6 => write!(f, "D6"),
            LatticeName::D4A1 => write!(f, "D4+A1"),
            LatticeName::D4 => write!(f, "D4"),
            LatticeName::NA1(0) => write!(f, "0"),
            LatticeName::NA1(1) => write!(f, "A1"),
            LatticeName::NA1(n) => write!(f, "{n}A1"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeometricLattice {
    pub sextic: SexticType,
    pub name: LatticeName,
    pub rank: usize,
    pub gram: Vec<Vec<i64>>,
    pub labels: Vec<BasisLabel>,
    /// Ovals (1-based) lying below the J-component; `{1,3}` for `⟨4|0⟩`.
    pub lower_ovals: Vec<usize>,
}

fn pendant(oval: usize, primes: u8) -> BasisLabel {
    BasisLabel::Bridge(Bridge::Pendant { oval, primes })
}

fn link(i: usize) -> BasisLabel {
    BasisLabel::Bridge(Bridge::Link(i))
}

pub fn build_lattice(sextic: SexticType) -> GeometricLattice {
    use BasisLabel::Oval;
    let (name, labels, edges): (LatticeName, Vec<BasisLabel>, Vec<(usize, usize)>) = match sextic {
        SexticType::PQ(4, 0) => (
            LatticeName::E8,
            vec![Oval(1), link(1), Oval(2), link(2), Oval(3), link(3), Oval(4), pendant(3, 0)],
            vec![(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (4, 7)],
        ),
        SexticType::PQ(3, 0) => (
            LatticeName::E7,
            vec![pendant(1, 0), Oval(1), link(1), Oval(2), link(2), Oval(3), pendant(2, 0)],
            vec![(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (3, 6)],
        ),
        SexticType::PQ(2, 0) => (
            LatticeName::D6,
            vec![pendant(1, 0), Oval(1), link(1), Oval(2), pendant(2, 0), pendant(2, 1)],
            vec![(0, 1), (1, 2), (2, 3), (3, 4), (3, 5)],
        ),
        SexticType::PQ(1, 0) => (
            LatticeName::D4A1,
            vec![
                pendant(1, 0),
                Oval(1),
                pendant(1, 1),
                pendant(1, 2),
                BasisLabel::Bridge(Bridge::Detached),
            ],
            vec![(0, 1), (1, 2), (1, 3)],
        ),
        SexticType::PQ(1, 1) => (
            LatticeName::D4,
            vec![Oval(1), pendant(1, 0), pendant(1, 1), pendant(1, 2)],
            vec![(0, 1), (0, 2), (0, 3)],
        ),
        SexticType::ThreeJ => (
            LatticeName::D4,
            vec![
                BasisLabel::Bridge(Bridge::Center),
                BasisLabel::Bridge(Bridge::Leg(1)),
                BasisLabel::Bridge(Bridge::Leg(2)),
                BasisLabel::Bridge(Bridge::Leg(3)),
            ],
            vec![(0, 1), (0, 2), (0, 3)],
        ),
        SexticType::PQ(0, q) => {
            let n = 4 - q as usize;
            (
                LatticeName::NA1(n),
                (1..=n).map(|i| BasisLabel::Bridge(Bridge::Free(i))).collect(),
                vec![],
            )
        }
        SexticType::PQ(p, q) => unreachable!("no sextic type <{p}|{q}>"),
    };
    let rank = labels.len();
    let mut gram = vec![vec![0; rank]; rank];
    for (i, row) in gram.iter_mut().enumerate() {
        row[i] = -2;
    }
    for (a, b) in edges {
        gram[a][b] = 1;
        gram[b][a] = 1;
    }
    let lower_ovals = match sextic {
        SexticType::PQ(4, 0) => vec![1, 3],
        t => (1..=t.ovals()).collect(),
    };
    GeometricLattice { sextic, name, rank, gram, labels, lower_ovals }
}

impl GeometricLattice {
    /// Index of a basis element by label.
    pub fn index_of(&self, label: BasisLabel) -> Option<usize> {
        self.labels.iter().position(|&l| l == label)
    }

    pub fn basis_vector(&self, i: usize) -> LatticeVector {
        let mut v = vec![0; self.rank];
        v[i] = 1;
        v
    }

    pub fn oval(&self, i: usize) -> Option<LatticeVector> {
        self.index_of(BasisLabel::Oval(i)).map(|k| self.basis_vector(k))
    }

    /// Gram form without dimension checks.
    pub fn dot(&self, v: &[i64], w: &[i64]) -> i64 {
        let mut s = 0;
        for (i, row) in self.gram.iter().enumerate() {
            if v[i] == 0 {
                continue;
            }
            let t: i64 = row.iter().zip(w).map(|(g, x)| g * x).sum();
            s += v[i] * t;
        }
        s
    }

    pub fn norm(&self, v: &[i64]) -> i64 {
        self.dot(v, v)
    }

    pub fn check_dim(&self, v: &[i64]) -> Result<()> {
        if v.len() == self.rank {
            Ok(())
        } else {
            Err(Error::Dimension { expected: self.rank, got: v.len() })
        }
    }

    pub fn is_root(&self, v: &[i64]) -> bool {
        v.len() == self.rank && self.norm(v) == -2
    }

    /// `|det(−gram)|`
    pub fn discriminant(&self) -> i64 {
        let neg: Vec<Vec<i64>> = self.gram.iter().map(|r| r.iter().map(|x| -x).collect()).collect();
        intlin::determinant(&neg).abs()
    }

    /// Reflection `s_e(x) = x + (x·e) e` in a root `e`.
    pub fn reflect(&self, x: &[i64], e: &[i64]) -> LatticeVector {
        let c = self.dot(x, e);
        x.iter().zip(e).map(|(a, b)| a + c * b).collect()
    }

    /// Leading principal minors of `−gram` are all positive.
    pub fn is_negative_definite(&self) -> bool {
        (1..=self.rank).all(|k| {
            let m: Vec<Vec<i64>> = (0..k).map(|i| (0..k).map(|j| -self.gram[i][j]).collect()).collect();
            intlin::determinant(&m) > 0
        })
    }
}

pub fn pair(lattice: &GeometricLattice, v: &[i64], w: &[i64]) -> Result<i64> {
    lattice.check_dim(v)?;
    lattice.check_dim(w)?;
    Ok(lattice.dot(v, w))
}

/// All roots, sorted lexicographically; the orbit of the basis under the
/// simple reflections.
pub fn enumerate_roots(lattice: &GeometricLattice) -> Vec<LatticeVector> {
    let basis: Vec<LatticeVector> = (0..lattice.rank).map(|i| lattice.basis_vector(i)).collect();
    let mut seen: HashSet<LatticeVector> = HashSet::new();
    let mut stack: Vec<LatticeVector> = Vec::new();
    for b in &basis {
        let neg: LatticeVector = b.iter().map(|x| -x).collect();
        for v in [b.clone(), neg] {
            if seen.insert(v.clone()) {
                stack.push(v);
            }
        }
    }
    while let Some(x) = stack.pop() {
        for e in &basis {
            let y = lattice.reflect(&x, e);
            if !seen.contains(&y) {
                seen.insert(y.clone());
                stack.push(y);
            }
        }
    }
    let mut roots: Vec<LatticeVector> = seen.into_iter().collect();
    roots.sort();
    roots
}

/// The lexicographically larger of `v` and `−v`.
pub fn canonical_sign(v: &[i64]) -> LatticeVector {
    let neg: LatticeVector = v.iter().map(|x| -x).collect();
    if neg.as_slice() > v {
        neg
    } else {
        v.to_vec()
    }
}

/// One representative per `±` pair, in canonical sign, sorted.
pub fn root_pairs(lattice: &GeometricLattice) -> Vec<LatticeVector> {
    let mut reps: Vec<LatticeVector> = enumerate_roots(lattice)
        .into_iter()
        .filter(|r| canonical_sign(r) == *r)
        .collect();
    reps.sort();
    reps
}

/// All lattice vectors with `v² ≥ min_norm` (`min_norm ≤ 0`), by Fincke–Pohst
/// enumeration on the positive definite form `−gram`.
pub fn short_vectors(lattice: &GeometricLattice, min_norm: i64) -> Vec<LatticeVector> {
    let n = lattice.rank;
    let bound = -min_norm;
    if n == 0 {
        return vec![vec![]];
    }
    let mut q: Vec<Vec<f64>> = lattice
        .gram
        .iter()
        .map(|r| r.iter().map(|&x| -x as f64).collect())
        .collect();
    for i in 0..n {
        for j in i + 1..n {
            q[j][i] = q[i][j];
            q[i][j] /= q[i][i];
        }
        for k in i + 1..n {
            for l in k..n {
                q[k][l] -= q[k][i] * q[i][l];
            }
        }
    }
    let mut out = Vec::new();
    let mut x = vec![0i64; n];
    fn rec(
        i: usize,
        rest: f64,
        q: &[Vec<f64>],
        x: &mut Vec<i64>,
        out: &mut Vec<LatticeVector>,
        lattice: &GeometricLattice,
        bound: i64,
    ) {
        let n = q.len();
        let center: f64 = -(i + 1..n).map(|j| q[i][j] * x[j] as f64).sum::<f64>();
        let radius = (rest.max(0.0) / q[i][i]).sqrt() + 1e-9;
        let lo = (center - radius).ceil() as i64;
        let hi = (center + radius).floor() as i64;
        for xi in lo..=hi {
            x[i] = xi;
            let d = xi as f64 - center;
            let used = q[i][i] * d * d;
            if used > rest + 1e-9 {
                continue;
            }
            if i == 0 {
                if -lattice.norm(x) <= bound {
                    out.push(x.clone());
                }
            } else {
                rec(i - 1, rest - used, q, x, out, lattice, bound);
            }
        }
        x[i] = 0;
    }
    rec(n - 1, bound as f64, &q, &mut x, &mut out, lattice, bound);
    out.sort();
    out
}

/// Class in `H2(Y) = ℤK_Y ⊕ K_Y^⊥`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct H2ClassY {
    pub k: i64,
    pub w: LatticeVector,
}

impl H2ClassY {
    pub fn canonical(rank: usize) -> Self {
        H2ClassY { k: 1, w: vec![0; rank] }
    }

    pub fn pairing(&self, lattice: &GeometricLattice, other: &H2ClassY) -> i64 {
        self.k * other.k + lattice.dot(&self.w, &other.w)
    }
}

/// Class `m·K_X + w + n·L` in `H2(X) = ⟨F⟩ ⊕ W_L ⊕ ⟨L⟩`, with `K_X = −F`.
///
/// The first coordinate multiplies `K_X`, so the fiber is `(−1, 0, 0)` and
/// `L_w = (w²/2, w, 1)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct H2ClassX {
    pub m: i64,
    pub w: LatticeVector,
    pub n: i64,
}

impl H2ClassX {
    pub fn fiber(rank: usize) -> Self {
        H2ClassX { m: -1, w: vec![0; rank], n: 0 }
    }

    pub fn base_line(rank: usize) -> Self {
        H2ClassX { m: 0, w: vec![0; rank], n: 1 }
    }

    /// `K² = 0`, `K·L = −1`, `L² = −1`, `W_L ⟂ K, L`.
    pub fn pairing(&self, lattice: &GeometricLattice, o: &H2ClassX) -> i64 {
        -(self.m * o.n + self.n * o.m) - self.n * o.n + lattice.dot(&self.w, &o.w)
    }
}

/// `L_e = −K_Y − e`.
pub fn line_class_on_y(lattice: &GeometricLattice, e: &[i64]) -> Result<H2ClassY> {
    lattice.check_dim(e)?;
    let n = lattice.norm(e);
    if n != -2 {
        return Err(Error::NotRoot(n));
    }
    Ok(H2ClassY { k: -1, w: e.iter().map(|x| -x).collect() })
}

/// `L_v = L + (v²/2) K_X + v`.
pub fn line_class_on_x(lattice: &GeometricLattice, v: &[i64]) -> Result<H2ClassX> {
    lattice.check_dim(v)?;
    Ok(H2ClassX { m: lattice.norm(v) / 2, w: v.to_vec(), n: 1 })
}
