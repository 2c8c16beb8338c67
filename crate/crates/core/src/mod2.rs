//! `V = Λ/2Λ`, its radical `R`, the forms `q0` (mod 2) and `q` (mod 4 on `R`).

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{canonical_sign, enumerate_roots, GeometricLattice, LatticeVector};

/// Residue in `V`; bit `j` is the coordinate on basis element `j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Mod2Vector {
    pub bits: u16,
    pub rank: u8,
}

impl Mod2Vector {
    pub fn zero(rank: usize) -> Self {
        Mod2Vector { bits: 0, rank: rank as u8 }
    }

    pub fn unit(rank: usize, j: usize) -> Self {
        Mod2Vector { bits: 1 << j, rank: rank as u8 }
    }

    pub fn from_bits(rank: usize, bits: u16) -> Self {
        Mod2Vector { bits: bits & mask(rank), rank: rank as u8 }
    }

    pub fn from_slice(bits: &[u8]) -> Self {
        let b = bits.iter().enumerate().fold(0u16, |acc, (j, &x)| acc | (u16::from(x & 1) << j));
        Mod2Vector { bits: b, rank: bits.len() as u8 }
    }

    pub fn is_zero(self) -> bool {
        self.bits == 0
    }

    pub fn get(self, j: usize) -> bool {
        self.bits >> j & 1 == 1
    }

    pub fn weight(self) -> u32 {
        self.bits.count_ones()
    }

    pub fn coords(self) -> Vec<u8> {
        (0..self.rank as usize).map(|j| u8::from(self.get(j))).collect()
    }

    /// The 0/1 lift to `Λ`.
    pub fn lift(self) -> LatticeVector {
        self.coords().into_iter().map(i64::from).collect()
    }

    /// Key for lexicographic order on the coordinate sequence.
    pub fn lex_key(self) -> Vec<u8> {
        self.coords()
    }
}

impl std::ops::Add for Mod2Vector {
    type Output = Mod2Vector;
    fn add(self, o: Mod2Vector) -> Mod2Vector {
        debug_assert_eq!(self.rank, o.rank);
        Mod2Vector { bits: self.bits ^ o.bits, rank: self.rank }
    }
}

impl std::fmt::Display for Mod2Vector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for b in self.coords() {
            write!(f, "{b}")?;
        }
        Ok(())
    }
}

fn mask(rank: usize) -> u16 {
    ((1u32 << rank) - 1) as u16
}

pub fn reduce_mod2(v: &[i64]) -> Mod2Vector {
    let bits = v
        .iter()
        .enumerate()
        .fold(0u16, |acc, (j, &x)| acc | ((x.rem_euclid(2) as u16) << j));
    Mod2Vector { bits, rank: v.len() as u8 }
}

/// Rows of the Gram matrix reduced mod 2, as bit masks.
fn gram_rows(lattice: &GeometricLattice) -> Vec<u16> {
    lattice
        .gram
        .iter()
        .map(|row| {
            row.iter()
                .enumerate()
                .fold(0u16, |acc, (j, &g)| acc | ((g.rem_euclid(2) as u16) << j))
        })
        .collect()
}

pub fn mod2_pair(lattice: &GeometricLattice, a: Mod2Vector, b: Mod2Vector) -> u8 {
    let rows = gram_rows(lattice);
    pair_with(&rows, a, b)
}

fn pair_with(rows: &[u16], a: Mod2Vector, b: Mod2Vector) -> u8 {
    let mut s = 0u32;
    for (i, r) in rows.iter().enumerate() {
        if a.get(i) {
            s += (r & b.bits).count_ones();
        }
    }
    (s & 1) as u8
}

/// `v²/2` for the 0/1 lift.
fn half_norm(lattice: &GeometricLattice, v: Mod2Vector) -> i64 {
    let x = v.lift();
    lattice.norm(&x) / 2
}

pub fn q0(lattice: &GeometricLattice, v: Mod2Vector) -> u8 {
    half_norm(lattice, v).rem_euclid(2) as u8
}

pub fn in_radical(lattice: &GeometricLattice, r: Mod2Vector) -> bool {
    gram_rows(lattice).iter().all(|row| (row & r.bits).count_ones() % 2 == 0)
}

/// `v²/2 mod 4`, well defined on `R`.
pub fn q_on_r(lattice: &GeometricLattice, r: Mod2Vector) -> Result<u8> {
    if !in_radical(lattice, r) {
        return Err(Error::NotInRadical);
    }
    Ok(half_norm(lattice, r).rem_euclid(4) as u8)
}

/// Basis of `R`, the kernel of the mod-2 Gram matrix, in reduced echelon form.
pub fn radical(lattice: &GeometricLattice) -> Vec<Mod2Vector> {
    let n = lattice.rank;
    let rows = gram_rows(lattice);
    // Gauss-Jordan over GF(2) on the (symmetric) Gram matrix
    let mut m = rows.clone();
    let mut pivots: Vec<usize> = Vec::new();
    let mut r = 0;
    for c in 0..n {
        let Some(p) = (r..n).find(|&i| m[i] >> c & 1 == 1) else { continue };
        m.swap(r, p);
        for i in 0..n {
            if i != r && m[i] >> c & 1 == 1 {
                m[i] ^= m[r];
            }
        }
        pivots.push(c);
        r += 1;
    }
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut bits = 1u16 << f;
            for (k, &pc) in pivots.iter().enumerate() {
                if m[k] >> f & 1 == 1 {
                    bits |= 1 << pc;
                }
            }
            Mod2Vector { bits, rank: n as u8 }
        })
        .collect()
}

/// All elements of the span of `basis`.
pub fn span(rank: usize, basis: &[Mod2Vector]) -> Vec<Mod2Vector> {
    let mut out = vec![Mod2Vector::zero(rank)];
    for b in basis {
        let more: Vec<Mod2Vector> = out.iter().map(|&x| x + *b).collect();
        out.extend(more);
    }
    out.sort();
    out
}

pub fn radical_elements(lattice: &GeometricLattice) -> Vec<Mod2Vector> {
    span(lattice.rank, &radical(lattice))
}

pub fn all_vectors(rank: usize) -> impl Iterator<Item = Mod2Vector> {
    (0..1u32 << rank).map(move |b| Mod2Vector { bits: b as u16, rank: rank as u8 })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Mod2Profile {
    pub size_v: usize,
    pub size_r: usize,
    pub size_v1: usize,
    pub size_r1: usize,
    pub size_v1_minus_r1: usize,
    /// `|R_i| = |{r ∈ R : q(r) = i}|`, i ∈ ℤ/4.
    pub r_counts: [usize; 4],
}

pub fn strata_profile(lattice: &GeometricLattice) -> Mod2Profile {
    let rows = gram_rows(lattice);
    let mut size_v = 0;
    let mut size_v1 = 0;
    let mut r_counts = [0usize; 4];
    for v in all_vectors(lattice.rank) {
        size_v += 1;
        let h = half_norm(lattice, v);
        if h.rem_euclid(2) == 1 {
            size_v1 += 1;
        }
        if rows.iter().all(|row| (row & v.bits).count_ones() % 2 == 0) {
            r_counts[h.rem_euclid(4) as usize] += 1;
        }
    }
    let size_r = r_counts.iter().sum();
    let size_r1 = r_counts[1];
    Mod2Profile {
        size_v,
        size_r,
        size_v1,
        size_r1,
        size_v1_minus_r1: size_v1 - size_r1,
        r_counts,
    }
}

/// Whether `v ∈ V1∖R1`, i.e. `q0(v) = 1` and not (`v ∈ R` with `q(v) = 1`).
pub fn is_root_residue_class(lattice: &GeometricLattice, v: Mod2Vector) -> bool {
    q0(lattice, v) == 1 && q_on_r(lattice, v).map_or(true, |q| q != 1)
}

/// Roots grouped by residue.
pub struct RootIndex {
    by_residue: HashMap<Mod2Vector, Vec<LatticeVector>>,
}

impl RootIndex {
    pub fn new(lattice: &GeometricLattice) -> Self {
        let mut by_residue: HashMap<Mod2Vector, Vec<LatticeVector>> = HashMap::new();
        for r in enumerate_roots(lattice) {
            by_residue.entry(reduce_mod2(&r)).or_default().push(r);
        }
        RootIndex { by_residue }
    }

    pub fn roots_over(&self, v: Mod2Vector) -> &[LatticeVector] {
        self.by_residue.get(&v).map_or(&[], Vec::as_slice)
    }
}

/// The `±` root pair over `v`, canonical sign.
pub fn lift_to_root(lattice: &GeometricLattice, v: Mod2Vector) -> Result<LatticeVector> {
    if v.rank as usize != lattice.rank {
        return Err(Error::Dimension { expected: lattice.rank, got: v.rank as usize });
    }
    if q0(lattice, v) == 0 {
        return Err(Error::NotInV1);
    }
    if q_on_r(lattice, v) == Ok(1) {
        return Err(Error::InR1);
    }
    let index = RootIndex::new(lattice);
    let over = index.roots_over(v);
    match over.first() {
        Some(e) => Ok(canonical_sign(e)),
        None => Err(Error::Input(format!("no root over {v}"))),
    }
}
