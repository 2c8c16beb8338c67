//! Mordell–Weil translations on `H2(X)`, their mod-2 shadow on
//! `H1(X_ℝ; ℤ/2) = ⟨F_ℝ⟩ ⊕ V/R ⊕ ⟨L_ℝ⟩`, and the tangent-conic count.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{GeometricLattice, H2ClassX};
use crate::mod2::{self, Mod2Vector};

/// `(m, v, n) ↦ (m + v·w + kn, v + nw, n)`, `k = w²/2`.
pub fn mw_act_h2(lattice: &GeometricLattice, w: &[i64], x: &H2ClassX) -> Result<H2ClassX> {
    lattice.check_dim(w)?;
    lattice.check_dim(&x.w)?;
    let k = lattice.norm(w) / 2;
    Ok(H2ClassX {
        m: x.m + lattice.dot(&x.w, w) + k * x.n,
        w: x.w.iter().zip(w).map(|(a, b)| a + x.n * b).collect(),
        n: x.n,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct H1Mod2Class {
    pub mu: u8,
    /// Lexicographically least representative of its `R`-coset.
    pub v: Mod2Vector,
    pub nu: u8,
}

impl std::fmt::Display for H1Mod2Class {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, [{}], {})", self.mu, self.v, self.nu)
    }
}

/// Least element of `v + R` in coordinate order.
pub fn coset_representative(lattice: &GeometricLattice, v: Mod2Vector) -> Mod2Vector {
    mod2::radical_elements(lattice)
        .into_iter()
        .map(|r| v + r)
        .min_by_key(|u| u.lex_key())
        .unwrap_or(v)
}

pub fn h1_mod2_class(lattice: &GeometricLattice, mu: u8, v: Mod2Vector, nu: u8) -> H1Mod2Class {
    H1Mod2Class { mu: mu & 1, v: coset_representative(lattice, v), nu: nu & 1 }
}

/// Reduction `H2(X) → H1(X_ℝ; ℤ/2)`.
pub fn reduce_h2(lattice: &GeometricLattice, x: &H2ClassX) -> H1Mod2Class {
    h1_mod2_class(lattice, x.m.rem_euclid(2) as u8, mod2::reduce_mod2(&x.w), x.n.rem_euclid(2) as u8)
}

pub fn mw_act_h1_mod2(lattice: &GeometricLattice, w: &[i64], x: H1Mod2Class) -> Result<H1Mod2Class> {
    lattice.check_dim(w)?;
    let wb = mod2::reduce_mod2(w);
    let k = (lattice.norm(w) / 2).rem_euclid(2) as u8;
    let mu = x.mu ^ mod2::mod2_pair(lattice, x.v, wb) ^ (k & x.nu);
    let v = if x.nu == 1 { x.v + wb } else { x.v };
    Ok(h1_mod2_class(lattice, mu, v, x.nu))
}

/// Whether a line-type class `(μ, v, 1)` is the reduction of a real line.
///
/// When `q0` vanishes on `R` it descends to `V/R` and realizable classes are
/// exactly `μ = q0(v)`; otherwise every `(μ, v)` occurs.
pub fn realizable_mod2(lattice: &GeometricLattice, x: H1Mod2Class) -> Result<bool> {
    if x.nu != 1 {
        return Err(Error::Input("not a section class (nu = 0)".into()));
    }
    let q0_on_r_vanishes = mod2::radical_elements(lattice).into_iter().all(|r| mod2::q0(lattice, r) == 0);
    Ok(!q0_on_r_vanishes || x.mu == mod2::q0(lattice, x.v))
}

/// `|ℬ| = ½(|𝒯₁| + |𝒯₂|) − |ℛ|`.
pub fn conic_count(t1: u64, t2: u64, r: u64) -> Result<i64> {
    let s = t1 + t2;
    if s % 2 != 0 {
        return Err(Error::Input(format!("tritangent total {s} is odd")));
    }
    Ok((s / 2) as i64 - r as i64)
}
