//! The fiberwise mapping class group `Mod^s(X_ℝ)` in normal form, the
//! homomorphism `Φ: Λ → Mod^s(X_ℝ)` and its kernel, image and cokernel.
//!
//! For `𝕂#p𝕋²⊔q𝕊²`, `p ≥ 1`, an element is `Δ̄^κ t_c^n s^m` with
//! `κ ∈ {0,1}^p`. Generator coordinates are `(Δ̄_1..p, t_{c_1..p}, s_1..p)`,
//! subject to `Δ̄_i² = t_{c_i} t_{c_{i+1}}^{-1}` and `t_{c_{p+1}} = t_{c_1}^{-1}`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::intlin::{self, AbelianGroup, Mat};
use crate::lattice::{build_lattice, BasisLabel, Bridge, GeometricLattice, LatticeVector};
use crate::types::SurfaceTopology;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ModSElement {
    /// `p ≥ 1`
    Handles { kappa: Vec<u8>, n: Vec<i64>, m: Vec<i64> },
    /// `p = 0`: `t_{c_1}^t`, `t ∈ ℤ/2`
    Sphere { t: u8 },
    KleinKlein { swap: u8, shift: u8 },
}

impl std::fmt::Display for ModSElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ModSElement::Handles { kappa, n, m } => {
                write!(f, "kappa={kappa:?} n={n:?} m={m:?}")
            }
            ModSElement::Sphere { t } => write!(f, "t={t}"),
            ModSElement::KleinKlein { swap, shift } => write!(f, "swap={swap} shift={shift}"),
        }
    }
}

pub fn ngens(surface: SurfaceTopology) -> usize {
    match surface {
        SurfaceTopology::KleinKlein => 2,
        SurfaceTopology::Handles { p: 0, .. } => 1,
        SurfaceTopology::Handles { p, .. } => 3 * p as usize,
    }
}

/// Relation rows in generator coordinates.
pub fn relations(surface: SurfaceTopology) -> Mat {
    match surface {
        SurfaceTopology::KleinKlein => vec![vec![2, 0], vec![0, 2]],
        SurfaceTopology::Handles { p: 0, .. } => vec![vec![2]],
        SurfaceTopology::Handles { p, .. } => {
            let p = p as usize;
            (0..p)
                .map(|i| {
                    let mut r = vec![0; 3 * p];
                    r[i] = 2;
                    r[p + i] -= 1;
                    if i + 1 < p {
                        r[p + i + 1] += 1;
                    } else {
                        r[p] -= 1;
                    }
                    r
                })
                .collect()
        }
    }
}

/// Normal form of the element with generator coordinates `raw`.
pub fn normalize(surface: SurfaceTopology, raw: &[i64]) -> Result<ModSElement> {
    if raw.len() != ngens(surface) {
        return Err(Error::Dimension { expected: ngens(surface), got: raw.len() });
    }
    Ok(match surface {
        SurfaceTopology::KleinKlein => ModSElement::KleinKlein {
            swap: raw[0].rem_euclid(2) as u8,
            shift: raw[1].rem_euclid(2) as u8,
        },
        SurfaceTopology::Handles { p: 0, .. } => ModSElement::Sphere { t: raw[0].rem_euclid(2) as u8 },
        SurfaceTopology::Handles { p, .. } => {
            let p = p as usize;
            let mut kappa = vec![0u8; p];
            let mut n = raw[p..2 * p].to_vec();
            let m = raw[2 * p..].to_vec();
            for i in 0..p {
                kappa[i] = raw[i].rem_euclid(2) as u8;
                let carry = raw[i].div_euclid(2);
                // Δ̄_i² = t_{c_i} t_{c_{i+1}}^{-1}, t_{c_{p+1}} = t_{c_1}^{-1}
                n[i] += carry;
                if i + 1 < p {
                    n[i + 1] -= carry;
                } else {
                    n[0] += carry;
                }
            }
            ModSElement::Handles { kappa, n, m }
        }
    })
}

/// Generator coordinates of the normal form.
pub fn to_raw(g: &ModSElement) -> Vec<i64> {
    match g {
        ModSElement::Handles { kappa, n, m } => kappa
            .iter()
            .map(|&k| i64::from(k))
            .chain(n.iter().copied())
            .chain(m.iter().copied())
            .collect(),
        ModSElement::Sphere { t } => vec![i64::from(*t)],
        ModSElement::KleinKlein { swap, shift } => vec![i64::from(*swap), i64::from(*shift)],
    }
}

pub fn check_element(surface: SurfaceTopology, g: &ModSElement) -> Result<()> {
    let ok = match (surface, g) {
        (SurfaceTopology::KleinKlein, ModSElement::KleinKlein { swap, shift }) => *swap < 2 && *shift < 2,
        (SurfaceTopology::Handles { p: 0, .. }, ModSElement::Sphere { t }) => *t < 2,
        (SurfaceTopology::Handles { p, .. }, ModSElement::Handles { kappa, n, m }) => {
            let p = p as usize;
            p > 0 && kappa.len() == p && n.len() == p && m.len() == p && kappa.iter().all(|&k| k < 2)
        }
        _ => false,
    };
    if ok {
        Ok(())
    } else {
        Err(Error::SurfaceMismatch)
    }
}

pub fn mods_identity(surface: SurfaceTopology) -> ModSElement {
    normalize(surface, &vec![0; ngens(surface)]).expect("length matches")
}

pub fn mods_mul(surface: SurfaceTopology, g: &ModSElement, h: &ModSElement) -> Result<ModSElement> {
    check_element(surface, g)?;
    check_element(surface, h)?;
    let raw: Vec<i64> = to_raw(g).iter().zip(to_raw(h)).map(|(a, b)| a + b).collect();
    normalize(surface, &raw)
}

pub fn mods_pow(surface: SurfaceTopology, g: &ModSElement, k: i64) -> Result<ModSElement> {
    check_element(surface, g)?;
    let raw: Vec<i64> = to_raw(g).iter().map(|a| a * k).collect();
    normalize(surface, &raw)
}

pub fn mods_inverse(surface: SurfaceTopology, g: &ModSElement) -> Result<ModSElement> {
    mods_pow(surface, g, -1)
}

fn unit(surface: SurfaceTopology, j: usize, k: i64) -> ModSElement {
    let mut raw = vec![0; ngens(surface)];
    raw[j] = k;
    normalize(surface, &raw).expect("length matches")
}

fn handles(surface: SurfaceTopology) -> Result<usize> {
    match surface {
        SurfaceTopology::Handles { p, .. } => Ok(p as usize),
        SurfaceTopology::KleinKlein => Err(Error::Unsupported("K+K".into())),
    }
}

fn index_in(p: usize, i: usize) -> Result<()> {
    if (1..=p).contains(&i) {
        Ok(())
    } else {
        Err(Error::Input(format!("handle index {i} outside 1..={p}")))
    }
}

/// `Δ̄_i`
pub fn delta_bar(surface: SurfaceTopology, i: usize) -> Result<ModSElement> {
    let p = handles(surface)?;
    index_in(p, i)?;
    Ok(unit(surface, i - 1, 1))
}

/// `t_{c_i}`, `1 ≤ i ≤ p+1`, with `t_{c_{p+1}} = t_{c_1}^{-1}`.
pub fn t_c(surface: SurfaceTopology, i: usize) -> Result<ModSElement> {
    let p = handles(surface)?;
    if p == 0 {
        return match i {
            1 => Ok(ModSElement::Sphere { t: 1 }),
            _ => Err(Error::Input(format!("t_c{i} on a surface without handles"))),
        };
    }
    index_in(p + 1, i)?;
    Ok(if i == p + 1 { unit(surface, p, -1) } else { unit(surface, p + i - 1, 1) })
}

/// `s_i = t_{a_i} t_{b_i}`
pub fn s(surface: SurfaceTopology, i: usize) -> Result<ModSElement> {
    let p = handles(surface)?;
    index_in(p, i)?;
    Ok(unit(surface, 2 * p + i - 1, 1))
}

/// `Δ_i = Δ̄_i t_{c_{i+1}}`
pub fn delta(surface: SurfaceTopology, i: usize) -> Result<ModSElement> {
    mods_mul(surface, &delta_bar(surface, i)?, &t_c(surface, i + 1)?)
}

pub fn kk_swap() -> ModSElement {
    ModSElement::KleinKlein { swap: 1, shift: 0 }
}

pub fn kk_shift() -> ModSElement {
    ModSElement::KleinKlein { swap: 0, shift: 1 }
}

pub fn mods_group_structure(surface: SurfaceTopology) -> AbelianGroup {
    AbelianGroup::presented(ngens(surface), &relations(surface))
}

/// The element of order 2, `t_{c_1}^{-(1+(-1)^p)/2} ∏ Δ_odd ∏ Δ_even^{-1}`.
pub fn mods_delta(surface: SurfaceTopology) -> Result<ModSElement> {
    let p = handles(surface)?;
    if p == 0 {
        return t_c(surface, 1);
    }
    let mut g = if p % 2 == 0 { mods_inverse(surface, &t_c(surface, 1)?)? } else { mods_identity(surface) };
    for i in 1..=p {
        let d = delta(surface, i)?;
        let d = if i % 2 == 1 { d } else { mods_inverse(surface, &d)? };
        g = mods_mul(surface, &g, &d)?;
    }
    Ok(g)
}

/// `Φ` together with cached linear-algebra data.
#[derive(Clone, Debug)]
pub struct PhiMap {
    pub surface: SurfaceTopology,
    pub lattice: GeometricLattice,
    /// Shift bit carried by `Φ(B_0)` on `𝕂⊔𝕂`.
    pub star: u8,
    images: Vec<ModSElement>,
    image_hnf: Mat,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PhiAnalysis {
    /// HNF basis of `ker Φ` in lattice coordinates.
    pub kernel_basis: Vec<LatticeVector>,
    pub kernel_rank: usize,
    pub image: AbelianGroup,
    pub cokernel: AbelianGroup,
}

impl PhiMap {
    pub fn new(surface: SurfaceTopology) -> Self {
        Self::with_star(surface, 0)
    }

    pub fn with_star(surface: SurfaceTopology, star: u8) -> Self {
        Self::from_lattice(surface, build_lattice(surface.sextic()), star).expect("lattice matches surface")
    }

    pub fn from_lattice(surface: SurfaceTopology, lattice: GeometricLattice, star: u8) -> Result<Self> {
        if lattice.sextic.surface() != surface {
            return Err(Error::SurfaceMismatch);
        }
        let images = lattice
            .labels
            .iter()
            .map(|&l| generator_image(surface, l, star))
            .collect::<Result<Vec<_>>>()?;
        let mut gens: Mat = images.iter().map(to_raw).collect();
        gens.extend(relations(surface));
        let image_hnf = intlin::hnf(&gens, ngens(surface));
        Ok(PhiMap { surface, lattice, star, images, image_hnf })
    }

    pub fn generator_image(&self, j: usize) -> &ModSElement {
        &self.images[j]
    }

    /// Columns are `Φ` of the basis in generator coordinates.
    pub fn matrix(&self) -> Mat {
        let cols: Mat = self.images.iter().map(to_raw).collect();
        intlin::transpose(&cols, ngens(self.surface))
    }

    pub fn apply(&self, v: &[i64]) -> Result<ModSElement> {
        self.lattice.check_dim(v)?;
        let mut raw = vec![0; ngens(self.surface)];
        for (c, img) in v.iter().zip(&self.images) {
            for (r, x) in raw.iter_mut().zip(to_raw(img)) {
                *r += c * x;
            }
        }
        normalize(self.surface, &raw)
    }

    pub fn in_image(&self, g: &ModSElement) -> Result<bool> {
        check_element(self.surface, g)?;
        Ok(intlin::in_hnf_lattice(&self.image_hnf, &to_raw(g)))
    }

    /// Some `v` with `Φ(v) = g`.
    pub fn preimage(&self, g: &ModSElement) -> Result<Option<LatticeVector>> {
        check_element(self.surface, g)?;
        let mut gens: Mat = self.images.iter().map(to_raw).collect();
        gens.extend(relations(self.surface));
        Ok(intlin::solve(&gens, &to_raw(g)).map(|c| c[..self.lattice.rank].to_vec()))
    }

    pub fn analysis(&self) -> PhiAnalysis {
        let r = self.lattice.rank;
        let g = ngens(self.surface);
        let rels = relations(self.surface);
        // [Φ | relations^T] (x, y) = 0  ⇔  Φ x ∈ span(relations)
        let mut m = self.matrix();
        for (row, i) in m.iter_mut().zip(0..) {
            row.extend(rels.iter().map(|rel| rel[i]));
        }
        let ker_full = intlin::kernel(&m, r + rels.len());
        let projected: Mat = ker_full.iter().map(|k| k[..r].to_vec()).collect();
        let kernel_basis = intlin::hnf(&projected, r);
        let image = AbelianGroup::presented(r, &kernel_basis);
        let mut coker_rels = rels;
        coker_rels.extend(self.images.iter().map(to_raw));
        let cokernel = AbelianGroup::presented(g, &coker_rels);
        PhiAnalysis { kernel_rank: kernel_basis.len(), kernel_basis, image, cokernel }
    }
}

fn generator_image(surface: SurfaceTopology, label: BasisLabel, star: u8) -> Result<ModSElement> {
    let mul = |a: ModSElement, b: ModSElement| mods_mul(surface, &a, &b);
    match (surface, label) {
        (SurfaceTopology::KleinKlein, BasisLabel::Bridge(Bridge::Center)) => {
            Ok(ModSElement::KleinKlein { swap: 1, shift: star & 1 })
        }
        (SurfaceTopology::KleinKlein, BasisLabel::Bridge(Bridge::Leg(_))) => Ok(kk_shift()),
        (_, BasisLabel::Oval(i)) => mul(delta(surface, i)?, mods_pow(surface, &s(surface, i)?, -2)?),
        (_, BasisLabel::Bridge(Bridge::Link(i))) => {
            let ss = mul(s(surface, i)?, s(surface, i + 1)?)?;
            mul(ss, mods_inverse(surface, &t_c(surface, i + 1)?)?)
        }
        (_, BasisLabel::Bridge(Bridge::Pendant { oval, .. })) => s(surface, oval),
        (_, BasisLabel::Bridge(Bridge::Detached)) | (_, BasisLabel::Bridge(Bridge::Free(_))) => {
            t_c(surface, 1)
        }
        (s, l) => Err(Error::Unsupported(format!("basis element {l} on {s}"))),
    }
}

pub fn phi(surface: SurfaceTopology, v: &[i64]) -> Result<ModSElement> {
    PhiMap::new(surface).apply(v)
}

pub fn phi_analysis(surface: SurfaceTopology) -> PhiAnalysis {
    PhiMap::new(surface).analysis()
}

pub fn in_image(surface: SurfaceTopology, g: &ModSElement) -> Result<bool> {
    PhiMap::new(surface).in_image(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h(p: u8, q: u8) -> SurfaceTopology {
        SurfaceTopology::Handles { p, q }
    }

    #[test]
    fn carry_examples() {
        let x = h(1, 0);
        let db = delta_bar(x, 1).unwrap();
        assert_eq!(
            mods_mul(x, &db, &db).unwrap(),
            ModSElement::Handles { kappa: vec![0], n: vec![2], m: vec![0] }
        );
        let d = delta(x, 1).unwrap();
        assert_eq!(d, ModSElement::Handles { kappa: vec![1], n: vec![-1], m: vec![0] });
        assert_eq!(mods_mul(x, &d, &d).unwrap(), mods_identity(x));
        let y = h(3, 0);
        let db2 = delta_bar(y, 2).unwrap();
        assert_eq!(
            mods_mul(y, &db2, &db2).unwrap(),
            ModSElement::Handles { kappa: vec![0; 3], n: vec![0, 1, -1], m: vec![0; 3] }
        );
    }

    #[test]
    fn group_structures() {
        assert_eq!(mods_group_structure(h(4, 0)).to_string(), "Z^8+Z/2");
        assert_eq!(mods_group_structure(h(1, 1)).to_string(), "Z^2+Z/2");
        assert_eq!(mods_group_structure(h(0, 3)).to_string(), "Z/2");
        assert_eq!(mods_group_structure(SurfaceTopology::KleinKlein).to_string(), "(Z/2)^2");
    }

    #[test]
    fn delta_element() {
        assert_eq!(mods_delta(h(1, 0)).unwrap(), delta(h(1, 0), 1).unwrap());
        assert_eq!(mods_delta(h(0, 2)).unwrap(), ModSElement::Sphere { t: 1 });
        assert!(mods_delta(SurfaceTopology::KleinKlein).is_err());
    }

    #[test]
    fn table_ten_one_one() {
        let phi = PhiMap::new(h(1, 1));
        // basis (O1, B1, B1', B1'') in generator coordinates (Δ̄1, t1, s1)
        assert_eq!(phi.matrix(), vec![vec![1, 0, 0, 0], vec![-1, 0, 0, 0], vec![-2, 1, 1, 1]]);
    }

    #[test]
    fn mismatch_is_an_error() {
        let g = mods_identity(h(2, 0));
        assert_eq!(mods_mul(h(3, 0), &g, &g), Err(Error::SurfaceMismatch));
        assert!(phi(h(4, 0), &[1, 2]).is_err());
    }
}
