//! Oval/bridge splitting, the boundary map δ, classification of positive
//! tritangents and their isotopy codes.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{
    build_lattice, canonical_sign, root_pairs, BasisLabel, GeometricLattice, LatticeVector,
};
use crate::mod2::{mod2_pair, reduce_mod2, Mod2Vector};
use crate::types::SexticType;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum TritangentType {
    T0,
    T0Star,
    T1,
    T2,
    T3,
}

impl TritangentType {
    pub const ALL: [TritangentType; 5] = [
        TritangentType::T0,
        TritangentType::T0Star,
        TritangentType::T1,
        TritangentType::T2,
        TritangentType::T3,
    ];

    pub fn index(self) -> usize {
        self as usize
    }
}

impl fmt::Display for TritangentType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TritangentType::T0 => "T0",
            TritangentType::T0Star => "T0*",
            TritangentType::T1 => "T1",
            TritangentType::T2 => "T2",
            TritangentType::T3 => "T3",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Symbol {
    Under,
    Over,
    UnderTan,
    OverTan,
    Cup,
}

impl Symbol {
    pub fn as_char(self) -> char {
        match self {
            Symbol::Under => 'u',
            Symbol::Over => 'o',
            Symbol::UnderTan => 'U',
            Symbol::OverTan => 'O',
            Symbol::Cup => 'C',
        }
    }

    pub fn from_char(c: char) -> Option<Symbol> {
        Some(match c {
            'u' => Symbol::Under,
            'o' => Symbol::Over,
            'U' => Symbol::UnderTan,
            'O' => Symbol::OverTan,
            'C' => Symbol::Cup,
            _ => return None,
        })
    }

    pub fn is_tangent(self) -> bool {
        matches!(self, Symbol::UnderTan | Symbol::OverTan)
    }
}

/// Isotopy code: one symbol per oval, plus the J-tangency arc for `T2`.
///
/// The arc `(i, j)` runs from gap `i` to gap `j`, where gap `k` sits between
/// ovals `k` and `k+1` and gap `0` is the wrap through the reference generatrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Code {
    pub symbols: Vec<Symbol>,
    pub bracket: Option<(usize, usize)>,
}

impl Code {
    pub fn without_bracket(&self) -> Code {
        Code { symbols: self.symbols.clone(), bracket: None }
    }
}

impl fmt::Display for Code {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut toks: Vec<String> = self.symbols.iter().map(|s| s.as_char().to_string()).collect();
        if let Some((i, j)) = self.bracket {
            toks.insert(i, format!("[{i},{j})"));
        }
        f.write_str(&toks.join(" "))
    }
}

impl FromStr for Code {
    type Err = Error;

    fn from_str(s: &str) -> Result<Code> {
        let mut symbols = Vec::new();
        let mut bracket = None;
        for tok in s.split_whitespace() {
            if let Some(inner) = tok.strip_prefix('[').and_then(|t| t.strip_suffix(')')) {
                let (a, b) = inner.split_once(',').ok_or_else(|| Error::Parse(s.into()))?;
                let a = a.parse().map_err(|_| Error::Parse(s.into()))?;
                let b = b.parse().map_err(|_| Error::Parse(s.into()))?;
                if bracket.replace((a, b)).is_some() {
                    return Err(Error::Parse(s.into()));
                }
                continue;
            }
            let mut cs = tok.chars();
            match (cs.next().and_then(Symbol::from_char), cs.next()) {
                (Some(sym), None) => symbols.push(sym),
                _ => return Err(Error::Parse(s.into())),
            }
        }
        Ok(Code { symbols, bracket })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Tritangent {
    /// Canonical representative of the `±` root pair.
    pub root: LatticeVector,
    pub s_in: Vec<usize>,
    pub s_tan: Vec<usize>,
    pub ttype: TritangentType,
    pub code: Option<Code>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OvalBridgeSplit {
    pub vo: Mod2Vector,
    pub vb: Mod2Vector,
}

fn oval_mask(lattice: &GeometricLattice) -> u16 {
    lattice
        .labels
        .iter()
        .enumerate()
        .filter(|(_, l)| matches!(l, BasisLabel::Oval(_)))
        .fold(0, |acc, (j, _)| acc | 1 << j)
}

fn has_ovals(lattice: &GeometricLattice) -> bool {
    lattice.sextic.ovals() > 0
}

fn oval_support(lattice: &GeometricLattice, v: Mod2Vector) -> Vec<usize> {
    let mut out: Vec<usize> = lattice
        .labels
        .iter()
        .enumerate()
        .filter_map(|(j, l)| match l {
            BasisLabel::Oval(i) if v.get(j) => Some(*i),
            _ => None,
        })
        .collect();
    out.sort_unstable();
    out
}

pub fn oval_bridge_split(lattice: &GeometricLattice, v: Mod2Vector) -> Result<OvalBridgeSplit> {
    if !has_ovals(lattice) {
        return Err(Error::Unsupported(format!("<{}> (no oval-classes)", lattice.sextic)));
    }
    let om = oval_mask(lattice);
    Ok(OvalBridgeSplit {
        vo: Mod2Vector { bits: v.bits & om, rank: v.rank },
        vb: Mod2Vector { bits: v.bits & !om, rank: v.rank },
    })
}

/// `δ(b) = Σ_i (o_i·b) o_i` on bridge residues.
pub fn boundary_delta(lattice: &GeometricLattice, vb: Mod2Vector) -> Result<Mod2Vector> {
    let om = oval_mask(lattice);
    if vb.bits & om != 0 {
        return Err(Error::Input("boundary map takes bridge residues".into()));
    }
    let mut out = Mod2Vector::zero(lattice.rank);
    for (j, l) in lattice.labels.iter().enumerate() {
        if matches!(l, BasisLabel::Oval(_)) {
            let o = Mod2Vector::unit(lattice.rank, j);
            if mod2_pair(lattice, o, vb) == 1 {
                out = out + o;
            }
        }
    }
    Ok(out)
}

pub fn classify_root(lattice: &GeometricLattice, e: &[i64]) -> Result<Tritangent> {
    lattice.check_dim(e)?;
    let n = lattice.norm(e);
    if n != -2 {
        return Err(Error::NotRoot(n));
    }
    let root = canonical_sign(e);
    if !has_ovals(lattice) {
        return Ok(Tritangent { root, s_in: vec![], s_tan: vec![], ttype: TritangentType::T0, code: None });
    }
    let v = reduce_mod2(e);
    let split = oval_bridge_split(lattice, v)?;
    let s_in = oval_support(lattice, split.vo);
    let s_tan = oval_support(lattice, boundary_delta(lattice, split.vb)?);
    let ttype = match s_tan.len() {
        0 if v.weight() == 1 && v.bits & oval_mask(lattice) != 0 => TritangentType::T0Star,
        0 => TritangentType::T0,
        1 => TritangentType::T1,
        2 => TritangentType::T2,
        3 => TritangentType::T3,
        k => return Err(Error::Input(format!("{k} tangent ovals"))),
    };
    Ok(Tritangent { root, s_in, s_tan, ttype, code: None })
}

fn code_supported(sextic: SexticType) -> bool {
    matches!(sextic, SexticType::PQ(1..=4, 0) | SexticType::PQ(1, 1))
}

pub fn code_of(t: &Tritangent, sextic: SexticType) -> Result<Code> {
    if !code_supported(sextic) {
        return Err(Error::Unsupported(format!("codes of <{sextic}>")));
    }
    let p = sextic.ovals();
    if t.ttype == TritangentType::T0Star {
        let symbols = (1..=p)
            .map(|i| if t.s_in.contains(&i) { Symbol::Cup } else { Symbol::Over })
            .collect();
        return Ok(Code { symbols, bracket: None });
    }
    // for <1|1> the residue support marks the ovals the section passes over
    let flip = sextic == SexticType::PQ(1, 1);
    let symbols = (1..=p)
        .map(|i| {
            let under = t.s_in.contains(&i) != flip;
            match (t.s_tan.contains(&i), under) {
                (true, true) => Symbol::UnderTan,
                (true, false) => Symbol::OverTan,
                (false, true) => Symbol::Under,
                (false, false) => Symbol::Over,
            }
        })
        .collect();
    let bracket = if t.ttype == TritangentType::T2 && p >= 3 {
        let (a, b) = (t.s_tan[0], t.s_tan[1]);
        let target: Vec<usize> = t.s_in.iter().copied().filter(|i| !t.s_tan.contains(i)).collect();
        let inner: Vec<usize> = (a + 1..b).collect();
        let mut outer: Vec<usize> = (b + 1..=p).chain(1..a).collect();
        outer.sort_unstable();
        if inner == target {
            Some((a % p, (b - 1) % p))
        } else if outer == target {
            Some((b % p, (a + p - 1) % p))
        } else {
            return Err(Error::Input(format!("no arc between ovals {a} and {b} encloses {target:?}")));
        }
    } else {
        None
    };
    Ok(Code { symbols, bracket })
}

pub fn enumerate_tritangents_in(lattice: &GeometricLattice) -> Result<Vec<Tritangent>> {
    let coded = code_supported(lattice.sextic);
    root_pairs(lattice)
        .iter()
        .map(|e| {
            let mut t = classify_root(lattice, e)?;
            if coded {
                t.code = Some(code_of(&t, lattice.sextic)?);
            }
            Ok(t)
        })
        .collect()
}

pub fn enumerate_tritangents(sextic: SexticType) -> Vec<Tritangent> {
    enumerate_tritangents_in(&build_lattice(sextic)).expect("geometric lattices classify cleanly")
}

pub fn type_counts(ts: &[Tritangent]) -> [usize; 5] {
    let mut c = [0; 5];
    for t in ts {
        c[t.ttype.index()] += 1;
    }
    c
}

pub type PairCensus = BTreeMap<(Vec<usize>, Vec<usize>), usize>;

pub fn pair_census_of(ts: &[Tritangent]) -> PairCensus {
    let mut m = PairCensus::new();
    for t in ts {
        *m.entry((t.s_in.clone(), t.s_tan.clone())).or_default() += 1;
    }
    m
}

pub fn pair_census(sextic: SexticType) -> PairCensus {
    pair_census_of(&enumerate_tritangents(sextic))
}

/// Sorted multiset of codes.
pub fn code_census(sextic: SexticType) -> Result<Vec<Code>> {
    if !code_supported(sextic) {
        return Err(Error::Unsupported(format!("codes of <{sextic}>")));
    }
    let mut codes: Vec<Code> = enumerate_tritangents(sextic)
        .into_iter()
        .filter_map(|t| t.code)
        .collect();
    codes.sort();
    Ok(codes)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ThreeJGroup {
    A,
    B,
    C,
}

impl fmt::Display for ThreeJGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

/// Group of a `⟨|||⟩` root: `A` for `±B_1..±B_4`, otherwise `B`/`C` by the
/// parity of minus signs in `½(±B1±B2±B3±B4)`.
pub fn three_j_group(e: &[i64]) -> Result<ThreeJGroup> {
    if e.len() != 4 {
        return Err(Error::Dimension { expected: 4, got: e.len() });
    }
    let b4 = [-2, -1, -1, -1];
    let is_basis_bridge = (1..4).any(|i| {
        let mut u = [0i64; 4];
        u[i] = 1;
        e == u || e.iter().zip(u).all(|(a, b)| *a == -b)
    }) || e == b4
        || e.iter().zip(b4).all(|(a, b)| *a == -b);
    if is_basis_bridge {
        return Ok(ThreeJGroup::A);
    }
    // e = ½ Σ ε_i B_i with B4 = −(B1+B2+B3+2B0): ε4 = −c0, ε_i = 2c_i + ε4
    let eps4 = -e[0];
    let eps: Vec<i64> = (1..4).map(|i| 2 * e[i] + eps4).chain([eps4]).collect();
    if eps.iter().any(|x| x.abs() != 1) {
        return Err(Error::Input(format!("{e:?} is not a half-sum root")));
    }
    let minus = eps.iter().filter(|&&x| x < 0).count();
    Ok(if minus % 2 == 0 { ThreeJGroup::B } else { ThreeJGroup::C })
}

pub fn three_j_grouping() -> BTreeMap<ThreeJGroup, Vec<LatticeVector>> {
    let l = build_lattice(SexticType::ThreeJ);
    let mut groups: BTreeMap<ThreeJGroup, Vec<LatticeVector>> = BTreeMap::new();
    for r in root_pairs(&l) {
        let g = three_j_group(&r).expect("every D4 root is a bridge or a half-sum");
        groups.entry(g).or_default().push(r);
    }
    groups
}

/// All real tritangents: the positive ones plus the negative ones, which are
/// the positive tritangents of the mirror type `⟨q|p⟩`.
pub fn real_tritangent_total(sextic: SexticType) -> Result<usize> {
    match sextic {
        SexticType::PQ(p, q) => {
            let mirror = SexticType::new(q, p)?;
            Ok(enumerate_tritangents(sextic).len() + enumerate_tritangents(mirror).len())
        }
        SexticType::ThreeJ => Err(Error::Unsupported("mirror of <|||>".into())),
    }
}

/// Labels of the basis for display.
pub fn basis_names(lattice: &GeometricLattice) -> Vec<String> {
    lattice.labels.iter().map(ToString::to_string).collect()
}
