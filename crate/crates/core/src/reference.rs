//! Published reference values used only by the verification suite.

use std::collections::BTreeSet;

use crate::intlin::Mat;
use crate::tritangent::{Code, Symbol};
use crate::types::{SexticType, SurfaceTopology};

/// Counts per type `T0, T0*, T1, T2, T3`, in `tables::CENSUS_ORDER`.
pub const TRITANGENT_COUNTS: [[usize; 11]; 5] = [
    [4, 4, 4, 4, 4, 3, 12, 3, 2, 1, 0],
    [4, 3, 2, 1, 0, 1, 0, 0, 0, 0, 0],
    [32, 24, 16, 8, 0, 8, 0, 0, 0, 0, 0],
    [48, 24, 8, 0, 0, 0, 0, 0, 0, 0, 0],
    [32, 8, 0, 0, 0, 0, 0, 0, 0, 0, 0],
];

/// `(|V|, |R|, |V1|, |R1|, |V1∖R1|)` in `tables::LATTICE_ORDER`.
pub const STRATA: [[usize; 5]; 11] = [
    [256, 1, 120, 0, 120],
    [128, 2, 64, 1, 63],
    [64, 4, 32, 2, 30],
    [32, 8, 16, 3, 13],
    [16, 4, 12, 0, 12],
    [16, 4, 12, 0, 12],
    [16, 16, 8, 4, 4],
    [8, 8, 4, 1, 3],
    [4, 4, 2, 0, 2],
    [2, 2, 1, 0, 1],
    [1, 1, 0, 0, 0],
];

/// `(Mod^s, Im, Ker rank, Coker)` in `tables::LATTICE_ORDER`.
pub const PHI_TABLE: [(&str, &str, usize, &str); 11] = [
    ("Z^8+Z/2", "Z^8", 0, "Z/2"),
    ("Z^6+Z/2", "Z^6+Z/2", 1, "0"),
    ("Z^4+Z/2", "Z^4+Z/2", 2, "0"),
    ("Z^2+Z/2", "Z^2+Z/2", 3, "0"),
    ("Z^2+Z/2", "Z+Z/2", 3, "Z"),
    ("(Z/2)^2", "(Z/2)^2", 4, "0"),
    ("Z/2", "Z/2", 4, "0"),
    ("Z/2", "Z/2", 3, "0"),
    ("Z/2", "Z/2", 2, "0"),
    ("Z/2", "Z/2", 1, "0"),
    ("Z/2", "0", 0, "Z/2"),
];

/// `{Σ a_i c_i : Σ a_i even}`.
fn even_combinations(chains: &[Vec<i64>]) -> Mat {
    let mut gens = Vec::new();
    for (i, c) in chains.iter().enumerate() {
        gens.push(c.iter().map(|x| 2 * x).collect());
        if let Some(d) = chains.get(i + 1) {
            gens.push(c.iter().zip(d).map(|(a, b)| a + b).collect());
        }
    }
    gens
}

/// Generators of `ker Φ` in basis coordinates, written via chain roots.
pub fn kernel_generators(surface: SurfaceTopology) -> Mat {
    match surface {
        SurfaceTopology::Handles { p: 4, .. } => vec![],
        SurfaceTopology::Handles { p: 3, .. } => even_combinations(&[chain_3_0()]),
        // (B1, O1, B12, O2, B2, B2')
        SurfaceTopology::Handles { p: 2, .. } => {
            even_combinations(&[vec![1, 1, 1, 1, 1, 0], vec![1, 1, 1, 1, 0, 1]])
        }
        // (B1, O1, B1', B1'', B11)
        SurfaceTopology::Handles { p: 1, q: 0 } => {
            even_combinations(&[vec![1, 1, 1, 0, 0], vec![1, 1, 0, 1, 0], vec![0, 1, 1, 1, 0]])
        }
        // (O1, B1, B1', B1'')
        SurfaceTopology::Handles { p: 1, .. } => {
            even_combinations(&[vec![1, 1, 1, 0], vec![1, 1, 0, 1], vec![1, 0, 1, 1]])
        }
        SurfaceTopology::Handles { q, .. } => {
            let n = 4 - q as usize;
            let units: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect();
            even_combinations(&units)
        }
        // (B0, B1, B2, B3): a0 even and a1 + a2 + a3 even
        SurfaceTopology::KleinKlein => {
            vec![vec![2, 0, 0, 0], vec![0, 2, 0, 0], vec![0, 1, 1, 0], vec![0, 0, 1, 1]]
        }
    }
}

/// `B1 + O1 + B12 + O2 + B23 + O3 + B3` in the `E7` basis
/// `(B1, O1, B12, O2, B23, O3, B2)`, with `B3` eliminated by the affine relation.
fn chain_3_0() -> Vec<i64> {
    vec![0, -1, -2, -3, -2, -1, -2]
}

/// Chain roots whose translation is the order-2 element `δ`.
pub fn delta_chains() -> Vec<(SexticType, Vec<i64>)> {
    vec![
        (SexticType::PQ(3, 0), chain_3_0()),
        (SexticType::PQ(2, 0), vec![1, 1, 1, 1, 1, 0]),
        (SexticType::PQ(1, 0), vec![1, 1, 1, 0, 0]),
        (SexticType::PQ(0, 0), vec![1, 0, 0, 0]),
    ]
}

/// Line-class counts in `tables::LATTICE_ORDER`; `None` is infinite.
pub const LINE_CLASSES: [Option<u64>; 11] =
    [None, None, None, None, None, Some(4), Some(2), Some(2), Some(2), Some(2), Some(1)];

/// Codes of the 120 tritangents for `⟨4|0⟩`, four per row. `u`/`o` pass
/// under/over an oval, `A` is tangent on either side, `C` is a cup, and
/// `<`, `>` delimit the arc carrying the J-tangency.
pub const CODES_4_0: [(&str, [&str; 4]); 10] = [
    ("T0", ["u u u o", "u u o u", "u o u u", "o u u u"]),
    ("T0*", ["C o o o", "o C o o", "o o C o", "o o o C"]),
    ("T1", ["A u u o", "A u o u", "A o u u", "A o o o"]),
    ("T1", ["u u A o", "u o A u", "o u A u", "o o A o"]),
    ("T1", ["u A o o", "o A o u", "o A u o", "u A u u"]),
    ("T1", ["u o o A", "o o u A", "o u o A", "u u u A"]),
    ("T2", ["A A < u u >", "A < > A o o", "u > A A < u", "o A < > A o"]),
    ("T2", ["< u u > A A", "o o A < > A", "A < u u > A", "> A o o A <"]),
    ("T2", ["A < u > A o", "A o A < u >", "< u > A o A", "o A < u > A"]),
    ("T3", ["A A A u", "A A o A", "A u A A", "o A A A"]),
];

/// A code as written in the table, before expanding `A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableCode {
    pub symbols: Vec<char>,
    /// Number of symbols before `<` and before `>`.
    pub open: Option<usize>,
    pub close: Option<usize>,
}

impl TableCode {
    pub fn parse(s: &str) -> Self {
        let mut t = TableCode { symbols: Vec::new(), open: None, close: None };
        for tok in s.split_whitespace() {
            match tok {
                "<" => t.open = Some(t.symbols.len()),
                ">" => t.close = Some(t.symbols.len()),
                _ => t.symbols.push(tok.chars().next().expect("nonempty token")),
            }
        }
        t
    }

    /// Drops the symbols at `positions`, which must be `u` or `o`.
    pub fn drop_symbols(&self, positions: &[usize]) -> TableCode {
        let shift = |g: usize| g - positions.iter().filter(|&&j| j < g).count();
        TableCode {
            symbols: self
                .symbols
                .iter()
                .enumerate()
                .filter(|(j, _)| !positions.contains(j))
                .map(|(_, &c)| c)
                .collect(),
            open: self.open.map(shift),
            close: self.close.map(shift),
        }
    }

    /// All `2^k` codes obtained by resolving each `A`; brackets are kept for
    /// three or more ovals.
    pub fn expand(&self) -> Vec<Code> {
        let p = self.symbols.len();
        let bracket = match (self.open, self.close) {
            (Some(a), Some(b)) if p >= 3 => Some((a % p, b % p)),
            _ => None,
        };
        let mut out = vec![Vec::new()];
        for &c in &self.symbols {
            let choices: &[Symbol] = match c {
                'u' => &[Symbol::Under],
                'o' => &[Symbol::Over],
                'C' => &[Symbol::Cup],
                _ => &[Symbol::UnderTan, Symbol::OverTan],
            };
            out = out
                .into_iter()
                .flat_map(|prefix: Vec<Symbol>| {
                    choices.iter().map(move |&s| {
                        let mut v = prefix.clone();
                        v.push(s);
                        v
                    })
                })
                .collect();
        }
        out.into_iter().map(|symbols| Code { symbols, bracket }).collect()
    }
}

/// The 120 codes with multiplicity, sorted.
pub fn expanded_codes_4_0() -> Vec<Code> {
    let mut v: Vec<Code> = CODES_4_0
        .iter()
        .flat_map(|(_, row)| row.iter())
        .flat_map(|s| TableCode::parse(s).expand())
        .collect();
    v.sort();
    v
}

fn subsets(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if items.len() < k {
        return vec![];
    }
    let mut with: Vec<Vec<usize>> = subsets(&items[1..], k - 1)
        .into_iter()
        .map(|mut s| {
            s.insert(0, items[0]);
            s
        })
        .collect();
    with.extend(subsets(&items[1..], k));
    with
}

/// Codes for `⟨p|0⟩` obtained by dropping `4 − p` plain symbols.
pub fn derivative_codes(p: usize) -> BTreeSet<Code> {
    let mut out = BTreeSet::new();
    for (_, row) in &CODES_4_0 {
        for s in row {
            let t = TableCode::parse(s);
            let plain: Vec<usize> = (0..4).filter(|&j| matches!(t.symbols[j], 'u' | 'o')).collect();
            for drop in subsets(&plain, 4 - p.min(4)) {
                out.extend(t.drop_symbols(&drop).expand());
            }
        }
    }
    out
}
