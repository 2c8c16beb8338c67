use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Type of a real sextic on the quadric cone: `⟨p|q⟩` or the three-J type `⟨|||⟩`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum SexticType {
    PQ(u8, u8),
    ThreeJ,
}

impl SexticType {
    pub const ALL: [SexticType; 11] = [
        SexticType::PQ(4, 0),
        SexticType::PQ(3, 0),
        SexticType::PQ(2, 0),
        SexticType::PQ(1, 0),
        SexticType::PQ(1, 1),
        SexticType::ThreeJ,
        SexticType::PQ(0, 0),
        SexticType::PQ(0, 1),
        SexticType::PQ(0, 2),
        SexticType::PQ(0, 3),
        SexticType::PQ(0, 4),
    ];

    pub fn new(p: u8, q: u8) -> Result<Self> {
        let ok = matches!((p, q), (0..=4, 0) | (0, 1..=4) | (1, 1));
        if ok {
            Ok(SexticType::PQ(p, q))
        } else {
            Err(Error::Input(format!("no sextic type <{p}|{q}>")))
        }
    }

    /// Number of ovals carrying oval-classes in the geometric basis.
    pub fn ovals(self) -> usize {
        match self {
            SexticType::PQ(p, _) => p as usize,
            SexticType::ThreeJ => 0,
        }
    }

    pub fn surface(self) -> SurfaceTopology {
        match self {
            SexticType::PQ(p, q) => SurfaceTopology::Handles { p, q },
            SexticType::ThreeJ => SurfaceTopology::KleinKlein,
        }
    }
}

impl fmt::Display for SexticType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SexticType::PQ(p, q) => write!(f, "{p}|{q}"),
            SexticType::ThreeJ => write!(f, "|||"),
        }
    }
}

impl FromStr for SexticType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let s = s
            .strip_prefix('<')
            .and_then(|x| x.strip_suffix('>'))
            .unwrap_or(s);
        if s == "|||" {
            return Ok(SexticType::ThreeJ);
        }
        let (p, q) = s.split_once('|').ok_or_else(|| Error::Parse(s.into()))?;
        let p: u8 = p.trim().parse().map_err(|_| Error::Parse(s.into()))?;
        let q: u8 = q.trim().parse().map_err(|_| Error::Parse(s.into()))?;
        SexticType::new(p, q)
    }
}

/// Topology of the real locus of the associated rational elliptic surface.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum SurfaceTopology {
    /// 𝕂 # p𝕋² ⊔ q𝕊²
    Handles { p: u8, q: u8 },
    /// 𝕂 ⊔ 𝕂
    KleinKlein,
}

impl SurfaceTopology {
    pub fn all() -> Vec<SurfaceTopology> {
        SexticType::ALL.iter().map(|t| t.surface()).collect()
    }

    pub fn sextic(self) -> SexticType {
        match self {
            SurfaceTopology::Handles { p, q } => SexticType::PQ(p, q),
            SurfaceTopology::KleinKlein => SexticType::ThreeJ,
        }
    }

    /// Handle count; zero for 𝕂 ⊔ 𝕂.
    pub fn handles(self) -> usize {
        match self {
            SurfaceTopology::Handles { p, .. } => p as usize,
            SurfaceTopology::KleinKlein => 0,
        }
    }
}

impl fmt::Display for SurfaceTopology {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            SurfaceTopology::KleinKlein => write!(f, "K+K"),
            SurfaceTopology::Handles { p: 0, q: 0 } => write!(f, "K"),
            SurfaceTopology::Handles { p: 0, q: 1 } => write!(f, "K+S2"),
            SurfaceTopology::Handles { p: 0, q } => write!(f, "K+{q}S2"),
            SurfaceTopology::Handles { p: 1, q: 0 } => write!(f, "K#T2"),
            SurfaceTopology::Handles { p: 1, q: 1 } => write!(f, "K#T2+S2"),
            SurfaceTopology::Handles { p, q: 0 } => write!(f, "K#{p}T2"),
            SurfaceTopology::Handles { p, q } => write!(f, "K#{p}T2+{q}S2"),
        }
    }
}

fn count_prefix(s: &str, unit: &str) -> Option<u8> {
    let digits = s.strip_suffix(unit)?;
    if digits.is_empty() {
        Some(1)
    } else {
        digits.parse().ok()
    }
}

impl FromStr for SurfaceTopology {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(s.to_string());
        let t = s.trim();
        if t == "K+K" {
            return Ok(SurfaceTopology::KleinKlein);
        }
        let rest = t.strip_prefix('K').ok_or_else(bad)?;
        let (handles, spheres) = match rest.strip_prefix('#') {
            Some(r) => match r.split_once('+') {
                Some((h, s2)) => (h, Some(s2)),
                None => (r, None),
            },
            None => match rest {
                "" => ("0T2", None),
                r => ("0T2", Some(r.strip_prefix('+').ok_or_else(bad)?)),
            },
        };
        let p = count_prefix(handles, "T2").ok_or_else(bad)?;
        let q = match spheres {
            Some(x) => count_prefix(x, "S2").ok_or_else(bad)?,
            None => 0,
        };
        SexticType::new(p, q).map(|t| t.surface()).map_err(|_| bad())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn eleven_types_round_trip() {
        let mut seen = std::collections::BTreeSet::new();
        for t in SexticType::ALL {
            assert_eq!(t.to_string().parse::<SexticType>().unwrap(), t);
            assert_eq!(t.surface().sextic(), t);
            let s = t.surface();
            assert_eq!(s.to_string().parse::<SurfaceTopology>().unwrap(), s);
            seen.insert(s);
        }
        assert_eq!(seen.len(), 11);
    }

    #[test]
    fn surface_spellings() {
        let h = |p, q| SurfaceTopology::Handles { p, q };
        assert_eq!("K#4T2".parse::<SurfaceTopology>().unwrap(), h(4, 0));
        assert_eq!("K#1T2+1S2".parse::<SurfaceTopology>().unwrap(), h(1, 1));
        assert_eq!("K#T2+S2".parse::<SurfaceTopology>().unwrap(), h(1, 1));
        assert_eq!("K#0T2+3S2".parse::<SurfaceTopology>().unwrap(), h(0, 3));
        assert_eq!("K+4S2".parse::<SurfaceTopology>().unwrap(), h(0, 4));
        assert_eq!("K".parse::<SurfaceTopology>().unwrap(), h(0, 0));
        assert!("K#2T2+S2".parse::<SurfaceTopology>().is_err());
        assert!("K#5T2".parse::<SurfaceTopology>().is_err());
        assert!("<2|1>".parse::<SexticType>().is_err());
        assert_eq!("<|||>".parse::<SexticType>().unwrap(), SexticType::ThreeJ);
    }
}
