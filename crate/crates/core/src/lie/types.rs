use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::LieError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            Family::A => "A",
            Family::B => "B",
            Family::C => "C",
            Family::D => "D",
            Family::E => "E",
            Family::F => "F",
            Family::G => "G",
        };
        f.write_str(c)
    }
}

/// A compact simple Lie algebra, identified by family and rank.
///
/// Only canonical labels can be constructed: B1, C1 and D3 resolve to A1 and
/// A3 through [`TypeLabel::resolve`], D1 and D2 are rejected.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct SimpleType {
    family: Family,
    rank: u32,
}

impl SimpleType {
    pub fn new(family: Family, rank: u32) -> Result<Self, LieError> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B => rank >= 2,
            Family::C => rank >= 2,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if ok {
            Ok(SimpleType { family, rank })
        } else if family == Family::D && rank == 2 {
            Err(LieError::NotSimple)
        } else {
            Err(LieError::InvalidType { family, rank })
        }
    }

    pub const fn a(rank: u32) -> Self {
        SimpleType {
            family: Family::A,
            rank,
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> u32 {
        self.rank
    }

    pub fn n(&self) -> usize {
        self.rank as usize
    }

    pub fn dim(&self) -> u64 {
        let n = self.rank as u64;
        match self.family {
            Family::A => n * (n + 2),
            Family::B | Family::C => n * (2 * n + 1),
            Family::D => n * (2 * n - 1),
            Family::G => 14,
            Family::F => 52,
            Family::E => match n {
                6 => 78,
                7 => 133,
                _ => 248,
            },
        }
    }

    /// Squared lengths of the simple roots, scaled so all entries are even
    /// integers. Only ratios matter.
    pub fn root_lengths(&self) -> Vec<i64> {
        let n = self.n();
        match self.family {
            Family::A | Family::D | Family::E => vec![2; n],
            Family::B => (0..n).map(|i| if i + 1 == n { 2 } else { 4 }).collect(),
            Family::C => (0..n).map(|i| if i + 1 == n { 4 } else { 2 }).collect(),
            Family::F => vec![4, 4, 2, 2],
            Family::G => vec![2, 6],
        }
    }

    /// Edges `(i, j, (α_i, α_j))` of the Dynkin diagram in the scaled form.
    pub fn edges(&self) -> Vec<(usize, usize, i64)> {
        let n = self.n();
        match self.family {
            Family::A => (0..n.saturating_sub(1)).map(|i| (i, i + 1, -1)).collect(),
            Family::B => (0..n - 1).map(|i| (i, i + 1, -2)).collect(),
            Family::C => (0..n - 1)
                .map(|i| (i, i + 1, if i + 2 == n { -2 } else { -1 }))
                .collect(),
            Family::D => {
                let mut e: Vec<_> = (0..n - 2).map(|i| (i, i + 1, -1)).collect();
                e.push((n - 3, n - 1, -1));
                e
            }
            Family::E => {
                let mut e = vec![(0, 2, -1), (1, 3, -1)];
                e.extend((2..n - 1).map(|i| (i, i + 1, -1)));
                e
            }
            Family::F => vec![(0, 1, -2), (1, 2, -2), (2, 3, -1)],
            Family::G => vec![(0, 1, -3)],
        }
    }

    /// Symmetric bilinear form on simple roots, as a dense matrix.
    pub fn form(&self) -> Vec<Vec<i64>> {
        let n = self.n();
        let mut b = vec![vec![0i64; n]; n];
        for (i, l) in self.root_lengths().into_iter().enumerate() {
            b[i][i] = l;
        }
        for (i, j, v) in self.edges() {
            b[i][j] = v;
            b[j][i] = v;
        }
        b
    }

    /// Cartan matrix `a_ij = <α_i, α_j^∨> = 2(α_i, α_j)/(α_j, α_j)`.
    pub fn cartan(&self) -> Vec<Vec<i64>> {
        let b = self.form();
        let n = self.n();
        let mut a = vec![vec![0i64; n]; n];
        for i in 0..n {
            for j in 0..n {
                a[i][j] = 2 * b[i][j] / b[j][j];
            }
        }
        a
    }

    /// Permutation of nodes induced by `-w0`.
    pub fn minus_w0(&self) -> Vec<usize> {
        let n = self.n();
        let mut p: Vec<usize> = (0..n).collect();
        match self.family {
            Family::A => p.reverse(),
            Family::D if n % 2 == 1 => p.swap(n - 2, n - 1),
            Family::E if n == 6 => {
                p.swap(0, 5);
                p.swap(2, 4);
            }
            _ => {}
        }
        p
    }

    /// All diagram automorphisms, identity first.
    pub fn diagram_automorphisms(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let id: Vec<usize> = (0..n).collect();
        let mut out = vec![id.clone()];
        match self.family {
            Family::A if n >= 2 => out.push(id.iter().rev().copied().collect()),
            Family::D if n == 4 => {
                // S3 permuting the three outer nodes 0, 2, 3
                for (x, y, z) in [(0, 3, 2), (2, 0, 3), (2, 3, 0), (3, 0, 2), (3, 2, 0)] {
                    out.push(vec![x, 1, y, z]);
                }
            }
            Family::D => {
                let mut p = id.clone();
                p.swap(n - 2, n - 1);
                out.push(p);
            }
            Family::E if n == 6 => out.push(self.minus_w0()),
            _ => {}
        }
        out
    }

    /// Lie-theoretic group name used in reports (`SU(6)`, `Spin(11)`, `E7`).
    pub fn group_name(&self) -> String {
        let n = self.rank;
        match self.family {
            Family::A => format!("SU({})", n + 1),
            Family::B => format!("Spin({})", 2 * n + 1),
            Family::C => format!("Sp({n})"),
            Family::D => format!("Spin({})", 2 * n),
            Family::E => format!("E{n}"),
            Family::F => "F4".to_string(),
            Family::G => "G2".to_string(),
        }
    }
}

impl fmt::Display for SimpleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

impl FromStr for SimpleType {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let label: TypeLabel = s.parse()?;
        label.resolve().map(|(t, _)| t).map_err(|e| e.to_string())
    }
}

/// A possibly non-canonical Dynkin label such as `B1` or `D3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TypeLabel {
    pub family: Family,
    pub rank: u32,
}

/// How weight coordinates of an alias label map onto the canonical type.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WeightMap {
    Identity,
    /// D3 nodes (vector, spin, spin) onto A3 nodes (middle, end, end).
    D3ToA3,
}

impl WeightMap {
    pub fn apply(&self, coords: &[u32]) -> Vec<u32> {
        match self {
            WeightMap::Identity => coords.to_vec(),
            WeightMap::D3ToA3 => vec![coords[1], coords[0], coords[2]],
        }
    }
}

impl TypeLabel {
    pub fn resolve(&self) -> Result<(SimpleType, WeightMap), LieError> {
        match (self.family, self.rank) {
            (Family::B | Family::C, 1) => Ok((SimpleType::a(1), WeightMap::Identity)),
            (Family::D, 3) => Ok((SimpleType::a(3), WeightMap::D3ToA3)),
            (f, r) => SimpleType::new(f, r).map(|t| (t, WeightMap::Identity)),
        }
    }
}

impl fmt::Display for TypeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

impl FromStr for TypeLabel {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let mut chars = s.chars();
        let family = match chars.next() {
            Some('A') => Family::A,
            Some('B') => Family::B,
            Some('C') => Family::C,
            Some('D') => Family::D,
            Some('E') => Family::E,
            Some('F') => Family::F,
            Some('G') => Family::G,
            _ => return Err(format!("unknown Dynkin family in `{s}`")),
        };
        let rest = chars.as_str().trim_start_matches('_');
        let rank = rest
            .parse::<u32>()
            .map_err(|_| format!("bad rank in `{s}`"))?;
        Ok(TypeLabel { family, rank })
    }
}

impl From<SimpleType> for TypeLabel {
    fn from(t: SimpleType) -> Self {
        TypeLabel {
            family: t.family,
            rank: t.rank,
        }
    }
}

impl TryFrom<String> for SimpleType {
    type Error = String;

    fn try_from(s: String) -> Result<Self, Self::Error> {
        let l: TypeLabel = s.parse()?;
        SimpleType::new(l.family, l.rank).map_err(|e| e.to_string())
    }
}

impl From<SimpleType> for String {
    fn from(t: SimpleType) -> Self {
        t.to_string()
    }
}

/// Dominant integral weight in fundamental-weight coordinates.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct HighestWeight(pub Vec<u32>);

impl HighestWeight {
    pub fn zero(rank: usize) -> Self {
        HighestWeight(vec![0; rank])
    }

    /// The fundamental weight `ϖ_node`, with `node` in Bourbaki numbering.
    pub fn fundamental(rank: usize, node: usize) -> Self {
        let mut v = vec![0; rank];
        v[node - 1] = 1;
        HighestWeight(v)
    }

    pub fn coords(&self) -> &[u32] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn check(&self, ty: SimpleType) -> Result<(), LieError> {
        if self.0.len() == ty.n() {
            Ok(())
        } else {
            Err(LieError::WeightLength {
                ty,
                weight: self.0.clone(),
                len: self.0.len(),
                expected: ty.n(),
            })
        }
    }

    pub fn permuted(&self, perm: &[usize]) -> Self {
        let mut v = vec![0; self.0.len()];
        for (i, &p) in perm.iter().enumerate() {
            v[p] = self.0[i];
        }
        HighestWeight(v)
    }

    /// Smallest representative under diagram automorphisms of `ty`.
    pub fn canonical(&self, ty: SimpleType) -> Self {
        ty.diagram_automorphisms()
            .iter()
            .map(|p| self.permuted(p))
            .min()
            .unwrap_or_else(|| self.clone())
    }
}

impl fmt::Display for HighestWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str("]")
    }
}

impl From<Vec<u32>> for HighestWeight {
    fn from(v: Vec<u32>) -> Self {
        HighestWeight(v)
    }
}

/// A compact connected group presented as simple factors times a torus.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GroupSpec {
    pub simple_factors: Vec<SimpleType>,
    pub torus_rank: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub display_name: Option<String>,
    #[serde(default)]
    pub finite: bool,
}

impl GroupSpec {
    pub fn new(simple_factors: Vec<SimpleType>, torus_rank: u32) -> Self {
        GroupSpec {
            simple_factors,
            torus_rank,
            display_name: None,
            finite: false,
        }
    }

    pub fn simple(t: SimpleType) -> Self {
        GroupSpec::new(vec![t], 0)
    }

    pub fn finite() -> Self {
        GroupSpec {
            simple_factors: Vec::new(),
            torus_rank: 0,
            display_name: None,
            finite: true,
        }
    }

    pub fn torus(rank: u32) -> Self {
        GroupSpec::new(Vec::new(), rank)
    }

    pub fn named(mut self, name: impl Into<String>) -> Self {
        self.display_name = Some(name.into());
        self
    }

    pub fn rank(&self) -> u64 {
        if self.finite {
            return 0;
        }
        self.simple_factors
            .iter()
            .map(|t| t.rank() as u64)
            .sum::<u64>()
            + self.torus_rank as u64
    }

    pub fn dim(&self) -> u64 {
        if self.finite {
            return 0;
        }
        self.simple_factors.iter().map(SimpleType::dim).sum::<u64>() + self.torus_rank as u64
    }

    /// Direct product.
    pub fn product(&self, other: &GroupSpec) -> GroupSpec {
        let mut f = self.simple_factors.clone();
        f.extend(other.simple_factors.iter().copied());
        GroupSpec::new(f, self.torus_rank + other.torus_rank)
    }

    pub fn name(&self) -> String {
        if let Some(n) = &self.display_name {
            return n.clone();
        }
        if self.finite {
            return "1".to_string();
        }
        let mut parts: Vec<String> = self.simple_factors.iter().map(|t| t.group_name()).collect();
        if self.torus_rank > 0 {
            parts.push(format!("T{}", self.torus_rank));
        }
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("×")
        }
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}
