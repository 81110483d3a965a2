//! Kneser graphs `K(n, r)` and the objects a coloring is placed on.
//!
//! Vertices of `K(n, r)` are the `r`-subsets of `{1..n}` in colex order, so
//! for `r = 2` vertex `{i, j}` and edge `ij` of `K_n` share an index.

use std::fmt;
use std::str::FromStr;

use num_integer::binomial;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::subsets::{map_mask, SubsetSpace, MAX_GROUND_SET};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KneserGraph {
    space: SubsetSpace,
}

impl KneserGraph {
    /// Builds `K(n, r)` for `r >= 2` and `2r + 1 <= n <= 64`.
    pub fn build(n: usize, r: usize) -> Result<Self> {
        if r < 2 || n < 2 * r + 1 || n > MAX_GROUND_SET {
            return Err(Error::KneserRegime { n, r });
        }
        Ok(Self { space: SubsetSpace::new(n, r)? })
    }

    pub fn n(&self) -> usize {
        self.space.n()
    }

    pub fn r(&self) -> usize {
        self.space.r()
    }

    pub fn vertex_count(&self) -> usize {
        self.space.len()
    }

    /// Common degree `C(n - r, r)`.
    pub fn degree(&self) -> usize {
        binomial(self.n() - self.r(), self.r())
    }

    pub fn space(&self) -> &SubsetSpace {
        &self.space
    }

    /// Sorted 1-based labels of vertex `i`.
    pub fn vertex(&self, i: usize) -> Vec<usize> {
        self.space.elements(i)
    }

    #[inline]
    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        self.space.mask(i) & self.space.mask(j) == 0
    }

    pub fn neighbors(&self, i: usize) -> Vec<usize> {
        let m = self.space.mask(i);
        (0..self.vertex_count()).filter(|&j| self.space.mask(j) & m == 0).collect()
    }

    /// The permutation of vertex indices induced by `sigma`.
    pub fn induced_vertex_map(&self, sigma: &Permutation) -> Result<Permutation> {
        induced_map(&self.space, sigma)
    }
}

fn induced_map(space: &SubsetSpace, sigma: &Permutation) -> Result<Permutation> {
    if sigma.degree() != space.n() {
        return Err(Error::InvalidPermutation(format!(
            "permutation of degree {} cannot act on subsets of 1..={}",
            sigma.degree(),
            space.n()
        )));
    }
    let p = sigma.as_zero_based();
    let images = space.masks().iter().map(|&m| space.rank(map_mask(p, m))).collect();
    Permutation::from_zero_based(images)
}

/// What the colored objects are.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ObjectKind {
    /// Edges of `K_n`.
    CompleteGraphEdges,
    /// Vertices of `K(n, r)`.
    KneserVertices,
}

impl ObjectKind {
    pub fn as_str(self) -> &'static str {
        match self {
            ObjectKind::CompleteGraphEdges => "kn-edges",
            ObjectKind::KneserVertices => "kneser-vertices",
        }
    }
}

impl fmt::Display for ObjectKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ObjectKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "kn-edges" | "k4-edges" | "complete-graph-edges" | "edges" => Ok(ObjectKind::CompleteGraphEdges),
            "kneser-vertices" | "vertices" => Ok(ObjectKind::KneserVertices),
            other => Err(Error::InvalidLists(format!("unknown object kind {other:?}"))),
        }
    }
}

impl Serialize for ObjectKind {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

impl<'de> Deserialize<'de> for ObjectKind {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A canonically ordered set of colorable objects with the induced action
/// of `S_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColorableObjectSet {
    kind: ObjectKind,
    space: SubsetSpace,
}

impl ColorableObjectSet {
    pub fn new(kind: ObjectKind, n: usize, r: usize) -> Result<Self> {
        match kind {
            ObjectKind::CompleteGraphEdges => {
                if r != 2 {
                    return Err(Error::OutOfRange(format!("edges of K_n are 2-subsets, got r = {r}")));
                }
                edge_view(n)
            }
            ObjectKind::KneserVertices => Ok(Self::from(KneserGraph::build(n, r)?)),
        }
    }

    pub fn kind(&self) -> ObjectKind {
        self.kind
    }

    pub fn n(&self) -> usize {
        self.space.n()
    }

    pub fn r(&self) -> usize {
        self.space.r()
    }

    pub fn len(&self) -> usize {
        self.space.len()
    }

    pub fn is_empty(&self) -> bool {
        self.space.is_empty()
    }

    pub fn space(&self) -> &SubsetSpace {
        &self.space
    }

    pub fn label(&self, i: usize) -> String {
        self.space.label(i)
    }

    pub fn parse_label(&self, label: &str) -> Result<usize> {
        self.space.parse_label(label)
    }

    /// Index of edge `{a, b}` (1-based endpoints, any order).
    pub fn edge(&self, a: usize, b: usize) -> usize {
        self.space.pair_index(a.min(b), a.max(b))
    }

    /// Image of object `i` under a 0-based point permutation.
    #[inline]
    pub fn image(&self, perm: &[usize], i: usize) -> usize {
        self.space.image(perm, i)
    }

    pub fn induced_map(&self, sigma: &Permutation) -> Result<Permutation> {
        induced_map(&self.space, sigma)
    }

    /// The same objects viewed as vertices of `K(n, 2)`.
    pub fn as_kneser_vertices(&self) -> Result<KneserGraph> {
        KneserGraph::build(self.n(), self.r())
    }
}

impl From<KneserGraph> for ColorableObjectSet {
    fn from(g: KneserGraph) -> Self {
        Self { kind: ObjectKind::KneserVertices, space: g.space }
    }
}

/// The `C(n, 2)` edges of `K_n` in colex order.
pub fn edge_view(n: usize) -> Result<ColorableObjectSet> {
    if n < 3 {
        return Err(Error::OutOfRange(format!("K_n edge view needs n >= 3, got {n}")));
    }
    Ok(ColorableObjectSet { kind: ObjectKind::CompleteGraphEdges, space: SubsetSpace::new(n, 2)? })
}
