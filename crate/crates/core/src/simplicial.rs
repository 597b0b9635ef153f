//! Finite simplicial complexes on the vertex set `{0, ..., n-1}` and their
//! reduced cohomology over a field.
//!
//! The void complex (no faces) and the irrelevant complex (only the empty
//! face) are distinct: the latter has `H̃^{-1} = k`, the former has no
//! cohomology at all.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{Error, Result};
use crate::linalg::{rank, FieldSpec, SparseMatrix};

pub const MAX_VERTICES: usize = 64;

/// A face, stored as a vertex bitmask.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Face(u64);

impl Face {
    pub const EMPTY: Face = Face(0);

    pub fn from_bits(bits: u64) -> Self {
        Face(bits)
    }

    pub fn from_vertices(vertices: &[usize]) -> Result<Self> {
        let mut bits = 0u64;
        for &v in vertices {
            if v >= MAX_VERTICES {
                return Err(Error::Range(format!("vertex {v} exceeds {MAX_VERTICES}")));
            }
            bits |= 1 << v;
        }
        Ok(Face(bits))
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// `|F| - 1`; the empty face has dimension -1.
    pub fn dim(self) -> i64 {
        self.len() as i64 - 1
    }

    pub fn contains(self, v: usize) -> bool {
        v < MAX_VERTICES && self.0 & (1 << v) != 0
    }

    pub fn with(self, v: usize) -> Face {
        Face(self.0 | (1 << v))
    }

    pub fn is_subset_of(self, other: Face) -> bool {
        self.0 & !other.0 == 0
    }

    /// Sorted vertex list.
    pub fn vertices(self) -> Vec<usize> {
        (0..MAX_VERTICES).filter(|&v| self.contains(v)).collect()
    }

    /// All subsets of this face, including the empty face and itself.
    pub fn subfaces(self) -> impl Iterator<Item = Face> {
        let full = self.0;
        let mut next = Some(full);
        std::iter::from_fn(move || {
            let cur = next?;
            next = if cur == 0 {
                None
            } else {
                Some((cur - 1) & full)
            };
            Some(Face(cur))
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    n_vertices: usize,
    faces: BTreeSet<Face>,
}

impl SimplicialComplex {
    fn check_n(n_vertices: usize) -> Result<()> {
        if n_vertices > MAX_VERTICES {
            return Err(Error::Range(format!(
                "{n_vertices} vertices exceeds the supported {MAX_VERTICES}"
            )));
        }
        Ok(())
    }

    /// The complex with no faces at all.
    pub fn void(n_vertices: usize) -> Result<Self> {
        Self::check_n(n_vertices)?;
        Ok(SimplicialComplex {
            n_vertices,
            faces: BTreeSet::new(),
        })
    }

    /// The complex `{∅}`.
    pub fn irrelevant(n_vertices: usize) -> Result<Self> {
        let mut c = Self::void(n_vertices)?;
        c.faces.insert(Face::EMPTY);
        Ok(c)
    }

    /// Downward closure of the given facets. An empty facet list gives the
    /// void complex; `[[]]` gives `{∅}`.
    pub fn from_facets(n_vertices: usize, facets: &[Vec<usize>]) -> Result<Self> {
        let mut c = Self::void(n_vertices)?;
        for facet in facets {
            let f = Face::from_vertices(facet)?;
            c.check_face(f)?;
            c.faces.extend(f.subfaces());
        }
        Ok(c)
    }

    /// Builds a complex from an explicit face family, which must already be
    /// closed under taking subsets.
    pub fn from_faces(n_vertices: usize, faces: impl IntoIterator<Item = Face>) -> Result<Self> {
        let mut c = Self::void(n_vertices)?;
        for f in faces {
            c.check_face(f)?;
            c.faces.insert(f);
        }
        for &f in &c.faces {
            for v in f.vertices() {
                if !c.faces.contains(&Face(f.0 & !(1 << v))) {
                    return Err(Error::Domain(format!(
                        "face family not closed under subsets: {:?} lacks a facet",
                        f.vertices()
                    )));
                }
            }
        }
        Ok(c)
    }

    fn check_face(&self, f: Face) -> Result<()> {
        if self.n_vertices < MAX_VERTICES && f.0 >> self.n_vertices != 0 {
            return Err(Error::Range(format!(
                "face {:?} uses a vertex outside 0..{}",
                f.vertices(),
                self.n_vertices
            )));
        }
        Ok(())
    }

    pub fn n_vertices(&self) -> usize {
        self.n_vertices
    }

    pub fn is_void(&self) -> bool {
        self.faces.is_empty()
    }

    pub fn is_irrelevant(&self) -> bool {
        self.faces.len() == 1 && self.faces.contains(&Face::EMPTY)
    }

    pub fn contains(&self, f: Face) -> bool {
        self.faces.contains(&f)
    }

    pub fn faces(&self) -> impl Iterator<Item = Face> + '_ {
        self.faces.iter().copied()
    }

    pub fn n_faces(&self) -> usize {
        self.faces.len()
    }

    /// Faces of dimension `d`, in a fixed order.
    pub fn faces_of_dim(&self, d: i64) -> Vec<Face> {
        self.faces
            .iter()
            .copied()
            .filter(|f| f.dim() == d)
            .collect()
    }

    pub fn dim(&self) -> Option<i64> {
        self.faces.iter().map(|f| f.dim()).max()
    }

    /// Maximal faces, each as a sorted vertex list, sorted lexicographically.
    pub fn facets(&self) -> Vec<Vec<usize>> {
        let mut out: Vec<Vec<usize>> = self
            .faces
            .iter()
            .filter(|&&f| {
                (0..self.n_vertices).all(|v| f.contains(v) || !self.faces.contains(&f.with(v)))
            })
            .map(|f| f.vertices())
            .collect();
        out.sort();
        out
    }

    /// Coboundary `δ^d : C^d -> C^{d+1}` with rows indexed by
    /// `faces_of_dim(d + 1)` and columns by `faces_of_dim(d)`.
    /// The sign of `F -> F ∪ {v}` is `(-1)^(position of v in F ∪ {v})`.
    pub fn coboundary(&self, d: i64) -> SparseMatrix {
        let lower = self.faces_of_dim(d);
        let upper = self.faces_of_dim(d + 1);
        let col_of: BTreeMap<Face, usize> =
            lower.iter().enumerate().map(|(k, &f)| (f, k)).collect();
        let mut m = SparseMatrix::zeros(upper.len(), lower.len());
        for (row, &g) in upper.iter().enumerate() {
            for v in g.vertices() {
                let f = Face(g.0 & !(1 << v));
                let position = (g.0 & ((1u64 << v) - 1)).count_ones();
                let sign = if position.is_multiple_of(2) { 1 } else { -1 };
                // lower contains f by downward closure
                m.set(row, col_of[&f], sign).expect("index in range");
            }
        }
        m
    }

    /// `dim_k H̃^d(Δ; k)` for every `d >= -1`, zero entries omitted.
    pub fn reduced_cohomology_dims(&self, field: FieldSpec) -> BTreeMap<i64, usize> {
        let mut dims = BTreeMap::new();
        let Some(top) = self.dim() else {
            return dims;
        };
        // ranks[d + 1] = rank δ^d for d in -1..=top; δ^top is zero.
        let ranks: Vec<usize> = (-1..=top)
            .map(|d| {
                if d == top {
                    0
                } else {
                    rank(&self.coboundary(d), field)
                }
            })
            .collect();
        for d in -1..=top {
            let c = self.faces_of_dim(d).len();
            let out_rank = ranks[(d + 1) as usize];
            let in_rank = if d == -1 { 0 } else { ranks[d as usize] };
            let h = c - out_rank - in_rank;
            if h > 0 {
                dims.insert(d, h);
            }
        }
        dims
    }

    /// True iff `F ∪ {v}` is a face for every face `F`.
    pub fn is_cone(&self, v: usize) -> Result<bool> {
        if self.is_void() {
            return Err(Error::Domain("cone test on the void complex".into()));
        }
        if v >= self.n_vertices {
            return Err(Error::Range(format!(
                "vertex {v} outside 0..{}",
                self.n_vertices
            )));
        }
        Ok(self.faces.iter().all(|f| self.faces.contains(&f.with(v))))
    }

    /// `Σ_{d >= -1} (-1)^d · #(d-faces)`.
    pub fn euler_characteristic_reduced(&self) -> i64 {
        self.faces
            .iter()
            .map(|f| if f.dim().rem_euclid(2) == 0 { 1 } else { -1 })
            .sum()
    }
}

impl fmt::Display for SimplicialComplex {
    /// `void`, `{∅}`, or the facet list such as `{{0,1}, {2}}`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (0..self.n_vertices).map(|v| v.to_string()).collect();
        f.write_str(&format_complex(self, &names))
    }
}

/// Renders a complex as a sorted facet list using the given vertex names.
pub fn format_complex(complex: &SimplicialComplex, names: &[String]) -> String {
    if complex.is_void() {
        return "void".to_string();
    }
    if complex.is_irrelevant() {
        return "{∅}".to_string();
    }
    let facets: Vec<String> = complex
        .facets()
        .into_iter()
        .map(|facet| {
            let vs: Vec<&str> = facet.iter().map(|&v| names[v].as_str()).collect();
            format!("{{{}}}", vs.join(","))
        })
        .collect();
    format!("{{{}}}", facets.join(", "))
}
