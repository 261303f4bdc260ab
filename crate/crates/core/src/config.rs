//! Lattice point configurations, their faces, and normalized volumes.

use std::collections::{BTreeSet, HashSet};
use std::fmt;

use crate::error::{Error, Result};
use crate::linalg;

/// A labeled, full-dimensional finite set of lattice points in `Z^d`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointConfiguration {
    points: Vec<Vec<i64>>,
    labels: Vec<String>,
    dim: usize,
}

/// Sorted indices of `d + 1` affinely independent configuration points.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Simplex(Vec<usize>);

/// A face of `conv(A)` together with every point of `A` lying on it.
///
/// Points on the face satisfy `normal · p == offset`; every other point
/// satisfies `normal · p > offset`. The polytope itself has a zero normal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Face {
    pub point_indices: Vec<usize>,
    pub supporting_normal: Vec<i64>,
    pub offset: i64,
    pub dim: usize,
}

impl Simplex {
    pub fn new(mut indices: Vec<usize>) -> Self {
        indices.sort_unstable();
        Simplex(indices)
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn contains(&self, i: usize) -> bool {
        self.0.binary_search(&i).is_ok()
    }
}

impl From<Vec<usize>> for Simplex {
    fn from(v: Vec<usize>) -> Self {
        Simplex::new(v)
    }
}

impl PointConfiguration {
    pub fn new(points: Vec<Vec<i64>>, labels: Vec<String>) -> Result<Self> {
        let Some(first) = points.first() else {
            return Err(Error::EmptyConfiguration);
        };
        if labels.len() != points.len() {
            return Err(Error::LabelCountMismatch {
                points: points.len(),
                labels: labels.len(),
            });
        }
        let dim = first.len();
        for (index, p) in points.iter().enumerate() {
            if p.len() != dim {
                return Err(Error::DimensionMismatch {
                    index,
                    expected: dim,
                    found: p.len(),
                });
            }
        }
        let mut seen = HashSet::new();
        for p in &points {
            if !seen.insert(p) {
                return Err(Error::DuplicatePoint(p.clone()));
            }
        }
        let mut seen = HashSet::new();
        for l in &labels {
            if !seen.insert(l) {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }
        let refs: Vec<&[i64]> = points.iter().map(Vec::as_slice).collect();
        let rank = linalg::affine_rank(&refs);
        if rank != dim || dim == 0 {
            return Err(Error::NotFullDimensional { rank, dim });
        }
        Ok(PointConfiguration {
            points,
            labels,
            dim,
        })
    }

    /// Labels `a, b, c, ...` in point order.
    pub fn with_default_labels(points: Vec<Vec<i64>>) -> Result<Self> {
        let labels = default_labels(points.len());
        Self::new(points, labels)
    }

    /// The lattice points `0, 1, ..., len` on a line.
    pub fn interval(len: usize) -> Result<Self> {
        Self::with_default_labels((0..=len as i64).map(|x| vec![x]).collect())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[Vec<i64>] {
        &self.points
    }

    pub fn point(&self, i: usize) -> &[i64] {
        &self.points[i]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of_label(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub(crate) fn refs<'a>(&'a self, indices: &[usize]) -> Vec<&'a [i64]> {
        indices.iter().map(|&i| self.points[i].as_slice()).collect()
    }

    /// Checks that `indices` could name a simplex of this configuration.
    pub fn check_simplex(&self, s: &Simplex) -> Result<()> {
        let v = s.vertices();
        let distinct = v.windows(2).all(|w| w[0] < w[1]);
        if v.len() != self.dim + 1 || !distinct || v.iter().any(|&i| i >= self.len()) {
            return Err(Error::InvalidSimplex {
                indices: v.to_vec(),
                expected: self.dim + 1,
            });
        }
        Ok(())
    }

    /// Signed determinant `det(v_1 - v_0, ..., v_d - v_0)`.
    pub fn signed_volume(&self, s: &Simplex) -> Result<i128> {
        self.check_simplex(s)?;
        Ok(linalg::orientation(&self.refs(s.vertices())))
    }

    /// Lattice-normalized volume; the unit simplex has volume 1.
    pub fn normalized_volume(&self, s: &Simplex) -> Result<u64> {
        let v = self.signed_volume(s)?;
        if v == 0 {
            return Err(Error::DegenerateSimplex(s.vertices().to_vec()));
        }
        Ok(v.unsigned_abs() as u64)
    }

    /// Every full-dimensional simplex on the configuration, in lexicographic
    /// order of vertex indices.
    pub fn all_simplices(&self) -> Vec<Simplex> {
        combinations(self.len(), self.dim + 1)
            .into_iter()
            .filter(|c| linalg::orientation(&self.refs(c)) != 0)
            .map(Simplex)
            .collect()
    }

    /// All faces of `conv(A)`, from vertices up to the polytope itself,
    /// sorted by dimension and then by point indices.
    pub fn faces(&self) -> Vec<Face> {
        let facets = self.facets();
        let mut sets: BTreeSet<Vec<usize>> = facets.iter().map(|f| f.point_indices.clone()).collect();
        // Proper faces are exactly the nonempty intersections of facets.
        let mut frontier: Vec<Vec<usize>> = sets.iter().cloned().collect();
        while let Some(face) = frontier.pop() {
            for facet in &facets {
                let meet: Vec<usize> = face
                    .iter()
                    .copied()
                    .filter(|i| facet.point_indices.binary_search(i).is_ok())
                    .collect();
                if !meet.is_empty() && sets.insert(meet.clone()) {
                    frontier.push(meet);
                }
            }
        }

        let mut faces: Vec<Face> = sets
            .into_iter()
            .map(|points| {
                let mut normal = vec![0i64; self.dim];
                let mut offset = 0i64;
                for f in facets.iter().filter(|f| is_subset(&points, &f.point_indices)) {
                    for (n, x) in normal.iter_mut().zip(&f.supporting_normal) {
                        *n += x;
                    }
                    offset += f.offset;
                }
                let dim = linalg::affine_rank(&self.refs(&points));
                Face {
                    point_indices: points,
                    supporting_normal: normal,
                    offset,
                    dim,
                }
            })
            .collect();
        faces.push(Face {
            point_indices: (0..self.len()).collect(),
            supporting_normal: vec![0; self.dim],
            offset: 0,
            dim: self.dim,
        });
        faces.sort_by(|a, b| (a.dim, &a.point_indices).cmp(&(b.dim, &b.point_indices)));
        faces
    }

    /// Facets of `conv(A)` with inward primitive normals.
    pub fn facets(&self) -> Vec<Face> {
        let mut out: Vec<Face> = Vec::new();
        let mut seen = HashSet::new();
        for base in combinations(self.len(), self.dim) {
            let refs = self.refs(&base);
            if linalg::affine_rank(&refs) + 1 != self.dim {
                continue;
            }
            let Some((normal, offset)) = self.hyperplane_through(&base) else {
                continue;
            };
            let values: Vec<i128> = self
                .points
                .iter()
                .map(|p| dot(&normal, p) - offset as i128)
                .collect();
            let sign = if values.iter().all(|&v| v >= 0) {
                1
            } else if values.iter().all(|&v| v <= 0) {
                -1
            } else {
                continue;
            };
            let on: Vec<usize> = (0..self.len()).filter(|&i| values[i] == 0).collect();
            if !seen.insert(on.clone()) {
                continue;
            }
            out.push(Face {
                point_indices: on,
                supporting_normal: normal.iter().map(|x| sign * x).collect(),
                offset: sign * offset,
                dim: self.dim - 1,
            });
        }
        out.sort_by(|a, b| a.point_indices.cmp(&b.point_indices));
        out
    }

    /// Primitive affine functional `normal · x - offset` vanishing on the
    /// `d` given points, or `None` if they do not span a hyperplane.
    pub(crate) fn hyperplane_through(&self, base: &[usize]) -> Option<(Vec<i64>, i64)> {
        let mut refs = self.refs(base);
        let origin = vec![0i64; self.dim];
        refs.push(&origin);
        let c0 = linalg::orientation(&refs);
        let mut normal = Vec::with_capacity(self.dim);
        for k in 0..self.dim {
            let mut e = vec![0i64; self.dim];
            e[k] = 1;
            let mut r = self.refs(base);
            r.push(&e);
            normal.push(linalg::orientation(&r) - c0);
        }
        let g = normal.iter().fold(c0, |g, &x| num_integer::gcd(g, x));
        if normal.iter().all(|&x| x == 0) {
            return None;
        }
        Some((
            normal.iter().map(|&x| (x / g) as i64).collect(),
            (-c0 / g) as i64,
        ))
    }

    /// Vertices of `conv(A)`.
    pub fn vertices(&self) -> Vec<usize> {
        self.faces()
            .into_iter()
            .filter(|f| f.dim == 0)
            .map(|f| f.point_indices[0])
            .collect()
    }

    /// Normalized lattice volume of `conv(A)`, computed from a fan
    /// triangulation through the face lattice.
    pub fn lattice_volume(&self) -> u64 {
        self.fan_triangulation()
            .iter()
            .map(|s| self.normalized_volume(s).expect("fan simplices are full-dimensional"))
            .sum()
    }

    /// Pulling triangulation of `conv(A)` from its lowest-index vertex,
    /// recursively on faces. Uses only vertices of the polytope.
    pub fn fan_triangulation(&self) -> Vec<Simplex> {
        let faces = self.faces();
        let top = faces.last().expect("polytope face");
        fan(&faces, top)
            .into_iter()
            .map(Simplex::new)
            .collect()
    }

    /// Points of `A` that are not vertices of `conv(A)`.
    pub fn non_vertices(&self) -> Vec<usize> {
        let v = self.vertices();
        (0..self.len()).filter(|i| !v.contains(i)).collect()
    }
}

fn fan(faces: &[Face], face: &Face) -> Vec<Vec<usize>> {
    if face.dim == 0 {
        return vec![vec![face.point_indices[0]]];
    }
    let apex = faces
        .iter()
        .find(|f| f.dim == 0 && is_subset(&f.point_indices, &face.point_indices))
        .map(|f| f.point_indices[0])
        .expect("every face has a vertex");
    let mut out = Vec::new();
    for sub in faces.iter().filter(|f| {
        f.dim + 1 == face.dim
            && is_subset(&f.point_indices, &face.point_indices)
            && !f.point_indices.contains(&apex)
    }) {
        for mut s in fan(faces, sub) {
            s.push(apex);
            out.push(s);
        }
    }
    out
}

fn is_subset(small: &[usize], big: &[usize]) -> bool {
    small.iter().all(|i| big.binary_search(i).is_ok())
}

fn dot(n: &[i64], p: &[i64]) -> i128 {
    n.iter().zip(p).map(|(&a, &b)| a as i128 * b as i128).sum()
}

/// All `k`-subsets of `0..n` in lexicographic order.
pub(crate) fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut c: Vec<usize> = (0..k).collect();
    loop {
        out.push(c.clone());
        let Some(i) = (0..k).rev().find(|&i| c[i] != i + n - k) else {
            return out;
        };
        c[i] += 1;
        for j in i + 1..k {
            c[j] = c[j - 1] + 1;
        }
    }
}

/// `a, b, ..., z, a1, b1, ...`
pub fn default_labels(n: usize) -> Vec<String> {
    (0..n)
        .map(|i| {
            let letter = (b'a' + (i % 26) as u8) as char;
            match i / 26 {
                0 => letter.to_string(),
                k => format!("{letter}{k}"),
            }
        })
        .collect()
}

impl fmt::Display for PointConfiguration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .labels
            .iter()
            .zip(&self.points)
            .map(|(l, p)| {
                let coords: Vec<String> = p.iter().map(i64::to_string).collect();
                format!("{l}=({})", coords.join(","))
            })
            .collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}
