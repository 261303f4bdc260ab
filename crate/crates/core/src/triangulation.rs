//! Triangulations of point configurations: exhaustive enumeration, the
//! regularity (coherence) test, and GKZ vectors.

use std::collections::{BTreeSet, HashMap};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::config::{PointConfiguration, Simplex};
use crate::error::{Error, Result};
use crate::linalg;
use crate::lp::{LinearProgram, LpOutcome, Relation};

/// Default bound on the number of points accepted by enumeration.
pub const DEFAULT_CAP: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Triangulation {
    simplices: Vec<Simplex>,
    used_points: BTreeSet<usize>,
}

impl Triangulation {
    pub fn new(mut simplices: Vec<Simplex>) -> Self {
        simplices.sort();
        simplices.dedup();
        let used_points = simplices
            .iter()
            .flat_map(|s| s.vertices().iter().copied())
            .collect();
        Triangulation {
            simplices,
            used_points,
        }
    }

    pub fn simplices(&self) -> &[Simplex] {
        &self.simplices
    }

    pub fn used_points(&self) -> &BTreeSet<usize> {
        &self.used_points
    }

    pub fn unused_points(&self, config: &PointConfiguration) -> Vec<usize> {
        (0..config.len())
            .filter(|i| !self.used_points.contains(i))
            .collect()
    }

    /// Checks full-dimensionality, pairwise proper intersection, and that
    /// the volumes add up to the volume of `conv(A)`.
    pub fn validate(&self, config: &PointConfiguration) -> Result<()> {
        if self.simplices.is_empty() {
            return Err(Error::InvalidTriangulation("no simplices".into()));
        }
        let mut total = 0;
        for s in &self.simplices {
            total += config.normalized_volume(s)?;
        }
        let expected = config.lattice_volume();
        if total != expected {
            return Err(Error::InvalidTriangulation(format!(
                "simplex volumes sum to {total}, polytope volume is {expected}"
            )));
        }
        for (i, s) in self.simplices.iter().enumerate() {
            for t in &self.simplices[i + 1..] {
                if !intersect_properly(config, s, t) {
                    return Err(Error::InvalidTriangulation(format!(
                        "{:?} and {:?} overlap",
                        s.vertices(),
                        t.vertices()
                    )));
                }
            }
        }
        Ok(())
    }
}

/// Heights whose lower envelope induces a triangulation, with the minimum
/// gap by which every off-simplex point clears each simplex's affine lift.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HeightCertificate {
    pub heights: Vec<BigRational>,
    pub slack: BigRational,
}

impl HeightCertificate {
    /// Re-checks the certificate from scratch.
    pub fn verify(&self, config: &PointConfiguration, t: &Triangulation) -> bool {
        if !self.slack.is_positive() || self.heights.len() != config.len() {
            return false;
        }
        t.simplices().iter().all(|s| {
            let verts = config.refs(s.vertices());
            (0..config.len()).filter(|&j| !s.contains(j)).all(|j| {
                let lambda = linalg::barycentric(&verts, config.point(j));
                let lifted: BigRational = lambda
                    .iter()
                    .zip(s.vertices())
                    .map(|(l, &v)| l * &self.heights[v])
                    .sum();
                lifted <= &self.heights[j] - &self.slack
            })
        })
    }
}

/// Exponent vector of a triangulation: each point gets the total normalized
/// volume of the simplices it is a vertex of.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GkzVector(pub Vec<u64>);

impl GkzVector {
    pub fn total(&self) -> u64 {
        self.0.iter().sum()
    }
}

pub fn gkz_vector(config: &PointConfiguration, t: &Triangulation) -> GkzVector {
    let mut exps = vec![0u64; config.len()];
    for s in t.simplices() {
        let vol = config
            .normalized_volume(s)
            .expect("triangulation simplices are full-dimensional");
        for &v in s.vertices() {
            exps[v] += vol;
        }
    }
    GkzVector(exps)
}

/// Whether two full-dimensional simplices meet in a common face.
///
/// They fail to do so exactly when some affine dependence among their
/// vertices is nonnegative off `t` and nonpositive off `s`, i.e. a circuit
/// with its positive part in `s` and negative part in `t`.
pub fn intersect_properly(config: &PointConfiguration, s: &Simplex, t: &Simplex) -> bool {
    if s == t {
        return true;
    }
    let mut support: Vec<usize> = s.vertices().to_vec();
    support.extend(t.vertices().iter().filter(|v| !s.contains(**v)));
    let m = support.len();
    let mut lp = LinearProgram::new(m);
    let mut normalize = vec![BigRational::zero(); m];
    for (k, &v) in support.iter().enumerate() {
        let in_s = s.contains(v);
        let in_t = t.contains(v);
        if in_s && in_t {
            lp.set_free(k);
        } else if in_s {
            normalize[k] = BigRational::one();
        }
    }
    // Coefficients on t-only points are stored negated so all are >= 0.
    let coef = |k: usize, x: i64| {
        let v = support[k];
        let q = BigRational::from_integer(BigInt::from(x));
        if t.contains(v) && !s.contains(v) {
            -q
        } else {
            q
        }
    };
    for axis in 0..=config.dim() {
        let row = (0..m)
            .map(|k| {
                let x = if axis == 0 {
                    1
                } else {
                    config.point(support[k])[axis - 1]
                };
                coef(k, x)
            })
            .collect();
        lp.add_constraint(row, Relation::Eq, BigRational::zero());
    }
    lp.add_constraint(normalize, Relation::Eq, BigRational::one());
    !lp.solve().is_feasible()
}

/// All triangulations of `conv(A)` using any subset of the points, in
/// lexicographic order of their sorted simplex lists.
pub fn enumerate_triangulations(config: &PointConfiguration, cap: usize) -> Result<Vec<Triangulation>> {
    if config.len() > cap {
        return Err(Error::CapExceeded {
            points: config.len(),
            cap,
        });
    }
    let mut search = Search::new(config);
    let mut found = Vec::new();
    for root in 0..search.simplices.len() {
        let mut state = State::new(search.facets.len());
        search.push(&mut state, root);
        search.extend(&mut state, root, &mut found);
    }
    let mut out: Vec<Triangulation> = found
        .into_iter()
        .map(|ids| Triangulation::new(ids.into_iter().map(|i| search.simplices[i].clone()).collect()))
        .collect();
    out.sort();
    Ok(out)
}

/// A regularity certificate for `t`, or `None` if no lifting induces it.
///
/// Solves `max s` over heights `w` (gauged to zero on the first simplex)
/// with `s <= 1`, requiring the piecewise-linear interpolant of `w` to fold
/// upward by at least `s` across every interior facet and every unused
/// point to sit at least `s` above it. Local convexity across facets is
/// global convexity, so a positive optimum certifies regularity; the
/// reported slack is then re-measured over all simplex/point pairs.
pub fn is_coherent(config: &PointConfiguration, t: &Triangulation) -> Option<HeightCertificate> {
    let n = config.len();
    let slack_var = n;
    let mut lp = LinearProgram::new(n + 1);
    for v in 0..=n {
        lp.set_free(v);
    }
    let mut objective = vec![BigRational::zero(); n + 1];
    objective[slack_var] = BigRational::one();
    lp.maximize(objective);

    let unit = |k: usize| {
        let mut row = vec![BigRational::zero(); n + 1];
        row[k] = BigRational::one();
        row
    };
    lp.add_constraint(unit(slack_var), Relation::Le, BigRational::one());
    if let Some(first) = t.simplices().first() {
        for &v in first.vertices() {
            lp.add_constraint(unit(v), Relation::Eq, BigRational::zero());
        }
    }
    let mut above = |s: &Simplex, j: usize| {
        let lambda = linalg::barycentric(&config.refs(s.vertices()), config.point(j));
        let mut row = unit(j);
        for (l, &v) in lambda.iter().zip(s.vertices()) {
            row[v] -= l;
        }
        row[slack_var] = -BigRational::one();
        lp.add_constraint(row, Relation::Ge, BigRational::zero());
    };
    let simplices = t.simplices();
    for (a, s) in simplices.iter().enumerate() {
        for r in &simplices[a + 1..] {
            let shared = s.vertices().iter().filter(|v| r.contains(**v)).count();
            if shared == config.dim() {
                let apex = *r.vertices().iter().find(|v| !s.contains(**v)).expect("apex");
                above(s, apex);
            }
        }
    }
    for j in t.unused_points(config) {
        let host = simplices
            .iter()
            .find(|s| {
                linalg::barycentric(&config.refs(s.vertices()), config.point(j))
                    .iter()
                    .all(|l| !l.is_negative())
            })
            .expect("triangulation covers every point");
        above(host, j);
    }

    match lp.solve() {
        LpOutcome::Optimal { value, mut solution } if value.is_positive() => {
            solution.truncate(n);
            let slack = min_clearance(config, t, &solution)?;
            Some(HeightCertificate {
                heights: solution,
                slack,
            })
        }
        _ => None,
    }
}

/// Smallest `w_j - l_sigma(p_j)` over simplices `sigma` and points `j` off
/// them, or `None` if it is not positive.
fn min_clearance(
    config: &PointConfiguration,
    t: &Triangulation,
    heights: &[BigRational],
) -> Option<BigRational> {
    let mut best: Option<BigRational> = None;
    for s in t.simplices() {
        let verts = config.refs(s.vertices());
        for j in (0..config.len()).filter(|&j| !s.contains(j)) {
            let lambda = linalg::barycentric(&verts, config.point(j));
            let lifted: BigRational = lambda
                .iter()
                .zip(s.vertices())
                .map(|(l, &v)| l * &heights[v])
                .sum();
            let gap = &heights[j] - lifted;
            if best.as_ref().is_none_or(|b| gap < *b) {
                best = Some(gap);
            }
        }
    }
    // A single simplex with no other points: any slack works.
    let best = best.unwrap_or_else(BigRational::one);
    best.is_positive().then_some(best)
}

pub fn enumerate_coherent_triangulations(
    config: &PointConfiguration,
    cap: usize,
) -> Result<Vec<(Triangulation, HeightCertificate)>> {
    Ok(enumerate_triangulations(config, cap)?
        .into_iter()
        .filter_map(|t| is_coherent(config, &t).map(|c| (t, c)))
        .collect())
}

/// The regular subdivision induced by lifting point `i` to `heights[i]`,
/// provided every lower cell is a simplex.
pub fn triangulation_from_heights(
    config: &PointConfiguration,
    heights: &[BigRational],
) -> Result<Triangulation> {
    if heights.len() != config.len() {
        return Err(Error::HeightCountMismatch {
            expected: config.len(),
            found: heights.len(),
        });
    }
    let mut cells = Vec::new();
    for s in config.all_simplices() {
        let verts = config.refs(s.vertices());
        let mut on_plane = Vec::new();
        let mut lower = true;
        for j in (0..config.len()).filter(|&j| !s.contains(j)) {
            let lambda = linalg::barycentric(&verts, config.point(j));
            let lifted: BigRational = lambda
                .iter()
                .zip(s.vertices())
                .map(|(l, &v)| l * &heights[v])
                .sum();
            if heights[j] < lifted {
                lower = false;
                break;
            }
            if heights[j] == lifted {
                on_plane.push(j);
            }
        }
        if !lower {
            continue;
        }
        if !on_plane.is_empty() {
            let mut cell = s.vertices().to_vec();
            cell.extend(on_plane);
            cell.sort_unstable();
            return Err(Error::NonGenericHeights(cell));
        }
        cells.push(s);
    }
    Ok(Triangulation::new(cells))
}

struct Facet {
    boundary: bool,
    // (simplex id, orientation sign of the simplex's apex across this facet)
    cofaces: Vec<(usize, i8)>,
}

struct Search<'a> {
    config: &'a PointConfiguration,
    simplices: Vec<Simplex>,
    facets: Vec<Facet>,
    // per simplex: (facet id, apex side)
    facets_of: Vec<Vec<(usize, i8)>>,
    compatible: HashMap<(usize, usize), bool>,
}

struct State {
    chosen: Vec<usize>,
    count: Vec<u8>,
    // open interior facet -> apex side of the simplex already on it
    open: BTreeSet<usize>,
    side: Vec<i8>,
}

impl State {
    fn new(facets: usize) -> Self {
        State {
            chosen: Vec::new(),
            count: vec![0; facets],
            open: BTreeSet::new(),
            side: vec![0; facets],
        }
    }
}

impl<'a> Search<'a> {
    fn new(config: &'a PointConfiguration) -> Self {
        let simplices = config.all_simplices();
        let mut ids: HashMap<Vec<usize>, usize> = HashMap::new();
        let mut keys: Vec<Vec<usize>> = Vec::new();
        let mut facets_of = Vec::with_capacity(simplices.len());
        for s in &simplices {
            let mut mine = Vec::new();
            for skip in 0..s.vertices().len() {
                let facet: Vec<usize> = s
                    .vertices()
                    .iter()
                    .enumerate()
                    .filter(|&(k, _)| k != skip)
                    .map(|(_, &v)| v)
                    .collect();
                let apex = s.vertices()[skip];
                let mut pts = config.refs(&facet);
                pts.push(config.point(apex));
                let side = linalg::orientation(&pts).signum() as i8;
                let id = *ids.entry(facet.clone()).or_insert_with(|| {
                    keys.push(facet);
                    keys.len() - 1
                });
                mine.push((id, side));
            }
            facets_of.push(mine);
        }

        // Renumber facets in lexicographic order so the branching choice is
        // independent of discovery order.
        let mut order: Vec<usize> = (0..keys.len()).collect();
        order.sort_by(|&a, &b| keys[a].cmp(&keys[b]));
        let mut rank = vec![0; keys.len()];
        for (r, &old) in order.iter().enumerate() {
            rank[old] = r;
        }
        let mut facets: Vec<Facet> = order
            .iter()
            .map(|&old| Facet {
                boundary: is_boundary(config, &keys[old]),
                cofaces: Vec::new(),
            })
            .collect();
        for (sid, mine) in facets_of.iter_mut().enumerate() {
            for (id, side) in mine.iter_mut() {
                *id = rank[*id];
                facets[*id].cofaces.push((sid, *side));
            }
        }
        Search {
            config,
            simplices,
            facets,
            facets_of,
            compatible: HashMap::new(),
        }
    }

    fn compatible(&mut self, a: usize, b: usize) -> bool {
        let key = (a.min(b), a.max(b));
        if let Some(&c) = self.compatible.get(&key) {
            return c;
        }
        let c = intersect_properly(self.config, &self.simplices[a], &self.simplices[b]);
        self.compatible.insert(key, c);
        c
    }

    fn push(&self, state: &mut State, sid: usize) {
        state.chosen.push(sid);
        for &(fid, side) in &self.facets_of[sid] {
            state.count[fid] += 1;
            if self.facets[fid].boundary {
                continue;
            }
            if state.count[fid] == 1 {
                state.open.insert(fid);
                state.side[fid] = side;
            } else {
                state.open.remove(&fid);
            }
        }
    }

    fn pop(&self, state: &mut State) {
        let sid = state.chosen.pop().expect("nonempty");
        for &(fid, side) in &self.facets_of[sid] {
            state.count[fid] -= 1;
            if self.facets[fid].boundary {
                continue;
            }
            match state.count[fid] {
                0 => {
                    state.open.remove(&fid);
                }
                _ => {
                    // The remaining simplex sits on the other side.
                    state.open.insert(fid);
                    state.side[fid] = -side;
                }
            }
        }
    }

    /// Depth-first completion. Every triangulation is reached exactly once:
    /// from its smallest simplex as root, crossing the smallest open facet.
    fn extend(&mut self, state: &mut State, root: usize, found: &mut Vec<Vec<usize>>) {
        let Some(&fid) = state.open.iter().next() else {
            found.push(state.chosen.clone());
            return;
        };
        let want = -state.side[fid];
        let candidates: Vec<usize> = self.facets[fid]
            .cofaces
            .iter()
            .filter(|&&(sid, side)| side == want && sid > root && state.is_unused(sid))
            .map(|&(sid, _)| sid)
            .collect();
        for sid in candidates {
            let chosen = state.chosen.clone();
            if !chosen.iter().all(|&c| self.compatible(c, sid)) {
                continue;
            }
            self.push(state, sid);
            self.extend(state, root, found);
            self.pop(state);
        }
    }
}

impl State {
    fn is_unused(&self, sid: usize) -> bool {
        !self.chosen.contains(&sid)
    }
}

/// A `d`-subset spans a boundary hyperplane when no two points of `A`
/// lie strictly on opposite sides of it.
fn is_boundary(config: &PointConfiguration, facet: &[usize]) -> bool {
    let mut pos = false;
    let mut neg = false;
    for p in config.points() {
        let mut pts = config.refs(facet);
        pts.push(p);
        match linalg::orientation(&pts).signum() {
            1 => pos = true,
            -1 => neg = true,
            _ => {}
        }
    }
    !(pos && neg)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    fn cfg(points: &[&[i64]]) -> PointConfiguration {
        PointConfiguration::with_default_labels(points.iter().map(|p| p.to_vec()).collect())
            .unwrap()
    }

    fn tri(simplices: &[&[usize]]) -> Triangulation {
        Triangulation::new(simplices.iter().map(|s| Simplex::new(s.to_vec())).collect())
    }

    #[test]
    fn cubic_interval_has_four_subdivisions() {
        let c = PointConfiguration::interval(3).unwrap();
        let all = enumerate_triangulations(&c, DEFAULT_CAP).unwrap();
        assert_eq!(
            all,
            vec![
                tri(&[&[0, 1], &[1, 2], &[2, 3]]),
                tri(&[&[0, 1], &[1, 3]]),
                tri(&[&[0, 2], &[2, 3]]),
                tri(&[&[0, 3]]),
            ]
        );
        for t in &all {
            assert!(is_coherent(&c, t).is_some());
        }
    }

    #[test]
    fn unit_triangle_and_square() {
        let t = cfg(&[&[0, 0], &[1, 0], &[0, 1]]);
        assert_eq!(
            enumerate_triangulations(&t, DEFAULT_CAP).unwrap(),
            vec![tri(&[&[0, 1, 2]])]
        );
        let sq = cfg(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]);
        let all = enumerate_coherent_triangulations(&sq, DEFAULT_CAP).unwrap();
        let ts: Vec<_> = all.iter().map(|(t, _)| t.clone()).collect();
        assert_eq!(
            ts,
            vec![tri(&[&[0, 1, 2], &[1, 2, 3]]), tri(&[&[0, 1, 3], &[0, 2, 3]])]
        );
    }

    #[test]
    fn cap_is_enforced() {
        let c = PointConfiguration::interval(10).unwrap();
        assert_eq!(
            enumerate_triangulations(&c, DEFAULT_CAP),
            Err(Error::CapExceeded { points: 11, cap: 10 })
        );
        assert_eq!(enumerate_triangulations(&c, 11).unwrap().len(), 512);
    }

    #[test]
    fn gkz_examples() {
        let c = PointConfiguration::interval(3).unwrap();
        assert_eq!(gkz_vector(&c, &tri(&[&[0, 2], &[2, 3]])), GkzVector(vec![2, 0, 3, 1]));
        assert_eq!(gkz_vector(&c, &tri(&[&[0, 3]])), GkzVector(vec![3, 0, 0, 3]));
        let t = cfg(&[&[0, 0], &[1, 0], &[0, 1]]);
        assert_eq!(gkz_vector(&t, &tri(&[&[0, 1, 2]])), GkzVector(vec![1, 1, 1]));
    }

    #[test]
    fn heights_to_triangulation() {
        let c = PointConfiguration::interval(3).unwrap();
        assert_eq!(
            triangulation_from_heights(&c, &[q(0), q(0), q(0), q(0)]),
            Err(Error::NonGenericHeights(vec![0, 1, 2, 3]))
        );
        assert_eq!(
            triangulation_from_heights(&c, &[q(0), q(1), q(1), q(0)]),
            Ok(tri(&[&[0, 3]]))
        );
        let sq = cfg(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]);
        assert_eq!(
            triangulation_from_heights(&sq, &[q(0), q(1), q(1), q(0)]),
            Ok(tri(&[&[0, 1, 3], &[0, 2, 3]]))
        );
        assert_eq!(
            triangulation_from_heights(&sq, &[q(0)]),
            Err(Error::HeightCountMismatch { expected: 4, found: 1 })
        );
    }

    #[test]
    fn proper_intersection() {
        let c = PointConfiguration::interval(3).unwrap();
        let s = |v: &[usize]| Simplex::new(v.to_vec());
        assert!(intersect_properly(&c, &s(&[0, 1]), &s(&[1, 2])));
        assert!(intersect_properly(&c, &s(&[0, 1]), &s(&[2, 3])));
        assert!(!intersect_properly(&c, &s(&[0, 2]), &s(&[1, 2])));
        assert!(!intersect_properly(&c, &s(&[0, 2]), &s(&[1, 3])));
        let sq = cfg(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]);
        assert!(!intersect_properly(&sq, &s(&[0, 1, 3]), &s(&[0, 1, 2])));
        assert!(intersect_properly(&sq, &s(&[0, 1, 3]), &s(&[0, 2, 3])));
    }

    #[test]
    fn validate_rejects_bad_triangulations() {
        let sq = cfg(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]);
        assert!(tri(&[&[0, 1, 3]]).validate(&sq).is_err());
        assert!(tri(&[&[0, 1, 3], &[0, 2, 3]]).validate(&sq).is_ok());
    }

    #[test]
    fn certificates_verify() {
        let c = cfg(&[&[0, 0], &[1, 0], &[2, 0], &[0, 1], &[1, 1]]);
        for (t, cert) in enumerate_coherent_triangulations(&c, DEFAULT_CAP).unwrap() {
            assert!(cert.verify(&c, &t));
            assert_eq!(triangulation_from_heights(&c, &cert.heights), Ok(t));
        }
    }
}
