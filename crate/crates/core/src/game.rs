//! The triangulation game for extremal terms of the principal
//! A-determinant, its Chow-form counterpart, the secondary polytope, and a
//! cross-check against independently computed determinants.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_traits::{One, Pow, Signed};

use crate::config::{PointConfiguration, Simplex};
use crate::error::{Error, Result};
use crate::poly::{is_extreme_point, Exponent, SparsePoly};
use crate::resultant::{ea_univariate, specialize, SpecializationMap};
use crate::triangulation::{enumerate_coherent_triangulations, gkz_vector, GkzVector, Triangulation};

/// One extremal term predicted by a coherent triangulation: the product of
/// `(vol(σ) · vertices of σ)^vol(σ)` over its simplices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GkzMonomial {
    pub coefficient: BigInt,
    pub exponents: GkzVector,
    pub source: Triangulation,
}

impl GkzMonomial {
    pub fn exponent_vec(&self) -> Exponent {
        self.exponents.0.iter().map(|&e| e as u32).collect()
    }

    /// e.g. `4·a²c³d`
    pub fn render(&self, config: &PointConfiguration) -> String {
        format!("{}·{}", self.coefficient, render_monomial(&self.exponents.0, config.labels()))
    }
}

pub fn game_term(config: &PointConfiguration, t: &Triangulation) -> GkzMonomial {
    let coefficient = t
        .simplices()
        .iter()
        .map(|s| {
            let v = config.normalized_volume(s).expect("triangulation simplices are full-dimensional");
            Pow::pow(BigInt::from(v), v)
        })
        .fold(BigInt::one(), |acc, x| acc * x);
    GkzMonomial {
        coefficient,
        exponents: gkz_vector(config, t),
        source: t.clone(),
    }
}

/// One term per coherent triangulation, sorted by exponent vector.
pub fn all_game_terms(config: &PointConfiguration, cap: usize) -> Result<Vec<GkzMonomial>> {
    let mut terms: Vec<GkzMonomial> = enumerate_coherent_triangulations(config, cap)?
        .iter()
        .map(|(t, _)| game_term(config, t))
        .collect();
    terms.sort_by(|a, b| a.exponents.cmp(&b.exponents));
    Ok(terms)
}

/// A product of Plücker coordinates, one per simplex, raised to the
/// simplex's normalized volume.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChowMonomial {
    pub factors: BTreeMap<Simplex, u64>,
}

impl ChowMonomial {
    /// `(π_abd, 1)`-style pairs in simplex order.
    pub fn symbols(&self, config: &PointConfiguration) -> Vec<(String, u64)> {
        self.factors
            .iter()
            .map(|(s, &k)| (plucker_symbol(config, s), k))
            .collect()
    }

    /// e.g. `(π_acd)²·π_cde`
    pub fn render(&self, config: &PointConfiguration) -> String {
        self.symbols(config)
            .into_iter()
            .map(|(sym, k)| {
                if k == 1 {
                    sym
                } else {
                    format!("({sym}){}", superscript(k))
                }
            })
            .collect::<Vec<_>>()
            .join("·")
    }
}

pub fn plucker_symbol(config: &PointConfiguration, s: &Simplex) -> String {
    let name: String = s.vertices().iter().map(|&i| config.label(i)).collect();
    format!("π_{name}")
}

pub fn chow_monomial(config: &PointConfiguration, t: &Triangulation) -> ChowMonomial {
    ChowMonomial {
        factors: t
            .simplices()
            .iter()
            .map(|s| {
                let v = config.normalized_volume(s).expect("triangulation simplices are full-dimensional");
                (s.clone(), v)
            })
            .collect(),
    }
}

/// GKZ vectors of the coherent triangulations, each confirmed to be a
/// vertex of their convex hull.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SecondaryPolytope {
    pub vertices: Vec<(GkzVector, Triangulation)>,
}

impl SecondaryPolytope {
    pub fn vertex_set(&self) -> BTreeSet<Exponent> {
        self.vertices
            .iter()
            .map(|(g, _)| g.0.iter().map(|&e| e as u32).collect())
            .collect()
    }
}

pub fn secondary_polytope(config: &PointConfiguration, cap: usize) -> Result<SecondaryPolytope> {
    let mut vertices: Vec<(GkzVector, Triangulation)> = enumerate_coherent_triangulations(config, cap)?
        .into_iter()
        .map(|(t, _)| (gkz_vector(config, &t), t))
        .collect();
    vertices.sort();
    let points: Vec<Exponent> = vertices
        .iter()
        .map(|(g, _)| g.0.iter().map(|&e| e as u32).collect())
        .collect();
    for (i, (g, _)) in vertices.iter().enumerate() {
        if !is_extreme_point(&points, i) {
            return Err(Error::NotExtremal(g.0.clone()));
        }
    }
    Ok(SecondaryPolytope { vertices })
}

/// Closed-form principal A-determinants for the configurations worked out
/// by hand. Configurations are matched as point sets up to translation.
pub fn ea_oracle(config: &PointConfiguration) -> Result<SparsePoly> {
    let origin: Vec<i64> = (0..config.dim())
        .map(|k| config.points().iter().map(|p| p[k]).min().expect("nonempty"))
        .collect();
    let shifted: BTreeMap<Vec<i64>, &str> = config
        .points()
        .iter()
        .zip(config.labels())
        .map(|(p, l)| (p.iter().zip(&origin).map(|(x, o)| x - o).collect(), l.as_str()))
        .collect();
    let is = |pts: &[&[i64]]| {
        pts.len() == shifted.len() && pts.iter().all(|p| shifted.contains_key(*p))
    };
    let v = |p: &[i64]| SparsePoly::var(shifted[p]);

    let oracle = if config.dim() == 1 && (3..=5).contains(&config.len()) {
        let degree = config.len() - 1;
        let pts: Vec<Vec<i64>> = (0..=degree as i64).map(|x| vec![x]).collect();
        let refs: Vec<&[i64]> = pts.iter().map(Vec::as_slice).collect();
        if !is(&refs) {
            return Err(Error::UnsupportedConfiguration);
        }
        // Coefficient names run from X^degree down to the constant term.
        let ea = ea_univariate(degree)?;
        let mut map = SpecializationMap::new();
        for (k, name) in ea.vars().iter().enumerate() {
            map = map.assign(name, v(&[(degree - k) as i64]));
        }
        specialize(&ea, &map)?
    } else if is(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]) {
        let (a, b, c, d) = (v(&[0, 0]), v(&[1, 0]), v(&[0, 1]), v(&[1, 1]));
        &(&(&a * &b) * &(&c * &d)) * &(&(&a * &d) - &(&b * &c))
    } else if is(&[&[0, 0], &[1, 0], &[2, 0], &[0, 1]]) {
        let (a, b, c, d) = (v(&[0, 0]), v(&[1, 0]), v(&[2, 0]), v(&[0, 1]));
        let quadratic = &(&b * &b) - &(&a * &c).scale(&BigInt::from(4));
        &(&(&a * &c) * &(&d * &d)) * &quadratic
    } else if is(&[&[0, 0], &[1, 0], &[2, 0], &[0, 1], &[1, 1]]) {
        let (a, b, c, d, e) = (v(&[0, 0]), v(&[1, 0]), v(&[2, 0]), v(&[0, 1]), v(&[1, 1]));
        let quadratic = &(&b * &b) - &(&a * &c).scale(&BigInt::from(4));
        let principal = &(&(&a * &e) * &e) - &(&(&b * &d) * &e) + &(&c * &d) * &d;
        &(&(&(&a * &c) * &(&d * &e)) * &quadratic) * &principal
    } else {
        return Err(Error::UnsupportedConfiguration);
    };
    oracle.with_vars(config.labels())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
}

/// A term as `(exponents over the configuration labels, coefficient)`.
pub type Term = (Exponent, BigInt);

/// Structured comparison of game terms against the oracle's extremal terms.
/// Coefficients are compared in absolute value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub status: Status,
    pub matched: Vec<Term>,
    pub game_only: Vec<Term>,
    pub oracle_only: Vec<Term>,
    /// Oracle terms strictly inside the Newton polytope.
    pub interior: Vec<Term>,
    pub secondary_matches_newton: bool,
}

pub fn verify_main_theorem(config: &PointConfiguration, cap: usize) -> Result<VerificationReport> {
    let oracle = ea_oracle(config)?;
    let np = oracle.newton_polytope()?;
    let game = all_game_terms(config, cap)?;
    let secondary = secondary_polytope(config, cap)?;

    let mut oracle_extremal: BTreeMap<Term, usize> = BTreeMap::new();
    let mut interior = Vec::new();
    for (exp, is_vertex) in np.support.iter().zip(&np.vertices) {
        let term = (exp.clone(), oracle.coefficient(exp));
        if *is_vertex {
            *oracle_extremal.entry((term.0, term.1.abs())).or_default() += 1;
        } else {
            interior.push(term);
        }
    }

    let mut matched = Vec::new();
    let mut game_only = Vec::new();
    for g in &game {
        let key = (g.exponent_vec(), g.coefficient.abs());
        match oracle_extremal.get_mut(&key) {
            Some(n) if *n > 0 => {
                *n -= 1;
                matched.push(key);
            }
            _ => game_only.push(key),
        }
    }
    let oracle_only: Vec<Term> = oracle_extremal
        .into_iter()
        .flat_map(|(k, n)| std::iter::repeat_n(k, n))
        .collect();

    let newton_vertices: BTreeSet<Exponent> = np.vertex_points().into_iter().cloned().collect();
    let secondary_matches_newton = secondary.vertex_set() == newton_vertices;
    let status = if game_only.is_empty() && oracle_only.is_empty() && secondary_matches_newton {
        Status::Pass
    } else {
        Status::Fail
    };
    Ok(VerificationReport {
        status,
        matched,
        game_only,
        oracle_only,
        interior,
        secondary_matches_newton,
    })
}

/// `ab²c²d` from an exponent vector and labels.
pub fn render_monomial<E: Copy + Into<u64>>(exps: &[E], labels: &[String]) -> String {
    let body: String = exps
        .iter()
        .zip(labels)
        .filter(|(&e, _)| e.into() > 0)
        .map(|(&e, l)| match e.into() {
            1 => l.clone(),
            k => format!("{l}{}", superscript(k)),
        })
        .collect();
    if body.is_empty() {
        "1".to_string()
    } else {
        body
    }
}

fn superscript(k: u64) -> String {
    const DIGITS: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];
    k.to_string()
        .chars()
        .map(|c| DIGITS[c.to_digit(10).expect("decimal digit") as usize])
        .collect()
}
