//! Sylvester resultants, univariate discriminants, and the specializations
//! that turn resultants into principal A-determinants.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::config::{default_labels, PointConfiguration, Simplex};
use crate::error::{Error, Result};
use crate::linalg;
use crate::poly::{bareiss_determinant, Exponent, PolyMatrix, SparsePoly};

/// A univariate polynomial with one symbolic coefficient per power, named
/// from the leading coefficient down to the constant term.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnivariateSymbolic {
    coeff_names: Vec<String>,
}

/// A univariate polynomial whose coefficients are themselves polynomials,
/// stored from the leading coefficient down to the constant term.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnivariatePoly {
    coeffs: Vec<SparsePoly>,
}

impl UnivariateSymbolic {
    pub fn new(coeff_names: Vec<String>) -> Result<Self> {
        if coeff_names.len() < 2 {
            return Err(Error::DegreeTooSmall {
                min: 1,
                found: coeff_names.len().saturating_sub(1),
            });
        }
        for (i, n) in coeff_names.iter().enumerate() {
            if coeff_names[..i].contains(n) {
                return Err(Error::DuplicateLabel(n.clone()));
            }
        }
        Ok(UnivariateSymbolic { coeff_names })
    }

    /// `a{tag} X^d + b{tag} X^(d-1) + ...`, e.g. `a1, b1, c1` for a quadratic.
    pub fn generic(degree: usize, tag: &str) -> Result<Self> {
        Self::new(
            default_labels(degree + 1)
                .into_iter()
                .map(|l| format!("{l}{tag}"))
                .collect(),
        )
    }

    pub fn degree(&self) -> usize {
        self.coeff_names.len() - 1
    }

    pub fn coeff_names(&self) -> &[String] {
        &self.coeff_names
    }

    pub fn to_poly(&self) -> UnivariatePoly {
        UnivariatePoly::new(self.coeff_names.iter().map(|n| SparsePoly::var(n)).collect())
    }
}

impl UnivariatePoly {
    pub fn new(coeffs: Vec<SparsePoly>) -> Self {
        UnivariatePoly { coeffs }
    }

    pub fn from_integers(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| SparsePoly::from(c)).collect())
    }

    /// Monic polynomial `prod (X - r)`.
    pub fn from_roots(roots: &[i64]) -> Self {
        roots.iter().fold(Self::from_integers(&[1]), |acc, &r| {
            acc.mul(&Self::from_integers(&[1, -r]))
        })
    }

    pub fn coeffs(&self) -> &[SparsePoly] {
        &self.coeffs
    }

    /// Formal degree: number of stored coefficients minus one.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn mul(&self, other: &UnivariatePoly) -> UnivariatePoly {
        let mut out = vec![SparsePoly::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        UnivariatePoly::new(out)
    }

    /// `d/dX`, one degree lower.
    pub fn derivative(&self) -> UnivariatePoly {
        let d = self.degree();
        UnivariatePoly::new(
            self.coeffs[..d]
                .iter()
                .enumerate()
                .map(|(i, c)| c.scale(&BigInt::from(d - i)))
                .collect(),
        )
    }

    /// `X d/dX`, same formal degree.
    pub fn log_derivative(&self) -> UnivariatePoly {
        let d = self.degree();
        UnivariatePoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| c.scale(&BigInt::from(d - i)))
                .collect(),
        )
    }
}

/// The `(m + n) x (m + n)` Sylvester matrix of `f` (degree `m`) and `g`
/// (degree `n`): `n` shifted rows of `f`'s coefficients followed by `m`
/// shifted rows of `g`'s.
pub fn sylvester_matrix(f: &UnivariatePoly, g: &UnivariatePoly) -> PolyMatrix {
    let (m, n) = (f.degree(), g.degree());
    let size = m + n;
    let mut rows = Vec::with_capacity(size);
    for (poly, copies) in [(f, n), (g, m)] {
        for shift in 0..copies {
            let mut row = vec![SparsePoly::zero(); size];
            for (k, c) in poly.coeffs.iter().enumerate() {
                row[shift + k] = c.clone();
            }
            rows.push(row);
        }
    }
    rows
}

pub fn symbolic_sylvester_matrix(f: &UnivariateSymbolic, g: &UnivariateSymbolic) -> PolyMatrix {
    sylvester_matrix(&f.to_poly(), &g.to_poly())
}

pub fn resultant(f: &UnivariatePoly, g: &UnivariatePoly) -> SparsePoly {
    bareiss_determinant(&sylvester_matrix(f, g)).expect("Sylvester matrices are square")
}

pub fn symbolic_resultant(f: &UnivariateSymbolic, g: &UnivariateSymbolic) -> SparsePoly {
    resultant(&f.to_poly(), &g.to_poly())
}

/// Exponent of the term contributed by the finest subdivision of the
/// interval: every interior coefficient squared.
fn finest_term(degree: usize) -> Exponent {
    (0..=degree)
        .map(|i| if i == 0 || i == degree { 0 } else { 2 })
        .collect()
}

/// Discriminant of `a X^d + b X^(d-1) + ...` in the variables `a, b, c, ...`,
/// obtained as `resultant(f, f') / a` and signed so that the product of the
/// squared interior coefficients appears with coefficient `+1`.
pub fn discriminant_univariate(degree: usize) -> Result<SparsePoly> {
    if degree < 2 {
        return Err(Error::DegreeTooSmall {
            min: 2,
            found: degree,
        });
    }
    let f = UnivariateSymbolic::new(default_labels(degree + 1))?;
    let fp = f.to_poly();
    let r = resultant(&fp, &fp.derivative());
    let lead = SparsePoly::var(&f.coeff_names()[0]);
    let delta = r
        .div_exact(&lead)
        .expect("the resultant of f and f' is divisible by the leading coefficient")
        .with_vars(f.coeff_names())?;
    if delta.coefficient(&finest_term(degree)).is_negative() {
        Ok(-delta)
    } else {
        Ok(delta)
    }
}

/// Principal A-determinant of the full interval `{0, ..., d}`: the two
/// endpoint coefficients times the discriminant.
pub fn ea_univariate(degree: usize) -> Result<SparsePoly> {
    let delta = discriminant_univariate(degree)?;
    let names = default_labels(degree + 1);
    let ends = &SparsePoly::var(&names[0]) * &SparsePoly::var(&names[degree]);
    (&ends * &delta).with_vars(&names)
}

/// Substitution of polynomials for variables.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SpecializationMap {
    pub assignments: BTreeMap<String, SparsePoly>,
}

impl SpecializationMap {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn assign(mut self, name: &str, value: SparsePoly) -> Self {
        self.assignments.insert(name.to_string(), value);
        self
    }

    pub fn identity(vars: &[String]) -> Self {
        SpecializationMap {
            assignments: vars.iter().map(|v| (v.clone(), SparsePoly::var(v))).collect(),
        }
    }

    /// Sends `g1`'s coefficients to `f`'s and `g2`'s to those of `g2_image`,
    /// where `f` is the polynomial with coefficient names `target`.
    fn pair(
        g1: &UnivariateSymbolic,
        g2: &UnivariateSymbolic,
        f: &UnivariatePoly,
        g2_image: &UnivariatePoly,
    ) -> Self {
        let mut m = SpecializationMap::new();
        for (name, value) in g1.coeff_names().iter().zip(f.coeffs()) {
            m.assignments.insert(name.clone(), value.clone());
        }
        let pad = g2.degree() + 1 - g2_image.coeffs().len();
        for (k, name) in g2.coeff_names().iter().enumerate() {
            let value = if k < pad {
                SparsePoly::zero()
            } else {
                g2_image.coeffs()[k - pad].clone()
            };
            m.assignments.insert(name.clone(), value);
        }
        m
    }

    /// `(g1, g2) -> (f, X f')` for `f` with coefficients `target`.
    pub fn log_derivative(g1: &UnivariateSymbolic, g2: &UnivariateSymbolic, target: &[String]) -> Result<Self> {
        let f = UnivariateSymbolic::new(target.to_vec())?.to_poly();
        Ok(Self::pair(g1, g2, &f, &f.log_derivative()))
    }

    /// `(g1, g2) -> (f, f')`, with `f'` padded to the degree of `g2`.
    pub fn derivative(g1: &UnivariateSymbolic, g2: &UnivariateSymbolic, target: &[String]) -> Result<Self> {
        let f = UnivariateSymbolic::new(target.to_vec())?.to_poly();
        Ok(Self::pair(g1, g2, &f, &f.derivative()))
    }
}

/// Substitutes `m` into `r` and expands.
pub fn specialize(r: &SparsePoly, m: &SpecializationMap) -> Result<SparsePoly> {
    let occurring: Vec<&str> = r.occurring_vars();
    let mut images = Vec::with_capacity(r.vars().len());
    for v in r.vars() {
        match m.assignments.get(v) {
            Some(p) => images.push(Some(p)),
            None if occurring.contains(&v.as_str()) => {
                return Err(Error::UnassignedVariable(v.clone()))
            }
            None => images.push(None),
        }
    }
    let mut out = SparsePoly::zero();
    for (exp, coeff) in r.terms() {
        let mut term = SparsePoly::constant(coeff.clone());
        for (image, &k) in images.iter().zip(exp) {
            if k > 0 {
                term = &term * &image.expect("occurring variables are assigned").pow(k);
            }
        }
        out = &out + &term;
    }
    Ok(out)
}

/// Integer basis of the lattice spanned by `f` and its torus
/// log-derivatives `X_k d/dX_k f`. Column `j` expresses the `j`-th chosen
/// polynomial in terms of `(f, X_1 d/dX_1 f, ..., X_d d/dX_d f)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LogDerivativeBasis {
    matrix: Vec<Vec<i64>>,
}

impl LogDerivativeBasis {
    pub fn standard(dim: usize) -> Self {
        LogDerivativeBasis {
            matrix: (0..=dim)
                .map(|i| (0..=dim).map(|j| (i == j) as i64).collect())
                .collect(),
        }
    }

    pub fn new(matrix: Vec<Vec<i64>>) -> Result<Self> {
        let n = matrix.len();
        if matrix.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidBasis("matrix is not square".into()));
        }
        let det = linalg::det(
            matrix
                .iter()
                .map(|r| r.iter().map(|&x| x as i128).collect())
                .collect(),
        );
        if det.abs() != 1 {
            return Err(Error::InvalidBasis(format!("determinant {det} is not a unit")));
        }
        Ok(LogDerivativeBasis { matrix })
    }

    pub fn dim(&self) -> usize {
        self.matrix.len() - 1
    }
}

/// Image of a Plücker coordinate under the log-derivative specialization:
/// an integer times the product of the simplex's coefficient variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PluckerImage {
    pub coefficient: BigInt,
    /// Exponents over the configuration's labels.
    pub monomial: Exponent,
}

/// The `n x (d+1)` coefficient matrix of the specialized polynomials: row
/// `i` is `x_i * (1, p_i) * basis` for the coefficient variable `x_i`.
pub fn specialized_coefficient_matrix(
    config: &PointConfiguration,
    basis: &LogDerivativeBasis,
) -> Result<PolyMatrix> {
    if basis.dim() != config.dim() {
        return Err(Error::InvalidBasis(format!(
            "basis is for dimension {}, configuration has dimension {}",
            basis.dim(),
            config.dim()
        )));
    }
    Ok(config
        .points()
        .iter()
        .zip(config.labels())
        .map(|(p, label)| {
            let x = SparsePoly::var(label);
            let row: Vec<i64> = std::iter::once(1).chain(p.iter().copied()).collect();
            (0..=config.dim())
                .map(|j| {
                    let entry: i64 = row.iter().zip(&basis.matrix).map(|(r, b)| r * b[j]).sum();
                    x.scale(&BigInt::from(entry))
                })
                .collect()
        })
        .collect())
}

pub fn plucker_specialization(config: &PointConfiguration, s: &Simplex) -> Result<PluckerImage> {
    plucker_specialization_in_basis(config, s, &LogDerivativeBasis::standard(config.dim()))
}

/// The maximal minor on the rows of `s`, computed symbolically.
pub fn plucker_specialization_in_basis(
    config: &PointConfiguration,
    s: &Simplex,
    basis: &LogDerivativeBasis,
) -> Result<PluckerImage> {
    config.check_simplex(s)?;
    let full = specialized_coefficient_matrix(config, basis)?;
    let minor: PolyMatrix = s.vertices().iter().map(|&i| full[i].clone()).collect();
    let det = bareiss_determinant(&minor)?.with_vars(config.labels())?;
    let mut terms = det.terms();
    match (terms.next(), terms.next()) {
        (Some((exp, c)), None) => Ok(PluckerImage {
            coefficient: c.clone(),
            monomial: exp.clone(),
        }),
        (None, _) => Err(Error::DegenerateSimplex(s.vertices().to_vec())),
        _ => unreachable!("a minor of a row-scaled integer matrix is a single term"),
    }
}

impl PluckerImage {
    pub fn is_zero(&self) -> bool {
        self.coefficient.is_zero()
    }
}
