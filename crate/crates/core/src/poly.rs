//! Sparse multivariate polynomials with big-integer coefficients.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Pow, Signed, Zero};

use crate::error::{Error, Result};
use crate::lp::{LinearProgram, Relation};

pub type Exponent = Vec<u32>;

/// A polynomial over `Z` in named variables. Exponent vectors are dense,
/// one entry per variable, and no zero coefficient is ever stored.
#[derive(Debug, Clone)]
pub struct SparsePoly {
    vars: Vec<String>,
    terms: BTreeMap<Exponent, BigInt>,
}

/// Support of a polynomial, with the points that are vertices of its
/// convex hull flagged.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NewtonPolytope {
    pub support: Vec<Exponent>,
    pub vertices: Vec<bool>,
}

impl NewtonPolytope {
    pub fn vertex_points(&self) -> Vec<&Exponent> {
        self.support
            .iter()
            .zip(&self.vertices)
            .filter(|(_, &v)| v)
            .map(|(p, _)| p)
            .collect()
    }

    pub fn interior_points(&self) -> Vec<&Exponent> {
        self.support
            .iter()
            .zip(&self.vertices)
            .filter(|(_, &v)| !v)
            .map(|(p, _)| p)
            .collect()
    }
}

impl SparsePoly {
    pub fn zero() -> Self {
        SparsePoly {
            vars: Vec::new(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Vec::new(), c);
        }
        SparsePoly {
            vars: Vec::new(),
            terms,
        }
    }

    pub fn var(name: &str) -> Self {
        SparsePoly {
            vars: vec![name.to_string()],
            terms: BTreeMap::from([(vec![1], BigInt::one())]),
        }
    }

    /// Builds a polynomial from possibly repeated terms.
    pub fn from_terms(
        vars: Vec<String>,
        terms: impl IntoIterator<Item = (Exponent, BigInt)>,
    ) -> Self {
        let mut map: BTreeMap<Exponent, BigInt> = BTreeMap::new();
        for (e, c) in terms {
            assert_eq!(e.len(), vars.len(), "exponent length must match variables");
            *map.entry(e).or_insert_with(BigInt::zero) += c;
        }
        map.retain(|_, c| !c.is_zero());
        SparsePoly { vars, terms: map }
    }

    pub fn monomial(vars: Vec<String>, exp: Exponent, coeff: impl Into<BigInt>) -> Self {
        Self::from_terms(vars, [(exp, coeff.into())])
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    /// Terms in increasing lexicographic order of exponents.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Exponent, &BigInt)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, exp: &[u32]) -> BigInt {
        self.terms.get(exp).cloned().unwrap_or_default()
    }

    /// Variables that occur with a positive exponent in some term.
    pub fn occurring_vars(&self) -> Vec<&str> {
        self.vars
            .iter()
            .enumerate()
            .filter(|(k, _)| self.terms.keys().any(|e| e[*k] > 0))
            .map(|(_, v)| v.as_str())
            .collect()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degrees = self.terms.keys().map(|e| e.iter().sum::<u32>());
        match degrees.next() {
            None => true,
            Some(d) => degrees.all(|x| x == d),
        }
    }

    /// Re-expresses the polynomial over `vars`, which must contain every
    /// occurring variable.
    pub fn with_vars(&self, vars: &[String]) -> Result<Self> {
        let mut map = Vec::with_capacity(self.vars.len());
        for (k, v) in self.vars.iter().enumerate() {
            match vars.iter().position(|w| w == v) {
                Some(pos) => map.push(Some(pos)),
                None if self.terms.keys().all(|e| e[k] == 0) => map.push(None),
                None => return Err(Error::MissingVariable(v.clone())),
            }
        }
        let terms = self.terms.iter().map(|(e, c)| {
            let mut out = vec![0; vars.len()];
            for (k, &x) in e.iter().enumerate() {
                if let Some(pos) = map[k] {
                    out[pos] += x;
                }
            }
            (out, c.clone())
        });
        Ok(Self::from_terms(vars.to_vec(), terms))
    }

    fn aligned(&self, other: &SparsePoly) -> (SparsePoly, SparsePoly) {
        if self.vars == other.vars {
            return (self.clone(), other.clone());
        }
        let mut vars = self.vars.clone();
        for v in &other.vars {
            if !vars.contains(v) {
                vars.push(v.clone());
            }
        }
        (
            self.with_vars(&vars).expect("union contains all variables"),
            other.with_vars(&vars).expect("union contains all variables"),
        )
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return SparsePoly {
                vars: self.vars.clone(),
                terms: BTreeMap::new(),
            };
        }
        SparsePoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c * k)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = SparsePoly::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Exact quotient `self / divisor`, or `None` if the division leaves a
    /// remainder. Uses lexicographic leading terms.
    pub fn div_exact(&self, divisor: &SparsePoly) -> Option<SparsePoly> {
        if divisor.is_zero() {
            return None;
        }
        let (mut rem, divisor) = self.aligned(divisor);
        let vars = rem.vars.clone();
        let (lead_exp, lead_coef) = divisor.terms.iter().next_back().expect("nonzero");
        let mut quotient = BTreeMap::new();
        while let Some((exp, coef)) = rem.terms.iter().next_back() {
            if exp.iter().zip(lead_exp).any(|(a, b)| a < b) {
                return None;
            }
            let (q, r) = coef.div_rem(lead_coef);
            if !r.is_zero() {
                return None;
            }
            let shift: Exponent = exp.iter().zip(lead_exp).map(|(a, b)| a - b).collect();
            for (e, c) in &divisor.terms {
                let target: Exponent = e.iter().zip(&shift).map(|(a, b)| a + b).collect();
                let entry = rem.terms.entry(target).or_insert_with(BigInt::zero);
                *entry -= c * &q;
                if entry.is_zero() {
                    let key: Exponent = e.iter().zip(&shift).map(|(a, b)| a + b).collect();
                    rem.terms.remove(&key);
                }
            }
            quotient.insert(shift, q);
        }
        Some(SparsePoly {
            vars,
            terms: quotient,
        })
    }

    pub fn eval(&self, point: &HashMap<String, BigRational>) -> Result<BigRational> {
        let mut values = Vec::with_capacity(self.vars.len());
        for (k, v) in self.vars.iter().enumerate() {
            match point.get(v) {
                Some(x) => values.push(x.clone()),
                None if self.terms.keys().all(|e| e[k] == 0) => values.push(BigRational::zero()),
                None => return Err(Error::MissingVariable(v.clone())),
            }
        }
        let mut total = BigRational::zero();
        for (e, c) in &self.terms {
            let mut t = BigRational::from_integer(c.clone());
            for (x, &k) in values.iter().zip(e) {
                if k > 0 {
                    t *= Pow::pow(x, k);
                }
            }
            total += t;
        }
        Ok(total)
    }

    /// Evaluation at integer values.
    pub fn eval_integers(&self, point: &[(&str, i64)]) -> Result<BigInt> {
        let map = point
            .iter()
            .map(|&(v, x)| (v.to_string(), BigRational::from_integer(x.into())))
            .collect();
        Ok(self.eval(&map)?.to_integer())
    }

    pub fn newton_polytope(&self) -> Result<NewtonPolytope> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let support: Vec<Exponent> = self.terms.keys().cloned().collect();
        let vertices = (0..support.len())
            .map(|i| is_extreme_point(&support, i))
            .collect();
        Ok(NewtonPolytope { support, vertices })
    }

    /// Terms at vertices of the Newton polytope, in lexicographic order.
    pub fn extremal_terms(&self) -> Result<Vec<(Exponent, BigInt)>> {
        let np = self.newton_polytope()?;
        Ok(np
            .support
            .into_iter()
            .zip(np.vertices)
            .filter(|(_, v)| *v)
            .map(|(e, _)| {
                let c = self.terms[&e].clone();
                (e, c)
            })
            .collect())
    }
}

/// Whether `points[i]` is not a convex combination of the other points.
pub(crate) fn is_extreme_point(points: &[Exponent], i: usize) -> bool {
    let others: Vec<&Exponent> = points
        .iter()
        .enumerate()
        .filter(|&(j, _)| j != i)
        .map(|(_, p)| p)
        .collect();
    if others.is_empty() {
        return true;
    }
    let q = |x: u32| BigRational::from_integer(BigInt::from(x));
    let mut lp = LinearProgram::new(others.len());
    for axis in 0..points[i].len() {
        lp.add_constraint(
            others.iter().map(|p| q(p[axis])).collect(),
            Relation::Eq,
            q(points[i][axis]),
        );
    }
    lp.add_constraint(
        vec![BigRational::one(); others.len()],
        Relation::Eq,
        BigRational::one(),
    );
    !lp.solve().is_feasible()
}

impl PartialEq for SparsePoly {
    fn eq(&self, other: &Self) -> bool {
        let (a, b) = self.aligned(other);
        a.terms == b.terms
    }
}

impl Eq for SparsePoly {}

impl From<i64> for SparsePoly {
    fn from(c: i64) -> Self {
        SparsePoly::constant(c)
    }
}

impl<'a> Add<&'a SparsePoly> for &'a SparsePoly {
    type Output = SparsePoly;
    fn add(self, rhs: &SparsePoly) -> SparsePoly {
        let (mut a, b) = self.aligned(rhs);
        for (e, c) in b.terms {
            let entry = a.terms.entry(e.clone()).or_insert_with(BigInt::zero);
            *entry += c;
            if entry.is_zero() {
                a.terms.remove(&e);
            }
        }
        a
    }
}

impl<'a> Sub<&'a SparsePoly> for &'a SparsePoly {
    type Output = SparsePoly;
    fn sub(self, rhs: &SparsePoly) -> SparsePoly {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a SparsePoly> for &'a SparsePoly {
    type Output = SparsePoly;
    fn mul(self, rhs: &SparsePoly) -> SparsePoly {
        let (a, b) = self.aligned(rhs);
        let mut terms: BTreeMap<Exponent, BigInt> = BTreeMap::new();
        for (e1, c1) in &a.terms {
            for (e2, c2) in &b.terms {
                let e: Exponent = e1.iter().zip(e2).map(|(x, y)| x + y).collect();
                *terms.entry(e).or_insert_with(BigInt::zero) += c1 * c2;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        SparsePoly {
            vars: a.vars,
            terms,
        }
    }
}

impl Neg for &SparsePoly {
    type Output = SparsePoly;
    fn neg(self) -> SparsePoly {
        SparsePoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<SparsePoly> for SparsePoly {
            type Output = SparsePoly;
            fn $m(self, rhs: SparsePoly) -> SparsePoly {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a SparsePoly> for SparsePoly {
            type Output = SparsePoly;
            fn $m(self, rhs: &SparsePoly) -> SparsePoly {
                (&self).$m(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for SparsePoly {
    type Output = SparsePoly;
    fn neg(self) -> SparsePoly {
        -&self
    }
}

impl fmt::Display for SparsePoly {
    /// Highest lexicographic term first, e.g. `b^2 - 4*a*c`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            let negative = c.is_negative();
            match (i, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let factors: Vec<String> = self
                .vars
                .iter()
                .zip(e)
                .filter(|(_, &k)| k > 0)
                .map(|(v, &k)| if k == 1 { v.clone() } else { format!("{v}^{k}") })
                .collect();
            let abs = c.abs();
            if factors.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{}", factors.join("*"))?;
            } else {
                write!(f, "{abs}*{}", factors.join("*"))?;
            }
        }
        Ok(())
    }
}

impl FromStr for SparsePoly {
    type Err = Error;

    /// Parses sums of products of integers, identifiers, parenthesized
    /// expressions and `^` powers. Juxtaposition multiplies (`2a`).
    fn from_str(s: &str) -> Result<Self> {
        let tokens = tokenize(s)?;
        let mut parser = Parser { tokens, pos: 0 };
        let p = parser.expr()?;
        if parser.pos != parser.tokens.len() {
            return Err(Error::PolyParse(format!("unexpected {:?}", parser.tokens[parser.pos])));
        }
        Ok(p)
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Num(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    Open,
    Close,
}

fn tokenize(s: &str) -> Result<Vec<Token>> {
    let chars: Vec<char> = s.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        match c {
            ' ' | '\t' | '\n' => i += 1,
            '+' => {
                out.push(Token::Plus);
                i += 1
            }
            '-' => {
                out.push(Token::Minus);
                i += 1
            }
            '*' => {
                out.push(Token::Star);
                i += 1
            }
            '^' => {
                out.push(Token::Caret);
                i += 1
            }
            '(' => {
                out.push(Token::Open);
                i += 1
            }
            ')' => {
                out.push(Token::Close);
                i += 1
            }
            d if d.is_ascii_digit() => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let text: String = chars[start..i].iter().collect();
                out.push(Token::Num(text.parse().expect("digits")));
            }
            a if a.is_ascii_alphabetic() || a == '_' => {
                let start = i;
                while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                out.push(Token::Ident(chars[start..i].iter().collect()));
            }
            other => return Err(Error::PolyParse(format!("unexpected character {other:?}"))),
        }
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn expr(&mut self) -> Result<SparsePoly> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.pos += 1;
                    acc = acc + self.term()?;
                }
                Some(Token::Minus) => {
                    self.pos += 1;
                    acc = acc - self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<SparsePoly> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(Token::Star) => {
                    self.pos += 1;
                    acc = acc * self.unary()?;
                }
                Some(Token::Num(_) | Token::Ident(_) | Token::Open) => {
                    acc = acc * self.power()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<SparsePoly> {
        if self.peek() == Some(&Token::Minus) {
            self.pos += 1;
            return Ok(-self.unary()?);
        }
        self.power()
    }

    fn power(&mut self) -> Result<SparsePoly> {
        let base = self.atom()?;
        if self.peek() == Some(&Token::Caret) {
            self.pos += 1;
            match self.tokens.get(self.pos) {
                Some(Token::Num(k)) => {
                    let k: u32 = k
                        .try_into()
                        .map_err(|_| Error::PolyParse(format!("exponent {k} too large")))?;
                    self.pos += 1;
                    return Ok(base.pow(k));
                }
                other => return Err(Error::PolyParse(format!("expected exponent, found {other:?}"))),
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<SparsePoly> {
        let tok = self.tokens.get(self.pos).cloned();
        self.pos += 1;
        match tok {
            Some(Token::Num(n)) => Ok(SparsePoly::constant(n)),
            Some(Token::Ident(v)) => Ok(SparsePoly::var(&v)),
            Some(Token::Open) => {
                let inner = self.expr()?;
                if self.peek() != Some(&Token::Close) {
                    return Err(Error::PolyParse("missing ')'".into()));
                }
                self.pos += 1;
                Ok(inner)
            }
            other => Err(Error::PolyParse(format!("unexpected {other:?}"))),
        }
    }
}

/// Square matrix of polynomials, row-major.
pub type PolyMatrix = Vec<Vec<SparsePoly>>;

fn check_square(m: &PolyMatrix) -> Result<()> {
    if m.iter().any(|row| row.len() != m.len()) {
        return Err(Error::NotSquare);
    }
    Ok(())
}

/// Determinant by fraction-free (Bareiss) elimination. Every division is
/// an exact polynomial division.
pub fn bareiss_determinant(m: &PolyMatrix) -> Result<SparsePoly> {
    check_square(m)?;
    let n = m.len();
    if n == 0 {
        return Ok(SparsePoly::one());
    }
    let mut a = m.clone();
    let mut negate = false;
    let mut prev = SparsePoly::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(i, k);
                    negate = !negate;
                }
                None => return Ok(SparsePoly::zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let cross = &(&a[k][k] * &a[i][j]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = cross
                    .div_exact(&prev)
                    .expect("Bareiss quotients are exact");
            }
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    Ok(if negate { -det } else { det })
}

/// Determinant by Laplace expansion along the first row. Exponential; kept
/// as a reference for small matrices.
pub fn cofactor_determinant(m: &PolyMatrix) -> Result<SparsePoly> {
    check_square(m)?;
    Ok(cofactor(m))
}

fn cofactor(m: &PolyMatrix) -> SparsePoly {
    if m.is_empty() {
        return SparsePoly::one();
    }
    let mut total = SparsePoly::zero();
    for j in 0..m.len() {
        if m[0][j].is_zero() {
            continue;
        }
        let minor: PolyMatrix = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|&(c, _)| c != j)
                    .map(|(_, x)| x.clone())
                    .collect()
            })
            .collect();
        let term = &m[0][j] * &cofactor(&minor);
        total = if j % 2 == 0 { total + term } else { total - term };
    }
    total
}
