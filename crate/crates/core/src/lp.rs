//! Dense two-phase simplex method over exact rationals.
//!
//! Pivoting follows Bland's rule (lowest index entering column, lowest
//! index leaving basic variable on ratio ties), so the method terminates
//! without any anti-cycling perturbation. Problems here have at most a few
//! hundred rows, which keeps a dense tableau practical.

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    Le,
    Ge,
    Eq,
}

#[derive(Debug, Clone, PartialEq)]
pub enum LpOutcome {
    Optimal {
        value: BigRational,
        solution: Vec<BigRational>,
    },
    Infeasible,
    Unbounded,
}

impl LpOutcome {
    pub fn is_feasible(&self) -> bool {
        !matches!(self, LpOutcome::Infeasible)
    }
}

/// `maximize objective·x` subject to linear constraints. Variables are
/// nonnegative unless marked free.
#[derive(Debug, Clone)]
pub struct LinearProgram {
    num_vars: usize,
    free: Vec<bool>,
    objective: Vec<BigRational>,
    constraints: Vec<(Vec<BigRational>, Relation, BigRational)>,
}

impl LinearProgram {
    pub fn new(num_vars: usize) -> Self {
        LinearProgram {
            num_vars,
            free: vec![false; num_vars],
            objective: vec![BigRational::zero(); num_vars],
            constraints: Vec::new(),
        }
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn set_free(&mut self, var: usize) {
        self.free[var] = true;
    }

    pub fn maximize(&mut self, objective: Vec<BigRational>) {
        assert_eq!(objective.len(), self.num_vars);
        self.objective = objective;
    }

    pub fn add_constraint(&mut self, coeffs: Vec<BigRational>, rel: Relation, rhs: BigRational) {
        assert_eq!(coeffs.len(), self.num_vars);
        self.constraints.push((coeffs, rel, rhs));
    }

    pub fn solve(&self) -> LpOutcome {
        // Column layout: one column per variable, an extra negative-part
        // column per free variable, then slack/surplus, then artificials.
        let mut var_cols = Vec::with_capacity(self.num_vars);
        let mut ncols = 0;
        for &f in &self.free {
            if f {
                var_cols.push((ncols, Some(ncols + 1)));
                ncols += 2;
            } else {
                var_cols.push((ncols, None));
                ncols += 1;
            }
        }
        let structural = ncols;

        // Normalize right-hand sides to be nonnegative.
        let rows: Vec<(Vec<BigRational>, Relation, BigRational)> = self
            .constraints
            .iter()
            .map(|(a, rel, b)| {
                // Homogeneous >= rows become <= rows so their slack can
                // start in the basis without an artificial.
                if b.is_negative() || (b.is_zero() && *rel == Relation::Ge) {
                    let flipped = match rel {
                        Relation::Le => Relation::Ge,
                        Relation::Ge => Relation::Le,
                        Relation::Eq => Relation::Eq,
                    };
                    (a.iter().map(|x| -x).collect(), flipped, -b)
                } else {
                    (a.clone(), *rel, b.clone())
                }
            })
            .collect();

        let n_slack = rows.iter().filter(|r| r.1 != Relation::Eq).count();
        let n_art = rows.iter().filter(|r| r.1 != Relation::Le).count();
        let total = structural + n_slack + n_art;
        let art_start = structural + n_slack;

        let mut tab: Vec<Vec<BigRational>> = Vec::with_capacity(rows.len());
        let mut basis = Vec::with_capacity(rows.len());
        let (mut next_slack, mut next_art) = (structural, art_start);
        for (a, rel, b) in &rows {
            let mut row = vec![BigRational::zero(); total + 1];
            for (j, coef) in a.iter().enumerate() {
                let (pos, neg) = var_cols[j];
                row[pos] = coef.clone();
                if let Some(neg) = neg {
                    row[neg] = -coef;
                }
            }
            row[total] = b.clone();
            match rel {
                Relation::Le => {
                    row[next_slack] = BigRational::one();
                    basis.push(next_slack);
                    next_slack += 1;
                }
                Relation::Ge => {
                    row[next_slack] = -BigRational::one();
                    next_slack += 1;
                    row[next_art] = BigRational::one();
                    basis.push(next_art);
                    next_art += 1;
                }
                Relation::Eq => {
                    row[next_art] = BigRational::one();
                    basis.push(next_art);
                    next_art += 1;
                }
            }
            tab.push(row);
        }

        let mut tableau = Tableau { tab, basis, total };

        if n_art > 0 {
            let mut cost = vec![BigRational::zero(); total];
            for c in cost.iter_mut().skip(art_start) {
                *c = -BigRational::one();
            }
            let allowed = vec![true; total];
            // Phase one is bounded above by zero.
            let _ = tableau.run(&cost, &allowed);
            let infeasibility: BigRational = tableau
                .basis
                .iter()
                .zip(&tableau.tab)
                .filter(|(&b, _)| b >= art_start)
                .map(|(_, row)| row[total].clone())
                .sum();
            if infeasibility.is_positive() {
                return LpOutcome::Infeasible;
            }
            tableau.evict_artificials(art_start);
        }

        let mut cost = vec![BigRational::zero(); total];
        for (j, coef) in self.objective.iter().enumerate() {
            let (pos, neg) = var_cols[j];
            cost[pos] = coef.clone();
            if let Some(neg) = neg {
                cost[neg] = -coef;
            }
        }
        let allowed: Vec<bool> = (0..total).map(|j| j < art_start).collect();
        if tableau.run(&cost, &allowed).is_err() {
            return LpOutcome::Unbounded;
        }

        let mut values = vec![BigRational::zero(); total];
        for (i, &b) in tableau.basis.iter().enumerate() {
            values[b] = tableau.tab[i][total].clone();
        }
        let solution: Vec<BigRational> = var_cols
            .iter()
            .map(|&(pos, neg)| match neg {
                Some(neg) => &values[pos] - &values[neg],
                None => values[pos].clone(),
            })
            .collect();
        let value = solution
            .iter()
            .zip(&self.objective)
            .map(|(x, c)| x * c)
            .sum();
        LpOutcome::Optimal { value, solution }
    }
}

struct Unbounded;

struct Tableau {
    tab: Vec<Vec<BigRational>>,
    basis: Vec<usize>,
    total: usize,
}

impl Tableau {
    fn run(&mut self, cost: &[BigRational], allowed: &[bool]) -> Result<(), Unbounded> {
        loop {
            let mut in_basis = vec![false; self.total];
            for &b in &self.basis {
                in_basis[b] = true;
            }
            let entering = (0..self.total).find(|&j| {
                if !allowed[j] || in_basis[j] {
                    return false;
                }
                let mut reduced = cost[j].clone();
                for (row, &b) in self.tab.iter().zip(&self.basis) {
                    if !row[j].is_zero() && !cost[b].is_zero() {
                        reduced -= &cost[b] * &row[j];
                    }
                }
                reduced.is_positive()
            });
            let Some(j) = entering else {
                return Ok(());
            };

            let mut leaving: Option<(usize, BigRational)> = None;
            for (i, row) in self.tab.iter().enumerate() {
                if !row[j].is_positive() {
                    continue;
                }
                let ratio = &row[self.total] / &row[j];
                let better = match &leaving {
                    None => true,
                    Some((k, best)) => {
                        ratio < *best || (ratio == *best && self.basis[i] < self.basis[*k])
                    }
                };
                if better {
                    leaving = Some((i, ratio));
                }
            }
            let Some((i, _)) = leaving else {
                return Err(Unbounded);
            };
            self.pivot(i, j);
        }
    }

    fn pivot(&mut self, r: usize, c: usize) {
        let p = self.tab[r][c].clone();
        for x in self.tab[r].iter_mut() {
            if !x.is_zero() {
                *x /= &p;
            }
        }
        let pivot_row = self.tab[r].clone();
        for (i, row) in self.tab.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let factor = row[c].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                if !y.is_zero() {
                    *x -= &factor * y;
                }
            }
        }
        self.basis[r] = c;
    }

    /// After a successful phase one, every artificial left in the basis sits
    /// at level zero; pivot it out or drop its (redundant) row.
    fn evict_artificials(&mut self, art_start: usize) {
        let mut i = 0;
        while i < self.tab.len() {
            if self.basis[i] < art_start {
                i += 1;
                continue;
            }
            match (0..art_start).find(|&j| !self.tab[i][j].is_zero()) {
                Some(j) => {
                    self.pivot(i, j);
                    i += 1;
                }
                None => {
                    self.tab.remove(i);
                    self.basis.remove(i);
                }
            }
        }
    }
}
