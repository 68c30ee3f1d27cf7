//! Exact two-phase simplex over [`Rational`].
//!
//! Dense tableau, explicit artificial variables in phase one, Bland's
//! lowest-index rule for both the entering and the leaving variable. Free
//! variables are split into a difference of two nonnegative columns.
//!
//! Besides [`solve`], the module can probe the optimal face of a program:
//! once an optimal tableau is known, the face is exactly the set of feasible
//! points whose nonbasic columns with strictly positive reduced cost are
//! zero, so each coordinate can be minimized and maximized over it by
//! restarting phase two from the optimal basis with those columns barred.

use serde::Serialize;
use thiserror::Error;

use crate::exact::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Direction {
    Maximize,
    Minimize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Relation {
    #[serde(rename = "<=")]
    Le,
    #[serde(rename = "=")]
    Eq,
    #[serde(rename = ">=")]
    Ge,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Bound {
    NonNegative,
    Free,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Constraint {
    pub coefficients: Vec<Rational>,
    pub relation: Relation,
    pub rhs: Rational,
}

impl Constraint {
    pub fn holds_at(&self, point: &[Rational]) -> bool {
        let lhs = dot(&self.coefficients, point);
        match self.relation {
            Relation::Le => lhs <= self.rhs,
            Relation::Eq => lhs == self.rhs,
            Relation::Ge => lhs >= self.rhs,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SimplexError {
    #[error("constraint has {got} coefficients, program has {expected} variables")]
    RowLength { expected: usize, got: usize },
    #[error("variable index {index} out of range for {count} variables")]
    VariableIndex { index: usize, count: usize },
    #[error("linear program is infeasible")]
    Infeasible,
    #[error("linear program is unbounded")]
    Unbounded,
    #[error("no feasible point attains objective value {0}")]
    EmptyFace(Rational),
}

/// `direction  objective · x + offset` subject to the constraints and
/// per-variable bounds.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LinearProgram {
    direction: Direction,
    objective: Vec<Rational>,
    offset: Rational,
    constraints: Vec<Constraint>,
    bounds: Vec<Bound>,
}

fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter()
        .zip(b)
        .filter(|(x, _)| !x.is_zero())
        .map(|(x, y)| x * y)
        .sum()
}

impl LinearProgram {
    /// All variables start out nonnegative.
    pub fn new(direction: Direction, objective: Vec<Rational>) -> Self {
        let m = objective.len();
        LinearProgram {
            direction,
            objective,
            offset: Rational::zero(),
            constraints: Vec::new(),
            bounds: vec![Bound::NonNegative; m],
        }
    }

    pub fn with_offset(mut self, offset: Rational) -> Self {
        self.offset = offset;
        self
    }

    pub fn add_constraint(
        &mut self,
        coefficients: Vec<Rational>,
        relation: Relation,
        rhs: Rational,
    ) -> Result<(), SimplexError> {
        if coefficients.len() != self.num_vars() {
            return Err(SimplexError::RowLength {
                expected: self.num_vars(),
                got: coefficients.len(),
            });
        }
        self.constraints.push(Constraint {
            coefficients,
            relation,
            rhs,
        });
        Ok(())
    }

    pub fn set_bound(&mut self, var: usize, bound: Bound) -> Result<(), SimplexError> {
        let count = self.num_vars();
        *self
            .bounds
            .get_mut(var)
            .ok_or(SimplexError::VariableIndex { index: var, count })? = bound;
        Ok(())
    }

    pub fn num_vars(&self) -> usize {
        self.objective.len()
    }

    pub fn direction(&self) -> Direction {
        self.direction
    }

    pub fn objective(&self) -> &[Rational] {
        &self.objective
    }

    pub fn offset(&self) -> &Rational {
        &self.offset
    }

    pub fn constraints(&self) -> &[Constraint] {
        &self.constraints
    }

    pub fn bounds(&self) -> &[Bound] {
        &self.bounds
    }

    pub fn evaluate(&self, point: &[Rational]) -> Rational {
        dot(&self.objective, point) + &self.offset
    }

    pub fn is_feasible(&self, point: &[Rational]) -> bool {
        point.len() == self.num_vars()
            && self
                .bounds
                .iter()
                .zip(point)
                .all(|(b, x)| *b == Bound::Free || !x.is_negative())
            && self.constraints.iter().all(|c| c.holds_at(point))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Optimal,
    Infeasible,
    Unbounded,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Solution {
    pub status: Status,
    pub value: Option<Rational>,
    pub point: Option<Vec<Rational>>,
    /// Standard-form column of the basic variable in each surviving row.
    pub basis: Vec<usize>,
}

impl Solution {
    pub fn is_optimal(&self) -> bool {
        self.status == Status::Optimal
    }
}

enum Outcome {
    Optimal,
    Unbounded(usize),
}

/// Dense tableau carrying its reduced-cost row.
#[derive(Clone)]
struct Tableau {
    rows: Vec<Vec<Rational>>,
    rhs: Vec<Rational>,
    basis: Vec<usize>,
    reduced: Vec<Rational>,
    /// Columns allowed to enter the basis.
    enterable: Vec<bool>,
}

impl Tableau {
    fn width(&self) -> usize {
        self.enterable.len()
    }

    fn pivot(&mut self, r: usize, c: usize) {
        let inv = self.rows[r][c].recip().expect("pivot on zero entry");
        for v in self.rows[r].iter_mut() {
            if !v.is_zero() {
                *v *= &inv;
            }
        }
        self.rhs[r] *= &inv;
        let nz: Vec<usize> = (0..self.width())
            .filter(|&j| !self.rows[r][j].is_zero())
            .collect();
        let (pivot_row, pivot_rhs) = (self.rows[r].clone(), self.rhs[r].clone());
        let eliminate = |row: &mut Vec<Rational>, factor: Rational| {
            for &j in &nz {
                row[j] -= &(&factor * &pivot_row[j]);
            }
        };
        for i in 0..self.rows.len() {
            if i == r || self.rows[i][c].is_zero() {
                continue;
            }
            let factor = self.rows[i][c].clone();
            self.rhs[i] -= &(&factor * &pivot_rhs);
            eliminate(&mut self.rows[i], factor);
        }
        if !self.reduced[c].is_zero() {
            let factor = self.reduced[c].clone();
            eliminate(&mut self.reduced, factor);
        }
        self.basis[r] = c;
    }

    /// Installs a minimization cost vector and prices out the basis.
    fn set_cost(&mut self, cost: &[Rational]) {
        let mut reduced = cost.to_vec();
        for (r, &b) in self.basis.iter().enumerate() {
            let cb = &cost[b];
            if cb.is_zero() {
                continue;
            }
            for (j, v) in self.rows[r].iter().enumerate() {
                if !v.is_zero() {
                    reduced[j] -= &(cb * v);
                }
            }
        }
        self.reduced = reduced;
    }

    fn entering(&self) -> Option<usize> {
        (0..self.width()).find(|&j| self.enterable[j] && self.reduced[j].is_negative())
    }

    fn leaving(&self, c: usize) -> Option<usize> {
        let mut best: Option<(usize, Rational)> = None;
        for r in 0..self.rows.len() {
            let a = &self.rows[r][c];
            if !a.is_positive() {
                continue;
            }
            let ratio = &self.rhs[r] / a;
            best = match best {
                None => Some((r, ratio)),
                Some((br, bratio)) => {
                    if ratio < bratio || (ratio == bratio && self.basis[r] < self.basis[br]) {
                        Some((r, ratio))
                    } else {
                        Some((br, bratio))
                    }
                }
            };
        }
        best.map(|(r, _)| r)
    }

    fn optimize(&mut self) -> Outcome {
        while let Some(c) = self.entering() {
            match self.leaving(c) {
                Some(r) => self.pivot(r, c),
                None => return Outcome::Unbounded(c),
            }
        }
        Outcome::Optimal
    }

    fn column_values(&self) -> Vec<Rational> {
        let mut x = vec![Rational::zero(); self.width()];
        for (r, &b) in self.basis.iter().enumerate() {
            x[b] = self.rhs[r].clone();
        }
        x
    }

    /// Basic solution moved one unit along the ray opened by column `c`.
    fn ray_point(&self, c: usize) -> Vec<Rational> {
        let mut x = self.column_values();
        x[c] = Rational::one();
        for (r, &b) in self.basis.iter().enumerate() {
            x[b] = &self.rhs[r] - &self.rows[r][c];
        }
        x
    }
}

/// Standard-form layout of a program: which columns stand for which
/// original variable.
#[derive(Clone)]
struct Layout {
    /// `(positive column, negative column for free variables)`.
    columns: Vec<(usize, Option<usize>)>,
    structural: usize,
}

impl Layout {
    fn of(lp: &LinearProgram) -> Self {
        let mut next = 0;
        let columns = lp
            .bounds
            .iter()
            .map(|b| {
                let pos = next;
                next += 1;
                let neg = (*b == Bound::Free).then(|| {
                    next += 1;
                    next - 1
                });
                (pos, neg)
            })
            .collect();
        Layout {
            columns,
            structural: next,
        }
    }

    fn expand(&self, coefficients: &[Rational]) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.structural];
        for (v, &(pos, neg)) in self.columns.iter().enumerate() {
            out[pos] = coefficients[v].clone();
            if let Some(neg) = neg {
                out[neg] = -&coefficients[v];
            }
        }
        out
    }

    fn recover(&self, x: &[Rational]) -> Vec<Rational> {
        self.columns
            .iter()
            .map(|&(pos, neg)| match neg {
                Some(neg) => &x[pos] - &x[neg],
                None => x[pos].clone(),
            })
            .collect()
    }

    fn unit(&self, var: usize, width: usize, sign: bool) -> Vec<Rational> {
        let mut cost = vec![Rational::zero(); width];
        let (pos, neg) = self.columns[var];
        let one = if sign { Rational::one() } else { -Rational::one() };
        if let Some(neg) = neg {
            cost[neg] = -&one;
        }
        cost[pos] = one;
        cost
    }
}

/// Phase one and the artificial clean-up. Returns a feasible tableau over
/// structural and slack columns only, or `None` when infeasible.
fn feasible_tableau(lp: &LinearProgram, layout: &Layout) -> Option<Tableau> {
    let m = lp.constraints.len();
    let mut rows: Vec<(Vec<Rational>, Relation, Rational)> = lp
        .constraints
        .iter()
        .map(|c| {
            let coeffs = layout.expand(&c.coefficients);
            if c.rhs.is_negative() {
                let flipped = match c.relation {
                    Relation::Le => Relation::Ge,
                    Relation::Ge => Relation::Le,
                    Relation::Eq => Relation::Eq,
                };
                (coeffs.iter().map(|v| -v).collect(), flipped, -&c.rhs)
            } else {
                (coeffs, c.relation, c.rhs.clone())
            }
        })
        .collect();

    let n_slack = rows.iter().filter(|(_, rel, _)| *rel != Relation::Eq).count();
    let n_art = rows.iter().filter(|(_, rel, _)| *rel != Relation::Le).count();
    let art_start = layout.structural + n_slack;
    let width = art_start + n_art;

    let mut basis = Vec::with_capacity(m);
    let (mut slack, mut art) = (layout.structural, art_start);
    for (coeffs, rel, _) in rows.iter_mut() {
        coeffs.resize(width, Rational::zero());
        match rel {
            Relation::Le => {
                coeffs[slack] = Rational::one();
                basis.push(slack);
                slack += 1;
            }
            Relation::Ge => {
                coeffs[slack] = -Rational::one();
                slack += 1;
                coeffs[art] = Rational::one();
                basis.push(art);
                art += 1;
            }
            Relation::Eq => {
                coeffs[art] = Rational::one();
                basis.push(art);
                art += 1;
            }
        }
    }

    let (rows, rhs): (Vec<_>, Vec<_>) = rows.into_iter().map(|(c, _, b)| (c, b)).unzip();
    let mut t = Tableau {
        rows,
        rhs,
        basis,
        reduced: Vec::new(),
        enterable: vec![true; width],
    };

    if n_art > 0 {
        let mut cost = vec![Rational::zero(); width];
        for c in cost.iter_mut().skip(art_start) {
            *c = Rational::one();
        }
        t.set_cost(&cost);
        // Phase one is bounded below by zero.
        let _ = t.optimize();
        let infeasibility: Rational = t
            .basis
            .iter()
            .zip(&t.rhs)
            .filter(|(&b, _)| b >= art_start)
            .map(|(_, v)| v.clone())
            .sum();
        if infeasibility.is_positive() {
            return None;
        }
        // Drive zero-level artificials out; drop rows that are redundant.
        let mut r = 0;
        while r < t.rows.len() {
            if t.basis[r] >= art_start {
                match (0..art_start).find(|&j| !t.rows[r][j].is_zero()) {
                    Some(c) => {
                        t.pivot(r, c);
                        r += 1;
                    }
                    None => {
                        t.rows.remove(r);
                        t.rhs.remove(r);
                        t.basis.remove(r);
                    }
                }
            } else {
                r += 1;
            }
        }
        for row in t.rows.iter_mut() {
            row.truncate(art_start);
        }
        t.enterable.truncate(art_start);
    }
    Some(t)
}

/// Phase-two minimization cost for the program's objective.
fn phase_two_cost(lp: &LinearProgram, layout: &Layout, width: usize) -> Vec<Rational> {
    let mut cost = layout.expand(&lp.objective);
    if lp.direction == Direction::Maximize {
        for c in cost.iter_mut() {
            *c = -&*c;
        }
    }
    cost.resize(width, Rational::zero());
    cost
}

enum Solved {
    Infeasible,
    Unbounded,
    Optimal(Tableau),
}

fn run(lp: &LinearProgram, layout: &Layout) -> Solved {
    let Some(mut t) = feasible_tableau(lp, layout) else {
        return Solved::Infeasible;
    };
    let cost = phase_two_cost(lp, layout, t.width());
    t.set_cost(&cost);
    match t.optimize() {
        Outcome::Optimal => Solved::Optimal(t),
        Outcome::Unbounded(_) => Solved::Unbounded,
    }
}

/// Solves the program exactly. The pivot sequence is fully determined by
/// the input, so repeated calls return identical solutions.
pub fn solve(lp: &LinearProgram) -> Solution {
    let layout = Layout::of(lp);
    match run(lp, &layout) {
        Solved::Infeasible => Solution {
            status: Status::Infeasible,
            value: None,
            point: None,
            basis: Vec::new(),
        },
        Solved::Unbounded => Solution {
            status: Status::Unbounded,
            value: None,
            point: None,
            basis: Vec::new(),
        },
        Solved::Optimal(t) => {
            let point = layout.recover(&t.column_values());
            Solution {
                status: Status::Optimal,
                value: Some(lp.evaluate(&point)),
                point: Some(point),
                basis: t.basis.clone(),
            }
        }
    }
}

/// Extent of one variable over the optimal face. `None` marks a direction
/// in which the face is unbounded.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VariableRange {
    pub min: Option<Rational>,
    pub max: Option<Rational>,
}

impl VariableRange {
    pub fn point(v: Rational) -> Self {
        VariableRange {
            min: Some(v.clone()),
            max: Some(v),
        }
    }

    /// True when the variable takes a single value on the face.
    pub fn is_degenerate(&self) -> bool {
        matches!((&self.min, &self.max), (Some(a), Some(b)) if a == b)
    }
}

/// Min and max of `var` over `{x feasible : objective(x) = opt}`, each
/// solved from scratch with the objective pinned by an equality row.
pub fn variable_range_on_optimal_face(
    lp: &LinearProgram,
    opt: &Rational,
    var: usize,
) -> Result<VariableRange, SimplexError> {
    let count = lp.num_vars();
    if var >= count {
        return Err(SimplexError::VariableIndex { index: var, count });
    }
    let mut probe = lp.clone();
    probe.add_constraint(lp.objective.clone(), Relation::Eq, opt - &lp.offset)?;
    let mut unit = vec![Rational::zero(); count];
    unit[var] = Rational::one();
    let extreme = |direction| {
        let mut p = probe.clone();
        p.direction = direction;
        p.objective = unit.clone();
        p.offset = Rational::zero();
        solve(&p)
    };
    let lo = extreme(Direction::Minimize);
    if lo.status == Status::Infeasible {
        return Err(SimplexError::EmptyFace(opt.clone()));
    }
    let hi = extreme(Direction::Maximize);
    Ok(VariableRange {
        min: lo.value,
        max: hi.value,
    })
}

/// Optimal tableau of a program, restricted to its optimal face.
pub struct OptimalFace {
    lp: LinearProgram,
    layout: Layout,
    tableau: Tableau,
    value: Rational,
    optimum: Vec<Rational>,
}

/// Where a face probe ended: at a vertex, or along an unbounded ray.
enum Probe {
    Vertex(Vec<Rational>),
    Ray(Vec<Rational>),
}

impl OptimalFace {
    pub fn new(lp: &LinearProgram) -> Result<Self, SimplexError> {
        let layout = Layout::of(lp);
        let mut tableau = match run(lp, &layout) {
            Solved::Infeasible => return Err(SimplexError::Infeasible),
            Solved::Unbounded => return Err(SimplexError::Unbounded),
            Solved::Optimal(t) => t,
        };
        for j in 0..tableau.width() {
            if tableau.reduced[j].is_positive() {
                tableau.enterable[j] = false;
            }
        }
        let optimum = layout.recover(&tableau.column_values());
        Ok(OptimalFace {
            value: lp.evaluate(&optimum),
            lp: lp.clone(),
            layout,
            tableau,
            optimum,
        })
    }

    pub fn value(&self) -> &Rational {
        &self.value
    }

    /// The vertex the solver stopped at.
    pub fn optimum(&self) -> &[Rational] {
        &self.optimum
    }

    fn probe(&mut self, var: usize, maximize: bool) -> Probe {
        // Minimizing the negated variable is maximizing it.
        let cost = self.layout.unit(var, self.tableau.width(), !maximize);
        self.tableau.set_cost(&cost);
        match self.tableau.optimize() {
            Outcome::Optimal => Probe::Vertex(self.layout.recover(&self.tableau.column_values())),
            Outcome::Unbounded(c) => Probe::Ray(self.layout.recover(&self.tableau.ray_point(c))),
        }
    }

    /// Range of every variable over the face, with the extreme points found
    /// for each (`(argmin, argmax)`, rays for unbounded directions).
    fn sweep(&mut self) -> Vec<(VariableRange, Vec<Rational>, Vec<Rational>)> {
        (0..self.lp.num_vars())
            .map(|v| {
                let (min, lo) = match self.probe(v, false) {
                    Probe::Vertex(p) => (Some(p[v].clone()), p),
                    Probe::Ray(p) => (None, p),
                };
                let (max, hi) = match self.probe(v, true) {
                    Probe::Vertex(p) => (Some(p[v].clone()), p),
                    Probe::Ray(p) => (None, p),
                };
                (VariableRange { min, max }, lo, hi)
            })
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FaceReport {
    pub unique: bool,
    pub value: Rational,
    pub optimum: Vec<Rational>,
    /// Two distinct optimal points, ordered lexicographically.
    pub witnesses: Option<(Vec<Rational>, Vec<Rational>)>,
    pub ranges: Vec<VariableRange>,
}

/// Decides whether the optimum is unique by minimizing and maximizing every
/// variable over the optimal face. When it is not, the witnesses are the
/// two extreme points probed for the first variable whose range is not a
/// single value.
pub fn is_optimum_unique(lp: &LinearProgram) -> Result<FaceReport, SimplexError> {
    let mut face = OptimalFace::new(lp)?;
    let sweep = face.sweep();
    let witnesses = sweep
        .iter()
        .find(|(r, _, _)| !r.is_degenerate())
        .map(|(_, lo, hi)| {
            let (a, b) = (lo.clone(), hi.clone());
            if a <= b {
                (a, b)
            } else {
                (b, a)
            }
        });
    Ok(FaceReport {
        unique: witnesses.is_none(),
        value: face.value.clone(),
        optimum: face.optimum.clone(),
        witnesses,
        ranges: sweep.into_iter().map(|(r, _, _)| r).collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::q;

    fn r(v: i64) -> Rational {
        Rational::from(v)
    }

    fn lp_from(
        direction: Direction,
        obj: &[Rational],
        rows: &[(&[Rational], Relation, Rational)],
    ) -> LinearProgram {
        let mut lp = LinearProgram::new(direction, obj.to_vec());
        for (c, rel, b) in rows {
            lp.add_constraint(c.to_vec(), *rel, b.clone()).unwrap();
        }
        lp
    }

    #[test]
    fn one_variable() {
        let lp = lp_from(Direction::Maximize, &[r(1)], &[(&[r(1)], Relation::Le, r(1))]);
        let s = solve(&lp);
        assert_eq!(s.status, Status::Optimal);
        assert_eq!(s.value, Some(r(1)));

        let lp = lp_from(
            Direction::Maximize,
            &[r(1)],
            &[(&[r(1)], Relation::Ge, r(1)), (&[r(1)], Relation::Le, r(0))],
        );
        assert_eq!(solve(&lp).status, Status::Infeasible);

        let lp = lp_from(Direction::Maximize, &[r(1)], &[(&[r(1)], Relation::Ge, r(1))]);
        assert_eq!(solve(&lp).status, Status::Unbounded);
    }

    #[test]
    fn textbook_two_phase() {
        // min 2x + 3y  s.t. x + y >= 4, x + 3y >= 6, x <= 3
        let lp = lp_from(
            Direction::Minimize,
            &[r(2), r(3)],
            &[
                (&[r(1), r(1)], Relation::Ge, r(4)),
                (&[r(1), r(3)], Relation::Ge, r(6)),
                (&[r(1), r(0)], Relation::Le, r(3)),
            ],
        );
        let s = solve(&lp);
        assert_eq!(s.value, Some(r(9)));
        assert_eq!(s.point, Some(vec![r(3), r(1)]));
    }

    #[test]
    fn equality_and_free_variables() {
        // max x - y  s.t. x + y = 1, x <= 3/2, y free
        let mut lp = lp_from(
            Direction::Maximize,
            &[r(1), r(-1)],
            &[
                (&[r(1), r(1)], Relation::Eq, r(1)),
                (&[r(1), r(0)], Relation::Le, q(3, 2)),
            ],
        );
        lp.set_bound(1, Bound::Free).unwrap();
        let s = solve(&lp);
        assert_eq!(s.value, Some(r(2)));
        assert_eq!(s.point, Some(vec![q(3, 2), q(-1, 2)]));
        assert!(lp.is_feasible(s.point.as_ref().unwrap()));
    }

    #[test]
    fn redundant_equalities() {
        let lp = lp_from(
            Direction::Maximize,
            &[r(1), r(1)],
            &[
                (&[r(1), r(1)], Relation::Eq, r(2)),
                (&[r(2), r(2)], Relation::Eq, r(4)),
                (&[r(1), r(0)], Relation::Le, r(1)),
            ],
        );
        let s = solve(&lp);
        assert_eq!(s.value, Some(r(2)));
        assert_eq!(s.basis.len(), 2);
    }

    #[test]
    fn offset_and_negative_rhs() {
        let lp =
            lp_from(Direction::Minimize, &[r(1)], &[(&[r(-1)], Relation::Le, r(-5))]).with_offset(q(1, 2));
        assert_eq!(solve(&lp).value, Some(q(11, 2)));
    }

    fn beale() -> LinearProgram {
        // Cycles under the largest-coefficient rule.
        lp_from(
            Direction::Minimize,
            &[q(-3, 4), r(20), q(-1, 2), r(6)],
            &[
                (&[q(1, 4), r(-8), r(-1), r(9)], Relation::Le, r(0)),
                (&[q(1, 2), r(-12), q(-1, 2), r(3)], Relation::Le, r(0)),
                (&[r(0), r(0), r(1), r(0)], Relation::Le, r(1)),
            ],
        )
    }

    fn kuhn() -> LinearProgram {
        lp_from(
            Direction::Minimize,
            &[r(-2), r(-3), r(1), r(12)],
            &[
                (&[r(-2), r(-9), r(1), r(9)], Relation::Le, r(0)),
                (&[q(1, 3), r(1), q(-1, 3), r(-2)], Relation::Le, r(0)),
                (&[r(2), r(3), r(-1), r(-12)], Relation::Le, r(2)),
            ],
        )
    }

    #[test]
    fn degenerate_regressions_terminate() {
        let s = solve(&beale());
        assert_eq!(s.value, Some(q(-5, 4)));
        assert_eq!(s.point, Some(vec![r(1), r(0), r(1), r(0)]));

        let s = solve(&kuhn());
        assert_eq!(s.status, Status::Optimal);
        assert_eq!(s.value, Some(r(-2)));
        assert!(kuhn().is_feasible(s.point.as_ref().unwrap()));
    }

    #[test]
    fn deterministic() {
        let a = solve(&kuhn());
        for _ in 0..3 {
            assert_eq!(solve(&kuhn()), a);
        }
    }

    #[test]
    fn face_of_a_segment() {
        // max x + y  s.t. x + y <= 2, x <= 3/2, y <= 3/2
        let lp = lp_from(
            Direction::Maximize,
            &[r(1), r(1)],
            &[
                (&[r(1), r(1)], Relation::Le, r(2)),
                (&[r(1), r(0)], Relation::Le, q(3, 2)),
                (&[r(0), r(1)], Relation::Le, q(3, 2)),
            ],
        );
        let report = is_optimum_unique(&lp).unwrap();
        assert!(!report.unique);
        assert_eq!(report.value, r(2));
        let (a, b) = report.witnesses.clone().unwrap();
        assert_eq!(a, vec![q(1, 2), q(3, 2)]);
        assert_eq!(b, vec![q(3, 2), q(1, 2)]);
        for w in [&a, &b] {
            assert!(lp.is_feasible(w));
            assert_eq!(lp.evaluate(w), r(2));
        }
        for v in 0..2 {
            let scratch = variable_range_on_optimal_face(&lp, &r(2), v).unwrap();
            assert_eq!(scratch, report.ranges[v]);
            assert_eq!(
                scratch,
                VariableRange {
                    min: Some(q(1, 2)),
                    max: Some(q(3, 2))
                }
            );
        }
        assert_eq!(
            variable_range_on_optimal_face(&lp, &r(3), 0),
            Err(SimplexError::EmptyFace(r(3)))
        );
        assert!(matches!(
            variable_range_on_optimal_face(&lp, &r(2), 5),
            Err(SimplexError::VariableIndex { .. })
        ));
    }

    #[test]
    fn unique_vertex() {
        let lp = lp_from(
            Direction::Maximize,
            &[r(2), r(1)],
            &[
                (&[r(1), r(1)], Relation::Le, r(2)),
                (&[r(1), r(0)], Relation::Le, q(3, 2)),
            ],
        );
        let report = is_optimum_unique(&lp).unwrap();
        assert!(report.unique);
        assert!(report.ranges.iter().all(VariableRange::is_degenerate));
        assert_eq!(report.optimum, vec![q(3, 2), q(1, 2)]);
    }

    #[test]
    fn unbounded_face() {
        // min y  s.t. y >= 1, x free of cost: the face {y = 1, x >= 0} is a ray.
        let lp = lp_from(
            Direction::Minimize,
            &[r(0), r(1)],
            &[(&[r(0), r(1)], Relation::Ge, r(1))],
        );
        let report = is_optimum_unique(&lp).unwrap();
        assert!(!report.unique);
        assert_eq!(
            report.ranges[0],
            VariableRange {
                min: Some(r(0)),
                max: None
            }
        );
        let (a, b) = report.witnesses.unwrap();
        assert_ne!(a, b);
        assert!(lp.is_feasible(&a) && lp.is_feasible(&b));
        assert_eq!(lp.evaluate(&a), r(1));
        assert_eq!(lp.evaluate(&b), r(1));
    }

    #[test]
    fn status_errors() {
        let lp = lp_from(Direction::Maximize, &[r(1)], &[(&[r(1)], Relation::Ge, r(1))]);
        assert!(matches!(is_optimum_unique(&lp), Err(SimplexError::Unbounded)));
        let lp = lp_from(
            Direction::Maximize,
            &[r(1)],
            &[(&[r(1)], Relation::Ge, r(1)), (&[r(1)], Relation::Le, r(0))],
        );
        assert!(matches!(is_optimum_unique(&lp), Err(SimplexError::Infeasible)));
        let mut lp = LinearProgram::new(Direction::Maximize, vec![r(1)]);
        assert_eq!(
            lp.add_constraint(vec![r(1), r(2)], Relation::Le, r(0)),
            Err(SimplexError::RowLength { expected: 1, got: 2 })
        );
    }
}
