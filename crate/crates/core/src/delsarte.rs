//! The Delsarte linear program for binary codes and its relatives.
//!
//! Four formulations are built here: the primal over `A_d, …, A_n`, its dual
//! over `c_1, …, c_n`, the same primal written in Krawtchouk decomposition
//! coordinates `b_0, …, b_n`, and that decomposition program with the
//! symmetry `b_j = b_{n-j}` imposed. Alongside them live the closed-form
//! optima for the regimes where they are known (`d <= 2` and the upper half
//! `k > h`), the uniqueness analysis built on optimal-face probing, and the
//! extension/puncturing pairing between the `(n, 2e)` and `(n-1, 2e-1)`
//! programs.

use std::fmt;

use num_bigint::BigInt;
use num_traits::One;
use serde::Serialize;
use thiserror::Error;

use crate::exact::Rational;
use crate::krawtchouk::{binomial, krawtchouk_matrix};
use crate::quasicode::{decompose, extend, puncture, Decomposition, DualSolution, Quasicode, QuasicodeError};
use crate::simplex::{self, Direction, LinearProgram, Relation, SimplexError, VariableRange};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DelsarteError {
    #[error("invalid parameters (n, d) = ({n}, {d}); need 1 <= d <= n")]
    Params { n: usize, d: usize },
    #[error("invalid parity parameters (n, e) = ({n}, {e}); need 1 <= e and 2e <= n")]
    ParityParams { n: usize, e: usize },
    #[error(transparent)]
    Simplex(#[from] SimplexError),
    #[error(transparent)]
    Quasicode(#[from] QuasicodeError),
    #[error("property failed: {0}")]
    PropertyFailed(String),
}

/// Block length `n` and minimal distance `d`, `1 <= d <= n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct ProblemParams {
    n: usize,
    d: usize,
}

impl ProblemParams {
    pub fn new(n: usize, d: usize) -> Result<Self, DelsarteError> {
        if d < 1 || d > n {
            return Err(DelsarteError::Params { n, d });
        }
        Ok(ProblemParams { n, d })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> usize {
        self.d
    }

    /// `h = n - d`.
    pub fn h(&self) -> usize {
        self.n - self.d
    }

    /// `k = 2⌈d/2⌉`, the least even integer not below `d`.
    pub fn k(&self) -> usize {
        self.d.div_ceil(2) * 2
    }

    /// `k > h`: the regime where the optimum is unique and closed-form.
    pub fn is_upper_half(&self) -> bool {
        self.k() > self.h()
    }
}

impl fmt::Display for ProblemParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.n, self.d)
    }
}

fn kr(n: usize, j: usize, i: usize) -> Rational {
    Rational::from(krawtchouk_matrix(n).get(j as i64, i as i64))
}

fn binom(n: usize, k: usize) -> Rational {
    Rational::from(binomial(n as i64, k as i64))
}

fn two_pow(n: usize) -> Rational {
    Rational::from(BigInt::one() << n)
}

fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(num, den).expect("nonzero denominator")
}

/// Maximize `1 + Σ_{i>=d} A_i` over `A_d, …, A_n >= 0` subject to
/// `C(n,j) + Σ_i A_i K_j(i) >= 0` for `j` in `1..=n`. `A_0 = 1` is folded
/// into the constants and `A_1, …, A_{d-1}` do not appear.
pub fn build_primal(p: &ProblemParams) -> LinearProgram {
    let (n, d) = (p.n, p.d);
    let vars = n - d + 1;
    let mut lp =
        LinearProgram::new(Direction::Maximize, vec![Rational::one(); vars]).with_offset(Rational::one());
    for j in 1..=n {
        let row = (d..=n).map(|i| kr(n, j, i)).collect();
        lp.add_constraint(row, Relation::Ge, -binom(n, j))
            .expect("row length matches");
    }
    lp
}

/// Full `A_0, …, A_n` from a point of [`build_primal`].
pub fn primal_point(p: &ProblemParams, x: &[Rational]) -> Vec<Rational> {
    let mut a = vec![Rational::zero(); p.n + 1];
    a[0] = Rational::one();
    for (v, value) in x.iter().enumerate() {
        a[p.d + v] = value.clone();
    }
    a
}

/// Minimize `1 + Σ_{j>=1} c_j C(n,j)` over `c_1, …, c_n >= 0` subject to
/// `1 + Σ_j c_j K_j(i) <= 0` for `i` in `d..=n`.
pub fn build_dual(p: &ProblemParams) -> LinearProgram {
    let (n, d) = (p.n, p.d);
    let objective = (1..=n).map(|j| binom(n, j)).collect();
    let mut lp = LinearProgram::new(Direction::Minimize, objective).with_offset(Rational::one());
    for i in d..=n {
        let row = (1..=n).map(|j| kr(n, j, i)).collect();
        lp.add_constraint(row, Relation::Le, -Rational::one())
            .expect("row length matches");
    }
    lp
}

/// Full `c_0, …, c_n` from a point of [`build_dual`].
pub fn dual_point(x: &[Rational]) -> Vec<Rational> {
    std::iter::once(Rational::one())
        .chain(x.iter().cloned())
        .collect()
}

fn decomposition_rows(lp: &mut LinearProgram, n: usize, d: usize, width: usize) {
    let pad = |mut row: Vec<Rational>| {
        row.resize(width, Rational::zero());
        row
    };
    lp.add_constraint(
        pad((0..=n).map(|j| binom(n, j)).collect()),
        Relation::Eq,
        two_pow(n),
    )
    .expect("row length matches");
    for i in 1..=n {
        let rel = if i < d { Relation::Eq } else { Relation::Ge };
        lp.add_constraint(pad((0..=n).map(|j| kr(n, j, i)).collect()), rel, Rational::zero())
            .expect("row length matches");
    }
}

/// Maximize `b_0` over `b_0, …, b_n >= 0` subject to
/// `Σ_j C(n,j) b_j = 2^n` and `Σ_j b_j K_j(i) >= 0` for `i` in `1..=n`,
/// with equality below `d`.
pub fn build_decomposition_lp(p: &ProblemParams) -> LinearProgram {
    let n = p.n;
    let mut objective = vec![Rational::zero(); n + 1];
    objective[0] = Rational::one();
    let mut lp = LinearProgram::new(Direction::Maximize, objective);
    decomposition_rows(&mut lp, n, p.d, n + 1);
    lp
}

fn unit_difference(width: usize, a: usize, b: usize) -> Vec<Rational> {
    let mut row = vec![Rational::zero(); width];
    row[a] = Rational::one();
    row[b] = -Rational::one();
    row
}

/// Decomposition program with symmetry imposed.
///
/// For even `d` the variables are `b_0, …, b_n` with `b_j = b_{n-j}`. For
/// odd `d` the program is read as the `(N - 1, 2e - 1)` member of a pair with
/// `N = n + 1`: an extra variable `b_N` is pinned to `b_0` and the symmetry
/// is `b_j = b_{N-j}`, so both members of the pair share variables
/// `b_0, …, b_N`.
pub fn build_symmetric_lp(p: &ProblemParams) -> LinearProgram {
    let n = p.n;
    let top = if p.d.is_multiple_of(2) { n } else { n + 1 };
    let width = top + 1;
    let mut objective = vec![Rational::zero(); width];
    objective[0] = Rational::one();
    let mut lp = LinearProgram::new(Direction::Maximize, objective);
    decomposition_rows(&mut lp, n, p.d, width);
    if top > n {
        lp.add_constraint(unit_difference(width, top, 0), Relation::Eq, Rational::zero())
            .expect("row length matches");
    }
    for j in 1..=top {
        if j < top - j {
            lp.add_constraint(unit_difference(width, j, top - j), Relation::Eq, Rational::zero())
                .expect("row length matches");
        }
    }
    lp
}

fn optimal(lp: &LinearProgram) -> simplex::Solution {
    let s = simplex::solve(lp);
    assert!(s.is_optimal(), "Delsarte programs are feasible and bounded");
    s
}

/// Exact optimal value of the primal program, i.e. the LP upper bound on
/// the size of a binary code of length `n` and minimal distance `d`.
pub fn lp_bound(p: &ProblemParams) -> Rational {
    optimal(&build_primal(p)).value.expect("optimal value")
}

/// Solver optimum of the primal as a quasicode.
pub fn solve_primal(p: &ProblemParams) -> Quasicode {
    let s = optimal(&build_primal(p));
    Quasicode::new(
        p.n,
        p.d,
        primal_point(p, s.point.as_ref().expect("optimal point")),
    )
    .expect("solver vertex satisfies the quasicode invariants")
}

pub fn solve_dual(p: &ProblemParams) -> DualSolution {
    let s = optimal(&build_dual(p));
    DualSolution::new(p.n, p.d, dual_point(s.point.as_ref().expect("optimal point"))).expect("shape matches")
}

pub fn solve_decomposition(p: &ProblemParams) -> Decomposition {
    let s = optimal(&build_decomposition_lp(p));
    Decomposition::new(p.n, s.point.expect("optimal point")).expect("shape matches")
}

/// Solver optimum of [`build_symmetric_lp`], truncated to `b_0, …, b_n`.
pub fn solve_symmetric(p: &ProblemParams) -> Decomposition {
    let s = optimal(&build_symmetric_lp(p));
    let mut b = s.point.expect("optimal point");
    b.truncate(p.n + 1);
    Decomposition::new(p.n, b).expect("shape matches")
}

pub fn symmetric_bound(p: &ProblemParams) -> Rational {
    optimal(&build_symmetric_lp(p)).value.expect("optimal value")
}

/// Closed-form primal optimum for `d = 1`, `d = 2` and the upper half.
pub fn closed_form_primal(p: &ProblemParams) -> Option<Quasicode> {
    let (n, d) = (p.n, p.d);
    let mut a = vec![Rational::zero(); n + 1];
    a[0] = Rational::one();
    if p.is_upper_half() {
        let (ni, di) = (n as i64, d as i64);
        if d % 2 == 0 {
            a[d] = ratio(ni, 2 * di - ni);
        } else {
            a[d] = ratio(di + 1, 2 * di - ni + 1);
            if d < n {
                a[d + 1] = ratio(ni - di, 2 * di - ni + 1);
            }
        }
    } else if d == 1 {
        a = (0..=n).map(|i| binom(n, i)).collect();
    } else if d == 2 {
        a = (0..=n)
            .map(|i| if i % 2 == 0 { binom(n, i) } else { Rational::zero() })
            .collect();
    } else {
        return None;
    }
    Some(Quasicode::new(n, d, a).expect("closed forms satisfy the invariants"))
}

/// Closed-form dual optimum for `d = 1`, `d = 2` and the upper half, except
/// `d = n >= 3` where the optimal set is a polytope rather than a point.
///
/// Where the defining index sets collide (`n - 1 = 1`, or `n = 1`), the
/// coefficients add.
pub fn closed_form_dual(p: &ProblemParams) -> Option<DualSolution> {
    let (n, d) = (p.n, p.d);
    let (ni, di) = (n as i64, d as i64);
    let mut c = vec![Rational::zero(); n + 1];
    c[0] = Rational::one();
    if d == 1 {
        c = vec![Rational::one(); n + 1];
    } else if d == 2 {
        c = (0..=n).map(|j| ratio(ni - j as i64, ni)).collect();
    } else if d == n {
        return None;
    } else if p.is_upper_half() {
        if d % 2 == 0 {
            let s = 2 * di - ni;
            c[1] += &ratio(s + 1, s * (s + 2));
            c[n - 1] += &ratio(1, s * (s + 2));
        } else {
            let s = 2 * di - ni + 1;
            c[1] += &ratio(1, s);
            c[n] += &ratio(1, s);
        }
    } else {
        return None;
    }
    Some(DualSolution::new(n, d, c).expect("shape matches"))
}

/// Upper-half decomposition `b_j = 1 - K_k(j; h+k) / K_k(1; h+k)`.
pub fn closed_form_decomposition(p: &ProblemParams) -> Option<Decomposition> {
    if !p.is_upper_half() {
        return None;
    }
    let (k, len) = (p.k(), p.h() + p.k());
    let denom = kr(len, k, 1);
    let b = (0..=p.n)
        .map(|j| Rational::one() - kr(len, k, j) / &denom)
        .collect();
    Some(Decomposition::new(p.n, b).expect("shape matches"))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Target {
    Primal,
    Dual,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Unique,
    NonUnique,
}

/// Uniqueness verdict for one program. Points are full sequences
/// (`A_0, …, A_n` or `c_0, …, c_n`), with the folded coordinates filled in.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct UniquenessReport {
    pub params: ProblemParams,
    pub target: Target,
    pub verdict: Verdict,
    pub optimum_value: Rational,
    /// The vertex the solver returned.
    pub optimum: Vec<Rational>,
    pub witness_a: Option<Vec<Rational>>,
    pub witness_b: Option<Vec<Rational>>,
    pub variable_ranges: Vec<VariableRange>,
}

impl UniquenessReport {
    pub fn is_unique(&self) -> bool {
        self.verdict == Verdict::Unique
    }
}

fn analyze(
    p: &ProblemParams,
    target: Target,
    lp: &LinearProgram,
    lift: impl Fn(&[Rational]) -> Vec<Rational>,
    fixed: Vec<VariableRange>,
) -> UniquenessReport {
    let face = simplex::is_optimum_unique(lp).expect("Delsarte programs are feasible and bounded");
    let (witness_a, witness_b) = match face.witnesses {
        Some((a, b)) => (Some(lift(&a)), Some(lift(&b))),
        None => (None, None),
    };
    let mut variable_ranges = fixed;
    variable_ranges.extend(face.ranges);
    UniquenessReport {
        params: *p,
        target,
        verdict: if face.unique {
            Verdict::Unique
        } else {
            Verdict::NonUnique
        },
        optimum_value: face.value,
        optimum: lift(&face.optimum),
        witness_a,
        witness_b,
        variable_ranges,
    }
}

/// Exact uniqueness verdict for the primal program. Witnesses for a
/// non-unique optimum are ordered lexicographically.
pub fn primal_uniqueness(p: &ProblemParams) -> UniquenessReport {
    let mut fixed = vec![VariableRange::point(Rational::one())];
    fixed.extend((1..p.d).map(|_| VariableRange::point(Rational::zero())));
    analyze(p, Target::Primal, &build_primal(p), |x| primal_point(p, x), fixed)
}

pub fn dual_uniqueness(p: &ProblemParams) -> UniquenessReport {
    let fixed = vec![VariableRange::point(Rational::one())];
    analyze(p, Target::Dual, &build_dual(p), dual_point, fixed)
}

/// Optima of the `(n, 2e)` and `(n-1, 2e-1)` programs related by extension
/// and puncturing.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ParityPair {
    pub even: Quasicode,
    pub odd: Quasicode,
}

/// Structural properties a [`ParityPair`] must have.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ParityProperties {
    /// `b^E_j = b^E_{n-j}`.
    pub even_symmetric: bool,
    /// `b^O = (b^E_0, …, b^E_{n-1})`.
    pub odd_is_truncation: bool,
    /// `A^E_i = A^O_{i-1} + A^O_i` for even `i`, and `A^E` vanishes at odd `i`.
    pub even_is_extension: bool,
    /// `C(n-1, i) A^O_{i-1} = C(n-1, i-1) A^O_i` for even `i`.
    pub odd_binomial_ratio: bool,
}

impl ParityProperties {
    pub fn all(&self) -> bool {
        self.even_symmetric && self.odd_is_truncation && self.even_is_extension && self.odd_binomial_ratio
    }
}

impl ParityPair {
    pub fn properties(&self) -> ParityProperties {
        let n = self.even.n();
        let be = decompose(&self.even);
        let bo = decompose(&self.odd);
        let ae = self.even.values();
        let ao = |i: usize| self.odd.values().get(i).cloned().unwrap_or_default();
        let even_is = (1..=n).all(|i| {
            if i % 2 == 1 {
                ae[i].is_zero()
            } else {
                ae[i] == ao(i - 1) + ao(i)
            }
        });
        let ratio_ok = (2..=n)
            .step_by(2)
            .all(|i| binom(n - 1, i) * ao(i - 1) == binom(n - 1, i - 1) * ao(i));
        ParityProperties {
            even_symmetric: be.is_symmetric(),
            odd_is_truncation: bo.b[..] == be.b[..n],
            even_is_extension: even_is,
            odd_binomial_ratio: ratio_ok,
        }
    }
}

/// Builds `(A^E, A^O)` for `2e <= n`: a solver optimum of `(n-1, 2e-1)` is
/// extended to `A^E`, and `A^O` is the puncturing of `A^E`. When the odd
/// program has a unique optimum, `A^O` is that optimum.
pub fn parity_pair(n: usize, e: usize) -> Result<ParityPair, DelsarteError> {
    if e < 1 || 2 * e > n {
        return Err(DelsarteError::ParityParams { n, e });
    }
    let seed = solve_primal(&ProblemParams::new(n - 1, 2 * e - 1)?);
    let even = extend(&seed);
    let odd = puncture(&even)?;
    let pair = ParityPair { even, odd };
    let props = pair.properties();
    if !props.all() {
        return Err(DelsarteError::PropertyFailed(format!(
            "parity pair ({n}, {e}): {props:?}"
        )));
    }
    Ok(pair)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::q;
    use crate::quasicode::{check_complementary_slackness, check_feasible, is_even, recompose};

    fn pp(n: usize, d: usize) -> ProblemParams {
        ProblemParams::new(n, d).unwrap()
    }

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| Rational::from(x)).collect()
    }

    #[test]
    fn params() {
        assert!(ProblemParams::new(3, 0).is_err());
        assert!(ProblemParams::new(3, 4).is_err());
        let p = pp(9, 5);
        assert_eq!((p.h(), p.k()), (4, 6));
        assert!(p.is_upper_half());
        assert!(!pp(17, 5).is_upper_half());
        // Upper half means 2d > n for even d and 2d >= n for odd d.
        for n in 1..=30 {
            for d in 1..=n {
                let expected = if d % 2 == 0 { 2 * d > n } else { 2 * d >= n };
                assert_eq!(pp(n, d).is_upper_half(), expected, "({n},{d})");
            }
        }
    }

    #[test]
    fn primal_shape_and_small_bounds() {
        let lp = build_primal(&pp(4, 4));
        assert_eq!(lp.num_vars(), 1);
        assert_eq!(lp.constraints().len(), 4);
        let coeffs: Vec<Rational> = lp
            .constraints()
            .iter()
            .map(|c| c.coefficients[0].clone())
            .collect();
        assert_eq!(coeffs, ints(&[-4, 6, -4, 1]));
        let s = simplex::solve(&lp);
        assert_eq!(s.value, Some(q(2, 1)));
        assert_eq!(s.point, Some(ints(&[1])));

        assert_eq!(build_primal(&pp(17, 5)).num_vars(), 13);
        for n in 1..=8 {
            assert_eq!(lp_bound(&pp(n, 1)), two_pow(n));
        }
    }

    #[test]
    fn dual_values() {
        for n in 1..=8 {
            assert_eq!(optimal(&build_dual(&pp(n, n))).value, Some(q(2, 1)));
            assert_eq!(optimal(&build_dual(&pp(n, 1))).value, Some(two_pow(n)));
            assert_eq!(solve_dual(&pp(n, 1)).c, vec![Rational::one(); n + 1]);
            if n >= 2 {
                assert_eq!(optimal(&build_dual(&pp(n, 2))).value, Some(two_pow(n - 1)));
            }
        }
    }

    #[test]
    fn decomposition_lp_examples() {
        for n in 2..=7 {
            let b = solve_decomposition(&pp(n, 1)).b;
            let mut expected = vec![Rational::zero(); n + 1];
            expected[0] = two_pow(n);
            assert_eq!(b, expected);
            let b = solve_decomposition(&pp(n, 2)).b;
            expected[0] = two_pow(n - 1);
            expected[n] = two_pow(n - 1);
            assert_eq!(b, expected);
        }
        let b = solve_decomposition(&pp(6, 4));
        assert_eq!(Some(b), closed_form_decomposition(&pp(6, 4)));
    }

    #[test]
    fn closed_form_primal_examples() {
        assert_eq!(
            closed_form_primal(&pp(8, 6)).unwrap().values(),
            ints(&[1, 0, 0, 0, 0, 0, 2, 0, 0]).as_slice()
        );
        assert_eq!(
            closed_form_primal(&pp(9, 5)).unwrap().values(),
            ints(&[1, 0, 0, 0, 0, 3, 2, 0, 0, 0]).as_slice()
        );
        assert_eq!(
            closed_form_primal(&pp(5, 1)).unwrap().values(),
            ints(&[1, 5, 10, 10, 5, 1]).as_slice()
        );
        assert_eq!(closed_form_primal(&pp(17, 5)), None);
    }

    #[test]
    fn closed_form_dual_examples() {
        let c = closed_form_dual(&pp(8, 6)).unwrap().c;
        assert_eq!(c[0], q(1, 1));
        assert_eq!(c[1], q(5, 24));
        assert_eq!(c[7], q(1, 24));
        let c = closed_form_dual(&pp(9, 5)).unwrap().c;
        assert_eq!((c[1].clone(), c[9].clone()), (q(1, 2), q(1, 2)));
        let c = closed_form_dual(&pp(6, 5)).unwrap().c;
        assert_eq!(
            c,
            vec![q(1, 1), q(1, 5), q(0, 1), q(0, 1), q(0, 1), q(0, 1), q(1, 5)]
        );
        assert_eq!(closed_form_dual(&pp(5, 5)), None);
    }

    #[test]
    fn closed_form_decomposition_examples() {
        assert_eq!(
            closed_form_decomposition(&pp(4, 4)).unwrap().b,
            ints(&[2, 0, 2, 0, 2])
        );
        assert_eq!(
            closed_form_decomposition(&pp(3, 3)).unwrap().b,
            ints(&[2, 0, 2, 0])
        );
        for n in 1..=12 {
            for d in 1..=n {
                if let Some(b) = closed_form_decomposition(&pp(n, d)) {
                    assert!(b.b[1].is_zero());
                    let a = recompose(&b);
                    assert_eq!(a, closed_form_primal(&pp(n, d)).unwrap().values());
                }
            }
        }
    }

    #[test]
    fn closed_forms_pair_up() {
        for n in 1..=9 {
            for d in 1..=n {
                let p = pp(n, d);
                let (Some(a), Some(c)) = (closed_form_primal(&p), closed_form_dual(&p)) else {
                    continue;
                };
                assert_eq!(check_feasible(&a), Ok(()), "{p}");
                assert!(c.is_feasible(), "{p}: {:?}", c.feasibility_violation());
                assert_eq!(a.objective(), c.objective(), "{p}");
                assert!(check_complementary_slackness(&a, &c)
                    .unwrap()
                    .iter()
                    .all(|s| s.satisfied));
            }
        }
    }

    #[test]
    fn uniqueness_small() {
        let r = primal_uniqueness(&pp(4, 4));
        assert!(r.is_unique());
        assert_eq!(r.optimum, ints(&[1, 0, 0, 0, 1]));
        assert_eq!(r.variable_ranges.len(), 5);
        assert!(r.variable_ranges.iter().all(VariableRange::is_degenerate));

        let r = primal_uniqueness(&pp(5, 1));
        assert!(r.is_unique());
        assert_eq!(r.optimum, ints(&[1, 5, 10, 10, 5, 1]));

        assert!(!dual_uniqueness(&pp(3, 3)).is_unique());
        let r = dual_uniqueness(&pp(6, 5));
        assert!(r.is_unique());
        assert_eq!(r.optimum, closed_form_dual(&pp(6, 5)).unwrap().c);
        assert!(!dual_uniqueness(&pp(5, 2)).is_unique());
        assert!(!dual_uniqueness(&pp(5, 4)).is_unique());
    }

    #[test]
    fn face_probe_matches_scratch_ranges() {
        for (n, d) in [(3, 3), (5, 2), (5, 4), (7, 3)] {
            let p = pp(n, d);
            let lp = build_dual(&p);
            let report = dual_uniqueness(&p);
            for v in 0..lp.num_vars() {
                let scratch = simplex::variable_range_on_optimal_face(&lp, &report.optimum_value, v).unwrap();
                assert_eq!(scratch, report.variable_ranges[v + 1], "{p} var {v}");
            }
        }
    }

    #[test]
    fn symmetric_programs() {
        let p = pp(6, 4);
        let b = solve_symmetric(&p);
        assert!(b.is_symmetric());
        let a = Quasicode::new(6, 4, recompose(&b)).unwrap();
        assert!(is_even(&a));
        assert_eq!(symmetric_bound(&p), lp_bound(&p));
        assert_eq!(symmetric_bound(&pp(8, 4)), symmetric_bound(&pp(7, 3)));
        assert_eq!(build_symmetric_lp(&pp(7, 3)).num_vars(), 9);
    }

    #[test]
    fn parity_pairs() {
        let pair = parity_pair(4, 2).unwrap();
        assert_eq!(pair.odd.values(), ints(&[1, 0, 0, 1]).as_slice());
        assert_eq!(pair.even.values(), ints(&[1, 0, 0, 0, 1]).as_slice());
        assert!(pair.properties().all());
        assert_eq!(lp_bound(&pp(10, 4)), lp_bound(&pp(9, 3)));
        assert!(matches!(
            parity_pair(3, 2),
            Err(DelsarteError::ParityParams { .. })
        ));
        assert!(matches!(
            parity_pair(3, 0),
            Err(DelsarteError::ParityParams { .. })
        ));
    }
}
