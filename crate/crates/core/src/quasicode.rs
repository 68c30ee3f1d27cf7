//! Quasicodes and their transforms.
//!
//! A quasicode is a point `A = (A_0, …, A_n)` of the Delsarte polytope for
//! `(n, d)`. Its Krawtchouk decomposition `b` satisfies
//! `A_i = C(n,i) Σ_j b_j K_j(i) / 2^n`; the Delsarte inequalities become
//! `b_j >= 0` and the objective `Σ A_i` becomes `b_0`.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exact::{format_seq, Rational};
use crate::krawtchouk::{binomial, krawtchouk_matrix};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QuasicodeError {
    #[error("expected {expected} entries for block length {n}, got {got}")]
    Length { n: usize, expected: usize, got: usize },
    #[error("minimal distance d = {d} outside [1, {n}]")]
    Distance { n: usize, d: usize },
    #[error("quasicode violates its invariants: {0}")]
    Invariant(Violation),
    #[error("puncturing needs d >= 2, got d = {0}")]
    PunctureDistance(usize),
    #[error("parameters differ: quasicode ({qn}, {qd}) vs dual ({cn}, {cd})")]
    Mismatch {
        qn: usize,
        qd: usize,
        cn: usize,
        cd: usize,
    },
}

/// First constraint that a candidate quasicode fails.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    InitialEntry {
        value: Rational,
    },
    NonzeroBelowDistance {
        index: usize,
        value: Rational,
    },
    Negative {
        index: usize,
        value: Rational,
    },
    /// `Σ_i A_i K_j(i) < 0`.
    Delsarte {
        j: usize,
        value: Rational,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::InitialEntry { value } => write!(f, "A_0 = {value}, expected 1"),
            Violation::NonzeroBelowDistance { index, value } => {
                write!(f, "A_{index} = {value} below the minimal distance")
            }
            Violation::Negative { index, value } => write!(f, "A_{index} = {value} is negative"),
            Violation::Delsarte { j, value } => {
                write!(f, "Delsarte inequality j = {j}: Σ A_i K_j(i) = {value} < 0")
            }
        }
    }
}

/// Helper for `serde(try_from)`: the wire layout of [`Quasicode`].
#[derive(Serialize, Deserialize)]
struct QuasicodeWire {
    n: usize,
    d: usize,
    #[serde(rename = "A")]
    a: Vec<Rational>,
}

/// Candidate distance distribution for the `(n, d)` program.
///
/// [`Quasicode::new`] enforces `A_0 = 1`, the zeros below `d` and
/// nonnegativity. [`Quasicode::raw`] only checks the shape, for callers that
/// want to hand arbitrary vectors to [`check_feasible`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "QuasicodeWire", into = "QuasicodeWire")]
pub struct Quasicode {
    n: usize,
    d: usize,
    a: Vec<Rational>,
}

impl TryFrom<QuasicodeWire> for Quasicode {
    type Error = QuasicodeError;

    fn try_from(w: QuasicodeWire) -> Result<Self, Self::Error> {
        Quasicode::new(w.n, w.d, w.a)
    }
}

impl From<Quasicode> for QuasicodeWire {
    fn from(q: Quasicode) -> Self {
        QuasicodeWire {
            n: q.n,
            d: q.d,
            a: q.a,
        }
    }
}

fn check_shape(n: usize, d: usize, len: usize) -> Result<(), QuasicodeError> {
    if len != n + 1 {
        return Err(QuasicodeError::Length {
            n,
            expected: n + 1,
            got: len,
        });
    }
    if d < 1 || d > n {
        return Err(QuasicodeError::Distance { n, d });
    }
    Ok(())
}

impl Quasicode {
    pub fn new(n: usize, d: usize, a: Vec<Rational>) -> Result<Self, QuasicodeError> {
        let q = Quasicode::raw(n, d, a)?;
        if let Some(v) = q.invariant_violation() {
            return Err(QuasicodeError::Invariant(v));
        }
        Ok(q)
    }

    pub fn raw(n: usize, d: usize, a: Vec<Rational>) -> Result<Self, QuasicodeError> {
        check_shape(n, d, a.len())?;
        Ok(Quasicode { n, d, a })
    }

    /// The quasicode `(1, 0, …, 0)` supported only at the origin.
    pub fn trivial(n: usize, d: usize) -> Result<Self, QuasicodeError> {
        let mut a = vec![Rational::zero(); n + 1];
        a[0] = Rational::one();
        Quasicode::new(n, d, a)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn values(&self) -> &[Rational] {
        &self.a
    }

    pub fn into_values(self) -> Vec<Rational> {
        self.a
    }

    /// `Σ_i A_i`, the size bound this quasicode certifies.
    pub fn objective(&self) -> Rational {
        self.a.iter().sum()
    }

    fn invariant_violation(&self) -> Option<Violation> {
        if !self.a[0].is_one() {
            return Some(Violation::InitialEntry {
                value: self.a[0].clone(),
            });
        }
        for i in 1..self.d {
            if !self.a[i].is_zero() {
                return Some(Violation::NonzeroBelowDistance {
                    index: i,
                    value: self.a[i].clone(),
                });
            }
        }
        self.a
            .iter()
            .enumerate()
            .find(|(_, v)| v.is_negative())
            .map(|(index, v)| Violation::Negative {
                index,
                value: v.clone(),
            })
    }
}

impl fmt::Display for Quasicode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(n={}, d={}) A = {}", self.n, self.d, format_seq(&self.a))
    }
}

/// Krawtchouk decomposition `b_0, …, b_n` of a length-`n` sequence.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "DecompositionWire")]
pub struct Decomposition {
    pub n: usize,
    pub b: Vec<Rational>,
}

#[derive(Deserialize)]
struct DecompositionWire {
    n: usize,
    b: Vec<Rational>,
}

impl TryFrom<DecompositionWire> for Decomposition {
    type Error = QuasicodeError;

    fn try_from(w: DecompositionWire) -> Result<Self, Self::Error> {
        Decomposition::new(w.n, w.b)
    }
}

impl Decomposition {
    pub fn new(n: usize, b: Vec<Rational>) -> Result<Self, QuasicodeError> {
        if b.len() != n + 1 {
            return Err(QuasicodeError::Length {
                n,
                expected: n + 1,
                got: b.len(),
            });
        }
        Ok(Decomposition { n, b })
    }

    /// `b_j = b_{n-j}` for every `j`.
    pub fn is_symmetric(&self) -> bool {
        (0..=self.n).all(|j| self.b[j] == self.b[self.n - j])
    }
}

/// Dual point `c_0, …, c_n` for the `(n, d)` program.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "DualWire")]
pub struct DualSolution {
    pub n: usize,
    pub d: usize,
    pub c: Vec<Rational>,
}

#[derive(Deserialize)]
struct DualWire {
    n: usize,
    d: usize,
    c: Vec<Rational>,
}

impl TryFrom<DualWire> for DualSolution {
    type Error = QuasicodeError;

    fn try_from(w: DualWire) -> Result<Self, Self::Error> {
        DualSolution::new(w.n, w.d, w.c)
    }
}

impl DualSolution {
    pub fn new(n: usize, d: usize, c: Vec<Rational>) -> Result<Self, QuasicodeError> {
        check_shape(n, d, c.len())?;
        Ok(DualSolution { n, d, c })
    }

    /// `Σ_j c_j C(n, j)`.
    pub fn objective(&self) -> Rational {
        self.c
            .iter()
            .enumerate()
            .map(|(j, c)| c * &Rational::from(binomial(self.n as i64, j as i64)))
            .sum()
    }

    /// `Σ_j c_j K_j(i)`.
    pub fn constraint_value(&self, i: usize) -> Rational {
        let k = krawtchouk_matrix(self.n);
        self.c
            .iter()
            .enumerate()
            .map(|(j, c)| c * &Rational::from(k.get(j as i64, i as i64)))
            .sum()
    }

    /// Description of the first violated dual constraint, if any.
    pub fn feasibility_violation(&self) -> Option<String> {
        if !self.c[0].is_one() {
            return Some(format!("c_0 = {}, expected 1", self.c[0]));
        }
        if let Some(j) = (1..=self.n).find(|&j| self.c[j].is_negative()) {
            return Some(format!("c_{j} = {} is negative", self.c[j]));
        }
        (self.d..=self.n).find_map(|i| {
            let v = self.constraint_value(i);
            v.is_positive()
                .then(|| format!("dual constraint i = {i}: Σ c_j K_j(i) = {v} > 0"))
        })
    }

    pub fn is_feasible(&self) -> bool {
        self.feasibility_violation().is_none()
    }
}

fn two_pow(n: usize) -> Rational {
    Rational::from(BigInt::one() << n)
}

/// `b_j = Σ_i A_i K_j(i) / C(n, j)` for an arbitrary sequence.
pub fn decompose_values(n: usize, a: &[Rational]) -> Vec<Rational> {
    let k = krawtchouk_matrix(n);
    (0..=n)
        .map(|j| {
            let s: Rational = a
                .iter()
                .zip(k.row(j))
                .map(|(ai, kji)| ai * &Rational::from(kji))
                .sum();
            s / Rational::from(binomial(n as i64, j as i64))
        })
        .collect()
}

/// `A_i = C(n, i) Σ_j b_j K_j(i) / 2^n` for an arbitrary sequence.
pub fn recompose_values(n: usize, b: &[Rational]) -> Vec<Rational> {
    let k = krawtchouk_matrix(n);
    let scale = two_pow(n);
    (0..=n)
        .map(|i| {
            let s: Rational = b
                .iter()
                .enumerate()
                .map(|(j, bj)| bj * &Rational::from(k.get(j as i64, i as i64)))
                .sum();
            s * Rational::from(binomial(n as i64, i as i64)) / &scale
        })
        .collect()
}

pub fn decompose(q: &Quasicode) -> Decomposition {
    Decomposition {
        n: q.n,
        b: decompose_values(q.n, &q.a),
    }
}

/// Inverse of [`decompose`]. Returns a bare sequence; whether it is a valid
/// quasicode is for the caller to decide.
pub fn recompose(dec: &Decomposition) -> Vec<Rational> {
    recompose_values(dec.n, &dec.b)
}

/// Parity-bit extension: `(n, d)` to `(n + 1, 2⌈d/2⌉)`. Odd entries vanish
/// and each even entry absorbs its predecessor.
pub fn extend(q: &Quasicode) -> Quasicode {
    let n = q.n + 1;
    let at = |i: usize| q.a.get(i).cloned().unwrap_or_default();
    let a = (0..=n)
        .map(|i| {
            if i % 2 == 1 {
                Rational::zero()
            } else if i == 0 {
                at(0)
            } else {
                at(i) + at(i - 1)
            }
        })
        .collect();
    Quasicode {
        n,
        d: q.d.div_ceil(2) * 2,
        a,
    }
}

/// Puncturing: drop the last decomposition coefficient and recompose at
/// length `n - 1`. Maps `(n, d)` to `(n - 1, d - 1)`.
pub fn puncture(q: &Quasicode) -> Result<Quasicode, QuasicodeError> {
    if q.d < 2 {
        return Err(QuasicodeError::PunctureDistance(q.d));
    }
    let mut b = decompose_values(q.n, &q.a);
    b.pop();
    let a = recompose_values(q.n - 1, &b);
    Ok(Quasicode {
        n: q.n - 1,
        d: q.d - 1,
        a,
    })
}

/// `{ i > 0 : A_i > 0 }`.
pub fn support(q: &Quasicode) -> BTreeSet<usize> {
    q.a.iter()
        .enumerate()
        .skip(1)
        .filter(|(_, v)| v.is_positive())
        .map(|(i, _)| i)
        .collect()
}

pub fn is_even(q: &Quasicode) -> bool {
    q.a.iter().skip(1).step_by(2).all(Rational::is_zero)
}

/// `Σ_i A_i K_j(i)` for every `j`.
pub fn delsarte_values(n: usize, a: &[Rational]) -> Vec<Rational> {
    let k = krawtchouk_matrix(n);
    (0..=n)
        .map(|j| {
            a.iter()
                .zip(k.row(j))
                .map(|(ai, kji)| ai * &Rational::from(kji))
                .sum()
        })
        .collect()
}

/// Verifies every constraint of the `(n, d)` program exactly, stopping at
/// the first one that fails.
pub fn check_feasible(q: &Quasicode) -> Result<(), Violation> {
    if let Some(v) = q.invariant_violation() {
        return Err(v);
    }
    let sums = delsarte_values(q.n, &q.a);
    match sums
        .into_iter()
        .enumerate()
        .skip(1)
        .find(|(_, v)| v.is_negative())
    {
        Some((j, value)) => Err(Violation::Delsarte { j, value }),
        None => Ok(()),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SlacknessKind {
    /// `A_i > 0` forces `Σ_j c_j K_j(i) = 0`.
    PrimalSupport,
    /// `c_j > 0` forces `Σ_i A_i K_j(i) = 0`.
    DualSupport,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SlacknessCondition {
    pub kind: SlacknessKind,
    pub index: usize,
    /// The sum that must vanish.
    pub value: Rational,
    pub satisfied: bool,
}

/// Lists every complementary-slackness condition activated by the supports
/// of `q` and `c`, with its exact residual.
pub fn check_complementary_slackness(
    q: &Quasicode,
    c: &DualSolution,
) -> Result<Vec<SlacknessCondition>, QuasicodeError> {
    if q.n != c.n || q.d != c.d {
        return Err(QuasicodeError::Mismatch {
            qn: q.n,
            qd: q.d,
            cn: c.n,
            cd: c.d,
        });
    }
    let mut out = Vec::new();
    for i in q.d..=q.n {
        if q.a[i].is_positive() {
            let value = c.constraint_value(i);
            out.push(SlacknessCondition {
                kind: SlacknessKind::PrimalSupport,
                index: i,
                satisfied: value.is_zero(),
                value,
            });
        }
    }
    let sums = delsarte_values(q.n, &q.a);
    for (j, value) in sums.into_iter().enumerate().skip(1) {
        if c.c[j].is_positive() {
            out.push(SlacknessCondition {
                kind: SlacknessKind::DualSupport,
                index: j,
                satisfied: value.is_zero(),
                value,
            });
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::q;
    use proptest::prelude::*;

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| Rational::from(x)).collect()
    }

    fn binomial_row(n: usize) -> Vec<Rational> {
        (0..=n)
            .map(|i| Rational::from(binomial(n as i64, i as i64)))
            .collect()
    }

    fn face_17_5_first() -> Quasicode {
        let a = vec![
            q(1, 1),
            q(0, 1),
            q(0, 1),
            q(0, 1),
            q(0, 1),
            q(52, 1),
            q(304, 3),
            q(176, 3),
            q(250, 3),
            q(520, 3),
            q(368, 3),
            q(112, 3),
            q(32, 1),
            q(20, 1),
            q(0, 1),
            q(0, 1),
            q(1, 1),
            q(0, 1),
        ];
        Quasicode::new(17, 5, a).unwrap()
    }

    fn face_17_5_second() -> Quasicode {
        let a = vec![
            q(1, 1),
            q(0, 1),
            q(0, 1),
            q(0, 1),
            q(0, 1),
            q(51, 1),
            q(307, 3),
            q(191, 3),
            q(235, 3),
            q(490, 3),
            q(398, 3),
            q(142, 3),
            q(22, 1),
            q(15, 1),
            q(5, 1),
            q(1, 1),
            q(0, 1),
            q(0, 1),
        ];
        Quasicode::new(17, 5, a).unwrap()
    }

    #[test]
    fn construction_enforces_invariants() {
        assert!(matches!(
            Quasicode::new(3, 1, ints(&[1, 0, 0])),
            Err(QuasicodeError::Length { .. })
        ));
        assert!(matches!(
            Quasicode::new(3, 4, ints(&[1, 0, 0, 1])),
            Err(QuasicodeError::Distance { .. })
        ));
        assert!(matches!(
            Quasicode::new(3, 3, ints(&[2, 0, 0, 1])),
            Err(QuasicodeError::Invariant(_))
        ));
        assert!(matches!(
            Quasicode::new(3, 3, ints(&[1, 1, 0, 1])),
            Err(QuasicodeError::Invariant(_))
        ));
        assert!(Quasicode::raw(3, 3, ints(&[1, 0, 0, -1])).is_ok());
    }

    #[test]
    fn decompose_examples() {
        for n in 1..=8 {
            let d1 = Quasicode::new(n, 1, binomial_row(n)).unwrap();
            let mut expected = vec![Rational::zero(); n + 1];
            expected[0] = two_pow(n);
            assert_eq!(decompose(&d1).b, expected);

            let origin = Quasicode::trivial(n, 1).unwrap();
            assert_eq!(decompose(&origin).b, vec![Rational::one(); n + 1]);

            let even: Vec<Rational> = binomial_row(n)
                .into_iter()
                .enumerate()
                .map(|(i, v)| if i % 2 == 0 { v } else { Rational::zero() })
                .collect();
            if n >= 2 {
                let d2 = Quasicode::new(n, 2, even).unwrap();
                let mut expected = vec![Rational::zero(); n + 1];
                expected[0] = two_pow(n - 1);
                expected[n] = two_pow(n - 1);
                assert_eq!(decompose(&d2).b, expected);
                assert!(is_even(&d2));
            }
        }
    }

    #[test]
    fn decomposition_objective_is_b0() {
        let qc = face_17_5_first();
        assert_eq!(decompose(&qc).b[0], qc.objective());
        assert_eq!(qc.objective(), q(2048, 3));
    }

    #[test]
    fn recompose_examples() {
        let mut b = vec![Rational::zero(); 6];
        b[0] = two_pow(5);
        assert_eq!(recompose(&Decomposition::new(5, b).unwrap()), binomial_row(5));
        let ones = Decomposition::new(3, vec![Rational::one(); 4]).unwrap();
        assert_eq!(recompose(&ones), ints(&[1, 0, 0, 0]));
    }

    #[test]
    fn extend_examples() {
        let q33 = Quasicode::new(3, 3, ints(&[1, 0, 0, 1])).unwrap();
        let e = extend(&q33);
        assert_eq!((e.n(), e.d()), (4, 4));
        assert_eq!(e.values(), ints(&[1, 0, 0, 0, 1]).as_slice());

        let q11 = Quasicode::new(1, 1, ints(&[1, 1])).unwrap();
        let e = extend(&q11);
        assert_eq!((e.n(), e.d()), (2, 2));
        assert_eq!(e.values(), ints(&[1, 0, 1]).as_slice());

        let e = extend(&face_17_5_second());
        assert_eq!((e.n(), e.d()), (18, 6));
        assert_eq!(e.values()[6], q(460, 3));
        assert_eq!(e.objective(), q(2048, 3));
        assert!(check_feasible(&e).is_ok());
    }

    #[test]
    fn puncture_examples() {
        let q44 = Quasicode::new(4, 4, ints(&[1, 0, 0, 0, 1])).unwrap();
        let p = puncture(&q44).unwrap();
        assert_eq!((p.n(), p.d()), (3, 3));
        assert_eq!(p.values(), ints(&[1, 0, 0, 1]).as_slice());

        let q22 = Quasicode::new(2, 2, ints(&[1, 0, 1])).unwrap();
        let p = puncture(&q22).unwrap();
        assert_eq!(p.values(), ints(&[1, 1]).as_slice());

        assert_eq!(
            puncture(&extend(&Quasicode::new(3, 3, ints(&[1, 0, 0, 1])).unwrap()))
                .unwrap()
                .values(),
            ints(&[1, 0, 0, 1]).as_slice()
        );

        let q31 = Quasicode::new(3, 1, binomial_row(3)).unwrap();
        assert_eq!(puncture(&q31), Err(QuasicodeError::PunctureDistance(1)));
    }

    #[test]
    fn support_examples() {
        assert_eq!(
            support(&Quasicode::new(3, 3, ints(&[1, 0, 0, 1])).unwrap()),
            BTreeSet::from([3])
        );
        let mut expected: BTreeSet<usize> = (5..=13).collect();
        expected.insert(16);
        assert_eq!(support(&face_17_5_first()), expected);
        assert!(support(&Quasicode::trivial(6, 2).unwrap()).is_empty());
    }

    #[test]
    fn evenness() {
        assert!(is_even(&Quasicode::new(2, 2, ints(&[1, 0, 1])).unwrap()));
        assert!(!is_even(&Quasicode::new(3, 3, ints(&[1, 0, 0, 1])).unwrap()));
    }

    #[test]
    fn feasibility_examples() {
        assert_eq!(check_feasible(&face_17_5_first()), Ok(()));
        assert_eq!(check_feasible(&face_17_5_second()), Ok(()));

        let neg = Quasicode::raw(4, 1, ints(&[1, 0, 0, 0, -1])).unwrap();
        assert!(matches!(
            check_feasible(&neg),
            Err(Violation::Negative { index: 4, .. })
        ));

        let over = Quasicode::new(3, 3, ints(&[1, 0, 0, 3])).unwrap();
        assert_eq!(
            check_feasible(&over),
            Err(Violation::Delsarte {
                j: 1,
                value: q(-6, 1)
            })
        );
    }

    #[test]
    fn slackness_d1() {
        for n in 1..=8 {
            let a = Quasicode::new(n, 1, binomial_row(n)).unwrap();
            let c = DualSolution::new(n, 1, vec![Rational::one(); n + 1]).unwrap();
            assert!(c.is_feasible());
            assert_eq!(c.objective(), two_pow(n));
            let conds = check_complementary_slackness(&a, &c).unwrap();
            assert_eq!(conds.len(), 2 * n);
            assert!(conds.iter().all(|c| c.satisfied));

            if n != 2 {
                let mut perturbed = vec![Rational::one(); n + 1];
                perturbed[1] = q(2, 1);
                let c = DualSolution::new(n, 1, perturbed).unwrap();
                let conds = check_complementary_slackness(&a, &c).unwrap();
                let j1 = conds
                    .iter()
                    .find(|c| c.kind == SlacknessKind::DualSupport && c.index == 1)
                    .unwrap();
                assert!(j1.satisfied);
                // Residual at i is K_1(i) = n - 2i.
                for cond in conds.iter().filter(|c| c.kind == SlacknessKind::PrimalSupport) {
                    assert_eq!(cond.value, Rational::from(n as i64 - 2 * cond.index as i64));
                    assert_eq!(cond.satisfied, 2 * cond.index == n);
                }
                assert!(conds.iter().any(|c| !c.satisfied));
            }
        }
    }

    #[test]
    fn slackness_mismatch() {
        let a = Quasicode::new(3, 3, ints(&[1, 0, 0, 1])).unwrap();
        let c = DualSolution::new(3, 2, ints(&[1, 0, 0, 0])).unwrap();
        assert!(matches!(
            check_complementary_slackness(&a, &c),
            Err(QuasicodeError::Mismatch { .. })
        ));
    }

    #[test]
    fn json_layout() {
        let a = Quasicode::new(3, 3, ints(&[1, 0, 0, 1])).unwrap();
        let s = serde_json::to_string(&a).unwrap();
        assert_eq!(s, r#"{"n":3,"d":3,"A":["1","0","0","1"]}"#);
        assert_eq!(serde_json::from_str::<Quasicode>(&s).unwrap(), a);
        assert!(serde_json::from_str::<Quasicode>(r#"{"n":3,"d":3,"A":["1","0","0"]}"#).is_err());
        assert!(serde_json::from_str::<Quasicode>(r#"{"n":3,"d":3,"A":["1","0","0","-1"]}"#).is_err());

        let dec = decompose(&a);
        let s = serde_json::to_string(&dec).unwrap();
        assert_eq!(s, r#"{"n":3,"b":["2","0","2","0"]}"#);
        assert_eq!(serde_json::from_str::<Decomposition>(&s).unwrap(), dec);

        let c = DualSolution::new(3, 3, vec![q(1, 1), q(1, 4), q(0, 1), q(1, 4)]).unwrap();
        let s = serde_json::to_string(&c).unwrap();
        assert_eq!(serde_json::from_str::<DualSolution>(&s).unwrap(), c);
    }

    fn arb_seq(max_n: usize) -> impl Strategy<Value = (usize, Vec<Rational>)> {
        (0..=max_n).prop_flat_map(|n| {
            (Just(n), proptest::collection::vec((-50i64..50, 1i64..20), n + 1))
                .prop_map(|(n, v)| (n, v.into_iter().map(|(a, b)| q(a, b)).collect()))
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn transform_is_bijective((n, v) in arb_seq(14)) {
            prop_assert_eq!(recompose_values(n, &decompose_values(n, &v)), v.clone());
            prop_assert_eq!(decompose_values(n, &recompose_values(n, &v)), v);
        }

        #[test]
        fn even_iff_symmetric((n, v) in arb_seq(12), zero_odd in any::<bool>()) {
            prop_assume!(n >= 1);
            let mut a = v;
            a[0] = Rational::one();
            if zero_odd {
                for i in (1..=n).step_by(2) {
                    a[i] = Rational::zero();
                }
            }
            let qc = Quasicode::raw(n, 1, a).unwrap();
            prop_assert_eq!(is_even(&qc), decompose(&qc).is_symmetric());
        }
    }
}
