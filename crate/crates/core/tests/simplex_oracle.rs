//! The exact simplex against brute-force vertex enumeration on small
//! bounded programs, including the optimal-face analysis.

use delsarte_core::exact::Rational;
use delsarte_core::simplex::{
    is_optimum_unique, solve, variable_range_on_optimal_face, Direction, LinearProgram, Relation, Status,
};
use proptest::prelude::*;

#[derive(Debug, Clone)]
struct Row {
    coefficients: Vec<i64>,
    relation: Relation,
    rhs: i64,
}

fn rat(v: i64) -> Rational {
    Rational::from(v)
}

/// Solves the square system `m x = b`, or `None` when it is singular.
fn solve_square(mut m: Vec<Vec<Rational>>, mut b: Vec<Rational>) -> Option<Vec<Rational>> {
    let k = m.len();
    for col in 0..k {
        let pivot = (col..k).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, pivot);
        b.swap(col, pivot);
        for r in 0..k {
            if r != col && !m[r][col].is_zero() {
                let f = &m[r][col] / &m[col][col];
                let pivot_row = m[col].clone();
                for (entry, p) in m[r].iter_mut().zip(&pivot_row) {
                    *entry -= &(&f * p);
                }
                let delta = &f * &b[col];
                b[r] -= &delta;
            }
        }
    }
    Some((0..k).map(|i| &b[i] / &m[i][i]).collect())
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

fn vertices(lp: &LinearProgram) -> Vec<Vec<Rational>> {
    let nv = lp.num_vars();
    let mut planes: Vec<(Vec<Rational>, Rational)> = lp
        .constraints()
        .iter()
        .map(|c| (c.coefficients.clone(), c.rhs.clone()))
        .collect();
    for v in 0..nv {
        let mut unit = vec![rat(0); nv];
        unit[v] = rat(1);
        planes.push((unit, rat(0)));
    }
    let mut out: Vec<Vec<Rational>> = Vec::new();
    for s in subsets(planes.len(), nv) {
        let m = s.iter().map(|&i| planes[i].0.clone()).collect();
        let b = s.iter().map(|&i| planes[i].1.clone()).collect();
        if let Some(x) = solve_square(m, b) {
            if lp.is_feasible(&x) && !out.contains(&x) {
                out.push(x);
            }
        }
    }
    out
}

fn build(nv: usize, maximize: bool, objective: &[i64], rows: &[Row]) -> LinearProgram {
    let direction = if maximize {
        Direction::Maximize
    } else {
        Direction::Minimize
    };
    let mut lp = LinearProgram::new(direction, objective[..nv].iter().map(|&v| rat(v)).collect());
    for r in rows {
        lp.add_constraint(
            r.coefficients[..nv].iter().map(|&v| rat(v)).collect(),
            r.relation,
            rat(r.rhs),
        )
        .unwrap();
    }
    for v in 0..nv {
        let mut unit = vec![rat(0); nv];
        unit[v] = rat(1);
        lp.add_constraint(unit, Relation::Le, rat(4)).unwrap();
    }
    lp
}

fn row() -> impl Strategy<Value = Row> {
    (
        prop::collection::vec(-3i64..=3, 3),
        prop_oneof![Just(Relation::Le), Just(Relation::Ge), Just(Relation::Le)],
        -2i64..=8,
    )
        .prop_map(|(coefficients, relation, rhs)| Row {
            coefficients,
            relation,
            rhs,
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn matches_vertex_enumeration(
        nv in 1usize..=3,
        maximize in any::<bool>(),
        objective in prop::collection::vec(-2i64..=2, 3),
        rows in prop::collection::vec(row(), 0..5),
    ) {
        let lp = build(nv, maximize, &objective, &rows);
        let verts = vertices(&lp);
        let s = solve(&lp);
        if verts.is_empty() {
            prop_assert_eq!(s.status, Status::Infeasible);
            return Ok(());
        }
        prop_assert_eq!(s.status, Status::Optimal);
        let values: Vec<Rational> = verts.iter().map(|x| lp.evaluate(x)).collect();
        let best = if maximize { values.iter().max() } else { values.iter().min() }.unwrap().clone();
        prop_assert_eq!(s.value.as_ref(), Some(&best));
        let point = s.point.unwrap();
        prop_assert!(lp.is_feasible(&point));

        let optimal: Vec<&Vec<Rational>> =
            verts.iter().zip(&values).filter(|(_, v)| **v == best).map(|(x, _)| x).collect();
        let report = is_optimum_unique(&lp).unwrap();
        prop_assert_eq!(report.unique, optimal.len() == 1);
        prop_assert_eq!(&report.value, &best);
        for v in 0..nv {
            let lo = optimal.iter().map(|x| x[v].clone()).min();
            let hi = optimal.iter().map(|x| x[v].clone()).max();
            prop_assert_eq!(&report.ranges[v].min, &lo);
            prop_assert_eq!(&report.ranges[v].max, &hi);
            let scratch = variable_range_on_optimal_face(&lp, &best, v).unwrap();
            prop_assert_eq!(&scratch, &report.ranges[v]);
        }
        if let Some((a, b)) = &report.witnesses {
            prop_assert!(a < b);
            prop_assert!(lp.is_feasible(a) && lp.is_feasible(b));
            prop_assert_eq!(&lp.evaluate(a), &best);
            prop_assert_eq!(&lp.evaluate(b), &best);
        }
    }
}
