//! Binary Krawtchouk polynomials.
//!
//! `K_j(i; n) = Σ_k (-1)^k C(i, k) C(n - i, j - k)`, with the convention that
//! the value is zero whenever `i` or `j` falls outside `[0, n]`.
//!
//! Tables are built row by row with the three-term recurrence and memoized
//! per block length; [`krawtchouk_eval`] evaluates the alternating sum
//! directly and serves as the independent reference.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

/// Binomial coefficient with `C(a, b) = 0` unless `0 <= b <= a`.
pub fn binomial(a: i64, b: i64) -> BigInt {
    if a < 0 || b < 0 || b > a {
        return BigInt::zero();
    }
    let b = b.min(a - b);
    let mut acc = BigInt::one();
    for t in 0..b {
        acc *= a - t;
        acc /= t + 1;
    }
    acc
}

/// Evaluates `K_j(i; n)` from its defining alternating sum.
pub fn krawtchouk_eval(j: i64, i: i64, n: usize) -> BigInt {
    let n = n as i64;
    if !(0..=n).contains(&j) || !(0..=n).contains(&i) {
        return BigInt::zero();
    }
    let mut acc = BigInt::zero();
    for k in 0..=j {
        let term = binomial(i, k) * binomial(n - i, j - k);
        if k % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

/// The `(n+1) × (n+1)` Krawtchouk matrix, `entries[j][i] = K_j(i; n)`.
#[derive(Clone, PartialEq, Eq)]
pub struct KrawtchoukTable {
    n: usize,
    entries: Vec<Vec<BigInt>>,
}

impl KrawtchoukTable {
    /// Builds the table from `K_0 = 1`, `K_1(i) = n - 2i` and
    /// `(j+1) K_{j+1}(i) = (n - 2i) K_j(i) - (n - j + 1) K_{j-1}(i)`.
    pub fn build(n: usize) -> Self {
        let width = n + 1;
        let mut entries: Vec<Vec<BigInt>> = Vec::with_capacity(width);
        entries.push(vec![BigInt::one(); width]);
        if n >= 1 {
            entries.push(
                (0..width)
                    .map(|i| BigInt::from(n as i64 - 2 * i as i64))
                    .collect(),
            );
        }
        for j in 1..n {
            let next: Vec<BigInt> = (0..width)
                .map(|i| {
                    let lhs = BigInt::from(n as i64 - 2 * i as i64) * &entries[j][i]
                        - BigInt::from((n - j + 1) as i64) * &entries[j - 1][i];
                    let (quot, rem) = lhs.div_rem(&BigInt::from(j as i64 + 1));
                    debug_assert!(rem.is_zero());
                    quot
                })
                .collect();
            entries.push(next);
        }
        KrawtchoukTable { n, entries }
    }

    /// Wraps externally supplied entries. Only the shape is checked, so this
    /// is how tests feed deliberately corrupted tables to the identity suite.
    pub fn from_entries(n: usize, entries: Vec<Vec<BigInt>>) -> Option<Self> {
        if entries.len() != n + 1 || entries.iter().any(|row| row.len() != n + 1) {
            return None;
        }
        Some(KrawtchoukTable { n, entries })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `K_j(i; n)`, zero outside `[0, n]²`.
    pub fn get(&self, j: i64, i: i64) -> BigInt {
        self.entry(j, i).cloned().unwrap_or_default()
    }

    pub fn entry(&self, j: i64, i: i64) -> Option<&BigInt> {
        let n = self.n as i64;
        if (0..=n).contains(&j) && (0..=n).contains(&i) {
            Some(&self.entries[j as usize][i as usize])
        } else {
            None
        }
    }

    pub fn row(&self, j: usize) -> &[BigInt] {
        &self.entries[j]
    }

    pub fn rows(&self) -> &[Vec<BigInt>] {
        &self.entries
    }

    /// Matrix square, `(K²)_{jk} = Σ_i K_j(i) K_i(k)`.
    pub fn squared(&self) -> Vec<Vec<BigInt>> {
        let w = self.n + 1;
        (0..w)
            .map(|j| {
                (0..w)
                    .map(|k| (0..w).map(|i| &self.entries[j][i] * &self.entries[i][k]).sum())
                    .collect()
            })
            .collect()
    }
}

impl fmt::Debug for KrawtchoukTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "KrawtchoukTable(n = {})", self.n)?;
        for row in &self.entries {
            let cells: Vec<String> = row.iter().map(|v| v.to_string()).collect();
            writeln!(f, "  [{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

fn cache() -> &'static RwLock<HashMap<usize, Arc<KrawtchoukTable>>> {
    static CACHE: OnceLock<RwLock<HashMap<usize, Arc<KrawtchoukTable>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Memoized table for block length `n`. Two threads asking for the same new
/// `n` may both build it; the first insert wins and both results are equal.
pub fn krawtchouk_matrix(n: usize) -> Arc<KrawtchoukTable> {
    if let Some(t) = cache().read().expect("krawtchouk cache poisoned").get(&n) {
        return Arc::clone(t);
    }
    let built = Arc::new(KrawtchoukTable::build(n));
    let mut guard = cache().write().expect("krawtchouk cache poisoned");
    Arc::clone(guard.entry(n).or_insert(built))
}

/// Outcome of one identity over its full index range.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityCheck {
    pub name: &'static str,
    pub passed: bool,
    /// First index tuple at which the identity failed.
    pub counterexample: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    pub n: usize,
    pub checks: Vec<IdentityCheck>,
}

impl IdentityReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &IdentityCheck> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

fn first_failure<I, F>(indices: I, mut holds: F) -> Option<String>
where
    I: IntoIterator,
    I::Item: fmt::Debug,
    F: FnMut(&I::Item) -> bool,
{
    indices
        .into_iter()
        .find(|ix| !holds(ix))
        .map(|ix| format!("{ix:?}"))
}

fn pairs(lo: i64, hi: i64) -> impl Iterator<Item = (i64, i64)> {
    (lo..=hi).flat_map(move |a| (lo..=hi).map(move |b| (a, b)))
}

/// Checks every classical identity for block length `n` against the supplied
/// tables for lengths `n - 1`, `n` and `n + 1`. Counterexamples are reported
/// as the tuple of quantified indices, prefixed with `n`.
pub fn check_identities(
    shorter: &KrawtchoukTable,
    table: &KrawtchoukTable,
    longer: &KrawtchoukTable,
) -> IdentityReport {
    let n = table.n() as i64;
    let nu = table.n();
    let k = |j: i64, i: i64| table.get(j, i);
    let kp = |j: i64, i: i64| shorter.get(j, i);
    let kn = |j: i64, i: i64| longer.get(j, i);
    let c = |a: i64, b: i64| binomial(a, b);
    let mut checks = Vec::new();
    let mut push = |name: &'static str, indices: &str, cx: Option<String>| {
        checks.push(IdentityCheck {
            name,
            passed: cx.is_none(),
            counterexample: cx.map(|s| format!("n={n}, {indices}={s}")),
        });
    };

    push(
        "defining sum equals recurrence table",
        "(j, i)",
        first_failure(pairs(0, n), |&(j, i)| k(j, i) == krawtchouk_eval(j, i, nu)),
    );

    push(
        "reciprocity C(n,i) K_j(i) = C(n,j) K_i(j)",
        "(j, i)",
        first_failure(pairs(0, n), |&(j, i)| c(n, i) * k(j, i) == c(n, j) * k(i, j)),
    );

    push("K_0(i) = 1", "i", first_failure(0..=n, |&i| k(0, i).is_one()));
    push(
        "K_j(0) = C(n,j)",
        "j",
        first_failure(0..=n, |&j| k(j, 0) == c(n, j)),
    );
    let sign = |e: i64| if e % 2 == 0 { BigInt::one() } else { -BigInt::one() };
    push(
        "K_{n-j}(i) = (-1)^i K_j(i)",
        "(j, i)",
        first_failure(pairs(0, n), |&(j, i)| k(n - j, i) == sign(i) * k(j, i)),
    );
    push(
        "K_j(n-i) = (-1)^j K_j(i)",
        "(j, i)",
        first_failure(pairs(0, n), |&(j, i)| k(j, n - i) == sign(j) * k(j, i)),
    );

    let two_n = BigInt::one() << nu;
    push(
        "orthogonality 2^-n Σ_i C(n,i) K_j(i) K_k(i) = C(n,j) δ_jk",
        "(j, k)",
        first_failure(pairs(0, n), |&(j, kk)| {
            let s: BigInt = (0..=n).map(|i| c(n, i) * k(j, i) * k(kk, i)).sum();
            let expected = if j == kk { c(n, j) * &two_n } else { BigInt::zero() };
            s == expected
        }),
    );

    let sq = table.squared();
    push(
        "K² = 2^n I",
        "(j, k)",
        first_failure(pairs(0, n), |&(j, kk)| {
            let expected = if j == kk { two_n.clone() } else { BigInt::zero() };
            sq[j as usize][kk as usize] == expected
        }),
    );

    push(
        "column sums Σ_j K_j = (2^n, 0, …, 0)",
        "i",
        first_failure(0..=n, |&i| {
            let s: BigInt = (0..=n).map(|j| k(j, i)).sum();
            s == if i == 0 { two_n.clone() } else { BigInt::zero() }
        }),
    );

    push(
        "three-term recurrence (j+1)K_{j+1} = (n-2i)K_j - (n-j+1)K_{j-1}",
        "(j, i)",
        first_failure(pairs(0, n), |&(j, i)| {
            BigInt::from(j + 1) * k(j + 1, i)
                == BigInt::from(n - 2 * i) * k(j, i) - BigInt::from(n - j + 1) * k(j - 1, i)
        }),
    );

    push(
        "K_j(i;n) = K_j(i;n-1) + K_{j-1}(i;n-1)",
        "(j, i)",
        first_failure((0..=n).flat_map(|j| (0..n).map(move |i| (j, i))), |&(j, i)| {
            k(j, i) == kp(j, i) + kp(j - 1, i)
        }),
    );

    push(
        "2 K_j(i;n-1) = K_j(i;n) + K_j(i+1;n)",
        "(j, i)",
        first_failure(pairs(0, n - 1), |&(j, i)| {
            BigInt::from(2) * kp(j, i) == k(j, i) + k(j, i + 1)
        }),
    );

    push(
        "|K_j(1)| = |C(n,j)(n-2j)/n| >= |K_j(i)| for j != n/2",
        "j",
        first_failure((0..=n).filter(|&j| 2 * j != n), |&j| {
            let at_one = k(j, 1).abs();
            let closed = BigInt::from(n) * &at_one == (c(n, j) * BigInt::from(n - 2 * j)).abs();
            closed && (1..n).all(|i| at_one >= k(j, i).abs())
        }),
    );

    push(
        "K_j(2⌈i/2⌉;n+1) = K_j(i;n) + K_{n+1-j}(i;n)",
        "(j, i)",
        first_failure(
            (1..=n + 1).flat_map(|j| (0..=n).map(move |i| (j, i))),
            |&(j, i)| kn(j, 2 * ((i + 1) / 2)) == k(j, i) + k(n + 1 - j, i),
        ),
    );

    IdentityReport { n: nu, checks }
}

/// Runs [`check_identities`] on the memoized tables around `n`.
pub fn verify_identities(n: usize) -> IdentityReport {
    let shorter = krawtchouk_matrix(n.saturating_sub(1));
    check_identities(&shorter, &krawtchouk_matrix(n), &krawtchouk_matrix(n + 1))
}
