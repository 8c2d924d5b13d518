//! Counting intervals, boolean intervals and the Euler characteristic.
//!
//! All counts are exact big integers. Row `n` of the interval table has
//! `C(n,2) + 1` entries (ranks `0..=C(n,2)`); row `n` of the boolean table has
//! `n` entries (ranks `0..n`).

use std::fmt::Write as _;

use num_bigint::BigUint;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::limits::check_exhaustive;
use crate::orders::middle_leq;
use crate::{Error, Permutation, Result};

fn require_size(n: usize) -> Result<()> {
    if n == 0 {
        Err(Error::EmptySize)
    } else {
        Ok(())
    }
}

pub fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * k)
}

pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    (0..k).fold(BigUint::one(), |acc, i| acc * (n - i) / (i + 1))
}

fn choose2(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// `n! (n+1)! / 2^n`, the number of intervals of the middle order.
pub fn interval_count_total(n: usize) -> Result<BigUint> {
    require_size(n)?;
    let numerator = factorial(n) * factorial(n + 1);
    let (quotient, remainder) = numerator.div_rem(&(BigUint::one() << n));
    debug_assert!(remainder.is_zero());
    Ok(quotient)
}

/// The same count as a product over the chain factors: `prod C(i+2, 2)`.
pub fn interval_count_product(n: usize) -> Result<BigUint> {
    require_size(n)?;
    Ok((0..n).map(|i| binomial(i + 2, 2)).product())
}

/// `f(n, k)` for `k = 0..=C(n,2)`, from
/// `f(n,k) = sum_{h=0}^{n-1} (n-h) f(n-1, k-h)` with `f(1,0) = 1`.
pub fn intervals_by_rank(n: usize) -> Result<Vec<BigUint>> {
    require_size(n)?;
    let mut row = vec![BigUint::one()];
    for m in 2..=n {
        let mut next = vec![BigUint::zero(); choose2(m) + 1];
        for (k, slot) in next.iter_mut().enumerate() {
            for h in 0..m.min(k + 1) {
                if let Some(prev) = row.get(k - h) {
                    *slot += prev * (m - h);
                }
            }
        }
        row = next;
    }
    Ok(row)
}

/// `H_n = 1 + 1/2 + ... + 1/n` as an exact fraction.
pub fn harmonic(n: usize) -> BigRational {
    (1..=n).fold(BigRational::zero(), |acc, k| {
        acc + BigRational::new(1.into(), k.into())
    })
}

/// Number of cover relations, `f(n, 1)`, cross-checked against
/// `n! (n - H_n)`. Errors if the two disagree.
pub fn covering_relation_count(n: usize) -> Result<BigUint> {
    let from_recursion = intervals_by_rank(n)?.get(1).cloned().unwrap_or_default();
    let closed = BigRational::from_integer(factorial(n).into())
        * (BigRational::from_integer(n.into()) - harmonic(n));
    if !closed.is_integer() || closed.to_integer() != from_recursion.clone().into() {
        return Err(Error::Inconsistent(format!(
            "f({n},1) = {from_recursion} but n!(n - H_n) = {closed}"
        )));
    }
    Ok(from_recursion)
}

fn poly_mul(a: &[BigUint], b: &[BigUint]) -> Vec<BigUint> {
    let mut out = vec![BigUint::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Coefficients of `p_n(x) = prod_{i=1}^{n} sum_{j=1}^{i} D(x^j)`, where
/// `D(x^j) = j x^(j-1)`. Reversing the row gives [`intervals_by_rank`].
pub fn polynomial_row(n: usize) -> Result<Vec<BigUint>> {
    require_size(n)?;
    let mut poly = vec![BigUint::one()];
    for i in 1..=n {
        let factor: Vec<BigUint> = (1..=i).map(BigUint::from).collect();
        poly = poly_mul(&poly, &factor);
    }
    Ok(poly)
}

/// `Some(rank)` if `[v, w]` is boolean (every coordinate grows by 0 or 1),
/// `None` otherwise. Errors unless `v <= w`.
pub fn is_boolean_interval(v: &Permutation, w: &Permutation) -> Result<Option<usize>> {
    if !middle_leq(v, w)? {
        return Err(Error::NotComparable);
    }
    let (x, y) = (v.inversion_sequence(), w.inversion_sequence());
    let mut rank = 0;
    for (&a, &b) in x.coords().iter().zip(y.coords()) {
        match b - a {
            0 => {}
            1 => rank += 1,
            _ => return Ok(None),
        }
    }
    Ok(Some(rank))
}

/// `(2n - 1)!!`.
pub fn boolean_interval_total(n: usize) -> Result<BigUint> {
    require_size(n)?;
    Ok((1..=n).map(|i| BigUint::from(2 * i - 1)).product())
}

/// Rows `c(m, 0..=m)` of unsigned Stirling numbers of the first kind for
/// `m = 0..=n`.
fn stirling_rows(n: usize) -> Vec<Vec<BigUint>> {
    let mut rows = vec![vec![BigUint::one()]];
    for m in 1..=n {
        let prev = &rows[m - 1];
        let row = (0..=m)
            .map(|j| {
                let mut value = BigUint::zero();
                if j >= 1 {
                    value += &prev[j - 1];
                }
                if j < m {
                    value += &prev[j] * (m - 1);
                }
                value
            })
            .collect();
        rows.push(row);
    }
    rows
}

/// `c(n, j)`, the number of permutations of size `n` with `j` cycles.
pub fn stirling_first_unsigned(n: usize, j: usize) -> BigUint {
    if j > n {
        return BigUint::zero();
    }
    stirling_rows(n).swap_remove(n).swap_remove(j)
}

/// `c(n, 0..=n)`.
pub fn stirling_row(n: usize) -> Vec<BigUint> {
    stirling_rows(n).swap_remove(n)
}

/// `b(n, k) = sum_i C(i, k) c(n, n - i)` for `k = 0..n`.
pub fn boolean_by_rank(n: usize) -> Result<Vec<BigUint>> {
    require_size(n)?;
    let c = stirling_row(n);
    Ok((0..n)
        .map(|k| (0..=n).map(|i| binomial(i, k) * &c[n - i]).sum())
        .collect())
}

/// Same row from `b(n,k) = n b(n-1,k) + (n-1) b(n-1,k-1)`, `b(1,0) = 1`.
pub fn boolean_by_rank_recursive(n: usize) -> Result<Vec<BigUint>> {
    require_size(n)?;
    let mut row = vec![BigUint::one()];
    for m in 2..=n {
        row = (0..m)
            .map(|k| {
                let mut value = BigUint::zero();
                if let Some(same) = row.get(k) {
                    value += same * m;
                }
                if k >= 1 {
                    value += &row[k - 1] * (m - 1);
                }
                value
            })
            .collect();
    }
    Ok(row)
}

/// Number of right-to-left non-minima; equals the number of nonzero
/// inversion-sequence coordinates.
pub fn euler_characteristic(w: &Permutation) -> usize {
    w.len() - w.right_to_left_minima().len()
}

/// Histogram of [`euler_characteristic`] over `S_n`, indexed by `k = 0..n`.
pub fn euler_distribution(n: usize) -> Result<Vec<BigUint>> {
    check_exhaustive("euler_distribution", n)?;
    let mut counts = vec![0u64; n];
    for w in Permutation::all(n) {
        counts[euler_characteristic(&w)] += 1;
    }
    Ok(counts.into_iter().map(BigUint::from).collect())
}

/// Sum over `S_n` of the reflection length `n - cycles(w)`, by enumeration.
pub fn reflection_length_total(n: usize) -> Result<BigUint> {
    check_exhaustive("reflection_length_total", n)?;
    let total: u64 = Permutation::all(n)
        .map(|w| (n - w.cycle_count()) as u64)
        .sum();
    Ok(total.into())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TableKind {
    Intervals,
    Boolean,
    Euler,
    Stirling,
}

impl TableKind {
    pub const ALL: [TableKind; 4] = [
        TableKind::Intervals,
        TableKind::Boolean,
        TableKind::Euler,
        TableKind::Stirling,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TableKind::Intervals => "intervals",
            TableKind::Boolean => "boolean",
            TableKind::Euler => "euler",
            TableKind::Stirling => "stirling",
        }
    }

    pub fn row(self, n: usize) -> Result<Vec<BigUint>> {
        match self {
            TableKind::Intervals => intervals_by_rank(n),
            TableKind::Boolean => boolean_by_rank(n),
            TableKind::Euler => euler_distribution(n),
            TableKind::Stirling => {
                require_size(n)?;
                Ok(stirling_row(n))
            }
        }
    }
}

impl std::str::FromStr for TableKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        TableKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::Parse {
                position: 0,
                message: format!("unknown table kind {s:?}"),
            })
    }
}

/// Rows `n = 1..=n_max` of a triangle of counts; columns start at `k = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountTable {
    kind: TableKind,
    rows: Vec<Vec<BigUint>>,
}

impl CountTable {
    pub fn build(kind: TableKind, n_max: usize) -> Result<Self> {
        require_size(n_max)?;
        let rows = (1..=n_max).map(|n| kind.row(n)).collect::<Result<_>>()?;
        Ok(Self { kind, rows })
    }

    pub fn kind(&self) -> TableKind {
        self.kind
    }

    /// Row `n` (1-based).
    pub fn row(&self, n: usize) -> &[BigUint] {
        &self.rows[n - 1]
    }

    pub fn rows(&self) -> impl Iterator<Item = (usize, &[BigUint])> {
        self.rows
            .iter()
            .enumerate()
            .map(|(i, r)| (i + 1, r.as_slice()))
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("n,k,value\n");
        for (n, row) in self.rows() {
            for (k, value) in row.iter().enumerate() {
                writeln!(out, "{n},{k},{value}").unwrap();
            }
        }
        out
    }

    /// OEIS b-file lines `index value`, rows flattened left to right, the
    /// first entry numbered `offset`.
    pub fn to_bfile(&self, offset: usize) -> String {
        let mut out = String::new();
        let values = self.rows.iter().flatten();
        for (index, value) in (offset..).zip(values) {
            writeln!(out, "{index} {value}").unwrap();
        }
        out
    }

    pub fn to_json(&self) -> String {
        let rows: Vec<serde_json::Value> = self
            .rows()
            .map(|(n, row)| {
                let values: Vec<serde_json::Value> = row
                    .iter()
                    .map(|v| {
                        serde_json::from_str(&v.to_string()).expect("digits are a JSON number")
                    })
                    .collect();
                serde_json::json!({ "n": n, "values": values })
            })
            .collect();
        let doc = serde_json::json!({ "kind": self.kind.name(), "rows": rows });
        serde_json::to_string_pretty(&doc).unwrap() + "\n"
    }
}

/// Convenience for tests and reports: a row as plain `u64`s.
pub fn row_u64(row: &[BigUint]) -> Vec<u64> {
    row.iter()
        .map(|v| v.to_u64().expect("fits in u64"))
        .collect()
}
