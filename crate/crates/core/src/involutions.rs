//! The subposet of involutions, ordered by restricting the middle order.

use num_bigint::BigUint;
use num_traits::One;

use crate::limits::check_exhaustive;
use crate::orders::{meet, middle_leq};
use crate::{Error, FinitePoset, InversionSequence, Permutation, Result};

/// Decides whether `x` encodes an involution without decoding it.
///
/// Strips the last coordinate if it is zero; otherwise `x_n = k` pairs `n`
/// with `n - k`, which needs `x_{n-k} = 0`, and both are removed (entries
/// between them lose one inversion each).
pub fn involution_seq_check(x: &InversionSequence) -> bool {
    let mut seq = x.coords().to_vec();
    while let Some(&last) = seq.last() {
        let n = seq.len();
        if last == 0 {
            seq.pop();
            continue;
        }
        let k = last;
        if seq[n - k - 1] != 0 || seq[n - k..n - 1].contains(&0) {
            return false;
        }
        let mut reduced = Vec::with_capacity(n - 2);
        reduced.extend_from_slice(&seq[..n - k - 1]);
        reduced.extend(seq[n - k..n - 1].iter().map(|&v| v - 1));
        seq = reduced;
    }
    true
}

/// `i(n) = i(n-1) + (n-1) i(n-2)`, `i(0) = i(1) = 1`.
pub fn involution_count(n: usize) -> BigUint {
    let (mut prev, mut cur) = (BigUint::one(), BigUint::one());
    for m in 2..=n {
        let next = &cur + &prev * (m - 1);
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

/// Every ascent rises by exactly one.
pub fn is_slow_climbing(x: &InversionSequence) -> bool {
    x.coords()
        .windows(2)
        .all(|w| w[1] <= w[0] || w[1] == w[0] + 1)
}

/// An involutive, slow-climbing sequence split into blocks `0, 1, ..., h`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SlowClimbDecomposition {
    pub blocks: Vec<Vec<usize>>,
}

impl SlowClimbDecomposition {
    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    /// Block heights `h_i` (last entry of each block).
    pub fn heights(&self) -> Vec<usize> {
        self.blocks.iter().map(|b| b.len() - 1).collect()
    }

    pub fn concat(&self) -> Vec<usize> {
        self.blocks.concat()
    }
}

/// Cuts before every zero and checks each piece counts up from zero.
pub fn slow_climb_decompose(x: &InversionSequence) -> Result<SlowClimbDecomposition> {
    if !involution_seq_check(x) {
        return Err(Error::NotAnInvolution(x.to_string()));
    }
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    for &value in x.coords() {
        if value == 0 {
            blocks.push(vec![0]);
            continue;
        }
        let block = blocks.last_mut().expect("first coordinate is zero");
        if value != block.len() {
            return Err(Error::NotSlowClimbing(x.to_string()));
        }
        block.push(value);
    }
    Ok(SlowClimbDecomposition { blocks })
}

/// A 1-based index interval `[start, end]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cluster {
    pub start: usize,
    pub end: usize,
}

impl Cluster {
    pub fn contains(&self, other: &Cluster) -> bool {
        self.start <= other.start && other.end <= self.end
    }

    pub fn len(&self) -> usize {
        self.end + 1 - self.start
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

fn climbs(y: &[usize], start: usize, end: usize) -> bool {
    (start..=end).all(|i| y[i - 1] >= i - start)
}

/// Intervals `[a, b]` with `y_{a+j} >= j` that extend neither left nor
/// right, sorted by start.
pub fn clusters(x: &InversionSequence) -> Vec<Cluster> {
    let y = x.coords();
    let n = y.len();
    let mut out = Vec::new();
    for start in 1..=n {
        for end in start..=n {
            if !climbs(y, start, end) {
                break;
            }
            let left = start > 1 && climbs(y, start - 1, end);
            let right = end < n && climbs(y, start, end + 1);
            if !left && !right {
                out.push(Cluster { start, end });
            }
        }
    }
    out
}

fn require_involution(w: &Permutation) -> Result<()> {
    if w.is_involution() {
        Ok(())
    } else {
        Err(Error::NotAnInvolution(w.to_string()))
    }
}

/// All involutions of size `n`, in lex order of inversion sequences.
pub fn involutions(n: usize) -> impl Iterator<Item = Permutation> {
    InversionSequence::all(n)
        .filter(involution_seq_check)
        .map(|x| x.to_permutation())
}

/// `I_n` with the order induced from the middle order.
pub fn involution_poset(n: usize) -> Result<FinitePoset<Permutation>> {
    check_exhaustive("involution_poset", n)?;
    let labels: Vec<Permutation> = involutions(n).collect();
    FinitePoset::from_relation(labels, |a, b| middle_leq(a, b).expect("same size"))
}

/// The maximal slow-climbing involutions below `w`, by exhaustive filtering.
pub fn maximal_slow_climbing_below(w: &Permutation) -> Result<Vec<Permutation>> {
    require_involution(w)?;
    check_exhaustive("maximal_slow_climbing_below", w.len())?;
    let below: Vec<Permutation> = involutions(w.len())
        .filter(|v| {
            is_slow_climbing(&v.inversion_sequence()) && middle_leq(v, w).expect("same size")
        })
        .collect();
    Ok(below
        .iter()
        .filter(|v| {
            !below
                .iter()
                .any(|u| u != *v && middle_leq(v, u).expect("same size"))
        })
        .cloned()
        .collect())
}

/// Meet in the middle order of a nonempty set.
pub fn meet_all(items: &[Permutation]) -> Result<Permutation> {
    let (first, rest) = items.split_first().ok_or(Error::EmptySize)?;
    rest.iter().try_fold(first.clone(), |acc, v| meet(&acc, v))
}

/// `mu(e, w)` in `I_n`: `(-1)^alpha` for slow-climbing `w` with `alpha`
/// nonzero coordinates, else 0.
pub fn mobius_involution_ideal(w: &Permutation) -> Result<i64> {
    require_involution(w)?;
    let x = w.inversion_sequence();
    if !is_slow_climbing(&x) {
        return Ok(0);
    }
    Ok(if x.nonzero_count().is_multiple_of(2) {
        1
    } else {
        -1
    })
}
