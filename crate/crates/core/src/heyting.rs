//! Heyting algebra operations on the middle order.

use crate::limits::check_exhaustive;
use crate::orders::middle_leq;
use crate::perm::same_size;
use crate::{FinitePoset, InversionSequence, Permutation, Result};

/// `v ~> w`, the largest `z` with `v ^ z <= w`.
pub fn relative_pseudocomplement(v: &Permutation, w: &Permutation) -> Result<Permutation> {
    same_size(v, w)?;
    let (x, y) = (v.inversion_sequence(), w.inversion_sequence());
    let z = x
        .coords()
        .iter()
        .zip(y.coords())
        .enumerate()
        .map(|(i, (&a, &b))| if a <= b { i } else { b })
        .collect();
    Ok(InversionSequence::from_coords_unchecked(z).to_permutation())
}

/// `~v = v ~> e`: the right-to-left minima of `v` in decreasing order, then
/// every other value in increasing order.
pub fn pseudocomplement(v: &Permutation) -> Permutation {
    let minima = v.right_to_left_minima();
    let mut is_min = vec![false; v.len() + 1];
    for &m in &minima {
        is_min[m] = true;
    }
    let word = minima
        .iter()
        .rev()
        .copied()
        .chain((1..=v.len()).filter(|&a| !is_min[a]))
        .collect();
    Permutation::from_word_unchecked(word)
}

/// `v = ~~v`.
pub fn is_regular(v: &Permutation) -> bool {
    pseudocomplement(&pseudocomplement(v)) == *v
}

/// Every coordinate is `0` or maximal.
pub fn has_extreme_coordinates(v: &Permutation) -> bool {
    v.inversion_sequence()
        .coords()
        .iter()
        .enumerate()
        .all(|(i, &x)| x == 0 || x == i)
}

/// Regular elements of `P_n` with the induced order.
pub fn regular_subposet(n: usize) -> Result<FinitePoset<Permutation>> {
    check_exhaustive("regular_subposet", n)?;
    let labels: Vec<Permutation> = InversionSequence::all(n)
        .map(|x| x.to_permutation())
        .filter(is_regular)
        .collect();
    FinitePoset::from_relation(labels, |a, b| middle_leq(a, b).expect("same size"))
}
