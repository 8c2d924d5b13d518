//! Permutations, inversion sequences and pattern containment.
//!
//! Every public position and coordinate here is 1-based: `word()[0]` is the
//! value at position 1, and [`InversionSequence::get`] takes `i` in `1..=n`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::limits::check_exhaustive;
use crate::{Error, Result};

/// A permutation of `{1..n}` in one-line notation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    word: Vec<usize>,
}

impl Permutation {
    pub fn new(word: Vec<usize>) -> Result<Self> {
        let n = word.len();
        if n == 0 {
            return Err(Error::EmptySize);
        }
        let mut seen = vec![false; n];
        for (pos, &value) in word.iter().enumerate() {
            if value == 0 || value > n {
                return Err(Error::InvalidPermutation {
                    n,
                    detail: format!("value {value} at position {} is out of range", pos + 1),
                });
            }
            if std::mem::replace(&mut seen[value - 1], true) {
                return Err(Error::InvalidPermutation {
                    n,
                    detail: format!("value {value} repeated"),
                });
            }
        }
        Ok(Self { word })
    }

    pub(crate) fn from_word_unchecked(word: Vec<usize>) -> Self {
        debug_assert!(Self::new(word.clone()).is_ok());
        Self { word }
    }

    pub fn identity(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptySize);
        }
        Ok(Self {
            word: (1..=n).collect(),
        })
    }

    /// The reverse identity `n (n-1) ... 1`, maximum of every order here.
    pub fn long_element(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptySize);
        }
        Ok(Self {
            word: (1..=n).rev().collect(),
        })
    }

    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    /// Value at 1-based position `pos`.
    pub fn at(&self, pos: usize) -> usize {
        self.word[pos - 1]
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.len()];
        for (pos, &value) in self.word.iter().enumerate() {
            inv[value - 1] = pos + 1;
        }
        Permutation { word: inv }
    }

    /// `(self ∘ other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        same_size(self, other)?;
        Ok(Permutation {
            word: other.word.iter().map(|&i| self.word[i - 1]).collect(),
        })
    }

    /// Coordinate `i` counts the values `j < i` that appear after `i`.
    pub fn inversion_sequence(&self) -> InversionSequence {
        let n = self.len();
        let positions = self.inverse().word;
        let coords = (1..=n)
            .map(|i| {
                (1..i)
                    .filter(|&j| positions[j - 1] > positions[i - 1])
                    .count()
            })
            .collect();
        InversionSequence { coords }
    }

    pub fn inversion_count(&self) -> usize {
        let w = &self.word;
        (0..w.len())
            .map(|a| w[a + 1..].iter().filter(|&&b| b < w[a]).count())
            .sum()
    }

    /// Values with no smaller value to their right, in increasing order.
    pub fn right_to_left_minima(&self) -> Vec<usize> {
        let mut minima = Vec::new();
        let mut current = usize::MAX;
        for &value in self.word.iter().rev() {
            if value < current {
                current = value;
                minima.push(value);
            }
        }
        minima.sort_unstable();
        minima
    }

    pub fn is_involution(&self) -> bool {
        self.word
            .iter()
            .enumerate()
            .all(|(pos, &value)| self.word[value - 1] == pos + 1)
    }

    /// Cycles, each listed from its minimum, ordered by increasing minimum.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.len();
        let mut visited = vec![false; n];
        let mut cycles = Vec::new();
        for start in 1..=n {
            if visited[start - 1] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut current = start;
            while !visited[current - 1] {
                visited[current - 1] = true;
                cycle.push(current);
                current = self.word[current - 1];
            }
            cycles.push(cycle);
        }
        cycles
    }

    pub fn cycle_count(&self) -> usize {
        self.cycles().len()
    }

    /// Modified Foata map: write each cycle with its minimum last, order the
    /// cycles by increasing minima and erase the parentheses.
    ///
    /// The number of cycles of `self` equals the number of right-to-left
    /// minima of the image.
    pub fn foata_image(&self) -> Permutation {
        let mut word = Vec::with_capacity(self.len());
        for cycle in self.cycles() {
            word.extend_from_slice(&cycle[1..]);
            word.push(cycle[0]);
        }
        Permutation { word }
    }

    /// True if some subsequence of `self` is order-isomorphic to `pattern`.
    pub fn contains_pattern(&self, pattern: &Permutation) -> bool {
        if pattern.len() > self.len() {
            return false;
        }
        let mut found = false;
        for_each_occurrence(self, pattern, &mut |_| {
            found = true;
            false
        });
        found
    }

    pub fn avoids(&self, pattern: &Permutation) -> bool {
        !self.contains_pattern(pattern)
    }

    /// Every permutation of size `n`, in lexicographic order of inversion
    /// sequences.
    pub fn all(n: usize) -> impl Iterator<Item = Permutation> {
        InversionSequence::all(n).map(|x| x.to_permutation())
    }

    /// Swap the entries holding values `a` and `b`.
    pub fn swap_values(&self, a: usize, b: usize) -> Permutation {
        let mut word = self.word.clone();
        for v in word.iter_mut() {
            if *v == a {
                *v = b;
            } else if *v == b {
                *v = a;
            }
        }
        Permutation { word }
    }

    /// Swap the entries at 1-based positions `p` and `q`.
    pub fn swap_positions(&self, p: usize, q: usize) -> Permutation {
        let mut word = self.word.clone();
        word.swap(p - 1, q - 1);
        Permutation { word }
    }
}

pub(crate) fn same_size(v: &Permutation, w: &Permutation) -> Result<()> {
    if v.len() != w.len() {
        return Err(Error::SizeMismatch {
            left: v.len(),
            right: w.len(),
        });
    }
    Ok(())
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.len() <= 9 {
            for v in &self.word {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            write_joined(f, &self.word)
        }
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({self})")
    }
}

fn write_joined(f: &mut fmt::Formatter<'_>, values: &[usize]) -> fmt::Result {
    for (k, v) in values.iter().enumerate() {
        if k > 0 {
            f.write_str(",")?;
        }
        write!(f, "{v}")?;
    }
    Ok(())
}

/// Parse either a bare digit string (`"415623"`) or a comma-separated list.
pub(crate) fn parse_int_list(s: &str) -> Result<Vec<usize>> {
    let trimmed = s.trim();
    if trimmed.is_empty() {
        return Err(Error::Parse {
            position: 0,
            message: "empty input".into(),
        });
    }
    let offset = s.len() - s.trim_start().len();
    if trimmed.contains(',') {
        let mut values = Vec::new();
        let mut pos = offset;
        for part in trimmed.split(',') {
            let token = part.trim();
            let value = token.parse::<usize>().map_err(|_| Error::Parse {
                position: pos,
                message: format!("expected an integer, found {token:?}"),
            })?;
            values.push(value);
            pos += part.len() + 1;
        }
        Ok(values)
    } else {
        trimmed
            .chars()
            .enumerate()
            .map(|(k, c)| {
                c.to_digit(10)
                    .map(|d| d as usize)
                    .ok_or_else(|| Error::Parse {
                        position: offset + k,
                        message: format!("expected a digit, found {c:?}"),
                    })
            })
            .collect()
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Permutation::new(parse_int_list(s)?)
    }
}

/// `(x_1, ..., x_n)` with `x_i` in `[0, i-1]`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct InversionSequence {
    coords: Vec<usize>,
}

impl InversionSequence {
    pub fn new(coords: Vec<usize>) -> Result<Self> {
        if coords.is_empty() {
            return Err(Error::EmptySize);
        }
        for (k, &value) in coords.iter().enumerate() {
            if value > k {
                return Err(Error::InvalidInversionSequence {
                    index: k + 1,
                    value,
                    max: k,
                });
            }
        }
        Ok(Self { coords })
    }

    pub(crate) fn from_coords_unchecked(coords: Vec<usize>) -> Self {
        debug_assert!(Self::new(coords.clone()).is_ok());
        Self { coords }
    }

    pub fn zero(n: usize) -> Result<Self> {
        Self::new(vec![0; n])
    }

    /// `(0, 1, ..., n-1)`, the sequence of the long element.
    pub fn maximum(n: usize) -> Result<Self> {
        Self::new((0..n).collect())
    }

    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[usize] {
        &self.coords
    }

    /// Coordinate `x_i`, 1-based.
    pub fn get(&self, i: usize) -> usize {
        self.coords[i - 1]
    }

    pub fn sum(&self) -> usize {
        self.coords.iter().sum()
    }

    pub fn nonzero_count(&self) -> usize {
        self.coords.iter().filter(|&&x| x != 0).count()
    }

    pub fn leq(&self, other: &InversionSequence) -> bool {
        self.len() == other.len() && self.coords.iter().zip(&other.coords).all(|(a, b)| a <= b)
    }

    /// Insert the values `1..=n` one by one; value `i` goes where exactly
    /// `x_i` of the smaller values end up to its right.
    pub fn to_permutation(&self) -> Permutation {
        let mut word: Vec<usize> = Vec::with_capacity(self.len());
        for (k, &x) in self.coords.iter().enumerate() {
            word.insert(k - x, k + 1);
        }
        Permutation { word }
    }

    /// All sequences of size `n` in lexicographic order.
    pub fn all(n: usize) -> impl Iterator<Item = InversionSequence> {
        let mut next = if n == 0 { None } else { Some(vec![0; n]) };
        std::iter::from_fn(move || {
            let current = next.take()?;
            let mut succ = current.clone();
            for k in (0..n).rev() {
                if succ[k] < k {
                    succ[k] += 1;
                    next = Some(succ);
                    break;
                }
                succ[k] = 0;
            }
            Some(InversionSequence { coords: current })
        })
    }

    /// Digits without separators (`"0113"`), or the comma form when some
    /// coordinate has two digits.
    pub fn compact(&self) -> String {
        if self.coords.iter().all(|&x| x < 10) {
            self.coords.iter().map(|x| x.to_string()).collect()
        } else {
            self.to_string()
        }
    }
}

impl fmt::Display for InversionSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_joined(f, &self.coords)
    }
}

impl fmt::Debug for InversionSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "InversionSequence({self})")
    }
}

impl FromStr for InversionSequence {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        InversionSequence::new(parse_int_list(s)?)
    }
}

impl From<&Permutation> for InversionSequence {
    fn from(w: &Permutation) -> Self {
        w.inversion_sequence()
    }
}

impl From<&InversionSequence> for Permutation {
    fn from(x: &InversionSequence) -> Self {
        x.to_permutation()
    }
}

/// Exhaustively checks that decoding inverts encoding on `S_n` and that the
/// encoding hits every point of the box `[0,0] x ... x [0,n-1]` exactly once.
pub fn round_trip_all(n: usize) -> Result<bool> {
    check_exhaustive("round_trip_all", n)?;
    let box_size: usize = (1..=n).product();
    let mut hit = vec![false; box_size];
    for w in all_words(n) {
        let w = Permutation::from_word_unchecked(w);
        let x = w.inversion_sequence();
        if x.to_permutation() != w {
            return Ok(false);
        }
        // mixed-radix index of x in the box
        let index = x
            .coords
            .iter()
            .enumerate()
            .fold(0, |acc, (k, &c)| acc * (k + 1) + c);
        if std::mem::replace(&mut hit[index], true) {
            return Ok(false);
        }
    }
    Ok(hit.into_iter().all(|h| h))
}

/// All words of `S_n` in lexicographic order of the words themselves, generated
/// without going through inversion sequences.
pub(crate) fn all_words(n: usize) -> impl Iterator<Item = Vec<usize>> {
    let mut next: Option<Vec<usize>> = Some((1..=n).collect());
    std::iter::from_fn(move || {
        let current = next.take()?;
        let mut succ = current.clone();
        // standard next-permutation step
        if let Some(k) = (0..n.saturating_sub(1))
            .rev()
            .find(|&k| succ[k] < succ[k + 1])
        {
            let l = (k + 1..n).rev().find(|&l| succ[l] > succ[k]).unwrap();
            succ.swap(k, l);
            succ[k + 1..].reverse();
            next = Some(succ);
        }
        Some(current)
    })
}

/// A classical pattern together with shaded cells of its `(k+1) x (k+1)` grid.
///
/// Cell `(a, b)` is the unit square between the `a`-th and `(a+1)`-th points
/// horizontally and the `b`-th and `(b+1)`-th values vertically, with `0`
/// meaning "before the first" and `k` "after the last". In an occurrence the
/// cell stretches to the open region between the chosen positions and values.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct MeshPattern {
    pattern: Permutation,
    mesh: BTreeSet<(usize, usize)>,
}

impl MeshPattern {
    pub fn new(
        pattern: Permutation,
        mesh: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self> {
        let k = pattern.len();
        let mesh: BTreeSet<_> = mesh.into_iter().collect();
        if let Some(&(a, b)) = mesh.iter().find(|&&(a, b)| a > k || b > k) {
            return Err(Error::InvalidMeshCell(a, b));
        }
        Ok(Self { pattern, mesh })
    }

    pub fn classical(pattern: Permutation) -> Self {
        Self {
            pattern,
            mesh: BTreeSet::new(),
        }
    }

    pub fn pattern(&self) -> &Permutation {
        &self.pattern
    }

    pub fn mesh(&self) -> &BTreeSet<(usize, usize)> {
        &self.mesh
    }

    /// Occurrences in `w` as lists of 1-based positions.
    pub fn occurrences(&self, w: &Permutation) -> Vec<Vec<usize>> {
        let mut found = Vec::new();
        if self.pattern.len() > w.len() {
            return found;
        }
        for_each_occurrence(w, &self.pattern, &mut |positions| {
            if self.regions_empty(w, positions) {
                found.push(positions.iter().map(|p| p + 1).collect());
            }
            true
        });
        found
    }

    fn regions_empty(&self, w: &Permutation, positions: &[usize]) -> bool {
        if self.mesh.is_empty() {
            return true;
        }
        let n = w.len();
        let k = positions.len();
        // 1-based boundaries with sentinels 0 and n+1
        let mut cols = Vec::with_capacity(k + 2);
        cols.push(0);
        cols.extend(positions.iter().map(|p| p + 1));
        cols.push(n + 1);
        let mut rows: Vec<usize> = positions.iter().map(|&p| w.word[p]).collect();
        rows.sort_unstable();
        rows.insert(0, 0);
        rows.push(n + 1);
        self.mesh.iter().all(|&(a, b)| {
            (cols[a] + 1..cols[a + 1]).all(|pos| {
                let value = w.word[pos - 1];
                value <= rows[b] || value >= rows[b + 1]
            })
        })
    }
}

/// Number of occurrences of the mesh pattern `m` in `w`.
pub fn mesh_contains(w: &Permutation, m: &MeshPattern) -> usize {
    m.occurrences(w).len()
}

/// Calls `visit` with the 0-based positions of each classical occurrence of
/// `pattern` in `w`; stops early when `visit` returns false.
fn for_each_occurrence(
    w: &Permutation,
    pattern: &Permutation,
    visit: &mut dyn FnMut(&[usize]) -> bool,
) {
    fn rec(
        w: &[usize],
        p: &[usize],
        start: usize,
        chosen: &mut Vec<usize>,
        visit: &mut dyn FnMut(&[usize]) -> bool,
    ) -> bool {
        let depth = chosen.len();
        if depth == p.len() {
            return visit(chosen);
        }
        let remaining = p.len() - depth;
        for pos in start..=w.len() - remaining {
            // the new entry must compare with every chosen entry as in p
            let ok = chosen
                .iter()
                .enumerate()
                .all(|(k, &c)| (w[c] < w[pos]) == (p[k] < p[depth]));
            if ok {
                chosen.push(pos);
                let keep_going = rec(w, p, pos + 1, chosen, visit);
                chosen.pop();
                if !keep_going {
                    return false;
                }
            }
        }
        true
    }
    let mut chosen = Vec::with_capacity(pattern.len());
    rec(&w.word, &pattern.word, 0, &mut chosen, visit);
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn x(v: &[usize]) -> InversionSequence {
        InversionSequence::new(v.to_vec()).unwrap()
    }

    // Inversions enumerated as position pairs, tallied by the top value.
    fn oracle_inversion_sequence(w: &Permutation) -> Vec<usize> {
        let word = w.word();
        let mut coords = vec![0; word.len()];
        for a in 0..word.len() {
            for b in a + 1..word.len() {
                if word[a] > word[b] {
                    coords[word[a] - 1] += 1;
                }
            }
        }
        coords
    }

    #[test]
    fn inversion_sequence_examples() {
        assert_eq!(p("415623").inversion_sequence(), x(&[0, 0, 0, 3, 2, 2]));
        assert_eq!(p("123456").inversion_sequence(), x(&[0; 6]));
        assert_eq!(p("321").inversion_sequence(), x(&[0, 1, 2]));
        for w in all_words(6).map(Permutation::from_word_unchecked) {
            assert_eq!(
                w.inversion_sequence().coords(),
                oracle_inversion_sequence(&w)
            );
        }
    }

    #[test]
    fn decoding_examples() {
        assert_eq!(x(&[0, 0, 0]).to_permutation(), p("123"));
        assert_eq!(x(&[0, 1, 2]).to_permutation(), p("321"));
        assert_eq!(x(&[0, 0, 0, 3, 2, 2]).to_permutation(), p("415623"));
    }

    #[test]
    fn malformed_sequences_rejected() {
        assert!(matches!(
            InversionSequence::new(vec![0, 2]),
            Err(Error::InvalidInversionSequence {
                index: 2,
                value: 2,
                max: 1
            })
        ));
        assert!(InversionSequence::new(vec![1]).is_err());
        assert_eq!(InversionSequence::new(vec![]), Err(Error::EmptySize));
    }

    #[test]
    fn round_trips() {
        for n in 1..=7 {
            assert!(round_trip_all(n).unwrap(), "n = {n}");
        }
        assert_eq!(round_trip_all(0), Err(Error::EmptySize));
        assert!(matches!(round_trip_all(30), Err(Error::SizeLimit { .. })));
    }

    #[test]
    fn invalid_permutations() {
        assert!(Permutation::new(vec![1, 1]).is_err());
        assert!(Permutation::new(vec![0, 1]).is_err());
        assert!(Permutation::new(vec![3, 1]).is_err());
        assert_eq!(Permutation::new(vec![]), Err(Error::EmptySize));
        assert!(matches!(
            "12a".parse::<Permutation>(),
            Err(Error::Parse { position: 2, .. })
        ));
        assert!(matches!(
            "1, 2,x".parse::<Permutation>(),
            Err(Error::Parse { position: 5, .. })
        ));
    }

    #[test]
    fn serialization() {
        assert_eq!(p("415623").to_string(), "415623");
        let long: Permutation = "10,3,1,2,4,5,6,7,8,9".parse().unwrap();
        assert_eq!(long.len(), 10);
        assert_eq!(long.to_string(), "10,3,1,2,4,5,6,7,8,9");
        assert_eq!("4,1,5,6,2,3".parse::<Permutation>().unwrap(), p("415623"));
    }

    #[test]
    fn classical_avoidance() {
        assert!(p("123").avoids(&p("21")));
        assert!(!p("1423").avoids(&p("12")));
        // brute force over all position triples
        let w = p("415623");
        let brute = (0..6).any(|a| {
            (a + 1..6)
                .any(|b| (b + 1..6).any(|c| w.word()[a] > w.word()[b] && w.word()[b] > w.word()[c]))
        });
        assert_eq!(!w.avoids(&p("321")), brute);
        assert!(!brute);
        assert!(w.avoids(&p("321")));
        assert!(p("12").avoids(&p("123")));
    }

    #[test]
    fn mesh_examples() {
        let w = p("1423");
        let mu = MeshPattern::new(p("12"), [(1, 0), (1, 1)]).unwrap();
        assert_eq!(mesh_contains(&w, &mu), 3);
        assert_eq!(mesh_contains(&w, &MeshPattern::classical(p("12"))), 4);
        let shaded = MeshPattern::new(p("12"), [(0, 0), (2, 2), (1, 2)]).unwrap();
        assert_eq!(mesh_contains(&p("21"), &shaded), 0);
        // the excluded occurrence is values (1, 3): value 2 sits between them
        assert!(!mu.occurrences(&w).contains(&vec![1, 4]));
        assert!(MeshPattern::new(p("12"), [(3, 0)]).is_err());
    }

    #[test]
    fn empty_mesh_counts_classical_occurrences() {
        for n in 1..=6 {
            for w in Permutation::all(n) {
                for k in 1..=3usize.min(n) {
                    for pat in Permutation::all(k) {
                        let brute = combinations(n, k)
                            .filter(|c| {
                                order_isomorphic(
                                    &c.iter().map(|&i| w.word()[i]).collect::<Vec<_>>(),
                                    pat.word(),
                                )
                            })
                            .count();
                        assert_eq!(
                            mesh_contains(&w, &MeshPattern::classical(pat.clone())),
                            brute
                        );
                    }
                }
            }
        }
    }

    fn combinations(n: usize, k: usize) -> impl Iterator<Item = Vec<usize>> {
        (0u32..1 << n)
            .filter(move |m| m.count_ones() as usize == k)
            .map(move |m| (0..n).filter(|i| m >> i & 1 == 1).collect())
    }

    fn order_isomorphic(a: &[usize], b: &[usize]) -> bool {
        (0..a.len()).all(|i| (0..a.len()).all(|j| (a[i] < a[j]) == (b[i] < b[j])))
    }

    #[test]
    fn right_to_left_minima_examples() {
        assert_eq!(p("12345").right_to_left_minima(), vec![1, 2, 3, 4, 5]);
        assert_eq!(p("415623").right_to_left_minima(), vec![1, 2, 3]);
        assert_eq!(p("321").right_to_left_minima(), vec![1]);
    }

    #[test]
    fn right_to_left_minima_are_zero_coordinates() {
        for n in 1..=7 {
            for w in Permutation::all(n) {
                let x = w.inversion_sequence();
                let zeros: Vec<usize> = (1..=n).filter(|&i| x.get(i) == 0).collect();
                assert_eq!(w.right_to_left_minima(), zeros);
            }
        }
    }

    #[test]
    fn involutions_and_cycles() {
        assert!(p("1234").is_involution());
        assert!(p("4231").is_involution());
        assert!(!p("415623").is_involution());
        assert_eq!(p("123").cycle_count(), 3);
        assert_eq!(p("321").cycle_count(), 2);
        assert_eq!(p("4231").cycle_count(), 3);
        for w in Permutation::all(5) {
            assert_eq!(
                w.is_involution(),
                w.compose(&w).unwrap() == Permutation::identity(5).unwrap()
            );
        }
    }

    #[test]
    fn foata_examples() {
        assert_eq!(p("123").foata_image(), p("123"));
        assert_eq!(p("321").foata_image(), p("312"));
        assert_eq!(p("312").right_to_left_minima().len(), 2);
    }

    #[test]
    fn foata_is_bijective_and_maps_cycles_to_minima() {
        for n in 1..=6 {
            let mut images = HashSet::new();
            for w in Permutation::all(n) {
                let image = w.foata_image();
                assert_eq!(w.cycle_count(), image.right_to_left_minima().len());
                assert!(images.insert(image));
            }
            assert_eq!(images.len(), (1..=n).product::<usize>());
        }
    }

    #[test]
    fn lexicographic_enumeration() {
        let all: Vec<_> = InversionSequence::all(3).map(|x| x.to_string()).collect();
        assert_eq!(all, ["0,0,0", "0,0,1", "0,0,2", "0,1,0", "0,1,1", "0,1,2"]);
        assert_eq!(all_words(4).count(), 24);
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn arb_permutation() -> impl Strategy<Value = Permutation> {
            (1usize..=12)
                .prop_flat_map(|n| Just((1..=n).collect::<Vec<_>>()).prop_shuffle())
                .prop_map(|w| Permutation::new(w).unwrap())
        }

        proptest! {
            #[test]
            fn encode_decode_round_trip(w in arb_permutation()) {
                let x = w.inversion_sequence();
                prop_assert_eq!(x.sum(), w.inversion_count());
                prop_assert_eq!(x.to_permutation(), w.clone());
                prop_assert_eq!(w.to_string().parse::<Permutation>().unwrap(), w);
            }

            #[test]
            fn inverse_composes_to_identity(w in arb_permutation()) {
                let id = Permutation::identity(w.len()).unwrap();
                prop_assert_eq!(w.compose(&w.inverse()).unwrap(), id);
            }
        }
    }
}
