//! A generic finite-poset engine.
//!
//! [`FinitePoset`] knows nothing about permutations. It stores the reflexive
//! order relation as a dense bit matrix and answers the structural questions
//! (Moebius values, intervals, gradedness, lattice operations, distributivity,
//! isomorphism) by brute force. The closed forms elsewhere in the crate are
//! checked against it.

use std::collections::HashMap;
use std::hash::Hash;

use fixedbitset::FixedBitSet;

use crate::limits::DEFAULT_ISOMORPHISM_LIMIT;
use crate::{Error, Result};

#[derive(Clone, Debug)]
pub struct FinitePoset<L> {
    labels: Vec<L>,
    index: HashMap<L, usize>,
    // up[a] contains b iff a <= b; down is the transpose
    up: Vec<FixedBitSet>,
    down: Vec<FixedBitSet>,
    upper_covers: Vec<Vec<usize>>,
    lower_covers: Vec<Vec<usize>>,
    // a linear extension and each element's position in it
    topo: Vec<usize>,
    topo_pos: Vec<usize>,
}

/// Outcome of [`FinitePoset::gradedness`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Gradedness {
    /// Every maximal chain has the same length; `ranks[a]` is the length of
    /// any saturated chain from a minimal element up to `a`.
    Graded { ranks: Vec<usize> },
    /// Two maximal chains (listed bottom to top) of different lengths.
    NotGraded { short: Vec<usize>, long: Vec<usize> },
}

impl Gradedness {
    pub fn is_graded(&self) -> bool {
        matches!(self, Gradedness::Graded { .. })
    }
}

impl<L: Clone + Eq + Hash> FinitePoset<L> {
    /// Builds the poset generated by `cover_pairs` (`(lower, upper)` index
    /// pairs). The pairs need not be reduced; covers are recomputed as the
    /// transitive reduction of the closure.
    pub fn from_covers(labels: Vec<L>, cover_pairs: &[(usize, usize)]) -> Result<Self> {
        let n = labels.len();
        let mut succ = vec![Vec::new(); n];
        let mut indegree = vec![0usize; n];
        for &(a, b) in cover_pairs {
            for index in [a, b] {
                if index >= n {
                    return Err(Error::DanglingIndex { index, len: n });
                }
            }
            if a == b {
                return Err(Error::Cycle(a));
            }
            succ[a].push(b);
            indegree[b] += 1;
        }
        // Kahn's algorithm
        let mut topo = Vec::with_capacity(n);
        let mut ready: Vec<usize> = (0..n).rev().filter(|&a| indegree[a] == 0).collect();
        while let Some(a) = ready.pop() {
            topo.push(a);
            for &b in &succ[a] {
                indegree[b] -= 1;
                if indegree[b] == 0 {
                    ready.push(b);
                }
            }
        }
        if topo.len() < n {
            let stuck = (0..n).find(|&a| indegree[a] > 0).unwrap();
            return Err(Error::Cycle(stuck));
        }
        let mut up = vec![FixedBitSet::with_capacity(n); n];
        for &a in topo.iter().rev() {
            let mut row = FixedBitSet::with_capacity(n);
            row.insert(a);
            for &b in &succ[a] {
                row.union_with(&up[b]);
            }
            up[a] = row;
        }
        Self::assemble(labels, up, Some(topo))
    }

    /// Builds the poset whose order is `leq`, checking the partial-order axioms.
    pub fn from_relation(labels: Vec<L>, leq: impl Fn(&L, &L) -> bool) -> Result<Self> {
        let n = labels.len();
        let mut up = vec![FixedBitSet::with_capacity(n); n];
        for a in 0..n {
            for b in 0..n {
                if leq(&labels[a], &labels[b]) {
                    up[a].insert(b);
                }
            }
        }
        for a in 0..n {
            if !up[a].contains(a) {
                return Err(Error::NotAPartialOrder(format!(
                    "element {a} is not below itself"
                )));
            }
            for b in up[a].ones() {
                if b != a && up[b].contains(a) {
                    return Err(Error::NotAPartialOrder(format!(
                        "elements {a} and {b} are below each other"
                    )));
                }
                if !up[b].is_subset(&up[a]) {
                    return Err(Error::NotAPartialOrder(format!(
                        "not transitive through {a} <= {b}"
                    )));
                }
            }
        }
        Self::assemble(labels, up, None)
    }

    fn assemble(labels: Vec<L>, up: Vec<FixedBitSet>, topo: Option<Vec<usize>>) -> Result<Self> {
        let n = labels.len();
        let mut index = HashMap::with_capacity(n);
        for (i, label) in labels.iter().enumerate() {
            if index.insert(label.clone(), i).is_some() {
                return Err(Error::DuplicateLabel(i));
            }
        }
        let mut down = vec![FixedBitSet::with_capacity(n); n];
        for (a, row) in up.iter().enumerate() {
            for b in row.ones() {
                down[b].insert(a);
            }
        }
        let topo = topo.unwrap_or_else(|| {
            // a < b forces |down(a)| < |down(b)|
            let mut order: Vec<usize> = (0..n).collect();
            order.sort_by_key(|&a| (down[a].count_ones(..), a));
            order
        });
        let mut topo_pos = vec![0; n];
        for (k, &a) in topo.iter().enumerate() {
            topo_pos[a] = k;
        }

        // Transitive reduction: scanning the strict up-set of `a` along the
        // linear extension, an element is a cover iff no earlier cover lies
        // below it.
        let mut upper_covers = vec![Vec::new(); n];
        let mut lower_covers = vec![Vec::new(); n];
        for a in 0..n {
            let mut above: Vec<usize> = up[a].ones().filter(|&b| b != a).collect();
            above.sort_unstable_by_key(|&b| topo_pos[b]);
            let mut reached = FixedBitSet::with_capacity(n);
            for b in above {
                if !reached.contains(b) {
                    upper_covers[a].push(b);
                    reached.union_with(&up[b]);
                }
            }
            upper_covers[a].sort_unstable();
        }
        for (a, ups) in upper_covers.iter().enumerate() {
            for &b in ups {
                lower_covers[b].push(a);
            }
        }
        Ok(Self {
            labels,
            index,
            up,
            down,
            upper_covers,
            lower_covers,
            topo,
            topo_pos,
        })
    }

    /// The subposet on `subset` (indices into `self`) with the inherited order.
    /// Covers are recomputed; they are generally not covers of `self`.
    pub fn induced_subposet(&self, subset: &[usize]) -> Result<FinitePoset<L>> {
        let m = subset.len();
        let labels = subset.iter().map(|&a| self.labels[a].clone()).collect();
        let mut up = vec![FixedBitSet::with_capacity(m); m];
        for (i, &a) in subset.iter().enumerate() {
            if a >= self.len() {
                return Err(Error::DanglingIndex {
                    index: a,
                    len: self.len(),
                });
            }
            for (j, &b) in subset.iter().enumerate() {
                if self.leq(a, b) {
                    up[i].insert(j);
                }
            }
        }
        Self::assemble(labels, up, None)
    }

    /// Induced subposet on the elements whose label satisfies `keep`.
    pub fn filter(&self, keep: impl Fn(&L) -> bool) -> Result<FinitePoset<L>> {
        let subset: Vec<usize> = (0..self.len()).filter(|&a| keep(&self.labels[a])).collect();
        self.induced_subposet(&subset)
    }

    pub fn map_labels<M: Clone + Eq + Hash>(&self, f: impl Fn(&L) -> M) -> Result<FinitePoset<M>> {
        FinitePoset::<M>::assemble(
            self.labels.iter().map(f).collect(),
            self.up.clone(),
            Some(self.topo.clone()),
        )
    }

    pub fn index_of(&self, label: &L) -> Option<usize> {
        self.index.get(label).copied()
    }
}

impl<L> FinitePoset<L> {
    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[L] {
        &self.labels
    }

    pub fn label(&self, a: usize) -> &L {
        &self.labels[a]
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.up[a].contains(b)
    }

    pub fn lt(&self, a: usize, b: usize) -> bool {
        a != b && self.leq(a, b)
    }

    pub fn comparable(&self, a: usize, b: usize) -> bool {
        self.leq(a, b) || self.leq(b, a)
    }

    pub fn is_cover(&self, a: usize, b: usize) -> bool {
        self.upper_covers[a].binary_search(&b).is_ok()
    }

    pub fn upper_covers(&self, a: usize) -> &[usize] {
        &self.upper_covers[a]
    }

    pub fn lower_covers(&self, a: usize) -> &[usize] {
        &self.lower_covers[a]
    }

    /// All `(lower, upper)` cover pairs, sorted.
    pub fn cover_pairs(&self) -> Vec<(usize, usize)> {
        let mut pairs: Vec<_> = (0..self.len())
            .flat_map(|a| self.upper_covers[a].iter().map(move |&b| (a, b)))
            .collect();
        pairs.sort_unstable();
        pairs
    }

    pub fn up_set(&self, a: usize) -> &FixedBitSet {
        &self.up[a]
    }

    pub fn down_set(&self, a: usize) -> &FixedBitSet {
        &self.down[a]
    }

    pub fn linear_extension(&self) -> &[usize] {
        &self.topo
    }

    /// Number of pairs `(a, b)` with `a <= b`.
    pub fn relation_size(&self) -> usize {
        self.up.iter().map(|row| row.count_ones(..)).sum()
    }

    pub fn minimal_elements(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&a| self.lower_covers[a].is_empty())
            .collect()
    }

    pub fn maximal_elements(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&a| self.upper_covers[a].is_empty())
            .collect()
    }

    /// Elements of `[s, u]` sorted along the linear extension.
    pub fn interval(&self, s: usize, u: usize) -> Vec<usize> {
        let mut members = self.up[s].clone();
        members.intersect_with(&self.down[u]);
        let mut members: Vec<usize> = members.ones().collect();
        members.sort_unstable_by_key(|&t| self.topo_pos[t]);
        members
    }

    /// All pairs `(s, u)` with `s <= u`.
    pub fn enumerate_intervals(&self) -> Vec<(usize, usize)> {
        (0..self.len())
            .flat_map(|s| self.up[s].ones().map(move |u| (s, u)))
            .collect()
    }

    /// Moebius function from its defining recursion, restricted to `[s, u]`.
    pub fn mobius(&self, s: usize, u: usize) -> i64 {
        if !self.leq(s, u) {
            return 0;
        }
        let members = self.interval(s, u);
        let mut values: HashMap<usize, i64> = HashMap::with_capacity(members.len());
        for &t in &members {
            let value = if t == s {
                1
            } else {
                -values
                    .iter()
                    .filter(|&(&r, _)| self.lt(r, t))
                    .map(|(_, &m)| m)
                    .sum::<i64>()
            };
            values.insert(t, value);
        }
        values[&u]
    }

    /// `mobius(s, t)` for every `t` at once (zero where `s` is not below `t`).
    pub fn mobius_from(&self, s: usize) -> Vec<i64> {
        let mut values = vec![0i64; self.len()];
        let mut above: Vec<usize> = self.up[s].ones().collect();
        above.sort_unstable_by_key(|&t| self.topo_pos[t]);
        for &t in &above {
            values[t] = if t == s {
                1
            } else {
                let mut below = self.down[t].clone();
                below.intersect_with(&self.up[s]);
                -below
                    .ones()
                    .filter(|&r| r != t)
                    .map(|r| values[r])
                    .sum::<i64>()
            };
        }
        values
    }

    /// Checks that every maximal chain has the same length.
    pub fn gradedness(&self) -> Gradedness {
        let n = self.len();
        // shortest / longest cover paths from each element up to a maximal one
        let mut short = vec![0usize; n];
        let mut long = vec![0usize; n];
        let mut short_next = vec![None; n];
        let mut long_next = vec![None; n];
        for &a in self.topo.iter().rev() {
            for &b in &self.upper_covers[a] {
                if short_next[a].is_none() || short[b] + 1 < short[a] {
                    short[a] = short[b] + 1;
                    short_next[a] = Some(b);
                }
                if long_next[a].is_none() || long[b] + 1 > long[a] {
                    long[a] = long[b] + 1;
                    long_next[a] = Some(b);
                }
            }
        }
        let minimal = self.minimal_elements();
        let shortest = minimal.iter().copied().min_by_key(|&a| short[a]);
        let longest = minimal.iter().copied().max_by_key(|&a| long[a]);
        match (shortest, longest) {
            (Some(s), Some(l)) if short[s] != long[l] => {
                let walk = |start: usize, next: &[Option<usize>]| {
                    let mut chain = vec![start];
                    while let Some(b) = next[*chain.last().unwrap()] {
                        chain.push(b);
                    }
                    chain
                };
                Gradedness::NotGraded {
                    short: walk(s, &short_next),
                    long: walk(l, &long_next),
                }
            }
            (Some(s), _) => {
                let height = short[s];
                Gradedness::Graded {
                    ranks: (0..n).map(|a| height - long[a]).collect(),
                }
            }
            _ => Gradedness::Graded { ranks: Vec::new() },
        }
    }

    /// Least upper bound, when it exists.
    pub fn join(&self, a: usize, b: usize) -> Option<usize> {
        let mut bounds = self.up[a].clone();
        bounds.intersect_with(&self.up[b]);
        // a least element of `bounds` must come first in the linear extension
        let candidate = bounds.ones().min_by_key(|&c| self.topo_pos[c])?;
        bounds.is_subset(&self.up[candidate]).then_some(candidate)
    }

    /// Greatest lower bound, when it exists.
    pub fn meet(&self, a: usize, b: usize) -> Option<usize> {
        let mut bounds = self.down[a].clone();
        bounds.intersect_with(&self.down[b]);
        let candidate = bounds.ones().max_by_key(|&c| self.topo_pos[c])?;
        bounds.is_subset(&self.down[candidate]).then_some(candidate)
    }

    /// A pair lacking a join or a meet, if any.
    pub fn lattice_failure(&self) -> Option<(usize, usize)> {
        let n = self.len();
        (0..n)
            .flat_map(|a| (a..n).map(move |b| (a, b)))
            .find(|&(a, b)| self.join(a, b).is_none() || self.meet(a, b).is_none())
    }

    pub fn is_lattice(&self) -> bool {
        self.lattice_failure().is_none()
    }

    fn operation_tables(&self) -> Option<LatticeTables> {
        let n = self.len();
        let mut join = vec![0; n * n];
        let mut meet = vec![0; n * n];
        for a in 0..n {
            for b in a..n {
                let j = self.join(a, b)?;
                let m = self.meet(a, b)?;
                join[a * n + b] = j;
                join[b * n + a] = j;
                meet[a * n + b] = m;
                meet[b * n + a] = m;
            }
        }
        Some(LatticeTables { n, join, meet })
    }

    /// Both distributive laws over every triple. False for non-lattices.
    pub fn is_distributive(&self) -> bool {
        let Some(t) = self.operation_tables() else {
            return false;
        };
        let n = self.len();
        for s in 0..n {
            for a in 0..n {
                for b in 0..n {
                    if t.join(s, t.meet(a, b)) != t.meet(t.join(s, a), t.join(s, b))
                        || t.meet(s, t.join(a, b)) != t.join(t.meet(s, a), t.meet(s, b))
                    {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// A pentagon sublattice `[bottom, b, c, a, top]` with `b < c` and `a`
    /// incomparable to both.
    pub fn find_pentagon(&self) -> Option<[usize; 5]> {
        let t = self.operation_tables()?;
        let n = self.len();
        for a in 0..n {
            for b in 0..n {
                for c in self.up[b].ones().filter(|&c| c != b) {
                    let bottom = t.meet(a, c);
                    let top = t.join(a, b);
                    if t.meet(a, b) == bottom && t.join(a, c) == top {
                        return Some([bottom, b, c, a, top]);
                    }
                }
            }
        }
        None
    }

    /// A diamond sublattice `[bottom, a, b, c, top]` with `a, b, c` pairwise
    /// incomparable.
    pub fn find_diamond(&self) -> Option<[usize; 5]> {
        let t = self.operation_tables()?;
        let n = self.len();
        for a in 0..n {
            for b in a + 1..n {
                if self.comparable(a, b) {
                    continue;
                }
                let bottom = t.meet(a, b);
                let top = t.join(a, b);
                for c in b + 1..n {
                    if !self.comparable(a, c)
                        && !self.comparable(b, c)
                        && t.meet(a, c) == bottom
                        && t.meet(b, c) == bottom
                        && t.join(a, c) == top
                        && t.join(b, c) == top
                    {
                        return Some([bottom, a, b, c, top]);
                    }
                }
            }
        }
        None
    }

    /// Distributivity through the absence of pentagon and diamond sublattices.
    pub fn is_distributive_by_sublattices(&self) -> bool {
        self.is_lattice() && self.find_pentagon().is_none() && self.find_diamond().is_none()
    }

    pub fn is_modular(&self) -> bool {
        self.is_lattice() && self.find_pentagon().is_none()
    }

    /// True if `subset` is closed under this poset's joins and meets.
    pub fn is_sublattice(&self, subset: &[usize]) -> bool {
        subset.iter().all(|&a| {
            subset.iter().all(|&b| {
                matches!(self.join(a, b), Some(j) if subset.contains(&j))
                    && matches!(self.meet(a, b), Some(m) if subset.contains(&m))
            })
        })
    }

    fn signature(&self, a: usize) -> (usize, usize, usize, usize) {
        (
            self.down[a].count_ones(..),
            self.up[a].count_ones(..),
            self.lower_covers[a].len(),
            self.upper_covers[a].len(),
        )
    }
}

struct LatticeTables {
    n: usize,
    join: Vec<usize>,
    meet: Vec<usize>,
}

impl LatticeTables {
    fn join(&self, a: usize, b: usize) -> usize {
        self.join[a * self.n + b]
    }

    fn meet(&self, a: usize, b: usize) -> usize {
        self.meet[a * self.n + b]
    }
}

/// An order isomorphism `p -> q` as `map[a] = image of a`, found by
/// backtracking with degree pruning. Refuses posets above `limit` elements.
pub fn find_isomorphism<A, B>(
    p: &FinitePoset<A>,
    q: &FinitePoset<B>,
    limit: usize,
) -> Result<Option<Vec<usize>>> {
    for size in [p.len(), q.len()] {
        if size > limit {
            return Err(Error::TooLarge { size, limit });
        }
    }
    if p.len() != q.len() || p.relation_size() != q.relation_size() {
        return Ok(None);
    }
    let mut sig_p: Vec<_> = (0..p.len()).map(|a| p.signature(a)).collect();
    let mut sig_q: Vec<_> = (0..q.len()).map(|b| q.signature(b)).collect();
    let by_sig_q: Vec<_> = sig_q.clone();
    sig_p.sort_unstable();
    sig_q.sort_unstable();
    if sig_p != sig_q {
        return Ok(None);
    }

    fn extend<A, B>(
        p: &FinitePoset<A>,
        q: &FinitePoset<B>,
        sig_q: &[(usize, usize, usize, usize)],
        depth: usize,
        map: &mut Vec<usize>,
        used: &mut [bool],
    ) -> bool {
        let Some(&x) = p.topo.get(depth) else {
            return true;
        };
        let sig = p.signature(x);
        for y in 0..q.len() {
            if used[y] || sig_q[y] != sig {
                continue;
            }
            let consistent = p.topo[..depth].iter().all(|&x2| {
                let y2 = map[x2];
                p.leq(x2, x) == q.leq(y2, y) && p.leq(x, x2) == q.leq(y, y2)
            });
            if consistent {
                map[x] = y;
                used[y] = true;
                if extend(p, q, sig_q, depth + 1, map, used) {
                    return true;
                }
                used[y] = false;
            }
        }
        false
    }

    let mut map = vec![usize::MAX; p.len()];
    let mut used = vec![false; q.len()];
    Ok(extend(p, q, &by_sig_q, 0, &mut map, &mut used).then_some(map))
}

/// Isomorphism test with the default size cap.
pub fn are_isomorphic<A, B>(p: &FinitePoset<A>, q: &FinitePoset<B>) -> Result<bool> {
    find_isomorphism(p, q, DEFAULT_ISOMORPHISM_LIMIT).map(|m| m.is_some())
}

impl FinitePoset<usize> {
    /// `0 < 1 < ... < k-1`.
    pub fn chain(k: usize) -> Self {
        let pairs: Vec<_> = (1..k).map(|i| (i - 1, i)).collect();
        Self::from_covers((0..k).collect(), &pairs).expect("a chain is acyclic")
    }

    pub fn antichain(k: usize) -> Self {
        Self::from_covers((0..k).collect(), &[]).expect("no covers")
    }

    /// Subsets of a `rank`-element set as bit masks, ordered by inclusion.
    pub fn boolean_lattice(rank: usize) -> Self {
        let size = 1usize << rank;
        let pairs: Vec<_> = (0..size)
            .flat_map(|m| {
                (0..rank)
                    .filter(move |i| m >> i & 1 == 0)
                    .map(move |i| (m, m | 1 << i))
            })
            .collect();
        Self::from_covers((0..size).collect(), &pairs).expect("inclusion is acyclic")
    }
}

impl FinitePoset<Vec<usize>> {
    /// Product of chains with the given numbers of elements, ordered
    /// coordinate-wise; labels are coordinate vectors in lexicographic order.
    pub fn chain_product(sizes: &[usize]) -> Self {
        let mut labels: Vec<Vec<usize>> = vec![Vec::new()];
        for &size in sizes {
            labels = labels
                .into_iter()
                .flat_map(|prefix| {
                    (0..size).map(move |v| {
                        let mut next = prefix.clone();
                        next.push(v);
                        next
                    })
                })
                .collect();
        }
        let index: HashMap<Vec<usize>, usize> = labels
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, l)| (l, i))
            .collect();
        let mut pairs = Vec::new();
        for (i, label) in labels.iter().enumerate() {
            for k in 0..label.len() {
                if label[k] + 1 < sizes[k] {
                    let mut up = label.clone();
                    up[k] += 1;
                    pairs.push((i, index[&up]));
                }
            }
        }
        Self::from_covers(labels, &pairs).expect("coordinate order is acyclic")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pentagon() -> FinitePoset<usize> {
        // 0 < 1 < 2 < 4, 0 < 3 < 4
        FinitePoset::from_covers(
            vec![0, 1, 2, 3, 4],
            &[(0, 1), (1, 2), (2, 4), (0, 3), (3, 4)],
        )
        .unwrap()
    }

    fn diamond() -> FinitePoset<usize> {
        FinitePoset::from_covers(
            vec![0, 1, 2, 3, 4],
            &[(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)],
        )
        .unwrap()
    }

    #[test]
    fn chain_and_antichain_relations() {
        let c = FinitePoset::chain(3);
        assert_eq!(c.relation_size(), 6);
        assert_eq!(c.cover_pairs(), vec![(0, 1), (1, 2)]);
        let a = FinitePoset::antichain(3);
        assert_eq!(a.relation_size(), 3);
        assert_eq!(a.enumerate_intervals().len(), 3);
    }

    #[test]
    fn construction_errors() {
        assert_eq!(
            FinitePoset::from_covers(vec![0, 1], &[(0, 1), (1, 0)]).unwrap_err(),
            Error::Cycle(0)
        );
        assert!(matches!(
            FinitePoset::from_covers(vec![0, 1], &[(0, 5)]),
            Err(Error::DanglingIndex { index: 5, len: 2 })
        ));
        assert_eq!(
            FinitePoset::from_covers(vec![0], &[(0, 0)]).unwrap_err(),
            Error::Cycle(0)
        );
        assert_eq!(
            FinitePoset::from_covers(vec![7, 7], &[]).unwrap_err(),
            Error::DuplicateLabel(1)
        );
        assert!(matches!(
            FinitePoset::from_relation(vec![0, 1, 2], |a: &i32, b: &i32| a == b
                || (a + 1) % 3 == *b),
            Err(Error::NotAPartialOrder(_))
        ));
    }

    #[test]
    fn redundant_covers_are_reduced() {
        let p = FinitePoset::from_covers(vec![0, 1, 2], &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(p.cover_pairs(), vec![(0, 1), (1, 2)]);
        assert!(!p.is_cover(0, 2));
        assert!(p.lt(0, 2));
    }

    #[test]
    fn mobius_small_cases() {
        let c = FinitePoset::chain(2);
        assert_eq!(c.mobius(0, 0), 1);
        assert_eq!(c.mobius(0, 1), -1);
        assert_eq!(c.mobius(1, 0), 0);
        let b3 = FinitePoset::boolean_lattice(3);
        assert_eq!(b3.mobius(0, 7), -1);
        assert_eq!(b3.mobius_from(0)[7], -1);
        assert_eq!(b3.mobius(1, 7), 1);
        let c4 = FinitePoset::chain(4);
        assert_eq!(c4.mobius(0, 2), 0);
    }

    #[test]
    fn mobius_sum_rule() {
        for p in [
            FinitePoset::boolean_lattice(3),
            pentagon(),
            diamond(),
            FinitePoset::chain(5),
        ] {
            for (s, u) in p.enumerate_intervals() {
                let total: i64 = p.interval(s, u).iter().map(|&t| p.mobius(s, t)).sum();
                assert_eq!(total, if s == u { 1 } else { 0 });
                assert_eq!(p.mobius(s, u), p.mobius_from(s)[u]);
            }
        }
        // diamond: mu(bottom, top) = 2
        assert_eq!(diamond().mobius(0, 4), 2);
    }

    #[test]
    fn chain_interval_count() {
        for k in 1..8 {
            assert_eq!(
                FinitePoset::chain(k).enumerate_intervals().len(),
                k * (k + 1) / 2
            );
        }
    }

    #[test]
    fn gradedness() {
        assert!(FinitePoset::chain(4).gradedness().is_graded());
        match pentagon().gradedness() {
            Gradedness::NotGraded { short, long } => {
                assert_eq!(short, vec![0, 3, 4]);
                assert_eq!(long, vec![0, 1, 2, 4]);
            }
            other => panic!("pentagon reported as {other:?}"),
        }
        let Gradedness::Graded { ranks } = FinitePoset::boolean_lattice(3).gradedness() else {
            panic!("boolean lattice is graded");
        };
        assert_eq!(
            ranks,
            (0..8usize)
                .map(|m| m.count_ones() as usize)
                .collect::<Vec<_>>()
        );
    }

    #[test]
    fn lattice_checks() {
        assert!(pentagon().is_lattice());
        assert!(!pentagon().is_distributive());
        assert!(!pentagon().is_modular());
        assert_eq!(pentagon().find_pentagon(), Some([0, 1, 2, 3, 4]));
        assert!(diamond().is_modular());
        assert!(!diamond().is_distributive());
        assert!(diamond().find_diamond().is_some());
        assert!(FinitePoset::boolean_lattice(3).is_distributive());
        assert!(FinitePoset::boolean_lattice(3).is_distributive_by_sublattices());
        // two minimal elements: no meet
        let v = FinitePoset::from_covers(vec![0, 1, 2], &[(0, 2), (1, 2)]).unwrap();
        assert!(!v.is_lattice());
        assert_eq!(v.lattice_failure(), Some((0, 1)));
        assert!(!v.is_distributive());
        // bowtie: two maximal bounds, no least one
        let bowtie =
            FinitePoset::from_covers(vec![0, 1, 2, 3], &[(0, 2), (0, 3), (1, 2), (1, 3)]).unwrap();
        assert_eq!(bowtie.join(0, 1), None);
    }

    #[test]
    fn isomorphism() {
        let product = FinitePoset::chain_product(&[2, 2, 2]);
        assert!(are_isomorphic(&product, &FinitePoset::boolean_lattice(3)).unwrap());
        assert!(!are_isomorphic(&FinitePoset::chain(2), &FinitePoset::antichain(2)).unwrap());
        assert!(!are_isomorphic(&pentagon(), &diamond()).unwrap());
        let relabeled = FinitePoset::from_covers(
            vec![9, 8, 7, 6, 5],
            &[(4, 3), (3, 2), (2, 0), (4, 1), (1, 0)],
        )
        .unwrap();
        let map = find_isomorphism(&pentagon(), &relabeled, 64)
            .unwrap()
            .unwrap();
        for a in 0..5 {
            for b in 0..5 {
                assert_eq!(pentagon().leq(a, b), relabeled.leq(map[a], map[b]));
            }
        }
        assert!(matches!(
            find_isomorphism(&FinitePoset::chain(70), &FinitePoset::chain(70), 64),
            Err(Error::TooLarge {
                size: 70,
                limit: 64
            })
        ));
    }

    #[test]
    fn induced_subposets() {
        let b3 = FinitePoset::boolean_lattice(3);
        let chain = b3.induced_subposet(&[0, 1, 3, 7]).unwrap();
        assert!(are_isomorphic(&chain, &FinitePoset::chain(4)).unwrap());
        // {1}, {2}, {1,2,3}: induced covers skip the missing middle
        let sub = b3.induced_subposet(&[1, 2, 7]).unwrap();
        assert_eq!(sub.cover_pairs(), vec![(0, 2), (1, 2)]);
        let evens = b3.filter(|m| m % 2 == 0).unwrap();
        assert_eq!(evens.len(), 4);
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        // random DAG: edges only from lower to higher index
        fn arb_dag(max: usize) -> impl Strategy<Value = (usize, Vec<(usize, usize)>)> {
            (1..=max).prop_flat_map(|n| {
                let edges = proptest::collection::vec((0..n, 0..n), 0..(2 * n))
                    .prop_map(|es| es.into_iter().filter(|(a, b)| a < b).collect::<Vec<_>>());
                (Just(n), edges)
            })
        }

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(64))]

            #[test]
            fn reduction_round_trip((n, edges) in arb_dag(100)) {
                let p = FinitePoset::from_covers((0..n).collect(), &edges).unwrap();
                let reduced = FinitePoset::from_covers((0..n).collect(), &p.cover_pairs()).unwrap();
                prop_assert_eq!(reduced.cover_pairs(), p.cover_pairs());
                for a in 0..n {
                    prop_assert_eq!(reduced.up_set(a), p.up_set(a));
                }
                // the reduction is the unique minimal generating set
                for (a, b) in p.cover_pairs() {
                    prop_assert!(!(0..n).any(|c| p.lt(a, c) && p.lt(c, b)));
                }
            }

            #[test]
            fn mobius_inverts_zeta((n, edges) in arb_dag(25)) {
                let p = FinitePoset::from_covers((0..n).collect(), &edges).unwrap();
                for (s, u) in p.enumerate_intervals() {
                    let total: i64 = p.interval(s, u).iter().map(|&t| p.mobius(s, t)).sum();
                    prop_assert_eq!(total, i64::from(s == u));
                }
            }

            #[test]
            fn distributivity_checkers_agree((n, edges) in arb_dag(28)) {
                // adjoin a bottom and a top so that lattices come up often
                let size = n + 2;
                let mut pairs: Vec<_> = edges.iter().map(|&(a, b)| (a + 1, b + 1)).collect();
                for a in 1..=n {
                    pairs.push((0, a));
                    pairs.push((a, size - 1));
                }
                if n == 0 { pairs.push((0, 1)); }
                let p = FinitePoset::from_covers((0..size).collect(), &pairs).unwrap();
                prop_assert_eq!(p.is_distributive(), p.is_distributive_by_sublattices());
            }
        }
    }
}
