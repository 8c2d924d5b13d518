//! The middle, weak and Bruhat orders on `S_n`.
//!
//! The middle order compares inversion sequences coordinate-wise, so its
//! lattice operations are coordinate-wise `min`/`max`. The weak and Bruhat
//! orders are given by their cover relations; their `leq` is reachability
//! along covers.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::str::FromStr;

use crate::limits::check_exhaustive;
use crate::perm::same_size;
use crate::{Error, FinitePoset, InversionSequence, MeshPattern, Permutation, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Order {
    Middle,
    Weak,
    Bruhat,
}

impl Order {
    pub const ALL: [Order; 3] = [Order::Middle, Order::Weak, Order::Bruhat];

    pub fn name(self) -> &'static str {
        match self {
            Order::Middle => "middle",
            Order::Weak => "weak",
            Order::Bruhat => "bruhat",
        }
    }
}

impl fmt::Display for Order {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Order {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Order::ALL
            .into_iter()
            .find(|o| o.name() == s)
            .ok_or_else(|| Error::Parse {
                position: 0,
                message: format!("unknown order {s:?}"),
            })
    }
}

fn sequences(v: &Permutation, w: &Permutation) -> Result<(InversionSequence, InversionSequence)> {
    same_size(v, w)?;
    Ok((v.inversion_sequence(), w.inversion_sequence()))
}

pub fn middle_leq(v: &Permutation, w: &Permutation) -> Result<bool> {
    let (x, y) = sequences(v, w)?;
    Ok(x.leq(&y))
}

/// `w` covers `v` iff their inversion sequences differ by `+1` in exactly one
/// coordinate.
pub fn middle_covers(v: &Permutation, w: &Permutation) -> Result<bool> {
    let (x, y) = sequences(v, w)?;
    Ok(incremented_coordinate(&x, &y).is_some())
}

/// The 1-based coordinate `i` with `y = x + e_i`, if there is one.
fn incremented_coordinate(x: &InversionSequence, y: &InversionSequence) -> Option<usize> {
    let mut found = None;
    for (k, (&a, &b)) in x.coords().iter().zip(y.coords()).enumerate() {
        if a == b {
            continue;
        }
        if b != a + 1 || found.is_some() {
            return None;
        }
        found = Some(k + 1);
    }
    found
}

fn combine(
    v: &Permutation,
    w: &Permutation,
    pick: fn(usize, usize) -> usize,
) -> Result<Permutation> {
    let (x, y) = sequences(v, w)?;
    let coords = x
        .coords()
        .iter()
        .zip(y.coords())
        .map(|(&a, &b)| pick(a, b))
        .collect();
    Ok(InversionSequence::from_coords_unchecked(coords).to_permutation())
}

pub fn meet(v: &Permutation, w: &Permutation) -> Result<Permutation> {
    combine(v, w, std::cmp::min)
}

pub fn join(v: &Permutation, w: &Permutation) -> Result<Permutation> {
    combine(v, w, std::cmp::max)
}

/// Number of inversions, which is the rank in all three orders.
pub fn rank(w: &Permutation) -> usize {
    w.inversion_sequence().sum()
}

/// `1 2 ... i j (i+1) ... (j-1) (j+1) ... n` for `i` in `[0, n-2]` and `j` in
/// `[i+2, n]`, sorted by inversion sequence.
pub fn join_irreducibles(n: usize) -> Result<Vec<Permutation>> {
    if n == 0 {
        return Err(Error::EmptySize);
    }
    let mut result = Vec::new();
    for i in 0..n.saturating_sub(1) {
        for j in i + 2..=n {
            let mut word: Vec<usize> = (1..=i).collect();
            word.push(j);
            word.extend((i + 1..=n).filter(|&v| v != j));
            result.push(Permutation::new(word)?);
        }
    }
    result.sort_by_cached_key(|w| w.inversion_sequence());
    Ok(result)
}

/// Moebius function of the middle order in closed form: zero unless `[v, w]`
/// is boolean, `(-1)^rank` when it is.
pub fn mobius_middle(v: &Permutation, w: &Permutation) -> Result<i64> {
    let (x, y) = sequences(v, w)?;
    if !x.leq(&y) {
        return Ok(0);
    }
    let mut ones = 0;
    for (&a, &b) in x.coords().iter().zip(y.coords()) {
        match b - a {
            0 => {}
            1 => ones += 1,
            _ => return Ok(0),
        }
    }
    Ok(if ones % 2 == 0 { 1 } else { -1 })
}

/// Positions (1-based) where `v` and `w` differ.
fn differing_positions(v: &Permutation, w: &Permutation) -> Vec<usize> {
    (1..=v.len()).filter(|&p| v.at(p) != w.at(p)).collect()
}

/// `w` is `v` with an ascent at adjacent positions turned into a descent.
pub fn weak_covers(v: &Permutation, w: &Permutation) -> Result<bool> {
    same_size(v, w)?;
    Ok(match differing_positions(v, w)[..] {
        [p, q] => q == p + 1 && v.at(p) < v.at(q) && w == &v.swap_positions(p, q),
        _ => false,
    })
}

/// `w = v * t` for a transposition `t`, with exactly one more inversion.
pub fn bruhat_covers(v: &Permutation, w: &Permutation) -> Result<bool> {
    same_size(v, w)?;
    Ok(match differing_positions(v, w)[..] {
        [p, q] => w == &v.swap_positions(p, q) && w.inversion_count() == v.inversion_count() + 1,
        _ => false,
    })
}

/// Elements covering `w` in the given order.
pub fn upper_covers(order: Order, w: &Permutation) -> Vec<Permutation> {
    let n = w.len();
    match order {
        Order::Middle => {
            let x = w.inversion_sequence();
            (1..=n)
                .filter(|&i| x.get(i) < i - 1)
                .map(|i| {
                    let mut coords = x.coords().to_vec();
                    coords[i - 1] += 1;
                    InversionSequence::from_coords_unchecked(coords).to_permutation()
                })
                .collect()
        }
        Order::Weak => (1..n)
            .filter(|&p| w.at(p) < w.at(p + 1))
            .map(|p| w.swap_positions(p, p + 1))
            .collect(),
        Order::Bruhat => {
            let mut covers = Vec::new();
            for p in 1..=n {
                for q in p + 1..=n {
                    let (a, b) = (w.at(p), w.at(q));
                    if a < b && !(p + 1..q).any(|r| a < w.at(r) && w.at(r) < b) {
                        covers.push(w.swap_positions(p, q));
                    }
                }
            }
            covers
        }
    }
}

fn reachable(order: Order, v: &Permutation, w: &Permutation) -> Result<bool> {
    same_size(v, w)?;
    let target_rank = w.inversion_count();
    let mut seen = HashSet::from([v.clone()]);
    let mut stack = vec![v.clone()];
    while let Some(u) = stack.pop() {
        if &u == w {
            return Ok(true);
        }
        if u.inversion_count() >= target_rank {
            continue;
        }
        for next in upper_covers(order, &u) {
            if seen.insert(next.clone()) {
                stack.push(next);
            }
        }
    }
    Ok(false)
}

/// Reflexive-transitive closure of [`weak_covers`].
pub fn weak_leq(v: &Permutation, w: &Permutation) -> Result<bool> {
    reachable(Order::Weak, v, w)
}

/// Reflexive-transitive closure of [`bruhat_covers`].
pub fn bruhat_leq(v: &Permutation, w: &Permutation) -> Result<bool> {
    reachable(Order::Bruhat, v, w)
}

pub fn leq(order: Order, v: &Permutation, w: &Permutation) -> Result<bool> {
    match order {
        Order::Middle => middle_leq(v, w),
        other => reachable(other, v, w),
    }
}

pub fn covers(order: Order, v: &Permutation, w: &Permutation) -> Result<bool> {
    match order {
        Order::Middle => middle_covers(v, w),
        Order::Weak => weak_covers(v, w),
        Order::Bruhat => bruhat_covers(v, w),
    }
}

/// The pattern `12` with the cells between the two points, below the top
/// one, shaded: `j` left of `i`, and nothing smaller than `i` in between.
pub fn middle_cover_mesh() -> MeshPattern {
    MeshPattern::new(
        Permutation::from_word_unchecked(vec![1, 2]),
        [(1, 0), (1, 1)],
    )
    .expect("cells inside the grid")
}

/// All value pairs `(j, i)` forming an occurrence of [`middle_cover_mesh`] in
/// `v` whose swap turns `v` into `w`.
pub fn cover_mesh_witnesses(v: &Permutation, w: &Permutation) -> Result<Vec<(usize, usize)>> {
    same_size(v, w)?;
    Ok(middle_cover_mesh()
        .occurrences(v)
        .into_iter()
        .map(|pos| (v.at(pos[0]), v.at(pos[1])))
        .filter(|&(j, i)| &v.swap_values(j, i) == w)
        .collect())
}

/// The swapped pair `(j, i)` when `w` covers `v` in the middle order.
pub fn cover_mesh_witness(v: &Permutation, w: &Permutation) -> Result<Option<(usize, usize)>> {
    Ok(cover_mesh_witnesses(v, w)?.into_iter().next())
}

/// `S_n` under `order`, elements listed in lexicographic order of inversion
/// sequences.
pub fn order_poset(order: Order, n: usize) -> Result<FinitePoset<Permutation>> {
    check_exhaustive("order_poset", n)?;
    let elements: Vec<Permutation> = Permutation::all(n).collect();
    let index: HashMap<&Permutation, usize> =
        elements.iter().enumerate().map(|(i, w)| (w, i)).collect();
    let pairs: Vec<(usize, usize)> = elements
        .iter()
        .enumerate()
        .flat_map(|(a, w)| upper_covers(order, w).into_iter().map(move |u| (a, u)))
        .map(|(a, u)| (a, index[&u]))
        .collect();
    FinitePoset::from_covers(elements.clone(), &pairs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::{are_isomorphic, find_isomorphism, Gradedness};

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn middle_examples() {
        assert!(middle_leq(&p("123"), &p("321")).unwrap());
        assert!(!middle_leq(&p("213"), &p("312")).unwrap());
        assert!(middle_leq(&p("132"), &p("312")).unwrap());
        assert!(middle_covers(&p("123"), &p("132")).unwrap());
        assert!(!middle_covers(&p("123"), &p("321")).unwrap());
        assert!(!middle_covers(&p("231"), &p("231")).unwrap());
        assert!(matches!(
            middle_leq(&p("12"), &p("123")),
            Err(Error::SizeMismatch { left: 2, right: 3 })
        ));
        assert!(meet(&p("12"), &p("123")).is_err());
    }

    #[test]
    fn lattice_operation_examples() {
        assert_eq!(join(&p("213"), &p("132")).unwrap(), p("231"));
        assert_eq!(join(&p("312"), &p("231")).unwrap(), p("321"));
        for v in Permutation::all(4) {
            assert_eq!(meet(&v, &p("1234")).unwrap(), p("1234"));
        }
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rank(&p("1234")), 0);
        assert_eq!(rank(&p("415623")), 7);
        for n in 1..=8 {
            let long = Permutation::long_element(n).unwrap();
            assert_eq!(rank(&long), n * (n - 1) / 2);
        }
    }

    #[test]
    fn join_irreducible_examples() {
        assert_eq!(join_irreducibles(1).unwrap(), vec![]);
        assert_eq!(join_irreducibles(2).unwrap(), vec![p("21")]);
        assert_eq!(
            join_irreducibles(3).unwrap(),
            vec![p("132"), p("312"), p("213")]
        );
    }

    #[test]
    fn join_irreducibles_cover_exactly_one_element() {
        for n in 1..=6 {
            let poset = order_poset(Order::Middle, n).unwrap();
            let mut expected: Vec<Permutation> = (0..poset.len())
                .filter(|&a| poset.lower_covers(a).len() == 1)
                .map(|a| poset.label(a).clone())
                .collect();
            expected.sort_by_cached_key(|w| w.inversion_sequence());
            let found = join_irreducibles(n).unwrap();
            assert_eq!(found, expected);
            assert_eq!(found.len(), n * (n - 1) / 2);
            assert!(found
                .iter()
                .all(|w| w.inversion_sequence().nonzero_count() == 1));
        }
    }

    #[test]
    fn mobius_examples() {
        assert_eq!(mobius_middle(&p("123"), &p("231")).unwrap(), 1);
        assert_eq!(mobius_middle(&p("123"), &p("312")).unwrap(), 0);
        assert_eq!(mobius_middle(&p("312"), &p("312")).unwrap(), 1);
        assert_eq!(mobius_middle(&p("312"), &p("123")).unwrap(), 0);
        assert_eq!(mobius_middle(&p("123"), &p("132")).unwrap(), -1);
    }

    #[test]
    fn mobius_matches_oracle() {
        for n in 1..=5 {
            let poset = order_poset(Order::Middle, n).unwrap();
            for s in 0..poset.len() {
                let row = poset.mobius_from(s);
                for (u, &expected) in row.iter().enumerate() {
                    assert_eq!(
                        mobius_middle(poset.label(s), poset.label(u)).unwrap(),
                        expected
                    );
                }
            }
        }
    }

    #[test]
    fn weak_and_bruhat_examples() {
        assert!(weak_covers(&p("123"), &p("213")).unwrap());
        assert!(!weak_covers(&p("213"), &p("312")).unwrap());
        for w in Permutation::all(4) {
            assert!(weak_leq(&p("1234"), &w).unwrap());
            assert!(bruhat_leq(&p("1234"), &w).unwrap());
        }
        assert!(bruhat_covers(&p("132"), &p("231")).unwrap());
        assert!(bruhat_leq(&p("213"), &p("312")).unwrap());
        assert!(!bruhat_covers(&p("123"), &p("321")).unwrap());
        assert!(!weak_leq(&p("213"), &p("312")).unwrap());
    }

    #[test]
    fn cover_witness_examples() {
        assert_eq!(
            cover_mesh_witness(&p("123"), &p("132")).unwrap(),
            Some((2, 3))
        );
        assert_eq!(
            cover_mesh_witness(&p("132"), &p("312")).unwrap(),
            Some((1, 3))
        );
        assert_eq!(cover_mesh_witness(&p("123"), &p("321")).unwrap(), None);
    }

    #[test]
    fn covers_agree_with_generated_covers() {
        for n in 1..=5 {
            for order in Order::ALL {
                for v in Permutation::all(n) {
                    let generated: HashSet<_> = upper_covers(order, &v).into_iter().collect();
                    for w in Permutation::all(n) {
                        assert_eq!(
                            covers(order, &v, &w).unwrap(),
                            generated.contains(&w),
                            "{order} {v} {w}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn middle_order_is_graded_by_inversions() {
        for n in 1..=5 {
            let poset = order_poset(Order::Middle, n).unwrap();
            let Gradedness::Graded { ranks } = poset.gradedness() else {
                panic!("P_{n} is graded");
            };
            for (a, r) in ranks.iter().enumerate() {
                assert_eq!(*r, rank(poset.label(a)));
            }
        }
    }

    #[test]
    fn middle_order_is_product_of_chains() {
        for n in 1..=4 {
            let poset = order_poset(Order::Middle, n).unwrap();
            let sizes: Vec<usize> = (1..=n).collect();
            assert!(are_isomorphic(&poset, &FinitePoset::chain_product(&sizes)).unwrap());
        }
    }

    // Covers that swap j < i when no value above j sits strictly between them:
    // the other intermediate mesh, counted on inversion bottoms instead.
    fn bottom_covers(w: &Permutation) -> Vec<Permutation> {
        let mesh = MeshPattern::new(p("12"), [(1, 1), (1, 2)]).unwrap();
        mesh.occurrences(w)
            .into_iter()
            .map(|pos| w.swap_positions(pos[0], pos[1]))
            .collect()
    }

    #[test]
    fn bottom_variant_is_isomorphic() {
        for n in 1..=4 {
            let elements: Vec<Permutation> = Permutation::all(n).collect();
            let index: HashMap<_, _> = elements
                .iter()
                .cloned()
                .enumerate()
                .map(|(i, w)| (w, i))
                .collect();
            let pairs: Vec<_> = elements
                .iter()
                .enumerate()
                .flat_map(|(a, w)| {
                    bottom_covers(w)
                        .into_iter()
                        .map(|u| (a, index[&u]))
                        .collect::<Vec<_>>()
                })
                .collect();
            let variant = FinitePoset::from_covers(elements, &pairs).unwrap();
            let middle = order_poset(Order::Middle, n).unwrap();
            assert!(
                find_isomorphism(&variant, &middle, 64).unwrap().is_some(),
                "n = {n}"
            );
        }
    }
}
