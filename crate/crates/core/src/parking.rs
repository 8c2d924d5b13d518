//! Parking functions under the coordinate-wise order, with an adjoined top.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::limits::check_exhaustive;
use crate::perm::parse_int_list;
use crate::{Error, FinitePoset, Result};

/// A parking function with 1-based preferences, or the adjoined maximum.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ParkingFunction {
    Prefs(Vec<usize>),
    Top,
}

fn check_range(prefs: &[usize]) -> Result<()> {
    let n = prefs.len();
    if n == 0 {
        return Err(Error::EmptySize);
    }
    match prefs.iter().find(|&&p| p == 0 || p > n) {
        Some(&value) => Err(Error::PreferenceOutOfRange { value, n }),
        None => Ok(()),
    }
}

/// The sorted criterion `q_i <= i`.
pub fn is_parking_function(prefs: &[usize]) -> Result<bool> {
    check_range(prefs)?;
    let mut sorted = prefs.to_vec();
    sorted.sort_unstable();
    Ok(sorted.iter().zip(1..).all(|(&q, i)| q <= i))
}

/// Runs the cars down the street; true if every car finds a spot.
pub fn parks_all(prefs: &[usize]) -> Result<bool> {
    check_range(prefs)?;
    let mut taken = vec![false; prefs.len()];
    for &p in prefs {
        match taken[p - 1..].iter().position(|&t| !t) {
            Some(offset) => taken[p - 1 + offset] = true,
            None => return Ok(false),
        }
    }
    Ok(true)
}

impl ParkingFunction {
    pub fn new(prefs: Vec<usize>) -> Result<Self> {
        if is_parking_function(&prefs)? {
            Ok(ParkingFunction::Prefs(prefs))
        } else {
            Err(Error::NotParking(prefs))
        }
    }

    pub fn minimum(n: usize) -> Result<Self> {
        Self::new(vec![1; n])
    }

    pub fn prefs(&self) -> Option<&[usize]> {
        match self {
            ParkingFunction::Prefs(p) => Some(p),
            ParkingFunction::Top => None,
        }
    }

    pub fn is_top(&self) -> bool {
        matches!(self, ParkingFunction::Top)
    }
}

fn check_sizes(a: &[usize], b: &[usize]) -> Result<()> {
    if a.len() == b.len() {
        Ok(())
    } else {
        Err(Error::SizeMismatch {
            left: a.len(),
            right: b.len(),
        })
    }
}

pub fn pf_leq(p: &ParkingFunction, q: &ParkingFunction) -> Result<bool> {
    match (p, q) {
        (_, ParkingFunction::Top) => Ok(true),
        (ParkingFunction::Top, _) => Ok(false),
        (ParkingFunction::Prefs(a), ParkingFunction::Prefs(b)) => {
            check_sizes(a, b)?;
            Ok(a.iter().zip(b).all(|(x, y)| x <= y))
        }
    }
}

/// Coordinate-wise minimum; `Top` is neutral.
pub fn pf_meet(p: &ParkingFunction, q: &ParkingFunction) -> Result<ParkingFunction> {
    match (p, q) {
        (ParkingFunction::Top, other) | (other, ParkingFunction::Top) => Ok(other.clone()),
        (ParkingFunction::Prefs(a), ParkingFunction::Prefs(b)) => {
            check_sizes(a, b)?;
            Ok(ParkingFunction::Prefs(
                a.iter().zip(b).map(|(x, y)| *x.min(y)).collect(),
            ))
        }
    }
}

/// Coordinate-wise maximum when that still parks, otherwise `Top`.
pub fn pf_join(p: &ParkingFunction, q: &ParkingFunction) -> Result<ParkingFunction> {
    match (p, q) {
        (ParkingFunction::Top, _) | (_, ParkingFunction::Top) => Ok(ParkingFunction::Top),
        (ParkingFunction::Prefs(a), ParkingFunction::Prefs(b)) => {
            check_sizes(a, b)?;
            let max: Vec<usize> = a.iter().zip(b).map(|(x, y)| *x.max(y)).collect();
            Ok(if is_parking_function(&max)? {
                ParkingFunction::Prefs(max)
            } else {
                ParkingFunction::Top
            })
        }
    }
}

/// All parking functions of size `n`, in lex order.
pub fn all_parking_functions(n: usize) -> Result<Vec<ParkingFunction>> {
    check_exhaustive("all_parking_functions", n)?;
    let mut out = Vec::new();
    let mut prefs = vec![1; n];
    loop {
        if is_parking_function(&prefs)? {
            out.push(ParkingFunction::Prefs(prefs.clone()));
        }
        // odometer over [1, n]^n
        let mut i = n;
        loop {
            if i == 0 {
                return Ok(out);
            }
            i -= 1;
            if prefs[i] < n {
                prefs[i] += 1;
                break;
            }
            prefs[i] = 1;
        }
    }
}

/// Parking functions of size `n` plus `Top`, which comes last.
pub fn parking_poset(n: usize) -> Result<FinitePoset<ParkingFunction>> {
    let mut labels = all_parking_functions(n)?;
    labels.push(ParkingFunction::Top);
    FinitePoset::from_relation(labels, |a, b| pf_leq(a, b).expect("same size"))
}

/// Five elements `[bottom, a, b, c, Top]` forming a pentagon sublattice with
/// `b < c` and `a` incomparable to both:
/// `a = (n,1,1,...)`, `b = (1,1,n,1,...)`, `c = (1,2,n,1,...)`.
pub fn pentagon_witness(n: usize) -> Result<[ParkingFunction; 5]> {
    if n < 3 {
        return Err(Error::TooSmall {
            what: "pentagon_witness",
            n,
            min: 3,
        });
    }
    let with = |entries: &[(usize, usize)]| {
        let mut prefs = vec![1; n];
        for &(i, v) in entries {
            prefs[i] = v;
        }
        ParkingFunction::new(prefs)
    };
    let bottom = ParkingFunction::minimum(n)?;
    let a = with(&[(0, n)])?;
    let b = with(&[(2, n)])?;
    let c = with(&[(1, 2), (2, n)])?;
    let five = [bottom, a, b, c, ParkingFunction::Top];

    // pentagon order: 0 < 2 < 3 < 4 and 0 < 1 < 4
    let expected = |i: usize, j: usize| i == j || i == 0 || j == 4 || (i == 2 && j == 3);
    for i in 0..5 {
        for j in 0..5 {
            if pf_leq(&five[i], &five[j])? != expected(i, j) {
                return Err(Error::Inconsistent(format!(
                    "{} vs {} is not a pentagon relation",
                    five[i], five[j]
                )));
            }
            for r in [pf_meet(&five[i], &five[j])?, pf_join(&five[i], &five[j])?] {
                if !five.contains(&r) {
                    return Err(Error::Inconsistent(format!("{r} escapes the pentagon")));
                }
            }
        }
    }
    Ok(five)
}

impl PartialOrd for ParkingFunction {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        match (pf_leq(self, other).ok()?, pf_leq(other, self).ok()?) {
            (true, true) => Some(Ordering::Equal),
            (true, false) => Some(Ordering::Less),
            (false, true) => Some(Ordering::Greater),
            (false, false) => None,
        }
    }
}

impl fmt::Display for ParkingFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParkingFunction::Top => f.write_str("T"),
            ParkingFunction::Prefs(p) => {
                let parts: Vec<String> = p.iter().map(usize::to_string).collect();
                f.write_str(&parts.join(","))
            }
        }
    }
}

impl FromStr for ParkingFunction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "T" => Ok(ParkingFunction::Top),
            other => ParkingFunction::new(parse_int_list(other)?),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn pf(s: &str) -> ParkingFunction {
        s.parse().unwrap()
    }

    #[test]
    fn membership_examples() {
        assert!(is_parking_function(&[1, 1, 1, 1]).unwrap());
        assert!(is_parking_function(&[3, 1, 2]).unwrap());
        assert!(!is_parking_function(&[3, 1, 3]).unwrap());
        assert_eq!(
            is_parking_function(&[1, 4, 1]),
            Err(Error::PreferenceOutOfRange { value: 4, n: 3 })
        );
        assert!(is_parking_function(&[0, 1]).is_err());
    }

    #[test]
    fn sorted_criterion_matches_simulation() {
        for n in 1..=5 {
            let mut prefs = vec![1; n];
            loop {
                assert_eq!(
                    is_parking_function(&prefs).unwrap(),
                    parks_all(&prefs).unwrap(),
                    "{prefs:?}"
                );
                let Some(i) = prefs.iter().rposition(|&p| p < n) else {
                    break;
                };
                prefs[i] += 1;
                prefs[i + 1..].fill(1);
            }
        }
    }

    #[test]
    fn counts() {
        for n in 1..=7usize {
            assert_eq!(
                all_parking_functions(n).unwrap().len(),
                (n + 1).pow(n as u32 - 1)
            );
        }
    }

    #[test]
    fn rearrangements_stay_parking() {
        for n in 1..=6 {
            for p in all_parking_functions(n).unwrap() {
                let prefs = p.prefs().unwrap();
                for w in crate::Permutation::all(n) {
                    let shuffled: Vec<usize> = w.word().iter().map(|&i| prefs[i - 1]).collect();
                    assert!(is_parking_function(&shuffled).unwrap());
                }
            }
        }
    }

    #[test]
    fn meet_and_join_examples() {
        assert_eq!(pf_meet(&pf("3,1,1"), &pf("1,1,3")).unwrap(), pf("1,1,1"));
        assert_eq!(
            pf_meet(&pf("3,1,1"), &ParkingFunction::Top).unwrap(),
            pf("3,1,1")
        );
        assert_eq!(pf_meet(&pf("2,1,3"), &pf("2,1,3")).unwrap(), pf("2,1,3"));
        assert_eq!(
            pf_join(&pf("3,1,1"), &pf("1,1,3")).unwrap(),
            ParkingFunction::Top
        );
        assert_eq!(pf_join(&pf("1,1,3"), &pf("1,2,3")).unwrap(), pf("1,2,3"));
        assert_eq!(
            pf_join(&pf("3,1,1"), &pf("1,2,3")).unwrap(),
            ParkingFunction::Top
        );
        assert_eq!(
            pf_join(&pf("1,2"), &ParkingFunction::Top).unwrap(),
            ParkingFunction::Top
        );
        assert!(pf_meet(&pf("1,2"), &pf("1,1,1")).is_err());
        assert_eq!(pf("1,2,3").partial_cmp(&pf("3,1,1")), None);
        assert!(pf("1,1,3") < pf("1,2,3"));
    }

    #[test]
    fn serialization() {
        assert_eq!(pf("1,1,3").to_string(), "1,1,3");
        assert_eq!(ParkingFunction::Top.to_string(), "T");
        assert_eq!(pf("T"), ParkingFunction::Top);
        assert!("3,1,3".parse::<ParkingFunction>().is_err());
    }

    #[test]
    fn pentagon() {
        let five = pentagon_witness(3).unwrap();
        let expected = [
            pf("1,1,1"),
            pf("3,1,1"),
            pf("1,1,3"),
            pf("1,2,3"),
            ParkingFunction::Top,
        ];
        assert_eq!(five, expected);
        for n in 3..=8 {
            pentagon_witness(n).unwrap();
        }
        assert!(pentagon_witness(2).is_err());
    }

    #[test]
    fn padding_with_ones_breaks_the_pentagon() {
        // (3,1,1,1) v (1,1,3,1) = (3,1,3,1) still parks, so the plain padding is not a witness at n = 4
        assert_eq!(
            pf_join(&pf("3,1,1,1"), &pf("1,1,3,1")).unwrap(),
            pf("3,1,3,1")
        );
    }

    #[test]
    fn oracle_agrees() {
        for n in 1..=4 {
            let poset = parking_poset(n).unwrap();
            assert!(poset.is_lattice());
            for i in 0..poset.len() {
                for j in 0..poset.len() {
                    let (a, b) = (poset.label(i), poset.label(j));
                    assert_eq!(
                        poset.label(poset.meet(i, j).unwrap()),
                        &pf_meet(a, b).unwrap()
                    );
                    assert_eq!(
                        poset.label(poset.join(i, j).unwrap()),
                        &pf_join(a, b).unwrap()
                    );
                }
            }
            if n >= 3 {
                assert!(!poset.is_modular());
                assert!(!poset.is_distributive());
                assert!(poset.find_pentagon().is_some());
                let idx: Vec<usize> = pentagon_witness(n)
                    .unwrap()
                    .iter()
                    .map(|p| poset.index_of(p).unwrap())
                    .collect();
                assert!(poset.is_sublattice(&idx));
            } else {
                assert!(poset.is_distributive());
            }
        }
    }

    proptest! {
        #[test]
        fn meets_of_parking_functions_park(
            pair in (1usize..=9).prop_flat_map(|n| (
                proptest::collection::vec(1..=n, n),
                proptest::collection::vec(1..=n, n),
            ))
        ) {
            let (a, b) = pair;
            if is_parking_function(&a).unwrap() && is_parking_function(&b).unwrap() {
                let m = pf_meet(&ParkingFunction::Prefs(a.clone()), &ParkingFunction::Prefs(b.clone())).unwrap();
                prop_assert!(is_parking_function(m.prefs().unwrap()).unwrap());
                let j = pf_join(&ParkingFunction::Prefs(a), &ParkingFunction::Prefs(b)).unwrap();
                if let Some(p) = j.prefs() {
                    prop_assert!(is_parking_function(p).unwrap());
                }
            }
        }
    }
}
