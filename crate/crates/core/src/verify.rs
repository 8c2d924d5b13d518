//! Invariant suites checked exhaustively for small `n`, with a printable
//! report.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;

use crate::enumeration::{
    boolean_by_rank, boolean_by_rank_recursive, boolean_interval_total, covering_relation_count,
    euler_characteristic, euler_distribution, interval_count_total, intervals_by_rank,
    is_boolean_interval, polynomial_row, stirling_first_unsigned,
};
use crate::heyting::{
    has_extreme_coordinates, is_regular, pseudocomplement, regular_subposet,
    relative_pseudocomplement,
};
use crate::involutions::{
    clusters, involution_count, involution_poset, involution_seq_check, is_slow_climbing,
    maximal_slow_climbing_below, meet_all, mobius_involution_ideal, slow_climb_decompose,
};
use crate::limits::{exhaustive_limit, DEFAULT_EXHAUSTIVE_LIMIT};
use crate::orders::{
    join, meet, middle_cover_mesh, mobius_middle, order_poset, upper_covers, Order,
};
use crate::parking::{
    all_parking_functions, is_parking_function, parking_poset, parks_all, pentagon_witness,
    pf_join, pf_meet,
};
use crate::perm::round_trip_all;
use crate::poset::{are_isomorphic, Gradedness};
use crate::{Error, FinitePoset, InversionSequence, MeshPattern, Permutation, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Bijection,
    Sandwich,
    Mesh,
    Tables,
    Mobius,
    Involutions,
    Heyting,
    Parking,
    All,
}

impl Suite {
    pub const EACH: [Suite; 8] = [
        Suite::Bijection,
        Suite::Sandwich,
        Suite::Mesh,
        Suite::Tables,
        Suite::Mobius,
        Suite::Involutions,
        Suite::Heyting,
        Suite::Parking,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Bijection => "bijection",
            Suite::Sandwich => "sandwich",
            Suite::Mesh => "mesh",
            Suite::Tables => "tables",
            Suite::Mobius => "mobius",
            Suite::Involutions => "involutions",
            Suite::Heyting => "heyting",
            Suite::Parking => "parking",
            Suite::All => "all",
        }
    }

    /// Largest `n_max` accepted by default. Raising the exhaustive limit
    /// raises every cap to at least that limit.
    pub fn cap(self) -> usize {
        let default = match self {
            Suite::Bijection | Suite::Involutions => 8,
            Suite::Sandwich | Suite::Mesh | Suite::Parking => 6,
            Suite::Tables => 12,
            Suite::Mobius | Suite::Heyting => 5,
            Suite::All => 12,
        };
        if exhaustive_limit() > DEFAULT_EXHAUSTIVE_LIMIT {
            default.max(exhaustive_limit())
        } else {
            default
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::EACH
            .into_iter()
            .chain([Suite::All])
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::Parse {
                position: 0,
                message: format!("unknown suite {s:?}"),
            })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub suite: Suite,
    pub n: usize,
    pub name: &'static str,
    /// `None` on success, otherwise a counterexample or error message.
    pub failure: Option<String>,
}

impl Check {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed())
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            match &c.failure {
                None => writeln!(f, "PASS {:<11} n={:<2} {}", c.suite.name(), c.n, c.name)?,
                Some(why) => writeln!(
                    f,
                    "FAIL {:<11} n={:<2} {}: {}",
                    c.suite.name(),
                    c.n,
                    c.name,
                    why
                )?,
            }
        }
        let failed = self.failures().count();
        writeln!(
            f,
            "{} checks, {} passed, {} failed",
            self.checks.len(),
            self.checks.len() - failed,
            failed
        )
    }
}

type Outcome = std::result::Result<(), String>;

fn ensure(cond: bool, why: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(why())
    }
}

fn lib<T>(r: Result<T>) -> std::result::Result<T, String> {
    r.map_err(|e| e.to_string())
}

struct Runner {
    suite: Suite,
    checks: Vec<Check>,
}

impl Runner {
    fn check(&mut self, n: usize, name: &'static str, f: impl FnOnce() -> Outcome) {
        self.checks.push(Check {
            suite: self.suite,
            n,
            name,
            failure: f().err(),
        });
    }
}

/// Runs `suite` for `n = 1..=n_max`. A specific suite rejects `n_max` above
/// its cap; `All` clamps each suite to its own cap.
pub fn run(suite: Suite, n_max: usize) -> Result<Report> {
    if n_max == 0 {
        return Err(Error::EmptySize);
    }
    let suites: Vec<(Suite, usize)> = match suite {
        Suite::All => Suite::EACH
            .into_iter()
            .map(|s| (s, n_max.min(s.cap())))
            .collect(),
        single if n_max > single.cap() => {
            return Err(Error::SizeLimit {
                what: single.name(),
                n: n_max,
                limit: single.cap(),
            })
        }
        single => vec![(single, n_max)],
    };
    let mut checks = Vec::new();
    for (s, top) in suites {
        let mut runner = Runner {
            suite: s,
            checks: Vec::new(),
        };
        for n in 1..=top {
            match s {
                Suite::Bijection => bijection(&mut runner, n),
                Suite::Sandwich => sandwich(&mut runner, n),
                Suite::Mesh => mesh(&mut runner, n),
                Suite::Tables => tables(&mut runner, n),
                Suite::Mobius => mobius(&mut runner, n),
                Suite::Involutions => involutions(&mut runner, n),
                Suite::Heyting => heyting(&mut runner, n),
                Suite::Parking => parking(&mut runner, n),
                Suite::All => unreachable!(),
            }
        }
        checks.extend(runner.checks);
    }
    Ok(Report { checks })
}

fn bijection(r: &mut Runner, n: usize) {
    r.check(n, "inversion sequences round trip", || {
        ensure(lib(round_trip_all(n))?, || "round trip failed".into())
    });
    if n > 7 {
        return;
    }
    r.check(n, "zero coordinates are right-to-left minima", || {
        for w in Permutation::all(n) {
            let x = w.inversion_sequence();
            let zeros: Vec<usize> = (1..=n).filter(|&i| x.get(i) == 0).collect();
            ensure(zeros == w.right_to_left_minima(), || w.to_string())?;
            ensure(x.sum() == w.inversion_count(), || w.to_string())?;
        }
        Ok(())
    });
}

fn sandwich(r: &mut Runner, n: usize) {
    let posets = lib(Order::ALL
        .into_iter()
        .map(|o| order_poset(o, n))
        .collect::<Result<Vec<_>>>());
    let posets = match posets {
        Ok(p) => p,
        Err(e) => return r.check(n, "order posets", || Err(e)),
    };
    let [middle, weak, bruhat] = [&posets[0], &posets[1], &posets[2]];
    r.check(n, "weak refines middle refines Bruhat", || {
        for a in 0..middle.len() {
            ensure(weak.up_set(a).is_subset(middle.up_set(a)), || {
                format!("weak above {}", middle.label(a))
            })?;
            ensure(middle.up_set(a).is_subset(bruhat.up_set(a)), || {
                format!("middle above {}", middle.label(a))
            })?;
        }
        Ok(())
    });
    let restricted_equal = |avoid: &str, other: &FinitePoset<Permutation>| -> Outcome {
        let pattern: Permutation = avoid.parse().expect("pattern");
        let keep: Vec<usize> = (0..middle.len())
            .filter(|&a| middle.label(a).avoids(&pattern))
            .collect();
        for &a in &keep {
            for &b in &keep {
                ensure(middle.leq(a, b) == other.leq(a, b), || {
                    format!("{} vs {}", middle.label(a), middle.label(b))
                })?;
            }
        }
        Ok(())
    };
    r.check(n, "213-avoiders: middle equals Bruhat", || {
        restricted_equal("213", bruhat)
    });
    r.check(n, "132-avoiders: middle equals weak", || {
        restricted_equal("132", weak)
    });
}

/// Upper covers of `v` obtained by swapping the two values of an occurrence.
fn mesh_swaps(m: &MeshPattern, v: &Permutation) -> Vec<Permutation> {
    m.occurrences(v)
        .into_iter()
        .map(|pos| v.swap_positions(pos[0], pos[1]))
        .collect()
}

fn mesh(r: &mut Runner, n: usize) {
    if n == 4 {
        r.check(
            n,
            "1423 has four occurrences of 12, three of the mesh",
            || {
                let w: Permutation = "1423".parse().expect("word");
                let classical = MeshPattern::classical("12".parse().expect("word"));
                let found = (
                    classical.occurrences(&w).len(),
                    middle_cover_mesh().occurrences(&w).len(),
                );
                ensure(found == (4, 3), || format!("got {found:?}"))
            },
        );
    }
    let twelve: Permutation = "12".parse().expect("word");
    let meshes = [
        (Order::Middle, middle_cover_mesh()),
        (
            Order::Weak,
            MeshPattern::new(twelve.clone(), [(1, 0), (1, 1), (1, 2)]).expect("cells"),
        ),
        (
            Order::Bruhat,
            MeshPattern::new(twelve, [(1, 1)]).expect("cells"),
        ),
    ];
    for (order, m) in meshes {
        let name = match order {
            Order::Middle => "middle covers are mesh occurrences, uniquely",
            Order::Weak => "weak covers are full-column mesh occurrences",
            Order::Bruhat => "Bruhat covers are box mesh occurrences",
        };
        r.check(n, name, || {
            for v in Permutation::all(n) {
                let swaps = mesh_swaps(&m, &v);
                let distinct: BTreeSet<Permutation> = swaps.iter().cloned().collect();
                let expected: BTreeSet<Permutation> = upper_covers(order, &v).into_iter().collect();
                ensure(distinct == expected, || v.to_string())?;
                ensure(distinct.len() == swaps.len(), || {
                    format!("repeated witness in {v}")
                })?;
            }
            Ok(())
        });
    }
}

const TABLE_ONE: [&[u64]; 5] = [
    &[1],
    &[2, 1],
    &[6, 7, 4, 1],
    &[24, 46, 49, 36, 18, 6, 1],
    &[120, 326, 501, 562, 497, 354, 204, 94, 33, 8, 1],
];

const TABLE_TWO: [&[u64]; 5] = [
    &[1],
    &[2, 1],
    &[6, 7, 2],
    &[24, 46, 29, 6],
    &[120, 326, 329, 146, 24],
];

fn same_row(got: &[BigUint], want: &[u64]) -> bool {
    got.len() == want.len() && got.iter().zip(want).all(|(a, &b)| *a == BigUint::from(b))
}

/// Size of `[s, u]` equals `2^(atoms)`, the oracle's test for booleanness in
/// a distributive lattice.
pub fn oracle_is_boolean(p: &FinitePoset<Permutation>, s: usize, u: usize) -> bool {
    let size = p.interval(s, u).len();
    let atoms = p.upper_covers(s).iter().filter(|&&a| p.leq(a, u)).count();
    size == 1 << atoms
}

fn tables(r: &mut Runner, n: usize) {
    r.check(n, "interval rows", || {
        let row = lib(intervals_by_rank(n))?;
        let mut poly = lib(polynomial_row(n))?;
        poly.reverse();
        ensure(row == poly, || "recursion and polynomial differ".into())?;
        ensure(
            row.iter().sum::<BigUint>() == lib(interval_count_total(n))?,
            || "row sum".into(),
        )?;
        if let Some(want) = TABLE_ONE.get(n - 1) {
            ensure(same_row(&row, want), || format!("{row:?}"))?;
        }
        Ok(())
    });
    r.check(n, "boolean rows", || {
        let row = lib(boolean_by_rank(n))?;
        ensure(row == lib(boolean_by_rank_recursive(n))?, || {
            "closed form and recursion differ".into()
        })?;
        ensure(
            row.iter().sum::<BigUint>() == lib(boolean_interval_total(n))?,
            || "row sum".into(),
        )?;
        if let Some(want) = TABLE_TWO.get(n - 1) {
            ensure(same_row(&row, want), || format!("{row:?}"))?;
        }
        Ok(())
    });
    r.check(n, "covers counted by n!(n - H_n)", || {
        lib(covering_relation_count(n)).map(drop)
    });
    if n <= 5 {
        r.check(n, "brute-force interval and boolean totals", || {
            let p = lib(order_poset(Order::Middle, n))?;
            let intervals = p.enumerate_intervals();
            ensure(
                BigUint::from(intervals.len()) == lib(interval_count_total(n))?,
                || format!("{}", intervals.len()),
            )?;
            let mut boolean = 0u64;
            for &(s, u) in &intervals {
                let oracle = oracle_is_boolean(&p, s, u);
                let closed = lib(is_boolean_interval(p.label(s), p.label(u)))?.is_some();
                ensure(oracle == closed, || {
                    format!("[{}, {}]", p.label(s), p.label(u))
                })?;
                boolean += u64::from(oracle);
            }
            ensure(
                BigUint::from(boolean) == lib(boolean_interval_total(n))?,
                || format!("{boolean}"),
            )
        });
        r.check(n, "Euler characteristic is a valuation", || {
            let all: Vec<Permutation> = Permutation::all(n).collect();
            for v in &all {
                for w in &all {
                    let lhs = euler_characteristic(v) + euler_characteristic(w);
                    let rhs = euler_characteristic(&lib(meet(v, w))?)
                        + euler_characteristic(&lib(join(v, w))?);
                    ensure(lhs == rhs, || format!("{v}, {w}"))?;
                }
            }
            Ok(())
        });
    }
    if n <= exhaustive_limit() {
        r.check(n, "Euler characteristic distribution", || {
            let dist = lib(euler_distribution(n))?;
            for (k, count) in dist.iter().enumerate() {
                ensure(*count == stirling_first_unsigned(n, n - k), || {
                    format!("k = {k}")
                })?;
            }
            Ok(())
        });
    }
}

fn mobius(r: &mut Runner, n: usize) {
    r.check(n, "closed form equals oracle on all pairs", || {
        let p = lib(order_poset(Order::Middle, n))?;
        for s in 0..p.len() {
            let mu = p.mobius_from(s);
            for (u, &expected) in mu.iter().enumerate() {
                let got = lib(mobius_middle(p.label(s), p.label(u)))?;
                ensure(got == expected, || {
                    format!(
                        "mu({}, {}) = {got}, oracle {expected}",
                        p.label(s),
                        p.label(u)
                    )
                })?;
            }
        }
        Ok(())
    });
    r.check(n, "graded by inversion count", || {
        let p = lib(order_poset(Order::Middle, n))?;
        match p.gradedness() {
            Gradedness::Graded { ranks } => {
                for (a, &rank) in ranks.iter().enumerate() {
                    ensure(rank == p.label(a).inversion_count(), || {
                        p.label(a).to_string()
                    })?;
                }
                Ok(())
            }
            Gradedness::NotGraded { short, long } => Err(format!("chains {short:?} and {long:?}")),
        }
    });
}

fn involutions(r: &mut Runner, n: usize) {
    r.check(n, "sequence recursion recognizes involutions", || {
        let mut hits = 0u64;
        for x in InversionSequence::all(n) {
            let expected = x.to_permutation().is_involution();
            ensure(involution_seq_check(&x) == expected, || x.to_string())?;
            hits += u64::from(expected);
        }
        ensure(BigUint::from(hits) == involution_count(n), || {
            format!("{hits}")
        })
    });
    r.check(n, "slow-climbing iff block decomposition", || {
        for x in InversionSequence::all(n).filter(involution_seq_check) {
            ensure(
                is_slow_climbing(&x) == slow_climb_decompose(&x).is_ok(),
                || x.to_string(),
            )?;
        }
        Ok(())
    });
    r.check(n, "Mobius of principal ideals equals oracle", || {
        let p = lib(involution_poset(n))?;
        let e = p
            .index_of(&lib(Permutation::identity(n))?)
            .ok_or("identity missing")?;
        let mu = p.mobius_from(e);
        for (a, &expected) in mu.iter().enumerate() {
            let got = lib(mobius_involution_ideal(p.label(a)))?;
            ensure(got == expected, || {
                format!("{}: {got} vs {expected}", p.label(a))
            })?;
        }
        Ok(())
    });
    if n > 7 {
        return;
    }
    r.check(n, "clusters cover and are incomparable", || {
        for x in InversionSequence::all(n) {
            let cs = clusters(&x);
            let covered: BTreeSet<usize> = cs.iter().flat_map(|c| c.start..=c.end).collect();
            ensure(covered.len() == n, || x.to_string())?;
            for a in &cs {
                ensure(cs.iter().all(|b| a == b || !a.contains(b)), || {
                    x.to_string()
                })?;
            }
        }
        Ok(())
    });
    r.check(
        n,
        "maximal slow-climbing elements meet above the identity",
        || {
            let e = lib(Permutation::identity(n))?;
            for w in crate::involutions::involutions(n).filter(|w| *w != e) {
                let m = lib(maximal_slow_climbing_below(&w))?;
                ensure(lib(meet_all(&m))? != e, || w.to_string())?;
            }
            Ok(())
        },
    );
    if n == 4 {
        r.check(n, "I_4 is neither graded nor a lattice", || {
            let p = lib(involution_poset(n))?;
            ensure(!p.gradedness().is_graded(), || "graded".into())?;
            ensure(p.lattice_failure().is_some(), || "lattice".into())
        });
    }
}

fn heyting(r: &mut Runner, n: usize) {
    if n == 1 {
        r.check(9, "worked example", || {
            let v: Permutation = "361592784".parse().expect("word");
            let w: Permutation = "614928537".parse().expect("word");
            ensure(
                lib(relative_pseudocomplement(&v, &w))?.to_string() == "986421537",
                || "arrow".into(),
            )?;
            ensure(pseudocomplement(&v).to_string() == "421356789", || {
                "pseudocomplement".into()
            })
        });
    }
    let all: Vec<Permutation> = Permutation::all(n).collect();
    if n <= 4 {
        r.check(n, "adjunction over all triples", || {
            for v in &all {
                for w in &all {
                    let arrow = lib(relative_pseudocomplement(v, w))?;
                    for z in &all {
                        let lhs = lib(crate::orders::middle_leq(&lib(meet(v, z))?, w))?;
                        let rhs = lib(crate::orders::middle_leq(z, &arrow))?;
                        ensure(lhs == rhs, || format!("v={v} w={w} z={z}"))?;
                    }
                }
            }
            Ok(())
        });
    }
    r.check(n, "pseudocomplement is the arrow to the identity", || {
        let e = lib(Permutation::identity(n))?;
        for v in &all {
            let neg = pseudocomplement(v);
            ensure(neg == lib(relative_pseudocomplement(v, &e))?, || {
                v.to_string()
            })?;
            ensure(
                lib(crate::orders::middle_leq(v, &pseudocomplement(&neg)))?,
                || v.to_string(),
            )?;
        }
        Ok(())
    });
    r.check(n, "regular elements: three criteria agree", || {
        let (p132, p231) = ("132".parse().expect("word"), "231".parse().expect("word"));
        for v in &all {
            let regular = is_regular(v);
            ensure(regular == has_extreme_coordinates(v), || v.to_string())?;
            ensure(regular == (v.avoids(&p132) && v.avoids(&p231)), || {
                v.to_string()
            })?;
        }
        Ok(())
    });
    r.check(n, "regular elements form a boolean lattice", || {
        let p = lib(regular_subposet(n))?;
        ensure(p.len() == 1 << (n - 1), || format!("{} elements", p.len()))?;
        let cube = FinitePoset::<usize>::boolean_lattice(n - 1);
        ensure(lib(are_isomorphic(&p, &cube))?, || "not isomorphic".into())
    });
}

fn parking(r: &mut Runner, n: usize) {
    r.check(n, "count is (n+1)^(n-1)", || {
        let pfs = lib(all_parking_functions(n))?;
        ensure(pfs.len() == (n + 1).pow(n as u32 - 1), || {
            format!("{}", pfs.len())
        })
    });
    if n <= 5 {
        r.check(n, "sorted criterion matches the parking simulation", || {
            let mut prefs = vec![1; n];
            loop {
                ensure(
                    lib(is_parking_function(&prefs))? == lib(parks_all(&prefs))?,
                    || format!("{prefs:?}"),
                )?;
                let Some(i) = prefs.iter().rposition(|&p| p < n) else {
                    return Ok(());
                };
                prefs[i] += 1;
                prefs[i + 1..].fill(1);
            }
        });
    }
    if n <= 4 {
        r.check(n, "lattice with oracle meets and joins", || {
            let p = lib(parking_poset(n))?;
            for i in 0..p.len() {
                for j in 0..p.len() {
                    let (a, b) = (p.label(i), p.label(j));
                    let meet_ok = p.meet(i, j).map(|m| p.label(m)) == Some(&lib(pf_meet(a, b))?);
                    let join_ok = p.join(i, j).map(|m| p.label(m)) == Some(&lib(pf_join(a, b))?);
                    ensure(meet_ok && join_ok, || format!("{a}, {b}"))?;
                }
            }
            Ok(())
        });
    }
    if n >= 3 {
        r.check(n, "pentagon sublattice", || {
            let five = lib(pentagon_witness(n))?;
            if n <= 4 {
                let p = lib(parking_poset(n))?;
                let idx: Vec<usize> = five.iter().filter_map(|f| p.index_of(f)).collect();
                ensure(idx.len() == 5 && p.is_sublattice(&idx), || {
                    "not a sublattice".into()
                })?;
                ensure(!p.is_modular() && !p.is_distributive(), || "modular".into())?;
            }
            Ok(())
        });
    }
}
