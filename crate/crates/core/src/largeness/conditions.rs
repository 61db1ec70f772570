//! Return-set conditions and very strong centrality.
//!
//! In the finite discrete model every subset of a minimal left ideal is open
//! and closed, so `V̄ = V`. All element quantifiers range over the closure
//! subsemigroup `F̄`, and a set `A` is seen through its trace `A ∩ F̄`; for the
//! trivial filter this is the plain statement over `S`.

use std::fmt;

use super::FilterSemigroup;
use crate::error::{Error, Result};
use crate::filter::Filter;
use crate::semigroup::FiniteSemigroup;
use crate::set::ElementSet;

/// Subsets-of-`L` enumeration is refused above this ideal size.
pub const IDEAL_SEARCH_CAP: usize = 12;

/// Which of the equivalent return-set conditions to test.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Condition {
    /// Every minimal left ideal `L` has `V ⊆ L`, `p ∈ V` with `{s : s·p ∈ V} = A`.
    EveryIdealPoint,
    /// Some minimal left ideal has such `V` and `p`.
    SomeIdealPoint,
    /// As [`Condition::EveryIdealPoint`] with `p` idempotent and `p ∈ A`.
    EveryIdealIdempotent,
    /// As [`Condition::SomeIdealPoint`] with `p` idempotent and `p ∈ A`.
    SomeIdealIdempotent,
    /// A minimal idempotent `q ∈ A` such that `a·q = r·q` with `a ∈ A` forces `r ∈ A`.
    MinimalIdempotent,
}

impl Condition {
    pub const ALL: [Condition; 5] = [
        Condition::EveryIdealPoint,
        Condition::SomeIdealPoint,
        Condition::EveryIdealIdempotent,
        Condition::SomeIdealIdempotent,
        Condition::MinimalIdempotent,
    ];

    /// Number used on the command line (2 through 6).
    pub fn number(self) -> u8 {
        match self {
            Condition::EveryIdealPoint => 2,
            Condition::SomeIdealPoint => 3,
            Condition::EveryIdealIdempotent => 4,
            Condition::SomeIdealIdempotent => 5,
            Condition::MinimalIdempotent => 6,
        }
    }

    pub fn from_number(n: u8) -> Option<Self> {
        Self::ALL.into_iter().find(|c| c.number() == n)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConditionWitness {
    Ideal { ideal: ElementSet, open: ElementSet, point: usize },
    Idempotent(usize),
}

impl fmt::Display for ConditionWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConditionWitness::Ideal { ideal, open, point } => write!(f, "L={ideal} V={open} p={point}"),
            ConditionWitness::Idempotent(q) => write!(f, "q={q}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ConditionOutcome {
    pub holds: bool,
    pub witness: Option<ConditionWitness>,
}

fn return_set(fs: &FilterSemigroup, p: usize, v: &ElementSet) -> ElementSet {
    let s = fs.semigroup;
    let mut out = s.empty_set();
    for x in fs.closure() {
        if v.contains(s.mul(x, p)) {
            out.insert(x);
        }
    }
    out
}

/// Search one minimal left ideal for `(V, p)` with `{s ∈ F̄ : s·p ∈ V} = trace`.
fn ideal_witness(fs: &FilterSemigroup, l: &ElementSet, trace: &ElementSet, idempotent: bool) -> Option<ConditionWitness> {
    let s = fs.semigroup;
    for v in l.subsets() {
        for p in &v {
            if idempotent && !(s.is_idempotent(p) && trace.contains(p)) {
                continue;
            }
            if return_set(fs, p, &v) == *trace {
                return Some(ConditionWitness::Ideal {
                    ideal: *l,
                    open: v,
                    point: p,
                });
            }
        }
    }
    None
}

/// Condition (6) for a given minimal idempotent `q`.
fn q_condition(fs: &FilterSemigroup, trace: &ElementSet, q: usize) -> bool {
    let s = fs.semigroup;
    trace.contains(q)
        && trace.iter().all(|a| {
            let aq = s.mul(a, q);
            fs.closure().iter().all(|r| s.mul(r, q) != aq || trace.contains(r))
        })
}

pub(crate) fn condition_with(fs: &FilterSemigroup, a: &ElementSet, condition: Condition) -> Result<ConditionOutcome> {
    let trace = a.intersection(fs.closure());
    let ideals = fs.minimal_left_ideals();
    let miss = ConditionOutcome {
        holds: false,
        witness: None,
    };
    match condition {
        Condition::MinimalIdempotent => Ok(fs
            .catalog
            .minimal_idempotents
            .iter()
            .find(|&q| q_condition(fs, &trace, q))
            .map_or(miss, |q| ConditionOutcome {
                holds: true,
                witness: Some(ConditionWitness::Idempotent(q)),
            })),
        _ => {
            if let Some(big) = ideals.iter().find(|l| l.len() > IDEAL_SEARCH_CAP) {
                return Err(Error::SearchBoundExceeded {
                    what: "minimal left ideal",
                    size: big.len(),
                    cap: IDEAL_SEARCH_CAP,
                });
            }
            let idempotent = matches!(
                condition,
                Condition::EveryIdealIdempotent | Condition::SomeIdealIdempotent
            );
            let every = matches!(
                condition,
                Condition::EveryIdealPoint | Condition::EveryIdealIdempotent
            );
            let mut first = None;
            for l in ideals {
                match ideal_witness(fs, l, &trace, idempotent) {
                    Some(w) => {
                        first.get_or_insert(w);
                        if !every {
                            break;
                        }
                    }
                    None if every => return Ok(miss),
                    None => {}
                }
            }
            Ok(first.map_or(miss, |w| ConditionOutcome {
                holds: true,
                witness: Some(w),
            }))
        }
    }
}

/// Decide one return-set condition for `A` relative to an idempotent filter.
pub fn check_condition(s: &FiniteSemigroup, a: &ElementSet, f: &Filter, condition: Condition) -> Result<ConditionOutcome> {
    a.require_order(s.order())?;
    let fs = FilterSemigroup::new(s, f)?;
    condition_with(&fs, a, condition)
}

/// `{q}` closed under: `a ∈ A`, `r ∈ F̄`, `r·q = a·q` put `r` into `A`.
fn forced_closure(fs: &FilterSemigroup, q: usize) -> ElementSet {
    let s = fs.semigroup;
    let mut set = ElementSet::singleton(s.order(), q);
    loop {
        let mut next = set;
        for a in &set {
            let aq = s.mul(a, q);
            for r in fs.closure() {
                if s.mul(r, q) == aq {
                    next.insert(r);
                }
            }
        }
        if next == set {
            return set;
        }
        set = next;
    }
}

pub(crate) fn vsfc_with(fs: &FilterSemigroup, c: &ElementSet) -> Option<ElementSet> {
    fs.catalog
        .minimal_idempotents
        .iter()
        .map(|q| forced_closure(fs, q))
        .find(|a| a.is_subset(c))
}

/// Very strong centrality of `C`, returning the witness `A ⊆ C` when it holds.
pub fn is_very_strongly_f_central(s: &FiniteSemigroup, c: &ElementSet, f: &Filter) -> Result<Option<ElementSet>> {
    c.require_order(s.order())?;
    let fs = FilterSemigroup::new(s, f)?;
    Ok(vsfc_with(&fs, c))
}

/// Oracle: search every `A ⊆ C` for the minimal-idempotent condition (|S| ≤ 12).
pub fn vsfc_brute_force(s: &FiniteSemigroup, c: &ElementSet, f: &Filter) -> Result<Option<ElementSet>> {
    c.require_order(s.order())?;
    if s.order() > IDEAL_SEARCH_CAP {
        return Err(Error::SearchBoundExceeded {
            what: "semigroup order",
            size: s.order(),
            cap: IDEAL_SEARCH_CAP,
        });
    }
    let fs = FilterSemigroup::new(s, f)?;
    for a in c.subsets() {
        if condition_with(&fs, &a, Condition::MinimalIdempotent)?.holds {
            return Ok(Some(a));
        }
    }
    Ok(None)
}

/// A minimal right ideal of `F̄` all of whose idempotents lie in `C`.
pub fn vsfc_right_ideal_witness(s: &FiniteSemigroup, c: &ElementSet, f: &Filter) -> Result<ElementSet> {
    c.require_order(s.order())?;
    let fs = FilterSemigroup::new(s, f)?;
    if vsfc_with(&fs, c).is_none() {
        return Err(Error::NotVsfc(*c));
    }
    fs.catalog
        .minimal_right_ideals
        .iter()
        .find(|r| fs.catalog.idempotents.intersection(r).is_subset(c))
        .copied()
        .ok_or_else(|| Error::TheoremViolation(format!("{c} is very strongly central but no minimal right ideal has all its idempotents inside it")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semigroup::make_family;

    fn fam(spec: &str) -> FiniteSemigroup {
        make_family(spec.parse().unwrap()).unwrap()
    }

    fn set(n: usize, xs: &[usize]) -> ElementSet {
        ElementSet::from_indices(n, xs.iter().copied()).unwrap()
    }

    #[test]
    fn minimal_idempotent_condition() {
        let z6 = fam("Z6");
        let t = Filter::trivial(6);
        let out = check_condition(&z6, &set(6, &[0]), &t, Condition::MinimalIdempotent).unwrap();
        assert!(out.holds);
        assert_eq!(out.witness, Some(ConditionWitness::Idempotent(0)));

        let rz2 = fam("RZ2");
        let out = check_condition(&rz2, &set(2, &[0]), &Filter::trivial(2), Condition::MinimalIdempotent).unwrap();
        assert!(!out.holds);
        for c in Condition::ALL {
            assert!(!check_condition(&rz2, &rz2.empty_set(), &Filter::trivial(2), c).unwrap().holds);
        }
    }

    #[test]
    fn conditions_agree_on_small_examples() {
        for spec in ["Z6", "RZ2", "LZ2", "RB2x2", "M2,2", "N3"] {
            let s = fam(spec);
            let t = Filter::trivial(s.order());
            for a in ElementSet::all_subsets(s.order()) {
                let verdicts: Vec<bool> = Condition::ALL
                    .iter()
                    .map(|&c| check_condition(&s, &a, &t, c).unwrap().holds)
                    .collect();
                assert!(verdicts.iter().all(|&v| v == verdicts[0]), "{spec} {a}: {verdicts:?}");
            }
        }
    }

    #[test]
    fn very_strong_examples() {
        let z6 = fam("Z6");
        let t = Filter::trivial(6);
        assert_eq!(is_very_strongly_f_central(&z6, &set(6, &[0, 3]), &t).unwrap(), Some(set(6, &[0])));
        let rz2 = fam("RZ2");
        let t2 = Filter::trivial(2);
        assert_eq!(is_very_strongly_f_central(&rz2, &set(2, &[0]), &t2).unwrap(), None);
        assert_eq!(
            is_very_strongly_f_central(&rz2, &rz2.carrier(), &t2).unwrap(),
            Some(rz2.carrier())
        );
        assert!(is_very_strongly_f_central(&z6, &z6.carrier(), &t).unwrap().is_some());
    }

    #[test]
    fn right_ideal_witnesses() {
        let rz2 = fam("RZ2");
        assert_eq!(
            vsfc_right_ideal_witness(&rz2, &rz2.carrier(), &Filter::trivial(2)).unwrap(),
            rz2.carrier()
        );
        let z6 = fam("Z6");
        let f = Filter::principal(set(6, &[0, 2, 4])).unwrap();
        assert_eq!(vsfc_right_ideal_witness(&z6, &set(6, &[0]), &f).unwrap(), set(6, &[0, 2, 4]));
        let one = fam("trivial");
        assert_eq!(
            vsfc_right_ideal_witness(&one, &one.carrier(), &Filter::trivial(1)).unwrap(),
            one.carrier()
        );
        assert_eq!(
            vsfc_right_ideal_witness(&rz2, &set(2, &[0]), &Filter::trivial(2)),
            Err(Error::NotVsfc(set(2, &[0])))
        );
    }

    #[test]
    fn ideal_search_is_bounded() {
        let z13 = fam("Z13");
        assert!(matches!(
            check_condition(&z13, &set(13, &[0]), &Filter::trivial(13), Condition::SomeIdealPoint),
            Err(Error::SearchBoundExceeded { size: 13, .. })
        ));
        assert!(check_condition(&z13, &set(13, &[0]), &Filter::trivial(13), Condition::MinimalIdempotent)
            .unwrap()
            .holds);
    }
}
