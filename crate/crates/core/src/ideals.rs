//! Ideal structure of finite semigroups and of their subsemigroups.
//!
//! Every function here works relative to a *domain* `T ⊆ S` that is closed
//! under the operation; passing the whole carrier gives the usual notions for
//! `S`. Principal ideals use the `S¹` convention, `T¹a = {a} ∪ T·a`, without
//! adjoining an identity to the carrier.

use crate::error::{Error, Result};
use crate::report::Record;
use crate::semigroup::FiniteSemigroup;
use crate::set::ElementSet;

/// Minimal one-sided ideals, the smallest ideal, and the idempotents of a domain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealCatalog {
    pub domain: ElementSet,
    pub minimal_left_ideals: Vec<ElementSet>,
    pub minimal_right_ideals: Vec<ElementSet>,
    pub smallest_ideal: ElementSet,
    pub idempotents: ElementSet,
    pub minimal_idempotents: ElementSet,
}

impl IdealCatalog {
    /// One `catalog` record with set-valued fields; ideal lists are `|`-separated.
    pub fn records(&self, label: &str) -> Vec<Record> {
        let list = |v: &[ElementSet]| v.iter().map(|x| x.to_literal()).collect::<Vec<_>>().join("|");
        let mut r = Record::new("catalog", label);
        r.push("domain", self.domain.to_literal())
            .push("idempotents", self.idempotents.to_literal())
            .push("minimal_idempotents", self.minimal_idempotents.to_literal())
            .push("smallest_ideal", self.smallest_ideal.to_literal())
            .push("minimal_left_ideals", list(&self.minimal_left_ideals))
            .push("minimal_right_ideals", list(&self.minimal_right_ideals));
        vec![r]
    }

    pub fn new(s: &FiniteSemigroup) -> Self {
        Self::within_unchecked(s, &s.carrier())
    }

    /// Catalog of the subsemigroup `t`, computed from the restricted table.
    pub fn within(s: &FiniteSemigroup, t: &ElementSet) -> Result<Self> {
        check_subsemigroup(s, t)?;
        Ok(Self::within_unchecked(s, t))
    }

    pub(crate) fn within_unchecked(s: &FiniteSemigroup, t: &ElementSet) -> Self {
        let minimal_left_ideals = minimal_ideals(s, t, Side::Left);
        let minimal_right_ideals = minimal_ideals(s, t, Side::Right);
        let smallest_ideal = minimal_left_ideals
            .iter()
            .fold(s.empty_set(), |acc, l| acc.union(l));
        let idempotents = idempotents_in(s, t);
        Self {
            domain: *t,
            minimal_idempotents: idempotents.intersection(&smallest_ideal),
            minimal_left_ideals,
            minimal_right_ideals,
            smallest_ideal,
            idempotents,
        }
    }

    /// The minimal left ideal containing `x`, for `x` in the smallest ideal.
    pub fn left_ideal_of(&self, x: usize) -> Option<&ElementSet> {
        self.minimal_left_ideals.iter().find(|l| l.contains(x))
    }

    pub fn right_ideal_of(&self, x: usize) -> Option<&ElementSet> {
        self.minimal_right_ideals.iter().find(|r| r.contains(x))
    }
}

#[derive(Clone, Copy)]
enum Side {
    Left,
    Right,
}

pub(crate) fn check_subsemigroup(s: &FiniteSemigroup, t: &ElementSet) -> Result<()> {
    s.check_set(t)?;
    if t.is_empty() || !s.is_product_closed(t) {
        return Err(Error::NotASubsemigroup(*t));
    }
    Ok(())
}

fn principal(s: &FiniteSemigroup, t: &ElementSet, a: usize, side: Side) -> ElementSet {
    let mut p = match side {
        Side::Left => s.right_translate(t, a),
        Side::Right => s.left_translate(a, t),
    };
    p.insert(a);
    p
}

fn minimal_ideals(s: &FiniteSemigroup, t: &ElementSet, side: Side) -> Vec<ElementSet> {
    let principals: Vec<ElementSet> = t.iter().map(|a| principal(s, t, a, side)).collect();
    let mut minimal: Vec<ElementSet> = principals
        .iter()
        .filter(|p| !principals.iter().any(|q| q.is_subset(p) && q != *p))
        .copied()
        .collect();
    minimal.sort();
    minimal.dedup();
    minimal
}

/// `E(S) = {x : x·x = x}`.
pub fn idempotents(s: &FiniteSemigroup) -> ElementSet {
    idempotents_in(s, &s.carrier())
}

pub(crate) fn idempotents_in(s: &FiniteSemigroup, t: &ElementSet) -> ElementSet {
    let mut out = s.empty_set();
    for x in t {
        if s.is_idempotent(x) {
            out.insert(x);
        }
    }
    out
}

/// Inclusion-minimal principal left ideals `S¹a`, sorted by least element.
pub fn minimal_left_ideals(s: &FiniteSemigroup) -> Vec<ElementSet> {
    minimal_ideals(s, &s.carrier(), Side::Left)
}

/// Inclusion-minimal principal right ideals `aS¹`, sorted by least element.
pub fn minimal_right_ideals(s: &FiniteSemigroup) -> Vec<ElementSet> {
    minimal_ideals(s, &s.carrier(), Side::Right)
}

/// `K(S)`, the union of the minimal left ideals.
pub fn smallest_ideal(s: &FiniteSemigroup) -> ElementSet {
    minimal_left_ideals(s)
        .iter()
        .fold(s.empty_set(), |acc, l| acc.union(l))
}

/// `p ≤ q` iff `p·q = q·p = p`.
pub fn idempotent_leq(s: &FiniteSemigroup, p: usize, q: usize) -> Result<bool> {
    for x in [p, q] {
        if x >= s.order() {
            return Err(Error::IndexOutOfRange {
                index: x,
                order: s.order(),
            });
        }
        if !s.is_idempotent(x) {
            return Err(Error::NotIdempotent(x));
        }
    }
    Ok(s.mul(p, q) == p && s.mul(q, p) == p)
}

/// Idempotents lying in `K(S)`.
pub fn minimal_idempotents(s: &FiniteSemigroup) -> ElementSet {
    idempotents(s).intersection(&smallest_ideal(s))
}

/// Idempotents that are minimal under [`idempotent_leq`], computed from the
/// order alone (no reference to `K(S)`).
pub fn order_minimal_idempotents(s: &FiniteSemigroup) -> ElementSet {
    let e = idempotents(s);
    let mut out = s.empty_set();
    for p in &e {
        let below = e
            .iter()
            .any(|f| f != p && s.mul(f, p) == f && s.mul(p, f) == f);
        if !below {
            out.insert(p);
        }
    }
    out
}

pub fn is_left_ideal_in(s: &FiniteSemigroup, t: &ElementSet, i: &ElementSet) -> bool {
    !i.is_empty() && i.is_subset(t) && s.product_unchecked(t, i).is_subset(i)
}

pub fn is_right_ideal_in(s: &FiniteSemigroup, t: &ElementSet, i: &ElementSet) -> bool {
    !i.is_empty() && i.is_subset(t) && s.product_unchecked(i, t).is_subset(i)
}

/// Whether `L ∩ R` is a group, for a minimal left ideal `L` and a minimal right ideal `R`.
pub fn group_cell_check(s: &FiniteSemigroup, l: &ElementSet, r: &ElementSet) -> Result<bool> {
    s.check_set(l)?;
    s.check_set(r)?;
    if !minimal_left_ideals(s).contains(l) {
        return Err(Error::NotMinimalIdeal(*l, "left"));
    }
    if !minimal_right_ideals(s).contains(r) {
        return Err(Error::NotMinimalIdeal(*r, "right"));
    }
    Ok(is_group(s, &l.intersection(r)))
}

/// Whether `g` is nonempty, closed, has an identity, and has inverses inside itself.
pub fn is_group(s: &FiniteSemigroup, g: &ElementSet) -> bool {
    if g.is_empty() || !s.is_product_closed(g) {
        return false;
    }
    let Some(e) = g
        .iter()
        .find(|&e| g.iter().all(|x| s.mul(e, x) == x && s.mul(x, e) == x))
    else {
        return false;
    };
    g.iter()
        .all(|x| g.iter().any(|y| s.mul(x, y) == e && s.mul(y, x) == e))
}

/// `K(T)` of the subsemigroup `T`, computed from `T`'s own table.
pub fn relative_smallest_ideal(s: &FiniteSemigroup, t: &ElementSet) -> Result<ElementSet> {
    Ok(IdealCatalog::within(s, t)?.smallest_ideal)
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
    fn idempotent_examples() {
        assert_eq!(idempotents(&fam("RZ2")), set(2, &[0, 1]));
        assert_eq!(idempotents(&fam("Z4")), set(4, &[0]));
        assert_eq!(idempotents(&fam("M2,2")), set(3, &[1]));
    }

    #[test]
    fn minimal_ideal_examples() {
        assert_eq!(minimal_left_ideals(&fam("RZ2")), vec![set(2, &[0]), set(2, &[1])]);
        assert_eq!(minimal_left_ideals(&fam("LZ2")), vec![set(2, &[0, 1])]);
        assert_eq!(minimal_left_ideals(&fam("Z5")), vec![ElementSet::full(5)]);
        assert_eq!(minimal_right_ideals(&fam("RZ2")), vec![set(2, &[0, 1])]);
        assert_eq!(minimal_right_ideals(&fam("LZ2")), vec![set(2, &[0]), set(2, &[1])]);
        assert_eq!(minimal_right_ideals(&fam("Z4")), vec![ElementSet::full(4)]);
    }

    #[test]
    fn smallest_ideal_examples() {
        assert_eq!(smallest_ideal(&fam("RB2x2")), ElementSet::full(4));
        assert_eq!(smallest_ideal(&fam("M2,2")), set(3, &[1, 2]));
        assert_eq!(smallest_ideal(&fam("Z6")), ElementSet::full(6));
        assert_eq!(smallest_ideal(&fam("N3")), set(3, &[0]));
    }

    #[test]
    fn order_examples() {
        let rz2 = fam("RZ2");
        assert!(idempotent_leq(&rz2, 0, 0).unwrap());
        assert!(!idempotent_leq(&rz2, 0, 1).unwrap());
        let m = fam("M2,2");
        assert!(idempotent_leq(&m, 1, 1).unwrap());
        assert_eq!(idempotent_leq(&m, 0, 1), Err(Error::NotIdempotent(0)));
        assert_eq!(minimal_idempotents(&rz2), set(2, &[0, 1]));
        assert_eq!(minimal_idempotents(&fam("Z6")), set(6, &[0]));
        assert_eq!(minimal_idempotents(&m), set(3, &[1]));
    }

    #[test]
    fn group_cells() {
        let rb = fam("RB2x2");
        let ls = minimal_left_ideals(&rb);
        let rs = minimal_right_ideals(&rb);
        for l in &ls {
            for r in &rs {
                assert_eq!(l.intersection(r).len(), 1);
                assert!(group_cell_check(&rb, l, r).unwrap());
            }
        }
        let z4 = fam("Z4");
        assert!(group_cell_check(&z4, &z4.carrier(), &z4.carrier()).unwrap());
        let rz2 = fam("RZ2");
        assert!(group_cell_check(&rz2, &set(2, &[0]), &set(2, &[0, 1])).unwrap());
        assert!(matches!(
            group_cell_check(&rz2, &set(2, &[0, 1]), &set(2, &[0, 1])),
            Err(Error::NotMinimalIdeal(_, "left"))
        ));
    }

    #[test]
    fn relative_examples() {
        let z6 = fam("Z6");
        let t = set(6, &[0, 2, 4]);
        assert_eq!(relative_smallest_ideal(&z6, &t).unwrap(), t);
        let m = fam("M2,2");
        let t = set(3, &[1, 2]);
        assert_eq!(relative_smallest_ideal(&m, &t).unwrap(), t);
        assert_eq!(relative_smallest_ideal(&m, &m.carrier()).unwrap(), smallest_ideal(&m));
        assert!(matches!(
            relative_smallest_ideal(&z6, &set(6, &[1])),
            Err(Error::NotASubsemigroup(_))
        ));
    }

    #[test]
    fn catalog_of_transformation_monoid() {
        // K(T3) is the set of the three constant maps; each is its own minimal
        // right ideal and together they form the single minimal left ideal.
        let t3 = fam("T3");
        let cat = IdealCatalog::new(&t3);
        let constants = set(27, &[0, 13, 26]);
        assert_eq!(cat.smallest_ideal, constants);
        assert_eq!(cat.minimal_left_ideals, vec![constants]);
        assert_eq!(cat.minimal_right_ideals.len(), 3);
        assert_eq!(cat.minimal_idempotents, constants);
    }
}
