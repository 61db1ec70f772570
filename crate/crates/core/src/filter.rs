//! Filters on finite carriers.
//!
//! On a finite carrier the intersection of all members of a filter is a finite
//! intersection, hence itself a member, so every filter is principal:
//! `F = {A : V₀ ⊆ A}` for a nonempty generator `V₀`. A [`Filter`] stores only
//! `V₀`. The principal ultrafilters containing `F` are exactly the points of
//! `V₀`, so the closure `F̄` is `V₀` as a subset of the carrier.
//!
//! Throughout the crate a principal ultrafilter `p` is identified with the
//! point it is generated by, and "`A ∈ p`" reads as `p ∈ A`.

use std::fmt;

use crate::error::{Error, Result};
use crate::semigroup::FiniteSemigroup;
use crate::set::ElementSet;

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Filter {
    generator: ElementSet,
}

impl Filter {
    /// The principal filter of supersets of `generator`.
    pub fn principal(generator: ElementSet) -> Result<Self> {
        if generator.is_empty() {
            return Err(Error::EmptyMemberSet);
        }
        Ok(Self { generator })
    }

    /// `{S}`, the filter whose only member is the carrier.
    pub fn trivial(order: usize) -> Self {
        Self {
            generator: ElementSet::full(order),
        }
    }

    pub fn generator(&self) -> &ElementSet {
        &self.generator
    }

    pub fn carrier_order(&self) -> usize {
        self.generator.carrier_order()
    }

    pub fn is_trivial(&self) -> bool {
        self.generator.is_full()
    }

    pub fn contains(&self, a: &ElementSet) -> bool {
        self.generator.is_subset(a)
    }

    /// Every member, listed explicitly (carriers up to 20 points).
    pub fn members(&self) -> ExplicitFamily {
        let rest = self.generator.complement();
        ExplicitFamily {
            carrier_order: self.carrier_order(),
            members: rest.subsets().map(|extra| self.generator.union(&extra)).collect(),
        }
    }

    /// Parses `filter=<set literal>`; a bare set literal is accepted too.
    pub fn parse_literal(order: usize, text: &str) -> Result<Self> {
        let body = text.trim();
        let body = body.strip_prefix("filter=").unwrap_or(body);
        let generator = ElementSet::parse_literal(order, body)?;
        if generator.is_empty() {
            return Err(Error::Parse {
                line: 0,
                msg: "a filter generator must be nonempty".into(),
            });
        }
        Ok(Self { generator })
    }

    pub fn to_literal(&self) -> String {
        format!("filter={}", self.generator.to_literal())
    }
}

impl fmt::Debug for Filter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Filter(gen {})", self.generator)
    }
}

impl fmt::Display for Filter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_literal())
    }
}

/// A finite family of subsets of one carrier.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExplicitFamily {
    pub carrier_order: usize,
    pub members: Vec<ElementSet>,
}

impl ExplicitFamily {
    pub fn new(carrier_order: usize, members: Vec<ElementSet>) -> Result<Self> {
        for m in &members {
            m.require_order(carrier_order)?;
        }
        Ok(Self {
            carrier_order,
            members,
        })
    }

    pub fn intersection(&self) -> ElementSet {
        self.members
            .iter()
            .fold(ElementSet::full(self.carrier_order), |acc, m| acc.intersection(m))
    }

    pub fn contains(&self, a: &ElementSet) -> bool {
        self.members.contains(a)
    }

    /// Whether the three filter axioms hold for this family read as an exact member list.
    pub fn is_filter(&self) -> bool {
        if self.members.is_empty() || self.members.iter().any(|m| m.is_empty()) {
            return false;
        }
        let closed_meet = self.members.iter().all(|a| {
            self.members
                .iter()
                .all(|b| self.contains(&a.intersection(b)))
        });
        let upward = self.members.iter().all(|a| {
            a.complement()
                .subsets()
                .all(|extra| self.contains(&a.union(&extra)))
        });
        closed_meet && upward
    }
}

/// Filter generated by `fam`.
///
/// With `exact = false` the family is read as a generating family: the result
/// is the filter generated by the intersection of its members. With
/// `exact = true` the family must list every member of that filter.
pub fn canonicalize_filter(fam: &ExplicitFamily, exact: bool) -> Result<Filter> {
    if fam.members.is_empty() {
        return Err(Error::EmptyFamily);
    }
    for m in &fam.members {
        m.require_order(fam.carrier_order)?;
    }
    if fam.members.iter().any(|m| m.is_empty()) {
        return Err(Error::EmptyMemberSet);
    }
    let generator = fam.intersection();
    if generator.is_empty() {
        // some finite intersection is empty, so ∅ would be forced into the filter
        return Err(Error::EmptyMemberSet);
    }
    if exact {
        if !fam.contains(&generator) {
            return Err(Error::NotUpwardClosed { missing: generator });
        }
        for extra in generator.complement().subsets() {
            let sup = generator.union(&extra);
            if !fam.contains(&sup) {
                return Err(Error::NotUpwardClosed { missing: sup });
            }
        }
    }
    Ok(Filter { generator })
}

/// `A ∈ F*` via the mesh definition: the complement of `A` is not a member.
pub fn mesh_member(a: &ElementSet, f: &Filter) -> Result<bool> {
    a.require_order(f.carrier_order())?;
    Ok(!f.contains(&a.complement()))
}

/// `A ∈ F*` via the dual form: `A` meets every member of `F`, i.e. meets `V₀`.
pub fn mesh_member_dual(a: &ElementSet, f: &Filter) -> Result<bool> {
    a.require_order(f.carrier_order())?;
    Ok(a.meets(f.generator()))
}

fn check_filter(s: &FiniteSemigroup, f: &Filter) -> Result<()> {
    f.generator().require_order(s.order())
}

/// `F·G`, generated by `V₀(F)·V₀(G)`.
pub fn filter_product(f: &Filter, g: &Filter, s: &FiniteSemigroup) -> Result<Filter> {
    check_filter(s, f)?;
    check_filter(s, g)?;
    Ok(Filter {
        generator: s.product_unchecked(f.generator(), g.generator()),
    })
}

/// Membership in `F·G` evaluated literally: `{x : x⁻¹A ∈ G} ∈ F`.
pub fn filter_product_contains(f: &Filter, g: &Filter, s: &FiniteSemigroup, a: &ElementSet) -> Result<bool> {
    check_filter(s, f)?;
    check_filter(s, g)?;
    s.check_set(a)?;
    let mut good = s.empty_set();
    for x in 0..s.order() {
        if g.contains(&s.left_quotient_unchecked(x, a)) {
            good.insert(x);
        }
    }
    Ok(f.contains(&good))
}

/// `F ⊆ F·F`; on a finite carrier this holds iff `V₀` is product-closed.
pub fn is_idempotent_filter(f: &Filter, s: &FiniteSemigroup) -> Result<bool> {
    check_filter(s, f)?;
    Ok(s.is_product_closed(f.generator()))
}

/// `F̄` as a set of points, together with whether it is product-closed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Closure {
    pub set: ElementSet,
    pub product_closed: bool,
}

pub fn closure_set(f: &Filter, s: &FiniteSemigroup) -> Result<Closure> {
    check_filter(s, f)?;
    Ok(Closure {
        set: *f.generator(),
        product_closed: s.is_product_closed(f.generator()),
    })
}

/// Least point common to every member of a family with the finite
/// intersection property (the principal ultrafilter containing the family).
pub fn fip_common_point(fam: &ExplicitFamily) -> Result<usize> {
    if fam.members.is_empty() {
        return Ok(0);
    }
    for m in &fam.members {
        m.require_order(fam.carrier_order)?;
    }
    match fam.intersection().first() {
        Some(x) => Ok(x),
        None => Err(Error::NoFip(empty_subfamily(fam))),
    }
}

/// A subfamily with empty intersection from which no member can be dropped.
fn empty_subfamily(fam: &ExplicitFamily) -> Vec<ElementSet> {
    let mut keep = fam.members.clone();
    let mut i = 0;
    while i < keep.len() {
        let without: ElementSet = keep
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .fold(ElementSet::full(fam.carrier_order), |acc, (_, m)| acc.intersection(m));
        if without.is_empty() {
            keep.remove(i);
        } else {
            i += 1;
        }
    }
    keep
}

/// Outcome of [`directed_family_subsemigroup_check`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DirectedIntersection {
    pub intersection: ElementSet,
    pub product_closed: bool,
}

/// For a family with the finite intersection property such that every
/// `A ∈ fam` and `x ∈ A` admit `B ∈ fam` with `x·B ⊆ A`, returns the
/// intersection of the family and whether it is product-closed.
pub fn directed_family_subsemigroup_check(s: &FiniteSemigroup, fam: &ExplicitFamily) -> Result<DirectedIntersection> {
    fam.members
        .iter()
        .try_for_each(|m| m.require_order(s.order()))?;
    fip_common_point(fam)?;
    for a in &fam.members {
        for x in a {
            let ok = fam
                .members
                .iter()
                .any(|b| s.left_translate(x, b).is_subset(a));
            if !ok {
                return Err(Error::HypothesisFails { set: *a, x });
            }
        }
    }
    let intersection = fam.intersection();
    Ok(DirectedIntersection {
        intersection,
        product_closed: s.is_product_closed(&intersection),
    })
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

    fn gen(n: usize, xs: &[usize]) -> Filter {
        Filter::principal(set(n, xs)).unwrap()
    }

    #[test]
    fn canonicalize_examples() {
        let sup = gen(3, &[0, 1]).members();
        assert_eq!(sup.members.len(), 2);
        assert_eq!(canonicalize_filter(&sup, true).unwrap(), gen(3, &[0, 1]));
        let whole = ExplicitFamily::new(3, vec![ElementSet::full(3)]).unwrap();
        assert!(canonicalize_filter(&whole, true).unwrap().is_trivial());
        let with_empty = ExplicitFamily::new(3, vec![ElementSet::empty(3), ElementSet::full(3)]).unwrap();
        assert_eq!(canonicalize_filter(&with_empty, false), Err(Error::EmptyMemberSet));
        let disjoint = ExplicitFamily::new(3, vec![set(3, &[0]), set(3, &[1])]).unwrap();
        assert_eq!(canonicalize_filter(&disjoint, false), Err(Error::EmptyMemberSet));
        let generating = ExplicitFamily::new(3, vec![set(3, &[0, 1]), set(3, &[1, 2])]).unwrap();
        assert_eq!(canonicalize_filter(&generating, false).unwrap(), gen(3, &[1]));
        assert!(matches!(
            canonicalize_filter(&generating, true),
            Err(Error::NotUpwardClosed { .. })
        ));
    }

    #[test]
    fn mesh_examples() {
        let f = gen(3, &[0, 1]);
        for (a, want) in [(set(3, &[0]), true), (set(3, &[2]), false)] {
            assert_eq!(mesh_member(&a, &f).unwrap(), want);
            assert_eq!(mesh_member_dual(&a, &f).unwrap(), want);
        }
        let t = Filter::trivial(3);
        for a in ElementSet::all_subsets(3) {
            assert_eq!(mesh_member(&a, &t).unwrap(), !a.is_empty());
        }
        assert!(mesh_member(&set(4, &[0]), &f).is_err());
    }

    #[test]
    fn product_examples() {
        let z6 = fam("Z6");
        let p = filter_product(&gen(6, &[0, 2, 4]), &gen(6, &[3]), &z6).unwrap();
        assert_eq!(*p.generator(), set(6, &[1, 3, 5]));
        let g = gen(6, &[1, 5]);
        assert_eq!(filter_product(&gen(6, &[0]), &g, &z6).unwrap(), g);
        let lz2 = fam("LZ2");
        let p = filter_product(&gen(2, &[0]), &gen(2, &[1]), &lz2).unwrap();
        assert_eq!(*p.generator(), set(2, &[0]));
    }

    #[test]
    fn idempotent_filter_examples() {
        let z6 = fam("Z6");
        assert!(is_idempotent_filter(&gen(6, &[0, 2, 4]), &z6).unwrap());
        assert!(!is_idempotent_filter(&gen(6, &[2]), &z6).unwrap());
        assert!(is_idempotent_filter(&Filter::trivial(6), &z6).unwrap());
        let c = closure_set(&gen(6, &[2]), &z6).unwrap();
        assert_eq!(c.set, set(6, &[2]));
        assert!(!c.product_closed);
        assert!(closure_set(&gen(6, &[0, 2, 4]), &z6).unwrap().product_closed);
        assert_eq!(closure_set(&Filter::trivial(6), &z6).unwrap().set, z6.carrier());
    }

    #[test]
    fn fip_examples() {
        let f = ExplicitFamily::new(3, vec![set(3, &[0, 1]), set(3, &[1, 2])]).unwrap();
        assert_eq!(fip_common_point(&f).unwrap(), 1);
        let f = ExplicitFamily::new(3, vec![ElementSet::full(3)]).unwrap();
        assert_eq!(fip_common_point(&f).unwrap(), 0);
        let f = ExplicitFamily::new(3, vec![set(3, &[0, 1]), set(3, &[0]), set(3, &[1])]).unwrap();
        assert_eq!(fip_common_point(&f), Err(Error::NoFip(vec![set(3, &[0]), set(3, &[1])])));
    }

    #[test]
    fn directed_family_examples() {
        let z6 = fam("Z6");
        let f = ExplicitFamily::new(6, vec![set(6, &[0, 2, 4]), set(6, &[0, 3]), set(6, &[0])]).unwrap();
        let r = directed_family_subsemigroup_check(&z6, &f).unwrap();
        assert_eq!(r.intersection, set(6, &[0]));
        assert!(r.product_closed);
        let f = ExplicitFamily::new(6, vec![z6.carrier()]).unwrap();
        let r = directed_family_subsemigroup_check(&z6, &f).unwrap();
        assert_eq!(r.intersection, z6.carrier());
        assert!(r.product_closed);
        let z4 = fam("Z4");
        let f = ExplicitFamily::new(4, vec![set(4, &[1])]).unwrap();
        assert_eq!(
            directed_family_subsemigroup_check(&z4, &f),
            Err(Error::HypothesisFails { set: set(4, &[1]), x: 1 })
        );
    }

    #[test]
    fn literals() {
        let f = Filter::parse_literal(6, "filter=0,2,4").unwrap();
        assert_eq!(f, gen(6, &[0, 2, 4]));
        assert_eq!(f.to_literal(), "filter=0,2,4");
        assert!(Filter::parse_literal(6, "filter=").is_err());
    }
}
