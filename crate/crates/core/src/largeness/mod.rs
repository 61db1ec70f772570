//! Largeness predicates relative to a filter.
//!
//! Each predicate has a definitional route (quantifiers over finite subsets,
//! reduced to the filter generator `V₀`) and, where one exists, an algebraic
//! route through the minimal left ideals of the closure subsemigroup `F̄ = V₀`.
//! The two are computed independently and reported side by side.
//!
//! Generator reduction: "∃V ∈ F ∀H ⊆ V: Φ(H)" with Φ antitone in `H` holds iff
//! it holds at `V = V₀`, and "∀V ∈ F ∃H ⊆ V: Ψ(H)" with Ψ monotone in `H`
//! holds iff it holds at `V = V₀`.

mod classify;
mod conditions;
mod tree;

pub use classify::{classify, ClassificationReport, PredicateVerdict, Route};
pub(crate) use conditions::{condition_with, vsfc_with};
pub use conditions::{
    is_very_strongly_f_central, check_condition, vsfc_brute_force, vsfc_right_ideal_witness, Condition, ConditionOutcome,
    ConditionWitness,
};
pub use tree::{
    build_directed_family, build_tree, fs_tree_check, star_set, strongly_f_central_combinatorial,
    thickly_f_central_combinatorial, verify_directed_family, DirectedFamily, TreeNodeSet,
    DIRECTED_FAMILY_CAP, TREE_NODE_CAP,
};

use crate::error::{Error, Result};
use crate::filter::{ExplicitFamily, Filter};
use crate::ideals::IdealCatalog;
use crate::semigroup::FiniteSemigroup;
use crate::set::ElementSet;

/// Above this many generator points the finite-subset quantifiers are
/// evaluated only at `H = V₀`, which the reduction makes exact.
pub const SUBSET_ENUM_CAP: usize = 12;

/// Definitional and (optional) algebraic verdicts for one predicate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Verdict {
    pub definitional: bool,
    pub algebraic: Option<bool>,
}

impl Verdict {
    pub fn value(&self) -> bool {
        self.definitional
    }

    pub fn agree(&self) -> bool {
        self.algebraic.is_none_or(|a| a == self.definitional)
    }
}

/// Verdicts for F-thickness from the three available routes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FThickVerdict {
    /// `∩_{t∈H} t⁻¹A ∈ F*` for every finite `H ⊆ V₀`.
    pub definitional: bool,
    /// For every finite `H ⊆ V₀` some `x ∈ V₀` has `H·x ⊆ A`.
    pub translates: bool,
    /// Some minimal left ideal of `F̄` lies inside `A`; `None` for non-idempotent filters.
    pub algebraic: Option<bool>,
}

impl FThickVerdict {
    pub fn value(&self) -> bool {
        self.definitional
    }

    pub fn agree(&self) -> bool {
        self.definitional == self.translates && self.algebraic.is_none_or(|a| a == self.definitional)
    }
}

/// Nonempty finite subsets `H ⊆ v` over which a definitional quantifier ranges.
fn finite_subsets(v: &ElementSet) -> Box<dyn Iterator<Item = ElementSet>> {
    if v.len() <= SUBSET_ENUM_CAP {
        Box::new(v.subsets().filter(|h| !h.is_empty()))
    } else {
        Box::new(std::iter::once(*v))
    }
}

fn check(s: &FiniteSemigroup, a: &ElementSet, f: &Filter) -> Result<()> {
    a.require_order(s.order())?;
    f.generator().require_order(s.order())
}

/// The closure subsemigroup `F̄` of an idempotent filter, with its ideal catalog.
#[derive(Debug, Clone)]
pub struct FilterSemigroup<'a> {
    pub semigroup: &'a FiniteSemigroup,
    pub filter: Filter,
    pub catalog: IdealCatalog,
}

impl<'a> FilterSemigroup<'a> {
    pub fn new(s: &'a FiniteSemigroup, f: &Filter) -> Result<Self> {
        f.generator().require_order(s.order())?;
        if !s.is_product_closed(f.generator()) {
            return Err(Error::FilterNotIdempotent(*f.generator()));
        }
        Ok(Self {
            semigroup: s,
            filter: *f,
            catalog: IdealCatalog::within_unchecked(s, f.generator()),
        })
    }

    pub fn trivial(s: &'a FiniteSemigroup) -> Self {
        Self {
            semigroup: s,
            filter: Filter::trivial(s.order()),
            catalog: IdealCatalog::new(s),
        }
    }

    pub fn closure(&self) -> &ElementSet {
        self.filter.generator()
    }

    pub fn minimal_left_ideals(&self) -> &[ElementSet] {
        &self.catalog.minimal_left_ideals
    }

    /// Idempotents of the minimal left ideal `l`.
    pub fn idempotents_of(&self, l: &ElementSet) -> ElementSet {
        self.catalog.idempotents.intersection(l)
    }

    pub fn is_f_central(&self, a: &ElementSet) -> bool {
        self.catalog.minimal_idempotents.meets(a)
    }

    pub fn is_strongly_f_central(&self, a: &ElementSet) -> bool {
        self.minimal_left_ideals()
            .iter()
            .all(|l| self.idempotents_of(l).meets(a))
    }

    pub fn is_thickly_f_central(&self, a: &ElementSet) -> bool {
        self.minimal_left_ideals()
            .iter()
            .any(|l| self.idempotents_of(l).is_subset(a))
    }

    /// Some minimal left ideal of `F̄` inside `a`.
    pub fn thick_algebraic(&self, a: &ElementSet) -> bool {
        self.minimal_left_ideals().iter().any(|l| l.is_subset(a))
    }

    /// Every minimal left ideal of `F̄` meets `a`.
    pub fn syndetic_algebraic(&self, a: &ElementSet) -> bool {
        self.minimal_left_ideals().iter().all(|l| l.meets(a))
    }

    /// Least minimal idempotent in `L ∩ a` for the least minimal left ideal `L ⊆ within`.
    pub fn idempotent_below(&self, within: &ElementSet, a: &ElementSet) -> Option<(ElementSet, usize)> {
        self.minimal_left_ideals()
            .iter()
            .filter(|l| l.is_subset(within))
            .find_map(|l| self.idempotents_of(l).intersection(a).first().map(|p| (*l, p)))
    }
}

/// Definitional thickness: some `x` has `S·x ⊆ A` (the hardest finite `F` is `S`).
fn thick_definitional(s: &FiniteSemigroup, a: &ElementSet) -> bool {
    let all = s.carrier();
    (0..s.order()).any(|x| s.right_translate(&all, x).is_subset(a))
}

pub fn is_thick(s: &FiniteSemigroup, a: &ElementSet) -> Result<Verdict> {
    s.check_set(a)?;
    Ok(Verdict {
        definitional: thick_definitional(s, a),
        algebraic: Some(FilterSemigroup::trivial(s).thick_algebraic(a)),
    })
}

pub fn is_syndetic(s: &FiniteSemigroup, a: &ElementSet) -> Result<Verdict> {
    s.check_set(a)?;
    // G = S is the best finite choice: ⋃_{t∈S} t⁻¹A = S
    let cover = (0..s.order()).fold(s.empty_set(), |acc, t| acc.union(&s.left_quotient_unchecked(t, a)));
    Ok(Verdict {
        definitional: cover.is_full(),
        algebraic: Some(FilterSemigroup::trivial(s).syndetic_algebraic(a)),
    })
}

/// Route (a): `∩_{t∈H} t⁻¹A` meets `V₀` for every finite `H ⊆ V₀`.
pub(crate) fn f_thick_mesh(s: &FiniteSemigroup, a: &ElementSet, v0: &ElementSet) -> bool {
    finite_subsets(v0).all(|h| {
        let meet = h
            .iter()
            .fold(s.carrier(), |acc, t| acc.intersection(&s.left_quotient_unchecked(t, a)));
        meet.meets(v0)
    })
}

/// Route (b): for every finite `H ⊆ V₀` and every `W ⊇ V₀`, some `x ∈ W` has `H·x ⊆ A`.
/// The hardest `W` is `V₀` itself.
pub(crate) fn f_thick_translates(s: &FiniteSemigroup, a: &ElementSet, v0: &ElementSet) -> bool {
    finite_subsets(v0).all(|h| v0.iter().any(|x| s.right_translate(&h, x).is_subset(a)))
}

pub(crate) fn f_syndetic_definitional(s: &FiniteSemigroup, a: &ElementSet, v0: &ElementSet) -> bool {
    finite_subsets(v0).any(|h| {
        let cover = h
            .iter()
            .fold(s.empty_set(), |acc, t| acc.union(&s.left_quotient_unchecked(t, a)));
        v0.is_subset(&cover)
    })
}

pub fn is_f_thick(s: &FiniteSemigroup, a: &ElementSet, f: &Filter) -> Result<FThickVerdict> {
    check(s, a, f)?;
    let v0 = f.generator();
    Ok(FThickVerdict {
        definitional: f_thick_mesh(s, a, v0),
        translates: f_thick_translates(s, a, v0),
        algebraic: FilterSemigroup::new(s, f).ok().map(|fs| fs.thick_algebraic(a)),
    })
}

/// Algebraic F-thickness alone; fails for non-idempotent filters.
pub fn f_thick_algebraic(s: &FiniteSemigroup, a: &ElementSet, f: &Filter) -> Result<bool> {
    check(s, a, f)?;
    let fs = FilterSemigroup::new(s, f).map_err(|_| Error::AlgebraicFormUndefined(*f.generator()))?;
    Ok(fs.thick_algebraic(a))
}

pub fn is_f_syndetic(s: &FiniteSemigroup, a: &ElementSet, f: &Filter) -> Result<Verdict> {
    check(s, a, f)?;
    Ok(Verdict {
        definitional: f_syndetic_definitional(s, a, f.generator()),
        algebraic: FilterSemigroup::new(s, f).ok().map(|fs| fs.syndetic_algebraic(a)),
    })
}

pub fn f_syndetic_algebraic(s: &FiniteSemigroup, a: &ElementSet, f: &Filter) -> Result<bool> {
    check(s, a, f)?;
    let fs = FilterSemigroup::new(s, f).map_err(|_| Error::AlgebraicFormUndefined(*f.generator()))?;
    Ok(fs.syndetic_algebraic(a))
}

/// Whether every finite sub-intersection of `fam` is F-thick (definitional),
/// and whether some left ideal of `F̄` lies inside `∩ fam` (algebraic).
pub fn has_f_thick_fip(s: &FiniteSemigroup, fam: &ExplicitFamily, f: &Filter) -> Result<Verdict> {
    if fam.members.is_empty() {
        return Err(Error::EmptyFamily);
    }
    for m in &fam.members {
        m.require_order(s.order())?;
    }
    f.generator().require_order(s.order())?;
    let v0 = f.generator();
    let definitional = if fam.members.len() <= 10 {
        (1u32..(1 << fam.members.len())).all(|mask| {
            let meet = fam
                .members
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .fold(s.carrier(), |acc, (_, m)| acc.intersection(m));
            f_thick_mesh(s, &meet, v0)
        })
    } else {
        // F-thickness is superset-closed, so the full intersection decides
        f_thick_mesh(s, &fam.intersection(), v0)
    };
    let algebraic = if s.is_product_closed(v0) {
        let meet = fam.intersection();
        // every left ideal of F̄ contains a principal one, {a} ∪ F̄·a
        Some(v0.iter().any(|a| {
            let mut p = s.right_translate(v0, a);
            p.insert(a);
            p.is_subset(&meet)
        }))
    } else {
        None
    };
    Ok(Verdict {
        definitional,
        algebraic,
    })
}

pub fn is_central(s: &FiniteSemigroup, a: &ElementSet) -> Result<bool> {
    s.check_set(a)?;
    Ok(FilterSemigroup::trivial(s).is_f_central(a))
}

pub fn is_f_central(s: &FiniteSemigroup, a: &ElementSet, f: &Filter) -> Result<bool> {
    check(s, a, f)?;
    Ok(FilterSemigroup::new(s, f)?.is_f_central(a))
}

pub fn is_strongly_central(s: &FiniteSemigroup, a: &ElementSet) -> Result<bool> {
    s.check_set(a)?;
    Ok(FilterSemigroup::trivial(s).is_strongly_f_central(a))
}

pub fn is_strongly_f_central(s: &FiniteSemigroup, a: &ElementSet, f: &Filter) -> Result<bool> {
    check(s, a, f)?;
    Ok(FilterSemigroup::new(s, f)?.is_strongly_f_central(a))
}

pub fn is_thickly_central(s: &FiniteSemigroup, a: &ElementSet) -> Result<bool> {
    s.check_set(a)?;
    Ok(FilterSemigroup::trivial(s).is_thickly_f_central(a))
}

pub fn is_thickly_f_central(s: &FiniteSemigroup, a: &ElementSet, f: &Filter) -> Result<bool> {
    check(s, a, f)?;
    Ok(FilterSemigroup::new(s, f)?.is_thickly_f_central(a))
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

    fn evens(n: usize) -> ElementSet {
        set(n, &(0..n).step_by(2).collect::<Vec<_>>())
    }

    #[test]
    fn thick_examples() {
        let z10 = fam("Z10");
        let v = is_thick(&z10, &evens(10)).unwrap();
        assert!(!v.definitional && v.agree());
        assert!(is_thick(&z10, &z10.carrier()).unwrap().value());
        assert!(!is_thick(&fam("LZ2"), &set(2, &[0])).unwrap().value());
        let v = is_thick(&fam("RZ2"), &set(2, &[0])).unwrap();
        assert!(v.definitional && v.agree());
    }

    #[test]
    fn syndetic_examples() {
        let z10 = fam("Z10");
        let odds = evens(10).complement();
        assert!(is_syndetic(&z10, &odds).unwrap().value());
        assert!(!is_syndetic(&z10, &z10.empty_set()).unwrap().value());
        let z5 = fam("Z5");
        for a in ElementSet::all_subsets(5).filter(|a| !a.is_empty()) {
            let v = is_syndetic(&z5, &a).unwrap();
            assert!(v.definitional && v.agree());
        }
    }

    #[test]
    fn filter_thick_examples() {
        // the even numbers are thick along the filter of sets containing 2
        let z10 = fam("Z10");
        let v = is_f_thick(&z10, &evens(10), &gen(10, &[2])).unwrap();
        assert!(v.definitional && v.translates);
        assert_eq!(v.algebraic, None);
        assert!(matches!(
            f_thick_algebraic(&z10, &evens(10), &gen(10, &[2])),
            Err(Error::AlgebraicFormUndefined(_))
        ));

        let z6 = fam("Z6");
        let a = set(6, &[0, 2, 4]);
        let v = is_f_thick(&z6, &a, &gen(6, &[0, 2, 4])).unwrap();
        assert!(v.definitional && v.agree() && v.algebraic == Some(true));
        assert!(!is_thick(&z6, &a).unwrap().value());
    }

    #[test]
    fn filter_syndetic_examples() {
        // the odd numbers are syndetic but not syndetic along ⟨{2}⟩
        let z10 = fam("Z10");
        let odds = evens(10).complement();
        assert!(!is_f_syndetic(&z10, &odds, &gen(10, &[2])).unwrap().value());

        let z6 = fam("Z6");
        let v = is_f_syndetic(&z6, &set(6, &[2, 4]), &gen(6, &[0, 2, 4])).unwrap();
        assert!(v.definitional && v.agree());
        for f in [gen(6, &[1]), gen(6, &[0, 2, 4]), Filter::trivial(6)] {
            assert!(is_f_syndetic(&z6, &z6.carrier(), &f).unwrap().value());
        }
    }

    #[test]
    fn thick_fip_examples() {
        let z6 = fam("Z6");
        let f = gen(6, &[0, 2, 4]);
        let family = ExplicitFamily::new(6, vec![set(6, &[0, 2, 4]), set(6, &[0, 2, 4, 5])]).unwrap();
        let v = has_f_thick_fip(&z6, &family, &f).unwrap();
        assert!(v.definitional && v.agree());
        let whole = ExplicitFamily::new(6, vec![z6.carrier()]).unwrap();
        assert!(has_f_thick_fip(&z6, &whole, &f).unwrap().value());
        let rz2 = fam("RZ2");
        let split = ExplicitFamily::new(2, vec![set(2, &[0]), set(2, &[1])]).unwrap();
        let v = has_f_thick_fip(&rz2, &split, &Filter::trivial(2)).unwrap();
        assert!(!v.definitional && v.agree());
    }

    #[test]
    fn central_examples() {
        let rz2 = fam("RZ2");
        let a = set(2, &[0]);
        assert!(is_central(&rz2, &a).unwrap());
        assert!(!is_strongly_central(&rz2, &a).unwrap());
        assert!(is_thickly_central(&rz2, &a).unwrap());
        assert!(is_strongly_central(&rz2, &rz2.carrier()).unwrap());

        let z6 = fam("Z6");
        let f = gen(6, &[0, 2, 4]);
        assert!(is_f_central(&z6, &set(6, &[0]), &f).unwrap());
        assert!(is_strongly_f_central(&z6, &set(6, &[0]), &f).unwrap());
        assert!(!is_thickly_f_central(&z6, &set(6, &[2, 4]), &f).unwrap());
        assert!(is_thickly_f_central(&z6, &z6.carrier(), &f).unwrap());
        assert!(!is_f_central(&z6, &z6.empty_set(), &f).unwrap());
        assert_eq!(
            is_f_central(&z6, &set(6, &[0]), &gen(6, &[2])),
            Err(Error::FilterNotIdempotent(set(6, &[2])))
        );
    }
}
