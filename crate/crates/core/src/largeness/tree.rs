//! Star-trees and the downward directed families built from them.

use std::collections::{BTreeMap, VecDeque};

use crate::error::{Error, Result};
use crate::filter::ExplicitFamily;
use crate::semigroup::FiniteSemigroup;
use crate::set::ElementSet;

use super::{FilterSemigroup, SUBSET_ENUM_CAP};

pub const TREE_NODE_CAP: usize = 4096;
pub const DIRECTED_FAMILY_CAP: usize = 64;

fn check_point(s: &FiniteSemigroup, a: &ElementSet, p: usize) -> Result<()> {
    s.check_set(a)?;
    if p >= s.order() {
        return Err(Error::IndexOutOfRange {
            index: p,
            order: s.order(),
        });
    }
    if !s.is_idempotent(p) {
        return Err(Error::NotIdempotent(p));
    }
    if !a.contains(p) {
        return Err(Error::NotAMember { p, set: *a });
    }
    Ok(())
}

fn star(s: &FiniteSemigroup, a: &ElementSet, p: usize) -> ElementSet {
    let mut out = s.empty_set();
    for x in a {
        if a.contains(s.mul(x, p)) {
            out.insert(x);
        }
    }
    out
}

/// `A★ = {x ∈ A : x·p ∈ A}` for an idempotent `p ∈ A`.
pub fn star_set(s: &FiniteSemigroup, a: &ElementSet, p: usize) -> Result<ElementSet> {
    check_point(s, a, p)?;
    Ok(star(s, a, p))
}

/// Branch set of the child `f⌢x` given the branch set `b` of `f`.
fn child_branch(s: &FiniteSemigroup, b: &ElementSet, x: usize, p: usize) -> ElementSet {
    star(s, &b.intersection(&s.left_quotient_unchecked(x, b)), p)
}

/// A prefix-closed set of finite sequences, truncated at `depth`.
///
/// `branches` maps each node `f` of length `< depth` to `B_f = {x : f⌢x ∈ T}`;
/// nodes at the truncation depth are leaves.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeNodeSet {
    pub carrier_order: usize,
    pub depth: usize,
    pub branches: BTreeMap<Vec<usize>, ElementSet>,
}

impl TreeNodeSet {
    /// Builds a tree from explicit branch sets; every node must be reachable
    /// from the root through the given branch sets.
    pub fn from_branches(carrier_order: usize, depth: usize, branches: BTreeMap<Vec<usize>, ElementSet>) -> Self {
        Self {
            carrier_order,
            depth,
            branches,
        }
    }

    /// Every node, internal and leaf, in shortlex order.
    pub fn nodes(&self) -> Vec<Vec<usize>> {
        let mut out: Vec<Vec<usize>> = vec![Vec::new()];
        for (f, b) in &self.branches {
            for x in b {
                let mut g = f.clone();
                g.push(x);
                out.push(g);
            }
        }
        out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        out.dedup();
        out
    }

    pub fn branch(&self, f: &[usize]) -> ElementSet {
        self.branches
            .get(f)
            .copied()
            .unwrap_or_else(|| ElementSet::empty(self.carrier_order))
    }

    /// Every internal node's parent is an internal node with the right branch entry.
    pub fn is_prefix_closed(&self) -> bool {
        self.branches.keys().all(|f| match f.split_last() {
            None => true,
            Some((&x, parent)) => self.branches.get(parent).is_some_and(|b| b.contains(x)),
        })
    }

    pub fn is_tree_in(&self, a: &ElementSet) -> bool {
        self.branches.values().all(|b| b.is_subset(a))
    }

    /// `B_{f⌢x} ⊆ x⁻¹B_f` for every node `f` and every `x ∈ B_f`.
    pub fn satisfies_star_law(&self, s: &FiniteSemigroup) -> bool {
        self.branches.iter().all(|(f, b)| {
            b.iter().all(|x| {
                let mut g = f.clone();
                g.push(x);
                self.branch(&g).is_subset(&s.left_quotient_unchecked(x, b))
            })
        })
    }

    /// Whether every internal branch set contains `p`.
    pub fn branches_contain(&self, p: usize) -> bool {
        self.branches.values().all(|b| b.contains(p))
    }
}

/// Star-tree in `A` of the requested depth whose internal branch sets all contain `p`.
pub fn build_tree(s: &FiniteSemigroup, a: &ElementSet, p: usize, depth: usize) -> Result<TreeNodeSet> {
    check_point(s, a, p)?;
    let mut branches = BTreeMap::new();
    let mut queue = VecDeque::from([(Vec::new(), star(s, a, p))]);
    let mut count = 1;
    while let Some((f, b)) = queue.pop_front() {
        if f.len() < depth {
            for x in &b {
                count += 1;
                if count > TREE_NODE_CAP {
                    return Err(Error::SearchBoundExceeded {
                        what: "tree nodes",
                        size: count,
                        cap: TREE_NODE_CAP,
                    });
                }
                let mut g = f.clone();
                g.push(x);
                queue.push_back((g, child_branch(s, &b, x, p)));
            }
            branches.insert(f, b);
        }
    }
    Ok(TreeNodeSet {
        carrier_order: s.order(),
        depth,
        branches,
    })
}

/// Checks the sum-tree equation at every node: `B_f` equals the set of
/// products `∏_{t∈F} g(t)` over extensions `g ⊇ f` in the tree and nonempty
/// `F ⊆ dom(g) ∖ dom(f)`, taken in increasing order of `t`.
pub fn fs_tree_check(s: &FiniteSemigroup, tree: &TreeNodeSet) -> bool {
    let nodes = tree.nodes();
    nodes.iter().all(|f| {
        let mut products = ElementSet::empty(s.order());
        for g in nodes.iter().filter(|g| g.len() > f.len() && g.starts_with(f)) {
            let tail = &g[f.len()..];
            for mask in 1u64..(1 << tail.len()) {
                let mut acc: Option<usize> = None;
                for (i, &x) in tail.iter().enumerate() {
                    if mask >> i & 1 == 1 {
                        acc = Some(acc.map_or(x, |v| s.mul(v, x)));
                    }
                }
                products.insert(acc.unwrap());
            }
        }
        products == tree.branch(f)
    })
}

/// A finite family `⟨C_F⟩_{F∈I}`, each label `F` being a finite set of tree nodes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DirectedFamily {
    pub carrier_order: usize,
    pub labels: Vec<Vec<Vec<usize>>>,
    pub sets: Vec<ElementSet>,
}

impl DirectedFamily {
    /// A family given only by its sets; labels are the member positions.
    pub fn from_sets(carrier_order: usize, sets: Vec<ElementSet>) -> Result<Self> {
        for c in &sets {
            c.require_order(carrier_order)?;
        }
        Ok(Self {
            carrier_order,
            labels: (0..sets.len()).map(|i| vec![vec![i]]).collect(),
            sets,
        })
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }
}

/// Family `C_F = ∩_{f∈F} B_f` over nonempty sets `F` of representative tree
/// nodes, one per distinct branch set of the star-tree grown from `A` and `p`.
///
/// Every branch set of the infinite tree equals one of the representatives'
/// sets, so the successor of any representative is again available and the
/// family is closed under the moves needed for its own verification.
pub fn build_directed_family(s: &FiniteSemigroup, a: &ElementSet, p: usize, fam_bound: usize) -> Result<DirectedFamily> {
    check_point(s, a, p)?;
    let bound = fam_bound.min(DIRECTED_FAMILY_CAP);
    let mut reps: Vec<(Vec<usize>, ElementSet)> = Vec::new();
    let mut queue = VecDeque::from([(Vec::new(), star(s, a, p))]);
    while let Some((f, b)) = queue.pop_front() {
        if reps.iter().any(|(_, c)| *c == b) {
            continue;
        }
        for x in &b {
            let mut g = f.clone();
            g.push(x);
            queue.push_back((g, child_branch(s, &b, x, p)));
        }
        reps.push((f, b));
        if (1usize << reps.len().min(63)) - 1 > bound {
            return Err(Error::SearchBoundExceeded {
                what: "directed family members",
                size: (1usize << reps.len().min(63)) - 1,
                cap: bound,
            });
        }
    }
    let mut labels = Vec::new();
    let mut sets = Vec::new();
    for mask in 1usize..(1 << reps.len()) {
        let chosen: Vec<&(Vec<usize>, ElementSet)> = reps
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, r)| r)
            .collect();
        labels.push(chosen.iter().map(|(f, _)| f.clone()).collect());
        sets.push(chosen.iter().fold(s.carrier(), |acc, (_, b)| acc.intersection(b)));
    }
    Ok(DirectedFamily {
        carrier_order: s.order(),
        labels,
        sets,
    })
}

/// Checks a directed family against `A` and a family `amfam`: every member
/// lies in `A`; the family is downward directed; each `x ∈ C_F` admits `G`
/// with `C_G ⊆ x⁻¹C_F`; and `amfam ∪ {C_F}` has the finite intersection property.
pub fn verify_directed_family(
    s: &FiniteSemigroup,
    a: &ElementSet,
    amfam: &ExplicitFamily,
    dfam: &DirectedFamily,
) -> Result<bool> {
    s.check_set(a)?;
    for c in amfam.members.iter().chain(&dfam.sets) {
        c.require_order(s.order())?;
    }
    if dfam.is_empty() {
        return Ok(false);
    }
    for (i, ci) in dfam.sets.iter().enumerate() {
        for cj in &dfam.sets[i..] {
            let meet = ci.intersection(cj);
            if !dfam.sets.iter().any(|ch| ch.is_subset(&meet)) {
                return Err(Error::FamilyNotDirected(*ci, *cj));
            }
        }
    }
    if !dfam.sets.iter().all(|c| c.is_subset(a)) {
        return Ok(false);
    }
    let returns = dfam.sets.iter().all(|c| {
        c.iter().all(|x| {
            let target = s.left_quotient_unchecked(x, c);
            dfam.sets.iter().any(|g| g.is_subset(&target))
        })
    });
    if !returns {
        return Ok(false);
    }
    // both families are finite, so the finite intersection property is a
    // single nonempty total intersection
    let total = amfam
        .members
        .iter()
        .chain(&dfam.sets)
        .fold(s.carrier(), |acc, c| acc.intersection(c));
    Ok(!total.is_empty())
}

/// Nonempty subsemigroups of `S` inside `a` (`|a| ≤ 20`).
fn subsemigroups_within<'a>(s: &'a FiniteSemigroup, a: &ElementSet) -> impl Iterator<Item = ElementSet> + 'a {
    a.subsets().filter(move |m| !m.is_empty() && s.is_product_closed(m))
}

/// Combinatorial strong F-centrality through directed families.
///
/// A finite downward directed family has a least member `M`, and the return
/// condition makes `M` a subsemigroup; conversely each subsemigroup is a
/// one-member directed family. Every family with the F-thick finite
/// intersection property has a minimal left ideal `L` of `F̄` inside its
/// intersection, and `{L}` itself is such a family. So `A` passes exactly when
/// every such `L` meets a subsemigroup contained in `A`.
pub fn strongly_f_central_combinatorial(fs: &FilterSemigroup, a: &ElementSet) -> Result<bool> {
    bounded(a)?;
    let subs: Vec<ElementSet> = subsemigroups_within(fs.semigroup, a).collect();
    Ok(fs.minimal_left_ideals().iter().all(|l| subs.iter().any(|m| m.meets(l))))
}

/// Combinatorial thick F-centrality: some family with the F-thick finite
/// intersection property (it suffices to try each minimal left ideal `L` of
/// `F̄`) that no directed family inside `S ∖ A` can meet.
pub fn thickly_f_central_combinatorial(fs: &FilterSemigroup, a: &ElementSet) -> Result<bool> {
    let rest = a.complement();
    bounded(&rest)?;
    let subs: Vec<ElementSet> = subsemigroups_within(fs.semigroup, &rest).collect();
    Ok(fs.minimal_left_ideals().iter().any(|l| subs.iter().all(|m| !m.meets(l))))
}

fn bounded(a: &ElementSet) -> Result<()> {
    if a.len() > SUBSET_ENUM_CAP {
        return Err(Error::SearchBoundExceeded {
            what: "subsets searched for subsemigroups",
            size: a.len(),
            cap: SUBSET_ENUM_CAP,
        });
    }
    Ok(())
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
    fn star_examples() {
        let z6 = fam("Z6");
        let a = set(6, &[0, 2, 4]);
        assert_eq!(star_set(&z6, &a, 0).unwrap(), a);
        assert_eq!(star_set(&z6, &set(6, &[0]), 0).unwrap(), set(6, &[0]));
        let rz2 = fam("RZ2");
        assert_eq!(star_set(&rz2, &rz2.carrier(), 0).unwrap(), rz2.carrier());
        assert_eq!(star_set(&z6, &a, 2), Err(Error::NotIdempotent(2)));
        assert!(matches!(star_set(&z6, &set(6, &[1]), 0), Err(Error::NotAMember { p: 0, .. })));
    }

    #[test]
    fn trees_are_star_trees() {
        let z6 = fam("Z6");
        let single = build_tree(&z6, &set(6, &[0]), 0, 4).unwrap();
        assert_eq!(single.nodes(), vec![vec![], vec![0], vec![0, 0], vec![0, 0, 0], vec![0, 0, 0, 0]]);
        let a = set(6, &[0, 2, 4]);
        let t = build_tree(&z6, &a, 0, 3).unwrap();
        assert_eq!(t.nodes().len(), 1 + 3 + 9 + 27);
        assert!(t.is_prefix_closed() && t.is_tree_in(&a) && t.satisfies_star_law(&z6) && t.branches_contain(0));
        for spec in ["RZ2", "LZ3", "M2,2", "T2"] {
            let s = fam(spec);
            for p in crate::ideals::idempotents(&s).iter() {
                let t = build_tree(&s, &s.carrier(), p, 3).unwrap();
                assert!(t.satisfies_star_law(&s) && t.branches_contain(p), "{spec} p={p}");
            }
        }
        assert!(matches!(
            build_tree(&z6, &z6.carrier(), 0, 6),
            Err(Error::SearchBoundExceeded { .. })
        ));
    }

    #[test]
    fn sum_tree_check() {
        let one = fam("trivial");
        let t = build_tree(&one, &one.carrier(), 0, 3).unwrap();
        assert!(fs_tree_check(&one, &t));

        let z3 = fam("Z3");
        let b1 = set(3, &[1]);
        let mut branches = BTreeMap::new();
        branches.insert(vec![], b1);
        branches.insert(vec![1], b1);
        // the root would also need 1+1 = 2
        assert!(!fs_tree_check(&z3, &TreeNodeSet::from_branches(3, 2, branches)));

        let mut branches = BTreeMap::new();
        branches.insert(vec![], set(3, &[0]));
        assert!(fs_tree_check(&z3, &TreeNodeSet::from_branches(3, 1, branches)));
    }

    #[test]
    fn directed_family_examples() {
        let z6 = fam("Z6");
        let a = set(6, &[0, 2, 4]);
        let d = build_directed_family(&z6, &a, 0, 64).unwrap();
        assert!(d.sets.iter().all(|c| *c == a));
        let am = ExplicitFamily::new(6, vec![a]).unwrap();
        assert!(verify_directed_family(&z6, &a, &am, &d).unwrap());

        let whole = DirectedFamily::from_sets(6, vec![z6.carrier()]).unwrap();
        let am = ExplicitFamily::new(6, vec![z6.carrier()]).unwrap();
        assert!(verify_directed_family(&z6, &z6.carrier(), &am, &whole).unwrap());

        let z4 = fam("Z4");
        let d = DirectedFamily::from_sets(4, vec![set(4, &[1])]).unwrap();
        let am = ExplicitFamily::new(4, vec![z4.carrier()]).unwrap();
        assert!(!verify_directed_family(&z4, &z4.carrier(), &am, &d).unwrap());

        let d = DirectedFamily::from_sets(4, vec![set(4, &[0]), set(4, &[1])]).unwrap();
        assert!(matches!(
            verify_directed_family(&z4, &z4.carrier(), &am, &d),
            Err(Error::FamilyNotDirected(_, _))
        ));
    }
}
