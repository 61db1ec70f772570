//! Finite dynamical systems `(X, ⟨T_s⟩)`.
//!
//! Phase spaces are finite and discrete, so every point has the minimal
//! neighbourhood `{x}`, and a net converges exactly when it is eventually
//! constant. Recurrence checks therefore use `U = {y}`, and proximality
//! reduces to `T_s(x) = T_s(y)` for some `s`.
//!
//! Only a subsemigroup of `S` needs to act: the relative systems use the
//! closure `F̄` of a filter as the acting set.

use std::fmt;

use crate::error::{Error, Result};
use crate::filter::{ExplicitFamily, Filter};
use crate::ideals::IdealCatalog;
use crate::largeness::{has_f_thick_fip, FilterSemigroup};
use crate::semigroup::FiniteSemigroup;
use crate::set::ElementSet;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteDynamicalSystem<'a> {
    semigroup: &'a FiniteSemigroup,
    acting: ElementSet,
    phase_order: usize,
    /// `images[s][x] = T_s(x)`; rows of non-acting elements are empty.
    images: Vec<Vec<usize>>,
}

/// Builds a system acted on by all of `S`. `action[s][x]` is `T_s(x)`.
pub fn validate_system<'a>(
    s: &'a FiniteSemigroup,
    phase_order: usize,
    action: &[Vec<usize>],
) -> Result<FiniteDynamicalSystem<'a>> {
    if action.len() != s.order() {
        return Err(Error::CarrierMismatch {
            expected: s.order(),
            found: action.len(),
        });
    }
    validate_partial(s, &s.carrier(), phase_order, action.to_vec())
}

/// Builds a system acted on by the subsemigroup `acting`. `action` is indexed
/// by the elements of `S`; rows outside `acting` are ignored.
pub fn validate_partial<'a>(
    s: &'a FiniteSemigroup,
    acting: &ElementSet,
    phase_order: usize,
    mut action: Vec<Vec<usize>>,
) -> Result<FiniteDynamicalSystem<'a>> {
    acting.require_order(s.order())?;
    if acting.is_empty() {
        return Err(Error::EmptyGeneratorSet);
    }
    if !s.is_product_closed(acting) {
        return Err(Error::NotASubsemigroup(*acting));
    }
    if phase_order == 0 {
        return Err(Error::PreconditionFailed("phase space must be nonempty".into()));
    }
    action.resize(s.order(), Vec::new());
    for (e, row) in action.iter_mut().enumerate() {
        if !acting.contains(e) {
            row.clear();
            continue;
        }
        if row.len() != phase_order {
            return Err(Error::RaggedTable {
                order: phase_order,
                len: row.len(),
            });
        }
        if let Some(&bad) = row.iter().find(|&&v| v >= phase_order) {
            return Err(Error::IndexOutOfRange {
                index: bad,
                order: phase_order,
            });
        }
    }
    for a in acting.iter() {
        for b in acting.iter() {
            let ab = s.mul(a, b);
            for x in 0..phase_order {
                let composed = action[a][action[b][x]];
                let direct = action[ab][x];
                if composed != direct {
                    return Err(Error::HomomorphismViolation {
                        s: a,
                        t: b,
                        st: ab,
                        x,
                        composed,
                        direct,
                    });
                }
            }
        }
    }
    Ok(FiniteDynamicalSystem {
        semigroup: s,
        acting: *acting,
        phase_order,
        images: action,
    })
}

impl<'a> FiniteDynamicalSystem<'a> {
    pub fn semigroup(&self) -> &'a FiniteSemigroup {
        self.semigroup
    }

    pub fn acting(&self) -> &ElementSet {
        &self.acting
    }

    pub fn phase_order(&self) -> usize {
        self.phase_order
    }

    fn check_point(&self, x: usize) -> Result<()> {
        if x < self.phase_order {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange {
                index: x,
                order: self.phase_order,
            })
        }
    }

    pub fn apply(&self, s: usize, x: usize) -> Result<usize> {
        if s >= self.semigroup.order() || !self.acting.contains(s) {
            return Err(Error::NotActing(s));
        }
        self.check_point(x)?;
        Ok(self.images[s][x])
    }

    /// `{s : T_s(x) ∈ U}`, a subset of the acting set.
    pub fn return_set(&self, x: usize, u: &ElementSet) -> Result<ElementSet> {
        self.check_point(x)?;
        u.require_order(self.phase_order)?;
        Ok(self.return_set_unchecked(x, u))
    }

    fn return_set_unchecked(&self, x: usize, u: &ElementSet) -> ElementSet {
        let mut out = self.semigroup.empty_set();
        for s in self.acting.iter() {
            if u.contains(self.images[s][x]) {
                out.insert(s);
            }
        }
        out
    }

    /// Whether the return set of `x` to `{x}` is syndetic in the acting semigroup.
    pub fn is_uniformly_recurrent(&self, x: usize) -> Result<bool> {
        self.check_point(x)?;
        Ok(self.recurrent_unchecked(x))
    }

    fn recurrent_unchecked(&self, x: usize) -> bool {
        let r = self.return_set_unchecked(x, &ElementSet::singleton(self.phase_order, x));
        let s = self.semigroup;
        self.acting
            .iter()
            .all(|y| self.acting.iter().any(|t| r.contains(s.mul(t, y))))
    }

    pub fn is_proximal(&self, x: usize, y: usize) -> Result<bool> {
        self.check_point(x)?;
        self.check_point(y)?;
        Ok(self.proximal_unchecked(x, y))
    }

    fn proximal_unchecked(&self, x: usize, y: usize) -> bool {
        x == y || self.acting.iter().any(|s| self.images[s][x] == self.images[s][y])
    }

    /// All clauses of the dynamical definition of a central set: `y ∈ U`,
    /// `x` and `y` proximal, `y` uniformly recurrent, and `B` the return set of `x` to `U`.
    pub fn central_witness_check(&self, x: usize, y: usize, u: &ElementSet, b: &ElementSet) -> Result<bool> {
        self.check_point(x)?;
        self.check_point(y)?;
        u.require_order(self.phase_order)?;
        b.require_order(self.semigroup.order())?;
        Ok(u.contains(y)
            && self.return_set_unchecked(x, u) == *b
            && self.proximal_unchecked(x, y)
            && self.recurrent_unchecked(y))
    }

    /// The `p`-limit of `T_s(x)`, which for a principal `p` is `T_p(x)`.
    pub fn p_transform(&self, p: usize, x: usize) -> Result<usize> {
        self.apply(p, x)
    }

    /// Text form: `X <n>` then one `s: T_s(0), T_s(1), …` line per acting element.
    pub fn to_text(&self) -> String {
        let mut out = format!("X {}\n", self.phase_order);
        for s in self.acting.iter() {
            let row: Vec<String> = self.images[s].iter().map(|v| v.to_string()).collect();
            out.push_str(&format!("{s}: {}\n", row.join(", ")));
        }
        out
    }
}

impl fmt::Display for FiniteDynamicalSystem<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// Parses the text form. The acting set is the set of elements with a line.
pub fn parse_system<'a>(s: &'a FiniteSemigroup, text: &str) -> Result<FiniteDynamicalSystem<'a>> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (line, head) = lines.next().ok_or(Error::Parse {
        line: 1,
        msg: "missing `X <phase_order>` header".into(),
    })?;
    let phase_order = head
        .strip_prefix('X')
        .and_then(|n| n.trim().parse::<usize>().ok())
        .filter(|&n| n > 0)
        .ok_or_else(|| Error::Parse {
            line,
            msg: format!("expected `X <phase_order>`, found `{head}`"),
        })?;
    let mut action = vec![Vec::new(); s.order()];
    let mut acting = s.empty_set();
    for (line, l) in lines {
        let bad = |msg: String| Error::Parse { line, msg };
        let (elem, images) = l.split_once(':').ok_or_else(|| bad(format!("expected `s: images`, found `{l}`")))?;
        let e: usize = elem
            .trim()
            .parse()
            .map_err(|_| bad(format!("`{}` is not an element index", elem.trim())))?;
        if e >= s.order() {
            return Err(bad(format!("element {e} outside a semigroup of order {}", s.order())));
        }
        if acting.contains(e) {
            return Err(bad(format!("element {e} listed twice")));
        }
        let row = images
            .split(',')
            .map(|v| v.trim().parse::<usize>().map_err(|_| bad(format!("`{}` is not a phase index", v.trim()))))
            .collect::<Result<Vec<_>>>()?;
        if row.len() != phase_order {
            return Err(bad(format!("expected {phase_order} images, found {}", row.len())));
        }
        if let Some(v) = row.iter().find(|&&v| v >= phase_order) {
            return Err(bad(format!("image {v} outside phase space of size {phase_order}")));
        }
        acting.insert(e);
        action[e] = row;
    }
    if acting.is_empty() {
        return Err(Error::Parse {
            line,
            msg: "no action lines".into(),
        });
    }
    validate_partial(s, &acting, phase_order, action)
}

/// A system together with the semigroup element each phase point stands for.
#[derive(Debug, Clone)]
pub struct LabeledSystem<'a> {
    pub system: FiniteDynamicalSystem<'a>,
    /// `points[i]` is the element at phase index `i`; `None` marks an adjoined identity.
    pub points: Vec<Option<usize>>,
}

impl LabeledSystem<'_> {
    pub fn index_of(&self, element: usize) -> Option<usize> {
        self.points.iter().position(|&p| p == Some(element))
    }
}

/// `F̄` acting by left multiplication on its least minimal left ideal.
pub fn canonical_minimal_system<'a>(s: &'a FiniteSemigroup, f: &Filter) -> Result<LabeledSystem<'a>> {
    let fs = FilterSemigroup::new(s, f)?;
    let l = fs.minimal_left_ideals()[0];
    left_multiplication_system(s, fs.closure(), &l)
}

/// `acting` on the left-invariant set `x` by left multiplication.
pub fn left_multiplication_system<'a>(
    s: &'a FiniteSemigroup,
    acting: &ElementSet,
    x: &ElementSet,
) -> Result<LabeledSystem<'a>> {
    s.check_set(x)?;
    let points: Vec<usize> = x.iter().collect();
    let mut index = vec![usize::MAX; s.order()];
    for (i, &p) in points.iter().enumerate() {
        index[p] = i;
    }
    let mut action = vec![Vec::new(); s.order()];
    for a in acting.iter() {
        action[a] = points
            .iter()
            .map(|&p| {
                let v = s.mul(a, p);
                if x.contains(v) {
                    Ok(index[v])
                } else {
                    Err(Error::PreconditionFailed(format!("{a}·{p} = {v} leaves {x}")))
                }
            })
            .collect::<Result<_>>()?;
    }
    let system = validate_partial(s, acting, points.len(), action)?;
    Ok(LabeledSystem {
        system,
        points: points.into_iter().map(Some).collect(),
    })
}

/// `S` acting on `S ∪ {1}` by left multiplication; phase index `|S|` is the adjoined identity.
pub fn monoid_extension_system(s: &FiniteSemigroup) -> LabeledSystem<'_> {
    let n = s.order();
    let action: Vec<Vec<usize>> = (0..n)
        .map(|a| (0..n).map(|x| s.mul(a, x)).chain(std::iter::once(a)).collect())
        .collect();
    let system = validate_system(s, n + 1, &action).expect("left multiplication is an action");
    LabeledSystem {
        system,
        points: (0..n).map(Some).chain(std::iter::once(None)).collect(),
    }
}

/// Outcome of the forward recurrence construction for strongly F-central sets.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RecurrencePoint {
    pub y: usize,
    /// The idempotent `p ∈ L ∩ B` used to build `y = T_p(x₀)`.
    pub p: usize,
    /// The minimal left ideal of `F̄` inside every member of the family.
    pub ideal: ElementSet,
}

/// For strongly F-central `b` and a family with the F-thick finite intersection
/// property, finds `y` with `{s ∈ A ∩ B : T_s(y) = y}` nonempty for every `A`,
/// and verifies that conclusion before returning.
pub fn find_recurrent_point(
    s: &FiniteSemigroup,
    f: &Filter,
    b: &ElementSet,
    fam: &ExplicitFamily,
    sys: &FiniteDynamicalSystem,
) -> Result<RecurrencePoint> {
    s.check_set(b)?;
    let fs = FilterSemigroup::new(s, f)?;
    if !fs.is_strongly_f_central(b) {
        return Err(Error::PreconditionFailed(format!("{b} is not strongly F-central")));
    }
    if !has_f_thick_fip(s, fam, f)?.definitional {
        return Err(Error::PreconditionFailed("family lacks the F-thick finite intersection property".into()));
    }
    if !fs.closure().is_subset(sys.acting()) {
        return Err(Error::PreconditionFailed(format!(
            "system is not acted on by all of {}",
            fs.closure()
        )));
    }
    let meet = fam.intersection();
    let (ideal, p) = fs
        .idempotent_below(&meet, b)
        .ok_or_else(|| Error::TheoremViolation(format!("no minimal left ideal of F̄ inside {meet} meets {b} in an idempotent")))?;
    let y = sys.apply(p, 0)?;
    for a in &fam.members {
        let returns = sys.return_set_unchecked(y, &ElementSet::singleton(sys.phase_order(), y));
        if !returns.intersection(a).meets(b) {
            return Err(Error::TheoremViolation(format!("no s ∈ {a} ∩ {b} returns {y} to itself")));
        }
    }
    Ok(RecurrencePoint { y, p, ideal })
}

/// Which system produced a dynamical witness for a central set.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SystemKind {
    MinimalLeftIdeal(ElementSet),
    LeftRegular,
    MonoidExtension,
}

impl fmt::Display for SystemKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SystemKind::MinimalLeftIdeal(l) => write!(f, "minimal left ideal {l}"),
            SystemKind::LeftRegular => f.write_str("left-regular"),
            SystemKind::MonoidExtension => f.write_str("left-regular on S¹"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CentralWitness {
    pub kind: SystemKind,
    pub x: usize,
    pub y: usize,
    pub u: ElementSet,
}

/// The left-multiplication systems searched for dynamical witnesses, smallest first.
pub fn witness_systems(s: &FiniteSemigroup) -> Vec<(SystemKind, LabeledSystem<'_>)> {
    let all = s.carrier();
    let mut out: Vec<_> = IdealCatalog::new(s)
        .minimal_left_ideals
        .into_iter()
        .map(|l| {
            let sys = left_multiplication_system(s, &all, &l).expect("minimal left ideals are left invariant");
            (SystemKind::MinimalLeftIdeal(l), sys)
        })
        .collect();
    out.push((
        SystemKind::LeftRegular,
        left_multiplication_system(s, &all, &all).expect("S is left invariant"),
    ));
    out.push((SystemKind::MonoidExtension, monoid_extension_system(s)));
    out
}

/// Every `(x, y, U)` in `sys` satisfying the dynamical definition, with its return set.
pub fn dynamical_witnesses(sys: &FiniteDynamicalSystem) -> Result<Vec<(usize, usize, ElementSet, ElementSet)>> {
    let n = sys.phase_order();
    if n > 12 {
        return Err(Error::SearchBoundExceeded {
            what: "phase space",
            size: n,
            cap: 12,
        });
    }
    let mut out = Vec::new();
    for y in (0..n).filter(|&y| sys.recurrent_unchecked(y)) {
        for x in (0..n).filter(|&x| sys.proximal_unchecked(x, y)) {
            for u in ElementSet::all_subsets(n).filter(|u| u.contains(y)) {
                out.push((x, y, u, sys.return_set_unchecked(x, &u)));
            }
        }
    }
    Ok(out)
}

/// Searches the systems of [`witness_systems`] for a witness that `a` is
/// central in the dynamical sense.
pub fn find_central_witness(s: &FiniteSemigroup, a: &ElementSet) -> Result<Option<CentralWitness>> {
    s.check_set(a)?;
    for (kind, labeled) in witness_systems(s) {
        let found = dynamical_witnesses(&labeled.system)?
            .into_iter()
            .find(|(_, _, _, b)| b == a);
        if let Some((x, y, u, _)) = found {
            return Ok(Some(CentralWitness { kind, x, y, u }));
        }
    }
    Ok(None)
}
