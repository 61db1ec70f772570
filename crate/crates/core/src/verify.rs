//! Property suites run over the enumerated (and optionally sampled) universe.
//!
//! Orders up to 3 are exhaustive. Orders 4 to 6 draw seeded samples and
//! therefore need a seed. Each check reports its instance count and the
//! first failing instance in enumeration order.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::dynamics::{
    canonical_minimal_system, dynamical_witnesses, find_central_witness, find_recurrent_point, monoid_extension_system,
    witness_systems, FiniteDynamicalSystem,
};
use crate::error::{Error, Result};
use crate::filter::{
    canonicalize_filter, directed_family_subsemigroup_check, filter_product, filter_product_contains,
    is_idempotent_filter, mesh_member, mesh_member_dual, ExplicitFamily, Filter,
};
use crate::ideals::{
    group_cell_check, minimal_idempotents, order_minimal_idempotents, relative_smallest_ideal, IdealCatalog,
};
use crate::largeness::{
    build_directed_family, condition_with, f_syndetic_definitional, f_thick_mesh, f_thick_translates, has_f_thick_fip,
    is_syndetic, is_thick, strongly_f_central_combinatorial, thickly_f_central_combinatorial, verify_directed_family,
    vsfc_brute_force, vsfc_right_ideal_witness, vsfc_with, Condition, FilterSemigroup, DIRECTED_FAMILY_CAP,
};
use crate::products::{
    check_complement_rectangle, check_product_strongly_central, check_product_thickly_central, check_projection_thick,
    ProductInstance,
};
use crate::report::Record;
use crate::semigroup::{
    direct_product, enumerate_semigroups, make_family, sample_semigroups, FiniteSemigroup, EXHAUSTIVE_LIMIT,
    SAMPLED_RANGE,
};
use crate::set::ElementSet;

pub const DEFAULT_SAMPLES: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Enumeration,
    Duality,
    Equivalence,
    Algebraic,
    Structure,
    Central,
    Dynamics,
    Products,
    Examples,
    All,
}

impl Suite {
    pub const EACH: [Suite; 9] = [
        Suite::Enumeration,
        Suite::Duality,
        Suite::Equivalence,
        Suite::Algebraic,
        Suite::Structure,
        Suite::Central,
        Suite::Dynamics,
        Suite::Products,
        Suite::Examples,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Enumeration => "enumeration",
            Suite::Duality => "duality",
            Suite::Equivalence => "equivalence",
            Suite::Algebraic => "algebraic",
            Suite::Structure => "structure",
            Suite::Central => "central",
            Suite::Dynamics => "dynamics",
            Suite::Products => "products",
            Suite::Examples => "examples",
            Suite::All => "all",
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
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::PreconditionFailed(format!("unknown suite `{s}`")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyConfig {
    pub max_order: usize,
    pub seed: Option<u64>,
    /// Semigroups drawn per sampled order.
    pub samples: usize,
}

impl VerifyConfig {
    pub fn exhaustive(max_order: usize) -> Self {
        Self {
            max_order,
            seed: None,
            samples: DEFAULT_SAMPLES,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.max_order == 0 || self.max_order > *SAMPLED_RANGE.end() {
            return Err(Error::SizeLimitExceeded {
                what: "verification order",
                requested: self.max_order,
                limit: *SAMPLED_RANGE.end(),
            });
        }
        if self.max_order > EXHAUSTIVE_LIMIT && self.seed.is_none() {
            return Err(Error::PreconditionFailed(format!(
                "orders above {EXHAUSTIVE_LIMIT} are sampled and need a seed"
            )));
        }
        Ok(())
    }

    fn exhaustive_order(&self) -> usize {
        self.max_order.min(EXHAUSTIVE_LIMIT)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckResult {
    pub name: &'static str,
    pub instances: u64,
    pub failures: u64,
    /// Instances the check could not decide within its search bounds.
    pub skipped: u64,
    pub first_failure: Option<String>,
    pub note: Option<String>,
}

impl CheckResult {
    fn new(name: &'static str) -> Self {
        Self {
            name,
            instances: 0,
            failures: 0,
            skipped: 0,
            first_failure: None,
            note: None,
        }
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteReport {
    pub suite: Suite,
    pub max_order: usize,
    pub seed: Option<u64>,
    pub samples: usize,
    pub checks: Vec<CheckResult>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(CheckResult::passed)
    }

    pub fn check(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn instances(&self) -> u64 {
        self.checks.iter().map(|c| c.instances).sum()
    }

    pub fn records(&self) -> Vec<Record> {
        let mut head = Record::new("suite", self.suite);
        head.push("max_order", self.max_order)
            .push("seed", self.seed.map_or("-".to_string(), |s| s.to_string()))
            .push("samples", if self.max_order > EXHAUSTIVE_LIMIT { self.samples } else { 0 })
            .push("passed", self.passed())
            .push("instances", self.instances());
        let mut out = vec![head];
        for c in &self.checks {
            let mut r = Record::new("check", c.name);
            r.push("passed", c.passed())
                .push("instances", c.instances)
                .push("failures", c.failures)
                .push("skipped", c.skipped)
                .push("first_failure", c.first_failure.as_deref().unwrap_or("-"));
            if let Some(n) = &c.note {
                r.push("note", n);
            }
            out.push(r);
        }
        out
    }

    pub fn human(&self) -> String {
        let mut out = format!(
            "suite {} (max order {}{}): {}\n",
            self.suite,
            self.max_order,
            self.seed.map_or(String::new(), |s| format!(", seed {s}")),
            if self.passed() { "pass" } else { "FAIL" }
        );
        for c in &self.checks {
            out.push_str(&format!(
                "  {:<4} {:<44} {:>9} instances",
                if c.passed() { "ok" } else { "FAIL" },
                c.name,
                c.instances
            ));
            if c.skipped > 0 {
                out.push_str(&format!(", {} skipped", c.skipped));
            }
            if c.failures > 0 {
                out.push_str(&format!(", {} failures", c.failures));
            }
            out.push('\n');
            if let Some(f) = &c.first_failure {
                out.push_str(&format!("       first failure: {f}\n"));
            }
            if let Some(n) = &c.note {
                out.push_str(&format!("       note: {n}\n"));
            }
        }
        out
    }
}

/// Per-check counters, merged in enumeration order.
struct Tally {
    checks: Vec<CheckResult>,
}

impl Tally {
    fn new(names: &[&'static str]) -> Self {
        Self {
            checks: names.iter().map(|&n| CheckResult::new(n)).collect(),
        }
    }

    fn entry(&mut self, name: &'static str) -> &mut CheckResult {
        let i = self
            .checks
            .iter()
            .position(|c| c.name == name)
            .unwrap_or_else(|| panic!("undeclared check `{name}`"));
        &mut self.checks[i]
    }

    fn check(&mut self, name: &'static str, ok: bool, instance: impl FnOnce() -> String) {
        let c = self.entry(name);
        c.instances += 1;
        if !ok {
            c.failures += 1;
            if c.first_failure.is_none() {
                c.first_failure = Some(instance());
            }
        }
    }

    /// Records a fallible check; search-bound errors count as skipped.
    fn check_result(&mut self, name: &'static str, res: Result<bool>, instance: impl FnOnce() -> String) {
        match res {
            Ok(ok) => self.check(name, ok, instance),
            Err(Error::SearchBoundExceeded { .. }) => self.entry(name).skipped += 1,
            Err(e) => self.check(name, false, || format!("{} ({e})", instance())),
        }
    }

    fn merge(&mut self, other: Tally) {
        for o in other.checks {
            let c = self.entry(o.name);
            c.instances += o.instances;
            c.failures += o.failures;
            c.skipped += o.skipped;
            if c.first_failure.is_none() {
                c.first_failure = o.first_failure;
            }
        }
    }

    fn note(&mut self, name: &'static str, note: String) {
        self.entry(name).note = Some(note);
    }
}

/// Runs `body` on each item in parallel and merges tallies in item order.
fn sweep<T: Sync>(names: &[&'static str], items: &[T], body: impl Fn(&T, &mut Tally) + Sync) -> Tally {
    let parts: Vec<Tally> = items
        .par_iter()
        .map(|item| {
            let mut t = Tally::new(names);
            body(item, &mut t);
            t
        })
        .collect();
    let mut total = Tally::new(names);
    for p in parts {
        total.merge(p);
    }
    total
}

fn describe(s: &FiniteSemigroup) -> String {
    let rows: Vec<String> = s
        .rows()
        .iter()
        .map(|r| r.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(","))
        .collect();
    format!("S[{}]={}", s.order(), rows.join(";"))
}

/// Enumerated semigroups up to order 3 plus seeded samples above.
pub fn corpus(cfg: &VerifyConfig) -> Result<Vec<FiniteSemigroup>> {
    cfg.validate()?;
    let mut out = Vec::new();
    for n in 1..=cfg.exhaustive_order() {
        out.extend(enumerate_semigroups(n)?);
    }
    if let Some(seed) = cfg.seed {
        for n in EXHAUSTIVE_LIMIT + 1..=cfg.max_order {
            out.extend(sample_semigroups(n, cfg.samples, seed)?);
        }
    }
    Ok(out)
}

fn generators(s: &FiniteSemigroup) -> impl Iterator<Item = Filter> + '_ {
    ElementSet::all_subsets(s.order())
        .filter(|v| !v.is_empty())
        .map(|v| Filter::principal(v).expect("nonempty"))
}

fn idempotent_generators(s: &FiniteSemigroup) -> impl Iterator<Item = Filter> + '_ {
    generators(s).filter(|f| s.is_product_closed(f.generator()))
}

/// Families of one or two subsets on small carriers, single subsets otherwise.
fn small_families(s: &FiniteSemigroup) -> Vec<Vec<ElementSet>> {
    let subsets: Vec<ElementSet> = ElementSet::all_subsets(s.order()).collect();
    let mut out: Vec<Vec<ElementSet>> = subsets.iter().map(|&a| vec![a]).collect();
    if s.order() <= EXHAUSTIVE_LIMIT {
        for (i, &a) in subsets.iter().enumerate() {
            for &b in &subsets[i + 1..] {
                out.push(vec![a, b]);
            }
        }
    }
    out
}

pub fn run_suite(suite: Suite, cfg: &VerifyConfig) -> Result<Vec<SuiteReport>> {
    cfg.validate()?;
    if suite == Suite::All {
        let semigroups = corpus(cfg)?;
        return Suite::EACH.iter().map(|&s| run_one(s, cfg, &semigroups)).collect();
    }
    let semigroups = if matches!(suite, Suite::Enumeration | Suite::Products | Suite::Examples) {
        Vec::new()
    } else {
        corpus(cfg)?
    };
    Ok(vec![run_one(suite, cfg, &semigroups)?])
}

fn run_one(suite: Suite, cfg: &VerifyConfig, semigroups: &[FiniteSemigroup]) -> Result<SuiteReport> {
    let tally = match suite {
        Suite::Enumeration => enumeration(cfg)?,
        Suite::Duality => duality(semigroups),
        Suite::Equivalence => equivalence(semigroups)?,
        Suite::Algebraic => algebraic(semigroups),
        Suite::Structure => structure(semigroups),
        Suite::Central => central(semigroups),
        Suite::Dynamics => dynamics(semigroups),
        Suite::Products => products(cfg)?,
        Suite::Examples => examples()?,
        Suite::All => unreachable!("expanded by run_suite"),
    };
    Ok(SuiteReport {
        suite,
        max_order: cfg.max_order,
        seed: cfg.seed,
        samples: cfg.samples,
        checks: tally.checks,
    })
}

/// Independent associativity test by the triple loop.
fn brute_associative(n: usize, table: &[usize]) -> bool {
    (0..n).all(|x| {
        (0..n).all(|y| (0..n).all(|z| table[table[x * n + y] * n + z] == table[x * n + table[y * n + z]]))
    })
}

fn enumeration(cfg: &VerifyConfig) -> Result<Tally> {
    const KNOWN: [usize; 3] = [1, 8, 113];
    let names = ["labeled_counts_match_brute_force", "labeled_counts_match_known", "sampled_tables_associative"];
    let mut t = Tally::new(&names);
    for n in 1..=cfg.exhaustive_order() {
        let enumerated: Vec<FiniteSemigroup> = enumerate_semigroups(n)?.collect();
        let total = n.pow((n * n) as u32);
        let brute = (0..total)
            .into_par_iter()
            .filter(|&code| {
                let mut table = vec![0usize; n * n];
                let mut c = code;
                for cell in table.iter_mut().rev() {
                    *cell = c % n;
                    c /= n;
                }
                brute_associative(n, &table)
            })
            .count();
        t.check(names[0], brute == enumerated.len(), || {
            format!("order {n}: enumerated {}, brute force {brute}", enumerated.len())
        });
        t.check(names[1], KNOWN[n - 1] == enumerated.len(), || {
            format!("order {n}: enumerated {}, expected {}", enumerated.len(), KNOWN[n - 1])
        });
    }
    if let Some(seed) = cfg.seed {
        for n in EXHAUSTIVE_LIMIT + 1..=cfg.max_order {
            let sampled = sample_semigroups(n, cfg.samples, seed)?;
            let distinct = sampled.iter().map(|s| s.rows()).collect::<std::collections::HashSet<_>>().len();
            for s in &sampled {
                let table: Vec<usize> = s.rows().concat();
                t.check(names[2], brute_associative(n, &table), || describe(s));
            }
            t.check(names[2], distinct == sampled.len(), || format!("order {n}: duplicate samples"));
        }
    }
    Ok(t)
}

fn duality(semigroups: &[FiniteSemigroup]) -> Tally {
    let names = ["f_thick_iff_complement_not_f_syndetic", "f_syndetic_iff_complement_not_f_thick"];
    sweep(&names, semigroups, |s, t| {
        for f in generators(s) {
            let v0 = f.generator();
            for a in ElementSet::all_subsets(s.order()) {
                let c = a.complement();
                let inst = || format!("{} A={a} {f}", describe(s));
                t.check(names[0], f_thick_mesh(s, &a, v0) == !f_syndetic_definitional(s, &c, v0), inst);
                t.check(names[1], f_syndetic_definitional(s, &a, v0) == !f_thick_mesh(s, &c, v0), inst);
            }
        }
    })
}

/// Named semigroups on at most four points, used for the explicit-family oracles.
fn small_named() -> Result<Vec<FiniteSemigroup>> {
    ["Z4", "LZ4", "RZ4", "RB2x2", "N4", "M3,2", "M4,1", "M2,3", "T2"]
        .iter()
        .map(|spec| make_family(spec.parse()?))
        .collect()
}

fn literal_mesh(fam: &ExplicitFamily, a: &ElementSet) -> bool {
    !fam.contains(&a.complement())
}

fn nonempty_subsets(v: &ElementSet) -> impl Iterator<Item = ElementSet> {
    v.subsets().filter(|h| !h.is_empty())
}

/// F-thick read literally over every member `V` and every finite `H ⊆ V`.
fn literal_f_thick(s: &FiniteSemigroup, fam: &ExplicitFamily, a: &ElementSet) -> bool {
    fam.members.iter().any(|v| {
        nonempty_subsets(v).all(|h| {
            let meet = h.iter().fold(s.carrier(), |acc, x| acc.intersection(&s.left_quotient_unchecked(x, a)));
            literal_mesh(fam, &meet)
        })
    })
}

fn literal_f_syndetic(s: &FiniteSemigroup, fam: &ExplicitFamily, a: &ElementSet) -> bool {
    fam.members.iter().all(|v| {
        nonempty_subsets(v).any(|h| {
            let cover = h.iter().fold(s.empty_set(), |acc, x| acc.union(&s.left_quotient_unchecked(x, a)));
            fam.contains(&cover)
        })
    })
}

fn equivalence(semigroups: &[FiniteSemigroup]) -> Result<Tally> {
    let names = [
        "f_thick_mesh_vs_translates",
        "mesh_complement_vs_meets",
        "explicit_filter_axioms",
        "explicit_filter_round_trip",
        "explicit_mesh",
        "explicit_f_thick",
        "explicit_f_syndetic",
        "filter_product_vs_literal",
        "idempotent_filter_vs_literal",
    ];
    let mut t = sweep(&names, semigroups, |s, t| {
        for f in generators(s) {
            let v0 = f.generator();
            for a in ElementSet::all_subsets(s.order()) {
                let inst = || format!("{} A={a} {f}", describe(s));
                t.check(names[0], f_thick_mesh(s, &a, v0) == f_thick_translates(s, &a, v0), inst);
                t.check_result(names[1], Ok(mesh_member(&a, &f).ok() == mesh_member_dual(&a, &f).ok()), inst);
            }
        }
    });
    let mut small: Vec<FiniteSemigroup> = semigroups.iter().filter(|s| s.order() <= 4).cloned().collect();
    small.extend(small_named()?);
    let oracle = sweep(&names, &small, |s, t| {
        for f in generators(s) {
            let fam = f.members();
            let inst = || format!("{} {f}", describe(s));
            t.check(names[2], fam.is_filter(), inst);
            t.check_result(names[3], canonicalize_filter(&fam, true).map(|g| g == f), inst);
            for a in ElementSet::all_subsets(s.order()) {
                let inst = || format!("{} A={a} {f}", describe(s));
                t.check_result(names[4], mesh_member_dual(&a, &f).map(|m| m == literal_mesh(&fam, &a)), inst);
                t.check(names[5], literal_f_thick(s, &fam, &a) == f_thick_mesh(s, &a, f.generator()), inst);
                t.check(
                    names[6],
                    literal_f_syndetic(s, &fam, &a) == f_syndetic_definitional(s, &a, f.generator()),
                    inst,
                );
            }
            if s.order() <= EXHAUSTIVE_LIMIT {
                let literal_idempotent = fam
                    .members
                    .iter()
                    .all(|a| filter_product_contains(&f, &f, s, a).unwrap_or(false));
                t.check_result(names[8], is_idempotent_filter(&f, s).map(|v| v == literal_idempotent), inst);
                for g in generators(s) {
                    let Ok(prod) = filter_product(&f, &g, s) else {
                        t.check(names[7], false, inst);
                        continue;
                    };
                    for a in ElementSet::all_subsets(s.order()) {
                        t.check_result(names[7], filter_product_contains(&f, &g, s, &a).map(|v| v == prod.contains(&a)), || {
                            format!("{} A={a} F={f} G={g}", describe(s))
                        });
                    }
                }
            }
        }
    });
    t.merge(oracle);
    Ok(t)
}

fn algebraic(semigroups: &[FiniteSemigroup]) -> Tally {
    let names = [
        "thick_definitional_vs_minimal_left_ideal",
        "syndetic_definitional_vs_minimal_left_ideals",
        "f_thick_definitional_vs_minimal_left_ideal",
        "f_thick_translates_vs_minimal_left_ideal",
        "f_syndetic_definitional_vs_minimal_left_ideals",
        "f_thick_fip_vs_left_ideal",
    ];
    sweep(&names, semigroups, |s, t| {
        for a in ElementSet::all_subsets(s.order()) {
            let inst = || format!("{} A={a}", describe(s));
            t.check_result(names[0], is_thick(s, &a).map(|v| v.agree()), inst);
            t.check_result(names[1], is_syndetic(s, &a).map(|v| v.agree()), inst);
        }
        let families = small_families(s);
        for f in idempotent_generators(s) {
            let fs = FilterSemigroup::new(s, &f).expect("idempotent");
            let v0 = f.generator();
            for a in ElementSet::all_subsets(s.order()) {
                let inst = || format!("{} A={a} {f}", describe(s));
                let alg = fs.thick_algebraic(&a);
                t.check(names[2], f_thick_mesh(s, &a, v0) == alg, inst);
                t.check(names[3], f_thick_translates(s, &a, v0) == alg, inst);
                t.check(names[4], f_syndetic_definitional(s, &a, v0) == fs.syndetic_algebraic(&a), inst);
            }
            for members in &families {
                let fam = ExplicitFamily::new(s.order(), members.clone()).expect("matching carriers");
                t.check_result(names[5], has_f_thick_fip(s, &fam, &f).map(|v| v.agree()), || {
                    format!("{} family={members:?} {f}", describe(s))
                });
            }
        }
    })
}

/// The smallest ideal as the intersection of all principal two-sided ideals.
fn smallest_ideal_oracle(s: &FiniteSemigroup) -> ElementSet {
    (0..s.order()).fold(s.carrier(), |acc, a| {
        let mut j = ElementSet::singleton(s.order(), a);
        for x in 0..s.order() {
            j.insert(s.mul(x, a));
            j.insert(s.mul(a, x));
            for y in 0..s.order() {
                j.insert(s.mul(s.mul(x, a), y));
            }
        }
        acc.intersection(&j)
    })
}

fn structure(semigroups: &[FiniteSemigroup]) -> Tally {
    let names = [
        "idempotents_exist",
        "smallest_ideal_is_union_of_minimal_left_ideals",
        "smallest_ideal_is_union_of_minimal_right_ideals",
        "minimal_cells_are_groups",
        "minimal_idempotents_are_order_minimal",
        "subsemigroup_smallest_ideal_is_trace",
        "closed_family_intersection_is_subsemigroup",
    ];
    sweep(&names, semigroups, |s, t| {
        let cat = IdealCatalog::new(s);
        let inst = || describe(s);
        let k = smallest_ideal_oracle(s);
        t.check(names[0], !cat.idempotents.is_empty(), inst);
        t.check(names[1], cat.minimal_left_ideals.iter().fold(s.empty_set(), |a, l| a.union(l)) == k, inst);
        t.check(names[2], cat.minimal_right_ideals.iter().fold(s.empty_set(), |a, r| a.union(r)) == k, inst);
        for l in &cat.minimal_left_ideals {
            for r in &cat.minimal_right_ideals {
                t.check_result(names[3], group_cell_check(s, l, r), || format!("{} L={l} R={r}", describe(s)));
            }
        }
        t.check(names[4], minimal_idempotents(s) == order_minimal_idempotents(s), inst);
        for sub in s.subsemigroups().into_iter().filter(|u| u.meets(&k)) {
            t.check_result(names[5], relative_smallest_ideal(s, &sub).map(|r| r == sub.intersection(&k)), || {
                format!("{} T={sub}", describe(s))
            });
        }
        let subsets: Vec<ElementSet> = ElementSet::all_subsets(s.order()).collect();
        let families: Vec<Vec<ElementSet>> = if subsets.len() <= 8 {
            (1u32..1 << subsets.len())
                .map(|mask| {
                    subsets
                        .iter()
                        .enumerate()
                        .filter(|(i, _)| mask >> i & 1 == 1)
                        .map(|(_, &a)| a)
                        .collect()
                })
                .collect()
        } else {
            small_families(s)
        };
        for members in families {
            let fam = ExplicitFamily::new(s.order(), members.clone()).expect("matching carriers");
            match directed_family_subsemigroup_check(s, &fam) {
                Ok(d) => t.check(names[6], d.product_closed, || format!("{} family={members:?}", describe(s))),
                Err(Error::HypothesisFails { .. } | Error::NoFip(_) | Error::EmptyMemberSet) => {}
                Err(e) => t.check(names[6], false, || format!("{} family={members:?} ({e})", describe(s))),
            }
        }
    })
}

fn central(semigroups: &[FiniteSemigroup]) -> Tally {
    let names = [
        "return_set_conditions_agree",
        "very_strong_fast_vs_search",
        "very_strong_has_right_ideal_witness",
        "thickly_iff_complement_not_strongly",
        "strongly_vs_directed_families",
        "thickly_vs_directed_families",
        "directed_family_construction",
        "strong_meets_thick_is_central",
    ];
    sweep(&names, semigroups, |s, t| {
        let subsets: Vec<ElementSet> = ElementSet::all_subsets(s.order()).collect();
        for f in idempotent_generators(s) {
            let fs = FilterSemigroup::new(s, &f).expect("idempotent");
            let thick: Vec<ElementSet> = subsets.iter().copied().filter(|d| fs.thick_algebraic(d)).collect();
            let thick_families: Vec<ExplicitFamily> = small_families(s)
                .into_iter()
                .map(|m| ExplicitFamily::new(s.order(), m).expect("matching carriers"))
                .filter(|fam| fs.thick_algebraic(&fam.intersection()))
                .collect();
            for &a in &subsets {
                let inst = || format!("{} A={a} {f}", describe(s));
                let outcomes: Result<Vec<bool>> = Condition::ALL
                    .iter()
                    .map(|&c| condition_with(&fs, &a, c).map(|o| o.holds))
                    .collect();
                t.check_result(names[0], outcomes.map(|v| v.iter().all(|&x| x == v[0])), || {
                    format!("{} ({:?})", inst(), Condition::ALL.map(|c| condition_with(&fs, &a, c).map(|o| o.holds)))
                });
                let fast = vsfc_with(&fs, &a);
                t.check_result(names[1], vsfc_brute_force(s, &a, &f).map(|b| b.is_some() == fast.is_some()), inst);
                if fast.is_some() {
                    t.check_result(names[2], vsfc_right_ideal_witness(s, &a, &f).map(|_| true), inst);
                }
                let strongly = fs.is_strongly_f_central(&a);
                t.check(names[3], fs.is_thickly_f_central(&a) == !fs.is_strongly_f_central(&a.complement()), inst);
                t.check_result(names[4], strongly_f_central_combinatorial(&fs, &a).map(|c| c == strongly), inst);
                t.check_result(
                    names[5],
                    thickly_f_central_combinatorial(&fs, &a).map(|c| c == fs.is_thickly_f_central(&a)),
                    inst,
                );
                if !strongly {
                    continue;
                }
                for fam in &thick_families {
                    let d = fam.intersection();
                    let inst = || format!("{} A={a} family={:?} {f}", describe(s), fam.members);
                    let res = (|| {
                        let (_, p) = fs
                            .idempotent_below(&d, &a)
                            .ok_or_else(|| Error::TheoremViolation("no idempotent of A in a left ideal inside the family".into()))?;
                        let dfam = build_directed_family(s, &a, p, DIRECTED_FAMILY_CAP)?;
                        verify_directed_family(s, &a, fam, &dfam)
                    })();
                    t.check_result(names[6], res, inst);
                }
                for d in &thick {
                    t.check(names[7], fs.is_f_central(&a.intersection(d)), || {
                        format!("{} A={a} D={d} {f}", describe(s))
                    });
                }
            }
        }
    })
}

fn fixed_points_hold(sys: &FiniteDynamicalSystem) -> bool {
    let s = sys.semigroup();
    sys.acting().iter().filter(|&p| s.is_idempotent(p)).all(|p| {
        (0..sys.phase_order()).all(|x| {
            let y = sys.p_transform(p, x).expect("acting");
            sys.p_transform(p, y).expect("acting") == y
        })
    })
}

fn dynamics(semigroups: &[FiniteSemigroup]) -> Tally {
    let names = [
        "central_has_dynamical_witness",
        "dynamical_witness_is_central",
        "idempotent_fixed_point",
        "recurrent_point_exists",
        "recurrent_point_exists_trivial_filter",
    ];
    sweep(&names, semigroups, |s, t| {
        let fs_trivial = FilterSemigroup::trivial(s);
        let subsets: Vec<ElementSet> = ElementSet::all_subsets(s.order()).collect();
        for &a in subsets.iter().filter(|a| fs_trivial.is_f_central(a)) {
            let res = find_central_witness(s, &a).map(|w| w.is_some());
            t.check_result(names[0], res, || format!("{} A={a}", describe(s)));
        }
        let monoid = monoid_extension_system(s);
        for (kind, labeled) in witness_systems(s) {
            t.check(names[2], fixed_points_hold(&labeled.system), || format!("{} system={kind}", describe(s)));
            match dynamical_witnesses(&labeled.system) {
                Ok(ws) => {
                    for (x, y, u, b) in ws {
                        t.check(names[1], fs_trivial.is_f_central(&b), || {
                            format!("{} system={kind} x={x} y={y} U={u} B={b}", describe(s))
                        });
                    }
                }
                Err(Error::SearchBoundExceeded { .. }) => t.entry(names[1]).skipped += 1,
                Err(e) => t.check(names[1], false, || format!("{} system={kind} ({e})", describe(s))),
            }
        }
        let families = small_families(s);
        for f in idempotent_generators(s) {
            let fs = FilterSemigroup::new(s, &f).expect("idempotent");
            let name = if f.generator().is_full() { names[4] } else { names[3] };
            let canonical = match canonical_minimal_system(s, &f) {
                Ok(c) => c,
                Err(e) => {
                    t.check(name, false, || format!("{} {f} ({e})", describe(s)));
                    continue;
                }
            };
            t.check(names[2], fixed_points_hold(&canonical.system), || format!("{} canonical {f}", describe(s)));
            let fip: Vec<ExplicitFamily> = families
                .iter()
                .map(|m| ExplicitFamily::new(s.order(), m.clone()).expect("matching carriers"))
                .filter(|fam| fs.thick_algebraic(&fam.intersection()))
                .collect();
            for &b in subsets.iter().filter(|b| fs.is_strongly_f_central(b)) {
                for fam in &fip {
                    for sys in [&canonical.system, &monoid.system] {
                        let res = find_recurrent_point(s, &f, &b, fam, sys).map(|_| true);
                        t.check_result(name, res, || {
                            format!("{} B={b} family={:?} {f} phase={}", describe(s), fam.members, sys.phase_order())
                        });
                    }
                }
            }
        }
    })
}

/// Thickness by columns: `C` is thick iff `S·x ⊆ C` for some `x`.
fn columns(s: &FiniteSemigroup) -> Vec<ElementSet> {
    (0..s.order())
        .map(|x| {
            let mut col = s.empty_set();
            for y in 0..s.order() {
                col.insert(s.mul(y, x));
            }
            col
        })
        .collect()
}

fn thick_by_columns(cols: &[ElementSet], c: &ElementSet) -> bool {
    cols.iter().any(|col| col.is_subset(c))
}

fn products(cfg: &VerifyConfig) -> Result<Tally> {
    let names = [
        "smallest_ideal_of_product_is_rectangle",
        "strongly_central_rectangles",
        "thickly_central_rectangles",
        "thick_sets_have_thick_projections",
        "complement_rectangle_contained",
        "named_strongly_central_rectangles",
        "named_thickly_central_rectangles",
        "named_thick_projections",
    ];
    let mut semigroups = Vec::new();
    for n in 1..=cfg.exhaustive_order() {
        semigroups.extend(enumerate_semigroups(n)?);
    }
    let pairs: Vec<(usize, usize)> = (0..semigroups.len())
        .flat_map(|i| (0..semigroups.len()).map(move |j| (i, j)))
        .collect();
    let catalogs: Vec<IdealCatalog> = semigroups.iter().map(IdealCatalog::new).collect();
    let cols: Vec<Vec<ElementSet>> = semigroups.iter().map(columns).collect();
    let mut t = sweep(&names, &pairs, |&(i, j), t| {
        let (s, u) = (&semigroups[i], &semigroups[j]);
        let inst = || format!("{} × {}", describe(s), describe(u));
        let Ok((p, codec)) = direct_product(s, u) else {
            t.check(names[0], false, inst);
            return;
        };
        let fs_s = FilterSemigroup {
            semigroup: s,
            filter: Filter::trivial(s.order()),
            catalog: catalogs[i].clone(),
        };
        let fs_u = FilterSemigroup {
            semigroup: u,
            filter: Filter::trivial(u.order()),
            catalog: catalogs[j].clone(),
        };
        let fs_p = FilterSemigroup::trivial(&p);
        t.check(
            names[0],
            fs_p.catalog.smallest_ideal == codec.rectangle(&catalogs[i].smallest_ideal, &catalogs[j].smallest_ideal),
            inst,
        );
        for a in ElementSet::all_subsets(s.order()) {
            for b in ElementSet::all_subsets(u.order()) {
                let rect = codec.rectangle(&a, &b);
                let inst = || format!("{} × {} A={a} B={b}", describe(s), describe(u));
                if fs_s.is_strongly_f_central(&a) && fs_u.is_strongly_f_central(&b) {
                    t.check(names[1], fs_p.is_strongly_f_central(&rect), inst);
                }
                if fs_s.is_thickly_f_central(&a) && fs_u.is_thickly_f_central(&b) {
                    t.check(names[2], fs_p.is_thickly_f_central(&rect), inst);
                }
                let lhs = codec.rectangle(&a.complement(), &b.complement());
                t.check(names[4], lhs.is_subset(&rect.complement()), inst);
            }
        }
        let pcols = columns(&p);
        for c in ElementSet::all_subsets(p.order()).filter(|c| !c.is_empty()) {
            if thick_by_columns(&pcols, &c) {
                let ok = thick_by_columns(&cols[i], &codec.project_left(&c))
                    && thick_by_columns(&cols[j], &codec.project_right(&c));
                t.check(names[3], ok, || format!("{} × {} C={c}", describe(s), describe(u)));
            }
        }
    });

    // the same statements through the public instance API on named families
    let named: Vec<FiniteSemigroup> = ["trivial", "Z2", "Z3", "LZ2", "LZ3", "RZ2", "RZ3", "N2", "N3", "M2,1", "M3,1", "M2,2"]
        .iter()
        .map(|spec| make_family(spec.parse()?))
        .collect::<Result<_>>()?;
    let named: Vec<FiniteSemigroup> = named.into_iter().filter(|s| s.order() <= cfg.exhaustive_order()).collect();
    let named_pairs: Vec<(usize, usize)> = (0..named.len())
        .flat_map(|i| (0..named.len()).map(move |j| (i, j)))
        .collect();
    let mut equal = 0u64;
    let mut compared = 0u64;
    let named_tally = sweep(&names, &named_pairs, |&(i, j), t| {
        let (s, u) = (&named[i], &named[j]);
        for a in ElementSet::all_subsets(s.order()) {
            for b in ElementSet::all_subsets(u.order()) {
                let inst = || format!("{} × {} A={a} B={b}", s.label(), u.label());
                let Ok(pi) = ProductInstance::new(s.clone(), u.clone(), a, b) else {
                    t.check(names[5], false, inst);
                    continue;
                };
                t.check_result(names[5], check_product_strongly_central(&pi).map(|c| c.holds()), inst);
                t.check_result(names[6], check_product_thickly_central(&pi).map(|c| c.holds()), inst);
                t.check(names[4], check_complement_rectangle(&pi).contained, inst);
                if a.is_empty() && b.is_empty() {
                    for c in ElementSet::all_subsets(pi.product.order()).filter(|c| !c.is_empty()) {
                        t.check_result(
                            names[7],
                            check_projection_thick(s, u, &pi.product, &pi.codec, &c).map(|r| r.holds()),
                            || format!("{} × {} C={c}", s.label(), u.label()),
                        );
                    }
                }
            }
        }
    });
    t.merge(named_tally);
    for (i, j) in &named_pairs {
        let (s, u) = (&named[*i], &named[*j]);
        for a in ElementSet::all_subsets(s.order()) {
            for b in ElementSet::all_subsets(u.order()) {
                if let Ok(pi) = ProductInstance::new(s.clone(), u.clone(), a, b) {
                    compared += 1;
                    equal += check_complement_rectangle(&pi).equal as u64;
                }
            }
        }
    }
    t.note(
        names[4],
        format!("the equality Aᶜ × Bᶜ = (A × B)ᶜ held on {equal} of {compared} named-family instances"),
    );
    Ok(t)
}

fn examples() -> Result<Tally> {
    let names = [
        "even_residues_f_thick_not_thick",
        "odd_residues_syndetic_not_f_syndetic",
        "even_residues_relative_profile",
    ];
    let mut t = Tally::new(&names);
    let z10 = make_family("Z10".parse()?)?;
    let f = Filter::parse_literal(10, "filter=2")?;
    let evens = ElementSet::parse_literal(10, "0,2,4,6,8")?;
    let odds = evens.complement();
    let v0 = f.generator();
    t.check(
        names[0],
        f_thick_mesh(&z10, &evens, v0) && f_thick_translates(&z10, &evens, v0) && !is_thick(&z10, &evens)?.value(),
        || "Z10 A=evens filter=2".into(),
    );
    t.check(
        names[1],
        !f_syndetic_definitional(&z10, &odds, v0) && is_syndetic(&z10, &odds)?.value(),
        || "Z10 A=odds filter=2".into(),
    );
    let g = Filter::parse_literal(10, "filter=0,2,4,6,8")?;
    let fs = FilterSemigroup::new(&z10, &g)?;
    t.check(
        names[2],
        fs.thick_algebraic(&evens) && fs.is_strongly_f_central(&evens) && !fs.syndetic_algebraic(&odds),
        || "Z10 A=evens filter=0,2,4,6,8".into(),
    );
    Ok(t)
}
