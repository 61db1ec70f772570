//! Direct products `S × T` and the search over filter versions of the product theorems.
//!
//! Sets on `S × T` use the row-major [`PairCodec`]. The product filter is
//! defined here as the one generated by `V₀ × W₀`.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::filter::Filter;
use crate::ideals::IdealCatalog;
use crate::largeness::{is_thick, FilterSemigroup};
use crate::report::Record;
use crate::semigroup::{direct_product, enumerate_up_to, sample_semigroups, FiniteSemigroup, PairCodec, EXHAUSTIVE_LIMIT};
use crate::set::ElementSet;

/// Largest order accepted by [`conjecture_search`]; order 4 is sampled.
pub const SEARCH_ORDER_LIMIT: usize = 4;

#[derive(Debug, Clone)]
pub struct ProductInstance {
    pub left: FiniteSemigroup,
    pub right: FiniteSemigroup,
    pub a: ElementSet,
    pub b: ElementSet,
    pub filters: Option<(Filter, Filter)>,
    pub product: FiniteSemigroup,
    pub codec: PairCodec,
}

impl ProductInstance {
    pub fn new(left: FiniteSemigroup, right: FiniteSemigroup, a: ElementSet, b: ElementSet) -> Result<Self> {
        left.check_set(&a)?;
        right.check_set(&b)?;
        let (product, codec) = direct_product(&left, &right)?;
        Ok(Self {
            left,
            right,
            a,
            b,
            filters: None,
            product,
            codec,
        })
    }

    pub fn with_filters(mut self, f: Filter, g: Filter) -> Result<Self> {
        f.generator().require_order(self.left.order())?;
        g.generator().require_order(self.right.order())?;
        self.filters = Some((f, g));
        Ok(self)
    }

    /// `A × B` under the codec.
    pub fn rectangle(&self) -> ElementSet {
        self.codec.rectangle(&self.a, &self.b)
    }

    pub fn product_filter(&self) -> Option<Filter> {
        self.filters.map(|(f, g)| product_filter(&f, &g, &self.codec))
    }
}

/// The filter on `S × T` generated by `gen(F) × gen(G)`.
pub fn product_filter(f: &Filter, g: &Filter, codec: &PairCodec) -> Filter {
    Filter::principal(codec.rectangle(f.generator(), g.generator())).expect("rectangle of nonempty sets is nonempty")
}

/// Thickness of `C` and of its two projections.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ProjectionThick {
    pub set_thick: bool,
    pub left_thick: bool,
    pub right_thick: bool,
}

impl ProjectionThick {
    /// Thick `C` has thick projections.
    pub fn holds(&self) -> bool {
        !self.set_thick || (self.left_thick && self.right_thick)
    }
}

pub fn check_projection_thick(
    s: &FiniteSemigroup,
    t: &FiniteSemigroup,
    product: &FiniteSemigroup,
    codec: &PairCodec,
    c: &ElementSet,
) -> Result<ProjectionThick> {
    product.check_set(c)?;
    if c.is_empty() {
        return Err(Error::EmptyMemberSet);
    }
    Ok(ProjectionThick {
        set_thick: is_thick(product, c)?.definitional,
        left_thick: is_thick(s, &codec.project_left(c))?.definitional,
        right_thick: is_thick(t, &codec.project_right(c))?.definitional,
    })
}

/// A property evaluated on `A`, on `B`, and on `A × B`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ProductCheck {
    pub left: bool,
    pub right: bool,
    pub product: bool,
}

impl ProductCheck {
    /// The forward direction: both factors imply the product.
    pub fn holds(&self) -> bool {
        !(self.left && self.right) || self.product
    }

    /// Whether the product verdict also forced both factor verdicts here.
    pub fn converse_held(&self) -> bool {
        !self.product || (self.left && self.right)
    }
}

fn product_check(
    inst: &ProductInstance,
    pick: impl Fn(&FilterSemigroup, &ElementSet) -> bool,
) -> Result<ProductCheck> {
    let (left_fs, right_fs, product_fs) = match inst.filters {
        Some((f, g)) => (
            FilterSemigroup::new(&inst.left, &f)?,
            FilterSemigroup::new(&inst.right, &g)?,
            FilterSemigroup::new(&inst.product, &product_filter(&f, &g, &inst.codec))?,
        ),
        None => (
            FilterSemigroup::trivial(&inst.left),
            FilterSemigroup::trivial(&inst.right),
            FilterSemigroup::trivial(&inst.product),
        ),
    };
    Ok(ProductCheck {
        left: pick(&left_fs, &inst.a),
        right: pick(&right_fs, &inst.b),
        product: pick(&product_fs, &inst.rectangle()),
    })
}

/// Strong (F-)centrality of `A`, `B`, and `A × B`; filters come from the instance when present.
pub fn check_product_strongly_central(inst: &ProductInstance) -> Result<ProductCheck> {
    product_check(inst, |fs, a| fs.is_strongly_f_central(a))
}

pub fn check_product_thickly_central(inst: &ProductInstance) -> Result<ProductCheck> {
    product_check(inst, |fs, a| fs.is_thickly_f_central(a))
}

/// `Aᶜ × Bᶜ` against `(A × B)ᶜ`: the containment always holds, equality rarely.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ComplementCheck {
    pub contained: bool,
    pub equal: bool,
}

pub fn check_complement_rectangle(inst: &ProductInstance) -> ComplementCheck {
    let lhs = inst.codec.rectangle(&inst.a.complement(), &inst.b.complement());
    let rhs = inst.rectangle().complement();
    ComplementCheck {
        contained: lhs.is_subset(&rhs),
        equal: lhs == rhs,
    }
}

/// Whether the smallest ideal of `S × T` is the rectangle of the factors' smallest ideals.
pub fn smallest_ideal_is_rectangle(s: &FiniteSemigroup, t: &FiniteSemigroup) -> Result<bool> {
    let (product, codec) = direct_product(s, t)?;
    let k = IdealCatalog::new(&product).smallest_ideal;
    Ok(k == codec.rectangle(&IdealCatalog::new(s).smallest_ideal, &IdealCatalog::new(t).smallest_ideal))
}

/// Which product statement a search sweep tests.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Sweep {
    StronglyCentral,
    ThicklyCentral,
}

impl Sweep {
    pub fn name(self) -> &'static str {
        match self {
            Sweep::StronglyCentral => "strongly_f_central",
            Sweep::ThicklyCentral => "thickly_f_central",
        }
    }

    fn holds(self, fs: &FilterSemigroup, a: &ElementSet) -> bool {
        match self {
            Sweep::StronglyCentral => fs.is_strongly_f_central(a),
            Sweep::ThicklyCentral => fs.is_thickly_f_central(a),
        }
    }
}

/// A fully specified instance where both factors have the property and the product does not.
#[derive(Debug, Clone)]
pub struct Counterexample {
    pub sweep: Sweep,
    pub left: FiniteSemigroup,
    pub right: FiniteSemigroup,
    pub f: Filter,
    pub g: Filter,
    pub a: ElementSet,
    pub b: ElementSet,
}

impl Counterexample {
    fn record(&self) -> Record {
        let rows = |s: &FiniteSemigroup| {
            s.rows()
                .iter()
                .map(|r| r.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(","))
                .collect::<Vec<_>>()
                .join(";")
        };
        Record::new("counterexample", self.sweep.name())
            .with("left_order", self.left.order())
            .with("left_table", rows(&self.left))
            .with("right_order", self.right.order())
            .with("right_table", rows(&self.right))
            .with("left_filter", self.f.to_literal())
            .with("right_filter", self.g.to_literal())
            .with("left_set", self.a.to_literal())
            .with("right_set", self.b.to_literal())
    }
}

/// Counts for one `(|S|, |T|)` bucket.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct BucketCounts {
    pub pairs: usize,
    pub filter_pairs: usize,
    pub strongly_instances: usize,
    pub thickly_instances: usize,
}

#[derive(Debug, Clone)]
pub struct SearchReport {
    pub max_order: usize,
    pub seed: u64,
    pub samples: usize,
    pub semigroups: usize,
    pub buckets: BTreeMap<(usize, usize), BucketCounts>,
    pub strongly_counterexamples: usize,
    pub thickly_counterexamples: usize,
    /// First counterexample per sweep, in enumeration order.
    pub first: Vec<Counterexample>,
}

impl SearchReport {
    pub fn pairs(&self) -> usize {
        self.buckets.values().map(|b| b.pairs).sum()
    }

    pub fn instances(&self, sweep: Sweep) -> usize {
        self.buckets
            .values()
            .map(|b| match sweep {
                Sweep::StronglyCentral => b.strongly_instances,
                Sweep::ThicklyCentral => b.thickly_instances,
            })
            .sum()
    }

    pub fn confirmed(&self) -> bool {
        self.first.is_empty()
    }

    pub fn records(&self) -> Vec<Record> {
        let mut head = Record::new("search", "product_filter_conjecture");
        head.push("evidence", "empirical; exhaustive over the listed instances only, not a proof")
            .push("product_filter", "generated by gen(F) × gen(G)")
            .push("max_order", self.max_order)
            .push("seed", self.seed)
            .push("samples", self.samples)
            .push("semigroups", self.semigroups)
            .push("pairs", self.pairs())
            .push("strongly_instances", self.instances(Sweep::StronglyCentral))
            .push("strongly_counterexamples", self.strongly_counterexamples)
            .push("thickly_instances", self.instances(Sweep::ThicklyCentral))
            .push("thickly_counterexamples", self.thickly_counterexamples)
            .push("outcome", if self.confirmed() { "confirmation" } else { "counterexample" });
        let mut out = vec![head];
        for ((m, n), b) in &self.buckets {
            out.push(
                Record::new("bucket", format!("{m}x{n}"))
                    .with("pairs", b.pairs)
                    .with("filter_pairs", b.filter_pairs)
                    .with("strongly_instances", b.strongly_instances)
                    .with("thickly_instances", b.thickly_instances),
            );
        }
        out.extend(self.first.iter().map(Counterexample::record));
        out
    }

    pub fn human(&self) -> String {
        let mut out = format!(
            "Product-filter search up to order {} (seed {}, {} sampled per sampled order)\n\
             product filter: generated by gen(F) × gen(G)\n\
             {} semigroups, {} ordered pairs\n",
            self.max_order,
            self.seed,
            self.samples,
            self.semigroups,
            self.pairs()
        );
        for sweep in [Sweep::StronglyCentral, Sweep::ThicklyCentral] {
            let bad = match sweep {
                Sweep::StronglyCentral => self.strongly_counterexamples,
                Sweep::ThicklyCentral => self.thickly_counterexamples,
            };
            out.push_str(&format!(
                "  {:<20} {} instances, {} counterexamples\n",
                sweep.name(),
                self.instances(sweep),
                bad
            ));
        }
        for c in &self.first {
            out.push_str(&format!(
                "  first {} counterexample: {} × {}, F = {}, G = {}, A = {}, B = {}\n",
                c.sweep.name(),
                c.left.label(),
                c.right.label(),
                c.f,
                c.g,
                c.a,
                c.b
            ));
        }
        out.push_str(if self.confirmed() {
            "outcome: confirmation on every scanned instance (empirical evidence, not a proof)\n"
        } else {
            "outcome: counterexample found (relative to the rectangle product filter)\n"
        });
        out
    }
}

/// Per-semigroup data reused across all pairs.
struct Prepared {
    semigroup: FiniteSemigroup,
    /// Each idempotent generator with its strongly and thickly central sets.
    filters: Vec<(Filter, Vec<ElementSet>, Vec<ElementSet>)>,
}

fn prepare(s: FiniteSemigroup) -> Prepared {
    let filters = ElementSet::all_subsets(s.order())
        .filter(|v| !v.is_empty() && s.is_product_closed(v))
        .map(|v| {
            let f = Filter::principal(v).expect("nonempty");
            let fs = FilterSemigroup::new(&s, &f).expect("product-closed");
            let subsets: Vec<ElementSet> = ElementSet::all_subsets(s.order()).collect();
            let strongly = subsets.iter().copied().filter(|a| fs.is_strongly_f_central(a)).collect();
            let thickly = subsets.iter().copied().filter(|a| fs.is_thickly_f_central(a)).collect();
            (f, strongly, thickly)
        })
        .collect();
    Prepared { semigroup: s, filters }
}

struct PairOutcome {
    counts: BucketCounts,
    strongly_bad: usize,
    thickly_bad: usize,
    first: Vec<Counterexample>,
}

fn scan_pair(left: &Prepared, right: &Prepared) -> Result<PairOutcome> {
    let (product, codec) = direct_product(&left.semigroup, &right.semigroup)?;
    let mut out = PairOutcome {
        counts: BucketCounts {
            pairs: 1,
            ..Default::default()
        },
        strongly_bad: 0,
        thickly_bad: 0,
        first: Vec::new(),
    };
    for (f, f_strong, f_thick) in &left.filters {
        for (g, g_strong, g_thick) in &right.filters {
            out.counts.filter_pairs += 1;
            let fs = FilterSemigroup::new(&product, &product_filter(f, g, &codec))?;
            for (sweep, xs, ys) in [
                (Sweep::StronglyCentral, f_strong, g_strong),
                (Sweep::ThicklyCentral, f_thick, g_thick),
            ] {
                for a in xs {
                    for b in ys {
                        let ok = sweep.holds(&fs, &codec.rectangle(a, b));
                        match sweep {
                            Sweep::StronglyCentral => out.counts.strongly_instances += 1,
                            Sweep::ThicklyCentral => out.counts.thickly_instances += 1,
                        }
                        if ok {
                            continue;
                        }
                        match sweep {
                            Sweep::StronglyCentral => out.strongly_bad += 1,
                            Sweep::ThicklyCentral => out.thickly_bad += 1,
                        }
                        if !out.first.iter().any(|c| c.sweep == sweep) {
                            out.first.push(Counterexample {
                                sweep,
                                left: left.semigroup.clone(),
                                right: right.semigroup.clone(),
                                f: *f,
                                g: *g,
                                a: *a,
                                b: *b,
                            });
                        }
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Tests whether products of strongly (thickly) F-central and G-central sets are
/// strongly (thickly) central for the rectangle product filter, over every pair of
/// semigroups up to `max_order`. Orders up to 3 are exhaustive; order 4 uses
/// `samples` semigroups drawn with `seed`. The result is deterministic.
pub fn conjecture_search(max_order: usize, seed: u64, samples: usize) -> Result<SearchReport> {
    if max_order == 0 || max_order > SEARCH_ORDER_LIMIT {
        return Err(Error::SizeLimitExceeded {
            what: "search order",
            requested: max_order,
            limit: SEARCH_ORDER_LIMIT,
        });
    }
    let mut corpus = enumerate_up_to(max_order.min(EXHAUSTIVE_LIMIT))?;
    for n in EXHAUSTIVE_LIMIT + 1..=max_order {
        corpus.extend(sample_semigroups(n, samples, seed)?);
    }
    let prepared: Vec<Prepared> = corpus.into_par_iter().map(prepare).collect();
    let pairs: Vec<(usize, usize)> = (0..prepared.len())
        .flat_map(|i| (0..prepared.len()).map(move |j| (i, j)))
        .collect();
    let outcomes: Vec<PairOutcome> = pairs
        .par_iter()
        .map(|&(i, j)| scan_pair(&prepared[i], &prepared[j]))
        .collect::<Result<_>>()?;

    let mut report = SearchReport {
        max_order,
        seed,
        samples: if max_order > EXHAUSTIVE_LIMIT { samples } else { 0 },
        semigroups: prepared.len(),
        buckets: BTreeMap::new(),
        strongly_counterexamples: 0,
        thickly_counterexamples: 0,
        first: Vec::new(),
    };
    for (&(i, j), o) in pairs.iter().zip(outcomes) {
        let key = (prepared[i].semigroup.order(), prepared[j].semigroup.order());
        let bucket = report.buckets.entry(key).or_default();
        bucket.pairs += o.counts.pairs;
        bucket.filter_pairs += o.counts.filter_pairs;
        bucket.strongly_instances += o.counts.strongly_instances;
        bucket.thickly_instances += o.counts.thickly_instances;
        report.strongly_counterexamples += o.strongly_bad;
        report.thickly_counterexamples += o.thickly_bad;
        for c in o.first {
            if !report.first.iter().any(|d| d.sweep == c.sweep) {
                report.first.push(c);
            }
        }
    }
    report.first.sort_by_key(|c| c.sweep);
    Ok(report)
}
