use std::fmt;

use super::conditions::vsfc_with;
use super::{f_syndetic_definitional, f_thick_mesh, f_thick_translates, FilterSemigroup};
use crate::error::Result;
use crate::filter::Filter;
use crate::report::{yes_no, Record};
use crate::semigroup::FiniteSemigroup;
use crate::set::ElementSet;

/// Which implementation produced a verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Route {
    Definitional,
    Translates,
    Algebraic,
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Route::Definitional => "definitional",
            Route::Translates => "translates",
            Route::Algebraic => "algebraic",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PredicateVerdict {
    pub name: &'static str,
    /// `None` when the predicate needs an idempotent filter and the filter is not one.
    pub value: Option<bool>,
    pub routes: Vec<(Route, bool)>,
    pub witness: Option<String>,
}

impl PredicateVerdict {
    fn single(name: &'static str, value: Option<bool>, witness: Option<String>) -> Self {
        Self {
            name,
            value,
            routes: value.map(|v| vec![(Route::Definitional, v)]).unwrap_or_default(),
            witness,
        }
    }

    pub fn agree(&self) -> bool {
        self.routes.iter().all(|&(_, v)| Some(v) == self.value)
    }
}

/// Largeness profile of a set relative to a semigroup and a filter.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassificationReport {
    pub semigroup: String,
    pub order: usize,
    pub set: ElementSet,
    pub filter: Filter,
    pub filter_idempotent: bool,
    pub predicates: Vec<PredicateVerdict>,
    /// Strongly F-central and F-thick should make the set F-central; `None`
    /// when the filter is not idempotent.
    pub strong_and_thick_implies_central: Option<bool>,
}

impl ClassificationReport {
    pub fn get(&self, name: &str) -> Option<&PredicateVerdict> {
        self.predicates.iter().find(|p| p.name == name)
    }

    pub fn value(&self, name: &str) -> Option<bool> {
        self.get(name).and_then(|p| p.value)
    }

    pub fn all_agree(&self) -> bool {
        self.predicates.iter().all(|p| p.agree())
    }

    pub fn records(&self) -> Vec<Record> {
        let mut head = Record::new("record", "classification");
        head.push("semigroup", &self.semigroup)
            .push("order", self.order)
            .push("set", self.set.to_literal())
            .push("filter", self.filter.to_literal())
            .push("filter_idempotent", self.filter_idempotent)
            .push("all_routes_agree", self.all_agree())
            .push("strong_and_thick_implies_central", yes_no(self.strong_and_thick_implies_central));
        let mut out = vec![head];
        for p in &self.predicates {
            let mut r = Record::new("predicate", p.name);
            r.push("value", yes_no(p.value));
            for (route, v) in &p.routes {
                r.push(&route.to_string(), v);
            }
            r.push("agree", p.agree());
            r.push("witness", p.witness.as_deref().unwrap_or("-"));
            out.push(r);
        }
        out
    }

    pub fn human(&self) -> String {
        let mut out = format!(
            "{} (order {}), A = {}, {}{}\n",
            self.semigroup,
            self.order,
            self.set,
            self.filter,
            if self.filter_idempotent { "" } else { " (not idempotent)" }
        );
        for p in &self.predicates {
            let routes: Vec<String> = p.routes.iter().map(|(r, v)| format!("{r}={v}")).collect();
            out.push_str(&format!(
                "  {:<26} {:<9} {}{}{}\n",
                p.name,
                yes_no(p.value),
                routes.join(" "),
                if p.agree() { "" } else { "  DISAGREE" },
                p.witness.as_ref().map(|w| format!("  [{w}]")).unwrap_or_default()
            ));
        }
        if let Some(v) = self.strong_and_thick_implies_central {
            out.push_str(&format!("  strong ∧ thick ⟹ central   {v}\n"));
        }
        out
    }
}

fn with_routes(name: &'static str, routes: Vec<(Route, bool)>, witness: Option<String>) -> PredicateVerdict {
    PredicateVerdict {
        name,
        value: routes.first().map(|&(_, v)| v),
        routes,
        witness,
    }
}

fn largeness_block(fs: &FilterSemigroup, a: &ElementSet, names: [&'static str; 6]) -> Vec<PredicateVerdict> {
    let s = fs.semigroup;
    let v0 = fs.closure();
    let thick_witness = fs
        .minimal_left_ideals()
        .iter()
        .find(|l| l.is_subset(a))
        .map(|l| format!("L={l}"));
    let thick = with_routes(
        names[0],
        vec![
            (Route::Definitional, f_thick_mesh(s, a, v0)),
            (Route::Translates, f_thick_translates(s, a, v0)),
            (Route::Algebraic, fs.thick_algebraic(a)),
        ],
        thick_witness,
    );
    let syndetic = with_routes(
        names[1],
        vec![
            (Route::Definitional, f_syndetic_definitional(s, a, v0)),
            (Route::Algebraic, fs.syndetic_algebraic(a)),
        ],
        None,
    );
    let central_witness = fs
        .catalog
        .minimal_idempotents
        .intersection(a)
        .first()
        .map(|q| format!("q={q}"));
    let central = PredicateVerdict::single(names[2], Some(fs.is_f_central(a)), central_witness);
    let strongly = PredicateVerdict::single(names[3], Some(fs.is_strongly_f_central(a)), None);
    let thickly_witness = fs
        .minimal_left_ideals()
        .iter()
        .find(|l| fs.idempotents_of(l).is_subset(a))
        .map(|l| format!("L={l}"));
    let thickly = PredicateVerdict::single(names[4], Some(fs.is_thickly_f_central(a)), thickly_witness);
    let vsfc = vsfc_with(fs, a);
    let very = PredicateVerdict::single(names[5], Some(vsfc.is_some()), vsfc.map(|w| format!("A={w}")));
    vec![thick, syndetic, central, strongly, thickly, very]
}

const PLAIN: [&str; 6] = [
    "thick",
    "syndetic",
    "central",
    "strongly_central",
    "thickly_central",
    "very_strongly_central",
];

const RELATIVE: [&str; 6] = [
    "f_thick",
    "f_syndetic",
    "f_central",
    "strongly_f_central",
    "thickly_f_central",
    "very_strongly_f_central",
];

/// Runs every predicate on `(S, A, F)`.
pub fn classify(s: &FiniteSemigroup, a: &ElementSet, f: &Filter) -> Result<ClassificationReport> {
    s.check_set(a)?;
    f.generator().require_order(s.order())?;
    let mut predicates = largeness_block(&FilterSemigroup::trivial(s), a, PLAIN);
    let (relative, implication, idempotent) = match FilterSemigroup::new(s, f) {
        Ok(fs) => {
            let block = largeness_block(&fs, a, RELATIVE);
            let strong = block[3].value == Some(true);
            let thick = block[0].value == Some(true);
            let central = block[2].value == Some(true);
            (block, Some(!(strong && thick) || central), true)
        }
        Err(_) => {
            // only the definitional routes exist for a non-idempotent filter
            let v0 = f.generator();
            let thick = with_routes(
                "f_thick",
                vec![
                    (Route::Definitional, f_thick_mesh(s, a, v0)),
                    (Route::Translates, f_thick_translates(s, a, v0)),
                ],
                None,
            );
            let syndetic = with_routes(
                "f_syndetic",
                vec![(Route::Definitional, f_syndetic_definitional(s, a, v0))],
                None,
            );
            let mut block = vec![thick, syndetic];
            block.extend(RELATIVE[2..].iter().map(|&n| PredicateVerdict::single(n, None, None)));
            (block, None, false)
        }
    };
    predicates.extend(relative);
    Ok(ClassificationReport {
        semigroup: s.label(),
        order: s.order(),
        set: *a,
        filter: *f,
        filter_idempotent: idempotent,
        predicates,
        strong_and_thick_implies_central: implication,
    })
}
