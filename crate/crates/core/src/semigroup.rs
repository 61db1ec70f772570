//! Finite semigroups stored as multiplication tables.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::set::{ElementSet, MAX_ORDER};

/// Largest order for which [`enumerate_semigroups`] scans every labeled table.
pub const EXHAUSTIVE_LIMIT: usize = 3;
/// Orders accepted by [`sample_semigroups`].
pub const SAMPLED_RANGE: std::ops::RangeInclusive<usize> = 4..=6;

/// A semigroup on the carrier `{0, …, n-1}` with `table[x*n + y] = x·y`.
///
/// Values are immutable once validated; every constructor goes through
/// [`FiniteSemigroup::from_table`], which checks associativity at all n³ triples.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FiniteSemigroup {
    order: usize,
    table: Vec<u8>,
    name: Option<String>,
}

impl FiniteSemigroup {
    /// Validates a table given as rows.
    pub fn from_rows(rows: &[Vec<usize>]) -> Result<Self> {
        let order = rows.len();
        let mut flat = Vec::with_capacity(order * order);
        for row in rows {
            if row.len() != order {
                return Err(Error::RaggedTable {
                    order,
                    len: row.len(),
                });
            }
            flat.extend_from_slice(row);
        }
        Self::from_table(order, &flat)
    }

    /// Validates a row-major flat table of length `order²`.
    pub fn from_table(order: usize, table: &[usize]) -> Result<Self> {
        if order == 0 {
            return Err(Error::PreconditionFailed("semigroup order must be positive".into()));
        }
        if order > MAX_ORDER {
            return Err(Error::SizeLimitExceeded {
                what: "semigroup order",
                requested: order,
                limit: MAX_ORDER,
            });
        }
        if table.len() != order * order {
            return Err(Error::RaggedTable {
                order,
                len: table.len(),
            });
        }
        for (i, &v) in table.iter().enumerate() {
            if v >= order {
                return Err(Error::TableIndexOutOfRange {
                    row: i / order,
                    col: i % order,
                    value: v,
                    order,
                });
            }
        }
        let s = Self {
            order,
            table: table.iter().map(|&v| v as u8).collect(),
            name: None,
        };
        if let Some((x, y, z)) = s.associativity_witness() {
            return Err(Error::AssociativityViolation {
                x,
                y,
                z,
                left: s.mul(s.mul(x, y), z),
                right: s.mul(x, s.mul(y, z)),
            });
        }
        Ok(s)
    }

    /// First triple (in lexicographic order) where associativity fails.
    fn associativity_witness(&self) -> Option<(usize, usize, usize)> {
        let n = self.order;
        for x in 0..n {
            for y in 0..n {
                let xy = self.mul(x, y);
                for z in 0..n {
                    if self.mul(xy, z) != self.mul(x, self.mul(y, z)) {
                        return Some((x, y, z));
                    }
                }
            }
        }
        None
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    /// The name if set, otherwise a short table fingerprint.
    pub fn label(&self) -> String {
        match &self.name {
            Some(n) => n.clone(),
            None => format!(
                "table[{}]",
                self.table.iter().map(|v| v.to_string()).collect::<String>()
            ),
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.table[x * self.order + y] as usize
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        (0..self.order)
            .map(|x| (0..self.order).map(|y| self.mul(x, y)).collect())
            .collect()
    }

    pub fn carrier(&self) -> ElementSet {
        ElementSet::full(self.order)
    }

    pub fn empty_set(&self) -> ElementSet {
        ElementSet::empty(self.order)
    }

    pub fn set(&self, indices: impl IntoIterator<Item = usize>) -> Result<ElementSet> {
        ElementSet::from_indices(self.order, indices)
    }

    fn check_index(&self, x: usize) -> Result<()> {
        if x >= self.order {
            return Err(Error::IndexOutOfRange {
                index: x,
                order: self.order,
            });
        }
        Ok(())
    }

    pub(crate) fn check_set(&self, a: &ElementSet) -> Result<()> {
        a.require_order(self.order)
    }

    pub fn is_idempotent(&self, x: usize) -> bool {
        self.mul(x, x) == x
    }

    /// `x⁻¹A = {y : x·y ∈ A}`.
    pub fn left_quotient(&self, x: usize, a: &ElementSet) -> Result<ElementSet> {
        self.check_index(x)?;
        self.check_set(a)?;
        Ok(self.left_quotient_unchecked(x, a))
    }

    pub(crate) fn left_quotient_unchecked(&self, x: usize, a: &ElementSet) -> ElementSet {
        let mut out = self.empty_set();
        let row = &self.table[x * self.order..(x + 1) * self.order];
        for (y, &v) in row.iter().enumerate() {
            if a.contains(v as usize) {
                out.insert(y);
            }
        }
        out
    }

    /// `A·B = {a·b : a ∈ A, b ∈ B}`.
    pub fn product_of_sets(&self, a: &ElementSet, b: &ElementSet) -> Result<ElementSet> {
        self.check_set(a)?;
        self.check_set(b)?;
        Ok(self.product_unchecked(a, b))
    }

    pub(crate) fn product_unchecked(&self, a: &ElementSet, b: &ElementSet) -> ElementSet {
        let mut out = self.empty_set();
        for x in a {
            for y in b {
                out.insert(self.mul(x, y));
            }
        }
        out
    }

    /// `H·x = {h·x : h ∈ H}`.
    pub(crate) fn right_translate(&self, h: &ElementSet, x: usize) -> ElementSet {
        let mut out = self.empty_set();
        for t in h {
            out.insert(self.mul(t, x));
        }
        out
    }

    /// `x·H = {x·h : h ∈ H}`.
    pub(crate) fn left_translate(&self, x: usize, h: &ElementSet) -> ElementSet {
        let mut out = self.empty_set();
        for t in h {
            out.insert(self.mul(x, t));
        }
        out
    }

    pub fn is_product_closed(&self, t: &ElementSet) -> bool {
        t.iter().all(|x| t.iter().all(|y| t.contains(self.mul(x, y))))
    }

    /// Smallest product-closed superset of `g`.
    pub fn generated_subsemigroup(&self, g: &ElementSet) -> Result<ElementSet> {
        self.check_set(g)?;
        if g.is_empty() {
            return Err(Error::EmptyGeneratorSet);
        }
        let mut cur = *g;
        loop {
            let next = cur.union(&self.product_unchecked(&cur, &cur));
            if next == cur {
                return Ok(cur);
            }
            cur = next;
        }
    }

    /// Every product-closed nonempty subset, in mask order (order ≤ 20).
    pub fn subsemigroups(&self) -> Vec<ElementSet> {
        ElementSet::all_subsets(self.order)
            .filter(|t| !t.is_empty() && self.is_product_closed(t))
            .collect()
    }

    /// Identity element, if the semigroup is a monoid.
    pub fn identity(&self) -> Option<usize> {
        (0..self.order).find(|&e| (0..self.order).all(|x| self.mul(e, x) == x && self.mul(x, e) == x))
    }

    /// Parses the text table format: a line with `n`, then `n` rows of
    /// space-separated indices. Lines starting with `#` and blank lines are skipped.
    pub fn parse_table(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (first_line, header) = lines.next().ok_or(Error::Parse {
            line: 1,
            msg: "missing order line".into(),
        })?;
        let order: usize = header.parse().map_err(|_| Error::Parse {
            line: first_line,
            msg: format!("expected a positive integer order, found {header:?}"),
        })?;
        if order == 0 {
            return Err(Error::Parse {
                line: first_line,
                msg: "order must be positive".into(),
            });
        }
        if order > MAX_ORDER {
            return Err(Error::SizeLimitExceeded {
                what: "semigroup order",
                requested: order,
                limit: MAX_ORDER,
            });
        }
        let mut rows = Vec::with_capacity(order);
        let mut last_line = first_line;
        for (line_no, line) in lines {
            if rows.len() == order {
                return Err(Error::Parse {
                    line: line_no,
                    msg: format!("unexpected extra row; table has {order} rows"),
                });
            }
            let row = line
                .split_whitespace()
                .map(|tok| {
                    tok.parse::<usize>().map_err(|_| Error::Parse {
                        line: line_no,
                        msg: format!("bad table entry {tok:?}"),
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            if row.len() != order {
                return Err(Error::Parse {
                    line: line_no,
                    msg: format!("expected {order} entries, found {}", row.len()),
                });
            }
            if let Some(&bad) = row.iter().find(|&&v| v >= order) {
                return Err(Error::Parse {
                    line: line_no,
                    msg: format!("entry {bad} outside [0, {order})"),
                });
            }
            rows.push(row);
            last_line = line_no;
        }
        if rows.len() != order {
            return Err(Error::Parse {
                line: last_line + 1,
                msg: format!("expected {order} rows, found {}", rows.len()),
            });
        }
        Self::from_rows(&rows)
    }

    /// Writes the table in the format read by [`FiniteSemigroup::parse_table`].
    pub fn to_table_text(&self) -> String {
        let mut out = String::new();
        if let Some(name) = &self.name {
            out.push_str(&format!("# {name}\n"));
        }
        out.push_str(&format!("{}\n", self.order));
        for row in self.rows() {
            let cells: Vec<String> = row.iter().map(|v| v.to_string()).collect();
            out.push_str(&cells.join(" "));
            out.push('\n');
        }
        out
    }
}

impl fmt::Debug for FiniteSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteSemigroup({}: {:?})", self.label(), self.rows())
    }
}

/// Named families with a fixed element ordering.
///
/// | family | elements (index order) | product |
/// |---|---|---|
/// | `Z{n}` | residues `0..n` | addition mod n |
/// | `LZ{k}` | `0..k` | `x·y = x` |
/// | `RZ{k}` | `0..k` | `x·y = y` |
/// | `RB{m}x{k}` | pairs `(i,j)` at index `i·k + j` | `(i,j)(k,l) = (i,l)` |
/// | `M{m},{r}` | `a¹ … a^{m+r-1}` at index `i-1` | powers, `a^{m+r} = a^m` |
/// | `N{n}` | `0..n`, zero is `0` | `x·y = 0` |
/// | `T{k}` | maps `f` as tuples `(f(0),…,f(k-1))` in lexicographic order | `(f·g)(x) = f(g(x))` |
/// | `trivial` | `0` | `0·0 = 0` |
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilySpec {
    Trivial,
    Cyclic(usize),
    LeftZero(usize),
    RightZero(usize),
    RectangularBand(usize, usize),
    Monogenic { index: usize, period: usize },
    Null(usize),
    FullTransformation(usize),
}

impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::UnsupportedSpec(s.to_string());
        let num = |t: &str| t.trim().parse::<usize>().map_err(|_| bad());
        let s = s.trim();
        if s.eq_ignore_ascii_case("trivial") {
            return Ok(FamilySpec::Trivial);
        }
        let pair = |t: &str, sep: char| -> Result<(usize, usize)> {
            let (a, b) = t.split_once(sep).ok_or_else(bad)?;
            Ok((num(a)?, num(b)?))
        };
        if let Some(rest) = s.strip_prefix("LZ") {
            Ok(FamilySpec::LeftZero(num(rest)?))
        } else if let Some(rest) = s.strip_prefix("RZ") {
            Ok(FamilySpec::RightZero(num(rest)?))
        } else if let Some(rest) = s.strip_prefix("RB") {
            let (m, k) = pair(rest, 'x')?;
            Ok(FamilySpec::RectangularBand(m, k))
        } else if let Some(rest) = s.strip_prefix('Z') {
            Ok(FamilySpec::Cyclic(num(rest)?))
        } else if let Some(rest) = s.strip_prefix('M') {
            let (index, period) = pair(rest, ',')?;
            Ok(FamilySpec::Monogenic { index, period })
        } else if let Some(rest) = s.strip_prefix('N') {
            Ok(FamilySpec::Null(num(rest)?))
        } else if let Some(rest) = s.strip_prefix('T') {
            Ok(FamilySpec::FullTransformation(num(rest)?))
        } else {
            Err(bad())
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FamilySpec::Trivial => write!(f, "trivial"),
            FamilySpec::Cyclic(n) => write!(f, "Z{n}"),
            FamilySpec::LeftZero(k) => write!(f, "LZ{k}"),
            FamilySpec::RightZero(k) => write!(f, "RZ{k}"),
            FamilySpec::RectangularBand(m, k) => write!(f, "RB{m}x{k}"),
            FamilySpec::Monogenic { index, period } => write!(f, "M{index},{period}"),
            FamilySpec::Null(n) => write!(f, "N{n}"),
            FamilySpec::FullTransformation(k) => write!(f, "T{k}"),
        }
    }
}

fn limit(what: &'static str, requested: usize) -> Result<()> {
    if requested > MAX_ORDER {
        return Err(Error::SizeLimitExceeded {
            what,
            requested,
            limit: MAX_ORDER,
        });
    }
    Ok(())
}

fn positive(spec: FamilySpec, v: usize) -> Result<()> {
    if v == 0 {
        return Err(Error::UnsupportedSpec(format!("{spec}: parameters must be positive")));
    }
    Ok(())
}

/// Builds a named family member. See [`FamilySpec`] for element orderings.
pub fn make_family(spec: FamilySpec) -> Result<FiniteSemigroup> {
    let build = |n: usize, f: &dyn Fn(usize, usize) -> usize| -> Result<FiniteSemigroup> {
        limit("family order", n)?;
        let table: Vec<usize> = (0..n * n).map(|i| f(i / n, i % n)).collect();
        FiniteSemigroup::from_table(n, &table)
    };
    let s = match spec {
        FamilySpec::Trivial => build(1, &|_, _| 0)?,
        FamilySpec::Cyclic(n) => {
            positive(spec, n)?;
            build(n, &|x, y| (x + y) % n)?
        }
        FamilySpec::LeftZero(k) => {
            positive(spec, k)?;
            build(k, &|x, _| x)?
        }
        FamilySpec::RightZero(k) => {
            positive(spec, k)?;
            build(k, &|_, y| y)?
        }
        FamilySpec::RectangularBand(m, k) => {
            positive(spec, m)?;
            positive(spec, k)?;
            limit("family order", m.saturating_mul(k))?;
            build(m * k, &|x, y| (x / k) * k + y % k)?
        }
        FamilySpec::Monogenic { index, period } => {
            positive(spec, index)?;
            positive(spec, period)?;
            let n = index + period - 1;
            // element i stands for a^(i+1)
            build(n, &|x, y| {
                let mut e = x + y + 2;
                while e > n {
                    e -= period;
                }
                e - 1
            })?
        }
        FamilySpec::Null(n) => {
            positive(spec, n)?;
            build(n, &|_, _| 0)?
        }
        FamilySpec::FullTransformation(k) => {
            if !(2..=3).contains(&k) {
                return Err(Error::UnsupportedSpec(format!(
                    "{spec}: full transformation monoids are offered on 2 or 3 points"
                )));
            }
            let n = k.pow(k as u32);
            let decode = |i: usize| -> Vec<usize> {
                (0..k).map(|p| (i / k.pow((k - 1 - p) as u32)) % k).collect()
            };
            let encode = |f: &[usize]| f.iter().fold(0, |acc, &v| acc * k + v);
            build(n, &|x, y| {
                let (f, g) = (decode(x), decode(y));
                let h: Vec<usize> = (0..k).map(|p| f[g[p]]).collect();
                encode(&h)
            })?
        }
    };
    Ok(s.with_name(spec.to_string()))
}

/// Row-major pairing of `S × T`: `(s, t) ↦ s·|T| + t`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PairCodec {
    pub left_order: usize,
    pub right_order: usize,
}

impl PairCodec {
    pub fn pair(&self, s: usize, t: usize) -> usize {
        s * self.right_order + t
    }

    pub fn unpair(&self, i: usize) -> (usize, usize) {
        (i / self.right_order, i % self.right_order)
    }

    pub fn rectangle(&self, a: &ElementSet, b: &ElementSet) -> ElementSet {
        let mut out = ElementSet::empty(self.left_order * self.right_order);
        for s in a {
            for t in b {
                out.insert(self.pair(s, t));
            }
        }
        out
    }

    pub fn project_left(&self, c: &ElementSet) -> ElementSet {
        let mut out = ElementSet::empty(self.left_order);
        for i in c {
            out.insert(self.unpair(i).0);
        }
        out
    }

    pub fn project_right(&self, c: &ElementSet) -> ElementSet {
        let mut out = ElementSet::empty(self.right_order);
        for i in c {
            out.insert(self.unpair(i).1);
        }
        out
    }
}

/// Coordinatewise product `S × T` under [`PairCodec`].
pub fn direct_product(s: &FiniteSemigroup, t: &FiniteSemigroup) -> Result<(FiniteSemigroup, PairCodec)> {
    let n = s.order().saturating_mul(t.order());
    limit("direct product order", n)?;
    let codec = PairCodec {
        left_order: s.order(),
        right_order: t.order(),
    };
    let table: Vec<usize> = (0..n * n)
        .map(|i| {
            let (a, b) = codec.unpair(i / n);
            let (c, d) = codec.unpair(i % n);
            codec.pair(s.mul(a, c), t.mul(b, d))
        })
        .collect();
    let product = FiniteSemigroup::from_table(n, &table)?.with_name(format!("{}×{}", s.label(), t.label()));
    Ok((product, codec))
}

/// Every associative labeled table of order `n ≤ 3`, in lexicographic table order.
pub fn enumerate_semigroups(n: usize) -> Result<impl Iterator<Item = FiniteSemigroup>> {
    if n > EXHAUSTIVE_LIMIT {
        return Err(Error::SizeLimitExceeded {
            what: "exhaustive enumeration order",
            requested: n,
            limit: EXHAUSTIVE_LIMIT,
        });
    }
    if n == 0 {
        return Err(Error::PreconditionFailed("semigroup order must be positive".into()));
    }
    let cells = n * n;
    let total = n.pow(cells as u32);
    Ok((0..total).filter_map(move |code| {
        let mut table = vec![0usize; cells];
        let mut c = code;
        for cell in table.iter_mut().rev() {
            *cell = c % n;
            c /= n;
        }
        FiniteSemigroup::from_table(n, &table).ok()
    }))
}

/// All labeled semigroups of every order `1..=max_order` (max_order ≤ 3).
pub fn enumerate_up_to(max_order: usize) -> Result<Vec<FiniteSemigroup>> {
    let mut out = Vec::new();
    for n in 1..=max_order {
        out.extend(enumerate_semigroups(n)?);
    }
    Ok(out)
}

/// Partial-table associativity: every fully defined triple must agree.
fn partial_consistent(n: usize, table: &[Option<u8>], x: usize, y: usize) -> bool {
    let get = |a: usize, b: usize| table[a * n + b].map(|v| v as usize);
    let v = get(x, y).unwrap();
    // the new cell can appear as (x·y)·z, x·(y·z) style products in four positions
    for z in 0..n {
        // (x·y)·z vs x·(y·z)
        if let (Some(l), Some(yz)) = (get(v, z), get(y, z)) {
            if let Some(r) = get(x, yz) {
                if l != r {
                    return false;
                }
            }
        }
        // (z·x)·y vs z·(x·y)
        if let Some(zx) = get(z, x) {
            if let (Some(l), Some(r)) = (get(zx, y), get(z, v)) {
                if l != r {
                    return false;
                }
            }
        }
    }
    for a in 0..n {
        for b in 0..n {
            // (a·b)·c where a·b = x and c = y, or a·(b·c) where b·c = y and a = x
            if get(a, b) == Some(x) {
                if let Some(by) = get(b, y) {
                    if let Some(r) = get(a, by) {
                        if r != v {
                            return false;
                        }
                    }
                }
            }
            if get(a, b) == Some(y) {
                if let Some(xa) = get(x, a) {
                    if let Some(l) = get(xa, b) {
                        if l != v {
                            return false;
                        }
                    }
                }
            }
        }
    }
    true
}

fn random_table(n: usize, rng: &mut ChaCha8Rng, node_budget: &mut usize) -> Option<Vec<usize>> {
    let mut table: Vec<Option<u8>> = vec![None; n * n];
    let mut choices: Vec<Vec<u8>> = Vec::with_capacity(n * n);
    let mut cell = 0;
    let mut fresh = true;
    while cell < n * n {
        if fresh {
            let mut vals: Vec<u8> = (0..n as u8).collect();
            vals.shuffle(rng);
            choices.push(vals);
        }
        table[cell] = None;
        let mut placed = false;
        while let Some(v) = choices[cell].pop() {
            if *node_budget == 0 {
                return None;
            }
            *node_budget -= 1;
            table[cell] = Some(v);
            if partial_consistent(n, &table, cell / n, cell % n) {
                placed = true;
                break;
            }
            table[cell] = None;
        }
        if placed {
            cell += 1;
            fresh = true;
        } else {
            choices.pop();
            if cell == 0 {
                return None;
            }
            cell -= 1;
            fresh = false;
        }
    }
    Some(table.into_iter().map(|v| v.unwrap() as usize).collect())
}

/// Distinct associative tables of order `n ∈ 4..=6`, found by seeded random
/// backtracking. Deterministic for a given `(n, count, seed)`.
pub fn sample_semigroups(n: usize, count: usize, seed: u64) -> Result<Vec<FiniteSemigroup>> {
    if !SAMPLED_RANGE.contains(&n) {
        return Err(Error::SizeLimitExceeded {
            what: "sampled enumeration order",
            requested: n,
            limit: *SAMPLED_RANGE.end(),
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (n as u64).rotate_left(32));
    let mut seen = HashSet::new();
    let mut out = Vec::with_capacity(count);
    let mut attempts = 0;
    while out.len() < count && attempts < count * 50 + 100 {
        attempts += 1;
        let mut budget = 200_000;
        if let Some(table) = random_table(n, &mut rng, &mut budget) {
            if seen.insert(table.clone()) {
                out.push(FiniteSemigroup::from_table(n, &table)?);
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(n: usize, xs: &[usize]) -> ElementSet {
        ElementSet::from_indices(n, xs.iter().copied()).unwrap()
    }

    #[test]
    fn validate_examples() {
        assert!(FiniteSemigroup::from_rows(&[vec![0, 1, 2], vec![1, 2, 0], vec![2, 0, 1]]).is_ok());
        assert!(FiniteSemigroup::from_rows(&[vec![0, 1], vec![0, 1]]).is_ok());
        match FiniteSemigroup::from_rows(&[vec![0, 1], vec![0, 0]]) {
            Err(Error::AssociativityViolation { x, y, z, left, right }) => {
                assert_eq!((x, y, z), (1, 0, 1));
                assert_eq!((left, right), (1, 0));
            }
            other => panic!("expected associativity violation, got {other:?}"),
        }
        assert!(matches!(
            FiniteSemigroup::from_rows(&[vec![0, 2], vec![0, 1]]),
            Err(Error::TableIndexOutOfRange { row: 0, col: 1, value: 2, .. })
        ));
    }

    #[test]
    fn quotients_and_products() {
        let z6 = make_family(FamilySpec::Cyclic(6)).unwrap();
        let evens = set(6, &[0, 2, 4]);
        assert_eq!(z6.left_quotient(2, &evens).unwrap(), evens);
        assert_eq!(z6.left_quotient(0, &evens).unwrap(), evens);
        assert_eq!(z6.product_of_sets(&evens, &evens).unwrap(), evens);
        assert!(z6.product_of_sets(&evens, &z6.empty_set()).unwrap().is_empty());

        let rz2 = make_family(FamilySpec::RightZero(2)).unwrap();
        assert_eq!(rz2.left_quotient(0, &set(2, &[1])).unwrap(), set(2, &[1]));
        let lz2 = make_family(FamilySpec::LeftZero(2)).unwrap();
        assert_eq!(lz2.product_of_sets(&set(2, &[0]), &set(2, &[1])).unwrap(), set(2, &[0]));

        assert!(matches!(
            z6.left_quotient(0, &set(4, &[0])),
            Err(Error::CarrierMismatch { expected: 6, found: 4 })
        ));
    }

    #[test]
    fn families() {
        let rz2 = make_family(FamilySpec::RightZero(2)).unwrap();
        assert_eq!(rz2.rows(), vec![vec![0, 1], vec![0, 1]]);
        let m = make_family(FamilySpec::Monogenic { index: 2, period: 2 }).unwrap();
        // a·a = a², a·a² = a³, a²·a² = a⁴ = a², a²·a³ = a⁵ = a³
        assert_eq!(m.rows(), vec![vec![1, 2, 1], vec![2, 1, 2], vec![1, 2, 1]]);
        let z4 = make_family(FamilySpec::Cyclic(4)).unwrap();
        assert_eq!(z4.order(), 4);
        assert_eq!(z4.identity(), Some(0));
        let t2 = make_family(FamilySpec::FullTransformation(2)).unwrap();
        assert_eq!(t2.order(), 4);
        assert_eq!(t2.identity(), Some(1));
        let t3 = make_family(FamilySpec::FullTransformation(3)).unwrap();
        assert_eq!(t3.order(), 27);
        assert_eq!(t3.identity(), Some(5)); // (0,1,2) = 0·9 + 1·3 + 2
        assert!(make_family(FamilySpec::FullTransformation(4)).is_err());
        assert!(matches!(
            make_family(FamilySpec::Cyclic(300)),
            Err(Error::SizeLimitExceeded { .. })
        ));
        for text in ["Z6", "LZ3", "RZ2", "RB2x3", "M2,2", "N3", "T2", "trivial"] {
            let spec: FamilySpec = text.parse().unwrap();
            assert_eq!(spec.to_string(), text);
        }
        assert!("Q8".parse::<FamilySpec>().is_err());
    }

    #[test]
    fn rectangular_band_is_lz_times_rz() {
        let lz = make_family(FamilySpec::LeftZero(2)).unwrap();
        let rz = make_family(FamilySpec::RightZero(2)).unwrap();
        let (p, codec) = direct_product(&lz, &rz).unwrap();
        let rb = make_family(FamilySpec::RectangularBand(2, 2)).unwrap();
        assert_eq!(p.rows(), rb.rows());
        for x in 0..4 {
            for y in 0..4 {
                let ((i, _), (_, l)) = (codec.unpair(x), codec.unpair(y));
                assert_eq!(p.mul(x, y), codec.pair(i, l));
            }
        }
    }

    #[test]
    fn product_with_trivial_factor() {
        let s = make_family(FamilySpec::Monogenic { index: 2, period: 2 }).unwrap();
        let (p, _) = direct_product(&s, &make_family(FamilySpec::Trivial).unwrap()).unwrap();
        assert_eq!(p.rows(), s.rows());
    }

    #[test]
    fn generated_subsemigroups() {
        let z6 = make_family(FamilySpec::Cyclic(6)).unwrap();
        assert_eq!(z6.generated_subsemigroup(&set(6, &[2])).unwrap(), set(6, &[0, 2, 4]));
        assert_eq!(z6.generated_subsemigroup(&z6.carrier()).unwrap(), z6.carrier());
        let rz2 = make_family(FamilySpec::RightZero(2)).unwrap();
        assert_eq!(rz2.generated_subsemigroup(&set(2, &[0])).unwrap(), set(2, &[0]));
        assert_eq!(rz2.generated_subsemigroup(&rz2.empty_set()), Err(Error::EmptyGeneratorSet));
    }

    #[test]
    fn enumeration_limits() {
        assert!(matches!(enumerate_semigroups(4), Err(Error::SizeLimitExceeded { .. })));
        assert!(sample_semigroups(3, 5, 1).is_err());
        assert!(sample_semigroups(7, 5, 1).is_err());
    }

    #[test]
    fn sampled_mode_is_seeded() {
        let a = sample_semigroups(4, 20, 7).unwrap();
        let b = sample_semigroups(4, 20, 7).unwrap();
        assert_eq!(a.len(), 20);
        assert_eq!(a, b);
        let distinct: HashSet<_> = a.iter().map(|s| s.rows()).collect();
        assert_eq!(distinct.len(), 20);
        let six = sample_semigroups(6, 5, 3).unwrap();
        assert_eq!(six.len(), 5);
    }

    #[test]
    fn table_text_round_trip() {
        let z3 = make_family(FamilySpec::Cyclic(3)).unwrap();
        let text = z3.to_table_text();
        assert!(text.starts_with("# Z3\n3\n0 1 2\n"));
        assert_eq!(FiniteSemigroup::parse_table(&text).unwrap().rows(), z3.rows());
    }

    #[test]
    fn table_parse_errors_carry_lines() {
        assert!(matches!(
            FiniteSemigroup::parse_table("x\n"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(
            FiniteSemigroup::parse_table("# c\n2\n0 1\n0\n"),
            Err(Error::Parse { line: 4, .. })
        ));
        assert!(matches!(
            FiniteSemigroup::parse_table("2\n0 1\n0 5\n"),
            Err(Error::Parse { line: 3, .. })
        ));
        assert!(matches!(
            FiniteSemigroup::parse_table("2\n0 1\n"),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            FiniteSemigroup::parse_table("2\n0 1\n0 0\n"),
            Err(Error::AssociativityViolation { x: 1, y: 0, z: 1, .. })
        ));
    }
}
