//! Exhaustive enumeration of small hypergroups and hyperfields up to
//! relabelling.
//!
//! The search works on compact mask tables (at most [`MAX_ORDER`] elements)
//! with the zero fixed at index 0. For commutative structures row and column
//! 0 are forced to `0 # a = {a}` and only the upper triangle is searched;
//! a row is abandoned as soon as its additive inverse is not unique. Every
//! survivor is re-validated with the generic checkers in [`crate::axioms`]
//! and deduplicated by canonical form.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use super::canonical::{canonical_hyperfield, canonical_hypergroup, content_id, render_key, Key};
use crate::axioms::{check_hyperfield, check_hypergroup, Distributivity, Hyperfield};
use crate::error::{Error, Result};
use crate::set::IndexSet;
use crate::table::{Carrier, HyperTable, MulTable};

/// Largest order the compact search representation supports.
pub const MAX_ORDER: usize = 6;
const STRIDE: usize = 8;

/// Default cap on the number of candidate tables a census may visit.
pub const DEFAULT_BUDGET: u128 = 50_000_000;

/// Environment variable overriding [`DEFAULT_BUDGET`].
pub const BUDGET_ENV: &str = "HYPERALG_BUDGET";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Kind {
    CommutativeHypergroup,
    Hypergroup,
    Hyperfield,
}

impl Kind {
    pub fn as_str(self) -> &'static str {
        match self {
            Kind::CommutativeHypergroup => "commutative-hypergroup",
            Kind::Hypergroup => "hypergroup",
            Kind::Hyperfield => "hyperfield",
        }
    }

    fn short(self) -> &'static str {
        match self {
            Kind::CommutativeHypergroup => "chg",
            Kind::Hypergroup => "hg",
            Kind::Hyperfield => "hf",
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Kind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "commutative-hypergroup" => Ok(Kind::CommutativeHypergroup),
            "hypergroup" => Ok(Kind::Hypergroup),
            "hyperfield" => Ok(Kind::Hyperfield),
            _ => Err(Error::UnknownStructure(s.to_string())),
        }
    }
}

/// One structure of the census, in canonical labelling (zero at index 0).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusEntry {
    pub kind: Kind,
    pub order: usize,
    pub add: HyperTable,
    pub mul: Option<MulTable>,
    pub one: Option<usize>,
    pub key: Key,
    pub canonical_form: String,
    pub id: String,
}

impl CensusEntry {
    /// Block name used in census exports.
    pub fn name(&self) -> String {
        format!("{}{}_{}", self.kind.short(), self.order, &self.id[..8])
    }

    /// Re-validated hyperfield for hyperfield entries.
    pub fn hyperfield(&self, mode: Distributivity) -> Option<Hyperfield> {
        let mul = self.mul.as_ref()?;
        check_hyperfield(&self.add, mul, 0, self.one?, mode).ok()
    }

    /// Runs this entry's checker again.
    pub fn revalidate(&self, mode: Distributivity) -> bool {
        match self.kind {
            Kind::Hyperfield => self.hyperfield(mode).is_some(),
            Kind::Hypergroup => check_hypergroup(&self.add).is_hypergroup(),
            Kind::CommutativeHypergroup => check_hypergroup(&self.add).is_commutative_hypergroup(),
        }
    }

    fn new(kind: Kind, order: usize, add: HyperTable, mul: Option<MulTable>, one: Option<usize>, key: Key) -> Self {
        CensusEntry {
            kind,
            order,
            canonical_form: render_key(&key),
            id: content_id(kind.as_str(), order, &key),
            add,
            mul,
            one,
            key,
        }
    }

    /// Canonical entry for a validated hypergroup table.
    pub fn from_hypergroup(kind: Kind, t: &HyperTable) -> Option<Self> {
        let r = check_hypergroup(t);
        let ok = match kind {
            Kind::CommutativeHypergroup => r.is_commutative_hypergroup(),
            Kind::Hypergroup => r.is_hypergroup(),
            Kind::Hyperfield => false,
        };
        if !ok {
            return None;
        }
        let (table, key) = canonical_hypergroup(t, &r.valid_zeros);
        Some(Self::new(kind, t.order(), table, None, None, key))
    }

    /// Canonical entry for a validated hyperfield.
    pub fn from_hyperfield(f: &Hyperfield) -> Self {
        let c = canonical_hyperfield(f.add(), f.mul(), f.zero(), f.one());
        Self::new(Kind::Hyperfield, f.order(), c.add, Some(c.mul), Some(c.one), c.key)
    }
}

#[derive(Clone, Debug)]
pub struct CensusOptions {
    pub kind: Kind,
    pub order: usize,
    /// Worker threads; `None` uses rayon's default.
    pub threads: Option<usize>,
    pub budget: u128,
    pub mode: Distributivity,
}

impl CensusOptions {
    pub fn new(kind: Kind, order: usize) -> Self {
        CensusOptions { kind, order, threads: None, budget: budget_from_env(), mode: Distributivity::Equal }
    }
}

/// [`DEFAULT_BUDGET`] unless `HYPERALG_BUDGET` holds a number.
pub fn budget_from_env() -> u128 {
    std::env::var(BUDGET_ENV).ok().and_then(|v| v.trim().parse().ok()).unwrap_or(DEFAULT_BUDGET)
}

fn masks(order: usize) -> u128 {
    (1u128 << order) - 1
}

/// Number of candidate tables the search visits before pruning.
pub fn estimate(kind: Kind, order: usize) -> u128 {
    let n = order as u32;
    if order <= 1 {
        return 1;
    }
    let tri = n * (n - 1) / 2;
    let m = masks(order);
    match kind {
        Kind::CommutativeHypergroup => m.saturating_pow(tri),
        Kind::Hypergroup => m.saturating_pow(n * n),
        Kind::Hyperfield => {
            let units = (n - 1) as u128;
            units.saturating_pow((n - 2) * (n - 1) / 2).saturating_mul(m.saturating_pow(tri))
        }
    }
}

/// Compact table: cell `(a, b)` is `cells[a * STRIDE + b]`.
#[derive(Clone, Copy)]
struct Compact {
    n: usize,
    cells: [u16; STRIDE * STRIDE],
}

impl Compact {
    fn new(n: usize) -> Self {
        Compact { n, cells: [0; STRIDE * STRIDE] }
    }

    #[inline]
    fn get(&self, a: usize, b: usize) -> u16 {
        self.cells[a * STRIDE + b]
    }

    #[inline]
    fn set(&mut self, a: usize, b: usize, v: u16) {
        self.cells[a * STRIDE + b] = v;
    }

    #[inline]
    fn ext(&self, a: u16, b: u16) -> u16 {
        let mut out = 0;
        let mut xa = a;
        while xa != 0 {
            let x = xa.trailing_zeros() as usize;
            xa &= xa - 1;
            let mut yb = b;
            while yb != 0 {
                let y = yb.trailing_zeros() as usize;
                yb &= yb - 1;
                out |= self.get(x, y);
            }
        }
        out
    }

    fn associative(&self) -> bool {
        let n = self.n;
        for x in 0..n {
            for y in 0..n {
                let xy = self.get(x, y);
                for z in 0..n {
                    if self.ext(xy, 1 << z) != self.ext(1 << x, self.get(y, z)) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Number of `b` with `0 in a#b` and `0 in b#a`.
    fn inverse_count(&self, a: usize) -> usize {
        (0..self.n).filter(|&b| self.get(a, b) & 1 != 0 && self.get(b, a) & 1 != 0).count()
    }

    fn inverses(&self) -> Option<Vec<usize>> {
        (0..self.n)
            .map(|a| {
                if self.inverse_count(a) != 1 {
                    return None;
                }
                (0..self.n).find(|&b| self.get(a, b) & 1 != 0 && self.get(b, a) & 1 != 0)
            })
            .collect()
    }

    fn reversible(&self, neg: &[usize]) -> bool {
        let n = self.n;
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if self.get(b, c) >> a & 1 != 0 && self.get(a, neg[c]) >> b & 1 == 0 {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn to_table(self) -> HyperTable {
        let n = self.n;
        HyperTable::from_fn(Carrier::numbered(n), |a, b| IndexSet::from_mask(n, self.get(a, b) as u64))
            .expect("search assigns non-empty cells")
    }
}

/// Free cells of the search, in assignment order, and for each the row
/// whose inverse can be checked once that cell is set.
fn free_cells(n: usize, commutative: bool) -> Vec<((usize, usize), Option<usize>)> {
    let mut out = Vec::new();
    if commutative {
        for a in 1..n {
            for b in a..n {
                out.push(((a, b), (b == n - 1).then_some(a)));
            }
        }
    } else {
        for a in 0..n {
            for b in 0..n {
                out.push(((a, b), None));
            }
        }
    }
    out
}

fn seed(n: usize, commutative: bool) -> Compact {
    let mut t = Compact::new(n);
    if commutative {
        for a in 0..n {
            t.set(0, a, 1 << a);
            t.set(a, 0, 1 << a);
        }
    }
    t
}

fn search(
    t: &mut Compact,
    cells: &[((usize, usize), Option<usize>)],
    depth: usize,
    commutative: bool,
    leaf: &mut impl FnMut(&Compact),
) {
    if depth == cells.len() {
        leaf(t);
        return;
    }
    let ((a, b), row_done) = cells[depth];
    let full = (1u16 << t.n) - 1;
    for v in 1..=full {
        t.set(a, b, v);
        if commutative {
            t.set(b, a, v);
        }
        if let Some(r) = row_done {
            if t.inverse_count(r) != 1 {
                continue;
            }
        }
        search(t, cells, depth + 1, commutative, leaf);
    }
}

/// Runs the search, splitting on the first free cell across threads.
/// Each branch's survivors come back in search order; the caller sorts.
fn run_search(n: usize, commutative: bool, accept: &(impl Fn(&Compact) -> bool + Sync)) -> Vec<Compact> {
    let cells = free_cells(n, commutative);
    if cells.is_empty() {
        let t = seed(n, commutative);
        return if accept(&t) { vec![t] } else { vec![] };
    }
    let full = (1u16 << n) - 1;
    (1..=full)
        .into_par_iter()
        .map(|v| {
            let mut t = seed(n, commutative);
            let ((a, b), row_done) = cells[0];
            t.set(a, b, v);
            if commutative {
                t.set(b, a, v);
            }
            let mut found = Vec::new();
            if row_done.is_none_or(|r| t.inverse_count(r) == 1) {
                search(&mut t, &cells, 1, commutative, &mut |c| {
                    if accept(c) {
                        found.push(*c);
                    }
                });
            }
            found
        })
        .flatten()
        .collect()
}

fn hypergroup_leaf(t: &Compact) -> bool {
    let Some(neg) = t.inverses() else { return false };
    t.associative() && t.reversible(&neg)
}

/// Commutative group tables on the units `1..n` with identity 1, combined
/// with an absorbing zero.
fn multiplicative_tables(n: usize) -> Vec<[usize; STRIDE * STRIDE]> {
    let mut base = [0usize; STRIDE * STRIDE];
    for a in 1..n {
        base[STRIDE + a] = a;
        base[a * STRIDE + 1] = a;
    }
    let free: Vec<(usize, usize)> = (2..n).flat_map(|a| (a..n).map(move |b| (a, b))).collect();
    let mut out = Vec::new();
    fn go(t: &mut [usize; STRIDE * STRIDE], free: &[(usize, usize)], k: usize, n: usize, out: &mut Vec<[usize; STRIDE * STRIDE]>) {
        if k == free.len() {
            let units = 1..n;
            let assoc = units.clone().all(|x| {
                units.clone().all(|y| units.clone().all(|z| t[t[x * STRIDE + y] * STRIDE + z] == t[x * STRIDE + t[y * STRIDE + z]]))
            });
            let inverses = units.clone().all(|x| units.clone().any(|y| t[x * STRIDE + y] == 1));
            if assoc && inverses {
                out.push(*t);
            }
            return;
        }
        let (a, b) = free[k];
        for v in 1..n {
            t[a * STRIDE + b] = v;
            t[b * STRIDE + a] = v;
            go(t, free, k + 1, n, out);
        }
    }
    go(&mut base, &free, 0, n, &mut out);
    out
}

fn distributive(add: &Compact, mul: &[usize; STRIDE * STRIDE], mode: Distributivity) -> bool {
    let n = add.n;
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let mut lhs = 0u16;
                let mut s = add.get(b, c);
                while s != 0 {
                    let x = s.trailing_zeros() as usize;
                    s &= s - 1;
                    lhs |= 1 << mul[a * STRIDE + x];
                }
                let rhs = add.get(mul[a * STRIDE + b], mul[a * STRIDE + c]);
                let ok = match mode {
                    Distributivity::Equal => lhs == rhs,
                    Distributivity::Inclusive => lhs & !rhs == 0,
                };
                if !ok {
                    return false;
                }
            }
        }
    }
    true
}

/// Enumerates the census, sorted by canonical form.
pub fn enumerate(opts: &CensusOptions) -> Result<Vec<CensusEntry>> {
    let n = opts.order;
    if n == 0 || n > MAX_ORDER {
        return Err(Error::Precondition(format!("census order must be in 1..={MAX_ORDER}, got {n}")));
    }
    let est = estimate(opts.kind, n);
    if est > opts.budget {
        return Err(Error::Budget { estimate: est, budget: opts.budget });
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.threads.unwrap_or(0))
        .build()
        .map_err(|e| Error::Precondition(format!("thread pool: {e}")))?;
    pool.install(|| match opts.kind {
        Kind::CommutativeHypergroup | Kind::Hypergroup => Ok(enumerate_hypergroups(opts.kind, n)),
        Kind::Hyperfield => Ok(enumerate_hyperfields(n, opts.mode)),
    })
}

fn collect_sorted(entries: impl IntoIterator<Item = CensusEntry>) -> Vec<CensusEntry> {
    let mut map = BTreeMap::new();
    for e in entries {
        map.entry(e.key.clone()).or_insert(e);
    }
    map.into_values().collect()
}

fn enumerate_hypergroups(kind: Kind, n: usize) -> Vec<CensusEntry> {
    let commutative = kind == Kind::CommutativeHypergroup;
    let found = run_search(n, commutative, &hypergroup_leaf);
    let entries: Vec<CensusEntry> = found
        .into_par_iter()
        .filter_map(|c| {
            let entry = CensusEntry::from_hypergroup(kind, &c.to_table());
            debug_assert!(entry.is_some(), "compact search accepted a table the checker rejects");
            entry
        })
        .collect();
    collect_sorted(entries)
}

fn enumerate_hyperfields(n: usize, mode: Distributivity) -> Vec<CensusEntry> {
    if n == 1 {
        let add = HyperTable::new(Carrier::numbered(1), vec![IndexSet::singleton(1, 0)]).expect("valid");
        let mul = MulTable::new(Carrier::numbered(1), vec![0]).expect("valid");
        return check_hyperfield(&add, &mul, 0, 0, mode).map(|f| CensusEntry::from_hyperfield(&f)).into_iter().collect();
    }
    let mut entries = Vec::new();
    for mul in multiplicative_tables(n) {
        let found = run_search(n, true, &|c: &Compact| hypergroup_leaf(c) && distributive(c, &mul, mode));
        let mul_table = MulTable::from_fn(Carrier::numbered(n), |a, b| mul[a * STRIDE + b]).expect("valid");
        entries.extend(found.into_par_iter().filter_map(|c| {
            let f = check_hyperfield(&c.to_table(), &mul_table, 0, 1, mode).ok();
            debug_assert!(f.is_some(), "compact search accepted a table the checker rejects");
            f.map(|f| CensusEntry::from_hyperfield(&f))
        }).collect::<Vec<_>>());
    }
    collect_sorted(entries)
}
