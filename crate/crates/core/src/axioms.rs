//! Axiom checkers for hypergroups, hyperrings, hyperfields and hypervector
//! spaces.
//!
//! Checkers never fail on a semantic violation. They return a [`Report`]
//! listing every axiom they examined, each with the first counterexample in
//! lexicographic index order when it does not hold.

use std::fmt;

use crate::error::{Error, Result};
use crate::set::IndexSet;
use crate::table::{Carrier, HyperTable, MulTable};

/// A counterexample to one axiom: the offending indices and a rendered
/// description using element labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub indices: Vec<usize>,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomCheck {
    pub axiom: &'static str,
    pub witness: Option<Witness>,
}

impl AxiomCheck {
    fn from(axiom: &'static str, witness: Option<Witness>) -> Self {
        AxiomCheck { axiom, witness }
    }

    pub fn passed(&self) -> bool {
        self.witness.is_none()
    }
}

/// The outcome of a checker run.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub checks: Vec<AxiomCheck>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(AxiomCheck::passed)
    }

    pub fn first_failure(&self) -> Option<&AxiomCheck> {
        self.checks.iter().find(|c| !c.passed())
    }

    pub fn get(&self, axiom: &str) -> Option<&AxiomCheck> {
        self.checks.iter().find(|c| c.axiom == axiom)
    }

    fn push(&mut self, axiom: &'static str, witness: Option<Witness>) {
        self.checks.push(AxiomCheck::from(axiom, witness));
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            match &c.witness {
                None => writeln!(f, "{} PASS", c.axiom)?,
                Some(w) => writeln!(f, "{} FAIL {}", c.axiom, w.detail)?,
            }
        }
        Ok(())
    }
}

/// How distributivity of multiplication over hyperaddition is read.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Distributivity {
    /// `a.(b+c) = a.b + a.c`.
    #[default]
    Equal,
    /// `a.(b+c) ⊆ a.b + a.c`.
    Inclusive,
}

fn witness(indices: Vec<usize>, detail: String) -> Option<Witness> {
    Some(Witness { indices, detail })
}

/// Every cell non-empty and in range.
pub fn check_hypergroupoid(t: &HyperTable) -> Report {
    let n = t.order();
    let mut found = None;
    'outer: for a in 0..n {
        for b in 0..n {
            let c = t.get(a, b);
            if c.is_empty() || c.universe() != n {
                let names = t.carrier();
                found = witness(
                    vec![a, b],
                    format!("cell {} # {} is empty", names.name(a), names.name(b)),
                );
                break 'outer;
            }
        }
    }
    let mut r = Report::default();
    r.push("hypergroupoid", found);
    r
}

fn associativity_witness(t: &HyperTable) -> Option<Witness> {
    let n = t.order();
    let c = t.carrier();
    for x in 0..n {
        for y in 0..n {
            let left_inner = t.get(x, y);
            for z in 0..n {
                let zs = IndexSet::singleton(n, z);
                let xs = IndexSet::singleton(n, x);
                let lhs = t.extend_unchecked(left_inner, &zs);
                let rhs = t.extend_unchecked(&xs, t.get(y, z));
                if lhs != rhs {
                    return witness(
                        vec![x, y, z],
                        format!(
                            "({x} # {y}) # {z} = {} but {x} # ({y} # {z}) = {}",
                            c.render_set(&lhs),
                            c.render_set(&rhs),
                            x = c.name(x),
                            y = c.name(y),
                            z = c.name(z)
                        ),
                    );
                }
            }
        }
    }
    None
}

/// Associativity `(x#y)#z = x#(y#z)` for all triples.
pub fn check_semihypergroup(t: &HyperTable) -> Report {
    let mut r = check_hypergroupoid(t);
    if r.passed() {
        r.push("associativity", associativity_witness(t));
    }
    r
}

fn commutativity_witness(t: &HyperTable) -> Option<Witness> {
    let n = t.order();
    for a in 0..n {
        for b in a + 1..n {
            if t.get(a, b) != t.get(b, a) {
                let c = t.carrier();
                return witness(
                    vec![a, b],
                    format!(
                        "{a} # {b} = {} but {b} # {a} = {}",
                        c.render_set(t.get(a, b)),
                        c.render_set(t.get(b, a)),
                        a = c.name(a),
                        b = c.name(b)
                    ),
                );
            }
        }
    }
    None
}

/// For candidate zero `e`: the unique `b` with `e in a#b` and `e in b#a`,
/// per `a`, or `None` if some `a` has zero or several such `b`.
fn inverses_for(t: &HyperTable, e: usize) -> Option<Vec<usize>> {
    let n = t.order();
    let mut inv = Vec::with_capacity(n);
    for a in 0..n {
        let mut found = None;
        for b in 0..n {
            if t.get(a, b).contains(e) && t.get(b, a).contains(e) {
                if found.is_some() {
                    return None;
                }
                found = Some(b);
            }
        }
        inv.push(found?);
    }
    Some(inv)
}

/// First `(a, b, c)` with `a in b#c` but `b not in a#(-c)`.
fn reversibility_witness(t: &HyperTable, neg: &[usize]) -> Option<Witness> {
    let n = t.order();
    let names = t.carrier();
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if t.get(b, c).contains(a) && !t.get(a, neg[c]).contains(b) {
                    return witness(
                        vec![a, b, c],
                        format!(
                            "{a} in {b} # {c} but {b} not in {a} # {nc}",
                            a = names.name(a),
                            b = names.name(b),
                            c = names.name(c),
                            nc = names.name(neg[c])
                        ),
                    );
                }
            }
        }
    }
    None
}

/// Everything [`check_hypergroup`] learns about a table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HypergroupReport {
    pub report: Report,
    pub is_semihypergroup: bool,
    pub is_commutative: bool,
    /// Every element satisfying the zero/unique-inverse axiom.
    pub zeros: IndexSet,
    /// The canonical zero: lowest-index zero for which reversibility holds,
    /// else the lowest zero.
    pub zero: Option<usize>,
    /// `a -> -a` relative to `zero`.
    pub inverse: Option<Vec<usize>>,
    pub reversible: bool,
    /// Zeros relative to which reversibility holds.
    pub valid_zeros: IndexSet,
    /// More than one element qualifies as a zero.
    pub zero_ambiguous: bool,
}

impl HypergroupReport {
    pub fn is_hypergroup(&self) -> bool {
        self.is_semihypergroup && self.zero.is_some() && self.reversible
    }

    pub fn is_commutative_hypergroup(&self) -> bool {
        self.is_hypergroup() && self.is_commutative
    }
}

/// Decides whether `t` is a hypergroup: associative, with a zero admitting
/// unique two-sided inverses, and reversible.
pub fn check_hypergroup(t: &HyperTable) -> HypergroupReport {
    let n = t.order();
    let mut report = check_semihypergroup(t);
    let is_semihypergroup = report.passed();
    let comm = if is_semihypergroup { commutativity_witness(t) } else { None };
    let is_commutative = is_semihypergroup && comm.is_none();

    let mut zeros = IndexSet::empty(n);
    let mut candidates = Vec::new();
    if is_semihypergroup {
        for e in 0..n {
            if let Some(inv) = inverses_for(t, e) {
                zeros.insert(e);
                candidates.push((e, inv));
            }
        }
    }
    let mut zero = None;
    let mut inverse = None;
    let mut reversible = false;
    let mut rev_witness = None;
    let mut valid_zeros = IndexSet::empty(n);
    for (e, inv) in &candidates {
        match reversibility_witness(t, inv) {
            None => {
                valid_zeros.insert(*e);
                if !reversible {
                    zero = Some(*e);
                    inverse = Some(inv.clone());
                    reversible = true;
                    rev_witness = None;
                }
            }
            Some(w) if zero.is_none() => {
                zero = Some(*e);
                inverse = Some(inv.clone());
                rev_witness = Some(w);
            }
            Some(_) => {}
        }
    }

    if is_semihypergroup {
        let zero_w = if zeros.is_empty() {
            let names = t.carrier();
            let a = first_element_blocking_all_zeros(t);
            witness(
                vec![a],
                format!("no element e admits a unique b with e in {a} # b and e in b # {a}", a = names.name(a)),
            )
        } else {
            None
        };
        report.push("zero", zero_w);
        if !zeros.is_empty() {
            report.push("reversibility", rev_witness);
        }
        report.push("commutativity", comm);
    }

    HypergroupReport {
        report,
        is_semihypergroup,
        is_commutative,
        zero_ambiguous: zeros.len() > 1,
        zeros,
        zero,
        inverse,
        reversible,
        valid_zeros,
    }
}

/// The lowest `a` such that element 0 has no unique inverse partner for it;
/// used only to locate a witness when no zero exists.
fn first_element_blocking_all_zeros(t: &HyperTable) -> usize {
    let n = t.order();
    (0..n)
        .find(|&a| {
            (0..n)
                .filter(|&b| t.get(a, b).contains(0) && t.get(b, a).contains(0))
                .count()
                != 1
        })
        .unwrap_or(0)
}

fn mul_associativity_witness(m: &MulTable) -> Option<Witness> {
    let n = m.order();
    let c = m.carrier();
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let l = m.get(m.get(x, y), z);
                let r = m.get(x, m.get(y, z));
                if l != r {
                    return witness(
                        vec![x, y, z],
                        format!(
                            "({x}.{y}).{z} = {} but {x}.({y}.{z}) = {}",
                            c.name(l),
                            c.name(r),
                            x = c.name(x),
                            y = c.name(y),
                            z = c.name(z)
                        ),
                    );
                }
            }
        }
    }
    None
}

fn relation_holds(lhs: &IndexSet, rhs: &IndexSet, mode: Distributivity) -> bool {
    match mode {
        Distributivity::Equal => lhs == rhs,
        Distributivity::Inclusive => lhs.is_subset(rhs),
    }
}

fn distributivity_witness(add: &HyperTable, mul: &MulTable, left: bool, mode: Distributivity) -> Option<Witness> {
    let n = add.order();
    let c = add.carrier();
    for a in 0..n {
        for b in 0..n {
            for d in 0..n {
                let (lhs, rhs) = if left {
                    (mul.left_image(a, add.get(b, d)), add.get(mul.get(a, b), mul.get(a, d)))
                } else {
                    (mul.right_image(add.get(b, d), a), add.get(mul.get(b, a), mul.get(d, a)))
                };
                if !relation_holds(&lhs, rhs, mode) {
                    let text = if left {
                        format!("{a}.({b} + {d}) = {} vs {a}.{b} + {a}.{d} = {}", c.render_set(&lhs), c.render_set(rhs),
                            a = c.name(a), b = c.name(b), d = c.name(d))
                    } else {
                        format!("({b} + {d}).{a} = {} vs {b}.{a} + {d}.{a} = {}", c.render_set(&lhs), c.render_set(rhs),
                            a = c.name(a), b = c.name(b), d = c.name(d))
                    };
                    return witness(vec![a, b, d], text);
                }
            }
        }
    }
    None
}

/// Hyperring axioms: commutative additive hypergroup with zero `zero`,
/// associative multiplication, two-sided distributivity, absorbing zero.
pub fn check_hyperring(add: &HyperTable, mul: &MulTable, zero: usize, mode: Distributivity) -> Report {
    let n = add.order();
    let mut r = Report::default();
    if mul.order() != n || zero >= n {
        r.push(
            "shape",
            witness(vec![], format!("tables of order {n} and {}, zero index {zero}", mul.order())),
        );
        return r;
    }
    let hg = check_hypergroup(add);
    let add_w = if !hg.is_hypergroup() {
        match hg.report.first_failure().cloned() {
            Some(c) => {
                let (indices, detail) = c.witness.map(|w| (w.indices, w.detail)).unwrap_or_default();
                witness(indices, format!("{}: {detail}", c.axiom))
            }
            None => witness(vec![], "not a hypergroup".into()),
        }
    } else if !hg.is_commutative {
        hg.report.get("commutativity").and_then(|c| c.witness.clone())
    } else if hg.zero != Some(zero) {
        witness(
            vec![zero],
            format!(
                "declared zero {} is not the additive zero {}",
                add.carrier().name(zero),
                add.carrier().name(hg.zero.unwrap_or(0))
            ),
        )
    } else {
        None
    };
    r.push("add.commutative-hypergroup", add_w);
    r.push("mul.associative", mul_associativity_witness(mul));
    r.push("distributive.left", distributivity_witness(add, mul, true, mode));
    r.push("distributive.right", distributivity_witness(add, mul, false, mode));
    let c = add.carrier();
    let absorb = (0..n).find(|&a| mul.get(a, zero) != zero || mul.get(zero, a) != zero).and_then(|a| {
        witness(
            vec![a],
            format!("{a}.{z} = {} and {z}.{a} = {}", c.name(mul.get(a, zero)), c.name(mul.get(zero, a)),
                a = c.name(a), z = c.name(zero)),
        )
    });
    r.push("zero.absorbing", absorb);
    r
}

/// A validated hyperfield.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hyperfield {
    add: HyperTable,
    mul: MulTable,
    zero: usize,
    one: usize,
    neg: Vec<usize>,
    inv: Vec<Option<usize>>,
    mode: Distributivity,
}

impl Hyperfield {
    pub fn carrier(&self) -> &Carrier {
        self.add.carrier()
    }

    pub fn order(&self) -> usize {
        self.add.order()
    }

    pub fn add(&self) -> &HyperTable {
        &self.add
    }

    pub fn mul(&self) -> &MulTable {
        &self.mul
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    pub fn one(&self) -> usize {
        self.one
    }

    pub fn neg(&self, a: usize) -> usize {
        self.neg[a]
    }

    /// `None` for zero.
    pub fn inv(&self, a: usize) -> Option<usize> {
        self.inv[a]
    }

    pub fn mode(&self) -> Distributivity {
        self.mode
    }

    /// True when every sum is a singleton, i.e. an ordinary field.
    pub fn is_classical(&self) -> bool {
        self.add.cells().iter().all(IndexSet::is_singleton)
    }

    pub fn plus(&self, a: usize, b: usize) -> &IndexSet {
        self.add.get(a, b)
    }

    pub fn times(&self, a: usize, b: usize) -> usize {
        self.mul.get(a, b)
    }
}

/// Which clause of the hyperfield definition an axiom belongs to.
pub fn hyperfield_clause(axiom: &str) -> &'static str {
    match axiom {
        "identity" => "(ii)",
        "inverse" => "(iii)",
        "mul.commutative" => "(iv)",
        "one-ne-zero" => "(ii)",
        _ => "(i)",
    }
}

/// Validates a hyperfield and extracts its negation and inverse maps.
pub fn check_hyperfield(
    add: &HyperTable,
    mul: &MulTable,
    zero: usize,
    one: usize,
    mode: Distributivity,
) -> std::result::Result<Hyperfield, Report> {
    let (r, inv) = hyperfield_checks(add, mul, zero, one, mode);
    if !r.passed() {
        return Err(r);
    }
    let neg = check_hypergroup(add).inverse.expect("validated hypergroup has inverses");
    Ok(Hyperfield { add: add.clone(), mul: mul.clone(), zero, one, neg, inv, mode })
}

/// Every hyperfield check, passing or not.
pub fn hyperfield_report(add: &HyperTable, mul: &MulTable, zero: usize, one: usize, mode: Distributivity) -> Report {
    hyperfield_checks(add, mul, zero, one, mode).0
}

fn hyperfield_checks(
    add: &HyperTable,
    mul: &MulTable,
    zero: usize,
    one: usize,
    mode: Distributivity,
) -> (Report, Vec<Option<usize>>) {
    let mut r = check_hyperring(add, mul, zero, mode);
    let n = add.order();
    if one >= n || mul.order() != n {
        r.push("identity", witness(vec![one], format!("one index {one} out of range")));
        return (r, vec![]);
    }
    let c = add.carrier();
    r.push(
        "identity",
        (0..n).find(|&a| mul.get(a, one) != a).and_then(|a| {
            witness(vec![a], format!("{a}.{o} = {}", c.name(mul.get(a, one)), a = c.name(a), o = c.name(one)))
        }),
    );
    let mut inv = vec![None; n];
    let mut inv_w = None;
    for a in (0..n).filter(|&a| a != zero) {
        match (0..n).find(|&b| mul.get(a, b) == one) {
            Some(b) => inv[a] = Some(b),
            None => {
                inv_w = witness(vec![a], format!("{} has no multiplicative inverse", c.name(a)));
                break;
            }
        }
    }
    r.push("inverse", inv_w);
    r.push(
        "mul.commutative",
        (0..n)
            .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
            .find(|&(a, b)| mul.get(a, b) != mul.get(b, a))
            .and_then(|(a, b)| {
                witness(
                    vec![a, b],
                    format!("{a}.{b} = {} but {b}.{a} = {}", c.name(mul.get(a, b)), c.name(mul.get(b, a)),
                        a = c.name(a), b = c.name(b)),
                )
            }),
    );
    r.push(
        "one-ne-zero",
        if n > 1 && one == zero {
            witness(vec![one], "one equals zero in a carrier with more than one element".into())
        } else {
            None
        },
    );
    (r, inv)
}

/// The scalar action `F x V -> P*(V)`, stored row-major by scalar.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ActionTable {
    scalars: usize,
    vectors: usize,
    cells: Vec<IndexSet>,
}

impl ActionTable {
    pub fn new(scalars: usize, vectors: usize, cells: Vec<IndexSet>) -> Result<Self> {
        if cells.len() != scalars * vectors {
            return Err(Error::Shape { expected: scalars * vectors, got: cells.len() });
        }
        for (k, c) in cells.iter().enumerate() {
            if c.universe() != vectors {
                return Err(Error::UniverseMismatch { expected: vectors, got: c.universe() });
            }
            if c.is_empty() {
                return Err(Error::EmptyCell { row: k / vectors, col: k % vectors });
            }
        }
        Ok(ActionTable { scalars, vectors, cells })
    }

    pub fn from_fn(scalars: usize, vectors: usize, mut f: impl FnMut(usize, usize) -> IndexSet) -> Result<Self> {
        let cells = (0..scalars * vectors).map(|k| f(k / vectors, k % vectors)).collect();
        Self::new(scalars, vectors, cells)
    }

    pub fn scalars(&self) -> usize {
        self.scalars
    }

    pub fn vectors(&self) -> usize {
        self.vectors
    }

    pub fn get(&self, a: usize, v: usize) -> &IndexSet {
        &self.cells[a * self.vectors + v]
    }

    pub fn with_cell(&self, a: usize, v: usize, value: IndexSet) -> ActionTable {
        let mut t = self.clone();
        t.cells[a * self.vectors + v] = value;
        t
    }

    /// `a * S = U { a * s : s in S }`.
    pub fn act_set(&self, a: usize, s: &IndexSet) -> IndexSet {
        let mut out = IndexSet::empty(self.vectors);
        for v in s {
            out.union_with(self.get(a, v));
        }
        out
    }

    /// `A * v = U { a * v : a in A }` for a set of scalars.
    pub fn scalars_act(&self, a: &IndexSet, v: usize) -> IndexSet {
        let mut out = IndexSet::empty(self.vectors);
        for s in a {
            out.union_with(self.get(s, v));
        }
        out
    }
}

/// Equality flags for the two distributive laws of the scalar action.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SpaceClass {
    /// `a*(x#y) = a*x # a*y` everywhere.
    pub strong_right: bool,
    /// `(a+b)*x = a*x # b*x` everywhere.
    pub strong_left: bool,
    pub good: bool,
}

/// A validated hypervector space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HyperVectorSpace {
    field: Hyperfield,
    vadd: HyperTable,
    action: ActionTable,
    theta: usize,
    vneg: Vec<usize>,
    class: SpaceClass,
}

impl HyperVectorSpace {
    pub fn field(&self) -> &Hyperfield {
        &self.field
    }

    pub fn vectors(&self) -> &Carrier {
        self.vadd.carrier()
    }

    pub fn dim_v(&self) -> usize {
        self.vadd.order()
    }

    pub fn vadd(&self) -> &HyperTable {
        &self.vadd
    }

    pub fn action(&self) -> &ActionTable {
        &self.action
    }

    pub fn theta(&self) -> usize {
        self.theta
    }

    pub fn vneg(&self, v: usize) -> usize {
        self.vneg[v]
    }

    pub fn class(&self) -> SpaceClass {
        self.class
    }

    pub fn act(&self, a: usize, v: usize) -> &IndexSet {
        self.action.get(a, v)
    }

    pub fn theta_set(&self) -> IndexSet {
        IndexSet::singleton(self.dim_v(), self.theta)
    }

    pub fn all_vectors(&self) -> IndexSet {
        IndexSet::full(self.dim_v())
    }
}

struct SpaceScan {
    incl: Option<Witness>,
    equal: bool,
}

fn scan_right_distributive(field: &Hyperfield, vadd: &HyperTable, action: &ActionTable) -> SpaceScan {
    let (nf, nv) = (field.order(), vadd.order());
    let (fc, vc) = (field.carrier(), vadd.carrier());
    let mut equal = true;
    for a in 0..nf {
        for x in 0..nv {
            for y in 0..nv {
                let lhs = action.act_set(a, vadd.get(x, y));
                let rhs = vadd.extend_unchecked(action.get(a, x), action.get(a, y));
                if !lhs.is_subset(&rhs) {
                    return SpaceScan {
                        incl: witness(
                            vec![a, x, y],
                            format!(
                                "{a}*({x} # {y}) = {} not within {a}*{x} # {a}*{y} = {}",
                                vc.render_set(&lhs),
                                vc.render_set(&rhs),
                                a = fc.name(a),
                                x = vc.name(x),
                                y = vc.name(y)
                            ),
                        ),
                        equal: false,
                    };
                }
                equal &= lhs == rhs;
            }
        }
    }
    SpaceScan { incl: None, equal }
}

fn scan_left_distributive(field: &Hyperfield, vadd: &HyperTable, action: &ActionTable) -> SpaceScan {
    let (nf, nv) = (field.order(), vadd.order());
    let (fc, vc) = (field.carrier(), vadd.carrier());
    let mut equal = true;
    for a in 0..nf {
        for b in 0..nf {
            for x in 0..nv {
                let lhs = action.scalars_act(field.plus(a, b), x);
                let rhs = vadd.extend_unchecked(action.get(a, x), action.get(b, x));
                if !lhs.is_subset(&rhs) {
                    return SpaceScan {
                        incl: witness(
                            vec![a, b, x],
                            format!(
                                "({a} + {b})*{x} = {} not within {a}*{x} # {b}*{x} = {}",
                                vc.render_set(&lhs),
                                vc.render_set(&rhs),
                                a = fc.name(a),
                                b = fc.name(b),
                                x = vc.name(x)
                            ),
                        ),
                        equal: false,
                    };
                }
                equal &= lhs == rhs;
            }
        }
    }
    SpaceScan { incl: None, equal }
}

fn compatibility_witness(field: &Hyperfield, action: &ActionTable, vc: &Carrier) -> Option<Witness> {
    let nf = field.order();
    let fc = field.carrier();
    for a in 0..nf {
        for b in 0..nf {
            for x in 0..action.vectors() {
                let lhs = action.get(field.times(a, b), x);
                let rhs = action.act_set(a, action.get(b, x));
                if *lhs != rhs {
                    return witness(
                        vec![a, b, x],
                        format!(
                            "({a}.{b})*{x} = {} but {a}*({b}*{x}) = {}",
                            vc.render_set(lhs),
                            vc.render_set(&rhs),
                            a = fc.name(a),
                            b = fc.name(b),
                            x = vc.name(x)
                        ),
                    );
                }
            }
        }
    }
    None
}

fn unit_witness(field: &Hyperfield, action: &ActionTable, vc: &Carrier, theta: usize) -> Option<Witness> {
    let nv = action.vectors();
    let fc = field.carrier();
    for x in 0..nv {
        let one = action.get(field.one(), x);
        if *one != IndexSet::singleton(nv, x) {
            return witness(
                vec![field.one(), x],
                format!("{}*{x} = {} (expected {{{x}}})", fc.name(field.one()), vc.render_set(one), x = vc.name(x)),
            );
        }
        let zero = action.get(field.zero(), x);
        if *zero != IndexSet::singleton(nv, theta) {
            return witness(
                vec![field.zero(), x],
                format!(
                    "{}*{x} = {} (expected {{{t}}})",
                    fc.name(field.zero()),
                    vc.render_set(zero),
                    x = vc.name(x),
                    t = vc.name(theta)
                ),
            );
        }
    }
    None
}

/// Validates a hypervector space over an already validated hyperfield and
/// classifies it as strongly right/left distributive.
pub fn check_hypervectorspace(
    field: &Hyperfield,
    vadd: &HyperTable,
    action: &ActionTable,
    theta: usize,
) -> std::result::Result<HyperVectorSpace, Report> {
    let nv = vadd.order();
    let vc = vadd.carrier();
    let mut r = Report::default();
    if action.scalars() != field.order() || action.vectors() != nv || theta >= nv {
        r.push(
            "shape",
            witness(
                vec![],
                format!(
                    "action is {}x{}, field order {}, {} vectors, theta index {theta}",
                    action.scalars(),
                    action.vectors(),
                    field.order(),
                    nv
                ),
            ),
        );
        return Err(r);
    }
    let hg = check_hypergroup(vadd);
    let hg_w = if !hg.is_hypergroup() {
        let f = hg.report.first_failure().cloned();
        witness(
            vec![],
            f.map(|c| format!("{}: {}", c.axiom, c.witness.map(|w| w.detail).unwrap_or_default()))
                .unwrap_or_else(|| "not a hypergroup".into()),
        )
    } else if !hg.is_commutative {
        hg.report.get("commutativity").and_then(|c| c.witness.clone())
    } else if hg.zero != Some(theta) {
        witness(vec![theta], format!("declared theta {} is not the zero of #", vc.name(theta)))
    } else {
        None
    };
    let hg_ok = hg_w.is_none();
    r.push("vadd.commutative-hypergroup", hg_w);

    let right = scan_right_distributive(field, vadd, action);
    let left = scan_left_distributive(field, vadd, action);
    r.push("space(i)", right.incl);
    r.push("space(ii)", left.incl);
    r.push("space(iii)", compatibility_witness(field, action, vc));
    r.push("space(iv)", unit_witness(field, action, vc, theta));
    if !r.passed() || !hg_ok {
        return Err(r);
    }
    let class = SpaceClass {
        strong_right: right.equal,
        strong_left: left.equal,
        good: right.equal && left.equal,
    };
    Ok(HyperVectorSpace {
        field: field.clone(),
        vadd: vadd.clone(),
        action: action.clone(),
        theta,
        vneg: hg.inverse.expect("validated hypergroup has inverses"),
        class,
    })
}

/// Why a subset fails the closure criterion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SubspaceWitness {
    Empty,
    /// `x # y` leaves the subset.
    Sum(usize, usize),
    /// `a * x` leaves the subset.
    Scalar(usize, usize),
    /// `a*x # b*y` leaves the subset.
    Combination(usize, usize, usize, usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubspaceReport {
    /// Non-empty, closed under `#` and under scalar action.
    pub closure_criterion: bool,
    pub closure_witness: Option<SubspaceWitness>,
    /// Non-empty and `a*x # b*y` within the subset for all scalars and members.
    pub combination_criterion: bool,
    pub combination_witness: Option<SubspaceWitness>,
}

impl SubspaceReport {
    pub fn is_subspace(&self) -> bool {
        self.closure_criterion
    }

    pub fn criteria_agree(&self) -> bool {
        self.closure_criterion == self.combination_criterion
    }
}

/// Decides whether `w` is a hypersubspace, by the closure criterion and,
/// independently, by the two-scalar combination criterion.
pub fn check_subspace(space: &HyperVectorSpace, w: &IndexSet) -> Result<SubspaceReport> {
    space.vectors().check_subset(w)?;
    let nf = space.field().order();
    let vadd = space.vadd();

    let closure_witness = if w.is_empty() {
        Some(SubspaceWitness::Empty)
    } else {
        let sum = w
            .iter()
            .flat_map(|x| w.iter().map(move |y| (x, y)))
            .find(|&(x, y)| !vadd.get(x, y).is_subset(w))
            .map(|(x, y)| SubspaceWitness::Sum(x, y));
        sum.or_else(|| {
            (0..nf)
                .flat_map(|a| w.iter().map(move |x| (a, x)))
                .find(|&(a, x)| !space.act(a, x).is_subset(w))
                .map(|(a, x)| SubspaceWitness::Scalar(a, x))
        })
    };

    let combination_witness = if w.is_empty() {
        Some(SubspaceWitness::Empty)
    } else {
        let mut found = None;
        'search: for x in w {
            for y in w {
                for a in 0..nf {
                    for b in 0..nf {
                        let s = vadd.extend_unchecked(space.act(a, x), space.act(b, y));
                        if !s.is_subset(w) {
                            found = Some(SubspaceWitness::Combination(a, x, b, y));
                            break 'search;
                        }
                    }
                }
            }
        }
        found
    };

    Ok(SubspaceReport {
        closure_criterion: closure_witness.is_none(),
        closure_witness,
        combination_criterion: combination_witness.is_none(),
        combination_witness,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(n: usize, xs: &[usize]) -> IndexSet {
        IndexSet::from_indices(n, xs.iter().copied())
    }

    fn k2_add() -> HyperTable {
        HyperTable::new(Carrier::numbered(2), vec![s(2, &[0]), s(2, &[1]), s(2, &[1]), s(2, &[0, 1])]).unwrap()
    }

    fn k2_mul() -> MulTable {
        MulTable::new(Carrier::numbered(2), vec![0, 0, 0, 1]).unwrap()
    }

    #[test]
    fn hypergroupoid_reports_empty_cell() {
        let t = HyperTable::new_unchecked(
            Carrier::numbered(2),
            vec![s(2, &[0]), s(2, &[1]), IndexSet::empty(2), s(2, &[0])],
        );
        let r = check_hypergroupoid(&t);
        assert_eq!(r.first_failure().unwrap().witness.as_ref().unwrap().indices, vec![1, 0]);
        assert!(check_hypergroupoid(&k2_add()).passed());
        let one = HyperTable::new(Carrier::numbered(1), vec![s(1, &[0])]).unwrap();
        assert!(check_hypergroupoid(&one).passed());
    }

    #[test]
    fn semihypergroup_failure_has_replayable_witness() {
        // 0#0={0}, 0#1={1}, 1#0={0}, 1#1={0}
        let t = HyperTable::new(Carrier::numbered(2), vec![s(2, &[0]), s(2, &[1]), s(2, &[0]), s(2, &[0])]).unwrap();
        let r = check_semihypergroup(&t);
        let w = r.get("associativity").unwrap().witness.clone().unwrap();
        let (x, y, z) = (w.indices[0], w.indices[1], w.indices[2]);
        let lhs = t.extend(t.get(x, y), &s(2, &[z])).unwrap();
        let rhs = t.extend(&s(2, &[x]), t.get(y, z)).unwrap();
        assert_ne!(lhs, rhs);
        // lexicographically first failing triple
        assert_eq!(w.indices, vec![1, 0, 1]);
        assert!(check_semihypergroup(&k2_add()).passed());
    }

    #[test]
    fn k2_is_a_hypergroup_with_self_inverse() {
        let r = check_hypergroup(&k2_add());
        assert!(r.is_commutative_hypergroup());
        assert_eq!(r.zero, Some(0));
        assert_eq!(r.inverse, Some(vec![0, 1]));
        assert_eq!(r.zeros.to_vec(), vec![0]);
    }

    #[test]
    fn k2_with_one_plus_one_singleton_is_not_a_hypergroup() {
        let t = k2_add().with_cell(1, 1, s(2, &[1]));
        let r = check_hypergroup(&t);
        assert!(!r.is_hypergroup());
        assert!(r.zeros.is_empty());
        let w = r.report.get("zero").unwrap().witness.clone().unwrap();
        assert_eq!(w.indices, vec![1]);
    }

    #[test]
    fn trivial_hypergroup() {
        let t = HyperTable::new(Carrier::numbered(1), vec![s(1, &[0])]).unwrap();
        let r = check_hypergroup(&t);
        assert!(r.is_commutative_hypergroup());
        assert_eq!(r.inverse, Some(vec![0]));
    }

    #[test]
    fn reversibility_failure_is_reported() {
        // Z3 addition with 1#1 enlarged: associative? check what the checker says
        let n = 3;
        let t = HyperTable::from_fn(Carrier::numbered(n), |a, b| {
            if a == 0 {
                s(n, &[b])
            } else if b == 0 {
                s(n, &[a])
            } else {
                IndexSet::full(n)
            }
        })
        .unwrap();
        // total hypergroup-like table: every non-zero sum is everything
        let r = check_hypergroup(&t);
        assert!(r.is_semihypergroup);
        // 0 in 1#b for b in {1,2}: inverses not unique, so no zero
        assert!(r.zeros.is_empty());
        assert!(!r.is_hypergroup());
    }

    #[test]
    fn k2_ring_and_field() {
        let r = check_hyperring(&k2_add(), &k2_mul(), 0, Distributivity::Equal);
        assert!(r.passed(), "{r}");
        let f = check_hyperfield(&k2_add(), &k2_mul(), 0, 1, Distributivity::Equal).unwrap();
        assert_eq!(f.inv(1), Some(1));
        assert_eq!(f.neg(1), 1);
        assert_eq!(f.inv(0), None);
        assert!(!f.is_classical());
    }

    #[test]
    fn k2_with_nilpotent_one_fails() {
        let mul = MulTable::new(Carrier::numbered(2), vec![0, 0, 0, 0]).unwrap();
        let r = check_hyperring(&k2_add(), &mul, 0, Distributivity::Equal);
        // 1.(1+1) = {0} but 1.1 + 1.1 = {0}: distributive; absorbing holds
        // so the ring checks pass and the field fails on the identity clause
        assert!(r.passed(), "{r}");
        let err = check_hyperfield(&k2_add(), &mul, 0, 1, Distributivity::Equal).unwrap_err();
        let first = err.first_failure().unwrap();
        assert_eq!(first.axiom, "identity");
        assert_eq!(hyperfield_clause(first.axiom), "(ii)");
    }

    #[test]
    fn trivial_ring_and_field() {
        let add = HyperTable::new(Carrier::numbered(1), vec![s(1, &[0])]).unwrap();
        let mul = MulTable::new(Carrier::numbered(1), vec![0]).unwrap();
        assert!(check_hyperring(&add, &mul, 0, Distributivity::Equal).passed());
        assert!(check_hyperfield(&add, &mul, 0, 0, Distributivity::Equal).is_ok());
    }

    #[test]
    fn one_must_differ_from_zero() {
        let err = check_hyperfield(&k2_add(), &k2_mul(), 0, 0, Distributivity::Equal).unwrap_err();
        assert!(err.checks.iter().any(|c| !c.passed()));
    }

    #[test]
    fn inclusive_mode_is_weaker() {
        // 1+1 = 0, 1+2 = 2, 2+2 = {0,1}; the only non-zero product is 2.2 = 2.
        // Then 2.(2+2) = {0} sits strictly inside 2.2 + 2.2 = {0,1}.
        let n = 3;
        let add = HyperTable::new(
            Carrier::numbered(n),
            vec![s(n, &[0]), s(n, &[1]), s(n, &[2]), s(n, &[1]), s(n, &[0]), s(n, &[2]), s(n, &[2]), s(n, &[2]), s(n, &[0, 1])],
        )
        .unwrap();
        let mul = MulTable::new(Carrier::numbered(n), vec![0, 0, 0, 0, 0, 0, 0, 0, 2]).unwrap();
        assert!(check_hyperring(&add, &mul, 0, Distributivity::Inclusive).passed());
        let equal = check_hyperring(&add, &mul, 0, Distributivity::Equal);
        let w = equal.get("distributive.left").unwrap().witness.clone().unwrap();
        assert_eq!(w.indices[0], 2);
        assert!(check_hyperring(&k2_add(), &k2_mul(), 0, Distributivity::Inclusive).passed());
    }

    fn space_over_itself(f: &Hyperfield) -> std::result::Result<HyperVectorSpace, Report> {
        let n = f.order();
        let action = ActionTable::from_fn(n, n, |a, x| s(n, &[f.times(a, x)])).unwrap();
        check_hypervectorspace(f, f.add(), &action, f.zero())
    }

    #[test]
    fn k2_over_itself_is_good() {
        let f = check_hyperfield(&k2_add(), &k2_mul(), 0, 1, Distributivity::Equal).unwrap();
        let v = space_over_itself(&f).unwrap();
        assert!(v.class().good);
        assert_eq!(v.vneg(1), 1);
    }

    #[test]
    fn broken_unit_action_fails_axiom_iv() {
        let f = check_hyperfield(&k2_add(), &k2_mul(), 0, 1, Distributivity::Equal).unwrap();
        let action = ActionTable::from_fn(2, 2, |a, x| s(2, &[f.times(a, x)])).unwrap();
        let bad = action.with_cell(1, 1, s(2, &[0, 1]));
        let err = check_hypervectorspace(&f, f.add(), &bad, 0).unwrap_err();
        assert!(!err.get("space(iv)").unwrap().passed());
    }

    #[test]
    fn subspace_criteria_on_k2_line() {
        let f = check_hyperfield(&k2_add(), &k2_mul(), 0, 1, Distributivity::Equal).unwrap();
        let v = space_over_itself(&f).unwrap();
        for w in IndexSet::all_subsets(2) {
            let r = check_subspace(&v, &w).unwrap();
            assert!(r.criteria_agree());
            let expect = w.contains(0);
            assert_eq!(r.is_subspace(), expect, "{w:?}");
        }
        assert_eq!(
            check_subspace(&v, &IndexSet::empty(2)).unwrap().closure_witness,
            Some(SubspaceWitness::Empty)
        );
    }
}
