//! Executable statements of the structural results, instantiated over
//! bounded quantifier spaces.
//!
//! Each property is a predicate over *instances*: an instance is a short
//! list of index groups (an element, a vector list, a pair of subspaces,
//! and so on). A verdict records how many instances were tried and, on
//! failure, the first failing instance, which [`replay_space`] or
//! [`replay_hypergroup`] can re-run in isolation.
//!
//! Results that assume strong left distributivity are skipped, with a
//! reason, on spaces without it; nothing else is ever skipped.

use std::cell::OnceCell;
use std::fmt::Write as _;
use std::ops::ControlFlow;

use crate::axioms::{check_hypergroup, check_subspace, HyperVectorSpace, HypergroupReport};
use crate::error::{Error, Result};
use crate::hlinalg::{
    all_subspaces, express_as_combination, express_in, extend_to_basis, for_each_combination, is_basis_of,
    is_dependent, is_independent, lc_hull, representations, subspace_dimension, Basis, SUBSET_GUARD,
};
use crate::set::IndexSet;
use crate::table::{Carrier, HyperTable};

/// Index groups describing one instantiation of a property.
pub type Instance = Vec<Vec<usize>>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skip => "SKIP",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub instance: Instance,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PropertyVerdict {
    pub property_id: &'static str,
    pub structure_id: String,
    pub status: Status,
    pub witness: Option<Counterexample>,
    pub skipped_reason: Option<String>,
    /// Informational output that does not affect the status.
    pub note: Option<String>,
    /// The quantifier space the property was instantiated over.
    pub bound: String,
    pub instances: usize,
}

impl PropertyVerdict {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    /// `<id> <structure> PASS|FAIL|SKIP [...]`. A failure is always a
    /// counterexample, since hypotheses are checked before running.
    pub fn render_text(&self) -> String {
        let mut out = format!("{} {} {}", self.property_id, self.structure_id, self.status.as_str());
        match self.status {
            Status::Pass => {
                let _ = write!(out, " [{} instances: {}]", self.instances, self.bound);
                if let Some(n) = &self.note {
                    let _ = write!(out, " note: {n}");
                }
            }
            Status::Fail => {
                let w = self.witness.as_ref().expect("failed verdicts carry a witness");
                let _ = write!(out, " THEOREM-COUNTEREXAMPLE {} instance={}", w.detail, render_instance(&w.instance));
            }
            Status::Skip => {
                let _ = write!(out, " {}", self.skipped_reason.as_deref().unwrap_or(""));
            }
        }
        out
    }

    /// Tab-separated: id, structure, status, instances, bound, detail.
    pub fn render_machine(&self) -> String {
        let detail = match self.status {
            Status::Pass => self.note.clone().unwrap_or_default(),
            Status::Fail => {
                let w = self.witness.as_ref().expect("failed verdicts carry a witness");
                format!("THEOREM-COUNTEREXAMPLE {} instance={}", w.detail, render_instance(&w.instance))
            }
            Status::Skip => self.skipped_reason.clone().unwrap_or_default(),
        };
        [self.property_id, &self.structure_id, self.status.as_str(), &self.instances.to_string(), &self.bound, &detail].join("\t")
    }
}

fn render_instance(inst: &Instance) -> String {
    inst.iter()
        .map(|g| format!("[{}]", g.iter().map(usize::to_string).collect::<Vec<_>>().join(",")))
        .collect::<Vec<_>>()
        .join("")
}

fn verdict(
    id: &'static str,
    structure: &str,
    bound: String,
    instances: impl IntoIterator<Item = Instance>,
    mut holds: impl FnMut(&Instance) -> bool,
    describe: impl Fn(&Instance) -> String,
) -> PropertyVerdict {
    let mut count = 0;
    let mut witness = None;
    for inst in instances {
        count += 1;
        if !holds(&inst) {
            witness = Some(Counterexample { detail: describe(&inst), instance: inst });
            break;
        }
    }
    PropertyVerdict {
        property_id: id,
        structure_id: structure.to_string(),
        status: if witness.is_some() { Status::Fail } else { Status::Pass },
        witness,
        skipped_reason: None,
        note: None,
        bound,
        instances: count,
    }
}

fn skipped(id: &'static str, structure: &str, reason: &str) -> PropertyVerdict {
    PropertyVerdict {
        property_id: id,
        structure_id: structure.to_string(),
        status: Status::Skip,
        witness: None,
        skipped_reason: Some(reason.to_string()),
        note: None,
        bound: String::new(),
        instances: 0,
    }
}

fn names(c: &Carrier, xs: &[usize]) -> String {
    xs.iter().map(|&x| c.name(x)).collect::<Vec<_>>().join(" ")
}

// ------------------------------------------------------------ hypergroups

pub struct GroupCtx<'a> {
    pub table: &'a HyperTable,
    pub report: HypergroupReport,
}

impl<'a> GroupCtx<'a> {
    pub fn new(table: &'a HyperTable) -> Self {
        GroupCtx { table, report: check_hypergroup(table) }
    }

    fn neg(&self, a: usize) -> usize {
        self.report.inverse.as_ref().expect("validated hypergroup")[a]
    }
}

pub const HYPERGROUP_LAWS: [&str; 3] = ["R2.5", "R2.6", "R2.7"];

fn group_holds(id: &str, ctx: &GroupCtx<'_>, inst: &Instance) -> Option<bool> {
    let zero = ctx.report.zero?;
    Some(match id {
        // -(-a) = a
        "R2.5" => {
            let a = inst[0][0];
            ctx.neg(ctx.neg(a)) == a
        }
        // 0 # a = {a}
        "R2.6" => {
            let a = inst[0][0];
            *ctx.table.get(zero, a) == IndexSet::singleton(ctx.table.order(), a)
        }
        // the zero is unique. Only elements relative to which reversibility
        // also holds count: in a group every element meets the inverse
        // clause alone, and the uniqueness argument leans on reversibility.
        "R2.7" => ctx.report.valid_zeros.len() == 1,
        _ => return None,
    })
}

/// Re-runs one hypergroup property on a single instance.
pub fn replay_hypergroup(table: &HyperTable, id: &str, inst: &Instance) -> Result<bool> {
    let ctx = GroupCtx::new(table);
    if !ctx.report.is_hypergroup() {
        return Err(Error::Precondition("not a hypergroup".into()));
    }
    group_holds(id, &ctx, inst).ok_or_else(|| Error::UnknownStructure(id.to_string()))
}

/// Involution of inverses, neutrality of the zero and its uniqueness.
pub fn verify_hypergroup_laws(table: &HyperTable, structure: &str) -> Result<Vec<PropertyVerdict>> {
    let ctx = GroupCtx::new(table);
    if !ctx.report.is_hypergroup() {
        return Err(Error::Precondition(format!("`{structure}` is not a hypergroup")));
    }
    let n = table.order();
    let c = table.carrier();
    let elems = || (0..n).map(|a| vec![vec![a]]);
    let mut out = vec![verdict("R2.5", structure, format!("a in X, |X|={n}"), elems(), |i| group_holds("R2.5", &ctx, i).unwrap(), |i| {
        format!("-(-{}) = {}", c.name(i[0][0]), c.name(ctx.neg(ctx.neg(i[0][0]))))
    })];
    if ctx.report.is_commutative {
        out.push(verdict("R2.6", structure, format!("a in X, |X|={n}"), elems(), |i| group_holds("R2.6", &ctx, i).unwrap(), |i| {
            format!("0 # {} = {}", c.name(i[0][0]), c.render_set(table.get(ctx.report.zero.unwrap(), i[0][0])))
        }));
        out.push(verdict("R2.7", structure, "single instance".into(), [vec![]], |i| group_holds("R2.7", &ctx, i).unwrap(), |_| {
            format!("zeros {}", c.render_set(&ctx.report.valid_zeros))
        }));
        if ctx.report.zeros.len() > 1 {
            let last = out.last_mut().expect("just pushed");
            last.note = Some(format!(
                "inverse clause alone is met by {}; reversibility singles out {}",
                c.render_set(&ctx.report.zeros),
                c.render_set(&ctx.report.valid_zeros)
            ));
        }
    } else {
        out.push(skipped("R2.6", structure, "hypothesis unmet: hyperoperation is not commutative"));
        out.push(skipped("R2.7", structure, "hypothesis unmet: hyperoperation is not commutative"));
    }
    Ok(out)
}

// ----------------------------------------------------------------- spaces

/// A space with its subspaces computed on first use.
pub struct SpaceCtx<'a> {
    pub space: &'a HyperVectorSpace,
    subspaces: OnceCell<Vec<IndexSet>>,
}

impl<'a> SpaceCtx<'a> {
    pub fn new(space: &'a HyperVectorSpace) -> Self {
        SpaceCtx { space, subspaces: OnceCell::new() }
    }

    fn subspaces(&self) -> &[IndexSet] {
        self.subspaces.get_or_init(|| all_subspaces(self.space).expect("size guarded by the caller"))
    }

    fn set(&self, xs: &[usize]) -> IndexSet {
        IndexSet::from_indices(self.space.dim_v(), xs.iter().copied())
    }

    fn spans(&self, xs: &[usize]) -> bool {
        lc_hull(self.space, xs).expect("valid indices") == self.space.all_vectors()
    }

    /// Intersection of every subspace containing `s`.
    fn smallest_subspace_containing(&self, s: &IndexSet) -> IndexSet {
        self.subspaces()
            .iter()
            .filter(|w| s.is_subset(w))
            .fold(self.space.all_vectors(), |acc, w| acc.intersection(w))
    }
}

/// Results proved only for strongly left distributive spaces.
pub const STRONG_LEFT_GATED: [&str; 5] = ["T4.11", "T5.8", "T5.10", "T6.2", "T6.5"];

/// Results whose statements need a non-zero scalar, so they say nothing over
/// the one-element field where `1 = 0`.
pub const NONTRIVIAL_FIELD_GATED: [&str; 3] = ["R5.4", "T5.6", "T5.9"];

pub const SPACE_LAWS: [&str; 8] = ["R3.7i", "R3.7ii", "R3.7iii", "T4.3", "T4.5", "T4.6", "T4.8", "T4.10"];
pub const LINALG_THEOREMS: [&str; 8] = ["R5.3", "R5.4", "T4.11", "T5.6", "T5.7", "T5.8", "T5.9", "T5.10"];
pub const BASIS_THEOREMS: [&str; 4] = ["T6.2", "T6.3", "T6.4", "T6.5"];

const NOT_STRONG_LEFT: &str = "hypothesis unmet: space is not strongly left distributive";
const TRIVIAL_FIELD: &str = "hypothesis unmet: scalar field is trivial (1 = 0)";

fn space_holds(id: &str, ctx: &SpaceCtx<'_>, inst: &Instance) -> Option<bool> {
    let s = ctx.space;
    let f = s.field();
    let theta = s.theta();
    Some(match id {
        // k * theta = {theta}
        "R3.7i" => *s.act(inst[0][0], theta) == s.theta_set(),
        // k * a = {theta} implies k = 0 or a = theta
        "R3.7ii" => {
            let (k, a) = (inst[0][0], inst[0][1]);
            *s.act(k, a) != s.theta_set() || k == f.zero() || a == theta
        }
        // -a in (-1) * a
        "R3.7iii" => {
            let a = inst[0][0];
            s.act(f.neg(f.one()), a).contains(s.vneg(a))
        }
        "T4.3" => check_subspace(s, &ctx.set(&inst[0])).expect("valid subset").criteria_agree(),
        "T4.5" | "T4.8" | "T4.10" => {
            let (u, w) = (ctx.set(&inst[0]), ctx.set(&inst[1]));
            match id {
                "T4.5" => check_subspace(s, &u.intersection(&w)).expect("valid").is_subspace(),
                "T4.8" => check_subspace(s, &s.vadd().extend(&u, &w).expect("valid")).expect("valid").is_subspace(),
                _ => s.vadd().extend(&u, &w).expect("valid") == ctx.smallest_subspace_containing(&u.union(&w)),
            }
        }
        "T4.6" => {
            let meet = inst.iter().map(|g| ctx.set(g)).fold(s.all_vectors(), |acc, w| acc.intersection(&w));
            check_subspace(s, &meet).expect("valid").is_subspace()
        }
        // a non-null vector alone is independent
        "R5.3" => is_independent(s, &inst[0]).expect("valid"),
        // a list containing theta is dependent
        "R5.4" => is_dependent(s, &inst[0]).expect("valid").is_some(),
        // HL(list) is the smallest subspace containing the list
        "T4.11" => {
            let hull = lc_hull(s, &inst[0]).expect("valid");
            check_subspace(s, &hull).expect("valid").is_subspace() && hull == ctx.smallest_subspace_containing(&ctx.set(&inst[0]))
        }
        // dependent iff some member is a combination of the others
        "T5.6" => {
            let v = &inst[0];
            let dep = is_dependent(s, v).expect("valid").is_some();
            let expressible = if v.len() == 1 {
                v[0] == theta
            } else {
                (0..v.len()).any(|i| express_as_combination(s, v, i).expect("valid").is_some())
            };
            dep == expressible
        }
        // non-null list is dependent iff some member is a combination of its predecessors
        "T5.7" => {
            let v = &inst[0];
            let dep = is_dependent(s, v).expect("valid").is_some();
            let prefix = (1..v.len()).any(|i| express_in(s, &v[..i], v[i]).is_some());
            dep == prefix
        }
        // a dependent spanning set has a spanning proper subset
        "T5.8" => {
            let g = &inst[0];
            (0..g.len()).any(|i| {
                let mut rest = g.clone();
                rest.remove(i);
                ctx.spans(&rest)
            })
        }
        // no proper subset of an independent spanning set spans
        "T5.9" => {
            let g = &inst[0];
            (0..g.len()).all(|i| {
                let mut rest = g.clone();
                rest.remove(i);
                !ctx.spans(&rest)
            })
        }
        // |indep| <= |gens| and indep plus |gens|-|indep| generators spans
        "T5.10" => {
            let (g, b) = (&inst[0], &inst[1]);
            if b.len() > g.len() {
                return Some(false);
            }
            let mut found = false;
            for_each_combination(g.len(), g.len() - b.len(), &mut |pos| {
                let mut cand = b.clone();
                cand.extend(pos.iter().map(|&p| g[p]));
                if ctx.spans(&cand) {
                    found = true;
                    ControlFlow::Break(())
                } else {
                    ControlFlow::Continue(())
                }
            });
            found
        }
        // every non-null vector has exactly one representation
        "T6.2" => {
            let basis = Basis { vectors: inst[0].clone() };
            (0..s.dim_v())
                .filter(|&v| v != theta)
                .all(|v| representations(s, &basis, v).expect("valid").len() == 1)
        }
        // an independent list extends to a basis keeping it as a prefix
        "T6.3" => match extend_to_basis(s, &inst[0]) {
            Ok(b) => b.vectors.starts_with(&inst[0]) && is_basis_of(s, &s.all_vectors(), &b.vectors).expect("valid"),
            Err(_) => false,
        },
        // a maximal independent set is a basis
        "T6.4" => ctx.spans(&inst[0]),
        // dim(U # W) = dim U + dim W - dim(U meet W)
        "T6.5" => {
            let (u, w) = (ctx.set(&inst[0]), ctx.set(&inst[1]));
            dimension_formula(s, &u, &w).map(|(l, r)| l == r).unwrap_or(false)
        }
        _ => return None,
    })
}

/// Both sides of `dim(U # W) = dim U + dim W - dim(U meet W)` for two
/// subspaces, as `(left, right)`.
pub fn dimension_formula(space: &HyperVectorSpace, u: &IndexSet, w: &IndexSet) -> Result<(usize, usize)> {
    let sum = space.vadd().extend(u, w)?;
    let left = subspace_dimension(space, &sum)?;
    let right = subspace_dimension(space, u)? + subspace_dimension(space, w)? - subspace_dimension(space, &u.intersection(w))?;
    Ok((left, right))
}

/// Re-runs one space property on a single instance, ignoring gating.
pub fn replay_space(space: &HyperVectorSpace, id: &str, inst: &Instance) -> Result<bool> {
    guard(space)?;
    space_holds(id, &SpaceCtx::new(space), inst).ok_or_else(|| Error::UnknownStructure(id.to_string()))
}

fn guard(space: &HyperVectorSpace) -> Result<()> {
    let n = space.dim_v();
    if n > SUBSET_GUARD {
        return Err(Error::SizeGuard(format!("{n} vectors; the harness enumerates subsets of at most {SUBSET_GUARD}")));
    }
    Ok(())
}

fn describe_lists<'c>(ctx: &'c SpaceCtx<'_>) -> impl Fn(&Instance) -> String + 'c {
    move |inst| inst.iter().map(|g| format!("({})", names(ctx.space.vectors(), g))).collect::<Vec<_>>().join(" ")
}

fn run_space(ctx: &SpaceCtx<'_>, structure: &str, id: &'static str, bound: String, instances: Vec<Instance>) -> PropertyVerdict {
    if STRONG_LEFT_GATED.contains(&id) && !ctx.space.class().strong_left {
        return skipped(id, structure, NOT_STRONG_LEFT);
    }
    let f = ctx.space.field();
    if NONTRIVIAL_FIELD_GATED.contains(&id) && f.one() == f.zero() {
        return skipped(id, structure, TRIVIAL_FIELD);
    }
    verdict(id, structure, bound, instances, |i| space_holds(id, ctx, i).expect("known id"), describe_lists(ctx))
}

fn pairs(subs: &[IndexSet]) -> Vec<Instance> {
    subs.iter().flat_map(|u| subs.iter().map(move |w| vec![u.to_vec(), w.to_vec()])).collect()
}

/// Lists of `k` distinct vectors for `k` in `1..=max`, as increasing index
/// lists (or every ordering when `ordered`), drawn from `pool`.
fn lists(pool: &[usize], max: usize, ordered: bool) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for k in 1..=max.min(pool.len()) {
        for_each_combination(pool.len(), k, &mut |pos| {
            let base: Vec<usize> = pos.iter().map(|&p| pool[p]).collect();
            if ordered {
                permute(&base, &mut out);
            } else {
                out.push(base);
            }
            ControlFlow::Continue(())
        });
    }
    out
}

fn permute(xs: &[usize], out: &mut Vec<Vec<usize>>) {
    for p in crate::constructions::canonical::permutations(xs.len()) {
        out.push(p.iter().map(|&i| xs[i]).collect());
    }
}

/// Every subset of the vectors, as increasing lists.
fn subsets(n: usize) -> Vec<Vec<usize>> {
    IndexSet::all_subsets(n).map(|s| s.to_vec()).collect()
}

/// The scalar-action consequences, the two subspace criteria, and the
/// intersection and sum results over all subspace pairs.
pub fn verify_space_laws(space: &HyperVectorSpace, structure: &str) -> Result<Vec<PropertyVerdict>> {
    guard(space)?;
    let ctx = SpaceCtx::new(space);
    let (nf, nv) = (space.field().order(), space.dim_v());
    let f = space.field().carrier();
    let v = space.vectors();
    let subs = ctx.subspaces().to_vec();
    let mut out = Vec::new();
    out.push(verdict("R3.7i", structure, format!("k in F, |F|={nf}"), (0..nf).map(|k| vec![vec![k]]), |i| space_holds("R3.7i", &ctx, i).unwrap(), |i| {
        format!("{} * {} = {}", f.name(i[0][0]), v.name(space.theta()), v.render_set(space.act(i[0][0], space.theta())))
    }));
    let kv: Vec<Instance> = (0..nf).flat_map(|k| (0..nv).map(move |a| vec![vec![k, a]])).collect();
    out.push(verdict("R3.7ii", structure, format!("(k, a) in F x V, {} pairs", nf * nv), kv, |i| space_holds("R3.7ii", &ctx, i).unwrap(), |i| {
        format!("{} * {} = {{theta}}", f.name(i[0][0]), v.name(i[0][1]))
    }));
    out.push(verdict("R3.7iii", structure, format!("a in V, |V|={nv}"), (0..nv).map(|a| vec![vec![a]]), |i| space_holds("R3.7iii", &ctx, i).unwrap(), |i| {
        format!("-{} = {} not in (-1) * {}", v.name(i[0][0]), v.name(space.vneg(i[0][0])), v.name(i[0][0]))
    }));
    let all: Vec<Instance> = subsets(nv).into_iter().map(|s| vec![s]).collect();
    out.push(run_space(&ctx, structure, "T4.3", format!("all {} subsets of V", all.len()), all));
    let p = pairs(&subs);
    let bound = format!("all {} ordered pairs of the {} subspaces", p.len(), subs.len());
    out.push(run_space(&ctx, structure, "T4.5", bound.clone(), p.clone()));
    let families = subspace_families(&subs);
    out.push(run_space(&ctx, structure, "T4.6", format!("{} non-empty families of subspaces", families.len()), families));
    out.push(run_space(&ctx, structure, "T4.8", bound.clone(), p.clone()));
    out.push(run_space(&ctx, structure, "T4.10", bound, p));
    Ok(out)
}

/// Every non-empty family of subspaces when there are at most 12 of them,
/// otherwise every family of at most three.
fn subspace_families(subs: &[IndexSet]) -> Vec<Instance> {
    let max = if subs.len() <= 12 { subs.len() } else { 3 };
    let idx: Vec<usize> = (0..subs.len()).collect();
    lists(&idx, max, false).into_iter().map(|fam| fam.iter().map(|&i| subs[i].to_vec()).collect()).collect()
}

/// Dependence, deletion and exchange results.
pub fn verify_linalg_theorems(space: &HyperVectorSpace, structure: &str) -> Result<Vec<PropertyVerdict>> {
    guard(space)?;
    let ctx = SpaceCtx::new(space);
    let nv = space.dim_v();
    let theta = space.theta();
    let all: Vec<usize> = (0..nv).collect();
    let nonnull: Vec<usize> = all.iter().copied().filter(|&v| v != theta).collect();
    let single = |id| -> Instance { vec![vec![id]] };
    let mut out = Vec::new();
    out.push(run_space(&ctx, structure, "R5.3", format!("{} non-null vectors", nonnull.len()), nonnull.iter().map(|&a| single(a)).collect()));
    let with_theta: Vec<Instance> = lists(&all, 3, false).into_iter().filter(|l| l.contains(&theta)).map(|l| vec![l]).collect();
    out.push(run_space(&ctx, structure, "R5.4", format!("{} sets of at most 3 vectors containing theta", with_theta.len()), with_theta));
    let small: Vec<Instance> = lists(&all, 3, false).into_iter().map(|l| vec![l]).collect();
    out.push(run_space(&ctx, structure, "T4.11", format!("{} sets of at most 3 vectors", small.len()), small.clone()));
    out.push(run_space(&ctx, structure, "T5.6", format!("{} sets of at most 3 vectors", small.len()), small));
    let ordered: Vec<Instance> = lists(&nonnull, 3, true).into_iter().map(|l| vec![l]).collect();
    out.push(run_space(&ctx, structure, "T5.7", format!("{} ordered lists of at most 3 non-null vectors", ordered.len()), ordered));

    let spanning: Vec<Vec<usize>> = subsets(nv).into_iter().filter(|g| !g.is_empty() && ctx.spans(g)).collect();
    let (dep, indep): (Vec<_>, Vec<_>) = spanning.iter().cloned().partition(|g| is_dependent(space, g).expect("valid").is_some());
    out.push(run_space(&ctx, structure, "T5.8", format!("all {} dependent spanning sets", dep.len()), dep.into_iter().map(|g| vec![g]).collect()));
    out.push(run_space(&ctx, structure, "T5.9", format!("all {} independent spanning sets", indep.len()), indep.into_iter().map(|g| vec![g]).collect()));
    let independent: Vec<Vec<usize>> = subsets(nv).into_iter().filter(|b| is_independent(space, b).expect("valid")).collect();
    let exchange: Vec<Instance> = spanning.iter().flat_map(|g| independent.iter().map(move |b| vec![g.clone(), b.clone()])).collect();
    out.push(run_space(
        &ctx,
        structure,
        "T5.10",
        format!("{} spanning sets x {} independent sets", spanning.len(), independent.len()),
        exchange,
    ));
    Ok(out)
}

/// Unique representation, extension, maximal independent sets and the
/// dimension formula.
pub fn verify_basis_theorems(space: &HyperVectorSpace, structure: &str) -> Result<Vec<PropertyVerdict>> {
    guard(space)?;
    let ctx = SpaceCtx::new(space);
    let nv = space.dim_v();
    let theta = space.theta();
    let independent: Vec<Vec<usize>> = subsets(nv).into_iter().filter(|b| is_independent(space, b).expect("valid")).collect();
    let bases: Vec<Vec<usize>> = independent.iter().filter(|b| ctx.spans(b)).cloned().collect();
    let mut out = Vec::new();

    let mut t62 = run_space(&ctx, structure, "T6.2", format!("{} bases x {} non-null vectors", bases.len(), nv - 1), bases.iter().map(|b| vec![b.clone()]).collect());
    if t62.status == Status::Pass {
        let counts: Vec<usize> = bases
            .iter()
            .map(|b| representations(space, &Basis { vectors: b.clone() }, theta).expect("valid").len())
            .collect();
        let (lo, hi) = (counts.iter().min().copied().unwrap_or(0), counts.iter().max().copied().unwrap_or(0));
        t62.note = Some(if lo == hi { format!("theta has {lo} representation(s) per basis") } else { format!("theta has {lo}..{hi} representations per basis") });
    }
    out.push(t62);
    out.push(run_space(&ctx, structure, "T6.3", format!("all {} independent sets", independent.len()), independent.iter().map(|b| vec![b.clone()]).collect()));
    let maximal: Vec<Instance> = independent
        .iter()
        .filter(|b| {
            (0..nv).filter(|v| !b.contains(v)).all(|v| {
                let mut bigger = (*b).clone();
                bigger.push(v);
                !is_independent(space, &bigger).expect("valid")
            })
        })
        .map(|b| vec![b.clone()])
        .collect();
    out.push(run_space(&ctx, structure, "T6.4", format!("all {} maximal independent sets", maximal.len()), maximal));
    let subs = ctx.subspaces().to_vec();
    let p = pairs(&subs);
    out.push(run_space(&ctx, structure, "T6.5", format!("all {} ordered pairs of the {} subspaces", p.len(), subs.len()), p));
    Ok(out)
}

/// Runs the three space-level suites in order.
pub fn verify_space_all(space: &HyperVectorSpace, structure: &str) -> Result<Vec<PropertyVerdict>> {
    let mut out = verify_space_laws(space, structure)?;
    out.extend(verify_linalg_theorems(space, structure)?);
    out.extend(verify_basis_theorems(space, structure)?);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{builtin_hyperfield, product_space, Builtin};

    fn statuses(v: &[PropertyVerdict]) -> Vec<(&'static str, Status)> {
        v.iter().map(|p| (p.property_id, p.status)).collect()
    }

    #[test]
    fn k2_addition_laws() {
        let k2 = builtin_hyperfield(Builtin::K2).unwrap();
        let v = verify_hypergroup_laws(k2.add(), "K2").unwrap();
        assert!(v.iter().all(PropertyVerdict::passed), "{v:?}");
        assert_eq!(v[0].render_text(), "R2.5 K2 PASS [2 instances: a in X, |X|=2]");
    }

    #[test]
    fn k2_squared_gates_strong_left_results() {
        let k2 = builtin_hyperfield(Builtin::K2).unwrap();
        let p = product_space(&k2, 2).unwrap();
        let all = verify_space_all(&p.space, "K2^2").unwrap();
        for v in &all {
            let gated = STRONG_LEFT_GATED.contains(&v.property_id);
            assert_eq!(v.status, if gated { Status::Skip } else { Status::Pass }, "{}", v.render_text());
        }
    }

    #[test]
    fn k2_over_itself_runs_everything() {
        let k2 = builtin_hyperfield(Builtin::K2).unwrap();
        let p = product_space(&k2, 1).unwrap();
        let all = verify_space_all(&p.space, "K2^1").unwrap();
        assert!(all.iter().all(PropertyVerdict::passed), "{:?}", statuses(&all));
        let t62 = all.iter().find(|v| v.property_id == "T6.2").unwrap();
        assert_eq!(t62.note.as_deref(), Some("theta has 1 representation(s) per basis"));
    }

    #[test]
    fn replay_reproduces_verdicts() {
        let k2 = builtin_hyperfield(Builtin::K2).unwrap();
        let p = product_space(&k2, 2).unwrap();
        let (v10, v01) = (p.index_of(&[1, 0]), p.index_of(&[0, 1]));
        assert!(replay_space(&p.space, "T5.6", &vec![vec![v10, v01]]).unwrap());
        assert!(replay_hypergroup(k2.add(), "R2.6", &vec![vec![1]]).unwrap());
        assert!(replay_space(&p.space, "nope", &vec![]).is_err());
    }

    #[test]
    fn failing_instance_is_rendered_as_counterexample() {
        let v = verdict("X1", "S", "b".into(), [vec![vec![1]], vec![vec![2]]], |i| i[0][0] < 2, |_| "detail".into());
        assert_eq!(v.status, Status::Fail);
        assert_eq!(v.instances, 2);
        assert_eq!(v.render_text(), "X1 S FAIL THEOREM-COUNTEREXAMPLE detail instance=[2]");
        assert_eq!(v.render_machine(), "X1\tS\tFAIL\t2\tb\tTHEOREM-COUNTEREXAMPLE detail instance=[2]");
    }
}
