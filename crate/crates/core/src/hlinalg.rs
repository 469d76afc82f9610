//! Hyper-linear algebra: linear-combination sets, spans, dependence,
//! subspace sums, bases and dimension.
//!
//! Vector lists are ordered and may repeat; coefficient tuples are searched
//! lexicographically over scalar indices (first position most significant),
//! so every witness returned here is deterministic.

use std::ops::ControlFlow;

use crate::axioms::{check_subspace, HyperVectorSpace};
use crate::error::{Error, Result};
use crate::set::IndexSet;

/// Scalars `(a1, .., an)` paired position-wise with a vector list.
pub type CoeffTuple = Vec<usize>;

/// Largest vector carrier for which whole-subset enumeration is allowed.
pub const SUBSET_GUARD: usize = 12;

/// A not-all-zero coefficient tuple whose combination contains theta.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DependenceWitness {
    pub coeffs: CoeffTuple,
    pub vectors: Vec<usize>,
}

/// An ordered independent list whose combinations cover a subspace.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Basis {
    pub vectors: Vec<usize>,
}

impl Basis {
    pub fn dim(&self) -> usize {
        self.vectors.len()
    }
}

fn check_vectors(space: &HyperVectorSpace, vecs: &[usize]) -> Result<()> {
    vecs.iter().try_for_each(|&v| space.vectors().check_index(v))
}

/// The combination set `a1*v1 # a2*v2 # .. # an*vn`.
pub fn linear_combination(space: &HyperVectorSpace, coeffs: &[usize], vecs: &[usize]) -> Result<IndexSet> {
    if coeffs.len() != vecs.len() {
        return Err(Error::LengthMismatch { coeffs: coeffs.len(), vectors: vecs.len() });
    }
    if vecs.is_empty() {
        return Err(Error::Precondition("a linear combination needs at least one vector".into()));
    }
    check_vectors(space, vecs)?;
    coeffs.iter().try_for_each(|&a| space.field().carrier().check_index(a))?;
    let parts: Vec<IndexSet> = coeffs.iter().zip(vecs).map(|(&a, &v)| space.act(a, v).clone()).collect();
    space.vadd().fold(&parts)
}

/// Visits every coefficient tuple over `vecs` in lexicographic order with
/// its combination set, reusing prefix sums.
fn walk_combinations<B>(
    space: &HyperVectorSpace,
    vecs: &[usize],
    visit: &mut impl FnMut(&[usize], &IndexSet) -> ControlFlow<B>,
) -> Option<B> {
    fn go<B>(
        space: &HyperVectorSpace,
        vecs: &[usize],
        coeffs: &mut Vec<usize>,
        acc: &IndexSet,
        visit: &mut impl FnMut(&[usize], &IndexSet) -> ControlFlow<B>,
    ) -> ControlFlow<B> {
        let depth = coeffs.len();
        if depth == vecs.len() {
            return visit(coeffs, acc);
        }
        for a in 0..space.field().order() {
            let next = space.vadd().extend_unchecked(acc, space.act(a, vecs[depth]));
            coeffs.push(a);
            let r = go(space, vecs, coeffs, &next, visit);
            coeffs.pop();
            r?;
        }
        ControlFlow::Continue(())
    }
    match go(space, vecs, &mut Vec::with_capacity(vecs.len()), &space.theta_set(), visit) {
        ControlFlow::Break(b) => Some(b),
        ControlFlow::Continue(()) => None,
    }
}

/// Union of all combination sets over `vecs` (`{theta}` for an empty list).
///
/// Set extension distributes over union, so this folds the per-vector
/// unions `U_a a*v` instead of walking every coefficient tuple.
pub fn lc_hull(space: &HyperVectorSpace, vecs: &[usize]) -> Result<IndexSet> {
    check_vectors(space, vecs)?;
    let nf = space.field().order();
    let mut acc = space.theta_set();
    for &v in vecs {
        let line = space.action().scalars_act(&IndexSet::full(nf), v);
        acc = space.vadd().extend_unchecked(&acc, &line);
    }
    Ok(acc)
}

/// The smallest subspace containing `vecs`, computed as the union of their
/// linear combinations.
///
/// That union is a subspace whenever the space is strongly left
/// distributive; otherwise it is checked, and a precondition error points
/// the caller at [`subspace_closure`] when the check fails.
pub fn span(space: &HyperVectorSpace, vecs: &[usize]) -> Result<IndexSet> {
    if vecs.is_empty() {
        return Err(Error::Precondition("span needs at least one vector".into()));
    }
    let hull = lc_hull(space, vecs)?;
    if !check_subspace(space, &hull)?.is_subspace() {
        let names = vecs.iter().map(|&v| space.vectors().name(v)).collect::<Vec<_>>().join(" ");
        return Err(Error::Precondition(format!(
            "the linear combinations of [{names}] do not form a subspace (space is {}strongly left distributive); use subspace_closure",
            if space.class().strong_left { "" } else { "not " }
        )));
    }
    Ok(hull)
}

/// Least subset containing `s` and theta that is closed under `#` and the
/// scalar action.
pub fn subspace_closure(space: &HyperVectorSpace, s: &IndexSet) -> Result<IndexSet> {
    space.vectors().check_subset(s)?;
    let nf = space.field().order();
    let mut w = s.clone();
    w.insert(space.theta());
    loop {
        let mut next = w.clone();
        for x in &w {
            for y in &w {
                next.union_with(space.vadd().get(x, y));
            }
            for a in 0..nf {
                next.union_with(space.act(a, x));
            }
        }
        if next == w {
            return Ok(w);
        }
        w = next;
    }
}

/// First (lexicographic) not-all-zero tuple whose combination over `vecs`
/// contains theta, or `None` when `vecs` is independent.
pub fn is_dependent(space: &HyperVectorSpace, vecs: &[usize]) -> Result<Option<DependenceWitness>> {
    if vecs.is_empty() {
        return Err(Error::Precondition("dependence needs at least one vector".into()));
    }
    check_vectors(space, vecs)?;
    let zero = space.field().zero();
    let theta = space.theta();
    Ok(walk_combinations(space, vecs, &mut |c, set| {
        if set.contains(theta) && c.iter().any(|&a| a != zero) {
            ControlFlow::Break(c.to_vec())
        } else {
            ControlFlow::Continue(())
        }
    })
    .map(|coeffs| DependenceWitness { coeffs, vectors: vecs.to_vec() }))
}

pub fn is_independent(space: &HyperVectorSpace, vecs: &[usize]) -> Result<bool> {
    if vecs.is_empty() {
        return Ok(true);
    }
    Ok(is_dependent(space, vecs)?.is_none())
}

/// Dependence of a finite set of vectors: the set is dependent iff its
/// members, listed once each, are.
pub fn is_dependent_set(space: &HyperVectorSpace, s: &IndexSet) -> Result<bool> {
    space.vectors().check_subset(s)?;
    if s.is_empty() {
        return Ok(false);
    }
    Ok(is_dependent(space, &s.to_vec())?.is_some())
}

/// Coefficients over `vecs` without position `i` whose combination contains
/// `vecs[i]`; the first such tuple in lexicographic order.
pub fn express_as_combination(space: &HyperVectorSpace, vecs: &[usize], i: usize) -> Result<Option<CoeffTuple>> {
    if vecs.len() < 2 {
        return Err(Error::Precondition("need at least two vectors".into()));
    }
    if i >= vecs.len() {
        return Err(Error::IndexOutOfRange { index: i, size: vecs.len() });
    }
    check_vectors(space, vecs)?;
    let target = vecs[i];
    let rest: Vec<usize> = vecs.iter().enumerate().filter(|&(k, _)| k != i).map(|(_, &v)| v).collect();
    Ok(express_in(space, &rest, target))
}

/// Lexicographically first tuple `c` with `target in LC(c, vecs)`.
pub fn express_in(space: &HyperVectorSpace, vecs: &[usize], target: usize) -> Option<CoeffTuple> {
    walk_combinations(space, vecs, &mut |c, set| {
        if set.contains(target) {
            ControlFlow::Break(c.to_vec())
        } else {
            ControlFlow::Continue(())
        }
    })
}

fn require_subspace(space: &HyperVectorSpace, w: &IndexSet, what: &str) -> Result<()> {
    if check_subspace(space, w)?.is_subspace() {
        Ok(())
    } else {
        Err(Error::Precondition(format!("{what} {} is not a subspace", space.vectors().render_set(w))))
    }
}

/// Linear sum `W1 # W2 = U { x # y : x in W1, y in W2 }` of two subspaces.
pub fn sum_subspaces(space: &HyperVectorSpace, w1: &IndexSet, w2: &IndexSet) -> Result<IndexSet> {
    require_subspace(space, w1, "first operand")?;
    require_subspace(space, w2, "second operand")?;
    Ok(space.vadd().extend_unchecked(w1, w2))
}

pub fn is_direct_sum(space: &HyperVectorSpace, w1: &IndexSet, w2: &IndexSet) -> Result<bool> {
    require_subspace(space, w1, "first operand")?;
    require_subspace(space, w2, "second operand")?;
    Ok(w1.intersection(w2) == space.theta_set())
}

fn spans(space: &HyperVectorSpace, vecs: &[usize], target: &IndexSet) -> bool {
    lc_hull(space, vecs).map(|h| &h == target).unwrap_or(false)
}

/// Shrinks a dependent generating list of the whole space to an independent
/// one by repeatedly dropping the first vector expressible from the others.
///
/// Independent input is returned unchanged. Each removal is re-checked to
/// keep the list spanning; in a strongly left distributive space that check
/// cannot fail.
pub fn delete_redundant(space: &HyperVectorSpace, gens: &[usize]) -> Result<Vec<usize>> {
    check_vectors(space, gens)?;
    let all = space.all_vectors();
    if gens.is_empty() || !spans(space, gens, &all) {
        return Err(Error::Precondition("generators do not span the space".into()));
    }
    let mut cur = gens.to_vec();
    while is_dependent(space, &cur)?.is_some() {
        let mut removed = false;
        if cur.len() == 1 {
            // a lone dependent vector is theta, and V = {theta}
            cur.clear();
            break;
        }
        for i in 0..cur.len() {
            if express_as_combination(space, &cur, i)?.is_none() {
                continue;
            }
            let mut rest = cur.clone();
            rest.remove(i);
            if spans(space, &rest, &all) {
                cur = rest;
                removed = true;
                break;
            }
        }
        if !removed {
            return Err(Error::Precondition(format!(
                "no vector can be dropped while keeping the span (space is {}strongly left distributive)",
                if space.class().strong_left { "" } else { "not " }
            )));
        }
    }
    Ok(cur)
}

/// Greedily extends an independent list inside subspace `w`: appends the
/// lowest-index vector of `w` not yet covered until the combinations of the
/// list cover `w`.
pub fn extend_to_basis_within(space: &HyperVectorSpace, w: &IndexSet, indep: &[usize]) -> Result<Basis> {
    check_vectors(space, indep)?;
    require_subspace(space, w, "target")?;
    if let Some(v) = indep.iter().find(|&&v| !w.contains(v)) {
        return Err(Error::Precondition(format!("{} is outside the target subspace", space.vectors().name(*v))));
    }
    if !indep.is_empty() {
        if let Some(wit) = is_dependent(space, indep)? {
            return Err(Error::Precondition(format!(
                "input is dependent: coefficients {:?} give theta",
                wit.coeffs
            )));
        }
    }
    let mut cur = indep.to_vec();
    loop {
        let hull = lc_hull(space, &cur)?;
        match w.difference(&hull).first() {
            None => break,
            Some(v) => cur.push(v),
        }
    }
    if !is_independent(space, &cur)? {
        return Err(Error::Precondition(format!(
            "greedy extension produced a dependent list {:?}",
            cur
        )));
    }
    Ok(Basis { vectors: cur })
}

/// Extends an independent list (possibly empty) to a basis of the space.
pub fn extend_to_basis(space: &HyperVectorSpace, indep: &[usize]) -> Result<Basis> {
    extend_to_basis_within(space, &space.all_vectors(), indep)
}

/// A basis of subspace `w`, built greedily from the empty list.
pub fn basis_of(space: &HyperVectorSpace, w: &IndexSet) -> Result<Basis> {
    extend_to_basis_within(space, w, &[])
}

/// Size of the greedy basis; zero for `{theta}`.
pub fn dimension(space: &HyperVectorSpace) -> Result<usize> {
    Ok(extend_to_basis(space, &[])?.dim())
}

pub fn subspace_dimension(space: &HyperVectorSpace, w: &IndexSet) -> Result<usize> {
    Ok(basis_of(space, w)?.dim())
}

/// True when `list` is independent and its combinations cover `w`.
pub fn is_basis_of(space: &HyperVectorSpace, w: &IndexSet, list: &[usize]) -> Result<bool> {
    Ok(is_independent(space, list)? && lc_hull(space, list)? == *w)
}

/// Every coefficient tuple representing `v` over `basis`, in lexicographic
/// order.
pub fn representations(space: &HyperVectorSpace, basis: &Basis, v: usize) -> Result<Vec<CoeffTuple>> {
    check_vectors(space, &basis.vectors)?;
    space.vectors().check_index(v)?;
    if basis.vectors.is_empty() {
        return Ok(if v == space.theta() { vec![vec![]] } else { vec![] });
    }
    let mut out = Vec::new();
    walk_combinations::<()>(space, &basis.vectors, &mut |c, set| {
        if set.contains(v) {
            out.push(c.to_vec());
        }
        ControlFlow::Continue(())
    });
    Ok(out)
}

/// Replaces `|indep|` of the generators by the independent list while
/// keeping the span: returns `indep ++ g` for the lexicographically first
/// choice of `|gens| - |indep|` generator positions that still spans.
pub fn exchange(space: &HyperVectorSpace, gens: &[usize], indep: &[usize]) -> Result<Vec<usize>> {
    check_vectors(space, gens)?;
    check_vectors(space, indep)?;
    let all = space.all_vectors();
    if !spans(space, gens, &all) {
        return Err(Error::Precondition("generators do not span the space".into()));
    }
    if !is_independent(space, indep)? {
        return Err(Error::Precondition("second list is not independent".into()));
    }
    if indep.len() > gens.len() {
        return Err(Error::TheoremViolation(format!(
            "independent list of {} vectors exceeds {} generators",
            indep.len(),
            gens.len()
        )));
    }
    let keep = gens.len() - indep.len();
    let mut found = None;
    for_each_combination(gens.len(), keep, &mut |pos| {
        let mut cand = indep.to_vec();
        cand.extend(pos.iter().map(|&p| gens[p]));
        if spans(space, &cand, &all) {
            found = Some(cand);
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    });
    found.ok_or_else(|| {
        Error::TheoremViolation(format!(
            "no {keep} of the generators complete the independent list to a spanning list"
        ))
    })
}

/// Visits every `k`-subset of `0..n` as an increasing position list, in
/// lexicographic order.
pub fn for_each_combination(n: usize, k: usize, visit: &mut impl FnMut(&[usize]) -> ControlFlow<()>) {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, visit: &mut impl FnMut(&[usize]) -> ControlFlow<()>) -> ControlFlow<()> {
        if cur.len() == k {
            return visit(cur);
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            let r = go(i + 1, n, k, cur, visit);
            cur.pop();
            r?;
        }
        ControlFlow::Continue(())
    }
    let _ = go(0, n, k, &mut Vec::with_capacity(k), visit);
}

/// Every subspace of the space, in mask order. Guarded to at most
/// [`SUBSET_GUARD`] vectors.
pub fn all_subspaces(space: &HyperVectorSpace) -> Result<Vec<IndexSet>> {
    let n = space.dim_v();
    if n > SUBSET_GUARD {
        return Err(Error::SizeGuard(format!(
            "{n} vectors; subset enumeration is limited to {SUBSET_GUARD}"
        )));
    }
    let mut out = Vec::new();
    for w in IndexSet::all_subsets(n) {
        if w.contains(space.theta()) && check_subspace(space, &w)?.is_subspace() {
            out.push(w);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{builtin_hyperfield, product_space, Builtin, ProductSpace};

    fn k2(n: usize) -> ProductSpace {
        product_space(&builtin_hyperfield(Builtin::K2).unwrap(), n).unwrap()
    }

    fn set(p: &ProductSpace, vs: &[&[usize]]) -> IndexSet {
        IndexSet::from_indices(p.space.dim_v(), vs.iter().map(|c| p.index_of(c)))
    }

    #[test]
    fn combination_examples() {
        let p = k2(2);
        let s = &p.space;
        let v10 = p.index_of(&[1, 0]);
        assert_eq!(linear_combination(s, &[0], &[v10]).unwrap(), s.theta_set());
        assert_eq!(linear_combination(s, &[1], &[v10]).unwrap().to_vec(), vec![v10]);
        assert_eq!(linear_combination(s, &[1, 1], &[v10, v10]).unwrap(), set(&p, &[&[0, 0], &[1, 0]]));
        assert!(matches!(linear_combination(s, &[1], &[v10, v10]), Err(Error::LengthMismatch { .. })));
        assert!(linear_combination(s, &[], &[]).is_err());
    }

    #[test]
    fn span_examples() {
        let p = k2(2);
        let s = &p.space;
        let (v10, v01) = (p.index_of(&[1, 0]), p.index_of(&[0, 1]));
        assert_eq!(span(s, &[v10]).unwrap(), set(&p, &[&[0, 0], &[1, 0]]));
        assert_eq!(span(s, &[s.theta()]).unwrap(), s.theta_set());
        assert_eq!(span(s, &[v10, v01]).unwrap(), s.all_vectors());
        assert!(span(s, &[]).is_err());
        assert_eq!(subspace_closure(s, &IndexSet::empty(4)).unwrap(), s.theta_set());
        assert_eq!(subspace_closure(s, &IndexSet::singleton(4, v10)).unwrap(), span(s, &[v10]).unwrap());
        assert_eq!(subspace_closure(s, &s.all_vectors()).unwrap(), s.all_vectors());
    }

    #[test]
    fn dependence_examples() {
        let p = k2(2);
        let s = &p.space;
        let (v10, v01, v11) = (p.index_of(&[1, 0]), p.index_of(&[0, 1]), p.index_of(&[1, 1]));
        assert_eq!(is_dependent(s, &[s.theta()]).unwrap().unwrap().coeffs, vec![1]);
        assert!(is_dependent(s, &[v10]).unwrap().is_none());
        let w = is_dependent(s, &[v10, v01, v11]).unwrap().unwrap();
        assert_eq!(w.coeffs, vec![1, 1, 1]);
        assert!(linear_combination(s, &w.coeffs, &w.vectors).unwrap().contains(s.theta()));
        // a repeated vector is dependent
        assert!(is_dependent(s, &[v10, v10]).unwrap().is_some());
        assert_eq!(express_as_combination(s, &[v10, v01, v11], 2).unwrap(), Some(vec![1, 1]));
        assert_eq!(express_as_combination(s, &[v10, v01], 0).unwrap(), None);
        assert_eq!(express_as_combination(s, &[v10, v10], 1).unwrap(), Some(vec![1]));
        assert!(express_as_combination(s, &[v10], 0).is_err());
    }

    #[test]
    fn sums_of_subspaces() {
        let p = k2(2);
        let s = &p.space;
        let (a1, a2) = (p.coordinate_subspace(&[0]), p.coordinate_subspace(&[1]));
        assert_eq!(sum_subspaces(s, &a1, &a2).unwrap(), s.all_vectors());
        assert_eq!(sum_subspaces(s, &a1, &s.theta_set()).unwrap(), a1);
        assert_eq!(sum_subspaces(s, &a1, &a1).unwrap(), a1);
        assert!(is_direct_sum(s, &a1, &a2).unwrap());
        assert!(!is_direct_sum(s, &a1, &a1).unwrap());
        assert!(is_direct_sum(s, &s.theta_set(), &a1).unwrap());
        assert!(sum_subspaces(s, &a1.union(&a2), &a1).is_err());
    }

    #[test]
    fn deletion_extension_and_exchange() {
        let p = k2(2);
        let s = &p.space;
        let (v10, v01, v11) = (p.index_of(&[1, 0]), p.index_of(&[0, 1]), p.index_of(&[1, 1]));
        assert_eq!(delete_redundant(s, &[v10, v01, v11]).unwrap(), vec![v01, v11]);
        assert_eq!(delete_redundant(s, &[s.theta(), v10, v01]).unwrap(), vec![v10, v01]);
        assert_eq!(delete_redundant(s, &[v10, v01]).unwrap(), vec![v10, v01]);
        assert!(delete_redundant(s, &[v10]).is_err());

        assert_eq!(extend_to_basis(s, &[]).unwrap().dim(), 2);
        let b = extend_to_basis(s, &[v10]).unwrap();
        assert_eq!(b.vectors[0], v10);
        assert!(!span(s, &[v10]).unwrap().contains(b.vectors[1]));
        assert_eq!(extend_to_basis(s, &[v10, v01]).unwrap().vectors, vec![v10, v01]);
        assert!(extend_to_basis(s, &[v10, v10]).is_err());

        assert_eq!(exchange(s, &[v10, v01], &[v11]).unwrap(), vec![v11, v10]);
        assert_eq!(exchange(s, &[v10, v01], &[]).unwrap(), vec![v10, v01]);
        assert_eq!(exchange(s, &[v10, v01], &[v10, v01]).unwrap(), vec![v10, v01]);
        assert!(matches!(exchange(s, &[v10, v01, v11], &[v10, v01, v11]), Err(Error::Precondition(_))));
    }

    #[test]
    fn dimension_and_representations() {
        assert_eq!(dimension(&k2(1).space).unwrap(), 1);
        let p = k2(2);
        let s = &p.space;
        assert_eq!(dimension(s).unwrap(), 2);
        assert_eq!(subspace_dimension(s, &s.theta_set()).unwrap(), 0);
        let (v10, v01, v11) = (p.index_of(&[1, 0]), p.index_of(&[0, 1]), p.index_of(&[1, 1]));
        let b = Basis { vectors: vec![v10, v01] };
        assert_eq!(representations(s, &b, v11).unwrap(), vec![vec![1, 1]]);
        assert_eq!(representations(s, &b, v10).unwrap(), vec![vec![1, 0]]);
        assert!(representations(s, &b, s.theta()).unwrap().contains(&vec![0, 0]));
        assert!(is_basis_of(s, &s.all_vectors(), &[v10, v01]).unwrap());
        assert!(!is_basis_of(s, &s.all_vectors(), &[v10]).unwrap());
    }

    #[test]
    fn subspaces_of_small_products() {
        let p = k2(2);
        let subs = all_subspaces(&p.space).unwrap();
        assert_eq!(subs.len(), 4);
        assert_eq!(all_subspaces(&k2(3).space).unwrap().len(), 8);
        let mut seen = Vec::new();
        for_each_combination(4, 2, &mut |c| {
            seen.push(c.to_vec());
            ControlFlow::Continue(())
        });
        assert_eq!(seen.len(), 6);
        assert_eq!(seen[0], vec![0, 1]);
    }
}
