//! Canonical relabelling of small tables.
//!
//! A table's key is its row-major list of cell masks (for hyperfields
//! followed by the multiplication cells and the index of one). The canonical
//! form is the least key over all relabellings that send a zero to index 0.

use sha2::{Digest, Sha256};

use crate::set::IndexSet;
use crate::table::{Carrier, HyperTable, MulTable};

pub type Key = Vec<u64>;

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if cur.len() == used.len() {
            out.push(cur.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                cur.push(i);
                go(cur, used, out);
                cur.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::with_capacity(n), &mut vec![false; n], &mut out);
    out
}

fn relabelled(t: &HyperTable, perm: &[usize]) -> HyperTable {
    let n = t.order();
    let p = t.permuted(perm);
    HyperTable::new(Carrier::numbered(n), p.cells().to_vec()).expect("permuted table stays valid")
}

pub fn hypergroup_key(t: &HyperTable) -> Key {
    t.cells().iter().map(IndexSet::low_mask).collect()
}

pub fn hyperfield_key(add: &HyperTable, mul: &MulTable, one: usize) -> Key {
    let mut k = hypergroup_key(add);
    k.extend(mul.cells().iter().map(|&c| c as u64));
    k.push(one as u64);
    k
}

/// Least relabelling of `t` over permutations sending some member of
/// `zeros` to index 0. Returns the relabelled table and its key.
pub fn canonical_hypergroup(t: &HyperTable, zeros: &IndexSet) -> (HyperTable, Key) {
    let mut best: Option<(Key, Vec<usize>)> = None;
    for perm in permutations(t.order()) {
        let Some(z) = perm.iter().position(|&p| p == 0) else { continue };
        if !zeros.contains(z) {
            continue;
        }
        let key = hypergroup_key(&t.permuted(&perm));
        if best.as_ref().is_none_or(|(b, _)| key < *b) {
            best = Some((key, perm));
        }
    }
    let (key, perm) = best.expect("at least one zero");
    (relabelled(t, &perm), key)
}

pub struct CanonicalField {
    pub add: HyperTable,
    pub mul: MulTable,
    pub one: usize,
    pub key: Key,
}

/// Least relabelling of a hyperfield over permutations fixing its zero at 0.
pub fn canonical_hyperfield(add: &HyperTable, mul: &MulTable, zero: usize, one: usize) -> CanonicalField {
    let n = add.order();
    let mut best: Option<(Key, Vec<usize>)> = None;
    for perm in permutations(n).into_iter().filter(|p| p[zero] == 0) {
        let key = hyperfield_key(&add.permuted(&perm), &mul.permuted(&perm), perm[one]);
        if best.as_ref().is_none_or(|(b, _)| key < *b) {
            best = Some((key, perm));
        }
    }
    let (key, perm) = best.expect("identity permutation qualifies");
    let mul_cells = mul.permuted(&perm).cells().to_vec();
    CanonicalField {
        add: relabelled(add, &perm),
        mul: MulTable::new(Carrier::numbered(n), mul_cells).expect("permuted table stays valid"),
        one: perm[one],
        key,
    }
}

/// Dotted decimal rendering of a key.
pub fn render_key(key: &[u64]) -> String {
    key.iter().map(u64::to_string).collect::<Vec<_>>().join(".")
}

/// First 16 hex digits of the SHA-256 of `kind/order/key`.
pub fn content_id(kind: &str, order: usize, key: &[u64]) -> String {
    let digest = Sha256::digest(format!("{kind}/{order}/{}", render_key(key)).as_bytes());
    hex::encode(digest)[..16].to_string()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::axioms::check_hypergroup;

    #[test]
    fn permutation_counts() {
        assert_eq!(permutations(1), vec![vec![0]]);
        assert_eq!(permutations(3).len(), 6);
        assert_eq!(permutations(4).len(), 24);
        assert_eq!(permutations(3)[1], vec![0, 2, 1]);
    }

    #[test]
    fn relabelled_sign_hyperaddition_canonicalizes_identically() {
        let n = 3;
        let t = HyperTable::from_fn(Carrier::numbered(n), |a, b| match (a, b) {
            (0, x) | (x, 0) => IndexSet::singleton(n, x),
            (x, y) if x == y => IndexSet::singleton(n, x),
            _ => IndexSet::full(n),
        })
        .unwrap();
        let zeros = check_hypergroup(&t).zeros;
        let (_, key) = canonical_hypergroup(&t, &zeros);
        for perm in permutations(n) {
            let p = relabelled(&t, &perm);
            let r = check_hypergroup(&p);
            assert!(r.is_commutative_hypergroup());
            assert_eq!(canonical_hypergroup(&p, &r.zeros).1, key);
        }
        assert_eq!(content_id("commutative-hypergroup", 3, &key).len(), 16);
    }
}
