//! Unpruned census: visit every table, keep those the generic checker
//! accepts, and canonicalize with a separate relabelling routine.

use std::collections::BTreeSet;

use hyperalg::{check_hyperfield, check_hypergroup, Carrier, Distributivity, HyperTable, IndexSet, MulTable};
use itertools::Itertools;

pub type Key = Vec<u64>;

/// Cells as bit masks, row-major.
pub type Masks = Vec<u64>;

fn table(n: usize, masks: &[u64]) -> HyperTable {
    HyperTable::new(Carrier::numbered(n), masks.iter().map(|&m| IndexSet::from_mask(n, m)).collect()).unwrap()
}

fn relabel_mask(m: u64, p: &[usize]) -> u64 {
    (0..p.len()).filter(|&x| m >> x & 1 == 1).map(|x| 1u64 << p[x]).sum()
}

/// Cells of the table after renaming `x` to `p[x]`.
pub fn relabel(n: usize, masks: &[u64], p: &[usize]) -> Masks {
    let mut out = vec![0; n * n];
    for a in 0..n {
        for b in 0..n {
            out[p[a] * n + p[b]] = relabel_mask(masks[a * n + b], p);
        }
    }
    out
}

/// Zeros `z` with unique two-sided inverses and reversibility.
pub fn valid_zeros(n: usize, m: &[u64]) -> Vec<usize> {
    let has = |a: usize, b: usize, x: usize| m[a * n + b] >> x & 1 == 1;
    (0..n)
        .filter(|&z| {
            let inv: Vec<Vec<usize>> = (0..n).map(|a| (0..n).filter(|&b| has(a, b, z) && has(b, a, z)).collect()).collect();
            if inv.iter().any(|v| v.len() != 1) {
                return false;
            }
            (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| !has(b, c, a) || has(a, inv[c][0], b))))
        })
        .collect()
}

pub fn hypergroup_key(n: usize, m: &[u64]) -> Key {
    let zeros = valid_zeros(n, m);
    (0..n)
        .permutations(n)
        .filter(|p| zeros.iter().any(|&z| p[z] == 0))
        .map(|p| relabel(n, m, &p))
        .min()
        .expect("a hypergroup has a zero")
}

pub fn hyperfield_key(n: usize, add: &[u64], mul: &[usize], zero: usize, one: usize) -> Key {
    (0..n)
        .permutations(n)
        .filter(|p| p[zero] == 0)
        .map(|p| {
            let mut k = relabel(n, add, &p);
            let mut pm = vec![0u64; n * n];
            for a in 0..n {
                for b in 0..n {
                    pm[p[a] * n + p[b]] = p[mul[a * n + b]] as u64;
                }
            }
            k.extend(pm);
            k.push(p[one] as u64);
            k
        })
        .min()
        .unwrap()
}

/// Every table over `n` elements as mask lists, in odometer order.
pub fn all_tables(n: usize) -> impl Iterator<Item = Masks> {
    let full = (1u64 << n) - 1;
    (0..n * n).map(move |_| 1..=full).multi_cartesian_product()
}

pub struct OracleCensus {
    pub keys: BTreeSet<Key>,
    pub visited: u64,
}

/// Canonical keys of all hypergroups of order `n`; with `commutative`,
/// only commutative ones. Commutativity is tested first since it is cheap.
pub fn hypergroups(n: usize, commutative: bool) -> OracleCensus {
    let mut keys = BTreeSet::new();
    let mut visited = 0;
    for m in all_tables(n) {
        visited += 1;
        if commutative && !(0..n).all(|a| (0..a).all(|b| m[a * n + b] == m[b * n + a])) {
            continue;
        }
        let r = check_hypergroup(&table(n, &m));
        let ok = if commutative { r.is_commutative_hypergroup() } else { r.is_hypergroup() };
        if ok {
            keys.insert(hypergroup_key(n, &m));
        }
    }
    OracleCensus { keys, visited }
}

/// Canonical keys of all hyperfields of order `n`: every addition table,
/// every multiplication table and every choice of zero and one.
pub fn hyperfields(n: usize, mode: Distributivity) -> OracleCensus {
    let mut keys = BTreeSet::new();
    let mut visited = 0;
    let adds: Vec<Masks> = all_tables(n).collect();
    let muls: Vec<Vec<usize>> = (0..n * n).map(|_| 0..n).multi_cartesian_product().collect();
    for add in &adds {
        let t = table(n, add);
        if !check_hypergroup(&t).is_commutative_hypergroup() {
            visited += (muls.len() * n * n) as u64;
            continue;
        }
        for mul in &muls {
            let mt = MulTable::new(Carrier::numbered(n), mul.clone()).unwrap();
            for zero in 0..n {
                for one in 0..n {
                    visited += 1;
                    if check_hyperfield(&t, &mt, zero, one, mode).is_ok() {
                        keys.insert(hyperfield_key(n, add, mul, zero, one));
                    }
                }
            }
        }
    }
    OracleCensus { keys, visited }
}
