//! Carriers, set-valued operation tables and their set extension.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::set::IndexSet;

/// An ordered finite set of named elements, addressed by index.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Carrier {
    names: Vec<String>,
}

impl Carrier {
    pub fn new<S: Into<String>, I: IntoIterator<Item = S>>(names: I) -> Result<Self> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.is_empty() {
            return Err(Error::EmptyCarrier);
        }
        let mut seen = HashSet::new();
        for n in &names {
            if !seen.insert(n.as_str()) {
                return Err(Error::DuplicateLabel(n.clone()));
            }
        }
        Ok(Carrier { names })
    }

    /// Carrier labelled `0, 1, .., n-1`.
    pub fn numbered(n: usize) -> Self {
        Carrier::new((0..n).map(|i| i.to_string())).expect("distinct labels")
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn check_index(&self, i: usize) -> Result<()> {
        if i < self.len() {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange { index: i, size: self.len() })
        }
    }

    pub fn check_subset(&self, s: &IndexSet) -> Result<()> {
        if s.universe() == self.len() {
            Ok(())
        } else {
            Err(Error::UniverseMismatch { expected: self.len(), got: s.universe() })
        }
    }

    /// Renders a subset as `{a b c}` in index order.
    pub fn render_set(&self, s: &IndexSet) -> String {
        let parts: Vec<&str> = s.iter().map(|i| self.name(i)).collect();
        format!("{{{}}}", parts.join(" "))
    }
}

/// An `n x n` table of non-empty subsets: a hyperoperation on a carrier.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HyperTable {
    carrier: Carrier,
    cells: Vec<IndexSet>,
}

impl HyperTable {
    /// Cells are given row-major. Every cell must be non-empty.
    pub fn new(carrier: Carrier, cells: Vec<IndexSet>) -> Result<Self> {
        let n = carrier.len();
        if cells.len() != n * n {
            return Err(Error::Shape { expected: n * n, got: cells.len() });
        }
        for (k, c) in cells.iter().enumerate() {
            carrier.check_subset(c)?;
            if c.is_empty() {
                return Err(Error::EmptyCell { row: k / n, col: k % n });
            }
        }
        Ok(HyperTable { carrier, cells })
    }

    /// Builds a table from a cell function; the function must return
    /// non-empty subsets of `0..n`.
    pub fn from_fn(carrier: Carrier, mut f: impl FnMut(usize, usize) -> IndexSet) -> Result<Self> {
        let n = carrier.len();
        let mut cells = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                cells.push(f(a, b));
            }
        }
        Self::new(carrier, cells)
    }

    /// Like [`HyperTable::new`] but keeps empty cells, so that the
    /// hypergroupoid checker has something to report on.
    pub fn new_unchecked(carrier: Carrier, cells: Vec<IndexSet>) -> Self {
        assert_eq!(cells.len(), carrier.len() * carrier.len());
        HyperTable { carrier, cells }
    }

    pub fn carrier(&self) -> &Carrier {
        &self.carrier
    }

    pub fn order(&self) -> usize {
        self.carrier.len()
    }

    pub fn get(&self, a: usize, b: usize) -> &IndexSet {
        &self.cells[a * self.order() + b]
    }

    pub fn cells(&self) -> &[IndexSet] {
        &self.cells
    }

    pub fn with_cell(&self, a: usize, b: usize, value: IndexSet) -> HyperTable {
        let mut t = self.clone();
        let n = t.order();
        t.cells[a * n + b] = value;
        t
    }

    pub fn is_commutative(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (a + 1..n).all(|b| self.get(a, b) == self.get(b, a)))
    }

    /// Set extension `A # B = U { a # b : a in A, b in B }`.
    pub fn extend(&self, a: &IndexSet, b: &IndexSet) -> Result<IndexSet> {
        self.carrier.check_subset(a)?;
        self.carrier.check_subset(b)?;
        Ok(self.extend_unchecked(a, b))
    }

    pub(crate) fn extend_unchecked(&self, a: &IndexSet, b: &IndexSet) -> IndexSet {
        let mut out = IndexSet::empty(self.order());
        for x in a {
            for y in b {
                out.union_with(self.get(x, y));
            }
        }
        out
    }

    /// `{x} # A`.
    pub fn extend_elem(&self, x: usize, a: &IndexSet) -> IndexSet {
        let mut out = IndexSet::empty(self.order());
        for y in a {
            out.union_with(self.get(x, y));
        }
        out
    }

    /// Left fold of [`HyperTable::extend`] over `parts`.
    ///
    /// The result is independent of bracketing only for associative tables;
    /// establishing that is the caller's job.
    pub fn fold(&self, parts: &[IndexSet]) -> Result<IndexSet> {
        let (first, rest) = parts.split_first().ok_or(Error::EmptyFold)?;
        self.carrier.check_subset(first)?;
        let mut acc = first.clone();
        for p in rest {
            acc = self.extend(&acc, p)?;
        }
        Ok(acc)
    }

    /// The table after relabelling element `i` as `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> HyperTable {
        let n = self.order();
        let mut cells = vec![IndexSet::empty(n); n * n];
        for a in 0..n {
            for b in 0..n {
                cells[perm[a] * n + perm[b]] =
                    IndexSet::from_indices(n, self.get(a, b).iter().map(|x| perm[x]));
            }
        }
        HyperTable { carrier: self.carrier.clone(), cells }
    }
}

/// An `n x n` single-valued operation table.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MulTable {
    carrier: Carrier,
    cells: Vec<usize>,
}

impl MulTable {
    pub fn new(carrier: Carrier, cells: Vec<usize>) -> Result<Self> {
        let n = carrier.len();
        if cells.len() != n * n {
            return Err(Error::Shape { expected: n * n, got: cells.len() });
        }
        for &c in &cells {
            carrier.check_index(c)?;
        }
        Ok(MulTable { carrier, cells })
    }

    pub fn from_fn(carrier: Carrier, mut f: impl FnMut(usize, usize) -> usize) -> Result<Self> {
        let n = carrier.len();
        let cells = (0..n * n).map(|k| f(k / n, k % n)).collect();
        Self::new(carrier, cells)
    }

    pub fn carrier(&self) -> &Carrier {
        &self.carrier
    }

    pub fn order(&self) -> usize {
        self.carrier.len()
    }

    pub fn get(&self, a: usize, b: usize) -> usize {
        self.cells[a * self.order() + b]
    }

    pub fn cells(&self) -> &[usize] {
        &self.cells
    }

    /// `a . S = { a . s : s in S }`.
    pub fn left_image(&self, a: usize, s: &IndexSet) -> IndexSet {
        IndexSet::from_indices(self.order(), s.iter().map(|x| self.get(a, x)))
    }

    /// `S . a = { s . a : s in S }`.
    pub fn right_image(&self, s: &IndexSet, a: usize) -> IndexSet {
        IndexSet::from_indices(self.order(), s.iter().map(|x| self.get(x, a)))
    }

    pub fn permuted(&self, perm: &[usize]) -> MulTable {
        let n = self.order();
        let mut cells = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                cells[perm[a] * n + perm[b]] = perm[self.get(a, b)];
            }
        }
        MulTable { carrier: self.carrier.clone(), cells }
    }
}
