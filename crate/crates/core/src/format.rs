//! The line-oriented `.hyp` structure-file format.
//!
//! ```text
//! # comments run to the end of the line
//! structure hyperfield K2
//!   elements 0 1
//!   zero 0
//!   one 1
//!   add 0 0 = { 0 }
//!   ...
//!   mul 1 1 = 1
//! end
//! structure hvspace V over K2
//!   vectors v00 v10 v01 v11
//!   theta v00
//!   vadd v00 v00 = { v00 }
//!   ...
//!   act 1 v10 = { v10 }
//! end
//! structure hypergroup H
//!   elements 0 1
//!   op 0 0 = { 0 }
//!   ...
//! end
//! ```
//!
//! Every cell must be listed exactly once. Parsing checks totality and
//! non-emptiness only; the axioms are left to [`crate::axioms`].
//!
//! Whole-line comments at the top of the file, followed by a blank line,
//! form the header; comments directly above a block stay attached to it.
//! Rendering a parsed file reproduces it byte for byte when it was itself
//! produced by [`render`]; other blank lines and trailing comments are dropped.

use std::collections::HashMap;
use std::fmt::Write as _;

use crate::axioms::{check_hyperfield, check_hypervectorspace, ActionTable, Distributivity, HyperVectorSpace, Hyperfield, Report};
use crate::constructions::census::{CensusEntry, Kind};
use crate::set::IndexSet;
use crate::table::{Carrier, HyperTable, MulTable};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("line {line}, column {col}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub message: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FieldBlock {
    pub name: String,
    pub add: HyperTable,
    pub mul: MulTable,
    pub zero: usize,
    pub one: usize,
}

impl FieldBlock {
    pub fn from_hyperfield(name: &str, f: &Hyperfield) -> Self {
        FieldBlock { name: name.to_string(), add: f.add().clone(), mul: f.mul().clone(), zero: f.zero(), one: f.one() }
    }

    pub fn validate(&self, mode: Distributivity) -> Result<Hyperfield, Report> {
        check_hyperfield(&self.add, &self.mul, self.zero, self.one, mode)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpaceBlock {
    pub name: String,
    pub field: String,
    /// Scalar labels of the referenced field.
    pub scalars: Carrier,
    pub vadd: HyperTable,
    pub action: ActionTable,
    pub theta: usize,
}

impl SpaceBlock {
    pub fn from_space(name: &str, field: &str, s: &HyperVectorSpace) -> Self {
        SpaceBlock {
            name: name.to_string(),
            field: field.to_string(),
            scalars: s.field().carrier().clone(),
            vadd: s.vadd().clone(),
            action: s.action().clone(),
            theta: s.theta(),
        }
    }

    pub fn vectors(&self) -> &Carrier {
        self.vadd.carrier()
    }

    pub fn validate(&self, field: &Hyperfield) -> Result<HyperVectorSpace, Report> {
        check_hypervectorspace(field, &self.vadd, &self.action, self.theta)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupBlock {
    pub name: String,
    pub op: HyperTable,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BlockKind {
    Hyperfield(FieldBlock),
    Space(SpaceBlock),
    Hypergroup(GroupBlock),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Block {
    /// Comment lines directly above the block, without the leading `#`.
    pub comments: Vec<String>,
    pub kind: BlockKind,
}

impl Block {
    pub fn new(kind: BlockKind) -> Self {
        Block { comments: Vec::new(), kind }
    }

    pub fn name(&self) -> &str {
        match &self.kind {
            BlockKind::Hyperfield(b) => &b.name,
            BlockKind::Space(b) => &b.name,
            BlockKind::Hypergroup(b) => &b.name,
        }
    }

    pub fn kind_name(&self) -> &'static str {
        match self.kind {
            BlockKind::Hyperfield(_) => "hyperfield",
            BlockKind::Space(_) => "hvspace",
            BlockKind::Hypergroup(_) => "hypergroup",
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct StructureFile {
    /// Comment lines before the first block, without the leading `#`.
    pub header: Vec<String>,
    pub blocks: Vec<Block>,
}

impl StructureFile {
    pub fn get(&self, name: &str) -> Option<&Block> {
        self.blocks.iter().find(|b| b.name() == name)
    }

    pub fn field(&self, name: &str) -> Option<&FieldBlock> {
        match self.get(name).map(|b| &b.kind) {
            Some(BlockKind::Hyperfield(f)) => Some(f),
            _ => None,
        }
    }
}

// ---------------------------------------------------------------- parsing

#[derive(Clone, Debug)]
struct Tok<'a> {
    text: &'a str,
    line: usize,
    col: usize,
}

fn err(line: usize, col: usize, message: impl Into<String>) -> ParseError {
    ParseError { line, col, message: message.into() }
}

fn tokenize<'a>(line_no: usize, line: &'a str) -> Vec<Tok<'a>> {
    let mut out = Vec::new();
    let mut start: Option<usize> = None;
    let push = |out: &mut Vec<Tok<'a>>, s: usize, e: usize| {
        out.push(Tok { text: &line[s..e], line: line_no, col: line[..s].chars().count() + 1 });
    };
    for (i, ch) in line.char_indices() {
        if ch == '#' {
            if let Some(s) = start.take() {
                push(&mut out, s, i);
            }
            return out;
        }
        if ch.is_whitespace() || matches!(ch, '{' | '}' | '=') {
            if let Some(s) = start.take() {
                push(&mut out, s, i);
            }
            if !ch.is_whitespace() {
                push(&mut out, i, i + 1);
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(s) = start {
        push(&mut out, s, line.len());
    }
    out
}

enum Rhs<'a> {
    Set(Vec<Tok<'a>>),
    Elem(Tok<'a>),
}

struct Cell<'a> {
    head: Tok<'a>,
    a: Tok<'a>,
    b: Tok<'a>,
    rhs: Rhs<'a>,
}

struct RawBlock<'a> {
    comments: Vec<String>,
    kind: Tok<'a>,
    name: Tok<'a>,
    over: Option<Tok<'a>>,
    lists: HashMap<&'a str, (Tok<'a>, Vec<Tok<'a>>)>,
    cells: Vec<Cell<'a>>,
}

fn parse_cell<'a>(toks: &[Tok<'a>], set_valued: bool) -> Result<Cell<'a>, ParseError> {
    let head = &toks[0];
    let at = |i: usize| toks.get(i).cloned();
    let tail_pos = |i: usize| toks.get(i).or(toks.last()).map(|t| (t.line, t.col + t.text.len())).unwrap();
    let (a, b, eq) = match (at(1), at(2), at(3)) {
        (Some(a), Some(b), Some(eq)) if eq.text == "=" && !matches!(a.text, "{" | "}" | "=") && !matches!(b.text, "{" | "}" | "=") => (a, b, eq),
        _ => {
            let (l, c) = tail_pos(1);
            return Err(err(l, c, format!("expected `{} <x> <y> = ...`", head.text)));
        }
    };
    let rest = &toks[4..];
    if set_valued {
        let (open, close) = (rest.first(), rest.last());
        if open.map(|t| t.text) != Some("{") || close.map(|t| t.text) != Some("}") || rest.len() < 2 {
            return Err(err(eq.line, eq.col + 1, "expected a set literal `{ ... }`"));
        }
        let members = &rest[1..rest.len() - 1];
        if members.is_empty() {
            return Err(err(rest[0].line, rest[0].col, "empty set literal; hyperoperation values must be non-empty"));
        }
        if let Some(t) = members.iter().find(|t| matches!(t.text, "{" | "}" | "=")) {
            return Err(err(t.line, t.col, format!("unexpected `{}` in set literal", t.text)));
        }
        Ok(Cell { head: head.clone(), a, b, rhs: Rhs::Set(members.to_vec()) })
    } else {
        match rest {
            [t] if !matches!(t.text, "{" | "}" | "=") => Ok(Cell { head: head.clone(), a, b, rhs: Rhs::Elem(t.clone()) }),
            _ => Err(err(eq.line, eq.col + 1, "expected a single element")),
        }
    }
}

fn first_pass(text: &str) -> Result<(Vec<String>, Vec<RawBlock<'_>>), ParseError> {
    let mut header = Vec::new();
    let mut pending: Vec<String> = Vec::new();
    let mut blocks = Vec::new();
    let mut cur: Option<RawBlock<'_>> = None;
    let mut last_line = 0;
    for (i, line) in text.lines().enumerate() {
        let line_no = i + 1;
        last_line = line_no;
        let trimmed = line.trim_start();
        if let Some(c) = trimmed.strip_prefix('#') {
            if cur.is_none() {
                pending.push(c.to_string());
            }
            continue;
        }
        let toks = tokenize(line_no, line);
        if toks.is_empty() {
            // a blank line closes the file header
            if cur.is_none() && blocks.is_empty() {
                header.append(&mut pending);
            }
            continue;
        }
        let head = toks[0].clone();
        match &mut cur {
            None => {
                if head.text != "structure" {
                    return Err(err(head.line, head.col, format!("expected `structure`, found `{}`", head.text)));
                }
                let kind = toks.get(1).cloned().ok_or_else(|| err(line_no, line.len() + 1, "missing structure kind"))?;
                if !matches!(kind.text, "hyperfield" | "hvspace" | "hypergroup") {
                    return Err(err(kind.line, kind.col, format!("unknown structure kind `{}`", kind.text)));
                }
                let name = toks.get(2).cloned().ok_or_else(|| err(line_no, line.len() + 1, "missing structure name"))?;
                let over = if kind.text == "hvspace" {
                    match (toks.get(3), toks.get(4)) {
                        (Some(o), Some(f)) if o.text == "over" && toks.len() == 5 => Some(f.clone()),
                        _ => return Err(err(line_no, name.col + name.text.len(), "expected `over <field>`")),
                    }
                } else {
                    if let Some(t) = toks.get(3) {
                        return Err(err(t.line, t.col, format!("unexpected `{}`", t.text)));
                    }
                    None
                };
                let comments = std::mem::take(&mut pending);
                cur = Some(RawBlock { comments, kind, name, over, lists: HashMap::new(), cells: Vec::new() });
            }
            Some(block) => {
                let kind = block.kind.text;
                match head.text {
                    "end" => {
                        if let Some(t) = toks.get(1) {
                            return Err(err(t.line, t.col, format!("unexpected `{}`", t.text)));
                        }
                        blocks.push(cur.take().expect("inside a block"));
                    }
                    "elements" | "zero" | "one" if kind != "hvspace" => list_line(block, &toks)?,
                    "vectors" | "theta" if kind == "hvspace" => list_line(block, &toks)?,
                    "add" if kind == "hyperfield" => block.cells.push(parse_cell(&toks, true)?),
                    "mul" if kind == "hyperfield" => block.cells.push(parse_cell(&toks, false)?),
                    "vadd" | "act" if kind == "hvspace" => block.cells.push(parse_cell(&toks, true)?),
                    "op" if kind == "hypergroup" => block.cells.push(parse_cell(&toks, true)?),
                    other => return Err(err(head.line, head.col, format!("unexpected `{other}` in {kind} block"))),
                }
            }
        }
    }
    if let Some(b) = cur {
        return Err(err(last_line + 1, 1, format!("block `{}` is missing `end`", b.name.text)));
    }
    if blocks.is_empty() {
        header.append(&mut pending);
    } else if !pending.is_empty() {
        return Err(err(last_line, 1, "trailing comments after the last block are not supported"));
    }
    Ok((header, blocks))
}

fn list_line<'a>(block: &mut RawBlock<'a>, toks: &[Tok<'a>]) -> Result<(), ParseError> {
    let head = toks[0].clone();
    if block.lists.contains_key(head.text) {
        return Err(err(head.line, head.col, format!("duplicate `{}` line", head.text)));
    }
    let items = toks[1..].to_vec();
    if let Some(t) = items.iter().find(|t| matches!(t.text, "{" | "}" | "=")) {
        return Err(err(t.line, t.col, format!("unexpected `{}`", t.text)));
    }
    let single = matches!(head.text, "zero" | "one" | "theta");
    if items.is_empty() || (single && items.len() != 1) {
        return Err(err(head.line, head.col + head.text.len(), format!("`{}` expects {}", head.text, if single { "one element" } else { "at least one element" })));
    }
    block.lists.insert(head.text, (head, items));
    Ok(())
}

fn carrier_of(block: &RawBlock<'_>, key: &str) -> Result<Carrier, ParseError> {
    let (head, items) = block
        .lists
        .get(key)
        .ok_or_else(|| err(block.name.line, block.name.col, format!("block `{}` has no `{key}` line", block.name.text)))?;
    let mut seen = HashMap::new();
    for t in items {
        if seen.insert(t.text, ()).is_some() {
            return Err(err(t.line, t.col, format!("duplicate element `{}`", t.text)));
        }
    }
    Carrier::new(items.iter().map(|t| t.text.to_string())).map_err(|e| err(head.line, head.col, e.to_string()))
}

fn lookup(c: &Carrier, t: &Tok<'_>) -> Result<usize, ParseError> {
    c.index_of(t.text).ok_or_else(|| err(t.line, t.col, format!("unknown element `{}`", t.text)))
}

fn single(block: &RawBlock<'_>, key: &str, c: &Carrier) -> Result<usize, ParseError> {
    match block.lists.get(key) {
        Some((_, items)) => lookup(c, &items[0]),
        None => Err(err(block.name.line, block.name.col, format!("block `{}` has no `{key}` line", block.name.text))),
    }
}

/// Collects the cells named `head` into a dense table, rejecting duplicates
/// and reporting the first missing cell.
fn collect<T: Clone>(
    block: &RawBlock<'_>,
    head: &str,
    rows: &Carrier,
    cols: &Carrier,
    value: &mut dyn FnMut(&Rhs<'_>) -> Result<T, ParseError>,
) -> Result<Vec<T>, ParseError> {
    let mut cells: Vec<Option<T>> = vec![None; rows.len() * cols.len()];
    for cell in block.cells.iter().filter(|c| c.head.text == head) {
        let (a, b) = (lookup(rows, &cell.a)?, lookup(cols, &cell.b)?);
        let slot = &mut cells[a * cols.len() + b];
        if slot.is_some() {
            return Err(err(cell.head.line, cell.head.col, format!("duplicate cell {head} {} {}", cell.a.text, cell.b.text)));
        }
        *slot = Some(value(&cell.rhs)?);
    }
    cells
        .into_iter()
        .enumerate()
        .map(|(i, c)| {
            c.ok_or_else(|| {
                err(
                    block.name.line,
                    block.name.col,
                    format!("missing cell {head} {} {} in `{}`", rows.name(i / cols.len()), cols.name(i % cols.len()), block.name.text),
                )
            })
        })
        .collect()
}

fn set_value(universe: &Carrier) -> impl FnMut(&Rhs<'_>) -> Result<IndexSet, ParseError> + '_ {
    move |rhs| match rhs {
        Rhs::Set(ms) => {
            let mut s = IndexSet::empty(universe.len());
            for t in ms {
                s.insert(lookup(universe, t)?);
            }
            Ok(s)
        }
        Rhs::Elem(t) => Err(err(t.line, t.col, "expected a set literal")),
    }
}

/// Parses and resolves a structure file.
pub fn parse(text: &str) -> Result<StructureFile, ParseError> {
    let (header, raw) = first_pass(text)?;
    let mut names: HashMap<&str, &RawBlock<'_>> = HashMap::new();
    for b in &raw {
        if names.insert(b.name.text, b).is_some() {
            return Err(err(b.name.line, b.name.col, format!("duplicate structure name `{}`", b.name.text)));
        }
    }
    let mut blocks = Vec::with_capacity(raw.len());
    for b in &raw {
        let table_err = |e: crate::error::Error| err(b.name.line, b.name.col, e.to_string());
        let kind = match b.kind.text {
            "hyperfield" => {
                let c = carrier_of(b, "elements")?;
                let add = collect(b, "add", &c, &c, &mut set_value(&c))?;
                let mul = collect(b, "mul", &c, &c, &mut |rhs| match rhs {
                    Rhs::Elem(t) => lookup(&c, t),
                    Rhs::Set(_) => unreachable!("mul cells are parsed as elements"),
                })?;
                BlockKind::Hyperfield(FieldBlock {
                    name: b.name.text.to_string(),
                    zero: single(b, "zero", &c)?,
                    one: single(b, "one", &c)?,
                    add: HyperTable::new(c.clone(), add).map_err(table_err)?,
                    mul: MulTable::new(c, mul).map_err(table_err)?,
                })
            }
            "hypergroup" => {
                let c = carrier_of(b, "elements")?;
                let op = collect(b, "op", &c, &c, &mut set_value(&c))?;
                BlockKind::Hypergroup(GroupBlock { name: b.name.text.to_string(), op: HyperTable::new(c, op).map_err(table_err)? })
            }
            _ => {
                let over = b.over.as_ref().expect("hvspace header has a field");
                let field = match names.get(over.text) {
                    Some(f) if f.kind.text == "hyperfield" => f,
                    Some(_) => return Err(err(over.line, over.col, format!("`{}` is not a hyperfield", over.text))),
                    None => return Err(err(over.line, over.col, format!("unresolved reference `{}`", over.text))),
                };
                let scalars = carrier_of(field, "elements")?;
                let v = carrier_of(b, "vectors")?;
                let vadd = collect(b, "vadd", &v, &v, &mut set_value(&v))?;
                let act = collect(b, "act", &scalars, &v, &mut set_value(&v))?;
                BlockKind::Space(SpaceBlock {
                    name: b.name.text.to_string(),
                    field: over.text.to_string(),
                    theta: single(b, "theta", &v)?,
                    action: ActionTable::new(scalars.len(), v.len(), act).map_err(table_err)?,
                    vadd: HyperTable::new(v, vadd).map_err(table_err)?,
                    scalars,
                })
            }
        };
        blocks.push(Block { comments: b.comments.clone(), kind });
    }
    Ok(StructureFile { header, blocks })
}

// -------------------------------------------------------------- rendering

fn render_set(c: &Carrier, s: &IndexSet) -> String {
    let mut out = String::from("{");
    for i in s {
        out.push(' ');
        out.push_str(c.name(i));
    }
    out.push_str(" }");
    out
}

fn render_hyper_cells(out: &mut String, head: &str, rows: &Carrier, t: &HyperTable) {
    let c = t.carrier();
    for a in 0..rows.len() {
        for b in 0..c.len() {
            let _ = writeln!(out, "  {head} {} {} = {}", rows.name(a), c.name(b), render_set(c, t.get(a, b)));
        }
    }
}

fn render_block(out: &mut String, block: &Block) {
    for c in &block.comments {
        let _ = writeln!(out, "#{c}");
    }
    match &block.kind {
        BlockKind::Hyperfield(f) => {
            let c = f.add.carrier();
            let _ = writeln!(out, "structure hyperfield {}", f.name);
            let _ = writeln!(out, "  elements {}", c.names().join(" "));
            let _ = writeln!(out, "  zero {}", c.name(f.zero));
            let _ = writeln!(out, "  one {}", c.name(f.one));
            render_hyper_cells(out, "add", c, &f.add);
            for a in 0..c.len() {
                for b in 0..c.len() {
                    let _ = writeln!(out, "  mul {} {} = {}", c.name(a), c.name(b), c.name(f.mul.get(a, b)));
                }
            }
        }
        BlockKind::Space(s) => {
            let v = s.vectors();
            let _ = writeln!(out, "structure hvspace {} over {}", s.name, s.field);
            let _ = writeln!(out, "  vectors {}", v.names().join(" "));
            let _ = writeln!(out, "  theta {}", v.name(s.theta));
            render_hyper_cells(out, "vadd", v, &s.vadd);
            for a in 0..s.scalars.len() {
                for x in 0..v.len() {
                    let _ = writeln!(out, "  act {} {} = {}", s.scalars.name(a), v.name(x), render_set(v, s.action.get(a, x)));
                }
            }
        }
        BlockKind::Hypergroup(g) => {
            let c = g.op.carrier();
            let _ = writeln!(out, "structure hypergroup {}", g.name);
            let _ = writeln!(out, "  elements {}", c.names().join(" "));
            render_hyper_cells(out, "op", c, &g.op);
        }
    }
    out.push_str("end\n");
}

/// Canonical text of a structure file.
pub fn render(file: &StructureFile) -> String {
    let mut out = String::new();
    for h in &file.header {
        let _ = writeln!(out, "#{h}");
    }
    if !file.header.is_empty() {
        out.push('\n');
    }
    for b in &file.blocks {
        render_block(&mut out, b);
    }
    out
}

/// Census export: manifest header plus one annotated block per entry.
pub fn census_file(kind: Kind, order: usize, entries: &[CensusEntry]) -> StructureFile {
    let header = vec![format!(" census kind={kind} order={order} count={}", entries.len())];
    let blocks = entries
        .iter()
        .map(|e| {
            let name = e.name();
            let kind = match (&e.mul, e.one) {
                (Some(mul), Some(one)) => {
                    BlockKind::Hyperfield(FieldBlock { name, add: e.add.clone(), mul: mul.clone(), zero: 0, one })
                }
                _ => BlockKind::Hypergroup(GroupBlock { name, op: e.add.clone() }),
            };
            Block { comments: vec![format!(" id={} canonical={}", e.id, e.canonical_form)], kind }
        })
        .collect();
    StructureFile { header, blocks }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{builtin_hyperfield, product_space, Builtin};

    const K2: &str = "\
structure hyperfield K2
  elements 0 1
  zero 0
  one 1
  add 0 0 = { 0 }
  add 0 1 = { 1 }
  add 1 0 = { 1 }
  add 1 1 = { 0 1 }
  mul 0 0 = 0
  mul 0 1 = 0
  mul 1 0 = 0
  mul 1 1 = 1
end
";

    #[test]
    fn parses_and_renders_k2() {
        let f = parse(K2).unwrap();
        assert_eq!(f.blocks.len(), 1);
        let k2 = f.field("K2").unwrap().validate(Distributivity::Equal).unwrap();
        assert_eq!(k2.plus(1, 1).to_vec(), vec![0, 1]);
        assert_eq!(render(&f), K2);
    }

    #[test]
    fn loose_spacing_and_comments() {
        let text = K2.replace("{ 0 1 }", "{0 1}   # the interesting cell").replace("end", "\nend");
        let f = parse(&format!("# header\n\n{text}")).unwrap();
        assert_eq!(f.header, vec![" header".to_string()]);
        assert_eq!(render(&f), format!("# header\n\n{K2}"));
    }

    fn first_error(text: &str) -> ParseError {
        parse(text).unwrap_err()
    }

    #[test]
    fn empty_set_literal() {
        let e = first_error(&K2.replace("add 1 1 = { 0 1 }", "add 1 1 = {}"));
        assert!(e.message.contains("empty set literal"), "{e}");
        assert_eq!((e.line, e.col), (8, 13));
    }

    #[test]
    fn duplicate_and_missing_cells() {
        let e = first_error(&K2.replace("add 1 0 = { 1 }", "add 0 1 = { 1 }"));
        assert!(e.message.contains("duplicate cell add 0 1"), "{e}");
        let e = first_error(&K2.replace("  mul 1 0 = 0\n", ""));
        assert!(e.message.contains("missing cell mul 1 0"), "{e}");
        let e = first_error(&K2.replace("mul 1 1 = 1", "mul 1 1 = 2"));
        assert!(e.message.contains("unknown element `2`"), "{e}");
    }

    #[test]
    fn unresolved_and_duplicate_names() {
        let e = first_error("structure hvspace V over K3\n  vectors a\n  theta a\n  vadd a a = { a }\nend\n");
        assert!(e.message.contains("unresolved reference `K3`"), "{e}");
        let e = first_error(&format!("{K2}{K2}"));
        assert!(e.message.contains("duplicate structure name"), "{e}");
        let e = first_error(&K2.replace("end\n", ""));
        assert!(e.message.contains("missing `end`"), "{e}");
    }

    #[test]
    fn space_round_trip_with_forward_reference() {
        let k2 = builtin_hyperfield(Builtin::K2).unwrap();
        let p = product_space(&k2, 2).unwrap();
        let file = StructureFile {
            header: vec![],
            blocks: vec![
                Block::new(BlockKind::Space(SpaceBlock::from_space("V", "K2", &p.space))),
                Block::new(BlockKind::Hyperfield(FieldBlock::from_hyperfield("K2", &k2))),
            ],
        };
        let text = render(&file);
        let back = parse(&text).unwrap();
        assert_eq!(back, file);
        assert_eq!(render(&back), text);
        let BlockKind::Space(s) = &back.blocks[0].kind else { panic!() };
        let field = back.field(&s.field).unwrap().validate(Distributivity::Equal).unwrap();
        assert_eq!(s.validate(&field).unwrap().class(), p.space.class());
    }
}
