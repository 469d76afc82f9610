use std::fmt::Write as _;
use std::fs;

use hyperalg::constructions::census::{enumerate, CensusOptions, Kind};
use hyperalg::constructions::{builtin_hyperfield, product_space, Builtin};
use hyperalg::format::{census_file, render, Block, BlockKind, FieldBlock, SpaceBlock, StructureFile};
use hyperalg::theorems::{verify_basis_theorems, verify_hypergroup_laws, verify_linalg_theorems, verify_space_laws, PropertyVerdict, Status};
use hyperalg::{check_hypergroup, hlinalg, Distributivity, HyperTable, HyperVectorSpace, IndexSet};

use crate::{read, Command, Failure, Format, KindArg, Mode, Outcome, Shared, Suite};

fn mode(m: Mode) -> Distributivity {
    match m {
        Mode::Equal => Distributivity::Equal,
        Mode::Inclusive => Distributivity::Inclusive,
    }
}

pub fn run(cmd: Command) -> Result<Outcome, Failure> {
    match cmd {
        Command::Check(s) => check(&s),
        Command::Span { shared, vectors } => with_space(&shared, |sp| {
            let vs = vector_indices(sp, &vectors)?;
            Ok(members(sp, &hlinalg::span(sp, &vs)?, shared.format))
        }),
        Command::Closure { shared, vectors } => with_space(&shared, |sp| {
            let vs = vector_indices(sp, &vectors)?;
            let s = IndexSet::from_indices(sp.dim_v(), vs);
            Ok(members(sp, &hlinalg::subspace_closure(sp, &s)?, shared.format))
        }),
        Command::Depend { shared, vectors } => with_space(&shared, |sp| {
            let vs = vector_indices(sp, &vectors)?;
            let scalars = sp.field().carrier();
            Ok(match (hlinalg::is_dependent(sp, &vs)?, shared.format) {
                (None, Format::Text) => "independent\n".to_string(),
                (None, Format::Machine) => "independent\n".to_string(),
                (Some(w), f) => {
                    let coeffs: Vec<&str> = w.coeffs.iter().map(|&a| scalars.name(a)).collect();
                    match f {
                        Format::Text => format!("dependent coefficients ({})\n", coeffs.join(" ")),
                        Format::Machine => format!("dependent\t{}\n", coeffs.join("\t")),
                    }
                }
            })
        }),
        Command::Basis { shared, vectors } => with_space(&shared, |sp| {
            let vs = vector_indices(sp, &vectors)?;
            let b = hlinalg::extend_to_basis(sp, &vs)?;
            let names: Vec<&str> = b.vectors.iter().map(|&v| sp.vectors().name(v)).collect();
            Ok(match shared.format {
                Format::Text => format!("basis ({})\ndim {}\n", names.join(" "), b.dim()),
                Format::Machine => format!("basis\t{}\ndim\t{}\n", names.join("\t"), b.dim()),
            })
        }),
        Command::Dim(shared) => with_space(&shared, |sp| {
            let d = hlinalg::dimension(sp)?;
            Ok(match shared.format {
                Format::Text => format!("dim {d}\n"),
                Format::Machine => format!("dim\t{d}\n"),
            })
        }),
        Command::Sum { shared, left, right } => with_space(&shared, |sp| {
            let n = sp.dim_v();
            let u = IndexSet::from_indices(n, vector_indices(sp, &left)?);
            let w = IndexSet::from_indices(n, vector_indices(sp, &right)?);
            let sum = hlinalg::sum_subspaces(sp, &u, &w)?;
            let direct = hlinalg::is_direct_sum(sp, &u, &w)?;
            let mut out = members(sp, &sum, shared.format);
            match shared.format {
                Format::Text => writeln!(out, "direct {direct}").unwrap(),
                Format::Machine => writeln!(out, "direct\t{direct}").unwrap(),
            }
            Ok(out)
        }),
        Command::Enumerate { kind, order, commutative, threads, distributive, output } => {
            let kind = match kind {
                KindArg::Hypergroup if commutative => Kind::CommutativeHypergroup,
                KindArg::Hypergroup => Kind::Hypergroup,
                KindArg::CommutativeHypergroup => Kind::CommutativeHypergroup,
                KindArg::Hyperfield => Kind::Hyperfield,
            };
            let mut opts = CensusOptions::new(kind, order);
            opts.threads = threads;
            opts.mode = mode(distributive);
            let entries = enumerate(&opts)?;
            let text = render(&census_file(kind, order, &entries));
            match output {
                Some(path) => {
                    fs::write(&path, &text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
                    Ok(Outcome { text: format!("wrote {} entries to {}\n", entries.len(), path.display()), ok: true })
                }
                None => Ok(Outcome { text, ok: true }),
            }
        }
        Command::Verify { shared, suite } => verify(&shared, suite),
        Command::Builtin { name, power } => {
            let b: Builtin = name.parse().map_err(|e: hyperalg::Error| Failure::Usage(e.to_string()))?;
            let f = builtin_hyperfield(b)?;
            let fname = b.to_string();
            let mut file = StructureFile { header: vec![], blocks: vec![Block::new(BlockKind::Hyperfield(FieldBlock::from_hyperfield(&fname, &f)))] };
            if let Some(n) = power {
                let p = product_space(&f, n)?;
                file.blocks.push(Block::new(BlockKind::Space(SpaceBlock::from_space(&format!("{fname}^{n}"), &fname, &p.space))));
            }
            Ok(Outcome { text: render(&file), ok: true })
        }
    }
}

fn members(sp: &HyperVectorSpace, s: &IndexSet, format: Format) -> String {
    match format {
        Format::Text => format!("{}\n", sp.vectors().render_set(s)),
        Format::Machine => {
            let names: Vec<&str> = s.iter().map(|v| sp.vectors().name(v)).collect();
            format!("{}\n", names.join("\t"))
        }
    }
}

fn vector_indices(sp: &HyperVectorSpace, names: &[String]) -> Result<Vec<usize>, Failure> {
    names
        .iter()
        .filter(|n| !n.is_empty())
        .map(|n| sp.vectors().index_of(n).ok_or_else(|| Failure::Usage(format!("unknown vector `{n}`"))))
        .collect()
}

/// Validates a space block together with the hyperfield it references.
fn load_space(file: &StructureFile, s: &SpaceBlock, m: Distributivity) -> Result<HyperVectorSpace, Failure> {
    let fb = file.field(&s.field).ok_or_else(|| Failure::Usage(format!("unresolved reference `{}`", s.field)))?;
    let field = fb.validate(m).map_err(|r| Failure::Semantic(format!("hyperfield `{}` fails its axioms:\n{r}", fb.name)))?;
    s.validate(&field).map_err(|r| Failure::Semantic(format!("space `{}` fails its axioms:\n{r}", s.name)))
}

fn with_space(shared: &Shared, f: impl FnOnce(&HyperVectorSpace) -> Result<String, Failure>) -> Result<Outcome, Failure> {
    let file = read(&shared.file)?;
    let spaces: Vec<&SpaceBlock> = file
        .blocks
        .iter()
        .filter_map(|b| match &b.kind {
            BlockKind::Space(s) => Some(s),
            _ => None,
        })
        .collect();
    let block = match &shared.structure {
        Some(name) => match file.get(name).map(|b| &b.kind) {
            Some(BlockKind::Space(s)) => s,
            Some(_) => return Err(Failure::Usage(format!("`{name}` is not an hvspace block"))),
            None => return Err(Failure::Usage(format!("no structure named `{name}`"))),
        },
        None if spaces.len() == 1 => spaces[0],
        None => return Err(Failure::Usage("the file has several spaces (or none); pick one with --space".into())),
    };
    let sp = load_space(&file, block, mode(shared.distributive))?;
    Ok(Outcome { text: f(&sp)?, ok: true })
}

fn selected<'a>(file: &'a StructureFile, name: &Option<String>) -> Result<Vec<&'a Block>, Failure> {
    match name {
        Some(n) => file.get(n).map(|b| vec![b]).ok_or_else(|| Failure::Usage(format!("no structure named `{n}`"))),
        None => Ok(file.blocks.iter().collect()),
    }
}

fn report_lines(out: &mut String, format: Format, structure: &str, report: &hyperalg::Report) {
    for c in &report.checks {
        let (status, detail) = match &c.witness {
            None => ("PASS", String::new()),
            Some(w) => ("FAIL", w.detail.clone()),
        };
        match format {
            Format::Text if detail.is_empty() => writeln!(out, "  {} {status}", c.axiom).unwrap(),
            Format::Text => writeln!(out, "  {} {status} {detail}", c.axiom).unwrap(),
            Format::Machine => writeln!(out, "{structure}\t{}\t{status}\t{detail}", c.axiom).unwrap(),
        }
    }
}

fn check(shared: &Shared) -> Result<Outcome, Failure> {
    let file = read(&shared.file)?;
    let m = mode(shared.distributive);
    let mut out = String::new();
    let mut all_ok = true;
    for block in selected(&file, &shared.structure)? {
        let name = block.name();
        if shared.format == Format::Text {
            writeln!(out, "structure {name} ({})", block.kind_name()).unwrap();
        }
        let ok = match &block.kind {
            BlockKind::Hyperfield(fb) => {
                let r = hyperalg::hyperfield_report(&fb.add, &fb.mul, fb.zero, fb.one, m);
                report_lines(&mut out, shared.format, name, &r);
                if let (Some(first), Format::Text) = (r.first_failure(), shared.format) {
                    writeln!(out, "  first violated clause {} ({})", hyperalg::axioms::hyperfield_clause(first.axiom), first.axiom).unwrap();
                }
                r.passed()
            }
            BlockKind::Hypergroup(g) => check_group(&mut out, shared.format, name, &g.op),
            BlockKind::Space(s) => match load_space(&file, s, m) {
                Ok(sp) => {
                    let c = sp.class();
                    match shared.format {
                        Format::Text => writeln!(
                            out,
                            "  axioms PASS\n  class strong_right={} strong_left={} good={}",
                            c.strong_right, c.strong_left, c.good
                        )
                        .unwrap(),
                        Format::Machine => writeln!(
                            out,
                            "{name}\taxioms\tPASS\t\n{name}\tclass\tstrong_right={}\tstrong_left={}\tgood={}",
                            c.strong_right, c.strong_left, c.good
                        )
                        .unwrap(),
                    }
                    true
                }
                Err(Failure::Semantic(msg)) => {
                    for line in msg.lines() {
                        match shared.format {
                            Format::Text => writeln!(out, "  {line}").unwrap(),
                            Format::Machine => writeln!(out, "{name}\t{line}").unwrap(),
                        }
                    }
                    false
                }
                Err(e) => return Err(e),
            },
        };
        if shared.format == Format::Text {
            writeln!(out, "result {name} {}", if ok { "PASS" } else { "FAIL" }).unwrap();
        }
        all_ok &= ok;
    }
    Ok(Outcome { text: out, ok: all_ok })
}

fn check_group(out: &mut String, format: Format, name: &str, t: &HyperTable) -> bool {
    let r = check_hypergroup(t);
    report_lines(out, format, name, &r.report);
    if format == Format::Text {
        if let Some(z) = r.zero {
            writeln!(out, "  zero {}{}", t.carrier().name(z), if r.zero_ambiguous { " (several zeros)" } else { "" }).unwrap();
        }
    }
    r.is_hypergroup()
}

fn verify(shared: &Shared, suite: Suite) -> Result<Outcome, Failure> {
    let file = read(&shared.file)?;
    let m = mode(shared.distributive);
    let mut verdicts: Vec<PropertyVerdict> = Vec::new();
    let laws = matches!(suite, Suite::Laws | Suite::All);
    let space_suites = |sp: &HyperVectorSpace, id: &str, out: &mut Vec<PropertyVerdict>| -> Result<(), Failure> {
        if laws {
            out.extend(verify_space_laws(sp, id)?);
        }
        if matches!(suite, Suite::Linalg | Suite::All) {
            out.extend(verify_linalg_theorems(sp, id)?);
        }
        if matches!(suite, Suite::Basis | Suite::All) {
            out.extend(verify_basis_theorems(sp, id)?);
        }
        Ok(())
    };
    for block in selected(&file, &shared.structure)? {
        let name = block.name();
        match &block.kind {
            BlockKind::Hypergroup(g) => {
                if check_hypergroup(&g.op).is_hypergroup() {
                    if laws {
                        verdicts.extend(verify_hypergroup_laws(&g.op, name)?);
                    }
                } else {
                    return Err(Failure::Semantic(format!("`{name}` is not a hypergroup; run `check` for witnesses")));
                }
            }
            BlockKind::Hyperfield(fb) => {
                let f = fb.validate(m).map_err(|r| Failure::Semantic(format!("hyperfield `{name}` fails its axioms:\n{r}")))?;
                if laws {
                    verdicts.extend(verify_hypergroup_laws(f.add(), name)?);
                }
                let own = product_space(&f, 1)?;
                space_suites(&own.space, &format!("{name}^1"), &mut verdicts)?;
            }
            BlockKind::Space(s) => {
                let sp = load_space(&file, s, m)?;
                if laws {
                    verdicts.extend(verify_hypergroup_laws(sp.vadd(), name)?);
                }
                space_suites(&sp, name, &mut verdicts)?;
            }
        }
    }
    let mut text = String::new();
    for v in &verdicts {
        let line = match shared.format {
            Format::Text => v.render_text(),
            Format::Machine => v.render_machine(),
        };
        writeln!(text, "{line}").unwrap();
    }
    let ok = verdicts.iter().all(|v| v.status != Status::Fail);
    Ok(Outcome { text, ok })
}
