//! The fixture language: one declaration per line,
//!
//! ```text
//! name : kind args... [= payload...]
//! ```
//!
//! with `#` starting a comment. Table-valued declarations continue on the
//! following lines until a line reading `end`. Element tokens made of
//! decimal digits are indices; any other token is looked up among the
//! element names of the relevant group.
//!
//! | kind | forms |
//! |------|-------|
//! | `group` | `group <keyword>` or `group table [names n0 n1 ...]` + rows |
//! | `subgroup` | `subgroup <G> = e...` |
//! | `hom` | `hom <G> -> <H> = images...`, `hom <G> -> <H> zero`, `hom <G> identity` |
//! | `action` | `action <B> on <A> trivial`, `action <G> conjugation`, `action <B> on <A>` + one row per element of `B` |
//! | `xmod` | `xmod <boundary> <action>`, `xmod inclusion <subgroup>`, `xmod automorphism <G>`, `xmod catalog <name>` |
//! | `lifting` | `lifting <xmod> identity`, `lifting <xmod> subgroup <C>`, `lifting <xmod> <phi> <omega>` |
//! | `morphism` | `morphism <xmod> -> <xmod> = <f1> <f2>` |
//! | `lifting-morphism` | `lifting-morphism <lifting> -> <lifting> = <hom>` |
//! | `derivation` | `derivation <xmod> = values...` |
//! | `homotopy` | `homotopy <morphism> -> <morphism> = values...` |
//! | `groupgroupoid` | `groupgroupoid discrete|indiscrete|one-object <G>`; also declares `<name>.obj` and `<name>.mor` |
//! | `ggaction` | `ggaction <gg> <omega> regular` or `ggaction <gg> <omega>` + rows with `-` where undefined |
//! | `ggmorphism` | `ggmorphism <gg> -> <gg> = <objects hom> <morphisms hom>` |

use std::collections::HashMap;
use std::sync::Arc;

use xmlift::group::{catalog, GroupAction};
use xmlift::groupoid::GroupGroupoidMorphism;
use xmlift::{
    fixtures, CrossedModule, Derivation, FiniteGroup, GGAction, GroupGroupoid, GroupHom, Homotopy,
    Lifting, LiftingMorphism, Subgroup, XModMorphism,
};

use crate::error::{CliError, Result};

#[derive(Clone, Debug)]
pub enum Object {
    Group(Arc<FiniteGroup>),
    Subgroup(Subgroup),
    Hom(GroupHom),
    Action(GroupAction),
    XMod(Arc<CrossedModule>),
    Lifting(Arc<Lifting>),
    Morphism(Arc<XModMorphism>),
    LiftingMorphism(Arc<LiftingMorphism>),
    Derivation(Derivation),
    Homotopy(Homotopy),
    GroupGroupoid(Arc<GroupGroupoid>),
    GGAction(Arc<GGAction>),
    GGMorphism(Arc<GroupGroupoidMorphism>),
}

impl Object {
    pub fn kind(&self) -> &'static str {
        match self {
            Object::Group(_) => "group",
            Object::Subgroup(_) => "subgroup",
            Object::Hom(_) => "hom",
            Object::Action(_) => "action",
            Object::XMod(_) => "xmod",
            Object::Lifting(_) => "lifting",
            Object::Morphism(_) => "morphism",
            Object::LiftingMorphism(_) => "lifting-morphism",
            Object::Derivation(_) => "derivation",
            Object::Homotopy(_) => "homotopy",
            Object::GroupGroupoid(_) => "groupgroupoid",
            Object::GGAction(_) => "ggaction",
            Object::GGMorphism(_) => "ggmorphism",
        }
    }
}

#[derive(Clone, Debug)]
pub struct Declaration {
    pub name: String,
    pub line: usize,
    pub object: Object,
}

#[derive(Clone, Debug, Default)]
pub struct Document {
    declarations: Vec<Declaration>,
    index: HashMap<String, usize>,
}

impl Document {
    pub fn declarations(&self) -> &[Declaration] {
        &self.declarations
    }

    pub fn get(&self, name: &str) -> Option<&Declaration> {
        self.index.get(name).map(|&i| &self.declarations[i])
    }

    fn push(&mut self, name: String, line: usize, object: Object) -> Result<()> {
        if self.index.contains_key(&name) {
            return Err(CliError::Syntax {
                line,
                message: format!("`{name}` is declared twice"),
            });
        }
        self.index.insert(name.clone(), self.declarations.len());
        self.declarations.push(Declaration { name, line, object });
        Ok(())
    }

    /// Named objects of one kind, in declaration order.
    pub fn xmods(&self) -> impl Iterator<Item = (&str, &Arc<CrossedModule>)> {
        self.declarations.iter().filter_map(|d| match &d.object {
            Object::XMod(x) => Some((d.name.as_str(), x)),
            _ => None,
        })
    }

    pub fn liftings(&self) -> impl Iterator<Item = (&str, &Arc<Lifting>)> {
        self.declarations.iter().filter_map(|d| match &d.object {
            Object::Lifting(x) => Some((d.name.as_str(), x)),
            _ => None,
        })
    }

    pub fn morphisms(&self) -> impl Iterator<Item = (&str, &Arc<XModMorphism>)> {
        self.declarations.iter().filter_map(|d| match &d.object {
            Object::Morphism(x) => Some((d.name.as_str(), x)),
            _ => None,
        })
    }

    pub fn lifting_morphisms(&self) -> impl Iterator<Item = (&str, &Arc<LiftingMorphism>)> {
        self.declarations.iter().filter_map(|d| match &d.object {
            Object::LiftingMorphism(x) => Some((d.name.as_str(), x)),
            _ => None,
        })
    }

    pub fn derivations(&self) -> impl Iterator<Item = (&str, &Derivation)> {
        self.declarations.iter().filter_map(|d| match &d.object {
            Object::Derivation(x) => Some((d.name.as_str(), x)),
            _ => None,
        })
    }

    pub fn homotopies(&self) -> impl Iterator<Item = (&str, &Homotopy)> {
        self.declarations.iter().filter_map(|d| match &d.object {
            Object::Homotopy(x) => Some((d.name.as_str(), x)),
            _ => None,
        })
    }

    pub fn gg_actions(&self) -> impl Iterator<Item = (&str, &Arc<GGAction>)> {
        self.declarations.iter().filter_map(|d| match &d.object {
            Object::GGAction(x) => Some((d.name.as_str(), x)),
            _ => None,
        })
    }

    pub fn gg_morphisms(&self) -> impl Iterator<Item = (&str, &Arc<GroupGroupoidMorphism>)> {
        self.declarations.iter().filter_map(|d| match &d.object {
            Object::GGMorphism(x) => Some((d.name.as_str(), x)),
            _ => None,
        })
    }
}

/// Parses and validates a whole fixture. Stops at the first error.
pub fn parse_fixture(text: &str, bound: usize) -> Result<Document> {
    let lines: Vec<(usize, Vec<&str>)> = text
        .lines()
        .enumerate()
        .map(|(i, l)| {
            let l = l.split_once('#').map_or(l, |(code, _)| code);
            (i + 1, l.split_whitespace().collect())
        })
        .filter(|(_, t): &(usize, Vec<&str>)| !t.is_empty())
        .collect();
    let mut parser = Parser {
        doc: Document::default(),
        lines,
        pos: 0,
        bound,
    };
    while parser.pos < parser.lines.len() {
        parser.declaration()?;
    }
    Ok(parser.doc)
}

struct Parser<'a> {
    doc: Document,
    lines: Vec<(usize, Vec<&'a str>)>,
    pos: usize,
    bound: usize,
}

/// One declaration line split into its parts.
struct Line<'a> {
    number: usize,
    name: String,
    args: Vec<&'a str>,
    payload: Option<Vec<&'a str>>,
}

impl Line<'_> {
    fn syntax(&self, message: impl Into<String>) -> CliError {
        CliError::Syntax {
            line: self.number,
            message: message.into(),
        }
    }

    fn invalid(&self, source: xmlift::Error) -> CliError {
        CliError::Validation {
            line: self.number,
            name: self.name.clone(),
            source,
        }
    }

    fn arg(&self, i: usize, what: &str) -> Result<&str> {
        self.args
            .get(i)
            .copied()
            .ok_or_else(|| self.syntax(format!("missing {what}")))
    }

    fn payload(&self) -> Result<&[&str]> {
        self.payload
            .as_deref()
            .ok_or_else(|| self.syntax("missing `= ...` payload"))
    }

    fn no_payload(&self) -> Result<()> {
        match self.payload {
            Some(_) => Err(self.syntax("unexpected `=` payload")),
            None => Ok(()),
        }
    }

    fn arity(&self, n: usize) -> Result<()> {
        if self.args.len() != n {
            return Err(self.syntax(format!(
                "expected {n} argument(s), found {}",
                self.args.len()
            )));
        }
        Ok(())
    }

    fn arrow(&self) -> Result<()> {
        if self.args.len() != 3 || self.args[1] != "->" {
            return Err(self.syntax("expected `<source> -> <target>`"));
        }
        Ok(())
    }
}

fn valid_name(name: &str) -> bool {
    let mut chars = name.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || "_-.".contains(c))
}

/// Resolves an element token against a group.
fn element(group: &FiniteGroup, token: &str) -> std::result::Result<usize, String> {
    if token.bytes().all(|b| b.is_ascii_digit()) {
        let i: usize = token.parse().map_err(|_| format!("bad index `{token}`"))?;
        if i >= group.order() {
            return Err(format!(
                "index {i} out of range for a group of order {}",
                group.order()
            ));
        }
        return Ok(i);
    }
    group
        .names()
        .and_then(|names| names.iter().position(|n| n == token))
        .ok_or_else(|| format!("no element named `{token}`"))
}

impl<'a> Parser<'a> {
    fn declaration(&mut self) -> Result<()> {
        let (number, tokens) = self.lines[self.pos].clone();
        self.pos += 1;
        let syntax = |message: &str| CliError::Syntax {
            line: number,
            message: message.into(),
        };
        if tokens.len() < 3 || tokens[1] != ":" {
            return Err(syntax("expected `name : kind ...`"));
        }
        if !valid_name(tokens[0]) {
            return Err(syntax("names start with a letter and use [A-Za-z0-9_.-]"));
        }
        let rest = &tokens[3..];
        let (args, payload) = match rest.iter().position(|&t| t == "=") {
            Some(i) => (rest[..i].to_vec(), Some(rest[i + 1..].to_vec())),
            None => (rest.to_vec(), None),
        };
        let line = Line {
            number,
            name: tokens[0].to_string(),
            args,
            payload,
        };
        let object = match tokens[2] {
            "group" => Object::Group(self.group(&line)?),
            "subgroup" => Object::Subgroup(self.subgroup(&line)?),
            "hom" => Object::Hom(self.hom(&line)?),
            "action" => Object::Action(self.action(&line)?),
            "xmod" => Object::XMod(self.xmod(&line)?),
            "lifting" => Object::Lifting(self.lifting(&line)?),
            "morphism" => Object::Morphism(self.morphism(&line)?),
            "lifting-morphism" => Object::LiftingMorphism(self.lifting_morphism(&line)?),
            "derivation" => Object::Derivation(self.derivation(&line)?),
            "homotopy" => Object::Homotopy(self.homotopy(&line)?),
            "groupgroupoid" => {
                let gg = self.group_groupoid(&line)?;
                self.doc.push(
                    format!("{}.obj", line.name),
                    number,
                    Object::Group(gg.object_group().clone()),
                )?;
                self.doc.push(
                    format!("{}.mor", line.name),
                    number,
                    Object::Group(gg.morphism_group().clone()),
                )?;
                Object::GroupGroupoid(gg)
            }
            "ggaction" => Object::GGAction(self.gg_action(&line)?),
            "ggmorphism" => Object::GGMorphism(self.gg_morphism(&line)?),
            other => return Err(syntax(&format!("unknown kind `{other}`"))),
        };
        self.doc.push(line.name, number, object)
    }

    /// Rows of a block up to `end`.
    fn block(&mut self, line: &Line) -> Result<Vec<(usize, Vec<&'a str>)>> {
        let mut rows = Vec::new();
        loop {
            let Some((n, tokens)) = self.lines.get(self.pos).cloned() else {
                return Err(line.syntax("table is not closed by `end`"));
            };
            self.pos += 1;
            if tokens == ["end"] {
                return Ok(rows);
            }
            rows.push((n, tokens));
        }
    }

    fn lookup(&self, line: &Line, name: &str, kind: &str) -> Result<&Object> {
        let decl = self
            .doc
            .get(name)
            .ok_or_else(|| CliError::UnresolvedReference {
                line: line.number,
                name: name.to_string(),
            })?;
        if decl.object.kind() != kind {
            return Err(line.syntax(format!(
                "`{name}` is a {}, expected a {kind}",
                decl.object.kind()
            )));
        }
        Ok(&decl.object)
    }

    fn group_ref(&self, line: &Line, name: &str) -> Result<Arc<FiniteGroup>> {
        match self.lookup(line, name, "group")? {
            Object::Group(g) => Ok(g.clone()),
            _ => unreachable!("kind checked"),
        }
    }

    fn hom_ref(&self, line: &Line, name: &str) -> Result<GroupHom> {
        match self.lookup(line, name, "hom")? {
            Object::Hom(h) => Ok(h.clone()),
            _ => unreachable!("kind checked"),
        }
    }

    fn xmod_ref(&self, line: &Line, name: &str) -> Result<Arc<CrossedModule>> {
        match self.lookup(line, name, "xmod")? {
            Object::XMod(x) => Ok(x.clone()),
            _ => unreachable!("kind checked"),
        }
    }

    fn lifting_ref(&self, line: &Line, name: &str) -> Result<Arc<Lifting>> {
        match self.lookup(line, name, "lifting")? {
            Object::Lifting(x) => Ok(x.clone()),
            _ => unreachable!("kind checked"),
        }
    }

    fn morphism_ref(&self, line: &Line, name: &str) -> Result<Arc<XModMorphism>> {
        match self.lookup(line, name, "morphism")? {
            Object::Morphism(x) => Ok(x.clone()),
            _ => unreachable!("kind checked"),
        }
    }

    fn gg_ref(&self, line: &Line, name: &str) -> Result<Arc<GroupGroupoid>> {
        match self.lookup(line, name, "groupgroupoid")? {
            Object::GroupGroupoid(x) => Ok(x.clone()),
            _ => unreachable!("kind checked"),
        }
    }

    fn elements(&self, line: &Line, group: &FiniteGroup, tokens: &[&str]) -> Result<Vec<usize>> {
        tokens
            .iter()
            .map(|t| element(group, t).map_err(|m| line.syntax(m)))
            .collect()
    }

    fn group(&mut self, line: &Line) -> Result<Arc<FiniteGroup>> {
        line.no_payload()?;
        let kind = line.arg(0, "group keyword or `table`")?;
        if kind != "table" {
            line.arity(1)?;
            return catalog::by_keyword(kind)
                .map(Arc::new)
                .ok_or_else(|| line.syntax(format!("unknown group keyword `{kind}`")));
        }
        let names: Option<Vec<String>> = match line.args.get(1) {
            None => None,
            Some(&"names") => Some(line.args[2..].iter().map(|s| s.to_string()).collect()),
            Some(_) => return Err(line.syntax("expected `table [names ...]`")),
        };
        let rows = self.block(line)?;
        let n = rows.len();
        let symbols = |token: &str| -> std::result::Result<usize, String> {
            if let Some(pos) = names
                .as_ref()
                .and_then(|ns| ns.iter().position(|x| x == token))
            {
                return Ok(pos);
            }
            token
                .parse::<usize>()
                .map_err(|_| format!("unknown table symbol `{token}`"))
        };
        let table = rows
            .iter()
            .map(|(ln, row)| {
                row.iter()
                    .map(|t| symbols(t).map_err(|message| CliError::Syntax { line: *ln, message }))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        let mut group = FiniteGroup::from_table(&table).map_err(|e| line.invalid(e))?;
        if let Some(names) = names {
            if names.len() != n {
                return Err(line.syntax(format!("{} names for {n} rows", names.len())));
            }
            // the constructor swaps the identity into position 0
            let e = (0..n)
                .find(|&e| table[e].iter().enumerate().all(|(x, &y)| x == y))
                .unwrap_or(0);
            let mut relabelled = names;
            relabelled.swap(0, e);
            group = group.with_names(relabelled).map_err(|e| line.invalid(e))?;
        }
        Ok(Arc::new(group))
    }

    fn subgroup(&mut self, line: &Line) -> Result<Subgroup> {
        line.arity(1)?;
        let g = self.group_ref(line, line.args[0])?;
        let elements = self.elements(line, &g, line.payload()?)?;
        Subgroup::new(g, elements).map_err(|e| line.invalid(e))
    }

    fn hom(&mut self, line: &Line) -> Result<GroupHom> {
        if line.args.len() == 2 && line.args[1] == "identity" {
            line.no_payload()?;
            return Ok(GroupHom::identity(&self.group_ref(line, line.args[0])?));
        }
        if line.args.len() < 3 || line.args[1] != "->" {
            return Err(line.syntax("expected `<G> -> <H>`"));
        }
        let s = self.group_ref(line, line.args[0])?;
        let t = self.group_ref(line, line.args[2])?;
        match line.args.get(3) {
            Some(&"zero") if line.args.len() == 4 => {
                line.no_payload()?;
                Ok(GroupHom::zero(&s, &t))
            }
            None => {
                let map = self.elements(line, &t, line.payload()?)?;
                GroupHom::new(s, t, map).map_err(|e| line.invalid(e))
            }
            Some(_) => Err(line.syntax("expected `zero` or `= images...`")),
        }
    }

    fn action(&mut self, line: &Line) -> Result<GroupAction> {
        line.no_payload()?;
        if line.args.len() == 2 && line.args[1] == "conjugation" {
            return Ok(GroupAction::conjugation(
                &self.group_ref(line, line.args[0])?,
            ));
        }
        if line.args.len() < 3 || line.args[1] != "on" {
            return Err(line.syntax("expected `<B> on <A>` or `<G> conjugation`"));
        }
        let b = self.group_ref(line, line.args[0])?;
        let a = self.group_ref(line, line.args[2])?;
        match line.args.get(3) {
            Some(&"trivial") if line.args.len() == 4 => Ok(GroupAction::trivial(&b, &a)),
            None => {
                let rows = self.block(line)?;
                if rows.len() != b.order() {
                    return Err(line.syntax(format!(
                        "expected {} rows, one per element of `{}`",
                        b.order(),
                        line.args[0]
                    )));
                }
                let mut table = Vec::with_capacity(a.order() * b.order());
                for (n, row) in &rows {
                    let row_line = Line {
                        number: *n,
                        name: line.name.clone(),
                        args: Vec::new(),
                        payload: None,
                    };
                    if row.len() != a.order() {
                        return Err(row_line.syntax(format!("expected {} entries", a.order())));
                    }
                    table.extend(self.elements(&row_line, &a, row)?);
                }
                GroupAction::new(b, a, table).map_err(|e| line.invalid(e))
            }
            Some(_) => Err(line.syntax("expected `trivial` or a table")),
        }
    }

    fn xmod(&mut self, line: &Line) -> Result<Arc<CrossedModule>> {
        line.no_payload()?;
        line.arity(2)?;
        let xm = match line.args[0] {
            "inclusion" => match self.lookup(line, line.args[1], "subgroup")? {
                Object::Subgroup(s) => CrossedModule::inclusion(s),
                _ => unreachable!("kind checked"),
            },
            "automorphism" => {
                CrossedModule::automorphism(&self.group_ref(line, line.args[1])?, self.bound)
            }
            "catalog" => {
                let all = fixtures::crossed_modules(self.bound).map_err(|e| line.invalid(e))?;
                return all
                    .into_iter()
                    .find(|(n, _)| *n == line.args[1])
                    .map(|(_, x)| x)
                    .ok_or_else(|| {
                        line.syntax(format!("no catalog crossed module `{}`", line.args[1]))
                    });
            }
            boundary => {
                let alpha = self.hom_ref(line, boundary)?;
                let action = match self.lookup(line, line.args[1], "action")? {
                    Object::Action(a) => a.clone(),
                    _ => unreachable!("kind checked"),
                };
                CrossedModule::new(alpha, action)
            }
        };
        xm.map(Arc::new).map_err(|e| line.invalid(e))
    }

    fn lifting(&mut self, line: &Line) -> Result<Arc<Lifting>> {
        line.no_payload()?;
        let base = self.xmod_ref(line, line.arg(0, "base crossed module")?)?;
        let l = match line.args.get(1).copied() {
            Some("identity") if line.args.len() == 2 => Ok(Lifting::identity(&base)),
            Some("subgroup") if line.args.len() == 3 => {
                match self.lookup(line, line.args[2], "subgroup")? {
                    Object::Subgroup(c) => Lifting::from_subgroup(&base, c),
                    _ => unreachable!("kind checked"),
                }
            }
            Some(phi) if line.args.len() == 3 => {
                let phi = self.hom_ref(line, phi)?;
                let omega = self.hom_ref(line, line.args[2])?;
                Lifting::new(base, phi, omega)
            }
            _ => return Err(line.syntax("expected `identity`, `subgroup <C>` or `<phi> <omega>`")),
        };
        l.map(Arc::new).map_err(|e| line.invalid(e))
    }

    fn morphism(&mut self, line: &Line) -> Result<Arc<XModMorphism>> {
        line.arrow()?;
        let s = self.xmod_ref(line, line.args[0])?;
        let t = self.xmod_ref(line, line.args[2])?;
        let payload = line.payload()?;
        if payload.len() != 2 {
            return Err(line.syntax("expected `= <f1> <f2>`"));
        }
        let f1 = self.hom_ref(line, payload[0])?;
        let f2 = self.hom_ref(line, payload[1])?;
        XModMorphism::new(s, t, f1, f2)
            .map(Arc::new)
            .map_err(|e| line.invalid(e))
    }

    fn lifting_morphism(&mut self, line: &Line) -> Result<Arc<LiftingMorphism>> {
        line.arrow()?;
        let s = self.lifting_ref(line, line.args[0])?;
        let t = self.lifting_ref(line, line.args[2])?;
        let payload = line.payload()?;
        if payload.len() != 1 {
            return Err(line.syntax("expected `= <hom>`"));
        }
        let f = self.hom_ref(line, payload[0])?;
        LiftingMorphism::new(s, t, f)
            .map(Arc::new)
            .map_err(|e| line.invalid(e))
    }

    fn derivation(&mut self, line: &Line) -> Result<Derivation> {
        line.arity(1)?;
        let xm = self.xmod_ref(line, line.args[0])?;
        let values = self.elements(line, xm.a(), line.payload()?)?;
        Derivation::new(xm, values).map_err(|e| line.invalid(e))
    }

    fn homotopy(&mut self, line: &Line) -> Result<Homotopy> {
        line.arrow()?;
        let from = self.morphism_ref(line, line.args[0])?;
        let to = self.morphism_ref(line, line.args[2])?;
        let values = self.elements(line, from.target().a(), line.payload()?)?;
        Homotopy::new(values, from, to).map_err(|e| line.invalid(e))
    }

    fn group_groupoid(&mut self, line: &Line) -> Result<Arc<GroupGroupoid>> {
        line.no_payload()?;
        line.arity(2)?;
        let g = self.group_ref(line, line.args[1])?;
        let gg = match line.args[0] {
            "discrete" => GroupGroupoid::discrete(&g),
            "indiscrete" => GroupGroupoid::indiscrete(&g),
            "one-object" => GroupGroupoid::one_object(&g),
            _ => return Err(line.syntax("expected `discrete`, `indiscrete` or `one-object`")),
        };
        gg.map(Arc::new).map_err(|e| line.invalid(e))
    }

    fn gg_action(&mut self, line: &Line) -> Result<Arc<GGAction>> {
        line.no_payload()?;
        let gg = self.gg_ref(line, line.arg(0, "group-groupoid")?)?;
        let omega = self.hom_ref(line, line.arg(1, "ω")?)?;
        let act = match line.args.get(2) {
            Some(&"regular") if line.args.len() == 3 => {
                let x = omega.source().clone();
                if *x != **gg.morphism_group() {
                    return Err(line.syntax("`regular` needs ω defined on the morphism group"));
                }
                GGAction::from_fn(gg, omega, |g, y| x.op(g, y))
            }
            None => {
                let x = omega.source().clone();
                let rows = self.block(line)?;
                let mut table = Vec::with_capacity(rows.len());
                for (n, row) in &rows {
                    let row_line = Line {
                        number: *n,
                        name: line.name.clone(),
                        args: Vec::new(),
                        payload: None,
                    };
                    let cells = row
                        .iter()
                        .map(|&t| match t {
                            "-" => Ok(None),
                            _ => element(&x, t).map(Some).map_err(|m| row_line.syntax(m)),
                        })
                        .collect::<Result<Vec<_>>>()?;
                    table.push(cells);
                }
                GGAction::new(gg, omega, table)
            }
            Some(_) => return Err(line.syntax("expected `regular` or a table")),
        };
        act.map(Arc::new).map_err(|e| line.invalid(e))
    }

    fn gg_morphism(&mut self, line: &Line) -> Result<Arc<GroupGroupoidMorphism>> {
        line.arrow()?;
        let s = self.gg_ref(line, line.args[0])?;
        let t = self.gg_ref(line, line.args[2])?;
        let payload = line.payload()?;
        if payload.len() != 2 {
            return Err(line.syntax("expected `= <objects hom> <morphisms hom>`"));
        }
        let f0 = self.hom_ref(line, payload[0])?;
        let f1 = self.hom_ref(line, payload[1])?;
        GroupGroupoidMorphism::new(s, t, f0, f1)
            .map(Arc::new)
            .map_err(|e| line.invalid(e))
    }
}
