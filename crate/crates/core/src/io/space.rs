use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::sset::{GenId, Generator, Simplex, SimplicialSet};

pub const SPACE_HEADER: &str = "kansets-space 1";

/// A parsed space document: the space plus optional metadata.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpaceDocument {
    pub name: Option<String>,
    pub provenance: Option<String>,
    pub space: SimplicialSet,
}

impl SpaceDocument {
    pub fn new(space: SimplicialSet) -> Self {
        Self { name: None, provenance: None, space }
    }

    pub fn named(space: SimplicialSet, name: impl Into<String>) -> Self {
        Self { name: Some(name.into()), provenance: None, space }
    }
}

fn quote(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for c in s.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            c => out.push(c),
        }
    }
    out.push('"');
    out
}

fn list(items: impl IntoIterator<Item = String>) -> String {
    format!("[{}]", items.into_iter().collect::<Vec<_>>().join(", "))
}

pub fn print_document(doc: &SpaceDocument) -> String {
    let mut out = String::new();
    out.push_str(SPACE_HEADER);
    out.push('\n');
    if let Some(name) = &doc.name {
        let _ = writeln!(out, "name: {name}");
    }
    if let Some(p) = &doc.provenance {
        let _ = writeln!(out, "provenance: {p}");
    }
    for (n, level) in doc.space.levels().iter().enumerate() {
        let _ = writeln!(out, "dim {n}:");
        for (idx, g) in level.iter().enumerate() {
            let faces = list(g.faces.iter().map(|f| {
                format!("[{}, {}]", f.base().idx, list(f.word().iter().map(usize::to_string)))
            }));
            let _ = write!(out, "  {{id: {idx}, faces: {faces}");
            if let Some(label) = &g.label {
                let _ = write!(out, ", label: {}", quote(label));
            }
            out.push_str("}\n");
        }
    }
    out
}

/// Canonical text of a space without metadata.
pub fn print_space(k: &SimplicialSet) -> String {
    print_document(&SpaceDocument::new(k.clone()))
}

struct Cursor<'a> {
    text: &'a str,
    pos: usize,
    line: usize,
}

impl<'a> Cursor<'a> {
    fn err(&self, msg: impl Into<String>) -> Error {
        Error::Parse { line: self.line, msg: format!("column {}: {}", self.pos + 1, msg.into()) }
    }

    fn rest(&self) -> &'a str {
        &self.text[self.pos..]
    }

    fn expect(&mut self, lit: &str) -> Result<()> {
        if self.rest().starts_with(lit) {
            self.pos += lit.len();
            Ok(())
        } else {
            Err(self.err(format!("expected {lit:?}")))
        }
    }

    fn eat(&mut self, lit: &str) -> bool {
        let hit = self.rest().starts_with(lit);
        if hit {
            self.pos += lit.len();
        }
        hit
    }

    /// Decimal without sign or leading zeros.
    fn uint(&mut self) -> Result<usize> {
        let digits = self.rest().bytes().take_while(u8::is_ascii_digit).count();
        if digits == 0 {
            return Err(self.err("expected a non-negative integer"));
        }
        let s = &self.rest()[..digits];
        if s.len() > 1 && s.starts_with('0') {
            return Err(self.err("leading zero"));
        }
        let v = s.parse().map_err(|_| self.err("integer too large"))?;
        self.pos += digits;
        Ok(v)
    }

    fn string(&mut self) -> Result<String> {
        self.expect("\"")?;
        let mut out = String::new();
        let mut chars = self.rest().char_indices();
        while let Some((i, c)) = chars.next() {
            match c {
                '"' => {
                    self.pos += i + 1;
                    return Ok(out);
                }
                '\\' => match chars.next() {
                    Some((_, '"')) => out.push('"'),
                    Some((_, '\\')) => out.push('\\'),
                    Some((_, 'n')) => out.push('\n'),
                    _ => {
                        self.pos += i;
                        return Err(self.err("bad escape in label"));
                    }
                },
                c => out.push(c),
            }
        }
        Err(self.err("unterminated label"))
    }

    /// `[a, b, …]` of unsigned integers.
    fn uint_list(&mut self) -> Result<Vec<usize>> {
        self.expect("[")?;
        let mut out = Vec::new();
        if self.eat("]") {
            return Ok(out);
        }
        loop {
            out.push(self.uint()?);
            if self.eat("]") {
                return Ok(out);
            }
            self.expect(", ")?;
        }
    }
}

struct Record {
    id: usize,
    faces: Vec<(usize, Vec<usize>)>,
    label: Option<String>,
}

fn parse_record(c: &mut Cursor) -> Result<Record> {
    c.expect("  {id: ")?;
    let id = c.uint()?;
    c.expect(", faces: [")?;
    let mut faces = Vec::new();
    if !c.eat("]") {
        loop {
            c.expect("[")?;
            let base = c.uint()?;
            c.expect(", ")?;
            let word = c.uint_list()?;
            c.expect("]")?;
            faces.push((base, word));
            if c.eat("]") {
                break;
            }
            c.expect(", ")?;
        }
    }
    let label = if c.eat(", label: ") { Some(c.string()?) } else { None };
    c.expect("}")?;
    if !c.rest().is_empty() {
        return Err(c.err("trailing characters"));
    }
    Ok(Record { id, faces, label })
}

pub fn parse_document(text: &str) -> Result<SpaceDocument> {
    let mut lines = text.split('\n').enumerate().map(|(i, l)| (i + 1, l));
    if !text.ends_with('\n') {
        return Err(Error::Parse { line: text.split('\n').count(), msg: "missing final newline".into() });
    }
    match lines.next() {
        Some((_, l)) if l == SPACE_HEADER => {}
        _ => return Err(Error::Parse { line: 1, msg: format!("expected header {SPACE_HEADER:?}") }),
    }
    let mut doc = SpaceDocument::new(SimplicialSet::empty());
    let mut levels: Vec<Vec<Generator>> = Vec::new();
    for (line, l) in lines {
        let err = |msg: String| Error::Parse { line, msg };
        if l.is_empty() || l.starts_with('#') {
            continue;
        }
        if let Some(rest) = l.strip_prefix("name: ") {
            if doc.name.is_some() || !levels.is_empty() {
                return Err(err("name must come once, before the first dimension".into()));
            }
            doc.name = Some(rest.to_string());
        } else if let Some(rest) = l.strip_prefix("provenance: ") {
            if doc.provenance.is_some() || !levels.is_empty() {
                return Err(err("provenance must come once, before the first dimension".into()));
            }
            doc.provenance = Some(rest.to_string());
        } else if let Some(rest) = l.strip_prefix("dim ") {
            let n = rest
                .strip_suffix(':')
                .and_then(|d| d.parse::<usize>().ok().filter(|v| v.to_string() == d))
                .ok_or_else(|| err(format!("bad dimension header {l:?}")))?;
            if n != levels.len() {
                return Err(err(format!("expected dim {}, found dim {n}", levels.len())));
            }
            levels.push(Vec::new());
        } else if l.starts_with("  {") {
            let n = levels.len().checked_sub(1).ok_or_else(|| err("generator before any dimension header".into()))?;
            let mut c = Cursor { text: l, pos: 0, line };
            let r = parse_record(&mut c)?;
            let idx = levels[n].len();
            if r.id != idx {
                return Err(err(format!("expected id {idx}, found id {}", r.id)));
            }
            let gen = GenId::new(n, idx);
            let want = if n == 0 { 0 } else { n + 1 };
            if r.faces.len() != want {
                return Err(err(format!("generator {gen} needs {want} faces, found {}", r.faces.len())));
            }
            let mut faces = Vec::with_capacity(want);
            for (i, (base, word)) in r.faces.into_iter().enumerate() {
                let base_dim = (n - 1)
                    .checked_sub(word.len())
                    .ok_or_else(|| err(format!("face {i} of generator {gen}: word {word:?} is too long")))?;
                let target = GenId::new(base_dim, base);
                if base >= levels[base_dim].len() {
                    return Err(err(format!("face {i} of generator {gen} refers to missing generator {target}")));
                }
                let s = Simplex::new(target, word)
                    .map_err(|e| err(format!("face {i} of generator {gen}: {e}")))?;
                faces.push(s);
            }
            levels[n].push(Generator { faces, label: r.label });
        } else {
            return Err(err(format!("unrecognised line {l:?}")));
        }
    }
    if levels.last().is_some_and(Vec::is_empty) {
        return Err(Error::Parse { line: text.split('\n').count() - 1, msg: "last dimension is empty".into() });
    }
    doc.space = SimplicialSet::from_generators(levels)?;
    Ok(doc)
}

pub fn parse_space(text: &str) -> Result<SimplicialSet> {
    parse_document(text).map(|d| d.space)
}
