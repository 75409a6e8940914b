//! Text formats for calculi (`.qcalc`), finite models (`.qmodel`) and
//! constraint networks (`.qcsp`).
//!
//! All three are line oriented; `#` starts a comment that runs to the end of
//! the line. Relation sets are always parenthesised and `()` is the empty
//! relation.
//!
//! ```text
//! calculus "point-calculus"
//! relations < = >
//! identity =
//!
//! converse
//! < (>)
//! = (=)
//! > (<)
//!
//! composition
//! < < (<)
//! < > (< = >)
//! ...
//! ```
//!
//! ```text
//! model "pc-0-3"
//! universe 0 1 2 3
//! images < (0,1) (0,2) ...
//! ```
//!
//! ```text
//! network 3
//! 0 (<) 1
//! 1 (<) 2
//! ```

use std::fmt::Write as _;
use std::path::PathBuf;

use crate::calculus::{is_valid_name, CalculusSpec, RESERVED_WORDS};
use crate::closure::ConstraintNetwork;
use crate::error::{ParseError, ParseErrorKind};
use crate::model::FiniteModel;
use crate::relation::Relation;

/// Where a definition text came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Origin {
    File(PathBuf),
    Builtin(String),
    Inline,
}

/// A calculus definition document.
#[derive(Debug, Clone)]
pub struct DefinitionSource {
    pub text: String,
    pub origin: Origin,
}

impl DefinitionSource {
    pub fn inline(text: impl Into<String>) -> Self {
        DefinitionSource {
            text: text.into(),
            origin: Origin::Inline,
        }
    }

    pub fn parse(&self) -> Result<CalculusSpec, ParseError> {
        parse_calculus(&self.text)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum TokKind {
    Word,
    Str,
    Open,
    Close,
    Comma,
}

#[derive(Debug, Clone)]
struct Tok<'a> {
    kind: TokKind,
    text: &'a str,
    col: usize,
}

fn err(line: usize, column: usize, kind: ParseErrorKind) -> ParseError {
    ParseError { line, column, kind }
}

fn lex_line(line: &str, lineno: usize) -> Result<Vec<Tok<'_>>, ParseError> {
    let mut toks = Vec::new();
    let bytes: Vec<(usize, char)> = line.char_indices().collect();
    let mut i = 0;
    let col_of = |idx: usize| line[..idx].chars().count() + 1;
    while i < bytes.len() {
        let (pos, c) = bytes[i];
        match c {
            '#' => break,
            c if c.is_whitespace() => i += 1,
            '(' | ')' | ',' => {
                let kind = match c {
                    '(' => TokKind::Open,
                    ')' => TokKind::Close,
                    _ => TokKind::Comma,
                };
                toks.push(Tok {
                    kind,
                    text: &line[pos..pos + 1],
                    col: col_of(pos),
                });
                i += 1;
            }
            '"' => {
                let start = pos + 1;
                let mut j = i + 1;
                while j < bytes.len() && bytes[j].1 != '"' {
                    j += 1;
                }
                if j == bytes.len() {
                    return Err(err(lineno, col_of(pos), ParseErrorKind::UnterminatedString));
                }
                toks.push(Tok {
                    kind: TokKind::Str,
                    text: &line[start..bytes[j].0],
                    col: col_of(pos),
                });
                i = j + 1;
            }
            _ => {
                let mut j = i;
                while j < bytes.len() {
                    let c = bytes[j].1;
                    if c.is_whitespace() || matches!(c, '(' | ')' | ',' | '"' | '#') {
                        break;
                    }
                    j += 1;
                }
                let end = bytes.get(j).map_or(line.len(), |b| b.0);
                toks.push(Tok {
                    kind: TokKind::Word,
                    text: &line[pos..end],
                    col: col_of(pos),
                });
                i = j;
            }
        }
    }
    Ok(toks)
}

/// Token cursor over one line.
struct Line<'a> {
    no: usize,
    toks: Vec<Tok<'a>>,
    pos: usize,
    end_col: usize,
}

impl<'a> Line<'a> {
    fn peek(&self) -> Option<&Tok<'a>> {
        self.toks.get(self.pos)
    }

    fn col(&self) -> usize {
        self.peek().map_or(self.end_col, |t| t.col)
    }

    fn found(&self) -> String {
        self.peek()
            .map_or_else(|| "end of line".to_string(), |t| format!("`{}`", t.text))
    }

    fn unexpected(&self, expected: &str) -> ParseError {
        err(
            self.no,
            self.col(),
            ParseErrorKind::Unexpected {
                expected: expected.to_string(),
                found: self.found(),
            },
        )
    }

    fn next_kind(&mut self, kind: TokKind, expected: &str) -> Result<Tok<'a>, ParseError> {
        match self.peek() {
            Some(t) if t.kind == kind => {
                let t = t.clone();
                self.pos += 1;
                Ok(t)
            }
            _ => Err(self.unexpected(expected)),
        }
    }

    fn word(&mut self, expected: &str) -> Result<Tok<'a>, ParseError> {
        self.next_kind(TokKind::Word, expected)
    }

    fn at_end(&self) -> bool {
        self.pos >= self.toks.len()
    }

    fn finish(&self) -> Result<(), ParseError> {
        if self.at_end() {
            Ok(())
        } else {
            Err(self.unexpected("end of line"))
        }
    }
}

fn lines(text: &str) -> Result<Vec<Line<'_>>, ParseError> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let toks = lex_line(raw, i + 1)?;
        if !toks.is_empty() {
            out.push(Line {
                no: i + 1,
                toks,
                pos: 0,
                end_col: raw.chars().count() + 1,
            });
        }
    }
    Ok(out)
}

fn relation_index(calc_names: &[String], tok: &Tok<'_>, line: usize) -> Result<usize, ParseError> {
    calc_names
        .iter()
        .position(|n| n == tok.text)
        .ok_or_else(|| {
            err(
                line,
                tok.col,
                ParseErrorKind::UnknownRelation(tok.text.to_string()),
            )
        })
}

/// Parses `( tok* )` against the given base names.
fn relation_set(line: &mut Line<'_>, names: &[String]) -> Result<Relation, ParseError> {
    line.next_kind(TokKind::Open, "`(`")?;
    let mut r = Relation::empty(names.len());
    loop {
        match line.peek() {
            Some(t) if t.kind == TokKind::Close => {
                line.pos += 1;
                return Ok(r);
            }
            Some(t) if t.kind == TokKind::Word => {
                let t = t.clone();
                r.insert(relation_index(names, &t, line.no)?);
                line.pos += 1;
            }
            _ => return Err(line.unexpected("relation name or `)`")),
        }
    }
}

/// Parses a `.qcalc` calculus definition.
pub fn parse_calculus(text: &str) -> Result<CalculusSpec, ParseError> {
    #[derive(PartialEq)]
    enum Section {
        Header,
        Converse,
        Composition,
    }

    let mut name: Option<String> = None;
    let mut names: Option<Vec<String>> = None;
    let mut identity: Option<Option<Relation>> = None;
    let mut converse: Vec<Option<Relation>> = Vec::new();
    let mut composition: Vec<Option<Relation>> = Vec::new();
    let mut section = Section::Header;
    // positions of the section headers, used for "missing entry" diagnostics
    let mut converse_at = (0, 0);
    let mut composition_at = (0, 0);
    let mut last_line = 1;

    for mut line in lines(text)? {
        last_line = line.no;
        let first = line.peek().expect("non-empty line").clone();
        let keyword = if first.kind == TokKind::Word {
            first.text
        } else {
            ""
        };
        match keyword {
            "calculus" => {
                line.pos += 1;
                if name.is_some() {
                    return Err(err(line.no, first.col, ParseErrorKind::DuplicateDeclaration("calculus")));
                }
                let t = match line.peek() {
                    Some(t) if matches!(t.kind, TokKind::Str | TokKind::Word) => t.clone(),
                    _ => return Err(line.unexpected("calculus name")),
                };
                line.pos += 1;
                line.finish()?;
                name = Some(t.text.to_string());
                section = Section::Header;
            }
            "relations" => {
                line.pos += 1;
                if names.is_some() {
                    return Err(err(line.no, first.col, ParseErrorKind::DuplicateDeclaration("relations")));
                }
                let mut list: Vec<String> = Vec::new();
                while let Some(t) = line.peek().cloned() {
                    if t.kind != TokKind::Word {
                        return Err(line.unexpected("relation name"));
                    }
                    if RESERVED_WORDS.contains(&t.text) {
                        return Err(err(line.no, t.col, ParseErrorKind::ReservedName(t.text.to_string())));
                    }
                    if !is_valid_name(t.text) {
                        return Err(err(line.no, t.col, ParseErrorKind::Invalid(format!("invalid relation name `{}`", t.text))));
                    }
                    if list.iter().any(|n| n == t.text) {
                        return Err(err(line.no, t.col, ParseErrorKind::DuplicateRelation(t.text.to_string())));
                    }
                    list.push(t.text.to_string());
                    line.pos += 1;
                }
                if list.is_empty() {
                    return Err(err(line.no, first.col, ParseErrorKind::EmptyRelations));
                }
                if list.len() > crate::relation::MAX_BASE_RELATIONS {
                    return Err(err(line.no, first.col, ParseErrorKind::Invalid(format!("{} base relations, at most 1024 supported", list.len()))));
                }
                converse = vec![None; list.len()];
                composition = vec![None; list.len() * list.len()];
                names = Some(list);
                section = Section::Header;
            }
            "identity" => {
                line.pos += 1;
                if identity.is_some() {
                    return Err(err(line.no, first.col, ParseErrorKind::DuplicateDeclaration("identity")));
                }
                let list = names.as_ref().ok_or_else(|| {
                    err(line.no, first.col, ParseErrorKind::MissingDeclaration("relations"))
                })?;
                let id = match line.peek().cloned() {
                    Some(t) if t.kind == TokKind::Word && t.text == "none" => {
                        line.pos += 1;
                        None
                    }
                    Some(t) if t.kind == TokKind::Word => {
                        line.pos += 1;
                        Some(Relation::singleton(list.len(), relation_index(list, &t, line.no)?))
                    }
                    Some(t) if t.kind == TokKind::Open => {
                        let col = t.col;
                        let r = relation_set(&mut line, list)?;
                        if r.is_empty() {
                            return Err(err(line.no, col, ParseErrorKind::Invalid("identity relation is empty".into())));
                        }
                        Some(r)
                    }
                    _ => return Err(line.unexpected("relation name, relation set or `none`")),
                };
                line.finish()?;
                identity = Some(id);
                section = Section::Header;
            }
            "converse" | "composition" => {
                line.pos += 1;
                line.finish()?;
                if names.is_none() {
                    return Err(err(line.no, first.col, ParseErrorKind::MissingDeclaration("relations")));
                }
                if keyword == "converse" {
                    section = Section::Converse;
                    converse_at = (line.no, first.col);
                } else {
                    section = Section::Composition;
                    composition_at = (line.no, first.col);
                }
            }
            _ => {
                let list = match (&section, names.as_ref()) {
                    (Section::Header, _) | (_, None) => {
                        return Err(line.unexpected("a declaration (`calculus`, `relations`, `identity`, `converse` or `composition`)"))
                    }
                    (_, Some(list)) => list,
                };
                let n = list.len();
                let a = line.word("relation name")?;
                let ai = relation_index(list, &a, line.no)?;
                if section == Section::Converse {
                    let r = relation_set(&mut line, list)?;
                    line.finish()?;
                    if converse[ai].is_some() {
                        return Err(err(line.no, a.col, ParseErrorKind::DuplicateConverse(a.text.to_string())));
                    }
                    converse[ai] = Some(r);
                } else {
                    let b = line.word("relation name")?;
                    let bi = relation_index(list, &b, line.no)?;
                    let r = relation_set(&mut line, list)?;
                    line.finish()?;
                    if composition[ai * n + bi].is_some() {
                        return Err(err(line.no, a.col, ParseErrorKind::DuplicateComposition(a.text.to_string(), b.text.to_string())));
                    }
                    composition[ai * n + bi] = Some(r);
                }
            }
        }
    }

    let end = (last_line, 1);
    let name = name.ok_or_else(|| err(1, 1, ParseErrorKind::MissingDeclaration("calculus")))?;
    let names = names.ok_or_else(|| err(end.0, end.1, ParseErrorKind::MissingDeclaration("relations")))?;
    let n = names.len();
    let identity = identity.unwrap_or(None);
    let at = |p: (usize, usize)| if p.0 == 0 { end } else { p };
    let converse = converse
        .into_iter()
        .enumerate()
        .map(|(i, r)| {
            r.ok_or_else(|| {
                let (l, c) = at(converse_at);
                err(l, c, ParseErrorKind::MissingConverse(names[i].clone()))
            })
        })
        .collect::<Result<Vec<_>, _>>()?;
    let composition = composition
        .into_iter()
        .enumerate()
        .map(|(k, r)| {
            r.ok_or_else(|| {
                let (l, c) = at(composition_at);
                err(
                    l,
                    c,
                    ParseErrorKind::MissingComposition(names[k / n].clone(), names[k % n].clone()),
                )
            })
        })
        .collect::<Result<Vec<_>, _>>()?;
    CalculusSpec::new(name, names, identity, converse, composition)
        .map_err(|e| err(end.0, end.1, ParseErrorKind::Invalid(e.to_string())))
}

/// Writes a calculus in the `.qcalc` format; [`parse_calculus`] reads it back unchanged.
pub fn serialize_calculus(calc: &CalculusSpec) -> String {
    let mut out = String::new();
    let names: Vec<&str> = calc.base_relations().iter().map(|b| b.name.as_str()).collect();
    let width = names.iter().map(|n| n.len()).max().unwrap_or(0);
    let _ = writeln!(out, "calculus \"{}\"", calc.name());
    let _ = writeln!(out, "relations {}", names.join(" "));
    match calc.identity() {
        None => out.push_str("identity none\n"),
        Some(id) => {
            let _ = writeln!(out, "identity {}", calc.format_relation(id));
        }
    }
    out.push_str("\nconverse\n");
    for (i, name) in names.iter().enumerate() {
        let _ = writeln!(
            out,
            "{:width$} {}",
            name,
            calc.format_relation(calc.converse_of_base(i))
        );
    }
    out.push_str("\ncomposition\n");
    for (i, a) in names.iter().enumerate() {
        for (j, b) in names.iter().enumerate() {
            let _ = writeln!(
                out,
                "{:width$} {:width$} {}",
                a,
                b,
                calc.format_relation(calc.compose_base(i, j))
            );
        }
    }
    out
}

/// Parses a `.qmodel` finite interpretation for `calc`.
pub fn parse_model(text: &str, calc: &CalculusSpec) -> Result<FiniteModel, ParseError> {
    let names: Vec<String> = calc.base_relations().iter().map(|b| b.name.clone()).collect();
    let mut model_name: Option<String> = None;
    let mut universe: Option<Vec<String>> = None;
    let mut images: Vec<Option<Vec<(usize, usize)>>> = vec![None; names.len()];
    let mut last_line = 1;

    for mut line in lines(text)? {
        last_line = line.no;
        let first = line.word("`model`, `universe` or `images`")?;
        match first.text {
            "model" => {
                let t = match line.peek() {
                    Some(t) if matches!(t.kind, TokKind::Str | TokKind::Word) => t.clone(),
                    _ => return Err(line.unexpected("model name")),
                };
                line.pos += 1;
                line.finish()?;
                model_name = Some(t.text.to_string());
            }
            "universe" => {
                if universe.is_some() {
                    return Err(err(line.no, first.col, ParseErrorKind::DuplicateDeclaration("universe")));
                }
                let mut elems: Vec<String> = Vec::new();
                while !line.at_end() {
                    let t = line.word("element name")?;
                    if elems.iter().any(|e| e == t.text) {
                        return Err(err(line.no, t.col, ParseErrorKind::DuplicateElement(t.text.to_string())));
                    }
                    elems.push(t.text.to_string());
                }
                if elems.is_empty() {
                    return Err(err(line.no, first.col, ParseErrorKind::EmptyUniverse));
                }
                universe = Some(elems);
            }
            "phi" => {
                let elems = universe.as_ref().ok_or_else(|| {
                    err(line.no, first.col, ParseErrorKind::MissingDeclaration("universe"))
                })?;
                let rt = line.word("relation name")?;
                let ri = relation_index(&names, &rt, line.no)?;
                if images[ri].is_some() {
                    return Err(err(line.no, rt.col, ParseErrorKind::DuplicatePairSet(rt.text.to_string())));
                }
                let element = |t: &Tok<'_>, no: usize| {
                    elems.iter().position(|e| e == t.text).ok_or_else(|| {
                        err(no, t.col, ParseErrorKind::UnknownElement(t.text.to_string()))
                    })
                };
                let mut pairs = Vec::new();
                while !line.at_end() {
                    line.next_kind(TokKind::Open, "`(`")?;
                    let a = line.word("element name")?;
                    line.next_kind(TokKind::Comma, "`,`")?;
                    let b = line.word("element name")?;
                    line.next_kind(TokKind::Close, "`)`")?;
                    pairs.push((element(&a, line.no)?, element(&b, line.no)?));
                }
                images[ri] = Some(pairs);
            }
            other => {
                return Err(err(
                    line.no,
                    first.col,
                    ParseErrorKind::Unexpected {
                        expected: "`model`, `universe` or `images`".into(),
                        found: format!("`{other}`"),
                    },
                ))
            }
        }
    }

    let universe = universe.ok_or_else(|| err(last_line, 1, ParseErrorKind::EmptyUniverse))?;
    let images = images
        .into_iter()
        .enumerate()
        .map(|(i, p)| p.ok_or_else(|| err(last_line, 1, ParseErrorKind::MissingPairSet(names[i].clone()))))
        .collect::<Result<Vec<_>, _>>()?;
    FiniteModel::new(model_name, universe, names, images)
        .map_err(|e| err(last_line, 1, ParseErrorKind::Invalid(e.to_string())))
}

/// Writes a model in the `.qmodel` format.
pub fn serialize_model(model: &FiniteModel) -> String {
    let mut out = String::new();
    if let Some(name) = model.name() {
        let _ = writeln!(out, "model \"{name}\"");
    }
    let _ = writeln!(out, "universe {}", model.universe().join(" "));
    for (r, name) in model.relation_names().iter().enumerate() {
        let _ = write!(out, "phi {name}");
        for (a, b) in model.image_of_base(r).iter() {
            let _ = write!(out, " ({},{})", model.universe()[a], model.universe()[b]);
        }
        out.push('\n');
    }
    out
}

/// Parses a `.qcsp` network over `calc`. Unlisted pairs stay universal;
/// repeated constraints on the same ordered pair are intersected.
pub fn parse_network(text: &str, calc: &CalculusSpec) -> Result<ConstraintNetwork, ParseError> {
    let names: Vec<String> = calc.base_relations().iter().map(|b| b.name.clone()).collect();
    let mut net: Option<ConstraintNetwork> = None;
    for mut line in lines(text)? {
        let first = line.word("`network` or a variable index")?;
        if first.text == "network" {
            if net.is_some() {
                return Err(err(line.no, first.col, ParseErrorKind::DuplicateDeclaration("network")));
            }
            let t = line.word("variable count")?;
            let n: usize = t.text.parse().map_err(|_| {
                err(line.no, t.col, ParseErrorKind::Unexpected { expected: "variable count".into(), found: format!("`{}`", t.text) })
            })?;
            line.finish()?;
            net = Some(ConstraintNetwork::new(n, calc.len()));
            continue;
        }
        let net = net.as_mut().ok_or_else(|| {
            err(line.no, first.col, ParseErrorKind::MissingDeclaration("network"))
        })?;
        let var = |t: &Tok<'_>, no: usize, n: usize| -> Result<usize, ParseError> {
            let i: usize = t.text.parse().map_err(|_| {
                err(no, t.col, ParseErrorKind::Unexpected { expected: "variable index".into(), found: format!("`{}`", t.text) })
            })?;
            if i >= n {
                return Err(err(no, t.col, ParseErrorKind::VariableOutOfRange { index: i, n }));
            }
            Ok(i)
        };
        let n = net.len();
        let i = var(&first, line.no, n)?;
        let r = relation_set(&mut line, &names)?;
        let jt = line.word("variable index")?;
        let j = var(&jt, line.no, n)?;
        line.finish()?;
        net.constrain(i, j, &r);
    }
    net.ok_or_else(|| err(1, 1, ParseErrorKind::MissingDeclaration("network")))
}

/// Writes a network in the `.qcsp` format, listing every non-universal cell.
pub fn serialize_network(net: &ConstraintNetwork, calc: &CalculusSpec) -> String {
    let mut out = format!("network {}\n", net.len());
    for i in 0..net.len() {
        for j in 0..net.len() {
            let r = net.get(i, j);
            if !r.is_universal() {
                let _ = writeln!(out, "{i} {} {j}", calc.format_relation(r));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{builtin, builtin_calculus};

    const PC: &str = r#"
# minimal point calculus
calculus "point-calculus"
relations < = >
identity =
converse
< (>)
= (=)
> (<)
composition
< < (<)
< = (<)
< > (< = >)
= < (<)
= = (=)
= > (>)
> < (< = >)
> = (>)
> > (>)
"#;

    #[test]
    fn minimal_point_calculus_matches_builtin() {
        let parsed = parse_calculus(PC).unwrap();
        assert_eq!(parsed.len(), 3);
        assert_eq!(parsed, builtin_calculus("point-calculus").unwrap());
    }

    #[test]
    fn missing_composition_cell() {
        let text = PC.replace("> > (>)\n", "");
        let e = parse_calculus(&text).unwrap_err();
        assert_eq!(
            e.kind,
            ParseErrorKind::MissingComposition(">".into(), ">".into())
        );
        assert!(e.to_string().contains("missing composition entry"));
        assert_eq!(e.line, 10);
    }

    #[test]
    fn unknown_identity_token() {
        let text = PC.replace("identity =", "identity ~");
        let e = parse_calculus(&text).unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::UnknownRelation("~".into()));
        assert!(e.to_string().contains("unknown relation"));
        assert_eq!((e.line, e.column), (5, 10));
    }

    #[test]
    fn other_calculus_errors() {
        let dup = PC.replace("relations < = >", "relations < = <");
        assert_eq!(
            parse_calculus(&dup).unwrap_err().kind,
            ParseErrorKind::DuplicateRelation("<".into())
        );
        let empty = PC.replace("relations < = >", "relations");
        assert_eq!(parse_calculus(&empty).unwrap_err().kind, ParseErrorKind::EmptyRelations);
        let missing_row = PC.replace("\n= (=)\n", "\n");
        assert_eq!(
            parse_calculus(&missing_row).unwrap_err().kind,
            ParseErrorKind::MissingConverse("=".into())
        );
        let bad_cell = PC.replace("< < (<)", "< < (< x)");
        let e = parse_calculus(&bad_cell).unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::UnknownRelation("x".into()));
        assert_eq!(e.column, 8);
        let reserved = PC.replace("relations < = >", "relations < = none");
        assert!(matches!(
            parse_calculus(&reserved).unwrap_err().kind,
            ParseErrorKind::ReservedName(_)
        ));
    }

    #[test]
    fn identity_forms() {
        let none = parse_calculus(&PC.replace("identity =", "identity none")).unwrap();
        assert!(none.identity().is_none());
        let set = parse_calculus(&PC.replace("identity =", "identity (= <)")).unwrap();
        assert_eq!(set.identity().unwrap().len(), 2);
        let absent = parse_calculus(&PC.replace("identity =\n", "")).unwrap();
        assert!(absent.identity().is_none());
    }

    #[test]
    fn builtins_round_trip() {
        for name in crate::catalog::builtin_names() {
            let c = builtin_calculus(name).unwrap();
            assert_eq!(parse_calculus(&serialize_calculus(&c)).unwrap(), c, "{name}");
        }
    }

    #[test]
    fn toy_t1_model() {
        let (calc, model) = builtin("toy-t1").unwrap();
        let m = model.unwrap();
        assert_eq!(m.universe(), ["0", "1"]);
        let r2 = calc.index_of("r2").unwrap();
        let pairs: Vec<_> = m.image_of_base(r2).iter().collect();
        assert_eq!(pairs, vec![(1, 0), (1, 1)]);
        assert_eq!(parse_model(&serialize_model(&m), &calc).unwrap(), m);
    }

    #[test]
    fn model_errors() {
        let calc = builtin_calculus("toy-t1").unwrap();
        let e = parse_model("universe\nphi r1\nphi r2\n", &calc).unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::EmptyUniverse);
        let e = parse_model("universe 0 1\nphi r1 (0,2)\nphi r2\n", &calc).unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::UnknownElement("2".into()));
        let e = parse_model("universe 0 1\nphi r1 (0,0)\n", &calc).unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::MissingPairSet("r2".into()));
        let e = parse_model("phi r1 (0,0)\n", &calc).unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::MissingDeclaration("universe"));
    }

    #[test]
    fn networks() {
        let pc = builtin_calculus("point-calculus").unwrap();
        let net = parse_network("network 3\n0 (<) 1\n1 (<) 2\n", &pc).unwrap();
        assert_eq!(net.len(), 3);
        assert_eq!(net.get(0, 1), &pc.relation(&["<"]).unwrap());
        assert!(net.get(1, 0).is_universal());
        assert!(net.get(0, 2).is_universal());

        let dup = parse_network("network 2\n0 (< =) 1\n0 (= >) 1\n", &pc).unwrap();
        assert_eq!(dup.get(0, 1), &pc.relation(&["="]).unwrap());

        let empty = parse_network("network 2\n0 () 1\n", &pc).unwrap();
        assert!(empty.get(0, 1).is_empty());

        let e = parse_network("network 2\n0 (<) 2\n", &pc).unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::VariableOutOfRange { index: 2, n: 2 });
        let e = parse_network("network 2\n0 (~) 1\n", &pc).unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::UnknownRelation("~".into()));

        let text = serialize_network(&net, &pc);
        assert_eq!(parse_network(&text, &pc).unwrap(), net);
    }

    #[test]
    fn quoted_names_and_comments() {
        let text = PC.replace(
            "calculus \"point-calculus\"",
            "calculus \"point # calculus\" # trailing",
        );
        assert_eq!(parse_calculus(&text).unwrap().name(), "point # calculus");
        let e = parse_calculus("calculus \"open\n").unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::UnterminatedString);
    }
}
