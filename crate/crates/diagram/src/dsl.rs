//! Plain-text diagram format.
//!
//! First line `obj: u u d d` gives the bottom word left to right; each
//! following line is one slice, `cupr P | cupl P | capr P | capl P |
//! x+ P | x- P`, with P the 1-based right-to-left position. A `braid N`
//! or `braid N closed` header instead introduces whitespace-separated
//! signed generator indices. `#` starts a comment.

use crate::braid::from_braid;
use crate::diagram::{Diagram, DiagramError};
use crate::letter::Word;
use crate::slice::{Slice, SliceKind};

fn kind_from_token(tok: &str) -> Option<SliceKind> {
    Some(match tok {
        "cupr" => SliceKind::CupRight,
        "cupl" => SliceKind::CupLeft,
        "capr" => SliceKind::CapRight,
        "capl" => SliceKind::CapLeft,
        "x+" => SliceKind::CrossPos,
        "x-" => SliceKind::CrossNeg,
        _ => return None,
    })
}

pub fn parse_dsl(text: &str) -> Result<Diagram, DiagramError> {
    let lines: Vec<&str> = text
        .lines()
        .map(|raw| raw.split('#').next().unwrap_or("").trim())
        .filter(|l| !l.is_empty())
        .collect();
    if lines.is_empty() {
        return Err(DiagramError::Input("empty diagram text".into()));
    }

    if let Some(rest) = lines[0].strip_prefix("braid") {
        let toks: Vec<&str> = rest.split_whitespace().collect();
        if toks.is_empty() {
            return Err(DiagramError::Input("braid header needs a strand count".into()));
        }
        let strands: usize = toks[0]
            .parse()
            .map_err(|_| DiagramError::Input(format!("bad strand count {:?}", toks[0])))?;
        let closed = match toks.get(1) {
            None => false,
            Some(&"closed") if toks.len() == 2 => true,
            Some(other) => {
                return Err(DiagramError::Input(format!(
                    "unexpected braid header token {:?}",
                    other
                )))
            }
        };
        let mut gens = Vec::new();
        for line in &lines[1..] {
            for t in line.split_whitespace() {
                let g: i64 = t
                    .parse()
                    .map_err(|_| DiagramError::Input(format!("bad braid generator {:?}", t)))?;
                gens.push(g);
            }
        }
        return from_braid(strands, &gens, closed);
    }

    let rest = lines[0].strip_prefix("obj:").ok_or_else(|| {
        DiagramError::Input("first line must start with `obj:` or `braid`".into())
    })?;
    let bottom = Word::parse(rest).map_err(DiagramError::Input)?;

    let mut slices = Vec::new();
    for line in &lines[1..] {
        let mut it = line.split_whitespace();
        let tok = it.next().unwrap();
        let kind = kind_from_token(tok)
            .ok_or_else(|| DiagramError::Input(format!("unknown slice kind {:?}", tok)))?;
        let pos_tok = it
            .next()
            .ok_or_else(|| DiagramError::Input(format!("missing position after {:?}", tok)))?;
        let pos: usize = pos_tok
            .parse()
            .ok()
            .filter(|&p| p >= 1)
            .ok_or_else(|| DiagramError::Input(format!("bad position {:?}", pos_tok)))?;
        if it.next().is_some() {
            return Err(DiagramError::Input(format!("trailing tokens on line {:?}", line)));
        }
        slices.push(Slice::new(kind, pos));
    }
    Diagram::new(bottom, slices)
}

pub fn print_dsl(d: &Diagram) -> String {
    let mut out = String::new();
    out.push_str("obj:");
    if d.bottom.is_empty() {
        out.push_str(" -");
    } else {
        for i in 0..d.bottom.len() {
            out.push(' ');
            out.push(d.bottom.get(i).char());
        }
    }
    out.push('\n');
    for s in &d.slices {
        out.push_str(&format!("{} {}\n", s.kind.token(), s.pos));
    }
    out
}
