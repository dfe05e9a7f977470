//! Planar-diagram codes and their conversion to slice diagrams.
//!
//! A record X[a,b,c,d] lists the four arc labels counterclockwise
//! starting from the incoming under-strand. Conversion sweeps the
//! crossings bottom to top, maintaining the ordered frontier of open
//! arc ends; each crossing is rotated (four possible placements) until
//! its feet meet the frontier planarly.

use crate::diagram::{Diagram, DiagramError};
use crate::letter::{Letter, Word};
use crate::slice::{cross_kind, Side, Slice, SliceKind};
use std::collections::BTreeMap;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PdCode {
    pub crossings: Vec<[u32; 4]>,
}

impl PdCode {
    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }
}

pub fn parse_pd(text: &str) -> Result<PdCode, DiagramError> {
    let cleaned = text.trim();
    if cleaned.is_empty() {
        return Err(DiagramError::Input("empty PD code".into()));
    }
    let mut crossings = Vec::new();
    for chunk in cleaned.split(|c| c == ';' || char::is_whitespace(c)) {
        let chunk = chunk.trim();
        if chunk.is_empty() {
            continue;
        }
        let body = chunk
            .strip_prefix('X')
            .or_else(|| chunk.strip_prefix('x'))
            .and_then(|s| s.strip_prefix('['))
            .and_then(|s| s.strip_suffix(']'))
            .ok_or_else(|| DiagramError::Input(format!("bad PD record {:?}", chunk)))?;
        let mut ports = [0u32; 4];
        let fields: Vec<&str> = body.split(',').map(str::trim).collect();
        if fields.len() != 4 {
            return Err(DiagramError::Input(format!("PD record {:?} needs 4 arcs", chunk)));
        }
        for (i, f) in fields.iter().enumerate() {
            ports[i] = f
                .parse::<u32>()
                .ok()
                .filter(|&a| a > 0)
                .ok_or_else(|| DiagramError::Input(format!("bad arc label {:?}", f)))?;
        }
        crossings.push(ports);
    }
    let mut counts: BTreeMap<u32, usize> = BTreeMap::new();
    for x in &crossings {
        for &arc in x {
            *counts.entry(arc).or_insert(0) += 1;
        }
    }
    if let Some((&arc, &n)) = counts.iter().find(|&(_, &n)| n != 2) {
        return Err(DiagramError::Input(format!(
            "arc {} appears {} times (each label must appear exactly twice)",
            arc, n
        )));
    }
    Ok(PdCode { crossings })
}

/// Per-crossing over-strand direction: true means the over strand runs
/// d to b, which makes the crossing positive. Picks the first choice
/// vector (crossing 0 most significant, d-to-b first) under which every
/// arc has one inflow and one outflow.
pub fn solve_orientations(pd: &PdCode) -> Result<Vec<bool>, DiagramError> {
    let n = pd.crossings.len();
    assert!(n <= 20, "orientation solve is exponential; refuse huge codes");
    for mask in 0..(1u32 << n) {
        let choice: Vec<bool> = (0..n).map(|i| mask & (1 << (n - 1 - i)) == 0).collect();
        let mut inflow: BTreeMap<u32, usize> = BTreeMap::new();
        let mut outflow: BTreeMap<u32, usize> = BTreeMap::new();
        for (x, &d_to_b) in pd.crossings.iter().zip(&choice) {
            let [a, b, c, d] = *x;
            *inflow.entry(a).or_insert(0) += 1;
            *outflow.entry(c).or_insert(0) += 1;
            let (in_arc, out_arc) = if d_to_b { (d, b) } else { (b, d) };
            *inflow.entry(in_arc).or_insert(0) += 1;
            *outflow.entry(out_arc).or_insert(0) += 1;
        }
        let ok = inflow.values().all(|&k| k == 1)
            && outflow.values().all(|&k| k == 1)
            && inflow.len() == outflow.len();
        if ok {
            return Ok(choice);
        }
    }
    Err(DiagramError::Input("PD code admits no consistent orientation".into()))
}

pub fn pd_signs(pd: &PdCode) -> Result<Vec<i64>, DiagramError> {
    Ok(solve_orientations(pd)?.iter().map(|&p| if p { 1 } else { -1 }).collect())
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Flow {
    In,
    Out,
}

/// Flow at ports (a, b, c, d) given the over direction.
fn flows(d_to_b: bool) -> [Flow; 4] {
    if d_to_b {
        [Flow::In, Flow::Out, Flow::Out, Flow::In]
    } else {
        [Flow::In, Flow::In, Flow::Out, Flow::Out]
    }
}

fn bottom_letter(f: Flow) -> Letter {
    match f {
        Flow::In => Letter::Up,
        Flow::Out => Letter::Down,
    }
}

fn top_letter(f: Flow) -> Letter {
    match f {
        Flow::Out => Letter::Up,
        Flow::In => Letter::Down,
    }
}

type Frontier = Vec<(u32, Letter)>;

fn cup_pos(width: usize, at: usize) -> usize {
    width + 1 - at
}

fn touch_pos(width: usize, left: usize) -> usize {
    width - left - 1
}

fn find_arc(frontier: &Frontier, arc: u32) -> Option<usize> {
    frontier.iter().position(|&(a, _)| a == arc)
}

/// Attempt to place one crossing, rotated so that the ports sit at
/// (bottom-right, top-right, top-left, bottom-left) = cyclic shift of
/// (a, b, c, d) by `shift`. Returns the extended slice list and the new
/// frontier, or None when the feet cannot meet the frontier planarly.
fn try_place(
    frontier: &Frontier,
    ports: [u32; 4],
    flow: [Flow; 4],
    shift: usize,
    positive: bool,
) -> Option<(Vec<Slice>, Frontier)> {
    let at = |k: usize| (shift + k) % 4;
    let (br, tr, tl, bl) = (at(0), at(1), at(2), at(3));
    let under = if shift % 2 == 0 { Side::Right } else { Side::Left };

    let mut fr = frontier.clone();
    let mut slices = Vec::new();

    let x = bottom_letter(flow[bl]);
    let y = bottom_letter(flow[br]);
    let bl_at = find_arc(&fr, ports[bl]);
    let br_at = find_arc(&fr, ports[br]);

    // Arrange the two feet at adjacent frontier slots j, j+1, creating
    // cup feeds for arcs not yet open.
    let j = match (bl_at, br_at) {
        (Some(i), Some(k)) => {
            if k != i + 1 || fr[i].1 != x || fr[k].1 != y {
                return None;
            }
            i
        }
        (Some(i), None) => {
            if fr[i].1 != x {
                return None;
            }
            let kind = match y {
                Letter::Up => SliceKind::CupLeft,
                Letter::Down => SliceKind::CupRight,
            };
            slices.push(Slice::new(kind, cup_pos(fr.len(), i + 1)));
            fr.insert(i + 1, (ports[br], y));
            fr.insert(i + 2, (ports[br], y.flip()));
            i
        }
        (None, Some(k)) => {
            if fr[k].1 != y {
                return None;
            }
            let kind = match x {
                Letter::Up => SliceKind::CupRight,
                Letter::Down => SliceKind::CupLeft,
            };
            slices.push(Slice::new(kind, cup_pos(fr.len(), k)));
            fr.insert(k, (ports[bl], x.flip()));
            fr.insert(k + 1, (ports[bl], x));
            k + 1
        }
        (None, None) => {
            let n = fr.len();
            let kind_a = match x {
                Letter::Up => SliceKind::CupRight,
                Letter::Down => SliceKind::CupLeft,
            };
            slices.push(Slice::new(kind_a, cup_pos(n, n)));
            fr.push((ports[bl], x.flip()));
            fr.push((ports[bl], x));
            let kind_b = match y {
                Letter::Up => SliceKind::CupLeft,
                Letter::Down => SliceKind::CupRight,
            };
            slices.push(Slice::new(kind_b, cup_pos(n + 2, n + 2)));
            fr.insert(n + 2, (ports[br], y));
            fr.insert(n + 3, (ports[br], y.flip()));
            n + 1
        }
    };

    let kind = cross_kind(x, y, under);
    assert_eq!(kind == SliceKind::CrossPos, positive, "sign tables agree");
    slices.push(Slice::new(kind, touch_pos(fr.len(), j)));
    let was_open = |arc: u32| frontier.iter().any(|&(a, _)| a == arc);
    fr[j] = (ports[tl], top_letter(flow[tl]));
    fr[j + 1] = (ports[tr], top_letter(flow[tr]));

    // Arcs whose other end is already open must be capped right away;
    // planarity forces the two ends to sit side by side.
    for port in [tl, tr] {
        let arc = ports[port];
        if !was_open(arc) {
            continue;
        }
        let v = find_arc(&fr, arc).expect("open arc present");
        if v + 1 >= fr.len() || fr[v + 1].0 != arc {
            return None;
        }
        debug_assert_eq!(fr[v + 1].1, fr[v].1.flip());
        let kind = match fr[v].1 {
            Letter::Up => SliceKind::CapRight,
            Letter::Down => SliceKind::CapLeft,
        };
        slices.push(Slice::new(kind, touch_pos(fr.len(), v)));
        fr.drain(v..=v + 1);
    }
    Some((slices, fr))
}

/// Closed diagram for a PD code: greedy sweep, lowest placeable
/// crossing first.
pub fn from_pd(pd: &PdCode) -> Result<Diagram, DiagramError> {
    if pd.crossings.is_empty() {
        return Err(DiagramError::Input("PD code has no crossings".into()));
    }
    for (i, x) in pd.crossings.iter().enumerate() {
        for p in 0..4 {
            for q in p + 1..4 {
                if x[p] == x[q] {
                    return Err(DiagramError::Input(format!(
                        "crossing {} (X[{},{},{},{}]) repeats arc {}; remove kinks first",
                        i, x[0], x[1], x[2], x[3], x[p]
                    )));
                }
            }
        }
    }
    let choice = solve_orientations(pd)?;

    let mut remaining: Vec<usize> = (0..pd.crossings.len()).collect();
    let mut frontier: Frontier = Vec::new();
    let mut slices: Vec<Slice> = Vec::new();
    while !remaining.is_empty() {
        let mut placed = None;
        'search: for (slot, &ci) in remaining.iter().enumerate() {
            let ports = pd.crossings[ci];
            let flow = flows(choice[ci]);
            for shift in 0..4 {
                if let Some((ns, nf)) = try_place(&frontier, ports, flow, shift, choice[ci]) {
                    placed = Some((slot, ns, nf));
                    break 'search;
                }
            }
        }
        match placed {
            Some((slot, ns, nf)) => {
                slices.extend(ns);
                frontier = nf;
                remaining.remove(slot);
            }
            None => {
                let ci = remaining[0];
                let x = pd.crossings[ci];
                return Err(DiagramError::Input(format!(
                    "crossing {} (X[{},{},{},{}]) cannot be swept onto the frontier",
                    ci, x[0], x[1], x[2], x[3]
                )));
            }
        }
    }
    if !frontier.is_empty() {
        let open: Vec<String> = frontier.iter().map(|&(a, _)| a.to_string()).collect();
        return Err(DiagramError::Input(format!("arcs left open: {}", open.join(", "))));
    }
    Diagram::new(Word::empty(), slices)
}
