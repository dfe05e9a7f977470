//! Independent link-polynomial evaluator working directly on planar codes
//! by the descending-diagram recursion: walk each component from its
//! lowest arc label, switch the first crossing met on the under strand,
//! split off the smoothed term, and value descending diagrams as unlinks.
//! Shares nothing with the rewriting engine past the ring, so the two
//! routes cross-check each other.

use std::collections::BTreeMap;

use diagram::{pd_signs, DiagramError, PdCode};
use ring::{bubble_value, Domain, RingError, Scalar};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum OracleError {
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error(transparent)]
    Diagram(#[from] DiagramError),
}

#[derive(Clone, Copy)]
struct OCross {
    a: u32,
    b: u32,
    c: u32,
    d: u32,
    /// Over strand runs d to b; equivalent to positive sign.
    d_to_b: bool,
}

impl OCross {
    fn over_in(&self) -> u32 {
        if self.d_to_b {
            self.d
        } else {
            self.b
        }
    }

    fn over_out(&self) -> u32 {
        if self.d_to_b {
            self.b
        } else {
            self.d
        }
    }

    fn switched(&self) -> OCross {
        if self.d_to_b {
            OCross { a: self.d, b: self.a, c: self.b, d: self.c, d_to_b: false }
        } else {
            OCross { a: self.b, b: self.c, c: self.d, d: self.a, d_to_b: true }
        }
    }
}

/// Framing-corrected invariant of the link presented by a planar code.
/// Unlike the diagram builder this accepts codes with kinks.
pub fn homfly_pd(pd: &PdCode, domain: &Domain) -> Result<Scalar, OracleError> {
    let signs = pd_signs(pd)?;
    let crossings: Vec<OCross> = pd
        .crossings
        .iter()
        .zip(&signs)
        .map(|(&[a, b, c, d], &s)| OCross { a, b, c, d, d_to_b: s > 0 })
        .collect();
    let bubble = bubble_value(domain)?;
    Ok(descend(&crossings, 0, domain, &bubble))
}

/// Where each arc flows in: crossing index and whether it enters under.
fn in_ports(crossings: &[OCross]) -> BTreeMap<u32, (usize, bool)> {
    let mut map = BTreeMap::new();
    for (ci, x) in crossings.iter().enumerate() {
        let prev = map.insert(x.a, (ci, true));
        assert!(prev.is_none(), "arc {} flows in twice", x.a);
        let prev = map.insert(x.over_in(), (ci, false));
        assert!(prev.is_none(), "arc {} flows in twice", x.over_in());
    }
    map
}

fn descend(crossings: &[OCross], free_circles: usize, domain: &Domain, bubble: &Scalar) -> Scalar {
    if crossings.is_empty() {
        assert!(free_circles > 0, "cannot evaluate an empty link");
        return bubble.pow(free_circles as i64 - 1);
    }
    let ports = in_ports(crossings);

    // Walk components in order of their smallest arc; within a walk an
    // arc's crossing must first be met on the over strand.
    let mut unvisited: std::collections::BTreeSet<u32> = ports.keys().copied().collect();
    let mut cleared = std::collections::BTreeSet::new();
    let mut components = 0usize;
    let mut pivot = None;
    'walks: while let Some(&start) = unvisited.iter().next() {
        components += 1;
        let mut arc = start;
        loop {
            unvisited.remove(&arc);
            let (ci, enters_under) = ports[&arc];
            if cleared.insert(ci) && enters_under {
                pivot = Some(ci);
                break 'walks;
            }
            arc = if enters_under { crossings[ci].c } else { crossings[ci].over_out() };
            if arc == start {
                break;
            }
        }
    }

    let Some(ci) = pivot else {
        return bubble.pow((components + free_circles) as i64 - 1);
    };
    let x = crossings[ci];

    let mut switched = crossings.to_vec();
    switched[ci] = x.switched();
    let switched_val = descend(&switched, free_circles, domain, bubble);

    // Oriented smoothing: the under in-arc continues as the over out-arc
    // and the over in-arc continues as the under out-arc.
    let mut relabel: BTreeMap<u32, u32> = BTreeMap::new();
    fn root(relabel: &BTreeMap<u32, u32>, mut x: u32) -> u32 {
        while let Some(&y) = relabel.get(&x) {
            x = y;
        }
        x
    }
    let mut circles = free_circles;
    for (u, v) in [(x.a, x.over_out()), (x.over_in(), x.c)] {
        let (ru, rv) = (root(&relabel, u), root(&relabel, v));
        if ru == rv {
            circles += 1;
        } else {
            relabel.insert(ru.max(rv), ru.min(rv));
        }
    }
    let rest: Vec<OCross> = crossings
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != ci)
        .map(|(_, y)| OCross {
            a: root(&relabel, y.a),
            b: root(&relabel, y.b),
            c: root(&relabel, y.c),
            d: root(&relabel, y.d),
            d_to_b: y.d_to_b,
        })
        .collect();
    let smoothed_val = descend(&rest, circles, domain, bubble);

    if x.d_to_b {
        // positive pivot
        domain
            .t_pow(-2)
            .mul(&switched_val)
            .add(&domain.t_pow(-1).mul(&domain.z()).mul(&smoothed_val))
    } else {
        domain
            .t_pow(2)
            .mul(&switched_val)
            .sub(&domain.t_pow(1).mul(&domain.z()).mul(&smoothed_val))
    }
}
