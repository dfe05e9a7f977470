//! The six classical symmetries acting on diagrams and their linear
//! combinations.

use ring::{ParamTransform, TMap};

use crate::diagram::Diagram;
use crate::morphism::Morphism;
use crate::slice::{Slice, SliceKind};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Symmetry {
    /// Vertical reflection; reverses composition order.
    Tau,
    /// Reverses the orientation of every strand.
    Rho,
    /// Negates every crossing coefficientwise; parameters (-z, -t).
    Sigma,
    /// Switches every crossing; parameters (-z, t^-1).
    Omega,
    /// Signs left turnbacks; parameters (z, -t).
    Pi,
    /// Switches crossings and signs them with left turnbacks; (z, t^-1).
    Sharp,
}

impl Symmetry {
    pub const ALL: [Symmetry; 6] = [
        Symmetry::Tau,
        Symmetry::Rho,
        Symmetry::Sigma,
        Symmetry::Omega,
        Symmetry::Pi,
        Symmetry::Sharp,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Symmetry::Tau => "tau",
            Symmetry::Rho => "rho",
            Symmetry::Sigma => "sigma",
            Symmetry::Omega => "omega",
            Symmetry::Pi => "pi",
            Symmetry::Sharp => "sharp",
        }
    }

    /// Tau reverses composition; the rest preserve it.
    pub fn is_contravariant(&self) -> bool {
        matches!(self, Symmetry::Tau)
    }

    pub fn param_transform(&self) -> ParamTransform {
        match self {
            Symmetry::Tau | Symmetry::Rho => ParamTransform::IDENTITY,
            Symmetry::Sigma => ParamTransform { z_neg: true, t_map: TMap::Neg },
            Symmetry::Omega => ParamTransform { z_neg: true, t_map: TMap::Inv },
            Symmetry::Pi => ParamTransform { z_neg: false, t_map: TMap::Neg },
            Symmetry::Sharp => ParamTransform { z_neg: false, t_map: TMap::Inv },
        }
    }
}

fn switch_cross(k: SliceKind) -> SliceKind {
    match k {
        SliceKind::CrossPos => SliceKind::CrossNeg,
        SliceKind::CrossNeg => SliceKind::CrossPos,
        other => other,
    }
}

fn left_turnbacks(d: &Diagram) -> usize {
    d.slices
        .iter()
        .filter(|s| matches!(s.kind, SliceKind::CupLeft | SliceKind::CapLeft))
        .count()
}

/// Image of a bare diagram together with the sign the symmetry attaches
/// to it.
pub fn apply_to_diagram(sym: Symmetry, d: &Diagram) -> (Diagram, bool) {
    match sym {
        Symmetry::Tau => {
            let top = d.top();
            let slices: Vec<Slice> = d
                .slices
                .iter()
                .rev()
                .map(|s| {
                    let k = match s.kind {
                        SliceKind::CupRight => SliceKind::CapLeft,
                        SliceKind::CupLeft => SliceKind::CapRight,
                        SliceKind::CapRight => SliceKind::CupLeft,
                        SliceKind::CapLeft => SliceKind::CupRight,
                        c => c,
                    };
                    Slice::new(k, s.pos)
                })
                .collect();
            (Diagram::new(top, slices).expect("reflection preserves validity"), false)
        }
        Symmetry::Rho => {
            let slices: Vec<Slice> = d
                .slices
                .iter()
                .map(|s| {
                    let k = match s.kind {
                        SliceKind::CupRight => SliceKind::CupLeft,
                        SliceKind::CupLeft => SliceKind::CupRight,
                        SliceKind::CapRight => SliceKind::CapLeft,
                        SliceKind::CapLeft => SliceKind::CapRight,
                        c => c,
                    };
                    Slice::new(k, s.pos)
                })
                .collect();
            (
                Diagram::new(d.bottom.flipped(), slices)
                    .expect("orientation reversal preserves validity"),
                false,
            )
        }
        Symmetry::Sigma => (d.clone(), d.crossing_count() % 2 == 1),
        Symmetry::Omega => {
            let slices: Vec<Slice> =
                d.slices.iter().map(|s| Slice::new(switch_cross(s.kind), s.pos)).collect();
            (Diagram::new(d.bottom.clone(), slices).expect("switch preserves validity"), false)
        }
        Symmetry::Pi => (d.clone(), left_turnbacks(d) % 2 == 1),
        Symmetry::Sharp => {
            let slices: Vec<Slice> =
                d.slices.iter().map(|s| Slice::new(switch_cross(s.kind), s.pos)).collect();
            let neg = (d.crossing_count() + left_turnbacks(d)) % 2 == 1;
            (Diagram::new(d.bottom.clone(), slices).expect("switch preserves validity"), neg)
        }
    }
}

/// Transformed morphism together with the induced parameter map.
/// Coefficients are carried along the map: symbolic ones are
/// substituted, specialized ones keep their value at the transported
/// evaluation point.
pub fn apply_symmetry(sym: Symmetry, m: &Morphism) -> (Morphism, ParamTransform) {
    let (bottom, top) = match sym {
        Symmetry::Tau => (m.top.clone(), m.bottom.clone()),
        Symmetry::Rho => (m.bottom.flipped(), m.top.flipped()),
        _ => (m.bottom.clone(), m.top.clone()),
    };
    let pt = sym.param_transform();
    let mut out = Morphism::zero(bottom, top);
    for (d, c) in m.terms() {
        let (img, neg) = apply_to_diagram(sym, d);
        let mut coeff = c.transform(pt);
        if neg {
            coeff = coeff.neg();
        }
        out.add_term(img, coeff);
    }
    (out, pt)
}
