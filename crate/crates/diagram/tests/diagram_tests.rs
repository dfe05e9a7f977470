use diagram::gen::{random_closed_diagram, random_diagram, random_word};
use diagram::moves::{insert_cross_pair, insert_kink, insert_triple_block, insert_zigzag};
use diagram::symmetry::{apply_symmetry, apply_to_diagram};
use diagram::{
    components, from_braid, from_pd, parse_dsl, parse_pd, pd_signs, print_dsl, trace, Diagram,
    DiagramError, Endpoint, Letter, Morphism, Slice, SliceKind, Symmetry, Word,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use ring::{Domain, TMap};

fn d(text: &str) -> Diagram {
    parse_dsl(text).expect("valid dsl")
}

fn w(text: &str) -> Word {
    Word::parse(text).expect("valid word")
}

#[test]
fn word_basics() {
    let word = w("uudd");
    assert_eq!(word.len(), 4);
    assert_eq!(word.count_up(), 2);
    assert_eq!(word.flow(), 0);
    assert_eq!(word.to_string(), "uudd");
    assert_eq!(w("-"), Word::empty());
    assert_eq!(w("u d u").to_string(), "udu");
    assert_eq!(w("ud").flipped(), w("du"));
    assert_eq!(w("uud").reversed_flipped(), w("udd"));
    assert_eq!(w("ud").concat(&w("du")), w("uddu"));
    assert!(Word::parse("uxd").is_err());
    // position p counts from the right end
    let word = w("udd");
    assert_eq!(word.get(word.len() - 1), Letter::Down);
    assert_eq!(word.get(word.len() - 3), Letter::Up);
}

#[test]
fn slice_application_positions() {
    // cup at position p inserts so that its own pair occupies
    // right-to-left positions p, p+1
    let base = d("obj: u u\ncupr 1");
    assert_eq!(base.top(), w("uudu"));
    let base = d("obj: u u\ncupr 3");
    assert_eq!(base.top(), w("duuu"));
    let base = d("obj: u d\ncapr 1");
    assert_eq!(base.top(), Word::empty());
    let base = d("obj: u u d d\nx+ 2");
    assert_eq!(base.top(), w("udud"));
    // crossing swaps the letters at positions p, p+1
    let base = d("obj: u d\nx- 1");
    assert_eq!(base.top(), w("du"));

    assert!(matches!(
        parse_dsl("obj: u u\ncapr 1"),
        Err(DiagramError::LetterMismatch { .. })
    ));
    assert!(matches!(
        parse_dsl("obj: u u\nx+ 2"),
        Err(DiagramError::OutOfRange { .. })
    ));
    assert!(matches!(
        parse_dsl("obj: u\ncupr 3"),
        Err(DiagramError::OutOfRange { .. })
    ));
}

/// Straightforward reference reimplementation of word chaining.
fn check_chain(bottom: &Word, slices: &[Slice]) -> Option<Vec<Word>> {
    let mut cur: Vec<Letter> = bottom.0.clone();
    let mut words = vec![Word(cur.clone())];
    for s in slices {
        let n = cur.len();
        let p = s.pos;
        match s.kind {
            SliceKind::CupRight | SliceKind::CupLeft => {
                if p < 1 || p > n + 1 {
                    return None;
                }
                let (a, b) = if s.kind == SliceKind::CupRight {
                    (Letter::Down, Letter::Up)
                } else {
                    (Letter::Up, Letter::Down)
                };
                cur.insert(n + 1 - p, b);
                cur.insert(n + 1 - p, a);
            }
            SliceKind::CapRight | SliceKind::CapLeft => {
                if p < 1 || n < 2 || p > n - 1 {
                    return None;
                }
                let j = n - p - 1;
                let want = if s.kind == SliceKind::CapRight {
                    (Letter::Up, Letter::Down)
                } else {
                    (Letter::Down, Letter::Up)
                };
                if (cur[j], cur[j + 1]) != want {
                    return None;
                }
                cur.remove(j + 1);
                cur.remove(j);
            }
            SliceKind::CrossPos | SliceKind::CrossNeg => {
                if p < 1 || n < 2 || p > n - 1 {
                    return None;
                }
                let j = n - p - 1;
                cur.swap(j, j + 1);
            }
        }
        words.push(Word(cur.clone()));
    }
    Some(words)
}

#[test]
fn validation_matches_reference_checker() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..300 {
        let blen = rng.gen_range(0..5);
        let bottom = random_word(&mut rng, blen);
        let steps = rng.gen_range(0..8);
        let valid = random_diagram(&mut rng, bottom.clone(), steps, 8);
        let expect = check_chain(&valid.bottom, &valid.slices).expect("generator output chains");
        assert_eq!(valid.words().unwrap(), expect);

        // corrupt one slice (or append one) at random
        let mut slices = valid.slices.clone();
        let kind = [
            SliceKind::CupRight,
            SliceKind::CupLeft,
            SliceKind::CapRight,
            SliceKind::CapLeft,
            SliceKind::CrossPos,
            SliceKind::CrossNeg,
        ][rng.gen_range(0..6)];
        let s = Slice::new(kind, rng.gen_range(1..7));
        if slices.is_empty() || rng.gen_bool(0.3) {
            slices.push(s);
        } else {
            let i = rng.gen_range(0..slices.len());
            slices[i] = s;
        }
        let reference = check_chain(&bottom, &slices);
        let engine = Diagram::new(bottom.clone(), slices);
        assert_eq!(engine.is_ok(), reference.is_some());
        if let (Ok(eng), Some(exp)) = (engine, reference) {
            assert_eq!(eng.words().unwrap(), exp);
        }
    }
}

#[test]
fn dsl_roundtrip() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..100 {
        let blen = rng.gen_range(0..4);
        let bottom = random_word(&mut rng, blen);
        let steps = rng.gen_range(0..6);
        let diag = random_diagram(&mut rng, bottom, steps, 7);
        assert_eq!(parse_dsl(&print_dsl(&diag)).unwrap(), diag);
    }
    let trefoil = parse_dsl("braid 2 closed\n1 1 1").unwrap();
    assert_eq!(trefoil, from_braid(2, &[1, 1, 1], true).unwrap());
    let open = parse_dsl("braid 3\n1 -2 1").unwrap();
    assert_eq!(open.bottom, w("uuu"));
    assert_eq!(open.writhe(), 1);
    assert!(parse_dsl("").is_err());
    assert!(parse_dsl("obj: u\ncupx 1").is_err());
    assert!(parse_dsl("obj: u\ncupr 0").is_err());
    assert!(parse_dsl("obj: u\ncupr 1 2").is_err());
    assert!(parse_dsl("braid x\n1").is_err());
    assert!(parse_dsl("braid 2 open\n1").is_err());
    assert!(parse_dsl("# only comments").is_err());
}

#[test]
fn braid_construction() {
    let trefoil = from_braid(2, &[1, 1, 1], true).unwrap();
    assert_eq!(trefoil.bottom, Word::empty());
    assert_eq!(trefoil.writhe(), 3);
    assert_eq!(trefoil.crossing_count(), 3);
    assert_eq!(components(&trefoil).unwrap(), 1);

    let unknot = from_braid(1, &[], true).unwrap();
    assert_eq!(unknot.crossing_count(), 0);
    assert_eq!(components(&unknot).unwrap(), 1);

    let hopf = from_braid(2, &[1, 1], true).unwrap();
    assert_eq!(components(&hopf).unwrap(), 2);
    assert_eq!(hopf.writhe(), 2);

    assert!(from_braid(2, &[2], false).is_err());
    assert!(from_braid(2, &[0], false).is_err());
    assert!(from_braid(0, &[], false).is_err());

    // closure arcs pass to the right: explicit slice check on one strand
    let circle = from_braid(1, &[], true).unwrap();
    assert_eq!(
        circle.slices,
        vec![
            Slice::new(SliceKind::CupLeft, 1),
            Slice::new(SliceKind::CapRight, 1)
        ]
    );
}

#[test]
fn pd_hopf_layering_is_reproducible() {
    let pd = parse_pd("X[1,3,2,4];X[3,1,4,2]").unwrap();
    assert_eq!(pd_signs(&pd).unwrap(), vec![1, 1]);
    let hopf = from_pd(&pd).unwrap();
    assert_eq!(
        hopf.slices,
        vec![
            Slice::new(SliceKind::CupRight, 1),
            Slice::new(SliceKind::CupLeft, 1),
            Slice::new(SliceKind::CrossPos, 2),
            Slice::new(SliceKind::CrossPos, 2),
            Slice::new(SliceKind::CapLeft, 3),
            Slice::new(SliceKind::CapRight, 1),
        ]
    );
    assert_eq!(hopf.writhe(), 2);
    assert_eq!(components(&hopf).unwrap(), 2);
}

#[test]
fn pd_trefoil_layers() {
    let pd = parse_pd("X[1,4,2,5];X[3,6,4,1];X[5,2,6,3]").unwrap();
    assert_eq!(pd_signs(&pd).unwrap(), vec![-1, -1, -1]);
    let tref = from_pd(&pd).unwrap();
    assert_eq!(tref.writhe(), -3);
    assert_eq!(tref.crossing_count(), 3);
    assert_eq!(components(&tref).unwrap(), 1);
}

#[test]
fn pd_errors() {
    assert!(parse_pd("").is_err());
    assert!(parse_pd("Y[1,2,3,4]").is_err());
    assert!(parse_pd("X[1,2,3]").is_err());
    assert!(parse_pd("X[0,1,2,3]").is_err());
    // arc 5 appears once
    assert!(parse_pd("X[1,3,2,4];X[3,1,4,5]").is_err());
    // kink: repeated arc within one crossing
    let kink = parse_pd("X[1,2,2,1]").unwrap();
    let err = from_pd(&kink).unwrap_err().to_string();
    assert!(err.contains("crossing 0"), "{}", err);
    // two inflows on arc 1, no orientation possible
    let bad = parse_pd("X[1,2,3,4];X[1,4,3,2]").unwrap();
    assert!(pd_signs(&bad).is_err());
}

#[test]
fn trace_endpoints_and_circles() {
    // single strand wiggling through a wave
    let zig = d("obj: u\ncupr 1\ncapr 2");
    let t = trace(&zig).unwrap();
    assert_eq!(t.strands.len(), 1);
    assert_eq!(t.strands[0].start, Some(Endpoint::Bottom(0)));
    assert_eq!(t.strands[0].end, Some(Endpoint::Top(0)));
    assert!(t.strands[0].events.is_empty());

    let circle = d("obj: -\ncupr 1\ncapl 1");
    let t = trace(&circle).unwrap();
    assert_eq!(t.circle_count(), 1);

    // identity strands walk rightmost first
    let id2 = Diagram::identity(w("uu"));
    let t = trace(&id2).unwrap();
    assert_eq!(t.strands[0].start, Some(Endpoint::Bottom(1)));
    assert_eq!(t.strands[1].start, Some(Endpoint::Bottom(0)));

    // downward strands start at the top
    let id_down = Diagram::identity(w("d"));
    let t = trace(&id_down).unwrap();
    assert_eq!(t.strands[0].start, Some(Endpoint::Top(0)));
    assert_eq!(t.strands[0].end, Some(Endpoint::Bottom(0)));
}

#[test]
fn trace_crossing_events() {
    // closed trefoil: one curve through three crossings, each passed
    // once over and once under
    let tref = from_braid(2, &[1, 1, 1], true).unwrap();
    let t = trace(&tref).unwrap();
    assert_eq!(t.strands.len(), 1);
    let events = &t.strands[0].events;
    assert_eq!(events.len(), 6);
    for ci in 0..tref.slices.len() {
        if !tref.slices[ci].kind.is_cross() {
            continue;
        }
        let visits: Vec<bool> = events
            .iter()
            .filter(|e| e.slice_index == ci)
            .map(|e| e.is_under)
            .collect();
        assert_eq!(visits.len(), 2);
        assert_eq!(visits.iter().filter(|&&u| u).count(), 1);
    }
    assert_eq!(t.self_writhe(&tref), 3);

    // a kinked circle has self-writhe -1
    let base = from_braid(1, &[], true).unwrap();
    let kinked = insert_kink(&base, 1, 1, false).unwrap();
    let t = trace(&kinked).unwrap();
    assert_eq!(t.circle_count(), 1);
    assert_eq!(t.self_writhe(&kinked), -1);
}

#[test]
fn move_insertions_preserve_boundary() {
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    for _ in 0..60 {
        let steps = rng.gen_range(2..8);
        let base = random_closed_diagram(&mut rng, steps, 8);
        let words = base.words().unwrap();
        let level = rng.gen_range(0..words.len());
        let width = words[level].len();

        if width >= 1 {
            let pos = rng.gen_range(1..=width);
            let pos_kink = insert_kink(&base, level, pos, rng.gen_bool(0.5)).unwrap();
            assert_eq!(pos_kink.top(), base.top());
            assert_eq!(pos_kink.crossing_count(), base.crossing_count() + 1);
            let zz = insert_zigzag(&base, level, pos).unwrap();
            assert_eq!(zz.top(), base.top());
        }
        if width >= 2 {
            let pos = rng.gen_range(1..width);
            let rr = insert_cross_pair(&base, level, pos, rng.gen_bool(0.5)).unwrap();
            assert_eq!(rr.top(), base.top());
            assert_eq!(rr.writhe(), base.writhe());
        }
        if width >= 3 {
            let pos = rng.gen_range(1..width - 1);
            let r3 = insert_triple_block(&base, level, pos).unwrap();
            assert_eq!(r3.top(), base.top());
            assert_eq!(r3.writhe(), base.writhe());
            assert_eq!(r3.crossing_count(), base.crossing_count() + 6);
        }
    }
}

#[test]
fn morphism_algebra() {
    let dom = Domain::Symbolic;
    let z = dom.z();
    let cross = Morphism::from_diagram(d("obj: u u\nx+ 1"), &dom);
    let ident = Morphism::identity(w("uu"), &dom);

    let sum = cross.scale(&z).add(&ident);
    assert_eq!(sum.terms().len(), 2);
    assert_eq!(sum.sub(&sum), Morphism::zero(w("uu"), w("uu")));

    // bilinearity of composition
    let lhs = sum.then(&sum);
    let rhs = cross
        .then(&cross)
        .scale(&z.mul(&z))
        .add(&cross.then(&ident).scale(&z))
        .add(&ident.then(&cross).scale(&z))
        .add(&ident.then(&ident));
    assert_eq!(lhs, rhs);

    // tensor places self on the left
    let cup = Morphism::from_diagram(d("obj: -\ncupr 1"), &dom);
    let two = cup.tensor(&cup);
    let (diag, _) = two.terms().iter().next().unwrap();
    assert_eq!(diag.top(), w("dudu"));
    assert_eq!(
        diag.slices,
        vec![
            Slice::new(SliceKind::CupRight, 1),
            Slice::new(SliceKind::CupRight, 3)
        ]
    );

    // identity on the empty word is the tensor unit
    let unit = Morphism::identity(Word::empty(), &dom);
    assert_eq!(cup.tensor(&unit), cup);
    assert_eq!(unit.tensor(&cup), cup);
}

#[test]
fn symmetry_generator_images() {
    let cup_r = d("obj: -\ncupr 1");
    let (img, neg) = apply_to_diagram(Symmetry::Tau, &cup_r);
    assert!(!neg);
    assert_eq!(img, d("obj: d u\ncapl 1"));

    let (img, _) = apply_to_diagram(Symmetry::Rho, &cup_r);
    assert_eq!(img, d("obj: -\ncupl 1"));

    let x = d("obj: u u\nx+ 1");
    let (img, neg) = apply_to_diagram(Symmetry::Sigma, &x);
    assert_eq!(img, x);
    assert!(neg);
    let (img, neg) = apply_to_diagram(Symmetry::Omega, &x);
    assert_eq!(img, d("obj: u u\nx- 1"));
    assert!(!neg);
    let (img, neg) = apply_to_diagram(Symmetry::Pi, &d("obj: -\ncupl 1"));
    assert_eq!(img, d("obj: -\ncupl 1"));
    assert!(neg);
    let (img, neg) = apply_to_diagram(Symmetry::Sharp, &x);
    assert_eq!(img, d("obj: u u\nx- 1"));
    assert!(neg);

    // parameter maps
    assert_eq!(Symmetry::Tau.param_transform().z_neg, false);
    assert_eq!(Symmetry::Sigma.param_transform().t_map, TMap::Neg);
    assert_eq!(Symmetry::Omega.param_transform().z_neg, true);
    assert_eq!(Symmetry::Omega.param_transform().t_map, TMap::Inv);
    assert_eq!(Symmetry::Pi.param_transform().z_neg, false);
    assert_eq!(Symmetry::Sharp.param_transform().t_map, TMap::Inv);
}

#[test]
fn symmetry_involutions_and_composition() {
    let dom = Domain::Symbolic;
    let mut rng = ChaCha8Rng::seed_from_u64(77);
    for _ in 0..80 {
        let blen = rng.gen_range(0..4);
        let bottom = random_word(&mut rng, blen);
        let steps = rng.gen_range(1..7);
        let diag = random_diagram(&mut rng, bottom, steps, 8);
        let m = Morphism::from_diagram(diag.clone(), &dom).scale(&dom.z());

        for sym in Symmetry::ALL {
            let (once, _) = apply_symmetry(sym, &m);
            let (twice, _) = apply_symmetry(sym, &once);
            assert_eq!(twice, m, "{} should be an involution", sym.name());
        }

        // sharp factors through the other three
        let (p1, _) = apply_symmetry(Symmetry::Pi, &m);
        let (p2, _) = apply_symmetry(Symmetry::Omega, &p1);
        let (p3, _) = apply_symmetry(Symmetry::Sigma, &p2);
        let (sharp, _) = apply_symmetry(Symmetry::Sharp, &m);
        assert_eq!(p3, sharp);

        // compatibility with stacking: split the slice list
        if diag.slices.len() >= 2 {
            let cut = rng.gen_range(1..diag.slices.len());
            let lower = Diagram::new(diag.bottom.clone(), diag.slices[..cut].to_vec()).unwrap();
            let upper = Diagram::new(lower.top(), diag.slices[cut..].to_vec()).unwrap();
            let f = Morphism::from_diagram(lower, &dom);
            let g = Morphism::from_diagram(upper, &dom);
            for sym in Symmetry::ALL {
                let (fg, _) = apply_symmetry(sym, &f.then(&g));
                let (sf, _) = apply_symmetry(sym, &f);
                let (sg, _) = apply_symmetry(sym, &g);
                let expect = if sym.is_contravariant() { sg.then(&sf) } else { sf.then(&sg) };
                assert_eq!(fg, expect, "{} and stacking", sym.name());
            }
        }
    }
}

#[test]
fn symmetry_respects_tensor() {
    let dom = Domain::Symbolic;
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    for _ in 0..60 {
        let la = rng.gen_range(0..3);
        let wa = random_word(&mut rng, la);
        let a = random_diagram(&mut rng, wa, 3, 6);
        let lb = rng.gen_range(0..3);
        let wb = random_word(&mut rng, lb);
        let b = random_diagram(&mut rng, wb, 3, 6);
        let f = Morphism::from_diagram(a, &dom);
        let g = Morphism::from_diagram(b, &dom);
        // tau reorders slices across the factors, so it matches only up
        // to the interchange law; the covariant five match exactly
        for sym in Symmetry::ALL {
            if sym.is_contravariant() {
                continue;
            }
            let (fg, _) = apply_symmetry(sym, &f.tensor(&g));
            let (sf, _) = apply_symmetry(sym, &f);
            let (sg, _) = apply_symmetry(sym, &g);
            assert_eq!(fg, sf.tensor(&sg), "{} and tensor", sym.name());
        }
    }
}

#[test]
fn symmetry_coefficient_transport() {
    let dom = Domain::Symbolic;
    let x = Morphism::from_diagram(d("obj: u u\nx+ 1"), &dom).scale(&dom.z());
    // sigma: sign (-1)^1 and z -> -z cancel
    let (img, pt) = apply_symmetry(Symmetry::Sigma, &x);
    assert_eq!(img.terms().values().next().unwrap(), &dom.z());
    assert_eq!(pt.describe(), "(-z, -t)");
    // omega: crossing switched, coefficient z -> -z
    let (img, pt) = apply_symmetry(Symmetry::Omega, &x);
    assert_eq!(img.terms().values().next().unwrap(), &dom.z().neg());
    assert_eq!(pt.describe(), "(-z, t^-1)");

    // specialized scalars keep their value, the evaluation point moves
    let spec = Domain::specialized(ring::rat(2, 1), ring::rat(3, 1));
    let m = Morphism::identity(w("u"), &spec).scale(&spec.t());
    let (img, _) = apply_symmetry(Symmetry::Pi, &m);
    let c = img.terms().values().next().unwrap();
    assert_eq!(c.rat_value(), &ring::rat(3, 1));
    let moved = c.domain();
    assert_eq!(moved.params().unwrap().t0, ring::rat(-3, 1));
}

#[test]
fn closure_of_mixed_word() {
    let base = Diagram::identity(w("ud"));
    let closed = base.closure();
    assert_eq!(closed.bottom, Word::empty());
    assert_eq!(components(&closed).unwrap(), 2);
    assert_eq!(
        closed.slices,
        vec![
            Slice::new(SliceKind::CupLeft, 1),
            Slice::new(SliceKind::CupRight, 2),
            Slice::new(SliceKind::CapLeft, 2),
            Slice::new(SliceKind::CapRight, 1),
        ]
    );
}
