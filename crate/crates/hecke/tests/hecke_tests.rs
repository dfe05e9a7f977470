use combinatorics::{partitions_of, Partition};
use diagram::{Morphism, Slice, SliceKind, Word};
use hecke::{
    all_elements, from_endomorphism, iota, jm_l, sign_character, trivial_character,
    young_idempotent, HeckeElement, HeckeError, Permutation,
};
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;
use ring::{quantum_factorial, quantum_integer, rat, Domain, ParamProfile};
use skein::{enumerate_matchings, Skein};
use std::collections::BTreeSet;

fn spec() -> Domain {
    Domain::specialized(rat(2, 1), rat(3, 1))
}

fn profile() -> ParamProfile {
    ParamProfile::new(rat(2, 1), rat(3, 1), 12)
}

fn s(r: usize, i: usize, d: &Domain) -> HeckeElement {
    HeckeElement::generator(r, i, d.clone())
}

fn random_element(r: usize, rng: &mut ChaCha8Rng, d: &Domain) -> HeckeElement {
    let mut h = HeckeElement::zero(r, d.clone());
    let terms = rng.gen_range(1..=3);
    for _ in 0..terms {
        let mut images: Vec<usize> = (0..r).collect();
        images.shuffle(rng);
        let num = rng.gen_range(-3..=3i64);
        let den = rng.gen_range(1..=2i64);
        h.add_term(Permutation::from_images(images), d.from_rat(rat(num, den)));
    }
    h
}

#[test]
fn quadratic_and_braid_relations() {
    for d in [Domain::Symbolic, spec()] {
        let s1 = s(2, 1, &d);
        let mut expected = HeckeElement::zero(2, d.clone());
        expected.add_term(Permutation::transposition(2, 1), d.z());
        expected.add_term(Permutation::identity(2), d.one());
        assert_eq!(s1.mul(&s1).unwrap(), expected);

        let a = s(3, 1, &d);
        let b = s(3, 2, &d);
        let aba = a.mul(&b).unwrap().mul(&a).unwrap();
        let bab = b.mul(&a).unwrap().mul(&b).unwrap();
        assert_eq!(aba, bab);

        // length-additive product lands on a single basis element
        let ab = a.mul(&b).unwrap();
        let expected = HeckeElement::basis(Permutation::from_images(vec![1, 2, 0]), d.clone());
        assert_eq!(ab, expected);
    }

    let e = HeckeElement::one(2, spec());
    assert!(matches!(e.mul(&HeckeElement::one(3, spec())), Err(HeckeError::RankMismatch(2, 3))));
}

#[test]
fn product_is_associative() {
    let mut rng = ChaCha8Rng::seed_from_u64(501);
    let d = spec();
    for trial in 0..500 {
        let r = rng.gen_range(1..=4);
        let a = random_element(r, &mut rng, &d);
        let b = random_element(r, &mut rng, &d);
        let c = random_element(r, &mut rng, &d);
        let left = a.mul(&b).unwrap().mul(&c).unwrap();
        let right = a.mul(&b.mul(&c).unwrap()).unwrap();
        assert_eq!(left, right, "associativity failed on trial {}", trial);
    }
    for _ in 0..20 {
        let r = rng.gen_range(1..=3);
        let a = random_element(r, &mut rng, &Domain::Symbolic);
        let b = random_element(r, &mut rng, &Domain::Symbolic);
        let c = random_element(r, &mut rng, &Domain::Symbolic);
        let left = a.mul(&b).unwrap().mul(&c).unwrap();
        let right = a.mul(&b.mul(&c).unwrap()).unwrap();
        assert_eq!(left, right);
    }
}

#[test]
fn symmetrizer_small_cases() {
    let d = spec();
    let (x11, y11) = hecke::symmetrizers(&Partition::new(vec![1, 1]), &d).unwrap();
    assert_eq!(x11, HeckeElement::one(2, d.clone()));
    assert_eq!(y11, HeckeElement::one(2, d.clone()));

    let (x2, y2) = hecke::symmetrizers(&Partition::new(vec![2]), &d).unwrap();
    let mut expected = HeckeElement::one(2, d.clone());
    expected.add_term(Permutation::transposition(2, 1), d.from_int(2));
    assert_eq!(x2, expected);
    let mut expected = HeckeElement::one(2, d.clone());
    expected.add_term(Permutation::transposition(2, 1), d.from_rat(rat(-1, 2)));
    assert_eq!(y2, expected);

    // support is the block subgroup
    let (x21, _) = hecke::symmetrizers(&Partition::new(vec![2, 1]), &d).unwrap();
    assert_eq!(x21.terms().len(), 2);

    assert!(matches!(
        hecke::symmetrizers(&Partition::new(vec![2]), &Domain::Symbolic),
        Err(HeckeError::SymbolicDomain)
    ));
}

#[test]
fn young_idempotents() {
    let pr = profile();
    let d = pr.domain();

    let e1 = young_idempotent(&Partition::new(vec![1]), &pr).unwrap();
    assert_eq!(e1, HeckeElement::one(1, d.clone()));

    // (1/(1+q^2)) (1 + q S_1) at q = 2
    let e2 = young_idempotent(&Partition::new(vec![2]), &pr).unwrap();
    let mut expected = HeckeElement::zero(2, d.clone());
    expected.add_term(Permutation::identity(2), d.from_rat(rat(1, 5)));
    expected.add_term(Permutation::transposition(2, 1), d.from_rat(rat(2, 5)));
    assert_eq!(e2, expected);

    // closed forms: row shapes rescale x, column shapes rescale y
    for n in 1..=4u32 {
        let shift = (n * (n - 1) / 2) as i64;
        let fact = quantum_factorial(n, &d);
        let row = Partition::new(vec![n]);
        let (x, y) = hecke::symmetrizers(&row, &d).unwrap();
        let en = young_idempotent(&row, &pr).unwrap();
        assert_eq!(en, x.scale(&d.q_pow(-shift).div(&fact)));
        let col = Partition::new(vec![1; n as usize]);
        let e1n = young_idempotent(&col, &pr).unwrap();
        assert_eq!(e1n, y.scale(&d.q_pow(shift).div(&fact)));
    }

    for n in 1..=4u32 {
        let shapes = partitions_of(n);
        let idems: Vec<HeckeElement> =
            shapes.iter().map(|lam| young_idempotent(lam, &pr).unwrap()).collect();
        for (i, e) in idems.iter().enumerate() {
            assert_eq!(e.mul(e).unwrap(), *e, "not idempotent: {}", shapes[i]);
            let dp = hecke::interchange_perm(&shapes[i]);
            let d_elt = HeckeElement::basis(dp.clone(), d.clone());
            let d_inv = hecke::basis_inverse(&dp, &d);
            assert_eq!(d_elt.mul(&d_inv).unwrap(), HeckeElement::one(n as usize, d.clone()));

            // rebuild the unnormalized element from public parts; the
            // normalization constant is the content-weighted product of
            // quantum hook lengths
            let (x, _) = hecke::symmetrizers(&shapes[i], &d).unwrap();
            let (_, y) = hecke::symmetrizers(&shapes[i].conjugate(), &d).unwrap();
            let seed = d_inv.mul(&y).unwrap().mul(&d_elt).unwrap().mul(&x).unwrap();
            let mut tau = d.q_pow(shapes[i].contents().iter().sum());
            for cell in shapes[i].cells() {
                tau = tau.mul(&quantum_integer(shapes[i].hook_length(cell) as i64, &d));
            }
            assert_eq!(seed, e.scale(&tau), "wrong normalization: {}", shapes[i]);

            // absorption on the two sides certifies membership in the
            // bilateral seed space
            let mut offset = 0usize;
            for &part in shapes[i].parts() {
                for k in 1..part as usize {
                    let g = s(n as usize, offset + k, &d);
                    assert_eq!(e.mul(&g).unwrap(), e.scale(&d.q_pow(1)));
                }
                offset += part as usize;
            }
            offset = 0;
            for &part in shapes[i].conjugate().parts() {
                for k in 1..part as usize {
                    let g = s(n as usize, offset + k, &d);
                    let conj = d_inv.mul(&g).unwrap().mul(&d_elt).unwrap();
                    assert_eq!(conj.mul(e).unwrap(), e.scale(&d.q_pow(-1).neg()));
                }
                offset += part as usize;
            }
        }
        for i in 0..idems.len() {
            for j in 0..idems.len() {
                if i != j {
                    assert!(idems[i].mul(&idems[j]).unwrap().is_zero());
                }
            }
        }
    }

    let bad = ParamProfile::new(rat(1, 1), rat(3, 1), 12);
    assert!(young_idempotent(&Partition::new(vec![2]), &bad).is_err());
}

#[test]
fn jm_family_commutes() {
    let d = Domain::Symbolic;
    assert_eq!(jm_l(1, &d), HeckeElement::one(1, d.clone()));
    let mut l2 = HeckeElement::one(2, d.clone());
    l2.add_term(Permutation::transposition(2, 1), d.z());
    assert_eq!(jm_l(2, &d), l2);

    let a = jm_l(2, &d).embed(0, 3);
    let b = jm_l(3, &d);
    assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());

    let d = spec();
    for r in 2..=5usize {
        let ls: Vec<HeckeElement> = (1..=r).map(|k| jm_l(k, &d).embed(0, r)).collect();
        for i in 0..ls.len() {
            for j in i + 1..ls.len() {
                assert_eq!(
                    ls[i].mul(&ls[j]).unwrap(),
                    ls[j].mul(&ls[i]).unwrap(),
                    "L_{} and L_{} do not commute in rank {}",
                    i + 1,
                    j + 1,
                    r
                );
            }
        }
    }

    // L_r centralizes the subalgebra on the first r-1 strands
    for r in 3..=4usize {
        let l = jm_l(r, &d);
        for i in 1..r - 1 {
            let g = s(r, i, &d);
            assert_eq!(l.mul(&g).unwrap(), g.mul(&l).unwrap());
        }
    }
}

#[test]
fn bridge_round_trips() {
    let d = spec();
    let mut sk = Skein::new(d.clone()).unwrap();

    let m = iota(&s(2, 1, &d));
    let crossing = diagram::Diagram::new(Word::up(2), vec![Slice::new(SliceKind::CrossPos, 1)])
        .unwrap();
    assert_eq!(m, Morphism::from_diagram(crossing, &d));
    assert_eq!(iota(&HeckeElement::one(2, d.clone())), Morphism::identity(Word::up(2), &d));

    let s1 = s(2, 1, &d);
    let square = s1.mul(&s1).unwrap();
    let back = from_endomorphism(&iota(&square), &mut sk).unwrap();
    assert_eq!(back, square);
    assert_eq!(back, jm_l(2, &d));

    for r in 1..=4usize {
        for w in all_elements(r) {
            let h = HeckeElement::basis(w, d.clone());
            assert_eq!(from_endomorphism(&iota(&h), &mut sk).unwrap(), h);
        }
    }

    let bad = Morphism::identity(Word::parse("ud").unwrap(), &d);
    assert!(matches!(from_endomorphism(&bad, &mut sk), Err(HeckeError::Boundary(2))));
}

#[test]
fn bridge_is_a_homomorphism() {
    let d = spec();
    let mut sk = Skein::new(d.clone()).unwrap();
    for r in 1..=3usize {
        for wa in all_elements(r) {
            let a = HeckeElement::basis(wa, d.clone());
            for wb in all_elements(r) {
                let b = HeckeElement::basis(wb.clone(), d.clone());
                let composite = sk.normal_form(&iota(&a).then(&iota(&b)));
                let product = sk.normal_form(&iota(&a.mul(&b).unwrap()));
                assert_eq!(composite, product);
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(502);
    let perms = all_elements(4);
    for _ in 0..60 {
        let a = HeckeElement::basis(perms.choose(&mut rng).unwrap().clone(), d.clone());
        let b = HeckeElement::basis(perms.choose(&mut rng).unwrap().clone(), d.clone());
        let composite = sk.normal_form(&iota(&a).then(&iota(&b)));
        let product = sk.normal_form(&iota(&a.mul(&b).unwrap()));
        assert_eq!(composite, product);
    }
    for _ in 0..10 {
        let a = random_element(4, &mut rng, &d);
        let b = random_element(4, &mut rng, &d);
        let composite = sk.normal_form(&iota(&a).then(&iota(&b)));
        let product = sk.normal_form(&iota(&a.mul(&b).unwrap()));
        assert_eq!(composite, product);
    }
}

#[test]
fn bridge_is_injective_on_basis() {
    let d = spec();
    let mut sk = Skein::new(d.clone()).unwrap();
    for r in 1..=4usize {
        let mut seen = BTreeSet::new();
        for w in all_elements(r) {
            let nf = sk.normal_form(&iota(&HeckeElement::basis(w, d.clone())));
            assert_eq!(nf.terms().len(), 1, "basis image must stay a single matching");
            let (m, c) = nf.terms().iter().next().unwrap();
            assert!(c.is_one(), "basis image must have coefficient one");
            assert!(seen.insert(m.clone()), "distinct words collided");
        }
        let all: BTreeSet<_> =
            enumerate_matchings(&Word::up(r), &Word::up(r)).into_iter().collect();
        assert_eq!(seen, all);
    }
}

#[test]
fn characters() {
    let d = spec();
    let s1 = s(2, 1, &d);
    assert_eq!(sign_character(&s1).unwrap(), d.from_rat(rat(-1, 2)));
    assert_eq!(trivial_character(&s1).unwrap(), d.from_int(2));

    for w in all_elements(3) {
        let l = w.length() as i64;
        let mut expected = d.q_pow(-l);
        if l % 2 == 1 {
            expected = expected.neg();
        }
        let h = HeckeElement::basis(w, d.clone());
        assert_eq!(sign_character(&h).unwrap(), expected);
        assert_eq!(trivial_character(&h).unwrap(), d.q_pow(l));
    }

    let mut rng = ChaCha8Rng::seed_from_u64(503);
    for _ in 0..50 {
        let a = random_element(3, &mut rng, &d);
        let b = random_element(3, &mut rng, &d);
        let ab = a.mul(&b).unwrap();
        for f in [sign_character, trivial_character] {
            assert_eq!(f(&ab).unwrap(), f(&a).unwrap().mul(&f(&b).unwrap()));
        }
    }

    let pr = profile();
    for n in 2..=4u32 {
        let row = young_idempotent(&Partition::new(vec![n]), &pr).unwrap();
        assert!(sign_character(&row).unwrap().is_zero());
        assert!(trivial_character(&row).unwrap().is_one());
        let col = young_idempotent(&Partition::new(vec![1; n as usize]), &pr).unwrap();
        assert!(sign_character(&col).unwrap().is_one());
        assert!(trivial_character(&col).unwrap().is_zero());
    }

    assert!(matches!(
        sign_character(&HeckeElement::one(2, Domain::Symbolic)),
        Err(HeckeError::SymbolicDomain)
    ));
}

#[test]
fn json_shape() {
    let h = jm_l(2, &Domain::Symbolic);
    let expected = serde_json::json!({
        "r": 2,
        "terms": [
            {"perm": [1, 2], "coeff": {"num": [[0, 0, "1"]], "den": [[0, 0, "1"]]}},
            {"perm": [2, 1], "coeff": {"num": [[1, 0, "1"]], "den": [[0, 0, "1"]]}},
        ],
    });
    assert_eq!(h.to_json(), expected);

    let w = Permutation::parse("3,1,2").unwrap();
    assert_eq!(w.to_json(), serde_json::json!([3, 1, 2]));
    assert!(Permutation::parse("1,1").is_err());
    assert_eq!(w.length(), 2);
}

#[test]
fn embeddings_shift_blocks() {
    let d = spec();
    let h = s(2, 1, &d);
    let shifted = h.embed(1, 4);
    assert_eq!(shifted, s(4, 2, &d));
    // disjointly placed generators commute
    let a = s(4, 1, &d);
    let b = s(2, 1, &d).embed(2, 4);
    assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
}
