use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use skeinlab::algebra::{delta_color, loop_value, quantum_integer, EvalPoint, Evaluate, LaurentPoly, RatFunc};
use skeinlab::bracket::{
    bracket_state_sum, bracket_sweep_in_order, bracket_tangle_sweep, bracket_tangle_sweep_capped,
    colored_bracket_at, colored_bracket_generic, jones_wenzl, tl_closure, tl_compose, TLDiagram, TLElement,
};
use skeinlab::diagrams::{
    borromean_fixture, braid_closure, cable, hopf_fixture, unknot_fixture, ColoredLink, Crossing, FramedLink,
    PlanarDiagram,
};

fn poly(terms: &[(i64, i64)]) -> LaurentPoly {
    LaurentPoly::from_int_terms(terms.iter().copied())
}

/// A random closed braid with random crossing types.
fn random_diagram(rng: &mut ChaCha8Rng, max_crossings: usize) -> PlanarDiagram {
    let strands = rng.gen_range(1..=5);
    let len = if strands == 1 { 0 } else { rng.gen_range(0..=max_crossings) };
    let word: Vec<i32> = (0..len)
        .map(|_| {
            let g = rng.gen_range(1..strands) as i32;
            if rng.gen_bool(0.5) {
                g
            } else {
                -g
            }
        })
        .collect();
    braid_closure(strands, &word).unwrap()
}

#[test]
fn state_sum_examples() {
    assert_eq!(bracket_state_sum(&PlanarDiagram::empty()).unwrap(), LaurentPoly::one());
    assert_eq!(bracket_state_sum(&PlanarDiagram::new(vec![], 1)).unwrap(), poly(&[(2, -1), (-2, -1)]));
    let hopf = bracket_state_sum(hopf_fixture().diagram()).unwrap();
    let want = &loop_value() * &poly(&[(4, -1), (-4, -1)]);
    assert_eq!(hopf, want);
}

#[test]
fn kinks_and_their_sign() {
    // a single kink is -A^3 or -A^-3 times the loop value
    let pos = bracket_state_sum(unknot_fixture(1).diagram()).unwrap();
    assert_eq!(pos, &poly(&[(3, -1)]) * &loop_value());
    let neg = bracket_state_sum(unknot_fixture(-1).diagram()).unwrap();
    assert_eq!(neg, &poly(&[(-3, -1)]) * &loop_value());
}

#[test]
fn sweep_matches_examples() {
    for d in [
        PlanarDiagram::empty(),
        PlanarDiagram::new(vec![], 1),
        hopf_fixture().diagram().clone(),
        borromean_fixture().diagram().clone(),
        unknot_fixture(-3).diagram().clone(),
    ] {
        assert_eq!(bracket_tangle_sweep(&d).unwrap(), bracket_state_sum(&d).unwrap());
    }
}

#[test]
fn hundred_random_eight_crossing_diagrams() {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for _ in 0..100 {
        let d = random_diagram(&mut rng, 8);
        assert_eq!(bracket_tangle_sweep(&d).unwrap(), bracket_state_sum(&d).unwrap(), "{d:?}");
    }
}

#[test]
fn order_does_not_matter() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for _ in 0..40 {
        let d = random_diagram(&mut rng, 10);
        let want = bracket_state_sum(&d).unwrap();
        let mut order: Vec<usize> = (0..d.crossing_count()).collect();
        order.shuffle(&mut rng);
        assert_eq!(bracket_sweep_in_order(&d, &order, 64).unwrap(), want);
    }
}

#[test]
fn cabled_borromean_against_oracle() {
    let d = cable(&borromean_fixture(), &[1, 1, 2]).unwrap().parallel();
    assert_eq!(d.crossing_count(), 10);
    assert_eq!(bracket_tangle_sweep(&d).unwrap(), bracket_state_sum(&d).unwrap());
    // the (2,2,2) cable is past the oracle but sweeps fine
    let big = cable(&borromean_fixture(), &[2, 2, 2]).unwrap().parallel();
    assert_eq!(big.crossing_count(), 24);
    bracket_tangle_sweep(&big).unwrap();
    assert_eq!(bracket_state_sum(&big).unwrap_err().code(), "E_TOO_LARGE");
}

#[test]
fn width_cap_is_enforced() {
    let big = cable(&borromean_fixture(), &[2, 2, 2]).unwrap().parallel();
    assert_eq!(bracket_tangle_sweep_capped(&big, 2).unwrap_err().code(), "E_WIDTH");
}

#[test]
fn crossingless_pieces_and_kinks_sweep() {
    // disjoint union of a kink and a Hopf link with extra loops
    let mut crossings = vec![Crossing::new(100, 101, 100, 101, skeinlab::diagrams::Over::NeSw)];
    crossings.extend(hopf_fixture().diagram().crossings.iter().copied());
    let d = PlanarDiagram::new(crossings, 2);
    assert_eq!(bracket_tangle_sweep(&d).unwrap(), bracket_state_sum(&d).unwrap());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn sweep_equals_oracle(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let d = random_diagram(&mut rng, 12);
        prop_assert_eq!(bracket_tangle_sweep(&d).unwrap(), bracket_state_sum(&d).unwrap());
    }

    #[test]
    fn mirror_image_inverts_a(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let d = random_diagram(&mut rng, 9);
        let mut m = d.clone();
        m.crossings.iter_mut().for_each(|c| c.over = c.over.flipped());
        prop_assert_eq!(bracket_tangle_sweep(&m).unwrap(), bracket_tangle_sweep(&d).unwrap().substitute_power(-1));
    }
}

#[test]
fn temperley_lieb_basics() {
    let id = TLElement::identity(3);
    assert_eq!(tl_compose(&id, &id).unwrap(), id);
    let u = TLElement::from_diagram(TLDiagram::generator(3, 1).unwrap());
    let uu = tl_compose(&u, &u).unwrap();
    assert_eq!(uu, u.scale(&RatFunc::from_poly(loop_value())));
    let two = TLElement::identity(2);
    assert_eq!(tl_closure(&two).unwrap(), RatFunc::from_poly(loop_value().pow(2)));
    assert_eq!(tl_compose(&id, &two).unwrap_err().code(), "E_ARITY");
    // u1 u2 u1 = u1
    let u2 = TLElement::from_diagram(TLDiagram::generator(3, 2).unwrap());
    assert_eq!(tl_compose(&tl_compose(&u, &u2).unwrap(), &u).unwrap(), u);
    assert_eq!(TLDiagram::new(2, 2, vec![2, 3, 0, 1], 0).unwrap(), TLDiagram::identity(2));
    assert!(TLDiagram::new(2, 2, vec![3, 2, 1, 0], 0).is_err());
    assert!(TLDiagram::new(2, 2, vec![1, 0, 3, 3], 0).is_err());
}

#[test]
fn small_projectors() {
    let p0 = jones_wenzl(0).unwrap();
    assert_eq!(p0.len(), 1);
    assert_eq!(tl_closure(&p0).unwrap(), RatFunc::one());
    assert_eq!(*jones_wenzl(1).unwrap(), TLElement::identity(1));
    let p2 = jones_wenzl(2).unwrap();
    let u = TLDiagram::generator(2, 1).unwrap();
    // coefficient of the cup-cap is 1/(A^2 + A^-2)
    let want = RatFunc::new(LaurentPoly::one(), quantum_integer(2)).unwrap();
    assert_eq!(p2.coefficient(&u), want);
    assert!(p2.coefficient(&TLDiagram::identity(2)).is_one());
}

#[test]
fn projector_identities() {
    for n in 1..=6 {
        let p = jones_wenzl(n).unwrap();
        assert!(p.coefficient(&TLDiagram::identity(n)).is_one());
        assert_eq!(tl_compose(&p, &p).unwrap(), *p, "idempotent at {n}");
        for i in 1..n {
            let u = TLElement::from_diagram(TLDiagram::generator(n, i).unwrap());
            assert!(tl_compose(&p, &u).unwrap().is_empty(), "killed by u_{i} at {n}");
            assert!(tl_compose(&u, &p).unwrap().is_empty());
        }
        assert_eq!(tl_closure(&p).unwrap(), RatFunc::from_poly(delta_color(n)));
    }
}

fn colored(link: FramedLink, colors: &[u32]) -> ColoredLink {
    ColoredLink::new(link, colors.to_vec()).unwrap()
}

#[test]
fn colored_unknot_is_delta() {
    for n in 0..=5 {
        let v = colored_bracket_generic(&colored(unknot_fixture(0), &[n])).unwrap();
        assert_eq!(v, RatFunc::from_poly(delta_color(n as usize)));
    }
}

fn hopf_closed_form(i: u32, a: u32) -> LaurentPoly {
    let q = quantum_integer(((a + 1) * (i + 1)) as usize);
    if (a + i) % 2 == 0 {
        q
    } else {
        -q
    }
}

#[test]
fn colored_hopf_link() {
    for i in 0..=2 {
        for a in 0..=2 {
            let v = colored_bracket_generic(&colored(hopf_fixture(), &[i, a])).unwrap();
            assert_eq!(v, RatFunc::from_poly(hopf_closed_form(i, a)), "colors ({i},{a})");
        }
    }
}

#[test]
fn encircled_unknot() {
    let (link, _) = unknot_fixture(0).with_meridian(0).unwrap();
    for i in 0..=2 {
        for a in 0..=2 {
            let v = colored_bracket_generic(&colored(link.clone(), &[i, a])).unwrap();
            assert_eq!(v, RatFunc::from_poly(hopf_closed_form(i, a)));
        }
    }
    // a meridian on a curl of a crossing component
    let (link, _) = unknot_fixture(-1).with_meridian(0).unwrap();
    let twist = |i: u32| {
        let s = if i % 2 == 0 { 1 } else { -1 };
        LaurentPoly::a_pow(-((i * i + 2 * i) as i64), s)
    };
    for i in 0..=2 {
        let v = colored_bracket_generic(&colored(link.clone(), &[i, 1])).unwrap();
        assert_eq!(v, RatFunc::from_poly(&twist(i) * &hopf_closed_form(i, 1)));
    }
}

#[test]
fn framing_twist() {
    for i in 0..=3u32 {
        let v = colored_bracket_generic(&colored(unknot_fixture(1), &[i])).unwrap();
        let s = if i % 2 == 0 { 1 } else { -1 };
        let twist = LaurentPoly::a_pow((i * i + 2 * i) as i64, s);
        assert_eq!(v, RatFunc::from_poly(&twist * &delta_color(i as usize)));
    }
}

#[test]
fn color_zero_deletes() {
    let b = borromean_fixture();
    let v = colored_bracket_generic(&colored(b, &[0, 2, 1])).unwrap();
    // with one component gone the other two are unlinked
    let want = &delta_color(2) * &delta_color(1);
    assert_eq!(v, RatFunc::from_poly(want));
}

#[test]
fn evaluation_matches_generic() {
    let (link, _) = borromean_fixture().with_meridian(0).unwrap();
    let link = colored(link, &[1, 2, 1, 1]);
    let generic = colored_bracket_generic(&link).unwrap();
    for p in [EvalPoint::plus(2), EvalPoint::minus(2), EvalPoint::plus(3)] {
        assert_eq!(colored_bracket_at(&link, p).unwrap(), generic.evaluate_at(p).unwrap());
    }
    let e = colored_bracket_at(&colored(hopf_fixture(), &[3, 0]), EvalPoint::plus(2)).unwrap_err();
    assert_eq!(e.code(), "E_COLOR_RANGE");
}
