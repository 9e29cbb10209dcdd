use skeinlab::diagrams::{
    attach_meridian, borromean_fixture, braid_closure, cable, hopf_fixture, linking_and_signature,
    self_writhe, signature, validate, FramedLink, LinkFile, PlanarDiagram,
};

/// Canonical shape of a diagram up to arc relabeling: crossings in order with
/// arcs renamed by first appearance.
fn shape(d: &PlanarDiagram) -> (Vec<([u32; 4], u32)>, usize) {
    let mut names = std::collections::HashMap::new();
    let crossings = d
        .crossings
        .iter()
        .map(|c| {
            let mut arcs = [0; 4];
            for (slot, a) in c.arcs.iter().enumerate() {
                let next = names.len() as u32;
                arcs[slot] = *names.entry(*a).or_insert(next);
            }
            (arcs, c.over.code())
        })
        .collect();
    (crossings, d.free_loops)
}

#[test]
fn fixtures_have_expected_shape() {
    let b = borromean_fixture();
    assert_eq!(b.diagram().crossing_count(), 6);
    assert_eq!(b.component_count(), 3);
    let h = hopf_fixture();
    assert_eq!(h.diagram().crossing_count(), 2);
    assert_eq!(h.component_count(), 2);
    let u = skeinlab::diagrams::unknot_fixture(0);
    assert_eq!(u.diagram().crossing_count(), 0);
    assert_eq!(u.diagram().free_loops, 1);
    assert_eq!(u.component_count(), 1);
}

#[test]
fn borromean_linking_data() {
    let b = borromean_fixture();
    let (m, s) = linking_and_signature(&b);
    assert_eq!(m, vec![vec![0; 3]; 3]);
    assert_eq!(s, 0);
    for c in 0..3 {
        assert_eq!(self_writhe(&b, c), 0);
    }
}

#[test]
fn hopf_linking_data() {
    let (m, s) = linking_and_signature(&hopf_fixture());
    assert_eq!(m[0][0], 0);
    assert_eq!(m[1][1], 0);
    assert_eq!(m[0][1].abs(), 1);
    assert_eq!(m[0][1], m[1][0]);
    assert_eq!(s, 0);
}

#[test]
fn kinked_unknots() {
    let one = skeinlab::diagrams::unknot_fixture(1);
    assert_eq!(self_writhe(&one, 0), 1);
    assert_eq!(linking_and_signature(&one), (vec![vec![1]], 1));
    let two = skeinlab::diagrams::unknot_fixture(-2);
    assert_eq!(self_writhe(&two, 0), -2);
    assert_eq!(linking_and_signature(&two).1, -1);
}

#[test]
fn identity_cable_reproduces_the_diagram() {
    for link in [borromean_fixture(), hopf_fixture(), skeinlab::diagrams::unknot_fixture(-3)] {
        let widths = vec![1; link.component_count()];
        let d = cable(&link, &widths).unwrap().parallel();
        validate(&d).unwrap();
        assert_eq!(d.crossing_count(), link.diagram().crossing_count());
        let again = FramedLink::new(d).unwrap();
        assert_eq!(linking_and_signature(&again).1, linking_and_signature(&link).1);
    }
}

#[test]
fn hopf_two_one_cable() {
    let d = cable(&hopf_fixture(), &[2, 1]).unwrap().parallel();
    validate(&d).unwrap();
    assert_eq!(d.crossing_count(), 4);
    // the 2-cable of one component plus the other: three components
    assert_eq!(validate(&d).unwrap().len(), 3);
}

#[test]
fn zero_width_deletes() {
    let h = hopf_fixture();
    let d = cable(&h, &[0, 3]).unwrap().parallel();
    assert_eq!(d.crossing_count(), 0);
    assert_eq!(d.free_loops, 3);
    let b = cable(&borromean_fixture(), &[0, 2, 2]).unwrap().parallel();
    validate(&b).unwrap();
    assert_eq!(b.crossing_count(), 8);
}

#[test]
fn cables_are_planar_with_expected_counts() {
    let b = borromean_fixture();
    for widths in [[1, 1, 2], [2, 2, 2], [3, 1, 2], [0, 3, 4]] {
        let c = cable(&b, &widths).unwrap();
        let d = c.parallel();
        let comps = validate(&d).unwrap();
        assert_eq!(comps.len(), widths.iter().sum::<usize>());
        // every crossing joins two different components
        let expected: usize = (0..3).map(|i| 2 * widths[i] * widths[(i + 1) % 3]).sum();
        assert_eq!(d.crossing_count(), expected);
    }
}

#[test]
fn cable_self_crossings_scale_with_width_squared() {
    let k = skeinlab::diagrams::unknot_fixture(2);
    let d = cable(&k, &[3]).unwrap().parallel();
    assert_eq!(d.crossing_count(), 2 * 9);
    let link = FramedLink::new(d).unwrap();
    assert_eq!(link.component_count(), 3);
    // blackboard push-offs of a framing-2 unknot link pairwise twice
    let (m, _) = linking_and_signature(&link);
    for i in 0..3 {
        assert_eq!(m[i][i], 2);
        for j in 0..3 {
            if i != j {
                assert_eq!(m[i][j].abs(), 2);
            }
        }
    }
}

#[test]
fn cup_cap_box_is_planar() {
    let b = borromean_fixture();
    let c = cable(&b, &[2, 2, 2]).unwrap();
    // pairing of 4 points: top 0-1, bottom 2-3
    let cupcap: &[usize] = &[1, 0, 3, 2];
    for site in 0..3 {
        let mut boxes = vec![None; 3];
        boxes[site] = Some(cupcap);
        let d = c.insert(&boxes).unwrap();
        validate(&d).unwrap();
    }
}

#[test]
fn meridian_presentations() {
    let b = borromean_fixture();
    let pres = attach_meridian(&b, 0, 1).unwrap();
    assert_eq!(pres.link.component_count(), 4);
    assert_eq!(pres.surgery, 3);
    assert_eq!(pres.extra_colors, vec![1]);
    assert_eq!(pres.surgery_linking_matrix(), vec![vec![0; 3]; 3]);
    let (full, _) = linking_and_signature(&pres.link);
    assert_eq!(full[0][3].abs(), 1);
    assert_eq!(full[1][3], 0);
    assert_eq!(full[3][3], 0);

    let u = skeinlab::diagrams::unknot_fixture(0);
    let hp = attach_meridian(&u, 0, 2).unwrap();
    assert_eq!(shape(hp.link.diagram()).0.len(), 2);
    let (m, s) = linking_and_signature(&hp.link);
    assert_eq!((m[0][0], m[1][1], m[0][1].abs(), s), (0, 0, 1, 0));
}

#[test]
fn meridian_on_a_kinked_component() {
    let k = skeinlab::diagrams::unknot_fixture(-1);
    let (with, idx) = k.with_meridian(0).unwrap();
    assert_eq!(idx, 1);
    assert_eq!(self_writhe(&with, 0), -1);
    assert_eq!(self_writhe(&with, 1), 0);
}

#[test]
fn json_round_trip() {
    for link in [borromean_fixture(), hopf_fixture(), skeinlab::diagrams::unknot_fixture(0)] {
        let file = LinkFile::from_link(&link);
        let text = file.to_json();
        let back = LinkFile::parse(&text).unwrap();
        assert_eq!(back, file);
        assert_eq!(back.to_json(), text);
        let relinked = back.link().unwrap();
        assert_eq!(shape(relinked.diagram()), shape(link.diagram()));
        assert_eq!(relinked.component_groups(), link.component_groups());
    }
    let pres = attach_meridian(&borromean_fixture(), 1, 2).unwrap();
    let file = LinkFile::from_presentation(&pres);
    let back = LinkFile::parse(&file.to_json()).unwrap().presentation(&pres.name).unwrap();
    assert_eq!(back, pres);
}

#[test]
fn json_layout() {
    let text = LinkFile::from_link(&hopf_fixture()).to_json();
    assert_eq!(
        text,
        r#"{"crossings":[[3,4,1,2,1],[1,2,3,4,1]],"free_loops":0,"components":[[3,2],[4,1]],"colors":{}}"#
    );
    let bad = LinkFile::parse(r#"{"crossings":[[1,2,1,2,7]]}"#).unwrap().link();
    assert_eq!(bad.unwrap_err().code(), "E_PARSE");
}

#[test]
fn component_listing_is_checked() {
    let h = hopf_fixture();
    let d = h.diagram().clone();
    assert_eq!(FramedLink::with_components(d.clone(), &[vec![3, 2]]).unwrap_err().code(), "E_COMPONENTS");
    assert_eq!(
        FramedLink::with_components(d.clone(), &[vec![3, 2], vec![2, 3]]).unwrap_err().code(),
        "E_COMPONENTS"
    );
    let swapped = FramedLink::with_components(d, &[vec![1, 4], vec![2, 3]]).unwrap();
    assert_eq!(swapped.component_groups(), vec![vec![1, 4], vec![2, 3]]);
}

#[test]
fn braid_words_are_checked() {
    assert_eq!(braid_closure(2, &[2]).unwrap_err().code(), "E_PRECONDITION");
    assert_eq!(braid_closure(3, &[]).unwrap().free_loops, 3);
    assert_eq!(signature(&[vec![0, 1], vec![1, 0]]), 0);
}
