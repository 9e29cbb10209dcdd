use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};

/// Arc label in a planar diagram.
pub type ArcId = u32;

/// Slot positions around a crossing, as seen in the plane.
pub const NW: usize = 0;
pub const NE: usize = 1;
pub const SW: usize = 2;
pub const SE: usize = 3;

/// Which diagonal of a crossing passes over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Over {
    /// The strand through `NW` and `SE` is on top.
    NwSe,
    /// The strand through `NE` and `SW` is on top.
    NeSw,
}

impl Over {
    pub fn code(self) -> u32 {
        match self {
            Over::NwSe => 0,
            Over::NeSw => 1,
        }
    }

    pub fn from_code(c: u32) -> Option<Over> {
        match c {
            0 => Some(Over::NwSe),
            1 => Some(Over::NeSw),
            _ => None,
        }
    }

    pub fn flipped(self) -> Over {
        match self {
            Over::NwSe => Over::NeSw,
            Over::NeSw => Over::NwSe,
        }
    }
}

/// One crossing: the arcs at its four corners and the over diagonal.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Crossing {
    /// Arc labels at `[NW, NE, SW, SE]`.
    pub arcs: [ArcId; 4],
    pub over: Over,
}

/// The slot pairing of one smoothing.
pub type Smoothing = [(usize, usize); 2];

const HORIZONTAL: Smoothing = [(NW, NE), (SW, SE)];
const VERTICAL: Smoothing = [(NW, SW), (NE, SE)];

impl Crossing {
    pub fn new(nw: ArcId, ne: ArcId, sw: ArcId, se: ArcId, over: Over) -> Self {
        Self {
            arcs: [nw, ne, sw, se],
            over,
        }
    }

    /// The A-smoothing joins the two regions swept when the over strand is
    /// turned counterclockwise.
    pub fn a_smoothing(&self) -> Smoothing {
        match self.over {
            Over::NwSe => HORIZONTAL,
            Over::NeSw => VERTICAL,
        }
    }

    pub fn b_smoothing(&self) -> Smoothing {
        match self.over {
            Over::NwSe => VERTICAL,
            Over::NeSw => HORIZONTAL,
        }
    }
}

pub fn opposite(slot: usize) -> usize {
    3 - slot
}

/// Next slot counterclockwise: NE -> NW -> SW -> SE -> NE.
pub fn ccw_next(slot: usize) -> usize {
    [SW, NW, SE, NE][slot]
}

/// Unit-ish position of a slot relative to the crossing center.
pub(crate) fn slot_vector(slot: usize) -> (i64, i64) {
    [(-1, 1), (1, 1), (-1, -1), (1, -1)][slot]
}

/// 0 for the NW–SE diagonal, 1 for NE–SW.
pub(crate) fn diagonal(slot: usize) -> usize {
    match slot {
        NW | SE => 0,
        _ => 1,
    }
}

/// A position on a crossing: crossing index and slot.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Occ {
    pub crossing: usize,
    pub slot: usize,
}

/// One arc traversed in a chosen direction: it leaves `from` and arrives at `to`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Strand {
    pub arc: ArcId,
    pub from: Occ,
    pub to: Occ,
}

/// A link component as an oriented cyclic sequence of strands. A component
/// without strands is a crossingless circle.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Component {
    pub strands: Vec<Strand>,
}

impl Component {
    pub fn free_loop() -> Self {
        Self::default()
    }

    pub fn is_free_loop(&self) -> bool {
        self.strands.is_empty()
    }

    pub fn arcs(&self) -> Vec<ArcId> {
        self.strands.iter().map(|s| s.arc).collect()
    }
}

/// A link diagram in PD style: crossings with labelled corners plus a count
/// of crossingless circles. The cyclic order of the corners is the rotation
/// system of the underlying 4-valent plane graph.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct PlanarDiagram {
    pub crossings: Vec<Crossing>,
    pub free_loops: usize,
}

impl PlanarDiagram {
    pub fn new(crossings: Vec<Crossing>, free_loops: usize) -> Self {
        Self {
            crossings,
            free_loops,
        }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn arcs(&self) -> BTreeSet<ArcId> {
        self.crossings.iter().flat_map(|c| c.arcs).collect()
    }

    pub fn max_arc(&self) -> Option<ArcId> {
        self.crossings.iter().flat_map(|c| c.arcs).max()
    }

    /// Both occurrences of every arc; fails if some label is not used
    /// exactly twice.
    pub fn occurrences(&self) -> Result<BTreeMap<ArcId, [Occ; 2]>> {
        let mut seen: BTreeMap<ArcId, Vec<Occ>> = BTreeMap::new();
        for (i, c) in self.crossings.iter().enumerate() {
            for (slot, &a) in c.arcs.iter().enumerate() {
                seen.entry(a).or_default().push(Occ { crossing: i, slot });
            }
        }
        let mut out = BTreeMap::new();
        for (arc, occs) in seen {
            if occs.len() != 2 {
                return Err(Error::ArcCount {
                    arc,
                    count: occs.len(),
                });
            }
            out.insert(arc, [occs[0], occs[1]]);
        }
        Ok(out)
    }

    /// Checks the arc counts and the planarity of the rotation system, and
    /// returns the components (crossing components in order of first
    /// appearance, then the free loops).
    pub fn validate(&self) -> Result<Vec<Component>> {
        let occ = self.occurrences()?;
        self.check_planar(&occ)?;
        Ok(self.trace_components(&occ))
    }

    fn check_planar(&self, occ: &BTreeMap<ArcId, [Occ; 2]>) -> Result<()> {
        let n = self.crossings.len();
        let other_end = |o: Occ| -> Occ {
            let [x, y] = occ[&self.crossings[o.crossing].arcs[o.slot]];
            if x == o {
                y
            } else {
                x
            }
        };
        // connected pieces of the 4-valent graph
        let mut piece: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            let mut y = x;
            while p[y] != r {
                let next = p[y];
                p[y] = r;
                y = next;
            }
            r
        }
        for [a, b] in occ.values() {
            let (ra, rb) = (find(&mut piece, a.crossing), find(&mut piece, b.crossing));
            piece[ra] = rb;
        }
        let mut vertices: BTreeMap<usize, usize> = BTreeMap::new();
        for c in 0..n {
            *vertices.entry(find(&mut piece, c)).or_default() += 1;
        }
        // faces: orbits of "arrive at a slot, turn counterclockwise, follow the arc"
        let mut faces: BTreeMap<usize, usize> = BTreeMap::new();
        let mut visited = vec![[false; 4]; n];
        for c in 0..n {
            for s in 0..4 {
                if visited[c][s] {
                    continue;
                }
                let mut cur = Occ { crossing: c, slot: s };
                while !visited[cur.crossing][cur.slot] {
                    visited[cur.crossing][cur.slot] = true;
                    cur = other_end(Occ {
                        crossing: cur.crossing,
                        slot: ccw_next(cur.slot),
                    });
                }
                *faces.entry(find(&mut piece, c)).or_default() += 1;
            }
        }
        for (root, v) in vertices {
            let f = faces.get(&root).copied().unwrap_or(0);
            // V - E + F with E = 2V
            if f as i64 - v as i64 != 2 {
                let arcs: BTreeSet<ArcId> = (0..n)
                    .filter(|&c| find(&mut piece, c) == root)
                    .flat_map(|c| self.crossings[c].arcs)
                    .collect();
                return Err(Error::NotPlanar {
                    arcs: arcs.into_iter().collect(),
                });
            }
        }
        Ok(())
    }

    fn trace_components(&self, occ: &BTreeMap<ArcId, [Occ; 2]>) -> Vec<Component> {
        let mut done: BTreeSet<ArcId> = BTreeSet::new();
        let mut comps = Vec::new();
        for (i, c) in self.crossings.iter().enumerate() {
            for (slot, &arc) in c.arcs.iter().enumerate() {
                if done.contains(&arc) {
                    continue;
                }
                let start = Occ { crossing: i, slot };
                comps.push(self.trace_from(occ, arc, start, &mut done));
            }
        }
        comps.extend((0..self.free_loops).map(|_| Component::free_loop()));
        comps
    }

    /// Walks the component containing `arc`, leaving through `from`.
    pub(crate) fn trace_from(
        &self,
        occ: &BTreeMap<ArcId, [Occ; 2]>,
        arc: ArcId,
        from: Occ,
        done: &mut BTreeSet<ArcId>,
    ) -> Component {
        let mut strands = Vec::new();
        let (mut arc, mut from) = (arc, from);
        loop {
            let [x, y] = occ[&arc];
            let to = if x == from { y } else { x };
            strands.push(Strand { arc, from, to });
            done.insert(arc);
            let next_from = Occ {
                crossing: to.crossing,
                slot: opposite(to.slot),
            };
            let next_arc = self.crossings[next_from.crossing].arcs[next_from.slot];
            if next_arc == strands[0].arc && next_from == strands[0].from {
                break;
            }
            arc = next_arc;
            from = next_from;
        }
        Component { strands }
    }
}

/// Validate a diagram: every arc label used exactly twice and a planar
/// rotation system. Returns the components.
pub fn validate(diagram: &PlanarDiagram) -> Result<Vec<Component>> {
    diagram.validate()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_and_single_loop() {
        assert!(validate(&PlanarDiagram::empty()).unwrap().is_empty());
        let comps = validate(&PlanarDiagram::new(vec![], 1)).unwrap();
        assert_eq!(comps.len(), 1);
        assert!(comps[0].is_free_loop());
    }

    #[test]
    fn arc_used_three_times() {
        let d = PlanarDiagram::new(
            vec![
                Crossing::new(1, 2, 1, 3, Over::NwSe),
                Crossing::new(1, 2, 4, 3, Over::NwSe),
            ],
            0,
        );
        let err = validate(&d).unwrap_err();
        assert_eq!(err.code(), "E_ARC_COUNT");
        assert_eq!(err, Error::ArcCount { arc: 1, count: 3 });
    }

    #[test]
    fn kink_is_planar_but_twisted_pairing_is_not() {
        // adjacent corners joined: a kinked unknot
        let kink = PlanarDiagram::new(vec![Crossing::new(2, 1, 2, 1, Over::NwSe)], 0);
        let comps = validate(&kink).unwrap();
        assert_eq!(comps.len(), 1);
        assert_eq!(comps[0].strands.len(), 2);
        // opposite corners joined by the same arc cannot be drawn in the plane
        let bad = PlanarDiagram::new(vec![Crossing::new(1, 2, 2, 1, Over::NwSe)], 0);
        assert_eq!(validate(&bad).unwrap_err().code(), "E_NOT_PLANAR");
    }

    #[test]
    fn smoothings_partition_slots() {
        for over in [Over::NwSe, Over::NeSw] {
            let c = Crossing::new(1, 2, 3, 4, over);
            let mut slots: Vec<usize> = c
                .a_smoothing()
                .iter()
                .chain(c.b_smoothing().iter())
                .flat_map(|&(a, b)| [a, b])
                .collect();
            slots.sort();
            assert_eq!(slots, vec![0, 0, 1, 1, 2, 2, 3, 3]);
            assert_ne!(c.a_smoothing(), c.b_smoothing());
        }
    }
}
