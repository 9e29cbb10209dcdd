use std::collections::HashMap;

use super::link::FramedLink;
use super::pd::{opposite, slot_vector, ArcId, Crossing, Occ, Over, PlanarDiagram};
use crate::error::{Error, Result};

/// A link with every component replaced by parallel blackboard push-offs,
/// cut open at one site per component so that a Temperley–Lieb diagram can
/// be inserted there.
///
/// Copy `k` of a component is the push-off `k` steps to the left of the
/// traversal direction. At the site, `bottom[k]` leaves the box against the
/// direction of travel and `top[k]` leaves it along it.
#[derive(Clone, Debug)]
pub struct Cable {
    widths: Vec<usize>,
    crossings: Vec<([usize; 4], Over)>,
    parent: Vec<usize>,
    sites: Vec<Site>,
}

#[derive(Clone, Debug, Default)]
struct Site {
    top: Vec<usize>,
    bottom: Vec<usize>,
}

fn find(parent: &mut [usize], x: usize) -> usize {
    let mut r = x;
    while parent[r] != r {
        r = parent[r];
    }
    let mut y = x;
    while parent[y] != r {
        let next = parent[y];
        parent[y] = r;
        y = next;
    }
    r
}

fn union(parent: &mut [usize], a: usize, b: usize) {
    let (ra, rb) = (find(parent, a), find(parent, b));
    if ra != rb {
        parent[ra] = rb;
    }
}

fn fresh(parent: &mut Vec<usize>) -> usize {
    parent.push(parent.len());
    parent.len() - 1
}

/// Cables `link` with the given per-component widths.
pub fn cable(link: &FramedLink, widths: &[usize]) -> Result<Cable> {
    Cable::new(link, widths)
}

impl Cable {
    pub fn new(link: &FramedLink, widths: &[usize]) -> Result<Self> {
        if widths.len() != link.component_count() {
            return Err(Error::Components(format!(
                "{} widths for {} components",
                widths.len(),
                link.component_count()
            )));
        }
        let mut parent: Vec<usize> = Vec::new();

        // labels of every strand copy; the site strand gets separate labels
        // for its two halves
        let mut into: HashMap<Occ, Vec<usize>> = HashMap::new();
        let mut out_of: HashMap<Occ, Vec<usize>> = HashMap::new();
        let mut sites = Vec::with_capacity(widths.len());
        for (comp, &w) in link.components().iter().zip(widths) {
            let mut site = Site::default();
            if w > 0 && comp.is_free_loop() {
                site.top = (0..w).map(|_| fresh(&mut parent)).collect();
                site.bottom = site.top.clone();
            }
            for (j, s) in comp.strands.iter().enumerate() {
                if w == 0 {
                    break;
                }
                let head: Vec<usize> = (0..w).map(|_| fresh(&mut parent)).collect();
                let tail = if j == 0 {
                    let b: Vec<usize> = (0..w).map(|_| fresh(&mut parent)).collect();
                    site.top = head.clone();
                    site.bottom = b.clone();
                    b
                } else {
                    head.clone()
                };
                into.insert(s.to, head);
                out_of.insert(s.from, tail);
            }
            sites.push(site);
        }

        let mut crossings = Vec::new();
        for (c, (pass, crossing)) in link.passes().iter().zip(&link.diagram().crossings).enumerate() {
            let [px, py] = pass;
            let (wx, wy) = (widths[px.component], widths[py.component]);
            if wx == 0 && wy == 0 {
                continue;
            }
            let ends = |p: &super::link::Pass| {
                let e = Occ { crossing: c, slot: p.enter };
                let o = Occ {
                    crossing: c,
                    slot: opposite(p.enter),
                };
                (into[&e].clone(), out_of[&o].clone())
            };
            if wy == 0 {
                let (i, o) = ends(px);
                i.iter().zip(&o).for_each(|(&a, &b)| union(&mut parent, a, b));
                continue;
            }
            if wx == 0 {
                let (i, o) = ends(py);
                i.iter().zip(&o).for_each(|(&a, &b)| union(&mut parent, a, b));
                continue;
            }
            let (ix, ox) = ends(px);
            let (iy, oy) = ends(py);
            let dir = |enter: usize| {
                let (ax, ay) = slot_vector(enter);
                let (bx, by) = slot_vector(opposite(enter));
                (bx - ax, by - ay)
            };
            let (dx, dy) = (dir(px.enter), dir(py.enter));
            let left = |v: (i64, i64)| (-v.1, v.0);
            let dot = |u: (i64, i64), v: (i64, i64)| u.0 * v.0 + u.1 * v.1;
            let x_ascends = dot(left(dy), dx) > 0;
            let y_ascends = dot(left(dx), dy) > 0;
            let segments = |parent: &mut Vec<usize>, i: &[usize], o: &[usize], n: usize| -> Vec<Vec<usize>> {
                i.iter()
                    .zip(o)
                    .map(|(&a, &b)| {
                        let mut seg = vec![a];
                        seg.extend((1..n).map(|_| fresh(parent)));
                        seg.push(b);
                        seg
                    })
                    .collect()
            };
            let seg_x = segments(&mut parent, &ix, &ox, wy);
            let seg_y = segments(&mut parent, &iy, &oy, wx);
            for k in 0..wx {
                for m in 0..wy {
                    let rx = if x_ascends { m } else { wy - 1 - m };
                    let ry = if y_ascends { k } else { wx - 1 - k };
                    let mut arcs = [0; 4];
                    arcs[px.enter] = seg_x[k][rx];
                    arcs[opposite(px.enter)] = seg_x[k][rx + 1];
                    arcs[py.enter] = seg_y[m][ry];
                    arcs[opposite(py.enter)] = seg_y[m][ry + 1];
                    crossings.push((arcs, crossing.over));
                }
            }
        }
        Ok(Self {
            widths: widths.to_vec(),
            crossings,
            parent,
            sites,
        })
    }

    pub fn widths(&self) -> &[usize] {
        &self.widths
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    /// Closes every site with a Temperley–Lieb diagram given as a pairing of
    /// its `2w` boundary points (top `0..w` then bottom `w..2w`, both read
    /// left to right); `None` means the identity.
    pub fn insert(&self, boxes: &[Option<&[usize]>]) -> Result<PlanarDiagram> {
        if boxes.len() != self.sites.len() {
            return Err(Error::Arity {
                expected: self.sites.len(),
                found: boxes.len(),
            });
        }
        let mut parent = self.parent.clone();
        for ((site, &w), b) in self.sites.iter().zip(&self.widths).zip(boxes) {
            // boundary point j (from the left) is copy w - 1 - j
            let point = |p: usize| {
                if p < w {
                    site.top[w - 1 - p]
                } else {
                    site.bottom[w - 1 - (p - w)]
                }
            };
            match b {
                None => (0..w).for_each(|j| union(&mut parent, point(j), point(w + j))),
                Some(pairing) => {
                    if pairing.len() != 2 * w {
                        return Err(Error::Arity {
                            expected: 2 * w,
                            found: pairing.len(),
                        });
                    }
                    for (p, &q) in pairing.iter().enumerate() {
                        union(&mut parent, point(p), point(q));
                    }
                }
            }
        }
        let mut occurrences = vec![0usize; parent.len()];
        let mut labels: HashMap<usize, ArcId> = HashMap::new();
        let mut crossings = Vec::with_capacity(self.crossings.len());
        for (arcs, over) in &self.crossings {
            let mut out = [0; 4];
            for (slot, &raw) in arcs.iter().enumerate() {
                let r = find(&mut parent, raw);
                occurrences[r] += 1;
                let next = labels.len() as ArcId + 1;
                out[slot] = *labels.entry(r).or_insert(next);
            }
            crossings.push(Crossing {
                arcs: out,
                over: *over,
            });
        }
        let mut free_loops = 0;
        for x in 0..parent.len() {
            if find(&mut parent, x) != x {
                continue;
            }
            match occurrences[x] {
                0 => free_loops += 1,
                2 => {}
                n => {
                    return Err(Error::ArcCount {
                        arc: labels.get(&x).copied().unwrap_or(0),
                        count: n,
                    })
                }
            }
        }
        Ok(PlanarDiagram::new(crossings, free_loops))
    }

    /// The cable with identity boxes: plain parallel push-offs.
    pub fn parallel(&self) -> PlanarDiagram {
        let boxes = vec![None; self.sites.len()];
        self.insert(&boxes).expect("identity boxes close the cable")
    }
}
