use std::collections::{BTreeMap, BTreeSet};

use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::pd::{
    diagonal, opposite, slot_vector, ArcId, Component, Crossing, Over, PlanarDiagram,
};
use crate::error::{Error, Result};

/// A framed unoriented link given by a diagram with the blackboard framing.
///
/// Components are stored in a fixed order (which is what colors and
/// surgery designations refer to) with an arbitrary orientation; free loops
/// may appear anywhere in the order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FramedLink {
    diagram: PlanarDiagram,
    components: Vec<Component>,
}

/// Which component passes along each diagonal of a crossing, and the slot
/// where it enters.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct Pass {
    pub component: usize,
    pub enter: usize,
}

impl FramedLink {
    /// Validates the diagram and takes the traced component order.
    pub fn new(diagram: PlanarDiagram) -> Result<Self> {
        let components = diagram.validate()?;
        Ok(Self {
            diagram,
            components,
        })
    }

    /// Validates the diagram and orders the components as `groups`. Each
    /// group lists the arcs of one component, starting with the arc used as
    /// its base point; an empty group stands for a free loop. Free loops
    /// not mentioned are appended at the end.
    pub fn with_components(diagram: PlanarDiagram, groups: &[Vec<ArcId>]) -> Result<Self> {
        let occ = diagram.occurrences()?;
        let traced = diagram.validate()?;
        let crossing_comps = traced.iter().filter(|c| !c.is_free_loop()).count();
        let listed = groups.iter().filter(|g| !g.is_empty()).count();
        let free_listed = groups.len() - listed;
        if listed != crossing_comps {
            return Err(Error::Components(format!(
                "{listed} components listed, diagram has {crossing_comps}"
            )));
        }
        if free_listed > diagram.free_loops {
            return Err(Error::Components(format!(
                "{free_listed} free loops listed, diagram has {}",
                diagram.free_loops
            )));
        }
        let mut used = BTreeSet::new();
        let mut components = Vec::with_capacity(groups.len());
        for g in groups {
            if g.is_empty() {
                components.push(Component::free_loop());
                continue;
            }
            let first = g[0];
            let Some(tr) = traced.iter().find(|c| c.arcs().contains(&first)) else {
                return Err(Error::Components(format!("arc {first} is not in the diagram")));
            };
            let want: BTreeSet<ArcId> = tr.arcs().into_iter().collect();
            let got: BTreeSet<ArcId> = g.iter().copied().collect();
            if want != got || got.len() != g.len() || !used.is_disjoint(&got) {
                return Err(Error::Components(format!(
                    "group starting at arc {first} does not match a component"
                )));
            }
            used.extend(got);
            // orient the component so that the listed order is followed
            let [x, y] = occ[&first];
            let mut done = BTreeSet::new();
            let mut comp = diagram.trace_from(&occ, first, x, &mut done);
            if g.len() > 1 && comp.strands[1].arc != g[1] {
                comp = diagram.trace_from(&occ, first, y, &mut done);
            }
            components.push(comp);
        }
        components.extend((free_listed..diagram.free_loops).map(|_| Component::free_loop()));
        Ok(Self {
            diagram,
            components,
        })
    }

    pub fn diagram(&self) -> &PlanarDiagram {
        &self.diagram
    }

    pub fn components(&self) -> &[Component] {
        &self.components
    }

    pub fn component_count(&self) -> usize {
        self.components.len()
    }

    /// Arc groups in component order, the inverse of [`FramedLink::with_components`].
    pub fn component_groups(&self) -> Vec<Vec<ArcId>> {
        self.components.iter().map(|c| c.arcs()).collect()
    }

    /// For every crossing, the passes along diagonal 0 (NW–SE) and 1 (NE–SW).
    pub(crate) fn passes(&self) -> Vec<[Pass; 2]> {
        let blank = Pass {
            component: usize::MAX,
            enter: usize::MAX,
        };
        let mut out = vec![[blank; 2]; self.diagram.crossings.len()];
        for (ci, comp) in self.components.iter().enumerate() {
            for s in &comp.strands {
                out[s.to.crossing][diagonal(s.to.slot)] = Pass {
                    component: ci,
                    enter: s.to.slot,
                };
            }
        }
        out
    }

    /// Sign of each crossing under the stored orientation.
    pub fn crossing_signs(&self) -> Vec<i64> {
        self.passes()
            .iter()
            .zip(&self.diagram.crossings)
            .map(|(p, c)| {
                let dir = |pass: &Pass| {
                    let (ax, ay) = slot_vector(pass.enter);
                    let (bx, by) = slot_vector(opposite(pass.enter));
                    (bx - ax, by - ay)
                };
                let (over, under) = match c.over {
                    Over::NwSe => (dir(&p[0]), dir(&p[1])),
                    Over::NeSw => (dir(&p[1]), dir(&p[0])),
                };
                (over.0 * under.1 - over.1 * under.0).signum()
            })
            .collect()
    }

    /// Signed self-crossing count of one component; its blackboard framing.
    pub fn self_writhe(&self, component: usize) -> i64 {
        self.passes()
            .iter()
            .zip(self.crossing_signs())
            .filter(|(p, _)| p[0].component == component && p[1].component == component)
            .map(|(_, s)| s)
            .sum()
    }

    /// Linking matrix of the listed components: framings on the diagonal,
    /// pairwise linking numbers off it (under the stored orientation).
    pub fn linking_matrix(&self, comps: &[usize]) -> Vec<Vec<i64>> {
        let index: BTreeMap<usize, usize> = comps.iter().enumerate().map(|(i, &c)| (c, i)).collect();
        let n = comps.len();
        let mut twice = vec![vec![0i64; n]; n];
        for (p, s) in self.passes().iter().zip(self.crossing_signs()) {
            let (Some(&i), Some(&j)) = (index.get(&p[0].component), index.get(&p[1].component)) else {
                continue;
            };
            if i == j {
                twice[i][i] += 2 * s;
            } else {
                twice[i][j] += s;
                twice[j][i] += s;
            }
        }
        twice
            .into_iter()
            .map(|row| row.into_iter().map(|x| x / 2).collect())
            .collect()
    }

    /// Adds a small 0-framed circle around the base arc of `component` and
    /// returns the new link together with the index of the added component
    /// (always last).
    pub fn with_meridian(&self, component: usize) -> Result<(FramedLink, usize)> {
        let comp = self
            .components
            .get(component)
            .ok_or_else(|| Error::Precondition(format!("no component {component}")))?;
        let mut crossings = self.diagram.crossings.clone();
        let base = self.diagram.max_arc().map_or(1, |m| m + 1);
        let (e_mid, e_tail, m_left, m_right) = (base, base + 1, base + 2, base + 3);
        let mut groups = self.component_groups();
        let mut free_loops = self.diagram.free_loops;
        let e_head = if let Some(site) = comp.strands.first() {
            let to = site.to;
            crossings[to.crossing].arcs[to.slot] = e_tail;
            groups[component] = std::iter::once(site.arc)
                .chain([e_mid, e_tail])
                .chain(comp.strands[1..].iter().map(|s| s.arc))
                .collect();
            site.arc
        } else {
            // a free loop becomes a two-arc circle through the new crossings
            free_loops -= 1;
            groups[component] = vec![e_tail, e_mid];
            e_tail
        };
        // the strand runs SW -> NE through both crossings; the meridian goes
        // over at the first and under at the second
        crossings.push(Crossing::new(m_left, e_mid, e_head, m_right, Over::NwSe));
        crossings.push(Crossing::new(m_left, e_tail, e_mid, m_right, Over::NeSw));
        groups.push(vec![m_left, m_right]);
        let link = FramedLink::with_components(PlanarDiagram::new(crossings, free_loops), &groups)?;
        let idx = link.component_count() - 1;
        Ok((link, idx))
    }
}

/// Linking matrix of all components and its signature.
pub fn linking_and_signature(link: &FramedLink) -> (Vec<Vec<i64>>, i64) {
    let all: Vec<usize> = (0..link.component_count()).collect();
    let m = link.linking_matrix(&all);
    let s = signature(&m);
    (m, s)
}

pub fn self_writhe(link: &FramedLink, component: usize) -> i64 {
    link.self_writhe(component)
}

/// Signature of a symmetric integer matrix, from the characteristic
/// polynomial: its roots are real, so Descartes' rule counts them exactly.
pub fn signature(m: &[Vec<i64>]) -> i64 {
    let cp = characteristic_polynomial(m);
    let positive = sign_changes(&cp);
    let mirrored: Vec<BigRational> = cp
        .iter()
        .enumerate()
        .map(|(k, c)| if k % 2 == 1 { -c.clone() } else { c.clone() })
        .collect();
    let negative = sign_changes(&mirrored);
    positive as i64 - negative as i64
}

fn sign_changes(c: &[BigRational]) -> usize {
    let signs: Vec<bool> = c.iter().filter(|x| !x.is_zero()).map(|x| x.is_positive()).collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Coefficients of `det(xI - M)`, constant term first (Faddeev–LeVerrier).
fn characteristic_polynomial(m: &[Vec<i64>]) -> Vec<BigRational> {
    let n = m.len();
    let q = |x: i64| BigRational::from_integer(x.into());
    let mat: Vec<Vec<BigRational>> = m.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect();
    let mut coeffs = vec![BigRational::zero(); n + 1];
    coeffs[n] = q(1);
    let mut mk = vec![vec![BigRational::zero(); n]; n];
    for k in 1..=n {
        // M_k = A * M_{k-1} + c_{n-k+1} I
        let mut next = vec![vec![BigRational::zero(); n]; n];
        for i in 0..n {
            for j in 0..n {
                let mut acc = BigRational::zero();
                for l in 0..n {
                    acc += &mat[i][l] * &mk[l][j];
                }
                next[i][j] = acc;
            }
            next[i][i] += &coeffs[n - k + 1];
        }
        let mut trace = BigRational::zero();
        for i in 0..n {
            for l in 0..n {
                trace += &mat[i][l] * &next[l][i];
            }
        }
        coeffs[n - k] = -trace / q(k as i64);
        mk = next;
    }
    coeffs
}

/// A link with a color on every component.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColoredLink {
    pub link: FramedLink,
    pub colors: Vec<u32>,
}

impl ColoredLink {
    pub fn new(link: FramedLink, colors: Vec<u32>) -> Result<Self> {
        if colors.len() != link.component_count() {
            return Err(Error::Components(format!(
                "{} colors for {} components",
                colors.len(),
                link.component_count()
            )));
        }
        Ok(Self { link, colors })
    }

    /// Every component colored 1.
    pub fn plain(link: FramedLink) -> Self {
        let n = link.component_count();
        Self {
            link,
            colors: vec![1; n],
        }
    }
}

/// A framed surgery link together with a colored link living in the same
/// diagram. The first `surgery` components are surgered; the remaining ones
/// carry `extra_colors`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurgeryPresentation {
    pub name: String,
    pub link: FramedLink,
    pub surgery: usize,
    pub extra_colors: Vec<u32>,
}

impl SurgeryPresentation {
    pub fn new(name: impl Into<String>, link: FramedLink, surgery: usize, extra_colors: Vec<u32>) -> Result<Self> {
        if surgery + extra_colors.len() != link.component_count() {
            return Err(Error::Components(format!(
                "{} surgery + {} extra components, link has {}",
                surgery,
                extra_colors.len(),
                link.component_count()
            )));
        }
        Ok(Self {
            name: name.into(),
            link,
            surgery,
            extra_colors,
        })
    }

    /// Pure surgery, no embedded link.
    pub fn surgery_only(name: impl Into<String>, link: FramedLink) -> Self {
        let n = link.component_count();
        Self {
            name: name.into(),
            link,
            surgery: n,
            extra_colors: vec![],
        }
    }

    pub fn surgery_components(&self) -> Vec<usize> {
        (0..self.surgery).collect()
    }

    pub fn surgery_linking_matrix(&self) -> Vec<Vec<i64>> {
        self.link.linking_matrix(&self.surgery_components())
    }

    pub fn signature(&self) -> i64 {
        signature(&self.surgery_linking_matrix())
    }

    /// The colored link obtained by coloring the surgery components.
    pub fn colored(&self, surgery_colors: &[u32]) -> ColoredLink {
        assert_eq!(surgery_colors.len(), self.surgery);
        let colors = surgery_colors.iter().chain(&self.extra_colors).copied().collect();
        ColoredLink {
            link: self.link.clone(),
            colors,
        }
    }
}

/// Treats every component of `link` as surgery and adds a meridian of
/// `component` colored `color` as the embedded link.
pub fn attach_meridian(link: &FramedLink, component: usize, color: u32) -> Result<SurgeryPresentation> {
    let (with, _) = link.with_meridian(component)?;
    SurgeryPresentation::new(
        format!("meridian of component {component} colored {color}"),
        with,
        link.component_count(),
        vec![color],
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn signature_of_small_matrices() {
        assert_eq!(signature(&[vec![1]]), 1);
        assert_eq!(signature(&[vec![-3]]), -1);
        assert_eq!(signature(&[vec![0, 1], vec![1, 0]]), 0);
        assert_eq!(signature(&vec![vec![0; 3]; 3]), 0);
        assert_eq!(signature(&[vec![2, 1], vec![1, 2]]), 2);
        // eigenvalues 0, 0, 3
        assert_eq!(signature(&vec![vec![1; 3]; 3]), 1);
        assert_eq!(signature(&[]), 0);
    }

    #[test]
    fn signature_invariant_under_permutation_and_sign_conjugation() {
        let m = vec![vec![1, 2, 0], vec![2, -1, 1], vec![0, 1, 0]];
        let s = signature(&m);
        let perm = [2, 0, 1];
        let signs = [1, -1, 1];
        let p: Vec<Vec<i64>> = (0..3)
            .map(|i| (0..3).map(|j| signs[i] * signs[j] * m[perm[i]][perm[j]]).collect())
            .collect();
        assert_eq!(signature(&p), s);
    }
}
