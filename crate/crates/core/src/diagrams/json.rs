use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::link::{ColoredLink, FramedLink, SurgeryPresentation};
use super::pd::{ArcId, Crossing, Over, PlanarDiagram};
use crate::error::{Error, Result};

/// The JSON link format.
///
/// ```json
/// {"crossings":[[nw,ne,sw,se,over],...],"free_loops":0,"components":[[arc,...],...],"colors":{"0":2}}
/// ```
///
/// `over` is 0 when the NW–SE strand is on top and 1 for NE–SW. Each
/// component lists its arcs in traversal order; an empty list is a free
/// loop. Components missing from `colors` are colored 1. The optional
/// `surgery` key lists the components to be surgered; the others form the
/// embedded colored link.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinkFile {
    pub crossings: Vec<[u32; 5]>,
    #[serde(default)]
    pub free_loops: usize,
    #[serde(default)]
    pub components: Vec<Vec<ArcId>>,
    #[serde(default)]
    pub colors: BTreeMap<usize, u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub surgery: Option<Vec<usize>>,
}

impl LinkFile {
    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    /// Compact JSON with a fixed key order.
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("link files always serialize")
    }

    pub fn from_link(link: &FramedLink) -> Self {
        let crossings = link
            .diagram()
            .crossings
            .iter()
            .map(|c| {
                let [a, b, x, y] = c.arcs;
                [a, b, x, y, c.over.code()]
            })
            .collect();
        Self {
            crossings,
            free_loops: link.diagram().free_loops,
            components: link.component_groups(),
            colors: BTreeMap::new(),
            surgery: None,
        }
    }

    pub fn from_colored(link: &ColoredLink) -> Self {
        let mut file = Self::from_link(&link.link);
        file.colors = link.colors.iter().copied().enumerate().collect();
        file
    }

    pub fn from_presentation(pres: &SurgeryPresentation) -> Self {
        let mut file = Self::from_link(&pres.link);
        file.colors = (pres.surgery..pres.link.component_count())
            .zip(pres.extra_colors.iter().copied())
            .collect();
        file.surgery = Some((0..pres.surgery).collect());
        file
    }

    pub fn diagram(&self) -> Result<PlanarDiagram> {
        let crossings = self
            .crossings
            .iter()
            .map(|&[a, b, c, d, o]| {
                let over = Over::from_code(o)
                    .ok_or_else(|| Error::Parse(format!("over must be 0 or 1, got {o}")))?;
                Ok(Crossing::new(a, b, c, d, over))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(PlanarDiagram::new(crossings, self.free_loops))
    }

    /// The framed link; without a `components` key the traced order is used.
    pub fn link(&self) -> Result<FramedLink> {
        let diagram = self.diagram()?;
        if self.components.is_empty() {
            FramedLink::new(diagram)
        } else {
            FramedLink::with_components(diagram, &self.components)
        }
    }

    pub fn colored(&self) -> Result<ColoredLink> {
        let link = self.link()?;
        let n = link.component_count();
        if let Some(&bad) = self.colors.keys().find(|&&k| k >= n) {
            return Err(Error::Components(format!("color given for component {bad} of {n}")));
        }
        let colors = (0..n).map(|i| self.colors.get(&i).copied().unwrap_or(1)).collect();
        ColoredLink::new(link, colors)
    }

    /// The surgery presentation; without a `surgery` key every component is
    /// surgered.
    pub fn presentation(&self, name: &str) -> Result<SurgeryPresentation> {
        let link = self.link()?;
        let n = link.component_count();
        let surgery = match &self.surgery {
            None => return Ok(SurgeryPresentation::surgery_only(name, link)),
            Some(s) => s.clone(),
        };
        let mut seen = vec![false; n];
        for &i in &surgery {
            if i >= n || std::mem::replace(&mut seen[i], true) {
                return Err(Error::Components(format!("bad surgery component {i}")));
            }
        }
        // surgery components first, then the rest in their original order
        let order: Vec<usize> = surgery
            .iter()
            .copied()
            .chain((0..n).filter(|&i| !seen[i]))
            .collect();
        let groups = link.component_groups();
        let reordered: Vec<Vec<ArcId>> = order.iter().map(|&i| groups[i].clone()).collect();
        let free_in_groups = reordered.iter().filter(|g| g.is_empty()).count();
        debug_assert_eq!(free_in_groups, link.diagram().free_loops);
        let relinked = FramedLink::with_components(link.diagram().clone(), &reordered)?;
        let extra = order[surgery.len()..]
            .iter()
            .map(|i| self.colors.get(i).copied().unwrap_or(1))
            .collect();
        SurgeryPresentation::new(name, relinked, surgery.len(), extra)
    }
}
