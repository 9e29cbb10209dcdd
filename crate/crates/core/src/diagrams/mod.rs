//! Framed link diagrams: PD-style planar diagrams, components and framings,
//! linking matrices, blackboard cabling, and the standard fixtures.

mod cable;
mod fixtures;
mod json;
mod link;
mod pd;

pub use cable::{cable, Cable};
pub use fixtures::{borromean_fixture, braid_closure, hopf_fixture, unknot_fixture};
pub use json::LinkFile;
pub use link::{
    attach_meridian, linking_and_signature, self_writhe, signature, ColoredLink, FramedLink,
    SurgeryPresentation,
};
pub use pd::{
    ccw_next, opposite, validate, ArcId, Component, Crossing, Occ, Over, PlanarDiagram, Smoothing,
    Strand, NE, NW, SE, SW,
};
