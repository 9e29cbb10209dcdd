use super::link::FramedLink;
use super::pd::{ArcId, Crossing, Over, PlanarDiagram};
use crate::error::{Error, Result};

/// The closure of a braid on `strands` strands. Generator `i` (1-based)
/// crosses positions `i - 1` and `i` positively, `-i` negatively; strands
/// run upward.
pub fn braid_closure(strands: usize, word: &[i32]) -> Result<PlanarDiagram> {
    if strands == 0 {
        return Err(Error::Precondition("a braid needs at least one strand".into()));
    }
    let start: Vec<ArcId> = (1..=strands as ArcId).collect();
    let mut current = start.clone();
    let mut next = strands as ArcId + 1;
    let mut crossings = Vec::with_capacity(word.len());
    for &g in word {
        let i = g.unsigned_abs() as usize;
        if g == 0 || i >= strands {
            return Err(Error::Precondition(format!(
                "generator {g} on {strands} strands"
            )));
        }
        let (left, right) = (current[i - 1], current[i]);
        let (new_left, new_right) = (next, next + 1);
        next += 2;
        let over = if g > 0 { Over::NeSw } else { Over::NwSe };
        crossings.push(Crossing::new(new_left, new_right, left, right, over));
        current[i - 1] = new_left;
        current[i] = new_right;
    }
    // close up: the top label of each position becomes its bottom label
    let mut free_loops = 0;
    for (p, &top) in current.iter().enumerate() {
        if top == start[p] {
            free_loops += 1;
            continue;
        }
        for c in &mut crossings {
            for a in &mut c.arcs {
                if *a == top {
                    *a = start[p];
                }
            }
        }
    }
    Ok(PlanarDiagram::new(crossings, free_loops))
}

/// The 0-framed Borromean rings as the closure of `(σ1 σ2⁻¹)³`.
pub fn borromean_fixture() -> FramedLink {
    FramedLink::new(braid_closure(3, &[1, -2, 1, -2, 1, -2]).unwrap()).unwrap()
}

/// The 0-framed Hopf link as the closure of `σ1²`.
pub fn hopf_fixture() -> FramedLink {
    FramedLink::new(braid_closure(2, &[1, 1]).unwrap()).unwrap()
}

/// An unknot with `kinks` signed kinks (framing `kinks`).
pub fn unknot_fixture(kinks: i32) -> FramedLink {
    let n = kinks.unsigned_abs() as usize;
    let s = kinks.signum();
    let word: Vec<i32> = (1..=n as i32).map(|i| s * i).collect();
    FramedLink::new(braid_closure(n + 1, &word).unwrap()).unwrap()
}
