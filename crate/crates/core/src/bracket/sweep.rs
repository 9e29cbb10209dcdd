use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::algebra::{LaurentPoly, Q};
use crate::diagrams::{ArcId, PlanarDiagram};
use crate::error::{Error, Result};

/// Default limit on the number of open arcs during a sweep.
pub const DEFAULT_WIDTH_CAP: usize = 24;

/// The Kauffman bracket by sweeping across the diagram one crossing at a
/// time. The state is the matching that the processed part induces on the
/// open arcs, so the cost grows with the sweep width rather than with the
/// number of crossings.
pub fn bracket_tangle_sweep(diagram: &PlanarDiagram) -> Result<LaurentPoly> {
    bracket_tangle_sweep_capped(diagram, DEFAULT_WIDTH_CAP)
}

pub fn bracket_tangle_sweep_capped(diagram: &PlanarDiagram, width_cap: usize) -> Result<LaurentPoly> {
    let order = greedy_order(diagram);
    bracket_sweep_in_order(diagram, &order, width_cap)
}

/// Sweep with an explicit crossing order (a permutation of the crossings).
pub fn bracket_sweep_in_order(diagram: &PlanarDiagram, order: &[usize], width_cap: usize) -> Result<LaurentPoly> {
    diagram.occurrences()?;
    let mut sorted = order.to_vec();
    sorted.sort_unstable();
    if sorted != (0..diagram.crossing_count()).collect::<Vec<_>>() {
        return Err(Error::Precondition("sweep order is not a permutation of the crossings".into()));
    }
    let steps = plan(diagram, order);
    let width = steps.iter().map(|s| s.frontier.len()).max().unwrap_or(0);
    if width > width_cap.min(u8::MAX as usize) {
        return Err(Error::Width { width, cap: width_cap });
    }
    match run::<i128>(&steps) {
        Some(p) => Ok(finish(p, diagram.free_loops)),
        None => Ok(finish(run::<BigInt>(&steps).expect("big integers do not overflow"), diagram.free_loops)),
    }
}

/// Greedy order: repeatedly take the crossing that shrinks the open-arc set
/// the most (ties to the lowest index).
pub fn greedy_order(diagram: &PlanarDiagram) -> Vec<usize> {
    let n = diagram.crossing_count();
    let mut done = vec![false; n];
    let mut open: HashMap<ArcId, usize> = HashMap::new();
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let mut best: Option<(i64, usize)> = None;
        for c in (0..n).filter(|&c| !done[c]) {
            let arcs = diagram.crossings[c].arcs;
            let mut score = 0i64;
            for (s, a) in arcs.iter().enumerate() {
                if open.contains_key(a) {
                    score += 1;
                } else if !arcs[..s].contains(a) && !arcs[s + 1..].contains(a) {
                    score -= 1;
                }
            }
            if best.is_none_or(|(b, _)| score > b) {
                best = Some((score, c));
            }
        }
        let c = best.unwrap().1;
        done[c] = true;
        order.push(c);
        for a in diagram.crossings[c].arcs {
            *open.entry(a).or_default() += 1;
        }
        open.retain(|_, k| *k < 2);
    }
    order
}

#[derive(Clone, Copy, Debug)]
enum SlotKind {
    /// The arc's other end is already processed; it sits at this frontier position.
    Closing(usize),
    /// Both ends of the arc are slots of this crossing.
    Internal(usize),
    /// A fresh arc, open at this new-frontier position.
    New(usize),
}

struct Step {
    /// Open arcs before the crossing, sorted.
    frontier: Vec<ArcId>,
    /// New position of each old position that stays open.
    keep: Vec<Option<usize>>,
    new_len: usize,
    slots: [SlotKind; 4],
    smoothings: [[(usize, usize); 2]; 2],
}

fn plan(diagram: &PlanarDiagram, order: &[usize]) -> Vec<Step> {
    let mut frontier: Vec<ArcId> = Vec::new();
    let mut steps = Vec::with_capacity(order.len() + 1);
    for &c in order {
        let crossing = &diagram.crossings[c];
        let arcs = crossing.arcs;
        let mut next: Vec<ArcId> = frontier
            .iter()
            .copied()
            .filter(|a| !arcs.contains(a))
            .collect();
        for (s, a) in arcs.iter().enumerate() {
            let twice = arcs.iter().enumerate().any(|(t, b)| t != s && b == a);
            if !twice && frontier.binary_search(a).is_err() {
                next.push(*a);
            }
        }
        next.sort_unstable();
        let pos = |v: &[ArcId], a: ArcId| v.binary_search(&a).ok();
        let keep = frontier.iter().map(|&a| pos(&next, a)).collect();
        let slots = std::array::from_fn(|s| {
            let a = arcs[s];
            if let Some(p) = pos(&frontier, a) {
                SlotKind::Closing(p)
            } else if let Some(t) = (0..4).find(|&t| t != s && arcs[t] == a) {
                SlotKind::Internal(t)
            } else {
                SlotKind::New(pos(&next, a).unwrap())
            }
        });
        steps.push(Step {
            frontier: std::mem::replace(&mut frontier, next),
            keep,
            new_len: frontier.len(),
            slots,
            smoothings: [crossing.a_smoothing(), crossing.b_smoothing()],
        });
    }
    steps
}

/// Integer coefficients for the dense polynomials carried by sweep states.
trait Coeff: Clone + Sized {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn checked_add(&self, other: &Self) -> Option<Self>;
    fn checked_mul_small(&self, k: i64) -> Option<Self>;
    fn to_q(&self) -> Q;
}

impl Coeff for i128 {
    fn zero() -> Self {
        0
    }
    fn one() -> Self {
        1
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn checked_add(&self, other: &Self) -> Option<Self> {
        i128::checked_add(*self, *other)
    }
    fn checked_mul_small(&self, k: i64) -> Option<Self> {
        self.checked_mul(k as i128)
    }
    fn to_q(&self) -> Q {
        Q::from_integer((*self).into())
    }
}

impl Coeff for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        BigInt::from(1)
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn checked_add(&self, other: &Self) -> Option<Self> {
        Some(self + other)
    }
    fn checked_mul_small(&self, k: i64) -> Option<Self> {
        Some(self * k)
    }
    fn to_q(&self) -> Q {
        Q::from_integer(self.clone())
    }
}

/// Dense Laurent polynomial `sum c[i] A^(lo + i)`.
#[derive(Clone)]
struct Dense<C> {
    lo: i64,
    c: Vec<C>,
}

impl<C: Coeff> Dense<C> {
    fn one() -> Self {
        Self {
            lo: 0,
            c: vec![C::one()],
        }
    }

    /// `self * A^shift * p` for a small integer polynomial `p` given densely from `A^p_lo`.
    fn mul_small(&self, shift: i64, p_lo: i64, p: &[i64]) -> Option<Self> {
        let mut c = vec![C::zero(); self.c.len() + p.len() - 1];
        for (i, x) in self.c.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, &k) in p.iter().enumerate() {
                if k != 0 {
                    c[i + j] = c[i + j].checked_add(&x.checked_mul_small(k)?)?;
                }
            }
        }
        Some(Self {
            lo: self.lo + shift + p_lo,
            c,
        })
    }

    fn add_assign(&mut self, other: &Self) -> Option<()> {
        let lo = self.lo.min(other.lo);
        let hi = (self.lo + self.c.len() as i64).max(other.lo + other.c.len() as i64);
        if lo < self.lo || hi > self.lo + self.c.len() as i64 {
            let mut c = vec![C::zero(); (hi - lo) as usize];
            let off = (self.lo - lo) as usize;
            for (i, x) in self.c.drain(..).enumerate() {
                c[off + i] = x;
            }
            self.c = c;
            self.lo = lo;
        }
        let off = (other.lo - self.lo) as usize;
        for (i, x) in other.c.iter().enumerate() {
            self.c[off + i] = self.c[off + i].checked_add(x)?;
        }
        Some(())
    }
}

/// `(-A^2 - A^-2)^k` as dense coefficients from `A^(-2k)`.
fn delta_power(k: usize) -> (i64, Vec<i64>) {
    let mut c = vec![1i64];
    for _ in 0..k {
        let mut next = vec![0i64; c.len() + 4];
        for (i, &x) in c.iter().enumerate() {
            next[i] -= x;
            next[i + 4] -= x;
        }
        c = next;
    }
    (-2 * k as i64, c)
}

fn run<C: Coeff>(steps: &[Step]) -> Option<Dense<C>> {
    let mut states: HashMap<Vec<u8>, Dense<C>> = HashMap::new();
    states.insert(Vec::new(), Dense::one());
    let deltas: Vec<(i64, Vec<i64>)> = (0..=4).map(delta_power).collect();
    for step in steps {
        let mut next: HashMap<Vec<u8>, Dense<C>> = HashMap::with_capacity(states.len() * 2);
        for (matching, poly) in &states {
            for (k, smoothing) in step.smoothings.iter().enumerate() {
                let (key, loops) = resolve(step, matching, smoothing);
                let shift = if k == 0 { 1 } else { -1 };
                let (lo, d) = &deltas[loops];
                let term = poly.mul_small(shift, *lo, d)?;
                match next.get_mut(&key) {
                    Some(acc) => acc.add_assign(&term)?,
                    None => {
                        next.insert(key, term);
                    }
                }
            }
        }
        states = next;
    }
    states.remove(&Vec::new())
}

/// New matching and number of closed loops after smoothing one crossing.
fn resolve(step: &Step, matching: &[u8], smoothing: &[(usize, usize); 2]) -> (Vec<u8>, usize) {
    const NONE: usize = usize::MAX;
    let f = step.frontier.len();
    let mut adj = vec![[NONE; 2]; f + 4];
    let link = |a: usize, b: usize, adj: &mut Vec<[usize; 2]>| {
        let slot = |v: &mut [usize; 2], x: usize| {
            if v[0] == NONE {
                v[0] = x;
            } else {
                v[1] = x;
            }
        };
        slot(&mut adj[a], b);
        slot(&mut adj[b], a);
    };
    for (i, &j) in matching.iter().enumerate() {
        if i < j as usize {
            link(i, j as usize, &mut adj);
        }
    }
    for (s, kind) in step.slots.iter().enumerate() {
        match *kind {
            SlotKind::Closing(p) => link(p, f + s, &mut adj),
            SlotKind::Internal(t) if s < t => link(f + s, f + t, &mut adj),
            _ => {}
        }
    }
    for &(s, t) in smoothing {
        link(f + s, f + t, &mut adj);
    }

    // endpoints: frontier arcs that stay open and new slots
    let endpoint = |node: usize| -> Option<usize> {
        if node < f {
            step.keep[node]
        } else {
            match step.slots[node - f] {
                SlotKind::New(p) => Some(p),
                _ => None,
            }
        }
    };
    let mut out = vec![0u8; step.new_len];
    let mut seen = vec![false; f + 4];
    for start in 0..f + 4 {
        let Some(from) = endpoint(start) else { continue };
        if seen[start] {
            continue;
        }
        let (mut prev, mut cur) = (NONE, start);
        seen[cur] = true;
        loop {
            let next = if adj[cur][0] != prev { adj[cur][0] } else { adj[cur][1] };
            prev = cur;
            cur = next;
            seen[cur] = true;
            if let Some(to) = endpoint(cur) {
                out[from] = to as u8;
                out[to] = from as u8;
                break;
            }
        }
    }
    let mut loops = 0;
    for start in 0..f + 4 {
        if seen[start] || adj[start][0] == NONE {
            continue;
        }
        loops += 1;
        let (mut prev, mut cur) = (NONE, start);
        while !seen[cur] {
            seen[cur] = true;
            let next = if adj[cur][0] != prev { adj[cur][0] } else { adj[cur][1] };
            prev = cur;
            cur = next;
        }
    }
    (out, loops)
}

fn finish<C: Coeff>(p: Dense<C>, free_loops: usize) -> LaurentPoly {
    let mut out = LaurentPoly::from_terms(
        p.c.iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .map(|(i, x)| (p.lo + i as i64, x.to_q())),
    );
    if free_loops > 0 {
        out = &out * &crate::algebra::loop_value().pow(free_loops as u32);
    }
    out
}
