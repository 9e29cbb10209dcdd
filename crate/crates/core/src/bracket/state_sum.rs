use std::collections::{BTreeMap, HashMap};

use crate::algebra::{loop_value, LaurentPoly, Q};
use crate::diagrams::PlanarDiagram;
use crate::error::{Error, Result};

/// Crossing limit for the exhaustive state sum.
pub const STATE_SUM_CAP: usize = 20;

/// The Kauffman bracket by summing over all `2^n` smoothings:
/// `sum A^(#A - #B) d^(#loops)`, with the empty diagram worth 1.
pub fn bracket_state_sum(diagram: &PlanarDiagram) -> Result<LaurentPoly> {
    let n = diagram.crossing_count();
    if n > STATE_SUM_CAP {
        return Err(Error::TooLarge {
            crossings: n,
            cap: STATE_SUM_CAP,
        });
    }
    let occ = diagram.occurrences()?;
    let index: HashMap<u32, usize> = occ.keys().enumerate().map(|(i, &a)| (a, i)).collect();
    let arcs: Vec<[usize; 4]> = diagram
        .crossings
        .iter()
        .map(|c| c.arcs.map(|a| index[&a]))
        .collect();
    let smoothings: Vec<[[(usize, usize); 2]; 2]> = diagram
        .crossings
        .iter()
        .map(|c| [c.a_smoothing(), c.b_smoothing()])
        .collect();

    // (A-exponent, loop count) -> number of states
    let mut histogram: BTreeMap<(i64, usize), i64> = BTreeMap::new();
    let mut parent = vec![0usize; index.len()];
    for state in 0u64..(1u64 << n) {
        parent.iter_mut().enumerate().for_each(|(i, p)| *p = i);
        let mut exp = 0i64;
        for c in 0..n {
            let b = (state >> c) & 1;
            exp += if b == 0 { 1 } else { -1 };
            for &(s, t) in &smoothings[c][b as usize] {
                let (x, y) = (find(&mut parent, arcs[c][s]), find(&mut parent, arcs[c][t]));
                if x != y {
                    parent[x] = y;
                }
            }
        }
        let loops = (0..parent.len()).filter(|&i| parent[i] == i).count();
        *histogram.entry((exp, loops + diagram.free_loops)).or_default() += 1;
    }

    let delta = loop_value();
    let mut powers = vec![LaurentPoly::one()];
    let mut sum = LaurentPoly::zero();
    for ((exp, loops), count) in histogram {
        while powers.len() <= loops {
            let next = powers.last().unwrap() * &delta;
            powers.push(next);
        }
        sum = sum + powers[loops].shift(exp).scale(&Q::from_integer(count.into()));
    }
    Ok(sum)
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
