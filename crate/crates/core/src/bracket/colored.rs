use rayon::prelude::*;

use super::jw::jones_wenzl;
use super::sweep::bracket_tangle_sweep;
use crate::algebra::{CycloNum, EvalPoint, Evaluate, LaurentPoly, RatFunc};
use crate::diagrams::{cable, Cable, ColoredLink};
use crate::error::{Error, Result};

/// Where a colored bracket is computed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BracketMode {
    /// As an element of `Q(A)`.
    Generic,
    /// At a root of unity, exactly.
    At(EvalPoint),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BracketValue {
    Generic(RatFunc),
    At(CycloNum),
}

pub fn colored_bracket(link: &ColoredLink, mode: BracketMode) -> Result<BracketValue> {
    match mode {
        BracketMode::Generic => colored_bracket_generic(link).map(BracketValue::Generic),
        BracketMode::At(p) => colored_bracket_at(link, p).map(BracketValue::At),
    }
}

/// One plain diagram of the multilinear expansion: a choice of projector
/// term per component.
struct Expansion {
    cable: Cable,
    /// Per component: the pairings of its projector terms (`None` for the
    /// identity when the color is at most 1).
    boxes: Vec<Vec<Option<Vec<usize>>>>,
    coefficients: Vec<Vec<RatFunc>>,
}

impl Expansion {
    fn new(link: &ColoredLink) -> Result<Self> {
        let widths: Vec<usize> = link.colors.iter().map(|&c| c as usize).collect();
        let cable = cable(&link.link, &widths)?;
        let mut boxes = Vec::new();
        let mut coefficients = Vec::new();
        for &w in &widths {
            if w <= 1 {
                boxes.push(vec![None]);
                coefficients.push(vec![RatFunc::one()]);
                continue;
            }
            let jw = jones_wenzl(w)?;
            let (b, c) = jw
                .terms()
                .iter()
                .map(|(d, c)| (Some(d.pairing().to_vec()), c.clone()))
                .unzip();
            boxes.push(b);
            coefficients.push(c);
        }
        Ok(Self {
            cable,
            boxes,
            coefficients,
        })
    }

    fn count(&self) -> usize {
        self.boxes.iter().map(|b| b.len()).product()
    }

    /// Term indices of the `n`-th combination (mixed radix).
    fn choice(&self, mut n: usize) -> Vec<usize> {
        self.boxes
            .iter()
            .map(|b| {
                let i = n % b.len();
                n /= b.len();
                i
            })
            .collect()
    }

    fn bracket(&self, choice: &[usize]) -> Result<LaurentPoly> {
        let boxes: Vec<Option<&[usize]>> = choice
            .iter()
            .zip(&self.boxes)
            .map(|(&i, b)| b[i].as_deref())
            .collect();
        bracket_tangle_sweep(&self.cable.insert(&boxes)?)
    }
}

/// The colored bracket in `Q(A)`: every component cabled by its color with
/// a Jones–Wenzl projector inserted.
pub fn colored_bracket_generic(link: &ColoredLink) -> Result<RatFunc> {
    let ex = Expansion::new(link)?;
    let terms = (0..ex.count())
        .into_par_iter()
        .map(|n| {
            let choice = ex.choice(n);
            let b = ex.bracket(&choice)?;
            let coeff = choice
                .iter()
                .zip(&ex.coefficients)
                .fold(RatFunc::one(), |acc, (&i, c)| &acc * &c[i]);
            Ok(coeff.scale_poly(&b))
        })
        .collect::<Result<Vec<RatFunc>>>()?;
    Ok(terms.iter().fold(RatFunc::zero(), |acc, t| &acc + t))
}

/// The colored bracket at a root of unity. Projector coefficients are
/// evaluated before summing, so colors must stay below the first vanishing
/// quantum integer: at most `2d - 2`.
pub fn colored_bracket_at(link: &ColoredLink, p: EvalPoint) -> Result<CycloNum> {
    let max = 2 * p.d - 2;
    if let Some(&c) = link.colors.iter().find(|&&c| c > max) {
        return Err(Error::ColorRange { color: c, max });
    }
    let ex = Expansion::new(link)?;
    let coefficients = ex
        .coefficients
        .iter()
        .map(|cs| cs.iter().map(|c| c.evaluate_at(p)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    let terms = (0..ex.count())
        .into_par_iter()
        .map(|n| {
            let choice = ex.choice(n);
            let b = ex.bracket(&choice)?.evaluate_at(p)?;
            Ok(choice
                .iter()
                .zip(&coefficients)
                .fold(b, |acc, (&i, c)| &acc * &c[i]))
        })
        .collect::<Result<Vec<CycloNum>>>()?;
    Ok(terms.iter().fold(CycloNum::zero(p.d), |acc, t| &acc + t))
}
