use std::collections::BTreeMap;
use std::fmt;

use crate::algebra::{common_denominator, loop_value, LaurentPoly, RatFunc};
use crate::error::{Error, Result};

/// A Temperley–Lieb diagram: a planar perfect matching of `n_top` points on
/// the top edge and `n_bottom` on the bottom edge, plus a count of closed
/// loops. Points are numbered top `0..n_top` then bottom, each row read
/// left to right; `pairing[p]` is the partner of point `p`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TLDiagram {
    n_top: usize,
    n_bottom: usize,
    pairing: Vec<usize>,
    loops: usize,
}

impl TLDiagram {
    pub fn new(n_top: usize, n_bottom: usize, pairing: Vec<usize>, loops: usize) -> Result<Self> {
        let n = n_top + n_bottom;
        if pairing.len() != n {
            return Err(Error::Arity {
                expected: n,
                found: pairing.len(),
            });
        }
        for (p, &q) in pairing.iter().enumerate() {
            if q >= n || q == p || pairing[q] != p {
                return Err(Error::Precondition(format!("point {p} is not properly paired")));
            }
        }
        let d = Self {
            n_top,
            n_bottom,
            pairing,
            loops,
        };
        if !d.is_planar() {
            return Err(Error::Precondition("pairing is not planar".into()));
        }
        Ok(d)
    }

    pub fn identity(n: usize) -> Self {
        let pairing = (0..n).map(|i| i + n).chain(0..n).collect();
        Self {
            n_top: n,
            n_bottom: n,
            pairing,
            loops: 0,
        }
    }

    /// The generator joining strands `i - 1` and `i` (1-based `i`) by a cap
    /// on top and a cup below.
    pub fn generator(n: usize, i: usize) -> Result<Self> {
        if i == 0 || i >= n {
            return Err(Error::Precondition(format!("no generator u_{i} on {n} strands")));
        }
        let mut d = Self::identity(n);
        let (a, b) = (i - 1, i);
        d.pairing[a] = b;
        d.pairing[b] = a;
        d.pairing[n + a] = n + b;
        d.pairing[n + b] = n + a;
        Ok(d)
    }

    pub fn n_top(&self) -> usize {
        self.n_top
    }

    pub fn n_bottom(&self) -> usize {
        self.n_bottom
    }

    pub fn pairing(&self) -> &[usize] {
        &self.pairing
    }

    pub fn loops(&self) -> usize {
        self.loops
    }

    fn without_loops(mut self) -> (Self, usize) {
        let l = std::mem::take(&mut self.loops);
        (self, l)
    }

    /// Position of a point in the cyclic boundary order (top left to right,
    /// then bottom right to left).
    fn cyclic(&self, p: usize) -> usize {
        if p < self.n_top {
            p
        } else {
            self.n_top + (self.n_bottom - 1 - (p - self.n_top))
        }
    }

    fn is_planar(&self) -> bool {
        let chords: Vec<(usize, usize)> = (0..self.pairing.len())
            .filter(|&p| p < self.pairing[p])
            .map(|p| {
                let (a, b) = (self.cyclic(p), self.cyclic(self.pairing[p]));
                (a.min(b), a.max(b))
            })
            .collect();
        chords.iter().all(|&(a, b)| {
            chords
                .iter()
                .all(|&(c, d)| !(a < c && c < b && b < d))
        })
    }

    /// Stacks `self` on top of `other`.
    pub fn compose(&self, other: &TLDiagram) -> Result<TLDiagram> {
        if self.n_bottom != other.n_top {
            return Err(Error::Arity {
                expected: self.n_bottom,
                found: other.n_top,
            });
        }
        let (xt, m, yb) = (self.n_top, self.n_bottom, other.n_bottom);
        // result points: top of self, then bottom of other
        let n = xt + yb;
        let mut pairing = vec![usize::MAX; n];
        let mut glued_seen = vec![false; m];
        // walk from an outer point until another outer point is reached
        let walk = |start_in_x: bool, start: usize, glued_seen: &mut [bool]| -> usize {
            let (mut in_x, mut p) = (start_in_x, start);
            loop {
                if in_x {
                    let q = self.pairing[p];
                    if q < xt {
                        return q;
                    }
                    glued_seen[q - xt] = true;
                    in_x = false;
                    p = q - xt;
                } else {
                    let q = other.pairing[p];
                    if q >= m {
                        return xt + (q - m);
                    }
                    glued_seen[q] = true;
                    in_x = true;
                    p = xt + q;
                }
            }
        };
        for p in 0..n {
            if pairing[p] != usize::MAX {
                continue;
            }
            let q = if p < xt {
                walk(true, p, &mut glued_seen)
            } else {
                walk(false, m + (p - xt), &mut glued_seen)
            };
            pairing[p] = q;
            pairing[q] = p;
        }
        // unvisited glued points lie on closed loops
        let mut loops = self.loops + other.loops;
        for g in 0..m {
            if glued_seen[g] {
                continue;
            }
            loops += 1;
            let mut p = g;
            loop {
                glued_seen[p] = true;
                let up = self.pairing[xt + p] - xt;
                glued_seen[up] = true;
                p = other.pairing[up];
                if p == g {
                    break;
                }
            }
        }
        Ok(TLDiagram {
            n_top: xt,
            n_bottom: yb,
            pairing,
            loops,
        })
    }

    /// Adds `k` straight strands on the right.
    pub fn tensor_identity(&self, k: usize) -> TLDiagram {
        let (t, b) = (self.n_top, self.n_bottom);
        let map = |p: usize| if p < t { p } else { p + k };
        let mut pairing = vec![0; t + b + 2 * k];
        for (p, &q) in self.pairing.iter().enumerate() {
            pairing[map(p)] = map(q);
        }
        for j in 0..k {
            let (top, bottom) = (t + j, t + k + b + j);
            pairing[top] = bottom;
            pairing[bottom] = top;
        }
        TLDiagram {
            n_top: t + k,
            n_bottom: b + k,
            pairing,
            loops: self.loops,
        }
    }

    /// Number of circles after joining top point `i` to bottom point `i`
    /// around the side (plus the stored loops).
    pub fn closure_loops(&self) -> Result<usize> {
        if self.n_top != self.n_bottom {
            return Err(Error::Arity {
                expected: self.n_top,
                found: self.n_bottom,
            });
        }
        let n = self.n_top;
        let mut seen = vec![false; 2 * n];
        let mut loops = self.loops;
        for s in 0..2 * n {
            if seen[s] {
                continue;
            }
            loops += 1;
            let mut p = s;
            while !seen[p] {
                seen[p] = true;
                let q = self.pairing[p];
                seen[q] = true;
                p = if q < n { q + n } else { q - n };
            }
        }
        Ok(loops)
    }
}

/// A linear combination of loop-free Temperley–Lieb diagrams with
/// coefficients in `Q(A)`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct TLElement {
    terms: BTreeMap<TLDiagram, RatFunc>,
}

fn delta_pow(k: usize) -> LaurentPoly {
    loop_value().pow(k as u32)
}

impl TLElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn identity(n: usize) -> Self {
        Self::from_diagram(TLDiagram::identity(n))
    }

    /// A single diagram with coefficient 1; its loops become powers of the
    /// loop value.
    pub fn from_diagram(d: TLDiagram) -> Self {
        let mut e = Self::zero();
        e.add_term(d, RatFunc::one());
        e
    }

    pub fn terms(&self) -> &BTreeMap<TLDiagram, RatFunc> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, d: &TLDiagram) -> RatFunc {
        self.terms.get(d).cloned().unwrap_or_else(RatFunc::zero)
    }

    pub fn add_term(&mut self, d: TLDiagram, c: RatFunc) {
        let (d, loops) = d.without_loops();
        let c = if loops > 0 {
            c.scale_poly(&delta_pow(loops))
        } else {
            c
        };
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&d) {
            Some(old) => {
                let sum = &*old + &c;
                if sum.is_zero() {
                    self.terms.remove(&d);
                } else {
                    *old = sum;
                }
            }
            None => {
                self.terms.insert(d, c);
            }
        }
    }

    pub fn add(&self, other: &TLElement) -> TLElement {
        let mut out = self.clone();
        for (d, c) in &other.terms {
            out.add_term(d.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &RatFunc) -> TLElement {
        let mut out = TLElement::zero();
        for (d, x) in &self.terms {
            out.add_term(d.clone(), x * c);
        }
        out
    }

    pub fn tensor_identity(&self, k: usize) -> TLElement {
        TLElement {
            terms: self
                .terms
                .iter()
                .map(|(d, c)| (d.tensor_identity(k), c.clone()))
                .collect(),
        }
    }
}

/// Coefficients as polynomials over one common denominator.
fn cleared(x: &TLElement) -> (LaurentPoly, Vec<(&TLDiagram, LaurentPoly)>) {
    let den = common_denominator(x.terms.values());
    let nums = x
        .terms
        .iter()
        .map(|(d, c)| (d, c.numerator_over(&den).expect("common denominator")))
        .collect();
    (den, nums)
}

/// Stacks `x` on top of `y`, turning closed loops into loop-value factors.
pub fn tl_compose(x: &TLElement, y: &TLElement) -> Result<TLElement> {
    let (dx, nx) = cleared(x);
    let (dy, ny) = cleared(y);
    let mut sums: BTreeMap<TLDiagram, LaurentPoly> = BTreeMap::new();
    for (a, pa) in &nx {
        for (b, pb) in &ny {
            let (d, loops) = a.compose(b)?.without_loops();
            let mut term = pa * pb;
            if loops > 0 {
                term = &term * &delta_pow(loops);
            }
            let slot = sums.entry(d).or_insert_with(LaurentPoly::zero);
            *slot = &*slot + &term;
        }
    }
    let den = &dx * &dy;
    let mut terms = BTreeMap::new();
    for (d, num) in sums {
        if !num.is_zero() {
            terms.insert(d, RatFunc::new(num, den.clone())?);
        }
    }
    Ok(TLElement { terms })
}

/// The Markov closure: join each top point to the bottom point below it.
pub fn tl_closure(x: &TLElement) -> Result<RatFunc> {
    let (den, nums) = cleared(x);
    let mut sum = LaurentPoly::zero();
    for (d, num) in nums {
        sum = &sum + &(&num * &delta_pow(d.closure_loops()?));
    }
    RatFunc::new(sum, den)
}

impl fmt::Display for TLDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TL[{}|{}:", self.n_top, self.n_bottom)?;
        for (p, &q) in self.pairing.iter().enumerate() {
            if p < q {
                write!(f, " {p}-{q}")?;
            }
        }
        write!(f, "]")
    }
}
