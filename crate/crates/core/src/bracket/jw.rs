use std::sync::{Arc, Mutex, OnceLock};

use super::tl::{tl_compose, TLDiagram, TLElement};
use crate::algebra::{delta_color, RatFunc};
use crate::error::{Error, Result};

/// Largest projector built unless a caller raises the cap.
pub const DEFAULT_JW_CAP: usize = 8;

fn cache() -> &'static Mutex<Vec<Arc<TLElement>>> {
    static CACHE: OnceLock<Mutex<Vec<Arc<TLElement>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(vec![Arc::new(TLElement::identity(0))]))
}

/// The Jones–Wenzl projector on `n` strands.
pub fn jones_wenzl(n: usize) -> Result<Arc<TLElement>> {
    jones_wenzl_capped(n, DEFAULT_JW_CAP)
}

pub fn jones_wenzl_capped(n: usize, cap: usize) -> Result<Arc<TLElement>> {
    if n > cap {
        return Err(Error::Precondition(format!(
            "Jones-Wenzl projector on {n} strands exceeds the cap {cap}"
        )));
    }
    let mut memo = cache().lock().unwrap();
    while memo.len() <= n {
        let k = memo.len();
        let next = wenzl_step(&memo[k - 1], k)?;
        memo.push(Arc::new(next));
    }
    Ok(memo[n].clone())
}

/// `p_k = p' - (Δ_{k-2}/Δ_{k-1}) p' u_{k-1} p'` with `p' = p_{k-1} ⊗ 1`.
fn wenzl_step(prev: &TLElement, k: usize) -> Result<TLElement> {
    let lifted = prev.tensor_identity(1);
    if k == 1 {
        return Ok(lifted);
    }
    let u = TLElement::from_diagram(TLDiagram::generator(k, k - 1)?);
    let sandwich = tl_compose(&tl_compose(&lifted, &u)?, &lifted)?;
    let ratio = RatFunc::new(delta_color(k - 2), delta_color(k - 1))?;
    Ok(lifted.add(&sandwich.scale(&-ratio)))
}
