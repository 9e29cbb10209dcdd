use super::laurent::LaurentPoly;

/// The quantum integer `[n] = (A^2n - A^-2n) / (A^2 - A^-2)`, expanded as
/// `A^(2n-2) + A^(2n-6) + ... + A^(2-2n)`. `[0]` is zero.
pub fn quantum_integer(n: usize) -> LaurentPoly {
    let n = n as i64;
    LaurentPoly::from_int_terms((0..n).map(|k| (2 * n - 2 - 4 * k, 1)))
}

/// Value of the unknot colored `n`: `(-1)^n [n+1]`.
pub fn delta_color(n: usize) -> LaurentPoly {
    let q = quantum_integer(n + 1);
    if n % 2 == 0 {
        q
    } else {
        -q
    }
}

/// The loop value `-A^2 - A^-2`.
pub fn loop_value() -> LaurentPoly {
    delta_color(1)
}
