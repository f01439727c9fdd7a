// @generated by scripts/derive_r.py; do not edit.
//
// tr(ABC) - 1 = R_COEFF_POS * r + R_COEFF_ZERO + R_COEFF_NEG / r, each
// coefficient a sum of terms (c, e_i, e_s, e_q) meaning c * i^e_i * s^e_s * q^e_q.

/// Coefficient of r: i*(s**2 + 1)
pub const R_COEFF_POS: &[(i64, u32, u32, u32)] = &[(1, 1, 2, 0), (1, 1, 0, 0)];
/// Coefficient of 1: i*s - 1
pub const R_COEFF_ZERO: &[(i64, u32, u32, u32)] = &[(1, 1, 1, 0), (-1, 0, 0, 0)];
/// Coefficient of 1/r: -i*(q**2 - q + 1)
pub const R_COEFF_NEG: &[(i64, u32, u32, u32)] = &[(-1, 1, 0, 2), (1, 1, 0, 1), (-1, 1, 0, 0)];
