//! Sylvester resultants. The determinant is computed by Gaussian elimination
//! over the rational-function field, which is exact and more than fast enough
//! for the small matrices this pipeline produces.

use super::{Poly, RatFunc};
use crate::exactnum::AlgNum;

/// Resultant of `p` and `q` with respect to `var`, as a polynomial in the
/// remaining variables (the `var`-exponent of every term is zero).
pub fn resultant(p: &Poly, q: &Poly, var: &str) -> Poly {
    let (p, q) = Poly::aligned(p, q);
    let dp = p.degree_in(var) as usize;
    let dq = q.degree_in(var) as usize;
    let vars = p.vars().to_vec();
    if p.is_zero() || q.is_zero() {
        return Poly::zero_owned(vars);
    }
    if dp == 0 && dq == 0 {
        return Poly::constant_owned(vars, AlgNum::one());
    }
    if dp == 0 {
        return p.pow(dq as u32);
    }
    if dq == 0 {
        return q.pow(dp as u32);
    }
    let pc = p.univariate_coeffs(var);
    let qc = q.univariate_coeffs(var);
    let n = dp + dq;
    let mut m: Vec<Vec<RatFunc>> = vec![vec![RatFunc::from_poly(Poly::zero_owned(vars.clone())); n]; n];
    // dq rows of p's coefficients, then dp rows of q's, highest degree first.
    for r in 0..dq {
        for (k, c) in pc.iter().enumerate() {
            m[r][r + dp - k] = RatFunc::from_poly(c.clone());
        }
    }
    for r in 0..dp {
        for (k, c) in qc.iter().enumerate() {
            m[dq + r][r + dq - k] = RatFunc::from_poly(c.clone());
        }
    }
    let det = det_ratfunc(m);
    ratfunc_to_poly(det)
}

/// Determinant by fraction-field Gaussian elimination with partial pivoting.
pub(crate) fn det_ratfunc(mut m: Vec<Vec<RatFunc>>) -> RatFunc {
    let n = m.len();
    if n == 0 {
        return RatFunc::from_poly(Poly::int(&[], 1));
    }
    let vars = m[0][0].vars().to_vec();
    let zero = RatFunc::from_poly(Poly::zero_owned(vars.clone()));
    let mut det = RatFunc::from_poly(Poly::constant_owned(vars.clone(), AlgNum::one()));
    let mut sign_flip = false;
    for col in 0..n {
        let pivot_row = (col..n).find(|&r| !m[r][col].is_zero());
        let pr = match pivot_row {
            None => return zero,
            Some(r) => r,
        };
        if pr != col {
            m.swap(pr, col);
            sign_flip = !sign_flip;
        }
        let pivot = m[col][col].clone();
        det = det.mul(&pivot);
        for r in col + 1..n {
            if m[r][col].is_zero() {
                continue;
            }
            let factor = m[r][col].div(&pivot).expect("nonzero pivot");
            for c in col..n {
                let delta = factor.mul(&m[col][c]);
                m[r][c] = m[r][c].sub(&delta);
            }
        }
    }
    if sign_flip {
        det.neg()
    } else {
        det
    }
}

fn ratfunc_to_poly(r: RatFunc) -> Poly {
    let den = r.den();
    let c = den.constant_value().expect("resultant denominator must be constant");
    r.num().scale(&c.inverse().expect("nonzero"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;

    fn p(src: &str) -> Poly {
        parse_poly(src, &["x", "y"], 0).unwrap()
    }

    #[test]
    fn eliminating_a_linear_factor() {
        // res(x²+y²−1, y, y) = x²−1
        let r = resultant(&p("x^2 + y^2 - 1"), &p("y"), "y");
        assert_eq!(r, p("x^2 - 1"));
    }

    #[test]
    fn two_lines() {
        // res(x−y, x+y, x) = 2y
        let r = resultant(&p("x - y"), &p("x + y"), "x");
        assert_eq!(r, p("2*y"));
    }

    #[test]
    fn sylvester_determinant_oracle() {
        // res(xy−1, x²+y²−4, x) = y⁴−4y²+1
        let r = resultant(&p("x*y - 1"), &p("x^2 + y^2 - 4"), "x");
        assert_eq!(r, p("y^4 - 4*y^2 + 1"));
    }

    #[test]
    fn common_root_makes_resultant_vanish() {
        let r = resultant(&p("(x - y)*(x + 2)"), &p("(x - y)*(x - 3)"), "x");
        assert!(r.is_zero() || {
            // Shared root x = y for every y, so the resultant must vanish identically.
            false
        });
    }
}
