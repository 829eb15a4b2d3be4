//! Multivariate GCD by recursive content / primitive-part reduction with a
//! primitive pseudo-remainder sequence. Degrees in the pipeline stay small,
//! so no modular or sparse-interpolation machinery is needed.

use super::Poly;
use crate::exactnum::AlgNum;

/// Normalized (primitive, positive leading coefficient) GCD.
pub fn poly_gcd(a: &Poly, b: &Poly) -> Poly {
    if a.is_zero() {
        return b.normalized_primitive().0;
    }
    if b.is_zero() {
        return a.normalized_primitive().0;
    }
    let (a, b) = Poly::aligned(a, b);
    let main = a
        .vars()
        .iter()
        .find(|v| a.depends_on(v) || b.depends_on(v))
        .cloned();
    let main = match main {
        // Both constants: units of the coefficient field.
        None => return Poly::constant_owned(a.vars().to_vec(), AlgNum::one()),
        Some(v) => v,
    };
    let (cont_a, pp_a) = content_and_primitive(&a, &main);
    let (cont_b, pp_b) = content_and_primitive(&b, &main);
    let cont_gcd = poly_gcd(&cont_a, &cont_b);
    let prs = primitive_prs_gcd(&pp_a, &pp_b, &main);
    cont_gcd.mul(&prs).normalized_primitive().0
}

/// Content (gcd of the univariate coefficients) and primitive part with
/// respect to `main`.
fn content_and_primitive(p: &Poly, main: &str) -> (Poly, Poly) {
    let coeffs = p.univariate_coeffs(main);
    let mut cont = Poly::zero_owned(p.vars().to_vec());
    for c in &coeffs {
        cont = poly_gcd(&cont, c);
        if cont.is_constant() && !cont.is_zero() {
            break;
        }
    }
    if cont.is_zero() {
        return (Poly::constant_owned(p.vars().to_vec(), AlgNum::one()), p.clone());
    }
    let pp = p.div_exact(&cont).expect("content divides");
    (cont, pp)
}

fn leading_coeff_in(p: &Poly, main: &str) -> Poly {
    let coeffs = p.univariate_coeffs(main);
    coeffs.into_iter().last().expect("nonzero polynomial")
}

fn var_monomial(vars: &[String], main: &str, e: u32) -> Poly {
    let names: Vec<&str> = vars.iter().map(|s| s.as_str()).collect();
    Poly::var(&names, main).pow(e)
}

/// Pseudo-remainder of `a` by `b` in the variable `main`.
fn pseudo_rem(a: &Poly, b: &Poly, main: &str) -> Poly {
    let db = b.degree_in(main);
    let lcb = leading_coeff_in(b, main);
    let mut r = a.clone();
    while !r.is_zero() && r.degree_in(main) >= db {
        let dr = r.degree_in(main);
        let lcr = leading_coeff_in(&r, main);
        let shift = var_monomial(r.vars(), main, dr - db);
        r = r.mul(&lcb).sub(&b.mul(&lcr).mul(&shift));
        debug_assert!(r.is_zero() || r.degree_in(main) < dr);
    }
    r
}

fn primitive_prs_gcd(a: &Poly, b: &Poly, main: &str) -> Poly {
    let (mut f, mut g) = if a.degree_in(main) >= b.degree_in(main) {
        (a.clone(), b.clone())
    } else {
        (b.clone(), a.clone())
    };
    while !g.is_zero() {
        let r = pseudo_rem(&f, &g, main);
        f = g;
        g = if r.is_zero() { r } else { content_and_primitive(&r, main).1.normalized_primitive().0 };
    }
    content_and_primitive(&f, main).1.normalized_primitive().0
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;

    fn p(src: &str) -> Poly {
        parse_poly(src, &["x", "y"], 2).unwrap()
    }

    #[test]
    fn univariate_gcd() {
        let g = poly_gcd(&p("x^2 - 1"), &p("x^2 - 2*x + 1"));
        assert_eq!(g, p("x - 1"));
    }

    #[test]
    fn multivariate_gcd() {
        let a = p("(x + y)*(x - y)");
        let b = p("(x + y)*(x + 2*y)");
        assert_eq!(poly_gcd(&a, &b), p("x + y"));
    }

    #[test]
    fn coprime_gcd_is_one() {
        let g = poly_gcd(&p("x^2 + 1"), &p("y - x"));
        assert!(g.is_constant());
    }

    #[test]
    fn gcd_with_surd_coefficients() {
        let a = p("(x - sqrt(2)*y)*(x + y)");
        let b = p("(x - sqrt(2)*y)*(x - y)");
        let g = poly_gcd(&a, &b);
        let target = p("x - sqrt(2)*y");
        // Same factor up to a unit.
        let q = g.div_exact(&target).or_else(|| target.div_exact(&g));
        assert!(q.map(|q| q.is_constant()).unwrap_or(false));
    }

    #[test]
    fn content_extraction() {
        // content of x²y + xy² w.r.t. x is y
        let (cont, pp) = content_and_primitive(&p("x^2*y + x*y^2"), "x");
        assert_eq!(cont, p("y"));
        assert_eq!(pp, p("x^2 + x*y"));
    }
}
