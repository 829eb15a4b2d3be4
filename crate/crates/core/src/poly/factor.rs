//! Lightweight structural factorization used for sign analysis: monomial
//! content, recursive content splitting (which separates products of
//! polynomials in disjoint variables) and extraction of the real
//! ℚ(√n)-rational lines of a binary form. No general multivariate
//! factorization is attempted.

use super::roots::{isolate_real_roots, surd_roots, Interval1};
use super::Poly;
use crate::error::{Error, Result};
use crate::exactnum::AlgNum;

/// Syntactic certificate that `p > 0` everywhere: positive constant term and
/// every term a positive multiple of a monomial with even exponents.
pub fn is_strictly_positive(p: &Poly) -> bool {
    let mut has_positive_constant = false;
    for (e, c) in p.terms() {
        if c.sign() <= 0 {
            return false;
        }
        if e.iter().all(|&x| x == 0) {
            has_positive_constant = true;
        } else if e.iter().any(|&x| x % 2 == 1) {
            return false;
        }
    }
    has_positive_constant
}

/// Syntactic certificate that `p ≥ 0` on the region where the variables in
/// `positive_vars` (indices into `p`'s variable list) are positive: every
/// term has a nonnegative coefficient and odd exponents only on
/// positive-known variables.
pub fn is_nonneg_given(p: &Poly, positive_vars: &[usize]) -> bool {
    for (e, c) in p.terms() {
        if c.sign() < 0 {
            return false;
        }
        for (i, &exp) in e.iter().enumerate() {
            if exp % 2 == 1 && !positive_vars.contains(&i) {
                return false;
            }
        }
    }
    true
}

/// Factorization for sign analysis: global sign of the rational content plus
/// a list of primitive factors (positive leading coefficient) with
/// multiplicities. Splits off variable monomials and products of polynomials
/// in disjoint variables; anything further stays opaque as one factor.
pub fn factor_for_signs(p: &Poly) -> (i32, Vec<(Poly, u32)>) {
    if p.is_zero() {
        return (0, Vec::new());
    }
    let mut factors: Vec<(Poly, u32)> = Vec::new();
    let mut sign = 1i32;
    collect_factors(p.clone(), &mut sign, &mut factors);
    // Merge duplicates.
    let mut merged: Vec<(Poly, u32)> = Vec::new();
    for (f, m) in factors {
        if let Some(slot) = merged.iter_mut().find(|(g, _)| *g == f) {
            slot.1 += m;
        } else {
            merged.push((f, m));
        }
    }
    (sign, merged)
}

fn collect_factors(p: Poly, sign: &mut i32, out: &mut Vec<(Poly, u32)>) {
    let mut p = p;
    // Variable monomial content.
    let var_names: Vec<String> = p.vars().to_vec();
    for v in &var_names {
        let k = p.var_order(v);
        if k > 0 && p.depends_on(v) {
            let names: Vec<&str> = var_names.iter().map(|s| s.as_str()).collect();
            out.push((Poly::var(&names, v), k));
            p = p.shift_down(v, k);
        }
    }
    // Rational content and leading sign.
    let (pp, f) = p.normalized_primitive();
    if f < num_rational::BigRational::from_integer(num_bigint::BigInt::from(0)) {
        *sign = -*sign;
    }
    p = pp;
    if p.is_constant() {
        return;
    }
    // Content split along the first variable p depends on.
    let main = var_names.iter().find(|v| p.depends_on(v)).cloned().expect("nonconstant");
    let coeffs = p.univariate_coeffs(&main);
    let mut cont = Poly::zero_owned(p.vars().to_vec());
    for c in &coeffs {
        cont = super::gcd::poly_gcd(&cont, c);
        if cont.is_constant() && !cont.is_zero() {
            break;
        }
    }
    if !cont.is_constant() {
        let pp = p.div_exact(&cont).expect("content divides");
        collect_factors(cont, sign, out);
        collect_factors(pp, sign, out);
        return;
    }
    out.push((p, 1));
}

/// Real lines of a homogeneous binary form with coefficients in ℚ(√n).
#[derive(Debug, Clone)]
pub struct ConeLines {
    /// Lines a·u + b·v = 0 through the origin with multiplicities.
    pub lines: Vec<(AlgNum, AlgNum, u32)>,
    /// Leftover factor with no ℚ(√n)-rational root direction, as a dense
    /// univariate in the slope t (direction u = t, v = 1), when nonconstant.
    pub opaque: Option<Vec<AlgNum>>,
    /// Isolating intervals for the real slopes of the opaque factor.
    pub opaque_slopes: Vec<Interval1>,
}

impl ConeLines {
    pub fn has_unresolved_real_directions(&self) -> bool {
        !self.opaque_slopes.is_empty()
    }
}

/// Extracts every linear factor over ℚ(√n) of a homogeneous form in two
/// variables, with multiplicity; the rest is reported opaque together with
/// isolating intervals for its real root directions.
pub fn cone_real_lines(form: &Poly, radicand: u64) -> Result<ConeLines> {
    if form.vars().len() != 2 {
        return Err(Error::Invalid(format!(
            "cone form must be binary, got {} variables",
            form.vars().len()
        )));
    }
    if form.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let comps = form.homogeneous_components();
    if comps.len() != 1 {
        return Err(Error::Invalid("cone form must be homogeneous".into()));
    }
    let u = form.vars()[0].clone();
    let v = form.vars()[1].clone();
    let mut lines = Vec::new();
    let mut rest = form.clone();
    let ku = rest.var_order(&u);
    if ku > 0 {
        // u = 0 is the line 1·u + 0·v = 0.
        lines.push((AlgNum::one(), AlgNum::zero(), ku));
        rest = rest.shift_down(&u, ku);
    }
    let kv = rest.var_order(&v);
    if kv > 0 {
        lines.push((AlgNum::zero(), AlgNum::one(), kv));
        rest = rest.shift_down(&v, kv);
    }
    // Dehomogenize along v: slope polynomial g(t) = rest(t, 1).
    let g = rest.dehomogenize(&v);
    let g_coeffs = match g.to_univariate(&u) {
        Some(c) => c,
        None => return Err(Error::Invalid("cone form not homogeneous".into())),
    };
    if g_coeffs.len() <= 1 {
        return Ok(ConeLines { lines, opaque: None, opaque_slopes: Vec::new() });
    }
    let (roots, leftover) = surd_roots(&g_coeffs, radicand);
    for (t0, mult) in roots {
        // u = t0 v  ⟺  u − t0·v = 0.
        lines.push((AlgNum::one(), -t0, mult));
    }
    if leftover.len() <= 1 {
        return Ok(ConeLines { lines, opaque: None, opaque_slopes: Vec::new() });
    }
    let slopes = isolate_real_roots(&leftover);
    Ok(ConeLines { lines, opaque: Some(leftover), opaque_slopes: slopes })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;

    fn p2(src: &str) -> Poly {
        parse_poly(src, &["x", "y"], 2).unwrap()
    }

    #[test]
    fn positivity_certificates() {
        assert!(is_strictly_positive(&p2("1 + x^2")));
        assert!(is_strictly_positive(&p2("2 + x^2*y^2 + y^4")));
        assert!(!is_strictly_positive(&p2("x^2")));
        assert!(!is_strictly_positive(&p2("1 + x")));
        assert!(!is_strictly_positive(&p2("1 - x^2")));
    }

    #[test]
    fn nonneg_with_sign_context() {
        // x²y ≥ 0 when y > 0.
        let q = p2("x^2*y");
        assert!(is_nonneg_given(&q, &[1]));
        assert!(!is_nonneg_given(&q, &[0]));
    }

    #[test]
    fn factor_disjoint_product() {
        let (sign, factors) = factor_for_signs(&p2("(1-x)*y"));
        assert_eq!(sign, -1); // normalized factors have positive leading coeff
        assert_eq!(factors.len(), 2);
        let printed: Vec<String> = factors.iter().map(|(f, m)| format!("{}^{}", f, m)).collect();
        assert!(printed.contains(&"y^1".to_string()));
        assert!(printed.contains(&"x - 1^1".to_string()));
    }

    #[test]
    fn factor_monomials() {
        let (sign, factors) = factor_for_signs(&p2("y*(1+x^2)"));
        assert_eq!(sign, 1);
        assert_eq!(factors.len(), 2);
        assert!(factors.iter().any(|(f, _)| *f == p2("y")));
        assert!(factors.iter().any(|(f, _)| *f == p2("x^2 + 1")));
    }

    #[test]
    fn cone_lines_single() {
        let c = cone_real_lines(&p2("-y"), 0).unwrap();
        assert_eq!(c.lines.len(), 1);
        assert_eq!(c.lines[0], (AlgNum::zero(), AlgNum::one(), 1));
        assert!(c.opaque.is_none());
    }

    #[test]
    fn cone_lines_definite_form() {
        let c = cone_real_lines(&p2("x^2 + y^2"), 0).unwrap();
        assert!(c.lines.is_empty());
        assert!(c.opaque.is_some());
        assert!(c.opaque_slopes.is_empty());
    }

    #[test]
    fn cone_lines_surd() {
        // x² − 2y² over ℚ(√2): lines x ∓ √2 y.
        let c = cone_real_lines(&p2("x^2 - 2*y^2"), 2).unwrap();
        assert_eq!(c.lines.len(), 2);
        assert!(c.opaque.is_none());
        let sqrt2 = AlgNum::sqrt(2).unwrap();
        assert!(c.lines.iter().any(|(a, b, _)| a.is_one() && *b == -sqrt2.clone()));
        assert!(c.lines.iter().any(|(a, b, _)| a.is_one() && *b == sqrt2.clone()));
        // Same form over plain ℚ: unresolved directions flagged.
        let c = cone_real_lines(&p2("x^2 - 2*y^2"), 0).unwrap();
        assert!(c.lines.is_empty());
        assert!(c.has_unresolved_real_directions());
        assert_eq!(c.opaque_slopes.len(), 2);
    }

    #[test]
    fn cone_lines_cusp_factor() {
        // y²(x³+x²y+y³): y twice, cubic opaque with one real direction.
        let c = cone_real_lines(&p2("y^2*(x^3 + x^2*y + y^3)"), 0).unwrap();
        assert_eq!(c.lines.len(), 1);
        assert_eq!(c.lines[0].2, 2);
        assert!(c.opaque.is_some());
        assert_eq!(c.opaque_slopes.len(), 1);
    }
}
