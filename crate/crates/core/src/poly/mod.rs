//! Sparse multivariate polynomials and reduced rational functions over
//! [`AlgNum`], plus the structural operations the reduction pipeline needs:
//! homogenization, homogeneous Taylor components, tangent cones, GCD,
//! resultants and univariate real-root isolation.

mod factor;
mod gcd;
mod resultant;
mod roots;

pub use factor::{cone_real_lines, factor_for_signs, is_strictly_positive, ConeLines};
pub use gcd::poly_gcd;
pub use resultant::resultant;
pub use roots::{isolate_real_roots, refine_root, surd_roots, Interval1};

use crate::error::{Error, Result};
use crate::exactnum::{algnum_content, AlgNum};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// Graded lexicographic comparison of exponent vectors: total degree first,
/// then lexicographic with earlier variables weighing more.
pub fn cmp_grlex(a: &[u32], b: &[u32]) -> std::cmp::Ordering {
    let da: u64 = a.iter().map(|&e| e as u64).sum();
    let db: u64 = b.iter().map(|&e| e as u64).sum();
    da.cmp(&db).then_with(|| a.cmp(b))
}

/// Sparse multivariate polynomial over ℚ(√n).
#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    vars: Vec<String>,
    terms: BTreeMap<Vec<u32>, AlgNum>,
}

impl Poly {
    pub fn zero(vars: &[&str]) -> Self {
        Poly { vars: vars.iter().map(|s| s.to_string()).collect(), terms: BTreeMap::new() }
    }

    pub fn zero_owned(vars: Vec<String>) -> Self {
        Poly { vars, terms: BTreeMap::new() }
    }

    pub fn constant(vars: &[&str], c: AlgNum) -> Self {
        let mut p = Poly::zero(vars);
        if !c.is_zero() {
            p.terms.insert(vec![0; p.vars.len()], c);
        }
        p
    }

    pub fn one(vars: &[&str]) -> Self {
        Poly::constant(vars, AlgNum::one())
    }

    pub fn int(vars: &[&str], n: i64) -> Self {
        Poly::constant(vars, AlgNum::from_int(n))
    }

    /// The variable `name` as a monomial.
    pub fn var(vars: &[&str], name: &str) -> Self {
        let mut p = Poly::zero(vars);
        let i = p.var_index(name).expect("unknown variable");
        let mut e = vec![0; p.vars.len()];
        e[i] = 1;
        p.terms.insert(e, AlgNum::one());
        p
    }

    pub fn from_terms(vars: Vec<String>, terms: impl IntoIterator<Item = (Vec<u32>, AlgNum)>) -> Self {
        let mut p = Poly { vars, terms: BTreeMap::new() };
        for (e, c) in terms {
            assert_eq!(e.len(), p.vars.len(), "exponent arity");
            p.add_term(e, c);
        }
        p
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &AlgNum)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms.keys().next().unwrap().iter().all(|&e| e == 0))
    }

    /// Constant value when [`is_constant`](Self::is_constant); zero for the zero polynomial.
    pub fn constant_value(&self) -> Option<AlgNum> {
        if self.terms.is_empty() {
            return Some(AlgNum::zero());
        }
        if self.is_constant() {
            return Some(self.terms.values().next().unwrap().clone());
        }
        None
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum::<u32>()).max()
    }

    pub fn degree_in(&self, var: &str) -> u32 {
        match self.var_index(var) {
            None => 0,
            Some(i) => self.terms.keys().map(|e| e[i]).max().unwrap_or(0),
        }
    }

    pub fn depends_on(&self, var: &str) -> bool {
        self.degree_in(var) > 0
    }

    /// Largest radicand appearing in a coefficient (0 when all rational).
    pub fn radicand(&self) -> u64 {
        self.terms.values().map(|c| c.radicand).max().unwrap_or(0)
    }

    fn add_term(&mut self, e: Vec<u32>, c: AlgNum) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get().checked_add(&c).expect("radicand");
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    /// Remaps `self` onto the variable list `vars`, which must contain every
    /// variable of `self`.
    pub fn with_vars(&self, vars: &[String]) -> Result<Poly> {
        if self.vars == vars {
            return Ok(self.clone());
        }
        let map: Vec<usize> = self
            .vars
            .iter()
            .map(|v| vars.iter().position(|w| w == v).ok_or_else(|| Error::VariableCollision(v.clone())))
            .collect::<Result<_>>()?;
        let mut out = Poly { vars: vars.to_vec(), terms: BTreeMap::new() };
        for (e, c) in &self.terms {
            let mut ne = vec![0u32; vars.len()];
            for (i, &exp) in e.iter().enumerate() {
                ne[map[i]] = exp;
            }
            out.add_term(ne, c.clone());
        }
        Ok(out)
    }

    /// Common variable list of two polynomials (vars of `a`, then new vars of `b`).
    pub fn aligned(a: &Poly, b: &Poly) -> (Poly, Poly) {
        if a.vars == b.vars {
            return (a.clone(), b.clone());
        }
        let mut vars = a.vars.clone();
        for v in &b.vars {
            if !vars.contains(v) {
                vars.push(v.clone());
            }
        }
        (a.with_vars(&vars).unwrap(), b.with_vars(&vars).unwrap())
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let (mut a, b) = Poly::aligned(self, other);
        for (e, c) in b.terms {
            a.add_term(e, c);
        }
        a
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Poly {
        let mut out = Poly { vars: self.vars.clone(), terms: BTreeMap::new() };
        for (e, c) in &self.terms {
            out.terms.insert(e.clone(), -c.clone());
        }
        out
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        let (a, b) = Poly::aligned(self, other);
        let mut out = Poly { vars: a.vars.clone(), terms: BTreeMap::new() };
        for (ea, ca) in &a.terms {
            for (eb, cb) in &b.terms {
                let e: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                out.add_term(e, ca.checked_mul(cb).expect("radicand"));
            }
        }
        out
    }

    pub fn scale(&self, c: &AlgNum) -> Poly {
        if c.is_zero() {
            return Poly { vars: self.vars.clone(), terms: BTreeMap::new() };
        }
        let mut out = Poly { vars: self.vars.clone(), terms: BTreeMap::new() };
        for (e, v) in &self.terms {
            out.add_term(e.clone(), v.checked_mul(c).expect("radicand"));
        }
        out
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut acc = Poly::constant_owned(self.vars.clone(), AlgNum::one());
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn constant_owned(vars: Vec<String>, c: AlgNum) -> Poly {
        let mut p = Poly { vars, terms: BTreeMap::new() };
        if !c.is_zero() {
            let n = p.vars.len();
            p.terms.insert(vec![0; n], c);
        }
        p
    }

    /// Graded-lex leading term.
    pub fn leading_term(&self) -> Option<(&Vec<u32>, &AlgNum)> {
        self.terms.iter().max_by(|(a, _), (b, _)| cmp_grlex(a, b))
    }

    pub fn leading_coeff(&self) -> AlgNum {
        self.leading_term().map(|(_, c)| c.clone()).unwrap_or_else(AlgNum::zero)
    }

    /// Exact evaluation at a point.
    pub fn eval(&self, point: &[AlgNum]) -> AlgNum {
        assert_eq!(point.len(), self.vars.len(), "point arity");
        let mut acc = AlgNum::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (i, &exp) in e.iter().enumerate() {
                if exp > 0 {
                    t = t.checked_mul(&point[i].pow(exp)).expect("radicand");
                }
            }
            acc = acc.checked_add(&t).expect("radicand");
        }
        acc
    }

    /// Polynomial composition: substitute `images[i]` for the i-th variable.
    /// All images must share one variable list.
    pub fn eval_poly(&self, images: &[Poly]) -> Poly {
        assert_eq!(images.len(), self.vars.len(), "image arity");
        let out_vars = if images.is_empty() { self.vars.clone() } else { images[0].vars.clone() };
        // Memoized powers per variable.
        let mut pows: Vec<Vec<Poly>> =
            images.iter().map(|p| vec![Poly::constant_owned(p.vars.clone(), AlgNum::one())]).collect();
        let mut acc = Poly::zero_owned(out_vars);
        for (e, c) in &self.terms {
            let mut t = Poly::constant_owned(acc.vars.clone(), c.clone());
            for (i, &exp) in e.iter().enumerate() {
                while pows[i].len() <= exp as usize {
                    let last = pows[i].last().unwrap().clone();
                    pows[i].push(last.mul(&images[i]));
                }
                if exp > 0 {
                    t = t.mul(&pows[i][exp as usize]);
                }
            }
            acc = acc.add(&t);
        }
        acc
    }

    /// Substitute a single variable, keeping the others.
    pub fn subst_var(&self, name: &str, image: &Poly) -> Poly {
        let (sf, image) = Poly::aligned(self, image);
        let images: Vec<Poly> = sf
            .vars
            .iter()
            .map(|v| if v == name { image.clone() } else { Poly::var(&vec_str(&sf.vars), v) })
            .collect();
        sf.eval_poly(&images)
    }

    /// Translate the origin: returns q with q(x) = p(x + center).
    pub fn shift(&self, center: &[AlgNum]) -> Poly {
        assert_eq!(center.len(), self.vars.len());
        if center.iter().all(|c| c.is_zero()) {
            return self.clone();
        }
        let vars = vec_str(&self.vars);
        let images: Vec<Poly> = self
            .vars
            .iter()
            .zip(center)
            .map(|(v, c)| Poly::var(&vars, v).add(&Poly::constant(&vars, c.clone())))
            .collect();
        self.eval_poly(&images)
    }

    /// Homogenization by a fresh variable appended last.
    pub fn homogenize(&self, new_var: &str) -> Result<Poly> {
        if self.vars.iter().any(|v| v == new_var) {
            return Err(Error::VariableCollision(new_var.to_string()));
        }
        let d = self.total_degree().unwrap_or(0);
        let mut vars = self.vars.clone();
        vars.push(new_var.to_string());
        let mut out = Poly::zero_owned(vars);
        for (e, c) in &self.terms {
            let deg: u32 = e.iter().sum();
            let mut ne = e.clone();
            ne.push(d - deg);
            out.add_term(ne, c.clone());
        }
        Ok(out)
    }

    /// Substitute `var = 1` and drop it from the variable list.
    pub fn dehomogenize(&self, var: &str) -> Poly {
        let i = match self.var_index(var) {
            Some(i) => i,
            None => return self.clone(),
        };
        let mut vars = self.vars.clone();
        vars.remove(i);
        let mut out = Poly::zero_owned(vars);
        for (e, c) in &self.terms {
            let mut ne = e.clone();
            ne.remove(i);
            out.add_term(ne, c.clone());
        }
        out
    }

    /// Homogeneous components about the origin: list of (degree, component),
    /// degrees increasing, components nonzero.
    pub fn homogeneous_components(&self) -> Vec<(u32, Poly)> {
        let mut map: BTreeMap<u32, Poly> = BTreeMap::new();
        for (e, c) in &self.terms {
            let d: u32 = e.iter().sum();
            map.entry(d)
                .or_insert_with(|| Poly::zero_owned(self.vars.clone()))
                .add_term(e.clone(), c.clone());
        }
        map.into_iter().collect()
    }

    /// Homogeneous Taylor components about `center`, expressed in coordinates
    /// shifted so the center is the origin. Re-shifting the sum by −center
    /// recovers the polynomial.
    pub fn homogeneous_components_at(&self, center: &[AlgNum]) -> Vec<(u32, Poly)> {
        self.shift(center).homogeneous_components()
    }

    /// Lowest nonzero homogeneous component about `center` (in shifted
    /// coordinates) and its degree, the vanishing order at the center.
    pub fn tangent_cone_at(&self, center: &[AlgNum]) -> Result<(Poly, u32)> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let comps = self.homogeneous_components_at(center);
        let (k, cone) = comps.into_iter().next().expect("nonzero polynomial");
        Ok((cone, k))
    }

    /// Partial derivative.
    pub fn derivative(&self, var: &str) -> Poly {
        let i = match self.var_index(var) {
            Some(i) => i,
            None => return Poly::zero_owned(self.vars.clone()),
        };
        let mut out = Poly::zero_owned(self.vars.clone());
        for (e, c) in &self.terms {
            if e[i] == 0 {
                continue;
            }
            let mut ne = e.clone();
            ne[i] -= 1;
            out.add_term(ne, c.checked_mul(&AlgNum::from_int(e[i] as i64)).expect("radicand"));
        }
        out
    }

    /// Positive rational content of the coefficients.
    pub fn content(&self) -> BigRational {
        let coeffs: Vec<AlgNum> = self.terms.values().cloned().collect();
        algnum_content(&coeffs)
    }

    /// Divides out the content, then flips the sign so the graded-lex leading
    /// coefficient is positive. Returns the normalized polynomial and the
    /// (possibly negative) rational factor `f` with `self = f * normalized`.
    pub fn normalized_primitive(&self) -> (Poly, BigRational) {
        if self.is_zero() {
            return (self.clone(), BigRational::one());
        }
        let mut f = self.content();
        let inv = AlgNum::from_rational(f.recip());
        let mut p = self.scale(&inv);
        if p.leading_coeff().sign() < 0 {
            p = p.neg();
            f = -f;
        }
        (p, f)
    }

    /// Positive-content normalization only: leaves the leading sign alone.
    pub fn positive_primitive(&self) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let c = self.content();
        self.scale(&AlgNum::from_rational(c.recip()))
    }

    /// Exact division; `None` when the divisor does not divide exactly.
    pub fn div_exact(&self, d: &Poly) -> Option<Poly> {
        if d.is_zero() {
            return None;
        }
        let (a, d) = Poly::aligned(self, d);
        let (dlt_e, dlt_c) = match d.leading_term() {
            Some((e, c)) => (e.clone(), c.clone()),
            None => return None,
        };
        let mut r = a.clone();
        let mut q = Poly::zero_owned(a.vars.clone());
        while !r.is_zero() {
            let (rlt_e, rlt_c) = {
                let (e, c) = r.leading_term().unwrap();
                (e.clone(), c.clone())
            };
            if !dlt_e.iter().zip(&rlt_e).all(|(de, re)| de <= re) {
                return None;
            }
            let qe: Vec<u32> = rlt_e.iter().zip(&dlt_e).map(|(r, d)| r - d).collect();
            let qc = rlt_c.checked_div(&dlt_c).ok()?;
            let mut qt = Poly::zero_owned(a.vars.clone());
            qt.add_term(qe, qc);
            r = r.sub(&qt.mul(&d));
            q = q.add(&qt);
        }
        Some(q)
    }

    pub fn divides(&self, other: &Poly) -> bool {
        other.div_exact(self).is_some()
    }

    /// Coefficients of `self` viewed as univariate in `var`, each a polynomial
    /// in the full variable list with `var`-exponent zero; index = power of `var`.
    pub fn univariate_coeffs(&self, var: &str) -> Vec<Poly> {
        let i = self.var_index(var).expect("unknown variable");
        let d = self.degree_in(var) as usize;
        let mut out = vec![Poly::zero_owned(self.vars.clone()); d + 1];
        for (e, c) in &self.terms {
            let k = e[i] as usize;
            let mut ne = e.clone();
            ne[i] = 0;
            out[k].add_term(ne, c.clone());
        }
        out
    }

    /// Dense coefficient list (constant first) when `self` involves only `var`.
    pub fn to_univariate(&self, var: &str) -> Option<Vec<AlgNum>> {
        let i = self.var_index(var)?;
        let mut out = vec![AlgNum::zero(); self.degree_in(var) as usize + 1];
        for (e, c) in &self.terms {
            for (j, &exp) in e.iter().enumerate() {
                if j != i && exp > 0 {
                    return None;
                }
            }
            out[e[i] as usize] = c.clone();
        }
        Some(out)
    }

    /// Largest power of `var` dividing `self`; the zero polynomial reports 0.
    pub fn var_order(&self, var: &str) -> u32 {
        match self.var_index(var) {
            None => 0,
            Some(i) => self.terms.keys().map(|e| e[i]).min().unwrap_or(0),
        }
    }

    /// Divides by `var^k` exactly (assumes divisibility).
    pub fn shift_down(&self, var: &str, k: u32) -> Poly {
        if k == 0 {
            return self.clone();
        }
        let i = self.var_index(var).expect("unknown variable");
        let mut out = Poly::zero_owned(self.vars.clone());
        for (e, c) in &self.terms {
            assert!(e[i] >= k, "not divisible by {}^{}", var, k);
            let mut ne = e.clone();
            ne[i] -= k;
            out.add_term(ne, c.clone());
        }
        out
    }
}

pub(crate) fn vec_str(v: &[String]) -> Vec<&str> {
    v.iter().map(|s| s.as_str()).collect()
}

impl fmt::Display for Poly {
    /// Canonical printing: graded-lex descending terms, `*` between factors,
    /// `^` for exponents, compound coefficients parenthesized.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut keys: Vec<&Vec<u32>> = self.terms.keys().collect();
        keys.sort_by(|a, b| cmp_grlex(b, a));
        let mut first = true;
        for e in keys {
            let c = &self.terms[e];
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &exp)| exp > 0)
                .map(|(i, &exp)| {
                    if exp == 1 {
                        self.vars[i].clone()
                    } else {
                        format!("{}^{}", self.vars[i], exp)
                    }
                })
                .collect();
            let is_const_term = mono.is_empty();
            let compound = !c.rational_part.is_zero() && !c.surd_part.is_zero();
            if compound {
                if first {
                    write!(f, "({})", c)?;
                } else {
                    write!(f, " + ({})", c)?;
                }
                if !is_const_term {
                    write!(f, "*{}", mono.join("*"))?;
                }
            } else {
                let sign = c.sign();
                let abs = c.abs();
                let coeff_str = format!("{}", abs);
                if first {
                    if sign < 0 {
                        write!(f, "-")?;
                    }
                } else if sign < 0 {
                    write!(f, " - ")?;
                } else {
                    write!(f, " + ")?;
                }
                if is_const_term {
                    write!(f, "{}", coeff_str)?;
                } else if abs.is_one() {
                    write!(f, "{}", mono.join("*"))?;
                } else {
                    write!(f, "{}*{}", coeff_str, mono.join("*"))?;
                }
            }
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

/// Reduced rational function P/Q: coprime, denominator content-normalized
/// with positive graded-lex leading coefficient.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl RatFunc {
    /// Builds the reduced form of `num/den`.
    pub fn new(num: Poly, den: Poly) -> Result<RatFunc> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        let (num, den) = Poly::aligned(&num, &den);
        if num.is_zero() {
            let vars = num.vars.clone();
            return Ok(RatFunc { num, den: Poly::constant_owned(vars, AlgNum::one()) });
        }
        let g = poly_gcd(&num, &den);
        let (mut num, mut den) = if g.is_constant() {
            (num, den)
        } else {
            (num.div_exact(&g).expect("gcd divides"), den.div_exact(&g).expect("gcd divides"))
        };
        // Canonical scaling: den primitive with positive leading coefficient.
        let (dnorm, f) = den.normalized_primitive();
        den = dnorm;
        num = num.scale(&AlgNum::from_rational(f.recip()));
        Ok(RatFunc { num, den })
    }

    pub fn from_poly(p: Poly) -> RatFunc {
        let one = Poly::constant_owned(p.vars().to_vec(), AlgNum::one());
        RatFunc { num: p, den: one }
    }

    pub fn constant(vars: &[&str], c: AlgNum) -> RatFunc {
        RatFunc::from_poly(Poly::constant(vars, c))
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_constant()
    }

    pub fn vars(&self) -> &[String] {
        self.num.vars()
    }

    pub fn with_vars(&self, vars: &[String]) -> Result<RatFunc> {
        RatFunc::new(self.num.with_vars(vars)?, self.den.with_vars(vars)?)
    }

    pub fn neg(&self) -> RatFunc {
        RatFunc { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn add(&self, other: &RatFunc) -> RatFunc {
        RatFunc::new(
            self.num.mul(&other.den).add(&other.num.mul(&self.den)),
            self.den.mul(&other.den),
        )
        .expect("nonzero denominators")
    }

    pub fn sub(&self, other: &RatFunc) -> RatFunc {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &RatFunc) -> RatFunc {
        RatFunc::new(self.num.mul(&other.num), self.den.mul(&other.den)).expect("nonzero denominators")
    }

    pub fn div(&self, other: &RatFunc) -> Result<RatFunc> {
        if other.is_zero() {
            return Err(Error::DivisionByZero);
        }
        RatFunc::new(self.num.mul(&other.den), self.den.mul(&other.num))
    }

    pub fn scale(&self, c: &AlgNum) -> RatFunc {
        RatFunc::new(self.num.scale(c), self.den.clone()).expect("nonzero denominator")
    }

    /// Exact evaluation; error on a pole.
    pub fn eval(&self, point: &[AlgNum]) -> Result<AlgNum> {
        let d = self.den.eval(point);
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        self.num.eval(point).checked_div(&d)
    }

    /// Substitute polynomials for the variables in both parts.
    pub fn compose_poly(&self, images: &[Poly]) -> Result<RatFunc> {
        RatFunc::new(self.num.eval_poly(images), self.den.eval_poly(images))
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_constant() && self.den.constant_value().map(|c| c.is_one()).unwrap_or(false) {
            return write!(f, "{}", self.num);
        }
        let num_simple = self.num.num_terms() <= 1;
        if num_simple {
            write!(f, "{}/({})", self.num, self.den)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;

    fn p(src: &str) -> Poly {
        parse_poly(src, &["x", "y"], 2).unwrap()
    }

    #[test]
    fn homogenize_examples() {
        // x² + y − 1 with t → x² + yt − t²
        let q = parse_poly("x^2 + y - 1", &["x", "y"], 0).unwrap();
        let h = q.homogenize("t").unwrap();
        let expected = parse_poly("x^2 + y*t - t^2", &["x", "y", "t"], 0).unwrap();
        assert_eq!(h, expected);
        // constant stays put
        let c = parse_poly("5", &["x"], 0).unwrap();
        assert_eq!(c.homogenize("t").unwrap().dehomogenize("t"), c);
        // 1 + x² → t² + x²
        let q = parse_poly("1 + x^2", &["x"], 0).unwrap();
        let h = q.homogenize("t").unwrap();
        assert_eq!(h, parse_poly("t^2 + x^2", &["x", "t"], 0).unwrap());
    }

    #[test]
    fn dehomogenize_round_trip() {
        let q = p("x^3 - y + 2*x*y");
        let h = q.homogenize("t").unwrap();
        assert_eq!(h.dehomogenize("t"), q);
    }

    #[test]
    fn components_at_origin() {
        // x³ − y(1+x²) about 0 → f₍₁₎ = −y, f₍₃₎ = x³ − x²y
        let q = p("x^3 - y*(1+x^2)");
        let comps = q.homogeneous_components_at(&[AlgNum::zero(), AlgNum::zero()]);
        assert_eq!(comps.len(), 2);
        assert_eq!(comps[0], (1, p("-y")));
        assert_eq!(comps[1], (3, p("x^3 - x^2*y")));
    }

    #[test]
    fn components_at_shifted_center() {
        // x² + y² at (1,0): f₀ = 1, f₁ = 2x, f₂ = x² + y² in shifted coords.
        let q = p("x^2 + y^2");
        let comps = q.homogeneous_components_at(&[AlgNum::from_int(1), AlgNum::zero()]);
        assert_eq!(comps[0], (0, p("1")));
        assert_eq!(comps[1], (1, p("2*x")));
        assert_eq!(comps[2], (2, p("x^2 + y^2")));
        // Reassembly: shifting the sum back recovers the polynomial.
        let sum = comps.iter().fold(Poly::zero(&["x", "y"]), |acc, (_, c)| acc.add(c));
        let back = sum.shift(&[AlgNum::from_int(-1), AlgNum::zero()]);
        assert_eq!(back, q);
    }

    #[test]
    fn tangent_cone_examples() {
        let origin = [AlgNum::zero(), AlgNum::zero()];
        let (cone, k) = p("x^3 - y*(1+x^2)").tangent_cone_at(&origin).unwrap();
        assert_eq!((cone, k), (p("-y"), 1));
        let (cone, k) = p("x*y").tangent_cone_at(&origin).unwrap();
        assert_eq!((cone, k), (p("x*y"), 2));
        // x²(y+x)(y²+x⁴)+y⁵ → y²(x³+x²y+y³), order 5
        let (cone, k) = p("x^2*(y+x)*(y^2+x^4) + y^5").tangent_cone_at(&origin).unwrap();
        assert_eq!(k, 5);
        assert_eq!(cone, p("y^2*(x^3 + x^2*y + y^3)"));
    }

    #[test]
    fn exact_division() {
        let a = p("x^2 - y^2");
        let b = p("x - y");
        assert_eq!(a.div_exact(&b).unwrap(), p("x + y"));
        assert!(p("x^2 + y").div_exact(&b).is_none());
    }

    #[test]
    fn ratfunc_reduction_examples() {
        // (x²y, xy) → (x, 1)
        let r = RatFunc::new(p("x^2*y"), p("x*y")).unwrap();
        assert_eq!(r.num(), &p("x"));
        assert!(r.is_polynomial());
        // (x²−1, x−1) → (x+1, 1)
        let r = RatFunc::new(p("x^2-1"), p("x-1")).unwrap();
        assert_eq!(r.num(), &p("x+1"));
        // Example pullback pair: (y², y²(1+y²)) → 1/(1+y²)
        let y2 = parse_poly("y^2", &["y"], 0).unwrap();
        let den = parse_poly("y^2*(1+y^2)", &["y"], 0).unwrap();
        let r = RatFunc::new(y2, den).unwrap();
        assert_eq!(format!("{}", r), "1/(y^2 + 1)");
    }

    #[test]
    fn display_round_trip_negative_leading() {
        let q = p("1 - y - x^2*y");
        assert_eq!(format!("{}", q), "-x^2*y - y + 1");
        assert_eq!(parse_poly("-x^2*y - y + 1", &["x", "y"], 0).unwrap(), q);
    }

    #[test]
    fn surd_coefficient_display() {
        let q = parse_poly("-x*y + x + sqrt(2)", &["x", "y"], 2).unwrap();
        assert_eq!(format!("{}", q), "-x*y + x + sqrt(2)");
        let r = parse_poly("(1 + sqrt(2))*x - 2", &["x"], 2).unwrap();
        assert_eq!(format!("{}", r), "(1 + sqrt(2))*x - 2");
    }
}
