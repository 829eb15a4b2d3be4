//! Univariate real-root isolation (Descartes' rule with bisection, exact
//! arithmetic throughout) and exact extraction of roots lying in ℚ(√n).

use super::{resultant, Poly};
use crate::exactnum::AlgNum;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Rational interval; `lo == hi` marks an exactly known root.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Interval1 {
    pub lo: BigRational,
    pub hi: BigRational,
}

impl Interval1 {
    pub fn point(x: BigRational) -> Self {
        Interval1 { lo: x.clone(), hi: x }
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> BigRational {
        (&self.lo + &self.hi) / BigRational::from_integer(BigInt::from(2))
    }

    pub fn contains(&self, x: &BigRational) -> bool {
        self.lo <= *x && *x <= self.hi
    }
}

// --- dense univariate helpers over AlgNum -------------------------------

fn trim(coeffs: &mut Vec<AlgNum>) {
    while coeffs.last().map(|c| c.is_zero()).unwrap_or(false) {
        coeffs.pop();
    }
}

pub(crate) fn uni_eval(coeffs: &[AlgNum], x: &BigRational) -> AlgNum {
    let xa = AlgNum::from_rational(x.clone());
    let mut acc = AlgNum::zero();
    for c in coeffs.iter().rev() {
        acc = acc.checked_mul(&xa).unwrap().checked_add(c).unwrap();
    }
    acc
}

fn uni_derive(coeffs: &[AlgNum]) -> Vec<AlgNum> {
    coeffs
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c.checked_mul(&AlgNum::from_int(i as i64)).unwrap())
        .collect()
}

/// Synthetic division by (t − root); returns the quotient when the remainder
/// vanishes exactly.
fn uni_divide_root(coeffs: &[AlgNum], root: &AlgNum) -> Option<Vec<AlgNum>> {
    let n = coeffs.len();
    if n == 0 {
        return None;
    }
    let mut q = vec![AlgNum::zero(); n - 1];
    let mut carry = AlgNum::zero();
    for i in (0..n).rev() {
        let v = coeffs[i].checked_add(&carry.checked_mul(root).unwrap()).unwrap();
        if i == 0 {
            if !v.is_zero() {
                return None;
            }
        } else {
            q[i - 1] = v.clone();
            carry = v;
        }
    }
    Some(q)
}

/// Plain Euclidean GCD over the coefficient field, remainder made monic each
/// step to keep coefficients small.
fn uni_gcd(a: &[AlgNum], b: &[AlgNum]) -> Vec<AlgNum> {
    let mut f: Vec<AlgNum> = a.to_vec();
    let mut g: Vec<AlgNum> = b.to_vec();
    trim(&mut f);
    trim(&mut g);
    while !g.is_empty() {
        let r = uni_rem(&f, &g);
        f = g;
        g = r;
        trim(&mut g);
        if let Some(lc) = g.last().cloned() {
            let inv = lc.inverse().unwrap();
            for c in g.iter_mut() {
                *c = c.checked_mul(&inv).unwrap();
            }
        }
    }
    if let Some(lc) = f.last().cloned() {
        let inv = lc.inverse().unwrap();
        for c in f.iter_mut() {
            *c = c.checked_mul(&inv).unwrap();
        }
    }
    f
}

fn uni_rem(a: &[AlgNum], b: &[AlgNum]) -> Vec<AlgNum> {
    let mut r: Vec<AlgNum> = a.to_vec();
    trim(&mut r);
    let db = b.len() - 1;
    let lcb = b.last().unwrap();
    while r.len() >= b.len() && !r.is_empty() {
        let dr = r.len() - 1;
        let factor = r.last().unwrap().checked_div(lcb).unwrap();
        let shift = dr - db;
        for (i, bc) in b.iter().enumerate() {
            let delta = factor.checked_mul(bc).unwrap();
            r[shift + i] = r[shift + i].checked_sub(&delta).unwrap();
        }
        trim(&mut r);
    }
    r
}

fn square_free_part(coeffs: &[AlgNum]) -> Vec<AlgNum> {
    let d = uni_derive(coeffs);
    if d.iter().all(|c| c.is_zero()) {
        return coeffs.to_vec();
    }
    let g = uni_gcd(coeffs, &d);
    if g.len() <= 1 {
        return coeffs.to_vec();
    }
    uni_div_exact(coeffs, &g)
}

fn uni_div_exact(a: &[AlgNum], b: &[AlgNum]) -> Vec<AlgNum> {
    let mut r: Vec<AlgNum> = a.to_vec();
    trim(&mut r);
    let db = b.len() - 1;
    let lcb = b.last().unwrap();
    let mut q = vec![AlgNum::zero(); r.len().saturating_sub(db)];
    while r.len() >= b.len() && !r.is_empty() {
        let dr = r.len() - 1;
        let factor = r.last().unwrap().checked_div(lcb).unwrap();
        let shift = dr - db;
        q[shift] = factor.clone();
        for (i, bc) in b.iter().enumerate() {
            let delta = factor.checked_mul(bc).unwrap();
            r[shift + i] = r[shift + i].checked_sub(&delta).unwrap();
        }
        trim(&mut r);
    }
    q
}

fn descartes_variations(coeffs: &[AlgNum]) -> usize {
    let mut count = 0;
    let mut last = 0i32;
    for c in coeffs {
        let s = c.sign();
        if s == 0 {
            continue;
        }
        if last != 0 && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

/// Taylor shift: returns coefficients of p(x + 1).
fn shift_by_one(coeffs: &[AlgNum]) -> Vec<AlgNum> {
    let n = coeffs.len();
    let mut out = vec![AlgNum::zero(); n];
    // Pascal-row accumulation: out[j] = Σ_i C(i, j) a_i.
    for (i, a) in coeffs.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        let mut binom = BigInt::one();
        for j in 0..=i {
            let b = AlgNum::from_rational(BigRational::from_integer(binom.clone()));
            out[j] = out[j].checked_add(&a.checked_mul(&b).unwrap()).unwrap();
            // C(i, j+1) = C(i, j)·(i−j)/(j+1)
            binom = binom * BigInt::from((i - j) as i64) / BigInt::from((j + 1) as i64);
        }
    }
    out
}

/// Coefficients of (x+1)^n · p(1/(x+1)): reverse then shift.
fn mobius_01(coeffs: &[AlgNum]) -> Vec<AlgNum> {
    let rev: Vec<AlgNum> = coeffs.iter().rev().cloned().collect();
    shift_by_one(&rev)
}

/// Coefficients of p(x/2) (scaled by nothing; roots in (0,1) ↦ (0,2)).
fn scale_half(coeffs: &[AlgNum]) -> Vec<AlgNum> {
    let two = BigRational::from_integer(BigInt::from(2));
    let mut pow = BigRational::one();
    coeffs
        .iter()
        .map(|c| {
            let v = c.checked_mul(&AlgNum::from_rational(pow.clone().recip())).unwrap();
            pow = &pow * &two;
            v
        })
        .collect()
}

/// Rational upper bound on |a| using √n ≤ (n+1)/2 for n ≥ 1.
fn magnitude_bound(a: &AlgNum) -> BigRational {
    let mut m = a.rational_part.abs();
    if !a.surd_part.is_zero() {
        let s = BigRational::from_integer(BigInt::from(a.radicand + 1))
            / BigRational::from_integer(BigInt::from(2));
        m += a.surd_part.abs() * s;
    }
    m
}

/// Isolating intervals for the distinct real roots of the polynomial with
/// dense coefficient list `coeffs` (constant term first). Exact roots are
/// reported as point intervals.
pub fn isolate_real_roots(coeffs: &[AlgNum]) -> Vec<Interval1> {
    let mut c = coeffs.to_vec();
    trim(&mut c);
    assert!(!c.is_empty(), "zero polynomial");
    if c.len() == 1 {
        return Vec::new();
    }
    // Pull out the root at zero.
    let zmult = c.iter().take_while(|v| v.is_zero()).count();
    let mut out = Vec::new();
    if zmult > 0 {
        c.drain(0..zmult);
        out.push(Interval1::point(BigRational::zero()));
    }
    if c.len() == 1 {
        return out;
    }
    let sf = square_free_part(&c);
    // Cauchy bound.
    let lc = magnitude_bound(sf.last().unwrap());
    let lc_exact = sf.last().unwrap();
    let mut maxq = BigRational::zero();
    for a in &sf[..sf.len() - 1] {
        // |a_i| / |lc| ≤ bound(a_i) / lower-bound(|lc|): use bound(a_i)/|lc|
        // when lc is rational; otherwise fall back on a crude rational bound.
        let q = if lc_exact.is_rational() {
            magnitude_bound(a) / lc_exact.rational_part.abs()
        } else {
            // |lc| ≥ |bound(lc_conj)|⁻¹·|N(lc)| is fiddly; use interval bound.
            let (flo, fhi) = lc_exact.to_f64_bounds();
            let mag = flo.abs().min(fhi.abs());
            let denom = BigRational::from_float(if mag > 0.0 { mag } else { 1e-9 })
                .unwrap_or_else(|| BigRational::new(BigInt::one(), BigInt::from(1_000_000_000)));
            magnitude_bound(a) / denom
        };
        if q > maxq {
            maxq = q;
        }
    }
    let bound = BigRational::one() + maxq;
    let _ = lc;
    // Positive side (0, B]: roots of p(B·x) on (0,1].
    let pos = isolate_unit(&substitute_scale(&sf, &bound), &bound, false);
    // Negative side: roots of p(−B·x) on (0,1].
    let neg_poly: Vec<AlgNum> = substitute_scale(&sf, &bound)
        .iter()
        .enumerate()
        .map(|(i, v)| if i % 2 == 1 { -v.clone() } else { v.clone() })
        .collect();
    let neg = isolate_unit(&neg_poly, &bound, true);
    out.extend(neg.into_iter().rev());
    out.extend(pos);
    out.sort_by(|a, b| a.lo.cmp(&b.lo));
    out
}

/// Coefficients of p(B·x).
fn substitute_scale(coeffs: &[AlgNum], b: &BigRational) -> Vec<AlgNum> {
    let mut pow = BigRational::one();
    coeffs
        .iter()
        .map(|c| {
            let v = c.checked_mul(&AlgNum::from_rational(pow.clone())).unwrap();
            pow = &pow * b;
            v
        })
        .collect()
}

/// Descartes/VCA isolation of roots of `p` in (0, 1); images mapped through
/// x ↦ ±B·x into the caller's coordinates.
fn isolate_unit(p: &[AlgNum], scale: &BigRational, negate: bool) -> Vec<Interval1> {
    let mut out = Vec::new();
    let mut stack: Vec<(Vec<AlgNum>, BigRational, BigRational)> =
        vec![(p.to_vec(), BigRational::zero(), BigRational::one())];
    let map = |t: &BigRational| -> BigRational {
        let v = t * scale;
        if negate {
            -v
        } else {
            v
        }
    };
    while let Some((q, lo, hi)) = stack.pop() {
        let m = mobius_01(&q);
        match descartes_variations(&m) {
            0 => {}
            1 => {
                let (a, b) = (map(&lo), map(&hi));
                let (a, b) = if a <= b { (a, b) } else { (b, a) };
                out.push(Interval1 { lo: a, hi: b });
            }
            _ => {
                let mid = (&lo + &hi) / BigRational::from_integer(BigInt::from(2));
                let left = scale_half(&q);
                let right = shift_by_one(&left);
                if uni_eval(&q, &BigRational::new(BigInt::one(), BigInt::from(2))).is_zero() {
                    out.push(Interval1::point(map(&mid)));
                }
                stack.push((right, mid.clone(), hi));
                stack.push((left, lo, mid));
            }
        }
    }
    out.sort_by(|a, b| a.lo.cmp(&b.lo));
    out
}

/// Bisects an isolating interval of `coeffs` until it is narrower than
/// `width`. The interval must bracket a sign change (or be a point).
pub fn refine_root(coeffs: &[AlgNum], iv: &Interval1, width: &BigRational) -> Interval1 {
    if iv.lo == iv.hi {
        return iv.clone();
    }
    let sf = square_free_part(coeffs);
    let mut lo = iv.lo.clone();
    let mut hi = iv.hi.clone();
    let mut slo = uni_eval(&sf, &lo).sign();
    loop {
        if &(&hi - &lo) < width {
            return Interval1 { lo, hi };
        }
        let mid = (&lo + &hi) / BigRational::from_integer(BigInt::from(2));
        let smid = uni_eval(&sf, &mid).sign();
        if smid == 0 {
            return Interval1::point(mid);
        }
        if smid == slo {
            lo = mid;
        } else {
            hi = mid;
        }
        slo = uni_eval(&sf, &lo).sign();
    }
}

/// The rational with smallest denominator in [lo, hi], by the classic
/// continued-fraction descent.
pub(crate) fn simplest_rational_in(lo: &BigRational, hi: &BigRational) -> BigRational {
    assert!(lo <= hi);
    if !lo.is_positive() && !hi.is_negative() {
        return BigRational::zero();
    }
    if hi.is_negative() {
        return -simplest_rational_in(&-hi.clone(), &-lo.clone());
    }
    // 0 < lo ≤ hi.
    let c = lo.ceil();
    if c <= *hi {
        return c;
    }
    let n = lo.floor();
    let frac = simplest_rational_in(&(hi - &n).recip(), &(lo - &n).recip());
    n + frac.recip()
}

/// All roots of the univariate polynomial `coeffs` that lie in ℚ(√n)
/// (`radicand` = n; pass 0 for plain ℚ), with multiplicities, plus the
/// remaining factor after dividing the found linear factors out.
pub fn surd_roots(coeffs: &[AlgNum], radicand: u64) -> (Vec<(AlgNum, u32)>, Vec<AlgNum>) {
    let mut c = coeffs.to_vec();
    trim(&mut c);
    assert!(!c.is_empty(), "zero polynomial");
    let mut found: Vec<(AlgNum, u32)> = Vec::new();
    // Root at zero.
    let zmult = c.iter().take_while(|v| v.is_zero()).count();
    if zmult > 0 {
        c.drain(0..zmult);
        found.push((AlgNum::zero(), zmult as u32));
    }
    let mut candidates: Vec<AlgNum> = rational_root_candidates(&c);
    if radicand >= 2 {
        candidates.extend(surd_root_candidates(&c, radicand));
    }
    for cand in candidates {
        let mut mult = 0u32;
        while let Some(q) = uni_divide_root(&c, &cand) {
            c = q;
            mult += 1;
        }
        if mult > 0 {
            found.push((cand, mult));
        }
    }
    found.sort_by(|a, b| a.0.cmp_value(&b.0));
    (found, c)
}

/// Candidate rational roots via isolation plus simplest-rational
/// reconstruction with a denominator bound.
fn rational_root_candidates(coeffs: &[AlgNum]) -> Vec<AlgNum> {
    if coeffs.len() <= 1 {
        return Vec::new();
    }
    // A rational root must kill both the rational and the surd part.
    let rat: Vec<AlgNum> = coeffs.iter().map(|c| AlgNum::from_rational(c.rational_part.clone())).collect();
    let surd: Vec<AlgNum> = coeffs.iter().map(|c| AlgNum::from_rational(c.surd_part.clone())).collect();
    let mut target: Vec<AlgNum> = if surd.iter().all(|c| c.is_zero()) {
        rat
    } else if rat.iter().all(|c| c.is_zero()) {
        surd
    } else {
        uni_gcd(&rat, &surd)
    };
    trim(&mut target);
    if target.len() <= 1 {
        return Vec::new();
    }
    // Integer-scale: common denominator.
    let mut den = BigInt::one();
    for c in &target {
        den = num_integer::lcm(den, c.rational_part.denom().clone());
    }
    let scaled: Vec<BigRational> =
        target.iter().map(|c| &c.rational_part * BigRational::from_integer(den.clone())).collect();
    let lc = scaled.last().unwrap().numer().abs();
    let lc_sq = BigRational::from_integer(&lc * &lc);
    let eps = (BigRational::one() / lc_sq) / BigRational::from_integer(BigInt::from(4));
    let mut out = Vec::new();
    for iv in isolate_real_roots(&target) {
        if iv.lo == iv.hi {
            out.push(AlgNum::from_rational(iv.lo));
            continue;
        }
        let fine = refine_root(&target, &iv, &eps);
        if fine.lo == fine.hi {
            out.push(AlgNum::from_rational(fine.lo));
            continue;
        }
        let cand = simplest_rational_in(&fine.lo, &fine.hi);
        if cand.denom() <= &lc && uni_eval(&target, &cand).is_zero() {
            out.push(AlgNum::from_rational(cand));
        }
    }
    out
}

/// Candidates a + b√n found by solving the rational/surd split of
/// g(a + b√n) = 0 with resultants.
fn surd_root_candidates(coeffs: &[AlgNum], radicand: u64) -> Vec<AlgNum> {
    let vars = ["u", "v"];
    let sqrt_n = AlgNum::sqrt(radicand).expect("square-free radicand");
    let image = Poly::var(&vars, "u").add(&Poly::var(&vars, "v").scale(&sqrt_n));
    // g(u + v√n) expanded as a polynomial in (u, v).
    let mut acc = Poly::zero(&vars);
    let mut pow = Poly::one(&vars);
    for (i, c) in coeffs.iter().enumerate() {
        if i > 0 {
            pow = pow.mul(&image);
        }
        if !c.is_zero() {
            acc = acc.add(&pow.scale(c));
        }
    }
    // Split coefficients into rational and surd parts.
    let mut u_poly = Poly::zero(&vars);
    let mut v_poly = Poly::zero(&vars);
    for (e, c) in acc.terms() {
        if !c.rational_part.is_zero() {
            u_poly = u_poly.add(&Poly::from_terms(
                acc.vars().to_vec(),
                [(e.clone(), AlgNum::from_rational(c.rational_part.clone()))],
            ));
        }
        if !c.surd_part.is_zero() {
            v_poly = v_poly.add(&Poly::from_terms(
                acc.vars().to_vec(),
                [(e.clone(), AlgNum::from_rational(c.surd_part.clone()))],
            ));
        }
    }
    if u_poly.is_zero() || v_poly.is_zero() {
        return Vec::new();
    }
    // b = 0 is the rational case; remove plain v factors.
    let vord = v_poly.var_order("v");
    let v_red = v_poly.shift_down("v", vord);
    let res_u = resultant(&u_poly, &v_red, "v");
    let mut out = Vec::new();
    let a_candidates: Vec<AlgNum> = if res_u.is_zero() {
        return Vec::new();
    } else {
        match res_u.to_univariate("u") {
            Some(cs) => rational_root_candidates(&cs),
            None => return Vec::new(),
        }
    };
    for a0 in a_candidates {
        // Specialize and intersect.
        let u_spec = u_poly.subst_var("u", &Poly::constant(&vars, a0.clone()));
        let v_spec = v_red.subst_var("u", &Poly::constant(&vars, a0.clone()));
        let (ucs, vcs) = match (u_spec.to_univariate("v"), v_spec.to_univariate("v")) {
            (Some(a), Some(b)) => (a, b),
            _ => continue,
        };
        let g = if ucs.iter().all(|c| c.is_zero()) {
            vcs
        } else if vcs.iter().all(|c| c.is_zero()) {
            ucs
        } else {
            uni_gcd(&ucs, &vcs)
        };
        if g.len() <= 1 {
            continue;
        }
        for b0 in rational_root_candidates(&g) {
            if b0.is_zero() {
                continue;
            }
            let cand = a0
                .checked_add(&b0.checked_mul(&sqrt_n).unwrap())
                .unwrap();
            if uni_eval_algnum(coeffs, &cand).is_zero() {
                out.push(cand);
            }
        }
    }
    out
}

pub(crate) fn uni_eval_algnum(coeffs: &[AlgNum], x: &AlgNum) -> AlgNum {
    let mut acc = AlgNum::zero();
    for c in coeffs.iter().rev() {
        acc = acc.checked_mul(x).unwrap().checked_add(c).unwrap();
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn coeffs(v: &[i64]) -> Vec<AlgNum> {
        v.iter().map(|&x| AlgNum::from_int(x)).collect()
    }

    #[test]
    fn isolates_sqrt2() {
        // x² − 2: two roots
        let ivs = isolate_real_roots(&coeffs(&[-2, 0, 1]));
        assert_eq!(ivs.len(), 2);
        assert!(ivs[0].hi < BigRational::zero());
        assert!(ivs[1].lo > BigRational::zero());
        let w = BigRational::new(BigInt::one(), BigInt::from(1000));
        let r = refine_root(&coeffs(&[-2, 0, 1]), &ivs[1], &w);
        let mid = r.midpoint();
        let mid_f = mid.numer().to_string().parse::<f64>().unwrap()
            / mid.denom().to_string().parse::<f64>().unwrap();
        assert!((mid_f - std::f64::consts::SQRT_2).abs() < 1e-2);
    }

    #[test]
    fn no_real_roots() {
        assert!(isolate_real_roots(&coeffs(&[1, 0, 1])).is_empty());
    }

    #[test]
    fn three_roots_of_cubic() {
        // x³ − x: roots −1, 0, 1
        let ivs = isolate_real_roots(&coeffs(&[0, -1, 0, 1]));
        assert_eq!(ivs.len(), 3);
    }

    #[test]
    fn multiple_root_counted_once() {
        // (x−1)²(x+2)
        let ivs = isolate_real_roots(&coeffs(&[2, -3, 0, 1]));
        assert_eq!(ivs.len(), 2);
    }

    #[test]
    fn rational_roots_extracted() {
        // (2x−3)(x+5)x = 2x³ + 7x² − 15x
        let (roots, rest) = surd_roots(&coeffs(&[0, -15, 7, 2]), 0);
        assert_eq!(roots.len(), 3);
        assert_eq!(rest.len(), 1);
        let vals: Vec<String> = roots.iter().map(|(r, _)| r.to_string()).collect();
        assert!(vals.contains(&"3/2".to_string()));
        assert!(vals.contains(&"-5".to_string()));
        assert!(vals.contains(&"0".to_string()));
    }

    #[test]
    fn surd_roots_extracted() {
        // x² − 2 over ℚ(√2)
        let (roots, rest) = surd_roots(&coeffs(&[-2, 0, 1]), 2);
        assert_eq!(roots.len(), 2);
        assert_eq!(rest.len(), 1);
        let sqrt2 = AlgNum::sqrt(2).unwrap();
        assert!(roots.iter().any(|(r, _)| *r == sqrt2));
        // Same polynomial over plain ℚ: nothing extracted.
        let (roots, rest) = surd_roots(&coeffs(&[-2, 0, 1]), 0);
        assert!(roots.is_empty());
        assert_eq!(rest.len(), 3);
    }

    #[test]
    fn mixed_surd_root() {
        // (x − (1+√2))(x − 3) with √2 coefficients
        let sqrt2 = AlgNum::sqrt(2).unwrap();
        let alpha = AlgNum::from_int(1).checked_add(&sqrt2).unwrap();
        let three = AlgNum::from_int(3);
        let c0 = alpha.checked_mul(&three).unwrap();
        let c1 = -(alpha.checked_add(&three).unwrap());
        let cs = vec![c0, c1, AlgNum::from_int(1)];
        let (roots, rest) = surd_roots(&cs, 2);
        assert_eq!(roots.len(), 2);
        assert_eq!(rest.len(), 1);
        assert!(roots.iter().any(|(r, _)| *r == alpha));
    }

    #[test]
    fn simplest_rational() {
        let lo = BigRational::new(BigInt::from(141), BigInt::from(100));
        let hi = BigRational::new(BigInt::from(142), BigInt::from(100));
        let m = simplest_rational_in(&lo, &hi);
        assert_eq!(m, BigRational::new(BigInt::from(17), BigInt::from(12)));
    }
}
