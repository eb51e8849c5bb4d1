//! Exact Hurwitz stability: right-half-plane root counting over the
//! rationals, cross-checked by a floating-point root finder.
//!
//! The exact count works on the squarefree part. Common roots of the even
//! and odd parts (which include every imaginary-axis root) are split off
//! by a gcd; they form an even polynomial whose right-half-plane roots are
//! counted through the negative real roots of its dehomogenization by a
//! Sturm sequence. What remains is handled by a Cauchy-index computation
//! on the real and imaginary parts along the imaginary axis, via signed
//! remainder sequences. Imaginary-axis roots never count as unstable.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::analysis::IntPolynomial;
use crate::error::Error;
use crate::Result;

/// Outcome of a stability test.
#[derive(Debug, Clone, PartialEq)]
pub struct StabilityReport {
    pub stable: bool,
    pub rhp_count: u32,
    /// A numerically located right-half-plane root, for diagnostics only.
    pub witness_root: Option<(f64, f64)>,
}

/// Number of distinct roots with strictly positive real part, exactly.
pub fn rhp_root_count(p: &IntPolynomial) -> Result<u32> {
    let coeffs: Vec<BigRational> = p
        .coeffs()
        .iter()
        .map(|c| BigRational::from(c.clone()))
        .collect();
    rhp_root_count_rat(&coeffs)
}

/// Exact right-half-plane root count for a rational-coefficient polynomial.
pub fn rhp_root_count_rat(coeffs: &[BigRational]) -> Result<u32> {
    let p = Poly::new(coeffs.to_vec());
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    // Roots at the origin sit on the axis; drop them.
    let p = p.strip_zero_roots();
    let q = p.squarefree_part();
    Ok(rhp_squarefree(&q))
}

fn rhp_squarefree(q: &Poly) -> u32 {
    if q.degree() == 0 {
        return 0;
    }
    let (even, odd) = q.even_odd_split();
    let d = Poly::gcd(&even, &odd);
    if d.degree() > 0 {
        // d is an even polynomial whose roots are closed under negation;
        // its non-axis roots pair up across the axis.
        debug_assert!(d.coeffs.iter().skip(1).step_by(2).all(Zero::is_zero));
        let dehom = Poly::new(d.coeffs.iter().step_by(2).cloned().collect());
        let axis_pairs = dehom.count_negative_real_roots();
        let rhp_d = (d.degree() as u32 - 2 * axis_pairs) / 2;
        let rest = q.div_exact(&d);
        return rhp_d + rhp_squarefree(&rest);
    }
    // q(iy) = u(y) + i w(y); count by Cauchy index plus a boundary term.
    let (u, w) = q.axis_parts();
    debug_assert!(!u.is_zero());
    let index = cauchy_index(&u, &w);
    let boundary = if w.is_zero() || w.degree() < u.degree() {
        0
    } else {
        // Degrees have opposite parities, so their sum is odd here.
        if (u.lead().signum() * w.lead().signum()).is_positive() {
            1
        } else {
            -1
        }
    };
    let n = q.degree() as i64;
    let count = (n + index - boundary) / 2;
    debug_assert!(count >= 0 && (n + index - boundary) % 2 == 0);
    count as u32
}

/// Exact verdict with a floating-point cross-check.
///
/// The exact count is the source of truth; the numerical root finder is an
/// oracle. A stable verdict with a numerical root clearly in the right
/// half-plane, or an unstable verdict without one, raises
/// [`Error::OracleDisagreement`] instead of silently picking a side.
pub fn is_hurwitz_stable(p: &IntPolynomial) -> Result<StabilityReport> {
    let coeffs: Vec<BigRational> = p
        .coeffs()
        .iter()
        .map(|c| BigRational::from(c.clone()))
        .collect();
    is_hurwitz_stable_rat(&coeffs)
}

pub fn is_hurwitz_stable_rat(coeffs: &[BigRational]) -> Result<StabilityReport> {
    let rhp = rhp_root_count_rat(coeffs)?;
    let stable = rhp == 0;
    let p = Poly::new(coeffs.to_vec())
        .strip_zero_roots()
        .squarefree_part();
    let roots = numeric_roots(&p);
    let mut witness = None;
    for &(re, im) in &roots {
        let mag = libm::hypot(re, im);
        if stable {
            if re > 1e-9 * (1.0 + mag) {
                return Err(Error::OracleDisagreement(format_disagreement(
                    "exact verdict stable, numerical root in the right half-plane",
                    re,
                    im,
                )));
            }
        } else if re >= 1e-9 && witness.is_none() {
            witness = Some((re, im));
        }
    }
    if !stable && witness.is_none() {
        return Err(Error::OracleDisagreement(
            "exact verdict unstable, but no numerical root has positive real part".into(),
        ));
    }
    Ok(StabilityReport {
        stable,
        rhp_count: rhp,
        witness_root: witness,
    })
}

/// Number of numerically found roots with real part above `threshold`,
/// computed on the squarefree part. Diagnostic only.
pub fn numeric_rhp_count(p: &IntPolynomial, threshold: f64) -> Result<u32> {
    let coeffs: Vec<BigRational> = p
        .coeffs()
        .iter()
        .map(|c| BigRational::from(c.clone()))
        .collect();
    let q = Poly::new(coeffs).strip_zero_roots();
    if q.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let q = q.squarefree_part();
    Ok(numeric_roots(&q)
        .iter()
        .filter(|(re, _)| *re > threshold)
        .count() as u32)
}

/// All numerically located roots of the squarefree part.
pub fn numeric_root_list(p: &IntPolynomial) -> Result<Vec<(f64, f64)>> {
    let coeffs: Vec<BigRational> = p
        .coeffs()
        .iter()
        .map(|c| BigRational::from(c.clone()))
        .collect();
    let q = Poly::new(coeffs).strip_zero_roots();
    if q.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    Ok(numeric_roots(&q.squarefree_part()))
}

fn format_disagreement(msg: &str, re: f64, im: f64) -> String {
    alloc::format!("{msg} (root near {re} + {im}i)")
}

// ---------------------------------------------------------------------
// Exact polynomial arithmetic over the rationals.
// ---------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq, Eq)]
struct Poly {
    /// Coefficients by increasing degree, trailing zeros trimmed.
    coeffs: Vec<BigRational>,
}

impl Poly {
    fn new(mut coeffs: Vec<BigRational>) -> Poly {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    fn lead(&self) -> &BigRational {
        self.coeffs.last().expect("nonzero polynomial")
    }

    fn strip_zero_roots(&self) -> Poly {
        let k = self
            .coeffs
            .iter()
            .position(|c| !c.is_zero())
            .unwrap_or(self.coeffs.len());
        Poly::new(self.coeffs[k..].to_vec())
    }

    fn derivative(&self) -> Poly {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigRational::from(BigInt::from(i)))
                .collect(),
        )
    }

    fn monic(&self) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let l = self.lead().clone();
        Poly::new(self.coeffs.iter().map(|c| c / &l).collect())
    }

    /// Remainder of self by rhs (rhs nonzero).
    fn rem(&self, rhs: &Poly) -> Poly {
        let mut r = self.coeffs.clone();
        let dr = rhs.degree();
        let lead = rhs.lead();
        while r.len() > dr && !r.is_empty() {
            let Some(last) = r.last() else { break };
            if last.is_zero() {
                r.pop();
                continue;
            }
            let shift = r.len() - 1 - dr;
            let factor = last / lead;
            for (i, c) in rhs.coeffs.iter().enumerate() {
                let t = c * &factor;
                r[shift + i] -= t;
            }
            r.pop();
        }
        Poly::new(r)
    }

    /// Exact quotient; panics if the division is not exact.
    fn div_exact(&self, rhs: &Poly) -> Poly {
        let mut r = self.coeffs.clone();
        let dr = rhs.degree();
        let lead = rhs.lead();
        let mut q = vec![BigRational::zero(); self.coeffs.len().saturating_sub(dr)];
        while r.len() > dr {
            let Some(last) = r.last() else { break };
            if last.is_zero() {
                r.pop();
                continue;
            }
            let shift = r.len() - 1 - dr;
            let factor = last / lead;
            q[shift] = factor.clone();
            for (i, c) in rhs.coeffs.iter().enumerate() {
                let t = c * &factor;
                r[shift + i] -= t;
            }
            r.pop();
        }
        debug_assert!(r.iter().all(Zero::is_zero), "inexact polynomial division");
        Poly::new(q)
    }

    fn gcd(a: &Poly, b: &Poly) -> Poly {
        let mut a = a.clone();
        let mut b = b.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    fn squarefree_part(&self) -> Poly {
        if self.degree() == 0 {
            return self.monic();
        }
        let g = Poly::gcd(self, &self.derivative());
        if g.degree() == 0 {
            self.monic()
        } else {
            self.div_exact(&g).monic()
        }
    }

    /// Even-degree and odd-degree coefficient parts, as polynomials in x.
    fn even_odd_split(&self) -> (Poly, Poly) {
        let pick = |parity: usize| {
            Poly::new(
                self.coeffs
                    .iter()
                    .enumerate()
                    .map(|(i, c)| {
                        if i % 2 == parity {
                            c.clone()
                        } else {
                            BigRational::zero()
                        }
                    })
                    .collect(),
            )
        };
        (pick(0), pick(1))
    }

    /// Real and imaginary parts of `self(iy)` as real polynomials in `y`:
    /// `u` collects even powers with alternating signs, `w` odd powers.
    fn axis_parts(&self) -> (Poly, Poly) {
        let n = self.coeffs.len();
        let mut u = vec![BigRational::zero(); n];
        let mut w = vec![BigRational::zero(); n];
        for (k, c) in self.coeffs.iter().enumerate() {
            // i^k = 1, i, -1, -i cyclically.
            match k % 4 {
                0 => u[k] = c.clone(),
                1 => w[k] = c.clone(),
                2 => u[k] = -c.clone(),
                _ => w[k] = -c.clone(),
            }
        }
        (Poly::new(u), Poly::new(w))
    }

    /// Sign of the polynomial at +infinity / -infinity.
    fn sign_at_infinity(&self, positive: bool) -> i8 {
        if self.is_zero() {
            return 0;
        }
        let mut s = if self.lead().is_positive() { 1i8 } else { -1 };
        if !positive && self.degree() % 2 == 1 {
            s = -s;
        }
        s
    }

    /// Number of distinct real roots in `(-inf, 0)` by a Sturm sequence.
    fn count_negative_real_roots(&self) -> u32 {
        let q = self.squarefree_part();
        if q.degree() == 0 {
            return 0;
        }
        debug_assert!(!q.coeffs[0].is_zero(), "zero root must be excluded");
        let chain = sturm_chain(&q, &q.derivative());
        let v_minus = variations(chain.iter().map(|p| p.sign_at_infinity(false)));
        let v_zero = variations(chain.iter().map(|p| {
            let c = p.coeffs.first();
            match c {
                Some(c) if c.is_positive() => 1i8,
                Some(c) if c.is_negative() => -1,
                _ => 0,
            }
        }));
        debug_assert!(v_minus >= v_zero);
        v_minus - v_zero
    }
}

/// Signed remainder sequence starting from (a, b).
fn sturm_chain(a: &Poly, b: &Poly) -> Vec<Poly> {
    let mut chain = vec![a.clone()];
    if b.is_zero() {
        return chain;
    }
    chain.push(b.clone());
    loop {
        let k = chain.len();
        let r = chain[k - 2].rem(&chain[k - 1]);
        if r.is_zero() {
            return chain;
        }
        chain.push(Poly::new(r.coeffs.iter().map(|c| -c.clone()).collect()));
    }
}

fn variations(signs: impl Iterator<Item = i8>) -> u32 {
    let mut count = 0;
    let mut last = 0i8;
    for s in signs {
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

/// Cauchy index of `w/u` over the whole real line via the signed remainder
/// sequence of `(u, w)`.
fn cauchy_index(u: &Poly, w: &Poly) -> i64 {
    if w.is_zero() {
        return 0;
    }
    let chain = sturm_chain(u, w);
    let v_minus = variations(chain.iter().map(|p| p.sign_at_infinity(false)));
    let v_plus = variations(chain.iter().map(|p| p.sign_at_infinity(true)));
    i64::from(v_minus) - i64::from(v_plus)
}

// ---------------------------------------------------------------------
// Floating-point root finding (oracle only).
// ---------------------------------------------------------------------

#[derive(Debug, Clone, Copy)]
struct Cplx {
    re: f64,
    im: f64,
}

impl Cplx {
    fn new(re: f64, im: f64) -> Cplx {
        Cplx { re, im }
    }

    fn abs(self) -> f64 {
        libm::hypot(self.re, self.im)
    }

    fn mul(self, o: Cplx) -> Cplx {
        Cplx::new(
            self.re * o.re - self.im * o.im,
            self.re * o.im + self.im * o.re,
        )
    }

    fn sub(self, o: Cplx) -> Cplx {
        Cplx::new(self.re - o.re, self.im - o.im)
    }

    fn div(self, o: Cplx) -> Cplx {
        let d = o.re * o.re + o.im * o.im;
        Cplx::new(
            (self.re * o.re + self.im * o.im) / d,
            (self.im * o.re - self.re * o.im) / d,
        )
    }
}

/// Durand–Kerner iteration on a squarefree polynomial.
fn numeric_roots(p: &Poly) -> Vec<(f64, f64)> {
    let n = p.degree();
    if n == 0 {
        return Vec::new();
    }
    let lead = p.lead();
    let coeffs: Vec<f64> = p
        .coeffs
        .iter()
        .map(|c| (c / lead).to_f64().unwrap_or(0.0))
        .collect();
    let eval = |z: Cplx| {
        let mut acc = Cplx::new(0.0, 0.0);
        for c in coeffs.iter().rev() {
            acc = acc.mul(z);
            acc.re += c;
        }
        acc
    };
    let seed = Cplx::new(0.4, 0.9);
    let mut roots: Vec<Cplx> = Vec::with_capacity(n);
    let mut acc = Cplx::new(1.0, 0.0);
    for _ in 0..n {
        acc = acc.mul(seed);
        roots.push(acc);
    }
    for _ in 0..1000 {
        let mut delta: f64 = 0.0;
        for i in 0..n {
            let mut denom = Cplx::new(1.0, 0.0);
            for j in 0..n {
                if i != j {
                    denom = denom.mul(roots[i].sub(roots[j]));
                }
            }
            let step = eval(roots[i]).div(denom);
            roots[i] = roots[i].sub(step);
            delta = delta.max(step.abs());
        }
        if delta < 1e-13 {
            break;
        }
    }
    roots.into_iter().map(|z| (z.re, z.im)).collect()
}
