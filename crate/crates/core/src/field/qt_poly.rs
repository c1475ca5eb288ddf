//! Integer-exponent polynomials in the two parameters q and t with exact
//! rational coefficients, plus the bivariate GCD used to keep fractions
//! reduced.
//!
//! The GCD treats a polynomial as a univariate polynomial in q whose
//! coefficients live in Q[t] and runs a primitive-part pseudo-remainder
//! sequence. Degrees stay small here so this is entirely adequate.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Rat = BigRational;

pub fn rat_pow(base: &Rat, exp: u32) -> Rat {
    if exp == 0 {
        return Rat::one();
    }
    Rat::new(base.numer().pow(exp), base.denom().pow(exp))
}

/// A polynomial in q and t. Terms map (q-degree, t-degree) to a nonzero
/// rational coefficient; the BTreeMap keeps them in ascending lexicographic
/// order on (q-degree, t-degree), which is the canonical term order.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct QtPoly {
    terms: BTreeMap<(u32, u32), Rat>,
}

impl QtPoly {
    pub fn zero() -> Self {
        QtPoly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        QtPoly::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        QtPoly::monomial(0, 0, c)
    }

    pub fn monomial(qdeg: u32, tdeg: u32, c: Rat) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((qdeg, tdeg), c);
        }
        QtPoly { terms }
    }

    pub fn from_int(n: i64) -> Self {
        QtPoly::constant(Rat::from_integer(BigInt::from(n)))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&(0, 0))
                .map(|c| c.is_one())
                .unwrap_or(false)
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms.contains_key(&(0, 0)))
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &Rat)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Coefficient of the lexicographically greatest term; None for zero.
    pub fn lead_coeff(&self) -> Option<&Rat> {
        self.terms.values().next_back()
    }

    pub fn lead_term(&self) -> Option<(&(u32, u32), &Rat)> {
        self.terms.iter().next_back()
    }

    pub fn add_term(&mut self, exps: (u32, u32), c: &Rat) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(exps).or_insert_with(Rat::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&exps);
        }
    }

    pub fn add(&self, other: &QtPoly) -> QtPoly {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(*e, c);
        }
        out
    }

    pub fn sub(&self, other: &QtPoly) -> QtPoly {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(*e, &-c.clone());
        }
        out
    }

    pub fn neg(&self) -> QtPoly {
        QtPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect(),
        }
    }

    pub fn mul(&self, other: &QtPoly) -> QtPoly {
        let mut out = QtPoly::zero();
        for ((a1, b1), c1) in &self.terms {
            for ((a2, b2), c2) in &other.terms {
                out.add_term((a1 + a2, b1 + b2), &(c1 * c2));
            }
        }
        out
    }

    pub fn scale(&self, c: &Rat) -> QtPoly {
        if c.is_zero() {
            return QtPoly::zero();
        }
        QtPoly {
            terms: self.terms.iter().map(|(e, k)| (*e, k * c)).collect(),
        }
    }

    pub fn evaluate(&self, q0: &Rat, t0: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for ((a, b), c) in &self.terms {
            acc += c * rat_pow(q0, *a) * rat_pow(t0, *b);
        }
        acc
    }

    /// Positive rational content: gcd of coefficient numerators over lcm of
    /// denominators. Content of the zero polynomial is 1.
    pub fn content(&self) -> Rat {
        if self.is_zero() {
            return Rat::one();
        }
        let mut num_gcd = BigInt::zero();
        let mut den_lcm = BigInt::one();
        for c in self.terms.values() {
            num_gcd = num_integer::gcd(num_gcd, c.numer().abs());
            den_lcm = num_integer::lcm(den_lcm, c.denom().clone());
        }
        Rat::new(num_gcd, den_lcm)
    }

    /// Splits into (content, primitive part): primitive part has coprime
    /// integer coefficients and `self = content * primitive`.
    pub fn primitive(&self) -> (Rat, QtPoly) {
        if self.is_zero() {
            return (Rat::one(), QtPoly::zero());
        }
        let c = self.content();
        let inv = Rat::new(c.denom().clone(), c.numer().clone());
        (c, self.scale(&inv))
    }

    /// Exact division; None when `other` does not divide `self`.
    pub fn exact_div(&self, other: &QtPoly) -> Option<QtPoly> {
        if other.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(QtPoly::zero());
        }
        let ((da, db), dc) = other.lead_term().map(|(e, c)| (*e, c.clone())).unwrap();
        let mut rem = self.clone();
        let mut quot = QtPoly::zero();
        while let Some(((ra, rb), rc)) = rem.lead_term().map(|(e, c)| (*e, c.clone())) {
            if ra < da || rb < db {
                return None;
            }
            let qe = (ra - da, rb - db);
            let qc = rc / &dc;
            quot.add_term(qe, &qc);
            let piece = QtPoly::monomial(qe.0, qe.1, qc);
            rem = rem.sub(&piece.mul(other));
        }
        Some(quot)
    }

    pub fn pow(&self, e: u32) -> QtPoly {
        let mut out = QtPoly::one();
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    pub fn max_q_degree(&self) -> u32 {
        self.terms.keys().map(|(a, _)| *a).max().unwrap_or(0)
    }

    /// GCD in Q[q,t], returned with coprime integer coefficients and a
    /// positive coefficient at the lexicographically greatest term.
    pub fn gcd(&self, other: &QtPoly) -> QtPoly {
        if self.is_zero() {
            return canonical_unit(other.clone());
        }
        if other.is_zero() {
            return canonical_unit(self.clone());
        }
        let a = QPoly::from_qt(&self.primitive().1);
        let b = QPoly::from_qt(&other.primitive().1);
        let g = qpoly_gcd(a, b);
        canonical_unit(g.to_qt())
    }
}

/// Scales a polynomial to coprime integer coefficients with a positive
/// coefficient at the lexicographically greatest term.
fn canonical_unit(p: QtPoly) -> QtPoly {
    if p.is_zero() {
        return p;
    }
    let (_, mut prim) = p.primitive();
    if prim.lead_coeff().map(|c| c.is_negative()).unwrap_or(false) {
        prim = prim.neg();
    }
    prim
}

impl fmt::Display for QtPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", crate::field::text::render_poly(self))
    }
}

// ---------------------------------------------------------------------------
// Univariate helpers for the GCD: Q[t], and (Q[t])[q].
// ---------------------------------------------------------------------------

/// Dense univariate polynomial in t over Q, no trailing zeros.
#[derive(Debug, Clone, PartialEq)]
struct TPoly(Vec<Rat>);

impl TPoly {
    fn zero() -> Self {
        TPoly(Vec::new())
    }

    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    fn trim(mut self) -> Self {
        while self.0.last().map(|c| c.is_zero()).unwrap_or(false) {
            self.0.pop();
        }
        self
    }

    fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    fn lc(&self) -> &Rat {
        self.0.last().expect("lc of zero polynomial")
    }

    fn mul(&self, other: &TPoly) -> TPoly {
        if self.is_zero() || other.is_zero() {
            return TPoly::zero();
        }
        let mut out = vec![Rat::zero(); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in other.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        TPoly(out).trim()
    }

    fn sub(&self, other: &TPoly) -> TPoly {
        let n = self.0.len().max(other.0.len());
        let mut out = vec![Rat::zero(); n];
        for (i, a) in self.0.iter().enumerate() {
            out[i] += a;
        }
        for (i, b) in other.0.iter().enumerate() {
            out[i] -= b;
        }
        TPoly(out).trim()
    }

    fn scale(&self, c: &Rat) -> TPoly {
        if c.is_zero() {
            return TPoly::zero();
        }
        TPoly(self.0.iter().map(|k| k * c).collect())
    }

    /// Remainder of self / other by ordinary long division over Q.
    fn rem(&self, other: &TPoly) -> TPoly {
        let mut r = self.clone();
        let d = other.degree();
        let lc = other.lc().clone();
        while !r.is_zero() && r.degree() >= d {
            let shift = r.degree() - d;
            let factor = r.lc() / &lc;
            let mut sub = vec![Rat::zero(); shift];
            sub.extend(other.0.iter().map(|c| c * &factor));
            r = r.sub(&TPoly(sub));
        }
        r
    }

    fn exact_div(&self, other: &TPoly) -> TPoly {
        let mut r = self.clone();
        let d = other.degree();
        let lc = other.lc().clone();
        let mut q = vec![Rat::zero(); self.0.len().saturating_sub(other.0.len()) + 1];
        while !r.is_zero() && r.degree() >= d {
            let shift = r.degree() - d;
            let factor = r.lc() / &lc;
            let mut sub = vec![Rat::zero(); shift];
            sub.extend(other.0.iter().map(|c| c * &factor));
            r = r.sub(&TPoly(sub));
            q[shift] = factor;
        }
        debug_assert!(r.is_zero(), "inexact division in Q[t]");
        TPoly(q).trim()
    }

    /// GCD by the Euclidean algorithm, normalized to coprime integer
    /// coefficients with positive leading coefficient.
    fn gcd(&self, other: &TPoly) -> TPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.make_canonical()
    }

    fn make_canonical(self) -> TPoly {
        if self.is_zero() {
            return self;
        }
        let mut num_gcd = BigInt::zero();
        let mut den_lcm = BigInt::one();
        for c in &self.0 {
            if c.is_zero() {
                continue;
            }
            num_gcd = num_integer::gcd(num_gcd, c.numer().abs());
            den_lcm = num_integer::lcm(den_lcm, c.denom().clone());
        }
        let mut scaled = self.scale(&Rat::new(den_lcm, num_gcd));
        if scaled.lc().is_negative() {
            scaled = scaled.scale(&-Rat::one());
        }
        scaled
    }
}

/// Polynomial in q with Q[t] coefficients, index = q-degree.
#[derive(Debug, Clone)]
struct QPoly(Vec<TPoly>);

impl QPoly {
    fn from_qt(p: &QtPoly) -> QPoly {
        let dq = p.max_q_degree() as usize;
        let mut coeffs = vec![Vec::new(); dq + 1];
        for ((a, b), c) in &p.terms {
            let v = &mut coeffs[*a as usize];
            if v.len() <= *b as usize {
                v.resize(*b as usize + 1, Rat::zero());
            }
            v[*b as usize] = c.clone();
        }
        QPoly(coeffs.into_iter().map(|v| TPoly(v).trim()).collect()).trim()
    }

    fn to_qt(&self) -> QtPoly {
        let mut out = QtPoly::zero();
        for (a, tc) in self.0.iter().enumerate() {
            for (b, c) in tc.0.iter().enumerate() {
                out.add_term((a as u32, b as u32), c);
            }
        }
        out
    }

    fn trim(mut self) -> Self {
        while self.0.last().map(|c| c.is_zero()).unwrap_or(false) {
            self.0.pop();
        }
        self
    }

    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    fn lc(&self) -> &TPoly {
        self.0.last().expect("lc of zero polynomial")
    }

    fn scale_coeffs(&self, f: &TPoly) -> QPoly {
        QPoly(self.0.iter().map(|c| c.mul(f)).collect()).trim()
    }

    fn sub(&self, other: &QPoly) -> QPoly {
        let n = self.0.len().max(other.0.len());
        let mut out = vec![TPoly::zero(); n];
        for (i, c) in self.0.iter().enumerate() {
            out[i] = c.clone();
        }
        for (i, c) in other.0.iter().enumerate() {
            out[i] = out[i].sub(c);
        }
        QPoly(out).trim()
    }

    /// Content in Q[t]: gcd of the q-coefficients.
    fn content(&self) -> TPoly {
        let mut g = TPoly::zero();
        for c in &self.0 {
            if c.is_zero() {
                continue;
            }
            g = if g.is_zero() { c.clone().make_canonical() } else { g.gcd(c) };
            if g.degree() == 0 && !g.is_zero() {
                break;
            }
        }
        g
    }

    fn divide_content(&self, g: &TPoly) -> QPoly {
        QPoly(
            self.0
                .iter()
                .map(|c| if c.is_zero() { TPoly::zero() } else { c.exact_div(g) })
                .collect(),
        )
        .trim()
    }

    fn primitive(&self) -> QPoly {
        if self.is_zero() {
            return QPoly(Vec::new());
        }
        let g = self.content();
        self.divide_content(&g)
    }

    /// One elimination step of pseudo-division: kills the leading q-term of
    /// `a` against `b`. Returns lc(b)*a - lc(a)*q^k*b.
    fn prem_step(a: &QPoly, b: &QPoly) -> QPoly {
        let shift = a.degree() - b.degree();
        let lhs = a.scale_coeffs(b.lc());
        let mut shifted = vec![TPoly::zero(); shift];
        shifted.extend(b.0.iter().map(|c| c.mul(a.lc())));
        lhs.sub(&QPoly(shifted))
    }
}

/// Primitive pseudo-remainder sequence GCD for primitive inputs.
fn qpoly_gcd(mut a: QPoly, mut b: QPoly) -> QPoly {
    // Pull out the q-contents first; their Q[t]-gcd multiplies the result.
    let ca = a.content();
    let cb = b.content();
    let cg = ca.gcd(&cb);
    a = a.primitive();
    b = b.primitive();
    if a.degree() < b.degree() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_zero() {
        let mut r = a.clone();
        while !r.is_zero() && r.degree() >= b.degree() {
            r = QPoly::prem_step(&r, &b);
        }
        a = b;
        b = r.primitive();
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
    }
    a.primitive().scale_coeffs(&cg)
}
