//! Symmetric polynomials in n variables, stored in the monomial basis as a
//! map from partitions to scalars. Polynomials may be inhomogeneous.
//!
//! Evaluation exploits that spectral-point coordinates are monomials in q
//! and t, so evaluating a monomial symmetric function never leaves the
//! polynomial ring.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{rat_pow, Field, Mode, QtPoly, Scalar};
use crate::partition::{Partition, SpectralPoint};

/// A symmetric polynomial in the monomial basis {m_λ}. No stored
/// coefficient is zero and every key has length at most n.
#[derive(Debug, Clone, PartialEq)]
pub struct SymPoly {
    n: usize,
    coeffs: BTreeMap<Partition, Scalar>,
}

impl SymPoly {
    pub fn zero(n: usize) -> Self {
        SymPoly { n, coeffs: BTreeMap::new() }
    }

    pub fn constant(n: usize, c: Scalar) -> Self {
        let mut out = SymPoly::zero(n);
        out.add_term(Partition::empty(), c);
        out
    }

    /// The monomial symmetric function m_λ.
    pub fn m(lambda: Partition, n: usize, field: &Field) -> Self {
        assert!(lambda.len() <= n, "m_{lambda} does not exist in {n} variables");
        let mut out = SymPoly::zero(n);
        out.add_term(lambda, field.one());
        out
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeff(&self, lambda: &Partition) -> Option<&Scalar> {
        self.coeffs.get(lambda)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &Scalar)> {
        self.coeffs.iter()
    }

    /// Term with the greatest key in the total order.
    pub fn lead_term(&self) -> Option<(&Partition, &Scalar)> {
        self.coeffs.iter().next_back()
    }

    pub fn add_term(&mut self, lambda: Partition, c: Scalar) {
        assert!(lambda.len() <= self.n, "key longer than the variable count");
        if c.is_zero() {
            return;
        }
        match self.coeffs.entry(lambda) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().add(&c);
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &SymPoly) -> SymPoly {
        assert_eq!(self.n, other.n);
        let mut out = self.clone();
        for (k, c) in &other.coeffs {
            out.add_term(k.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &SymPoly) -> SymPoly {
        self.add(&other.scale_neg())
    }

    fn scale_neg(&self) -> SymPoly {
        SymPoly {
            n: self.n,
            coeffs: self.coeffs.iter().map(|(k, c)| (k.clone(), c.neg())).collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> SymPoly {
        if c.is_zero() {
            return SymPoly::zero(self.n);
        }
        SymPoly {
            n: self.n,
            coeffs: self
                .coeffs
                .iter()
                .map(|(k, v)| (k.clone(), v.mul(c)))
                .collect(),
        }
    }

    /// Product, expanded back into the monomial basis. Each m_λ is expanded
    /// into its orbit of exponent vectors, the orbits are convolved, and
    /// only partition-sorted representatives are collected.
    pub fn mul(&self, other: &SymPoly) -> SymPoly {
        assert_eq!(self.n, other.n);
        let a = self.orbit_expansion();
        let b = other.orbit_expansion();
        let mut out = SymPoly::zero(self.n);
        for (va, ca) in &a {
            for (vb, cb) in &b {
                let sum: Vec<u32> = va.iter().zip(vb).map(|(x, y)| x + y).collect();
                if sum.windows(2).all(|w| w[0] >= w[1]) {
                    out.add_term(Partition::new(sum), ca.mul(cb));
                }
            }
        }
        out
    }

    fn orbit_expansion(&self) -> Vec<(Vec<u32>, Scalar)> {
        let mut out = Vec::new();
        for (lam, c) in &self.coeffs {
            for alpha in distinct_permutations(&pad_to(lam, self.n)) {
                out.push((alpha, c.clone()));
            }
        }
        out
    }

    /// Evaluation at the spectral point of λ.
    pub fn eval_at(&self, lambda: &Partition, field: &Field) -> Scalar {
        let point = SpectralPoint::new(lambda.clone(), self.n);
        let mut acc = field.zero();
        for (mu, c) in &self.coeffs {
            acc = acc.add(&c.mul(&m_eval(mu, &point, field)));
        }
        acc
    }
}

impl fmt::Display for SymPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        // leading term first
        for (i, (lam, c)) in self.coeffs.iter().rev().enumerate() {
            let negative = display_negative(c);
            let mag = if negative { c.neg() } else { c.clone() };
            let mag_str = coeff_prefix(&mag);
            if i == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if negative { " - " } else { " + " })?;
            }
            let parts: Vec<String> = lam.parts().iter().map(|p| p.to_string()).collect();
            write!(f, "{}m[{}]", mag_str, parts.join(","))?;
        }
        Ok(())
    }
}

fn display_negative(c: &Scalar) -> bool {
    match c {
        Scalar::Num(r) => r < &BigRational::zero(),
        Scalar::Sym { num, .. } => num
            .lead_coeff()
            .map(|x| x < &BigRational::zero())
            .unwrap_or(false),
    }
}

fn coeff_prefix(c: &Scalar) -> String {
    if c.is_one() {
        return String::new();
    }
    let s = crate::field::text::render_scalar(c);
    if s.contains(' ') || s.contains('/') {
        format!("({s})*")
    } else {
        format!("{s}*")
    }
}

pub fn pad_to(lambda: &Partition, n: usize) -> Vec<u32> {
    (0..n).map(|i| lambda.part(i)).collect()
}

/// All distinct rearrangements of a multiset of nonnegative integers.
pub fn distinct_permutations(values: &[u32]) -> Vec<Vec<u32>> {
    let mut cur = values.to_vec();
    cur.sort_unstable();
    let mut out = Vec::new();
    loop {
        out.push(cur.clone());
        if !next_permutation(&mut cur) {
            break;
        }
    }
    out
}

fn next_permutation(a: &mut [u32]) -> bool {
    if a.len() < 2 {
        return false;
    }
    let mut i = a.len() - 1;
    while i > 0 && a[i - 1] >= a[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = a.len() - 1;
    while a[j] <= a[i - 1] {
        j -= 1;
    }
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}

/// m_μ evaluated at a spectral point: the sum of x^α over distinct
/// rearrangements α of μ. Every coordinate is a monomial q^a t^b, so the
/// result is assembled directly from exponent sums.
pub fn m_eval(mu: &Partition, point: &SpectralPoint, field: &Field) -> Scalar {
    assert!(mu.len() <= point.n(), "m_{mu} does not exist in {} variables", point.n());
    let exps = point.exponents();
    let n = point.n();
    match &field.mode {
        Mode::Symbolic => {
            let mut poly = QtPoly::zero();
            let one = BigRational::from_integer(1.into());
            for alpha in distinct_permutations(&pad_to(mu, n)) {
                let mut qa = 0u32;
                let mut qb = 0u32;
                for (i, &e) in alpha.iter().enumerate() {
                    qa += e * exps[i].0;
                    qb += e * exps[i].1;
                }
                poly.add_term((qa, qb), &one);
            }
            field.from_poly(poly)
        }
        Mode::Numeric { q0, t0 } => {
            let mut acc = BigRational::zero();
            for alpha in distinct_permutations(&pad_to(mu, n)) {
                let mut qa = 0u32;
                let mut qb = 0u32;
                for (i, &e) in alpha.iter().enumerate() {
                    qa += e * exps[i].0;
                    qb += e * exps[i].1;
                }
                acc += rat_pow(q0, qa) * rat_pow(t0, qb);
            }
            Scalar::Num(acc)
        }
    }
}

/// The k-th elementary symmetric polynomial e_k = m_{(1^k)}; k = 0 gives 1.
pub fn elementary_e(k: usize, n: usize, field: &Field) -> SymPoly {
    assert!(k <= n, "e_{k} does not exist in {n} variables");
    if k == 0 {
        return SymPoly::constant(n, field.one());
    }
    SymPoly::m(Partition::new(vec![1; k]), n, field)
}

/// E_μ: the product of elementary symmetric functions with subscripts given
/// by the conjugate of μ. Satisfies E_μ = m_μ + (dominance-lower terms).
pub fn e_product(mu: &Partition, n: usize, field: &Field) -> Result<SymPoly> {
    let conj = mu.conjugate();
    if conj.part(0) as usize > n {
        return Err(Error::Invalid(format!(
            "E_{mu} needs e_{} which does not exist in {n} variables",
            conj.part(0)
        )));
    }
    let mut out = SymPoly::constant(n, field.one());
    for &k in conj.parts() {
        out = out.mul(&elementary_e(k as usize, n, field));
    }
    Ok(out)
}

/// Expands g over the basis {E_μ} by back-substitution from the greatest
/// key downward, using that E_μ is unitriangular over the monomial basis.
pub fn expand_in_e(g: &SymPoly, field: &Field) -> Result<BTreeMap<Partition, Scalar>> {
    let mut rem = g.clone();
    let mut out = BTreeMap::new();
    while let Some((mu, c)) = rem.lead_term().map(|(k, v)| (k.clone(), v.clone())) {
        let e = e_product(&mu, g.n(), field)?;
        rem = rem.sub(&e.scale(&c));
        if let Some((next, _)) = rem.lead_term() {
            assert!(
                next < &mu,
                "E-basis lost triangularity at {mu} (next lead {next})"
            );
        }
        out.insert(mu, c);
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// JSON form
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CoeffJson {
    pub num: String,
    pub den: String,
}

impl CoeffJson {
    pub fn of(s: &Scalar) -> Self {
        let (num, den) = s.num_den_strings();
        CoeffJson { num, den }
    }

    pub fn parse(&self, field: &Field) -> Result<Scalar> {
        match &field.mode {
            Mode::Symbolic => {
                let num = crate::field::text::parse_poly(&self.num)?;
                let den = crate::field::text::parse_poly(&self.den)?;
                Scalar::fraction(num, den)
            }
            Mode::Numeric { .. } => {
                let num = crate::field::text::parse_rat(&self.num)?;
                let den = crate::field::text::parse_rat(&self.den)?;
                if den.is_zero() {
                    return Err(Error::DivisionByZero);
                }
                Ok(Scalar::Num(num / den))
            }
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TermJson {
    pub partition: Vec<u32>,
    pub coeff: CoeffJson,
}

/// The documented JSON rendering of a symmetric polynomial: terms sorted by
/// the total order, coefficients in canonical text.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SymPolyJson {
    pub n: usize,
    pub basis: String,
    pub terms: Vec<TermJson>,
}

impl SymPolyJson {
    pub fn of(p: &SymPoly) -> Self {
        SymPolyJson {
            n: p.n(),
            basis: "m".to_string(),
            terms: p
                .terms()
                .map(|(lam, c)| TermJson {
                    partition: lam.parts().to_vec(),
                    coeff: CoeffJson::of(c),
                })
                .collect(),
        }
    }

    pub fn parse(&self, field: &Field) -> Result<SymPoly> {
        if self.basis != "m" {
            return Err(Error::Invalid(format!("unsupported basis '{}'", self.basis)));
        }
        let mut out = SymPoly::zero(self.n);
        for term in &self.terms {
            let lam = Partition::new(term.partition.clone());
            out.add_term(lam, term.coeff.parse(field)?);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::spectral_point;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec())
    }

    #[test]
    fn m_eval_examples() {
        let f = Field::symbolic();
        // m_(1) at 0̂, n=2: t + 1
        let v = m_eval(&p(&[1]), &spectral_point(&p(&[]), 2), &f);
        assert_eq!(v, f.t().add(&f.one()));
        // m_(2) at (3)̂, n=1: q^6
        let v = m_eval(&p(&[2]), &spectral_point(&p(&[3]), 1), &f);
        assert_eq!(v, f.qt_monomial(6, 0));
        // m_(1,1) at 0̂, n=2: t
        let v = m_eval(&p(&[1, 1]), &spectral_point(&p(&[]), 2), &f);
        assert_eq!(v, f.t());
    }

    #[test]
    fn m_eval_matches_full_symmetrization() {
        // summing over all n! permutations overcounts each distinct
        // rearrangement by the product of part multiplicities
        let f = Field::symbolic();
        for n in 1..=3usize {
            for mu in crate::partition::enumerate_partitions(4, n) {
                for lam in crate::partition::enumerate_partitions(3, n) {
                    let point = spectral_point(&lam, n);
                    let exps = point.exponents();
                    let padded = pad_to(&mu, n);
                    // multiplicity correction
                    let mut mult = 1u64;
                    let mut counts = std::collections::HashMap::new();
                    for &v in &padded {
                        *counts.entry(v).or_insert(0u64) += 1;
                    }
                    for c in counts.values() {
                        for i in 1..=*c {
                            mult *= i;
                        }
                    }
                    // all n! permutations of variable indices
                    let mut idx: Vec<usize> = (0..n).collect();
                    let mut total = f.zero();
                    loop {
                        let mut qa = 0u32;
                        let mut qb = 0u32;
                        for (pos, &var) in idx.iter().enumerate() {
                            qa += padded[pos] * exps[var].0;
                            qb += padded[pos] * exps[var].1;
                        }
                        total = total.add(&f.qt_monomial(qa, qb));
                        // next permutation of idx
                        let mut arr: Vec<u32> = idx.iter().map(|&x| x as u32).collect();
                        if !super::next_permutation(&mut arr) {
                            break;
                        }
                        idx = arr.into_iter().map(|x| x as usize).collect();
                    }
                    let fast = m_eval(&mu, &point, &f).mul(&f.int(mult as i64));
                    assert_eq!(total, fast, "mu={mu} lam={lam} n={n}");
                }
            }
        }
    }

    #[test]
    fn eval_interpolation_polynomial_at_node() {
        // (x-1)(x-q) evaluated at x = q^2: (q^2-1)(q^2-q)
        let f = Field::symbolic();
        let mut poly = SymPoly::zero(1);
        poly.add_term(p(&[2]), f.one());
        poly.add_term(p(&[1]), f.one().add(&f.q()).neg());
        poly.add_term(p(&[]), f.q());
        let got = poly.eval_at(&p(&[2]), &f);
        let expected = f
            .qt_monomial(2, 0)
            .sub(&f.one())
            .mul(&f.qt_monomial(2, 0).sub(&f.q()));
        assert_eq!(got, expected);
        // constant polynomial evaluates to itself
        let one = SymPoly::constant(1, f.one());
        assert_eq!(one.eval_at(&p(&[5]), &f), f.one());
    }

    #[test]
    fn eval_vanishing_by_construction() {
        let f = Field::symbolic();
        // m_(1) - (1+t) vanishes at 0̂ for n=2
        let mut poly = SymPoly::m(p(&[1]), 2, &f);
        poly.add_term(p(&[]), f.one().add(&f.t()).neg());
        assert!(poly.eval_at(&p(&[]), &f).is_zero());
    }

    #[test]
    fn multiply_examples() {
        let f = Field::symbolic();
        let m1 = SymPoly::m(p(&[1]), 2, &f);
        let prod = m1.mul(&m1);
        let mut expected = SymPoly::m(p(&[2]), 2, &f);
        expected.add_term(p(&[1, 1]), f.int(2));
        assert_eq!(prod, expected);

        // f * 1 = f
        let one = SymPoly::constant(2, f.one());
        assert_eq!(prod.mul(&one), prod);

        // e_1 * e_1 = m_2 in one variable
        let e1 = elementary_e(1, 1, &f);
        assert_eq!(e1.mul(&e1), SymPoly::m(p(&[2]), 1, &f));
    }

    #[test]
    fn elementary_examples() {
        let f = Field::symbolic();
        assert_eq!(elementary_e(2, 3, &f), SymPoly::m(p(&[1, 1]), 3, &f));
        assert_eq!(elementary_e(0, 3, &f), SymPoly::constant(3, f.one()));
        assert_eq!(elementary_e(2, 2, &f), SymPoly::m(p(&[1, 1]), 2, &f));
    }

    #[test]
    fn e_product_examples() {
        let f = Field::symbolic();
        // E_(2) in n=2: conjugate (1,1), so e_1*e_1 = m_2 + 2 m_11
        let e = e_product(&p(&[2]), 2, &f).unwrap();
        let mut expected = SymPoly::m(p(&[2]), 2, &f);
        expected.add_term(p(&[1, 1]), f.int(2));
        assert_eq!(e, expected);
        // E_(1,1) in n=2: conjugate (2), so e_2 = m_11
        let e = e_product(&p(&[1, 1]), 2, &f).unwrap();
        assert_eq!(e, SymPoly::m(p(&[1, 1]), 2, &f));
        // E_∅ = 1
        let e = e_product(&p(&[]), 2, &f).unwrap();
        assert_eq!(e, SymPoly::constant(2, f.one()));
        // too many rows
        assert!(e_product(&p(&[1, 1, 1]), 2, &f).is_err());
    }

    #[test]
    fn e_basis_unitriangular() {
        let f = Field::symbolic();
        for n in 1..=3usize {
            for mu in crate::partition::enumerate_partitions(5, n) {
                let e = e_product(&mu, n, &f).unwrap();
                assert_eq!(e.coeff(&mu), Some(&f.one()), "lead coeff of E_{mu}");
                for (nu, _) in e.terms() {
                    assert!(
                        nu.dominance_leq(&mu),
                        "E_{mu} has term {nu} outside the dominance ideal"
                    );
                }
            }
        }
    }

    #[test]
    fn expand_in_e_examples() {
        let f = Field::symbolic();
        // round trip E_(2,1)
        let e21 = e_product(&p(&[2, 1]), 3, &f).unwrap();
        let coeffs = expand_in_e(&e21, &f).unwrap();
        assert_eq!(coeffs.len(), 1);
        assert_eq!(coeffs.get(&p(&[2, 1])), Some(&f.one()));

        // m_2 = E_(2) - 2 E_(1,1) in n=2
        let m2 = SymPoly::m(p(&[2]), 2, &f);
        let coeffs = expand_in_e(&m2, &f).unwrap();
        assert_eq!(coeffs.get(&p(&[2])), Some(&f.one()));
        assert_eq!(coeffs.get(&p(&[1, 1])), Some(&f.int(-2)));
        assert_eq!(coeffs.len(), 2);

        // constant
        let one = SymPoly::constant(2, f.one());
        let coeffs = expand_in_e(&one, &f).unwrap();
        assert_eq!(coeffs.len(), 1);
        assert_eq!(coeffs.get(&p(&[])), Some(&f.one()));
    }

    #[test]
    fn expand_in_e_round_trip_random_shapes() {
        let f = Field::symbolic();
        let n = 3;
        let parts = crate::partition::enumerate_partitions(4, n);
        // a handful of deterministic inhomogeneous combinations
        for (i, chunk) in parts.chunks(3).enumerate() {
            let mut g = SymPoly::zero(n);
            for (j, lam) in chunk.iter().enumerate() {
                g.add_term(lam.clone(), f.int((i as i64 + 1) * (j as i64 + 1) - 4));
            }
            let coeffs = expand_in_e(&g, &f).unwrap();
            let mut rebuilt = SymPoly::zero(n);
            for (mu, c) in &coeffs {
                rebuilt = rebuilt.add(&e_product(mu, n, &f).unwrap().scale(c));
            }
            assert_eq!(rebuilt, g);
        }
    }

    #[test]
    fn evaluation_is_multiplicative() {
        let f = Field::symbolic();
        let n = 2;
        let a = {
            let mut a = SymPoly::m(p(&[2]), n, &f);
            a.add_term(p(&[1]), f.t().neg());
            a
        };
        let b = {
            let mut b = SymPoly::m(p(&[1, 1]), n, &f);
            b.add_term(p(&[]), f.q());
            b
        };
        for lam in crate::partition::enumerate_partitions(4, n) {
            let lhs = a.mul(&b).eval_at(&lam, &f);
            let rhs = a.eval_at(&lam, &f).mul(&b.eval_at(&lam, &f));
            assert_eq!(lhs, rhs, "at {lam}");
        }
    }

    #[test]
    fn display_format() {
        let f = Field::symbolic();
        let mut poly = SymPoly::m(p(&[2]), 1, &f);
        poly.add_term(p(&[1]), f.one().add(&f.q()).neg());
        poly.add_term(p(&[]), f.q());
        assert_eq!(poly.to_string(), "m[2] - (1 + q)*m[1] + q*m[]");
        assert_eq!(SymPoly::zero(2).to_string(), "0");
        assert_eq!(SymPoly::constant(2, f.one()).to_string(), "m[]");
    }

    #[test]
    fn json_round_trip() {
        let f = Field::symbolic();
        let mut poly = SymPoly::m(p(&[2]), 2, &f);
        poly.add_term(
            p(&[1, 1]),
            f.one().add(&f.q()).mul(&f.one().sub(&f.t()))
                .div(&f.one().sub(&f.q().mul(&f.t())))
                .unwrap(),
        );
        let json = SymPolyJson::of(&poly);
        let text = serde_json::to_string(&json).unwrap();
        let back: SymPolyJson = serde_json::from_str(&text).unwrap();
        assert_eq!(back.parse(&f).unwrap(), poly);
    }
}
