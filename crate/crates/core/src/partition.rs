//! Partitions and the combinatorics built on them: dominance and total
//! orders, conjugation, containment, vertical strips, spectral points and
//! their elementary symmetric values.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::field::{Field, QtPoly, Rat, Scalar};

/// A partition: weakly decreasing positive parts, trailing zeros trimmed.
/// The empty partition is the empty sequence.
///
/// `Ord` is the total order used everywhere: first by size, then by
/// ascending lexicographic comparison of the part sequences. Within a size
/// class this refines the dominance order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Self {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        assert!(
            parts.windows(2).all(|w| w[0] >= w[1]),
            "parts must be weakly decreasing: {parts:?}"
        );
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// Part at 0-based index, with implicit zeros past the end.
    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// |λ|, the number of boxes.
    pub fn size(&self) -> u64 {
        self.0.iter().map(|&p| p as u64).sum()
    }

    pub fn conjugate(&self) -> Partition {
        let cols = self.part(0) as usize;
        let mut parts = Vec::with_capacity(cols);
        for j in 1..=cols {
            parts.push(self.0.iter().filter(|&&p| p as usize >= j).count() as u32);
        }
        Partition(parts)
    }

    /// μ ⊂ λ: containment of Young diagrams.
    pub fn contained_in(&self, other: &Partition) -> bool {
        self.0
            .iter()
            .enumerate()
            .all(|(i, &p)| p <= other.part(i))
    }

    /// Dominance order: same size and every prefix sum of self is at most
    /// the corresponding prefix sum of other.
    pub fn dominance_leq(&self, other: &Partition) -> bool {
        if self.size() != other.size() {
            return false;
        }
        let k = self.len().max(other.len());
        let mut a = 0u64;
        let mut b = 0u64;
        for i in 0..k {
            a += self.part(i) as u64;
            b += other.part(i) as u64;
            if a > b {
                return false;
            }
        }
        true
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Strict total order: `order_less(a, b)` is true iff a comes strictly
/// before b.
pub fn order_less(a: &Partition, b: &Partition) -> bool {
    a.cmp(b) == Ordering::Less
}

/// Tie-break variants for the total order, both compatible with size and
/// dominance. `Standard` compares part sequences lexicographically;
/// `Conjugate` compares conjugate partitions in the reverse direction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrderVariant {
    Standard,
    Conjugate,
}

impl OrderVariant {
    pub fn cmp(&self, a: &Partition, b: &Partition) -> Ordering {
        match self {
            OrderVariant::Standard => a.cmp(b),
            OrderVariant::Conjugate => a
                .size()
                .cmp(&b.size())
                .then_with(|| b.conjugate().0.cmp(&a.conjugate().0)),
        }
    }

    pub fn less(&self, a: &Partition, b: &Partition) -> bool {
        self.cmp(a, b) == Ordering::Less
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "[]");
        }
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "[]" {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        for piece in s.split(',') {
            let p: u32 = piece
                .trim()
                .parse()
                .map_err(|_| Error::Invalid(format!("bad partition part '{piece}'")))?;
            parts.push(p);
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if !parts.windows(2).all(|w| w[0] >= w[1]) {
            return Err(Error::Invalid(format!(
                "parts must be weakly decreasing: '{s}'"
            )));
        }
        Ok(Partition(parts))
    }
}

/// All partitions with size at most `max_size` and length at most
/// `max_length`, sorted by the total order.
pub fn enumerate_partitions(max_size: u32, max_length: usize) -> Vec<Partition> {
    fn gen(remaining: u32, max_part: u32, slots: usize, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        if slots == 0 {
            return;
        }
        let top = remaining.min(max_part);
        for p in (1..=top).rev() {
            cur.push(p);
            gen(remaining - p, p, slots - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    let mut cur = Vec::new();
    for s in 0..=max_size {
        gen(s, s, max_length, &mut cur, &mut out);
    }
    out.sort();
    out
}

/// A vertical-strip move λ → ν: `rows` is the 0-based set of rows that
/// gained a box, so ν_i = λ_i + 1 exactly for i in `rows`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StripMove {
    pub target: Partition,
    pub rows: Vec<usize>,
}

/// All ν with ν/λ a vertical k-strip inside n rows. k = 0 yields the single
/// identity move.
pub fn vertical_strips(lambda: &Partition, k: usize, n: usize) -> Vec<StripMove> {
    assert!(lambda.len() <= n, "partition longer than the variable count");
    assert!(k <= n);
    let mut out = Vec::new();
    for mask in 0u32..(1 << n) {
        if mask.count_ones() as usize != k {
            continue;
        }
        let mut parts = Vec::with_capacity(n);
        let mut rows = Vec::with_capacity(k);
        for i in 0..n {
            let add = (mask >> i) & 1;
            parts.push(lambda.part(i) + add);
            if add == 1 {
                rows.push(i);
            }
        }
        if parts.windows(2).all(|w| w[0] >= w[1]) {
            out.push(StripMove { target: Partition::new(parts), rows });
        }
    }
    out.sort_by(|a, b| a.target.cmp(&b.target));
    out
}

/// The evaluation point λ̂ attached to a partition: coordinate i (0-based)
/// is q^{λ_{i+1}} t^{n-1-i}.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpectralPoint {
    lambda: Partition,
    n: usize,
}

impl SpectralPoint {
    pub fn new(lambda: Partition, n: usize) -> Self {
        assert!(lambda.len() <= n, "partition longer than the variable count");
        SpectralPoint { lambda, n }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn lambda(&self) -> &Partition {
        &self.lambda
    }

    /// (q-exponent, t-exponent) of each coordinate; every coordinate is a
    /// monomial in q and t.
    pub fn exponents(&self) -> Vec<(u32, u32)> {
        (0..self.n)
            .map(|i| (self.lambda.part(i), (self.n - 1 - i) as u32))
            .collect()
    }

    pub fn coords(&self, field: &Field) -> Vec<Scalar> {
        self.exponents()
            .into_iter()
            .map(|(a, b)| field.qt_monomial(a, b))
            .collect()
    }
}

pub fn spectral_point(lambda: &Partition, n: usize) -> SpectralPoint {
    SpectralPoint::new(lambda.clone(), n)
}

/// e_k evaluated at the coordinates of λ̂: the sum over k-subsets of
/// coordinate products. Coordinates are monomials, so the symbolic value is
/// a plain polynomial.
pub fn eigenvalue_ek(lambda: &Partition, k: usize, n: usize, field: &Field) -> Scalar {
    assert!(k <= n, "e_{k} does not exist in {n} variables");
    let exps = SpectralPoint::new(lambda.clone(), n).exponents();
    match &field.mode {
        crate::field::Mode::Symbolic => {
            let mut poly = QtPoly::zero();
            subset_sum(&exps, k, &mut |qa, qb| {
                poly.add_term((qa, qb), &Rat::from_integer(1.into()))
            });
            field.from_poly(poly)
        }
        crate::field::Mode::Numeric { q0, t0 } => {
            let mut acc = Rat::from_integer(0.into());
            subset_sum(&exps, k, &mut |qa, qb| {
                acc += crate::field::rat_pow(q0, qa) * crate::field::rat_pow(t0, qb)
            });
            Scalar::Num(acc)
        }
    }
}

fn subset_sum(exps: &[(u32, u32)], k: usize, emit: &mut impl FnMut(u32, u32)) {
    fn rec(
        exps: &[(u32, u32)],
        k: usize,
        start: usize,
        acc: (u32, u32),
        emit: &mut impl FnMut(u32, u32),
    ) {
        if k == 0 {
            emit(acc.0, acc.1);
            return;
        }
        for i in start..=exps.len().saturating_sub(k) {
            rec(
                exps,
                k - 1,
                i + 1,
                (acc.0 + exps[i].0, acc.1 + exps[i].1),
                emit,
            );
        }
    }
    rec(exps, k, 0, (0, 0), emit);
}
