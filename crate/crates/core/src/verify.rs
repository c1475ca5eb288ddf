//! Machine verification of the identities: orthogonality, the norm
//! formula, the binomial expansion, pairing symmetry, extra vanishing,
//! eigen-relations, the one-variable picture, route agreement, Fourier
//! adjointness, order-independence, the crucial vanishing of d_S, and the
//! support of chain coefficients.
//!
//! Every comparison is exact equality of canonical forms. A failing case
//! carries the offending values; a degenerate numeric sample aborts the
//! suite and the driver resamples (q0, t0) up to a fixed retry budget.

use std::collections::BTreeMap;

use num_traits::One;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::cache::{order_name, BasisCache};
use crate::error::{Error, Result};
use crate::field::{rat_pow, text, Field, Rat};
use crate::macdonald::{
    apply_dk_eval, binomial_coefficients, chain_with_sizes, d_factor, expand_in_p,
    pairing_via_operators, pairing_via_spectrum,
};
use crate::partition::{
    enumerate_partitions, eigenvalue_ek, OrderVariant, Partition,
};
use crate::sympoly::SymPoly;

const RETRY_BUDGET: usize = 5;
const RANDOM_PAIRS: usize = 50;
const RANDOM_TRIPLES: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SuiteKind {
    T1,
    T2,
    T3,
    Symmetry,
    Extra,
    Eigen,
    OneD,
    Routes,
    Adjoint,
    Order,
    Crucial,
    Chain,
}

impl SuiteKind {
    pub const ALL: [SuiteKind; 12] = [
        SuiteKind::OneD,
        SuiteKind::Crucial,
        SuiteKind::Eigen,
        SuiteKind::Routes,
        SuiteKind::T1,
        SuiteKind::T2,
        SuiteKind::T3,
        SuiteKind::Symmetry,
        SuiteKind::Extra,
        SuiteKind::Adjoint,
        SuiteKind::Order,
        SuiteKind::Chain,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            SuiteKind::T1 => "t1",
            SuiteKind::T2 => "t2",
            SuiteKind::T3 => "t3",
            SuiteKind::Symmetry => "symmetry",
            SuiteKind::Extra => "extra",
            SuiteKind::Eigen => "eigen",
            SuiteKind::OneD => "oneD",
            SuiteKind::Routes => "routes",
            SuiteKind::Adjoint => "adjoint",
            SuiteKind::Order => "order",
            SuiteKind::Crucial => "crucial",
            SuiteKind::Chain => "chain",
        }
    }

    pub fn from_name(s: &str) -> Result<SuiteKind> {
        match s {
            "t1" => Ok(SuiteKind::T1),
            "t2" => Ok(SuiteKind::T2),
            "t3" => Ok(SuiteKind::T3),
            "symmetry" => Ok(SuiteKind::Symmetry),
            "extra" => Ok(SuiteKind::Extra),
            "eigen" => Ok(SuiteKind::Eigen),
            "oneD" | "oned" => Ok(SuiteKind::OneD),
            "routes" => Ok(SuiteKind::Routes),
            "adjoint" => Ok(SuiteKind::Adjoint),
            "order" => Ok(SuiteKind::Order),
            "crucial" => Ok(SuiteKind::Crucial),
            "chain" => Ok(SuiteKind::Chain),
            other => Err(Error::Invalid(format!("unknown suite '{other}'"))),
        }
    }

    /// Parses a comma-separated suite list; "all" expands to every suite.
    pub fn parse_list(s: &str) -> Result<Vec<SuiteKind>> {
        if s.trim() == "all" {
            return Ok(SuiteKind::ALL.to_vec());
        }
        s.split(',')
            .map(|piece| SuiteKind::from_name(piece.trim()))
            .collect()
    }
}

/// How the coefficient field is chosen for a verification run.
#[derive(Debug, Clone, PartialEq)]
pub enum ModeSpec {
    Symbolic,
    NumericFixed { q0: Rat, t0: Rat },
    NumericSeeded,
}

#[derive(Debug, Clone)]
pub struct VerifyRequest {
    pub suites: Vec<SuiteKind>,
    pub n: usize,
    pub max_size: u32,
    pub mode: ModeSpec,
    pub seed: u64,
    pub order: OrderVariant,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    DegenerateResampled,
}

impl Status {
    pub fn as_str(&self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::DegenerateResampled => "degenerate-resampled",
        }
    }
}

impl Serialize for Status {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Case {
    pub label: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<BTreeMap<String, String>>,
}

impl Case {
    fn pass(label: String) -> Case {
        Case { label, status: Status::Pass, witness: None }
    }

    fn fail(label: String, witness: BTreeMap<String, String>) -> Case {
        Case { label, status: Status::Fail, witness: Some(witness) }
    }

    fn check(label: String, ok: bool, witness: impl FnOnce() -> BTreeMap<String, String>) -> Case {
        if ok {
            Case::pass(label)
        } else {
            Case::fail(label, witness())
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ConfigEcho {
    pub n: usize,
    pub max_size: u32,
    pub mode: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub q0: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub t0: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub order: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub suite: String,
    pub config: ConfigEcho,
    pub cases: Vec<Case>,
    pub passed: usize,
    pub failed: usize,
    pub resampled: usize,
}

impl Report {
    fn assemble(suite: SuiteKind, config: ConfigEcho, mut cases: Vec<Case>, resamples: Vec<Case>) -> Report {
        let mut all = resamples;
        all.append(&mut cases);
        let passed = all.iter().filter(|c| c.status == Status::Pass).count();
        let failed = all.iter().filter(|c| c.status == Status::Fail).count();
        let resampled = all
            .iter()
            .filter(|c| c.status == Status::DegenerateResampled)
            .count();
        Report {
            suite: suite.name().to_string(),
            config,
            cases: all,
            passed,
            failed,
            resampled,
        }
    }

    pub fn all_passed(&self) -> bool {
        self.failed == 0
    }
}

pub struct VerifyOutcome {
    pub reports: Vec<Report>,
    pub cache: BasisCache,
}

impl VerifyOutcome {
    pub fn all_passed(&self) -> bool {
        self.reports.iter().all(|r| r.all_passed())
    }
}

/// Runs the requested suites against a shared cache, resampling the numeric
/// point on degeneracy when the mode allows it.
pub fn run_verify(req: &VerifyRequest) -> Result<VerifyOutcome> {
    let mut sample_rng = ChaCha8Rng::seed_from_u64(req.seed);
    sample_rng.set_stream(0xA11CE);
    let mut field = resolve_field(&req.mode, req.max_size, &mut sample_rng)?;
    let mut cache = BasisCache::with_order(req.n, field.clone(), req.order);
    let mut reports = Vec::new();
    for (index, suite) in req.suites.iter().enumerate() {
        let mut resamples = Vec::new();
        loop {
            let config = echo_from_field(req, &field);
            match run_suite_cases(*suite, req, &cache, index as u64) {
                Ok(cases) => {
                    reports.push(Report::assemble(*suite, config, cases, resamples));
                    break;
                }
                Err(Error::Degenerate(msg)) => {
                    if req.mode != ModeSpec::NumericSeeded || resamples.len() >= RETRY_BUDGET {
                        return Err(Error::Degenerate(format!(
                            "suite {} out of retries: {msg}",
                            suite.name()
                        )));
                    }
                    let mut witness = BTreeMap::new();
                    witness.insert("error".to_string(), msg);
                    resamples.push(Case {
                        label: format!("resample[{}]", resamples.len() + 1),
                        status: Status::DegenerateResampled,
                        witness: Some(witness),
                    });
                    field = resolve_field(&ModeSpec::NumericSeeded, req.max_size, &mut sample_rng)?;
                    cache = BasisCache::with_order(req.n, field.clone(), req.order);
                }
                Err(e) => return Err(e),
            }
        }
    }
    Ok(VerifyOutcome { reports, cache })
}

/// Runs one suite against an existing cache (no resampling; degenerate
/// errors propagate to the caller).
pub fn run_suite(suite: SuiteKind, req: &VerifyRequest, cache: &BasisCache) -> Result<Report> {
    let config = echo_from_field(req, cache.field());
    let cases = run_suite_cases(suite, req, cache, 0)?;
    Ok(Report::assemble(suite, config, cases, Vec::new()))
}

fn echo_from_field(req: &VerifyRequest, field: &Field) -> ConfigEcho {
    let (mode, q0, t0) = match &field.mode {
        crate::field::Mode::Symbolic => ("symbolic".to_string(), None, None),
        crate::field::Mode::Numeric { q0, t0 } => (
            "numeric".to_string(),
            Some(text::render_rat(q0)),
            Some(text::render_rat(t0)),
        ),
    };
    let needs_seed = req.mode == ModeSpec::NumericSeeded
        || req.suites.iter().any(|s| uses_randomness(*s));
    ConfigEcho {
        n: req.n,
        max_size: req.max_size,
        mode,
        q0,
        t0,
        seed: needs_seed.then_some(req.seed),
        order: order_name(req.order).to_string(),
    }
}

fn uses_randomness(suite: SuiteKind) -> bool {
    matches!(suite, SuiteKind::Symmetry | SuiteKind::Adjoint)
}

fn resolve_field(mode: &ModeSpec, max_size: u32, rng: &mut ChaCha8Rng) -> Result<Field> {
    match mode {
        ModeSpec::Symbolic => Ok(Field::symbolic()),
        ModeSpec::NumericFixed { q0, t0 } => Ok(Field::numeric(q0.clone(), t0.clone())),
        ModeSpec::NumericSeeded => {
            let (q0, t0) = sample_qt(rng, max_size);
            Ok(Field::numeric(q0, t0))
        }
    }
}

/// Draws a nondegenerate numeric point: q0 = a/b, t0 = c/d with
/// 2 ≤ a,b,c,d ≤ 100, excluding 1, equal values, and any multiplicative
/// relation q0^i t0^j = 1 with exponents up to 2·max_size + 2.
pub fn sample_qt(rng: &mut ChaCha8Rng, max_size: u32) -> (Rat, Rat) {
    let bound = (2 * max_size + 2) as usize;
    'outer: loop {
        let a: i64 = rng.gen_range(2..=100);
        let b: i64 = rng.gen_range(2..=100);
        let c: i64 = rng.gen_range(2..=100);
        let d: i64 = rng.gen_range(2..=100);
        let q0 = Rat::new(a.into(), b.into());
        let t0 = Rat::new(c.into(), d.into());
        if q0.is_one() || t0.is_one() || q0 == t0 {
            continue;
        }
        let mut qp = Vec::with_capacity(bound + 1);
        let mut tp = Vec::with_capacity(bound + 1);
        for i in 0..=bound {
            qp.push(rat_pow(&q0, i as u32));
            tp.push(rat_pow(&t0, i as u32));
        }
        for i in 0..=bound {
            for j in 0..=bound {
                if i == 0 && j == 0 {
                    continue;
                }
                // q0^i t0^j = 1 or q0^i = t0^j would collapse spectral points
                if (&qp[i] * &tp[j]).is_one() || qp[i] == tp[j] {
                    continue 'outer;
                }
            }
        }
        return (q0, t0);
    }
}

fn run_suite_cases(
    suite: SuiteKind,
    req: &VerifyRequest,
    cache: &BasisCache,
    stream: u64,
) -> Result<Vec<Case>> {
    let mut rng = ChaCha8Rng::seed_from_u64(req.seed);
    rng.set_stream(stream + 1);
    match suite {
        SuiteKind::T1 => suite_t1(req, cache),
        SuiteKind::T2 => suite_t2(req, cache),
        SuiteKind::T3 => suite_t3(req, cache),
        SuiteKind::Symmetry => suite_symmetry(req, cache, &mut rng),
        SuiteKind::Extra => suite_extra(req, cache),
        SuiteKind::Eigen => suite_eigen(req, cache),
        SuiteKind::OneD => suite_oned(req, cache),
        SuiteKind::Routes => suite_routes(req, cache),
        SuiteKind::Adjoint => suite_adjoint(req, cache, &mut rng),
        SuiteKind::Order => suite_order(req, cache),
        SuiteKind::Crucial => suite_crucial(req, cache),
        SuiteKind::Chain => suite_chain(req, cache),
    }
}

fn witness_pair(lhs: &crate::field::Scalar, rhs: &crate::field::Scalar) -> BTreeMap<String, String> {
    let mut w = BTreeMap::new();
    w.insert("lhs".to_string(), text::render_scalar(lhs));
    w.insert("rhs".to_string(), text::render_scalar(rhs));
    w
}

// -- Theorem 1: orthogonality ------------------------------------------------

fn suite_t1(req: &VerifyRequest, cache: &BasisCache) -> Result<Vec<Case>> {
    let parts = enumerate_partitions(req.max_size, req.n);
    let mut cases = Vec::new();
    for mu in &parts {
        for nu in &parts {
            if mu == nu {
                continue;
            }
            let i_mu = cache.i(mu)?;
            let i_nu = cache.i(nu)?;
            let value = pairing_via_operators(&i_mu, &i_nu, cache)?;
            cases.push(Case::check(
                format!("orthogonal[{mu};{nu}]"),
                value.is_zero(),
                || {
                    let mut w = BTreeMap::new();
                    w.insert("mu".to_string(), mu.to_string());
                    w.insert("nu".to_string(), nu.to_string());
                    w.insert("pairing".to_string(), text::render_scalar(&value));
                    w
                },
            ));
        }
    }
    Ok(cases)
}

// -- Theorem 2: norm identity --------------------------------------------------

fn suite_t2(req: &VerifyRequest, cache: &BasisCache) -> Result<Vec<Case>> {
    let parts = enumerate_partitions(req.max_size, req.n);
    let mut cases = Vec::new();
    for mu in &parts {
        let field = cache.field();
        let i_mu = cache.i(mu)?;
        let i_at_mu = i_mu.eval_at(mu, field);
        let p_zero = cache.p_at_zero(mu)?;
        let c_mu_mu = cache
            .chain(mu)?
            .coeffs
            .get(mu)
            .cloned()
            .unwrap_or_else(|| field.zero());
        let via_pairing = pairing_via_operators(&i_mu, &i_mu, cache)?;
        let v1 = i_at_mu.mul(&p_zero);
        let v2 = c_mu_mu.mul(&i_at_mu);
        cases.push(Case::check(
            format!("norm[{mu}]"),
            via_pairing == v1 && via_pairing == v2,
            || {
                let mut w = BTreeMap::new();
                w.insert("pairing".to_string(), text::render_scalar(&via_pairing));
                w.insert("I(mu)*P(0)".to_string(), text::render_scalar(&v1));
                w.insert("c*I(mu)".to_string(), text::render_scalar(&v2));
                w
            },
        ));
        cases.push(Case::check(
            format!("eval0[{mu}]"),
            p_zero == c_mu_mu,
            || witness_pair(&p_zero, &c_mu_mu),
        ));
    }
    Ok(cases)
}

// -- Theorem 3: binomial formula -------------------------------------------------

fn suite_t3(req: &VerifyRequest, cache: &BasisCache) -> Result<Vec<Case>> {
    let parts = enumerate_partitions(req.max_size, req.n);
    let mut cases = Vec::new();
    for lam in &parts {
        match binomial_coefficients(lam, cache) {
            Ok(coeffs) => {
                cases.push(Case::pass(format!("reconstruct[{lam}]")));
                let offender = coeffs
                    .iter()
                    .find(|(mu, c)| !mu.contained_in(lam) && !c.is_zero());
                cases.push(Case::check(
                    format!("vanish[{lam}]"),
                    offender.is_none(),
                    || {
                        let (mu, c) = offender.unwrap();
                        let mut w = BTreeMap::new();
                        w.insert("mu".to_string(), mu.to_string());
                        w.insert("coefficient".to_string(), text::render_scalar(c));
                        w
                    },
                ));
            }
            Err(Error::Inconsistent(msg)) => {
                let mut w = BTreeMap::new();
                w.insert("error".to_string(), msg);
                cases.push(Case::fail(format!("reconstruct[{lam}]"), w));
            }
            Err(e) => return Err(e),
        }
    }
    Ok(cases)
}

// -- Corollary 1: symmetry ---------------------------------------------------------

fn suite_symmetry(req: &VerifyRequest, cache: &BasisCache, rng: &mut ChaCha8Rng) -> Result<Vec<Case>> {
    let field = cache.field();
    let parts = enumerate_partitions(req.max_size, req.n);
    let mut cases = Vec::new();
    // label-argument symmetry of the normalized polynomials
    for (i, lam) in parts.iter().enumerate() {
        for mu in parts.iter().skip(i + 1) {
            let lhs = cache.p(lam)?.eval_at(mu, field).div(&cache.p_at_zero(lam)?)?;
            let rhs = cache.p(mu)?.eval_at(lam, field).div(&cache.p_at_zero(mu)?)?;
            cases.push(Case::check(
                format!("label-arg[{lam};{mu}]"),
                lhs == rhs,
                || witness_pair(&lhs, &rhs),
            ));
        }
    }
    // bilinear-form symmetry on random pairs
    for k in 0..RANDOM_PAIRS {
        let f = random_sympoly(rng, req.n, 4, field);
        let g = random_sympoly(rng, req.n, 4, field);
        let lhs = pairing_via_operators(&f, &g, cache)?;
        let rhs = pairing_via_operators(&g, &f, cache)?;
        cases.push(Case::check(format!("pairing-sym[{k}]"), lhs == rhs, || {
            let mut w = witness_pair(&lhs, &rhs);
            w.insert("f".to_string(), f.to_string());
            w.insert("g".to_string(), g.to_string());
            w
        }));
    }
    Ok(cases)
}

// -- Extra vanishing -----------------------------------------------------------------

fn suite_extra(req: &VerifyRequest, cache: &BasisCache) -> Result<Vec<Case>> {
    let field = cache.field();
    let mus = enumerate_partitions(req.max_size, req.n);
    let lams = enumerate_partitions(req.max_size + 2, req.n);
    let mut cases = Vec::new();
    for mu in &mus {
        for lam in &lams {
            if mu.contained_in(lam) {
                continue;
            }
            let value = cache.i(mu)?.eval_at(lam, field);
            cases.push(Case::check(
                format!("extra[{mu};{lam}]"),
                value.is_zero(),
                || {
                    let mut w = BTreeMap::new();
                    w.insert("value".to_string(), text::render_scalar(&value));
                    w
                },
            ));
        }
    }
    Ok(cases)
}

// -- Eigen-relations for every k -------------------------------------------------------

fn suite_eigen(req: &VerifyRequest, cache: &BasisCache) -> Result<Vec<Case>> {
    let field = cache.field();
    let lams = enumerate_partitions(req.max_size, req.n);
    let points = enumerate_partitions(req.max_size + req.n as u32, req.n);
    let mut cases = Vec::new();
    for lam in &lams {
        let p_lam = cache.p(lam)?;
        for k in 0..=req.n {
            let eig = eigenvalue_ek(lam, k, req.n, field);
            let mut offender = None;
            for nu in &points {
                if nu.size() > lam.size() + req.n as u64 {
                    continue;
                }
                let lhs = apply_dk_eval(&p_lam, k, nu, field)?;
                let rhs = eig.mul(&p_lam.eval_at(nu, field));
                if lhs != rhs {
                    offender = Some((nu.clone(), lhs, rhs));
                    break;
                }
            }
            cases.push(Case::check(
                format!("eigen[{lam};k={k}]"),
                offender.is_none(),
                || {
                    let (nu, lhs, rhs) = offender.unwrap();
                    let mut w = witness_pair(&lhs, &rhs);
                    w.insert("nu".to_string(), nu.to_string());
                    w
                },
            ));
        }
    }
    Ok(cases)
}

// -- One-variable picture ----------------------------------------------------------------

fn suite_oned(req: &VerifyRequest, cache: &BasisCache) -> Result<Vec<Case>> {
    if req.n != 1 {
        return Err(Error::Invalid("the oneD suite requires n = 1".into()));
    }
    let field = cache.field();
    let mut cases = Vec::new();
    let single = |k: u32| Partition::new(vec![k]);

    // pairing matrix ⟨x^a, x^b⟩ = q^{ab}, by both routes
    for a in 0..=req.max_size {
        for b in 0..=req.max_size {
            let g = SymPoly::m(single(a), 1, field);
            let h = SymPoly::m(single(b), 1, field);
            let expected = field.qt_monomial(a * b, 0);
            let via_a = pairing_via_operators(&g, &h, cache)?;
            let via_b = pairing_via_spectrum(&g, &h, cache)?;
            cases.push(Case::check(
                format!("matrix[{a};{b}]"),
                via_a == expected && via_b == expected,
                || {
                    let mut w = BTreeMap::new();
                    w.insert("routeA".to_string(), text::render_scalar(&via_a));
                    w.insert("routeB".to_string(), text::render_scalar(&via_b));
                    w.insert("expected".to_string(), text::render_scalar(&expected));
                    w
                },
            ));
        }
    }

    // I_k = (x-1)(x-q)...(x-q^{k-1})
    for k in 0..=req.max_size {
        let mut product = SymPoly::constant(1, field.one());
        for i in 0..k {
            let mut factor = SymPoly::m(single(1), 1, field);
            factor.add_term(Partition::empty(), field.qt_monomial(i, 0).neg());
            product = product.mul(&factor);
        }
        let i_k = cache.i(&single(k))?;
        cases.push(Case::check(
            format!("product-form[{k}]"),
            *i_k == product,
            || {
                let mut w = BTreeMap::new();
                w.insert("interpolation".to_string(), i_k.to_string());
                w.insert("product".to_string(), product.to_string());
                w
            },
        ));
    }

    // orthogonality with diagonal I_k(q^k)
    for a in 0..=req.max_size {
        for b in 0..=req.max_size {
            let i_a = cache.i(&single(a))?;
            let i_b = cache.i(&single(b))?;
            let value = pairing_via_operators(&i_a, &i_b, cache)?;
            let expected = if a == b {
                cache.i(&single(a))?.eval_at(&single(a), field)
            } else {
                field.zero()
            };
            cases.push(Case::check(
                format!("orthogonal[{a};{b}]"),
                value == expected,
                || witness_pair(&value, &expected),
            ));
        }
    }

    // Newton expansion of x^k with nodes 1, q, q^2, ...
    for k in 0..=req.max_size {
        let mut rebuilt = SymPoly::zero(1);
        for j in 0..=k {
            let i_j = cache.i(&single(j))?;
            let coeff = i_j
                .eval_at(&single(k), field)
                .div(&i_j.eval_at(&single(j), field))?;
            rebuilt = rebuilt.add(&i_j.scale(&coeff));
        }
        let expected = SymPoly::m(single(k), 1, field);
        cases.push(Case::check(
            format!("newton[{k}]"),
            rebuilt == expected,
            || {
                let mut w = BTreeMap::new();
                w.insert("rebuilt".to_string(), rebuilt.to_string());
                w
            },
        ));
    }

    Ok(cases)
}

// -- Route agreement -----------------------------------------------------------------------

fn suite_routes(req: &VerifyRequest, cache: &BasisCache) -> Result<Vec<Case>> {
    let field = cache.field();
    let parts = enumerate_partitions(req.max_size, req.n);
    let mut polys: Vec<(String, std::rc::Rc<SymPoly>)> = Vec::new();
    for lam in &parts {
        polys.push((format!("m:{lam}"), std::rc::Rc::new(SymPoly::m(lam.clone(), req.n, field))));
    }
    for lam in &parts {
        polys.push((format!("I:{lam}"), cache.i(lam)?));
    }
    for lam in &parts {
        polys.push((format!("P:{lam}"), cache.p(lam)?));
    }
    let mut cases = Vec::new();
    for (gname, g) in &polys {
        for (fname, f) in &polys {
            let via_a = pairing_via_operators(g, f, cache)?;
            let via_b = pairing_via_spectrum(g, f, cache)?;
            cases.push(Case::check(
                format!("agree[{gname};{fname}]"),
                via_a == via_b,
                || witness_pair(&via_a, &via_b),
            ));
        }
    }
    Ok(cases)
}

// -- Fourier adjointness ---------------------------------------------------------------------

fn suite_adjoint(req: &VerifyRequest, cache: &BasisCache, rng: &mut ChaCha8Rng) -> Result<Vec<Case>> {
    let field = cache.field();
    let mut cases = Vec::new();
    for k in 0..RANDOM_TRIPLES {
        let h = random_sympoly(rng, req.n, 3, field);
        let g = random_sympoly(rng, req.n, 3, field);
        let f = random_sympoly(rng, req.n, 3, field);
        // ⟨hg, f⟩ through the operator route
        let lhs = pairing_via_operators(&h.mul(&g), &f, cache)?;
        // D(h) f = Σ b_λ h(λ̂) P_λ, then pair with g through the spectrum
        let p_coeffs = expand_in_p(&f, cache)?;
        let mut dhf = SymPoly::zero(req.n);
        for (lam, b) in &p_coeffs {
            let weight = b.mul(&h.eval_at(lam, field));
            dhf = dhf.add(&cache.p(lam)?.scale(&weight));
        }
        let rhs = pairing_via_spectrum(&g, &dhf, cache)?;
        cases.push(Case::check(format!("adjoint[{k}]"), lhs == rhs, || {
            let mut w = witness_pair(&lhs, &rhs);
            w.insert("h".to_string(), h.to_string());
            w.insert("g".to_string(), g.to_string());
            w.insert("f".to_string(), f.to_string());
            w
        }));
    }
    Ok(cases)
}

// -- Order independence ------------------------------------------------------------------------

fn suite_order(req: &VerifyRequest, cache: &BasisCache) -> Result<Vec<Case>> {
    let other = match req.order {
        OrderVariant::Standard => OrderVariant::Conjugate,
        OrderVariant::Conjugate => OrderVariant::Standard,
    };
    let alternate = BasisCache::with_order(req.n, cache.field().clone(), other);
    let mut cases = Vec::new();
    for mu in enumerate_partitions(req.max_size, req.n) {
        let a = cache.i(&mu)?;
        let b = alternate.i(&mu)?;
        cases.push(Case::check(format!("order[{mu}]"), *a == *b, || {
            let mut w = BTreeMap::new();
            w.insert("primary".to_string(), a.to_string());
            w.insert("alternate".to_string(), b.to_string());
            w
        }));
    }
    Ok(cases)
}

// -- Crucial vanishing ----------------------------------------------------------------------------

fn suite_crucial(req: &VerifyRequest, cache: &BasisCache) -> Result<Vec<Case>> {
    let field = cache.field();
    let n = req.n;
    let mut cases = Vec::new();
    for lam in enumerate_partitions(req.max_size, n) {
        for mask in 0u32..(1 << n) {
            let in_s = |i: usize| (mask >> i) & 1 == 1;
            let hypothesis = (0..n - 1)
                .any(|i| !in_s(i) && in_s(i + 1) && lam.part(i) == lam.part(i + 1));
            if !hypothesis {
                continue;
            }
            let rows: Vec<usize> = (0..n).filter(|&i| in_s(i)).collect();
            let value = d_factor(&rows, &lam, n, field)?;
            let label_rows: Vec<String> = rows.iter().map(|i| (i + 1).to_string()).collect();
            cases.push(Case::check(
                format!("crucial[{lam};S={{{}}}]", label_rows.join(",")),
                value.is_zero(),
                || {
                    let mut w = BTreeMap::new();
                    w.insert("d_S".to_string(), text::render_scalar(&value));
                    w
                },
            ));
        }
    }
    Ok(cases)
}

// -- Chain support -----------------------------------------------------------------------------------

fn suite_chain(req: &VerifyRequest, cache: &BasisCache) -> Result<Vec<Case>> {
    let field = cache.field();
    let mut cases = Vec::new();
    for mu in enumerate_partitions(req.max_size, req.n) {
        let chain = cache.chain(&mu)?;
        let offender = chain
            .coeffs
            .keys()
            .find(|nu| nu.size() != mu.size() || !nu.dominance_leq(&mu));
        cases.push(Case::check(format!("support[{mu}]"), offender.is_none(), || {
            let mut w = BTreeMap::new();
            w.insert("nu".to_string(), offender.unwrap().to_string());
            w
        }));

        let sizes: Vec<usize> = mu.conjugate().parts().iter().map(|&k| k as usize).collect();
        let mut reversed = sizes.clone();
        reversed.reverse();
        let other = chain_with_sizes(&mu, &reversed, req.n, field)?;
        cases.push(Case::check(
            format!("commute[{mu}]"),
            other.coeffs == chain.coeffs,
            || {
                let mut w = BTreeMap::new();
                w.insert("mu".to_string(), mu.to_string());
                w
            },
        ));
    }
    Ok(cases)
}

// -- helpers -------------------------------------------------------------------------------------------

fn random_sympoly(rng: &mut ChaCha8Rng, n: usize, max_deg: u32, field: &Field) -> SymPoly {
    let pool = enumerate_partitions(max_deg, n);
    let terms = rng.gen_range(1..=4usize);
    let mut out = SymPoly::zero(n);
    for _ in 0..terms {
        let lam = pool[rng.gen_range(0..pool.len())].clone();
        let c = loop {
            let c: i64 = rng.gen_range(-3..=3);
            if c != 0 {
                break c;
            }
        };
        out.add_term(lam, field.int(c));
    }
    if out.is_zero() {
        out.add_term(Partition::empty(), field.one());
    }
    out
}

/// Renders a report as stable, line-oriented text.
pub fn render_report_text(report: &Report) -> String {
    let mut out = String::new();
    let cfg = &report.config;
    let mut header = format!(
        "suite {} (n={}, max_size={}, mode={}",
        report.suite, cfg.n, cfg.max_size, cfg.mode
    );
    if let (Some(q0), Some(t0)) = (&cfg.q0, &cfg.t0) {
        header.push_str(&format!(", q0={q0}, t0={t0}"));
    }
    if let Some(seed) = cfg.seed {
        header.push_str(&format!(", seed={seed}"));
    }
    header.push_str(&format!(", order={})", cfg.order));
    out.push_str(&header);
    out.push('\n');
    for case in &report.cases {
        out.push_str(&format!("  {} {}\n", case.status.as_str(), case.label));
        if let Some(witness) = &case.witness {
            for (k, v) in witness {
                out.push_str(&format!("    {k} = {v}\n"));
            }
        }
    }
    out.push_str(&format!(
        "  {}: {} passed, {} failed, {} resampled\n",
        report.suite, report.passed, report.failed, report.resampled
    ));
    out
}
