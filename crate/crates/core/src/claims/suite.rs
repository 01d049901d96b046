//! Runs each structural statement on a concrete ring and sets the predicted
//! verdict next to what the computation finds.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use super::{Asserted, Property, PropertyReport, Tested, Witness};
use crate::composite::{property_report, BruteForce, CompositeRing, OracleLimits, SmallRing, DIAGRAM};
use crate::covers::{composite_cover, int_valued_membership, CoverVariant};
use crate::exec::ExecMode;
use crate::fieldtower::{Cardinal, ExtensionPair, Field, FieldDescriptor, FieldElem, Tri};
use crate::ideals::FractionalIdeal;
use crate::polyring::Poly;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ClaimId {
    P1a,
    P1b,
    P2,
    P3,
    P4,
    P5,
    P6,
    P7,
    P8,
    T9,
    P10,
    P11,
    P12a,
    P12b,
    P13,
    TDedekind,
    P14a,
    P14b,
    P14c,
    P14d,
    P01,
    P02,
    P04,
    P06,
    P07,
    P09,
    P10G,
    SeqExact,
    Diagram,
}

impl ClaimId {
    pub const ALL: [ClaimId; 29] = [
        ClaimId::P1a,
        ClaimId::P1b,
        ClaimId::P2,
        ClaimId::P3,
        ClaimId::P4,
        ClaimId::P5,
        ClaimId::P6,
        ClaimId::P7,
        ClaimId::P8,
        ClaimId::T9,
        ClaimId::P10,
        ClaimId::P11,
        ClaimId::P12a,
        ClaimId::P12b,
        ClaimId::P13,
        ClaimId::TDedekind,
        ClaimId::P14a,
        ClaimId::P14b,
        ClaimId::P14c,
        ClaimId::P14d,
        ClaimId::P01,
        ClaimId::P02,
        ClaimId::P04,
        ClaimId::P06,
        ClaimId::P07,
        ClaimId::P09,
        ClaimId::P10G,
        ClaimId::SeqExact,
        ClaimId::Diagram,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            ClaimId::P1a => "P1a",
            ClaimId::P1b => "P1b",
            ClaimId::P2 => "P2",
            ClaimId::P3 => "P3",
            ClaimId::P4 => "P4",
            ClaimId::P5 => "P5",
            ClaimId::P6 => "P6",
            ClaimId::P7 => "P7",
            ClaimId::P8 => "P8",
            ClaimId::T9 => "T9",
            ClaimId::P10 => "P10",
            ClaimId::P11 => "P11",
            ClaimId::P12a => "P12a",
            ClaimId::P12b => "P12b",
            ClaimId::P13 => "P13",
            ClaimId::TDedekind => "T_DEDEKIND",
            ClaimId::P14a => "P14a",
            ClaimId::P14b => "P14b",
            ClaimId::P14c => "P14c",
            ClaimId::P14d => "P14d",
            ClaimId::P01 => "P01",
            ClaimId::P02 => "P02",
            ClaimId::P04 => "P04",
            ClaimId::P06 => "P06",
            ClaimId::P07 => "P07",
            ClaimId::P09 => "P09",
            ClaimId::P10G => "P10G",
            ClaimId::SeqExact => "SEQ_EXACT",
            ClaimId::Diagram => "DIAGRAM",
        }
    }

    /// The statement being checked, in this crate's own words.
    pub fn cite(self) -> &'static str {
        match self {
            ClaimId::P1a => "D+XL[X] is atomic iff K+XL[X] is atomic and D is a field",
            ClaimId::P1b => "D+XL[X] has ACCP iff K+XL[X] has ACCP and D is a field",
            ClaimId::P2 => "a noetherian A+XB[X] is a BFD",
            ClaimId::P3 => "D+XL[X] is a BFD iff K+XL[X] is a BFD and D is a field",
            ClaimId::P4 => "D+XL[X] is an HFD iff D is a field and K+XL[X] is an HFD",
            ClaimId::P5 => "M+XL[X] is idf iff K+XL[X] is idf and K*/M* is finite",
            ClaimId::P6 => "for quasilocal T and D not a field, D+XL[X] is idf iff D has finitely many irreducibles",
            ClaimId::P7 => "D+XL[X] is an FFD iff K+XL[X] is an FFD, D is a field and K*/D* is finite",
            ClaimId::P8 => "D+XD_S[X] is an S-domain",
            ClaimId::T9 => "D+XD_S[X] is Hilbert iff D and D_S are Hilbert",
            ClaimId::P10 => "A+XK[X] is an HFD iff A is a field",
            ClaimId::P11 => "for L purely inseparable over K, every ring between K[X] and L[X] is almost Bezout",
            ClaimId::P12a => "the composite cover of I(K,R) is R+XK[X] when all R/(r) are finite",
            ClaimId::P12b => "the composite cover of I(B,A) is A+XB[X] for finite A",
            ClaimId::P13 => "A+XB[X] is integrally closed iff B is and A is integrally closed in B",
            ClaimId::TDedekind => "K+XL[X] is a Dedekind domain for every finite extension K of L",
            ClaimId::P14a => "for a nonzero prime P of T, P times (T:P) is T",
            ClaimId::P14b => "every nonzero ideal of T is a unique product of primes",
            ClaimId::P14c => "every nonzero ideal of T is invertible",
            ClaimId::P14d => "every quotient T/I is a principal ideal ring",
            ClaimId::P01 => "T is Dedekind iff [L:K] is finite",
            ClaimId::P02 => "with L^G = K, T is Dedekind iff L/K is algebraic",
            ClaimId::P04 => "with K perfect and overfield automorphisms fixing L, T is Dedekind iff L/K is separable",
            ClaimId::P06 => "when every K-embedding of L maps L onto itself, T is Dedekind iff L/K is normal",
            ClaimId::P07 => "with L^G = K, T is Dedekind iff L/K is normal",
            ClaimId::P09 => "for noetherian T with |G| = [L:K], T is Dedekind iff L/K is Galois",
            ClaimId::P10G => "with K = L^G, T is Dedekind iff L/K is Galois",
            ClaimId::SeqExact => "0 -> A+XB[X] -> B[X] -> B/A -> 0 is exact",
            ClaimId::Diagram => "FFD => BFD => ACCP => atomic, HFD => atomic, FFD => idf",
        }
    }
}

impl fmt::Display for ClaimId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ClaimId {
    type Err = ClaimError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        ClaimId::ALL
            .into_iter()
            .find(|c| c.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| ClaimError::UnknownClaim(s.to_string()))
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ClaimError {
    #[error("{claim} does not apply to {ring}: {reason}")]
    HypothesisMismatch { claim: ClaimId, ring: String, reason: String },
    #[error("unknown claim id {0}")]
    UnknownClaim(String),
}

#[derive(Clone, Debug, PartialEq)]
pub struct ClaimVerdict {
    pub id: ClaimId,
    pub asserted: Asserted,
    pub cite: &'static str,
    pub tested: Tested,
    /// What the computation found, when it reached a verdict.
    pub observed: Option<bool>,
    pub witness: Witness,
}

impl ClaimVerdict {
    fn new(id: ClaimId, asserted: Asserted, observed: Option<bool>, witness: Witness) -> ClaimVerdict {
        let tested = match (asserted.as_bool(), observed) {
            (Some(a), Some(o)) if a == o => Tested::Pass,
            (Some(_), Some(_)) => Tested::Fail,
            _ => Tested::Untested,
        };
        ClaimVerdict {
            id,
            asserted,
            cite: id.cite(),
            tested,
            observed,
            witness,
        }
    }

    fn untested(id: ClaimId, asserted: Asserted, reason: impl Into<String>) -> ClaimVerdict {
        ClaimVerdict::new(id, asserted, None, Witness::fields([("untested", reason.into())]))
    }

    pub fn record(&self) -> String {
        format!(
            "CLAIM {} asserted={} tested={} cite=\"{}\" witness={}",
            self.id, self.asserted, self.tested, self.cite, self.witness
        )
    }
}

/// A pair of claims whose asserted verdicts cannot both hold.
#[derive(Clone, Debug, PartialEq)]
pub struct CrossCheck {
    pub first: ClaimId,
    pub second: ClaimId,
    pub consistent: bool,
    pub witness: Witness,
}

impl CrossCheck {
    pub fn record(&self) -> String {
        format!(
            "CROSS {}-vs-{} consistent={} witness={}",
            self.first, self.second, self.consistent, self.witness
        )
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Summary {
    pub agree: usize,
    pub contradict: usize,
    pub untested: usize,
}

#[derive(Clone, Debug)]
pub struct SuiteConfig {
    pub seed: u64,
    /// Degree bound for exhaustive enumeration.
    pub degree_bound: usize,
    /// Degree window for ideal computations.
    pub window: usize,
    /// Random pairs drawn for the almost-Bezout check.
    pub bezout_pairs: usize,
    /// Random elements drawn where enumeration is impossible.
    pub samples: usize,
    /// Length of witness chains over ℤ.
    pub chain_steps: usize,
    /// User-supplied: every K-isomorphism of an overfield of L maps L onto L.
    pub overfield_automorphisms: bool,
    pub limits: OracleLimits,
    pub mode: ExecMode,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            seed: crate::DEFAULT_SEED,
            degree_bound: 4,
            window: 8,
            bezout_pairs: 50,
            samples: 64,
            chain_steps: 20,
            overfield_automorphisms: false,
            limits: OracleLimits::default(),
            mode: ExecMode::default(),
        }
    }
}

#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub ring: CompositeRing,
    pub verdicts: Vec<ClaimVerdict>,
    pub cross: Vec<CrossCheck>,
    pub properties: PropertyReport,
    pub summary: Summary,
}

impl SuiteReport {
    pub fn get(&self, id: ClaimId) -> Option<&ClaimVerdict> {
        self.verdicts.iter().find(|v| v.id == id)
    }

    /// Claims that failed, then cross checks that are inconsistent.
    pub fn contradictions(&self) -> Vec<String> {
        self.verdicts
            .iter()
            .filter(|v| v.tested == Tested::Fail)
            .map(|v| v.id.to_string())
            .chain(
                self.cross
                    .iter()
                    .filter(|c| !c.consistent)
                    .map(|c| format!("{}-vs-{}", c.first, c.second)),
            )
            .collect()
    }

    pub fn render_records(&self) -> String {
        let mut out = format!("RING \"{}\"\n", self.ring);
        for v in &self.verdicts {
            out.push_str(&v.record());
            out.push('\n');
        }
        for c in &self.cross {
            out.push_str(&c.record());
            out.push('\n');
        }
        let s = self.summary;
        out.push_str(&format!(
            "SUMMARY agree={} contradict={} untested={} contradictions=[{}]\n",
            s.agree,
            s.contradict,
            s.untested,
            self.contradictions().join(",")
        ));
        out
    }

    pub fn render_table(&self) -> String {
        let mut out = format!("{}\n", self.ring);
        out.push_str(&format!("{:<12} {:<28} {:<9} {}\n", "claim", "asserted", "tested", "witness"));
        for v in &self.verdicts {
            out.push_str(&format!(
                "{:<12} {:<28} {:<9} {}\n",
                v.id.as_str(),
                v.asserted.to_string(),
                v.tested.to_string(),
                v.witness
            ));
        }
        for c in &self.cross {
            let name = format!("{}-vs-{}", c.first, c.second);
            let status = if c.consistent { "consistent" } else { "conflict" };
            out.push_str(&format!("{name:<41} {status:<9} {}\n", c.witness));
        }
        let s = self.summary;
        out.push_str(&format!(
            "agree {}  contradict {}  untested {}\n",
            s.agree, s.contradict, s.untested
        ));
        out
    }
}

/// Shared state of one run: the lazily built enumeration oracle.
struct Ctx<'a> {
    ring: &'a CompositeRing,
    cfg: &'a SuiteConfig,
    brute: OnceLock<Result<BruteForce, String>>,
}

impl<'a> Ctx<'a> {
    fn new(ring: &'a CompositeRing, cfg: &'a SuiteConfig) -> Self {
        Ctx {
            ring,
            cfg,
            brute: OnceLock::new(),
        }
    }

    fn brute(&self) -> Result<&BruteForce, String> {
        self.brute
            .get_or_init(|| {
                BruteForce::new(self.ring, self.cfg.degree_bound, self.cfg.limits, self.cfg.mode).map_err(|e| e.to_string())
            })
            .as_ref()
            .map_err(|e| e.clone())
    }

    fn rng(&self, id: ClaimId) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.cfg.seed ^ (id as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15))
    }

    fn mismatch(&self, claim: ClaimId, reason: impl Into<String>) -> ClaimError {
        ClaimError::HypothesisMismatch {
            claim,
            ring: self.ring.to_string(),
            reason: reason.into(),
        }
    }

    fn pair(&self, claim: ClaimId) -> Result<&'a ExtensionPair, ClaimError> {
        self.ring.pair().ok_or_else(|| self.mismatch(claim, "needs a field pair K ⊆ L"))
    }

    fn finite_fields(&self) -> bool {
        self.ring.pair().is_some_and(|p| p.is_finite_pair())
    }
}

pub fn run_claim(ring: &CompositeRing, id: ClaimId, cfg: &SuiteConfig) -> Result<ClaimVerdict, ClaimError> {
    let ctx = Ctx::new(ring, cfg);
    if id == ClaimId::Diagram {
        let report = tested_property_report(&ctx, &[]);
        return Ok(diagram_verdict(&report));
    }
    run_with(&ctx, id)
}

/// Runs every claim whose hypotheses the ring satisfies, in claim order.
pub fn run_suite(ring: &CompositeRing, cfg: &SuiteConfig) -> SuiteReport {
    let ctx = Ctx::new(ring, cfg);
    let ids: Vec<ClaimId> = ClaimId::ALL.into_iter().filter(|&c| c != ClaimId::Diagram).collect();
    let results = cfg.mode.map(ids, |id| run_with(&ctx, id));
    let mut verdicts: Vec<ClaimVerdict> = results.into_iter().filter_map(Result::ok).collect();
    let properties = tested_property_report(&ctx, &verdicts);
    verdicts.push(diagram_verdict(&properties));

    let mut cross = Vec::new();
    let find = |id| verdicts.iter().find(|v: &&ClaimVerdict| v.id == id);
    if let (Some(ic), Some(ded)) = (find(ClaimId::P13), find(ClaimId::TDedekind)) {
        // a Dedekind domain is integrally closed
        let consistent = !(ded.asserted == Asserted::True && ic.asserted == Asserted::False);
        cross.push(CrossCheck {
            first: ClaimId::P13,
            second: ClaimId::TDedekind,
            consistent,
            witness: ic.witness.clone(),
        });
    }
    let mut summary = Summary::default();
    for v in &verdicts {
        match v.tested {
            Tested::Pass => summary.agree += 1,
            Tested::Fail => summary.contradict += 1,
            Tested::Untested => summary.untested += 1,
        }
    }
    summary.contradict += cross.iter().filter(|c| !c.consistent).count();
    SuiteReport {
        ring: ring.clone(),
        verdicts,
        cross,
        properties,
        summary,
    }
}

fn run_with(ctx: &Ctx, id: ClaimId) -> Result<ClaimVerdict, ClaimError> {
    match id {
        ClaimId::P1a => Ok(atomic(ctx)),
        ClaimId::P1b => Ok(accp(ctx)),
        ClaimId::P2 => noetherian_bfd(ctx),
        ClaimId::P3 => Ok(bfd(ctx, ClaimId::P3)),
        ClaimId::P4 => Ok(hfd(ctx, ClaimId::P4)),
        ClaimId::P5 => idf(ctx, ClaimId::P5),
        ClaimId::P6 => quasilocal_idf(ctx),
        ClaimId::P7 => ffd(ctx),
        ClaimId::P8 => s_domain(ctx, ClaimId::P8),
        ClaimId::T9 => s_domain(ctx, ClaimId::T9),
        ClaimId::P10 => Ok(hfd(ctx, ClaimId::P10)),
        ClaimId::P11 => almost_bezout(ctx),
        ClaimId::P12a => residue_cover(ctx),
        ClaimId::P12b => subring_cover(ctx),
        ClaimId::P13 => Ok(integrally_closed(ctx)),
        ClaimId::TDedekind => dedekind(ctx),
        ClaimId::P14a => primes_invertible(ctx),
        ClaimId::P14b => prime_factorization(ctx),
        ClaimId::P14c => ideals_invertible(ctx),
        ClaimId::P14d => quotients_pir(ctx),
        ClaimId::P01
        | ClaimId::P02
        | ClaimId::P04
        | ClaimId::P06
        | ClaimId::P07
        | ClaimId::P09
        | ClaimId::P10G => predicate_claim(ctx, id),
        ClaimId::SeqExact => Ok(exact_sequence(ctx)),
        ClaimId::Diagram => Ok(diagram_verdict(&tested_property_report(ctx, &[]))),
    }
}

// ---- factorization properties -------------------------------------------

/// Over ℤ-type rings, `X = d^k·(X/d^k)` for every `k`: each `X/d^k` is
/// reducible and the principal ideals grow strictly.
struct ZWitness {
    chain_strict: bool,
    all_reducible: bool,
    lengths_grow: bool,
    chain: Vec<String>,
}

fn z_witness(ctx: &Ctx) -> Option<ZWitness> {
    let d = ctx.ring.canonical_nonunit()?;
    let big = ctx.ring.big().clone();
    let x = Poly::x(big.clone());
    let chain = ctx.ring.accp_failure_chain(&x, &d, ctx.cfg.chain_steps).ok()?;
    let all_reducible = chain.generators.iter().all(|g| matches!(ctx.ring.is_irreducible(g), Ok(false)));
    let d_poly = Poly::constant(big.clone(), FieldElem::Q(BigRational::from_integer(d.clone())));
    // d^k · (X/d^k) recovers X with k + 1 nonunit factors
    let lengths_grow = chain.generators.iter().enumerate().all(|(k, g)| {
        let mut prod = g.clone();
        for _ in 0..k {
            prod = prod.mul(&d_poly);
        }
        prod == x && !ctx.ring.is_unit(g)
    }) && !ctx.ring.is_unit(&d_poly);
    Some(ZWitness {
        chain_strict: chain.all_strict(),
        all_reducible,
        lengths_grow,
        chain: chain.generators.iter().take(4).map(|g| format!("({g})")).collect(),
    })
}

fn small_field_assertion(ctx: &Ctx) -> Asserted {
    Asserted::from_bool(ctx.ring.small_is_field())
}

fn atomic(ctx: &Ctx) -> ClaimVerdict {
    let id = ClaimId::P1a;
    let asserted = small_field_assertion(ctx);
    if let Some(z) = z_witness(ctx) {
        let observed = !(z.all_reducible && z.chain_strict);
        return ClaimVerdict::new(id, asserted, Some(observed), Witness::Chain(z.chain));
    }
    match ctx.brute() {
        Ok(bf) => {
            let cands = bf.candidates().to_vec();
            let ok = ctx.cfg.mode.all(cands.clone(), |e| bf.length_set(&e).is_ok_and(|s| !s.is_empty()));
            ClaimVerdict::new(
                id,
                asserted,
                Some(ok),
                Witness::fields([("factored", cands.len().to_string()), ("degree", ctx.cfg.degree_bound.to_string())]),
            )
        }
        Err(why) => sampled_atomic(ctx, asserted, why),
    }
}

/// Seeded elements of the ring with degree at most the bound.
fn sample_elements(ctx: &Ctx, id: ClaimId) -> Vec<Poly> {
    let mut rng = ctx.rng(id);
    let big = ctx.ring.big().clone();
    (0..ctx.cfg.samples)
        .filter_map(|_| {
            let deg = rng.gen_range(1..=ctx.cfg.degree_bound.max(1));
            let mut coeffs: Vec<FieldElem> = (0..=deg).map(|_| big.random(&mut rng)).collect();
            coeffs[0] = match ctx.ring.pair() {
                Some(pair) => pair.embed(&pair.small().random(&mut rng)),
                None => big.from_int(rng.gen_range(-6..=6)),
            };
            let p = Poly::new(big.clone(), coeffs);
            (!p.is_zero() && ctx.ring.contains(&p) && !ctx.ring.is_unit(&p)).then_some(p)
        })
        .collect()
}

fn sampled_atomic(ctx: &Ctx, asserted: Asserted, why: String) -> ClaimVerdict {
    let id = ClaimId::P1a;
    let samples = sample_elements(ctx, id);
    let results = ctx.cfg.mode.map(samples.clone(), |e| {
        ctx.ring.factor_atoms(&e).map(|f| {
            f.expand(ctx.ring) == e && f.atoms.iter().all(|a| matches!(ctx.ring.is_irreducible(a), Ok(true)))
        })
    });
    if results.iter().any(|r| r.is_err()) {
        return ClaimVerdict::untested(id, asserted, format!("no exhaustive oracle ({why}) and factorization unsupported"));
    }
    let ok = results.into_iter().all(|r| r.unwrap());
    ClaimVerdict::new(
        id,
        asserted,
        Some(ok),
        Witness::fields([("sampled_factorizations", samples.len().to_string()), ("oracle", why)]),
    )
}

fn accp(ctx: &Ctx) -> ClaimVerdict {
    let id = ClaimId::P1b;
    let asserted = small_field_assertion(ctx);
    if let Some(z) = z_witness(ctx) {
        return ClaimVerdict::new(id, asserted, Some(!z.chain_strict), Witness::Chain(z.chain));
    }
    match ctx.brute() {
        Ok(bf) => {
            // a strict step (e) ⊊ (g) must lower the degree, so chains are finite
            let top = ctx.cfg.degree_bound.min(3);
            let cands: Vec<Poly> = bf.candidates().iter().filter(|c| c.degree().unwrap() <= top).cloned().collect();
            let ok = ctx.cfg.mode.all(cands.clone(), |e| {
                cands.iter().all(|g| match ctx.ring.divide(&e, g) {
                    Some(c) if !ctx.ring.is_unit(&c) => g.degree() < e.degree(),
                    _ => true,
                })
            });
            ClaimVerdict::new(
                id,
                asserted,
                Some(ok),
                Witness::fields([("strict_steps_lower_degree", ok.to_string()), ("elements", cands.len().to_string())]),
            )
        }
        Err(why) => ClaimVerdict::untested(id, asserted, why),
    }
}

/// Length sets of every enumerated element stay below the degree.
fn bounded_lengths(ctx: &Ctx) -> Result<(bool, usize), String> {
    let bf = ctx.brute()?;
    let cands = bf.candidates().to_vec();
    let n = cands.len();
    let ok = ctx.cfg.mode.all(cands, |e| {
        let d = e.degree().unwrap();
        bf.length_set(&e).is_ok_and(|s| s.iter().all(|&l| l <= d))
    });
    Ok((ok, n))
}

fn noetherian_bfd(ctx: &Ctx) -> Result<ClaimVerdict, ClaimError> {
    let id = ClaimId::P2;
    let pair = ctx.pair(id)?;
    if !pair.degree().is_finite() {
        return Err(ctx.mismatch(id, "[L:K] is infinite, so the ring is not noetherian"));
    }
    Ok(match bounded_lengths(ctx) {
        Ok((ok, n)) => ClaimVerdict::new(
            id,
            Asserted::True,
            Some(ok),
            Witness::fields([("lengths_at_most_degree", ok.to_string()), ("elements", n.to_string())]),
        ),
        Err(why) => ClaimVerdict::untested(id, Asserted::True, why),
    })
}

fn bfd(ctx: &Ctx, id: ClaimId) -> ClaimVerdict {
    let asserted = small_field_assertion(ctx);
    if let Some(z) = z_witness(ctx) {
        let witness = Witness::fields([
            ("factorizations_of_X", format!("d^k*(X/d^k) for k <= {}", ctx.cfg.chain_steps)),
            ("lengths_unbounded", z.lengths_grow.to_string()),
        ]);
        return ClaimVerdict::new(id, asserted, Some(!z.lengths_grow), witness);
    }
    match bounded_lengths(ctx) {
        Ok((ok, n)) => ClaimVerdict::new(
            id,
            asserted,
            Some(ok),
            Witness::fields([("lengths_at_most_degree", ok.to_string()), ("elements", n.to_string())]),
        ),
        Err(why) => ClaimVerdict::untested(id, asserted, why),
    }
}

fn hfd(ctx: &Ctx, id: ClaimId) -> ClaimVerdict {
    let asserted = small_field_assertion(ctx);
    if let Some(z) = z_witness(ctx) {
        let witness = Witness::fields([
            ("element", "X".to_string()),
            ("nonunit_factor_counts", format!("1..={}", ctx.cfg.chain_steps + 1)),
            ("reducible_chain", z.all_reducible.to_string()),
        ]);
        return ClaimVerdict::new(id, asserted, Some(!(z.lengths_grow && z.all_reducible)), witness);
    }
    match ctx.brute() {
        Ok(bf) => {
            let cands = bf.candidates().to_vec();
            let n = cands.len();
            let bad = ctx.cfg.mode.map(cands, |e| {
                let set = bf.length_set(&e).unwrap_or_default();
                let ok = set.len() == 1 && ctx.ring.factor_atoms(&e).is_ok_and(|f| set.contains(&f.len()));
                (!ok).then(|| format!("{e}: {set:?}"))
            });
            let bad: Vec<String> = bad.into_iter().flatten().collect();
            let mut fields = vec![
                ("singleton_length_sets".to_string(), (n - bad.len()).to_string()),
                ("elements".to_string(), n.to_string()),
            ];
            if let Some(b) = bad.first() {
                fields.push(("exception".to_string(), b.clone()));
            }
            ClaimVerdict::new(id, asserted, Some(bad.is_empty()), Witness::Fields(fields))
        }
        Err(why) => ClaimVerdict::untested(id, asserted, why),
    }
}

/// Counts pairwise non-associate divisors `a·X` of `X²`. Returns the count
/// and whether the search was exhaustive.
fn x_square_divisors(ctx: &Ctx, pair: &ExtensionPair, cap: usize) -> (usize, bool) {
    let l = pair.big();
    if let Ok(bf) = ctx.brute() {
        let x2 = Poly::monomial(l.clone(), l.one(), 2);
        if let Ok(d) = bf.irreducible_divisors(&x2) {
            return (d.len(), true);
        }
    }
    let mut reps: Vec<FieldElem> = Vec::new();
    let consider = |a: FieldElem, reps: &mut Vec<FieldElem>| {
        if !l.is_zero(&a) && reps.iter().all(|b| !pair.contains(&l.div(&a, b))) {
            reps.push(a);
        }
    };
    match l.order() {
        Some(q) if q <= 1 << 16 => {
            for a in l.elements() {
                consider(a, &mut reps);
            }
            (reps.len(), true)
        }
        _ => {
            let mut rng = ctx.rng(ClaimId::P5);
            if let Some(g) = l.generator() {
                consider(g, &mut reps);
            }
            if matches!(l.descriptor(), FieldDescriptor::FunctionField { .. }) {
                // polynomials in t, enumerated by their base-p digits
                let p = l.characteristic();
                for mut i in 1u64..1 << 10 {
                    if reps.len() >= cap {
                        break;
                    }
                    let mut digits = Vec::new();
                    while i > 0 {
                        digits.push(i % p);
                        i /= p;
                    }
                    consider(l.from_ratfunc(digits, vec![1]), &mut reps);
                }
            }
            for _ in 0..ctx.cfg.samples * 16 {
                if reps.len() >= cap {
                    break;
                }
                consider(l.random(&mut rng), &mut reps);
            }
            (reps.len(), false)
        }
    }
}

const INFINITE_EVIDENCE: usize = 16;

fn coset_claim(ctx: &Ctx, id: ClaimId) -> Result<ClaimVerdict, ClaimError> {
    let pair = ctx.pair(id)?;
    let index = pair.unit_coset_index().index;
    let asserted = Asserted::from_bool(index.is_finite());
    let (count, exhaustive) = x_square_divisors(ctx, pair, INFINITE_EVIDENCE);
    let observed = match index {
        Cardinal::Finite(n) if exhaustive => Some(count as u64 == n),
        Cardinal::Finite(n) if count as u64 > n => Some(false),
        _ if count >= INFINITE_EVIDENCE => Some(false),
        _ => None,
    };
    let index_text = match index {
        Cardinal::Finite(n) => n.to_string(),
        Cardinal::Infinite => "infinite".into(),
    };
    let witness = Witness::fields([
        ("divisors_of_X^2", if exhaustive { count.to_string() } else { format!(">={count}") }),
        ("coset_index", index_text),
    ]);
    Ok(ClaimVerdict::new(id, asserted, observed, witness))
}

fn idf(ctx: &Ctx, id: ClaimId) -> Result<ClaimVerdict, ClaimError> {
    coset_claim(ctx, id)
}

fn ffd(ctx: &Ctx) -> Result<ClaimVerdict, ClaimError> {
    let id = ClaimId::P7;
    if let Some(z) = z_witness(ctx) {
        // the X/d^k are pairwise non-associate divisors of X
        return Ok(ClaimVerdict::new(id, Asserted::False, Some(!z.chain_strict), Witness::Chain(z.chain)));
    }
    coset_claim(ctx, id)
}

fn quasilocal_idf(ctx: &Ctx) -> Result<ClaimVerdict, ClaimError> {
    let id = ClaimId::P6;
    if ctx.ring.small_is_field() {
        return Err(ctx.mismatch(id, "D is a field"));
    }
    Ok(ClaimVerdict::untested(
        id,
        Asserted::Conditional("needs a quasilocal top ring; Q[X] is not quasilocal".into()),
        "assertion only",
    ))
}

fn s_domain(ctx: &Ctx, id: ClaimId) -> Result<ClaimVerdict, ClaimError> {
    if let Some(pair) = ctx.ring.pair() {
        if !pair.is_identity() {
            return Err(ctx.mismatch(id, "a field pair K ⊊ L is not of the form D+XD_S[X]"));
        }
    }
    Ok(ClaimVerdict::untested(id, Asserted::True, "assertion only: needs prime heights"))
}

// ---- witnesses ------------------------------------------------------------

fn almost_bezout(ctx: &Ctx) -> Result<ClaimVerdict, ClaimError> {
    let id = ClaimId::P11;
    let pair = ctx.pair(id)?;
    if !pair.is_perfect_power_pair() {
        return Err(ctx.mismatch(id, "needs F_p(t^(p^e)) ⊂ F_p(t)"));
    }
    let e = pair.inseparable_exponent().unwrap();
    let l = pair.big().clone();
    let mut rng = ctx.rng(id);
    let random_poly = |rng: &mut ChaCha8Rng| loop {
        let deg = rng.gen_range(0..=3);
        let p = Poly::new(l.clone(), (0..=deg).map(|_| l.random(rng)).collect());
        if !p.is_zero() {
            return p;
        }
    };
    let pairs: Vec<(Poly, Poly)> = (0..ctx.cfg.bezout_pairs)
        .map(|_| (random_poly(&mut rng), random_poly(&mut rng)))
        .collect();
    let outcomes = ctx.cfg.mode.map(pairs, |(f, g)| match ctx.ring.almost_bezout_witness(&f, &g) {
        Ok(w) => w.n <= e && w.verify(),
        Err(_) => false,
    });
    let passed = outcomes.iter().filter(|&&b| b).count();
    Ok(ClaimVerdict::new(
        id,
        Asserted::True,
        Some(passed == outcomes.len()),
        Witness::fields([("verified_pairs", format!("{passed}/{}", outcomes.len())), ("max_n", e.to_string())]),
    ))
}

fn residue_cover(ctx: &Ctx) -> Result<ClaimVerdict, ClaimError> {
    let id = ClaimId::P12a;
    if !matches!(ctx.ring.small(), SmallRing::Integers) {
        return Err(ctx.mismatch(id, "the cover of I(Q, Z) is Z + X*Q[X]"));
    }
    let mut ok = true;
    let mut shown = String::new();
    for r in [2i64, 3, 5] {
        let Ok(inst) = composite_cover(&CoverVariant::integers(r)) else {
            ok = false;
            continue;
        };
        let lead = inst.witness.leading().cloned();
        let escapes = matches!(lead, Some(FieldElem::Q(ref c)) if !c.is_integer());
        let values = (-10i64..=10).all(|a| {
            matches!(inst.witness.evaluate(&FieldElem::Q(BigRational::from_integer(a.into()))), Ok(FieldElem::Q(v)) if v.is_integer())
        });
        ok &= escapes && values && inst.cover == *ctx.ring;
        if r == 2 {
            shown = inst.witness.to_string();
        }
    }
    Ok(ClaimVerdict::new(
        id,
        Asserted::True,
        Some(ok),
        Witness::fields([("witness_r2", shown), ("moduli", "2,3,5".into())]),
    ))
}

fn subring_cover(ctx: &Ctx) -> Result<ClaimVerdict, ClaimError> {
    let id = ClaimId::P12b;
    let pair = ctx.pair(id)?;
    if !pair.small().is_finite() {
        return Err(ctx.mismatch(id, "the small field must be finite"));
    }
    let l = pair.big();
    let b = l.primitive_element().or_else(|| l.generator()).unwrap_or_else(|| l.one());
    let variant = CoverVariant::FiniteSubring { pair: pair.clone(), b: b.clone() };
    Ok(match composite_cover(&variant) {
        Ok(inst) => {
            // the leading coefficient b leaves K unless K = L
            let escapes = pair.is_identity() || !pair.contains(&b);
            let ok = escapes && int_valued_membership(&variant, &inst.witness) && inst.cover == *ctx.ring;
            ClaimVerdict::new(
                id,
                Asserted::True,
                Some(ok),
                Witness::fields([("witness", inst.witness.to_string()), ("leading_outside_K", escapes.to_string())]),
            )
        }
        Err(e) => ClaimVerdict::new(id, Asserted::True, Some(false), Witness::fields([("error", e.to_string())])),
    })
}

// ---- integral closure and ideals -----------------------------------------

/// Searches `L \ K` for an element integral over `K` (so over `T`) but not in
/// `T`. `None` means the search found nothing.
fn integrality_witness(ctx: &Ctx, pair: &ExtensionPair) -> (Option<(FieldElem, Poly)>, usize) {
    let l = pair.big();
    let mut pool: Vec<FieldElem> = Vec::new();
    if let Some(g) = l.generator() {
        pool.push(g);
    }
    match l.order() {
        Some(q) if q <= 4096 => pool.extend(l.elements()),
        _ => {
            let mut rng = ctx.rng(ClaimId::P13);
            pool.extend((0..ctx.cfg.samples).map(|_| l.random(&mut rng)));
        }
    }
    let searched = pool.len();
    let found = pool
        .into_iter()
        .filter(|a| !pair.contains(a))
        .find_map(|a| pair.minimal_polynomial(&a).ok().map(|m| (a, m)));
    (found, searched)
}

struct ClosureEvidence {
    observed: Option<bool>,
    witness: Witness,
}

fn closure_evidence(ctx: &Ctx) -> ClosureEvidence {
    match ctx.ring.pair() {
        Some(pair) => {
            let (found, searched) = integrality_witness(ctx, pair);
            match found {
                Some((a, m)) => ClosureEvidence {
                    observed: Some(false),
                    witness: Witness::fields([
                        ("integral", pair.big().format(&a)),
                        ("minpoly", m.to_string()),
                        ("in_T", "false".to_string()),
                    ]),
                },
                None => ClosureEvidence {
                    observed: Some(true),
                    witness: Witness::fields([("integral_elements_outside_K", "none".to_string()), ("searched", searched.to_string())]),
                },
            }
        }
        None => {
            // rational root test: a monic integer polynomial has no root in Q \ Z
            let mut rng = ctx.rng(ClaimId::P13);
            let mut found = None;
            'outer: for _ in 0..ctx.cfg.samples {
                let q = BigRational::new(rng.gen_range(-9i64..=9).into(), rng.gen_range(2i64..=9).into());
                if q.is_integer() {
                    continue;
                }
                for b in -4i64..=4 {
                    for c in -4i64..=4 {
                        let v = &q * &q + &q * BigInt::from(b) + BigRational::from_integer(c.into());
                        if v.is_zero() {
                            found = Some(q);
                            break 'outer;
                        }
                    }
                }
            }
            ClosureEvidence {
                observed: Some(found.is_none()),
                witness: Witness::fields([("rational_root_test", "no non-integer root of a monic x^2+bx+c, |b|,|c|<=4")]),
            }
        }
    }
}

fn integrally_closed(ctx: &Ctx) -> ClaimVerdict {
    let id = ClaimId::P13;
    let asserted = property_report(ctx.ring)
        .get(Property::IntegrallyClosed)
        .map(|e| e.asserted.clone())
        .unwrap_or(Asserted::Conditional("no prediction".into()));
    let ev = closure_evidence(ctx);
    ClaimVerdict::new(id, asserted, ev.observed, ev.witness)
}

fn unit_poly(ctx: &Ctx, a: &FieldElem) -> Poly {
    let l = ctx.ring.big();
    Poly::new(l.clone(), vec![l.one(), a.clone()])
}

/// Primes to try: `M = X·L[X]` and `(1 + aX)` for a few `a`.
fn test_primes(ctx: &Ctx) -> Vec<FractionalIdeal> {
    let l = ctx.ring.big().clone();
    let mut out = Vec::new();
    if let Ok(m) = FractionalIdeal::maximal_x(ctx.ring) {
        out.push(m);
    }
    let mut coeffs = vec![l.one()];
    if let Some(g) = l.generator() {
        coeffs.push(g);
    }
    coeffs.dedup();
    for a in coeffs {
        if let Ok(i) = FractionalIdeal::principal(ctx.ring, unit_poly(ctx, &a)) {
            out.push(i);
        }
    }
    for i in &mut out {
        i.set_window(ctx.cfg.window.max(i.window()));
    }
    out
}

fn test_ideals(ctx: &Ctx) -> Vec<FractionalIdeal> {
    let l = ctx.ring.big().clone();
    let mut out = test_primes(ctx);
    let x = Poly::x(l.clone());
    let extra = [x.clone(), x.mul(&unit_poly(ctx, &l.one())), Poly::monomial(l.clone(), l.one(), 2)];
    for p in extra {
        if let Ok(mut i) = FractionalIdeal::principal(ctx.ring, p) {
            i.set_window(ctx.cfg.window.max(i.window()));
            out.push(i);
        }
    }
    out
}

/// Checks invertibility of each ideal, reporting the first failure.
fn invertibility_evidence(ctx: &Ctx, ideals: Vec<FractionalIdeal>) -> (Option<bool>, Witness) {
    let n = ideals.len();
    let results = ctx.cfg.mode.map(ideals.clone(), |i| i.is_invertible());
    let mut fields = vec![("ideals_checked".to_string(), n.to_string())];
    for (i, r) in ideals.iter().zip(results) {
        match r {
            Ok(v) if v.is_invertible() => {}
            Ok(v) => {
                fields.push(("not_invertible".to_string(), i.to_string()));
                fields.push(("product_with_colon".to_string(), v.to_string().replace("not-invertible product=", "")));
                return (Some(false), Witness::Fields(fields));
            }
            Err(e) => {
                fields.push(("error".to_string(), e.to_string()));
                return (None, Witness::Fields(fields));
            }
        }
    }
    (Some(true), Witness::Fields(fields))
}

fn require_finite_pair<'a>(ctx: &Ctx<'a>, id: ClaimId) -> Result<&'a ExtensionPair, ClaimError> {
    let pair = ctx.pair(id)?;
    if !pair.degree().is_finite() {
        return Err(ctx.mismatch(id, "[L:K] is infinite"));
    }
    Ok(pair)
}

fn dedekind(ctx: &Ctx) -> Result<ClaimVerdict, ClaimError> {
    let id = ClaimId::TDedekind;
    require_finite_pair(ctx, id)?;
    let ev = closure_evidence(ctx);
    let mut fields = match ev.witness {
        Witness::Fields(f) => f,
        other => vec![("closure".to_string(), other.to_string())],
    };
    let mut observed = ev.observed;
    if ctx.finite_fields() {
        let (inv, w) = invertibility_evidence(ctx, test_ideals(ctx));
        if let Witness::Fields(f) = w {
            fields.extend(f);
        }
        observed = match (observed, inv) {
            (Some(a), Some(b)) => Some(a && b),
            (Some(false), _) | (_, Some(false)) => Some(false),
            _ => None,
        };
    } else if observed == Some(true) {
        // integrally closed alone does not make a Dedekind domain
        fields.push(("ideals".to_string(), "ideal arithmetic needs finite fields".to_string()));
        observed = None;
    }
    Ok(ClaimVerdict::new(id, Asserted::True, observed, Witness::Fields(fields)))
}

fn ideal_claim(ctx: &Ctx, id: ClaimId, ideals: Vec<FractionalIdeal>) -> Result<ClaimVerdict, ClaimError> {
    ctx.pair(id)?;
    if !ctx.finite_fields() {
        return Ok(ClaimVerdict::untested(id, Asserted::True, "ideal arithmetic needs finite fields"));
    }
    let (observed, witness) = invertibility_evidence(ctx, ideals);
    Ok(ClaimVerdict::new(id, Asserted::True, observed, witness))
}

fn primes_invertible(ctx: &Ctx) -> Result<ClaimVerdict, ClaimError> {
    ideal_claim(ctx, ClaimId::P14a, test_primes(ctx))
}

fn ideals_invertible(ctx: &Ctx) -> Result<ClaimVerdict, ClaimError> {
    ideal_claim(ctx, ClaimId::P14c, test_ideals(ctx))
}

fn prime_factorization(ctx: &Ctx) -> Result<ClaimVerdict, ClaimError> {
    let id = ClaimId::P14b;
    let pair = ctx.pair(id)?;
    if !ctx.finite_fields() {
        return Ok(ClaimVerdict::untested(id, Asserted::True, "ideal arithmetic needs finite fields"));
    }
    if !pair.is_identity() {
        return Ok(ClaimVerdict::untested(id, Asserted::True, "factorization is only certified for K = L"));
    }
    let l = ctx.ring.big().clone();
    let x = Poly::x(l.clone());
    let one_x = unit_poly(ctx, &l.one());
    let mut ideals: Vec<FractionalIdeal> = [x.mul(&one_x), x.pow(3), one_x.pow(2).mul(&x)]
        .into_iter()
        .filter_map(|p| FractionalIdeal::principal(ctx.ring, p).ok())
        .collect();
    if let Ok(frac) = FractionalIdeal::new(ctx.ring, 1, vec![one_x.clone()]) {
        ideals.push(frac);
    }
    let n = ideals.len();
    let round_trips = ctx.cfg.mode.map(ideals.clone(), |i| -> Option<String> {
        let fac = i.factor().ok()?;
        let unit = FractionalIdeal::unit(ctx.ring).ok()?;
        let prod = fac.iter().try_fold(unit, |acc, (p, e)| acc.product(&p.pow(*e).ok()?).ok())?;
        let text: Vec<String> = fac.iter().map(|(p, e)| format!("{p}^{e}")).collect();
        (prod == i).then(|| text.join("*"))
    });
    let ok = round_trips.iter().all(Option::is_some);
    let mut fields = vec![("round_trips".to_string(), format!("{}/{n}", round_trips.iter().flatten().count()))];
    if let Some(Some(first)) = round_trips.first() {
        fields.push((ideals[0].to_string(), first.clone()));
    }
    Ok(ClaimVerdict::new(id, Asserted::True, Some(ok), Witness::Fields(fields)))
}

fn quotients_pir(ctx: &Ctx) -> Result<ClaimVerdict, ClaimError> {
    let id = ClaimId::P14d;
    ctx.pair(id)?;
    if !ctx.finite_fields() {
        return Ok(ClaimVerdict::untested(id, Asserted::True, "ideal arithmetic needs finite fields"));
    }
    let l = ctx.ring.big().clone();
    let mut ideals = Vec::new();
    for p in [Poly::x(l.clone()), Poly::monomial(l.clone(), l.one(), 2)] {
        if let Ok(i) = FractionalIdeal::principal(ctx.ring, p) {
            ideals.push(i);
        }
    }
    if let Ok(m) = FractionalIdeal::maximal_x(ctx.ring) {
        ideals.push(m);
    }
    for i in &mut ideals {
        i.set_window(ctx.cfg.window.max(i.window()));
    }
    let mut fields = Vec::new();
    let mut observed = Some(true);
    for i in &ideals {
        match i.quotient_pir_check(ctx.cfg.mode) {
            Ok(v) => {
                fields.push((format!("T/{i}"), v.to_string()));
                if !v.is_pir() {
                    observed = Some(false);
                }
            }
            Err(e) => {
                fields.push((format!("T/{i}"), e.to_string()));
                if observed == Some(true) {
                    observed = None;
                }
            }
        }
    }
    Ok(ClaimVerdict::new(id, Asserted::True, observed, Witness::Fields(fields)))
}

// ---- extension predicates -------------------------------------------------

/// `L^G = K`, where it can be decided.
fn fixed_field_is_small(pair: &ExtensionPair) -> Tri {
    if pair.is_identity() {
        return Tri::True;
    }
    if let Ok(b) = pair.fixed_field_is_small(1 << 16) {
        return Tri::from_bool(b);
    }
    let pr = pair.predicates();
    if pr.purely_inseparable == Tri::True {
        // G is trivial and L ≠ K
        return Tri::False;
    }
    if pair.degree().is_finite() {
        // Artin: for finite extensions L^G = K exactly when L/K is Galois
        return pr.galois;
    }
    Tri::Unknown
}

/// `|G| = [L:K]`.
fn group_matches_degree(pair: &ExtensionPair) -> Tri {
    match (pair.automorphism_group(), pair.degree()) {
        (Ok(g), Cardinal::Finite(d)) => Tri::from_bool(g.len() as u64 == d),
        (_, Cardinal::Infinite) => Tri::False,
        (Err(_), Cardinal::Finite(_)) => pair.predicates().galois,
    }
}

fn is_perfect(f: &Field) -> bool {
    f.characteristic() == 0 || f.is_finite()
}

fn predicate_claim(ctx: &Ctx, id: ClaimId) -> Result<ClaimVerdict, ClaimError> {
    let pair = ctx.pair(id)?;
    let pr = pair.predicates();
    let need = |t: Tri, what: &str| -> Result<(), ClaimError> {
        match t {
            Tri::True => Ok(()),
            Tri::False => Err(ctx.mismatch(id, format!("hypothesis fails: {what}"))),
            Tri::Unknown => Err(ctx.mismatch(id, format!("hypothesis undecided: {what}"))),
        }
    };
    let (predicate, name) = match id {
        ClaimId::P01 => (Tri::from_bool(pair.degree().is_finite()), "finite degree"),
        ClaimId::P02 => {
            need(fixed_field_is_small(pair), "L^G = K")?;
            (pr.algebraic, "algebraic")
        }
        ClaimId::P04 => {
            need(Tri::from_bool(is_perfect(pair.small())), "K perfect")?;
            if !ctx.cfg.overfield_automorphisms {
                return Ok(ClaimVerdict::untested(
                    id,
                    dedekind_assertion(pair),
                    "overfield automorphism hypothesis not supplied",
                ));
            }
            (pr.separable, "separable")
        }
        ClaimId::P06 => {
            need(pr.normal, "K-embeddings of L map onto L")?;
            (pr.normal, "normal")
        }
        ClaimId::P07 => {
            need(fixed_field_is_small(pair), "L^G = K")?;
            (pr.normal, "normal")
        }
        ClaimId::P09 => {
            need(Tri::from_bool(pair.degree().is_finite()), "T noetherian")?;
            need(group_matches_degree(pair), "|G| = [L:K]")?;
            if !ctx.cfg.overfield_automorphisms {
                return Ok(ClaimVerdict::untested(
                    id,
                    dedekind_assertion(pair),
                    "overfield automorphism hypothesis not supplied",
                ));
            }
            (pr.galois, "Galois")
        }
        ClaimId::P10G => {
            need(fixed_field_is_small(pair), "K = L^G")?;
            (pr.galois, "Galois")
        }
        _ => unreachable!(),
    };
    let asserted = dedekind_assertion(pair);
    let observed = predicate.known();
    let witness = Witness::fields([
        (name, format!("{predicate:?}").to_lowercase()),
        ("degree", format!("{:?}", pair.degree()).to_lowercase()),
        ("empirical_dedekind", "see T_DEDEKIND".to_string()),
    ]);
    Ok(ClaimVerdict::new(id, asserted, observed, witness))
}

/// The predicted Dedekind verdict: exactly the pairs of finite degree.
fn dedekind_assertion(pair: &ExtensionPair) -> Asserted {
    Asserted::from_bool(pair.degree().is_finite())
}

// ---- exactness and the diagram -------------------------------------------

fn exact_sequence(ctx: &Ctx) -> ClaimVerdict {
    let id = ClaimId::SeqExact;
    let mut rng = ctx.rng(id);
    let big = ctx.ring.big().clone();
    let primes = ctx.ring.primes().to_vec();
    let random_coeff = |rng: &mut ChaCha8Rng, constant: bool| -> FieldElem {
        match ctx.ring.small() {
            SmallRing::Field(_) => big.random(rng),
            SmallRing::Integers => big.random(rng),
            SmallRing::Localized(_) => {
                // denominators from S only, except in the constant term
                let mut den = BigInt::one();
                for &p in &primes {
                    den *= BigInt::from(p).pow(rng.gen_range(0..=2));
                }
                if constant {
                    den *= BigInt::from(rng.gen_range(1i64..=3));
                }
                FieldElem::Q(BigRational::new(rng.gen_range(-20i64..=20).into(), den))
            }
        }
    };
    let samples: Vec<Poly> = (0..ctx.cfg.samples)
        .map(|i| {
            let deg = rng.gen_range(0..=3);
            let mut coeffs: Vec<FieldElem> = (0..=deg).map(|k| random_coeff(&mut rng, k == 0)).collect();
            if i % 2 == 0 {
                // half the samples are members
                coeffs[0] = match ctx.ring.pair() {
                    Some(p) => p.embed(&p.small().random(&mut rng)),
                    None => big.from_int(rng.gen_range(-5..=5)),
                };
            }
            Poly::new(big.clone(), coeffs)
        })
        .collect();
    let results = ctx.cfg.mode.map(samples.clone(), |p| {
        ctx.ring
            .quotient_class(&p)
            .map(|c| c.is_zero() == ctx.ring.contains(&p))
            .unwrap_or(false)
    });
    let members = samples.iter().filter(|p| ctx.ring.contains(p)).count();
    let ok = results.iter().all(|&b| b);
    ClaimVerdict::new(
        id,
        Asserted::True,
        Some(ok),
        Witness::fields([
            ("sampled", samples.len().to_string()),
            ("members", members.to_string()),
            ("kernel_matches_membership", ok.to_string()),
        ]),
    )
}

/// The property report with tested verdicts taken from the matching claims.
fn tested_property_report(ctx: &Ctx, done: &[ClaimVerdict]) -> PropertyReport {
    let source = [
        (Property::Atomic, ClaimId::P1a),
        (Property::Accp, ClaimId::P1b),
        (Property::Bfd, ClaimId::P3),
        (Property::Hfd, ClaimId::P10),
        (Property::Ffd, ClaimId::P7),
        (Property::Idf, ClaimId::P5),
        (Property::IntegrallyClosed, ClaimId::P13),
        (Property::SDomain, ClaimId::P8),
        (Property::Hilbert, ClaimId::T9),
        (Property::Dedekind, ClaimId::TDedekind),
    ];
    let mut report = property_report(ctx.ring);
    for (prop, claim) in source {
        let verdict = match done.iter().find(|v| v.id == claim) {
            Some(v) => Some(v.clone()),
            None if done.is_empty() => run_with(ctx, claim).ok(),
            None => None,
        };
        let (Some(v), Some(entry)) = (verdict, report.get_mut(prop)) else {
            continue;
        };
        entry.witness = v.witness.clone();
        entry.tested = match (entry.asserted.as_bool(), v.observed) {
            (Some(a), Some(o)) if a == o => Tested::Pass,
            (Some(_), Some(_)) => Tested::Fail,
            _ => Tested::Untested,
        };
    }
    report
}

/// Checks the arrows on the asserted verdicts and on what was observed.
fn diagram_verdict(report: &PropertyReport) -> ClaimVerdict {
    let asserted_bad = crate::composite::diagram_violations(report);
    let observed: BTreeMap<Property, bool> = report
        .entries
        .iter()
        .filter_map(|e| {
            let a = e.asserted.as_bool()?;
            match e.tested {
                Tested::Pass => Some((e.property, a)),
                Tested::Fail => Some((e.property, !a)),
                Tested::Untested => None,
            }
        })
        .collect();
    let observed_bad: Vec<(Property, Property)> = DIAGRAM
        .iter()
        .copied()
        .filter(|(a, b)| observed.get(a) == Some(&true) && observed.get(b) == Some(&false))
        .collect();
    let show = |v: &[(Property, Property)]| {
        if v.is_empty() {
            "none".to_string()
        } else {
            v.iter().map(|(a, b)| format!("{a}=>{b}")).collect::<Vec<_>>().join(",")
        }
    };
    ClaimVerdict::new(
        ClaimId::Diagram,
        Asserted::True,
        Some(asserted_bad.is_empty() && observed_bad.is_empty()),
        Witness::fields([
            ("asserted_violations", show(&asserted_bad)),
            ("observed_violations", show(&observed_bad)),
        ]),
    )
}
