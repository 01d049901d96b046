//! Fractional ideals of `T = K + X·L[X]` for finite fields `K ⊆ L`.
//!
//! An ideal is stored as `(1/D)·(g_1, …, g_r)·T` with numerators `g_i ∈ L[X]`
//! and a monic denominator `D ∈ L[X]`; the pole order is the `X`-adic
//! valuation of `D`.
//! Every decision reduces to linear algebra over GF(p): the elements of `T`
//! of degree at most `d` form a GF(p)-space with basis `κ_i` (a basis of `K`)
//! and `λ_b·X^k` (a basis of `L`, `1 ≤ k ≤ d`). Verdicts that depend on a
//! cofactor degree bound say so.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::composite::CompositeRing;
use crate::exec::ExecMode;
use crate::fieldtower::{Field, FieldElem};
use crate::linalg::{kernel_fp, rref_fp, FpSpan};
use crate::polyring::{self, Poly, PolyError};

/// Largest quotient ring `T/I` enumerated by [`FractionalIdeal::quotient_pir_check`].
pub const QUOTIENT_CAP: u64 = 4096;
/// Windows are doubled up to this bound before a non-membership is reported.
pub const WINDOW_CAP: usize = 64;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum IdealError {
    #[error("ideals belong to different rings")]
    RingMismatch,
    #[error("ideal arithmetic needs K + X·L[X] with L finite, got {0}")]
    RequiresFiniteFieldPair(String),
    #[error("degree window {window} is below the {needed} the computation needs")]
    WindowTooSmall { needed: usize, window: usize },
    #[error("prime factorization is only certified when K = L")]
    NotSupportedForProperPair,
    #[error("T/I is not finite within the window: {0}")]
    QuotientNotFinite(String),
    #[error("T/I has {0} elements, above the enumeration cap")]
    QuotientTooLarge(u64),
    #[error("{0} is not an integral ideal")]
    NotIntegral(String),
    #[error("the zero ideal is not a fractional ideal")]
    ZeroIdeal,
    #[error(transparent)]
    Poly(#[from] PolyError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Membership {
    Member,
    /// No representation with cofactors of degree at most the bound.
    NonMemberWithinBound(usize),
}

impl Membership {
    pub fn is_member(self) -> bool {
        self == Membership::Member
    }
}

/// Coordinates of `L[X]` over GF(p).
#[derive(Clone, Debug)]
struct Coords {
    p: u64,
    /// `[L : GF(p)]`
    n: usize,
    big: Field,
    /// GF(p)-basis of `K`, embedded in `L`.
    k_basis: Vec<FieldElem>,
    l_basis: Vec<FieldElem>,
    k_span: FpSpan,
}

impl Coords {
    fn new(ring: &CompositeRing) -> Result<Coords, IdealError> {
        let err = || IdealError::RequiresFiniteFieldPair(ring.to_string());
        let pair = ring.pair().ok_or_else(err)?;
        if !pair.is_finite_pair() {
            return Err(err());
        }
        let big = pair.big().clone();
        let small = pair.small();
        let p = big.characteristic();
        let n = big.absolute_degree().unwrap() as usize;
        let m = small.absolute_degree().unwrap() as usize;
        let unit = |len: usize, i: usize| {
            let mut v = vec![0u64; len];
            v[i] = 1;
            FieldElem::Ff(v)
        };
        let k_basis: Vec<FieldElem> = (0..m).map(|i| pair.embed(&unit(m, i))).collect();
        let l_basis: Vec<FieldElem> = (0..n).map(|i| unit(n, i)).collect();
        let k_span = FpSpan::from_vectors(p, k_basis.iter().map(elem_coords));
        Ok(Coords {
            p,
            n,
            big,
            k_basis,
            l_basis,
            k_span,
        })
    }

    /// Coefficient vector of `f` in degrees `0..len`.
    fn poly(&self, f: &Poly, len: usize) -> Vec<u64> {
        let mut out = vec![0u64; self.n * len];
        for (i, c) in f.coeffs().iter().enumerate().take(len) {
            out[i * self.n..(i + 1) * self.n].copy_from_slice(&elem_coords(c));
        }
        out
    }

    fn from_vec(&self, v: &[u64]) -> Poly {
        let coeffs = v.chunks(self.n).map(|c| FieldElem::Ff(c.to_vec())).collect();
        Poly::new(self.big.clone(), coeffs)
    }

    /// GF(p)-basis of the elements of `T` of degree at most `d`.
    fn t_basis(&self, d: usize) -> Vec<Poly> {
        let mut out: Vec<Poly> = self.k_basis.iter().map(|k| Poly::constant(self.big.clone(), k.clone())).collect();
        for deg in 1..=d {
            out.extend(self.l_basis.iter().map(|l| Poly::monomial(self.big.clone(), l.clone(), deg)));
        }
        out
    }

    /// GF(p)-span of `g·t` over generators `g` and `T`-basis elements `t` of degree ≤ `bound`.
    fn module_span(&self, gens: &[Poly], bound: usize, len: usize) -> FpSpan {
        let tb = self.t_basis(bound);
        FpSpan::from_vectors(
            self.p,
            gens.iter().flat_map(|g| tb.iter().map(move |t| self.poly(&g.mul(t), len))),
        )
    }
}

fn elem_coords(c: &FieldElem) -> Vec<u64> {
    match c {
        FieldElem::Ff(v) => v.clone(),
        _ => unreachable!("finite field element expected"),
    }
}

fn max_degree(gens: &[Poly]) -> usize {
    gens.iter().filter_map(|g| g.degree()).max().unwrap_or(0)
}

/// `(1/den)·(gens)·T`.
#[derive(Clone, Debug)]
pub struct FractionalIdeal {
    ring: CompositeRing,
    den: Poly,
    gens: Vec<Poly>,
    window: usize,
    coords: Coords,
}

impl PartialEq for FractionalIdeal {
    /// Window-relative equality: each generator set lies in the other ideal.
    fn eq(&self, other: &Self) -> bool {
        self.same_ideal(other).unwrap_or(false)
    }
}

impl fmt::Display for FractionalIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.gens.iter().map(|g| g.to_string()).collect();
        let j = self.pole_order();
        if self.den.is_one() {
            write!(f, "({})", gens.join(", "))
        } else if self.den.degree() == Some(j) {
            write!(f, "X^-{j}*({})", gens.join(", "))
        } else {
            write!(f, "(1/({}))*({})", self.den, gens.join(", "))
        }
    }
}

impl FractionalIdeal {
    /// The ideal with the given numerators, canonicalized under the default window.
    pub fn new(ring: &CompositeRing, pole: usize, gens: Vec<Poly>) -> Result<FractionalIdeal, IdealError> {
        let window = 2 * max_degree(&gens) + pole + 4;
        FractionalIdeal::with_window(ring, pole, gens, window)
    }

    pub fn with_window(
        ring: &CompositeRing,
        pole: usize,
        gens: Vec<Poly>,
        window: usize,
    ) -> Result<FractionalIdeal, IdealError> {
        let den = Poly::monomial(ring.big().clone(), ring.big().one(), pole);
        FractionalIdeal::with_denominator(ring, den, gens, window)
    }

    /// `(1/den)·(gens)·T`; `den` is made monic.
    pub fn with_denominator(
        ring: &CompositeRing,
        den: Poly,
        gens: Vec<Poly>,
        window: usize,
    ) -> Result<FractionalIdeal, IdealError> {
        let coords = Coords::new(ring)?;
        if den.field() != ring.big() || gens.iter().any(|g| g.field() != ring.big()) {
            return Err(IdealError::RingMismatch);
        }
        if den.is_zero() {
            return Err(IdealError::Poly(PolyError::DivisionByZeroPoly));
        }
        let den = den.monic();
        let gens: Vec<Poly> = gens.into_iter().filter(|g| !g.is_zero()).collect();
        if gens.is_empty() {
            return Err(IdealError::ZeroIdeal);
        }
        let mut ideal = FractionalIdeal {
            ring: ring.clone(),
            den,
            gens,
            window,
            coords,
        };
        ideal.canonicalize();
        Ok(ideal)
    }

    /// `T` itself.
    pub fn unit(ring: &CompositeRing) -> Result<FractionalIdeal, IdealError> {
        FractionalIdeal::new(ring, 0, vec![ring.one()])
    }

    pub fn principal(ring: &CompositeRing, f: Poly) -> Result<FractionalIdeal, IdealError> {
        FractionalIdeal::new(ring, 0, vec![f])
    }

    /// `M = X·L[X]`, generated by `λ·X` over a basis of `L`.
    pub fn maximal_x(ring: &CompositeRing) -> Result<FractionalIdeal, IdealError> {
        let coords = Coords::new(ring)?;
        let gens = coords.l_basis.iter().map(|l| Poly::monomial(ring.big().clone(), l.clone(), 1)).collect();
        FractionalIdeal::new(ring, 0, gens)
    }

    /// `L[X]` as a fractional ideal of `T`.
    pub fn big_polynomials(ring: &CompositeRing) -> Result<FractionalIdeal, IdealError> {
        let coords = Coords::new(ring)?;
        let gens = coords.l_basis.iter().map(|l| Poly::constant(ring.big().clone(), l.clone())).collect();
        FractionalIdeal::new(ring, 0, gens)
    }

    pub fn ring(&self) -> &CompositeRing {
        &self.ring
    }

    /// Order of the pole at `X = 0`.
    pub fn pole_order(&self) -> usize {
        self.den.valuation().unwrap()
    }

    pub fn denominator(&self) -> &Poly {
        &self.den
    }

    pub fn generators(&self) -> &[Poly] {
        &self.gens
    }

    pub fn window(&self) -> usize {
        self.window
    }

    pub fn set_window(&mut self, window: usize) {
        self.window = window;
    }

    fn check_ring(&self, other: &FractionalIdeal) -> Result<(), IdealError> {
        if self.ring == other.ring {
            Ok(())
        } else {
            Err(IdealError::RingMismatch)
        }
    }

    /// Cancels the common factor of the denominator and the numerators, then
    /// drops generators that the others already produce within the window.
    fn canonicalize(&mut self) {
        let common = self.gens.iter().fold(self.den.clone(), |acc, g| acc.gcd(g));
        if !common.is_one() {
            self.den = self.den.quo(&common);
            self.gens = self.gens.iter().map(|g| g.quo(&common)).collect();
        }
        let mut gens = self.gens.clone();
        gens.sort_by(|a, b| a.canonical_cmp(b));
        gens.dedup();
        let mut i = gens.len();
        while i > 0 {
            i -= 1;
            if gens.len() == 1 {
                break;
            }
            let others: Vec<Poly> = gens.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, g)| g.clone()).collect();
            let len = max_degree(&gens).max(max_degree(&others) + self.window) + 1;
            let span = self.coords.module_span(&others, self.window, len);
            if span.contains(&self.coords.poly(&gens[i], len)) {
                gens.remove(i);
            }
        }
        self.gens = gens;
    }

    fn x_power(&self, pole: usize) -> Poly {
        Poly::monomial(self.ring.big().clone(), self.ring.big().one(), pole)
    }

    /// Whether `X^(-pole)·f` lies in the ideal with cofactors of degree ≤ `bound`.
    pub fn membership(&self, f: &Poly, pole: usize, bound: usize) -> Result<Membership, IdealError> {
        self.membership_over(f, &self.x_power(pole), bound)
    }

    /// Whether `f/den` lies in the ideal with cofactors of degree ≤ `bound`.
    ///
    /// `f/E ∈ (1/D)·(g)·T` exactly when `f·D` lies in the span of the `E·g_i`.
    pub fn membership_over(&self, f: &Poly, den: &Poly, bound: usize) -> Result<Membership, IdealError> {
        if f.field() != self.ring.big() || den.field() != self.ring.big() {
            return Err(IdealError::RingMismatch);
        }
        if f.is_zero() {
            return Ok(Membership::Member);
        }
        let target = f.mul(&self.den);
        let gens: Vec<Poly> = self.gens.iter().map(|g| g.mul(den)).collect();
        let len = target.degree().unwrap().max(max_degree(&gens) + bound) + 1;
        let span = self.coords.module_span(&gens, bound, len);
        Ok(if span.contains(&self.coords.poly(&target, len)) {
            Membership::Member
        } else {
            Membership::NonMemberWithinBound(bound)
        })
    }

    /// Membership with the window as cofactor bound, doubled up to [`WINDOW_CAP`]
    /// before giving up.
    pub fn contains(&self, f: &Poly, pole: usize) -> Result<Membership, IdealError> {
        self.contains_over(f, &self.x_power(pole))
    }

    pub fn contains_over(&self, f: &Poly, den: &Poly) -> Result<Membership, IdealError> {
        let mut bound = self.window.max(1);
        loop {
            let m = self.membership_over(f, den, bound)?;
            if m.is_member() || bound >= WINDOW_CAP {
                return Ok(m);
            }
            bound = (bound * 2).min(WINDOW_CAP);
        }
    }

    /// Every generator of each ideal lies in the other (window-relative).
    pub fn same_ideal(&self, other: &FractionalIdeal) -> Result<bool, IdealError> {
        self.check_ring(other)?;
        Ok(self.contains_ideal(other)? && other.contains_ideal(self)?)
    }

    pub fn contains_ideal(&self, other: &FractionalIdeal) -> Result<bool, IdealError> {
        for g in &other.gens {
            if !self.contains_over(g, &other.den)?.is_member() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn product(&self, other: &FractionalIdeal) -> Result<FractionalIdeal, IdealError> {
        self.check_ring(other)?;
        let gens = self.gens.iter().flat_map(|a| other.gens.iter().map(move |b| a.mul(b))).collect();
        let window = self.window.max(other.window);
        FractionalIdeal::with_denominator(&self.ring, self.den.mul(&other.den), gens, window)
    }

    pub fn sum(&self, other: &FractionalIdeal) -> Result<FractionalIdeal, IdealError> {
        self.check_ring(other)?;
        let g = self.den.gcd(&other.den);
        let (a, b) = (other.den.quo(&g), self.den.quo(&g));
        let gens = self
            .gens
            .iter()
            .map(|x| x.mul(&a))
            .chain(other.gens.iter().map(|x| x.mul(&b)))
            .collect();
        let lcm = self.den.mul(&a);
        FractionalIdeal::with_denominator(&self.ring, lcm, gens, self.window.max(other.window))
    }

    /// `(T : I) = {x : x·I ⊆ T}`.
    ///
    /// For `I = (1/D)·(g_i)` every such `x` is `h/G` with `G = gcd(g_i)` and
    /// `h ∈ L[X]`, subject to `D | h·q_i` and `(h·q_i/D)(0) ∈ K` where
    /// `q_i = g_i/G`. The constraints only see `h` modulo `D·X`, so the colon
    /// is `(1/G)·(kernel + D·X·L[X])` with the kernel taken over `deg h ≤ deg D`.
    pub fn colon(&self) -> Result<FractionalIdeal, IdealError> {
        let c = &self.coords;
        let g = self.gens.iter().fold(Poly::zero(c.big.clone()), |acc, x| acc.gcd(x));
        let quotients: Vec<Poly> = self.gens.iter().map(|x| x.quo(&g)).collect();
        let dd = self.den.degree().unwrap();
        let free_from = dd + 1;
        if free_from > self.window {
            return Err(IdealError::WindowTooSmall {
                needed: free_from,
                window: self.window,
            });
        }
        let mut columns = Vec::with_capacity(free_from * c.n);
        for d in 0..free_from {
            for l in &c.l_basis {
                let h = Poly::monomial(c.big.clone(), l.clone(), d);
                let mut col = Vec::new();
                for q in &quotients {
                    let (quo, rem) = h.mul(q).divrem(&self.den)?;
                    col.extend(c.poly(&rem, dd));
                    col.extend(c.k_span.reduce(&elem_coords(&quo.coeff(0))));
                }
                columns.push(col);
            }
        }
        let mut gens: Vec<Poly> = kernel_fp(c.p, columns).iter().map(|k| c.from_vec(k)).collect();
        let dx = self.den.shift_up(1);
        gens.extend(c.l_basis.iter().map(|l| dx.scale(l)));
        FractionalIdeal::with_denominator(&self.ring, g, gens, self.window)
    }

    /// Tests `I·(T : I) = T` by looking for `1` in the product.
    pub fn is_invertible(&self) -> Result<Invertibility, IdealError> {
        let inverse = self.colon()?;
        let product = self.product(&inverse)?;
        if product.contains(&self.ring.one(), 0)?.is_member() {
            Ok(Invertibility::Invertible { inverse })
        } else {
            Ok(Invertibility::NotInvertible { product })
        }
    }

    /// `I^e`; negative powers go through the colon ideal.
    pub fn pow(&self, e: i64) -> Result<FractionalIdeal, IdealError> {
        let base = if e < 0 { self.colon()? } else { self.clone() };
        let mut acc = FractionalIdeal::with_window(&self.ring, 0, vec![self.ring.one()], self.window)?;
        for _ in 0..e.unsigned_abs() {
            acc = acc.product(&base)?;
        }
        Ok(acc)
    }

    /// Prime factorization when `K = L`, so that `T = K[X]` is a PID. The
    /// ideal is `(g)/D` for `g` the gcd of the numerators, coprime to `D`.
    pub fn factor(&self) -> Result<Vec<(FractionalIdeal, i64)>, IdealError> {
        if !self.ring.pair().is_some_and(|p| p.is_identity()) {
            return Err(IdealError::NotSupportedForProperPair);
        }
        let g = self.gens.iter().fold(Poly::zero(self.ring.big().clone()), |acc, x| acc.gcd(x));
        let mut exps: BTreeMap<Vec<u64>, (Poly, i64)> = BTreeMap::new();
        for (poly, sign) in [(&g, 1i64), (&self.den, -1)] {
            if poly.is_constant() {
                continue;
            }
            for (f, e) in polyring::factor(poly)?.factors {
                let key = self.coords.poly(&f, f.degree().unwrap() + 1);
                exps.entry(key).or_insert((f, 0)).1 += sign * e as i64;
            }
        }
        let mut out: Vec<(Poly, i64)> = exps.into_values().filter(|(_, e)| *e != 0).collect();
        out.sort_by(|a, b| a.0.canonical_cmp(&b.0));
        out.into_iter()
            .map(|(f, e)| Ok((FractionalIdeal::with_window(&self.ring, 0, vec![f], self.window)?, e)))
            .collect()
    }

    /// Enumerates `T/I` and decides whether every ideal of it is principal.
    ///
    /// Ideals of a finite ring are sums of principal ones, so it suffices to
    /// check that the principal ideals are closed under pairwise sums.
    pub fn quotient_pir_check(&self, mode: ExecMode) -> Result<PirVerdict, IdealError> {
        if !self.den.is_one() || self.gens.iter().any(|g| !self.ring.contains(g)) {
            return Err(IdealError::NotIntegral(self.to_string()));
        }
        let c = &self.coords;
        let d = (1..=self.window)
            .find(|&d| {
                c.l_basis.iter().all(|l| {
                    let xl = Poly::monomial(c.big.clone(), l.clone(), d);
                    matches!(self.membership(&xl, 0, self.window), Ok(Membership::Member))
                })
            })
            .ok_or_else(|| IdealError::QuotientNotFinite(format!("{self} contains no X^d·L[X] with d ≤ {}", self.window)))?;
        let truncate = |f: &Poly| c.poly(f, d);
        let tb = c.t_basis(d - 1);
        let v_span = rref_fp(c.p, tb.iter().map(truncate));
        let u_rows = rref_fp(c.p, self.gens.iter().flat_map(|g| tb.iter().map(move |t| truncate(&g.mul(t)))));
        let quotient_dim = v_span.len() - u_rows.len();
        let size = (c.p as u128).pow(quotient_dim as u32);
        if size > QUOTIENT_CAP as u128 {
            return Err(IdealError::QuotientTooLarge(size.min(u64::MAX as u128) as u64));
        }
        // complement of U inside V
        let mut span = FpSpan::from_vectors(c.p, u_rows.iter().cloned());
        let mut complement = Vec::new();
        for row in &v_span {
            if !span.contains(row) {
                span.insert(row.clone());
                complement.push(row.clone());
            }
        }
        let reps: Vec<Vec<u64>> = (0..size as u64)
            .map(|mut idx| {
                let mut acc = vec![0u64; c.n * d];
                for row in &complement {
                    let k = idx % c.p;
                    idx /= c.p;
                    for (a, &r) in acc.iter_mut().zip(row) {
                        *a = (*a + k * r) % c.p;
                    }
                }
                acc
            })
            .collect();
        let principal_of = |q: &Vec<u64>| -> Vec<Vec<u64>> {
            let qp = c.from_vec(q);
            rref_fp(c.p, u_rows.iter().cloned().chain(tb.iter().map(|t| truncate(&qp.mul(t)))))
        };
        let principals = mode.map(reps.clone(), |q| principal_of(&q));
        let mut distinct: BTreeMap<Vec<Vec<u64>>, Vec<u64>> = BTreeMap::new();
        for (q, ideal) in reps.into_iter().zip(principals) {
            distinct.entry(ideal).or_insert(q);
        }
        let keys: Vec<&Vec<Vec<u64>>> = distinct.keys().collect();
        let pairs: Vec<(usize, usize)> = (0..keys.len()).flat_map(|a| (a + 1..keys.len()).map(move |b| (a, b))).collect();
        let sums = mode.map(pairs.clone(), |(a, b)| rref_fp(c.p, keys[a].iter().chain(keys[b].iter()).cloned()));
        for ((a, b), s) in pairs.into_iter().zip(sums) {
            if !distinct.contains_key(&s) {
                let qa = c.from_vec(&distinct[keys[a]]);
                let qb = c.from_vec(&distinct[keys[b]]);
                let mut gens = self.gens.clone();
                gens.push(qa);
                gens.push(qb);
                let ideal = FractionalIdeal::with_window(&self.ring, 0, gens, self.window)?;
                return Ok(PirVerdict::Counterexample {
                    quotient_size: size as u64,
                    ideal,
                });
            }
        }
        Ok(PirVerdict::PrincipalIdealRing {
            quotient_size: size as u64,
            ideal_count: distinct.len(),
            truncation: d,
        })
    }
}

#[derive(Clone, Debug)]
pub enum Invertibility {
    Invertible { inverse: FractionalIdeal },
    /// `I·(T : I)`, a proper subset of `T`.
    NotInvertible { product: FractionalIdeal },
}

impl Invertibility {
    pub fn is_invertible(&self) -> bool {
        matches!(self, Invertibility::Invertible { .. })
    }
}

impl fmt::Display for Invertibility {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Invertibility::Invertible { inverse } => write!(f, "invertible inverse={inverse}"),
            Invertibility::NotInvertible { product } => write!(f, "not-invertible product={product}"),
        }
    }
}

#[derive(Clone, Debug)]
pub enum PirVerdict {
    PrincipalIdealRing {
        quotient_size: u64,
        ideal_count: usize,
        /// `X^d·L[X] ⊆ I` for this `d`.
        truncation: usize,
    },
    /// An ideal of `T` containing `I` whose image in `T/I` needs two generators.
    Counterexample { quotient_size: u64, ideal: FractionalIdeal },
}

impl PirVerdict {
    pub fn is_pir(&self) -> bool {
        matches!(self, PirVerdict::PrincipalIdealRing { .. })
    }

    pub fn quotient_size(&self) -> u64 {
        match self {
            PirVerdict::PrincipalIdealRing { quotient_size, .. } | PirVerdict::Counterexample { quotient_size, .. } => {
                *quotient_size
            }
        }
    }
}

impl fmt::Display for PirVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PirVerdict::PrincipalIdealRing {
                quotient_size,
                ideal_count,
                ..
            } => write!(f, "principal-ideal-ring |T/I|={quotient_size} ideals={ideal_count}"),
            PirVerdict::Counterexample { quotient_size, ideal } => {
                write!(f, "counterexample |T/I|={quotient_size} ideal={ideal}")
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf2_gf4() -> CompositeRing {
        CompositeRing::fields(Field::prime(2).unwrap(), Field::finite(2, 2, None).unwrap()).unwrap()
    }

    fn gf2() -> CompositeRing {
        let k = Field::prime(2).unwrap();
        CompositeRing::fields(k.clone(), k).unwrap()
    }

    #[test]
    fn membership_examples() {
        let r = gf2_gf4();
        let l = r.big().clone();
        let w = l.generator().unwrap();
        let wx = Poly::monomial(l.clone(), w.clone(), 1);
        let both = FractionalIdeal::new(&r, 0, vec![Poly::x(l.clone()), wx.clone()]).unwrap();
        assert!(both.membership(&wx, 0, 0).unwrap().is_member());
        let x = FractionalIdeal::principal(&r, Poly::x(l.clone())).unwrap();
        for b in 0..6 {
            assert_eq!(x.membership(&wx, 0, b).unwrap(), Membership::NonMemberWithinBound(b));
        }
        assert!(x.membership(&Poly::zero(l), 0, 0).unwrap().is_member());
    }

    #[test]
    fn products() {
        let r = gf2_gf4();
        let l = r.big().clone();
        let m = FractionalIdeal::maximal_x(&r).unwrap();
        let m2 = m.product(&m).unwrap();
        let expect = FractionalIdeal::new(
            &r,
            0,
            vec![Poly::monomial(l.clone(), l.one(), 2), Poly::monomial(l.clone(), l.generator().unwrap(), 2)],
        )
        .unwrap();
        assert_eq!(m2, expect);
        assert_eq!(m.product(&FractionalIdeal::unit(&r).unwrap()).unwrap(), m);

        let k = gf2();
        let f = k.big().clone();
        let a = FractionalIdeal::principal(&k, Poly::x(f.clone())).unwrap();
        let b = FractionalIdeal::principal(&k, Poly::new(f.clone(), vec![f.one(), f.one()])).unwrap();
        let ab = a.product(&b).unwrap();
        assert_eq!(ab.generators(), &[Poly::new(f.clone(), vec![f.zero(), f.one(), f.one()])]);
    }

    #[test]
    fn colons() {
        let r = gf2_gf4();
        let m = FractionalIdeal::maximal_x(&r).unwrap();
        assert_eq!(m.colon().unwrap(), FractionalIdeal::big_polynomials(&r).unwrap());
        let t = FractionalIdeal::unit(&r).unwrap();
        assert_eq!(t.colon().unwrap(), t);
        let k = gf2();
        let x = FractionalIdeal::principal(&k, Poly::x(k.big().clone())).unwrap();
        let inv = x.colon().unwrap();
        assert_eq!(inv.pole_order(), 1);
        assert_eq!(inv.generators(), &[k.one()]);
        // 1 + X is a unit of L(X) with its pole at X = 1
        let f = Poly::new(k.big().clone(), vec![k.big().one(), k.big().one()]);
        let inv = FractionalIdeal::principal(&k, f.clone()).unwrap().colon().unwrap();
        assert_eq!(inv.denominator(), &f);
        assert_eq!(inv.pole_order(), 0);
        assert_eq!(inv.to_string(), format!("(1/({f}))*(1)"));
    }

    #[test]
    fn invertibility() {
        let r = gf2_gf4();
        let m = FractionalIdeal::maximal_x(&r).unwrap();
        match m.is_invertible().unwrap() {
            Invertibility::NotInvertible { product } => assert_eq!(product, m),
            other => panic!("{other}"),
        }
        assert!(FractionalIdeal::unit(&r).unwrap().is_invertible().unwrap().is_invertible());
        let xt = FractionalIdeal::principal(&r, Poly::x(r.big().clone())).unwrap();
        assert!(xt.is_invertible().unwrap().is_invertible());
        let k = gf2();
        let x = FractionalIdeal::principal(&k, Poly::x(k.big().clone())).unwrap();
        assert!(x.is_invertible().unwrap().is_invertible());
    }

    #[test]
    fn factorization_in_the_pid_case() {
        let k = gf2();
        let f = k.big().clone();
        let e = Poly::new(f.clone(), vec![f.zero(), f.one(), f.one()]);
        let i = FractionalIdeal::principal(&k, e).unwrap();
        let fac = i.factor().unwrap();
        assert_eq!(fac.len(), 2);
        let prod = fac
            .iter()
            .fold(FractionalIdeal::unit(&k).unwrap(), |acc, (p, e)| acc.product(&p.pow(*e).unwrap()).unwrap());
        assert_eq!(prod, i);
        assert!(FractionalIdeal::unit(&k).unwrap().factor().unwrap().is_empty());
        let r = gf2_gf4();
        assert_eq!(
            FractionalIdeal::maximal_x(&r).unwrap().factor().unwrap_err(),
            IdealError::NotSupportedForProperPair
        );
    }

    #[test]
    fn pir_checks() {
        let r = gf2_gf4();
        let m = FractionalIdeal::maximal_x(&r).unwrap();
        let v = m.quotient_pir_check(ExecMode::Sequential).unwrap();
        assert!(v.is_pir());
        assert_eq!(v.quotient_size(), 2);
        let xt = FractionalIdeal::principal(&r, Poly::x(r.big().clone())).unwrap();
        let v = xt.quotient_pir_check(ExecMode::Sequential).unwrap();
        assert!(v.is_pir());
        assert_eq!(v.quotient_size(), 4);
        let k = gf2();
        let x2 = FractionalIdeal::principal(&k, Poly::monomial(k.big().clone(), k.big().one(), 2)).unwrap();
        let v = x2.quotient_pir_check(ExecMode::Sequential).unwrap();
        assert!(v.is_pir());
        assert_eq!(v.quotient_size(), 4);
    }

    #[test]
    fn x_squared_quotient_has_a_two_generator_ideal() {
        // (X, ωX) modulo X²T needs both generators: its X-coefficients fill L
        // while a single generator only reaches a K-line.
        let r = gf2_gf4();
        let x2 = FractionalIdeal::principal(&r, Poly::monomial(r.big().clone(), r.big().one(), 2)).unwrap();
        let v = x2.quotient_pir_check(ExecMode::Sequential).unwrap();
        assert!(!v.is_pir());
        assert_eq!(v.quotient_size(), 16);
    }

    #[test]
    fn rejects_infinite_pairs() {
        let z = CompositeRing::integers_in_rationals();
        assert!(matches!(FractionalIdeal::unit(&z), Err(IdealError::RequiresFiniteFieldPair(_))));
    }
}
