//! Exhaustive divisor search over a finite field-field composite. Independent
//! of the classifier in the parent module; used to cross-check it.

use std::collections::{BTreeSet, HashMap};
use std::sync::Mutex;

use super::{CompositeError, CompositeRing};
use crate::exec::ExecMode;
use crate::polyring::Poly;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleLimits {
    pub max_field_order: u64,
    pub max_degree: usize,
}

impl Default for OracleLimits {
    fn default() -> Self {
        OracleLimits {
            max_field_order: 9,
            max_degree: 4,
        }
    }
}

/// All nonunit elements of degree `1..=degree` in associate normal form,
/// with their atom flags.
pub struct BruteForce {
    ring: CompositeRing,
    degree: usize,
    candidates: Vec<Poly>,
    atom: Vec<bool>,
    index: HashMap<Poly, usize>,
    lengths: Mutex<HashMap<Poly, BTreeSet<usize>>>,
}

impl BruteForce {
    pub fn new(ring: &CompositeRing, degree: usize, limits: OracleLimits, mode: ExecMode) -> Result<Self, CompositeError> {
        let Some(pair) = ring.pair() else {
            return Err(CompositeError::SmallRingNotAField);
        };
        let big = ring.big().clone();
        let order = match big.order() {
            Some(q) if q <= limits.max_field_order => q,
            _ => {
                return Err(CompositeError::SearchSpaceTooLarge(format!(
                    "big field {big} exceeds {} elements",
                    limits.max_field_order
                )))
            }
        };
        if degree > limits.max_degree {
            return Err(CompositeError::SearchSpaceTooLarge(format!(
                "degree {degree} exceeds {}",
                limits.max_degree
            )));
        }
        let small_consts: Vec<_> = pair.small().elements().map(|c| pair.embed(&c)).collect();
        let mut candidates = Vec::new();
        for d in 1..=degree {
            // coefficients 1..d range over L (leading nonzero), constant over K
            let count = (order - 1) * order.pow(d as u32 - 1);
            for c0 in &small_consts {
                for idx in 0..count {
                    let mut coeffs = vec![c0.clone()];
                    let mut rest = idx;
                    for _ in 1..d {
                        coeffs.push(big.element_at(rest % order));
                        rest /= order;
                    }
                    coeffs.push(big.element_at(1 + rest));
                    let g = Poly::new(big.clone(), coeffs);
                    if ring.normal_form(&g) == g {
                        candidates.push(g);
                    }
                }
            }
        }
        candidates.sort_by(|a, b| a.canonical_cmp(b));
        let index = candidates.iter().cloned().enumerate().map(|(i, g)| (g, i)).collect();
        let mut bf = BruteForce {
            ring: ring.clone(),
            degree,
            candidates,
            atom: Vec::new(),
            index,
            lengths: Mutex::new(HashMap::new()),
        };
        let cands = bf.candidates.clone();
        bf.atom = mode.map(cands, |g| !bf.has_proper_divisor(&g));
        Ok(bf)
    }

    pub fn ring(&self) -> &CompositeRing {
        &self.ring
    }

    /// Normal-form nonunits of degree `1..=degree`, in canonical order.
    pub fn candidates(&self) -> &[Poly] {
        &self.candidates
    }

    /// A factorization `g = h·k` into nonunits has `deg h ≤ deg g / 2` for one factor.
    fn has_proper_divisor(&self, g: &Poly) -> bool {
        let m = g.degree().unwrap();
        self.candidates
            .iter()
            .take_while(|h| h.degree().unwrap() <= m / 2)
            .any(|h| self.ring.divide(g, h).is_some())
    }

    fn check(&self, e: &Poly) -> Result<Poly, CompositeError> {
        if !self.ring.contains(e) {
            return Err(CompositeError::NotAMember(e.to_string()));
        }
        if e.is_zero() || self.ring.is_unit(e) {
            return Err(CompositeError::IsZeroOrUnit(e.to_string()));
        }
        if e.degree().unwrap() > self.degree {
            return Err(CompositeError::SearchSpaceTooLarge(format!(
                "{e} has degree above the enumeration bound {}",
                self.degree
            )));
        }
        Ok(self.ring.normal_form(e))
    }

    fn is_atom_nf(&self, g: &Poly) -> bool {
        match self.index.get(g) {
            Some(&i) => self.atom[i],
            None => !self.has_proper_divisor(g),
        }
    }

    pub fn is_irreducible(&self, e: &Poly) -> Result<bool, CompositeError> {
        let g = self.check(e)?;
        Ok(self.is_atom_nf(&g))
    }

    /// Lengths of all atomic factorizations of `e`.
    pub fn length_set(&self, e: &Poly) -> Result<BTreeSet<usize>, CompositeError> {
        let g = self.check(e)?;
        Ok(self.lengths_nf(&g))
    }

    fn lengths_nf(&self, e: &Poly) -> BTreeSet<usize> {
        if let Some(s) = self.lengths.lock().unwrap().get(e) {
            return s.clone();
        }
        let mut out = BTreeSet::new();
        if self.is_atom_nf(e) {
            out.insert(1);
        } else {
            let m = e.degree().unwrap();
            for (h, _) in self.candidates.iter().zip(&self.atom).filter(|(h, &a)| a && h.degree().unwrap() < m) {
                if let Some(k) = self.ring.divide(e, h) {
                    let k = self.ring.normal_form(&k);
                    out.extend(self.lengths_nf(&k).into_iter().map(|l| l + 1));
                }
            }
        }
        self.lengths.lock().unwrap().insert(e.clone(), out.clone());
        out
    }

    /// Pairwise non-associate atoms dividing `e`; empty for units.
    pub fn irreducible_divisors(&self, e: &Poly) -> Result<Vec<Poly>, CompositeError> {
        if self.ring.contains(e) && self.ring.is_unit(e) {
            return Ok(Vec::new());
        }
        let g = self.check(e)?;
        let m = g.degree().unwrap();
        Ok(self
            .candidates
            .iter()
            .zip(&self.atom)
            .filter(|(h, &a)| a && h.degree().unwrap() <= m && self.ring.divide(&g, h).is_some())
            .map(|(h, _)| h.clone())
            .collect())
    }
}

pub(super) fn brute_is_irreducible(ring: &CompositeRing, e: &Poly, limits: OracleLimits) -> Result<bool, CompositeError> {
    let d = e.degree().unwrap_or(0).max(1);
    BruteForce::new(ring, d, limits, ExecMode::Sequential)?.is_irreducible(e)
}

impl CompositeRing {
    /// Lengths of every atomic factorization of `e`, by exhaustive search over
    /// divisors of degree at most `search_bound`.
    pub fn length_set(&self, e: &Poly, search_bound: usize) -> Result<BTreeSet<usize>, CompositeError> {
        let limits = OracleLimits {
            max_degree: search_bound.max(OracleLimits::default().max_degree),
            ..OracleLimits::default()
        };
        let deg = e.degree().unwrap_or(0);
        if deg > search_bound {
            return Err(CompositeError::SearchSpaceTooLarge(format!(
                "{e} has degree above the search bound {search_bound}"
            )));
        }
        BruteForce::new(self, deg.max(1), limits, ExecMode::default())?.length_set(e)
    }

    /// Complete list of pairwise non-associate irreducible divisors of `e`.
    pub fn irreducible_divisors(&self, e: &Poly) -> Result<Vec<Poly>, CompositeError> {
        let deg = e.degree().unwrap_or(0).max(1);
        BruteForce::new(self, deg, OracleLimits::default(), ExecMode::default())?.irreducible_divisors(e)
    }
}
