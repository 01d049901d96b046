//! Predicted structural properties of a composite, read off from the pair.

use super::{CompositeRing, SmallRing};
use crate::claims::{Asserted, Property, PropertyEntry, PropertyReport, Tested, Witness};
use crate::fieldtower::Tri;

const CITE_ATOMIC: &str = "A+XL[X] is atomic iff K+XL[X] is atomic and A is a field";
const CITE_ACCP: &str = "A+XL[X] has ACCP iff K+XL[X] has ACCP and A is a field";
const CITE_BFD: &str = "A+XL[X] is a BFD iff K+XL[X] is a BFD and A is a field; noetherian composites are BFDs";
const CITE_HFD: &str = "A+XK[X] is half-factorial iff A is a field";
const CITE_IDF: &str = "idf passes from K+XL[X] to M+XL[X] iff K*/M* is finite";
const CITE_FFD: &str = "D+XL[X] is an FFD iff K+XL[X] is an FFD, D is a field and K*/D* is finite";
const CITE_NOETHERIAN: &str = "K+XL[X] is noetherian iff [L:K] is finite";
const CITE_INT_CLOSED: &str = "A+XB[X] is integrally closed iff B is and A is integrally closed in B";
const CITE_S_DOMAIN: &str = "D+XD_S[X] is an S-domain";
const CITE_HILBERT: &str = "D+XD_S[X] is Hilbert iff D and D_S are Hilbert";
const CITE_DEDEKIND: &str = "K+XL[X] is Dedekind whenever L is a finite extension of K";

/// Asserted verdicts for every tracked property; `tested` is left for the
/// claim suite to fill in.
pub fn property_report(ring: &CompositeRing) -> PropertyReport {
    use Asserted::{False, True};
    let verdicts: Vec<(Property, Asserted)> = match ring.small() {
        SmallRing::Field(pair) => {
            let finite_cosets = pair.unit_coset_index().index.is_finite();
            let finite_degree = pair.degree().is_finite();
            let alg_closed_in_big = pair.is_identity() || pair.predicates().algebraic == Tri::False;
            let poly_ring = pair.is_identity();
            vec![
                (Property::Atomic, True),
                (Property::Accp, True),
                (Property::Bfd, True),
                (Property::Hfd, True),
                (Property::Ffd, Asserted::from_bool(finite_cosets)),
                (Property::Idf, Asserted::from_bool(finite_cosets)),
                (Property::Noetherian, Asserted::from_bool(finite_degree)),
                (Property::IntegrallyClosed, Asserted::from_bool(alg_closed_in_big)),
                (
                    Property::SDomain,
                    if poly_ring {
                        True
                    } else {
                        Asserted::Conditional("only stated for D+XD_S[X]".into())
                    },
                ),
                (Property::Hilbert, True),
                (Property::Dedekind, Asserted::from_bool(finite_degree)),
            ]
        }
        SmallRing::Integers | SmallRing::Localized(_) => vec![
            (Property::Atomic, False),
            (Property::Accp, False),
            (Property::Bfd, False),
            (Property::Hfd, False),
            (Property::Ffd, False),
            (
                Property::Idf,
                Asserted::Conditional("needs a quasilocal top ring".into()),
            ),
            (Property::Noetherian, False),
            (Property::IntegrallyClosed, True),
            (Property::SDomain, True),
            (Property::Hilbert, True),
            (Property::Dedekind, False),
        ],
    };
    let entries = verdicts
        .into_iter()
        .map(|(property, asserted)| PropertyEntry {
            property,
            asserted,
            cite: cite(property).to_string(),
            tested: Tested::Untested,
            witness: Witness::None,
        })
        .collect();
    PropertyReport {
        ring: ring.clone(),
        entries,
    }
}

fn cite(p: Property) -> &'static str {
    match p {
        Property::Atomic => CITE_ATOMIC,
        Property::Accp => CITE_ACCP,
        Property::Bfd => CITE_BFD,
        Property::Hfd => CITE_HFD,
        Property::Ffd => CITE_FFD,
        Property::Idf => CITE_IDF,
        Property::Noetherian => CITE_NOETHERIAN,
        Property::IntegrallyClosed => CITE_INT_CLOSED,
        Property::SDomain => CITE_S_DOMAIN,
        Property::Hilbert => CITE_HILBERT,
        Property::Dedekind => CITE_DEDEKIND,
    }
}

/// Implications that every factorization-property report must respect.
pub const DIAGRAM: [(Property, Property); 5] = [
    (Property::Ffd, Property::Bfd),
    (Property::Hfd, Property::Atomic),
    (Property::Bfd, Property::Accp),
    (Property::Accp, Property::Atomic),
    (Property::Ffd, Property::Idf),
];

/// Arrows `a ⇒ b` whose premise is asserted true and conclusion asserted false.
pub fn diagram_violations(report: &PropertyReport) -> Vec<(Property, Property)> {
    DIAGRAM
        .iter()
        .copied()
        .filter(|&(a, b)| report.asserted(a) == Some(true) && report.asserted(b) == Some(false))
        .collect()
}
