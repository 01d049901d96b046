//! Verdict and report types shared by the property report and the claim suite.

use std::fmt;

use crate::composite::CompositeRing;

/// What a statement predicts for an instance.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Asserted {
    True,
    False,
    /// The statement only applies under a hypothesis that is not decided here.
    Conditional(String),
}

impl Asserted {
    pub fn from_bool(b: bool) -> Asserted {
        if b {
            Asserted::True
        } else {
            Asserted::False
        }
    }

    pub fn as_bool(&self) -> Option<bool> {
        match self {
            Asserted::True => Some(true),
            Asserted::False => Some(false),
            Asserted::Conditional(_) => None,
        }
    }
}

impl fmt::Display for Asserted {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Asserted::True => f.write_str("true"),
            Asserted::False => f.write_str("false"),
            Asserted::Conditional(c) => write!(f, "conditional({c})"),
        }
    }
}

/// Outcome of the computation: whether the observed value matched the assertion.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Tested {
    Pass,
    Fail,
    Untested,
}

impl fmt::Display for Tested {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Tested::Pass => "PASS",
            Tested::Fail => "FAIL",
            Tested::Untested => "UNTESTED",
        })
    }
}

/// Evidence behind a tested verdict.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub enum Witness {
    #[default]
    None,
    Chain(Vec<String>),
    Ideal(String),
    Element(String),
    Factorization(String),
    /// Several labelled pieces of evidence.
    Fields(Vec<(String, String)>),
}

impl Witness {
    pub fn fields<K: Into<String>, V: ToString>(items: impl IntoIterator<Item = (K, V)>) -> Witness {
        Witness::Fields(items.into_iter().map(|(k, v)| (k.into(), v.to_string())).collect())
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::None => f.write_str("none"),
            Witness::Chain(c) => write!(f, "chain[{}]", c.join(" < ")),
            Witness::Ideal(i) => write!(f, "ideal[{i}]"),
            Witness::Element(e) => write!(f, "element[{e}]"),
            Witness::Factorization(x) => write!(f, "factorization[{x}]"),
            Witness::Fields(kv) => {
                let parts: Vec<String> = kv.iter().map(|(k, v)| format!("{k}={v}")).collect();
                write!(f, "{{{}}}", parts.join("; "))
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Property {
    Atomic,
    Accp,
    Bfd,
    Hfd,
    Ffd,
    Idf,
    Noetherian,
    IntegrallyClosed,
    SDomain,
    Hilbert,
    Dedekind,
}

impl Property {
    pub const ALL: [Property; 11] = [
        Property::Atomic,
        Property::Accp,
        Property::Bfd,
        Property::Hfd,
        Property::Ffd,
        Property::Idf,
        Property::Noetherian,
        Property::IntegrallyClosed,
        Property::SDomain,
        Property::Hilbert,
        Property::Dedekind,
    ];
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Property::Atomic => "atomic",
            Property::Accp => "ACCP",
            Property::Bfd => "BFD",
            Property::Hfd => "HFD",
            Property::Ffd => "FFD",
            Property::Idf => "idf",
            Property::Noetherian => "noetherian",
            Property::IntegrallyClosed => "integrally_closed",
            Property::SDomain => "s_domain",
            Property::Hilbert => "hilbert",
            Property::Dedekind => "dedekind",
        })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct PropertyEntry {
    pub property: Property,
    pub asserted: Asserted,
    pub cite: String,
    pub tested: Tested,
    pub witness: Witness,
}

#[derive(Clone, Debug, PartialEq)]
pub struct PropertyReport {
    pub ring: CompositeRing,
    pub entries: Vec<PropertyEntry>,
}

impl PropertyReport {
    pub fn get(&self, p: Property) -> Option<&PropertyEntry> {
        self.entries.iter().find(|e| e.property == p)
    }

    pub fn get_mut(&mut self, p: Property) -> Option<&mut PropertyEntry> {
        self.entries.iter_mut().find(|e| e.property == p)
    }

    pub fn asserted(&self, p: Property) -> Option<bool> {
        self.get(p).and_then(|e| e.asserted.as_bool())
    }
}

impl fmt::Display for PropertyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.ring)?;
        for e in &self.entries {
            writeln!(f, "  {:<18} asserted={:<6} tested={:<8} {}", e.property, e.asserted, e.tested, e.witness)?;
        }
        Ok(())
    }
}
