use crate::{Error, Result};

/// Enumeration limits for the exhaustive semantic operations.
///
/// Model enumeration scans `2^n` interpretations, SE-model enumeration
/// touches `3^n` pairs, and guess enumeration walks `2^k` subsets of the
/// epistemic-literal domain, so each gets its own bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    /// Atom limit for pair-level (`3^n`) enumeration: SE-models,
    /// SE-functions, and every check built on them.
    pub max_atoms: usize,
    /// Atom limit for interpretation-level (`2^n`) enumeration: models and
    /// answer sets. Larger than `max_atoms` so that witness programs, which
    /// add one fresh atom per interpretation, can still be re-checked.
    pub max_model_atoms: usize,
    /// Epistemic-literal limit for guess enumeration.
    pub max_elits: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            max_atoms: 14,
            max_model_atoms: 20,
            max_elits: 12,
        }
    }
}

impl Caps {
    /// Caps with the pair-level atom bound set to `n`. The model-level
    /// bound never drops below its default so that witness verification
    /// keeps working when a user lowers `n`.
    pub fn with_max_atoms(self, n: usize) -> Self {
        Caps {
            max_atoms: n,
            max_model_atoms: n.max(Caps::default().max_model_atoms),
            ..self
        }
    }

    pub fn with_max_elits(self, n: usize) -> Self {
        Caps {
            max_elits: n,
            ..self
        }
    }

    pub(crate) fn check_model_atoms(&self, n: usize) -> Result<()> {
        if n > self.max_model_atoms || n > 63 {
            return Err(Error::ResourceLimit {
                what: "interpretation enumeration (atoms)",
                need: n as u64,
                cap: self.max_model_atoms.min(63) as u64,
            });
        }
        Ok(())
    }

    pub(crate) fn check_pair_atoms(&self, n: usize) -> Result<()> {
        if n > self.max_atoms || n > 63 {
            return Err(Error::ResourceLimit {
                what: "SE-pair enumeration (atoms)",
                need: n as u64,
                cap: self.max_atoms.min(63) as u64,
            });
        }
        Ok(())
    }

    pub(crate) fn check_elits(&self, n: usize) -> Result<()> {
        if n > self.max_elits || n > 63 {
            return Err(Error::ResourceLimit {
                what: "guess enumeration (epistemic literals)",
                need: n as u64,
                cap: self.max_elits.min(63) as u64,
            });
        }
        Ok(())
    }
}
