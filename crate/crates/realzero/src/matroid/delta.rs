//! Delta-matroids: set systems closed under the symmetric exchange
//! property. Construction is raw by default because the counterexample
//! pipeline deliberately builds violating families; `validated` checks the
//! exchange property up front.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::{mask_bits, Matroid, MAX_GROUND};
use crate::error::{Error, Result};

/// Set system on a labelled ground set; `feasible` holds subset bitmasks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeltaMatroid {
    ground: Vec<String>,
    feasible: BTreeSet<u32>,
}

/// First failing triple of the symmetric exchange scan, in canonical
/// order: feasible sets ascending by bitmask (ground order as declared),
/// `a` outer, `b` inner, `x` by ground index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExchangeViolation {
    pub a: Vec<String>,
    pub b: Vec<String>,
    pub x: String,
    pub(crate) a_mask: u32,
    pub(crate) b_mask: u32,
    pub(crate) x_bit: usize,
}

/// Evidence for one exchange triple: every candidate replacement set with
/// its membership in the family.
#[derive(Debug, Clone)]
pub struct ExchangeCheck {
    pub candidates: Vec<(Vec<String>, bool)>,
    pub satisfied: bool,
}

impl DeltaMatroid {
    /// Raw construction; the family is not checked beyond basic shape.
    pub fn new_unchecked<S: AsRef<str>>(
        ground: Vec<String>,
        feasible: &[Vec<S>],
    ) -> Result<DeltaMatroid> {
        if ground.len() > MAX_GROUND {
            return Err(Error::GuardExceeded(format!(
                "ground set of {} exceeds the {MAX_GROUND}-element limit",
                ground.len()
            )));
        }
        let mut seen = BTreeSet::new();
        for g in &ground {
            if !seen.insert(g.clone()) {
                return Err(Error::DuplicateVariable(g.clone()));
            }
        }
        let mut sets = BTreeSet::new();
        for f in feasible {
            let mut mask = 0u32;
            for e in f {
                let i = ground
                    .iter()
                    .position(|g| g == e.as_ref())
                    .ok_or_else(|| Error::UnknownVariable(e.as_ref().to_string()))?;
                mask |= 1 << i;
            }
            sets.insert(mask);
        }
        if sets.is_empty() {
            return Err(Error::InvalidMatroid("empty feasible family".into()));
        }
        Ok(DeltaMatroid {
            ground,
            feasible: sets,
        })
    }

    /// Construction that fails with the first exchange violation.
    pub fn validated<S: AsRef<str>>(ground: Vec<String>, feasible: &[Vec<S>]) -> Result<DeltaMatroid> {
        let dm = DeltaMatroid::new_unchecked(ground, feasible)?;
        match dm.violation() {
            None => Ok(dm),
            Some(v) => Err(Error::InvalidMatroid(format!(
                "symmetric exchange fails for A = {:?}, B = {:?}, x = {}",
                v.a, v.b, v.x
            ))),
        }
    }

    pub fn ground(&self) -> &[String] {
        &self.ground
    }

    pub fn feasible_masks(&self) -> &BTreeSet<u32> {
        &self.feasible
    }

    pub fn feasible_sets(&self) -> Vec<Vec<String>> {
        self.feasible.iter().map(|&m| self.labels_of(m)).collect()
    }

    pub fn labels_of(&self, mask: u32) -> Vec<String> {
        mask_bits(mask).map(|i| self.ground[i].clone()).collect()
    }

    pub fn mask_of<S: AsRef<str>>(&self, labels: &[S]) -> Result<u32> {
        let mut mask = 0;
        for l in labels {
            let i = self
                .ground
                .iter()
                .position(|g| g == l.as_ref())
                .ok_or_else(|| Error::UnknownVariable(l.as_ref().to_string()))?;
            mask |= 1 << i;
        }
        Ok(mask)
    }

    /// Exhaustive symmetric exchange check; `true` means delta-matroid.
    pub fn is_delta_matroid(&self) -> bool {
        self.violation().is_none()
    }

    /// First violation of symmetric exchange in canonical scan order, or
    /// `None` when the family is a delta-matroid.
    pub fn violation(&self) -> Option<ExchangeViolation> {
        for &a in &self.feasible {
            for &b in &self.feasible {
                let sym = a ^ b;
                for x in mask_bits(sym) {
                    if !self.exchange_holds(a, sym, x) {
                        return Some(ExchangeViolation {
                            a: self.labels_of(a),
                            b: self.labels_of(b),
                            x: self.ground[x].clone(),
                            a_mask: a,
                            b_mask: b,
                            x_bit: x,
                        });
                    }
                }
            }
        }
        None
    }

    fn exchange_holds(&self, a: u32, sym: u32, x: usize) -> bool {
        // y = x is allowed and means the bare deletion/addition A Δ {x}.
        mask_bits(sym).any(|y| {
            let candidate = if y == x {
                a ^ (1 << x)
            } else {
                a ^ (1 << x) ^ (1 << y)
            };
            self.feasible.contains(&candidate)
        })
    }

    /// Spells out one exchange triple: for every `y` in the symmetric
    /// difference (including `y = x`), the candidate `A Δ {x, y}` and
    /// whether it belongs to the family.
    pub fn exchange_check<S: AsRef<str>>(
        &self,
        a: &[S],
        b: &[S],
        x: &str,
    ) -> Result<ExchangeCheck> {
        let a_mask = self.mask_of(a)?;
        let b_mask = self.mask_of(b)?;
        let xi = self
            .ground
            .iter()
            .position(|g| g == x)
            .ok_or_else(|| Error::UnknownVariable(x.to_string()))?;
        let sym = a_mask ^ b_mask;
        if sym >> xi & 1 == 0 {
            return Err(Error::Precondition(format!(
                "element {x} is not in the symmetric difference"
            )));
        }
        if !self.feasible.contains(&a_mask) || !self.feasible.contains(&b_mask) {
            return Err(Error::Precondition(
                "both sets of an exchange triple must be feasible".into(),
            ));
        }
        let mut candidates = Vec::new();
        let mut satisfied = false;
        for y in mask_bits(sym) {
            let candidate = if y == xi {
                a_mask ^ (1 << xi)
            } else {
                a_mask ^ (1 << xi) ^ (1 << y)
            };
            let present = self.feasible.contains(&candidate);
            satisfied |= present;
            candidates.push((self.labels_of(candidate), present));
        }
        Ok(ExchangeCheck {
            candidates,
            satisfied,
        })
    }

    fn extremal_matroid(&self, minimal: bool) -> Result<Matroid> {
        let extremal: BTreeSet<u32> = self
            .feasible
            .iter()
            .copied()
            .filter(|&f| {
                !self.feasible.iter().any(|&g| {
                    g != f
                        && if minimal {
                            g & f == g
                        } else {
                            g & f == f
                        }
                })
            })
            .collect();
        Matroid::from_masks(self.ground.clone(), extremal)
    }

    /// Matroid formed by the inclusion-minimal feasible sets. Fails with
    /// the exchange witness when the family is not a delta-matroid.
    pub fn lower_matroid(&self) -> Result<Matroid> {
        self.extremal_matroid(true)
    }

    /// Matroid formed by the inclusion-maximal feasible sets.
    pub fn upper_matroid(&self) -> Result<Matroid> {
        self.extremal_matroid(false)
    }
}

#[derive(Serialize, Deserialize)]
struct DeltaJson {
    ground: Vec<String>,
    feasible: Vec<Vec<String>>,
}

impl Serialize for DeltaMatroid {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        DeltaJson {
            ground: self.ground.clone(),
            feasible: self.feasible_sets(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for DeltaMatroid {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = DeltaJson::deserialize(d)?;
        DeltaMatroid::new_unchecked(raw.ground, &raw.feasible).map_err(D::Error::custom)
    }
}
