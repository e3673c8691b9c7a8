//! Matroids and delta-matroids on small ground sets.
//!
//! Ground sets are limited to 16 labelled elements and subsets are
//! bitmasks, so rank, closure and the exchange axioms are checked
//! exhaustively and exactly. Matroids are validated at construction: a
//! family that fails the basis exchange axiom is rejected with a concrete
//! witness `(B, C, x)`.

mod delta;
mod solver;

pub use delta::{DeltaMatroid, ExchangeCheck, ExchangeViolation};
pub use solver::{amalgam_search, AmalgamOutcome, RankTable};

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::{Polynomial, VariableSet};
use crate::rational::Rational;

pub(crate) const MAX_GROUND: usize = 16;

/// Matroid given by its ground set and bases (as bitmasks over the ground
/// order). The exchange axiom holds by construction.
#[derive(Debug, Clone)]
pub struct Matroid {
    ground: Vec<String>,
    bases: BTreeSet<u32>,
    rank: usize,
}

pub(crate) fn mask_bits(mask: u32) -> impl Iterator<Item = usize> {
    (0..32).filter(move |i| mask >> i & 1 == 1)
}

impl Matroid {
    /// Validates a basis family: nonempty, equicardinal, and satisfying
    /// the exchange axiom. On failure the error names the violated axiom
    /// with the first witness in scan order.
    pub fn from_bases<S: AsRef<str>>(ground: Vec<String>, bases: &[Vec<S>]) -> Result<Matroid> {
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
        for b in bases {
            let mut mask = 0u32;
            for e in b {
                let i = ground
                    .iter()
                    .position(|g| g == e.as_ref())
                    .ok_or_else(|| Error::UnknownVariable(e.as_ref().to_string()))?;
                mask |= 1 << i;
            }
            if (mask.count_ones() as usize) != b.len() {
                return Err(Error::InvalidMatroid("repeated element in a basis".into()));
            }
            sets.insert(mask);
        }
        Matroid::from_masks(ground, sets)
    }

    pub(crate) fn from_masks(ground: Vec<String>, bases: BTreeSet<u32>) -> Result<Matroid> {
        let Some(&first) = bases.iter().next() else {
            return Err(Error::InvalidMatroid("empty basis family".into()));
        };
        let rank = first.count_ones() as usize;
        if bases.iter().any(|b| b.count_ones() as usize != rank) {
            return Err(Error::InvalidMatroid(
                "bases must all have the same cardinality".into(),
            ));
        }
        let m = Matroid { ground, bases, rank };
        if let Some((b, c, x)) = m.exchange_violation() {
            return Err(Error::BasisExchange {
                basis: m.labels_of(b),
                other: m.labels_of(c),
                element: m.ground[x].clone(),
            });
        }
        Ok(m)
    }

    fn exchange_violation(&self) -> Option<(u32, u32, usize)> {
        for &b in &self.bases {
            for &c in &self.bases {
                let only_b = b & !c;
                for x in mask_bits(only_b) {
                    let without = b & !(1 << x);
                    let found = mask_bits(c & !b)
                        .any(|y| self.bases.contains(&(without | 1 << y)));
                    if !found {
                        return Some((b, c, x));
                    }
                }
            }
        }
        None
    }

    pub fn ground(&self) -> &[String] {
        &self.ground
    }

    pub fn rank_total(&self) -> usize {
        self.rank
    }

    pub fn num_bases(&self) -> usize {
        self.bases.len()
    }

    pub fn bases_masks(&self) -> &BTreeSet<u32> {
        &self.bases
    }

    pub fn bases(&self) -> Vec<Vec<String>> {
        self.bases.iter().map(|&b| self.labels_of(b)).collect()
    }

    pub fn full_mask(&self) -> u32 {
        if self.ground.is_empty() {
            0
        } else {
            (1u32 << self.ground.len()) - 1
        }
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

    pub fn labels_of(&self, mask: u32) -> Vec<String> {
        mask_bits(mask).map(|i| self.ground[i].clone()).collect()
    }

    /// Rank of a subset: the largest intersection with a basis.
    pub fn rank_mask(&self, a: u32) -> usize {
        self.bases
            .iter()
            .map(|&b| (b & a).count_ones() as usize)
            .max()
            .unwrap_or(0)
    }

    pub fn rank<S: AsRef<str>>(&self, labels: &[S]) -> Result<usize> {
        Ok(self.rank_mask(self.mask_of(labels)?))
    }

    /// Closure: elements not raising the rank of `a`.
    pub fn closure_mask(&self, a: u32) -> u32 {
        let r = self.rank_mask(a);
        let mut out = a;
        for x in 0..self.ground.len() {
            if self.rank_mask(a | 1 << x) == r {
                out |= 1 << x;
            }
        }
        out
    }

    pub fn closure<S: AsRef<str>>(&self, labels: &[S]) -> Result<Vec<String>> {
        Ok(self.labels_of(self.closure_mask(self.mask_of(labels)?)))
    }

    /// All flats (closure-fixed subsets) in ascending mask order.
    pub fn flats(&self) -> Vec<u32> {
        let mut flats: BTreeSet<u32> = BTreeSet::new();
        for a in 0..=self.full_mask() {
            let c = self.closure_mask(a);
            flats.insert(c);
        }
        flats.into_iter().collect()
    }

    /// Restriction to a subset, ground order inherited.
    pub fn restriction_mask(&self, a: u32) -> Matroid {
        let keep: Vec<usize> = mask_bits(a & self.full_mask()).collect();
        let ground: Vec<String> = keep.iter().map(|&i| self.ground[i].clone()).collect();
        let r = self.rank_mask(a);
        let mut bases = BTreeSet::new();
        for &b in &self.bases {
            let inter = b & a;
            if inter.count_ones() as usize == r {
                let mut m = 0u32;
                for (new_i, &old_i) in keep.iter().enumerate() {
                    if inter >> old_i & 1 == 1 {
                        m |= 1 << new_i;
                    }
                }
                bases.insert(m);
            }
        }
        Matroid {
            ground,
            bases,
            rank: r,
        }
    }

    pub fn restriction<S: AsRef<str>>(&self, labels: &[S]) -> Result<Matroid> {
        Ok(self.restriction_mask(self.mask_of(labels)?))
    }

    /// Contraction of a subset: on `S \ A`, a set is independent when it
    /// extends a maximal independent subset of `A`.
    pub fn contraction_mask(&self, a: u32) -> Matroid {
        let a = a & self.full_mask();
        let keep: Vec<usize> = mask_bits(self.full_mask() & !a).collect();
        let ground: Vec<String> = keep.iter().map(|&i| self.ground[i].clone()).collect();
        let ra = self.rank_mask(a);
        let new_rank = self.rank - ra;
        let mut bases = BTreeSet::new();
        let k = keep.len();
        for sub in 0..(1u32 << k) {
            if sub.count_ones() as usize != new_rank {
                continue;
            }
            let mut old = 0u32;
            for (new_i, &old_i) in keep.iter().enumerate() {
                if sub >> new_i & 1 == 1 {
                    old |= 1 << old_i;
                }
            }
            if self.rank_mask(old | a) == ra + new_rank {
                bases.insert(sub);
            }
        }
        Matroid {
            ground,
            bases,
            rank: new_rank,
        }
    }

    pub fn contraction<S: AsRef<str>>(&self, labels: &[S]) -> Result<Matroid> {
        Ok(self.contraction_mask(self.mask_of(labels)?))
    }

    /// Elements contained in no basis.
    pub fn loops(&self) -> Vec<String> {
        let union = self.bases.iter().fold(0u32, |acc, b| acc | b);
        self.labels_of(self.full_mask() & !union)
    }

    /// Elements contained in every basis.
    pub fn coloops(&self) -> Vec<String> {
        let inter = self
            .bases
            .iter()
            .fold(self.full_mask(), |acc, b| acc & b);
        self.labels_of(inter)
    }

    /// Sum over bases of the product of their elements; multi-affine and
    /// homogeneous, with the ground labels as variables.
    pub fn bases_generating_poly(&self) -> Result<Polynomial> {
        let vars = VariableSet::new(self.ground.clone())?;
        let n = self.ground.len();
        Polynomial::from_terms(
            vars,
            self.bases.iter().map(|&b| {
                let exps: Vec<u32> = (0..n).map(|i| b >> i & 1).collect();
                (exps, Rational::from_integer(1.into()))
            }),
        )
    }

    /// Rank additivity on every pair of flats.
    pub fn is_modular(&self) -> bool {
        let flats = self.flats();
        for &f in &flats {
            for &g in &flats {
                if self.rank_mask(f & g) + self.rank_mask(f | g)
                    != self.rank_mask(f) + self.rank_mask(g)
                {
                    return false;
                }
            }
        }
        true
    }

    /// Semantic equality: same label set and the same bases, regardless of
    /// ground order.
    pub fn same_matroid(&self, other: &Matroid) -> bool {
        if self.ground.len() != other.ground.len() {
            return false;
        }
        let map: Option<Vec<usize>> = other
            .ground
            .iter()
            .map(|l| self.ground.iter().position(|g| g == l))
            .collect();
        let Some(map) = map else {
            return false;
        };
        let translated: BTreeSet<u32> = other
            .bases
            .iter()
            .map(|&b| mask_bits(b).fold(0u32, |acc, i| acc | 1 << map[i]))
            .collect();
        translated == self.bases
    }
}

/// The two rank-3 matroids on seven points used by the bundled
/// counterexample: all 3-subsets are bases except the drawn lines.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PtInstance {
    M1,
    M2,
}

/// Poljak-Turzik matroid pair. `M1` lives on `{x1..x6, y}` with lines
/// `{y,x1,x4}`, `{y,x3,x6}`, `{y,x2,x5}`, `{x1,x2,x3}`, `{x4,x5,x6}`;
/// `M2` lives on `{x1..x6, z}` and drops the `{z,x3,x6}` line.
pub fn poljak_turzik(which: PtInstance) -> Matroid {
    let (last, lines): (&str, Vec<[&str; 3]>) = match which {
        PtInstance::M1 => (
            "y",
            vec![
                ["y", "x1", "x4"],
                ["y", "x3", "x6"],
                ["y", "x2", "x5"],
                ["x1", "x2", "x3"],
                ["x4", "x5", "x6"],
            ],
        ),
        PtInstance::M2 => (
            "z",
            vec![
                ["z", "x1", "x4"],
                ["z", "x2", "x5"],
                ["x1", "x2", "x3"],
                ["x4", "x5", "x6"],
            ],
        ),
    };
    let ground: Vec<String> = ["x1", "x2", "x3", "x4", "x5", "x6", last]
        .iter()
        .map(ToString::to_string)
        .collect();
    let mask = |names: &[&str]| -> u32 {
        names
            .iter()
            .map(|n| 1u32 << ground.iter().position(|g| g == n).unwrap())
            .fold(0, |a, b| a | b)
    };
    let excluded: BTreeSet<u32> = lines.iter().map(|l| mask(l)).collect();
    let mut bases = BTreeSet::new();
    for m in 0u32..1 << 7 {
        if m.count_ones() == 3 && !excluded.contains(&m) {
            bases.insert(m);
        }
    }
    Matroid::from_masks(ground, bases).expect("projective point configuration is a matroid")
}

/// Support of a multi-affine homogeneous polynomial as a matroid basis
/// family. A failing exchange axiom propagates with its witness.
pub fn support_matroid(p: &Polynomial) -> Result<Matroid> {
    if !p.is_multi_affine() {
        return Err(Error::NotMultiAffine);
    }
    if !p.is_homogeneous() || p.is_zero() {
        return Err(Error::NotHomogeneous);
    }
    let support = p.support()?;
    Matroid::from_bases(p.vars().names().to_vec(), &support)
}

/// One assertion of the rank-function argument that rules out an amalgam
/// of the bundled seven-point pair.
#[derive(Debug, Clone, Serialize)]
pub struct ReplayStep {
    pub claim: String,
    pub holds: bool,
}

/// The hand argument replayed as exact assertions: closures force
/// `r({y,z}) = 1` in any amalgam, which collides with the ranks of
/// `{y,x3,x6}` and `{z,x3,x6}`.
#[derive(Debug, Clone, Serialize)]
pub struct InfeasibilityReplay {
    pub steps: Vec<ReplayStep>,
}

impl InfeasibilityReplay {
    pub fn all_hold(&self) -> bool {
        self.steps.iter().all(|s| s.holds)
    }
}

pub fn pt_infeasibility_replay() -> Result<InfeasibilityReplay> {
    let m1 = poljak_turzik(PtInstance::M1);
    let m2 = poljak_turzik(PtInstance::M2);
    let mut steps = Vec::new();
    let mut push = |claim: &str, holds: bool| {
        steps.push(ReplayStep {
            claim: claim.to_string(),
            holds,
        });
    };

    let r1_a = m1.rank(&["x1", "x4"])?;
    let r1_b = m1.rank(&["x2", "x5"])?;
    push("r1({x1,x4}) = 2 and r1({x2,x5}) = 2", r1_a == 2 && r1_b == 2);

    let cl_a = m1.closure(&["x1", "x4"])?;
    let cl_b = m1.closure(&["x2", "x5"])?;
    push(
        "y lies in cl1({x1,x4}) and in cl1({x2,x5})",
        cl_a.iter().any(|e| e == "y") && cl_b.iter().any(|e| e == "y"),
    );

    let cl2_a = m2.closure(&["x1", "x4"])?;
    let cl2_b = m2.closure(&["x2", "x5"])?;
    push(
        "z lies in cl2({x1,x4}) and in cl2({x2,x5})",
        cl2_a.iter().any(|e| e == "z") && cl2_b.iter().any(|e| e == "z"),
    );

    let r_union = m1.rank(&["x1", "x2", "x4", "x5"])?;
    push(
        "r({x1,x2,x4,x5}) = 3, so cl(A) u cl(B) has rank at least 3",
        r_union == 3,
    );

    // Submodularity on the closures: r({y,z}) <= r(clA) + r(clB) - r(clA u clB)
    // <= 2 + 2 - 3 = 1, and r({y,z}) >= r({y}) = 1.
    let forced = r1_a + r1_b - r_union;
    push(
        "any amalgam is forced to r({y,z}) = 1",
        forced == 1 && m1.rank(&["y"])? == 1,
    );

    let r_line = m1.rank(&["y", "x3", "x6"])?;
    push("r1({y,x3,x6}) = 2", r_line == 2);

    let r_basis = m2.rank(&["z", "x3", "x6"])?;
    push("r2({z,x3,x6}) = 3", r_basis == 3);

    // With r({y,z}) = 1, submodularity on ({y,x3,x6}, {y,z}) caps
    // r({y,z,x3,x6}) at 2 + 1 - 1 = 2, but it must dominate r({z,x3,x6}) = 3.
    let cap = r_line + forced - 1;
    push(
        "r({y,z,x3,x6}) would be capped at 2 yet bounded below by 3",
        cap < r_basis,
    );

    Ok(InfeasibilityReplay { steps })
}

#[derive(Serialize, Deserialize)]
struct MatroidJson {
    ground: Vec<String>,
    bases: Vec<Vec<String>>,
}

impl Serialize for Matroid {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        MatroidJson {
            ground: self.ground.clone(),
            bases: self.bases(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Matroid {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = MatroidJson::deserialize(d)?;
        Matroid::from_bases(raw.ground, &raw.bases).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests;
