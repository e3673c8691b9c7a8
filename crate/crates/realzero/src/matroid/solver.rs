//! Amalgam existence via a backtracking search over rank functions.
//!
//! A function `r : 2^S -> N` with `r(empty) = 0`, unit increase and
//! submodularity is exactly a matroid rank function, and submodularity on
//! all pairs is equivalent to its local form
//! `r(A+x) + r(A+y) >= r(A+x+y) + r(A)`. The solver assigns ranks in
//! increasing cardinality order (smaller values first), fixing every
//! subset of either input's ground set to the input's rank, and prunes
//! with unit-increase and local-submodularity bounds. Infeasibility on
//! the union of the ground sets rules out every amalgam: the restriction
//! of an amalgam to the union is again an amalgam.

use std::collections::BTreeSet;

use super::{mask_bits, Matroid};
use crate::error::{Error, Result};

/// Integer-valued function on all subsets of a small ground set.
#[derive(Debug, Clone)]
pub struct RankTable {
    ground: Vec<String>,
    values: Vec<u8>,
}

impl RankTable {
    pub fn from_matroid(m: &Matroid) -> RankTable {
        let n = m.ground().len();
        let values = (0..1u32 << n).map(|a| m.rank_mask(a) as u8).collect();
        RankTable {
            ground: m.ground().to_vec(),
            values,
        }
    }

    pub fn new(ground: Vec<String>, values: Vec<u8>) -> Result<RankTable> {
        if values.len() != 1 << ground.len() {
            return Err(Error::ArityMismatch {
                expected: 1 << ground.len(),
                got: values.len(),
            });
        }
        let t = RankTable { ground, values };
        t.validate()?;
        Ok(t)
    }

    pub fn ground(&self) -> &[String] {
        &self.ground
    }

    pub fn value(&self, mask: u32) -> u8 {
        self.values[mask as usize]
    }

    /// Checks the rank axioms: normalization, unit increase, and
    /// submodularity (in its equivalent local form).
    pub fn validate(&self) -> Result<()> {
        let n = self.ground.len();
        if self.values[0] != 0 {
            return Err(Error::InvalidMatroid("r(empty) must be 0".into()));
        }
        for a in 0..1u32 << n {
            for x in 0..n {
                if a >> x & 1 == 1 {
                    continue;
                }
                let ax = a | 1 << x;
                let (ra, rax) = (self.values[a as usize], self.values[ax as usize]);
                if rax < ra || rax > ra + 1 {
                    return Err(Error::InvalidMatroid(format!(
                        "unit increase fails between masks {a:#b} and {ax:#b}"
                    )));
                }
                for y in x + 1..n {
                    if a >> y & 1 == 1 {
                        continue;
                    }
                    let ay = a | 1 << y;
                    let axy = ax | 1 << y;
                    let lhs = i32::from(self.values[ax as usize]) + i32::from(self.values[ay as usize]);
                    let rhs = i32::from(self.values[axy as usize]) + i32::from(ra);
                    if lhs < rhs {
                        return Err(Error::InvalidMatroid(format!(
                            "submodularity fails at mask {a:#b} with elements {x}, {y}"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// Matroid with this rank function: independent sets are the subsets
    /// whose rank equals their size.
    pub fn to_matroid(&self) -> Result<Matroid> {
        let n = self.ground.len();
        let full_rank = self.values[(1usize << n) - 1];
        let bases: BTreeSet<u32> = (0..1u32 << n)
            .filter(|&a| {
                a.count_ones() == u32::from(full_rank)
                    && self.values[a as usize] == full_rank
            })
            .collect();
        Matroid::from_masks(self.ground.clone(), bases)
    }
}

/// Result of the amalgam search.
#[derive(Debug, Clone)]
pub enum AmalgamOutcome {
    /// A matroid on the union of the ground sets restricting to both
    /// inputs; re-validated against the axioms and both restrictions.
    Amalgam(Matroid),
    /// No rank function on the union satisfies the axioms and boundary
    /// conditions, hence no amalgam exists on any superset either.
    Infeasible,
    /// The inputs disagree on their shared ground set.
    IncompatibleRestrictions,
}

const MAX_SOLVER_GROUND: usize = 10;

/// Decides whether the two matroids have an amalgam on the union of their
/// ground sets. Deterministic: ranks are assigned in increasing
/// cardinality order trying smaller values first, so a found amalgam is
/// canonical.
pub fn amalgam_search(m1: &Matroid, m2: &Matroid) -> Result<AmalgamOutcome> {
    let mut ground: Vec<String> = m1.ground().to_vec();
    for g in m2.ground() {
        if !ground.contains(g) {
            ground.push(g.clone());
        }
    }
    let n = ground.len();
    if n > MAX_SOLVER_GROUND {
        return Err(Error::GuardExceeded(format!(
            "amalgam search limited to {MAX_SOLVER_GROUND} elements, got {n}"
        )));
    }
    let shared: Vec<String> = m1
        .ground()
        .iter()
        .filter(|g| m2.ground().contains(g))
        .cloned()
        .collect();
    if !m1
        .restriction(&shared)?
        .same_matroid(&m2.restriction(&shared)?)
    {
        return Ok(AmalgamOutcome::IncompatibleRestrictions);
    }

    // Boundary conditions: subsets of either ground set carry that
    // matroid's rank footprint.
    let size = 1usize << n;
    let mut fixed: Vec<Option<u8>> = vec![None; size];
    fixed[0] = Some(0);
    let project = |m: &Matroid| -> (u32, Vec<usize>) {
        let mask = m
            .ground()
            .iter()
            .map(|g| ground.iter().position(|h| h == g).unwrap())
            .fold(0u32, |acc, i| acc | 1 << i);
        let map = m
            .ground()
            .iter()
            .map(|g| ground.iter().position(|h| h == g).unwrap())
            .collect();
        (mask, map)
    };
    for m in [m1, m2] {
        let (_, map) = project(m);
        let k = m.ground().len();
        for sub in 0..1u32 << k {
            let global = mask_bits(sub).fold(0u32, |acc, i| acc | 1 << map[i]);
            fixed[global as usize] = Some(m.rank_mask(sub) as u8);
        }
    }

    // Masks in increasing cardinality order (ties by value).
    let mut order: Vec<u32> = (1..size as u32).collect();
    order.sort_by_key(|m| (m.count_ones(), *m));

    let mut values: Vec<i16> = vec![-1; size];
    values[0] = 0;
    let found = assign(&order, 0, &fixed, &mut values, n);
    if !found {
        return Ok(AmalgamOutcome::Infeasible);
    }
    let table = RankTable::new(
        ground,
        values.iter().map(|&v| v as u8).collect(),
    )?;
    let amalgam = table.to_matroid()?;
    for m in [m1, m2] {
        if !amalgam.restriction(m.ground())?.same_matroid(m) {
            return Err(Error::Invariant(
                "solver output does not restrict to an input".into(),
            ));
        }
    }
    Ok(AmalgamOutcome::Amalgam(amalgam))
}

fn assign(order: &[u32], idx: usize, fixed: &[Option<u8>], values: &mut [i16], n: usize) -> bool {
    let Some(&mask) = order.get(idx) else {
        return true;
    };
    let bits: Vec<usize> = mask_bits(mask).collect();
    // Unit-increase bounds from the one-element-removed subsets.
    let mut lo = 0i16;
    let mut hi = i16::MAX;
    for &x in &bits {
        let sub = values[(mask & !(1 << x)) as usize];
        lo = lo.max(sub);
        hi = hi.min(sub + 1);
    }
    // Local submodularity: r(U) <= r(U-x) + r(U-y) - r(U-x-y).
    for (i, &x) in bits.iter().enumerate() {
        for &y in &bits[i + 1..] {
            let rx = values[(mask & !(1 << x)) as usize];
            let ry = values[(mask & !(1 << y)) as usize];
            let rxy = values[(mask & !(1 << x) & !(1 << y)) as usize];
            hi = hi.min(rx + ry - rxy);
        }
    }
    let _ = n;
    let range: Vec<i16> = match fixed[mask as usize] {
        Some(v) => {
            let v = i16::from(v);
            if v < lo || v > hi {
                return false;
            }
            vec![v]
        }
        None => (lo..=hi).collect(),
    };
    for v in range {
        values[mask as usize] = v;
        if assign(order, idx + 1, fixed, values, n) {
            return true;
        }
    }
    values[mask as usize] = -1;
    false
}
