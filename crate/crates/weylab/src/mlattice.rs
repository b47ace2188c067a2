//! The lattice M(n): subsets of {1..n} ordered by componentwise domination of
//! the largest entries, together with the verified isomorphisms to the
//! B_n/A_{n-1} and D_n/A_{n-1} quotients.

use std::collections::BTreeSet;

use crate::cartan::GroupType;
use crate::error::{Result, WeylError};
use crate::parabolic::{Quotient, QuotientSide};
use crate::poset::GradedPoset;
use crate::roots::RootSystem;

/// Cap on n for materializing all 2^n subsets.
pub const MAX_N: usize = 20;

/// A subset of {1..n} with strictly increasing entries; its rank is the
/// entry sum.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MnElement {
    entries: Vec<u8>,
}

impl MnElement {
    pub fn new(entries: Vec<u8>) -> Result<MnElement> {
        if entries.windows(2).any(|w| w[0] >= w[1]) || entries.first() == Some(&0) {
            return Err(WeylError::Domain(
                "M(n) elements are strictly increasing subsets of {1..n}".into(),
            ));
        }
        Ok(MnElement { entries })
    }

    pub fn empty() -> MnElement {
        MnElement { entries: vec![] }
    }

    pub fn entries(&self) -> &[u8] {
        &self.entries
    }

    pub fn rank(&self) -> u32 {
        self.entries.iter().map(|&e| e as u32).sum()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

impl std::fmt::Display for MnElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.entries.is_empty() {
            return write!(f, "∅");
        }
        if self.entries.last().copied().unwrap_or(0) > 9 {
            let list = self
                .entries
                .iter()
                .map(|e| e.to_string())
                .collect::<Vec<_>>()
                .join(",");
            write!(f, "{{{list}}}")
        } else {
            for e in &self.entries {
                write!(f, "{e}")?;
            }
            Ok(())
        }
    }
}

/// A ⪯ B: |A| ≤ |B| and the i-th largest entry of A is at most the i-th
/// largest entry of B, for every i.
pub fn mn_leq(a: &MnElement, b: &MnElement) -> bool {
    if a.len() > b.len() {
        return false;
    }
    a.entries
        .iter()
        .rev()
        .zip(b.entries.iter().rev())
        .all(|(x, y)| x <= y)
}

/// M(n) materialized: all 2^n subsets with covers and grading by entry sum.
pub struct MnLattice {
    n: usize,
    elements: Vec<MnElement>,
    poset: GradedPoset,
}

impl MnLattice {
    pub fn build(n: usize) -> Result<MnLattice> {
        if n > MAX_N {
            return Err(WeylError::Resource(format!(
                "M({n}) has 2^{n} elements, above the cap of 2^{MAX_N}"
            )));
        }
        let mut elements: Vec<MnElement> = (0u32..1 << n)
            .map(|mask| {
                let entries: Vec<u8> =
                    (0..n).filter(|i| mask >> i & 1 == 1).map(|i| i as u8 + 1).collect();
                MnElement { entries }
            })
            .collect();
        elements.sort_unstable_by(|a, b| (a.rank(), &a.entries).cmp(&(b.rank(), &b.entries)));
        // The order is graded by entry sum, so covers are exactly the
        // comparable pairs one rank apart (transitive reduction for free).
        let mut covers = Vec::new();
        for (i, a) in elements.iter().enumerate() {
            for (k, b) in elements.iter().enumerate() {
                if b.rank() == a.rank() + 1 && mn_leq(a, b) {
                    covers.push((i as u32, k as u32));
                }
            }
        }
        let ranks: Vec<u32> = elements.iter().map(|e| e.rank()).collect();
        let poset = GradedPoset::new(ranks, covers)?;
        Ok(MnLattice { n, elements, poset })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn elements(&self) -> &[MnElement] {
        &self.elements
    }

    pub fn poset(&self) -> &GradedPoset {
        &self.poset
    }

    pub fn index_of(&self, a: &MnElement) -> Option<u32> {
        self.elements
            .binary_search_by(|x| (x.rank(), &x.entries).cmp(&(a.rank(), &a.entries)))
            .ok()
            .map(|i| i as u32)
    }

    /// Upper covers, two-step ups, lower covers and two-step downs of A.
    pub fn up_down_sets(
        &self,
        a: &MnElement,
    ) -> Result<(Vec<MnElement>, Vec<MnElement>, Vec<MnElement>, Vec<MnElement>)> {
        let id = self
            .index_of(a)
            .ok_or_else(|| WeylError::Domain(format!("{a} is not an element of M({})", self.n)))?;
        let pick = |ids: Vec<u32>| -> Vec<MnElement> {
            let mut out: Vec<MnElement> =
                ids.iter().map(|&i| self.elements[i as usize].clone()).collect();
            out.sort_unstable_by(|a, b| (a.rank(), &a.entries).cmp(&(b.rank(), &b.entries)));
            out.dedup();
            out
        };
        let up = self.poset.upper_covers(id).to_vec();
        let up2: Vec<u32> = up
            .iter()
            .flat_map(|&c| self.poset.upper_covers(c).iter().copied())
            .collect();
        let down = self.poset.lower_covers(id).to_vec();
        let down2: Vec<u32> = down
            .iter()
            .flat_map(|&c| self.poset.lower_covers(c).iter().copied())
            .collect();
        Ok((pick(up), pick(up2), pick(down), pick(down2)))
    }

    /// Elements whose lower interval is palindromic, by brute force over the
    /// cover reachability.
    pub fn palindromic(&self) -> Vec<MnElement> {
        self.elements
            .iter()
            .enumerate()
            .filter(|&(i, _)| self.poset.lower_interval_poly(i as u32).is_palindromic())
            .map(|(_, e)| e.clone())
            .collect()
    }
}

/// Brute-force palindromic set of M(n).
pub fn mn_palindromic(n: usize) -> Result<Vec<MnElement>> {
    Ok(MnLattice::build(n)?.palindromic())
}

/// Whether the B_n quotient by J = S∖{s_0} is isomorphic to M(n) as a graded
/// poset.
pub fn verify_iso_bn(n: usize) -> Result<bool> {
    if !(2..=6).contains(&n) {
        return Err(WeylError::Resource(format!(
            "verify_iso_bn supports 2 <= n <= 6, got {n}"
        )));
    }
    let rs = RootSystem::new(GroupType::B(n))?;
    let j: BTreeSet<usize> = (1..n).collect();
    let q = Quotient::build(&rs, &j, QuotientSide::RightFree)?;
    let m = MnLattice::build(n)?;
    Ok(q.poset().is_isomorphic(m.poset()))
}

/// Whether the D_n quotients by J = S∖{s_0} and J = S∖{s_1} are both
/// isomorphic to M(n-1).
pub fn verify_iso_dn(n: usize) -> Result<bool> {
    if !(4..=6).contains(&n) {
        return Err(WeylError::Resource(format!(
            "verify_iso_dn supports 4 <= n <= 6, got {n}"
        )));
    }
    let rs = RootSystem::new(GroupType::D(n))?;
    let m = MnLattice::build(n - 1)?;
    for drop in [0usize, 1] {
        let j: BTreeSet<usize> = (0..n).filter(|&l| l != drop).collect();
        let q = Quotient::build(&rs, &j, QuotientSide::RightFree)?;
        if !q.poset().is_isomorphic(m.poset()) {
            return Ok(false);
        }
    }
    Ok(true)
}
