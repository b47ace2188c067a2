//! Weyl group elements as signed permutations of the positive roots.

use std::collections::{BTreeSet, HashSet};

use crate::error::{Result, WeylError};
use crate::roots::{apply_perm, negate, Root, RootSystem};

/// Default cap on full group enumeration. E8 (order 696,729,600) is
/// deliberately out of reach; use parabolic quotients there instead.
pub const DEFAULT_GROUP_CAP: u128 = 1_000_000;

/// A Weyl group element, stored as the images of the positive roots
/// (signed indices). The length is cached; it always equals the number
/// of positive roots sent to negatives.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeylElement {
    perm: Box<[u16]>,
    length: u32,
}

impl WeylElement {
    fn from_perm(perm: Box<[u16]>) -> WeylElement {
        let n = perm.len();
        let length = perm.iter().filter(|&&y| y as usize >= n).count() as u32;
        WeylElement { perm, length }
    }

    pub(crate) fn from_perm_vec(perm: Vec<u16>) -> WeylElement {
        WeylElement::from_perm(perm.into_boxed_slice())
    }

    pub fn identity(rs: &RootSystem) -> WeylElement {
        let n = rs.num_positive();
        WeylElement {
            perm: (0..n as u16).collect(),
            length: 0,
        }
    }

    /// The simple reflection with a given node label.
    pub fn simple(rs: &RootSystem, label: usize) -> Result<WeylElement> {
        let pos = rs.label_position(label)?;
        let n = rs.num_positive();
        Ok(WeylElement::from_perm(
            rs.action_table(pos)[..n].to_vec().into_boxed_slice(),
        ))
    }

    /// Product of simple reflections, composed left to right:
    /// `from_word(&rs, &[i, j])` is s_i · s_j. Words need not be reduced.
    pub fn from_word(rs: &RootSystem, word: &[usize]) -> Result<WeylElement> {
        let n = rs.num_positive();
        let mut out: Vec<u16> = (0..n as u16).collect();
        for &letter in word {
            let pos = rs.label_position(letter)?;
            let s = &rs.action_table(pos)[..n];
            // (w · s_i)(x) = w(s_i(x)).
            let prev = out.clone();
            for x in 0..n {
                out[x] = apply_perm(&prev, s[x]);
            }
        }
        Ok(WeylElement::from_perm(out.into_boxed_slice()))
    }

    pub fn length(&self) -> u32 {
        self.length
    }

    pub fn is_identity(&self) -> bool {
        self.length == 0
    }

    /// Image of a signed root index.
    #[inline]
    pub(crate) fn apply(&self, x: u16) -> u16 {
        apply_perm(&self.perm, x)
    }

    pub(crate) fn perm(&self) -> &[u16] {
        &self.perm
    }

    /// Group product; (a·b)(x) = a(b(x)).
    pub fn multiply(&self, other: &WeylElement) -> WeylElement {
        assert_eq!(
            self.perm.len(),
            other.perm.len(),
            "elements of different root systems"
        );
        let n = self.perm.len();
        let mut perm = vec![0u16; n];
        for (x, slot) in perm.iter_mut().enumerate() {
            *slot = self.apply(other.perm[x]);
        }
        WeylElement::from_perm(perm.into_boxed_slice())
    }

    pub fn inverse(&self) -> WeylElement {
        let n = self.perm.len();
        let mut perm = vec![0u16; n];
        for (x, &y) in self.perm.iter().enumerate() {
            if (y as usize) < n {
                perm[y as usize] = x as u16;
            } else {
                perm[y as usize - n] = negate(n, x as u16);
            }
        }
        WeylElement {
            perm: perm.into_boxed_slice(),
            length: self.length,
        }
    }

    /// Image of a root under the element.
    pub fn apply_root(&self, rs: &RootSystem, root: &Root) -> Result<Root> {
        let signed = rs
            .signed_index_of(root)
            .ok_or_else(|| WeylError::Domain(format!("{root} is not a root")))?;
        let n = rs.num_positive();
        let y = self.apply(signed as u16) as usize;
        Ok(if y < n {
            rs.positive_roots()[y].clone()
        } else {
            rs.positive_roots()[y - n].negated()
        })
    }

    /// The positive roots sent to negatives, in root order.
    pub fn inversion_set(&self, rs: &RootSystem) -> Vec<Root> {
        let n = rs.num_positive();
        self.perm
            .iter()
            .enumerate()
            .filter(|&(_, &y)| y as usize >= n)
            .map(|(p, _)| rs.positive_roots()[p].clone())
            .collect()
    }

    /// Indices of the inversion roots.
    pub(crate) fn inversion_indices(&self) -> Vec<usize> {
        let n = self.perm.len();
        self.perm
            .iter()
            .enumerate()
            .filter(|&(_, &y)| y as usize >= n)
            .map(|(p, _)| p)
            .collect()
    }

    /// Right descents: labels i with w(alpha_i) < 0.
    pub fn right_descents(&self, rs: &RootSystem) -> BTreeSet<usize> {
        let n = rs.num_positive();
        rs.labels()
            .iter()
            .enumerate()
            .filter(|&(pos, _)| self.perm[rs.simple_root_index(pos)] as usize >= n)
            .map(|(_, &label)| label)
            .collect()
    }

    /// Left descents: right descents of the inverse.
    pub fn left_descents(&self, rs: &RootSystem) -> BTreeSet<usize> {
        self.inverse().right_descents(rs)
    }

    pub fn descents(&self, rs: &RootSystem, side: Side) -> BTreeSet<usize> {
        match side {
            Side::Right => self.right_descents(rs),
            Side::Left => self.left_descents(rs),
        }
    }

    /// Whether s_label is a right descent (fast path, no set allocation).
    pub(crate) fn has_right_descent(&self, rs: &RootSystem, position: usize) -> bool {
        let n = rs.num_positive();
        self.perm[rs.simple_root_index(position)] as usize >= n
    }

    /// A reduced word, produced by repeatedly taking the smallest-labeled
    /// left descent. Deterministic; its length is exactly ℓ(w).
    pub fn canonical_word(&self, rs: &RootSystem) -> Vec<usize> {
        let mut word = Vec::with_capacity(self.length as usize);
        let mut w = self.clone();
        while !w.is_identity() {
            let inv = w.inverse();
            let (pos, &label) = rs
                .labels()
                .iter()
                .enumerate()
                .filter(|&(pos, _)| inv.has_right_descent(rs, pos))
                .min_by_key(|&(_, &label)| label)
                .expect("non-identity element has a left descent");
            word.push(label);
            let n = rs.num_positive();
            let s = rs.action_table(pos);
            let mut perm = vec![0u16; n];
            for (x, slot) in perm.iter_mut().enumerate() {
                *slot = apply_perm(&s[..n], w.perm[x]);
            }
            w = WeylElement::from_perm(perm.into_boxed_slice());
        }
        word
    }

    /// Labels appearing in a reduced word (well-defined across reduced words).
    pub fn support(&self, rs: &RootSystem) -> BTreeSet<usize> {
        self.canonical_word(rs).into_iter().collect()
    }
}

/// Which side of an element descents or coset representatives live on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

/// The reflection through a positive root; an involution of odd length.
pub fn reflection_for_root(rs: &RootSystem, root: &Root) -> Result<WeylElement> {
    let p = rs
        .index_of(root)
        .ok_or_else(|| WeylError::Domain(format!("{root} is not a positive root")))?;
    Ok(WeylElement::from_perm(
        rs.reflection_perm(p).to_vec().into_boxed_slice(),
    ))
}

/// All reflections, indexed like the positive roots.
pub fn all_reflections(rs: &RootSystem) -> Vec<WeylElement> {
    (0..rs.num_positive())
        .map(|p| WeylElement::from_perm(rs.reflection_perm(p).to_vec().into_boxed_slice()))
        .collect()
}

/// Enumerates the whole group in breadth-first order by length, each layer
/// sorted for determinism.
pub fn enumerate_group(rs: &RootSystem) -> Result<Vec<WeylElement>> {
    enumerate_group_with_cap(rs, DEFAULT_GROUP_CAP)
}

pub fn enumerate_group_with_cap(rs: &RootSystem, cap: u128) -> Result<Vec<WeylElement>> {
    if let Ok(order) = rs.datum().weyl_order() {
        if order > cap {
            return Err(WeylError::Resource(format!(
                "group {} has order {order}, above the enumeration cap {cap}",
                rs.datum().name()
            )));
        }
    }
    let rank = rs.rank();
    let mut all: Vec<WeylElement> = vec![WeylElement::identity(rs)];
    let mut seen: HashSet<WeylElement> = all.iter().cloned().collect();
    let mut layer: Vec<WeylElement> = all.clone();
    while !layer.is_empty() {
        let mut next: Vec<WeylElement> = Vec::new();
        for w in &layer {
            for pos in 0..rank {
                if !w.has_right_descent(rs, pos) {
                    let ws = right_multiply_simple(rs, w, pos);
                    if seen.insert(ws.clone()) {
                        next.push(ws);
                    }
                }
            }
        }
        if seen.len() as u128 > cap {
            return Err(WeylError::Resource(format!(
                "group enumeration exceeded the cap {cap}"
            )));
        }
        next.sort_unstable();
        all.extend(next.iter().cloned());
        layer = next;
    }
    Ok(all)
}

/// w · s_i for a diagram position.
pub(crate) fn right_multiply_simple(rs: &RootSystem, w: &WeylElement, pos: usize) -> WeylElement {
    let n = rs.num_positive();
    let s = &rs.action_table(pos)[..n];
    let mut perm = vec![0u16; n];
    for (x, slot) in perm.iter_mut().enumerate() {
        *slot = w.apply(s[x]);
    }
    WeylElement::from_perm(perm.into_boxed_slice())
}

/// s_i · w for a diagram position.
pub(crate) fn left_multiply_simple(rs: &RootSystem, w: &WeylElement, pos: usize) -> WeylElement {
    let n = rs.num_positive();
    let s = &rs.action_table(pos)[..n];
    let mut perm = vec![0u16; n];
    for (x, slot) in perm.iter_mut().enumerate() {
        *slot = apply_perm(s, w.perm()[x]);
    }
    WeylElement::from_perm(perm.into_boxed_slice())
}

/// The longest element, by greedy length ascent.
pub fn longest_element(rs: &RootSystem) -> WeylElement {
    let labels: BTreeSet<usize> = rs.labels().iter().copied().collect();
    longest_parabolic(rs, &labels).expect("labels are valid")
}

/// The longest element of the parabolic subgroup W_J.
pub fn longest_parabolic(rs: &RootSystem, j: &BTreeSet<usize>) -> Result<WeylElement> {
    let mut positions = Vec::with_capacity(j.len());
    for &label in j {
        positions.push(rs.label_position(label)?);
    }
    let mut w = WeylElement::identity(rs);
    loop {
        match positions.iter().find(|&&pos| !w.has_right_descent(rs, pos)) {
            Some(&pos) => w = right_multiply_simple(rs, &w, pos),
            None => return Ok(w),
        }
    }
}
