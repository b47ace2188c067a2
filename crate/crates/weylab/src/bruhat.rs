//! Strong Bruhat order: lower intervals, Poincaré polynomials, rational
//! smoothness, pairwise comparison, and weak order posets.

use std::collections::HashMap;

use crate::error::{Result, WeylError};
use crate::poly::IntPolynomial;
use crate::poset::GradedPoset;
use crate::roots::RootSystem;
use crate::weyl::{left_multiply_simple, right_multiply_simple, Side, WeylElement};

/// Default cap on Bruhat interval size.
pub const DEFAULT_INTERVAL_CAP: usize = 1_000_000;

/// The elements covered by w: {tw : t a reflection, ℓ(tw) = ℓ(w) − 1}.
pub fn lower_covers(rs: &RootSystem, w: &WeylElement) -> Vec<WeylElement> {
    let n = rs.num_positive();
    let mut out = Vec::new();
    // t_alpha w < w exactly when w^{-1}(alpha) < 0, so only scan inversions
    // of w^{-1}; among those keep the length drops of exactly one.
    let inv = w.inverse();
    for p in inv.inversion_indices() {
        let t = rs.reflection_perm(p);
        let mut perm = vec![0u16; n];
        for (x, slot) in perm.iter_mut().enumerate() {
            *slot = crate::roots::apply_perm(t, w.apply(x as u16));
        }
        let tw = WeylElement::from_perm_vec(perm);
        if tw.length() + 1 == w.length() {
            out.push(tw);
        }
    }
    out.sort_unstable();
    out.dedup();
    out
}

/// A lower Bruhat interval [id, w] with its Hasse diagram.
///
/// Elements are sorted by (length, permutation); ids in `poset` follow that
/// order, ranked by length.
pub struct LowerInterval {
    pub elements: Vec<WeylElement>,
    pub poset: GradedPoset,
}

impl LowerInterval {
    pub fn index_of(&self, w: &WeylElement) -> Option<u32> {
        self.elements
            .binary_search_by(|x| (x.length(), x.perm()).cmp(&(w.length(), w.perm())))
            .ok()
            .map(|i| i as u32)
    }
}

/// Downward closure of {w} under cover relations.
pub fn lower_interval(rs: &RootSystem, w: &WeylElement) -> Result<LowerInterval> {
    lower_interval_with_cap(rs, w, DEFAULT_INTERVAL_CAP)
}

pub fn lower_interval_with_cap(
    rs: &RootSystem,
    w: &WeylElement,
    cap: usize,
) -> Result<LowerInterval> {
    let set = interval_elements(rs, w, cap)?;
    let mut elements: Vec<WeylElement> = set.into_keys().collect();
    elements.sort_unstable_by(|a, b| (a.length(), a.perm()).cmp(&(b.length(), b.perm())));
    let index: HashMap<&WeylElement, u32> = elements
        .iter()
        .enumerate()
        .map(|(i, x)| (x, i as u32))
        .collect();
    let mut covers = Vec::new();
    for (i, x) in elements.iter().enumerate() {
        for c in lower_covers(rs, x) {
            covers.push((index[&c], i as u32));
        }
    }
    let ranks: Vec<u32> = elements.iter().map(|x| x.length()).collect();
    let poset = GradedPoset::new(ranks, covers)?;
    Ok(LowerInterval { elements, poset })
}

fn interval_elements(
    rs: &RootSystem,
    w: &WeylElement,
    cap: usize,
) -> Result<HashMap<WeylElement, ()>> {
    let mut seen: HashMap<WeylElement, ()> = HashMap::new();
    seen.insert(w.clone(), ());
    let mut stack = vec![w.clone()];
    while let Some(x) = stack.pop() {
        for c in lower_covers(rs, &x) {
            if !seen.contains_key(&c) {
                if seen.len() >= cap {
                    return Err(WeylError::Resource(format!(
                        "Bruhat interval exceeded the cap of {cap} elements"
                    )));
                }
                seen.insert(c.clone(), ());
                stack.push(c);
            }
        }
    }
    Ok(seen)
}

/// P_w(q): the rank generating function of [id, w].
pub fn poincare(rs: &RootSystem, w: &WeylElement) -> Result<IntPolynomial> {
    poincare_with_cap(rs, w, DEFAULT_INTERVAL_CAP)
}

pub fn poincare_with_cap(rs: &RootSystem, w: &WeylElement, cap: usize) -> Result<IntPolynomial> {
    let set = interval_elements(rs, w, cap)?;
    let mut counts = vec![0u64; w.length() as usize + 1];
    for x in set.keys() {
        counts[x.length() as usize] += 1;
    }
    Ok(IntPolynomial::new(counts))
}

/// Carrell–Peterson: w is rationally smooth iff P_w(q) is palindromic.
pub fn is_rationally_smooth(rs: &RootSystem, w: &WeylElement) -> Result<bool> {
    Ok(poincare(rs, w)?.is_palindromic())
}

/// Whether u <= v in strong Bruhat order, by the left-descent recursion.
pub fn bruhat_leq(rs: &RootSystem, u: &WeylElement, v: &WeylElement) -> bool {
    let mut u = u.clone();
    let mut u_inv = u.inverse();
    let mut v = v.clone();
    let mut v_inv = v.inverse();
    loop {
        if u.is_identity() {
            return true;
        }
        if u.length() > v.length() {
            return false;
        }
        if u == v {
            return true;
        }
        // Smallest-labeled left descent of v.
        let pos = rs
            .labels()
            .iter()
            .enumerate()
            .filter(|&(pos, _)| v_inv.has_right_descent(rs, pos))
            .min_by_key(|&(_, &label)| label)
            .map(|(pos, _)| pos)
            .expect("non-identity element has a left descent");
        if u_inv.has_right_descent(rs, pos) {
            u = left_multiply_simple(rs, &u, pos);
            u_inv = right_multiply_simple(rs, &u_inv, pos);
        }
        v = left_multiply_simple(rs, &v, pos);
        v_inv = right_multiply_simple(rs, &v_inv, pos);
    }
}

/// Weak order restricted to a set of elements: covers are (w, w·s_i) on the
/// right side or (w, s_i·w) on the left, with a length increase of one and
/// both ends in the set. Ids follow the given element order; ranks are
/// lengths.
pub fn weak_order_poset(
    rs: &RootSystem,
    elements: &[WeylElement],
    side: Side,
) -> Result<GradedPoset> {
    let index: HashMap<&WeylElement, u32> = elements
        .iter()
        .enumerate()
        .map(|(i, x)| (x, i as u32))
        .collect();
    if index.len() != elements.len() {
        return Err(WeylError::Domain("duplicate elements in weak order set".into()));
    }
    let mut covers = Vec::new();
    for (i, x) in elements.iter().enumerate() {
        for pos in 0..rs.rank() {
            let y = match side {
                Side::Right => right_multiply_simple(rs, x, pos),
                Side::Left => left_multiply_simple(rs, x, pos),
            };
            if y.length() == x.length() + 1 {
                if let Some(&j) = index.get(&y) {
                    covers.push((i as u32, j));
                }
            }
        }
    }
    let ranks: Vec<u32> = elements.iter().map(|x| x.length()).collect();
    GradedPoset::new(ranks, covers)
}
