//! Parabolic subgroups and quotients: minimal coset representatives,
//! quotient posets and Poincaré polynomials, BP-decompositions, and the
//! classification of palindromic quotient elements.

use std::collections::{BTreeSet, HashMap, HashSet};

use crate::bruhat::{self, lower_covers};
use crate::error::{Result, WeylError};
use crate::poly::IntPolynomial;
use crate::poset::GradedPoset;
use crate::roots::RootSystem;
use crate::weyl::{
    left_multiply_simple, longest_parabolic, right_multiply_simple, WeylElement,
};

/// Default cap on quotient size.
pub const DEFAULT_QUOTIENT_CAP: u128 = 100_000;

/// Which descents the minimal coset representatives avoid.
///
/// `RightFree` is W^J (no right descents in J), `LeftFree` is ^JW (no left
/// descents in J). The two are exchanged by element inversion.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum QuotientSide {
    RightFree,
    LeftFree,
}

impl QuotientSide {
    pub fn parse(s: &str) -> Result<QuotientSide> {
        match s.to_ascii_lowercase().as_str() {
            "rightfree" => Ok(QuotientSide::RightFree),
            "leftfree" => Ok(QuotientSide::LeftFree),
            other => Err(WeylError::Domain(format!(
                "unknown side '{other}' (expected rightfree or leftfree)"
            ))),
        }
    }
}

impl std::fmt::Display for QuotientSide {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            QuotientSide::RightFree => write!(f, "rightfree"),
            QuotientSide::LeftFree => write!(f, "leftfree"),
        }
    }
}

/// The minimal-length representative of w's coset.
///
/// For `LeftFree`, the unique v in ^JW with w = u·v, u in W_J and lengths
/// additive, found by stripping left descents in J; `RightFree` is the mirror
/// (w = v·u).
pub fn coset_min_rep(
    rs: &RootSystem,
    w: &WeylElement,
    j: &BTreeSet<usize>,
    side: QuotientSide,
) -> Result<WeylElement> {
    Ok(match side {
        QuotientSide::LeftFree => strip_decompose_left(rs, w, j)?.1,
        QuotientSide::RightFree => {
            let (u, v_inv) = strip_decompose_left(rs, &w.inverse(), j)?;
            let _ = u;
            v_inv.inverse()
        }
    })
}

/// w = u·v with u in W_J and v in ^JW, lengths additive.
pub fn parabolic_decompose(
    rs: &RootSystem,
    w: &WeylElement,
    j: &BTreeSet<usize>,
) -> Result<(WeylElement, WeylElement)> {
    strip_decompose_left(rs, w, j)
}

fn strip_decompose_left(
    rs: &RootSystem,
    w: &WeylElement,
    j: &BTreeSet<usize>,
) -> Result<(WeylElement, WeylElement)> {
    let mut positions = Vec::with_capacity(j.len());
    for &label in j {
        positions.push(rs.label_position(label)?);
    }
    let mut u = WeylElement::identity(rs);
    let mut v = w.clone();
    let mut v_inv = w.inverse();
    loop {
        let descent = positions
            .iter()
            .find(|&&pos| v_inv.has_right_descent(rs, pos));
        match descent {
            Some(&pos) => {
                v = left_multiply_simple(rs, &v, pos);
                v_inv = right_multiply_simple(rs, &v_inv, pos);
                u = right_multiply_simple(rs, &u, pos);
            }
            None => break,
        }
    }
    debug_assert_eq!(u.length() + v.length(), w.length());
    Ok((u, v))
}

/// A parabolic quotient: the minimal coset representatives with their Bruhat
/// order, graded by length.
///
/// Elements are sorted by (length, permutation); poset ids follow that order.
pub struct Quotient {
    j: BTreeSet<usize>,
    side: QuotientSide,
    elements: Vec<WeylElement>,
    index: HashMap<WeylElement, u32>,
    poset: GradedPoset,
    top: u32,
}

impl Quotient {
    pub fn build(rs: &RootSystem, j: &BTreeSet<usize>, side: QuotientSide) -> Result<Quotient> {
        Quotient::build_with_cap(rs, j, side, DEFAULT_QUOTIENT_CAP)
    }

    pub fn build_with_cap(
        rs: &RootSystem,
        j: &BTreeSet<usize>,
        side: QuotientSide,
        cap: u128,
    ) -> Result<Quotient> {
        let mut j_positions = Vec::with_capacity(j.len());
        for &label in j {
            j_positions.push(rs.label_position(label)?);
        }
        let expected = {
            let group_order = rs.datum().weyl_order()?;
            let sub_order = rs.datum().restrict(&j_positions).weyl_order()?;
            group_order / sub_order
        };
        if expected > cap {
            return Err(WeylError::Resource(format!(
                "quotient of {} by J={j:?} has {expected} elements, above the cap {cap}",
                rs.datum().name()
            )));
        }

        // Minimal representatives are closed downward in the appropriate weak
        // order, so a layered BFS from the identity finds them all.
        let mut all: Vec<WeylElement> = vec![WeylElement::identity(rs)];
        let mut seen: HashSet<WeylElement> = all.iter().cloned().collect();
        let mut layer = all.clone();
        while !layer.is_empty() {
            let mut next = Vec::new();
            for v in &layer {
                for pos in 0..rs.rank() {
                    let candidate = match side {
                        QuotientSide::RightFree => left_multiply_simple(rs, v, pos),
                        QuotientSide::LeftFree => right_multiply_simple(rs, v, pos),
                    };
                    if candidate.length() != v.length() + 1 || seen.contains(&candidate) {
                        continue;
                    }
                    let free = match side {
                        QuotientSide::RightFree => j_positions
                            .iter()
                            .all(|&jp| !candidate.has_right_descent(rs, jp)),
                        QuotientSide::LeftFree => {
                            let inv = candidate.inverse();
                            j_positions.iter().all(|&jp| !inv.has_right_descent(rs, jp))
                        }
                    };
                    if free {
                        seen.insert(candidate.clone());
                        next.push(candidate);
                    }
                }
            }
            next.sort_unstable();
            all.extend(next.iter().cloned());
            layer = next;
        }
        if all.len() as u128 != expected {
            return Err(WeylError::Invariant(format!(
                "quotient enumeration found {} representatives, expected {expected}",
                all.len()
            )));
        }

        let index: HashMap<WeylElement, u32> = all
            .iter()
            .enumerate()
            .map(|(i, x)| (x.clone(), i as u32))
            .collect();
        // Bruhat covers restricted to the quotient. The quotient order is
        // graded by length, so length-one reflection drops are exactly the
        // Hasse edges.
        let mut covers = Vec::new();
        for (i, v) in all.iter().enumerate() {
            for c in lower_covers(rs, v) {
                if let Some(&ci) = index.get(&c) {
                    covers.push((ci, i as u32));
                }
            }
        }
        let ranks: Vec<u32> = all.iter().map(|x| x.length()).collect();
        let poset = GradedPoset::new(ranks, covers)?;
        let max_len = all.last().map(|x| x.length()).unwrap_or(0);
        let tops: Vec<u32> = (0..all.len() as u32)
            .filter(|&i| all[i as usize].length() == max_len)
            .collect();
        if tops.len() != 1 {
            return Err(WeylError::Invariant(
                "quotient has no unique maximal-length element".into(),
            ));
        }
        Ok(Quotient {
            j: j.clone(),
            side,
            elements: all,
            index,
            poset,
            top: tops[0],
        })
    }

    pub fn j(&self) -> &BTreeSet<usize> {
        &self.j
    }

    pub fn side(&self) -> QuotientSide {
        self.side
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[WeylElement] {
        &self.elements
    }

    pub fn poset(&self) -> &GradedPoset {
        &self.poset
    }

    pub fn contains(&self, v: &WeylElement) -> bool {
        self.index.contains_key(v)
    }

    pub fn index_of(&self, v: &WeylElement) -> Option<u32> {
        self.index.get(v).copied()
    }

    /// The unique longest representative.
    pub fn top(&self) -> &WeylElement {
        &self.elements[self.top as usize]
    }

    /// Rank generating function of [id, v] inside the quotient.
    pub fn poincare(&self, v: &WeylElement) -> Result<IntPolynomial> {
        let id = self.index_of(v).ok_or_else(|| {
            WeylError::Domain("element is not a minimal coset representative".into())
        })?;
        Ok(self.poset.lower_interval_poly(id))
    }

    /// Trivial means the identity or the quotient's longest element.
    pub fn is_trivial(&self, v: &WeylElement) -> bool {
        v.is_identity() || self.index_of(v) == Some(self.top)
    }

    /// All representatives with palindromic lower interval, trivial ones
    /// included, in element order.
    pub fn palindromic_elements(&self) -> Vec<WeylElement> {
        self.elements
            .iter()
            .enumerate()
            .filter(|&(i, _)| self.poset.lower_interval_poly(i as u32).is_palindromic())
            .map(|(_, v)| v.clone())
            .collect()
    }

    pub fn nontrivial_palindromic(&self) -> Vec<WeylElement> {
        self.palindromic_elements()
            .into_iter()
            .filter(|v| !self.is_trivial(v))
            .collect()
    }
}

/// The unique maximal element of W_J below w (m(w, J)). Uniqueness and
/// dominance are verified; a failure would falsify the lemma this rests on
/// and is reported as an invariant violation.
pub fn max_below(rs: &RootSystem, w: &WeylElement, j: &BTreeSet<usize>) -> Result<WeylElement> {
    let mut j_positions = BTreeSet::new();
    for &label in j {
        j_positions.insert(rs.label_position(label)?);
    }
    // u lies in W_J exactly when all its inversions are J-supported roots.
    let root_in_j: Vec<bool> = rs
        .positive_roots()
        .iter()
        .map(|r| {
            r.coeffs()
                .iter()
                .enumerate()
                .all(|(pos, &c)| c == 0 || j_positions.contains(&pos))
        })
        .collect();
    let interval = bruhat::lower_interval(rs, w)?;
    let members: Vec<&WeylElement> = interval
        .elements
        .iter()
        .filter(|u| u.inversion_indices().iter().all(|&p| root_in_j[p]))
        .collect();
    let max_len = members.iter().map(|u| u.length()).max().unwrap_or(0);
    let maxima: Vec<&&WeylElement> = members.iter().filter(|u| u.length() == max_len).collect();
    if maxima.len() != 1 {
        return Err(WeylError::Invariant(format!(
            "no unique maximal element of W_J below w: {} candidates at length {max_len}",
            maxima.len()
        )));
    }
    let m = (**maxima[0]).clone();
    for u in &members {
        if !bruhat::bruhat_leq(rs, u, &m) {
            return Err(WeylError::Invariant(
                "maximal-length element of W_J below w does not dominate the set".into(),
            ));
        }
    }
    Ok(m)
}

/// A BP-decomposition: w (or w^{-1} when `inverted`) equals u·v with
/// u = m(w, J), v in ^JW, lengths additive, and S∖J a single diagram leaf.
#[derive(Debug, Clone)]
pub struct BPDecomposition {
    pub w: WeylElement,
    pub j: BTreeSet<usize>,
    pub u: WeylElement,
    pub v: WeylElement,
    pub inverted: bool,
}

/// Scans removed leaves in ascending label order, trying w before w^{-1} for
/// each, and returns the first leaf-removed decomposition with u = m(·, J).
pub fn find_maximal_decomposition(
    rs: &RootSystem,
    w: &WeylElement,
) -> Result<Option<BPDecomposition>> {
    let all_labels: BTreeSet<usize> = rs.labels().iter().copied().collect();
    for leaf in rs.leaf_labels() {
        let mut j = all_labels.clone();
        j.remove(&leaf);
        for (target, inverted) in [(w.clone(), false), (w.inverse(), true)] {
            let (u, v) = parabolic_decompose(rs, &target, &j)?;
            if u == max_below(rs, &target, &j)? {
                return Ok(Some(BPDecomposition {
                    w: w.clone(),
                    j,
                    u,
                    v,
                    inverted,
                }));
            }
        }
    }
    Ok(None)
}

/// BP-decomposition of a rationally smooth element. Existence is guaranteed
/// by the BP theorem; coming up empty is an invariant violation.
pub fn find_bp_decomposition(rs: &RootSystem, w: &WeylElement) -> Result<BPDecomposition> {
    if !bruhat::is_rationally_smooth(rs, w)? {
        return Err(WeylError::Domain(
            "find_bp_decomposition requires a rationally smooth element".into(),
        ));
    }
    find_maximal_decomposition(rs, w)?.ok_or_else(|| {
        WeylError::Invariant("no BP-decomposition found for a rationally smooth element".into())
    })
}

/// Checks P_w(q) = P_u(q) · P_v^{^JW}(q) for the first maximal leaf-removed
/// decomposition of w or w^{-1} with u = m(·, J).
pub fn check_factorization(rs: &RootSystem, w: &WeylElement) -> Result<bool> {
    let bp = find_maximal_decomposition(rs, w)?.ok_or_else(|| {
        WeylError::Domain("no maximal parabolic decomposition with u = m(w,J) exists".into())
    })?;
    let target = if bp.inverted { w.inverse() } else { w.clone() };
    let p_w = bruhat::poincare(rs, &target)?;
    let p_u = bruhat::poincare(rs, &bp.u)?;
    let quotient = Quotient::build(rs, &bp.j, QuotientSide::LeftFree)?;
    let p_v = quotient.poincare(&bp.v)?;
    Ok(p_w == &p_u * &p_v)
}

/// For a BP-decomposition w = uv: every label of support(v) ∩ J is a right
/// descent of u, and u = u'·u_{I∩J} with u_{I∩J} the longest element of
/// W_{I∩J} and lengths additive.
pub fn right_descent_property(rs: &RootSystem, w: &WeylElement) -> Result<bool> {
    let bp = find_bp_decomposition(rs, w)?;
    let support = bp.v.support(rs);
    let i_cap_j: BTreeSet<usize> = support.intersection(&bp.j).copied().collect();
    let u_descents = bp.u.right_descents(rs);
    if !i_cap_j.iter().all(|label| u_descents.contains(label)) {
        return Ok(false);
    }
    let u_icj = longest_parabolic(rs, &i_cap_j)?;
    let u_prime = bp.u.multiply(&u_icj.inverse());
    Ok(u_prime.length() + u_icj.length() == bp.u.length()
        && u_prime.multiply(&u_icj) == bp.u)
}

/// Classification of a palindromic quotient element.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub enum PalindromicClass {
    Trivial,
    LocallyLongest,
    LocalChain,
    SpecialF4,
    SpecialBn,
    NotPalindromic,
}

impl std::fmt::Display for PalindromicClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            PalindromicClass::Trivial => "trivial",
            PalindromicClass::LocallyLongest => "locally-longest",
            PalindromicClass::LocalChain => "local-chain",
            PalindromicClass::SpecialF4 => "special-F4",
            PalindromicClass::SpecialBn => "special-Bn",
            PalindromicClass::NotPalindromic => "not-palindromic",
        };
        write!(f, "{s}")
    }
}

/// Classifies v within a leaf-removed quotient, with precedence
/// Trivial > LocallyLongest > LocalChain > Special.
///
/// The special cases accept either word orientation (v or v^{-1} against the
/// listed form), since the two sides of the quotient are exchanged by
/// inversion. The tag is cross-checked against palindromicity of the actual
/// quotient interval; a mismatch is an invariant violation.
pub fn classify_quotient_element(
    rs: &RootSystem,
    quotient: &Quotient,
    v: &WeylElement,
) -> Result<PalindromicClass> {
    if !quotient.contains(v) {
        return Err(WeylError::Domain(
            "element is not a minimal coset representative".into(),
        ));
    }
    let all_labels: BTreeSet<usize> = rs.labels().iter().copied().collect();
    let removed: Vec<usize> = all_labels.difference(quotient.j()).copied().collect();
    let leaf_labels = rs.leaf_labels();
    if removed.len() != 1 || !leaf_labels.contains(&removed[0]) {
        return Err(WeylError::Domain(
            "classification requires S∖J to be a single diagram leaf".into(),
        ));
    }
    let removed = removed[0];

    let tag = classify_inner(rs, quotient, v, removed)?;
    let palindromic = quotient.poincare(v)?.is_palindromic();
    if (tag != PalindromicClass::NotPalindromic) != palindromic {
        return Err(WeylError::Invariant(format!(
            "classification tag {tag} disagrees with palindromicity {palindromic}"
        )));
    }
    Ok(tag)
}

fn classify_inner(
    rs: &RootSystem,
    quotient: &Quotient,
    v: &WeylElement,
    removed: usize,
) -> Result<PalindromicClass> {
    if quotient.is_trivial(v) {
        return Ok(PalindromicClass::Trivial);
    }
    let support = v.support(rs);
    let support_positions: BTreeSet<usize> = support
        .iter()
        .map(|&l| rs.label_position(l).expect("support labels are valid"))
        .collect();

    // Embedded quotient W_I^{I∩J} inside the sub-root-system on I.
    let sub = rs.restrict(&support)?;
    let v_sub = WeylElement::from_word(&sub, &v.canonical_word(rs))?;
    let i_cap_j: BTreeSet<usize> = support.intersection(quotient.j()).copied().collect();
    let embedded = Quotient::build(&sub, &i_cap_j, quotient.side())?;
    if !embedded.contains(&v_sub) {
        return Err(WeylError::Invariant(
            "quotient element left the embedded quotient".into(),
        ));
    }
    if rs.datum().is_connected(&support_positions) && &v_sub == embedded.top() {
        return Ok(PalindromicClass::LocallyLongest);
    }
    if embedded.poset().is_chain() {
        return Ok(PalindromicClass::LocalChain);
    }

    match rs.datum().group() {
        Some(crate::cartan::GroupType::F4) if removed == 1 || removed == 4 => {
            let listed = WeylElement::from_word(rs, &[1, 2, 3, 4])?;
            if *v == listed || *v == listed.inverse() {
                return Ok(PalindromicClass::SpecialF4);
            }
        }
        Some(crate::cartan::GroupType::B(n)) if removed == 0 => {
            for k in 0..n {
                let word: Vec<usize> = (0..=k).rev().collect();
                let listed = WeylElement::from_word(rs, &word)?;
                if *v == listed || *v == listed.inverse() {
                    return Ok(PalindromicClass::SpecialBn);
                }
            }
        }
        _ => {}
    }
    Ok(PalindromicClass::NotPalindromic)
}
