//! Inversion hyperplane arrangements: regions by Weyl chamber aggregation,
//! the distance polynomial R_w(q), chamber posets, uniformity, and the
//! special-case checks used by the main verification.
//!
//! Every arrangement here is a set of positive roots (hyperplane normals)
//! inside a fixed Coxeter arrangement, so regions can be enumerated exactly
//! by grouping Weyl chambers on their sign vectors. No geometry, no floats.

use std::collections::HashMap;

use serde::Serialize;

use crate::error::{Result, WeylError};
use crate::poly::IntPolynomial;
use crate::poset::GradedPoset;
use crate::roots::{Root, RootSystem};
use crate::weyl::{enumerate_group_with_cap, WeylElement, DEFAULT_GROUP_CAP};

/// The Weyl chambers of a root system: the enumerated group with inverses
/// precomputed. Shared by every arrangement over the same system.
pub struct ChamberComplex {
    elements: Vec<WeylElement>,
    inverses: Vec<WeylElement>,
}

impl ChamberComplex {
    pub fn build(rs: &RootSystem) -> Result<ChamberComplex> {
        ChamberComplex::build_with_cap(rs, DEFAULT_GROUP_CAP)
    }

    pub fn build_with_cap(rs: &RootSystem, cap: u128) -> Result<ChamberComplex> {
        let elements = enumerate_group_with_cap(rs, cap)?;
        let inverses = elements.iter().map(WeylElement::inverse).collect();
        Ok(ChamberComplex { elements, inverses })
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
}

/// A central arrangement: distinct positive roots as hyperplane normals,
/// stored as sorted root indices. At most 64 normals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arrangement {
    normals: Vec<u32>,
}

impl Arrangement {
    pub fn from_indices(mut indices: Vec<u32>, rs: &RootSystem) -> Result<Arrangement> {
        let before = indices.len();
        indices.sort_unstable();
        indices.dedup();
        if indices.len() != before {
            return Err(WeylError::Domain("duplicate hyperplane normals".into()));
        }
        if indices.iter().any(|&i| i as usize >= rs.num_positive()) {
            return Err(WeylError::Domain("normal index out of range".into()));
        }
        if indices.len() > 64 {
            return Err(WeylError::Resource(
                "arrangements with more than 64 hyperplanes are not supported".into(),
            ));
        }
        Ok(Arrangement { normals: indices })
    }

    pub fn from_roots(rs: &RootSystem, roots: &[Root]) -> Result<Arrangement> {
        let mut indices = Vec::with_capacity(roots.len());
        for r in roots {
            let idx = rs
                .index_of(r)
                .ok_or_else(|| WeylError::Domain(format!("{r} is not a positive root")))?;
            indices.push(idx as u32);
        }
        Arrangement::from_indices(indices, rs)
    }

    /// The inversion arrangement A_w (normals = inversion set of w).
    pub fn inversion(_rs: &RootSystem, w: &WeylElement) -> Arrangement {
        Arrangement {
            normals: w.inversion_indices().iter().map(|&p| p as u32).collect(),
        }
    }

    /// The full Coxeter arrangement (all positive roots).
    pub fn coxeter(rs: &RootSystem) -> Arrangement {
        Arrangement {
            normals: (0..rs.num_positive() as u32).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.normals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.normals.is_empty()
    }

    pub fn normals(&self) -> &[u32] {
        &self.normals
    }

    pub fn roots(&self, rs: &RootSystem) -> Vec<Root> {
        self.normals
            .iter()
            .map(|&i| rs.positive_roots()[i as usize].clone())
            .collect()
    }

    pub fn is_subarrangement_of(&self, other: &Arrangement) -> bool {
        self.normals.iter().all(|i| other.normals.binary_search(i).is_ok())
    }

    /// Set difference of normals.
    pub fn difference(&self, other: &Arrangement) -> Arrangement {
        Arrangement {
            normals: self
                .normals
                .iter()
                .filter(|i| other.normals.binary_search(i).is_err())
                .copied()
                .collect(),
        }
    }

    /// Union of normals (disjoint or not).
    pub fn union(&self, other: &Arrangement) -> Arrangement {
        let mut normals = self.normals.clone();
        normals.extend_from_slice(&other.normals);
        normals.sort_unstable();
        normals.dedup();
        Arrangement { normals }
    }
}

/// A region: a realizable sign vector over the arrangement's normals.
/// Bit k set means the region lies on the negative side of normal k.
#[derive(Debug, Clone)]
pub struct Region {
    signs: u64,
    witnesses: Vec<u32>,
}

impl Region {
    pub fn signs(&self) -> u64 {
        self.signs
    }

    /// Number of hyperplanes separating this region from the fundamental one.
    pub fn distance(&self) -> u32 {
        self.signs.count_ones()
    }

    /// Chamber ids (indices into the ChamberComplex) realizing this region.
    pub fn witnesses(&self) -> &[u32] {
        &self.witnesses
    }
}

/// All regions of an arrangement, sorted by (distance, sign bits).
pub struct RegionSet {
    arrangement: Arrangement,
    regions: Vec<Region>,
}

impl RegionSet {
    /// Groups Weyl chambers by their sign vector: chamber u is on the
    /// positive side of normal alpha exactly when u^{-1}(alpha) > 0.
    pub fn enumerate(
        rs: &RootSystem,
        arrangement: &Arrangement,
        chambers: &ChamberComplex,
    ) -> Result<RegionSet> {
        let n = rs.num_positive();
        let mut by_signs: HashMap<u64, Vec<u32>> = HashMap::new();
        for (ci, u_inv) in chambers.inverses.iter().enumerate() {
            let mut signs = 0u64;
            for (k, &normal) in arrangement.normals.iter().enumerate() {
                if u_inv.apply(normal as u16) as usize >= n {
                    signs |= 1 << k;
                }
            }
            by_signs.entry(signs).or_default().push(ci as u32);
        }
        let mut regions: Vec<Region> = by_signs
            .into_iter()
            .map(|(signs, witnesses)| Region { signs, witnesses })
            .collect();
        regions.sort_unstable_by_key(|r| (r.distance(), r.signs));
        Ok(RegionSet {
            arrangement: arrangement.clone(),
            regions,
        })
    }

    pub fn arrangement(&self) -> &Arrangement {
        &self.arrangement
    }

    pub fn len(&self) -> usize {
        self.regions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.regions.is_empty()
    }

    pub fn regions(&self) -> &[Region] {
        &self.regions
    }

    /// R(q) = sum over regions of q^{distance from the fundamental region}.
    pub fn distance_poly(&self) -> IntPolynomial {
        let mut counts = vec![0u64; self.arrangement.len() + 1];
        for r in &self.regions {
            counts[r.distance() as usize] += 1;
        }
        IntPolynomial::new(counts)
    }

    /// The chamber poset: covers connect regions whose sign vectors differ in
    /// exactly one hyperplane, ranked by distance.
    pub fn region_poset(&self) -> Result<GradedPoset> {
        let mut covers = Vec::new();
        for (i, a) in self.regions.iter().enumerate() {
            for (k, b) in self.regions.iter().enumerate() {
                if b.distance() == a.distance() + 1 && (a.signs ^ b.signs).count_ones() == 1 {
                    covers.push((i as u32, k as u32));
                }
            }
        }
        let ranks: Vec<u32> = self.regions.iter().map(|r| r.distance()).collect();
        GradedPoset::new(ranks, covers)
    }
}

/// R_w(q) for an element, enumerating chambers internally.
pub fn distance_poly(rs: &RootSystem, w: &WeylElement) -> Result<IntPolynomial> {
    let chambers = ChamberComplex::build(rs)?;
    let arr = Arrangement::inversion(rs, w);
    Ok(RegionSet::enumerate(rs, &arr, &chambers)?.distance_poly())
}

/// The induced subposets of `arr`'s chamber poset over each region of
/// `subarr`, in `subarr` region order.
///
/// Any two regions of `arr` inside the same `subarr` region are comparable
/// only through regions in that same block (sign changes are monotone along
/// cover chains), so restricting the covers gives the induced subposet.
pub fn induced_subposets(
    rs: &RootSystem,
    arr: &Arrangement,
    subarr: &Arrangement,
    chambers: &ChamberComplex,
) -> Result<Vec<GradedPoset>> {
    if !subarr.is_subarrangement_of(arr) {
        return Err(WeylError::Domain(
            "subarrangement normals are not contained in the arrangement".into(),
        ));
    }
    let positions: Vec<u32> = subarr
        .normals()
        .iter()
        .map(|i| arr.normals().binary_search(i).expect("containment checked") as u32)
        .collect();
    let restrict = |signs: u64| -> u64 {
        positions
            .iter()
            .enumerate()
            .fold(0u64, |acc, (k, &p)| acc | (((signs >> p) & 1) << k))
    };

    let big = RegionSet::enumerate(rs, arr, chambers)?;
    let small = RegionSet::enumerate(rs, subarr, chambers)?;
    let big_poset = big.region_poset()?;

    let mut blocks: HashMap<u64, Vec<u32>> = HashMap::new();
    for (i, r) in big.regions().iter().enumerate() {
        blocks.entry(restrict(r.signs())).or_default().push(i as u32);
    }
    let mut out = Vec::with_capacity(small.len());
    for sub_region in small.regions() {
        let members = blocks.get(&sub_region.signs()).ok_or_else(|| {
            WeylError::Invariant("subarrangement region with no refinement".into())
        })?;
        let index: HashMap<u32, u32> = members
            .iter()
            .enumerate()
            .map(|(k, &m)| (m, k as u32))
            .collect();
        let min_rank = members
            .iter()
            .map(|&m| big_poset.rank(m))
            .min()
            .expect("nonempty block");
        let ranks: Vec<u32> = members.iter().map(|&m| big_poset.rank(m) - min_rank).collect();
        let mut covers = Vec::new();
        for &(lo, hi) in big_poset.covers() {
            if let (Some(&a), Some(&b)) = (index.get(&lo), index.get(&hi)) {
                covers.push((a, b));
            }
        }
        out.push(GradedPoset::new(ranks, covers)?);
    }
    Ok(out)
}

/// The induced subposet over one region of the subarrangement.
pub fn induced_subposet(
    rs: &RootSystem,
    arr: &Arrangement,
    subarr: &Arrangement,
    chambers: &ChamberComplex,
    region_index: usize,
) -> Result<GradedPoset> {
    let mut posets = induced_subposets(rs, arr, subarr, chambers)?;
    if region_index >= posets.len() {
        return Err(WeylError::Domain(format!(
            "region index {region_index} out of range"
        )));
    }
    Ok(posets.swap_remove(region_index))
}

/// Whether all induced subposets over the subarrangement's regions are
/// pairwise isomorphic.
pub fn is_uniform(
    rs: &RootSystem,
    arr: &Arrangement,
    subarr: &Arrangement,
    chambers: &ChamberComplex,
) -> Result<bool> {
    let posets = induced_subposets(rs, arr, subarr, chambers)?;
    let Some(first) = posets.first() else {
        return Ok(true);
    };
    Ok(posets.iter().skip(1).all(|p| first.is_isomorphic(p)))
}

/// Report of one special-case verification (the F4 example or the B_n lemma).
#[derive(Debug, Clone, Serialize)]
pub struct SpecialCaseReport {
    pub scope: String,
    pub ell_u: u32,
    pub ell_v: u32,
    pub p_w: IntPolynomial,
    pub p_u: IntPolynomial,
    pub quotient_poincare: IntPolynomial,
    pub r_w: IntPolynomial,
    pub r_u: IntPolynomial,
    pub uniform: bool,
    /// R_w = R_u · (1 + q + ... + q^{ℓ(v)}).
    pub r_factorizes_as_chain: bool,
    /// P_w = P_u · (1 + q + ... + q^{ℓ(v)}).
    pub p_factorizes_as_chain: bool,
    pub p_equals_r: bool,
    /// Whether the degree-3 factor identity P_w = P_u·(1+q+q^2+q^3) holds;
    /// diagnostic only, never asserted.
    pub displayed_deg3_factor_holds: Option<bool>,
}

impl SpecialCaseReport {
    pub fn all_checks_pass(&self) -> bool {
        self.uniform && self.r_factorizes_as_chain && self.p_equals_r
    }
}

fn special_case(
    rs: &RootSystem,
    scope: String,
    j: &std::collections::BTreeSet<usize>,
    v_word: &[usize],
    with_deg3_diagnostic: bool,
) -> Result<SpecialCaseReport> {
    let u = crate::weyl::longest_parabolic(rs, j)?;
    let v = WeylElement::from_word(rs, v_word)?;
    let w = u.multiply(&v);
    if w.length() != u.length() + v.length() {
        return Err(WeylError::Invariant(
            "special case decomposition is not length-additive".into(),
        ));
    }
    let quotient = crate::parabolic::Quotient::build(rs, j, crate::parabolic::QuotientSide::LeftFree)?;
    let quotient_poincare = quotient.poincare(&v)?;

    // All polynomials are inversion-invariant (duality), so compute on
    // w^{-1} = v^{-1}·u, the orientation in which u (an involution) is a
    // suffix and A_u ⊆ A_w holds outright.
    let w = w.inverse();
    let p_w = crate::bruhat::poincare(rs, &w)?;
    let p_u = crate::bruhat::poincare(rs, &u)?;
    let chambers = ChamberComplex::build(rs)?;
    let arr_w = Arrangement::inversion(rs, &w);
    let arr_u = Arrangement::inversion(rs, &u);
    if !arr_u.is_subarrangement_of(&arr_w) {
        return Err(WeylError::Invariant(
            "A_u is not contained in A_w for the special case".into(),
        ));
    }
    let r_w = RegionSet::enumerate(rs, &arr_w, &chambers)?.distance_poly();
    let r_u = RegionSet::enumerate(rs, &arr_u, &chambers)?.distance_poly();
    let uniform = is_uniform(rs, &arr_w, &arr_u, &chambers)?;

    let chain = IntPolynomial::chain(v.length() as usize);
    let report = SpecialCaseReport {
        scope,
        ell_u: u.length(),
        ell_v: v.length(),
        r_factorizes_as_chain: r_w == &r_u * &chain,
        p_factorizes_as_chain: p_w == &p_u * &chain,
        p_equals_r: p_w == r_w,
        displayed_deg3_factor_holds: with_deg3_diagnostic
            .then(|| p_w == &p_u * &IntPolynomial::chain(3)),
        p_w,
        p_u,
        quotient_poincare,
        r_w,
        r_u,
        uniform,
    };
    Ok(report)
}

/// F4 special case: u the longest element of W_{{1,2,3}}, v = s_4 s_3 s_2 s_1.
pub fn verify_special_f4() -> Result<SpecialCaseReport> {
    let rs = RootSystem::parse("F4")?;
    let j = std::collections::BTreeSet::from([1, 2, 3]);
    special_case(&rs, "F4 special case".into(), &j, &[4, 3, 2, 1], true)
}

/// B_n special case: u the longest element of W_{S∖{s_0}},
/// v = s_0 s_1 ··· s_{n-1}.
pub fn verify_special_bn(n: usize) -> Result<SpecialCaseReport> {
    if !(2..=5).contains(&n) {
        return Err(WeylError::Resource(format!(
            "verify_special_bn supports 2 <= n <= 5, got {n}"
        )));
    }
    let rs = RootSystem::new(crate::cartan::GroupType::B(n))?;
    let j: std::collections::BTreeSet<usize> = (1..n).collect();
    let v_word: Vec<usize> = (0..n).collect();
    special_case(&rs, format!("B{n} special case"), &j, &v_word, false)
}
