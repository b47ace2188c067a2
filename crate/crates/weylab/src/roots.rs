//! Root systems: positive roots generated by reflection closure, plus the
//! simple-reflection action tables everything else is built on.

use std::collections::HashMap;

use crate::cartan::{CartanDatum, GroupType};
use crate::error::{Result, WeylError};

/// A root written in the basis of simple roots (by position).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Root {
    coeffs: Vec<i32>,
}

impl Root {
    pub fn new(coeffs: Vec<i32>) -> Root {
        Root { coeffs }
    }

    pub fn coeffs(&self) -> &[i32] {
        &self.coeffs
    }

    /// Coefficient sum.
    pub fn height(&self) -> i32 {
        self.coeffs.iter().sum()
    }

    pub fn is_positive(&self) -> bool {
        self.coeffs.iter().all(|&c| c >= 0) && self.coeffs.iter().any(|&c| c > 0)
    }

    pub fn is_negative(&self) -> bool {
        self.coeffs.iter().all(|&c| c <= 0) && self.coeffs.iter().any(|&c| c < 0)
    }

    pub fn negated(&self) -> Root {
        Root::new(self.coeffs.iter().map(|&c| -c).collect())
    }
}

impl PartialOrd for Root {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Root {
    /// Height first, then lexicographic on coefficients.
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.height(), &self.coeffs).cmp(&(other.height(), &other.coeffs))
    }
}

impl std::fmt::Display for Root {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// Signed root indices: `0..n` are the positive roots in sorted order,
/// `n..2n` their negatives. `negate` flips between the halves.
#[inline]
pub(crate) fn negate(n: usize, x: u16) -> u16 {
    if (x as usize) < n {
        x + n as u16
    } else {
        x - n as u16
    }
}

/// Applies a positive-restricted signed permutation (length n) to a signed index.
#[inline]
pub(crate) fn apply_perm(perm: &[u16], x: u16) -> u16 {
    let n = perm.len();
    if (x as usize) < n {
        perm[x as usize]
    } else {
        negate(n, perm[x as usize - n])
    }
}

const CLOSURE_CAP: usize = 20_000;

/// A finite crystallographic root system.
///
/// Immutable after construction; all derived tables (simple actions and the
/// reflection permutation of every positive root) are built eagerly.
#[derive(Debug, Clone)]
pub struct RootSystem {
    datum: CartanDatum,
    positive_roots: Vec<Root>,
    index: HashMap<Root, usize>,
    /// Per simple position, the signed action table of s_i (length 2n).
    action: Vec<Box<[u16]>>,
    /// positive_roots index of each simple root, by position.
    simple_index: Vec<usize>,
    /// Per positive root, the permutation of the reflection t_alpha
    /// (positive-restricted, length n).
    reflection_perms: Vec<Box<[u16]>>,
}

impl RootSystem {
    /// Builds the root system of a named type.
    pub fn new(ty: GroupType) -> Result<RootSystem> {
        RootSystem::from_datum(ty.datum())
    }

    /// Parses a name like "B4" and builds the system.
    pub fn parse(name: &str) -> Result<RootSystem> {
        RootSystem::new(GroupType::parse(name)?)
    }

    /// Builds a root system from an explicit Cartan datum.
    pub fn from_datum(datum: CartanDatum) -> Result<RootSystem> {
        datum.validate()?;
        let rank = datum.rank();

        // Closure of the simple roots under all simple reflections, keeping
        // only positive roots.
        let mut found: HashMap<Vec<i32>, ()> = HashMap::new();
        let mut queue: Vec<Vec<i32>> = Vec::new();
        for i in 0..rank {
            let mut c = vec![0i32; rank];
            c[i] = 1;
            found.insert(c.clone(), ());
            queue.push(c);
        }
        while let Some(c) = queue.pop() {
            for i in 0..rank {
                let image = reflect_coeffs(&datum, i, &c);
                if image.iter().all(|&x| x >= 0) && !found.contains_key(&image) {
                    if found.len() >= CLOSURE_CAP {
                        return Err(WeylError::Config(format!(
                            "root closure of {} exceeded {CLOSURE_CAP} roots; not a finite type",
                            datum.name()
                        )));
                    }
                    found.insert(image.clone(), ());
                    queue.push(image);
                }
            }
        }

        let mut positive_roots: Vec<Root> = found.into_keys().map(Root::new).collect();
        positive_roots.sort();
        let n = positive_roots.len();
        if let Some(group) = datum.group() {
            if n != group.positive_root_count() {
                return Err(WeylError::Invariant(format!(
                    "{group}: closure found {n} positive roots, expected {}",
                    group.positive_root_count()
                )));
            }
        }
        if 2 * n > u16::MAX as usize {
            return Err(WeylError::Resource(format!(
                "{n} positive roots exceed the u16 index space"
            )));
        }

        let index: HashMap<Root, usize> = positive_roots
            .iter()
            .enumerate()
            .map(|(i, r)| (r.clone(), i))
            .collect();
        let simple_index: Vec<usize> = (0..rank)
            .map(|i| {
                let mut c = vec![0i32; rank];
                c[i] = 1;
                index[&Root::new(c)]
            })
            .collect();

        // Signed action tables for the simple reflections.
        let mut action: Vec<Box<[u16]>> = Vec::with_capacity(rank);
        for i in 0..rank {
            let mut table = vec![0u16; 2 * n];
            for (p, root) in positive_roots.iter().enumerate() {
                let image = Root::new(reflect_coeffs(&datum, i, root.coeffs()));
                let signed = if image.is_positive() {
                    *index.get(&image).ok_or_else(|| {
                        WeylError::Invariant("reflection image not in root system".into())
                    })? as u16
                } else {
                    let pos = image.negated();
                    (*index.get(&pos).ok_or_else(|| {
                        WeylError::Invariant("reflection image not in root system".into())
                    })? + n) as u16
                };
                table[p] = signed;
                table[p + n] = negate(n, signed);
            }
            action.push(table.into_boxed_slice());
        }

        // Reflection permutation for every positive root, by conjugation
        // outward from the simples: t_{s_j(beta)} = s_j t_beta s_j.
        let mut reflection_perms: Vec<Option<Box<[u16]>>> = vec![None; n];
        let mut bfs: Vec<usize> = Vec::with_capacity(n);
        for i in 0..rank {
            let p = simple_index[i];
            reflection_perms[p] = Some(action[i][..n].to_vec().into_boxed_slice());
            bfs.push(p);
        }
        let mut head = 0;
        while head < bfs.len() {
            let p = bfs[head];
            head += 1;
            let t_p = reflection_perms[p].clone().expect("visited");
            for i in 0..rank {
                let q = action[i][p] as usize;
                let q = if q < n { q } else { q - n };
                if reflection_perms[q].is_none() {
                    let s = &action[i];
                    let mut t_q = vec![0u16; n];
                    for (x, slot) in t_q.iter_mut().enumerate() {
                        *slot = apply_perm(&s[..n], apply_perm(&t_p, s[x]));
                    }
                    reflection_perms[q] = Some(t_q.into_boxed_slice());
                    bfs.push(q);
                }
            }
        }
        let reflection_perms: Vec<Box<[u16]>> = reflection_perms
            .into_iter()
            .map(|p| p.ok_or_else(|| WeylError::Invariant("reflection orbit incomplete".into())))
            .collect::<Result<_>>()?;

        Ok(RootSystem {
            datum,
            positive_roots,
            index,
            action,
            simple_index,
            reflection_perms,
        })
    }

    /// The sub-root-system on a set of node labels.
    pub fn restrict(&self, labels: &std::collections::BTreeSet<usize>) -> Result<RootSystem> {
        let mut positions = Vec::with_capacity(labels.len());
        for &l in labels {
            positions.push(self.label_position(l)?);
        }
        RootSystem::from_datum(self.datum.restrict(&positions))
    }

    pub fn datum(&self) -> &CartanDatum {
        &self.datum
    }

    pub fn rank(&self) -> usize {
        self.datum.rank()
    }

    /// Number of positive roots.
    pub fn num_positive(&self) -> usize {
        self.positive_roots.len()
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.positive_roots
    }

    pub fn labels(&self) -> &[usize] {
        self.datum.labels()
    }

    pub(crate) fn label_position(&self, label: usize) -> Result<usize> {
        self.datum.position_of(label).ok_or_else(|| {
            WeylError::Domain(format!("node label {label} not in {}", self.datum.name()))
        })
    }

    /// Node labels of the diagram leaves, ascending.
    pub fn leaf_labels(&self) -> Vec<usize> {
        let mut leaves: Vec<usize> = self
            .datum
            .leaf_positions()
            .into_iter()
            .map(|p| self.labels()[p])
            .collect();
        leaves.sort_unstable();
        leaves
    }

    /// Index of the simple root at a diagram position.
    pub(crate) fn simple_root_index(&self, position: usize) -> usize {
        self.simple_index[position]
    }

    /// Signed action table of the simple reflection at a position.
    pub(crate) fn action_table(&self, position: usize) -> &[u16] {
        &self.action[position]
    }

    /// Positive-restricted permutation of the reflection through a positive root.
    pub(crate) fn reflection_perm(&self, root_index: usize) -> &[u16] {
        &self.reflection_perms[root_index]
    }

    /// Index of a positive root, if present.
    pub fn index_of(&self, root: &Root) -> Option<usize> {
        self.index.get(root).copied()
    }

    /// Signed index of a root of either sign.
    pub(crate) fn signed_index_of(&self, root: &Root) -> Option<usize> {
        if root.is_positive() {
            self.index_of(root)
        } else if root.is_negative() {
            self.index_of(&root.negated()).map(|p| p + self.num_positive())
        } else {
            None
        }
    }

    /// Applies the simple reflection s_i (by node label) to a root.
    pub fn reflect_root(&self, label: usize, root: &Root) -> Result<Root> {
        let pos = self.label_position(label)?;
        if self.signed_index_of(root).is_none() {
            return Err(WeylError::Domain(format!(
                "{root} is not a root of {}",
                self.datum.name()
            )));
        }
        Ok(Root::new(reflect_coeffs(&self.datum, pos, root.coeffs())))
    }
}

/// s_i(beta) in coefficients: only the i-th coordinate moves, by the pairing
/// with the i-th simple coroot.
fn reflect_coeffs(datum: &CartanDatum, i: usize, coeffs: &[i32]) -> Vec<i32> {
    let pairing: i32 = coeffs
        .iter()
        .zip(datum.cartan()[i].iter())
        .map(|(&c, &a)| c * a)
        .sum();
    let mut out = coeffs.to_vec();
    out[i] -= pairing;
    out
}
