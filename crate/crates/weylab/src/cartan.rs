//! Cartan data for the finite crystallographic types A, B, D, E, F, G.
//!
//! Node labels follow the usual diagram conventions: A_n uses s_1..s_n,
//! B_n uses s_0..s_{n-1} with the double bond between s_0 and s_1 (α_0 short),
//! D_n uses s_0, s_1 as the fork attached to s_2, the E types use Bourbaki
//! labels, F_4 has the double bond between s_2 and s_3, G_2 uses s_1, s_2.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Result, WeylError};

/// A named finite Weyl group type, e.g. `A(3)` or `F4`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GroupType {
    A(usize),
    B(usize),
    D(usize),
    E(usize),
    F4,
    G2,
}

impl GroupType {
    /// Parses strings like "A3", "b4", "E8".
    pub fn parse(s: &str) -> Result<GroupType> {
        let s = s.trim();
        let mut chars = s.chars();
        let letter = chars
            .next()
            .ok_or_else(|| WeylError::Config("empty group name".into()))?;
        let rank: usize = chars
            .as_str()
            .parse()
            .map_err(|_| WeylError::Config(format!("cannot parse rank in group name '{s}'")))?;
        let ty = match letter.to_ascii_uppercase() {
            'A' => GroupType::A(rank),
            'B' => GroupType::B(rank),
            'C' => {
                return Err(WeylError::Config(format!(
                    "type C{rank} has the same Weyl group as type B{rank}; use B{rank}"
                )))
            }
            'D' => GroupType::D(rank),
            'E' => GroupType::E(rank),
            'F' => GroupType::F4,
            'G' => GroupType::G2,
            c => return Err(WeylError::Config(format!("unknown type letter '{c}'"))),
        };
        match ty {
            GroupType::F4 if rank != 4 => {
                return Err(WeylError::Config("type F requires rank 4".into()))
            }
            GroupType::G2 if rank != 2 => {
                return Err(WeylError::Config("type G requires rank 2".into()))
            }
            _ => {}
        }
        ty.validate()?;
        Ok(ty)
    }

    pub fn rank(&self) -> usize {
        match *self {
            GroupType::A(n) | GroupType::B(n) | GroupType::D(n) | GroupType::E(n) => n,
            GroupType::F4 => 4,
            GroupType::G2 => 2,
        }
    }

    fn validate(&self) -> Result<()> {
        let ok = match *self {
            GroupType::A(n) => n >= 1,
            GroupType::B(n) => n >= 2,
            GroupType::D(n) => n >= 4,
            GroupType::E(n) => (6..=8).contains(&n),
            GroupType::F4 | GroupType::G2 => true,
        };
        if ok {
            Ok(())
        } else {
            Err(WeylError::Config(format!(
                "unsupported rank for {self}: A needs rank >= 1, B rank >= 2, D rank >= 4, E rank in 6..=8"
            )))
        }
    }

    /// Number of positive roots.
    pub fn positive_root_count(&self) -> usize {
        match *self {
            GroupType::A(n) => n * (n + 1) / 2,
            GroupType::B(n) => n * n,
            GroupType::D(n) => n * (n - 1),
            GroupType::E(6) => 36,
            GroupType::E(7) => 63,
            GroupType::E(8) => 120,
            GroupType::E(_) => unreachable!(),
            GroupType::F4 => 24,
            GroupType::G2 => 6,
        }
    }

    /// Order of the Weyl group.
    pub fn order(&self) -> u128 {
        fn fact(n: usize) -> u128 {
            (1..=n as u128).product()
        }
        match *self {
            GroupType::A(n) => fact(n + 1),
            GroupType::B(n) => (1u128 << n) * fact(n),
            GroupType::D(n) => (1u128 << (n - 1)) * fact(n),
            GroupType::E(6) => 51_840,
            GroupType::E(7) => 2_903_040,
            GroupType::E(8) => 696_729_600,
            GroupType::E(_) => unreachable!(),
            GroupType::F4 => 1152,
            GroupType::G2 => 12,
        }
    }

    /// The Cartan datum with the diagram's node labels.
    pub fn datum(&self) -> CartanDatum {
        self.validate().expect("validated at construction");
        let n = self.rank();
        let labels: Vec<usize> = match *self {
            GroupType::B(_) | GroupType::D(_) => (0..n).collect(),
            GroupType::E(_) => (1..=n).collect(),
            _ => (1..=n).collect(),
        };
        // cartan[i][j] = <alpha_j, alpha_i^vee>, indexed by position.
        let mut cartan = vec![vec![0i32; n]; n];
        for (i, row) in cartan.iter_mut().enumerate() {
            row[i] = 2;
        }
        let mut bond = |i: usize, j: usize, cij: i32, cji: i32| {
            cartan[i][j] = cij;
            cartan[j][i] = cji;
        };
        match *self {
            GroupType::A(_) => {
                for i in 0..n - 1 {
                    bond(i, i + 1, -1, -1);
                }
            }
            GroupType::B(_) => {
                // alpha_0 short: <alpha_1, alpha_0^vee> = -2.
                bond(0, 1, -2, -1);
                for i in 1..n - 1 {
                    bond(i, i + 1, -1, -1);
                }
            }
            GroupType::D(_) => {
                bond(0, 2, -1, -1);
                bond(1, 2, -1, -1);
                for i in 2..n - 1 {
                    bond(i, i + 1, -1, -1);
                }
            }
            GroupType::E(_) => {
                // Positions 0..n-1 carry labels 1..n; Bourbaki: node 2 hangs off node 4.
                let pos = |label: usize| label - 1;
                let chain: &[usize] = match n {
                    6 => &[1, 3, 4, 5, 6],
                    7 => &[1, 3, 4, 5, 6, 7],
                    _ => &[1, 3, 4, 5, 6, 7, 8],
                };
                for w in chain.windows(2) {
                    bond(pos(w[0]), pos(w[1]), -1, -1);
                }
                bond(pos(2), pos(4), -1, -1);
            }
            GroupType::F4 => {
                bond(0, 1, -1, -1);
                // Double bond between s_2 and s_3: <alpha_3, alpha_2^vee> = -2.
                bond(1, 2, -2, -1);
                bond(2, 3, -1, -1);
            }
            GroupType::G2 => {
                // <alpha_1, alpha_2^vee> = -3.
                bond(1, 0, -3, -1);
            }
        }
        CartanDatum {
            group: Some(*self),
            name: self.to_string(),
            cartan,
            labels,
        }
    }
}

impl fmt::Display for GroupType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            GroupType::A(n) => write!(f, "A{n}"),
            GroupType::B(n) => write!(f, "B{n}"),
            GroupType::D(n) => write!(f, "D{n}"),
            GroupType::E(n) => write!(f, "E{n}"),
            GroupType::F4 => write!(f, "F4"),
            GroupType::G2 => write!(f, "G2"),
        }
    }
}

/// A (generalized) Cartan matrix together with diagram node labels.
///
/// `cartan[i][j]` is the pairing of the j-th simple root with the i-th simple
/// coroot, so the reflection action reads s_i(α_j) = α_j − cartan[i][j]·α_i.
/// Rows/columns are indexed by position; `labels[i]` is the diagram name of
/// position `i`. Restrictions to sub-diagrams keep the parent labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CartanDatum {
    pub(crate) group: Option<GroupType>,
    pub(crate) name: String,
    pub(crate) cartan: Vec<Vec<i32>>,
    pub(crate) labels: Vec<usize>,
}

impl CartanDatum {
    pub fn rank(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn cartan(&self) -> &[Vec<i32>] {
        &self.cartan
    }

    /// The named type this datum was built from, if any.
    pub fn group(&self) -> Option<GroupType> {
        self.group
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub(crate) fn position_of(&self, label: usize) -> Option<usize> {
        self.labels.iter().position(|&l| l == label)
    }

    /// Checks the Cartan matrix shape: 2 on the diagonal, off-diagonal entries
    /// in {0, -1, -2, -3}, with zeros symmetric.
    pub(crate) fn validate(&self) -> Result<()> {
        let n = self.rank();
        if self.cartan.len() != n || self.cartan.iter().any(|row| row.len() != n) {
            return Err(WeylError::Config("Cartan matrix shape mismatch".into()));
        }
        let mut seen = BTreeSet::new();
        for &l in &self.labels {
            if !seen.insert(l) {
                return Err(WeylError::Config(format!("duplicate node label {l}")));
            }
        }
        for i in 0..n {
            if self.cartan[i][i] != 2 {
                return Err(WeylError::Config("Cartan diagonal entry != 2".into()));
            }
            for j in 0..n {
                if i == j {
                    continue;
                }
                let a = self.cartan[i][j];
                if !(-3..=0).contains(&a) {
                    return Err(WeylError::Config(format!(
                        "Cartan off-diagonal entry {a} outside {{0,-1,-2,-3}}"
                    )));
                }
                if (a == 0) != (self.cartan[j][i] == 0) {
                    return Err(WeylError::Config("Cartan zero pattern not symmetric".into()));
                }
            }
        }
        Ok(())
    }

    /// Diagram adjacency by position.
    pub(crate) fn adjacent(&self, i: usize, j: usize) -> bool {
        i != j && self.cartan[i][j] != 0
    }

    /// Positions of diagram leaves (degree <= 1, so a rank-1 diagram's node counts).
    pub(crate) fn leaf_positions(&self) -> Vec<usize> {
        let n = self.rank();
        (0..n)
            .filter(|&i| (0..n).filter(|&j| self.adjacent(i, j)).count() <= 1)
            .collect()
    }

    /// Whether a set of positions induces a connected sub-diagram.
    pub(crate) fn is_connected(&self, positions: &BTreeSet<usize>) -> bool {
        let Some(&start) = positions.iter().next() else {
            return true;
        };
        let mut seen = BTreeSet::new();
        let mut stack = vec![start];
        seen.insert(start);
        while let Some(i) = stack.pop() {
            for &j in positions {
                if !seen.contains(&j) && self.adjacent(i, j) {
                    seen.insert(j);
                    stack.push(j);
                }
            }
        }
        seen.len() == positions.len()
    }

    /// Restricts to the sub-diagram on the given positions, keeping labels.
    pub(crate) fn restrict(&self, positions: &[usize]) -> CartanDatum {
        let labels: Vec<usize> = positions.iter().map(|&p| self.labels[p]).collect();
        let cartan: Vec<Vec<i32>> = positions
            .iter()
            .map(|&p| positions.iter().map(|&q| self.cartan[p][q]).collect())
            .collect();
        let label_list = labels
            .iter()
            .map(|l| l.to_string())
            .collect::<Vec<_>>()
            .join(",");
        CartanDatum {
            group: None,
            name: format!("{}[{}]", self.name, label_list),
            cartan,
            labels,
        }
    }

    /// Order of the Weyl group of this (possibly disconnected) diagram,
    /// classified component by component from the Coxeter matrix.
    pub fn weyl_order(&self) -> Result<u128> {
        let n = self.rank();
        let mut seen = vec![false; n];
        let mut order: u128 = 1;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut comp = vec![start];
            seen[start] = true;
            let mut idx = 0;
            while idx < comp.len() {
                let i = comp[idx];
                idx += 1;
                for j in 0..n {
                    if !seen[j] && self.adjacent(i, j) {
                        seen[j] = true;
                        comp.push(j);
                    }
                }
            }
            order = order
                .checked_mul(self.component_order(&comp)?)
                .ok_or_else(|| WeylError::Resource("Weyl group order overflows u128".into()))?;
        }
        Ok(order)
    }

    fn component_order(&self, comp: &[usize]) -> Result<u128> {
        let fact = |n: usize| -> u128 { (1..=n as u128).product() };
        let k = comp.len();
        let bond = |i: usize, j: usize| self.cartan[comp[i]][comp[j]] * self.cartan[comp[j]][comp[i]];
        // Coxeter edge weight m(i,j): bond product 1 -> 3, 2 -> 4, 3 -> 6.
        let mut edges = Vec::new();
        for i in 0..k {
            for j in i + 1..k {
                let b = bond(i, j);
                if b != 0 {
                    edges.push((i, j, b));
                }
            }
        }
        let degree = |i: usize| edges.iter().filter(|&&(a, b, _)| a == i || b == i).count();
        let unsupported =
            || WeylError::Config(format!("diagram component not of finite type in {}", self.name));
        if k == 1 {
            return Ok(2);
        }
        if edges.len() != k - 1 {
            return Err(unsupported()); // finite diagrams are trees
        }
        let max_deg = (0..k).map(degree).max().unwrap();
        let multi: Vec<&(usize, usize, i32)> = edges.iter().filter(|e| e.2 > 1).collect();
        match (max_deg, multi.len()) {
            (_, 0) if max_deg <= 2 => Ok(fact(k + 1)), // A_k
            (3, 0) => {
                // One trivalent node: D or E by leg lengths.
                let center = (0..k).find(|&i| degree(i) == 3).unwrap();
                let mut legs: Vec<usize> = Vec::new();
                for (mut prev, mut cur) in edges
                    .iter()
                    .filter(|&&(a, b, _)| a == center || b == center)
                    .map(|&(a, b, _)| (center, if a == center { b } else { a }))
                {
                    let mut len = 1;
                    loop {
                        let next = edges
                            .iter()
                            .filter(|&&(a, b, _)| (a == cur) != (b == cur))
                            .map(|&(a, b, _)| if a == cur { b } else { a })
                            .find(|&x| x != prev);
                        match next {
                            Some(x) => {
                                prev = cur;
                                cur = x;
                                len += 1;
                            }
                            None => break,
                        }
                    }
                    legs.push(len);
                }
                legs.sort_unstable();
                match legs.as_slice() {
                    [1, 1, _] => Ok((1u128 << (k - 1)) * fact(k)), // D_k
                    [1, 2, 2] => Ok(51_840),                       // E6
                    [1, 2, 3] => Ok(2_903_040),                    // E7
                    [1, 2, 4] => Ok(696_729_600),                  // E8
                    _ => Err(unsupported()),
                }
            }
            (_, 1) if max_deg <= 2 => {
                let &&(a, b, w) = multi.first().unwrap();
                match w {
                    2 => {
                        // Path with one double bond: B_k, or F4 when interior.
                        let interior = degree(a) == 2 && degree(b) == 2;
                        if interior {
                            if k == 4 {
                                Ok(1152)
                            } else {
                                Err(unsupported())
                            }
                        } else {
                            Ok((1u128 << k) * fact(k)) // B_k
                        }
                    }
                    3 if k == 2 => Ok(12), // G2
                    _ => Err(unsupported()),
                }
            }
            _ => Err(unsupported()),
        }
    }
}
