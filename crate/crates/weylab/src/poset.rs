//! Graded posets given by ranks and cover relations, with a backtracking
//! isomorphism test shared by the lattice and arrangement modules.

use std::collections::BTreeMap;

use crate::error::{Result, WeylError};
use crate::poly::IntPolynomial;

/// A finite graded poset: elements are opaque ids `0..len`, every cover pair
/// raises rank by exactly one.
#[derive(Debug, Clone)]
pub struct GradedPoset {
    ranks: Vec<u32>,
    covers: Vec<(u32, u32)>,
    up: Vec<Vec<u32>>,
    down: Vec<Vec<u32>>,
}

impl GradedPoset {
    pub fn new(ranks: Vec<u32>, mut covers: Vec<(u32, u32)>) -> Result<GradedPoset> {
        let n = ranks.len();
        covers.sort_unstable();
        covers.dedup();
        let mut up = vec![Vec::new(); n];
        let mut down = vec![Vec::new(); n];
        for &(lo, hi) in &covers {
            if lo as usize >= n || hi as usize >= n {
                return Err(WeylError::Domain("cover pair out of range".into()));
            }
            if ranks[hi as usize] != ranks[lo as usize] + 1 {
                return Err(WeylError::Invariant(format!(
                    "cover ({lo},{hi}) does not raise rank by one"
                )));
            }
            up[lo as usize].push(hi);
            down[hi as usize].push(lo);
        }
        Ok(GradedPoset {
            ranks,
            covers,
            up,
            down,
        })
    }

    pub fn len(&self) -> usize {
        self.ranks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ranks.is_empty()
    }

    pub fn rank(&self, id: u32) -> u32 {
        self.ranks[id as usize]
    }

    pub fn ranks(&self) -> &[u32] {
        &self.ranks
    }

    pub fn covers(&self) -> &[(u32, u32)] {
        &self.covers
    }

    pub fn upper_covers(&self, id: u32) -> &[u32] {
        &self.up[id as usize]
    }

    pub fn lower_covers(&self, id: u32) -> &[u32] {
        &self.down[id as usize]
    }

    pub fn max_rank(&self) -> u32 {
        self.ranks.iter().copied().max().unwrap_or(0)
    }

    /// Number of elements at each rank, from 0 to the top.
    pub fn rank_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0usize; self.max_rank() as usize + 1];
        for &r in &self.ranks {
            sizes[r as usize] += 1;
        }
        sizes
    }

    /// The rank generating function.
    pub fn rank_poly(&self) -> IntPolynomial {
        IntPolynomial::new(self.rank_sizes().iter().map(|&c| c as u64).collect())
    }

    /// Ids reachable downward from `id` through covers, including `id`.
    pub fn down_set(&self, id: u32) -> Vec<u32> {
        let mut seen = vec![false; self.len()];
        let mut stack = vec![id];
        seen[id as usize] = true;
        let mut out = Vec::new();
        while let Some(x) = stack.pop() {
            out.push(x);
            for &y in &self.down[x as usize] {
                if !seen[y as usize] {
                    seen[y as usize] = true;
                    stack.push(y);
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Rank generating function of the lower interval below `id`.
    pub fn lower_interval_poly(&self, id: u32) -> IntPolynomial {
        let mut counts = vec![0u64; self.rank(id) as usize + 1];
        for x in self.down_set(id) {
            counts[self.rank(x) as usize] += 1;
        }
        IntPolynomial::new(counts)
    }

    /// Whether the poset is a chain.
    pub fn is_chain(&self) -> bool {
        self.rank_sizes().iter().all(|&s| s == 1) && self.covers.len() + 1 == self.len()
    }

    /// Full order relation as a boolean matrix (reachability through covers).
    pub fn relation(&self) -> Vec<Vec<bool>> {
        let n = self.len();
        let mut leq = vec![vec![false; n]; n];
        let mut order: Vec<u32> = (0..n as u32).collect();
        order.sort_unstable_by_key(|&i| self.ranks[i as usize]);
        for &v in &order {
            leq[v as usize][v as usize] = true;
            let lower = self.down[v as usize].clone();
            for u in lower {
                for x in 0..n {
                    if leq[x][u as usize] {
                        leq[x][v as usize] = true;
                    }
                }
            }
        }
        leq
    }

    /// Graded poset isomorphism by color refinement plus backtracking.
    pub fn is_isomorphic(&self, other: &GradedPoset) -> bool {
        if self.len() != other.len()
            || self.covers.len() != other.covers.len()
            || self.rank_sizes() != other.rank_sizes()
        {
            return false;
        }
        let n = self.len();
        let mut initial_palette: BTreeMap<(u32, usize, usize), u32> = BTreeMap::new();
        let mut ca = self.initial_colors(&mut initial_palette);
        let mut cb = other.initial_colors(&mut initial_palette);
        for _ in 0..n {
            let mut palette: BTreeMap<(u32, Vec<u32>, Vec<u32>), u32> = BTreeMap::new();
            let refined_a = refine(self, &ca, &mut palette);
            let refined_b = refine(other, &cb, &mut palette);
            let stable = refined_a == ca && refined_b == cb;
            ca = refined_a;
            cb = refined_b;
            if stable {
                break;
            }
        }
        let mut hist_a = ca.clone();
        let mut hist_b = cb.clone();
        hist_a.sort_unstable();
        hist_b.sort_unstable();
        if hist_a != hist_b {
            return false;
        }

        // Assign rarest colors first.
        let mut color_count: BTreeMap<u32, usize> = BTreeMap::new();
        for &c in &ca {
            *color_count.entry(c).or_default() += 1;
        }
        let mut order: Vec<u32> = (0..n as u32).collect();
        order.sort_unstable_by_key(|&v| (color_count[&ca[v as usize]], v));
        let mut mapping: Vec<Option<u32>> = vec![None; n];
        let mut used = vec![false; n];
        self.backtrack(other, &ca, &cb, &order, 0, &mut mapping, &mut used)
    }

    fn initial_colors(&self, palette: &mut BTreeMap<(u32, usize, usize), u32>) -> Vec<u32> {
        self.ranks
            .iter()
            .enumerate()
            .map(|(v, &r)| {
                let key = (r, self.up[v].len(), self.down[v].len());
                let next = palette.len() as u32;
                *palette.entry(key).or_insert(next)
            })
            .collect()
    }

    fn backtrack(
        &self,
        other: &GradedPoset,
        ca: &[u32],
        cb: &[u32],
        order: &[u32],
        depth: usize,
        mapping: &mut Vec<Option<u32>>,
        used: &mut Vec<bool>,
    ) -> bool {
        if depth == order.len() {
            return true;
        }
        let v = order[depth] as usize;
        'candidate: for w in 0..other.len() {
            if used[w] || cb[w] != ca[v] {
                continue;
            }
            // Covers between v and every already-mapped node must correspond
            // exactly, in both directions.
            for (u, mu) in mapping.iter().enumerate() {
                if let Some(mu) = mu {
                    let (mu, wv) = (*mu as usize, v as u32);
                    if self.up[u].contains(&wv) != other.up[mu].contains(&(w as u32))
                        || self.up[v].contains(&(u as u32)) != other.up[w].contains(&(mu as u32))
                    {
                        continue 'candidate;
                    }
                }
            }
            mapping[v] = Some(w as u32);
            used[w] = true;
            if self.backtrack(other, ca, cb, order, depth + 1, mapping, used) {
                return true;
            }
            mapping[v] = None;
            used[w] = false;
        }
        false
    }

    /// Hasse diagram in DOT format; node ids follow element order.
    pub fn to_dot(&self, labels: &[String]) -> String {
        let mut out = String::from("digraph poset {\n  rankdir=BT;\n  node [shape=plaintext];\n");
        for (i, label) in labels.iter().enumerate() {
            out.push_str(&format!("  n{i} [label=\"{}\"];\n", label.replace('"', "\\\"")));
        }
        for &(lo, hi) in &self.covers {
            out.push_str(&format!("  n{lo} -> n{hi};\n"));
        }
        out.push_str("}\n");
        out
    }

    /// Elements, ranks and covers as a JSON value.
    pub fn to_json(&self, labels: &[String]) -> serde_json::Value {
        serde_json::json!({
            "elements": labels,
            "ranks": self.ranks,
            "covers": self.covers.iter().map(|&(a, b)| vec![a, b]).collect::<Vec<_>>(),
        })
    }
}

fn refine(
    poset: &GradedPoset,
    colors: &[u32],
    palette: &mut BTreeMap<(u32, Vec<u32>, Vec<u32>), u32>,
) -> Vec<u32> {
    (0..poset.len())
        .map(|v| {
            let mut ups: Vec<u32> = poset.up[v].iter().map(|&u| colors[u as usize]).collect();
            let mut downs: Vec<u32> = poset.down[v].iter().map(|&u| colors[u as usize]).collect();
            ups.sort_unstable();
            downs.sort_unstable();
            let key = (colors[v], ups, downs);
            let next = palette.len() as u32;
            *palette.entry(key).or_insert(next)
        })
        .collect()
}
