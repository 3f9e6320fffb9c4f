//! Streaming enumeration of every simplicial complex on `n <= 6` labelled vertices.
//!
//! A complex is an antichain of subsets of `{1..=n}`. Subsets are laid out in
//! decreasing canonical order (largest cardinality first), one bit per position of
//! a `u64`, which is why `n` tops out at 6. Antichains are then grown in position
//! order: a candidate is admissible unless it is a subset of something already
//! chosen, and no later candidate can be a strict superset of an earlier one.

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

pub const MAX_EXHAUSTIVE_VERTICES: usize = 6;

/// Position tables shared by every enumerator for one `n`.
#[derive(Debug, Clone)]
pub(crate) struct Layout {
    n: usize,
    order: Vec<VertexSet>,
    /// `down[p]` has bit `q` set iff `order[q] ⊆ order[p]`.
    down: Vec<u64>,
    all: u64,
}

impl Layout {
    pub(crate) fn new(n: usize) -> Result<Self> {
        if !(1..=MAX_EXHAUSTIVE_VERTICES).contains(&n) {
            return Err(Error::HarnessConfig(format!(
                "exhaustive enumeration needs 1 <= n <= {MAX_EXHAUSTIVE_VERTICES}, got {n}"
            )));
        }
        let mut order: Vec<VertexSet> = VertexSet::full(n).subsets().collect();
        order.sort_unstable_by(|a, b| b.cmp(a));
        let down = order
            .iter()
            .map(|s| {
                order
                    .iter()
                    .enumerate()
                    .filter(|(_, t)| t.is_subset(*s))
                    .fold(0u64, |acc, (q, _)| acc | 1 << q)
            })
            .collect();
        let len = order.len();
        let all = if len == 64 {
            u64::MAX
        } else {
            (1u64 << len) - 1
        };
        Ok(Layout {
            n,
            order,
            down,
            all,
        })
    }

    fn candidates_after(&self, position: Option<usize>, forbidden: u64) -> u64 {
        let from = position.map_or(0, |p| p + 1);
        let above = u64::MAX.checked_shl(from as u32).unwrap_or(0);
        self.all & above & !forbidden
    }

    fn complex(&self, chosen: &[usize]) -> SimplicialComplex {
        // positions increase along `chosen`, i.e. canonical order decreases
        let facets = chosen.iter().rev().map(|&p| self.order[p]).collect();
        SimplicialComplex::from_antichain(self.n, facets)
    }

    fn forbidden(&self, chosen: &[usize]) -> u64 {
        chosen.iter().fold(0, |acc, &p| acc | self.down[p])
    }

    /// Prefixes covering the enumeration tree: nodes at depth <= 1 on their own,
    /// and whole subtrees rooted at depth 2, in depth-first order.
    pub(crate) fn shards(&self) -> Vec<Shard> {
        let mut out = vec![Shard {
            prefix: vec![],
            subtree: false,
        }];
        let mut first = self.candidates_after(None, 0);
        while first != 0 {
            let p = first.trailing_zeros() as usize;
            first &= first - 1;
            out.push(Shard {
                prefix: vec![p],
                subtree: false,
            });
            let mut second = self.candidates_after(Some(p), self.down[p]);
            while second != 0 {
                let q = second.trailing_zeros() as usize;
                second &= second - 1;
                out.push(Shard {
                    prefix: vec![p, q],
                    subtree: true,
                });
            }
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Shard {
    pub prefix: Vec<usize>,
    pub subtree: bool,
}

#[derive(Debug, Clone, Copy)]
struct Frame {
    candidates: u64,
    forbidden: u64,
}

/// Depth-first iterator over the antichains extending a fixed prefix.
#[derive(Debug, Clone)]
pub struct Complexes {
    layout: Layout,
    chosen: Vec<usize>,
    stack: Vec<Frame>,
    base: usize,
    emit_prefix: bool,
}

impl Complexes {
    fn from_shard(layout: Layout, shard: &Shard) -> Self {
        let forbidden = layout.forbidden(&shard.prefix);
        let stack = if shard.subtree {
            vec![Frame {
                candidates: layout.candidates_after(shard.prefix.last().copied(), forbidden),
                forbidden,
            }]
        } else {
            vec![]
        };
        Complexes {
            base: shard.prefix.len(),
            chosen: shard.prefix.clone(),
            layout,
            stack,
            emit_prefix: true,
        }
    }

    pub(crate) fn shard(layout: &Layout, shard: &Shard) -> Self {
        Self::from_shard(layout.clone(), shard)
    }
}

impl Iterator for Complexes {
    type Item = SimplicialComplex;

    fn next(&mut self) -> Option<SimplicialComplex> {
        if self.emit_prefix {
            self.emit_prefix = false;
            return Some(self.layout.complex(&self.chosen));
        }
        loop {
            let top = self.stack.last_mut()?;
            if top.candidates == 0 {
                self.stack.pop();
                if self.chosen.len() > self.base {
                    self.chosen.pop();
                }
                continue;
            }
            let p = top.candidates.trailing_zeros() as usize;
            top.candidates &= top.candidates - 1;
            let forbidden = top.forbidden | self.layout.down[p];
            self.chosen.push(p);
            self.stack.push(Frame {
                candidates: self.layout.candidates_after(Some(p), forbidden),
                forbidden,
            });
            return Some(self.layout.complex(&self.chosen));
        }
    }
}

/// Every simplicial complex on `{1..=n}` exactly once, including the void and
/// irrelevant complexes, in a fixed order.
pub fn enumerate_complexes(n: usize) -> Result<Complexes> {
    let layout = Layout::new(n)?;
    Ok(Complexes::from_shard(
        layout,
        &Shard {
            prefix: vec![],
            subtree: true,
        },
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    /// Antichains by checking every family of subsets; feasible for n <= 4.
    fn brute_force_count(n: usize) -> usize {
        let subsets: Vec<VertexSet> = VertexSet::full(n).subsets().collect();
        let m = subsets.len();
        (0u64..1 << m)
            .filter(|family| {
                let members: Vec<VertexSet> = (0..m)
                    .filter(|i| family >> i & 1 == 1)
                    .map(|i| subsets[i])
                    .collect();
                members.iter().enumerate().all(|(i, a)| {
                    members
                        .iter()
                        .skip(i + 1)
                        .all(|b| !a.is_subset(*b) && !b.is_subset(*a))
                })
            })
            .count()
    }

    #[test]
    fn small_counts_match_brute_force() {
        for n in 1..=4 {
            let listed: Vec<SimplicialComplex> = enumerate_complexes(n).unwrap().collect();
            assert_eq!(listed.len(), brute_force_count(n), "n = {n}");
            let distinct: HashSet<&SimplicialComplex> = listed.iter().collect();
            assert_eq!(distinct.len(), listed.len());
        }
    }

    #[test]
    fn one_vertex() {
        let listed: Vec<SimplicialComplex> = enumerate_complexes(1).unwrap().collect();
        assert_eq!(listed.len(), 3);
        assert!(listed.iter().any(|c| c.is_void()));
        assert!(listed.iter().any(|c| c.is_irrelevant()));
        assert!(listed.iter().any(|c| c.is_full_simplex()));
    }

    #[test]
    fn outputs_are_normalized() {
        for c in enumerate_complexes(4).unwrap() {
            let again = SimplicialComplex::normalize(c.facets().iter().copied(), 4).unwrap();
            assert_eq!(again, c);
        }
    }

    #[test]
    fn shards_partition_the_enumeration() {
        for n in 1..=5 {
            let layout = Layout::new(n).unwrap();
            let whole: Vec<SimplicialComplex> = enumerate_complexes(n).unwrap().collect();
            let pieces: Vec<SimplicialComplex> = layout
                .shards()
                .iter()
                .flat_map(|s| Complexes::shard(&layout, s))
                .collect();
            assert_eq!(whole, pieces, "n = {n}");
        }
    }

    #[test]
    fn range_is_checked() {
        assert!(enumerate_complexes(0).is_err());
        assert!(enumerate_complexes(7).is_err());
    }
}
