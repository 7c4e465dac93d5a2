//! Finite truncations of Schreier graphs on `G/F`.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::ops::RangeInclusive;

use indexmap::IndexSet;
use rustc_hash::FxBuildHasher;
use serde::{Deserialize, Serialize};

use crate::coset::Coset;
use crate::error::{Error, Result};
use crate::semidirect::GElement;

/// Default upper bound on the number of nodes in a ball.
pub const DEFAULT_NODE_CAP: usize = 2_000_000;

const OUTSIDE: u32 = u32::MAX;

/// Breadth-first ball of a given radius around `base` in the Schreier graph
/// of a generator sequence.
///
/// Nodes are numbered in discovery order, generators scanned in the order
/// given, so node 0 is `base` and the nodes within distance `d` form a prefix
/// of the node list. Every (node, generator) pair has either an in-ball
/// edge or a boundary mark.
#[derive(Debug, Clone)]
pub struct OrbitBall {
    base: Coset,
    generators: Vec<GElement>,
    radius: usize,
    nodes: IndexSet<Coset, FxBuildHasher>,
    // shell_ends[d] = number of nodes at distance ≤ d.
    shell_ends: Vec<usize>,
    // targets[node * gens + gen], OUTSIDE for boundary marks.
    targets: Vec<u32>,
}

/// An in-ball edge `src --gen--> dst`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Edge {
    pub src: usize,
    pub gen: usize,
    pub dst: usize,
}

impl OrbitBall {
    /// Builds the ball of `radius` around `base`.
    pub fn build(base: Coset, generators: &[GElement], radius: usize, cap: usize) -> Result<OrbitBall> {
        let cap = cap.min(OUTSIDE as usize - 1);
        let mut nodes: IndexSet<Coset, FxBuildHasher> = IndexSet::default();
        nodes.insert(base.clone());
        let mut shell_ends = vec![1];
        let mut shell_start = 0;
        for depth in 1..=radius {
            let shell_end = nodes.len();
            for i in shell_start..shell_end {
                for g in generators {
                    let image = nodes[i].act(g);
                    nodes.insert(image);
                }
                if nodes.len() > cap {
                    return Err(Error::Resource {
                        what: "orbit ball",
                        count: nodes.len(),
                        cap,
                        radius: Some(depth),
                    });
                }
            }
            shell_start = shell_end;
            shell_ends.push(nodes.len());
            if shell_start == nodes.len() {
                // Orbit exhausted; remaining shells are empty.
                shell_ends.resize(radius + 1, nodes.len());
                break;
            }
        }
        let k = generators.len();
        let mut targets = vec![OUTSIDE; nodes.len() * k];
        for i in 0..nodes.len() {
            for (j, g) in generators.iter().enumerate() {
                if let Some(dst) = nodes.get_index_of(&nodes[i].act(g)) {
                    targets[i * k + j] = dst as u32;
                }
            }
        }
        Ok(OrbitBall {
            base,
            generators: generators.to_vec(),
            radius,
            nodes,
            shell_ends,
            targets,
        })
    }

    pub fn base(&self) -> &Coset {
        &self.base
    }

    pub fn generators(&self) -> &[GElement] {
        &self.generators
    }

    pub fn radius(&self) -> usize {
        self.radius
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn node(&self, idx: usize) -> &Coset {
        &self.nodes[idx]
    }

    pub fn nodes(&self) -> impl Iterator<Item = &Coset> + '_ {
        self.nodes.iter()
    }

    pub fn index_of(&self, c: &Coset) -> Option<usize> {
        self.nodes.get_index_of(c)
    }

    /// Number of nodes within distance `r ≤ radius` of the base.
    pub fn len_within(&self, r: usize) -> usize {
        self.shell_ends[r.min(self.radius)]
    }

    /// Target of generator `gen` applied to node `src`, if it stays within
    /// the first `prefix` nodes.
    pub(crate) fn target_within(&self, src: usize, gen: usize, prefix: usize) -> Option<usize> {
        let t = self.targets[src * self.generators.len() + gen];
        (t != OUTSIDE && (t as usize) < prefix).then_some(t as usize)
    }

    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        let k = self.generators.len();
        self.targets
            .iter()
            .enumerate()
            .filter(|(_, &t)| t != OUTSIDE)
            .map(move |(slot, &t)| Edge {
                src: slot / k,
                gen: slot % k,
                dst: t as usize,
            })
    }

    /// `(src, gen)` pairs whose image leaves the ball.
    pub fn boundary(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let k = self.generators.len();
        self.targets
            .iter()
            .enumerate()
            .filter(|(_, &t)| t == OUTSIDE)
            .map(move |(slot, _)| (slot / k, slot % k))
    }

    /// The ball of a smaller radius around the same base.
    pub fn truncated(&self, r: usize) -> OrbitBall {
        let r = r.min(self.radius);
        let n = self.len_within(r);
        let k = self.generators.len();
        let targets = self.targets[..n * k]
            .iter()
            .map(|&t| if t != OUTSIDE && (t as usize) < n { t } else { OUTSIDE })
            .collect();
        OrbitBall {
            base: self.base.clone(),
            generators: self.generators.clone(),
            radius: r,
            nodes: self.nodes.iter().take(n).cloned().collect(),
            shell_ends: self.shell_ends[..=r].to_vec(),
            targets,
        }
    }

    /// Line-oriented adjacency list `src gen dst`; boundary marks use `-`
    /// in place of `dst`.
    pub fn adjacency_text(&self) -> String {
        let k = self.generators.len();
        let mut out = String::new();
        for (slot, &t) in self.targets.iter().enumerate() {
            if t == OUTSIDE {
                let _ = writeln!(out, "{} {} -", slot / k, slot % k);
            } else {
                let _ = writeln!(out, "{} {} {}", slot / k, slot % k, t);
            }
        }
        out
    }

    /// Node table `idx level tail-word`.
    pub fn node_table_text(&self) -> String {
        let mut out = String::new();
        for (i, c) in self.nodes.iter().enumerate() {
            let _ = writeln!(out, "{} {} {}", i, c.level(), c.tail());
        }
        out
    }

    pub fn export(&self) -> BallExport {
        BallExport {
            base: self.base.clone(),
            radius: self.radius,
            generators: self.generators.iter().map(|g| g.to_string()).collect(),
            nodes: self
                .nodes
                .iter()
                .enumerate()
                .map(|(idx, c)| NodeRecord {
                    idx,
                    level: c.level(),
                    tail: c.tail().to_string(),
                })
                .collect(),
            edges: self.edges().map(|e| [e.src, e.gen, e.dst]).collect(),
            boundary: self.boundary().map(|(s, g)| [s, g]).collect(),
        }
    }
}

/// JSON form of an [`OrbitBall`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BallExport {
    pub base: Coset,
    pub radius: usize,
    pub generators: Vec<String>,
    pub nodes: Vec<NodeRecord>,
    pub edges: Vec<[usize; 3]>,
    pub boundary: Vec<[usize; 2]>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NodeRecord {
    pub idx: usize,
    pub level: i64,
    pub tail: String,
}

/// H-orbit balls of `(n, e)F` for each level `n` of a window.
#[derive(Debug, Clone)]
pub struct HOrbitPartition {
    pub blocks: BTreeMap<i64, OrbitBall>,
}

impl HOrbitPartition {
    /// Builds one ball per level. Generators must lie in `H = F∞`.
    pub fn build(
        window: RangeInclusive<i64>,
        generators: &[GElement],
        radius: usize,
        cap: usize,
    ) -> Result<HOrbitPartition> {
        if let Some(bad) = generators.iter().find(|g| g.shift != 0) {
            return Err(Error::NonzeroShift(bad.to_string()));
        }
        let blocks = window
            .map(|n| Ok((n, OrbitBall::build(Coset::base(n), generators, radius, cap)?)))
            .collect::<Result<_>>()?;
        Ok(HOrbitPartition { blocks })
    }

    /// Every node of the block for level `n` sits at level `n`, and no edge
    /// leaves a block, so the blocks are invariant summands.
    pub fn levels_preserved(&self) -> bool {
        self.blocks
            .iter()
            .all(|(&n, ball)| ball.nodes().all(|c| c.level() == n))
    }

    pub fn block_sizes(&self) -> BTreeMap<i64, usize> {
        self.blocks.iter().map(|(&n, b)| (n, b.len())).collect()
    }
}
