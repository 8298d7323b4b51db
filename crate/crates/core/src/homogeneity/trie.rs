//! Prefix trie of all hiker's tracks of a coloring.
//!
//! Every prefix of a track is itself the track of its last point, so the trie
//! has exactly one node per destination and each node is terminal for the
//! point it holds. Longer ground sets only add branches; the depth cannot
//! shrink when an infinite coloring is truncated at larger sizes.

use std::collections::HashSet;

use serde::Serialize;

use crate::coloring::Coloring;
use crate::track::{build_all_tracks, hiker_map};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TrieNode {
    pub point: usize,
    pub parent: Option<usize>,
    /// Edge distance from the root of its tree.
    pub depth: usize,
    pub children: Vec<usize>,
    /// The destination whose track ends at this node, if any.
    pub destination: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TrieStats {
    pub depth: usize,
    pub node_count: usize,
    /// Entry `d` counts distinct hiker's maps among destinations with `δ = d`.
    pub distinct_maps_per_level: Vec<usize>,
    /// Every node is the end of its own point's track.
    pub prefix_consistent: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TrackTrie {
    nodes: Vec<TrieNode>,
    roots: Vec<usize>,
    distinct_maps_per_level: Vec<usize>,
}

impl TrackTrie {
    pub fn nodes(&self) -> &[TrieNode] {
        &self.nodes
    }

    pub fn roots(&self) -> &[usize] {
        &self.roots
    }

    pub fn stats(&self) -> TrieStats {
        TrieStats {
            depth: self.nodes.iter().map(|n| n.depth).max().unwrap_or(0),
            node_count: self.nodes.len(),
            distinct_maps_per_level: self.distinct_maps_per_level.clone(),
            prefix_consistent: self.nodes.iter().all(|n| n.destination == Some(n.point)),
        }
    }

    fn child(&self, parent: Option<usize>, point: usize) -> Option<usize> {
        let siblings = match parent {
            Some(p) => &self.nodes[p].children,
            None => &self.roots,
        };
        siblings.iter().copied().find(|&i| self.nodes[i].point == point)
    }

    fn insert(&mut self, points: &[usize], destination: usize) {
        let mut at = None;
        for (depth, &point) in points.iter().enumerate() {
            at = Some(match self.child(at, point) {
                Some(i) => i,
                None => {
                    let id = self.nodes.len();
                    self.nodes.push(TrieNode { point, parent: at, depth, children: Vec::new(), destination: None });
                    match at {
                        Some(p) => self.nodes[p].children.push(id),
                        None => self.roots.push(id),
                    }
                    id
                }
            });
        }
        if let Some(leaf) = at {
            let node = &mut self.nodes[leaf];
            // A second destination ending here would break the prefix property.
            node.destination = match node.destination {
                None => Some(destination),
                Some(_) => None,
            };
        }
    }
}

pub fn build_track_trie(c: &Coloring) -> TrackTrie {
    let tracks = build_all_tracks(c);
    let mut trie = TrackTrie { nodes: Vec::new(), roots: Vec::new(), distinct_maps_per_level: Vec::new() };
    let max_delta = tracks.iter().map(|t| t.delta()).max().unwrap_or(0);
    let mut levels: Vec<HashSet<_>> = vec![HashSet::new(); max_delta + 1];
    for tr in &tracks {
        trie.insert(tr.points(), tr.destination());
        levels[tr.delta()].insert(hiker_map(c, tr).expect("track was built from this coloring"));
    }
    trie.distinct_maps_per_level = levels.iter().map(|l| l.len()).collect();
    trie
}
