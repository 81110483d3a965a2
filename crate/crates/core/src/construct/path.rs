use serde::Serialize;

use crate::distinguish::ListAssignment;
use crate::error::{Error, Result};
use crate::kneser::ObjectKind;

/// A longest path of `K_n` whose edge lists share a color.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MonoPath {
    /// 1-based vertex labels in path order.
    pub vertices: Vec<usize>,
    /// Every color common to all edge lists along the path.
    pub common_colors: Vec<String>,
    /// The color the constructions use on the path: the least common color.
    pub c1: String,
    /// No monochromatic path has more vertices.
    pub maximal: bool,
}

impl MonoPath {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }
}

pub(crate) fn require_edge_lists(lists: &ListAssignment) -> Result<()> {
    if lists.objects().kind() != ObjectKind::CompleteGraphEdges {
        return Err(Error::InvalidLists("expected lists on the edges of K_n".to_string()));
    }
    Ok(())
}

/// Longest monochromatic path, ties broken by the vertex sequence and then
/// by the color. `None` when no two edges of a path share a list color,
/// i.e. the best path is a single edge.
pub fn max_mono_path(lists: &ListAssignment) -> Result<Option<MonoPath>> {
    require_edge_lists(lists)?;
    let n = lists.n();
    let objects = lists.objects();
    let mut best: Option<(Vec<usize>, u32)> = None;
    for color in 0..lists.palette().len() as u32 {
        let has = |a: usize, b: usize| lists.contains(objects.edge(a + 1, b + 1), color);
        let mut adj = vec![vec![false; n]; n];
        for (a, row) in adj.iter_mut().enumerate() {
            for (b, cell) in row.iter_mut().enumerate() {
                *cell = a != b && has(a, b);
            }
        }
        let candidate = longest_path(&adj);
        let better = match &best {
            None => true,
            Some((seq, _)) => candidate.len() > seq.len() || (candidate.len() == seq.len() && candidate < *seq),
        };
        if better {
            best = Some((candidate, color));
        }
    }
    let (seq, _) = best.expect("palette is nonempty");
    if seq.len() < 3 {
        return Ok(None);
    }
    let vertices: Vec<usize> = seq.iter().map(|v| v + 1).collect();
    let mut common: Vec<u32> = lists.list(objects.edge(vertices[0], vertices[1])).to_vec();
    for w in vertices.windows(2).skip(1) {
        let l = lists.list(objects.edge(w[0], w[1]));
        common.retain(|c| l.binary_search(c).is_ok());
    }
    let common_colors: Vec<String> = common.iter().map(|&c| lists.color_name(c).to_string()).collect();
    Ok(Some(MonoPath { c1: common_colors[0].clone(), vertices, common_colors, maximal: true }))
}

/// Lexicographically least among the longest simple paths (0-based).
fn longest_path(adj: &[Vec<bool>]) -> Vec<usize> {
    let n = adj.len();
    let mut best: Vec<usize> = Vec::new();
    let mut path = Vec::with_capacity(n);
    let mut used = vec![false; n];
    fn extend(adj: &[Vec<bool>], path: &mut Vec<usize>, used: &mut [bool], best: &mut Vec<usize>) {
        // paths are generated in lexicographic order, so only strictly
        // longer ones replace the incumbent
        if path.len() > best.len() {
            *best = path.clone();
        }
        if best.len() == adj.len() {
            return;
        }
        let last = *path.last().expect("nonempty path");
        for v in 0..adj.len() {
            if !used[v] && adj[last][v] {
                used[v] = true;
                path.push(v);
                extend(adj, path, used, best);
                path.pop();
                used[v] = false;
            }
        }
    }
    for start in 0..n {
        used[start] = true;
        path.push(start);
        extend(adj, &mut path, &mut used, &mut best);
        path.pop();
        used[start] = false;
    }
    best
}
