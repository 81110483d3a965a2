//! Coloring schemes for `K_6` and `K_7` with a monochromatic path on
//! `1..=|P|`, and a small solver for them.
//!
//! A scheme gives each edge a set of restrictions: a forced color, colors
//! to avoid, or other edges whose color it must differ from. Edges are
//! resolved after every edge they refer to, each taking the least allowed
//! color by name, and the solver backtracks if a choice leaves a later edge
//! without a color.

use std::fmt;

use serde::Serialize;

use crate::distinguish::ListAssignment;
use crate::kneser::ColorableObjectSet;

/// Which case of the construction produced a coloring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CaseTrace {
    P7,
    P6,
    P5,
    P4,
    P3Table1,
    P3Table2,
    P3Table3,
    Lemma9Random,
    OracleFallback,
}

impl CaseTrace {
    pub fn as_str(self) -> &'static str {
        match self {
            CaseTrace::P7 => "P7",
            CaseTrace::P6 => "P6",
            CaseTrace::P5 => "P5",
            CaseTrace::P4 => "P4",
            CaseTrace::P3Table1 => "P3-table1",
            CaseTrace::P3Table2 => "P3-table2",
            CaseTrace::P3Table3 => "P3-table3",
            CaseTrace::Lemma9Random => "lemma9-random",
            CaseTrace::OracleFallback => "oracle-fallback",
        }
    }
}

impl fmt::Display for CaseTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl Serialize for CaseTrace {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Rule {
    Assign(u32),
    Avoid(u32),
    /// Differ from the color of another edge.
    AvoidEdge(usize),
}

/// Restrictions for every edge of a relabeled `K_n`.
#[derive(Debug, Clone)]
pub struct Scheme {
    case: CaseTrace,
    c1: u32,
    rules: Vec<Vec<Rule>>,
}

/// Result of solving a scheme: colors by edge index, or the reason none
/// exists.
pub type Solution = std::result::Result<Vec<u32>, String>;

struct Builder<'a> {
    objects: &'a ColorableObjectSet,
    scheme: Scheme,
    on_path: Vec<bool>,
}

impl<'a> Builder<'a> {
    fn new(objects: &'a ColorableObjectSet, case: CaseTrace, c1: u32, path_len: usize) -> Self {
        let m = objects.len();
        let mut b = Self { objects, scheme: Scheme { case, c1, rules: vec![Vec::new(); m] }, on_path: vec![false; m] };
        for v in 1..path_len {
            let e = objects.edge(v, v + 1);
            b.on_path[e] = true;
            b.scheme.rules[e].push(Rule::Assign(c1));
        }
        b
    }

    fn e(&self, (a, b): (usize, usize)) -> usize {
        self.objects.edge(a, b)
    }

    fn avoid_c1(&mut self, edges: &[(usize, usize)]) -> &mut Self {
        for &ab in edges {
            let e = self.e(ab);
            self.scheme.rules[e].push(Rule::Avoid(self.scheme.c1));
        }
        self
    }

    /// Every edge off the path avoids `c1`, except those listed.
    fn avoid_c1_elsewhere(&mut self, except: &[(usize, usize)]) -> &mut Self {
        let skip: Vec<usize> = except.iter().map(|&ab| self.e(ab)).collect();
        for e in 0..self.objects.len() {
            if !self.on_path[e] && !skip.contains(&e) {
                self.scheme.rules[e].push(Rule::Avoid(self.scheme.c1));
            }
        }
        self
    }

    /// Each edge in `edges` avoids the color of `reference`.
    fn avoid_color_of(&mut self, edges: &[(usize, usize)], reference: (usize, usize)) -> &mut Self {
        let r = self.e(reference);
        for &ab in edges {
            let e = self.e(ab);
            self.scheme.rules[e].push(Rule::AvoidEdge(r));
        }
        self
    }

    fn build(&mut self) -> Scheme {
        self.scheme.clone()
    }
}

impl Scheme {
    /// The scheme for `K_n`, `n ∈ {6, 7}`, relabeled so the path is
    /// `1, 2, ..., path_len`. `None` when no scheme covers the case.
    pub fn for_case(lists: &ListAssignment, path_len: usize, c1: u32) -> Option<Scheme> {
        let objects = lists.objects();
        let n = lists.n();
        let c1_on_27 = n == 7 && lists.contains(objects.edge(2, 7), c1);
        let case = match (n, path_len) {
            (7, 7) => CaseTrace::P7,
            (_, 6) => CaseTrace::P6,
            (_, 5) => CaseTrace::P5,
            (_, 4) => CaseTrace::P4,
            (6, 3) => CaseTrace::P3Table1,
            (7, 3) if c1_on_27 => CaseTrace::P3Table2,
            (7, 3) => CaseTrace::P3Table3,
            _ => return None,
        };
        if !(6..=7).contains(&n) {
            return None;
        }
        let mut b = Builder::new(objects, case, c1, path_len);
        let scheme = match (n, case) {
            (7, CaseTrace::P7) => b.avoid_c1_elsewhere(&[(2, 4), (4, 6)]).avoid_color_of(&[(4, 6)], (2, 4)).build(),
            (_, CaseTrace::P6) => b.avoid_c1_elsewhere(&[(2, 4), (3, 5)]).avoid_color_of(&[(3, 5)], (2, 4)).build(),
            (6, CaseTrace::P5) => b.avoid_c1_elsewhere(&[]).avoid_color_of(&[(5, 6)], (1, 6)).build(),
            (7, CaseTrace::P5) => b
                .avoid_c1_elsewhere(&[])
                .avoid_color_of(&[(5, 6)], (1, 6))
                .avoid_color_of(&[(5, 6)], (1, 7))
                .avoid_color_of(&[(5, 6)], (5, 7))
                .build(),
            (6, CaseTrace::P4) => b
                .avoid_c1_elsewhere(&[])
                .avoid_color_of(&[(4, 5)], (1, 4))
                .avoid_color_of(&[(4, 5)], (1, 6))
                .avoid_color_of(&[(4, 5)], (4, 6))
                .build(),
            (7, CaseTrace::P4) => {
                let crossing: Vec<(usize, usize)> = (1..=4).flat_map(|a| (5..=7).map(move |b| (a, b))).collect();
                b.avoid_c1(&[(5, 6)])
                    .avoid_color_of(&[(6, 7), (5, 7)], (5, 6))
                    .avoid_color_of(&[(4, 7)], (1, 7))
                    .avoid_color_of(&[(1, 5)], (1, 6))
                    .avoid_c1(&crossing)
                    .build()
            }
            (6, CaseTrace::P3Table1) => b
                .avoid_c1(&[(2, 4), (2, 5), (2, 6), (1, 3), (4, 5)])
                .avoid_color_of(&[(3, 4), (3, 5), (3, 6), (1, 4), (1, 5)], (1, 6))
                .avoid_color_of(&[(5, 6)], (4, 6))
                .build(),
            (7, CaseTrace::P3Table2) => b
                .avoid_c1(&[(2, 4), (2, 5), (2, 6), (1, 3), (4, 5), (2, 7)])
                .avoid_color_of(&[(3, 4), (3, 5), (3, 6), (1, 4), (1, 5), (3, 7)], (1, 6))
                .avoid_color_of(&[(4, 7), (5, 6), (6, 7)], (4, 6))
                .avoid_color_of(&[(1, 7)], (1, 5))
                .avoid_color_of(&[(3, 7)], (3, 6))
                .build(),
            (7, CaseTrace::P3Table3) => b
                .avoid_c1(&[(2, 4), (2, 5), (2, 6), (1, 3), (4, 5), (4, 7), (5, 7), (6, 7)])
                .avoid_color_of(&[(3, 4), (3, 5), (3, 6), (1, 4), (1, 5), (3, 7)], (1, 6))
                .avoid_color_of(&[(5, 6)], (4, 6))
                .avoid_color_of(&[(1, 7)], (1, 5))
                .avoid_color_of(&[(2, 7)], (2, 4))
                .avoid_color_of(&[(3, 7)], (3, 6))
                .build(),
            _ => return None,
        };
        Some(scheme)
    }

    pub fn case(&self) -> CaseTrace {
        self.case
    }

    /// Resolution order: every edge after the edges it refers to, ties by
    /// edge index.
    fn order(&self) -> Vec<usize> {
        let m = self.rules.len();
        let mut depth = vec![None; m];
        fn depth_of(e: usize, rules: &[Vec<Rule>], depth: &mut [Option<usize>], stack: &mut Vec<usize>) -> usize {
            if let Some(d) = depth[e] {
                return d;
            }
            assert!(!stack.contains(&e), "scheme restrictions form a cycle");
            stack.push(e);
            let d = rules[e]
                .iter()
                .filter_map(|r| match r {
                    Rule::AvoidEdge(f) => Some(depth_of(*f, rules, depth, stack) + 1),
                    _ => None,
                })
                .max()
                .unwrap_or(0);
            stack.pop();
            depth[e] = Some(d);
            d
        }
        let mut stack = Vec::new();
        let mut order: Vec<usize> = (0..m).collect();
        for e in 0..m {
            depth_of(e, &self.rules, &mut depth, &mut stack);
        }
        order.sort_by_key(|&e| (depth[e], e));
        order
    }

    /// Colors of edge `e` allowed before edge references, by name.
    fn candidates(&self, lists: &ListAssignment, e: usize) -> Vec<u32> {
        lists
            .list(e)
            .iter()
            .copied()
            .filter(|&c| {
                self.rules[e].iter().all(|r| match r {
                    Rule::Assign(x) => c == *x,
                    Rule::Avoid(x) => c != *x,
                    Rule::AvoidEdge(_) => true,
                })
            })
            .collect()
    }

    /// Finds colors satisfying every restriction.
    pub fn solve(&self, lists: &ListAssignment) -> Solution {
        let objects = lists.objects();
        let m = self.rules.len();
        let domains: Vec<Vec<u32>> = (0..m).map(|e| self.candidates(lists, e)).collect();
        if let Some(e) = (0..m).find(|&e| domains[e].is_empty()) {
            return Err(format!(
                "edge {{{}}} has no color in {:?} meeting {}",
                objects.label(e),
                lists.list_names(e),
                self.describe(lists, e)
            ));
        }
        let order = self.order();
        let refs: Vec<Vec<usize>> = self
            .rules
            .iter()
            .map(|rs| rs.iter().filter_map(|r| if let Rule::AvoidEdge(f) = r { Some(*f) } else { None }).collect())
            .collect();
        let mut colors = vec![u32::MAX; m];
        let mut pos = vec![0usize; m];
        let mut d = 0;
        while d < m {
            let e = order[d];
            let dom = &domains[e];
            let mut chosen = None;
            while pos[d] < dom.len() {
                let c = dom[pos[d]];
                pos[d] += 1;
                if refs[e].iter().all(|&f| colors[f] != c) {
                    chosen = Some(c);
                    break;
                }
            }
            match chosen {
                Some(c) => {
                    colors[e] = c;
                    d += 1;
                }
                None => {
                    pos[d] = 0;
                    colors[e] = u32::MAX;
                    if d == 0 {
                        return Err("no coloring meets every restriction of the scheme".to_string());
                    }
                    d -= 1;
                    colors[order[d]] = u32::MAX;
                }
            }
        }
        Ok(colors)
    }

    fn describe(&self, lists: &ListAssignment, e: usize) -> String {
        let parts: Vec<String> = self.rules[e]
            .iter()
            .map(|r| match r {
                Rule::Assign(c) => format!("assign {}", lists.color_name(*c)),
                Rule::Avoid(c) => format!("avoid {}", lists.color_name(*c)),
                Rule::AvoidEdge(f) => format!("differ from edge {{{}}}", lists.objects().label(*f)),
            })
            .collect();
        parts.join(", ")
    }
}
