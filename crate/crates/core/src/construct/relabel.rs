use crate::distinguish::{Coloring, ListAssignment};
use crate::error::Result;

/// Renaming of the vertices of `K_n` that puts a path on `1..=|P|` in
/// order and the remaining vertices after it in increasing order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relabeling {
    /// `to_new[old] = new`, both 0-based.
    to_new: Vec<usize>,
    to_old: Vec<usize>,
}

impl Relabeling {
    /// `path` holds 1-based labels.
    pub fn for_path(n: usize, path: &[usize]) -> Self {
        let mut to_old: Vec<usize> = path.iter().map(|v| v - 1).collect();
        to_old.extend((0..n).filter(|v| !path.contains(&(v + 1))));
        let mut to_new = vec![0; n];
        for (new, &old) in to_old.iter().enumerate() {
            to_new[old] = new;
        }
        Self { to_new, to_old }
    }

    pub fn identity(n: usize) -> Self {
        Self { to_new: (0..n).collect(), to_old: (0..n).collect() }
    }

    /// New label of a 1-based old label.
    pub fn new_label(&self, old: usize) -> usize {
        self.to_new[old - 1] + 1
    }

    pub fn old_label(&self, new: usize) -> usize {
        self.to_old[new - 1] + 1
    }

    fn inverse(&self) -> Self {
        Self { to_new: self.to_old.clone(), to_old: self.to_new.clone() }
    }

    /// Lists with object `{u, v}` moved to `{new(u), new(v)}`.
    pub fn apply_lists(&self, lists: &ListAssignment) -> Result<ListAssignment> {
        let objects = lists.objects();
        let mut moved = vec![Vec::new(); lists.len()];
        for i in 0..lists.len() {
            moved[objects.image(&self.to_new, i)] = lists.list_names(i).iter().map(|s| s.to_string()).collect();
        }
        ListAssignment::new(objects.clone(), moved)
    }

    pub fn apply_coloring(&self, c: &Coloring) -> Coloring {
        move_coloring(c, &self.to_new)
    }

    /// Undoes [`Relabeling::apply_coloring`].
    pub fn revert_coloring(&self, c: &Coloring) -> Coloring {
        move_coloring(c, &self.inverse().to_new)
    }
}

fn move_coloring(c: &Coloring, map: &[usize]) -> Coloring {
    let objects = c.objects();
    let mut colors = vec![String::new(); c.len()];
    for i in 0..c.len() {
        colors[objects.image(map, i)] = c.color(i).to_string();
    }
    Coloring::new(objects.clone(), colors).expect("one color per object")
}
