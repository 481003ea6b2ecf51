use std::collections::VecDeque;

use crate::{CatalanTable, CatalanTuple};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TreeKind {
    Direct,
    Opposite,
}

/// Edges `(i, j)`, `i < j`, of the direct or opposite tree on the nodes
/// `0..=k` of a Catalan tuple.
pub fn trees(t: &CatalanTuple, kind: TreeKind) -> Vec<(usize, usize)> {
    let mut open: Vec<(usize, u32)> = Vec::new();
    let mut edges = Vec::with_capacity(t.len());
    for (l, &e) in t.entries().iter().enumerate() {
        match kind {
            TreeKind::Direct => {
                if l > 0 {
                    let top = open.last_mut().expect("Catalan tuple keeps a half-edge open");
                    edges.push((top.0, l));
                    top.1 -= 1;
                    if top.1 == 0 {
                        open.pop();
                    }
                }
                if e > 0 {
                    open.push((l, e));
                }
            }
            TreeKind::Opposite => {
                if e > 0 {
                    open.push((l, e));
                    continue;
                }
                while let Some(top) = open.last_mut() {
                    edges.push((top.0, l));
                    top.1 -= 1;
                    if top.1 > 0 {
                        break;
                    }
                    open.pop();
                }
            }
        }
    }
    edges
}

/// Rooted plane tree on the pockets `P_0..P_k` of a table together with the
/// labels `0..N-1` of the edge sides.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PocketTree {
    parent: Vec<Option<usize>>,
    children: Vec<Vec<usize>>,
    level: Vec<usize>,
    /// `(down, up)` labels of the edge from `P_m` to its parent.
    labels: Vec<Option<(usize, usize)>>,
}

impl PocketTree {
    pub fn new(table: &CatalanTable) -> Self {
        let lt = table.length_tuple();
        let n = lt.entries().len();
        let mut parent = vec![None; n];
        let mut children = vec![Vec::new(); n];
        for (i, j) in trees(&lt, TreeKind::Direct) {
            parent[j] = Some(i);
            children[i].push(j);
        }
        let mut level = vec![0; n];
        let mut queue = VecDeque::from([0usize]);
        while let Some(m) = queue.pop_front() {
            for &c in &children[m] {
                level[c] = level[m] + 1;
                queue.push_back(c);
            }
        }
        let mut labels = vec![None; n];
        let mut next = 0;
        fn walk(m: usize, children: &[Vec<usize>], labels: &mut [Option<(usize, usize)>], next: &mut usize) {
            for &c in &children[m] {
                let down = *next;
                *next += 1;
                walk(c, children, labels, next);
                labels[c] = Some((down, *next));
                *next += 1;
            }
        }
        walk(0, &children, &mut labels, &mut next);
        Self { parent, children, level, labels }
    }

    pub fn vertex_count(&self) -> usize {
        self.parent.len()
    }

    pub fn parent(&self, m: usize) -> Option<usize> {
        self.parent[m]
    }

    pub fn children(&self, m: usize) -> &[usize] {
        &self.children[m]
    }

    /// Number of edges at `P_m`.
    pub fn valency(&self, m: usize) -> usize {
        self.children[m].len() + usize::from(self.parent[m].is_some())
    }

    pub fn level(&self, m: usize) -> usize {
        self.level[m]
    }

    pub fn edge_labels(&self, m: usize) -> Option<(usize, usize)> {
        self.labels[m]
    }

    /// Edges around `P_m` as label pairs: parent edge first, then children.
    pub fn pocket_edges(&self, m: usize) -> Vec<(usize, usize)> {
        self.labels[m].into_iter().chain(self.children[m].iter().map(|&c| self.labels[c].unwrap())).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(v: &[u32]) -> CatalanTuple {
        CatalanTuple::new(v.to_vec()).unwrap()
    }

    #[test]
    fn length_three_trees() {
        let cases: [(&[u32], [(usize, usize); 3], [(usize, usize); 3]); 5] = [
            (&[3, 0, 0, 0], [(0, 1), (0, 2), (0, 3)], [(0, 1), (0, 2), (0, 3)]),
            (&[2, 1, 0, 0], [(0, 1), (1, 2), (0, 3)], [(1, 2), (0, 2), (0, 3)]),
            (&[2, 0, 1, 0], [(0, 1), (0, 2), (2, 3)], [(0, 1), (2, 3), (0, 3)]),
            (&[1, 2, 0, 0], [(0, 1), (1, 2), (1, 3)], [(1, 2), (1, 3), (0, 3)]),
            (&[1, 1, 1, 0], [(0, 1), (1, 2), (2, 3)], [(2, 3), (1, 3), (0, 3)]),
        ];
        for (e, direct, opposite) in cases {
            assert_eq!(trees(&t(e), TreeKind::Direct), direct);
            assert_eq!(trees(&t(e), TreeKind::Opposite), opposite);
        }
        assert!(trees(&t(&[0]), TreeKind::Direct).is_empty());
        assert!(trees(&t(&[0]), TreeKind::Opposite).is_empty());
    }

    #[test]
    fn trees_span_all_nodes() {
        for k in 0..=6 {
            for e in CatalanTuple::enumerate(k) {
                for kind in [TreeKind::Direct, TreeKind::Opposite] {
                    let edges = trees(&e, kind);
                    assert_eq!(edges.len(), k);
                    let mut root: Vec<usize> = (0..=k).collect();
                    fn find(r: &mut [usize], x: usize) -> usize {
                        if r[x] != x {
                            let y = find(r, r[x]);
                            r[x] = y;
                        }
                        r[x]
                    }
                    for (i, j) in edges {
                        assert!(i < j);
                        let (a, b) = (find(&mut root, i), find(&mut root, j));
                        assert_ne!(a, b, "{e} {kind:?} has a cycle");
                        root[a] = b;
                    }
                }
            }
        }
    }

    #[test]
    fn pocket_tree_of_twelve_point_table() {
        let tab = CatalanTable::from_entries(&[&[2, 0, 0], &[1, 1, 0], &[0], &[0], &[0], &[1, 0], &[0]]).unwrap();
        let pt = PocketTree::new(&tab);
        assert_eq!(pt.vertex_count(), 7);
        assert_eq!(pt.children(0), &[1, 4, 5]);
        assert_eq!(pt.children(1), &[2, 3]);
        assert_eq!(pt.children(5), &[6]);
        assert_eq!((0..7).map(|m| pt.level(m)).collect::<Vec<_>>(), [0, 1, 2, 2, 1, 1, 2]);
        assert_eq!((0..7).map(|m| pt.valency(m)).collect::<Vec<_>>(), [3, 3, 1, 1, 1, 2, 1]);
        assert_eq!(pt.pocket_edges(0), [(0, 5), (6, 7), (8, 11)]);
        assert_eq!(pt.pocket_edges(1), [(0, 5), (1, 2), (3, 4)]);
        assert_eq!(pt.pocket_edges(5), [(8, 11), (9, 10)]);
    }
}
