//! Disjoint-set forest with path compression and union by size.

pub struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl UnionFind {
    pub fn new(len: usize) -> Self {
        UnionFind {
            parent: (0..len).collect(),
            size: vec![1; len],
        }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        let mut root = x;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        while x != root {
            let next = self.parent[x];
            self.parent[x] = root;
            x = next;
        }
        root
    }

    pub fn union(&mut self, x: usize, y: usize) -> bool {
        let mut a = self.find(x);
        let mut b = self.find(y);
        if a == b {
            return false;
        }
        if self.size[a] < self.size[b] {
            std::mem::swap(&mut a, &mut b);
        }
        self.parent[b] = a;
        self.size[a] += self.size[b];
        true
    }

    /// Labels every element with the smallest element of its set.
    pub fn canonical_labels(&mut self) -> Vec<usize> {
        let len = self.parent.len();
        let mut min_of_root = vec![usize::MAX; len];
        for x in 0..len {
            let r = self.find(x);
            if min_of_root[r] == usize::MAX {
                min_of_root[r] = x; // first visit in ascending order is the minimum
            }
        }
        (0..len).map(|x| min_of_root[self.parent[x]]).collect()
    }
}
