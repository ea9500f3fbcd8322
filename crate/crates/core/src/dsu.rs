/// Disjoint-set forest with path halving and union by size.
#[derive(Debug, Clone)]
pub(crate) struct DisjointSets {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl DisjointSets {
    pub fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
            size: vec![1; n],
        }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut a, mut b) = (self.find(a), self.find(b));
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

    /// Blocks as masks, ordered by their smallest element.
    pub fn block_masks(&mut self) -> Vec<u32> {
        let n = self.parent.len();
        let mut by_root = vec![0u32; n];
        for x in 0..n {
            let r = self.find(x);
            by_root[r] |= 1 << x;
        }
        let mut blocks: Vec<u32> = by_root.into_iter().filter(|&b| b != 0).collect();
        blocks.sort_unstable_by_key(|b| b.trailing_zeros());
        blocks
    }
}
