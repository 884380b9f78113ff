//! Oriented link diagrams with arbitrary arc labels, used internally by the
//! simplifier and the skein evaluator. Unlike [`super::PdCode`] a diagram may
//! have several components and crossing-free loops.

/// Crossing slots are counterclockwise from the incoming under-strand; the
/// under-strand runs slot 0 -> 2, the over-strand 3 -> 1 when `positive`
/// and 1 -> 3 otherwise.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Xing {
    pub arcs: [u32; 4],
    pub positive: bool,
}

impl Xing {
    pub fn over_in(&self) -> usize {
        if self.positive {
            3
        } else {
            1
        }
    }

    pub fn over_out(&self) -> usize {
        if self.positive {
            1
        } else {
            3
        }
    }

    pub fn is_incoming(&self, slot: usize) -> bool {
        slot == 0 || slot == self.over_in()
    }

    pub fn switched(&self) -> Xing {
        let [a, b, c, d] = self.arcs;
        let arcs = if self.positive { [d, a, b, c] } else { [b, c, d, a] };
        Xing { arcs, positive: !self.positive }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LinkDiagram {
    pub xs: Vec<Xing>,
    /// Components without crossings.
    pub loops: u32,
}

struct UnionFind(Vec<u32>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n as u32).collect())
    }

    fn find(&mut self, x: u32) -> u32 {
        let mut r = x;
        while self.0[r as usize] != r {
            r = self.0[r as usize];
        }
        let mut y = x;
        while self.0[y as usize] != r {
            let next = self.0[y as usize];
            self.0[y as usize] = r;
            y = next;
        }
        r
    }

    fn union(&mut self, a: u32, b: u32) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra.max(rb) as usize] = ra.min(rb);
        }
    }
}

impl LinkDiagram {
    pub fn new(xs: Vec<Xing>, loops: u32) -> Self {
        LinkDiagram { xs, loops }
    }

    pub fn crossing_count(&self) -> usize {
        self.xs.len()
    }

    pub fn label_bound(&self) -> usize {
        self.xs
            .iter()
            .flat_map(|x| x.arcs)
            .max()
            .map_or(0, |m| m as usize + 1)
    }

    /// For each label, the (crossing, slot) where the arc ends.
    fn arc_ends(&self) -> Vec<(usize, usize)> {
        let mut ends = vec![(usize::MAX, 0); self.label_bound()];
        for (i, x) in self.xs.iter().enumerate() {
            for s in 0..4 {
                if x.is_incoming(s) {
                    ends[x.arcs[s] as usize] = (i, s);
                }
            }
        }
        ends
    }

    /// Labels of the component through `start`, in orientation order.
    pub fn trace_component(&self, start: u32) -> Vec<u32> {
        let ends = self.arc_ends();
        let mut out = vec![start];
        let mut l = start;
        loop {
            let (i, s) = ends[l as usize];
            l = self.xs[i].arcs[(s + 2) % 4];
            if l == start {
                return out;
            }
            out.push(l);
        }
    }

    /// Components with crossings, each as its arc sequence, ordered by their
    /// smallest label and starting there.
    pub fn components(&self) -> Vec<Vec<u32>> {
        let bound = self.label_bound();
        let mut seen = vec![false; bound];
        let mut present = vec![false; bound];
        for x in &self.xs {
            for &l in &x.arcs {
                present[l as usize] = true;
            }
        }
        let mut out = Vec::new();
        for l in 0..bound as u32 {
            if present[l as usize] && !seen[l as usize] {
                let comp = self.trace_component(l);
                for &m in &comp {
                    seen[m as usize] = true;
                }
                out.push(comp);
            }
        }
        out
    }

    pub fn component_count(&self) -> usize {
        self.components().len() + self.loops as usize
    }

    pub fn switched(&self, i: usize) -> LinkDiagram {
        let mut d = self.clone();
        d.xs[i] = d.xs[i].switched();
        d
    }

    /// Removes the crossings in `drop`, joining arcs as listed in `joins`,
    /// counting arcs left without crossings as loops, and compacting labels.
    fn rebuild(&self, drop: &[usize], joins: &[(u32, u32)]) -> LinkDiagram {
        let bound = self.label_bound();
        let mut uf = UnionFind::new(bound);
        for &(a, b) in joins {
            uf.union(a, b);
        }
        let kept: Vec<Xing> = self
            .xs
            .iter()
            .enumerate()
            .filter(|(i, _)| !drop.contains(i))
            .map(|(_, x)| Xing { arcs: x.arcs.map(|l| uf.find(l)), positive: x.positive })
            .collect();
        let mut used = vec![false; bound];
        for x in &kept {
            for &l in &x.arcs {
                used[l as usize] = true;
            }
        }
        let mut orphan_roots: Vec<u32> = joins
            .iter()
            .flat_map(|&(a, b)| [a, b])
            .map(|l| uf.find(l))
            .filter(|&r| !used[r as usize])
            .collect();
        orphan_roots.sort_unstable();
        orphan_roots.dedup();
        let mut d = LinkDiagram::new(kept, self.loops + orphan_roots.len() as u32);
        d.compact();
        d
    }

    /// Relabels arcs densely in order of first appearance along components.
    pub fn compact(&mut self) {
        let bound = self.label_bound();
        let mut relabel = vec![u32::MAX; bound];
        let mut next = 0;
        for comp in self.components() {
            for l in comp {
                relabel[l as usize] = next;
                next += 1;
            }
        }
        for x in &mut self.xs {
            x.arcs = x.arcs.map(|l| relabel[l as usize]);
        }
    }

    /// Oriented smoothing of crossing `i`.
    pub fn smoothed(&self, i: usize) -> LinkDiagram {
        let x = self.xs[i];
        let a = x.arcs;
        self.rebuild(&[i], &[(a[0], a[x.over_out()]), (a[x.over_in()], a[2])])
    }

    /// Removes crossing `i` letting both strands pass straight through.
    fn pass_through(&self, drop: &[usize]) -> LinkDiagram {
        let joins: Vec<(u32, u32)> = drop
            .iter()
            .flat_map(|&i| {
                let a = self.xs[i].arcs;
                [(a[0], a[2]), (a[1], a[3])]
            })
            .collect();
        self.rebuild(drop, &joins)
    }

    fn find_r1(&self) -> Option<usize> {
        self.xs
            .iter()
            .position(|x| (0..4).any(|s| x.arcs[s] == x.arcs[(s + 1) % 4]))
    }

    /// Two crossings joined by an over-over arc and an under-under arc bound
    /// a bigon that a Reidemeister II move removes.
    fn find_r2(&self) -> Option<(usize, usize)> {
        let n = self.xs.len();
        let bound = self.label_bound();
        // label -> crossings where it occupies an over (odd) or under (even) slot
        let mut over_at: Vec<Vec<usize>> = vec![Vec::new(); bound];
        let mut under_at: Vec<Vec<usize>> = vec![Vec::new(); bound];
        for (i, x) in self.xs.iter().enumerate() {
            for s in 0..4 {
                let l = x.arcs[s] as usize;
                if s % 2 == 1 {
                    over_at[l].push(i);
                } else {
                    under_at[l].push(i);
                }
            }
        }
        for i in 0..n {
            for s in [1, 3] {
                let p = self.xs[i].arcs[s] as usize;
                let Some(&j) = over_at[p].iter().find(|&&j| j != i) else {
                    continue;
                };
                for t in [0, 2] {
                    let q = self.xs[i].arcs[t] as usize;
                    if under_at[q].len() == 2 && under_at[q].contains(&j) && under_at[q].contains(&i) {
                        return Some((i, j));
                    }
                }
            }
        }
        None
    }

    /// Reidemeister I and II moves applied until none applies.
    pub fn simplified(&self) -> LinkDiagram {
        let mut d = self.clone();
        loop {
            if let Some(i) = d.find_r1() {
                d = d.pass_through(&[i]);
            } else if let Some((i, j)) = d.find_r2() {
                d = d.pass_through(&[i, j]);
            } else {
                return d;
            }
        }
    }

    /// Crossings whose first visit, walking components in order from their
    /// base arcs, is along the under-strand. A diagram without such crossings
    /// is an unlink.
    pub fn descending_defects(&self) -> Vec<usize> {
        let ends = self.arc_ends();
        let mut visited = vec![false; self.xs.len()];
        let mut bad = Vec::new();
        for comp in self.components() {
            for l in comp {
                let (i, s) = ends[l as usize];
                if !visited[i] {
                    visited[i] = true;
                    if s == 0 {
                        bad.push(i);
                    }
                }
            }
        }
        bad
    }
}
