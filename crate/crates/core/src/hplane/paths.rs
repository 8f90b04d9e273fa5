//! Weighted graphs in compressed adjacency form, Dijkstra, and exact graph
//! diameter by bounding eccentricities.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

#[derive(Debug, Clone)]
pub struct Graph {
    offsets: Vec<usize>,
    targets: Vec<u32>,
    weights: Vec<f64>,
}

#[derive(Clone, Copy, PartialEq)]
struct Item(f64, u32);

impl Eq for Item {}

impl Ord for Item {
    fn cmp(&self, other: &Self) -> Ordering {
        // min-heap on distance
        other.0.total_cmp(&self.0).then(other.1.cmp(&self.1))
    }
}

impl PartialOrd for Item {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Result of [`Graph::diameter`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GraphDiameter {
    /// Largest eccentricity actually observed (a graph distance).
    pub attained: f64,
    /// Upper bound on the graph diameter; within the requested slack.
    pub bound: f64,
    pub endpoints: (u32, u32),
    pub sweeps: usize,
}

impl Graph {
    /// Undirected graph on `n` vertices.
    pub fn from_edges(n: usize, edges: impl Iterator<Item = (u32, u32, f64)> + Clone) -> Graph {
        let mut degree = vec![0usize; n + 1];
        for (a, b, _) in edges.clone() {
            degree[a as usize] += 1;
            degree[b as usize] += 1;
        }
        let mut offsets = Vec::with_capacity(n + 1);
        let mut acc = 0;
        offsets.push(0);
        for d in &degree[..n] {
            acc += d;
            offsets.push(acc);
        }
        let mut fill = offsets.clone();
        let mut targets = vec![0u32; acc];
        let mut weights = vec![0.0; acc];
        for (a, b, w) in edges {
            for (x, y) in [(a, b), (b, a)] {
                let slot = &mut fill[x as usize];
                targets[*slot] = y;
                weights[*slot] = w;
                *slot += 1;
            }
        }
        Graph { offsets, targets, weights }
    }

    pub fn vertex_count(&self) -> usize {
        self.offsets.len() - 1
    }

    /// Number of undirected edges.
    pub fn edge_count(&self) -> usize {
        self.targets.len() / 2
    }

    pub fn neighbors(&self, v: u32) -> impl Iterator<Item = (u32, f64)> + '_ {
        let r = self.offsets[v as usize]..self.offsets[v as usize + 1];
        self.targets[r.clone()].iter().copied().zip(self.weights[r].iter().copied())
    }

    /// Multi-source shortest distances into `dist` (resized as needed).
    pub fn dijkstra_into(&self, sources: &[u32], dist: &mut Vec<f64>) {
        dist.clear();
        dist.resize(self.vertex_count(), f64::INFINITY);
        let mut heap = BinaryHeap::new();
        for &s in sources {
            dist[s as usize] = 0.0;
            heap.push(Item(0.0, s));
        }
        while let Some(Item(d, v)) = heap.pop() {
            if d > dist[v as usize] {
                continue;
            }
            for (w, len) in self.neighbors(v) {
                let nd = d + len;
                if nd < dist[w as usize] {
                    dist[w as usize] = nd;
                    heap.push(Item(nd, w));
                }
            }
        }
    }

    pub fn distances_from(&self, source: u32) -> Vec<f64> {
        let mut d = Vec::new();
        self.dijkstra_into(&[source], &mut d);
        d
    }

    pub fn component_count(&self) -> usize {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut count = 0;
        let mut stack = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            count += 1;
            seen[s] = true;
            stack.push(s as u32);
            while let Some(v) = stack.pop() {
                for (w, _) in self.neighbors(v) {
                    if !seen[w as usize] {
                        seen[w as usize] = true;
                        stack.push(w);
                    }
                }
            }
        }
        count
    }

    /// Graph diameter by bounding eccentricities: each sweep tightens
    /// per-vertex eccentricity bounds and discards vertices that cannot beat
    /// the best eccentricity found. Stops once every remaining vertex is
    /// within `slack` of it. Expects a connected graph.
    pub fn diameter(&self, slack: f64) -> GraphDiameter {
        let n = self.vertex_count();
        let mut lo = vec![0.0f64; n];
        let mut hi = vec![f64::INFINITY; n];
        let mut alive: Vec<u32> = (0..n as u32).collect();
        let mut best = 0.0f64;
        let mut endpoints = (0, 0);
        let mut sweeps = 0;
        let mut dist = Vec::new();
        let mut pick_high = true;
        while !alive.is_empty() {
            let v = if pick_high {
                *alive.iter().max_by(|&&a, &&b| hi[a as usize].total_cmp(&hi[b as usize]).then(b.cmp(&a))).unwrap()
            } else {
                *alive.iter().min_by(|&&a, &&b| lo[a as usize].total_cmp(&lo[b as usize]).then(a.cmp(&b))).unwrap()
            };
            pick_high = !pick_high;
            self.dijkstra_into(&[v], &mut dist);
            sweeps += 1;
            let (far, ecc) = dist
                .iter()
                .enumerate()
                .fold((v, 0.0f64), |acc, (i, &d)| if d > acc.1 { (i as u32, d) } else { acc });
            lo[v as usize] = ecc;
            hi[v as usize] = ecc;
            if ecc > best {
                best = ecc;
                endpoints = (v, far);
            }
            for &w in &alive {
                let d = dist[w as usize];
                let w = w as usize;
                lo[w] = lo[w].max(d).max(ecc - d);
                hi[w] = hi[w].min(ecc + d);
            }
            alive.retain(|&w| w != v && hi[w as usize] > best + slack);
        }
        let bound = best + slack.max(0.0);
        GraphDiameter {
            attained: best,
            bound: if slack > 0.0 { bound } else { best },
            endpoints,
            sweeps,
        }
    }
}
