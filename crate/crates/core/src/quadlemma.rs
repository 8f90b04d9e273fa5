//! Disjoint arcs across a disk with four marked boundary points.
//!
//! The boundary circle is split into arcs `a, b, c, d` in cyclic order; a
//! boundary point is `arc + pos` with `pos` in `(0, 1)`, so the circle is
//! parametrised by `[0, 4)`. Chords are pairwise non-crossing. The question
//! is whether the open arcs `a` and `c` can be joined in the complement of
//! all chords; this always holds unless some chord runs from `b` to `d`.
//!
//! Text form, one config per line: chords as `arc:pos-arc:pos` separated by
//! spaces, then `curves=n` for the number of (inert) closed curves, e.g.
//! `a:0.25-c:0.5 b:0.1-b:0.9 curves=0`.

use crate::error::{GeomError, Result};
use rand::Rng;
use serde::Serialize;
use std::fmt;
use std::str::FromStr;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Arc {
    A,
    B,
    C,
    D,
}

impl Arc {
    pub const ALL: [Arc; 4] = [Arc::A, Arc::B, Arc::C, Arc::D];

    pub fn index(self) -> usize {
        self as usize
    }

    fn letter(self) -> char {
        ['a', 'b', 'c', 'd'][self.index()]
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Endpoint {
    pub arc: Arc,
    pub pos: f64,
}

impl Endpoint {
    pub fn new(arc: Arc, pos: f64) -> Result<Self> {
        if !(pos > 0.0 && pos < 1.0) {
            return Err(GeomError::Config(format!("endpoint position {pos} not strictly inside its arc")));
        }
        Ok(Endpoint { arc, pos })
    }

    /// Cyclic parameter in `[0, 4)`.
    pub fn t(&self) -> f64 {
        self.arc.index() as f64 + self.pos
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Chord {
    pub p: Endpoint,
    pub q: Endpoint,
}

impl Chord {
    pub fn new(p: Endpoint, q: Endpoint) -> Self {
        Chord { p, q }
    }

    fn range(&self) -> (f64, f64) {
        let (s, t) = (self.p.t(), self.q.t());
        (s.min(t), s.max(t))
    }

    /// Whether the chord has one endpoint on `x` and the other on `y`.
    pub fn joins(&self, x: Arc, y: Arc) -> bool {
        (self.p.arc == x && self.q.arc == y) || (self.p.arc == y && self.q.arc == x)
    }

    /// Whether boundary points `s` and `t` lie on different sides.
    fn separates(&self, s: f64, t: f64) -> bool {
        let (lo, hi) = self.range();
        let inside = |x: f64| x > lo && x < hi;
        inside(s) != inside(t)
    }

    pub fn crosses(&self, other: &Chord) -> bool {
        self.separates(other.p.t(), other.q.t())
    }
}

/// Whether two chords with all endpoints on one arc interleave along it.
pub fn overlap(x: &Chord, y: &Chord) -> Result<bool> {
    let arc = x.p.arc;
    if [x.q.arc, y.p.arc, y.q.arc].iter().any(|&a| a != arc) {
        return Err(GeomError::domain("overlap", "both chords must have all endpoints on one arc"));
    }
    if x == y {
        return Err(GeomError::domain("overlap", "chords must be distinct"));
    }
    Ok(x.crosses(y))
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ChordConfig {
    chords: Vec<Chord>,
    closed_curves: usize,
}

impl ChordConfig {
    pub fn new(chords: Vec<Chord>, closed_curves: usize) -> Result<Self> {
        let mut ts: Vec<f64> = chords.iter().flat_map(|c| [c.p.t(), c.q.t()]).collect();
        ts.sort_by(f64::total_cmp);
        if ts.windows(2).any(|w| w[0] == w[1]) {
            return Err(GeomError::Config("chord endpoints must be distinct".into()));
        }
        for (i, x) in chords.iter().enumerate() {
            if let Some(j) = chords[i + 1..].iter().position(|y| x.crosses(y)) {
                return Err(GeomError::Config(format!("chords {i} and {} cross", i + 1 + j)));
            }
        }
        Ok(ChordConfig { chords, closed_curves })
    }

    pub fn chords(&self) -> &[Chord] {
        &self.chords
    }

    pub fn closed_curves(&self) -> usize {
        self.closed_curves
    }

    pub fn without(&self, k: usize) -> ChordConfig {
        let mut chords = self.chords.clone();
        chords.remove(k);
        ChordConfig { chords, closed_curves: self.closed_curves }
    }

    /// Faces of the subdivision. Boundary interval `i` runs from the `i`-th
    /// endpoint in cyclic order to the next; `face[i]` labels its face.
    pub fn faces(&self) -> Faces {
        let mut ends: Vec<(f64, usize)> = self
            .chords
            .iter()
            .enumerate()
            .flat_map(|(k, c)| [(c.p.t(), k), (c.q.t(), k)])
            .collect();
        ends.sort_by(|x, y| x.0.total_cmp(&y.0));
        let n = ends.len();
        if n == 0 {
            return Faces { cuts: vec![], face: vec![0], count: 1 };
        }
        let mut partner = vec![0; n];
        let mut first = vec![usize::MAX; self.chords.len()];
        for (i, &(_, k)) in ends.iter().enumerate() {
            if first[k] == usize::MAX {
                first[k] = i;
            } else {
                partner[i] = first[k];
                partner[first[k]] = i;
            }
        }
        // Walking a face: along interval i to endpoint i+1, across its chord,
        // then on along the interval starting at the partner.
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for i in 0..n {
            let j = partner[(i + 1) % n];
            let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
            parent[ri.max(rj)] = ri.min(rj);
        }
        let mut label = vec![usize::MAX; n];
        let mut face = vec![0; n];
        let mut count = 0;
        for i in 0..n {
            let r = find(&mut parent, i);
            if label[r] == usize::MAX {
                label[r] = count;
                count += 1;
            }
            face[i] = label[r];
        }
        Faces { cuts: ends.into_iter().map(|e| e.0).collect(), face, count }
    }

    /// Whether the open arcs `from` and `to` meet a common face.
    pub fn path_exists(&self, from: Arc, to: Arc) -> PathWitness {
        let faces = self.faces();
        let (fa, fb) = (faces.faces_on(from), faces.faces_on(to));
        match fa.iter().find(|f| fb.contains(f)) {
            Some(&f) => PathWitness { connected: true, intervals: faces.intervals_of(f) },
            None => PathWitness { connected: false, intervals: vec![] },
        }
    }

    /// Independent check of [`path_exists`]: some boundary piece of `from`
    /// and some piece of `to` are separated by no chord.
    pub fn path_exists_by_separation(&self, from: Arc, to: Arc) -> bool {
        let pieces = |arc: Arc| {
            let lo = arc.index() as f64;
            let mut cuts = vec![lo, lo + 1.0];
            cuts.extend(
                self.chords.iter().flat_map(|c| [c.p, c.q]).filter(|e| e.arc == arc).map(|e| e.t()),
            );
            cuts.sort_by(f64::total_cmp);
            cuts.windows(2).map(|w| 0.5 * (w[0] + w[1])).collect::<Vec<_>>()
        };
        let (xs, ys) = (pieces(from), pieces(to));
        xs.iter()
            .any(|&x| ys.iter().any(|&y| self.chords.iter().all(|c| !c.separates(x, y))))
    }
}

/// Boundary intervals and their faces.
#[derive(Debug, Clone)]
pub struct Faces {
    cuts: Vec<f64>,
    face: Vec<usize>,
    pub count: usize,
}

impl Faces {
    /// `(start, end)` of interval `i`, with `end` possibly past 4 when the
    /// interval wraps.
    fn interval(&self, i: usize) -> (f64, f64) {
        let n = self.cuts.len();
        if n == 0 {
            return (0.0, 4.0);
        }
        let (s, e) = (self.cuts[i], self.cuts[(i + 1) % n]);
        (s, if e <= s { e + 4.0 } else { e })
    }

    fn faces_on(&self, arc: Arc) -> Vec<usize> {
        let lo = arc.index() as f64;
        let mut out: Vec<usize> = (0..self.face.len())
            .filter(|&i| {
                let (s, e) = self.interval(i);
                [0.0, 4.0].iter().any(|&shift| s < lo + 1.0 + shift && e > lo + shift)
            })
            .map(|i| self.face[i])
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    fn intervals_of(&self, f: usize) -> Vec<(f64, f64)> {
        (0..self.face.len()).filter(|&i| self.face[i] == f).map(|i| self.interval(i)).collect()
    }
}

/// Answer of [`ChordConfig::path_exists`]; the witness lists the boundary
/// intervals of a face meeting both arcs.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PathWitness {
    pub connected: bool,
    pub intervals: Vec<(f64, f64)>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub enum Verdict {
    /// `a` and `c` are joined; the witness face is attached.
    Verified(PathWitness),
    /// The chord with this index runs from `b` to `d`.
    HypothesisFails(usize),
    /// No path although the hypothesis holds.
    Counterexample,
}

pub fn verify_lemma(config: &ChordConfig) -> Verdict {
    if let Some(k) = config.chords.iter().position(|c| c.joins(Arc::B, Arc::D)) {
        return Verdict::HypothesisFails(k);
    }
    let w = config.path_exists(Arc::A, Arc::C);
    if w.connected {
        Verdict::Verified(w)
    } else {
        Verdict::Counterexample
    }
}

impl fmt::Display for ChordConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.chords {
            write!(f, "{}:{}-{}:{} ", c.p.arc.letter(), c.p.pos, c.q.arc.letter(), c.q.pos)?;
        }
        write!(f, "curves={}", self.closed_curves)
    }
}

fn parse_endpoint(s: &str) -> Result<Endpoint> {
    let bad = || GeomError::Config(format!("bad endpoint {s:?}, expected arc:pos"));
    let (arc, pos) = s.split_once(':').ok_or_else(bad)?;
    let arc = match arc {
        "a" => Arc::A,
        "b" => Arc::B,
        "c" => Arc::C,
        "d" => Arc::D,
        _ => return Err(bad()),
    };
    Endpoint::new(arc, pos.parse().map_err(|_| bad())?)
}

impl FromStr for ChordConfig {
    type Err = GeomError;
    fn from_str(s: &str) -> Result<Self> {
        let mut chords = Vec::new();
        let mut curves = 0;
        for tok in s.split_whitespace() {
            if let Some(n) = tok.strip_prefix("curves=") {
                curves = n.parse().map_err(|_| GeomError::Config(format!("bad curve count {n:?}")))?;
            } else {
                let (p, q) = tok
                    .split_once('-')
                    .ok_or_else(|| GeomError::Config(format!("bad chord {tok:?}")))?;
                chords.push(Chord::new(parse_endpoint(p)?, parse_endpoint(q)?));
            }
        }
        ChordConfig::new(chords, curves)
    }
}

/// Every config with `k` chords whose endpoints sit at evenly spaced
/// positions on their arcs: all ways to distribute the `2k` endpoints over
/// the four arcs, times all non-crossing matchings.
pub fn enumerate_configs(k: usize) -> Vec<ChordConfig> {
    let n = 2 * k;
    let mut out = Vec::new();
    let mut matchings = Vec::new();
    noncrossing_matchings(&(0..n).collect::<Vec<_>>(), &mut Vec::new(), &mut matchings);
    for counts in compositions(n, 4) {
        let mut points = Vec::with_capacity(n);
        for (a, &m) in counts.iter().enumerate() {
            for s in 1..=m {
                points.push(Endpoint { arc: Arc::ALL[a], pos: s as f64 / (m + 1) as f64 });
            }
        }
        for mt in &matchings {
            let chords = mt.iter().map(|&(x, y)| Chord::new(points[x], points[y])).collect();
            out.push(ChordConfig { chords, closed_curves: 0 });
        }
    }
    out
}

fn compositions(n: usize, parts: usize) -> Vec<Vec<usize>> {
    if parts == 1 {
        return vec![vec![n]];
    }
    (0..=n)
        .flat_map(|first| {
            compositions(n - first, parts - 1).into_iter().map(move |mut rest| {
                rest.insert(0, first);
                rest
            })
        })
        .collect()
}

fn noncrossing_matchings(points: &[usize], acc: &mut Vec<(usize, usize)>, out: &mut Vec<Vec<(usize, usize)>>) {
    fn go(acc: &mut Vec<(usize, usize)>, rest: &mut Vec<Vec<usize>>, out: &mut Vec<Vec<(usize, usize)>>) {
        let Some(block) = rest.pop() else {
            out.push(acc.clone());
            return;
        };
        if block.is_empty() {
            go(acc, rest, out);
        } else {
            for j in (1..block.len()).step_by(2) {
                acc.push((block[0], block[j]));
                rest.push(block[1..j].to_vec());
                rest.push(block[j + 1..].to_vec());
                go(acc, rest, out);
                rest.pop();
                rest.pop();
                acc.pop();
            }
        }
        rest.push(block);
    }
    go(acc, &mut vec![points.to_vec()], out);
}

/// Random non-crossing config with up to `max_chords` chords: endpoints
/// uniform on the circle away from the marked points, matched by recursive
/// splitting.
pub fn random_config(rng: &mut impl Rng, max_chords: usize) -> ChordConfig {
    let k = rng.gen_range(0..=max_chords);
    let mut ts: Vec<f64> = Vec::with_capacity(2 * k);
    while ts.len() < 2 * k {
        let t: f64 = rng.gen_range(0.0..4.0);
        if t.fract() > 1e-6 && t.fract() < 1.0 - 1e-6 && ts.iter().all(|s| (s - t).abs() > 1e-9) {
            ts.push(t);
        }
    }
    ts.sort_by(f64::total_cmp);
    let mut chords = Vec::with_capacity(k);
    let mut stack = vec![(0usize, ts.len())];
    while let Some((lo, hi)) = stack.pop() {
        if hi <= lo {
            continue;
        }
        let j = lo + 1 + 2 * rng.gen_range(0..(hi - lo) / 2);
        let at = |t: f64| Endpoint { arc: Arc::ALL[t.floor() as usize], pos: t.fract() };
        chords.push(Chord::new(at(ts[lo]), at(ts[j])));
        stack.push((lo + 1, j));
        stack.push((j + 1, hi));
    }
    ChordConfig { chords, closed_curves: rng.gen_range(0..3) }
}

/// Random config satisfying the lemma's hypothesis: `b`-`d` chords removed.
pub fn random_admissible_config(rng: &mut impl Rng, max_chords: usize) -> ChordConfig {
    let mut c = random_config(rng, max_chords);
    c.chords.retain(|ch| !ch.joins(Arc::B, Arc::D));
    c
}
