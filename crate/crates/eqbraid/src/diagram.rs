//! Planar-diagram (PD) codes of braid closures.
//!
//! The closure of a word on `n` strands is drawn with all strands oriented
//! upward through the braid and closed around the axis, so every component
//! runs counterclockwise. Each letter becomes one crossing; each crossing
//! stores its four arc labels counterclockwise starting at the incoming
//! under-strand, plus the crossing sign (`σ_i` positive, `σ_i⁻¹` negative).
//!
//! Arc labels are assigned by scanning the crossings in word order and
//! numbering classes at first occurrence, after the closure has identified
//! each top endpoint with the bottom endpoint below it. Strand positions no
//! letter touches close into crossingless loops, counted separately.

use crate::braid::BraidWord;
use crate::util::UnionFind;
use std::fmt;

/// One crossing: arc labels counterclockwise from the incoming under-strand,
/// and the sign.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Crossing {
    pub arcs: [usize; 4],
    pub sign: i8,
}

/// An oriented link diagram as a PD code.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LinkDiagram {
    crossings: Vec<Crossing>,
    arc_count: usize,
    free_loops: usize,
}

impl LinkDiagram {
    /// The closure diagram of a braid word.
    pub fn closure_of_word(w: &BraidWord) -> LinkDiagram {
        let n = w.strands();
        // Arc ids 0..n-1 are the bottom endpoints; crossings allocate two
        // fresh outgoing ids each, so `current[pos] == pos` iff the position
        // was never crossed.
        let mut current: Vec<usize> = (0..n).collect();
        let mut next_id = n;
        let mut raw: Vec<([usize; 4], i8)> = Vec::with_capacity(w.len());
        for l in w.letters() {
            let i = l.index() - 1;
            let (u, v) = (current[i], current[i + 1]);
            let (p, q) = (next_id, next_id + 1); // outgoing left, right
            next_id += 2;
            if l.is_positive() {
                // Under-strand enters bottom-right; ccw: v, q, p, u.
                raw.push(([v, q, p, u], 1));
            } else {
                // Under-strand enters bottom-left; ccw: u, v, q, p.
                raw.push(([u, v, q, p], -1));
            }
            current[i] = p;
            current[i + 1] = q;
        }

        let mut uf = UnionFind::new(next_id);
        let mut free_loops = 0;
        for (pos, &next) in current.iter().enumerate().take(n) {
            if next == pos {
                free_loops += 1;
            } else {
                uf.union(pos, next);
            }
        }

        let mut label_of = vec![0usize; next_id]; // 1-based; 0 = unassigned
        let mut arc_count = 0;
        let crossings = raw
            .into_iter()
            .map(|(ids, sign)| {
                let mut arcs = [0usize; 4];
                for (slot, id) in arcs.iter_mut().zip(ids) {
                    let root = uf.find(id);
                    if label_of[root] == 0 {
                        arc_count += 1;
                        label_of[root] = arc_count;
                    }
                    *slot = label_of[root];
                }
                Crossing { arcs, sign }
            })
            .collect();

        LinkDiagram {
            crossings,
            arc_count,
            free_loops,
        }
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    /// Number of labeled arcs (crossingless loops carry no label).
    pub fn arc_count(&self) -> usize {
        self.arc_count
    }

    /// Closed components that pass through no crossing.
    pub fn free_loops(&self) -> usize {
        self.free_loops
    }

    /// Sum of crossing signs.
    pub fn writhe(&self) -> i64 {
        self.crossings.iter().map(|c| c.sign as i64).sum()
    }

    /// Checks PD well-formedness: every arc label in `1..=arc_count`
    /// appears exactly twice across the crossing tuples.
    pub fn is_well_formed(&self) -> bool {
        let mut seen = vec![0usize; self.arc_count + 1];
        for c in &self.crossings {
            for &a in &c.arcs {
                if a == 0 || a > self.arc_count {
                    return false;
                }
                seen[a] += 1;
            }
        }
        seen[1..].iter().all(|&k| k == 2)
    }

    /// Builds a diagram from explicit crossings (reference fixtures).
    /// Labels must form `1..=arc_count` with each appearing twice.
    pub fn from_crossings(crossings: Vec<Crossing>, free_loops: usize) -> Option<LinkDiagram> {
        let arc_count = crossings.iter().flat_map(|c| c.arcs).max().unwrap_or(0);
        let d = LinkDiagram {
            crossings,
            arc_count,
            free_loops,
        };
        d.is_well_formed().then_some(d)
    }
}

impl fmt::Display for LinkDiagram {
    /// One line per crossing, `X a b c d ±`, then one `O` line per
    /// crossingless loop.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.crossings {
            let sign = if c.sign > 0 { '+' } else { '-' };
            writeln!(
                f,
                "X {} {} {} {} {}",
                c.arcs[0], c.arcs[1], c.arcs[2], c.arcs[3], sign
            )?;
        }
        for _ in 0..self.free_loops {
            writeln!(f, "O")?;
        }
        Ok(())
    }
}
