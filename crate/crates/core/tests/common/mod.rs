//! Independent oracles shared by the integration tests. They work on plain
//! edge-id lists and never call the library's own checks.

#![allow(dead_code)]

use std::time::{Duration, Instant};

use fulkerson_core::{CubicGraph, EdgeId, FulkersonCovering, MultiGraph, PerfectMatching};

pub fn ids(m: &PerfectMatching) -> Vec<EdgeId> {
    m.iter().collect()
}

pub fn covering_ids(f: &FulkersonCovering) -> Vec<Vec<EdgeId>> {
    f.matchings().iter().map(ids).collect()
}

/// Every vertex meets at most one edge of `set` (loops meet their vertex twice).
pub fn is_matching(g: &MultiGraph, set: &[EdgeId]) -> bool {
    let mut hit = vec![0usize; g.vertex_count()];
    for &e in set {
        let (u, v) = g.endpoints(e);
        hit[u] += 1;
        hit[v] += 1;
    }
    hit.iter().all(|&h| h <= 1)
}

pub fn is_perfect_matching(g: &MultiGraph, set: &[EdgeId]) -> bool {
    let mut hit = vec![0usize; g.vertex_count()];
    for &e in set {
        let (u, v) = g.endpoints(e);
        hit[u] += 1;
        hit[v] += 1;
    }
    hit.iter().all(|&h| h == 1)
}

pub fn coverage(g: &MultiGraph, sets: &[Vec<EdgeId>]) -> Vec<usize> {
    let mut c = vec![0; g.edge_count()];
    for s in sets {
        for &e in s {
            c[e] += 1;
        }
    }
    c
}

/// Six perfect matchings covering every edge exactly twice.
pub fn is_fulkerson_covering(g: &MultiGraph, sets: &[Vec<EdgeId>]) -> bool {
    sets.len() == 6 && sets.iter().all(|s| is_perfect_matching(g, s)) && coverage(g, sets).iter().all(|&c| c == 2)
}

pub fn pairwise_distinct(sets: &[Vec<EdgeId>]) -> bool {
    let mut sorted: Vec<Vec<EdgeId>> = sets
        .iter()
        .map(|s| {
            let mut s = s.clone();
            s.sort_unstable();
            s
        })
        .collect();
    sorted.sort();
    sorted.windows(2).all(|w| w[0] != w[1])
}

/// All perfect matchings by brute force over `n/2`-subsets of the edges.
pub fn brute_force_perfect_matchings(g: &MultiGraph) -> Vec<Vec<EdgeId>> {
    fn rec(g: &MultiGraph, start: EdgeId, need: usize, cur: &mut Vec<EdgeId>, out: &mut Vec<Vec<EdgeId>>) {
        if need == 0 {
            if is_perfect_matching(g, cur) {
                out.push(cur.clone());
            }
            return;
        }
        for e in start..g.edge_count() {
            if g.edge_count() - e < need {
                break;
            }
            cur.push(e);
            if is_matching(g, cur) {
                rec(g, e + 1, need - 1, cur, out);
            }
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(g, 0, g.vertex_count() / 2, &mut Vec::new(), &mut out);
    out
}

/// Edges of each coverage class 0, 1, 2 of three matchings.
pub fn t_classes(g: &MultiGraph, three: &[Vec<EdgeId>]) -> [Vec<EdgeId>; 3] {
    let c = coverage(g, three);
    let mut out: [Vec<EdgeId>; 3] = Default::default();
    for (e, &k) in c.iter().enumerate() {
        if k <= 2 {
            out[k].push(e);
        }
    }
    out
}

/// Proper 3-edge-colourability by brute force over colour assignments in
/// edge order; only for small graphs.
pub fn is_three_edge_colourable(g: &CubicGraph) -> bool {
    fn rec(g: &MultiGraph, e: usize, col: &mut Vec<u8>) -> bool {
        if e == g.edge_count() {
            return true;
        }
        let (u, v) = g.endpoints(e);
        if u == v {
            return false;
        }
        for c in 0..3u8 {
            let clash = g.incident(u).iter().chain(g.incident(v)).any(|&f| f < e && col[f] == c);
            if !clash {
                col[e] = c;
                if rec(g, e + 1, col) {
                    return true;
                }
            }
        }
        false
    }
    rec(g.graph(), 0, &mut vec![0; g.edge_count()])
}

pub fn timed<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let t = Instant::now();
    let r = f();
    (r, t.elapsed())
}

/// Six pairwise distinct perfect matchings covering every edge twice, by
/// trying every 6-subset of the brute-forced matchings.
pub fn brute_force_proper_covering(g: &MultiGraph) -> Option<Vec<Vec<EdgeId>>> {
    fn rec(g: &MultiGraph, pms: &[Vec<EdgeId>], from: usize, pick: &mut Vec<usize>) -> Option<Vec<Vec<EdgeId>>> {
        if pick.len() == 6 {
            let sets: Vec<Vec<EdgeId>> = pick.iter().map(|&i| pms[i].clone()).collect();
            return is_fulkerson_covering(g, &sets).then_some(sets);
        }
        for i in from..pms.len() {
            pick.push(i);
            let r = rec(g, pms, i + 1, pick);
            pick.pop();
            if r.is_some() {
                return r;
            }
        }
        None
    }
    rec(g, &brute_force_perfect_matchings(g), 0, &mut Vec::new())
}
