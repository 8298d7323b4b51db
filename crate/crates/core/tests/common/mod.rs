//! Shared corpus and reference implementations for integration tests.
#![allow(dead_code)]

use hiker::{Coloring, ColoringKind};

/// 1000 seeded random colorings: n in {1, 2}, r in {2, 3}, N up to 10.
pub fn random_corpus() -> Vec<Coloring> {
    (0..1000u64)
        .map(|i| {
            let n = 1 + (i % 2) as usize;
            let r = 2 + ((i / 2) % 2) as u32;
            let span = (10 - n) as u64;
            let ground = n + 1 + ((i / 4) % span) as usize;
            Coloring::generate(&ColoringKind::Random { seed: 0x5eed_0000 + i }, ground, n + 1, r).unwrap()
        })
        .collect()
}

/// Random corpus plus constant and parity colorings of the same shapes.
pub fn full_corpus() -> Vec<Coloring> {
    let mut corpus = random_corpus();
    for t in 2..=3 {
        for ground in t..=10 {
            corpus.push(Coloring::generate(&ColoringKind::Constant(0), ground, t, 2).unwrap());
            corpus.push(Coloring::generate(&ColoringKind::Constant(1), ground, t, 3).unwrap());
            corpus.push(Coloring::generate(&ColoringKind::Parity, ground, t, 2).unwrap());
        }
    }
    corpus
}

fn color_with(c: &Coloring, base: &[usize], extra: usize) -> u32 {
    let mut v = base.to_vec();
    v.push(extra);
    v.sort_unstable();
    c.color_of(&v).unwrap()
}

/// Track construction that rescans every unused point from 0 at each step.
pub fn naive_track(c: &Coloring, dest: usize) -> Vec<usize> {
    let n = c.tuple_size() - 1;
    if dest < n {
        return (0..=dest).collect();
    }
    let mut points: Vec<usize> = (0..n).collect();
    loop {
        let subsets = index_subsets(points.len(), n);
        let y = (0..c.ground_size())
            .filter(|y| !points.contains(y))
            .find(|&y| {
                subsets.iter().all(|s| {
                    let base: Vec<usize> = s.iter().map(|&g| points[g]).collect();
                    color_with(c, &base, y) == color_with(c, &base, dest)
                })
            })
            .expect("the destination always qualifies");
        points.push(y);
        if y == dest {
            return points;
        }
    }
}

/// All k-subsets of {0..n-1} by recursion.
pub fn index_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// End-homogeneity straight from the definition.
pub fn brute_end_homogeneous(c: &Coloring, w: &[usize]) -> bool {
    let n = c.tuple_size() - 1;
    index_subsets(w.len(), n + 2).iter().all(|beta| {
        let base: Vec<usize> = beta[..n].iter().map(|&b| w[b]).collect();
        color_with(c, &base, w[beta[n]]) == color_with(c, &base, w[beta[n + 1]])
    })
}

/// Whether any increasing sequence of length k is end-homogeneous.
pub fn brute_has_witness(c: &Coloring, k: usize) -> bool {
    index_subsets(c.ground_size(), k).iter().any(|w| brute_end_homogeneous(c, w))
}

/// Every coloring of [ground]^t with r colors.
pub fn all_colorings(ground: usize, t: usize, r: u32) -> Vec<Coloring> {
    let positions = index_subsets(ground, t).len();
    let total = (r as u64).pow(positions as u32);
    (0..total)
        .map(|mut idx| {
            let mut colors = vec![0u32; positions];
            for slot in colors.iter_mut() {
                *slot = (idx % r as u64) as u32;
                idx /= r as u64;
            }
            Coloring::new(ground, t, r, colors).unwrap()
        })
        .collect()
}
