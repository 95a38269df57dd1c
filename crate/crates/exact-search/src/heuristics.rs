//! Fast non-optimal builders: greedy vertex cover of the 3-AP hypergraph
//! and the two randomized insertion methods.

use apcore::ApSet;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RandomMethod {
    /// Insert the elements of a random permutation when they fit.
    Permute,
    /// Draw from the pool of still-insertable elements until it is empty.
    Pool,
}

/// Whether `x` forms a 3-AP with two members of `s` (membership in `inset`).
fn closes_ap(x: u64, s: &[u64], inset: &[bool]) -> bool {
    let has = |v: u64| (v as usize) < inset.len() && v >= 1 && inset[v as usize];
    s.iter().any(|&y| {
        let lo = y.min(x);
        let hi = y.max(x);
        (x + y).is_multiple_of(2) && has((x + y) / 2) || has(2 * hi - lo) || (2 * lo > hi && has(2 * lo - hi))
    })
}

fn fill_maximal(n: u64, mut chosen: Vec<u64>, order: &[u64]) -> ApSet {
    let mut inset = vec![false; n as usize + 1];
    for &x in &chosen {
        inset[x as usize] = true;
    }
    for &x in order {
        if !inset[x as usize] && !closes_ap(x, &chosen, &inset) {
            inset[x as usize] = true;
            chosen.push(x);
        }
    }
    ApSet::from_unsorted(n, chosen).expect("elements in range")
}

/// Complement of a greedy vertex cover: repeatedly removes a vertex of
/// largest degree in the 3-AP hypergraph (ties uniformly at random) until
/// no progression is left, then re-inserts removed vertices that still fit
/// so the result is maximal.
pub fn greedy_cover_set(n: u64, seed: u64) -> ApSet {
    let nn = n as usize;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut removed = vec![false; nn + 1];
    let mut deg = vec![0i64; nn + 1];
    let mut edges = 0i64;
    for x in 1..=nn {
        for z in (x + 2..=nn).step_by(2) {
            let y = (x + z) / 2;
            deg[x] += 1;
            deg[y] += 1;
            deg[z] += 1;
            edges += 1;
        }
    }
    let mut cover = Vec::new();
    while edges > 0 {
        let best = (1..=nn).filter(|&v| !removed[v]).map(|v| deg[v]).max().unwrap_or(0);
        let ties: Vec<usize> = (1..=nn).filter(|&v| !removed[v] && deg[v] == best).collect();
        let v = ties[rng.gen_range(0..ties.len())];
        // drop every live progression through v
        let mut live = |a: usize, b: usize| {
            if a >= 1 && b >= 1 && a <= nn && b <= nn && !removed[a] && !removed[b] {
                deg[a] -= 1;
                deg[b] -= 1;
                edges -= 1;
            }
        };
        for d in 1..=nn {
            if v + 2 * d <= nn {
                live(v + d, v + 2 * d);
            }
            if v > d && v + d <= nn {
                live(v - d, v + d);
            }
            if v > 2 * d {
                live(v - 2 * d, v - d);
            }
        }
        removed[v] = true;
        deg[v] = 0;
        cover.push(v as u64);
    }
    let kept: Vec<u64> = (1..=n).filter(|&v| !removed[v as usize]).collect();
    fill_maximal(n, kept, &cover)
}

/// Randomized 3-free set, deterministic for a given seed.
pub fn random_set(n: u64, seed: u64, method: RandomMethod) -> ApSet {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    match method {
        RandomMethod::Permute => {
            let mut order: Vec<u64> = (1..=n).collect();
            order.shuffle(&mut rng);
            fill_maximal(n, Vec::new(), &order)
        }
        RandomMethod::Pool => {
            let words = (n as usize + 64) / 64;
            let mut pool = vec![0u64; words];
            for x in 1..=n as usize {
                pool[x / 64] |= 1 << (x % 64);
            }
            let mut size = n as usize;
            let mut chosen: Vec<u64> = Vec::new();
            let drop = |pool: &mut Vec<u64>, size: &mut usize, v: u64| {
                if v >= 1 && v <= n && pool[v as usize / 64] >> (v % 64) & 1 == 1 {
                    pool[v as usize / 64] &= !(1 << (v % 64));
                    *size -= 1;
                }
            };
            while size > 0 {
                let mut r = rng.gen_range(0..size);
                let mut x = 0u64;
                for (w, &bits) in pool.iter().enumerate() {
                    let c = bits.count_ones() as usize;
                    if r < c {
                        let mut b = bits;
                        for _ in 0..r {
                            b &= b - 1;
                        }
                        x = (w * 64) as u64 + b.trailing_zeros() as u64;
                        break;
                    }
                    r -= c;
                }
                drop(&mut pool, &mut size, x);
                for &s in &chosen {
                    let (lo, hi) = (s.min(x), s.max(x));
                    drop(&mut pool, &mut size, 2 * hi - lo);
                    if 2 * lo > hi {
                        drop(&mut pool, &mut size, 2 * lo - hi);
                    }
                    if (lo + hi) % 2 == 0 {
                        drop(&mut pool, &mut size, (lo + hi) / 2);
                    }
                }
                chosen.push(x);
            }
            ApSet::from_unsorted(n, chosen).expect("elements in range")
        }
    }
}
