//! Seeded graph generators for experiments and test corpora.
//!
//! `gen_gnp` walks the pair space with geometric gaps, so generation is
//! O(n + m) and the criterion-style sweeps up to 1e5 vertices stay cheap.
//! `gen_power_law` samples a discrete power-law degree sequence by inverse
//! CDF and realizes it with a configuration model, repairing self-loops and
//! duplicate pairs by edge swaps against randomly chosen good pairs.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::HashSet;

use crate::{Error, Graph};

/// Erdős–Rényi G(n, p); identical seeds give identical graphs.
pub fn gen_gnp(n: u32, p: f64, seed: u64) -> Graph {
    assert!((0.0..=1.0).contains(&p), "p outside [0, 1]");
    let mut edges = Vec::new();
    if n < 2 || p <= 0.0 {
        return Graph::empty(n);
    }
    if p >= 1.0 {
        for u in 1..=n {
            for v in (u + 1)..=n {
                edges.push((u, v));
            }
        }
        return Graph::from_edges(n, &edges).expect("complete graph is simple");
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let log_q = (1.0 - p).ln();
    // Skip over non-edges in one geometric jump per edge (0-based walk over
    // pairs (w, v) with w < v).
    let mut v: u32 = 1;
    let mut w: i64 = -1;
    while v < n {
        let r: f64 = rng.gen();
        w += 1 + ((1.0 - r).ln() / log_q).floor() as i64;
        while w >= v as i64 && v < n {
            w -= v as i64;
            v += 1;
        }
        if v < n {
            edges.push((w as u32 + 1, v + 1));
        }
    }
    Graph::from_edges(n, &edges).expect("generator emits unique simple pairs")
}

/// Parameters for a discrete power-law degree sequence: degrees in
/// `[d_min, d_max]` drawn with probability proportional to `d^-alpha`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DegreeSequenceSpec {
    pub n: u32,
    pub d_min: u32,
    pub d_max: u32,
    pub alpha: f64,
    pub seed: u64,
}

impl DegreeSequenceSpec {
    fn validate(&self) -> Result<(), Error> {
        if self.n < 2
            || self.d_min < 1
            || self.d_min > self.d_max
            || self.d_max > self.n - 1
            || !self.alpha.is_finite()
            || self.alpha <= 0.0
        {
            return Err(Error::Ungraphable);
        }
        Ok(())
    }

    /// Expected degree under the truncated distribution — handy for sizing
    /// a target edge count.
    pub fn expected_degree(&self) -> f64 {
        let mut num = 0.0;
        let mut den = 0.0;
        for d in self.d_min..=self.d_max {
            let w = (d as f64).powf(-self.alpha);
            num += d as f64 * w;
            den += w;
        }
        num / den
    }
}

/// The target degree sequence `gen_power_law` will try to realize: inverse
/// CDF sampling, then one random degree bumped if the sum is odd.
pub fn sample_degrees(spec: &DegreeSequenceSpec) -> Result<Vec<u32>, Error> {
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    sample_degrees_with(spec, &mut rng)
}

fn sample_degrees_with(spec: &DegreeSequenceSpec, rng: &mut ChaCha8Rng) -> Result<Vec<u32>, Error> {
    spec.validate()?;
    let mut cdf = Vec::with_capacity((spec.d_max - spec.d_min + 1) as usize);
    let mut total = 0.0;
    for d in spec.d_min..=spec.d_max {
        total += (d as f64).powf(-spec.alpha);
        cdf.push(total);
    }
    let mut deg: Vec<u32> = (0..spec.n)
        .map(|_| {
            let r: f64 = rng.gen::<f64>() * total;
            let i = cdf.partition_point(|&c| c < r);
            spec.d_min + (i as u32).min(spec.d_max - spec.d_min)
        })
        .collect();
    if deg.iter().map(|&d| d as u64).sum::<u64>() % 2 == 1 {
        // Make the stub count even; keep the bump inside the cap if we can.
        for _ in 0..10 * spec.n as usize {
            let i = rng.gen_range(0..spec.n as usize);
            if deg[i] < spec.d_max {
                deg[i] += 1;
                return Ok(deg);
            }
        }
        match deg.iter().position(|&d| d < spec.n - 1) {
            Some(i) => deg[i] += 1,
            None => return Err(Error::Ungraphable),
        }
    }
    Ok(deg)
}

/// Power-law random graph via the configuration model. The realized degrees
/// track the sampled targets to within ±2 per vertex (unresolved conflict
/// pairs are dropped after bounded rewiring); worse misses are an error.
pub fn gen_power_law(spec: &DegreeSequenceSpec) -> Result<Graph, Error> {
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let target = sample_degrees_with(spec, &mut rng)?;

    let mut stubs: Vec<u32> = Vec::new();
    for (i, &d) in target.iter().enumerate() {
        stubs.extend(std::iter::repeat(i as u32).take(d as usize));
    }
    stubs.shuffle(&mut rng);

    let norm = |a: u32, b: u32| if a < b { (a, b) } else { (b, a) };
    let mut set: HashSet<(u32, u32)> = HashSet::with_capacity(stubs.len() / 2);
    let mut good: Vec<(u32, u32)> = Vec::with_capacity(stubs.len() / 2);
    let mut bad: Vec<(u32, u32)> = Vec::new();
    for pair in stubs.chunks_exact(2) {
        let (a, b) = (pair[0], pair[1]);
        if a == b || !set.insert(norm(a, b)) {
            bad.push((a, b));
        } else {
            good.push(norm(a, b));
        }
    }

    // Swap conflicting pairs against random good pairs: (u,v)+(a,b) becomes
    // (u,a)+(v,b) when both new pairs are fresh. Degrees are preserved, one
    // conflict disappears per successful swap.
    for _pass in 0..200 {
        if bad.is_empty() {
            break;
        }
        let mut still = Vec::new();
        'conflicts: for &(u, v) in &bad {
            for _ in 0..100 {
                if good.is_empty() {
                    break;
                }
                let j = rng.gen_range(0..good.len());
                let (a, b) = good[j];
                let first = if rng.gen_bool(0.5) {
                    [[(u, a), (v, b)], [(u, b), (v, a)]]
                } else {
                    [[(u, b), (v, a)], [(u, a), (v, b)]]
                };
                for cand in first {
                    let [(x1, y1), (x2, y2)] = cand;
                    if x1 == y1 || x2 == y2 {
                        continue;
                    }
                    let (e1, e2) = (norm(x1, y1), norm(x2, y2));
                    if e1 == e2 || set.contains(&e1) || set.contains(&e2) {
                        continue;
                    }
                    set.remove(&(a, b));
                    set.insert(e1);
                    set.insert(e2);
                    good[j] = e1;
                    good.push(e2);
                    continue 'conflicts;
                }
            }
            still.push((u, v));
        }
        bad = still;
    }

    let mut realized = vec![0u32; spec.n as usize];
    for &(a, b) in &good {
        realized[a as usize] += 1;
        realized[b as usize] += 1;
    }
    let deviation = target
        .iter()
        .zip(&realized)
        .map(|(&t, &r)| t.abs_diff(r))
        .max()
        .unwrap_or(0);
    if deviation > 2 {
        return Err(Error::Ungraphable);
    }

    let edges: Vec<(u32, u32)> = good.iter().map(|&(a, b)| (a + 1, b + 1)).collect();
    Graph::from_edges(spec.n, &edges)
}
