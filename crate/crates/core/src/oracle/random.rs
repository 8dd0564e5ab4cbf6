//! Seeded generators of X-states.
//!
//! Every profile draws from `ChaCha8Rng::seed_from_u64(seed)` with its own stream id
//! (`set_stream`): product_mixture = 1, random_ppt = 2, near_boundary = 3,
//! random_rank(k) = 16 + k. Identical seed and profile give identical states.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::f64::consts::TAU;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::product::ProductVector;
use crate::state::{XState, DEFAULT_TOL};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProfileKind {
    /// X-parts of random convex mixtures of up to 16 product states.
    ProductMixture,
    /// Positive X-states with `min √(a_i b_i) ≥ R`.
    RandomPpt,
    /// PPT states with `R / Δ` drawn from `[0.95, 1]`.
    NearBoundary,
    /// Positive X-states with block-rank total `k`.
    RandomRank(usize),
}

impl ProfileKind {
    fn stream(self) -> u64 {
        match self {
            ProfileKind::ProductMixture => 1,
            ProfileKind::RandomPpt => 2,
            ProfileKind::NearBoundary => 3,
            ProfileKind::RandomRank(k) => 16 + k as u64,
        }
    }
}

impl fmt::Display for ProfileKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ProfileKind::ProductMixture => f.write_str("product_mixture"),
            ProfileKind::RandomPpt => f.write_str("random_ppt"),
            ProfileKind::NearBoundary => f.write_str("near_boundary"),
            ProfileKind::RandomRank(k) => write!(f, "random_rank({k})"),
        }
    }
}

impl FromStr for ProfileKind {
    type Err = Error;

    /// Accepts `product_mixture`, `random_ppt`, `near_boundary`, `random_rank(k)` and
    /// `random_rank:k`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        match s {
            "product_mixture" => return Ok(ProfileKind::ProductMixture),
            "random_ppt" => return Ok(ProfileKind::RandomPpt),
            "near_boundary" => return Ok(ProfileKind::NearBoundary),
            _ => {}
        }
        let arg = s
            .strip_prefix("random_rank(")
            .and_then(|r| r.strip_suffix(')'))
            .or_else(|| s.strip_prefix("random_rank:"))
            .ok_or_else(|| Error::InvalidProfile(s.to_string()))?;
        let k: usize = arg.trim().parse().map_err(|_| Error::InvalidProfile(s.to_string()))?;
        if k > 8 {
            return Err(Error::InvalidProfile(format!("rank {k} exceeds 8")));
        }
        Ok(ProfileKind::RandomRank(k))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RandomProfile {
    pub kind: ProfileKind,
    pub seed: u64,
    pub count: usize,
}

impl RandomProfile {
    pub fn new(kind: ProfileKind, seed: u64, count: usize) -> Self {
        RandomProfile { kind, seed, count }
    }
}

fn phase(rng: &mut ChaCha8Rng) -> Complex64 {
    Complex64::from_polar(1.0, rng.random_range(0.0..TAU))
}

fn complex_in_square(rng: &mut ChaCha8Rng) -> Complex64 {
    Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0))
}

/// Product vector with independent uniform components in the unit square.
pub fn random_product_vector(rng: &mut ChaCha8Rng) -> ProductVector {
    let mut q = || [complex_in_square(rng), complex_in_square(rng)];
    let (x, y, z) = (q(), q(), q());
    ProductVector::new(x, y, z)
}

fn diagonal(rng: &mut ChaCha8Rng) -> ([f64; 4], [f64; 4]) {
    let mut a = [0.0; 4];
    let mut b = [0.0; 4];
    for i in 0..4 {
        a[i] = rng.random_range(0.05..1.0);
        b[i] = rng.random_range(0.05..1.0);
    }
    (a, b)
}

fn product_mixture(rng: &mut ChaCha8Rng) -> XState {
    let k = rng.random_range(1..=16usize);
    let weights: Vec<f64> = (0..k).map(|_| rng.random_range(0.01..1.0)).collect();
    let total: f64 = weights.iter().sum();
    let mut a = [0.0; 4];
    let mut b = [0.0; 4];
    let mut c = [Complex64::new(0.0, 0.0); 4];
    for w in weights {
        let v = random_product_vector(rng).normalized();
        let x = v.xpart(DEFAULT_TOL);
        for i in 0..4 {
            a[i] += w / total * x.a()[i];
            b[i] += w / total * x.b()[i];
            c[i] += x.c()[i] * (w / total);
        }
    }
    XState::raw(a, b, c, DEFAULT_TOL)
}

fn random_ppt(rng: &mut ChaCha8Rng) -> XState {
    let (a, b) = diagonal(rng);
    let cap = (0..4).map(|i| (a[i] * b[i]).sqrt()).fold(f64::INFINITY, f64::min);
    let c = std::array::from_fn(|_| phase(rng) * (cap * rng.random_range(0.0..1.0)));
    XState::raw(a, b, c, DEFAULT_TOL)
}

fn near_boundary(rng: &mut ChaCha8Rng) -> XState {
    let (a, b) = diagonal(rng);
    let mags: [f64; 4] = std::array::from_fn(|_| rng.random_range(0.2..1.0));
    let ratio = rng.random_range(0.95..1.0);
    let raw = XState::raw(a, b, [Complex64::new(0.0, 0.0); 4], DEFAULT_TOL);
    let top = mags.iter().copied().fold(0.0, f64::max);
    let s = ratio * raw.delta() / top;
    let c = std::array::from_fn(|i| phase(rng) * (mags[i] * s));
    XState::raw(a, b, c, DEFAULT_TOL)
}

fn random_rank(rng: &mut ChaCha8Rng, k: usize) -> XState {
    let (mut a, mut b) = diagonal(rng);
    let mut c = [Complex64::new(0.0, 0.0); 4];
    // choose which blocks take which rank
    let mut order = [0usize, 1, 2, 3];
    for i in (1..4).rev() {
        let j = rng.random_range(0..=i);
        order.swap(i, j);
    }
    let ranks: [usize; 4] = if k >= 4 {
        let mut r = [1; 4];
        for &blk in order.iter().take(k - 4) {
            r[blk] = 2;
        }
        r
    } else {
        let mut r = [0; 4];
        for &blk in order.iter().take(k) {
            r[blk] = 1;
        }
        r
    };
    for i in 0..4 {
        match ranks[i] {
            0 => {
                a[i] = 0.0;
                b[i] = 0.0;
            }
            1 => c[i] = phase(rng) * (a[i] * b[i]).sqrt(),
            _ => c[i] = phase(rng) * ((a[i] * b[i]).sqrt() * rng.random_range(0.0..0.9)),
        }
    }
    XState::raw(a, b, c, DEFAULT_TOL)
}

pub fn rng_for(kind: ProfileKind, seed: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(kind.stream());
    rng
}

pub fn random_states(profile: &RandomProfile) -> Result<Vec<XState>> {
    if let ProfileKind::RandomRank(k) = profile.kind {
        if k > 8 {
            return Err(Error::InvalidProfile(format!("rank {k} exceeds 8")));
        }
    }
    let mut rng = rng_for(profile.kind, profile.seed);
    Ok((0..profile.count)
        .map(|_| match profile.kind {
            ProfileKind::ProductMixture => product_mixture(&mut rng),
            ProfileKind::RandomPpt => random_ppt(&mut rng),
            ProfileKind::NearBoundary => near_boundary(&mut rng),
            ProfileKind::RandomRank(k) => random_rank(&mut rng, k),
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_profiles() {
        assert_eq!("product_mixture".parse::<ProfileKind>(), Ok(ProfileKind::ProductMixture));
        assert_eq!("random_rank(6)".parse::<ProfileKind>(), Ok(ProfileKind::RandomRank(6)));
        assert_eq!("random_rank:4".parse::<ProfileKind>(), Ok(ProfileKind::RandomRank(4)));
        assert!("random_rank(9)".parse::<ProfileKind>().is_err());
        assert!("uniform".parse::<ProfileKind>().is_err());
        for k in [ProfileKind::NearBoundary, ProfileKind::RandomRank(5)] {
            assert_eq!(k.to_string().parse::<ProfileKind>(), Ok(k));
        }
    }

    #[test]
    fn deterministic() {
        let p = RandomProfile::new(ProfileKind::ProductMixture, 7, 3);
        assert_eq!(random_states(&p).unwrap(), random_states(&p).unwrap());
        let q = RandomProfile::new(ProfileKind::ProductMixture, 8, 3);
        assert_ne!(random_states(&p).unwrap(), random_states(&q).unwrap());
    }

    #[test]
    fn ranks_hit_target() {
        for k in 0..=8 {
            let states = random_states(&RandomProfile::new(ProfileKind::RandomRank(k), 11, 50)).unwrap();
            for s in states {
                assert_eq!(s.rank(), Ok(k), "{s:?}");
            }
        }
    }

    #[test]
    fn ppt_profiles_are_ppt() {
        for kind in [ProfileKind::RandomPpt, ProfileKind::NearBoundary, ProfileKind::ProductMixture] {
            for s in random_states(&RandomProfile::new(kind, 3, 200)).unwrap() {
                assert_eq!(s.is_ppt(), Ok(true), "{kind}: {s:?}");
            }
        }
    }

    #[test]
    fn near_boundary_ratio() {
        for s in random_states(&RandomProfile::new(ProfileKind::NearBoundary, 5, 100)).unwrap() {
            let ratio = s.big_r() / s.delta();
            assert!((0.95 - 1e-12..=1.0 + 1e-12).contains(&ratio));
        }
    }
}
