//! Deterministic instance generation. Every draw comes from a ChaCha12
//! stream seeded by the user's 64-bit seed, and the parameters are recorded
//! in the file so runs are reproducible.

use crate::file::{FileError, InstanceFile, Kind, Payload, Provenance};
use rand::prelude::IndexedRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha12Rng;
use std::collections::BTreeMap;
use strred::Symbol;

pub const GENERATOR_ID: &str = "chacha12";

#[derive(Debug, Clone, Copy)]
pub struct GenParams {
    pub n: usize,
    pub k: usize,
    pub m: usize,
    pub sigma: Symbol,
    pub seed: u64,
    pub periodic_rich: bool,
}

impl GenParams {
    fn provenance(&self) -> Provenance {
        let mut params = BTreeMap::new();
        params.insert("n".into(), self.n.to_string());
        params.insert("k".into(), self.k.to_string());
        params.insert("m".into(), self.m.to_string());
        params.insert("sigma".into(), self.sigma.to_string());
        params.insert("periodic_rich".into(), self.periodic_rich.to_string());
        Provenance { generator: GENERATOR_ID.into(), seed: self.seed, params }
    }
}

pub fn generate(kind: Kind, p: &GenParams) -> Result<InstanceFile, FileError> {
    if p.n == 0 {
        return Err(FileError::Malformed("--n must be positive".into()));
    }
    if p.sigma < 2 {
        return Err(FileError::Malformed("--sigma must be at least 2".into()));
    }
    let mut rng = ChaCha12Rng::seed_from_u64(p.seed);
    let payload = match kind {
        Kind::Dm => gen_dm(p, &mut rng)?,
        Kind::Sn => gen_sn(p, &mut rng)?,
        Kind::Rps => gen_rps(p, &mut rng),
        Kind::Cci => gen_cci(p, &mut rng),
        Kind::Ci => gen_ci(p, &mut rng),
        Kind::Text => gen_text(p, &mut rng),
    };
    let file = InstanceFile {
        kind,
        sigma: p.sigma,
        payload,
        provenance: Some(p.provenance()),
        reduction: None,
    };
    file.validate()?;
    Ok(file)
}

fn random_string(rng: &mut ChaCha12Rng, len: usize, sigma: Symbol) -> Vec<Symbol> {
    (0..len).map(|_| rng.random_range(0..sigma)).collect()
}

/// Plants a run of period 1..=3 and length >= 3m (clipped to the text).
fn plant_run(text: &mut [Symbol], m: usize, sigma: Symbol, rng: &mut ChaCha12Rng) {
    let period = rng.random_range(1..=3usize);
    let want = (3 * m.max(1)).max(6);
    let len = want.min(text.len());
    let start = rng.random_range(0..=text.len() - len);
    let seed: Vec<Symbol> = (0..period).map(|_| rng.random_range(0..sigma)).collect();
    for (i, c) in text[start..start + len].iter_mut().enumerate() {
        *c = seed[i % period];
    }
}

fn gen_dm(p: &GenParams, rng: &mut ChaCha12Rng) -> Result<Payload, FileError> {
    let distinct_cap = (p.sigma as u128).checked_pow(p.m as u32);
    if p.k > 0 && p.m == 0 {
        return Err(FileError::Malformed("--m must be positive when --k > 0".into()));
    }
    if let Some(cap) = distinct_cap {
        if (p.k as u128) > cap {
            return Err(FileError::Malformed(format!(
                "infeasible parameters: only {cap} distinct patterns of length {} exist over sigma={}",
                p.m, p.sigma
            )));
        }
    }
    let mut text = random_string(rng, p.n, p.sigma);
    if p.periodic_rich {
        plant_run(&mut text, p.m, p.sigma, rng);
    }
    let mut patterns: Vec<Vec<Symbol>> = Vec::with_capacity(p.k);
    while patterns.len() < p.k {
        // Mix of pattern sources: fresh random, substrings of the text
        // (likely occurring), and near-misses of substrings.
        let style = rng.random_range(0..4u8);
        let mut pat = if style > 0 && p.m <= text.len() {
            let at = rng.random_range(0..=text.len() - p.m);
            let mut s = text[at..at + p.m].to_vec();
            if style == 3 {
                let flip = rng.random_range(0..s.len());
                s[flip] = (s[flip] + 1 + rng.random_range(0..p.sigma - 1)) % p.sigma;
            }
            s
        } else {
            random_string(rng, p.m, p.sigma)
        };
        if patterns.contains(&pat) {
            // Resample deterministically until fresh; feasibility was checked.
            pat = random_string(rng, p.m, p.sigma);
            if patterns.contains(&pat) {
                continue;
            }
        }
        patterns.push(pat);
    }
    Ok(Payload::Dm { text, patterns })
}

fn gen_sn(p: &GenParams, rng: &mut ChaCha12Rng) -> Result<Payload, FileError> {
    if p.m == 0 {
        return Err(FileError::Malformed("--m must be positive".into()));
    }
    let np = p.n.max(1);
    let pairs_p: Vec<(Vec<Symbol>, Vec<Symbol>)> = (0..np)
        .map(|_| (random_string(rng, p.m, p.sigma), random_string(rng, p.m, p.sigma)))
        .collect();
    let pairs_q = (0..p.k.max(1))
        .map(|_| {
            let split = rng.random_range(0..=p.m);
            if rng.random_bool(0.5) {
                // Derive from a stored pair so YES instances are common.
                let (x, y) = pairs_p.choose(rng).expect("nonempty");
                (x[p.m - split..].to_vec(), y[..p.m - split].to_vec())
            } else {
                (random_string(rng, split, p.sigma), random_string(rng, p.m - split, p.sigma))
            }
        })
        .collect();
    Ok(Payload::Sn { m: p.m, pairs_p, pairs_q })
}

fn gen_rps(p: &GenParams, rng: &mut ChaCha12Rng) -> Payload {
    let count = p.n.max(1);
    let len = p.m.max(1);
    let strings: Vec<Vec<Symbol>> =
        (0..count).map(|_| random_string(rng, len, p.sigma)).collect();
    let queries = (0..p.k.max(1))
        .map(|_| {
            let a = rng.random_range(0..=count);
            let b = rng.random_range(0..=count);
            let qlen = rng.random_range(0..=len);
            let pattern = if rng.random_bool(0.5) {
                strings.choose(rng).expect("nonempty")[..qlen].to_vec()
            } else {
                random_string(rng, qlen, p.sigma)
            };
            (a.min(b), a.max(b), pattern)
        })
        .collect();
    Payload::Rps { strings, queries }
}

fn gen_cci(p: &GenParams, rng: &mut ChaCha12Rng) -> Payload {
    let colors = (0..p.n).map(|_| rng.random_range(0..2u8)).collect();
    let values = (0..p.n).map(|_| rng.random_range(0..p.n as u64)).collect();
    Payload::Cci { colors, values, values_sub: None }
}

fn gen_ci(p: &GenParams, rng: &mut ChaCha12Rng) -> Payload {
    let array = (0..p.n).map(|_| rng.random_range(0..p.n as u64)).collect();
    Payload::Ci { coeffs: vec![1], arrays: vec![array] }
}

fn gen_text(p: &GenParams, rng: &mut ChaCha12Rng) -> Payload {
    let mut text = random_string(rng, p.n, p.sigma);
    if p.periodic_rich {
        plant_run(&mut text, p.m, p.sigma, rng);
    }
    Payload::Texts { texts: vec![text] }
}
