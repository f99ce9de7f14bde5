//! Seeded pole-free parameter generation.

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::scalar::{Coupling, Scalar};
use crate::varsets::VarSet;
use crate::Rat;

/// Largest numerator magnitude of a drawn rational.
pub const MAX_NUMERATOR: i64 = 40;
/// Largest denominator of a drawn rational.
pub const MAX_DENOMINATOR: i64 = 8;
/// Rejections tolerated before giving up.
pub const MAX_REJECTIONS: usize = 10_000;

/// Generator for the case identified by `stream` under `seed`.
pub fn case_rng(seed: u64, stream: &str) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(fnv1a(stream.as_bytes()));
    rng
}

fn fnv1a(bytes: &[u8]) -> u64 {
    bytes.iter().fold(0xcbf2_9ce4_8422_2325, |h, &b| {
        (h ^ u64::from(b)).wrapping_mul(0x0100_0000_01b3)
    })
}

fn admissible(x: &Rat, others: &[Rat], c: &Rat) -> bool {
    others.iter().all(|y| {
        let d = x.clone() - y.clone();
        !d.is_zero() && &d != c && d != -c.clone()
    })
}

/// Draws `sizes.iter().sum()` rationals whose pairwise differences, and
/// differences against every anchor, avoid `{0, c, -c}`, and splits them
/// into consecutive groups of the given sizes.
pub fn draw_groups(
    rng: &mut ChaCha8Rng,
    sizes: &[usize],
    c: &Coupling<Rat>,
    anchors: &[Rat],
) -> Result<Vec<Vec<Rat>>> {
    let total: usize = sizes.iter().sum();
    let mut taken: Vec<Rat> = anchors.to_vec();
    let mut rejections = 0;
    while taken.len() < anchors.len() + total {
        let p = rng.gen_range(-MAX_NUMERATOR..=MAX_NUMERATOR);
        let q = rng.gen_range(1..=MAX_DENOMINATOR);
        let x = Rat::ratio(p, q);
        if admissible(&x, &taken, c.value()) {
            taken.push(x);
        } else {
            rejections += 1;
            if rejections > MAX_REJECTIONS {
                return Err(Error::Exhaustion(rejections));
            }
        }
    }
    let mut rest = taken.split_off(anchors.len()).into_iter();
    Ok(sizes
        .iter()
        .map(|&n| rest.by_ref().take(n).collect())
        .collect())
}

/// `count` pole-free rationals drawn from the generator seeded by `seed`.
pub fn draw_parameters(
    seed: u64,
    count: usize,
    c: &Coupling<Rat>,
    anchors: &[Rat],
) -> Result<VarSet<Rat>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut groups = draw_groups(&mut rng, &[count], c, anchors)?;
    VarSet::new(groups.pop().unwrap_or_default())
}
