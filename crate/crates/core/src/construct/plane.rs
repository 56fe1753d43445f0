use super::field::gf;
use crate::designs::{classify, Design};
use crate::{Error, Result};

/// The affine plane `AG(2, q)`: points `GF(q)²` with `(x, y) ↦ x·q + y`,
/// lines `y = ax + b` followed by the verticals `x = c`.
pub fn affine_plane(q: u64) -> Result<Design> {
    let f = gf(q)?;
    let q = f.order();
    let mut blocks = Vec::with_capacity(q * q + q);
    for a in 0..q {
        for b in 0..q {
            blocks.push((0..q).map(|x| x * q + f.add(f.mul(a, x), b)).collect());
        }
    }
    for c in 0..q {
        blocks.push((0..q).map(|y| c * q + y).collect());
    }
    Design::new(q * q, q, 1, blocks)
}

/// The blow-up of `AG(2, q)`: every point `u` becomes `s` copies
/// `(u, i) ↦ u·s + i`, giving an `(sq², sq, 1)`-covering with `q² + q`
/// blocks.
pub fn blowup(q: u64, s: usize) -> Result<Design> {
    if s == 0 {
        return Err(Error::InvalidArgument("blow-up factor must be at least 1".into()));
    }
    let plane = affine_plane(q)?;
    let blocks = plane
        .blocks()
        .iter()
        .map(|line| line.iter().flat_map(|&u| (0..s).map(move |i| u * s + i)).collect())
        .collect();
    Design::new(plane.v() * s, plane.k() * s, 1, blocks)
}

/// Shrinks a covering to the points `0..v_target`. Each removed point in a
/// block is replaced by the smallest retained point not already in that
/// block, so the block count is unchanged and every retained pair stays
/// covered.
pub fn restrict_covering(d: &Design, v_target: usize) -> Result<Design> {
    if !classify(d).is_covering() {
        return Err(Error::InvalidArgument("input is not a covering".into()));
    }
    if v_target == d.v() {
        return Ok(d.clone());
    }
    if v_target > d.v() || v_target <= d.k() {
        return Err(Error::InvalidArgument(format!(
            "target {v_target} must lie in ({}, {}]",
            d.k(),
            d.v()
        )));
    }
    let mut blocks = Vec::with_capacity(d.len());
    for block in d.blocks() {
        let mut kept: Vec<usize> = block.iter().copied().filter(|&p| p < v_target).collect();
        let missing = d.k() - kept.len();
        let fill: Vec<usize> = (0..v_target).filter(|p| !kept.contains(p)).take(missing).collect();
        if fill.len() < missing {
            return Err(Error::Inconsistent("not enough retained points to refill a block".into()));
        }
        kept.extend(fill);
        blocks.push(kept);
    }
    let out = Design::new(v_target, d.k(), d.lambda(), blocks)?;
    if !classify(&out).is_covering() {
        return Err(Error::Inconsistent("restriction lost coverage".into()));
    }
    Ok(out)
}
