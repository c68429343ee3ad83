//! Weight- and parts-preserving bijection between reduced anti-palindromic
//! representatives and Arndt compositions.
//!
//! The `i`-th mirrored pair `(σ_i, σ_{ℓ-i+1})` of a representative, taken from
//! the outside in, becomes the `i`-th adjacent pair of the Arndt composition.
//! An odd middle part goes last.

use crate::composition::Composition;
use crate::error::{Error, Result};

pub fn reduced_ap_to_arndt(sigma: &Composition) -> Result<Composition> {
    if !sigma.is_reduced_ap_representative() {
        return Err(Error::NotReducedRepresentative(sigma.parts().to_vec()));
    }
    let parts = sigma.parts();
    let len = parts.len();
    let mut out = Vec::with_capacity(len);
    for i in 0..len / 2 {
        out.push(parts[i]);
        out.push(parts[len - 1 - i]);
    }
    if len % 2 == 1 {
        out.push(parts[len / 2]);
    }
    Ok(Composition::from_parts_unchecked(out))
}

pub fn arndt_to_reduced_ap(tau: &Composition) -> Result<Composition> {
    if !tau.is_arndt() {
        return Err(Error::NotArndt(tau.parts().to_vec()));
    }
    let parts = tau.parts();
    let len = parts.len();
    let mut out = vec![0u64; len];
    for (i, pair) in parts.chunks_exact(2).enumerate() {
        out[i] = pair[0];
        out[len - 1 - i] = pair[1];
    }
    if len % 2 == 1 {
        out[len / 2] = parts[len - 1];
    }
    Ok(Composition::from_parts_unchecked(out))
}
