use crate::error::{Error, Result};
use crate::sets::{Granulation, Region};

/// Largest universe for [`brute_force_signatures`].
pub const SIGNATURE_CAP: usize = 14;

/// `(lower, upper)` of every region, indexed by its bit mask, recomputed
/// element by element: `x ∈ A^l` iff some granule holding `x` lies inside `A`,
/// and `x ∈ A^u` iff some granule holding `x` meets `A`.
pub fn brute_force_signatures(g: &Granulation) -> Result<Vec<(Region, Region)>> {
    let n = g.universe_size();
    if n > SIGNATURE_CAP {
        return Err(Error::TooLarge {
            what: "universe for signature recomputation",
            size: n,
            cap: SIGNATURE_CAP,
        });
    }
    let granules: Vec<Vec<usize>> = g.granules().iter().map(|r| r.iter().collect()).collect();
    let mut out = Vec::with_capacity(1 << n);
    for mask in 0u64..(1u64 << n) {
        let inside = |x: usize| mask >> x & 1 == 1;
        let mut lower = 0u64;
        let mut upper = 0u64;
        for x in 0..n {
            let holding = granules.iter().filter(|gr| gr.contains(&x));
            for gr in holding {
                if gr.iter().all(|&y| inside(y)) {
                    lower |= 1 << x;
                }
                if gr.iter().any(|&y| inside(y)) {
                    upper |= 1 << x;
                }
            }
        }
        out.push((Region::from_mask(n, lower), Region::from_mask(n, upper)));
    }
    Ok(out)
}
