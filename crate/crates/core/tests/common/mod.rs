#![allow(dead_code)]

use cartan_pi0_core::realform::{derive_sigma, validate_satake, SatakeDatum, SigmaAction};
use cartan_pi0_core::rootsys::{RootSystem, RootType, Series};

pub fn types_up_to(max_rank: usize) -> Vec<RootType> {
    let mut v = Vec::new();
    let mut push = |s, l| {
        if l <= max_rank {
            v.push(RootType::new(s, l).unwrap());
        }
    };
    for l in 1..=8 {
        push(Series::A, l);
    }
    for l in 2..=8 {
        push(Series::B, l);
        push(Series::C, l);
    }
    for l in 4..=8 {
        push(Series::D, l);
    }
    for l in 6..=8 {
        push(Series::E, l);
    }
    push(Series::F, 4);
    push(Series::G, 2);
    v
}

/// Datum from a black bitmask and a list of candidate swaps; `None` if the
/// structure is inconsistent.
pub fn datum_from_bits(t: RootType, black_mask: u32, swaps: &[(usize, usize)]) -> Option<SatakeDatum> {
    let black: Vec<usize> = (0..t.rank).filter(|i| black_mask >> i & 1 == 1).collect();
    let mut used = vec![false; t.rank];
    let mut pairs = Vec::new();
    for &(a, b) in swaps {
        let (a, b) = (a % t.rank, b % t.rank);
        if a == b || used[a] || used[b] || black.contains(&a) || black.contains(&b) {
            continue;
        }
        used[a] = true;
        used[b] = true;
        pairs.push((a, b));
    }
    SatakeDatum::new(t, &black, &pairs).ok()
}

/// Every datum on `t` with at most one swap that passes validation.
pub fn valid_data(rs: &RootSystem) -> Vec<SigmaAction> {
    let t = rs.root_type();
    let l = t.rank;
    let mut out = Vec::new();
    let mut swaps: Vec<Vec<(usize, usize)>> = vec![vec![]];
    for a in 0..l {
        for b in a + 1..l {
            swaps.push(vec![(a, b)]);
        }
    }
    for mask in 0..1u32 << l {
        for s in &swaps {
            if let Some(d) = datum_from_bits(t, mask, s) {
                if d.arrow_pairs().len() == s.len() && validate_satake(&d, rs).passed() {
                    out.push(derive_sigma(&d, rs).unwrap());
                }
            }
        }
    }
    out
}
