use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

/// A finite abelian group in invariant-factor form `Z_{d1} x ... x Z_{dk}`
/// with `d1 | d2 | ... | dk` and every `di >= 2`.
///
/// Equality compares the invariant factors only; generators are an
/// auditable certificate and do not take part in comparisons.
#[derive(Clone, Debug)]
pub struct FiniteAbelianGroup {
    invariant_factors: Vec<BigInt>,
    generators: Option<Vec<Vec<BigInt>>>,
}

impl FiniteAbelianGroup {
    pub fn trivial() -> Self {
        FiniteAbelianGroup { invariant_factors: Vec::new(), generators: None }
    }

    /// Normalizes arbitrary cyclic orders into the divisibility chain.
    pub fn from_cyclic_orders<I: IntoIterator<Item = BigInt>>(orders: I) -> Self {
        FiniteAbelianGroup { invariant_factors: normalize(orders.into_iter().collect()), generators: None }
    }

    /// `factors` must already be a divisibility chain; generators are kept
    /// as given, one per factor.
    pub fn with_generators(factors: Vec<BigInt>, generators: Vec<Vec<BigInt>>) -> Self {
        assert_eq!(factors.len(), generators.len());
        debug_assert!(factors.windows(2).all(|w| w[1].is_multiple_of(&w[0])));
        debug_assert!(factors.iter().all(|d| *d > BigInt::one()));
        FiniteAbelianGroup { invariant_factors: factors, generators: Some(generators) }
    }

    /// `Z_2^dim`.
    pub fn elementary_two(dim: usize) -> Self {
        Self::from_cyclic_orders((0..dim).map(|_| BigInt::from(2)))
    }

    pub fn elementary_two_with_generators(generators: Vec<Vec<BigInt>>) -> Self {
        let factors = (0..generators.len()).map(|_| BigInt::from(2)).collect();
        Self::with_generators(factors, generators)
    }

    pub fn invariant_factors(&self) -> &[BigInt] {
        &self.invariant_factors
    }

    pub fn generators(&self) -> Option<&[Vec<BigInt>]> {
        self.generators.as_deref()
    }

    pub fn order(&self) -> BigInt {
        self.invariant_factors.iter().fold(BigInt::one(), |acc, d| acc * d)
    }

    pub fn is_trivial(&self) -> bool {
        self.invariant_factors.is_empty()
    }

    /// Every invariant factor equals 2.
    pub fn is_elementary_two(&self) -> bool {
        let two = BigInt::from(2);
        self.invariant_factors.iter().all(|d| *d == two)
    }

    /// Number of cyclic factors.
    pub fn rank(&self) -> usize {
        self.invariant_factors.len()
    }

    /// Compact notation such as `1`, `Z2`, `Z2^3`, `Z2 x Z4`.
    pub fn notation(&self) -> String {
        use core::fmt::Write;
        if self.is_trivial() {
            return String::from("1");
        }
        let mut out = String::new();
        let mut i = 0;
        while i < self.invariant_factors.len() {
            let d = &self.invariant_factors[i];
            let run = self.invariant_factors[i..].iter().take_while(|x| *x == d).count();
            if !out.is_empty() {
                out.push_str(" x ");
            }
            let _ = write!(out, "Z{}", d);
            if run > 1 {
                let _ = write!(out, "^{}", run);
            }
            i += run;
        }
        out
    }
}

fn normalize(orders: Vec<BigInt>) -> Vec<BigInt> {
    // split into prime-power parts, then recombine greedily from the top
    let mut parts: Vec<(BigInt, Vec<BigInt>)> = Vec::new();
    for n in orders {
        let mut n = if n < BigInt::zero() { -n } else { n };
        if n.is_zero() || n.is_one() {
            continue;
        }
        let mut p = BigInt::from(2);
        while &p * &p <= n {
            if n.is_multiple_of(&p) {
                let mut q = BigInt::one();
                while n.is_multiple_of(&p) {
                    n /= &p;
                    q *= &p;
                }
                push_part(&mut parts, p.clone(), q);
            }
            p += 1;
        }
        if n > BigInt::one() {
            push_part(&mut parts, n.clone(), n);
        }
    }
    let len = parts.iter().map(|(_, v)| v.len()).max().unwrap_or(0);
    let mut out = Vec::with_capacity(len);
    for k in 0..len {
        let mut f = BigInt::one();
        for (_, v) in &parts {
            // v sorted descending; the k-th largest factor goes to slot len-1-k
            if let Some(x) = v.get(k) {
                f *= x;
            }
        }
        out.push(f);
    }
    out.reverse();
    out
}

fn push_part(parts: &mut Vec<(BigInt, Vec<BigInt>)>, p: BigInt, q: BigInt) {
    match parts.iter_mut().find(|(pp, _)| *pp == p) {
        Some((_, v)) => {
            v.push(q);
            v.sort_by(|a, b| b.cmp(a));
        }
        None => parts.push((p, alloc::vec![q])),
    }
}

impl PartialEq for FiniteAbelianGroup {
    fn eq(&self, other: &Self) -> bool {
        self.invariant_factors == other.invariant_factors
    }
}

impl Eq for FiniteAbelianGroup {}

impl fmt::Display for FiniteAbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.notation())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn b(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn chain_normalization() {
        let g = FiniteAbelianGroup::from_cyclic_orders(b(&[2, 3]));
        assert_eq!(g.invariant_factors(), b(&[6]).as_slice());
        let g = FiniteAbelianGroup::from_cyclic_orders(b(&[4, 2, 1, 0]));
        assert_eq!(g.invariant_factors(), b(&[2, 4]).as_slice());
        let g = FiniteAbelianGroup::from_cyclic_orders(b(&[6, 4]));
        assert_eq!(g.invariant_factors(), b(&[2, 12]).as_slice());
        assert_eq!(g.order(), BigInt::from(24));
    }

    #[test]
    fn notation() {
        assert_eq!(FiniteAbelianGroup::trivial().notation(), "1");
        assert_eq!(FiniteAbelianGroup::elementary_two(1).notation(), "Z2");
        assert_eq!(FiniteAbelianGroup::elementary_two(3).notation(), "Z2^3");
        assert_eq!(FiniteAbelianGroup::from_cyclic_orders(b(&[2, 4])).notation(), "Z2 x Z4");
    }

    #[test]
    fn equality_ignores_generators() {
        let a = FiniteAbelianGroup::elementary_two_with_generators(vec![b(&[1, 0])]);
        assert_eq!(a, FiniteAbelianGroup::elementary_two(1));
        assert_ne!(a, FiniteAbelianGroup::trivial());
    }
}
