//! Reference computations that never go through the solvers.

#![allow(dead_code)]

use xos_core::{Subset, Value, ValueOracle, XosRepresentation};

/// Exhaustive maximum over every mask, straight from the representation.
pub fn brute_opt(rep: &XosRepresentation) -> i64 {
    (0..1u64 << rep.n())
        .map(|m| rep.evaluate(Subset(m)).unwrap().get())
        .max()
        .unwrap()
}

/// Exhaustive maximum of any oracle.
pub fn brute_opt_oracle<O: ValueOracle>(oracle: &O) -> i64 {
    (0..1u64 << oracle.ground().len())
        .map(|m| oracle.value(Subset(m)).unwrap().get())
        .max()
        .unwrap()
}

/// Maximal members of `{clique_of(i) ∩ kept}`, ignoring empties.
pub fn white_box_maximal_cliques(rep: &XosRepresentation) -> Vec<Subset> {
    let kept: Subset = (0..rep.n()).filter(|&v| rep.singleton(v) > Value(0)).collect();
    let cliques: Vec<Subset> = (0..rep.width())
        .map(|i| rep.clique_of(i).unwrap().intersection(kept))
        .filter(|c| !c.is_empty())
        .collect();
    let mut out: Vec<Subset> = cliques
        .iter()
        .copied()
        .filter(|&c| !cliques.iter().any(|&d| d != c && c.is_subset_of(d)))
        .collect();
    out.sort();
    out.dedup();
    out
}

/// Submodularity through diminishing marginal gains over all `X ⊆ Y`, `v ∉ Y`.
pub fn submodular_by_marginals(n: usize, table: &[i64]) -> bool {
    let full = (1u64 << n) - 1;
    for y in 0..=full {
        let mut x = y;
        loop {
            for v in 0..n {
                let bit = 1u64 << v;
                if y & bit != 0 {
                    continue;
                }
                let gain_x = table[(x | bit) as usize] - table[x as usize];
                let gain_y = table[(y | bit) as usize] - table[y as usize];
                if gain_x < gain_y {
                    return false;
                }
            }
            if x == 0 {
                break;
            }
            x = (x - 1) & y;
        }
    }
    true
}

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}
