//! Principally specialized characters of the standard `A2(2)`-modules.
//!
//! For a dominant weight `Λ` with `Λ(h0) = m0`, `Λ(h1) = m1` put
//! `φ = Λ + ρ` with `ρ(h0) = ρ(h1) = 1`, so `φ(h0) = m0 + 1`,
//! `φ(h1) = m1 + 1` and `φ(c) = φ(h0) + 2φ(h1)`. Then
//!
//! ```text
//! χ_Λ(q) = H(q) · ∏_{n ∈ J_Λ} (1 - q^n)^-1 · ∏_{n ∈ K_Λ} (1 - q^n)
//! ```
//!
//! where `H(q)` is the Heisenberg character `∏_{n ≡ ±1 (6)} (1 - q^n)^-1`,
//! `J_Λ` omits the classes `0, φ(c), ±φ(h0), ±φ(h1), ±(φ(h0)+φ(h1))`
//! modulo `2φ(c)`, and `K_Λ` is the class `±φ(h0)` when `m0 = m1`.

use serde::Serialize;

use crate::conditions::{a11_level2, count_series};
use crate::qseries::{progression_product, FactorPower, TruncatedSeries};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct DominantWeight {
    pub m0: u32,
    pub m1: u32,
}

impl DominantWeight {
    pub fn new(m0: u32, m1: u32) -> Self {
        assert!(m0 + 2 * m1 >= 1, "level must be positive");
        DominantWeight { m0, m1 }
    }

    pub fn level(&self) -> u32 {
        self.m0 + 2 * self.m1
    }

    /// The three level 5 weights `5Λ0`, `3Λ0 + Λ1`, `Λ0 + 2Λ1`.
    pub fn level5() -> [DominantWeight; 3] {
        [Self::new(5, 0), Self::new(3, 1), Self::new(1, 2)]
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpecializationData {
    pub modulus: u32,
    pub j_residues: Vec<u32>,
    pub k_residues: Vec<u32>,
}

pub fn specialization_data(w: DominantWeight) -> SpecializationData {
    let phi0 = w.m0 + 1;
    let phi1 = w.m1 + 1;
    let phic = phi0 + 2 * phi1;
    let modulus = 2 * phic;
    let pm = |x: u32| [x % modulus, (modulus - x % modulus) % modulus];
    let mut excluded = vec![0, phic % modulus];
    excluded.extend(pm(phi0));
    excluded.extend(pm(phi1));
    excluded.extend(pm(phi0 + phi1));
    let j_residues = (0..modulus).filter(|r| !excluded.contains(r)).collect();
    let mut k_residues = if w.m0 == w.m1 { pm(phi0).to_vec() } else { Vec::new() };
    k_residues.sort_unstable();
    k_residues.dedup();
    SpecializationData {
        modulus,
        j_residues,
        k_residues,
    }
}

/// `H(q) = ∏_{n ≡ ±1 (mod 6)} (1 - q^n)^-1`.
pub fn heisenberg_character(order: usize) -> TruncatedSeries {
    progression_product(6, &[1, 5], FactorPower::Inverse, order)
}

/// `F_Λ(q) · ∏_{K_Λ}(1 - q^n)`: the character with the Heisenberg factor removed.
pub fn vacuum_character(w: DominantWeight, order: usize) -> TruncatedSeries {
    let data = specialization_data(w);
    let f = progression_product(data.modulus, &data.j_residues, FactorPower::Inverse, order);
    let k = progression_product(data.modulus, &data.k_residues, FactorPower::Direct, order);
    f.mul(&k)
}

pub fn principal_character(w: DominantWeight, order: usize) -> TruncatedSeries {
    heisenberg_character(order).mul(&vacuum_character(w, order))
}

/// `χ(q) = ∏_{n ≡ ±2,±3,±4,±5 (mod 16)} (1 - q^n)^-1`.
pub fn chi5(order: usize) -> TruncatedSeries {
    progression_product(16, &[2, 3, 4, 5, 11, 12, 13, 14], FactorPower::Inverse, order)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BorceaRow {
    pub n: usize,
    pub a1_count: u64,
    pub chi: u64,
}

/// Pairs the `A1(1)` level 2 basis count with `χ(q)` degree by degree.
pub fn borcea_compare(order: usize) -> Vec<BorceaRow> {
    use num_traits::ToPrimitive;
    let counts = count_series(&a11_level2(), order);
    let chi = chi5(order);
    (0..=order)
        .map(|n| BorceaRow {
            n,
            a1_count: counts.coeff(n).to_u64().expect("count fits in u64"),
            chi: chi.coeff(n).to_u64().expect("coefficient fits in u64"),
        })
        .collect()
}
