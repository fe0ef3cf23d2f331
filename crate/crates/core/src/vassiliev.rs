//! Finite-type invariants read off the framed Homfly value.
//!
//! For a knot closure of `β ∈ B_n` with exponent sum `e`, the framing
//! correction `(1 - mu z)^{(e-n+1)/2}` turns `Γ(β)` into a power series in
//! `z` whose `z^k` coefficient `f_k(mu)` is an unframed invariant of order
//! `k`. The unknot has series `1`, so "trivial up to degree `k`" means
//! `f_1 = ... = f_k = 0`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::braid::{enumerate_words, lcs_commutator, random_braid_with, BraidWord};
use crate::error::{Error, Result};
use crate::hecke::{gamma, GammaResult};
use crate::poly::{binomial_series, coeff_in_z, from_z_coefficients, LaurentVZ, PolyMZ, PolyMu};

/// The framing-corrected `z`-series `f_0, ..., f_K` of a knot.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorrectedSeries {
    pub coefficients: Vec<PolyMu>,
    pub exponent_sum: i64,
    pub strands: usize,
    pub truncation: u32,
}

impl CorrectedSeries {
    /// `(e - n + 1) / 2`, the exponent of the framing factor.
    pub fn framing_exponent(&self) -> i64 {
        (self.exponent_sum - self.strands as i64 + 1) / 2
    }

    pub fn as_poly(&self) -> PolyMZ {
        from_z_coefficients(&self.coefficients)
    }

    /// First `j >= 1` with `f_j != 0`, if any within the truncation.
    pub fn first_nonvanishing(&self) -> Option<u32> {
        (1..self.coefficients.len()).find(|&j| !self.coefficients[j].is_zero()).map(|j| j as u32)
    }
}

fn require_knot(components: usize) -> Result<()> {
    if components == 1 {
        Ok(())
    } else {
        Err(Error::NotAKnot { components })
    }
}

/// `(1 - mu z)^{(e-n+1)/2} Γ` up to `z^K`.
pub fn corrected_series(g: &GammaResult, max_deg: u32) -> Result<CorrectedSeries> {
    require_knot(g.components)?;
    let m = (g.exponent_sum - g.strands as i64 + 1) / 2;
    let product = (&g.value * &binomial_series(m, max_deg)).truncate_z(max_deg);
    Ok(CorrectedSeries {
        coefficients: (0..=max_deg).map(|j| coeff_in_z(&product, j)).collect(),
        exponent_sum: g.exponent_sum,
        strands: g.strands,
        truncation: max_deg,
    })
}

/// Whether every Homfly-derived invariant of order `1..=k` agrees with the
/// unknot.
///
/// Two criteria are evaluated and must agree: vanishing of `f_1..f_k`, and
/// `p_i(mu)` matching the `z^i` coefficient of `(1 - mu z)^{-(e-n+1)/2}`.
pub fn is_homfly_k_trivial(w: &BraidWord, k: u32) -> Result<bool> {
    let g = gamma(w);
    let series = corrected_series(&g, k)?;
    let by_series = series.coefficients[1..].iter().all(PolyMu::is_zero);
    let by_match = coefficients_match_unknot(&g, k);
    assert_eq!(by_series, by_match, "k-triviality criteria disagree on {w}");
    Ok(by_series)
}

fn coefficients_match_unknot(g: &GammaResult, k: u32) -> bool {
    let m = (g.exponent_sum - g.strands as i64 + 1) / 2;
    let target = binomial_series(-m, k);
    (0..=k).all(|i| coeff_in_z(&g.value, i) == coeff_in_z(&target, i))
}

/// `e - n`.
pub fn bennequin(w: &BraidWord) -> i64 {
    w.exponent_sum() - w.strands() as i64
}

/// `n-1, n-3, ..., -n+1`.
pub fn allowed_exponents(n: usize) -> Vec<i64> {
    let n = n as i64;
    (0..n).map(|i| n - 1 - 2 * i).collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrivialityReport {
    pub braid: BraidWord,
    pub max_checked: u32,
    pub first_nonvanishing: Option<u32>,
    /// Largest `k <= max_checked` with `f_1 = ... = f_k = 0`.
    pub homfly_k_trivial_up_to: u32,
    pub bennequin: i64,
    pub exponent_sum: i64,
    pub allowed_exponents: Vec<i64>,
    /// `e` lies in [`allowed_exponents`].
    pub constraint_satisfied: bool,
}

impl TrivialityReport {
    /// Homfly-`n`-triviality for the braid index `n` of the word.
    pub fn hypothesis_holds(&self) -> bool {
        self.homfly_k_trivial_up_to as usize >= self.braid.strands()
    }

    /// The exponent-sum constraint and the negative Bennequin number are
    /// implied whenever the hypothesis holds.
    pub fn consistent(&self) -> bool {
        !self.hypothesis_holds() || (self.constraint_satisfied && self.bennequin < 0)
    }
}

/// Vanishing data of the corrected series up to `max_deg`.
pub fn triviality_report(w: &BraidWord, max_deg: u32) -> Result<TrivialityReport> {
    let series = corrected_series(&gamma(w), max_deg)?;
    let first = series.first_nonvanishing();
    let e = w.exponent_sum();
    let allowed = allowed_exponents(w.strands());
    Ok(TrivialityReport {
        braid: w.clone(),
        max_checked: max_deg,
        first_nonvanishing: first,
        homfly_k_trivial_up_to: first.map_or(max_deg, |j| j - 1),
        bennequin: bennequin(w),
        exponent_sum: e,
        constraint_satisfied: allowed.contains(&e),
        allowed_exponents: allowed,
    })
}

/// [`triviality_report`] at degree `n`, the braid index.
pub fn bennequin_check(w: &BraidWord) -> Result<TrivialityReport> {
    triviality_report(w, w.strands() as u32)
}

/// Rebuilds `Γ` from its corrected series; exact when `Γ` has `z`-degree at
/// most `c_bound`, e.g. for braids of word length `<= c_bound`.
pub fn gamma_from_series(fs: &CorrectedSeries, c_bound: u32) -> Result<PolyMZ> {
    if fs.truncation < c_bound {
        return Err(Error::SeriesTooShort { have: fs.truncation, need: c_bound });
    }
    let series = fs.as_poly().truncate_z(c_bound);
    Ok((&series * &binomial_series(-fs.framing_exponent(), c_bound)).truncate_z(c_bound))
}

impl GammaResult {
    /// The standard Homfly polynomial `P(v, z)` of the closure.
    pub fn homfly(&self) -> LaurentVZ {
        crate::poly::substitute_mu(&self.value, self.exponent_sum, self.strands as i64)
    }
}

/// `P(v, z)` of the closure of `w`.
pub fn homfly(w: &BraidWord) -> LaurentVZ {
    gamma(w).homfly()
}

/// `P(v, z) ↦ P(v^{-1}, -z)`, the Homfly polynomial of the mirror image.
pub fn mirror_homfly(p: &LaurentVZ) -> LaurentVZ {
    let mut out = LaurentVZ::zero();
    for (m, c) in p.terms() {
        let c = if m.z % 2 == 0 { c.clone() } else { -c };
        out.add_term(crate::poly::VZ::new(-m.v, m.z), c);
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepReport {
    pub strands: usize,
    pub max_length: usize,
    pub words: usize,
    pub knots: usize,
    /// Knot-closing words that are Homfly-`n`-trivial.
    pub trivial: usize,
    pub counterexamples: Vec<BraidWord>,
}

/// Exhaustive check of the Bennequin bound over all words of length
/// `<= max_length` in `B_n`.
pub fn bennequin_sweep(n: usize, max_length: usize) -> SweepReport {
    let words: Vec<BraidWord> = (0..=max_length).flat_map(|len| enumerate_words(n, len)).collect();
    sweep_words(n, max_length, words)
}

/// Like [`bennequin_sweep`] but over `samples` seeded random words with
/// lengths uniform in `0..=max_length`.
pub fn bennequin_sample(n: usize, max_length: usize, samples: usize, seed: u64) -> SweepReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let words = (0..samples)
        .map(|_| {
            let len = rng.gen_range(0..=max_length);
            random_braid_with(&mut rng, n, len)
        })
        .collect();
    sweep_words(n, max_length, words)
}

fn sweep_words(n: usize, max_length: usize, words: Vec<BraidWord>) -> SweepReport {
    let reports: Vec<TrivialityReport> =
        words.par_iter().filter(|w| w.is_knot()).map(|w| bennequin_check(w).expect("knot")).collect();
    SweepReport {
        strands: n,
        max_length,
        words: words.len(),
        knots: reports.len(),
        trivial: reports.iter().filter(|r| r.hypothesis_holds()).count(),
        counterexamples: reports.into_iter().filter(|r| !r.consistent()).map(|r| r.braid).collect(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommutatorExample {
    pub depth: usize,
    pub word: BraidWord,
    pub homfly_k_trivial_up_to: u32,
    pub homfly: LaurentVZ,
}

impl CommutatorExample {
    pub fn homfly_is_trivial(&self) -> bool {
        self.homfly.is_one()
    }
}

/// The closure of `σ_1 σ_2 γ_depth`: an unknot altered by a deep
/// lower-central-series element of the pure braid group.
pub fn commutator_example(depth: usize) -> CommutatorExample {
    let word = BraidWord::new(3, vec![1, 2]).unwrap().concat(&lcs_commutator(depth));
    let g = gamma(&word);
    let max_deg = word.len() as u32;
    let series = corrected_series(&g, max_deg).expect("σ1σ2 times a pure braid closes to a knot");
    CommutatorExample {
        depth,
        homfly_k_trivial_up_to: series.first_nonvanishing().map_or(max_deg, |j| j - 1),
        homfly: g.homfly(),
        word,
    }
}
