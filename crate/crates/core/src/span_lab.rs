//! Dimension of the span of degree-`k` coefficients `p_k(mu)` over knot
//! closures of `n`-braids.
//!
//! Upper bound: `p_k` has `mu`-degree below `n`, degree at most `k`, and the
//! parity of `k`. Lower bound: explicit witness braids whose `z^k`
//! coefficients are `±mu^k, ±mu^{k-2}, ...`, plus random knot-closing braids
//! for the range where witnesses do not fit on `n` strands.

use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::braid::{random_braid_with, BraidWord};
use crate::error::{Error, Result};
use crate::hecke::gamma;
use crate::poly::{coeff_in_z, Mu, PolyMu};

/// `floor(k/2) + 1` for `k < n`; otherwise `floor(n/2) + 1` when `n` is odd
/// and `k` even, and `floor(n/2)` in the remaining cases.
pub fn predicted_dimension(n: usize, k: u32) -> usize {
    let k = k as usize;
    if k < n {
        k / 2 + 1
    } else if n % 2 == 1 && k % 2 == 0 {
        n / 2 + 1
    } else {
        n / 2
    }
}

/// Exact rational matrix, row-major.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: Vec<Vec<BigRational>>,
}

impl RationalMatrix {
    pub fn new(rows: Vec<Vec<BigRational>>) -> Self {
        if let Some(first) = rows.first() {
            assert!(rows.iter().all(|r| r.len() == first.len()), "ragged matrix");
        }
        RationalMatrix { rows }
    }

    pub fn from_integers(rows: &[Vec<i64>]) -> Self {
        Self::new(rows.iter().map(|r| r.iter().map(|&x| BigRational::from_integer(x.into())).collect()).collect())
    }

    pub fn push_row(&mut self, row: Vec<BigRational>) {
        if let Some(first) = self.rows.first() {
            assert_eq!(first.len(), row.len());
        }
        self.rows.push(row);
    }

    pub fn rows(&self) -> usize {
        self.rows.len()
    }

    /// Rank by Gaussian elimination over the rationals.
    pub fn rank(&self) -> usize {
        let mut a = self.rows.clone();
        let cols = a.first().map_or(0, Vec::len);
        let mut rank = 0;
        for col in 0..cols {
            let Some(pivot) = (rank..a.len()).find(|&r| !a[r][col].is_zero()) else {
                continue;
            };
            a.swap(rank, pivot);
            let inv = a[rank][col].recip();
            for x in a[rank].iter_mut() {
                *x *= &inv;
            }
            for r in 0..a.len() {
                if r != rank && !a[r][col].is_zero() {
                    let factor = a[r][col].clone();
                    for c in col..cols {
                        let delta = &factor * &a[rank][c];
                        a[r][c] -= delta;
                    }
                }
            }
            rank += 1;
        }
        rank
    }
}

/// Coefficients of `p` in the basis `mu^0, ..., mu^{n-1}`.
fn coefficient_vector(p: &PolyMu, n: usize) -> Vec<BigRational> {
    (0..n).map(|i| BigRational::from_integer(p.coeff(&Mu(i as u32)))).collect()
}

/// A witness braid and the `mu`-exponent its `z^k` coefficient must carry.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub word: BraidWord,
    pub mu_exponent: u32,
}

/// Knot-closing braids in `B_{k+1}` with `z^k` coefficient `±mu^{k-2r}`,
/// `r = 0..=k/2`.
///
/// Starts from `σ_1^{-1} ... σ_k^{-1}` and replaces the trailing pairs
/// `σ_{j-1}^{-1} σ_j^{-1}` by `σ_{j-1} σ_j^3` for `j = k, k-2, ...`. Each
/// replacement trades a factor `(1 - mu z)^2` for `1 + mu z + z^2`. Every
/// witness is checked against the engine before it is returned.
pub fn witness_braids(k: u32) -> Result<Vec<Witness>> {
    let k = k as i32;
    let mut out = Vec::new();
    for r in 0..=k / 2 {
        let plain = k - 2 * r;
        let mut letters: Vec<i32> = (1..=plain).map(|i| -i).collect();
        for j in (plain + 2..=k).step_by(2) {
            letters.extend([j - 1, j, j, j]);
        }
        let word = BraidWord::new(k as usize + 1, letters)?;
        let witness = Witness { word, mu_exponent: plain as u32 };
        verify_witness(&witness, k as u32)?;
        out.push(witness);
    }
    Ok(out)
}

fn verify_witness(w: &Witness, k: u32) -> Result<()> {
    let p = coeff_in_z(&gamma(&w.word).value, k);
    let ok = p.len() == 1 && {
        let (m, c) = p.terms().next().unwrap();
        m.0 == w.mu_exponent && (c.is_one() || (-c).is_one())
    };
    if ok && w.word.is_knot() {
        Ok(())
    } else {
        Err(Error::WitnessMismatch { word: w.word.to_string(), degree: k, found: p.to_string(), expected_mu: w.mu_exponent })
    }
}

/// Moves a braid onto `n` strands with positive stabilizations, which keep
/// both `Γ` and the component count.
pub fn stabilize_to(w: &BraidWord, n: usize) -> BraidWord {
    let mut out = w.clone();
    while out.strands() < n {
        out = out.stabilize(true);
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DimensionReport {
    pub n: usize,
    pub k: u32,
    pub predicted: usize,
    pub observed_rank: usize,
    pub witness_count: usize,
    pub sample_count: usize,
}

impl DimensionReport {
    pub fn matches(&self) -> bool {
        self.observed_rank == self.predicted
    }
}

/// Knot-closing random braids in `B_n` with lengths in `k..=k+4`.
fn sample_knots(n: usize, k: u32, count: usize, seed: u64) -> Vec<BraidWord> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let len = rng.gen_range(k as usize..=k as usize + 4);
        let w = random_braid_with(&mut rng, n, len);
        if w.is_knot() {
            out.push(w);
        }
    }
    out
}

/// Rank of the `p_k` vectors from witnesses and random knots, compared with
/// [`predicted_dimension`].
///
/// Exceeding the prediction is always an error. Falling short is an error
/// when witnesses were used (`k < n`); otherwise the random sample is
/// redrawn once at double size first.
pub fn rank_experiment(n: usize, k: u32, extra_samples: usize, seed: u64) -> Result<DimensionReport> {
    assert!(n >= 2, "rank experiments need at least two strands");
    let predicted = predicted_dimension(n, k);
    let witnesses: Vec<BraidWord> = if (k as usize) < n {
        witness_braids(k)?.into_iter().map(|w| stabilize_to(&w.word, n)).collect()
    } else {
        Vec::new()
    };

    let mut samples = extra_samples;
    let mut attempt_seed = seed;
    loop {
        let sampled = sample_knots(n, k, samples, attempt_seed);
        let vectors: Vec<Vec<BigRational>> = witnesses
            .par_iter()
            .chain(sampled.par_iter())
            .map(|w| coefficient_vector(&coeff_in_z(&gamma(w).value, k), n))
            .collect();
        let observed = RationalMatrix::new(vectors).rank();
        let report = DimensionReport {
            n,
            k,
            predicted,
            observed_rank: observed,
            witness_count: witnesses.len(),
            sample_count: samples,
        };
        if observed > predicted {
            return Err(Error::RankExceedsBound { n, k, observed, predicted });
        }
        if observed == predicted {
            return Ok(report);
        }
        if !witnesses.is_empty() || samples != extra_samples || samples == 0 {
            return Err(Error::RankDeficient { n, k, observed, predicted });
        }
        samples *= 2;
        attempt_seed = seed.wrapping_add(0x9e37_79b9_7f4a_7c15);
    }
}

/// Parity class of `p_k(mu)` for a closure with `c` components: odd iff
/// `k + c` is even.
pub fn parity_for(k: u32, components: usize) -> u32 {
    u32::from((k as usize + components) % 2 == 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::random_braid;
    use num_bigint::BigInt;
    use crate::poly::{MuZ, PolyMZ};

    fn integer(x: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(x))
    }

    #[test]
    fn predicted_dimension_examples() {
        assert_eq!(predicted_dimension(5, 3), 2);
        assert_eq!(predicted_dimension(3, 4), 2);
        assert_eq!(predicted_dimension(4, 6), 2);
        assert_eq!(predicted_dimension(2, 0), 1);
        assert_eq!(predicted_dimension(3, 3), 1);
    }

    #[test]
    fn predicted_dimension_matches_monomial_count() {
        // count mu^i with i < n, i <= k, i ≡ k (mod 2)
        for n in 2..9usize {
            for k in 0..12u32 {
                let count = (0..n as u32).filter(|&i| i <= k && i % 2 == k % 2).count();
                assert_eq!(predicted_dimension(n, k), count, "n={n} k={k}");
            }
        }
    }

    #[test]
    fn rank_of_small_matrices() {
        assert_eq!(RationalMatrix::from_integers(&[vec![1, 2], vec![2, 4]]).rank(), 1);
        assert_eq!(RationalMatrix::from_integers(&[vec![1, 2, 3], vec![0, 1, 1], vec![1, 3, 4]]).rank(), 2);
        assert_eq!(RationalMatrix::from_integers(&[vec![0, 0], vec![0, 0]]).rank(), 0);
        assert_eq!(RationalMatrix::default().rank(), 0);
        assert_eq!(RationalMatrix::from_integers(&[vec![0, 3], vec![5, 0], vec![1, 1]]).rank(), 2);
        let mut m = RationalMatrix::from_integers(&[vec![1, 0, 0]]);
        m.push_row(vec![integer(0), integer(0), integer(7)]);
        assert_eq!(m.rank(), 2);
    }

    #[test]
    fn witness_examples() {
        let w1 = witness_braids(1).unwrap();
        assert_eq!(w1.len(), 1);
        assert_eq!(w1[0].word, BraidWord::new(2, vec![-1]).unwrap());
        assert_eq!(w1[0].mu_exponent, 1);

        let w2 = witness_braids(2).unwrap();
        let words: Vec<_> = w2.iter().map(|w| w.word.letters().to_vec()).collect();
        assert_eq!(words, vec![vec![-1, -2], vec![1, 2, 2, 2]]);
        assert_eq!(coeff_in_z(&gamma(&w2[0].word).value, 2), PolyMu::monomial(1, Mu(2)));
        assert_eq!(coeff_in_z(&gamma(&w2[1].word).value, 2), PolyMu::one());

        let w3 = witness_braids(3).unwrap();
        assert_eq!(w3.iter().map(|w| w.mu_exponent).collect::<Vec<_>>(), vec![3, 1]);
        assert_eq!(w3[1].word.letters(), &[-1, 2, 3, 3, 3]);
    }

    #[test]
    fn witnesses_verify_up_to_degree_eight() {
        for k in 0..=8 {
            let ws = witness_braids(k).unwrap();
            assert_eq!(ws.len(), k as usize / 2 + 1);
        }
    }

    #[test]
    fn closed_form_for_negative_staircase() {
        let f = PolyMZ::from_terms([(MuZ::new(0, 0), 1), (MuZ::new(1, 1), -1)]);
        for k in 1..=6 {
            let w = BraidWord::new(k + 1, (1..=k as i32).map(|i| -i).collect()).unwrap();
            assert_eq!(gamma(&w).value, f.pow(k as u32));
        }
    }

    #[test]
    fn cube_of_last_generator_multiplies() {
        let factor = PolyMZ::from_terms([(MuZ::new(0, 0), 1), (MuZ::new(1, 1), 1), (MuZ::new(0, 2), 1)]);
        for j in 1..=4usize {
            for seed in 0..10 {
                let beta = if j == 1 { BraidWord::identity(1) } else { random_braid(j, 6, seed) };
                let mut extended = beta.with_strands(j + 1).unwrap();
                for _ in 0..3 {
                    extended.push(j as i32);
                }
                assert_eq!(gamma(&extended).value, &factor * &gamma(&beta).value);
            }
        }
    }

    #[test]
    fn sampled_coefficients_respect_parity() {
        for seed in 0..80 {
            let w = random_braid(2 + (seed as usize % 4), 9, seed);
            let g = gamma(&w);
            for k in 0..=9 {
                assert!(coeff_in_z(&g.value, k).has_parity(parity_for(k, g.components)));
            }
        }
    }

    #[test]
    fn rank_experiment_examples() {
        for (n, k, samples) in [(2, 2, 50), (3, 2, 50), (3, 4, 100)] {
            let r = rank_experiment(n, k, samples, 0).unwrap();
            assert_eq!((r.predicted, r.observed_rank), (predicted_dimension(n, k), predicted_dimension(n, k)));
        }
        let r = rank_experiment(3, 2, 0, 0).unwrap();
        assert_eq!(r.witness_count, 2);
        assert!(r.matches());
    }
}
