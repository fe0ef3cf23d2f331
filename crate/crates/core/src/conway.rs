//! Alexander and Conway polynomials of knot closures from the reduced Burau
//! representation. Kept independent of the Hecke engine so the two can check
//! each other at `mu = 0`.

use num_traits::One;

use crate::braid::BraidWord;
use crate::error::{Error, Result};
use crate::poly::{LaurentT, PolyZ, T, Z};

/// A square matrix over `Z[t^±1]` of size `n - 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BurauMatrix {
    strands: usize,
    entries: Vec<Vec<LaurentT>>,
}

impl BurauMatrix {
    pub fn identity(strands: usize) -> Self {
        let d = strands.saturating_sub(1);
        let entries = (0..d)
            .map(|i| (0..d).map(|j| if i == j { LaurentT::one() } else { LaurentT::zero() }).collect())
            .collect();
        BurauMatrix { strands, entries }
    }

    /// Reduced Burau image of `σ_i^{±1}`.
    pub fn generator(strands: usize, letter: i32) -> Self {
        let mut m = Self::identity(strands);
        let d = strands - 1;
        let r = letter.unsigned_abs() as usize - 1;
        let t = LaurentT::t();
        let t_inv = LaurentT::t_pow(-1);
        if letter > 0 {
            m.entries[r][r] = -&t;
            if r > 0 {
                m.entries[r - 1][r] = t;
            }
            if r + 1 < d {
                m.entries[r + 1][r] = LaurentT::one();
            }
        } else {
            m.entries[r][r] = -&t_inv;
            if r > 0 {
                m.entries[r - 1][r] = LaurentT::one();
            }
            if r + 1 < d {
                m.entries[r + 1][r] = t_inv;
            }
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn entry(&self, i: usize, j: usize) -> &LaurentT {
        &self.entries[i][j]
    }

    pub fn mul(&self, other: &BurauMatrix) -> BurauMatrix {
        let d = self.dim();
        let entries = (0..d)
            .map(|i| {
                (0..d)
                    .map(|j| (0..d).map(|k| &self.entries[i][k] * &other.entries[k][j]).sum())
                    .collect()
            })
            .collect();
        BurauMatrix { strands: self.strands, entries }
    }

    pub fn minus_identity(&self) -> BurauMatrix {
        let mut m = self.clone();
        for i in 0..m.dim() {
            m.entries[i][i] -= &LaurentT::one();
        }
        m
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> LaurentT {
        let d = self.dim();
        let mut a = self.entries.clone();
        let mut sign = LaurentT::one();
        let mut prev = LaurentT::one();
        for k in 0..d {
            if a[k][k].is_zero() {
                match (k + 1..d).find(|&r| !a[r][k].is_zero()) {
                    Some(r) => {
                        a.swap(k, r);
                        sign = -sign;
                    }
                    None => return LaurentT::zero(),
                }
            }
            for i in k + 1..d {
                for j in k + 1..d {
                    let num = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                    a[i][j] = num.exact_div(&prev).expect("Bareiss division is exact");
                }
            }
            prev = a[k][k].clone();
        }
        if d == 0 {
            return sign;
        }
        &sign * &a[d - 1][d - 1]
    }
}

/// Product of generator matrices in word order.
pub fn reduced_burau(w: &BraidWord) -> BurauMatrix {
    w.letters()
        .iter()
        .fold(BurauMatrix::identity(w.strands()), |m, &l| m.mul(&BurauMatrix::generator(w.strands(), l)))
}

/// The Alexander polynomial normalized so that `Δ(t) = Δ(t^{-1})` and
/// `Δ(1) = 1`.
pub fn alexander_polynomial(w: &BraidWord) -> Result<LaurentT> {
    let components = w.components();
    if components != 1 {
        return Err(Error::NotAKnot { components });
    }
    let n = w.strands() as i32;
    let d = reduced_burau(w).minus_identity().determinant();
    let one = LaurentT::one();
    let numerator = &d * &(&one - &LaurentT::t());
    let raw = numerator
        .exact_div(&(&one - &LaurentT::t_pow(n)))
        .ok_or_else(|| Error::NormalizationFailure(format!("(1 - t^{n}) does not divide {numerator}")))?;
    normalize(raw)
}

fn normalize(raw: LaurentT) -> Result<LaurentT> {
    let (lo, hi) = match (raw.min_degree(), raw.max_degree()) {
        (Some(lo), Some(hi)) => (lo, hi),
        _ => return Err(Error::NormalizationFailure("Alexander polynomial vanished".into())),
    };
    if (lo + hi) % 2 != 0 {
        return Err(Error::NormalizationFailure(format!("{raw} has no symmetric shift")));
    }
    let shifted = raw.mul_monomial(&T(-(lo + hi) / 2));
    if shifted.invert_variable() != shifted {
        return Err(Error::NormalizationFailure(format!("{shifted} is not symmetric")));
    }
    let at_one = shifted.eval_one();
    if at_one.is_one() {
        Ok(shifted)
    } else if (-at_one).is_one() {
        Ok(-shifted)
    } else {
        Err(Error::NormalizationFailure(format!("{shifted} evaluates to {} at t = 1", shifted.eval_one())))
    }
}

/// Rewrites a symmetric Laurent polynomial in `t + t^{-1} - 2 = z^2`.
pub fn symmetric_to_conway(delta: &LaurentT) -> PolyZ {
    let x = LaurentT::from_terms([(T(1), 1), (T(0), -2), (T(-1), 1)]);
    let mut rest = delta.clone();
    let mut out = PolyZ::zero();
    while let Some(top) = rest.max_degree() {
        debug_assert!(top >= 0, "input must be symmetric");
        let c = rest.coeff(&T(top));
        out.add_term(Z(2 * top as u32), c.clone());
        rest -= &x.pow(top as u32).scale(&c);
    }
    out
}

/// The Conway polynomial `∇(z)` of a knot closure.
pub fn conway_polynomial(w: &BraidWord) -> Result<PolyZ> {
    alexander_polynomial(w).map(|delta| symmetric_to_conway(&delta))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::{markov_moves, random_braid};
    use proptest::prelude::*;

    fn bw(n: usize, l: &[i32]) -> BraidWord {
        BraidWord::new(n, l.to_vec()).unwrap()
    }

    fn lt(terms: &[(i32, i64)]) -> LaurentT {
        LaurentT::from_terms(terms.iter().map(|&(e, c)| (T(e), c)))
    }

    fn pz(terms: &[(u32, i64)]) -> PolyZ {
        PolyZ::from_terms(terms.iter().map(|&(e, c)| (Z(e), c)))
    }

    #[test]
    fn burau_examples() {
        assert_eq!(reduced_burau(&BraidWord::identity(2)), BurauMatrix::identity(2));
        let prod = reduced_burau(&bw(2, &[1])).mul(&reduced_burau(&bw(2, &[-1])));
        assert_eq!(prod, BurauMatrix::identity(2));
        assert_eq!(reduced_burau(&bw(2, &[1, 1, 1])).determinant(), lt(&[(3, -1)]));
    }

    #[test]
    fn generators_invert_and_satisfy_braid_relations() {
        for n in 2..6 {
            for i in 1..n as i32 {
                let p = BurauMatrix::generator(n, i).mul(&BurauMatrix::generator(n, -i));
                assert_eq!(p, BurauMatrix::identity(n));
            }
            for i in 1..n as i32 - 1 {
                assert_eq!(reduced_burau(&bw(n, &[i, i + 1, i])), reduced_burau(&bw(n, &[i + 1, i, i + 1])));
            }
            for i in 1..n as i32 {
                for j in i + 2..n as i32 {
                    assert_eq!(reduced_burau(&bw(n, &[i, j])), reduced_burau(&bw(n, &[j, i])));
                }
            }
        }
    }

    #[test]
    fn determinant_matches_cofactor_expansion() {
        fn cofactor(m: &[Vec<LaurentT>]) -> LaurentT {
            if m.is_empty() {
                return LaurentT::one();
            }
            let mut acc = LaurentT::zero();
            for (j, a) in m[0].iter().enumerate() {
                let minor: Vec<Vec<LaurentT>> = m[1..]
                    .iter()
                    .map(|row| row.iter().enumerate().filter(|(c, _)| *c != j).map(|(_, x)| x.clone()).collect())
                    .collect();
                let term = a * &cofactor(&minor);
                if j % 2 == 0 {
                    acc += &term;
                } else {
                    acc -= &term;
                }
            }
            acc
        }
        for seed in 0..40 {
            let m = reduced_burau(&random_braid(5, 7, seed)).minus_identity();
            assert_eq!(m.determinant(), cofactor(&m.entries));
        }
    }

    #[test]
    fn conway_examples() {
        assert_eq!(conway_polynomial(&bw(2, &[1])).unwrap(), PolyZ::one());
        assert_eq!(conway_polynomial(&bw(2, &[1, 1, 1])).unwrap(), pz(&[(0, 1), (2, 1)]));
        assert_eq!(conway_polynomial(&bw(3, &[1, -2, 1, -2])).unwrap(), pz(&[(0, 1), (2, -1)]));
        assert_eq!(conway_polynomial(&BraidWord::identity(1)).unwrap(), PolyZ::one());
        assert_eq!(alexander_polynomial(&bw(2, &[1, 1, 1])).unwrap(), lt(&[(-1, 1), (0, -1), (1, 1)]));
        assert_eq!(alexander_polynomial(&bw(3, &[1, -2, 1, -2])).unwrap(), lt(&[(-1, -1), (0, 3), (1, -1)]));
    }

    #[test]
    fn links_are_rejected() {
        assert_eq!(conway_polynomial(&bw(2, &[1, 1])), Err(Error::NotAKnot { components: 2 }));
    }

    #[test]
    fn conway_rewrite() {
        // t^2 + t^-2 - 2 = (t + t^-1)^2 - 4 = (x + 2)^2 - 4 = x^2 + 4x
        let delta = lt(&[(2, 1), (0, -2), (-2, 1)]);
        assert_eq!(symmetric_to_conway(&delta), pz(&[(4, 1), (2, 4)]));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]
        #[test]
        fn conway_is_a_knot_invariant(n in 2usize..=4, len in 0usize..=10, seed in any::<u64>()) {
            let w = random_braid(n, len, seed);
            prop_assume!(w.is_knot());
            let c = conway_polynomial(&w).unwrap();
            prop_assert_eq!(c.coeff(&Z(0)), num_bigint::BigInt::one());
            prop_assert!(c.terms().all(|(m, _)| m.0 % 2 == 0));
            for m in markov_moves(&w) {
                prop_assert_eq!(conway_polynomial(&m.word).unwrap(), c.clone());
            }
        }
    }
}
