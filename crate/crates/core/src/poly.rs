//! Exact sparse polynomials over arbitrary-precision integers.
//!
//! One generic container, [`Poly`], is parametrized by a monomial type. The
//! monomial decides the variables, whether exponents may be negative and the
//! term order. Every operation leaves the term map in canonical form: no
//! stored coefficient is zero, so structural equality is polynomial equality.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// A monomial: a commutative monoid element with a total order.
///
/// The derived `Ord` of each implementor is the term order used for
/// iteration, rendering and serialization.
pub trait Monomial: Ord + Clone + fmt::Debug {
    /// Variable names, in the order [`Monomial::exponents`] reports them.
    const VARIABLES: &'static [&'static str];

    fn one() -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn exponents(&self) -> Vec<i64>;
}

/// Power of `z`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Z(pub u32);

/// Power of `mu`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Mu(pub u32);

/// Laurent power of `t`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct T(pub i32);

/// `mu^mu * z^z`. Ordered by `z` first, then `mu`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MuZ {
    pub z: u32,
    pub mu: u32,
}

/// `v^v * z^z` with integer exponents. Ordered by `z` first, then `v`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VZ {
    pub z: i32,
    pub v: i32,
}

impl MuZ {
    pub fn new(mu: u32, z: u32) -> Self {
        MuZ { z, mu }
    }
}

impl VZ {
    pub fn new(v: i32, z: i32) -> Self {
        VZ { z, v }
    }
}

impl Monomial for Z {
    const VARIABLES: &'static [&'static str] = &["z"];
    fn one() -> Self {
        Z(0)
    }
    fn mul(&self, other: &Self) -> Self {
        Z(self.0 + other.0)
    }
    fn exponents(&self) -> Vec<i64> {
        vec![self.0 as i64]
    }
}

impl Monomial for Mu {
    const VARIABLES: &'static [&'static str] = &["mu"];
    fn one() -> Self {
        Mu(0)
    }
    fn mul(&self, other: &Self) -> Self {
        Mu(self.0 + other.0)
    }
    fn exponents(&self) -> Vec<i64> {
        vec![self.0 as i64]
    }
}

impl Monomial for T {
    const VARIABLES: &'static [&'static str] = &["t"];
    fn one() -> Self {
        T(0)
    }
    fn mul(&self, other: &Self) -> Self {
        T(self.0 + other.0)
    }
    fn exponents(&self) -> Vec<i64> {
        vec![self.0 as i64]
    }
}

impl Monomial for MuZ {
    const VARIABLES: &'static [&'static str] = &["mu", "z"];
    fn one() -> Self {
        MuZ { z: 0, mu: 0 }
    }
    fn mul(&self, other: &Self) -> Self {
        MuZ { z: self.z + other.z, mu: self.mu + other.mu }
    }
    fn exponents(&self) -> Vec<i64> {
        vec![self.mu as i64, self.z as i64]
    }
}

impl Monomial for VZ {
    const VARIABLES: &'static [&'static str] = &["v", "z"];
    fn one() -> Self {
        VZ { z: 0, v: 0 }
    }
    fn mul(&self, other: &Self) -> Self {
        VZ { z: self.z + other.z, v: self.v + other.v }
    }
    fn exponents(&self) -> Vec<i64> {
        vec![self.v as i64, self.z as i64]
    }
}

/// Sparse polynomial with `BigInt` coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly<M: Monomial> {
    terms: BTreeMap<M, BigInt>,
}

/// `Z[mu, z]`, the home of the framed Homfly value.
pub type PolyMZ = Poly<MuZ>;
/// `Z[v^±1, z^±1]`, the home of the standard Homfly polynomial.
pub type LaurentVZ = Poly<VZ>;
/// `Z[z]`, the coefficient ring of the Hecke algebra.
pub type PolyZ = Poly<Z>;
/// `Z[mu]`, a single `z`-coefficient of a [`PolyMZ`].
pub type PolyMu = Poly<Mu>;
/// `Z[t^±1]`, Burau entries and Alexander polynomials.
pub type LaurentT = Poly<T>;

impl<M: Monomial> Default for Poly<M> {
    fn default() -> Self {
        Poly { terms: BTreeMap::new() }
    }
}

impl<M: Monomial> Poly<M> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(BigInt::one(), M::one())
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c.into(), M::one())
    }

    pub fn monomial(c: impl Into<BigInt>, m: M) -> Self {
        let mut p = Self::zero();
        p.add_term(m, c.into());
        p
    }

    /// Builds a polynomial from `(monomial, coefficient)` pairs; repeated
    /// monomials are summed.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (M, C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero();
        for (m, c) in terms {
            p.add_term(m, c.into());
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&M::one()).is_some_and(|c| c.is_one())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&M, &BigInt)> + ExactSizeIterator {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &M) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, m: M, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Poly { terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect() }
    }

    pub fn mul_monomial(&self, m: &M) -> Self {
        Poly { terms: self.terms.iter().map(|(k, c)| (k.mul(m), c.clone())).collect() }
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// Applies `f` to every monomial, summing collisions.
    pub fn map_monomials<N: Monomial>(&self, mut f: impl FnMut(&M) -> N) -> Poly<N> {
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            out.add_term(f(m), c.clone());
        }
        out
    }

    /// Keeps the terms for which `keep` holds.
    pub fn filter(&self, mut keep: impl FnMut(&M) -> bool) -> Self {
        Poly {
            terms: self.terms.iter().filter(|(m, _)| keep(m)).map(|(m, c)| (m.clone(), c.clone())).collect(),
        }
    }

    /// `[exponents..., coefficient]` rows in monomial order.
    pub fn term_rows(&self) -> Vec<(Vec<i64>, String)> {
        self.terms.iter().map(|(m, c)| (m.exponents(), c.to_string())).collect()
    }
}

impl<M: Monomial> AddAssign<&Poly<M>> for Poly<M> {
    fn add_assign(&mut self, rhs: &Poly<M>) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl<M: Monomial> SubAssign<&Poly<M>> for Poly<M> {
    fn sub_assign(&mut self, rhs: &Poly<M>) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), -c);
        }
    }
}

impl<M: Monomial> Add for &Poly<M> {
    type Output = Poly<M>;
    fn add(self, rhs: &Poly<M>) -> Poly<M> {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<M: Monomial> Sub for &Poly<M> {
    type Output = Poly<M>;
    fn sub(self, rhs: &Poly<M>) -> Poly<M> {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<M: Monomial> Mul for &Poly<M> {
    type Output = Poly<M>;
    fn mul(self, rhs: &Poly<M>) -> Poly<M> {
        let mut out = Poly::zero();
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                out.add_term(a.mul(b), x * y);
            }
        }
        out
    }
}

impl<M: Monomial> Neg for &Poly<M> {
    type Output = Poly<M>;
    fn neg(self) -> Poly<M> {
        Poly { terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $f:ident),*) => {$(
        impl<M: Monomial> $tr for Poly<M> {
            type Output = Poly<M>;
            fn $f(self, rhs: Poly<M>) -> Poly<M> {
                (&self).$f(&rhs)
            }
        }
        impl<M: Monomial> $tr<&Poly<M>> for Poly<M> {
            type Output = Poly<M>;
            fn $f(self, rhs: &Poly<M>) -> Poly<M> {
                (&self).$f(rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl<M: Monomial> Neg for Poly<M> {
    type Output = Poly<M>;
    fn neg(self) -> Poly<M> {
        -&self
    }
}

impl<M: Monomial> std::iter::Sum for Poly<M> {
    fn sum<I: Iterator<Item = Poly<M>>>(iter: I) -> Self {
        let mut acc = Poly::zero();
        for p in iter {
            acc += &p;
        }
        acc
    }
}

fn write_monomial(f: &mut fmt::Formatter<'_>, names: &[&str], exps: &[i64]) -> Result<bool, fmt::Error> {
    let mut first = true;
    for (name, &e) in names.iter().zip(exps) {
        if e == 0 {
            continue;
        }
        if !first {
            write!(f, "*")?;
        }
        first = false;
        if e == 1 {
            write!(f, "{name}")?;
        } else {
            write!(f, "{name}^{e}")?;
        }
    }
    Ok(!first)
}

impl<M: Monomial> fmt::Display for Poly<M> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let exps = m.exponents();
            let constant = exps.iter().all(|&e| e == 0);
            let abs = c.abs();
            match (i, c.is_negative()) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if constant {
                write!(f, "{abs}")?;
            } else {
                if !abs.is_one() {
                    write!(f, "{abs}*")?;
                }
                write_monomial(f, M::VARIABLES, &exps)?;
            }
        }
        Ok(())
    }
}

impl<M: Monomial> fmt::Debug for Poly<M> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

// --- single-variable helpers ---

impl PolyZ {
    pub fn z() -> Self {
        Self::monomial(1, Z(1))
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(|m| m.0)
    }

    /// Embeds into `Z[mu, z]`.
    pub fn to_mu_z(&self) -> PolyMZ {
        self.map_monomials(|m| MuZ::new(0, m.0))
    }
}

impl PolyMu {
    pub fn mu() -> Self {
        Self::monomial(1, Mu(1))
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(|m| m.0)
    }

    /// True iff every exponent has the given parity (0 even, 1 odd).
    /// The zero polynomial has both parities.
    pub fn has_parity(&self, parity: u32) -> bool {
        self.terms.keys().all(|m| m.0 % 2 == parity)
    }
}

impl LaurentT {
    pub fn t() -> Self {
        Self::monomial(1, T(1))
    }

    pub fn t_pow(k: i32) -> Self {
        Self::monomial(1, T(k))
    }

    pub fn min_degree(&self) -> Option<i32> {
        self.terms.keys().next().map(|m| m.0)
    }

    pub fn max_degree(&self) -> Option<i32> {
        self.terms.keys().next_back().map(|m| m.0)
    }

    /// Value at `t = 1`.
    pub fn eval_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// `t ↦ t^{-1}`.
    pub fn invert_variable(&self) -> Self {
        self.map_monomials(|m| T(-m.0))
    }

    /// Exact quotient `self / divisor`, or `None` if the division leaves a
    /// remainder.
    pub fn exact_div(&self, divisor: &LaurentT) -> Option<LaurentT> {
        let (dlo, dhi) = (divisor.min_degree()?, divisor.max_degree()?);
        let lead = divisor.coeff(&T(dhi));
        let mut rem = self.clone();
        let mut quot = LaurentT::zero();
        while let Some(hi) = rem.max_degree() {
            let lo = rem.min_degree().unwrap();
            if hi - lo < dhi - dlo {
                return None;
            }
            let c = rem.coeff(&T(hi));
            if !(&c % &lead).is_zero() {
                return None;
            }
            let q = LaurentT::monomial(&c / &lead, T(hi - dhi));
            rem -= &(&q * divisor);
            quot += &q;
        }
        Some(quot)
    }
}

impl PolyMZ {
    pub fn mu() -> Self {
        Self::monomial(1, MuZ::new(1, 0))
    }

    pub fn z() -> Self {
        Self::monomial(1, MuZ::new(0, 1))
    }

    pub fn mu_pow(k: u32) -> Self {
        Self::monomial(1, MuZ::new(k, 0))
    }

    pub fn mu_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.mu).max()
    }

    pub fn z_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.z).max()
    }

    /// Multiplies by a polynomial in `z` alone.
    pub fn mul_z_poly(&self, p: &PolyZ) -> Self {
        self * &p.to_mu_z()
    }

    /// Drops every term of `z`-degree above `max_deg`.
    pub fn truncate_z(&self, max_deg: u32) -> Self {
        self.filter(|m| m.z <= max_deg)
    }

    /// The value at `mu = 0`.
    pub fn at_mu_zero(&self) -> PolyZ {
        let mut out = PolyZ::zero();
        for (m, c) in self.terms() {
            if m.mu == 0 {
                out.add_term(Z(m.z), c.clone());
            }
        }
        out
    }

    /// The value at `z = 0`.
    pub fn at_z_zero(&self) -> PolyMu {
        coeff_in_z(self, 0)
    }
}

/// The coefficient `p_j(mu)` of `z^j`.
pub fn coeff_in_z(p: &PolyMZ, j: u32) -> PolyMu {
    let mut out = PolyMu::zero();
    for (m, c) in p.terms() {
        if m.z == j {
            out.add_term(Mu(m.mu), c.clone());
        }
    }
    out
}

/// All `z`-coefficients `p_0, ..., p_deg`, padded with zeros up to `max_deg`.
pub fn z_coefficients(p: &PolyMZ, max_deg: u32) -> Vec<PolyMu> {
    (0..=max_deg).map(|j| coeff_in_z(p, j)).collect()
}

/// Reassembles `sum_j p_j(mu) z^j`.
pub fn from_z_coefficients(coeffs: &[PolyMu]) -> PolyMZ {
    let mut out = PolyMZ::zero();
    for (j, p) in coeffs.iter().enumerate() {
        for (m, c) in p.terms() {
            out.add_term(MuZ::new(m.0, j as u32), c.clone());
        }
    }
    out
}

/// Substitutes `mu = (1 - v^2)/z` and multiplies by `v^(e - n + 1)`.
///
/// For the framed value of a braid with exponent sum `e` on `n` strands this
/// is the standard Homfly polynomial of the closure, since `1 - mu*z`
/// becomes `v^2`.
pub fn substitute_mu(p: &PolyMZ, e: i64, n: i64) -> LaurentVZ {
    let one_minus_v2 = LaurentVZ::from_terms([(VZ::new(0, 0), 1), (VZ::new(2, 0), -1)]);
    // powers of (1 - v^2) are reused across terms
    let mut powers: Vec<LaurentVZ> = vec![LaurentVZ::one()];
    let mut out = LaurentVZ::zero();
    for (m, c) in p.terms() {
        while powers.len() <= m.mu as usize {
            let next = powers.last().unwrap() * &one_minus_v2;
            powers.push(next);
        }
        let shift = VZ::new(0, m.z as i32 - m.mu as i32);
        out += &powers[m.mu as usize].mul_monomial(&shift).scale(c);
    }
    out.mul_monomial(&VZ::new((e - n + 1) as i32, 0))
}

/// `(1 - mu*z)^m` expanded up to `z^max_deg`; exact for `m >= 0` once
/// `max_deg >= m`.
pub fn binomial_series(m: i64, max_deg: u32) -> PolyMZ {
    let mut out = PolyMZ::one();
    // generalized binomial C(m, j), updated as C(m, j) = C(m, j-1) (m-j+1) / j
    let mut binom = BigInt::one();
    for j in 1..=max_deg {
        binom = binom * BigInt::from(m - j as i64 + 1) / BigInt::from(j);
        if binom.is_zero() {
            break;
        }
        let c = if j % 2 == 0 { binom.clone() } else { -binom.clone() };
        out.add_term(MuZ::new(j, j), c);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn mz(terms: &[(u32, u32, i64)]) -> PolyMZ {
        PolyMZ::from_terms(terms.iter().map(|&(a, b, c)| (MuZ::new(a, b), c)))
    }

    fn vz(terms: &[(i32, i32, i64)]) -> LaurentVZ {
        LaurentVZ::from_terms(terms.iter().map(|&(a, b, c)| (VZ::new(a, b), c)))
    }

    #[test]
    fn additive_inverse_is_canonical_zero() {
        let p = PolyMZ::mu();
        let s = &p + &(-&p);
        assert!(s.is_zero());
        assert_eq!(s, PolyMZ::zero());
    }

    #[test]
    fn square_of_one_minus_mu_z() {
        let p = mz(&[(0, 0, 1), (1, 1, -1)]);
        assert_eq!(&p * &p, mz(&[(0, 0, 1), (1, 1, -2), (2, 2, 1)]));
    }

    #[test]
    fn trefoil_times_framing_factor() {
        let g = mz(&[(0, 0, 1), (1, 1, 1), (0, 2, 1)]);
        let f = mz(&[(0, 0, 1), (1, 1, -1)]);
        let expected = mz(&[(0, 0, 1), (0, 2, 1), (2, 2, -1), (1, 3, -1)]);
        assert_eq!(&g * &f, expected);
    }

    #[test]
    fn z_coefficients() {
        assert_eq!(coeff_in_z(&PolyMZ::mu_pow(2), 0), PolyMu::monomial(1, Mu(2)));
        let g = mz(&[(0, 0, 1), (1, 1, 1), (0, 2, 1)]);
        assert_eq!(coeff_in_z(&g, 1), PolyMu::mu());
        assert!(coeff_in_z(&g, 3).is_zero());
        assert_eq!(from_z_coefficients(&super::z_coefficients(&g, 4)), g);
    }

    #[test]
    fn substitution_examples() {
        assert_eq!(substitute_mu(&PolyMZ::one(), 1, 2), LaurentVZ::one());
        let trefoil = mz(&[(0, 0, 1), (1, 1, 1), (0, 2, 1)]);
        assert_eq!(substitute_mu(&trefoil, 3, 2), vz(&[(2, 0, 2), (4, 0, -1), (2, 2, 1)]));
        // three-component unlink: (v^-1 - v)^2 z^-2
        let unlink = substitute_mu(&PolyMZ::mu_pow(2), 0, 3);
        assert_eq!(unlink, vz(&[(-2, -2, 1), (0, -2, -2), (2, -2, 1)]));
    }

    #[test]
    fn binomial_series_examples() {
        assert_eq!(binomial_series(-1, 2), mz(&[(0, 0, 1), (1, 1, 1), (2, 2, 1)]));
        assert_eq!(binomial_series(2, 5), mz(&[(0, 0, 1), (1, 1, -2), (2, 2, 1)]));
        assert_eq!(binomial_series(-2, 3), mz(&[(0, 0, 1), (1, 1, 2), (2, 2, 3), (3, 3, 4)]));
        assert_eq!(binomial_series(0, 3), PolyMZ::one());
    }

    #[test]
    fn display_orders_by_z_then_other() {
        let g = mz(&[(0, 0, 1), (1, 1, 1), (0, 2, 1)]);
        assert_eq!(g.to_string(), "1 + mu*z + z^2");
        assert_eq!(vz(&[(2, 0, 2), (4, 0, -1), (2, 2, 1)]).to_string(), "2*v^2 - v^4 + v^2*z^2");
        assert_eq!(vz(&[(-2, 0, -1)]).to_string(), "-v^-2");
        assert_eq!(PolyMZ::zero().to_string(), "0");
    }

    #[test]
    fn laurent_exact_division() {
        let t = LaurentT::t();
        let one = LaurentT::one();
        let a = &(&t + &one) * &(&t.pow(2) - &t);
        assert_eq!(a.exact_div(&(&t + &one)), Some(&t.pow(2) - &t));
        assert_eq!((&t + &one).exact_div(&(&t - &one)), None);
        let shifted = LaurentT::t_pow(-3) * (&one - &t.pow(3));
        assert_eq!(shifted.exact_div(&(&one - &t)), Some(LaurentT::t_pow(-3) * (&one + &t + t.pow(2))));
    }

    fn arb_mz() -> impl Strategy<Value = PolyMZ> {
        prop::collection::vec((0u32..4, 0u32..4, -20i64..20), 0..6)
            .prop_map(|ts| PolyMZ::from_terms(ts.into_iter().map(|(a, b, c)| (MuZ::new(a, b), c))))
    }

    fn arb_vz() -> impl Strategy<Value = LaurentVZ> {
        prop::collection::vec((-3i32..4, -3i32..4, -20i64..20), 0..6)
            .prop_map(|ts| LaurentVZ::from_terms(ts.into_iter().map(|(a, b, c)| (VZ::new(a, b), c))))
    }

    fn arb_z() -> impl Strategy<Value = PolyZ> {
        prop::collection::vec((0u32..6, -20i64..20), 0..6).prop_map(|ts| PolyZ::from_terms(ts.into_iter().map(|(a, c)| (Z(a), c))))
    }

    fn arb_t() -> impl Strategy<Value = LaurentT> {
        prop::collection::vec((-4i32..5, -20i64..20), 0..6)
            .prop_map(|ts| LaurentT::from_terms(ts.into_iter().map(|(a, c)| (T(a), c))))
    }

    fn ring_laws<M: Monomial>(a: &Poly<M>, b: &Poly<M>, c: &Poly<M>) {
        assert_eq!(&(a + b) + c, a + &(b + c));
        assert_eq!(a + b, b + a);
        assert_eq!(&(a * b) * c, a * &(b * c));
        assert_eq!(a * b, b * a);
        assert_eq!(a * &(b + c), &(a * b) + &(a * c));
        assert_eq!(&(a - b) + b, a.clone());
        assert!(a.terms().all(|(_, c)| !c.is_zero()));
    }

    proptest! {
        #[test]
        fn ring_laws_mu_z(a in arb_mz(), b in arb_mz(), c in arb_mz()) { ring_laws(&a, &b, &c); }
        #[test]
        fn ring_laws_v_z(a in arb_vz(), b in arb_vz(), c in arb_vz()) { ring_laws(&a, &b, &c); }
        #[test]
        fn ring_laws_z(a in arb_z(), b in arb_z(), c in arb_z()) { ring_laws(&a, &b, &c); }
        #[test]
        fn ring_laws_t(a in arb_t(), b in arb_t(), c in arb_t()) { ring_laws(&a, &b, &c); }

        #[test]
        fn binomial_series_inverse(m in -12i64..12, k in 0u32..10) {
            let prod = (&binomial_series(m, k) * &binomial_series(-m, k)).truncate_z(k);
            prop_assert_eq!(prod, PolyMZ::one());
        }

        #[test]
        fn exact_division_recovers_factor(a in arb_t(), b in arb_t()) {
            prop_assume!(!b.is_zero());
            let prod = &a * &b;
            prop_assert_eq!(prod.exact_div(&b), Some(a));
        }
    }
}
