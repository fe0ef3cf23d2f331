//! The framed Homfly engine.
//!
//! A braid word is pushed into the Hecke algebra `H_n` over `Z[z]`, whose
//! basis is indexed by permutations (positive permutation braids) and whose
//! generators satisfy `g² = z·g + 1`. The value `Γ` is then read off with a
//! Markov trace computed one strand at a time:
//!
//! * `tr(x) = mu · tr(x restricted)` when the last strand is a fixed point,
//! * `tr(x · g_{n-1}) = tr(x)` for `x` in `H_{n-1}`,
//! * `tr(id_1) = 1`.
//!
//! `mu` never enters the algebra itself; it only appears when a strand is
//! dropped during the trace.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{LazyLock, RwLock};

use crate::braid::BraidWord;
use crate::error::{Error, Result};
use crate::poly::{PolyMZ, PolyZ, Z};

/// A permutation of `0..n`, stored as its image list.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm(Vec<u8>);

impl Perm {
    pub fn identity(n: usize) -> Self {
        assert!(n <= u8::MAX as usize);
        Perm((0..n as u8).collect())
    }

    /// Panics unless `images` is a permutation of `0..images.len()`.
    pub fn from_images(images: &[usize]) -> Self {
        let mut seen = vec![false; images.len()];
        for &i in images {
            assert!(i < images.len() && !seen[i], "not a permutation: {images:?}");
            seen[i] = true;
        }
        Perm(images.iter().map(|&i| i as u8).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn images(&self) -> Vec<usize> {
        self.0.iter().map(|&i| i as usize).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| i == x as usize)
    }

    fn position_of(&self, value: usize) -> usize {
        self.0.iter().position(|&x| x as usize == value).expect("value in range")
    }

    /// `w ∘ s_i` for the 1-based generator `i`: swaps positions `i-1` and `i`.
    fn times_generator(&self, i: usize) -> Perm {
        let mut p = self.0.clone();
        p.swap(i - 1, i);
        Perm(p)
    }

    /// `s_i ∘ w`: swaps the values `i-1` and `i`.
    fn generator_times(&self, i: usize) -> Perm {
        let (a, b) = ((i - 1) as u8, i as u8);
        Perm(self.0.iter().map(|&x| if x == a { b } else if x == b { a } else { x }).collect())
    }

    /// Number of inversions.
    pub fn length(&self) -> usize {
        let p = &self.0;
        (0..p.len()).map(|i| (i + 1..p.len()).filter(|&j| p[i] > p[j]).count()).sum()
    }

    /// A reduced word `[i_1, ..., i_m]` with `w = s_{i_1} ∘ ... ∘ s_{i_m}`.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut p = self.clone();
        let mut steps = Vec::new();
        'outer: loop {
            for i in 1..p.len() {
                if p.0[i - 1] > p.0[i] {
                    p = p.times_generator(i);
                    steps.push(i);
                    continue 'outer;
                }
            }
            break;
        }
        steps.reverse();
        steps
    }

    /// Factors `w = u ∘ s_{n-1} ∘ ... ∘ s_k` with `u` fixing the last point.
    ///
    /// Returns `None` when `w` already fixes the last point, otherwise `u`
    /// restricted to `0..n-1` and the 1-based index `k`.
    pub fn coset_factor(&self) -> Option<(Perm, usize)> {
        let n = self.len();
        let top = (n - 1) as u8;
        if self.0[n - 1] == top {
            return None;
        }
        let kpos = self.position_of(n - 1);
        let mut u = self.0.clone();
        u.remove(kpos);
        Some((Perm(u), kpos + 1))
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm{:?}", self.0)
    }
}

/// A `Z[z]`-linear combination of permutation basis elements of `H_n`.
#[derive(Clone, PartialEq, Eq)]
pub struct HeckeElement {
    strands: usize,
    combo: BTreeMap<Perm, PolyZ>,
}

impl fmt::Debug for HeckeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.combo.iter().map(|(p, c)| (p, c.to_string()))).finish()
    }
}

fn accumulate(combo: &mut BTreeMap<Perm, PolyZ>, w: Perm, c: &PolyZ) {
    use std::collections::btree_map::Entry;
    match combo.entry(w) {
        Entry::Vacant(e) => {
            if !c.is_zero() {
                e.insert(c.clone());
            }
        }
        Entry::Occupied(mut e) => {
            *e.get_mut() += c;
            if e.get().is_zero() {
                e.remove();
            }
        }
    }
}

impl HeckeElement {
    pub fn unit(strands: usize) -> Self {
        Self::basis(Perm::identity(strands))
    }

    pub fn basis(w: Perm) -> Self {
        let strands = w.len();
        HeckeElement { strands, combo: BTreeMap::from([(w, PolyZ::one())]) }
    }

    pub fn from_terms(strands: usize, terms: impl IntoIterator<Item = (Perm, PolyZ)>) -> Self {
        let mut combo = BTreeMap::new();
        for (w, c) in terms {
            assert_eq!(w.len(), strands);
            accumulate(&mut combo, w, &c);
        }
        HeckeElement { strands, combo }
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Perm, &PolyZ)> {
        self.combo.iter()
    }

    pub fn coeff(&self, w: &Perm) -> PolyZ {
        self.combo.get(w).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.combo.is_empty()
    }

    fn check_generator(&self, i: usize, letter: i32) -> Result<()> {
        if i == 0 || i >= self.strands {
            return Err(Error::GeneratorOutOfRange { letter, strands: self.strands });
        }
        Ok(())
    }

    fn right_generator(&self, i: usize) -> HeckeElement {
        let mut out = BTreeMap::new();
        for (w, c) in &self.combo {
            let ws = w.times_generator(i);
            if w.0[i - 1] < w.0[i] {
                accumulate(&mut out, ws, c);
            } else {
                accumulate(&mut out, w.clone(), &c.mul_monomial(&Z(1)));
                accumulate(&mut out, ws, c);
            }
        }
        HeckeElement { strands: self.strands, combo: out }
    }

    fn left_generator(&self, i: usize) -> HeckeElement {
        let mut out = BTreeMap::new();
        for (w, c) in &self.combo {
            let sw = w.generator_times(i);
            if w.position_of(i - 1) < w.position_of(i) {
                accumulate(&mut out, sw, c);
            } else {
                accumulate(&mut out, w.clone(), &c.mul_monomial(&Z(1)));
                accumulate(&mut out, sw, c);
            }
        }
        HeckeElement { strands: self.strands, combo: out }
    }

    fn minus_z_times(&self, other: &HeckeElement) -> HeckeElement {
        let mut combo = self.combo.clone();
        for (w, c) in &other.combo {
            accumulate(&mut combo, w.clone(), &-c.mul_monomial(&Z(1)));
        }
        HeckeElement { strands: self.strands, combo }
    }

    /// `self · σ_{|letter|}^{±1}`, using `σ² = zσ + 1` and `σ^{-1} = σ - z`.
    pub fn right_multiply(&self, letter: i32) -> Result<HeckeElement> {
        let i = letter.unsigned_abs() as usize;
        self.check_generator(i, letter)?;
        let g = self.right_generator(i);
        Ok(if letter > 0 { g } else { g.minus_z_times(self) })
    }

    /// `σ_{|letter|}^{±1} · self`.
    pub fn left_multiply(&self, letter: i32) -> Result<HeckeElement> {
        let i = letter.unsigned_abs() as usize;
        self.check_generator(i, letter)?;
        let g = self.left_generator(i);
        Ok(if letter > 0 { g } else { g.minus_z_times(self) })
    }

    /// The image of a braid word in `H_n`.
    pub fn from_word(w: &BraidWord) -> HeckeElement {
        w.letters().iter().fold(HeckeElement::unit(w.strands()), |h, &l| {
            h.right_multiply(l).expect("letters of a BraidWord are in range")
        })
    }
}

static BASIS_TRACE: LazyLock<RwLock<HashMap<Perm, PolyMZ>>> = LazyLock::new(Default::default);

/// Trace of a single basis element `T_w`.
pub fn basis_trace(w: &Perm) -> PolyMZ {
    if let Some(v) = BASIS_TRACE.read().unwrap().get(w) {
        return v.clone();
    }
    let value = basis_trace_uncached(w);
    BASIS_TRACE.write().unwrap().insert(w.clone(), value.clone());
    value
}

fn basis_trace_uncached(w: &Perm) -> PolyMZ {
    let n = w.len();
    if n <= 1 {
        return PolyMZ::one();
    }
    match w.coset_factor() {
        None => {
            let restricted = Perm(w.0[..n - 1].to_vec());
            &basis_trace(&restricted) * &PolyMZ::mu()
        }
        Some((u, k)) => {
            // tr(T_u g_{n-1} g_{n-2} ... g_k) = tr_{n-1}(g_{n-2} ... g_k T_u)
            let mut h = HeckeElement::basis(u);
            for j in k..=n - 2 {
                h = h.left_generator(j);
            }
            markov_trace(&h)
        }
    }
}

/// The Markov trace normalized so that `tr(id_n) = mu^{n-1}`.
pub fn markov_trace(h: &HeckeElement) -> PolyMZ {
    h.terms().map(|(w, c)| basis_trace(w).mul_z_poly(c)).sum()
}

/// `Γ` of a braid closure together with the data needed to interpret it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammaResult {
    pub value: PolyMZ,
    pub strands: usize,
    pub exponent_sum: i64,
    pub components: usize,
    pub word_length: usize,
}

static GAMMA_CACHE: LazyLock<RwLock<HashMap<String, PolyMZ>>> = LazyLock::new(Default::default);

/// `Γ(w)`, memoized on the cyclic key of `w`.
pub fn gamma(w: &BraidWord) -> GammaResult {
    let key = w.canonical_cyclic_key();
    let cached = GAMMA_CACHE.read().unwrap().get(&key).cloned();
    let value = match cached {
        Some(v) => v,
        None => {
            let v = gamma_value_uncached(&w.cyclically_reduced());
            GAMMA_CACHE.write().unwrap().entry(key).or_insert(v).clone()
        }
    };
    wrap(w, value)
}

/// `Γ(w)` without touching the memo cache.
pub fn gamma_uncached(w: &BraidWord) -> GammaResult {
    wrap(w, gamma_value_uncached(w))
}

fn gamma_value_uncached(w: &BraidWord) -> PolyMZ {
    markov_trace(&HeckeElement::from_word(w))
}

fn wrap(w: &BraidWord, value: PolyMZ) -> GammaResult {
    GammaResult {
        value,
        strands: w.strands(),
        exponent_sum: w.exponent_sum(),
        components: w.components(),
        word_length: w.len(),
    }
}

/// Drops every memoized `Γ` value.
pub fn clear_cache() {
    GAMMA_CACHE.write().unwrap().clear();
}

/// `Γ(σ_1^k)` on two strands from the skein recursion alone:
/// `Γ(σ^k) = z Γ(σ^{k-1}) + Γ(σ^{k-2})`, `Γ(σ^0) = mu`, `Γ(σ^1) = 1`.
pub fn gamma_b2_oracle(k: i64) -> PolyMZ {
    let z = PolyMZ::z();
    let (mut prev, mut cur) = (PolyMZ::mu(), PolyMZ::one());
    if k >= 0 {
        if k == 0 {
            return prev;
        }
        for _ in 1..k {
            let next = &(&z * &cur) + &prev;
            prev = std::mem::replace(&mut cur, next);
        }
        cur
    } else {
        // walk downwards: Γ(σ^{j-2}) = Γ(σ^j) - z Γ(σ^{j-1})
        let (mut hi, mut lo) = (cur, prev);
        for _ in 0..(-k) {
            let next = &hi - &(&z * &lo);
            hi = std::mem::replace(&mut lo, next);
        }
        lo
    }
}
