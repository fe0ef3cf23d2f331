//! Braid words, their closures and the moves that preserve the closure.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

/// A word in the braid group `B_n`.
///
/// Letter `i > 0` is the generator `σ_i`, letter `-i` its inverse.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    /// Checks that every generator index lies in `1..strands`.
    pub fn new(strands: usize, letters: Vec<i32>) -> Result<Self> {
        if strands == 0 {
            return Err(Error::ZeroStrands);
        }
        for &l in &letters {
            if l == 0 {
                return Err(Error::MalformedToken("0".into()));
            }
            if l.unsigned_abs() as usize >= strands {
                return Err(Error::GeneratorOutOfRange { letter: l, strands });
            }
        }
        Ok(BraidWord { strands, letters })
    }

    /// The identity braid on `strands` strands.
    pub fn identity(strands: usize) -> Self {
        assert!(strands >= 1);
        BraidWord { strands, letters: Vec::new() }
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|&l| l.signum() as i64).sum()
    }

    /// The permutation induced on `0..n`, as the image list of the product
    /// of transpositions `(|l|-1, |l|)` taken in word order.
    pub fn permutation(&self) -> Vec<usize> {
        let mut perm: Vec<usize> = (0..self.strands).collect();
        for &l in &self.letters {
            let i = l.unsigned_abs() as usize;
            perm.swap(i - 1, i);
        }
        perm
    }

    pub fn closure_info(&self) -> ClosureInfo {
        let permutation = self.permutation();
        let components = cycle_count(&permutation);
        ClosureInfo { components, permutation }
    }

    pub fn components(&self) -> usize {
        self.closure_info().components
    }

    pub fn is_knot(&self) -> bool {
        self.components() == 1
    }

    /// Flips the sign of every crossing.
    pub fn mirror(&self) -> Self {
        BraidWord { strands: self.strands, letters: self.letters.iter().map(|l| -l).collect() }
    }

    pub fn inverse(&self) -> Self {
        BraidWord { strands: self.strands, letters: self.letters.iter().rev().map(|l| -l).collect() }
    }

    /// Concatenation; the result lives on the larger strand count.
    pub fn concat(&self, other: &BraidWord) -> Self {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        BraidWord { strands: self.strands.max(other.strands), letters }
    }

    /// Appends one letter, widening the strand count if needed.
    pub fn push(&mut self, letter: i32) {
        assert_ne!(letter, 0);
        self.strands = self.strands.max(letter.unsigned_abs() as usize + 1);
        self.letters.push(letter);
    }

    /// The same word viewed on more strands.
    pub fn with_strands(&self, strands: usize) -> Result<Self> {
        BraidWord::new(strands, self.letters.clone())
    }

    /// Adds a new strand and a crossing `σ_n^{±1}` with it.
    pub fn stabilize(&self, positive: bool) -> Self {
        let n = self.strands as i32;
        let mut letters = self.letters.clone();
        letters.push(if positive { n } else { -n });
        BraidWord { strands: self.strands + 1, letters }
    }

    /// Rotates the word left by `k` letters (a conjugation).
    pub fn rotate(&self, k: usize) -> Self {
        let mut letters = self.letters.clone();
        if !letters.is_empty() {
            let k = k % letters.len();
            letters.rotate_left(k);
        }
        BraidWord { strands: self.strands, letters }
    }

    /// Cancels adjacent inverse pairs, including across the wrap-around.
    pub fn cyclically_reduced(&self) -> Self {
        let mut stack: Vec<i32> = Vec::with_capacity(self.letters.len());
        for &l in &self.letters {
            if stack.last() == Some(&-l) {
                stack.pop();
            } else {
                stack.push(l);
            }
        }
        let (mut lo, mut hi) = (0, stack.len());
        while hi - lo >= 2 && stack[lo] == -stack[hi - 1] {
            lo += 1;
            hi -= 1;
        }
        BraidWord { strands: self.strands, letters: stack[lo..hi].to_vec() }
    }

    /// A memoization key that is constant on cyclic rotations and free
    /// insertions or cancellations of `σ_i σ_i^{-1}`.
    ///
    /// Equal keys imply conjugate braids; the converse does not hold.
    pub fn canonical_cyclic_key(&self) -> String {
        let reduced = self.cyclically_reduced();
        let letters = &reduced.letters;
        let best = (0..letters.len().max(1))
            .map(|k| {
                let mut r = letters.clone();
                if !r.is_empty() {
                    r.rotate_left(k);
                }
                r
            })
            .min()
            .unwrap_or_default();
        let body: Vec<String> = best.iter().map(|l| l.to_string()).collect();
        format!("{}:{}", self.strands, body.join(","))
    }

    /// Splits along a generator index `j` that does not occur in the word:
    /// strands `1..=j` and `j+1..=n` never cross.
    pub fn split_at(&self, j: usize) -> Option<(BraidWord, BraidWord)> {
        if j == 0 || j >= self.strands || self.letters.iter().any(|l| l.unsigned_abs() as usize == j) {
            return None;
        }
        let left = self.letters.iter().copied().filter(|l| (l.unsigned_abs() as usize) < j).collect();
        let right = self
            .letters
            .iter()
            .copied()
            .filter(|l| (l.unsigned_abs() as usize) > j)
            .map(|l| l.signum() * (l.abs() - j as i32))
            .collect();
        Some((BraidWord { strands: j, letters: left }, BraidWord { strands: self.strands - j, letters: right }))
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<String> = self.letters.iter().map(|l| l.to_string()).collect();
        write!(f, "{}", body.join(" "))
    }
}

/// Parses whitespace-separated signed generator indices.
///
/// Without an explicit strand count the word lives on `1 + max |l|` strands.
pub fn parse(text: &str, strands: Option<usize>) -> Result<BraidWord> {
    let mut letters = Vec::new();
    for tok in text.split_whitespace() {
        let l: i32 = tok.parse().map_err(|_| Error::MalformedToken(tok.to_string()))?;
        if l == 0 {
            return Err(Error::MalformedToken(tok.to_string()));
        }
        letters.push(l);
    }
    let n = match strands {
        Some(n) => n,
        None => 1 + letters.iter().map(|l| l.unsigned_abs() as usize).max().unwrap_or(0),
    };
    BraidWord::new(n, letters)
}

impl FromStr for BraidWord {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse(s, None)
    }
}

/// Component count and permutation of a braid closure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosureInfo {
    pub components: usize,
    /// Image list of the induced permutation of `0..n`.
    pub permutation: Vec<usize>,
}

fn cycle_count(perm: &[usize]) -> usize {
    let mut seen = vec![false; perm.len()];
    let mut cycles = 0;
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        cycles += 1;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = perm[i];
        }
    }
    cycles
}

/// How a word in [`markov_moves`] was obtained from its source.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MoveKind {
    Conjugation,
    PositiveStabilization,
    NegativeStabilization,
    BraidRelation,
    FreeInsertion,
    FreeCancellation,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MarkovMove {
    pub kind: MoveKind,
    pub word: BraidWord,
}

/// A finite sample of words with the same closure (up to framing for the
/// negative stabilization).
pub fn markov_moves(w: &BraidWord) -> Vec<MarkovMove> {
    let mut out = Vec::new();
    let mv = |kind, word| MarkovMove { kind, word };

    for k in 0..w.len().max(1) {
        out.push(mv(MoveKind::Conjugation, w.rotate(k)));
    }
    out.push(mv(MoveKind::PositiveStabilization, w.stabilize(true)));
    out.push(mv(MoveKind::NegativeStabilization, w.stabilize(false)));

    let l = &w.letters;
    for p in 0..l.len() {
        if p + 2 < l.len() {
            let (a, b, c) = (l[p], l[p + 1], l[p + 2]);
            if a == c && a.signum() == b.signum() && (a.abs() - b.abs()).abs() == 1 {
                let mut letters = l.clone();
                letters[p..p + 3].copy_from_slice(&[b, a, b]);
                out.push(mv(MoveKind::BraidRelation, BraidWord { strands: w.strands, letters }));
            }
        }
        if p + 1 < l.len() {
            let (a, b) = (l[p], l[p + 1]);
            if (a.abs() - b.abs()).abs() >= 2 {
                let mut letters = l.clone();
                letters.swap(p, p + 1);
                out.push(mv(MoveKind::BraidRelation, BraidWord { strands: w.strands, letters }));
            }
        }
    }

    for i in 1..w.strands as i32 {
        for s in [i, -i] {
            let mut letters = vec![s, -s];
            letters.extend_from_slice(l);
            out.push(mv(MoveKind::FreeInsertion, BraidWord { strands: w.strands, letters }));
        }
    }
    if l.len() >= 2 && l[0] == -l[1] {
        out.push(mv(MoveKind::FreeCancellation, BraidWord { strands: w.strands, letters: l[2..].to_vec() }));
    }
    out
}

/// Deterministic random word with letters uniform over `±1..=±(n-1)`.
pub fn random_braid(n: usize, length: usize, seed: u64) -> BraidWord {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_braid_with(&mut rng, n, length)
}

pub fn random_braid_with<R: Rng + ?Sized>(rng: &mut R, n: usize, length: usize) -> BraidWord {
    assert!(n >= 2, "random braids need at least two strands");
    let top = n as i32 - 1;
    let letters = (0..length)
        .map(|_| {
            let i = rng.gen_range(1..=top);
            if rng.gen_bool(0.5) {
                i
            } else {
                -i
            }
        })
        .collect();
    BraidWord { strands: n, letters }
}

/// Every word of exactly `length` letters in `B_n`, in lexicographic order of
/// the letter alphabet `-(n-1)..=-1, 1..=n-1`.
pub fn enumerate_words(n: usize, length: usize) -> impl Iterator<Item = BraidWord> {
    let alphabet: Vec<i32> = (1..n as i32).flat_map(|i| [-i, i]).collect();
    let a = alphabet.len();
    let total = if a == 0 { usize::from(length == 0) } else { a.pow(length as u32) };
    (0..total).map(move |mut idx| {
        let mut letters = vec![0; length];
        for slot in letters.iter_mut().rev() {
            *slot = alphabet[idx % a];
            idx /= a;
        }
        BraidWord { strands: n, letters }
    })
}

/// The left-normed commutator `γ_depth` in `B_3` on `a = σ_1^2`, `b = σ_2^2`:
/// `γ_2 = a b a^{-1} b^{-1}` and `γ_{d+1} = γ_d a γ_d^{-1} a^{-1}`.
pub fn lcs_commutator(depth: usize) -> BraidWord {
    assert!(depth >= 2, "commutator depth starts at 2");
    let a = BraidWord { strands: 3, letters: vec![1, 1] };
    let b = BraidWord { strands: 3, letters: vec![2, 2] };
    let commutator = |x: &BraidWord, y: &BraidWord| x.concat(y).concat(&x.inverse()).concat(&y.inverse());
    let mut g = commutator(&a, &b);
    for _ in 2..depth {
        g = commutator(&g, &a);
    }
    g
}
