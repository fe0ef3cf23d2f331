use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("malformed braid token {0:?}: expected a nonzero integer")]
    MalformedToken(String),

    #[error("generator {letter} needs at least {} strands, word has {strands}", letter.unsigned_abs() + 1)]
    GeneratorOutOfRange { letter: i32, strands: usize },

    #[error("a braid needs at least one strand")]
    ZeroStrands,

    #[error("closure has {components} components, expected a knot")]
    NotAKnot { components: usize },

    #[error("Alexander polynomial normalization failed: {0}")]
    NormalizationFailure(String),

    #[error("witness braid {word} has z^{degree} coefficient {found}, expected ±mu^{expected_mu}")]
    WitnessMismatch { word: String, degree: u32, found: String, expected_mu: u32 },

    #[error("rank {observed} for n={n}, k={k} falls short of {predicted}")]
    RankDeficient { n: usize, k: u32, observed: usize, predicted: usize },

    #[error("rank {observed} for n={n}, k={k} exceeds the bound {predicted}")]
    RankExceedsBound { n: usize, k: u32, observed: usize, predicted: usize },

    #[error("series truncated at degree {have}, reconstruction needs {need}")]
    SeriesTooShort { have: u32, need: u32 },
}
