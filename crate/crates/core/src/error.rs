use thiserror::Error;

use crate::point::Point;

/// Errors raised anywhere in the construction or counting pipeline.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("point configuration contains duplicate point {0}")]
    DuplicatePoint(Point),

    #[error("point configuration is empty")]
    EmptyConfig,

    #[error("not a regular octahedron: {0}")]
    NotOctahedron(String),

    #[error("{0} has no decomposition x^2 + 3y^2 with x, y > 0")]
    NoDecomposition(i64),

    #[error("norm of {u} + {v}*sqrt(-3) has prime factor {prime} that does not split")]
    NotRepresentable { u: i64, v: i64, prime: i64 },

    #[error("factorization of {u} + {v}*sqrt(-3) does not reconstruct the input")]
    Reconstruction { u: i64, v: i64 },

    #[error("zero is not factorable")]
    ZeroInput,

    #[error("common divisor {common} squared does not divide 2q = {two_q}")]
    ContentTooLarge { common: i64, two_q: i64 },

    #[error("(r, s) = ({r}, {s}) leaves residues ({residue1}, {residue2}) mod {modulus}")]
    NonzeroResidue {
        r: i64,
        s: i64,
        residue1: i64,
        residue2: i64,
        modulus: i64,
    },

    #[error("{0} is not a perfect square")]
    NotSquare(i64),

    #[error("{num} is not divisible by {den}")]
    Inexact { num: i64, den: i64 },

    #[error("face normal {0} is not a valid normal (|U|^2 / 3g^2 is not a square)")]
    InvalidNormal(Point),

    #[error("construction failed for k={k}, (m, n)=({m}, {n}), abc={abc:?}: {source}")]
    Construction {
        k: i64,
        m: i64,
        n: i64,
        abc: [i64; 3],
        #[source]
        source: Box<Error>,
    },

    #[error("oracle refuses n={n} above the feasibility bound {bound}")]
    OracleBound { n: i64, bound: i64 },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
