use std::fmt;

use serde::{Deserialize, Serialize};

/// The ring a Beaver triple lives in.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum TripleKind {
    Field,
    Series { m: usize },
    Matrix { n: usize },
    PolyMatrix { n: usize, d: usize },
    /// Coefficients of the monic modulus, ascending.
    ExtField { modulus: Vec<u64> },
}

/// Cost-report column a kind is accounted under.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TripleCategory {
    Field,
    Series,
    Mat,
    PolyMat,
    ExtField,
}

impl TripleKind {
    /// Words per player of the product component x.
    pub fn x_words(&self) -> usize {
        match self {
            TripleKind::Field => 1,
            TripleKind::Series { m } => *m,
            TripleKind::Matrix { n } => n * n,
            TripleKind::PolyMatrix { n, d } => n * n * (2 * d + 1),
            TripleKind::ExtField { modulus } => modulus.len() - 1,
        }
    }

    /// Words per player of each factor y and z.
    pub fn factor_words(&self) -> usize {
        match self {
            TripleKind::PolyMatrix { n, d } => n * n * (d + 1),
            other => other.x_words(),
        }
    }

    pub fn words_per_player(&self) -> usize {
        self.x_words() + 2 * self.factor_words()
    }

    /// Field triples consumed when this triple is built by the interactive
    /// generators (evaluation at 2k−1 points for degree-<k products,
    /// schoolbook n³ for matrices).
    pub fn field_equivalent(&self) -> u64 {
        let (n, k) = match self {
            TripleKind::Field => (1, 1),
            TripleKind::Series { m } => (1, *m),
            TripleKind::Matrix { n } => (*n, 1),
            TripleKind::PolyMatrix { n, d } => (*n, d + 1),
            TripleKind::ExtField { modulus } => (1, modulus.len() - 1),
        };
        ((n * n * n) * (2 * k - 1)) as u64
    }

    pub fn category(&self) -> TripleCategory {
        match self {
            TripleKind::Field => TripleCategory::Field,
            TripleKind::Series { .. } => TripleCategory::Series,
            TripleKind::Matrix { .. } => TripleCategory::Mat,
            TripleKind::PolyMatrix { .. } => TripleCategory::PolyMat,
            TripleKind::ExtField { .. } => TripleCategory::ExtField,
        }
    }
}

impl fmt::Display for TripleKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TripleKind::Field => write!(f, "field"),
            TripleKind::Series { m } => write!(f, "series(m={m})"),
            TripleKind::Matrix { n } => write!(f, "matrix(n={n})"),
            TripleKind::PolyMatrix { n, d } => write!(f, "polymatrix(n={n},d={d})"),
            TripleKind::ExtField { modulus } => write!(f, "extfield(f={modulus:?})"),
        }
    }
}
