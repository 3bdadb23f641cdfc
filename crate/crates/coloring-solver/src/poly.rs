use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;

/// The enhanced coloring polynomial Φ(L,X) = Σ_f q^|Im f|, stored
/// sparsely as image-size -> number of colorings.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct EnhancedPoly {
    pub coeffs: BTreeMap<usize, u64>,
}

impl EnhancedPoly {
    pub fn add_coloring(&mut self, image_size: usize) {
        *self.coeffs.entry(image_size).or_default() += 1;
    }

    pub fn total(&self) -> u64 {
        self.coeffs.values().sum()
    }

    pub fn from_pairs(pairs: &[(usize, u64)]) -> Self {
        EnhancedPoly {
            coeffs: pairs.iter().copied().collect(),
        }
    }
}

impl fmt::Display for EnhancedPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .map(|(k, c)| format!("{c}q^{k}"))
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}
