use crate::error::QuandleError;
use crate::table::QuandleTable;
use serde::{Deserialize, Serialize};

/// A composite of the translation maps `f_{xy}(q) = (q *⁻¹ x) * y`.
///
/// `pairs = [(x1,y1), ..., (xk,yk)]` denotes `f_{x1y1} ∘ ... ∘ f_{xkyk}`,
/// so the last pair acts first. On a medial quandle the factors commute,
/// making the order immaterial there.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FMap {
    pub pairs: Vec<(usize, usize)>,
}

impl FMap {
    pub fn identity() -> Self {
        FMap { pairs: Vec::new() }
    }

    pub fn single(x: usize, y: usize) -> Self {
        FMap {
            pairs: vec![(x, y)],
        }
    }

    /// The inverse composite: reversed list with each pair swapped,
    /// since f_{yx} ∘ f_{xy} is the identity.
    pub fn inverse(&self) -> Self {
        FMap {
            pairs: self.pairs.iter().rev().map(|&(x, y)| (y, x)).collect(),
        }
    }

    /// `self ∘ other` (other acts first).
    pub fn compose(&self, other: &FMap) -> Self {
        let mut pairs = self.pairs.clone();
        pairs.extend(other.pairs.iter().copied());
        FMap { pairs }
    }

    pub fn apply(&self, q: &QuandleTable, elem: usize) -> Result<usize, QuandleError> {
        if elem >= q.order() {
            return Err(QuandleError::IndexOutOfRange {
                index: elem,
                n: q.order(),
            });
        }
        let mut acc = elem;
        for &(x, y) in self.pairs.iter().rev() {
            if x >= q.order() || y >= q.order() {
                return Err(QuandleError::IndexOutOfRange {
                    index: x.max(y),
                    n: q.order(),
                });
            }
            acc = q.mul(q.mul_inv(acc, x), y);
        }
        Ok(acc)
    }
}

/// One translation step, unchecked.
#[inline]
pub fn fmap_step(q: &QuandleTable, x: usize, y: usize, elem: usize) -> usize {
    q.mul(q.mul_inv(elem, x), y)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::alexander_quandle;
    use crate::enumerate::{enumerate_quandles, EnumFilter};
    use proptest::prelude::*;

    #[test]
    fn diagonal_pair_is_identity() {
        let q = alexander_quandle(4, &[-3, 1]).unwrap();
        for x in 0..4 {
            let f = FMap::single(x, x);
            for e in 0..4 {
                assert_eq!(f.apply(&q, e).unwrap(), e);
            }
        }
    }

    #[test]
    fn z4_t3_single_step_by_table() {
        let q = alexander_quandle(4, &[-3, 1]).unwrap();
        // Oracle by table lookups: q with q*0 = 2 is 2, then 2*1 = 0.
        let mut pre = None;
        for cand in 0..4 {
            if q.mul(cand, 0) == 2 {
                pre = Some(cand);
            }
        }
        let expected = q.mul(pre.unwrap(), 1);
        assert_eq!(FMap::single(0, 1).apply(&q, 2).unwrap(), expected);
        assert_eq!(expected, 0);
    }

    #[test]
    fn swapped_composition_cancels() {
        // f_{yx} ∘ f_{xy} is the identity on any quandle.
        for q in enumerate_quandles(4, EnumFilter::All, true).unwrap() {
            let n = q.order();
            for x in 0..n {
                for y in 0..n {
                    let f = FMap {
                        pairs: vec![(y, x), (x, y)],
                    };
                    for e in 0..n {
                        assert_eq!(f.apply(&q, e).unwrap(), e);
                    }
                }
            }
        }
    }

    #[test]
    fn inverse_undoes_apply() {
        let q = alexander_quandle(3, &[1, 0, 1]).unwrap();
        let f = FMap {
            pairs: vec![(1, 5), (2, 7), (0, 3)],
        };
        let inv = f.inverse();
        for e in 0..q.order() {
            let fwd = f.apply(&q, e).unwrap();
            assert_eq!(inv.apply(&q, fwd).unwrap(), e);
        }
    }

    #[test]
    fn adjacent_swap_commutes_on_medial_quandles() {
        // Property 4: f_xy ∘ f_ab = f_ab ∘ f_xy on medial quandles (<= 5).
        for n in 2..=4usize {
            for q in enumerate_quandles(n, EnumFilter::Medial, true).unwrap() {
                for a in 0..n {
                    for b in 0..n {
                        for x in 0..n {
                            for y in 0..n {
                                let fg = FMap {
                                    pairs: vec![(x, y), (a, b)],
                                };
                                let gf = FMap {
                                    pairs: vec![(a, b), (x, y)],
                                };
                                for e in 0..n {
                                    assert_eq!(
                                        fg.apply(&q, e).unwrap(),
                                        gf.apply(&q, e).unwrap()
                                    );
                                }
                            }
                        }
                    }
                }
            }
        }
    }

    proptest! {
        // Property 5: permuting the factor list leaves the composite
        // unchanged pointwise on a medial quandle.
        #[test]
        fn permuted_lists_agree_on_medial(
            seed in 0u64..1000,
            len in 1usize..=5,
        ) {
            use rand::{seq::SliceRandom, Rng, SeedableRng};
            let q = alexander_quandle(5, &[-2, 1]).unwrap();
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let n = q.order();
            let pairs: Vec<(usize, usize)> =
                (0..len).map(|_| (rng.gen_range(0..n), rng.gen_range(0..n))).collect();
            let mut shuffled = pairs.clone();
            shuffled.shuffle(&mut rng);
            let f = FMap { pairs };
            let g = FMap { pairs: shuffled };
            for e in 0..n {
                prop_assert_eq!(f.apply(&q, e).unwrap(), g.apply(&q, e).unwrap());
            }
        }

        // Properties 6/7: composites are homomorphisms for * and *⁻¹.
        #[test]
        fn composites_are_homomorphisms(
            seed in 0u64..1000,
            len in 1usize..=4,
        ) {
            use rand::{Rng, SeedableRng};
            let q = alexander_quandle(2, &[1, 1, 1]).unwrap();
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let n = q.order();
            let f = FMap {
                pairs: (0..len).map(|_| (rng.gen_range(0..n), rng.gen_range(0..n))).collect(),
            };
            for a in 0..n {
                for b in 0..n {
                    let fa = f.apply(&q, a).unwrap();
                    let fb = f.apply(&q, b).unwrap();
                    prop_assert_eq!(f.apply(&q, q.mul(a, b)).unwrap(), q.mul(fa, fb));
                    prop_assert_eq!(f.apply(&q, q.mul_inv(a, b)).unwrap(), q.mul_inv(fa, fb));
                }
            }
        }
    }
}
