//! Brute-force ground truth over prime fields, seeded random instances and
//! the built-in catalog.
//!
//! Candidates are indexed by the integer whose base-`p` digits, most
//! significant first, are the residues of the coefficient arrays laid out
//! row-major one after the other. Exhaustive output is therefore in
//! lexicographic order of the arrays.

mod catalog;
mod random;

use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bundle::Bundle;
use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::hom::HomAlgebra;
use crate::rota_baxter::{check_rb_system, check_weighted_rb};
use crate::tensor::{LinearMap, Tensor2};
use crate::yang_baxter::check_yb_pair;

pub use catalog::{catalog, catalog_over, dual_numbers, nonassociative_pair, zero_algebra, CatalogInstance, CATALOG_NAMES};
pub use random::{alpha_commutant, invariant_subspace, random_instance, RandomKind, RANDOM_KINDS};

/// Largest candidate count enumerated exhaustively.
pub const EXHAUSTIVE_BOUND: u128 = 1 << 24;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SearchTarget {
    RbSystems,
    YbPairs,
    WeightedRb,
}

impl SearchTarget {
    pub fn as_str(&self) -> &'static str {
        match self {
            SearchTarget::RbSystems => "rb_systems",
            SearchTarget::YbPairs => "yb_pairs",
            SearchTarget::WeightedRb => "weighted_rb",
        }
    }

    fn arrays(&self) -> u32 {
        match self {
            SearchTarget::WeightedRb => 1,
            _ => 2,
        }
    }
}

impl FromStr for SearchTarget {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.replace('-', "_").as_str() {
            "rb_systems" => Ok(SearchTarget::RbSystems),
            "yb_pairs" => Ok(SearchTarget::YbPairs),
            "weighted_rb" => Ok(SearchTarget::WeightedRb),
            _ => Err(Error::UnknownName(s.to_string())),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SearchMode {
    Exhaustive,
    /// `samples` uniform draws from the candidate space.
    Sampled { seed: u64, samples: u64 },
}

#[derive(Clone, Debug)]
pub struct SearchTask {
    pub target: SearchTarget,
    pub algebra: HomAlgebra,
    pub mode: SearchMode,
    /// Weight for [`SearchTarget::WeightedRb`].
    pub lambda: Option<Scalar>,
}

impl SearchTask {
    pub fn exhaustive(target: SearchTarget, algebra: HomAlgebra) -> Self {
        Self {
            target,
            algebra,
            mode: SearchMode::Exhaustive,
            lambda: None,
        }
    }

    pub fn with_lambda(mut self, lambda: Scalar) -> Self {
        self.lambda = Some(lambda);
        self
    }

    fn prime(&self) -> Result<u32> {
        match self.algebra.field() {
            FieldSpec::Prime { p } => Ok(p),
            FieldSpec::Rational => Err(Error::InvalidField("search needs a prime field".into())),
        }
    }

    /// `p^(k·n²)` with `k` coefficient arrays.
    pub fn space_size(&self) -> Result<u128> {
        let p = u128::from(self.prime()?);
        let n = self.algebra.dim() as u32;
        let digits = self.target.arrays() * n * n;
        Ok(p.checked_pow(digits).unwrap_or(u128::MAX))
    }

    /// The candidate with the given index.
    pub fn candidate(&self, index: u128) -> Result<Solution> {
        let p = self.prime()?;
        let field = self.algebra.field();
        let n = self.algebra.dim();
        let len = self.target.arrays() as usize * n * n;
        let mut digits = vec![field.zero(); len];
        let mut rest = index;
        for slot in digits.iter_mut().rev() {
            *slot = field.element((rest % u128::from(p)) as u32);
            rest /= u128::from(p);
        }
        let second = digits.split_off(n * n);
        Ok(match self.target {
            SearchTarget::RbSystems => Solution::RbSystem {
                r: LinearMap::new(field, n, digits)?,
                s: LinearMap::new(field, n, second)?,
            },
            SearchTarget::YbPairs => Solution::YbPair {
                r: Tensor2::new(field, n, digits)?,
                s: Tensor2::new(field, n, second)?,
            },
            SearchTarget::WeightedRb => Solution::WeightedRb {
                r: LinearMap::new(field, n, digits)?,
                lambda: self.weight()?,
            },
        })
    }

    fn weight(&self) -> Result<Scalar> {
        self.lambda.clone().ok_or(Error::MissingSection("lambda"))
    }

    /// Whether the public checker accepts `candidate`.
    pub fn accepts(&self, candidate: &Solution) -> Result<bool> {
        let a = &self.algebra;
        let report = match candidate {
            Solution::RbSystem { r, s } => check_rb_system(a, r, s)?,
            Solution::YbPair { r, s } => check_yb_pair(a, r, s)?,
            Solution::WeightedRb { r, lambda } => check_weighted_rb(a, r, lambda)?,
        };
        Ok(report.passed())
    }
}

/// One accepted candidate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Solution {
    RbSystem { r: LinearMap, s: LinearMap },
    YbPair { r: Tensor2, s: Tensor2 },
    WeightedRb { r: LinearMap, lambda: Scalar },
}

impl Solution {
    pub fn to_bundle(&self, a: &HomAlgebra) -> Bundle {
        let mut b = Bundle::from_algebra(a);
        match self {
            Solution::RbSystem { r, s } => {
                b.rb_r = Some(r.clone());
                b.rb_s = Some(s.clone());
                b.declares = vec!["rb-system".into()];
            }
            Solution::YbPair { r, s } => {
                b.r = Some(r.clone());
                b.s = Some(s.clone());
                b.declares = vec!["yb-pair".into()];
            }
            Solution::WeightedRb { r, lambda } => {
                b.rb_r = Some(r.clone());
                b.lambda = Some(lambda.clone());
                b.declares = vec!["weighted-rb".into()];
            }
        }
        b
    }
}

/// Streams accepted candidates in index order to `sink`; returns how many
/// were accepted.
pub fn enumerate_with(task: &SearchTask, mut sink: impl FnMut(u128, Solution)) -> Result<usize> {
    let size = task.space_size()?;
    if task.target == SearchTarget::WeightedRb {
        task.weight()?;
    }
    let mut count = 0;
    match task.mode {
        SearchMode::Exhaustive => {
            if size > EXHAUSTIVE_BOUND {
                return Err(Error::SpaceTooLarge {
                    size,
                    bound: EXHAUSTIVE_BOUND,
                });
            }
            for index in 0..size {
                let c = task.candidate(index)?;
                if task.accepts(&c)? {
                    count += 1;
                    sink(index, c);
                }
            }
        }
        SearchMode::Sampled { seed, samples } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut picks: Vec<u128> = (0..samples).map(|_| rng.gen_range(0..size)).collect();
            picks.sort_unstable();
            picks.dedup();
            for index in picks {
                let c = task.candidate(index)?;
                if task.accepts(&c)? {
                    count += 1;
                    sink(index, c);
                }
            }
        }
    }
    Ok(count)
}

/// All accepted candidates, in lexicographic order.
pub fn enumerate(task: &SearchTask) -> Result<Vec<Solution>> {
    let mut out = Vec::new();
    enumerate_with(task, |_, s| out.push(s))?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn candidate_order_is_lexicographic() {
        let f = FieldSpec::gf(2);
        let task = SearchTask::exhaustive(SearchTarget::YbPairs, zero_algebra(f));
        assert_eq!(task.space_size().unwrap(), 256);
        let Solution::YbPair { r, s } = task.candidate(1).unwrap() else { unreachable!() };
        assert!(r.is_zero());
        assert_eq!(s, Tensor2::basis(f, 2, 1, 1));
        let Solution::YbPair { r, .. } = task.candidate(128).unwrap() else { unreachable!() };
        assert_eq!(r, Tensor2::basis(f, 2, 0, 0));
    }

    #[test]
    fn bound_and_field_errors() {
        let task = SearchTask::exhaustive(SearchTarget::RbSystems, dual_numbers(FieldSpec::gf(11)));
        assert!(matches!(enumerate(&task), Err(Error::SpaceTooLarge { .. })));
        let task = SearchTask::exhaustive(SearchTarget::RbSystems, dual_numbers(FieldSpec::Rational));
        assert!(matches!(enumerate(&task), Err(Error::InvalidField(_))));
        let task = SearchTask::exhaustive(SearchTarget::WeightedRb, dual_numbers(FieldSpec::gf(2)));
        assert!(matches!(enumerate(&task), Err(Error::MissingSection("lambda"))));
    }

    #[test]
    fn sampled_mode_is_deterministic() {
        let a = dual_numbers(FieldSpec::gf(5));
        let task = SearchTask {
            mode: SearchMode::Sampled { seed: 3, samples: 2000 },
            ..SearchTask::exhaustive(SearchTarget::YbPairs, a)
        };
        let first = enumerate(&task).unwrap();
        assert_eq!(first, enumerate(&task).unwrap());
    }
}
