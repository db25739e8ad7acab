//! Seeded generators for randomized suites and searches.

use num_rational::BigRational;
use rand::{Rng as _, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::choicefn::ChoiceFunction;
use crate::family::SetFamily;
use crate::ground::{GroundSet, Subset};
use crate::pretop;
use crate::supermod::{self, SetFunction};

pub const DEFAULT_SEED: u64 = 20_240_917;

pub struct Rng(ChaCha8Rng);

impl Rng {
    pub fn seeded(seed: u64) -> Self {
        Rng(ChaCha8Rng::seed_from_u64(seed))
    }

    /// Uniform in `0..n`; `0` when `n == 0`.
    pub fn below(&mut self, n: usize) -> usize {
        if n == 0 {
            0
        } else {
            self.0.random_range(0..n)
        }
    }

    pub fn int(&mut self, lo: i64, hi: i64) -> i64 {
        self.0.random_range(lo..=hi)
    }

    pub fn chance(&mut self, p: f64) -> bool {
        self.0.random_bool(p)
    }

    pub fn subset(&mut self, ground: &GroundSet) -> Subset {
        Subset::from_bits(self.0.random::<u32>() & ground.full().bits())
    }

    /// Up to `max_members` uniformly random subsets.
    pub fn base(&mut self, ground: &GroundSet, max_members: usize) -> SetFamily {
        let k = self.below(max_members + 1);
        let members: Vec<Subset> = (0..k).map(|_| self.subset(ground)).collect();
        SetFamily::new(ground.clone(), members).expect("subsets drawn inside the ground set")
    }

    /// Interior choice function of a random base.
    pub fn complementary_cf(&mut self, ground: &GroundSet, max_members: usize) -> ChoiceFunction {
        let base = self.base(ground, max_members);
        pretop::interior_cf(&base).expect("random ground sets stay within the table limit")
    }

    pub fn contracting_cf(&mut self, ground: &GroundSet) -> ChoiceFunction {
        let table = ground
            .subsets()
            .map(|a| Subset::from_bits(self.0.random::<u32>() & a.bits()))
            .collect();
        ChoiceFunction::new(ground.clone(), table).expect("entries drawn inside each menu")
    }

    /// `u(A) = c + Σ_{i ∈ A} w_i` with small integer weights over a unit denominator.
    pub fn modular(&mut self, ground: &GroundSet) -> SetFunction {
        let weights: Vec<i64> = (0..ground.len()).map(|_| self.int(-3, 3)).collect();
        let offset = self.int(-2, 2);
        let den = self.int(1, 3);
        SetFunction::from_fn(ground.clone(), |a| {
            let num: i64 = offset + a.elements().map(|i| weights[i]).sum::<i64>();
            BigRational::new(num.into(), den.into())
        })
        .expect("random ground sets stay within the table limit")
    }

    /// `Σ c_U e_U + m` with sparse nonnegative integer coefficients `c_U`
    /// and a random modular part `m`. Every such function is supermodular,
    /// though not every supermodular function has this form.
    pub fn supermodular(&mut self, ground: &GroundSet) -> SetFunction {
        let mut u = self.modular(ground);
        let terms = 1 + self.below(2 * ground.len() + 2);
        for _ in 0..terms {
            let c = self.int(1, 3);
            let e = supermod::elementary(ground, self.subset(ground)).expect("subset in range");
            u = u
                .add(&e.scale(&BigRational::from_integer(c.into())))
                .expect("same ground set");
        }
        u
    }
}
