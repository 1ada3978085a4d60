//! Formal Chern data `(rank, c1, c2)` of vector bundles on a surface model.

use crate::chow::{NumClass, SurfaceModel};
use crate::error::{Error, Result};
use crate::ratcalc::Rat;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BundleData {
    rank: u32,
    c1: NumClass,
    c2: Rat,
}

impl BundleData {
    pub fn new(rank: u32, c1: NumClass, c2: Rat) -> Result<Self> {
        if rank == 0 {
            return Err(Error::InvalidBundle("rank must be positive".into()));
        }
        if rank == 1 && !c2.is_zero() {
            return Err(Error::InvalidBundle("a line bundle has c2 = 0".into()));
        }
        Ok(BundleData { rank, c1, c2 })
    }

    pub fn line(c1: NumClass) -> Self {
        BundleData {
            rank: 1,
            c1,
            c2: Rat::zero(),
        }
    }

    pub fn trivial(rank: u32, model: SurfaceModel) -> Result<Self> {
        BundleData::new(rank, NumClass::zero(model), Rat::zero())
    }

    pub fn rank(&self) -> u32 {
        self.rank
    }

    pub fn c1(&self) -> &NumClass {
        &self.c1
    }

    pub fn c2(&self) -> &Rat {
        &self.c2
    }

    pub fn model(&self) -> SurfaceModel {
        self.c1.model()
    }

    pub fn c1_squared(&self) -> Rat {
        self.c1.self_intersection()
    }

    pub fn ensure_rank(&self, expected: u32) -> Result<()> {
        if self.rank != expected {
            return Err(Error::RankMismatch {
                expected,
                found: self.rank,
            });
        }
        Ok(())
    }
}

/// Second symmetric power, for ranks 2 and 3 only.
///
/// Rank 2: `(3, 3 c1, 2 c1^2 + 4 c2)`. Rank 3: `(6, 4 c1, 5 c2 + 5 c1^2)`.
pub fn sym2(bd: &BundleData) -> Result<BundleData> {
    let c1sq = bd.c1_squared();
    let (rank, k, c2) = match bd.rank {
        2 => (3, 3, Rat::from_int(2) * &c1sq + Rat::from_int(4) * &bd.c2),
        3 => (6, 4, Rat::from_int(5) * &bd.c2 + Rat::from_int(5) * &c1sq),
        r => return Err(Error::UnsupportedRank(r)),
    };
    BundleData::new(rank, bd.c1.scaled(&Rat::from_int(k)), c2)
}

/// `Sym^2` of a rank-2 bundle with Chern roots `a`, `b`, computed from the
/// roots `2a, a + b, 2b` through elementary symmetric functions.
pub fn sym2_roots_oracle(root_a: &NumClass, root_b: &NumClass) -> Result<BundleData> {
    let two = Rat::from_int(2);
    let roots = [
        root_a.scaled(&two),
        root_a.plus(root_b)?,
        root_b.scaled(&two),
    ];
    let e1 = roots[1..]
        .iter()
        .try_fold(roots[0].clone(), |acc, x| acc.plus(x))?;
    let mut e2 = Rat::zero();
    for i in 0..roots.len() {
        for j in i + 1..roots.len() {
            e2 += &roots[i].intersect(&roots[j])?;
        }
    }
    BundleData::new(3, e1, e2)
}

/// Total Chern data of an extension `0 -> sub -> total -> quot -> 0`.
pub fn whitney(sub: &BundleData, quot: &BundleData) -> Result<BundleData> {
    let c1 = sub.c1.plus(&quot.c1)?;
    let c2 = &sub.c2 + &quot.c2 + sub.c1.intersect(&quot.c1)?;
    BundleData::new(sub.rank + quot.rank, c1, c2)
}

/// Inverts [`whitney`] for the subbundle, given the total space and quotient.
pub fn whitney_sub(total: &BundleData, quot: &BundleData) -> Result<BundleData> {
    if quot.rank >= total.rank {
        return Err(Error::Precondition(
            "quotient rank must be smaller than total rank".into(),
        ));
    }
    let c1 = total.c1.minus(&quot.c1)?;
    let c2 = &total.c2 - &quot.c2 - c1.intersect(&quot.c1)?;
    BundleData::new(total.rank - quot.rank, c1, c2)
}

/// Chern character truncated at degree two, `(r, c1, (c1^2 - 2 c2) / 2)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChernCharacter {
    pub rank: Rat,
    pub deg1: NumClass,
    pub deg2: Rat,
}

impl ChernCharacter {
    pub fn plus(&self, other: &ChernCharacter) -> Result<ChernCharacter> {
        Ok(ChernCharacter {
            rank: &self.rank + &other.rank,
            deg1: self.deg1.plus(&other.deg1)?,
            deg2: &self.deg2 + &other.deg2,
        })
    }
}

pub fn chern_character(bd: &BundleData) -> ChernCharacter {
    let half = Rat::new(1, 2).expect("literal");
    ChernCharacter {
        rank: Rat::from_int(bd.rank as i64),
        deg1: bd.c1.clone(),
        deg2: half * (bd.c1_squared() - Rat::from_int(2) * &bd.c2),
    }
}
