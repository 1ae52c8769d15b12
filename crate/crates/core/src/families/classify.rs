use std::collections::BTreeSet;
use std::fmt;

use itertools::Itertools;
use num_bigint::BigUint;

use super::solution::Solution;
use super::tables::{
    four_factor_family, three_factor_params, FourFamily, SPORADIC_3, SPORADIC_4,
};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Label {
    TwoFactor,
    ThreeFactor,
    Sporadic3(u8),
    FourFactor(FourFamily),
    Sporadic4(u8),
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::TwoFactor => f.write_str("two-factor-family"),
            Label::ThreeFactor => f.write_str("three-factor-family"),
            Label::Sporadic3(i) => write!(f, "sporadic-3-{i}"),
            Label::FourFactor(k) => write!(f, "{k}"),
            Label::Sporadic4(i) => write!(f, "sporadic-4-{i}"),
        }
    }
}

/// A family or sporadic membership. `witness[j]` is the index into the
/// sorted argument list that plays the role of the family's `j`-th
/// parameter (`a, b, c, d`).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Match {
    pub label: Label,
    pub witness: Vec<usize>,
}

impl fmt::Display for Match {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}@{}", self.label, self.witness.iter().join(""))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    pub x: BigUint,
    pub matches: Vec<Match>,
}

impl Classification {
    pub fn is_empty(&self) -> bool {
        self.matches.is_empty()
    }

    pub fn labels(&self) -> Vec<String> {
        self.matches.iter().map(ToString::to_string).collect()
    }
}

/// Index permutations of `args` giving distinct value tuples, each with its
/// lexicographically smallest witness.
fn distinct_arrangements(args: &[BigUint]) -> Vec<(Vec<usize>, Vec<&BigUint>)> {
    let mut seen = BTreeSet::new();
    (0..args.len())
        .permutations(args.len())
        .filter_map(|perm| {
            let values: Vec<&BigUint> = perm.iter().map(|&i| &args[i]).collect();
            seen.insert(values.clone()).then_some((perm, values))
        })
        .collect()
}

fn equals_u64(args: &[BigUint], table: &[u64]) -> bool {
    args.len() == table.len() && args.iter().zip(table).all(|(a, &t)| *a == BigUint::from(t))
}

/// Every family and sporadic solution that `sol` belongs to, under every
/// distinct arrangement of its arguments.
///
/// Family identities are polynomial, so `sol` only needs to satisfy the
/// product identity; the `Φ₃(a_i)` need not be prime.
pub fn classify(sol: &Solution) -> Result<Classification> {
    let args = sol.args();
    let x = sol.x();
    let n = args.len();
    if !(2..=4).contains(&n) {
        return Err(Error::Arity { min: 2, max: 4, got: n });
    }
    let identity: Vec<usize> = (0..n).collect();
    let mut matches = Vec::new();

    match n {
        2 => {
            // (a, a + 1, (a + 1)^2) in sorted order.
            let (a, b) = (&args[0], &args[1]);
            if *b == a + 1u32 && *x == b * b {
                matches.push(Match {
                    label: Label::TwoFactor,
                    witness: identity,
                });
            }
        }
        3 => {
            for (i, (args_t, xt)) in SPORADIC_3.iter().enumerate() {
                if equals_u64(args, args_t) && *x == BigUint::from(*xt) {
                    matches.push(Match {
                        label: Label::Sporadic3(i as u8 + 1),
                        witness: identity.clone(),
                    });
                }
            }
            for (perm, v) in distinct_arrangements(args) {
                if let Some((c, xf)) = three_factor_params(v[0], v[1]) {
                    if c == *v[2] && xf == *x {
                        matches.push(Match {
                            label: Label::ThreeFactor,
                            witness: perm,
                        });
                    }
                }
            }
        }
        4 => {
            for (i, t) in SPORADIC_4.iter().enumerate() {
                if equals_u64(args, t) {
                    matches.push(Match {
                        label: Label::Sporadic4(i as u8 + 1),
                        witness: identity.clone(),
                    });
                }
            }
            for (perm, v) in distinct_arrangements(args) {
                for k in FourFamily::ALL {
                    if four_factor_family(k, v[0], v[1], v[2]).as_ref() == Some(v[3]) {
                        matches.push(Match {
                            label: Label::FourFactor(k),
                            witness: perm.clone(),
                        });
                    }
                }
            }
        }
        _ => unreachable!(),
    }

    matches.sort();
    Ok(Classification {
        x: x.clone(),
        matches,
    })
}
