//! The k-Young order on k-bounded partitions.
//!
//! Covers are read off the residues of corners of the k-skew diagram; a
//! definitional oracle that compares k-conjugates directly is kept alongside
//! for cross-checking.

mod hasse;
mod translation;

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{k_conjugate, k_skew, residue, CornerKind, Partition};

pub use hasse::{build_graded, build_ideal, Generator, HasseDiagram};
pub use translation::{check_rectangle_translation, TranslationWitness};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Up,
    Down,
}

impl std::str::FromStr for Direction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "up" => Ok(Direction::Up),
            "down" => Ok(Direction::Down),
            other => Err(Error::InvalidParameters(format!("direction must be up or down, got {other:?}"))),
        }
    }
}

fn check_bounded(p: &Partition, k: usize) -> Result<()> {
    if k == 0 {
        return Err(Error::ZeroK);
    }
    if !p.is_k_bounded(k) {
        return Err(Error::NotKBounded { partition: p.clone(), k });
    }
    Ok(())
}

/// Partitions covering `p` (`Up`) or covered by `p` (`Down`) in the k-Young
/// order, sorted lexicographically.
///
/// A row `r` qualifies when its corner in `p/^k` has a (k+1)-residue that
/// does not reappear on a corner of the same kind in a higher row.
pub fn covers(p: &Partition, k: usize, direction: Direction) -> Result<Vec<Partition>> {
    check_bounded(p, k)?;
    let skew = k_skew(p, k)?;
    let kind = match direction {
        Direction::Up => CornerKind::Addable,
        Direction::Down => CornerKind::Removable,
    };
    let corners = skew.corners(kind);
    let mut out: Vec<Partition> = corners
        .iter()
        .enumerate()
        .filter(|&(i, &c)| {
            let res = residue(c, k + 1);
            corners[i + 1..].iter().all(|&higher| residue(higher, k + 1) != res)
        })
        .filter_map(|(_, c)| match direction {
            Direction::Up => p.add_box(c.row).filter(|mu| mu.is_k_bounded(k)),
            Direction::Down => p.remove_box(c.row),
        })
        .collect();
    out.sort();
    out.dedup();
    Ok(out)
}

/// Covers computed straight from the definition: a one-box neighbour `ν` of
/// `p` is related when the smaller k-conjugate is contained in the larger.
pub fn covers_oracle(p: &Partition, k: usize, direction: Direction) -> Result<Vec<Partition>> {
    check_bounded(p, k)?;
    let own = k_conjugate(p, k)?;
    let mut out = Vec::new();
    match direction {
        Direction::Up => {
            for mu in p.add_one_box().filter(|mu| mu.is_k_bounded(k)) {
                if own.is_contained_in(&k_conjugate(&mu, k)?) {
                    out.push(mu);
                }
            }
        }
        Direction::Down => {
            for lambda in p.remove_one_box() {
                if k_conjugate(&lambda, k)?.is_contained_in(&own) {
                    out.push(lambda);
                }
            }
        }
    }
    out.sort();
    Ok(out)
}

/// `a ⪯ b` in the k-Young order.
///
/// Breadth-first search upward from `a`, discarding any `ν` with `ν ⊄ b` or
/// `ν^{ω_k} ⊄ b^{ω_k}`, since both containments hold along every chain
/// ending at `b`.
pub fn leq(a: &Partition, b: &Partition, k: usize) -> Result<bool> {
    check_bounded(a, k)?;
    check_bounded(b, k)?;
    if !a.is_contained_in(b) {
        return Ok(false);
    }
    if a == b {
        return Ok(true);
    }
    let target_conj = k_conjugate(b, k)?;
    if !k_conjugate(a, k)?.is_contained_in(&target_conj) {
        return Ok(false);
    }
    let mut level: Vec<Partition> = vec![a.clone()];
    while !level.is_empty() && level[0].degree() < b.degree() {
        let mut next = HashSet::new();
        for nu in &level {
            for up in covers(nu, k, Direction::Up)? {
                if &up == b {
                    return Ok(true);
                }
                if next.contains(&up) || !up.is_contained_in(b) {
                    continue;
                }
                if k_conjugate(&up, k)?.is_contained_in(&target_conj) {
                    next.insert(up);
                }
            }
        }
        level = next.into_iter().collect();
    }
    Ok(false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition;
    use crate::partition::k_bounded_up_to;

    #[test]
    fn example_covers() {
        let p = partition![4, 2, 1, 1];
        assert_eq!(
            covers(&p, 4, Direction::Up).unwrap(),
            vec![partition![4, 2, 1, 1, 1], partition![4, 2, 2, 1]]
        );
        assert_eq!(
            covers(&p, 4, Direction::Down).unwrap(),
            vec![partition![4, 1, 1, 1], partition![4, 2, 1]]
        );
        assert_eq!(
            covers_oracle(&p, 4, Direction::Up).unwrap(),
            vec![partition![4, 2, 1, 1, 1], partition![4, 2, 2, 1]]
        );
        assert_eq!(
            covers_oracle(&p, 4, Direction::Down).unwrap(),
            vec![partition![4, 1, 1, 1], partition![4, 2, 1]]
        );
    }

    #[test]
    fn covers_of_small_partitions() {
        for k in 1..5 {
            assert_eq!(covers(&Partition::empty(), k, Direction::Up).unwrap(), vec![partition![1]]);
            assert!(covers(&Partition::empty(), k, Direction::Down).unwrap().is_empty());
        }
        assert_eq!(covers_oracle(&partition![1], 1, Direction::Up).unwrap(), vec![partition![1, 1]]);
        assert_eq!(covers(&partition![1], 1, Direction::Up).unwrap(), vec![partition![1, 1]]);
    }

    #[test]
    fn oracle_on_two_by_two() {
        // (2,2) has two one-box additions; test each against the definition.
        let p = partition![2, 2];
        let mut expected = Vec::new();
        for mu in [partition![3, 2], partition![2, 2, 1]] {
            let lo = k_conjugate(&p, 3).unwrap();
            let hi = k_conjugate(&mu, 3).unwrap();
            if lo.is_contained_in(&hi) {
                expected.push(mu);
            }
        }
        expected.sort();
        assert_eq!(covers_oracle(&p, 3, Direction::Up).unwrap(), expected);
        assert_eq!(covers(&p, 3, Direction::Up).unwrap(), expected);
    }

    #[test]
    fn comparability_examples() {
        assert!(!leq(&partition![2, 2], &partition![3, 2, 1, 1, 1, 1], 3).unwrap());
        assert!(leq(&partition![3, 3], &partition![3, 3, 3], 3).unwrap());
        assert!(leq(&Partition::empty(), &partition![4, 2, 1, 1], 4).unwrap());
        assert!(leq(&partition![2, 1], &partition![2, 1], 2).unwrap());
        assert!(!leq(&partition![3], &partition![2, 1], 3).unwrap());
        assert!(leq(&partition![5], &partition![1], 4).is_err());
    }

    #[test]
    fn covers_match_oracle_small_range() {
        for k in 1..=4 {
            for p in k_bounded_up_to(k, 7) {
                for dir in [Direction::Up, Direction::Down] {
                    assert_eq!(
                        covers(&p, k, dir).unwrap(),
                        covers_oracle(&p, k, dir).unwrap(),
                        "{p} k={k} {dir:?}"
                    );
                }
            }
        }
    }

    #[test]
    fn removing_from_top_row_is_a_cover() {
        for k in 1..=5 {
            for mu in k_bounded_up_to(k, 9).into_iter().filter(|p| !p.is_empty()) {
                let lambda = mu.remove_box(mu.len()).unwrap();
                assert!(covers(&mu, k, Direction::Down).unwrap().contains(&lambda));
            }
        }
    }

    #[test]
    fn order_refines_containment_of_conjugates() {
        for k in 1..=4 {
            let all = k_bounded_up_to(k, 6);
            for a in &all {
                for b in all.iter().filter(|b| b.degree() >= a.degree()) {
                    if leq(a, b, k).unwrap() {
                        assert!(a.is_contained_in(b));
                        let (ca, cb) = (k_conjugate(a, k).unwrap(), k_conjugate(b, k).unwrap());
                        assert!(ca.is_contained_in(&cb));
                    }
                }
            }
        }
    }

    #[test]
    fn small_hooks_reduce_to_containment() {
        for k in 2..=5 {
            let small: Vec<_> = k_bounded_up_to(k, 8)
                .into_iter()
                .filter(|p| p.corner_hook() <= k)
                .collect();
            for a in &small {
                for b in &small {
                    assert_eq!(leq(a, b, k).unwrap(), a.is_contained_in(b), "{a} {b} k={k}");
                }
            }
        }
    }

    #[test]
    fn direction_parses() {
        assert_eq!("up".parse::<Direction>().unwrap(), Direction::Up);
        assert_eq!("down".parse::<Direction>().unwrap(), Direction::Down);
        assert!("sideways".parse::<Direction>().is_err());
    }
}
