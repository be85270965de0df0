use super::{Partition, SkewShape};
use crate::error::{invalid, Error, Result};

fn check_bounded(p: &Partition, k: usize) -> Result<()> {
    if k == 0 {
        return Err(Error::ZeroK);
    }
    if !p.is_k_bounded(k) {
        return Err(Error::NotKBounded { partition: p.clone(), k });
    }
    Ok(())
}

/// Rows of the k-skew diagram, top row first, as `(offset, length)` pairs,
/// together with the column heights.
fn k_skew_rows(p: &Partition, k: usize) -> (Vec<(usize, usize)>, Vec<usize>) {
    let mut rows: Vec<(usize, usize)> = Vec::with_capacity(p.len());
    let mut heights: Vec<usize> = Vec::new();
    for &len in p.parts().iter().rev() {
        // The new row goes under the current bottom row; both the offsets and
        // the row ends must stay weakly decreasing from bottom to top.
        let mut offset = match rows.last() {
            Some(&(o, l)) => o.max((o + l).saturating_sub(len)),
            None => 0,
        };
        loop {
            let end = offset + len;
            let fits = (offset..end).all(|j| {
                let leg = heights.get(j).copied().unwrap_or(0);
                (end - 1 - j) + leg < k
            });
            if fits {
                break;
            }
            offset += 1;
        }
        if heights.len() < offset + len {
            heights.resize(offset + len, 0);
        }
        for h in &mut heights[offset..offset + len] {
            *h += 1;
        }
        rows.push((offset, len));
    }
    (rows, heights)
}

/// The k-skew diagram `λ/^k`: row `i` has length `λ_i`, no cell has a hook
/// longer than `k`, and every square below the diagram has a hook longer than
/// `k`.
///
/// Built bottom-up from the last part: each new bottom row is pushed as far
/// left as the hook bound and skewness allow.
pub fn k_skew(p: &Partition, k: usize) -> Result<SkewShape> {
    check_bounded(p, k)?;
    let (rows, _) = k_skew_rows(p, k);
    let outer: Vec<usize> = rows.iter().rev().map(|&(o, l)| o + l).collect();
    let inner: Vec<usize> = rows.iter().rev().map(|&(o, _)| o).collect();
    let outer = Partition::new(outer).expect("k-skew rows end weakly decreasing");
    let inner = Partition::new(inner).expect("k-skew rows start weakly decreasing");
    SkewShape::new(outer, inner)
}

/// The k-conjugate `λ^{ω_k}`: the column lengths of `λ/^k`.
pub fn k_conjugate(p: &Partition, k: usize) -> Result<Partition> {
    check_bounded(p, k)?;
    let (_, heights) = k_skew_rows(p, k);
    Ok(Partition::from_unsorted(heights))
}

/// The (k+1)-core associated with `p`: the outer shape of `p/^k`.
pub fn to_core(p: &Partition, k: usize) -> Result<Partition> {
    Ok(k_skew(p, k)?.outer().clone())
}

/// Closed form of `(m^n)^{ω_k}`: `((k−m+1)^a, b^m)` with
/// `b = n mod (k−m+1)` and `a = m·⌊n/(k−m+1)⌋`.
pub fn rectangle_k_conjugate(m: usize, n: usize, k: usize) -> Result<Partition> {
    if k == 0 {
        return Err(Error::ZeroK);
    }
    if m == 0 || m > k {
        return Err(invalid(format!("rectangle width {m} must lie in 1..={k}")));
    }
    let h = k - m + 1;
    let (a, b) = (m * (n / h), n % h);
    let mut parts = vec![h; a];
    parts.extend(std::iter::repeat_n(b, m));
    Ok(Partition::from_unsorted(parts))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition;
    use crate::partition::{k_bounded_up_to, Cell};

    #[test]
    fn golden_k_skew() {
        let s = k_skew(&partition![4, 3, 2, 2, 1, 1], 4).unwrap();
        assert_eq!(s.outer(), &partition![9, 5, 3, 2, 1, 1]);
        assert_eq!(s.inner(), &partition![5, 2, 1]);

        let s = k_skew(&partition![2, 1], 3).unwrap();
        assert_eq!(s, SkewShape::straight(partition![2, 1]));

        let s = k_skew(&Partition::rectangle(3, 7), 4).unwrap();
        assert_eq!(s.outer(), &partition![12, 9, 9, 6, 6, 3, 3]);
        assert_eq!(s.inner(), &partition![9, 6, 6, 3, 3]);
    }

    #[test]
    fn golden_k_conjugate() {
        assert_eq!(
            k_conjugate(&partition![4, 3, 2, 2, 1, 1], 4).unwrap(),
            partition![3, 2, 2, 1, 1, 1, 1, 1, 1]
        );
        let mut expected = vec![2; 9];
        expected.extend([1, 1, 1]);
        assert_eq!(
            k_conjugate(&Partition::rectangle(3, 7), 4).unwrap(),
            Partition::new(expected).unwrap()
        );
        assert_eq!(k_conjugate(&partition![2, 1], 3).unwrap(), partition![2, 1]);
    }

    #[test]
    fn golden_cores() {
        assert_eq!(to_core(&partition![4, 3, 2, 2, 1, 1], 4).unwrap(), partition![9, 5, 3, 2, 1, 1]);
        assert_eq!(to_core(&partition![2, 1], 3).unwrap(), partition![2, 1]);
        let core = to_core(&Partition::rectangle(3, 7), 4).unwrap();
        assert_eq!(core, partition![12, 9, 9, 6, 6, 3, 3]);
        let straight = SkewShape::straight(core);
        for r in 1..=straight.height() {
            for c in 1..=straight.outer().row(r) {
                assert_ne!(straight.hook_length(Cell::new(r, c)).unwrap(), 5);
            }
        }
    }

    #[test]
    fn rectangle_closed_form() {
        let mut expected = vec![2; 9];
        expected.extend([1, 1, 1]);
        assert_eq!(rectangle_k_conjugate(3, 7, 4).unwrap(), Partition::new(expected).unwrap());
        assert_eq!(rectangle_k_conjugate(3, 2, 4).unwrap(), partition![2, 2, 2]);
        assert_eq!(rectangle_k_conjugate(4, 3, 4).unwrap(), Partition::rectangle(1, 12));
        assert!(rectangle_k_conjugate(5, 3, 4).is_err());
        assert_eq!(rectangle_k_conjugate(2, 0, 4).unwrap(), Partition::empty());
    }

    #[test]
    fn rectangle_closed_form_matches_construction() {
        for k in 1..=7 {
            for m in 1..=k {
                for n in 0..=9 {
                    let rect = Partition::rectangle(m, n);
                    assert_eq!(
                        rectangle_k_conjugate(m, n, k).unwrap(),
                        k_conjugate(&rect, k).unwrap(),
                        "m={m} n={n} k={k}"
                    );
                }
            }
        }
    }

    #[test]
    fn rejects_unbounded_input() {
        assert!(matches!(k_skew(&partition![5, 1], 4), Err(Error::NotKBounded { .. })));
        assert!(k_conjugate(&partition![5], 4).is_err());
        assert!(to_core(&partition![1], 0).is_err());
    }

    #[test]
    fn empty_partition_maps_to_empty_skew() {
        for k in 1..4 {
            let s = k_skew(&Partition::empty(), k).unwrap();
            assert_eq!(s.degree(), 0);
            assert_eq!(k_conjugate(&Partition::empty(), k).unwrap(), Partition::empty());
        }
    }

    #[test]
    fn small_hook_means_ordinary_conjugate() {
        for k in 1..=6 {
            for p in k_bounded_up_to(k, 10) {
                if p.corner_hook() <= k {
                    assert_eq!(k_skew(&p, k).unwrap(), SkewShape::straight(p.clone()));
                    assert_eq!(k_conjugate(&p, k).unwrap(), p.conjugate());
                }
            }
        }
    }
}
