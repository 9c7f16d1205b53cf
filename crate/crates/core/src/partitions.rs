//! Ordered partitions of a set into labeled parts of fixed sizes.
//!
//! Enumeration is lazy and lexicographic in the chosen index subsets: the
//! first part runs over `k1`-subsets of all positions, the second over
//! `k2`-subsets of what is left, and so on; the last part takes the rest.

use crate::error::{Error, Result};
use crate::params::ParameterSet;

/// One ordered partition; `parts[0]` is part I, `parts[1]` part II, ...
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderedPartition {
    pub parts: Vec<ParameterSet>,
}

/// Lazy stream of index partitions of `0..n` with a given signature.
#[derive(Clone, Debug)]
pub struct IndexPartitions {
    n: usize,
    signature: Vec<usize>,
    combos: Vec<Vec<usize>>,
    started: bool,
    done: bool,
}

impl IndexPartitions {
    pub fn new(n: usize, signature: &[usize]) -> Result<Self> {
        let total: usize = signature.iter().sum();
        if total != n {
            return Err(Error::Cardinality(format!(
                "signature {signature:?} sums to {total}, set has {n} elements"
            )));
        }
        let free = signature.len().saturating_sub(1);
        let combos = signature[..free].iter().map(|&k| (0..k).collect()).collect();
        Ok(IndexPartitions { n, signature: signature.to_vec(), combos, started: false, done: false })
    }

    fn pool_size(&self, level: usize) -> usize {
        self.n - self.signature[..level].iter().sum::<usize>()
    }

    fn materialize(&self) -> Vec<Vec<usize>> {
        let mut pool: Vec<usize> = (0..self.n).collect();
        let mut parts = Vec::with_capacity(self.signature.len());
        for combo in &self.combos {
            let chosen: Vec<usize> = combo.iter().map(|&p| pool[p]).collect();
            let mut keep = Vec::with_capacity(pool.len() - chosen.len());
            let mut next = combo.iter().peekable();
            for (pos, &v) in pool.iter().enumerate() {
                if next.peek() == Some(&&pos) {
                    next.next();
                } else {
                    keep.push(v);
                }
            }
            pool = keep;
            parts.push(chosen);
        }
        if !self.signature.is_empty() {
            parts.push(pool);
        }
        parts
    }
}

/// Advances `combo` to the next `k`-subset of `0..pool` in lexicographic
/// order; returns false (leaving `combo` untouched) at the last one.
fn next_combination(combo: &mut [usize], pool: usize) -> bool {
    let k = combo.len();
    let Some(i) = (0..k).rev().find(|&i| combo[i] < pool - k + i) else {
        return false;
    };
    combo[i] += 1;
    for j in i + 1..k {
        combo[j] = combo[j - 1] + 1;
    }
    true
}

impl Iterator for IndexPartitions {
    type Item = Vec<Vec<usize>>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            return Some(self.materialize());
        }
        for level in (0..self.combos.len()).rev() {
            let pool = self.pool_size(level);
            if next_combination(&mut self.combos[level], pool) {
                for deeper in level + 1..self.combos.len() {
                    self.combos[deeper] = (0..self.signature[deeper]).collect();
                }
                return Some(self.materialize());
            }
        }
        self.done = true;
        None
    }
}

/// Lazily splits `items` into parts of the given sizes.
pub fn split<'a, T: Clone>(items: &'a [T], signature: &[usize]) -> Result<impl Iterator<Item = Vec<Vec<T>>> + 'a> {
    let indices = IndexPartitions::new(items.len(), signature)?;
    Ok(indices.map(move |parts| {
        parts.into_iter().map(|p| p.into_iter().map(|i| items[i].clone()).collect()).collect()
    }))
}

/// Two-part split `items => {I, II}` with `#I = k`.
pub fn split2<'a, T: Clone>(items: &'a [T], k: usize) -> Result<impl Iterator<Item = (Vec<T>, Vec<T>)> + 'a> {
    if k > items.len() {
        return Err(Error::Cardinality(format!("cannot choose {k} of {} elements", items.len())));
    }
    Ok(split(items, &[k, items.len() - k])?.map(|mut parts| {
        let second = parts.pop().expect("two parts");
        let first = parts.pop().expect("two parts");
        (first, second)
    }))
}

pub fn enumerate_partitions<'a>(
    set: &'a ParameterSet,
    signature: &[usize],
) -> Result<impl Iterator<Item = OrderedPartition> + 'a> {
    Ok(split(set.elements(), signature)?
        .map(|parts| OrderedPartition { parts: parts.into_iter().map(ParameterSet::new).collect() }))
}

/// Cartesian product of the partition streams of two sets.
pub fn enumerate_two_set_partitions<'a>(
    first: &'a ParameterSet,
    second: &'a ParameterSet,
    sig1: &[usize],
    sig2: &'a [usize],
) -> Result<impl Iterator<Item = (OrderedPartition, OrderedPartition)> + 'a> {
    // Validate the second signature up front so errors are not deferred.
    IndexPartitions::new(second.len(), sig2)?;
    Ok(enumerate_partitions(first, sig1)?.flat_map(move |p1| {
        enumerate_partitions(second, sig2).expect("validated").map(move |p2| (p1.clone(), p2))
    }))
}

/// `n! / (k1! k2! ...)`.
pub fn multinomial(signature: &[usize]) -> u128 {
    let mut acc: u128 = 1;
    let mut seen: u128 = 0;
    for &k in signature {
        for i in 1..=k as u128 {
            seen += 1;
            acc = acc * seen / i;
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::collections::BTreeSet;

    fn set(v: &[i64]) -> ParameterSet {
        ParameterSet::from_integers(v)
    }

    #[test]
    fn three_choose_one() {
        let s = set(&[1, 2, 3]);
        let got: Vec<_> = enumerate_partitions(&s, &[1, 2]).unwrap().map(|p| p.parts).collect();
        assert_eq!(
            got,
            vec![
                vec![set(&[1]), set(&[2, 3])],
                vec![set(&[2]), set(&[1, 3])],
                vec![set(&[3]), set(&[1, 2])],
            ]
        );
    }

    #[test]
    fn empty_set_has_one_partition() {
        let e = ParameterSet::empty();
        let got: Vec<_> = enumerate_partitions(&e, &[0, 0]).unwrap().collect();
        assert_eq!(got, vec![OrderedPartition { parts: vec![e.clone(), e.clone()] }]);
        assert_eq!(IndexPartitions::new(0, &[]).unwrap().count(), 1);
    }

    #[test]
    fn signature_mismatch() {
        assert!(enumerate_partitions(&set(&[1, 2]), &[2, 1]).is_err());
        assert!(split2(&[1, 2], 3).is_err());
    }

    #[test]
    fn two_set_product() {
        let (a, b) = (set(&[1, 2]), set(&[3]));
        assert_eq!(enumerate_two_set_partitions(&a, &b, &[1, 1], &[1, 0]).unwrap().count(), 2);
        let e = ParameterSet::empty();
        assert_eq!(enumerate_two_set_partitions(&e, &e, &[0, 0], &[0, 0]).unwrap().count(), 1);
        assert!(enumerate_two_set_partitions(&a, &b, &[1, 1], &[2, 0]).is_err());
    }

    #[test]
    fn three_way_order_is_lexicographic() {
        let got: Vec<_> = IndexPartitions::new(3, &[1, 1, 1]).unwrap().collect();
        assert_eq!(got.len(), 6);
        assert_eq!(got[0], vec![vec![0], vec![1], vec![2]]);
        assert_eq!(got[1], vec![vec![0], vec![2], vec![1]]);
        assert_eq!(got[5], vec![vec![2], vec![1], vec![0]]);
    }

    fn arb_signature() -> impl Strategy<Value = Vec<usize>> {
        prop::collection::vec(0usize..4, 1..4).prop_filter("at most 8 elements", |s| s.iter().sum::<usize>() <= 8)
    }

    proptest! {
        #[test]
        fn count_is_multinomial(sig in arb_signature()) {
            let n: usize = sig.iter().sum();
            let all: Vec<_> = IndexPartitions::new(n, &sig).unwrap().collect();
            prop_assert_eq!(all.len() as u128, multinomial(&sig));
            let distinct: BTreeSet<_> = all.iter().cloned().collect();
            prop_assert_eq!(distinct.len(), all.len());
            for parts in &all {
                let sizes: Vec<usize> = parts.iter().map(Vec::len).collect();
                prop_assert_eq!(&sizes, &sig);
                let mut flat: Vec<usize> = parts.concat();
                flat.sort_unstable();
                prop_assert_eq!(flat, (0..n).collect::<Vec<_>>());
            }
        }

        #[test]
        fn swapping_equal_labels_permutes_stream(k in 0usize..4) {
            let n = 2 * k;
            let forward: BTreeSet<_> = IndexPartitions::new(n, &[k, k]).unwrap().collect();
            let swapped: BTreeSet<_> = IndexPartitions::new(n, &[k, k])
                .unwrap()
                .map(|mut p| { p.swap(0, 1); p })
                .collect();
            prop_assert_eq!(forward, swapped);
        }
    }
}
