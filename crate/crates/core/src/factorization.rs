//! Ordered factorizations of a permutation into the fewest transpositions.
//!
//! `p = t_1 · t_2 ⋯ t_d` with `d = n - cycles(p)`. The last factor of such a
//! product must join two points of one cycle of `p`; removing it splits that
//! cycle and leaves a factorization of `p · t_d`, one step shorter.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::perm::{Permutation, Transposition};

/// Transpositions `t` with `d(p·t) = d(p) - 1`, in lexicographic order.
fn splitting_swaps(p: &Permutation) -> Vec<(usize, usize)> {
    let mut label = vec![0usize; p.degree()];
    for (c, cycle) in p.cycles().iter().enumerate() {
        for &k in cycle {
            label[k as usize] = c;
        }
    }
    let n = p.degree();
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if label[i] == label[j] {
                out.push((i, j));
            }
        }
    }
    out
}

fn count_memo(p: &Permutation, memo: &mut HashMap<Permutation, u128>) -> Result<u128> {
    if p.is_identity() {
        return Ok(1);
    }
    if let Some(&c) = memo.get(p) {
        return Ok(c);
    }
    let mut total: u128 = 0;
    for (i, j) in splitting_swaps(p) {
        let sub = count_memo(&p.swap_positions(i, j), memo)?;
        total = total.checked_add(sub).ok_or(Error::Overflow("factorization count"))?;
    }
    memo.insert(*p, total);
    Ok(total)
}

/// Number of ordered minimal transposition factorizations of `p`.
pub fn count_minimal_factorizations(p: &Permutation) -> Result<u128> {
    count_memo(p, &mut HashMap::new())
}

/// Lists minimal factorizations of `p` in lexicographic order of their
/// reversed factor sequence, stopping after `limit`.
pub fn minimal_factorizations(p: &Permutation, limit: usize) -> Result<Vec<Vec<Transposition>>> {
    fn walk(
        p: &Permutation,
        suffix: &mut Vec<Transposition>,
        out: &mut Vec<Vec<Transposition>>,
        limit: usize,
    ) -> Result<()> {
        if out.len() >= limit {
            return Ok(());
        }
        if p.is_identity() {
            out.push(suffix.iter().rev().copied().collect());
            return Ok(());
        }
        for (i, j) in splitting_swaps(p) {
            suffix.push(Transposition::new(p.degree(), i + 1, j + 1)?);
            walk(&p.swap_positions(i, j), suffix, out, limit)?;
            suffix.pop();
            if out.len() >= limit {
                break;
            }
        }
        Ok(())
    }
    let mut out = Vec::new();
    walk(p, &mut Vec::new(), &mut out, limit)?;
    Ok(out)
}

/// `t_1 · t_2 ⋯ t_d` applied to the identity.
pub fn product(n: usize, factors: &[Transposition]) -> Result<Permutation> {
    factors
        .iter()
        .try_fold(Permutation::identity(n)?, |acc, t| t.apply_right(&acc))
}
