//! Clique-multiplicity budget vectors. A budget of n remaining vertices and
//! c remaining cover slots is realized by a multiset of cliques (one K_i
//! spends i vertices and i - 1 cover); the lexicographically minimal
//! realization has at most two nonzero multiplicities at consecutive clique
//! sizes and minimizes the number of edges the remaining structure must
//! spend. Extensions consume the budget in O(1) vector updates.

use std::fmt;

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum AlphaError {
    #[error("budget requires n > c (got n = {0}, c = {1})")]
    InfeasibleBudget(usize, usize),
    #[error("step needs {needed_n} vertices and {needed_c} cover, budget has {n} and {c}")]
    StepExhausted { needed_n: usize, needed_c: usize, n: usize, c: usize },
    #[error("step leaves an unrealizable budget (n = {0}, c = {1})")]
    StepInfeasible(usize, usize),
}

/// Sparse vector over clique sizes with at most two nonzero entries at
/// consecutive positions, plus the tracked totals it encodes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlphaVector {
    n_rem: usize,
    c_rem: usize,
    /// (clique size, multiplicity), ascending, nonzero, len <= 2.
    entries: Vec<(usize, usize)>,
}

impl fmt::Display for AlphaVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.entries.is_empty() {
            return write!(f, "(empty)");
        }
        let parts: Vec<String> = self
            .entries
            .iter()
            .rev()
            .map(|&(size, count)| format!("alpha_{size}={count}"))
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// Lexicographically minimal vector realizing (n, c): nonzero entries only
/// at floor(c/(n-c)) + 1 and ceil(c/(n-c)) + 1. The empty budget (0, 0) is
/// the exhausted state; every other n <= c is unrealizable.
pub fn lexmin_alpha(n: usize, c: usize) -> Result<AlphaVector, AlphaError> {
    if n == 0 && c == 0 {
        return Ok(AlphaVector { n_rem: 0, c_rem: 0, entries: Vec::new() });
    }
    if n <= c {
        return Err(AlphaError::InfeasibleBudget(n, c));
    }
    let k = n - c;
    let g = c / k + 1;
    let h = c.div_ceil(k) + 1;
    let entries = if h == g {
        vec![(g, k)]
    } else {
        let r = c % k;
        vec![(g, k - r), (h, r)]
    };
    let v = AlphaVector { n_rem: n, c_rem: c, entries };
    v.check_invariants();
    Ok(v)
}

impl AlphaVector {
    pub fn n_rem(&self) -> usize {
        self.n_rem
    }

    pub fn c_rem(&self) -> usize {
        self.c_rem
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Nonzero (size, multiplicity) entries, ascending by size.
    pub fn entries(&self) -> &[(usize, usize)] {
        &self.entries
    }

    pub fn multiplicity(&self, size: usize) -> usize {
        self.entries.iter().find(|&&(s, _)| s == size).map(|&(_, count)| count).unwrap_or(0)
    }

    /// Minimum number of edges any realization of this budget must spend:
    /// sum of i(i-1)/2 per clique.
    pub fn edge_lower_bound(&self) -> u64 {
        self.entries
            .iter()
            .map(|&(size, count)| (size * (size - 1) / 2) as u64 * count as u64)
            .sum()
    }

    /// Budget after a parallel extension (consumes 1 vertex, 1 cover):
    /// demote one clique at the top position. Equals
    /// `lexmin_alpha(n_rem - 1, c_rem - 1)`.
    pub fn after_parallel(&self) -> Result<AlphaVector, AlphaError> {
        if self.n_rem < 1 || self.c_rem < 1 {
            return Err(AlphaError::StepExhausted {
                needed_n: 1,
                needed_c: 1,
                n: self.n_rem,
                c: self.c_rem,
            });
        }
        let &(h, h_count) = self.entries.last().expect("c >= 1 implies nonempty");
        debug_assert!(h >= 2, "cover budget needs a clique of size >= 2");
        let mut entries = self.entries.clone();
        entries.last_mut().unwrap().1 = h_count - 1;
        match entries.iter().position(|&(s, _)| s == h - 1) {
            Some(pos) => entries[pos].1 += 1,
            None => entries.insert(entries.len() - 1, (h - 1, 1)),
        }
        entries.retain(|&(_, count)| count > 0);
        let v = AlphaVector { n_rem: self.n_rem - 1, c_rem: self.c_rem - 1, entries };
        v.check_invariants();
        debug_assert_eq!(v, lexmin_alpha(self.n_rem - 1, self.c_rem - 1).unwrap());
        Ok(v)
    }

    /// Budget after a chain extension (consumes 2 vertices, 1 cover):
    /// remove one smallest clique of size g and re-absorb g - 2 vertices by
    /// promoting cliques, smallest first. Equals
    /// `lexmin_alpha(n_rem - 2, c_rem - 1)`.
    pub fn after_chain(&self) -> Result<AlphaVector, AlphaError> {
        if self.n_rem < 2 || self.c_rem < 1 {
            return Err(AlphaError::StepExhausted {
                needed_n: 2,
                needed_c: 1,
                n: self.n_rem,
                c: self.c_rem,
            });
        }
        let (n_new, c_new) = (self.n_rem - 2, self.c_rem - 1);
        if n_new <= c_new && !(n_new == 0 && c_new == 0) {
            return Err(AlphaError::StepInfeasible(n_new, c_new));
        }
        let g = self.entries.first().expect("nonempty").0;

        let entries = if g == 1 {
            // Isolated-vertex budget present: the cover slot comes from a K2,
            // so drop one of those instead.
            debug_assert_eq!(self.entries.last().unwrap().0, 2);
            let mut entries = self.entries.clone();
            entries.last_mut().unwrap().1 -= 1;
            entries.retain(|&(_, count)| count > 0);
            entries
        } else {
            // Remove one size-g clique, then redistribute s = g - 2 vertex
            // units as promotions.
            let mut s = g - 2;
            let mut lo = (self.entries[0].0, self.entries[0].1 - 1);
            let mut hi = self.entries.get(1).copied();
            if let (0, Some(h)) = (lo.1, hi) {
                lo = h;
                hi = None;
            }
            if s > 0 {
                if let Some(ref mut h) = hi {
                    let x = s.min(lo.1);
                    lo.1 -= x;
                    h.1 += x;
                    s -= x;
                    if lo.1 == 0 {
                        lo = *h;
                        hi = None;
                    }
                }
            }
            let mut entries = Vec::with_capacity(2);
            if s > 0 {
                debug_assert!(hi.is_none());
                let (mut size, count) = lo;
                debug_assert!(count > 0, "feasibility pre rules out an empty remainder");
                size += s / count;
                let rest = s % count;
                if rest > 0 {
                    entries.push((size, count - rest));
                    entries.push((size + 1, rest));
                } else {
                    entries.push((size, count));
                }
            } else {
                if lo.1 > 0 {
                    entries.push(lo);
                }
                if let Some(h) = hi {
                    if h.1 > 0 {
                        entries.push(h);
                    }
                }
            }
            entries
        };
        let v = AlphaVector { n_rem: n_new, c_rem: c_new, entries };
        v.check_invariants();
        debug_assert_eq!(v, lexmin_alpha(n_new, c_new).unwrap());
        Ok(v)
    }

    fn check_invariants(&self) {
        debug_assert!(self.entries.len() <= 2);
        debug_assert!(self.entries.iter().all(|&(_, count)| count > 0));
        if self.entries.len() == 2 {
            debug_assert_eq!(self.entries[0].0 + 1, self.entries[1].0);
        }
        let n: usize = self.entries.iter().map(|&(s, c)| s * c).sum();
        let c: usize = self.entries.iter().map(|&(s, cnt)| (s - 1) * cnt).sum();
        debug_assert_eq!(n, self.n_rem);
        debug_assert_eq!(c, self.c_rem);
        let total: usize = self.entries.iter().map(|&(_, cnt)| cnt).sum();
        debug_assert_eq!(total, self.n_rem - self.c_rem);
    }
}

/// Most edges any graph with n vertices and cover size c can carry:
/// c(c-1)/2 inside the cover plus c(n-c) to the independent side.
pub fn max_edges(n: usize, c: usize) -> Result<u64, AlphaError> {
    if n <= c {
        return Err(AlphaError::InfeasibleBudget(n, c));
    }
    Ok((c * (c - 1) / 2) as u64 + (c * (n - c)) as u64)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lexmin_examples() {
        let v = lexmin_alpha(7, 4).unwrap();
        assert_eq!(v.entries(), &[(2, 2), (3, 1)]);

        let v = lexmin_alpha(9, 8).unwrap();
        assert_eq!(v.entries(), &[(9, 1)]);

        let v = lexmin_alpha(6, 3).unwrap();
        assert_eq!(v.entries(), &[(2, 3)]);

        assert!(lexmin_alpha(4, 4).is_err());
        assert!(lexmin_alpha(3, 5).is_err());
        assert!(lexmin_alpha(0, 0).unwrap().is_empty());
    }

    #[test]
    fn edge_lower_bound_examples() {
        assert_eq!(lexmin_alpha(7, 4).unwrap().edge_lower_bound(), 5);
        for n in [4usize, 7, 11] {
            assert_eq!(
                lexmin_alpha(n, n - 1).unwrap().edge_lower_bound(),
                (n * (n - 1) / 2) as u64
            );
        }
        assert_eq!(lexmin_alpha(6, 3).unwrap().edge_lower_bound(), 3);
    }

    #[test]
    fn parallel_update_examples() {
        let v = lexmin_alpha(7, 4).unwrap().after_parallel().unwrap();
        assert_eq!(v, lexmin_alpha(6, 3).unwrap());
        assert_eq!(v.entries(), &[(2, 3)]);

        let v = lexmin_alpha(9, 7).unwrap().after_parallel().unwrap();
        assert_eq!(v, lexmin_alpha(8, 6).unwrap());
    }

    #[test]
    fn chain_update_examples() {
        let v = lexmin_alpha(7, 4).unwrap().after_chain().unwrap();
        assert_eq!(v, lexmin_alpha(5, 3).unwrap());
        assert_eq!(v.entries(), &[(2, 1), (3, 1)]);

        // Exercises the whole-bucket shift in the redistribution step.
        let v = lexmin_alpha(9, 7).unwrap();
        assert_eq!(v.entries(), &[(4, 1), (5, 1)]);
        let v = v.after_chain().unwrap();
        assert_eq!(v, lexmin_alpha(7, 6).unwrap());
        assert_eq!(v.entries(), &[(7, 1)]);
    }

    #[test]
    fn updates_match_recompute_exhaustively() {
        for n in 1..140usize {
            for c in 0..n {
                let v = lexmin_alpha(n, c).unwrap();
                if c >= 1 {
                    let p = v.after_parallel().unwrap();
                    assert_eq!(p, lexmin_alpha(n - 1, c - 1).unwrap(), "parallel on ({n},{c})");
                }
                if n >= 2 && c >= 1 {
                    match v.after_chain() {
                        Ok(ch) => {
                            assert_eq!(
                                ch,
                                lexmin_alpha(n - 2, c - 1).unwrap(),
                                "chain on ({n},{c})"
                            )
                        }
                        Err(AlphaError::StepInfeasible(nn, cc)) => {
                            assert!(nn <= cc && !(nn == 0 && cc == 0));
                        }
                        Err(e) => panic!("unexpected error on ({n},{c}): {e}"),
                    }
                }
            }
        }
    }

    #[test]
    fn chain_to_empty_budget() {
        let v = lexmin_alpha(2, 1).unwrap();
        let v = v.after_chain().unwrap();
        assert!(v.is_empty());
        assert_eq!(v.edge_lower_bound(), 0);
    }

    #[test]
    fn step_exhaustion_errors() {
        let v = lexmin_alpha(4, 0).unwrap();
        assert!(matches!(v.after_parallel(), Err(AlphaError::StepExhausted { .. })));
        assert!(matches!(v.after_chain(), Err(AlphaError::StepExhausted { .. })));
    }

    #[test]
    fn max_edges_examples() {
        assert_eq!(max_edges(10, 6).unwrap(), 39);
        for n in [3usize, 6, 9] {
            assert_eq!(max_edges(n, n - 1).unwrap(), (n * (n - 1) / 2) as u64);
        }
        assert_eq!(max_edges(3, 1).unwrap(), 2);
        assert!(max_edges(5, 5).is_err());
    }

    #[test]
    fn display_formats_high_to_low() {
        let v = lexmin_alpha(7, 4).unwrap();
        assert_eq!(v.to_string(), "alpha_3=1 alpha_2=2");
    }
}
