//! Backtracking enumeration of structure-preserving tables.
//!
//! One search engine serves every enumeration in the crate: hom-sets of
//! posets and S-posets, sections, retractions, diagonal fillers, and
//! extension problems. Callers pin elements or restrict candidate sets and
//! the DFS prunes by partial monotonicity and equivariance. Assignments are
//! tried in ascending index order, so the output is lexicographic over
//! tables and two runs produce identical lists.

use crate::error::{Budget, Error, Result};
use crate::poset::{MonotoneMap, Poset};
use crate::sposet::{SPoset, SPosetMap};

pub(crate) struct TableSearch<'a> {
    dom: &'a Poset,
    cod: &'a Poset,
    /// (dom action, cod action, number of scalars), when searching S-poset maps.
    acts: Option<(&'a [usize], &'a [usize], usize)>,
    /// Per-domain-element candidate mask over codomain indices.
    allowed: Vec<u64>,
}

impl<'a> TableSearch<'a> {
    pub fn posets(dom: &'a Poset, cod: &'a Poset) -> Self {
        TableSearch {
            dom,
            cod,
            acts: None,
            allowed: vec![cod.full(); dom.len()],
        }
    }

    pub fn s_posets(dom: &'a SPoset, cod: &'a SPoset) -> Result<Self> {
        if dom.over() != cod.over() {
            return Err(Error::Structural(
                "maps require the same acting pomonoid on both ends".into(),
            ));
        }
        Ok(TableSearch {
            dom: dom.carrier(),
            cod: cod.carrier(),
            acts: Some((dom.act_table(), cod.act_table(), dom.scalars())),
            allowed: vec![cod.carrier().full(); dom.len()],
        })
    }

    /// Pin element `i` to value `v`. Returns false if that empties the cell.
    pub fn force(&mut self, i: usize, v: usize) -> bool {
        self.allowed[i] &= 1 << v;
        self.allowed[i] != 0
    }

    /// Intersect the candidate set of `i` with `mask`.
    pub fn restrict(&mut self, i: usize, mask: u64) {
        self.allowed[i] &= mask;
    }

    /// Enumerate every consistent total table, up to `limit` solutions.
    pub fn solutions(&self, limit: Option<usize>, budget: Budget) -> Result<Vec<Vec<usize>>> {
        let mut counter = budget.counter();
        let mut out = Vec::new();
        let mut table = vec![0usize; self.dom.len()];
        self.dfs(0, &mut table, &mut out, limit, &mut counter)?;
        Ok(out)
    }

    pub fn first(&self, budget: Budget) -> Result<Option<Vec<usize>>> {
        Ok(self.solutions(Some(1), budget)?.into_iter().next())
    }

    fn dfs(
        &self,
        k: usize,
        table: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
        limit: Option<usize>,
        counter: &mut crate::error::BudgetCounter,
    ) -> Result<()> {
        if k == self.dom.len() {
            out.push(table.clone());
            return Ok(());
        }
        let mut cands = self.allowed[k];
        while cands != 0 {
            if limit.is_some_and(|l| out.len() >= l) {
                return Ok(());
            }
            let v = cands.trailing_zeros() as usize;
            cands &= cands - 1;
            counter.charge(1)?;
            if self.consistent(k, v, table) {
                table[k] = v;
                self.dfs(k + 1, table, out, limit, counter)?;
            }
        }
        Ok(())
    }

    /// Check `table[k] = v` against everything already assigned.
    fn consistent(&self, k: usize, v: usize, table: &[usize]) -> bool {
        for j in 0..k {
            if self.dom.leq(j, k) && !self.cod.leq(table[j], v) {
                return false;
            }
            if self.dom.leq(k, j) && !self.cod.leq(v, table[j]) {
                return false;
            }
        }
        if let Some((dom_act, cod_act, ns)) = self.acts {
            for s in 0..ns {
                let m = dom_act[k * ns + s];
                // f(k*s) = f(k)*s once both sides are assigned
                if m < k && table[m] != cod_act[v * ns + s] {
                    return false;
                }
                if m == k && v != cod_act[v * ns + s] {
                    return false;
                }
            }
            for j in 0..k {
                for s in 0..ns {
                    if dom_act[j * ns + s] == k && cod_act[table[j] * ns + s] != v {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// All monotone maps from `dom` to `cod` in lexicographic table order.
pub fn monotone_maps(dom: &Poset, cod: &Poset, budget: Budget) -> Result<Vec<MonotoneMap>> {
    let tables = TableSearch::posets(dom, cod).solutions(None, budget)?;
    Ok(tables
        .into_iter()
        .map(|table| MonotoneMap {
            dom: dom.clone(),
            cod: cod.clone(),
            table,
        })
        .collect())
}

/// All S-poset maps from `dom` to `cod` in lexicographic table order. The
/// enumeration backtracks with monotonicity/equivariance pruning.
pub fn hom_s_poset(dom: &SPoset, cod: &SPoset, budget: Budget) -> Result<Vec<SPosetMap>> {
    let tables = TableSearch::s_posets(dom, cod)?.solutions(None, budget)?;
    Ok(tables
        .into_iter()
        .map(|table| SPosetMap::unchecked(dom.clone(), cod.clone(), table))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn monotone_maps_two_chain_to_itself() {
        let chain = Poset::chain_named(&["a", "b"]);
        let maps = monotone_maps(&chain, &chain, Budget::default()).unwrap();
        // const a, identity, const b; the antitone table is pruned
        let tables: Vec<_> = maps.iter().map(|m| m.table.clone()).collect();
        assert_eq!(tables, vec![vec![0, 0], vec![0, 1], vec![1, 1]]);
    }

    #[test]
    fn enumeration_is_deterministic() {
        let dom = Poset::antichain(3);
        let cod = Poset::chain(3);
        let a = monotone_maps(&dom, &cod, Budget::default()).unwrap();
        let b = monotone_maps(&dom, &cod, Budget::default()).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.len(), 27);
    }

    #[test]
    fn budget_exhaustion_is_reported_with_bound() {
        let dom = Poset::antichain(4);
        let cod = Poset::antichain(4);
        match monotone_maps(&dom, &cod, Budget(10)) {
            Err(Error::BudgetExceeded { bound }) => assert_eq!(bound, 10),
            other => panic!("expected budget error, got {other:?}"),
        }
    }

    #[test]
    fn forcing_prunes_to_extensions() {
        let chain3 = Poset::chain(3);
        let mut search = TableSearch::posets(&chain3, &chain3);
        assert!(search.force(0, 1));
        let sols = search.solutions(None, Budget::default()).unwrap();
        assert!(sols.iter().all(|t| t[0] == 1));
        assert_eq!(sols.len(), 3); // [1,1,1] [1,1,2] [1,2,2]
    }
}
