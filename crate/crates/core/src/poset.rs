//! Finite posets, monotone maps, order-embeddings, completeness, and the
//! Dedekind-MacNeille completion.
//!
//! Elements are identified positionally inside one [`Poset`] value; subsets
//! are bitmasks over element indices, which keeps the LU scans in the
//! completion and the completeness checks branch-free.

use crate::error::{Error, Result};
use crate::report::{ClassReport, Witness};

/// A subset of a poset's carrier, as a bitmask over element indices.
pub type Subset = u64;

/// Hard cap imposed by the bitmask representation.
pub const MAX_ELEMENTS: usize = 64;

/// Permutation-search cap for isomorphism tests and canonical forms.
pub const ISO_CAP: usize = 8;

/// Default cutoff for the exhaustive-subset completeness scan; larger posets
/// are decided by the bounded-lattice criterion.
pub const COMPLETE_SCAN_CUTOFF: usize = 20;

/// Raw candidate for a poset, prior to axiom checking.
#[derive(Debug, Clone)]
pub struct RawPoset {
    pub names: Vec<String>,
    pub leq: Vec<Vec<bool>>,
}

/// A finite partial order. `up[i]` has bit `j` set iff `e_i <= e_j`;
/// `down` is the transpose.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Poset {
    names: Vec<String>,
    up: Vec<Subset>,
    down: Vec<Subset>,
}

/// Checks the three order axioms on a raw relation matrix. Shape problems
/// (non-square matrix, empty or oversized carrier, duplicate names) are
/// structural errors, not axiom failures.
pub fn validate_poset(raw: &RawPoset) -> Result<ClassReport> {
    let n = raw.names.len();
    if n == 0 {
        return Err(Error::Structural("empty carrier".into()));
    }
    if n > MAX_ELEMENTS {
        return Err(Error::SizeCap {
            what: "poset carrier",
            size: n,
            cap: MAX_ELEMENTS,
        });
    }
    if raw.leq.len() != n || raw.leq.iter().any(|row| row.len() != n) {
        return Err(Error::Structural(format!(
            "relation matrix must be {n}x{n} to match the element list"
        )));
    }
    for (i, a) in raw.names.iter().enumerate() {
        if raw.names[..i].contains(a) {
            return Err(Error::Structural(format!("duplicate element name {a:?}")));
        }
    }
    for i in 0..n {
        if !raw.leq[i][i] {
            return Ok(ClassReport::fail(Witness::axiom(
                "reflexivity",
                &[&raw.names[i]],
            )));
        }
    }
    for i in 0..n {
        for j in 0..n {
            if i != j && raw.leq[i][j] && raw.leq[j][i] {
                return Ok(ClassReport::fail(Witness::axiom(
                    "antisymmetry",
                    &[&raw.names[i], &raw.names[j]],
                )));
            }
        }
    }
    for i in 0..n {
        for j in 0..n {
            if !raw.leq[i][j] {
                continue;
            }
            for k in 0..n {
                if raw.leq[j][k] && !raw.leq[i][k] {
                    return Ok(ClassReport::fail(Witness::axiom(
                        "transitivity",
                        &[&raw.names[i], &raw.names[j], &raw.names[k]],
                    )));
                }
            }
        }
    }
    Ok(ClassReport::pass())
}

impl Poset {
    /// Builds a poset from a validated raw candidate.
    pub fn from_raw(raw: &RawPoset) -> Result<Poset> {
        let report = validate_poset(raw)?;
        if let Some(w) = report.witness {
            return Err(Error::Structural(format!("not a poset: {w:?}")));
        }
        let n = raw.names.len();
        let mut up = vec![0u64; n];
        for i in 0..n {
            for j in 0..n {
                if raw.leq[i][j] {
                    up[i] |= 1 << j;
                }
            }
        }
        Ok(Poset::from_up(raw.names.clone(), up))
    }

    /// Internal constructor from row masks; the caller guarantees the axioms.
    pub(crate) fn from_up(names: Vec<String>, up: Vec<Subset>) -> Poset {
        let n = names.len();
        debug_assert!(n > 0 && n <= MAX_ELEMENTS);
        let mut down = vec![0u64; n];
        for i in 0..n {
            debug_assert!(up[i] & (1 << i) != 0, "reflexivity");
            for j in 0..n {
                if up[i] & (1 << j) != 0 {
                    down[j] |= 1 << i;
                }
            }
        }
        Poset { names, up, down }
    }

    /// n-element chain `x0 < x1 < ...`.
    pub fn chain(n: usize) -> Poset {
        Poset::chain_named(&(0..n).map(|i| format!("x{i}")).collect::<Vec<_>>())
    }

    pub fn chain_named(names: &[impl AsRef<str>]) -> Poset {
        let n = names.len();
        let up = (0..n).map(|i| ones(n) & !(ones(i))).collect();
        Poset::from_up(names.iter().map(|s| s.as_ref().to_string()).collect(), up)
    }

    /// n-element antichain.
    pub fn antichain(n: usize) -> Poset {
        let names = (0..n).map(|i| format!("x{i}")).collect::<Vec<_>>();
        let up = (0..n).map(|i| 1u64 << i).collect();
        Poset::from_up(names, up)
    }

    pub fn singleton(name: &str) -> Poset {
        Poset::from_up(vec![name.to_string()], vec![1])
    }

    /// Poset generated by `a <= b` pairs on the given names; takes the
    /// reflexive-transitive closure and errors if antisymmetry fails.
    pub fn from_pairs(names: &[&str], pairs: &[(&str, &str)]) -> Result<Poset> {
        let n = names.len();
        if n == 0 || n > MAX_ELEMENTS {
            return Err(Error::Structural("carrier size out of range".into()));
        }
        let idx = |s: &str| {
            names
                .iter()
                .position(|t| *t == s)
                .ok_or_else(|| Error::Structural(format!("unknown element {s:?}")))
        };
        let mut up: Vec<Subset> = (0..n).map(|i| 1u64 << i).collect();
        for (a, b) in pairs {
            up[idx(a)?] |= 1 << idx(b)?;
        }
        transitive_close(&mut up);
        for i in 0..n {
            for j in 0..n {
                if i != j && up[i] & (1 << j) != 0 && up[j] & (1 << i) != 0 {
                    return Err(Error::Structural(format!(
                        "generated relation has a cycle through {:?} and {:?}",
                        names[i], names[j]
                    )));
                }
            }
        }
        Ok(Poset::from_up(
            names.iter().map(|s| s.to_string()).collect(),
            up,
        ))
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        false // nonempty by construction
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.up[i] & (1 << j) != 0
    }

    pub fn lt(&self, i: usize, j: usize) -> bool {
        i != j && self.leq(i, j)
    }

    /// Row mask: everything above `i`, inclusive.
    pub fn up_set(&self, i: usize) -> Subset {
        self.up[i]
    }

    /// Column mask: everything below `i`, inclusive.
    pub fn down_set(&self, i: usize) -> Subset {
        self.down[i]
    }

    pub fn full(&self) -> Subset {
        ones(self.len())
    }

    /// U(A): common upper bounds of A. U(empty) is the whole carrier.
    pub fn upper_bounds(&self, a: Subset) -> Subset {
        let mut u = self.full();
        for i in iter_subset(a) {
            u &= self.up[i];
        }
        u
    }

    /// L(A): common lower bounds of A.
    pub fn lower_bounds(&self, a: Subset) -> Subset {
        let mut l = self.full();
        for i in iter_subset(a) {
            l &= self.down[i];
        }
        l
    }

    /// LU(A) = L(U(A)); a closure operator whose fixed points are the
    /// elements of the MacNeille completion.
    pub fn lu_closure(&self, a: Subset) -> Subset {
        self.lower_bounds(self.upper_bounds(a))
    }

    /// Least element of `a`, if `a` contains one.
    pub fn least_of(&self, a: Subset) -> Option<usize> {
        iter_subset(a).find(|&i| self.up[i] & a == a)
    }

    /// Greatest element of `a`, if `a` contains one.
    pub fn greatest_of(&self, a: Subset) -> Option<usize> {
        iter_subset(a).find(|&i| self.down[i] & a == a)
    }

    /// Least upper bound of A, if it exists. `sup_of(empty)` is the bottom.
    pub fn sup_of(&self, a: Subset) -> Option<usize> {
        self.least_of(self.upper_bounds(a))
    }

    /// Greatest lower bound of A, if it exists. `inf_of(empty)` is the top.
    pub fn inf_of(&self, a: Subset) -> Option<usize> {
        self.greatest_of(self.lower_bounds(a))
    }

    pub fn bottom(&self) -> Option<usize> {
        self.least_of(self.full())
    }

    pub fn top(&self) -> Option<usize> {
        self.greatest_of(self.full())
    }

    /// True iff A is a down-set. The empty subset counts as down-closed.
    pub fn is_down_closed_subset(&self, a: Subset) -> bool {
        iter_subset(a).all(|i| self.down[i] & !a == 0)
    }

    /// Completeness with the default scan cutoff.
    pub fn is_complete(&self) -> bool {
        self.is_complete_report(COMPLETE_SCAN_CUTOFF).verdict
    }

    /// Every subset (including the empty one) must have an inf and a sup.
    /// Below `scan_cutoff` elements the check scans all subsets; above it
    /// the bounded-lattice criterion (top, bottom, binary meets and joins)
    /// decides. The two methods agree on finite posets.
    pub fn is_complete_report(&self, scan_cutoff: usize) -> ClassReport {
        if self.len() <= scan_cutoff {
            self.complete_by_scan()
        } else {
            self.complete_by_lattice_criterion()
        }
    }

    pub(crate) fn complete_by_scan(&self) -> ClassReport {
        let full = self.full();
        // Nonempty subsets in ascending mask order, then the empty one.
        for a in (1..=full).chain(std::iter::once(0)) {
            for (missing, bound) in [("sup", self.sup_of(a)), ("inf", self.inf_of(a))] {
                if bound.is_none() {
                    return ClassReport::fail(Witness::Subset {
                        elements: self.subset_names(a),
                        missing: missing.into(),
                    });
                }
            }
        }
        ClassReport::pass()
    }

    pub(crate) fn complete_by_lattice_criterion(&self) -> ClassReport {
        if self.bottom().is_none() {
            return ClassReport::fail(Witness::Subset {
                elements: vec![],
                missing: "sup".into(),
            });
        }
        if self.top().is_none() {
            return ClassReport::fail(Witness::Subset {
                elements: vec![],
                missing: "inf".into(),
            });
        }
        for i in 0..self.len() {
            for j in i + 1..self.len() {
                let pair = (1 << i) | (1 << j);
                for (missing, bound) in [("sup", self.sup_of(pair)), ("inf", self.inf_of(pair))] {
                    if bound.is_none() {
                        return ClassReport::fail(Witness::Subset {
                            elements: self.subset_names(pair),
                            missing: missing.into(),
                        });
                    }
                }
            }
        }
        ClassReport::pass()
    }

    pub fn subset_names(&self, a: Subset) -> Vec<String> {
        iter_subset(a).map(|i| self.names[i].clone()).collect()
    }

    pub fn subset_label(&self, a: Subset) -> String {
        format!("{{{}}}", self.subset_names(a).join(","))
    }

    /// Dedekind-MacNeille completion: the poset of LU-closed subsets ordered
    /// by inclusion, together with the embedding `a -> down-set of a`.
    /// The scan is the direct one over all subsets, so the carrier is capped.
    pub fn macneille_completion(&self) -> Result<(Poset, MonotoneMap)> {
        if self.len() > COMPLETE_SCAN_CUTOFF {
            return Err(Error::SizeCap {
                what: "MacNeille subset scan",
                size: self.len(),
                cap: COMPLETE_SCAN_CUTOFF,
            });
        }
        let full = self.full();
        let mut closed: Vec<Subset> = Vec::new();
        for a in 0..=full {
            if self.lu_closure(a) == a {
                closed.push(a);
            }
        }
        if closed.len() > MAX_ELEMENTS {
            return Err(Error::SizeCap {
                what: "MacNeille completion carrier",
                size: closed.len(),
                cap: MAX_ELEMENTS,
            });
        }
        let names = closed.iter().map(|&a| self.subset_label(a)).collect();
        let m = closed.len();
        let mut up = vec![0u64; m];
        for i in 0..m {
            for j in 0..m {
                if closed[i] & !closed[j] == 0 {
                    up[i] |= 1 << j;
                }
            }
        }
        let completion = Poset::from_up(names, up);
        let table = (0..self.len())
            .map(|a| {
                let da = self.down[a];
                closed
                    .iter()
                    .position(|&c| c == da)
                    .expect("principal down-sets are LU-closed")
            })
            .collect();
        let emb = MonotoneMap {
            dom: self.clone(),
            cod: completion.clone(),
            table,
        };
        Ok((completion, emb))
    }

    /// Sub-poset induced on `a`; also returns the carrier indices the new
    /// positions came from. Errors on the empty subset.
    pub fn induced(&self, a: Subset) -> Result<(Poset, Vec<usize>)> {
        let idx: Vec<usize> = iter_subset(a).collect();
        if idx.is_empty() {
            return Err(Error::Structural("empty induced subposet".into()));
        }
        let names = idx.iter().map(|&i| self.names[i].clone()).collect();
        let up = idx
            .iter()
            .map(|&i| {
                let mut row = 0u64;
                for (jj, &j) in idx.iter().enumerate() {
                    if self.leq(i, j) {
                        row |= 1 << jj;
                    }
                }
                row
            })
            .collect();
        Ok((Poset::from_up(names, up), idx))
    }

    /// Canonical key: the lexicographically least packed relation matrix
    /// over all permutations of the carrier. Invariant under isomorphism.
    pub fn canonical_key(&self) -> Result<Vec<u64>> {
        let n = self.len();
        if n > ISO_CAP {
            return Err(Error::SizeCap {
                what: "poset canonical form",
                size: n,
                cap: ISO_CAP,
            });
        }
        let mut best: Option<Vec<u64>> = None;
        for perm in permutations(n) {
            let key = self.relabelled_key(&perm);
            if best.as_ref().is_none_or(|b| key < *b) {
                best = Some(key);
            }
        }
        Ok(best.unwrap())
    }

    /// Packed matrix of the poset relabelled so that new position `i` is old
    /// element `perm[i]`.
    fn relabelled_key(&self, perm: &[usize]) -> Vec<u64> {
        let n = self.len();
        let mut bits = vec![0u64; (n * n + 63) / 64];
        for i in 0..n {
            for j in 0..n {
                if self.leq(perm[i], perm[j]) {
                    let b = i * n + j;
                    bits[b / 64] |= 1 << (b % 64);
                }
            }
        }
        bits
    }

    pub fn is_isomorphic(&self, other: &Poset) -> Result<bool> {
        if self.len() != other.len() {
            return Ok(false);
        }
        Ok(self.canonical_key()? == other.canonical_key()?)
    }
}

pub(crate) fn ones(n: usize) -> Subset {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

pub fn iter_subset(a: Subset) -> impl Iterator<Item = usize> {
    std::iter::successors(Some(a), |&m| Some(m & (m - 1)))
        .take_while(|&m| m != 0)
        .map(|m| m.trailing_zeros() as usize)
}

pub(crate) fn transitive_close(up: &mut [Subset]) {
    let n = up.len();
    // Warshall over row masks.
    for k in 0..n {
        for i in 0..n {
            if up[i] & (1 << k) != 0 {
                up[i] |= up[k];
            }
        }
    }
}

/// All permutations of 0..n in lexicographic order.
pub(crate) fn permutations(n: usize) -> Vec<Vec<usize>> {
    use itertools::Itertools;
    (0..n).permutations(n).collect()
}

/// A monotone map between posets, as a total table on element indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonotoneMap {
    pub dom: Poset,
    pub cod: Poset,
    pub table: Vec<usize>,
}

impl MonotoneMap {
    /// Builds and fully validates a monotone map.
    pub fn new(dom: Poset, cod: Poset, table: Vec<usize>) -> Result<MonotoneMap> {
        let m = MonotoneMap { dom, cod, table };
        m.check_structure()?;
        if let Some(w) = m.monotone_report().witness {
            return Err(Error::Structural(format!("not monotone: {w:?}")));
        }
        Ok(m)
    }

    pub fn identity(p: &Poset) -> MonotoneMap {
        MonotoneMap {
            dom: p.clone(),
            cod: p.clone(),
            table: (0..p.len()).collect(),
        }
    }

    pub(crate) fn check_structure(&self) -> Result<()> {
        if self.table.len() != self.dom.len() {
            return Err(Error::Structural(format!(
                "table has {} entries for a domain of {} elements",
                self.table.len(),
                self.dom.len()
            )));
        }
        if let Some(&v) = self.table.iter().find(|&&v| v >= self.cod.len()) {
            return Err(Error::Structural(format!(
                "table value {v} falls outside the codomain"
            )));
        }
        Ok(())
    }

    pub fn apply(&self, i: usize) -> usize {
        self.table[i]
    }

    /// Image of the map as a codomain subset.
    pub fn image(&self) -> Subset {
        self.table.iter().fold(0u64, |m, &v| m | (1 << v))
    }

    /// Order-preservation check with a witness pair on failure.
    pub fn monotone_report(&self) -> ClassReport {
        let n = self.dom.len();
        for a in 0..n {
            for b in 0..n {
                if self.dom.leq(a, b) && !self.cod.leq(self.table[a], self.table[b]) {
                    return ClassReport::fail(Witness::axiom(
                        "monotonicity",
                        &[self.dom.name(a), self.dom.name(b)],
                    ));
                }
            }
        }
        ClassReport::pass()
    }

    /// f(a) <= f(b) iff a <= b, for all pairs. Injectivity follows from
    /// antisymmetry but is asserted anyway.
    pub fn is_order_embedding(&self) -> bool {
        let n = self.dom.len();
        for a in 0..n {
            for b in 0..n {
                if self.dom.leq(a, b) != self.cod.leq(self.table[a], self.table[b]) {
                    return false;
                }
            }
        }
        let inj = (0..n).all(|a| (0..a).all(|b| self.table[a] != self.table[b]));
        debug_assert!(inj, "embedding must be injective by antisymmetry");
        inj
    }

    pub fn is_surjective(&self) -> bool {
        self.image() == self.cod.full()
    }

    pub fn compose(&self, then: &MonotoneMap) -> Result<MonotoneMap> {
        if self.cod != then.dom {
            return Err(Error::Structural(
                "composition: codomain and domain differ".into(),
            ));
        }
        Ok(MonotoneMap {
            dom: self.dom.clone(),
            cod: then.cod.clone(),
            table: self.table.iter().map(|&v| then.table[v]).collect(),
        })
    }

    pub fn table_by_name(&self) -> crate::report::Table {
        self.table
            .iter()
            .enumerate()
            .map(|(i, &v)| (self.dom.name(i).to_string(), self.cod.name(v).to_string()))
            .collect()
    }
}

/// Monotonicity check on a raw candidate (already structurally valid maps
/// use [`MonotoneMap::monotone_report`]).
pub fn is_monotone(dom: &Poset, cod: &Poset, table: &[usize]) -> Result<ClassReport> {
    let m = MonotoneMap {
        dom: dom.clone(),
        cod: cod.clone(),
        table: table.to_vec(),
    };
    m.check_structure()?;
    Ok(m.monotone_report())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn two_chain() -> Poset {
        Poset::chain_named(&["a", "b"])
    }

    fn two_antichain() -> Poset {
        let mut p = Poset::antichain(2);
        p.names = vec!["a".into(), "b".into()];
        p
    }

    fn diamond() -> Poset {
        Poset::from_pairs(
            &["bot", "a", "b", "top"],
            &[("bot", "a"), ("bot", "b"), ("a", "top"), ("b", "top")],
        )
        .unwrap()
    }

    #[test]
    fn validate_accepts_chain() {
        let raw = RawPoset {
            names: vec!["a".into(), "b".into()],
            leq: vec![vec![true, true], vec![false, true]],
        };
        assert!(validate_poset(&raw).unwrap().verdict);
    }

    #[test]
    fn validate_names_antisymmetry_witness() {
        let raw = RawPoset {
            names: vec!["a".into(), "b".into()],
            leq: vec![vec![true, true], vec![true, true]],
        };
        let report = validate_poset(&raw).unwrap();
        assert!(!report.verdict);
        assert_eq!(
            report.witness,
            Some(Witness::axiom("antisymmetry", &["a", "b"]))
        );
    }

    #[test]
    fn validate_names_transitivity_witness() {
        let raw = RawPoset {
            names: vec!["a".into(), "b".into(), "c".into()],
            leq: vec![
                vec![true, true, false],
                vec![false, true, true],
                vec![false, false, true],
            ],
        };
        let report = validate_poset(&raw).unwrap();
        assert_eq!(
            report.witness,
            Some(Witness::axiom("transitivity", &["a", "b", "c"]))
        );
    }

    #[test]
    fn validate_rejects_dimension_mismatch_structurally() {
        let raw = RawPoset {
            names: vec!["a".into(), "b".into()],
            leq: vec![vec![true, true]],
        };
        assert!(matches!(validate_poset(&raw), Err(Error::Structural(_))));
    }

    #[test]
    fn validate_rejects_empty_carrier() {
        let raw = RawPoset {
            names: vec![],
            leq: vec![],
        };
        assert!(matches!(validate_poset(&raw), Err(Error::Structural(_))));
    }

    #[test]
    fn monotone_map_examples() {
        let chain = two_chain();
        let anti = two_antichain();
        // antichain -> chain is monotone, chain -> antichain on the same table is not
        assert!(is_monotone(&anti, &chain, &[0, 1]).unwrap().verdict);
        let report = is_monotone(&chain, &anti, &[0, 1]).unwrap();
        assert!(!report.verdict);
        assert_eq!(
            report.witness,
            Some(Witness::axiom("monotonicity", &["a", "b"]))
        );
        // identity is monotone
        assert!(MonotoneMap::identity(&chain).monotone_report().verdict);
        // table value outside the codomain is a structural error
        assert!(matches!(
            is_monotone(&chain, &anti, &[0, 5]),
            Err(Error::Structural(_))
        ));
    }

    #[test]
    fn order_embedding_examples() {
        let chain = two_chain();
        assert!(MonotoneMap::identity(&chain).is_order_embedding());
        let point = Poset::singleton("p");
        let collapse = MonotoneMap::new(chain.clone(), point.clone(), vec![0, 0]).unwrap();
        assert!(!collapse.is_order_embedding());
        let include = MonotoneMap::new(point, chain.clone(), vec![0]).unwrap();
        assert!(include.is_order_embedding());
    }

    #[test]
    fn upper_bounds_examples() {
        let anti = two_antichain();
        assert_eq!(anti.upper_bounds(0b11), 0);
        assert_eq!(anti.upper_bounds(0), anti.full());
        let chain = two_chain();
        assert_eq!(chain.upper_bounds(0b01), 0b11);
    }

    #[test]
    fn lu_closure_examples() {
        let chain = two_chain();
        // LU({b}) = {a,b}
        assert_eq!(chain.lu_closure(0b10), 0b11);
        let anti = two_antichain();
        assert_eq!(anti.lu_closure(0b01), 0b01);
        // idempotence on a closed subset
        let c = anti.lu_closure(0b01);
        assert_eq!(anti.lu_closure(c), c);
    }

    #[test]
    fn sup_inf_examples() {
        let d = diamond();
        let mids = (1 << 1) | (1 << 2);
        assert_eq!(d.inf_of(mids), d.index_of("bot"));
        assert_eq!(d.sup_of(mids), d.index_of("top"));
        assert_eq!(d.sup_of(1 << 1), Some(1));
        assert_eq!(d.inf_of(1 << 1), Some(1));
        let anti = two_antichain();
        assert_eq!(anti.sup_of(0b11), None);
        assert_eq!(anti.inf_of(0b11), None);
    }

    #[test]
    fn down_closed_examples() {
        let chain = two_chain();
        assert!(chain.is_down_closed_subset(0));
        assert!(chain.is_down_closed_subset(0b01));
        assert!(!chain.is_down_closed_subset(0b10));
    }

    #[test]
    fn completeness_examples() {
        assert!(Poset::singleton("p").is_complete());
        assert!(diamond().is_complete());
        let report = two_antichain().complete_by_scan();
        assert!(!report.verdict);
        assert_eq!(
            report.witness,
            Some(Witness::Subset {
                elements: vec!["a".into(), "b".into()],
                missing: "sup".into()
            })
        );
    }

    #[test]
    fn completeness_methods_agree_on_small_posets() {
        for p in [
            Poset::singleton("p"),
            two_chain(),
            two_antichain(),
            diamond(),
            Poset::chain(4),
            Poset::antichain(3),
        ] {
            assert_eq!(
                p.complete_by_scan().verdict,
                p.complete_by_lattice_criterion().verdict,
                "methods disagree on {:?}",
                p.names()
            );
        }
    }

    #[test]
    fn macneille_of_antichain_is_diamond() {
        let (pbar, emb) = two_antichain().macneille_completion().unwrap();
        assert_eq!(pbar.len(), 4);
        assert!(pbar.is_isomorphic(&diamond()).unwrap());
        assert!(emb.is_order_embedding());
        assert!(pbar.is_complete());
    }

    #[test]
    fn macneille_of_chain_is_chain() {
        let chain = two_chain();
        let (pbar, emb) = chain.macneille_completion().unwrap();
        assert_eq!(pbar.len(), 2);
        assert!(pbar.is_isomorphic(&chain).unwrap());
        assert!(emb.is_order_embedding());
    }

    #[test]
    fn macneille_of_singleton() {
        let (pbar, _) = Poset::singleton("p").macneille_completion().unwrap();
        assert_eq!(pbar.len(), 1);
    }

    #[test]
    fn canonical_key_is_permutation_invariant() {
        let v1 = Poset::from_pairs(&["a", "b", "c"], &[("a", "b"), ("a", "c")]).unwrap();
        let v2 = Poset::from_pairs(&["x", "y", "z"], &[("z", "y"), ("z", "x")]).unwrap();
        assert!(v1.is_isomorphic(&v2).unwrap());
        assert!(!v1.is_isomorphic(&Poset::chain(3)).unwrap());
    }

    #[test]
    fn permutations_are_lexicographic_and_complete() {
        let perms = permutations(3);
        assert_eq!(perms.len(), 6);
        assert_eq!(perms[0], vec![0, 1, 2]);
        assert_eq!(perms[5], vec![2, 1, 0]);
        let mut sorted = perms.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), 6);
    }
}
