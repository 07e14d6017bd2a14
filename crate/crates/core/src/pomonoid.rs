//! Finite pomonoids: monoid axioms, order-compatibility, and the special
//! hypotheses the lifting theorems need (identity-is-bottom, pogroup).

use crate::error::{Error, Result};
use crate::poset::{permutations, Poset};
use crate::report::{ClassReport, Witness};

/// A monoid on a poset carrier whose multiplication is compatible with the
/// order on both sides. `mult[s * n + t]` is the product s*t.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Pomonoid {
    carrier: Poset,
    mult: Vec<usize>,
    identity: usize,
}

/// Raw candidate: carrier poset plus a multiplication table and identity.
#[derive(Debug, Clone)]
pub struct RawPomonoid {
    pub carrier: Poset,
    pub mult: Vec<usize>,
    pub identity: usize,
}

/// Checks associativity, the identity laws, and order-compatibility,
/// reporting the first violated axiom with its witness tuple.
pub fn validate_pomonoid(raw: &RawPomonoid) -> Result<ClassReport> {
    let n = raw.carrier.len();
    if raw.mult.len() != n * n {
        return Err(Error::Structural(format!(
            "multiplication table has {} entries, expected {}",
            raw.mult.len(),
            n * n
        )));
    }
    if raw.identity >= n {
        return Err(Error::Structural("identity index out of range".into()));
    }
    if let Some(&v) = raw.mult.iter().find(|&&v| v >= n) {
        return Err(Error::Structural(format!(
            "multiplication value {v} outside the carrier"
        )));
    }
    let mul = |s: usize, t: usize| raw.mult[s * n + t];
    let name = |i: usize| raw.carrier.name(i);
    let e = raw.identity;
    for s in 0..n {
        if mul(e, s) != s || mul(s, e) != s {
            return Ok(ClassReport::fail(Witness::axiom("identity", &[name(s)])));
        }
    }
    for s in 0..n {
        for t in 0..n {
            for u in 0..n {
                if mul(mul(s, t), u) != mul(s, mul(t, u)) {
                    return Ok(ClassReport::fail(Witness::axiom(
                        "associativity",
                        &[name(s), name(t), name(u)],
                    )));
                }
            }
        }
    }
    // s <= t and s' <= t' must imply s s' <= t t'.
    for s in 0..n {
        for t in 0..n {
            if !raw.carrier.leq(s, t) {
                continue;
            }
            for s2 in 0..n {
                for t2 in 0..n {
                    if raw.carrier.leq(s2, t2) && !raw.carrier.leq(mul(s, s2), mul(t, t2)) {
                        return Ok(ClassReport::fail(Witness::axiom(
                            "compatibility",
                            &[name(s), name(t), name(s2), name(t2)],
                        )));
                    }
                }
            }
        }
    }
    Ok(ClassReport::pass())
}

impl Pomonoid {
    pub fn from_raw(raw: &RawPomonoid) -> Result<Pomonoid> {
        let report = validate_pomonoid(raw)?;
        if let Some(w) = report.witness {
            return Err(Error::Structural(format!("not a pomonoid: {w:?}")));
        }
        Ok(Pomonoid {
            carrier: raw.carrier.clone(),
            mult: raw.mult.clone(),
            identity: raw.identity,
        })
    }

    pub fn carrier(&self) -> &Poset {
        &self.carrier
    }

    pub fn len(&self) -> usize {
        self.carrier.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, s: usize, t: usize) -> usize {
        self.mult[s * self.carrier.len() + t]
    }

    pub fn mult_table(&self) -> &[usize] {
        &self.mult
    }

    pub fn name(&self, i: usize) -> &str {
        self.carrier.name(i)
    }

    /// 1 <= s for every s: the hypothesis of the down-closed-embedding lemma.
    pub fn identity_is_bottom(&self) -> bool {
        self.carrier.least_of(self.carrier.full()) == Some(self.identity)
    }

    /// Every element has a two-sided inverse.
    pub fn is_pogroup(&self) -> bool {
        let n = self.len();
        (0..n).all(|s| {
            (0..n).any(|t| self.mul(s, t) == self.identity && self.mul(t, s) == self.identity)
        })
    }

    // ---- named instances -------------------------------------------------

    /// The one-element pomonoid.
    pub fn trivial() -> Pomonoid {
        Pomonoid {
            carrier: Poset::singleton("1"),
            mult: vec![0],
            identity: 0,
        }
    }

    /// {1 < s} with s idempotent. Identity is the bottom; not a group.
    pub fn u2() -> Pomonoid {
        let raw = RawPomonoid {
            carrier: Poset::chain_named(&["1", "s"]),
            mult: vec![0, 1, 1, 1],
            identity: 0,
        };
        Pomonoid::from_raw(&raw).expect("u2 is a pomonoid")
    }

    /// {1 < s < t} with multiplication x*y = max(x, y).
    pub fn chain3() -> Pomonoid {
        let carrier = Poset::chain_named(&["1", "s", "t"]);
        let mut mult = vec![0; 9];
        for a in 0..3 {
            for b in 0..3 {
                mult[a * 3 + b] = a.max(b);
            }
        }
        Pomonoid::from_raw(&RawPomonoid {
            carrier,
            mult,
            identity: 0,
        })
        .expect("chain3 is a pomonoid")
    }

    /// The two-element group with the discrete order.
    pub fn z2() -> Pomonoid {
        Pomonoid::from_raw(&RawPomonoid {
            carrier: Poset::from_pairs(&["1", "s"], &[]).expect("discrete order"),
            mult: vec![0, 1, 1, 0],
            identity: 0,
        })
        .expect("z2 is a pomonoid")
    }

    /// Canonical key over carrier permutations, for deduplication in the
    /// opt-in enumerator. Multiplication, identity, and order all permute.
    fn canonical_key(&self) -> Vec<usize> {
        let n = self.len();
        let mut best: Option<Vec<usize>> = None;
        for perm in permutations(n) {
            // inv[old] = new position
            let mut inv = vec![0; n];
            for (new, &old) in perm.iter().enumerate() {
                inv[old] = new;
            }
            let mut key = Vec::with_capacity(n * n + n * n + 1);
            key.push(inv[self.identity]);
            for i in 0..n {
                for j in 0..n {
                    key.push(inv[self.mul(perm[i], perm[j])]);
                }
            }
            for i in 0..n {
                for j in 0..n {
                    key.push(usize::from(self.carrier.leq(perm[i], perm[j])));
                }
            }
            if best.as_ref().is_none_or(|b| key < *b) {
                best = Some(key);
            }
        }
        best.unwrap()
    }
}

/// Opt-in exhaustive enumeration of all pomonoids with exactly `n` elements
/// up to isomorphism, n <= 3. Kept out of the default catalogs; the named
/// instances above cover the hypotheses the theorems need.
pub fn enumerate_pomonoids(n: usize) -> Result<Vec<Pomonoid>> {
    const CAP: usize = 3;
    if n == 0 || n > CAP {
        return Err(Error::SizeCap {
            what: "pomonoid enumeration",
            size: n,
            cap: CAP,
        });
    }
    let posets = crate::catalog::enumerate_posets(n)?;
    let mut seen: Vec<Vec<usize>> = Vec::new();
    let mut out = Vec::new();
    for carrier in posets {
        let cells = n * n;
        let mut mult = vec![0usize; cells];
        loop {
            for identity in 0..n {
                let raw = RawPomonoid {
                    carrier: carrier.clone(),
                    mult: mult.clone(),
                    identity,
                };
                if validate_pomonoid(&raw)?.verdict {
                    let m = Pomonoid::from_raw(&raw)?;
                    let key = m.canonical_key();
                    if !seen.contains(&key) {
                        seen.push(key);
                        out.push(m);
                    }
                }
            }
            // odometer over the multiplication table
            let mut i = 0;
            while i < cells {
                mult[i] += 1;
                if mult[i] < n {
                    break;
                }
                mult[i] = 0;
                i += 1;
            }
            if i == cells {
                break;
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn named_pomonoids_validate() {
        for m in [
            Pomonoid::trivial(),
            Pomonoid::u2(),
            Pomonoid::chain3(),
            Pomonoid::z2(),
        ] {
            let raw = RawPomonoid {
                carrier: m.carrier().clone(),
                mult: m.mult_table().to_vec(),
                identity: m.identity(),
            };
            assert!(validate_pomonoid(&raw).unwrap().verdict);
        }
    }

    #[test]
    fn z2_with_identity_below_s_fails_compatibility() {
        // s <= s and 1 <= s would force s = s*1 <= s*s = 1.
        let raw = RawPomonoid {
            carrier: Poset::chain_named(&["1", "s"]),
            mult: vec![0, 1, 1, 0],
            identity: 0,
        };
        let report = validate_pomonoid(&raw).unwrap();
        assert!(!report.verdict);
        match report.witness {
            Some(Witness::Axiom { axiom, .. }) => assert_eq!(axiom, "compatibility"),
            w => panic!("expected compatibility witness, got {w:?}"),
        }
    }

    #[test]
    fn identity_is_bottom_examples() {
        assert!(Pomonoid::u2().identity_is_bottom());
        assert!(Pomonoid::trivial().identity_is_bottom());
        assert!(Pomonoid::chain3().identity_is_bottom());
        assert!(!Pomonoid::z2().identity_is_bottom());
    }

    #[test]
    fn pogroup_examples() {
        assert!(Pomonoid::z2().is_pogroup());
        assert!(Pomonoid::trivial().is_pogroup());
        assert!(!Pomonoid::u2().is_pogroup());
    }

    #[test]
    fn identity_bottom_implies_inflationary_self_action() {
        // s <= s*t whenever 1 <= t, specialized to S acting on itself.
        for m in [Pomonoid::trivial(), Pomonoid::u2(), Pomonoid::chain3()] {
            assert!(m.identity_is_bottom());
            for s in 0..m.len() {
                for t in 0..m.len() {
                    assert!(m.carrier().leq(s, m.mul(s, t)));
                }
            }
        }
    }

    #[test]
    fn enumerate_size_two_pomonoids() {
        let found = enumerate_pomonoids(2).unwrap();
        // {1,s} with s*s in {1,s}, order discrete / 1<s / s<1. Compatibility
        // kills both ordered group variants, leaving the discrete
        // semilattice, u2, its order-dual, and discrete Z2.
        assert_eq!(found.len(), 4);
        let groups = found.iter().filter(|m| m.is_pogroup()).count();
        assert_eq!(groups, 1, "only discrete Z2 survives compatibility");
        assert!(found
            .iter()
            .any(|m| m.identity_is_bottom() && !m.is_pogroup()));
    }

    #[test]
    fn enumeration_cap_is_enforced() {
        assert!(matches!(
            enumerate_pomonoids(4),
            Err(Error::SizeCap { .. })
        ));
    }
}
