//! Classes of acts inside a universe.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::universe::Universe;

/// A class of universe acts, keyed by universe index. Every class contains
/// all trivial acts; isomorphism closure comes from canonical keying.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ActClass {
    pub label: String,
    members: BTreeSet<usize>,
}

impl ActClass {
    /// Adds the trivial acts to `members`.
    pub fn new(u: &Universe, label: impl Into<String>, members: impl IntoIterator<Item = usize>) -> Self {
        let mut set: BTreeSet<usize> = members.into_iter().filter(|&i| i < u.len()).collect();
        set.extend(u.trivial_indices());
        ActClass { label: label.into(), members: set }
    }

    pub fn trivial(u: &Universe) -> Self {
        Self::new(u, "trivial", [])
    }

    pub fn all(u: &Universe) -> Self {
        Self::new(u, "all", 0..u.len())
    }

    pub fn from_predicate(u: &Universe, pred: Predicate) -> Self {
        Self::new(u, pred.id(), (0..u.len()).filter(|&i| pred.holds(u, i)))
    }

    pub fn from_mask(u: &Universe, label: impl Into<String>, mask: &[bool]) -> Self {
        Self::new(u, label, (0..u.len()).filter(|&i| mask[i]))
    }

    pub fn contains(&self, i: usize) -> bool {
        self.members.contains(&i)
    }

    pub fn members(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn is_subset(&self, other: &ActClass) -> bool {
        self.members.is_subset(&other.members)
    }

    pub fn same_members(&self, other: &ActClass) -> bool {
        self.members == other.members
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    /// Member names, space separated.
    pub fn describe(&self, u: &Universe) -> String {
        self.members.iter().map(|&i| u.name(i)).collect::<Vec<_>>().join(" ")
    }

    /// Non-trivial members only, which is what distinguishes classes.
    pub fn describe_nontrivial(&self, u: &Universe) -> String {
        let names: Vec<String> = self.members.iter().filter(|&&i| !u.is_trivial(i)).map(|&i| u.name(i)).collect();
        format!("{{{}}}", names.join(" "))
    }
}

/// Built-in membership predicates usable in class fixtures.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Predicate {
    Trivial,
    All,
    /// Every non-identity element acts as a constant map.
    ConstantAction,
    /// Every element acts as the identity map.
    IdentityAction,
    HasZero,
    MaxSize(usize),
}

impl Predicate {
    pub fn parse(id: &str) -> Result<Predicate> {
        Ok(match id {
            "trivial" => Predicate::Trivial,
            "all" => Predicate::All,
            "constant-action" => Predicate::ConstantAction,
            "identity-action" => Predicate::IdentityAction,
            "has-zero" => Predicate::HasZero,
            other => match other.strip_prefix("max-size-").and_then(|n| n.parse().ok()) {
                Some(n) => Predicate::MaxSize(n),
                None => {
                    return Err(Error::Parse { line: 0, column: 1, message: format!("unknown class predicate `{id}`") })
                }
            },
        })
    }

    pub fn id(&self) -> String {
        match self {
            Predicate::Trivial => "trivial".into(),
            Predicate::All => "all".into(),
            Predicate::ConstantAction => "constant-action".into(),
            Predicate::IdentityAction => "identity-action".into(),
            Predicate::HasZero => "has-zero".into(),
            Predicate::MaxSize(n) => format!("max-size-{n}"),
        }
    }

    pub fn holds(&self, u: &Universe, i: usize) -> bool {
        let a = u.act(i);
        let m = u.monoid();
        match self {
            Predicate::Trivial => a.is_trivial(),
            Predicate::All => true,
            Predicate::ConstantAction => m.non_identity().all(|s| (0..a.size()).all(|x| a.act(s, x) == a.act(s, 0))),
            Predicate::IdentityAction => (0..m.size()).all(|s| (0..a.size()).all(|x| a.act(s, x) == x)),
            Predicate::HasZero => a.is_trivial() || !a.zeros().is_empty(),
            Predicate::MaxSize(n) => a.size() <= *n,
        }
    }
}

impl fmt::Display for Predicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.id())
    }
}

/// Every class of the universe (each contains the trivial acts), ordered by
/// the bitmask over non-trivial acts.
pub fn enumerate_classes(u: &Universe, max_nontrivial: usize) -> Result<Vec<ActClass>> {
    let nontrivial = u.nontrivial_indices();
    let k = nontrivial.len();
    if k > max_nontrivial {
        return Err(Error::bound("classes: non-trivial acts", k as u64, max_nontrivial as u64));
    }
    Ok((0u64..1 << k)
        .map(|mask| {
            let members = (0..k).filter(|&b| mask >> b & 1 == 1).map(|b| nontrivial[b]);
            let c = ActClass::new(u, "", members);
            let label = c.describe_nontrivial(u);
            c.with_label(label)
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monoid::Monoid;
    use crate::universe::{build_universe, Bounds};
    use std::sync::Arc;

    #[test]
    fn classes_contain_trivials() {
        let u = build_universe(Arc::new(Monoid::idempotent()), 2, &Bounds::default()).unwrap();
        let t = ActClass::trivial(&u);
        assert_eq!(t.len(), 2);
        assert!(t.is_subset(&ActClass::all(&u)));
        let classes = enumerate_classes(&u, 16).unwrap();
        assert_eq!(classes.len(), 4);
        assert!(classes.iter().all(|c| t.is_subset(c)));
    }

    #[test]
    fn predicates() {
        let u = build_universe(Arc::new(Monoid::idempotent()), 2, &Bounds::default()).unwrap();
        let k = ActClass::from_predicate(&u, Predicate::ConstantAction);
        let i = ActClass::from_predicate(&u, Predicate::IdentityAction);
        assert_eq!(k.len(), 3);
        assert_eq!(i.len(), 3);
        assert!(!k.same_members(&i));
        assert_eq!(Predicate::parse("max-size-3").unwrap(), Predicate::MaxSize(3));
        assert!(Predicate::parse("bogus").is_err());
    }
}
