use std::collections::VecDeque;
use std::sync::Arc;

use crate::error::{Error, Result};

use super::group::{ClassPartition, FiniteGroup, GroupElement};

/// A subgroup of a [`FiniteGroup`], with its own conjugacy classes.
///
/// The whole group is represented as the subgroup containing every element,
/// so characters of groups and of subgroups share one type.
#[derive(Debug, Clone)]
pub struct Subgroup {
    parent: Arc<FiniteGroup>,
    members: Vec<usize>,
    is_member: Vec<bool>,
    generators: Vec<usize>,
    transversal: Vec<usize>,
    classes: ClassPartition,
}

impl Subgroup {
    pub fn whole(parent: &Arc<FiniteGroup>) -> Subgroup {
        let n = parent.order();
        Subgroup {
            parent: Arc::clone(parent),
            members: (0..n).collect(),
            is_member: vec![true; n],
            generators: parent.generators().to_vec(),
            transversal: vec![parent.identity()],
            classes: parent.classes().clone(),
        }
    }

    /// Closure of `gens` (element indices of `parent`).
    pub fn generated(parent: &Arc<FiniteGroup>, gens: &[usize]) -> Result<Subgroup> {
        let n = parent.order();
        if let Some(&bad) = gens.iter().find(|&&g| g >= n) {
            return Err(Error::InvalidArgument(format!("element index {bad} outside group of order {n}")));
        }
        let mut is_member = vec![false; n];
        is_member[parent.identity()] = true;
        let mut queue = VecDeque::from([parent.identity()]);
        while let Some(x) = queue.pop_front() {
            for &g in gens {
                let y = parent.mul(x, g);
                if !is_member[y] {
                    is_member[y] = true;
                    queue.push_back(y);
                }
            }
        }
        let members: Vec<usize> = (0..n).filter(|&x| is_member[x]).collect();
        let classes = ClassPartition::compute(parent, &members, gens);
        let transversal = left_transversal(parent, &members, &(0..n).collect::<Vec<_>>());
        Ok(Subgroup {
            parent: Arc::clone(parent),
            members,
            is_member,
            generators: gens.to_vec(),
            transversal,
            classes,
        })
    }

    /// Subgroup generated by concrete elements, which must lie in `parent`.
    pub fn from_elements(parent: &Arc<FiniteGroup>, gens: &[GroupElement]) -> Result<Subgroup> {
        let idx = gens
            .iter()
            .map(|g| {
                parent
                    .index_of(g)
                    .ok_or_else(|| Error::InvalidArgument(format!("{g} is not an element of the group")))
            })
            .collect::<Result<Vec<_>>>()?;
        Subgroup::generated(parent, &idx)
    }

    pub fn parent(&self) -> &Arc<FiniteGroup> {
        &self.parent
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn contains(&self, x: usize) -> bool {
        self.is_member.get(x).copied().unwrap_or(false)
    }

    /// Left coset representatives in the parent group, one per coset `gH`,
    /// each the least element index of its coset.
    pub fn transversal(&self) -> &[usize] {
        &self.transversal
    }

    pub fn classes(&self) -> &ClassPartition {
        &self.classes
    }

    pub fn is_whole(&self) -> bool {
        self.order() == self.parent.order()
    }

    pub fn same_parent(&self, other: &Subgroup) -> bool {
        Arc::ptr_eq(&self.parent, &other.parent)
    }

    /// Same parent and same member set.
    pub fn same_as(&self, other: &Subgroup) -> bool {
        self.same_parent(other) && self.members == other.members
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.same_parent(other) && self.members.iter().all(|&x| other.contains(x))
    }

    /// Left coset representatives of `self` inside the larger subgroup
    /// `within`.
    pub fn transversal_in(&self, within: &Subgroup) -> Result<Vec<usize>> {
        if !self.is_subgroup_of(within) {
            return Err(Error::NotNested("transversal of a non-subgroup".into()));
        }
        if within.is_whole() {
            return Ok(self.transversal.clone());
        }
        Ok(left_transversal(&self.parent, &self.members, within.members()))
    }
}

fn left_transversal(group: &FiniteGroup, members: &[usize], within: &[usize]) -> Vec<usize> {
    let mut covered = vec![false; group.order()];
    let mut reps = Vec::new();
    for &g in within {
        if covered[g] {
            continue;
        }
        reps.push(g);
        for &h in members {
            covered[group.mul(g, h)] = true;
        }
    }
    reps
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finite::group::DEFAULT_ORDER_CAP;
    use crate::finite::perm::Permutation;

    fn s4() -> Arc<FiniteGroup> {
        let gens = ["(1 2)", "(1 2 3 4)"]
            .iter()
            .map(|s| Permutation::parse_cycles(s, 4).unwrap())
            .collect();
        Arc::new(FiniteGroup::from_permutations(gens, DEFAULT_ORDER_CAP).unwrap())
    }

    fn sub(g: &Arc<FiniteGroup>, cycles: &[&str]) -> Subgroup {
        let elems: Vec<GroupElement> = cycles
            .iter()
            .map(|s| GroupElement::Perm(Permutation::parse_cycles(s, 4).unwrap()))
            .collect();
        Subgroup::from_elements(g, &elems).unwrap()
    }

    #[test]
    fn point_stabilizer() {
        let g = s4();
        let h = sub(&g, &["(1 2)", "(1 2 3)"]);
        assert_eq!(h.order(), 6);
        assert_eq!(h.transversal().len(), 4);
        assert_eq!(h.classes().len(), 3);
        assert!(h.is_subgroup_of(&Subgroup::whole(&g)));
    }

    #[test]
    fn trivial_and_nested() {
        let g = s4();
        let e = Subgroup::generated(&g, &[]).unwrap();
        assert_eq!(e.order(), 1);
        assert_eq!(e.transversal().len(), 24);
        let c2 = sub(&g, &["(1 2)"]);
        let s3 = sub(&g, &["(1 2)", "(1 2 3)"]);
        assert!(c2.is_subgroup_of(&s3));
        assert!(!s3.is_subgroup_of(&c2));
        assert_eq!(c2.transversal_in(&s3).unwrap().len(), 3);
        assert!(s3.transversal_in(&c2).is_err());
    }

    #[test]
    fn transversal_covers_disjointly() {
        let g = s4();
        let h = sub(&g, &["(1 2)(3 4)", "(1 3)(2 4)"]);
        assert_eq!(h.order(), 4);
        let mut seen = vec![0; g.order()];
        for &t in h.transversal() {
            for &x in h.members() {
                seen[g.mul(t, x)] += 1;
            }
        }
        assert!(seen.iter().all(|&c| c == 1));
    }

    #[test]
    fn foreign_elements_are_rejected() {
        let g = s4();
        let p5 = GroupElement::Perm(Permutation::parse_cycles("(1 5)", 5).unwrap());
        assert!(Subgroup::from_elements(&g, &[p5]).is_err());
    }
}
