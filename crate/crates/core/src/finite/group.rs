use std::collections::VecDeque;
use std::fmt;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rustc_hash::FxHashMap;

use crate::error::{Error, Result};

use super::matrix::{IntMatrix, ModMatrix, MAX_DIM, MAX_MODULUS};
use super::perm::Permutation;

/// Default bound on the order of a generated group.
pub const DEFAULT_ORDER_CAP: usize = 1_000_000;

/// Groups up to this order keep a full multiplication table.
const TABLE_LIMIT: usize = 2048;

/// Groups up to this order get an exhaustive associativity check.
const FULL_AXIOM_LIMIT: usize = 128;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GroupElement {
    Perm(Permutation),
    Mat(ModMatrix),
}

impl GroupElement {
    fn compose(&self, rhs: &GroupElement) -> GroupElement {
        match (self, rhs) {
            (GroupElement::Perm(a), GroupElement::Perm(b)) => GroupElement::Perm(a.compose(b)),
            (GroupElement::Mat(a), GroupElement::Mat(b)) => GroupElement::Mat(a.mul(b)),
            _ => unreachable!("generators are checked to be of one kind"),
        }
    }

    fn identity_like(&self) -> GroupElement {
        match self {
            GroupElement::Perm(p) => GroupElement::Perm(Permutation::identity(p.degree())),
            GroupElement::Mat(m) => GroupElement::Mat(ModMatrix::identity(m.dim(), m.modulus())),
        }
    }

    /// `(kind, degree or dimension, modulus)`.
    fn shape(&self) -> (u8, usize, u32) {
        match self {
            GroupElement::Perm(p) => (0, p.degree(), 0),
            GroupElement::Mat(m) => (1, m.dim(), m.modulus()),
        }
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupElement::Perm(p) => write!(f, "{p}"),
            GroupElement::Mat(m) => write!(f, "{}", m.lift()),
        }
    }
}

/// Partition of a group (or subgroup) into conjugacy classes.
///
/// Classes are numbered by their least element index, and that element is
/// the class representative.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassPartition {
    // Indexed by element index of the ambient group; NO_CLASS for non-members.
    class_of: Vec<u32>,
    reps: Vec<usize>,
    sizes: Vec<usize>,
}

pub(crate) const NO_CLASS: u32 = u32::MAX;

impl ClassPartition {
    /// Orbits of `members` under conjugation by `conjugators`.
    pub(crate) fn compute(group: &FiniteGroup, members: &[usize], conjugators: &[usize]) -> ClassPartition {
        let mut class_of = vec![NO_CLASS; group.order()];
        let mut reps = Vec::new();
        let mut sizes = Vec::new();
        let mut sorted = members.to_vec();
        sorted.sort_unstable();
        for &start in &sorted {
            if class_of[start] != NO_CLASS {
                continue;
            }
            let id = reps.len() as u32;
            class_of[start] = id;
            let mut queue = VecDeque::from([start]);
            let mut size = 0;
            while let Some(x) = queue.pop_front() {
                size += 1;
                for &g in conjugators {
                    let y = group.mul(group.mul(group.inverse(g), x), g);
                    if class_of[y] == NO_CLASS {
                        class_of[y] = id;
                        queue.push_back(y);
                    }
                }
            }
            reps.push(start);
            sizes.push(size);
        }
        ClassPartition { class_of, reps, sizes }
    }

    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    /// Class of the element with ambient index `x`, if it is a member.
    pub fn class_of(&self, x: usize) -> Option<usize> {
        let c = *self.class_of.get(x)?;
        (c != NO_CLASS).then_some(c as usize)
    }

    pub fn reps(&self) -> &[usize] {
        &self.reps
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }
}

/// A finite group realized by permutations or matrices mod `m`, with
/// elements numbered in breadth-first order from the generators.
#[derive(Debug, Clone)]
pub struct FiniteGroup {
    elements: Vec<GroupElement>,
    index: FxHashMap<GroupElement, u32>,
    generators: Vec<usize>,
    inverse: Vec<u32>,
    table: Option<Vec<u32>>,
    classes: ClassPartition,
}

impl FiniteGroup {
    /// Breadth-first closure of `gens` under right multiplication.
    pub fn generate(gens: &[GroupElement], cap: usize) -> Result<FiniteGroup> {
        let first = gens
            .first()
            .ok_or_else(|| Error::InvalidArgument("at least one generator is required".into()))?;
        let shape = first.shape();
        if gens.iter().any(|g| g.shape() != shape) {
            return Err(Error::InvalidArgument("generators must share kind, degree and modulus".into()));
        }
        for g in gens {
            if let GroupElement::Mat(m) = g {
                let det = u64::from(m.determinant());
                if gcd(det, u64::from(m.modulus())) != 1 {
                    return Err(Error::InvalidArgument(format!("generator {g} is not invertible")));
                }
            }
        }

        let identity = first.identity_like();
        let mut elements = vec![identity.clone()];
        let mut index = FxHashMap::default();
        index.insert(identity, 0u32);
        let mut head = 0;
        while head < elements.len() {
            for g in gens {
                let product = elements[head].compose(g);
                if !index.contains_key(&product) {
                    if elements.len() >= cap {
                        return Err(Error::Resource {
                            what: "finite group",
                            count: elements.len() + 1,
                            cap,
                            radius: None,
                        });
                    }
                    index.insert(product.clone(), elements.len() as u32);
                    elements.push(product);
                }
            }
            head += 1;
        }
        let generators = gens.iter().map(|g| index[g] as usize).collect();
        let n = elements.len();

        let table = (n <= TABLE_LIMIT).then(|| {
            let mut t = Vec::with_capacity(n * n);
            for a in &elements {
                for b in &elements {
                    t.push(index[&a.compose(b)]);
                }
            }
            t
        });

        let mut group = FiniteGroup {
            elements,
            index,
            generators,
            inverse: Vec::new(),
            table,
            classes: ClassPartition {
                class_of: Vec::new(),
                reps: Vec::new(),
                sizes: Vec::new(),
            },
        };
        group.inverse = (0..n).map(|x| group.find_inverse(x) as u32).collect();
        let all: Vec<usize> = (0..n).collect();
        group.classes = ClassPartition::compute(&group, &all, &group.generators);
        group.check_axioms()?;
        Ok(group)
    }

    /// Permutation group from cycle-notation generators on `1..=degree`.
    pub fn from_permutations(gens: Vec<Permutation>, cap: usize) -> Result<FiniteGroup> {
        FiniteGroup::generate(&gens.into_iter().map(GroupElement::Perm).collect::<Vec<_>>(), cap)
    }

    /// Matrix group generated by integer matrices reduced mod `m`.
    pub fn from_matrices(gens: &[IntMatrix], m: u32, cap: usize) -> Result<FiniteGroup> {
        if !(2..=MAX_MODULUS).contains(&m) {
            return Err(Error::InvalidArgument(format!("modulus {m} outside 2..={MAX_MODULUS}")));
        }
        FiniteGroup::generate(&gens.iter().map(|a| GroupElement::Mat(a.reduce(m))).collect::<Vec<_>>(), cap)
    }

    /// `SL(n, Z/m)`, generated by the elementary transvections `I + E_ij`.
    pub fn congruence(n: usize, m: u32, cap: usize) -> Result<FiniteGroup> {
        if !(2..=MAX_DIM).contains(&n) {
            return Err(Error::InvalidArgument(format!("dimension {n} outside 2..={MAX_DIM}")));
        }
        let gens: Vec<IntMatrix> = (0..n)
            .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| IntMatrix::elementary(n, i, j, 1)))
            .collect();
        FiniteGroup::from_matrices(&gens, m, cap)
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn element(&self, i: usize) -> &GroupElement {
        &self.elements[i]
    }

    pub fn elements(&self) -> &[GroupElement] {
        &self.elements
    }

    pub fn index_of(&self, g: &GroupElement) -> Option<usize> {
        self.index.get(g).map(|&i| i as usize)
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        match &self.table {
            Some(t) => t[a * self.order() + b] as usize,
            None => self.index[&self.elements[a].compose(&self.elements[b])] as usize,
        }
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.inverse[a] as usize
    }

    pub fn classes(&self) -> &ClassPartition {
        &self.classes
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    fn find_inverse(&self, a: usize) -> usize {
        // a^{ord(a) - 1}
        let mut prev = 0;
        let mut x = a;
        while x != 0 {
            prev = x;
            x = self.mul(x, a);
        }
        if a == 0 {
            0
        } else {
            prev
        }
    }

    fn check_axioms(&self) -> Result<()> {
        let n = self.order();
        for a in 0..n {
            if self.mul(a, 0) != a || self.mul(0, a) != a {
                return Err(Error::Axiom(format!("element {a} is not fixed by the identity")));
            }
            if self.mul(a, self.inverse(a)) != 0 || self.mul(self.inverse(a), a) != 0 {
                return Err(Error::Axiom(format!("element {a} has no two-sided inverse")));
            }
        }
        let assoc = |a: usize, b: usize, c: usize| self.mul(self.mul(a, b), c) == self.mul(a, self.mul(b, c));
        if n <= FULL_AXIOM_LIMIT {
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        if !assoc(a, b, c) {
                            return Err(Error::Axiom(format!("({a}·{b})·{c} ≠ {a}·({b}·{c})")));
                        }
                    }
                }
            }
        } else {
            let mut rng = StdRng::seed_from_u64(0x5eed);
            for _ in 0..20_000 {
                let (a, b, c) = (rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n));
                if !assoc(a, b, c) {
                    return Err(Error::Axiom(format!("({a}·{b})·{c} ≠ {a}·({b}·{c})")));
                }
            }
        }
        Ok(())
    }
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// `|SL(n, F_p)| = p^{n(n−1)/2} · ∏_{k=2..n} (p^k − 1)` for a prime `p`.
pub fn sl_order_formula(n: u32, p: u64) -> u64 {
    let mut order = p.pow(n * (n - 1) / 2);
    for k in 2..=n {
        order *= p.pow(k) - 1;
    }
    order
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perms(degree: usize, gens: &[&str]) -> FiniteGroup {
        let gens = gens
            .iter()
            .map(|s| Permutation::parse_cycles(s, degree).unwrap())
            .collect();
        FiniteGroup::from_permutations(gens, DEFAULT_ORDER_CAP).unwrap()
    }

    #[test]
    fn symmetric_group_s3() {
        let g = perms(3, &["(1 2)", "(1 2 3)"]);
        assert_eq!(g.order(), 6);
        assert_eq!(g.classes().len(), 3);
        let mut sizes = g.classes().sizes().to_vec();
        sizes.sort();
        assert_eq!(sizes, vec![1, 2, 3]);
        assert_eq!(g.classes().reps()[0], 0);
    }

    #[test]
    fn s4_classes_match_cycle_types() {
        let g = perms(4, &["(1 2)", "(1 2 3 4)"]);
        assert_eq!(g.order(), 24);
        let mut sizes = g.classes().sizes().to_vec();
        sizes.sort();
        assert_eq!(sizes, vec![1, 3, 6, 6, 8]);
        // Every class is homogeneous in element order.
        for x in 0..g.order() {
            let c = g.classes().class_of(x).unwrap();
            assert_eq!(g.element_order(x), g.element_order(g.classes().reps()[c]));
        }
    }

    #[test]
    fn congruence_orders() {
        assert_eq!(FiniteGroup::congruence(2, 2, DEFAULT_ORDER_CAP).unwrap().order(), 6);
        assert_eq!(FiniteGroup::congruence(2, 3, DEFAULT_ORDER_CAP).unwrap().order(), 24);
        assert_eq!(FiniteGroup::congruence(3, 2, DEFAULT_ORDER_CAP).unwrap().order(), 168);
        // Composite modulus: |SL(2, Z/4)| = 48.
        assert_eq!(FiniteGroup::congruence(2, 4, DEFAULT_ORDER_CAP).unwrap().order(), 48);
    }

    #[test]
    fn formula_values() {
        assert_eq!(sl_order_formula(2, 2), 6);
        assert_eq!(sl_order_formula(2, 5), 120);
        assert_eq!(sl_order_formula(3, 2), 168);
        assert_eq!(sl_order_formula(3, 3), 5616);
    }

    #[test]
    fn cap_and_bad_generators() {
        assert!(matches!(
            FiniteGroup::congruence(3, 3, 1000),
            Err(Error::Resource { .. })
        ));
        let singular = IntMatrix::parse("2 0 / 0 1").unwrap();
        assert!(FiniteGroup::from_matrices(&[singular], 4, DEFAULT_ORDER_CAP).is_err());
        assert!(FiniteGroup::generate(&[], DEFAULT_ORDER_CAP).is_err());
        let mixed = vec![
            GroupElement::Perm(Permutation::identity(3)),
            GroupElement::Perm(Permutation::identity(4)),
        ];
        assert!(FiniteGroup::generate(&mixed, DEFAULT_ORDER_CAP).is_err());
    }

    #[test]
    fn large_group_without_table() {
        // SL(3, Z/3) has order 5616 > table limit; multiplication goes through the index.
        let g = FiniteGroup::congruence(3, 3, DEFAULT_ORDER_CAP).unwrap();
        assert_eq!(g.order() as u64, sl_order_formula(3, 3));
        assert!(g.table.is_none());
        let x = g.generators()[0];
        assert_eq!(g.mul(x, g.inverse(x)), 0);
    }
}
