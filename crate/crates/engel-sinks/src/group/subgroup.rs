//! Subgroups as sorted element-index sets, plus the closure, centralizer,
//! and normalizer machinery everything else builds on.

use crate::error::GroupError;
use crate::group::GroupTable;

/// A subgroup of an ambient [`GroupTable`], stored as a strictly sorted
/// list of element indices together with the generators it was closed
/// from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubgroupHandle {
    elements: Vec<usize>,
    generators: Vec<usize>,
    parent_order: usize,
}

impl SubgroupHandle {
    pub(crate) fn from_parts(
        mut elements: Vec<usize>,
        generators: Vec<usize>,
        parent_order: usize,
    ) -> Self {
        elements.sort_unstable();
        elements.dedup();
        SubgroupHandle {
            elements,
            generators,
            parent_order,
        }
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn parent_order(&self) -> usize {
        self.parent_order
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }

    /// Whole-group handle?
    pub fn is_full(&self) -> bool {
        self.elements.len() == self.parent_order
    }

    pub fn contains(&self, x: usize) -> bool {
        self.elements.binary_search(&x).is_ok()
    }

    pub fn contains_all(&self, other: &SubgroupHandle) -> bool {
        other.elements.iter().all(|&x| self.contains(x))
    }

    pub fn same_elements(&self, other: &SubgroupHandle) -> bool {
        self.elements == other.elements
    }

    /// Membership mask over the ambient group, for hot loops.
    pub fn member_mask(&self) -> Vec<bool> {
        let mut mask = vec![false; self.parent_order];
        for &x in &self.elements {
            mask[x] = true;
        }
        mask
    }

    /// Index of the ambient subgroup in its parent.
    pub fn index_in_parent(&self) -> usize {
        self.parent_order / self.order()
    }

    /// Intersection of two subgroups of the same parent.
    pub fn intersect(&self, other: &SubgroupHandle) -> SubgroupHandle {
        debug_assert_eq!(self.parent_order, other.parent_order);
        let elements: Vec<usize> = self
            .elements
            .iter()
            .copied()
            .filter(|&x| other.contains(x))
            .collect();
        SubgroupHandle::from_parts(elements.clone(), elements, self.parent_order)
    }

    /// The conjugate subgroup `H^y`.
    pub fn conjugate_by(&self, group: &GroupTable, y: usize) -> SubgroupHandle {
        let elements: Vec<usize> = self
            .elements
            .iter()
            .map(|&x| group.conjugate(x, y))
            .collect();
        let generators = self
            .generators
            .iter()
            .map(|&x| group.conjugate(x, y))
            .collect();
        SubgroupHandle::from_parts(elements, generators, self.parent_order)
    }
}

impl GroupTable {
    /// Least subgroup containing `seeds`. Deterministic: the result is
    /// always sorted ascending, and closure is a breadth-first sweep over
    /// seed multiplication.
    pub fn subgroup_closure(&self, seeds: &[usize]) -> Result<SubgroupHandle, GroupError> {
        for &s in seeds {
            if s >= self.order() {
                return Err(GroupError::BadSeed { index: s });
            }
        }
        Ok(self.closure_unchecked(seeds))
    }

    /// Closure without the seed-range check, for internal callers that
    /// already hold valid indices. In a finite group the submonoid
    /// generated by a set is the subgroup it generates, so sweeping with
    /// right-multiplication by the seeds is enough.
    pub(crate) fn closure_unchecked(&self, seeds: &[usize]) -> SubgroupHandle {
        let n = self.order();
        let mut member = vec![false; n];
        member[0] = true;
        let mut frontier: Vec<usize> = vec![0];
        let mut count = 1usize;
        let seeds_dedup: Vec<usize> = {
            let mut s = seeds.to_vec();
            s.sort_unstable();
            s.dedup();
            s
        };
        while let Some(x) = frontier.pop() {
            for &s in &seeds_dedup {
                let y = self.mul(x, s);
                if !member[y] {
                    member[y] = true;
                    count += 1;
                    frontier.push(y);
                }
            }
        }
        let mut elements = Vec::with_capacity(count);
        for (x, &m) in member.iter().enumerate() {
            if m {
                elements.push(x);
            }
        }
        SubgroupHandle::from_parts(elements, seeds_dedup, n)
    }

    /// The whole group as a handle.
    pub fn full_subgroup(&self) -> SubgroupHandle {
        let elements: Vec<usize> = (0..self.order()).collect();
        SubgroupHandle::from_parts(elements.clone(), elements, self.order())
    }

    pub fn trivial_subgroup(&self) -> SubgroupHandle {
        SubgroupHandle::from_parts(vec![0], vec![], self.order())
    }

    /// True iff some element of `sub` has order equal to `|sub|`.
    pub fn is_cyclic_subgroup(&self, sub: &SubgroupHandle) -> bool {
        let target = sub.order();
        sub.elements()
            .iter()
            .any(|&h| self.element_order(h) == target)
    }

    pub fn is_cyclic(&self) -> bool {
        self.is_cyclic_subgroup(&self.full_subgroup())
    }

    /// Pointwise centralizer of a set, by full scan.
    pub fn centralizer(&self, set: &[usize]) -> Result<SubgroupHandle, GroupError> {
        for &s in set {
            self.check_element(s)?;
        }
        let elements: Vec<usize> = (0..self.order())
            .filter(|&g| set.iter().all(|&s| self.mul(g, s) == self.mul(s, g)))
            .collect();
        Ok(SubgroupHandle::from_parts(
            elements.clone(),
            elements,
            self.order(),
        ))
    }

    /// The center `Z(G)`.
    pub fn center(&self) -> SubgroupHandle {
        let all: Vec<usize> = (0..self.order()).collect();
        self.centralizer(&all).expect("indices in range")
    }

    /// Setwise normalizer of a subgroup, by full scan.
    pub fn normalizer(&self, sub: &SubgroupHandle) -> SubgroupHandle {
        let mask = sub.member_mask();
        let elements: Vec<usize> = (0..self.order())
            .filter(|&g| sub.elements().iter().all(|&h| mask[self.conjugate(h, g)]))
            .collect();
        SubgroupHandle::from_parts(elements.clone(), elements, self.order())
    }

    pub fn is_normal(&self, sub: &SubgroupHandle) -> bool {
        let mask = sub.member_mask();
        (0..self.order())
            .all(|g| sub.elements().iter().all(|&h| mask[self.conjugate(h, g)]))
    }

    /// Verifies the subgroup axioms on a handle; used by tests and by
    /// ingestion paths that construct handles from raw element sets.
    pub fn verify_subgroup(&self, sub: &SubgroupHandle) -> bool {
        if !sub.contains(0) {
            return false;
        }
        if self.order() % sub.order() != 0 {
            return false;
        }
        let mask = sub.member_mask();
        sub.elements().iter().all(|&x| {
            mask[self.inv(x)] && sub.elements().iter().all(|&y| mask[self.mul(x, y)])
        })
    }

    /// Materialises a subgroup as a standalone group table. Returns the
    /// table and the map from new indices to parent indices (which is
    /// just the sorted element list, so new index 0 is the identity).
    pub fn subgroup_table(&self, sub: &SubgroupHandle) -> (GroupTable, Vec<usize>) {
        let elems = sub.elements().to_vec();
        let m = elems.len();
        let mut pos = vec![usize::MAX; self.order()];
        for (i, &e) in elems.iter().enumerate() {
            pos[e] = i;
        }
        let mut mul = vec![0u32; m * m];
        for i in 0..m {
            for j in 0..m {
                mul[i * m + j] = pos[self.mul(elems[i], elems[j])] as u32;
            }
        }
        let mut inv = vec![0u32; m];
        for i in 0..m {
            inv[i] = pos[self.inv(elems[i])] as u32;
        }
        let labels = self
            .label(0)
            .map(|_| elems.iter().map(|&e| self.label(e).unwrap().to_string()).collect());
        let table = GroupTable {
            order: m,
            mul,
            inv,
            labels,
        };
        (table, elems)
    }

    /// Lifts a handle on a subgroup table back to parent indices.
    pub fn lift_handle(
        &self,
        inner: &SubgroupHandle,
        embedding: &[usize],
    ) -> SubgroupHandle {
        let elements: Vec<usize> = inner.elements().iter().map(|&i| embedding[i]).collect();
        let generators: Vec<usize> = inner.generators().iter().map(|&i| embedding[i]).collect();
        SubgroupHandle::from_parts(elements, generators, self.order())
    }
}
