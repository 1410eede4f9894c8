use std::collections::HashMap;

use super::root_system::{Matrix, RootSystem};
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::linalg::DenseMatrix;
use crate::numfield::NfElem;

/// A group element as a matrix together with its Coxeter length.
#[derive(Clone, Debug, PartialEq)]
pub struct GroupElement {
    pub matrix: Matrix,
    pub length: usize,
}

/// All elements of a finite reflection group (or subgroup), identity first.
#[derive(Clone, Debug)]
pub struct GroupElementSet {
    elements: Vec<GroupElement>,
    index: HashMap<Vec<NfElem>, usize>,
}

fn key(m: &Matrix) -> Vec<NfElem> {
    m.to_rows().into_iter().flatten().collect()
}

/// Number of positive roots sent to negative roots.
pub fn coxeter_length(rs: &RootSystem, w: &Matrix) -> usize {
    rs.positive_roots().iter().filter(|b| !rs.is_positive_root_vector(&w.mul_vec(b).unwrap())).count()
}

impl GroupElementSet {
    /// Closure of `generators` under multiplication; lengths are measured in `rs`.
    pub fn generate(rs: &RootSystem, generators: &[Matrix], limit: u64, budget: &Budget) -> Result<Self> {
        let id = DenseMatrix::identity(rs.dim());
        let mut elements = vec![GroupElement { matrix: id.clone(), length: 0 }];
        let mut index = HashMap::new();
        index.insert(key(&id), 0);
        let mut head = 0;
        while head < elements.len() {
            budget.check("group enumeration")?;
            let g = elements[head].matrix.clone();
            head += 1;
            for s in generators {
                let h = s.mul(&g)?;
                let k = key(&h);
                if let std::collections::hash_map::Entry::Vacant(e) = index.entry(k) {
                    if elements.len() as u64 >= limit {
                        return Err(Error::BudgetExceeded(format!("group has more than {limit} elements")));
                    }
                    let length = coxeter_length(rs, &h);
                    e.insert(elements.len());
                    elements.push(GroupElement { matrix: h, length });
                }
            }
        }
        Ok(GroupElementSet { elements, index })
    }

    /// The whole group `W`.
    pub fn enumerate(rs: &RootSystem, budget: &Budget) -> Result<Self> {
        let limit = super::types::MAX_GROUP_ORDER;
        if rs.order() > limit {
            return Err(Error::BudgetExceeded(format!("group order {} exceeds {limit}", rs.order())));
        }
        Self::generate(rs, rs.simple_reflections(), limit, budget)
    }

    pub fn elements(&self) -> &[GroupElement] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, m: &Matrix) -> bool {
        self.index.contains_key(&key(m))
    }

    pub fn position(&self, m: &Matrix) -> Option<usize> {
        self.index.get(&key(m)).copied()
    }

    pub fn max_length(&self) -> usize {
        self.elements.iter().map(|e| e.length).max().unwrap_or(0)
    }

    /// `#{w : l(w) = d}` for `d = 0..=max_length`.
    pub fn length_profile(&self) -> Vec<usize> {
        let mut p = vec![0; self.max_length() + 1];
        for e in &self.elements {
            p[e.length] += 1;
        }
        p
    }

    /// The unique element of maximal length.
    pub fn longest(&self) -> &GroupElement {
        self.elements.iter().max_by_key(|e| e.length).unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::types::{CoxeterType, Family};

    fn group(f: Family) -> (RootSystem, GroupElementSet) {
        let rs = RootSystem::build(&CoxeterType::irreducible(f).unwrap()).unwrap();
        let g = GroupElementSet::enumerate(&rs, &Budget::unlimited()).unwrap();
        (rs, g)
    }

    #[test]
    fn length_profiles_match_poincare() {
        for f in [Family::A(2), Family::A(3), Family::B(3), Family::I2(5), Family::I2(8), Family::H3] {
            let (rs, g) = group(f);
            assert_eq!(g.len() as u64, f.order(), "{f}");
            assert_eq!(g.length_profile(), rs.poincare_polynomial(), "{f}");
            assert_eq!(g.max_length(), f.reflection_count());
        }
    }

    #[test]
    fn lengths_agree_with_word_length() {
        // Breadth-first discovery from the identity by simple reflections gives word length.
        let (rs, g) = group(Family::B(3));
        let mut depth: HashMap<Vec<NfElem>, usize> = HashMap::new();
        let id = DenseMatrix::identity(rs.dim());
        depth.insert(key(&id), 0);
        let mut frontier = vec![id];
        let mut d = 0;
        while !frontier.is_empty() {
            d += 1;
            let mut next = Vec::new();
            for m in &frontier {
                for s in rs.simple_reflections() {
                    let h = s.mul(m).unwrap();
                    if let std::collections::hash_map::Entry::Vacant(e) = depth.entry(key(&h)) {
                        e.insert(d);
                        next.push(h);
                    }
                }
            }
            frontier = next;
        }
        for e in g.elements() {
            assert_eq!(depth[&key(&e.matrix)], e.length);
        }
    }
}
