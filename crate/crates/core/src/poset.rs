//! Finite posets and their order complexes.

use thiserror::Error;

use crate::complex::SimplicialComplex;
use crate::label::Label;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum PosetError {
    #[error("relation is not reflexive at {0}")]
    NotReflexive(Label),
    #[error("relation is not antisymmetric on {0} and {1}")]
    NotAntisymmetric(Label, Label),
    #[error("relation is not transitive on {0}, {1}, {2}")]
    NotTransitive(Label, Label, Label),
    #[error("duplicate element {0}")]
    DuplicateElement(Label),
    #[error("unknown element {0}")]
    UnknownElement(Label),
}

/// A finite partial order on labelled elements, stored as a full `≤` table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinitePoset {
    labels: Vec<Label>,
    leq: Vec<Vec<bool>>,
    upper_covers: Vec<Vec<usize>>,
    lower_covers: Vec<Vec<usize>>,
}

impl FinitePoset {
    /// Builds a poset from an order predicate, checking the order axioms.
    pub fn from_leq(
        labels: Vec<Label>,
        leq: impl Fn(usize, usize) -> bool,
    ) -> Result<Self, PosetError> {
        let n = labels.len();
        for i in 0..n {
            if labels[..i].contains(&labels[i]) {
                return Err(PosetError::DuplicateElement(labels[i].clone()));
            }
        }
        let table: Vec<Vec<bool>> = (0..n).map(|a| (0..n).map(|b| leq(a, b)).collect()).collect();
        for a in 0..n {
            if !table[a][a] {
                return Err(PosetError::NotReflexive(labels[a].clone()));
            }
            for b in 0..n {
                if a != b && table[a][b] && table[b][a] {
                    return Err(PosetError::NotAntisymmetric(labels[a].clone(), labels[b].clone()));
                }
                if !table[a][b] {
                    continue;
                }
                for c in 0..n {
                    if table[b][c] && !table[a][c] {
                        return Err(PosetError::NotTransitive(
                            labels[a].clone(),
                            labels[b].clone(),
                            labels[c].clone(),
                        ));
                    }
                }
            }
        }
        Ok(Self::from_table(labels, table))
    }

    /// Builds the poset generated by `a ≤ b` for each given pair (reflexive-transitive closure).
    pub fn from_relations(labels: Vec<Label>, pairs: &[(Label, Label)]) -> Result<Self, PosetError> {
        let n = labels.len();
        let pos = |l: &Label| {
            labels
                .iter()
                .position(|x| x == l)
                .ok_or_else(|| PosetError::UnknownElement(l.clone()))
        };
        let mut table = vec![vec![false; n]; n];
        for (i, row) in table.iter_mut().enumerate() {
            row[i] = true;
        }
        for (a, b) in pairs {
            let (a, b) = (pos(a)?, pos(b)?);
            table[a][b] = true;
        }
        for k in 0..n {
            for i in 0..n {
                if table[i][k] {
                    for j in 0..n {
                        if table[k][j] {
                            table[i][j] = true;
                        }
                    }
                }
            }
        }
        Self::from_leq(labels, |a, b| table[a][b])
    }

    fn from_table(labels: Vec<Label>, leq: Vec<Vec<bool>>) -> Self {
        let n = labels.len();
        let lt = |a: usize, b: usize| a != b && leq[a][b];
        let mut upper_covers = vec![Vec::new(); n];
        let mut lower_covers = vec![Vec::new(); n];
        for a in 0..n {
            for b in 0..n {
                if lt(a, b) && !(0..n).any(|c| lt(a, c) && lt(c, b)) {
                    upper_covers[a].push(b);
                    lower_covers[b].push(a);
                }
            }
        }
        FinitePoset {
            labels,
            leq,
            upper_covers,
            lower_covers,
        }
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &Label {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &Label) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a][b]
    }

    pub fn lt(&self, a: usize, b: usize) -> bool {
        a != b && self.leq[a][b]
    }

    pub fn upper_covers(&self, a: usize) -> &[usize] {
        &self.upper_covers[a]
    }

    pub fn lower_covers(&self, a: usize) -> &[usize] {
        &self.lower_covers[a]
    }

    pub fn up_set(&self, a: usize) -> Vec<usize> {
        (0..self.len()).filter(|&b| self.leq[a][b]).collect()
    }

    pub fn down_set(&self, a: usize) -> Vec<usize> {
        (0..self.len()).filter(|&b| self.leq[b][a]).collect()
    }

    pub fn minimal_elements(&self) -> Vec<usize> {
        (0..self.len()).filter(|&a| self.lower_covers[a].is_empty()).collect()
    }

    pub fn maximal_elements(&self) -> Vec<usize> {
        (0..self.len()).filter(|&a| self.upper_covers[a].is_empty()).collect()
    }

    /// Number of elements in the longest chain ending at `a`, minus one.
    pub fn height(&self, a: usize) -> usize {
        self.lower_covers[a]
            .iter()
            .map(|&b| self.height(b) + 1)
            .max()
            .unwrap_or(0)
    }

    /// The induced subposet on `subset` (in the given order).
    pub fn induced(&self, subset: &[usize]) -> FinitePoset {
        let labels = subset.iter().map(|&i| self.labels[i].clone()).collect();
        let table = subset
            .iter()
            .map(|&a| subset.iter().map(|&b| self.leq[a][b]).collect())
            .collect();
        Self::from_table(labels, table)
    }

    /// All maximal chains, each listed bottom to top.
    pub fn maximal_chains(&self) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut stack = Vec::new();
        for m in self.minimal_elements() {
            stack.push(m);
            self.extend_chains(&mut stack, &mut out);
            stack.pop();
        }
        out
    }

    fn extend_chains(&self, stack: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let top = *stack.last().expect("nonempty chain");
        if self.upper_covers[top].is_empty() {
            out.push(stack.clone());
            return;
        }
        for &next in &self.upper_covers[top] {
            stack.push(next);
            self.extend_chains(stack, out);
            stack.pop();
        }
    }

    /// The simplicial complex of chains; its vertices are the element labels.
    pub fn order_complex(&self) -> SimplicialComplex {
        let facets = self
            .maximal_chains()
            .into_iter()
            .map(|c| c.into_iter().map(|i| i as u32).collect())
            .collect();
        SimplicialComplex::from_indexed_facets(self.labels.clone(), facets)
            .expect("chain indices are in range")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn labels(n: i64) -> Vec<Label> {
        (0..n).map(Label::Int).collect()
    }

    #[test]
    fn chain_order_complex_is_simplex() {
        let p = FinitePoset::from_leq(labels(3), |a, b| a <= b).unwrap();
        let k = p.order_complex();
        assert_eq!(k.facets().len(), 1);
        assert_eq!(k.dim(), 2);
    }

    #[test]
    fn antichain_order_complex_is_points() {
        let p = FinitePoset::from_leq(labels(4), |a, b| a == b).unwrap();
        let k = p.order_complex();
        assert_eq!(k.facets().len(), 4);
        assert_eq!(k.dim(), 0);
    }

    #[test]
    fn rejects_non_orders() {
        assert!(matches!(
            FinitePoset::from_leq(labels(2), |_, _| true),
            Err(PosetError::NotAntisymmetric(..))
        ));
        assert!(matches!(
            FinitePoset::from_leq(labels(2), |a, b| a < b),
            Err(PosetError::NotReflexive(_))
        ));
        assert!(matches!(
            FinitePoset::from_leq(labels(3), |a, b| a == b || (a, b) == (0, 1) || (a, b) == (1, 2)),
            Err(PosetError::NotTransitive(..))
        ));
    }

    #[test]
    fn relations_closure_and_covers() {
        let l = labels(3);
        let p = FinitePoset::from_relations(
            l.clone(),
            &[(l[0].clone(), l[1].clone()), (l[1].clone(), l[2].clone())],
        )
        .unwrap();
        assert!(p.leq(0, 2));
        assert_eq!(p.upper_covers(0), &[1]);
        assert_eq!(p.height(2), 2);
        assert_eq!(p.maximal_chains(), vec![vec![0, 1, 2]]);
    }
}
