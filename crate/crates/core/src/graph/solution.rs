use std::collections::BTreeSet;

use super::{components, Instance, Pair};

/// An edit certificate: edges to delete and vertex pairs to add.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct EditSolution {
    pub deletions: BTreeSet<Pair>,
    pub additions: BTreeSet<Pair>,
}

impl EditSolution {
    pub fn new(deletions: BTreeSet<Pair>, additions: BTreeSet<Pair>) -> Self {
        EditSolution { deletions, additions }
    }

    pub fn is_empty(&self) -> bool {
        self.deletions.is_empty() && self.additions.is_empty()
    }

    /// Completes a deletion set to a full certificate: every non-adjacent pair
    /// inside a component of `G - D` becomes an addition.
    ///
    /// Only checks that the removed pairs are edges of `inst`; whether the
    /// result respects the budgets is left to the verifier.
    pub fn from_deletions(inst: &Instance, deletions: BTreeSet<Pair>) -> Result<Self, String> {
        let mut rest = inst.clone();
        for p in &deletions {
            rest.remove_edge(p.first(), p.second())
                .map_err(|_| format!("deletion {p} is not an edge of the instance"))?;
        }
        let mut additions = BTreeSet::new();
        for comp in components(&rest) {
            if comp.iter().all(|&v| rest.degree(v) + 1 == comp.len()) {
                continue;
            }
            if let Some(&v) = comp.iter().find(|&&v| rest.degree(v) + 2 < comp.len()) {
                return Err(format!(
                    "vertex {v} misses more than one pair inside its component of G - D"
                ));
            }
            for (i, &u) in comp.iter().enumerate() {
                for &v in &comp[i + 1..] {
                    if !rest.has_edge(u, v) {
                        additions.insert(Pair::new(u, v));
                    }
                }
            }
        }
        Ok(EditSolution { deletions, additions })
    }
}
