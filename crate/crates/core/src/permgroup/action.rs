//! Actions induced on invariant families of cells, and their kernels.

use super::group::PermutationGroup;
use super::perm::Permutation;
use crate::error::{Error, Result};

/// Image of a group under its action on a family of cells, together with the
/// generator-by-generator correspondence.
#[derive(Clone, Debug)]
pub struct InducedAction {
    pub image: PermutationGroup,
    /// `(generator, induced permutation of cell indices)` for each generator.
    pub table: Vec<(Permutation, Permutation)>,
}

fn cell_index(degree: usize, cells: &[Vec<usize>]) -> Result<Vec<Option<usize>>> {
    if cells.is_empty() {
        return Err(Error::NotInvariant("no cells given".into()));
    }
    let mut owner = vec![None; degree];
    for (c, cell) in cells.iter().enumerate() {
        if cell.is_empty() {
            return Err(Error::NotInvariant(format!("cell {c} is empty")));
        }
        for &p in cell {
            if p >= degree {
                return Err(Error::PointOutOfRange { point: p, degree });
            }
            if owner[p].replace(c).is_some() {
                return Err(Error::NotInvariant(format!("point {p} lies in two cells")));
            }
        }
    }
    Ok(owner)
}

fn induced_permutation(
    g: &Permutation,
    cells: &[Vec<usize>],
    owner: &[Option<usize>],
    index: usize,
) -> Result<Permutation> {
    let mut images = Vec::with_capacity(cells.len());
    for (c, cell) in cells.iter().enumerate() {
        let target = owner[g.apply(cell[0])];
        let Some(t) = target else {
            return Err(Error::NotInvariant(format!("generator {index} maps cell {c} outside the cell family")));
        };
        if cells[t].len() != cell.len() || cell.iter().any(|&p| owner[g.apply(p)] != Some(t)) {
            return Err(Error::NotInvariant(format!("generator {index} splits cell {c}")));
        }
        images.push(t);
    }
    Permutation::from_images(images)
}

/// The permutation group induced on cell indices. Cells must be disjoint and
/// permuted setwise by every generator; they need not cover the domain.
pub fn induced_action(group: &PermutationGroup, cells: &[Vec<usize>]) -> Result<InducedAction> {
    let owner = cell_index(group.degree(), cells)?;
    let mut table = Vec::with_capacity(group.generators().len());
    for (i, g) in group.generators().iter().enumerate() {
        let induced = induced_permutation(g, cells, &owner, i)?;
        table.push((g.clone(), induced));
    }
    let image = PermutationGroup::new(cells.len(), table.iter().map(|(_, h)| h.clone()).collect())?;
    Ok(InducedAction { image, table })
}

/// Restriction of the action to an invariant subset; point `k` of the result
/// is `subset[k]`.
pub fn restrict(group: &PermutationGroup, subset: &[usize]) -> Result<PermutationGroup> {
    let cells: Vec<Vec<usize>> = subset.iter().map(|&p| vec![p]).collect();
    Ok(induced_action(group, &cells)?.image)
}

/// Subgroup acting trivially on the cell indices.
///
/// Computed as a pointwise stabilizer in the extended action on
/// `points ⊎ cell indices`, then restricted back to the original points.
pub fn kernel_of_action(group: &PermutationGroup, cells: &[Vec<usize>]) -> Result<PermutationGroup> {
    let action = induced_action(group, cells)?;
    let n = group.degree();
    let extended_degree = n + cells.len();
    let extended: Vec<Permutation> = action
        .table
        .iter()
        .map(|(g, h)| {
            let mut images = g.images().to_vec();
            images.extend(h.images().iter().map(|&c| n + c));
            Permutation::from_images(images).expect("disjoint union of bijections")
        })
        .collect();
    let big = PermutationGroup::new(extended_degree, extended)?;
    let aux: Vec<usize> = (n..extended_degree).collect();
    let stab = big.pointwise_stabilizer(&aux)?;
    let gens = stab
        .generators()
        .iter()
        .map(|g| Permutation::from_images(g.images()[..n].to_vec()).expect("restriction of a bijection"))
        .collect();
    PermutationGroup::new(n, gens)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn group(degree: usize, gens: &[&str]) -> PermutationGroup {
        PermutationGroup::new(degree, gens.iter().map(|s| Permutation::parse_cycles(degree, s).unwrap()).collect())
            .unwrap()
    }

    #[test]
    fn singletons_give_a_copy() {
        let g = group(4, &["(1 2)", "(1 2 3 4)"]);
        let cells: Vec<Vec<usize>> = (0..4).map(|i| vec![i]).collect();
        let a = induced_action(&g, &cells).unwrap();
        assert_eq!(a.image.order(), 24);
        assert_eq!(a.table[1].1, g.generators()[1]);
    }

    #[test]
    fn split_cell_is_rejected() {
        let g = group(4, &["(1 2)"]);
        let err = induced_action(&g, &[vec![0, 2], vec![1, 3]]).unwrap_err();
        assert!(matches!(err, Error::NotInvariant(_)));
    }

    #[test]
    fn single_covering_cell_kernel_is_everything() {
        let g = group(5, &["(1 2 3)", "(3 4 5)"]);
        let k = kernel_of_action(&g, &[(0..5).collect()]).unwrap();
        assert_eq!(k.order(), g.order());
    }

    #[test]
    fn restriction_to_invariant_subset() {
        let g = group(5, &["(1 2)(4 5)", "(1 2 3)"]);
        let r = restrict(&g, &[0, 1, 2]).unwrap();
        assert_eq!(r.degree(), 3);
        assert_eq!(r.order(), 6);
        assert!(restrict(&g, &[0, 3]).is_err());
    }
}
