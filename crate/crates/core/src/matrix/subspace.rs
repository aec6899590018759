use super::Matrix;
use crate::error::{dim_err, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SubspaceKind {
    Image,
    Kernel,
}

/// `im(generator)` or `ker(generator)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubspaceDescriptor {
    pub kind: SubspaceKind,
    pub generator: Matrix,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SubspaceRelation {
    /// `p ⊇ q`
    Contains,
    Equals,
}

impl SubspaceDescriptor {
    pub fn image(generator: Matrix) -> Self {
        SubspaceDescriptor {
            kind: SubspaceKind::Image,
            generator,
        }
    }

    pub fn kernel(generator: Matrix) -> Self {
        SubspaceDescriptor {
            kind: SubspaceKind::Kernel,
            generator,
        }
    }

    /// Dimension of the space the subspace lives in.
    pub fn ambient_dim(&self) -> usize {
        match self.kind {
            SubspaceKind::Image => self.generator.rows(),
            SubspaceKind::Kernel => self.generator.cols(),
        }
    }

    /// A matrix whose column space is this subspace.
    pub fn spanning_matrix(&self) -> Matrix {
        match self.kind {
            SubspaceKind::Image => self.generator.clone(),
            SubspaceKind::Kernel => self.generator.nullspace_matrix(),
        }
    }

    pub fn dim(&self) -> usize {
        match self.kind {
            SubspaceKind::Image => self.generator.rank(),
            SubspaceKind::Kernel => self.generator.cols() - self.generator.rank(),
        }
    }
}

/// `im(u) ⊆ im(v)` iff `rank([v | u]) = rank(v)`.
fn image_contains(v: &Matrix, u: &Matrix) -> bool {
    v.hstack(u).expect("same ambient dimension").rank() == v.rank()
}

pub fn subspace_relate(p: &SubspaceDescriptor, q: &SubspaceDescriptor, relation: SubspaceRelation) -> Result<bool> {
    if p.ambient_dim() != q.ambient_dim() {
        return Err(dim_err(format!(
            "subspaces of dimension-{} and dimension-{} spaces",
            p.ambient_dim(),
            q.ambient_dim()
        )));
    }
    let (pm, qm) = (p.spanning_matrix(), q.spanning_matrix());
    Ok(match relation {
        SubspaceRelation::Contains => image_contains(&pm, &qm),
        SubspaceRelation::Equals => image_contains(&pm, &qm) && image_contains(&qm, &pm),
    })
}
