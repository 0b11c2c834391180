use super::matrix::{Matrix, Vector};
use super::scalar::Scalar;
use crate::error::{Error, Result};

/// A linear subspace stored by its reduced row-echelon basis.
///
/// The basis is canonical, so two subspaces are equal iff their data is.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<Vector>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Self::span(
            ambient,
            &(0..ambient)
                .map(|i| Vector::unit(ambient, i))
                .collect::<Vec<_>>(),
        )
    }

    /// The span of `vectors`, in canonical form.
    pub fn span(ambient: usize, vectors: &[Vector]) -> Self {
        if vectors.is_empty() {
            return Self::zero(ambient);
        }
        let m = Matrix::from_rows(vectors.iter().map(|v| v.0.clone()).collect());
        let (r, pivots) = m.rref();
        Subspace {
            ambient,
            basis: (0..pivots.len()).map(|i| r.row_vector(i)).collect(),
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    /// Re-derives the canonical form; the identity on any constructed value.
    pub fn canonical(&self) -> Self {
        Self::span(self.ambient, &self.basis)
    }

    pub fn contains(&self, v: &Vector) -> bool {
        // Reduce v against the pivots of the echelon basis.
        let mut rest = v.clone();
        for b in &self.basis {
            let (p, _) = b.first_nonzero().expect("basis vectors are nonzero");
            if !rest[p].is_zero() {
                let c = rest[p].clone();
                rest = rest.sub(&b.scale(&c));
            }
        }
        rest.is_zero()
    }

    /// True iff every linear form in `coefficients` vanishes on the subspace.
    pub fn annihilated_by(&self, coefficients: &Vector) -> bool {
        self.basis.iter().all(|b| b.dot(coefficients).is_zero())
    }
}

/// Canonical basis of `{x : M·x = 0}`.
pub fn kernel(m: &Matrix) -> Subspace {
    let n = m.cols();
    let (r, pivots) = m.rref();
    let mut basis = Vec::new();
    for free in (0..n).filter(|c| !pivots.contains(c)) {
        let mut v = Vector::zeros(n);
        v.0[free] = Scalar::one();
        for (row, &p) in pivots.iter().enumerate() {
            v.0[p] = -&r[(row, free)];
        }
        basis.push(v);
    }
    Subspace::span(n, &basis)
}

/// True iff `u ⊆ h`.
pub fn subspace_leq(u: &Subspace, h: &Subspace) -> Result<bool> {
    if u.ambient != h.ambient {
        return Err(Error::Dimension {
            expected: h.ambient,
            found: u.ambient,
        });
    }
    Ok(u.dim() <= h.dim() && u.basis.iter().all(|b| h.contains(b)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn kernel_examples() {
        assert_eq!(kernel(&Matrix::identity(3)), Subspace::zero(3));
        assert_eq!(kernel(&Matrix::zeros(2, 2)), Subspace::full(2));
        // s_{e1} - id under the identity form is diag(-2, 0, 0)
        let mut m = Matrix::zeros(3, 3);
        m[(0, 0)] = Scalar::from_int(-2);
        let k = kernel(&m);
        assert_eq!(
            k,
            Subspace::span(3, &[Vector::unit(3, 1), Vector::unit(3, 2)])
        );
    }

    #[test]
    fn containment_examples() {
        let full = Subspace::full(2);
        let hyper = kernel(&Matrix::from_int_rows(&[&[1, 0]]));
        assert!(subspace_leq(&Subspace::zero(2), &hyper).unwrap());
        assert!(!subspace_leq(&full, &hyper).unwrap());
        let e2 = Subspace::span(2, &[Vector::unit(2, 1)]);
        assert!(subspace_leq(&e2, &hyper).unwrap());
        assert!(subspace_leq(&e2, &Subspace::zero(3)).is_err());
    }

    fn mat() -> impl Strategy<Value = Matrix> {
        (1usize..5, 1usize..5).prop_flat_map(|(r, c)| {
            proptest::collection::vec(-3i64..4, r * c).prop_map(move |xs| {
                Matrix::from_rows(
                    xs.chunks(c)
                        .map(|row| row.iter().map(|&x| Scalar::from_int(x)).collect())
                        .collect(),
                )
            })
        })
    }

    proptest! {
        #[test]
        fn rank_nullity(m in mat()) {
            let k = kernel(&m);
            prop_assert_eq!(k.dim() + m.rank(), m.cols());
            for b in k.basis() {
                prop_assert!(m.mul_vec(b).is_zero());
            }
        }

        #[test]
        fn canonical_is_idempotent(m in mat()) {
            let s = Subspace::span(m.cols(), &(0..m.rows()).map(|i| m.row_vector(i)).collect::<Vec<_>>());
            prop_assert_eq!(s.canonical(), s.clone());
            prop_assert_eq!(s.canonical().canonical(), s);
        }
    }
}
