use super::matrix::{Matrix, Vector};
use super::scalar::{Field, Scalar};
use crate::error::{Error, Result};

/// True iff the symmetric matrix `gram` has nonzero determinant.
pub fn is_regular(gram: &Matrix) -> Result<bool> {
    if !gram.is_symmetric() {
        return Err(Error::InvalidForm);
    }
    Ok(!gram.det().is_zero())
}

/// A finite-dimensional space with a regular symmetric bilinear form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BilinearSpace {
    field: Field,
    gram: Matrix,
    gram_inv: Matrix,
}

impl BilinearSpace {
    pub fn new(field: Field, gram: Matrix) -> Result<Self> {
        if !gram.is_square() || gram.rows() == 0 || !gram.is_symmetric() {
            return Err(Error::InvalidForm);
        }
        if let Some(x) = gram.entries().iter().find(|x| !field.contains(x)) {
            return Err(Error::FieldMismatch(format!("entry {x:?} not in {field}")));
        }
        let gram_inv = gram.inverse().ok_or(Error::SingularGram)?;
        Ok(BilinearSpace {
            field,
            gram,
            gram_inv,
        })
    }

    /// ℚⁿ with the standard dot product.
    pub fn euclidean(n: usize) -> Self {
        Self::new(Field::Rationals, Matrix::identity(n)).expect("identity form is regular")
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.gram.rows()
    }

    pub fn gram(&self) -> &Matrix {
        &self.gram
    }

    pub fn check_vector(&self, v: &Vector) -> Result<()> {
        if v.dim() != self.dim() {
            return Err(Error::Dimension {
                expected: self.dim(),
                found: v.dim(),
            });
        }
        if let Some(x) = v.iter().find(|x| !self.field.contains(x)) {
            return Err(Error::FieldMismatch(format!(
                "entry {x:?} not in {}",
                self.field
            )));
        }
        Ok(())
    }

    /// `vᵀ·gram·w`.
    pub fn evaluate_form(&self, v: &Vector, w: &Vector) -> Result<Scalar> {
        self.check_vector(v)?;
        self.check_vector(w)?;
        Ok(self.form(v, w))
    }

    /// Unchecked variant of [`Self::evaluate_form`].
    pub fn form(&self, v: &Vector, w: &Vector) -> Scalar {
        v.dot(&self.gram.mul_vec(w))
    }

    /// Coefficients of the linear form `v^∨ = b(-, v)`, i.e. `gram·v`.
    pub fn dual(&self, v: &Vector) -> Vector {
        self.gram.mul_vec(v)
    }

    /// The induced form on linear forms: `b^∨(f, g) = fᵀ·gram⁻¹·g`.
    pub fn dual_form(&self, f: &Vector, g: &Vector) -> Scalar {
        f.dot(&self.gram_inv.mul_vec(g))
    }

    pub fn gram_inverse(&self) -> &Matrix {
        &self.gram_inv
    }

    /// True iff `gᵀ·gram·g = gram`.
    pub fn is_orthogonal(&self, g: &Matrix) -> Result<bool> {
        if !g.is_square() || g.rows() != self.dim() {
            return Err(Error::Dimension {
                expected: self.dim(),
                found: g.rows(),
            });
        }
        Ok(g.transpose().mul(&self.gram).mul(g) == self.gram)
    }

    /// Inverse of an orthogonal map, `gram⁻¹·gᵀ·gram`.
    pub fn orthogonal_inverse(&self, g: &Matrix) -> Matrix {
        self.gram_inv.mul(&g.transpose()).mul(&self.gram)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn a2() -> BilinearSpace {
        BilinearSpace::new(
            Field::Rationals,
            Matrix::from_int_rows(&[&[2, -1], &[-1, 2]]),
        )
        .unwrap()
    }

    #[test]
    fn regularity() {
        assert!(is_regular(&Matrix::identity(2)).unwrap());
        assert!(!is_regular(&Matrix::zeros(2, 2)).unwrap());
        assert!(is_regular(&Matrix::from_int_rows(&[&[2, -1], &[-1, 2]])).unwrap());
        assert_eq!(
            is_regular(&Matrix::from_int_rows(&[&[1, 2], &[0, 1]])),
            Err(Error::InvalidForm)
        );
    }

    #[test]
    fn construction_errors() {
        let sing = Matrix::from_int_rows(&[&[1, 0], &[0, 0]]);
        assert_eq!(
            BilinearSpace::new(Field::Rationals, sing),
            Err(Error::SingularGram)
        );
        let asym = Matrix::from_int_rows(&[&[1, 1], &[0, 1]]);
        assert_eq!(
            BilinearSpace::new(Field::Rationals, asym),
            Err(Error::InvalidForm)
        );
        let surd = Matrix::from_rows(vec![vec![Scalar::sqrt_of(5)]]);
        assert!(matches!(
            BilinearSpace::new(Field::Rationals, surd),
            Err(Error::FieldMismatch(_))
        ));
    }

    #[test]
    fn evaluate_form_examples() {
        let e = BilinearSpace::euclidean(2);
        let e1 = Vector::unit(2, 0);
        let e2 = Vector::unit(2, 1);
        assert_eq!(e.evaluate_form(&e1, &e1).unwrap(), Scalar::one());
        assert_eq!(e.evaluate_form(&e1, &e2).unwrap(), Scalar::zero());
        assert_eq!(a2().evaluate_form(&e1, &e1).unwrap(), Scalar::from_int(2));
        assert_eq!(
            e.evaluate_form(&e1, &Vector::unit(3, 0)),
            Err(Error::Dimension {
                expected: 2,
                found: 3
            })
        );
    }

    fn vec3() -> impl Strategy<Value = Vector> {
        proptest::collection::vec(-20i64..20, 3).prop_map(|v| Vector::from_ints(&v))
    }

    proptest! {
        #[test]
        fn form_is_symmetric_and_dual_is_isometric(v in vec3(), w in vec3()) {
            let s = BilinearSpace::new(
                Field::Rationals,
                Matrix::from_int_rows(&[&[2, -1, 0], &[-1, 2, -1], &[0, -1, 3]]),
            ).unwrap();
            prop_assert_eq!(s.form(&v, &w), s.form(&w, &v));
            prop_assert_eq!(s.dual_form(&s.dual(&v), &s.dual(&w)), s.form(&v, &w));
        }
    }
}
