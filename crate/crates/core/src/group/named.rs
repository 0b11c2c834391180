//! Standard presentations of the finite Coxeter types.

use std::fmt;
use std::str::FromStr;

use super::{reflection, Reflection};
use crate::algebra::{BilinearSpace, Field, Matrix, Rational, Scalar, Vector};
use crate::error::{Error, Result};

/// A finite Coxeter type with its rank (and, for `I₂`, the dihedral parameter).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CoxeterType {
    A(usize),
    B(usize),
    C(usize),
    D(usize),
    F4,
    G2,
    H3,
    H4,
    /// Dihedral group of order `2m`.
    I2(u32),
}

/// Dihedral parameters whose Gram matrix fits in ℚ or one quadratic field.
pub const SUPPORTED_DIHEDRAL: [u32; 8] = [2, 3, 4, 5, 6, 8, 10, 12];

impl CoxeterType {
    /// Resolves a `(type, rank)` pair such as `("B", 3)` or `("I2(5)", 2)`.
    pub fn from_parts(ty: &str, rank: usize) -> Result<Self> {
        let bad = || Error::UnknownType(format!("{ty}{rank}"));
        let t = ty.trim();
        if let Some(m) = t
            .strip_prefix("I2(")
            .or_else(|| t.strip_prefix("I("))
            .and_then(|r| r.strip_suffix(')'))
        {
            let m: u32 = m.trim().parse().map_err(|_| bad())?;
            if rank != 2 || !SUPPORTED_DIHEDRAL.contains(&m) {
                return Err(Error::UnknownType(format!("I2({m}) at rank {rank}")));
            }
            return Ok(CoxeterType::I2(m));
        }
        let ct = match (t, rank) {
            ("A", n) if n >= 1 => CoxeterType::A(n),
            ("B", n) if n >= 2 => CoxeterType::B(n),
            ("C", n) if n >= 2 => CoxeterType::C(n),
            ("D", n) if n >= 2 => CoxeterType::D(n),
            ("F", 4) => CoxeterType::F4,
            ("G", 2) => CoxeterType::G2,
            ("H", 3) => CoxeterType::H3,
            ("H", 4) => CoxeterType::H4,
            _ => return Err(bad()),
        };
        Ok(ct)
    }

    pub fn rank(self) -> usize {
        match self {
            CoxeterType::A(n) | CoxeterType::B(n) | CoxeterType::C(n) | CoxeterType::D(n) => n,
            CoxeterType::F4 | CoxeterType::H4 => 4,
            CoxeterType::H3 => 3,
            CoxeterType::G2 | CoxeterType::I2(_) => 2,
        }
    }

    /// Letter part as used in group specs (`"A"`, …, `"I2(5)"`).
    pub fn type_name(self) -> String {
        match self {
            CoxeterType::A(_) => "A".into(),
            CoxeterType::B(_) => "B".into(),
            CoxeterType::C(_) => "C".into(),
            CoxeterType::D(_) => "D".into(),
            CoxeterType::F4 => "F".into(),
            CoxeterType::G2 => "G".into(),
            CoxeterType::H3 | CoxeterType::H4 => "H".into(),
            CoxeterType::I2(m) => format!("I2({m})"),
        }
    }
}

impl fmt::Display for CoxeterType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoxeterType::I2(m) => write!(f, "I2({m})"),
            other => write!(f, "{}{}", other.type_name(), other.rank()),
        }
    }
}

impl FromStr for CoxeterType {
    type Err = Error;

    /// Parses compact names such as `A3`, `F4` or `I2(8)`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.starts_with("I2(") || s.starts_with("I(") {
            return Self::from_parts(s, 2);
        }
        let split = s
            .find(|c: char| c.is_ascii_digit())
            .ok_or_else(|| Error::UnknownType(s.to_string()))?;
        let rank = s[split..]
            .parse()
            .map_err(|_| Error::UnknownType(s.to_string()))?;
        Self::from_parts(&s[..split], rank)
    }
}

fn q(n: i64) -> Scalar {
    Scalar::from_int(n)
}

fn quad(a: (i64, i64), b: (i64, i64), d: u32) -> Scalar {
    Scalar::quadratic(Rational::new(a.0, a.1), Rational::new(b.0, b.1), d)
}

/// Gram matrix in the simple-root basis with `b(αᵢ,αᵢ) = 2` and
/// `b(αᵢ,αⱼ) = off[(i,j)]`.
fn root_basis_gram(n: usize, off: &[(usize, usize, Scalar)]) -> Matrix {
    let mut g = Matrix::identity(n).scale(&q(2));
    for (i, j, x) in off {
        g[(*i, *j)] = x.clone();
        g[(*j, *i)] = x.clone();
    }
    g
}

fn build(
    field: Field,
    gram: Matrix,
    roots: Vec<Vector>,
) -> Result<(BilinearSpace, Vec<Reflection>)> {
    let space = BilinearSpace::new(field, gram)?;
    let gens = roots
        .iter()
        .map(|r| reflection(&space, r))
        .collect::<Result<Vec<_>>>()?;
    Ok((space, gens))
}

fn basis(n: usize) -> Vec<Vector> {
    (0..n).map(|i| Vector::unit(n, i)).collect()
}

/// `e_i - e_{i+1}` for `i < n - 1`, in ℚⁿ.
fn chain(n: usize) -> Vec<Vector> {
    (0..n - 1)
        .map(|i| {
            let mut v = Vector::zeros(n);
            v.0[i] = q(1);
            v.0[i + 1] = q(-1);
            v
        })
        .collect()
}

/// The space and simple reflections of a finite Coxeter type.
///
/// `A`, `G₂`, `H₃`, `H₄` and `I₂(m)` are realized in the simple-root basis
/// with the Gram matrix of the Euclidean inner product in that basis; `B`,
/// `C`, `D` and `F₄` use the orthonormal basis of ℚⁿ. `H` types and some
/// dihedral groups need ℚ(√5), ℚ(√2) or ℚ(√3).
pub fn named_weyl(ty: CoxeterType) -> Result<(BilinearSpace, Vec<Reflection>)> {
    match ty {
        CoxeterType::A(n) => {
            let off: Vec<_> = (0..n.saturating_sub(1))
                .map(|i| (i, i + 1, q(-1)))
                .collect();
            build(Field::Rationals, root_basis_gram(n, &off), basis(n))
        }
        CoxeterType::B(n) | CoxeterType::C(n) | CoxeterType::D(n) => {
            let mut roots = chain(n);
            let mut last = Vector::zeros(n);
            match ty {
                CoxeterType::B(_) => last.0[n - 1] = q(1),
                CoxeterType::C(_) => last.0[n - 1] = q(2),
                _ => {
                    last.0[n - 2] = q(1);
                    last.0[n - 1] = q(1);
                }
            }
            roots.push(last);
            build(Field::Rationals, Matrix::identity(n), roots)
        }
        CoxeterType::F4 => {
            let mut roots = chain(4)[1..].to_vec();
            roots.push(Vector::unit(4, 3));
            roots.push(Vector(vec![
                Scalar::frac(1, 2),
                Scalar::frac(-1, 2),
                Scalar::frac(-1, 2),
                Scalar::frac(-1, 2),
            ]));
            build(Field::Rationals, Matrix::identity(4), roots)
        }
        CoxeterType::G2 => build(
            Field::Rationals,
            Matrix::from_int_rows(&[&[2, -3], &[-3, 6]]),
            basis(2),
        ),
        CoxeterType::H3 | CoxeterType::H4 => {
            let n = ty.rank();
            let neg_phi = quad((-1, 2), (-1, 2), 5);
            let mut off = vec![(0, 1, neg_phi)];
            off.extend((1..n - 1).map(|i| (i, i + 1, q(-1))));
            build(Field::Quadratic(5), root_basis_gram(n, &off), basis(n))
        }
        CoxeterType::I2(m) => dihedral(m),
    }
}

/// `I₂(m)`: two simple roots at angle `π - π/m`.
///
/// For `m` = 3, 5 both roots have the same length; otherwise the second root
/// is rescaled so the Gram matrix stays in a quadratic field:
/// `b(α₁,α₁) = 2`, `b(α₁,α₂) = -2`, `b(α₂,α₂) = 4 / (1 + cos(2π/m))`.
fn dihedral(m: u32) -> Result<(BilinearSpace, Vec<Reflection>)> {
    let (field, gram) = match m {
        2 => (Field::Rationals, Matrix::identity(2).scale(&q(2))),
        3 => (
            Field::Rationals,
            Matrix::from_int_rows(&[&[2, -1], &[-1, 2]]),
        ),
        5 => (
            Field::Quadratic(5),
            root_basis_gram(2, &[(0, 1, quad((-1, 2), (-1, 2), 5))]),
        ),
        4 | 6 | 8 | 10 | 12 => {
            // cos(2π/m)
            let (field, cos) = match m {
                4 => (Field::Rationals, q(0)),
                6 => (Field::Rationals, Scalar::frac(1, 2)),
                8 => (Field::Quadratic(2), quad((0, 1), (1, 2), 2)),
                10 => (Field::Quadratic(5), quad((1, 4), (1, 4), 5)),
                _ => (Field::Quadratic(3), quad((0, 1), (1, 2), 3)),
            };
            let long = &q(4) / &(&q(1) + &cos);
            let gram = Matrix::from_rows(vec![vec![q(2), q(-2)], vec![q(-2), long]]);
            (field, gram)
        }
        _ => return Err(Error::UnknownType(format!("I2({m})"))),
    };
    build(field, gram, basis(2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::close_group;

    fn order(ty: CoxeterType) -> (usize, usize) {
        let (space, gens) = named_weyl(ty).unwrap();
        let w = close_group(&space, &gens, 100_000).unwrap();
        (w.order(), w.reflections().len())
    }

    #[test]
    fn small_orders() {
        assert_eq!(order(CoxeterType::A(1)), (2, 1));
        assert_eq!(order(CoxeterType::A(2)), (6, 3));
        assert_eq!(order(CoxeterType::B(3)), (48, 9));
        assert_eq!(order(CoxeterType::C(3)), (48, 9));
        assert_eq!(order(CoxeterType::D(4)), (192, 12));
        assert_eq!(order(CoxeterType::G2), (12, 6));
        assert_eq!(order(CoxeterType::H3), (120, 15));
    }

    #[test]
    fn dihedral_orders() {
        for m in SUPPORTED_DIHEDRAL {
            assert_eq!(
                order(CoxeterType::I2(m)),
                (2 * m as usize, m as usize),
                "m = {m}"
            );
        }
    }

    #[test]
    fn parsing() {
        assert_eq!("A3".parse::<CoxeterType>().unwrap(), CoxeterType::A(3));
        assert_eq!("I2(8)".parse::<CoxeterType>().unwrap(), CoxeterType::I2(8));
        assert_eq!(CoxeterType::from_parts("H", 4).unwrap(), CoxeterType::H4);
        assert!(matches!(
            CoxeterType::from_parts("E", 6),
            Err(Error::UnknownType(_))
        ));
        assert!(matches!(
            CoxeterType::from_parts("F", 3),
            Err(Error::UnknownType(_))
        ));
        assert!(matches!(
            CoxeterType::from_parts("I2(7)", 2),
            Err(Error::UnknownType(_))
        ));
        assert!(matches!(
            CoxeterType::from_parts("A", 0),
            Err(Error::UnknownType(_))
        ));
        for ty in [CoxeterType::B(3), CoxeterType::I2(5), CoxeterType::F4] {
            assert_eq!(ty.to_string().parse::<CoxeterType>().unwrap(), ty);
        }
    }
}
