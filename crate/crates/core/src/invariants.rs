//! Molien series, degrees of basic invariants and the Reynolds operator.
//!
//! A reflection group in characteristic zero has a polynomial ring of
//! invariants, so its Molien series is `1/∏(1 − t^{dᵢ})`. The degrees are
//! peeled off the power series greedily and then certified by an exact
//! identity of rational functions.

use std::collections::HashMap;

use crate::algebra::{Matrix, Monomial, Polynomial, Rational, Scalar, UniPoly};
use crate::check::Check;
use crate::error::{Error, Result};
use crate::group::{conjugacy_classes, ReflectionGroup};
use crate::roots::{g_delta, RootSystem};

/// Upper bound for [`default_expansion_degree`].
pub const MAX_DEFAULT_EXPANSION: usize = 512;

/// Largest `|Δ|` for which `g_Δ` is also expanded and substituted term by term.
pub const EXPANDED_G_DELTA_LIMIT: usize = 12;

/// The Molien series `(1/|W|)·Σ_w 1/det(id − t·w)` of a group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MolienData {
    /// Reduced numerator; with the denominator normalized to `D(0) = 1`.
    pub numerator: UniPoly,
    pub denominator: UniPoly,
    /// Power-series coefficients of `t⁰ … t^expansion_degree`.
    pub coefficients: Vec<Scalar>,
}

impl MolienData {
    pub fn expansion_degree(&self) -> usize {
        self.coefficients.len() - 1
    }
}

/// `min(max(2·dim·(|R_W| + 1), |W|), 512)`: twice a bound on the largest
/// degree (which is at most `|R_W| + 1`), at least `|W|`, capped.
pub fn default_expansion_degree(w: &ReflectionGroup) -> usize {
    (2 * w.dim() * (w.reflections().len() + 1))
        .max(w.order())
        .min(MAX_DEFAULT_EXPANSION)
}

/// Exact Molien series of `w`, expanded to `t^expansion_degree`.
///
/// `det(id − t·w)` is a class function, so it is computed once per
/// conjugacy class.
pub fn molien_series(w: &ReflectionGroup, expansion_degree: usize) -> Result<MolienData> {
    if expansion_degree < 1 {
        return Err(Error::InsufficientExpansion {
            degree: expansion_degree,
        });
    }
    let all: Vec<usize> = (0..w.order()).collect();
    let classes = conjugacy_classes(w, &all)?;
    let mut multiplicity: HashMap<UniPoly, usize> = HashMap::new();
    for class in &classes {
        let p = UniPoly::new(w.element(class[0]).matrix().reversed_charpoly());
        *multiplicity.entry(p).or_default() += class.len();
    }
    let mut terms: Vec<(UniPoly, usize)> = multiplicity.into_iter().collect();
    terms.sort_by(|a, b| a.0.coeffs().cmp(b.0.coeffs()).then(a.1.cmp(&b.1)));

    let mut num = UniPoly::zero();
    let mut den = UniPoly::one();
    for (p, m) in terms {
        let g = den.gcd(&p);
        let p_rest = p.div_rem(&g).0;
        let d_rest = den.div_rem(&g).0;
        num = num
            .mul(&p_rest)
            .add(&d_rest.scale(&Scalar::from_int(m as i64)));
        den = den.mul(&p_rest);
    }
    let order = Scalar::from(Rational::from_integer(w.order() as i64));
    num = num.scale(&order.recip());
    let g = num.gcd(&den);
    num = num.div_rem(&g).0;
    den = den.div_rem(&g).0;
    let d0 = den.coeff(0).recip();
    num = num.scale(&d0);
    den = den.scale(&d0);
    let coefficients = num.series_div(&den, expansion_degree + 1);
    Ok(MolienData {
        numerator: num,
        denominator: den,
        coefficients,
    })
}

/// Structural checks on the series: `c₀ = 1` and every coefficient is a
/// non-negative integer.
pub fn verify_molien_coefficients(data: &MolienData) -> Check {
    let mut c = Check::new(
        "molien.coefficients",
        "Molien coefficients are non-negative integers with constant term 1",
    );
    c.record(data.coefficients[0].is_one(), || {
        format!("c_0 = {}", data.coefficients[0])
    });
    for (k, x) in data.coefficients.iter().enumerate().skip(1) {
        let ok = x
            .as_rational()
            .is_some_and(|r| r.is_integer() && r.signum() >= 0);
        c.record(ok, || format!("c_{k} = {x}"));
    }
    c
}

/// Degrees `d₁ ≤ … ≤ d_n` with `series = 1/∏(1 − t^{dᵢ})`.
///
/// Repeatedly takes the least `k ≥ 1` with a nonzero coefficient and
/// multiplies the truncated series by `1 − t^k`. The result is then certified
/// exactly: `∏(1 − t^{dᵢ})·numerator = denominator`.
pub fn extract_degrees(data: &MolienData, dim: usize) -> Result<Vec<usize>> {
    let top = data.expansion_degree();
    let mut s = data.coefficients.clone();
    let mut degrees = Vec::with_capacity(dim);
    while degrees.len() < dim {
        let k = (1..=top)
            .find(|&k| !s[k].is_zero())
            .ok_or(Error::InsufficientExpansion { degree: top })?;
        for i in (k..=top).rev() {
            s[i] = &s[i] - &s[i - k];
        }
        degrees.push(k);
    }
    let product = degrees.iter().fold(UniPoly::one(), |acc, &d| {
        acc.mul(&UniPoly::one_minus_power(d))
    });
    if product.mul(&data.numerator) != data.denominator {
        return Err(Error::NoDegreeFactorization(format!("{degrees:?}")));
    }
    Ok(degrees)
}

/// `∏ dᵢ = |W|` and `Σ (dᵢ − 1) = |R_W|`.
pub fn verify_degree_identities(w: &ReflectionGroup, degrees: &[usize]) -> Vec<Check> {
    let mut product = Check::new(
        "degrees.product",
        "the product of the degrees equals the group order",
    );
    let p: usize = degrees.iter().product();
    product.record(p == w.order(), || {
        format!("{degrees:?}: product {p}, |W| = {}", w.order())
    });
    let mut sum = Check::new(
        "degrees.sum",
        "the sum of (degree − 1) equals the number of reflections",
    );
    let s: usize = degrees.iter().map(|d| d - 1).sum();
    let r = w.reflections().len();
    sum.record(s == r, || format!("{degrees:?}: sum {s}, |R_W| = {r}"));
    vec![product, sum]
}

/// `w.p` for the dual action `(w.p)(x) = p(w⁻¹x)`.
pub fn act(w: &ReflectionGroup, i: usize, p: &Polynomial) -> Polynomial {
    p.act_by_inverse(w.element(w.inverse(i)).matrix())
}

/// `(1/|W|)·Σ_w w.p`.
pub fn reynolds_project(w: &ReflectionGroup, p: &Polynomial) -> Polynomial {
    let sum = (0..w.order()).fold(Polynomial::zero(p.nvars()), |acc, i| acc.add(&act(w, i, p)));
    sum.scale(&Scalar::frac(1, w.order() as i64))
}

/// Dimension of the degree-`k` invariants, as the rank of the Reynolds
/// images of all degree-`k` monomials.
pub fn invariant_dimension(w: &ReflectionGroup, k: u32) -> usize {
    let monomials = Monomial::all_of_degree(w.dim(), k);
    let rows: Vec<Vec<Scalar>> = monomials
        .iter()
        .map(|m| {
            let r = reynolds_project(w, &Polynomial::monomial(m.clone(), Scalar::one()));
            monomials.iter().map(|n| r.coefficient(n)).collect()
        })
        .collect();
    if rows.is_empty() {
        return 0;
    }
    Matrix::from_rows(rows).rank()
}

/// Invariance of `g_Δ` and its degree.
///
/// Invariance is checked for every element on the factored form: the dual
/// action is applied to each factor `α^∨` and the resulting product is
/// compared with `g_Δ` through [`crate::roots::FormProduct::normal_form`].
/// For small root systems the expanded polynomial is also substituted term
/// by term.
pub fn g_delta_checks(w: &ReflectionGroup, delta: &RootSystem) -> Vec<Check> {
    let g = g_delta(delta);
    let mut degree = Check::new("g-delta.degree", "g_Δ has degree 2·|R_W|");
    degree.record(g.degree() == 2 * w.reflections().len(), || {
        format!("degree {}, |R_W| = {}", g.degree(), w.reflections().len())
    });

    let mut factored = Check::new(
        "g-delta.invariant",
        "g_Δ is fixed by every element under the dual action",
    );
    let target = g.normal_form();
    for i in 0..w.order() {
        let moved = g.act_by_inverse(w.element(w.inverse(i)).matrix());
        factored.record(moved.normal_form() == target, || {
            format!("w = {:?}", w.element(i))
        });
    }

    let expanded = if delta.len() <= EXPANDED_G_DELTA_LIMIT {
        let mut c = Check::new(
            "g-delta.invariant-expanded",
            "the expanded g_Δ is fixed by every element under the dual action",
        );
        let p = g.expand();
        for i in 0..w.order() {
            c.record(act(w, i, &p) == p, || format!("w = {:?}", w.element(i)));
        }
        c
    } else {
        Check::skipped(
            "g-delta.invariant-expanded",
            "the expanded g_Δ is fixed by every element under the dual action",
            &format!(
                "{} roots exceed the expansion limit of {EXPANDED_G_DELTA_LIMIT}",
                delta.len()
            ),
        )
    };
    vec![degree, factored, expanded]
}

/// True iff `w.g_Δ = g_Δ` for every `w`.
pub fn verify_g_delta_in_invariant_ring(w: &ReflectionGroup, delta: &RootSystem) -> bool {
    crate::check::all_passed(&g_delta_checks(w, delta))
}

/// Dimension of the subspace fixed by the whole group.
pub fn fixed_dimension(w: &ReflectionGroup) -> usize {
    let n = w.dim();
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    for k in 0..w.generators().len() {
        let g = w.element(w.generator_indices()[k]).matrix();
        let m = g.sub(&Matrix::identity(n));
        rows.extend((0..n).map(|i| m.row(i).to_vec()));
    }
    if rows.is_empty() {
        return n;
    }
    n - Matrix::from_rows(rows).rank()
}
