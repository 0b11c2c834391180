//! Subgroups, isotropy and inertia groups, and fixed-locus checks.
//!
//! The fixed-locus check reduces "a subspace lies in a finite union of
//! hyperplanes" to "it lies in one of them". That reduction needs an infinite
//! field, which holds here since all scalars have characteristic zero.

use std::collections::{HashSet, VecDeque};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{kernel, subspace_leq, Matrix, Scalar, Subspace, Vector};
use crate::check::Check;
use crate::error::{Error, Result};
use crate::group::ReflectionGroup;
use crate::roots::RootSystem;

/// A subgroup of an enumerated group, as a sorted list of element indices.
#[derive(Clone)]
pub struct Subgroup<'a> {
    parent: &'a ReflectionGroup,
    elements: Vec<usize>,
}

impl std::fmt::Debug for Subgroup<'_> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Subgroup")
            .field("order", &self.elements.len())
            .field("elements", &self.elements)
            .finish()
    }
}

impl PartialEq for Subgroup<'_> {
    fn eq(&self, other: &Self) -> bool {
        std::ptr::eq(self.parent, other.parent) && self.elements == other.elements
    }
}

impl Eq for Subgroup<'_> {}

impl<'a> Subgroup<'a> {
    /// Validates that `elements` is a subgroup of `parent`.
    pub fn from_elements(parent: &'a ReflectionGroup, elements: &[usize]) -> Result<Self> {
        if elements.iter().any(|&i| i >= parent.order()) {
            return Err(Error::NotASubset);
        }
        let h = Self::from_indices(parent, elements.to_vec());
        if !h.is_closed() {
            return Err(Error::NotASubgroup);
        }
        Ok(h)
    }

    pub(crate) fn from_indices(parent: &'a ReflectionGroup, mut elements: Vec<usize>) -> Self {
        elements.sort_unstable();
        elements.dedup();
        Subgroup { parent, elements }
    }

    /// The subgroup generated by the given elements (trivial if none).
    pub fn generated_by(parent: &'a ReflectionGroup, gens: &[usize]) -> Self {
        let id = parent.identity();
        let mut seen = HashSet::from([id]);
        let mut queue = VecDeque::from([id]);
        while let Some(x) = queue.pop_front() {
            for &g in gens {
                let y = parent.multiply(x, g);
                if seen.insert(y) {
                    queue.push_back(y);
                }
            }
        }
        Self::from_indices(parent, seen.into_iter().collect())
    }

    pub fn whole(parent: &'a ReflectionGroup) -> Self {
        Self::from_indices(parent, (0..parent.order()).collect())
    }

    pub fn trivial(parent: &'a ReflectionGroup) -> Self {
        Self::from_indices(parent, vec![parent.identity()])
    }

    pub fn parent(&self) -> &'a ReflectionGroup {
        self.parent
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.elements.binary_search(&i).is_ok()
    }

    /// Identity present, closed under products and inverses.
    pub fn is_closed(&self) -> bool {
        let p = self.parent;
        self.contains(p.identity())
            && self.elements.iter().all(|&a| {
                self.contains(p.inverse(a))
                    && self
                        .elements
                        .iter()
                        .all(|&b| self.contains(p.multiply(a, b)))
            })
    }

    /// Element indices of the reflections lying in the subgroup.
    pub fn reflections(&self) -> Vec<usize> {
        self.elements
            .iter()
            .copied()
            .filter(|&i| self.parent.reflection_of_element(i).is_some())
            .collect()
    }

    /// Sorted matrices of the elements: an order-independent identity.
    pub fn fingerprint(&self) -> Vec<&'a Matrix> {
        let mut f: Vec<&Matrix> = self
            .elements
            .iter()
            .map(|&i| self.parent.element(i).matrix())
            .collect();
        f.sort();
        f
    }

    /// `w·H·w⁻¹`.
    pub fn conjugate_by(&self, w: usize) -> Subgroup<'a> {
        Self::from_indices(
            self.parent,
            self.elements
                .iter()
                .map(|&x| self.parent.conjugate(w, x))
                .collect(),
        )
    }
}

/// `W_v = {w : w.v = v}`.
pub fn isotropy<'a>(w: &'a ReflectionGroup, v: &Vector) -> Result<Subgroup<'a>> {
    w.space().check_vector(v)?;
    let images = w.orbit_of_vector(v);
    let fixing = images
        .iter()
        .enumerate()
        .filter(|(_, x)| *x == v)
        .map(|(i, _)| i)
        .collect();
    Ok(Subgroup::from_indices(w, fixing))
}

/// True iff the reflections contained in `h` generate `h`.
pub fn is_generated_by_contained_reflections(h: &Subgroup<'_>) -> bool {
    Subgroup::generated_by(h.parent(), &h.reflections()).elements == h.elements
}

/// `W_{±α} = {w : w.α = ±α}` for a root `α` of `w`.
pub fn inertia<'a>(w: &'a ReflectionGroup, alpha: &Vector) -> Result<Subgroup<'a>> {
    w.space().check_vector(alpha)?;
    if w.reflection_along(alpha).is_none() {
        return Err(Error::NotARoot(alpha.to_string()));
    }
    let neg = alpha.neg();
    let images = w.orbit_of_vector(alpha);
    let preserving = images
        .iter()
        .enumerate()
        .filter(|(_, x)| *x == alpha || **x == neg)
        .map(|(i, _)| i)
        .collect();
    Ok(Subgroup::from_indices(w, preserving))
}

/// Checks `W_{±α} = ⟨s_α⟩·W_α ≅ ℤ/2 × W_α`.
///
/// Four records: the product set equals the inertia group; `s_α` commutes
/// with `W_α`; `s_α ∉ W_α`; and `|W_{±α}| = 2·|W_α|`.
pub fn verify_inertia_decomposition(w: &ReflectionGroup, alpha: &Vector) -> Result<Vec<Check>> {
    let inert = inertia(w, alpha)?;
    let stab = isotropy(w, alpha)?;
    let s = w.reflections()[w.reflection_along(alpha).expect("checked by inertia")].element;

    let mut product = Check::new(
        "inertia.product",
        "the inertia group of ±α is the set product of ⟨s_α⟩ and the isotropy group of α",
    );
    let mut prod: Vec<usize> = stab
        .elements()
        .iter()
        .flat_map(|&h| [h, w.multiply(s, h)])
        .collect();
    prod.sort_unstable();
    prod.dedup();
    product.record(prod == inert.elements(), || {
        format!(
            "alpha = {alpha}: |<s>·W_alpha| = {}, |W_±alpha| = {}",
            prod.len(),
            inert.order()
        )
    });

    let mut commute = Check::new(
        "inertia.commute",
        "s_α commutes with every element of the isotropy group of α",
    );
    for &h in stab.elements() {
        commute.record(w.multiply(s, h) == w.multiply(h, s), || {
            format!("alpha = {alpha}, h = {:?}", w.element(h))
        });
    }

    let mut outside = Check::new(
        "inertia.disjoint",
        "s_α does not fix α, so ⟨s_α⟩ meets the isotropy group trivially",
    );
    outside.record(!stab.contains(s), || {
        format!("alpha = {alpha}: s_alpha fixes alpha")
    });

    let mut index = Check::new(
        "inertia.index",
        "the inertia group of ±α has twice the order of the isotropy group of α",
    );
    index.record(inert.order() == 2 * stab.order(), || {
        format!("alpha = {alpha}: {} vs 2·{}", inert.order(), stab.order())
    });

    Ok(vec![product, commute, outside, index])
}

/// `Fix(w) = Ker(w − id)`.
pub fn fixed_space(w: &ReflectionGroup, i: usize) -> Subspace {
    let m = w.element(i).matrix();
    kernel(&m.sub(&Matrix::identity(m.rows())))
}

/// Checks `⋃_{α∈Δ} Ker(α^∨) = ⋃_{w≠id} Fix(w)` in both directions.
///
/// (⊇): every `Fix(w)`, `w ≠ id`, is annihilated by some root form `α^∨`.
/// (⊆): `Ker(α^∨) = Fix(s_α)` when `s_α ∈ W`; otherwise some `w ≠ id` must fix
/// `Ker(α^∨)` pointwise, and the failure witness names the root.
pub fn verify_fixed_locus_equality(w: &ReflectionGroup, delta: &RootSystem) -> Vec<Check> {
    let fixes: Vec<Subspace> = (0..w.order()).map(|i| fixed_space(w, i)).collect();

    let mut supset = Check::new(
        "fixed-locus.moved-in-vanishing",
        "the fixed space of every non-identity element lies in a root hyperplane",
    );
    for (i, fix) in fixes.iter().enumerate().skip(1) {
        let ok = (0..delta.len()).any(|a| fix.annihilated_by(delta.dual_form(a).coefficients()));
        supset.record(ok, || {
            format!(
                "w = {:?}: Fix(w) of dim {} lies in no root hyperplane",
                w.element(i),
                fix.dim()
            )
        });
    }

    let mut subset = Check::new(
        "fixed-locus.vanishing-in-moved",
        "every root hyperplane is the fixed space of a non-identity element",
    );
    for a in 0..delta.len() {
        let hyperplane = delta.dual_form(a).kernel();
        let ok = match delta.reflection_of(a) {
            Some(k) => fixes[w.reflections()[k].element] == hyperplane,
            None => fixes
                .iter()
                .skip(1)
                .any(|f| subspace_leq(&hyperplane, f).unwrap_or(false)),
        };
        subset.record(ok, || {
            format!(
                "alpha = {}: Ker(alpha^v) is not the fixed space of any non-identity element",
                delta.root(a)
            )
        });
    }
    vec![supset, subset]
}

/// Deterministic test vectors for isotropy checks: all roots, `random`
/// pseudo-random rational vectors, then sums of root pairs until `min_total`.
pub fn sample_vectors(
    delta: &RootSystem,
    random: usize,
    min_total: usize,
    seed: u64,
) -> Vec<Vector> {
    let n = delta.dim();
    let mut out: Vec<Vector> = delta.roots().to_vec();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..random {
        out.push(Vector(
            (0..n)
                .map(|_| Scalar::frac(rng.gen_range(-6..=6), rng.gen_range(1..=4)))
                .collect(),
        ));
    }
    let roots = delta.roots();
    'pairs: for i in 0..roots.len() {
        for j in i + 1..roots.len() {
            if out.len() >= min_total {
                break 'pairs;
            }
            out.push(roots[i].add(&roots[j]));
        }
    }
    while out.len() < min_total {
        let k = out.len();
        out.push(Vector(
            (0..n)
                .map(|i| Scalar::from_int(((k + i) % 3) as i64))
                .collect(),
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::check::all_passed;
    use crate::group::{close_group, named_weyl, CoxeterType};
    use crate::roots::build_root_system;

    fn group(ty: CoxeterType) -> ReflectionGroup {
        let (space, gens) = named_weyl(ty).unwrap();
        close_group(&space, &gens, 100_000).unwrap()
    }

    fn matrices<'a>(w: &'a ReflectionGroup, h: &Subgroup<'a>) -> Vec<&'a Matrix> {
        h.elements()
            .iter()
            .map(|&i| w.element(i).matrix())
            .collect()
    }

    #[test]
    fn isotropy_examples() {
        let w = group(CoxeterType::B(2));
        assert_eq!(isotropy(&w, &Vector::zeros(2)).unwrap().order(), 8);
        assert_eq!(
            isotropy(&w, &Vector::from_ints(&[3, 1])).unwrap().order(),
            1
        );
        let h = isotropy(&w, &Vector::from_ints(&[1, 0])).unwrap();
        assert_eq!(h.order(), 2);
        let mut got = matrices(&w, &h);
        got.sort();
        let mut want = vec![
            Matrix::identity(2),
            Matrix::from_int_rows(&[&[1, 0], &[0, -1]]),
        ];
        want.sort();
        assert_eq!(got, want.iter().collect::<Vec<_>>());
        assert!(matches!(
            isotropy(&w, &Vector::zeros(3)),
            Err(Error::Dimension { .. })
        ));
    }

    #[test]
    fn reflection_generation_examples() {
        let w = group(CoxeterType::B(2));
        assert!(is_generated_by_contained_reflections(&Subgroup::trivial(
            &w
        )));
        let minus = w
            .index_of(&Matrix::identity(2).scale(&Scalar::from_int(-1)))
            .unwrap();
        let h = Subgroup::generated_by(&w, &[minus]);
        assert_eq!(h.order(), 2);
        assert!(!is_generated_by_contained_reflections(&h));
        let v = Vector::from_ints(&[1, 1]);
        assert!(is_generated_by_contained_reflections(
            &isotropy(&w, &v).unwrap()
        ));
    }

    #[test]
    fn inertia_examples() {
        let w = group(CoxeterType::A(1));
        assert_eq!(inertia(&w, &Vector::from_ints(&[1])).unwrap().order(), 2);
        let w = group(CoxeterType::B(2));
        let e1 = Vector::from_ints(&[1, 0]);
        assert_eq!(inertia(&w, &e1).unwrap().order(), 4);
        assert!(matches!(
            inertia(&w, &Vector::from_ints(&[2, 1])),
            Err(Error::NotARoot(_))
        ));
        let w = group(CoxeterType::A(2));
        assert_eq!(inertia(&w, &Vector::from_ints(&[1, 1])).unwrap().order(), 2);
    }

    #[test]
    fn inertia_decomposition_b3() {
        let w = group(CoxeterType::B(3));
        let checks = verify_inertia_decomposition(&w, &Vector::from_ints(&[1, 0, 0])).unwrap();
        assert!(all_passed(&checks), "{checks:#?}");
        assert_eq!(
            isotropy(&w, &Vector::from_ints(&[1, 0, 0]))
                .unwrap()
                .order(),
            8
        );
    }

    #[test]
    fn fixed_locus_and_negative_control() {
        let w = group(CoxeterType::B(3));
        let d = build_root_system(&w);
        let checks = verify_fixed_locus_equality(&w, &d);
        assert!(all_passed(&checks), "{checks:#?}");
        assert_eq!(checks[0].examined, 47);
        let fake = d.with_injected_root(&w, &Vector::from_ints(&[1, 2, 0]));
        let checks = verify_fixed_locus_equality(&w, &fake);
        assert!(checks[0].passed());
        assert!(!checks[1].passed());
        assert!(checks[1].witnesses[0].contains("(1, 2, 0)"));
    }

    #[test]
    fn subgroup_validation() {
        let w = group(CoxeterType::A(2));
        assert!(Subgroup::from_elements(&w, &[0]).is_ok());
        assert_eq!(
            Subgroup::from_elements(&w, &[0, 99]),
            Err(Error::NotASubset)
        );
        let r = w.reflection_elements();
        assert_eq!(
            Subgroup::from_elements(&w, &[0, r[0], r[1]]),
            Err(Error::NotASubgroup)
        );
    }
}
