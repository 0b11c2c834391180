//! Reflections, finite group closure and conjugacy.

mod named;

use std::collections::{HashMap, VecDeque};
use std::fmt;

use rayon::prelude::*;

use crate::algebra::{kernel, BilinearSpace, Matrix, Scalar, Vector};
use crate::error::{Error, Result};

pub use named::{named_weyl, CoxeterType, SUPPORTED_DIHEDRAL};

/// Default upper bound on the number of elements [`close_group`] will produce.
pub const DEFAULT_ORDER_CAP: usize = 1_000_000;

/// An element of the orthogonal group of a bilinear space.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement(Matrix);

impl GroupElement {
    pub fn new(m: Matrix) -> Self {
        GroupElement(m)
    }

    pub fn matrix(&self) -> &Matrix {
        &self.0
    }

    pub fn apply(&self, v: &Vector) -> Vector {
        self.0.mul_vec(v)
    }

    pub fn is_identity(&self) -> bool {
        self.0.is_identity()
    }
}

impl fmt::Debug for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A reflection together with the root it negates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reflection {
    pub root: Vector,
    pub element: GroupElement,
}

/// Canonical representative of the line through `v`.
///
/// Divides by the first nonzero coordinate; if the result is rational it is
/// further scaled to a primitive integer vector. Either way the first nonzero
/// coordinate ends up positive, so `v` and `-v` share a key.
pub fn normalized_root(v: &Vector) -> Vector {
    let Some((_, lead)) = v.first_nonzero() else {
        return v.clone();
    };
    let w = v.scale(&lead.recip());
    if !w.iter().all(Scalar::is_rational) {
        return w;
    }
    use num_integer::Integer;
    let mut lcm = num_bigint::BigInt::from(1);
    for x in w.iter() {
        lcm = lcm.lcm(&x.rational_part().denom());
    }
    let ints: Vec<_> = w
        .iter()
        .map(|x| x.rational_part().numer() * (&lcm / x.rational_part().denom()))
        .collect();
    let mut g = num_bigint::BigInt::from(0);
    for x in &ints {
        g = g.gcd(x);
    }
    Vector(
        ints.into_iter()
            .map(|x| Scalar::from(crate::algebra::Rational::from(x / &g)))
            .collect(),
    )
}

/// The reflection `w ↦ w - (2b(v,w)/b(v,v))·v` associated with an anisotropic `v`.
pub fn reflection(space: &BilinearSpace, v: &Vector) -> Result<Reflection> {
    space.check_vector(v)?;
    let bvv = space.form(v, v);
    if bvv.is_zero() {
        return Err(Error::IsotropicVector(v.to_string()));
    }
    let c = &Scalar::from_int(2) / &bvv;
    let m = Matrix::identity(space.dim()).minus_rank_one(&c, v, &space.dual(v));
    Ok(Reflection {
        root: v.clone(),
        element: GroupElement(m),
    })
}

/// True iff `gᵀ·gram·g = gram`.
pub fn is_orthogonal(space: &BilinearSpace, g: &Matrix) -> Result<bool> {
    space.is_orthogonal(g)
}

/// A reflection of a closed group: its element index and normalized root.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReflectionEntry {
    pub element: usize,
    pub root: Vector,
}

/// A fully enumerated finite group generated by reflections.
#[derive(Clone, Debug)]
pub struct ReflectionGroup {
    space: BilinearSpace,
    generators: Vec<Reflection>,
    generator_indices: Vec<usize>,
    elements: Vec<GroupElement>,
    index: HashMap<GroupElement, usize>,
    inverses: Vec<usize>,
    reflections: Vec<ReflectionEntry>,
    reflection_of_element: Vec<Option<usize>>,
    reflection_by_root: HashMap<Vector, usize>,
    // Breadth-first tree: elements[j] = s_{via[j]} · elements[parent[j]].
    parent: Vec<usize>,
    via: Vec<usize>,
    // left[i * ngens + k] = index of s_k · elements[i].
    left: Vec<usize>,
    gen_data: Vec<(Scalar, Vector, Vector)>,
}

/// Closes `gens` under multiplication, breadth first, failing past `cap` elements.
pub fn close_group(
    space: &BilinearSpace,
    gens: &[Reflection],
    cap: usize,
) -> Result<ReflectionGroup> {
    if gens.is_empty() {
        return Err(Error::NoGenerators);
    }
    for g in gens {
        space.check_vector(&g.root)?;
        if !space.is_orthogonal(g.element.matrix())? {
            return Err(Error::NotOrthogonal);
        }
    }
    // Left multiplication by s_α is the rank-one update g - c·α·(α^∨ᵀ g).
    let gen_data: Vec<(Scalar, Vector, Vector)> = gens
        .iter()
        .map(|r| {
            let bvv = space.form(&r.root, &r.root);
            (
                &Scalar::from_int(2) / &bvv,
                r.root.clone(),
                space.dual(&r.root),
            )
        })
        .collect();

    let ngens = gens.len();
    let id = GroupElement(Matrix::identity(space.dim()));
    let mut elements = vec![id.clone()];
    let mut index = HashMap::from([(id, 0usize)]);
    if cap < 1 {
        return Err(Error::OrderCapExceeded { cap });
    }
    let mut parent = vec![0usize];
    let mut via = vec![0usize];
    let mut left: Vec<usize> = Vec::new();
    let mut frontier: Vec<usize> = vec![0];
    while !frontier.is_empty() {
        let products: Vec<GroupElement> = frontier
            .par_iter()
            .flat_map_iter(|&i| {
                let g = elements[i].matrix();
                gen_data.iter().map(move |(c, root, dual)| {
                    GroupElement(g.minus_rank_one(c, root, &g.left_mul_vec(dual)))
                })
            })
            .collect();
        let mut next = Vec::new();
        for (n, p) in products.into_iter().enumerate() {
            let (i, k) = (frontier[n / ngens], n % ngens);
            let j = match index.get(&p) {
                Some(&j) => j,
                None => {
                    if elements.len() >= cap {
                        return Err(Error::OrderCapExceeded { cap });
                    }
                    let j = elements.len();
                    index.insert(p.clone(), j);
                    next.push(j);
                    elements.push(p);
                    parent.push(i);
                    via.push(k);
                    j
                }
            };
            // Frontiers are consecutive index ranges, so rows fill in order.
            debug_assert_eq!(left.len(), i * ngens + k);
            left.push(j);
        }
        frontier = next;
    }

    let inverses: Vec<usize> = elements
        .par_iter()
        .map(|g| index[&GroupElement(space.orthogonal_inverse(g.matrix()))])
        .collect();

    let id_m = Matrix::identity(space.dim());
    let detected: Vec<Option<Vector>> = elements
        .par_iter()
        .map(|g| reflection_root(g.matrix(), &id_m))
        .collect();
    let mut reflections = Vec::new();
    let mut reflection_of_element = vec![None; elements.len()];
    let mut reflection_by_root = HashMap::new();
    for (i, root) in detected.into_iter().enumerate() {
        if let Some(root) = root {
            reflection_of_element[i] = Some(reflections.len());
            reflection_by_root.insert(root.clone(), reflections.len());
            reflections.push(ReflectionEntry { element: i, root });
        }
    }
    let generator_indices = gens.iter().map(|g| index[&g.element]).collect();

    Ok(ReflectionGroup {
        space: space.clone(),
        generators: gens.to_vec(),
        generator_indices,
        elements,
        index,
        inverses,
        reflections,
        reflection_of_element,
        reflection_by_root,
        parent,
        via,
        left,
        gen_data,
    })
}

/// Root of `g` if it is a reflection: an involution whose fixed space has
/// codimension one. The root spans `Ker(g + id)`.
fn reflection_root(g: &Matrix, id: &Matrix) -> Option<Vector> {
    if g.sub(id).rank() != 1 || !g.mul(g).is_identity() {
        return None;
    }
    let k = kernel(&g.add(id));
    debug_assert_eq!(k.dim(), 1);
    Some(normalized_root(&k.basis()[0]))
}

impl ReflectionGroup {
    /// The trivial group on `space` (no generators).
    pub fn trivial(space: &BilinearSpace) -> Self {
        let id = GroupElement(Matrix::identity(space.dim()));
        ReflectionGroup {
            space: space.clone(),
            generators: Vec::new(),
            generator_indices: Vec::new(),
            elements: vec![id.clone()],
            index: HashMap::from([(id, 0)]),
            inverses: vec![0],
            reflections: Vec::new(),
            reflection_of_element: vec![None],
            reflection_by_root: HashMap::new(),
            parent: vec![0],
            via: vec![0],
            left: Vec::new(),
            gen_data: Vec::new(),
        }
    }

    pub fn space(&self) -> &BilinearSpace {
        &self.space
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Reflection] {
        &self.generators
    }

    /// Element indices of the generators, in generator order.
    pub fn generator_indices(&self) -> &[usize] {
        &self.generator_indices
    }

    pub fn elements(&self) -> &[GroupElement] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &GroupElement {
        &self.elements[i]
    }

    /// Index of the identity element.
    pub fn identity(&self) -> usize {
        0
    }

    pub fn index_of(&self, m: &Matrix) -> Option<usize> {
        // Matrix and GroupElement hash identically; avoid the clone where possible.
        self.index.get(&GroupElement(m.clone())).copied()
    }

    pub fn inverse(&self, i: usize) -> usize {
        self.inverses[i]
    }

    /// Index of `s_k · elements[i]` for the `k`-th generator.
    pub fn left_generator(&self, k: usize, i: usize) -> usize {
        self.left[i * self.generators.len() + k]
    }

    /// Index of `elements[i] · s_k` for the `k`-th generator.
    pub fn right_generator(&self, i: usize, k: usize) -> usize {
        self.inverses[self.left_generator(k, self.inverses[i])]
    }

    /// Generator positions `k₁ … k_l` with `elements[i] = s_{k₁} ⋯ s_{k_l}`.
    pub fn word(&self, mut i: usize) -> Vec<usize> {
        let mut w = Vec::new();
        while i != 0 {
            w.push(self.via[i]);
            i = self.parent[i];
        }
        w
    }

    /// Index of `elements[a]·elements[b]`, by table lookups along a word for `a`.
    pub fn multiply(&self, a: usize, b: usize) -> usize {
        if a == 0 {
            return b;
        }
        self.left_generator(self.via[a], self.multiply(self.parent[a], b))
    }

    /// Index of `w·x·w⁻¹`.
    pub fn conjugate(&self, w: usize, x: usize) -> usize {
        self.multiply(self.multiply(w, x), self.inverses[w])
    }

    /// Evaluates a left action on every element.
    ///
    /// `step(k, y)` must return `s_k · y` for the `k`-th generator; the result
    /// at position `i` is `elements[i] · init`.
    pub fn orbit_map<T, F>(&self, init: T, step: F) -> Vec<T>
    where
        F: Fn(usize, &T) -> T,
    {
        let mut out: Vec<T> = Vec::with_capacity(self.order());
        out.push(init);
        for j in 1..self.order() {
            let y = step(self.via[j], &out[self.parent[j]]);
            out.push(y);
        }
        out
    }

    /// `s_k · v` for the `k`-th generator.
    pub fn apply_generator(&self, k: usize, v: &Vector) -> Vector {
        let (c, root, dual) = &self.gen_data[k];
        let t = &dual.dot(v) * c;
        if t.is_zero() {
            return v.clone();
        }
        v.sub(&root.scale(&t))
    }

    /// `w · v` for every element `w`, indexed like [`Self::elements`].
    pub fn orbit_of_vector(&self, v: &Vector) -> Vec<Vector> {
        self.orbit_map(v.clone(), |k, y| self.apply_generator(k, y))
    }

    /// The reflections `R_W`, each with its normalized root.
    pub fn reflections(&self) -> &[ReflectionEntry] {
        &self.reflections
    }

    /// Position in [`Self::reflections`] of element `i`, if it is a reflection.
    pub fn reflection_of_element(&self, i: usize) -> Option<usize> {
        self.reflection_of_element[i]
    }

    /// Position in [`Self::reflections`] of the reflection along `v`, if any.
    pub fn reflection_along(&self, v: &Vector) -> Option<usize> {
        self.reflection_by_root.get(&normalized_root(v)).copied()
    }

    /// Element indices of `R_W`.
    pub fn reflection_elements(&self) -> Vec<usize> {
        self.reflections.iter().map(|r| r.element).collect()
    }

    /// Order of element `i`.
    pub fn element_order(&self, i: usize) -> usize {
        let mut k = 1;
        let mut cur = i;
        while cur != 0 {
            cur = self.multiply(cur, i);
            k += 1;
        }
        k
    }
}

/// Partitions `subset` into W-conjugacy classes.
///
/// Classes are orbits under conjugation by the generators, which reach the
/// whole group. Blocks list element indices sorted by matrix; blocks are
/// ordered by their least matrix, so the output does not depend on the order
/// of generators.
pub fn conjugacy_classes(w: &ReflectionGroup, subset: &[usize]) -> Result<Vec<Vec<usize>>> {
    if subset.iter().any(|&i| i >= w.order()) {
        return Err(Error::NotASubset);
    }
    let gens = &w.generator_indices;
    let mut class_of: HashMap<usize, usize> = HashMap::new();
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    let wanted: std::collections::HashSet<usize> = subset.iter().copied().collect();
    for &x in subset {
        if class_of.contains_key(&x) {
            continue;
        }
        let id = blocks.len();
        let mut orbit = vec![x];
        let mut seen = std::collections::HashSet::from([x]);
        let mut queue = VecDeque::from([x]);
        while let Some(y) = queue.pop_front() {
            for &g in gens {
                let z = w.conjugate(g, y);
                if seen.insert(z) {
                    orbit.push(z);
                    queue.push_back(z);
                }
            }
        }
        let mut block: Vec<usize> = orbit.into_iter().filter(|z| wanted.contains(z)).collect();
        for &z in &block {
            class_of.insert(z, id);
        }
        block.sort_by(|a, b| w.element(*a).cmp(w.element(*b)));
        blocks.push(block);
    }
    blocks.sort_by(|a, b| w.element(a[0]).cmp(w.element(b[0])));
    Ok(blocks)
}

/// [`conjugacy_classes`] for explicit matrices; fails if any is not in `w`.
pub fn conjugacy_classes_of(w: &ReflectionGroup, subset: &[Matrix]) -> Result<Vec<Vec<usize>>> {
    let idx = subset
        .iter()
        .map(|m| w.index_of(m).ok_or(Error::NotASubset))
        .collect::<Result<Vec<_>>>()?;
    conjugacy_classes(w, &idx)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Field;

    fn a2_space() -> BilinearSpace {
        BilinearSpace::new(
            Field::Rationals,
            Matrix::from_int_rows(&[&[2, -1], &[-1, 2]]),
        )
        .unwrap()
    }

    #[test]
    fn reflection_examples() {
        let e = BilinearSpace::euclidean(3);
        let s = reflection(&e, &Vector::unit(3, 0)).unwrap();
        assert_eq!(
            s.element.matrix(),
            &Matrix::from_int_rows(&[&[-1, 0, 0], &[0, 1, 0], &[0, 0, 1]])
        );
        let s = reflection(&a2_space(), &Vector::unit(2, 0)).unwrap();
        assert_eq!(
            s.element.matrix(),
            &Matrix::from_int_rows(&[&[-1, 1], &[0, 1]])
        );
        assert_eq!(s.element.apply(&s.root), s.root.neg());
    }

    #[test]
    fn isotropic_vector_is_rejected() {
        let hyperbolic =
            BilinearSpace::new(Field::Rationals, Matrix::from_int_rows(&[&[0, 1], &[1, 0]]))
                .unwrap();
        assert!(matches!(
            reflection(&hyperbolic, &Vector::unit(2, 0)),
            Err(Error::IsotropicVector(_))
        ));
        assert!(reflection(&hyperbolic, &Vector::from_ints(&[1, 1])).is_ok());
    }

    #[test]
    fn orthogonality_examples() {
        let e = BilinearSpace::euclidean(2);
        assert!(is_orthogonal(&e, &Matrix::identity(2)).unwrap());
        assert!(!is_orthogonal(&e, &Matrix::identity(2).scale(&Scalar::from_int(2))).unwrap());
        let s = reflection(&a2_space(), &Vector::from_ints(&[1, 1])).unwrap();
        assert!(is_orthogonal(&a2_space(), s.element.matrix()).unwrap());
        assert!(is_orthogonal(&e, &Matrix::identity(3)).is_err());
    }

    #[test]
    fn closure_examples() {
        let space = a2_space();
        let gens = [
            reflection(&space, &Vector::unit(2, 0)).unwrap(),
            reflection(&space, &Vector::unit(2, 1)).unwrap(),
        ];
        let w = close_group(&space, &gens[..1], 100).unwrap();
        assert_eq!(w.order(), 2);
        let w = close_group(&space, &gens, 100).unwrap();
        assert_eq!(w.order(), 6);
        assert_eq!(w.reflections().len(), 3);
        assert_eq!(
            close_group(&space, &gens, 4).unwrap_err(),
            Error::OrderCapExceeded { cap: 4 }
        );
        assert_eq!(
            close_group(&space, &[], 4).unwrap_err(),
            Error::NoGenerators
        );
        for i in 0..w.order() {
            assert!(w.multiply(i, w.inverse(i)) == w.identity());
        }
    }

    #[test]
    fn normalization_is_canonical_on_lines() {
        let v = Vector(vec![
            Scalar::frac(-2, 3),
            Scalar::frac(4, 3),
            Scalar::zero(),
        ]);
        assert_eq!(normalized_root(&v), Vector::from_ints(&[1, -2, 0]));
        assert_eq!(normalized_root(&v.neg()), normalized_root(&v));
        let phi = Scalar::quadratic(
            crate::algebra::Rational::new(1, 2),
            crate::algebra::Rational::new(1, 2),
            5,
        );
        let u = Vector(vec![phi.clone(), Scalar::one()]);
        let n = normalized_root(&u.scale(&Scalar::from_int(-3)));
        assert_eq!(n[0], Scalar::one());
        assert_eq!(n, normalized_root(&u));
        let sqrt5 = Scalar::sqrt_of(5);
        assert_eq!(
            normalized_root(&Vector(vec![sqrt5.clone(), &sqrt5 * &Scalar::from_int(2)])),
            Vector::from_ints(&[1, 2])
        );
    }

    #[test]
    fn conjugacy_examples() {
        let (space, gens) = named_weyl(CoxeterType::A(2)).unwrap();
        let w = close_group(&space, &gens, 100).unwrap();
        assert_eq!(conjugacy_classes(&w, &[0]).unwrap(), vec![vec![0]]);
        let classes = conjugacy_classes(&w, &w.reflection_elements()).unwrap();
        assert_eq!(classes.iter().map(Vec::len).collect::<Vec<_>>(), [3]);

        let (space, gens) = named_weyl(CoxeterType::B(2)).unwrap();
        let w = close_group(&space, &gens, 100).unwrap();
        let classes = conjugacy_classes(&w, &w.reflection_elements()).unwrap();
        assert_eq!(classes.iter().map(Vec::len).collect::<Vec<_>>(), [2, 2]);
        assert_eq!(conjugacy_classes(&w, &[99]), Err(Error::NotASubset));
        let stranger = Matrix::identity(2).scale(&Scalar::from_int(3));
        assert_eq!(
            conjugacy_classes_of(&w, &[stranger]),
            Err(Error::NotASubset)
        );
    }

    #[test]
    fn table_products_match_matrices() {
        let (space, gens) = named_weyl(CoxeterType::B(3)).unwrap();
        let w = close_group(&space, &gens, 100).unwrap();
        for a in 0..w.order() {
            for b in (0..w.order()).step_by(5) {
                let m = w.element(a).matrix().mul(w.element(b).matrix());
                assert_eq!(w.element(w.multiply(a, b)).matrix(), &m);
            }
            let word = w.word(a);
            let rebuilt = word
                .iter()
                .map(|&k| w.generator_indices()[k])
                .fold(w.identity(), |acc, g| w.multiply(acc, g));
            assert_eq!(rebuilt, a);
        }
        let v = Vector::from_ints(&[3, -1, 2]);
        for (i, image) in w.orbit_of_vector(&v).iter().enumerate() {
            assert_eq!(image, &w.element(i).apply(&v));
        }
    }
}
