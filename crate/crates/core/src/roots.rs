//! Root systems of reflection groups and the discriminant product `g_Δ`.
//!
//! For each conjugacy class `R_i` of reflections a representative root `β_i`
//! is chosen (the lexicographically least normalized root of the class) and
//! `Δ_i` is its orbit `{w.β_i}`. Roots are kept as the actual orbit vectors,
//! so `Δ` is stable under `W` on the nose; [`normalized_root`] is only used as
//! a key for lines.

use std::collections::{HashMap, HashSet, VecDeque};

use crate::algebra::{kernel, BilinearSpace, Matrix, Polynomial, Scalar, Subspace, Vector};
use crate::check::Check;
use crate::error::{Error, Result};
use crate::group::{conjugacy_classes, normalized_root, ReflectionGroup};

/// A linear form `x ↦ Σ cᵢxᵢ` on the ambient space.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LinearForm {
    coefficients: Vector,
}

impl LinearForm {
    pub fn new(coefficients: Vector) -> Self {
        LinearForm { coefficients }
    }

    /// `v^∨ = b(−, v)`, with coefficients `gram·v`.
    pub fn dual_of(space: &BilinearSpace, v: &Vector) -> Self {
        LinearForm::new(space.dual(v))
    }

    pub fn coefficients(&self) -> &Vector {
        &self.coefficients
    }

    pub fn evaluate(&self, x: &Vector) -> Scalar {
        self.coefficients.dot(x)
    }

    /// `(w.f)(x) = f(w⁻¹x)`, given the matrix of `w⁻¹`.
    pub fn act_by_inverse(&self, w_inv: &Matrix) -> LinearForm {
        LinearForm::new(w_inv.left_mul_vec(&self.coefficients))
    }

    pub fn kernel(&self) -> Subspace {
        kernel(&Matrix::from_rows(vec![self.coefficients.0.clone()]))
    }

    pub fn to_polynomial(&self) -> Polynomial {
        Polynomial::linear(&self.coefficients)
    }

    /// Splits off the first nonzero coefficient: `self = c · monic`.
    fn split_leading(&self) -> (Scalar, Vector) {
        match self.coefficients.first_nonzero() {
            None => (Scalar::zero(), self.coefficients.clone()),
            Some((_, c)) => {
                let c = c.clone();
                (c.clone(), self.coefficients.scale(&c.recip()))
            }
        }
    }
}

/// A product of linear forms, kept unexpanded.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormProduct {
    nvars: usize,
    forms: Vec<LinearForm>,
}

impl FormProduct {
    pub fn new(nvars: usize, forms: Vec<LinearForm>) -> Self {
        FormProduct { nvars, forms }
    }

    pub fn forms(&self) -> &[LinearForm] {
        &self.forms
    }

    pub fn degree(&self) -> usize {
        self.forms.len()
    }

    pub fn evaluate(&self, x: &Vector) -> Scalar {
        self.forms
            .iter()
            .fold(Scalar::one(), |acc, f| &acc * &f.evaluate(x))
    }

    /// Multiplies out into a sparse polynomial. Cost grows like the number of
    /// monomials of degree [`Self::degree`], so this is meant for small products.
    pub fn expand(&self) -> Polynomial {
        self.forms
            .iter()
            .fold(Polynomial::one(self.nvars), |acc, f| {
                acc.mul(&f.to_polynomial())
            })
    }

    pub fn act_by_inverse(&self, w_inv: &Matrix) -> FormProduct {
        FormProduct::new(
            self.nvars,
            self.forms.iter().map(|f| f.act_by_inverse(w_inv)).collect(),
        )
    }

    /// Unique normal form: a scalar times a sorted list of forms whose first
    /// nonzero coefficient is 1.
    ///
    /// Polynomial rings are factorial and linear forms are irreducible, so two
    /// products of nonzero forms are equal as polynomials iff their normal
    /// forms agree.
    pub fn normal_form(&self) -> (Scalar, Vec<Vector>) {
        let mut c = Scalar::one();
        let mut monic = Vec::with_capacity(self.forms.len());
        for f in &self.forms {
            let (lead, m) = f.split_leading();
            c = &c * &lead;
            monic.push(m);
        }
        if c.is_zero() {
            return (c, Vec::new());
        }
        monic.sort();
        (c, monic)
    }
}

/// The root system `Δ = ⋃ Δ_i` of a reflection group.
#[derive(Clone, Debug)]
pub struct RootSystem {
    dim: usize,
    roots: Vec<Vector>,
    duals: Vec<Vector>,
    class_of: Vec<usize>,
    classes: Vec<Vec<usize>>,
    representatives: Vec<Vector>,
    reflection: Vec<Option<usize>>,
    index: HashMap<Vector, usize>,
}

/// Builds `Δ` with one class per conjugacy class of reflections, in the order
/// returned by [`conjugacy_classes`].
pub fn build_root_system(w: &ReflectionGroup) -> RootSystem {
    let refl_elements = w.reflection_elements();
    let blocks = conjugacy_classes(w, &refl_elements).expect("reflections are group elements");
    let mut rs = RootSystem {
        dim: w.dim(),
        roots: Vec::new(),
        duals: Vec::new(),
        class_of: Vec::new(),
        classes: Vec::new(),
        representatives: Vec::new(),
        reflection: Vec::new(),
        index: HashMap::new(),
    };
    for block in blocks {
        let beta = block
            .iter()
            .map(|&e| &w.reflections()[w.reflection_of_element(e).unwrap()].root)
            .min()
            .expect("conjugacy classes are nonempty")
            .clone();
        let orbit = vector_orbit(w, &beta);
        rs.push_class(w, beta, orbit);
    }
    rs
}

/// Orbit of `v` under the generators, sorted.
fn vector_orbit(w: &ReflectionGroup, v: &Vector) -> Vec<Vector> {
    let mut seen = HashSet::from([v.clone()]);
    let mut queue = VecDeque::from([v.clone()]);
    while let Some(x) = queue.pop_front() {
        for k in 0..w.generators().len() {
            let y = w.apply_generator(k, &x);
            if !seen.contains(&y) {
                seen.insert(y.clone());
                queue.push_back(y);
            }
        }
    }
    let mut orbit: Vec<Vector> = seen.into_iter().collect();
    orbit.sort();
    orbit
}

impl RootSystem {
    fn push_class(&mut self, w: &ReflectionGroup, representative: Vector, members: Vec<Vector>) {
        let class = self.classes.len();
        let mut ids = Vec::with_capacity(members.len());
        for v in members {
            let i = self.roots.len();
            self.reflection.push(w.reflection_along(&v));
            self.duals.push(w.space().dual(&v));
            self.index.insert(v.clone(), i);
            self.roots.push(v);
            self.class_of.push(class);
            ids.push(i);
        }
        self.classes.push(ids);
        self.representatives.push(representative);
    }

    /// A copy with `±v` added as an extra class: a deliberately broken
    /// system for negative controls.
    pub fn with_injected_root(&self, w: &ReflectionGroup, v: &Vector) -> RootSystem {
        let mut rs = self.clone();
        let members: Vec<Vector> = [v.clone(), v.neg()]
            .into_iter()
            .filter(|x| !rs.index.contains_key(x))
            .collect();
        rs.push_class(w, v.clone(), members);
        rs
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn roots(&self) -> &[Vector] {
        &self.roots
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn root(&self, i: usize) -> &Vector {
        &self.roots[i]
    }

    /// Root indices of each class `Δ_i`.
    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn class_of(&self, i: usize) -> usize {
        self.class_of[i]
    }

    /// The chosen `β_i`, one per class.
    pub fn representatives(&self) -> &[Vector] {
        &self.representatives
    }

    /// Position of `s_α` in [`ReflectionGroup::reflections`], for root `i`.
    pub fn reflection_of(&self, i: usize) -> Option<usize> {
        self.reflection[i]
    }

    pub fn index_of(&self, v: &Vector) -> Option<usize> {
        self.index.get(v).copied()
    }

    pub fn contains(&self, v: &Vector) -> bool {
        self.index.contains_key(v)
    }

    /// `α^∨` for root `i`.
    pub fn dual_form(&self, i: usize) -> LinearForm {
        LinearForm::new(self.duals[i].clone())
    }

    /// Images of every root under every element: `table[w][a]` is the index of
    /// `w.α_a`. Built from the generator images along the group's word tree.
    /// Fails with `(generator, root)` when a generator moves a root out of `Δ`.
    pub fn action_table(
        &self,
        w: &ReflectionGroup,
    ) -> std::result::Result<Vec<Vec<u32>>, (usize, usize)> {
        let mut gen_perms = Vec::with_capacity(w.generators().len());
        for k in 0..w.generators().len() {
            let perm = self
                .roots
                .iter()
                .enumerate()
                .map(|(a, r)| {
                    self.index_of(&w.apply_generator(k, r))
                        .map(|b| b as u32)
                        .ok_or((k, a))
                })
                .collect::<std::result::Result<Vec<u32>, _>>()?;
            gen_perms.push(perm);
        }
        let id: Vec<u32> = (0..self.len() as u32).collect();
        Ok(w.orbit_map(id, |k, p| {
            p.iter().map(|&a| gen_perms[k][a as usize]).collect()
        }))
    }
}

/// Verifies the root-system axioms and the conjugation identity.
///
/// Checks, in order: `Δ = −Δ`; (R1) the only multiples of a root inside `Δ`
/// are `±α`; (R2) `s_α.β ∈ Δ`; `{s_α : α ∈ Δ} = R_W`; each `Δ_i` is
/// `W`-stable and its reflections form the `i`-th conjugacy class; and
/// `w∘s_α∘w⁻¹ = s_{w.α}` for every element and root.
pub fn verify_axioms(delta: &RootSystem, w: &ReflectionGroup) -> Vec<Check> {
    let mut checks = Vec::new();

    let mut sym = Check::new("roots.symmetric", "the root set is closed under negation");
    for r in delta.roots() {
        sym.record(delta.contains(&r.neg()), || format!("-{r} is missing"));
    }
    checks.push(sym);

    let mut r1 = Check::new(
        "roots.r1",
        "axiom (R1): a multiple λα of a root lies in the root set iff λ = ±1",
    );
    let mut lines: HashMap<Vector, Vec<usize>> = HashMap::new();
    for (i, r) in delta.roots().iter().enumerate() {
        lines.entry(normalized_root(r)).or_default().push(i);
    }
    let mut line_keys: Vec<&Vector> = lines.keys().collect();
    line_keys.sort();
    for key in line_keys {
        let members = &lines[key];
        let base = delta.root(members[0]);
        let (p, lead) = base.first_nonzero().expect("roots are nonzero");
        for &j in members {
            let lambda = &delta.root(j)[p] / lead;
            let ok = lambda.is_one() || (-&lambda).is_one();
            r1.record(ok, || format!("alpha = {base}, lambda = {lambda}"));
        }
    }
    checks.push(r1);

    let mut r2 = Check::new(
        "roots.r2",
        "axiom (R2): s_α.β lies in the root set for all roots α, β",
    );
    for (a, alpha) in delta.roots().iter().enumerate() {
        let dual = &delta.duals[a];
        let baa = dual.dot(alpha);
        if baa.is_zero() {
            r2.fail(format!("alpha = {alpha} is isotropic"));
            continue;
        }
        let c = &Scalar::from_int(2) / &baa;
        for beta in delta.roots() {
            let t = &dual.dot(beta) * &c;
            let image = beta.sub(&alpha.scale(&t));
            r2.record(delta.contains(&image), || {
                format!("alpha = {alpha}, beta = {beta}, s_alpha.beta = {image}")
            });
        }
    }
    checks.push(r2);

    let mut matching = Check::new(
        "roots.reflections",
        "the reflections along roots are exactly the reflections of the group",
    );
    let mut hit = vec![false; w.reflections().len()];
    for (i, r) in delta.roots().iter().enumerate() {
        match delta.reflection_of(i) {
            Some(k) => {
                hit[k] = true;
                matching.record(true, String::new);
            }
            None => matching.record(false, || {
                format!("s_alpha for alpha = {r} is not in the group")
            }),
        }
    }
    for (k, h) in hit.iter().enumerate() {
        matching.record(*h, || {
            format!("reflection along {} has no root", w.reflections()[k].root)
        });
    }
    checks.push(matching);

    let mut stable = Check::new("roots.stable", "each root class is stable under the group");
    for (a, r) in delta.roots().iter().enumerate() {
        for k in 0..w.generators().len() {
            let image = w.apply_generator(k, r);
            let ok = delta.index_of(&image).map(|b| delta.class_of(b)) == Some(delta.class_of(a));
            stable.record(ok, || format!("generator {k} sends {r} to {image}"));
        }
    }
    checks.push(stable);

    let mut classes = Check::new(
        "roots.classes",
        "the reflections along each root class form one conjugacy class of reflections",
    );
    let blocks = conjugacy_classes(w, &w.reflection_elements()).expect("reflections are elements");
    classes.record(blocks.len() == delta.classes().len(), || {
        format!(
            "{} conjugacy classes, {} root classes",
            blocks.len(),
            delta.classes().len()
        )
    });
    for (i, block) in blocks.iter().enumerate() {
        let mut expected: Vec<usize> = block.clone();
        expected.sort_unstable();
        let mut got: Vec<usize> = delta
            .classes()
            .get(i)
            .into_iter()
            .flatten()
            .filter_map(|&a| delta.reflection_of(a).map(|k| w.reflections()[k].element))
            .collect();
        got.sort_unstable();
        got.dedup();
        classes.record(got == expected, || format!("class {i} does not match"));
    }
    checks.push(classes);

    let mut conj = Check::new(
        "roots.conjugation",
        "w∘s_α∘w⁻¹ = s_{w.α} for every element w and root α",
    );
    match delta.action_table(w) {
        Err((k, a)) => conj.fail(format!(
            "generator {k} sends {} outside the root set",
            delta.root(a)
        )),
        Ok(table) => {
            for (g, perm) in table.iter().enumerate() {
                for a in 0..delta.len() {
                    let b = perm[a] as usize;
                    let ok = match (delta.reflection_of(a), delta.reflection_of(b)) {
                        (Some(x), Some(y)) => {
                            w.conjugate(g, w.reflections()[x].element) == w.reflections()[y].element
                        }
                        _ => false,
                    };
                    conj.record(ok, || {
                        format!("w = {:?}, alpha = {}", w.element(g), delta.root(a))
                    });
                }
            }
        }
    }
    checks.push(conj);
    checks
}

/// `g_Δ = ∏_{α∈Δ} α^∨`, over all roots of both signs.
pub fn g_delta(delta: &RootSystem) -> FormProduct {
    FormProduct::new(
        delta.dim(),
        (0..delta.len()).map(|i| delta.dual_form(i)).collect(),
    )
}

/// True iff the zero set of `g_Δ` equals the union of the fixed spaces of
/// the non-identity elements.
pub fn vanishing_locus_equals_moved_locus(w: &ReflectionGroup, delta: &RootSystem) -> bool {
    crate::check::all_passed(&crate::stabilizers::verify_fixed_locus_equality(w, delta))
}

/// Looks up `α` in `Δ`, failing with [`Error::NotARoot`].
pub fn require_root(delta: &RootSystem, alpha: &Vector) -> Result<usize> {
    delta
        .index_of(alpha)
        .ok_or_else(|| Error::NotARoot(alpha.to_string()))
}
