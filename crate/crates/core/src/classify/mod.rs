//! Maximal elementary abelian 2-subgroups generated by reflections.
//!
//! Distinct reflections commute iff their roots are orthogonal, so such
//! subgroups correspond to cliques in the commutation graph on `R_W`. The
//! maximal ones are classified up to conjugacy, and each representative comes
//! with its normalizer and the normalizer's action on it by conjugation.
//!
//! Only elementary abelian subgroups are treated; general 2-subgroups
//! generated by reflections are out of scope.

mod clique;

use std::collections::{HashMap, HashSet, VecDeque};

use serde::Serialize;

use crate::algebra::{Matrix, Vector};
use crate::check::Check;
use crate::error::Result;
use crate::group::ReflectionGroup;
use crate::roots::{build_root_system, RootSystem};
use crate::stabilizers::{is_generated_by_contained_reflections, Subgroup};

pub use clique::maximal_cliques;

/// Vertices are the reflections of `W` (one per `±`-pair of roots); edges
/// join distinct commuting reflections.
#[derive(Clone, Debug)]
pub struct CommutationGraph {
    /// Element index of each vertex's reflection.
    pub reflections: Vec<usize>,
    /// A root of each vertex's reflection, taken from `Δ`.
    pub roots: Vec<Vector>,
    pub adjacency: Vec<Vec<bool>>,
}

impl CommutationGraph {
    pub fn num_vertices(&self) -> usize {
        self.reflections.len()
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let n = self.num_vertices();
        (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .filter(|&(i, j)| self.adjacency[i][j])
            .collect()
    }
}

/// Builds the commutation graph, with vertices in the order of `W`'s reflections.
pub fn commutation_graph(w: &ReflectionGroup, delta: &RootSystem) -> CommutationGraph {
    let n = w.reflections().len();
    let mut roots: Vec<Option<Vector>> = vec![None; n];
    for (a, r) in delta.roots().iter().enumerate() {
        if let Some(k) = delta.reflection_of(a) {
            roots[k].get_or_insert_with(|| r.clone());
        }
    }
    let reflections: Vec<usize> = w.reflections().iter().map(|r| r.element).collect();
    let mut adjacency = vec![vec![false; n]; n];
    for i in 0..n {
        for j in i + 1..n {
            let (a, b) = (reflections[i], reflections[j]);
            let c = w.multiply(a, b) == w.multiply(b, a);
            adjacency[i][j] = c;
            adjacency[j][i] = c;
        }
    }
    CommutationGraph {
        reflections,
        roots: roots
            .into_iter()
            .enumerate()
            .map(|(k, r)| r.unwrap_or_else(|| w.reflections()[k].root.clone()))
            .collect(),
        adjacency,
    }
}

fn by_fingerprint<'a>(mut subgroups: Vec<Subgroup<'a>>) -> Vec<Subgroup<'a>> {
    subgroups.sort_by(|a, b| a.fingerprint().cmp(&b.fingerprint()));
    subgroups
}

/// The subgroups generated by the maximal cliques of the commutation graph,
/// ordered by fingerprint.
pub fn maximal_elementary_2subgroups<'a>(
    w: &'a ReflectionGroup,
    delta: &RootSystem,
) -> Vec<Subgroup<'a>> {
    let graph = commutation_graph(w, delta);
    let subgroups = maximal_cliques(&graph.adjacency)
        .into_iter()
        .map(|c| {
            let gens: Vec<usize> = c.iter().map(|&v| graph.reflections[v]).collect();
            Subgroup::generated_by(w, &gens)
        })
        .collect();
    by_fingerprint(subgroups)
}

/// An invertible matrix over the field with two elements, entries 0 or 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Gf2Matrix(pub Vec<Vec<u8>>);

impl Gf2Matrix {
    pub fn identity(k: usize) -> Self {
        Gf2Matrix(
            (0..k)
                .map(|i| (0..k).map(|j| u8::from(i == j)).collect())
                .collect(),
        )
    }

    pub fn mul(&self, other: &Gf2Matrix) -> Gf2Matrix {
        let k = self.0.len();
        Gf2Matrix(
            (0..k)
                .map(|i| {
                    (0..k)
                        .map(|j| (0..k).fold(0, |acc, l| acc ^ (self.0[i][l] & other.0[l][j])))
                        .collect()
                })
                .collect(),
        )
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.0.len())
    }
}

/// How the normalizer acts on `G`, one entry per normalizer element (in the
/// normalizer's element order).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NormalizerAction {
    /// Matrices in the basis `basis` (element indices of generating
    /// reflections); column `j` holds the coordinates of `w·basisⱼ·w⁻¹`.
    Gf2 {
        basis: Vec<usize>,
        matrices: Vec<Gf2Matrix>,
    },
    /// Permutations of `points`, the non-identity elements of `G`:
    /// `perm[i] = j` means `w·pointsᵢ·w⁻¹ = pointsⱼ`.
    Permutation {
        points: Vec<usize>,
        permutations: Vec<Vec<usize>>,
    },
}

impl NormalizerAction {
    pub fn len(&self) -> usize {
        match self {
            NormalizerAction::Gf2 { matrices, .. } => matrices.len(),
            NormalizerAction::Permutation { permutations, .. } => permutations.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    fn is_trivial_at(&self, i: usize) -> bool {
        match self {
            NormalizerAction::Gf2 { matrices, .. } => matrices[i].is_identity(),
            NormalizerAction::Permutation { permutations, .. } => {
                permutations[i].iter().enumerate().all(|(a, &b)| a == b)
            }
        }
    }

    /// Whether the action at `ab` equals the composite of the actions at `a` and `b`.
    fn composes(&self, ab: usize, a: usize, b: usize) -> bool {
        match self {
            NormalizerAction::Gf2 { matrices, .. } => matrices[ab] == matrices[a].mul(&matrices[b]),
            NormalizerAction::Permutation { permutations, .. } => {
                let (pa, pb) = (&permutations[a], &permutations[b]);
                permutations[ab]
                    .iter()
                    .enumerate()
                    .all(|(i, &x)| x == pa[pb[i]])
            }
        }
    }

    /// Distinct images and a generating set of the image chosen greedily.
    fn image(&self) -> (usize, Vec<ActionMap>) {
        let maps: Vec<ActionMap> = match self {
            NormalizerAction::Gf2 { matrices, .. } => {
                matrices.iter().cloned().map(ActionMap::Matrix).collect()
            }
            NormalizerAction::Permutation { permutations, .. } => permutations
                .iter()
                .cloned()
                .map(ActionMap::Permutation)
                .collect(),
        };
        let mut distinct: Vec<ActionMap> = maps.clone();
        distinct.sort();
        distinct.dedup();
        let mut gens: Vec<ActionMap> = Vec::new();
        let mut generated: HashSet<ActionMap> = HashSet::from([maps[0].identity_like()]);
        for m in &distinct {
            if generated.contains(m) {
                continue;
            }
            gens.push(m.clone());
            let mut queue: VecDeque<ActionMap> = generated.iter().cloned().collect();
            while let Some(x) = queue.pop_front() {
                for g in &gens {
                    let y = x.compose(g);
                    if generated.insert(y.clone()) {
                        queue.push_back(y);
                    }
                }
            }
        }
        (distinct.len(), gens)
    }
}

/// One automorphism of `G` in either encoding.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(untagged)]
pub enum ActionMap {
    Matrix(Gf2Matrix),
    Permutation(Vec<usize>),
}

impl ActionMap {
    fn compose(&self, other: &ActionMap) -> ActionMap {
        match (self, other) {
            (ActionMap::Matrix(a), ActionMap::Matrix(b)) => ActionMap::Matrix(a.mul(b)),
            (ActionMap::Permutation(a), ActionMap::Permutation(b)) => {
                ActionMap::Permutation(b.iter().map(|&i| a[i]).collect())
            }
            _ => unreachable!("one action uses a single encoding"),
        }
    }

    fn identity_like(&self) -> ActionMap {
        match self {
            ActionMap::Matrix(m) => ActionMap::Matrix(Gf2Matrix::identity(m.0.len())),
            ActionMap::Permutation(p) => ActionMap::Permutation((0..p.len()).collect()),
        }
    }
}

/// A greedy generating set of `G`: elements not yet in the span of earlier ones.
fn generating_set(g: &Subgroup<'_>) -> Vec<usize> {
    let w = g.parent();
    let mut gens = Vec::new();
    let mut span = Subgroup::trivial(w);
    for &x in g.elements() {
        if !span.contains(x) {
            gens.push(x);
            span = Subgroup::generated_by(w, &gens);
        }
    }
    gens
}

/// When `G` is elementary abelian of order `2^k` with `k` generating
/// reflections whose roots are independent: those reflections sorted by
/// matrix, and the map from elements to coordinate bitmasks.
fn reflection_basis(g: &Subgroup<'_>) -> Option<(Vec<usize>, HashMap<usize, u64>)> {
    let w = g.parent();
    let mut basis = g.reflections();
    basis.sort_by(|a, b| w.element(*a).cmp(w.element(*b)));
    let k = basis.len();
    if k >= 64 || g.order() != 1usize << k {
        return None;
    }
    let roots: Vec<Vector> = basis
        .iter()
        .map(|&e| {
            w.reflections()[w.reflection_of_element(e).unwrap()]
                .root
                .clone()
        })
        .collect();
    if Matrix::from_columns(&roots).rank() != k {
        return None;
    }
    let mut coords = HashMap::new();
    for mask in 0u64..(1 << k) {
        let x = (0..k)
            .filter(|j| mask & (1 << j) != 0)
            .fold(w.identity(), |acc, j| w.multiply(acc, basis[j]));
        if !g.contains(x) || coords.insert(x, mask).is_some() {
            return None;
        }
    }
    Some((basis, coords))
}

/// `N_W(G)` and its conjugation action on `G`.
///
/// Uses the GF(2) encoding in a basis of generating reflections when one
/// exists (always, for groups from [`maximal_elementary_2subgroups`]), and a
/// permutation of `G`'s non-identity elements otherwise.
pub fn normalizer_action<'a>(
    w: &'a ReflectionGroup,
    g: &Subgroup<'a>,
) -> (Subgroup<'a>, NormalizerAction) {
    let gens = generating_set(g);
    let normalizer: Vec<usize> = (0..w.order())
        .filter(|&x| gens.iter().all(|&h| g.contains(w.conjugate(x, h))))
        .collect();
    let n = Subgroup::from_indices(w, normalizer);
    let action = match reflection_basis(g) {
        Some((basis, coords)) => {
            let k = basis.len();
            let matrices = n
                .elements()
                .iter()
                .map(|&x| {
                    let cols: Vec<u64> =
                        basis.iter().map(|&b| coords[&w.conjugate(x, b)]).collect();
                    Gf2Matrix(
                        (0..k)
                            .map(|i| cols.iter().map(|c| ((c >> i) & 1) as u8).collect())
                            .collect(),
                    )
                })
                .collect();
            NormalizerAction::Gf2 { basis, matrices }
        }
        None => {
            let points: Vec<usize> = g
                .elements()
                .iter()
                .copied()
                .filter(|&x| x != w.identity())
                .collect();
            let pos: HashMap<usize, usize> =
                points.iter().enumerate().map(|(i, &p)| (p, i)).collect();
            let permutations = n
                .elements()
                .iter()
                .map(|&x| points.iter().map(|&p| pos[&w.conjugate(x, p)]).collect())
                .collect();
            NormalizerAction::Permutation {
                points,
                permutations,
            }
        }
    };
    (n, action)
}

/// A conjugacy class of maximal elementary abelian 2-subgroups generated by
/// reflections.
#[derive(Clone, Debug)]
pub struct TwoSubgroupClass<'a> {
    /// Member with the least fingerprint.
    pub representative: Subgroup<'a>,
    /// `|G| = 2^rank`.
    pub rank: usize,
    /// Element indices of the reflections in `G`, sorted by matrix.
    pub generating_reflections: Vec<usize>,
    pub normalizer: Subgroup<'a>,
    pub action: NormalizerAction,
    /// Number of `W`-conjugates of the representative.
    pub class_size: usize,
    /// How many of the classified subgroups fall into this class.
    pub input_members: usize,
}

/// Groups `subgroups` into `W`-conjugacy classes, ordered by representative
/// fingerprint.
pub fn classify_up_to_conjugacy<'a>(
    w: &'a ReflectionGroup,
    subgroups: &[Subgroup<'a>],
) -> Vec<TwoSubgroupClass<'a>> {
    let mut unassigned: HashSet<&[usize]> = subgroups.iter().map(|h| h.elements()).collect();
    let mut classes = Vec::new();
    for h in subgroups {
        if !unassigned.contains(h.elements()) {
            continue;
        }
        let mut orbit = vec![h.clone()];
        let mut seen: HashSet<Vec<usize>> = HashSet::from([h.elements().to_vec()]);
        let mut i = 0;
        while i < orbit.len() {
            for &g in w.generator_indices() {
                let c = orbit[i].conjugate_by(g);
                if seen.insert(c.elements().to_vec()) {
                    orbit.push(c);
                }
            }
            i += 1;
        }
        let mut input_members = 0;
        for m in &orbit {
            if unassigned.remove(m.elements()) {
                input_members += 1;
            }
        }
        let representative = orbit
            .iter()
            .min_by(|a, b| a.fingerprint().cmp(&b.fingerprint()))
            .expect("orbit is nonempty")
            .clone();
        let (normalizer, action) = normalizer_action(w, &representative);
        let mut generating_reflections = representative.reflections();
        generating_reflections.sort_by(|a, b| w.element(*a).cmp(w.element(*b)));
        classes.push(TwoSubgroupClass {
            rank: representative.order().trailing_zeros() as usize,
            representative,
            generating_reflections,
            normalizer,
            action,
            class_size: orbit.len(),
            input_members,
        });
    }
    classes.sort_by(|a, b| {
        a.representative
            .fingerprint()
            .cmp(&b.representative.fingerprint())
    });
    classes
}

fn homomorphism_check() -> Check {
    Check::new(
        "classify.homomorphism",
        "the conjugation action is a homomorphism from the normalizer to Aut(G)",
    )
}

fn centralizer_check() -> Check {
    Check::new(
        "classify.centralizer-kernel",
        "elements centralizing G act trivially on G",
    )
}

/// Checks that the action is a homomorphism `N → Aut(G)` on all pairs, and
/// that the centralizer of `G` acts trivially.
pub fn verify_action(
    w: &ReflectionGroup,
    g: &Subgroup<'_>,
    n: &Subgroup<'_>,
    action: &NormalizerAction,
) -> Vec<Check> {
    let (mut hom, mut central) = (homomorphism_check(), centralizer_check());
    record_action(w, g, n, action, &mut hom, &mut central);
    vec![hom, central]
}

fn record_action(
    w: &ReflectionGroup,
    g: &Subgroup<'_>,
    n: &Subgroup<'_>,
    action: &NormalizerAction,
    hom: &mut Check,
    central: &mut Check,
) {
    let pos: HashMap<usize, usize> = n
        .elements()
        .iter()
        .enumerate()
        .map(|(i, &x)| (x, i))
        .collect();
    for (i, &a) in n.elements().iter().enumerate() {
        for (j, &b) in n.elements().iter().enumerate() {
            let ab = pos.get(&w.multiply(a, b)).copied();
            hom.record(ab.is_some_and(|ab| action.composes(ab, i, j)), || {
                format!("a = {:?}, b = {:?}", w.element(a), w.element(b))
            });
        }
    }
    for (i, &x) in n.elements().iter().enumerate() {
        if g.elements()
            .iter()
            .all(|&h| w.multiply(x, h) == w.multiply(h, x))
        {
            central.record(action.is_trivial_at(i), || {
                format!("x = {:?}", w.element(x))
            });
        }
    }
}

/// Summary of one class for reports.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub struct ClassSummary {
    pub rank: usize,
    pub order: usize,
    pub normalizer_order: usize,
    pub class_size: usize,
    pub generating_roots: Vec<String>,
    pub action_encoding: String,
    pub action_image_order: usize,
    pub action_generators: Vec<ActionMap>,
}

/// Classification table with its cross-checks.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub struct SplittingReport {
    /// Number of conjugacy classes `r`.
    pub r: usize,
    pub total_maximal: usize,
    pub class_size_sum: usize,
    pub classes: Vec<ClassSummary>,
    pub checks: Vec<Check>,
}

/// Runs the full classification pipeline on `w`.
pub fn splitting_report(w: &ReflectionGroup) -> Result<SplittingReport> {
    let delta = build_root_system(w);
    Ok(splitting_report_with(w, &delta))
}

/// [`splitting_report`] for an already built root system.
pub fn splitting_report_with(w: &ReflectionGroup, delta: &RootSystem) -> SplittingReport {
    let graph = commutation_graph(w, delta);
    let maximal = maximal_elementary_2subgroups(w, delta);
    let classes = classify_up_to_conjugacy(w, &maximal);
    let mut checks = Vec::new();

    let mut sizes = Check::new(
        "classify.class-sizes",
        "class sizes add up to the number of maximal subgroups",
    );
    let class_size_sum: usize = classes.iter().map(|c| c.class_size).sum();
    sizes.record(class_size_sum == maximal.len(), || {
        format!(
            "sum of class sizes {class_size_sum}, maximal subgroups {}",
            maximal.len()
        )
    });
    for c in &classes {
        sizes.record(c.input_members == c.class_size, || {
            format!(
                "class of size {} contains {} listed subgroups",
                c.class_size, c.input_members
            )
        });
    }
    checks.push(sizes);

    let mut orbit = Check::new(
        "classify.orbit-stabilizer",
        "class size times normalizer order equals the group order",
    );
    for c in &classes {
        orbit.record(c.class_size * c.normalizer.order() == w.order(), || {
            format!(
                "{} · {} ≠ {}",
                c.class_size,
                c.normalizer.order(),
                w.order()
            )
        });
    }
    checks.push(orbit);

    let mut shape = Check::new(
        "classify.elementary-abelian",
        "each subgroup is elementary abelian and generated by its reflections",
    );
    for h in &maximal {
        let elementary = h.elements().iter().all(|&x| {
            w.multiply(x, x) == w.identity()
                && h.elements()
                    .iter()
                    .all(|&y| w.multiply(x, y) == w.multiply(y, x))
        });
        shape.record(
            elementary && is_generated_by_contained_reflections(h),
            || format!("subgroup of order {} fails", h.order()),
        );
    }
    checks.push(shape);

    let mut maximality = Check::new(
        "classify.maximal",
        "no reflection outside a subgroup commutes with all of its reflections",
    );
    for h in &maximal {
        let refl = h.reflections();
        let extendable = graph.reflections.iter().find(|&&s| {
            !h.contains(s) && refl.iter().all(|&t| w.multiply(s, t) == w.multiply(t, s))
        });
        maximality.record(extendable.is_none(), || {
            format!(
                "reflection {:?} extends a subgroup of order {}",
                w.element(*extendable.unwrap()),
                h.order()
            )
        });
    }
    checks.push(maximality);

    let mut cover = Check::new(
        "classify.covers-reflections",
        "every reflection lies in some maximal subgroup",
    );
    for &s in &graph.reflections {
        cover.record(maximal.iter().any(|h| h.contains(s)), || {
            format!("{:?}", w.element(s))
        });
    }
    checks.push(cover);

    let (mut hom, mut central) = (homomorphism_check(), centralizer_check());
    for c in &classes {
        record_action(
            w,
            &c.representative,
            &c.normalizer,
            &c.action,
            &mut hom,
            &mut central,
        );
    }
    checks.push(hom);
    checks.push(central);

    let summaries = classes
        .iter()
        .map(|c| {
            let (image_order, gens) = c.action.image();
            ClassSummary {
                rank: c.rank,
                order: c.representative.order(),
                normalizer_order: c.normalizer.order(),
                class_size: c.class_size,
                generating_roots: c
                    .generating_reflections
                    .iter()
                    .map(|&e| {
                        w.reflections()[w.reflection_of_element(e).unwrap()]
                            .root
                            .to_string()
                    })
                    .collect(),
                action_encoding: match c.action {
                    NormalizerAction::Gf2 { .. } => "gf2".into(),
                    NormalizerAction::Permutation { .. } => "permutation".into(),
                },
                action_image_order: image_order,
                action_generators: gens,
            }
        })
        .collect();

    SplittingReport {
        r: classes.len(),
        total_maximal: maximal.len(),
        class_size_sum,
        classes: summaries,
        checks,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::check::all_passed;
    use crate::group::{close_group, named_weyl, CoxeterType};

    fn group(ty: CoxeterType) -> ReflectionGroup {
        let (space, gens) = named_weyl(ty).unwrap();
        close_group(&space, &gens, 100_000).unwrap()
    }

    #[test]
    fn commutation_graph_examples() {
        for (ty, v, e) in [
            (CoxeterType::A(1), 1, 0),
            (CoxeterType::A(2), 3, 0),
            (CoxeterType::B(2), 4, 2),
        ] {
            let w = group(ty);
            let g = commutation_graph(&w, &build_root_system(&w));
            assert_eq!((g.num_vertices(), g.edges().len()), (v, e), "{ty}");
        }
    }

    #[test]
    fn maximal_subgroup_examples() {
        let orders = |ty| {
            let w = group(ty);
            let d = build_root_system(&w);
            maximal_elementary_2subgroups(&w, &d)
                .iter()
                .map(Subgroup::order)
                .collect::<Vec<_>>()
        };
        assert_eq!(orders(CoxeterType::A(2)), [2, 2, 2]);
        assert_eq!(orders(CoxeterType::B(2)), [4, 4]);
        assert_eq!(orders(CoxeterType::A(3)), [4, 4, 4]);
    }

    #[test]
    fn splitting_examples() {
        let rep = splitting_report(&group(CoxeterType::A(1))).unwrap();
        assert_eq!(
            (rep.r, rep.classes[0].rank, rep.classes[0].normalizer_order),
            (1, 1, 2)
        );

        let rep = splitting_report(&group(CoxeterType::B(2))).unwrap();
        assert_eq!(rep.r, 2);
        for c in &rep.classes {
            assert_eq!((c.rank, c.normalizer_order), (2, 8));
        }
        assert!(all_passed(&rep.checks), "{:#?}", rep.checks);

        let rep = splitting_report(&group(CoxeterType::A(3))).unwrap();
        assert_eq!(rep.r, 1);
        let c = &rep.classes[0];
        assert_eq!((c.rank, c.normalizer_order, c.class_size), (2, 8, 3));
        // The dihedral normalizer swaps the two transpositions.
        assert_eq!(c.action_image_order, 2);
        assert_eq!(
            c.action_generators,
            [ActionMap::Matrix(Gf2Matrix(vec![vec![0, 1], vec![1, 0]]))]
        );
        assert!(all_passed(&rep.checks), "{:#?}", rep.checks);
    }

    #[test]
    fn normalizer_of_a_reflection_in_a2() {
        let w = group(CoxeterType::A(2));
        let s = w.reflection_elements()[0];
        let g = Subgroup::generated_by(&w, &[s]);
        let (n, action) = normalizer_action(&w, &g);
        assert_eq!(n.order(), 2);
        assert!((0..action.len()).all(|i| action.is_trivial_at(i)));
    }

    #[test]
    fn abelian_whole_group_acts_trivially() {
        let w = group(CoxeterType::D(2));
        assert_eq!(w.order(), 4);
        let g = Subgroup::whole(&w);
        let (n, action) = normalizer_action(&w, &g);
        assert_eq!(n.order(), 4);
        assert!(matches!(action, NormalizerAction::Gf2 { .. }));
        assert!((0..action.len()).all(|i| action.is_trivial_at(i)));
    }

    #[test]
    fn permutation_fallback_for_non_reflection_subgroups() {
        let w = group(CoxeterType::B(2));
        let rot = w.multiply(w.generator_indices()[0], w.generator_indices()[1]);
        let g = Subgroup::generated_by(&w, &[rot]);
        assert_eq!(g.order(), 4);
        let (n, action) = normalizer_action(&w, &g);
        assert_eq!(n.order(), 8);
        assert!(matches!(action, NormalizerAction::Permutation { .. }));
        assert!(all_passed(&verify_action(&w, &g, &n, &action)));
    }
}
