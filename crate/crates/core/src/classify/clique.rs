/// Fixed-width bit set over `0..n`.
#[derive(Clone, Debug, PartialEq, Eq)]
struct Bits(Vec<u64>);

impl Bits {
    fn empty(n: usize) -> Self {
        Bits(vec![0; n.div_ceil(64)])
    }

    fn full(n: usize) -> Self {
        let mut b = Self::empty(n);
        for i in 0..n {
            b.insert(i);
        }
        b
    }

    fn insert(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    fn remove(&mut self, i: usize) {
        self.0[i / 64] &= !(1 << (i % 64));
    }

    fn is_empty(&self) -> bool {
        self.0.iter().all(|&w| w == 0)
    }

    fn and(&self, other: &Bits) -> Bits {
        Bits(self.0.iter().zip(&other.0).map(|(a, b)| a & b).collect())
    }

    fn and_not(&self, other: &Bits) -> Bits {
        Bits(self.0.iter().zip(&other.0).map(|(a, b)| a & !b).collect())
    }

    fn or(&self, other: &Bits) -> Bits {
        Bits(self.0.iter().zip(&other.0).map(|(a, b)| a | b).collect())
    }

    fn count(&self) -> u32 {
        self.0.iter().map(|w| w.count_ones()).sum()
    }

    fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().flat_map(|(k, &w)| {
            (0..64)
                .filter(move |b| w & (1 << b) != 0)
                .map(move |b| 64 * k + b)
        })
    }
}

/// All maximal cliques of an undirected graph given by its adjacency matrix.
///
/// Bron–Kerbosch with Tomita pivoting. Each clique is sorted and the list is
/// sorted, so the output is canonical.
pub fn maximal_cliques(adjacency: &[Vec<bool>]) -> Vec<Vec<usize>> {
    let n = adjacency.len();
    let neighbors: Vec<Bits> = adjacency
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut b = Bits::empty(n);
            for (j, &e) in row.iter().enumerate() {
                if e && i != j {
                    b.insert(j);
                }
            }
            b
        })
        .collect();
    let mut out = Vec::new();
    let mut r = Vec::new();
    expand(&neighbors, &mut r, Bits::full(n), Bits::empty(n), &mut out);
    for c in &mut out {
        c.sort_unstable();
    }
    out.sort();
    out
}

fn expand(nb: &[Bits], r: &mut Vec<usize>, mut p: Bits, mut x: Bits, out: &mut Vec<Vec<usize>>) {
    if p.is_empty() {
        if x.is_empty() {
            out.push(r.clone());
        }
        return;
    }
    let pivot = p
        .or(&x)
        .iter()
        .max_by_key(|&u| (p.and(&nb[u]).count(), std::cmp::Reverse(u)))
        .expect("P is nonempty");
    let candidates: Vec<usize> = p.and_not(&nb[pivot]).iter().collect();
    for v in candidates {
        r.push(v);
        expand(nb, r, p.and(&nb[v]), x.and(&nb[v]), out);
        r.pop();
        p.remove(v);
        x.insert(v);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn graph(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<bool>> {
        let mut a = vec![vec![false; n]; n];
        for &(i, j) in edges {
            a[i][j] = true;
            a[j][i] = true;
        }
        a
    }

    #[test]
    fn small_graphs() {
        assert_eq!(maximal_cliques(&graph(1, &[])), vec![vec![0]]);
        assert_eq!(
            maximal_cliques(&graph(3, &[])),
            vec![vec![0], vec![1], vec![2]]
        );
        assert_eq!(
            maximal_cliques(&graph(4, &[(0, 1), (1, 2), (0, 2), (2, 3)])),
            vec![vec![0, 1, 2], vec![2, 3]]
        );
        assert!(maximal_cliques(&[]).len() == 1);
    }

    fn brute(adj: &[Vec<bool>]) -> Vec<Vec<usize>> {
        let n = adj.len();
        let is_clique = |m: u32| {
            (0..n).all(|i| m & (1 << i) == 0 || (i + 1..n).all(|j| m & (1 << j) == 0 || adj[i][j]))
        };
        let mut out = Vec::new();
        for m in 1u32..(1 << n) {
            if is_clique(m) && (0..n).all(|v| m & (1 << v) != 0 || !is_clique(m | (1 << v))) {
                out.push((0..n).filter(|&i| m & (1 << i) != 0).collect());
            }
        }
        out.sort();
        out
    }

    proptest! {
        #[test]
        fn agrees_with_subset_enumeration(n in 1usize..9, bits in proptest::collection::vec(any::<bool>(), 36)) {
            let mut adj = vec![vec![false; n]; n];
            let mut k = 0;
            for i in 0..n {
                for j in i + 1..n {
                    adj[i][j] = bits[k];
                    adj[j][i] = bits[k];
                    k += 1;
                }
            }
            prop_assert_eq!(maximal_cliques(&adj), brute(&adj));
        }
    }
}
