//! Group and graph generators shared by the integration tests. Everything
//! here is built independently of the crate's own constructors.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap};

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use sgb_core::group::parse_cayley_text;
use sgb_core::FiniteGroup;

pub type Perm = Vec<usize>;

fn compose(a: &Perm, b: &Perm) -> Perm {
    // (a·b)(i) = a(b(i))
    b.iter().map(|&i| a[i]).collect()
}

/// Cayley table of the permutation group generated by `gens`, elements
/// indexed in discovery order from the identity.
pub fn permutation_group(degree: usize, gens: &[Perm]) -> Vec<Vec<usize>> {
    let identity: Perm = (0..degree).collect();
    let mut elements = vec![identity.clone()];
    let mut index: HashMap<Perm, usize> = HashMap::from([(identity, 0)]);
    let mut i = 0;
    while i < elements.len() {
        for g in gens {
            let next = compose(&elements[i], g);
            if !index.contains_key(&next) {
                index.insert(next.clone(), elements.len());
                elements.push(next);
            }
        }
        i += 1;
    }
    elements.iter().map(|x| elements.iter().map(|y| index[&compose(x, y)]).collect()).collect()
}

pub fn cyclic_table(n: usize) -> Vec<Vec<usize>> {
    (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect()
}

pub fn direct_product(a: &[Vec<usize>], b: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let (na, nb) = (a.len(), b.len());
    (0..na * nb)
        .map(|x| (0..na * nb).map(|y| a[x / nb][y / nb] * nb + b[x % nb][y % nb]).collect())
        .collect()
}

/// Same group with elements renamed by `perm` (old index `i` becomes `perm[i]`).
pub fn relabel(table: &[Vec<usize>], perm: &[usize]) -> Vec<Vec<usize>> {
    let n = table.len();
    let mut out = vec![vec![0; n]; n];
    for x in 0..n {
        for y in 0..n {
            out[perm[x]][perm[y]] = perm[table[x][y]];
        }
    }
    out
}

pub fn alternating4() -> Vec<Vec<usize>> {
    permutation_group(4, &[vec![1, 2, 0, 3], vec![1, 0, 3, 2]])
}

pub fn symmetric4() -> Vec<Vec<usize>> {
    permutation_group(4, &[vec![1, 2, 3, 0], vec![1, 0, 2, 3]])
}

/// Dihedral group of order `2n` as symmetries of the `n`-gon.
pub fn dihedral_perm(n: usize) -> Vec<Vec<usize>> {
    let rotation: Perm = (0..n).map(|i| (i + 1) % n).collect();
    let reflection: Perm = (0..n).map(|i| (n - i) % n).collect();
    permutation_group(n, &[rotation, reflection])
}

/// The quaternion group as 2×2 matrices over the Gaussian integers,
/// closed under multiplication.
pub fn quaternion_matrices() -> Vec<Vec<usize>> {
    type C = (i64, i64);
    type M = [C; 4];
    fn mul(a: &M, b: &M) -> M {
        let cm = |x: C, y: C| (x.0 * y.0 - x.1 * y.1, x.0 * y.1 + x.1 * y.0);
        let ca = |x: C, y: C| (x.0 + y.0, x.1 + y.1);
        [
            ca(cm(a[0], b[0]), cm(a[1], b[2])),
            ca(cm(a[0], b[1]), cm(a[1], b[3])),
            ca(cm(a[2], b[0]), cm(a[3], b[2])),
            ca(cm(a[2], b[1]), cm(a[3], b[3])),
        ]
    }
    let one: M = [(1, 0), (0, 0), (0, 0), (1, 0)];
    let i: M = [(0, 1), (0, 0), (0, 0), (0, -1)];
    let j: M = [(0, 0), (1, 0), (-1, 0), (0, 0)];
    let mut elements = vec![one];
    let mut k = 0;
    while k < elements.len() {
        for g in [&i, &j] {
            let next = mul(&elements[k], g);
            if !elements.contains(&next) {
                elements.push(next);
            }
        }
        k += 1;
    }
    let pos = |m: &M| elements.iter().position(|e| e == m).unwrap();
    elements.iter().map(|x| elements.iter().map(|y| pos(&mul(x, y))).collect()).collect()
}

/// Writes `table` (relabeled at random) to a Cayley file and reads it back.
pub fn through_cayley_file(table: &[Vec<usize>], rng: &mut StdRng) -> FiniteGroup {
    let mut perm: Vec<usize> = (0..table.len()).collect();
    perm.shuffle(rng);
    let g = FiniteGroup::from_cayley_table(&relabel(table, &perm)).unwrap();
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("group.txt");
    std::fs::write(&path, g.to_cayley_text()).unwrap();
    let text = std::fs::read_to_string(&path).unwrap();
    parse_cayley_text(&text).unwrap()
}

/// Every group of order at most 12, up to isomorphism.
pub fn all_groups_up_to_12() -> Vec<(String, FiniteGroup)> {
    let c = cyclic_table;
    let mut tables: Vec<(String, Vec<Vec<usize>>)> = (1..=12).map(|n| (format!("C{n}"), c(n))).collect();
    tables.extend([
        ("C2xC2".to_string(), direct_product(&c(2), &c(2))),
        ("S3".to_string(), dihedral_perm(3)),
        ("C2xC4".to_string(), direct_product(&c(2), &c(4))),
        ("C2xC2xC2".to_string(), direct_product(&direct_product(&c(2), &c(2)), &c(2))),
        ("D8".to_string(), dihedral_perm(4)),
        ("Q8".to_string(), quaternion_matrices()),
        ("C3xC3".to_string(), direct_product(&c(3), &c(3))),
        ("D10".to_string(), dihedral_perm(5)),
        ("C2xC6".to_string(), direct_product(&c(2), &c(6))),
        ("D12".to_string(), dihedral_perm(6)),
        ("A4".to_string(), alternating4()),
        ("Dic3".to_string(), FiniteGroup::dicyclic(3).unwrap().table()),
    ]);
    tables.into_iter().map(|(name, t)| (name, FiniteGroup::from_cayley_table(&t).unwrap())).collect()
}

/// Twenty small groups of order at most 24: built-in families plus
/// Cayley-file samples.
pub fn property_sample(seed: u64) -> Vec<(String, FiniteGroup)> {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut out: Vec<(String, FiniteGroup)> = Vec::new();
    for n in [1, 5, 12, 24] {
        out.push((format!("C{n}"), FiniteGroup::cyclic(n).unwrap()));
    }
    for n in [3, 4, 5, 12] {
        out.push((format!("D{}", 2 * n), FiniteGroup::dihedral(n).unwrap()));
    }
    for m in [2, 3, 4, 6] {
        out.push((format!("Q{}", 4 * m), FiniteGroup::dicyclic(m).unwrap()));
    }
    let c = cyclic_table;
    let files: Vec<(&str, Vec<Vec<usize>>)> = vec![
        ("C2xC2xC2", direct_product(&direct_product(&c(2), &c(2)), &c(2))),
        ("C2xC4", direct_product(&c(2), &c(4))),
        ("C3xC3", direct_product(&c(3), &c(3))),
        ("C2xC6", direct_product(&c(2), &c(6))),
        ("A4", alternating4()),
        ("S4", symmetric4()),
        ("C2xS3", direct_product(&c(2), &dihedral_perm(3))),
        ("C2xQ8", direct_product(&c(2), &quaternion_matrices())),
    ];
    for (name, t) in files {
        out.push((format!("{name} (file)"), through_cayley_file(&t, &mut rng)));
    }
    out
}

/// Exhaustive subgroup oracle: every subset containing the identity that is
/// closed under multiplication.
pub fn subgroups_by_subsets(g: &FiniteGroup) -> BTreeSet<Vec<usize>> {
    let n = g.order();
    assert!(n <= 16, "2^n subsets");
    let t = g.table();
    let e = g.identity().index();
    let mut out = BTreeSet::new();
    for mask in 0u32..(1 << n) {
        if mask & (1 << e) == 0 {
            continue;
        }
        let members: Vec<usize> = (0..n).filter(|&i| mask & (1 << i) != 0).collect();
        if members.iter().all(|&x| members.iter().all(|&y| mask & (1 << t[x][y]) != 0)) {
            out.insert(members);
        }
    }
    out
}

/// Random simple graph as a 0/1 matrix.
#[allow(clippy::needless_range_loop)]
pub fn random_graph(rng: &mut StdRng, n: usize, density: f64) -> Vec<Vec<f64>> {
    let mut a = vec![vec![0.0; n]; n];
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(density) {
                a[i][j] = 1.0;
                a[j][i] = 1.0;
            }
        }
    }
    a
}

/// Common-neighbor counts by direct enumeration.
pub fn count_common_neighbors(a: &[Vec<f64>]) -> Vec<Vec<f64>> {
    let n = a.len();
    let mut out = vec![vec![0.0; n]; n];
    for i in 0..n {
        for j in 0..n {
            if i != j {
                out[i][j] = (0..n).filter(|&k| k != i && k != j && a[i][k] == 1.0 && a[j][k] == 1.0).count() as f64;
            }
        }
    }
    out
}
