#![allow(dead_code)]

use kostka::{Partition, SymmetricGroupContext};

pub fn p(parts: &[usize]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}

pub fn ctx(n: usize) -> SymmetricGroupContext {
    SymmetricGroupContext::new(n).unwrap()
}

pub const S3_FROBENIUS: [[i64; 3]; 3] = [[1, 1, 1], [0, 1, 3], [0, 0, 6]];
pub const S3_KOSTKA: [[i64; 3]; 3] = [[1, 0, 0], [1, 1, 0], [1, 2, 1]];
pub const S3_INVERSE: [[i64; 3]; 3] = [[1, 0, 0], [-1, 1, 0], [1, -2, 1]];
pub const S3_CHARACTERS: [[i64; 3]; 3] = [[1, 1, 1], [-1, 0, 2], [1, -1, 1]];

pub const S5_FROBENIUS: [[i64; 7]; 7] = [
    [1, 1, 1, 1, 1, 1, 1],
    [0, 1, 0, 2, 1, 3, 5],
    [0, 0, 1, 1, 2, 4, 10],
    [0, 0, 0, 2, 0, 6, 20],
    [0, 0, 0, 0, 2, 6, 30],
    [0, 0, 0, 0, 0, 6, 60],
    [0, 0, 0, 0, 0, 0, 120],
];

pub const S5_KOSTKA: [[i64; 7]; 7] = [
    [1, 0, 0, 0, 0, 0, 0],
    [1, 1, 0, 0, 0, 0, 0],
    [1, 1, 1, 0, 0, 0, 0],
    [1, 2, 1, 1, 0, 0, 0],
    [1, 2, 2, 1, 1, 0, 0],
    [1, 3, 3, 3, 2, 1, 0],
    [1, 4, 5, 6, 5, 4, 1],
];

pub const S5_INVERSE: [[i64; 7]; 7] = [
    [1, 0, 0, 0, 0, 0, 0],
    [-1, 1, 0, 0, 0, 0, 0],
    [0, -1, 1, 0, 0, 0, 0],
    [1, -1, -1, 1, 0, 0, 0],
    [0, 1, -1, -1, 1, 0, 0],
    [-1, 1, 2, -1, -2, 1, 0],
    [1, -2, -2, 3, 3, -4, 1],
];

pub const S5_CHARACTERS: [[i64; 7]; 7] = [
    [1, 1, 1, 1, 1, 1, 1],
    [-1, 0, -1, 1, 0, 2, 4],
    [0, -1, 1, -1, 1, 1, 5],
    [1, 0, 0, 0, -2, 0, 6],
    [0, 1, -1, -1, 1, -1, 5],
    [-1, 0, 1, 1, 0, -2, 4],
    [1, -1, -1, 1, 1, -1, 1],
];

pub fn rows<const K: usize>(t: &[[i64; K]; K]) -> Vec<Vec<i64>> {
    t.iter().map(|r| r.to_vec()).collect()
}

fn next_permutation(v: &mut [usize]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        return false;
    };
    let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).unwrap();
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

pub fn all_permutations(n: usize) -> Vec<Vec<usize>> {
    let mut v: Vec<usize> = (0..n).collect();
    let mut out = vec![v.clone()];
    while next_permutation(&mut v) {
        out.push(v.clone());
    }
    out
}

pub fn cycle_type_of(perm: &[usize]) -> Partition {
    let mut seen = vec![false; perm.len()];
    let mut lens = Vec::new();
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            x = perm[x];
            len += 1;
        }
        lens.push(len);
    }
    Partition::from_unsorted(lens)
}

/// Compound characters by walking every permutation of `S_n`: `h_l` counts
/// the permutations that preserve the blocks of `λ`, and
/// `φ = n! h_l / (|C_l| |S_λ|)`.
pub fn brute_force_frobenius(n: usize) -> Vec<Vec<i64>> {
    let parts = kostka::partitions::partitions_of(n).unwrap();
    let perms = all_permutations(n);
    let types: Vec<Partition> = perms.iter().map(|s| cycle_type_of(s)).collect();
    let class_size = |l: &Partition| types.iter().filter(|t| *t == l).count() as i64;
    let order = perms.len() as i64;
    let mut table = Vec::new();
    for lam in &parts {
        let mut block = Vec::with_capacity(n);
        for (b, &size) in lam.parts().iter().enumerate() {
            block.extend(std::iter::repeat_n(b, size));
        }
        let in_subgroup: Vec<usize> =
            (0..perms.len()).filter(|&i| (0..n).all(|x| block[perms[i][x]] == block[x])).collect();
        let h = in_subgroup.len() as i64;
        let row = parts
            .iter()
            .map(|l| {
                let h_l = in_subgroup.iter().filter(|&&i| &types[i] == l).count() as i64;
                assert_eq!((order * h_l) % (class_size(l) * h), 0);
                order * h_l / (class_size(l) * h)
            })
            .collect();
        table.push(row);
    }
    table
}

/// Irreducible character by the Murnaghan-Nakayama rule on beta-sets.
pub fn murnaghan_nakayama(lam: &[usize], rho: &[usize]) -> i64 {
    let len = lam.len();
    let beta: Vec<usize> = lam.iter().enumerate().map(|(i, &v)| v + len - 1 - i).collect();
    mn_beta(&beta, rho)
}

fn mn_beta(beta: &[usize], rho: &[usize]) -> i64 {
    let Some((&r, rest)) = rho.split_first() else {
        return 1;
    };
    let mut total = 0;
    for (idx, &b) in beta.iter().enumerate() {
        if b < r || beta.contains(&(b - r)) {
            continue;
        }
        let between = beta.iter().filter(|&&c| c > b - r && c < b).count();
        let mut next = beta.to_vec();
        next[idx] = b - r;
        let sign = if between % 2 == 0 { 1 } else { -1 };
        total += sign * mn_beta(&next, rest);
    }
    total
}

pub fn murnaghan_nakayama_table(n: usize) -> Vec<Vec<i64>> {
    let parts = kostka::partitions::partitions_of(n).unwrap();
    parts
        .iter()
        .map(|lam| parts.iter().map(|l| murnaghan_nakayama(lam.parts(), l.parts())).collect())
        .collect()
}
