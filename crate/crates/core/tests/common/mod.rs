#![allow(dead_code)]

use crosscap_core::perm::Permutation;
use rand::Rng;

/// Every permutation of `m` points, in lexicographic order of images.
pub fn all_permutations(m: usize) -> Vec<Permutation> {
    let mut out = Vec::new();
    let mut current: Vec<u32> = (0..m as u32).collect();
    loop {
        out.push(Permutation::from_images(current.clone()).unwrap());
        let Some(i) = (1..m).rev().find(|&i| current[i - 1] < current[i]) else { break };
        let j = (i..m).rev().find(|&j| current[j] > current[i - 1]).unwrap();
        current.swap(i - 1, j);
        current[i..].reverse();
    }
    out
}

pub fn random_permutation<R: Rng>(rng: &mut R, m: usize) -> Permutation {
    let mut images: Vec<u32> = (0..m as u32).collect();
    for i in (1..m).rev() {
        images.swap(i, rng.gen_range(0..=i));
    }
    Permutation::from_images(images).unwrap()
}

/// All elements of `<gens>` by breadth-first closure.
pub fn closure_elements(m: usize, gens: &[Permutation]) -> Vec<Permutation> {
    let mut seen = std::collections::BTreeSet::new();
    let id = Permutation::identity(m);
    seen.insert(id.clone());
    let mut queue = vec![id];
    while let Some(x) = queue.pop() {
        for g in gens {
            let y = g.compose(&x);
            if seen.insert(y.clone()) {
                queue.push(y);
            }
        }
    }
    seen.into_iter().collect()
}

pub fn p(text: &str, m: usize) -> Permutation {
    Permutation::parse_cycles(text, m).unwrap()
}
