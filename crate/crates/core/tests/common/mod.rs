//! Brute-force oracles. Everything here works from the multiplication table
//! alone and shares no code with the library's subgroup machinery.

#![allow(dead_code)]

use std::collections::BTreeSet;

use cdlab_core::Group;

pub type Elements = Vec<usize>;

pub fn identity(g: &Group) -> usize {
    (0..g.order())
        .find(|&e| (0..g.order()).all(|x| g.mul(e, x) == x))
        .expect("group has an identity")
}

pub fn inverse(g: &Group, x: usize) -> usize {
    let e = identity(g);
    (0..g.order()).find(|&y| g.mul(x, y) == e).expect("inverse")
}

fn closed(g: &Group, set: &[usize], member: &[bool]) -> bool {
    set.iter()
        .all(|&a| set.iter().all(|&b| member[g.mul(a, b)]))
}

/// Every subset containing the identity and closed under multiplication.
/// Exponential in `|G|`; meant for orders up to 16.
pub fn closed_subsets(g: &Group) -> BTreeSet<Elements> {
    let n = g.order();
    assert!(n <= 20, "subset oracle is exponential");
    let e = identity(g);
    let others: Vec<usize> = (0..n).filter(|&x| x != e).collect();
    let mut out = BTreeSet::new();
    let mut member = vec![false; n];
    for bits in 0u64..(1u64 << others.len()) {
        let mut set = vec![e];
        set.extend(
            others
                .iter()
                .enumerate()
                .filter(|(i, _)| bits >> i & 1 == 1)
                .map(|(_, &x)| x),
        );
        member.iter_mut().for_each(|m| *m = false);
        for &x in &set {
            member[x] = true;
        }
        if closed(g, &set, &member) {
            set.sort_unstable();
            out.insert(set);
        }
    }
    out
}

/// Subgroup generated by `gens`, by breadth-first right multiplication.
pub fn generated(g: &Group, gens: &[usize]) -> Elements {
    let e = identity(g);
    let mut seen = vec![false; g.order()];
    seen[e] = true;
    let mut queue = vec![e];
    let mut i = 0;
    while i < queue.len() {
        let x = queue[i];
        i += 1;
        for &s in gens {
            let y = g.mul(x, s);
            if !seen[y] {
                seen[y] = true;
                queue.push(y);
            }
        }
    }
    queue.sort_unstable();
    queue
}

/// Subgroups generated by at most two elements. Complete whenever every
/// subgroup of `G` is 2-generated (true for A5, SL(2,5), groups of order
/// p^3 and all groups of order at most 16 except rank-3 and rank-4
/// elementary abelian sections).
pub fn two_generated_subgroups(g: &Group) -> BTreeSet<Elements> {
    let n = g.order();
    let mut out = BTreeSet::new();
    for x in 0..n {
        for y in x..n {
            out.insert(generated(g, &[x, y]));
        }
    }
    out
}

pub fn centralizer(g: &Group, h: &[usize]) -> Elements {
    (0..g.order())
        .filter(|&x| h.iter().all(|&y| g.mul(x, y) == g.mul(y, x)))
        .collect()
}

pub fn center(g: &Group) -> Elements {
    centralizer(g, &(0..g.order()).collect::<Vec<_>>())
}

pub fn is_normal(g: &Group, h: &[usize]) -> bool {
    let mut member = vec![false; g.order()];
    for &x in h {
        member[x] = true;
    }
    (0..g.order()).all(|t| {
        let ti = inverse(g, t);
        h.iter().all(|&x| member[g.mul(g.mul(ti, x), t)])
    })
}

pub fn is_abelian(g: &Group, h: &[usize]) -> bool {
    h.iter().all(|&a| h.iter().all(|&b| g.mul(a, b) == g.mul(b, a)))
}

/// `|G:H| * |G:C(H)|`.
pub fn measure(g: &Group, h: &[usize]) -> u64 {
    let n = g.order() as u64;
    (n / h.len() as u64) * (n / centralizer(g, h).len() as u64)
}

pub fn mu(g: &Group, subgroups: &BTreeSet<Elements>) -> u64 {
    subgroups.iter().map(|h| measure(g, h)).min().expect("nonempty")
}

pub fn cd_set(g: &Group, subgroups: &BTreeSet<Elements>) -> BTreeSet<Elements> {
    let m = mu(g, subgroups);
    subgroups
        .iter()
        .filter(|h| measure(g, h) == m)
        .cloned()
        .collect()
}

/// Least index of a normal abelian subgroup.
pub fn min_normal_abelian_index(g: &Group, subgroups: &BTreeSet<Elements>) -> u64 {
    subgroups
        .iter()
        .filter(|h| is_abelian(g, h) && is_normal(g, h))
        .map(|h| (g.order() / h.len()) as u64)
        .min()
        .expect("trivial subgroup is normal abelian")
}

fn element_order(g: &Group, x: usize) -> usize {
    let e = identity(g);
    let mut y = x;
    let mut k = 1;
    while y != e {
        y = g.mul(y, x);
        k += 1;
    }
    k
}

fn primes_dividing(n: usize) -> Vec<usize> {
    (2..=n)
        .filter(|&p| n.is_multiple_of(p) && (2..p).all(|d| p % d != 0))
        .collect()
}

fn is_power_of(mut k: usize, p: usize) -> bool {
    while k.is_multiple_of(p) {
        k /= p;
    }
    k == 1
}

/// A finite group is nilpotent iff for each prime `p` its p-elements form a
/// subgroup. Applied to the subgroup `h` as a group in its own right.
pub fn is_nilpotent(g: &Group, h: &[usize]) -> bool {
    let mut member = vec![false; g.order()];
    for &x in h {
        member[x] = true;
    }
    primes_dividing(h.len()).into_iter().all(|p| {
        let pel: Vec<usize> = h
            .iter()
            .copied()
            .filter(|&x| is_power_of(element_order(g, x), p))
            .collect();
        let mut in_p = vec![false; g.order()];
        for &x in &pel {
            in_p[x] = true;
        }
        closed(g, &pel, &in_p)
    })
}

/// Normal `H` with a normal `K` such that `H ∩ K = 1` and `|H||K| = |G|`.
pub fn direct_factors(g: &Group, subgroups: &BTreeSet<Elements>) -> BTreeSet<Elements> {
    let normals: Vec<&Elements> = subgroups.iter().filter(|h| is_normal(g, h)).collect();
    normals
        .iter()
        .filter(|h| {
            normals.iter().any(|k| {
                h.len() * k.len() == g.order() && h.iter().filter(|x| k.contains(x)).count() == 1
            })
        })
        .map(|h| (*h).clone())
        .collect()
}

/// 2x2 matrices over F_p with determinant 1, multiplied directly.
pub fn sl2(p: usize) -> Group {
    let mut mats = Vec::new();
    for a in 0..p {
        for b in 0..p {
            for c in 0..p {
                for d in 0..p {
                    if (a * d + p * p - (b * c) % p) % p == 1 {
                        mats.push([a, b, c, d]);
                    }
                }
            }
        }
    }
    let identity = mats.iter().position(|m| *m == [1, 0, 0, 1]).unwrap();
    mats.swap(0, identity);
    let index = |m: [usize; 4]| mats.iter().position(|x| *x == m).unwrap();
    let n = mats.len();
    let table: Vec<Vec<usize>> = (0..n)
        .map(|i| {
            let [a, b, c, d] = mats[i];
            (0..n)
                .map(|j| {
                    let [e, f, g, h] = mats[j];
                    index([
                        (a * e + b * g) % p,
                        (a * f + b * h) % p,
                        (c * e + d * g) % p,
                        (c * f + d * h) % p,
                    ])
                })
                .collect()
        })
        .collect();
    Group::from_cayley_table(&table).expect("matrix group table")
}

pub fn order_histogram(g: &Group) -> Vec<(usize, usize)> {
    let mut counts = std::collections::BTreeMap::new();
    for x in 0..g.order() {
        *counts.entry(element_order(g, x)).or_insert(0) += 1;
    }
    counts.into_iter().collect()
}
