//! Checkable statements about CD-subgroups, each producing a
//! [`TheoremReport`] with concrete witnesses.
//!
//! Every check runs off a shared [`Analysis`] so the subgroup list and the
//! centralizers are computed once per group.

use std::collections::HashMap;

use crate::analysis::Analysis;
use crate::arith::{prime_power, smallest_prime_factor};
use crate::group::Group;
use crate::lattice::{extremal, CdLattice, CdMeasure};
use crate::report::{TheoremId, TheoremReport};
use crate::subgroup::{Subgroup, SubgroupSet};

fn report(a: &Analysis, id: TheoremId) -> TheoremReport {
    TheoremReport::new(a.group().display_label(), a.group().order(), id)
}

/// Smallest `|G:N|` over normal abelian `N`, with the first witness in
/// `(order, mask)` order among those attaining it.
pub fn min_normal_abelian_index(a: &Analysis) -> (u64, usize) {
    let mut best = 0;
    for i in 0..a.len() {
        if a.is_normal(i) && a.is_abelian(i) && a.subgroup(i).order() > a.subgroup(best).order() {
            best = i;
        }
    }
    ((a.group().order() / a.subgroup(best).order()) as u64, best)
}

/// Smallest `|G:A|` over all abelian `A`.
pub fn min_abelian_index(a: &Analysis) -> (u64, usize) {
    let mut best = 0;
    for i in 0..a.len() {
        if a.is_abelian(i) && a.subgroup(i).order() > a.subgroup(best).order() {
            best = i;
        }
    }
    ((a.group().order() / a.subgroup(best).order()) as u64, best)
}

/// Checks every lattice property of the CD-subgroups: permutability,
/// closure under join, meet and centralizer, the double-centralizer
/// identity, order reversal, subnormality and the top/bottom relations.
pub fn verify_theorem1(a: &Analysis) -> TheoremReport {
    let mut r = report(a, TheoremId::T1);
    let g = a.group();
    let members = a.cd_indices();
    let mut is_member = vec![false; a.len()];
    for &i in &members {
        is_member[i] = true;
    }
    r.integer("mu", a.mu()).integer("members", members.len() as u64);

    let mut checks: Vec<(&str, bool)> = Vec::new();
    let mut counterexample: Option<(&str, usize, usize)> = None;
    let mut check = |name: &'static str, ok: bool, h: usize, k: usize, checks: &mut Vec<(&str, bool)>| {
        if let Some(entry) = checks.iter_mut().find(|(n, _)| *n == name) {
            entry.1 &= ok;
        } else {
            checks.push((name, ok));
        }
        if !ok && counterexample.is_none() {
            counterexample = Some((name, h, k));
        }
    };

    for (x, &i) in members.iter().enumerate() {
        let h = a.subgroup(i);
        for &j in &members[x..] {
            let k = a.subgroup(j);
            let hk = h.set_product(g, k);
            let kh = k.set_product(g, h);
            check("product_permutes", hk == kh, i, j, &mut checks);
            let join = h.join(g, k);
            let join_idx = a.index_of(join.mask()).expect("join is a subgroup");
            check(
                "join_is_product_and_member",
                &hk == join.mask() && is_member[join_idx],
                i,
                j,
                &mut checks,
            );
            let meet_idx = a
                .index_of(&h.mask().intersection(k.mask()))
                .expect("meet is a subgroup");
            check("meet_is_member", is_member[meet_idx], i, j, &mut checks);
            let c_prod = a.centralizer(i).set_product(g, a.centralizer(j));
            check(
                "centralizer_of_meet_is_product",
                a.centralizer(meet_idx).mask() == &c_prod,
                i,
                j,
                &mut checks,
            );
            if h.is_subgroup_of(k) || k.is_subgroup_of(h) {
                let (lo, hi) = if h.is_subgroup_of(k) { (i, j) } else { (j, i) };
                check(
                    "duality_reverses_order",
                    a.centralizer(hi).is_subgroup_of(a.centralizer(lo)),
                    lo,
                    hi,
                    &mut checks,
                );
            }
        }
        let c = a.centralizer_index(i);
        check("centralizer_is_member", is_member[c], i, c, &mut checks);
        check(
            "double_centralizer",
            a.centralizer_index(c) == i,
            i,
            c,
            &mut checks,
        );
        check("subnormal", g.is_subnormal(h), i, i, &mut checks);
        check(
            "permutes_with_conjugates",
            g.permutes_with_conjugates(h),
            i,
            i,
            &mut checks,
        );
    }

    let list: Vec<Subgroup> = members.iter().map(|&i| a.subgroup(i).clone()).collect();
    let tops = extremal(&list, true);
    let bottoms = extremal(&list, false);
    let unique = tops.len() == 1 && bottoms.len() == 1;
    check(
        "unique_top_and_bottom",
        unique,
        members[tops[0]],
        members[bottoms[0]],
        &mut checks,
    );
    if unique {
        let top = members[tops[0]];
        let bottom = members[bottoms[0]];
        let top_center = a
            .index_of(&a.subgroup(top).mask().intersection(a.centralizer(top).mask()))
            .expect("center of a subgroup is a subgroup");
        check(
            "bottom_is_center_of_top",
            top_center == bottom && a.centralizer_index(top) == bottom,
            bottom,
            top,
            &mut checks,
        );
        check(
            "top_is_centralizer_of_bottom",
            a.centralizer_index(bottom) == top,
            top,
            bottom,
            &mut checks,
        );
        r.subgroup("top", a.subgroup(top)).subgroup("bottom", a.subgroup(bottom));
    }

    for (name, ok) in &checks {
        r.flag(format!("check:{name}"), *ok);
    }
    if let Some((name, h, k)) = counterexample {
        r.subgroup("counterexample_h", a.subgroup(h))
            .subgroup("counterexample_k", a.subgroup(k));
        r.fail(format!("sub-check {name} failed"));
    } else {
        r.note(format!("{} sub-checks passed", checks.len()));
    }
    r
}

/// The lattice bottom is a normal abelian subgroup of index at most mu.
/// Normality stands in for characteristic-ness, which needs automorphisms.
pub fn verify_corollary2(a: &Analysis) -> TheoremReport {
    let mut r = report(a, TheoremId::C2);
    r.note("characteristic checked as normal only");
    let lattice = match CdLattice::build(a) {
        Ok(l) => l,
        Err(e) => {
            r.fail(e.to_string());
            return r;
        }
    };
    let bottom = a.index_of(lattice.bottom().mask()).expect("member");
    let index = (a.group().order() / lattice.bottom().order()) as u64;
    r.subgroup("bottom", lattice.bottom())
        .integer("index", index)
        .integer("mu", a.mu());
    if !a.is_abelian(bottom) {
        r.fail("lattice bottom is not abelian");
    }
    if !a.is_normal(bottom) {
        r.fail("lattice bottom is not normal");
    }
    if index > a.mu() {
        r.fail(format!("index {index} exceeds mu {}", a.mu()));
    }
    r
}

/// When `G/Z(G)` is non-abelian simple, the only CD-subgroups are `G` and
/// `Z(G)` and `mu = |G:Z(G)|`.
pub fn verify_corollary3(a: &Analysis) -> TheoremReport {
    let r = report(a, TheoremId::C3);
    let q = &a.center_quotient().group;
    if q.is_abelian() || !q.is_simple() {
        return r.not_applicable("G/Z(G) is not a non-abelian simple group");
    }
    let mut r = r;
    let center_index = (a.group().order() / a.center().order()) as u64;
    let cd = a.cd_indices();
    r.integer("mu", a.mu())
        .integer("center_index", center_index)
        .integer("cd_subgroups", cd.len() as u64)
        .subgroup("center", a.center());
    let mut expected = vec![a.center_index(), a.full_index()];
    expected.sort();
    if cd != expected {
        let extra = cd.iter().find(|i| !expected.contains(i)).copied();
        if let Some(i) = extra {
            r.subgroup("unexpected_cd_subgroup", a.subgroup(i));
        }
        r.fail("CD-subgroups are not exactly {G, Z(G)}");
    }
    if a.mu() != center_index {
        r.fail(format!("mu {} differs from |G:Z(G)| = {center_index}", a.mu()));
    }
    r
}

/// Normal subgroups `H` with a normal complement: some normal `K` with
/// `H ∩ K = 1` and `HK = G`.
pub fn direct_factors(group: &Group, normals: &SubgroupSet) -> SubgroupSet {
    let n = group.order();
    let list = normals.as_slice();
    let factors = list
        .iter()
        .filter(|h| {
            list.iter().any(|k| {
                h.order() * k.order() == n && h.mask().intersection(k.mask()).count() == 1
            })
        })
        .cloned()
        .collect();
    SubgroupSet::new(group, factors)
}

fn fitting_from(a: &Analysis) -> Subgroup {
    let g = a.group();
    (0..a.len())
        .filter(|&i| a.is_normal(i) && a.is_nilpotent(i))
        .fold(Subgroup::trivial(g), |acc, i| acc.join(g, a.subgroup(i)))
}

/// With trivial Fitting subgroup, the CD-subgroups are exactly the direct
/// factors.
pub fn verify_theorem4(a: &Analysis) -> TheoremReport {
    let r = report(a, TheoremId::T4);
    let g = a.group();
    let fitting = fitting_from(a);
    if !fitting.is_trivial() {
        return r.not_applicable(format!("Fitting subgroup has order {}", fitting.order()));
    }
    let mut r = r;
    let normals: Vec<Subgroup> = (0..a.len())
        .filter(|&i| a.is_normal(i))
        .map(|i| a.subgroup(i).clone())
        .collect();
    let factors = direct_factors(g, &SubgroupSet::new(g, normals));
    let cd: Vec<Subgroup> = a.cd_indices().into_iter().map(|i| a.subgroup(i).clone()).collect();
    r.integer("mu", a.mu())
        .integer("direct_factors", factors.len() as u64)
        .integer("cd_subgroups", cd.len() as u64);
    for h in factors.iter().filter(|h| !h.is_trivial() && h.order() < g.order()) {
        r.subgroup("factor", h);
    }
    if factors.as_slice() != cd.as_slice() {
        if let Some(h) = cd.iter().find(|h| !factors.contains(h.mask())) {
            r.subgroup("cd_not_factor", h);
        }
        if let Some(h) = factors.iter().find(|h| !cd.contains(h)) {
            r.subgroup("factor_not_cd", h);
        }
        r.fail("CD-subgroups differ from direct factors");
    }
    r
}

/// The `t4` check for groups too large to enumerate: only normal subgroups
/// (joins of conjugacy-class closures) are candidates.
///
/// Passes when the proper direct factors all share one measure value,
/// that value is the least measure among normal and cyclic subgroups, and
/// no normal non-factor attains it. The report is marked restricted.
pub fn verify_theorem4_restricted(group: &Group) -> TheoremReport {
    let mut r = TheoremReport::new(group.display_label(), group.order(), TheoremId::T4);
    r.restricted = true;
    let normals = group.normal_subgroups();
    let fitting = normals
        .iter()
        .filter(|n| group.is_nilpotent_subgroup(n))
        .fold(Subgroup::trivial(group), |acc, n| acc.join(group, n));
    if !fitting.is_trivial() {
        let mut r = r.not_applicable(format!("Fitting subgroup has order {}", fitting.order()));
        r.restricted = true;
        return r;
    }
    let n = group.order() as u64;
    let measure = |h: &Subgroup| -> CdMeasure {
        CdMeasure::new(group.order(), h.order(), group.centralizer(h).order())
    };
    let factors = direct_factors(group, &normals);
    let normal_values: Vec<u64> = normals.iter().map(|h| measure(h).value).collect();
    let best_normal = normal_values.iter().copied().min().unwrap_or(n);

    // m(<x>) = |G:<x>| * |class(x)|, since C(<x>) = C(x).
    let mut best_cyclic = u64::MAX;
    for class in group.conjugacy_classes() {
        for &x in &class {
            let v = (n / group.elem_order(x) as u64) * class.len() as u64;
            best_cyclic = best_cyclic.min(v);
        }
    }

    r.integer("normal_subgroups", normals.len() as u64)
        .integer("direct_factors", factors.len() as u64)
        .integer("min_normal_measure", best_normal)
        .integer("min_cyclic_measure", best_cyclic);
    r.note("restricted: candidates are normal subgroups only");

    let mut factor_values = Vec::new();
    for h in factors.iter() {
        let v = measure(h).value;
        factor_values.push(v);
        if !h.is_trivial() && h.order() < group.order() {
            r.subgroup("factor", h);
        }
    }
    if factor_values.iter().any(|&v| v != best_normal) {
        r.fail("direct factors do not all attain the least normal measure");
    }
    if best_cyclic < best_normal {
        r.fail("a cyclic subgroup has smaller measure than every direct factor");
    }
    for (h, &v) in normals.iter().zip(&normal_values) {
        if v == best_normal && !factors.contains(h.mask()) {
            r.subgroup("non_factor_at_minimum", h);
            r.fail("a normal non-factor attains the least measure");
            break;
        }
    }
    r
}

/// For non-abelian `G`: every nilpotent `H != Z(G)` has
/// `m(G,H)` strictly above the least normal abelian index.
pub fn verify_theorem5(a: &Analysis) -> TheoremReport {
    let r = report(a, TheoremId::T5);
    if a.group().is_abelian() {
        return r.not_applicable("G is abelian");
    }
    let mut r = r;
    let (beta, witness) = min_normal_abelian_index(a);
    let center = a.center_index();
    let mut best: Option<(u64, usize)> = None;
    let mut violation = None;
    for i in 0..a.len() {
        if i == center || !a.is_nilpotent(i) {
            continue;
        }
        let v = a.measure(i).value;
        if best.is_none_or(|(b, _)| v < b) {
            best = Some((v, i));
        }
        if beta >= v && violation.is_none() {
            violation = Some(i);
        }
    }
    r.integer("beta", beta)
        .subgroup("normal_abelian", a.subgroup(witness));
    if let Some((v, i)) = best {
        r.integer("min_measure", v).subgroup("minimizing_h", a.subgroup(i));
    }
    if let Some(i) = violation {
        r.subgroup("counterexample_h", a.subgroup(i));
        r.fail(format!(
            "beta {beta} is not below m(G,H) = {}",
            a.measure(i).value
        ));
    }
    r
}

/// For non-abelian `G` with an abelian subgroup of index `n`, some normal
/// abelian subgroup has index at most `n^2 / p`, `p` the least prime
/// dividing `|G|`. Compared exactly as `beta * p <= n^2`.
pub fn verify_theorem5_corollary(a: &Analysis) -> TheoremReport {
    let r = report(a, TheoremId::T5Cor);
    if a.group().is_abelian() {
        return r.not_applicable("G is abelian");
    }
    let mut r = r;
    let (beta, witness) = min_normal_abelian_index(a);
    let (n, abelian) = min_abelian_index(a);
    let p = smallest_prime_factor(a.group().order()).expect("non-abelian group is nontrivial") as u64;
    let integral = (n * n) % p == 0;
    r.integer("beta", beta)
        .integer("n", n)
        .integer("p", p)
        .integer("bound_floor", n * n / p)
        .flag("bound_integral", integral)
        .subgroup("abelian", a.subgroup(abelian))
        .subgroup("normal_abelian", a.subgroup(witness));
    if !integral {
        r.note(format!("n^2/p = {}/{p} is not an integer", n * n));
    }
    if beta * p > n * n {
        r.fail(format!("beta {beta} exceeds n^2/p = {}/{p}", n * n));
    }
    r
}

/// Whether `HZ(G)/Z(G)` is cyclic for every abelian `H`; returns the first
/// counterexample otherwise.
pub fn small_abelian_subgroups(a: &Analysis) -> (bool, Option<usize>) {
    let q = a.center_quotient();
    for i in 0..a.len() {
        if !a.is_abelian(i) {
            continue;
        }
        let mut image: HashMap<usize, ()> = HashMap::new();
        for h in a.subgroup(i).mask().iter() {
            image.insert(q.coset_of[h], ());
        }
        let size = image.len();
        if !image.keys().any(|&x| q.group.elem_order(x) == size) {
            return (false, Some(i));
        }
    }
    (true, None)
}

/// Which of the three `t6` outcomes hold for a p-group.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Theorem6Cases {
    /// Some maximal subgroup is abelian.
    pub abelian_maximal: bool,
    /// `p` odd and `G/Z(G)` non-abelian of order `p^3` and exponent `p`.
    pub heisenberg_quotient: bool,
    /// Class 2 with small abelian subgroups.
    pub class_two_small_abelian: bool,
}

pub fn theorem6_cases(a: &Analysis, p: usize) -> Theorem6Cases {
    let g = a.group();
    let maximal_order = g.order() / p;
    let abelian_maximal =
        (0..a.len()).any(|i| a.subgroup(i).order() == maximal_order && a.is_abelian(i));
    let q = &a.center_quotient().group;
    let heisenberg_quotient =
        p % 2 == 1 && q.order() == p * p * p && !q.is_abelian() && q.exponent() == p;
    let class_two_small_abelian =
        g.central_series().nilpotency_class == Some(2) && small_abelian_subgroups(a).0;
    Theorem6Cases {
        abelian_maximal,
        heisenberg_quotient,
        class_two_small_abelian,
    }
}

/// A non-abelian p-group with least normal abelian index `mu/p` has an
/// abelian maximal subgroup, a Heisenberg central quotient, or class 2 with
/// small abelian subgroups.
pub fn classify_theorem6(a: &Analysis) -> TheoremReport {
    let r = report(a, TheoremId::T6);
    let g = a.group();
    let Some((p, _)) = prime_power(g.order()) else {
        return r.not_applicable("G is not a p-group");
    };
    if g.is_abelian() {
        return r.not_applicable("G is abelian");
    }
    let mu = a.mu();
    let (beta, witness) = min_normal_abelian_index(a);
    if !mu.is_multiple_of(p as u64) {
        let mut r = r;
        r.integer("mu", mu).integer("p", p as u64);
        r.fail(format!("mu {mu} is not divisible by p = {p}"));
        return r;
    }
    if beta != mu / p as u64 {
        let mut r = r.not_applicable(format!("beta {beta} differs from mu/p = {}", mu / p as u64));
        r.integer("mu", mu).integer("beta", beta);
        return r;
    }
    let mut r = r;
    let cases = theorem6_cases(a, p);
    r.integer("mu", mu)
        .integer("beta", beta)
        .integer("p", p as u64)
        .subgroup("normal_abelian", a.subgroup(witness))
        .flag("case_a", cases.abelian_maximal)
        .flag("case_b", cases.heisenberg_quotient)
        .flag("case_c", cases.class_two_small_abelian);
    r.note("small abelian subgroups read as HZ(G)/Z(G) cyclic");
    let held: Vec<&str> = [
        (cases.abelian_maximal, "a"),
        (cases.heisenberg_quotient, "b"),
        (cases.class_two_small_abelian, "c"),
    ]
    .into_iter()
    .filter_map(|(on, name)| on.then_some(name))
    .collect();
    if held.is_empty() {
        r.subgroup("center", a.center());
        r.fail("none of cases (a), (b), (c) holds");
    } else {
        r.note(format!("cases held: {}", held.join(",")));
    }
    r
}

/// The converse statements for non-abelian p-groups: `mu = p^2` exactly
/// when there is an abelian maximal subgroup, `mu = p^3` exactly when there
/// is none and `|G:Z(G)| = p^3`, `mu = p^4` forces `|G:Z(G)| = p^4` or an
/// abelian subgroup of index at most `p^2`, and `t6` cases (a)/(b)
/// force `beta = mu/p`.
pub fn verify_partial_converses(a: &Analysis) -> TheoremReport {
    let r = report(a, TheoremId::PConv);
    let g = a.group();
    let Some((p, _)) = prime_power(g.order()) else {
        return r.not_applicable("G is not a p-group");
    };
    if g.is_abelian() {
        return r.not_applicable("G is abelian");
    }
    let mut r = r;
    let p = p as u64;
    let mu = a.mu();
    let center_index = (g.order() / a.center().order()) as u64;
    let (beta, _) = min_normal_abelian_index(a);
    let (n, abelian) = min_abelian_index(a);
    let cases = theorem6_cases(a, p as usize);
    let has_abelian_maximal = cases.abelian_maximal;

    let first = (mu == p * p) == has_abelian_maximal;
    let second = (mu == p.pow(3)) == (!has_abelian_maximal && center_index == p.pow(3));
    let third = mu != p.pow(4) || center_index == p.pow(4) || n <= p * p;
    let fourth = !(cases.abelian_maximal || cases.heisenberg_quotient) || beta * p == mu;

    r.integer("mu", mu)
        .integer("p", p)
        .integer("center_index", center_index)
        .integer("min_abelian_index", n)
        .integer("beta", beta)
        .flag("abelian_maximal", has_abelian_maximal)
        .subgroup("largest_abelian", a.subgroup(abelian))
        .flag("check:mu_p2_iff_abelian_maximal", first)
        .flag("check:mu_p3_iff_no_abelian_maximal_and_center_index_p3", second)
        .flag("check:mu_p4_implies_center_index_p4_or_abelian_index_p2", third)
        .flag("check:cases_ab_imply_beta_mu_over_p", fourth);
    for (ok, what) in [
        (first, "mu = p^2 <=> abelian maximal subgroup"),
        (second, "mu = p^3 <=> no abelian maximal and |G:Z| = p^3"),
        (third, "mu = p^4 => |G:Z| = p^4 or abelian index <= p^2"),
        (fourth, "cases (a)/(b) => beta = mu/p"),
    ] {
        if !ok {
            r.subgroup("center", a.center());
            r.fail(format!("violated: {what}"));
        }
    }
    r
}

/// Runs one check against a prepared analysis.
pub fn run_check(a: &Analysis, id: TheoremId) -> TheoremReport {
    match id {
        TheoremId::T1 => verify_theorem1(a),
        TheoremId::C2 => verify_corollary2(a),
        TheoremId::C3 => verify_corollary3(a),
        TheoremId::T4 => verify_theorem4(a),
        TheoremId::T5 => verify_theorem5(a),
        TheoremId::T5Cor => verify_theorem5_corollary(a),
        TheoremId::T6 => classify_theorem6(a),
        TheoremId::PConv => verify_partial_converses(a),
    }
}
