//! Brute-force re-derivations of the structural identities on small
//! instances.
//!
//! Nothing here shares the fast paths it checks: trees and cycletrees come
//! from subset enumeration, windings from a full determinant rather than
//! cached cofactors, and `λ` is rebuilt from those.

use std::collections::BTreeSet;
use std::fmt::Debug;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::complex::{Chain, ChainComplex};
use crate::error::Result;
use crate::graph::{DisjointSets, Edge, Multigraph};
use crate::linalg::{det, dot, gcd_of_vector, rank, IntMatrix};
use crate::spanning::{cycletrees, fundamental_basis, greedy_spanning_tree, spanning_trees, tree_number, unique_cycle};
use crate::unicycle::{harmonic_to_unicyclizer, Unicyclization};

/// One named comparison.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub instance: String,
    pub seed: u64,
    pub checks: Vec<Check>,
    pub overall: bool,
}

impl VerificationReport {
    pub fn new(instance: impl Into<String>, seed: u64) -> Self {
        Self { instance: instance.into(), seed, checks: Vec::new(), overall: true }
    }

    pub fn record(&mut self, name: impl Into<String>, passed: bool, lhs: impl Into<String>, rhs: impl Into<String>) {
        self.overall &= passed;
        self.checks.push(Check { name: name.into(), passed, lhs: lhs.into(), rhs: rhs.into() });
    }

    pub fn check_eq<T: PartialEq + Debug>(&mut self, name: impl Into<String>, lhs: T, rhs: T) {
        let passed = lhs == rhs;
        self.record(name, passed, format!("{lhs:?}"), format!("{rhs:?}"));
    }

    /// Compares every pair and keeps one check: the first mismatch, or the
    /// number of agreeing cases.
    pub fn check_all<T: PartialEq + Debug>(&mut self, name: impl Into<String>, pairs: impl IntoIterator<Item = (T, T)>) {
        let mut count = 0usize;
        for (l, r) in pairs {
            if l != r {
                self.record(name, false, format!("{l:?}"), format!("{r:?}"));
                return;
            }
            count += 1;
        }
        self.record(name, true, format!("{count} cases"), format!("{count} cases"));
    }

    pub fn failure(&mut self, name: impl Into<String>, err: impl Debug) {
        self.record(name, false, format!("{err:?}"), "no error");
    }

    pub fn merge(&mut self, other: VerificationReport) {
        self.overall &= other.overall;
        self.checks.extend(other.checks);
    }

    pub fn failed(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

/// Human-readable id of a unicyclization.
pub fn describe(a: &Unicyclization) -> String {
    let edges: Vec<(usize, usize)> = a.graph().edges().iter().map(|e| (e.tail, e.head)).collect();
    let cols: Vec<Vec<String>> =
        a.partial().columns().map(|c| c.iter().map(ToString::to_string).collect()).collect();
    format!("V={} E={:?} partial={:?}", a.graph().vertex_count(), edges, cols)
}

fn subsets_of_size(m: usize, size: usize) -> impl Iterator<Item = Vec<usize>> {
    (0u32..1 << m)
        .filter(move |mask| mask.count_ones() as usize == size)
        .map(move |mask| (0..m).filter(|i| mask >> i & 1 == 1).collect())
}

/// Spanning trees by testing every `(|V|−1)`-subset for acyclicity.
pub fn brute_spanning_trees(g: &Multigraph) -> Vec<Vec<usize>> {
    let n = g.vertex_count();
    let mut out: Vec<Vec<usize>> = subsets_of_size(g.edge_count(), n - 1)
        .filter(|set| {
            let mut dsu = DisjointSets::new(n);
            set.iter().all(|&e| dsu.union(g.edges()[e].tail, g.edges()[e].head))
        })
        .collect();
    out.sort();
    out
}

/// Cycletrees by testing every `|V|`-subset for connectivity.
pub fn brute_cycletrees(g: &Multigraph) -> Vec<Vec<usize>> {
    let n = g.vertex_count();
    let mut out: Vec<Vec<usize>> = subsets_of_size(g.edge_count(), n)
        .filter(|set| {
            let mut dsu = DisjointSets::new(n);
            for &e in set {
                dsu.union(g.edges()[e].tail, g.edges()[e].head);
            }
            dsu.count() == 1
        })
        .collect();
    out.sort();
    out
}

/// `det([z]_β, [∂]_β)` assembled and evaluated in full.
pub fn winding_by_determinant(a: &Unicyclization, z: &[BigInt]) -> Result<BigInt> {
    let coords = a.basis().express(z)?;
    let m = a.corank();
    let p = a.partial_in_basis();
    let mut full = IntMatrix::zeros(m, m);
    for i in 0..m {
        full[(i, 0)] = coords[i].clone();
        for j in 0..m - 1 {
            full[(i, j + 1)] = p[(i, j)].clone();
        }
    }
    det(&full)
}

/// `λ` from brute-force cycletrees and full determinants.
pub fn brute_lambda(a: &Unicyclization) -> Result<Vec<BigInt>> {
    let g = a.graph();
    let mut lambda = vec![BigInt::zero(); g.edge_count()];
    for set in brute_cycletrees(g) {
        let z = unique_cycle(g, &set)?;
        let w = winding_by_determinant(a, &z)?;
        for (l, x) in lambda.iter_mut().zip(&z) {
            *l += &w * x;
        }
    }
    Ok(lambda)
}

fn random_cycle(a: &Unicyclization, rng: &mut ChaCha8Rng, bound: i64) -> Vec<BigInt> {
    let coords: Vec<BigInt> = (0..a.corank()).map(|_| BigInt::from(rng.gen_range(-bound..=bound))).collect();
    a.basis().combine(&coords)
}

fn as_rationals(v: &[BigInt]) -> Vec<BigRational> {
    v.iter().cloned().map(BigRational::from_integer).collect()
}

fn complex_of(a: &Unicyclization) -> ChainComplex {
    ChainComplex::from_graph_and_faces(a.graph(), a.partial()).expect("a unicyclization is a chain complex")
}

fn support_avoids(z: &[BigInt], sigma: usize) -> bool {
    z[sigma].is_zero()
}

/// `z∘λ = w(z)·k` on cycletree cycles, basis cycles and random integer
/// cycles, plus agreement of the fast paths with the brute-force ones.
pub fn verify_theorem_a(a: &Unicyclization, seed: u64) -> VerificationReport {
    let mut r = VerificationReport::new(describe(a), seed);
    let (lambda, cts) = match (a.lambda_raw(), cycletrees(a.graph(), a.cap())) {
        (Ok(l), Ok(c)) => (l, c),
        (Err(e), _) | (_, Err(e)) => {
            r.failure("theorem_a/setup", e);
            return r;
        }
    };
    let k = a.tree_number().clone();
    let identity = |z: &[BigInt]| (dot(z, &lambda), a.winding(z).map(|w| w * &k).unwrap_or_default());

    r.check_all("theorem_a/cycletree_cycles", cts.iter().map(|ct| identity(ct.cycle())));
    r.check_all("theorem_a/basis_cycles", a.basis().cycles().iter().map(|z| identity(z)));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let random: Vec<Vec<BigInt>> = (0..50).map(|_| random_cycle(a, &mut rng, 5)).collect();
    r.check_all("theorem_a/random_cycles", random.iter().map(|z| identity(z)));
    r.check_all(
        "theorem_a/winding_cofactor_vs_determinant",
        random.iter().chain(a.basis().cycles()).map(|z| (a.winding(z).ok(), winding_by_determinant(a, z).ok())),
    );
    r.check_eq("theorem_a/lambda_vs_brute_force", Some(lambda.clone()), brute_lambda(a).ok());
    r.check_all("theorem_a/image_of_partial_has_zero_winding", a.partial().columns().map(|c| (a.winding(&c).ok(), Some(BigInt::zero()))));
    let windings: Vec<BigInt> = a.basis().cycles().iter().filter_map(|z| a.winding(z).ok()).collect();
    r.check_eq("theorem_a/winding_image_gcd_is_torsion", gcd_of_vector(&windings), a.torsion().clone());
    r
}

/// `λ` is a nonzero harmonic cycle spanning the harmonic space.
pub fn verify_theorem_b(a: &Unicyclization, seed: u64) -> VerificationReport {
    let mut r = VerificationReport::new(describe(a), seed);
    let lambda = match a.lambda_raw() {
        Ok(l) => l,
        Err(e) => {
            r.failure("theorem_b/setup", e);
            return r;
        }
    };
    let zero_v = vec![BigInt::zero(); a.graph().vertex_count()];
    let zero_f = vec![BigInt::zero(); a.partial().cols()];
    let zero_e = vec![BigInt::zero(); a.graph().edge_count()];
    r.check_eq("theorem_b/boundary", a.graph().incidence_matrix().mul_vec(&lambda), zero_v);
    r.check_eq("theorem_b/coboundary", a.partial().transpose().mul_vec(&lambda), zero_f);
    let x = complex_of(a);
    match x.laplacian(1) {
        Ok(l) => r.check_eq("theorem_b/laplacian", l.mul_vec(&lambda), zero_e),
        Err(e) => r.failure("theorem_b/laplacian", e),
    }
    r.check_eq("theorem_b/nonzero", lambda.iter().any(|c| !c.is_zero()), true);
    match x.harmonic_basis(1) {
        Ok(h) => {
            r.check_eq("theorem_b/harmonic_dimension", h.len(), 1);
            if let Some(h) = h.first() {
                let cols = [h.to_primitive(), lambda.clone()];
                let m = IntMatrix::from_columns(lambda.len(), &cols).expect("equal lengths");
                r.check_eq("theorem_b/spans_harmonic_space", rank(&m), 1);
            }
        }
        Err(e) => r.failure("theorem_b/harmonic_dimension", e),
    }
    r
}

fn tree_count_or_zero(g: &Multigraph) -> BigInt {
    tree_number(g).unwrap_or_default()
}

fn cycletree_sets_or_empty(g: &Multigraph, cap: usize) -> BTreeSet<Vec<usize>> {
    cycletrees(g, cap).map(|v| v.into_iter().map(|ct| ct.edges().to_vec()).collect()).unwrap_or_default()
}

/// Deletion-contraction for tree-numbers and the cycletree decomposition
/// `𝒰(G) ≅ 𝒰(G/σ) ⨿ 𝒰(G−σ)` (with spanning trees of `G−σ` in place of
/// `𝒰(G/σ)` for loops), against brute-force enumeration.
pub fn verify_counts(g: &Multigraph, cap: usize) -> VerificationReport {
    let mut r = VerificationReport::new(format!("V={} E={:?}", g.vertex_count(), g.edges()), 0);
    let trees = match spanning_trees(g, cap) {
        Ok(t) => t,
        Err(e) => {
            r.failure("counts/setup", e);
            return r;
        }
    };
    let brute = brute_spanning_trees(g);
    let k = tree_count_or_zero(g);
    r.check_eq("counts/matrix_tree", k.clone(), BigInt::from(trees.len()));
    r.check_eq("counts/trees_vs_brute_force", trees.iter().map(|t| t.edges().to_vec()).collect::<Vec<_>>(), brute);
    let cts = cycletree_sets_or_empty(g, cap);
    r.check_eq("counts/cycletrees_vs_brute_force", cts.clone(), brute_cycletrees(g).into_iter().collect());

    for sigma in 0..g.edge_count() {
        let (deleted, del_map) = g.delete(sigma).expect("edge in range");
        let without: BTreeSet<Vec<usize>> = cts
            .iter()
            .filter(|y| !y.contains(&sigma))
            .map(|y| y.iter().filter_map(|&e| del_map.edges[e]).collect())
            .collect();
        r.check_eq(format!("counts/cycletrees_without_{sigma}"), without, cycletree_sets_or_empty(&deleted, cap));

        if g.edges()[sigma].is_loop() {
            r.check_eq(format!("counts/tree_number_loop_{sigma}"), k.clone(), tree_count_or_zero(&deleted));
            let with: BTreeSet<Vec<usize>> = cts
                .iter()
                .filter(|y| y.contains(&sigma))
                .map(|y| y.iter().filter_map(|&e| del_map.edges[e]).collect())
                .collect();
            let trees_of_deleted: BTreeSet<Vec<usize>> = spanning_trees(&deleted, cap)
                .map(|t| t.into_iter().map(|t| t.edges().to_vec()).collect())
                .unwrap_or_default();
            r.check_eq(format!("counts/cycletrees_with_loop_{sigma}"), with, trees_of_deleted);
        } else {
            let (contracted, con_map) = g.contract(sigma).expect("edge in range");
            r.check_eq(
                format!("counts/deletion_contraction_{sigma}"),
                k.clone(),
                tree_count_or_zero(&deleted) + tree_count_or_zero(&contracted),
            );
            let with: BTreeSet<Vec<usize>> = cts
                .iter()
                .filter(|y| y.contains(&sigma))
                .map(|y| y.iter().filter_map(|&e| con_map.edges[e]).collect())
                .collect();
            r.check_eq(format!("counts/cycletrees_with_{sigma}"), with, cycletree_sets_or_empty(&contracted, cap));
        }
    }
    r
}

/// `λ∘∂y = 0` and `‖λ‖² ≤ ‖λ + ∂y‖²` for `y = 0` and `trials` random
/// integer 2-chains.
pub fn verify_energy_min(a: &Unicyclization, trials: usize, seed: u64) -> VerificationReport {
    let mut r = VerificationReport::new(describe(a), seed);
    let lambda = match a.lambda_raw() {
        Ok(l) => l,
        Err(e) => {
            r.failure("energy/setup", e);
            return r;
        }
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let base = Chain::from_ints(1, &lambda).energy();
    let mut orthogonal = Vec::with_capacity(trials + 1);
    let mut minimal = Vec::with_capacity(trials + 1);
    for t in 0..=trials {
        let y: Vec<BigInt> =
            (0..a.partial().cols()).map(|_| if t == 0 { BigInt::zero() } else { BigInt::from(rng.gen_range(-5..=5)) }).collect();
        let dy = a.partial().mul_vec(&y);
        orthogonal.push((dot(&lambda, &dy), BigInt::zero()));
        let shifted: Vec<BigInt> = lambda.iter().zip(&dy).map(|(l, d)| l + d).collect();
        let energy = Chain::from_ints(1, &shifted).energy();
        minimal.push((base <= energy, true));
    }
    r.check_all("energy/orthogonality", orthogonal);
    r.check_all("energy/minimality", minimal);
    r
}

/// `λ_σ + λ_{−σ} = λ`, loops carry only themselves, zero rows kill `λ_{−σ}`.
pub fn verify_split(a: &Unicyclization, seed: u64) -> VerificationReport {
    let mut r = VerificationReport::new(describe(a), seed);
    let lambda = match a.lambda_raw() {
        Ok(l) => l,
        Err(e) => {
            r.failure("split/setup", e);
            return r;
        }
    };
    let zero = vec![BigInt::zero(); lambda.len()];
    for sigma in 0..a.graph().edge_count() {
        let (with, without) = match a.split_lambda(sigma) {
            Ok(s) => s,
            Err(e) => {
                r.failure(format!("split/{sigma}"), e);
                continue;
            }
        };
        let sum: Vec<BigInt> = with.iter().zip(&without).map(|(x, y)| x + y).collect();
        r.check_eq(format!("split/sum_{sigma}"), sum, lambda.clone());
        if a.graph().edges()[sigma].is_loop() {
            let off: Vec<BigInt> = with.iter().enumerate().map(|(i, x)| if i == sigma { BigInt::zero() } else { x.clone() }).collect();
            r.check_eq(format!("split/loop_multiple_{sigma}"), off, zero.clone());
        }
        if a.partial().row(sigma).iter().all(Zero::is_zero) {
            r.check_eq(format!("split/zero_row_{sigma}"), without, zero.clone());
        }
    }
    r
}

pub fn verify_grouped(a: &Unicyclization, seed: u64) -> VerificationReport {
    let mut r = VerificationReport::new(describe(a), seed);
    r.check_eq("grouped/equals_lambda", a.lambda_grouped().ok(), a.lambda_raw().ok());
    r
}

/// Winding and inner-product relations under contraction and deletion of
/// each edge, tested on all cycletree cycles and basis cycles avoiding it.
pub fn verify_corollary(a: &Unicyclization, seed: u64) -> VerificationReport {
    let mut r = VerificationReport::new(describe(a), seed);
    let g = a.graph();
    let cycles: Vec<Vec<BigInt>> = match cycletrees(g, a.cap()) {
        Ok(cts) => cts.iter().map(|ct| ct.cycle().to_vec()).chain(a.basis().cycles().iter().cloned()).collect(),
        Err(e) => {
            r.failure("corollary/setup", e);
            return r;
        }
    };
    for sigma in 0..g.edge_count() {
        let (with, without) = match a.split_lambda(sigma) {
            Ok(s) => s,
            Err(e) => {
                r.failure(format!("corollary/split_{sigma}"), e);
                continue;
            }
        };
        let avoiding: Vec<&Vec<BigInt>> = cycles.iter().filter(|z| support_avoids(z, sigma)).collect();

        if g.edges()[sigma].is_loop() {
            r.check_all(format!("corollary/loop_{sigma}"), avoiding.iter().map(|z| (dot(z, &with), BigInt::zero())));
        } else {
            match a.contract(sigma) {
                Ok(c) => {
                    let lc = c.unicyclization.lambda_raw().unwrap_or_default();
                    r.check_all(
                        format!("corollary/contract_winding_{sigma}"),
                        cycles.iter().map(|z| {
                            let moved = c.relabeling.transport(z);
                            (a.winding(z).ok(), c.unicyclization.winding(&moved).ok().map(|w| w * c.sign))
                        }),
                    );
                    r.check_all(
                        format!("corollary/contract_inner_{sigma}"),
                        avoiding.iter().map(|z| (dot(z, &with), dot(&c.relabeling.transport(z), &lc) * c.sign)),
                    );
                }
                Err(e) => r.failure(format!("corollary/contract_{sigma}"), e),
            }
        }

        if a.partial().row(sigma).iter().all(Zero::is_zero) {
            r.check_all(format!("corollary/zero_row_{sigma}"), avoiding.iter().map(|z| (dot(z, &without), BigInt::zero())));
            continue;
        }
        match a.delete(sigma) {
            Ok(d) => {
                let scale = &d.winding_difference * d.sign;
                r.check_eq(format!("corollary/winding_difference_{sigma}"), a.winding_difference(sigma).ok(), Some(d.winding_difference.clone()));
                let ld = d.unicyclization.lambda_raw().unwrap_or_default();
                r.check_all(
                    format!("corollary/delete_winding_{sigma}"),
                    avoiding.iter().map(|z| {
                        let moved = d.relabeling.transport(z);
                        (a.winding(z).ok(), d.unicyclization.winding(&moved).ok().map(|w| w * &scale))
                    }),
                );
                r.check_all(
                    format!("corollary/delete_inner_{sigma}"),
                    avoiding.iter().map(|z| (dot(z, &without), dot(&d.relabeling.transport(z), &ld) * &scale)),
                );
            }
            Err(e) => r.failure(format!("corollary/delete_{sigma}"), e),
        }
    }
    r
}

/// Rebasing on every spanning tree (when there are at most `max_trees`)
/// changes `w` and `λ` by one common sign; reorienting any cycletree cycle
/// leaves `λ` alone; reversing an edge negates that coordinate of `λ` up to
/// the same global sign.
pub fn verify_basis_robustness(a: &Unicyclization, max_trees: usize, seed: u64) -> VerificationReport {
    let mut r = VerificationReport::new(describe(a), seed);
    let g = a.graph();
    let (lambda, windings) = match (a.lambda_raw(), a.cycletree_windings()) {
        (Ok(l), Ok(w)) => (l, w),
        (Err(e), _) | (_, Err(e)) => {
            r.failure("basis/setup", e);
            return r;
        }
    };
    let cycles: Vec<Vec<BigInt>> =
        windings.iter().map(|(ct, _)| ct.cycle().to_vec()).chain(a.basis().cycles().iter().cloned()).collect();
    if a.tree_number() <= &BigInt::from(max_trees) {
        for tree in spanning_trees(g, a.cap()).unwrap_or_default() {
            let Ok(b) = a.rebase(&tree) else {
                r.failure(format!("basis/rebase_{:?}", tree.edges()), "rebase failed");
                continue;
            };
            let other = b.lambda_raw().unwrap_or_default();
            let eps = if other == lambda { 1 } else { -1 };
            let flipped: Vec<BigInt> = lambda.iter().map(|x| x * eps).collect();
            r.check_eq(format!("basis/lambda_sign_{:?}", tree.edges()), other, flipped);
            r.check_all(
                format!("basis/winding_sign_{:?}", tree.edges()),
                cycles.iter().map(|z| (b.winding(z).ok(), a.winding(z).ok().map(|w| w * eps))),
            );
            r.check_eq(format!("basis/normalized_{:?}", tree.edges()), b.lambda().ok(), a.lambda().ok());
        }
    }
    for flip in 0..windings.len() {
        let mut sum = vec![BigInt::zero(); lambda.len()];
        for (i, (ct, _)) in windings.iter().enumerate() {
            let z: Vec<BigInt> = if i == flip { ct.cycle().iter().map(|x| -x).collect() } else { ct.cycle().to_vec() };
            let w = a.winding(&z).unwrap_or_default();
            for (s, x) in sum.iter_mut().zip(&z) {
                *s += &w * x;
            }
        }
        r.check_eq(format!("basis/orientation_flip_{flip}"), sum, lambda.clone());
    }
    for e in 0..g.edge_count() {
        let Ok(rev) = g.reversed(e) else { continue };
        let mut partial = a.partial().clone();
        for c in 0..partial.cols() {
            partial[(e, c)] = -&partial[(e, c)];
        }
        let mut expected = lambda.clone();
        expected[e] = -&expected[e];
        match Unicyclization::new(rev, partial).and_then(|b| b.lambda_raw()) {
            Ok(other) => {
                let negated: Vec<BigInt> = expected.iter().map(|x| -x).collect();
                r.check_eq(format!("basis/edge_reversal_{e}"), other == expected || other == negated, true);
            }
            Err(err) => r.failure(format!("basis/edge_reversal_{e}"), err),
        }
    }
    r
}

/// Feeds `λ` back through [`harmonic_to_unicyclizer`], both with the
/// original unicyclizer and with none.
pub fn verify_roundtrip(a: &Unicyclization, seed: u64) -> VerificationReport {
    let mut r = VerificationReport::new(describe(a), seed);
    let lambda = match a.lambda_raw() {
        Ok(l) => as_rationals(&l),
        Err(e) => {
            r.failure("roundtrip/setup", e);
            return r;
        }
    };
    let empty = IntMatrix::zeros(a.graph().edge_count(), 0);
    for (label, partial) in [("given", a.partial()), ("empty", &empty)] {
        match harmonic_to_unicyclizer(a.graph(), &lambda, partial) {
            Ok(rec) => {
                let again = rec.unicyclization.lambda().unwrap_or_default();
                let scaled: Vec<BigRational> = again.iter().map(|x| &rec.scale * BigRational::from_integer(x.clone())).collect();
                r.check_eq(format!("roundtrip/{label}/proportional"), scaled, lambda.clone());
                let stacked = rec.partial.hstack(partial).expect("same row count");
                r.check_eq(format!("roundtrip/{label}/contains_partial"), rank(&stacked), rec.partial.cols());
                r.record(format!("roundtrip/{label}/scale"), !rec.scale.is_zero(), rec.scale.to_string(), "nonzero");
            }
            Err(e) => r.failure(format!("roundtrip/{label}"), e),
        }
    }
    r
}

/// `dim ker Δᵢ = rk Hᵢ` for `i = 0, 1`.
pub fn verify_hodge(x: &ChainComplex) -> VerificationReport {
    let mut r = VerificationReport::new("complex", 0);
    for i in 0..=1 {
        match (x.laplacian_nullity(i), x.homology(i)) {
            (Ok(n), Ok(h)) => r.check_eq(format!("hodge/dim_{i}"), n, h.rank),
            (Err(e), _) | (_, Err(e)) => r.failure(format!("hodge/dim_{i}"), e),
        }
    }
    r
}

/// Every harmonic 0-chain passes the library mean-value check and a direct
/// neighbor-average recomputation.
pub fn verify_mean_value(x: &ChainComplex, g: &Multigraph) -> VerificationReport {
    let mut r = VerificationReport::new("complex", 0);
    let basis = match x.harmonic_basis(0) {
        Ok(b) => b,
        Err(e) => {
            r.failure("mean_value/setup", e);
            return r;
        }
    };
    r.check_eq("mean_value/nonempty", basis.is_empty(), false);
    for (i, h) in basis.iter().enumerate() {
        let chain = Chain::new(0, h.0.clone());
        r.check_eq(format!("mean_value/library_{i}"), x.check_mean_value(&chain).ok(), Some(true));
        let averaged = (0..g.vertex_count()).all(|v| {
            let mut degree = 0i64;
            let mut total = BigRational::zero();
            for &Edge { tail, head } in g.edges() {
                if tail == head {
                    continue;
                }
                if tail == v || head == v {
                    degree += 1;
                    total += &h.0[if tail == v { head } else { tail }];
                }
            }
            degree == 0 || total == &h.0[v] * BigRational::from_integer(degree.into())
        });
        r.check_eq(format!("mean_value/direct_{i}"), averaged, true);
    }
    r
}

/// Names accepted by [`verify_named`].
pub const CHECK_NAMES: &[&str] =
    &["theorem_a", "theorem_b", "counts", "energy", "split", "grouped", "corollary", "basis", "roundtrip", "hodge", "mean_value"];

/// Runs one named verifier.
pub fn verify_named(a: &Unicyclization, name: &str, seed: u64) -> Option<VerificationReport> {
    let x = complex_of(a);
    Some(match name {
        "theorem_a" => verify_theorem_a(a, seed),
        "theorem_b" => verify_theorem_b(a, seed),
        "counts" => verify_counts(a.graph(), a.cap()),
        "energy" => verify_energy_min(a, 100, seed),
        "split" => verify_split(a, seed),
        "grouped" => verify_grouped(a, seed),
        "corollary" => verify_corollary(a, seed),
        "basis" => verify_basis_robustness(a, 4, seed),
        "roundtrip" => verify_roundtrip(a, seed),
        "hodge" => verify_hodge(&x),
        "mean_value" => verify_mean_value(&x, a.graph()),
        _ => return None,
    })
}

/// All verifiers merged into one report.
pub fn verify_all(a: &Unicyclization, seed: u64) -> VerificationReport {
    let mut r = VerificationReport::new(describe(a), seed);
    for name in CHECK_NAMES {
        r.merge(verify_named(a, name, seed).expect("known check"));
    }
    r
}

/// Bounds for [`exhaustive_family`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FamilyLimits {
    pub max_vertices: usize,
    pub max_edges: usize,
    pub max_entry: i64,
    /// Target number of unicyclizers per graph when they are sampled.
    pub per_graph: usize,
    pub seed: u64,
}

impl FamilyLimits {
    pub fn new(max_vertices: usize, max_edges: usize, max_entry: i64) -> Self {
        Self { max_vertices, max_edges, max_entry, per_graph: 20, seed: 0 }
    }
}

/// Unicyclizers with at most this many candidate matrices are enumerated
/// exhaustively instead of sampled.
const EXHAUSTIVE_BELOW: u64 = 64;

/// A numbered family member.
#[derive(Clone, Debug)]
pub struct Instance {
    pub id: usize,
    pub graph_id: usize,
    pub unicyclization: Unicyclization,
}

/// Connected multigraphs with corank ≥ 1 up to isomorphism, each edge
/// oriented from its smaller to its larger endpoint, ordered by vertex
/// count, edge count, then canonical edge list.
pub fn small_graphs(max_vertices: usize, max_edges: usize) -> Vec<Multigraph> {
    let mut out = Vec::new();
    for n in 1..=max_vertices {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect();
        let perms = permutations(n);
        for e in n..=max_edges {
            let mut seen = BTreeSet::new();
            let mut multiset = Vec::with_capacity(e);
            multisets(pairs.len(), e, 0, &mut multiset, &mut |idx| {
                let edges: Vec<(usize, usize)> = idx.iter().map(|&i| pairs[i]).collect();
                let canon = canonical(&edges, &perms);
                if seen.contains(&canon) {
                    return;
                }
                let g = Multigraph::from_pairs(n, &canon).expect("pairs in range");
                seen.insert(canon);
                if g.is_connected() {
                    out.push(g);
                }
            });
        }
    }
    out
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

fn multisets(kinds: usize, size: usize, from: usize, cur: &mut Vec<usize>, visit: &mut impl FnMut(&[usize])) {
    if cur.len() == size {
        visit(cur);
        return;
    }
    for k in from..kinds {
        cur.push(k);
        multisets(kinds, size, k, cur, visit);
        cur.pop();
    }
}

fn canonical(edges: &[(usize, usize)], perms: &[Vec<usize>]) -> Vec<(usize, usize)> {
    perms
        .iter()
        .map(|p| {
            let mut mapped: Vec<(usize, usize)> = edges
                .iter()
                .map(|&(a, b)| {
                    let (x, y) = (p[a], p[b]);
                    (x.min(y), x.max(y))
                })
                .collect();
            mapped.sort_unstable();
            mapped
        })
        .min()
        .expect("at least one permutation")
}

/// Valid unicyclizers on `g` built from integer combinations of the default
/// fundamental cycles with coefficients in `[−max_entry, max_entry]`.
/// Small candidate spaces are listed in full; otherwise `per_graph` distinct
/// valid ones are drawn with a seeded generator.
pub fn unicyclizers_for(g: &Multigraph, limits: &FamilyLimits, seed: u64) -> Vec<IntMatrix> {
    let Ok(tree) = greedy_spanning_tree(g, None, None) else { return Vec::new() };
    let Ok(basis) = fundamental_basis(g, &tree) else { return Vec::new() };
    let m = basis.len();
    if m == 0 {
        return Vec::new();
    }
    let cols = m - 1;
    let width = (2 * limits.max_entry + 1) as u64;
    let total = (cols * m) as u32;
    let edges = g.edge_count();
    let build = |coeffs: &[i64]| -> IntMatrix {
        let columns: Vec<Vec<BigInt>> = coeffs
            .chunks(m)
            .map(|c| basis.combine(&c.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>()))
            .collect();
        IntMatrix::from_columns(edges, &columns).expect("cycles have one entry per edge")
    };
    let valid = |p: &IntMatrix| rank(p) == cols;

    match width.checked_pow(total) {
        Some(count) if count <= EXHAUSTIVE_BELOW => (0..count)
            .map(|mut code| {
                (0..total)
                    .map(|_| {
                        let digit = (code % width) as i64 - limits.max_entry;
                        code /= width;
                        digit
                    })
                    .collect::<Vec<i64>>()
            })
            .map(|c| build(&c))
            .filter(valid)
            .collect(),
        _ => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut found: Vec<IntMatrix> = Vec::new();
            let mut attempts = 0;
            while found.len() < limits.per_graph && attempts < 100 * limits.per_graph {
                attempts += 1;
                let coeffs: Vec<i64> =
                    (0..total).map(|_| rng.gen_range(-limits.max_entry..=limits.max_entry)).collect();
                let p = build(&coeffs);
                if valid(&p) && !found.contains(&p) {
                    found.push(p);
                }
            }
            found
        }
    }
}

/// Every small graph paired with its unicyclizers, numbered in a fixed
/// order.
pub fn exhaustive_family(limits: &FamilyLimits) -> Vec<Instance> {
    let graphs = small_graphs(limits.max_vertices, limits.max_edges);
    let per_graph: Vec<Vec<IntMatrix>> = graphs
        .par_iter()
        .enumerate()
        .map(|(i, g)| unicyclizers_for(g, limits, limits.seed.wrapping_add(i as u64)))
        .collect();
    let mut out = Vec::new();
    for (graph_id, (g, partials)) in graphs.iter().zip(per_graph).enumerate() {
        for p in partials {
            let a = Unicyclization::new(g.clone(), p).expect("generated unicyclizers satisfy the axioms");
            out.push(Instance { id: out.len(), graph_id, unicyclization: a });
        }
    }
    out
}

/// Runs `verify` over instances, fanned out across threads and returned in
/// instance order.
pub fn verify_family<F>(instances: &[Instance], verify: F) -> Vec<VerificationReport>
where
    F: Fn(&Instance) -> VerificationReport + Sync + Send,
{
    instances.par_iter().map(verify).collect()
}

/// Whether the last nonzero entry is positive, the normalization used by
/// [`Unicyclization::lambda`].
pub fn is_normalized(lambda: &[BigInt]) -> bool {
    lambda.iter().rev().find(|x| !x.is_zero()).is_none_or(Signed::is_positive)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn theta(scale: i64) -> Unicyclization {
        let g = Multigraph::from_pairs(2, &[(0, 1), (0, 1), (0, 1)]).unwrap();
        Unicyclization::new(g, IntMatrix::from_columns(3, &[ints(&[scale, -scale, 0])]).unwrap()).unwrap()
    }

    fn assert_pass(r: &VerificationReport) {
        let failed: Vec<&Check> = r.failed().collect();
        assert!(r.overall, "{}: {failed:#?}", r.instance);
    }

    #[test]
    fn theta_passes_everything() {
        for s in [1, 2] {
            assert_pass(&verify_all(&theta(s), 7));
        }
    }

    #[test]
    fn theorem_a_identity_on_the_basic_cycle() {
        let a = theta(1);
        let z = ints(&[-1, 0, 1]);
        let l = a.lambda_raw().unwrap();
        assert_eq!(dot(&z, &l), BigInt::from(3));
        assert_eq!(a.winding(&z).unwrap() * a.tree_number(), BigInt::from(3));
        let b = theta(2);
        assert_eq!(dot(&z, &b.lambda_raw().unwrap()), BigInt::from(6));
    }

    #[test]
    fn energy_examples() {
        let a = theta(1);
        let l = a.lambda_raw().unwrap();
        assert_eq!(Chain::from_ints(1, &l).energy(), BigRational::from_integer(6.into()));
        let dy = a.partial().mul_vec(&ints(&[1]));
        let shifted: Vec<BigInt> = l.iter().zip(&dy).map(|(x, y)| x + y).collect();
        assert_eq!(Chain::from_ints(1, &shifted).energy(), BigRational::from_integer(8.into()));
    }

    #[test]
    fn count_examples() {
        let theta = Multigraph::from_pairs(2, &[(0, 1), (0, 1), (0, 1)]).unwrap();
        let c3 = Multigraph::from_pairs(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        let lp = Multigraph::from_pairs(1, &[(0, 0)]).unwrap();
        for (g, k, u) in [(theta, 3, 3), (c3, 3, 1), (lp, 1, 1)] {
            assert_pass(&verify_counts(&g, 16));
            assert_eq!(brute_spanning_trees(&g).len(), k);
            assert_eq!(brute_cycletrees(&g).len(), u);
        }
    }

    #[test]
    fn failures_are_reported() {
        let mut r = VerificationReport::new("x", 0);
        r.check_eq("ok", 1, 1);
        assert!(r.overall);
        r.check_all("bad", [(1, 1), (2, 3)]);
        assert!(!r.overall);
        assert_eq!(r.failed().count(), 1);
        assert_eq!(r.checks[1].lhs, "2");
    }

    #[test]
    fn family_examples() {
        let fam = exhaustive_family(&FamilyLimits::new(2, 3, 2));
        let partials: Vec<&IntMatrix> = fam
            .iter()
            .filter(|i| i.unicyclization.graph().edge_count() == 3 && i.unicyclization.graph().vertex_count() == 2)
            .map(|i| i.unicyclization.partial())
            .collect();
        for s in [1, 2] {
            let m = IntMatrix::from_columns(3, &[ints(&[s, -s, 0])]).unwrap();
            assert!(partials.contains(&&m));
        }

        let fam = exhaustive_family(&FamilyLimits::new(3, 3, 1));
        assert!(fam.iter().any(|i| {
            let g = i.unicyclization.graph();
            g.vertex_count() == 3 && g.edge_count() == 3 && g.edges().iter().all(|e| !e.is_loop())
        }));

        let fam = exhaustive_family(&FamilyLimits::new(1, 1, 1));
        assert_eq!(fam.len(), 1);
        assert_eq!(fam[0].unicyclization.graph().edges(), &[Edge::new(0, 0)]);
        assert_eq!(fam[0].unicyclization.partial().cols(), 0);
    }

    #[test]
    fn small_graph_counts() {
        // connected loopless-or-looped multigraphs with corank ≥ 1
        let two = small_graphs(2, 3);
        // one vertex: 1, 2, 3 loops; two vertices with 2 or 3 edges and corank ≥ 1
        assert!(two.iter().all(|g| g.edge_count() >= g.vertex_count()));
        assert_eq!(two.iter().filter(|g| g.vertex_count() == 1).count(), 3);
        // 2 vertices, 2 edges: {01,01}, {00,01}; 3 edges: {01×3}, {00,01,01}, {00,00,01}, {00,01,11}
        assert_eq!(two.iter().filter(|g| g.vertex_count() == 2).count(), 6);
    }
}
