//! Unicyclizations `(G, ∂)` and everything computed from them.
//!
//! Winding numbers are determinants `det([z]_β, [∂]_β)`. Expanding along
//! the first column turns this into a dot product of `[z]_β` with a fixed
//! cofactor vector, which is computed once at construction.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use crate::complex::ChainComplex;
use crate::error::{Error, Result};
use crate::graph::{EdgeRelabeling, Multigraph};
use crate::linalg::{det, dot, gcd_of_vector, kernel_lattice, primitive_from_rationals, rank, IntMatrix};
use crate::linalg::{smith_normal_form, SmithDecomposition};
use crate::spanning::{
    cycletrees, fundamental_basis, greedy_spanning_tree, simple_cycles, tree_number, CycleBasis, Cycletree,
    SpanningTree, DEFAULT_EDGE_CAP,
};

/// A validated unicyclization with its chosen fundamental basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Unicyclization {
    graph: Multigraph,
    partial: IntMatrix,
    basis: CycleBasis,
    tree_number: BigInt,
    partial_in_basis: IntMatrix,
    smith: SmithDecomposition,
    torsion: BigInt,
    cofactors: Vec<BigInt>,
    cap: usize,
}

/// `𝒜/σ` and the sign relating windings: `w_𝒜(C) = sign · w_{𝒜/σ}(C/σ)`.
#[derive(Clone, Debug)]
pub struct Contraction {
    pub unicyclization: Unicyclization,
    pub relabeling: EdgeRelabeling,
    pub sign: i32,
}

/// `𝒜 − σ` with `w_𝒜(C) = sign · n_σ · w_{𝒜−σ}(C − σ)` for cycles `C`
/// avoiding `σ`. The sign is +1 except when `𝒜 − σ` has an empty
/// unicyclizer, where there is no column to absorb it.
#[derive(Clone, Debug)]
pub struct Deletion {
    pub unicyclization: Unicyclization,
    pub relabeling: EdgeRelabeling,
    pub winding_difference: BigInt,
    pub sign: i32,
}

/// Output of [`harmonic_to_unicyclizer`]: `λ = scale · λ_{(G, partial)}`
/// with the reported standard harmonic cycle sign-normalized.
#[derive(Clone, Debug)]
pub struct Reconstruction {
    pub partial: IntMatrix,
    pub scale: BigRational,
    pub unicyclization: Unicyclization,
}

fn check_columns(g: &Multigraph, partial: &IntMatrix) -> Result<()> {
    if partial.rows() != g.edge_count() {
        return Err(Error::DimensionMismatch(format!(
            "unicyclizer has {} rows, graph has {} edges",
            partial.rows(),
            g.edge_count()
        )));
    }
    if rank(partial) != partial.cols() {
        return Err(Error::DependentColumns);
    }
    for (c, col) in partial.columns().enumerate() {
        if g.boundary(&col).iter().any(|x| !x.is_zero()) {
            return Err(Error::ColumnNotCycle { column: c });
        }
    }
    Ok(())
}

impl Unicyclization {
    /// Validates the three axioms and uses the lexicographically smallest
    /// spanning tree for `β`.
    pub fn new(graph: Multigraph, partial: IntMatrix) -> Result<Self> {
        let tree = greedy_spanning_tree(&graph, None, None)?;
        Self::with_tree(graph, partial, &tree)
    }

    pub fn with_tree(graph: Multigraph, partial: IntMatrix, tree: &SpanningTree) -> Result<Self> {
        if !graph.is_connected() {
            return Err(Error::Disconnected);
        }
        check_columns(&graph, &partial)?;
        let corank = graph.corank()?;
        if corank != partial.cols() + 1 {
            return Err(Error::HomologyRank { rank: corank - partial.cols() });
        }
        let basis = fundamental_basis(&graph, tree)?;
        let tree_number = tree_number(&graph)?;
        let data = basis.non_tree_edges().iter().flat_map(|&e| partial.row(e).to_vec()).collect();
        let partial_in_basis = IntMatrix::new(corank, partial.cols(), data)?;
        let smith = smith_normal_form(&partial_in_basis);
        let torsion = smith.torsion_order();
        let cofactors = (0..corank)
            .map(|j| {
                let minor = det(&partial_in_basis.remove_row(j)).expect("minor is square");
                if j % 2 == 0 {
                    minor
                } else {
                    -minor
                }
            })
            .collect();
        Ok(Self {
            graph,
            partial,
            basis,
            tree_number,
            partial_in_basis,
            smith,
            torsion,
            cofactors,
            cap: DEFAULT_EDGE_CAP,
        })
    }

    /// Faces are filtered to a maximal independent subset, greedily in
    /// column order, before validation.
    pub fn from_faces(graph: Multigraph, faces: &IntMatrix) -> Result<Self> {
        check_faces(&graph, faces)?;
        let mut kept: Vec<usize> = Vec::new();
        for c in 0..faces.cols() {
            let mut trial = kept.clone();
            trial.push(c);
            if rank(&faces.select_columns(&trial)) == trial.len() {
                kept = trial;
            }
        }
        Self::new(graph, faces.select_columns(&kept))
    }

    /// Reads `X¹` as a multigraph and keeps a maximal independent set of
    /// 2-cells. A zero column of `∂₁` is read as a loop at vertex 0.
    pub fn from_cw(complex: &ChainComplex) -> Result<Self> {
        if complex.top_dim() < 1 {
            return Err(Error::NotAGraph("complex has no 1-cells".into()));
        }
        let d1 = complex.boundary(1);
        let mut pairs = Vec::with_capacity(d1.cols());
        for (e, col) in d1.columns().enumerate() {
            let tail = col.iter().position(|x| *x == -BigInt::one());
            let head = col.iter().position(BigInt::is_one);
            let support = col.iter().filter(|x| !x.is_zero()).count();
            match (tail, head, support) {
                (Some(t), Some(h), 2) => pairs.push((t, h)),
                (None, None, 0) => pairs.push((0, 0)),
                _ => return Err(Error::NotAGraph(format!("column {e} of ∂₁ is not an edge boundary"))),
            }
        }
        let graph = Multigraph::from_pairs(complex.cell_count(0), &pairs)?;
        let faces = complex.boundary(2);
        let homology = complex.homology(1)?;
        if homology.rank != 1 {
            return Err(Error::HomologyRank { rank: homology.rank });
        }
        Self::from_faces(graph, &faces)
    }

    /// Same unicyclizer, fundamental basis of a different spanning tree.
    pub fn rebase(&self, tree: &SpanningTree) -> Result<Self> {
        Ok(Self::with_tree(self.graph.clone(), self.partial.clone(), tree)?.with_cap(self.cap))
    }

    /// Edge bound for the cycletree enumerations behind `λ`.
    pub fn with_cap(mut self, cap: usize) -> Self {
        self.cap = cap;
        self
    }

    pub fn graph(&self) -> &Multigraph {
        &self.graph
    }

    pub fn partial(&self) -> &IntMatrix {
        &self.partial
    }

    pub fn basis(&self) -> &CycleBasis {
        &self.basis
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    /// `m = corank(G)`.
    pub fn corank(&self) -> usize {
        self.partial.cols() + 1
    }

    /// `k(G)`.
    pub fn tree_number(&self) -> &BigInt {
        &self.tree_number
    }

    /// `[∂]_β`, an `m × (m−1)` matrix.
    pub fn partial_in_basis(&self) -> &IntMatrix {
        &self.partial_in_basis
    }

    pub fn smith(&self) -> &SmithDecomposition {
        &self.smith
    }

    /// `τ`, the product of the invariant factors of `[∂]_β`.
    pub fn torsion(&self) -> &BigInt {
        &self.torsion
    }

    pub fn torsion_factors(&self) -> &[BigInt] {
        &self.smith.diag
    }

    /// Signed cofactors along the first column: `w(z) = cofactors · [z]_β`.
    pub fn cofactors(&self) -> &[BigInt] {
        &self.cofactors
    }

    /// `w(z) = det([z]_β, [∂]_β)`.
    pub fn winding(&self, z: &[BigInt]) -> Result<BigInt> {
        self.check_len(z.len())?;
        let coords = self.basis.express(z)?;
        Ok(dot(&coords, &self.cofactors))
    }

    fn check_len(&self, len: usize) -> Result<()> {
        if len != self.graph.edge_count() {
            return Err(Error::DimensionMismatch(format!(
                "chain has {len} entries, graph has {} edges",
                self.graph.edge_count()
            )));
        }
        Ok(())
    }

    fn check_edge(&self, sigma: usize) -> Result<()> {
        self.graph.edge(sigma).map(|_| ())
    }

    /// Every cycletree with the winding number of its unique cycle.
    pub fn cycletree_windings(&self) -> Result<Vec<(Cycletree, BigInt)>> {
        let cts = cycletrees(&self.graph, self.cap)?;
        Ok(cts
            .into_par_iter()
            .map(|ct| {
                let w = self.winding(ct.cycle()).expect("unique cycle is a cycle");
                (ct, w)
            })
            .collect())
    }

    /// `λ = Σ_Y w(z_Y)·z_Y` with the basis-dependent sign.
    pub fn lambda_raw(&self) -> Result<Vec<BigInt>> {
        let terms = self.cycletree_windings()?;
        Ok(weighted_sum(self.graph.edge_count(), terms.iter().map(|(ct, w)| (w, ct.cycle()))))
    }

    /// `λ` flipped so its last nonzero coefficient is positive, which makes
    /// it independent of the basis.
    pub fn lambda(&self) -> Result<Vec<BigInt>> {
        let mut l = self.lambda_raw()?;
        normalize_last_positive(&mut l);
        Ok(l)
    }

    /// `λ` regrouped by cycle: `Σ_C k(G/C)·w(C)·C` over simple cycles.
    pub fn lambda_grouped(&self) -> Result<Vec<BigInt>> {
        let cycles = simple_cycles(&self.graph, self.cap)?;
        let terms = cycles
            .into_par_iter()
            .map(|c| {
                let support: Vec<usize> = c.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(i, _)| i).collect();
                let quotient = self.graph.contract_set(&support)?;
                let weight = tree_number(&quotient)? * self.winding(&c)?;
                Ok((weight, c))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(weighted_sum(self.graph.edge_count(), terms.iter().map(|(w, c)| (w, c.as_slice()))))
    }

    /// `(λ_σ, λ_{−σ})`: the parts of the raw `λ` from cycletrees with and
    /// without `σ`.
    pub fn split_lambda(&self, sigma: usize) -> Result<(Vec<BigInt>, Vec<BigInt>)> {
        self.check_edge(sigma)?;
        let terms = self.cycletree_windings()?;
        let n = self.graph.edge_count();
        let with = weighted_sum(n, terms.iter().filter(|(ct, _)| ct.contains(sigma)).map(|(ct, w)| (w, ct.cycle())));
        let without = weighted_sum(n, terms.iter().filter(|(ct, _)| !ct.contains(sigma)).map(|(ct, w)| (w, ct.cycle())));
        Ok((with, without))
    }

    /// `n_σ`: gcd of row `σ` of `∂`, 0 for a zero row.
    pub fn winding_difference(&self, sigma: usize) -> Result<BigInt> {
        self.check_edge(sigma)?;
        Ok(gcd_of_vector(self.partial.row(sigma)))
    }

    /// `P∘λ / k` for an arbitrary 1-chain, using the raw `λ` so that it
    /// matches [`winding`](Self::winding) on cycles.
    pub fn extended_winding(&self, chain: &[BigRational]) -> Result<BigRational> {
        self.check_len(chain.len())?;
        let lambda = self.lambda_raw()?;
        let p: BigRational = chain.iter().zip(&lambda).map(|(a, b)| a * BigRational::from_integer(b.clone())).sum();
        Ok(p / BigRational::from_integer(self.tree_number.clone()))
    }

    /// `w_self = ε · w_other` where `ε = det M` and `M` expresses this basis in
    /// the other one.
    pub fn basis_sign(&self, other: &CycleBasis) -> Result<i32> {
        let cols: Vec<Vec<BigInt>> =
            self.basis.cycles().iter().map(|z| other.express(z)).collect::<Result<_>>()?;
        let m = IntMatrix::from_columns(self.corank(), &cols)?;
        let d = det(&m)?;
        match d {
            d if d.is_one() => Ok(1),
            d if d == -BigInt::one() => Ok(-1),
            _ => Err(Error::DimensionMismatch("bases span different lattices".into())),
        }
    }

    /// Contracts the non-loop edge `σ`. If `σ` is outside the current tree,
    /// the greedy tree through `σ` is used and the basis change recorded in
    /// the sign.
    pub fn contract(&self, sigma: usize) -> Result<Contraction> {
        let e = self.graph.edge(sigma)?;
        if e.is_loop() {
            return Err(Error::LoopContraction { edge: sigma });
        }
        let (tree, sign) = if self.basis.tree().contains(sigma) {
            (self.basis.tree().clone(), 1)
        } else {
            let tree = greedy_spanning_tree(&self.graph, Some(sigma), None)?;
            let sign = self.basis_sign(&fundamental_basis(&self.graph, &tree)?)?;
            (tree, sign)
        };
        let (graph, relabeling) = self.graph.contract(sigma)?;
        let partial = transport_columns(&self.partial, &relabeling);
        let tree = SpanningTree::new(&graph, tree.edges().iter().filter_map(|&t| relabeling.edges[t]).collect())?;
        let unicyclization = Self::with_tree(graph, partial, &tree)?.with_cap(self.cap);
        Ok(Contraction { unicyclization, relabeling, sign })
    }

    /// Deletes `σ` (requires a nonzero row of `∂` at `σ`). The basis is moved
    /// to a tree avoiding `σ`, `σ`'s row is column-reduced to `(0, …, 0, g)`
    /// and the reduced columns other than the last become `∂_d`.
    pub fn delete(&self, sigma: usize) -> Result<Deletion> {
        self.check_edge(sigma)?;
        if self.partial.row(sigma).iter().all(Zero::is_zero) {
            return Err(Error::ZeroRow { edge: sigma });
        }
        let (tree, basis_sign) = if self.basis.tree().contains(sigma) {
            let tree = greedy_spanning_tree(&self.graph, None, Some(sigma))?;
            let sign = self.basis_sign(&fundamental_basis(&self.graph, &tree)?)?;
            (tree, sign)
        } else {
            (self.basis.tree().clone(), 1)
        };
        let basis = fundamental_basis(&self.graph, &tree)?;
        let m = self.corank();
        let p = basis.non_tree_edges().iter().position(|&e| e == sigma).expect("σ is a non-tree edge");

        let mut cols: Vec<Vec<BigInt>> = self.partial.columns().collect();
        let last = cols.len() - 1;
        for j in 0..last {
            let (a, b) = (cols[j][sigma].clone(), cols[last][sigma].clone());
            if a.is_zero() {
                continue;
            }
            let eg = a.extended_gcd(&b);
            let (alpha, beta) = (&b / &eg.gcd, -(&a / &eg.gcd));
            let (cj, cl) = (cols[j].clone(), cols[last].clone());
            cols[j] = cj.iter().zip(&cl).map(|(x, y)| &alpha * x + &beta * y).collect();
            cols[last] = cj.iter().zip(&cl).map(|(x, y)| &eg.x * x + &eg.y * y).collect();
        }
        let corner = cols[last][sigma].clone();
        let mut sign = basis_sign * if (m - 1 - p).is_multiple_of(2) { 1 } else { -1 };
        if corner.is_negative() {
            sign = -sign;
        }
        cols.pop();
        if sign < 0 && !cols.is_empty() {
            cols[0].iter_mut().for_each(|x| *x = -&*x);
            sign = 1;
        }

        let (graph, relabeling) = self.graph.delete(sigma)?;
        let reduced: Vec<Vec<BigInt>> = cols.iter().map(|c| relabeling.transport(c)).collect();
        let partial = IntMatrix::from_columns(graph.edge_count(), &reduced)?;
        let tree = SpanningTree::new(&graph, tree.edges().iter().filter_map(|&t| relabeling.edges[t]).collect())?;
        let unicyclization = Self::with_tree(graph, partial, &tree)?.with_cap(self.cap);
        Ok(Deletion { unicyclization, relabeling, winding_difference: corner.abs(), sign })
    }
}

fn check_faces(g: &Multigraph, faces: &IntMatrix) -> Result<()> {
    if faces.rows() != g.edge_count() {
        return Err(Error::DimensionMismatch(format!(
            "faces have {} rows, graph has {} edges",
            faces.rows(),
            g.edge_count()
        )));
    }
    for (c, col) in faces.columns().enumerate() {
        if g.boundary(&col).iter().any(|x| !x.is_zero()) {
            return Err(Error::ColumnNotCycle { column: c });
        }
    }
    Ok(())
}

fn transport_columns(m: &IntMatrix, relabeling: &EdgeRelabeling) -> IntMatrix {
    let moved: Vec<Vec<BigInt>> = m.columns().map(|c| relabeling.transport(&c)).collect();
    IntMatrix::from_columns(relabeling.new_edge_count(), &moved).expect("transported columns have equal length")
}

fn weighted_sum<'a>(len: usize, terms: impl Iterator<Item = (&'a BigInt, &'a [BigInt])>) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); len];
    for (w, z) in terms {
        if w.is_zero() {
            continue;
        }
        for (o, x) in out.iter_mut().zip(z) {
            if !x.is_zero() {
                *o += w * x;
            }
        }
    }
    out
}

/// Flips `v` so its last nonzero entry is positive.
pub fn normalize_last_positive(v: &mut [BigInt]) {
    if v.iter().rev().find(|x| !x.is_zero()).is_some_and(Signed::is_negative) {
        v.iter_mut().for_each(|x| *x = -&*x);
    }
}

/// Recovers a full-rank unicyclizer from a harmonic cycle of `(G, ∂)`.
///
/// `V = {v ∈ ker ∂₁ : λ∘v = 0}` has rank `m − 1`. The columns of `∂` lie in
/// `V` and are extended greedily by a lattice basis of `V` until they span
/// it over ℚ.
pub fn harmonic_to_unicyclizer(g: &Multigraph, lambda: &[BigRational], partial: &IntMatrix) -> Result<Reconstruction> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    check_columns(g, partial)?;
    if lambda.len() != g.edge_count() {
        return Err(Error::DimensionMismatch(format!(
            "chain has {} entries, graph has {} edges",
            lambda.len(),
            g.edge_count()
        )));
    }
    if lambda.iter().all(Zero::is_zero) {
        return Err(Error::ZeroHarmonic);
    }
    let d1 = g.incidence_matrix();
    if d1.mul_rat_vec(lambda).iter().any(|x| !x.is_zero()) {
        return Err(Error::NotHarmonic);
    }
    let integral = primitive_from_rationals(lambda);
    for (c, col) in partial.columns().enumerate() {
        if !dot(&col, &integral).is_zero() {
            return Err(Error::NotOrthogonal { column: c });
        }
    }

    let constraints = d1.vstack(&IntMatrix::from_rows(std::slice::from_ref(&integral))?)?;
    let lattice = kernel_lattice(&constraints);
    let target = g.corank()? - 1;
    if lattice.basis.cols() != target {
        return Err(Error::NotHarmonic);
    }
    let mut cols: Vec<Vec<BigInt>> = partial.columns().collect();
    for v in lattice.basis.columns() {
        if cols.len() == target {
            break;
        }
        cols.push(v);
        if rank(&IntMatrix::from_columns(g.edge_count(), &cols)?) < cols.len() {
            cols.pop();
        }
    }
    let full = IntMatrix::from_columns(g.edge_count(), &cols)?;
    let unicyclization = Unicyclization::new(g.clone(), full.clone())?;
    let standard = unicyclization.lambda()?;
    let i = standard.iter().position(|x| !x.is_zero()).ok_or(Error::ZeroHarmonic)?;
    let scale = &lambda[i] / BigRational::from_integer(standard[i].clone());
    Ok(Reconstruction { partial: full, scale, unicyclization })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn rats(v: &[i64]) -> Vec<BigRational> {
        v.iter().map(|&x| BigRational::from_integer(x.into())).collect()
    }

    fn theta() -> Multigraph {
        Multigraph::from_pairs(2, &[(0, 1), (0, 1), (0, 1)]).unwrap()
    }

    fn theta_with(scale: i64) -> Unicyclization {
        Unicyclization::new(theta(), IntMatrix::from_columns(3, &[ints(&[scale, -scale, 0])]).unwrap()).unwrap()
    }

    fn cycle(n: usize) -> Unicyclization {
        let pairs: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Unicyclization::new(Multigraph::from_pairs(n, &pairs).unwrap(), IntMatrix::zeros(n, 0)).unwrap()
    }

    #[test]
    fn construction_and_torsion() {
        let a = theta_with(1);
        assert_eq!(a.torsion(), &BigInt::one());
        assert_eq!(a.tree_number(), &BigInt::from(3));
        assert_eq!(a.partial_in_basis(), &IntMatrix::from_rows(&[[-1], [0]]).unwrap());
        assert_eq!(theta_with(2).torsion(), &BigInt::from(2));
        assert_eq!(theta_with(2).torsion_factors(), &ints(&[2])[..]);
        let c3 = cycle(3);
        assert_eq!(c3.torsion(), &BigInt::one());
        assert!(c3.torsion_factors().is_empty());
    }

    #[test]
    fn axiom_violations() {
        let dup = IntMatrix::from_columns(3, &[ints(&[1, -1, 0]), ints(&[2, -2, 0])]).unwrap();
        assert_eq!(Unicyclization::new(theta(), dup).unwrap_err(), Error::DependentColumns);
        let open = IntMatrix::from_columns(3, &[ints(&[1, 0, 0])]).unwrap();
        assert_eq!(Unicyclization::new(theta(), open).unwrap_err(), Error::ColumnNotCycle { column: 0 });
        assert_eq!(Unicyclization::new(theta(), IntMatrix::zeros(3, 0)).unwrap_err(), Error::HomologyRank { rank: 2 });
        let tree = Multigraph::from_pairs(2, &[(0, 1)]).unwrap();
        assert_eq!(Unicyclization::new(tree, IntMatrix::zeros(1, 0)).unwrap_err(), Error::HomologyRank { rank: 0 });
        let apart = Multigraph::new(2, vec![]).unwrap();
        assert_eq!(Unicyclization::new(apart, IntMatrix::zeros(0, 0)).unwrap_err(), Error::Disconnected);
    }

    #[test]
    fn windings() {
        let a = theta_with(1);
        assert_eq!(a.winding(&ints(&[-1, 0, 1])).unwrap(), BigInt::one());
        assert_eq!(a.winding(&ints(&[1, -1, 0])).unwrap(), BigInt::zero());
        assert_eq!(theta_with(2).winding(&ints(&[-1, 0, 1])).unwrap(), BigInt::from(2));
        assert_eq!(a.winding(&ints(&[1, 0, 0])), Err(Error::NotACycle));
    }

    #[test]
    fn lambdas() {
        assert_eq!(theta_with(1).lambda_raw().unwrap(), ints(&[-1, -1, 2]));
        assert_eq!(theta_with(1).lambda().unwrap(), ints(&[-1, -1, 2]));
        assert_eq!(theta_with(2).lambda().unwrap(), ints(&[-2, -2, 4]));
        assert_eq!(cycle(3).lambda().unwrap(), ints(&[1, 1, 1]));
        for s in [1, 2] {
            let a = theta_with(s);
            assert_eq!(a.lambda_grouped().unwrap(), a.lambda_raw().unwrap());
        }
    }

    #[test]
    fn grouping_weights_by_quotient_tree_number() {
        // A doubled edge whose ends are tied to a third vertex by three edges:
        // the 2-cycle is carried by three cycletrees.
        let g = Multigraph::from_pairs(3, &[(0, 1), (0, 1), (1, 2), (1, 2), (2, 0)]).unwrap();
        let c = ints(&[1, -1, 0, 0, 0]);
        let support = [0, 1];
        assert_eq!(tree_number(&g.contract_set(&support).unwrap()).unwrap(), BigInt::from(3));
        let carriers = cycletrees(&g, DEFAULT_EDGE_CAP).unwrap().into_iter().filter(|ct| ct.cycle() == &c[..]).count();
        assert_eq!(carriers, 3);
    }

    #[test]
    fn splits() {
        let a = theta_with(1);
        let (with, without) = a.split_lambda(2).unwrap();
        assert_eq!(with, ints(&[-1, -1, 2]));
        assert_eq!(without, ints(&[0, 0, 0]));

        // one loop at vertex 0 on top of a theta
        let g = Multigraph::from_pairs(2, &[(0, 1), (0, 1), (0, 0)]).unwrap();
        let a = Unicyclization::new(g, IntMatrix::from_columns(3, &[ints(&[1, -1, 0])]).unwrap()).unwrap();
        let (with, without) = a.split_lambda(2).unwrap();
        assert!(with[0].is_zero() && with[1].is_zero() && !with[2].is_zero());
        assert_eq!(without, ints(&[0, 0, 0]));
        assert!(a.split_lambda(3).is_err());
    }

    #[test]
    fn winding_differences() {
        assert_eq!(theta_with(1).winding_difference(1).unwrap(), BigInt::one());
        assert_eq!(theta_with(2).winding_difference(0).unwrap(), BigInt::from(2));
        assert_eq!(theta_with(2).winding_difference(2).unwrap(), BigInt::zero());
    }

    #[test]
    fn extended_windings() {
        let a = theta_with(1);
        let l = rats(&[-1, -1, 2]);
        assert_eq!(a.extended_winding(&l).unwrap(), BigRational::from_integer(2.into()));
        assert_eq!(a.extended_winding(&rats(&[0, 0, 1])).unwrap(), BigRational::new(2.into(), 3.into()));
        assert_eq!(a.extended_winding(&rats(&[-1, 0, 1])).unwrap(), BigRational::one());
    }

    #[test]
    fn contraction_preserves_windings() {
        let a = theta_with(1);
        for sigma in 0..3 {
            let c = a.contract(sigma).unwrap();
            assert_eq!(c.unicyclization.graph().vertex_count(), 1);
            for z in a.basis().cycles() {
                let moved = c.relabeling.transport(z);
                let w = c.unicyclization.winding(&moved).unwrap() * c.sign;
                assert_eq!(w, a.winding(z).unwrap());
            }
        }
        let lp = Multigraph::from_pairs(2, &[(0, 1), (0, 1), (1, 1)]).unwrap();
        let a = Unicyclization::new(lp, IntMatrix::from_columns(3, &[ints(&[1, -1, 0])]).unwrap()).unwrap();
        assert!(matches!(a.contract(2), Err(Error::LoopContraction { edge: 2 })));
    }

    #[test]
    fn deletion_scales_windings() {
        for s in [1, 2] {
            let a = theta_with(s);
            let d = a.delete(1).unwrap();
            assert_eq!(d.winding_difference, BigInt::from(s));
            let c = ints(&[-1, 0, 1]);
            let moved = d.relabeling.transport(&c);
            let w = d.unicyclization.winding(&moved).unwrap() * d.sign * &d.winding_difference;
            assert_eq!(w, a.winding(&c).unwrap());
        }
        assert!(matches!(theta_with(1).delete(2), Err(Error::ZeroRow { edge: 2 })));
    }

    #[test]
    fn faces_and_complexes() {
        let faces = IntMatrix::from_columns(3, &[ints(&[1, -1, 0]), ints(&[1, -1, 0])]).unwrap();
        let a = Unicyclization::from_faces(theta(), &faces).unwrap();
        assert_eq!(a.partial().cols(), 1);

        let x = ChainComplex::from_graph_and_faces(&theta(), &faces).unwrap();
        assert_eq!(Unicyclization::from_cw(&x).unwrap().partial(), a.partial());
        let c3 = Multigraph::from_pairs(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        let x = ChainComplex::from_graph(&c3);
        assert_eq!(Unicyclization::from_cw(&x).unwrap().partial().cols(), 0);
        assert!(matches!(Unicyclization::from_cw(&ChainComplex::from_graph(&theta())), Err(Error::HomologyRank { rank: 2 })));
    }

    #[test]
    fn reconstruction_round_trip() {
        let a = theta_with(1);
        let l = rats(&[-1, -1, 2]);
        let r = harmonic_to_unicyclizer(a.graph(), &l, a.partial()).unwrap();
        assert_eq!(r.partial, *a.partial());
        assert_eq!(r.scale, BigRational::one());

        let free = harmonic_to_unicyclizer(&theta(), &l, &IntMatrix::zeros(3, 0)).unwrap();
        assert_eq!(free.partial.cols(), 1);
        let again = free.unicyclization.lambda().unwrap();
        let scaled: Vec<BigRational> = again.iter().map(|x| &free.scale * BigRational::from_integer(x.clone())).collect();
        assert_eq!(scaled, l);

        assert_eq!(harmonic_to_unicyclizer(&theta(), &rats(&[0, 0, 0]), a.partial()).unwrap_err(), Error::ZeroHarmonic);
        assert_eq!(harmonic_to_unicyclizer(&theta(), &rats(&[1, 0, 0]), a.partial()).unwrap_err(), Error::NotHarmonic);
        assert_eq!(
            harmonic_to_unicyclizer(&theta(), &rats(&[1, -1, 0]), a.partial()).unwrap_err(),
            Error::NotOrthogonal { column: 0 }
        );
    }
}
