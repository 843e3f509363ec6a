//! Dense exact linear algebra over ℤ and ℚ.
//!
//! Everything here works on arbitrary-precision integers. Determinants and
//! ranks use fraction-free (Bareiss) elimination, kernels are computed over ℚ
//! and rescaled to primitive integer vectors, and the Smith normal form is
//! obtained by gcd reductions that keep track of the unimodular transforms.

use std::fmt;
use std::ops::{Index, IndexMut, Mul};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Dense integer matrix stored row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<BigInt>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::MatrixShape { rows, cols, found: data.len() });
        }
        Ok(Self { rows, cols, data })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    /// Builds a matrix from rows. All rows must have the same length; an
    /// empty slice gives the 0×0 matrix.
    pub fn from_rows<T, R>(rows: &[R]) -> Result<Self>
    where
        T: Clone + Into<BigInt>,
        R: AsRef<[T]>,
    {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut data = Vec::with_capacity(rows.len() * cols);
        for (i, r) in rows.iter().enumerate() {
            let r = r.as_ref();
            if r.len() != cols {
                return Err(Error::DimensionMismatch(format!(
                    "row {i} has {} entries, expected {cols}",
                    r.len()
                )));
            }
            data.extend(r.iter().cloned().map(Into::into));
        }
        Ok(Self { rows: rows.len(), cols, data })
    }

    /// Builds a `rows × columns.len()` matrix from its columns.
    pub fn from_columns<T, C>(rows: usize, columns: &[C]) -> Result<Self>
    where
        T: Clone + Into<BigInt>,
        C: AsRef<[T]>,
    {
        let mut m = Self::zeros(rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            let c = c.as_ref();
            if c.len() != rows {
                return Err(Error::DimensionMismatch(format!(
                    "column {j} has {} entries, expected {rows}",
                    c.len()
                )));
            }
            for (i, x) in c.iter().enumerate() {
                m[(i, j)] = x.clone().into();
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, r: usize) -> &[BigInt] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<BigInt> {
        (0..self.rows).map(|r| self[(r, c)].clone()).collect()
    }

    pub fn columns(&self) -> impl Iterator<Item = Vec<BigInt>> + '_ {
        (0..self.cols).map(move |c| self.column(c))
    }

    pub fn to_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t[(c, r)] = self[(r, c)].clone();
            }
        }
        t
    }

    pub fn checked_mul(&self, other: &IntMatrix) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(r, k)];
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = &other[(k, c)];
                    if !b.is_zero() {
                        out[(r, c)] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    /// Matrix-vector product. Panics if `v.len() != self.cols()`.
    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(v.len(), self.cols, "vector length does not match matrix columns");
        (0..self.rows).map(|r| dot(self.row(r), v)).collect()
    }

    /// Matrix-vector product over ℚ. Panics on a length mismatch.
    pub fn mul_rat_vec(&self, v: &[BigRational]) -> Vec<BigRational> {
        assert_eq!(v.len(), self.cols, "vector length does not match matrix columns");
        (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .filter(|(a, _)| !a.is_zero())
                    .fold(BigRational::zero(), |acc, (a, x)| acc + x * BigRational::from_integer(a.clone()))
            })
            .collect()
    }

    pub fn checked_add(&self, other: &IntMatrix) -> Result<Self> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch(format!(
                "cannot add {}x{} and {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect();
        Ok(Self { rows: self.rows, cols: self.cols, data })
    }

    pub fn select_columns(&self, cols: &[usize]) -> Self {
        let mut m = Self::zeros(self.rows, cols.len());
        for (j, &c) in cols.iter().enumerate() {
            for r in 0..self.rows {
                m[(r, j)] = self[(r, c)].clone();
            }
        }
        m
    }

    pub fn remove_row(&self, row: usize) -> Self {
        let rows: Vec<&[BigInt]> = (0..self.rows).filter(|&r| r != row).map(|r| self.row(r)).collect();
        let data = rows.iter().flat_map(|r| r.iter().cloned()).collect();
        Self { rows: self.rows - 1, cols: self.cols, data }
    }

    /// Places `other` to the right of `self`.
    pub fn hstack(&self, other: &IntMatrix) -> Result<Self> {
        if self.rows != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot place {} rows beside {} rows",
                other.rows, self.rows
            )));
        }
        let mut m = Self::zeros(self.rows, self.cols + other.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                m[(r, c)] = self[(r, c)].clone();
            }
            for c in 0..other.cols {
                m[(r, self.cols + c)] = other[(r, c)].clone();
            }
        }
        Ok(m)
    }

    /// Places `other` below `self`.
    pub fn vstack(&self, other: &IntMatrix) -> Result<Self> {
        if self.cols != other.cols {
            return Err(Error::DimensionMismatch(format!(
                "cannot stack {} columns under {} columns",
                other.cols, self.cols
            )));
        }
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Ok(Self { rows: self.rows + other.rows, cols: self.cols, data })
    }
}

impl Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;

    fn index(&self, (r, c): (usize, usize)) -> &BigInt {
        assert!(r < self.rows && c < self.cols, "index ({r}, {c}) out of bounds");
        &self.data[r * self.cols + c]
    }
}

impl IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut BigInt {
        assert!(r < self.rows && c < self.cols, "index ({r}, {c}) out of bounds");
        &mut self.data[r * self.cols + c]
    }
}

impl Mul for &IntMatrix {
    type Output = IntMatrix;

    /// Panics on incompatible shapes; use [`IntMatrix::checked_mul`] otherwise.
    fn mul(self, rhs: &IntMatrix) -> IntMatrix {
        self.checked_mul(rhs).expect("incompatible matrix shapes")
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, "; ")?;
            }
            let row: Vec<String> = self.row(r).iter().map(ToString::to_string).collect();
            write!(f, "{}", row.join(" "))?;
        }
        write!(f, "]")
    }
}

/// Vector of exact rationals. `BigRational` keeps every entry in lowest
/// terms with a positive denominator.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatVector(pub Vec<BigRational>);

impl RatVector {
    pub fn from_ints(v: &[BigInt]) -> Self {
        Self(v.iter().cloned().map(BigRational::from_integer).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn dot(&self, other: &RatVector) -> BigRational {
        rat_dot(&self.0, &other.0)
    }

    /// Rescales to the primitive integer vector with the same direction
    /// (sign preserved). The zero vector maps to zeros.
    pub fn to_primitive(&self) -> Vec<BigInt> {
        primitive_from_rationals(&self.0)
    }
}

/// Result of [`smith_normal_form`]: `M = S · D · T` where `D` is the
/// `rows × cols` matrix carrying `diag` on its leading diagonal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithDecomposition {
    pub s: IntMatrix,
    pub t: IntMatrix,
    pub diag: Vec<BigInt>,
}

impl SmithDecomposition {
    /// The middle factor `D` with shape `s.rows() × t.rows()`.
    pub fn diagonal_matrix(&self) -> IntMatrix {
        let mut d = IntMatrix::zeros(self.s.rows(), self.t.rows());
        for (i, x) in self.diag.iter().enumerate() {
            d[(i, i)] = x.clone();
        }
        d
    }

    /// Product of the invariant factors (1 for an empty diagonal).
    pub fn torsion_order(&self) -> BigInt {
        self.diag.iter().product()
    }

    pub fn reassemble(&self) -> IntMatrix {
        &(&self.s * &self.diagonal_matrix()) * &self.t
    }
}

/// ℤ-basis of the integer kernel lattice `{x ∈ ℤⁿ : M x = 0}` together with
/// a left inverse that reads off coordinates of kernel vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KernelLattice {
    /// `n × k` matrix whose columns form a lattice basis.
    pub basis: IntMatrix,
    /// `k × n` matrix with `coordinates · basis = I`.
    pub coordinates: IntMatrix,
}

impl KernelLattice {
    /// Coordinates of a kernel vector in `basis`.
    pub fn coordinates_of(&self, v: &[BigInt]) -> Vec<BigInt> {
        self.coordinates.mul_vec(v)
    }
}

pub fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter()
        .zip(b)
        .filter(|(x, y)| !x.is_zero() && !y.is_zero())
        .map(|(x, y)| x * y)
        .sum()
}

pub fn rat_dot(a: &[BigRational], b: &[BigRational]) -> BigRational {
    a.iter()
        .zip(b)
        .filter(|(x, y)| !x.is_zero() && !y.is_zero())
        .fold(BigRational::zero(), |acc, (x, y)| acc + x * y)
}

/// Exact determinant by Bareiss elimination. The 0×0 determinant is 1.
pub fn det(m: &IntMatrix) -> Result<BigInt> {
    if !m.is_square() {
        return Err(Error::NotSquare { rows: m.rows(), cols: m.cols() });
    }
    let n = m.rows();
    if n == 0 {
        return Ok(BigInt::one());
    }
    let mut a = m.to_rows();
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    negate = !negate;
                }
                None => return Ok(BigInt::zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    Ok(if negate { -d } else { d })
}

/// Rank over ℚ, by fraction-free forward elimination.
pub fn rank(m: &IntMatrix) -> usize {
    let mut a = m.to_rows();
    let (rows, cols) = (m.rows(), m.cols());
    let mut r = 0;
    let mut prev = BigInt::one();
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        for i in r + 1..rows {
            for j in c + 1..cols {
                let v = &a[r][c] * &a[i][j] - &a[i][c] * &a[r][j];
                a[i][j] = v / &prev;
            }
            a[i][c] = BigInt::zero();
        }
        prev = a[r][c].clone();
        r += 1;
    }
    r
}

/// Reduced row echelon form over ℚ; returns the rows and the pivot columns.
pub fn rref(m: &IntMatrix) -> (Vec<Vec<BigRational>>, Vec<usize>) {
    let (rows, cols) = (m.rows(), m.cols());
    let mut a: Vec<Vec<BigRational>> = (0..rows)
        .map(|r| m.row(r).iter().cloned().map(BigRational::from_integer).collect())
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = a[r][c].recip();
        for x in a[r].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = a[r].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, p) in row[c..].iter_mut().zip(&pivot_row[c..]) {
                    *x -= &f * p;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    (a, pivots)
}

/// Basis of the kernel over ℚ as primitive integer vectors, first nonzero
/// entry positive, one per free column in increasing column order.
pub fn kernel_basis(m: &IntMatrix) -> Vec<Vec<BigInt>> {
    let (reduced, pivots) = rref(m);
    let cols = m.cols();
    let mut is_pivot = vec![false; cols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    (0..cols)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut v = vec![BigRational::zero(); cols];
            v[f] = BigRational::one();
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = -reduced[i][f].clone();
            }
            let mut ints = primitive_from_rationals(&v);
            normalize_first_positive(&mut ints);
            ints
        })
        .collect()
}

/// Scales a rational vector to the primitive integer vector pointing the
/// same way.
pub fn primitive_from_rationals(v: &[BigRational]) -> Vec<BigInt> {
    let lcm = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| x.numer() * (&lcm / x.denom())).collect();
    make_primitive(ints)
}

/// Divides out the gcd of the entries. Zero vectors are returned unchanged.
pub fn make_primitive(mut v: Vec<BigInt>) -> Vec<BigInt> {
    let g = gcd_of_vector(&v);
    if !g.is_zero() && !g.is_one() {
        for x in v.iter_mut() {
            *x /= &g;
        }
    }
    v
}

/// Flips the sign of `v` so its first nonzero entry is positive.
pub fn normalize_first_positive(v: &mut [BigInt]) {
    if v.iter().find(|x| !x.is_zero()).is_some_and(Signed::is_negative) {
        for x in v.iter_mut() {
            *x = -&*x;
        }
    }
}

/// gcd of the absolute values of the entries; 0 for an empty or zero vector.
pub fn gcd_of_vector(v: &[BigInt]) -> BigInt {
    v.iter().fold(BigInt::zero(), |g, x| g.gcd(x))
}

type Rows = Vec<Vec<BigInt>>;

/// Replaces rows `i`, `j` with `p·a_i + q·a_j` and `r·a_i + s·a_j`.
fn combine_rows(a: &mut Rows, i: usize, j: usize, [p, q, r, s]: [&BigInt; 4]) {
    let (ri, rj) = (a[i].clone(), a[j].clone());
    for k in 0..ri.len() {
        a[i][k] = p * &ri[k] + q * &rj[k];
        a[j][k] = r * &ri[k] + s * &rj[k];
    }
}

/// Replaces columns `i`, `j` with `p·c_i + q·c_j` and `r·c_i + s·c_j`.
fn combine_cols(a: &mut Rows, i: usize, j: usize, [p, q, r, s]: [&BigInt; 4]) {
    for row in a.iter_mut() {
        let (x, y) = (row[i].clone(), row[j].clone());
        row[i] = p * &x + q * &y;
        row[j] = r * &x + s * &y;
    }
}

/// Working state for the Smith reduction. Invariant: `M = s · d · t` and
/// `t · t_inv = I`.
struct SmithState {
    d: Rows,
    s: Rows,
    t: Rows,
    t_inv: Rows,
}

impl SmithState {
    /// Applies the unimodular 2×2 map `[p q; r s]` to rows `i`, `j` of `d`.
    fn row_op(&mut self, i: usize, j: usize, p: BigInt, q: BigInt, r: BigInt, s: BigInt) {
        let det = &p * &s - &q * &r;
        debug_assert!(det.abs().is_one());
        combine_rows(&mut self.d, i, j, [&p, &q, &r, &s]);
        // s ← s · E⁻¹
        let (ii, ij, ji, jj) = (&s * &det, -&q * &det, -&r * &det, &p * &det);
        combine_cols(&mut self.s, i, j, [&ii, &ji, &ij, &jj]);
    }

    /// Applies `c_i ← p·c_i + q·c_j`, `c_j ← r·c_i + s·c_j` to `d`.
    fn col_op(&mut self, i: usize, j: usize, p: BigInt, q: BigInt, r: BigInt, s: BigInt) {
        let det = &p * &s - &q * &r;
        debug_assert!(det.abs().is_one());
        combine_cols(&mut self.d, i, j, [&p, &q, &r, &s]);
        combine_cols(&mut self.t_inv, i, j, [&p, &q, &r, &s]);
        // t ← F⁻¹ · t with F = [p r; q s] on (i, j)
        let (ii, ij, ji, jj) = (&s * &det, -&r * &det, -&q * &det, &p * &det);
        combine_rows(&mut self.t, i, j, [&ii, &ij, &ji, &jj]);
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        if i != j {
            self.row_op(i, j, BigInt::zero(), BigInt::one(), BigInt::one(), BigInt::zero());
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        if i != j {
            self.col_op(i, j, BigInt::zero(), BigInt::one(), BigInt::one(), BigInt::zero());
        }
    }

    fn negate_row(&mut self, i: usize) {
        for x in self.d[i].iter_mut() {
            *x = -&*x;
        }
        for row in self.s.iter_mut() {
            row[i] = -&row[i];
        }
    }

    /// Moves the gcd of `d[t][t]` and `d[i][t]` into the pivot and zeroes
    /// `d[i][t]`.
    fn reduce_row_pair(&mut self, t: usize, i: usize) {
        let (a, b) = (self.d[t][t].clone(), self.d[i][t].clone());
        if !a.is_zero() && b.is_multiple_of(&a) {
            let q = &b / &a;
            self.row_op(t, i, BigInt::one(), BigInt::zero(), -q, BigInt::one());
        } else {
            let e = a.extended_gcd(&b);
            self.row_op(t, i, e.x, e.y, -(&b / &e.gcd), &a / &e.gcd);
        }
    }

    fn reduce_col_pair(&mut self, t: usize, j: usize) {
        let (a, b) = (self.d[t][t].clone(), self.d[t][j].clone());
        if !a.is_zero() && b.is_multiple_of(&a) {
            let q = &b / &a;
            self.col_op(t, j, BigInt::one(), BigInt::zero(), -q, BigInt::one());
        } else {
            let e = a.extended_gcd(&b);
            self.col_op(t, j, e.x, e.y, -(&b / &e.gcd), &a / &e.gcd);
        }
    }
}

fn smith_state(m: &IntMatrix) -> SmithState {
    let (rows, cols) = (m.rows(), m.cols());
    let mut st = SmithState {
        d: m.to_rows(),
        s: IntMatrix::identity(rows).to_rows(),
        t: IntMatrix::identity(cols).to_rows(),
        t_inv: IntMatrix::identity(cols).to_rows(),
    };
    let mut t = 0;
    while t < rows.min(cols) {
        let mut best: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                let x = &st.d[i][j];
                if !x.is_zero() && best.is_none_or(|(bi, bj)| x.abs() < st.d[bi][bj].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        st.swap_rows(t, pi);
        st.swap_cols(t, pj);
        loop {
            for i in t + 1..rows {
                if !st.d[i][t].is_zero() {
                    st.reduce_row_pair(t, i);
                }
            }
            for j in t + 1..cols {
                if !st.d[t][j].is_zero() {
                    st.reduce_col_pair(t, j);
                }
            }
            let column_clear = (t + 1..rows).all(|i| st.d[i][t].is_zero());
            if !column_clear {
                continue;
            }
            let pivot = st.d[t][t].clone();
            let offender = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !st.d[i][j].is_multiple_of(&pivot)));
            match offender {
                Some(i) => st.row_op(t, i, BigInt::one(), BigInt::one(), BigInt::zero(), BigInt::one()),
                None => break,
            }
        }
        if st.d[t][t].is_negative() {
            st.negate_row(t);
        }
        t += 1;
    }
    st
}

fn from_rows_unchecked(rows: usize, cols: usize, a: Rows) -> IntMatrix {
    IntMatrix { rows, cols, data: a.into_iter().flatten().collect() }
}

/// Smith normal form `M = S · D · T` with unimodular `S`, `T` and positive
/// invariant factors `d₁ | d₂ | ⋯ | d_r`, `r = rank(M)`.
pub fn smith_normal_form(m: &IntMatrix) -> SmithDecomposition {
    let (rows, cols) = (m.rows(), m.cols());
    let st = smith_state(m);
    let diag = (0..rows.min(cols)).map(|i| st.d[i][i].clone()).take_while(|x| !x.is_zero()).collect();
    SmithDecomposition {
        s: from_rows_unchecked(rows, rows, st.s),
        t: from_rows_unchecked(cols, cols, st.t),
        diag,
    }
}

/// Lattice basis of the integer kernel of `m`, taken from the Smith column
/// transform.
pub fn kernel_lattice(m: &IntMatrix) -> KernelLattice {
    let (rows, cols) = (m.rows(), m.cols());
    let st = smith_state(m);
    let r = (0..rows.min(cols)).take_while(|&i| !st.d[i][i].is_zero()).count();
    let t_inv = from_rows_unchecked(cols, cols, st.t_inv);
    let t = from_rows_unchecked(cols, cols, st.t);
    let free: Vec<usize> = (r..cols).collect();
    let basis = t_inv.select_columns(&free);
    let coordinates = t.transpose().select_columns(&free).transpose();
    KernelLattice { basis, coordinates }
}
