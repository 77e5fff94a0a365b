//! Incidence matrices and the exact rational oracle for rank, nullspace and
//! minimal column dependency.
//!
//! Everything here is exact: elimination is fraction-free (Bareiss) over
//! `i128` with a transparent promotion to `BigInt` when an intermediate
//! value would overflow. No floating point is involved anywhere; circuit
//! decisions are discrete and rounding would falsify them.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::hypergraph::{EdgeId, OrientedHypergraph, VertexId};

/// Integer incidence matrix with labeled rows (vertices) and columns
/// (edges). Entry `(i, j)` is the sum of incidence signs over the slots of
/// the pair; for a simple hypergraph all entries lie in `{0, +1, -1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IncidenceMatrix {
    row_labels: Vec<VertexId>,
    col_labels: Vec<EdgeId>,
    entries: Vec<Vec<i64>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DependencyStatus {
    Independent,
    DependentNotMinimal,
    MinimallyDependent,
}

impl fmt::Display for DependencyStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DependencyStatus::Independent => "independent",
            DependencyStatus::DependentNotMinimal => "dependent-not-minimal",
            DependencyStatus::MinimallyDependent => "minimally-dependent",
        })
    }
}

/// Exact witness for the (non-)minimality of a column dependency. When the
/// status is minimally-dependent the nullity is 1 and the generator has no
/// zero coordinate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DependencyCertificate {
    pub status: DependencyStatus,
    pub nullity: usize,
    /// Exact rational nullspace generator with cleared denominators,
    /// content-reduced, first nonzero coordinate positive. Present exactly
    /// when the nullity is 1.
    pub generator: Option<Vec<BigInt>>,
    /// The columns the certificate speaks about, in matrix order.
    pub columns: Vec<EdgeId>,
}

impl DependencyCertificate {
    pub fn is_circuit(&self) -> bool {
        self.status == DependencyStatus::MinimallyDependent
    }
}

impl IncidenceMatrix {
    /// Incidence matrix of an oriented hypergraph, rows and columns in the
    /// hypergraph's insertion order.
    pub fn from_hypergraph(g: &OrientedHypergraph) -> Self {
        let nv = g.vertices().len();
        let ne = g.edges().len();
        let mut entries = vec![vec![0i64; ne]; nv];
        for inc in g.incidences() {
            let i = g.vertex_position(&inc.vertex).expect("validated");
            let j = g.edge_position(&inc.edge).expect("validated");
            entries[i][j] += inc.sign.value();
        }
        IncidenceMatrix {
            row_labels: g.vertices().to_vec(),
            col_labels: g.edges().to_vec(),
            entries,
        }
    }

    pub fn from_entries(
        row_labels: Vec<VertexId>,
        col_labels: Vec<EdgeId>,
        entries: Vec<Vec<i64>>,
    ) -> Self {
        assert_eq!(entries.len(), row_labels.len());
        for row in &entries {
            assert_eq!(row.len(), col_labels.len());
        }
        IncidenceMatrix {
            row_labels,
            col_labels,
            entries,
        }
    }

    pub fn rows(&self) -> usize {
        self.entries.len()
    }

    pub fn cols(&self) -> usize {
        self.col_labels.len()
    }

    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.entries[i][j]
    }

    pub fn row_labels(&self) -> &[VertexId] {
        &self.row_labels
    }

    pub fn col_labels(&self) -> &[EdgeId] {
        &self.col_labels
    }

    pub fn entries(&self) -> &[Vec<i64>] {
        &self.entries
    }

    pub fn negate_row(&self, i: usize) -> Self {
        let mut m = self.clone();
        for x in &mut m.entries[i] {
            *x = -*x;
        }
        m
    }

    pub fn negate_col(&self, j: usize) -> Self {
        let mut m = self.clone();
        for row in &mut m.entries {
            row[j] = -row[j];
        }
        m
    }

    pub fn without_row(&self, i: usize) -> Self {
        let mut m = self.clone();
        m.entries.remove(i);
        m.row_labels.remove(i);
        m
    }

    pub fn without_col(&self, j: usize) -> Self {
        let mut m = self.clone();
        for row in &mut m.entries {
            row.remove(j);
        }
        m.col_labels.remove(j);
        m
    }

    pub fn column_submatrix(&self, cols: &[usize]) -> Self {
        let entries = self
            .entries
            .iter()
            .map(|row| cols.iter().map(|&j| row[j]).collect())
            .collect();
        IncidenceMatrix {
            row_labels: self.row_labels.clone(),
            col_labels: cols.iter().map(|&j| self.col_labels[j].clone()).collect(),
            entries,
        }
    }

    /// Exact rank and nullity over the rationals.
    pub fn rank_nullity(&self) -> (usize, usize) {
        let rank = echelon(&self.entries).rank;
        (rank, self.cols() - rank)
    }

    /// Exact integral nullspace basis: one vector per free column, cleared
    /// denominators, content-reduced, first nonzero coordinate positive.
    pub fn nullspace_basis(&self) -> Vec<Vec<BigInt>> {
        nullspace_from_echelon(&echelon(&self.entries), self.cols())
    }

    /// Certificate for the full column set.
    pub fn certificate(&self) -> DependencyCertificate {
        let cols: Vec<usize> = (0..self.cols()).collect();
        self.certificate_for_columns(&cols)
    }

    /// Certificate for a column subset: minimally dependent means the
    /// selected columns have nullity 1 and the generator is fully supported.
    pub fn certificate_for_columns(&self, cols: &[usize]) -> DependencyCertificate {
        let sub = self.column_submatrix(cols);
        let ech = echelon(&sub.entries);
        let nullity = sub.cols() - ech.rank;
        let columns = sub.col_labels.clone();
        match nullity {
            0 => DependencyCertificate {
                status: DependencyStatus::Independent,
                nullity,
                generator: None,
                columns,
            },
            1 => {
                let gen = nullspace_from_echelon(&ech, sub.cols())
                    .into_iter()
                    .next()
                    .expect("nullity 1 has a basis vector");
                debug_assert!(sub.kernel_check(&gen));
                let full = gen.iter().all(|c| !c.is_zero());
                DependencyCertificate {
                    status: if full {
                        DependencyStatus::MinimallyDependent
                    } else {
                        DependencyStatus::DependentNotMinimal
                    },
                    nullity,
                    generator: Some(gen),
                    columns,
                }
            }
            _ => DependencyCertificate {
                status: DependencyStatus::DependentNotMinimal,
                nullity,
                generator: None,
                columns,
            },
        }
    }

    /// Exact check that `M·x = 0`.
    pub fn kernel_check(&self, x: &[BigInt]) -> bool {
        if x.len() != self.cols() {
            return false;
        }
        self.entries.iter().all(|row| {
            let mut acc = BigInt::zero();
            for (a, xi) in row.iter().zip(x) {
                acc += BigInt::from(*a) * xi;
            }
            acc.is_zero()
        })
    }
}

impl fmt::Display for IncidenceMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let label_w = self
            .row_labels
            .iter()
            .map(|l| l.as_str().len())
            .max()
            .unwrap_or(0);
        let col_w: Vec<usize> = self
            .col_labels
            .iter()
            .enumerate()
            .map(|(j, l)| {
                self.entries
                    .iter()
                    .map(|row| format!("{}", row[j]).len())
                    .chain([l.as_str().len()])
                    .max()
                    .unwrap()
            })
            .collect();
        write!(f, "{:label_w$}", "")?;
        for (j, l) in self.col_labels.iter().enumerate() {
            write!(f, " {:>w$}", l.as_str(), w = col_w[j])?;
        }
        writeln!(f)?;
        for (i, row) in self.entries.iter().enumerate() {
            write!(f, "{:label_w$}", self.row_labels[i].as_str())?;
            for (j, x) in row.iter().enumerate() {
                write!(f, " {:>w$}", x, w = col_w[j])?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// Exact elimination kernel.

struct Echelon {
    rank: usize,
    /// Pivot columns in increasing order.
    pivot_cols: Vec<usize>,
    /// The eliminated pivot rows, one per pivot, as exact integers.
    rows: Vec<Vec<BigInt>>,
    /// Original row indices used as pivots, in elimination order.
    #[allow(dead_code)]
    pivot_rows: Vec<usize>,
}

/// Fraction-free Gaussian elimination (Bareiss). Tries `i128` first and
/// falls back to `BigInt` on overflow. Pivot choice is the first nonzero in
/// a row-major scan, so the result is deterministic.
fn echelon(entries: &[Vec<i64>]) -> Echelon {
    match echelon_i128(entries) {
        Some(e) => e,
        None => echelon_bigint(entries),
    }
}

/// Back-substitution on an echelon form: one basis vector per free column.
fn nullspace_from_echelon(ech: &Echelon, n: usize) -> Vec<Vec<BigInt>> {
    let mut is_pivot = vec![false; n];
    for &c in &ech.pivot_cols {
        is_pivot[c] = true;
    }
    let mut basis = Vec::new();
    for f in 0..n {
        if is_pivot[f] {
            continue;
        }
        let mut x: Vec<Fraction> = vec![Fraction::zero(); n];
        x[f] = Fraction::one();
        for (i, &pc) in ech.pivot_cols.iter().enumerate().rev() {
            let row = &ech.rows[i];
            let mut acc = Fraction::zero();
            for j in (pc + 1)..n {
                if !row[j].is_zero() && !x[j].num.is_zero() {
                    acc = acc.add(&x[j].scale(&row[j]));
                }
            }
            x[pc] = acc.div_big(&row[pc]).neg();
        }
        basis.push(normalize_rational_vector(&x));
    }
    basis
}

fn echelon_i128(entries: &[Vec<i64>]) -> Option<Echelon> {
    let rows = entries.len();
    let cols = entries.first().map_or(0, Vec::len);
    let mut m: Vec<Vec<i128>> = entries
        .iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect();
    let mut row_ids: Vec<usize> = (0..rows).collect();
    let mut pivot_cols = Vec::new();
    let mut pivot_rows = Vec::new();
    let mut r = 0usize;
    let mut prev: i128 = 1;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(r, p);
        row_ids.swap(r, p);
        let pivot = m[r][c];
        for i in (r + 1)..rows {
            for j in (c + 1)..cols {
                let a = m[i][j].checked_mul(pivot)?;
                let b = m[i][c].checked_mul(m[r][j])?;
                let num = a.checked_sub(b)?;
                debug_assert_eq!(num % prev, 0);
                m[i][j] = num / prev;
            }
            m[i][c] = 0;
        }
        pivot_cols.push(c);
        pivot_rows.push(row_ids[r]);
        prev = pivot;
        r += 1;
        if r == rows {
            break;
        }
    }
    let out_rows = (0..r)
        .map(|i| m[i].iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    Some(Echelon {
        rank: r,
        pivot_cols,
        rows: out_rows,
        pivot_rows,
    })
}

fn echelon_bigint(entries: &[Vec<i64>]) -> Echelon {
    let rows = entries.len();
    let cols = entries.first().map_or(0, Vec::len);
    let mut m: Vec<Vec<BigInt>> = entries
        .iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    let mut row_ids: Vec<usize> = (0..rows).collect();
    let mut pivot_cols = Vec::new();
    let mut pivot_rows = Vec::new();
    let mut r = 0usize;
    let mut prev = BigInt::from(1);
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        row_ids.swap(r, p);
        let pivot = m[r][c].clone();
        for i in (r + 1)..rows {
            for j in (c + 1)..cols {
                let num = &m[i][j] * &pivot - &m[i][c] * &m[r][j];
                debug_assert!((&num % &prev).is_zero());
                m[i][j] = num / &prev;
            }
            m[i][c] = BigInt::zero();
        }
        pivot_cols.push(c);
        pivot_rows.push(row_ids[r]);
        prev = pivot;
        r += 1;
        if r == rows {
            break;
        }
    }
    m.truncate(r);
    Echelon {
        rank: r,
        pivot_cols,
        rows: m,
        pivot_rows,
    }
}

// Minimal exact fraction used only for back-substitution.
#[derive(Clone)]
struct Fraction {
    num: BigInt,
    den: BigInt, // always positive
}

impl Fraction {
    fn zero() -> Self {
        Fraction {
            num: BigInt::zero(),
            den: BigInt::from(1),
        }
    }
    fn one() -> Self {
        Fraction {
            num: BigInt::from(1),
            den: BigInt::from(1),
        }
    }
    fn reduced(num: BigInt, den: BigInt) -> Self {
        debug_assert!(!den.is_zero());
        if num.is_zero() {
            return Fraction::zero();
        }
        let g = num.gcd(&den);
        let (mut num, mut den) = (num / &g, den / g);
        if den.is_negative() {
            num = -num;
            den = -den;
        }
        Fraction { num, den }
    }
    fn add(&self, other: &Fraction) -> Fraction {
        Fraction::reduced(
            &self.num * &other.den + &other.num * &self.den,
            &self.den * &other.den,
        )
    }
    fn scale(&self, k: &BigInt) -> Fraction {
        Fraction::reduced(&self.num * k, self.den.clone())
    }
    fn div_big(&self, k: &BigInt) -> Fraction {
        Fraction::reduced(self.num.clone(), &self.den * k)
    }
    fn neg(&self) -> Fraction {
        Fraction {
            num: -self.num.clone(),
            den: self.den.clone(),
        }
    }
}

/// Clears denominators, divides by the content, and flips signs so the first
/// nonzero coordinate is positive.
fn normalize_rational_vector(x: &[Fraction]) -> Vec<BigInt> {
    let mut lcm = BigInt::from(1);
    for f in x {
        if !f.num.is_zero() {
            lcm = lcm.lcm(&f.den);
        }
    }
    let mut out: Vec<BigInt> = x
        .iter()
        .map(|f| {
            if f.num.is_zero() {
                BigInt::zero()
            } else {
                &f.num * (&lcm / &f.den)
            }
        })
        .collect();
    let mut content = BigInt::zero();
    for v in &out {
        content = content.gcd(v);
    }
    if !content.is_zero() && content != BigInt::from(1) {
        for v in &mut out {
            *v /= &content;
        }
    }
    if let Some(first) = out.iter().find(|v| !v.is_zero()) {
        if first.is_negative() {
            for v in &mut out {
                *v = -v.clone();
            }
        }
    }
    out
}
