//! Nilpotent orbits of `gl_n` by Jordan type, their highest-form
//! representatives, and the row-strict tableaux indexing Springer cells.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::format;
use crate::rootsys::{dominates, Root, RootSet};
use crate::symgroup::{Permutation, MAX_DEGREE};

/// A partition of `n`, parts weakly decreasing. Row 1 is the top row.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::InvalidPartition("no parts".into()));
        }
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("{parts:?} has a zero part")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?} is not weakly decreasing")));
        }
        if parts.iter().sum::<usize>() > MAX_DEGREE {
            return Err(Error::InvalidPartition(format!("{parts:?} is too large")));
        }
        Ok(Self { parts })
    }

    /// `(1^n)`, the Jordan type of the zero matrix.
    pub fn column(n: usize) -> Self {
        Self { parts: vec![1; n] }
    }

    /// Every partition of `n`, in decreasing lexicographic order.
    pub fn all(n: usize) -> Vec<Partition> {
        fn rec(rem: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rem == 0 {
                out.push(Partition { parts: prefix.clone() });
                return;
            }
            for part in (1..=rem.min(max)).rev() {
                prefix.push(part);
                rec(rem - part, part, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        if n > 0 {
            rec(n, n, &mut Vec::new(), &mut out);
        }
        out
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn num_rows(&self) -> usize {
        self.parts.len()
    }

    pub fn num_columns(&self) -> usize {
        self.parts[0]
    }

    /// Number of boxes in column `c` (1-based).
    pub fn column_height(&self, c: usize) -> usize {
        self.parts.iter().filter(|&&p| p >= c).count()
    }

    /// At most three rows or at most two columns.
    pub fn in_main_hypothesis(&self) -> bool {
        self.num_rows() <= 3 || self.num_columns() <= 2
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format::join(&self.parts))
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::new(format::parse_list(s)?)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        Self::new(Vec::deserialize(deserializer)?).map_err(serde::de::Error::custom)
    }
}

/// The base filling: labels run up each column from the bottom, columns
/// taken left to right.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BaseFilling {
    shape: Partition,
    /// `boxes[k-1] = (row, column)` of label `k`, both 1-based.
    boxes: Vec<(usize, usize)>,
    /// `labels[row-1][column-1]`.
    labels: Vec<Vec<usize>>,
}

pub fn base_filling(shape: &Partition) -> BaseFilling {
    let mut labels: Vec<Vec<usize>> = shape.parts.iter().map(|&p| vec![0; p]).collect();
    let mut boxes = Vec::with_capacity(shape.size());
    let mut next = 1;
    for c in 1..=shape.num_columns() {
        for row in (1..=shape.column_height(c)).rev() {
            labels[row - 1][c - 1] = next;
            boxes.push((row, c));
            next += 1;
        }
    }
    BaseFilling {
        shape: shape.clone(),
        boxes,
        labels,
    }
}

impl BaseFilling {
    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn box_of(&self, k: usize) -> (usize, usize) {
        self.boxes[k - 1]
    }

    pub fn label_at(&self, row: usize, column: usize) -> usize {
        self.labels[row - 1][column - 1]
    }

    /// `r_k`: the label directly right of `k`, if any.
    pub fn right_neighbor(&self, k: usize) -> Option<usize> {
        let (row, c) = self.box_of(k);
        self.labels[row - 1].get(c).copied()
    }

    pub fn as_tableau(&self) -> Tableau {
        Tableau {
            shape: self.shape.clone(),
            rows: self.labels.clone(),
        }
    }
}

/// `Φ_X = {(k, r_k) : r_k exists}` for the highest-form representative
/// `X = Σ E_{k, r_k}`.
pub fn highest_form_rootset(shape: &Partition) -> RootSet {
    let filling = base_filling(shape);
    let n = shape.size();
    let mut set = RootSet::empty(n);
    for k in 1..=n {
        if let Some(r) = filling.right_neighbor(k) {
            set.insert_unchecked(Root::pair(k, r));
        }
    }
    set
}

/// Whether the pivot function of `Σ_{(i,j) ∈ phi_x} E_{ij}` is increasing.
///
/// `piv(c)` is the row of the pivot in column `c`, or 0 for an empty
/// column; the sequence `piv(1), ..., piv(n)` must be weakly increasing.
pub fn is_highest_form(phi_x: &RootSet) -> Result<bool> {
    let n = phi_x.degree();
    let mut piv = vec![0usize; n + 1];
    for r in phi_x.iter() {
        if piv[r.target()] != 0 {
            return Err(Error::DuplicatePivotColumn(r.target()));
        }
        piv[r.target()] = r.source();
    }
    Ok(piv[1..].windows(2).all(|w| w[0] <= w[1]))
}

/// `Φ(𝒱) = {γ ∈ Φ⁺ : γ ⪈ α for some α ∈ Φ_X}`.
pub fn phi_v_closure(phi_x: &RootSet) -> RootSet {
    let n = phi_x.degree();
    let mut set = RootSet::empty(n);
    for i in 1..=n {
        for j in i + 1..=n {
            let g = Root::pair(i, j);
            if phi_x.iter().any(|a| a.is_positive() && dominates(g, a)) {
                set.insert_unchecked(g);
            }
        }
    }
    set
}

/// `Φ(𝒱)` read off the base filling: `(i,j)` with `j` in a column strictly
/// right of `i`'s column and `j > r_i` (any such `j` when `r_i` is absent).
pub fn phi_v_filling(shape: &Partition) -> RootSet {
    let filling = base_filling(shape);
    let n = shape.size();
    let mut set = RootSet::empty(n);
    for i in 1..=n {
        let col_i = filling.box_of(i).1;
        let r_i = filling.right_neighbor(i).unwrap_or(0);
        for j in i + 1..=n {
            if filling.box_of(j).1 > col_i && j > r_i {
                set.insert_unchecked(Root::pair(i, j));
            }
        }
    }
    set
}

/// Precomputed data for the highest-form nilpotent of a given Jordan type.
#[derive(Debug, Clone)]
pub struct Nilpotent {
    pub partition: Partition,
    pub filling: BaseFilling,
    pub phi_x: RootSet,
    pub phi_v: RootSet,
    /// `Φ⁺ − Φ(𝒱)`.
    pub phi_v_complement: RootSet,
}

impl Nilpotent {
    pub fn new(partition: &Partition) -> Self {
        let phi_v = phi_v_filling(partition);
        Self {
            partition: partition.clone(),
            filling: base_filling(partition),
            phi_x: highest_form_rootset(partition),
            phi_v_complement: phi_v.positive_complement(),
            phi_v,
        }
    }

    pub fn degree(&self) -> usize {
        self.partition.size()
    }

    pub(crate) fn check(&self, w: &Permutation) -> Result<()> {
        if w.degree() != self.degree() {
            return Err(Error::DegreeMismatch {
                expected: self.degree(),
                found: w.degree(),
            });
        }
        Ok(())
    }

    /// Root test for `wB ∈ 𝓑^X`: `w⁻¹ · γ` is positive for all `γ ∈ Φ_X`.
    pub fn springer_contains_by_roots(&self, w: &Permutation) -> Result<bool> {
        self.check(w)?;
        let w_inv = w.inverse();
        Ok(self.phi_x.iter().all(|g| g.act(&w_inv).is_positive()))
    }

    /// Tableau test for `wB ∈ 𝓑^X`.
    pub fn springer_contains(&self, w: &Permutation) -> Result<bool> {
        Ok(self.springer_tableau(w)?.is_row_strict())
    }

    /// Labels the box holding `i` in the base filling by `w⁻¹(i)`.
    pub fn springer_tableau(&self, w: &Permutation) -> Result<Tableau> {
        self.check(w)?;
        let w_inv = w.inverse();
        let mut rows: Vec<Vec<usize>> =
            self.partition.parts.iter().map(|&p| vec![0; p]).collect();
        for i in 1..=self.degree() {
            let (row, c) = self.filling.box_of(i);
            rows[row - 1][c - 1] = w_inv.apply(i);
        }
        Ok(Tableau {
            shape: self.partition.clone(),
            rows,
        })
    }

    /// `|N(w⁻¹) ∩ Φ(𝒱)^c|`.
    pub fn springer_cell_dim_by_roots(&self, w: &Permutation) -> Result<usize> {
        if !self.springer_contains_by_roots(w)? {
            return Err(Error::NotInSpringerFiber(w.to_string()));
        }
        Ok(self.inversions_outside_phi_v(&w.inverse()))
    }

    /// `|N(u) ∩ Φ(𝒱)^c|`.
    pub(crate) fn inversions_outside_phi_v(&self, u: &Permutation) -> usize {
        let n = self.degree();
        let mut count = 0;
        for i in 1..=n {
            for j in i + 1..=n {
                if u.apply(i) > u.apply(j) && !self.phi_v.contains(Root::pair(i, j)) {
                    count += 1;
                }
            }
        }
        count
    }

    /// Sum of the `q`-row inversions of the tableau of `w`.
    pub fn springer_cell_dim_by_rows(&self, w: &Permutation) -> Result<usize> {
        let t = self.springer_tableau(w)?;
        if !t.is_row_strict() {
            return Err(Error::NotInSpringerFiber(w.to_string()));
        }
        Ok(t.row_inversion_counts()?.iter().sum())
    }

    /// `dim(C_w ∩ 𝓑^X)`; both formulas are evaluated and must agree.
    pub fn springer_cell_dim(&self, w: &Permutation) -> Result<usize> {
        let by_rows = self.springer_cell_dim_by_rows(w)?;
        let by_roots = self.springer_cell_dim_by_roots(w)?;
        assert_eq!(
            by_rows, by_roots,
            "Springer cell dimension formulas disagree for w = {w}, λ = {}",
            self.partition
        );
        Ok(by_rows)
    }
}

pub fn springer_tableau(w: &Permutation, shape: &Partition) -> Result<Tableau> {
    Nilpotent::new(shape).springer_tableau(w)
}

pub fn springer_contains(w: &Permutation, shape: &Partition) -> Result<bool> {
    Nilpotent::new(shape).springer_contains(w)
}

pub fn springer_cell_dim(w: &Permutation, shape: &Partition) -> Result<usize> {
    Nilpotent::new(shape).springer_cell_dim(w)
}

/// A bijective filling of a Young diagram by `1..=n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Tableau {
    shape: Partition,
    rows: Vec<Vec<usize>>,
}

impl Tableau {
    pub fn from_rows(rows: Vec<Vec<usize>>) -> Result<Self> {
        let shape = Partition::new(rows.iter().map(Vec::len).collect())
            .map_err(|e| Error::Parse(format!("tableau shape: {e}")))?;
        let n = shape.size();
        let mut seen = vec![false; n + 1];
        for &x in rows.iter().flatten() {
            if x == 0 || x > n || seen[x] {
                return Err(Error::Parse(format!("tableau entries {rows:?} are not a bijection of 1..={n}")));
            }
            seen[x] = true;
        }
        Ok(Self { shape, rows })
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn degree(&self) -> usize {
        self.shape.size()
    }

    pub fn is_row_strict(&self) -> bool {
        self.rows.iter().all(|r| r.windows(2).all(|w| w[0] < w[1]))
    }

    /// `ℓ_{q-1}`: among the rows of `T[q]` (entries `≤ q`), the number of
    /// rows above the row of `q` with the same length, plus the number of
    /// rows anywhere that are strictly longer.
    pub fn row_inversions(&self, q: usize) -> Result<usize> {
        let n = self.degree();
        if q < 2 || q > n {
            return Err(Error::RowIndexOutOfRange { q, n });
        }
        if !self.is_row_strict() {
            return Err(Error::NotRowStrict(self.to_string()));
        }
        Ok(self.row_inversions_unchecked(q))
    }

    fn row_inversions_unchecked(&self, q: usize) -> usize {
        let lengths: Vec<usize> = self
            .rows
            .iter()
            .map(|r| r.iter().filter(|&&x| x <= q).count())
            .collect();
        let q_row = self
            .rows
            .iter()
            .position(|r| r.contains(&q))
            .expect("q fills a box");
        let own = lengths[q_row];
        let same_above = lengths[..q_row].iter().filter(|&&l| l == own).count();
        let longer = lengths.iter().filter(|&&l| l > own).count();
        same_above + longer
    }

    /// `(ℓ_1, ..., ℓ_{n-1})`.
    pub fn row_inversion_counts(&self) -> Result<Vec<usize>> {
        if !self.is_row_strict() {
            return Err(Error::NotRowStrict(self.to_string()));
        }
        Ok((2..=self.degree()).map(|q| self.row_inversions_unchecked(q)).collect())
    }
}

impl fmt::Debug for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Tableau({self})")
    }
}

/// Rows top to bottom separated by `/`, e.g. `245/13`. Entries are
/// comma-separated when `n ≥ 10`.
impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.degree() >= 10 { "," } else { "" };
        let text: Vec<String> = self
            .rows
            .iter()
            .map(|r| r.iter().map(ToString::to_string).collect::<Vec<_>>().join(sep))
            .collect();
        f.write_str(&text.join("/"))
    }
}

impl FromStr for Tableau {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let rows = s
            .split('/')
            .map(|row| {
                let row = row.trim();
                if row.contains(',') {
                    format::parse_list(row)
                } else {
                    row.chars()
                        .map(|c| {
                            c.to_digit(10)
                                .map(|d| d as usize)
                                .ok_or_else(|| Error::Parse(format!("bad tableau entry {c:?}")))
                        })
                        .collect()
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_rows(rows)
    }
}

impl Serialize for Tableau {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.rows.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Tableau {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        Self::from_rows(Vec::deserialize(deserializer)?).map_err(serde::de::Error::custom)
    }
}
