//! Finite groups stored as validated multiplication tables.
//!
//! Elements are dense ids `0..n` with the identity at 0. The table text
//! format is: a first line holding `n`, then `n` lines of `n`
//! whitespace-separated ids, row `a` column `b` holding `a*b`.

use std::fmt;
use std::fmt::Write as _;
use std::path::Path;
use std::sync::{Arc, OnceLock};

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use sha2::{Digest, Sha256};

use crate::classify::GroupClass;
use crate::error::{Error, Result, TableError};
use crate::mask::SubsetMask;
use crate::subgroup::Subgroup;

/// Index of a group element; 0 is the identity.
pub type ElementId = usize;

pub const IDENTITY: ElementId = 0;

/// Tables up to this order get an exhaustive associativity check.
pub const FULL_ASSOCIATIVITY_BOUND: usize = 256;

const ASSOCIATIVITY_SAMPLES: usize = 200_000;

/// The abelian subgroup `A` and involution `b` of a generalized dihedral
/// group `A ⋊ <b>`, where `b` inverts every element of `A`.
#[derive(Clone, Debug)]
pub struct DihedralStructure {
    pub abelian: Subgroup,
    pub involution: ElementId,
}

#[derive(Clone)]
pub struct Group {
    n: usize,
    mul: Vec<u32>,
    inv: Vec<u32>,
    ord: Vec<u32>,
    dihedral: Option<DihedralStructure>,
    hash: OnceLock<String>,
    pub(crate) class: OnceLock<GroupClass>,
    pub(crate) lattice: OnceLock<Arc<Vec<Subgroup>>>,
}

impl Group {
    /// Validates a row-major table of order `n`.
    pub fn from_table(n: usize, table: Vec<usize>) -> Result<Group, TableError> {
        Self::from_table_with_bound(n, table, FULL_ASSOCIATIVITY_BOUND)
    }

    /// Like [`Group::from_table`], checking associativity exhaustively only
    /// when `n <= assoc_bound` and by random sampling otherwise.
    pub fn from_table_with_bound(
        n: usize,
        table: Vec<usize>,
        assoc_bound: usize,
    ) -> Result<Group, TableError> {
        if n == 0 {
            return Err(TableError::Empty);
        }
        if table.len() != n * n {
            return Err(TableError::Malformed {
                line: 0,
                message: format!("expected {} entries, found {}", n * n, table.len()),
            });
        }
        for (i, &v) in table.iter().enumerate() {
            if v >= n {
                return Err(TableError::OutOfRange {
                    row: i / n,
                    col: i % n,
                    value: v,
                    order: n,
                });
            }
        }
        for a in 0..n {
            let (left, right) = (table[a], table[a * n]);
            if left != a || right != a {
                return Err(TableError::IdentityLaw { a, left, right });
            }
        }
        let mut seen = vec![usize::MAX; n];
        for a in 0..n {
            for b in 0..n {
                let v = table[a * n + b];
                if seen[v] == a {
                    return Err(TableError::RowNotPermutation(a));
                }
                seen[v] = a;
            }
        }
        seen.fill(usize::MAX);
        for b in 0..n {
            for a in 0..n {
                let v = table[a * n + b];
                if seen[v] == b {
                    return Err(TableError::ColumnNotPermutation(b));
                }
                seen[v] = b;
            }
        }
        let m = |a: usize, b: usize| table[a * n + b];
        let check = |a, b, c| {
            let (left, right) = (m(m(a, b), c), m(a, m(b, c)));
            if left != right {
                Err(TableError::NonAssociative {
                    a,
                    b,
                    c,
                    left,
                    right,
                })
            } else {
                Ok(())
            }
        };
        if n <= assoc_bound {
            for a in 1..n {
                for b in 1..n {
                    for c in 1..n {
                        check(a, b, c)?;
                    }
                }
            }
        } else {
            let mut rng = StdRng::seed_from_u64(n as u64);
            for _ in 0..ASSOCIATIVITY_SAMPLES {
                check(rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n))?;
            }
        }
        Ok(Self::from_trusted(
            n,
            table.into_iter().map(|v| v as u32).collect(),
        ))
    }

    pub fn from_rows(rows: Vec<Vec<usize>>) -> Result<Group, TableError> {
        let n = rows.len();
        for (i, r) in rows.iter().enumerate() {
            if r.len() != n {
                return Err(TableError::Malformed {
                    line: i + 2,
                    message: format!("row has {} entries, expected {n}", r.len()),
                });
            }
        }
        Self::from_table(n, rows.into_iter().flatten().collect())
    }

    /// Builds a group from a table already known to satisfy the axioms.
    pub(crate) fn from_trusted(n: usize, mul: Vec<u32>) -> Group {
        let mut inv = vec![0u32; n];
        for a in 0..n {
            let row = &mul[a * n..(a + 1) * n];
            inv[a] = row.iter().position(|&v| v == 0).expect("latin square") as u32;
        }
        let mut ord = vec![0u32; n];
        for a in 0..n {
            let mut k = 1;
            let mut x = a;
            while x != IDENTITY {
                x = mul[x * n + a] as usize;
                k += 1;
            }
            ord[a] = k;
        }
        Group {
            n,
            mul,
            inv,
            ord,
            dihedral: None,
            hash: OnceLock::new(),
            class: OnceLock::new(),
            lattice: OnceLock::new(),
        }
    }

    pub fn trivial() -> Group {
        Self::from_trusted(1, vec![0])
    }

    /// Parses the multiplication-table text format.
    pub fn parse_table(text: &str) -> Result<Group, TableError> {
        let mut lines = text
            .lines()
            .enumerate()
            .filter(|(_, l)| !l.trim().is_empty());
        let (_, first) = lines.next().ok_or(TableError::Empty)?;
        let n: usize = first.trim().parse().map_err(|_| TableError::Malformed {
            line: 1,
            message: format!("expected the order, found {first:?}"),
        })?;
        let mut rows = Vec::with_capacity(n);
        for (i, line) in lines {
            let row = line
                .split_whitespace()
                .map(|t| t.parse::<usize>())
                .collect::<std::result::Result<Vec<_>, _>>()
                .map_err(|e| TableError::Malformed {
                    line: i + 1,
                    message: e.to_string(),
                })?;
            rows.push(row);
        }
        if rows.len() != n {
            return Err(TableError::Malformed {
                line: 0,
                message: format!("expected {n} rows, found {}", rows.len()),
            });
        }
        Self::from_rows(rows)
    }

    pub fn to_table_text(&self) -> String {
        let mut s = String::with_capacity(self.n * self.n * 3);
        writeln!(s, "{}", self.n).unwrap();
        for a in 0..self.n {
            let row = &self.mul[a * self.n..(a + 1) * self.n];
            for (j, v) in row.iter().enumerate() {
                if j > 0 {
                    s.push(' ');
                }
                write!(s, "{v}").unwrap();
            }
            s.push('\n');
        }
        s
    }

    pub fn import_table(path: &Path) -> Result<Group> {
        let text = std::fs::read_to_string(path).map_err(|source| Error::Io {
            path: path.to_owned(),
            source,
        })?;
        Ok(Self::parse_table(&text)?)
    }

    pub fn export_table(&self, path: &Path) -> Result<()> {
        std::fs::write(path, self.to_table_text()).map_err(|source| Error::Io {
            path: path.to_owned(),
            source,
        })
    }

    /// Short content hash of the table text.
    pub fn hash(&self) -> &str {
        self.hash.get_or_init(|| {
            let digest = Sha256::digest(self.to_table_text().as_bytes());
            digest[..8].iter().map(|b| format!("{b:02x}")).collect()
        })
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn elements(&self) -> std::ops::Range<ElementId> {
        0..self.n
    }

    #[inline]
    pub fn mul(&self, a: ElementId, b: ElementId) -> ElementId {
        self.mul[a * self.n + b] as ElementId
    }

    #[inline]
    pub fn inv(&self, a: ElementId) -> ElementId {
        self.inv[a] as ElementId
    }

    #[inline]
    pub fn element_order(&self, a: ElementId) -> usize {
        self.ord[a] as usize
    }

    /// Checked product.
    pub fn multiply(&self, a: ElementId, b: ElementId) -> Result<ElementId> {
        self.check_element(a)?;
        self.check_element(b)?;
        Ok(self.mul(a, b))
    }

    pub fn check_element(&self, a: ElementId) -> Result<()> {
        if a < self.n {
            Ok(())
        } else {
            Err(Error::ElementOutOfRange {
                id: a,
                order: self.n,
            })
        }
    }

    pub fn pow(&self, a: ElementId, k: usize) -> ElementId {
        let k = k % self.element_order(a);
        let (mut acc, mut base, mut e) = (IDENTITY, a, k);
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// `x⁻¹ a x`.
    #[inline]
    pub fn conj(&self, a: ElementId, x: ElementId) -> ElementId {
        self.mul(self.mul(self.inv(x), a), x)
    }

    /// `[a, b] = a⁻¹ b⁻¹ a b`.
    #[inline]
    pub fn commutator(&self, a: ElementId, b: ElementId) -> ElementId {
        let ab = self.mul(a, b);
        let ba = self.mul(b, a);
        self.mul(self.inv(ba), ab)
    }

    #[inline]
    pub fn is_involution(&self, a: ElementId) -> bool {
        self.ord[a] == 2
    }

    /// True when the order of `a` is a power of two (the identity included).
    #[inline]
    pub fn is_2_element(&self, a: ElementId) -> bool {
        self.ord[a].is_power_of_two()
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.n).all(|a| (a + 1..self.n).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn all_elements(&self) -> SubsetMask {
        SubsetMask::full(self.n)
    }

    pub fn dihedral_structure(&self) -> Option<&DihedralStructure> {
        self.dihedral.as_ref()
    }

    /// Attaches a generalized dihedral decomposition after checking that
    /// `abelian` is an abelian subgroup of index 2 and that `involution`
    /// lies outside it and inverts each of its elements.
    pub fn with_dihedral_structure(
        mut self,
        abelian: Subgroup,
        involution: ElementId,
    ) -> Result<Group> {
        self.check_element(involution)?;
        let a = abelian.mask();
        if a.width() != self.n || 2 * abelian.order() != self.n {
            return Err(Error::Precondition("A must have index 2".into()));
        }
        if a.contains(involution) || self.element_order(involution) != 2 {
            return Err(Error::Precondition("b must be an involution outside A".into()));
        }
        for x in a {
            if self.conj(x, involution) != self.inv(x) {
                return Err(Error::Precondition(format!("b does not invert {x}")));
            }
            if a.iter().any(|y| self.mul(x, y) != self.mul(y, x)) {
                return Err(Error::Precondition("A is not abelian".into()));
            }
        }
        self.dihedral = Some(DihedralStructure {
            abelian,
            involution,
        });
        Ok(self)
    }

    /// The subgroup `k` as a group in its own right. Local ids follow the
    /// ascending order of the global ids, so local 0 is the identity. The
    /// returned vector maps local ids to global ones.
    pub fn restrict(&self, k: &Subgroup) -> (Group, Vec<ElementId>) {
        let embed: Vec<ElementId> = k.mask().to_vec();
        let m = embed.len();
        let mut local = vec![u32::MAX; self.n];
        for (i, &e) in embed.iter().enumerate() {
            local[e] = i as u32;
        }
        let mut mul = Vec::with_capacity(m * m);
        for &a in &embed {
            for &b in &embed {
                mul.push(local[self.mul(a, b)]);
            }
        }
        (Group::from_trusted(m, mul), embed)
    }

    /// Builds a group from a table produced by an internal construction
    /// (quotients, products); validation is skipped.
    pub(crate) fn from_trusted_usize(n: usize, table: Vec<usize>) -> Group {
        Self::from_trusted(n, table.into_iter().map(|v| v as u32).collect())
    }

    /// True when both groups have identical tables.
    pub fn same_table(&self, other: &Group) -> bool {
        self.n == other.n && self.mul == other.mul
    }
}

impl fmt::Debug for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Group")
            .field("order", &self.n)
            .field("hash", &self.hash())
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyclic(n: usize) -> Group {
        Group::from_table(n, (0..n * n).map(|i| (i / n + i % n) % n).collect()).unwrap()
    }

    #[test]
    fn cyclic_basics() {
        let z4 = cyclic(4);
        assert_eq!(z4.multiply(1, 1).unwrap(), 2);
        assert!(z4.multiply(1, 4).is_err());
        for a in 0..4 {
            assert_eq!(z4.mul(0, a), a);
        }
        assert_eq!(z4.element_order(0), 1);
        assert_eq!(cyclic(6).element_order(1), 6);
        assert_eq!(z4.inv(1), 3);
        assert_eq!(z4.pow(1, 7), 3);
    }

    #[test]
    fn text_round_trip() {
        let z4 = cyclic(4);
        let back = Group::parse_table(&z4.to_table_text()).unwrap();
        assert!(back.same_table(&z4));
        assert_eq!(back.hash(), z4.hash());
        assert_ne!(cyclic(5).hash(), z4.hash());
    }

    #[test]
    fn identity_law_violation() {
        // Latin square whose identity sits at 1 rather than 0.
        let t = "2\n1 0\n0 1\n";
        assert!(matches!(
            Group::parse_table(t),
            Err(TableError::IdentityLaw { a: 0, .. })
        ));
    }

    #[test]
    fn non_associative_loop_names_triple() {
        // A loop of order 5 with involutions; no group of order 5 has those.
        let t = "5\n0 1 2 3 4\n1 0 3 4 2\n2 4 0 1 3\n3 2 4 0 1\n4 3 1 2 0\n";
        match Group::parse_table(t) {
            Err(TableError::NonAssociative {
                a,
                b,
                c,
                left,
                right,
            }) => {
                let rows: Vec<Vec<usize>> = t
                    .lines()
                    .skip(1)
                    .map(|l| l.split(' ').map(|x| x.parse().unwrap()).collect())
                    .collect();
                let m = |x: usize, y: usize| rows[x][y];
                assert_eq!(m(m(a, b), c), left);
                assert_eq!(m(a, m(b, c)), right);
                assert_ne!(left, right);
            }
            other => panic!("expected associativity failure, got {other:?}"),
        }
    }

    #[test]
    fn malformed_inputs() {
        assert!(Group::parse_table("").is_err());
        assert!(Group::parse_table("2\n0 1\n").is_err());
        assert!(Group::parse_table("2\n0 1\n1 x\n").is_err());
        assert!(matches!(
            Group::parse_table("2\n0 1\n1 2\n"),
            Err(TableError::OutOfRange { value: 2, .. })
        ));
        assert!(matches!(
            Group::parse_table("3\n0 1 2\n1 1 0\n2 0 1\n"),
            Err(TableError::RowNotPermutation(1))
        ));
    }

    #[test]
    fn sampled_associativity_above_bound() {
        let n = 12;
        let t: Vec<usize> = (0..n * n).map(|i| (i / n + i % n) % n).collect();
        assert!(Group::from_table_with_bound(n, t, 4).is_ok());
    }
}
